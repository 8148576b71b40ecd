//! Delta operators at `t = 0`.
//!
//! `Δ'_{s_ν} e_n |_{t=0}` is evaluated from its expansion in the q-reversed
//! `Q'` basis:
//!
//! ```text
//! Σ_{μ ⊢ n} (-1)^{n-ℓ(μ)} s_ν(q, ..., q^{ℓ(μ)-1}) q^{-n-2b(μ)+Σ C(m_i+1,2)} [ℓ(μ) brack m(μ)]_q rev_q Q'_μ
//! ```
//!
//! Individual summands carry negative powers of `q`; only the assembled
//! result is required to be a Schur-positive polynomial.

use crate::error::{Error, Result};
use crate::osp::{c_poly, d_poly};
use crate::partitions::{enumerate_partitions, Partition};
use crate::qarith::{binomial, q_binomial, q_multinomial, QLaurent};
use crate::symfun::{
    bisym_product, bisym_y_coefficient, omega, qprime, rev_q_sym, BiSymFunc, SymFunc,
};
use crate::tableaux::{kostka_foulkes, principal_spec_schur};

/// `Δ'_{s_ν} e_n |_{t=0}` together with its expected q-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaResult {
    pub value: SymFunc,
    pub nu: Partition,
    pub n: usize,
    /// `(n-1)|ν| - b(ν)`.
    pub claimed_qdegree: i64,
}

impl DeltaResult {
    pub fn compute(nu: &Partition, n: usize) -> Result<Self> {
        Ok(Self {
            value: delta_prime_schur_t0(nu, n)?,
            nu: nu.clone(),
            n,
            claimed_qdegree: claimed_qdegree(nu, n),
        })
    }

    /// The value is zero or has q-degree exactly `claimed_qdegree`.
    pub fn degree_claim_holds(&self) -> bool {
        self.value
            .q_degree()
            .is_none_or(|d| d == self.claimed_qdegree)
    }
}

pub fn claimed_qdegree(nu: &Partition, n: usize) -> i64 {
    (n as i64 - 1) * nu.size() as i64 - nu.b()
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_i C(m_i(μ) + 1, 2)`.
fn multiplicity_triangle(mu: &Partition) -> i64 {
    mu.multiplicities()
        .iter()
        .map(|&m| binomial(m as i64 + 1, 2))
        .sum()
}

fn rev_qprime(mu: &Partition) -> Result<SymFunc> {
    rev_q_sym(&qprime(mu), mu.b())
}

/// Common `μ`-weight `(-1)^{n-ℓ} q^{-n-2b+Σ C(m_i+1,2)} [ℓ brack m]_q`.
fn mu_weight(mu: &Partition, n: usize) -> Result<QLaurent> {
    let e = -(n as i64) - 2 * mu.b() + multiplicity_triangle(mu);
    let s = sign(n as i64 - mu.len() as i64);
    Ok(q_multinomial(&mu.multiplicities())?
        .shift(e)
        .scale(&crate::qarith::Rational::from_integer(s.into())))
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Range("n must be positive".into()));
    }
    Ok(())
}

/// `Δ'_{s_ν} e_n |_{t=0}` in the Schur basis.
pub fn delta_prime_schur_t0(nu: &Partition, n: usize) -> Result<SymFunc> {
    require_n(n)?;
    let mut out = SymFunc::zero(n);
    for mu in enumerate_partitions(n, None) {
        let eval = principal_spec_schur(nu, mu.len() - 1, 1);
        if eval.is_zero() {
            continue;
        }
        let coeff = &eval * &mu_weight(&mu, n)?;
        out += &rev_qprime(&mu)?.scale(&coeff);
    }
    out.check_schur_positive()?;
    Ok(out)
}

/// `Δ'_{e_{k-1}} e_n |_{t=0}`, using `e_{k-1}[B_λ - 1] = q^{C(k,2)} [ℓ(λ)-1 brack k-1]_q`.
pub fn delta_prime_elem_t0(k: usize, n: usize) -> Result<SymFunc> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let mut out = SymFunc::zero(n);
    for lam in enumerate_partitions(n, None) {
        let eval = q_binomial(lam.len() as i64 - 1, k as i64 - 1)?.shift(binomial(k as i64, 2));
        if eval.is_zero() {
            continue;
        }
        let coeff = &eval * &mu_weight(&lam, n)?;
        out += &rev_qprime(&lam)?.scale(&coeff);
    }
    out.check_schur_positive()?;
    Ok(out)
}

/// `q^{C(k,2)} Σ_{r=k}^{n} (-1)^{n-r} q^{C(r+1,2) - nr} [r-1 brack k-1]_q D_{n,r}`.
pub fn lemma41_rhs(k: usize, n: usize) -> Result<SymFunc> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    let (k, n) = (k as i64, n as i64);
    let mut out = SymFunc::zero(n as usize);
    for r in k..=n {
        let coeff = q_binomial(r - 1, k - 1)?
            .shift(binomial(k, 2) + binomial(r + 1, 2) - n * r)
            .scale(&crate::qarith::Rational::from_integer(sign(n - r).into()));
        out += &d_poly(n as usize, r as usize)?.scale(&coeff);
    }
    Ok(out)
}

/// `P_{ν,k-1}(q) = q^{|ν| - C(k,2)} Σ_{ρ ⊢ |ν|, ℓ(ρ) = k-1} q^{b(ρ)} [k-1 brack m(ρ)]_q K_{ν,ρ}(q)`.
pub fn p_coeff(nu: &Partition, k: usize) -> Result<QLaurent> {
    if k < nu.len() + 1 || k > nu.size() + 1 {
        return Err(Error::Range(format!(
            "k={k} outside [{}, {}] for {nu}",
            nu.len() + 1,
            nu.size() + 1
        )));
    }
    let mut sum = QLaurent::zero();
    for rho in enumerate_partitions(nu.size(), Some(k - 1)) {
        let term = &q_multinomial(&rho.multiplicities())? * &kostka_foulkes(nu, &rho)?;
        sum += &term.shift(rho.b());
    }
    Ok(sum.shift(nu.size() as i64 - binomial(k as i64, 2)))
}

/// `Σ_{μ ⊢ n, ℓ(μ) = k} q^{b̄(μ)} [k brack m(μ)]_q Q'_μ`.
fn qprime_layer(n: usize, k: usize) -> Result<SymFunc> {
    let mut out = SymFunc::zero(n);
    for mu in enumerate_partitions(n, Some(k)) {
        let c = q_multinomial(&mu.multiplicities())?.shift(mu.bbar());
        out += &qprime(&mu).scale(&c);
    }
    Ok(out)
}

/// Dual Hall-Littlewood expansion of `ω Δ'_{s_ν} e_n |_{t=0}`.
pub fn theorem12_rhs(nu: &Partition, n: usize) -> Result<SymFunc> {
    require_n(n)?;
    let mut out = SymFunc::zero(n);
    for k in nu.len() + 1..=(nu.size() + 1).min(n) {
        let p = p_coeff(nu, k)?;
        out += &qprime_layer(n, k)?.scale(&p);
    }
    Ok(out)
}

/// `Δ_{s_ν} e_n |_{t=0} = Σ_ρ Δ'_{s_ρ} e_n |_{t=0}` over `ν/ρ` horizontal strips.
pub fn delta_unprimed_schur_t0(nu: &Partition, n: usize) -> Result<SymFunc> {
    require_n(n)?;
    let mut out = SymFunc::zero(n);
    for rho in nu.horizontal_strip_removals() {
        out += &delta_prime_schur_t0(&rho, n)?;
    }
    Ok(out)
}

/// `Σ_{k, ρ: ℓ(ρ) = k-1, |ρ| = |ν|} q^{b(ρ)} [j brack k-1]_q [k-1 brack m(ρ)]_q K_{ν,ρ}(q)`,
/// which equals `s_ν(1, q, ..., q^{j-1})`.
pub fn simple2_rhs(nu: &Partition, j: usize) -> Result<QLaurent> {
    let mut out = QLaurent::zero();
    for rho in enumerate_partitions(nu.size(), None) {
        let len = rho.len() as i64;
        let term = &(&q_binomial(j as i64, len)? * &q_multinomial(&rho.multiplicities())?)
            * &kostka_foulkes(nu, &rho)?;
        out += &term.shift(rho.b());
    }
    Ok(out)
}

/// `Σ_{ν ⊢ m} s_ν(y) · ω_x Δ'_{s_ν} e_n(x) |_{t=0}`.
pub fn prop51_lhs(m: usize, n: usize) -> Result<BiSymFunc> {
    require_n(n)?;
    let mut out = BiSymFunc::zero(m, n);
    for nu in enumerate_partitions(m, None) {
        let d = delta_prime_schur_t0(&nu, n)?;
        out.add(&bisym_product(&SymFunc::schur(nu), &omega(&d)));
    }
    Ok(out)
}

/// `Σ_{k ≥ 1} q^{m-k+1} ω_y C_{m,k-1}(y) · ω_x C_{n,k}(x)`.
pub fn prop51_rhs(m: usize, n: usize) -> Result<BiSymFunc> {
    require_n(n)?;
    let mut out = BiSymFunc::zero(m, n);
    for k in 1..=n.min(m + 1) {
        let left = omega(&c_poly(m, k - 1)).shift(m as i64 - k as i64 + 1);
        out.add(&bisym_product(&left, &omega(&c_poly(n, k))));
    }
    Ok(out)
}

/// `(rev_q ∘ ω) Δ'_{s_ν} e_n |_{t=0}` reversed at `(n-1)|ν| - b(ν)`.
pub fn rev_omega_delta(nu: &Partition, n: usize) -> Result<SymFunc> {
    let d = delta_prime_schur_t0(nu, n)?;
    rev_q_sym(&omega(&d), claimed_qdegree(nu, n))
}

/// `Σ_{ν ⊢ m} q^{b(ν)} s_ν(y) · (rev_q ∘ ω_x) Δ'_{s_ν} e_n(x) |_{t=0}`.
pub fn prop52_lhs(m: usize, n: usize) -> Result<BiSymFunc> {
    require_n(n)?;
    let mut out = BiSymFunc::zero(m, n);
    for nu in enumerate_partitions(m, None) {
        let r = rev_omega_delta(&nu, n)?.shift(nu.b());
        out.add(&bisym_product(&SymFunc::schur(nu), &r));
    }
    Ok(out)
}

/// `Σ_k q^{mn - km - kn + n + k(k-1)} D_{m,k-1}(y) · D_{n,k}(x)`.
pub fn prop52_rhs(m: usize, n: usize) -> Result<BiSymFunc> {
    require_n(n)?;
    let (mi, ni) = (m as i64, n as i64);
    let mut out = BiSymFunc::zero(m, n);
    for k in 1..=n.min(m + 1) {
        let ki = k as i64;
        let shift = mi * ni - ki * mi - ki * ni + ni + ki * (ki - 1);
        let left = d_poly(m, k - 1)?.shift(shift);
        out.add(&bisym_product(&left, &d_poly(n, k)?));
    }
    Ok(out)
}

/// Both sides of the q-reversed two-alphabet identity.
pub fn prop52_check(m: usize, n: usize) -> Result<(BiSymFunc, BiSymFunc)> {
    Ok((prop52_lhs(m, n)?, prop52_rhs(m, n)?))
}

/// Reverses every coefficient of a two-alphabet function at degree `d`.
pub fn rev_q_bisym(f: &BiSymFunc, d: i64) -> Result<BiSymFunc> {
    let mut out = BiSymFunc::zero(f.ydegree(), f.xdegree());
    for ((y, x), c) in f.terms() {
        out.add_term(y.clone(), x.clone(), c.reverse(d)?);
    }
    Ok(out)
}

/// Graded Frobenius image of `V_{n,m} = ⊕_k (R_{m,k-1} ⊗ R_{n,k}){-mn + km + kn - n - k(k-1)}`.
pub fn grfrob_v(n: usize, m: usize) -> Result<BiSymFunc> {
    prop52_rhs(m, n)
}

/// Graded Frobenius image of `R_{n,ν} = Hom_{S_m}(S^ν, V_{n,m}){b(ν)}`: the
/// `s_ν(y)` coefficient of `grFrob(V_{n,m})`, shifted down by `b(ν)`.
pub fn grfrob_r_nnu(nu: &Partition, n: usize) -> Result<SymFunc> {
    let v = grfrob_v(n, nu.size())?;
    Ok(bisym_y_coefficient(&v, nu)?.shift(-nu.b()))
}

/// Graded Frobenius image of `R_{n,k}`, i.e. `D_{n,k}`.
pub fn grfrob_r_nk(n: usize, k: usize) -> Result<SymFunc> {
    d_poly(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::osp::c_via_qprime;
    use crate::qarith::q_int;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn delta_prime_schur_examples() {
        assert_eq!(delta_prime_schur_t0(&p(&[]), 2).unwrap(), s(&[1, 1]));
        assert_eq!(
            delta_prime_schur_t0(&p(&[1]), 2).unwrap(),
            &s(&[2]) + &s(&[1, 1]).shift(1)
        );
        assert_eq!(
            delta_prime_schur_t0(&p(&[2]), 2).unwrap(),
            &s(&[2]).shift(1) + &s(&[1, 1]).shift(2)
        );
        assert!(delta_prime_schur_t0(&p(&[1, 1]), 2).unwrap().is_zero());
        assert!(delta_prime_schur_t0(&p(&[1]), 0).is_err());
    }

    #[test]
    fn identity_operator_on_e_n() {
        for n in 1..=5 {
            assert_eq!(
                delta_prime_schur_t0(&p(&[]), n).unwrap(),
                SymFunc::elementary(n)
            );
            assert_eq!(delta_prime_elem_t0(1, n).unwrap(), SymFunc::elementary(n));
        }
    }

    #[test]
    fn column_shape_matches_elementary_form() {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(
                    delta_prime_schur_t0(&Partition::column(k - 1), n).unwrap(),
                    delta_prime_elem_t0(k, n).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn delta_prime_elem_examples() {
        assert_eq!(delta_prime_elem_t0(1, 2).unwrap(), s(&[1, 1]));
        assert_eq!(
            delta_prime_elem_t0(2, 2).unwrap(),
            &s(&[2]) + &s(&[1, 1]).shift(1)
        );
        assert_eq!(delta_prime_elem_t0(1, 1).unwrap(), s(&[1]));
        assert!(delta_prime_elem_t0(3, 2).is_err());
    }

    #[test]
    fn lemma41_examples() {
        assert_eq!(lemma41_rhs(2, 2).unwrap(), &s(&[2]) + &s(&[1, 1]).shift(1));
        assert_eq!(lemma41_rhs(1, 1).unwrap(), s(&[1]));
        assert_eq!(lemma41_rhs(1, 2).unwrap(), s(&[1, 1]));
    }

    #[test]
    fn p_coeff_examples() {
        assert!(p_coeff(&p(&[1]), 2).unwrap().is_one());
        assert_eq!(p_coeff(&p(&[2]), 2).unwrap(), QLaurent::q_pow(1));
        assert_eq!(p_coeff(&p(&[2]), 3).unwrap(), QLaurent::q_pow(1));
        assert!(p_coeff(&p(&[]), 1).unwrap().is_one());
        assert!(p_coeff(&p(&[2]), 1).is_err());
        assert!(p_coeff(&p(&[2]), 4).is_err());
    }

    #[test]
    fn theorem12_examples() {
        for n in 1..=4 {
            assert_eq!(theorem12_rhs(&p(&[]), n).unwrap(), SymFunc::complete(n));
        }
        assert_eq!(
            theorem12_rhs(&p(&[2]), 2).unwrap(),
            &s(&[1, 1]).shift(1) + &s(&[2]).shift(2)
        );
        assert_eq!(
            theorem12_rhs(&p(&[1]), 2).unwrap(),
            omega(&c_via_qprime(2, 2).unwrap())
        );
    }

    #[test]
    fn unprimed_examples() {
        assert_eq!(
            delta_unprimed_schur_t0(&p(&[]), 3).unwrap(),
            delta_prime_schur_t0(&p(&[]), 3).unwrap()
        );
        assert_eq!(
            delta_unprimed_schur_t0(&p(&[1]), 2).unwrap(),
            &(&s(&[2]) + &s(&[1, 1]).shift(1)) + &s(&[1, 1])
        );
        assert_eq!(
            delta_unprimed_schur_t0(&p(&[1, 1]), 2).unwrap(),
            &delta_prime_schur_t0(&p(&[1, 1]), 2).unwrap()
                + &delta_prime_schur_t0(&p(&[1]), 2).unwrap()
        );
    }

    #[test]
    fn simple2_examples() {
        for j in 0..5 {
            assert_eq!(simple2_rhs(&p(&[1]), j).unwrap(), q_int(j));
        }
        assert_eq!(simple2_rhs(&p(&[1, 1]), 2).unwrap(), QLaurent::q_pow(1));
        assert!(simple2_rhs(&p(&[2]), 1).unwrap().is_one());
        assert!(simple2_rhs(&p(&[]), 3).unwrap().is_one());
    }

    #[test]
    fn two_alphabet_small_cases() {
        let lhs = prop51_lhs(0, 2).unwrap();
        assert_eq!(lhs, bisym_product(&SymFunc::one(), &s(&[2])));
        assert_eq!(prop51_rhs(0, 2).unwrap(), lhs);
        let lhs = prop51_lhs(1, 2).unwrap();
        assert_eq!(
            bisym_y_coefficient(&lhs, &p(&[1])).unwrap(),
            &s(&[1, 1]) + &s(&[2]).shift(1)
        );
        assert_eq!(prop51_rhs(1, 2).unwrap(), lhs);
        let (l, r) = prop52_check(0, 1).unwrap();
        assert_eq!(l, bisym_product(&SymFunc::one(), &s(&[1])));
        assert_eq!(r, l);
        let (l, r) = prop52_check(1, 2).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn prop52_is_reversal_of_prop51() {
        for m in 0..=2 {
            for n in 1..=3 {
                let total = (m as i64) * (n as i64 - 1);
                let reversed = rev_q_bisym(&prop51_lhs(m, n).unwrap(), total).unwrap();
                assert_eq!(reversed, prop52_lhs(m, n).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn frobenius_images() {
        assert_eq!(
            grfrob_v(1, 0).unwrap(),
            bisym_product(&SymFunc::one(), &s(&[1]))
        );
        assert_eq!(grfrob_r_nnu(&p(&[]), 2).unwrap(), s(&[2]));
        assert_eq!(
            grfrob_r_nnu(&p(&[1]), 2).unwrap(),
            &s(&[2]) + &s(&[1, 1]).shift(1)
        );
        for n in 1..=4 {
            for m in 0..=2 {
                assert!(grfrob_v(n, m).unwrap().is_schur_positive());
            }
        }
    }

    #[test]
    fn degree_claim_small() {
        for m in 0..=3 {
            for nu in enumerate_partitions(m, None) {
                for n in 1..=4 {
                    let r = DeltaResult::compute(&nu, n).unwrap();
                    assert!(
                        r.degree_claim_holds(),
                        "{nu} n={n}: {:?}",
                        r.value.q_degree()
                    );
                }
            }
        }
    }
}
