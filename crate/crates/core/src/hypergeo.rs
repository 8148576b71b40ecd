//! Terminating basic hypergeometric series with integer parameters.
//!
//! Parameters are exponents: `a` stands for `q^a`. Values are quotients of
//! Laurent polynomials, compared by cross-multiplication.

use std::fmt;

use crate::error::{Error, Result};
use crate::qarith::{binomial, pochhammer, q_binomial, QLaurent, Rational};

/// `num / den` with `den != 0`. Equality is `num1 * den2 == num2 * den1`.
#[derive(Clone)]
pub struct QRatFunc {
    num: QLaurent,
    den: QLaurent,
}

impl QRatFunc {
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &QRatFunc) -> QRatFunc {
        QRatFunc {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn add(&self, other: &QRatFunc) -> QRatFunc {
        if self.den == other.den {
            return QRatFunc {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        QRatFunc {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    /// The exact Laurent polynomial, if the quotient is one.
    pub fn to_laurent(&self) -> Option<QLaurent> {
        self.num.div_exact(&self.den).ok()
    }
}

impl From<QLaurent> for QRatFunc {
    fn from(num: QLaurent) -> Self {
        Self {
            num,
            den: QLaurent::one(),
        }
    }
}

impl PartialEq for QRatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QRatFunc {}

impl fmt::Debug for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn nonvanishing(b: i64, j: usize) -> Result<()> {
    // (q^b; q)_n vanishes exactly when b + i = 0 for some i < n.
    if b <= 0 && ((-b) as usize) < j {
        return Err(Error::VanishingDenominator {
            base: b,
            index: (-b) as usize + 1,
        });
    }
    Ok(())
}

/// `3φ2(q^{-j}, q^{a2}, q^{a3}; q^{b1}, q^{b2}; q, q^z)` for `a[0] = -j`.
///
/// All terms are brought over the common denominator
/// `(q^{b1})_j (q^{b2})_j (q)_j`, so the result is exact without any gcd.
pub fn phi32(a: [i64; 3], b: [i64; 2], z: i64, j: usize) -> Result<QRatFunc> {
    if a[0] != -(j as i64) {
        return Err(Error::Precondition(format!(
            "first numerator parameter must be -{j}, got {}",
            a[0]
        )));
    }
    nonvanishing(b[0], j)?;
    nonvanishing(b[1], j)?;
    let den = &(&pochhammer(b[0], j) * &pochhammer(b[1], j)) * &pochhammer(1, j);
    let mut num = QLaurent::zero();
    for n in 0..=j {
        let top: QLaurent = a.iter().map(|&ai| pochhammer(ai, n)).product();
        if top.is_zero() {
            continue;
        }
        let rest = j - n;
        let n = n as i64;
        let fill =
            &(&pochhammer(b[0] + n, rest) * &pochhammer(b[1] + n, rest)) * &pochhammer(1 + n, rest);
        num += &(&top * &fill).shift(z * n);
    }
    QRatFunc::new(num, den)
}

/// Which form of the transformation holds at a parameter tuple.
///
/// The two forms differ only in one Pochhammer factor of the prefactor:
/// `published` uses `(q^{-y-z-j+1})_j`, `proof_form` uses `(q^{-x-z-j+1})_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma32Outcome {
    pub published: bool,
    pub proof_form: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lemma32Params {
    pub j: usize,
    pub alpha: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// `3φ2(q^{-j}, q^α, q^{α+z}; q^{α-y-j+1}, q^{α-x-j+1}; q, q)`.
pub fn lemma32_lhs(p: Lemma32Params) -> Result<QRatFunc> {
    let j = p.j as i64;
    phi32(
        [-j, p.alpha, p.alpha + p.z],
        [p.alpha - p.y - j + 1, p.alpha - p.x - j + 1],
        1,
        p.j,
    )
}

/// Right side with the swapped Pochhammer factor `(q^{-swap-z-j+1})_j`.
fn lemma32_rhs_with(p: Lemma32Params, swap: i64) -> Result<QRatFunc> {
    let Lemma32Params { j, alpha, x, y, z } = p;
    let ji = j as i64;
    for b in [alpha - y - ji + 1, alpha - x - ji + 1, y] {
        nonvanishing(b, j)?;
    }
    let num = &(&pochhammer(-y - ji + 1, j) * &pochhammer(-x - ji + 1, j))
        * &pochhammer(-swap - z - ji + 1, j);
    let den = &(&pochhammer(alpha - y - ji + 1, j) * &pochhammer(alpha - x - ji + 1, j))
        * &pochhammer(y, j);
    let pre = QRatFunc::new(num.shift((alpha + x + y + z + ji - 1) * ji), den)?;
    let series = phi32(
        [-ji, x + y + z + ji - 1, x - alpha],
        [x, x + z],
        1 + alpha - y,
        j,
    )?;
    Ok(pre.mul(&series))
}

pub fn lemma32_rhs_published(p: Lemma32Params) -> Result<QRatFunc> {
    lemma32_rhs_with(p, p.y)
}

pub fn lemma32_rhs_proof_form(p: Lemma32Params) -> Result<QRatFunc> {
    lemma32_rhs_with(p, p.x)
}

/// Evaluates both forms; `Err` if any denominator vanishes at `p`.
pub fn lemma32_check(p: Lemma32Params) -> Result<Lemma32Outcome> {
    let lhs = lemma32_lhs(p)?;
    let published = lemma32_rhs_published(p)?;
    let proof_form = lemma32_rhs_proof_form(p)?;
    Ok(Lemma32Outcome {
        published: lhs == published,
        proof_form: lhs == proof_form,
    })
}

/// All tuples with `j <= max_j` and `α, x, y, z` in `range`, in lexicographic order.
pub fn lemma32_tuples(max_j: usize, range: std::ops::RangeInclusive<i64>) -> Vec<Lemma32Params> {
    let mut out = Vec::new();
    for j in 0..=max_j {
        for alpha in range.clone() {
            for x in range.clone() {
                for y in range.clone() {
                    for z in range.clone() {
                        out.push(Lemma32Params { j, alpha, x, y, z });
                    }
                }
            }
        }
    }
    out
}

fn sign_rat(e: i64) -> Rational {
    Rational::from_integer(if e.rem_euclid(2) == 0 { 1 } else { -1 }.into())
}

/// `[n brack k]_q` with the extra convention `[-1 brack -1]_q = 1`.
///
/// Only the factor `[p-1 brack k-r-1]` at `p = 0` reaches this case; it is the
/// coefficient of `D_{m,0}` in the expansion, and `D_{0,0} = 1` requires it.
fn qbin_ext(n: i64, k: i64) -> Result<QLaurent> {
    if n == -1 && k == -1 {
        return Ok(QLaurent::one());
    }
    q_binomial(n, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lemma33Params {
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub p: usize,
}

impl Lemma33Params {
    /// `1 <= j <= k <= n` and `k - j <= p <= n - j`.
    pub fn is_admissible(&self) -> bool {
        let Lemma33Params { n, k, j, p } = *self;
        1 <= j && j <= k && k <= n && k - j <= p && p <= n - j
    }

    fn check(&self) -> Result<()> {
        if !self.is_admissible() {
            return Err(Error::Range(format!("inadmissible parameters {self:?}")));
        }
        Ok(())
    }
}

/// `q^{C(k,2)+C(j,2)} Σ_{r=p}^{p+j} (-1)^{n-r} [r-1 brack k-1] q^{C(r+1,2)-nr} [r brack j] q^{(r-p)(n-j-p)} [j brack r-p]`.
pub fn lemma33_lhs(params: Lemma33Params) -> Result<QLaurent> {
    params.check()?;
    let (n, k, j, p) = (
        params.n as i64,
        params.k as i64,
        params.j as i64,
        params.p as i64,
    );
    let mut out = QLaurent::zero();
    for r in p..=p + j {
        let c = &(&q_binomial(r - 1, k - 1)? * &q_binomial(r, j)?) * &q_binomial(j, r - p)?;
        let e = binomial(r + 1, 2) - n * r + (r - p) * (n - j - p);
        out += &c.shift(e).scale(&sign_rat(n - r));
    }
    Ok(out.shift(binomial(k, 2) + binomial(j, 2)))
}

/// `Σ_{r=k-p}^{j} q^{C(r,2)} [k brack r] [k+j-r-1 brack j-r] q^{C(k-r,2)} (-1)^{n-j-p} [p-1 brack k-r-1] q^{C(p+1,2)-(n-j)p}`.
pub fn lemma33_rhs(params: Lemma33Params) -> Result<QLaurent> {
    params.check()?;
    let (n, k, j, p) = (
        params.n as i64,
        params.k as i64,
        params.j as i64,
        params.p as i64,
    );
    let mut out = QLaurent::zero();
    for r in (k - p)..=j {
        let c = &(&q_binomial(k, r)? * &q_binomial(k + j - r - 1, j - r)?)
            * &qbin_ext(p - 1, k - r - 1)?;
        let e = binomial(r, 2) + binomial(k - r, 2) + binomial(p + 1, 2) - (n - j) * p;
        out += &c.shift(e);
    }
    Ok(out.scale(&sign_rat(n - j - p)))
}

/// Both sides of the coefficient identity at `params`.
pub fn lemma33_check(params: Lemma33Params) -> Result<(QLaurent, QLaurent)> {
    Ok((lemma33_lhs(params)?, lemma33_rhs(params)?))
}

/// All admissible tuples with `n <= max_n`, ordered by `(n, k, j, p)`.
pub fn lemma33_tuples(max_n: usize) -> Vec<Lemma33Params> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            for j in 1..=k {
                for p in k - j..=n - j {
                    out.push(Lemma33Params { n, k, j, p });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct term-by-term sum over rational functions, no common denominator.
    fn phi32_naive(a: [i64; 3], b: [i64; 2], z: i64, j: usize) -> QRatFunc {
        let mut acc = QRatFunc::from(QLaurent::zero());
        for n in 0..=j {
            let num: QLaurent = a.iter().map(|&ai| pochhammer(ai, n)).product();
            let den = &(&pochhammer(b[0], n) * &pochhammer(b[1], n)) * &pochhammer(1, n);
            acc = acc.add(&QRatFunc::new(num.shift(z * n as i64), den).unwrap());
        }
        acc
    }

    #[test]
    fn phi32_examples() {
        for j in 0..4 {
            let v = phi32([-(j as i64), 0, 3], [2, 5], 1, j).unwrap();
            assert_eq!(v, QRatFunc::from(QLaurent::one()));
        }
        let v = phi32([0, 2, 3], [1, 1], 1, 0).unwrap();
        assert_eq!(v.to_laurent().unwrap(), QLaurent::one());
        assert!(phi32([-2, 1, 1], [0, 3], 1, 2).is_err());
        assert!(phi32([-2, 1, 1], [-1, 3], 1, 2).is_err());
        assert!(phi32([-1, 1, 1], [-1, 3], 1, 1).is_ok());
        assert!(phi32([-1, 1, 1], [2, 3], 1, 2).is_err());
    }

    #[test]
    fn phi32_matches_naive_sum() {
        for j in 0..=3 {
            for a2 in -2..=3 {
                for b1 in [1, 2, 4] {
                    let a = [-(j as i64), a2, a2 + 1];
                    let b = [b1, 3];
                    assert_eq!(phi32(a, b, 1, j).unwrap(), phi32_naive(a, b, 1, j));
                }
            }
        }
    }

    /// q-Pfaff-Saalschütz: 3φ2(q^{-j}, A, B; C, q^{1-j}AB/C; q, q) = (C/A)_j (C/B)_j / ((C)_j (C/(AB))_j).
    #[test]
    fn saalschutz_oracle() {
        for j in 0..=3usize {
            for a in -2..=3i64 {
                for b in -2..=3i64 {
                    for c in 1..=4i64 {
                        let ji = j as i64;
                        let b2 = 1 - ji + a + b - c;
                        let Ok(v) = phi32([-ji, a, b], [c, b2], 1, j) else {
                            continue;
                        };
                        let den = &pochhammer(c, j) * &pochhammer(c - a - b, j);
                        if den.is_zero() {
                            continue;
                        }
                        let num = &pochhammer(c - a, j) * &pochhammer(c - b, j);
                        assert_eq!(
                            v,
                            QRatFunc::new(num, den).unwrap(),
                            "j={j} a={a} b={b} c={c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn qratfunc_equality_cross_multiplies() {
        let a = QRatFunc::new(
            QLaurent::from_coeffs(&[1, 1]),
            QLaurent::from_coeffs(&[1, -1, 0]),
        )
        .unwrap();
        let b = QRatFunc::new(
            &QLaurent::from_coeffs(&[1, 1]) * &QLaurent::from_coeffs(&[0, 2]),
            &QLaurent::from_coeffs(&[1, -1]) * &QLaurent::from_coeffs(&[0, 2]),
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(QRatFunc::new(QLaurent::one(), QLaurent::zero()).is_err());
    }

    #[test]
    fn lemma32_trivial_at_j_zero() {
        let p = Lemma32Params {
            j: 0,
            alpha: 1,
            x: 2,
            y: 3,
            z: 4,
        };
        let o = lemma32_check(p).unwrap();
        assert!(o.published && o.proof_form);
    }

    #[test]
    fn lemma32_proof_form_small_sweep() {
        for p in lemma32_tuples(2, -1..=2) {
            if let Ok(o) = lemma32_check(p) {
                assert!(o.proof_form, "{p:?}");
            }
        }
    }

    #[test]
    fn lemma33_small_cases() {
        for params in lemma33_tuples(5) {
            let (l, r) = lemma33_check(params).unwrap();
            assert_eq!(l, r, "{params:?}");
        }
        assert!(lemma33_lhs(Lemma33Params {
            n: 2,
            k: 1,
            j: 2,
            p: 0
        })
        .is_err());
    }
}
