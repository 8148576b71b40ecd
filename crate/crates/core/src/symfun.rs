//! Homogeneous symmetric functions in the Schur basis with `QLaurent`
//! coefficients, plus the two-alphabet table used for `S_m × S_n` Frobenius
//! images.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::qarith::{reverse_coeffs, QLaurent};
use crate::tableaux::{kostka_foulkes, ssyt_contents};

/// Monomial coefficients keyed by exponent vectors (weak compositions).
pub type MonomialTable = BTreeMap<Vec<usize>, QLaurent>;

/// `Σ c_λ s_λ` with every `λ ⊢ degree`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    degree: usize,
    terms: BTreeMap<Partition, QLaurent>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1 = s_∅`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lam: Partition) -> Self {
        Self::term(lam, QLaurent::one())
    }

    pub fn term(lam: Partition, coeff: QLaurent) -> Self {
        let mut f = Self::zero(lam.size());
        f.add_term(lam, coeff);
        f
    }

    /// `e_j = s_{(1^j)}`.
    pub fn elementary(j: usize) -> Self {
        Self::schur(Partition::column(j))
    }

    /// `h_j = s_{(j)}`.
    pub fn complete(j: usize) -> Self {
        Self::schur(Partition::row(j))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QLaurent)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lam: &Partition) -> QLaurent {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// Panics if `lam` has the wrong size.
    pub fn add_term(&mut self, lam: Partition, coeff: QLaurent) {
        assert_eq!(
            lam.size(),
            self.degree,
            "partition {lam} in degree {}",
            self.degree
        );
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(lam).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Multiplies every coefficient by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        self.map_coeffs(|x| x.shift(e))
    }

    pub fn map_coeffs(&self, f: impl Fn(&QLaurent) -> QLaurent) -> Self {
        let mut out = Self::zero(self.degree);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), f(c));
        }
        out
    }

    /// Largest q-exponent over all coefficients.
    pub fn q_degree(&self) -> Option<i64> {
        self.terms.values().filter_map(QLaurent::max_exp).max()
    }

    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.values().filter_map(QLaurent::min_exp).min()
    }

    /// All coefficients in `ℤ_{≥0}[q]`.
    pub fn is_schur_positive(&self) -> bool {
        self.terms
            .values()
            .all(QLaurent::is_nonneg_integral_polynomial)
    }

    /// First coefficient outside `ℤ_{≥0}[q]`, if any.
    pub fn check_schur_positive(&self) -> Result<()> {
        match self
            .terms
            .iter()
            .find(|(_, c)| !c.is_nonneg_integral_polynomial())
        {
            None => Ok(()),
            Some((lam, c)) => Err(Error::Negativity {
                partition: lam.to_string(),
                coeff: c.to_string(),
            }),
        }
    }

    fn check_same_degree(&self, other: &SymFunc) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    /// Exact sum; errors on mismatched degrees.
    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_same_degree(other)?;
        Ok(self + other)
    }
}

/// `s_λ ↦ s_{λ'}`.
pub fn omega(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.degree);
    for (lam, c) in &f.terms {
        out.add_term(lam.conjugate(), c.clone());
    }
    out
}

/// Hall inner product, Schur functions orthonormal.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<QLaurent> {
    f.check_same_degree(g)?;
    Ok(f.terms
        .iter()
        .filter_map(|(lam, c)| g.terms.get(lam).map(|d| c * d))
        .sum())
}

/// Multiplication by `e_j` (dual Pieri rule).
pub fn e_multiply(j: usize, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.degree + j);
    for (mu, c) in &f.terms {
        for lam in mu.vertical_strip_additions(j) {
            out.add_term(lam, c.clone());
        }
    }
    out
}

/// Skewing `e_j^⊥`, adjoint to multiplication by `e_j`.
///
/// Returns the zero function of degree 0 when `j` exceeds the degree.
pub fn e_perp(j: usize, f: &SymFunc) -> SymFunc {
    let Some(deg) = f.degree.checked_sub(j) else {
        return SymFunc::zero(0);
    };
    let mut out = SymFunc::zero(deg);
    for (lam, c) in &f.terms {
        for mu in lam.vertical_strip_removals(j) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// `e_{α_1} ⋯ e_{α_p}` in the Schur basis.
pub fn e_product(alpha: &[usize]) -> SymFunc {
    alpha
        .iter()
        .fold(SymFunc::one(), |acc, &a| e_multiply(a, &acc))
}

/// Dual Hall-Littlewood `Q'_μ = Σ_λ K_{λμ}(q) s_λ`.
pub fn qprime(mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(mu.size());
    for lam in enumerate_partitions(mu.size(), None) {
        if lam.dominates(mu) {
            let kf = kostka_foulkes(&lam, mu).expect("sizes agree");
            out.add_term(lam, kf);
        }
    }
    out
}

/// Reverses every coefficient at the common degree `d`.
pub fn rev_q_sym(f: &SymFunc, d: i64) -> Result<SymFunc> {
    let mut out = SymFunc::zero(f.degree);
    for (lam, c) in &f.terms {
        if let Some(min_exp) = c.min_exp().filter(|&e| e < 0) {
            return Err(Error::NegativeExponent {
                min_exp,
                context: Some(lam.to_string()),
            });
        }
        let r = reverse_coeffs(c, d).map_err(|e| match e {
            Error::DegreeOverflow {
                max_exp, degree, ..
            } => Error::DegreeOverflow {
                max_exp,
                degree,
                context: Some(lam.to_string()),
            },
            other => other,
        })?;
        out.add_term(lam.clone(), r);
    }
    Ok(out)
}

/// Monomial expansion of `f(x_1, ..., x_N)`, enumerating SSYT with entries at most `N`.
pub fn expand_in_vars(f: &SymFunc, n_vars: usize) -> MonomialTable {
    let mut out: MonomialTable = BTreeMap::new();
    for (lam, c) in &f.terms {
        for (content, count) in ssyt_contents(lam, n_vars) {
            let slot = out.entry(content).or_default();
            *slot += &c.scale(&crate::qarith::Rational::from_integer(count.into()));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[deg {}]({self})", self.degree)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "s{lam}")?;
            } else {
                write!(f, "({c})*s{lam}")?;
            }
        }
        Ok(())
    }
}

impl<'a> AddAssign<&'a SymFunc> for SymFunc {
    /// Panics on mismatched degrees unless one side is zero.
    fn add_assign(&mut self, rhs: &'a SymFunc) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        assert_eq!(
            self.degree, rhs.degree,
            "adding symmetric functions of different degree"
        );
        for (lam, c) in &rhs.terms {
            self.add_term(lam.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &'a SymFunc) {
        *self += &(-rhs);
    }
}

impl<'a> Add<&'a SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &'a SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl<'a> Sub<&'a SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &'a SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

/// Element of `Λ(y) ⊗ Λ(x)` in the basis `s_ν(y) s_μ(x)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiSymFunc {
    ydegree: usize,
    xdegree: usize,
    terms: BTreeMap<(Partition, Partition), QLaurent>,
}

impl BiSymFunc {
    pub fn zero(ydegree: usize, xdegree: usize) -> Self {
        Self {
            ydegree,
            xdegree,
            terms: BTreeMap::new(),
        }
    }

    pub fn ydegree(&self) -> usize {
        self.ydegree
    }

    pub fn xdegree(&self) -> usize {
        self.xdegree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &QLaurent)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, ynu: &Partition, xmu: &Partition) -> QLaurent {
        self.terms
            .get(&(ynu.clone(), xmu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, ynu: Partition, xmu: Partition, coeff: QLaurent) {
        assert_eq!(ynu.size(), self.ydegree);
        assert_eq!(xmu.size(), self.xdegree);
        if coeff.is_zero() {
            return;
        }
        let key = (ynu, xmu);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Panics on mismatched bidegree.
    pub fn add(&mut self, other: &BiSymFunc) {
        if other.is_zero() {
            return;
        }
        assert_eq!((self.ydegree, self.xdegree), (other.ydegree, other.xdegree));
        for ((y, x), c) in &other.terms {
            self.add_term(y.clone(), x.clone(), c.clone());
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QLaurent) -> QLaurent) -> Self {
        let mut out = Self::zero(self.ydegree, self.xdegree);
        for ((y, x), c) in &self.terms {
            out.add_term(y.clone(), x.clone(), f(c));
        }
        out
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms
            .values()
            .all(QLaurent::is_nonneg_integral_polynomial)
    }
}

/// Outer product `f(y) · g(x)`.
pub fn bisym_product(fy: &SymFunc, fx: &SymFunc) -> BiSymFunc {
    let mut out = BiSymFunc::zero(fy.degree, fx.degree);
    for (nu, c) in &fy.terms {
        for (mu, d) in &fx.terms {
            out.add_term(nu.clone(), mu.clone(), c * d);
        }
    }
    out
}

/// Coefficient of `s_ν(y)`, as a symmetric function in `x`.
pub fn bisym_y_coefficient(big: &BiSymFunc, nu: &Partition) -> Result<SymFunc> {
    if nu.size() != big.ydegree {
        return Err(Error::DegreeMismatch {
            left: nu.size(),
            right: big.ydegree,
        });
    }
    let mut out = SymFunc::zero(big.xdegree);
    for ((y, x), c) in &big.terms {
        if y == nu {
            out.add_term(x.clone(), c.clone());
        }
    }
    Ok(out)
}

impl fmt::Debug for BiSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSymFunc[{}, {}](", self.ydegree, self.xdegree)?;
        for (i, ((y, x), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*s{y}(y)s{x}(x)")?;
        }
        write!(f, ")")
    }
}
