//! Exact scalars: Laurent polynomials in `q` over the rationals, together with
//! the usual q-analogs (q-integers, q-binomials, q-multinomials, Pochhammer
//! symbols) and coefficient reversal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A finite Laurent polynomial `Σ c_e q^e` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn monomial(coeff: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        Self { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(Rational::from_integer(BigInt::from(c)), 0)
    }

    /// Builds a polynomial from integer coefficients of `q^0, q^1, ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .map(|(e, &c)| Self::monomial(Rational::from_integer(BigInt::from(c)), e as i64))
            .sum()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k + e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// No negative powers of `q`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Polynomial with nonnegative integer coefficients.
    pub fn is_nonneg_integral_polynomial(&self) -> bool {
        self.is_polynomial()
            && self
                .terms
                .values()
                .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn is_palindromic(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => self
                .terms
                .iter()
                .all(|(&e, c)| self.terms.get(&(lo + hi - e)) == Some(c)),
            _ => true,
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    /// Value at a rational point `q = x` (`x` nonzero when negative exponents occur).
    pub fn eval(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&e, c)| {
                let p = if e >= 0 {
                    num_traits::pow(x.clone(), e as usize)
                } else {
                    num_traits::pow(x.recip(), (-e) as usize)
                };
                c * p
            })
            .sum()
    }

    /// Substitutes `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `q^d · f(1/q)`; fails when `f` has a term above `q^d`.
    pub fn reverse(&self, d: i64) -> Result<Self> {
        reverse_coeffs(self, d)
    }

    /// Exact division. Errors if the divisor is zero or a remainder is left.
    pub fn div_exact(&self, divisor: &QLaurent) -> Result<QLaurent> {
        let (lead_e, lead_c) = match divisor.terms.iter().next_back() {
            Some((&e, c)) => (e, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let low_d = divisor.min_exp().unwrap_or(lead_e);
        let mut rem = self.clone();
        let mut quot = QLaurent::zero();
        // Long division from the top; the quotient cannot go below min(self) - min(divisor).
        let floor = self.min_exp().map(|e| e - low_d);
        while let Some(top) = rem.max_exp() {
            let shift = top - lead_e;
            if floor.is_none_or(|f| shift < f) {
                break;
            }
            let c = rem.coeff(top) / &lead_c;
            let step = QLaurent::monomial(c, shift);
            rem -= &(&step * divisor);
            quot += &step;
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
                remainder: rem.to_string(),
            });
        }
        Ok(quot)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: QLaurent) -> QLaurent {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &'a QLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for QLaurent {
    fn add_assign(&mut self, rhs: QLaurent) {
        *self += &rhs;
    }
}

impl<'a> Sub<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(mut self, rhs: QLaurent) -> QLaurent {
        self -= &rhs;
        self
    }
}

impl<'a> SubAssign<&'a QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &'a QLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -self.clone()
    }
}

impl<'a> Mul<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl<'a> MulAssign<&'a QLaurent> for QLaurent {
    fn mul_assign(&mut self, rhs: &'a QLaurent) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for QLaurent {
    fn product<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::one(), |acc, x| acc * x)
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> QLaurent {
    QLaurent::from_terms((0..n as i64).map(|e| (e, Rational::one())))
}

/// `[n]!_q`.
pub fn q_factorial(n: usize) -> QLaurent {
    (1..=n).map(q_int).product()
}

/// Gaussian binomial `[n brack k]_q`; zero when `k < 0`, `k > n` or `n < 0`.
///
/// Computed by exact division of q-factorials so that any remainder surfaces
/// as an arithmetic error.
pub fn q_binomial(n: i64, k: i64) -> Result<QLaurent> {
    if n < 0 || k < 0 || k > n {
        return Ok(QLaurent::zero());
    }
    let (n, k) = (n as usize, k as usize);
    let den = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n).div_exact(&den)
}

/// `[Σ parts]!_q / Π [part]!_q`.
pub fn q_multinomial(parts: &[usize]) -> Result<QLaurent> {
    let total: usize = parts.iter().sum();
    let den: QLaurent = parts.iter().map(|&p| q_factorial(p)).product();
    q_factorial(total).div_exact(&den)
}

/// `(q^a; q)_k = Π_{i<k} (1 - q^{a+i})`.
pub fn pochhammer(a: i64, k: usize) -> QLaurent {
    (0..k as i64)
        .map(|i| QLaurent::one() - QLaurent::q_pow(a + i))
        .product()
}

/// `q^d · f(1/q)`.
pub fn reverse_coeffs(f: &QLaurent, d: i64) -> Result<QLaurent> {
    if let Some(max_exp) = f.max_exp() {
        if max_exp > d {
            return Err(Error::DegreeOverflow {
                max_exp,
                degree: d,
                context: None,
            });
        }
    }
    Ok(f.invert_q().shift(d))
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}
