//! Exact arithmetic in `Z[A, A^-1]`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("not divisible in Z[A, A^-1]")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("modulus must have leading and trailing coefficients equal to +-1")]
    NonMonicModulus,
    #[error("cannot evaluate at A = 0")]
    ZeroEvaluation,
}

/// A sparse Laurent polynomial in `A` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored; the zero polynomial is
/// the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `A^exp`.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, T>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    /// `A^k + A^-k`.
    pub fn sym_sum(k: i64) -> Self {
        Self::a_pow(k) + Self::a_pow(-k)
    }

    /// `A^k - A^-k`.
    pub fn sym_diff(k: i64) -> Self {
        Self::a_pow(k) - Self::a_pow(-k)
    }

    /// `-A^2 - A^-2`, the value of a trivial loop.
    pub fn loop_value() -> Self {
        -Self::sym_sum(2)
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, or `None` for zero.
    pub fn width(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Coefficient of the highest power of `A`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Coefficient of the lowest power of `A`.
    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Units of `Z[A, A^-1]` are exactly `+-A^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// The substitution `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `unit^exp` for a signed exponent; only defined for units.
    pub fn unit_pow(&self, exp: i64) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms().next()?;
        let sign = if c.is_negative() && exp % 2 != 0 { -1 } else { 1 };
        Some(Self::monomial(sign, e * exp))
    }

    /// Returns `r` with `divisor * r == self`, if such `r` exists in
    /// `Z[A, A^-1]`.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        let (d_lo, d_hi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(LaurentError::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = divisor.leading_coeff().unwrap();
        // The shifted divisor has a nonzero constant term, so it is coprime
        // to A and top-down long division decides divisibility.
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let lo = self.min_exp().unwrap();
        while let Some(top) = rem.max_exp() {
            if top - (d_hi - d_lo) < lo {
                return Err(LaurentError::NotDivisible);
            }
            let c = rem.coeff(top);
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let shift = top - d_hi;
            rem -= &divisor.shift(shift).scale(&q);
            quot.add_term(shift, q);
        }
        Ok(quot)
    }

    /// Division by a modulus whose extreme coefficients are both `+-1`,
    /// leaving a remainder with exponents in
    /// `[window_low, window_low + width(modulus) - 1]`.
    ///
    /// Such a window is a `Z`-basis of `Z[A, A^-1] / (modulus)`, so the pair
    /// returned is unique.
    pub fn monic_division(&self, modulus: &Self, window_low: i64) -> Result<(Self, Self), LaurentError> {
        let (m_lo, m_hi) = match (modulus.min_exp(), modulus.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(LaurentError::DivisionByZero),
        };
        let lead = modulus.leading_coeff().unwrap().clone();
        let trail = modulus.trailing_coeff().unwrap().clone();
        if !lead.abs().is_one() || !trail.abs().is_one() {
            return Err(LaurentError::NonMonicModulus);
        }
        let width = m_hi - m_lo;
        let window_high = window_low + width - 1;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        if width == 0 {
            // unit modulus: everything is divisible
            let q = self.shift(-m_lo).scale(&lead);
            return Ok((q, Self::zero()));
        }
        while let Some(top) = rem.max_exp().filter(|&e| e > window_high) {
            let q = rem.coeff(top) * &lead;
            let shift = top - m_hi;
            rem -= &modulus.shift(shift).scale(&q);
            quot.add_term(shift, q);
        }
        while let Some(bottom) = rem.min_exp().filter(|&e| e < window_low) {
            let q = rem.coeff(bottom) * &trail;
            let shift = bottom - m_lo;
            rem -= &modulus.shift(shift).scale(&q);
            quot.add_term(shift, q);
        }
        Ok((quot, rem))
    }

    /// Exact value at a nonzero rational `A`.
    pub fn evaluate(&self, a: &BigRational) -> Result<BigRational, LaurentError> {
        if a.is_zero() {
            return Err(LaurentError::ZeroEvaluation);
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                num_traits::pow(a.clone(), e as usize)
            } else {
                num_traits::pow(a.recip(), (-e) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Coefficients of `A^-min_exp * self`, ascending, as an ordinary
    /// polynomial, together with `min_exp`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(shift: i64, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(shift + i as i64, c.clone());
        }
        p
    }

    /// Representative of the class of `self` up to units: lowest exponent
    /// zero, positive leading coefficient.
    pub fn unit_normalized(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let p = self.shift(-lo);
        if p.leading_coeff().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }

    /// The unit multiple of `self` whose exponent range is as close to
    /// symmetric about zero as possible (ties shifted towards positive).
    pub fn centered(&self) -> Self {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let s = Integer::div_floor(&(lo + hi), &2);
                self.shift(-s)
            }
            _ => Self::zero(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `A^3 + 2A + 2A^-1 + A^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("A")?,
                _ => write!(f, "A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary total order (used for canonical sorting only).
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[(1, 1), (0, 1)]) + p(&[(0, -1)]), LaurentPoly::a_pow(1));
        let q = p(&[(3, 2), (-1, 5)]);
        assert_eq!(LaurentPoly::zero() + &q, q);
        assert_eq!(
            LaurentPoly::sym_sum(3) + p(&[(1, 2), (-1, 2)]),
            p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)])
        );
    }

    #[test]
    fn mul_examples() {
        assert!((LaurentPoly::a_pow(2) * LaurentPoly::a_pow(-2)).is_one());
        let s1 = LaurentPoly::sym_sum(1);
        assert_eq!(&s1 * &p(&[(2, 1), (0, -1), (-2, 1)]), LaurentPoly::sym_sum(3));
        assert_eq!(
            &s1 * &p(&[(2, 1), (0, 1), (-2, 1)]),
            p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)])
        );
    }

    #[test]
    fn units() {
        assert!(LaurentPoly::monomial(-1, 5).is_unit());
        assert!(!LaurentPoly::constant(2).is_unit());
        assert!(!LaurentPoly::sym_sum(1).is_unit());
        assert!(!LaurentPoly::zero().is_unit());
    }

    #[test]
    fn exact_division() {
        let q = LaurentPoly::sym_sum(3)
            .divide_exact(&LaurentPoly::sym_sum(1))
            .unwrap();
        assert_eq!(q, p(&[(2, 1), (0, -1), (-2, 1)]));
        let r = p(&[(4, 3), (-7, 1)]);
        assert_eq!(r.divide_exact(&LaurentPoly::one()).unwrap(), r);
        assert_eq!(
            p(&[(1, 1), (0, 1)]).divide_exact(&LaurentPoly::constant(2)),
            Err(LaurentError::NotDivisible)
        );
        assert_eq!(
            r.divide_exact(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
        // A^2 + 1 does not divide A^2 - 1
        assert!(LaurentPoly::sym_diff(1)
            .divide_exact(&LaurentPoly::sym_sum(1))
            .is_err());
    }

    #[test]
    fn monic_division_examples() {
        let m = LaurentPoly::sym_sum(3);
        assert_eq!(
            m.monic_division(&m, -3).unwrap(),
            (LaurentPoly::one(), LaurentPoly::zero())
        );
        assert_eq!(
            LaurentPoly::a_pow(7).monic_division(&m, -3).unwrap(),
            (LaurentPoly::a_pow(4), LaurentPoly::monomial(-1, 1))
        );
        assert_eq!(
            LaurentPoly::constant(2).monic_division(&m, -3).unwrap(),
            (LaurentPoly::zero(), LaurentPoly::constant(2))
        );
        assert_eq!(
            LaurentPoly::a_pow(1).monic_division(&p(&[(1, 2), (0, 1)]), 0),
            Err(LaurentError::NonMonicModulus)
        );
        // low exponents are pulled up into the window as well
        let (q, r) = LaurentPoly::a_pow(-9).monic_division(&m, -3).unwrap();
        assert_eq!(&q * &m + &r, LaurentPoly::a_pow(-9));
        assert!(r.min_exp().unwrap() >= -3 && r.max_exp().unwrap() <= 2);
    }

    #[test]
    fn evaluate_examples() {
        let one = BigRational::one();
        assert_eq!(
            LaurentPoly::sym_sum(2).evaluate(&one).unwrap(),
            BigRational::from_integer(2.into())
        );
        let two = BigRational::from_integer(2.into());
        assert_eq!(
            LaurentPoly::sym_sum(3).evaluate(&two).unwrap(),
            BigRational::new(65.into(), 8.into())
        );
        assert!(LaurentPoly::zero().evaluate(&two).unwrap().is_zero());
        assert_eq!(
            LaurentPoly::zero().evaluate(&BigRational::zero()),
            Err(LaurentError::ZeroEvaluation)
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]).to_string(),
            "A^3 + 2A + 2A^-1 + A^-3"
        );
        assert_eq!(p(&[(2, -1), (0, -1), (-2, -1)]).to_string(), "-A^2 - 1 - A^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(0, -7)]).to_string(), "-7");
    }

    #[test]
    fn normalization() {
        let q = p(&[(3, -2), (-1, 4)]);
        assert_eq!(q.unit_normalized(), p(&[(4, 2), (0, -4)]));
        assert_eq!(p(&[(2, 1), (0, 1)]).centered(), LaurentPoly::sym_sum(1));
        assert_eq!(
            LaurentPoly::monomial(-1, 3).unit_pow(-3).unwrap(),
            LaurentPoly::monomial(-1, -9)
        );
    }
}
