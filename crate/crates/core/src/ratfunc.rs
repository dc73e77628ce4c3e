//! Elements of `Q(A)` as reduced quotients of Laurent polynomials.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use crate::ideals::gcd;
use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// `None` for a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = (g.cofactor1, g.cofactor2);
        let shift = -den.min_exp().unwrap();
        num = num.shift(shift);
        den = den.shift(shift);
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Some(Self { num, den })
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).unwrap()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den).unwrap()
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

/// Panics on division by zero.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip().expect("division by zero in Q(A)")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_common_factor() {
        let c2 = LaurentPoly::sym_sum(3);
        let d2 = LaurentPoly::from_terms([(3, 1), (1, 2), (-1, 2), (-3, 1)]);
        let r = RationalFunction::new(d2, c2).unwrap();
        // (A^2 + 1 + A^-2) / (A^2 - 1 + A^-2), denominator shifted to A^4 - A^2 + 1
        assert_eq!(
            r.denominator(),
            &LaurentPoly::from_terms([(4, 1), (2, -1), (0, 1)])
        );
        assert_eq!(r.numerator(), &LaurentPoly::from_terms([(4, 1), (2, 1), (0, 1)]));
    }

    #[test]
    fn field_ops() {
        let a = RationalFunction::new(LaurentPoly::one(), LaurentPoly::sym_sum(1)).unwrap();
        let b = RationalFunction::from_poly(LaurentPoly::sym_sum(1));
        assert_eq!(&a * &b, RationalFunction::from_poly(LaurentPoly::one()));
        assert!((&a - &a).is_zero());
        assert_eq!(
            &(&a + &a) / &a,
            RationalFunction::from_poly(LaurentPoly::constant(2))
        );
        assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_none());
        // sign goes to the numerator
        let n = RationalFunction::new(LaurentPoly::one(), LaurentPoly::constant(-3)).unwrap();
        assert_eq!(n.numerator(), &LaurentPoly::constant(-1));
    }
}
