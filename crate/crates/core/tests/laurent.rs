mod common;

use common::{p, small_laurent};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use skein_core::laurent::LaurentError;
use skein_core::LaurentPoly;

#[test]
fn worked_examples() {
    assert_eq!(&p(&[(1, 1), (0, 1)]) + &p(&[(0, -1)]), p(&[(1, 1)]));
    assert_eq!(
        &p(&[(3, 1), (-3, 1)]) + &p(&[(1, 2), (-1, 2)]),
        p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)])
    );
    assert!((&LaurentPoly::a_pow(2) * &LaurentPoly::a_pow(-2)).is_one());
    let sym1 = p(&[(1, 1), (-1, 1)]);
    assert_eq!(&sym1 * &p(&[(2, 1), (0, -1), (-2, 1)]), p(&[(3, 1), (-3, 1)]));
    assert_eq!(
        &sym1 * &p(&[(2, 1), (0, 1), (-2, 1)]),
        p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)])
    );
    assert!(LaurentPoly::monomial(-1, 5).is_unit());
    assert!(!LaurentPoly::constant(2).is_unit());
    assert!(!sym1.is_unit());
    assert_eq!(
        p(&[(3, 1), (-3, 1)]).divide_exact(&sym1),
        Ok(p(&[(2, 1), (0, -1), (-2, 1)]))
    );
    assert_eq!(
        p(&[(1, 1), (0, 1)]).divide_exact(&LaurentPoly::constant(2)),
        Err(LaurentError::NotDivisible)
    );
}

#[test]
fn monic_division_examples() {
    let c2 = p(&[(3, 1), (-3, 1)]);
    assert_eq!(
        c2.monic_division(&c2, -3),
        Ok((LaurentPoly::one(), LaurentPoly::zero()))
    );
    assert_eq!(
        LaurentPoly::a_pow(7).monic_division(&c2, -3),
        Ok((LaurentPoly::a_pow(4), p(&[(1, -1)])))
    );
    assert_eq!(
        LaurentPoly::constant(2).monic_division(&c2, -3),
        Ok((LaurentPoly::zero(), LaurentPoly::constant(2)))
    );
    assert_eq!(
        LaurentPoly::one().monic_division(&p(&[(2, 2), (0, 1)]), 0),
        Err(LaurentError::NonMonicModulus)
    );
}

#[test]
fn evaluation_examples() {
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    assert_eq!(p(&[(2, 1), (-2, 1)]).evaluate(&r(1, 1)), Ok(r(2, 1)));
    assert_eq!(p(&[(3, 1), (-3, 1)]).evaluate(&r(2, 1)), Ok(r(65, 8)));
    assert_eq!(LaurentPoly::zero().evaluate(&r(3, 7)), Ok(r(0, 1)));
    assert_eq!(
        LaurentPoly::one().evaluate(&r(0, 1)),
        Err(LaurentError::ZeroEvaluation)
    );
}

proptest! {
    #[test]
    fn ring_axioms(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn units_divide_back(a in small_laurent(), k in -20i64..20, neg in any::<bool>()) {
        let u = LaurentPoly::monomial(if neg { -1 } else { 1 }, k);
        prop_assert_eq!((&a * &u).divide_exact(&u), Ok(a.clone()));
    }

    #[test]
    fn exact_division_recovers_factor(a in small_laurent(), b in small_laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b), Ok(a));
    }

    #[test]
    fn monic_division_round_trip(a in common::laurent(8, 60, 1000), n in 2u32..=40) {
        let c = LaurentPoly::sym_sum(n as i64 + 1);
        let low = -(n as i64 + 1);
        let (q, r) = a.monic_division(&c, low).unwrap();
        prop_assert_eq!(&(&q * &c) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.min_exp().unwrap() >= low);
            prop_assert!(r.max_exp().unwrap() < low + 2 * (n as i64 + 1));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in small_laurent(), b in small_laurent(), c in small_laurent(),
        num in 1i64..9, den in 1i64..9, neg in any::<bool>(),
    ) {
        let x = BigRational::new(BigInt::from(if neg { -num } else { num }), BigInt::from(den));
        let lhs = (&(&a * &b) + &c).evaluate(&x).unwrap();
        let rhs = a.evaluate(&x).unwrap() * b.evaluate(&x).unwrap() + c.evaluate(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
