mod common;

use common::p;
use proptest::prelude::*;
use skein_core::ideals::{
    gcd, membership_bounded, principality_verdict, properness_certificate, IdealTwoGen, PrincipalityVerdict,
};
use skein_core::LaurentPoly;

fn c(n: i64) -> LaurentPoly {
    LaurentPoly::sym_sum(n)
}

#[test]
fn gcd_examples() {
    let d2 = p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]);
    let g = gcd(&c(3), &d2);
    assert_eq!(g.gcd, p(&[(2, 1), (0, 1)]));
    assert!(g.verify(&c(3), &d2));
    let q = p(&[(2, 3), (-1, -6)]);
    assert_eq!(gcd(&q, &LaurentPoly::zero()).gcd, q.unit_normalized());
    let g = gcd(&c(4), &p(&[(4, 1), (0, 2), (-4, 1)]));
    assert!(g.gcd.is_one());
}

#[test]
fn properness_examples() {
    let i = IdealTwoGen::new(LaurentPoly::constant(2), p(&[(2, 1), (0, -1), (-2, 1)])).unwrap();
    let cert = properness_certificate(&i).unwrap();
    assert_eq!(cert.prime, 2);
    assert!(cert.verify(&i));
    let whole = IdealTwoGen::new(LaurentPoly::one(), p(&[(5, 3)])).unwrap();
    assert!(properness_certificate(&whole).is_none());
    let i = IdealTwoGen::new(c(4), LaurentPoly::constant(2)).unwrap();
    assert!(properness_certificate(&i).unwrap().verify(&i));
}

#[test]
fn verdict_examples() {
    let pairs = [
        (p(&[(2, 1), (0, -1), (-2, 1)]), p(&[(2, 1), (0, 1), (-2, 1)])),
        (c(4), p(&[(4, 1), (0, 2), (-4, 1)])),
    ];
    for (g1, g2) in pairs {
        let i = IdealTwoGen::new(g1, g2).unwrap();
        let v = principality_verdict(&i);
        assert!(matches!(v, PrincipalityVerdict::NonPrincipal { .. }));
        assert!(v.verify(&i));
    }
    let sym1 = c(1);
    let i = IdealTwoGen::new(sym1.clone(), &sym1 * &p(&[(2, 1), (0, 3)])).unwrap();
    match principality_verdict(&i) {
        v @ PrincipalityVerdict::Principal { .. } => {
            assert!(v.verify(&i));
            if let PrincipalityVerdict::Principal { generator, .. } = v {
                assert_eq!(generator, sym1.unit_normalized());
            }
        }
        v => panic!("{v:?}"),
    }
}

#[test]
fn membership_examples() {
    let (g1, g2) = (p(&[(2, 1), (0, -1), (-2, 1)]), p(&[(2, 1), (0, 1), (-2, 1)]));
    let i = IdealTwoGen::new(g1.clone(), g2).unwrap();
    let m = membership_bounded(&g1, &i, 0).unwrap();
    assert!(m.verify(&g1, &i));
    let two = LaurentPoly::constant(2);
    let m = membership_bounded(&two, &i, 0).unwrap();
    assert!(m.verify(&two, &i));
    let j = IdealTwoGen::new(two, g1).unwrap();
    for bound in [0, 4, 16] {
        assert!(membership_bounded(&LaurentPoly::one(), &j, bound).is_none());
    }
}

/// Dense ordinary polynomials of degree <= 2 with coefficients in -3..=3.
fn small_divisors() -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c0 in 1i64..=3 {
                let q = p(&[(2, a), (1, b), (0, c0)]);
                if !q.is_zero() && !q.is_unit() {
                    out.push(q);
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_and_is_greatest(
        a in common::laurent(4, 3, 6),
        b in common::laurent(4, 3, 6),
        f in common::laurent(2, 1, 3),
    ) {
        let (x, y) = (&a * &f, &b * &f);
        prop_assume!(!x.is_zero() || !y.is_zero());
        let g = gcd(&x, &y);
        prop_assert!(g.verify(&x, &y));
        prop_assert!(x.divide_exact(&g.gcd).is_ok() && y.divide_exact(&g.gcd).is_ok());
        for q in small_divisors() {
            if x.divide_exact(&q).is_ok() && y.divide_exact(&q).is_ok() {
                prop_assert!(g.gcd.divide_exact(&q).is_ok(), "{} misses {}", g.gcd, q);
            }
        }
    }

    #[test]
    fn membership_hits_verify(
        a in common::laurent(3, 3, 5),
        b in common::laurent(3, 3, 5),
        u in common::laurent(2, 2, 4),
        v in common::laurent(2, 2, 4),
    ) {
        let Some(i) = IdealTwoGen::new(a.clone(), b.clone()) else { return Ok(()); };
        let target = &(&u * &a) + &(&v * &b);
        let m = membership_bounded(&target, &i, i.default_degree_bound());
        prop_assert!(m.is_some());
        prop_assert!(m.unwrap().verify(&target, &i));
    }
}
