mod common;

use common::{any_basis, laurent, p, tpoly};
use proptest::prelude::*;
use skein_core::grammar::{parse_laurent, parse_tpoly};
use skein_core::modpres::relation;
use skein_core::{Basis, LaurentPoly, TPoly};

#[test]
fn examples() {
    let r2 = parse_tpoly("(A^3+A^-3)*(t^2-2) - 2A - 2A^-1").unwrap();
    assert_eq!(r2.basis(), Basis::Monomial);
    assert!(r2.same_value(&relation(2).unwrap().expression));

    let s = parse_tpoly("S_2 + S_0").unwrap();
    assert_eq!(s.basis(), Basis::Chebyshev);
    assert!(s.same_value(&parse_tpoly("t^2").unwrap()));

    let err = parse_tpoly("t^").unwrap_err();
    assert_eq!((err.line, err.column), (1, 3));

    assert_eq!(
        parse_laurent("A^3 + 2A + 2A^-1 + A^-3").unwrap(),
        p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)])
    );
    assert!(parse_laurent("t").is_err());
}

#[test]
fn printing() {
    let d2 = p(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]);
    assert_eq!(d2.to_string(), "A^3 + 2A + 2A^-1 + A^-3");
    assert_eq!(LaurentPoly::zero().to_string(), "0");
    let s = TPoly::from_coeffs(
        Basis::Monomial,
        [(2, LaurentPoly::one()), (0, LaurentPoly::constant(-1))],
    );
    assert_eq!(s.to_string(), "t^2 - 1");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn laurent_round_trip(x in laurent(8, 40, 1000)) {
        prop_assert_eq!(parse_laurent(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn tpoly_round_trip(basis in any_basis(), seed in tpoly(25, Basis::Monomial)) {
        let x = seed.in_basis(basis);
        let back = parse_tpoly(&x.to_string()).unwrap();
        prop_assert!(back.same_value(&x));
        if !x.coeffs().all(|(n, _)| n == 0) {
            prop_assert_eq!(back, x);
        }
    }

    #[test]
    fn garbage_never_panics(s in "[-+*()^ AtS_0-9\n]{0,24}") {
        let _ = parse_tpoly(&s);
    }
}
