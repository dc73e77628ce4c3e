#![allow(dead_code)]

use proptest::prelude::*;
use skein_core::{Basis, LaurentPoly, TPoly};

pub fn laurent(max_terms: usize, exp: i64, coef: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-exp..=exp, -coef..=coef), 0..=max_terms).prop_map(LaurentPoly::from_terms)
}

pub fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent(5, 6, 20)
}

pub fn tpoly(max_degree: u32, basis: Basis) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((0..=max_degree, laurent(3, 8, 9)), 0..8)
        .prop_map(move |v| TPoly::from_coeffs(basis, v))
}

pub fn any_basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::Monomial), Just(Basis::Chebyshev)]
}

pub fn p(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}
