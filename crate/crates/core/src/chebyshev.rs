//! Polynomials in `t` over `Z[A, A^-1]`, in the monomial basis `t^n` or the
//! Chebyshev basis `S_n(t)` (second kind: `S_0 = 1`, `S_1 = t`,
//! `S_{n+1} = t S_n - S_{n-1}`).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Chebyshev,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Monomial => f.write_str("monomial basis t^n"),
            Basis::Chebyshev => f.write_str("Chebyshev basis S_n(t)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChebyshevError {
    #[error("operation requires {expected:?} basis operands")]
    BasisMismatch { expected: Basis },
}

/// `sum g_n b_n` with `b_n = t^n` or `S_n(t)` according to `basis`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: BTreeMap<u32, LaurentPoly>,
    basis: Basis,
}

impl TPoly {
    pub fn zero(basis: Basis) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            basis,
        }
    }

    /// `c * b_n`.
    pub fn term(basis: Basis, n: u32, c: LaurentPoly) -> Self {
        let mut p = Self::zero(basis);
        p.add_coeff(n, &c);
        p
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, LaurentPoly)>>(basis: Basis, iter: I) -> Self {
        let mut p = Self::zero(basis);
        for (n, c) in iter {
            p.add_coeff(n, &c);
        }
        p
    }

    /// The variable `t` (monomial basis).
    pub fn t() -> Self {
        Self::term(Basis::Monomial, 1, LaurentPoly::one())
    }

    pub fn constant(basis: Basis, c: LaurentPoly) -> Self {
        Self::term(basis, 0, c)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, n: u32) -> LaurentPoly {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients by ascending index.
    pub fn coeffs(&self) -> impl DoubleEndedIterator<Item = (u32, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn add_coeff(&mut self, n: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub(crate) fn take_coeff(&mut self, n: u32) -> Option<LaurentPoly> {
        self.coeffs.remove(&n)
    }

    fn check_same_basis(&self, other: &Self) -> Result<(), ChebyshevError> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(ChebyshevError::BasisMismatch { expected: self.basis })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChebyshevError> {
        self.check_same_basis(other)?;
        let mut out = self.clone();
        for (n, c) in other.coeffs() {
            out.add_coeff(n, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ChebyshevError> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    /// Multiplication by a scalar of `Z[A, A^-1]`; valid in either basis.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.basis, self.coeffs().map(|(n, g)| (n, g * c)))
    }

    /// Product of two monomial-basis polynomials.
    pub fn mul(&self, other: &Self) -> Result<Self, ChebyshevError> {
        for p in [self, other] {
            if p.basis != Basis::Monomial {
                return Err(ChebyshevError::BasisMismatch {
                    expected: Basis::Monomial,
                });
            }
        }
        let mut out = Self::zero(Basis::Monomial);
        for (i, a) in self.coeffs() {
            for (j, b) in other.coeffs() {
                out.add_coeff(i + j, &(a * b));
            }
        }
        Ok(out)
    }

    /// Re-expresses `self` in the requested basis.
    pub fn in_basis(&self, basis: Basis) -> Self {
        match (self.basis, basis) {
            (Basis::Monomial, Basis::Chebyshev) => to_chebyshev(self),
            (Basis::Chebyshev, Basis::Monomial) => to_monomial(self),
            _ => self.clone(),
        }
    }

    /// Same element regardless of basis tag.
    pub fn same_value(&self, other: &Self) -> bool {
        self.in_basis(Basis::Monomial) == other.in_basis(Basis::Monomial)
    }

    /// Substitutes `t = value`; the result lies in `Z[A, A^-1]`.
    pub fn eval_t(&self, value: &LaurentPoly) -> LaurentPoly {
        let mono = self.in_basis(Basis::Monomial);
        let Some(deg) = mono.degree() else {
            return LaurentPoly::zero();
        };
        // Horner
        let mut acc = LaurentPoly::zero();
        for n in (0..=deg).rev() {
            acc = &acc * value + mono.coeff(n);
        }
        acc
    }
}

/// Integer coefficient rows of `S_0..=S_n` in the monomial basis.
pub(crate) fn chebyshev_table(n: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize + 1);
    rows.push(alloc::vec![BigInt::one()]);
    if n >= 1 {
        rows.push(alloc::vec![BigInt::zero(), BigInt::one()]);
    }
    for k in 2..=n as usize {
        let mut next = alloc::vec![BigInt::zero(); k + 1];
        for (i, c) in rows[k - 1].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in rows[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        rows.push(next);
    }
    rows
}

fn row_to_tpoly(row: &[BigInt]) -> TPoly {
    TPoly::from_coeffs(
        Basis::Monomial,
        row.iter()
            .enumerate()
            .map(|(i, c)| (i as u32, LaurentPoly::constant(c.clone()))),
    )
}

/// `S_n(t)` in the monomial basis, built by the three-term recursion.
pub fn chebyshev_s(n: u32) -> TPoly {
    row_to_tpoly(&chebyshev_table(n)[n as usize])
}

/// Monomial to Chebyshev change of basis. The transition matrix is
/// unitriangular since `S_n` is monic of degree `n`.
pub fn to_chebyshev(p: &TPoly) -> TPoly {
    if p.basis == Basis::Chebyshev {
        return p.clone();
    }
    let Some(deg) = p.degree() else {
        return TPoly::zero(Basis::Chebyshev);
    };
    let rows = expansions(deg);
    let mut rest = p.clone();
    let mut out = TPoly::zero(Basis::Chebyshev);
    while let Some(top) = rest.degree() {
        let g = rest.take_coeff(top).unwrap();
        for (i, s) in rows[top as usize].coeffs() {
            if i < top {
                rest.add_coeff(i, &-(&g * s));
            }
        }
        out.add_coeff(top, &g);
    }
    out
}

/// Chebyshev to monomial change of basis.
pub fn to_monomial(p: &TPoly) -> TPoly {
    if p.basis == Basis::Monomial {
        return p.clone();
    }
    let Some(deg) = p.degree() else {
        return TPoly::zero(Basis::Monomial);
    };
    let rows = expansions(deg);
    let mut out = TPoly::zero(Basis::Monomial);
    for (n, g) in p.coeffs() {
        for (i, s) in rows[n as usize].coeffs() {
            out.add_coeff(i, &(g * s));
        }
    }
    out
}

fn expansions(deg: u32) -> Vec<TPoly> {
    chebyshev_table(deg).iter().map(|r| row_to_tpoly(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(c: &[i64]) -> TPoly {
        TPoly::from_coeffs(
            Basis::Monomial,
            c.iter()
                .enumerate()
                .map(|(i, &x)| (i as u32, LaurentPoly::constant(x))),
        )
    }

    #[test]
    fn small_cases() {
        assert_eq!(chebyshev_s(0), int_poly(&[1]));
        assert_eq!(chebyshev_s(1), int_poly(&[0, 1]));
        assert_eq!(chebyshev_s(2), int_poly(&[-1, 0, 1]));
        assert_eq!(chebyshev_s(3), int_poly(&[0, -2, 0, 1]));
        assert_eq!(chebyshev_s(4), int_poly(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn coefficients_beyond_64_bits() {
        let t = TPoly::t();
        let s150 = chebyshev_s(150);
        let next = t.mul(&s150).unwrap().sub(&chebyshev_s(149)).unwrap();
        assert_eq!(chebyshev_s(151), next);
        // coefficient of t in S_151 is (-1)^75 binomial(76, 75)
        assert_eq!(chebyshev_s(151).coeff(1), LaurentPoly::constant(-76));
    }

    #[test]
    fn basis_change_examples() {
        let t2 = int_poly(&[0, 0, 1]);
        let expect = TPoly::from_coeffs(
            Basis::Chebyshev,
            [(2, LaurentPoly::one()), (0, LaurentPoly::one())],
        );
        assert_eq!(to_chebyshev(&t2), expect);
        assert_eq!(to_monomial(&expect), t2);
        assert_eq!(
            to_chebyshev(&chebyshev_s(5)),
            TPoly::term(Basis::Chebyshev, 5, LaurentPoly::one())
        );
        assert_eq!(
            to_chebyshev(&int_poly(&[1])),
            TPoly::term(Basis::Chebyshev, 0, LaurentPoly::one())
        );
        assert_eq!(
            to_monomial(&TPoly::zero(Basis::Chebyshev)),
            TPoly::zero(Basis::Monomial)
        );
        assert_eq!(
            to_monomial(&TPoly::term(Basis::Chebyshev, 1, LaurentPoly::one())),
            TPoly::t()
        );
    }

    #[test]
    fn multiplication() {
        let t = TPoly::t();
        assert_eq!(t.mul(&chebyshev_s(2)).unwrap(), int_poly(&[0, -1, 0, 1]));
        let p = int_poly(&[3, 0, -2]);
        assert_eq!(int_poly(&[1]).mul(&p).unwrap(), p);
        let at = TPoly::term(Basis::Monomial, 1, LaurentPoly::a_pow(1));
        let ait = TPoly::term(Basis::Monomial, 1, LaurentPoly::a_pow(-1));
        assert_eq!(at.mul(&ait).unwrap(), int_poly(&[0, 0, 1]));
        let cheb = TPoly::term(Basis::Chebyshev, 1, LaurentPoly::one());
        assert_eq!(
            cheb.mul(&t),
            Err(ChebyshevError::BasisMismatch {
                expected: Basis::Monomial
            })
        );
        assert!(t.add(&cheb).is_err());
    }

    #[test]
    fn value_at_two() {
        for n in 0..=64u32 {
            assert_eq!(
                chebyshev_s(n).eval_t(&LaurentPoly::constant(2)),
                LaurentPoly::constant(n as i64 + 1)
            );
        }
    }
}
