use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{normal_form, relation, ModpresError, Relation};
use crate::chebyshev::{Basis, TPoly};
use crate::ideals::{gcd, principality_verdict, IdealTwoGen, PrincipalityVerdict};
use crate::laurent::LaurentPoly;

/// A nonzero element killed by a nonzero scalar. Construction re-checks both
/// conditions by reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionWitness {
    pub n: u32,
    pub element: TPoly,
    pub annihilator: LaurentPoly,
}

impl TorsionWitness {
    pub fn new(n: u32, element: TPoly, annihilator: LaurentPoly) -> Result<Self, ModpresError> {
        let w = Self {
            n,
            element,
            annihilator,
        };
        w.check()?;
        Ok(w)
    }

    pub fn check(&self) -> Result<(), ModpresError> {
        if self.annihilator.is_zero() {
            return Err(ModpresError::ZeroAnnihilator);
        }
        if normal_form(&self.element).is_zero() {
            return Err(ModpresError::WitnessRejected("element reduces to zero"));
        }
        if !normal_form(&self.element.scale(&self.annihilator)).is_zero() {
            return Err(ModpresError::WitnessRejected("annihilator does not kill element"));
        }
        Ok(())
    }
}

/// `(c_n/g) S_n - (d_n/g) S_e` with `g = gcd(c_n, d_n)`, or `None` when
/// `g` is a unit. The gcd is taken in its most symmetric unit multiple, so
/// for `n = 2` the annihilator is `A + A^-1`.
pub fn torsion_witness(n: u32) -> Result<Option<TorsionWitness>, ModpresError> {
    let r = relation(n)?;
    let g = gcd(&r.c, &r.d).gcd.centered();
    if g.is_unit() {
        return Ok(None);
    }
    let c = r.c.divide_exact(&g).expect("gcd divides c_n");
    let d = r.d.divide_exact(&g).expect("gcd divides d_n");
    let element = TPoly::from_coeffs(Basis::Chebyshev, [(n, c), (r.target(), -d)]);
    TorsionWitness::new(n, element, g).map(Some)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitObstruction {
    pub relation: Relation,
    /// `gcd(c_n, d_n)`, unit-normalized.
    pub common_factor: LaurentPoly,
    pub ideal: IdealTwoGen,
    pub verdict: PrincipalityVerdict,
}

impl SplitObstruction {
    pub fn verify(&self) -> bool {
        let g = &self.common_factor;
        &self.ideal.g1 * g == self.relation.c
            && &self.ideal.g2 * g == self.relation.d
            && self.verdict.verify(&self.ideal)
    }
}

/// Principality of `(c_n/g, d_n/g)`: the torsion-free quotient of the span
/// of `S_n` and `S_e` modulo `r_n` is isomorphic to this ideal.
pub fn split_obstruction(n: u32) -> Result<SplitObstruction, ModpresError> {
    let r = relation(n)?;
    let g = gcd(&r.c, &r.d);
    let ideal = IdealTwoGen::new(g.cofactor1.clone(), g.cofactor2.clone()).expect("c_n is nonzero");
    let verdict = principality_verdict(&ideal);
    Ok(SplitObstruction {
        relation: r,
        common_factor: g.gcd,
        ideal,
        verdict,
    })
}

pub const DEFAULT_MAX_K: u32 = 64;
pub const DEFAULT_MAX_POWER: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeCheck {
    /// The annihilator divides `(A^k - A^-k)^power`.
    OfType { k: u32, power: u32 },
    /// Nothing found with `k <= max_k`, `power <= max_power`.
    NotOfType { max_k: u32, max_power: u32 },
}

pub fn marche_type_check(annihilator: &LaurentPoly) -> Result<TypeCheck, ModpresError> {
    marche_type_check_with(annihilator, DEFAULT_MAX_K, DEFAULT_MAX_POWER)
}

/// Least `k` such that `annihilator` divides a power `<= max_power` of
/// `A^k - A^-k`. Units never matter for divisibility.
pub fn marche_type_check_with(
    annihilator: &LaurentPoly,
    max_k: u32,
    max_power: u32,
) -> Result<TypeCheck, ModpresError> {
    if annihilator.is_zero() {
        return Err(ModpresError::ZeroAnnihilator);
    }
    for k in 1..=max_k {
        let base = LaurentPoly::sym_diff(k as i64);
        let mut acc = LaurentPoly::one();
        for m in 1..=max_power {
            acc = &acc * &base;
            if acc.divide_exact(annihilator).is_ok() {
                return Ok(TypeCheck::OfType { k, power: m });
            }
        }
    }
    Ok(TypeCheck::NotOfType { max_k, max_power })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionRecord {
    pub k: u32,
    pub annihilator: LaurentPoly,
    /// `annihilator = -A^k (A^k - A^-k)`, checked by ring arithmetic.
    pub identity_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldProfile {
    pub name: String,
    /// Rank of the free part.
    pub d: BigInt,
    pub torsion_family: String,
    pub torsion: Vec<TorsionRecord>,
}

fn s1xs2_record(k: u32) -> TorsionRecord {
    let k_i = k as i64;
    let annihilator = &LaurentPoly::one() - &LaurentPoly::a_pow(2 * k_i);
    let rhs = &LaurentPoly::monomial(-1, k_i) * &LaurentPoly::sym_diff(k_i);
    TorsionRecord {
        k,
        identity_checked: annihilator == rhs,
        annihilator,
    }
}

/// Known profiles: `S^1 x S^2` with records for `2 <= k <= 12`, and
/// `F_g x S^1` for genus `2..=4`.
pub fn manifold_catalog() -> Vec<ManifoldProfile> {
    let mut out = alloc::vec![ManifoldProfile {
        name: String::from("S^1 x S^2"),
        d: BigInt::one(),
        torsion_family: String::from("N_k = Z[A^±1]/(1 - A^2k), k >= 2"),
        torsion: (2..=12).map(s1xs2_record).collect(),
    }];
    for g in 2u32..=4 {
        let d = (BigInt::one() << (2 * g + 1)) + BigInt::from(2 * g) - 1;
        out.push(ManifoldProfile {
            name: alloc::format!("F_{g} x S^1"),
            d,
            torsion_family: String::from("not recorded"),
            torsion: Vec::new(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_for_two() {
        let w = torsion_witness(2).unwrap().unwrap();
        assert_eq!(w.annihilator, LaurentPoly::sym_sum(1));
        let c = LaurentPoly::from_terms([(2, 1), (0, -1), (-2, 1)]);
        let d = LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(w.element, TPoly::from_coeffs(Basis::Chebyshev, [(2, c), (0, -d)]));
        assert_eq!(torsion_witness(3), Ok(None));
        assert!(TorsionWitness::new(2, w.element.clone(), LaurentPoly::one()).is_err());
    }

    #[test]
    fn obstructions() {
        for n in [2, 3] {
            let s = split_obstruction(n).unwrap();
            assert_eq!(s.verdict.status(), "NonPrincipal", "n = {n}");
            assert!(s.verify());
        }
    }

    #[test]
    fn type_checks() {
        assert_eq!(
            marche_type_check(&LaurentPoly::sym_sum(1)),
            Ok(TypeCheck::OfType { k: 2, power: 1 })
        );
        assert_eq!(
            marche_type_check(&LaurentPoly::constant(2)),
            Ok(TypeCheck::NotOfType {
                max_k: 64,
                max_power: 4
            })
        );
        assert_eq!(
            marche_type_check(&LaurentPoly::zero()),
            Err(ModpresError::ZeroAnnihilator)
        );
    }

    #[test]
    fn catalog() {
        let c = manifold_catalog();
        assert_eq!(c[0].d, BigInt::one());
        assert!(c[0].torsion.iter().all(|r| r.identity_checked));
        for r in &c[0].torsion {
            assert_eq!(
                marche_type_check(&r.annihilator),
                Ok(TypeCheck::OfType { k: r.k, power: 1 })
            );
        }
        assert_eq!(c[1].d, BigInt::from(35));
    }
}
