//! gcds and two-generator ideals of `Z[A, A^-1]`.
//!
//! The central object is the [`PrincipalityVerdict`]: a proof that an ideal
//! `(g1, g2)` is not principal consists of a unit gcd together with a
//! reduction modulo a prime in which both generators share a non-unit
//! factor. A principal ideal with unit gcd would be the whole ring, which
//! the reduction rules out.

mod fp;
mod hermite;
mod subresultant;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub use fp::FpPoly;

use crate::laurent::LaurentPoly;

/// Primes tried by [`properness_certificate`].
pub const PROPERNESS_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdResult {
    /// Normalized: lowest exponent zero, positive leading coefficient.
    pub gcd: LaurentPoly,
    pub cofactor1: LaurentPoly,
    pub cofactor2: LaurentPoly,
}

impl GcdResult {
    pub fn verify(&self, p: &LaurentPoly, q: &LaurentPoly) -> bool {
        &(&self.gcd * &self.cofactor1) == p && &(&self.gcd * &self.cofactor2) == q
    }
}

/// gcd in `Z[A, A^-1]`: content gcd times the primitive gcd of the shifted
/// ordinary polynomials. Both inputs zero yields a zero gcd.
pub fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> GcdResult {
    let g = match (p.is_zero(), q.is_zero()) {
        (true, true) => {
            return GcdResult {
                gcd: LaurentPoly::zero(),
                cofactor1: LaurentPoly::zero(),
                cofactor2: LaurentPoly::zero(),
            }
        }
        (false, true) => p.unit_normalized(),
        (true, false) => q.unit_normalized(),
        (false, false) => {
            let (_, dp) = p.to_dense();
            let (_, dq) = q.to_dense();
            let content = subresultant::content(&dp).gcd(&subresultant::content(&dq));
            let prim = subresultant::primitive_gcd(&dp, &dq);
            LaurentPoly::from_dense(0, &prim).scale(&content)
        }
    };
    let cofactor1 = p.divide_exact(&g).expect("gcd divides its first input");
    let cofactor2 = q.divide_exact(&g).expect("gcd divides its second input");
    GcdResult {
        gcd: g,
        cofactor1,
        cofactor2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTwoGen {
    pub g1: LaurentPoly,
    pub g2: LaurentPoly,
}

impl IdealTwoGen {
    /// `None` if both generators are zero.
    pub fn new(g1: LaurentPoly, g2: LaurentPoly) -> Option<Self> {
        if g1.is_zero() && g2.is_zero() {
            None
        } else {
            Some(Self { g1, g2 })
        }
    }

    /// Widest generator exponent span.
    pub fn max_width(&self) -> i64 {
        self.g1.width().unwrap_or(0).max(self.g2.width().unwrap_or(0))
    }

    pub fn default_degree_bound(&self) -> u32 {
        (4 * self.max_width()) as u32
    }
}

/// Evidence that `1` is not in an ideal: modulo `prime`, both generators are
/// multiples of `common_factor`, which is not a unit of `F_p[A, A^-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperCertificate {
    pub prime: u64,
    /// Monic in `F_p[A]` with nonzero constant term and degree >= 1. Empty
    /// when both generators reduce to zero (the ideal lies in `(p)`).
    pub common_factor: FpPoly,
    pub cofactor1: FpPoly,
    pub cofactor2: FpPoly,
}

impl ProperCertificate {
    /// Re-checks the certificate by modular arithmetic alone.
    pub fn verify(&self, ideal: &IdealTwoGen) -> bool {
        let p = self.prime;
        if !PROPERNESS_PRIMES.contains(&p) {
            return false;
        }
        let r1 = FpPoly::reduce(&ideal.g1, p);
        let r2 = FpPoly::reduce(&ideal.g2, p);
        if self.common_factor.is_zero() {
            return r1.is_zero() && r2.is_zero();
        }
        let h = &self.common_factor;
        let nonunit = h.degree().is_some_and(|d| d >= 1) && h.coeffs[0] != 0;
        let divides = |r: &FpPoly, u: &FpPoly| -> bool {
            // Equality up to a power of A: both sides are normalized to a
            // nonzero constant term when nonzero.
            let prod = h.mul(u);
            if r.is_zero() {
                return u.is_zero();
            }
            let trimmed = strip_a_power(&prod);
            trimmed == *r
        };
        nonunit && divides(&r1, &self.cofactor1) && divides(&r2, &self.cofactor2)
    }
}

fn strip_a_power(f: &FpPoly) -> FpPoly {
    let lead_zeros = f.coeffs.iter().take_while(|&&c| c == 0).count();
    FpPoly::new(f.p, f.coeffs[lead_zeros..].to_vec())
}

/// Searches the primes in [`PROPERNESS_PRIMES`] for a reduction in which the
/// ideal becomes proper.
pub fn properness_certificate(ideal: &IdealTwoGen) -> Option<ProperCertificate> {
    for &p in PROPERNESS_PRIMES.iter() {
        let r1 = FpPoly::reduce(&ideal.g1, p);
        let r2 = FpPoly::reduce(&ideal.g2, p);
        if r1.is_zero() && r2.is_zero() {
            return Some(ProperCertificate {
                prime: p,
                common_factor: FpPoly::new(p, Vec::new()),
                cofactor1: FpPoly::new(p, Vec::new()),
                cofactor2: FpPoly::new(p, Vec::new()),
            });
        }
        // Reductions have a nonzero constant term, so their gcd does too.
        let h = r1.gcd(&r2);
        if !h.is_laurent_nonunit() {
            continue;
        }
        let cof = |r: &FpPoly| {
            if r.is_zero() {
                FpPoly::new(p, Vec::new())
            } else {
                r.div_rem(&h).0
            }
        };
        return Some(ProperCertificate {
            prime: p,
            cofactor1: cof(&r1),
            cofactor2: cof(&r2),
            common_factor: h,
        });
    }
    None
}

/// Cofactors `(a, b)` with `a*g1 + b*g2 = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub cofactor1: LaurentPoly,
    pub cofactor2: LaurentPoly,
}

impl Membership {
    pub fn verify(&self, target: &LaurentPoly, ideal: &IdealTwoGen) -> bool {
        &(&self.cofactor1 * &ideal.g1 + &self.cofactor2 * &ideal.g2) == target
    }
}

/// Decides whether `target` lies in the integer span of the shifts `A^i g1`,
/// `A^j g2` that fit in the exponent window `[min(target) - w - bound,
/// max(target) + w + bound]`, `w` the widest generator span.
///
/// `None` is not a proof of non-membership.
pub fn membership_bounded(
    target: &LaurentPoly,
    ideal: &IdealTwoGen,
    degree_bound: u32,
) -> Option<Membership> {
    if target.is_zero() {
        return Some(Membership {
            cofactor1: LaurentPoly::zero(),
            cofactor2: LaurentPoly::zero(),
        });
    }
    let w = ideal.max_width();
    let lo = target.min_exp().unwrap() - w - degree_bound as i64;
    let hi = target.max_exp().unwrap() + w + degree_bound as i64;
    let rows = (hi - lo + 1) as usize;

    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    let mut labels: Vec<(usize, i64)> = Vec::new();
    for (which, g) in [&ideal.g1, &ideal.g2].into_iter().enumerate() {
        let (Some(glo), Some(ghi)) = (g.min_exp(), g.max_exp()) else {
            continue;
        };
        for shift in (lo - glo)..=(hi - ghi) {
            let mut col = alloc::vec![BigInt::zero(); rows];
            for (e, c) in g.terms() {
                col[(e + shift - lo) as usize] = c.clone();
            }
            columns.push(col);
            labels.push((which, shift));
        }
    }
    let mut rhs = alloc::vec![BigInt::zero(); rows];
    for (e, c) in target.terms() {
        rhs[(e - lo) as usize] = c.clone();
    }
    let x = hermite::solve_integer(&columns, &rhs)?;
    let mut cof = [LaurentPoly::zero(), LaurentPoly::zero()];
    for (coef, (which, shift)) in x.into_iter().zip(labels) {
        cof[which].add_term(shift, coef);
    }
    let [cofactor1, cofactor2] = cof;
    let m = Membership { cofactor1, cofactor2 };
    debug_assert!(m.verify(target, ideal));
    Some(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrincipalityVerdict {
    /// Unit gcd plus properness: the ideal is proper but not the unit ideal,
    /// so it has no single generator.
    NonPrincipal {
        gcd: GcdResult,
        certificate: ProperCertificate,
    },
    /// `generator` divides both generators and lies in the ideal.
    Principal {
        generator: LaurentPoly,
        divides: GcdResult,
        membership: Membership,
    },
    Inconclusive {
        gcd: GcdResult,
    },
}

impl PrincipalityVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            Self::NonPrincipal { .. } => "NonPrincipal",
            Self::Principal { .. } => "Principal",
            Self::Inconclusive { .. } => "Inconclusive",
        }
    }

    /// Independent re-verification of the witness by ring arithmetic.
    pub fn verify(&self, ideal: &IdealTwoGen) -> bool {
        match self {
            Self::NonPrincipal { gcd: g, certificate } => {
                let recomputed = gcd(&ideal.g1, &ideal.g2);
                g.verify(&ideal.g1, &ideal.g2)
                    && g.gcd.is_unit()
                    && recomputed.gcd.is_unit()
                    && certificate.verify(ideal)
            }
            Self::Principal {
                generator,
                divides,
                membership,
            } => {
                &divides.gcd == generator
                    && divides.verify(&ideal.g1, &ideal.g2)
                    && membership.verify(generator, ideal)
            }
            Self::Inconclusive { gcd: g } => g.verify(&ideal.g1, &ideal.g2),
        }
    }
}

pub fn principality_verdict(ideal: &IdealTwoGen) -> PrincipalityVerdict {
    principality_verdict_with_bound(ideal, ideal.default_degree_bound())
}

pub fn principality_verdict_with_bound(ideal: &IdealTwoGen, degree_bound: u32) -> PrincipalityVerdict {
    let g = gcd(&ideal.g1, &ideal.g2);
    if g.gcd.is_unit() {
        if let Some(certificate) = properness_certificate(ideal) {
            return PrincipalityVerdict::NonPrincipal { gcd: g, certificate };
        }
    }
    match membership_bounded(&g.gcd, ideal, degree_bound) {
        Some(membership) => PrincipalityVerdict::Principal {
            generator: g.gcd.clone(),
            divides: g,
            membership,
        },
        None => PrincipalityVerdict::Inconclusive { gcd: g },
    }
}
