//! The module `Z[A, A^-1][t] / S` with `S` spanned by one relation for
//! each `n >= 2`:
//!
//! ```text
//! r_n = c_n S_n(t) - d_n S_e(t),   e = n mod 2,   c_n = A^(n+1) + A^-(n+1)
//! ```
//!
//! Since every `c_n` has extreme coefficients `+-1`, each coordinate `S_n`
//! with `n >= 2` reduces to a residue in the window of exponents
//! `[-(n+1), n]`, spilling a multiple of `d_n` onto `S_0` or `S_1`. The
//! two free summands `K` and `K'` are carried alongside and never interact
//! with reduction.

mod rank;
mod torsion;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::chebyshev::{to_chebyshev, Basis, TPoly};
use crate::laurent::LaurentPoly;

pub use rank::{rank_over_qa, RankReport, ReductionRow, DEFAULT_RANK_BOUND};
pub use torsion::{
    manifold_catalog, marche_type_check, marche_type_check_with, split_obstruction, torsion_witness,
    ManifoldProfile, SplitObstruction, TorsionRecord, TorsionWitness, TypeCheck, DEFAULT_MAX_K,
    DEFAULT_MAX_POWER,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModpresError {
    #[error("relations are indexed by n >= 2, got {0}")]
    IndexTooSmall(u32),
    #[error("annihilator must be nonzero")]
    ZeroAnnihilator,
    #[error("witness check failed: {0}")]
    WitnessRejected(&'static str),
}

/// `A^(n+1) + A^-(n+1)`.
pub fn relation_c(n: u32) -> LaurentPoly {
    LaurentPoly::sym_sum(n as i64 + 1)
}

/// `c_n` plus the correction term of the even or odd family.
pub fn relation_d(n: u32) -> LaurentPoly {
    let n = n as i64;
    let mut corr = LaurentPoly::zero();
    if n % 2 == 0 {
        for k in 1..=n / 2 {
            corr += &LaurentPoly::a_pow(n + 2 - 4 * k);
        }
        corr = &corr * &LaurentPoly::sym_sum(1);
    } else {
        for k in 1..=(n - 1) / 2 {
            corr += &LaurentPoly::a_pow(n + 1 - 4 * k);
        }
    }
    &LaurentPoly::sym_sum(n + 1) + &corr.scale(&2.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub n: u32,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
    /// `c S_n - d S_(n mod 2)`, Chebyshev basis.
    pub expression: TPoly,
}

impl Relation {
    /// Index of the coordinate that absorbs reductions: 0 or 1.
    pub fn target(&self) -> u32 {
        self.n % 2
    }
}

pub fn relation(n: u32) -> Result<Relation, ModpresError> {
    if n < 2 {
        return Err(ModpresError::IndexTooSmall(n));
    }
    let (c, d) = (relation_c(n), relation_d(n));
    let expression = TPoly::from_coeffs(Basis::Chebyshev, [(n, c.clone()), (n % 2, -&d)]);
    Ok(Relation { n, c, d, expression })
}

/// Canonical representative of a class in `Z[A, A^-1][t] / S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    pub a0: LaurentPoly,
    pub a1: LaurentPoly,
    /// Nonzero residues for `n >= 2`, exponents in `[-(n+1), n]`.
    pub residues: BTreeMap<u32, LaurentPoly>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero() && self.residues.is_empty()
    }

    /// The representative as a Chebyshev-basis polynomial.
    pub fn lift(&self) -> TPoly {
        let mut p = TPoly::from_coeffs(Basis::Chebyshev, [(0, self.a0.clone()), (1, self.a1.clone())]);
        for (&n, r) in &self.residues {
            p.add_coeff(n, r);
        }
        p
    }

    /// Checks the window condition on every residue.
    pub fn is_reduced(&self) -> bool {
        self.residues.iter().all(|(&n, r)| {
            n >= 2
                && !r.is_zero()
                && r.min_exp().unwrap() >= -(n as i64 + 1)
                && r.max_exp().unwrap() <= n as i64
        })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

fn window_low(n: u32) -> i64 {
    -(n as i64 + 1)
}

/// Splits `g` into `(q, rho)` with `g = q c_n + rho` and `rho` in the
/// window for `n`.
fn reduce_coefficient(n: u32, g: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    g.monic_division(&relation_c(n), window_low(n))
        .expect("c_n has extreme coefficients +-1")
}

pub fn normal_form(p: &TPoly) -> NormalForm {
    let cheb = to_chebyshev(p);
    let mut nf = NormalForm::default();
    let mut a = [LaurentPoly::zero(), LaurentPoly::zero()];
    for (n, g) in cheb.coeffs() {
        if n < 2 {
            a[n as usize] += g;
            continue;
        }
        let (q, rho) = reduce_coefficient(n, g);
        a[(n % 2) as usize] += &(&q * &relation_d(n));
        if !rho.is_zero() {
            nf.residues.insert(n, rho);
        }
    }
    let [a0, a1] = a;
    nf.a0 = a0;
    nf.a1 = a1;
    nf
}

/// Reduction by single-monomial relation steps, visiting coordinates in the
/// order given (coordinates absent from `order` are visited afterwards in
/// descending order). Each step subtracts `u A^s r_n` for one monomial; the
/// result must coincide with [`normal_form`].
pub fn normal_form_ordered(p: &TPoly, order: &[u32]) -> NormalForm {
    let mut cur = to_chebyshev(p);
    let mut visit: Vec<u32> = order.iter().copied().filter(|&n| n >= 2).collect();
    let mut rest: Vec<u32> = cur.coeffs().map(|(n, _)| n).filter(|&n| n >= 2).collect();
    rest.reverse();
    visit.extend(rest);
    for n in visit {
        let c = relation_c(n);
        let d = relation_d(n);
        let (lo, hi) = (window_low(n), n as i64);
        let (c_lo, c_hi) = (-(n as i64 + 1), n as i64 + 1);
        loop {
            let g = cur.coeff(n);
            // kill the highest exponent above the window, else the lowest
            // below it; c_n has coefficient 1 at both ends
            let (e, shift) = match (g.max_exp(), g.min_exp()) {
                (Some(top), _) if top > hi => (top, top - c_hi),
                (_, Some(bot)) if bot < lo => (bot, bot - c_lo),
                _ => break,
            };
            let step = LaurentPoly::monomial(g.coeff(e), shift);
            cur.add_coeff(n, &-(&step * &c));
            cur.add_coeff(n % 2, &(&step * &d));
        }
    }
    let mut nf = NormalForm {
        a0: cur.coeff(0),
        a1: cur.coeff(1),
        residues: BTreeMap::new(),
    };
    for (n, g) in cur.coeffs().filter(|(n, _)| *n >= 2) {
        nf.residues.insert(n, g.clone());
    }
    nf
}

pub fn is_zero(p: &TPoly) -> bool {
    normal_form(p).is_zero()
}

/// Element of `Z[A, A^-1] K + Z[A, A^-1] K' + Z[A, A^-1][t] / S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    pub k: LaurentPoly,
    pub k_prime: LaurentPoly,
    pub quotient: TPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleNormalForm {
    pub k: LaurentPoly,
    pub k_prime: LaurentPoly,
    pub quotient: NormalForm,
}

impl ModuleElement {
    pub fn from_quotient(p: TPoly) -> Self {
        Self {
            k: LaurentPoly::zero(),
            k_prime: LaurentPoly::zero(),
            quotient: p,
        }
    }

    pub fn normal_form(&self) -> ModuleNormalForm {
        ModuleNormalForm {
            k: self.k.clone(),
            k_prime: self.k_prime.clone(),
            quotient: normal_form(&self.quotient),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.k.is_zero() && self.k_prime.is_zero() && is_zero(&self.quotient)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self {
            k: &self.k * c,
            k_prime: &self.k_prime * c,
            quotient: self.quotient.scale(c),
        }
    }
}
