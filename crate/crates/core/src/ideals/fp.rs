//! Dense polynomials over a small prime field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::laurent::LaurentPoly;

/// Coefficients ascending, reduced mod `p`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        coeffs.iter_mut().for_each(|c| *c %= p);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    /// Reduction of a Laurent polynomial mod `p`, multiplied by the power of
    /// `A` that makes the lowest surviving exponent zero. The result is
    /// associate to the reduction in `F_p[A, A^-1]`.
    pub fn reduce(poly: &LaurentPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let reduced: Vec<(i64, u64)> = poly
            .terms()
            .filter_map(|(e, c)| {
                let r = c.mod_floor(&pb).to_u64().unwrap();
                (r != 0).then_some((e, r))
            })
            .collect();
        let Some(lo) = reduced.first().map(|t| t.0) else {
            return Self::new(p, Vec::new());
        };
        let hi = reduced.last().unwrap().0;
        let mut coeffs = alloc::vec![0; (hi - lo + 1) as usize];
        for (e, r) in reduced {
            coeffs[(e - lo) as usize] = r;
        }
        Self::new(p, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Non-unit in `F_p[A, A^-1]`: nonzero and not of the form `c * A^k`.
    pub fn is_laurent_nonunit(&self) -> bool {
        self.coeffs.iter().filter(|&&c| c != 0).count() >= 2
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&l) => {
                let inv = inv_mod(l, self.p);
                Self::new(self.p, self.coeffs.iter().map(|c| c * inv % self.p).collect())
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, Vec::new());
        }
        let mut out = alloc::vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    /// `(quotient, remainder)`; panics on a zero divisor.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = other.degree().expect("division by zero in F_p[x]");
        let inv = inv_mod(*other.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![0u64; rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let q = rem[top] * inv % p;
            let shift = top - dd;
            quot[shift] = q;
            for (i, b) in other.coeffs.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p - q * b % p) % p;
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}
