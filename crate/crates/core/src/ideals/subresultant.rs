//! Primitive gcd of dense integer polynomials by the subresultant
//! pseudo-remainder sequence.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial, coefficient of `x^i` at index `i`, no trailing zeros.
pub(crate) type Dense = Vec<BigInt>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &Dense) -> usize {
    p.len() - 1
}

pub(crate) fn content(p: &Dense) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

pub(crate) fn primitive_part(p: &Dense) -> Dense {
    let c = content(p);
    if c.is_zero() {
        return p.clone();
    }
    let mut out: Dense = p.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b):
/// `lc(b)^(deg a - deg b + 1) * a = q * b + r`.
fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let db = degree(b);
    let lb = b.last().unwrap().clone();
    let delta = degree(a) - db + 1;
    let mut steps = 0;
    while !r.is_empty() && r.len() > db {
        let dr = degree(&r);
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        trim(&mut r);
        steps += 1;
    }
    // Pad to the full pseudo-remainder multiplier.
    if steps < delta {
        let f = num_traits::pow(lb, delta - steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Primitive gcd of two nonzero integer polynomials, positive leading
/// coefficient.
pub(crate) fn primitive_gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut f, mut g) = if a.len() >= b.len() {
        (primitive_part(a), primitive_part(b))
    } else {
        (primitive_part(b), primitive_part(a))
    };
    if g.is_empty() {
        return f;
    }
    let mut gsc = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&f) - degree(&g);
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return alloc::vec![BigInt::one()];
        }
        let denom = &gsc * num_traits::pow(h.clone(), delta);
        f = g;
        g = r.iter().map(|c| c / &denom).collect();
        gsc = f.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(gsc.clone(), delta);
            let den = num_traits::pow(h.clone(), delta - 1);
            num / den
        };
    }
    primitive_part(&g)
}
