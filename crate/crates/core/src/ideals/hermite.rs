//! Integer lattice membership by column echelon reduction.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A lattice vector together with its expression in the original columns.
#[derive(Clone)]
struct Tracked {
    v: Vec<BigInt>,
    combo: Vec<BigInt>,
}

fn axpy(dst: &mut [BigInt], a: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += a * s;
    }
}

/// `round(a / b)`, ties rounded up.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    Integer::div_floor(&(a * &two + b), &(b * &two))
}

/// Solves `sum_j x_j * columns[j] = target` over the integers.
///
/// Returns the coefficient vector `x` if `target` lies in the `Z`-span of
/// the columns, `None` otherwise. All vectors must share one length.
pub(crate) fn solve_integer(columns: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = target.len();
    let m = columns.len();
    let mut pending: Vec<Tracked> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut combo = alloc::vec![BigInt::zero(); m];
            combo[j] = BigInt::one();
            Tracked { v: c.clone(), combo }
        })
        .collect();
    let mut pivots: Vec<(usize, Tracked)> = Vec::new();

    for row in 0..rows {
        // Euclid across the active columns: repeatedly reduce everything by
        // the entry of least magnitude until one nonzero entry is left.
        let (mut active, rest): (Vec<Tracked>, Vec<Tracked>) =
            pending.drain(..).partition(|c| !c.v[row].is_zero());
        pending = rest;
        while active.len() > 1 {
            let k = (0..active.len())
                .min_by(|&i, &j| active[i].v[row].abs().cmp(&active[j].v[row].abs()))
                .unwrap();
            let p = active.swap_remove(k);
            let mut next = Vec::with_capacity(active.len() + 1);
            for mut col in active.drain(..) {
                let q = nearest_quotient(&col.v[row], &p.v[row]);
                let neg = -q;
                axpy(&mut col.v, &neg, &p.v);
                axpy(&mut col.combo, &neg, &p.combo);
                if col.v[row].is_zero() {
                    if col.v.iter().any(|x| !x.is_zero()) {
                        pending.push(col);
                    }
                } else {
                    next.push(col);
                }
            }
            next.push(p);
            active = next;
        }
        if let Some(mut p) = active.pop() {
            if p.v[row].is_negative() {
                p.v.iter_mut().for_each(|x| *x = -&*x);
                p.combo.iter_mut().for_each(|x| *x = -&*x);
            }
            pivots.push((row, p));
        }
    }

    let mut residual = target.to_vec();
    let mut solution = alloc::vec![BigInt::zero(); m];
    let mut next = pivots.iter().peekable();
    for row in 0..rows {
        match next.peek() {
            Some((r, p)) if *r == row => {
                let (q, rem) = residual[row].div_rem(&p.v[row]);
                if !rem.is_zero() {
                    return None;
                }
                let neg = -&q;
                axpy(&mut residual, &neg, &p.v);
                axpy(&mut solution, &q, &p.combo);
                next.next();
            }
            _ => {
                if !residual[row].is_zero() {
                    return None;
                }
            }
        }
    }
    Some(solution)
}
