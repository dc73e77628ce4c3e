//! Kauffman bracket evaluation, normalized by `<empty> = 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;

use super::diagram::{Crossing, Label, PlanarDiagram, Smoothing};
use super::moves::resolve;
use crate::laurent::LaurentPoly;
use crate::uf::UnionFind;

/// `(-A^3)^k`.
pub fn framing_factor(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(-1, 3).unit_pow(k).unwrap()
}

fn delta_powers(max: usize) -> Vec<LaurentPoly> {
    let delta = LaurentPoly::loop_value();
    let mut out = Vec::with_capacity(max + 1);
    out.push(LaurentPoly::one());
    for i in 0..max {
        out.push(&out[i] * &delta);
    }
    out
}

/// Crossings with labels compressed to `0..edges`.
struct Compiled {
    pairs_a: Vec<[(usize, usize); 2]>,
    pairs_b: Vec<[(usize, usize); 2]>,
    edges: usize,
}

fn compile(d: &PlanarDiagram) -> Compiled {
    let mut index: BTreeMap<Label, usize> = BTreeMap::new();
    for c in &d.crossings {
        for &l in &c.edges {
            let next = index.len();
            index.entry(l).or_insert(next);
        }
    }
    let to_edges = |c: &Crossing, s: Smoothing| {
        c.smoothing_pairs(s)
            .map(|(a, b)| (index[&c.edges[a]], index[&c.edges[b]]))
    };
    Compiled {
        pairs_a: d.crossings.iter().map(|c| to_edges(c, Smoothing::A)).collect(),
        pairs_b: d.crossings.iter().map(|c| to_edges(c, Smoothing::B)).collect(),
        edges: index.len(),
    }
}

/// Sum over the states with index in `states` (bit `i` set means crossing
/// `i` takes the B-smoothing). Partial sums over a partition of
/// `0..2^crossings` add up to [`bracket_statesum`].
pub fn bracket_statesum_range(d: &PlanarDiagram, states: Range<u64>) -> LaurentPoly {
    let n = d.crossings.len();
    assert!(n < 64, "state sum limited to 63 crossings");
    let compiled = compile(d);
    // (a - b, loops) -> multiplicity
    let mut tally: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    for state in states {
        let mut uf = UnionFind::new(compiled.edges);
        let mut b_count = 0i64;
        for i in 0..n {
            let pairs = if state >> i & 1 == 1 {
                b_count += 1;
                &compiled.pairs_b[i]
            } else {
                &compiled.pairs_a[i]
            };
            for &(x, y) in pairs {
                uf.union(x, y);
            }
        }
        let loops = uf.classes() + d.free_loops as usize;
        let a_minus_b = n as i64 - 2 * b_count;
        *tally.entry((a_minus_b, loops)).or_insert(0) += 1;
    }
    let max_loops = tally.keys().map(|k| k.1).max().unwrap_or(0);
    let deltas = delta_powers(max_loops);
    let mut sum = LaurentPoly::zero();
    for ((e, loops), count) in tally {
        sum += &deltas[loops].shift(e).scale(&BigInt::from(count));
    }
    &sum * &framing_factor(d.kinks)
}

/// `sum_states A^(a-b) delta^loops`, times the framing factor for `kinks`.
pub fn bracket_statesum(d: &PlanarDiagram) -> LaurentPoly {
    let total = 1u64 << d.crossings.len();
    bracket_statesum_range(d, 0..total)
}

/// Memoized evaluation of `<L> = A <L_0> + A^-1 <L_inf>`, resolving the
/// first crossing each time.
pub fn bracket_recursive(d: &PlanarDiagram) -> LaurentPoly {
    let mut memo = BTreeMap::new();
    let core = PlanarDiagram::new(d.crossings.clone(), 0, 0);
    let v = recurse(&core, &mut memo);
    &(&v * &LaurentPoly::loop_value().pow(d.free_loops)) * &framing_factor(d.kinks)
}

/// Memo key: crossings rotated to have the over-strand on slots 1/3 and
/// relabelled by first appearance.
fn canonical_key(d: &PlanarDiagram) -> Vec<Label> {
    let mut map: BTreeMap<Label, Label> = BTreeMap::new();
    let mut key = Vec::with_capacity(4 * d.crossings.len());
    for c in &d.crossings {
        let c = if c.over == super::Over::Odd {
            c.clone()
        } else {
            c.rotated(1)
        };
        for l in c.edges {
            let next = map.len() as Label;
            key.push(*map.entry(l).or_insert(next));
        }
    }
    key
}

fn recurse(d: &PlanarDiagram, memo: &mut BTreeMap<Vec<Label>, LaurentPoly>) -> LaurentPoly {
    if d.crossings.is_empty() {
        return LaurentPoly::one();
    }
    let key = canonical_key(d);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let delta = LaurentPoly::loop_value();
    let mut total = LaurentPoly::zero();
    for (choice, weight) in [(Smoothing::A, 1), (Smoothing::B, -1)] {
        let r = resolve(d, 0, choice).expect("crossing 0 exists");
        let loops = r.free_loops;
        let core = PlanarDiagram::new(r.crossings, 0, 0);
        let sub = recurse(&core, memo);
        total += &(&sub * &delta.pow(loops)).shift(weight);
    }
    memo.insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::moves::{add_kink, KinkSign};

    #[test]
    fn trivial_diagrams() {
        assert!(bracket_statesum(&PlanarDiagram::empty()).is_one());
        assert_eq!(
            bracket_statesum(&PlanarDiagram::unknot()),
            LaurentPoly::loop_value()
        );
        let two = PlanarDiagram::new(Vec::new(), 2, 0);
        assert_eq!(bracket_statesum(&two), LaurentPoly::loop_value().pow(2));
        assert_eq!(bracket_recursive(&two), LaurentPoly::loop_value().pow(2));
    }

    #[test]
    fn negative_curl_factor() {
        let k = add_kink(&PlanarDiagram::unknot(), KinkSign::Negative).unwrap();
        let expect = &LaurentPoly::monomial(-1, -3) * &LaurentPoly::loop_value();
        assert_eq!(bracket_statesum(&k), expect);
        assert_eq!(bracket_recursive(&k), expect);
    }

    #[test]
    fn partial_sums_add_up() {
        let d = PlanarDiagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]);
        let whole = bracket_statesum(&d);
        let parts = bracket_statesum_range(&d, 0..3) + bracket_statesum_range(&d, 3..8);
        assert_eq!(whole, parts);
    }

    #[test]
    fn kinks_field_is_framing() {
        let mut d = PlanarDiagram::unknot();
        d.kinks = 2;
        assert_eq!(
            bracket_statesum(&d),
            &LaurentPoly::a_pow(6) * &LaurentPoly::loop_value()
        );
    }
}
