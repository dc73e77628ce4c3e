use alloc::vec::Vec;

use super::{relation_c, relation_d};
use crate::ratfunc::RationalFunction;

pub const DEFAULT_RANK_BOUND: u32 = 30;

/// Over `Q(A)`, `S_n` equals `coefficient * S_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRow {
    pub n: u32,
    pub target: u32,
    pub coefficient: RationalFunction,
    /// `numerator * c_n == denominator * d_n`.
    pub matches_relation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub bound: u32,
    /// Free summands `K`, `K'`.
    pub free_rank: usize,
    /// Dimension of the span of `S_0..=S_bound` modulo relations.
    pub quotient_rank: usize,
    /// Chebyshev indices of the surviving basis.
    pub basis: Vec<u32>,
    pub rows: Vec<ReductionRow>,
}

impl RankReport {
    pub fn rank(&self) -> usize {
        self.free_rank + self.quotient_rank
    }

    pub fn verified(&self) -> bool {
        self.rows.len() + 1 == self.bound as usize
            && self.rows.iter().all(|r| r.matches_relation && r.target < 2)
    }
}

/// Gaussian elimination over `Q(A)` on the relations `r_2..=r_bound` in
/// the coordinates `S_0..=S_bound`.
pub fn rank_over_qa(bound: u32) -> RankReport {
    let bound = bound.max(2);
    let cols = bound as usize + 1;
    let mut rows: Vec<Vec<RationalFunction>> = (2..=bound)
        .map(|n| {
            let mut row = alloc::vec![RationalFunction::zero(); cols];
            row[n as usize] = RationalFunction::from_poly(relation_c(n));
            row[(n % 2) as usize] = RationalFunction::from_poly(-relation_d(n));
            row
        })
        .collect();

    // Pivot on the highest columns first so that S_0, S_1 stay free.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = alloc::vec![false; rows.len()];
    for col in (0..cols).rev() {
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && !rows[r][col].is_zero()) else {
            continue;
        };
        used[r] = true;
        let inv = rows[r][col].recip().unwrap();
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for other in 0..rows.len() {
            if other != r && !rows[other][col].is_zero() {
                let f = rows[other][col].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[other].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push((r, col));
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let basis: Vec<u32> = (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|c| c as u32)
        .collect();

    let mut report_rows = Vec::new();
    for &(r, col) in pivots.iter().rev() {
        let n = col as u32;
        // row reads S_n + sum_(free j) x_j S_j = 0
        let free: Vec<(usize, &RationalFunction)> = rows[r]
            .iter()
            .enumerate()
            .filter(|(j, x)| *j != col && !x.is_zero())
            .collect();
        let (target, coefficient) = match free.as_slice() {
            [(j, x)] => (*j as u32, -*x),
            [] => (n % 2, RationalFunction::zero()),
            _ => (u32::MAX, RationalFunction::zero()),
        };
        let matches_relation = target == n % 2
            && coefficient.numerator() * &relation_c(n) == coefficient.denominator() * &relation_d(n);
        report_rows.push(ReductionRow {
            n,
            target,
            coefficient,
            matches_relation,
        });
    }
    RankReport {
        bound,
        free_rank: 2,
        quotient_rank: basis.len(),
        basis,
        rows: report_rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    #[test]
    fn rank_is_four() {
        let r = rank_over_qa(DEFAULT_RANK_BOUND);
        assert_eq!(r.rank(), 4);
        assert_eq!(r.basis, [0, 1]);
        assert!(r.verified());
    }

    #[test]
    fn small_rows() {
        let r = rank_over_qa(3);
        let two = &r.rows[0];
        assert_eq!((two.n, two.target), (2, 0));
        let num = LaurentPoly::from_terms([(4, 1), (2, 1), (0, 1)]);
        let den = LaurentPoly::from_terms([(4, 1), (2, -1), (0, 1)]);
        assert_eq!(two.coefficient, RationalFunction::new(num, den).unwrap());
        let three = &r.rows[1];
        assert_eq!(three.target, 1);
        assert_eq!(
            three.coefficient,
            RationalFunction::new(relation_d(3), relation_c(3)).unwrap()
        );
    }
}
