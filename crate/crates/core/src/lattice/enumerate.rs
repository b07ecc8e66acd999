//! Exact lattice-point counting over integer boxes.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Product of integer intervals `[lo_i, hi_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl IntBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                found: hi.len(),
            });
        }
        Ok(IntBox { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(l, h)| l > h)
    }

    /// Number of integer points, saturating.
    pub fn size(&self) -> u128 {
        if self.is_empty() {
            return 0;
        }
        self.lo
            .iter()
            .zip(&self.hi)
            .fold(1u128, |acc, (l, h)| acc.saturating_mul((h - l + 1) as u128))
    }

    /// The box scaled by a nonnegative integer `t`.
    pub fn scaled(&self, t: i64) -> IntBox {
        IntBox {
            lo: self.lo.iter().map(|l| l * t).collect(),
            hi: self.hi.iter().map(|h| h * t).collect(),
        }
    }

    /// Splits along the first coordinate at `cut` (first half gets `x_0 < cut`).
    pub fn split_first(&self, cut: i64) -> (IntBox, IntBox) {
        let mut left = self.clone();
        let mut right = self.clone();
        left.hi[0] = cut - 1;
        right.lo[0] = cut;
        (left, right)
    }
}

/// Counts integer points of `bx` accepted by `member`, by plain scan.
/// Work is spread across threads by first coordinate.
pub fn count_lattice_points<F>(member: F, bx: &IntBox) -> BigInt
where
    F: Fn(&[i64]) -> bool + Sync,
{
    if bx.is_empty() || bx.dim() == 0 {
        return BigInt::from(0);
    }
    let total: u64 = (bx.lo[0]..=bx.hi[0])
        .into_par_iter()
        .map(|x0| {
            let mut p = bx.lo.clone();
            p[0] = x0;
            let mut count = 0u64;
            loop {
                if member(&p) {
                    count += 1;
                }
                // odometer over coordinates 1..n
                let mut k = bx.dim();
                loop {
                    if k == 1 {
                        return count;
                    }
                    k -= 1;
                    if p[k] < bx.hi[k] {
                        p[k] += 1;
                        break;
                    }
                    p[k] = bx.lo[k];
                }
            }
        })
        .sum();
    BigInt::from(total)
}

/// Integer inequalities `rows[r] · x <= rhs[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    dim: usize,
    rows: Vec<Vec<i64>>,
    rhs: Vec<i128>,
}

impl LinearSystem {
    pub fn new(dim: usize, rows: Vec<Vec<i64>>, rhs: Vec<i128>) -> Result<Self> {
        if rows.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                found: rhs.len(),
            });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.len(),
            });
        }
        Ok(LinearSystem { dim, rows, rhs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.rows.iter().zip(&self.rhs).all(|(row, &b)| {
            row.iter().zip(p).map(|(&a, &x)| a as i128 * x as i128).sum::<i128>() <= b
        })
    }
}

struct Pruner<'a> {
    sys: &'a LinearSystem,
    bx: &'a IntBox,
    /// Index of the last nonzero coefficient of each row.
    last: Vec<usize>,
    /// `suffix_min[r][k]`: least value of `Σ_{j>=k} a_rj x_j` over the box.
    suffix_min: Vec<Vec<i128>>,
    /// Rows touching each coordinate.
    touching: Vec<Vec<usize>>,
    budget: u64,
    spent: AtomicU64,
}

const FLUSH: u64 = 1 << 12;

impl<'a> Pruner<'a> {
    fn new(sys: &'a LinearSystem, bx: &'a IntBox, budget: u64) -> Self {
        let n = sys.dim;
        let last = sys
            .rows
            .iter()
            .map(|r| r.iter().rposition(|&a| a != 0).unwrap_or(0))
            .collect();
        let suffix_min = sys
            .rows
            .iter()
            .map(|r| {
                let mut s = vec![0i128; n + 1];
                for k in (0..n).rev() {
                    let a = r[k] as i128;
                    s[k] = s[k + 1] + (a * bx.lo[k] as i128).min(a * bx.hi[k] as i128);
                }
                s
            })
            .collect();
        let touching = (0..n)
            .map(|k| (0..sys.rows.len()).filter(|&r| sys.rows[r][k] != 0).collect())
            .collect();
        Pruner {
            sys,
            bx,
            last,
            suffix_min,
            touching,
            budget,
            spent: AtomicU64::new(0),
        }
    }

    /// Charges `local` search nodes against the shared budget.
    fn charge(&self, local: &mut u64) -> Option<()> {
        let total = self.spent.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        (total <= self.budget).then_some(())
    }

    /// Rows that can no longer be satisfied once `x_0..=x_k` are fixed.
    fn feasible(&self, k: usize, partial: &[i128]) -> bool {
        (0..self.sys.rows.len()).all(|r| {
            let slack = self.sys.rhs[r] - partial[r];
            if self.last[r] <= k {
                slack >= 0
            } else {
                self.suffix_min[r][k + 1] <= slack
            }
        })
    }

    /// Exact range of the final coordinate given all others.
    fn last_range(&self, partial: &[i128]) -> u64 {
        let k = self.sys.dim - 1;
        let mut lo = self.bx.lo[k] as i128;
        let mut hi = self.bx.hi[k] as i128;
        for (r, row) in self.sys.rows.iter().enumerate() {
            let a = row[k] as i128;
            let slack = self.sys.rhs[r] - partial[r];
            if a > 0 {
                hi = hi.min(slack.div_euclid(a));
            } else if a < 0 {
                // a x <= slack  <=>  x >= ceil(slack / a)
                lo = lo.max(-(slack.div_euclid(-a)));
            } else if slack < 0 {
                return 0;
            }
        }
        if hi >= lo {
            (hi - lo + 1) as u64
        } else {
            0
        }
    }

    fn count_from(&self, k: usize, partial: &mut [i128], local: &mut u64) -> Option<u64> {
        *local += 1;
        if *local >= FLUSH {
            self.charge(local)?;
        }
        if k + 1 == self.sys.dim {
            return Some(self.last_range(partial));
        }
        let mut total = 0;
        for x in self.bx.lo[k]..=self.bx.hi[k] {
            for &r in &self.touching[k] {
                partial[r] += self.sys.rows[r][k] as i128 * x as i128;
            }
            let sub = if self.feasible(k, partial) {
                self.count_from(k + 1, partial, local)
            } else {
                Some(0)
            };
            for &r in &self.touching[k] {
                partial[r] -= self.sys.rows[r][k] as i128 * x as i128;
            }
            total += sub?;
        }
        Some(total)
    }
}

/// Counts integer points of `bx` satisfying `sys`, pruning partial assignments
/// that no completion inside the box can satisfy and solving the final
/// coordinate as an interval. Agrees exactly with [`count_lattice_points`].
pub fn count_in_system(sys: &LinearSystem, bx: &IntBox) -> Result<BigInt> {
    count_in_system_within(sys, bx, u64::MAX)
}

/// As [`count_in_system`], giving up with [`Error::BudgetExceeded`] once more
/// than `budget` search nodes have been visited.
pub fn count_in_system_within(sys: &LinearSystem, bx: &IntBox, budget: u64) -> Result<BigInt> {
    if sys.dim != bx.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim,
            found: bx.dim(),
        });
    }
    if bx.is_empty() || sys.dim == 0 {
        return Ok(BigInt::from(0));
    }
    let pruner = Pruner::new(sys, bx, budget);
    if sys.dim == 1 {
        return Ok(BigInt::from(pruner.last_range(&vec![0; sys.rows.len()])));
    }
    let counts: Option<Vec<u64>> = (bx.lo[0]..=bx.hi[0])
        .into_par_iter()
        .map(|x0| {
            let mut partial: Vec<i128> = sys.rows.iter().map(|r| r[0] as i128 * x0 as i128).collect();
            let mut local = 0;
            let c = if pruner.feasible(0, &partial) {
                pruner.count_from(1, &mut partial, &mut local)?
            } else {
                0
            };
            pruner.charge(&mut local)?;
            Some(c)
        })
        .collect();
    match counts {
        Some(c) => Ok(c.into_iter().map(BigInt::from).sum()),
        None => Err(Error::BudgetExceeded {
            needed: pruner.spent.load(Ordering::Relaxed) as u128,
            budget: budget as u128,
            hint: "raise the budget or use a closed form".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cube_box(d: usize, lo: i64, hi: i64) -> IntBox {
        IntBox::new(vec![lo; d], vec![hi; d]).unwrap()
    }

    #[test]
    fn simplex_and_cube_counts() {
        // 2 * standard triangle: x, y >= 0, x + y <= 2
        let bx = cube_box(2, 0, 2);
        let c = count_lattice_points(|p| p[0] + p[1] <= 2, &bx);
        assert_eq!(c, BigInt::from(6));
        let c = count_lattice_points(|_| true, &cube_box(3, 0, 2));
        assert_eq!(c, BigInt::from(27));
        let c = count_lattice_points(|p| p.iter().map(|x| x.abs()).sum::<i64>() <= 1, &cube_box(3, -1, 1));
        assert_eq!(c, BigInt::from(7));
        assert_eq!(count_lattice_points(|_| true, &IntBox::new(vec![1], vec![0]).unwrap()), BigInt::from(0));
    }

    #[test]
    fn system_matches_scan_on_octahedron() {
        let mut rows = Vec::new();
        for mask in 0..8u32 {
            rows.push((0..3).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
        for t in 0..4i64 {
            let sys = LinearSystem::new(3, rows.clone(), vec![t as i128; 8]).unwrap();
            let bx = cube_box(3, -t, t);
            let pruned = count_in_system(&sys, &bx).unwrap();
            let scanned = count_lattice_points(|p| sys.contains(p), &bx);
            assert_eq!(pruned, scanned);
        }
        let sys = LinearSystem::new(3, rows, vec![1; 8]).unwrap();
        assert_eq!(count_in_system(&sys, &cube_box(3, -1, 1)).unwrap(), BigInt::from(7));
    }

    #[test]
    fn node_budget_is_enforced() {
        let sys = LinearSystem::new(3, vec![vec![1, 1, 1]], vec![1000]).unwrap();
        let bx = cube_box(3, 0, 200);
        assert!(matches!(
            count_in_system_within(&sys, &bx, 10_000),
            Err(Error::BudgetExceeded { .. })
        ));
        let small = cube_box(3, 0, 3);
        assert_eq!(count_in_system_within(&sys, &small, 10_000).unwrap(), BigInt::from(64));
    }

    #[test]
    fn one_dimensional_system() {
        let sys = LinearSystem::new(1, vec![vec![2], vec![-1]], vec![7, 0]).unwrap();
        assert_eq!(count_in_system(&sys, &cube_box(1, -10, 10)).unwrap(), BigInt::from(4));
    }

    #[test]
    fn mismatched_shapes_rejected() {
        assert!(LinearSystem::new(2, vec![vec![1]], vec![0]).is_err());
        assert!(IntBox::new(vec![0], vec![0, 1]).is_err());
        let sys = LinearSystem::new(2, vec![vec![1, 1]], vec![0]).unwrap();
        assert!(count_in_system(&sys, &cube_box(3, 0, 1)).is_err());
    }

    proptest! {
        #[test]
        fn pruned_count_agrees_with_scan(
            coeffs in proptest::collection::vec(-3i64..4, 12),
            rhs in proptest::collection::vec(-4i128..8, 4),
            lo in -3i64..1, width in 0i64..5,
        ) {
            let rows: Vec<Vec<i64>> = coeffs.chunks(3).map(|c| c.to_vec()).collect();
            let sys = LinearSystem::new(3, rows, rhs).unwrap();
            let bx = cube_box(3, lo, lo + width);
            prop_assert_eq!(count_in_system(&sys, &bx).unwrap(),
                            count_lattice_points(|p| sys.contains(p), &bx));
        }

        #[test]
        fn count_is_additive_over_box_splits(
            coeffs in proptest::collection::vec(-3i64..4, 9),
            rhs in proptest::collection::vec(-2i128..8, 3),
            cut in -3i64..4,
        ) {
            let rows: Vec<Vec<i64>> = coeffs.chunks(3).map(|c| c.to_vec()).collect();
            let sys = LinearSystem::new(3, rows, rhs).unwrap();
            let bx = cube_box(3, -3, 3);
            let (left, right) = bx.split_first(cut);
            let whole = count_in_system(&sys, &bx).unwrap();
            let parts = count_in_system(&sys, &left).unwrap() + count_in_system(&sys, &right).unwrap();
            prop_assert_eq!(&whole, &parts);
            let scan_parts = count_lattice_points(|p| sys.contains(p), &left)
                + count_lattice_points(|p| sys.contains(p), &right);
            prop_assert_eq!(whole, scan_parts);
        }
    }
}
