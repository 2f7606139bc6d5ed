//! Ground-set rank functions and their closed, inseparable subsets.

use crate::error::{Error, Result};
use crate::vector::{BaseSet, Subset};

/// Default cap on the ground-set size for operations that visit all subsets.
pub const DEFAULT_MAX_SUBSET_N: usize = 16;

/// `rho(A) = max { u(A) : u in B }`, tabulated over all subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    n: usize,
    values: Vec<u32>,
}

impl RankFunction {
    /// Builds from a table indexed by subset mask; validates the rank axioms.
    pub fn from_table(n: usize, values: Vec<u32>) -> Result<Self> {
        if values.len() != 1 << n {
            return Err(Error::InvalidSpec(format!(
                "rank table has {} entries, expected {}",
                values.len(),
                1usize << n
            )));
        }
        let rho = RankFunction { n, values };
        rho.check_axioms()?;
        Ok(rho)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Subset) -> u32 {
        self.values[a.0 as usize]
    }

    /// Checks `rho(empty) = 0`, monotonicity and submodularity. The local
    /// forms (one or two added elements) are equivalent to the global ones.
    pub fn check_axioms(&self) -> Result<()> {
        if self.values[0] != 0 {
            return Err(Error::InvalidSpec("rank of the empty set is not 0".into()));
        }
        let n = self.n;
        for mask in 0..(1u64 << n) {
            let a = Subset(mask);
            for i in (0..n).filter(|&i| !a.contains(i)) {
                let ai = a.insert(i);
                if self.get(ai) < self.get(a) {
                    return Err(Error::InvalidSpec(format!("rank decreases from {a} to {ai}")));
                }
                for j in (i + 1..n).filter(|&j| !a.contains(j)) {
                    let aj = a.insert(j);
                    if self.get(ai) + self.get(aj) < self.get(ai.insert(j)) + self.get(a) {
                        return Err(Error::InvalidSpec(format!(
                            "rank is not submodular at {ai}, {aj}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// No strict superset has the same rank.
    pub fn is_closed(&self, a: Subset) -> bool {
        (0..self.n)
            .filter(|&i| !a.contains(i))
            .all(|i| self.get(a) < self.get(a.insert(i)))
    }

    /// No split into two non-empty parts is additive.
    pub fn is_inseparable(&self, a: Subset) -> bool {
        let full = a.0;
        // Walk proper non-empty submasks containing the lowest element, so each
        // unordered split is seen once.
        let low = full & full.wrapping_neg();
        let mut sub = (full - 1) & full;
        while sub != 0 {
            if sub & low != 0 {
                let rest = Subset(full & !sub);
                if self.get(Subset(sub)) + self.get(rest) == self.get(a) {
                    return false;
                }
            }
            sub = (sub - 1) & full;
        }
        true
    }
}

fn guard(n: usize, max_n: usize) -> Result<()> {
    if n > max_n || n > 63 {
        return Err(Error::ResourceGuard(format!(
            "subset enumeration over n = {n} exceeds the bound {max_n}"
        )));
    }
    Ok(())
}

/// Rank function of the discrete polymatroid with base set `b`.
pub fn rank_function(b: &BaseSet) -> Result<RankFunction> {
    rank_function_bounded(b, DEFAULT_MAX_SUBSET_N)
}

pub fn rank_function_bounded(b: &BaseSet, max_n: usize) -> Result<RankFunction> {
    let n = b.n();
    guard(n, max_n)?;
    let size = 1usize << n;
    let mut values = vec![0u32; size];
    for u in b {
        // Subset sums via the lowest set bit recurrence.
        let mut sums = vec![0u32; size];
        for mask in 1..size {
            let i = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + u[i];
            values[mask] = values[mask].max(sums[mask]);
        }
    }
    Ok(RankFunction { n, values })
}

/// All non-empty subsets that are both closed and inseparable, in canonical
/// order.
pub fn closed_inseparable_subsets(rho: &RankFunction) -> Result<Vec<Subset>> {
    closed_inseparable_subsets_bounded(rho, DEFAULT_MAX_SUBSET_N)
}

pub fn closed_inseparable_subsets_bounded(rho: &RankFunction, max_n: usize) -> Result<Vec<Subset>> {
    guard(rho.n, max_n)?;
    let mut out: Vec<Subset> = (1..(1u64 << rho.n))
        .map(Subset)
        .filter(|&a| rho.is_closed(a) && rho.is_inseparable(a))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::ExponentVector;

    fn set(n: usize, vs: &[&[u32]]) -> BaseSet {
        BaseSet::new(n, vs.iter().map(|v| ExponentVector::new(v.to_vec())).collect()).unwrap()
    }

    #[test]
    fn singleton_base_set() {
        let rho = rank_function(&set(2, &[&[1, 1]])).unwrap();
        assert_eq!(rho.get(Subset::singleton(0)), 1);
        assert_eq!(rho.get(Subset::singleton(1)), 1);
        assert_eq!(rho.get(Subset::full(2)), 2);
        let ci = closed_inseparable_subsets(&rho).unwrap();
        assert_eq!(ci, vec![Subset::singleton(0), Subset::singleton(1)]);
    }

    #[test]
    fn transversal_example_ranks() {
        let b = set(4, &[&[1, 1, 0, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let rho = rank_function(&b).unwrap();
        rho.check_axioms().unwrap();
        let a13 = Subset::from_indices([0, 2]);
        let a24 = Subset::from_indices([1, 3]);
        assert_eq!(rho.get(a13), 1);
        let ci = closed_inseparable_subsets(&rho).unwrap();
        assert!(ci.contains(&a13));
        assert!(ci.contains(&a24));
    }

    #[test]
    fn guard_rejects_large_ground_sets() {
        let b = set(3, &[&[1, 0, 0]]);
        assert!(matches!(rank_function_bounded(&b, 2), Err(Error::ResourceGuard(_))));
    }

    #[test]
    fn from_table_rejects_non_monotone() {
        assert!(RankFunction::from_table(1, vec![0, 0]).is_ok());
        assert!(RankFunction::from_table(1, vec![1, 1]).is_err());
        assert!(RankFunction::from_table(2, vec![0, 2, 2, 1]).is_err());
    }
}
