//! Lattice paths on the `n x r` grid and interval-product presentations.

use std::fmt;

use crate::error::{Error, Result};
use crate::plp::spec::PlpSpec;
use crate::vector::{k_fold_sumset, polymatroidal_sum, BaseSet, ExponentVector};

/// A north/east path from `(1, 1)` to `(n, r)`, stored by the 1-based
/// indices of its north steps among the `n + r - 2` steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    n: usize,
    r: usize,
    north: Vec<usize>,
}

impl LatticePath {
    pub fn from_north_steps(n: usize, r: usize, mut north: Vec<usize>) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::InvalidPath("grid sides must be positive".into()));
        }
        north.sort_unstable();
        north.dedup();
        let steps = n + r - 2;
        if north.len() != r - 1 {
            return Err(Error::InvalidPath(format!(
                "expected {} north steps, got {}",
                r - 1,
                north.len()
            )));
        }
        if north.iter().any(|&p| p == 0 || p > steps) {
            return Err(Error::InvalidPath(format!("step index outside [1, {steps}]")));
        }
        Ok(LatticePath { n, r, north })
    }

    /// Builds from the horizontal-coordinate vector `E_sigma` of length
    /// `n - 1`, which must be nondecreasing with entries in `[1, r]`.
    pub fn from_east_vector(n: usize, r: usize, e: &[usize]) -> Result<Self> {
        if e.len() + 1 != n {
            return Err(Error::InvalidPath(format!("E vector needs {} entries", n - 1)));
        }
        if e.windows(2).any(|w| w[0] > w[1]) || e.iter().any(|&x| x == 0 || x > r) {
            return Err(Error::InvalidPath("E vector must be nondecreasing within [1, r]".into()));
        }
        let east: Vec<usize> = e.iter().enumerate().map(|(i, &x)| x + i).collect();
        let north = (1..=n + r - 2).filter(|p| !east.contains(p)).collect();
        LatticePath::from_north_steps(n, r, north)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn north_steps(&self) -> &[usize] {
        &self.north
    }

    pub fn east_steps(&self) -> Vec<usize> {
        (1..=self.n + self.r - 2)
            .filter(|p| self.north.binary_search(p).is_err())
            .collect()
    }

    /// Row of each east step: `(a_1, a_2 - 1, ..., a_{n-1} - (n-2))`.
    pub fn east_vector(&self) -> Vec<usize> {
        self.east_steps().iter().enumerate().map(|(i, a)| a - i).collect()
    }

    /// Column of each north step: `(b_1, b_2 - 1, ..., b_{r-1} - (r-2))`.
    pub fn north_vector(&self) -> Vec<usize> {
        self.north.iter().enumerate().map(|(i, b)| b - i).collect()
    }

    /// Exponent of `x_i` = number of north steps on the line `x = i`.
    pub fn monomial(&self) -> ExponentVector {
        let mut u = vec![0u32; self.n];
        for col in self.north_vector() {
            u[col - 1] += 1;
        }
        ExponentVector::new(u)
    }

    /// Prefix sums of the monomial: `E_sigma - 1` entrywise, then `r - 1`.
    pub fn prefix_sums(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.east_vector().iter().map(|&e| (e - 1) as u32).collect();
        p.push((self.r - 1) as u32);
        p
    }
}

/// The LP spec of all monomials of paths lying between `lower` and `upper`
/// (`upper` has the larger prefix sums).
pub fn spec_between_paths(lower: &LatticePath, upper: &LatticePath) -> Result<PlpSpec> {
    if (lower.n, lower.r) != (upper.n, upper.r) {
        return Err(Error::InvalidPath("paths live on different grids".into()));
    }
    PlpSpec::lattice_path(lower.prefix_sums(), upper.prefix_sums())
}

/// A product of interval primes `P_[s_1,t_1] ... P_[s_d,t_d]` in `n`
/// variables; endpoints are 1-based and inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransversalPresentation {
    n: usize,
    intervals: Vec<(usize, usize)>,
}

impl TransversalPresentation {
    pub fn new(n: usize, intervals: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &intervals {
            if s == 0 || s > t || t > n {
                return Err(Error::InvalidSpec(format!("interval [{s},{t}] is not inside [1,{n}]")));
            }
        }
        Ok(TransversalPresentation { n, intervals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn degree(&self) -> usize {
        self.intervals.len()
    }

    /// Exponents of the minimal generators of the product.
    pub fn base_set(&self) -> BaseSet {
        let mut acc = BaseSet::new(self.n, vec![ExponentVector::zeros(self.n)]).expect("zero vector");
        for &(s, t) in &self.intervals {
            let simplex = BaseSet::new(self.n, (s - 1..t).map(|i| ExponentVector::unit(self.n, i)).collect())
                .expect("non-empty interval");
            acc = polymatroidal_sum(&acc, &simplex).expect("same ground set");
        }
        acc
    }

    /// Reorders so both endpoint sequences are nondecreasing and reads off
    /// the prefix windows: `alpha_i = #{t_j <= i}`, `beta_i = #{s_j <= i}`.
    pub fn to_lp(&self) -> Result<PlpSpec> {
        let mut iv = self.intervals.clone();
        iv.sort_unstable();
        if iv.windows(2).any(|w| w[0].1 > w[1].1) {
            return Err(Error::NotLpOrderable);
        }
        let alpha = (1..=self.n).map(|i| iv.iter().filter(|p| p.1 <= i).count() as u32).collect();
        let beta = (1..=self.n).map(|i| iv.iter().filter(|p| p.0 <= i).count() as u32).collect();
        PlpSpec::lattice_path(alpha, beta)
    }

    /// The interval product of an LP spec: the `j`-th factor runs from the
    /// first index where the upper window reaches `j` to the first index
    /// where the lower window does.
    pub fn from_lp(spec: &PlpSpec) -> Result<Self> {
        let d = spec.d();
        if !spec.is_normalized() || spec.b().iter().any(|&x| x < d) {
            return Err(Error::UnsupportedFamily("spec has coordinate bounds, not LP".into()));
        }
        let first_reaching = |w: &[u32], j: u32| w.iter().position(|&x| x >= j).expect("w_n = d") + 1;
        let intervals = (1..=d)
            .map(|j| (first_reaching(spec.beta(), j), first_reaching(spec.alpha(), j)))
            .collect();
        TransversalPresentation::new(spec.n(), intervals)
    }
}

impl fmt::Display for TransversalPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, t)) in self.intervals.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "P[{s},{t}]")?;
        }
        Ok(())
    }
}

/// Bases of the `k`-th power of an interval product.
pub fn transversal_power(t: &TransversalPresentation, k: u32) -> BaseSet {
    k_fold_sumset(&t.base_set(), k)
}
