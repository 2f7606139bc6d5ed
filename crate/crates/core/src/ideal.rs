//! Monomial ideals and the brute-force oracles: associated primes by
//! witness search or by localization, depth by linear quotients, and
//! Hilbert functions of base rings by sumset counting.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vector::{polymatroidal_sum, BaseSet, ExponentVector, Subset};

/// Default cap on the witness search space of [`MonomialIdeal::ass_bruteforce`].
pub const DEFAULT_MAX_WITNESSES: usize = 10_000_000;
/// Default cap on the size of a sumset in [`hilbert_sumset`].
pub const DEFAULT_MAX_SUMSET: usize = 5_000_000;

/// A monomial ideal given by its minimal generators, sorted ascending as
/// exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

/// `P_A^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimaryComponent {
    pub support: Subset,
    pub exponent: u32,
}

impl PrimaryComponent {
    pub fn ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::prime_power(n, self.support, self.exponent)
    }
}

impl fmt::Display for PrimaryComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.support, self.exponent)
    }
}

/// Term order used when checking linear quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    RevLex,
}

/// Result of a linear-quotient computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotients {
    pub depth: usize,
    /// Generators in the order used, each with its quotient variable set.
    pub steps: Vec<(ExponentVector, Subset)>,
}

impl MonomialIdeal {
    /// Minimalizes the given generators.
    pub fn new(n: usize, gens: Vec<ExponentVector>) -> Self {
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    pub fn from_base_set(b: &BaseSet) -> Self {
        // Equal-degree generators are automatically minimal.
        MonomialIdeal { n: b.n(), gens: b.vectors().to_vec() }
    }

    /// All monomials of degree `k` in the variables of `a`.
    pub fn prime_power(n: usize, a: Subset, k: u32) -> Self {
        let vars: Vec<usize> = a.iter().collect();
        let mut gens = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(vars: &[usize], left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            match vars {
                [] => {}
                [last] => {
                    cur[*last] = left;
                    out.push(ExponentVector::new(cur.clone()));
                    cur[*last] = 0;
                }
                [first, rest @ ..] => {
                    for x in 0..=left {
                        cur[*first] = x;
                        rec(rest, left - x, cur, out);
                    }
                    cur[*first] = 0;
                }
            }
        }
        rec(&vars, k, &mut cur, &mut gens);
        gens.sort_unstable();
        MonomialIdeal { n, gens }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.modulus() == 0)
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.add(h));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal { n: self.n, gens: vec![ExponentVector::zeros(self.n)] };
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &ExponentVector) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_sub(&g.gcd(m)).expect("gcd divides g"))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Intersection, via pairwise least common multiples.
    pub fn intersect(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    pub fn intersect_all(ideals: &[MonomialIdeal]) -> Option<Self> {
        let (first, rest) = ideals.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, j| acc.intersect(j)))
    }

    /// Image under `x_i -> 1` for `i` outside `a`, still in `n` variables.
    pub fn localize(&self, a: Subset) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| ExponentVector::new((0..self.n).map(|i| if a.contains(i) { g[i] } else { 0 }).collect()))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// The localization at `a` as an ideal in the `|a|` variables of `a`.
    pub fn restrict(&self, a: Subset) -> Self {
        let idx: Vec<usize> = a.iter().collect();
        let gens = self
            .gens
            .iter()
            .map(|g| ExponentVector::new(idx.iter().map(|&i| g[i]).collect()))
            .collect();
        MonomialIdeal::new(idx.len(), gens)
    }

    /// Least common multiple of the generators.
    pub fn lcm(&self) -> ExponentVector {
        self.gens
            .iter()
            .fold(ExponentVector::zeros(self.n), |acc, g| acc.lcm(g))
    }

    /// Smallest generator degree.
    pub fn min_degree(&self) -> u32 {
        self.gens.iter().map(ExponentVector::modulus).min().unwrap_or(0)
    }

    /// Associated primes by witness search: `P_A` is associated iff some
    /// standard monomial `w` dividing the lcm of the generators has
    /// `(I : w) = P_A`.
    pub fn ass_bruteforce(&self, max_witnesses: usize) -> Result<Vec<Subset>> {
        if self.gens.is_empty() || self.is_unit() {
            return Ok(Vec::new());
        }
        let lcm = self.lcm();
        let mut found = HashSet::new();
        let mut visited = 0usize;
        let mut w = vec![0u32; self.n];
        self.witness_walk(0, &lcm, &mut w, &mut visited, max_witnesses, &mut found)?;
        let mut out: Vec<Subset> = found.into_iter().collect();
        out.sort();
        Ok(out)
    }

    fn witness_walk(
        &self,
        i: usize,
        lcm: &ExponentVector,
        w: &mut Vec<u32>,
        visited: &mut usize,
        max: usize,
        found: &mut HashSet<Subset>,
    ) -> Result<()> {
        if i == self.n {
            *visited += 1;
            if *visited > max {
                return Err(Error::ResourceGuard(format!("more than {max} witness candidates")));
            }
            if let Some(a) = self.colon_prime(w) {
                found.insert(a);
            }
            return Ok(());
        }
        for x in 0..=lcm[i] {
            w[i] = x;
            // Later coordinates are still zero, so this is the smallest
            // monomial of the subtree.
            if self.contains_slice(w) {
                break;
            }
            self.witness_walk(i + 1, lcm, w, visited, max, found)?;
        }
        w[i] = 0;
        Ok(())
    }

    fn contains_slice(&self, w: &[u32]) -> bool {
        self.gens.iter().any(|g| g.entries().iter().zip(w).all(|(a, b)| a <= b))
    }

    /// For a standard monomial `w`, returns `A` when `(I : w) = P_A`.
    fn colon_prime(&self, w: &[u32]) -> Option<Subset> {
        let mut a = Subset::EMPTY;
        let mut probe = w.to_vec();
        for i in 0..self.n {
            probe[i] += 1;
            if self.contains_slice(&probe) {
                a = a.insert(i);
            }
            probe[i] -= 1;
        }
        if a.is_empty() {
            return None;
        }
        // Every generator of the colon must be divisible by some x_i, i in A.
        let ok = self
            .gens
            .iter()
            .all(|g| a.iter().any(|i| g[i] > w[i]));
        ok.then_some(a)
    }

    /// Associated primes via localization: `P_A` is associated iff
    /// `S(A)/I(A)` has depth zero. Depth comes from linear quotients, so
    /// this applies to ideals with linear quotients in lex order at every
    /// localization, such as polymatroidal ideals.
    pub fn ass_by_localization(&self) -> Result<Vec<Subset>> {
        let mut out = Vec::new();
        for mask in 1..(1u64 << self.n) {
            let a = Subset(mask);
            let local = self.restrict(a);
            if local.is_unit() {
                continue;
            }
            if local.linear_quotient_depth(TermOrder::Lex)?.depth == 0 {
                out.push(a);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Orders the generators decreasingly in the given term order, checks
    /// that each colon `(m_1, ..., m_{q-1}) : m_q` is generated by variables,
    /// and returns `depth S/I = n - 1 - max_q |set_q|`.
    pub fn linear_quotient_depth(&self, order: TermOrder) -> Result<LinearQuotients> {
        if self.gens.is_empty() || self.is_unit() {
            return Err(Error::InvalidSpec("depth of the zero ring is undefined".into()));
        }
        let mut gens = self.gens.clone();
        gens.sort_by(|u, v| term_cmp(v, u, order));
        let mut steps = Vec::with_capacity(gens.len());
        let mut best = 0;
        for q in 0..gens.len() {
            let mq = &gens[q];
            let mut vars = Subset::EMPTY;
            for mp in &gens[..q] {
                let quo = mp.checked_sub(&mp.gcd(mq)).expect("gcd divides");
                if quo.modulus() == 1 {
                    vars = vars.insert(quo.support().iter().next().expect("one variable"));
                }
            }
            for mp in &gens[..q] {
                if !vars.iter().any(|i| mp[i] > mq[i]) {
                    return Err(Error::NotLinearQuotients { index: q });
                }
            }
            best = best.max(vars.len());
            steps.push((mq.clone(), vars));
        }
        Ok(LinearQuotients { depth: self.n - 1 - best, steps })
    }
}

/// Compares equal-degree monomials (falls back to degree first).
pub fn term_cmp(u: &ExponentVector, v: &ExponentVector, order: TermOrder) -> Ordering {
    u.modulus().cmp(&v.modulus()).then_with(|| match order {
        TermOrder::Lex => u.entries().cmp(v.entries()),
        TermOrder::RevLex => {
            // Larger when the last differing exponent is smaller.
            for i in (0..u.len()).rev() {
                if u[i] != v[i] {
                    return v[i].cmp(&u[i]);
                }
            }
            Ordering::Equal
        }
    })
}

fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable_by(|a, b| a.modulus().cmp(&b.modulus()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {:?})", self.n, self.gens)
    }
}

/// `|B|, |B+B|, ..., |kmax-fold sumset|`.
pub fn hilbert_sumset(b: &BaseSet, kmax: u32, max_size: usize) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(kmax as usize);
    let mut acc = b.clone();
    for k in 1..=kmax {
        if k > 1 {
            acc = polymatroidal_sum(&acc, b)?;
        }
        if acc.len() > max_size {
            return Err(Error::ResourceGuard(format!("sumset of size {} exceeds {max_size}", acc.len())));
        }
        out.push(acc.len());
    }
    Ok(out)
}
