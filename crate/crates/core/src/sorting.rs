//! Sign sequences, the sorting operator, and the degree-two toric checks
//! built on it.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::vector::{k_fold_sumset, BaseSet, ExponentVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The signs of the non-zero entries of `u - v`, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignSequence(pub Vec<Sign>);

impl SignSequence {
    /// `+, -, +, -, ...` (including the empty sequence).
    pub fn is_alternating(&self) -> bool {
        self.0.iter().enumerate().all(|(k, s)| {
            *s == if k % 2 == 0 { Sign::Plus } else { Sign::Minus }
        })
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|s| if *s == Sign::Plus { "+" } else { "-" })
            .collect();
        f.write_str(&parts.join(","))
    }
}

fn check_moduli(u: &ExponentVector, v: &ExponentVector) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch { left: u.len(), right: v.len() });
    }
    if u.modulus() != v.modulus() {
        return Err(Error::ModulusMismatch { left: u.modulus(), right: v.modulus() });
    }
    Ok(())
}

pub fn sign_sequence(u: &ExponentVector, v: &ExponentVector) -> Result<SignSequence> {
    check_moduli(u, v)?;
    let mut signs = Vec::new();
    for i in 0..u.len() {
        match i64::from(u[i]) - i64::from(v[i]) {
            0 => {}
            1 => signs.push(Sign::Plus),
            -1 => signs.push(Sign::Minus),
            _ => return Err(Error::NotAdjacent { index: i }),
        }
    }
    Ok(SignSequence(signs))
}

/// Splits the sorted index multiset of `t^u t^v` into odd and even positions.
pub fn sort_pair(u: &ExponentVector, v: &ExponentVector) -> Result<(ExponentVector, ExponentVector)> {
    check_moduli(u, v)?;
    Ok(sort_sum(&u.add(v)))
}

/// The sorted pair depends only on `w = u + v`.
fn sort_sum(w: &ExponentVector) -> (ExponentVector, ExponentVector) {
    let mut first = Vec::with_capacity(w.len());
    let mut second = Vec::with_capacity(w.len());
    let mut start = 0u32;
    for &len in w.entries() {
        // 0-based positions start..start+len; the even ones go to the first
        // vector.
        let end = start + len;
        let evens = end.div_ceil(2) - start.div_ceil(2);
        first.push(evens);
        second.push(len - evens);
        start = end;
    }
    (ExponentVector::new(first), ExponentVector::new(second))
}

fn is_sorted_pair(u: &ExponentVector, v: &ExponentVector) -> bool {
    let (a, b) = sort_sum(&u.add(v));
    &a == u && &b == v
}

/// `None` when every sorted pair stays in `B`, else the least failing pair.
pub fn is_sortable(b: &BaseSet) -> Option<(ExponentVector, ExponentVector)> {
    for u in b {
        for v in b {
            let (a, c) = sort_sum(&u.add(v));
            if !b.contains(&a) || !b.contains(&c) {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}

/// Checks that each fiber `{ {u, v} : u + v = w }` is connected under single
/// symmetric-exchange moves. Returns `None` on success, otherwise the sum
/// `w` of the least disconnected fiber.
pub fn exchange_fiber_connected(b: &BaseSet) -> Option<ExponentVector> {
    let n = b.n();
    let vs = b.vectors();
    // Unordered pairs with the smaller vector first, grouped by sum.
    let mut fibers: HashMap<ExponentVector, Vec<(usize, usize)>> = HashMap::new();
    for (p, u) in vs.iter().enumerate() {
        for (q, v) in vs.iter().enumerate().skip(p) {
            fibers.entry(u.add(v)).or_default().push((p, q));
        }
    }
    let mut sums: Vec<_> = fibers.keys().cloned().collect();
    sums.sort_unstable();
    for w in sums {
        let nodes = &fibers[&w];
        if nodes.len() <= 1 {
            continue;
        }
        let index: HashMap<(usize, usize), usize> =
            nodes.iter().enumerate().map(|(k, &pq)| (pq, k)).collect();
        let mut dsu = Dsu::new(nodes.len());
        for (k, &(p, q)) in nodes.iter().enumerate() {
            let (u, v) = (&vs[p], &vs[q]);
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let (Some(u2), Some(v2)) = (u.shift(i, j), v.shift(j, i)) else {
                        continue;
                    };
                    let (Ok(p2), Ok(q2)) = (vs.binary_search(&u2), vs.binary_search(&v2)) else {
                        continue;
                    };
                    let key = (p2.min(q2), p2.max(q2));
                    dsu.union(k, index[&key]);
                }
            }
        }
        let root = dsu.find(0);
        if (1..nodes.len()).any(|k| dsu.find(k) != root) {
            return Some(w);
        }
    }
    None
}

/// Compares the number of sorted `k`-tuples with the size of the `k`-fold
/// sumset. A tuple is sorted when each pair `(u_a, u_b)`, `a < b`, is sorted.
pub fn sorted_count_equals_sumset(b: &BaseSet, k: u32) -> Result<bool> {
    let (sorted, sumset) = sorted_count_and_sumset(b, k)?;
    Ok(sorted == sumset)
}

/// Both sides of [`sorted_count_equals_sumset`].
pub fn sorted_count_and_sumset(b: &BaseSet, k: u32) -> Result<(usize, usize)> {
    if !(1..=3).contains(&k) {
        return Err(Error::ResourceGuard(format!("sorted chains only for 1 <= k <= 3, got {k}")));
    }
    let vs = b.vectors();
    let sorted = match k {
        1 => vs.len(),
        2 => vs
            .iter()
            .flat_map(|u| vs.iter().map(move |v| (u, v)))
            .filter(|(u, v)| is_sorted_pair(u, v))
            .count(),
        _ => {
            let mut count = 0;
            for u in vs {
                for v in vs.iter().filter(|v| is_sorted_pair(u, v)) {
                    count += vs
                        .iter()
                        .filter(|w| is_sorted_pair(u, w) && is_sorted_pair(v, w))
                        .count();
                }
            }
            count
        }
    };
    Ok((sorted, k_fold_sumset(b, k).len()))
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}
