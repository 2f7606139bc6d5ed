//! PLP specifications: coordinate bounds plus prefix-sum windows.

use std::fmt;

use crate::error::{Error, Result};
use crate::vector::{BaseSet, ExponentVector};

/// Default cap on the number of bases an enumeration may produce.
pub const DEFAULT_MAX_BASES: usize = 2_000_000;

/// The inequality system `a_i <= u_i <= b_i`, `alpha_i <= u_1+...+u_i <= beta_i`
/// with `alpha_n = beta_n = d`.
///
/// Entries of `b` above `d` are stored as `d`; the two are equivalent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlpSpec {
    n: usize,
    d: u32,
    a: Vec<u32>,
    b: Vec<u32>,
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl PlpSpec {
    /// Validates the shape invariants and checks that at least one base exists.
    pub fn new(a: Vec<u32>, b: Vec<u32>, alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidSpec("ground set is empty".into()));
        }
        for (name, v) in [("b", &b), ("alpha", &alpha), ("beta", &beta)] {
            if v.len() != n {
                return Err(Error::InvalidSpec(format!(
                    "`{name}` has length {}, expected {n}",
                    v.len()
                )));
            }
        }
        let d = beta[n - 1];
        if alpha[n - 1] != d {
            return Err(Error::InvalidSpec(format!(
                "alpha_n = {} must equal beta_n = {d}",
                alpha[n - 1]
            )));
        }
        for i in 0..n {
            if a[i] > b[i] {
                return Err(Error::InvalidSpec(format!("a_{0} > b_{0}", i + 1)));
            }
            if alpha[i] > beta[i] {
                return Err(Error::InvalidSpec(format!("alpha_{0} > beta_{0}", i + 1)));
            }
            if i > 0 && alpha[i - 1] > alpha[i] {
                return Err(Error::InvalidSpec(format!("alpha decreases at index {}", i + 1)));
            }
            if i > 0 && beta[i - 1] > beta[i] {
                return Err(Error::InvalidSpec(format!("beta decreases at index {}", i + 1)));
            }
        }
        let b = b.into_iter().map(|x| x.min(d)).collect();
        let spec = PlpSpec { n, d, a, b, alpha, beta };
        if spec.first_base().is_none() {
            return Err(Error::Infeasible);
        }
        Ok(spec)
    }

    /// An LP spec: no coordinate bounds.
    pub fn lattice_path(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        let n = alpha.len();
        let d = beta.last().copied().unwrap_or(0);
        PlpSpec::new(vec![0; n], vec![d; n], alpha, beta)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn d(&self) -> u32 {
        self.d
    }
    pub fn a(&self) -> &[u32] {
        &self.a
    }
    pub fn b(&self) -> &[u32] {
        &self.b
    }
    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }
    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn is_normalized(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Membership test against the inequalities.
    pub fn contains(&self, u: &ExponentVector) -> bool {
        if u.len() != self.n {
            return false;
        }
        let mut p = 0;
        for i in 0..self.n {
            if u[i] < self.a[i] || u[i] > self.b[i] {
                return false;
            }
            p += u[i];
            if p < self.alpha[i] || p > self.beta[i] {
                return false;
            }
        }
        true
    }

    fn first_base(&self) -> Option<ExponentVector> {
        let mut found = None;
        self.walk(&mut |u| {
            found = Some(ExponentVector::new(u.to_vec()));
            false
        });
        found
    }

    /// Depth-first walk over all bases in increasing lexicographic order.
    /// The callback returns `false` to stop early.
    fn walk(&self, visit: &mut dyn FnMut(&[u32]) -> bool) {
        let n = self.n;
        // Remaining capacity after position i, ignoring prefix windows.
        let mut lo_rest = vec![0u32; n + 1];
        let mut hi_rest = vec![0u32; n + 1];
        for i in (0..n).rev() {
            lo_rest[i] = lo_rest[i + 1] + self.a[i];
            hi_rest[i] = hi_rest[i + 1] + self.b[i];
        }
        let mut u = vec![0u32; n];
        self.descend(0, 0, &mut u, &lo_rest, &hi_rest, visit);
    }

    fn descend(
        &self,
        i: usize,
        prefix: u32,
        u: &mut Vec<u32>,
        lo_rest: &[u32],
        hi_rest: &[u32],
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if i == self.n {
            return visit(u);
        }
        let lo = self.a[i].max(self.alpha[i].saturating_sub(prefix));
        let Some(room) = self.beta[i].checked_sub(prefix) else {
            return true;
        };
        let hi = self.b[i].min(room);
        for x in lo..=hi {
            let p = prefix + x;
            if p + lo_rest[i + 1] > self.d || p + hi_rest[i + 1] < self.d {
                continue;
            }
            u[i] = x;
            if !self.descend(i + 1, p, u, lo_rest, hi_rest, visit) {
                return false;
            }
        }
        true
    }

    /// All bases, in increasing lexicographic order.
    pub fn generate_bases(&self) -> Result<BaseSet> {
        self.generate_bases_bounded(DEFAULT_MAX_BASES)
    }

    pub fn generate_bases_bounded(&self, max_bases: usize) -> Result<BaseSet> {
        let mut out = Vec::new();
        let mut overflow = false;
        self.walk(&mut |u| {
            if out.len() == max_bases {
                overflow = true;
                return false;
            }
            out.push(ExponentVector::new(u.to_vec()));
            true
        });
        if overflow {
            return Err(Error::ResourceGuard(format!(
                "more than {max_bases} bases"
            )));
        }
        if out.is_empty() {
            return Err(Error::Infeasible);
        }
        Ok(BaseSet::from_sorted_unchecked(self.n, self.d, out))
    }

    /// Splits off the forced monomial `x^a`: returns `a` and an equivalent
    /// spec with zero lower coordinate bounds, whose bases are those of
    /// `self` minus `a`.
    pub fn normalize(&self) -> (ExponentVector, PlpSpec) {
        let n = self.n;
        let shift: u32 = self.a.iter().sum();
        let d = self.d - shift;
        let acc: Vec<u32> = self
            .a
            .iter()
            .scan(0, |s, &x| {
                *s += x;
                Some(*s)
            })
            .collect();
        let b: Vec<u32> = (0..n).map(|i| (self.b[i] - self.a[i]).min(d)).collect();
        let mut alpha = vec![0u32; n];
        let mut running = 0;
        for i in 0..n {
            running = running.max(self.alpha[i].saturating_sub(acc[i]));
            alpha[i] = running.min(d);
        }
        let mut beta = vec![0u32; n];
        let mut running = d;
        for i in (0..n).rev() {
            // Each prefix of the shifted vector is at most acc-adjusted beta,
            // and at most every later such bound.
            running = running.min(self.beta[i].saturating_sub(acc[i]));
            beta[i] = running;
        }
        alpha[n - 1] = d;
        beta[n - 1] = d;
        let spec = PlpSpec {
            n,
            d,
            a: vec![0; n],
            b,
            alpha,
            beta,
        };
        debug_assert!(spec.alpha.iter().zip(&spec.beta).all(|(x, y)| x <= y));
        (ExponentVector::new(self.a.clone()), spec)
    }

    /// The spec of type `(ka, kb | k alpha, k beta)`.
    pub fn power(&self, k: u32) -> PlpSpec {
        assert!(k >= 1, "power needs k >= 1");
        let scale = |v: &[u32]| v.iter().map(|x| x * k).collect::<Vec<_>>();
        PlpSpec {
            n: self.n,
            d: self.d * k,
            a: scale(&self.a),
            b: scale(&self.b),
            alpha: scale(&self.alpha),
            beta: scale(&self.beta),
        }
    }

    /// Writes a base of the `k`-th power as a sum of `k` bases of `self`
    /// by splitting each prefix sum as `k * s + t` with `0 <= t < k`: the
    /// first `t` parts get prefix `s + 1`, the rest get `s`.
    pub fn split_power_generator(&self, u: &ExponentVector, k: u32) -> Result<Vec<ExponentVector>> {
        if !self.power(k).contains(u) {
            return Err(Error::NotABase(format!("{u} is not a base of the power {k}")));
        }
        let n = self.n;
        let mut parts = vec![vec![0u32; n]; k as usize];
        let mut prev = vec![0u32; k as usize];
        let mut p = 0;
        for i in 0..n {
            p += u[i];
            let (s, t) = (p / k, p % k);
            for (j, part) in parts.iter_mut().enumerate() {
                let cur = if (j as u32) < t { s + 1 } else { s };
                part[i] = cur - prev[j];
                prev[j] = cur;
            }
        }
        let parts: Vec<ExponentVector> = parts.into_iter().map(ExponentVector::new).collect();
        for v in &parts {
            if !self.contains(v) {
                return Err(Error::NotABase(format!("split part {v} left the spec")));
            }
        }
        Ok(parts)
    }
}

impl fmt::Debug for PlpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PlpSpec {{ n: {}, d: {}, a: {:?}, b: {:?}, alpha: {:?}, beta: {:?} }}",
            self.n, self.d, self.a, self.b, self.alpha, self.beta
        )
    }
}
