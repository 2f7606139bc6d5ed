//! Gorenstein property of the base rings of SPLP polymatroids: coordinate
//! bounds on the first `k` variables, upper prefix bounds on the rest.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::hilbert_sumset;
use crate::plp::classify::splp_ks;
use crate::plp::PlpSpec;
use crate::vector::BaseSet;

/// `0 <= u_j <= b_j` for `j <= k`, `u_1 + ... + u_i <= beta_i` for
/// `k < i < n`, total `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplpSpec {
    n: usize,
    d: u32,
    bounds: Vec<u32>,
    /// `beta_{k+1}, ..., beta_{n-1}`.
    beta: Vec<u32>,
}

impl SplpSpec {
    pub fn new(n: usize, d: u32, bounds: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        let k = bounds.len();
        if n < 2 || k + 1 >= n || beta.len() != n - 1 - k {
            return Err(Error::InvalidSpec(format!(
                "need n >= 2, k <= n-2 and n-1-k prefix bounds (n={n}, k={k}, {} bounds)",
                beta.len()
            )));
        }
        if bounds.contains(&0) {
            return Err(Error::InvalidSpec("coordinate bounds must be positive".into()));
        }
        if beta[0] == 0 || beta.windows(2).any(|w| w[0] > w[1]) || beta[beta.len() - 1] > d {
            return Err(Error::InvalidSpec("prefix bounds must increase weakly from 1 up to d".into()));
        }
        let s = SplpSpec { n, d, bounds, beta };
        s.to_plp()?;
        Ok(s)
    }

    /// Reads the smallest SPLP shape off a normalized PLP spec.
    pub fn from_plp(spec: &PlpSpec) -> Result<Self> {
        let k = *splp_ks(spec)
            .first()
            .ok_or_else(|| Error::UnsupportedFamily("spec is not of SPLP shape".into()))?;
        let n = spec.n();
        SplpSpec::new(n, spec.d(), spec.b()[..k].to_vec(), spec.beta()[k..n - 1].to_vec())
    }

    pub fn to_plp(&self) -> Result<PlpSpec> {
        let (n, d, k) = (self.n, self.d, self.k());
        let b: Vec<u32> = (0..n).map(|i| if i < k { self.bounds[i].min(d) } else { d }).collect();
        let beta: Vec<u32> = (0..n)
            .map(|i| if i < k { self.beta[0] } else if i < n - 1 { self.beta[i - k] } else { d })
            .collect();
        let mut alpha = vec![0; n];
        alpha[n - 1] = d;
        PlpSpec::new(vec![0; n], b, alpha, beta)
    }

    pub fn k(&self) -> usize {
        self.bounds.len()
    }

    /// 1-based upper prefix bound for `k < i < n`.
    fn beta_at(&self, i: usize) -> u32 {
        self.beta[i - self.k() - 1]
    }
}

/// Outcome of the criterion, with every quantity it compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    /// The common integer value when Gorenstein.
    pub ratio: Option<u32>,
    /// `(label, numerator, denominator)`.
    pub quantities: Vec<(String, u32, u32)>,
}

impl fmt::Display for GorensteinVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio {
            Some(r) => write!(f, "gorenstein (ratio {r})")?,
            None => write!(f, "not gorenstein")?,
        }
        for (label, p, q) in &self.quantities {
            write!(f, "\n  {label} = {p}/{q}")?;
        }
        Ok(())
    }
}

/// The base ring is Gorenstein iff `(i+1)/beta_i` over jumps `beta_i < beta_{i+1}`
/// with `k < i < n-1`, `2/b_j` over bounds `b_j < beta_{k+1}`, and
/// `n/beta_{n-1}` all equal one positive integer.
pub fn gorenstein_criterion(spec: &SplpSpec) -> GorensteinVerdict {
    let (n, k) = (spec.n, spec.k());
    let mut q = Vec::new();
    for i in k + 1..n.saturating_sub(1) {
        if spec.beta_at(i) < spec.beta_at(i + 1) {
            q.push((format!("({})/beta_{i}", i + 1), (i + 1) as u32, spec.beta_at(i)));
        }
    }
    for (j, &bj) in spec.bounds.iter().enumerate() {
        if bj < spec.beta_at(k + 1) {
            q.push((format!("2/b_{}", j + 1), 2, bj));
        }
    }
    q.push((format!("{n}/beta_{}", n - 1), n as u32, spec.beta_at(n - 1)));
    let (_, p0, q0) = q[q.len() - 1].clone();
    let all_equal = q.iter().all(|&(_, p, r)| u64::from(p) * u64::from(q0) == u64::from(p0) * u64::from(r));
    let ratio = (all_equal && p0 % q0 == 0).then_some(p0 / q0);
    GorensteinVerdict { gorenstein: ratio.is_some(), ratio, quantities: q }
}

/// Krull dimension of the toric ring of `b`: one more than the rank of the
/// lattice spanned by differences of base vectors.
pub fn krull_dimension(b: &BaseSet) -> usize {
    let Some(first) = b.vectors().first() else { return 0 };
    let mut rows: Vec<Vec<i64>> = b
        .iter()
        .skip(1)
        .map(|u| u.entries().iter().zip(first.entries()).map(|(&x, &y)| i64::from(x) - i64::from(y)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..b.n() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if rows[r][col] != 0 {
                let (a, c) = (rows[rank][col], rows[r][col]);
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x = *x * a - y * c;
                }
                let g = rows[r].iter().fold(0, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    rows[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank + 1
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// h-vector of the toric ring of `b`, from the Hilbert function
/// `H(m) = |mB|` for `m <= kmax`. Needs `kmax >= dim - 1`; trailing zeros are trimmed.
pub fn h_vector(b: &BaseSet, kmax: u32, max_size: usize) -> Result<Vec<u64>> {
    let dim = krull_dimension(b);
    if (kmax as usize) + 1 < dim {
        return Err(Error::ResourceGuard(format!("kmax {kmax} is below dimension {dim} minus one")));
    }
    let mut hilbert = vec![1i64];
    hilbert.extend(hilbert_sumset(b, kmax, max_size)?.into_iter().map(|x| x as i64));
    // Multiply the series by (1 - t)^dim, truncated at degree kmax.
    for _ in 0..dim {
        for i in (1..hilbert.len()).rev() {
            hilbert[i] -= hilbert[i - 1];
        }
    }
    if let Some(bad) = hilbert.iter().position(|&h| h < 0) {
        return Err(Error::ResourceGuard(format!("negative h-vector entry at degree {bad}; kmax too small")));
    }
    if hilbert.iter().skip(dim.max(1)).any(|&h| h != 0) {
        return Err(Error::ResourceGuard("h-vector does not terminate below the dimension".into()));
    }
    while hilbert.len() > 1 && hilbert[hilbert.len() - 1] == 0 {
        hilbert.pop();
    }
    Ok(hilbert.into_iter().map(|h| h as u64).collect())
}

pub fn is_symmetric(h: &[u64]) -> bool {
    h.iter().eq(h.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::ExponentVector;

    fn h_of(s: &SplpSpec) -> Vec<u64> {
        let b = s.to_plp().unwrap().generate_bases().unwrap();
        let dim = krull_dimension(&b) as u32;
        h_vector(&b, dim + 1, 1_000_000).unwrap()
    }

    #[test]
    fn symmetric_case() {
        let s = SplpSpec::new(4, 2, vec![1], vec![2, 2]).unwrap();
        let v = gorenstein_criterion(&s);
        assert_eq!(v.ratio, Some(2));
        assert!(is_symmetric(&h_of(&s)));
    }

    #[test]
    fn asymmetric_case() {
        let s = SplpSpec::new(4, 2, vec![1], vec![1, 2]).unwrap();
        assert!(!gorenstein_criterion(&s).gorenstein);
        assert!(!is_symmetric(&h_of(&s)));
    }

    #[test]
    fn point_and_simplex() {
        let point = BaseSet::new(2, vec![ExponentVector::new(vec![1, 1])]).unwrap();
        assert_eq!(krull_dimension(&point), 1);
        assert_eq!(h_vector(&point, 2, 100).unwrap(), vec![1]);
        let simplex = PlpSpec::lattice_path(vec![0, 1], vec![1, 1]).unwrap().generate_bases().unwrap();
        assert_eq!(krull_dimension(&simplex), 2);
        assert_eq!(h_vector(&simplex, 3, 100).unwrap(), vec![1]);
    }

    #[test]
    fn segment_of_length_three_is_not_gorenstein() {
        let s = SplpSpec::new(2, 3, vec![], vec![3]).unwrap();
        assert!(!gorenstein_criterion(&s).gorenstein);
        assert_eq!(h_of(&s), vec![1, 2]);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(SplpSpec::new(3, 2, vec![1, 1], vec![]).is_err());
        assert!(SplpSpec::new(3, 2, vec![0], vec![1]).is_err());
        assert!(SplpSpec::new(3, 2, vec![], vec![2, 1]).is_err());
    }
}
