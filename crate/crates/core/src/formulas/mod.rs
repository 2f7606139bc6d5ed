//! Closed-form depth, associated primes, stability indices and primary
//! decompositions of PLP ideals, dispatched on the spec's family.

mod ass;
mod depth;
mod stability;

pub use ass::{ass_formula, ass_infinity, primary_decomposition, AssEntry, AssReport, Clause};
pub use depth::{depth_formula, depth_formula_bounded, n_of, DepthReport, RightParams};
pub use stability::{astab_formula, dstab_formula, empirical_astab, empirical_dstab, Empirical};

use std::fmt;

use crate::plp::classify::{is_lp, is_veronese, left_ks, right_ks};
use crate::plp::PlpSpec;
use crate::vector::Subset;

/// The family whose formulas were used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaFamily {
    Left(usize),
    Right(usize),
    Lp,
    Veronese,
    Generic,
}

impl fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaFamily::Left(k) => write!(f, "left(k={k})"),
            FormulaFamily::Right(k) => write!(f, "right(k={k})"),
            FormulaFamily::Lp => write!(f, "LP"),
            FormulaFamily::Veronese => write!(f, "Veronese"),
            FormulaFamily::Generic => write!(f, "generic"),
        }
    }
}

/// Picks the most specific family of a normalized spec: left, then right,
/// then LP, then Veronese. The smallest witness `k` is used.
pub fn dispatch(s: &PlpSpec) -> FormulaFamily {
    if let Some(&k) = left_ks(s).first() {
        FormulaFamily::Left(k)
    } else if let Some(&k) = right_ks(s).first() {
        FormulaFamily::Right(k)
    } else if is_lp(s) {
        FormulaFamily::Lp
    } else if is_veronese(s) {
        FormulaFamily::Veronese
    } else {
        FormulaFamily::Generic
    }
}

/// A normalized spec restricted to the variables occurring in some base.
pub(crate) struct Reduced {
    pub spec: PlpSpec,
    /// Original 0-based index of each kept variable.
    pub keep: Vec<usize>,
}

impl Reduced {
    /// Number of variables that never occur.
    pub fn absent(&self, n: usize) -> usize {
        n - self.keep.len()
    }

    pub fn lift(&self, s: Subset) -> Subset {
        Subset::from_indices(s.iter().map(|i| self.keep[i]))
    }
}

/// Drops the variables of a normalized spec that vanish on every base,
/// merging their prefix windows into the preceding kept position.
/// Returns `None` for the unit ideal (`d = 0`).
pub(crate) fn reduce(s: &PlpSpec) -> Option<Reduced> {
    let n = s.n();
    let occurs = |i: usize| {
        let mut a = vec![0; n];
        a[i] = 1;
        s.b()[i] > 0 && PlpSpec::new(a, s.b().to_vec(), s.alpha().to_vec(), s.beta().to_vec()).is_ok()
    };
    let keep: Vec<usize> = (0..n).filter(|&i| occurs(i)).collect();
    if keep.is_empty() {
        return None;
    }
    if keep.len() == n {
        return Some(Reduced { spec: s.clone(), keep });
    }
    let m = keep.len();
    let mut alpha = Vec::with_capacity(m);
    let mut beta = Vec::with_capacity(m);
    for (j, &i) in keep.iter().enumerate() {
        let end = keep.get(j + 1).copied().unwrap_or(n);
        alpha.push((i..end).map(|p| s.alpha()[p]).max().expect("nonempty"));
        beta.push((i..end).map(|p| s.beta()[p]).min().expect("nonempty"));
    }
    let b = keep.iter().map(|&i| s.b()[i]).collect();
    let spec = PlpSpec::new(vec![0; m], b, alpha, beta).expect("restriction of a feasible spec");
    Some(Reduced { spec, keep })
}

/// 1-based read access to a normalized spec with the conventions
/// `alpha_0 = beta_0 = 0`.
#[derive(Clone, Copy)]
pub(crate) struct View<'a>(pub &'a PlpSpec);

impl View<'_> {
    pub fn n(&self) -> usize {
        self.0.n()
    }
    pub fn d(&self) -> i64 {
        i64::from(self.0.d())
    }
    pub fn al(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            i64::from(self.0.alpha()[i - 1])
        }
    }
    pub fn be(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            i64::from(self.0.beta()[i - 1])
        }
    }
    pub fn b(&self, i: usize) -> i64 {
        i64::from(self.0.b()[i - 1])
    }
    /// Sum of `b_i` over the 1-based closed range.
    pub fn b_sum(&self, lo: usize, hi: usize) -> i64 {
        (lo..=hi).map(|i| self.b(i)).sum()
    }
}
