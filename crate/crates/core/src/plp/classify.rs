//! Family shapes of normalized PLP specs.

use std::fmt;

use crate::plp::spec::PlpSpec;

/// A family whose defining shape a spec matches. `k` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Coordinate bounds on the first `k` variables, prefix windows after.
    Left(usize),
    /// Prefix windows on the first `k` positions, coordinate bounds after.
    Right(usize),
    /// No coordinate bounds.
    Lp,
    /// No prefix windows before position `n`.
    Veronese,
    /// Coordinate bounds on the first `k` variables, upper prefix bounds on
    /// positions `k+1..n-1`, no lower prefix bounds. `k` may be 0.
    Splp(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Left(k) => write!(f, "left(k={k})"),
            Family::Right(k) => write!(f, "right(k={k})"),
            Family::Lp => write!(f, "LP"),
            Family::Veronese => write!(f, "Veronese"),
            Family::Splp(k) => write!(f, "SPLP(k={k})"),
        }
    }
}

/// All matching families of the normalized form of `spec`, in the order
/// left, right, LP, Veronese, SPLP; empty means "general".
pub fn classify(spec: &PlpSpec) -> Vec<Family> {
    let (_, s) = spec.normalize();
    let mut out = Vec::new();
    out.extend(left_ks(&s).into_iter().map(Family::Left));
    out.extend(right_ks(&s).into_iter().map(Family::Right));
    if is_lp(&s) {
        out.push(Family::Lp);
    }
    if is_veronese(&s) {
        out.push(Family::Veronese);
    }
    out.extend(splp_ks(&s).into_iter().map(Family::Splp));
    out
}

pub fn family_label(families: &[Family]) -> String {
    if families.is_empty() {
        "general".to_string()
    } else {
        families.iter().map(Family::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn unbounded(s: &PlpSpec, i: usize) -> bool {
    s.b()[i] >= s.d()
}

pub fn is_lp(s: &PlpSpec) -> bool {
    s.is_normalized() && (0..s.n()).all(|i| unbounded(s, i))
}

pub fn is_veronese(s: &PlpSpec) -> bool {
    let n = s.n();
    s.is_normalized() && (0..n - 1).all(|i| s.alpha()[i] == 0 && s.beta()[i] == s.d())
}

/// Witnesses `k` (1-based) of the left shape: `b_i >= d` for `i > k`,
/// `alpha_i = 0` and `beta_i = beta_{k+1} > 0` for `i <= k`, `b_i > 0` for `i <= k`.
pub fn left_ks(s: &PlpSpec) -> Vec<usize> {
    if !s.is_normalized() {
        return Vec::new();
    }
    let n = s.n();
    (1..n)
        .filter(|&k| {
            (k..n).all(|i| unbounded(s, i))
                && s.beta()[k] > 0
                && (0..k).all(|i| s.alpha()[i] == 0 && s.beta()[i] == s.beta()[k] && s.b()[i] > 0)
        })
        .collect()
}

/// Witnesses `k` (1-based) of the right shape: `b_i >= d` for `i <= k`,
/// `alpha_i = alpha_k` and `beta_i = d` for `k < i < n`, `b_i > 0` for
/// `i > k`, and `beta_1 > 0`.
pub fn right_ks(s: &PlpSpec) -> Vec<usize> {
    if !s.is_normalized() || s.beta()[0] == 0 {
        return Vec::new();
    }
    let n = s.n();
    let d = s.d();
    (1..n)
        .filter(|&k| {
            (0..k).all(|i| unbounded(s, i))
                && (k..n - 1).all(|i| s.alpha()[i] == s.alpha()[k - 1] && s.beta()[i] == d)
                && (k..n).all(|i| s.b()[i] > 0)
        })
        .collect()
}

/// Witnesses `k` (0-based count of bounded coordinates, `k <= n - 2`).
pub fn splp_ks(s: &PlpSpec) -> Vec<usize> {
    let n = s.n();
    if !s.is_normalized() || n < 2 {
        return Vec::new();
    }
    (0..n - 1)
        .filter(|&k| {
            (0..n - 1).all(|i| s.alpha()[i] == 0)
                && s.beta()[k] >= 1
                && (k..n).all(|i| unbounded(s, i))
                && (0..k).all(|i| s.beta()[i] == s.beta()[k] && s.b()[i] > 0)
        })
        .collect()
}
