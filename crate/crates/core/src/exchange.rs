//! Exchange-property checks on explicit base sets.

use std::fmt;
use std::str::FromStr;

use crate::vector::{BaseSet, ExponentVector};

/// Which exchange axiom to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExchangeKind {
    Symmetric,
    Strong,
    LeftStrong,
    RightStrong,
    TwoSided,
}

impl FromStr for ExchangeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "symmetric" => Ok(Self::Symmetric),
            "strong" => Ok(Self::Strong),
            "left_strong" | "left-strong" | "left" => Ok(Self::LeftStrong),
            "right_strong" | "right-strong" | "right" => Ok(Self::RightStrong),
            "two_sided" | "two-sided" => Ok(Self::TwoSided),
            other => Err(format!("unknown exchange kind `{other}`")),
        }
    }
}

impl fmt::Display for ExchangeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Symmetric => "symmetric",
            Self::Strong => "strong",
            Self::LeftStrong => "left_strong",
            Self::RightStrong => "right_strong",
            Self::TwoSided => "two_sided",
        })
    }
}

/// A failing triple `(u, v, i)`; `i` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub u: ExponentVector,
    pub v: ExponentVector,
    pub i: usize,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} v={} i={}", self.u, self.v, self.i + 1)
    }
}

/// Returns `None` when `b` has the exchange property, otherwise the
/// lexicographically least failing `(u, v, i)` with `u`, `v` in sorted order.
pub fn check_exchange(b: &BaseSet, kind: ExchangeKind) -> Option<Counterexample> {
    let n = b.n();
    for u in b {
        for v in b {
            if u == v {
                continue;
            }
            for i in 0..n {
                if triple_fails(b, kind, u, v, i) {
                    return Some(Counterexample {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    });
                }
            }
        }
    }
    None
}

/// The symmetric exchange property, which characterizes base sets of
/// discrete polymatroids.
pub fn is_base_set(b: &BaseSet) -> bool {
    check_exchange(b, ExchangeKind::Symmetric).is_none()
}

/// Both `u + e_i - e_j` and `v - e_i + e_j` lie in `b`.
fn swap_in(b: &BaseSet, u: &ExponentVector, v: &ExponentVector, i: usize, j: usize) -> bool {
    match (u.shift(j, i), v.shift(i, j)) {
        (Some(u2), Some(v2)) => b.contains(&u2) && b.contains(&v2),
        _ => false,
    }
}

fn triple_fails(b: &BaseSet, kind: ExchangeKind, u: &ExponentVector, v: &ExponentVector, i: usize) -> bool {
    let n = b.n();
    match kind {
        ExchangeKind::Symmetric => {
            u[i] < v[i] && !(0..n).any(|j| u[j] > v[j] && swap_in(b, u, v, i, j))
        }
        ExchangeKind::Strong => {
            u[i] < v[i] && (0..n).any(|j| u[j] > v[j] && !swap_in(b, u, v, i, j))
        }
        ExchangeKind::LeftStrong => {
            // u(i) > v(i) with a strictly smaller prefix before i: some j < i
            // with u(j) < v(j) must move a unit of u from i to j.
            u[i] > v[i]
                && u.prefix(i) < v.prefix(i)
                && !(0..i).any(|j| u[j] < v[j] && swap_in(b, v, u, i, j))
        }
        ExchangeKind::RightStrong => {
            u[i] > v[i]
                && u.suffix(i + 1) < v.suffix(i + 1)
                && !(i + 1..n).any(|j| u[j] < v[j] && swap_in(b, v, u, i, j))
        }
        ExchangeKind::TwoSided => {
            triple_fails(b, ExchangeKind::LeftStrong, u, v, i)
                || triple_fails(b, ExchangeKind::RightStrong, u, v, i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[&[u32]]) -> BaseSet {
        BaseSet::new(n, vs.iter().map(|v| ExponentVector::new(v.to_vec())).collect()).unwrap()
    }

    fn x13_x24() -> BaseSet {
        set(4, &[&[1, 1, 0, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 1]])
    }

    #[test]
    fn interleaved_product_is_a_base_set_without_one_sided_exchange() {
        let b = x13_x24();
        assert!(is_base_set(&b));
        // Moving a unit of x2 x3 towards x1 gives x1 x3, which is not a base.
        let c = check_exchange(&b, ExchangeKind::LeftStrong).unwrap();
        assert_eq!((c.u.entries(), c.v.entries(), c.i), (&[0, 1, 1, 0][..], &[1, 0, 0, 1][..], 1));
        let c = check_exchange(&b, ExchangeKind::RightStrong).unwrap();
        assert_eq!((c.u.entries(), c.v.entries(), c.i), (&[0, 1, 1, 0][..], &[1, 0, 0, 1][..], 2));
        assert_eq!(check_exchange(&b, ExchangeKind::TwoSided), Some(check_exchange(&b, ExchangeKind::LeftStrong).unwrap()));
    }

    #[test]
    fn consecutive_product_has_two_sided_exchange() {
        let b = set(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(check_exchange(&b, ExchangeKind::TwoSided), None);
    }

    #[test]
    fn missing_midpoint_breaks_exchange() {
        let b = set(2, &[&[2, 0], &[0, 2]]);
        let c = check_exchange(&b, ExchangeKind::Symmetric).unwrap();
        assert_eq!(c.u.entries(), &[0, 2]);
        assert_eq!(c.v.entries(), &[2, 0]);
        assert_eq!(c.i, 0);
    }

    #[test]
    fn singleton_passes_everything() {
        let b = set(2, &[&[1, 1]]);
        for kind in [
            ExchangeKind::Symmetric,
            ExchangeKind::Strong,
            ExchangeKind::LeftStrong,
            ExchangeKind::RightStrong,
            ExchangeKind::TwoSided,
        ] {
            assert_eq!(check_exchange(&b, kind), None, "{kind}");
        }
    }

    #[test]
    fn uniform_matroid_has_strong_exchange() {
        // All 0-1 vectors with two ones in four coordinates.
        let mut vs = Vec::new();
        for a in 0..4 {
            for c in a + 1..4 {
                let mut v = vec![0; 4];
                v[a] = 1;
                v[c] = 1;
                vs.push(ExponentVector::new(v));
            }
        }
        let b = BaseSet::new(4, vs).unwrap();
        assert_eq!(check_exchange(&b, ExchangeKind::Strong), None);
    }

    #[test]
    fn strong_fails_on_transversal_example() {
        // u=(0,0,1,1), v=(1,1,0,0): raising u_1 and lowering u_4 gives
        // (1,0,1,0), which is not a base.
        assert!(check_exchange(&x13_x24(), ExchangeKind::Strong).is_some());
    }

    #[test]
    fn kind_parsing_round_trips() {
        for s in ["symmetric", "strong", "left_strong", "right_strong", "two_sided"] {
            assert_eq!(s.parse::<ExchangeKind>().unwrap().to_string(), s);
        }
        assert!("sideways".parse::<ExchangeKind>().is_err());
    }
}
