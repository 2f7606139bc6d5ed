//! Random PLP specs shaped after a chosen family, for property tests and
//! the verification driver.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::Error;
use crate::plp::PlpSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Arbitrary bounds, windows and shift.
    Any,
    Lp,
    Left,
    Right,
    Splp,
}

impl Shape {
    pub const ALL: [Shape; 5] = [Shape::Any, Shape::Lp, Shape::Left, Shape::Right, Shape::Splp];
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Any => "any",
            Shape::Lp => "lp",
            Shape::Left => "left",
            Shape::Right => "right",
            Shape::Splp => "splp",
        })
    }
}

impl FromStr for Shape {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Shape::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| format!("unknown shape `{s}`"))
    }
}

/// Nondecreasing vector of length `len` with entries in `[lo, hi]`.
fn chain<R: Rng>(rng: &mut R, len: usize, lo: u32, hi: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
    v.sort_unstable();
    v
}

/// Windows `alpha <= beta`, both nondecreasing, ending at `d`.
fn windows<R: Rng>(rng: &mut R, n: usize, d: u32) -> (Vec<u32>, Vec<u32>) {
    let mut beta = chain(rng, n, 0, d);
    beta[n - 1] = d;
    let mut alpha: Vec<u32> = chain(rng, n, 0, d).into_iter().zip(&beta).map(|(x, &y)| x.min(y)).collect();
    alpha[n - 1] = d;
    (alpha, beta)
}

/// A random feasible spec with `2 <= n <= max_n` (`1 <= n` for LP and any)
/// and `1 <= d <= max_d`.
pub fn random_spec<R: Rng>(rng: &mut R, shape: Shape, max_n: usize, max_d: u32) -> PlpSpec {
    assert!(max_n >= 2 && max_d >= 1);
    loop {
        let min_n = if matches!(shape, Shape::Any | Shape::Lp) { 1 } else { 2 };
        let n = rng.gen_range(min_n..=max_n);
        let d = rng.gen_range(1..=max_d);
        let (mut alpha, mut beta) = windows(rng, n, d);
        let mut a = vec![0; n];
        let mut b = vec![d; n];
        match shape {
            Shape::Any => {
                for i in 0..n {
                    if rng.gen_bool(0.5) {
                        b[i] = rng.gen_range(0..=d);
                    }
                    if rng.gen_bool(0.15) {
                        a[i] = rng.gen_range(0..=b[i].min(1));
                    }
                }
            }
            Shape::Lp => {}
            Shape::Left => {
                let k = rng.gen_range(1..n);
                for x in beta.iter_mut().skip(k) {
                    *x = (*x).max(1);
                }
                for i in 0..k {
                    b[i] = rng.gen_range(1..=d);
                    alpha[i] = 0;
                    beta[i] = beta[k];
                }
            }
            Shape::Right => {
                let k = rng.gen_range(1..n);
                beta[0] = beta[0].max(1);
                for i in 0..k {
                    beta[i] = beta[i].max(beta[0]);
                    alpha[i] = alpha[i].min(beta[i]);
                }
                for i in k..n - 1 {
                    alpha[i] = alpha[k - 1];
                    beta[i] = d;
                }
                for bi in b.iter_mut().skip(k) {
                    *bi = rng.gen_range(1..=d);
                }
            }
            Shape::Splp => {
                let k = rng.gen_range(0..n - 1);
                beta[k] = beta[k].max(1);
                for i in 0..n - 1 {
                    alpha[i] = 0;
                    if i < k {
                        beta[i] = beta[k];
                        b[i] = rng.gen_range(1..=d);
                    } else {
                        beta[i] = beta[i].max(beta[k]);
                    }
                }
            }
        }
        match PlpSpec::new(a, b, alpha, beta) {
            Ok(s) => return s,
            Err(Error::Infeasible) => continue,
            Err(e) => panic!("generator produced an invalid shape: {e}"),
        }
    }
}
