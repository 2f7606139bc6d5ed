use crate::error::{Error, Result};
use crate::formulas::{dispatch, reduce, FormulaFamily, View};
use crate::plp::{PlpSpec, DEFAULT_MAX_BASES};
use crate::vector::ExponentVector;

/// Depth of `S/I` for the ideal of a spec, with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    /// Family of the spec restricted to the variables that occur; indices
    /// inside it refer to that restriction.
    pub family: FormulaFamily,
    /// Variables vanishing on every base; each adds one to the depth.
    pub absent: usize,
    /// A base maximizing the slack count, with that count (generic path only).
    pub witness: Option<(ExponentVector, usize)>,
    pub right: Option<RightParams>,
}

/// Parameters of the right-family depth formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RightParams {
    pub k: usize,
    /// Number of `i <= k` with `alpha_i = beta_i`.
    pub s: usize,
    /// `floor(alpha_k / beta_k)`, either 0 or 1.
    pub delta: u32,
    /// Sum of `b_i` for `i > k`.
    pub b_tail: u32,
}

/// Number of `i < n` with `u_i < b_i` and `u_1 + ... + u_i < beta_i`,
/// evaluated on the normalized spec (the shift `a` is subtracted from `u`).
pub fn n_of(spec: &PlpSpec, u: &ExponentVector) -> Result<usize> {
    if !spec.contains(u) {
        return Err(Error::NotABase(u.to_string()));
    }
    let (shift, s) = spec.normalize();
    let u = u.checked_sub(&shift).ok_or_else(|| Error::NotABase(u.to_string()))?;
    Ok(slack_count(&s, &u))
}

fn slack_count(s: &PlpSpec, u: &ExponentVector) -> usize {
    let mut prefix = 0;
    let mut count = 0;
    for i in 0..s.n() - 1 {
        prefix += u[i];
        if u[i] < s.b()[i] && prefix < s.beta()[i] {
            count += 1;
        }
    }
    count
}

/// Depth via the family's closed form, or the maximal slack count over all
/// bases when no closed form applies.
pub fn depth_formula(spec: &PlpSpec) -> Result<DepthReport> {
    depth_formula_bounded(spec, DEFAULT_MAX_BASES)
}

pub fn depth_formula_bounded(spec: &PlpSpec, max_bases: usize) -> Result<DepthReport> {
    let (shift, s) = spec.normalize();
    let Some(reduced) = reduce(&s) else {
        if shift.modulus() == 0 {
            return Err(Error::InvalidSpec("the ideal is the whole ring".into()));
        }
        // A single monomial.
        return Ok(DepthReport { depth: s.n() - 1, family: FormulaFamily::Generic, absent: 0, witness: None, right: None });
    };
    let absent = reduced.absent(s.n());
    let s = reduced.spec;
    let family = dispatch(&s);
    let v = View(&s);
    let n = s.n();
    let report = |depth: usize, right| DepthReport { depth: depth + absent, family, absent, witness: None, right };
    match family {
        FormulaFamily::Left(k) => {
            let depth = (k + 1..n).filter(|&i| v.al(i) == v.be(i)).count();
            Ok(report(depth, None))
        }
        FormulaFamily::Right(k) => {
            let p = right_params(&s, k);
            let excess = v.d() - v.be(k) - i64::from(p.b_tail) + (n - k) as i64 - i64::from(p.delta);
            Ok(report(p.s + excess.max(0) as usize, Some(p)))
        }
        _ => {
            let bases = s.generate_bases_bounded(max_bases)?;
            let mut best: Option<(ExponentVector, usize)> = None;
            for u in bases.iter() {
                let c = slack_count(&s, u);
                if best.as_ref().is_none_or(|(_, b)| c > *b) {
                    best = Some((u.clone(), c));
                }
            }
            let (u, c) = best.expect("a valid spec has a base");
            let mut lifted: Vec<u32> = (0..spec.n()).map(|i| shift[i]).collect();
            for (j, &i) in reduced.keep.iter().enumerate() {
                lifted[i] += u[j];
            }
            let lifted = ExponentVector::new(lifted);
            let count = n_of(spec, &lifted)?;
            Ok(DepthReport {
                depth: n - 1 - c + absent,
                family,
                absent,
                witness: Some((lifted, count)),
                right: None,
            })
        }
    }
}

pub(crate) fn right_params(s: &PlpSpec, k: usize) -> RightParams {
    let v = View(s);
    RightParams {
        k,
        s: (1..=k).filter(|&i| v.al(i) == v.be(i)).count(),
        delta: (v.al(k) / v.be(k)) as u32,
        b_tail: v.b_sum(k + 1, s.n()) as u32,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_count_on_left_example() {
        let s = crate::formulas::tests::left_example();
        let u = ExponentVector::new(vec![1, 1, 0, 0, 3]);
        assert_eq!(n_of(&s, &u).unwrap(), 4);
        assert!(n_of(&s, &ExponentVector::new(vec![5, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn right_example_depth_one() {
        let s = PlpSpec::new(vec![0; 4], vec![4, 4, 1, 1], vec![0, 1, 1, 4], vec![2, 3, 4, 4]).unwrap();
        let r = depth_formula(&s).unwrap();
        assert_eq!(r.family, FormulaFamily::Right(2));
        assert_eq!(r.depth, 1);
        assert_eq!(r.right.unwrap(), RightParams { k: 2, s: 0, delta: 0, b_tail: 2 });
    }

    #[test]
    fn left_example_depth_zero() {
        assert_eq!(depth_formula(&crate::formulas::tests::left_example()).unwrap().depth, 0);
    }
}
