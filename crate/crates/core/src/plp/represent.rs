//! Deciding whether an explicit base set is cut out by a PLP or LP system.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::plp::spec::PlpSpec;
use crate::rank::{closed_inseparable_subsets, rank_function, RankFunction};
use crate::vector::{BaseSet, Subset};

/// Largest ground set for which all coordinate permutations are tried.
pub const MAX_PERMUTATION_N: usize = 8;

/// A successful PLP presentation of a (possibly permuted) base set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    /// Entry `i` of the permuted vectors is entry `permutation[i]` of the
    /// originals (0-based).
    pub permutation: Vec<usize>,
    pub spec: PlpSpec,
    /// Whether every closed inseparable subset is a prefix, suffix,
    /// singleton or co-singleton.
    pub closed_inseparable_in_family: bool,
}

/// The prefixes, suffixes, singletons and co-singletons of `[n]`.
pub fn interval_family(n: usize) -> Vec<Subset> {
    let full = Subset::full(n);
    let mut t: Vec<Subset> = Vec::new();
    for i in 0..n {
        t.push(Subset::full(i + 1));
        t.push(full.difference(Subset::full(i + 1)));
        t.push(Subset::singleton(i));
        t.push(full.difference(Subset::singleton(i)));
    }
    t.retain(|a| !a.is_empty());
    t.sort();
    t.dedup();
    t
}

/// The spec read off the rank function:
/// `b_i = rho(i)`, `a_i = d - rho([n] - i)`, `beta_i = rho([i])`,
/// `alpha_i = d - rho([n] - [i])`. It is the tightest PLP system containing
/// the base set.
pub fn candidate_spec(rho: &RankFunction) -> Result<PlpSpec> {
    let n = rho.n();
    let full = Subset::full(n);
    let d = rho.get(full);
    let a = (0..n).map(|i| d - rho.get(full.difference(Subset::singleton(i)))).collect();
    let b = (0..n).map(|i| rho.get(Subset::singleton(i))).collect();
    let alpha = (0..n).map(|i| d - rho.get(full.difference(Subset::full(i + 1)))).collect();
    let beta = (0..n).map(|i| rho.get(Subset::full(i + 1))).collect();
    PlpSpec::new(a, b, alpha, beta)
}

fn try_identity(b: &BaseSet, permutation: Vec<usize>) -> Result<Option<Representation>> {
    let rho = rank_function(b)?;
    let spec = candidate_spec(&rho)?;
    if spec.generate_bases()? != *b {
        return Ok(None);
    }
    let family = interval_family(b.n());
    let closed_inseparable_in_family = closed_inseparable_subsets(&rho)?
        .iter()
        .all(|a| family.contains(a));
    Ok(Some(Representation {
        permutation,
        spec,
        closed_inseparable_in_family,
    }))
}

/// Whether `b` is the base set of a PLP spec, optionally after permuting
/// coordinates. Any PLP system containing `b` is looser than the candidate
/// spec, so comparing the candidate's bases with `b` decides the question.
/// Permutations are tried in lexicographic order; the first hit is returned.
pub fn is_plp_representable(b: &BaseSet, up_to_permutation: bool) -> Result<Option<Representation>> {
    let n = b.n();
    if !up_to_permutation {
        return try_identity(b, (0..n).collect());
    }
    if n > MAX_PERMUTATION_N {
        return Err(Error::ResourceGuard(format!(
            "permutation search over n = {n} exceeds {MAX_PERMUTATION_N}"
        )));
    }
    for perm in (0..n).permutations(n) {
        let permuted = b.permute(&perm);
        if let Some(rep) = try_identity(&permuted, perm)? {
            return Ok(Some(rep));
        }
    }
    Ok(None)
}

/// The LP spec generating `b`, if any: the prefix windows are the observed
/// prefix ranges, and no coordinate bounds apply.
pub fn is_lp_representable(b: &BaseSet) -> Result<Option<PlpSpec>> {
    let n = b.n();
    let mut alpha = vec![u32::MAX; n];
    let mut beta = vec![0u32; n];
    for u in b {
        let mut p = 0;
        for i in 0..n {
            p += u[i];
            alpha[i] = alpha[i].min(p);
            beta[i] = beta[i].max(p);
        }
    }
    let spec = PlpSpec::lattice_path(alpha, beta)?;
    Ok((spec.generate_bases()? == *b).then_some(spec))
}
