use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::formulas::{dispatch, reduce, FormulaFamily, Reduced, View};
use crate::ideal::{MonomialIdeal, PrimaryComponent};
use crate::plp::{PlpSpec, DEFAULT_MAX_BASES};
use crate::vector::Subset;

/// Largest tail of coordinate-bounded variables whose subsets are enumerated.
const MAX_TAIL: usize = 20;

/// Which case of the family's description produced a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    /// Interval of an LP block.
    Interval,
    /// Left family: bounded indices together with `[k+1,t]`.
    LeftMixed,
    /// Left family: interval inside `[k+2,n]`.
    LeftInterval,
    /// Right family: interval inside the window block.
    RightInterval,
    /// Right family: subset of the bounded tail.
    RightTail,
    /// Right family: `[s,k]` together with a nonempty subset of the tail.
    RightMixed,
    /// Veronese family: any subset satisfying the degree bounds.
    Veronese,
    /// Variable dividing every generator because of the lower bounds `a`.
    Shift,
    /// No closed form; found by localization.
    Localization,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::Interval => "interval",
            Clause::LeftMixed => "left-mixed",
            Clause::LeftInterval => "left-interval",
            Clause::RightInterval => "right-interval",
            Clause::RightTail => "right-tail",
            Clause::RightMixed => "right-mixed",
            Clause::Veronese => "veronese",
            Clause::Shift => "shift",
            Clause::Localization => "localization",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssEntry {
    pub support: Subset,
    pub clause: Clause,
    /// Generator degree of the localization at the prime.
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssReport {
    pub family: FormulaFamily,
    /// Sorted by support.
    pub entries: Vec<AssEntry>,
    /// Right family only: supports on which the literal textbook conditions
    /// (non-emptiness gate `alpha_k <= d - b(tail)`, tail bound without `+1`)
    /// disagree with the localization-derived conditions used here, with the
    /// literal verdict.
    pub literal_disagreements: Vec<(Subset, bool)>,
}

impl AssReport {
    pub fn supports(&self) -> Vec<Subset> {
        self.entries.iter().map(|e| e.support).collect()
    }
}

/// Associated primes of `S/I` from the closed forms of the LP, left, right
/// and Veronese families.
pub fn ass_formula(spec: &PlpSpec) -> Result<AssReport> {
    let (shift, s) = spec.normalize();
    let Some(reduced) = reduce(&s) else {
        return Ok(AssReport {
            family: FormulaFamily::Generic,
            entries: apply_shift(Vec::new(), shift.entries()),
            literal_disagreements: Vec::new(),
        });
    };
    let (family, raw, lit) = family_entries(&reduced.spec, false)?;
    let raw = lift(&reduced, raw);
    let lit = lit.into_iter().map(|(p, v)| (reduced.lift(p), v)).collect();
    Ok(AssReport { family, entries: apply_shift(raw, shift.entries()), literal_disagreements: lit })
}

/// Printed-reading disagreements: support and whether that reading includes it.
type Disagreements = Vec<(Subset, bool)>;

fn family_entries(s: &PlpSpec, stable: bool) -> Result<(FormulaFamily, Raw, Disagreements)> {
    let family = dispatch(s);
    let mut lit = Vec::new();
    let raw = match family {
        FormulaFamily::Lp => lp_entries(s),
        FormulaFamily::Left(k) => left_entries(s, k),
        FormulaFamily::Right(k) => {
            let (e, l) = right_entries(s, k, stable)?;
            lit = l;
            e
        }
        FormulaFamily::Veronese => veronese_entries(&View(s).b_vec(1), s.d().into(), 0, stable)?,
        FormulaFamily::Generic => {
            return Err(Error::UnsupportedFamily("no closed form for the associated primes of a general spec".into()))
        }
    };
    Ok((family, raw, lit))
}

fn lift(r: &Reduced, raw: Raw) -> Raw {
    raw.into_iter().map(|e| AssEntry { support: r.lift(e.support), ..e }).collect()
}

/// Primes associated to all sufficiently high powers.
pub fn ass_infinity(spec: &PlpSpec) -> Result<Vec<Subset>> {
    let (shift, s) = spec.normalize();
    let raw = match reduce(&s) {
        Some(r) => lift(&r, family_entries(&r.spec, true)?.1),
        None => Vec::new(),
    };
    let mut out: Vec<Subset> = apply_shift(raw, shift.entries()).into_iter().map(|e| e.support).collect();
    out.sort();
    Ok(out)
}

/// Irredundant primary decomposition `I = ∩ P^{d_P}` over `Ass(S/I)`.
/// Specs without a closed form fall back to localizing the enumerated ideal.
pub fn primary_decomposition(spec: &PlpSpec) -> Result<Vec<PrimaryComponent>> {
    let entries = match ass_formula(spec) {
        Ok(r) => r.entries,
        Err(Error::UnsupportedFamily(_)) => {
            let ideal = MonomialIdeal::from_base_set(&spec.generate_bases_bounded(DEFAULT_MAX_BASES)?);
            ideal
                .ass_by_localization()?
                .into_iter()
                .map(|p| AssEntry { support: p, clause: Clause::Localization, exponent: ideal.localize(p).min_degree() })
                .collect()
        }
        Err(e) => return Err(e),
    };
    Ok(entries
        .into_iter()
        .map(|e| PrimaryComponent { support: e.support, exponent: e.exponent })
        .collect())
}

type Raw = Vec<AssEntry>;

fn entry(support: Subset, clause: Clause, exponent: i64) -> AssEntry {
    debug_assert!(exponent >= 1, "exponent {exponent} for {support}");
    AssEntry { support, clause, exponent: exponent as u32 }
}

/// Adds `(x_i)` for `a_i > 0` and the shift's contribution to each exponent.
fn apply_shift(raw: Raw, a: &[u32]) -> Raw {
    let mut by_support: BTreeMap<Subset, AssEntry> = raw.into_iter().map(|e| (e.support, e)).collect();
    for (i, &ai) in a.iter().enumerate() {
        if ai > 0 {
            by_support
                .entry(Subset::singleton(i))
                .or_insert(AssEntry { support: Subset::singleton(i), clause: Clause::Shift, exponent: 0 });
        }
    }
    by_support
        .into_values()
        .map(|mut e| {
            e.exponent += e.support.iter().map(|i| a[i]).sum::<u32>();
            e
        })
        .collect()
}

/// Intervals `[s,t]` (1-based, returned 0-based with `offset`) associated to
/// an LP ideal with windows `al[i] <= prefix_i <= be[i]`, where index 0 holds
/// the convention `al[0] = be[0] = 0`.
fn lp_intervals(al: &[i64], be: &[i64], offset: usize, clause: Clause, out: &mut Raw) {
    let m = al.len() - 1;
    for s in 1..=m {
        if be[s - 1] >= be[s] {
            continue;
        }
        for t in s..=m {
            if t > s && al[t - 1] >= be[t - 1] {
                break;
            }
            if al[t - 1] < al[t] && be[s - 1] < al[t] {
                out.push(entry(Subset::interval(offset + s - 1, offset + t - 1), clause, al[t] - be[s - 1]));
            }
        }
    }
}

fn lp_entries(s: &PlpSpec) -> Raw {
    let v = View(s);
    let n = s.n();
    let al: Vec<i64> = (0..=n).map(|i| v.al(i)).collect();
    let be: Vec<i64> = (0..=n).map(|i| v.be(i)).collect();
    let mut out = Vec::new();
    lp_intervals(&al, &be, 0, Clause::Interval, &mut out);
    out
}

fn left_entries(s: &PlpSpec, k: usize) -> Raw {
    let v = View(s);
    let n = s.n();
    let mut out = Vec::new();
    for mask in 0..(1u64 << k) {
        let bset = Subset(mask);
        let complement: i64 = (1..=k).filter(|&j| !bset.contains(j - 1)).map(|j| v.b(j)).sum();
        for t in k + 1..=n {
            if t > k + 1 && v.al(t - 1) >= v.be(t - 1) {
                break;
            }
            let prev = if t == k + 1 { 0 } else { v.al(t - 1) };
            if complement < v.al(t).min(v.be(k + 1)) && prev < v.al(t) {
                let support = bset.union(Subset::interval(k, t - 1));
                out.push(entry(support, Clause::LeftMixed, v.al(t) - complement));
            }
        }
    }
    let al: Vec<i64> = (k + 1..=n).map(|i| v.al(i)).collect();
    let be: Vec<i64> = (k + 1..=n).map(|i| v.be(i)).collect();
    // Position k+1 plays the role of the zero boundary for intervals in [k+2,n].
    lp_intervals(&al, &be, k + 1, Clause::LeftInterval, &mut out);
    out
}

/// Right family (possibly with windows closed at some `i <= k`): factor at the
/// closed windows into LP blocks and a final block with strict windows or no
/// windows at all, then take the union over blocks.
fn right_entries(s: &PlpSpec, k: usize, stable: bool) -> Result<(Raw, Vec<(Subset, bool)>)> {
    let v = View(s);
    let n = s.n();
    if n - k > MAX_TAIL {
        return Err(Error::ResourceGuard(format!("{} bounded variables exceed {MAX_TAIL}", n - k)));
    }
    let mut out = Vec::new();
    let mut cut = 0;
    for i in 1..=k {
        if v.al(i) != v.be(i) {
            continue;
        }
        let base = v.be(cut);
        if v.be(i) > base {
            let al: Vec<i64> = (cut..=i).map(|j| if j == cut { 0 } else { (v.al(j) - base).max(0) }).collect();
            let mut be: Vec<i64> = (cut..=i).map(|j| v.be(j) - base).collect();
            be[0] = 0;
            lp_intervals(&al, &be, cut, Clause::Interval, &mut out);
        }
        cut = i;
    }
    let base = v.be(cut);
    let tail = v.b_vec(k + 1);
    let d = v.d() - base;
    let mut literal = Vec::new();
    if cut == k {
        let own = veronese_entries(&tail, d, k, stable)?;
        if !stable {
            literal = disagreements(&own, &literal_veronese(&tail, d, k));
        }
        out.extend(own);
    } else {
        let piece = RightPiece {
            al: (cut..=k).map(|j| if j == cut { 0 } else { (v.al(j) - base).max(0) }).collect(),
            be: (cut..=k).map(|j| if j == cut { 0 } else { v.be(j) - base }).collect(),
            tail,
            d,
        };
        let own = piece.entries(cut, stable);
        if !stable {
            literal = disagreements(&own, &piece.literal(cut));
        }
        out.extend(own);
    }
    Ok((out, literal))
}

/// Supports where the literal reading and the computed entries of the final
/// block disagree, with the literal verdict.
fn disagreements(ours: &Raw, literal: &[Subset]) -> Vec<(Subset, bool)> {
    let mine: Vec<Subset> = ours.iter().map(|e| e.support).collect();
    let mut out: Vec<(Subset, bool)> = literal
        .iter()
        .filter(|p| !mine.contains(p))
        .map(|&p| (p, true))
        .chain(mine.iter().filter(|p| !literal.contains(p)).map(|&p| (p, false)))
        .collect();
    out.sort();
    out
}

/// Veronese-type block on variables `offset..offset+m`: bounds `b`, degree `d`.
fn veronese_entries(b: &[i64], d: i64, offset: usize, stable: bool) -> Result<Raw> {
    let m = b.len();
    if m > MAX_TAIL {
        return Err(Error::ResourceGuard(format!("{m} bounded variables exceed {MAX_TAIL}")));
    }
    let total: i64 = b.iter().sum();
    let stable = stable && d < total;
    let mut out = Vec::new();
    for mask in 1..(1u64 << m) {
        let bs = Subset(mask);
        let outside: i64 = (0..m).filter(|&j| !bs.contains(j)).map(|j| b[j]).sum();
        let upper = stable || d <= total - bs.len() as i64 + 1;
        if outside < d && upper {
            out.push(entry(shift_subset(bs, offset), Clause::Veronese, d - outside));
        }
    }
    Ok(out)
}

fn literal_veronese(b: &[i64], d: i64, offset: usize) -> Vec<Subset> {
    let m = b.len();
    let total: i64 = b.iter().sum();
    (1..(1u64 << m))
        .map(Subset)
        .filter(|bs| {
            let outside: i64 = (0..m).filter(|&j| !bs.contains(j)).map(|j| b[j]).sum();
            outside < d && d <= total - bs.len() as i64
        })
        .map(|bs| shift_subset(bs, offset))
        .collect()
}

fn shift_subset(s: Subset, offset: usize) -> Subset {
    Subset(s.0 << offset)
}

/// Right block with `al[i] < be[i]` for `1 <= i <= k` (index 0 is the zero
/// convention) followed by coordinate-bounded variables.
struct RightPiece {
    al: Vec<i64>,
    be: Vec<i64>,
    tail: Vec<i64>,
    d: i64,
}

impl RightPiece {
    fn k(&self) -> usize {
        self.al.len() - 1
    }

    fn tail_sum(&self) -> i64 {
        self.tail.iter().sum()
    }

    fn outside(&self, bs: Subset) -> i64 {
        (0..self.tail.len()).filter(|&j| !bs.contains(j)).map(|j| self.tail[j]).sum()
    }

    fn entries(&self, offset: usize, stable: bool) -> Raw {
        let k = self.k();
        let bt = self.tail_sum();
        let (al, be, d) = (&self.al, &self.be, self.d);
        let stable = stable && d < be[k] + bt;
        let mut out = Vec::new();
        // Localizing at the window block leaves an LP ideal of degree d1.
        let d1 = (d - bt).max(al[k]);
        let mut la = al.clone();
        let mut lb: Vec<i64> = be.iter().map(|&x| x.min(d1)).collect();
        la[k] = d1;
        lb[k] = d1;
        lp_intervals(&la, &lb, offset, Clause::RightInterval, &mut out);
        for mask in 1..(1u64 << self.tail.len()) {
            let bs = Subset(mask);
            let outside = self.outside(bs);
            let size = bs.len() as i64;
            let tail_set = shift_subset(bs, offset + k);
            if be[k] + outside < d && (stable || d <= be[k] + bt - size + 1) {
                out.push(entry(tail_set, Clause::RightTail, d - be[k] - outside));
            }
            for s in 1..=k {
                if be[s - 1] < be[s] && be[s - 1].max(al[k]) + outside < d && (stable || d <= be[k] + bt - size) {
                    let support = Subset::interval(offset + s - 1, offset + k - 1).union(tail_set);
                    out.push(entry(support, Clause::RightMixed, d - be[s - 1] - outside));
                }
            }
        }
        out
    }

    /// The three clauses read literally, for comparison only.
    fn literal(&self, offset: usize) -> Vec<Subset> {
        let k = self.k();
        let bt = self.tail_sum();
        let (al, be, d) = (&self.al, &self.be, self.d);
        let mut out = Vec::new();
        if al[k] <= d - bt && d - bt <= be[k] {
            for s in 1..=k {
                for t in s..=k {
                    if be[s - 1] < al[t] && be[s - 1] < be[s] && al[t - 1] < al[t] {
                        out.push(Subset::interval(offset + s - 1, offset + t - 1));
                    }
                }
            }
        }
        for mask in 0..(1u64 << self.tail.len()) {
            let bs = Subset(mask);
            let outside = self.outside(bs);
            let size = bs.len() as i64;
            let tail_set = shift_subset(bs, offset + k);
            if mask != 0 && be[k] + outside < d && d <= be[k] + bt - size {
                out.push(tail_set);
            }
            for s in 1..=k {
                if be[s - 1] < be[s] && be[s - 1].max(al[k]) + outside < d && d <= be[k] + bt - size {
                    out.push(Subset::interval(offset + s - 1, offset + k - 1).union(tail_set));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl View<'_> {
    /// `b_i` for `i >= from` (1-based).
    pub(crate) fn b_vec(&self, from: usize) -> Vec<i64> {
        (from..=self.n()).map(|i| self.b(i)).collect()
    }
}
