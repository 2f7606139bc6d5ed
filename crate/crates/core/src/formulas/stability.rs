use crate::error::{Error, Result};
use crate::formulas::depth::right_params;
use crate::formulas::{dispatch, reduce, FormulaFamily, View};
use crate::ideal::{MonomialIdeal, TermOrder};
use crate::plp::PlpSpec;
use crate::vector::Subset;

/// Index from which `depth S/I^m` is constant.
pub fn dstab_formula(spec: &PlpSpec) -> Result<u32> {
    stab(spec)
}

/// Index from which `Ass(S/I^m)` is constant. Coincides with the depth
/// index on every family with a closed form.
pub fn astab_formula(spec: &PlpSpec) -> Result<u32> {
    stab(spec)
}

fn stab(spec: &PlpSpec) -> Result<u32> {
    let (_, s) = spec.normalize();
    let Some(reduced) = reduce(&s) else { return Ok(1) };
    let s = reduced.spec;
    match dispatch(&s) {
        FormulaFamily::Left(_) | FormulaFamily::Lp => Ok(1),
        FormulaFamily::Right(k) => {
            let v = View(&s);
            let p = right_params(&s, k);
            let gap = v.be(k) + i64::from(p.b_tail) - v.d();
            if gap == 0 {
                return Ok(1);
            }
            let num = (s.n() - k) as i64 - i64::from(p.delta);
            Ok(((num + gap - 1) / gap).max(1) as u32)
        }
        f => Err(Error::UnsupportedFamily(format!("no closed stability index for the {f} family"))),
    }
}

/// Invariant values for the powers `1..=max_power`, and the least power
/// from which they stay constant within that range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Empirical<T> {
    pub values: Vec<T>,
    pub index: u32,
}

impl<T: PartialEq> Empirical<T> {
    fn from_values(values: Vec<T>) -> Self {
        let last = values.last().expect("at least one power");
        let start = values.iter().rposition(|v| v != last).map_or(0, |p| p + 1);
        Empirical { index: start as u32 + 1, values }
    }
}

/// Depths of powers measured on the enumerated ideals.
pub fn empirical_dstab(spec: &PlpSpec, max_power: u32, max_bases: usize) -> Result<Empirical<usize>> {
    let values = (1..=max_power)
        .map(|m| {
            let ideal = MonomialIdeal::from_base_set(&spec.power(m).generate_bases_bounded(max_bases)?);
            Ok(ideal.linear_quotient_depth(TermOrder::Lex)?.depth)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Empirical::from_values(values))
}

/// Associated primes of powers measured on the enumerated ideals.
pub fn empirical_astab(spec: &PlpSpec, max_power: u32, max_bases: usize) -> Result<Empirical<Vec<Subset>>> {
    let values = (1..=max_power)
        .map(|m| {
            let ideal = MonomialIdeal::from_base_set(&spec.power(m).generate_bases_bounded(max_bases)?);
            ideal.ass_by_localization()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Empirical::from_values(values))
}
