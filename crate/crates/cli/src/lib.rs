//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use polymatroid::corpus::{random_spec, Shape};
use polymatroid::format::{self, Payload, SpecDocument};
use polymatroid::formulas::{
    ass_formula, ass_infinity, astab_formula, depth_formula_bounded, dstab_formula, empirical_astab,
    empirical_dstab, primary_decomposition,
};
use polymatroid::gorenstein::{gorenstein_criterion, h_vector, is_symmetric, krull_dimension, SplpSpec};
use polymatroid::ideal::TermOrder;
use polymatroid::plp::{family_label, is_plp_representable, transversal_power};
use polymatroid::{
    check_exchange, classify, is_base_set, BaseSet, Error, ExchangeKind, MonomialIdeal, PlpSpec,
    PrimaryComponent, TransversalPresentation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "polymatroid", version, about = "Discrete polymatroids, PLP specs and their ideals")]
pub struct Cli {
    /// Largest base set any command may enumerate.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub max_bases: usize,
    /// Largest witness or sumset search a brute-force oracle may run.
    #[arg(long, global = true, default_value_t = 5_000_000)]
    pub max_subsets: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate the base set as a `bases` document.
    Bases { file: PathBuf },
    /// Test one exchange property, or all of them.
    CheckExchange {
        /// symmetric, strong, left_strong, right_strong, two_sided or all.
        #[arg(long, default_value = "all")]
        kind: String,
        file: PathBuf,
    },
    /// Report family shapes and representability.
    Classify { file: PathBuf },
    /// Depth of S/I (or of S/I^k).
    Depth {
        #[arg(long, default_value_t = 1)]
        power: u32,
        file: PathBuf,
    },
    /// Associated primes of I (or of I^k).
    Ass {
        #[arg(long, default_value_t = 1)]
        power: u32,
        file: PathBuf,
    },
    /// Stable set of associated primes.
    AssInf {
        /// Largest power tried when no closed form applies.
        #[arg(long, default_value_t = 6)]
        max_power: u32,
        file: PathBuf,
    },
    /// Index of associated-prime stability.
    Astab {
        #[arg(long, default_value_t = 6)]
        max_power: u32,
        file: PathBuf,
    },
    /// Index of depth stability.
    Dstab {
        #[arg(long, default_value_t = 6)]
        max_power: u32,
        file: PathBuf,
    },
    /// Irredundant primary decomposition.
    Decompose { file: PathBuf },
    /// Gorenstein criterion for SPLP specs.
    Gorenstein {
        /// Also compute the h-vector and report its symmetry.
        #[arg(long)]
        h_vector: bool,
        file: PathBuf,
    },
    /// Convert an LP spec to its transversal presentation.
    ToTransversal { file: PathBuf },
    /// Convert a transversal presentation to an LP spec.
    ToLp { file: PathBuf },
    /// Spec (or base set) of the k-th power.
    Power {
        #[arg(short = 'k', default_value_t = 2)]
        k: u32,
        file: PathBuf,
    },
    /// Check closed forms against the brute-force oracles on a random corpus.
    Verify {
        #[arg(long, default_value = "random")]
        corpus: String,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// any, lp, left, right, splp, or mixed (cycle through all).
        #[arg(long, default_value = "mixed")]
        shape: String,
    },
}

/// Outcome of a command: report text and exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceGuard(_) => EXIT_GUARD,
        _ => EXIT_INPUT,
    }
}

fn read_doc(path: &PathBuf) -> Result<SpecDocument, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::InvalidSpec(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?
    };
    format::parse(&text)
}

/// The PLP spec behind a document, if it has one without relabeling.
fn plp_of(doc: &SpecDocument) -> Result<Option<PlpSpec>, Error> {
    match &doc.payload {
        Payload::Plp(s) => Ok(Some(s.clone())),
        Payload::Transversal(t) => Ok(Some(t.to_lp()?)),
        Payload::Bases(b) => {
            if b.is_empty() {
                return Err(Error::MalformedBaseSet("no bases".into()));
            }
            Ok(is_plp_representable(b, false)?.map(|r| r.spec))
        }
    }
}

fn ideal_of(doc: &SpecDocument, cli: &Cli) -> Result<MonomialIdeal, Error> {
    Ok(MonomialIdeal::from_base_set(&doc.base_set(cli.max_bases)?))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn bases_document(b: &BaseSet) -> String {
    format::print(&SpecDocument::new(Payload::Bases(b.clone())))
}

type Report = Result<(String, i32), Error>;

fn execute(cli: &Cli) -> Report {
    let mut out = String::new();
    match &cli.command {
        Command::Bases { file } => {
            let b = read_doc(file)?.base_set(cli.max_bases)?;
            out.push_str(&bases_document(&b));
        }
        Command::CheckExchange { kind, file } => {
            let b = read_doc(file)?.base_set(cli.max_bases)?;
            let kinds: Vec<ExchangeKind> = if kind == "all" {
                vec![
                    ExchangeKind::Symmetric,
                    ExchangeKind::Strong,
                    ExchangeKind::LeftStrong,
                    ExchangeKind::RightStrong,
                    ExchangeKind::TwoSided,
                ]
            } else {
                vec![kind.parse().map_err(Error::InvalidSpec)?]
            };
            for k in kinds {
                match check_exchange(&b, k) {
                    None => writeln!(out, "{k}: holds").unwrap(),
                    Some(c) => writeln!(out, "{k}: fails at {c}").unwrap(),
                }
            }
        }
        Command::Classify { file } => classify_cmd(&read_doc(file)?, cli, &mut out)?,
        Command::Depth { power, file } => depth_cmd(&read_doc(file)?, *power, cli, &mut out)?,
        Command::Ass { power, file } => ass_cmd(&read_doc(file)?, *power, cli, &mut out)?,
        Command::AssInf { max_power, file } => {
            let doc = read_doc(file)?;
            let spec = require_plp(&doc)?;
            match ass_infinity(&spec) {
                Ok(primes) => {
                    writeln!(out, "source: formula").unwrap();
                    for p in primes {
                        writeln!(out, "{p}").unwrap();
                    }
                }
                Err(Error::UnsupportedFamily(_)) => {
                    let e = empirical_astab(&spec, *max_power, cli.max_bases)?;
                    writeln!(out, "source: empirical (powers 1..={max_power})").unwrap();
                    for p in e.values.last().expect("at least one power") {
                        writeln!(out, "{p}").unwrap();
                    }
                }
                Err(e) => return Err(e),
            }
        }
        Command::Astab { max_power, file } | Command::Dstab { max_power, file } => {
            let depth = matches!(cli.command, Command::Dstab { .. });
            let doc = read_doc(file)?;
            let spec = require_plp(&doc)?;
            let formula = if depth { dstab_formula(&spec) } else { astab_formula(&spec) };
            match formula {
                Ok(v) => writeln!(out, "{v}\nsource: formula").unwrap(),
                Err(Error::UnsupportedFamily(_)) => {
                    let line = if depth {
                        let e = empirical_dstab(&spec, *max_power, cli.max_bases)?;
                        format!("{}\nsource: empirical (powers 1..={max_power}, depths {})", e.index, join(&e.values))
                    } else {
                        let e = empirical_astab(&spec, *max_power, cli.max_bases)?;
                        format!("{}\nsource: empirical (powers 1..={max_power})", e.index)
                    };
                    writeln!(out, "{line}").unwrap();
                }
                Err(e) => return Err(e),
            }
        }
        Command::Decompose { file } => {
            let doc = read_doc(file)?;
            let comps = match plp_of(&doc)? {
                Some(spec) => primary_decomposition(&spec)?,
                None => decomposition_by_localization(&ideal_of(&doc, cli)?)?,
            };
            for c in comps {
                writeln!(out, "{c}").unwrap();
            }
        }
        Command::Gorenstein { h_vector: with_h, file } => {
            let doc = read_doc(file)?;
            let spec = require_plp(&doc)?;
            let splp = SplpSpec::from_plp(&spec.normalize().1)?;
            let verdict = gorenstein_criterion(&splp);
            writeln!(out, "{verdict}").unwrap();
            if *with_h {
                let b = splp.to_plp()?.generate_bases_bounded(cli.max_bases)?;
                let dim = krull_dimension(&b);
                let h = h_vector(&b, dim as u32 + 1, cli.max_subsets)?;
                let sym = is_symmetric(&h);
                writeln!(out, "h-vector: {} ({})", join(&h), if sym { "symmetric" } else { "not symmetric" }).unwrap();
                if sym != verdict.gorenstein {
                    writeln!(out, "MISMATCH: criterion and h-vector disagree").unwrap();
                    return Ok((out, EXIT_MISMATCH));
                }
            }
        }
        Command::ToTransversal { file } => {
            let doc = read_doc(file)?;
            let spec = require_plp(&doc)?;
            let t = TransversalPresentation::from_lp(&spec)?;
            out.push_str(&format::print(&SpecDocument { name: doc.name.clone(), payload: Payload::Transversal(t) }));
        }
        Command::ToLp { file } => {
            let doc = read_doc(file)?;
            let spec = match &doc.payload {
                Payload::Transversal(t) => t.to_lp()?,
                _ => match plp_of(&doc)? {
                    Some(s) if polymatroid::plp::is_lp(&s.normalize().1) => s,
                    _ => return Err(Error::InvalidSpec("document has no LP presentation".into())),
                },
            };
            out.push_str(&format::print(&SpecDocument { name: doc.name.clone(), payload: Payload::Plp(spec) }));
        }
        Command::Power { k, file } => {
            if *k == 0 {
                return Err(Error::InvalidSpec("power must be at least 1".into()));
            }
            let doc = read_doc(file)?;
            let payload = match &doc.payload {
                Payload::Plp(s) => Payload::Plp(s.power(*k)),
                Payload::Transversal(t) => Payload::Bases(transversal_power(t, *k)),
                Payload::Bases(b) => Payload::Bases(polymatroid::k_fold_sumset(b, *k)),
            };
            out.push_str(&format::print(&SpecDocument { name: doc.name.clone(), payload }));
        }
        Command::Verify { corpus, n, d, seed, count, shape } => {
            return verify(cli, corpus, *n, *d, *seed, *count, shape);
        }
    }
    Ok((out, 0))
}

fn require_plp(doc: &SpecDocument) -> Result<PlpSpec, Error> {
    plp_of(doc)?.ok_or_else(|| Error::InvalidSpec("base set is not PLP-representable without relabeling".into()))
}

fn decomposition_by_localization(ideal: &MonomialIdeal) -> Result<Vec<PrimaryComponent>, Error> {
    Ok(ideal
        .ass_by_localization()?
        .into_iter()
        .map(|p| PrimaryComponent { support: p, exponent: ideal.localize(p).min_degree() })
        .collect())
}

fn classify_cmd(doc: &SpecDocument, cli: &Cli, out: &mut String) -> Result<(), Error> {
    match &doc.payload {
        Payload::Plp(_) | Payload::Transversal(_) => {
            let s = require_plp(doc)?;
            writeln!(out, "families: {}", family_label(&classify(&s))).unwrap();
            writeln!(out, "formula family: {}", polymatroid::formulas::dispatch(&s.normalize().1)).unwrap();
        }
        Payload::Bases(_) => {
            let b = doc.base_set(cli.max_bases)?;
            let base = is_base_set(&b);
            writeln!(out, "base set of a discrete polymatroid: {}", yes(base)).unwrap();
            if !base {
                return Ok(());
            }
            match is_plp_representable(&b, false)? {
                Some(r) => {
                    writeln!(out, "PLP-representable: yes").unwrap();
                    writeln!(out, "families: {}", family_label(&classify(&r.spec))).unwrap();
                    out.push_str(&format::print(&SpecDocument::new(Payload::Plp(r.spec))));
                }
                None => {
                    writeln!(out, "PLP-representable: no").unwrap();
                    match is_plp_representable(&b, true)? {
                        Some(r) => {
                            let perm: Vec<String> = r.permutation.iter().map(|i| (i + 1).to_string()).collect();
                            writeln!(out, "PLP-representable after relabeling: yes (order {})", perm.join(" ")).unwrap();
                        }
                        None => writeln!(out, "PLP-representable after relabeling: no").unwrap(),
                    }
                }
            }
        }
    }
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn depth_cmd(doc: &SpecDocument, power: u32, cli: &Cli, out: &mut String) -> Result<(), Error> {
    if power == 0 {
        return Err(Error::InvalidSpec("power must be at least 1".into()));
    }
    match plp_of(doc)? {
        Some(spec) => {
            let r = depth_formula_bounded(&spec.power(power), cli.max_bases)?;
            writeln!(out, "{}\nsource: formula ({})", r.depth, r.family).unwrap();
            if let Some((u, c)) = r.witness {
                writeln!(out, "witness: {u} with {c} slack positions").unwrap();
            }
        }
        None => {
            let depth = ideal_of(doc, cli)?.power(power).linear_quotient_depth(TermOrder::Lex)?.depth;
            writeln!(out, "{depth}\nsource: oracle (linear quotients)").unwrap();
        }
    }
    Ok(())
}

fn ass_cmd(doc: &SpecDocument, power: u32, cli: &Cli, out: &mut String) -> Result<(), Error> {
    if power == 0 {
        return Err(Error::InvalidSpec("power must be at least 1".into()));
    }
    let formula = match plp_of(doc)? {
        Some(spec) => match ass_formula(&spec.power(power)) {
            Ok(r) => Some(r),
            Err(Error::UnsupportedFamily(_)) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };
    match formula {
        Some(r) => {
            writeln!(out, "source: formula ({})", r.family).unwrap();
            for e in &r.entries {
                writeln!(out, "{}  {}", e.support, e.clause).unwrap();
            }
        }
        None => {
            writeln!(out, "source: oracle (localization)").unwrap();
            for p in ideal_of(doc, cli)?.power(power).ass_by_localization()? {
                writeln!(out, "{p}").unwrap();
            }
        }
    }
    Ok(())
}

fn parse_shape(shape: &str) -> Result<Option<Shape>, Error> {
    if shape == "mixed" {
        return Ok(None);
    }
    shape.parse().map(Some).map_err(|_| Error::InvalidSpec(format!("unknown shape `{shape}`")))
}

/// Largest base count for which `verify` also measures stability indices.
const STAB_MAX_BASES: usize = 60;
/// Largest closed-form stability index `verify` checks against powers.
const STAB_MAX_INDEX: u32 = 3;
/// Largest base set whose h-vector `verify` computes.
const GORENSTEIN_MAX_BASES: usize = 200;

fn verify(cli: &Cli, corpus: &str, n: usize, d: u32, seed: u64, count: usize, shape: &str) -> Report {
    if corpus != "random" {
        return Err(Error::InvalidSpec(format!("unknown corpus `{corpus}`")));
    }
    if n == 0 || d == 0 {
        return Err(Error::InvalidSpec("--n and --d must be positive".into()));
    }
    let shape = parse_shape(shape)?;
    let results: Vec<(PlpSpec, Result<Vec<String>, Error>)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let sh = shape.unwrap_or(Shape::ALL[i % Shape::ALL.len()]);
            let spec = random_spec(&mut rng, sh, n, d);
            let checks = verify_spec(&spec, cli);
            (spec, checks)
        })
        .collect();

    let mut out = String::new();
    let (mut mismatches, mut guarded) = (0, 0);
    for (i, (spec, result)) in results.iter().enumerate() {
        let label = family_label(&classify(spec));
        match result {
            Ok(problems) if problems.is_empty() => writeln!(out, "spec {i}: ok [{label}]").unwrap(),
            Ok(problems) => {
                mismatches += 1;
                writeln!(out, "spec {i}: MISMATCH [{label}]").unwrap();
                for p in problems {
                    writeln!(out, "  {p}").unwrap();
                }
                let doc = format::print(&SpecDocument::new(Payload::Plp(spec.clone())));
                for line in doc.lines() {
                    writeln!(out, "  | {line}").unwrap();
                }
            }
            Err(Error::ResourceGuard(msg)) => {
                guarded += 1;
                writeln!(out, "spec {i}: skipped [{label}] ({msg})").unwrap();
            }
            Err(e) => {
                mismatches += 1;
                writeln!(out, "spec {i}: ERROR [{label}] {e}").unwrap();
            }
        }
    }
    writeln!(out, "verified {count} specs (seed {seed}): {mismatches} mismatches, {guarded} skipped").unwrap();
    Ok((out, if mismatches > 0 { EXIT_MISMATCH } else { 0 }))
}

/// Every applicable closed form against its oracle; returns the disagreements.
pub fn verify_spec(spec: &PlpSpec, cli: &Cli) -> Result<Vec<String>, Error> {
    let mut problems = Vec::new();
    let bases = spec.generate_bases_bounded(cli.max_bases)?;
    let ideal = MonomialIdeal::from_base_set(&bases);
    if ideal.is_unit() {
        return Ok(problems);
    }
    let oracle_depth = ideal.linear_quotient_depth(TermOrder::Lex)?.depth;
    let formula_depth = depth_formula_bounded(spec, cli.max_bases)?.depth;
    if oracle_depth != formula_depth {
        problems.push(format!("depth: formula {formula_depth}, oracle {oracle_depth}"));
    }

    let oracle_ass = ideal.ass_by_localization()?;
    match ass_formula(spec) {
        Ok(r) => {
            let supports = r.supports();
            if supports != oracle_ass {
                problems.push(format!("ass: formula {}, oracle {}", join(&supports), join(&oracle_ass)));
            }
        }
        Err(Error::UnsupportedFamily(_)) => {}
        Err(e) => return Err(e),
    }
    let comps = primary_decomposition(spec)?;
    let parts: Vec<MonomialIdeal> = comps.iter().map(|c| c.ideal(spec.n())).collect();
    if MonomialIdeal::intersect_all(&parts).as_ref() != Some(&ideal) {
        problems.push(format!("decompose: {} does not intersect to the ideal", join(&comps)));
    }

    if bases.len() <= STAB_MAX_BASES {
        if let Ok(value) = dstab_formula(spec) {
            if value <= STAB_MAX_INDEX {
                let e = empirical_dstab(spec, value + 2, cli.max_bases)?;
                if e.index != value {
                    problems.push(format!("dstab: formula {value}, measured {}", e.index));
                }
                let a = empirical_astab(spec, value + 2, cli.max_bases)?;
                if a.index != astab_formula(spec)? {
                    problems.push(format!("astab: formula {value}, measured {}", a.index));
                }
                let inf = ass_infinity(spec)?;
                if a.values.last() != Some(&inf) {
                    problems.push(format!("ass-inf: formula {}", join(&inf)));
                }
            }
        }
    }

    if bases.len() <= GORENSTEIN_MAX_BASES {
        if let Ok(splp) = SplpSpec::from_plp(&spec.normalize().1) {
            let b = splp.to_plp()?.generate_bases_bounded(cli.max_bases)?;
            let dim = krull_dimension(&b);
            let h = h_vector(&b, dim as u32 + 1, cli.max_subsets)?;
            if gorenstein_criterion(&splp).gorenstein != is_symmetric(&h) {
                problems.push(format!("gorenstein: criterion disagrees with h-vector {}", join(&h)));
            }
        }
    }
    Ok(problems)
}
