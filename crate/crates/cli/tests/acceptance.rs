//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.
//! Exits non-zero when a criterion fails that is not listed in
//! `KNOWN_DEVIATIONS`.

use std::process::Command;
use std::time::Instant;

use polymatroid::corpus::{random_spec, Shape};
use polymatroid::format::{self, Payload};
use polymatroid::formulas::{
    ass_formula, astab_formula, depth_formula, dstab_formula, empirical_astab, empirical_dstab, primary_decomposition,
};
use polymatroid::gorenstein::{gorenstein_criterion, h_vector, is_symmetric, krull_dimension, SplpSpec};
use polymatroid::ideal::TermOrder;
use polymatroid::plp::{is_lp_representable, is_plp_representable, spec_between_paths};
use polymatroid::sorting::sorted_count_and_sumset;
use polymatroid::{
    check_exchange, exchange_fiber_connected, is_base_set, is_sortable, k_fold_sumset, polymatroidal_sum,
    rank_function, BaseSet, ExchangeKind, ExponentVector, LatticePath, MonomialIdeal, PlpSpec, Subset,
    TransversalPresentation,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Criteria whose stated expectation contradicts the library's definitions;
/// the observed behavior is asserted instead and the line still reads FAIL.
const KNOWN_DEVIATIONS: &[u32] = &[4];

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

fn subset(one_based: &[usize]) -> Subset {
    Subset::from_indices(one_based.iter().map(|i| i - 1))
}

fn subset_product(n: usize, factors: &[Subset]) -> BaseSet {
    let mut acc = vec![ExponentVector::zeros(n)];
    for f in factors {
        acc = acc.iter().flat_map(|u| f.iter().map(move |i| u.add(&ExponentVector::unit(n, i)))).collect();
    }
    BaseSet::new(n, acc).unwrap()
}

fn bases(s: &PlpSpec) -> BaseSet {
    s.generate_bases().unwrap()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

const EXAMPLE_DOC: &str = "polymatroid plp
n 5
d 5
b 2 2 3 5 5
alpha 0 0 0 2 5
beta  4 4 4 4 5
";

fn criterion_1() -> Check {
    let doc = format::parse(EXAMPLE_DOC).map_err(|e| e.to_string())?;
    let Payload::Plp(spec) = doc.payload else { return Err("parsed to the wrong kind".into()) };
    ensure((spec.n(), spec.d()) == (5, 5), || format!("parsed n={} d={}", spec.n(), spec.d()))?;
    let ideal = MonomialIdeal::from_base_set(&bases(&spec));

    let want_ass = ["{5}", "{1,2,3,4}", "{1,2,4,5}", "{1,3,4,5}", "{2,3,4,5}", "{1,2,3,4,5}"];
    let ass = ass_formula(&spec).map_err(|e| e.to_string())?.supports();
    ensure(strings(&ass) == want_ass, || format!("ass = {:?}", strings(&ass)))?;
    let brute = ideal.ass_bruteforce(10_000_000).map_err(|e| e.to_string())?;
    ensure(brute == ass, || format!("ass_bruteforce = {:?}", strings(&brute)))?;

    let want = ["{5}^1", "{1,2,3,4}^2", "{1,2,4,5}^2", "{1,3,4,5}^3", "{2,3,4,5}^3", "{1,2,3,4,5}^5"];
    let comps = primary_decomposition(&spec).map_err(|e| e.to_string())?;
    ensure(strings(&comps) == want, || format!("decompose = {:?}", strings(&comps)))?;
    let parts: Vec<MonomialIdeal> = comps.iter().map(|c| c.ideal(5)).collect();
    ensure(MonomialIdeal::intersect_all(&parts) == Some(ideal.clone()), || "intersection differs".into())?;

    let dir = std::env::temp_dir().join(format!("polymatroid-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.pm");
    std::fs::write(&path, EXAMPLE_DOC).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_polymatroid")).arg("decompose").arg(&path).output().unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
    let cli = String::from_utf8_lossy(&out.stdout).lines().map(str::to_string).collect::<Vec<_>>();
    ensure(out.status.success() && cli == want, || format!("cli decompose = {cli:?}"))?;
    Ok(format!("{} generators, 6 components, oracle and CLI agree", ideal.gens().len()))
}

fn criterion_2() -> Check {
    // North-step positions on the 8 x 5 grid. The path with earlier north
    // steps has the larger prefix sums, so it bounds from above.
    let early = LatticePath::from_north_steps(8, 5, vec![1, 2, 3, 7]).map_err(|e| e.to_string())?;
    let late = LatticePath::from_north_steps(8, 5, vec![3, 7, 10, 11]).map_err(|e| e.to_string())?;
    let spec = spec_between_paths(&late, &early).map_err(|e| e.to_string())?;
    let t = TransversalPresentation::from_lp(&spec).map_err(|e| e.to_string())?;
    ensure(t.to_string() == "P[1,3] P[1,6] P[1,8] P[4,8]", || format!("transversal = {t}"))?;
    let back = t.to_lp().map_err(|e| e.to_string())?;
    ensure(back == spec, || format!("round trip gave {back:?}"))?;
    ensure(t.base_set() == bases(&spec), || "interval product and LP spec differ".into())?;
    let sigma = LatticePath::from_east_vector(8, 5, &[2, 3, 3, 3, 5, 5, 5]).map_err(|e| e.to_string())?;
    let m = sigma.monomial();
    ensure(m == ev(&[1, 1, 0, 0, 2, 0, 0, 0]), || format!("m(sigma) = {m}"))?;
    Ok(format!("{t}; m(sigma) = x1 x2 x5^2"))
}

/// The 2 x 4 ladder: verticals e1, e4, e7, e10; top rungs e2, e5, e8;
/// bottom rungs e3, e6, e9. Vertices: top 0..4, bottom 4..8.
const LADDER: [(usize, usize); 10] =
    [(0, 4), (0, 1), (4, 5), (1, 5), (1, 2), (5, 6), (2, 6), (2, 3), (6, 7), (3, 7)];

fn is_spanning_tree(edges: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..8).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &e in edges {
        let (a, b) = LADDER[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    edges.len() == 7
}

/// Spanning-tree count by the matrix-tree theorem (fraction-free elimination).
fn matrix_tree_count() -> i128 {
    let mut lap = vec![vec![0i128; 8]; 8];
    for &(a, b) in &LADDER {
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    let mut m: Vec<Vec<i128>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    let n = m.len();
    let mut prev = 1i128;
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1]
}

fn criterion_3() -> Check {
    let sums = |u: &[u32], lo: usize, hi: usize| u[lo - 1..hi].iter().sum::<u32>();
    let mut tree_vectors = Vec::new();
    let mut system_vectors = Vec::new();
    for mask in 0u32..1 << 10 {
        let u: Vec<u32> = (0..10).map(|i| (mask >> i) & 1).collect();
        let edges: Vec<usize> = (0..10).filter(|&i| u[i] == 1).collect();
        if is_spanning_tree(&edges) {
            tree_vectors.push(ev(&u));
        }
        if sums(&u, 1, 4) <= 3
            && sums(&u, 1, 7) <= 5
            && sums(&u, 4, 7) <= 3
            && sums(&u, 7, 10) <= 3
            && sums(&u, 4, 10) <= 5
            && sums(&u, 1, 10) == 7
        {
            system_vectors.push(ev(&u));
        }
    }
    let trees = BaseSet::new(10, tree_vectors).map_err(|e| e.to_string())?;
    let system = BaseSet::new(10, system_vectors).map_err(|e| e.to_string())?;
    let spec = PlpSpec::new(
        vec![0; 10],
        vec![1; 10],
        vec![0, 0, 2, 2, 2, 4, 4, 4, 4, 7],
        vec![3, 3, 3, 3, 5, 5, 5, 7, 7, 7],
    )
    .map_err(|e| e.to_string())?;
    let plp = bases(&spec);
    ensure(system == plp, || format!("systems differ: {} vs {} bases", system.len(), plp.len()))?;
    ensure(trees == system, || format!("spanning trees {} vs system {}", trees.len(), system.len()))?;
    ensure(is_base_set(&plp), || "not a base set".into())?;
    let c = check_exchange(&plp, ExchangeKind::TwoSided);
    ensure(c.is_none(), || format!("two_sided fails at {}", c.unwrap()))?;
    let count = matrix_tree_count();
    ensure(count == plp.len() as i128, || format!("matrix-tree count {count} vs {}", plp.len()))?;
    Ok(format!("{} bases = {count} spanning trees", plp.len()))
}

fn criterion_4() -> Check {
    let b = subset_product(4, &[subset(&[1, 3]), subset(&[2, 4])]);
    ensure(is_base_set(&b), || "not a base set".into())?;
    let plain = is_plp_representable(&b, false).map_err(|e| e.to_string())?;
    ensure(plain.is_none(), || "representable without relabeling".into())?;
    let rep = is_plp_representable(&b, true).map_err(|e| e.to_string())?.ok_or("not representable after relabeling")?;
    ensure(rep.permutation == [0, 2, 1, 3], || format!("permutation {:?}", rep.permutation))?;
    match check_exchange(&b, ExchangeKind::TwoSided) {
        None => Ok("two_sided holds; PLP only after swapping 2 and 3".into()),
        Some(c) => {
            // u - e_1 + e_2 and v + e_1 - e_2 need x1 x3 and x2 x4 swapped out;
            // neither (1,0,1,0) nor (0,1,0,1) is a base.
            let expected = (ev(&[0, 1, 1, 0]), ev(&[1, 0, 0, 1]), 1);
            ensure((c.u.clone(), c.v.clone(), c.i) == expected, || format!("unexpected counterexample {c}"))?;
            let right = check_exchange(&b, ExchangeKind::RightStrong).ok_or("right_strong unexpectedly holds")?;
            Err(format!(
                "two_sided exchange fails: left at {c}, right at {right}; \
                 the exchanges land on (1,0,1,0) or (0,1,0,1), which are not bases. \
                 Representability parts pass (permutation 2 3)"
            ))
        }
    }
}

fn criterion_5() -> Check {
    let a = bases(&PlpSpec::lattice_path(vec![0, 3, 5], vec![1, 4, 5]).unwrap());
    let b = bases(&PlpSpec::lattice_path(vec![0, 0, 1], vec![1, 1, 1]).unwrap());
    let prod = polymatroidal_sum(&a, &b).map_err(|e| e.to_string())?;
    ensure(is_base_set(&prod), || "product is not a base set".into())?;
    let lp = is_lp_representable(&prod).map_err(|e| e.to_string())?;
    ensure(lp.is_none(), || format!("product is LP: {lp:?}"))?;
    Ok(format!("product has {} bases and no LP spec", prod.len()))
}

fn criterion_6() -> Check {
    let c = subset_product(4, &[subset(&[2, 3]), subset(&[1, 4])]);
    for w in [ev(&[0, 0, 0, 0]), ev(&[1, 0, 2, 1])] {
        let single = BaseSet::new(4, vec![w.clone()]).unwrap();
        let sum = polymatroidal_sum(&single, &c).map_err(|e| e.to_string())?;
        ensure(is_base_set(&sum), || format!("{w} + C is not a base set"))?;
        for kind in [ExchangeKind::LeftStrong, ExchangeKind::RightStrong] {
            ensure(check_exchange(&sum, kind).is_some(), || format!("{w} + C passes {kind}"))?;
        }
    }
    Ok("left_strong and right_strong both fail, also after translation".into())
}

fn criterion_7() -> Check {
    const SPECS: u64 = 240;
    /// Base-count ceilings for the quadratic and sumset checks.
    const PAIR_LIMIT: usize = 3_000;
    const POWER_LIMIT: usize = 300;
    let results: Vec<Result<[bool; 3], String>> = (0..SPECS)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7e57 + seed);
            let spec = random_spec(&mut rng, Shape::ALL[(seed % 5) as usize], 6, 6);
            let b = bases(&spec);
            let fail = |what: &str| Err(format!("{what} on {spec:?}"));
            let ideal = MonomialIdeal::from_base_set(&b);
            if ideal.is_unit() {
                return Ok([false; 3]);
            }
            let lq = ideal.linear_quotient_depth(TermOrder::Lex).map_err(|e| e.to_string())?.depth;
            if depth_formula(&spec).map_err(|e| e.to_string())?.depth != lq {
                return fail("depth");
            }
            let family = matches!(Shape::ALL[(seed % 5) as usize], Shape::Lp | Shape::Left | Shape::Right);
            match ass_formula(&spec) {
                Ok(r) => {
                    if r.supports() != ideal.ass_bruteforce(10_000_000).map_err(|e| e.to_string())? {
                        return fail("ass");
                    }
                }
                Err(e) if family => return fail(&format!("ass formula error {e}")),
                Err(_) => {}
            }
            let quadratic = b.len() <= PAIR_LIMIT;
            if quadratic {
                if check_exchange(&b, ExchangeKind::TwoSided).is_some() {
                    return fail("two_sided");
                }
                if is_sortable(&b).is_some() {
                    return fail("sortable");
                }
                if exchange_fiber_connected(&b).is_some() {
                    return fail("fiber");
                }
                let (sorted, sumset) = sorted_count_and_sumset(&b, 2).map_err(|e| e.to_string())?;
                if sorted != sumset {
                    return fail("sorted count");
                }
            }
            let powers = b.len() <= POWER_LIMIT;
            if powers {
                for k in 2..=3 {
                    let p = bases(&spec.power(k));
                    if p != k_fold_sumset(&b, k) {
                        return fail(&format!("power {k}"));
                    }
                    for u in p.iter() {
                        let parts = spec.split_power_generator(u, k).map_err(|e| e.to_string())?;
                        let total = parts.iter().fold(ExponentVector::zeros(spec.n()), |acc, v| acc.add(v));
                        if parts.len() != k as usize || total != *u || parts.iter().any(|v| !b.contains(v)) {
                            return fail(&format!("split of {u}"));
                        }
                    }
                }
            }
            Ok([true, quadratic, powers])
        })
        .collect();
    let mut counts = [0usize; 3];
    for r in results {
        let flags = r?;
        for (c, f) in counts.iter_mut().zip(flags) {
            *c += usize::from(f);
        }
    }
    ensure(counts[0] >= 200, || format!("only {} nontrivial specs", counts[0]))?;
    Ok(format!(
        "{} specs: depth and Ass on all, exchange/sorting on {}, powers and splits on {}",
        counts[0], counts[1], counts[2]
    ))
}

fn criterion_8() -> Check {
    let (mut right, mut left) = (0, 0);
    for seed in 0..2_000u64 {
        if right >= 24 && left >= 24 {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x57ab + seed);
        let shape = if seed % 2 == 0 { Shape::Right } else { Shape::Left };
        let spec = random_spec(&mut rng, shape, 5, 3);
        if (shape == Shape::Right && right >= 24) || (shape == Shape::Left && left >= 24) {
            continue;
        }
        let Ok(value) = dstab_formula(&spec) else { continue };
        if shape == Shape::Right {
            let Some(p) = depth_formula(&spec).ok().and_then(|r| r.right) else { continue };
            let beta_k = spec.normalize().1.beta()[p.k - 1];
            if spec.d() >= beta_k + p.b_tail || value > 3 {
                continue;
            }
        }
        let d = empirical_dstab(&spec, value + 2, 200_000).map_err(|e| e.to_string())?;
        let a = empirical_astab(&spec, value + 2, 200_000).map_err(|e| e.to_string())?;
        let astab = astab_formula(&spec).map_err(|e| e.to_string())?;
        ensure(d.index == value && a.index == value && astab == value, || {
            format!("{spec:?}: formula {value}/{astab}, measured dstab {} astab {}", d.index, a.index)
        })?;
        if shape == Shape::Left {
            ensure(value == 1, || format!("left spec with index {value}: {spec:?}"))?;
            left += 1;
        } else {
            right += 1;
        }
    }
    ensure(right >= 20 && left >= 20, || format!("corpus too small: {right} right, {left} left"))?;
    Ok(format!("{right} right specs and {left} left specs, measured indices equal the formulas"))
}

fn criterion_9() -> Check {
    let (mut checked, mut gorenstein, mut skipped) = (0, 0, 0);
    for seed in 0..400u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6023 + seed);
        let spec = random_spec(&mut rng, Shape::Splp, 6, 6);
        let Ok(splp) = SplpSpec::from_plp(&spec.normalize().1) else { continue };
        let b = splp.to_plp().map_err(|e| e.to_string())?.generate_bases().map_err(|e| e.to_string())?;
        if b.len() > 200 {
            continue;
        }
        let dim = krull_dimension(&b);
        let Ok(h) = h_vector(&b, dim as u32 + 1, 100_000) else {
            skipped += 1;
            continue;
        };
        let verdict = gorenstein_criterion(&splp);
        ensure(verdict.gorenstein == is_symmetric(&h), || format!("{splp:?}: {verdict}, h = {h:?}"))?;
        checked += 1;
        gorenstein += usize::from(verdict.gorenstein);
        if checked >= 120 {
            break;
        }
    }
    ensure(checked >= 50, || format!("only {checked} SPLP specs checked ({skipped} over the sumset guard)"))?;
    Ok(format!("{checked} SPLP specs ({gorenstein} Gorenstein), criterion = h-vector symmetry"))
}

fn criterion_10() -> Check {
    let (mut hits, mut positive) = (0, 0);
    for seed in 0..50_000u64 {
        if hits >= 150 {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x2_7000 + seed);
        let b = match seed % 3 {
            0 => {
                let count = rng.gen_range(1..=3);
                let factors: Vec<Subset> = (0..count).map(|_| Subset(rng.gen_range(1..16))).collect();
                subset_product(4, &factors)
            }
            1 => bases(&random_spec(&mut rng, Shape::Any, 4, 4)),
            _ => {
                let b = bases(&random_spec(&mut rng, Shape::Any, 4, 4));
                if b.n() != 4 {
                    continue;
                }
                let mut perm = [0, 1, 2, 3];
                perm.shuffle(&mut rng);
                b.permute(&perm)
            }
        };
        if b.n() != 4 {
            continue;
        }
        let rho = rank_function(&b).map_err(|e| e.to_string())?;
        let r = |s: &[usize]| rho.get(Subset::from_indices(s.iter().copied()));
        if !(0..2).all(|i| r(&[i]) > 0 && r(&[i]) < r(&[i, 2]).min(r(&[i, 3]))) {
            continue;
        }
        hits += 1;
        let left = check_exchange(&b, ExchangeKind::LeftStrong).is_none();
        let plp = is_plp_representable(&b, false).map_err(|e| e.to_string())?.is_some();
        ensure(left == plp, || format!("left_strong {left}, representable {plp}: {b:?}"))?;
        positive += usize::from(plp);
    }
    ensure(hits >= 100, || format!("only {hits} base sets met the hypothesis"))?;
    Ok(format!("{hits} base sets ({positive} representable), equivalence holds on all"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "left example decomposition", criterion_1),
        (2, "lattice paths and interval products", criterion_2),
        (3, "spanning trees of the ladder", criterion_3),
        (4, "interleaved product (x1,x3)(x2,x4)", criterion_4),
        (5, "product of LP ideals", criterion_5),
        (6, "translated product P[2,3]P[1,4]", criterion_6),
        (7, "randomized property suite", criterion_7),
        (8, "stability indices", criterion_8),
        (9, "Gorenstein criterion", criterion_9),
        (10, "left exchange vs representability on [4]", criterion_10),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut unexpected = Vec::new();
    let start = Instant::now();
    for (id, name, f) in criteria {
        if filter.as_deref().is_some_and(|p| !name.contains(p) && p != id.to_string()) {
            continue;
        }
        let t = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("criterion {id:>2}: PASS  {name}: {msg} ({secs:.1}s)"),
            Err(msg) => {
                let known = KNOWN_DEVIATIONS.contains(&id);
                let tag = if known { " [known deviation]" } else { "" };
                println!("criterion {id:>2}: FAIL  {name}: {msg}{tag} ({secs:.1}s)");
                if !known {
                    unexpected.push(id);
                }
            }
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
