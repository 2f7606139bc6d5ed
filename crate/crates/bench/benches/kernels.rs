use criterion::{black_box, criterion_group, criterion_main, Criterion};
use polymatroid::formulas::{ass_formula, depth_formula};
use polymatroid::ideal::TermOrder;
use polymatroid::{check_exchange, ExchangeKind, MonomialIdeal, PlpSpec};

fn left_spec() -> PlpSpec {
    PlpSpec::new(vec![0; 5], vec![2, 2, 3, 5, 5], vec![0, 0, 0, 2, 5], vec![4, 4, 4, 4, 5]).unwrap()
}

fn lp_spec() -> PlpSpec {
    PlpSpec::lattice_path(vec![0, 1, 2, 3, 4, 6], vec![2, 3, 4, 5, 6, 6]).unwrap()
}

fn kernels(c: &mut Criterion) {
    let left = left_spec();
    let lp = lp_spec();
    let left_bases = left.generate_bases().unwrap();
    let lp_ideal = MonomialIdeal::from_base_set(&lp.generate_bases().unwrap());

    c.bench_function("generate_bases/left_square", |b| {
        let sq = left.power(2);
        b.iter(|| black_box(&sq).generate_bases().unwrap())
    });
    c.bench_function("check_exchange/two_sided", |b| {
        b.iter(|| check_exchange(black_box(&left_bases), ExchangeKind::TwoSided))
    });
    c.bench_function("linear_quotient_depth/lp", |b| {
        b.iter(|| black_box(&lp_ideal).linear_quotient_depth(TermOrder::Lex).unwrap())
    });
    c.bench_function("ass_by_localization/left", |b| {
        let ideal = MonomialIdeal::from_base_set(&left_bases);
        b.iter(|| black_box(&ideal).ass_by_localization().unwrap())
    });
    c.bench_function("ass_formula/left", |b| b.iter(|| ass_formula(black_box(&left)).unwrap()));
    c.bench_function("depth_formula/lp", |b| b.iter(|| depth_formula(black_box(&lp)).unwrap()));
}

criterion_group!(benches, kernels);
criterion_main!(benches);
