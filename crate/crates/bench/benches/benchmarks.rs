use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zeroconc::correction::d_lens;
use zeroconc::engine::{compare, profile};
use zeroconc::knot::signature;
use zeroconc::surgery::{lens_chain, lens_index_covector, DOracle};
use zeroconc::{parse_two_knot, KnotExpr, TwoKnotExpr};

fn bench_d_lens(c: &mut Criterion) {
    c.bench_function("d_lens L(199,1) spin", |b| {
        b.iter(|| d_lens(black_box(199), 1, 0).unwrap())
    });
    // Worst continued fraction: the all-two chain of length p-1.
    c.bench_function("d_lens L(997,996) all indices mod 40", |b| {
        b.iter(|| {
            for i in (0..997).step_by(40) {
                black_box(d_lens(997, 996, i).unwrap());
            }
        })
    });
}

fn bench_oracle(c: &mut Criterion) {
    let pres = lens_chain(40, 39).unwrap();
    let ks: Vec<Vec<i64>> = (0..40)
        .map(|i| lens_index_covector(40, 39, i).unwrap().1)
        .collect();
    c.bench_function("lattice oracle L(40,39), 40 classes", |b| {
        b.iter(|| {
            let oracle = DOracle::new(&pres).unwrap();
            for k in &ks {
                black_box(oracle.d_covector(k).unwrap());
            }
        })
    });
}

fn bench_signature(c: &mut Criterion) {
    c.bench_function("signature T(2,499) tridiagonal", |b| {
        b.iter(|| signature(&KnotExpr::torus(2, black_box(499)).unwrap()).unwrap())
    });
    c.bench_function("signature b(9999,3122) even CF", |b| {
        b.iter(|| signature(&KnotExpr::two_bridge(black_box(9999), 3122).unwrap()).unwrap())
    });
}

fn bench_engine(c: &mut Criterion) {
    let gen = TwoKnotExpr::twist_spin(5, KnotExpr::torus(2, 3).unwrap());
    let big = TwoKnotExpr::conn_sum((0..25).map(|_| gen.clone()).collect());
    c.bench_function("profile 25-fold Poincare sum", |b| {
        b.iter(|| black_box(profile(&big)))
    });
    let a = parse_two_knot("twistspin(2, twobridge(101,1))").unwrap();
    let u = TwoKnotExpr::UnknotS2;
    c.bench_function("compare twistspin(2,b(101,1)) vs unknot", |b| {
        b.iter(|| black_box(compare(&a, &u)))
    });
}

fn bench_parser(c: &mut Criterion) {
    let text = "rev(twistspin(2, mirror(twobridge(89,55)))) # ribbon(3) # \
                seifert(lens(2,1) # -brieskorn(2,3,5) # s1s2, spin=2) # \
                twistspin(5, torus(2,3))";
    c.bench_function("parse long expression", |b| {
        b.iter(|| parse_two_knot(black_box(text)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_d_lens,
    bench_oracle,
    bench_signature,
    bench_engine,
    bench_parser
);
criterion_main!(benches);
