use criterion::{black_box, criterion_group, criterion_main, Criterion};

use z3calc_core::calculus::apply_d;
use z3calc_core::presets;
use z3calc_core::supergroup;
use z3calc_core::Poly;

fn normal_form(c: &mut Criterion) {
    let pres = presets::qjh_calculus().unwrap();
    let p = Poly::names(&["x", "th", "dx", "x", "dth", "th"]);
    c.bench_function("nf qjh_calculus length 6", |b| {
        b.iter(|| pres.normal_form(black_box(&p)).unwrap())
    });
}

fn differential(c: &mut Criterion) {
    let pres = presets::qjh_calculus().unwrap();
    let p = Poly::names(&["x", "th", "x", "th"]);
    c.bench_function("d^3 on x th x th", |b| {
        b.iter(|| {
            let d1 = apply_d(black_box(&p), &pres).unwrap();
            let d2 = apply_d(&d1, &pres).unwrap();
            apply_d(&d2, &pres).unwrap()
        })
    });
}

fn census(c: &mut Criterion) {
    let pres = presets::qjh_calculus().unwrap();
    c.bench_function("census qjh_calculus", |b| b.iter(|| pres.census().unwrap()));
}

fn supergroup_checks(c: &mut Criterion) {
    let th3 = Poly::names(&["th", "th", "th"]);
    c.bench_function("coaction of th^3", |b| {
        b.iter(|| supergroup::coact_plane(black_box(&th3)).unwrap())
    });
    let inv = supergroup::glhj_inv().unwrap();
    c.bench_function("sdet normal form", |b| b.iter(|| supergroup::sdet(&inv).unwrap()));
}

criterion_group!(benches, normal_form, differential, census, supergroup_checks);
criterion_main!(benches);
