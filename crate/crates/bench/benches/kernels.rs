//! Timings for the table-driven kernels.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use csr_cli::catalog::enumerate_semirings;
use csr_core::{
    builtins, canonical_form, congruence_generated, coreflect, hom_enumerate, tensor_coproduct,
    SAlgebra,
};

fn validation(c: &mut Criterion) {
    let z4 = builtins::z4();
    c.bench_function("validate z4", |b| b.iter(|| black_box(&z4).check().is_ok()));
}

fn hom_enumeration(c: &mut Criterion) {
    let d4 = builtins::d4();
    c.bench_function("homs d4 to d4", |b| {
        b.iter(|| hom_enumerate(black_box(&d4), black_box(&d4)).len())
    });
}

fn congruence_quotient(c: &mut Criterion) {
    let z4 = builtins::z4();
    c.bench_function("quotient z4 by 0 = 2", |b| {
        b.iter(|| {
            let cong = congruence_generated(black_box(&z4), &[(0, 2)]);
            cong.quotient().0.order()
        })
    });
}

fn canonical_forms(c: &mut Criterion) {
    let d4 = builtins::d4();
    c.bench_function("canonical form d4", |b| {
        b.iter(|| canonical_form(black_box(&d4)).expect("within the bound").len())
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate order 3", |b| {
        b.iter(|| enumerate_semirings(black_box(3)).expect("within the cap").len())
    });
}

fn coproduct(c: &mut Criterion) {
    let a = SAlgebra::over_naturals(builtins::c3());
    let b_alg = SAlgebra::over_naturals(builtins::c3());
    c.bench_function("coproduct c3 c3", |b| {
        b.iter(|| {
            tensor_coproduct(black_box(&a), black_box(&b_alg))
                .expect("stable")
                .object
                .algebra()
                .order()
        })
    });
}

fn coreflection(c: &mut Criterion) {
    let d4 = SAlgebra::over_naturals(builtins::d4());
    c.bench_function("coreflect d4", |b| {
        b.iter(|| coreflect(black_box(&d4)).expect("over the initial object").object.algebra().order())
    });
}

criterion_group!(
    kernels,
    validation,
    hom_enumeration,
    congruence_quotient,
    canonical_forms,
    enumeration,
    coproduct,
    coreflection
);
criterion_main!(kernels);
