use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hecke_core::kl::{build_group, kl_basis, structure_constants, DEFAULT_MAX_ORDER};
use hecke_core::WeylType;

fn kl(c: &mut Criterion) {
    let mut group = c.benchmark_group("kl");
    group.sample_size(10);
    for name in ["A3", "B3"] {
        let w: WeylType = name.parse().unwrap();
        let g = build_group(w, DEFAULT_MAX_ORDER).unwrap();
        group.bench_function(format!("build_group {name}"), |b| {
            b.iter(|| {
                build_group(black_box(w), DEFAULT_MAX_ORDER)
                    .unwrap()
                    .order()
            })
        });
        group.bench_function(format!("kl_basis {name}"), |b| {
            b.iter(|| kl_basis(black_box(&g)).order())
        });
        group.bench_function(format!("structure_constants {name}"), |b| {
            b.iter(|| structure_constants(black_box(&g)).a_values().len())
        });
    }
    group.finish();
}

criterion_group!(benches, kl);
criterion_main!(benches);
