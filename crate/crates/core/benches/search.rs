use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use mptg::graph::{make_cycle, make_wheel, Graph};
use mptg::recognition::{find_ordering, OrderingClass, SearchConfig};
use mptg::sweep::map_all_graphs;
use mptg::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn recognition(c: &mut Criterion) {
    let cases: Vec<(&str, Graph, OrderingClass)> = vec![
        ("C8/proper", make_cycle(8).unwrap(), OrderingClass::ProperMptg),
        ("W7/proper", make_wheel(7).unwrap(), OrderingClass::ProperMptg),
        ("C7bar/mptg", make_cycle(7).unwrap().complement(), OrderingClass::Mptg),
        ("C9bar/mptg", make_cycle(9).unwrap().complement(), OrderingClass::Mptg),
    ];
    let mut group = c.benchmark_group("recognition");
    for (name, g, class) in &cases {
        for (mode, execution) in MODES {
            let config = SearchConfig {
                execution,
                ..SearchConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(*name, mode), g, |b, g| {
                b.iter(|| find_ordering(black_box(g), *class, &config).unwrap())
            });
        }
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for n in [5, 6] {
        for (mode, execution) in MODES {
            group.bench_function(BenchmarkId::new(format!("proper-members/n{n}"), mode), |b| {
                b.iter(|| {
                    let sequential = SearchConfig {
                        execution: Execution::Sequential,
                        ..SearchConfig::default()
                    };
                    map_all_graphs(n, execution, |g| {
                        find_ordering(g, OrderingClass::ProperMptg, &sequential)
                            .unwrap()
                            .is_member()
                    })
                    .into_iter()
                    .filter(|&m| m)
                    .count()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, recognition, sweeps);
criterion_main!(benches);
