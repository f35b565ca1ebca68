//! Benchmark the data-parallel genus scan against the same scan pinned to a
//! single worker thread. The workload fans `par_map` out over (group, genus)
//! pairs, the same shape the verification suites use; with the `parallel`
//! feature disabled the sequential fallback is measured instead.

use criterion::{criterion_group, criterion_main, Criterion};
use torsion_obstruct::exec::par_map;
use torsion_obstruct::group::constructors::make_semidirect;
use torsion_obstruct::surface::ActionEngine;
use torsion_obstruct::FiniteGroup;

fn workload(groups: &[FiniteGroup]) -> usize {
    let items: Vec<(usize, usize)> = (0..groups.len())
        .flat_map(|gi| (2usize..=24).map(move |h| (gi, h)))
        .collect();
    par_map(items, |(gi, h)| {
        ActionEngine::new(&groups[gi]).acts_on_genus(h).unwrap()
    })
    .into_iter()
    .filter(|&acts| acts)
    .count()
}

fn bench_spectrum_scan(c: &mut Criterion) {
    // metacyclic groups with enough classes to make each probe non-trivial
    let groups = vec![
        make_semidirect(13, 3, 3).unwrap(),
        make_semidirect(31, 3, 5).unwrap(),
        make_semidirect(5, 4, 2).unwrap(),
    ];
    let expected = workload(&groups);

    let mut bg = c.benchmark_group("spectrum_scan");
    bg.sample_size(10);

    #[cfg(feature = "parallel")]
    {
        let threads = std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1);
        let counts: Vec<usize> = if threads > 1 { vec![1, threads] } else { vec![1] };
        for n in counts {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .unwrap();
            bg.bench_function(format!("threads_{n}"), |b| {
                b.iter(|| {
                    let got = pool.install(|| workload(&groups));
                    assert_eq!(got, expected);
                    got
                })
            });
        }
    }

    #[cfg(not(feature = "parallel"))]
    bg.bench_function("sequential", |b| {
        b.iter(|| {
            let got = workload(&groups);
            assert_eq!(got, expected);
            got
        })
    });

    bg.finish();
}

criterion_group!(benches, bench_spectrum_scan);
criterion_main!(benches);
