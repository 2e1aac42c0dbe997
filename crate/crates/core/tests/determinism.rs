use diskbound::sampling::{disk_moduli, disk_points};
use diskbound::{
    lp_norm_distributional, rasterize_sublevel, sublevel_area_grid, sublevel_area_mc,
    BlaschkeProduct, ComplexPoint, Estimator,
};

fn product() -> BlaschkeProduct {
    let zeros = [(0.3, 0.2), (-0.6, 0.1), (0.0, -0.8)]
        .iter()
        .map(|&(re, im)| ComplexPoint::new(re, im).unwrap())
        .collect();
    BlaschkeProduct::new(0.7, zeros).unwrap()
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let b = product();
    let run = || {
        (
            disk_moduli(&b, 300_000, 42),
            sublevel_area_mc(&b, 0.4, 300_000, 42).unwrap(),
            sublevel_area_grid(&b, 0.4, 512).unwrap(),
            rasterize_sublevel(&b, 0.4, 256).unwrap(),
            lp_norm_distributional(
                &b,
                2.0,
                32,
                Estimator::MonteCarlo {
                    samples: 100_000,
                    seed: 3,
                },
            )
            .unwrap(),
        )
    };
    let one = in_pool(1, run);
    let four = in_pool(4, run);
    let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(&one.0), bits(&four.0));
    assert_eq!(one.1, four.1);
    assert_eq!(one.2, four.2);
    assert_eq!(one.3, four.3);
    assert_eq!(one.4.value.to_bits(), four.4.value.to_bits());
}

#[test]
fn seeds_select_distinct_streams() {
    let a = disk_points(1000, 1);
    let b = disk_points(1000, 2);
    assert_ne!(a, b);
    assert_eq!(a, disk_points(1000, 1));
    assert!(a.iter().all(|z| z.norm() < 1.0));
}

#[test]
fn prefix_is_stable_across_sample_counts() {
    let short = disk_points(70_000, 9);
    let long = disk_points(140_000, 9);
    assert_eq!(short[..], long[..70_000]);
}
