mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simgap::bench::{bench_scaling, generate_instance, log_log_slope, BenchReport, Family};
use simgap::format::{parse_dfa, parse_lts, write_dfa, write_lts};
use simgap::random::{random_dfa, random_lts};
use simgap::report::Document;

use common::*;

#[test]
fn example_files_round_trip() {
    for dfa in [example_first(), example_second()] {
        assert_eq!(parse_dfa(&write_dfa(&dfa)).unwrap(), dfa);
    }
}

#[test]
fn gadget_family_has_requested_size() {
    for n in [50, 333, 1000] {
        assert_eq!(generate_instance(Family::Gadget, n, 4).num_states(), n);
        assert_eq!(generate_instance(Family::RandomLts, n, 4).num_states(), n);
    }
    assert_eq!(
        generate_instance(Family::RandomLts, 200, 9),
        generate_instance(Family::RandomLts, 200, 9)
    );
}

#[test]
fn slope_of_exact_power_law() {
    let points: Vec<(f64, f64)> = [100.0, 200.0, 400.0, 800.0]
        .iter()
        .map(|&n: &f64| (n, 3.0 * n.powi(2)))
        .collect();
    assert!((log_log_slope(&points).unwrap() - 2.0).abs() < 1e-9);
    assert!(log_log_slope(&points[..1]).is_none());
}

#[test]
fn small_bench_report_round_trips() {
    let report = bench_scaling(Family::RandomLts, &[40, 80], 3, 3).unwrap();
    assert_eq!(report.measurements.len(), 2);
    let back = BenchReport::from_json(&report.to_json()).unwrap();
    assert_eq!(back.measurements.len(), 2);
    assert_eq!(back.family, Family::RandomLts);
    assert_eq!(back.measurements[1].states, 80);
    assert!(bench_scaling(Family::RandomLts, &[40], 1, 3).is_err());
    assert!(bench_scaling(Family::RandomLts, &[80, 40], 3, 3).is_err());
}

proptest! {
    #[test]
    fn dfa_text_round_trip(seed in any::<u64>(), n in 1usize..8, k in 1usize..4) {
        let dfa = random_dfa(&mut ChaCha8Rng::seed_from_u64(seed), n, k, 0.5);
        prop_assert_eq!(parse_dfa(&write_dfa(&dfa)).unwrap(), dfa);
    }

    #[test]
    fn lts_text_round_trip(seed in any::<u64>(), n in 1usize..10, k in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(0..3 * n);
        let lts = random_lts(&mut rng, n, k, m);
        let text = write_lts(&lts);
        prop_assert_eq!(write_lts(&parse_lts(&text).unwrap()), text);
    }

    #[test]
    fn document_json_round_trip(
        problem in "[a-z]{1,8}",
        verdict in proptest::option::of("[A-Z-]{1,9}"),
        sizes in proptest::collection::btree_map("[a-z]{1,5}", any::<u64>(), 0..4),
        timings in proptest::collection::btree_map("[a-z]{1,5}", 0.0f64..1e3, 0..4),
    ) {
        let doc = Document { verdict, sizes, timings, ..Document::new(problem) };
        prop_assert_eq!(Document::from_json(&doc.to_json()).unwrap(), doc);
    }
}

#[test]
fn empty_document_fields_are_omitted() {
    let json = Document::new("nei").to_json();
    assert!(!json.contains("verdict"));
    let doc = Document {
        sizes: BTreeMap::from([("states".into(), 3)]),
        ..Document::new("nei")
    };
    assert_eq!(
        Document::from_json(&doc.to_json()).unwrap().sizes["states"],
        3
    );
}
