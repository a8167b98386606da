mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simgap::automata::{alpha_map, language_inclusion};
use simgap::pipeline::{decide_nei, NeiPath};
use simgap::random::{random_deterministic_lts, random_dfa_pair, random_lts};
use simgap::sim::{
    bisimulation_partition, check_bisimulation, check_preorder_simulation, naive_similarity,
    ndet_gadget, partition_relation, refined_similarity, sim_equivalent, similarity, simulates,
    symmetric_part,
};
use simgap::Lts;

use common::*;

fn lts_strategy(max_n: usize) -> impl Strategy<Value = Lts> {
    (1..=max_n, 1usize..4, any::<u64>()).prop_map(|(n, k, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(0..=2 * n * k);
        random_lts(&mut rng, n, k, m)
    })
}

fn as_set(rel: &simgap::sim::SimRelation) -> HashSet<(usize, usize)> {
    rel.pairs().collect()
}

#[test]
fn matches_exhaustive_union_on_tiny_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=2);
        let m = rng.gen_range(0..=n * n * k);
        let lts = random_lts(&mut rng, n, k, m);
        assert_eq!(
            as_set(&similarity(&lts)),
            union_of_all_simulations(&lts),
            "{lts}"
        );
    }
}

#[test]
fn alpha_similarity_is_language_inclusion() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..300 {
        let (a, b) = random_dfa_pair(&mut rng, 8, 3);
        assert_eq!(
            simulates(&alpha_map(&a), &alpha_map(&b)),
            language_inclusion(&a, &b).unwrap()
        );
    }
}

#[test]
fn all_nei_paths_agree_with_pair_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let (a, b) = random_dfa_pair(&mut rng, 8, 3);
        let expected = intersection_oracle(&a, &b);
        for path in [
            NeiPath::Product,
            NeiPath::Similarity,
            NeiPath::SimEquivalence,
        ] {
            let verdict = decide_nei(&a, &b, path).unwrap();
            assert_eq!(
                verdict == simgap::pipeline::Verdict::NonEmpty,
                expected,
                "{path}"
            );
        }
    }
}

proptest! {
    #[test]
    fn similarity_is_the_largest_simulation_preorder(lts in lts_strategy(7)) {
        let rel = similarity(&lts);
        prop_assert_eq!(check_preorder_simulation(&lts, &rel), Ok(()));
        prop_assert_eq!(as_set(&rel), similarity_oracle(&lts));
    }

    #[test]
    fn naive_and_refined_agree(lts in lts_strategy(15)) {
        prop_assert_eq!(naive_similarity(&lts), refined_similarity(&lts));
    }

    #[test]
    fn bisimulation_is_valid_and_inside_similarity(lts in lts_strategy(12)) {
        let p = bisimulation_partition(&lts);
        prop_assert_eq!(check_bisimulation(&lts, &p), Ok(()));
        prop_assert!(partition_relation(&p).is_subset(&similarity(&lts)));
    }

    #[test]
    fn deterministic_equivalence_is_bisimilarity(seed in any::<u64>(), n in 1usize..14, k in 1usize..4) {
        let lts = random_deterministic_lts(&mut ChaCha8Rng::seed_from_u64(seed), n, k, 0.6);
        let sym = symmetric_part(&similarity(&lts));
        prop_assert_eq!(sym, partition_relation(&bisimulation_partition(&lts)));
    }

    #[test]
    fn gadget_equivalence_is_one_way_simulation(a in lts_strategy(5), b in lts_strategy(5)) {
        let g = ndet_gadget(&a, &b, None);
        prop_assert_eq!(g.lts.num_states(), a.num_states() + b.num_states() + 2);
        prop_assert_eq!(sim_equivalent(&g.lts, g.s, g.t).unwrap(), simulates(&a, &b));
    }
}
