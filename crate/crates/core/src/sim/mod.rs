//! Simulation preorder, simulation equivalence and bisimulation on
//! labelled transition systems.

mod bisim;
mod gadget;
mod naive;
mod refined;
mod relation;

pub use bisim::{bisimulation_partition, Partition};
pub use gadget::{ndet_gadget, Gadget};
pub use naive::naive_similarity;
pub use refined::refined_similarity;
pub use relation::SimRelation;

use crate::error::Result;
use crate::lts::Lts;

/// Similarity of `lts`, computed with [`refined_similarity`].
pub fn similarity(lts: &Lts) -> SimRelation {
    refined_similarity(lts)
}

/// Whether the initial state of `m1` is simulated by the initial state of
/// `m2`, decided in their disjoint union.
pub fn simulates(m1: &Lts, m2: &Lts) -> bool {
    let (union, offset) = m1.disjoint_union(m2);
    similarity(&union).contains(m1.initial(), m2.initial() + offset)
}

/// Whether `s` and `t` simulate each other in `lts`.
pub fn sim_equivalent(lts: &Lts, s: usize, t: usize) -> Result<bool> {
    lts.check_state(s)?;
    lts.check_state(t)?;
    let rel = similarity(lts);
    Ok(rel.contains(s, t) && rel.contains(t, s))
}

/// The relation `{(s, t) | s, t in the same block}`.
pub fn partition_relation(partition: &Partition) -> SimRelation {
    let mut rel = SimRelation::empty(partition.num_states());
    for block in partition.blocks() {
        for &s in block {
            for &t in block {
                rel.insert(s, t);
            }
        }
    }
    rel
}

/// The symmetric part `{(s, t) | (s, t) ∈ R and (t, s) ∈ R}`.
pub fn symmetric_part(rel: &SimRelation) -> SimRelation {
    let mut sym = SimRelation::empty(rel.num_states());
    for (s, t) in rel.pairs() {
        if rel.contains(t, s) {
            sym.insert(s, t);
        }
    }
    sym
}

/// Checks that `rel` is a reflexive, transitive simulation on `lts`.
/// Returns the name of the first violated property.
pub fn check_preorder_simulation(
    lts: &Lts,
    rel: &SimRelation,
) -> std::result::Result<(), &'static str> {
    if rel.num_states() != lts.num_states() {
        return Err("size");
    }
    if !rel.is_reflexive() {
        return Err("reflexivity");
    }
    if !rel.is_simulation(lts) {
        return Err("simulation transfer condition");
    }
    if !rel.is_transitive() {
        return Err("transitivity");
    }
    Ok(())
}

/// Checks that `partition` covers the states of `lts` and that its block
/// relation is a simulation, hence a bisimulation.
pub fn check_bisimulation(
    lts: &Lts,
    partition: &Partition,
) -> std::result::Result<(), &'static str> {
    if partition.num_states() != lts.num_states() {
        return Err("size");
    }
    if partition.blocks().iter().map(Vec::len).sum::<usize>() != lts.num_states() {
        return Err("cover");
    }
    let adj = crate::lts::Adjacency::new(lts);
    for block in partition.blocks() {
        let rep = block[0];
        for &s in block {
            for a in 0..adj.num_labels() {
                let mut left: Vec<usize> = adj
                    .post(rep, a)
                    .iter()
                    .map(|&x| partition.block_of(x))
                    .collect();
                let mut right: Vec<usize> = adj
                    .post(s, a)
                    .iter()
                    .map(|&x| partition.block_of(x))
                    .collect();
                left.sort_unstable();
                left.dedup();
                right.sort_unstable();
                right.dedup();
                if left != right {
                    return Err("block stability");
                }
            }
        }
    }
    Ok(())
}
