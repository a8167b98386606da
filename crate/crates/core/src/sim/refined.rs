use crate::lts::{Adjacency, Lts};

use super::relation::ones;
use super::SimRelation;

/// Greatest simulation relation by worklist refinement.
///
/// The relation starts as "every label enabled in `s` is enabled in `t`".
/// Each pair `(s', t')` removed from it is queued once. When it is
/// processed, for each label `a` and each `t --a--> t'` we ask whether `t`
/// still has some `t --a--> t''` with `(s', t'') ∈ R`. If not, every
/// `(s, t)` with `s --a--> s'` loses its witness and is removed.
///
/// Every `(s', t)` pair is re-examined at most once per removal among its
/// `a`-successors of `t`, so the work is `O(|S| · Σ_t outdeg(t)²)`, which is
/// `O(|S| · |→|)` for bounded branching. Memory is two `|S|²` bit matrices.
pub fn refined_similarity(lts: &Lts) -> SimRelation {
    let n = lts.num_states();
    let k = lts.labels().len();
    let adj = Adjacency::new(lts);

    let mut rel = initial_relation(lts, &adj);

    // Removed pairs waiting to be propagated, one bit row per left state.
    let mut pending = SimRelation::empty(n);
    let mut queued = vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for (s, queued) in queued.iter_mut().enumerate() {
        pending.fill_row(s);
        let mut any = false;
        for (p, r) in pending.row_mut(s).iter_mut().zip(rel.row(s)) {
            *p &= !r;
            any |= *p != 0;
        }
        if any {
            *queued = true;
            queue.push(s);
        }
    }

    let live_labels: Vec<Vec<usize>> = (0..n)
        .map(|s| (0..k).filter(|&a| !adj.pre(s, a).is_empty()).collect())
        .collect();

    let mut scratch = vec![0u64; n.div_ceil(64)];
    while let Some(s2) = queue.pop() {
        queued[s2] = false;
        scratch.copy_from_slice(pending.row(s2));
        pending.row_mut(s2).fill(0);
        for t2 in ones(&scratch) {
            for &a in &live_labels[s2] {
                let pre_t2 = adj.pre(t2, a);
                if pre_t2.is_empty() {
                    continue;
                }
                for &t in pre_t2 {
                    if adj.post(t, a).iter().any(|&t3| rel.contains(s2, t3)) {
                        continue;
                    }
                    for &s in adj.pre(s2, a) {
                        if rel.contains(s, t) {
                            rel.remove(s, t);
                            pending.insert(s, t);
                            if !queued[s] {
                                queued[s] = true;
                                queue.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    rel
}

/// `(s, t)` for every pair where the labels enabled in `s` are a subset of
/// those enabled in `t`.
fn initial_relation(lts: &Lts, adj: &Adjacency) -> SimRelation {
    let n = lts.num_states();
    let k = lts.labels().len();
    let label_words = k.div_ceil(64).max(1);
    let enabled: Vec<Vec<u64>> = (0..n)
        .map(|s| {
            let mut set = vec![0u64; label_words];
            for a in 0..k {
                if !adj.post(s, a).is_empty() {
                    set[a / 64] |= 1 << (a % 64);
                }
            }
            set
        })
        .collect();

    // Group states by enabled set so each subset test is done per class pair.
    let mut classes: Vec<&Vec<u64>> = Vec::new();
    let mut class_of = vec![0usize; n];
    let mut index = std::collections::HashMap::new();
    for (s, set) in enabled.iter().enumerate() {
        let fresh = classes.len();
        let c = *index.entry(set).or_insert(fresh);
        if c == fresh {
            classes.push(set);
        }
        class_of[s] = c;
    }

    let mut rel = SimRelation::empty(n);
    if classes.len() <= 64 {
        let mut member_rows = vec![vec![0u64; n.div_ceil(64)]; classes.len()];
        for (s, &c) in class_of.iter().enumerate() {
            member_rows[c][s / 64] |= 1 << (s % 64);
        }
        let class_rows: Vec<Vec<u64>> = classes
            .iter()
            .map(|small| {
                let mut row = vec![0u64; n.div_ceil(64)];
                for (c, big) in classes.iter().enumerate() {
                    if is_subset(small, big) {
                        for (r, m) in row.iter_mut().zip(&member_rows[c]) {
                            *r |= m;
                        }
                    }
                }
                row
            })
            .collect();
        for s in 0..n {
            rel.row_mut(s).copy_from_slice(&class_rows[class_of[s]]);
        }
    } else {
        for s in 0..n {
            for t in 0..n {
                if is_subset(&enabled[s], &enabled[t]) {
                    rel.insert(s, t);
                }
            }
        }
    }
    rel
}

fn is_subset(small: &[u64], big: &[u64]) -> bool {
    small.iter().zip(big).all(|(a, b)| a & !b == 0)
}
