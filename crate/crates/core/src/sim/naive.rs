use crate::lts::{Adjacency, Lts};

use super::relation::transfers;
use super::SimRelation;

/// Greatest simulation relation by repeated deletion.
///
/// Starts from `S × S` and sweeps all pairs in row-major order, deleting any
/// pair that fails the transfer condition, until a full sweep deletes
/// nothing. Cubic or worse; kept as the reference the faster algorithm is
/// checked against.
pub fn naive_similarity(lts: &Lts) -> SimRelation {
    let n = lts.num_states();
    let adj = Adjacency::new(lts);
    let mut rel = SimRelation::full(n);
    loop {
        let mut changed = false;
        for s in 0..n {
            for t in 0..n {
                if rel.contains(s, t) && !transfers(&rel, &adj, s, t) {
                    rel.remove(s, t);
                    changed = true;
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}
