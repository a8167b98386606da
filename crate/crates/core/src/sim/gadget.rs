use crate::lts::{Lts, Transition};

/// The disjoint union of two systems extended with two fresh states `s` and
/// `t`, where `s` has `a`-steps to both initial states and `t` has an
/// `a`-step to the second initial state only.
///
/// In the result, `s` and `t` are simulation equivalent exactly when the
/// first system's initial state is simulated by the second's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub lts: Lts,
    pub s: usize,
    pub t: usize,
    /// Index shift applied to the second system's states.
    pub offset: usize,
}

/// Builds the one-nondeterministic-state gadget over `m1` and `m2`.
///
/// `m1` keeps its indices, `m2` is shifted by `m1.num_states()`, and the
/// fresh `s`, `t` take the next two indices; `s` becomes the initial state.
/// `label` defaults to the first label of `m1` (then of `m2`, then `"a"`);
/// a label absent from both systems is declared fresh.
pub fn ndet_gadget(m1: &Lts, m2: &Lts, label: Option<&str>) -> Gadget {
    let label = label
        .or_else(|| m1.labels().first().map(String::as_str))
        .or_else(|| m2.labels().first().map(String::as_str))
        .unwrap_or("a")
        .to_string();
    let (mut lts, offset) = m1.disjoint_union(m2);
    let a = lts.intern_label(&label);
    let s = lts.add_states(2);
    let t = s + 1;
    let s0 = m1.initial();
    let t0 = m2.initial() + offset;
    lts.add_transitions([
        Transition::new(s, a, s0),
        Transition::new(s, a, t0),
        Transition::new(t, a, t0),
    ]);
    let lts = lts.with_initial(s).expect("fresh state is in range");
    Gadget { lts, s, t, offset }
}
