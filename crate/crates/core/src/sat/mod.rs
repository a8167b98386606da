//! CNF formulas, the split-language automata whose intersection is
//! non-empty exactly for satisfiable formulas, and a brute-force solver.

mod cnf;
mod split;

pub use cnf::{
    brute_force_sat, brute_force_sat_capped, parse_dimacs, CnfFormula, Literal,
    DEFAULT_BRUTE_FORCE_CAP,
};
pub use split::{
    assignment_to_witness, build_split_dfa, state_bound_check, Half, StateBound, WitnessWord,
};
