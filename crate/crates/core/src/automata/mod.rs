//! Deterministic finite automata: language semantics, complement,
//! product-based intersection, minimization and the LTS embedding.

mod alpha;
mod dfa;
mod minimize;
mod product;
mod word;

pub use alpha::alpha_map;
pub(crate) use dfa::validate_alphabet;
pub use dfa::{Dfa, CHECK_MARK, DEFAULT_ENUMERATION_CAP};
pub use minimize::minimize;
pub use product::{intersection_nonempty, language_inclusion};
pub use word::Word;
