//! Kripke r-model semantics for the monadic negational fragment of
//! Intuitionistic Control Logic, with classification of negation-words.
//!
//! The two negations are `~A` (intuitionistic, `A -> 0`) and `!A`
//! (`A -> bot`). Every word over them applied to `p` falls into one of
//! fifteen equivalence classes; [`classify`] finds the class by evaluating
//! in a nine-model suite and [`rewrite`] finds it syntactically.
//!
//! ```
//! use iclneg::{normalize, parse_nword};
//!
//! let w = parse_nword("!!~~!p").unwrap();
//! assert_eq!(normalize(&w).to_string(), "~~!p");
//! ```

pub mod appendix;
pub mod classify;
pub mod commands;
pub mod enumerate;
pub mod error;
pub mod formula;
pub mod model;
pub mod parse;
pub mod poset;
pub mod rewrite;
pub mod verify;

pub use classify::{
    census, equivalent, normalize_semantic, preceq, signature, EquivClass, Signature,
};
pub use enumerate::{
    canonical_suite, check_validity, enumerate_rmodels, find_countermodel, ContextId,
    Countermodel, ModelPool, SearchBound,
};
pub use error::{Error, Result};
pub use formula::{Formula, NWord, NegKind};
pub use model::{validate_model, RModel, RawModel};
pub use parse::{parse_formula, parse_nword, ParseError};
pub use poset::{build_poset, emit_dot, hasse_edges, Poset};
pub use rewrite::normalize;
