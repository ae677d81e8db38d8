//! Exact permutation-group engine.
//!
//! Points are 1-based in the public API and act on the right:
//! `compose(p, q)` applies `p` first, then `q`. Orders are arbitrary
//! precision; a depth-3 iterated wreath product already has order 60^31.

mod bsgs;
mod perm;

pub use bsgs::{derived_subgroup, is_k_transitive, normal_closure, StabilizerChain};
pub use perm::{GenSet, Perm, PermError};
