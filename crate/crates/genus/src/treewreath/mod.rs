//! Automorphisms of the truncated 5-regular rooted tree, the iterated wreath
//! products W_n, the four-generator dense subgroups Gamma(lambda), and the
//! finite-level checks built on them: density, power closure, and the
//! coprime-order distinguishing argument.

mod alt5;
mod checks;
mod portrait;

pub use alt5::{alpha, alt5_elements, beta, sym5_elements, ALT5_EXPONENT};
pub use checks::{
    aut_alt5_search, condition_check, density_check, distinguish_pair, gamma_generator_perms,
    gamma_generators, power_closure_check, random_wreath_element, wreath_generators, wreath_order,
    AutSearch, ConditionOutcome, DensityOutcome, DistinguishOutcome, PowerClosureOutcome,
};
pub use portrait::{Portrait, TreeError, ARITY};
