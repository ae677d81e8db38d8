//! Exact arithmetic in G = V x| <a,t> (V an F2-space with basis e_i, f_i,
//! the quotient <a,t> a copy of C2 wr C_inf), the ascending subgroup chains
//! H_{lambda,i} of V, and decidable membership in the annihilator right
//! ideals J_lambda and their enlargements by (N-1)ZG. All "for every i"
//! conditions are reduced to certified finite truncations.

mod chains;
mod elems;
mod ideal;
mod normaln;
mod ring;
mod verify;

pub use chains::{
    c_vector, conjugated_lambda, conjugator, conjugator_postcondition, entry_index, h_contains,
    h_entry_index, h_generators, nth_prime,
};
pub use elems::{BasisVec, FinVec, GElem, QElem, VecKind};
pub use ideal::{
    coset_eq, decode_bit, decode_prefix, eval_u, in_i, in_j, in_j_with_bound, in_v_ideal,
    residual_witness, EvalOutcome, Membership, UWitness,
};
pub use normaln::NormalN;
pub use ring::RingElem;
pub use verify::{
    random_gelem, random_j_member, random_n_member, random_ring_elem, translate_check,
    verify_annihilator_equality, AnnihilatorOutcome, TranslateOutcome,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolError {
    #[error("index must be >= 1, got {0}")]
    BadIndex(usize),
    #[error("sequence must be indexed from 1 for the soluble construction")]
    WrongOrigin,
    #[error("period must lie in 1..=60, got {0}")]
    BadPeriod(usize),
    #[error("conjugator must have zero shift (got t^{0})")]
    ShiftingConjugator(i64),
    #[error("element is a member; no residual witness exists")]
    NoWitness,
    #[error("cannot parse ring element {0:?}: {1}")]
    Parse(String, String),
    #[error(transparent)]
    Lambda(#[from] crate::lambda::LambdaError),
}
