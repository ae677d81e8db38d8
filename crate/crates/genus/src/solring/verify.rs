//! Seeded-random sampling in ZG and the two sampled verifications: the
//! conjugation-translation law for J and the equality of the enlarged
//! ideals I_gamma = I_beta.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lambda::LambdaSeq;

use super::chains::{conjugated_lambda, conjugator, entry_index, nth_prime};
use super::elems::{BasisVec, FinVec, GElem, QElem};
use super::ideal::{in_i, in_j};
use super::normaln::NormalN;
use super::ring::RingElem;
use super::SolError;

pub fn random_gelem(rng: &mut impl Rng) -> GElem {
    let support: Vec<BasisVec> = (0..rng.gen_range(0..=2))
        .map(|_| {
            let i = rng.gen_range(-3..=3);
            if rng.gen() {
                BasisVec::e(i)
            } else {
                BasisVec::f(i)
            }
        })
        .collect();
    let invs: Vec<i64> = (0..rng.gen_range(0..=2))
        .map(|_| rng.gen_range(-2..=3))
        .collect();
    GElem {
        v: FinVec::from_support(support),
        q: QElem::from_parts(invs, rng.gen_range(-2..=2)),
    }
}

pub fn random_ring_elem(rng: &mut impl Rng) -> RingElem {
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let c = loop {
            let c = rng.gen_range(-3..=3i64);
            if c != 0 {
                break c;
            }
        };
        (random_gelem(rng), c)
    });
    RingElem::from_terms(terms)
}

/// A member of J_lambda: p_1 ... p_{i0-1} (b - 1) times a random ring
/// element, where i0 is the entry level of the random basis vector b.
pub fn random_j_member(
    lambda: &LambdaSeq,
    rng: &mut impl Rng,
) -> Result<RingElem, SolError> {
    let i = rng.gen_range(-2..=3);
    let b = if rng.gen() {
        BasisVec::e(i)
    } else {
        BasisVec::f(i)
    };
    let i0 = entry_index(lambda, &b)?;
    let scale: i64 = (1..i0).map(nth_prime).product();
    let seed = RingElem::minus_one(GElem::from_basis(b)).scale(scale);
    Ok(seed.mul(&random_ring_elem(rng)))
}

/// A member of (N-1)ZG: (x - 1) times a random ring element for a random
/// x in N_m of the shape e_j + f_j or e_j + e_{j+m}.
pub fn random_n_member(n: &NormalN, rng: &mut impl Rng) -> RingElem {
    let j = rng.gen_range(-2..=2);
    let x = if rng.gen() {
        FinVec::from_support([BasisVec::e(j), BasisVec::f(j)])
    } else {
        FinVec::from_support([BasisVec::e(j), BasisVec::e(j + n.period() as i64)])
    };
    RingElem::minus_one(GElem::from_vec(x)).mul(&random_ring_elem(rng))
}

/// Sample mix shared by the two verifiers: pure random elements, known
/// members, and near-miss perturbations of known members.
fn sample(
    lambda: &LambdaSeq,
    n: Option<&NormalN>,
    idx: usize,
    rng: &mut impl Rng,
) -> Result<RingElem, SolError> {
    Ok(match idx % 4 {
        0 => random_ring_elem(rng),
        1 => random_j_member(lambda, rng)?,
        2 => match n {
            Some(nn) => random_n_member(nn, rng),
            None => random_j_member(lambda, rng)?,
        },
        _ => {
            let near = random_j_member(lambda, rng)?;
            near.add(&RingElem::term(random_gelem(rng), if rng.gen() { 1 } else { -1 }))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorOutcome {
    pub pass: bool,
    pub gamma: LambdaSeq,
    pub conjugator: GElem,
    pub samples: usize,
    pub disagreements: usize,
    /// Least level violating N*H_{gamma,i} = N*H_{beta,i}, if any.
    pub hypothesis_violation: Option<usize>,
}

/// Check I_gamma = I_beta for gamma the conjugate of alpha aligning the
/// first period-1 chain levels with beta's. The hypothesis N*H_{gamma,i} =
/// N*H_{beta,i} is verified by residue-image spans up to a level past which
/// both sides are all of V; the ideal equality itself is sampled.
pub fn verify_annihilator_equality(
    alpha: &LambdaSeq,
    beta: &LambdaSeq,
    n: &NormalN,
    samples: usize,
    seed: u64,
) -> Result<AnnihilatorOutcome, SolError> {
    let k = n.period() - 1;
    let g = if k >= 1 {
        conjugator(alpha, beta, k)?
    } else {
        GElem::identity()
    };
    let gamma = conjugated_lambda(alpha, &g)?;

    let stable_from = n.period().saturating_sub(1).max(1);
    let mut hypothesis_violation = None;
    for i in 1..=stable_from + 2 {
        if n.h_residue_span(&gamma, i)? != n.h_residue_span(beta, i)? {
            hypothesis_violation = Some(i);
            break;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    for idx in 0..samples {
        // Alternate which side the known members come from, so both
        // inclusions are exercised.
        let side = if idx % 8 < 4 { &gamma } else { beta };
        let r = sample(side, Some(n), idx, &mut rng)?;
        if in_i(&gamma, n, &r)?.member != in_i(beta, n, &r)?.member {
            disagreements += 1;
        }
    }
    Ok(AnnihilatorOutcome {
        pass: hypothesis_violation.is_none() && disagreements == 0,
        gamma,
        conjugator: g,
        samples,
        disagreements,
        hypothesis_violation,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslateOutcome {
    pub pass: bool,
    pub gamma: LambdaSeq,
    pub samples: usize,
    pub disagreements: usize,
}

/// Check J_gamma = g^{-1} J_alpha for gamma with H_{gamma,i} = H_{alpha,i}^g:
/// sampled agreement of r in J_gamma with g*r in J_alpha.
pub fn translate_check(
    alpha: &LambdaSeq,
    g: &GElem,
    samples: usize,
    seed: u64,
) -> Result<TranslateOutcome, SolError> {
    let gamma = conjugated_lambda(alpha, g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    for idx in 0..samples {
        let side = if idx % 8 < 4 { &gamma } else { alpha };
        let r = sample(side, None, idx, &mut rng)?;
        let (lhs, translated) = if idx % 8 < 4 {
            (r.clone(), r.left_mul(g))
        } else {
            // Seed members of J_alpha by translating back.
            (r.left_mul(&g.inv()), r)
        };
        if in_j(&gamma, &lhs)?.member != in_j(alpha, &translated)?.member {
            disagreements += 1;
        }
    }
    Ok(TranslateOutcome {
        pass: disagreements == 0,
        gamma,
        samples,
        disagreements,
    })
}
