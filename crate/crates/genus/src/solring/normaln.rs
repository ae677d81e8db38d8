//! The family N_m of G-invariant finite-index subgroups of V, and the F2
//! linear algebra used to test membership in N_m * H_{lambda,i}.
//!
//! N_m is the kernel of the residue map rho: V -> F2^m sending a basis
//! vector with index i (e or f alike) to the unit vector at i mod m. The
//! combined e+f sums make rho constant on a-orbits and t permutes the
//! coordinates cyclically, so N_m is invariant under both.

use crate::lambda::LambdaSeq;

use super::chains::h_generators;
use super::elems::FinVec;
use super::SolError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalN {
    period: usize,
}

impl NormalN {
    pub fn new(period: usize) -> Result<NormalN, SolError> {
        if period < 1 || period > 60 {
            return Err(SolError::BadPeriod(period));
        }
        Ok(NormalN { period })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// rho(v) as an m-bit mask: bit j = parity of the support with index
    /// congruent to j mod m.
    pub fn residue_image(&self, v: &FinVec) -> u64 {
        let mut mask = 0u64;
        for b in v.support() {
            mask ^= 1 << b.index.rem_euclid(self.period as i64);
        }
        mask
    }

    /// v in N_m iff every combined residue sum vanishes.
    pub fn contains(&self, v: &FinVec) -> bool {
        self.residue_image(v) == 0
    }

    /// Reduced F2 basis of rho(H_{lambda,i}); membership in N_m * H_{lambda,i}
    /// is membership of rho(v) in this span.
    pub fn h_residue_span(&self, lambda: &LambdaSeq, i: usize) -> Result<Vec<u64>, SolError> {
        let rows = h_generators(lambda, i)?
            .into_iter()
            .map(|b| self.residue_image(&FinVec::singleton(b)));
        Ok(f2_span(rows))
    }
}

/// Reduced row-echelon basis of the F2 row space: each row has a distinct
/// leading bit, cleared from all other rows; rows sorted descending.
pub fn f2_span(rows: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for mut row in rows {
        for b in &basis {
            row = row.min(row ^ b);
        }
        if row != 0 {
            for b in &mut basis {
                *b = (*b).min(*b ^ row);
            }
            basis.push(row);
        }
    }
    basis.sort_unstable_by(|a, b| b.cmp(a));
    basis
}

pub fn in_f2_span(basis: &[u64], mut x: u64) -> bool {
    for b in basis {
        x = x.min(x ^ b);
    }
    x == 0
}
