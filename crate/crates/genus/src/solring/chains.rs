//! The vectors c_j, the ascending chains H_{lambda,i}, the constructive
//! conjugator g(alpha, beta, n), and the fixed prime sequence.

use std::collections::BTreeSet;

use crate::lambda::LambdaSeq;

use super::elems::{BasisVec, FinVec, GElem, QElem, VecKind};
use super::SolError;

fn check_origin(lambda: &LambdaSeq) -> Result<(), SolError> {
    if lambda.origin() != 1 {
        return Err(SolError::WrongOrigin);
    }
    Ok(())
}

/// c_{2n-1} = e_n, c_{2n} = f_n when lambda(n) = 0; roles swapped when
/// lambda(n) = 1.
pub fn c_vector(lambda: &LambdaSeq, j: usize) -> Result<BasisVec, SolError> {
    check_origin(lambda)?;
    if j < 1 {
        return Err(SolError::BadIndex(j));
    }
    let n = (j + 1) / 2;
    let odd = j % 2 == 1;
    let bit = lambda.bit(n)?;
    let kind_e = odd == (bit == 0);
    Ok(if kind_e {
        BasisVec::e(n as i64)
    } else {
        BasisVec::f(n as i64)
    })
}

/// Generators of H_{lambda,i} = <e_0, f_0, ..., e_{-i}, f_{-i}, c_1, ..., c_i>.
/// The generators are distinct basis vectors, so they are a basis.
pub fn h_generators(lambda: &LambdaSeq, i: usize) -> Result<BTreeSet<BasisVec>, SolError> {
    check_origin(lambda)?;
    if i < 1 {
        return Err(SolError::BadIndex(i));
    }
    let mut gens = BTreeSet::new();
    for m in 0..=i as i64 {
        gens.insert(BasisVec::e(-m));
        gens.insert(BasisVec::f(-m));
    }
    for j in 1..=i {
        gens.insert(c_vector(lambda, j)?);
    }
    Ok(gens)
}

/// Membership in H_{lambda,i}: the generators form a basis, so a vector lies
/// in the span iff its support is contained in the generator set.
pub fn h_contains(lambda: &LambdaSeq, i: usize, v: &FinVec) -> Result<bool, SolError> {
    let gens = h_generators(lambda, i)?;
    Ok(v.support().all(|b| gens.contains(b)))
}

/// Least level at which a single basis vector has entered the chain.
pub fn entry_index(lambda: &LambdaSeq, b: &BasisVec) -> Result<usize, SolError> {
    check_origin(lambda)?;
    if b.index <= 0 {
        return Ok(((-b.index) as usize).max(1));
    }
    let n = b.index as usize;
    let bit = lambda.bit(n)?;
    // c_{2n-1} enters at level 2n-1, c_{2n} at level 2n.
    let first = (b.kind == VecKind::E) == (bit == 0);
    Ok(if first { 2 * n - 1 } else { 2 * n })
}

/// Least i0 with v in H_{lambda,i} for all i >= i0 (the chain ascends, so
/// this is the max of the entry indices over the support; 1 for v = 0).
pub fn h_entry_index(lambda: &LambdaSeq, v: &FinVec) -> Result<usize, SolError> {
    let mut i0 = 1;
    for b in v.support() {
        i0 = i0.max(entry_index(lambda, b)?);
    }
    Ok(i0)
}

/// g(alpha, beta, n): the product of a_m over the positions m >= 1 where the
/// sequences disagree and 2m-1 <= n. Conjugation by g carries H_{alpha,i}
/// onto H_{beta,i} for i = 1..n.
pub fn conjugator(alpha: &LambdaSeq, beta: &LambdaSeq, n: usize) -> Result<GElem, SolError> {
    check_origin(alpha)?;
    check_origin(beta)?;
    if n < 1 {
        return Err(SolError::BadIndex(n));
    }
    let mut invs = Vec::new();
    for m in 1..=(n + 1) / 2 {
        if 2 * m - 1 <= n && alpha.bit(m)? != beta.bit(m)? {
            invs.push(m as i64);
        }
    }
    Ok(GElem::from_q(QElem::from_parts(invs, 0)))
}

/// Does conjugation by g(alpha, beta, n) carry H_{alpha,i} onto H_{beta,i}
/// for every i = 1..n? Checked by transporting generator sets.
pub fn conjugator_postcondition(
    alpha: &LambdaSeq,
    beta: &LambdaSeq,
    n: usize,
) -> Result<bool, SolError> {
    let g = conjugator(alpha, beta, n)?;
    for i in 1..=n {
        let moved: BTreeSet<BasisVec> = h_generators(alpha, i)?
            .into_iter()
            .flat_map(|b| {
                FinVec::singleton(b)
                    .act(&g.q)
                    .support()
                    .copied()
                    .collect::<Vec<_>>()
            })
            .collect();
        if moved != h_generators(beta, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The sequence gamma with H_{gamma,i} = H_{alpha,i}^g, for a conjugator g
/// with no t-part. a_m swaps e_m with f_m, so it flips bit m for m >= 1;
/// a_m with m <= 0 fixes every chain because e_m, f_m enter together.
pub fn conjugated_lambda(alpha: &LambdaSeq, g: &GElem) -> Result<LambdaSeq, SolError> {
    check_origin(alpha)?;
    if g.q.shift() != 0 {
        return Err(SolError::ShiftingConjugator(g.q.shift()));
    }
    let flips: BTreeSet<usize> = g.q.invs().filter(|&m| m >= 1).map(|m| m as usize).collect();
    Ok(alpha.flipped(&flips)?)
}

/// p_i = the i-th prime (p_1 = 2). Trial division against a memoized list,
/// extended on demand: deep brute-force scans touch thousands of levels.
pub fn nth_prime(i: usize) -> i64 {
    use std::sync::{Mutex, OnceLock};
    assert!(i >= 1, "prime indices start at 1");
    static PRIMES: OnceLock<Mutex<Vec<i64>>> = OnceLock::new();
    let mut primes = PRIMES
        .get_or_init(|| Mutex::new(vec![2, 3, 5, 7, 11, 13]))
        .lock()
        .expect("prime cache lock");
    let mut candidate = *primes.last().expect("seeded cache");
    while primes.len() < i {
        candidate += 2;
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| candidate % p != 0)
        {
            primes.push(candidate);
        }
    }
    primes[i - 1]
}
