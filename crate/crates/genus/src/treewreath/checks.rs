//! Finite-level checks for the branch-group construction: density of the
//! four-generator subgroups, realization of level stabilizers as closures of
//! e^n-th powers, and the coprime-order distinguishing argument.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lambda::LambdaSeq;
use crate::permkernel::{normal_closure, GenSet, Perm, StabilizerChain};

use super::alt5::{alpha, alt5_elements, beta, sym5_elements, ALT5_EXPONENT};
use super::portrait::{Portrait, TreeError};

fn alt5_cached() -> &'static [Perm] {
    static CELL: OnceLock<Vec<Perm>> = OnceLock::new();
    CELL.get_or_init(alt5_elements)
}

/// |W_n| = 60^((5^n - 1)/4) under the convention W_n <= Sym(5^n).
pub fn wreath_order(depth: usize) -> BigUint {
    let coords = (5u64.pow(depth as u32) - 1) / 4;
    BigUint::from(60u32).pow(coords as u32)
}

/// Generating portraits for W_n: rooted copies of the Alt(5) generators plus
/// one copy at the vertex 1^l for each level l >= 1 (conjugation by the
/// transitive action above reaches the other vertices of the level).
pub fn wreath_generator_portraits(depth: usize) -> Result<Vec<Portrait>, TreeError> {
    if depth == 0 {
        return Err(TreeError::ZeroDepth);
    }
    let mut gens = vec![
        Portrait::rooted(&alpha(), depth)?,
        Portrait::rooted(&beta(), depth)?,
    ];
    for level in 1..depth {
        let path = vec![1usize; level];
        gens.push(Portrait::single_label(&path, &alpha(), depth)?);
        gens.push(Portrait::single_label(&path, &beta(), depth)?);
    }
    Ok(gens)
}

/// Same generators as leaf permutations.
pub fn wreath_generators(depth: usize) -> Result<GenSet, TreeError> {
    let portraits = wreath_generator_portraits(depth)?;
    let degree = 5usize.pow(depth as u32);
    Ok(GenSet::new(degree, portraits.iter().map(|p| p.to_perm()).collect())?)
}

/// A uniformly random element of W_n: independent uniform Alt(5) labels at
/// every internal vertex.
pub fn random_wreath_element<R: Rng>(depth: usize, rng: &mut R) -> Portrait {
    Portrait::random(depth, alt5_cached(), rng)
}

/// The four truncated generators xi, eta, a, b of Gamma(lambda) as portraits
/// of the given depth. `lambda` must be indexed from 0.
pub fn gamma_generators(lambda: &LambdaSeq, depth: usize) -> Result<[Portrait; 4], TreeError> {
    let alpha_k = |k: usize| -> Perm {
        if lambda.bit(k).expect("origin 0") == 0 {
            alpha()
        } else {
            beta()
        }
    };
    let beta_k = |k: usize| -> Perm {
        if lambda.bit(k).expect("origin 0") == 0 {
            beta()
        } else {
            alpha()
        }
    };
    let xi = Portrait::rooted(&alpha_k(0), depth)?;
    let eta = Portrait::rooted(&beta_k(0), depth)?;
    let a = Portrait::directed(&alpha_k, depth)?;
    let b = Portrait::directed(&beta_k, depth)?;
    Ok([xi, eta, a, b])
}

/// The same four generators as permutations of the 5^depth leaves.
pub fn gamma_generator_perms(lambda: &LambdaSeq, depth: usize) -> Result<GenSet, TreeError> {
    let portraits = gamma_generators(lambda, depth)?;
    let degree = 5usize.pow(depth as u32);
    Ok(GenSet::new(degree, portraits.iter().map(|p| p.to_perm()).collect())?)
}

#[derive(Debug, Clone)]
pub struct DensityOutcome {
    pub pass: bool,
    pub order: BigUint,
    pub expected: BigUint,
}

/// Density at finite level: the image of Gamma(lambda) at depth n is all of
/// W_n.
pub fn density_check(lambda: &LambdaSeq, depth: usize) -> Result<DensityOutcome, TreeError> {
    if depth == 0 {
        return Err(TreeError::ZeroDepth);
    }
    let gens = gamma_generator_perms(lambda, depth)?;
    let order = StabilizerChain::build(&gens).order();
    let expected = wreath_order(depth);
    Ok(DensityOutcome {
        pass: order == expected,
        order,
        expected,
    })
}

#[derive(Debug, Clone)]
pub struct PowerClosureOutcome {
    /// Every sampled e^n-th power fixes the first n levels.
    pub powers_in_kernel: bool,
    /// Order reached by the sampled normal closure.
    pub achieved: BigUint,
    pub expected: BigUint,
    pub pass: bool,
    /// Closure fell short of the kernel order: more samples might close the
    /// gap, so this is not a refutation.
    pub inconclusive: bool,
}

/// St(n) as the normal closure of 30^n-th powers, verified inside W_m by
/// sampling: the inclusion of the powers in the kernel is checked directly,
/// the reverse inclusion is certified by the sampled closure reaching the
/// exact kernel order |W_m| / |W_n|.
pub fn power_closure_check(
    depth: usize,
    level: usize,
    samples: usize,
    seed: u64,
) -> Result<PowerClosureOutcome, TreeError> {
    if depth == 0 || level > depth {
        return Err(TreeError::DepthMismatch(level, depth));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exponent = ALT5_EXPONENT.pow(level as u32);
    let mut sample_set = wreath_generator_portraits(depth)?;
    for _ in 0..samples {
        sample_set.push(random_wreath_element(depth, &mut rng));
    }

    let mut powers_in_kernel = true;
    let mut seeds = Vec::new();
    for x in &sample_set {
        let power = x.pow(exponent);
        if !power.fixes_levels(level)? {
            powers_in_kernel = false;
        }
        if !power.is_identity() {
            seeds.push(power.to_perm());
        }
    }

    let group = wreath_generators(depth)?;
    let closure = normal_closure(&group, &seeds)?;
    let achieved = StabilizerChain::build(&closure).order();
    let expected = wreath_order(depth) / wreath_order(level);
    let pass = powers_in_kernel && achieved == expected;
    Ok(PowerClosureOutcome {
        powers_in_kernel,
        inconclusive: powers_in_kernel && achieved < expected,
        achieved,
        expected,
        pass,
    })
}

#[derive(Debug, Clone)]
pub struct AutSearch {
    /// Total number of automorphisms of Alt(5) found by brute force.
    pub count: usize,
    /// An element of Sym(5) conjugating source to target, if one exists.
    pub witness: Option<Perm>,
}

/// Brute-force enumeration of Aut(Alt(5)): all candidate images of the
/// generator pair that extend to an automorphism, cross-checked against
/// conjugation by each of the 120 elements of Sym(5). Returns a witness
/// sending `source` to `target` if any automorphism does.
pub fn aut_alt5_search(source: &Perm, target: &Perm) -> Result<AutSearch, TreeError> {
    let elements = alt5_cached();
    let in_alt5 = |p: &Perm| elements.binary_search(p).is_ok();
    if !in_alt5(source) {
        return Err(TreeError::NotInAlt5(source.clone()));
    }
    if !in_alt5(target) {
        return Err(TreeError::NotInAlt5(target.clone()));
    }

    // Express each element as a word in the generators.
    let a = alpha();
    let b = beta();
    let mut words: std::collections::BTreeMap<Perm, Vec<u8>> = std::collections::BTreeMap::new();
    words.insert(Perm::identity(5), vec![]);
    let mut queue = vec![Perm::identity(5)];
    while let Some(g) = queue.pop() {
        let w = words[&g].clone();
        for (idx, s) in [&a, &b].into_iter().enumerate() {
            let h = g.compose(s).unwrap();
            if !words.contains_key(&h) {
                let mut wh = w.clone();
                wh.push(idx as u8);
                words.insert(h.clone(), wh);
                queue.push(h);
            }
        }
    }
    debug_assert_eq!(words.len(), 60);

    let eval = |word: &[u8], x: &Perm, y: &Perm| -> Perm {
        let mut acc = Perm::identity(5);
        for &g in word {
            acc = acc.compose(if g == 0 { x } else { y }).unwrap();
        }
        acc
    };

    let three = BigUint::from(3u32);
    let five = BigUint::from(5u32);
    let mut brute_pairs: BTreeSet<(Perm, Perm)> = BTreeSet::new();
    for x in elements.iter().filter(|x| x.order() == three) {
        'pair: for y in elements.iter().filter(|y| y.order() == five) {
            // Candidate map alpha -> x, beta -> y, extended along words.
            let phi: std::collections::BTreeMap<&Perm, Perm> = words
                .iter()
                .map(|(g, w)| (g, eval(w, x, y)))
                .collect();
            // Homomorphism on generators implies homomorphism everywhere.
            for (g, pg) in &phi {
                for (s, ps) in [(&a, x), (&b, y)] {
                    let gs = g.compose(s).unwrap();
                    if phi[&gs] != pg.compose(ps).unwrap() {
                        continue 'pair;
                    }
                }
            }
            let image: BTreeSet<&Perm> = phi.values().collect();
            if image.len() == 60 {
                brute_pairs.insert((x.clone(), y.clone()));
            }
        }
    }

    // Independent route: every conjugation by Sym(5) is an automorphism.
    let sym5 = sym5_elements();
    let conj_pairs: BTreeSet<(Perm, Perm)> = sym5
        .iter()
        .map(|s| (a.conjugate_by(s).unwrap(), b.conjugate_by(s).unwrap()))
        .collect();
    assert_eq!(
        brute_pairs, conj_pairs,
        "brute-force automorphism enumeration disagrees with Sym(5) conjugation"
    );

    let witness = sym5
        .iter()
        .find(|s| &source.conjugate_by(s).unwrap() == target)
        .cloned();
    Ok(AutSearch {
        count: brute_pairs.len(),
        witness,
    })
}

#[derive(Debug, Clone)]
pub struct DistinguishOutcome {
    pub pass: bool,
    /// First index (>= 1) at which the sequences differ.
    pub index: usize,
    /// The distinguished vertex 1^(k-1) 2.
    pub vertex: String,
    /// Orders of the two section labels.
    pub orders: (u64, u64),
    pub automorphism_count: usize,
}

/// Distinguish Gamma(mu) from Gamma(nu) at finite depth: at the first index
/// where the sequences differ, the sections of the directed generators at the
/// distinguished vertex are rooted with top permutations of coprime orders
/// 3 and 5, so no automorphism of Alt(5) can match them.
pub fn distinguish_pair(
    mu: &LambdaSeq,
    nu: &LambdaSeq,
    depth: usize,
) -> Result<DistinguishOutcome, TreeError> {
    // The directed generators consume sequence entries from index 1, and the
    // section at 1^(k-1) 2 needs depth at least 1, so only 1 <= k < depth is
    // usable.
    let k = match mu.first_difference(nu, 1) {
        Some(k) if k < depth => k,
        _ => return Err(TreeError::IndistinguishablePrefix),
    };
    let a_mu = gamma_generators(mu, depth)?[2].clone();
    let a_nu = gamma_generators(nu, depth)?[2].clone();
    let mut path = vec![1usize; k - 1];
    path.push(2);
    let s_mu = a_mu.section(&path)?;
    let s_nu = a_nu.section(&path)?;

    let rooted = s_mu.is_rooted() && s_nu.is_rooted();
    let top_mu = s_mu.root_label().cloned().unwrap_or_else(|| Perm::identity(5));
    let top_nu = s_nu.root_label().cloned().unwrap_or_else(|| Perm::identity(5));
    let order_of = |p: &Perm| -> u64 {
        use num_traits::ToPrimitive;
        p.order().to_u64().unwrap()
    };
    let orders = (order_of(&top_mu), order_of(&top_nu));
    let coprime_pair = orders == (3, 5) || orders == (5, 3);
    let search = aut_alt5_search(&top_mu, &top_nu)?;
    let vertex: String = path.iter().map(|d| d.to_string()).collect();
    Ok(DistinguishOutcome {
        pass: rooted && coprime_pair && search.witness.is_none(),
        index: k,
        vertex,
        orders,
        automorphism_count: search.count,
    })
}

#[derive(Debug, Clone)]
pub struct ConditionOutcome {
    pub pass: bool,
    pub two_transitive: bool,
    pub p_order: BigUint,
    pub p_perfect: bool,
    pub phi_images_full: bool,
}

/// The instance conditions: Alt(5) is 2-transitive; P = <(alpha,beta),
/// (beta,alpha)> inside Sym(10) is perfect of order 3600; each projection
/// image <alpha_n, beta_n> is all of Alt(5).
pub fn condition_check() -> ConditionOutcome {
    let alt5 = GenSet::new(5, vec![alpha(), beta()]).unwrap();
    let two_transitive = crate::permkernel::is_k_transitive(&alt5, 2);

    // (alpha, beta) and (beta, alpha) acting on two disjoint 5-point blocks.
    let pair = |first: &Perm, second: &Perm| -> Perm {
        let mut images = vec![0usize; 10];
        for i in 1..=5 {
            images[i - 1] = first.image(i).unwrap();
            images[i + 4] = second.image(i).unwrap() + 5;
        }
        Perm::from_images(10, &images).unwrap()
    };
    let p = GenSet::new(10, vec![pair(&alpha(), &beta()), pair(&beta(), &alpha())]).unwrap();
    let p_order = StabilizerChain::build(&p).order();
    let derived_order = StabilizerChain::build(&crate::permkernel::derived_subgroup(&p)).order();
    let p_perfect = derived_order == p_order;

    let sixty = BigUint::from(60u32);
    let mut phi_images_full = true;
    for bit in [0u8, 1u8] {
        let (a_n, b_n) = if bit == 0 {
            (alpha(), beta())
        } else {
            (beta(), alpha())
        };
        let image = GenSet::new(5, vec![a_n, b_n]).unwrap();
        if StabilizerChain::build(&image).order() != sixty {
            phi_images_full = false;
        }
    }

    ConditionOutcome {
        pass: two_transitive && p_order == BigUint::from(3600u32) && p_perfect && phi_images_full,
        two_transitive,
        p_order,
        p_perfect,
        phi_images_full,
    }
}
