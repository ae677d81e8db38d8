//! Deterministic Schreier-Sims: base and strong generating set construction,
//! exact group order, exact membership, normal closures and derived
//! subgroups.

use num_bigint::BigUint;
use num_traits::One;

use super::perm::{GenSet, Perm, PermError};

struct TransEntry {
    rep: Perm,     // maps the base point to the orbit point
    rep_inv: Perm, // maps the orbit point back to the base point
}

struct Level {
    point: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    transversal: Vec<Option<TransEntry>>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Level {
        let mut transversal: Vec<Option<TransEntry>> = (0..degree).map(|_| None).collect();
        transversal[point as usize] = Some(TransEntry {
            rep: Perm::identity(degree),
            rep_inv: Perm::identity(degree),
        });
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
        }
    }
}

/// A base and strong generating set for a permutation group, built by the
/// deterministic Schreier-Sims algorithm. Base points are always the first
/// moved point of the generator that forced a new level, so construction is
/// reproducible.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn build(gens: &GenSet) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree: gens.degree(),
            levels: Vec::new(),
        };
        for g in gens.gens() {
            chain.add_element(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point as usize + 1).collect()
    }

    /// Exact order of the generated group: product of the basic orbit sizes.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    /// Exact membership test.
    pub fn contains(&self, p: &Perm) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch(p.degree(), self.degree));
        }
        let (residue, _) = self.strip(p, 0);
        Ok(residue.is_identity())
    }

    /// Extend the chain with one more group element (no-op if it is already a
    /// member).
    pub fn add_element(&mut self, g: Perm) {
        debug_assert_eq!(g.degree(), self.degree);
        let (residue, level) = self.strip(&g, 0);
        if !residue.is_identity() {
            self.extend_level(level, residue);
        }
    }

    /// Sift `g` through the chain starting at `from`. Returns the residue and
    /// the level at which sifting stopped (== number of levels if it fell off
    /// the end).
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for lvl in from..self.levels.len() {
            if h.is_identity() {
                return (h, lvl);
            }
            let level = &self.levels[lvl];
            let beta = h.image0(level.point);
            match &level.transversal[beta as usize] {
                None => return (h, lvl),
                Some(entry) => h = h.compose_unchecked(&entry.rep_inv),
            }
        }
        (h, self.levels.len())
    }

    /// Install `g` as a strong generator. `g` fixes the base points of all
    /// levels before `lvl` and is not the identity, so it belongs to the
    /// generator lists of every level up to and including `lvl`; deeper
    /// levels first, so the part of the chain a sift relies on is repaired
    /// before the levels above it.
    fn extend_level(&mut self, lvl: usize, g: Perm) {
        debug_assert!(!g.is_identity());
        if lvl == self.levels.len() {
            let point = g.first_moved0().expect("non-identity");
            self.levels.push(Level::new(point, self.degree));
        }
        for i in (0..=lvl).rev() {
            self.install_gen(i, g.clone());
        }
    }

    /// Add `g` to one level's generator list, grow its basic orbit, and
    /// restore the Schreier condition for the pairs not yet examined.
    fn install_gen(&mut self, lvl: usize, g: Perm) {
        let old_orbit_len = self.levels[lvl].orbit.len();
        let new_gen_idx = self.levels[lvl].gens.len();
        self.levels[lvl].gens.push(g);
        self.grow_orbit(lvl);

        // Schreier generators for the pairs not yet examined: every orbit
        // point with the new generator, every new orbit point with every
        // generator. Membership in the part of the chain below this level
        // only ever grows, so pairs that sifted to the identity earlier stay
        // valid.
        let orbit_len = self.levels[lvl].orbit.len();
        let gen_count = self.levels[lvl].gens.len();
        for orbit_idx in 0..orbit_len {
            for gen_idx in 0..gen_count {
                if orbit_idx < old_orbit_len && gen_idx < new_gen_idx {
                    continue;
                }
                let schreier = {
                    let level = &self.levels[lvl];
                    let u = level.orbit[orbit_idx];
                    let s = &level.gens[gen_idx];
                    let v = s.image0(u);
                    let t_u = &level.transversal[u as usize].as_ref().unwrap().rep;
                    let t_v_inv = &level.transversal[v as usize].as_ref().unwrap().rep_inv;
                    t_u.compose_unchecked(s).compose_unchecked(t_v_inv)
                };
                if schreier.is_identity() {
                    continue;
                }
                let (residue, level) = self.strip(&schreier, lvl + 1);
                if !residue.is_identity() {
                    self.extend_level(level, residue);
                }
            }
        }
    }

    fn grow_orbit(&mut self, lvl: usize) {
        let level = &mut self.levels[lvl];
        let mut cursor = 0;
        while cursor < level.orbit.len() {
            let u = level.orbit[cursor];
            cursor += 1;
            for s in &level.gens {
                let v = s.image0(u);
                if level.transversal[v as usize].is_none() {
                    let rep = level.transversal[u as usize]
                        .as_ref()
                        .unwrap()
                        .rep
                        .compose_unchecked(s);
                    let rep_inv = rep.inverse();
                    level.transversal[v as usize] = Some(TransEntry { rep, rep_inv });
                    level.orbit.push(v);
                }
            }
        }
    }
}

/// Generators of the smallest subgroup containing `seeds` and closed under
/// conjugation by the generators of `g`.
pub fn normal_closure(g: &GenSet, seeds: &[Perm]) -> Result<GenSet, PermError> {
    for s in seeds {
        if s.degree() != g.degree() {
            return Err(PermError::DegreeMismatch(s.degree(), g.degree()));
        }
    }
    let mut closure_gens: Vec<Perm> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    let mut chain = StabilizerChain::build(&GenSet::new(g.degree(), closure_gens.clone())?);
    let mut queue: Vec<Perm> = closure_gens.clone();
    while let Some(h) = queue.pop() {
        for s in g.gens() {
            let c = h.conjugate_by(s)?;
            if !chain.contains(&c)? {
                chain.add_element(c.clone());
                closure_gens.push(c.clone());
                queue.push(c);
            }
        }
    }
    GenSet::new(g.degree(), closure_gens)
}

/// Generators of the commutator subgroup: the normal closure of all
/// commutators of generator pairs.
pub fn derived_subgroup(g: &GenSet) -> GenSet {
    let mut commutators = Vec::new();
    for a in g.gens() {
        for b in g.gens() {
            let c = a
                .inverse()
                .compose_unchecked(&b.inverse())
                .compose_unchecked(a)
                .compose_unchecked(b);
            if !c.is_identity() {
                commutators.push(c);
            }
        }
    }
    normal_closure(g, &commutators).expect("degrees agree by construction")
}

/// True iff the action on ordered k-tuples of distinct points is transitive.
pub fn is_k_transitive(g: &GenSet, k: usize) -> bool {
    let d = g.degree();
    assert!(k >= 1 && k <= d, "k must satisfy 1 <= k <= degree");
    let start: Vec<u32> = (0..k as u32).collect();
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    while let Some(tuple) = queue.pop() {
        for s in g.gens() {
            let image: Vec<u32> = tuple.iter().map(|&x| s.image0(x)).collect();
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    let mut target: u64 = 1;
    for i in 0..k {
        target *= (d - i) as u64;
    }
    seen.len() as u64 == target
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Perm {
        Perm::parse_cycles(d, s).unwrap()
    }

    fn gens(d: usize, ss: &[&str]) -> GenSet {
        GenSet::new(d, ss.iter().map(|s| p(d, s)).collect()).unwrap()
    }

    #[test]
    fn alt5_order_60() {
        let g = gens(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let chain = StabilizerChain::build(&g);
        assert_eq!(chain.order(), BigUint::from(60u32));
        for gen in g.gens() {
            assert!(chain.contains(gen).unwrap());
        }
    }

    #[test]
    fn trivial_group_order_1() {
        let g = GenSet::new(5, vec![Perm::identity(5)]).unwrap();
        let chain = StabilizerChain::build(&g);
        assert_eq!(chain.order(), BigUint::one());
        assert!(chain.contains(&Perm::identity(5)).unwrap());
        assert!(!chain.contains(&p(5, "(1 2)")).unwrap());
    }

    #[test]
    fn sym5_order_120() {
        let g = gens(5, &["(1 2)", "(1 2 3 4 5)"]);
        assert_eq!(StabilizerChain::build(&g).order(), BigUint::from(120u32));
    }

    #[test]
    fn order_invariant_under_generator_permutation() {
        let a = gens(6, &["(1 2)", "(1 2 3 4 5 6)", "(3 4)(5 6)"]);
        let b = gens(6, &["(3 4)(5 6)", "(1 2)", "(1 2 3 4 5 6)"]);
        assert_eq!(
            StabilizerChain::build(&a).order(),
            StabilizerChain::build(&b).order()
        );
    }

    #[test]
    fn contains_checks_degree() {
        let chain = StabilizerChain::build(&gens(5, &["(1 2 3)"]));
        assert!(chain.contains(&p(6, "(1 2)")).is_err());
    }

    #[test]
    fn normal_closure_of_identity_is_trivial() {
        let g = gens(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let closure = normal_closure(&g, &[Perm::identity(5)]).unwrap();
        assert_eq!(StabilizerChain::build(&closure).order(), BigUint::one());
    }

    #[test]
    fn normal_closure_in_simple_group_is_everything() {
        let g = gens(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let closure = normal_closure(&g, &[p(5, "(1 2 3)")]).unwrap();
        let chain = StabilizerChain::build(&closure);
        assert_eq!(chain.order(), BigUint::from(60u32));
        // conjugation-closed
        for h in closure.gens() {
            for s in g.gens() {
                assert!(chain.contains(&h.conjugate_by(s).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn derived_subgroup_of_sym5_is_alt5() {
        let g = gens(5, &["(1 2)", "(1 2 3 4 5)"]);
        let derived = derived_subgroup(&g);
        assert_eq!(StabilizerChain::build(&derived).order(), BigUint::from(60u32));
    }

    #[test]
    fn derived_subgroup_of_abelian_is_trivial() {
        let g = gens(5, &["(1 2 3 4 5)"]);
        let derived = derived_subgroup(&g);
        assert_eq!(StabilizerChain::build(&derived).order(), BigUint::one());
    }

    #[test]
    fn transitivity() {
        let alt5 = gens(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(is_k_transitive(&alt5, 1));
        assert!(is_k_transitive(&alt5, 2));
        assert!(is_k_transitive(&alt5, 3));
        assert!(!is_k_transitive(&alt5, 4)); // Alt(5) is not 4-transitive
        let cyclic = gens(5, &["(1 2 3 4 5)"]);
        assert!(is_k_transitive(&cyclic, 1));
        assert!(!is_k_transitive(&cyclic, 2));
    }
}
