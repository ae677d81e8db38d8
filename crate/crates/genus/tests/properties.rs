//! Quantified invariant suites for the permutation kernel, the tree-wreath
//! machinery, and the group-ring algebra, including independent brute-force
//! oracles for the stabilizer-chain code.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use genus::lambda::LambdaSeq;
use genus::permkernel::{derived_subgroup, is_k_transitive, normal_closure, GenSet, Perm,
    StabilizerChain};
use genus::solring::{BasisVec, FinVec, GElem, QElem, RingElem};
use genus::treewreath::{alt5_elements, alpha, beta, gamma_generators, Portrait, ALT5_EXPONENT};

fn random_perm(degree: usize, rng: &mut impl Rng) -> Perm {
    let mut images: Vec<usize> = (1..=degree).collect();
    for i in (1..degree).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Perm::from_images(degree, &images).unwrap()
}

fn image_vec(p: &Perm) -> Vec<usize> {
    (1..=p.degree()).map(|i| p.image(i).unwrap()).collect()
}

/// Independent oracle: the full element set by breadth-first closure.
fn brute_closure(gens: &[Perm]) -> BTreeSet<Vec<usize>> {
    let degree = gens[0].degree();
    let id = Perm::identity(degree);
    let mut seen: BTreeSet<Vec<usize>> = [image_vec(&id)].into_iter().collect();
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = p.compose(g).unwrap();
            if seen.insert(image_vec(&q)) {
                queue.push(q);
            }
        }
    }
    seen
}

#[test]
fn bsgs_agrees_with_brute_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..200 {
        let degree = rng.gen_range(2..=6);
        let gens: Vec<Perm> = (0..rng.gen_range(1..=3))
            .map(|_| random_perm(degree, &mut rng))
            .collect();
        let closure = brute_closure(&gens);
        let chain = StabilizerChain::build(&GenSet::new(degree, gens).unwrap());
        assert_eq!(
            chain.order(),
            closure.len().into(),
            "order mismatch in case {case}"
        );
        for _ in 0..20 {
            let p = random_perm(degree, &mut rng);
            assert_eq!(
                chain.contains(&p).unwrap(),
                closure.contains(&image_vec(&p)),
                "membership mismatch in case {case} for {p}"
            );
        }
    }
}

#[test]
fn normal_closure_is_conjugation_closed() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..25 {
        let group = GenSet::new(
            5,
            (0..2).map(|_| random_perm(5, &mut rng)).collect::<Vec<_>>(),
        )
        .unwrap();
        let seeds = vec![random_perm(5, &mut rng)];
        let closure = normal_closure(&group, &seeds).unwrap();
        let chain = StabilizerChain::build(&closure);
        for h in closure.gens() {
            for g in group.gens() {
                let conj = g.inverse().compose(h).unwrap().compose(g).unwrap();
                assert!(chain.contains(&conj).unwrap());
            }
        }
    }
}

#[test]
fn k_transitivity_is_monotone() {
    let groups = [
        GenSet::new(5, vec![alpha(), beta()]).unwrap(),
        GenSet::new(5, vec![Perm::parse_cycles(5, "(1 2)").unwrap(), beta()]).unwrap(),
        GenSet::new(5, vec![beta()]).unwrap(),
        GenSet::new(6, vec![
            Perm::parse_cycles(6, "(1 2 3 4 5 6)").unwrap(),
            Perm::parse_cycles(6, "(1 2)").unwrap(),
        ])
        .unwrap(),
    ];
    for g in &groups {
        for k in 2..=3 {
            if is_k_transitive(g, k) {
                assert!(is_k_transitive(g, k - 1));
            }
        }
    }
}

#[test]
fn derived_subgroup_of_sym5_is_alt5() {
    let sym5 = GenSet::new(5, vec![Perm::parse_cycles(5, "(1 2)").unwrap(), beta()]).unwrap();
    let derived = derived_subgroup(&sym5);
    assert_eq!(StabilizerChain::build(&derived).order(), 60u32.into());
}

fn random_label_seq(len: usize, rng: &mut impl Rng) -> Vec<Perm> {
    let alt5 = alt5_elements();
    (0..len).map(|_| alt5[rng.gen_range(0..alt5.len())].clone()).collect()
}

#[test]
fn directed_self_similarity_holds_broadly() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let labels = random_label_seq(8, &mut rng);
        let seq = |k: usize| labels[k % labels.len()].clone();
        let shifted = |k: usize| labels[(k + 1) % labels.len()].clone();
        for n in 2..=4 {
            let whole = Portrait::directed(&seq, n).unwrap();
            assert_eq!(
                whole.section(&[1]).unwrap(),
                Portrait::directed(&shifted, n - 1).unwrap()
            );
        }
    }
}

#[test]
fn level_projection_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let alt5 = alt5_elements();
    for _ in 0..100 {
        let p = Portrait::random(3, &alt5, &mut rng);
        let q = Portrait::random(3, &alt5, &mut rng);
        for n in 1..=3 {
            assert_eq!(
                p.compose(&q).unwrap().project(n).unwrap(),
                p.project(n).unwrap().compose(&q.project(n).unwrap()).unwrap()
            );
        }
        // Truncating twice is truncating once.
        for n in 1..=2 {
            assert_eq!(
                p.project(2).unwrap().project(n).unwrap(),
                p.project(n).unwrap()
            );
        }
    }
}

#[test]
fn wreath_exponent_divides_30_to_the_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let alt5 = alt5_elements();
    for n in 1..=3usize {
        for _ in 0..67 {
            let x = Portrait::random(n, &alt5, &mut rng);
            assert!(x.pow((ALT5_EXPONENT as u64).pow(n as u32)).is_identity());
        }
    }
}

#[test]
fn gamma_generators_are_truncation_compatible() {
    for bits in ["0", "01", "110", "1011"] {
        let lambda = LambdaSeq::branch(bits).unwrap();
        for m in 2..=3usize {
            let deep = gamma_generators(&lambda, m).unwrap();
            for n in 1..m {
                let shallow = gamma_generators(&lambda, n).unwrap();
                for (d, s) in deep.iter().zip(shallow.iter()) {
                    assert_eq!(d.project(n).unwrap(), *s);
                }
            }
        }
    }
}

#[test]
fn density_holds_for_all_short_prefixes() {
    for word in 0..16u32 {
        let bits: String = (0..4)
            .map(|i| if word >> i & 1 == 1 { '1' } else { '0' })
            .collect();
        let lambda = LambdaSeq::branch(&bits).unwrap();
        for n in 1..=2 {
            assert!(
                genus::treewreath::density_check(&lambda, n).unwrap().pass,
                "density failed for {bits} at depth {n}"
            );
        }
    }
}

#[test]
fn q_action_is_compatible_with_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..1000 {
        let x = genus::solring::random_gelem(&mut rng);
        let y = genus::solring::random_gelem(&mut rng);
        let v = genus::solring::random_gelem(&mut rng).v;
        assert_eq!(v.act(&x.q.mul(&y.q)), v.act(&x.q).act(&y.q));
    }
}

// Property-based suites over generated values.

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((1..=degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |images| Perm::from_images(degree, &images).unwrap())
}

fn arb_gelem() -> impl Strategy<Value = GElem> {
    (
        proptest::collection::vec((-3i64..=3, any::<bool>()), 0..=2),
        proptest::collection::vec(-2i64..=3, 0..=2),
        -2i64..=2,
    )
        .prop_map(|(support, invs, shift)| GElem {
            v: FinVec::from_support(support.into_iter().map(|(i, e)| {
                if e {
                    BasisVec::e(i)
                } else {
                    BasisVec::f(i)
                }
            })),
            q: QElem::from_parts(invs, shift),
        })
}

fn arb_ring_elem() -> impl Strategy<Value = RingElem> {
    proptest::collection::vec((arb_gelem(), -3i64..=3), 0..=3)
        .prop_map(RingElem::from_terms)
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(p in (2usize..=9).prop_flat_map(arb_perm)) {
        let text = p.to_string();
        prop_assert_eq!(Perm::parse_cycles(p.degree(), &text).unwrap(), p);
    }

    #[test]
    fn perm_inverse_of_product(p in arb_perm(7), q in arb_perm(7)) {
        prop_assert_eq!(
            p.compose(&q).unwrap().inverse(),
            q.inverse().compose(&p.inverse()).unwrap()
        );
    }

    #[test]
    fn ring_axioms(a in arb_ring_elem(), b in arb_ring_elem(), c in arb_ring_elem()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn ring_text_round_trips(a in arb_ring_elem()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<RingElem>().unwrap(), a);
    }

    #[test]
    fn portrait_json_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Portrait::random(2, &alt5_elements(), &mut rng);
        prop_assert_eq!(Portrait::from_json(&p.to_json()).unwrap(), p);
    }
}
