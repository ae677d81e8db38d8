//! The fixed top group Alt(5) with generator pair (1 2 3), (1 2 3 4 5).

use crate::permkernel::Perm;

/// Exponent of Alt(5): lcm of the element orders 1, 2, 3, 5.
pub const ALT5_EXPONENT: u64 = 30;

pub fn alpha() -> Perm {
    Perm::parse_cycles(5, "(1 2 3)").unwrap()
}

pub fn beta() -> Perm {
    Perm::parse_cycles(5, "(1 2 3 4 5)").unwrap()
}

fn closure(gens: &[Perm]) -> Vec<Perm> {
    let degree = gens[0].degree();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Perm::identity(degree));
    let mut queue = vec![Perm::identity(degree)];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// All 60 elements of Alt(5), sorted.
pub fn alt5_elements() -> Vec<Perm> {
    closure(&[alpha(), beta()])
}

/// All 120 elements of Sym(5), sorted.
pub fn sym5_elements() -> Vec<Perm> {
    closure(&[Perm::parse_cycles(5, "(1 2)").unwrap(), beta()])
}
