//! Elements of V, of the quotient <a,t>, and of G = V x| <a,t>.
//!
//! Normal form: g = v * q with v in V and q = (product of a_i, i in invs)
//! * t^shift. Conjugation of a pure vector by q equals the linear right
//! action of q on V: a_i swaps e_i with f_i, t shifts indices by +1.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VecKind {
    E,
    F,
}

/// One basis vector e_i or f_i. Ordered by index, then kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisVec {
    pub index: i64,
    pub kind: VecKind,
}

impl BasisVec {
    pub fn e(index: i64) -> BasisVec {
        BasisVec { index, kind: VecKind::E }
    }

    pub fn f(index: i64) -> BasisVec {
        BasisVec { index, kind: VecKind::F }
    }

    fn flipped(self) -> BasisVec {
        BasisVec {
            index: self.index,
            kind: match self.kind {
                VecKind::E => VecKind::F,
                VecKind::F => VecKind::E,
            },
        }
    }
}

impl fmt::Display for BasisVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VecKind::E => 'e',
            VecKind::F => 'f',
        };
        write!(f, "{k}{}", self.index)
    }
}

/// A finitely supported F2-vector: coefficient 1 on the support, 0 elsewhere.
/// Addition is symmetric difference.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinVec {
    support: BTreeSet<BasisVec>,
}

impl FinVec {
    pub fn zero() -> FinVec {
        FinVec::default()
    }

    pub fn singleton(b: BasisVec) -> FinVec {
        FinVec {
            support: [b].into_iter().collect(),
        }
    }

    pub fn from_support(support: impl IntoIterator<Item = BasisVec>) -> FinVec {
        // Repeated entries cancel over F2.
        let mut v = FinVec::zero();
        for b in support {
            v = v.add(&FinVec::singleton(b));
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisVec> {
        self.support.iter()
    }

    pub fn add(&self, other: &FinVec) -> FinVec {
        let support = self
            .support
            .symmetric_difference(&other.support)
            .copied()
            .collect();
        FinVec { support }
    }

    /// Linear right action of q: each a_i swaps e_i with f_i, then t^shift
    /// moves every index up by shift.
    pub fn act(&self, q: &QElem) -> FinVec {
        let support = self
            .support
            .iter()
            .map(|b| {
                let b = if q.invs.contains(&b.index) { b.flipped() } else { *b };
                BasisVec {
                    index: b.index + q.shift,
                    kind: b.kind,
                }
            })
            .collect();
        FinVec { support }
    }
}

impl fmt::Display for FinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.support {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{b}")?;
            first = false;
        }
        Ok(())
    }
}

/// An element of <a,t> (a copy of C2 wr C_inf): the product of the
/// involutions a_i over `invs`, followed by t^shift.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QElem {
    invs: BTreeSet<i64>,
    shift: i64,
}

impl QElem {
    pub fn identity() -> QElem {
        QElem::default()
    }

    /// a_i = a^{t^i}, the involution swapping e_i with f_i.
    pub fn a(index: i64) -> QElem {
        QElem {
            invs: [index].into_iter().collect(),
            shift: 0,
        }
    }

    pub fn from_parts(invs: impl IntoIterator<Item = i64>, shift: i64) -> QElem {
        // Repeated a_i cancel.
        let mut acc = QElem { invs: BTreeSet::new(), shift };
        for i in invs {
            if !acc.invs.remove(&i) {
                acc.invs.insert(i);
            }
        }
        acc
    }

    pub fn t_pow(shift: i64) -> QElem {
        QElem {
            invs: BTreeSet::new(),
            shift,
        }
    }

    pub fn invs(&self) -> impl Iterator<Item = i64> + '_ {
        self.invs.iter().copied()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.invs.is_empty() && self.shift == 0
    }

    /// (A_S1 t^k1)(A_S2 t^k2) = A_{S1 xor (S2 - k1)} t^{k1+k2}, from
    /// t^k a_j t^{-k} = a_{j-k}.
    pub fn mul(&self, other: &QElem) -> QElem {
        let mut invs = self.invs.clone();
        for j in &other.invs {
            let moved = j - self.shift;
            if !invs.remove(&moved) {
                invs.insert(moved);
            }
        }
        QElem {
            invs,
            shift: self.shift + other.shift,
        }
    }

    pub fn inv(&self) -> QElem {
        QElem {
            invs: self.invs.iter().map(|j| j + self.shift).collect(),
            shift: -self.shift,
        }
    }
}

impl fmt::Display for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[")?;
        let mut first = true;
        for i in &self.invs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "].t^{}", self.shift)
    }
}

/// An element of G = V x| <a,t> in the normal form v * q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GElem {
    pub v: FinVec,
    pub q: QElem,
}

impl GElem {
    pub fn identity() -> GElem {
        GElem::default()
    }

    pub fn from_vec(v: FinVec) -> GElem {
        GElem {
            v,
            q: QElem::identity(),
        }
    }

    pub fn from_basis(b: BasisVec) -> GElem {
        GElem::from_vec(FinVec::singleton(b))
    }

    pub fn from_q(q: QElem) -> GElem {
        GElem {
            v: FinVec::zero(),
            q,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.v.is_zero() && self.q.is_identity()
    }

    /// (v1 q1)(v2 q2) = (v1 + v2 . q1^{-1}) (q1 q2).
    pub fn mul(&self, other: &GElem) -> GElem {
        GElem {
            v: self.v.add(&other.v.act(&self.q.inv())),
            q: self.q.mul(&other.q),
        }
    }

    pub fn inv(&self) -> GElem {
        GElem {
            v: self.v.act(&self.q),
            q: self.q.inv(),
        }
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[{}].{}", self.v, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64) -> GElem {
        GElem::from_basis(BasisVec::e(i))
    }

    fn t() -> GElem {
        GElem::from_q(QElem::t_pow(1))
    }

    fn a(i: i64) -> GElem {
        GElem::from_q(QElem::a(i))
    }

    #[test]
    fn identity_laws() {
        let x = GElem {
            v: FinVec::singleton(BasisVec::f(-2)),
            q: QElem::from_parts([1, 3], 2),
        };
        assert_eq!(x.mul(&GElem::identity()), x);
        assert_eq!(GElem::identity().mul(&x), x);
        assert!(x.mul(&x.inv()).is_identity());
        assert!(x.inv().mul(&x).is_identity());
    }

    #[test]
    fn a_is_an_involution() {
        assert!(a(0).mul(&a(0)).is_identity());
        assert!(a(5).mul(&a(5)).is_identity());
    }

    #[test]
    fn conjugating_e0_by_t_gives_e1() {
        let conj = t().inv().mul(&e(0)).mul(&t());
        assert_eq!(conj, e(1));
    }

    #[test]
    fn a_i_equals_t_conjugate_of_a() {
        for i in -10..=10i64 {
            let lhs = GElem::from_q(QElem::t_pow(-i))
                .mul(&a(0))
                .mul(&GElem::from_q(QElem::t_pow(i)));
            assert_eq!(lhs, a(i));
        }
    }

    #[test]
    fn conjugation_matches_linear_action() {
        let q = QElem::from_parts([0, 2], -3);
        let v = FinVec::from_support([BasisVec::e(0), BasisVec::f(2), BasisVec::e(5)]);
        let g = GElem::from_q(q.clone());
        let conj = g.inv().mul(&GElem::from_vec(v.clone())).mul(&g);
        assert_eq!(conj, GElem::from_vec(v.act(&q)));
    }

    #[test]
    fn a_action_swaps_e_and_f() {
        let v = FinVec::singleton(BasisVec::e(3));
        assert_eq!(v.act(&QElem::a(3)), FinVec::singleton(BasisVec::f(3)));
        assert_eq!(v.act(&QElem::a(4)), v);
    }

    #[test]
    fn q_mul_matches_action_composition() {
        let q1 = QElem::from_parts([1, -2], 2);
        let q2 = QElem::from_parts([0, 3], -1);
        let v = FinVec::from_support([BasisVec::e(0), BasisVec::f(1), BasisVec::e(-2)]);
        assert_eq!(v.act(&q1.mul(&q2)), v.act(&q1).act(&q2));
    }
}
