use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images are not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("invalid cycle notation {0:?}: {1}")]
    BadCycleNotation(String, String),
    #[error("degree must be positive")]
    ZeroDegree,
}

/// A permutation of `{1..=degree}`, stored as the image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>, // 0-based internally
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from 1-based images; `images[i]` is the image of point `i+1`.
    pub fn from_images(degree: usize, images: &[usize]) -> Result<Perm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if images.len() != degree {
            return Err(PermError::DegreeMismatch(images.len(), degree));
        }
        let mut seen = vec![false; degree];
        let mut v = Vec::with_capacity(degree);
        for &im in images {
            if im < 1 || im > degree {
                return Err(PermError::PointOutOfRange(im, degree));
            }
            if seen[im - 1] {
                return Err(PermError::NotBijection(degree));
            }
            seen[im - 1] = true;
            v.push((im - 1) as u32);
        }
        Ok(Perm { images: v })
    }

    pub(crate) fn from_images0(images: Vec<u32>) -> Perm {
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> Result<usize, PermError> {
        if point < 1 || point > self.degree() {
            return Err(PermError::PointOutOfRange(point, self.degree()));
        }
        Ok(self.images[point - 1] as usize + 1)
    }

    #[inline]
    pub(crate) fn image0(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// Smallest moved point (0-based), if any.
    pub(crate) fn first_moved0(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &im)| *i as u32 != im)
            .map(|(i, _)| i as u32)
    }

    /// `(x)compose(p, q) = ((x)p)q` for every point `x`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        let images = self
            .images
            .iter()
            .map(|&x| other.images[x as usize])
            .collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Perm { images }
    }

    /// `other^{-1} * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Result<Perm, PermError> {
        other.inverse().compose(self)?.compose(other)
    }

    /// Least `k >= 1` with `self^k = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for len in self.cycle_lengths() {
            order = order.lcm(&BigUint::from(len));
        }
        order
    }

    pub fn pow(&self, e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    fn cycle_lengths(&self) -> Vec<u64> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x as usize] {
                seen[x as usize] = true;
                len += 1;
                x = self.images[x as usize];
            }
            out.push(len);
        }
        out
    }

    /// Parse cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    /// Cycles may be separated by whitespace, points by whitespace or commas.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let bad = |msg: &str| PermError::BadCycleNotation(text.to_string(), msg.to_string());
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(bad("empty input"));
        }
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
            if !rest[..open].trim().is_empty() {
                return Err(bad("unexpected text before '('"));
            }
            let close = rest.find(')').ok_or_else(|| bad("unbalanced '('"))?;
            if close < open {
                return Err(bad("unbalanced ')'"));
            }
            let body = &rest[open + 1..close];
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad("not a point")))
                .collect::<Result<_, _>>()?;
            if points.len() == 1 {
                return Err(bad("cycle of length 1"));
            }
            for &p in &points {
                if p < 1 || p > degree {
                    return Err(PermError::PointOutOfRange(p, degree));
                }
                if touched[p - 1] {
                    return Err(bad("point repeated across cycles"));
                }
                touched[p - 1] = true;
            }
            for i in 0..points.len() {
                let from = points[i] - 1;
                let to = points[(i + 1) % points.len()] - 1;
                images[from] = to as u32;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A list of permutations of one common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSet {
    degree: usize,
    gens: Vec<Perm>,
}

impl GenSet {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<GenSet, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(g.degree(), degree));
            }
        }
        Ok(GenSet { degree, gens })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5(s: &str) -> Perm {
        Perm::parse_cycles(5, s).unwrap()
    }

    #[test]
    fn compose_identity_and_inverse() {
        let a = p5("(1 2 3)");
        let id = Perm::identity(5);
        assert_eq!(a.compose(&id).unwrap(), a);
        assert_eq!(a.compose(&a.inverse()).unwrap(), id);
    }

    #[test]
    fn compose_inverse_pair() {
        assert_eq!(
            p5("(1 2 3)").compose(&p5("(1 3 2)")).unwrap(),
            Perm::identity(5)
        );
    }

    #[test]
    fn compose_hand_trace() {
        // 1->3, 3->2, 2->4, 4->5, 5->1, i.e. the cycle (1 3 2 4 5).
        let got = p5("(1 2 3)").compose(&p5("(1 2 3 4 5)")).unwrap();
        assert_eq!(got, p5("(1 3 2 4 5)"));
    }

    #[test]
    fn orders() {
        assert_eq!(Perm::identity(5).order(), BigUint::from(1u32));
        assert_eq!(p5("(1 2 3)").order(), BigUint::from(3u32));
        assert_eq!(p5("(1 2 3 4 5)").order(), BigUint::from(5u32));
        assert_eq!(
            Perm::parse_cycles(6, "(1 2)(3 4 5)").unwrap().order(),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = p5("(1 2 3)");
        let b = Perm::parse_cycles(6, "(1 2)").unwrap();
        assert!(matches!(a.compose(&b), Err(PermError::DegreeMismatch(5, 6))));
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["()", "(1 2 3)", "(1 2 3)(4 5)", "(2 4)(3 5)"] {
            let p = p5(s);
            assert_eq!(p.to_string(), s);
        }
        assert_eq!(p5("(1,2,3) (4 5)").to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse_cycles(5, "(1 2 3").is_err());
        assert!(Perm::parse_cycles(5, "(1 1)").is_err());
        assert!(Perm::parse_cycles(5, "(1 2)(2 3)").is_err());
        assert!(Perm::parse_cycles(5, "(1 6)").is_err());
        assert!(Perm::parse_cycles(5, "").is_err());
    }

    #[test]
    fn genset_checks_degrees() {
        let a = p5("(1 2 3)");
        let b = Perm::parse_cycles(6, "(1 2)").unwrap();
        assert!(GenSet::new(5, vec![a.clone()]).is_ok());
        assert!(GenSet::new(5, vec![a, b]).is_err());
    }
}
