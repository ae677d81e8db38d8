//! Finitely supported integer combinations of group elements (the ring ZG).
//!
//! Text format: signed integer coefficients times terms, each term written
//! `v[e0+f-2].a[1,3].t^k`. A bare integer stands for that multiple of the
//! identity; a term without a coefficient has coefficient 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::elems::{BasisVec, FinVec, GElem, QElem};
use super::SolError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RingElem {
    terms: BTreeMap<GElem, i64>,
}

impl RingElem {
    pub fn zero() -> RingElem {
        RingElem::default()
    }

    pub fn one() -> RingElem {
        RingElem::term(GElem::identity(), 1)
    }

    pub fn term(g: GElem, coeff: i64) -> RingElem {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(g, coeff);
        }
        RingElem { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GElem, i64)>) -> RingElem {
        let mut r = RingElem::zero();
        for (g, c) in terms {
            r.add_term(g, c);
        }
        r
    }

    /// g - 1, the building block of the augmentation-style ideals.
    pub fn minus_one(g: GElem) -> RingElem {
        RingElem::from_terms([(g, 1), (GElem::identity(), -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GElem, i64)> {
        self.terms.iter().map(|(g, &c)| (g, c))
    }

    pub fn coeff_abs_sum(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    fn add_term(&mut self, g: GElem, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> RingElem {
        RingElem {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> RingElem {
        if k == 0 {
            return RingElem::zero();
        }
        RingElem {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &RingElem) -> RingElem {
        let mut out = RingElem::zero();
        for (g, c) in self.terms() {
            for (h, d) in other.terms() {
                out.add_term(g.mul(h), c * d);
            }
        }
        out
    }

    /// g * r, translation by a single group element on the left.
    pub fn left_mul(&self, g: &GElem) -> RingElem {
        RingElem {
            terms: self
                .terms
                .iter()
                .map(|(h, &c)| (g.mul(h), c))
                .collect(),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (g, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c.abs(), g)?;
        }
        Ok(())
    }
}

impl FromStr for RingElem {
    type Err = SolError;

    fn from_str(s: &str) -> Result<RingElem, SolError> {
        Parser::new(s).elem()
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> SolError {
        SolError::Parse(self.src.to_string(), format!("{} at byte {}", msg.into(), self.pos))
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos) == Some(&b' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), SolError> {
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.err(format!("expected {lit:?}")))
        }
    }

    fn int(&mut self) -> Result<i64, SolError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn basis_vec(&mut self) -> Result<BasisVec, SolError> {
        let make: fn(i64) -> BasisVec = if self.eat(b'e') {
            BasisVec::e
        } else if self.eat(b'f') {
            BasisVec::f
        } else {
            return Err(self.err("expected 'e' or 'f'"));
        };
        Ok(make(self.int()?))
    }

    fn gterm(&mut self) -> Result<GElem, SolError> {
        self.expect("v[")?;
        let mut support = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                support.push(self.basis_vec()?);
                if !(self.eat(b'+') || self.eat(b',')) {
                    break;
                }
            }
        }
        self.expect("]")?;
        self.expect(".a[")?;
        let mut invs = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                invs.push(self.int()?);
                if !self.eat(b',') {
                    break;
                }
            }
        }
        self.expect("]")?;
        self.expect(".t^")?;
        let shift = self.int()?;
        Ok(GElem {
            v: FinVec::from_support(support),
            q: QElem::from_parts(invs, shift),
        })
    }

    fn signed_term(&mut self, sign: i64) -> Result<RingElem, SolError> {
        self.skip_ws();
        let mut coeff = 1i64;
        let mut have_coeff = false;
        if matches!(self.peek(), Some(b'0'..=b'9') | Some(b'-')) {
            coeff = self.int()?;
            have_coeff = true;
            self.skip_ws();
        }
        if self.eat(b'*') || (!have_coeff && self.peek() == Some(b'v')) {
            self.skip_ws();
            let g = self.gterm()?;
            Ok(RingElem::term(g, sign * coeff))
        } else if have_coeff {
            Ok(RingElem::term(GElem::identity(), sign * coeff))
        } else {
            Err(self.err("expected a term"))
        }
    }

    fn elem(&mut self) -> Result<RingElem, SolError> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.eat(b'-') {
            sign = -1;
        } else {
            self.eat(b'+');
        }
        let mut out = self.signed_term(sign)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.signed_term(1)?;
                    out = out.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.signed_term(-1)?;
                    out = out.add(&t);
                }
                None => return Ok(out),
                _ => return Err(self.err("trailing input")),
            }
        }
    }
}
