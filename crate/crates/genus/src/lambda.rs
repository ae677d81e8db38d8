//! Finite binary words standing for infinite 0/1 sequences.
//!
//! A `LambdaSeq` stores a finite prefix; every bit beyond the prefix is 0.
//! The branch-group construction indexes its sequences from 0, the soluble
//! construction from 1, so the first index is part of the value.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error("bitstring must be nonempty and contain only '0' and '1': {0:?}")]
    BadBitstring(String),
    #[error("index {0} is below the first index {1} of this sequence")]
    IndexBelowOrigin(usize, usize),
}

/// A 0/1 sequence given by a finite prefix, padded with 0 beyond it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaSeq {
    bits: Vec<u8>,
    origin: usize,
}

impl LambdaSeq {
    pub fn new(bits: &str, origin: usize) -> Result<Self, LambdaError> {
        if bits.is_empty() {
            return Err(LambdaError::BadBitstring(bits.to_string()));
        }
        let mut v = Vec::with_capacity(bits.len());
        for c in bits.chars() {
            match c {
                '0' => v.push(0),
                '1' => v.push(1),
                _ => return Err(LambdaError::BadBitstring(bits.to_string())),
            }
        }
        Ok(LambdaSeq { bits: v, origin })
    }

    /// Sequence indexed from 0 (branch-group convention).
    pub fn branch(bits: &str) -> Result<Self, LambdaError> {
        Self::new(bits, 0)
    }

    /// Sequence indexed from 1 (soluble-group convention).
    pub fn soluble(bits: &str) -> Result<Self, LambdaError> {
        Self::new(bits, 1)
    }

    pub fn from_bits(bits: Vec<u8>, origin: usize) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        LambdaSeq { bits, origin }
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    /// Length of the stored prefix.
    pub fn prefix_len(&self) -> usize {
        self.bits.len()
    }

    /// The bit at index `n` (total: 0 beyond the stored prefix).
    pub fn bit(&self, n: usize) -> Result<u8, LambdaError> {
        if n < self.origin {
            return Err(LambdaError::IndexBelowOrigin(n, self.origin));
        }
        Ok(*self.bits.get(n - self.origin).unwrap_or(&0))
    }

    /// Copy with the bits at the given indices flipped. Indices below the
    /// origin are rejected by `bit`, so callers validate them first.
    pub fn flipped(&self, indices: &BTreeSet<usize>) -> Result<Self, LambdaError> {
        let max = indices.iter().copied().max().unwrap_or(0);
        let len = self.bits.len().max(if max >= self.origin {
            max - self.origin + 1
        } else {
            0
        });
        let mut bits = Vec::with_capacity(len);
        for i in 0..len {
            bits.push(self.bit(self.origin + i)?);
        }
        for &n in indices {
            if n < self.origin {
                return Err(LambdaError::IndexBelowOrigin(n, self.origin));
            }
            bits[n - self.origin] ^= 1;
        }
        Ok(LambdaSeq { bits, origin: self.origin })
    }

    /// First index at which the two sequences differ, at or after `from`.
    /// Comparison includes the implicit 0-padding.
    pub fn first_difference(&self, other: &LambdaSeq, from: usize) -> Option<usize> {
        let end = self.origin + self.bits.len().max(other.bits.len());
        (from.max(self.origin)..end)
            .find(|&n| self.bit(n).unwrap() != other.bit(n).unwrap())
    }
}

impl fmt::Display for LambdaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_is_zero() {
        let l = LambdaSeq::branch("011").unwrap();
        assert_eq!(l.bit(0).unwrap(), 0);
        assert_eq!(l.bit(1).unwrap(), 1);
        assert_eq!(l.bit(2).unwrap(), 1);
        assert_eq!(l.bit(3).unwrap(), 0);
        assert_eq!(l.bit(100).unwrap(), 0);
    }

    #[test]
    fn soluble_origin() {
        let l = LambdaSeq::soluble("10").unwrap();
        assert_eq!(l.bit(1).unwrap(), 1);
        assert_eq!(l.bit(2).unwrap(), 0);
        assert!(l.bit(0).is_err());
    }

    #[test]
    fn rejects_bad_bitstring() {
        assert!(LambdaSeq::branch("01x").is_err());
        assert!(LambdaSeq::branch("").is_err());
    }

    #[test]
    fn flip_extends_prefix() {
        let l = LambdaSeq::soluble("1").unwrap();
        let f = l.flipped(&[3usize].into_iter().collect()).unwrap();
        assert_eq!(f.to_string(), "101");
    }

    #[test]
    fn first_difference_sees_padding() {
        let a = LambdaSeq::branch("0001").unwrap();
        let b = LambdaSeq::branch("0").unwrap();
        assert_eq!(a.first_difference(&b, 0), Some(3));
        assert_eq!(a.first_difference(&a, 0), None);
    }
}
