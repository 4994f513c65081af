//! Parity sequences: 0/1 words fixing the grading of the basis.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A word in {0,1} of length `m + n`, with `m` zeros and `n` ones. The
/// standard sequence is `0...01...1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParitySeq {
    bits: Vec<u8>,
}

impl ParitySeq {
    pub fn new(bits: Vec<u8>) -> Result<ParitySeq> {
        if bits.is_empty() {
            return Err(Error::BadParity("empty sequence".into()));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::BadParity("entries must be 0 or 1".into()));
        }
        Ok(ParitySeq { bits })
    }

    /// The standard sequence for given block sizes.
    pub fn standard(m: usize, n: usize) -> Result<ParitySeq> {
        let mut bits = vec![0u8; m];
        bits.extend(std::iter::repeat_n(1u8, n));
        ParitySeq::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of zeros.
    pub fn m(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 0).count()
    }

    /// Number of ones.
    pub fn n(&self) -> usize {
        self.bits.len() - self.m()
    }

    /// Parity of position `i`, 1-based.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Adjacent pair `(s_i, s_{i+1})`, 1-based; valid for `1 <= i < len`.
    pub fn pair(&self, i: usize) -> (u8, u8) {
        (self.bits[i - 1], self.bits[i])
    }

    pub fn is_standard(&self) -> bool {
        self.bits.windows(2).all(|w| w[0] <= w[1])
    }

    /// The sequence with positions `i` and `i+1` exchanged (1-based).
    pub fn swapped(&self, i: usize) -> ParitySeq {
        let mut bits = self.bits.clone();
        bits.swap(i - 1, i);
        ParitySeq { bits }
    }

    /// Smallest position `i` with the pair `10`, if any.
    pub fn first_descent(&self) -> Option<usize> {
        (1..self.bits.len()).find(|&i| self.pair(i) == (1, 0))
    }

    /// Largest position `i` with the pair `10`, if any.
    pub fn last_descent(&self) -> Option<usize> {
        (1..self.bits.len()).rev().find(|&i| self.pair(i) == (1, 0))
    }

    /// Deterministic transition chain to the standard sequence: repeatedly
    /// swap at the smallest `10` position. The returned positions have length
    /// equal to the number of inversions (1-before-0 pairs).
    pub fn chain_to_standard(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut chain = Vec::new();
        while let Some(i) = cur.first_descent() {
            chain.push(i);
            cur = cur.swapped(i);
        }
        chain
    }
}

impl fmt::Display for ParitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ParitySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<ParitySeq> {
        let bits: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(Error::BadParity(format!(
                    "unexpected character {:?}",
                    other
                ))),
            })
            .collect::<Result<_>>()?;
        ParitySeq::new(bits)
    }
}

impl serde::Serialize for ParitySeq {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ParitySeq {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<ParitySeq, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ps(s: &str) -> ParitySeq {
        s.parse().unwrap()
    }

    #[test]
    fn chain_examples() {
        assert_eq!(ps("10").chain_to_standard(), vec![1]);
        assert_eq!(ps("110").chain_to_standard(), vec![2, 1]);
        assert_eq!(ps("011").chain_to_standard(), Vec::<usize>::new());
    }

    #[test]
    fn standard_detection() {
        assert!(ps("0011").is_standard());
        assert!(ps("0").is_standard());
        assert!(ps("1").is_standard());
        assert!(!ps("101").is_standard());
    }

    #[test]
    fn counts() {
        let s = ps("0110");
        assert_eq!((s.m(), s.n()), (2, 2));
        assert_eq!(ParitySeq::standard(2, 2).unwrap(), ps("0011"));
    }

    fn seq_strategy() -> impl Strategy<Value = ParitySeq> {
        proptest::collection::vec(0u8..=1, 1..8).prop_map(|bits| ParitySeq::new(bits).unwrap())
    }

    proptest! {
        #[test]
        fn chain_reaches_standard_with_inversion_count(s in seq_strategy()) {
            let inversions = (1..=s.len())
                .flat_map(|i| ((i + 1)..=s.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| s.bit(i) == 1 && s.bit(j) == 0)
                .count();
            let chain = s.chain_to_standard();
            prop_assert_eq!(chain.len(), inversions);
            let mut cur = s.clone();
            for i in &chain {
                prop_assert_eq!(cur.pair(*i), (1, 0));
                cur = cur.swapped(*i);
            }
            prop_assert!(cur.is_standard());
            prop_assert_eq!((cur.m(), cur.n()), (s.m(), s.n()));
        }
    }
}
