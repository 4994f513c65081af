//! Monic polynomials as root multisets, and reduced rational functions.
//!
//! Root convention: a stored root value `r` represents the factor `(u + r)`,
//! so the polynomial vanishes at `u = -r`. Multisets are kept sorted
//! descending, which makes equality, hashing and the anti-string ordering of
//! reflection roots canonical.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dense;
use crate::rat::Rat;
use crate::{Error, Result};

/// A multiset of exact rational roots, sorted descending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rat>", into = "Vec<Rat>")]
pub struct RootMultiset {
    roots: Vec<Rat>,
}

impl From<Vec<Rat>> for RootMultiset {
    fn from(roots: Vec<Rat>) -> RootMultiset {
        RootMultiset::new(roots)
    }
}

impl From<RootMultiset> for Vec<Rat> {
    fn from(m: RootMultiset) -> Vec<Rat> {
        m.roots
    }
}

impl RootMultiset {
    pub fn new(mut roots: Vec<Rat>) -> RootMultiset {
        roots.sort_by(|a, b| b.cmp(a));
        RootMultiset { roots }
    }

    pub fn empty() -> RootMultiset {
        RootMultiset { roots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots in descending order.
    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.roots.iter()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.roots
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &RootMultiset) -> RootMultiset {
        let mut roots = self.roots.clone();
        roots.extend_from_slice(&other.roots);
        RootMultiset::new(roots)
    }

    /// Multiset intersection (minimum multiplicity per value).
    pub fn intersection(&self, other: &RootMultiset) -> RootMultiset {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() && j < other.roots.len() {
            match self.roots[i].cmp(&other.roots[j]) {
                std::cmp::Ordering::Equal => {
                    out.push(self.roots[i].clone());
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => i += 1,
                std::cmp::Ordering::Less => j += 1,
            }
        }
        RootMultiset { roots: out }
    }

    /// Multiset difference (multiplicities subtract, floored at zero).
    pub fn difference(&self, other: &RootMultiset) -> RootMultiset {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() {
            if j < other.roots.len() {
                match self.roots[i].cmp(&other.roots[j]) {
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        out.push(self.roots[i].clone());
                        i += 1;
                    }
                    std::cmp::Ordering::Less => j += 1,
                }
            } else {
                out.push(self.roots[i].clone());
                i += 1;
            }
        }
        RootMultiset { roots: out }
    }

    /// Every root shifted by `t`.
    pub fn shift(&self, t: &Rat) -> RootMultiset {
        // Shifting by a constant preserves the descending order.
        RootMultiset {
            roots: self.roots.iter().map(|r| r + t).collect(),
        }
    }
}

impl fmt::Debug for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.roots.iter()).finish()
    }
}

impl FromIterator<Rat> for RootMultiset {
    fn from_iter<T: IntoIterator<Item = Rat>>(iter: T) -> Self {
        RootMultiset::new(iter.into_iter().collect())
    }
}

/// A monic polynomial in `u`, stored as the multiset of its `(u + r)` factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonicPoly {
    roots: RootMultiset,
}

impl MonicPoly {
    pub fn from_roots(roots: RootMultiset) -> MonicPoly {
        MonicPoly { roots }
    }

    pub fn from_root_values(roots: Vec<Rat>) -> MonicPoly {
        MonicPoly {
            roots: RootMultiset::new(roots),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> MonicPoly {
        MonicPoly {
            roots: RootMultiset::empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &RootMultiset {
        &self.roots
    }

    /// Coefficient vector of `prod (u + r)`, ascending powers, leading 1.
    pub fn coeffs(&self) -> Vec<Rat> {
        let mut out = vec![Rat::one()];
        for r in self.roots.iter() {
            out = dense::mul(&out, &[r.clone(), Rat::one()]);
        }
        out
    }

    /// Exact evaluation `prod (x + r)`.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::one();
        for r in self.roots.iter() {
            acc = &acc * &(x + r);
        }
        acc
    }

    /// `P(u + t)`: every stored root moves up by `t`.
    pub fn shift(&self, t: &Rat) -> MonicPoly {
        MonicPoly {
            roots: self.roots.shift(t),
        }
    }

    pub fn mul(&self, other: &MonicPoly) -> MonicPoly {
        MonicPoly {
            roots: self.roots.union(&other.roots),
        }
    }

    /// Recover the root multiset from an ascending coefficient vector with
    /// leading coefficient 1. Rejects polynomials that do not split over the
    /// rationals.
    pub fn try_from_coeffs(coeffs: &[Rat]) -> Result<MonicPoly> {
        let d = dense::degree(coeffs);
        if !coeffs[d].is_one() {
            return Err(Error::NotMonic);
        }
        if d == 0 {
            return Ok(MonicPoly::one());
        }
        let (zeros, residual) = dense::rational_zeros(coeffs)?;
        if residual > 0 {
            return Err(Error::NonRationalRoot);
        }
        let mut roots = Vec::with_capacity(d);
        for (z, mult) in zeros {
            // Zero at u = z means factor (u + r) with r = -z.
            for _ in 0..mult {
                roots.push(-z.clone());
            }
        }
        Ok(MonicPoly::from_root_values(roots))
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        for r in self.roots.iter() {
            if r.is_zero() {
                write!(f, "u")?;
            } else if r.is_negative() {
                write!(f, "(u-{})", -r.clone())?;
            } else {
                write!(f, "(u+{})", r)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A fully reduced ratio of monic polynomials: numerator and denominator
/// share no roots.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFn {
    num: MonicPoly,
    den: MonicPoly,
}

impl RationalFn {
    /// Cancel the full multiset intersection of the two root sets.
    pub fn reduce(num: MonicPoly, den: MonicPoly) -> RationalFn {
        let shared = num.roots().intersection(den.roots());
        RationalFn {
            num: MonicPoly::from_roots(num.roots().difference(&shared)),
            den: MonicPoly::from_roots(den.roots().difference(&shared)),
        }
    }

    pub fn num(&self) -> &MonicPoly {
        &self.num
    }

    pub fn den(&self) -> &MonicPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}
