//! Truncated formal series in `u^{-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{MonicPoly, RationalFn};
use crate::rat::Rat;
use crate::{Error, Result};

/// Coefficients `c_0..c_N` of `c_0 + c_1 u^{-1} + ... + c_N u^{-N}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Rat>", into = "Vec<Rat>")]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl From<Vec<Rat>> for TruncatedSeries {
    fn from(mut coeffs: Vec<Rat>) -> TruncatedSeries {
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        TruncatedSeries { coeffs }
    }
}

impl From<TruncatedSeries> for Vec<Rat> {
    fn from(s: TruncatedSeries) -> Vec<Rat> {
        s.coeffs
    }
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rat>) -> TruncatedSeries {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// `u^{-deg} * P(u)` for a monic `P`, truncated at `order`. A degree-p
    /// monic polynomial becomes `prod (1 + r_i u^{-1})`, which starts at 1.
    pub fn from_monic(p: &MonicPoly, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        for r in p.roots().iter() {
            // Multiply by (1 + r u^{-1}) in place.
            for i in (1..=order).rev() {
                let t = &coeffs[i - 1] * r;
                coeffs[i] += &t;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul_truncated(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse, term by term; the constant term must be nonzero.
    pub fn recip(&self) -> TruncatedSeries {
        assert!(!self.coeffs[0].is_zero(), "series constant term is zero");
        let order = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut inv = vec![Rat::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for k in 1..=order {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &inv[k - j]);
            }
            inv[k] = -(&acc * &c0_inv);
        }
        TruncatedSeries { coeffs: inv }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})u^-1", c)?,
                _ => write!(f, "({})u^-{}", c, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expansion of `num/den` into a series in `u^{-1}`, truncated at `order`.
///
/// Requires equal degrees so the series starts at 1.
pub fn expand_series(f: &RationalFn, order: usize) -> Result<TruncatedSeries> {
    if f.num().degree() != f.den().degree() {
        return Err(Error::SeriesNotUnital);
    }
    let num = TruncatedSeries::from_monic(f.num(), order);
    let den = TruncatedSeries::from_monic(f.den(), order);
    Ok(num.mul_truncated(&den.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(roots: &[i64]) -> MonicPoly {
        MonicPoly::from_root_values(roots.iter().map(|&r| Rat::from_int(r)).collect())
    }

    fn ts(cs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn expand_polynomial_case() {
        // (u+1)/u = 1 + u^-1
        let f = RationalFn::reduce(mp(&[1]), mp(&[0]));
        let s = expand_series(&f, 3).unwrap();
        assert_eq!(s, ts(&[1, 1, 0, 0]));
    }

    #[test]
    fn expand_geometric() {
        // u/(u+1) = 1 - u^-1 + u^-2 - u^-3
        let f = RationalFn::reduce(mp(&[0]), mp(&[1]));
        let s = expand_series(&f, 3).unwrap();
        assert_eq!(s, ts(&[1, -1, 1, -1]));
    }

    #[test]
    fn expand_identity() {
        let f = RationalFn::reduce(mp(&[2]), mp(&[2]));
        let s = expand_series(&f, 2).unwrap();
        assert_eq!(s, ts(&[1, 0, 0]));
    }

    #[test]
    fn expand_degree_mismatch() {
        let f = RationalFn::reduce(mp(&[1, 2]), mp(&[0]));
        assert!(matches!(expand_series(&f, 3), Err(Error::SeriesNotUnital)));
    }

    fn root_strategy() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=2).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn multiplying_back_reproduces_numerator(
            num in proptest::collection::vec(root_strategy(), 0..4),
            den in proptest::collection::vec(root_strategy(), 0..4),
            order in 0usize..6,
        ) {
            let f = RationalFn::reduce(
                MonicPoly::from_root_values(num),
                MonicPoly::from_root_values(den),
            );
            prop_assume!(f.num().degree() == f.den().degree());
            let s = expand_series(&f, order).unwrap();
            let den_s = TruncatedSeries::from_monic(f.den(), order);
            let num_s = TruncatedSeries::from_monic(f.num(), order);
            prop_assert_eq!(s.mul_truncated(&den_s), num_s);
        }

        #[test]
        fn forward_and_reverse_expansions_cancel(
            a in proptest::collection::vec(root_strategy(), 0..4),
            order in 0usize..6,
        ) {
            let b: Vec<Rat> = a.iter().map(|r| r + &Rat::one()).collect();
            let f = RationalFn::reduce(
                MonicPoly::from_root_values(a.clone()),
                MonicPoly::from_root_values(b.clone()),
            );
            let g = RationalFn::reduce(
                MonicPoly::from_root_values(b),
                MonicPoly::from_root_values(a),
            );
            let prod = expand_series(&f, order)
                .unwrap()
                .mul_truncated(&expand_series(&g, order).unwrap());
            prop_assert_eq!(prod, TruncatedSeries::one(order));
        }
    }
}
