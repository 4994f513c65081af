//! Highest weights, shift-ratio polynomials and the finite-dimensionality
//! decision procedure.
//!
//! A level-p highest weight is a tuple of monic degree-p polynomials, one per
//! parity position. The decision procedure reflects the parity sequence to
//! the standard one (recording the trail), then checks the shift-ratio
//! conditions pair by pair and returns a certificate that can be re-validated
//! by plain re-expansion.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dense;
use crate::parity::ParitySeq;
use crate::poly::{MonicPoly, RationalFn, RootMultiset};
use crate::rat::Rat;
use crate::reflect::{odd_reflect, ReflectionStep};
use crate::{Error, Result};

/// A tuple of monic polynomials of common degree `level`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "HighestWeightRaw", into = "HighestWeightRaw")]
pub struct HighestWeight {
    level: usize,
    components: Vec<MonicPoly>,
}

#[derive(Serialize, Deserialize)]
struct HighestWeightRaw {
    level: usize,
    components: Vec<MonicPoly>,
}

impl TryFrom<HighestWeightRaw> for HighestWeight {
    type Error = Error;
    fn try_from(raw: HighestWeightRaw) -> Result<HighestWeight> {
        HighestWeight::new(raw.level, raw.components)
    }
}

impl From<HighestWeight> for HighestWeightRaw {
    fn from(w: HighestWeight) -> HighestWeightRaw {
        HighestWeightRaw {
            level: w.level,
            components: w.components,
        }
    }
}

impl HighestWeight {
    pub fn new(level: usize, components: Vec<MonicPoly>) -> Result<HighestWeight> {
        if components.is_empty() {
            return Err(Error::Shape("weight needs at least one component".into()));
        }
        for (idx, c) in components.iter().enumerate() {
            if c.degree() != level {
                return Err(Error::Shape(format!(
                    "component {} has degree {}, expected level {}",
                    idx + 1,
                    c.degree(),
                    level
                )));
            }
        }
        Ok(HighestWeight { level, components })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Component at 1-based position `i`.
    pub fn component(&self, i: usize) -> &MonicPoly {
        &self.components[i - 1]
    }

    pub fn components(&self) -> &[MonicPoly] {
        &self.components
    }

    pub fn check_parity(&self, sigma: &ParitySeq) -> Result<()> {
        if sigma.len() != self.components.len() {
            return Err(Error::Shape(format!(
                "parity length {} vs {} weight components",
                sigma.len(),
                self.components.len()
            )));
        }
        Ok(())
    }

    /// Append a zero root to every component (level p -> p + 1). Verdicts and
    /// reflection data restricted to nonzero roots are invariant under this.
    pub fn stabilized(&self) -> HighestWeight {
        let components = self
            .components
            .iter()
            .map(|c| c.mul(&MonicPoly::from_root_values(vec![Rat::zero()])))
            .collect();
        HighestWeight {
            level: self.level + 1,
            components,
        }
    }
}

/// Decide `lambda_num / lambda_den = P(u+1) / P(u)` for a monic `P`.
///
/// The input must be reduced. Roots are grouped by translate class (pairwise
/// integer difference), each class is paired positionally in descending
/// order, and every pair must descend by a positive integer; `P` is then the
/// union of the strings `(u+b)(u+b+1)...(u+a-1)`.
pub fn is_p_shift_ratio(f: &RationalFn) -> Option<MonicPoly> {
    if f.num().degree() != f.den().degree() {
        return None;
    }
    let mut classes: BTreeMap<Rat, (Vec<Rat>, Vec<Rat>)> = BTreeMap::new();
    for r in f.num().roots().iter() {
        classes.entry(r.frac()).or_default().0.push(r.clone());
    }
    for r in f.den().roots().iter() {
        classes.entry(r.frac()).or_default().1.push(r.clone());
    }
    let mut string_roots: Vec<Rat> = Vec::new();
    for (_, (num_roots, den_roots)) in classes {
        if num_roots.len() != den_roots.len() {
            return None;
        }
        for (a, b) in num_roots.iter().zip(den_roots.iter()) {
            let steps = (a - b).to_i64()?;
            if steps < 1 {
                return None;
            }
            let mut r = b.clone();
            for _ in 0..steps {
                string_roots.push(r.clone());
                r = &r + &Rat::one();
            }
        }
    }
    Some(MonicPoly::from_root_values(string_roots))
}

/// Shift-ratio certificate for a finite-dimensional verdict: `P_i` for every
/// equal-parity adjacent pair of the standard sequence, and the reduced
/// boundary ratio at position `m` (absent when one block is empty).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DrinfeldData {
    pub p: BTreeMap<usize, MonicPoly>,
    pub q_pair: Option<(MonicPoly, MonicPoly)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FiniteDimensional,
    InfiniteDimensional,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Finite(DrinfeldData),
    Infinite { position: usize, ratio: RationalFn },
}

/// Outcome of the decision procedure, carrying the reflection trail, the
/// reflected standard data and a re-checkable certificate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub trail: Vec<ReflectionStep>,
    pub standard_parity: ParitySeq,
    pub standard_weight: HighestWeight,
    pub certificate: Certificate,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReflectOrder {
    SmallestFirst,
    LargestFirst,
}

/// The decision procedure with the default smallest-index-first reflections.
pub fn decide_finite_dimensional(sigma: &ParitySeq, weight: &HighestWeight) -> Result<Decision> {
    decide_finite_dimensional_ordered(sigma, weight, ReflectOrder::SmallestFirst)
}

/// Reflect every `10` pair (in the chosen order) until the sequence is
/// standard, then test the shift-ratio conditions block by block. The
/// boundary pair needs nothing beyond being a ratio of polynomials, which
/// this data model guarantees.
pub fn decide_finite_dimensional_ordered(
    sigma: &ParitySeq,
    weight: &HighestWeight,
    order: ReflectOrder,
) -> Result<Decision> {
    weight.check_parity(sigma)?;
    let mut cur_sigma = sigma.clone();
    let mut cur_weight = weight.clone();
    let mut trail = Vec::new();
    loop {
        let descent = match order {
            ReflectOrder::SmallestFirst => cur_sigma.first_descent(),
            ReflectOrder::LargestFirst => cur_sigma.last_descent(),
        };
        let Some(i) = descent else { break };
        let (s, w, step) = odd_reflect(&cur_sigma, &cur_weight, i)?;
        cur_sigma = s;
        cur_weight = w;
        trail.push(step);
    }
    debug_assert!(cur_sigma.is_standard());

    let m = cur_sigma.m();
    let n = cur_sigma.n();
    let mut p_polys = BTreeMap::new();
    let mut failure: Option<(usize, RationalFn)> = None;

    for i in 1..m {
        let f = RationalFn::reduce(
            cur_weight.component(i).clone(),
            cur_weight.component(i + 1).clone(),
        );
        match is_p_shift_ratio(&f) {
            Some(p) => {
                p_polys.insert(i, p);
            }
            None => {
                failure = Some((i, f));
                break;
            }
        }
    }
    if failure.is_none() {
        for i in (m + 1)..(m + n) {
            let f = RationalFn::reduce(
                cur_weight.component(i + 1).clone(),
                cur_weight.component(i).clone(),
            );
            match is_p_shift_ratio(&f) {
                Some(p) => {
                    p_polys.insert(i, p);
                }
                None => {
                    failure = Some((i, f));
                    break;
                }
            }
        }
    }

    let (verdict, certificate) = match failure {
        Some((position, ratio)) => (
            Verdict::InfiniteDimensional,
            Certificate::Infinite { position, ratio },
        ),
        None => {
            let q_pair = if m >= 1 && n >= 1 {
                let f = RationalFn::reduce(
                    cur_weight.component(m).clone(),
                    cur_weight.component(m + 1).clone(),
                );
                Some((f.num().clone(), f.den().clone()))
            } else {
                None
            };
            (
                Verdict::FiniteDimensional,
                Certificate::Finite(DrinfeldData { p: p_polys, q_pair }),
            )
        }
    };

    Ok(Decision {
        verdict,
        trail,
        standard_parity: cur_sigma,
        standard_weight: cur_weight,
        certificate,
    })
}

impl Decision {
    /// Validate the certificate against the stored standard weight by plain
    /// re-expansion: each `P_i(u+1)/P_i(u)` must reduce to the corresponding
    /// component ratio, and the boundary pair must match exactly.
    pub fn recheck_certificate(&self) -> Result<()> {
        let m = self.standard_parity.m();
        let n = self.standard_parity.n();
        let w = &self.standard_weight;
        match &self.certificate {
            Certificate::Finite(data) => {
                let expected: Vec<usize> = (1..m).chain((m + 1)..(m + n)).collect();
                let got: Vec<usize> = data.p.keys().copied().collect();
                if expected != got {
                    return Err(Error::Internal(format!(
                        "certificate indexes {:?}, expected {:?}",
                        got, expected
                    )));
                }
                for (&i, p) in &data.p {
                    let shifted = RationalFn::reduce(p.shift(&Rat::one()), p.clone());
                    let target = if i < m {
                        RationalFn::reduce(w.component(i).clone(), w.component(i + 1).clone())
                    } else {
                        RationalFn::reduce(w.component(i + 1).clone(), w.component(i).clone())
                    };
                    if shifted != target {
                        return Err(Error::Internal(format!(
                            "P_{} does not re-expand to the component ratio",
                            i
                        )));
                    }
                }
                match (&data.q_pair, m >= 1 && n >= 1) {
                    (Some((qbar, q)), true) => {
                        let target =
                            RationalFn::reduce(w.component(m).clone(), w.component(m + 1).clone());
                        if qbar != target.num() || q != target.den() {
                            return Err(Error::Internal(
                                "boundary pair does not match the reduced ratio".into(),
                            ));
                        }
                        if qbar.degree() != q.degree() {
                            return Err(Error::Internal("boundary pair degrees differ".into()));
                        }
                    }
                    (None, false) => {}
                    _ => {
                        return Err(Error::Internal(
                            "boundary pair presence disagrees with the block sizes".into(),
                        ))
                    }
                }
                Ok(())
            }
            Certificate::Infinite { position, ratio } => {
                let i = *position;
                let target = if i < m {
                    RationalFn::reduce(w.component(i).clone(), w.component(i + 1).clone())
                } else {
                    RationalFn::reduce(w.component(i + 1).clone(), w.component(i).clone())
                };
                if ratio != &target {
                    return Err(Error::Internal(
                        "failure ratio does not match the component ratio".into(),
                    ));
                }
                if is_p_shift_ratio(ratio).is_some() {
                    return Err(Error::Internal(
                        "failure ratio admits a shift-ratio polynomial".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Replay the reflection trail from the original data and confirm it
    /// lands on the stored standard pair.
    pub fn audit_trail(&self, sigma: &ParitySeq, weight: &HighestWeight) -> Result<()> {
        let mut cur_sigma = sigma.clone();
        let mut cur_weight = weight.clone();
        for step in &self.trail {
            let (s, w, replay) = odd_reflect(&cur_sigma, &cur_weight, step.index)?;
            if &replay != step {
                return Err(Error::Internal(format!(
                    "trail step at index {} does not replay",
                    step.index
                )));
            }
            cur_sigma = s;
            cur_weight = w;
        }
        if cur_sigma != self.standard_parity || cur_weight != self.standard_weight {
            return Err(Error::Internal(
                "trail does not land on the standard data".into(),
            ));
        }
        Ok(())
    }
}

/// Clear denominators of weight components given as ratios of unital
/// polynomials in `u^{-1}`, producing a polynomial weight of minimal common
/// level plus the series the components were multiplied by.
///
/// Input coefficient vectors are ascending in `u^{-1}`; both sides of every
/// component must have constant term 1. Components that cannot be put in
/// this form are rejected with the distinguished non-rational error, which
/// the decision front end maps to an infinite-dimensional verdict.
pub fn normalize_twist(components: &[(Vec<Rat>, Vec<Rat>)]) -> Result<(HighestWeight, Vec<Rat>)> {
    if components.is_empty() {
        return Err(Error::Shape("no components".into()));
    }
    for (num, den) in components {
        for (label, side) in [("numerator", num), ("denominator", den)] {
            if side.is_empty() || !side[0].is_one() {
                return Err(Error::NonRationalComponent(format!(
                    "{} must be a polynomial in u^-1 with constant term 1",
                    label
                )));
            }
        }
    }
    // Least common multiple of the denominators, scaled back to a unital
    // polynomial so it is a legitimate twist series.
    let mut l = vec![Rat::one()];
    for (_, den) in components {
        l = dense::lcm(&l, den);
    }
    let c0 = l[0].clone();
    if c0.is_zero() {
        return Err(Error::NonRationalComponent(
            "denominator lcm vanishes at u^-1 = 0".into(),
        ));
    }
    let twist = dense::scale(&l, &c0.recip());

    let mut cleared: Vec<Vec<Rat>> = Vec::with_capacity(components.len());
    for (num, den) in components {
        let (cofactor, rem) = dense::divrem(&twist, den);
        if !dense::is_zero(&rem) {
            return Err(Error::Internal(
                "denominator does not divide the lcm".into(),
            ));
        }
        cleared.push(dense::mul(num, &cofactor));
    }
    let level = cleared.iter().map(|c| dense::degree(c)).max().unwrap();

    let mut polys = Vec::with_capacity(cleared.len());
    for c in &cleared {
        // c(x) has constant term 1; u^deg * c(u^-1) is the reversed vector.
        let d = dense::degree(c);
        let mut rev: Vec<Rat> = c[..=d].to_vec();
        rev.reverse();
        let base = MonicPoly::try_from_coeffs(&rev)?;
        let padding = RootMultiset::new(vec![Rat::zero(); level - d]);
        polys.push(MonicPoly::from_roots(base.roots().union(&padding)));
    }
    Ok((HighestWeight::new(level, polys)?, twist))
}
