//! Explicit level-p matrix representations over the rationals.
//!
//! A representation stores one polynomial matrix per generator pair, with the
//! monic normalization: the leading coefficient of a diagonal generator is the
//! identity and off-diagonal generators have degree below the level. Modules
//! are built from evaluation modules (the vector module on the graded space,
//! and the two-dimensional family for the 1|1 case) and closed under graded
//! tensor products.

#![allow(clippy::needless_range_loop)]

mod berezinian;
mod cyclic;
mod relations;
mod verify;

pub use berezinian::{berezinian_action, naive_ratio_action, BerezinianReport};
pub use cyclic::{
    cyclic_highest_module, find_singular_blocks, irreducible_quotient, restrict_to_subspace,
    CyclicData, SingularBlock,
};
pub use relations::{check_defining_relations, RelationReport, RelationViolation};
pub use verify::{
    restrict_to_cyclic_span, verify_key_relations, verify_odd_reflection, KeyRelationsReport,
    OddReflectionReport,
};

use crate::linalg::RatMatrix;
use crate::parity::ParitySeq;
use crate::rat::Rat;
use crate::{Error, Result};

/// Default cap on module dimensions; everything here is dense and exact.
pub const DEFAULT_MAX_DIM: usize = 256;

/// A graded coordinate space: one parity bit per basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperVec {
    parities: Vec<u8>,
}

impl SuperVec {
    pub fn new(parities: Vec<u8>) -> SuperVec {
        assert!(parities.iter().all(|&b| b <= 1));
        SuperVec { parities }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, idx: usize) -> u8 {
        self.parities[idx]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    /// Graded tensor: the parity of a pure tensor adds mod 2.
    pub fn tensor(&self, other: &SuperVec) -> SuperVec {
        let mut parities = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.parities {
            for &b in &other.parities {
                parities.push((a + b) % 2);
            }
        }
        SuperVec { parities }
    }
}

/// A matrix-valued polynomial in `u`, coefficients ascending by power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    dim: usize,
    coeffs: Vec<RatMatrix>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> PolyMatrix {
        PolyMatrix {
            dim,
            coeffs: vec![RatMatrix::zeros(dim, dim)],
        }
    }

    pub fn from_coeffs(dim: usize, mut coeffs: Vec<RatMatrix>) -> PolyMatrix {
        assert!(coeffs.iter().all(|c| c.rows() == dim && c.cols() == dim));
        while coeffs.len() > 1 && coeffs.last().is_some_and(RatMatrix::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(RatMatrix::zeros(dim, dim));
        }
        PolyMatrix { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Largest stored power index.
    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^s` (zero beyond the stored degree).
    pub fn coeff(&self, s: usize) -> Option<&RatMatrix> {
        let c = self.coeffs.get(s)?;
        if c.is_zero() {
            None
        } else {
            Some(c)
        }
    }

    pub fn coeff_or_zero(&self, s: usize) -> RatMatrix {
        self.coeffs
            .get(s)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.dim, self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatMatrix::is_zero)
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for s in 0..len {
            out.push(self.coeff_or_zero(s).add(&other.coeff_or_zero(s)));
        }
        PolyMatrix::from_coeffs(self.dim, out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for s in 0..len {
            out.push(self.coeff_or_zero(s).sub(&other.coeff_or_zero(s)));
        }
        PolyMatrix::from_coeffs(self.dim, out)
    }

    /// Product as operator-valued polynomials (left factor acts second).
    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out =
            vec![RatMatrix::zeros(self.dim, self.dim); self.coeffs.len() + other.coeffs.len() - 1];
        for (s1, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (s2, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[s1 + s2] = out[s1 + s2].add(&a.mul(b));
            }
        }
        PolyMatrix::from_coeffs(self.dim, out)
    }

    /// Multiply by a scalar polynomial given by ascending coefficients.
    pub fn mul_scalar_poly(&self, poly: &[Rat]) -> PolyMatrix {
        let mut out =
            vec![RatMatrix::zeros(self.dim, self.dim); self.coeffs.len() + poly.len() - 1];
        for (s1, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (s2, c) in poly.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                out[s1 + s2] = out[s1 + s2].add(&a.scale(c));
            }
        }
        PolyMatrix::from_coeffs(self.dim, out)
    }

    /// Evaluate at a scalar.
    pub fn eval(&self, x: &Rat) -> RatMatrix {
        let mut acc = RatMatrix::zeros(self.dim, self.dim);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }

    /// Substitute `u -> u + t`.
    pub fn shift(&self, t: &Rat) -> PolyMatrix {
        let deg = self.coeffs.len() - 1;
        let mut out = vec![RatMatrix::zeros(self.dim, self.dim); deg + 1];
        for (s, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (u+t)^s = sum_j binom(s, j) t^{s-j} u^j
            let mut binom = Rat::one();
            let mut tpow = vec![Rat::one()];
            for _ in 0..s {
                tpow.push(tpow.last().unwrap() * t);
            }
            for j in (0..=s).rev() {
                // binom(s, j) built from the top: binom(s, s) = 1.
                let factor = &binom * &tpow[s - j];
                if !factor.is_zero() {
                    out[j] = out[j].add(&c.scale(&factor));
                }
                if j > 0 {
                    binom =
                        &(&binom * &Rat::from_int(j as i64)) / &Rat::from_int((s - j + 1) as i64);
                }
            }
        }
        PolyMatrix::from_coeffs(self.dim, out)
    }

    /// Substitute `u -> -u` and scale by `(-1)^level`, keeping the monic
    /// normalization of a level-`level` generator.
    pub fn negate_variable(&self, level: usize) -> PolyMatrix {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(s, c)| {
                if (level + s) % 2 == 1 {
                    c.neg()
                } else {
                    c.clone()
                }
            })
            .collect();
        PolyMatrix::from_coeffs(self.dim, out)
    }

    /// Exact division by `(u + r)`: returns the quotient and the constant
    /// remainder matrix `P(-r)`.
    pub fn divrem_linear(&self, r: &Rat) -> (PolyMatrix, RatMatrix) {
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return (PolyMatrix::zero(self.dim), self.coeffs[0].clone());
        }
        let mut q = vec![RatMatrix::zeros(self.dim, self.dim); d];
        q[d - 1] = self.coeffs[d].clone();
        for s in (1..d).rev() {
            q[s - 1] = self.coeffs[s].sub(&q[s].scale(r));
        }
        let rem = self.coeffs[0].sub(&q[0].scale(r));
        (PolyMatrix::from_coeffs(self.dim, q), rem)
    }

    /// Apply to a vector, returning polynomial coefficients of the image.
    pub fn apply(&self, v: &[Rat]) -> Vec<Vec<Rat>> {
        self.coeffs.iter().map(|c| c.mul_vec(v)).collect()
    }
}

/// An explicit level-p module: one polynomial matrix per generator pair and
/// an optional distinguished vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YangianRep {
    sigma: ParitySeq,
    level: usize,
    space: SuperVec,
    gens: Vec<Vec<PolyMatrix>>,
    xi: Option<Vec<Rat>>,
}

/// Which evaluation module to build.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalKind {
    /// The graded coordinate space itself, any parity sequence.
    Vector,
    /// The two-dimensional family for a length-2 sequence, with the given
    /// highest weight; drops to its one-dimensional quotient when atypical.
    Kac { weight: (Rat, Rat) },
}

/// Evaluation module of the requested kind, twisted by `u -> u - shift`.
pub fn build_eval_module(kind: EvalKind, sigma: &ParitySeq, shift: &Rat) -> Result<YangianRep> {
    match kind {
        EvalKind::Vector => Ok(YangianRep::vector_module(sigma, shift)),
        EvalKind::Kac { weight } => YangianRep::kac_module(sigma, &weight, shift),
    }
}

/// Graded tensor product via the coproduct, under the default dimension cap.
pub fn tensor_modules(r1: &YangianRep, r2: &YangianRep) -> Result<YangianRep> {
    r1.tensor(r2, DEFAULT_MAX_DIM)
}

impl YangianRep {
    pub fn sigma(&self) -> &ParitySeq {
        &self.sigma
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn space(&self) -> &SuperVec {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    /// Generator polynomial `T_{ij}(u)`, 1-based indices.
    pub fn gen(&self, i: usize, j: usize) -> &PolyMatrix {
        &self.gens[i - 1][j - 1]
    }

    pub fn xi(&self) -> Option<&[Rat]> {
        self.xi.as_deref()
    }

    pub fn gen_parity(&self, i: usize, j: usize) -> u8 {
        (self.sigma.bit(i) + self.sigma.bit(j)) % 2
    }

    /// The vector module: `T_ij(u) = delta_ij (u - a) + (-1)^{parity(i)} e_ij`
    /// on the graded coordinate space, highest vector `e_1`.
    pub fn vector_module(sigma: &ParitySeq, shift: &Rat) -> YangianRep {
        let d = sigma.len();
        let mut gens = Vec::with_capacity(d);
        for i in 1..=d {
            let mut row = Vec::with_capacity(d);
            for j in 1..=d {
                let mut c0 = RatMatrix::zeros(d, d);
                let sign = if sigma.bit(i) == 1 {
                    -Rat::one()
                } else {
                    Rat::one()
                };
                c0.set(i - 1, j - 1, sign);
                let mut coeffs = vec![c0];
                if i == j {
                    let mut diag = coeffs.pop().unwrap();
                    for k in 0..d {
                        diag.add_to(k, k, &-shift.clone());
                    }
                    coeffs.push(diag);
                    coeffs.push(RatMatrix::identity(d));
                }
                row.push(PolyMatrix::from_coeffs(d, coeffs));
            }
            gens.push(row);
        }
        let mut xi = vec![Rat::zero(); d];
        xi[0] = Rat::one();
        YangianRep {
            sigma: sigma.clone(),
            level: 1,
            space: SuperVec::new(sigma.bits().to_vec()),
            gens,
            xi: Some(xi),
        }
    }

    /// The two-dimensional module of the 1|1 block with highest weight
    /// `(a_1, a_2)` and basis `(v, w = E_21 v)`, or its one-dimensional
    /// quotient when `a_1 + a_2 = 0`.
    pub fn kac_module(sigma: &ParitySeq, weight: &(Rat, Rat), shift: &Rat) -> Result<YangianRep> {
        Self::kac_module_inner(sigma, weight, shift, true)
    }

    /// The two-dimensional module without the atypical quotient; reducible
    /// when `a_1 + a_2 = 0`.
    pub fn kac_module_full(
        sigma: &ParitySeq,
        weight: &(Rat, Rat),
        shift: &Rat,
    ) -> Result<YangianRep> {
        Self::kac_module_inner(sigma, weight, shift, false)
    }

    fn kac_module_inner(
        sigma: &ParitySeq,
        weight: &(Rat, Rat),
        shift: &Rat,
        quotient_atypical: bool,
    ) -> Result<YangianRep> {
        if sigma.len() != 2 || sigma.bit(1) == sigma.bit(2) {
            return Err(Error::BadParity(
                "two-dimensional modules need parity 01 or 10".into(),
            ));
        }
        let (a1, a2) = weight;
        let typical = !(a1 + a2).is_zero();
        let d = if typical || !quotient_atypical { 2 } else { 1 };

        // Matrices of E_11, E_12, E_21, E_22 in the basis (v, w).
        let mut e = vec![vec![RatMatrix::zeros(d, d); 2]; 2];
        e[0][0].set(0, 0, a1.clone());
        e[1][1].set(0, 0, a2.clone());
        if d == 2 {
            e[0][0].set(1, 1, a1 - &Rat::one());
            e[1][1].set(1, 1, a2 + &Rat::one());
            e[1][0].set(1, 0, Rat::one());
            e[0][1].set(0, 1, a1 + a2);
        }

        let mut gens = Vec::with_capacity(2);
        for i in 1..=2usize {
            let mut row = Vec::with_capacity(2);
            for j in 1..=2usize {
                let sign = if sigma.bit(i) == 1 {
                    -Rat::one()
                } else {
                    Rat::one()
                };
                let mut c0 = e[i - 1][j - 1].scale(&sign);
                if i == j {
                    for k in 0..d {
                        c0.add_to(k, k, &-shift.clone());
                    }
                }
                let mut coeffs = vec![c0];
                if i == j {
                    coeffs.push(RatMatrix::identity(d));
                }
                row.push(PolyMatrix::from_coeffs(d, coeffs));
            }
            gens.push(row);
        }
        let mut xi = vec![Rat::zero(); d];
        xi[0] = Rat::one();
        let parities = if d == 2 { vec![0, 1] } else { vec![0] };
        Ok(YangianRep {
            sigma: sigma.clone(),
            level: 1,
            space: SuperVec::new(parities),
            gens,
            xi: Some(xi),
        })
    }

    /// One-dimensional module with `T_ij(u) = delta_ij (u - a)`.
    pub fn trivial_module(sigma: &ParitySeq, shift: &Rat) -> YangianRep {
        let n = sigma.len();
        let mut gens = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                if i == j {
                    let mut c0 = RatMatrix::zeros(1, 1);
                    c0.set(0, 0, -shift.clone());
                    row.push(PolyMatrix::from_coeffs(1, vec![c0, RatMatrix::identity(1)]));
                } else {
                    row.push(PolyMatrix::zero(1));
                }
            }
            gens.push(row);
        }
        YangianRep {
            sigma: sigma.clone(),
            level: 1,
            space: SuperVec::new(vec![0]),
            gens,
            xi: Some(vec![Rat::one()]),
        }
    }

    /// Graded tensor product via the coproduct: the generator polynomial is
    /// `sum_k T^1_ik(u) (x) T^2_kj(u)` with the sign rule
    /// `(x (x) y)(v (x) w) = (-1)^{|y||v|} xv (x) yw`.
    pub fn tensor(&self, other: &YangianRep, cap: usize) -> Result<YangianRep> {
        if self.sigma != other.sigma {
            return Err(Error::ParityMismatch);
        }
        let dim = self.dim() * other.dim();
        if dim > cap {
            return Err(Error::DimensionCap { dim, cap });
        }
        let n = self.size();
        let level = self.level + other.level;
        let space = self.space.tensor(&other.space);
        let mut gens = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row = Vec::with_capacity(n);
            for j in 1..=n {
                let mut coeffs = vec![RatMatrix::zeros(dim, dim); level + 1];
                for k in 1..=n {
                    let left = self.gen(i, k);
                    let right = other.gen(k, j);
                    let right_parity = (self.sigma.bit(k) + self.sigma.bit(j)) % 2;
                    for s1 in 0..=left.degree_bound() {
                        let Some(a) = left.coeff(s1) else { continue };
                        for s2 in 0..=right.degree_bound() {
                            let Some(b) = right.coeff(s2) else { continue };
                            let prod = kron_signed(a, b, right_parity, self.space.parities());
                            coeffs[s1 + s2] = coeffs[s1 + s2].add(&prod);
                        }
                    }
                }
                row.push(PolyMatrix::from_coeffs(dim, coeffs));
            }
            gens.push(row);
        }
        let xi = match (&self.xi, &other.xi) {
            (Some(x1), Some(x2)) => {
                let mut v = Vec::with_capacity(dim);
                for a in x1 {
                    for b in x2 {
                        v.push(a * b);
                    }
                }
                Some(v)
            }
            _ => None,
        };
        Ok(YangianRep {
            sigma: self.sigma.clone(),
            level,
            space,
            gens,
            xi,
        })
    }

    /// Pull a 1|1 module back along `t_ij(u) -> t_ij(-u)`, converting between
    /// the 01 and 10 labellings with the monic renormalization.
    pub fn negate_spectral_parameter(&self) -> Result<YangianRep> {
        if self.size() != 2 || self.sigma.bit(1) == self.sigma.bit(2) {
            return Err(Error::BadParity(
                "spectral negation is the 1|1 relabelling".into(),
            ));
        }
        let sigma = self.sigma.swapped(1);
        let gens = self
            .gens
            .iter()
            .map(|row| row.iter().map(|g| g.negate_variable(self.level)).collect())
            .collect();
        Ok(YangianRep {
            sigma,
            level: self.level,
            space: self.space.clone(),
            gens,
            xi: self.xi.clone(),
        })
    }

    /// Build a new representation with the same layout from a generator map.
    pub(crate) fn with_gens(
        &self,
        dim: usize,
        space: SuperVec,
        gens: Vec<Vec<PolyMatrix>>,
        xi: Option<Vec<Rat>>,
    ) -> YangianRep {
        debug_assert_eq!(space.dim(), dim);
        YangianRep {
            sigma: self.sigma.clone(),
            level: self.level,
            space,
            gens,
            xi,
        }
    }

    /// Check the grading constraint: an entry of `T_ij` may be nonzero only
    /// when the generator parity matches the parity change of the basis
    /// vectors, and the leading normalization must be monic.
    pub fn check_parity_consistency(&self) -> Result<()> {
        let n = self.size();
        let d = self.dim();
        for i in 1..=n {
            for j in 1..=n {
                let g = self.gen(i, j);
                if g.degree_bound() > self.level {
                    return Err(Error::Internal(format!(
                        "T_{{{},{}}} exceeds level degree",
                        i, j
                    )));
                }
                let gp = self.gen_parity(i, j);
                for s in 0..=g.degree_bound() {
                    let Some(c) = g.coeff(s) else { continue };
                    for r in 0..d {
                        for col in 0..d {
                            if c.get(r, col).is_zero() {
                                continue;
                            }
                            let vp = (self.space.parity(r) + self.space.parity(col)) % 2;
                            if vp != gp {
                                return Err(Error::Internal(format!(
                                    "parity violation at T_{{{},{}}} u^{} entry ({}, {})",
                                    i, j, s, r, col
                                )));
                            }
                        }
                    }
                }
                let lead = g.coeff_or_zero(self.level);
                let expected = if i == j {
                    RatMatrix::identity(d)
                } else {
                    RatMatrix::zeros(d, d)
                };
                if lead != expected {
                    return Err(Error::Internal(format!(
                        "monic normalization violated at T_{{{},{}}}",
                        i, j
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Kronecker product with the graded sign: the right operator of parity
/// `right_parity` picks up a sign on odd left-factor basis vectors.
fn kron_signed(a: &RatMatrix, b: &RatMatrix, right_parity: u8, left_parities: &[u8]) -> RatMatrix {
    let (d1, d2) = (a.rows(), b.rows());
    let mut out = RatMatrix::zeros(d1 * d2, d1 * d2);
    for r1 in 0..d1 {
        for c1 in 0..d1 {
            let av = a.get(r1, c1);
            if av.is_zero() {
                continue;
            }
            let flip = right_parity == 1 && left_parities[c1] == 1;
            for r2 in 0..d2 {
                for c2 in 0..d2 {
                    let bv = b.get(r2, c2);
                    if bv.is_zero() {
                        continue;
                    }
                    let val = if flip { -(av * bv) } else { av * bv };
                    out.set(r1 * d2 + r2, c1 * d2 + c2, val);
                }
            }
        }
    }
    out
}
