//! Oracle checks for the 1|1 lowering identities and for odd reflections.
//!
//! `verify_key_relations` drives the full battery on an irreducible
//! highest-weight 1|1 module: nilpotency of the lowering polynomial, the
//! shared-root divisibility, the lowered vector and its eigenvalues, and the
//! ordered-product proportionality in the fully distinct case.
//!
//! `verify_odd_reflection` reruns the same construction inside the chosen
//! adjacent block of a larger module, relabels the generators by the
//! transposition, reads the highest weight of the lowered vector off the
//! matrices, and compares it with the combinatorial transition rule.

use serde::Serialize;

use crate::linalg::{RatMatrix, Subspace};
use crate::poly::{MonicPoly, RootMultiset};
use crate::rat::Rat;
use crate::reflect::{odd_reflect, partition_common_roots};
use crate::weight::HighestWeight;
use crate::{Error, Result};

use super::cyclic::{cyclic_highest_module, restrict_to_subspace};
use super::{PolyMatrix, YangianRep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyRelationsReport {
    /// `T_21(u+1) T_21(u) = 0` as a polynomial identity.
    pub annihilation_square: bool,
    /// Every ordered product of `p + 1` lowering coefficient matrices is 0.
    pub nilpotent_products: bool,
    /// `T_21` is divisible by the shared-root polynomial `gamma(u)`.
    pub shared_root_divisibility: bool,
    pub zeta_nonzero: bool,
    /// `T_11(u) zeta = prod (u + alpha_r - 1) gamma(u) zeta`.
    pub eigen_t11: bool,
    /// `T_22(u) zeta = prod (u + beta_r - 1) gamma(u) zeta`.
    pub eigen_t22: bool,
    /// `T_21(u) zeta = 0`.
    pub zeta_killed: bool,
    /// When every root is distinct (`k = p`): `zeta` is proportional to the
    /// ordered product of all lowering coefficients applied to the highest
    /// vector.
    pub ordered_product_proportional: Option<bool>,
    pub k: usize,
}

impl KeyRelationsReport {
    pub fn ok(&self) -> bool {
        self.annihilation_square
            && self.nilpotent_products
            && self.shared_root_divisibility
            && self.zeta_nonzero
            && self.eigen_t11
            && self.eigen_t22
            && self.zeta_killed
            && self.ordered_product_proportional.unwrap_or(true)
    }
}

fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    // Nonzero vectors spanning the same line.
    let Some(anchor) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[anchor].is_zero() {
        return false;
    }
    let c = &b[anchor] / &a[anchor];
    a.iter().zip(b).all(|(x, y)| &(&c * x) == y)
}

/// Polynomial-matrix check `M(u) v = q(u) v` coefficient-wise, for a monic
/// scalar polynomial given by its roots.
fn acts_by_scalar_poly(m: &PolyMatrix, v: &[Rat], q: &MonicPoly) -> bool {
    let coeffs = q.coeffs();
    let top = m.degree_bound().max(coeffs.len() - 1);
    for s in 0..=top {
        let img = m.coeff_or_zero(s).mul_vec(v);
        let scalar = coeffs.get(s).cloned().unwrap_or_else(Rat::zero);
        let expect: Vec<Rat> = v.iter().map(|x| &scalar * x).collect();
        if img != expect {
            return false;
        }
    }
    true
}

/// Divide a polynomial matrix by every root of `gamma`; `None` when some
/// remainder fails to vanish.
fn divide_by_roots(m: &PolyMatrix, gamma: &RootMultiset) -> Option<PolyMatrix> {
    let mut cur = m.clone();
    for r in gamma.iter() {
        let (q, rem) = cur.divrem_linear(r);
        if !rem.is_zero() {
            return None;
        }
        cur = q;
    }
    Some(cur)
}

/// Run the 1|1 battery on a highest-weight module over a length-2 odd pair.
/// A module over the reversed labelling is first pulled back through the
/// spectral-parameter negation.
pub fn verify_key_relations(rep: &YangianRep) -> Result<KeyRelationsReport> {
    if rep.size() != 2 || rep.sigma().bit(1) == rep.sigma().bit(2) {
        return Err(Error::BadParity(
            "key relations are for the 1|1 odd pair".into(),
        ));
    }
    let std_rep = if rep.sigma().bit(1) == 0 {
        rep.clone()
    } else {
        rep.negate_spectral_parameter()?
    };
    let data = cyclic_highest_module(&std_rep)?;
    let p = std_rep.level();
    let lambda1 = data.weight.component(1);
    let lambda2 = data.weight.component(2);
    let (k, alpha, beta, shared) = partition_common_roots(lambda1, lambda2)?;

    let t21 = std_rep.gen(2, 1);
    let t11 = std_rep.gen(1, 1);
    let t22 = std_rep.gen(2, 2);
    let xi = std_rep.xi().unwrap().to_vec();

    let annihilation_square = t21.shift(&Rat::one()).mul(t21).is_zero();

    // All ordered products of p+1 lowering coefficients, built level by level.
    let lowering: Vec<RatMatrix> = (0..p).map(|s| t21.coeff_or_zero(s)).collect();
    let mut products: Vec<RatMatrix> = lowering.clone();
    for _ in 0..p {
        let mut next = Vec::with_capacity(products.len() * lowering.len());
        for a in &lowering {
            for b in &products {
                next.push(a.mul(b));
            }
        }
        products = next;
    }
    let nilpotent_products = p == 0 || products.iter().all(RatMatrix::is_zero);

    let reduced = divide_by_roots(t21, &shared);
    let shared_root_divisibility = reduced.is_some();

    let (zeta, zeta_nonzero, eigen_t11, eigen_t22, zeta_killed) = match &reduced {
        Some(t21_bar) => {
            // alpha is descending and the operator at the last root applies
            // first, matching the anti-string ordering of the product.
            let mut zeta = xi.clone();
            for a in alpha.iter().rev() {
                zeta = t21_bar.eval(&-a.clone()).mul_vec(&zeta);
            }
            let nonzero = !vec_is_zero(&zeta);
            let shifted_alpha: RootMultiset = alpha.iter().map(|r| r - &Rat::one()).collect();
            let shifted_beta: RootMultiset = beta.iter().map(|r| r - &Rat::one()).collect();
            let t11_target = MonicPoly::from_roots(shifted_alpha.union(&shared));
            let t22_target = MonicPoly::from_roots(shifted_beta.union(&shared));
            let e11 = nonzero && acts_by_scalar_poly(t11, &zeta, &t11_target);
            let e22 = nonzero && acts_by_scalar_poly(t22, &zeta, &t22_target);
            let killed = nonzero
                && (0..=t21.degree_bound())
                    .all(|s| vec_is_zero(&t21.coeff_or_zero(s).mul_vec(&zeta)));
            (zeta, nonzero, e11, e22, killed)
        }
        None => (Vec::new(), false, false, false, false),
    };

    let ordered_product_proportional = if k == p && p > 0 && zeta_nonzero {
        // t_21^{(1)} ... t_21^{(p)} applied right to left: the coefficient of
        // u^{p-r} is t_21^{(r)}.
        let mut w = xi;
        for s in 0..p {
            w = t21.coeff_or_zero(s).mul_vec(&w);
        }
        Some(!vec_is_zero(&w) && proportional(&zeta, &w))
    } else {
        None
    };

    Ok(KeyRelationsReport {
        annihilation_square,
        nilpotent_products,
        shared_root_divisibility,
        zeta_nonzero,
        eigen_t11,
        eigen_t22,
        zeta_killed,
        ordered_product_proportional,
        k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddReflectionReport {
    pub index: usize,
    /// Shared-root divisibility of the block lowering operator on the span.
    pub divisibility: bool,
    pub zeta_nonzero: bool,
    /// All relabelled raising polynomials kill the lowered vector.
    pub singular_after_relabel: bool,
    /// Weight from the transition rule.
    pub expected: HighestWeight,
    /// Weight read off the relabelled matrices (when defined).
    pub observed: Option<HighestWeight>,
    pub weights_match: bool,
}

impl OddReflectionReport {
    pub fn ok(&self) -> bool {
        self.divisibility && self.zeta_nonzero && self.singular_after_relabel && self.weights_match
    }
}

/// Build the lowered vector inside the (i, i+1) block of a highest-weight
/// module, relabel the generators by the transposition and compare the
/// resulting highest weight with the transition rule.
pub fn verify_odd_reflection(rep: &YangianRep, index: usize) -> Result<OddReflectionReport> {
    let n = rep.size();
    if index == 0 || index >= n {
        return Err(Error::Shape(format!(
            "reflection index {} out of range 1..{}",
            index, n
        )));
    }
    if rep.sigma().bit(index) == rep.sigma().bit(index + 1) {
        return Err(Error::NotOddPosition { index });
    }
    let data = cyclic_highest_module(rep)?;
    let (expected_sigma, expected, _) = odd_reflect(rep.sigma(), &data.weight, index)?;
    debug_assert_eq!(expected_sigma, rep.sigma().swapped(index));

    let lambda_i = data.weight.component(index);
    let lambda_i1 = data.weight.component(index + 1);
    let (_, alpha, _, shared) = partition_common_roots(lambda_i, lambda_i1)?;

    // Cyclic span of the highest vector under the block generators.
    let xi = rep.xi().ok_or(Error::MissingHighestVector)?.to_vec();
    let mut block_ops: Vec<&RatMatrix> = Vec::new();
    let mut held: Vec<RatMatrix> = Vec::new();
    for a in [index, index + 1] {
        for b in [index, index + 1] {
            let g = rep.gen(a, b);
            for s in 0..=g.degree_bound() {
                if let Some(c) = g.coeff(s) {
                    held.push(c.clone());
                }
            }
        }
    }
    block_ops.extend(held.iter());
    let span = Subspace::invariant_closure(rep.dim(), std::slice::from_ref(&xi), &block_ops);

    // Restrict the block lowering operator to the span and divide out the
    // shared roots there.
    let lowering = rep.gen(index + 1, index);
    let mut restricted_coeffs = Vec::with_capacity(lowering.degree_bound() + 1);
    for s in 0..=lowering.degree_bound() {
        let c = lowering.coeff_or_zero(s);
        let r = span.restrict(&c).ok_or_else(|| {
            Error::Internal("block span is not invariant under its lowering operator".into())
        })?;
        restricted_coeffs.push(r);
    }
    let lowering_restricted = PolyMatrix::from_coeffs(span.rank(), restricted_coeffs);
    let reduced = divide_by_roots(&lowering_restricted, &shared);
    let divisibility = reduced.is_some();

    let (zeta_ambient, zeta_nonzero) = match &reduced {
        Some(t_bar) => {
            let mut z = span
                .coords(&xi)
                .ok_or_else(|| Error::Internal("highest vector outside its own span".into()))?;
            for a in alpha.iter().rev() {
                z = t_bar.eval(&-a.clone()).mul_vec(&z);
            }
            let ambient = span.combine(&z);
            let nonzero = !vec_is_zero(&ambient);
            (ambient, nonzero)
        }
        None => (Vec::new(), false),
    };

    if !zeta_nonzero {
        return Ok(OddReflectionReport {
            index,
            divisibility,
            zeta_nonzero,
            singular_after_relabel: false,
            expected,
            observed: None,
            weights_match: false,
        });
    }

    // Relabelled action: T'_ab = T_{tau(a), tau(b)} for the transposition.
    let tau = |a: usize| {
        if a == index {
            index + 1
        } else if a == index + 1 {
            index
        } else {
            a
        }
    };
    let mut singular = true;
    'outer: for a in 1..=n {
        for b in (a + 1)..=n {
            let g = rep.gen(tau(a), tau(b));
            for s in 0..=g.degree_bound() {
                let Some(c) = g.coeff(s) else { continue };
                if !vec_is_zero(&c.mul_vec(&zeta_ambient)) {
                    singular = false;
                    break 'outer;
                }
            }
        }
    }

    let observed = if singular {
        read_weight_along(rep, &zeta_ambient, &tau)?
    } else {
        None
    };
    let weights_match = observed.as_ref() == Some(&expected);

    Ok(OddReflectionReport {
        index,
        divisibility,
        zeta_nonzero,
        singular_after_relabel: singular,
        expected,
        observed,
        weights_match,
    })
}

/// Read the diagonal eigenvalue polynomials on a vector under a relabelling;
/// `None` when the vector is not a joint eigenvector.
fn read_weight_along(
    rep: &YangianRep,
    v: &[Rat],
    tau: &dyn Fn(usize) -> usize,
) -> Result<Option<HighestWeight>> {
    let n = rep.size();
    let p = rep.level();
    let anchor = v.iter().position(|x| !x.is_zero()).unwrap();
    let mut components = Vec::with_capacity(n);
    for j in 1..=n {
        let g = rep.gen(tau(j), tau(j));
        let mut coeffs = Vec::with_capacity(p + 1);
        for s in 0..=p {
            let img = g.coeff_or_zero(s).mul_vec(v);
            let c = &img[anchor] / &v[anchor];
            let expect: Vec<Rat> = v.iter().map(|x| &c * x).collect();
            if img != expect {
                return Ok(None);
            }
            coeffs.push(c);
        }
        if !coeffs[p].is_one() {
            return Ok(None);
        }
        components.push(MonicPoly::try_from_coeffs(&coeffs)?);
    }
    Ok(Some(HighestWeight::new(p, components)?))
}

/// Convenience: restrict to the cyclic span first, so the key relations can
/// be checked on modules built as larger tensor products.
pub fn restrict_to_cyclic_span(rep: &YangianRep) -> Result<YangianRep> {
    let data = cyclic_highest_module(rep)?;
    if data.span.rank() == rep.dim() {
        Ok(rep.clone())
    } else {
        restrict_to_subspace(rep, &data.span)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::ParitySeq;
    use crate::rep::{irreducible_quotient, tensor_modules};

    fn ps(s: &str) -> ParitySeq {
        s.parse().unwrap()
    }

    fn mp(roots: &[i64]) -> MonicPoly {
        MonicPoly::from_root_values(roots.iter().map(|&r| Rat::from_int(r)).collect())
    }

    fn hw(level: usize, comps: &[&[i64]]) -> HighestWeight {
        HighestWeight::new(level, comps.iter().map(|c| mp(c)).collect()).unwrap()
    }

    #[test]
    fn key_relations_level_one_distinct_roots() {
        let r = YangianRep::vector_module(&ps("01"), &Rat::zero());
        let report = verify_key_relations(&r).unwrap();
        assert!(report.ok(), "{:?}", report);
        assert_eq!(report.k, 1);
        assert_eq!(report.ordered_product_proportional, Some(true));
    }

    #[test]
    fn key_relations_level_one_equal_roots() {
        // Atypical line: both components equal, k = 0, zeta = xi.
        let r = YangianRep::kac_module(
            &ps("01"),
            &(Rat::from_int(2), Rat::from_int(-2)),
            &Rat::zero(),
        )
        .unwrap();
        let report = verify_key_relations(&r).unwrap();
        assert!(report.ok(), "{:?}", report);
        assert_eq!(report.k, 0);
        assert_eq!(report.ordered_product_proportional, None);
    }

    #[test]
    fn key_relations_level_two_kac_tensor() {
        let k1 = YangianRep::kac_module(
            &ps("01"),
            &(Rat::from_int(1), Rat::from_int(2)),
            &Rat::zero(),
        )
        .unwrap();
        let k2 = YangianRep::kac_module(
            &ps("01"),
            &(Rat::from_int(3), Rat::from_int(-1)),
            &Rat::new(1, 2),
        )
        .unwrap();
        let t = irreducible_quotient(&tensor_modules(&k1, &k2).unwrap()).unwrap();
        let report = verify_key_relations(&t).unwrap();
        assert!(report.ok(), "{:?}", report);
        assert_eq!(report.k, 2);
    }

    #[test]
    fn key_relations_reversed_labelling() {
        let r = YangianRep::vector_module(&ps("10"), &Rat::new(-1, 2));
        let report = verify_key_relations(&r).unwrap();
        assert!(report.ok(), "{:?}", report);
    }

    #[test]
    fn key_relations_reject_wrong_shape() {
        let r = YangianRep::vector_module(&ps("011"), &Rat::zero());
        assert!(verify_key_relations(&r).is_err());
    }

    #[test]
    fn odd_reflection_on_the_vector_module() {
        let r = YangianRep::vector_module(&ps("01"), &Rat::zero());
        let report = verify_odd_reflection(&r, 1).unwrap();
        assert!(report.ok(), "{:?}", report);
        assert_eq!(report.expected, hw(1, &[&[-1], &[0]]));
        assert_eq!(report.observed, Some(hw(1, &[&[-1], &[0]])));
    }

    #[test]
    fn odd_reflection_on_a_101_tensor() {
        let a = YangianRep::vector_module(&ps("101"), &Rat::zero());
        let b = YangianRep::vector_module(&ps("101"), &Rat::from_int(2));
        let t = irreducible_quotient(&tensor_modules(&a, &b).unwrap()).unwrap();
        for index in [1, 2] {
            let report = verify_odd_reflection(&t, index).unwrap();
            assert!(report.ok(), "index {}: {:?}", index, report);
        }
    }

    #[test]
    fn odd_reflection_with_no_moved_roots() {
        // Both components of the trivial module coincide: k = 0, the weight
        // is fixed and zeta is the highest vector itself.
        let r = YangianRep::trivial_module(&ps("01"), &Rat::from_int(3));
        let report = verify_odd_reflection(&r, 1).unwrap();
        assert!(report.ok(), "{:?}", report);
        assert_eq!(report.expected, report.observed.unwrap());
    }

    #[test]
    fn span_restriction_trims_non_cyclic_modules() {
        // At shift difference +1 the tensor is not cyclic; restriction cuts
        // it to the span of the highest vector and the battery still passes.
        let a = YangianRep::vector_module(&ps("01"), &Rat::zero());
        let b = YangianRep::vector_module(&ps("01"), &Rat::one());
        let t = tensor_modules(&a, &b).unwrap();
        let cyclic = restrict_to_cyclic_span(&t).unwrap();
        assert_eq!(cyclic.dim(), 2);
        assert!(verify_key_relations(&cyclic).unwrap().ok());
        // Already-cyclic input comes back unchanged.
        let again = restrict_to_cyclic_span(&cyclic).unwrap();
        assert_eq!(again.dim(), cyclic.dim());
    }

    #[test]
    fn odd_reflection_rejects_even_pairs() {
        let r = YangianRep::vector_module(&ps("001"), &Rat::zero());
        assert!(matches!(
            verify_odd_reflection(&r, 1),
            Err(Error::NotOddPosition { index: 1 })
        ));
    }
}
