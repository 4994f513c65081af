//! Coefficient-wise verification of the defining relations.
//!
//! The relations are checked in denominator-cleared polynomial form: for all
//! generator pairs,
//!
//! ```text
//! (u-v) [T_ij(u), T_kl(v)]_± = (T_kj(u) T_il(v) - T_kj(v) T_il(u)) * sign
//! ```
//!
//! where the bracket is the super-commutator with the generator parities and
//! `sign = (-1)^{p_i p_j + p_i p_k + p_j p_k}`. Both sides are matrix-valued
//! polynomials in independent `u`, `v`; equality is exact per coefficient.

#![allow(clippy::needless_range_loop)]

use serde::Serialize;

use crate::linalg::RatMatrix;

use super::YangianRep;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub u_power: usize,
    pub v_power: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub ok: bool,
    pub tuples_checked: usize,
    pub first_violation: Option<RelationViolation>,
}

/// Check every generator 4-tuple; reports the first violating coefficient
/// entry, if any.
pub fn check_defining_relations(rep: &YangianRep) -> RelationReport {
    let n = rep.size();
    let mut tuples_checked = 0usize;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    tuples_checked += 1;
                    if let Some(v) = check_tuple(rep, i, j, k, l) {
                        return RelationReport {
                            ok: false,
                            tuples_checked,
                            first_violation: Some(v),
                        };
                    }
                }
            }
        }
    }
    RelationReport {
        ok: true,
        tuples_checked,
        first_violation: None,
    }
}

fn check_tuple(
    rep: &YangianRep,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Option<RelationViolation> {
    let d = rep.dim();
    let p = rep.level();
    let (pi, pj, pk, pl) = (
        rep.sigma().bit(i),
        rep.sigma().bit(j),
        rep.sigma().bit(k),
        rep.sigma().bit(l),
    );
    let comm_negates = (((pi + pj) % 2) * ((pk + pl) % 2)) == 1;
    let rhs_negates = (pi * pj + pi * pk + pj * pk) % 2 == 1;

    let tij = rep.gen(i, j);
    let tkl = rep.gen(k, l);
    let tkj = rep.gen(k, j);
    let til = rep.gen(i, l);

    // Bivariate coefficient grids, indexed [u_power][v_power].
    let zero = RatMatrix::zeros(d, d);
    let grid = |rows: usize, cols: usize| vec![vec![zero.clone(); cols]; rows];

    // B[su][sv] = T_ij[su] T_kl[sv] -/+ T_kl[sv] T_ij[su]  (super-commutator)
    let mut bracket = grid(p + 1, p + 1);
    for su in 0..=tij.degree_bound() {
        let Some(a) = tij.coeff(su) else { continue };
        for sv in 0..=tkl.degree_bound() {
            let Some(b) = tkl.coeff(sv) else { continue };
            let ab = a.mul(b);
            let ba = b.mul(a);
            bracket[su][sv] = if comm_negates {
                ab.add(&ba)
            } else {
                ab.sub(&ba)
            };
        }
    }

    // LHS[su][sv] = bracket[su-1][sv] - bracket[su][sv-1]   ((u - v) *)
    // RHS[su][sv] = sign * (T_kj[su] T_il[sv] - T_kj[sv] T_il[su])
    for su in 0..=p + 1 {
        for sv in 0..=p + 1 {
            let mut lhs = zero.clone();
            if su >= 1 && su - 1 <= p && sv <= p {
                lhs = lhs.add(&bracket[su - 1][sv]);
            }
            if sv >= 1 && sv - 1 <= p && su <= p {
                lhs = lhs.sub(&bracket[su][sv - 1]);
            }
            let mut rhs = zero.clone();
            if let (Some(a), Some(b)) = (tkj.coeff(su), til.coeff(sv)) {
                rhs = rhs.add(&a.mul(b));
            }
            if let (Some(a), Some(b)) = (tkj.coeff(sv), til.coeff(su)) {
                rhs = rhs.sub(&a.mul(b));
            }
            if rhs_negates {
                rhs = rhs.neg();
            }
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                for r in 0..d {
                    for c in 0..d {
                        if !diff.get(r, c).is_zero() {
                            return Some(RelationViolation {
                                i,
                                j,
                                k,
                                l,
                                u_power: su,
                                v_power: sv,
                                row: r,
                                col: c,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}
