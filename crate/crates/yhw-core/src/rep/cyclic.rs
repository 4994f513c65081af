//! Cyclic spans, singular vectors and irreducible quotients.
//!
//! Singular vectors are found by intersecting the common kernel of all
//! raising coefficient matrices with joint eigenspaces of the diagonal
//! coefficient matrices. The eigenvalue splitting is exact: blocks are first
//! shrunk to invariant subspaces, the restricted minimal polynomial is
//! computed by Krylov elimination, and only its rational zeros matter (a
//! rational joint eigenvector forces rational eigenvalues).

use crate::linalg::{minimal_polynomial, RatMatrix, Subspace};
use crate::poly::MonicPoly;
use crate::rat::Rat;
use crate::weight::HighestWeight;
use crate::{dense, Error, Result};

use super::{PolyMatrix, SuperVec, YangianRep};

/// Result of reading a highest-weight structure off a representation.
#[derive(Clone, Debug)]
pub struct CyclicData {
    pub span: Subspace,
    pub weight: HighestWeight,
    pub singular: bool,
}

fn for_each_gen_coeff<'a>(
    rep: &'a YangianRep,
    mut f: impl FnMut(usize, usize, usize, &'a RatMatrix),
) {
    let n = rep.size();
    for i in 1..=n {
        for j in 1..=n {
            let g = rep.gen(i, j);
            for s in 0..=g.degree_bound() {
                if let Some(c) = g.coeff(s) {
                    f(i, j, s, c);
                }
            }
        }
    }
}

fn all_gen_coeffs(rep: &YangianRep) -> Vec<&RatMatrix> {
    let mut out = Vec::new();
    for_each_gen_coeff(rep, |_, _, _, c| out.push(c));
    out
}

/// Verify that the distinguished vector is singular and a joint eigenvector,
/// read off its highest weight, and compute its cyclic span.
pub fn cyclic_highest_module(rep: &YangianRep) -> Result<CyclicData> {
    let xi = rep.xi().ok_or(Error::MissingHighestVector)?;
    if xi.iter().all(Rat::is_zero) {
        return Err(Error::Shape("distinguished vector is zero".into()));
    }
    let n = rep.size();
    let p = rep.level();

    for i in 1..=n {
        for j in (i + 1)..=n {
            let g = rep.gen(i, j);
            for s in 0..=g.degree_bound() {
                let Some(c) = g.coeff(s) else { continue };
                if !c.mul_vec(xi).iter().all(Rat::is_zero) {
                    return Err(Error::NotSingular { i, j, power: s });
                }
            }
        }
    }

    let anchor = xi.iter().position(|x| !x.is_zero()).unwrap();
    let mut components = Vec::with_capacity(n);
    for i in 1..=n {
        let g = rep.gen(i, i);
        let mut coeffs = Vec::with_capacity(p + 1);
        for s in 0..=p {
            let img = g.coeff_or_zero(s).mul_vec(xi);
            let c = &img[anchor] / &xi[anchor];
            let scaled: Vec<Rat> = xi.iter().map(|x| &c * x).collect();
            if img != scaled {
                return Err(Error::NotEigen { i, power: s });
            }
            coeffs.push(c);
        }
        if !coeffs[p].is_one() {
            return Err(Error::Internal(format!(
                "T_{{{},{}}} is not monically normalized on the highest vector",
                i, i
            )));
        }
        components.push(MonicPoly::try_from_coeffs(&coeffs)?);
    }

    let span = Subspace::invariant_closure(rep.dim(), &[xi.to_vec()], &all_gen_coeffs(rep));
    Ok(CyclicData {
        span,
        weight: HighestWeight::new(p, components)?,
        singular: true,
    })
}

/// Restrict every generator to an invariant subspace; basis vectors of the
/// echelon basis stay parity-homogeneous, so the grading restricts too.
pub fn restrict_to_subspace(rep: &YangianRep, space: &Subspace) -> Result<YangianRep> {
    let n = rep.size();
    let k = space.rank();
    let mut gens = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let g = rep.gen(i, j);
            let mut coeffs = Vec::with_capacity(g.degree_bound() + 1);
            for s in 0..=g.degree_bound() {
                let c = g.coeff_or_zero(s);
                let restricted = space.restrict(&c).ok_or_else(|| {
                    Error::Internal(format!(
                        "span is not invariant under T_{{{},{}}} u^{}",
                        i, j, s
                    ))
                })?;
                coeffs.push(restricted);
            }
            row.push(PolyMatrix::from_coeffs(k, coeffs));
        }
        gens.push(row);
    }
    let parities: Vec<u8> = space
        .basis()
        .iter()
        .map(|b| parity_of_vector(rep.space(), b))
        .collect::<Result<_>>()?;
    let xi = match rep.xi() {
        Some(x) => Some(
            space
                .coords(x)
                .ok_or_else(|| Error::Internal("highest vector outside the span".into()))?,
        ),
        None => None,
    };
    Ok(rep.with_gens(k, SuperVec::new(parities), gens, xi))
}

fn parity_of_vector(space: &SuperVec, v: &[Rat]) -> Result<u8> {
    let mut parity = None;
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let p = space.parity(idx);
        match parity {
            None => parity = Some(p),
            Some(q) if q == p => {}
            _ => {
                return Err(Error::Internal(
                    "basis vector mixes parities; grading cannot restrict".into(),
                ))
            }
        }
    }
    parity.ok_or_else(|| Error::Internal("zero basis vector".into()))
}

/// A subspace of joint eigenvectors: every raising coefficient kills it and
/// every diagonal coefficient acts by the recorded scalar. `scalars[i-1]`
/// holds the coefficients of `lambda_i(u) - u^p` (ascending, length p).
#[derive(Clone, Debug)]
pub struct SingularBlock {
    pub space: Subspace,
    pub scalars: Vec<Vec<Rat>>,
}

/// All maximal subspaces of simultaneous singular vectors.
pub fn find_singular_blocks(rep: &YangianRep) -> Result<Vec<SingularBlock>> {
    let d = rep.dim();
    let n = rep.size();
    let p = rep.level();

    // Common kernel of the raising coefficient matrices.
    let mut raising_rows: Vec<Vec<Rat>> = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let g = rep.gen(i, j);
            for s in 0..=g.degree_bound() {
                if let Some(c) = g.coeff(s) {
                    for r in 0..d {
                        raising_rows.push(c.row_slice(r).to_vec());
                    }
                }
            }
        }
    }
    let kernel_space = if raising_rows.is_empty() {
        Subspace::full(d)
    } else {
        let stacked = RatMatrix::from_rows(raising_rows);
        Subspace::from_vectors(d, &stacked.kernel())
    };
    if kernel_space.rank() == 0 {
        return Ok(Vec::new());
    }

    let mut blocks = vec![kernel_space];
    for i in 1..=n {
        for s in 0..p {
            let a = rep.gen(i, i).coeff_or_zero(s);
            let mut next = Vec::new();
            for block in blocks {
                let inv = block.largest_invariant_under(&a);
                if inv.rank() == 0 {
                    continue;
                }
                let m = inv
                    .restrict(&a)
                    .ok_or_else(|| Error::Internal("invariant shrink failed".into()))?;
                let mu = minimal_polynomial(&m);
                let (zeros, _) = dense::rational_zeros(&mu)?;
                for (z, _) in zeros {
                    let mut shifted = m.clone();
                    for t in 0..shifted.rows() {
                        let v = shifted.get(t, t).clone();
                        shifted.set(t, t, &v - &z);
                    }
                    let combos = shifted.kernel();
                    if combos.is_empty() {
                        continue;
                    }
                    let vectors: Vec<Vec<Rat>> = combos.iter().map(|c| inv.combine(c)).collect();
                    next.push(Subspace::from_vectors(d, &vectors));
                }
            }
            blocks = next;
        }
    }

    let mut out = Vec::with_capacity(blocks.len());
    for block in blocks {
        let mut scalars = Vec::with_capacity(n);
        for i in 1..=n {
            let mut per_i = Vec::with_capacity(p);
            for s in 0..p {
                let a = rep.gen(i, i).coeff_or_zero(s);
                let b0 = &block.basis()[0];
                let img = a.mul_vec(b0);
                let anchor = b0.iter().position(|x| !x.is_zero()).unwrap();
                let c = &img[anchor] / &b0[anchor];
                for b in block.basis() {
                    let expect: Vec<Rat> = b.iter().map(|x| &c * x).collect();
                    if a.mul_vec(b) != expect {
                        return Err(Error::Internal(
                            "eigen refinement left a non-scalar action".into(),
                        ));
                    }
                }
                per_i.push(c);
            }
            scalars.push(per_i);
        }
        out.push(SingularBlock {
            space: block,
            scalars,
        });
    }
    Ok(out)
}

/// Quotient by an invariant subspace. The complement is spanned by the
/// standard basis vectors at non-pivot coordinates of the submodule basis.
fn quotient_by(rep: &YangianRep, submodule: &Subspace) -> Result<YangianRep> {
    let d = rep.dim();
    // Free coordinates: those that are not pivots of the submodule basis.
    let mut is_pivot = vec![false; d];
    for b in submodule.basis() {
        let pc = b.iter().position(|x| !x.is_zero()).unwrap();
        is_pivot[pc] = true;
    }
    let free: Vec<usize> = (0..d).filter(|&t| !is_pivot[t]).collect();
    let k = free.len();
    if k == 0 {
        return Err(Error::Internal("quotient by the whole module".into()));
    }
    let project = |x: &[Rat]| -> Vec<Rat> {
        let r = submodule.reduce(x);
        free.iter().map(|&t| r[t].clone()).collect()
    };

    let n = rep.size();
    let mut gens = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let g = rep.gen(i, j);
            let mut coeffs = Vec::with_capacity(g.degree_bound() + 1);
            for s in 0..=g.degree_bound() {
                let c = g.coeff_or_zero(s);
                let mut q = RatMatrix::zeros(k, k);
                for (col, &t) in free.iter().enumerate() {
                    let mut e = vec![Rat::zero(); d];
                    e[t] = Rat::one();
                    let img = project(&c.mul_vec(&e));
                    for (r_idx, val) in img.into_iter().enumerate() {
                        if !val.is_zero() {
                            q.set(r_idx, col, val);
                        }
                    }
                }
                coeffs.push(q);
            }
            row.push(PolyMatrix::from_coeffs(k, coeffs));
        }
        gens.push(row);
    }
    let parities: Vec<u8> = free.iter().map(|&t| rep.space().parity(t)).collect();
    let xi = rep.xi().map(project);
    Ok(rep.with_gens(k, SuperVec::new(parities), gens, xi))
}

/// Iteratively quotient out every proper submodule generated by singular
/// vectors until the highest line is the only singular one. Idempotent and
/// weight-preserving.
pub fn irreducible_quotient(rep: &YangianRep) -> Result<YangianRep> {
    let mut cur = rep.clone();
    loop {
        let data = cyclic_highest_module(&cur)?;
        if data.span.rank() < cur.dim() {
            cur = restrict_to_subspace(&cur, &data.span)?;
            continue;
        }
        let xi = cur.xi().unwrap().to_vec();
        let p = cur.level();
        let xi_scalars: Vec<Vec<Rat>> = data
            .weight
            .components()
            .iter()
            .map(|c| c.coeffs()[..p].to_vec())
            .collect();

        let blocks = find_singular_blocks(&cur)?;
        let mut generators: Vec<Vec<Rat>> = Vec::new();
        for block in &blocks {
            if block.scalars == xi_scalars {
                if !block.space.contains(&xi) {
                    return Err(Error::Internal(
                        "a singular line shares the highest weight but misses the highest vector"
                            .into(),
                    ));
                }
                if block.space.rank() > 1 {
                    return Err(Error::Internal(
                        "highest weight space is not one-dimensional".into(),
                    ));
                }
            } else {
                generators.extend(block.space.basis().iter().cloned());
            }
        }
        if generators.is_empty() {
            return Ok(cur);
        }
        let submodule = Subspace::invariant_closure(cur.dim(), &generators, &all_gen_coeffs(&cur));
        if submodule.contains(&xi) {
            return Err(Error::Internal(
                "proper singular vectors generate the whole module".into(),
            ));
        }
        cur = quotient_by(&cur, &submodule)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::ParitySeq;
    use crate::rep::{check_defining_relations, tensor_modules};

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
    fn vector_module_weight_readoff() {
        let r = YangianRep::vector_module(&ps("01"), &Rat::zero());
        let data = cyclic_highest_module(&r).unwrap();
        assert_eq!(data.span.rank(), 2);
        assert_eq!(data.weight, hw(1, &[&[1], &[0]]));
        assert!(data.singular);

        let r = YangianRep::vector_module(&ps("10"), &Rat::zero());
        let data = cyclic_highest_module(&r).unwrap();
        assert_eq!(data.weight, hw(1, &[&[-1], &[0]]));
    }

    #[test]
    fn atypical_quotient_weight() {
        let r = YangianRep::kac_module(
            &ps("01"),
            &(Rat::from_int(2), Rat::from_int(-2)),
            &Rat::zero(),
        )
        .unwrap();
        assert_eq!(r.dim(), 1);
        let data = cyclic_highest_module(&r).unwrap();
        assert_eq!(data.weight, hw(1, &[&[2], &[2]]));
    }

    #[test]
    fn tensor_weight_is_product_of_factor_weights() {
        let k1 =
            YangianRep::kac_module(&ps("01"), &(Rat::one(), Rat::zero()), &Rat::zero()).unwrap();
        let k2 = YangianRep::kac_module(&ps("01"), &(Rat::one(), Rat::zero()), &Rat::from_int(-10))
            .unwrap();
        let t = tensor_modules(&k1, &k2).unwrap();
        let data = cyclic_highest_module(&t).unwrap();
        assert_eq!(data.weight, hw(2, &[&[11, 1], &[10, 0]]));
        let w1 = cyclic_highest_module(&k1).unwrap().weight;
        let w2 = cyclic_highest_module(&k2).unwrap().weight;
        for i in 1..=2 {
            assert_eq!(
                *data.weight.component(i),
                w1.component(i).mul(w2.component(i))
            );
        }
    }

    #[test]
    fn tensor_with_trivial_multiplies_weight() {
        let r = YangianRep::vector_module(&ps("011"), &Rat::zero());
        let trivial = YangianRep::trivial_module(&ps("011"), &Rat::from_int(5));
        let t = tensor_modules(&r, &trivial).unwrap();
        let data = cyclic_highest_module(&t).unwrap();
        let base = cyclic_highest_module(&r).unwrap().weight;
        for i in 1..=3 {
            assert_eq!(*data.weight.component(i), base.component(i).mul(&mp(&[-5])));
        }
    }

    #[test]
    fn non_singular_vector_is_rejected() {
        let r = YangianRep::vector_module(&ps("01"), &Rat::zero());
        let mut e2 = vec![Rat::zero(); 2];
        e2[1] = Rat::one();
        let gens: Vec<Vec<PolyMatrix>> = (1..=2)
            .map(|i| (1..=2).map(|j| r.gen(i, j).clone()).collect())
            .collect();
        let broken = r.with_gens(2, r.space().clone(), gens, Some(e2));
        let err = cyclic_highest_module(&broken);
        assert!(matches!(
            err,
            Err(Error::NotSingular {
                i: 1,
                j: 2,
                power: 0
            })
        ));
    }

    #[test]
    fn quotient_is_a_fixed_point_on_irreducibles() {
        let r = YangianRep::vector_module(&ps("101"), &Rat::new(1, 2));
        let q = irreducible_quotient(&r).unwrap();
        assert_eq!(q.dim(), r.dim());
        let qq = irreducible_quotient(&q).unwrap();
        assert_eq!(qq.dim(), q.dim());
    }

    #[test]
    fn full_atypical_module_quotients_to_its_line() {
        let full = YangianRep::kac_module_full(
            &ps("01"),
            &(Rat::from_int(2), Rat::from_int(-2)),
            &Rat::zero(),
        )
        .unwrap();
        assert_eq!(full.dim(), 2);
        let q = irreducible_quotient(&full).unwrap();
        assert_eq!(q.dim(), 1);
        let w = cyclic_highest_module(&q).unwrap().weight;
        assert_eq!(w, hw(1, &[&[2], &[2]]));
        assert!(check_defining_relations(&q).ok);
    }

    #[test]
    fn shift_difference_scan_finds_the_reducible_points() {
        let mut drops = Vec::new();
        for d in -3i64..=3 {
            let a = YangianRep::vector_module(&ps("01"), &Rat::zero());
            let b = YangianRep::vector_module(&ps("01"), &Rat::from_int(d));
            let t = tensor_modules(&a, &b).unwrap();
            let q = irreducible_quotient(&t).unwrap();
            let w_before = cyclic_highest_module(&t).unwrap().weight;
            let w_after = cyclic_highest_module(&q).unwrap().weight;
            assert_eq!(w_before, w_after);
            assert!(check_defining_relations(&q).ok);
            if q.dim() < t.dim() {
                drops.push(d);
            }
        }
        assert_eq!(drops, vec![-1, 1]);
    }

    #[test]
    fn singular_blocks_of_a_reducible_tensor() {
        // At shift difference -1 the tensor is cyclic with a proper singular
        // line; at +1 it is not cyclic and the highest line is the only
        // singular one.
        let a = YangianRep::vector_module(&ps("01"), &Rat::zero());
        let b = YangianRep::vector_module(&ps("01"), &Rat::from_int(-1));
        let t = tensor_modules(&a, &b).unwrap();
        assert_eq!(cyclic_highest_module(&t).unwrap().span.rank(), 4);
        let blocks = find_singular_blocks(&t).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.space.rank() == 1));

        let b = YangianRep::vector_module(&ps("01"), &Rat::one());
        let t = tensor_modules(&a, &b).unwrap();
        assert_eq!(cyclic_highest_module(&t).unwrap().span.rank(), 2);
        let blocks = find_singular_blocks(&t).unwrap();
        assert_eq!(blocks.len(), 1);
    }
}
