//! The central series of the 1|1 Yangian, computed as truncated matrix
//! series on an explicit module.
//!
//! `b(u) = (t_22(u) - t_21(u) t_11(u)^{-1} t_12(u)) t_11(u)^{-1}`, with the
//! generator series recovered from the level-p polynomials. The inverse is
//! built order by order (the leading term of `t_11` is the identity). On a
//! highest-weight module the coefficients must commute with every generator
//! coefficient and act on the highest vector by the series of
//! `lambda_2(u) / lambda_1(u)`.

use crate::linalg::RatMatrix;
use crate::poly::RationalFn;
use crate::rat::Rat;
use crate::series::{expand_series, TruncatedSeries};
use crate::{Error, Result};

use super::cyclic::cyclic_highest_module;
use super::YangianRep;

#[derive(Clone, Debug)]
pub struct BerezinianReport {
    pub order: usize,
    pub b_coeffs: Vec<RatMatrix>,
    pub scalar_series: TruncatedSeries,
    pub central: bool,
    pub scalar_match: bool,
}

impl BerezinianReport {
    pub fn ok(&self) -> bool {
        self.central && self.scalar_match
    }
}

/// Generator series coefficients through the order: `t^{(r)}` is the
/// coefficient of `u^{p-r}` in the level-p polynomial, zero past the level.
fn generator_series(rep: &YangianRep, i: usize, j: usize, order: usize) -> Vec<RatMatrix> {
    let d = rep.dim();
    let p = rep.level();
    let g = rep.gen(i, j);
    (0..=order)
        .map(|r| {
            if r <= p {
                g.coeff_or_zero(p - r)
            } else {
                RatMatrix::zeros(d, d)
            }
        })
        .collect()
}

fn series_mul(a: &[RatMatrix], b: &[RatMatrix], d: usize) -> Vec<RatMatrix> {
    let order = a.len().min(b.len()) - 1;
    let mut out = vec![RatMatrix::zeros(d, d); order + 1];
    for r in 0..=order {
        for s in 0..=r {
            if a[s].is_zero() || b[r - s].is_zero() {
                continue;
            }
            out[r] = out[r].add(&a[s].mul(&b[r - s]));
        }
    }
    out
}

fn series_sub(a: &[RatMatrix], b: &[RatMatrix]) -> Vec<RatMatrix> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Order-by-order inverse of a series with identity leading term.
fn series_inverse_unipotent(a: &[RatMatrix], d: usize) -> Result<Vec<RatMatrix>> {
    if a[0] != RatMatrix::identity(d) {
        return Err(Error::Internal(
            "series inversion expects an identity leading term".into(),
        ));
    }
    let order = a.len() - 1;
    let mut inv = vec![RatMatrix::zeros(d, d); order + 1];
    inv[0] = RatMatrix::identity(d);
    for r in 1..=order {
        let mut acc = RatMatrix::zeros(d, d);
        for s in 1..=r {
            if a[s].is_zero() || inv[r - s].is_zero() {
                continue;
            }
            acc = acc.add(&a[s].mul(&inv[r - s]));
        }
        inv[r] = acc.neg();
    }
    Ok(inv)
}

/// The central series on a highest-weight 1|1 module with the 01 labelling.
pub fn berezinian_action(rep: &YangianRep, order: usize) -> Result<BerezinianReport> {
    if rep.size() != 2 || rep.sigma().bit(1) != 0 || rep.sigma().bit(2) != 1 {
        return Err(Error::BadParity(
            "the central-series formula is written in the 01 labelling".into(),
        ));
    }
    let d = rep.dim();
    let data = cyclic_highest_module(rep)?;

    let t11 = generator_series(rep, 1, 1, order);
    let t12 = generator_series(rep, 1, 2, order);
    let t21 = generator_series(rep, 2, 1, order);
    let t22 = generator_series(rep, 2, 2, order);
    let inv11 = series_inverse_unipotent(&t11, d)?;

    let middle = series_mul(&series_mul(&t21, &inv11, d), &t12, d);
    let b = series_mul(&series_sub(&t22, &middle), &inv11, d);

    let mut central = true;
    'outer: for coeff in &b {
        for i in 1..=2usize {
            for j in 1..=2usize {
                let g = rep.gen(i, j);
                for s in 0..=g.degree_bound() {
                    let Some(c) = g.coeff(s) else { continue };
                    if !coeff.commutes_with(c) {
                        central = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    let ratio = RationalFn::reduce(
        data.weight.component(2).clone(),
        data.weight.component(1).clone(),
    );
    let scalar_series = expand_series(&ratio, order)?;
    let xi = rep.xi().unwrap();
    let scalar_match = b.iter().enumerate().all(|(r, coeff)| {
        let img = coeff.mul_vec(xi);
        let expect: Vec<Rat> = xi.iter().map(|x| scalar_series.coeff(r) * x).collect();
        img == expect
    });

    Ok(BerezinianReport {
        order,
        b_coeffs: b,
        scalar_series,
        central,
        scalar_match,
    })
}

/// Negative control: the bare ratio `t_22(u) t_11(u)^{-1}` is not central on
/// generic two-dimensional modules. Returns whether all its coefficients
/// commute with all generator coefficients.
pub fn naive_ratio_action(rep: &YangianRep, order: usize) -> Result<bool> {
    if rep.size() != 2 {
        return Err(Error::BadParity("a 1|1 module is required".into()));
    }
    let d = rep.dim();
    let t11 = generator_series(rep, 1, 1, order);
    let t22 = generator_series(rep, 2, 2, order);
    let inv11 = series_inverse_unipotent(&t11, d)?;
    let naive = series_mul(&t22, &inv11, d);
    for coeff in &naive {
        for i in 1..=2usize {
            for j in 1..=2usize {
                let g = rep.gen(i, j);
                for s in 0..=g.degree_bound() {
                    let Some(c) = g.coeff(s) else { continue };
                    if !coeff.commutes_with(c) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
