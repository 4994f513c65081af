//! Dense coefficient-vector polynomial arithmetic over `Rat`.
//!
//! Coefficients are stored ascending (index = power). This is internal
//! machinery for coefficient-form conversions, series expansion and minimal
//! polynomials; the public polynomial type works with root multisets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rat::Rat;
use crate::{Error, Result};

pub(crate) fn trim(v: &mut Vec<Rat>) {
    while v.len() > 1 && v.last().is_some_and(Rat::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        v.push(Rat::zero());
    }
}

pub(crate) fn is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub(crate) fn degree(v: &[Rat]) -> usize {
    let mut d = v.len();
    while d > 1 && v[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

pub(crate) fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if is_zero(a) || is_zero(b) {
        return vec![Rat::zero()];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += &(ca * cb);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    let mut out: Vec<Rat> = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(a: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in a.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Quotient and remainder with `deg r < deg den`.
pub(crate) fn divrem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = degree(den);
    assert!(!is_zero(den), "polynomial division by zero");
    let mut rem: Vec<Rat> = num.to_vec();
    trim(&mut rem);
    if degree(&rem) < dd || is_zero(&rem) {
        return (vec![Rat::zero()], rem);
    }
    let dn = degree(&rem);
    let lead = den[dd].clone();
    let mut quot = vec![Rat::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= &t;
        }
        quot[k] = c;
    }
    trim(&mut quot);
    trim(&mut rem);
    (quot, rem)
}

/// Monic gcd via the Euclidean algorithm.
pub(crate) fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !is_zero(&y) {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if is_zero(&x) {
        return x;
    }
    let lead = x[degree(&x)].clone();
    scale(&x, &lead.recip())
}

/// Monic lcm (zero if either side is zero).
pub(crate) fn lcm(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if is_zero(a) || is_zero(b) {
        return vec![Rat::zero()];
    }
    let g = gcd(a, b);
    let (q, r) = divrem(a, &g);
    debug_assert!(is_zero(&r));
    let prod = mul(&q, b);
    let lead = prod[degree(&prod)].clone();
    scale(&prod, &lead.recip())
}

const TRIAL_DIVISION_BOUND: u64 = 1 << 20;
const MAX_DIVISORS: usize = 1 << 16;

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul_mod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow_mod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, b);
            }
            b = mul_mod(b, b);
            e >>= 1;
        }
        acc
    };
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Factor `|n|` by trial division (plus a primality check on the cofactor).
/// Fails on values whose factors exceed the desk-scale bound.
fn factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let mut m = n.abs();
    let mut out: Vec<(u64, u32)> = Vec::new();
    if m.is_zero() {
        return Err(Error::Factorization("cannot factor zero".into()));
    }
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.last_mut() {
        Some((q, e)) if *q == p => *e += 1,
        _ => out.push((p, 1)),
    };
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        if (&m % d).is_zero() {
            m /= d;
            push(d, &mut out);
            continue;
        }
        // Once the remainder fits a machine word, finish there.
        if let Some(small) = m.to_u64() {
            let mut small = small;
            let mut dd = d;
            while dd <= TRIAL_DIVISION_BOUND && dd.saturating_mul(dd) <= small {
                while small % dd == 0 {
                    small /= dd;
                    push(dd, &mut out);
                }
                dd += if dd == 2 { 1 } else { 2 };
            }
            if small > 1 {
                if small <= TRIAL_DIVISION_BOUND || is_prime_u64(small) {
                    push(small, &mut out);
                } else {
                    return Err(Error::Factorization(format!(
                        "cofactor {} resists trial division",
                        small
                    )));
                }
            }
            return Ok(out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(out);
    }
    match m.to_u64() {
        Some(small) if is_prime_u64(small) => {
            push(small, &mut out);
            Ok(out)
        }
        _ => Err(Error::Factorization(format!(
            "cofactor {} exceeds the desk-scale factorization bound",
            m
        ))),
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let factors = factor(n)?;
    let mut divs: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= p;
                next.push(acc.clone());
            }
        }
        if next.len() > MAX_DIVISORS {
            return Err(Error::Factorization(
                "divisor set exceeds the desk-scale bound".into(),
            ));
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Ok(divs)
}

/// All rational zeros of `p` with multiplicity, plus the degree of the
/// rational-zero-free cofactor that remains.
///
/// Zeros are values `z` with `p(z) = 0` (the caller converts to whatever root
/// convention it uses). Deterministic: zeros are returned sorted descending.
pub(crate) fn rational_zeros(p: &[Rat]) -> Result<(Vec<(Rat, usize)>, usize)> {
    let mut f = p.to_vec();
    trim(&mut f);
    if is_zero(&f) {
        return Err(Error::Factorization("zero polynomial".into()));
    }
    let mut zeros: Vec<(Rat, usize)> = Vec::new();
    // Strip zero roots first.
    let mut zero_mult = 0usize;
    while f[0].is_zero() && f.len() > 1 {
        f.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        zeros.push((Rat::zero(), zero_mult));
    }
    if degree(&f) == 0 {
        return Ok((zeros, 0));
    }
    // Integer-normalize: common denominator out, content out.
    let mut den_lcm = BigInt::one();
    for c in &f {
        den_lcm = den_lcm.lcm(&c.denom());
    }
    let ints: Vec<BigInt> = f
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();

    let d = degree(&f);
    let cand_num = divisors(&ints[0])?;
    let cand_den = divisors(&ints[d])?;
    let mut candidates: Vec<Rat> = Vec::new();
    for p in &cand_num {
        for q in &cand_den {
            if p.gcd(q).is_one() {
                let v = Rat::from_bigint_pair(p.clone(), q.clone());
                candidates.push(v.clone());
                candidates.push(-v);
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    for z in candidates.iter().rev() {
        let mut mult = 0usize;
        while degree(&f) >= 1 && eval(&f, z).is_zero() {
            // Deflate by (x - z).
            let dd = degree(&f);
            let mut q = vec![Rat::zero(); dd];
            let mut carry = f[dd].clone();
            for k in (0..dd).rev() {
                q[k] = carry.clone();
                carry = &f[k] + &(&carry * z);
            }
            debug_assert!(carry.is_zero());
            f = q;
            trim(&mut f);
            mult += 1;
        }
        if mult > 0 {
            zeros.push((z.clone(), mult));
        }
        if degree(&f) == 0 {
            break;
        }
    }
    zeros.sort_by(|a, b| b.0.cmp(&a.0));
    Ok((zeros, degree(&f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&c| Rat::from_int(c)).collect()
    }

    #[test]
    fn divrem_exact() {
        // (x+1)(x+2) = x^2 + 3x + 2
        let (q, r) = divrem(&p(&[2, 3, 1]), &p(&[1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert!(is_zero(&r));
    }

    #[test]
    fn divrem_with_remainder() {
        let (q, r) = divrem(&p(&[1, 0, 1]), &p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
    }

    #[test]
    fn gcd_lcm() {
        let a = mul(&p(&[1, 1]), &p(&[2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(
            lcm(&a, &b),
            mul(&mul(&p(&[1, 1]), &p(&[2, 1])), &p(&[3, 1]))
        );
    }

    #[test]
    fn zeros_with_multiplicity() {
        // (x-1)^2 (x+3) x = x^4 + x^3 - 5x^2 + 3x ... compute: (x-1)^2 = x^2-2x+1;
        // times (x+3) = x^3 + x^2 - 5x + 3; times x.
        let f = mul(&mul(&p(&[1, -2, 1]), &p(&[3, 1])), &p(&[0, 1]));
        let (zeros, rest) = rational_zeros(&f).unwrap();
        assert_eq!(rest, 0);
        assert_eq!(
            zeros,
            vec![
                (Rat::from_int(1), 2),
                (Rat::zero(), 1),
                (Rat::from_int(-3), 1)
            ]
        );
    }

    #[test]
    fn zeros_irreducible_remainder() {
        // (x^2+1)(x - 1/2)
        let f = mul(&p(&[1, 0, 1]), &[Rat::new(-1, 2), Rat::one()]);
        let (zeros, rest) = rational_zeros(&f).unwrap();
        assert_eq!(zeros, vec![(Rat::new(1, 2), 1)]);
        assert_eq!(rest, 2);
    }
}
