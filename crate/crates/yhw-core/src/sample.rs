//! Seeded random instances for the verification harness.
//!
//! Roots and shifts are drawn from a small pool of integers and
//! half-integers, with rejection where a family has hypotheses to meet
//! (distinct shifts, typical weights). Everything is driven by an explicit
//! seed so reports are reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::parity::ParitySeq;
use crate::poly::MonicPoly;
use crate::rat::Rat;
use crate::rep::YangianRep;
use crate::weight::HighestWeight;
use crate::Result;

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The sampling pool: integers -5..=5 plus the half-integers with
/// denominator 2 closest to zero.
pub fn root_pool() -> Vec<Rat> {
    let mut pool: Vec<Rat> = (-5..=5).map(Rat::from_int).collect();
    for n in [-3i64, -1, 1, 3] {
        pool.push(Rat::new(n, 2));
    }
    pool
}

pub fn random_root(rng: &mut SampleRng) -> Rat {
    let pool = root_pool();
    pool[rng.gen_range(0..pool.len())].clone()
}

/// Pairwise distinct values from the pool.
pub fn random_distinct_roots(rng: &mut SampleRng, count: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(count);
    while out.len() < count {
        let r = random_root(rng);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn random_monic(rng: &mut SampleRng, degree: usize) -> MonicPoly {
    MonicPoly::from_root_values((0..degree).map(|_| random_root(rng)).collect())
}

pub fn random_weight(rng: &mut SampleRng, len: usize, level: usize) -> HighestWeight {
    HighestWeight::new(level, (0..len).map(|_| random_monic(rng, level)).collect())
        .expect("generated components share the level")
}

pub fn random_parity(rng: &mut SampleRng, len: usize) -> ParitySeq {
    ParitySeq::new((0..len).map(|_| rng.gen_range(0..=1u8)).collect()).expect("nonempty 0/1 word")
}

/// A typical 1|1 weight: `a_1 + a_2 != 0`, so the two-dimensional module
/// stays irreducible.
pub fn random_typical_weight(rng: &mut SampleRng) -> (Rat, Rat) {
    loop {
        let a1 = random_root(rng);
        let a2 = random_root(rng);
        if !(&a1 + &a2).is_zero() {
            return (a1, a2);
        }
    }
}

/// Tensor product of `level` typical two-dimensional modules with distinct
/// random shifts, over the given odd pair.
pub fn random_kac_tensor(
    rng: &mut SampleRng,
    sigma: &ParitySeq,
    level: usize,
    cap: usize,
) -> Result<YangianRep> {
    let shifts = random_distinct_roots(rng, level);
    let mut rep: Option<YangianRep> = None;
    for shift in &shifts {
        let weight = random_typical_weight(rng);
        let factor = YangianRep::kac_module(sigma, &weight, shift)?;
        rep = Some(match rep {
            None => factor,
            Some(r) => r.tensor(&factor, cap)?,
        });
    }
    Ok(rep.expect("level >= 1"))
}

/// Tensor product of vector modules with distinct random shifts.
pub fn random_vector_tensor(
    rng: &mut SampleRng,
    sigma: &ParitySeq,
    factors: usize,
    cap: usize,
) -> Result<YangianRep> {
    let shifts = random_distinct_roots(rng, factors);
    let mut rep: Option<YangianRep> = None;
    for shift in &shifts {
        let factor = YangianRep::vector_module(sigma, shift);
        rep = Some(match rep {
            None => factor,
            Some(r) => r.tensor(&factor, cap)?,
        });
    }
    Ok(rep.expect("factors >= 1"))
}
