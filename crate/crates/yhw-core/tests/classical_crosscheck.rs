//! Level-1 cross-check against classical Lie-superalgebra combinatorics.
//!
//! A level-1 weight `lambda_i(u) = u + c_i` corresponds to the classical
//! weight `mu_i = (-1)^{s_i} c_i` in place coordinates. The classical test
//! never mentions shift ratios: reflect with the isotropic-pairing rule
//! (`mu' = (mu_{i+1}+1, mu_i-1)` when the pairing is nonzero, a plain swap
//! otherwise) until the sequence is standard, then require integral
//! descending dominance inside each parity block. The two procedures share
//! no formulas, so agreement pins the sign conventions on both sides.

use yhw_core::rat::Rat;
use yhw_core::sample::{random_parity, random_weight, rng_from_seed};
use yhw_core::{decide_finite_dimensional, HighestWeight, ParitySeq, Verdict};

fn sign_of(bit: u8) -> Rat {
    if bit == 1 {
        -Rat::one()
    } else {
        Rat::one()
    }
}

/// Place-coordinate weight of a level-1 highest weight.
fn classical_weight(sigma: &ParitySeq, weight: &HighestWeight) -> Vec<Rat> {
    (1..=sigma.len())
        .map(|i| {
            let root = weight.component(i).roots().iter().next().unwrap().clone();
            &sign_of(sigma.bit(i)) * &root
        })
        .collect()
}

fn is_nonnegative_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Classical finite-dimensionality of the irreducible `gl(m|n)` module with
/// highest weight `mu` relative to the Borel of the parity sequence.
fn classical_finite_dim(sigma: &ParitySeq, mu: &[Rat]) -> bool {
    let mut sigma = sigma.clone();
    let mut mu = mu.to_vec();
    while let Some(i) = sigma.first_descent() {
        let pairing = &(&sign_of(sigma.bit(i)) * &mu[i - 1])
            - &(&sign_of(sigma.bit(i + 1)) * &mu[i]);
        if pairing.is_zero() {
            mu.swap(i - 1, i);
        } else {
            let a = &mu[i] + &Rat::one();
            let b = &mu[i - 1] - &Rat::one();
            mu[i - 1] = a;
            mu[i] = b;
        }
        sigma = sigma.swapped(i);
    }
    // Standard sequence: integral descending dominance inside each block.
    let m = sigma.m();
    let total = sigma.len();
    let block_ok = |range: std::ops::Range<usize>| {
        range
            .clone()
            .zip(range.skip(1))
            .all(|(i, j)| is_nonnegative_integer(&(&mu[i - 1] - &mu[j - 1])))
    };
    block_ok(1..m + 1) && block_ok(m + 1..total + 1)
}

#[test]
fn level_one_decisions_match_the_classical_criterion() {
    let mut rng = rng_from_seed(31);
    let mut finite = 0usize;
    for case in 0..300usize {
        let len = 2 + case % 3;
        let sigma = random_parity(&mut rng, len);
        let weight = random_weight(&mut rng, len, 1);
        let mu = classical_weight(&sigma, &weight);
        let classical = classical_finite_dim(&sigma, &mu);
        let decision = decide_finite_dimensional(&sigma, &weight).unwrap();
        let yangian = decision.verdict == Verdict::FiniteDimensional;
        assert_eq!(
            yangian, classical,
            "case {}: sigma {} weight {:?} mu {:?}",
            case, sigma, weight, mu
        );
        if classical {
            finite += 1;
        }
    }
    assert!(finite > 0, "the sample should contain finite cases");
    println!("[PASS] classical cross-check: 300 level-1 instances, {} finite", finite);
}

#[test]
fn known_small_cases() {
    // gl(1|1): every weight is dominant for either Borel.
    for s in ["01", "10"] {
        let sigma: ParitySeq = s.parse().unwrap();
        for mu in [[Rat::from_int(3), Rat::from_int(1)], [Rat::zero(), Rat::zero()]] {
            assert!(classical_finite_dim(&sigma, &mu));
        }
    }
    // gl(2|0): plain dominance.
    let sigma: ParitySeq = "00".parse().unwrap();
    assert!(classical_finite_dim(&sigma, &[Rat::from_int(2), Rat::one()]));
    assert!(!classical_finite_dim(&sigma, &[Rat::one(), Rat::from_int(2)]));
    assert!(!classical_finite_dim(
        &sigma,
        &[Rat::new(1, 2), Rat::zero()]
    ));
}
