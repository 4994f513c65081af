//! Odd reflections: transitions of (parity sequence, highest weight) across
//! an adjacent 01 or 10 pair.
//!
//! Across the pair the two components exchange their non-shared roots with a
//! shift of +1 (for a 10 pair) or -1 (for a 01 pair), while shared roots stay
//! in place. The transition is an involution and preserves the level.

use serde::{Deserialize, Serialize};

use crate::parity::ParitySeq;
use crate::poly::{MonicPoly, RootMultiset};
use crate::rat::Rat;
use crate::weight::HighestWeight;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Source pair was `10`; non-shared roots shift by +1.
    Plus,
    /// Source pair was `01`; non-shared roots shift by -1.
    Minus,
}

impl Direction {
    pub fn shift(self) -> Rat {
        match self {
            Direction::Plus => Rat::one(),
            Direction::Minus => -Rat::one(),
        }
    }
}

/// Audit record of one odd reflection at position `index` (1-based).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReflectionStep {
    pub index: usize,
    pub direction: Direction,
    /// Number of non-shared roots on each side.
    pub k: usize,
    pub shared: RootMultiset,
    /// Shifted roots placed into position `index`.
    pub moved_i: RootMultiset,
    /// Shifted roots placed into position `index + 1`.
    pub moved_i1: RootMultiset,
}

/// Split two equal-degree polynomials into (k, non-shared of a, non-shared
/// of b, shared), where shared is the full multiset intersection and
/// k = |a non-shared| = |b non-shared|.
///
/// The non-shared parts come out sorted descending, which realizes the
/// anti-string ordering: for positions i < j the roots satisfy
/// `alpha_i - alpha_j + 1 >= 1 != 0`.
pub fn partition_common_roots(
    a: &MonicPoly,
    b: &MonicPoly,
) -> Result<(usize, RootMultiset, RootMultiset, RootMultiset)> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let shared = a.roots().intersection(b.roots());
    let a_distinct = a.roots().difference(&shared);
    let b_distinct = b.roots().difference(&shared);
    debug_assert_eq!(a_distinct.len(), b_distinct.len());
    Ok((a_distinct.len(), a_distinct, b_distinct, shared))
}

/// One odd reflection at position `i` (1-based). Requires different parities
/// at `i` and `i+1`.
pub fn odd_reflect(
    sigma: &ParitySeq,
    weight: &HighestWeight,
    i: usize,
) -> Result<(ParitySeq, HighestWeight, ReflectionStep)> {
    weight.check_parity(sigma)?;
    if i == 0 || i >= sigma.len() {
        return Err(Error::Shape(format!(
            "reflection index {} out of range 1..{}",
            i,
            sigma.len()
        )));
    }
    let direction = match sigma.pair(i) {
        (1, 0) => Direction::Plus,
        (0, 1) => Direction::Minus,
        _ => return Err(Error::NotOddPosition { index: i }),
    };
    let a = weight.component(i);
    let b = weight.component(i + 1);
    let (k, a_distinct, b_distinct, shared) = partition_common_roots(a, b)?;
    let shift = direction.shift();
    let moved_i = b_distinct.shift(&shift);
    let moved_i1 = a_distinct.shift(&shift);

    let mut components = weight.components().to_vec();
    components[i - 1] = MonicPoly::from_roots(moved_i.union(&shared));
    components[i] = MonicPoly::from_roots(moved_i1.union(&shared));

    let step = ReflectionStep {
        index: i,
        direction,
        k,
        shared,
        moved_i,
        moved_i1,
    };
    Ok((
        sigma.swapped(i),
        HighestWeight::new(weight.level(), components)?,
        step,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(roots: &[i64]) -> MonicPoly {
        MonicPoly::from_root_values(roots.iter().map(|&r| Rat::from_int(r)).collect())
    }

    fn rms(roots: &[i64]) -> RootMultiset {
        RootMultiset::new(roots.iter().map(|&r| Rat::from_int(r)).collect())
    }

    fn hw(level: usize, comps: &[&[i64]]) -> HighestWeight {
        HighestWeight::new(level, comps.iter().map(|c| mp(c)).collect()).unwrap()
    }

    fn ps(s: &str) -> ParitySeq {
        s.parse().unwrap()
    }

    #[test]
    fn partition_examples() {
        let (k, a, b, shared) = partition_common_roots(&mp(&[2, 5]), &mp(&[5, 7])).unwrap();
        assert_eq!((k, a, b, shared), (1, rms(&[2]), rms(&[7]), rms(&[5])));

        let (k, a, b, shared) = partition_common_roots(&mp(&[1, 1]), &mp(&[1, 3])).unwrap();
        assert_eq!(
            (k, a.clone(), b, shared.clone()),
            (1, rms(&[1]), rms(&[3]), rms(&[1]))
        );
        // min-multiplicity intersection re-expands correctly
        let lhs = mp(&[1, 1]);
        let back = MonicPoly::from_roots(a.union(&shared));
        assert_eq!(lhs, back);

        let (k, _, _, shared) = partition_common_roots(&mp(&[4]), &mp(&[4])).unwrap();
        assert_eq!((k, shared), (0, rms(&[4])));

        assert!(partition_common_roots(&mp(&[1]), &mp(&[1, 2])).is_err());
    }

    #[test]
    fn reflect_example_level_one() {
        // 101 with ((u+2),(u+5),(u+7)) at i=1: direction plus, k=1.
        let (s2, w2, step) = odd_reflect(&ps("101"), &hw(1, &[&[2], &[5], &[7]]), 1).unwrap();
        assert_eq!(s2, ps("011"));
        assert_eq!(w2, hw(1, &[&[6], &[3], &[7]]));
        assert_eq!(step.direction, Direction::Plus);
        assert_eq!(step.k, 1);
    }

    #[test]
    fn reflect_fully_shared_is_fixed() {
        let (s2, w2, step) = odd_reflect(&ps("01"), &hw(1, &[&[3], &[3]]), 1).unwrap();
        assert_eq!(s2, ps("10"));
        assert_eq!(w2, hw(1, &[&[3], &[3]]));
        assert_eq!(step.k, 0);
        assert_eq!(step.direction, Direction::Minus);
    }

    #[test]
    fn reflect_with_shared_root() {
        // 10 with ((u)(u+5), (u+5)(u+9)) at i=1 -> 01 with ((u+10)(u+5), (u+1)(u+5))
        let (s2, w2, step) = odd_reflect(&ps("10"), &hw(2, &[&[0, 5], &[5, 9]]), 1).unwrap();
        assert_eq!(s2, ps("01"));
        assert_eq!(w2, hw(2, &[&[10, 5], &[1, 5]]));
        assert_eq!(step.k, 1);
        assert_eq!(step.shared, rms(&[5]));
    }

    #[test]
    fn reflect_rejects_equal_parities() {
        let err = odd_reflect(&ps("001"), &hw(1, &[&[1], &[2], &[3]]), 1);
        assert!(matches!(err, Err(Error::NotOddPosition { index: 1 })));
    }

    fn root_strategy() -> impl Strategy<Value = Rat> {
        (-5i64..=5, 1i64..=2).prop_map(|(n, d)| Rat::new(n, d))
    }

    fn pair_weight_strategy(p: usize) -> impl Strategy<Value = HighestWeight> {
        (
            proptest::collection::vec(root_strategy(), p),
            proptest::collection::vec(root_strategy(), p),
        )
            .prop_map(|(a, b)| {
                HighestWeight::new(
                    a.len(),
                    vec![
                        MonicPoly::from_root_values(a),
                        MonicPoly::from_root_values(b),
                    ],
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn reflection_is_an_involution(w in (1usize..4).prop_flat_map(pair_weight_strategy), bit in 0u8..2) {
            let sigma = ParitySeq::new(vec![bit, 1 - bit]).unwrap();
            let (s2, w2, _) = odd_reflect(&sigma, &w, 1).unwrap();
            let (s3, w3, _) = odd_reflect(&s2, &w2, 1).unwrap();
            prop_assert_eq!(s3, sigma);
            prop_assert_eq!(w3, w);
        }

        #[test]
        fn shared_roots_are_conserved(w in (1usize..4).prop_flat_map(pair_weight_strategy)) {
            let sigma = ps("10");
            let p = w.level();
            let (_, w2, step) = odd_reflect(&sigma, &w, 1).unwrap();
            prop_assert_eq!(step.k + step.shared.len(), p);
            prop_assert_eq!(w2.component(1).degree(), p);
            prop_assert_eq!(w2.component(2).degree(), p);
            // shared appears unchanged in both outputs
            prop_assert_eq!(w2.component(1).roots().intersection(&step.shared), step.shared.clone());
            prop_assert_eq!(w2.component(2).roots().intersection(&step.shared), step.shared.clone());
        }

        #[test]
        fn appending_zero_roots_stabilizes_reflections(w in (1usize..4).prop_flat_map(pair_weight_strategy)) {
            let sigma = ps("10");
            let (_, w2, step) = odd_reflect(&sigma, &w, 1).unwrap();
            let padded = w.stabilized();
            let (_, w2p, step_p) = odd_reflect(&sigma, &padded, 1).unwrap();
            prop_assert_eq!(step_p.k, step.k);
            prop_assert_eq!(w2p, w2.stabilized());
        }
    }
}
