//! Enumeration, factorization and verification routines.

pub mod closure;
pub mod lemmas;
pub mod orbits;
pub mod probe;
pub mod rank;
pub mod rclass;
pub mod regular;
pub mod snapshot;

pub use closure::{closure, EnumeratedMonoid, DEFAULT_ELEMENT_CAP};
pub use lemmas::{lemma_delta1_factor, lemma_delta2_normalize};
pub use orbits::{kernel_orbit_count, OrbitReport};
pub use probe::{conjecture_probe, ProbeOutcome};
pub use rank::{exhaustive_rank, group_rank, RankOutcome, DEFAULT_SUBSET_BUDGET};
pub use rclass::{r_class_half_check, RClassReport};
pub use regular::{is_regular, RegularWitness};

use rand::Rng;

use crate::counting;
use crate::error::Result;
use crate::family::{self, FamilySpec};
use crate::perm::Transformation;

/// Every map `[n] -> [n]` in lexicographic order of image tuples.
pub fn all_transformations(n: usize) -> impl Iterator<Item = Transformation> {
    let mut cur: Option<Vec<u8>> = if n == 0 { None } else { Some(vec![0; n]) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = cur.as_mut().unwrap();
        let mut i = n;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if (next[i] as usize) + 1 < n {
                next[i] += 1;
                break;
            }
            next[i] = 0;
        }
        Some(Transformation::from_raw(out))
    })
}

/// Every map of rank at least `r`, in lexicographic order.
pub fn all_of_rank_at_least(n: usize, r: usize) -> impl Iterator<Item = Transformation> {
    all_transformations(n).filter(move |a| a.rank() >= r)
}

pub fn random_transformation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Transformation {
    Transformation::from_raw((0..n).map(|_| rng.gen_range(0..n as u8)).collect())
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Transformation {
    use rand::seq::SliceRandom;
    let mut img: Vec<u8> = (0..n as u8).collect();
    img.shuffle(rng);
    Transformation::from_raw(img)
}

/// Why a monoid differs from a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMismatch {
    /// A member of the monoid outside the family.
    NotInFamily(Transformation),
    /// Every member lies in the family but the family is larger; the
    /// payload is some missing element when one was found by scanning.
    MissingFromMonoid(Option<Transformation>),
}

/// Checks `M = f` by testing every element of `M` against the fast predicate
/// and comparing `|M|` with the closed-form count of `f`.
pub fn equals_family(m: &EnumeratedMonoid, f: &FamilySpec) -> Result<Option<FamilyMismatch>> {
    if let Some(bad) = m
        .iter()
        .find(|a| !family::contains(f, a).unwrap_or(false))
    {
        return Ok(Some(FamilyMismatch::NotInFamily(bad)));
    }
    let expected = counting::card(f)?;
    if expected == num_bigint::BigUint::from(m.len()) {
        return Ok(None);
    }
    // look for a witness among the permutations first, then small degrees fully
    let n = m.degree();
    let witness = if n <= 6 {
        all_transformations(n).find(|a| !m.contains(a) && family::contains(f, a).unwrap_or(false))
    } else {
        None
    };
    Ok(Some(FamilyMismatch::MissingFromMonoid(witness)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<Transformation> = all_transformations(3).collect();
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].to_vec(), vec![1, 1, 1]);
        assert_eq!(all_of_rank_at_least(3, 3).count(), 6);
    }
}
