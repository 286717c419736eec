//! Search for two-element generating sets of the block groups `Γ_{m⊕k}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::closure::{bounded_size, closure};
use super::rank::{search_group, Budget};
use crate::error::Result;
use crate::named::{generating_set, GeneratingSetSpec};
use crate::perm::Transformation;

/// Result of [`conjecture_probe`].
///
/// `RankIsTwo` means a generating pair exists, i.e. rank at most two. A
/// cyclic group is reported with the identity as the first entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    RankIsTwo(Transformation, Transformation),
    /// Every pair was tried; none generates.
    NoPairFound,
    /// Sampling used up the budget without finding a pair.
    BudgetExceeded { closures: u64 },
}

/// Looks for a generating pair of `Γ_{m⊕k}`: exhaustively when `|G|^2` fits
/// in `budget` closures, otherwise by sampling `budget` random pairs drawn
/// from a generator seeded with `seed`.
pub fn conjecture_probe(m: usize, k: usize, budget: u64, seed: u64) -> Result<ProbeOutcome> {
    let n = m + k;
    let gens = generating_set(&GeneratingSetSpec::oplus(m, k))?;
    let group: Vec<Transformation> = closure(&gens, n, super::DEFAULT_ELEMENT_CAP)?
        .iter()
        .collect();
    let size = group.len() as u64;
    if size.saturating_mul(size) <= budget {
        let mut b = Budget::new(budget);
        return Ok(match search_group(&group, n, 2, &mut b)? {
            Some(Some(w)) => pair(n, w),
            Some(None) => ProbeOutcome::NoPairFound,
            None => ProbeOutcome::BudgetExceeded { closures: b.used },
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = group.len() / 2;
    for _ in 0..budget {
        let a = &group[rng.gen_range(0..group.len())];
        let b = &group[rng.gen_range(0..group.len())];
        if bounded_size(&[a.clone(), b.clone()], n, half)?.is_none() {
            return Ok(ProbeOutcome::RankIsTwo(a.clone(), b.clone()));
        }
    }
    Ok(ProbeOutcome::BudgetExceeded { closures: budget })
}

fn pair(n: usize, mut w: Vec<Transformation>) -> ProbeOutcome {
    match w.len() {
        0 => ProbeOutcome::RankIsTwo(Transformation::identity(n), Transformation::identity(n)),
        1 => ProbeOutcome::RankIsTwo(Transformation::identity(n), w.pop().unwrap()),
        _ => {
            let b = w.pop().unwrap();
            ProbeOutcome::RankIsTwo(w.pop().unwrap(), b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_blocks() {
        match conjecture_probe(2, 2, 1_000_000, 7).unwrap() {
            ProbeOutcome::RankIsTwo(a, _) => assert!(a.is_identity()),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            conjecture_probe(3, 3, 1_000_000, 7).unwrap(),
            ProbeOutcome::NoPairFound
        );
    }
}
