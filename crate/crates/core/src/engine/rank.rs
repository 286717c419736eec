//! Minimum generating-set size of an enumerated monoid.
//!
//! The permutations of a finite transformation monoid form its group of
//! units `G` and the rest is an ideal, so a generating set is a generating
//! set of `G` plus a set `A` of non-units with `⟨G ∪ A⟩ = M`. The two parts
//! are searched separately.
//!
//! For `G`, a generating tuple can be conjugated so its first entry is a
//! conjugacy-class representative. For `A`, each entry may be replaced by a
//! representative of its `G × G` double orbit, and in a minimal `A` sorted by
//! decreasing rank, each next entry has the highest rank still uncovered by
//! the closure of the entries before it. Both facts cut the search to a
//! handful of closures at the sizes of interest.

use rustc_hash::{FxHashMap, FxHashSet};

use super::closure::{bounded_size, closure, EnumeratedMonoid};
use crate::error::{Error, Result};
use crate::perm::Transformation;

/// Default cap on the number of closures a rank search may compute.
pub const DEFAULT_SUBSET_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankOutcome {
    /// The rank together with a generating set of that size.
    Exact {
        rank: usize,
        witness: Vec<Transformation>,
    },
    /// No generating set of size at most `max` exists.
    AboveMax { max: usize },
    /// The closure budget ran out before the question was settled.
    BudgetExhausted { closures: u64 },
}

pub(crate) struct Budget {
    pub(crate) used: u64,
    cap: u64,
}

impl Budget {
    pub(crate) fn new(cap: u64) -> Self {
        Budget { used: 0, cap }
    }

    pub(crate) fn spend(&mut self) -> std::result::Result<(), ()> {
        self.used += 1;
        if self.used > self.cap {
            Err(())
        } else {
            Ok(())
        }
    }
}

/// Rank of the group of units of `m`, searched up to `max`.
pub fn group_rank(m: &EnumeratedMonoid, max: usize, budget: u64) -> Result<RankOutcome> {
    let mut b = Budget { used: 0, cap: budget };
    let units = m.units();
    Ok(match search_group(&units, m.degree(), max, &mut b)? {
        Some(Some(w)) => RankOutcome::Exact {
            rank: w.len(),
            witness: w,
        },
        Some(None) => RankOutcome::AboveMax { max },
        None => RankOutcome::BudgetExhausted { closures: b.used },
    })
}

/// `Ok(None)` when the budget ran out, `Ok(Some(None))` when the rank
/// exceeds `max`.
pub(crate) fn search_group(
    group: &[Transformation],
    n: usize,
    max: usize,
    budget: &mut Budget,
) -> Result<Option<Option<Vec<Transformation>>>> {
    let size = group.len();
    if size <= 1 {
        return Ok(Some(Some(Vec::new())));
    }
    let orders: Vec<u64> = group.iter().map(|g| g.order()).collect::<Result<_>>()?;
    if max == 0 {
        return Ok(Some(None));
    }
    // cyclic: an element of full order
    if let Some(i) = orders.iter().position(|&o| o as usize == size) {
        return Ok(Some(Some(vec![group[i].clone()])));
    }
    let mut others: Vec<usize> = (0..size).filter(|&i| !group[i].is_identity()).collect();
    others.sort_by_key(|&i| std::cmp::Reverse(orders[i]));
    let reps = class_representatives(group, n, budget)?;
    let Some(mut reps) = reps else {
        return Ok(None);
    };
    reps.sort_by_key(|&i| std::cmp::Reverse(orders[i]));

    for k in 2..=max {
        for &first in &reps {
            let mut combo: Vec<usize> = (0..k - 1).collect();
            loop {
                let mut gens = vec![group[first].clone()];
                gens.extend(combo.iter().map(|&c| group[others[c]].clone()));
                if budget.spend().is_err() {
                    return Ok(None);
                }
                // a subgroup larger than half the group is the whole group
                if bounded_size(&gens, n, size / 2)?.is_none() {
                    return Ok(Some(Some(gens)));
                }
                if !next_combination(&mut combo, others.len()) {
                    break;
                }
            }
        }
    }
    Ok(Some(None))
}

fn next_combination(c: &mut [usize], len: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < len - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Indices of one element per conjugacy class of `group`.
fn class_representatives(
    group: &[Transformation],
    n: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let index: FxHashMap<&Transformation, usize> =
        group.iter().enumerate().map(|(i, g)| (g, i)).collect();
    // a small generating set, found greedily
    let mut gens: Vec<Transformation> = Vec::new();
    let mut current: FxHashSet<Transformation> = std::iter::once(Transformation::identity(n)).collect();
    for g in group {
        if !current.contains(g) {
            gens.push(g.clone());
            if budget.spend().is_err() {
                return Ok(None);
            }
            current = closure(&gens, n, group.len())?.iter().collect();
        }
    }
    let inverses: Vec<Transformation> = gens.iter().map(|s| s.inverse()).collect::<Result<_>>()?;
    let mut seen = vec![false; group.len()];
    let mut reps = Vec::new();
    for start in 0..group.len() {
        if seen[start] || group[start].is_identity() {
            continue;
        }
        reps.push(start);
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for (s, si) in gens.iter().zip(&inverses) {
                let c = &(si * &group[i]) * s;
                let j = index[&c];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    Ok(Some(reps))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

struct Orbit {
    rank: usize,
    rep: Transformation,
}

/// `G × G` double orbits on the non-units, ordered by decreasing rank and
/// then by least member.
fn double_orbits(m: &EnumeratedMonoid, group_gens: &[Transformation]) -> Vec<Orbit> {
    let len = m.len();
    let mut uf = UnionFind((0..len).collect());
    for i in 0..len {
        let a = m.get(i);
        if a.is_permutation() {
            continue;
        }
        for s in group_gens {
            for p in [s * &a, &a * s] {
                let j = m.index_of(&p).expect("monoid is closed");
                uf.union(i, j);
            }
        }
    }
    let mut orbits: Vec<Orbit> = Vec::new();
    for i in 0..len {
        if uf.find(i) == i {
            let a = m.get(i);
            if !a.is_permutation() {
                orbits.push(Orbit { rank: a.rank(), rep: a });
            }
        }
    }
    // roots are least members, so a stable sort by rank keeps them ordered
    orbits.sort_by_key(|o| std::cmp::Reverse(o.rank));
    orbits
}

enum Search {
    Found(Vec<usize>),
    NotFound,
    OutOfBudget,
}

fn relative_search(
    m: &EnumeratedMonoid,
    group_gens: &[Transformation],
    orbits: &[Orbit],
    chosen: &mut Vec<usize>,
    depth: usize,
    budget: &mut Budget,
) -> Result<Search> {
    let mut gens = group_gens.to_vec();
    gens.extend(chosen.iter().map(|&o| orbits[o].rep.clone()));
    if budget.spend().is_err() {
        return Ok(Search::OutOfBudget);
    }
    let sub = closure(&gens, m.degree(), m.len())?;
    let uncovered: Vec<usize> = (0..orbits.len())
        .filter(|&o| !sub.contains(&orbits[o].rep))
        .collect();
    let Some(&top) = uncovered.first() else {
        return Ok(Search::Found(chosen.clone()));
    };
    if depth == 0 {
        return Ok(Search::NotFound);
    }
    let r = orbits[top].rank;
    let floor = chosen.last().map_or(0, |&o| o + 1);
    for o in uncovered
        .into_iter()
        .filter(|&o| orbits[o].rank == r && o >= floor)
    {
        chosen.push(o);
        let res = relative_search(m, group_gens, orbits, chosen, depth - 1, budget)?;
        chosen.pop();
        match res {
            Search::NotFound => {}
            other => return Ok(other),
        }
    }
    Ok(Search::NotFound)
}

/// Least size of a generating set of `m`, if it is at most `max_size`.
pub fn exhaustive_rank(m: &EnumeratedMonoid, max_size: usize, budget: u64) -> Result<RankOutcome> {
    if m.degree() == 0 {
        return Err(Error::BadDegree(0));
    }
    let mut b = Budget { used: 0, cap: budget };
    let units = m.units();
    let group_gens = match search_group(&units, m.degree(), max_size, &mut b)? {
        None => return Ok(RankOutcome::BudgetExhausted { closures: b.used }),
        Some(None) => return Ok(RankOutcome::AboveMax { max: max_size }),
        Some(Some(g)) => g,
    };
    if units.len() == m.len() {
        return Ok(RankOutcome::Exact {
            rank: group_gens.len(),
            witness: group_gens,
        });
    }
    let orbits = double_orbits(m, &group_gens);
    let room = max_size - group_gens.len();
    for depth in 0..=room {
        let mut chosen = Vec::new();
        match relative_search(m, &group_gens, &orbits, &mut chosen, depth, &mut b)? {
            Search::Found(extra) => {
                let mut witness = group_gens.clone();
                witness.extend(extra.iter().map(|&o| orbits[o].rep.clone()));
                return Ok(RankOutcome::Exact {
                    rank: witness.len(),
                    witness,
                });
            }
            Search::NotFound => {}
            Search::OutOfBudget => return Ok(RankOutcome::BudgetExhausted { closures: b.used }),
        }
    }
    Ok(RankOutcome::AboveMax { max: max_size })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    fn rank_of(gens: &[Transformation], n: usize) -> usize {
        let m = closure(gens, n, 1_000_000).unwrap();
        match exhaustive_rank(&m, 6, DEFAULT_SUBSET_BUDGET).unwrap() {
            RankOutcome::Exact { rank, witness } => {
                assert_eq!(closure(&witness, n, 1_000_000).unwrap().keys(), m.keys());
                rank
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_of(&[t(&[2, 3, 4, 1])], 4), 1);
        assert_eq!(rank_of(&[t(&[2, 3, 4, 1]), t(&[1, 1, 3, 4])], 4), 2);
        assert_eq!(rank_of(&[], 3), 0);
        assert_eq!(
            rank_of(&[t(&[1, 2, 2]), t(&[1, 1, 3]), t(&[2, 3, 3])], 3),
            3
        );
        // S_4 = <(1,2), (1,2,3,4)>
        assert_eq!(rank_of(&[t(&[2, 1, 3, 4]), t(&[2, 3, 4, 1])], 4), 2);
        // T_3 has rank 3
        assert_eq!(
            rank_of(&[t(&[2, 1, 3]), t(&[2, 3, 1]), t(&[1, 1, 3])], 3),
            3
        );
    }

    #[test]
    fn above_max_is_reported() {
        let m = closure(&[t(&[2, 1, 3]), t(&[2, 3, 1]), t(&[1, 1, 3])], 3, 100).unwrap();
        assert_eq!(
            exhaustive_rank(&m, 2, DEFAULT_SUBSET_BUDGET).unwrap(),
            RankOutcome::AboveMax { max: 2 }
        );
    }
}
