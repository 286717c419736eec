//! Monoid closure by layered right multiplication.
//!
//! Elements are packed into `u64` keys (4 bits per point, point 1 in the top
//! nibble), so degrees up to 16 are supported and numeric key order is the
//! lexicographic order on image tuples.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::perm::{pack, unpack, Transformation};

/// Default cap on the number of elements a single closure may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000_000;

/// Largest degree the packed encoding can hold.
pub const MAX_CLOSURE_DEGREE: usize = 16;

const NO_PARENT: u32 = u32::MAX;
const PAR_THRESHOLD: usize = 2048;

#[inline]
fn nib(key: u64, i: usize) -> usize {
    ((key >> (60 - 4 * i)) & 0xF) as usize
}

/// Product `a·b` of packed keys, `b` given as a 0-based image table.
#[inline]
fn mul_key(a: u64, b: &[u8], n: usize) -> u64 {
    let mut out = 0u64;
    for i in 0..n {
        out |= (b[nib(a, i)] as u64) << (60 - 4 * i);
    }
    out
}

/// A finite monoid of transformations in lexicographic order, with one
/// shortest word per element over the generators it was built from.
#[derive(Debug, Clone)]
pub struct EnumeratedMonoid {
    n: usize,
    gens: Vec<Transformation>,
    keys: Vec<u64>,
    /// sorted index of the element this one was reached from
    parent: Vec<u32>,
    /// generator applied to the parent
    last_gen: Vec<u32>,
}

fn identity_key(n: usize) -> u64 {
    pack(&(0..n as u8).collect::<Vec<u8>>())
}

fn check_gens(gens: &[Transformation], n: usize) -> Result<()> {
    if n == 0 || n > MAX_CLOSURE_DEGREE {
        return Err(Error::BadDegree(n));
    }
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    Ok(())
}

/// The submonoid of `T_n` generated by `gens`.
///
/// Fails with [`Error::BudgetExceeded`] once more than `cap` elements have
/// been found. The element set and its order do not depend on the number of
/// worker threads; neither do the words.
pub fn closure(gens: &[Transformation], n: usize, cap: usize) -> Result<EnumeratedMonoid> {
    check_gens(gens, n)?;
    let tables: Vec<Vec<u8>> = gens.iter().map(|g| g.raw().to_vec()).collect();
    let id = identity_key(n);

    let mut order: Vec<u64> = vec![id];
    let mut parent: Vec<u32> = vec![NO_PARENT];
    let mut last_gen: Vec<u32> = vec![0];
    let mut index: FxHashMap<u64, u32> = FxHashMap::default();
    index.insert(id, 0);

    let mut lo = 0usize;
    while lo < order.len() {
        let hi = order.len();
        let expand = |i: usize| -> Vec<(u32, u32, u64)> {
            let a = order[i];
            let mut out = Vec::new();
            for (g, t) in tables.iter().enumerate() {
                let p = mul_key(a, t, n);
                if !index.contains_key(&p) {
                    out.push((i as u32, g as u32, p));
                }
            }
            out
        };
        let found: Vec<(u32, u32, u64)> = if hi - lo >= PAR_THRESHOLD {
            (lo..hi)
                .into_par_iter()
                .with_min_len(256)
                .flat_map_iter(expand)
                .collect()
        } else {
            (lo..hi).flat_map(expand).collect()
        };
        for (from, g, p) in found {
            if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(p) {
                slot.insert(order.len() as u32);
                order.push(p);
                parent.push(from);
                last_gen.push(g);
                if order.len() > cap {
                    return Err(Error::BudgetExceeded {
                        reached: order.len() as u64,
                        cap: cap as u64,
                    });
                }
            }
        }
        lo = hi;
    }
    drop(index);
    Ok(EnumeratedMonoid::from_bfs(n, gens.to_vec(), order, parent, last_gen))
}

/// Size of `⟨gens⟩`, or `None` as soon as it exceeds `limit`.
///
/// Cheap variant used in searches; no words are kept.
pub fn bounded_size(gens: &[Transformation], n: usize, limit: usize) -> Result<Option<usize>> {
    check_gens(gens, n)?;
    let tables: Vec<Vec<u8>> = gens.iter().map(|g| g.raw().to_vec()).collect();
    let id = identity_key(n);
    let mut seen: rustc_hash::FxHashSet<u64> = rustc_hash::FxHashSet::default();
    seen.insert(id);
    let mut stack = vec![id];
    while let Some(a) = stack.pop() {
        for t in &tables {
            let p = mul_key(a, t, n);
            if seen.insert(p) {
                if seen.len() > limit {
                    return Ok(None);
                }
                stack.push(p);
            }
        }
    }
    Ok(Some(seen.len()))
}

impl EnumeratedMonoid {
    fn from_bfs(
        n: usize,
        gens: Vec<Transformation>,
        order: Vec<u64>,
        parent: Vec<u32>,
        last_gen: Vec<u32>,
    ) -> Self {
        let mut perm: Vec<u32> = (0..order.len() as u32).collect();
        perm.par_sort_unstable_by_key(|&i| order[i as usize]);
        let mut rank_of = vec![0u32; order.len()];
        for (sorted, &bfs) in perm.iter().enumerate() {
            rank_of[bfs as usize] = sorted as u32;
        }
        let keys: Vec<u64> = perm.iter().map(|&b| order[b as usize]).collect();
        let parent: Vec<u32> = perm
            .iter()
            .map(|&b| match parent[b as usize] {
                NO_PARENT => NO_PARENT,
                p => rank_of[p as usize],
            })
            .collect();
        let last_gen: Vec<u32> = perm.iter().map(|&b| last_gen[b as usize]).collect();
        EnumeratedMonoid {
            n,
            gens,
            keys,
            parent,
            last_gen,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    /// Always false: the identity is a member.
    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn gens(&self) -> &[Transformation] {
        &self.gens
    }

    /// Packed elements in increasing order.
    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn get(&self, i: usize) -> Transformation {
        Transformation::from_raw(unpack(self.keys[i], self.n))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Transformation> + '_ {
        self.keys
            .iter()
            .map(move |&k| Transformation::from_raw(unpack(k, self.n)))
    }

    pub fn index_of(&self, a: &Transformation) -> Option<usize> {
        if a.degree() != self.n {
            return None;
        }
        self.index_of_key(pack(a.raw()))
    }

    pub fn index_of_key(&self, key: u64) -> Option<usize> {
        self.keys.binary_search(&key).ok()
    }

    pub fn contains(&self, a: &Transformation) -> bool {
        self.index_of(a).is_some()
    }

    pub fn identity_index(&self) -> usize {
        self.index_of_key(identity_key(self.n))
            .expect("closure always holds the identity")
    }

    /// Generator indices whose left-to-right product is element `i`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = i;
        while self.parent[cur] != NO_PARENT {
            out.push(self.last_gen[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        out.reverse();
        out
    }

    pub fn eval_word(&self, word: &[usize]) -> Transformation {
        let mut acc = Transformation::identity(self.n);
        for &g in word {
            acc = acc.compose_unchecked(&self.gens[g]);
        }
        acc
    }

    /// A word over the generators evaluating to `a`.
    pub fn factor_word(&self, a: &Transformation) -> Result<Vec<usize>> {
        match self.index_of(a) {
            Some(i) => Ok(self.word(i)),
            None => Err(Error::NotAMember(a.to_string())),
        }
    }

    /// Product of members `i` and `j` as a member index.
    pub fn mul_index(&self, i: usize, j: usize) -> Option<usize> {
        let b = unpack(self.keys[j], self.n);
        self.index_of_key(mul_key(self.keys[i], &b, self.n))
    }

    /// The permutations in the monoid, in order.
    pub fn units(&self) -> Vec<Transformation> {
        self.iter().filter(|a| a.is_permutation()).collect()
    }

    /// Checks closure under products: exhaustively when `len() <= exhaustive_up_to`,
    /// otherwise on `samples` pseudo-random pairs.
    pub fn check_closed(&self, exhaustive_up_to: usize, samples: usize, seed: u64) -> bool {
        let n = self.n;
        let len = self.len();
        let tables: Vec<Vec<u8>> = self.keys.iter().map(|&k| unpack(k, n)).collect();
        if len <= exhaustive_up_to {
            return (0..len).into_par_iter().all(|i| {
                tables
                    .iter()
                    .all(|t| self.index_of_key(mul_key(self.keys[i], t, n)).is_some())
            });
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..samples).all(|_| {
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(0..len);
            self.index_of_key(mul_key(self.keys[i], &tables[j], n)).is_some()
        })
    }
}
