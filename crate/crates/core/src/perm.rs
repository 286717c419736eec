//! Full transformations and partial permutations of `[n] = {1, ..., n}`.
//!
//! All external syntax is 1-based. Internally a [`Transformation`] stores
//! 0-based images as bytes, which caps the degree at [`MAX_DEGREE`].
//!
//! Maps act on the right and compose left to right: for `a.compose(&b)` the
//! point `x` is sent to `(x·a)·b`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 255;

/// Below this many points the naive pair count beats merge counting.
pub const MERGE_COUNT_THRESHOLD: usize = 24;

/// Parity of an inversion count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: u64) -> Self {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    /// Parity of a sum of two counts.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Counts pairs `i < j` with `seq[i] > seq[j]` by direct comparison.
pub fn inversions_naive<T: Ord>(seq: &[T]) -> u64 {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// Counts inversions with a bottom-up merge sort, `O(k log k)`.
pub fn inversions_merge<T: Ord + Copy>(seq: &[T]) -> u64 {
    let mut buf: Vec<T> = seq.to_vec();
    let mut scratch: Vec<T> = seq.to_vec();
    let len = buf.len();
    let mut count = 0u64;
    let mut width = 1;
    while width < len {
        let mut start = 0;
        while start < len {
            let mid = (start + width).min(len);
            let end = (start + 2 * width).min(len);
            let (mut i, mut j, mut k) = (start, mid, start);
            while i < mid && j < end {
                if buf[j] < buf[i] {
                    // every remaining element of the left run exceeds buf[j]
                    count += (mid - i) as u64;
                    scratch[k] = buf[j];
                    j += 1;
                } else {
                    scratch[k] = buf[i];
                    i += 1;
                }
                k += 1;
            }
            scratch[k..k + (mid - i)].copy_from_slice(&buf[i..mid]);
            k += mid - i;
            scratch[k..k + (end - j)].copy_from_slice(&buf[j..end]);
            start = end;
        }
        std::mem::swap(&mut buf, &mut scratch);
        width *= 2;
    }
    count
}

/// Inversion count, choosing the algorithm by length.
pub fn inversions_of<T: Ord + Copy>(seq: &[T]) -> u64 {
    if seq.len() <= MERGE_COUNT_THRESHOLD {
        inversions_naive(seq)
    } else {
        inversions_merge(seq)
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        Err(Error::BadDegree(n))
    } else {
        Ok(())
    }
}

/// A total map `[n] -> [n]`, stored as its image tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    img: Box<[u8]>,
}

impl Transformation {
    /// Builds a transformation from its 1-based image tuple.
    pub fn new<I: IntoIterator<Item = usize>>(images: I) -> Result<Self> {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        check_degree(n)?;
        let mut img = Vec::with_capacity(n);
        for &p in &images {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
            img.push((p - 1) as u8);
        }
        Ok(Transformation {
            img: img.into_boxed_slice(),
        })
    }

    /// Wraps 0-based images without validation.
    pub(crate) fn from_raw(img: Vec<u8>) -> Self {
        debug_assert!(img.iter().all(|&p| (p as usize) < img.len()));
        Transformation {
            img: img.into_boxed_slice(),
        }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    pub fn identity(n: usize) -> Self {
        Transformation::from_raw((0..n as u8).collect())
    }

    /// The constant map with value `c`.
    pub fn constant(n: usize, c: usize) -> Result<Self> {
        Transformation::new(std::iter::repeat(c).take(n))
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `x`.
    ///
    /// Panics if `x` is outside `[n]`.
    pub fn apply(&self, x: usize) -> usize {
        self.img[x - 1] as usize + 1
    }

    /// The 1-based image tuple.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.iter().map(|&p| p as usize + 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    /// `x` goes to `(x·self)·other`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Transformation) -> Transformation {
        Transformation::from_raw(self.img.iter().map(|&p| other.img[p as usize]).collect())
    }

    /// Number of distinct images.
    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut rank = 0;
        for &p in self.img.iter() {
            if !seen[p as usize] {
                seen[p as usize] = true;
                rank += 1;
            }
        }
        rank
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Sorted 1-based image set.
    pub fn image_set(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &p in self.img.iter() {
            seen[p as usize] = true;
        }
        (0..self.degree()).filter(|&i| seen[i]).map(|i| i + 1).collect()
    }

    /// Points of `[n]` outside the image, ascending.
    pub fn missing_points(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &p in self.img.iter() {
            seen[p as usize] = true;
        }
        (0..self.degree()).filter(|&i| !seen[i]).map(|i| i + 1).collect()
    }

    /// Preimage of the 1-based point `y`, ascending.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        self.images()
            .enumerate()
            .filter(|&(_, p)| p == y)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn kernel(&self) -> KernelPartition {
        KernelPartition::of(self)
    }

    pub fn inverse(&self) -> Result<Transformation> {
        if !self.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        let mut inv = vec![0u8; self.degree()];
        for (i, &p) in self.img.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Ok(Transformation::from_raw(inv))
    }

    /// `self^k`; negative exponents require a permutation.
    pub fn pow(&self, k: i64) -> Result<Transformation> {
        let base = if k < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = Transformation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&sq);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Cycle lengths of a permutation, including fixed points.
    fn cycle_lengths(&self) -> Result<Vec<usize>> {
        if !self.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.img[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Ok(lengths)
    }

    /// Least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> Result<u64> {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        Ok(self
            .cycle_lengths()?
            .into_iter()
            .fold(1u64, |acc, l| acc / gcd(acc, l as u64) * l as u64))
    }

    /// Sign of a permutation, from its cycle type.
    pub fn sign(&self) -> Result<Parity> {
        let lengths = self.cycle_lengths()?;
        let transpositions: usize = lengths.iter().map(|l| l - 1).sum();
        Ok(Parity::of(transpositions as u64))
    }

    /// Inversions of the whole image tuple (the permutation case of inversion
    /// counting; for non-injective maps pairs with equal images do not count).
    pub fn inversions(&self) -> u64 {
        inversions_of(&self.img)
    }

    /// The restriction to `subset` (1-based points, any order).
    pub fn restrict(&self, subset: &[usize]) -> Result<PartialPerm> {
        let n = self.degree();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        let mut pairs = Vec::with_capacity(subset.len());
        for &x in subset {
            if x == 0 || x > n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            let y = self.apply(x);
            if let Some(prev) = owner[y - 1] {
                if prev == x {
                    return Err(Error::DuplicatePoint(x));
                }
                return Err(Error::NonInjectiveRestriction(prev.min(x), prev.max(x)));
            }
            owner[y - 1] = Some(x);
            pairs.push((x, y));
        }
        PartialPerm::new(n, pairs)
    }

    /// Parity of the restriction to `[n] \ {a}`, or `None` when that
    /// restriction is not injective.
    pub fn parity_without(&self, a: usize) -> Option<Parity> {
        let rest: Vec<u8> = self
            .img
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != a)
            .map(|(_, &p)| p)
            .collect();
        let mut seen = vec![false; self.degree()];
        for &p in &rest {
            if seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        Some(Parity::of(inversions_of(&rest)))
    }

    /// Packs the images into 4-bit nibbles, point 1 in the top nibble, so that
    /// numeric order agrees with lexicographic order. Degree at most 16.
    pub fn to_key(&self) -> Option<u64> {
        if self.degree() > 16 {
            return None;
        }
        Some(pack(&self.img))
    }

    pub fn from_key(key: u64, n: usize) -> Transformation {
        Transformation::from_raw(unpack(key, n))
    }
}

pub(crate) fn pack(img: &[u8]) -> u64 {
    img.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &p)| acc | ((p as u64) << (60 - 4 * i)))
}

pub(crate) fn unpack(key: u64, n: usize) -> Vec<u8> {
    (0..n).map(|i| ((key >> (60 - 4 * i)) & 0xF) as u8).collect()
}

impl std::ops::Mul for &Transformation {
    type Output = Transformation;

    /// Left-to-right product. Panics on a degree mismatch.
    fn mul(self, rhs: &Transformation) -> Transformation {
        self.compose(rhs).expect("degree mismatch in product")
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.images().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An injective partial map on `[n]`, pairs kept sorted by point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialPerm {
    n: usize,
    pairs: Vec<(u8, u8)>,
}

impl PartialPerm {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        check_degree(n)?;
        let mut dom_seen = vec![false; n];
        let mut im_seen = vec![false; n];
        let mut out = Vec::new();
        for (x, y) in pairs {
            for p in [x, y] {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
            }
            if dom_seen[x - 1] {
                return Err(Error::DuplicatePoint(x));
            }
            if im_seen[y - 1] {
                return Err(Error::NotInjective(y));
            }
            dom_seen[x - 1] = true;
            im_seen[y - 1] = true;
            out.push(((x - 1) as u8, (y - 1) as u8));
        }
        out.sort_unstable();
        Ok(PartialPerm { n, pairs: out })
    }

    pub fn identity_on(n: usize, points: &[usize]) -> Result<Self> {
        PartialPerm::new(n, points.iter().map(|&x| (x, x)))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs
            .iter()
            .map(|&(x, y)| (x as usize + 1, y as usize + 1))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(x, _)| x as usize + 1).collect()
    }

    /// Image set, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.pairs.iter().map(|&(_, y)| y as usize + 1).collect();
        im.sort_unstable();
        im
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs
            .iter()
            .find(|&&(p, _)| p as usize + 1 == x)
            .map(|&(_, y)| y as usize + 1)
    }

    /// Number of domain pairs `a < b` with `a·p > b·p`.
    pub fn inversions(&self) -> u64 {
        let images: Vec<u8> = self.pairs.iter().map(|&(_, y)| y).collect();
        inversions_of(&images)
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.inversions())
    }

    /// `self` followed by `next`, defined only when `Dom(next) = Im(self)`.
    pub fn compose_chained(&self, next: &PartialPerm) -> Result<PartialPerm> {
        if self.n != next.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: next.n,
            });
        }
        if self.image() != next.domain() {
            return Err(Error::ChainMismatch);
        }
        let mut lookup = vec![0u8; self.n];
        for &(x, y) in &next.pairs {
            lookup[x as usize] = y;
        }
        let pairs = self
            .pairs
            .iter()
            .map(|&(x, y)| (x as usize + 1, lookup[y as usize] as usize + 1));
        PartialPerm::new(self.n, pairs)
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}:{y}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A partition of `[n]`; blocks are sorted and ordered by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl KernelPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        check_degree(n)?;
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
                if seen[x - 1] {
                    return Err(Error::BadPartition(format!("point {x} in two blocks")));
                }
                seen[x - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::BadPartition(format!("point {} not covered", missing + 1)));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(KernelPartition { n, blocks })
    }

    /// The fibers of `a`.
    pub fn of(a: &Transformation) -> Self {
        let n = a.degree();
        let mut by_image: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, p) in a.images().enumerate() {
            by_image[p - 1].push(i + 1);
        }
        let mut blocks: Vec<Vec<usize>> = by_image.into_iter().filter(|b| !b.is_empty()).collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        KernelPartition { n, blocks }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, i.e. the rank of any map with this kernel.
    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    /// Kernel of `sigma · a` when `self` is the kernel of `a`: each block `B`
    /// becomes `{x : x·sigma ∈ B}`.
    pub fn pull_back(&self, sigma: &Transformation) -> Result<KernelPartition> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: sigma.degree(),
            });
        }
        let inv = sigma.inverse()?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| inv.apply(x)).collect())
            .collect();
        KernelPartition::new(self.n, blocks)
    }
}

impl fmt::Display for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Disjoint cycle notation. Points not listed are fixed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycleExpr {
    cycles: Vec<Vec<usize>>,
}

impl CycleExpr {
    /// Cycles of length one are dropped.
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut kept = Vec::new();
        for cycle in cycles {
            for &x in &cycle {
                if x == 0 {
                    return Err(Error::PointOutOfRange { point: 0, degree: 0 });
                }
                if !seen.insert(x) {
                    return Err(Error::OverlappingCycles(x));
                }
            }
            if cycle.len() >= 2 {
                kept.push(cycle);
            }
        }
        Ok(CycleExpr { cycles: kept })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn eval(&self, n: usize) -> Result<Transformation> {
        check_degree(n)?;
        let mut img: Vec<u8> = (0..n as u8).collect();
        for cycle in &self.cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x > n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
                let next = cycle[(i + 1) % cycle.len()];
                img[x - 1] = (next - 1) as u8;
            }
        }
        Ok(Transformation::from_raw(img))
    }

    /// Canonical decomposition: each cycle starts at its least point, cycles
    /// ordered by that point.
    pub fn from_permutation(p: &Transformation) -> Result<CycleExpr> {
        if !p.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        let n = p.degree();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = p.apply(x);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        Ok(CycleExpr { cycles })
    }
}

impl fmt::Display for CycleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(t(&[2, 3, 1]).compose(&t(&[2, 3, 1])).unwrap(), t(&[3, 1, 2]));
        // pointwise: 1->1->2, 2->1->2, 3->3->4, 4->4->1
        let eps = t(&[1, 1, 3, 4]);
        let sigma = t(&[2, 3, 4, 1]);
        assert_eq!(eps.compose(&sigma).unwrap(), t(&[2, 2, 4, 1]));
        assert_eq!(
            Transformation::identity(4).compose(&eps).unwrap(),
            eps.clone()
        );
        assert!(matches!(
            eps.compose(&Transformation::identity(3)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn restrict_examples() {
        let eps = t(&[1, 1, 3, 4]);
        let r = eps.restrict(&[2, 3, 4]).unwrap();
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(2, 1), (3, 3), (4, 4)]);
        let id = Transformation::identity(5).restrict(&[1, 3, 5]).unwrap();
        assert_eq!(id, PartialPerm::identity_on(5, &[1, 3, 5]).unwrap());
        assert_eq!(
            eps.restrict(&[1, 2, 3]),
            Err(Error::NonInjectiveRestriction(1, 2))
        );
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(PartialPerm::identity_on(6, &[1, 2, 5]).unwrap().inversions(), 0);
        let rho = t(&[4, 3, 2, 1]).restrict(&[1, 2, 3, 4]).unwrap();
        assert_eq!(rho.inversions(), 6);
        assert_eq!(rho.parity(), Parity::Even);
        let p = PartialPerm::new(4, [(1, 3), (2, 1), (4, 2)]).unwrap();
        // pairs (1,2): 3>1 yes, (1,4): 3>2 yes, (2,4): 1<2 no
        assert_eq!(p.inversions(), 2);
        assert_eq!(p.parity(), Parity::Even);
    }

    #[test]
    fn merge_count_matches_naive_on_long_sequences() {
        let seq: Vec<u8> = (0..200u32).map(|i| ((i * 73 + 11) % 251) as u8).collect();
        assert_eq!(inversions_merge(&seq), inversions_naive(&seq));
        let rev: Vec<u8> = (0..100u8).rev().collect();
        assert_eq!(inversions_merge(&rev), 4950);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Transformation::identity(3).kernel().rank(), 3);
        assert_eq!(t(&[1, 2, 1, 2]).kernel().to_string(), "{{1,3},{2,4}}");
        assert_eq!(t(&[1, 1, 1, 1]).kernel().blocks(), &[vec![1, 2, 3, 4]]);
    }

    #[test]
    fn order_examples() {
        assert_eq!(t(&[2, 3, 4, 5, 6, 1]).order().unwrap(), 6);
        assert_eq!(t(&[3, 4, 1, 2]).order().unwrap(), 2);
        assert_eq!(t(&[2, 3, 4, 5, 1]).order().unwrap(), 5);
        assert_eq!(t(&[1, 1, 2]).order(), Err(Error::NotAPermutation));
    }

    #[test]
    fn cycle_examples() {
        let c = CycleExpr::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(c.eval(4).unwrap(), t(&[2, 1, 3, 4]));
        let c = CycleExpr::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(c.eval(4).unwrap(), t(&[3, 4, 1, 2]));
        assert_eq!(CycleExpr::default().eval(3).unwrap(), Transformation::identity(3));
        assert_eq!(
            CycleExpr::new(vec![vec![1, 2], vec![2, 3]]),
            Err(Error::OverlappingCycles(2))
        );
        assert!(matches!(
            CycleExpr::new(vec![vec![1, 5]]).unwrap().eval(4),
            Err(Error::PointOutOfRange { point: 5, .. })
        ));
    }

    #[test]
    fn chained_composition_requires_matching_domain() {
        let p = PartialPerm::new(5, [(1, 2), (3, 4)]).unwrap();
        let q = PartialPerm::new(5, [(2, 5), (4, 1)]).unwrap();
        assert_eq!(
            p.compose_chained(&q).unwrap().pairs().collect::<Vec<_>>(),
            vec![(1, 5), (3, 1)]
        );
        let r = PartialPerm::new(5, [(2, 5)]).unwrap();
        assert_eq!(p.compose_chained(&r), Err(Error::ChainMismatch));
    }

    #[test]
    fn key_round_trip_preserves_order() {
        let a = t(&[1, 2, 3, 4, 4]);
        let b = t(&[1, 2, 4, 1, 1]);
        assert!(a < b);
        assert!(a.to_key().unwrap() < b.to_key().unwrap());
        assert_eq!(Transformation::from_key(b.to_key().unwrap(), 5), b);
    }

    #[test]
    fn pull_back_gives_kernel_of_product() {
        let a = t(&[1, 2, 1, 2, 3]);
        let sigma = t(&[3, 1, 2, 5, 4]);
        assert_eq!(a.kernel().pull_back(&sigma).unwrap(), (&sigma * &a).kernel());
    }
}
