//! Orbits of the even group on the kernels of rank `n-2` maps that are
//! parity-monochromatic.
//!
//! Every such kernel has either two 2-blocks or one 3-block, each block
//! inside a single parity class. A permutation `σ` sends the kernel of `α`
//! to the kernel of `σα`, whose blocks are the `σ`-preimages of the blocks
//! of `α`. Each orbit needs its own generator beyond those of `Δ_n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::named::{generating_set, GeneratingFamily, GeneratingSetSpec};
use crate::perm::{KernelPartition, Transformation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub n: usize,
    pub orbit_count: usize,
    /// Least kernel of each orbit, in increasing order.
    pub representatives: Vec<KernelPartition>,
    /// Number of kernels in each orbit, aligned with `representatives`.
    pub orbit_sizes: Vec<usize>,
}

fn same_parity_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for parity in [1, 0] {
        let pts: Vec<usize> = (1..=n).filter(|p| p % 2 == parity).collect();
        let mut idx: Vec<usize> = (0..size).collect();
        if pts.len() < size {
            continue;
        }
        loop {
            out.push(idx.iter().map(|&i| pts[i]).collect());
            let mut i = size;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if idx[i] < pts.len() - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    out
}

fn with_singletons(n: usize, big: Vec<Vec<usize>>) -> KernelPartition {
    let used: BTreeSet<usize> = big.iter().flatten().copied().collect();
    let mut blocks = big;
    blocks.extend((1..=n).filter(|p| !used.contains(p)).map(|p| vec![p]));
    KernelPartition::new(n, blocks).expect("blocks partition [n]")
}

/// All parity-monochromatic kernels with `n-2` blocks.
pub fn admissible_kernels(n: usize) -> Vec<KernelPartition> {
    let mut out = BTreeSet::new();
    for b in same_parity_subsets(n, 3) {
        out.insert(with_singletons(n, vec![b]));
    }
    let pairs = same_parity_subsets(n, 2);
    for (i, p) in pairs.iter().enumerate() {
        for q in &pairs[i + 1..] {
            if p.iter().all(|x| !q.contains(x)) {
                out.insert(with_singletons(n, vec![p.clone(), q.clone()]));
            }
        }
    }
    out.into_iter().collect()
}

/// Orbits of the admissible kernels under the permutations generated by
/// `gens`.
pub fn kernel_orbits(n: usize, gens: &[Transformation]) -> Result<OrbitReport> {
    let kernels = admissible_kernels(n);
    let mut remaining: BTreeSet<KernelPartition> = kernels.into_iter().collect();
    let mut representatives = Vec::new();
    let mut orbit_sizes = Vec::new();
    while let Some(start) = remaining.pop_first() {
        let mut stack = vec![start.clone()];
        let mut size = 1;
        while let Some(k) = stack.pop() {
            for g in gens {
                let image = k.pull_back(g)?;
                if remaining.remove(&image) {
                    size += 1;
                    stack.push(image);
                }
            }
        }
        representatives.push(start);
        orbit_sizes.push(size);
    }
    Ok(OrbitReport {
        n,
        orbit_count: representatives.len(),
        representatives,
        orbit_sizes,
    })
}

/// Orbit count of the admissible kernels under the even group `Γ_n`.
pub fn kernel_orbit_count(n: usize) -> Result<OrbitReport> {
    if n < 4 {
        return Err(Error::OutOfRange {
            id: "orbits".into(),
            constraint: "n >= 4",
            got: format!("n = {n}"),
        });
    }
    let gens = generating_set(&GeneratingSetSpec::new(GeneratingFamily::GammaGroup, n))?;
    kernel_orbits(n, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4_has_one_orbit() {
        let r = kernel_orbit_count(4).unwrap();
        assert_eq!(r.orbit_count, 1);
        assert_eq!(r.representatives[0].to_string(), "{{1,3},{2,4}}");
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (4..=8)
            .map(|n| kernel_orbit_count(n).unwrap().orbit_count)
            .collect();
        assert_eq!(counts, vec![1, 2, 2, 4, 3]);
    }
}
