//! Counting the `Σ_n` members of one kernel class of `T_n`.

use crate::error::{Error, Result};
use crate::family::{self, FamilySpec, FamilyTag};
use crate::perm::{KernelPartition, Transformation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RClassReport {
    pub kernel: KernelPartition,
    /// Maps in `T_n` with exactly this kernel.
    pub class_size: u64,
    /// How many of them lie in `Σ_n`.
    pub members_in_family: u64,
}

impl RClassReport {
    pub fn is_half(&self) -> bool {
        2 * self.members_in_family == self.class_size
    }
}

/// Enumerates every map with kernel `kernel` (one injection of the blocks
/// into `[n]` each) and counts those in `Σ_n`.
///
/// The kernel must have a single non-singleton block `{x, y}` with `x + y`
/// odd.
pub fn r_class_half_check(kernel: &KernelPartition) -> Result<RClassReport> {
    let n = kernel.degree();
    let big: Vec<&Vec<usize>> = kernel.nontrivial_blocks().collect();
    match big.as_slice() {
        [b] if b.len() == 2 && (b[0] + b[1]) % 2 == 1 => {}
        _ => {
            return Err(Error::BadKernel(format!(
                "{kernel} needs exactly one 2-block with odd sum"
            )))
        }
    }
    let sigma = FamilySpec::new(FamilyTag::Sigma, n)?;
    let blocks = kernel.blocks();
    let mut img = vec![0usize; n];
    let mut used = vec![false; n + 1];
    let mut class_size = 0u64;
    let mut members = 0u64;
    let mut stack_err = None;
    assign(
        blocks,
        0,
        &mut img,
        &mut used,
        &mut |img: &[usize]| {
            class_size += 1;
            match Transformation::new(img.iter().copied())
                .and_then(|a| family::contains(&sigma, &a))
            {
                Ok(true) => members += 1,
                Ok(false) => {}
                Err(e) => stack_err = Some(e),
            }
        },
    );
    if let Some(e) = stack_err {
        return Err(e);
    }
    Ok(RClassReport {
        kernel: kernel.clone(),
        class_size,
        members_in_family: members,
    })
}

fn assign(
    blocks: &[Vec<usize>],
    k: usize,
    img: &mut [usize],
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if k == blocks.len() {
        visit(img);
        return;
    }
    let n = img.len();
    for v in 1..=n {
        if used[v] {
            continue;
        }
        used[v] = true;
        for &p in &blocks[k] {
            img[p - 1] = v;
        }
        assign(blocks, k + 1, img, used, visit);
        used[v] = false;
    }
}

/// Every kernel of degree `n` with one 2-block of odd sum.
pub fn odd_pair_kernels(n: usize) -> Vec<KernelPartition> {
    let mut out = Vec::new();
    for x in 1..=n {
        for y in (x + 1..=n).step_by(2) {
            let mut blocks = vec![vec![x, y]];
            blocks.extend((1..=n).filter(|&p| p != x && p != y).map(|p| vec![p]));
            out.push(KernelPartition::new(n, blocks).expect("valid partition"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_at_four() {
        let k = KernelPartition::new(4, vec![vec![1, 2], vec![3], vec![4]]).unwrap();
        let r = r_class_half_check(&k).unwrap();
        assert_eq!((r.class_size, r.members_in_family), (24, 12));
        let bad = KernelPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        assert!(matches!(r_class_half_check(&bad), Err(Error::BadKernel(_))));
        assert_eq!(odd_pair_kernels(4).len(), 4);
    }
}
