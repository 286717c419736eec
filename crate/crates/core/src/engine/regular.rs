//! Regularity: for `a` in `M`, find `b` in `M` with `a·b·a = a`.

use rayon::prelude::*;

use super::closure::EnumeratedMonoid;
use crate::error::{Error, Result};
use crate::perm::Transformation;

/// An inverse-like partner of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularWitness {
    pub witness: Transformation,
    /// Found by the kernel-transversal construction rather than a scan.
    pub constructive: bool,
}

fn is_partner(a: &Transformation, b: &Transformation) -> bool {
    &(a * b) * a == *a
}

/// Candidates built from a transversal of the kernel: each image point goes
/// back to a preimage, the remaining points are placed so that the result
/// glues two points of opposite parity whenever possible.
fn constructive_candidates(a: &Transformation) -> Vec<Transformation> {
    let n = a.degree();
    if let Ok(inv) = a.inverse() {
        return vec![inv];
    }
    let img = a.to_vec();
    let image = a.image_set();
    let missing = a.missing_points();
    let back = |y: usize| a.fiber(y)[0];
    let mut out = Vec::new();
    if a.rank() + 2 <= n {
        // all missing points follow one image point x0 whose parity differs
        // from some missing point
        let x0 = image
            .iter()
            .copied()
            .find(|&x| missing.iter().any(|&y| (x + y) % 2 == 1))
            .unwrap_or(image[0]);
        let target = back(x0);
        let b: Vec<usize> = (1..=n)
            .map(|p| if image.contains(&p) { back(p) } else { target })
            .collect();
        out.push(Transformation::new(b).expect("points in range"));
        return out;
    }
    // rank n-1: one missing point m; the kernel pair {x, y} has image v
    let m = missing[0];
    let v = img[(1..=n).find(|&p| a.fiber(img[p - 1]).len() == 2).unwrap() - 1];
    let pair = a.fiber(v);
    let neighbours: Vec<usize> = [m.wrapping_sub(1), m + 1]
        .into_iter()
        .filter(|&q| (1..=n).contains(&q) && q != m)
        .collect();
    for &choice in &pair {
        let base: Vec<usize> = (1..=n)
            .map(|p| if p == v { choice } else if p == m { 0 } else { back_or(a, p) })
            .collect();
        // the missing point copies a neighbour's value first, then anything
        let mut fills: Vec<usize> = neighbours.iter().map(|&q| base[q - 1]).collect();
        fills.extend(1..=n);
        for f in fills {
            let mut b = base.clone();
            b[m - 1] = f;
            let cand = Transformation::new(b).expect("points in range");
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

fn back_or(a: &Transformation, p: usize) -> usize {
    a.fiber(p).first().copied().unwrap_or(p)
}

/// A partner `b` in `m` with `a·b·a = a`, or `None` if `a` is not regular
/// in `m`.
pub fn is_regular(m: &EnumeratedMonoid, a: &Transformation) -> Result<Option<RegularWitness>> {
    if !m.contains(a) {
        return Err(Error::NotAMember(a.to_string()));
    }
    for cand in constructive_candidates(a) {
        if m.contains(&cand) && is_partner(a, &cand) {
            return Ok(Some(RegularWitness {
                witness: cand,
                constructive: true,
            }));
        }
    }
    let found = (0..m.len())
        .into_par_iter()
        .find_first(|&i| is_partner(a, &m.get(i)));
    Ok(found.map(|i| RegularWitness {
        witness: m.get(i),
        constructive: false,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::closure::closure;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn delta4_witnesses() {
        let m = closure(&[t(&[2, 3, 4, 1]), t(&[1, 1, 3, 4])], 4, 1000).unwrap();
        assert_eq!(m.len(), 128);
        let eps = t(&[1, 1, 3, 4]);
        let w = is_regular(&m, &eps).unwrap().unwrap();
        assert!(is_partner(&eps, &w.witness));
        let a = t(&[1, 1, 2, 3]);
        let w = is_regular(&m, &a).unwrap().unwrap();
        assert!(is_partner(&a, &w.witness));
        assert!(m.contains(&t(&[1, 3, 4, 4])));
        assert!(is_partner(&a, &t(&[1, 3, 4, 4])));
        for x in m.iter() {
            let w = is_regular(&m, &x).unwrap().unwrap();
            assert!(is_partner(&x, &w.witness));
        }
    }
}
