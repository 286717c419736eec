//! Constructive factorization and normalization of singular even maps.

use crate::error::{Error, Result};
use crate::perm::{CycleExpr, Transformation};

fn cycles(n: usize, cs: Vec<Vec<usize>>) -> Transformation {
    CycleExpr::new(cs)
        .and_then(|c| c.eval(n))
        .expect("case tables only name valid disjoint cycles")
}

/// Points of one fiber with opposite parities, if any, as `(odd, even)`.
fn mixed_pair(a: &Transformation) -> Option<(usize, usize)> {
    let n = a.degree();
    for y in 1..=n {
        let fib = a.fiber(y);
        let odd = fib.iter().find(|&&p| p % 2 == 1);
        let even = fib.iter().find(|&&p| p % 2 == 0);
        if let (Some(&o), Some(&e)) = (odd, even) {
            return Some((o, e));
        }
    }
    None
}

/// Splits a map of rank at most `n-2` lying outside the parity-monochromatic
/// set as `a = a1·a2` with `rank(a1) = rank(a) + 1`, `rank(a2) = n - 2`,
/// neither factor parity-monochromatic.
pub fn lemma_delta1_factor(a: &Transformation) -> Result<(Transformation, Transformation)> {
    let n = a.degree();
    if n < 4 || a.rank() + 2 > n {
        return Err(Error::PreconditionViolated(format!(
            "{a} must have rank at most n - 2 with n >= 4"
        )));
    }
    let (x, y) = mixed_pair(a).ok_or_else(|| {
        Error::PreconditionViolated(format!("every fiber of {a} is parity-monochromatic"))
    })?;
    let img = a.to_vec();
    let u = (1..=n)
        .find(|&u| u != x && u != y && a.fiber(img[u - 1]).len() >= 2)
        .expect("rank <= n-2 leaves a second collapsed point");
    let missing = a.missing_points();
    let (b1, b2) = (missing[0], missing[1]);

    let mut first = img.clone();
    first[u - 1] = b1;
    let ua = img[u - 1];
    let mut second: Vec<usize> = (1..=n).collect();
    if b1 + 1 < b2 {
        second[b1 - 1] = ua;
        second[b2 - 1] = b2 - 1;
    } else {
        second[b1 - 1] = ua;
        second[b2 - 1] = ua;
    }
    Ok((Transformation::new(first)?, Transformation::new(second)?))
}

/// Finds permutations `sigma`, `tau` of the even group with
/// `1·(sigma a tau) = 2·(sigma a tau) = c`, `c` in `{1, 2}`, for a map
/// of rank at most `n-1` that glues two points of opposite parity.
pub fn lemma_delta2_normalize(
    a: &Transformation,
) -> Result<(Transformation, Transformation, usize)> {
    let n = a.degree();
    if n < 4 || a.rank() == n {
        return Err(Error::PreconditionViolated(format!(
            "{a} must be singular with n >= 4"
        )));
    }
    let (x, y) = mixed_pair(a).ok_or_else(|| {
        Error::PreconditionViolated(format!("every fiber of {a} is parity-monochromatic"))
    })?;

    // sigma sends {1, 2} onto {x, y}
    let sigma = match (x == 1, y == 2) {
        (true, true) => Transformation::identity(n),
        (true, false) if n == 4 => cycles(n, vec![vec![4, 3, 2, 1]]),
        (true, false) => cycles(n, vec![vec![2, y], vec![3, 5]]),
        (false, true) if n == 4 => cycles(n, vec![vec![1, 2, 3, 4]]),
        (false, true) if n == 5 && x == 3 => cycles(n, vec![vec![1, 3, 5]]),
        (false, true) if n == 5 => cycles(n, vec![vec![1, 5, 3]]),
        (false, true) => cycles(n, vec![vec![1, x], vec![4, 6]]),
        (false, false) => cycles(n, vec![vec![1, x], vec![2, y]]),
    };

    // tau moves the common image b to 1, or to 2 when that is forced
    let b = a.apply(x);
    let (tau, c) = if b == 1 {
        (Transformation::identity(n), 1)
    } else if b % 2 == 1 {
        (cycles(n, vec![vec![1, b], vec![2, 4]]), 1)
    } else if n % 2 == 0 {
        let mut cyc: Vec<usize> = (b + 1..=n).rev().collect();
        cyc.push(2);
        cyc.extend((3..b).rev());
        if b != 2 {
            cyc.push(b);
        }
        cyc.push(1);
        (cycles(n, vec![cyc]), 1)
    } else if b == 2 {
        (Transformation::identity(n), 2)
    } else {
        (cycles(n, vec![vec![1, 3], vec![2, b]]), 2)
    };
    Ok((sigma, tau, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn factor_small_cases() {
        for a in [t(&[1, 1, 1, 2]), t(&[1, 1, 2, 2, 3]), t(&[3, 3, 1, 1, 2])] {
            let (a1, a2) = lemma_delta1_factor(&a).unwrap();
            assert_eq!(&a1 * &a2, a);
            assert_eq!(a1.rank(), a.rank() + 1);
            assert_eq!(a2.rank(), a.degree() - 2);
        }
        assert!(lemma_delta1_factor(&Transformation::identity(4)).is_err());
        // fibers {1,3}, {2,4}, {5}: parity-monochromatic, so out of scope
        assert!(lemma_delta1_factor(&t(&[1, 2, 1, 2, 3])).is_err());
    }

    #[test]
    fn normalize_small_cases() {
        let eps = t(&[1, 1, 3, 4]);
        let (s, tau, c) = lemma_delta2_normalize(&eps).unwrap();
        assert!(s.is_identity() && tau.is_identity() && c == 1);

        let a = t(&[1, 3, 2, 2, 5]);
        let (s, tau, c) = lemma_delta2_normalize(&a).unwrap();
        let p = &(&s * &a) * &tau;
        assert_eq!(c, 2);
        assert_eq!((p.apply(1), p.apply(2)), (2, 2));

        assert!(lemma_delta2_normalize(&t(&[1, 2, 1, 2])).is_err());
    }
}
