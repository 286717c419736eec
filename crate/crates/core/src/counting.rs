//! Exact cardinalities.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{FamilySpec, FamilyTag};

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * big(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * big(n - i) / big(i + 1))
}

fn power(base: usize, exp: usize) -> BigUint {
    num_traits::pow(big(base), exp)
}

/// Stirling number of the second kind, zero whenever `b <= 0` or `b > a`
/// (and `S(0,0) = 1`).
pub fn stirling2(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let (a, b) = (a as usize, b as usize);
    if b == 0 {
        return if a == 0 { BigUint::one() } else { BigUint::zero() };
    }
    // row-by-row recurrence S(i,j) = j S(i-1,j) + S(i-1,j-1)
    let mut row = vec![BigUint::zero(); b + 1];
    row[0] = BigUint::one();
    for i in 1..=a {
        for j in (1..=b.min(i)).rev() {
            row[j] = &row[j] * big(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[b].clone()
}

/// Permutations alternating parity between consecutive points.
pub fn pap(n: usize) -> BigUint {
    if n % 2 == 0 {
        let h = factorial(n / 2);
        big(2) * &h * &h
    } else {
        factorial((n - 1) / 2) * factorial((n + 1) / 2)
    }
}

pub fn gamma(n: usize) -> BigUint {
    match n {
        1 => BigUint::one(),
        2 => big(2),
        _ if n % 2 == 1 => pap(n) / big(2),
        _ => {
            let h = factorial(n / 2);
            &h * &h
        }
    }
}

/// `|T_n(r <= n-2)|`.
pub fn full_rank_at_most_n_minus_2(n: usize) -> BigUint {
    power(n, n) - (BigUint::one() + binomial(n, 2)) * factorial(n)
}

/// `|Σ_n(r = n-1)|`.
pub fn sigma_rank_n_minus_1(n: usize) -> BigUint {
    match n {
        1 => BigUint::zero(),
        2 => big(2),
        _ if n % 2 == 1 => factorial(n) * big(n - 1) * big(n + 1) / big(8),
        _ => factorial(n) * big(n) * big(n) / big(8),
    }
}

/// `|Σ_n \ Δ_n|`: kernels of rank `r <= n-2` whose blocks are parity
/// monochromatic, times the `C(n,r) r!` injections of the blocks.
pub fn sigma_minus_delta(n: usize) -> BigUint {
    if n < 3 {
        return BigUint::zero();
    }
    let odd = n.div_ceil(2) as i64;
    let even = (n / 2) as i64;
    let mut total = BigUint::zero();
    for r in 1..=n - 2 {
        let kernels: BigUint = (1..=odd)
            .map(|s| stirling2(odd, s) * stirling2(even, r as i64 - s))
            .sum();
        total += binomial(n, r) * factorial(r) * kernels;
    }
    total
}

pub fn sigma(n: usize) -> BigUint {
    if n <= 2 {
        return power(n, n);
    }
    full_rank_at_most_n_minus_2(n) + sigma_rank_n_minus_1(n) + gamma(n)
}

pub fn delta(n: usize) -> BigUint {
    sigma(n) - sigma_minus_delta(n)
}

/// Rank strata with their own closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stratum {
    /// `Σ_n(r = n-1)`
    SigmaRankNMinus1,
    /// `T_n(r <= n-2)`, which is also `Σ_n(r <= n-2)`
    FullRankAtMostNMinus2,
    /// `Σ_n \ Δ_n`
    SigmaMinusDelta,
}

pub fn card_stratum(s: Stratum, n: usize) -> BigUint {
    match s {
        Stratum::SigmaRankNMinus1 => sigma_rank_n_minus_1(n),
        Stratum::FullRankAtMostNMinus2 => full_rank_at_most_n_minus_2(n),
        Stratum::SigmaMinusDelta => sigma_minus_delta(n),
    }
}

/// Exact size of a family, when a closed form is known.
pub fn card(f: &FamilySpec) -> Result<BigUint> {
    let n = f.n;
    let spec = f.normalized();
    let alt = || {
        if n == 1 {
            BigUint::one()
        } else {
            factorial(n) / big(2)
        }
    };
    let none = || Err(Error::NoFormula(spec.tag.to_string()));
    Ok(match spec.tag {
        FamilyTag::FullT => power(n, n),
        FamilyTag::Sym => factorial(n),
        FamilyTag::Alt => alt(),
        FamilyTag::Pap => pap(n),
        FamilyTag::PapPlus => {
            if n % 2 == 1 {
                pap(n)
            } else {
                pap(n) / big(2)
            }
        }
        FamilyTag::PapMinus => {
            if n % 2 == 1 {
                BigUint::zero()
            } else {
                pap(n) / big(2)
            }
        }
        FamilyTag::Gamma => gamma(n),
        FamilyTag::GammaPlus | FamilyTag::GammaMinus => {
            let plus = spec.tag == FamilyTag::GammaPlus;
            if n % 2 == 1 {
                if plus {
                    gamma(n)
                } else {
                    BigUint::zero()
                }
            } else {
                gamma(n) / big(2)
            }
        }
        FamilyTag::Sigma => sigma(n),
        FamilyTag::Delta => delta(n),
        FamilyTag::ScriptX => sigma_minus_delta(n),
        FamilyTag::GammaOplus(m, k) => factorial(m) * factorial(k) / big(2),
        FamilyTag::GammaT(t) => {
            if t == 1 {
                factorial(n)
            } else if t == n {
                alt()
            } else {
                // 2 <= t <= n-2: trivial, cyclic, order two or dihedral
                match t % 4 {
                    2 => BigUint::one(),
                    3 => big(n),
                    0 => big(2),
                    _ => big(2 * n),
                }
            }
        }
        FamilyTag::SigmaT(t) | FamilyTag::DeltaT(t) => {
            if t == 1 {
                power(n, n)
            } else if t == n {
                power(n, n) - factorial(n) + alt()
            } else {
                return none();
            }
        }
        _ => return none(),
    })
}

/// One row of the cardinality table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    #[serde(serialize_with = "as_string")]
    pub gamma: BigUint,
    #[serde(serialize_with = "as_string")]
    pub sym: BigUint,
    #[serde(serialize_with = "as_string")]
    pub delta: BigUint,
    #[serde(serialize_with = "as_string")]
    pub sigma: BigUint,
    #[serde(serialize_with = "as_string")]
    pub full: BigUint,
    #[serde(serialize_with = "as_string")]
    pub pap: BigUint,
    #[serde(serialize_with = "as_string")]
    pub sigma_rank_n_minus_1: BigUint,
    #[serde(serialize_with = "as_string")]
    pub full_rank_le_n_minus_2: BigUint,
    #[serde(serialize_with = "as_string")]
    pub sigma_minus_delta: BigUint,
}

fn as_string<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl CountReport {
    pub fn new(n: usize) -> Self {
        CountReport {
            n,
            gamma: gamma(n),
            sym: factorial(n),
            delta: delta(n),
            sigma: sigma(n),
            full: power(n, n),
            pap: pap(n),
            sigma_rank_n_minus_1: sigma_rank_n_minus_1(n),
            full_rank_le_n_minus_2: full_rank_at_most_n_minus_2(n),
            sigma_minus_delta: sigma_minus_delta(n),
        }
    }

    /// The internal consistency relations between the columns.
    pub fn consistent(&self) -> bool {
        let split = self.n < 3
            || self.sigma
                == &self.full_rank_le_n_minus_2 + &self.sigma_rank_n_minus_1 + &self.gamma;
        split
            && self.delta == &self.sigma - &self.sigma_minus_delta
            && self.gamma <= self.sym
            && self.delta <= self.sigma
            && self.sigma <= self.full
            && self.pap == &self.gamma * big(if self.n >= 3 { 2 } else { 1 })
    }

    fn cells(&self) -> [String; 10] {
        [
            self.n.to_string(),
            self.gamma.to_string(),
            self.sym.to_string(),
            self.delta.to_string(),
            self.sigma.to_string(),
            self.full.to_string(),
            self.pap.to_string(),
            self.sigma_rank_n_minus_1.to_string(),
            self.full_rank_le_n_minus_2.to_string(),
            self.sigma_minus_delta.to_string(),
        ]
    }
}

pub const TABLE_COLUMNS: [&str; 10] = [
    "n",
    "gamma",
    "sym",
    "delta",
    "sigma",
    "full",
    "pap",
    "sigma_rank_n_minus_1",
    "full_rank_le_n_minus_2",
    "sigma_minus_delta",
];

pub fn table(max_n: usize) -> Vec<CountReport> {
    (1..=max_n).map(CountReport::new).collect()
}

pub fn to_csv(rows: &[CountReport]) -> String {
    let mut out = TABLE_COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells().join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[CountReport]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("plain data serializes");
    out.push('\n');
    out
}

/// Right-aligned columns.
pub fn to_text(rows: &[CountReport]) -> String {
    let cells: Vec<[String; 10]> = rows.iter().map(CountReport::cells).collect();
    let widths: Vec<usize> = (0..10)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].len())
                .chain([TABLE_COLUMNS[c].len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut out = String::new();
    let line = |out: &mut String, row: &[&str]| {
        let parts: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut out, &TABLE_COLUMNS);
    for r in &cells {
        let refs: Vec<&str> = r.iter().map(String::as_str).collect();
        line(&mut out, &refs);
    }
    out
}
