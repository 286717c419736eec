//! Verification suites.
//!
//! Each `check_*` function runs one group of checks and returns one
//! [`Check`] per claim. Reports never contain timings, so two runs with the
//! same configuration print identical text regardless of thread count.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::counting;
use crate::engine::{
    all_of_rank_at_least, all_transformations, closure, equals_family, exhaustive_rank,
    is_regular, kernel_orbit_count, lemma_delta1_factor, lemma_delta2_normalize,
    r_class_half_check, random_permutation, random_transformation, rclass::odd_pair_kernels,
    EnumeratedMonoid, FamilyMismatch, RankOutcome, DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_BUDGET,
};
use crate::error::{Error, Result};
use crate::family::{self, FamilySpec, FamilyTag, Oracle};
use crate::named::{generating_set, word_identities, GeneratingFamily, GeneratingSetSpec};
use crate::perm::{CycleExpr, PartialPerm, Parity, Transformation};

/// Seed used by every sampled check unless overridden.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// The claim failed; the payload names a counterexample.
    Fail(String),
    /// Not attempted because it would exceed a budget.
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
}

impl Check {
    fn new(name: impl Into<String>, status: Status) -> Self {
        Check {
            name: name.into(),
            status,
        }
    }

    fn from(name: impl Into<String>, res: Result<Option<String>>) -> Self {
        let status = match res {
            Ok(None) => Status::Pass,
            Ok(Some(cx)) => Status::Fail(cx),
            Err(Error::BudgetExceeded { reached, cap }) => {
                Status::Skipped(format!("budget exceeded ({reached} > {cap})"))
            }
            Err(e) => Status::Fail(format!("error: {e}")),
        };
        Check::new(name, status)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS  {}", self.name),
            Status::Fail(cx) => write!(f, "FAIL  {}: {cx}", self.name),
            Status::Skipped(why) => write!(f, "SKIP  {}: {why}", self.name),
        }
    }
}

/// Knobs shared by all checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest degree enumerated.
    pub max_n: usize,
    pub element_cap: usize,
    pub subset_budget: u64,
    pub seed: u64,
    /// Random elements per degree for membership agreement and the parity law.
    pub big_samples: usize,
    /// Random inputs per degree for regularity and the lemmas.
    pub small_samples: usize,
    /// Drops a generator of `Δ_n` so that generation checks must fail.
    pub sabotage: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 7,
            element_cap: DEFAULT_ELEMENT_CAP,
            subset_budget: DEFAULT_SUBSET_BUDGET,
            seed: DEFAULT_SEED,
            big_samples: 1_000_000,
            small_samples: 100_000,
            sabotage: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Everything up to degree 7.
    PaperCore,
    /// The core suite plus enumeration at degrees 8 and 9.
    PaperExtended,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperCore => "paper-core",
            Suite::PaperExtended => "paper-extended",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-core" => Ok(Suite::PaperCore),
            "paper-extended" => Ok(Suite::PaperExtended),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationOutcome {
    pub fn failed(&self) -> usize {
        self.count(|s| matches!(s, Status::Fail(_)))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, Status::Skipped(_)))
    }

    pub fn passed(&self) -> usize {
        self.count(|s| *s == Status::Pass)
    }

    fn count(&self, f: impl Fn(&Status) -> bool) -> usize {
        self.checks.iter().filter(|c| f(&c.status)).count()
    }

    pub fn report(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.passed(),
            self.failed(),
            self.skipped()
        ));
        out
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> VerificationOutcome {
    let mut checks = Vec::new();
    let core_n = cfg.max_n.min(7);
    checks.extend(check_table());
    checks.extend(check_generation(4, core_n, cfg));
    checks.extend(check_membership(core_n, cfg));
    checks.extend(check_delta_characterization(core_n.min(6), cfg));
    checks.extend(check_ranks(cfg));
    checks.extend(check_kernel_orbits());
    checks.extend(check_regularity(cfg));
    checks.extend(check_half_r_class(core_n));
    checks.extend(check_word_identities(13));
    checks.extend(check_lemmas(cfg));
    checks.extend(check_parity_law(9, cfg));
    checks.extend(check_family_laws(core_n, cfg));
    if suite == Suite::PaperExtended && cfg.max_n >= 8 {
        checks.extend(check_generation(8, cfg.max_n.min(9), cfg));
    }
    VerificationOutcome {
        suite: suite.name().to_string(),
        checks,
    }
}

// ---------------------------------------------------------------------------
// sampling helpers

const CHUNK: usize = 4096;

/// Runs `probe` on `samples` seeded draws in parallel and returns the first
/// counterexample in draw order.
fn sampled<F>(samples: usize, seed: u64, probe: F) -> Option<String>
where
    F: Fn(&mut ChaCha8Rng) -> Option<String> + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    (0..chunks).into_par_iter().find_map_first(|c| {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let len = CHUNK.min(samples - c * CHUNK);
        (0..len).find_map(|_| probe(&mut rng))
    })
}

fn exhaustive<F>(items: Vec<Transformation>, probe: F) -> Option<String>
where
    F: Fn(&Transformation) -> Option<String> + Sync + Send,
{
    items.par_iter().find_map_first(probe)
}

fn spec(tag: FamilyTag, n: usize) -> FamilySpec {
    FamilySpec::new(tag, n).expect("valid family")
}

fn gens_of(family: GeneratingFamily, n: usize) -> Result<Vec<Transformation>> {
    generating_set(&GeneratingSetSpec::new(family, n))
}

fn mismatch_text(m: FamilyMismatch) -> String {
    match m {
        FamilyMismatch::NotInFamily(a) => format!("{a} generated but not in the family"),
        FamilyMismatch::MissingFromMonoid(Some(a)) => format!("{a} in the family but not generated"),
        FamilyMismatch::MissingFromMonoid(None) => "family is larger than the closure".into(),
    }
}

// ---------------------------------------------------------------------------
// 1. the cardinality table

/// `(n, |Γ_n|, |S_n|, |Δ_n|, |Σ_n|, |T_n|)` as printed in the source table.
pub const PUBLISHED_TABLE: [(usize, u64, u64, u64, u64, u64); 10] = [
    (1, 1, 1, 1, 1, 1),
    (2, 2, 2, 4, 4, 4),
    (3, 1, 6, 10, 10, 27),
    (4, 4, 24, 128, 140, 256),
    (5, 6, 120, 1911, 2171, 3125),
    (6, 36, 720, 33702, 38412, 46656),
    (7, 72, 5040, 651793, 742975, 823543),
    (8, 576, 40320, 14237912, 15931072, 16777216),
    (9, 1440, 362880, 342062865, 377624169, 387420489),
    (10, 14400, 3628800, 9120890710, 9878449600, 10000000000),
];

pub fn check_table() -> Vec<Check> {
    let rows = counting::table(10);
    let mut bad = None;
    for (row, &(n, g, s, d, sg, t)) in rows.iter().zip(&PUBLISHED_TABLE) {
        let got = [&row.gamma, &row.sym, &row.delta, &row.sigma, &row.full];
        let want = [g, s, d, sg, t];
        for (x, y) in got.iter().zip(want) {
            if **x != y.into() && bad.is_none() {
                bad = Some(format!("n = {n}: computed {x}, published {y}"));
            }
        }
    }
    let consistent = counting::table(30)
        .into_iter()
        .find(|r| !r.consistent())
        .map(|r| format!("row {} violates a column relation", r.n));
    vec![
        Check::new(
            "table: n = 1..10 matches the published values",
            bad.map_or(Status::Pass, Status::Fail),
        ),
        Check::new(
            "table: rows n = 1..30 are internally consistent",
            consistent.map_or(Status::Pass, Status::Fail),
        ),
    ]
}

// ---------------------------------------------------------------------------
// 2. generators versus counting formulas

fn generation_check(
    family: GeneratingFamily,
    tag: FamilyTag,
    n: usize,
    cfg: &VerifyConfig,
) -> Check {
    let name = format!("generation: |<{family:?} gens>| = card({tag}) at n = {n}");
    let f = spec(tag, n);
    if let Ok(c) = counting::card(&f) {
        if c > (cfg.element_cap as u64).into() {
            return Check::new(name, Status::Skipped(format!("{c} elements exceed the cap")));
        }
    }
    let res = (|| -> Result<Option<String>> {
        let mut gens = gens_of(family, n)?;
        if cfg.sabotage && family == GeneratingFamily::DeltaMonoid {
            gens.pop();
        }
        let m = closure(&gens, n, cfg.element_cap)?;
        if let Some(bad) = equals_family(&m, &f)? {
            return Ok(Some(mismatch_text(bad)));
        }
        if !m.check_closed(10_000, 100_000, cfg.seed) {
            return Ok(Some("closure is not closed under products".into()));
        }
        let sample = (0..m.len()).step_by((m.len() / 1000).max(1));
        for i in sample {
            if m.eval_word(&m.word(i)) != m.get(i) {
                return Ok(Some(format!("word for {} evaluates elsewhere", m.get(i))));
            }
        }
        Ok(None)
    })();
    Check::from(name, res)
}

pub fn check_generation(lo: usize, hi: usize, cfg: &VerifyConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.push(generation_check(GeneratingFamily::GammaGroup, FamilyTag::Gamma, n, cfg));
        out.push(generation_check(GeneratingFamily::DeltaMonoid, FamilyTag::Delta, n, cfg));
        out.push(generation_check(GeneratingFamily::SigmaMonoid, FamilyTag::Sigma, n, cfg));
    }
    if lo <= 4 {
        out.push(generation_check(GeneratingFamily::DeltaMonoid, FamilyTag::Delta, 3, cfg));
        for m in 2..=4 {
            for k in 2..=4 {
                let name = format!("generation: <lambda, mu, mu'> = card(gamma_oplus@{m},{k})");
                let res = (|| -> Result<Option<String>> {
                    let gens = generating_set(&GeneratingSetSpec::oplus(m, k))?;
                    let mm = closure(&gens, m + k, cfg.element_cap)?;
                    Ok(equals_family(&mm, &FamilySpec::gamma_oplus(m, k)?)?.map(mismatch_text))
                })();
                out.push(Check::from(name, res));
            }
        }
        for n in 5..=hi.min(7) {
            for (family, tag) in [
                (GeneratingFamily::Bn, FamilyTag::Bn),
                (GeneratingFamily::BnPrime, FamilyTag::BnPrime),
            ] {
                let name = format!("generation: <{family:?} gens> equals {tag} at n = {n}");
                let res = (|| -> Result<Option<String>> {
                    let m = closure(&gens_of(family, n)?, n, cfg.element_cap)?;
                    let f = spec(tag, n);
                    let mut fam: Vec<Transformation> = all_of_rank_at_least(n, n - 1)
                        .filter(|a| family::contains(&f, a).unwrap_or(false))
                        .collect();
                    let singular: Vec<Transformation> =
                        m.iter().filter(|a| !a.is_permutation()).collect();
                    fam.sort();
                    Ok((fam != singular).then(|| {
                        format!("{} generated versus {} in the family", singular.len(), fam.len())
                    }))
                })();
                out.push(Check::from(name, res));
            }
        }
        let name = "counting: |gamma_oplus@m,k| = m!k!/2 by sign pairs, m, k <= 5";
        let res = (|| -> Result<Option<String>> {
            for m in 2..=5 {
                for k in 2..=5 {
                    let signs = |d: usize| -> Result<(u64, u64)> {
                        let mut even = 0;
                        let mut odd = 0;
                        for p in all_of_rank_at_least(d, d) {
                            if p.sign()?.is_even() {
                                even += 1
                            } else {
                                odd += 1
                            }
                        }
                        Ok((even, odd))
                    };
                    let (e1, o1) = signs(m)?;
                    let (e2, o2) = signs(k)?;
                    let brute = e1 * e2 + o1 * o2;
                    let formula = counting::card(&FamilySpec::gamma_oplus(m, k)?)?;
                    if formula != brute.into() {
                        return Ok(Some(format!("({m},{k}): {brute} versus {formula}")));
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from(name, res));
    }
    out
}

// ---------------------------------------------------------------------------
// 3. fast predicates versus definitions

/// Families with two independent deciders at degree `n`.
pub fn comparable_families(n: usize) -> Vec<FamilySpec> {
    use FamilyTag::*;
    let mut tags = vec![
        FullT,
        Sym,
        Alt,
        Pap,
        PapPlus,
        PapMinus,
        Gamma,
        GammaPlus,
        GammaMinus,
        Sigma,
        Delta,
        ScriptX,
        OrderPreserving,
        Monotone,
        OrientationPreserving,
        Oriented,
        DeltaT(1),
        DeltaT(n),
    ];
    for t in 1..=n {
        tags.push(GammaT(t));
        tags.push(SigmaT(t));
    }
    for m in 2..n.saturating_sub(1) {
        tags.push(GammaOplus(m, n - m));
    }
    if n >= 5 {
        tags.push(Bn);
        tags.push(BnPrime);
    }
    tags.into_iter().map(|t| spec(t, n)).collect()
}

fn disagreement(fams: &[FamilySpec], oracle: &Oracle, a: &Transformation) -> Option<String> {
    for f in fams {
        let fast = family::contains(f, a);
        let slow = oracle.contains(f, a);
        match (fast, slow) {
            (Ok(x), Ok(y)) if x == y => {}
            (x, y) => return Some(format!("{} at {a}: fast {x:?}, definition {y:?}", f.tag)),
        }
    }
    None
}

pub fn check_membership(max_n: usize, cfg: &VerifyConfig) -> Vec<Check> {
    let oracle = Oracle::shared();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let fams = comparable_families(n);
        let (name, cx) = if n <= 5 {
            (
                format!("membership: fast = definition on all of T_{n}"),
                exhaustive(all_transformations(n).collect(), |a| {
                    disagreement(&fams, oracle, a)
                }),
            )
        } else {
            (
                format!(
                    "membership: fast = definition on {} random maps of degree {n}",
                    cfg.big_samples
                ),
                sampled(cfg.big_samples, cfg.seed ^ n as u64, |rng| {
                    disagreement(&fams, oracle, &random_transformation(rng, n))
                }),
            )
        };
        out.push(Check::new(name, cx.map_or(Status::Pass, Status::Fail)));
    }
    out
}

// ---------------------------------------------------------------------------
// 4. Δ_n = Σ_n \ 𝒳

pub fn check_delta_characterization(max_n: usize, cfg: &VerifyConfig) -> Vec<Check> {
    (4..=max_n)
        .map(|n| {
            let name = format!("delta: <Sigma(r >= n-1)> = Sigma minus scriptX at n = {n}");
            let res = (|| -> Result<Option<String>> {
                let sigma = spec(FamilyTag::Sigma, n);
                let x = spec(FamilyTag::ScriptX, n);
                let gens: Vec<Transformation> = all_of_rank_at_least(n, n - 1)
                    .filter(|a| family::contains(&sigma, a).unwrap_or(false))
                    .collect();
                let m = closure(&gens, n, cfg.element_cap)?;
                let filtered: Vec<Transformation> = all_transformations(n)
                    .filter(|a| {
                        family::contains(&sigma, a).unwrap_or(false)
                            && !family::oracle_contains(&x, a).unwrap_or(true)
                    })
                    .collect();
                if filtered.len() != m.len() {
                    return Ok(Some(format!(
                        "{} generated versus {} filtered",
                        m.len(),
                        filtered.len()
                    )));
                }
                let diff = filtered
                    .iter()
                    .zip(m.iter())
                    .find(|(a, b)| *a != b)
                    .map(|(a, _)| format!("first difference at {a}"));
                Ok(diff)
            })();
            Check::from(name, res)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// 5. ranks

fn rank_check(label: String, gens: Result<Vec<Transformation>>, n: usize, expected: usize, cfg: &VerifyConfig) -> Check {
    let name = format!("rank: {label} has rank {expected}");
    let res = (|| -> Result<Option<String>> {
        let m = closure(&gens?, n, cfg.element_cap)?;
        Ok(match exhaustive_rank(&m, expected, cfg.subset_budget)? {
            RankOutcome::Exact { rank, .. } if rank == expected => None,
            RankOutcome::Exact { rank, witness } => Some(format!(
                "found a generating set of size {rank}: {}",
                witness.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
            )),
            RankOutcome::AboveMax { max } => Some(format!("no generating set of size <= {max}")),
            RankOutcome::BudgetExhausted { closures } => {
                return Err(Error::BudgetExceeded {
                    reached: closures,
                    cap: cfg.subset_budget,
                })
            }
        })
    })();
    Check::from(name, res)
}

pub fn check_ranks(cfg: &VerifyConfig) -> Vec<Check> {
    use GeneratingFamily::*;
    let mut out = Vec::new();
    let groups = [(4, 1), (5, 2), (6, 2), (7, 3), (8, 2), (9, 2), (10, 2)];
    for (n, r) in groups {
        out.push(rank_check(format!("Gamma_{n}"), gens_of(GammaGroup, n), n, r, cfg));
    }
    for (n, r) in [(3, 3), (4, 2), (6, 3)] {
        out.push(rank_check(format!("Delta_{n}"), gens_of(DeltaMonoid, n), n, r, cfg));
    }
    for (n, r) in [(4, 3), (6, 5)] {
        out.push(rank_check(format!("Sigma_{n}"), gens_of(SigmaMonoid, n), n, r, cfg));
    }
    for (m, k, r) in [(2, 2, 1), (3, 3, 3), (4, 3, 3), (4, 4, 3)] {
        out.push(rank_check(
            format!("Gamma_{{{m}+{k}}}"),
            generating_set(&GeneratingSetSpec::oplus(m, k)),
            m + k,
            r,
            cfg,
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// 6. kernel orbits

/// The rank of `Δ_n`.
pub fn delta_rank_value(n: usize) -> usize {
    match n {
        3 => 3,
        4 => 2,
        7 => 5,
        _ if n % 2 == 0 => 3,
        _ => 4,
    }
}

/// The rank of `Σ_n`.
pub fn sigma_rank_value(n: usize) -> usize {
    match n {
        4 => 3,
        5 => 6,
        6 => 5,
        _ if n % 2 == 1 => 9,
        _ => 6,
    }
}

pub fn check_kernel_orbits() -> Vec<Check> {
    let expected = [1, 2, 2, 4, 3, 5, 3, 5];
    let mut out = Vec::new();
    for (n, want) in (4..=11).zip(expected) {
        let name = format!("orbits: {want} kernel orbits at n = {n}, and rank(Delta) + orbits = rank(Sigma)");
        let res = (|| -> Result<Option<String>> {
            let got = kernel_orbit_count(n)?.orbit_count;
            if got != want {
                return Ok(Some(format!("{got} orbits")));
            }
            if delta_rank_value(n) + got != sigma_rank_value(n) {
                return Ok(Some(format!(
                    "{} + {got} != {}",
                    delta_rank_value(n),
                    sigma_rank_value(n)
                )));
            }
            let d = gens_of(GeneratingFamily::DeltaMonoid, n)?.len();
            let s = gens_of(GeneratingFamily::SigmaMonoid, n)?.len();
            if d != delta_rank_value(n) || s != sigma_rank_value(n) {
                return Ok(Some(format!("catalogued generating sets have sizes {d} and {s}")));
            }
            Ok(None)
        })();
        out.push(Check::from(name, res));
    }
    out
}

// ---------------------------------------------------------------------------
// 7. regularity

fn regular_cx(m: &EnumeratedMonoid, a: &Transformation) -> Option<String> {
    match is_regular(m, a) {
        Ok(Some(w)) if m.contains(&w.witness) && &(a * &w.witness) * a == *a => None,
        Ok(Some(w)) => Some(format!("{a}: invalid witness {}", w.witness)),
        Ok(None) => Some(format!("{a} is not regular")),
        Err(e) => Some(format!("{a}: {e}")),
    }
}

pub fn check_regularity(cfg: &VerifyConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for family in [GeneratingFamily::DeltaMonoid, GeneratingFamily::SigmaMonoid] {
        for n in 2..=6 {
            let name = if n <= 5 {
                format!("regular: every element of <{family:?} gens> at n = {n}")
            } else {
                format!(
                    "regular: {} random elements of <{family:?} gens> at n = {n}",
                    cfg.small_samples
                )
            };
            let res = (|| -> Result<Option<String>> {
                let m = closure(&gens_of(family, n)?, n, cfg.element_cap)?;
                Ok(if n <= 5 {
                    exhaustive(m.iter().collect(), |a| regular_cx(&m, a))
                } else {
                    sampled(cfg.small_samples, cfg.seed ^ 0x7E6, |rng| {
                        regular_cx(&m, &m.get(rng.gen_range(0..m.len())))
                    })
                })
            })();
            out.push(Check::from(name, res));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// 8. half of each kernel class

pub fn check_half_r_class(max_n: usize) -> Vec<Check> {
    (4..=max_n)
        .map(|n| {
            let name = format!("r-class: exactly half of each odd-pair kernel class lies in Sigma_{n}");
            let res = (|| -> Result<Option<String>> {
                for k in odd_pair_kernels(n) {
                    let r = r_class_half_check(&k)?;
                    if !r.is_half() {
                        return Ok(Some(format!(
                            "{}: {} of {}",
                            r.kernel, r.members_in_family, r.class_size
                        )));
                    }
                }
                Ok(None)
            })();
            Check::from(name, res)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// 9. word identities

pub fn check_word_identities(max_n: usize) -> Vec<Check> {
    let mut total = 0;
    let mut bad = None;
    for n in 1..=max_n {
        for id in word_identities(n) {
            total += 1;
            match id.holds() {
                Ok(true) => {}
                Ok(false) => {
                    bad.get_or_insert_with(|| format!("{} at n = {n}", id.label));
                }
                Err(e) => {
                    bad.get_or_insert_with(|| format!("{} at n = {n}: {e}", id.label));
                }
            }
        }
    }
    vec![Check::new(
        format!("identities: all {total} word identities hold for n <= {max_n}"),
        bad.map_or(Status::Pass, Status::Fail),
    )]
}

// ---------------------------------------------------------------------------
// 10. the two constructive lemmas

fn delta1_cx(a: &Transformation) -> Option<String> {
    let n = a.degree();
    let x = spec(FamilyTag::ScriptX, n);
    let valid = a.rank() + 2 <= n && !family::oracle_contains(&x, a).ok()?;
    if !valid {
        return None;
    }
    match lemma_delta1_factor(a) {
        Ok((a1, a2)) => {
            let ok = &a1 * &a2 == *a
                && a1.rank() == a.rank() + 1
                && a2.rank() + 2 == n
                && !family::oracle_contains(&x, &a1).unwrap_or(true)
                && !family::oracle_contains(&x, &a2).unwrap_or(true);
            (!ok).then(|| format!("{a} -> {a1} * {a2}"))
        }
        Err(e) => Some(format!("{a}: {e}")),
    }
}

fn delta2_cx(a: &Transformation) -> Option<String> {
    let n = a.degree();
    let mixed = (1..=n).any(|y| {
        let f = a.fiber(y);
        f.iter().any(|p| p % 2 == 1) && f.iter().any(|p| p % 2 == 0)
    });
    if a.rank() == n || !mixed {
        return None;
    }
    let gamma = spec(FamilyTag::Gamma, n);
    match lemma_delta2_normalize(a) {
        Ok((s, t, c)) => {
            let p = &(&s * a) * &t;
            let in_gamma = |g: &Transformation| {
                family::contains(&gamma, g).unwrap_or(false)
                    && family::oracle_contains(&gamma, g).unwrap_or(false)
            };
            let ok = in_gamma(&s)
                && in_gamma(&t)
                && (c == 1 || c == 2)
                && (n % 2 == 1 || c == 1)
                && p.apply(1) == c
                && p.apply(2) == c;
            (!ok).then(|| format!("{a} -> sigma {s}, tau {t}, c = {c}"))
        }
        Err(e) => Some(format!("{a}: {e}")),
    }
}

pub fn check_lemmas(cfg: &VerifyConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for (label, probe) in [
        ("factorization a = a1 a2", delta1_cx as fn(&Transformation) -> Option<String>),
        ("normalization 1 sigma a tau = 2 sigma a tau = c", delta2_cx),
    ] {
        for n in 4..=7 {
            let (name, cx) = if n <= 5 {
                (
                    format!("lemma: {label} on every valid input at n = {n}"),
                    exhaustive(all_transformations(n).collect(), probe),
                )
            } else {
                (
                    format!("lemma: {label} on {} random valid inputs at n = {n}", cfg.small_samples),
                    sampled(cfg.small_samples, cfg.seed ^ (n as u64) << 8, |rng| loop {
                        let a = random_transformation(rng, n);
                        let valid = if label.starts_with("factor") {
                            a.rank() + 2 <= n
                                && !family::contains(&spec(FamilyTag::ScriptX, n), &a)
                                    .unwrap_or(true)
                        } else {
                            a.rank() < n
                                && !family::contains(&spec(FamilyTag::ScriptX, n), &a)
                                    .unwrap_or(true)
                                && (a.rank() + 1 < n || {
                                    let k = a.kernel();
                                    let b = k.nontrivial_blocks().next().unwrap();
                                    (b[0] + b[1]) % 2 == 1
                                })
                        };
                        if valid {
                            break probe(&a);
                        }
                    }),
                )
            };
            out.push(Check::new(name, cx.map_or(Status::Pass, Status::Fail)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// 11. parity of chained partial permutations

fn random_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, n, k)
        .into_iter()
        .map(|i| i + 1)
        .collect()
}

/// A random injection from `dom` onto a random `dom.len()`-subset of `[n]`.
fn random_partial(rng: &mut ChaCha8Rng, n: usize, dom: &[usize]) -> PartialPerm {
    let img = random_subset(rng, n, dom.len());
    PartialPerm::new(n, dom.iter().copied().zip(img)).expect("injective by construction")
}

pub fn check_parity_law(max_n: usize, cfg: &VerifyConfig) -> Vec<Check> {
    (1..=max_n)
        .map(|n| {
            let cx = sampled(cfg.big_samples, cfg.seed ^ 0x1A2 ^ n as u64, |rng| {
                let k = rng.gen_range(0..=n);
                let dom = random_subset(rng, n, k);
                let p = random_partial(rng, n, &dom);
                let q = random_partial(rng, n, &p.image());
                let pq = p.compose_chained(&q).ok()?;
                let law = (pq.parity() == Parity::Even) == (p.parity() == q.parity());
                (!law).then(|| format!("p = {p}, q = {q}"))
            });
            Check::new(
                format!(
                    "parity: {} chained pairs at n = {n}: pq even iff p, q of equal parity",
                    cfg.big_samples
                ),
                cx.map_or(Status::Pass, Status::Fail),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// family laws

/// Bit `t` set when every injective width-`t` restriction is even.
fn width_profile(oracle: &Oracle, a: &Transformation) -> Result<u32> {
    let n = a.degree();
    let mut bits = 0;
    for t in 1..=n {
        if oracle.width_scan(a, t, true)? {
            bits |= 1 << t;
        }
    }
    Ok(bits)
}

fn inclusion_expected(p: usize, q: usize) -> bool {
    p <= q && (p % 4 == 2 || q % 4 == 1 || p % 4 == q % 4)
}

pub fn check_family_laws(max_n: usize, cfg: &VerifyConfig) -> Vec<Check> {
    let oracle = Oracle::shared();
    let mut out = Vec::new();

    // unit groups, PAP splitting and |Γ| = |PAP|/2
    for n in 1..=max_n.max(8).min(8) {
        let name = format!("units: Gamma = Sigma ∩ S, Gamma ⊔ -Gamma = PAP at n = {n}");
        let perms: Vec<Transformation> = all_of_rank_at_least(n, n).collect();
        let sigma = spec(FamilyTag::Sigma, n);
        let gamma = spec(FamilyTag::Gamma, n);
        let pap = spec(FamilyTag::Pap, n);
        let cx = exhaustive(perms.clone(), |a| {
            let g = family::contains(&gamma, a).ok()?;
            let s = oracle.contains(&sigma, a).ok()?;
            let minus = (1..=n).all(|x| a.parity_without(x) == Some(Parity::Odd));
            let p = oracle.contains(&pap, a).ok()?;
            let ok = g == s && (n < 3 || (!(g && minus) && (g || minus) == p));
            (!ok).then(|| a.to_string())
        });
        out.push(Check::new(name, cx.map_or(Status::Pass, Status::Fail)));
        if n >= 3 {
            let g = perms.iter().filter(|a| family::contains(&gamma, a).unwrap_or(false)).count();
            let p = perms.iter().filter(|a| oracle.contains(&pap, a).unwrap_or(false)).count();
            out.push(Check::new(
                format!("units: |Gamma| = |PAP|/2 at n = {n}"),
                if 2 * g == p {
                    Status::Pass
                } else {
                    Status::Fail(format!("{g} versus {p}"))
                },
            ));
        }
        // periodic unit groups of width 2..n-2
        for t in 2..n.saturating_sub(1) {
            let name = format!("periodic: Gamma^{t} at n = {n} is the listed group");
            let res = (|| -> Result<Option<String>> {
                let sigma = Transformation::new((2..=n).chain([1]))?;
                let rho = Transformation::new((1..=n).rev())?;
                let gens = match t % 4 {
                    2 => vec![],
                    3 => vec![sigma],
                    0 => vec![rho],
                    _ => vec![sigma, rho],
                };
                let expected = closure(&gens, n, cfg.element_cap)?;
                let mut actual = Vec::new();
                for a in &perms {
                    if oracle.width_scan(a, t, true)? {
                        actual.push(a.clone());
                    }
                }
                let listed: Vec<Transformation> = expected.iter().collect();
                Ok((actual != listed)
                    .then(|| format!("{} permutations versus {}", actual.len(), listed.len())))
            })();
            out.push(Check::from(name, res));
        }
    }

    // width profiles over all of T_n
    for n in 2..=max_n {
        let name = format!("inclusions: Sigma^p ⊆ Sigma^q, Sigma^2 = O, Sigma^3 = T(r<=2) ∪ OP at n = {n}");
        let res = (|| -> Result<Option<String>> {
            let all: Vec<Transformation> = all_transformations(n).collect();
            let profiles: Vec<u32> = all
                .par_iter()
                .map(|a| width_profile(oracle, a))
                .collect::<Result<_>>()?;
            let o = spec(FamilyTag::OrderPreserving, n);
            let op = spec(FamilyTag::OrientationPreserving, n);
            for (a, &bits) in all.iter().zip(&profiles) {
                let s2 = bits & (1 << 2) != 0;
                if s2 != oracle.contains(&o, a)? {
                    return Ok(Some(format!("Sigma^2 versus O at {a}")));
                }
                if n >= 3 {
                    let s3 = bits & (1 << 3) != 0;
                    if s3 != (a.rank() <= 2 || oracle.contains(&op, a)?) {
                        return Ok(Some(format!("Sigma^3 versus T(r<=2) ∪ OP at {a}")));
                    }
                }
                if oracle.contains(&o, a)? && bits | 1 != (2u32 << n) - 1 {
                    return Ok(Some(format!("order-preserving {a} outside some Sigma^t")));
                }
            }
            for p in 2..=n {
                for q in 2..=n {
                    let included = profiles
                        .iter()
                        .all(|&b| b & (1 << p) == 0 || b & (1 << q) != 0);
                    if included != inclusion_expected(p, q) {
                        return Ok(Some(format!(
                            "Sigma^{p} ⊆ Sigma^{q} is {included}, expected {}",
                            !included
                        )));
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from(name, res));
    }

    // Δ^t for 2 <= t <= n-3 by closure against the order and orientation families
    for n in 5..=max_n {
        for t in 2..=n - 3 {
            let name = format!("periodic: Delta^{t} at n = {n} is the listed monoid");
            let res = (|| -> Result<Option<String>> {
                let m = oracle.delta_monoid(n, t)?;
                let tag = match t % 4 {
                    2 => FamilyTag::OrderPreserving,
                    3 => FamilyTag::OrientationPreserving,
                    0 => FamilyTag::Monotone,
                    _ => FamilyTag::Oriented,
                };
                let f = spec(tag, n);
                let listed: Vec<Transformation> = all_transformations(n)
                    .filter(|a| oracle.contains(&f, a).unwrap_or(false))
                    .collect();
                Ok((listed.len() != m.len() || listed.iter().any(|a| !m.contains(a)))
                    .then(|| format!("{} generated versus {} listed", m.len(), listed.len())))
            })();
            out.push(Check::from(name, res));
        }
    }

    // Σ count by predicate
    for n in 1..=max_n.min(6) {
        let sigma = spec(FamilyTag::Sigma, n);
        let count = all_transformations(n)
            .par_bridge()
            .filter(|a| family::contains(&sigma, a).unwrap_or(false))
            .count();
        let formula = counting::sigma(n);
        out.push(Check::new(
            format!("counting: |Sigma_{n}| by predicate equals the formula"),
            if formula == count.into() {
                Status::Pass
            } else {
                Status::Fail(format!("{count} versus {formula}"))
            },
        ));
    }

    // catalogue elements have their asserted memberships
    let name = "catalogue: named elements lie in their families for n <= 13";
    let cx = (4..=13).find_map(|n| catalogue_cx(n).err().or_else(|| catalogue_cx(n).ok().flatten()));
    out.push(Check::new(name, cx.map_or(Status::Pass, Status::Fail)));
    out
}

fn catalogue_cx(n: usize) -> std::result::Result<Option<String>, String> {
    use crate::named::{ElementId, NamedElement};
    let gamma = spec(FamilyTag::Gamma, n);
    let sigma = spec(FamilyTag::Sigma, n);
    let delta = spec(FamilyTag::Delta, n);
    let build = |id, n| NamedElement::of(id, n).build().map_err(|e| e.to_string());
    let in_f = |f: &FamilySpec, a: &Transformation| family::contains(f, a).unwrap_or(false);
    for g in gens_of(GeneratingFamily::GammaGroup, n).map_err(|e| e.to_string())? {
        if !in_f(&gamma, &g) {
            return Ok(Some(format!("Gamma generator {g} at n = {n}")));
        }
    }
    for id in [ElementId::Epsilon, ElementId::EpsilonPrime] {
        let e = build(id, n)?;
        if !(in_f(&delta, &e) && e.rank() + 1 == n) {
            return Ok(Some(format!("{} at n = {n}", id.name())));
        }
    }
    let mut sigma_extra = vec![ElementId::GammaN];
    if n >= 5 {
        sigma_extra.push(ElementId::DeltaN);
    }
    if n >= 6 {
        sigma_extra.push(ElementId::DeltaPrimeN);
    }
    if n >= 7 {
        sigma_extra.push(ElementId::GammaPrimeN);
    }
    if n >= 8 {
        sigma_extra.push(ElementId::GammaDoublePrimeN);
    }
    for id in sigma_extra {
        let e = build(id, n)?;
        if !(in_f(&sigma, &e) && !in_f(&delta, &e) && e.rank() + 2 == n) {
            return Ok(Some(format!("{} at n = {n}", id.name())));
        }
    }
    if n >= 5 {
        for (id, tag) in [
            (ElementId::Beta1, FamilyTag::Bn),
            (ElementId::Beta2, FamilyTag::Bn),
            (ElementId::Beta1Prime, FamilyTag::BnPrime),
            (ElementId::Beta2Prime, FamilyTag::BnPrime),
        ] {
            let e = build(id, n)?;
            if !in_f(&spec(tag, n), &e) {
                return Ok(Some(format!("{} at n = {n}", id.name())));
            }
        }
    }
    let pi_ok = n % 2 == 1 || {
        let pi = CycleExpr::new((1..=n).step_by(2).map(|i| vec![i, i + 1]).collect())
            .and_then(|c| c.eval(n))
            .map_err(|e| e.to_string())?;
        family::pap_split(&pi) == family::PapClass::Minus
    };
    Ok((!pi_ok).then(|| format!("pi at n = {n}")))
}

/// Permutations of `[n]` in lexicographic order, exposed for tests.
pub fn permutations(n: usize) -> impl Iterator<Item = Transformation> {
    all_of_rank_at_least(n, n)
}

/// Uniform random permutation, exposed for tests.
pub fn sample_permutation(seed: u64, n: usize) -> Transformation {
    random_permutation(&mut ChaCha8Rng::seed_from_u64(seed), n)
}
