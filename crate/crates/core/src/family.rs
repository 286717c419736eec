//! Membership predicates.
//!
//! Every family has two independent deciders: [`Oracle::contains`] works
//! straight from the definitions (subset scans, pairwise order checks,
//! closure lookups), while [`contains`] uses the structural characterizations
//! and runs in time polynomial in `n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::engine::closure::{closure, EnumeratedMonoid, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::perm::{inversions_of, Parity, Transformation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    FullT,
    Sym,
    Alt,
    Pap,
    PapPlus,
    PapMinus,
    GammaT(usize),
    SigmaT(usize),
    DeltaT(usize),
    Gamma,
    GammaPlus,
    GammaMinus,
    Delta,
    Sigma,
    /// Rank at most `n-2` with every fiber inside one parity class.
    ScriptX,
    /// Block sizes `(m, k)`; the ground set is `[m+k]` with blocks
    /// `1..=m` and `m+1..=m+k`.
    GammaOplus(usize, usize),
    OrderPreserving,
    Monotone,
    OrientationPreserving,
    Oriented,
    Bn,
    BnPrime,
}

/// A family at a fixed degree `n` (for [`FamilyTag::GammaOplus`], `n = m + k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(tag: FamilyTag, n: usize) -> Result<Self> {
        if n == 0 || n > crate::perm::MAX_DEGREE {
            return Err(Error::BadDegree(n));
        }
        let bad = |constraint| {
            Err(Error::OutOfRange {
                id: tag_name(tag),
                constraint,
                got: format!("n = {n}"),
            })
        };
        match tag {
            FamilyTag::GammaT(t) | FamilyTag::SigmaT(t) | FamilyTag::DeltaT(t)
                if t == 0 || t > n =>
            {
                return bad("1 <= t <= n")
            }
            FamilyTag::GammaOplus(m, k) if m < 2 || k < 2 || m + k != n => {
                return bad("m, k >= 2 and n = m + k")
            }
            FamilyTag::Bn | FamilyTag::BnPrime if n < 5 => return bad("n >= 5"),
            _ => {}
        }
        Ok(FamilySpec { tag, n })
    }

    pub fn gamma_oplus(m: usize, k: usize) -> Result<Self> {
        FamilySpec::new(FamilyTag::GammaOplus(m, k), m + k)
    }

    /// Replaces the width-`t` tags by their named equivalents where one
    /// exists (`t = n-1`).
    pub fn normalized(self) -> FamilySpec {
        let n = self.n;
        let tag = match self.tag {
            FamilyTag::GammaT(t) if t + 1 == n => FamilyTag::Gamma,
            FamilyTag::SigmaT(t) if t + 1 == n => FamilyTag::Sigma,
            FamilyTag::DeltaT(t) if t + 1 == n => FamilyTag::Delta,
            tag => tag,
        };
        FamilySpec { tag, n }
    }
}

fn tag_name(tag: FamilyTag) -> String {
    match tag {
        FamilyTag::FullT => "t".into(),
        FamilyTag::Sym => "s".into(),
        FamilyTag::Alt => "a".into(),
        FamilyTag::Pap => "pap".into(),
        FamilyTag::PapPlus => "pap+".into(),
        FamilyTag::PapMinus => "pap-".into(),
        FamilyTag::GammaT(t) => format!("gamma_t@{t}"),
        FamilyTag::SigmaT(t) => format!("sigma_t@{t}"),
        FamilyTag::DeltaT(t) => format!("delta_t@{t}"),
        FamilyTag::Gamma => "gamma".into(),
        FamilyTag::GammaPlus => "gamma+".into(),
        FamilyTag::GammaMinus => "gamma-".into(),
        FamilyTag::Delta => "delta".into(),
        FamilyTag::Sigma => "sigma".into(),
        FamilyTag::ScriptX => "scriptX".into(),
        FamilyTag::GammaOplus(m, k) => format!("gamma_oplus@{m},{k}"),
        FamilyTag::OrderPreserving => "o".into(),
        FamilyTag::Monotone => "m".into(),
        FamilyTag::OrientationPreserving => "op".into(),
        FamilyTag::Oriented => "or".into(),
        FamilyTag::Bn => "bn".into(),
        FamilyTag::BnPrime => "bn'".into(),
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&tag_name(*self))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {})", self.tag, self.n)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let param = |text: &str| -> Result<usize> {
            text.trim().parse().map_err(|_| Error::Parse {
                position: s.find('@').map_or(0, |p| p + 1),
                message: format!("expected a number, found `{text}`"),
            })
        };
        if let Some((name, rest)) = s.split_once('@') {
            return match name {
                "gamma_t" => Ok(FamilyTag::GammaT(param(rest)?)),
                "sigma_t" => Ok(FamilyTag::SigmaT(param(rest)?)),
                "delta_t" => Ok(FamilyTag::DeltaT(param(rest)?)),
                "gamma_oplus" => {
                    let (m, k) = rest.split_once(',').ok_or_else(|| Error::Parse {
                        position: s.len(),
                        message: "expected `gamma_oplus@m,k`".into(),
                    })?;
                    Ok(FamilyTag::GammaOplus(param(m)?, param(k)?))
                }
                _ => Err(Error::UnknownName(s.to_string())),
            };
        }
        Ok(match s {
            "t" => FamilyTag::FullT,
            "s" => FamilyTag::Sym,
            "a" => FamilyTag::Alt,
            "pap" => FamilyTag::Pap,
            "pap+" => FamilyTag::PapPlus,
            "pap-" => FamilyTag::PapMinus,
            "gamma" => FamilyTag::Gamma,
            "gamma+" => FamilyTag::GammaPlus,
            "gamma-" => FamilyTag::GammaMinus,
            "delta" => FamilyTag::Delta,
            "sigma" => FamilyTag::Sigma,
            "scriptX" => FamilyTag::ScriptX,
            "o" => FamilyTag::OrderPreserving,
            "m" => FamilyTag::Monotone,
            "op" => FamilyTag::OrientationPreserving,
            "or" => FamilyTag::Oriented,
            "bn" => FamilyTag::Bn,
            "bn'" => FamilyTag::BnPrime,
            _ => return Err(Error::UnknownName(s.to_string())),
        })
    }
}

fn check_degree(f: &FamilySpec, a: &Transformation) -> Result<()> {
    if f.n != a.degree() {
        Err(Error::DegreeMismatch {
            left: f.n,
            right: a.degree(),
        })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Fast path

/// Which half of the parity-alternating permutations `a` lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PapClass {
    Plus,
    Minus,
    NotPap,
}

pub fn pap_split(a: &Transformation) -> PapClass {
    if !a.is_permutation() {
        return PapClass::NotPap;
    }
    let raw = a.raw();
    // 0-based index i holds point i+1, so odd points sit at even indices
    let same = raw.iter().enumerate().all(|(i, &p)| (i % 2) == (p as usize % 2));
    if same {
        return PapClass::Plus;
    }
    let swapped = raw.iter().enumerate().all(|(i, &p)| (i % 2) != (p as usize % 2));
    if swapped {
        PapClass::Minus
    } else {
        PapClass::NotPap
    }
}

fn gamma_fast(a: &Transformation) -> bool {
    let class = pap_split(a);
    if class == PapClass::NotPap {
        return false;
    }
    let even = a.sign().map(Parity::is_even).unwrap_or(false);
    // σ is even exactly when 1σ is odd
    even == (class == PapClass::Plus)
}

/// The unique kernel pair of a rank `n-1` map.
fn kernel_pair(a: &Transformation) -> Option<(usize, usize)> {
    let n = a.degree();
    let mut first: Vec<Option<usize>> = vec![None; n];
    let mut pair = None;
    for (i, p) in a.images().enumerate() {
        match first[p - 1] {
            None => first[p - 1] = Some(i + 1),
            Some(x) => {
                if pair.is_some() {
                    return None;
                }
                pair = Some((x, i + 1));
            }
        }
    }
    pair
}

fn sigma_fast(a: &Transformation) -> bool {
    let n = a.degree();
    let r = a.rank();
    if r + 2 <= n {
        true
    } else if r + 1 == n {
        let (x, y) = kernel_pair(a).expect("rank n-1 has one kernel pair");
        (x + y) % 2 == 1 && a.parity_without(x) == Some(Parity::Even)
    } else {
        gamma_fast(a)
    }
}

fn script_x_fast(a: &Transformation) -> bool {
    let n = a.degree();
    if a.rank() + 2 > n {
        return false;
    }
    // parity class seen per image point: bit 0 = odd source, bit 1 = even source
    let mut seen = vec![0u8; n];
    for (i, &p) in a.raw().iter().enumerate() {
        seen[p as usize] |= 1 << (i % 2);
    }
    seen.iter().all(|&s| s != 3)
}

fn block_sign(a: &Transformation, lo: usize, hi: usize) -> Option<Parity> {
    let block: Vec<u8> = a.raw()[lo..hi].to_vec();
    if block.iter().any(|&p| (p as usize) < lo || (p as usize) >= hi) {
        return None;
    }
    let local: Vec<usize> = block.iter().map(|&p| p as usize - lo + 1).collect();
    Transformation::new(local).ok()?.sign().ok()
}

fn is_order_preserving(a: &Transformation) -> bool {
    a.raw().windows(2).all(|w| w[0] <= w[1])
}

fn is_order_reversing(a: &Transformation) -> bool {
    a.raw().windows(2).all(|w| w[0] >= w[1])
}

/// Some rotation of the image sequence is non-decreasing.
fn rotation_sorted(a: &Transformation, reversed: bool) -> bool {
    let raw = a.raw();
    let n = raw.len();
    (0..n).any(|s| {
        (0..n - 1).all(|k| {
            let (u, v) = (raw[(s + k) % n], raw[(s + k + 1) % n]);
            if reversed {
                u >= v
            } else {
                u <= v
            }
        })
    })
}

fn b_member_fast(a: &Transformation, c: usize) -> bool {
    let n = a.degree();
    let other = 3 - c;
    a.rank() + 1 == n
        && a.apply(1) == c
        && a.apply(2) == c
        && !a.images().any(|p| p == other)
        && a.parity_without(1) == Some(Parity::Even)
}

/// Membership by the structural characterizations.
///
/// Width-`t` families for `2 <= t <= n-2` fall back to a subset scan on the
/// ranks `t` and `t+1`, which have no known characterization, and `DeltaT`
/// for those `t` is decided by a cached closure.
pub fn contains(f: &FamilySpec, a: &Transformation) -> Result<bool> {
    check_degree(f, a)?;
    let n = f.n;
    let spec = f.normalized();
    Ok(match spec.tag {
        FamilyTag::FullT => true,
        FamilyTag::Sym => a.is_permutation(),
        FamilyTag::Alt => a.is_permutation() && a.sign()?.is_even(),
        FamilyTag::Pap => pap_split(a) != PapClass::NotPap,
        FamilyTag::PapPlus => pap_split(a) == PapClass::Plus,
        FamilyTag::PapMinus => pap_split(a) == PapClass::Minus,
        FamilyTag::Gamma => n == 1 || gamma_fast(a),
        FamilyTag::GammaPlus => (n == 1 || gamma_fast(a)) && pap_split(a) == PapClass::Plus,
        FamilyTag::GammaMinus => (n == 1 || gamma_fast(a)) && pap_split(a) == PapClass::Minus,
        FamilyTag::Sigma => n == 1 || sigma_fast(a),
        FamilyTag::Delta => n == 1 || (sigma_fast(a) && !script_x_fast(a)),
        FamilyTag::ScriptX => script_x_fast(a),
        FamilyTag::GammaOplus(m, _) => {
            a.is_permutation()
                && match (block_sign(a, 0, m), block_sign(a, m, n)) {
                    (Some(s1), Some(s2)) => s1 == s2,
                    _ => false,
                }
        }
        FamilyTag::OrderPreserving => is_order_preserving(a),
        FamilyTag::Monotone => is_order_preserving(a) || is_order_reversing(a),
        FamilyTag::OrientationPreserving => rotation_sorted(a, false),
        FamilyTag::Oriented => rotation_sorted(a, false) || rotation_sorted(a, true),
        FamilyTag::Bn => b_member_fast(a, 1),
        FamilyTag::BnPrime => b_member_fast(a, 2),
        FamilyTag::GammaT(t) => a.is_permutation() && width_fast(a, t)?,
        FamilyTag::SigmaT(t) => width_fast(a, t)?,
        FamilyTag::DeltaT(t) => {
            if t == 1 {
                true
            } else if t == n {
                width_fast(a, n)?
            } else {
                Oracle::shared().delta_contains(n, t, a)?
            }
        }
    })
}

/// Width-`t` evenness by the recalled periodic descriptions.
fn width_fast(a: &Transformation, t: usize) -> Result<bool> {
    let n = a.degree();
    let r = a.rank();
    if t == 1 || r < t {
        return Ok(true);
    }
    if t == n {
        return Ok(a.sign()?.is_even());
    }
    if t + 1 == n {
        return Ok(sigma_fast(a));
    }
    if r >= t + 2 {
        return Ok(match t % 4 {
            2 => is_order_preserving(a),
            3 => rotation_sorted(a, false),
            0 => is_order_preserving(a) || is_order_reversing(a),
            _ => rotation_sorted(a, false) || rotation_sorted(a, true),
        });
    }
    Oracle::shared().width_scan(a, t, false)
}

// ---------------------------------------------------------------------------
// Rank n-2 shapes

/// Fiber shape of a rank `n-2` map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rank2Shape {
    /// One fiber of size three.
    TypeA(Vec<usize>),
    /// Two fibers of size two.
    TypeB(Vec<usize>, Vec<usize>),
}

pub fn classify_rank_n_minus_2(a: &Transformation) -> Result<Rank2Shape> {
    let n = a.degree();
    if a.rank() + 2 != n {
        return Err(Error::WrongRank {
            expected: n.saturating_sub(2),
            got: a.rank(),
        });
    }
    let kernel = a.kernel();
    let big: Vec<&Vec<usize>> = kernel.nontrivial_blocks().collect();
    Ok(match big.as_slice() {
        [b] => Rank2Shape::TypeA((*b).clone()),
        [b1, b2] => Rank2Shape::TypeB((*b1).clone(), (*b2).clone()),
        _ => unreachable!("rank n-2 leaves exactly two surplus points"),
    })
}

// ---------------------------------------------------------------------------
// Definition oracle

/// Definition-based membership with work bounds and a closure cache.
pub struct Oracle {
    /// Cap on restrictions examined per element in a subset scan.
    pub work_cap: u64,
    /// Element cap for the closures behind `DeltaT`.
    pub element_cap: usize,
    /// Scan every `(n-1)`-subset for width `n-1`, not only the injective ones.
    pub paranoid: bool,
    delta_cache: Mutex<HashMap<(usize, usize), Arc<EnumeratedMonoid>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(10_000_000, DEFAULT_ELEMENT_CAP, false)
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

impl Oracle {
    pub fn new(work_cap: u64, element_cap: usize, paranoid: bool) -> Self {
        Oracle {
            work_cap,
            element_cap,
            paranoid,
            delta_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Process-wide oracle with default bounds.
    pub fn shared() -> &'static Oracle {
        static SHARED: OnceLock<Oracle> = OnceLock::new();
        SHARED.get_or_init(Oracle::default)
    }

    /// True iff every injective restriction of width `t` is even.
    pub fn width_scan(&self, a: &Transformation, t: usize, paranoid: bool) -> Result<bool> {
        let n = a.degree();
        let raw = a.raw();
        if t + 1 == n && !(paranoid || self.paranoid) {
            // the only injective (n-1)-restrictions omit a point of a kernel pair
            let r = a.rank();
            let omitted: Vec<usize> = if r == n {
                (1..=n).collect()
            } else if r + 1 == n {
                let (x, y) = kernel_pair(a).expect("rank n-1");
                vec![x, y]
            } else {
                Vec::new()
            };
            return Ok(omitted
                .into_iter()
                .all(|x| a.parity_without(x) == Some(Parity::Even)));
        }
        let subsets = binomial(n, t);
        if subsets > self.work_cap {
            return Err(Error::BudgetExceeded {
                reached: subsets,
                cap: self.work_cap,
            });
        }
        let mut idx: Vec<usize> = (0..t).collect();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(t);
        loop {
            images.clear();
            let mut injective = true;
            for &i in &idx {
                let p = raw[i];
                if seen[p as usize] {
                    injective = false;
                }
                seen[p as usize] = true;
                images.push(p);
            }
            for &p in &images {
                seen[p as usize] = false;
            }
            if injective && inversions_of(&images) % 2 == 1 {
                return Ok(false);
            }
            // next t-subset in lexicographic order
            let mut k = t;
            loop {
                if k == 0 {
                    return Ok(true);
                }
                k -= 1;
                if idx[k] < n - t + k {
                    idx[k] += 1;
                    for j in k + 1..t {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn is_pap_by_definition(a: &Transformation) -> bool {
        a.is_permutation()
            && a
                .raw()
                .windows(2)
                .all(|w| (w[0] as usize + w[1] as usize) % 2 == 1)
    }

    fn alt_by_definition(a: &Transformation) -> bool {
        a.is_permutation() && a.inversions() % 2 == 0
    }

    /// The monoid generated by the width-`t` even maps of rank at least `n-1`.
    pub fn delta_monoid(&self, n: usize, t: usize) -> Result<Arc<EnumeratedMonoid>> {
        if let Some(m) = self.delta_cache.lock().unwrap().get(&(n, t)) {
            return Ok(Arc::clone(m));
        }
        let built = Arc::new(self.build_delta(n, t)?);
        self.delta_cache
            .lock()
            .unwrap()
            .insert((n, t), Arc::clone(&built));
        Ok(built)
    }

    fn build_delta(&self, n: usize, t: usize) -> Result<EnumeratedMonoid> {
        if n > 8 {
            return Err(Error::BudgetExceeded {
                reached: n as u64,
                cap: 8,
            });
        }
        // all maps of rank >= n-1 that pass the width-t definition, units first
        let mut units = Vec::new();
        let mut singular = Vec::new();
        for a in crate::engine::all_of_rank_at_least(n, n.saturating_sub(1)) {
            if self.width_scan(&a, t, true)? {
                if a.is_permutation() {
                    units.push(a);
                } else {
                    singular.push(a);
                }
            }
        }
        // greedy pruning: keep a candidate only if the current closure misses it
        let mut gens: Vec<Transformation> = Vec::new();
        let mut current = closure(&gens, n, self.element_cap)?;
        for cand in units.into_iter().chain(singular) {
            if !current.contains(&cand) {
                gens.push(cand);
                current = closure(&gens, n, self.element_cap)?;
            }
        }
        Ok(current)
    }

    fn delta_contains(&self, n: usize, t: usize, a: &Transformation) -> Result<bool> {
        Ok(self.delta_monoid(n, t)?.contains(a))
    }

    /// Membership decided from the definitions alone.
    pub fn contains(&self, f: &FamilySpec, a: &Transformation) -> Result<bool> {
        check_degree(f, a)?;
        let n = f.n;
        let raw = a.raw();
        let width = |t: usize| self.width_scan(a, t, false);
        Ok(match f.tag {
            FamilyTag::FullT => true,
            FamilyTag::Sym => a.is_permutation(),
            FamilyTag::Alt => Self::alt_by_definition(a),
            FamilyTag::Pap => Self::is_pap_by_definition(a),
            FamilyTag::PapPlus => Self::is_pap_by_definition(a) && a.apply(1) % 2 == 1,
            FamilyTag::PapMinus => Self::is_pap_by_definition(a) && a.apply(1) % 2 == 0,
            FamilyTag::GammaT(t) => a.is_permutation() && width(t)?,
            FamilyTag::SigmaT(t) => width(t)?,
            FamilyTag::DeltaT(t) => self.delta_contains(n, t, a)?,
            FamilyTag::Gamma => n == 1 || (a.is_permutation() && width(n - 1)?),
            FamilyTag::GammaPlus => {
                Self::is_pap_by_definition(a) && a.apply(1) % 2 == 1 && Self::alt_by_definition(a)
            }
            FamilyTag::GammaMinus => {
                Self::is_pap_by_definition(a)
                    && a.apply(1) % 2 == 0
                    && !Self::alt_by_definition(a)
            }
            FamilyTag::Sigma => n == 1 || width(n - 1)?,
            FamilyTag::Delta => n == 1 || self.delta_contains(n, n - 1, a)?,
            FamilyTag::ScriptX => {
                a.rank() + 2 <= n
                    && (0..n).all(|x| (x + 1..n).all(|y| raw[x] != raw[y] || (x + y) % 2 == 0))
            }
            FamilyTag::GammaOplus(m, _) => {
                a.is_permutation()
                    && raw[..m].iter().all(|&p| (p as usize) < m)
                    && Self::alt_by_definition(a)
            }
            FamilyTag::OrderPreserving => pairwise(raw, |u, v| u <= v),
            FamilyTag::Monotone => pairwise(raw, |u, v| u <= v) || pairwise(raw, |u, v| u >= v),
            FamilyTag::OrientationPreserving => cyclic_breaks(raw, |u, v| u > v) <= 1,
            FamilyTag::Oriented => {
                cyclic_breaks(raw, |u, v| u > v) <= 1 || cyclic_breaks(raw, |u, v| u < v) <= 1
            }
            FamilyTag::Bn | FamilyTag::BnPrime => {
                let c = if f.tag == FamilyTag::Bn { 1 } else { 2 };
                a.rank() + 1 == n
                    && a.apply(1) == c
                    && a.apply(2) == c
                    && !a.images().any(|p| p == 3 - c)
                    && width(n - 1)?
            }
        })
    }
}

fn pairwise(raw: &[u8], ok: impl Fn(u8, u8) -> bool) -> bool {
    (0..raw.len()).all(|a| (a + 1..raw.len()).all(|b| ok(raw[a], raw[b])))
}

/// Number of `a` with `is_break(a·α, (a+1)·α)`, read cyclically (`n+1 = 1`).
fn cyclic_breaks(raw: &[u8], is_break: impl Fn(u8, u8) -> bool) -> usize {
    let n = raw.len();
    (0..n).filter(|&a| is_break(raw[a], raw[(a + 1) % n])).count()
}

/// Definition-based membership through the shared oracle.
pub fn oracle_contains(f: &FamilySpec, a: &Transformation) -> Result<bool> {
    Oracle::shared().contains(f, a)
}

// ---------------------------------------------------------------------------
// Explanations

/// A membership verdict with a short reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub reason: String,
}

fn fmt_set(points: &[usize]) -> String {
    let inner: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Decides membership and says which rule fired.
pub fn explain(f: &FamilySpec, a: &Transformation) -> Result<Verdict> {
    let member = contains(f, a)?;
    let n = f.n;
    let spec = f.normalized();
    let x_reason = |a: &Transformation| -> String {
        let blocks: Vec<String> = a.kernel().nontrivial_blocks().map(|b| fmt_set(b)).collect();
        if blocks.is_empty() {
            "all fibers are singletons".into()
        } else {
            format!("fibers {} are parity-monochromatic", blocks.join(","))
        }
    };
    let rank_rule = |a: &Transformation| -> String {
        let r = a.rank();
        if r + 2 <= n {
            format!("rank {r} <= n-2: no restriction of width n-1 is injective")
        } else if r + 1 == n {
            let (x, y) = kernel_pair(a).expect("rank n-1");
            if (x + y) % 2 == 0 {
                format!("kernel pair {{{x},{y}}} has even sum")
            } else {
                let rest: Vec<u8> = a
                    .raw()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i + 1 != x)
                    .map(|(_, &p)| p)
                    .collect();
                let inv = inversions_of(&rest);
                format!(
                    "kernel pair {{{x},{y}}} has odd sum; restriction to [n]\\{{{x}}} has {inv} inversions ({})",
                    Parity::of(inv)
                )
            }
        } else {
            perm_reason(a)
        }
    };
    let reason = match spec.tag {
        FamilyTag::Gamma | FamilyTag::GammaPlus | FamilyTag::GammaMinus => perm_reason(a),
        FamilyTag::Sigma => rank_rule(a),
        FamilyTag::Delta => {
            if sigma_fast(a) && script_x_fast(a) {
                x_reason(a)
            } else if a.rank() + 2 <= n {
                format!("rank {} <= n-2 with a fiber meeting both parities", a.rank())
            } else {
                rank_rule(a)
            }
        }
        FamilyTag::ScriptX => {
            if a.rank() + 2 > n {
                format!("rank {} exceeds n-2", a.rank())
            } else if member {
                x_reason(a)
            } else {
                "some fiber meets both parities".into()
            }
        }
        _ => format!("{} test", spec.tag),
    };
    Ok(Verdict { member, reason })
}

fn perm_reason(a: &Transformation) -> String {
    if !a.is_permutation() {
        return format!("rank {} < n, not a permutation", a.rank());
    }
    match pap_split(a) {
        PapClass::NotPap => "not parity-alternating".into(),
        class => {
            let sign = a.sign().expect("permutation");
            format!(
                "parity-alternating ({}), {} permutation, 1 maps to {}",
                if class == PapClass::Plus { "odd block fixed" } else { "odd block swapped" },
                sign,
                a.apply(1)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    fn fam(tag: FamilyTag, n: usize) -> FamilySpec {
        FamilySpec::new(tag, n).unwrap()
    }

    #[test]
    fn listed_memberships() {
        assert!(contains(&fam(FamilyTag::Sigma, 4), &t(&[1, 1, 3, 4])).unwrap());
        assert!(!contains(&fam(FamilyTag::Delta, 4), &t(&[1, 2, 1, 2])).unwrap());
        assert!(contains(&fam(FamilyTag::Gamma, 4), &t(&[2, 3, 4, 1])).unwrap());
        // kernel {1,3} alone: even sum
        assert!(!contains(&fam(FamilyTag::Sigma, 5), &t(&[1, 2, 1, 3, 4])).unwrap());
        assert!(oracle_contains(&fam(FamilyTag::SigmaT(1), 4), &t(&[4, 4, 1, 2])).unwrap());
        assert!(oracle_contains(&fam(FamilyTag::SigmaT(5), 5), &t(&[2, 1, 4, 3, 5])).unwrap());
        assert!(!oracle_contains(&fam(FamilyTag::GammaT(2), 6), &t(&[2, 3, 4, 5, 6, 1])).unwrap());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_rank_n_minus_2(&t(&[1, 1, 1, 2])).unwrap(),
            Rank2Shape::TypeA(vec![1, 2, 3])
        );
        assert_eq!(
            classify_rank_n_minus_2(&t(&[1, 2, 1, 2])).unwrap(),
            Rank2Shape::TypeB(vec![1, 3], vec![2, 4])
        );
        assert!(matches!(
            classify_rank_n_minus_2(&Transformation::identity(4)),
            Err(Error::WrongRank { .. })
        ));
    }

    #[test]
    fn pap_split_examples() {
        assert_eq!(pap_split(&Transformation::identity(5)), PapClass::Plus);
        assert_eq!(pap_split(&t(&[2, 1, 4, 3, 6, 5])), PapClass::Minus);
        assert_eq!(pap_split(&t(&[1, 3, 2])), PapClass::NotPap);
    }

    #[test]
    fn family_names_parse() {
        for name in ["gamma", "pap+", "sigma_t@3", "gamma_oplus@3,4", "scriptX", "bn'", "or"] {
            let tag: FamilyTag = name.parse().unwrap();
            assert_eq!(tag.to_string(), name);
        }
        assert!("nope".parse::<FamilyTag>().is_err());
        assert!(FamilySpec::new(FamilyTag::SigmaT(6), 5).is_err());
    }

    #[test]
    fn explanation_for_script_x() {
        let v = explain(&fam(FamilyTag::Delta, 4), &t(&[1, 2, 1, 2])).unwrap();
        assert!(!v.member);
        assert_eq!(v.reason, "fibers {1,3},{2,4} are parity-monochromatic");
    }
}
