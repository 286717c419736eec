//! Catalog of the named transformations and generating sets.
//!
//! Every element is built from an explicit case table; the degree ranges are
//! enforced and violations come back as [`Error::OutOfRange`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{CycleExpr, Transformation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementId {
    Iota,
    SigmaCycle,
    Rho,
    Theta,
    Eta,
    Zeta,
    MuN,
    MuPrimeN,
    /// `(1,3)(5,7,...,n)`, defined only for `n ≡ 7 (mod 12)`.
    NuN,
    Epsilon,
    EpsilonPrime,
    Beta1,
    Beta2,
    Beta1Prime,
    Beta2Prime,
    Beta2i,
    LambdaI,
    LambdaPrimeI,
    XiI,
    XiPrimeI,
    NuI,
    NuPrimeI,
    GammaN,
    GammaPrimeN,
    GammaDoublePrimeN,
    DeltaN,
    DeltaPrimeN,
    Pi,
    OplusLambda,
    OplusMu,
    OplusMuPrime,
}

const ALL_IDS: [ElementId; 31] = [
    ElementId::Iota,
    ElementId::SigmaCycle,
    ElementId::Rho,
    ElementId::Theta,
    ElementId::Eta,
    ElementId::Zeta,
    ElementId::MuN,
    ElementId::MuPrimeN,
    ElementId::NuN,
    ElementId::Epsilon,
    ElementId::EpsilonPrime,
    ElementId::Beta1,
    ElementId::Beta2,
    ElementId::Beta1Prime,
    ElementId::Beta2Prime,
    ElementId::Beta2i,
    ElementId::LambdaI,
    ElementId::LambdaPrimeI,
    ElementId::XiI,
    ElementId::XiPrimeI,
    ElementId::NuI,
    ElementId::NuPrimeI,
    ElementId::GammaN,
    ElementId::GammaPrimeN,
    ElementId::GammaDoublePrimeN,
    ElementId::DeltaN,
    ElementId::DeltaPrimeN,
    ElementId::Pi,
    ElementId::OplusLambda,
    ElementId::OplusMu,
    ElementId::OplusMuPrime,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Plain,
    Indexed,
    Oplus,
}

impl ElementId {
    pub fn all() -> &'static [ElementId] {
        &ALL_IDS
    }

    /// Lowercase name used in element text, e.g. `"gamma'"`.
    pub fn name(self) -> &'static str {
        use ElementId::*;
        match self {
            Iota => "iota",
            SigmaCycle => "sigma",
            Rho => "rho",
            Theta => "theta",
            Eta => "eta",
            Zeta => "zeta",
            MuN => "mu",
            MuPrimeN => "mu'",
            NuN => "nu",
            Epsilon => "epsilon",
            EpsilonPrime => "epsilon'",
            Beta1 => "beta1",
            Beta2 => "beta2",
            Beta1Prime => "beta1'",
            Beta2Prime => "beta2'",
            Beta2i => "beta2_i",
            LambdaI => "lambda_i",
            LambdaPrimeI => "lambda'_i",
            XiI => "xi_i",
            XiPrimeI => "xi'_i",
            NuI => "nu_i",
            NuPrimeI => "nu'_i",
            GammaN => "gamma",
            GammaPrimeN => "gamma'",
            GammaDoublePrimeN => "gamma''",
            DeltaN => "delta",
            DeltaPrimeN => "delta'",
            Pi => "pi",
            OplusLambda => "oplus_lambda",
            OplusMu => "oplus_mu",
            OplusMuPrime => "oplus_mu'",
        }
    }

    fn shape(self) -> Shape {
        use ElementId::*;
        match self {
            Beta2i | LambdaI | LambdaPrimeI | XiI | XiPrimeI | NuI | NuPrimeI => Shape::Indexed,
            OplusLambda | OplusMu | OplusMuPrime => Shape::Oplus,
            _ => Shape::Plain,
        }
    }

    /// The stated validity range, for error messages.
    pub fn constraint(self) -> &'static str {
        use ElementId::*;
        match self {
            Iota | SigmaCycle | Rho => "n >= 1",
            Theta => "n >= 4",
            Eta | Zeta => "odd n >= 5",
            MuN | MuPrimeN => "even n >= 4",
            NuN => "n = 7 (mod 12)",
            Epsilon | EpsilonPrime => "n >= 4",
            Beta1 | Beta2 | Beta1Prime | Beta2Prime => "n >= 5",
            Beta2i => "n >= 5 and i in {5,7,...,n} (odd n) or {6,8,...,n} (even n)",
            LambdaI | LambdaPrimeI => "n >= 4 and 3 <= i <= n",
            XiI | XiPrimeI => "n >= 4 and odd i with 3 <= i <= n",
            NuI | NuPrimeI => "n >= 4 and even i with 4 <= i <= n",
            GammaN => "n >= 4",
            GammaPrimeN => "n >= 7",
            GammaDoublePrimeN => "n >= 8",
            DeltaN => "n >= 5",
            DeltaPrimeN => "n >= 6",
            Pi => "even n >= 2",
            OplusLambda | OplusMu | OplusMuPrime => "m, n >= 2",
        }
    }
}

/// A catalog entry with its parameters. For the block-sum elements `m` and
/// `n` are the two block sizes and the degree is `m + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NamedElement {
    pub id: ElementId,
    pub n: usize,
    pub i: Option<usize>,
    pub m: Option<usize>,
}

impl NamedElement {
    pub fn of(id: ElementId, n: usize) -> Self {
        NamedElement {
            id,
            n,
            i: None,
            m: None,
        }
    }

    pub fn indexed(id: ElementId, n: usize, i: usize) -> Self {
        NamedElement {
            id,
            n,
            i: Some(i),
            m: None,
        }
    }

    pub fn oplus(id: ElementId, m: usize, n: usize) -> Self {
        NamedElement {
            id,
            n,
            i: None,
            m: Some(m),
        }
    }

    pub fn degree(&self) -> usize {
        self.n + self.m.unwrap_or(0)
    }

    fn out_of_range(&self) -> Error {
        Error::OutOfRange {
            id: self.id.name().to_string(),
            constraint: self.id.constraint(),
            got: self.to_string(),
        }
    }

    /// The transformation this entry denotes.
    pub fn build(&self) -> Result<Transformation> {
        let t = self.build_inner().ok_or_else(|| self.out_of_range())?;
        debug_assert_eq!(t.rank(), self.expected_rank());
        Ok(t)
    }

    fn expected_rank(&self) -> usize {
        use ElementId::*;
        let n = self.degree();
        match self.id {
            Epsilon | EpsilonPrime | Beta1 | Beta2 | Beta1Prime | Beta2Prime | Beta2i
            | LambdaI | LambdaPrimeI | XiI | XiPrimeI | NuI | NuPrimeI => n - 1,
            GammaN | GammaPrimeN | GammaDoublePrimeN | DeltaN | DeltaPrimeN => n - 2,
            _ => n,
        }
    }

    fn build_inner(&self) -> Option<Transformation> {
        use ElementId::*;
        let n = self.n;
        let shape_ok = match self.id.shape() {
            Shape::Plain => self.i.is_none() && self.m.is_none(),
            Shape::Indexed => self.i.is_some() && self.m.is_none(),
            Shape::Oplus => self.i.is_none() && self.m.is_some(),
        };
        if !shape_ok || n == 0 || self.degree() > crate::perm::MAX_DEGREE {
            return None;
        }
        let odd = n % 2 == 1;
        let i = self.i.unwrap_or(0);
        match self.id {
            Iota => Some(Transformation::identity(n)),
            SigmaCycle => tuple((1..=n).map(|x| if x == n { 1 } else { x + 1 })),
            Rho => tuple((1..=n).rev()),
            Theta if n >= 4 => perm(n, &[vec![1, 3], vec![2, 4]]),
            Eta if odd && n >= 5 => perm(n, &[steps(3, n), steps(2, n - 1)]),
            Zeta if odd && n >= 5 => perm(n, &[steps(1, n), steps(4, n - 1)]),
            MuN if !odd && n >= 4 => perm(n, &[steps(if n % 4 == 0 { 3 } else { 1 }, n - 1)]),
            MuPrimeN if !odd && n >= 4 => perm(n, &[steps(if n % 4 == 0 { 4 } else { 2 }, n)]),
            NuN if n % 12 == 7 => perm(n, &[vec![1, 3], steps(5, n)]),
            Epsilon if n >= 4 => tuple((1..=n).map(|x| if x == 2 { 1 } else { x })),
            EpsilonPrime if n >= 4 => tuple((1..=n).map(|x| if x == 1 { 2 } else { x })),
            Beta1 | Beta1Prime if n >= 5 => {
                let c = if self.id == Beta1 { 1 } else { 2 };
                tuple((1..=n).map(|x| match x {
                    1 | 2 => c,
                    3 => 4,
                    4 => 5,
                    5 => 3,
                    _ => x,
                }))
            }
            Beta2 | Beta2Prime if n >= 5 => {
                let c = if self.id == Beta2 { 1 } else { 2 };
                // odd n: 3..n cycles as 3->4->...->n->3; even n: 3 fixed, 4->5->...->n->4
                let start = if odd { 3 } else { 4 };
                tuple((1..=n).map(|x| match x {
                    1 | 2 => c,
                    x if x < start => x,
                    x if x == n => start,
                    x => x + 1,
                }))
            }
            Beta2i if n >= 5 => {
                let valid = if odd {
                    i % 2 == 1 && (5..=n).contains(&i)
                } else {
                    i % 2 == 0 && (6..=n).contains(&i)
                };
                if !valid {
                    return None;
                }
                let base = if odd { 3 } else { 4 };
                tuple((1..=n).map(|x| match x {
                    1 | 2 => 1,
                    x if x == base => i - 1,
                    x if x == i - 1 => i,
                    x if x == i => base,
                    _ => x,
                }))
            }
            LambdaI if n >= 4 && (3..=n).contains(&i) => tuple((1..=n).map(|x| match x {
                1 | 2 => 1,
                x if x <= i => x - 1,
                _ => x,
            })),
            LambdaPrimeI if n >= 4 && (3..=n).contains(&i) => tuple((1..=n).map(|x| match x {
                1 => 1,
                x if x < i => x + 1,
                _ => x,
            })),
            XiI if n >= 4 && i % 2 == 1 && (3..=n).contains(&i) => {
                tuple((1..=n).map(|x| match x {
                    1 | 2 => 1,
                    x if x == i => 2,
                    _ => x,
                }))
            }
            XiPrimeI if n >= 4 && i % 2 == 1 && (3..=n).contains(&i) => {
                tuple((1..=n).map(|x| match x {
                    1 => 2,
                    2 => i,
                    _ => x,
                }))
            }
            NuI if n >= 4 && i % 2 == 0 && (4..=n).contains(&i) => {
                tuple((1..=n).map(|x| match x {
                    1 | 2 => 2,
                    x if x == i => 1,
                    _ => x,
                }))
            }
            NuPrimeI if n >= 4 && i % 2 == 0 && (4..=n).contains(&i) => {
                tuple((1..=n).map(|x| match x {
                    1 => i,
                    2 => 1,
                    _ => x,
                }))
            }
            GammaN if n >= 4 => with_tail(&[1, 2, 1, 2], n),
            GammaPrimeN if n >= 7 => with_tail(&[1, 3, 1, 4, 2, 5, 2], n),
            GammaDoublePrimeN if n >= 8 => with_tail(&[3, 1, 4, 1, 5, 2, 6, 2], n),
            DeltaN if n >= 5 => with_tail(&[1, 2, 1, 3, 1], n),
            DeltaPrimeN if n >= 6 => with_tail(&[2, 1, 3, 1, 4, 1], n),
            Pi if !odd => {
                let pairs: Vec<Vec<usize>> = (1..=n).step_by(2).map(|a| vec![a, a + 1]).collect();
                perm(n, &pairs)
            }
            OplusLambda | OplusMu | OplusMuPrime => {
                let m = self.m?;
                if m < 2 || n < 2 {
                    return None;
                }
                let total = m + n;
                let block_cycle = |size: usize, offset: usize| {
                    let first = if size % 2 == 1 { 1 } else { 2 };
                    (first..=size).map(|x| x + offset).collect::<Vec<_>>()
                };
                match self.id {
                    OplusLambda => perm(total, &[vec![1, 2], vec![m + 1, m + 2]]),
                    OplusMu => perm(total, &[block_cycle(m, 0)]),
                    _ => perm(total, &[block_cycle(n, m)]),
                }
            }
            _ => None,
        }
    }
}

/// `a, a+2, a+4, ...` up to `b` inclusive.
fn steps(a: usize, b: usize) -> Vec<usize> {
    (a..=b).step_by(2).collect()
}

fn tuple<I: IntoIterator<Item = usize>>(images: I) -> Option<Transformation> {
    Transformation::new(images).ok()
}

fn perm(n: usize, cycles: &[Vec<usize>]) -> Option<Transformation> {
    CycleExpr::new(cycles.to_vec()).ok()?.eval(n).ok()
}

/// Explicit prefix, then `j ↦ j-2` for the remaining points.
fn with_tail(prefix: &[usize], n: usize) -> Option<Transformation> {
    tuple(prefix.iter().copied().chain((prefix.len() + 1..=n).map(|j| j - 2)))
}

impl fmt::Display for NamedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@", self.id.name())?;
        match (self.m, self.i) {
            (Some(m), _) => write!(f, "{m},{}", self.n),
            (None, Some(i)) => write!(f, "{}:{i}", self.n),
            (None, None) => write!(f, "{}", self.n),
        }
    }
}

impl FromStr for NamedElement {
    type Err = Error;

    /// Accepts `name@n`, `name@n:i` and `oplus_*@m,n`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = s.split_once('@').ok_or_else(|| Error::Parse {
            position: s.len(),
            message: "expected `name@degree`".into(),
        })?;
        let id = ElementId::all()
            .iter()
            .copied()
            .find(|id| id.name() == name.trim())
            .ok_or_else(|| Error::UnknownName(name.trim().to_string()))?;
        let offset = name.len() + 1;
        let num = |text: &str, at: usize| -> Result<usize> {
            text.trim().parse().map_err(|_| Error::Parse {
                position: offset + at,
                message: format!("expected a number, found `{text}`"),
            })
        };
        let element = match id.shape() {
            Shape::Plain => NamedElement::of(id, num(params, 0)?),
            Shape::Indexed => {
                let (n, i) = params.split_once(':').ok_or_else(|| Error::Parse {
                    position: s.len(),
                    message: format!("`{}` needs an index: `{}@n:i`", id.name(), id.name()),
                })?;
                NamedElement::indexed(id, num(n, 0)?, num(i, n.len() + 1)?)
            }
            Shape::Oplus => {
                let (m, n) = params.split_once(',').ok_or_else(|| Error::Parse {
                    position: s.len(),
                    message: format!("`{}` needs two block sizes: `{}@m,n`", id.name(), id.name()),
                })?;
                NamedElement::oplus(id, num(m, 0)?, num(n, m.len() + 1)?)
            }
        };
        Ok(element)
    }
}

/// Families with a catalogued minimal generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratingFamily {
    GammaGroup,
    DeltaMonoid,
    SigmaMonoid,
    GammaOplus,
    Bn,
    BnPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratingSetSpec {
    pub family: GeneratingFamily,
    pub n: usize,
    /// First block size, only for [`GeneratingFamily::GammaOplus`].
    pub m: Option<usize>,
    /// For odd `n`, use `{θ_n, ζ_n}` instead of `{θ_n, η_n}`.
    pub zeta_variant: bool,
}

impl GeneratingSetSpec {
    pub fn new(family: GeneratingFamily, n: usize) -> Self {
        GeneratingSetSpec {
            family,
            n,
            m: None,
            zeta_variant: false,
        }
    }

    pub fn oplus(m: usize, n: usize) -> Self {
        GeneratingSetSpec {
            family: GeneratingFamily::GammaOplus,
            n,
            m: Some(m),
            zeta_variant: false,
        }
    }

    pub fn with_zeta(mut self) -> Self {
        self.zeta_variant = true;
        self
    }

    pub fn degree(&self) -> usize {
        self.n + self.m.unwrap_or(0)
    }
}

/// A generator with a printable label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub element: Transformation,
}

fn named(id: ElementId, n: usize) -> Result<Generator> {
    let e = NamedElement::of(id, n);
    Ok(Generator {
        label: e.to_string(),
        element: e.build()?,
    })
}

fn literal(t: Transformation) -> Generator {
    Generator {
        label: t.to_string(),
        element: t,
    }
}

fn cycles_gen(n: usize, cycles: &[Vec<usize>]) -> Generator {
    let c = CycleExpr::new(cycles.to_vec()).expect("disjoint cycles");
    Generator {
        label: c.to_string(),
        element: c.eval(n).expect("points in range"),
    }
}

/// The minimal generating set for `spec`, with labels.
pub fn labeled_generating_set(spec: &GeneratingSetSpec) -> Result<Vec<Generator>> {
    use ElementId::*;
    let n = spec.n;
    let out_of_range = |constraint: &'static str| Error::OutOfRange {
        id: format!("{:?}", spec.family),
        constraint,
        got: format!("n = {}", spec.degree()),
    };
    if n == 0 || spec.degree() > crate::perm::MAX_DEGREE {
        return Err(Error::BadDegree(spec.degree()));
    }
    match spec.family {
        GeneratingFamily::GammaGroup => Ok(match n {
            1 | 3 => Vec::new(),
            2 => vec![cycles_gen(2, &[vec![1, 2]])],
            4 => vec![named(SigmaCycle, 4)?],
            7 => vec![
                cycles_gen(7, &[vec![1, 3], vec![2, 4]]),
                cycles_gen(7, &[vec![3, 5, 7]]),
                cycles_gen(7, &[vec![2, 4, 6]]),
            ],
            _ if n % 2 == 1 => {
                let second = if spec.zeta_variant { Zeta } else { Eta };
                vec![named(Theta, n)?, named(second, n)?]
            }
            _ => vec![named(Theta, n)?, named(SigmaCycle, n)?],
        }),
        GeneratingFamily::DeltaMonoid => {
            let lit = |v: &[usize]| literal(Transformation::new(v.iter().copied()).unwrap());
            match n {
                1 => Ok(Vec::new()),
                2 => Ok(vec![cycles_gen(2, &[vec![1, 2]]), lit(&[1, 1])]),
                3 => Ok(vec![lit(&[1, 2, 2]), lit(&[1, 1, 3]), lit(&[2, 3, 3])]),
                _ => {
                    let mut gens = labeled_generating_set(&GeneratingSetSpec {
                        family: GeneratingFamily::GammaGroup,
                        ..*spec
                    })?;
                    gens.push(named(Epsilon, n)?);
                    if n % 2 == 1 {
                        gens.push(named(EpsilonPrime, n)?);
                    }
                    Ok(gens)
                }
            }
        }
        GeneratingFamily::SigmaMonoid => {
            let mut gens = labeled_generating_set(&GeneratingSetSpec {
                family: GeneratingFamily::DeltaMonoid,
                ..*spec
            })?;
            let extra: &[ElementId] = match n {
                1..=3 => &[],
                4 => &[GammaN],
                5 | 6 => &[GammaN, DeltaN],
                7 => &[GammaN, GammaPrimeN, DeltaN, DeltaPrimeN],
                _ if n % 2 == 0 => &[GammaN, GammaPrimeN, DeltaN],
                _ => &[GammaN, GammaPrimeN, GammaDoublePrimeN, DeltaN, DeltaPrimeN],
            };
            for &id in extra {
                gens.push(named(id, n)?);
            }
            Ok(gens)
        }
        GeneratingFamily::GammaOplus => {
            let m = spec.m.ok_or_else(|| out_of_range("m, n >= 2"))?;
            if m < 2 || n < 2 {
                return Err(out_of_range("m, n >= 2"));
            }
            let build = |id| -> Result<Generator> {
                let e = NamedElement::oplus(id, m, n);
                Ok(Generator {
                    label: e.to_string(),
                    element: e.build()?,
                })
            };
            let lambda = build(OplusLambda)?;
            if m == 2 && n == 2 {
                return Ok(vec![lambda]);
            }
            let mu = build(OplusMu)?;
            let mu_prime = build(OplusMuPrime)?;
            let order = |k: usize| if k % 2 == 1 { k } else { k - 1 };
            if gcd(order(m), order(n)) == 1 {
                let product = Generator {
                    label: format!("{}*{}", mu.label, mu_prime.label),
                    element: &mu.element * &mu_prime.element,
                };
                Ok(vec![lambda, product])
            } else {
                Ok(vec![lambda, mu, mu_prime])
            }
        }
        GeneratingFamily::Bn | GeneratingFamily::BnPrime => {
            if n < 5 {
                return Err(out_of_range("n >= 5"));
            }
            if spec.family == GeneratingFamily::Bn {
                Ok(vec![named(Beta1, n)?, named(Beta2, n)?])
            } else {
                Ok(vec![named(Beta1Prime, n)?, named(Beta2Prime, n)?])
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn generating_set(spec: &GeneratingSetSpec) -> Result<Vec<Transformation>> {
    Ok(labeled_generating_set(spec)?
        .into_iter()
        .map(|g| g.element)
        .collect())
}

/// A word over catalog elements, cycle expressions and literal maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordExpr {
    Named(NamedElement),
    Cycles(CycleExpr),
    Literal(Transformation),
    Product(Vec<WordExpr>),
    Power(Box<WordExpr>, i64),
}

impl WordExpr {
    pub fn eval(&self, n: usize) -> Result<Transformation> {
        match self {
            WordExpr::Named(e) => {
                let t = e.build()?;
                if t.degree() != n {
                    return Err(Error::DegreeMismatch {
                        left: n,
                        right: t.degree(),
                    });
                }
                Ok(t)
            }
            WordExpr::Cycles(c) => c.eval(n),
            WordExpr::Literal(t) => {
                if t.degree() != n {
                    return Err(Error::DegreeMismatch {
                        left: n,
                        right: t.degree(),
                    });
                }
                Ok(t.clone())
            }
            WordExpr::Product(factors) => {
                let mut acc = Transformation::identity(n);
                for f in factors {
                    acc = acc.compose(&f.eval(n)?)?;
                }
                Ok(acc)
            }
            WordExpr::Power(base, k) => base.eval(n)?.pow(*k),
        }
    }

    fn pow(self, k: i64) -> WordExpr {
        WordExpr::Power(Box::new(self), k)
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Named(e) => f.write_str(e.id.name()).and_then(|_| match e.i {
                Some(i) => write!(f, "[{i}]"),
                None => Ok(()),
            }),
            WordExpr::Cycles(c) => write!(f, "{c}"),
            WordExpr::Literal(t) => write!(f, "{t}"),
            WordExpr::Product(factors) => {
                for (k, factor) in factors.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
            WordExpr::Power(base, k) => match **base {
                WordExpr::Product(_) => write!(f, "({base})^{k}"),
                _ => write!(f, "{base}^{k}"),
            },
        }
    }
}

/// An executable identity: `word` evaluated at degree `n` should equal
/// `expected`, which is built without reference to the word.
#[derive(Debug, Clone)]
pub struct WordIdentity {
    pub label: &'static str,
    pub n: usize,
    pub word: WordExpr,
    pub expected: Transformation,
}

impl WordIdentity {
    pub fn holds(&self) -> Result<bool> {
        Ok(self.word.eval(self.n)? == self.expected)
    }
}

fn at(id: ElementId, n: usize) -> WordExpr {
    WordExpr::Named(NamedElement::of(id, n))
}

fn at_i(id: ElementId, n: usize, i: usize) -> WordExpr {
    WordExpr::Named(NamedElement::indexed(id, n, i))
}

fn cyc(points: Vec<usize>) -> WordExpr {
    WordExpr::Cycles(CycleExpr::new(vec![points]).expect("distinct points"))
}

fn cycs(cycles: Vec<Vec<usize>>) -> WordExpr {
    WordExpr::Cycles(CycleExpr::new(cycles).expect("disjoint cycles"))
}

fn prod(factors: Vec<WordExpr>) -> WordExpr {
    WordExpr::Product(factors)
}

fn lit(images: &[usize]) -> WordExpr {
    WordExpr::Literal(Transformation::new(images.iter().copied()).expect("valid tuple"))
}

fn elem(id: ElementId, n: usize) -> Transformation {
    NamedElement::of(id, n).build().expect("in range")
}

fn elem_i(id: ElementId, n: usize, i: usize) -> Transformation {
    NamedElement::indexed(id, n, i).build().expect("in range")
}

/// Product of possibly overlapping cycles, left to right.
fn cycle_product(n: usize, cycles: &[Vec<usize>]) -> Transformation {
    cycles.iter().fold(Transformation::identity(n), |acc, c| {
        &acc * &CycleExpr::new(vec![c.clone()]).unwrap().eval(n).unwrap()
    })
}

/// Every catalogued generation identity whose guard admits `n`.
pub fn word_identities(n: usize) -> Vec<WordIdentity> {
    use ElementId::*;
    let mut out = Vec::new();
    let mut push = |label: &'static str, word: WordExpr, expected: Transformation| {
        out.push(WordIdentity {
            label,
            n,
            word,
            expected,
        })
    };
    let odd = n % 2 == 1;
    let ni = n as i64;

    if odd && n >= 5 {
        push(
            "eta theta = zeta",
            prod(vec![at(Eta, n), at(Theta, n)]),
            elem(Zeta, n),
        );
        push(
            "zeta theta = eta",
            prod(vec![at(Zeta, n), at(Theta, n)]),
            elem(Eta, n),
        );
    }

    if n % 4 == 3 && n >= 7 {
        let inner = || {
            prod(vec![
                prod(vec![at(Eta, n), at(Zeta, n).pow((ni - 3) / 2), at(Eta, n)]).pow((ni - 3) / 4),
                at(Eta, n),
            ])
        };
        let odd_cycle = steps(3, n);
        let expected = match n % 12 {
            3 => cycle_product(n, &[odd_cycle.clone()]),
            7 => cycle_product(n, &[vec![1, n, 3], odd_cycle.clone()]),
            _ => cycle_product(n, &[vec![1, 3, n], odd_cycle.clone()]),
        };
        push("(eta zeta^((n-3)/2) eta)^((n-3)/4) eta", inner(), expected);
        if n % 12 == 11 {
            push(
                "theta (eta zeta^((n-3)/2) eta)^((n-3)/4) eta theta = (3,5,...,n)",
                prod(vec![at(Theta, n), inner(), at(Theta, n)]),
                cycle_product(n, &[odd_cycle.clone()]),
            );
        }
        if n % 12 == 7 {
            push("nu = (eta zeta^((n-3)/2) eta)^((n-3)/4) eta", inner(), elem(NuN, n));
            let target = if n == 7 {
                Transformation::identity(n)
            } else {
                cycle_product(n, &[odd_cycle.clone()])
            };
            let h = (ni - 5) / 2;
            push(
                "eta^4 nu^((n-5)/2) eta^((n-5)/2) nu^3 eta^((n-5)/2) nu^((n-5)/2)",
                prod(vec![
                    at(Eta, n).pow(4),
                    at(NuN, n).pow(h),
                    at(Eta, n).pow(h),
                    at(NuN, n).pow(3),
                    at(Eta, n).pow(h),
                    at(NuN, n).pow(h),
                ]),
                target.clone(),
            );
            push(
                "eta^4 nu^-1 eta^-2 nu^3 eta^-2 nu^-1",
                prod(vec![
                    at(Eta, n).pow(4),
                    at(NuN, n).pow(-1),
                    at(Eta, n).pow(-2),
                    at(NuN, n).pow(3),
                    at(Eta, n).pow(-2),
                    at(NuN, n).pow(-1),
                ]),
                target,
            );
        }
    }

    if !odd && n % 4 == 2 && n >= 6 {
        let sigma = || at(SigmaCycle, n);
        let theta = || at(Theta, n);
        push(
            "mu = (sigma^-1 (theta sigma theta sigma^(n-3))^((n-4)/2) sigma^(n-3))^((n-2)/4)",
            prod(vec![
                sigma().pow(-1),
                prod(vec![theta(), sigma(), theta(), sigma().pow(ni - 3)]).pow((ni - 4) / 2),
                sigma().pow(ni - 3),
            ])
            .pow((ni - 2) / 4),
            elem(MuN, n),
        );
        push(
            "mu' = mu^-1 sigma^2",
            prod(vec![at(MuN, n).pow(-1), sigma().pow(2)]),
            elem(MuPrimeN, n),
        );
    }
    if !odd && n % 4 == 0 && n >= 4 {
        let sigma = || at(SigmaCycle, n);
        let theta = || at(Theta, n);
        push(
            "mu = ((sigma^(n-3) theta sigma theta)^((n-6)/2) sigma^(n-6))^((n-4)/4)",
            prod(vec![
                prod(vec![sigma().pow(ni - 3), theta(), sigma(), theta()]).pow((ni - 6) / 2),
                sigma().pow(ni - 6),
            ])
            .pow((ni - 4) / 4),
            elem(MuN, n),
        );
        push(
            "mu' = mu^-1 sigma^2 theta",
            prod(vec![at(MuN, n).pow(-1), sigma().pow(2), theta()]),
            elem(MuPrimeN, n),
        );
    }

    if n >= 5 {
        let eps = || at(Epsilon, n);
        let eps_p = || at(EpsilonPrime, n);
        push(
            "beta1 = epsilon (1,5,3) epsilon' (2,4)(3,5) epsilon (1,5,3)",
            prod(vec![
                eps(),
                cyc(vec![1, 5, 3]),
                eps_p(),
                cycs(vec![vec![2, 4], vec![3, 5]]),
                eps(),
                cyc(vec![1, 5, 3]),
            ]),
            elem(Beta1, n),
        );
        let indices: Vec<usize> = if odd { steps(5, n) } else { steps(6, n) };
        for &i in &indices {
            let word = if odd {
                prod(vec![
                    eps(),
                    cyc(vec![1, i, 3]),
                    eps_p(),
                    cycs(vec![vec![2, i - 1], vec![3, i]]),
                    eps(),
                    cyc(vec![1, i, 3]),
                ])
            } else {
                prod(vec![
                    eps(),
                    cyc(vec![1, 3, i - 1]),
                    eps_p(),
                    cyc(vec![2, i, 4]),
                    eps(),
                    cyc(vec![1, i - 1, 3]),
                ])
            };
            push("beta2_i = epsilon c1 epsilon' c2 epsilon c3", word, elem_i(Beta2i, n, i));
        }
        push(
            "beta2 = product of beta2_i",
            prod(indices.iter().map(|&i| at_i(Beta2i, n, i)).collect()),
            elem(Beta2, n),
        );
        push(
            "beta1' = beta1 epsilon'",
            prod(vec![at(Beta1, n), eps_p()]),
            elem(Beta1Prime, n),
        );
        push(
            "beta2' = beta2 epsilon'",
            prod(vec![at(Beta2, n), eps_p()]),
            elem(Beta2Prime, n),
        );
        push(
            "lambda_3 = epsilon (1,5,3) epsilon' (1,3,5)",
            prod(vec![eps(), cyc(vec![1, 5, 3]), eps_p(), cyc(vec![1, 3, 5])]),
            elem_i(LambdaI, n, 3),
        );
        for i in 4..=n {
            let word = if i % 2 == 0 {
                let c = cycs(vec![vec![1, i - 1], vec![2, i]]);
                prod(vec![at_i(LambdaI, n, i - 1), c.clone(), eps(), c])
            } else {
                let c = cycs(vec![vec![1, i], vec![2, i - 1]]);
                prod(vec![at_i(LambdaI, n, i - 1), c.clone(), eps_p(), c])
            };
            push("lambda_i from lambda_(i-1)", word, elem_i(LambdaI, n, i));
        }
        for i in steps(4, n) {
            let c = cycs(vec![vec![2, i], vec![3, 5]]);
            push(
                "nu_i = epsilon' (2,i)(3,5) epsilon (2,i)(3,5)",
                prod(vec![eps_p(), c.clone(), eps(), c]),
                elem_i(NuI, n, i),
            );
        }
    }

    if !odd && n >= 6 {
        let eps = || at(Epsilon, n);
        let sigma = || at(SigmaCycle, n);
        let mut c1 = vec![1];
        c1.extend(steps(5, n - 1));
        push(
            "beta1 = (epsilon sigma^-1)^2 epsilon (1,5,7,...,n-1)(4,6,...,n)",
            prod(vec![
                prod(vec![eps(), sigma().pow(-1)]).pow(2),
                eps(),
                cycs(vec![c1, steps(4, n)]),
            ]),
            elem(Beta1, n),
        );
        let mut long = vec![1, n];
        long.extend(3..n);
        long.push(2);
        push(
            "beta2 = (epsilon (1,n,3,4,...,n-1,2))^(n-4) epsilon (1,3,...,n-1)^2 (4,6,...,n)^2",
            prod(vec![
                prod(vec![eps(), cyc(long)]).pow(ni - 4),
                eps(),
                cyc(steps(1, n - 1)).pow(2),
                cyc(steps(4, n)).pow(2),
            ]),
            elem(Beta2, n),
        );
        for i in 3..=n {
            let k = i as i64 - 2;
            push(
                "lambda_i = epsilon (sigma^-1 epsilon)^(i-2) sigma^(i-2)",
                prod(vec![
                    eps(),
                    prod(vec![sigma().pow(-1), eps()]).pow(k),
                    sigma().pow(k),
                ]),
                elem_i(LambdaI, n, i),
            );
        }
    }

    if !odd && n >= 4 {
        push(
            "epsilon' = (epsilon sigma^-1)^(n-1)",
            prod(vec![at(Epsilon, n), at(SigmaCycle, n).pow(-1)]).pow(ni - 1),
            elem(EpsilonPrime, n),
        );
        push(
            "epsilon = (epsilon' sigma)^(n-1)",
            prod(vec![at(EpsilonPrime, n), at(SigmaCycle, n)]).pow(ni - 1),
            elem(Epsilon, n),
        );
    }

    if n == 4 {
        let eps = || at(Epsilon, 4);
        let sigma = || at(SigmaCycle, 4);
        let t = |v: &[usize]| Transformation::new(v.iter().copied()).unwrap();
        push(
            "[1,1,2,4] = epsilon sigma^-1 epsilon sigma",
            prod(vec![eps(), sigma().pow(-1), eps(), sigma()]),
            t(&[1, 1, 2, 4]),
        );
        push(
            "[1,1,2,3] = (epsilon sigma^-1)^2 epsilon sigma^2",
            prod(vec![prod(vec![eps(), sigma().pow(-1)]).pow(2), eps(), sigma().pow(2)]),
            t(&[1, 1, 2, 3]),
        );
        push(
            "[1,1,2,3] [1,3,4,4] [1,1,2,3] = [1,1,2,3]",
            prod(vec![lit(&[1, 1, 2, 3]), lit(&[1, 3, 4, 4]), lit(&[1, 1, 2, 3])]),
            t(&[1, 1, 2, 3]),
        );
        push(
            "[1,1,2,4] [1,3,4,4] [1,1,2,4] = [1,1,2,4]",
            prod(vec![lit(&[1, 1, 2, 4]), lit(&[1, 3, 4, 4]), lit(&[1, 1, 2, 4])]),
            t(&[1, 1, 2, 4]),
        );
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ElementId::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn displayed_definitions() {
        assert_eq!(NamedElement::of(Epsilon, 4).build().unwrap(), t(&[1, 1, 3, 4]));
        assert_eq!(NamedElement::of(EpsilonPrime, 5).build().unwrap(), t(&[2, 2, 3, 4, 5]));
        assert_eq!(NamedElement::of(GammaN, 5).build().unwrap(), t(&[1, 2, 1, 2, 3]));
        assert_eq!(
            NamedElement::of(GammaPrimeN, 8).build().unwrap(),
            t(&[1, 3, 1, 4, 2, 5, 2, 6])
        );
        assert_eq!(
            NamedElement::of(GammaDoublePrimeN, 9).build().unwrap(),
            t(&[3, 1, 4, 1, 5, 2, 6, 2, 7])
        );
        assert_eq!(NamedElement::of(DeltaN, 6).build().unwrap(), t(&[1, 2, 1, 3, 1, 4]));
        assert_eq!(NamedElement::of(DeltaPrimeN, 7).build().unwrap(), t(&[2, 1, 3, 1, 4, 1, 5]));
        assert_eq!(NamedElement::of(Beta1, 6).build().unwrap(), t(&[1, 1, 4, 5, 3, 6]));
        assert_eq!(NamedElement::of(Beta2, 7).build().unwrap(), t(&[1, 1, 4, 5, 6, 7, 3]));
        assert_eq!(NamedElement::of(Beta2, 6).build().unwrap(), t(&[1, 1, 3, 5, 6, 4]));
        assert_eq!(NamedElement::of(Beta2Prime, 6).build().unwrap(), t(&[2, 2, 3, 5, 6, 4]));
        assert_eq!(
            NamedElement::indexed(Beta2i, 9, 7).build().unwrap(),
            t(&[1, 1, 6, 4, 5, 7, 3, 8, 9])
        );
        assert_eq!(
            NamedElement::indexed(Beta2i, 8, 8).build().unwrap(),
            t(&[1, 1, 3, 7, 5, 6, 8, 4])
        );
        assert_eq!(NamedElement::indexed(LambdaI, 6, 4).build().unwrap(), t(&[1, 1, 2, 3, 5, 6]));
        assert_eq!(
            NamedElement::indexed(LambdaPrimeI, 6, 4).build().unwrap(),
            t(&[1, 3, 4, 4, 5, 6])
        );
        assert_eq!(NamedElement::indexed(XiI, 6, 5).build().unwrap(), t(&[1, 1, 3, 4, 2, 6]));
        assert_eq!(NamedElement::indexed(XiPrimeI, 6, 5).build().unwrap(), t(&[2, 5, 3, 4, 5, 6]));
        assert_eq!(NamedElement::indexed(NuI, 6, 4).build().unwrap(), t(&[2, 2, 3, 1, 5, 6]));
        assert_eq!(NamedElement::indexed(NuPrimeI, 6, 4).build().unwrap(), t(&[4, 1, 3, 4, 5, 6]));
        assert_eq!(NamedElement::of(Pi, 4).build().unwrap(), t(&[2, 1, 4, 3]));
    }

    #[test]
    fn zeta_nine_from_cycles() {
        let expected = CycleExpr::new(vec![vec![1, 3, 5, 7, 9], vec![4, 6, 8]])
            .unwrap()
            .eval(9)
            .unwrap();
        assert_eq!(NamedElement::of(Zeta, 9).build().unwrap(), expected);
    }

    #[test]
    fn ranges_are_enforced() {
        assert!(matches!(
            NamedElement::of(DeltaPrimeN, 5).build(),
            Err(Error::OutOfRange { .. })
        ));
        assert!(NamedElement::of(GammaPrimeN, 4).build().is_err());
        assert!(NamedElement::of(Eta, 6).build().is_err());
        assert!(NamedElement::of(NuN, 11).build().is_err());
        assert!(NamedElement::indexed(Beta2i, 9, 6).build().is_err());
        assert!(NamedElement::indexed(XiI, 9, 4).build().is_err());
        assert!(NamedElement::of(LambdaI, 9).build().is_err());
    }

    #[test]
    fn oplus_elements() {
        let mu = NamedElement::oplus(OplusMu, 5, 4).build().unwrap();
        assert_eq!(mu.order().unwrap(), 5);
        let mu_p = NamedElement::oplus(OplusMuPrime, 5, 4).build().unwrap();
        assert_eq!(mu_p.to_vec(), vec![1, 2, 3, 4, 5, 6, 8, 9, 7]);
        let lambda = NamedElement::oplus(OplusLambda, 2, 2).build().unwrap();
        assert_eq!(lambda.to_vec(), vec![2, 1, 4, 3]);
    }

    #[test]
    fn name_round_trip() {
        for text in ["epsilon@6", "gamma'@8", "lambda_i@9:5", "oplus_mu'@5,4", "beta2_i@9:5"] {
            let e: NamedElement = text.parse().unwrap();
            assert_eq!(e.to_string(), text);
        }
        assert!(matches!(
            "bogus@4".parse::<NamedElement>(),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn generating_set_sizes() {
        let size = |family, n| generating_set(&GeneratingSetSpec::new(family, n)).unwrap().len();
        use GeneratingFamily::*;
        assert_eq!(size(GammaGroup, 4), 1);
        assert_eq!(size(GammaGroup, 7), 3);
        assert_eq!(size(GammaGroup, 10), 2);
        assert_eq!(size(DeltaMonoid, 3), 3);
        assert_eq!(size(DeltaMonoid, 4), 2);
        assert_eq!(size(DeltaMonoid, 7), 5);
        assert_eq!(size(SigmaMonoid, 5), 6);
        assert_eq!(size(SigmaMonoid, 8), 6);
        assert_eq!(size(SigmaMonoid, 9), 9);
        let g10 = generating_set(&GeneratingSetSpec::new(GammaGroup, 10)).unwrap();
        assert_eq!(g10[0], NamedElement::of(Theta, 10).build().unwrap());
        assert_eq!(g10[1], NamedElement::of(SigmaCycle, 10).build().unwrap());
    }

    #[test]
    fn identities_hold_to_thirteen() {
        for n in 1..=13 {
            for id in word_identities(n) {
                assert!(id.holds().unwrap(), "n={n}: {} [{}]", id.label, id.word);
            }
        }
    }
}
