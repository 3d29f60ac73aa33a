//! 2-Motzkin paths, Laguerre histories, the Francon-Viennot bijections and
//! their restrictions to the three pattern classes as weighted path diagrams.
//!
//! Step `i` of every path corresponds to the value `i` of the permutation;
//! the height of a step is the height it starts from.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::patternclass::{sum_monomials, Evolution, LetterKind, PatternClass, ReplayMode};
use crate::permstats::{classify, vincular2_at_value, Boundary, Permutation, ValueClass, Vincular2};
use crate::polyring::{MPoly, Monomial, Var};

/// Largest `n` accepted by [`path_sum`] unless a caller passes its own cap.
pub const DEFAULT_PATH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path dips below zero at step {0}")]
    Negative(usize),
    #[error("path ends at height {0}")]
    Unbalanced(usize),
    #[error("cannot parse step {0:?}")]
    Parse(String),
    #[error("{len} steps but {annotations} annotations")]
    LengthMismatch { len: usize, annotations: usize },
    #[error("annotation {value} not allowed at step {index}")]
    BadAnnotation { index: usize, value: usize },
    #[error("step {index} ({step}) not allowed in a type {kind} diagram")]
    BadStep { index: usize, step: Step, kind: DiagramKind },
    #[error("{perm} is not in class {class}")]
    NotInClass { perm: Permutation, class: PatternClass },
    #[error("expected a {expected} diagram, got {got}")]
    WrongKind { expected: DiagramKind, got: DiagramKind },
    #[error("expected a {} Laguerre history", if *.0 { "restricted" } else { "plain" })]
    WrongHistory(bool),
    #[error("n = {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Step kinds in their canonical order `U < D < Lb < Lr`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
    /// Blue level step.
    Lb,
    /// Red level step.
    Lr,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::U, Step::D, Step::Lb, Step::Lr];

    pub fn name(self) -> &'static str {
        match self {
            Step::U => "U",
            Step::D => "D",
            Step::Lb => "Lb",
            Step::Lr => "Lr",
        }
    }

    fn delta(self) -> isize {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::Lb | Step::Lr => 0,
        }
    }

    fn from_class(c: ValueClass) -> Step {
        match c {
            ValueClass::Valley => Step::U,
            ValueClass::Peak => Step::D,
            ValueClass::DoubleAscent => Step::Lb,
            ValueClass::DoubleDescent => Step::Lr,
        }
    }

    fn letter(self) -> LetterKind {
        match self {
            Step::U => LetterKind::M,
            Step::D => LetterKind::F,
            Step::Lb => LetterKind::L,
            Step::Lr => LetterKind::R,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Step {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Step::ALL
            .into_iter()
            .find(|st| st.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PathError::Parse(s.to_string()))
    }
}

/// A 2-Motzkin path: never below zero, ending at zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Motzkin2Path(Vec<Step>);

impl Motzkin2Path {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h = 0isize;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(PathError::Negative(i + 1));
            }
        }
        if h != 0 {
            return Err(PathError::Unbalanced(h as usize));
        }
        Ok(Motzkin2Path(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h_0, h_1, ..., h_n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut h = 0isize;
        out.push(0);
        for s in &self.0 {
            h += s.delta();
            out.push(h as usize);
        }
        out
    }

    /// Start heights of the steps, `h_0, ..., h_{n-1}`.
    pub fn start_heights(&self) -> Vec<usize> {
        let mut hs = self.heights();
        hs.pop();
        hs
    }

    /// All paths of length `n` in lexicographic step order.
    pub fn all(n: usize) -> Vec<Motzkin2Path> {
        Self::all_from(n, &Step::ALL, |_, _| true)
    }

    fn all_from(n: usize, alphabet: &[Step], allow: impl Fn(Step, usize) -> bool) -> Vec<Motzkin2Path> {
        fn rec(
            n: usize,
            alphabet: &[Step],
            allow: &dyn Fn(Step, usize) -> bool,
            h: usize,
            cur: &mut Vec<Step>,
            out: &mut Vec<Motzkin2Path>,
        ) {
            let remaining = n - cur.len();
            if remaining == 0 {
                if h == 0 {
                    out.push(Motzkin2Path(cur.clone()));
                }
                return;
            }
            for &s in alphabet {
                if !allow(s, h) {
                    continue;
                }
                let nh = h as isize + s.delta();
                if nh < 0 || nh as usize > remaining - 1 {
                    continue;
                }
                cur.push(s);
                rec(n, alphabet, allow, nh as usize, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, alphabet, &allow, 0, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl fmt::Display for Motzkin2Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl FromStr for Motzkin2Path {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .split([' ', ','])
            .filter(|x| !x.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        Motzkin2Path::new(steps)
    }
}

impl Serialize for Motzkin2Path {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Motzkin2Path {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A 2-Motzkin path with integers `0 <= p_i <= h_{i-1}`; in a restricted
/// history `p_i <= h_{i-1} - 1` on `D` and `Lr` steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LaguerreHistory {
    path: Motzkin2Path,
    p: Vec<usize>,
    restricted: bool,
}

impl LaguerreHistory {
    pub fn new(path: Motzkin2Path, p: Vec<usize>, restricted: bool) -> Result<Self, PathError> {
        if p.len() != path.len() {
            return Err(PathError::LengthMismatch {
                len: path.len(),
                annotations: p.len(),
            });
        }
        for (i, ((&s, h), &pi)) in path.steps().iter().zip(path.start_heights()).zip(&p).enumerate() {
            let tight = restricted && matches!(s, Step::D | Step::Lr);
            let ok = if tight { pi < h } else { pi <= h };
            if !ok {
                return Err(PathError::BadAnnotation {
                    index: i + 1,
                    value: pi,
                });
            }
        }
        Ok(LaguerreHistory { path, p, restricted })
    }

    pub fn path(&self) -> &Motzkin2Path {
        &self.path
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// Every history of length `n`: `(n+1)!` plain ones, `n!` restricted.
    pub fn all(n: usize, restricted: bool) -> Vec<LaguerreHistory> {
        let mut out = Vec::new();
        for path in Motzkin2Path::all(n) {
            let ranges = path
                .steps()
                .iter()
                .zip(path.start_heights())
                .map(|(&s, h)| {
                    let top = if restricted && matches!(s, Step::D | Step::Lr) { h } else { h + 1 };
                    0..top
                })
                .collect::<Vec<_>>();
            if ranges.iter().any(|r| r.is_empty()) {
                continue;
            }
            if ranges.is_empty() {
                out.push(LaguerreHistory { path, p: Vec::new(), restricted });
                continue;
            }
            for p in ranges.into_iter().multi_cartesian_product() {
                out.push(LaguerreHistory {
                    path: path.clone(),
                    p,
                    restricted,
                });
            }
        }
        out
    }
}

fn history_of(sigma: &Permutation, steps: usize, b: Boundary, stat: Vincular2, restricted: bool) -> LaguerreHistory {
    let classes = classify(sigma, b);
    let path = Motzkin2Path(classes[..steps].iter().map(|&c| Step::from_class(c)).collect());
    let p = (1..=steps).map(|v| vincular2_at_value(sigma, stat, v)).collect();
    LaguerreHistory { path, p, restricted }
}

/// `S_{n+1}` to plain histories of length `n`: values are classified with
/// `sigma(0) = sigma(n+2) = 0` and `p_i` is `(2-13)` at the position of `i`.
/// The empty permutation maps to the empty history.
pub fn psi_fv(sigma: &Permutation) -> LaguerreHistory {
    let steps = sigma.len().saturating_sub(1);
    history_of(sigma, steps, Boundary::Zero, Vincular2::TwoOneThree, false)
}

pub fn psi_fv_inv(h: &LaguerreHistory) -> Result<Permutation, PathError> {
    if h.restricted {
        return Err(PathError::WrongHistory(false));
    }
    let mut evo = Evolution::new(ReplayMode::Standard);
    for ((&s, ht), &p) in h.path.steps().iter().zip(h.path.start_heights()).zip(&h.p) {
        evo.insert(s.letter(), ht - p);
    }
    Ok(evo.finish_with_max().expect("balanced path leaves one slot"))
}

/// `S_n` to restricted histories of length `n`: values are classified with
/// `sigma(0) = 0, sigma(n+1) = infinity` and `p_i` is `(2-31)` at the
/// position of `i`.
pub fn phi_fv(sigma: &Permutation) -> LaguerreHistory {
    history_of(sigma, sigma.len(), Boundary::Infinity, Vincular2::TwoThreeOne, true)
}

pub fn phi_fv_inv(h: &LaguerreHistory) -> Result<Permutation, PathError> {
    if !h.restricted {
        return Err(PathError::WrongHistory(true));
    }
    let mut evo = Evolution::new(ReplayMode::RetainFinalSlot);
    for ((&s, ht), &p) in h.path.steps().iter().zip(h.path.start_heights()).zip(&h.p) {
        let idx = match s {
            Step::U | Step::Lb => ht - p,
            Step::D | Step::Lr => ht - 1 - p,
        };
        evo.insert(s.letter(), idx);
    }
    Ok(evo.finish().expect("balanced path leaves the retained slot"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DiagramKind {
    A,
    B,
    C,
}

impl DiagramKind {
    pub const ALL: [DiagramKind; 3] = [DiagramKind::A, DiagramKind::B, DiagramKind::C];

    /// The pattern class this kind of diagram encodes.
    pub fn class(self) -> PatternClass {
        match self {
            DiagramKind::A => PatternClass::A321,
            DiagramKind::B => PatternClass::B4,
            DiagramKind::C => PatternClass::A312,
        }
    }

    /// Admissible annotations of step `s` starting at height `h`, ascending.
    /// Empty when the step is forbidden there.
    pub fn choices(self, s: Step, h: usize) -> Vec<usize> {
        match self {
            DiagramKind::A => match s {
                Step::Lr => vec![],
                Step::D if h == 0 => vec![],
                Step::D => vec![h - 1],
                Step::U => vec![0],
                Step::Lb if h == 0 => vec![0],
                Step::Lb => vec![0, h],
            },
            DiagramKind::B => match s {
                Step::D if h == 1 => vec![0, 1],
                _ => vec![h],
            },
            DiagramKind::C => vec![h],
        }
    }

    /// Weight of a single step.
    pub fn step_weight(self, s: Step, h: usize, xi: usize) -> Monomial {
        let e = |x: usize| u16::try_from(x).expect("height too large");
        let m = Monomial::ONE;
        match (self, s) {
            (DiagramKind::A, Step::U) => m.with(Var::Q, e(h)).with(Var::W, 1),
            (DiagramKind::A, Step::D) => m.with(Var::P, e(h)).with(Var::T, 1),
            (DiagramKind::A, Step::Lb) => m.with(Var::P, e(xi)).with(Var::Q, e(h - xi)).with(Var::U, 1),
            (DiagramKind::A, Step::Lr) => unreachable!("type A diagrams have no red level steps"),
            (DiagramKind::B, Step::U) => m.with(Var::P, e(xi)).with(Var::W, 1).with(Var::T, 1),
            (DiagramKind::B, Step::D) => m.with(Var::P, e(xi)).with(Var::Q, e(h - xi)),
            (DiagramKind::B, Step::Lb) => m.with(Var::P, e(xi)).with(Var::U, 1),
            (DiagramKind::B, Step::Lr) => m.with(Var::P, e(xi)).with(Var::V, 1).with(Var::T, 1),
            (DiagramKind::C, Step::U) => m.with(Var::Q, e(xi)).with(Var::W, 1),
            (DiagramKind::C, Step::D) => m.with(Var::Q, e(xi)).with(Var::T, 1),
            (DiagramKind::C, Step::Lb) => m.with(Var::Q, e(xi)).with(Var::U, 1),
            (DiagramKind::C, Step::Lr) => m.with(Var::Q, e(xi)).with(Var::V, 1).with(Var::T, 1),
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for DiagramKind {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(DiagramKind::A),
            "b" => Ok(DiagramKind::B),
            "c" => Ok(DiagramKind::C),
            _ => Err(PathError::Parse(s.to_string())),
        }
    }
}

/// A path diagram of type A, B or C.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PathDiagram {
    kind: DiagramKind,
    path: Motzkin2Path,
    xi: Vec<usize>,
}

impl PathDiagram {
    pub fn new(kind: DiagramKind, path: Motzkin2Path, xi: Vec<usize>) -> Result<Self, PathError> {
        if xi.len() != path.len() {
            return Err(PathError::LengthMismatch {
                len: path.len(),
                annotations: xi.len(),
            });
        }
        for (i, ((&s, h), &x)) in path.steps().iter().zip(path.start_heights()).zip(&xi).enumerate() {
            let choices = kind.choices(s, h);
            if choices.is_empty() {
                return Err(PathError::BadStep { index: i + 1, step: s, kind });
            }
            if !choices.contains(&x) {
                return Err(PathError::BadAnnotation { index: i + 1, value: x });
            }
        }
        Ok(PathDiagram { kind, path, xi })
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn path(&self) -> &Motzkin2Path {
        &self.path
    }

    pub fn xi(&self) -> &[usize] {
        &self.xi
    }

    pub fn weight_monomial(&self) -> Monomial {
        self.path
            .steps()
            .iter()
            .zip(self.path.start_heights())
            .zip(&self.xi)
            .fold(Monomial::ONE, |acc, ((&s, h), &x)| acc * self.kind.step_weight(s, h, x))
    }

    pub fn weight(&self) -> MPoly {
        MPoly::term(self.weight_monomial(), 1)
    }

    /// All diagrams of length `n`, paths in lexicographic step order and
    /// then annotations in lexicographic order.
    pub fn all(n: usize, kind: DiagramKind) -> Vec<PathDiagram> {
        let paths = Motzkin2Path::all_from(n, &Step::ALL, |s, h| !kind.choices(s, h).is_empty());
        let mut out = Vec::new();
        for path in paths {
            let choices = path
                .steps()
                .iter()
                .zip(path.start_heights())
                .map(|(&s, h)| kind.choices(s, h))
                .collect::<Vec<_>>();
            if choices.is_empty() {
                out.push(PathDiagram { kind, path, xi: Vec::new() });
                continue;
            }
            for xi in choices.into_iter().multi_cartesian_product() {
                out.push(PathDiagram {
                    kind,
                    path: path.clone(),
                    xi,
                });
            }
        }
        out
    }
}

pub fn weight(d: &PathDiagram) -> MPoly {
    d.weight()
}

fn require_class(sigma: &Permutation, class: PatternClass) -> Result<(), PathError> {
    if class.contains_member(sigma) {
        Ok(())
    } else {
        Err(PathError::NotInClass {
            perm: sigma.clone(),
            class,
        })
    }
}

fn require_kind(d: &PathDiagram, expected: DiagramKind) -> Result<(), PathError> {
    if d.kind == expected {
        Ok(())
    } else {
        Err(PathError::WrongKind { expected, got: d.kind })
    }
}

/// `S_n(321)` to type A diagrams: the restricted history of `sigma` read
/// as a diagram.
pub fn phi1(sigma: &Permutation) -> Result<PathDiagram, PathError> {
    require_class(sigma, PatternClass::A321)?;
    let h = phi_fv(sigma);
    Ok(PathDiagram::new(DiagramKind::A, h.path, h.p).expect("321-avoiders give type A diagrams"))
}

pub fn phi1_inv(d: &PathDiagram) -> Result<Permutation, PathError> {
    require_kind(d, DiagramKind::A)?;
    let h = LaguerreHistory::new(d.path.clone(), d.xi.clone(), true)?;
    phi_fv_inv(&h)
}

/// `S_{n+1}(3124, 4123, 3142, 4132)` to type B diagrams of length `n`.
pub fn phi2(sigma: &Permutation) -> Result<PathDiagram, PathError> {
    require_class(sigma, PatternClass::B4)?;
    let h = psi_fv(sigma);
    Ok(PathDiagram::new(DiagramKind::B, h.path, h.p).expect("class members give type B diagrams"))
}

pub fn phi2_inv(d: &PathDiagram) -> Result<Permutation, PathError> {
    require_kind(d, DiagramKind::B)?;
    let h = LaguerreHistory::new(d.path.clone(), d.xi.clone(), false)?;
    psi_fv_inv(&h)
}

/// `S_{n+1}(312)` to type C diagrams of length `n`.
pub fn phi3(sigma: &Permutation) -> Result<PathDiagram, PathError> {
    require_class(sigma, PatternClass::A312)?;
    let h = psi_fv(sigma);
    Ok(PathDiagram::new(DiagramKind::C, h.path, h.p).expect("312-avoiders give type C diagrams"))
}

pub fn phi3_inv(d: &PathDiagram) -> Result<Permutation, PathError> {
    require_kind(d, DiagramKind::C)?;
    let h = LaguerreHistory::new(d.path.clone(), d.xi.clone(), false)?;
    psi_fv_inv(&h)
}

/// The class bijection for `kind`.
pub fn phi(kind: DiagramKind, sigma: &Permutation) -> Result<PathDiagram, PathError> {
    match kind {
        DiagramKind::A => phi1(sigma),
        DiagramKind::B => phi2(sigma),
        DiagramKind::C => phi3(sigma),
    }
}

pub fn phi_inv(d: &PathDiagram) -> Result<Permutation, PathError> {
    match d.kind {
        DiagramKind::A => phi1_inv(d),
        DiagramKind::B => phi2_inv(d),
        DiagramKind::C => phi3_inv(d),
    }
}

/// Total weight of all diagrams of length `n`, by exhaustive generation.
pub fn path_sum(n: usize, kind: DiagramKind, cap: usize) -> Result<MPoly, PathError> {
    if n > cap {
        return Err(PathError::CapExceeded { n, cap });
    }
    let diagrams = PathDiagram::all(n, kind);
    Ok(sum_monomials(diagrams.par_iter().map(PathDiagram::weight_monomial)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{jfraction_series, named_cf, NamedCf};
    use crate::patternclass::{class_monomial, generate_class};
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn path(s: &str) -> Motzkin2Path {
        s.parse().unwrap()
    }

    #[test]
    fn path_parsing() {
        assert_eq!(path("U D Lb Lr").to_string(), "U D Lb Lr");
        assert_eq!(path("U,Lb,D").heights(), vec![0, 1, 1, 0]);
        assert_eq!("D U".parse::<Motzkin2Path>(), Err(PathError::Negative(1)));
        assert_eq!("U".parse::<Motzkin2Path>(), Err(PathError::Unbalanced(1)));
        assert!("X".parse::<Motzkin2Path>().is_err());
    }

    #[test]
    fn motzkin_counts() {
        // 2-Motzkin paths are counted by Catalan numbers C_{n+1}.
        let counts: Vec<_> = (0..=6).map(|n| Motzkin2Path::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
        let all = Motzkin2Path::all(5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn history_counts() {
        for n in 0..=5 {
            let fact: usize = (1..=n).product();
            assert_eq!(LaguerreHistory::all(n, false).len(), fact * (n + 1));
            assert_eq!(LaguerreHistory::all(n, true).len(), fact);
        }
    }

    #[test]
    fn psi_examples() {
        let h = psi_fv(&perm("312"));
        assert_eq!(h.path().to_string(), "U D");
        assert_eq!(h.p(), &[0, 0]);
        let h = psi_fv(&perm("12"));
        assert_eq!(h.path().to_string(), "Lb");
        assert_eq!(h.p(), &[0]);
        assert_eq!(psi_fv_inv(&psi_fv(&perm("1"))).unwrap(), perm("1"));
    }

    #[test]
    fn phi_fv_examples() {
        let h = phi_fv(&perm("21"));
        assert_eq!(h.path().to_string(), "U D");
        assert_eq!(h.p(), &[0, 0]);
        assert_eq!(phi_fv(&perm("1")).path().to_string(), "Lb");
        assert_eq!(phi_fv_inv(&phi_fv(&Permutation::default())).unwrap(), Permutation::default());
    }

    #[test]
    fn fv_bijections_exhaustive() {
        for n in 0..=6 {
            let plain: BTreeSet<_> = LaguerreHistory::all(n, false).into_iter().collect();
            let images: BTreeSet<_> = Permutation::all(n + 1)
                .map(|s| {
                    let h = psi_fv(&s);
                    assert_eq!(psi_fv_inv(&h).unwrap(), s);
                    h
                })
                .collect();
            assert_eq!(images, plain, "psi n={n}");

            let restricted: BTreeSet<_> = LaguerreHistory::all(n, true).into_iter().collect();
            let images: BTreeSet<_> = Permutation::all(n)
                .map(|s| {
                    let h = phi_fv(&s);
                    assert_eq!(phi_fv_inv(&h).unwrap(), s);
                    h
                })
                .collect();
            assert_eq!(images, restricted, "phi n={n}");
        }
    }

    #[test]
    fn phi1_examples() {
        let d = phi1(&perm("21")).unwrap();
        assert_eq!((d.path().to_string(), d.xi().to_vec()), ("U D".into(), vec![0, 0]));
        assert_eq!(d.weight().to_string(), "p*t*w");
        let d = phi1(&perm("12")).unwrap();
        assert_eq!((d.path().to_string(), d.xi().to_vec()), ("Lb Lb".into(), vec![0, 0]));
        assert_eq!(d.weight().to_string(), "u^2");
        assert!(matches!(phi1(&perm("321")), Err(PathError::NotInClass { .. })));
        assert_eq!(path_sum(2, DiagramKind::A, 12).unwrap().to_string(), "p*t*w + u^2");
    }

    #[test]
    fn phi2_examples() {
        let d = phi2(&perm("213")).unwrap();
        assert_eq!((d.path().to_string(), d.xi().to_vec()), ("U D".into(), vec![0, 1]));
        assert_eq!(d.weight().to_string(), "p*t*w");
        let d = phi2(&perm("312")).unwrap();
        assert_eq!(d.xi(), &[0, 0]);
        assert_eq!(d.weight().to_string(), "q*t*w");
        assert!(phi2(&perm("31425")).is_err());
        let b2 = path_sum(2, DiagramKind::B, 12)
            .unwrap()
            .specialize(&[(Var::U, 1), (Var::V, 1), (Var::W, 1)]);
        assert_eq!(b2.to_string(), "p*t + q*t + t^2 + 2*t + 1");
    }

    #[test]
    fn phi3_examples() {
        let d = phi3(&perm("21")).unwrap();
        assert_eq!(d.path().to_string(), "Lr");
        assert_eq!(d.weight().to_string(), "t*v");
        assert_eq!(phi3(&perm("12")).unwrap().weight().to_string(), "u");
        assert_eq!(path_sum(1, DiagramKind::C, 12).unwrap().to_string(), "t*v + u");
        assert!(phi3(&perm("312")).is_err());
    }

    #[test]
    fn weights_and_small_sums() {
        let d = PathDiagram::new(DiagramKind::B, path("Lr"), vec![0]).unwrap();
        assert_eq!(d.weight().to_string(), "t*v");
        let d = PathDiagram::new(DiagramKind::A, Motzkin2Path::default(), vec![]).unwrap();
        assert!(d.weight().is_one());
        for kind in DiagramKind::ALL {
            assert!(path_sum(0, kind, 12).unwrap().is_one());
        }
        let ones = [Var::P, Var::Q, Var::T, Var::U, Var::V, Var::W].map(|v| (v, 1));
        assert_eq!(path_sum(2, DiagramKind::B, 12).unwrap().specialize(&ones), MPoly::constant(6));
        assert!(path_sum(13, DiagramKind::A, 12).is_err());
    }

    #[test]
    fn diagram_validation() {
        assert!(matches!(
            PathDiagram::new(DiagramKind::A, path("Lr"), vec![0]),
            Err(PathError::BadStep { .. })
        ));
        assert!(PathDiagram::new(DiagramKind::A, path("U Lb D"), vec![0, 1, 0]).is_ok());
        assert!(matches!(
            PathDiagram::new(DiagramKind::B, path("U U D D"), vec![0, 1, 0, 1]),
            Err(PathError::BadAnnotation { index: 3, value: 0 })
        ));
        assert!(PathDiagram::all(6, DiagramKind::A)
            .iter()
            .all(|d| !d.path().steps().contains(&Step::Lr)));
    }

    fn check_kind(kind: DiagramKind, nmax: usize) {
        let class = kind.class();
        for n in 0..=nmax {
            let size = n + class.size_shift();
            let mut images = BTreeSet::new();
            for sigma in generate_class(size, class) {
                let d = phi(kind, &sigma).unwrap();
                assert_eq!(d.weight_monomial(), class_monomial(&sigma, class), "{kind} {sigma}");
                assert_eq!(phi_inv(&d).unwrap(), sigma);
                images.insert(d);
            }
            let all: BTreeSet<_> = PathDiagram::all(n, kind).into_iter().collect();
            assert_eq!(images, all, "{kind} n={n}");
        }
    }

    #[test]
    fn class_bijections() {
        check_kind(DiagramKind::A, 7);
        check_kind(DiagramKind::B, 6);
        check_kind(DiagramKind::C, 7);
    }

    #[test]
    fn path_sums_match_continued_fractions() {
        for (kind, cf) in [
            (DiagramKind::A, NamedCf::TypeA),
            (DiagramKind::B, NamedCf::TypeB),
            (DiagramKind::C, NamedCf::TypeC),
        ] {
            let series = jfraction_series(&named_cf(cf), 7).unwrap();
            for n in 0..=7 {
                assert_eq!(path_sum(n, kind, 12).unwrap(), series.coeff(n), "{kind} n={n}");
            }
        }
    }
}
