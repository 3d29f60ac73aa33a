//! Permutations, boundary-dependent local statistics, vincular pattern
//! counts and classical pattern containment.
//!
//! Positions and values are 1-based throughout, matching one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..{n}: {word:?}")]
    NotBijective { n: usize, word: Vec<usize> },
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("need 1 <= k < l <= {n}, got k={k}, l={l}")]
    BadPair { k: usize, l: usize, n: usize },
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(PermError::NotBijective { n, word });
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Permutation)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `sigma(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `positions()[v]` is the position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &x) in self.0.iter().enumerate() {
            pos[x] = i + 1;
        }
        pos
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("value out of range") + 1
    }

    /// The word padded with `sigma(0) = 0` and the given right boundary.
    fn padded(&self, b: Boundary) -> Vec<usize> {
        let n = self.len();
        let right = match b {
            Boundary::Zero => 0,
            Boundary::Infinity => usize::MAX,
            Boundary::NPlusOne => n + 1,
        };
        let mut ext = Vec::with_capacity(n + 2);
        ext.push(0);
        ext.extend_from_slice(&self.0);
        ext.push(right);
        ext
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

/// Accepts `472589316` (single digits) or `10,1,2,...`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PermError::Parse(s.to_string());
        let word: Vec<usize> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(word).map_err(serde::de::Error::custom)
    }
}

/// Value appended after `sigma(n)`; the left boundary is always `sigma(0) = 0`.
///
/// There is deliberately no `Default`: every caller names its convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// `sigma(n+1) = 0`
    Zero,
    /// `sigma(n+1) = infinity`
    Infinity,
    /// `sigma(n+1) = n+1`
    NPlusOne,
}

impl FromStr for Boundary {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" | "0" => Ok(Boundary::Zero),
            "inf" | "infinity" => Ok(Boundary::Infinity),
            "nplus1" | "n+1" => Ok(Boundary::NPlusOne),
            _ => Err(format!("unknown boundary {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueClass {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

/// Class of every value; entry `v - 1` describes value `v`.
pub fn classify(sigma: &Permutation, b: Boundary) -> Vec<ValueClass> {
    let ext = sigma.padded(b);
    let mut out = vec![ValueClass::Peak; sigma.len()];
    for i in 1..=sigma.len() {
        let (prev, x, next) = (ext[i - 1], ext[i], ext[i + 1]);
        out[x - 1] = match (prev < x, x < next) {
            (true, false) => ValueClass::Peak,
            (false, true) => ValueClass::Valley,
            (true, true) => ValueClass::DoubleAscent,
            (false, false) => ValueClass::DoubleDescent,
        };
    }
    out
}

/// Peak, valley, double-ascent and double-descent value sets. Under
/// [`Boundary::Infinity`] these are the `Lpk`, `Lval`, `Lda`, `Ldd` sets.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LocalStats {
    pub peaks: BTreeSet<usize>,
    pub valleys: BTreeSet<usize>,
    pub double_ascents: BTreeSet<usize>,
    pub double_descents: BTreeSet<usize>,
}

impl LocalStats {
    pub fn pk(&self) -> usize {
        self.peaks.len()
    }
    pub fn val(&self) -> usize {
        self.valleys.len()
    }
    pub fn da(&self) -> usize {
        self.double_ascents.len()
    }
    pub fn dd(&self) -> usize {
        self.double_descents.len()
    }
}

pub fn local_stats(sigma: &Permutation, b: Boundary) -> LocalStats {
    let mut s = LocalStats::default();
    for (i, c) in classify(sigma, b).into_iter().enumerate() {
        let set = match c {
            ValueClass::Peak => &mut s.peaks,
            ValueClass::Valley => &mut s.valleys,
            ValueClass::DoubleAscent => &mut s.double_ascents,
            ValueClass::DoubleDescent => &mut s.double_descents,
        };
        set.insert(i + 1);
    }
    s
}

/// Number of `i < n` with `sigma(i) > sigma(i+1)`.
pub fn des(sigma: &Permutation) -> usize {
    sigma.0.windows(2).filter(|w| w[0] > w[1]).count()
}

/// The four two-block vincular patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vincular2 {
    /// `31-2`: `#{j : 1 < j < i, sigma(j) < sigma(i) < sigma(j-1)}`
    #[serde(rename = "31-2")]
    ThreeOneTwo,
    /// `2-31`: `#{j : i < j < n, sigma(j+1) < sigma(i) < sigma(j)}`
    #[serde(rename = "2-31")]
    TwoThreeOne,
    /// `2-13`: `#{j : i < j < n, sigma(j) < sigma(i) < sigma(j+1)}`
    #[serde(rename = "2-13")]
    TwoOneThree,
    /// `13-2`: `#{j : 1 < j < i, sigma(j-1) < sigma(i) < sigma(j)}`
    #[serde(rename = "13-2")]
    OneThreeTwo,
}

impl Vincular2 {
    pub const ALL: [Vincular2; 4] = [
        Vincular2::ThreeOneTwo,
        Vincular2::TwoThreeOne,
        Vincular2::TwoOneThree,
        Vincular2::OneThreeTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Vincular2::ThreeOneTwo => "31-2",
            Vincular2::TwoThreeOne => "2-31",
            Vincular2::TwoOneThree => "2-13",
            Vincular2::OneThreeTwo => "13-2",
        }
    }
}

impl fmt::Display for Vincular2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn vincular2_at_position(s: &[usize], which: Vincular2, i: usize) -> usize {
    let n = s.len();
    assert!((1..=n).contains(&i), "position {i} outside 1..={n}");
    let at = |k: usize| s[k - 1];
    let x = at(i);
    match which {
        Vincular2::ThreeOneTwo => (2..i).filter(|&j| at(j) < x && x < at(j - 1)).count(),
        Vincular2::OneThreeTwo => (2..i).filter(|&j| at(j - 1) < x && x < at(j)).count(),
        Vincular2::TwoThreeOne => (i + 1..n).filter(|&j| at(j + 1) < x && x < at(j)).count(),
        Vincular2::TwoOneThree => (i + 1..n).filter(|&j| at(j) < x && x < at(j + 1)).count(),
    }
}

/// Occurrences of `which` whose lone letter sits at position `at`, or the
/// total over all positions when `at` is `None`.
pub fn vincular2(sigma: &Permutation, which: Vincular2, at: Option<usize>) -> usize {
    match at {
        Some(i) => vincular2_at_position(&sigma.0, which, i),
        None => (1..=sigma.len())
            .map(|i| vincular2_at_position(&sigma.0, which, i))
            .sum(),
    }
}

/// The same statistic evaluated at the position of value `v`.
pub fn vincular2_at_value(sigma: &Permutation, which: Vincular2, v: usize) -> usize {
    vincular2_at_position(&sigma.0, which, sigma.position_of(v))
}

fn hat_2_13_at_position(s: &[usize], i: usize) -> usize {
    let n = s.len();
    assert!((1..=n).contains(&i), "position {i} outside 1..={n}");
    // sigma(n+1) = n+1, so j ranges up to n inclusive.
    let at = |k: usize| if k == n + 1 { n + 1 } else { s[k - 1] };
    let x = at(i);
    (i + 1..=n).filter(|&j| at(j) < x && x < at(j + 1)).count()
}

/// `(2-13)` with `sigma(n+1) = n+1` appended and `i < j <= n`.
pub fn hat_2_13(sigma: &Permutation, at: Option<usize>) -> usize {
    match at {
        Some(i) => hat_2_13_at_position(&sigma.0, i),
        None => (1..=sigma.len())
            .map(|i| hat_2_13_at_position(&sigma.0, i))
            .sum(),
    }
}

pub fn hat_2_13_at_value(sigma: &Permutation, v: usize) -> usize {
    hat_2_13_at_position(&sigma.0, sigma.position_of(v))
}

/// Counts of the four three-block vincular patterns
/// `31-2-4`, `31-4-2`, `41-2-3`, `41-3-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Vincular3Counts {
    pub s3124: usize,
    pub s3142: usize,
    pub s4123: usize,
    pub s4132: usize,
}

impl Vincular3Counts {
    pub fn total(&self) -> usize {
        self.s3124 + self.s3142 + self.s4123 + self.s4132
    }
}

/// Triples `i + 1 < j < k <= n` with the adjacent pair `sigma(i) sigma(i+1)`
/// playing the `31` or `41` part.
pub fn vincular3(sigma: &Permutation) -> Vincular3Counts {
    let s = &sigma.0;
    let n = s.len();
    let mut c = Vincular3Counts::default();
    for i in 0..n.saturating_sub(1) {
        let (hi, lo) = (s[i], s[i + 1]);
        if hi < lo {
            continue;
        }
        for j in i + 2..n {
            let a = s[j];
            if a < lo {
                continue;
            }
            for &b in &s[j + 1..] {
                if b < lo {
                    continue;
                }
                match (a < hi, b < hi) {
                    (true, false) => c.s3124 += 1,
                    (false, true) => c.s3142 += 1,
                    (true, true) if a < b => c.s4123 += 1,
                    (true, true) => c.s4132 += 1,
                    (false, false) => {}
                }
            }
        }
    }
    c
}

/// The `{k, l}`-refined counts: adjacent pairs `sigma(i-1) sigma(i)` left
/// of both `k` and `l` with `sigma(i) < k < sigma(i-1)`, split by whether
/// `sigma(i-1)` lies below or above `l` and by the order of `k` and `l`.
pub fn vincular3_refined(
    sigma: &Permutation,
    k: usize,
    l: usize,
) -> Result<Vincular3Counts, PermError> {
    let n = sigma.len();
    if !(1 <= k && k < l && l <= n) {
        return Err(PermError::BadPair { k, l, n });
    }
    let s = &sigma.0;
    let (pk, pl) = (sigma.position_of(k), sigma.position_of(l));
    let first = pk.min(pl);
    let mut c = Vincular3Counts::default();
    for i in 2..first {
        let (hi, lo) = (s[i - 2], s[i - 1]);
        if !(lo < k && k < hi) {
            continue;
        }
        match (hi < l, pk < pl) {
            (true, true) => c.s3124 += 1,
            (true, false) => c.s3142 += 1,
            (false, true) => c.s4123 += 1,
            (false, false) => c.s4132 += 1,
        }
    }
    Ok(c)
}

/// Whether some subsequence of `sigma` is order-isomorphic to `pattern`.
pub fn contains(sigma: &Permutation, pattern: &Permutation) -> bool {
    fn extend(s: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == pat.len() {
            return true;
        }
        // Leave room for the remaining pattern letters.
        let last = s.len() - (pat.len() - depth);
        for idx in start..=last {
            let x = s[idx];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(d, &y)| (y < x) == (pat[d] < pat[depth]));
            if consistent {
                chosen.push(x);
                if extend(s, pat, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > sigma.len() {
        return false;
    }
    extend(&sigma.0, &pattern.0, 0, &mut Vec::with_capacity(pattern.len()))
}

/// Whether `sigma` avoids every pattern in `patterns`.
pub fn avoids_all(sigma: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|p| !contains(sigma, p))
}
