//! Insertion encoding, the three pattern classes generated from their
//! insertion-letter grammars, a brute-force filter used as an oracle, and
//! the weighted generating polynomials of each class.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permstats::{
    avoids_all, des, hat_2_13, local_stats, vincular2, vincular3, Boundary, Permutation, Vincular2,
};
use crate::polyring::{MPoly, Monomial};

/// Default bound on `n` for anything that walks all of `S_n`.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodingError {
    #[error("letter {letter} references a missing slot ({open} open)")]
    BadSlot { letter: Letter, open: usize },
    #[error("letter {0} would close the retained final slot")]
    FinalSlotClosed(Letter),
    #[error("{0} slot(s) left open after replay")]
    LeftoverSlots(usize),
    #[error("cannot parse insertion letter {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("n = {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("unknown pattern class {0:?}")]
    UnknownClass(String),
}

/// How a new maximum is placed inside a slot `o`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterKind {
    /// `o -> o n o`
    M,
    /// `o -> n o`
    L,
    /// `o -> o n`
    R,
    /// `o -> n`
    F,
}

impl LetterKind {
    fn symbol(self) -> char {
        match self {
            LetterKind::M => 'm',
            LetterKind::L => 'l',
            LetterKind::R => 'r',
            LetterKind::F => 'f',
        }
    }
}

/// An insertion letter; negative slots count from the right (`-1` is the
/// rightmost slot).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub kind: LetterKind,
    pub slot: i32,
}

impl Letter {
    pub const fn new(kind: LetterKind, slot: i32) -> Self {
        Letter { kind, slot }
    }

    /// Zero-based slot index among `open` slots.
    pub fn resolve(&self, open: usize) -> Option<usize> {
        let open = open as i64;
        let s = self.slot as i64;
        let idx = if s > 0 { s - 1 } else { open + s };
        (s != 0 && (0..open).contains(&idx)).then_some(idx as usize)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.slot)
    }
}

impl FromStr for Letter {
    type Err = EncodingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || EncodingError::Parse(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().ok_or_else(bad)? {
            'm' => LetterKind::M,
            'l' => LetterKind::L,
            'r' => LetterKind::R,
            'f' => LetterKind::F,
            _ => return Err(bad()),
        };
        let slot: i32 = chars.as_str().parse().map_err(|_| bad())?;
        if slot == 0 {
            return Err(bad());
        }
        Ok(Letter { kind, slot })
    }
}

/// A word over insertion letters; text form `m1,m1,l2,f1,f2,f1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct InsertionWord(pub Vec<Letter>);

impl InsertionWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for InsertionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for InsertionWord {
    type Err = EncodingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map(InsertionWord)
    }
}

impl Serialize for InsertionWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(Letter::to_string))
    }
}

impl<'de> Deserialize<'de> for InsertionWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<String>::deserialize(deserializer)?
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()
            .map(InsertionWord)
            .map_err(serde::de::Error::custom)
    }
}

/// Replay conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReplayMode {
    /// Plain insertion encoding; every slot is eventually filled.
    Standard,
    /// A free slot is kept at the right end: the rightmost slot rejects `f`
    /// and `r`, and is dropped when the replay finishes.
    RetainFinalSlot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Slot,
    Value(usize),
}

/// A partially built permutation: placed values interleaved with open slots.
/// Values are inserted as successive maxima `1, 2, 3, ...`.
#[derive(Debug, Clone)]
pub struct Evolution {
    cells: Vec<Cell>,
    placed: usize,
    mode: ReplayMode,
}

impl Evolution {
    pub fn new(mode: ReplayMode) -> Self {
        Evolution {
            cells: vec![Cell::Slot],
            placed: 0,
            mode,
        }
    }

    pub fn open_slots(&self) -> usize {
        self.cells.iter().filter(|c| **c == Cell::Slot).count()
    }

    pub fn placed(&self) -> usize {
        self.placed
    }

    /// Applies `letter`, placing the next value.
    pub fn apply(&mut self, letter: Letter) -> Result<(), EncodingError> {
        let open = self.open_slots();
        let idx = letter
            .resolve(open)
            .ok_or(EncodingError::BadSlot { letter, open })?;
        if self.mode == ReplayMode::RetainFinalSlot
            && idx + 1 == open
            && matches!(letter.kind, LetterKind::F | LetterKind::R)
        {
            return Err(EncodingError::FinalSlotClosed(letter));
        }
        self.insert(letter.kind, idx);
        Ok(())
    }

    /// Places the next value in the zero-based slot `idx`.
    pub(crate) fn insert(&mut self, kind: LetterKind, idx: usize) {
        let pos = self
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Cell::Slot)
            .nth(idx)
            .map(|(i, _)| i)
            .expect("slot index checked by caller");
        self.placed += 1;
        let v = Cell::Value(self.placed);
        let replacement: &[Cell] = match kind {
            LetterKind::M => &[Cell::Slot, v, Cell::Slot],
            LetterKind::L => &[v, Cell::Slot],
            LetterKind::R => &[Cell::Slot, v],
            LetterKind::F => &[v],
        };
        self.cells.splice(pos..=pos, replacement.iter().copied());
    }

    /// Closes the evolution. In [`ReplayMode::RetainFinalSlot`] exactly the
    /// retained slot may remain; in standard mode none may.
    pub fn finish(self) -> Result<Permutation, EncodingError> {
        let open = self.open_slots();
        let allowed = match self.mode {
            ReplayMode::RetainFinalSlot => 1,
            ReplayMode::Standard if self.placed == 0 => 1,
            ReplayMode::Standard => 0,
        };
        if open != allowed {
            return Err(EncodingError::LeftoverSlots(open));
        }
        Ok(Permutation::from_vec_unchecked(
            self.cells
                .into_iter()
                .filter_map(|c| match c {
                    Cell::Value(v) => Some(v),
                    Cell::Slot => None,
                })
                .collect(),
        ))
    }

    /// Like [`finish`](Self::finish) but the last open slot receives the
    /// value `placed + 1`.
    pub(crate) fn finish_with_max(mut self) -> Option<Permutation> {
        if self.open_slots() != 1 {
            return None;
        }
        self.insert(LetterKind::F, 0);
        self.mode = ReplayMode::Standard;
        self.finish().ok()
    }
}

/// Letters of `word`: for each value `x`, the run of values `>= x` holding
/// `x` is the slot it fills.
fn encode_word(word: &[usize], encoded_values: usize) -> InsertionWord {
    let mut letters = Vec::with_capacity(encoded_values);
    for x in 1..=encoded_values {
        let mut slot = 0;
        let mut found = None;
        let mut i = 0;
        while i < word.len() {
            if word[i] < x {
                i += 1;
                continue;
            }
            let start = i;
            while i < word.len() && word[i] >= x {
                i += 1;
            }
            slot += 1;
            if let Some(p) = (start..i).find(|&p| word[p] == x) {
                let kind = match (p == start, p + 1 == i) {
                    (true, true) => LetterKind::F,
                    (true, false) => LetterKind::L,
                    (false, true) => LetterKind::R,
                    (false, false) => LetterKind::M,
                };
                found = Some(Letter::new(kind, slot));
            }
        }
        letters.push(found.expect("every value lies in some run"));
    }
    InsertionWord(letters)
}

/// The standard insertion encoding (positive slot indices).
pub fn insertion_encode(sigma: &Permutation) -> InsertionWord {
    encode_word(sigma.as_slice(), sigma.len())
}

/// The encoding with a retained free slot on the right, i.e. the encoding
/// of `sigma` followed by `n + 1`, minus its final `f`.
pub fn insertion_encode_retained(sigma: &Permutation) -> InsertionWord {
    let mut word = sigma.as_slice().to_vec();
    word.push(sigma.len() + 1);
    encode_word(&word, sigma.len())
}

pub fn insertion_decode(w: &InsertionWord) -> Result<Permutation, EncodingError> {
    insertion_decode_with(w, ReplayMode::Standard)
}

pub fn insertion_decode_with(
    w: &InsertionWord,
    mode: ReplayMode,
) -> Result<Permutation, EncodingError> {
    let mut evo = Evolution::new(mode);
    for &letter in w.letters() {
        evo.apply(letter)?;
    }
    evo.finish()
}

/// The three pattern classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternClass {
    /// `S_n(312)`
    A312,
    /// `S_n(321)`
    A321,
    /// `S_n(3124, 4123, 3142, 4132)`
    B4,
}

impl PatternClass {
    pub const ALL: [PatternClass; 3] = [PatternClass::A312, PatternClass::A321, PatternClass::B4];

    pub fn id(self) -> &'static str {
        match self {
            PatternClass::A312 => "a312",
            PatternClass::A321 => "a321",
            PatternClass::B4 => "b4",
        }
    }

    pub fn patterns(self) -> Vec<Permutation> {
        let words: &[&[usize]] = match self {
            PatternClass::A312 => &[&[3, 1, 2]],
            PatternClass::A321 => &[&[3, 2, 1]],
            PatternClass::B4 => &[&[3, 1, 2, 4], &[4, 1, 2, 3], &[3, 1, 4, 2], &[4, 1, 3, 2]],
        };
        words
            .iter()
            .map(|w| Permutation::from_vec_unchecked(w.to_vec()))
            .collect()
    }

    pub fn contains_member(self, sigma: &Permutation) -> bool {
        avoids_all(sigma, &self.patterns())
    }

    /// Membership via vincular patterns; for `B4` this is avoidance of
    /// `31-2-4`, `31-4-2`, `41-2-3` and `41-3-2`.
    pub fn contains_member_vincular(self, sigma: &Permutation) -> Option<bool> {
        match self {
            PatternClass::B4 => Some(vincular3(sigma).total() == 0),
            _ => None,
        }
    }

    pub fn replay_mode(self) -> ReplayMode {
        match self {
            PatternClass::A321 => ReplayMode::RetainFinalSlot,
            _ => ReplayMode::Standard,
        }
    }

    /// The `n`-th class polynomial sums over `S_{n + size_shift}`.
    pub fn size_shift(self) -> usize {
        match self {
            PatternClass::A321 => 0,
            PatternClass::A312 | PatternClass::B4 => 1,
        }
    }

    /// Letters licensed by the grammar when `open` slots are open, in
    /// ascending letter order.
    pub fn licensed_letters(self, open: usize) -> Vec<Letter> {
        use LetterKind::*;
        let mut out = match self {
            PatternClass::A312 => vec![Letter::new(M, 1), Letter::new(L, 1), Letter::new(R, 1), Letter::new(F, 1)],
            PatternClass::A321 if open <= 1 => vec![Letter::new(M, -1), Letter::new(L, -1)],
            PatternClass::A321 => vec![
                Letter::new(F, 1),
                Letter::new(L, 1),
                Letter::new(L, -1),
                Letter::new(M, -1),
            ],
            PatternClass::B4 => {
                let mut v = vec![Letter::new(M, 1), Letter::new(L, 1), Letter::new(R, 1), Letter::new(F, 1)];
                if open == 2 {
                    v.push(Letter::new(F, 2));
                }
                v
            }
        };
        out.sort();
        out
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PatternClass {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PatternClass::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| ClassError::UnknownClass(s.to_string()))
    }
}

/// Depth-first walk of a class grammar, yielding each member with the word
/// that produced it, in lexicographic word order.
pub struct ClassWalk {
    class: PatternClass,
    n: usize,
    stack: Vec<Frame>,
    emitted_empty: bool,
}

struct Frame {
    evo: Evolution,
    word: Vec<Letter>,
    letters: Vec<Letter>,
    next: usize,
}

impl ClassWalk {
    pub fn new(n: usize, class: PatternClass) -> Self {
        let evo = Evolution::new(class.replay_mode());
        let letters = class.licensed_letters(evo.open_slots());
        ClassWalk {
            class,
            n,
            stack: vec![Frame {
                evo,
                word: Vec::new(),
                letters,
                next: 0,
            }],
            emitted_empty: false,
        }
    }

    /// Whether a prefix with `open` slots and `remaining` letters to go can
    /// still be completed.
    fn viable(&self, open: usize, remaining: usize) -> bool {
        match self.class.replay_mode() {
            ReplayMode::RetainFinalSlot => open >= 1 && open - 1 <= remaining,
            ReplayMode::Standard => open <= remaining && (open >= 1 || remaining == 0),
        }
    }
}

impl Iterator for ClassWalk {
    type Item = (InsertionWord, Permutation);

    fn next(&mut self) -> Option<Self::Item> {
        if self.n == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some((InsertionWord::default(), Permutation::default()));
        }
        while let Some(top) = self.stack.last_mut() {
            if top.next >= top.letters.len() {
                self.stack.pop();
                continue;
            }
            let letter = top.letters[top.next];
            top.next += 1;
            let mut evo = top.evo.clone();
            if evo.apply(letter).is_err() {
                continue;
            }
            let mut word = top.word.clone();
            word.push(letter);
            let open = evo.open_slots();
            let remaining = self.n - word.len();
            if !self.viable(open, remaining) {
                continue;
            }
            if remaining == 0 {
                let sigma = evo.finish().expect("viable completed word");
                return Some((InsertionWord(word), sigma));
            }
            let letters = self.class.licensed_letters(open);
            self.stack.push(Frame {
                evo,
                word,
                letters,
                next: 0,
            });
        }
        None
    }
}

/// Members of the class of size `n`, generated from its grammar.
pub fn generate_class(n: usize, class: PatternClass) -> impl Iterator<Item = Permutation> {
    ClassWalk::new(n, class).map(|(_, sigma)| sigma)
}

/// All of `S_n` filtered by classical avoidance. Refuses `n > cap`.
pub fn perms_avoiding_bruteforce(
    n: usize,
    patterns: &[Permutation],
    cap: usize,
) -> Result<impl Iterator<Item = Permutation>, ClassError> {
    if n > cap {
        return Err(ClassError::CapExceeded { n, cap });
    }
    let patterns = patterns.to_vec();
    Ok(Permutation::all(n).filter(move |s| avoids_all(s, &patterns)))
}

/// The statistic monomial each class is weighted by:
///
/// * `A321`: `p^hat(2-13) q^(31-2) t^des u^lda w^lval`
/// * `B4`: `p^(2-13) q^(31-2) t^des u^da v^dd w^val`
/// * `A312`: `q^(2-13) t^des u^da v^dd w^val`
///
/// Local statistics use the right boundary `0` except for `A321`, whose
/// `lda`/`lval` use the right boundary at infinity.
pub fn class_monomial(sigma: &Permutation, class: PatternClass) -> Monomial {
    let e = |x: usize| u16::try_from(x).expect("statistic too large");
    let t = e(des(sigma));
    let q312 = e(vincular2(sigma, Vincular2::ThreeOneTwo, None));
    let p213 = e(vincular2(sigma, Vincular2::TwoOneThree, None));
    match class {
        PatternClass::A321 => {
            let l = local_stats(sigma, Boundary::Infinity);
            Monomial([e(hat_2_13(sigma, None)), q312, t, e(l.da()), 0, e(l.val())])
        }
        PatternClass::B4 => {
            let s = local_stats(sigma, Boundary::Zero);
            Monomial([p213, q312, t, e(s.da()), e(s.dd()), e(s.val())])
        }
        PatternClass::A312 => {
            let s = local_stats(sigma, Boundary::Zero);
            Monomial([0, p213, t, e(s.da()), e(s.dd()), e(s.val())])
        }
    }
}

/// Sums monomials with multiplicity; the reduction is order-independent.
pub fn sum_monomials<I>(items: I) -> MPoly
where
    I: IntoParallelIterator<Item = Monomial>,
{
    let counts = items
        .into_par_iter()
        .fold(HashMap::<Monomial, u64>::new, |mut acc, m| {
            *acc.entry(m).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (m, c) in b {
                *a.entry(m).or_default() += c;
            }
            a
        });
    MPoly::from_counts(counts)
}

/// The weighted class polynomial of degree `n`; note the index shift for
/// `B4` and `A312`, which sum over `S_{n+1}`.
pub fn class_polynomial(n: usize, class: PatternClass) -> MPoly {
    let members: Vec<Permutation> = generate_class(n + class.size_shift(), class).collect();
    sum_monomials(members.par_iter().map(|s| class_monomial(s, class)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Var;
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(s: &str) -> InsertionWord {
        s.parse().unwrap()
    }

    #[test]
    fn encodes_worked_example() {
        assert_eq!(insertion_encode(&perm("423615")).to_string(), "m1,m1,l2,f1,f2,f1");
        assert_eq!(insertion_decode(&word("m1,m1,l2,f1,f2,f1")).unwrap(), perm("423615"));
    }

    #[test]
    fn small_encodings() {
        assert_eq!(insertion_encode(&perm("1")).to_string(), "f1");
        assert_eq!(insertion_decode(&word("f1")).unwrap(), perm("1"));
        assert_eq!(insertion_encode(&perm("12")).to_string(), "l1,f1");
        assert_eq!(insertion_decode(&word("m1,f2,f1")).unwrap(), perm("312"));
        assert_eq!(insertion_decode(&word("")).unwrap(), Permutation::default());
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(
            insertion_decode(&word("f2")),
            Err(EncodingError::BadSlot { open: 1, .. })
        ));
        assert!(matches!(
            insertion_decode(&word("m1,f1")),
            Err(EncodingError::LeftoverSlots(1))
        ));
        assert!(matches!(
            insertion_decode_with(&word("f1"), ReplayMode::RetainFinalSlot),
            Err(EncodingError::FinalSlotClosed(_))
        ));
        assert!("x1".parse::<Letter>().is_err());
        assert!("m0".parse::<Letter>().is_err());
        assert_eq!("l-1".parse::<Letter>().unwrap(), Letter::new(LetterKind::L, -1));
    }

    #[test]
    fn retained_encoding_round_trips() {
        for n in 0..=6 {
            for sigma in Permutation::all(n) {
                let w = insertion_encode_retained(&sigma);
                assert_eq!(
                    insertion_decode_with(&w, ReplayMode::RetainFinalSlot).unwrap(),
                    sigma
                );
            }
        }
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 0..=7 {
            for sigma in Permutation::all(n) {
                assert_eq!(insertion_decode(&insertion_encode(&sigma)).unwrap(), sigma);
            }
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(generate_class(5, PatternClass::A321).count(), 42);
        assert_eq!(generate_class(3, PatternClass::B4).count(), 6);
        assert_eq!(generate_class(7, PatternClass::B4).count(), 924);
        assert_eq!(generate_class(0, PatternClass::A312).count(), 1);
    }

    #[test]
    fn brute_force_examples() {
        let a: BTreeSet<_> = perms_avoiding_bruteforce(5, &PatternClass::A321.patterns(), 10)
            .unwrap()
            .collect();
        let g: BTreeSet<_> = generate_class(5, PatternClass::A321).collect();
        assert_eq!(a, g);
        let dec: Vec<_> = perms_avoiding_bruteforce(4, &[perm("12")], 10).unwrap().collect();
        assert_eq!(dec, vec![perm("4321")]);
        let empty: Vec<_> = perms_avoiding_bruteforce(0, &[perm("12")], 10).unwrap().collect();
        assert_eq!(empty, vec![Permutation::default()]);
        assert!(perms_avoiding_bruteforce(11, &[perm("12")], 10).is_err());
    }

    #[test]
    fn grammar_matches_brute_force() {
        for class in PatternClass::ALL {
            for n in 0..=7 {
                let walk: Vec<_> = generate_class(n, class).collect();
                let set: BTreeSet<_> = walk.iter().cloned().collect();
                assert_eq!(set.len(), walk.len(), "{class} n={n} duplicates");
                let brute: BTreeSet<_> = perms_avoiding_bruteforce(n, &class.patterns(), 10)
                    .unwrap()
                    .collect();
                assert_eq!(set, brute, "{class} n={n}");
            }
        }
    }

    #[test]
    fn walk_is_lexicographic_in_words() {
        for class in PatternClass::ALL {
            let words: Vec<_> = ClassWalk::new(6, class).map(|(w, _)| w).collect();
            assert!(words.windows(2).all(|p| p[0] < p[1]), "{class}");
        }
    }

    #[test]
    fn walk_words_decode_to_members() {
        for class in PatternClass::ALL {
            for (w, sigma) in ClassWalk::new(6, class) {
                assert_eq!(insertion_decode_with(&w, class.replay_mode()).unwrap(), sigma);
            }
        }
    }

    #[test]
    fn class_polynomial_examples() {
        let b2 = class_polynomial(2, PatternClass::B4).specialize(&[(Var::U, 1), (Var::V, 1), (Var::W, 1)]);
        assert_eq!(b2.to_string(), "p*t + q*t + t^2 + 2*t + 1");
        let a2 = class_polynomial(2, PatternClass::A321).specialize(&[(Var::U, 1), (Var::W, 1)]);
        assert_eq!(a2.to_string(), "p*t + 1");
        let a3 = class_polynomial(3, PatternClass::A321)
            .specialize(&[(Var::P, 1), (Var::T, 1), (Var::U, 1), (Var::W, 1)]);
        assert_eq!(a3.to_string(), "q + 4");
    }

    #[test]
    fn vincular_description_agrees() {
        for n in 0..=7 {
            for s in Permutation::all(n) {
                assert_eq!(
                    PatternClass::B4.contains_member_vincular(&s),
                    Some(PatternClass::B4.contains_member(&s)),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn class_parse() {
        assert_eq!("B4".parse::<PatternClass>().unwrap(), PatternClass::B4);
        assert!("a123".parse::<PatternClass>().is_err());
    }
}
