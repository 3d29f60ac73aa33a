use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// Number of variables in the fixed alphabet.
pub const NVARS: usize = 6;

/// Default ceiling on any single exponent.
pub const DEFAULT_EXPONENT_CAP: u16 = 64;

/// The fixed variable alphabet `{p, q, t, u, v, w}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    P,
    Q,
    T,
    U,
    V,
    W,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::P, Var::Q, Var::T, Var::U, Var::V, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["p", "q", "t", "u", "v", "w"][self.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s.trim())
            .ok_or_else(|| PolyError::UnknownVariable(s.to_string()))
    }
}

/// Exponent vector `(e_p, e_q, e_t, e_u, e_v, e_w)`.
///
/// The derived ordering is lexicographic in that variable order, which is
/// the canonical term order of [`MPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Self {
        Self::ONE.with(v, 1)
    }

    /// Returns a copy with the exponent of `v` replaced.
    pub fn with(mut self, v: Var, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Product of monomials, or `None` if some exponent would exceed `cap`.
    pub fn checked_mul(&self, other: &Monomial, cap: u16) -> Option<Monomial> {
        let mut out = [0u16; NVARS];
        for (i, slot) in out.iter_mut().enumerate() {
            let e = self.0[i].checked_add(other.0[i])?;
            if e > cap {
                return None;
            }
            *slot = e;
        }
        Some(Monomial(out))
    }

    /// Multiplies in `v^e` in place. Panics on `u16` overflow.
    pub fn bump(&mut self, v: Var, e: u16) {
        let slot = &mut self.0[v.index()];
        *slot = slot.checked_add(e).expect("exponent overflow");
    }

    fn max_exponent(&self) -> u16 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        self.checked_mul(&rhs, u16::MAX).expect("exponent overflow")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Integer values for all six variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(pub [BigInt; NVARS]);

impl Assignment {
    /// Every variable set to `value`.
    pub fn all(value: i64) -> Self {
        Assignment(std::array::from_fn(|_| BigInt::from(value)))
    }

    pub fn ones() -> Self {
        Self::all(1)
    }

    pub fn with(mut self, v: Var, value: impl Into<BigInt>) -> Self {
        self.0[v.index()] = value.into();
        self
    }

    pub fn get(&self, v: Var) -> &BigInt {
        &self.0[v.index()]
    }
}

/// Sparse polynomial in `p, q, t, u, v, w` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// `v^e` as a polynomial.
    pub fn var_pow(v: Var, e: u16) -> Self {
        Self::term(Monomial::ONE.with(v, e), 1)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut out = MPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c.into());
        }
        out
    }

    /// Builds a polynomial from monomial multiplicities.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        Self::from_terms(counts)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::ONE)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    pub fn max_exponent(&self) -> u16 {
        self.terms.keys().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coefficient_of(&self, v: Var, k: u16) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == k)
                .map(|(m, c)| (m.with(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Exact product with every exponent bounded by `cap`.
    pub fn checked_mul(&self, rhs: &MPoly, cap: u16) -> Result<MPoly, PolyError> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma
                    .checked_mul(mb, cap)
                    .ok_or(PolyError::ExponentOverflow { cap })?;
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, c)| (*k * *m, c.clone())).collect(),
        }
    }

    pub fn eval(&self, at: &Assignment) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    term *= num_traits::pow(at.get(v).clone(), e as usize);
                }
            }
            total += term;
        }
        total
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let degree = self.degree_in(v).unwrap_or(0);
        // Powers of `value` are shared across terms.
        let mut powers = Vec::with_capacity(degree as usize + 1);
        powers.push(MPoly::one());
        for i in 1..=degree as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let rest = m.with(v, 0);
            let part = powers[m.exponent(v) as usize].mul_monomial(&rest).scale(c);
            out += &part;
        }
        out
    }

    /// Substitutes integer values for the listed variables.
    pub fn specialize(&self, values: &[(Var, i64)]) -> MPoly {
        values.iter().fold(self.clone(), |acc, &(v, x)| {
            acc.substitute(v, &MPoly::constant(x))
        })
    }

    /// Coefficients of `v^0, v^1, ...` when every other variable is set to
    /// the given integers. Used for the univariate tables.
    pub fn univariate_coeffs(&self, v: Var, others: &Assignment) -> Vec<BigInt> {
        let degree = match self.degree_in(v) {
            Some(d) => d,
            None => return Vec::new(),
        };
        (0..=degree)
            .map(|k| self.coefficient_of(v, k).eval(others))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficient as `i64` when it fits; handy in tests.
    pub fn coeff_i64(&self, m: &Monomial) -> Option<i64> {
        self.coeff(m).to_i64()
    }

    pub(crate) fn from_sorted_unchecked(terms: BTreeMap<Monomial, BigInt>) -> Self {
        MPoly { terms }
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<Monomial> for MPoly {
    fn from(m: Monomial) -> Self {
        MPoly::term(m, 1)
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;

    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;

    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

/// Unbounded product; panics only if an exponent overflows `u16`.
impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs, u16::MAX).expect("exponent overflow")
    }
}

impl Mul for MPoly {
    type Output = MPoly;

    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |acc, x| acc * x)
    }
}

/// Human-readable form, highest lexicographic term first, e.g.
/// `p^3 + p^2*q + 2*p^2 - 3`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}
