//! Verification suites: each theorem is checked cell by cell, every cell
//! computing the same quantity along independent routes and comparing them
//! exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::contfrac::{
    contract, default_depth, jfraction_series, jfraction_series_at_depth, named_cf, q_catalan_bar, q_catalan_tilde,
    sfraction_series_with_cap, NamedCf, SFraction,
};
use crate::gamma::{gamma_decompose, gamma_via_perms, mfs_orbit, phi_prime_x};
use crate::pathdiag::{path_sum, DiagramKind};
use crate::patternclass::{class_polynomial, sum_monomials, PatternClass};
use crate::permstats::{avoids_all, des, local_stats, vincular2, vincular3, Boundary, Permutation, Vincular2};
use crate::polyring::{MPoly, Monomial, Var};

/// Overrides every per-theorem cap on `nmax` when set.
pub const NMAX_CAP_ENV: &str = "CATALAN_CF_NMAX_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("nmax {nmax} exceeds the cap {cap} for {theorem}")]
    CapExceeded { theorem: Theorem, nmax: usize, cap: usize },
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Type A `(p,q,t)` Catalan polynomials over `S_n(321)`.
    T1_1,
    /// Type B `(p,q,t)` Catalan polynomials over the `B4` class.
    T1_2,
    /// Gamma expansion of the type B polynomials.
    T1_3,
    /// Five-variable type A continued fraction.
    T3_2,
    /// Six-variable type B continued fraction.
    T4_1,
    /// Six-variable gamma identity.
    T5_1,
    /// Type C continued fraction over `S_{n+1}(312)`.
    T6_1,
    /// Contraction of S-fractions into J-fractions.
    L1_1,
    /// Classical and vincular descriptions of the `B4` class agree.
    L5_2,
    /// Modified Foata-Strehl action.
    Mfs,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::T1_1,
        Theorem::T1_2,
        Theorem::T1_3,
        Theorem::T3_2,
        Theorem::T4_1,
        Theorem::T5_1,
        Theorem::T6_1,
        Theorem::L1_1,
        Theorem::L5_2,
        Theorem::Mfs,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::T1_1 => "T1.1",
            Theorem::T1_2 => "T1.2",
            Theorem::T1_3 => "T1.3",
            Theorem::T3_2 => "T3.2",
            Theorem::T4_1 => "T4.1",
            Theorem::T5_1 => "T5.1",
            Theorem::T6_1 => "T6.1",
            Theorem::L1_1 => "L1.1",
            Theorem::L5_2 => "L5.2",
            Theorem::Mfs => "MFS",
        }
    }

    pub fn default_nmax(self) -> usize {
        match self {
            Theorem::T1_1 | Theorem::T3_2 | Theorem::L5_2 => 9,
            Theorem::T1_2 | Theorem::T1_3 | Theorem::T4_1 | Theorem::Mfs => 7,
            Theorem::T5_1 => 6,
            Theorem::T6_1 => 8,
            Theorem::L1_1 => 16,
        }
    }

    /// Largest `nmax` accepted without the environment override.
    pub fn builtin_cap(self) -> usize {
        match self {
            Theorem::T1_1 => 11,
            Theorem::T1_2 | Theorem::T1_3 | Theorem::T4_1 | Theorem::T6_1 => 9,
            Theorem::T3_2 | Theorem::L5_2 => 10,
            Theorem::T5_1 | Theorem::Mfs => 8,
            Theorem::L1_1 => 30,
        }
    }

    pub fn cap(self) -> usize {
        std::env::var(NMAX_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or_else(|| self.builtin_cap())
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub routes: BTreeMap<String, MPoly>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
}

impl CellReport {
    /// Passes iff every route holds the same polynomial and no extra
    /// failure was recorded.
    fn new(n: usize, label: Option<String>, routes: BTreeMap<String, MPoly>, failure: Option<String>) -> Self {
        let diff = failure.or_else(|| {
            let mut it = routes.iter();
            let (first_name, first) = it.next()?;
            it.find(|(_, v)| *v != first).map(|(name, v)| {
                let delta = first - v;
                format!("{first_name} - {name} = {delta}")
            })
        });
        CellReport {
            n,
            label,
            routes,
            pass: diff.is_none(),
            diff,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub nmax: usize,
    pub pass: bool,
    pub cells: Vec<CellReport>,
    pub wall_time_ms: u64,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.pass)
    }
}

fn routes<const N: usize>(entries: [(&str, MPoly); N]) -> BTreeMap<String, MPoly> {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

const PQT: [(Var, i64); 3] = [(Var::U, 1), (Var::V, 1), (Var::W, 1)];

fn cf_coeffs(which: NamedCf, nmax: usize) -> Vec<MPoly> {
    jfraction_series(&named_cf(which), nmax)
        .expect("default exponent cap suffices for verification depths")
        .into_coeffs()
}

/// Runs every cell of `theorem` for `n = 0..=nmax`.
pub fn verify(theorem: Theorem, nmax: usize) -> Result<VerifyReport, VerifyError> {
    let cap = theorem.cap();
    if nmax > cap {
        return Err(VerifyError::CapExceeded { theorem, nmax, cap });
    }
    let start = Instant::now();
    let cells = match theorem {
        Theorem::T1_1 | Theorem::T3_2 => class_cells(theorem, NamedCf::TypeA, PatternClass::A321, nmax),
        Theorem::T1_2 | Theorem::T4_1 => class_cells(theorem, NamedCf::TypeB, PatternClass::B4, nmax),
        Theorem::T6_1 => class_cells(theorem, NamedCf::TypeC, PatternClass::A312, nmax),
        Theorem::T1_3 => gamma_cells(nmax),
        Theorem::T5_1 => gamma_identity_cells(nmax),
        Theorem::L1_1 => contraction_cells(nmax),
        Theorem::L5_2 => (0..=nmax).into_par_iter().map(vincular_class_cell).collect(),
        Theorem::Mfs => (0..=nmax).into_par_iter().map(mfs_cell).collect(),
    };
    Ok(VerifyReport {
        theorem,
        nmax,
        pass: cells.iter().all(|c| c.pass),
        cells,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Every theorem at its default depth (or `nmax`, clamped to each cap).
pub fn verify_all(nmax: Option<usize>) -> Vec<VerifyReport> {
    Theorem::ALL
        .iter()
        .map(|&t| {
            let n = nmax.map_or(t.default_nmax(), |n| n.min(t.cap()));
            verify(t, n).expect("depth clamped to cap")
        })
        .collect()
}

fn class_cells(theorem: Theorem, cf: NamedCf, class: PatternClass, nmax: usize) -> Vec<CellReport> {
    let coeffs = cf_coeffs(cf, nmax);
    let kind = match class {
        PatternClass::A321 => DiagramKind::A,
        PatternClass::B4 => DiagramKind::B,
        PatternClass::A312 => DiagramKind::C,
    };
    let three_var = matches!(theorem, Theorem::T1_1 | Theorem::T1_2);
    (0..=nmax)
        .into_par_iter()
        .map(|n| {
            let mut r = routes([("cf", coeffs[n].clone()), ("enum", class_polynomial(n, class))]);
            if three_var {
                for v in r.values_mut() {
                    *v = v.specialize(&PQT);
                }
            } else {
                let paths = path_sum(n, kind, usize::MAX).expect("no cap");
                r.insert("pathsum".into(), paths);
            }
            CellReport::new(n, None, r, None)
        })
        .collect()
}

fn gamma_cells(nmax: usize) -> Vec<CellReport> {
    let coeffs = cf_coeffs(NamedCf::TypeB, nmax);
    let specs: Vec<(usize, usize)> = (0..=nmax).flat_map(|n| (0..=n / 2).map(move |k| (n, k))).collect();
    specs
        .into_par_iter()
        .map(|(n, k)| {
            let label = Some(format!("k={k}"));
            match gamma_decompose(&coeffs[n].specialize(&PQT)) {
                Ok(g) => {
                    let r = routes([("cf", g.gamma(k)), ("perms", gamma_via_perms(n + 1, k))]);
                    let failure = (g.center2 != n).then(|| format!("center2 {} != {n}", g.center2));
                    CellReport::new(n, label, r, failure)
                }
                Err(e) => CellReport::new(n, label, BTreeMap::new(), Some(e.to_string())),
            }
        })
        .collect()
}

fn gamma_identity_cells(nmax: usize) -> Vec<CellReport> {
    let coeffs = cf_coeffs(NamedCf::TypeB, nmax);
    let tw = &MPoly::var(Var::T) * &MPoly::var(Var::W);
    let u_tv = &MPoly::var(Var::U) + &(&MPoly::var(Var::T) * &MPoly::var(Var::V));
    (0..=nmax)
        .into_par_iter()
        .map(|n| {
            let gamma: MPoly = (0..=n / 2)
                .map(|k| &(&gamma_via_perms(n + 1, k) * &tw.pow(k as u32)) * &u_tv.pow((n - 2 * k) as u32))
                .sum();
            let r = routes([
                ("cf", coeffs[n].clone()),
                ("enum", class_polynomial(n, PatternClass::B4)),
                ("gamma", gamma),
            ]);
            CellReport::new(n, None, r, None)
        })
        .collect()
}

fn contraction_cells(nmax: usize) -> Vec<CellReport> {
    let catalan = SFraction::new(|_| MPoly::one());
    let fractions = [("bar", q_catalan_bar()), ("tilde", q_catalan_tilde()), ("catalan", catalan)];
    let mut cells = Vec::new();
    for (label, s) in fractions {
        // Exponents of q grow quadratically with the order.
        let direct = sfraction_series_with_cap(&s, nmax, u16::MAX);
        let contracted = jfraction_series_at_depth(&contract(&s), nmax, default_depth(nmax), u16::MAX);
        match (direct, contracted) {
            (Ok(direct), Ok(contracted)) => {
                for n in 0..=nmax {
                    let r = routes([("sfraction", direct.coeff(n)), ("contracted", contracted.coeff(n))]);
                    cells.push(CellReport::new(n, Some(label.to_string()), r, None));
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                cells.push(CellReport::new(0, Some(label.to_string()), BTreeMap::new(), Some(e.to_string())));
            }
        }
    }
    cells.sort_by(|a, b| (a.n, &a.label).cmp(&(b.n, &b.label)));
    cells
}

/// Compares the classical class with the set of permutations avoiding the
/// four vincular patterns `31-2-4`, `31-4-2`, `41-2-3`, `41-3-2`.
fn vincular_class_cell(n: usize) -> CellReport {
    let patterns = PatternClass::B4.patterns();
    let (mut classical, mut vincular, mut both) = (0u64, 0u64, 0u64);
    for s in Permutation::all(n) {
        let a = avoids_all(&s, &patterns);
        let b = PatternClass::B4.contains_member_vincular(&s) == Some(true);
        classical += a as u64;
        vincular += b as u64;
        both += (a && b) as u64;
    }
    let r = routes([
        ("classical", MPoly::constant(classical)),
        ("vincular", MPoly::constant(vincular)),
        ("intersection", MPoly::constant(both)),
    ]);
    CellReport::new(n, None, r, None)
}

fn mfs_weight(s: &Permutation) -> Monomial {
    let e = |x: usize| x as u16;
    Monomial::ONE
        .with(Var::P, e(vincular2(s, Vincular2::TwoOneThree, None)))
        .with(Var::Q, e(vincular2(s, Vincular2::ThreeOneTwo, None)))
        .with(Var::T, e(des(s)))
}

/// Orbit decomposition of `S_n`: the `(2-13, 31-2, des)` generating
/// polynomial equals the sum over dd-free representatives of
/// `p^(2-13) q^(31-2) t^des (1+t)^da`. Structural properties of the action
/// are checked alongside.
fn mfs_cell(n: usize) -> CellReport {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let direct = sum_monomials(perms.par_iter().map(mfs_weight));
    let mut failure = None;
    let mut reps = BTreeSet::new();
    let mut covered = 0usize;
    for s in &perms {
        let orbit = mfs_orbit(s);
        let key = |m: &Permutation| {
            let st = local_stats(m, Boundary::Zero);
            (st.pk(), st.val(), vincular3(m).total(), mfs_weight(m).with(Var::T, 0))
        };
        let broken = (1..=n).any(|x| phi_prime_x(&phi_prime_x(s, x), x) != *s)
            || local_stats(&orbit.representative, Boundary::Zero).dd() != 0
            || orbit.members.iter().any(|m| key(m) != key(s))
            || orbit.members.iter().any(|m| mfs_orbit(m).representative != orbit.representative);
        if broken && failure.is_none() {
            failure = Some(format!("action property fails at {s}"));
        }
        if reps.insert(orbit.representative.clone()) {
            covered += orbit.members.len();
        }
    }
    if covered != perms.len() && failure.is_none() {
        failure = Some(format!("orbits cover {covered} of {} permutations", perms.len()));
    }
    let one_plus_t = &MPoly::one() + &MPoly::var(Var::T);
    let orbits: MPoly = reps
        .iter()
        .map(|r| MPoly::term(mfs_weight(r), 1) * one_plus_t.pow(local_stats(r, Boundary::Zero).da() as u32))
        .sum();
    CellReport::new(n, None, routes([("direct", direct), ("orbits", orbits)]), failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ids() {
        assert_eq!("t1.1".parse::<Theorem>().unwrap(), Theorem::T1_1);
        assert_eq!("mfs".parse::<Theorem>().unwrap(), Theorem::Mfs);
        assert!("T9.9".parse::<Theorem>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for t in Theorem::ALL {
            let r = verify(t, 4).unwrap();
            assert!(r.pass, "{t}: {:?}", r.failures().collect::<Vec<_>>());
            assert!(r.cells.windows(2).all(|w| (w[0].n, &w[0].label) <= (w[1].n, &w[1].label)));
        }
        let r = verify(Theorem::T1_1, 0).unwrap();
        assert!(r.pass && r.cells.len() == 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            verify(Theorem::T5_1, 50),
            Err(VerifyError::CapExceeded { .. })
        ));
    }

    #[test]
    fn mismatched_routes_fail() {
        let c = CellReport::new(
            1,
            None,
            routes([("a", MPoly::one()), ("b", MPoly::var(Var::P))]),
            None,
        );
        assert!(!c.pass);
        assert_eq!(c.diff.as_deref(), Some("a - b = -p + 1"));
    }

    #[test]
    fn report_json_is_deterministic() {
        let strip = |mut r: VerifyReport| {
            r.wall_time_ms = 0;
            serde_json::to_string(&r).unwrap()
        };
        let a = strip(verify(Theorem::T1_3, 5).unwrap());
        let b = strip(verify(Theorem::T1_3, 5).unwrap());
        assert_eq!(a, b);
        assert!(a.contains(r#""theorem":"T1.3""#));
    }
}
