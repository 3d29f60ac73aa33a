//! Jacobi- and Stieltjes-type continued fractions expanded as truncated
//! power series, the contraction from S- to J-fractions, and the three
//! named (p,q,t)-Catalan J-fractions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::polyring::{MPoly, PolyError, Series, Var, DEFAULT_EXPONENT_CAP};

/// Closed-form coefficient at a given level.
pub type LevelFn = Arc<dyn Fn(usize) -> MPoly + Send + Sync>;

/// `1 / (1 - b_0 z - lam_1 z^2 / (1 - b_1 z - lam_2 z^2 / ...))`.
///
/// `lam` is only ever queried at levels `k >= 1`.
#[derive(Clone)]
pub struct JFraction {
    b: LevelFn,
    lam: LevelFn,
}

impl JFraction {
    pub fn new(
        b: impl Fn(usize) -> MPoly + Send + Sync + 'static,
        lam: impl Fn(usize) -> MPoly + Send + Sync + 'static,
    ) -> Self {
        JFraction {
            b: Arc::new(b),
            lam: Arc::new(lam),
        }
    }

    pub fn b(&self, k: usize) -> MPoly {
        (self.b)(k)
    }

    pub fn lam(&self, k: usize) -> MPoly {
        debug_assert!(k >= 1);
        (self.lam)(k)
    }

    /// Substitutes integers into every level coefficient.
    pub fn specialize(&self, values: &[(Var, i64)]) -> JFraction {
        let values: Arc<[(Var, i64)]> = values.into();
        let (b, lam) = (self.b.clone(), self.lam.clone());
        let vb = values.clone();
        JFraction::new(move |k| b(k).specialize(&vb), move |k| lam(k).specialize(&values))
    }
}

impl fmt::Debug for JFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JFraction")
            .field("b0", &self.b(0))
            .field("lam1", &self.lam(1))
            .finish_non_exhaustive()
    }
}

/// `1 / (1 - c_1 z / (1 - c_2 z / ...))`, levels from 1.
#[derive(Clone)]
pub struct SFraction {
    c: LevelFn,
}

impl SFraction {
    pub fn new(c: impl Fn(usize) -> MPoly + Send + Sync + 'static) -> Self {
        SFraction { c: Arc::new(c) }
    }

    pub fn c(&self, k: usize) -> MPoly {
        debug_assert!(k >= 1);
        (self.c)(k)
    }
}

impl fmt::Debug for SFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SFraction")
            .field("c1", &self.c(1))
            .finish_non_exhaustive()
    }
}

/// Smallest depth at which the tail no longer reaches `z^order`.
pub fn default_depth(order: usize) -> usize {
    order.div_ceil(2) + 1
}

/// Taylor coefficients of `j` up to `z^order`.
pub fn jfraction_series(j: &JFraction, order: usize) -> Result<Series, PolyError> {
    jfraction_series_at_depth(j, order, default_depth(order), DEFAULT_EXPONENT_CAP)
}

/// Bottom-up evaluation with levels `0..depth` and the tail below replaced
/// by 1. Level `k` first contributes to `z^{2k}`, so any depth above
/// `order / 2` gives the same truncated series.
pub fn jfraction_series_at_depth(
    j: &JFraction,
    order: usize,
    depth: usize,
    cap: u16,
) -> Result<Series, PolyError> {
    let z = Series::z(order);
    let z2 = z.shift(1);
    let mut tail = Series::one(order);
    for k in (0..depth).rev() {
        let level_b = z.scale_with_cap(&j.b(k), cap)?;
        let level_lam = z2.scale_with_cap(&j.lam(k + 1), cap)?.mul_with_cap(&tail, cap)?;
        let denom = Series::one(order).sub(&level_b)?.sub(&level_lam)?;
        tail = denom.inverse_with_cap(cap)?;
    }
    Ok(tail)
}

/// Direct bottom-up expansion of `s` up to `z^order`.
pub fn sfraction_series(s: &SFraction, order: usize) -> Result<Series, PolyError> {
    sfraction_series_with_cap(s, order, DEFAULT_EXPONENT_CAP)
}

pub fn sfraction_series_with_cap(
    s: &SFraction,
    order: usize,
    cap: u16,
) -> Result<Series, PolyError> {
    let z = Series::z(order);
    let mut tail = Series::one(order);
    for k in (1..=order + 1).rev() {
        let level = z.scale_with_cap(&s.c(k), cap)?.mul_with_cap(&tail, cap)?;
        tail = Series::one(order).sub(&level)?.inverse_with_cap(cap)?;
    }
    Ok(tail)
}

/// Even contraction of an S-fraction:
/// `b_0 = c_1`, `b_k = c_{2k} + c_{2k+1}`, `lam_k = c_{2k-1} c_{2k}`.
pub fn contract(s: &SFraction) -> JFraction {
    let (cb, cl) = (s.c.clone(), s.c.clone());
    JFraction::new(
        move |k| {
            if k == 0 {
                cb(1)
            } else {
                &cb(2 * k) + &cb(2 * k + 1)
            }
        },
        move |k| &cl(2 * k - 1) * &cl(2 * k),
    )
}

/// The three (p,q,t)-Catalan J-fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedCf {
    TypeA,
    TypeB,
    TypeC,
}

impl FromStr for NamedCf {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "typea" | "a" => Ok(NamedCf::TypeA),
            "typeb" | "b" => Ok(NamedCf::TypeB),
            "typec" | "c" => Ok(NamedCf::TypeC),
            _ => Err(format!("unknown continued fraction {s:?}")),
        }
    }
}

fn pw(v: Var, e: usize) -> MPoly {
    MPoly::var_pow(v, u16::try_from(e).expect("level too deep"))
}

fn mono(parts: &[(Var, usize)]) -> MPoly {
    parts.iter().map(|&(v, e)| pw(v, e)).product()
}

/// Level coefficients of the named fractions.
///
/// * A: `b_0 = u`, `b_k = (p^k + q^k) u`, `lam_k = w t p^k q^{k-1}`.
/// * B: `b_k = p^k (u + t v)`, `lam_1 = (p + q) t w`, `lam_k = p^{2k-1} t w`.
/// * C: `b_k = q^k (u + v t)`, `lam_k = w t q^{2k-1}`.
pub fn named_cf(which: NamedCf) -> JFraction {
    let u = MPoly::var(Var::U);
    let u_tv = &u + &mono(&[(Var::T, 1), (Var::V, 1)]);
    match which {
        NamedCf::TypeA => JFraction::new(
            move |k| {
                if k == 0 {
                    u.clone()
                } else {
                    &(&pw(Var::P, k) + &pw(Var::Q, k)) * &u
                }
            },
            |k| mono(&[(Var::W, 1), (Var::T, 1), (Var::P, k), (Var::Q, k - 1)]),
        ),
        NamedCf::TypeB => JFraction::new(
            move |k| &pw(Var::P, k) * &u_tv,
            |k| {
                let tw = mono(&[(Var::T, 1), (Var::W, 1)]);
                if k == 1 {
                    &(&MPoly::var(Var::P) + &MPoly::var(Var::Q)) * &tw
                } else {
                    &pw(Var::P, 2 * k - 1) * &tw
                }
            },
        ),
        NamedCf::TypeC => JFraction::new(
            move |k| &pw(Var::Q, k) * &u_tv,
            |k| mono(&[(Var::W, 1), (Var::T, 1), (Var::Q, 2 * k - 1)]),
        ),
    }
}

/// S-fraction whose series is `C_n(1, q, 1)`: `c_{2k} = 1`, `c_{2k+1} = q^k`.
pub fn q_catalan_bar() -> SFraction {
    SFraction::new(|k| if k % 2 == 0 { MPoly::one() } else { pw(Var::Q, k / 2) })
}

/// S-fraction whose series is `C_n(q, 1, 1)`: `c_{2k} = q^k`, `c_{2k+1} = 1`.
pub fn q_catalan_tilde() -> SFraction {
    SFraction::new(|k| if k % 2 == 0 { pw(Var::Q, k / 2) } else { MPoly::one() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Assignment;
    use num_bigint::BigInt;

    fn at_ones(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.eval(&Assignment::ones())).unwrap())
            .collect()
    }

    fn q_row(f: &MPoly) -> Vec<BigInt> {
        f.univariate_coeffs(Var::Q, &Assignment::ones())
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn type_a_at_ones_is_catalan() {
        let s = jfraction_series(&named_cf(NamedCf::TypeA), 5).unwrap();
        assert_eq!(at_ones(&s), vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn type_b_at_ones_is_central_binomial() {
        let s = jfraction_series(&named_cf(NamedCf::TypeB), 4).unwrap();
        assert_eq!(at_ones(&s), vec![1, 2, 6, 20, 70]);
    }

    #[test]
    fn zero_fraction_is_one() {
        let j = JFraction::new(|_| MPoly::zero(), |_| MPoly::zero());
        assert_eq!(jfraction_series(&j, 4).unwrap(), Series::one(4));
        let s = SFraction::new(|_| MPoly::zero());
        assert_eq!(sfraction_series(&s, 4).unwrap(), Series::one(4));
    }

    #[test]
    fn contraction_of_all_ones_is_catalan_fraction() {
        let j = contract(&SFraction::new(|_| MPoly::one()));
        assert_eq!(j.b(0), MPoly::one());
        for k in 1..6 {
            assert_eq!(j.b(k), MPoly::constant(2));
            assert_eq!(j.lam(k), MPoly::one());
        }
    }

    #[test]
    fn contraction_of_bar_sequence_is_type_a_at_p_t_one() {
        let j = contract(&q_catalan_bar());
        let a = named_cf(NamedCf::TypeA).specialize(&[(Var::P, 1), (Var::T, 1), (Var::U, 1), (Var::W, 1)]);
        for k in 0..8 {
            assert_eq!(j.b(k), a.b(k), "b_{k}");
            if k >= 1 {
                assert_eq!(j.lam(k), a.lam(k), "lam_{k}");
                assert_eq!(j.lam(k), MPoly::var_pow(Var::Q, k as u16 - 1));
            }
        }
    }

    #[test]
    fn leading_zero_kills_series() {
        let s = SFraction::new(|k| if k == 1 { MPoly::zero() } else { MPoly::one() });
        assert_eq!(sfraction_series(&s, 5).unwrap(), Series::one(5));
        assert_eq!(jfraction_series(&contract(&s), 5).unwrap(), Series::one(5));
    }

    #[test]
    fn fig1_rows_from_s_fractions() {
        let bar = sfraction_series(&q_catalan_bar(), 5).unwrap();
        assert_eq!(q_row(&bar.coeff(3)), ints(&[4, 1]));
        assert_eq!(q_row(&bar.coeff(4)), ints(&[8, 5, 1]));
        assert_eq!(q_row(&bar.coeff(5)), ints(&[16, 17, 7, 2]));
        let tilde = sfraction_series(&q_catalan_tilde(), 5).unwrap();
        assert_eq!(q_row(&tilde.coeff(4)), ints(&[1, 6, 5, 2]));
        assert_eq!(q_row(&tilde.coeff(5)), ints(&[1, 10, 15, 12, 3, 1]));
    }

    #[test]
    fn named_level_coefficients() {
        let b = named_cf(NamedCf::TypeB);
        assert_eq!(b.lam(2).to_string(), "p^3*t*w");
        assert_eq!(b.b(0).to_string(), "t*v + u");
        let c = named_cf(NamedCf::TypeC);
        assert_eq!(c.lam(3).to_string(), "q^5*t*w");
        let a = named_cf(NamedCf::TypeA).specialize(&[(Var::U, 1), (Var::W, 1)]);
        assert_eq!(a.b(0), MPoly::one());
        assert_eq!(a.b(2).to_string(), "p^2 + q^2");
        assert_eq!(a.lam(1).to_string(), "p*t");
        assert_eq!(a.lam(3).to_string(), "p^3*q^2*t");
    }

    #[test]
    fn depth_stability() {
        for which in [NamedCf::TypeA, NamedCf::TypeB, NamedCf::TypeC] {
            let j = named_cf(which);
            for order in 0..8 {
                let d = default_depth(order);
                let base = jfraction_series_at_depth(&j, order, d, 64).unwrap();
                let deeper = jfraction_series_at_depth(&j, order, d + 1, 64).unwrap();
                assert_eq!(base, deeper, "{which:?} order {order}");
            }
        }
    }

    #[test]
    fn specialization_chain_reaches_q_catalans() {
        let a = jfraction_series(&named_cf(NamedCf::TypeA), 6).unwrap();
        let base = a.specialize(&[(Var::U, 1), (Var::W, 1), (Var::T, 1)]);
        let bar = base.specialize(&[(Var::P, 1)]);
        assert_eq!(bar, sfraction_series(&q_catalan_bar(), 6).unwrap());
        let tilde = base
            .specialize(&[(Var::Q, 1)])
            .substitute(Var::P, &MPoly::var(Var::Q));
        assert_eq!(tilde, sfraction_series(&q_catalan_tilde(), 6).unwrap());
    }
}
