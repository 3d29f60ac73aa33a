//! Gamma expansions of palindromic polynomials in `t`, the modified
//! Foata-Strehl (valley-hopping) action, and the permutation route to the
//! gamma coefficients of the type B Catalan polynomials.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::patternclass::{class_polynomial, generate_class, sum_monomials, PatternClass};
use crate::permstats::{
    classify, des, local_stats, vincular2, Boundary, Permutation, ValueClass, Vincular2,
};
use crate::polyring::{MPoly, Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("polynomial is not palindromic in t")]
    NotPalindromic,
}

/// `f(t) = sum_k gammas[k] t^k (1+t)^(center2 - 2k)`. Entries below the
/// lowest power of `t` in `f` are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaExpansion {
    pub center2: usize,
    pub gammas: Vec<MPoly>,
}

fn one_plus_t_pow(e: usize) -> MPoly {
    (&MPoly::one() + &MPoly::var(Var::T)).pow(e as u32)
}

fn t_pow(k: usize) -> MPoly {
    MPoly::var_pow(Var::T, u16::try_from(k).expect("degree too large"))
}

impl GammaExpansion {
    pub fn gamma(&self, k: usize) -> MPoly {
        self.gammas.get(k).cloned().unwrap_or_default()
    }

    pub fn reconstruct(&self) -> MPoly {
        self.gammas
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(k, g)| &(g * &t_pow(k)) * &one_plus_t_pow(self.center2 - 2 * k))
            .sum()
    }
}

/// Text form `(1+t)^4 + (p^3 + ...)*t*(1+t)^2 + (...)*t^2`.
impl fmt::Display for GammaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, g) in self.gammas.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut parts = Vec::new();
            if !g.is_one() {
                let text = g.to_string();
                parts.push(if g.len() == 1 && !text.starts_with('-') { text } else { format!("({text})") });
            }
            match k {
                0 => {}
                1 => parts.push("t".to_string()),
                _ => parts.push(format!("t^{k}")),
            }
            match self.center2 - 2 * k {
                0 => {}
                1 => parts.push("(1+t)".to_string()),
                e => parts.push(format!("(1+t)^{e}")),
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            terms.push(parts.join("*"));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}

/// Expands `f`, read as a polynomial in `t` over the other variables, in
/// the basis `t^k (1+t)^(n-2k)` where `n` is the sum of the lowest and
/// highest powers of `t`. Coefficients are peeled off from the lowest
/// power of `t` upwards; any remainder means `f` was not palindromic.
pub fn gamma_decompose(f: &MPoly) -> Result<GammaExpansion, GammaError> {
    let (Some(r), Some(s)) = (f.min_degree_in(Var::T), f.degree_in(Var::T)) else {
        return Err(GammaError::NotPalindromic);
    };
    let (r, s) = (r as usize, s as usize);
    let n = r + s;
    for k in r..=s {
        if f.coefficient_of(Var::T, k as u16) != f.coefficient_of(Var::T, (n - k) as u16) {
            return Err(GammaError::NotPalindromic);
        }
    }
    let mut gammas = vec![MPoly::zero(); n / 2 + 1];
    let mut residual = f.clone();
    for (k, slot) in gammas.iter_mut().enumerate().skip(r) {
        let g = residual.coefficient_of(Var::T, k as u16);
        if g.is_zero() {
            continue;
        }
        residual -= &(&(&g * &t_pow(k)) * &one_plus_t_pow(n - 2 * k));
        *slot = g;
    }
    if !residual.is_zero() {
        return Err(GammaError::NotPalindromic);
    }
    Ok(GammaExpansion { center2: n, gammas })
}

/// `sigma = w1 w2 x w3 w4` with `w2`, `w3` the maximal factors next to `x`
/// whose letters all exceed `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XFactorization {
    pub w1: Vec<usize>,
    pub w2: Vec<usize>,
    pub x: usize,
    pub w3: Vec<usize>,
    pub w4: Vec<usize>,
}

pub fn x_factorization(sigma: &Permutation, x: usize) -> XFactorization {
    let s = sigma.as_slice();
    let i = sigma.position_of(x) - 1;
    let mut a = i;
    while a > 0 && s[a - 1] > x {
        a -= 1;
    }
    let mut b = i + 1;
    while b < s.len() && s[b] > x {
        b += 1;
    }
    XFactorization {
        w1: s[..a].to_vec(),
        w2: s[a..i].to_vec(),
        x,
        w3: s[i + 1..b].to_vec(),
        w4: s[b..].to_vec(),
    }
}

/// `w1 w2 x w3 w4 -> w1 w3 x w2 w4`.
pub fn phi_x(sigma: &Permutation, x: usize) -> Permutation {
    let f = x_factorization(sigma, x);
    let mut out = f.w1;
    out.extend(f.w3);
    out.push(x);
    out.extend(f.w2);
    out.extend(f.w4);
    Permutation::from_vec_unchecked(out)
}

/// `phi_x` on double ascents and double descents, the identity on peaks and
/// valleys (boundary `sigma(0) = sigma(n+1) = 0`).
pub fn phi_prime_x(sigma: &Permutation, x: usize) -> Permutation {
    match classify(sigma, Boundary::Zero)[x - 1] {
        ValueClass::Peak | ValueClass::Valley => sigma.clone(),
        ValueClass::DoubleAscent | ValueClass::DoubleDescent => phi_x(sigma, x),
    }
}

/// The product of `phi'_x` over `x` in `s`; the factors commute.
pub fn phi_prime_s<'a>(sigma: &Permutation, s: impl IntoIterator<Item = &'a usize>) -> Permutation {
    s.into_iter().fold(sigma.clone(), |acc, &x| phi_prime_x(&acc, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MfsOrbit {
    /// The unique member without double descents.
    pub representative: Permutation,
    pub members: BTreeSet<Permutation>,
}

pub fn mfs_orbit(sigma: &Permutation) -> MfsOrbit {
    let dd = local_stats(sigma, Boundary::Zero).double_descents;
    let rep = phi_prime_s(sigma, &dd);
    let da: Vec<usize> = local_stats(&rep, Boundary::Zero)
        .double_ascents
        .into_iter()
        .collect();
    let members = (0..1u64 << da.len())
        .map(|mask| {
            let subset = da.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x);
            phi_prime_s(&rep, subset)
        })
        .collect();
    MfsOrbit {
        representative: rep,
        members,
    }
}

/// Sum of `p^(2-13) q^(31-2)` over members of the `B4` class of size `n1`
/// with no double descents and `val = des = k`.
pub fn gamma_via_perms(n1: usize, k: usize) -> MPoly {
    let members: Vec<Permutation> = generate_class(n1, PatternClass::B4).collect();
    sum_monomials(members.par_iter().filter_map(|s| {
        let st = local_stats(s, Boundary::Zero);
        (st.dd() == 0 && st.val() == k && des(s) == k).then(|| {
            let e = |x: usize| u16::try_from(x).expect("statistic too large");
            Monomial::ONE
                .with(Var::P, e(vincular2(s, Vincular2::TwoOneThree, None)))
                .with(Var::Q, e(vincular2(s, Vincular2::ThreeOneTwo, None)))
        })
    }))
}

/// `gamma_via_perms(n + 1, k)` for `k = 0..=n/2`.
pub fn gamma_row_via_perms(n: usize) -> Vec<MPoly> {
    (0..=n / 2).map(|k| gamma_via_perms(n + 1, k)).collect()
}

/// Checks the six-variable identity
/// `B_n = sum_k gamma_{n+1,k}(p,q) (tw)^k (u+tv)^(n-2k)`, with `B_n` the
/// `B4` class polynomial.
pub fn full_gamma_identity_check(n: usize) -> bool {
    let tw = &MPoly::var(Var::T) * &MPoly::var(Var::W);
    let u_tv = &MPoly::var(Var::U) + &(&MPoly::var(Var::T) * &MPoly::var(Var::V));
    let rhs: MPoly = gamma_row_via_perms(n)
        .iter()
        .enumerate()
        .map(|(k, g)| &(g * &tw.pow(k as u32)) * &u_tv.pow((n - 2 * k) as u32))
        .sum();
    class_polynomial(n, PatternClass::B4) == rhs
}

/// Multinomial `n! / (k! k! (n-2k)!)`, the value of `gamma_{n+1,k}(1,1)`.
pub fn gamma_count(n: usize, k: usize) -> num_bigint::BigInt {
    let fact = |m: usize| (1..=m).fold(num_bigint::BigInt::one(), |acc, i| acc * i);
    fact(n) / (fact(k) * fact(k) * fact(n - 2 * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::{vincular3, vincular3_refined};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn p() -> MPoly {
        MPoly::var(Var::P)
    }

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn decompose_examples() {
        let f = &one_plus_t_pow(2) + &(&(&p() + &q()) * &t());
        let g = gamma_decompose(&f).unwrap();
        assert_eq!(g.center2, 2);
        assert_eq!(g.gammas, vec![MPoly::one(), &p() + &q()]);
        assert_eq!(g.reconstruct(), f);
        assert_eq!(g.to_string(), "(1+t)^2 + (p + q)*t");

        let g = gamma_decompose(&t()).unwrap();
        assert_eq!((g.center2, g.gammas.clone()), (2, vec![MPoly::zero(), MPoly::one()]));
        assert_eq!(g.to_string(), "t");

        let bad = &MPoly::one() + &(&MPoly::constant(2) * &t());
        assert_eq!(gamma_decompose(&bad), Err(GammaError::NotPalindromic));
        assert_eq!(gamma_decompose(&MPoly::zero()), Err(GammaError::NotPalindromic));
        // Palindromic but not in the span with the right center.
        let f = &(&MPoly::one() + &t().pow(2)) - &t();
        assert!(gamma_decompose(&f).unwrap().gammas[1] == MPoly::constant(-3));
    }

    #[test]
    fn decompose_round_trips_on_random_gammas() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(0..8usize);
            let r = rng.gen_range(0..=n / 2);
            let gammas: Vec<MPoly> = (0..=n / 2)
                .map(|k| {
                    if k < r {
                        MPoly::zero()
                    } else {
                        &MPoly::constant(rng.gen_range(1..5)) * &p().pow(rng.gen_range(0..3))
                    }
                })
                .collect();
            let g = GammaExpansion { center2: n, gammas };
            assert_eq!(gamma_decompose(&g.reconstruct()).unwrap(), g);
        }
    }

    #[test]
    fn factorization_examples() {
        let s = perm("472589316");
        let f = x_factorization(&s, 3);
        assert_eq!((f.w1, f.w2, f.w3, f.w4), (vec![4, 7, 2], vec![5, 8, 9], vec![], vec![1, 6]));
        let f = x_factorization(&s, 9);
        assert!(f.w2.is_empty() && f.w3.is_empty());
        // 7 is a peak.
        let f = x_factorization(&s, 7);
        assert!(f.w2.is_empty() && f.w3.is_empty());
        assert_eq!(phi_x(&s, 3), perm("472358916"));
        assert_eq!(phi_prime_s(&s, &[3, 4, 5]), perm("742389516"));
        assert_eq!(vincular3(&perm("742389516")).total(), 9);
        assert_eq!(phi_prime_s(&s, &[]), s);
    }

    #[test]
    fn orbit_examples() {
        let o = mfs_orbit(&perm("21"));
        assert_eq!(o.representative, perm("12"));
        assert_eq!(o.members, [perm("12"), perm("21")].into_iter().collect());
        let o = mfs_orbit(&perm("21435"));
        assert_eq!(o.members.len(), 1);
        assert_eq!(o.representative, perm("21435"));
    }

    #[test]
    fn action_properties() {
        for n in 1..=6 {
            let mut seen = BTreeSet::new();
            let mut total = 0;
            for s in Permutation::all(n) {
                for x in 1..=n {
                    assert_eq!(phi_x(&phi_x(&s, x), x), s);
                    let sx = phi_prime_x(&s, x);
                    for y in 1..=n {
                        assert_eq!(phi_prime_x(&sx, y), phi_prime_x(&phi_prime_x(&s, y), x));
                    }
                }
                let o = mfs_orbit(&s);
                assert!(o.members.contains(&s));
                assert_eq!(local_stats(&o.representative, Boundary::Zero).dd(), 0);
                let da = local_stats(&o.representative, Boundary::Zero).da();
                assert_eq!(o.members.len(), 1 << da);
                if seen.insert(o.representative.clone()) {
                    total += o.members.len();
                }
                let key = |m: &Permutation| {
                    let st = local_stats(m, Boundary::Zero);
                    (
                        st.pk(),
                        st.val(),
                        vincular3(m).total(),
                        vincular2(m, Vincular2::TwoOneThree, None),
                        vincular2(m, Vincular2::ThreeOneTwo, None),
                    )
                };
                assert!(o.members.iter().all(|m| key(m) == key(&s)));
            }
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn refined_counts_invariant() {
        for n in 3..=6 {
            for s in Permutation::all(n) {
                let o = mfs_orbit(&s);
                for k in 1..=n {
                    for l in k + 1..=n {
                        let want = vincular3_refined(&s, k, l).unwrap().total();
                        assert!(o
                            .members
                            .iter()
                            .all(|m| vincular3_refined(m, k, l).unwrap().total() == want));
                    }
                }
            }
        }
    }

    #[test]
    fn toggles_shift_descent_counts() {
        for s in Permutation::all(6) {
            let st = local_stats(&s, Boundary::Zero);
            for &x in &st.double_ascents {
                let m = phi_prime_x(&s, x);
                let sm = local_stats(&m, Boundary::Zero);
                assert_eq!((des(&m), sm.dd(), sm.da()), (des(&s) + 1, st.dd() + 1, st.da() - 1));
            }
        }
    }

    #[test]
    fn class_is_closed() {
        for s in generate_class(6, PatternClass::B4) {
            assert!(mfs_orbit(&s).members.iter().all(|m| PatternClass::B4.contains_member(m)));
        }
    }

    #[test]
    fn displayed_expansions() {
        let pq = &p() + &q();
        let expected: Vec<Vec<MPoly>> = vec![
            vec![MPoly::one()],
            vec![MPoly::one(), pq.clone()],
            vec![MPoly::one(), &(&p() + &MPoly::constant(2)) * &pq],
            vec![
                MPoly::one(),
                &pq * &(&(&p().pow(2) + &(&MPoly::constant(2) * &p())) + &MPoly::constant(3)),
                &(&(&p().pow(3) + &p()) + &q()) * &pq,
            ],
            vec![
                MPoly::one(),
                &pq * &[p().pow(3), &MPoly::constant(2) * &p().pow(2), &MPoly::constant(3) * &p(), MPoly::constant(4)]
                    .into_iter()
                    .sum::<MPoly>(),
                &pq * &[
                    p().pow(5),
                    &MPoly::constant(2) * &p().pow(4),
                    &MPoly::constant(2) * &p().pow(3),
                    &MPoly::constant(2) * &p().pow(2),
                    &(&(&MPoly::constant(2) * &q()) + &MPoly::constant(3)) * &p(),
                    &MPoly::constant(3) * &q(),
                ]
                .into_iter()
                .sum::<MPoly>(),
            ],
        ];
        for (i, want) in expected.iter().enumerate() {
            let n = i + 1;
            let b = class_polynomial(n, PatternClass::B4).specialize(&[(Var::U, 1), (Var::V, 1), (Var::W, 1)]);
            let g = gamma_decompose(&b).unwrap();
            assert_eq!(g.center2, n);
            assert_eq!(&g.gammas, want, "n={n}");
            assert_eq!(&gamma_row_via_perms(n), want, "n={n}");
        }
    }

    #[test]
    fn gamma_via_perms_examples() {
        assert_eq!(gamma_via_perms(3, 1), &p() + &q());
        for n1 in 1..=6 {
            assert!(gamma_via_perms(n1, 0).is_one());
        }
        assert_eq!(gamma_count(4, 2), 6.into());
        assert_eq!(gamma_count(4, 1), 12.into());
    }

    #[test]
    fn full_identity_small() {
        for n in 0..=4 {
            assert!(full_gamma_identity_check(n), "n={n}");
        }
    }
}
