use super::{MPoly, PolyError, Var, DEFAULT_EXPONENT_CAP};

/// Power series in `z` truncated after `z^order`, with [`MPoly`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<MPoly>,
}

impl Series {
    /// `coeffs` must hold exactly `order + 1` entries.
    pub fn new(order: usize, coeffs: Vec<MPoly>) -> Result<Self, PolyError> {
        if coeffs.len() != order + 1 {
            return Err(PolyError::SeriesLength {
                order,
                len: coeffs.len(),
            });
        }
        Ok(Series { order, coeffs })
    }

    /// Pads with zeros or truncates as needed.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<MPoly>) -> Self {
        coeffs.resize(order + 1, MPoly::zero());
        Series { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, MPoly::one())
    }

    pub fn constant(order: usize, c: MPoly) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_coeffs(order, vec![MPoly::zero(), MPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MPoly> {
        self.coeffs
    }

    /// Coefficient of `z^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> MPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    fn check_order(&self, other: &Series) -> Result<(), PolyError> {
        if self.order != other.order {
            return Err(PolyError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series, PolyError> {
        self.check_order(other)?;
        Ok(Series {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, PolyError> {
        self.check_order(other)?;
        Ok(Series {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series, PolyError> {
        self.mul_with_cap(other, DEFAULT_EXPONENT_CAP)
    }

    pub fn mul_with_cap(&self, other: &Series, cap: u16) -> Result<Series, PolyError> {
        self.check_order(other)?;
        let mut coeffs = vec![MPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &a.checked_mul(b, cap)?;
                }
            }
        }
        Ok(Series {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplicative inverse; the constant coefficient must be exactly 1.
    pub fn inverse(&self) -> Result<Series, PolyError> {
        self.inverse_with_cap(DEFAULT_EXPONENT_CAP)
    }

    pub fn inverse_with_cap(&self, cap: u16) -> Result<Series, PolyError> {
        if !self.coeffs[0].is_one() {
            return Err(PolyError::NonUnitConstant);
        }
        // With a = 1 - r, the inverse b satisfies b_m = sum_{i=1..m} r_i b_{m-i}.
        let mut out: Vec<MPoly> = Vec::with_capacity(self.order + 1);
        out.push(MPoly::one());
        for m in 1..=self.order {
            let mut acc = MPoly::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if a.is_zero() || out[m - i].is_zero() {
                    continue;
                }
                acc -= &a.checked_mul(&out[m - i], cap)?;
            }
            out.push(acc);
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &MPoly) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_with_cap(&self, c: &MPoly, cap: u16) -> Result<Series, PolyError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c, cap))
            .collect::<Result<_, _>>()?;
        Ok(Series {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplies by `z^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Series {
        let mut coeffs = vec![MPoly::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take((self.order + 1).saturating_sub(k)).cloned());
        Series {
            order: self.order,
            coeffs,
        }
    }

    /// Re-truncates at a lower order.
    pub fn truncate(&self, order: usize) -> Series {
        Series::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn substitute(&self, v: Var, value: &MPoly) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.substitute(v, value)).collect(),
        }
    }

    pub fn specialize(&self, values: &[(Var, i64)]) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.specialize(values)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(xs: &[i64]) -> Series {
        Series::new(
            xs.len() - 1,
            xs.iter().map(|&x| MPoly::constant(x)).collect(),
        )
        .unwrap()
    }

    fn values(s: &Series) -> Vec<BigInt> {
        s.coeffs().iter().map(MPoly::constant_term).collect()
    }

    #[test]
    fn product_of_conjugates() {
        let prod = ints(&[1, 1, 0]).mul(&ints(&[1, -1, 0])).unwrap();
        assert_eq!(prod, ints(&[1, 0, -1]));
    }

    #[test]
    fn identity_and_order_mismatch() {
        let s = ints(&[3, 1, 4, 1]);
        assert_eq!(s.mul(&Series::one(3)).unwrap(), s);
        assert!(matches!(
            s.mul(&Series::one(2)),
            Err(PolyError::OrderMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn catalan_square() {
        // C = 1 + zC^2, so [z^2] C^2 = C_3 = 5.
        let c = ints(&[1, 1, 2, 5, 14]);
        assert_eq!(values(&c.mul(&c).unwrap())[2], BigInt::from(5));
    }

    #[test]
    fn inverses() {
        assert_eq!(ints(&[1, -1, 0, 0]).inverse().unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(
            ints(&[1, -1, -1, 0, 0]).inverse().unwrap(),
            ints(&[1, 1, 2, 3, 5])
        );
        assert_eq!(Series::one(4).inverse().unwrap(), Series::one(4));
        assert!(matches!(
            ints(&[2, 1]).inverse(),
            Err(PolyError::NonUnitConstant)
        ));
    }

    #[test]
    fn shift_truncates() {
        assert_eq!(ints(&[1, 2, 3]).shift(1), ints(&[0, 1, 2]));
        assert_eq!(ints(&[1, 2, 3]).shift(5), ints(&[0, 0, 0]));
    }

    #[test]
    fn length_is_validated() {
        assert!(Series::new(2, vec![MPoly::one()]).is_err());
    }
}
