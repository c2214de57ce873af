//! Truncated formal power series over exact rationals.
//!
//! Every operation requires operands of equal order; nothing is silently
//! re-truncated.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{format_rational, rational_from_u64, Rational};
use crate::error::{Error, Result};

/// Coefficients `c_0, ..., c_N` of a power series known up to `t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut series = Self::zero(order);
        series.coeffs[0] = value;
        series
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `c_n`; fails past the truncation order.
    pub fn coefficient(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse by the triangular recurrence
    /// `v_0 = 1/u_0`, `v_n = -(1/u_0) sum_{k=1..n} u_k v_{n-k}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let lead = &self.coeffs[0];
        if lead.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_lead = lead.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_lead.clone());
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let u = &self.coeffs[k];
                if !u.is_zero() {
                    acc += u * &out[n - k];
                }
            }
            out.push(-(acc * &inv_lead));
        }
        Ok(Self { coeffs: out })
    }

    /// Logarithm of a series with constant term 1, from `g' = u'/u`:
    /// `n g_n = n u_n - sum_{k=1}^{n-1} k g_k u_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogDomain {
                found: format_rational(&self.coeffs[0]),
            });
        }
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        for n in 1..=self.order() {
            let mut acc = rational_from_u64(n as u64) * &self.coeffs[n];
            for k in 1..n {
                let u = &self.coeffs[n - k];
                if !u.is_zero() && !out[k].is_zero() {
                    acc -= rational_from_u64(k as u64) * &out[k] * u;
                }
            }
            out[n] = acc / rational_from_u64(n as u64);
        }
        Ok(Self { coeffs: out })
    }

    /// Exponential of a series with zero constant term:
    /// `n e_n = sum_{k=1..n} k u_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain {
                found: format_rational(&self.coeffs[0]),
            });
        }
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        out[0] = Rational::one();
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let u = &self.coeffs[k];
                if !u.is_zero() {
                    acc += rational_from_u64(k as u64) * u * &out[n - k];
                }
            }
            out[n] = acc / rational_from_u64(n as u64);
        }
        Ok(Self { coeffs: out })
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        if exponent < 0 {
            if self.coeffs[0].is_zero() {
                return Err(Error::NotInvertible);
            }
            return self.pow(-exponent)?.reciprocal();
        }
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exponent as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ints(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(c).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ints(&[1, 1, 0, 0]).mul(&ints(&[1, -1, 0, 0])).unwrap(), ints(&[1, 0, -1, 0]));
        assert_eq!(ints(&[3, 1, 4]).mul(&TruncatedSeries::zero(2)).unwrap(), TruncatedSeries::zero(2));
        assert_eq!(ints(&[1, 1, 1]).mul(&ints(&[1, 1, 0])).unwrap(), ints(&[1, 2, 2]));
        assert_eq!(
            ints(&[1, 1]).mul(&ints(&[1, 1, 1])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(ints(&[1, -1, 0, 0, 0, 0]).reciprocal().unwrap(), ints(&[1; 6]));
        assert_eq!(
            ints(&[2]).reciprocal().unwrap(),
            TruncatedSeries::new(vec![q(1, 2)]).unwrap()
        );
        // (1 - t)(1 - t^2) = 1 - t - t^2 + t^3
        assert_eq!(ints(&[1, -1, -1, 1, 0]).reciprocal().unwrap(), ints(&[1, 1, 2, 2, 3]));
        assert_eq!(ints(&[0, 1]).reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn log_examples() {
        assert_eq!(TruncatedSeries::one(5).log().unwrap(), TruncatedSeries::zero(5));
        let geometric = ints(&[1, -1, 0, 0, 0]).reciprocal().unwrap();
        assert_eq!(
            geometric.log().unwrap(),
            TruncatedSeries::new(vec![q(0, 1), q(1, 1), q(1, 2), q(1, 3), q(1, 4)]).unwrap()
        );
        assert_eq!(
            ints(&[1, -1, 0, 0]).log().unwrap(),
            TruncatedSeries::new(vec![q(0, 1), q(-1, 1), q(-1, 2), q(-1, 3)]).unwrap()
        );
        assert!(matches!(ints(&[2, 1]).log(), Err(Error::LogDomain { .. })));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::zero(4).exp().unwrap(), TruncatedSeries::one(4));
        assert_eq!(
            ints(&[0, 1, 0, 0]).exp().unwrap(),
            TruncatedSeries::new(vec![q(1, 1), q(1, 1), q(1, 2), q(1, 6)]).unwrap()
        );
        assert!(matches!(ints(&[1, 1]).exp(), Err(Error::ExpDomain { .. })));
    }

    #[test]
    fn pow_examples() {
        let s = ints(&[5, 2, 7]);
        assert_eq!(s.pow(0).unwrap(), TruncatedSeries::one(2));
        assert_eq!(ints(&[1, -1, 0, 0]).pow(-2).unwrap(), ints(&[1, 2, 3, 4]));
        assert_eq!(ints(&[1, -1, 0, 0]).pow(3).unwrap(), ints(&[1, -3, 3, -1]));
        assert_eq!(ints(&[0, 1]).pow(-1), Err(Error::NotInvertible));
        assert_eq!(s.pow(5).unwrap(), s.mul(&s).unwrap().mul(&s).unwrap().mul(&s).unwrap().mul(&s).unwrap());
    }

    #[test]
    fn coefficient_access() {
        assert_eq!(TruncatedSeries::one(0).coefficient(0).unwrap(), &Rational::one());
        let geometric = ints(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 0]).reciprocal().unwrap();
        assert_eq!(geometric.coefficient(9).unwrap(), &Rational::one());
        assert_eq!(geometric.coefficient(10), Err(Error::IndexOutOfRange { n: 10, order: 9 }));
        assert_eq!(TruncatedSeries::new(vec![]), Err(Error::EmptySeries));
    }

    fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-9i64..=9, 1i64..=4), order + 1).prop_map(|cs| {
            TruncatedSeries::new(cs.into_iter().map(|(n, d)| q(n, d)).collect()).unwrap()
        })
    }

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        series(order).prop_map(|s| {
            let mut c = s.into_coeffs();
            c[0] = Rational::one();
            TruncatedSeries::new(c).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_commutes_and_associates(a in series(8), b in series(8), c in series(8)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn reciprocal_is_inverse(u in series(16)) {
            prop_assume!(!u.coeffs()[0].is_zero());
            prop_assert_eq!(u.mul(&u.reciprocal().unwrap()).unwrap(), TruncatedSeries::one(16));
        }

        #[test]
        fn exp_log_round_trip(u in unit_series(12)) {
            prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
        }

        #[test]
        fn log_exp_round_trip(v in series(12)) {
            let mut c = v.into_coeffs();
            c[0] = Rational::zero();
            let v = TruncatedSeries::new(c).unwrap();
            prop_assert_eq!(v.exp().unwrap().log().unwrap(), v);
        }
    }
}
