//! Products `prod_j prod_{m in C_j} (1 - z_j t^m)^{a_j}` and their expansion
//! as truncated series.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// A set of positive integers indexing the factors of one product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportSet {
    AllNaturals,
    MultiplesOf(u64),
    Finite(BTreeSet<u64>),
}

impl SupportSet {
    pub fn multiples_of(r: u64) -> Result<Self> {
        let s = SupportSet::MultiplesOf(r);
        s.validate()?;
        Ok(s)
    }

    /// Rejects empty lists, zeros and duplicates.
    pub fn finite(elements: &[u64]) -> Result<Self> {
        let set: BTreeSet<u64> = elements.iter().copied().collect();
        if set.len() != elements.len() {
            return Err(Error::InvalidSupport("finite support has repeated entries".into()));
        }
        let s = SupportSet::Finite(set);
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SupportSet::AllNaturals => Ok(()),
            SupportSet::MultiplesOf(0) => Err(Error::InvalidSupport("multiples of 0".into())),
            SupportSet::MultiplesOf(_) => Ok(()),
            SupportSet::Finite(set) if set.is_empty() => {
                Err(Error::InvalidSupport("finite support is empty".into()))
            }
            SupportSet::Finite(set) if set.contains(&0) => {
                Err(Error::InvalidSupport("finite support contains 0".into()))
            }
            SupportSet::Finite(_) => Ok(()),
        }
    }

    pub fn contains(&self, m: u64) -> bool {
        match self {
            SupportSet::AllNaturals => m >= 1,
            SupportSet::MultiplesOf(r) => m >= 1 && m.is_multiple_of(*r),
            SupportSet::Finite(set) => set.contains(&m),
        }
    }

    /// Members `<= bound`, ascending.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        match self {
            SupportSet::AllNaturals => (1..=bound).collect(),
            SupportSet::MultiplesOf(r) => (1..=bound / r).map(|i| i * r).collect(),
            SupportSet::Finite(set) => set.range(..=bound).copied().collect(),
        }
    }

    /// Members dividing `n`, ascending.
    pub fn divisors_of(&self, n: u64) -> Vec<u64> {
        match self {
            SupportSet::Finite(set) => set.iter().copied().filter(|d| n.is_multiple_of(*d)).collect(),
            _ => {
                let mut small = Vec::new();
                let mut large = Vec::new();
                let mut d = 1u64;
                while d * d <= n {
                    if n.is_multiple_of(d) {
                        small.push(d);
                        if d != n / d {
                            large.push(n / d);
                        }
                    }
                    d += 1;
                }
                small
                    .into_iter()
                    .chain(large.into_iter().rev())
                    .filter(|&d| self.contains(d))
                    .collect()
            }
        }
    }
}

/// One `(support, z, a)` triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    support: SupportSet,
    z: Rational,
    exponent: i64,
}

impl Factor {
    pub fn new(support: SupportSet, z: Rational, exponent: i64) -> Result<Self> {
        support.validate()?;
        if exponent == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(Self { support, z, exponent })
    }

    /// Factor with argument `z = 1`.
    pub fn unit(support: SupportSet, exponent: i64) -> Result<Self> {
        Self::new(support, Rational::one(), exponent)
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn z(&self) -> &Rational {
        &self.z
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn with_exponent(&self, exponent: i64) -> Result<Self> {
        Self::new(self.support.clone(), self.z.clone(), exponent)
    }
}

/// Non-empty list of factors defining `f(t, z, C, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(Self { factors })
    }

    pub fn single(factor: Factor) -> Self {
        Self { factors: vec![factor] }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The same supports and arguments with every exponent negated.
    pub fn negated(&self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    exponent: -f.exponent,
                    ..f.clone()
                })
                .collect(),
        }
    }

    /// Replaces the index vector, keeping supports and arguments.
    pub fn with_exponents(&self, exponents: &[i64]) -> Result<Self> {
        if exponents.len() != self.factors.len() {
            return Err(Error::ExponentCount {
                expected: self.factors.len(),
                got: exponents.len(),
            });
        }
        let factors = self
            .factors
            .iter()
            .zip(exponents)
            .map(|(f, &a)| f.with_exponent(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { factors })
    }

    /// Factor list of `self` followed by that of `other`.
    pub fn concat(&self, other: &ProductSpec) -> Self {
        Self {
            factors: self.factors.iter().chain(&other.factors).cloned().collect(),
        }
    }
}

/// Expands the product up to `t^order`; support elements beyond the order
/// contribute nothing.
pub fn expand_product(spec: &ProductSpec, order: usize) -> TruncatedSeries {
    expand_factors(spec.factors(), order)
}

pub(crate) fn expand_factors(factors: &[Factor], order: usize) -> TruncatedSeries {
    let mut c = vec![Rational::zero(); order + 1];
    c[0] = Rational::one();
    for factor in factors {
        let z = factor.z();
        for m in factor.support().members_up_to(order as u64) {
            let m = m as usize;
            if factor.exponent() > 0 {
                // multiply by (1 - z t^m)
                for _ in 0..factor.exponent() {
                    for n in (m..=order).rev() {
                        if !c[n - m].is_zero() {
                            let delta = z * &c[n - m];
                            c[n] -= delta;
                        }
                    }
                }
            } else {
                // divide by (1 - z t^m)
                for _ in 0..-factor.exponent() {
                    for n in m..=order {
                        if !c[n - m].is_zero() {
                            let delta = z * &c[n - m];
                            c[n] += delta;
                        }
                    }
                }
            }
        }
    }
    TruncatedSeries::new(c).expect("order + 1 coefficients")
}

/// The same product computed as `exp(sum_j a_j sum_m log(1 - z_j t^m))`.
pub fn expand_product_exp_log(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries> {
    let mut exponent = TruncatedSeries::zero(order);
    for factor in spec.factors() {
        let weight = Rational::from_integer(factor.exponent().into());
        for m in factor.support().members_up_to(order as u64) {
            let mut binomial = vec![Rational::zero(); order + 1];
            binomial[0] = Rational::one();
            binomial[m as usize] = -factor.z().clone();
            let log = TruncatedSeries::new(binomial)?.log()?;
            exponent = exponent.add(&log.scale(&weight))?;
        }
    }
    exponent.exp()
}

/// Quotient of two products; an empty side stands for the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratingRatio {
    pub numerator: Vec<Factor>,
    pub denominator: Vec<Factor>,
}

impl GeneratingRatio {
    pub fn new(numerator: Vec<Factor>, denominator: Vec<Factor>) -> Self {
        Self { numerator, denominator }
    }

    /// Numerator expansion times the reciprocal of the denominator expansion.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let top = expand_factors(&self.numerator, order);
        let bottom = expand_factors(&self.denominator, order)
            .reciprocal()
            .expect("products have constant term 1");
        top.mul(&bottom).expect("equal orders")
    }
}
