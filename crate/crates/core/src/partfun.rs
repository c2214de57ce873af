//! Named partition functions built on the partition-polynomial engine, and
//! the product identities that tie them together.
//!
//! Each function is defined by a [`GeneratingRatio`]. The closed forms go
//! through the partition sums in [`crate::bell`]; the identity right-hand
//! sides (Chan, Kim) are expanded as series so that every identity check
//! compares two independent computations.

use num_bigint::BigUint;

use crate::arith::{sigma, to_natural, Rational};
use crate::bell::{
    bell_w_explicit, convolve_wp, faa_di_bruno_sum, ratio_sequence, EvaluatedPsiTable,
    IdentityCheck,
};
use crate::error::{Error, Result};
use crate::product::{Factor, GeneratingRatio, ProductSpec, SupportSet};

/// Largest `n` evaluated through the partition sum unless overridden.
pub const DEFAULT_FAA_CAP: usize = 60;

/// How a coefficient sequence is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Partition sums (`P_n`, `W_n` and their convolution).
    FaaDiBruno,
    /// Truncated series: product expansion and reciprocal.
    Series,
    /// Partition sums up to the cap, series beyond it.
    Auto { cap: usize },
}

fn unit(support: SupportSet, exponent: i64) -> Factor {
    Factor::unit(support, exponent).expect("nonzero exponent, valid support")
}

fn multiples(r: u64, exponent: i64) -> Factor {
    unit(SupportSet::MultiplesOf(r), exponent)
}

/// `(t^r; t^r)_inf` products with the given exponents: a numerator list and a
/// denominator list of `(r, exponent)` pairs.
fn eta_ratio(numerator: &[(u64, i64)], denominator: &[(u64, i64)]) -> GeneratingRatio {
    GeneratingRatio::new(
        numerator.iter().map(|&(r, e)| multiples(r, e)).collect(),
        denominator.iter().map(|&(r, e)| multiples(r, e)).collect(),
    )
}

/// Four-factor quotient
/// `prod (1-t^{r1 n})^{a1} (1-t^{r2 n})^{a2} / prod (1-t^{s1 n})^{b1} (1-t^{s2 n})^{b2}`.
///
/// A zero exponent drops its factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourFactorSpec {
    pub r1: u64,
    pub a1: u32,
    pub r2: u64,
    pub a2: u32,
    pub s1: u64,
    pub b1: u32,
    pub s2: u64,
    pub b2: u32,
}

impl FourFactorSpec {
    pub fn validate(&self) -> Result<()> {
        if [self.r1, self.r2, self.s1, self.s2].contains(&0) {
            return Err(Error::ZeroArgument { what: "multiple r/s" });
        }
        Ok(())
    }

    pub fn ratio(&self) -> Result<GeneratingRatio> {
        self.validate()?;
        let side = |pairs: [(u64, u32); 2]| -> Vec<(u64, i64)> {
            pairs
                .into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(r, e)| (r, i64::from(e)))
                .collect()
        };
        Ok(eta_ratio(
            &side([(self.r1, self.a1), (self.r2, self.a2)]),
            &side([(self.s1, self.b1), (self.s2, self.b2)]),
        ))
    }
}

/// The sequences reachable by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedFunction {
    P,
    Restricted(Vec<u64>),
    Cubic,
    Overcubic,
    PsiStar,
    PhiStar,
}

impl NamedFunction {
    /// Accepts `p`, `w`, `cubic`, `overcubic`, `psi-star`, `phi-star`; `w` needs parts.
    pub fn parse(name: &str, parts: Option<&[u64]>) -> Result<Self> {
        Ok(match name {
            "p" => Self::P,
            "w" => {
                let parts = parts.ok_or_else(|| Error::Parse("w needs a list of parts".into()))?;
                SupportSet::finite(parts)?;
                Self::Restricted(parts.to_vec())
            }
            "cubic" => Self::Cubic,
            "overcubic" => Self::Overcubic,
            "psi-star" => Self::PsiStar,
            "phi-star" => Self::PhiStar,
            other => return Err(Error::Parse(format!("unknown function '{other}'"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::P => "p",
            Self::Restricted(_) => "w",
            Self::Cubic => "cubic",
            Self::Overcubic => "overcubic",
            Self::PsiStar => "psi-star",
            Self::PhiStar => "phi-star",
        }
    }

    pub fn ratio(&self) -> GeneratingRatio {
        match self {
            Self::P => eta_ratio(&[], &[(1, 1)]),
            Self::Restricted(parts) => GeneratingRatio::new(
                vec![],
                vec![unit(SupportSet::finite(parts).expect("validated in parse"), 1)],
            ),
            Self::Cubic => cubic_ratio(),
            Self::Overcubic => overcubic_ratio(),
            Self::PsiStar => psi_ratio(),
            Self::PhiStar => phi_ratio(),
        }
    }

    /// `f(0), ..., f(max)` as natural numbers.
    pub fn sequence(&self, max: usize, method: Method) -> Result<Vec<BigUint>> {
        let values = ratio_values(&self.ratio(), max, method);
        values
            .iter()
            .enumerate()
            .map(|(n, v)| to_natural(self.name(), n, v))
            .collect()
    }
}

/// Coefficients `0..=max` of `ratio` by the chosen method.
pub fn ratio_values(ratio: &GeneratingRatio, max: usize, method: Method) -> Vec<Rational> {
    match method {
        Method::FaaDiBruno => ratio_sequence(ratio, max),
        Method::Series => ratio.series(max).into_coeffs(),
        Method::Auto { cap } if max <= cap => ratio_sequence(ratio, max),
        Method::Auto { cap } => {
            let mut values = ratio_sequence(ratio, cap);
            values.extend(ratio.series(max).into_coeffs().into_iter().skip(cap + 1));
            values
        }
    }
}

pub fn cubic_ratio() -> GeneratingRatio {
    eta_ratio(&[], &[(1, 1), (2, 1)])
}

pub fn overcubic_ratio() -> GeneratingRatio {
    eta_ratio(&[(4, 1)], &[(1, 2), (2, 1)])
}

pub fn psi_ratio() -> GeneratingRatio {
    eta_ratio(&[(2, 2)], &[(1, 1)])
}

pub fn phi_ratio() -> GeneratingRatio {
    eta_ratio(&[(2, 5)], &[(1, 2), (4, 2)])
}

/// The quotient whose coefficients, times 3, give `a(3n+2)`.
pub fn chan_ratio() -> GeneratingRatio {
    eta_ratio(&[(3, 3), (6, 3)], &[(1, 4), (2, 4)])
}

/// The quotient whose coefficients, times 6, give `abar(3n+2)`.
pub fn kim_ratio() -> GeneratingRatio {
    eta_ratio(&[(3, 6), (4, 3)], &[(1, 8), (2, 3)])
}

fn spec_of(factors: Vec<Factor>) -> ProductSpec {
    ProductSpec::new(factors).expect("non-empty")
}

/// `p(n) = sum_{pi(n)} prod_j (1/k_j!) (sigma(j)/j)^{k_j}`.
pub fn partition_p(n: usize) -> Result<BigUint> {
    let sigmas = (1..=n as u64)
        .map(|j| Ok(Rational::from_integer(sigma(j)?.into())))
        .collect::<Result<Vec<_>>>()?;
    let value = faa_di_bruno_sum(&EvaluatedPsiTable::from_values(sigmas), n, false);
    to_natural("p", n, &value)
}

/// `W(n, d^s)`: partitions of `n` into parts from `parts`, through the
/// restricted divisor sums of `parts`.
pub fn restricted_w(n: usize, parts: &[u64]) -> Result<BigUint> {
    let spec = ProductSpec::single(Factor::unit(SupportSet::finite(parts)?, 1)?);
    to_natural("w", n, &bell_w_explicit(n, &spec))
}

/// Cubic partitions: even parts in two colors.
pub fn cubic_a(n: usize) -> Result<BigUint> {
    let spec = spec_of(cubic_ratio().denominator);
    to_natural("cubic", n, &bell_w_explicit(n, &spec))
}

fn scaled_series_coefficient(name: &str, ratio: &GeneratingRatio, prefactor: u32, n: usize) -> Result<BigUint> {
    let coefficient = ratio.series(n).into_coeffs().pop().expect("order n");
    to_natural(name, n, &(coefficient * Rational::from_integer(prefactor.into())))
}

/// `3 [t^n] (t^3;t^3)^3 (t^6;t^6)^3 / ((t;t)^4 (t^2;t^2)^4)`.
pub fn chan_rhs(n: usize) -> Result<BigUint> {
    scaled_series_coefficient("chan", &chan_ratio(), 3, n)
}

pub fn chan_rhs_sequence(max: usize) -> Result<Vec<BigUint>> {
    scaled_series_sequence("chan", &chan_ratio(), 3, max)
}

/// Overcubic partitions.
pub fn overcubic_abar(n: usize) -> Result<BigUint> {
    let ratio = overcubic_ratio();
    let value = convolve_wp(n, &spec_of(ratio.numerator), &spec_of(ratio.denominator));
    to_natural("overcubic", n, &value)
}

/// `6 [t^n] (t^3;t^3)^6 (t^4;t^4)^3 / ((t;t)^8 (t^2;t^2)^3)`.
pub fn kim_rhs(n: usize) -> Result<BigUint> {
    scaled_series_coefficient("kim", &kim_ratio(), 6, n)
}

pub fn kim_rhs_sequence(max: usize) -> Result<Vec<BigUint>> {
    scaled_series_sequence("kim", &kim_ratio(), 6, max)
}

fn scaled_series_sequence(name: &str, ratio: &GeneratingRatio, prefactor: u32, max: usize) -> Result<Vec<BigUint>> {
    let k = Rational::from_integer(prefactor.into());
    ratio
        .series(max)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| to_natural(name, n, &(c * &k)))
        .collect()
}

/// Coefficients of `(t^2;t^2)^2 / (t;t)`.
pub fn psi_star(n: usize) -> Result<BigUint> {
    let ratio = psi_ratio();
    to_natural("psi-star", n, &convolve_wp(n, &spec_of(ratio.numerator), &spec_of(ratio.denominator)))
}

/// Coefficients of `(t^2;t^2)^5 / ((t;t)^2 (t^4;t^4)^2)`.
pub fn phi_star(n: usize) -> Result<BigUint> {
    let ratio = phi_ratio();
    to_natural("phi-star", n, &convolve_wp(n, &spec_of(ratio.numerator), &spec_of(ratio.denominator)))
}

/// Coefficient of `t^n` in a four-factor quotient, through the partition sums.
pub fn generic_wp(n: usize, spec: &FourFactorSpec) -> Result<Rational> {
    Ok(ratio_sequence(&spec.ratio()?, n).pop().expect("n + 1 values"))
}

/// `W(n, d^s) - W(n - d_s, d^s) = W(n, d^{s-1})`, with `W` at negative
/// arguments taken as 0 and `d_s` the last listed part.
pub fn restricted_w_recursion_check(n: usize, parts: &[u64]) -> Result<IdentityCheck> {
    if parts.len() < 2 {
        return Err(Error::InvalidSupport("recursion needs at least two parts".into()));
    }
    let last = *parts.last().expect("len >= 2") as usize;
    let full = restricted_w(n, parts)?;
    let shifted = if n >= last {
        restricted_w(n - last, parts)?
    } else {
        BigUint::default()
    };
    let fewer = restricted_w(n, &parts[..parts.len() - 1])?;
    let lhs = Rational::from_integer(full.into()) - Rational::from_integer(shifted.into());
    Ok(IdentityCheck::new(lhs, Rational::from_integer(fewer.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p_pentagonal;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn partition_p_examples() {
        assert_eq!(partition_p(0).unwrap(), nat(1));
        assert_eq!(partition_p(4).unwrap(), nat(5));
        assert_eq!(partition_p(10).unwrap(), nat(42));
        assert_eq!(partition_p(30).unwrap(), p_pentagonal(30));
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_w(5, &[1, 2]).unwrap(), nat(3));
        assert_eq!(restricted_w(13, &[1]).unwrap(), nat(1));
        assert_eq!(restricted_w(3, &[2]).unwrap(), nat(0));
        assert!(restricted_w(3, &[2, 2]).is_err());
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(cubic_a(3).unwrap(), nat(4));
        assert_eq!(cubic_a(0).unwrap(), nat(1));
        assert_eq!(cubic_a(2).unwrap(), nat(3));
    }

    #[test]
    fn chan_examples() {
        assert_eq!(chan_rhs(0).unwrap(), cubic_a(2).unwrap());
        assert_eq!(chan_rhs(1).unwrap(), cubic_a(5).unwrap());
        for v in chan_rhs_sequence(10).unwrap() {
            assert_eq!(&v % 3u32, nat(0));
        }
    }

    #[test]
    fn overcubic_examples() {
        assert_eq!(overcubic_abar(0).unwrap(), nat(1));
        assert_eq!(overcubic_abar(1).unwrap(), nat(2));
        // (t;t)^-2 gives 1, 2, 5 and (t^2;t^2)^-1 adds t^2
        assert_eq!(overcubic_abar(2).unwrap(), nat(6));
    }

    #[test]
    fn kim_examples() {
        assert_eq!(kim_rhs(0).unwrap(), overcubic_abar(2).unwrap());
        assert_eq!(kim_rhs(1).unwrap(), overcubic_abar(5).unwrap());
        for v in kim_rhs_sequence(10).unwrap() {
            assert_eq!(&v % 6u32, nat(0));
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(psi_star(3).unwrap(), nat(1));
        assert_eq!(psi_star(4).unwrap(), nat(0));
        assert_eq!(psi_star(0).unwrap(), nat(1));
        assert_eq!(phi_star(0).unwrap(), nat(1));
        assert_eq!(phi_star(4).unwrap(), nat(2));
        assert_eq!(phi_star(3).unwrap(), nat(0));
    }

    #[test]
    fn generic_examples() {
        let psi_like = FourFactorSpec { r1: 2, a1: 2, r2: 2, a2: 0, s1: 1, b1: 1, s2: 1, b2: 0 };
        assert_eq!(generic_wp(1, &psi_like).unwrap(), Rational::from_integer(1.into()));
        let cubic_like = FourFactorSpec { r1: 1, a1: 0, r2: 1, a2: 0, s1: 1, b1: 1, s2: 2, b2: 1 };
        assert_eq!(generic_wp(3, &cubic_like).unwrap(), Rational::from_integer(4.into()));
        let any = FourFactorSpec { r1: 3, a1: 2, r2: 5, a2: 1, s1: 1, b1: 3, s2: 2, b2: 2 };
        assert_eq!(generic_wp(0, &any).unwrap(), Rational::from_integer(1.into()));
        assert_eq!(generic_wp(12, &any).unwrap(), any.ratio().unwrap().series(12).coeffs()[12]);
        let bad = FourFactorSpec { r1: 0, ..any };
        assert!(generic_wp(2, &bad).is_err());
    }

    #[test]
    fn recursion_examples() {
        let check = restricted_w_recursion_check(5, &[1, 2]).unwrap();
        assert!(check.holds());
        assert_eq!(check.rhs, Rational::from_integer(1.into()));
        assert!(restricted_w_recursion_check(0, &[3, 4, 7]).unwrap().holds());
        assert!(restricted_w_recursion_check(2, &[1, 5]).unwrap().holds());
        assert!(restricted_w_recursion_check(4, &[1]).is_err());
    }

    #[test]
    fn named_sequences_agree_across_methods() {
        for f in [
            NamedFunction::P,
            NamedFunction::Restricted(vec![2, 3, 7]),
            NamedFunction::Cubic,
            NamedFunction::Overcubic,
            NamedFunction::PsiStar,
            NamedFunction::PhiStar,
        ] {
            let faa = f.sequence(18, Method::FaaDiBruno).unwrap();
            assert_eq!(faa, f.sequence(18, Method::Series).unwrap(), "{}", f.name());
            assert_eq!(faa, f.sequence(18, Method::Auto { cap: 7 }).unwrap(), "{}", f.name());
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(NamedFunction::parse("cubic", None).unwrap(), NamedFunction::Cubic);
        assert!(NamedFunction::parse("w", None).is_err());
        assert!(NamedFunction::parse("w", Some(&[1, 0])).is_err());
        assert!(NamedFunction::parse("nope", None).is_err());
    }
}
