//! Exact integer and rational helpers: factorization, divisor sums and
//! divisibility indicators.
//!
//! Coefficients are carried as [`Rational`], an always-reduced big rational
//! with positive denominator, so structural equality is value equality.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::product::SupportSet;

/// Exact rational number used for every coefficient in the crate.
pub type Rational = BigRational;

/// Prime factorization `n = p_1^{b_1} ... p_m^{b_m}` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs, checking that the
    /// primes are strictly increasing, actually prime, and the exponents positive.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        let mut last = 1;
        for &(p, b) in &pairs {
            if p <= last || !is_prime(p) || b == 0 {
                return Err(Error::Parse(format!(
                    "({p}, {b}) is not a valid prime power entry after {last}"
                )));
            }
            last = p;
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Multiplies the prime powers back together.
    pub fn value(&self) -> BigUint {
        self.pairs
            .iter()
            .fold(BigUint::one(), |acc, &(p, b)| acc * BigUint::from(p).pow(b))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Factorizes `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut b = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            b += 1;
        }
        if b > 0 {
            pairs.push((p, b));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

/// Sum of all positive divisors of `n`, by enumerating divisor pairs up to sqrt(n).
pub fn sigma(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += d;
            let other = n / d;
            if other != d {
                total += other;
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Exact binomial coefficient `C(n, k)` via the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Each partial product is itself a binomial coefficient, so the division is exact.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Divisor sum from a prime factorization, using for each prime power `p^b`
///
/// `sum_{k=0}^{floor(b/2)} (-1)^k C(b-k, k) p^k (1+p)^{b-2k}`
///
/// which equals `1 + p + ... + p^b`.
pub fn sigma_via_factorization(f: &Factorization) -> BigUint {
    let mut product = BigInt::one();
    for &(p, b) in f.pairs() {
        let p_big = BigInt::from(p);
        let p_plus_one = BigInt::from(p) + 1u32;
        let mut inner = BigInt::zero();
        for k in 0..=(b / 2) {
            let term = BigInt::from(binomial(u64::from(b - k), u64::from(k)))
                * p_big.pow(k)
                * p_plus_one.pow(b - 2 * k);
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        product *= inner;
    }
    debug_assert!(!product.is_negative());
    product.to_biguint().expect("divisor sums are positive")
}

/// Sum of the divisors of `n` that lie in `support`.
pub fn restricted_divisor_sum(n: u64, support: &SupportSet) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    Ok(support.divisors_of(n).iter().sum())
}

/// `1` if `i` divides `j`, else `0`.
pub fn indicator(i: u64, j: u64) -> Result<u8> {
    if i == 0 {
        return Err(Error::ZeroArgument { what: "i" });
    }
    if j == 0 {
        return Err(Error::ZeroArgument { what: "j" });
    }
    Ok(u8::from(j.is_multiple_of(i)))
}

/// Converts an exact rational to a natural number, or reports why it is not one.
pub fn to_natural(name: &str, n: usize, value: &Rational) -> Result<BigUint> {
    if value.is_integer() && !value.is_negative() {
        if let Some(v) = value.to_integer().to_biguint() {
            return Ok(v);
        }
    }
    Err(Error::NonIntegral {
        name: name.to_string(),
        n,
        value: format_rational(value),
    })
}

/// `"p/q"` for proper fractions, plain decimal for integers.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"p/q"`, `"-p/q"` or a plain integer into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parsed = match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad_rational(text))?;
            let den: BigInt = den.trim().parse().map_err(|_| bad_rational(text))?;
            if den.is_zero() {
                return Err(bad_rational(text));
            }
            Rational::new(num, den)
        }
        None => Rational::from_integer(text.parse().map_err(|_| bad_rational(text))?),
    };
    Ok(parsed)
}

fn bad_rational(text: &str) -> Error {
    Error::Parse(format!("'{text}' is not an exact rational of the form p/q"))
}

pub(crate) fn rational_from_u64(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap().pairs(), &[(97, 1)]);
        assert_eq!(factorize(0), Err(Error::ZeroArgument { what: "n" }));
    }

    #[test]
    fn factorization_rebuilds_n() {
        for n in 1..=2000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), BigUint::from(n));
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.pairs().iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn from_pairs_validates() {
        assert!(Factorization::from_pairs(vec![(2, 2), (3, 1)]).is_ok());
        assert!(Factorization::from_pairs(vec![(3, 1), (2, 2)]).is_err());
        assert!(Factorization::from_pairs(vec![(4, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(5, 0)]).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1).unwrap(), 1);
        assert_eq!(sigma(6).unwrap(), 1 + 2 + 3 + 6);
        assert_eq!(sigma(7).unwrap(), 8);
        assert!(sigma(0).is_err());
    }

    #[test]
    fn sigma_formula_examples() {
        assert_eq!(sigma_via_factorization(&Factorization::default()), BigUint::one());
        let twelve = Factorization::from_pairs(vec![(2, 2), (3, 1)]).unwrap();
        assert_eq!(sigma_via_factorization(&twelve), BigUint::from(28u32));
        let five = Factorization::from_pairs(vec![(5, 1)]).unwrap();
        assert_eq!(sigma_via_factorization(&five), BigUint::from(6u32));
    }

    #[test]
    fn sigma_formula_large_exponent() {
        // 2^40: geometric sum 2^41 - 1
        let f = Factorization::from_pairs(vec![(2, 40)]).unwrap();
        assert_eq!(sigma_via_factorization(&f), BigUint::from((1u64 << 41) - 1));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(60, 30), BigUint::from(118264581564861424u64));
    }

    #[test]
    fn restricted_divisor_examples() {
        assert_eq!(restricted_divisor_sum(6, &SupportSet::AllNaturals).unwrap(), 12);
        assert_eq!(restricted_divisor_sum(5, &SupportSet::MultiplesOf(2)).unwrap(), 0);
        assert_eq!(restricted_divisor_sum(4, &SupportSet::MultiplesOf(2)).unwrap(), 6);
        assert!(restricted_divisor_sum(0, &SupportSet::AllNaturals).is_err());
    }

    #[test]
    fn restricted_divisor_multiples_of_one_is_sigma() {
        for n in 1..=1000 {
            assert_eq!(
                restricted_divisor_sum(n, &SupportSet::MultiplesOf(1)).unwrap(),
                sigma(n).unwrap()
            );
        }
    }

    #[test]
    fn restricted_divisor_multiples_scale() {
        for r in 1..=6u64 {
            for n in 1..=200u64 {
                let expected = if n % r == 0 { r * sigma(n / r).unwrap() } else { 0 };
                assert_eq!(
                    restricted_divisor_sum(n, &SupportSet::MultiplesOf(r)).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(indicator(2, 6).unwrap(), 1);
        assert_eq!(indicator(4, 6).unwrap(), 0);
        for n in 1..50 {
            assert_eq!(indicator(1, n).unwrap(), 1);
        }
        assert!(indicator(0, 3).is_err());
    }

    #[test]
    fn rational_text_round_trip() {
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&parse_rational("12").unwrap()), "12");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn to_natural_rejects_fractions_and_negatives() {
        assert!(to_natural("x", 0, &parse_rational("3/2").unwrap()).is_err());
        assert!(to_natural("x", 0, &parse_rational("-3").unwrap()).is_err());
        assert_eq!(to_natural("x", 0, &parse_rational("6/2").unwrap()).unwrap(), BigUint::from(3u32));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000)
            .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn is_reduced(r: &Rational) -> bool {
        use num_integer::Integer;
        r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_exact(a in rational(), c in rational()) {
            prop_assert_eq!((a.clone() + &c) - &c, a);
        }

        #[test]
        fn arithmetic_stays_reduced(a in rational(), b in rational()) {
            prop_assert!(is_reduced(&(a.clone() + &b)));
            prop_assert!(is_reduced(&(a.clone() - &b)));
            prop_assert!(is_reduced(&(a.clone() * &b)));
            if !b.is_zero() {
                prop_assert!(is_reduced(&(a / &b)));
            }
        }
    }
}
