//! Identity suites run up to a bound, one verdict per checked instance.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{factorize, format_rational, sigma, sigma_via_factorization, Rational};
use crate::bell::{
    bell_p_sequence, bell_w_explicit_sequence, check_index_additivity, check_set_additivity,
};
use crate::error::{Error, Result};
use crate::family::{random_disjoint_pair, random_exponents, random_parts, random_spec, rng};
use crate::partfun::{
    chan_rhs_sequence, kim_rhs_sequence, partition_p, restricted_w_recursion_check, Method,
    NamedFunction,
};
use crate::partitions::{iter_partitions, pentagonal_table};
use crate::report::SequenceReport;

/// Seed shared by every randomized suite so reports are reproducible.
pub const SUITE_SEED: u64 = 0x5eed_be11;

/// Random instances per randomized suite.
pub const SUITE_INSTANCES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Reciprocal,
    Euler,
    Sigma,
    Chan,
    Kim,
    AdditivityIndex,
    AdditivitySet,
    RestrictedRecursion,
    Theta,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::Reciprocal,
        Identity::Euler,
        Identity::Sigma,
        Identity::Chan,
        Identity::Kim,
        Identity::AdditivityIndex,
        Identity::AdditivitySet,
        Identity::RestrictedRecursion,
        Identity::Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Reciprocal => "reciprocal",
            Identity::Euler => "euler",
            Identity::Sigma => "sigma",
            Identity::Chan => "chan",
            Identity::Kim => "kim",
            Identity::AdditivityIndex => "additivity-index",
            Identity::AdditivitySet => "additivity-set",
            Identity::RestrictedRecursion => "restricted-recursion",
            Identity::Theta => "theta",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity '{s}'")))
    }
}

fn check_cap(identity: Identity, bound: usize, cap: usize) -> Result<()> {
    if bound > cap {
        return Err(Error::Parse(format!(
            "{identity} evaluates partition sums up to n = {bound}, above the cap {cap}"
        )));
    }
    Ok(())
}

/// Runs one identity suite for `n = 0..=max`. `cap` bounds the `n` at which
/// partition sums are evaluated.
pub fn run_identity(identity: Identity, max: usize, cap: usize) -> Result<SequenceReport> {
    let mut report = SequenceReport::new(identity.name())
        .param("max", max)
        .param("cap", cap);
    match identity {
        Identity::Reciprocal => {
            check_cap(identity, max, cap)?;
            let mut r = rng(SUITE_SEED);
            let specs: Vec<_> = (0..SUITE_INSTANCES).map(|_| random_spec(&mut r)).collect();
            let sides: Vec<_> = specs
                .iter()
                .map(|s| (bell_p_sequence(max, s), bell_w_explicit_sequence(max, s)))
                .collect();
            for n in 0..=max {
                let expected = if n == 0 { Rational::one() } else { Rational::zero() };
                let bad: Vec<String> = sides
                    .iter()
                    .enumerate()
                    .filter_map(|(i, (p, w))| {
                        let total = (0..=n).fold(Rational::zero(), |acc, k| acc + &p[k] * &w[n - k]);
                        (total != expected).then(|| format!("spec {i}: sum={}", format_rational(&total)))
                    })
                    .collect();
                report.push_verdict(format!("n={n}"), bad.is_empty(), summarize(&bad, "sum P_k W_{n-k} = [n=0]"));
            }
        }
        Identity::Euler => {
            check_cap(identity, max, cap)?;
            let pentagonal = pentagonal_table(max);
            for (n, pent) in pentagonal.iter().enumerate() {
                let by_sum = partition_p(n)?;
                let count = BigUint::from(iter_partitions(n).count());
                let pass = by_sum == *pent && count == *pent;
                report.push_value(n, pent);
                report.push_verdict(
                    format!("n={n}"),
                    pass,
                    format!("partition_sum={by_sum} pentagonal={pent} enumeration={count}"),
                );
            }
        }
        Identity::Sigma => {
            for n in 1..=max.max(1) as u64 {
                let direct = BigUint::from(sigma(n)?);
                let formula = sigma_via_factorization(&factorize(n)?);
                report.push_verdict(
                    format!("n={n}"),
                    direct == formula,
                    format!("divisors={direct} factorization={formula}"),
                );
            }
        }
        Identity::Chan | Identity::Kim => {
            let (function, rhs, modulus) = match identity {
                Identity::Chan => (NamedFunction::Cubic, chan_rhs_sequence(max)?, 3u32),
                _ => (NamedFunction::Overcubic, kim_rhs_sequence(max)?, 6u32),
            };
            let lhs = function.sequence(3 * max + 2, Method::Auto { cap })?;
            for (n, right) in rhs.iter().enumerate() {
                let left = &lhs[3 * n + 2];
                let pass = left == right && (left % modulus).is_zero();
                report.push_value(n, left);
                report.push_verdict(
                    format!("n={n}"),
                    pass,
                    format!("{}({})={left} product={right} mod {modulus}={}", function.name(), 3 * n + 2, left % modulus),
                );
            }
        }
        Identity::AdditivityIndex => {
            check_cap(identity, max, cap)?;
            let mut r = rng(SUITE_SEED);
            for i in 0..SUITE_INSTANCES {
                let base = random_spec(&mut r);
                let a = random_exponents(&mut r, base.factors().len());
                let b = random_exponents(&mut r, base.factors().len());
                for n in 0..=max {
                    let check = check_index_additivity(n, &base, &a, &b)?;
                    report.push_verdict(format!("instance={i} n={n}"), check.holds(), check.describe());
                }
            }
        }
        Identity::AdditivitySet => {
            check_cap(identity, max, cap)?;
            let mut r = rng(SUITE_SEED);
            for i in 0..SUITE_INSTANCES {
                let (a, b) = random_disjoint_pair(&mut r);
                for n in 0..=max {
                    let check = check_set_additivity(n, &a, &b);
                    report.push_verdict(format!("instance={i} n={n}"), check.holds(), check.describe());
                }
            }
        }
        Identity::RestrictedRecursion => {
            check_cap(identity, max, cap)?;
            let mut r = rng(SUITE_SEED);
            for i in 0..SUITE_INSTANCES {
                let parts = random_parts(&mut r, 2);
                for n in 0..=max {
                    let check = restricted_w_recursion_check(n, &parts)?;
                    report.push_verdict(
                        format!("parts={parts:?} n={n}"),
                        check.holds(),
                        format!("instance {i}: {}", check.describe()),
                    );
                }
            }
        }
        Identity::Theta => {
            let psi = NamedFunction::PsiStar.sequence(max, Method::Auto { cap })?;
            let phi = NamedFunction::PhiStar.sequence(max, Method::Auto { cap })?;
            for n in 0..=max {
                let psi_expected = BigUint::from(u8::from(is_triangular(n)));
                let phi_expected = BigUint::from(if n == 0 { 1u8 } else { 2 * u8::from(is_square(n)) });
                report.push_verdict(
                    format!("psi n={n}"),
                    psi[n] == psi_expected,
                    format!("psi*={} expected={psi_expected}", psi[n]),
                );
                report.push_verdict(
                    format!("phi n={n}"),
                    phi[n] == phi_expected,
                    format!("phi*={} expected={phi_expected}", phi[n]),
                );
            }
        }
    }
    Ok(report)
}

fn summarize(failures: &[String], ok: &str) -> String {
    if failures.is_empty() {
        ok.to_string()
    } else {
        failures.join("; ")
    }
}

pub fn is_triangular(n: usize) -> bool {
    (0..).map(|k| k * (k + 1) / 2).take_while(|&t| t <= n).any(|t| t == n)
}

pub fn is_square(n: usize) -> bool {
    (0..).map(|k| k * k).take_while(|&s| s <= n).any(|s| s == n)
}
