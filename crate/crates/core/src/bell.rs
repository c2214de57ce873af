//! Bell partition polynomials `P_n`, their reciprocals `W_n`, and ratio
//! coefficients `WP_n`, evaluated at exact rational arguments.
//!
//! `P_n` is the sum over all partitions `(k_1, ..., k_n)` of `n` of
//!
//! ```text
//! prod_j (1 / k_j!) (Psi_j / j)^{k_j},      Psi_j = -sum_i a_i psi_j(C_i, z_i)
//! ```
//!
//! and `W_n` is the same sum weighted by `(-1)^{k_1 + ... + k_n}`. The sum is
//! accumulated over integers: with `D` a common denominator of `Psi_1..Psi_n`,
//! each term times `n! D^n` equals `(n! / z_k) prod_j (Psi_j D^j)^{k_j}` where
//! `z_k = prod_j j^{k_j} k_j!` divides `n!`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorial, format_rational, rational_from_u64, Rational};
use crate::error::{Error, Result};
#[cfg(test)]
use crate::partitions::iter_partitions;
use crate::product::{Factor, GeneratingRatio, ProductSpec, SupportSet};

/// `psi_n(C, z) = sum_{d in C, d | n} d z^{n/d}`.
pub fn psi(n: usize, support: &SupportSet, z: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    let mut total = Rational::zero();
    for d in support.divisors_of(n as u64) {
        let power = if z.is_one() {
            Rational::one()
        } else {
            num_traits::pow(z.clone(), (n as u64 / d) as usize)
        };
        total += rational_from_u64(d) * power;
    }
    Ok(total)
}

fn big_psi_of(n: usize, factors: &[Factor]) -> Result<Rational> {
    let mut total = Rational::zero();
    for f in factors {
        total -= Rational::from_integer(f.exponent().into()) * psi(n, f.support(), f.z())?;
    }
    Ok(total)
}

/// `Psi_n = -sum_j a_j psi_n(C_j, z_j)`.
pub fn big_psi(n: usize, spec: &ProductSpec) -> Result<Rational> {
    big_psi_of(n, spec.factors())
}

/// `Psi_1, ..., Psi_n`, computed once and shared by every partition term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedPsiTable {
    values: Vec<Rational>,
}

impl EvaluatedPsiTable {
    pub fn new(spec: &ProductSpec, n: usize) -> Self {
        Self::for_factors(spec.factors(), n)
    }

    pub(crate) fn for_factors(factors: &[Factor], n: usize) -> Self {
        let values = (1..=n)
            .map(|j| big_psi_of(j, factors).expect("j >= 1"))
            .collect();
        Self { values }
    }

    /// Table holding arbitrary `Psi_1, ..., Psi_n`.
    pub fn from_values(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Psi_j`, `1 <= j <= len`.
    pub fn get(&self, j: usize) -> &Rational {
        &self.values[j - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Integer data for one partition sum of weight `n`.
///
/// Choosing `k` copies of part `j` with `r` still to fill contributes the
/// integer `r! / ((r - jk)! j^k k!)`; along a complete path these multiply to
/// `n! / z_k`. Each edge factor is stored premultiplied by `(Psi_j D^j)^k`.
struct ScaledTerms {
    n: usize,
    /// Common denominator `D` of `Psi_1..Psi_n`.
    denominator: BigInt,
    /// Parts `j` with `Psi_j != 0`, decreasing.
    parts: Vec<usize>,
    /// `edges[r][j-1][k-1]` for allowed `j` and `1 <= k <= r/j`; empty otherwise.
    edges: Vec<Vec<Vec<BigInt>>>,
}

impl ScaledTerms {
    fn new(values: &[Rational]) -> Self {
        let n = values.len();
        let denominator = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let mut scaled = Vec::with_capacity(n);
        let mut d_power = BigInt::one();
        for v in values {
            d_power *= &denominator;
            scaled.push((v * Rational::from_integer(d_power.clone())).to_integer());
        }
        let parts: Vec<usize> = (1..=n).rev().filter(|&j| !scaled[j - 1].is_zero()).collect();

        let mut edges = vec![vec![Vec::new(); n]; n + 1];
        for &j in &parts {
            // powers[k] = scaled_j^k
            let mut powers = vec![BigInt::one()];
            for k in 1..=n / j {
                let next = &powers[k - 1] * &scaled[j - 1];
                powers.push(next);
            }
            for (r, row) in edges.iter_mut().enumerate().skip(j) {
                // falling = r (r-1) ... (r-jk+1), cycles = j^k k!
                let mut falling = BigInt::one();
                let mut cycles = BigInt::one();
                let mut entries = Vec::with_capacity(r / j);
                for k in 1..=r / j {
                    for i in 0..j {
                        falling *= r - (k - 1) * j - i;
                    }
                    cycles *= j * k;
                    entries.push(&falling / &cycles * &powers[k]);
                }
                row[j - 1] = entries;
            }
        }
        Self { n, denominator, parts, edges }
    }

    /// `n! D^n`, the common scale of every accumulated term.
    fn scale(&self) -> BigInt {
        BigInt::from(factorial(self.n as u64)) * num_traits::pow(self.denominator.clone(), self.n)
    }

    /// Depth-first over multiplicities of `parts[idx..]`, largest part first;
    /// `value` is the product of edge factors chosen so far.
    fn walk(&self, idx: usize, remaining: usize, value: &BigInt, odd: bool, alternating: bool, sum: &mut BigInt) {
        let idx = idx + self.parts[idx.min(self.parts.len())..].partition_point(|&j| j > remaining);
        let Some(&j) = self.parts.get(idx) else {
            return;
        };
        let edges = &self.edges[remaining][j - 1];
        if idx + 1 == self.parts.len() {
            if remaining.is_multiple_of(j) {
                let k = remaining / j;
                let term = value * &edges[k - 1];
                if alternating && (odd ^ (k % 2 == 1)) {
                    *sum -= term;
                } else {
                    *sum += term;
                }
            }
            return;
        }
        for k in (1..=remaining / j).rev() {
            let rest = remaining - j * k;
            let child = value * &edges[k - 1];
            let child_odd = odd ^ (k % 2 == 1);
            if rest == 0 {
                if alternating && child_odd {
                    *sum -= child;
                } else {
                    *sum += child;
                }
            } else {
                self.walk(idx + 1, rest, &child, child_odd, alternating, sum);
            }
        }
        self.walk(idx + 1, remaining, value, odd, alternating, sum);
    }
}

/// The partition sum over `pi(n)` for the given table; `alternating` applies
/// the sign `(-1)^{sum k_j}`. Partitions using a part `j` with `Psi_j = 0`
/// contribute nothing and are not visited.
///
/// Panics if the table is shorter than `n`.
pub fn faa_di_bruno_sum(table: &EvaluatedPsiTable, n: usize, alternating: bool) -> Rational {
    assert!(table.len() >= n, "table holds {} values, need {n}", table.len());
    if n == 0 {
        return Rational::one();
    }
    let terms = ScaledTerms::new(&table.values[..n]);
    let mut sum = BigInt::zero();
    terms.walk(0, n, &BigInt::one(), false, alternating, &mut sum);
    Rational::new(sum, terms.scale())
}

/// Reference evaluation visiting every partition of `n` from the ordered
/// stream, one term `(n! / z_k) prod_j (Psi_j D^j)^{k_j}` at a time.
#[cfg(test)]
fn streamed_sum(table: &EvaluatedPsiTable, n: usize, alternating: bool) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let terms = ScaledTerms::new(&table.values[..n]);
    let n_factorial = BigInt::from(factorial(n as u64));
    let mut sum = BigInt::zero();
    let mut stream = iter_partitions(n);
    while let Some(partition) = stream.next_ref() {
        let mut numerator = BigInt::one();
        let mut z = BigInt::one();
        let mut part_count = 0u32;
        for (j, k) in partition.parts() {
            let scaled = table.get(j) * Rational::from_integer(num_traits::pow(terms.denominator.clone(), j));
            numerator *= num_traits::pow(scaled.to_integer(), k as usize);
            z *= num_traits::pow(BigInt::from(j), k as usize) * BigInt::from(factorial(u64::from(k)));
            part_count += k;
        }
        let term = &n_factorial / z * numerator;
        if alternating && part_count % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Rational::new(sum, terms.scale())
}

fn partition_sums(factors: &[Factor], max: usize, alternating: bool) -> Vec<Rational> {
    let table = EvaluatedPsiTable::for_factors(factors, max);
    (0..=max)
        .map(|n| faa_di_bruno_sum(&table, n, alternating))
        .collect()
}

/// `P_n(z, C, a)` by the partition sum.
pub fn bell_p(n: usize, spec: &ProductSpec) -> Rational {
    faa_di_bruno_sum(&EvaluatedPsiTable::new(spec, n), n, false)
}

/// `P_0, ..., P_max` sharing one `Psi` table.
pub fn bell_p_sequence(max: usize, spec: &ProductSpec) -> Vec<Rational> {
    partition_sums(spec.factors(), max, false)
}

/// `W_n` by the signed partition sum.
pub fn bell_w_explicit(n: usize, spec: &ProductSpec) -> Rational {
    faa_di_bruno_sum(&EvaluatedPsiTable::new(spec, n), n, true)
}

pub fn bell_w_explicit_sequence(max: usize, spec: &ProductSpec) -> Vec<Rational> {
    partition_sums(spec.factors(), max, true)
}

/// `W_n` from `W_0 = 1`, `W_n = -sum_{k<n} W_k P_{n-k}`.
pub fn bell_w_recursive(n: usize, spec: &ProductSpec) -> Rational {
    bell_w_recursive_sequence(n, spec).pop().expect("W_0 present")
}

pub fn bell_w_recursive_sequence(max: usize, spec: &ProductSpec) -> Vec<Rational> {
    let p = bell_p_sequence(max, spec);
    let mut w: Vec<Rational> = Vec::with_capacity(max + 1);
    w.push(Rational::one());
    for n in 1..=max {
        let mut acc = Rational::zero();
        for k in 0..n {
            acc -= &w[k] * &p[n - k];
        }
        w.push(acc);
    }
    w
}

fn cauchy(left: &[Rational], right: &[Rational], n: usize) -> Rational {
    (0..=n).fold(Rational::zero(), |acc, m| acc + &left[m] * &right[n - m])
}

/// `WP_n = sum_{m=0..n} P_m(numer) W_{n-m}(denom)`.
pub fn convolve_wp(n: usize, numer: &ProductSpec, denom: &ProductSpec) -> Rational {
    let p = bell_p_sequence(n, numer);
    let w = bell_w_explicit_sequence(n, denom);
    cauchy(&p, &w, n)
}

pub fn convolve_wp_sequence(max: usize, numer: &ProductSpec, denom: &ProductSpec) -> Vec<Rational> {
    ratio_sequence(&GeneratingRatio::new(numer.factors().to_vec(), denom.factors().to_vec()), max)
}

/// Coefficients `0..=max` of a generating ratio through the partition sums;
/// an empty side contributes the constant 1.
pub fn ratio_sequence(ratio: &GeneratingRatio, max: usize) -> Vec<Rational> {
    let p = partition_sums(&ratio.numerator, max, false);
    if ratio.denominator.is_empty() {
        return p;
    }
    let w = partition_sums(&ratio.denominator, max, true);
    if ratio.numerator.is_empty() {
        return w;
    }
    (0..=max).map(|n| cauchy(&p, &w, n)).collect()
}

/// Two independently evaluated sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        Self { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn describe(&self) -> String {
        format!(
            "lhs={} rhs={}",
            format_rational(&self.lhs),
            format_rational(&self.rhs)
        )
    }
}

/// `P_n(z, C, a+b) = sum_j P_j(z, C, a) P_{n-j}(z, C, b)`.
///
/// Factors whose summed exponent vanishes drop out of the left side.
pub fn check_index_additivity(
    n: usize,
    base: &ProductSpec,
    a: &[i64],
    b: &[i64],
) -> Result<IdentityCheck> {
    let with_a = base.with_exponents(a)?;
    let with_b = base.with_exponents(b)?;
    let summed: Vec<Factor> = base
        .factors()
        .iter()
        .zip(a.iter().zip(b))
        .filter(|(_, (x, y))| *x + *y != 0)
        .map(|(f, (x, y))| f.with_exponent(x + y))
        .collect::<Result<_>>()?;
    let lhs = partition_sums(&summed, n, false).pop().expect("n + 1 values");
    let rhs = cauchy(&bell_p_sequence(n, &with_a), &bell_p_sequence(n, &with_b), n);
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `P_n(z, A+B, a+b) = sum_j P_j(z, A, a) P_{n-j}(z, B, b)`, the left side
/// evaluated on the concatenated factor list.
pub fn check_set_additivity(n: usize, spec_a: &ProductSpec, spec_b: &ProductSpec) -> IdentityCheck {
    let lhs = bell_p(n, &spec_a.concat(spec_b));
    let rhs = cauchy(&bell_p_sequence(n, spec_a), &bell_p_sequence(n, spec_b), n);
    IdentityCheck::new(lhs, rhs)
}
