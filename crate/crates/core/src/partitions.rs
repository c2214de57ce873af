//! Integer partitions as multiplicity vectors, plus independent counting
//! oracles (pentagonal recurrence, exact-part recurrence, brute force).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Multiplicity vector `(k_1, ..., k_n)` with `sum j * k_j = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    multiplicities: Vec<u32>,
}

impl PartitionVector {
    /// Checks the weight invariant; the vector length fixes `n`.
    pub fn new(multiplicities: Vec<u32>) -> Result<Self> {
        let n = multiplicities.len();
        let weight: usize = multiplicities
            .iter()
            .enumerate()
            .map(|(i, &k)| (i + 1) * k as usize)
            .sum();
        if weight != n {
            return Err(Error::Parse(format!(
                "multiplicities have weight {weight} but length {n}"
            )));
        }
        Ok(Self { multiplicities })
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.multiplicities.len()
    }

    /// `k_j` for `1 <= j <= n`.
    pub fn multiplicity(&self, j: usize) -> u32 {
        self.multiplicities[j - 1]
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Number of parts, `sum k_j`.
    pub fn part_count(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Nonzero `(j, k_j)` pairs, smallest part first.
    pub fn parts(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| (i + 1, k))
    }
}

/// Stream over every partition of `n`, lexicographically decreasing on
/// `(k_n, ..., k_1)`: starts at the single part `n`, ends at all ones.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: PartitionVector,
    started: bool,
    done: bool,
}

/// Enumerates the partitions of `n`; `n = 0` yields the empty vector once.
pub fn iter_partitions(n: usize) -> Partitions {
    let mut multiplicities = vec![0; n];
    if n > 0 {
        multiplicities[n - 1] = 1;
    }
    Partitions {
        current: PartitionVector { multiplicities },
        started: false,
        done: false,
    }
}

impl Partitions {
    /// Advances and borrows the next vector without cloning it.
    pub fn next_ref(&mut self) -> Option<&PartitionVector> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        if !self.step() {
            self.done = true;
            return None;
        }
        Some(&self.current)
    }

    // Replace one copy of the smallest part x > 1, together with all the ones,
    // by as many parts x-1 as fit and a single remainder part.
    fn step(&mut self) -> bool {
        let k = &mut self.current.multiplicities;
        let Some(x) = (2..=k.len()).find(|&j| k[j - 1] > 0) else {
            return false;
        };
        let pool = x + k[0] as usize;
        k[x - 1] -= 1;
        k[0] = 0;
        let smaller = x - 1;
        k[smaller - 1] += (pool / smaller) as u32;
        let rem = pool % smaller;
        if rem > 0 {
            k[rem - 1] += 1;
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = PartitionVector;

    fn next(&mut self) -> Option<PartitionVector> {
        self.next_ref().cloned()
    }
}

/// Stream over the partitions of `n` whose parts all come from an allowed
/// set, in the same order as [`iter_partitions`].
#[derive(Debug, Clone)]
pub struct RestrictedPartitions {
    current: PartitionVector,
    /// Allowed parts, largest first.
    parts: Vec<usize>,
    counts: Vec<usize>,
    /// `remaining[l]` is what is left to cover before level `l`.
    remaining: Vec<usize>,
    started: bool,
    done: bool,
}

/// Enumerates the partitions of `n` into parts `j` with `allowed(j)`.
pub fn iter_partitions_into(n: usize, allowed: impl Fn(usize) -> bool) -> RestrictedPartitions {
    let parts: Vec<usize> = (1..=n).rev().filter(|&j| allowed(j)).collect();
    let levels = parts.len();
    let mut stream = RestrictedPartitions {
        current: PartitionVector { multiplicities: vec![0; n] },
        parts,
        counts: vec![0; levels],
        remaining: vec![0; levels + 1],
        started: false,
        done: false,
    };
    stream.remaining[0] = n;
    stream.fill(0);
    stream
}

impl RestrictedPartitions {
    fn fill(&mut self, from: usize) {
        for level in from..self.parts.len() {
            let part = self.parts[level];
            let count = self.remaining[level] / part;
            self.counts[level] = count;
            self.current.multiplicities[part - 1] = count as u32;
            self.remaining[level + 1] = self.remaining[level] - count * part;
        }
    }

    fn complete(&self) -> bool {
        self.remaining[self.parts.len()] == 0
    }

    fn step(&mut self) -> bool {
        loop {
            let Some(level) = (0..self.parts.len()).rev().find(|&l| self.counts[l] > 0) else {
                return false;
            };
            let part = self.parts[level];
            self.counts[level] -= 1;
            self.current.multiplicities[part - 1] -= 1;
            self.remaining[level + 1] += part;
            self.fill(level + 1);
            if self.complete() {
                return true;
            }
        }
    }

    /// Advances and borrows the next vector without cloning it.
    pub fn next_ref(&mut self) -> Option<&PartitionVector> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.step()
        } else {
            self.started = true;
            self.complete() || self.step()
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(&self.current)
    }
}

impl Iterator for RestrictedPartitions {
    type Item = PartitionVector;

    fn next(&mut self) -> Option<PartitionVector> {
        self.next_ref().cloned()
    }
}

/// `p(0), ..., p(n)` from the generalized pentagonal-number recurrence.
pub fn pentagonal_table(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let first = k * (3 * k - 1) / 2;
            if first > m {
                break;
            }
            let second = k * (3 * k + 1) / 2;
            let mut term = table[m - first].clone();
            if second <= m {
                term += &table[m - second];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table.push(acc);
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("partition counts are nonnegative"))
        .collect()
}

/// `p(n)` via the pentagonal recurrence, memoized in a table local to the call.
pub fn p_pentagonal(n: usize) -> BigUint {
    pentagonal_table(n).pop().expect("table holds p(0)")
}

/// `p_m(n)`: partitions of `n` into exactly `m` parts.
pub fn count_exact_parts(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    // row[j] holds p_{parts}(j) for the current number of parts.
    let mut row: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::one();
    for parts in 1..=m {
        let mut next = vec![BigUint::zero(); n + 1];
        for j in parts..=n {
            let with_fewer = row[j - 1].clone();
            let shifted = next[j - parts].clone();
            next[j] = with_fewer + shifted;
        }
        row = next;
    }
    row[n].clone()
}

/// Number of multisets over `parts` summing to `n`, counted leaf by leaf.
pub fn count_restricted_bruteforce(n: usize, parts: &[usize]) -> Result<u64> {
    if parts.is_empty() {
        return Err(Error::InvalidSupport("part list is empty".into()));
    }
    if parts.contains(&0) {
        return Err(Error::ZeroArgument { what: "part" });
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSupport("parts must be distinct".into()));
    }
    fn walk(remaining: usize, parts: &[usize]) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let Some((&first, rest)) = parts.split_first() else {
            return 0;
        };
        let mut count = 0;
        let mut used = 0;
        while used <= remaining {
            count += walk(remaining - used, rest);
            used += first;
        }
        count
    }
    Ok(walk(n, &sorted))
}
