//! Literal transcriptions of six published closed forms for the cubic,
//! overcubic and theta coefficient sequences, compared value by value with
//! the engine.
//!
//! Each printed form reads
//!
//! ```text
//! c1 * S(n; alpha, x) + c2 * sum_{m=1..n} S(m; beta, y) * S(n-m; alpha, x)
//! S(n; alpha, x) = sum_{pi(n)} alpha^{sum k_j} prod_j (1/k_j!) (x(j)/j)^{k_j}
//! ```
//!
//! where `x(j)` and `y(j)` are combinations of `I_r(j) sigma(j/r)` exactly as
//! transcribed, without the factor `r` that the divisor sum over multiples of
//! `r` carries.

use serde::Serialize;

use crate::arith::{format_rational, indicator, sigma, Rational};
use crate::bell::{faa_di_bruno_sum, EvaluatedPsiTable};
use crate::partfun::{cubic_ratio, overcubic_ratio, phi_ratio, psi_ratio};
use crate::product::GeneratingRatio;

/// `sum_i coeff_i * I_{r_i}(j) * sigma(j / r_i)` as `(coeff, r)` pairs.
type DivisorCombination = &'static [(i64, u64)];

#[derive(Debug, Clone, Copy)]
struct PrintedFormula {
    name: &'static str,
    /// Index of the engine coefficient compared with the formula at `n`.
    argument: fn(usize) -> usize,
    first_prefactor: i64,
    alpha: i64,
    x: DivisorCombination,
    second_prefactor: i64,
    beta: i64,
    y: DivisorCombination,
}

const PRINTED: [PrintedFormula; 6] = [
    PrintedFormula {
        name: "a(n)",
        argument: |n| n,
        first_prefactor: 1,
        alpha: -1,
        x: &[(1, 1), (1, 2)],
        second_prefactor: 0,
        beta: 1,
        y: &[],
    },
    PrintedFormula {
        name: "a(3n+2)",
        argument: |n| 3 * n + 2,
        first_prefactor: 3,
        alpha: 4,
        x: &[(1, 1), (1, 2)],
        second_prefactor: 3,
        beta: -3,
        y: &[(1, 3), (1, 6)],
    },
    PrintedFormula {
        name: "abar(n)",
        argument: |n| n,
        first_prefactor: 1,
        alpha: 1,
        x: &[(2, 1), (1, 2)],
        second_prefactor: 1,
        beta: -1,
        y: &[(1, 4)],
    },
    PrintedFormula {
        name: "abar(3n+2)",
        argument: |n| 3 * n + 2,
        first_prefactor: 6,
        alpha: 1,
        x: &[(8, 1), (3, 2)],
        second_prefactor: 1,
        beta: 1,
        y: &[(-6, 3), (-3, 4)],
    },
    PrintedFormula {
        name: "psi*(n)",
        argument: |n| n,
        first_prefactor: 1,
        alpha: 1,
        x: &[(1, 1)],
        second_prefactor: 1,
        beta: -2,
        y: &[(1, 2)],
    },
    PrintedFormula {
        name: "phi*(n)",
        argument: |n| n,
        first_prefactor: 1,
        alpha: 2,
        x: &[(1, 1), (1, 4)],
        second_prefactor: 1,
        beta: -5,
        y: &[(1, 2)],
    },
];

fn combination_table(weight: i64, combo: DivisorCombination, len: usize) -> EvaluatedPsiTable {
    let values = (1..=len as u64)
        .map(|j| {
            let total: i64 = combo
                .iter()
                .map(|&(c, r)| {
                    if indicator(r, j).expect("r >= 1, j >= 1") == 1 {
                        c * sigma(j / r).expect("j / r >= 1") as i64
                    } else {
                        0
                    }
                })
                .sum();
            Rational::from_integer((weight * total).into())
        })
        .collect();
    EvaluatedPsiTable::from_values(values)
}

impl PrintedFormula {
    fn evaluate(&self, n: usize) -> Rational {
        // alpha^{sum k_j} folds into the table as alpha * x(j)
        let first = combination_table(self.alpha, self.x, n);
        let second = combination_table(self.beta, self.y, n);
        let s_first: Vec<Rational> = (0..=n).map(|m| faa_di_bruno_sum(&first, m, false)).collect();
        let mut value = Rational::from_integer(self.first_prefactor.into()) * &s_first[n];
        if self.second_prefactor != 0 {
            let mut tail = Rational::default();
            for m in 1..=n {
                tail += faa_di_bruno_sum(&second, m, false) * &s_first[n - m];
            }
            value += Rational::from_integer(self.second_prefactor.into()) * tail;
        }
        value
    }
}

/// One comparison between the engine and a printed closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataRow {
    pub n: usize,
    /// Argument of the engine sequence, `n` or `3n+2`.
    pub argument: usize,
    pub engine: String,
    pub printed: String,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaErrata {
    pub formula: String,
    pub rows: Vec<ErrataRow>,
    pub agreeing: usize,
    pub disagreeing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataReport {
    pub max: usize,
    pub formulas: Vec<FormulaErrata>,
}

/// Engine coefficients up to the largest argument the formula reaches.
fn engine_values(formula: &PrintedFormula, max: usize) -> Vec<Rational> {
    let ratio: GeneratingRatio = match formula.name {
        "a(n)" | "a(3n+2)" => cubic_ratio(),
        "abar(n)" | "abar(3n+2)" => overcubic_ratio(),
        "psi*(n)" => psi_ratio(),
        "phi*(n)" => phi_ratio(),
        other => unreachable!("no engine sequence for {other}"),
    };
    ratio.series((formula.argument)(max)).into_coeffs()
}

/// Evaluates every printed form for `n = 0..=max`.
pub fn errata_report(max: usize) -> ErrataReport {
    let formulas = PRINTED
        .iter()
        .map(|formula| {
            let engine = engine_values(formula, max);
            let rows: Vec<ErrataRow> = (0..=max)
                .map(|n| {
                    let argument = (formula.argument)(n);
                    let printed = formula.evaluate(n);
                    let engine_value = &engine[argument];
                    ErrataRow {
                        n,
                        argument,
                        engine: format_rational(engine_value),
                        printed: format_rational(&printed),
                        agrees: &printed == engine_value,
                    }
                })
                .collect();
            let agreeing = rows.iter().filter(|r| r.agrees).count();
            FormulaErrata {
                formula: formula.name.to_string(),
                disagreeing: rows.len() - agreeing,
                agreeing,
                rows,
            }
        })
        .collect();
    ErrataReport { max, formulas }
}

impl ErrataReport {
    pub fn formula(&self, name: &str) -> Option<&FormulaErrata> {
        self.formulas.iter().find(|f| f.formula == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Plain-text rendering, one table per formula.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("printed closed forms vs engine, n = 0..={}\n", self.max));
        for f in &self.formulas {
            out.push_str(&format!(
                "\n{}: {} agree, {} disagree\n",
                f.formula, f.agreeing, f.disagreeing
            ));
            out.push_str("n,argument,engine,printed,agrees\n");
            for r in &f.rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n, r.argument, r.engine, r.printed, r.agrees
                ));
            }
        }
        out
    }
}
