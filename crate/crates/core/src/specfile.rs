//! JSON description of a generating ratio.
//!
//! ```json
//! {"numerator": [],
//!  "denominator": [{"support": {"kind": "all"}, "z": "1", "a": 1}]}
//! ```
//!
//! Supports are `{"kind":"all"}`, `{"kind":"multiples","r":R}` or
//! `{"kind":"finite","set":[...]}`. `z` is an exact rational string.

use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational};
use crate::error::{Error, Result};
use crate::product::{Factor, GeneratingRatio, SupportSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SupportJson {
    All,
    Multiples { r: u64 },
    Finite { set: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub support: SupportJson,
    pub z: String,
    pub a: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatioJson {
    #[serde(default)]
    pub numerator: Vec<FactorJson>,
    #[serde(default)]
    pub denominator: Vec<FactorJson>,
}

impl SupportJson {
    fn to_support(&self) -> Result<SupportSet> {
        match self {
            SupportJson::All => Ok(SupportSet::AllNaturals),
            SupportJson::Multiples { r } => SupportSet::multiples_of(*r),
            SupportJson::Finite { set } => SupportSet::finite(set),
        }
    }

    fn from_support(support: &SupportSet) -> Self {
        match support {
            SupportSet::AllNaturals => SupportJson::All,
            SupportSet::MultiplesOf(r) => SupportJson::Multiples { r: *r },
            SupportSet::Finite(set) => SupportJson::Finite {
                set: set.iter().copied().collect(),
            },
        }
    }
}

impl FactorJson {
    pub fn to_factor(&self) -> Result<Factor> {
        Factor::new(self.support.to_support()?, parse_rational(&self.z)?, self.a)
    }

    pub fn from_factor(factor: &Factor) -> Self {
        Self {
            support: SupportJson::from_support(factor.support()),
            z: format_rational(factor.z()),
            a: factor.exponent(),
        }
    }
}

impl RatioJson {
    pub fn to_ratio(&self) -> Result<GeneratingRatio> {
        let convert = |side: &[FactorJson]| side.iter().map(FactorJson::to_factor).collect::<Result<Vec<_>>>();
        Ok(GeneratingRatio::new(convert(&self.numerator)?, convert(&self.denominator)?))
    }

    pub fn from_ratio(ratio: &GeneratingRatio) -> Self {
        Self {
            numerator: ratio.numerator.iter().map(FactorJson::from_factor).collect(),
            denominator: ratio.denominator.iter().map(FactorJson::from_factor).collect(),
        }
    }
}

/// Parses and validates a ratio description.
pub fn parse_ratio(text: &str) -> Result<GeneratingRatio> {
    let raw: RatioJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.to_ratio()
}

pub fn ratio_to_json(ratio: &GeneratingRatio) -> String {
    serde_json::to_string_pretty(&RatioJson::from_ratio(ratio)).expect("plain data serializes")
}
