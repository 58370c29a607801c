use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::roots::RootSystem;

/// Assigns a `q`-exponent to each positive root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum LengthFunction {
    /// Constantly 1: Lusztig's original grading.
    Standard,
    /// 1 on the type-A roots `ε_i − ε_j`, 0 elsewhere.
    GlA,
    /// One value per positive root, in [`RootSystem::positive_roots`] order.
    Custom(Vec<u32>),
}

impl LengthFunction {
    /// The exponent of every positive root of `system`, in root order.
    pub fn values(&self, system: &RootSystem) -> Result<Vec<u32>> {
        let roots = system.positive_roots();
        match self {
            Self::Standard => Ok(vec![1; roots.len()]),
            Self::GlA => Ok(roots.iter().map(|r| u32::from(r.kind.is_type_a())).collect()),
            Self::Custom(v) if v.len() == roots.len() => Ok(v.clone()),
            Self::Custom(v) => param(format!(
                "custom length table has {} entries, root system has {} positive roots",
                v.len(),
                roots.len()
            )),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Standard => "standard".into(),
            Self::GlA => "glA".into(),
            Self::Custom(v) => {
                let body: Vec<String> = v.iter().map(u32::to_string).collect();
                format!("custom:{}", body.join(","))
            }
        }
    }
}

impl FromStr for LengthFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "standard" | "std" => Ok(Self::Standard),
            "glA" | "gla" | "gl" => Ok(Self::GlA),
            other => match other.strip_prefix("custom:") {
                Some(body) => body
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parameter(format!("bad length value {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(Self::Custom),
                None => param(format!("unknown length function {other:?}")),
            },
        }
    }
}

impl TryFrom<String> for LengthFunction {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LengthFunction> for String {
    fn from(l: LengthFunction) -> Self {
        l.label()
    }
}

impl fmt::Display for LengthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
