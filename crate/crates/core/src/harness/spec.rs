use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::length::LengthFunction;
use crate::partition::Partition;
use crate::roots::RootType;

/// Named verification procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Example13,
    Conj1Box,
    Conj1Count,
    Conj2,
    Monotonicity,
    KlPositivity,
    StableIdentity,
    Stabilization,
    TypeaCharge,
    Demazure,
}

/// Whether a failure refutes a conjecture or exposes a bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backing {
    Theorem,
    Conjecture,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::Example13,
        CheckKind::Conj1Box,
        CheckKind::Conj1Count,
        CheckKind::Conj2,
        CheckKind::Monotonicity,
        CheckKind::KlPositivity,
        CheckKind::StableIdentity,
        CheckKind::Stabilization,
        CheckKind::TypeaCharge,
        CheckKind::Demazure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Example13 => "example13",
            CheckKind::Conj1Box => "conj1-box",
            CheckKind::Conj1Count => "conj1-count",
            CheckKind::Conj2 => "conj2",
            CheckKind::Monotonicity => "monotonicity",
            CheckKind::KlPositivity => "kl-positivity",
            CheckKind::StableIdentity => "stable-identity",
            CheckKind::Stabilization => "stabilization",
            CheckKind::TypeaCharge => "typea-charge",
            CheckKind::Demazure => "demazure",
        }
    }

    pub fn backing(self) -> Backing {
        match self {
            CheckKind::Conj1Box
            | CheckKind::Conj1Count
            | CheckKind::Conj2
            | CheckKind::Monotonicity => Backing::Conjecture,
            _ => Backing::Theorem,
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown check {s:?}")))
    }
}

/// One check with all of its parameters. Fields a check does not use stay
/// `None` and are omitted from the JSON echo.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CheckSpec {
    pub check: CheckKind,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub root_type: Option<RootType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub length: Option<LengthFunction>,
    /// Size bound, stabilization `k_max` or truncation degree, per check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
}

impl CheckSpec {
    pub fn new(check: CheckKind) -> Self {
        Self {
            check,
            root_type: None,
            n: None,
            lambda: None,
            mu: None,
            g: None,
            length: None,
            bound: None,
        }
    }

    pub fn example_13() -> Self {
        Self::new(CheckKind::Example13)
    }

    pub fn conj1_box(n: usize, g: u32, lambda: Partition) -> Self {
        Self {
            n: Some(n),
            g: Some(g),
            lambda: Some(lambda),
            ..Self::new(CheckKind::Conj1Box)
        }
    }

    pub fn conj1_count(n: usize, g: u32, lambda: Partition, mu: Partition) -> Self {
        Self {
            mu: Some(mu),
            ..Self::conj1_box(n, g, lambda).with_check(CheckKind::Conj1Count)
        }
    }

    pub fn conj2(n: usize, lambda: Partition, mu: Partition) -> Self {
        Self::pair(CheckKind::Conj2, RootType::C, n, lambda, mu)
    }

    pub fn monotonicity(n: usize, lambda: Partition, mu: Partition) -> Self {
        Self::pair(CheckKind::Monotonicity, RootType::C, n, lambda, mu)
    }

    pub fn kl_positivity(kind: RootType, n: usize, lambda: Partition, mu: Partition) -> Self {
        Self::pair(CheckKind::KlPositivity, kind, n, lambda, mu)
    }

    pub fn stable_identity(kind: RootType, n: usize, lambda: Partition, mu: Partition) -> Self {
        Self::pair(CheckKind::StableIdentity, kind, n, lambda, mu)
    }

    /// `k_max = None` uses the default `|λ| + |μ| + n`.
    pub fn stabilization(
        kind: RootType,
        n: usize,
        lambda: Partition,
        mu: Partition,
        k_max: Option<u32>,
    ) -> Self {
        Self {
            bound: k_max,
            ..Self::pair(CheckKind::Stabilization, kind, n, lambda, mu)
        }
    }

    pub fn typea_charge(n: usize, weight_bound: u32) -> Self {
        Self {
            n: Some(n),
            bound: Some(weight_bound),
            ..Self::new(CheckKind::TypeaCharge)
        }
    }

    /// `mu` is the weight placed inside the Demazure operator.
    pub fn demazure(kind: RootType, n: usize, mu: Partition, length: LengthFunction, q_max: u32) -> Self {
        Self {
            root_type: Some(kind),
            n: Some(n),
            mu: Some(mu),
            length: Some(length),
            bound: Some(q_max),
            ..Self::new(CheckKind::Demazure)
        }
    }

    fn pair(check: CheckKind, kind: RootType, n: usize, lambda: Partition, mu: Partition) -> Self {
        Self {
            root_type: Some(kind),
            n: Some(n),
            lambda: Some(lambda),
            mu: Some(mu),
            ..Self::new(check)
        }
    }

    fn with_check(mut self, check: CheckKind) -> Self {
        self.check = check;
        self
    }

    /// Canonical ordering key for reports.
    pub fn key(&self) -> String {
        serde_json::to_string(self).expect("specs always serialize")
    }

    /// Short `name=value` rendering used in summaries.
    pub fn params(&self) -> String {
        let mut out = Vec::new();
        if let Some(t) = self.root_type {
            out.push(format!("type={t}"));
        }
        if let Some(n) = self.n {
            out.push(format!("n={n}"));
        }
        if let Some(g) = self.g {
            out.push(format!("g={g}"));
        }
        if let Some(l) = &self.lambda {
            out.push(format!("lambda={l}"));
        }
        if let Some(m) = &self.mu {
            out.push(format!("mu={m}"));
        }
        if let Some(l) = &self.length {
            out.push(format!("L={l}"));
        }
        if let Some(b) = self.bound {
            out.push(format!("bound={b}"));
        }
        out.join(" ")
    }

    pub(crate) fn need_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| self.missing("n"))
    }

    pub(crate) fn need_g(&self) -> Result<u32> {
        self.g.ok_or_else(|| self.missing("g"))
    }

    pub(crate) fn need_type(&self) -> Result<RootType> {
        self.root_type.ok_or_else(|| self.missing("type"))
    }

    pub(crate) fn need_lambda(&self) -> Result<&Partition> {
        self.lambda.as_ref().ok_or_else(|| self.missing("lambda"))
    }

    pub(crate) fn need_mu(&self) -> Result<&Partition> {
        self.mu.as_ref().ok_or_else(|| self.missing("mu"))
    }

    fn missing(&self, field: &str) -> Error {
        Error::Parameter(format!("{} needs {field}", self.check))
    }

    /// Parameter checks performed before any computation.
    pub fn validate(&self) -> Result<()> {
        let fits = |p: &Partition, n: usize, what: &str| {
            if p.len() > n {
                param(format!("{what} = {p} has more than {n} parts"))
            } else {
                Ok(())
            }
        };
        match self.check {
            CheckKind::Example13 => Ok(()),
            CheckKind::Conj1Box | CheckKind::Conj1Count => {
                let (n, g) = (self.need_n()?, self.need_g()?);
                if n == 0 {
                    return param("conj1 needs n ≥ 1");
                }
                if g == 0 {
                    return param("conj1 needs g ≥ 1");
                }
                let mut parts = vec![("lambda", self.need_lambda()?)];
                if self.check == CheckKind::Conj1Count {
                    parts.push(("mu", self.need_mu()?));
                }
                for (what, p) in parts {
                    if !p.fits_in_rectangle(n, g) {
                        return param(format!("{what} = {p} is not inside the {n}x{g} rectangle"));
                    }
                }
                Ok(())
            }
            CheckKind::Conj2
            | CheckKind::Monotonicity
            | CheckKind::KlPositivity
            | CheckKind::StableIdentity
            | CheckKind::Stabilization => {
                let n = self.need_n()?;
                self.need_type()?;
                fits(self.need_lambda()?, n, "lambda")?;
                fits(self.need_mu()?, n, "mu")
            }
            CheckKind::TypeaCharge => {
                self.need_n()?;
                self.bound.ok_or_else(|| self.missing("bound"))?;
                Ok(())
            }
            CheckKind::Demazure => {
                let n = self.need_n()?;
                self.need_type()?;
                self.bound.ok_or_else(|| self.missing("bound"))?;
                fits(self.need_mu()?, n, "mu")
            }
        }
    }
}
