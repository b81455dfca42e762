use std::fmt;
use std::str::FromStr;

use harmid_core::registry::IdentityClass;
use harmid_core::series::SeriesPolicy;
use harmid_core::PrecisionContext;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = harmid_oracle::DEFAULT_SEED;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Md,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Md),
            "text" | "txt" => Ok(Format::Text),
            _ => Err(format!("unknown format `{s}` (expected json, md or text)")),
        }
    }
}

/// Which identities a command works on. Empty lists select everything.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Filter {
    pub ids: Vec<String>,
    pub classes: Vec<IdentityClass>,
}

impl Filter {
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty() && self.classes.is_empty()
    }

    pub fn accepts(&self, id: &str, class: IdentityClass) -> bool {
        let by_id = self.ids.is_empty() || self.ids.iter().any(|i| i == id);
        let by_class = self.classes.is_empty() || self.classes.contains(&class);
        by_id && by_class
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub digits: u32,
    pub trunc_n: u64,
    pub tail_order: u32,
    pub tol: f64,
    pub filter: Filter,
    pub seed: u64,
    pub format: Format,
    /// Worker threads; never part of the report.
    #[serde(skip)]
    pub jobs: usize,
    /// Record wall times in the report.
    #[serde(skip)]
    pub timings: bool,
    /// Record whose RHS is shifted by one, to exercise the failure path.
    #[serde(skip)]
    pub inject_fault: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            digits: 30,
            trunc_n: 10_000,
            tail_order: 10,
            tol: 1e-12,
            filter: Filter::default(),
            seed: DEFAULT_SEED,
            format: Format::Text,
            jobs: 1,
            timings: false,
            inject_fault: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.digits < PrecisionContext::MIN_DIGITS {
            return Err(ConfigError(format!("--digits must be at least {}", PrecisionContext::MIN_DIGITS)));
        }
        if self.digits > 2000 {
            return Err(ConfigError("--digits must be at most 2000".into()));
        }
        if self.trunc_n < 10 {
            return Err(ConfigError("--trunc-n must be at least 10".into()));
        }
        let least = 10f64.powi(-(self.digits as i32 - 10));
        if !(self.tol.is_finite() && self.tol >= least) {
            return Err(ConfigError(format!("--tol must be at least 1e-{} at {} digits", self.digits - 10, self.digits)));
        }
        if self.jobs == 0 {
            return Err(ConfigError("--jobs must be positive".into()));
        }
        Ok(())
    }

    pub fn ctx(&self) -> PrecisionContext {
        PrecisionContext::new(self.digits).expect("validated")
    }

    pub fn policy(&self) -> SeriesPolicy {
        SeriesPolicy { trunc_n: self.trunc_n, tail_order: self.tail_order, tol_floor: self.tol, ..SeriesPolicy::default() }
    }
}
