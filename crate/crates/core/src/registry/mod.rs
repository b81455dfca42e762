//! The identity catalog.
//!
//! Every record holds both sides as sumlang source, parsed once when the
//! registry is built. Ids are `<class letter>.<tag>`; the registry is
//! immutable after [`register_all`].

mod catalog;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::numerics::Rational;
use crate::sumlang::{format, parse, Bindings, Expr, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityClass {
    FiniteExact,
    InfiniteSeries,
    PowerSeries,
    AlternatingPaired,
    Reference,
}

impl IdentityClass {
    pub const ALL: [IdentityClass; 5] = [
        IdentityClass::FiniteExact,
        IdentityClass::InfiniteSeries,
        IdentityClass::PowerSeries,
        IdentityClass::AlternatingPaired,
        IdentityClass::Reference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityClass::FiniteExact => "FINITE_EXACT",
            IdentityClass::InfiniteSeries => "INFINITE_SERIES",
            IdentityClass::PowerSeries => "POWER_SERIES",
            IdentityClass::AlternatingPaired => "ALTERNATING_PAIRED",
            IdentityClass::Reference => "REFERENCE",
        }
    }

    /// Short lowercase name used on the command line.
    pub fn short(self) -> &'static str {
        match self {
            IdentityClass::FiniteExact => "finite",
            IdentityClass::InfiniteSeries => "infinite",
            IdentityClass::PowerSeries => "power",
            IdentityClass::AlternatingPaired => "alternating",
            IdentityClass::Reference => "reference",
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            IdentityClass::FiniteExact => "F",
            IdentityClass::InfiniteSeries => "I",
            IdentityClass::PowerSeries => "P",
            IdentityClass::AlternatingPaired => "A",
            IdentityClass::Reference => "R",
        }
    }
}

impl fmt::Display for IdentityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityClass {
    type Err = RegistryError;

    /// Accepts the short name or the full name, in any case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase().replace('-', "_");
        IdentityClass::ALL
            .into_iter()
            .find(|c| c.short() == t || c.name().to_ascii_lowercase() == t)
            .ok_or_else(|| RegistryError::UnknownClass(s.to_string()))
    }
}

/// Allowed values of one parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Domain {
    /// Integers in `min..=max` minus `exclude`.
    Int { min: i64, max: i64, exclude: Vec<i64> },
    /// A finite set of rationals, stored as strings like `1/2`.
    Rational { values: Vec<String> },
}

impl Domain {
    pub fn ints(min: i64, max: i64) -> Self {
        Domain::Int { min, max, exclude: Vec::new() }
    }

    pub fn values(&self) -> Vec<Rational> {
        match self {
            Domain::Int { min, max, exclude } => {
                (*min..=*max).filter(|v| !exclude.contains(v)).map(Rational::from_int).collect()
            }
            Domain::Rational { values } => values.iter().map(|v| v.parse().expect("checked at registration")).collect(),
        }
    }

    pub fn contains(&self, q: &Rational) -> bool {
        match self {
            Domain::Int { min, max, exclude } => {
                q.is_integer() && q.to_i64().is_some_and(|v| v >= *min && v <= *max && !exclude.contains(&v))
            }
            Domain::Rational { .. } => self.values().contains(q),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Int { min, max, exclude } => {
                write!(f, "[{min},{max}]")?;
                if !exclude.is_empty() {
                    let ex: Vec<String> = exclude.iter().map(|v| v.to_string()).collect();
                    write!(f, " \\ {{{}}}", ex.join(","))?;
                }
                Ok(())
            }
            Domain::Rational { values } => write!(f, "{{{}}}", values.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Param {
    pub name: String,
    pub domain: Domain,
}

/// Finite test values per parameter; points are the cartesian product.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParameterGrid {
    pub axes: Vec<(String, Vec<Rational>)>,
}

impl ParameterGrid {
    pub fn new(axes: Vec<(String, Vec<Rational>)>) -> Self {
        ParameterGrid { axes }
    }

    pub fn single(b: &Bindings) -> Self {
        ParameterGrid { axes: b.iter().map(|(k, v)| (k.clone(), vec![v.clone()])).collect() }
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|(_, v)| v.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in lexicographic order of the axes as given.
    pub fn points(&self) -> Vec<Bindings> {
        let mut out = vec![Bindings::new()];
        for (name, vals) in &self.axes {
            let mut next = Vec::with_capacity(out.len() * vals.len());
            for b in &out {
                for v in vals {
                    let mut b = b.clone();
                    b.insert(name.clone(), v.clone());
                    next.push(b);
                }
            }
            out = next;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRecord {
    pub id: String,
    pub class: IdentityClass,
    pub params: Vec<Param>,
    pub lhs: Expr,
    pub rhs: Expr,
    /// Short description of where the identity comes from.
    pub anchor: String,
    /// Smaller grid for numeric checks; `None` means the full domain.
    pub numeric: Option<Vec<(String, Vec<i64>)>>,
}

impl IdentityRecord {
    /// Every value of every domain.
    pub fn default_grid(&self) -> ParameterGrid {
        ParameterGrid::new(self.params.iter().map(|p| (p.name.clone(), p.domain.values())).collect())
    }

    /// Grid used by numeric verification; infinite sums are costly, so this
    /// may be a subset of the domain.
    pub fn numeric_grid(&self) -> ParameterGrid {
        let Some(sub) = &self.numeric else { return self.default_grid() };
        ParameterGrid::new(
            self.params
                .iter()
                .map(|p| {
                    let vals = match sub.iter().find(|(n, _)| *n == p.name) {
                        Some((_, v)) => v.iter().map(|&x| Rational::from_int(x)).collect(),
                        None => p.domain.values(),
                    };
                    (p.name.clone(), vals)
                })
                .collect(),
        )
    }

    /// Whether every value of `b` lies in its domain and every parameter is bound.
    pub fn check_point(&self, b: &Bindings) -> Result<(), RegistryError> {
        for p in &self.params {
            match b.get(&p.name) {
                Some(v) if p.domain.contains(v) => {}
                Some(v) => {
                    return Err(RegistryError::OutOfDomain(format!("{}={v} is outside {}", p.name, p.domain)))
                }
                None => return Err(RegistryError::OutOfDomain(format!("parameter {} is unbound", p.name))),
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamExport {
    pub name: String,
    pub domain: String,
}

/// Serializable form of a record.
#[derive(Debug, Clone, Serialize)]
pub struct RecordExport {
    pub id: String,
    pub class: IdentityClass,
    pub params: Vec<ParamExport>,
    pub lhs: String,
    pub rhs: String,
    pub anchor: String,
}

impl From<&IdentityRecord> for RecordExport {
    fn from(r: &IdentityRecord) -> Self {
        RecordExport {
            id: r.id.clone(),
            class: r.class,
            params: r.params.iter().map(|p| ParamExport { name: p.name.clone(), domain: p.domain.to_string() }).collect(),
            lhs: format(&r.lhs),
            rhs: format(&r.rhs),
            anchor: r.anchor.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown class `{0}` (expected finite, infinite, power, alternating or reference)")]
    UnknownClass(String),
    #[error("duplicate identity id `{0}`")]
    DuplicateId(String),
    #[error("{id}: {side} does not parse: {err}")]
    Parse { id: String, side: &'static str, err: ParseError },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    OutOfDomain(String),
}

#[derive(Debug, Clone, Default)]
pub struct Registry {
    records: BTreeMap<String, IdentityRecord>,
}

impl Registry {
    pub fn insert(&mut self, rec: IdentityRecord) -> Result<(), RegistryError> {
        if !rec.id.starts_with(&format!("{}.", rec.class.prefix())) {
            return Err(RegistryError::Invalid(format!("{}: id prefix does not match class {}", rec.id, rec.class)));
        }
        if rec.class == IdentityClass::FiniteExact && !(rec.lhs.is_exact() && rec.rhs.is_exact()) {
            return Err(RegistryError::Invalid(format!("{}: finite identity with a transcendental node", rec.id)));
        }
        if self.records.contains_key(&rec.id) {
            return Err(RegistryError::DuplicateId(rec.id));
        }
        self.records.insert(rec.id.clone(), rec);
        Ok(())
    }

    pub fn lookup(&self, id: &str) -> Result<&IdentityRecord, RegistryError> {
        self.records.get(id).ok_or_else(|| RegistryError::UnknownIdentity(id.to_string()))
    }

    /// Records of one class (or all), ordered by id.
    pub fn enumerate(&self, class: Option<IdentityClass>) -> Vec<&IdentityRecord> {
        self.records.values().filter(|r| class.is_none_or(|c| r.class == c)).collect()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn export(&self, class: Option<IdentityClass>) -> Vec<RecordExport> {
        self.enumerate(class).into_iter().map(RecordExport::from).collect()
    }
}

/// Raw catalog entry before parsing.
pub(crate) struct Entry {
    pub id: &'static str,
    pub class: IdentityClass,
    pub params: &'static [(&'static str, ParamSpec)],
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub anchor: &'static str,
    pub numeric: &'static [(&'static str, &'static [i64])],
}

#[derive(Clone, Copy)]
pub(crate) enum ParamSpec {
    Int(i64, i64),
    Rats(&'static [&'static str]),
}

fn build(entries: &[Entry]) -> Result<Registry, RegistryError> {
    let mut reg = Registry::default();
    for e in entries {
        let lhs = parse(e.lhs).map_err(|err| RegistryError::Parse { id: e.id.into(), side: "lhs", err })?;
        let rhs = parse(e.rhs).map_err(|err| RegistryError::Parse { id: e.id.into(), side: "rhs", err })?;
        let params = e
            .params
            .iter()
            .map(|(name, spec)| {
                let domain = match *spec {
                    ParamSpec::Int(a, b) => Domain::ints(a, b),
                    ParamSpec::Rats(v) => {
                        for s in v {
                            s.parse::<Rational>()
                                .map_err(|_| RegistryError::Invalid(format!("{}: bad rational {s}", e.id)))?;
                        }
                        Domain::Rational { values: v.iter().map(|s| s.to_string()).collect() }
                    }
                };
                Ok(Param { name: name.to_string(), domain })
            })
            .collect::<Result<Vec<_>, RegistryError>>()?;
        let mut free = lhs.free_vars();
        free.extend(rhs.free_vars());
        for v in &free {
            if !params.iter().any(|p| &p.name == v) {
                return Err(RegistryError::Invalid(format!("{}: free variable `{v}` has no domain", e.id)));
            }
        }
        let numeric = if e.numeric.is_empty() {
            None
        } else {
            Some(e.numeric.iter().map(|(n, v)| (n.to_string(), v.to_vec())).collect())
        };
        reg.insert(IdentityRecord {
            id: e.id.to_string(),
            class: e.class,
            params,
            lhs,
            rhs,
            anchor: e.anchor.to_string(),
            numeric,
        })?;
    }
    Ok(reg)
}

/// Builds the full catalog; fails on duplicate ids or unparsable entries.
pub fn register_all() -> Result<Registry, RegistryError> {
    build(catalog::ENTRIES)
}

/// The catalog, built once.
pub fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| register_all().expect("built-in catalog is valid"))
}

/// Catalog tags that are deliberately not registered, with the reason.
pub fn out_of_scope() -> &'static [(&'static str, &'static str)] {
    catalog::OUT_OF_SCOPE
}
