//! Exhaustive exact verification of identities.
//!
//! Every identity in the [`registry`] pairs two exact evaluators over a set
//! of integer index variables. The residual `lhs - rhs` is computed over
//! rationals, so identities with fractional coefficients or divisions need
//! no special casing; integer identities simply have unit denominators.

mod registry;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dual_complex::DualComplex;
use crate::error::{Error, Result};
use crate::rings::BigRational;

pub use registry::registry;
pub use report::{render_csv, render_plain, AuditReport, AuditResult, RunInfo, Status};

/// Residuals and rational-valued evaluations.
pub type Value = DualComplex<BigRational>;

/// Integer-valued evaluations.
pub type IntValue = DualComplex<BigInt>;

/// One side of an identity. Most sides are integral; sides involving
/// division or fractional coefficients evaluate over rationals.
#[derive(Clone, Copy)]
pub enum Evaluator {
    Int(fn(&Assignment) -> IntValue),
    Rat(fn(&Assignment) -> Value),
}

impl Evaluator {
    pub fn eval(&self, at: &Assignment) -> Value {
        match self {
            Evaluator::Int(f) => f(at).map(BigRational::from_integer),
            Evaluator::Rat(f) => f(at),
        }
    }
}

impl fmt::Debug for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evaluator::Int(_) => "Evaluator::Int",
            Evaluator::Rat(_) => "Evaluator::Rat",
        })
    }
}

/// Concrete values for an identity's index variables, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(IndexMap<String, i64>);

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_owned(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }

    /// Value of a variable the evaluator's record declares.
    pub fn var(&self, name: &str) -> i64 {
        self.get(name)
            .unwrap_or_else(|| panic!("index `{name}` missing from assignment"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl<const N: usize> From<[(&str, i64); N]> for Assignment {
    fn from(pairs: [(&str, i64); N]) -> Self {
        pairs
            .into_iter()
            .fold(Assignment::new(), |a, (k, v)| a.with(k, v))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// One index variable of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexVar {
    pub name: &'static str,
    /// Smallest admissible value; `None` for an unbounded index.
    pub min: Option<i64>,
    /// Default sampling range.
    pub grid: (i64, i64),
    /// Upper coupling: the value must be strictly below this earlier variable.
    pub below: Option<&'static str>,
}

impl IndexVar {
    pub const fn from(name: &'static str, min: i64, max: i64) -> Self {
        IndexVar {
            name,
            min: Some(min),
            grid: (min, max),
            below: None,
        }
    }

    pub const fn free(name: &'static str, lo: i64, hi: i64) -> Self {
        IndexVar {
            name,
            min: None,
            grid: (lo, hi),
            below: None,
        }
    }

    pub const fn below(mut self, other: &'static str) -> Self {
        self.below = Some(other);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Holds,
    FailsAsPrinted,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Holds => "holds",
            Expected::FailsAsPrinted => "fails-as-printed",
        })
    }
}

/// A registered identity `lhs = rhs`.
#[derive(Debug, Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub vars: Vec<IndexVar>,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    pub expected: Expected,
    pub note: &'static str,
}

impl IdentityRecord {
    pub fn residual(&self, at: &Assignment) -> Value {
        match (self.lhs, self.rhs) {
            (Evaluator::Int(l), Evaluator::Int(r)) => {
                (l(at) - r(at)).map(BigRational::from_integer)
            }
            (l, r) => l.eval(at) - r.eval(at),
        }
    }

    fn check_domain(&self, at: &Assignment) -> Result<()> {
        let bad = |reason: String| Error::OutOfDomain {
            id: self.id.to_owned(),
            reason,
        };
        for (name, _) in at.iter() {
            if !self.vars.iter().any(|v| v.name == name) {
                return Err(bad(format!("unexpected index `{name}`")));
            }
        }
        for v in &self.vars {
            let value = at
                .get(v.name)
                .ok_or_else(|| bad(format!("missing index `{}`", v.name)))?;
            if let Some(min) = v.min {
                if value < min {
                    return Err(bad(format!("{} = {value} < {min}", v.name)));
                }
            }
            if let Some(other) = v.below {
                let bound = at.var(other);
                if value >= bound {
                    return Err(bad(format!(
                        "{} = {value} must be < {other} = {bound}",
                        v.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Sampling range per variable after applying `overrides`, in order.
    pub fn domain(&self, grid: &GridOverrides) -> IndexMap<String, [i64; 2]> {
        self.vars
            .iter()
            .map(|v| (v.name.to_owned(), [v.grid.0, grid.max_for(v)]))
            .collect()
    }

    /// All grid points in lexicographic order of the declared variables.
    pub fn grid_points(&self, grid: &GridOverrides) -> Vec<Assignment> {
        let mut points = vec![Assignment::new()];
        for v in &self.vars {
            let hi = grid.max_for(v);
            points = points
                .into_iter()
                .flat_map(|prefix| {
                    let upper = match v.below {
                        Some(other) => hi.min(prefix.var(other) - 1),
                        None => hi,
                    };
                    (v.grid.0..=upper).map(move |x| prefix.clone().with(v.name, x))
                })
                .collect();
        }
        points
    }
}

/// Per-variable upper bounds replacing the registered defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridOverrides(BTreeMap<String, i64>);

impl GridOverrides {
    pub fn new() -> Self {
        GridOverrides::default()
    }

    pub fn with_max(mut self, var: &str, max: i64) -> Self {
        self.0.insert(var.to_owned(), max);
        self
    }

    fn max_for(&self, v: &IndexVar) -> i64 {
        self.0.get(v.name).copied().unwrap_or(v.grid.1)
    }
}

/// Which identities to audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// Parses `all` or a comma-separated id list.
    pub fn parse(s: &str) -> Self {
        if s.trim() == "all" {
            Selection::All
        } else {
            Selection::Ids(
                s.split(',')
                    .map(str::trim)
                    .filter(|x| !x.is_empty())
                    .map(str::to_owned)
                    .collect(),
            )
        }
    }
}

/// Looks up a record by id or short alias (`eq66` for `eq66_cassini`).
pub fn find(id: &str) -> Result<IdentityRecord> {
    let id = registry::ALIASES
        .iter()
        .find(|(short, _)| *short == id)
        .map_or(id, |(_, full)| full);
    registry()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_owned()))
}

/// Exact residual `lhs - rhs` of identity `id` at one point.
pub fn evaluate_identity(id: &str, at: &Assignment) -> Result<Value> {
    let record = find(id)?;
    record.check_domain(at)?;
    Ok(record.residual(at))
}

fn select(sel: &Selection) -> Result<Vec<IdentityRecord>> {
    let mut records = match sel {
        Selection::All => registry(),
        Selection::Ids(ids) => {
            let mut out = Vec::new();
            for id in ids {
                let r = find(id)?;
                if !out.iter().any(|x: &IdentityRecord| x.id == r.id) {
                    out.push(r);
                }
            }
            out
        }
    };
    records.sort_by(|a, b| a.id.cmp(b.id));
    Ok(records)
}

/// Audits one identity over its grid. Every point is evaluated; the first
/// non-zero residual in lexicographic order is reported.
pub fn audit_record(record: &IdentityRecord, grid: &GridOverrides) -> Result<AuditResult> {
    let points = record.grid_points(grid);
    if points.is_empty() {
        return Err(Error::EmptyGrid(record.id.to_owned()));
    }
    let residuals: Vec<Value> = points.par_iter().map(|p| record.residual(p)).collect();
    let first = residuals.iter().position(|r| !r.is_zero());
    let status = match (first, record.expected) {
        (None, Expected::Holds) => Status::Pass,
        (None, Expected::FailsAsPrinted) => Status::Anomaly,
        (Some(_), _) => Status::Fail,
    };
    Ok(AuditResult {
        id: record.id.to_owned(),
        status,
        expected: record.expected,
        domain: record.domain(grid),
        evaluations: points.len() as u64,
        first_counterexample: first.map(|i| points[i].clone()),
        residual: first.map(|i| residuals[i].to_strings()),
        note: record.note.to_owned(),
    })
}

pub fn audit(sel: &Selection, grid: &GridOverrides) -> Result<AuditReport> {
    let start = Instant::now();
    let records = select(sel)?;
    let results = records
        .iter()
        .map(|r| audit_record(r, grid))
        .collect::<Result<Vec<_>>>()?;
    let evaluations = results.iter().map(|r| r.evaluations).sum();
    Ok(AuditReport {
        run: RunInfo {
            grid: grid.clone(),
            evaluations,
            wall_ms: start.elapsed().as_millis() as u64,
        },
        results,
    })
}
