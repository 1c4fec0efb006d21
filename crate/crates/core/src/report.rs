//! Structured pass/fail reports, and the verification run behind `wpolar verify`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{check_qubits, perp_census, points};
use crate::pauli::{oracle_sweep, MAX_ORACLE_SWEEP_QUBITS};
use crate::polar::{desarguesian_spread, enumerate_generators, params, MAX_GENERATOR_QUBITS};

/// Largest N accepted by [`verify`].
pub const MAX_VERIFY_QUBITS: usize = MAX_GENERATOR_QUBITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Bool(bool),
    Int(u64),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Bool(b) => write!(f, "{b}"),
            CheckValue::Int(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Closed form the expected value comes from, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula: Option<String>,
    pub expected: CheckValue,
    pub actual: CheckValue,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, formula: Option<&str>, expected: CheckValue, actual: CheckValue) -> Self {
        Self {
            name: name.to_string(),
            formula: formula.map(str::to_string),
            expected,
            actual,
            pass: expected == actual,
        }
    }

    pub fn count(name: &str, formula: Option<&str>, expected: u64, actual: u64) -> Self {
        Self::new(name, formula, CheckValue::Int(expected), CheckValue::Int(actual))
    }

    pub fn flag(name: &str, expected: bool, actual: bool) -> Self {
        Self::new(name, None, CheckValue::Bool(expected), CheckValue::Bool(actual))
    }
}

/// A list of named checks; `overall` is the conjunction of their `pass` flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n_qubits: usize,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(n_qubits: usize, checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        Self {
            n_qubits,
            checks,
            overall,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
        writeln!(f, "N = {}", self.n_qubits)?;
        writeln!(f, "{:<width$}  {:>10}  {:>10}  {:<18}  result", "check", "expected", "actual", "formula")?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<width$}  {:>10}  {:>10}  {:<18}  {}",
                c.name,
                c.expected.to_string(),
                c.actual.to_string(),
                c.formula.as_deref().unwrap_or("-"),
                if c.pass { "PASS" } else { "FAIL" }
            )?;
        }
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

/// `expected` when every value equals it, otherwise the first value that does not.
pub(crate) fn uniform(values: impl IntoIterator<Item = u64>, expected: u64) -> u64 {
    values.into_iter().find(|&v| v != expected).unwrap_or(expected)
}

/// Recomputes every count by enumeration and compares it with its closed form.
///
/// With `oracle`, additionally compares symplectic commutation with exact matrix
/// commutation on every ordered pair of non-identity operators.
pub fn verify(n_qubits: usize, oracle: bool) -> Result<VerificationReport> {
    check_qubits(n_qubits)?;
    let cap = if oracle { MAX_ORACLE_SWEEP_QUBITS } else { MAX_VERIFY_QUBITS };
    if n_qubits > cap {
        return Err(Error::Capacity {
            operation: if oracle { "verification with the matrix oracle" } else { "verification" },
            n: n_qubits,
            cap,
            predicted: format!("{} generators", params(n_qubits)?.generator_count),
        });
    }
    let p = params(n_qubits)?;
    let mut checks = Vec::new();

    checks.push(Check::count("eq1_point_count", Some("4^N - 1"), p.point_count, points(n_qubits)?.count() as u64));

    let generators = enumerate_generators(n_qubits)?;
    checks.push(Check::count(
        "eq2_generator_count",
        Some("prod (2^i + 1)"),
        p.generator_count as u64,
        generators.len() as u64,
    ));
    checks.push(Check::count(
        "eq4_generator_size",
        Some("2^N - 1"),
        p.generator_size,
        uniform(generators.iter().map(|g| g.span_points().len() as u64), p.generator_size),
    ));

    let spread = desarguesian_spread(n_qubits)?;
    checks.push(Check::count("eq3_spread_size", Some("2^N + 1"), p.spread_size, spread.blocks().len() as u64));
    checks.push(Check::flag("eq3_spread_partition", true, spread.validate().is_ok()));

    let mut non_perp = Vec::with_capacity(p.point_count as usize);
    for q in points(n_qubits)? {
        non_perp.push(perp_census(&q)?.non_perpendicular as u64);
    }
    checks.push(Check::count("eq5_non_perp_count", Some("2^(2N-1)"), p.non_perp_count, uniform(non_perp, p.non_perp_count)));

    if oracle {
        let sweep = oracle_sweep(n_qubits)?;
        checks.push(Check::count(
            "oracle_pairs_checked",
            Some("(4^N - 1)^2"),
            p.point_count * p.point_count,
            sweep.pairs_checked,
        ));
        checks.push(Check::count("oracle_mismatches", None, 0, sweep.mismatches));
    }
    Ok(VerificationReport::new(n_qubits, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_two_qubits() {
        let r = verify(2, false).unwrap();
        assert!(r.overall);
        let get = |name| r.check(name).unwrap().actual;
        assert_eq!(get("eq1_point_count"), CheckValue::Int(15));
        assert_eq!(get("eq2_generator_count"), CheckValue::Int(15));
        assert_eq!(get("eq4_generator_size"), CheckValue::Int(3));
        assert_eq!(get("eq3_spread_size"), CheckValue::Int(5));
        assert_eq!(get("eq5_non_perp_count"), CheckValue::Int(8));
        assert!(r.check("oracle_mismatches").is_none());
    }

    #[test]
    fn verify_caps() {
        assert!(matches!(verify(5, false), Err(Error::Capacity { .. })));
        assert!(matches!(verify(4, true), Err(Error::Capacity { .. })));
        assert!(verify(0, false).is_err());
    }

    #[test]
    fn overall_is_conjunction() {
        let r = VerificationReport::new(
            1,
            vec![Check::count("a", None, 1, 1), Check::flag("b", true, false)],
        );
        assert!(!r.overall);
        assert!(VerificationReport::new(1, vec![Check::count("a", None, 1, 1)]).overall);
        assert!(VerificationReport::new(1, vec![]).overall);
    }

    #[test]
    fn uniform_reports_first_outlier() {
        assert_eq!(uniform([3, 3, 3], 3), 3);
        assert_eq!(uniform([3, 4, 5], 3), 4);
        assert_eq!(uniform([], 7), 7);
    }

    #[test]
    fn text_table_lists_every_check() {
        let r = verify(1, false).unwrap();
        let text = r.to_string();
        for c in &r.checks {
            assert!(text.contains(&c.name));
        }
        assert!(text.ends_with("overall: PASS"));
    }
}
