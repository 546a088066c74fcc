//! Executable identity checks.
//!
//! Every entry of the [`registry`] pairs two evaluators `n ↦ integer` that are
//! computed by different code paths (enumeration, generating functions,
//! recurrences, restricted-partition dynamic programming) and compares them
//! over a range of `n`. Parameter sweeps (`j = 0..=8`, `(A, a)` grids, ...)
//! are modelled as several labelled [`Case`]s of one check.

mod registry;
mod report;

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::enumeration_cap;

pub use registry::registry;
pub use report::{
    reports_to_csv, reports_to_json, reports_to_text, Failure, IdentityReport, Range, Status,
};

/// Default upper bound for enumeration-backed checks.
pub const DEFAULT_MAX_N_ENUM: usize = 50;
/// Default precision for series-backed checks.
pub const DEFAULT_MAX_N_SERIES: usize = 500;

pub type Evaluator = Arc<dyn Fn(i64) -> Result<BigInt> + Send + Sync>;

/// One labelled comparison `lhs(n) == rhs(n)`.
#[derive(Clone)]
pub struct Case {
    pub label: String,
    /// First `n` for this case; defaults to the check's start.
    pub from: Option<i64>,
    /// Last `n` for this case regardless of the requested maximum.
    pub to: Option<i64>,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

impl Case {
    pub fn new(
        label: impl Into<String>,
        lhs: impl Fn(i64) -> Result<BigInt> + Send + Sync + 'static,
        rhs: impl Fn(i64) -> Result<BigInt> + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            from: None,
            to: None,
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
        }
    }

    pub fn starting_at(mut self, from: i64) -> Self {
        self.from = Some(from);
        self
    }

    pub fn ending_at(mut self, to: i64) -> Self {
        self.to = Some(to);
        self
    }
}

/// What bounds the range a check can be run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backing {
    /// At least one side enumerates partitions; capped by the enumeration cap.
    Enumeration,
    /// Both sides come from series, recurrences or dynamic programming.
    Series,
}

pub type CaseBuilder = Arc<dyn Fn(usize) -> Result<Vec<Case>> + Send + Sync>;

/// A registered identity.
#[derive(Clone)]
pub struct IdentityCheck {
    pub id: String,
    pub description: String,
    /// Smallest `n` for which the statement is asserted.
    pub valid_from: i64,
    /// Smallest `n` actually checked; below `valid_from` when `n = 0` is
    /// additionally checked under the `p(negative) = 0` convention.
    pub check_from: i64,
    pub backing: Backing,
    /// Which methods produce the two sides.
    pub method: String,
    /// Builds the cases for a run up to the given `n_max`, precomputing any
    /// series the evaluators need.
    pub build: CaseBuilder,
}

impl IdentityCheck {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        valid_from: i64,
        backing: Backing,
        method: impl Into<String>,
        build: impl Fn(usize) -> Result<Vec<Case>> + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            valid_from,
            check_from: valid_from,
            backing,
            method: method.into(),
            build: Arc::new(build),
        }
    }

    /// Also check `n = 0`.
    pub fn with_zero(mut self) -> Self {
        self.check_from = self.check_from.min(0);
        self
    }

    pub fn requires_enumeration(&self) -> bool {
        self.backing == Backing::Enumeration
    }

    pub fn cases(&self, n_max: usize) -> Result<Vec<Case>> {
        (self.build)(n_max)
    }
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("valid_from", &self.valid_from)
            .field("backing", &self.backing)
            .finish()
    }
}

/// Finds a registered check by id.
pub fn lookup(id: &str) -> Result<IdentityCheck> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Usage(format!("unknown identity id '{id}'")))
}

/// Runs one check over `[check_from, n_max]` and collects every mismatch.
pub fn run_check(check: &IdentityCheck, n_max: i64) -> Result<IdentityReport> {
    run_check_from(check, check.check_from, n_max)
}

/// Same as [`run_check`] with an explicit lower end, which may lie below the
/// check's own start (useful to show why a quantifier excludes small `n`).
pub fn run_check_from(check: &IdentityCheck, n_lo: i64, n_hi: i64) -> Result<IdentityReport> {
    let start = Instant::now();
    let cases = if n_hi >= 0 {
        check.cases(n_hi as usize)?
    } else {
        Vec::new()
    };
    let mut work = Vec::new();
    let mut reached = n_lo;
    for (ci, case) in cases.iter().enumerate() {
        let lo = case.from.map_or(n_lo, |f| f.max(n_lo));
        let hi = case.to.map_or(n_hi, |t| t.min(n_hi));
        reached = reached.max(hi);
        work.extend((lo..=hi).map(|n| (ci, n)));
    }
    let evaluated: Vec<(usize, i64, BigInt, BigInt)> = work
        .par_iter()
        .map(|&(ci, n)| {
            let c = &cases[ci];
            Ok((ci, n, (c.lhs)(n)?, (c.rhs)(n)?))
        })
        .collect::<Result<_>>()?;
    let evaluations = evaluated.len();
    let mut failures: Vec<(i64, usize, Failure)> = evaluated
        .into_iter()
        .filter(|(_, _, l, r)| l != r)
        .map(|(ci, n, l, r)| {
            (
                n,
                ci,
                Failure {
                    n,
                    case: cases[ci].label.clone(),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                },
            )
        })
        .collect();
    failures.sort_by_key(|(n, ci, _)| (*n, *ci));
    Ok(IdentityReport::new(
        check,
        Range {
            from: n_lo,
            to: reached.min(n_hi),
        },
        failures.into_iter().map(|(_, _, f)| f).collect(),
        cases.len(),
        evaluations,
        start.elapsed().as_millis() as u64,
    ))
}

fn ensure_capacity(check: &IdentityCheck, n_max: i64) -> Result<()> {
    if check.requires_enumeration() && n_max > enumeration_cap() as i64 {
        return Err(Error::Capacity(format!(
            "'{}' enumerates partitions and n_max = {n_max} exceeds the enumeration cap of {}",
            check.id,
            enumeration_cap()
        )));
    }
    Ok(())
}

/// Verifies the registered identity `id` for every `n` in its range up to `n_max`.
pub fn verify(id: &str, n_max: i64) -> Result<IdentityReport> {
    let check = lookup(id)?;
    if n_max < check.valid_from {
        return Err(Error::Usage(format!(
            "'{id}' is asserted from n = {}; n_max = {n_max} checks nothing",
            check.valid_from
        )));
    }
    ensure_capacity(&check, n_max)?;
    run_check(&check, n_max)
}

/// Runs every registered check: enumeration-backed ones up to `n_max_enum`,
/// the others up to `n_max_series`.
pub fn verify_all(n_max_enum: usize, n_max_series: usize) -> Result<Vec<IdentityReport>> {
    verify_checks(&registry(), n_max_enum, n_max_series)
}

/// [`verify_all`] over an explicit list of checks. Reports come back in the
/// order of `checks`.
pub fn verify_checks(
    checks: &[IdentityCheck],
    n_max_enum: usize,
    n_max_series: usize,
) -> Result<Vec<IdentityReport>> {
    checks
        .par_iter()
        .map(|check| {
            let n_max = match check.backing {
                Backing::Enumeration => n_max_enum,
                Backing::Series => n_max_series,
            } as i64;
            ensure_capacity(check, n_max)?;
            run_check(check, n_max)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_usage_error() {
        assert!(matches!(verify("nonsense-id", 10), Err(Error::Usage(_))));
    }

    #[test]
    fn n_max_below_start_is_usage_error() {
        assert!(matches!(verify("thm-5.3", 1), Err(Error::Usage(_))));
    }

    #[test]
    fn enumeration_checks_respect_cap() {
        let too_big = enumeration_cap() as i64 + 1;
        assert!(matches!(
            verify("thm-3.1", too_big),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn ids_are_unique() {
        let reg = registry();
        let mut ids: Vec<&str> = reg.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn starts_never_exceed_quantifiers() {
        for c in registry() {
            assert!(c.check_from <= c.valid_from, "{}", c.id);
        }
    }

    #[test]
    fn thm_3_1_needs_n_at_least_one() {
        let check = lookup("thm-3.1").unwrap();
        let report = run_check_from(&check, 0, 0).unwrap();
        assert_eq!(report.failures.len(), 1);
        let f = &report.failures[0];
        assert_eq!((f.n, f.lhs.as_str(), f.rhs.as_str()), (0, "2", "1"));
        assert!(verify("thm-3.1", 30).unwrap().passed());
    }

    #[test]
    fn smoke_all_pass() {
        let reports = verify_all(5, 5).unwrap();
        assert_eq!(reports.len(), registry().len());
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.id, r.failures);
        }
    }

    #[test]
    fn corrupted_entry_fails_alone() {
        let mut checks = registry();
        let victim = checks.iter().position(|c| c.id == "cor-3.4").unwrap();
        let original = checks[victim].clone();
        checks[victim].build = Arc::new(move |n_max| {
            let mut cases = original.cases(n_max)?;
            let rhs = cases[0].rhs.clone();
            cases[0].rhs = Arc::new(move |n| Ok(rhs(n)? + if n == 4 { 1 } else { 0 }));
            Ok(cases)
        });
        let reports = verify_checks(&checks, 8, 8).unwrap();
        let failing: Vec<&IdentityReport> = reports.iter().filter(|r| !r.passed()).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].id, "cor-3.4");
        assert_eq!(failing[0].failures.len(), 1);
        assert_eq!(failing[0].failures[0].n, 4);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify("thm-3.10-even", 12).unwrap();
        let b = verify("thm-3.10-even", 12).unwrap();
        assert_eq!(a.without_timing(), b.without_timing());
    }
}
