//! The identity catalog and its verification harness.
//!
//! Every entry compiles to a list of checks `lhs = rhs`. Denominators in ζ are
//! cleared by multiplying both sides by the entry's clearing factor, so all
//! sides are exact series over ℤ[ζ, ζ⁻¹], ℚ or ℤ/2.

pub mod bailey;
pub mod classical;
mod recipes;

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::prefixed::PrefixedSeries;
use crate::ring::{Mod2, Ring};
use crate::series::Series;
use crate::zeta::ZetaLaurent;

pub use bailey::{apply_bailey_lemma, check_bailey_pair, lovejoy_pair, mod2_pair, unit_pair, BaileyPair};
pub use classical::ClassicalSpec;

/// One catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub key: &'static str,
    pub description: &'static str,
    /// Factor multiplied into both sides, as printed in reports.
    pub clearing_factor: &'static str,
    pub default_order: usize,
}

const fn rec(key: &'static str, description: &'static str, clearing_factor: &'static str) -> IdentityRecord {
    IdentityRecord { key, description, clearing_factor, default_order: 40 }
}

/// The catalog, in report order.
pub const CATALOG: [IdentityRecord; 20] = [
    rec("eq1.1", "rank and unimodal summands are related by n -> -n", "1"),
    rec("eq1.2", "U(zeta;q) through a bilateral Lambert series", "(1+zeta)(1+zeta^-1)"),
    rec("lemma3.1", "Ubar(zeta;q) through Rbar and R", "(1-zeta)(1-zeta^-1)"),
    rec("cor3.2", "Ubar(zeta;q) through Appell functions", "(1-zeta)(1-zeta^2)"),
    rec("prop4.1", "Ubar2(zeta;-q) through generalized Lambert series", "2(1-zeta^2)"),
    rec("cor4.2", "Ubar2(zeta;-q) through mu and A_2", "1-zeta^2"),
    rec("false-dual", "Ubar2(zeta;-1/q) and the false theta function", "1-zeta^2"),
    rec("prop5.1", "U2(zeta;-q) through R2 and R", "(1+zeta)(1+zeta^-1)"),
    rec("cor5.2", "U2(zeta;-q) through Appell functions", "(1+zeta)^2"),
    rec("prop5.3-mod2", "U2(1;-q) modulo 2 as a double sum", "1"),
    rec("thetid", "Bailey-lemma double-sum identity", "1"),
    rec("prop5.4", "the double sum as a norm-form count", "2"),
    rec("omega", "R(-q;q^2) through the third order omega function", "1"),
    rec("jtp", "Jacobi triple product", "1"),
    rec("heine", "Heine's transformation", "1"),
    rec("watson", "Watson's transformation", "1"),
    rec("ab621", "partial-theta transformation", "1"),
    rec("ab6312", "Lambert-type transformation", "(1-zeta)(1-zeta^-1) at the unimodal specialization"),
    rec("bailey-lemma", "Bailey's lemma on the mod-2 pair and the unit pair", "1"),
    rec("lovejoy-bp", "Lovejoy's Bailey pair", "1"),
];

pub fn record(key: &str) -> Result<&'static IdentityRecord> {
    CATALOG.iter().find(|r| r.key == key).ok_or_else(|| Error::UnknownIdentity(key.to_string()))
}

/// One side of a check.
#[derive(Clone, Debug, PartialEq)]
pub enum Side {
    Z(QLaurent<ZetaLaurent>),
    Q(QLaurent<BigRational>),
    M(QLaurent<Mod2>),
    P(PrefixedSeries),
}

impl Side {
    fn top(&self) -> i64 {
        match self {
            Side::Z(s) => s.top(),
            Side::Q(s) => s.top(),
            Side::M(s) => s.top(),
            Side::P(s) => s.top(),
        }
    }

    /// Adds `ζ^m q^n`; rational and mod-2 sides ignore `m`.
    fn perturbed(&self, m: i64, n: i64) -> Side {
        fn bump<R: Ring>(s: &QLaurent<R>, c: R, n: i64) -> QLaurent<R> {
            let lo = s.valuation.min(n);
            let mut body = Series::zero((s.top() - lo).max(0) as usize);
            body.add_at((n - lo) as usize, &c);
            s.add(&QLaurent::new(lo, body))
        }
        match self {
            Side::Z(s) => Side::Z(bump(s, ZetaLaurent::zeta(m), n)),
            Side::Q(s) => Side::Q(bump(s, BigRational::one(), n)),
            Side::M(s) => Side::M(bump(s, Mod2::one(), n)),
            Side::P(s) => {
                let s = s.normalized();
                Side::P(PrefixedSeries { body: bump(&s.body, ZetaLaurent::zeta(m), n), ..s })
            }
        }
    }
}

/// A single `lhs = rhs` comparison.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub lhs: Side,
    pub rhs: Side,
}

impl Check {
    pub fn z(label: impl Into<String>, lhs: QLaurent<ZetaLaurent>, rhs: QLaurent<ZetaLaurent>) -> Self {
        Check { label: label.into(), lhs: Side::Z(lhs), rhs: Side::Z(rhs) }
    }

    pub fn q(label: impl Into<String>, lhs: QLaurent<BigRational>, rhs: QLaurent<BigRational>) -> Self {
        Check { label: label.into(), lhs: Side::Q(lhs), rhs: Side::Q(rhs) }
    }

    pub fn m(label: impl Into<String>, lhs: QLaurent<Mod2>, rhs: QLaurent<Mod2>) -> Self {
        Check { label: label.into(), lhs: Side::M(lhs), rhs: Side::M(rhs) }
    }

    pub fn p(label: impl Into<String>, lhs: PrefixedSeries, rhs: PrefixedSeries) -> Self {
        Check { label: label.into(), lhs: Side::P(lhs), rhs: Side::P(rhs) }
    }

    /// First mismatching `(m, n)` through `q^order`, or `None` when equal.
    ///
    /// `m` is the lowest ζ-exponent of the difference (0 for rational and
    /// mod-2 sides). Fails if either side is not known through `q^order`.
    pub fn first_mismatch(&self, order: i64) -> Result<Option<(i64, i64)>> {
        for s in [&self.lhs, &self.rhs] {
            if s.top() < order {
                return Err(Error::OutOfRange { index: order, order: s.top() });
            }
        }
        fn scan<R: Ring>(a: &QLaurent<R>, b: &QLaurent<R>, order: i64, m: impl Fn(&R) -> i64) -> Result<Option<(i64, i64)>> {
            for e in a.valuation.min(b.valuation).min(0)..=order {
                let d = a.coefficient(e)?.minus(&b.coefficient(e)?);
                if !d.is_zero() {
                    return Ok(Some((m(&d), e)));
                }
            }
            Ok(None)
        }
        match (&self.lhs, &self.rhs) {
            (Side::Z(a), Side::Z(b)) => scan(a, b, order, |d| d.min_exponent().unwrap_or(0)),
            (Side::Q(a), Side::Q(b)) => scan(a, b, order, |_| 0),
            (Side::M(a), Side::M(b)) => scan(a, b, order, |_| 0),
            (Side::P(a), Side::P(b)) => {
                let (a, b) = (a.normalized(), b.normalized());
                if (a.unit, a.zeta_half, a.q24) != (b.unit, b.zeta_half, b.q24) {
                    return Err(Error::LatticeMismatch(format!(
                        "{}: prefixes (i^{}, z^{}/2, q^{}/24) and (i^{}, z^{}/2, q^{}/24)",
                        self.label, a.unit, a.zeta_half, a.q24, b.unit, b.zeta_half, b.q24
                    )));
                }
                scan(&a.body, &b.body, order.min(a.top()).min(b.top()), |d| d.min_exponent().unwrap_or(0))
            }
            _ => Err(Error::Domain(format!("{}: sides live in different rings", self.label))),
        }
    }
}

/// Outcome of verifying one catalog entry.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub key: String,
    pub order: usize,
    pub pass: bool,
    /// First mismatching `(ζ-exponent, q-exponent)`.
    pub first_mismatch: Option<(i64, i64)>,
    /// Label of the failing check, or an error message.
    pub detail: String,
    pub checks: usize,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// JSON form without timing, so repeated runs are byte-identical.
    pub fn to_json(&self) -> Value {
        json!({
            "key": self.key,
            "order": self.order,
            "pass": self.pass,
            "first_mismatch": self.first_mismatch.map(|(m, n)| json!({"m": m, "n": n})),
            "checks": self.checks,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} through q^{} ({} checks)", self.key, self.order, self.checks)?;
        if let Some((m, n)) = self.first_mismatch {
            write!(f, ", first mismatch at zeta^{m} q^{n}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn run(key: &str, order: usize, checks: Result<Vec<Check>>, start: Instant) -> VerificationReport {
    let mut report = VerificationReport {
        key: key.to_string(),
        order,
        pass: true,
        first_mismatch: None,
        detail: String::new(),
        checks: 0,
        elapsed: Duration::ZERO,
    };
    match checks {
        Err(e) => {
            report.pass = false;
            report.detail = e.to_string();
        }
        Ok(checks) => {
            report.checks = checks.len();
            for c in &checks {
                match c.first_mismatch(order as i64) {
                    Ok(None) => {}
                    Ok(Some(at)) => {
                        report.pass = false;
                        report.first_mismatch = Some(at);
                        report.detail = c.label.clone();
                        break;
                    }
                    Err(e) => {
                        report.pass = false;
                        report.detail = format!("{}: {e}", c.label);
                        break;
                    }
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Builds the checks of `key` through `q^order` without comparing them.
pub fn checks(key: &str, order: usize) -> Result<Vec<Check>> {
    record(key)?;
    recipes::checks(key, order)
}

/// Verifies `key` through `q^order`.
///
/// Unknown keys are an error; everything else, including failures inside the
/// builders, is reported as a failing verdict.
pub fn verify(key: &str, order: usize) -> Result<VerificationReport> {
    record(key)?;
    let start = Instant::now();
    Ok(run(key, order, recipes::checks(key, order), start))
}

/// Verifies `key` after adding `ζ^m q^n` to the right side of its first check.
pub fn verify_perturbed(key: &str, order: usize, at: (i64, i64)) -> Result<VerificationReport> {
    record(key)?;
    let start = Instant::now();
    let checks = recipes::checks(key, order).map(|mut cs| {
        if let Some(c) = cs.first_mut() {
            c.rhs = c.rhs.perturbed(at.0, at.1);
        }
        cs
    });
    Ok(run(key, order, checks, start))
}

/// Verifies every catalog entry concurrently; reports come back in catalog
/// order.
pub fn verify_all(order: usize) -> Vec<VerificationReport> {
    CATALOG.par_iter().map(|r| verify(r.key, order).expect("catalog key")).collect()
}

/// Minimum number of non-singular specializations for a classical lemma.
pub const MIN_SPECIALIZATIONS: usize = 5;

/// Checks a classical lemma under each rational specialization.
///
/// Specializations that hit a vanishing factor are skipped with a warning;
/// fewer than [`MIN_SPECIALIZATIONS`] usable ones is an error.
pub fn verify_classical(key: &str, specs: &[ClassicalSpec<BigRational>], order: usize) -> Result<VerificationReport> {
    record(key)?;
    let start = Instant::now();
    let top = order as i64;
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        match classical::sides(key, spec, &BigRational::one(), top) {
            Ok((l, r)) => checks.push(Check::q(format!("specialization {i}"), l, r)),
            Err(e) if classical::is_singular(&e) => {
                log::warn!("{key}: skipping specialization {i}: {e}");
                skipped.push(i);
            }
            Err(e) => return Err(e),
        }
    }
    if checks.len() < MIN_SPECIALIZATIONS {
        return Err(Error::TooFewSpecializations { found: checks.len(), needed: MIN_SPECIALIZATIONS });
    }
    let mut report = run(key, order, Ok(checks), start);
    if report.pass && !skipped.is_empty() {
        report.detail = format!("skipped singular specializations {skipped:?}");
    }
    Ok(report)
}
