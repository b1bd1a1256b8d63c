//! Achievable-rate / upper-bound / gap reports and the verification suites
//! that check each constant-gap claim over a parameter grid.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{best_bound, ub_genie, ub_strong, ub_weak_enlarged, BoundLabel};
use crate::channel::{classify, gauss_cap, ChannelParams, Regime};
use crate::error::{Error, Result};
use crate::gdof;
use crate::grid::full_coop_threshold;
use crate::oracle::{build_constraints, maximize, LinearConstraint};
use crate::strong::{noise_limited_rate, strong_rate, SchemeLabel};
use crate::weak::{
    full_coop_rate, gamma_pa, optimize_gamma, sum_bounds, universal_gamma, universal_rates,
};

/// Slack above a claimed gap constant before a point counts as a violation.
pub const GAP_TOL: f64 = 1e-6;
/// Slack for identities that hold exactly up to rounding.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Slack for the exact-capacity claim.
pub const EXACT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateReport {
    pub params: ChannelParams,
    pub regime: Regime,
    pub achievable: f64,
    pub scheme: SchemeLabel,
    pub upper: f64,
    pub bound_label: BoundLabel,
    pub gap: f64,
}

fn weak_applicable(params: &ChannelParams) -> bool {
    let (p, a) = (params.p(), params.a());
    a > 0.0 && a <= 1.0 && a * p >= 1.0
}

fn weak_scheme_rate(params: &ChannelParams, scheme: SchemeLabel) -> Result<f64> {
    if !weak_applicable(params) {
        return Err(Error::Precondition(format!(
            "{scheme} needs 0 < a <= 1 and a·P >= 1 (P = {}, a = {})",
            params.p(),
            params.a()
        )));
    }
    match scheme {
        SchemeLabel::UniversalPA => Ok(universal_rates(params)?.sum_rate()),
        SchemeLabel::FullCoopPA => full_coop_rate(params),
        SchemeLabel::OptimalGamma => Ok(optimize_gamma(params)?.1),
        _ => unreachable!("not a weak-regime scheme"),
    }
}

/// Best achievable rate in the weak regime over the three power allocation
/// policies; ties keep the earlier of universal, full-cooperation, optimal.
fn best_weak(params: &ChannelParams) -> Result<(f64, SchemeLabel)> {
    let mut best = (weak_scheme_rate(params, SchemeLabel::UniversalPA)?, SchemeLabel::UniversalPA);
    for s in [SchemeLabel::FullCoopPA, SchemeLabel::OptimalGamma] {
        let r = weak_scheme_rate(params, s)?;
        if r > best.0 {
            best = (r, s);
        }
    }
    Ok(best)
}

/// Achievable rate for `scheme`, or the regime's default when `None`.
pub fn achievable(params: &ChannelParams, scheme: Option<SchemeLabel>) -> Result<(f64, SchemeLabel)> {
    let regime = classify(params);
    match scheme {
        None => match regime {
            Regime::NoiseLimited => Ok((noise_limited_rate(params), SchemeLabel::TreatAsNoise)),
            Regime::Weak => best_weak(params),
            _ => strong_rate(params),
        },
        Some(SchemeLabel::TreatAsNoise) => Ok((noise_limited_rate(params), SchemeLabel::TreatAsNoise)),
        Some(s @ (SchemeLabel::UniversalPA | SchemeLabel::FullCoopPA | SchemeLabel::OptimalGamma)) => {
            Ok((weak_scheme_rate(params, s)?, s))
        }
        Some(requested) => {
            let (rate, used) = strong_rate(params)?;
            if used != requested {
                return Err(Error::Precondition(format!(
                    "{requested} does not apply at this point; the strong-regime scheme is {used}"
                )));
            }
            Ok((rate, used))
        }
    }
}

/// Compose an achievable rate with the tightest applicable bound.
pub fn gap_report(params: &ChannelParams, scheme: Option<SchemeLabel>) -> Result<RateReport> {
    let (achievable, scheme) = achievable(params, scheme)?;
    let bounds = best_bound(params);
    Ok(RateReport {
        params: *params,
        regime: classify(params),
        achievable,
        scheme,
        upper: bounds.best,
        bound_label: bounds.best_label,
        gap: bounds.best - achievable,
    })
}

/// Every implemented achievable rate that is valid at `params`.
pub fn all_achievable(params: &ChannelParams) -> Vec<(SchemeLabel, f64)> {
    let mut out = vec![(SchemeLabel::TreatAsNoise, noise_limited_rate(params))];
    if weak_applicable(params) {
        for s in [SchemeLabel::UniversalPA, SchemeLabel::FullCoopPA, SchemeLabel::OptimalGamma] {
            out.push((s, weak_scheme_rate(params, s).expect("weak preconditions checked")));
        }
    }
    if classify(params).is_strong() {
        let (r, s) = strong_rate(params).expect("strong regime");
        out.push((s, r));
    }
    out
}

/// A grid point at which a claimed constant was exceeded.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub suite: String,
    pub check: String,
    /// Channel point, when the check is indexed by one.
    pub params: Option<ChannelParams>,
    /// Free-form location for checks not indexed by a channel point.
    pub point: String,
    pub claimed_bound: f64,
    pub observed_gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Strong,
    NoiseLimited,
    Appendix,
    Oracle,
    Soundness,
    Gdof,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Strong,
        Suite::NoiseLimited,
        Suite::Appendix,
        Suite::Oracle,
        Suite::Soundness,
        Suite::Gdof,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Strong => "strong",
            Suite::NoiseLimited => "noise-limited",
            Suite::Appendix => "appendix",
            Suite::Oracle => "oracle",
            Suite::Soundness => "soundness",
            Suite::Gdof => "gdof",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_many(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite '{s}'")))
    }
}

/// One measured quantity against its claimed ceiling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    pub check: &'static str,
    pub claimed: f64,
    pub tol: f64,
    pub observed: f64,
}

impl Observation {
    pub fn new(check: &'static str, claimed: f64, tol: f64, observed: f64) -> Self {
        Self { check, claimed, tol, observed }
    }

    pub fn violated(&self) -> bool {
        // NaN counts as a violation.
        !(self.observed <= self.claimed + self.tol)
    }
}

/// Aggregate of one check across a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub claimed: f64,
    pub tol: f64,
    pub points: usize,
    pub max_observed: f64,
    pub violations: usize,
    /// Reported but not a pass condition.
    pub informational: bool,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.informational || self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub points: usize,
    /// Points outside every hypothesis of the suite.
    pub skipped: usize,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.checks.iter().all(CheckSummary::passed)
    }

    /// Fold per-point observations, in point order, into a report.
    pub fn aggregate<L: Into<String>>(
        suite: Suite,
        per_point: Vec<(Option<ChannelParams>, L, Vec<Observation>)>,
    ) -> Self {
        let mut checks: Vec<CheckSummary> = Vec::new();
        let mut violations = Vec::new();
        let mut skipped = 0;
        let points = per_point.len();
        for (params, label, obs) in per_point {
            if obs.is_empty() {
                skipped += 1;
                continue;
            }
            let label = label.into();
            for o in obs {
                let summary = match checks.iter_mut().find(|c| c.check == o.check) {
                    Some(s) => s,
                    None => {
                        checks.push(CheckSummary {
                            check: o.check.to_string(),
                            claimed: o.claimed,
                            tol: o.tol,
                            points: 0,
                            max_observed: f64::NEG_INFINITY,
                            violations: 0,
                            informational: false,
                        });
                        checks.last_mut().unwrap()
                    }
                };
                summary.points += 1;
                if o.observed > summary.max_observed || o.observed.is_nan() {
                    summary.max_observed = o.observed;
                }
                if o.violated() {
                    summary.violations += 1;
                    violations.push(Violation {
                        suite: suite.to_string(),
                        check: o.check.to_string(),
                        params,
                        point: label.clone(),
                        claimed_bound: o.claimed,
                        observed_gap: o.observed,
                    });
                }
            }
        }
        SuiteReport { suite, points, skipped, checks, violations }
    }
}

fn theorem1_point(params: &ChannelParams) -> Vec<Observation> {
    if !weak_applicable(params) {
        return vec![];
    }
    let ub1 = ub_weak_enlarged(params).expect("a <= 1");
    let ub = ub1.min(ub_genie(params));
    let rate = universal_rates(params).expect("weak").sum_rate();
    vec![Observation::new("universal-gap", 2.0, GAP_TOL, ub - rate)]
}

fn appendix_point(params: &ChannelParams) -> Vec<Observation> {
    if !weak_applicable(params) {
        return vec![];
    }
    let u = universal_rates(params).expect("weak");
    let ub1 = ub_weak_enlarged(params).expect("a <= 1");
    let ub2 = ub_genie(params);
    vec![
        Observation::new("step1-r1-minus-r3", 0.5, GAP_TOL, u.r1 - u.r3),
        Observation::new("step1-r1-minus-r4", 0.5, GAP_TOL, u.r1 - u.r4),
        Observation::new("step1-r1-minus-r5", 0.5, GAP_TOL, u.r1 - u.r5),
        Observation::new("step2-delta1", 1.2, GAP_TOL, ub1 - (u.r1 + u.private_rate)),
        Observation::new("step3-delta2", 2.0, GAP_TOL, ub2 - (u.r2 + u.private_rate)),
        Observation::new("r6-r7-redundant", 0.0, IDENTITY_TOL, u.r_min - u.r6.min(u.r7)),
    ]
}

fn theorem2_point(params: &ChannelParams) -> Vec<Observation> {
    if !weak_applicable(params) {
        return vec![];
    }
    let (p, a, c12) = (params.p(), params.a(), params.c12());
    let threshold = full_coop_threshold(p, a);
    let fc = full_coop_rate(params).expect("weak");
    let mut out = Vec::new();
    if c12 <= threshold && a.powi(3) * p * p <= a + 1.0 {
        out.push(Observation::new("case1-gap-vs-genie", 1.0, GAP_TOL, ub_genie(params) - fc));
    }
    if c12 >= threshold {
        let ub1 = ub_weak_enlarged(params).expect("a <= 1");
        out.push(Observation::new("case2-gap-vs-cgrc-enlarged", 1.5, GAP_TOL, ub1 - fc));
    }
    out
}

fn strong_point(params: &ChannelParams) -> Vec<Observation> {
    let regime = classify(params);
    if !regime.is_strong() {
        return vec![];
    }
    let (rate, scheme) = strong_rate(params).expect("strong");
    let ub3 = ub_strong(params).expect("a > 1");
    let mut out = vec![Observation::new("gap-vs-ub3", 1.0, GAP_TOL, ub3 - rate)];
    if regime == Regime::StrongCase2 {
        let beamformed = gauss_cap(params.coherent_gain() * params.p());
        out.push(Observation::new("case2-gap-vs-cgrc", 0.5, GAP_TOL, beamformed - rate));
    }
    if scheme == SchemeLabel::ExactCapacity {
        let report = gap_report(params, None).expect("strong");
        out.push(Observation::new("exact-capacity", 0.0, EXACT_TOL, report.gap.abs()));
    }
    out
}

fn noise_limited_point(params: &ChannelParams) -> Vec<Observation> {
    if classify(params) != Regime::NoiseLimited {
        return vec![];
    }
    let bound = if params.a() <= 1.0 {
        ub_weak_enlarged(params).expect("a <= 1")
    } else {
        gauss_cap(params.coherent_gain() * params.p())
    };
    vec![Observation::new("tin-gap", 1.0, GAP_TOL, bound - noise_limited_rate(params))]
}

/// Power-split fractions at which the LP is compared with the closed form;
/// the universal `γ` is appended per point.
pub const ORACLE_GAMMAS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn oracle_point(params: &ChannelParams) -> Vec<Observation> {
    if !weak_applicable(params) {
        return vec![];
    }
    let mut out = Vec::new();
    let gammas = ORACLE_GAMMAS.iter().copied().chain(std::iter::once(universal_gamma(params)));
    for g in gammas {
        let pa = gamma_pa(params, g).expect("weak");
        let constraints = build_constraints(&pa, params);
        let lp = maximize(&constraints, [1.0, 1.0, 1.0]).expect("origin feasible");
        let closed = sum_bounds(&pa, params).min();
        out.push(Observation::new("lp-vs-closed-form", 0.0, IDENTITY_TOL, (lp.optimum - closed).abs()));

        let mut symmetric = constraints;
        symmetric.push(LinearConstraint::new([1.0, -1.0, 0.0], 0.0));
        symmetric.push(LinearConstraint::new([-1.0, 1.0, 0.0], 0.0));
        let sym = maximize(&symmetric, [1.0, 1.0, 1.0]).expect("origin feasible");
        out.push(Observation::new(
            "symmetric-optimum",
            0.0,
            IDENTITY_TOL,
            (lp.optimum - sym.optimum).abs(),
        ));
    }
    out
}

fn soundness_point(params: &ChannelParams) -> Vec<Observation> {
    let best = best_bound(params).best;
    all_achievable(params)
        .into_iter()
        .map(|(_, r)| Observation::new("achievable-minus-bound", 0.0, IDENTITY_TOL, r - best))
        .collect()
}

fn describe(p: &ChannelParams) -> String {
    format!("P={} a={} C12={}", p.p(), p.a(), p.c12())
}

/// Run one suite over a grid of channel points. The `gdof` suite ignores
/// the channel grid and uses its own `(α, β)` grid.
pub fn verify_suite(suite: Suite, grid: &[ChannelParams]) -> SuiteReport {
    let check: fn(&ChannelParams) -> Vec<Observation> = match suite {
        Suite::Theorem1 => theorem1_point,
        Suite::Theorem2 => theorem2_point,
        Suite::Strong => strong_point,
        Suite::NoiseLimited => noise_limited_point,
        Suite::Appendix => appendix_point,
        Suite::Oracle => oracle_point,
        Suite::Soundness => soundness_point,
        Suite::Gdof => return gdof::verify(),
    };
    let per_point: Vec<_> = grid.par_iter().map(|p| (Some(*p), describe(p), check(p))).collect();
    SuiteReport::aggregate(suite, per_point)
}

/// Like [`verify_suite`] but by name, for callers taking user input.
pub fn verify_suite_named(name: &str, grid: &[ChannelParams]) -> Result<Vec<SuiteReport>> {
    Ok(Suite::parse_many(name)?.into_iter().map(|s| verify_suite(s, grid)).collect())
}
