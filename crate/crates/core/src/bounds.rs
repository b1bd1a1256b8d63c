//! Upper bounds on the sum-capacity.
//!
//! * weak regime: sum-capacity of the cognitive radio channel (encoder 2
//!   knows encoder 1's whole message), both exact and in a closed-form
//!   enlargement;
//! * any regime: a genie-aided bound, the interference-channel genie bound
//!   plus `C12`;
//! * strong regime: the smaller of the cut-set bound `C12 + 2C(P)` and the
//!   strong-interference cognitive bound `C(bP)`.

use std::fmt;

use serde::Serialize;

use crate::channel::{gauss_cap, ChannelParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundLabel {
    CgrcExact,
    CgrcEnlarged,
    Genie,
    /// Cut-set term `C12 + 2C(P)` of the strong bound.
    CutSet,
    /// Cognitive term `C(bP)` of the strong bound.
    CgrcStrong,
}

impl BoundLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundLabel::CgrcExact => "cgrc-exact",
            BoundLabel::CgrcEnlarged => "cgrc-enlarged",
            BoundLabel::Genie => "genie",
            BoundLabel::CutSet => "cut-set",
            BoundLabel::CgrcStrong => "cgrc-strong",
        }
    }
}

impl fmt::Display for BoundLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every bound applicable at an operating point and the tightest of them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    /// Enlarged cognitive bound, `a ≤ 1` only.
    pub ub1: Option<f64>,
    /// Exact cognitive sum-capacity, `a ≤ 1` only.
    pub ub_cgrc_exact: Option<f64>,
    /// Genie-aided bound.
    pub ub2: f64,
    /// Strong-regime bound, `a ≥ 1` only.
    pub ub3: Option<f64>,
    pub best: f64,
    pub best_label: BoundLabel,
}

fn weak_only(params: &ChannelParams, what: &str) -> Result<()> {
    if params.a() > 1.0 {
        return Err(Error::Precondition(format!("{what} requires a <= 1, got a = {}", params.a())));
    }
    Ok(())
}

const ETA_GRID: usize = 1001;
const ETA_TOL: f64 = 1e-10;

/// Golden-section search for a maximum of `f` on `[lo, hi]`. Returns the
/// best `(x, f(x))` seen, endpoints included.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best = if f(lo) >= f(hi) { (lo, f(lo)) } else { (hi, f(hi)) };
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
        for (x, fx) in [(x1, f1), (x2, f2)] {
            if fx > best.1 {
                best = (x, fx);
            }
        }
    }
    best
}

/// Sum-capacity of the weak-interference cognitive radio channel:
/// `½·max_η [log(1 + aP + 2√((1−η)a)·P + P) + log((1 + ηP)/(1 + ηaP))]`.
///
/// The first log decreases and the second increases in `η`; the maximum is
/// located on a 1001-point grid and refined by golden-section search.
pub fn ub_cgrc_exact(params: &ChannelParams) -> Result<f64> {
    weak_only(params, "cognitive weak-regime bound")?;
    let (p, a) = (params.p(), params.a());
    let objective = |eta: f64| {
        let eta_bar = (1.0 - eta).max(0.0);
        (1.0 + a * p + 2.0 * (eta_bar * a).sqrt() * p + p).log2()
            + ((1.0 + eta * p) / (1.0 + eta * a * p)).log2()
    };
    let step = 1.0 / (ETA_GRID - 1) as f64;
    let (mut best_i, mut best_v) = (0, objective(0.0));
    for i in 1..ETA_GRID {
        let v = objective(i as f64 * step);
        if v > best_v {
            best_i = i;
            best_v = v;
        }
    }
    let lo = best_i.saturating_sub(1) as f64 * step;
    let hi = (best_i + 1).min(ETA_GRID - 1) as f64 * step;
    let (_, refined) = golden_max(objective, lo, hi, ETA_TOL);
    Ok(0.5 * best_v.max(refined))
}

/// Closed-form enlargement of [`ub_cgrc_exact`]:
/// `½·log(1 + bP) + ½·log((1 + P)/(1 + aP))`.
pub fn ub_weak_enlarged(params: &ChannelParams) -> Result<f64> {
    weak_only(params, "enlarged cognitive bound")?;
    let (p, a) = (params.p(), params.a());
    Ok(gauss_cap(params.coherent_gain() * p) + 0.5 * ((1.0 + p) / (1.0 + a * p)).log2())
}

/// Genie-aided bound `C12 + log((P + (aP + 1)²)/(aP + 1))`.
pub fn ub_genie(params: &ChannelParams) -> f64 {
    let (p, inr) = (params.p(), params.inr());
    params.c12() + ((p + (inr + 1.0).powi(2)) / (inr + 1.0)).log2()
}

fn strong_terms(params: &ChannelParams) -> (f64, f64) {
    let p = params.p();
    (params.c12() + 2.0 * gauss_cap(p), gauss_cap(params.coherent_gain() * p))
}

/// Strong-regime bound `min{C12 + 2C(P), C(bP)}`.
pub fn ub_strong(params: &ChannelParams) -> Result<f64> {
    if params.a() < 1.0 {
        return Err(Error::Precondition(format!(
            "strong-regime bound requires a >= 1, got a = {}",
            params.a()
        )));
    }
    let (cut, cgrc) = strong_terms(params);
    Ok(cut.min(cgrc))
}

/// Evaluate every applicable bound. At `a = 1` both the weak and strong
/// families apply.
pub fn best_bound(params: &ChannelParams) -> BoundReport {
    let a = params.a();
    let ub2 = ub_genie(params);
    let mut best = (ub2, BoundLabel::Genie);
    let mut offer = |v: f64, l: BoundLabel| {
        if v < best.0 {
            best = (v, l);
        }
    };

    let (mut ub1, mut exact, mut ub3) = (None, None, None);
    if a <= 1.0 {
        let e = ub_weak_enlarged(params).expect("a <= 1");
        let x = ub_cgrc_exact(params).expect("a <= 1");
        offer(e, BoundLabel::CgrcEnlarged);
        offer(x, BoundLabel::CgrcExact);
        ub1 = Some(e);
        exact = Some(x);
    }
    if a >= 1.0 {
        let (cut, cgrc) = strong_terms(params);
        offer(cgrc, BoundLabel::CgrcStrong);
        offer(cut, BoundLabel::CutSet);
        ub3 = Some(cut.min(cgrc));
    }
    BoundReport { ub1, ub_cgrc_exact: exact, ub2, ub3, best: best.0, best_label: best.1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    fn params(p: f64, a: f64, c12: f64) -> ChannelParams {
        ChannelParams::new(p, a, c12).unwrap()
    }

    fn c(x: f64) -> f64 {
        0.5 * (1.0 + x).log2()
    }

    /// Dense-grid maximization, independent of the golden-section path.
    fn cgrc_brute(p: f64, a: f64) -> f64 {
        let n = 200_000;
        (0..=n)
            .map(|i| {
                let eta = i as f64 / n as f64;
                (1.0 + a * p + 2.0 * ((1.0 - eta) * a).sqrt() * p + p).log2()
                    + ((1.0 + eta * p) / (1.0 + eta * a * p)).log2()
            })
            .fold(f64::NEG_INFINITY, f64::max)
            * 0.5
    }

    #[test]
    fn cgrc_exact_examples() {
        assert!((ub_cgrc_exact(&params(3.0, 0.0, 0.0)).unwrap() - 2.0).abs() < TOL);
        for p in [0.5, 3.0, 100.0] {
            let v = ub_cgrc_exact(&params(p, 1.0, 0.0)).unwrap();
            assert!((v - c(4.0 * p)).abs() < TOL);
        }
        let ch = params(6.0, 0.5, 0.0);
        assert!(ub_cgrc_exact(&ch).unwrap() <= ub_weak_enlarged(&ch).unwrap() + 1e-12);
        assert!(ub_cgrc_exact(&params(6.0, 1.5, 0.0)).is_err());
    }

    #[test]
    fn cgrc_exact_matches_brute_force() {
        for (p, a) in [(6.0, 0.5), (1e3, 0.01), (50.0, 0.3), (1e6, 0.9), (2.0, 0.05)] {
            let brute = cgrc_brute(p, a);
            let v = ub_cgrc_exact(&params(p, a, 0.0)).unwrap();
            // Brute force samples a grid, so it can only undershoot.
            assert!(v >= brute - 1e-12, "{p} {a}: {v} < {brute}");
            assert!(v - brute < 1e-6, "{p} {a}: {v} vs {brute}");
        }
    }

    #[test]
    fn enlarged_examples() {
        assert!((ub_weak_enlarged(&params(3.0, 0.0, 0.0)).unwrap() - 2.0).abs() < TOL);
        assert!((ub_weak_enlarged(&params(6.0, 1.0, 0.0)).unwrap() - c(24.0)).abs() < TOL);
        assert!(ub_weak_enlarged(&params(6.0, 2.0, 0.0)).is_err());
    }

    #[test]
    fn genie_examples() {
        assert!((ub_genie(&params(3.0, 0.0, 0.0)) - 2.0).abs() < TOL);
        assert!((ub_genie(&params(3.0, 0.0, 1.0)) - 3.0).abs() < TOL);
        assert!((ub_genie(&params(6.0, 0.5, 0.5)) - (0.5 + 5.5f64.log2())).abs() < TOL);
        assert!((ub_genie(&params(0.0, 0.5, 0.7)) - 0.7).abs() < TOL);
    }

    #[test]
    fn strong_examples() {
        assert!((ub_strong(&params(3.0, 1.0, 0.0)).unwrap() - 0.5 * 13f64.log2()).abs() < TOL);
        assert!((ub_strong(&params(3.75, 1.0, 10.0)).unwrap() - 2.0).abs() < TOL);
        assert_eq!(ub_strong(&params(0.0, 2.0, 0.7)).unwrap(), 0.0);
        assert!(ub_strong(&params(3.0, 0.5, 0.0)).is_err());
    }

    #[test]
    fn best_bound_dispatch() {
        let r = best_bound(&params(10.0, 0.5, 0.0));
        assert!(r.best <= r.ub2);
        assert!(r.ub3.is_none() && r.ub1.is_some());

        let ch = params(10.0, 2.0, 0.1);
        let r = best_bound(&ch);
        assert!(r.ub1.is_none());
        assert_eq!(r.best, r.ub2.min(ub_strong(&ch).unwrap()));

        let ch = params(6.0, 1.0, 0.5);
        let r = best_bound(&ch);
        let all = [r.ub1.unwrap(), r.ub_cgrc_exact.unwrap(), r.ub2, r.ub3.unwrap()];
        assert_eq!(r.best, all.into_iter().fold(f64::INFINITY, f64::min));
        // At a = 1 the enlarged weak bound and the strong bound both equal C(4P);
        // the weak family is offered first and keeps the tie.
        assert!((r.best - c(24.0)).abs() < TOL);
        assert_eq!(r.best_label, BoundLabel::CgrcEnlarged);
    }
}
