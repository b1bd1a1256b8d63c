//! Strong-interference schemes (no private codebook), the large-`C12`
//! capacity shortcut, and treating interference as noise when `aP ≤ 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channel::{classify, gauss_cap, ChannelParams, Regime};
use crate::error::{Error, Result};

/// Names the scheme behind an achievable rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SchemeLabel {
    /// All power on the cooperative codeword (`P ≤ 1 < a`).
    FullCoopOnly,
    /// Common codewords only (`1 < a ≤ P`).
    CommonOnly,
    /// Common plus cooperative codewords (`1 < P < a`).
    CommonPlusCoop,
    /// Private messages only, interference treated as noise.
    TreatAsNoise,
    /// Weak-regime universal power allocation.
    UniversalPA,
    /// Weak-regime allocation with `γ = 1`.
    FullCoopPA,
    /// Weak-regime allocation with numerically optimized `γ`.
    OptimalGamma,
    /// `C12 ≥ C(bP)`: both transmitters beamform the cooperative codeword.
    ExactCapacity,
}

impl SchemeLabel {
    pub const ALL: [SchemeLabel; 8] = [
        SchemeLabel::FullCoopOnly,
        SchemeLabel::CommonOnly,
        SchemeLabel::CommonPlusCoop,
        SchemeLabel::TreatAsNoise,
        SchemeLabel::UniversalPA,
        SchemeLabel::FullCoopPA,
        SchemeLabel::OptimalGamma,
        SchemeLabel::ExactCapacity,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SchemeLabel::FullCoopOnly => "FullCoopOnly",
            SchemeLabel::CommonOnly => "CommonOnly",
            SchemeLabel::CommonPlusCoop => "CommonPlusCoop",
            SchemeLabel::TreatAsNoise => "TreatAsNoise",
            SchemeLabel::UniversalPA => "UniversalPA",
            SchemeLabel::FullCoopPA => "FullCoopPA",
            SchemeLabel::OptimalGamma => "OptimalGamma",
            SchemeLabel::ExactCapacity => "ExactCapacity",
        }
    }

    /// True for the labels produced by [`strong_rate`].
    pub fn is_strong(&self) -> bool {
        matches!(
            self,
            SchemeLabel::FullCoopOnly
                | SchemeLabel::CommonOnly
                | SchemeLabel::CommonPlusCoop
                | SchemeLabel::ExactCapacity
        )
    }
}

impl fmt::Display for SchemeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SchemeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeLabel::ALL
            .into_iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown scheme '{s}'")))
    }
}

/// `C12 ≥ C(bP)`.
pub fn capacity_condition_holds(params: &ChannelParams) -> bool {
    params.c12() >= gauss_cap(params.coherent_gain() * params.p())
}

/// Achievable sum-rate in the strong regime (`a > 1`, `aP > 1`).
///
/// The exact-capacity branch takes precedence over the per-case schemes.
pub fn strong_rate(params: &ChannelParams) -> Result<(f64, SchemeLabel)> {
    let regime = classify(params);
    if !regime.is_strong() {
        return Err(Error::Precondition(format!(
            "strong-regime scheme requested in regime {regime} (P = {}, a = {})",
            params.p(),
            params.a()
        )));
    }
    let (p, a, c12) = (params.p(), params.a(), params.c12());
    let b = params.coherent_gain();
    let beamformed = gauss_cap(b * p);
    if c12 >= beamformed {
        return Ok((beamformed, SchemeLabel::ExactCapacity));
    }
    Ok(match regime {
        Regime::StrongCase1 => (c12.min(beamformed), SchemeLabel::FullCoopOnly),
        Regime::StrongCase2 => (gauss_cap((1.0 + a) * p), SchemeLabel::CommonOnly),
        Regime::StrongCase3 => {
            // P_w = P − 1, P_V = b: v and the other user's w are decoded
            // first with the own common codeword as noise.
            let own = gauss_cap(p - 1.0);
            let coop = c12.min(gauss_cap(b / p));
            let joint = gauss_cap((a * p + 1.0 + 2.0 * a.sqrt()) / p);
            ((coop + own).min(joint) + own, SchemeLabel::CommonPlusCoop)
        }
        Regime::NoiseLimited | Regime::Weak => unreachable!(),
    })
}

/// `log₂(1 + P/(1 + aP))`: both users decode their own message treating the
/// other's signal as noise; the cooperative link is unused.
pub fn noise_limited_rate(params: &ChannelParams) -> f64 {
    let (p, a) = (params.p(), params.a());
    (p / (1.0 + a * p)).ln_1p() / std::f64::consts::LN_2
}
