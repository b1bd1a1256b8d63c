//! Channel parameterization, the Gaussian capacity function and regime
//! classification.
//!
//! The channel in standard form is
//!
//! ```text
//! y1 = x1 + √a·x2 + z1
//! y2 = √a·x1 + x2 + z2,     z_i ~ N(0, 1),  E|x_i|² ≤ P
//! ```
//!
//! with a noiseless link of capacity `C12` from encoder 1 to encoder 2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(x) = ½·log₂(1 + x)`, the capacity of a real AWGN channel at SNR `x`.
pub fn cap(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("cap: expected finite x >= 0, got {x}")));
    }
    Ok(gauss_cap(x))
}

/// Unchecked [`cap`] for internal use on arguments that are nonnegative by
/// construction.
#[inline]
pub(crate) fn gauss_cap(x: f64) -> f64 {
    debug_assert!(x >= 0.0 || x.abs() < 1e-12, "gauss_cap({x})");
    0.5 * x.max(0.0).ln_1p() / std::f64::consts::LN_2
}

/// The full channel description: per-transmitter power `P`, interference
/// gain `a` and cooperative-link capacity `C12` (bits per channel use).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    p: f64,
    a: f64,
    c12: f64,
}

impl ChannelParams {
    pub fn new(p: f64, a: f64, c12: f64) -> Result<Self> {
        for (name, v) in [("P", p), ("a", a), ("C12", c12)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Domain(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        Ok(Self { p, a, c12 })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn c12(&self) -> f64 {
        self.c12
    }

    /// Same channel with a different cooperative-link capacity.
    pub fn with_c12(&self, c12: f64) -> Result<Self> {
        Self::new(self.p, self.a, c12)
    }

    /// `b = (1 + √a)²`, the coherent combining gain of the cooperative
    /// codeword sent from both transmitters.
    pub fn coherent_gain(&self) -> f64 {
        let s = 1.0 + self.a.sqrt();
        s * s
    }

    /// Interference-to-noise ratio `a·P`.
    pub fn inr(&self) -> f64 {
        self.a * self.p
    }
}

/// Quantities derived from [`ChannelParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedParams {
    pub snr: f64,
    pub inr: f64,
    /// `log(INR)/log(SNR)`; `None` when `P ≤ 1` (or `INR = 0`).
    pub alpha: Option<f64>,
    /// `C12 / C(P)`; `None` when `P = 0`.
    pub beta: Option<f64>,
    pub b: f64,
}

pub fn derive(params: &ChannelParams) -> DerivedParams {
    let snr = params.p();
    let inr = params.inr();
    let alpha = (snr > 1.0 && inr > 0.0).then(|| inr.ln() / snr.ln());
    let cp = gauss_cap(snr);
    let beta = (cp > 0.0).then(|| params.c12() / cp);
    DerivedParams { snr, inr, alpha, beta, b: params.coherent_gain() }
}

/// Operating regime. Drives which scheme and which bounds apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `a·P ≤ 1`.
    NoiseLimited,
    /// `a ≤ 1` and `a·P > 1`.
    Weak,
    /// `P ≤ 1 < a`.
    StrongCase1,
    /// `1 < a ≤ P`.
    StrongCase2,
    /// `1 < P < a`.
    StrongCase3,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::NoiseLimited => "NoiseLimited",
            Regime::Weak => "Weak",
            Regime::StrongCase1 => "StrongCase1",
            Regime::StrongCase2 => "StrongCase2",
            Regime::StrongCase3 => "StrongCase3",
        }
    }

    pub fn is_strong(&self) -> bool {
        matches!(self, Regime::StrongCase1 | Regime::StrongCase2 | Regime::StrongCase3)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classify an operating point. Ties resolve in the order
/// NoiseLimited > Weak > StrongCase1 > StrongCase2 > StrongCase3.
pub fn classify(params: &ChannelParams) -> Regime {
    let (p, a) = (params.p(), params.a());
    if a * p <= 1.0 {
        Regime::NoiseLimited
    } else if a <= 1.0 {
        Regime::Weak
    } else if p <= 1.0 {
        Regime::StrongCase1
    } else if a <= p {
        Regime::StrongCase2
    } else {
        Regime::StrongCase3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: f64, a: f64, c12: f64) -> ChannelParams {
        ChannelParams::new(p, a, c12).unwrap()
    }

    #[test]
    fn cap_values() {
        assert_eq!(cap(0.0).unwrap(), 0.0);
        assert!((cap(3.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((cap(15.0).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn cap_rejects_bad_input() {
        assert!(matches!(cap(-1.0), Err(Error::Domain(_))));
        assert!(cap(f64::NAN).is_err());
        assert!(cap(f64::INFINITY).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(ChannelParams::new(-1.0, 1.0, 0.0).is_err());
        assert!(ChannelParams::new(1.0, -0.1, 0.0).is_err());
        assert!(ChannelParams::new(1.0, 1.0, f64::INFINITY).is_err());
        assert!(ChannelParams::new(0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn derive_examples() {
        let d = derive(&params(100.0, 0.1, 0.0));
        assert!((d.inr - 10.0).abs() < 1e-12);
        assert!((d.alpha.unwrap() - 0.5).abs() < 1e-12);
        assert!((d.b - (1.0 + 0.1f64.sqrt()).powi(2)).abs() < 1e-15);
        assert_eq!(d.beta, Some(0.0));

        assert_eq!(derive(&params(6.0, 1.0, 0.0)).b, 4.0);

        let d = derive(&params(6.0, 0.0, 0.0));
        assert_eq!(d.b, 1.0);
        assert_eq!(d.inr, 0.0);
    }

    #[test]
    fn alpha_undefined_below_unit_snr() {
        assert_eq!(derive(&params(1.0, 5.0, 0.0)).alpha, None);
        assert_eq!(derive(&params(0.5, 5.0, 0.0)).alpha, None);
    }

    #[test]
    fn beta_is_c12_over_cap_p() {
        let d = derive(&params(3.0, 1.0, 0.5));
        assert!((d.beta.unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&params(10.0, 0.05, 0.0)), Regime::NoiseLimited);
        assert_eq!(classify(&params(10.0, 0.5, 0.0)), Regime::Weak);
        assert_eq!(classify(&params(10.0, 2.0, 0.0)), Regime::StrongCase2);
        assert_eq!(classify(&params(0.5, 4.0, 0.0)), Regime::StrongCase1);
        assert_eq!(classify(&params(2.0, 8.0, 0.0)), Regime::StrongCase3);
    }

    #[test]
    fn classify_ties() {
        // aP = 1
        assert_eq!(classify(&params(4.0, 0.25, 0.0)), Regime::NoiseLimited);
        // a = 1, aP > 1
        assert_eq!(classify(&params(4.0, 1.0, 0.0)), Regime::Weak);
        // a = P in the strong regime
        assert_eq!(classify(&params(3.0, 3.0, 0.0)), Regime::StrongCase2);
        // P = 1 < a
        assert_eq!(classify(&params(1.0, 3.0, 0.0)), Regime::StrongCase1);
        // zero power / zero gain
        assert_eq!(classify(&params(0.0, 3.0, 0.0)), Regime::NoiseLimited);
        assert_eq!(classify(&params(1e9, 0.0, 0.0)), Regime::NoiseLimited);
    }
}
