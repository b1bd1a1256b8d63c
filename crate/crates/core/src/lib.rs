//! Sum-rate analysis of the two-user symmetric Gaussian interference channel
//! in which encoder 1 can send side information to encoder 2 over a noiseless
//! link of capacity `C12`.
//!
//! The crate computes, for any operating point `(P, a, C12)`:
//!
//! * achievable sum-rates: a Han-Kobayashi private/common split combined with
//!   a cooperative codeword in the weak regime ([`weak`]), the simplified
//!   common/cooperative schemes in the strong regime and treating interference
//!   as noise when `aP ≤ 1` ([`strong`]);
//! * upper bounds: the cognitive-radio sum-capacity (exact and enlarged), a
//!   genie-aided bound carrying the `C12` term, and the strong-regime
//!   cut-set/cognitive bound ([`bounds`]);
//! * gap reports and grid sweeps that check every constant-gap claim
//!   ([`gap`]);
//! * the generalized degrees of freedom `d(α, β)` and finite-SNR estimates of
//!   it ([`gdof`]);
//! * a brute-force vertex-enumeration LP over the compound-MAC polytope used
//!   to certify the closed-form sum bounds ([`oracle`]).
//!
//! All rates are in bits per real dimension, logarithms are base 2 and
//! `C(x) = ½·log₂(1 + x)`.
//!
//! ```
//! use icup::{ChannelParams, gap::gap_report};
//!
//! let params = ChannelParams::new(6.0, 1.0, 0.5).unwrap();
//! let report = gap_report(&params, None).unwrap();
//! assert!(report.gap >= -1e-9 && report.gap <= 2.0);
//! ```

pub mod bounds;
pub mod channel;
pub mod cli;
pub mod error;
pub mod format;
pub mod gap;
pub mod gdof;
pub mod grid;
pub mod oracle;
pub mod strong;
pub mod weak;

pub use channel::{cap, classify, derive, ChannelParams, DerivedParams, Regime};
pub use error::{Error, Result};
pub use strong::SchemeLabel;
