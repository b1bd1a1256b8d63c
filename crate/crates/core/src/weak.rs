//! Weak-interference achievability: a Han-Kobayashi private/common split
//! combined with a cooperative codeword relayed over the `C12` link.
//!
//! Each transmitter sends `x_i = √P_u·u_i + √P_w·w_i + √P_v·v`. The private
//! power is pinned at `P_u = 1/a` so that the interfering private signal
//! arrives at the noise floor. Both receivers jointly decode `(w_1, w_2, v)`
//! treating the private signals as noise, then decode their own `u_i`. The
//! cooperative codeword adds coherently, arriving with power
//! `P_V = (1 + √a)²·P_v`.

use serde::Serialize;

use crate::channel::{gauss_cap, ChannelParams};
use crate::error::{Error, Result};

/// Relative slack accepted on `a·P ≥ 1` so that `P = 1/a` computed in
/// floating point is not rejected.
const INR_SLACK: f64 = 1e-12;

/// Per-transmitter power split, identical for both users.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerAllocation {
    /// Private codeword power `P_u`.
    pub private: f64,
    /// Common codeword power `P_w`.
    pub common: f64,
    /// Cooperative codeword power per transmitter `P_v`.
    pub coop: f64,
    /// Received cooperative power `P_V = (1 + √a)²·P_v`.
    pub coop_rx: f64,
}

impl PowerAllocation {
    pub fn total(&self) -> f64 {
        self.private + self.common + self.coop
    }
}

/// Right-hand sides of the seven rate constraints of one compound MAC over
/// the virtual users `(w_i, w_j, v)`; `i` is the receiver's own user.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MacRegion {
    pub coop: f64,
    pub own_common: f64,
    pub cross_common: f64,
    pub both_common: f64,
    pub own_common_coop: f64,
    pub cross_common_coop: f64,
    pub all: f64,
}

/// The three bounds on `2R_w + R_v` and the auxiliary `R̃_w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumBounds {
    pub r_b1: f64,
    pub r_b2: f64,
    pub r_b3: f64,
    pub r_tilde_w: f64,
}

impl SumBounds {
    pub fn min(&self) -> f64 {
        self.r_b1.min(self.r_b2).min(self.r_b3)
    }
}

/// Rate terms of the universal power allocation. `r6` and `r7` are the
/// combinations that never bind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UniversalRateTerms {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub r4: f64,
    pub r5: f64,
    pub r6: f64,
    pub r7: f64,
    pub r_min: f64,
    /// `2·C(P_u/2)`, the private-message contribution of both users.
    pub private_rate: f64,
}

impl UniversalRateTerms {
    /// Achieved sum-rate `min(r1..r5) + 2·C(P_u/2)`.
    pub fn sum_rate(&self) -> f64 {
        self.r_min + self.private_rate
    }

    pub fn terms(&self) -> [f64; 7] {
        [self.r1, self.r2, self.r3, self.r4, self.r5, self.r6, self.r7]
    }
}

/// Power left after the private message: `P − 1/a`.
fn residual_power(params: &ChannelParams) -> Result<f64> {
    let (p, a) = (params.p(), params.a());
    if a <= 0.0 {
        return Err(Error::Precondition(
            "private power 1/a is undefined for a = 0".into(),
        ));
    }
    if a * p < 1.0 - INR_SLACK {
        return Err(Error::Precondition(format!(
            "a·P = {} < 1: private power 1/a exceeds the budget P = {p}",
            a * p
        )));
    }
    Ok((p - 1.0 / a).max(0.0))
}

/// Power split parameterized by the cooperative fraction `γ` of the power
/// left after the private message.
pub fn gamma_pa(params: &ChannelParams, gamma: f64) -> Result<PowerAllocation> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::Domain(format!("gamma must lie in [0, 1], got {gamma}")));
    }
    let rest = residual_power(params)?;
    let coop = gamma * rest;
    Ok(PowerAllocation {
        private: 1.0 / params.a(),
        common: (1.0 - gamma) * rest,
        coop,
        coop_rx: params.coherent_gain() * coop,
    })
}

/// The universal allocation: common power equal to the received cooperative
/// power, `P_w = P_V = (P − 1/a) / (1 + 1/b)`.
pub fn universal_pa(params: &ChannelParams) -> Result<PowerAllocation> {
    let rest = residual_power(params)?;
    let b = params.coherent_gain();
    let common = rest / (1.0 + 1.0 / b);
    Ok(PowerAllocation { private: 1.0 / params.a(), common, coop: common / b, coop_rx: common })
}

/// `γ` at which [`gamma_pa`] reproduces [`universal_pa`].
pub fn universal_gamma(params: &ChannelParams) -> f64 {
    1.0 / (1.0 + params.coherent_gain())
}

/// The seven constraints of one receiver's compound MAC.
pub fn mac_region(pa: &PowerAllocation, params: &ChannelParams) -> MacRegion {
    let a = params.a();
    let d = pa.private + 2.0;
    let w = pa.common;
    let v = pa.coop_rx;
    MacRegion {
        coop: gauss_cap(v / d).min(params.c12()),
        own_common: gauss_cap(w / d),
        cross_common: gauss_cap(a * w / d),
        both_common: gauss_cap(w * (1.0 + a) / d),
        own_common_coop: gauss_cap((w + v) / d),
        cross_common_coop: gauss_cap((a * w + v) / d),
        all: gauss_cap((w + a * w + v) / d),
    }
}

/// The three ways of bounding `2R_w + R_v` from the MAC constraints with
/// `R_w1 = R_w2`.
pub fn sum_bounds(pa: &PowerAllocation, params: &ChannelParams) -> SumBounds {
    let a = params.a();
    let d = pa.private + 2.0;
    let w = pa.common;
    let v = pa.coop_rx;
    let r_tilde_w = gauss_cap(a * w / d).min(0.5 * gauss_cap(w * (1.0 + a) / d));
    SumBounds {
        r_b1: gauss_cap((w * (1.0 + a) + v) / d),
        r_b2: 2.0 * r_tilde_w + gauss_cap(v / d).min(params.c12()),
        r_b3: gauss_cap((a * w + v) / d) + r_tilde_w,
        r_tilde_w,
    }
}

/// Achievable sum-rate `2·C(P_u/2) + min(R_B1, R_B2, R_B3)` at a fixed `γ`.
pub fn weak_sum_rate(params: &ChannelParams, gamma: f64) -> Result<f64> {
    let pa = gamma_pa(params, gamma)?;
    Ok(rate_for(&pa, params))
}

fn rate_for(pa: &PowerAllocation, params: &ChannelParams) -> f64 {
    2.0 * gauss_cap(pa.private / 2.0) + sum_bounds(pa, params).min()
}

pub fn universal_rates(params: &ChannelParams) -> Result<UniversalRateTerms> {
    let pa = universal_pa(params)?;
    let a = params.a();
    let c12 = params.c12();
    let x = pa.common / (pa.private + 2.0);
    let c_a = gauss_cap(a * x);
    let c_1a = gauss_cap((1.0 + a) * x);
    let c_1 = gauss_cap(x);
    let r1 = gauss_cap((2.0 + a) * x);
    let r2 = 2.0 * c_a + c12;
    let r3 = c_1a + c12;
    let r4 = c_1a + c_a;
    let r5 = 1.5 * c_1a;
    Ok(UniversalRateTerms {
        r1,
        r2,
        r3,
        r4,
        r5,
        r6: 2.0 * c_a + c_1,
        r7: c_1a + c_1,
        r_min: r1.min(r2).min(r3).min(r4).min(r5),
        private_rate: 2.0 * gauss_cap(pa.private / 2.0),
    })
}

/// Sum-rate when all of `P − 1/a` goes to the cooperative codeword.
pub fn full_coop_rate(params: &ChannelParams) -> Result<f64> {
    residual_power(params)?;
    let a = params.a();
    let b = params.coherent_gain();
    let inr_excess = (a * params.p() - 1.0).max(0.0);
    Ok(params.c12().min(gauss_cap(b * inr_excess / (2.0 * a + 1.0)))
        + 2.0 * gauss_cap(1.0 / (2.0 * a)))
}

const GAMMA_GRID: usize = 2001;
const TRISECTION_ROUNDS: usize = 3;

/// Maximize [`weak_sum_rate`] over `γ ∈ [0, 1]`.
///
/// Deterministic: a 2001-point grid, then three rounds of trisection on the
/// bracket around the best grid point. The endpoints and the universal `γ`
/// are always among the candidates.
pub fn optimize_gamma(params: &ChannelParams) -> Result<(f64, f64)> {
    residual_power(params)?;
    let eval = |g: f64| weak_sum_rate(params, g).expect("gamma in range");

    let mut best = (0.0, eval(0.0));
    let consider = |g: f64, r: f64, best: &mut (f64, f64)| {
        if r > best.1 {
            *best = (g, r);
        }
    };

    let step = 1.0 / (GAMMA_GRID - 1) as f64;
    let mut best_idx = 0;
    for i in 1..GAMMA_GRID {
        let g = i as f64 * step;
        let r = eval(g);
        if r > best.1 {
            best_idx = i;
        }
        consider(g, r, &mut best);
    }
    let g_univ = universal_gamma(params);
    consider(g_univ, eval(g_univ), &mut best);

    let mut lo = best_idx.saturating_sub(1) as f64 * step;
    let mut hi = ((best_idx + 1).min(GAMMA_GRID - 1)) as f64 * step;
    for _ in 0..TRISECTION_ROUNDS {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        let (r1, r2) = (eval(m1), eval(m2));
        consider(m1, r1, &mut best);
        consider(m2, r2, &mut best);
        if r1 < r2 {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    Ok(best)
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

    #[test]
    fn gamma_pa_examples() {
        let ch = params(6.0, 1.0, 0.0);
        let pa = gamma_pa(&ch, 0.0).unwrap();
        assert_eq!((pa.private, pa.common, pa.coop), (1.0, 5.0, 0.0));
        let pa = gamma_pa(&ch, 1.0).unwrap();
        assert_eq!((pa.private, pa.common, pa.coop, pa.coop_rx), (1.0, 0.0, 5.0, 20.0));
        let pa = gamma_pa(&ch, 0.4).unwrap();
        assert!((pa.common - 3.0).abs() < 1e-12);
        assert!((pa.coop - 2.0).abs() < 1e-12);
        assert!((pa.coop_rx - 8.0).abs() < 1e-12);
    }

    #[test]
    fn gamma_pa_errors() {
        assert!(matches!(gamma_pa(&params(1.0, 0.5, 0.0), 0.5), Err(Error::Precondition(_))));
        assert!(matches!(gamma_pa(&params(6.0, 0.0, 0.0), 0.5), Err(Error::Precondition(_))));
        assert!(matches!(gamma_pa(&params(6.0, 1.0, 0.0), 1.5), Err(Error::Domain(_))));
        assert!(matches!(gamma_pa(&params(6.0, 1.0, 0.0), -0.1), Err(Error::Domain(_))));
    }

    #[test]
    fn universal_pa_examples() {
        let pa = universal_pa(&params(6.0, 1.0, 0.0)).unwrap();
        assert!((pa.private - 1.0).abs() < 1e-15);
        assert!((pa.common - 4.0).abs() < 1e-12);
        assert!((pa.coop - 1.0).abs() < 1e-12);
        assert!((pa.coop_rx - 4.0).abs() < 1e-12);

        let pa = universal_pa(&params(11.0, 1.0, 0.0)).unwrap();
        assert!((pa.common - 8.0).abs() < 1e-12);
        assert!((pa.coop - 2.0).abs() < 1e-12);

        for a in [0.01, 0.3, 1.0] {
            let pa = universal_pa(&params(1.0 / a, a, 0.0)).unwrap();
            assert!((pa.private - 1.0 / a).abs() < 1e-9);
            assert!(pa.common.abs() < 1e-9 && pa.coop.abs() < 1e-9);
        }
    }

    #[test]
    fn universal_matches_gamma_pa() {
        let ch = params(37.0, 0.3, 1.0);
        let u = universal_pa(&ch).unwrap();
        let g = gamma_pa(&ch, universal_gamma(&ch)).unwrap();
        assert!((u.common - g.common).abs() < 1e-12 * ch.p());
        assert!((u.coop - g.coop).abs() < 1e-12 * ch.p());
        assert_eq!(u.common, u.coop_rx);
    }

    #[test]
    fn mac_region_examples() {
        let ch = params(6.0, 1.0, 10.0);
        let pa = PowerAllocation { private: 1.0, common: 0.0, coop: 1.0, coop_rx: 4.0 };
        let m = mac_region(&pa, &ch);
        assert!((m.coop - c(4.0 / 3.0)).abs() < TOL);
        assert_eq!(m.own_common, 0.0);
        assert_eq!(m.cross_common, 0.0);
        assert_eq!(m.both_common, 0.0);

        let ch = params(6.0, 1.0, 0.5);
        let pa = universal_pa(&ch).unwrap();
        let m = mac_region(&pa, &ch);
        assert!(c(4.0 / 3.0) > 0.5);
        assert!((m.coop - 0.5).abs() < TOL);
        assert!((m.all - c(4.0)).abs() < TOL);
    }

    #[test]
    fn sum_bounds_examples() {
        let ch = params(6.0, 1.0, 0.3);
        let pa = PowerAllocation { private: 1.0, common: 0.0, coop: 1.0, coop_rx: 4.0 };
        let s = sum_bounds(&pa, &ch);
        assert!((s.r_b1 - c(4.0 / 3.0)).abs() < TOL);
        assert!((s.r_b2 - c(4.0 / 3.0).min(0.3)).abs() < TOL);
        assert_eq!(s.r_tilde_w, 0.0);

        let ch = params(6.0, 1.0, 1e6);
        let pa = universal_pa(&ch).unwrap();
        assert!((sum_bounds(&pa, &ch).r_b1 - c(4.0)).abs() < TOL);

        let ch = params(6.0, 0.5, 0.0);
        let pa = PowerAllocation { private: 2.0, common: 4.0, coop: 0.0, coop_rx: 0.0 };
        let s = sum_bounds(&pa, &ch);
        assert!((s.r_b2 - 2.0 * s.r_tilde_w).abs() < TOL);
        assert!((s.r_b3 - (c(0.5 * 4.0 / 4.0) + s.r_tilde_w)).abs() < TOL);
    }

    #[test]
    fn weak_sum_rate_examples() {
        let a = 0.25;
        let ch = params(1.0 / a, a, 3.0);
        for g in [0.0, 0.3, 1.0] {
            assert!((weak_sum_rate(&ch, g).unwrap() - 2.0 * c(2.0)).abs() < TOL);
        }

        // γ = 0, C12 = 0: brute-force the three bounds with P_u = 1, P_w = 5.
        let ch = params(6.0, 1.0, 0.0);
        let x = 5.0 / 3.0;
        let rt = c(x).min(0.5 * c(2.0 * x));
        let expect = 2.0 * c(0.5) + c(2.0 * x).min(2.0 * rt).min(c(x) + rt);
        assert!((weak_sum_rate(&ch, 0.0).unwrap() - expect).abs() < TOL);

        let ch = params(6.0, 1.0, 1e6);
        let expect = 2.0 * c(0.5) + c(20.0 / 3.0);
        assert!((weak_sum_rate(&ch, 1.0).unwrap() - expect).abs() < TOL);
    }

    #[test]
    fn universal_rates_examples() {
        let a = 0.5;
        let u = universal_rates(&params(1.0 / a, a, 0.0)).unwrap();
        assert!(u.r_min.abs() < TOL);
        let u = universal_rates(&params(1.0 / a, a, 0.7)).unwrap();
        assert!((u.r2 - 0.7).abs() < TOL && (u.r3 - 0.7).abs() < TOL);

        let u = universal_rates(&params(6.0, 1.0, 0.5)).unwrap();
        assert!((u.r3 - (c(8.0 / 3.0) + 0.5)).abs() < TOL);
        assert!(u.r_min <= u.r6 && u.r_min <= u.r7);
    }

    #[test]
    fn universal_rate_equals_gamma_rate() {
        for (p, a, c12) in [(6.0, 1.0, 0.5), (1e4, 0.01, 2.0), (50.0, 0.2, 0.0)] {
            let ch = params(p, a, c12);
            let u = universal_rates(&ch).unwrap().sum_rate();
            let g = weak_sum_rate(&ch, universal_gamma(&ch)).unwrap();
            assert!((u - g).abs() < TOL, "{p} {a} {c12}: {u} vs {g}");
        }
    }

    #[test]
    fn full_coop_examples() {
        let ch = params(20.0, 0.3, 0.0);
        assert!((full_coop_rate(&ch).unwrap() - 2.0 * c(1.0 / 0.6)).abs() < TOL);

        let ch = params(6.0, 1.0, 100.0);
        let expect = c(20.0 / 3.0) + 2.0 * c(0.5);
        assert!((full_coop_rate(&ch).unwrap() - expect).abs() < TOL);

        let a = 0.4;
        let ch = params(1.0 / a, a, 5.0);
        assert!((full_coop_rate(&ch).unwrap() - 2.0 * c(1.0 / (2.0 * a))).abs() < TOL);
    }

    #[test]
    fn full_coop_is_gamma_one() {
        for (p, a, c12) in [(6.0, 1.0, 0.5), (1e4, 0.01, 2.0), (50.0, 0.2, 10.0)] {
            let ch = params(p, a, c12);
            let fc = full_coop_rate(&ch).unwrap();
            assert!((fc - weak_sum_rate(&ch, 1.0).unwrap()).abs() < TOL);
        }
    }

    #[test]
    fn optimize_gamma_examples() {
        let ch = params(6.0, 1.0, 0.0);
        let (_, r) = optimize_gamma(&ch).unwrap();
        assert!(r >= weak_sum_rate(&ch, 0.0).unwrap() - TOL);

        let ch = params(6.0, 1.0, 10.0);
        let (g, r) = optimize_gamma(&ch).unwrap();
        assert!((0.0..=1.0).contains(&g));
        for i in 0..=2000 {
            let gi = i as f64 / 2000.0;
            assert!(r >= weak_sum_rate(&ch, gi).unwrap() - TOL);
        }

        let ch = params(6.0, 1.0, 0.3);
        let (_, r) = optimize_gamma(&ch).unwrap();
        assert!(r >= universal_rates(&ch).unwrap().sum_rate() - TOL);
        assert!(r >= full_coop_rate(&ch).unwrap() - TOL);
    }
}
