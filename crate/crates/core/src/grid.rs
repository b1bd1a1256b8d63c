//! Parameter axes and the preset verification grids.

use std::str::FromStr;

use serde::Serialize;

use crate::channel::{gauss_cap, ChannelParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scale {
    Linear,
    Log,
}

/// `count` points from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Axis {
    pub fn new(min: f64, max: f64, count: usize, scale: Scale) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::Usage(format!("axis bounds must be finite: {min}..{max}")));
        }
        if min > max {
            return Err(Error::Usage(format!("axis min {min} exceeds max {max}")));
        }
        if count == 0 {
            return Err(Error::Usage("axis count must be >= 1".into()));
        }
        if scale == Scale::Log && min <= 0.0 {
            return Err(Error::Usage(format!("log axis requires min > 0, got {min}")));
        }
        if count == 1 && min != max {
            return Err(Error::Usage("a single-point axis needs min == max".into()));
        }
        Ok(Self { min, max, count, scale })
    }

    pub fn single(v: f64) -> Self {
        Self { min: v, max: v, count: 1, scale: Scale::Linear }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let n = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let t = i as f64 / n;
                match self.scale {
                    Scale::Linear => self.min + t * (self.max - self.min),
                    Scale::Log => {
                        let (l0, l1) = (self.min.log10(), self.max.log10());
                        10f64.powf(l0 + t * (l1 - l0))
                    }
                }
            })
            .collect()
    }
}

/// Parses `VALUE` or `MIN:MAX:COUNT[:lin|log]`.
impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Usage(format!("'{t}' is not a number in range '{s}'")))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => {
                let v = num(v)?;
                Axis::new(v, v, 1, Scale::Linear)
            }
            [lo, hi, n] | [lo, hi, n, _] => {
                let count = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Usage(format!("bad count '{n}' in range '{s}'")))?;
                let scale = match parts.get(3).map(|t| t.trim()) {
                    None | Some("lin") | Some("linear") => Scale::Linear,
                    Some("log") => Scale::Log,
                    Some(other) => return Err(Error::Usage(format!("unknown scale '{other}'"))),
                };
                Axis::new(num(lo)?, num(hi)?, count, scale)
            }
            _ => Err(Error::Usage(format!("range '{s}' must be VALUE or MIN:MAX:COUNT[:SCALE]"))),
        }
    }
}

/// Fixed cooperative-link capacities used by the preset grids.
pub const PRESET_C12: [f64; 11] = [0.0, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0];

/// `C(b(aP − 1)/(2a + 1))`, the link capacity at which full cooperation
/// stops being limited by `C12`.
pub fn full_coop_threshold(p: f64, a: f64) -> f64 {
    let b = (1.0 + a.sqrt()).powi(2);
    gauss_cap(b * (a * p - 1.0).max(0.0) / (2.0 * a + 1.0))
}

/// Named preset grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// P: 65 log points on [1e-2, 1e6]; a: 57 log points on [1e-3, 1e4].
    Default,
    /// P: 17 log points on [1e-2, 1e6]; a: 15 log points on [1e-3, 1e4].
    Coarse,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Preset::Default),
            "coarse" => Ok(Preset::Coarse),
            other => Err(Error::Usage(format!("unknown grid preset '{other}'"))),
        }
    }
}

impl Preset {
    pub fn axes(&self) -> (Axis, Axis) {
        let (np, na) = match self {
            Preset::Default => (65, 57),
            Preset::Coarse => (17, 15),
        };
        (
            Axis::new(1e-2, 1e6, np, Scale::Log).expect("valid preset"),
            Axis::new(1e-3, 1e4, na, Scale::Log).expect("valid preset"),
        )
    }

    /// Grid points in `P`-outer, `a`-middle, `C12`-inner order. Besides the
    /// fixed [`PRESET_C12`] values each `(P, a)` pair gets `1.01·C(bP)` and,
    /// when `aP > 1`, the full-cooperation threshold.
    pub fn points(&self) -> Vec<ChannelParams> {
        let (pa, aa) = self.axes();
        let mut out = Vec::new();
        for &p in &pa.values() {
            for &a in &aa.values() {
                out.extend(c12_values(p, a).into_iter().map(|c| {
                    ChannelParams::new(p, a, c).expect("grid values are valid")
                }));
            }
        }
        out
    }
}

fn c12_values(p: f64, a: f64) -> Vec<f64> {
    let b = (1.0 + a.sqrt()).powi(2);
    let mut v = PRESET_C12.to_vec();
    v.push(1.01 * gauss_cap(b * p));
    if a * p > 1.0 {
        v.push(full_coop_threshold(p, a));
    }
    v
}

/// Cartesian product of three axes in `P`-outer, `a`-middle, `C12`-inner
/// order.
pub fn product(p: &Axis, a: &Axis, c12: &Axis) -> Result<Vec<ChannelParams>> {
    let (pv, av, cv) = (p.values(), a.values(), c12.values());
    let mut out = Vec::with_capacity(pv.len() * av.len() * cv.len());
    for &pp in &pv {
        for &aa in &av {
            for &cc in &cv {
                out.push(ChannelParams::new(pp, aa, cc)?);
            }
        }
    }
    Ok(out)
}
