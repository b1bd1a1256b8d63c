//! Brute-force LP over the compound-MAC rate polytope in
//! `(R_w1, R_w2, R_v)`.
//!
//! Used as an independent check of the closed-form `min(R_B1, R_B2, R_B3)`:
//! every triple of constraint planes is intersected, infeasible points are
//! dropped and the objective is evaluated on what remains. With 17
//! constraints that is at most 680 3×3 solves.

use serde::Serialize;

use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::weak::{mac_region, PowerAllocation};

/// `coeffs · (R_w1, R_w2, R_v) ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearConstraint {
    pub coeffs: [f64; 3],
    pub rhs: f64,
}

impl LinearConstraint {
    pub fn new(coeffs: [f64; 3], rhs: f64) -> Self {
        Self { coeffs, rhs }
    }

    pub fn slack(&self, x: &[f64; 3]) -> f64 {
        self.rhs - dot(&self.coeffs, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolytopeResult {
    pub optimum: f64,
    /// Maximizing `(R_w1, R_w2, R_v)`.
    pub vertex: [f64; 3],
}

const FEAS_TOL: f64 = 1e-9;
const SINGULAR_TOL: f64 = 1e-12;

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Both receivers' MAC constraints (seven each, duplicates kept) followed by
/// the three nonnegativity constraints.
pub fn build_constraints(pa: &PowerAllocation, params: &ChannelParams) -> Vec<LinearConstraint> {
    let m = mac_region(pa, params);
    let mut out = Vec::with_capacity(17);
    // receiver 1 owns w1 (index 0), receiver 2 owns w2 (index 1)
    for (own, cross) in [(0usize, 1usize), (1, 0)] {
        let mut unit = |idx: &[usize], rhs: f64| {
            let mut c = [0.0; 3];
            for &i in idx {
                c[i] = 1.0;
            }
            out.push(LinearConstraint::new(c, rhs));
        };
        unit(&[2], m.coop);
        unit(&[own], m.own_common);
        unit(&[cross], m.cross_common);
        unit(&[own, cross], m.both_common);
        unit(&[own, 2], m.own_common_coop);
        unit(&[cross, 2], m.cross_common_coop);
        unit(&[own, cross, 2], m.all);
    }
    for i in 0..3 {
        let mut c = [0.0; 3];
        c[i] = -1.0;
        out.push(LinearConstraint::new(c, 0.0));
    }
    out
}

/// Solve the 3×3 system `rows · x = rhs` by Cramer's rule.
fn solve3(rows: [&LinearConstraint; 3]) -> Option<[f64; 3]> {
    let m = [rows[0].coeffs, rows[1].coeffs, rows[2].coeffs];
    let det3 = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let det = det3(&m);
    if det.abs() < SINGULAR_TOL {
        return None;
    }
    let mut x = [0.0; 3];
    for (col, xi) in x.iter_mut().enumerate() {
        let mut mc = m;
        for (r, row) in mc.iter_mut().enumerate() {
            row[col] = rows[r].rhs;
        }
        *xi = det3(&mc) / det;
    }
    Some(x)
}

fn lex_less(a: &[f64; 3], b: &[f64; 3]) -> bool {
    a.partial_cmp(b) == Some(std::cmp::Ordering::Less)
}

/// Maximize `objective · x` over the polytope by vertex enumeration.
///
/// Ties (within 1e-12) go to the lexicographically smallest vertex.
pub fn maximize(constraints: &[LinearConstraint], objective: [f64; 3]) -> Result<PolytopeResult> {
    if constraints.len() < 3 {
        return Err(Error::Domain(format!(
            "need at least 3 constraints, got {}",
            constraints.len()
        )));
    }
    let n = constraints.len();
    let mut best: Option<PolytopeResult> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let Some(x) = solve3([&constraints[i], &constraints[j], &constraints[k]]) else {
                    continue;
                };
                if constraints.iter().any(|c| c.slack(&x) < -FEAS_TOL * (1.0 + c.rhs.abs())) {
                    continue;
                }
                let value = dot(&objective, &x);
                let better = match &best {
                    None => true,
                    Some(b) => {
                        value > b.optimum + 1e-12
                            || ((value - b.optimum).abs() <= 1e-12 && lex_less(&x, &b.vertex))
                    }
                };
                if better {
                    best = Some(PolytopeResult { optimum: value, vertex: x });
                }
            }
        }
    }
    best.ok_or_else(|| Error::Domain("empty feasible set".into()))
}

/// LP maximum of `R_w1 + R_w2 + R_v` for a power allocation.
pub fn max_common_coop_sum(pa: &PowerAllocation, params: &ChannelParams) -> f64 {
    maximize(&build_constraints(pa, params), [1.0, 1.0, 1.0])
        .expect("origin is always feasible")
        .optimum
}
