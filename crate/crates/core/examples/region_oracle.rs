//! The compound-MAC polytope for the common and cooperative messages,
//! maximized by vertex enumeration and compared with the closed form.

use icup::oracle::{build_constraints, maximize};
use icup::weak::{gamma_pa, sum_bounds, universal_gamma};
use icup::ChannelParams;

fn main() -> icup::Result<()> {
    let params = ChannelParams::new(500.0, 0.4, 1.5)?;
    let gammas = [0.0, 0.25, 0.5, 0.75, 1.0, universal_gamma(&params)];
    println!("P = 500, a = 0.4, C12 = 1.5");
    println!("{:>8} {:>12} {:>12} {:>10}   vertex (R_w1, R_w2, R_v)", "gamma", "LP", "closed", "diff");
    for g in gammas {
        let pa = gamma_pa(&params, g)?;
        let constraints = build_constraints(&pa, &params);
        let lp = maximize(&constraints, [1.0, 1.0, 1.0])?;
        let closed = sum_bounds(&pa, &params).min();
        let [w1, w2, v] = lp.vertex;
        println!(
            "{g:>8.4} {:>12.8} {closed:>12.8} {:>10.1e}   ({w1:.4}, {w2:.4}, {v:.4})",
            lp.optimum,
            (lp.optimum - closed).abs()
        );
    }
    Ok(())
}
