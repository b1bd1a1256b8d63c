//! Every upper bound across a sweep of the interference gain.

use icup::bounds::{best_bound, ub_cgrc_exact, ub_genie, ub_strong, ub_weak_enlarged};
use icup::ChannelParams;

fn main() -> icup::Result<()> {
    let p = 100.0;
    let c12 = 1.0;
    println!("P = {p}, C12 = {c12}");
    println!("{:>7} {:>12} {:>12} {:>10} {:>10} {:>10}  label", "a", "cgrc-exact", "cgrc-enl", "genie", "strong", "best");
    for a in [0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 3.0, 10.0] {
        let params = ChannelParams::new(p, a, c12)?;
        let fmt = |r: icup::Result<f64>| r.map_or("-".into(), |v| format!("{v:.4}"));
        let report = best_bound(&params);
        println!(
            "{a:>7} {:>12} {:>12} {:>10.4} {:>10} {:>10.4}  {}",
            fmt(ub_cgrc_exact(&params)),
            fmt(ub_weak_enlarged(&params)),
            ub_genie(&params),
            fmt(ub_strong(&params)),
            report.best,
            report.best_label
        );
    }
    Ok(())
}
