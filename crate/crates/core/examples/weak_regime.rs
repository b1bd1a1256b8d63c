//! Weak-interference schemes: the universal power split, the optimized
//! split, and full cooperation, side by side as `C12` grows.

use icup::weak::{full_coop_rate, optimize_gamma, sum_bounds, universal_gamma, universal_pa, universal_rates};
use icup::ChannelParams;

fn main() -> icup::Result<()> {
    let (p, a) = (1000.0, 0.2);
    let base = ChannelParams::new(p, a, 0.0)?;
    let pa = universal_pa(&base)?;
    println!("P = {p}, a = {a}");
    println!(
        "universal split: P_u = {:.4}, P_w = {:.4}, P_v = {:.4} (P_V = {:.4}), gamma = {:.4}",
        pa.private,
        pa.common,
        pa.coop,
        pa.coop_rx,
        universal_gamma(&base)
    );

    println!("\n{:>6} {:>10} {:>10} {:>10} {:>8} {:>10}", "C12", "universal", "optimal", "full-coop", "gamma*", "common+coop");
    for c12 in [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let params = base.with_c12(c12)?;
        let u = universal_rates(&params)?.sum_rate();
        let (g, opt) = optimize_gamma(&params)?;
        let fc = full_coop_rate(&params)?;
        let sb = sum_bounds(&universal_pa(&params)?, &params);
        println!("{c12:>6} {u:>10.4} {opt:>10.4} {fc:>10.4} {g:>8.4} {:>10.4}", sb.min());
    }

    let u = universal_rates(&base.with_c12(1.0)?)?;
    println!("\nrate terms at C12 = 1:");
    for (i, t) in u.terms().iter().enumerate() {
        println!("  r{} = {t:.5}", i + 1);
    }
    println!("  private contribution = {:.5}", u.private_rate);
    Ok(())
}
