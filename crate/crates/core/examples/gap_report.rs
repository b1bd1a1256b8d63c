//! Full rate reports: best achievable scheme, tightest bound and gap.
//! Pass `P a C12` on the command line to evaluate a single point.

use icup::gap::{all_achievable, gap_report};
use icup::ChannelParams;

fn show(params: &ChannelParams) -> icup::Result<()> {
    let r = gap_report(params, None)?;
    println!(
        "P={} a={} C12={}: {} via {} = {:.5} bits, bound {:.5} ({}), gap {:.5}",
        params.p(),
        params.a(),
        params.c12(),
        r.regime,
        r.scheme,
        r.achievable,
        r.upper,
        r.bound_label,
        r.gap
    );
    for (label, rate) in all_achievable(params) {
        println!("    {label:<14} {rate:.5}");
    }
    Ok(())
}

fn main() -> icup::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if let [p, a, c12] = args[..] {
        return show(&ChannelParams::new(p, a, c12)?);
    }
    for (p, a, c12) in [(6.0, 1.0, 0.5), (1e3, 0.3, 0.0), (1e3, 0.3, 3.0), (0.5, 0.5, 1.0), (50.0, 3.0, 1.0), (2.0, 9.0, 10.0)] {
        show(&ChannelParams::new(p, a, c12)?)?;
    }
    Ok(())
}
