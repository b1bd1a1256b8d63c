//! Derived quantities and regime classification for a few operating points.
//!
//! Run with `cargo run --example channel_basics`.

use icup::{cap, classify, derive, ChannelParams};

fn main() -> icup::Result<()> {
    println!("C(1) = {:.6} bits, C(3) = {:.6} bits", cap(1.0)?, cap(3.0)?);

    let points = [
        (0.5, 0.5, 0.0),
        (100.0, 0.01, 0.0),
        (10.0, 0.3, 1.0),
        (10.0, 1.0, 1.0),
        (0.8, 4.0, 0.5),
        (100.0, 4.0, 0.5),
        (3.0, 10.0, 2.0),
    ];
    println!("{:>8} {:>8} {:>6}  {:<14} {:>10} {:>10} {:>8} {:>8}", "P", "a", "C12", "regime", "SNR", "INR", "alpha", "beta");
    for (p, a, c12) in points {
        let params = ChannelParams::new(p, a, c12)?;
        let d = derive(&params);
        let opt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.4}"));
        println!(
            "{p:>8} {a:>8} {c12:>6}  {:<14} {:>10.3} {:>10.3} {:>8} {:>8}",
            classify(&params).to_string(),
            d.snr,
            d.inr,
            opt(d.alpha),
            opt(d.beta)
        );
    }

    match ChannelParams::new(-1.0, 0.5, 0.0) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
