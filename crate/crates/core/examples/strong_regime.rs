//! Strong-interference rates in each sub-case, plus the exact-capacity
//! condition and treating interference as noise.

use icup::strong::{capacity_condition_holds, noise_limited_rate, strong_rate};
use icup::{classify, ChannelParams};

fn main() -> icup::Result<()> {
    let cases = [
        (0.5, 4.0, 0.3),
        (0.5, 4.0, 5.0),
        (100.0, 4.0, 0.5),
        (3.0, 10.0, 0.5),
        (3.0, 10.0, 10.0),
        (1e4, 50.0, 1.0),
    ];
    for (p, a, c12) in cases {
        let params = ChannelParams::new(p, a, c12)?;
        let (rate, scheme) = strong_rate(&params)?;
        println!(
            "P={p:<8} a={a:<5} C12={c12:<4} {:<12} {:<14} rate={rate:.5} exact={}",
            classify(&params).to_string(),
            scheme.to_string(),
            capacity_condition_holds(&params)
        );
    }

    println!("\nnoise-limited points (aP <= 1):");
    for (p, a) in [(0.5, 0.5), (2.0, 0.4), (0.1, 8.0)] {
        let params = ChannelParams::new(p, a, 0.0)?;
        println!("  P={p:<4} a={a:<4} TIN rate = {:.5}", noise_limited_rate(&params));
    }

    if let Err(e) = strong_rate(&ChannelParams::new(10.0, 0.5, 0.0)?) {
        println!("\nweak point refused: {e}");
    }
    Ok(())
}
