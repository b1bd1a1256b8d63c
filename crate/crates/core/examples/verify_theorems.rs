//! Run every verification suite over a preset grid and print the worst
//! observed value of each check. Pass `coarse` for a quicker run.

use icup::gap::{verify_suite, Suite};
use icup::grid::Preset;

fn main() -> icup::Result<()> {
    let preset: Preset = std::env::args().nth(1).as_deref().unwrap_or("default").parse()?;
    let grid = preset.points();
    println!("{} grid points", grid.len());
    let mut ok = true;
    for suite in Suite::ALL {
        let report = verify_suite(suite, &grid);
        for c in &report.checks {
            println!(
                "{:<14} {:<28} n={:<7} max={:<12.6} claim={}{}",
                suite.as_str(),
                c.check,
                c.points,
                c.max_observed,
                c.claimed,
                if c.informational { " (informational)" } else { "" }
            );
        }
        ok &= report.passed();
    }
    println!("{}", if ok { "all suites pass" } else { "violations found" });
    Ok(())
}
