//! Programmatic sweep written as CSV to stdout, the same rows the `sweep`
//! subcommand produces.

use std::io::stdout;

use icup::cli::{run_sweep, OutputFormat, SweepSpec};
use icup::format::write_sweep_csv;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec {
        p: "1:1e4:5:log".parse()?,
        a: "0.1:10:5:log".parse()?,
        c12: "0:2:3".parse()?,
        scheme: None,
        format: OutputFormat::Csv,
    };
    let reports = run_sweep(&spec)?;
    write_sweep_csv(&mut stdout().lock(), &reports)?;
    Ok(())
}
