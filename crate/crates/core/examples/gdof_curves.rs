//! GDOF curves for small and large cooperation, with numeric slope
//! estimates at finite SNR next to the closed form.

use icup::gdof::{alpha_grid, gdof_formula, gdof_slope, HIGH_COOP_BETAS, LOW_COOP_BETAS};

fn table(betas: &[f64]) -> icup::Result<()> {
    print!("{:>6}", "alpha");
    for b in betas {
        print!(" {:>9}", format!("b={b}"));
    }
    println!();
    for alpha in alpha_grid(0.0, 3.0, 0.1)? {
        print!("{alpha:>6.2}");
        for &b in betas {
            print!(" {:>9.4}", gdof_formula(alpha, b)?);
        }
        println!();
    }
    Ok(())
}

fn main() -> icup::Result<()> {
    println!("small cooperation");
    table(&LOW_COOP_BETAS)?;
    println!("\nlarge cooperation");
    table(&HIGH_COOP_BETAS)?;

    println!("\nslope estimates between P = 1e9 and 1e12 (beta = 0.25)");
    for alpha in [0.0, 0.25, 0.5, 0.6, 0.8, 1.0, 1.5, 2.5] {
        let s = gdof_slope(alpha, 0.25, 1e9, 1e12)?;
        println!(
            "alpha={alpha:<5} d={:.4} achievable={:.4} bound={:.4}",
            gdof_formula(alpha, 0.25)?,
            s.achievable,
            s.bound
        );
    }
    Ok(())
}
