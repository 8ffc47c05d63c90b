//! Compare the analytic tangles with the density-matrix pipeline.

use rindler_ghz::analysis::{p_grid, verify, VerifyGrid};

fn main() -> rindler_ghz::Result<()> {
    for r_values in [vec![0.0], VerifyGrid::default().r_values] {
        let grid = VerifyGrid {
            r_values,
            p_values: p_grid(0.05)?,
            ..VerifyGrid::default()
        };
        let report = verify(&grid)?;
        println!("r values {:?}", grid.r_values);
        for c in &report.checks {
            println!(
                "  {:<32} {:.3e} {}",
                c.label,
                c.max_deviation,
                if c.passed { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
