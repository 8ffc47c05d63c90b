//! Convert a physical acceleration to r and print the traced GHZ state.
//!
//!     cargo run --example accelerated_state -- 6.283185307179586 1.0

use rindler_ghz::rindler::{accel_to_r, ghz_rindler_density, PhysicalAcceleration, TwoModeVacuum};

fn main() -> rindler_ghz::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("numeric argument"))
        .collect();
    let (a, omega_c) = match args[..] {
        [a, w] => (a, w),
        _ => (2.0 * std::f64::consts::PI, 1.0),
    };
    let r = accel_to_r(PhysicalAcceleration::new(a, omega_c)?)?;
    let vac = TwoModeVacuum::new(r);
    println!(
        "a = {a}, omega_c = {omega_c}: r = {:.12}, cos r = {:.12}",
        r.value(),
        vac.c00
    );

    let rho = ghz_rindler_density(r, r);
    for i in 0..8 {
        let row: Vec<String> = (0..8).map(|j| format!("{:8.5}", rho.matrix().get(i, j).re)).collect();
        println!("{}", row.join(" "));
    }
    println!("min eigenvalue {:.3e}", rho.min_eigenvalue()?);
    Ok(())
}
