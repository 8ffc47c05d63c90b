//! Diagonalise a partial transpose with the Jacobi solver and read off the
//! negativity both ways.

use rindler_ghz::matcore::{hermitian_eigh, QubitLayout};
use rindler_ghz::rindler::{ghz_rindler_density, AccelParam};
use rindler_ghz::tangles::{negativity_from_negative_eigenvalues, raw_negativity};

fn main() -> rindler_ghz::Result<()> {
    let r = AccelParam::new(0.6)?;
    let rho = ghz_rindler_density(r, r);
    let pt = rho.partial_transpose(QubitLayout::ALICE)?;
    let eig = hermitian_eigh(&pt)?;
    println!(
        "spectrum of rho^T_A: {:?}",
        eig.values.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>()
    );
    println!("reconstruction error {:.2e}", eig.reconstruct().max_abs_diff(&pt)?);
    println!(
        "negativity: trace norm {:.12}, negative eigenvalues {:.12}",
        raw_negativity(&rho, QubitLayout::ALICE)?,
        negativity_from_negative_eigenvalues(&rho, QubitLayout::ALICE)?
    );
    Ok(())
}
