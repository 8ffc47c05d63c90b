//! Negativity-based entanglement measures computed straight from density
//! matrices: one-tangles `N_{A(BC)}` etc., two-tangles of the two-qubit
//! marginals, residual entanglement and the pi-tangle.

use serde::Serialize;

use crate::channels::{self, CouplingConfig};
use crate::matcore::{hermitian_eigenvalues, trace_norm, DensityMatrix, QubitLayout};
use crate::rindler::{ghz_rindler_density, AccelParam};
use crate::{Error, Result};

/// Negativities in `[-ROUNDOFF_TOL, 0)` are clamped to zero; anything lower
/// is an error.
pub const ROUNDOFF_TOL: f64 = 1e-10;

fn clamp_negativity(n: f64) -> Result<f64> {
    if n >= 0.0 {
        Ok(n)
    } else if n >= -ROUNDOFF_TOL {
        Ok(0.0)
    } else {
        Err(Error::NegativeNegativity(n))
    }
}

/// Raw `||rho^T_q||_1 - 1`, unclamped.
pub fn raw_negativity(rho: &DensityMatrix, subsystem: usize) -> Result<f64> {
    Ok(trace_norm(&rho.partial_transpose(subsystem)?)? - 1.0)
}

/// `2 sum |lambda_-|` over the negative eigenvalues of the partial transpose.
pub fn negativity_from_negative_eigenvalues(rho: &DensityMatrix, subsystem: usize) -> Result<f64> {
    let values = hermitian_eigenvalues(&rho.partial_transpose(subsystem)?)?;
    Ok(-2.0 * values.iter().filter(|&&x| x < 0.0).sum::<f64>())
}

/// Negativity of `rho` across the cut `subsystem | rest`.
pub fn negativity(rho: &DensityMatrix, subsystem: usize) -> Result<f64> {
    clamp_negativity(raw_negativity(rho, subsystem)?)
}

/// Negativity of the two-qubit marginal on `pair`.
pub fn two_tangle(rho: &DensityMatrix, pair: (usize, usize)) -> Result<f64> {
    let reduced = rho.reduced(&[pair.0, pair.1])?;
    negativity(&reduced, 0)
}

/// `N_one^2 - N_pair1^2 - N_pair2^2`; may be negative for general states.
pub fn residual(one: f64, pair1: f64, pair2: f64) -> f64 {
    one * one - pair1 * pair1 - pair2 * pair2
}

pub fn pi_tangle(pi_a: f64, pi_b: f64, pi_c: f64) -> f64 {
    (pi_a + pi_b + pi_c) / 3.0
}

/// Every negativity-based measure at one point of parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangleReport {
    pub r: f64,
    pub cfg: CouplingConfig,
    pub n_a_bc: f64,
    pub n_b_ac: f64,
    pub n_c_ab: f64,
    pub n_ab: f64,
    pub n_ac: f64,
    pub n_bc: f64,
    pub pi_a: f64,
    pub pi_b: f64,
    pub pi_c: f64,
    pub pi_tangle: f64,
}

impl TangleReport {
    /// Measures of an arbitrary three-qubit state.
    pub fn from_state(r: f64, cfg: CouplingConfig, rho: &DensityMatrix) -> Result<Self> {
        if rho.layout() != QubitLayout::three() {
            return Err(Error::DimensionMismatch(rho.dim(), 8));
        }
        let n_a_bc = negativity(rho, QubitLayout::ALICE)?;
        let n_b_ac = negativity(rho, QubitLayout::BOB)?;
        let n_c_ab = negativity(rho, QubitLayout::CHARLIE)?;
        let n_ab = two_tangle(rho, (0, 1))?;
        let n_ac = two_tangle(rho, (0, 2))?;
        let n_bc = two_tangle(rho, (1, 2))?;
        let pi_a = residual(n_a_bc, n_ab, n_ac);
        let pi_b = residual(n_b_ac, n_ab, n_bc);
        let pi_c = residual(n_c_ab, n_ac, n_bc);
        Ok(Self {
            r,
            cfg,
            n_a_bc,
            n_b_ac,
            n_c_ab,
            n_ab,
            n_ac,
            n_bc,
            pi_a,
            pi_b,
            pi_c,
            pi_tangle: pi_tangle(pi_a, pi_b, pi_c),
        })
    }

    pub fn one_tangles(&self) -> [f64; 3] {
        [self.n_a_bc, self.n_b_ac, self.n_c_ab]
    }

    pub fn two_tangles(&self) -> [f64; 3] {
        [self.n_ab, self.n_ac, self.n_bc]
    }

    pub fn residuals(&self) -> [f64; 3] {
        [self.pi_a, self.pi_b, self.pi_c]
    }
}

/// The noisy state at `(r, cfg)` with `rb = rc = r`.
pub fn noisy_state(r: AccelParam, cfg: &CouplingConfig) -> Result<DensityMatrix> {
    channels::apply(cfg, &ghz_rindler_density(r, r))
}

/// Build the traced GHZ state with `rb = rc = r`, pass it through the channel
/// and measure everything.
pub fn full_report(r: AccelParam, cfg: &CouplingConfig) -> Result<TangleReport> {
    TangleReport::from_state(r.value(), *cfg, &noisy_state(r, cfg)?)
}
