//! Published analytic expressions for the one-tangles and pi-tangle at
//! `rb = rc = r`, transcribed term by term.
//!
//! These are deliberately kept apart from the density-matrix pipeline so each
//! side can falsify the other. Where a transcription disagrees with the
//! pipeline it is reported by [`crate::analysis::verify`], not patched here.
//! `sin(2r)^2` and `sin^2(2r)` are both read as `(sin 2r)^2`, `sin^8 r` as
//! `(sin r)^8`.

use serde::Serialize;

use crate::channels::{ChannelKind, CouplingConfig};
use crate::rindler::AccelParam;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormInputs {
    pub r: AccelParam,
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
}

impl ClosedFormInputs {
    pub fn new(r: AccelParam, p0: f64, p1: f64, p2: f64) -> Self {
        Self { r, p0, p1, p2 }
    }

    pub fn from_config(r: AccelParam, cfg: &CouplingConfig) -> Self {
        Self::new(r, cfg.p0, cfg.p1, cfg.p2)
    }

    fn damping_product(&self) -> f64 {
        (1.0 - self.p0) * (1.0 - self.p1) * (1.0 - self.p2)
    }

    fn flip_product(&self) -> f64 {
        (1.0 - 2.0 * self.p0) * (1.0 - 2.0 * self.p1) * (1.0 - 2.0 * self.p2)
    }
}

pub fn pd_one_tangle_a(x: &ClosedFormInputs) -> f64 {
    let r = x.r.value();
    let (s, c) = r.sin_cos();
    let s2r = (2.0 * r).sin();
    let pc = x.damping_product() * c.powi(4);
    -0.5 + 0.5 * c.powi(4) + 0.5 * pc.sqrt() + 0.5 * (pc + s.powi(8)).sqrt() + 0.25 * s2r * s2r
}

pub fn pd_one_tangle_bc(x: &ClosedFormInputs) -> f64 {
    let r = x.r.value();
    let c = r.cos();
    let s2r = (2.0 * r).sin();
    let pc = x.damping_product() * c.powi(4);
    let lead = (16.0 - 16.0 * x.p0) * (1.0 - x.p1) * (1.0 - x.p2) * c.powi(4);
    -1.0 / 16.0 + 0.5 * pc.sqrt() + (4.0 * r).cos() / 16.0 + (lead + s2r.powi(4)).sqrt() / 8.0
}

/// `(1/3) a^2 + (2/3) bc^2`, without two-tangle subtractions.
pub fn pd_pi_tangle(x: &ClosedFormInputs) -> f64 {
    let a = pd_one_tangle_a(x);
    let bc = pd_one_tangle_bc(x);
    a * a / 3.0 + 2.0 * bc * bc / 3.0
}

pub fn pf_one_tangle_a(x: &ClosedFormInputs) -> f64 {
    let r = x.r.value();
    let (s, c) = r.sin_cos();
    let s2r = (2.0 * r).sin();
    let q = x.flip_product();
    -0.5 + 0.5 * c * c * (q.abs() + c * c) + 0.5 * (q * q * c.powi(4) + s.powi(8)).sqrt() + 0.25 * s2r * s2r
}

pub fn pf_one_tangle_bc(x: &ClosedFormInputs) -> f64 {
    let r = x.r.value();
    let (s, c) = r.sin_cos();
    let s2r = (2.0 * r).sin();
    let q = x.flip_product();
    -0.5 + 0.5 * q.abs() * c * c
        + 0.5 * c.powi(4)
        + 0.5 * s.powi(4)
        + s2r * s2r / 8.0
        + (16.0 * q * q * c.powi(4) + s2r.powi(4)).sqrt() / 8.0
}

pub fn pf_pi_tangle(x: &ClosedFormInputs) -> f64 {
    let a = pf_one_tangle_a(x);
    let bc = pf_one_tangle_bc(x);
    a * a / 3.0 + 2.0 * bc * bc / 3.0
}

/// The three analytic values available for one channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormValues {
    pub n_a_bc: f64,
    pub n_bc: f64,
    pub pi: f64,
}

pub fn evaluate(kind: ChannelKind, x: &ClosedFormInputs) -> ClosedFormValues {
    match kind {
        ChannelKind::PhaseDamping => ClosedFormValues {
            n_a_bc: pd_one_tangle_a(x),
            n_bc: pd_one_tangle_bc(x),
            pi: pd_pi_tangle(x),
        },
        ChannelKind::PhaseFlip => ClosedFormValues {
            n_a_bc: pf_one_tangle_a(x),
            n_bc: pf_one_tangle_bc(x),
            pi: pf_pi_tangle(x),
        },
    }
}

/// Identifies one analytic expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    PdOneTangleA,
    PdOneTangleBc,
    PdPiTangle,
    PfOneTangleA,
    PfOneTangleBc,
    PfPiTangle,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::PdOneTangleA,
        ClosedForm::PdOneTangleBc,
        ClosedForm::PdPiTangle,
        ClosedForm::PfOneTangleA,
        ClosedForm::PfOneTangleBc,
        ClosedForm::PfPiTangle,
    ];

    pub fn channel(self) -> ChannelKind {
        match self {
            ClosedForm::PdOneTangleA | ClosedForm::PdOneTangleBc | ClosedForm::PdPiTangle => ChannelKind::PhaseDamping,
            _ => ChannelKind::PhaseFlip,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ClosedForm::PdOneTangleA => "phase-damping N_A(BC)",
            ClosedForm::PdOneTangleBc => "phase-damping N_B(AC)=N_C(AB)",
            ClosedForm::PdPiTangle => "phase-damping pi-tangle",
            ClosedForm::PfOneTangleA => "phase-flip N_A(BC)",
            ClosedForm::PfOneTangleBc => "phase-flip N_B(AC)=N_C(AB)",
            ClosedForm::PfPiTangle => "phase-flip pi-tangle",
        }
    }

    pub fn eval(self, x: &ClosedFormInputs) -> f64 {
        match self {
            ClosedForm::PdOneTangleA => pd_one_tangle_a(x),
            ClosedForm::PdOneTangleBc => pd_one_tangle_bc(x),
            ClosedForm::PdPiTangle => pd_pi_tangle(x),
            ClosedForm::PfOneTangleA => pf_one_tangle_a(x),
            ClosedForm::PfOneTangleBc => pf_one_tangle_bc(x),
            ClosedForm::PfPiTangle => pf_pi_tangle(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn at(r: f64, p: f64) -> ClosedFormInputs {
        ClosedFormInputs::new(AccelParam::new(r).unwrap(), p, p, p)
    }

    const GOLDEN: f64 = 0.404_508_497_187_473_7; // (1 + sqrt 5) / 8

    #[test]
    fn phase_damping_values() {
        assert!((pd_one_tangle_a(&at(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!(pd_one_tangle_a(&at(0.0, 1.0)).abs() < 1e-15);
        assert!((pd_one_tangle_a(&at(FRAC_PI_4, 0.0)) - (1.0 + 5f64.sqrt()) / 8.0).abs() < 1e-15);
        assert!((GOLDEN - (1.0 + 5f64.sqrt()) / 8.0).abs() < 1e-16);

        assert!((pd_one_tangle_bc(&at(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((pd_one_tangle_bc(&at(FRAC_PI_4, 0.0)) - GOLDEN).abs() < 1e-15);
        assert!(pd_one_tangle_bc(&at(0.0, 1.0)).abs() < 1e-15);

        assert!((pd_pi_tangle(&at(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!(pd_pi_tangle(&at(0.0, 1.0)).abs() < 1e-15);
        assert!((pd_pi_tangle(&at(FRAC_PI_4, 0.0)) - GOLDEN * GOLDEN).abs() < 1e-15);
        assert!((GOLDEN * GOLDEN - 0.16363).abs() < 1e-5);
    }

    #[test]
    fn phase_flip_values() {
        for k in 0..=8 {
            let r = k as f64 * FRAC_PI_4 / 8.0;
            assert!(pf_one_tangle_a(&at(r, 0.5)).abs() < 1e-15, "r = {r}");
            let bc = pf_one_tangle_bc(&at(r, 0.5));
            let (s, c) = r.sin_cos();
            let s2r = (2.0 * r).sin();
            let expected = -0.5 + 0.5 * c.powi(4) + 0.5 * s.powi(4) + s2r * s2r / 8.0 + s2r * s2r / 8.0;
            assert!((bc - expected).abs() < 1e-15);
            let a = pf_one_tangle_a(&at(r, 0.5));
            assert!((pf_pi_tangle(&at(r, 0.5)) - (a * a / 3.0 + 2.0 * bc * bc / 3.0)).abs() < 1e-15);
        }
        assert!((pf_one_tangle_a(&at(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((pf_one_tangle_a(&at(0.0, 1.0)) - 1.0).abs() < 1e-15);
        assert!((pf_one_tangle_bc(&at(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((pf_one_tangle_bc(&at(FRAC_PI_4, 0.0)) - pf_one_tangle_a(&at(FRAC_PI_4, 0.0))).abs() < 1e-15);
        assert!((pf_pi_tangle(&at(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((pf_pi_tangle(&at(0.0, 1.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn flip_forms_are_reflection_symmetric() {
        for k in 0..=4 {
            let r = k as f64 * FRAC_PI_4 / 4.0;
            for i in 0..=100 {
                let p = i as f64 / 100.0;
                for f in [pf_one_tangle_a, pf_one_tangle_bc, pf_pi_tangle] {
                    assert!((f(&at(r, p)) - f(&at(r, 1.0 - p))).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn damping_and_flip_agree_without_noise() {
        for k in 0..=10 {
            let x = at(k as f64 * FRAC_PI_4 / 10.0, 0.0);
            assert!((pd_one_tangle_a(&x) - pf_one_tangle_a(&x)).abs() < 1e-14);
            assert!((pd_one_tangle_bc(&x) - pf_one_tangle_bc(&x)).abs() < 1e-14);
            assert!((pd_pi_tangle(&x) - pf_pi_tangle(&x)).abs() < 1e-14);
        }
    }

    #[test]
    fn one_tangles_coincide_at_infinite_acceleration() {
        for i in 0..=100 {
            let x = at(FRAC_PI_4, i as f64 / 100.0);
            assert!((pd_one_tangle_a(&x) - pd_one_tangle_bc(&x)).abs() < 1e-12);
            assert!((pf_one_tangle_a(&x) - pf_one_tangle_bc(&x)).abs() < 1e-12);
        }
    }

    #[test]
    fn evaluate_dispatches_by_channel() {
        let x = at(0.3, 0.2);
        let v = evaluate(ChannelKind::PhaseFlip, &x);
        assert_eq!(v.n_a_bc, ClosedForm::PfOneTangleA.eval(&x));
        assert_eq!(v.pi, ClosedForm::PfPiTangle.eval(&x));
        assert_eq!(ClosedForm::PdOneTangleBc.channel(), ChannelKind::PhaseDamping);
    }
}
