//! Phase damping and phase flip noise, lifted from one qubit to the
//! three-qubit register by taking every tensor product of single-qubit Kraus
//! operators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matcore::{DenseMatrix, DensityMatrix, QubitLayout};
use crate::{Error, Result};

/// Allowed deviation of `sum_k E_k^dagger E_k` from the identity.
pub const COMPLETENESS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelKind {
    PhaseDamping,
    PhaseFlip,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 2] = [ChannelKind::PhaseDamping, ChannelKind::PhaseFlip];

    pub fn label(self) -> &'static str {
        match self {
            ChannelKind::PhaseDamping => "phase-damping",
            ChannelKind::PhaseFlip => "phase-flip",
        }
    }

    pub fn single_qubit(self, p: f64) -> Result<SingleQubitKraus> {
        match self {
            ChannelKind::PhaseDamping => phase_damping(p),
            ChannelKind::PhaseFlip => phase_flip(p),
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_probability(name: &'static str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name,
            value: p,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}

fn completeness_defect(ops: &[DenseMatrix]) -> f64 {
    let dim = ops[0].dim();
    let sum = ops.iter().fold(DenseMatrix::zeros(dim), |acc, e| {
        acc.add(&e.dagger().matmul(e).expect("Kraus operators share a dimension"))
            .expect("Kraus operators share a dimension")
    });
    sum.max_abs_diff(&DenseMatrix::identity(dim)).expect("same dimension")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingleQubitKraus {
    pub ops: Vec<DenseMatrix>,
    pub p: f64,
    pub kind: ChannelKind,
}

impl SingleQubitKraus {
    pub fn completeness_defect(&self) -> f64 {
        completeness_defect(&self.ops)
    }
}

/// `E0 = diag(1, sqrt(1-p))`, `E1 = diag(0, sqrt(p))`.
///
/// Off-diagonal elements of a qubit shrink by `sqrt(1-p)`; populations stay put.
pub fn phase_damping(p: f64) -> Result<SingleQubitKraus> {
    check_probability("p", p)?;
    Ok(SingleQubitKraus {
        ops: vec![
            DenseMatrix::diag(&[1.0, (1.0 - p).sqrt()]),
            DenseMatrix::diag(&[0.0, p.sqrt()]),
        ],
        p,
        kind: ChannelKind::PhaseDamping,
    })
}

/// `E0 = sqrt(1-p) I`, `E1 = sqrt(p) sigma_z`.
pub fn phase_flip(p: f64) -> Result<SingleQubitKraus> {
    check_probability("p", p)?;
    Ok(SingleQubitKraus {
        ops: vec![
            DenseMatrix::identity(2).scale((1.0 - p).sqrt()),
            DenseMatrix::pauli_z().scale(p.sqrt()),
        ],
        p,
        kind: ChannelKind::PhaseFlip,
    })
}

/// Per-qubit channel strengths for Alice, Bob and Charlie. A qubit with
/// parameter 0 is effectively uncoupled.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingConfig {
    pub kind: ChannelKind,
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
}

impl CouplingConfig {
    pub fn new(kind: ChannelKind, p0: f64, p1: f64, p2: f64) -> Result<Self> {
        check_probability("p0", p0)?;
        check_probability("p1", p1)?;
        check_probability("p2", p2)?;
        Ok(Self { kind, p0, p1, p2 })
    }

    /// Only Alice's qubit sees the noise.
    pub fn local_alice(kind: ChannelKind, p: f64) -> Result<Self> {
        Self::new(kind, p, 0.0, 0.0)
    }

    /// All three qubits see the same noise strength.
    pub fn collective(kind: ChannelKind, p: f64) -> Result<Self> {
        Self::new(kind, p, p, p)
    }

    pub fn params(&self) -> [f64; 3] {
        [self.p0, self.p1, self.p2]
    }
}

/// Three-qubit Kraus set, ordered lexicographically by (Alice, Bob, Charlie)
/// operator index.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedKraus {
    pub ops: Vec<DenseMatrix>,
}

pub fn lift(cfg: &CouplingConfig) -> Result<LiftedKraus> {
    let [a, b, c] = [cfg.p0, cfg.p1, cfg.p2].map(|p| cfg.kind.single_qubit(p));
    let (a, b, c) = (a?, b?, c?);
    let mut ops = Vec::with_capacity(a.ops.len() * b.ops.len() * c.ops.len());
    for ea in &a.ops {
        for eb in &b.ops {
            let ab = ea.kron(eb);
            for ec in &c.ops {
                ops.push(ab.kron(ec));
            }
        }
    }
    Ok(LiftedKraus { ops })
}

impl LiftedKraus {
    pub fn completeness_defect(&self) -> f64 {
        completeness_defect(&self.ops)
    }

    /// `rho -> sum_k E_k rho E_k^dagger`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let defect = self.completeness_defect();
        if defect.is_nan() || defect > COMPLETENESS_TOL {
            return Err(Error::CompletenessViolated(defect));
        }
        let m = rho.matrix();
        if self.ops[0].dim() != m.dim() {
            return Err(Error::DimensionMismatch(self.ops[0].dim(), m.dim()));
        }
        let mut out = DenseMatrix::zeros(m.dim());
        for e in &self.ops {
            out = out.add(&e.matmul(m)?.matmul(&e.dagger())?)?;
        }
        DensityMatrix::new(out, rho.layout())
    }
}

/// Convenience: build the GHZ-register channel for `cfg` and apply it.
pub fn apply(cfg: &CouplingConfig, rho: &DensityMatrix) -> Result<DensityMatrix> {
    debug_assert_eq!(rho.layout(), QubitLayout::three());
    lift(cfg)?.apply(rho)
}
