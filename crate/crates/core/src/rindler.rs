//! The GHZ state as seen by Alice (inertial) and Bob, Charlie (uniformly
//! accelerated, confined to Rindler region I).
//!
//! For an accelerated observer the Minkowski vacuum of a Dirac mode is the
//! two-mode state `cos r |0>_I |0>_II + sin r |1>_I |1>_II`, and the single
//! excitation is `|1>_I |0>_II`. Region II is causally disconnected, so it is
//! traced out, leaving a mixed three-qubit state.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::matcore::{DenseMatrix, DensityMatrix, QubitLayout};
use crate::{Error, Result};

/// Values of `r` this far above `pi/4` are accepted so that rounded inputs
/// such as `0.7854` still denote the infinite-acceleration limit.
pub const R_SLACK: f64 = 1e-5;

/// Acceleration parameter `r` in radians; `0` is inertial, `pi/4` is the
/// infinite-acceleration limit.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AccelParam(f64);

impl AccelParam {
    pub const INERTIAL: AccelParam = AccelParam(0.0);
    pub const INFINITE: AccelParam = AccelParam(FRAC_PI_4);

    pub fn new(r: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_4 + R_SLACK).contains(&r) {
            return Err(Error::OutOfRange {
                name: "r",
                value: r,
                min: 0.0,
                max: FRAC_PI_4,
            });
        }
        Ok(Self(r))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Proper acceleration `a` together with the mode scale `omega * c`, both in
/// units that make `2 pi omega c / a` dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalAcceleration {
    pub a: f64,
    pub omega_c: f64,
}

impl PhysicalAcceleration {
    pub fn new(a: f64, omega_c: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::OutOfRange {
                name: "a",
                value: a,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        if !(omega_c > 0.0 && omega_c.is_finite()) {
            return Err(Error::OutOfRange {
                name: "omega_c",
                value: omega_c,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        Ok(Self { a, omega_c })
    }
}

/// `cos r = (exp(-2 pi omega c / a) + 1)^(-1/2)`.
pub fn accel_to_r(pa: PhysicalAcceleration) -> Result<AccelParam> {
    let pa = PhysicalAcceleration::new(pa.a, pa.omega_c)?;
    let cos_r = ((-2.0 * PI * pa.omega_c / pa.a).exp() + 1.0).powf(-0.5);
    AccelParam::new(cos_r.acos())
}

/// Minkowski vacuum of one mode expressed in Rindler modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeVacuum {
    pub r: AccelParam,
    /// amplitude on `|0>_I |0>_II`
    pub c00: f64,
    /// amplitude on `|1>_I |1>_II`
    pub c11: f64,
}

impl TwoModeVacuum {
    pub fn new(r: AccelParam) -> Self {
        let (s, c) = r.value().sin_cos();
        Self { r, c00: c, c11: s }
    }
}

/// Three-qubit state of Alice, Bob (region I) and Charlie (region I) after
/// tracing out both region-II modes:
///
/// ```text
/// rho = 1/2 [ cb^2 cc^2 |000><000| + cb^2 sc^2 |001><001|
///           + sb^2 cc^2 |010><010| + sb^2 sc^2 |011><011|
///           + cb cc (|000><111| + |111><000|) + |111><111| ]
/// ```
pub fn ghz_rindler_density(rb: AccelParam, rc: AccelParam) -> DensityMatrix {
    let b = TwoModeVacuum::new(rb);
    let c = TwoModeVacuum::new(rc);
    let mut entries = [0.0f64; 64];
    let mut put = |i: usize, j: usize, x: f64| entries[i * 8 + j] = x;
    put(0b000, 0b000, 0.5 * b.c00 * b.c00 * c.c00 * c.c00);
    put(0b001, 0b001, 0.5 * b.c00 * b.c00 * c.c11 * c.c11);
    put(0b010, 0b010, 0.5 * b.c11 * b.c11 * c.c00 * c.c00);
    put(0b011, 0b011, 0.5 * b.c11 * b.c11 * c.c11 * c.c11);
    put(0b000, 0b111, 0.5 * b.c00 * c.c00);
    put(0b111, 0b000, 0.5 * b.c00 * c.c00);
    put(0b111, 0b111, 0.5);
    let m = DenseMatrix::from_real(8, &entries).expect("finite entries");
    DensityMatrix::new(m, QubitLayout::three()).expect("traced GHZ state is a valid density matrix")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::approx_constant)]
    fn accel_param_range() {
        assert!(AccelParam::new(0.0).is_ok());
        assert!(AccelParam::new(FRAC_PI_4).is_ok());
        assert!(AccelParam::new(0.7854).is_ok());
        assert!(AccelParam::new(-0.1).is_err());
        assert!(AccelParam::new(2.0).is_err());
        assert!(AccelParam::new(f64::NAN).is_err());
    }

    #[test]
    fn accel_to_r_limits() {
        let huge = accel_to_r(PhysicalAcceleration::new(1e12, 1.0).unwrap()).unwrap();
        assert!((huge.value() - FRAC_PI_4).abs() < 1e-9);
        let tiny = accel_to_r(PhysicalAcceleration::new(1e-3, 1.0).unwrap()).unwrap();
        assert!(tiny.value() < 1e-9);
    }

    #[test]
    fn accel_to_r_direct_value() {
        // omega_c = 1, a = 2 pi: cos r = (e^-1 + 1)^(-1/2)
        let r = accel_to_r(PhysicalAcceleration::new(2.0 * PI, 1.0).unwrap()).unwrap();
        assert!((r.value().cos() - 0.855_019_636_400_243_7).abs() < 1e-12);
        assert!((r.value() - 0.545_207_623_830_583_5).abs() < 1e-12);
    }

    #[test]
    fn accel_to_r_rejects_nonpositive() {
        assert!(PhysicalAcceleration::new(0.0, 1.0).is_err());
        assert!(PhysicalAcceleration::new(-1.0, 1.0).is_err());
        assert!(accel_to_r(PhysicalAcceleration { a: -1.0, omega_c: 1.0 }).is_err());
    }

    #[test]
    fn two_mode_vacuum_is_normalised() {
        for k in 0..=10 {
            let v = TwoModeVacuum::new(AccelParam::new(k as f64 * FRAC_PI_4 / 10.0).unwrap());
            assert!((v.c00 * v.c00 + v.c11 * v.c11 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn inertial_limit_is_pure_ghz() {
        let rho = ghz_rindler_density(AccelParam::INERTIAL, AccelParam::INERTIAL);
        let m = rho.matrix();
        for i in 0..8 {
            for j in 0..8 {
                let expected = if (i == 0 || i == 7) && (j == 0 || j == 7) {
                    0.5
                } else {
                    0.0
                };
                assert!((m.get(i, j) - expected).norm() < 1e-15, "({i},{j})");
            }
        }
    }

    #[test]
    fn unit_trace_and_psd() {
        for kb in 0..=5 {
            for kc in 0..=5 {
                let rb = AccelParam::new(kb as f64 * FRAC_PI_4 / 5.0).unwrap();
                let rc = AccelParam::new(kc as f64 * FRAC_PI_4 / 5.0).unwrap();
                let rho = ghz_rindler_density(rb, rc);
                assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);
                assert!(rho.min_eigenvalue().unwrap() >= -1e-10);
            }
        }
    }

    #[test]
    fn bob_charlie_swap_symmetry() {
        let r = AccelParam::new(0.4).unwrap();
        let rho = ghz_rindler_density(r, r);
        let swap = |i: usize| (i & 0b100) | ((i & 0b010) >> 1) | ((i & 0b001) << 1);
        let m = rho.matrix();
        for i in 0..8 {
            for j in 0..8 {
                assert!((m.get(i, j) - m.get(swap(i), swap(j))).norm() < 1e-16);
            }
        }
    }
}
