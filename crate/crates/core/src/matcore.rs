//! Dense complex matrices sized for small qubit registers.
//!
//! Everything here is a pure function of its inputs. The Hermitian eigensolver
//! embeds a `d x d` complex Hermitian matrix into the `2d x 2d` real symmetric
//! matrix `[[Re, -Im], [Im, Re]]` and diagonalises that with cyclic Jacobi
//! rotations; every eigenvalue of the original shows up twice.

use num_complex::Complex64;

use crate::{Error, Result};

pub type C64 = Complex64;

/// Max entrywise `|M - M^dagger|` accepted before eigensolving.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// (scaled by the matrix norm when that exceeds one).
pub const JACOBI_OFF_TOL: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Two copies of the same eigenvalue in the real embedding must agree this well.
pub const PAIR_TOL: f64 = 1e-8;

/// Square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl DenseMatrix {
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidMatrix("dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for dim {}, got {}",
                dim * dim,
                dim,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|z| !z.is_finite()) {
            return Err(Error::InvalidMatrix(format!(
                "non-finite entry at ({}, {})",
                pos / dim,
                pos % dim
            )));
        }
        Ok(Self { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn from_real(dim: usize, values: &[f64]) -> Result<Self> {
        Self::new(dim, values.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diag(&vec![1.0; dim])
    }

    pub fn diag(values: &[f64]) -> Self {
        let dim = values.len();
        Self::from_fn(dim, |i, j| {
            if i == j {
                C64::new(values[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    pub fn pauli_z() -> Self {
        Self::diag(&[1.0, -1.0])
    }

    /// `|psi><psi|` for a state vector.
    pub fn outer(psi: &[C64]) -> Self {
        Self::from_fn(psi.len(), |i, j| psi[i] * psi[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, z: C64) {
        self.entries[i * self.dim + j] = z;
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }

    /// Kronecker product with `self` as the more significant factor.
    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let m = other.dim;
        DenseMatrix::from_fn(self.dim * m, |i, j| self.get(i / m, j / m) * other.get(i % m, j % m))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, factor: f64) -> DenseMatrix {
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest entrywise `|M - M^dagger|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Qubit register convention shared by every module: qubit 0 (Alice) is the
/// most significant bit, so `|abc>` sits at basis index `4a + 2b + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QubitLayout {
    count: usize,
}

impl QubitLayout {
    pub const ALICE: usize = 0;
    pub const BOB: usize = 1;
    pub const CHARLIE: usize = 2;

    pub fn new(count: usize) -> Self {
        assert!(count > 0 && count < 16, "unsupported register size {count}");
        Self { count }
    }

    /// Alice, Bob, Charlie.
    pub fn three() -> Self {
        Self::new(3)
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn dim(&self) -> usize {
        1 << self.count
    }

    /// Bit of `qubit` inside a basis index.
    #[inline]
    pub fn bit(&self, index: usize, qubit: usize) -> usize {
        (index >> (self.count - 1 - qubit)) & 1
    }

    #[inline]
    fn mask(&self, qubit: usize) -> usize {
        1 << (self.count - 1 - qubit)
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.count {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                count: self.count,
            });
        }
        Ok(())
    }

    fn check_matrix(&self, m: &DenseMatrix) -> Result<()> {
        if m.dim() != self.dim() {
            return Err(Error::DimensionMismatch(m.dim(), self.dim()));
        }
        Ok(())
    }
}

/// Reduced matrix on the `keep` qubits; the kept qubits retain their relative
/// order.
pub fn partial_trace(rho: &DenseMatrix, layout: QubitLayout, keep: &[usize]) -> Result<DenseMatrix> {
    layout.check_matrix(rho)?;
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    for &q in &kept {
        layout.check_qubit(q)?;
    }
    let kept_mask: usize = kept.iter().map(|&q| layout.mask(q)).sum();
    let traced_mask = (layout.dim() - 1) & !kept_mask;
    let reduced = |idx: usize| kept.iter().fold(0usize, |acc, &q| (acc << 1) | layout.bit(idx, q));

    let n = layout.dim();
    let mut out = DenseMatrix::zeros(1 << kept.len());
    for i in 0..n {
        for j in 0..n {
            if i & traced_mask != j & traced_mask {
                continue;
            }
            let (ri, rj) = (reduced(i), reduced(j));
            let z = out.get(ri, rj) + rho.get(i, j);
            out.set(ri, rj, z);
        }
    }
    Ok(out)
}

/// Transpose of the row/column indices belonging to `subsystem` only.
pub fn partial_transpose(rho: &DenseMatrix, layout: QubitLayout, subsystem: usize) -> Result<DenseMatrix> {
    layout.check_matrix(rho)?;
    layout.check_qubit(subsystem)?;
    let mask = layout.mask(subsystem);
    let n = layout.dim();
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let ti = (i & !mask) | (j & mask);
            let tj = (j & !mask) | (i & mask);
            out.set(ti, tj, rho.get(i, j));
        }
    }
    Ok(out)
}

/// Eigenvalues (ascending) with matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<C64>>,
}

impl HermitianEigen {
    /// `V diag(values) V^dagger`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.values.len();
        DenseMatrix::from_fn(n, |i, j| {
            self.values
                .iter()
                .zip(&self.vectors)
                .map(|(&lam, v)| v[i] * v[j].conj() * lam)
                .sum()
        })
    }
}

fn checked_symmetrized(m: &DenseMatrix) -> Result<DenseMatrix> {
    let defect = m.hermiticity_defect();
    if defect.is_nan() || defect > HERMITICITY_TOL {
        return Err(Error::HermiticityViolated(defect));
    }
    Ok(DenseMatrix::from_fn(m.dim(), |i, j| {
        (m.get(i, j) + m.get(j, i).conj()) * 0.5
    }))
}

/// Cyclic Jacobi on a real symmetric matrix stored row-major. Returns the
/// diagonalised matrix (eigenvalues on the diagonal) and the rotation
/// accumulator whose columns are eigenvectors.
fn jacobi_symmetric(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if off_norm(&a) <= JACOBI_OFF_TOL * scale {
            return Ok((a, v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let off = off_norm(&a);
    if off <= JACOBI_OFF_TOL * scale {
        Ok((a, v))
    } else {
        Err(Error::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
            off_norm: off,
        })
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigh(m: &DenseMatrix) -> Result<HermitianEigen> {
    let h = checked_symmetrized(m)?;
    let d = h.dim();
    let n = 2 * d;
    let mut embed = vec![0.0; n * n];
    for i in 0..d {
        for j in 0..d {
            let z = h.get(i, j);
            embed[i * n + j] = z.re;
            embed[(i + d) * n + (j + d)] = z.re;
            embed[i * n + (j + d)] = -z.im;
            embed[(i + d) * n + j] = z.im;
        }
    }
    let (diag, vecs) = jacobi_symmetric(embed, n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| diag[x * n + x].total_cmp(&diag[y * n + y]));
    let lam = |k: usize| diag[order[k] * n + order[k]];
    let scale = (0..n).map(|k| lam(k).abs()).fold(1.0, f64::max);

    let mut values = Vec::with_capacity(d);
    let mut vectors = Vec::with_capacity(d);
    let mut start = 0;
    while start < n {
        // cluster of (near-)equal eigenvalues in the doubled spectrum
        let mut end = start + 1;
        while end < n && lam(end) - lam(end - 1) <= PAIR_TOL * scale {
            end += 1;
        }
        let size = end - start;
        if size % 2 != 0 {
            let gap = if end < n {
                lam(end) - lam(end - 1)
            } else {
                f64::INFINITY
            };
            return Err(Error::EigenPairing(gap));
        }
        for k in (start..end).step_by(2) {
            values.push(0.5 * (lam(k) + lam(k + 1)));
        }

        // Each real eigenvector [x; y] maps to the complex eigenvector x + iy.
        let mut candidates: Vec<Vec<C64>> = (start..end)
            .map(|k| {
                let col = order[k];
                (0..d)
                    .map(|i| C64::new(vecs[i * n + col], vecs[(i + d) * n + col]))
                    .collect()
            })
            .collect();
        let mut basis: Vec<Vec<C64>> = Vec::with_capacity(size / 2);
        while basis.len() < size / 2 {
            for cand in candidates.iter_mut() {
                if let Some(last) = basis.last() {
                    let overlap: C64 = last.iter().zip(cand.iter()).map(|(b, c)| b.conj() * c).sum();
                    for (c, b) in cand.iter_mut().zip(last) {
                        *c -= overlap * b;
                    }
                }
            }
            let (best, norm) = candidates
                .iter()
                .enumerate()
                .map(|(k, c)| (k, c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .expect("cluster is non-empty");
            if norm < 1e-6 {
                return Err(Error::EigenPairing(norm));
            }
            let chosen: Vec<C64> = candidates.swap_remove(best).iter().map(|z| z / norm).collect();
            basis.push(chosen);
        }
        vectors.extend(basis);
        start = end;
    }
    Ok(HermitianEigen { values, vectors })
}

/// All eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>> {
    hermitian_eigh(m).map(|e| e.values)
}

/// Sum of absolute eigenvalues (Hermitian input).
pub fn trace_norm(m: &DenseMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?.iter().map(|x| x.abs()).sum())
}

/// Hermitian, unit-trace operator on a qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: DenseMatrix,
    layout: QubitLayout,
}

impl DensityMatrix {
    /// Tolerance on `|tr(rho) - 1|` and on Hermiticity.
    pub const TOL: f64 = 1e-10;

    pub fn new(matrix: DenseMatrix, layout: QubitLayout) -> Result<Self> {
        layout.check_matrix(&matrix)?;
        let defect = matrix.hermiticity_defect();
        if defect.is_nan() || defect > Self::TOL {
            return Err(Error::NotDensityMatrix(format!("not Hermitian (defect {defect:e})")));
        }
        let tr = matrix.trace();
        if (tr - 1.0).norm().is_nan() || (tr - 1.0).norm() > Self::TOL {
            return Err(Error::NotDensityMatrix(format!("trace {tr} != 1")));
        }
        Ok(Self { matrix, layout })
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn layout(&self) -> QubitLayout {
        self.layout
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(hermitian_eigenvalues(&self.matrix)?[0])
    }

    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let m = partial_trace(&self.matrix, self.layout, &kept)?;
        DensityMatrix::new(m, QubitLayout::new(kept.len()))
    }

    pub fn partial_transpose(&self, subsystem: usize) -> Result<DenseMatrix> {
        partial_transpose(&self.matrix, self.layout, subsystem)
    }
}
