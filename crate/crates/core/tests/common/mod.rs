//! Independent constructions used as oracles. Nothing here goes through the
//! library's matrix code.

#![allow(dead_code, clippy::needless_range_loop)]

/// Five-qubit pure state A, B_I, B_II, C_I, C_II (A most significant) with the
/// Minkowski vacuum of each accelerated mode written as a two-mode squeezed
/// state, then region II traced out by explicit summation. Returns the 8x8
/// real density matrix on A, B_I, C_I in row-major order.
pub fn brute_force_state(rb: f64, rc: f64) -> [[f64; 8]; 8] {
    let (sb, cb) = rb.sin_cos();
    let (sc, cc) = rc.sin_cos();
    // mode amplitudes indexed by (region I bit, region II bit)
    let zero_b = [[cb, 0.0], [0.0, sb]];
    let zero_c = [[cc, 0.0], [0.0, sc]];
    let one = [[0.0, 0.0], [1.0, 0.0]];

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = [0.0f64; 32];
    for (a, mb, mc) in [(0usize, &zero_b, &zero_c), (1usize, &one, &one)] {
        for bi in 0..2 {
            for bii in 0..2 {
                for ci in 0..2 {
                    for cii in 0..2 {
                        let idx = (a << 4) | (bi << 3) | (bii << 2) | (ci << 1) | cii;
                        psi[idx] += h * mb[bi][bii] * mc[ci][cii];
                    }
                }
            }
        }
    }

    let mut rho = [[0.0f64; 8]; 8];
    for row in 0..8 {
        for col in 0..8 {
            let (a, bi, ci) = (row >> 2, (row >> 1) & 1, row & 1);
            let (a2, bi2, ci2) = (col >> 2, (col >> 1) & 1, col & 1);
            let mut acc = 0.0;
            for bii in 0..2 {
                for cii in 0..2 {
                    let i = (a << 4) | (bi << 3) | (bii << 2) | (ci << 1) | cii;
                    let j = (a2 << 4) | (bi2 << 3) | (bii << 2) | (ci2 << 1) | cii;
                    acc += psi[i] * psi[j];
                }
            }
            rho[row][col] = acc;
        }
    }
    rho
}

/// Negativity of a GHZ-type X state (populations `d`, one real coherence `x`
/// between |000> and |111>) after transposing the qubits set in `mask`
/// (4 = A, 2 = B, 1 = C).
///
/// The transpose moves the coherence onto the pair (|mask>, |7 - mask>), so
/// the spectrum is six untouched populations plus one 2x2 block.
pub fn x_state_negativity(d: [f64; 8], x: f64, mask: usize) -> f64 {
    let (u, v) = (mask, 7 - mask);
    let mean = 0.5 * (d[u] + d[v]);
    let half_gap = (0.25 * (d[u] - d[v]).powi(2) + x * x).sqrt();
    let mut eig: Vec<f64> = (0..8).filter(|&k| k != u && k != v).map(|k| d[k]).collect();
    eig.push(mean + half_gap);
    eig.push(mean - half_gap);
    eig.iter().map(|l| l.abs()).sum::<f64>() - 1.0
}

/// Populations and coherence of the noiseless traced state at `rb = rc = r`.
pub fn x_state_params(r: f64) -> ([f64; 8], f64) {
    let (s, c) = r.sin_cos();
    let mut d = [0.0; 8];
    d[0] = c.powi(4) / 2.0;
    d[1] = c * c * s * s / 2.0;
    d[2] = d[1];
    d[3] = s.powi(4) / 2.0;
    d[7] = 0.5;
    (d, c * c / 2.0)
}
