//! Single-qubit gate matrices in the fixed rotation conventions
//! `RY(θ) = exp(−iθσʸ/2)`, `RZ(α) = exp(−iασᶻ/2)`, `RX(θ) = exp(−iθσˣ/2)`.

use num_complex::Complex64;

pub type Matrix2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn identity() -> Matrix2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

pub fn ry(theta: f64) -> Matrix2 {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
    ]
}

pub fn rz(alpha: f64) -> Matrix2 {
    [
        [Complex64::from_polar(1.0, -alpha / 2.0), ZERO],
        [ZERO, Complex64::from_polar(1.0, alpha / 2.0)],
    ]
}

pub fn rx(theta: f64) -> Matrix2 {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        [Complex64::new(c, 0.0), Complex64::new(0.0, -s)],
        [Complex64::new(0.0, -s), Complex64::new(c, 0.0)],
    ]
}

pub fn hadamard() -> Matrix2 {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [[h, h], [h, -h]]
}

/// Phase gate `diag(1, e^{iφ})`.
pub fn phase(phi: f64) -> Matrix2 {
    [[ONE, ZERO], [ZERO, Complex64::from_polar(1.0, phi)]]
}

pub fn pauli_x() -> Matrix2 {
    [[ZERO, ONE], [ONE, ZERO]]
}

pub fn pauli_y() -> Matrix2 {
    [
        [ZERO, Complex64::new(0.0, -1.0)],
        [Complex64::new(0.0, 1.0), ZERO],
    ]
}

pub fn pauli_z() -> Matrix2 {
    [[ONE, ZERO], [ZERO, -ONE]]
}

/// Frobenius norm of `u†u − 1`; zero for an exact unitary.
pub fn unitarity_defect(u: &Matrix2) -> f64 {
    let mut sum = 0.0;
    for row in 0..2 {
        for col in 0..2 {
            // (u†u)[row][col] = Σ_k conj(u[k][row]) u[k][col]
            let mut entry = ZERO;
            for k in 0..2 {
                entry += u[k][row].conj() * u[k][col];
            }
            if row == col {
                entry -= ONE;
            }
            sum += entry.norm_sqr();
        }
    }
    sum.sqrt()
}
