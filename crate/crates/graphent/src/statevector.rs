//! Dense statevector simulation: product-state initialization, gate
//! application, graph-state preparation, exact Pauli expectations, and the
//! reduced-density-matrix route to the entanglement of one qubit with the
//! rest.
//!
//! Qubit `k` is the k-th least significant bit of the amplitude index, so
//! `q[0]` is the fastest-varying bit. All arithmetic is `f64` complex.

use std::f64::consts::PI;
use std::io::{Read, Write};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;

use crate::gates::{self, Matrix2};
use crate::graph::Graph;
use crate::{Error, Result};

/// Default cap on the register size (2^24 amplitudes, 256 MiB of doubles).
pub const DEFAULT_MAX_QUBITS: usize = 24;

static MAX_QUBITS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_QUBITS);

/// Current cap on the number of qubits a statevector may hold.
pub fn max_qubits() -> usize {
    MAX_QUBITS.load(Ordering::Relaxed)
}

/// Override the register-size cap process-wide.
pub fn set_max_qubits(cap: usize) {
    MAX_QUBITS.store(cap, Ordering::Relaxed);
}

const UNITARITY_TOL: f64 = 1e-10;
const NORM_TOL: f64 = 1e-10;

/// A Pauli axis label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            other => Err(Error::Invalid(format!("unknown axis `{other}`"))),
        }
    }
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// The preparation triple `(φ, α, θ)`: controlled-phase angle, relative
/// phase, and polar angle of the one-qubit state.
///
/// Construction reduces the angles to canonical ranges `θ ∈ [0, π]`,
/// `φ ∈ [0, 2π)`, `α ∈ [0, 2π)`. A `θ` beyond `π` is reflected
/// (`θ → 2π − θ`) with the compensating `π` shift absorbed into `α`, which
/// leaves the prepared state unchanged up to global phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrepParams {
    phi: f64,
    alpha: f64,
    theta: f64,
}

impl PrepParams {
    pub fn new(phi: f64, alpha: f64, theta: f64) -> Result<Self> {
        if !(phi.is_finite() && alpha.is_finite() && theta.is_finite()) {
            return Err(Error::Invalid("preparation angles must be finite".into()));
        }
        let tau = 2.0 * PI;
        let mut theta = theta.rem_euclid(tau);
        let mut alpha = alpha;
        if theta > PI {
            theta = tau - theta;
            alpha += PI;
        }
        Ok(PrepParams {
            phi: phi.rem_euclid(tau),
            alpha: alpha.rem_euclid(tau),
            theta,
        })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Amplitudes `(cos(θ/2), e^{iα} sin(θ/2))` of the one-qubit state.
    pub fn qubit_amplitudes(&self) -> (Complex64, Complex64) {
        let (s, c) = (self.theta / 2.0).sin_cos();
        (
            Complex64::new(c, 0.0),
            Complex64::from_polar(1.0, self.alpha) * s,
        )
    }
}

/// 2^n complex amplitudes of an n-qubit pure state.
#[derive(Clone, Debug)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

fn check_register_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("registers need at least one qubit".into()));
    }
    let cap = max_qubits();
    if n > cap {
        return Err(Error::TooManyQubits { requested: n, cap });
    }
    Ok(())
}

impl StateVector {
    /// The all-zeros state |0…0⟩ on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        check_register_size(n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits: n, amps })
    }

    /// The product state `⊗ (cos(θ/2)|0⟩ + e^{iα} sin(θ/2)|1⟩)` on `n`
    /// qubits. The per-qubit global phase `e^{iα/2}` of the RZ·RY
    /// preparation is omitted.
    pub fn product(n: usize, p: &PrepParams) -> Result<Self> {
        check_register_size(n)?;
        let (a0, a1) = p.qubit_amplitudes();
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for _ in 0..n {
            let half = amps.len();
            let mut next = vec![Complex64::new(0.0, 0.0); half * 2];
            for (idx, val) in amps.iter().enumerate() {
                next[idx] = val * a0;
                next[idx | half] = val * a1;
            }
            amps = next;
        }
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Prepare the graph state: the product state with one controlled-phase
    /// gate `CP(φ)` applied per edge. The gates are diagonal and commute, so
    /// edge order is irrelevant.
    pub fn graph_state(g: &Graph, p: &PrepParams) -> Result<Self> {
        let mut state = StateVector::product(g.n_vertices(), p)?;
        for (i, j) in g.edges() {
            state.apply_controlled_phase(i, j, p.phi())?;
        }
        Ok(state)
    }

    /// Wrap raw amplitudes, validating the power-of-two length and the norm.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::Invalid(format!(
                "amplitude count {} is not a power of two",
                amps.len()
            )));
        }
        let n_qubits = amps.len().trailing_zeros() as usize;
        check_register_size(n_qubits.max(1))?;
        let state = StateVector { n_qubits, amps };
        let norm = state.norm_sqr();
        if !((norm - 1.0).abs() < NORM_TOL) {
            return Err(Error::Invalid(format!(
                "state is not normalized: Σ|amplitude|² = {norm}"
            )));
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                qubit: q,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Apply a single-qubit unitary to qubit `q`.
    pub fn apply_single_qubit(&mut self, q: usize, u: &Matrix2) -> Result<()> {
        self.check_qubit(q)?;
        if gates::unitarity_defect(u) > UNITARITY_TOL {
            return Err(Error::Invalid(
                "matrix is not unitary within 1e-10".into(),
            ));
        }
        let mask = 1usize << q;
        let mut base = 0;
        while base < self.amps.len() {
            for i0 in base..base + mask {
                let i1 = i0 | mask;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = u[0][0] * a0 + u[0][1] * a1;
                self.amps[i1] = u[1][0] * a0 + u[1][1] * a1;
            }
            base += mask << 1;
        }
        Ok(())
    }

    /// Multiply every |…1ᵢ…1ⱼ…⟩ amplitude by `e^{iφ}`. Symmetric in (i, j).
    pub fn apply_controlled_phase(&mut self, i: usize, j: usize, phi: f64) -> Result<()> {
        self.check_qubit(i)?;
        self.check_qubit(j)?;
        if i == j {
            return Err(Error::Invalid(format!(
                "controlled-phase control and target coincide (qubit {i})"
            )));
        }
        let mask = (1usize << i) | (1usize << j);
        let phase = Complex64::from_polar(1.0, phi);
        for (idx, a) in self.amps.iter_mut().enumerate() {
            if idx & mask == mask {
                *a *= phase;
            }
        }
        Ok(())
    }

    /// Exact `⟨ψ|σ^axis_q|ψ⟩` by direct amplitude summation.
    pub fn pauli_expectation(&self, q: usize, axis: Axis) -> Result<f64> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        let mut acc = Complex64::new(0.0, 0.0);
        match axis {
            Axis::Z => {
                for (idx, a) in self.amps.iter().enumerate() {
                    let p = a.norm_sqr();
                    acc.re += if idx & mask == 0 { p } else { -p };
                }
            }
            Axis::X => {
                for (idx, a) in self.amps.iter().enumerate() {
                    acc += a.conj() * self.amps[idx ^ mask];
                }
            }
            Axis::Y => {
                let minus_i = Complex64::new(0.0, -1.0);
                let plus_i = Complex64::new(0.0, 1.0);
                for (idx, a) in self.amps.iter().enumerate() {
                    let factor = if idx & mask == 0 { minus_i } else { plus_i };
                    acc += a.conj() * factor * self.amps[idx ^ mask];
                }
            }
        }
        // The quadratic form of a Hermitian operator; any imaginary residue
        // is floating noise.
        debug_assert!(acc.im.abs() < 1e-10);
        Ok(acc.re)
    }

    /// Partial trace over every qubit except `q`: a 2×2 Hermitian matrix of
    /// unit trace.
    pub fn reduced_density_matrix(&self, q: usize) -> Result<Matrix2> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        let mut r00 = 0.0;
        let mut r11 = 0.0;
        let mut r01 = Complex64::new(0.0, 0.0);
        let mut base = 0;
        while base < self.amps.len() {
            for i0 in base..base + mask {
                let a0 = self.amps[i0];
                let a1 = self.amps[i0 | mask];
                r00 += a0.norm_sqr();
                r11 += a1.norm_sqr();
                r01 += a0 * a1.conj();
            }
            base += mask << 1;
        }
        Ok([
            [Complex64::new(r00, 0.0), r01],
            [r01.conj(), Complex64::new(r11, 0.0)],
        ])
    }

    /// Geometric measure of entanglement of qubit `q` with the rest:
    /// `½(1 − √(⟨σˣ⟩² + ⟨σʸ⟩² + ⟨σᶻ⟩²))`, clamped at zero against rounding.
    pub fn exact_entanglement(&self, q: usize) -> Result<f64> {
        let x = self.pauli_expectation(q, Axis::X)?;
        let y = self.pauli_expectation(q, Axis::Y)?;
        let z = self.pauli_expectation(q, Axis::Z)?;
        let mean_spin = (x * x + y * y + z * z).sqrt();
        Ok((0.5 * (1.0 - mean_spin)).max(0.0))
    }

    /// Marginal probability that a standard-basis measurement of qubit `q`
    /// yields 0.
    pub fn probability_zero(&self, q: usize) -> Result<f64> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(idx, _)| idx & mask == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::Invalid(format!(
                "qubit counts differ: {} vs {}",
                self.n_qubits, other.n_qubits
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Debug-fixture dump: a little-endian u32 qubit count followed by 2^n
    /// `(re, im)` f64 pairs.
    pub fn dump(&self, w: &mut impl Write) -> Result<()> {
        w.write_all(&(self.n_qubits as u32).to_le_bytes())?;
        for a in &self.amps {
            w.write_all(&a.re.to_le_bytes())?;
            w.write_all(&a.im.to_le_bytes())?;
        }
        Ok(())
    }

    /// Read a dump back. Rejects oversized registers, short reads, trailing
    /// bytes, and non-normalized data.
    pub fn load(r: &mut impl Read) -> Result<Self> {
        let mut header = [0u8; 4];
        r.read_exact(&mut header)?;
        let n = u32::from_le_bytes(header) as usize;
        check_register_size(n)?;
        let mut amps = Vec::with_capacity(1 << n);
        let mut buf = [0u8; 16];
        for _ in 0..1usize << n {
            r.read_exact(&mut buf)?;
            let re = f64::from_le_bytes(buf[..8].try_into().unwrap());
            let im = f64::from_le_bytes(buf[8..].try_into().unwrap());
            amps.push(Complex64::new(re, im));
        }
        if r.read(&mut buf[..1])? != 0 {
            return Err(Error::Invalid("trailing bytes after statevector dump".into()));
        }
        Self::from_amplitudes(amps)
    }
}
