//! Numerical checks on pure states: one-qubit marginals, momentum maps,
//! linear entropy, total variance and the criticality eigenproblem.

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::state_builder::StateVector;
use crate::tolerance::Tolerances;

/// A 2×2 one-qubit density matrix, `m[r][c]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Marginal {
    pub m: [[Complex64; 2]; 2],
}

impl Marginal {
    pub fn trace(&self) -> f64 {
        (self.m[0][0] + self.m[1][1]).re
    }

    pub fn purity(&self) -> f64 {
        let mut s = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                s += (self.m[r][c] * self.m[c][r]).re;
            }
        }
        s
    }

    pub fn offdiag(&self) -> f64 {
        self.m[0][1].norm().max(self.m[1][0].norm())
    }

    pub fn hermiticity_error(&self) -> f64 {
        let d = (self.m[0][1] - self.m[1][0].conj()).norm();
        d.max(self.m[0][0].im.abs()).max(self.m[1][1].im.abs())
    }

    /// Closed-form eigenvalues `(min, max)` from trace and determinant.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let t = self.trace();
        let det = (self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]).re;
        let disc = (t * t / 4.0 - det).max(0.0).sqrt();
        (t / 2.0 - disc, t / 2.0 + disc)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarginalSet {
    pub marginals: Vec<Marginal>,
}

impl MarginalSet {
    pub fn len(&self) -> usize {
        self.marginals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marginals.is_empty()
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.marginals.iter().all(|m| {
            (m.trace() - 1.0).abs() <= tol
                && m.hermiticity_error() <= tol
                && m.eigenvalues().0 >= -tol
        })
    }

    pub fn offdiag_max(&self) -> f64 {
        self.marginals
            .iter()
            .map(Marginal::offdiag)
            .fold(0.0, f64::max)
    }

    pub fn purity_sum(&self) -> f64 {
        self.marginals.iter().map(Marginal::purity).sum()
    }
}

fn mask(l: usize, k: usize) -> usize {
    1 << (l - 1 - k)
}

pub fn marginals(state: &StateVector) -> MarginalSet {
    let l = state.qubits();
    let amps = state.amplitudes();
    let marginals = (0..l)
        .map(|k| {
            let bit = mask(l, k);
            let mut m = [[Complex64::zero(); 2]; 2];
            for (b, a) in amps.iter().enumerate() {
                if b & bit != 0 {
                    continue;
                }
                let a1 = amps[b | bit];
                m[0][0] += a.norm_sqr();
                m[1][1] += a1.norm_sqr();
                m[0][1] += a * a1.conj();
            }
            m[1][0] = m[0][1].conj();
            Marginal { m }
        })
        .collect();
    MarginalSet { marginals }
}

/// `β_k = (ρ_k)_{11} - 1/2`.
pub fn momentum_abelian(state: &StateVector) -> Vec<f64> {
    marginals(state)
        .marginals
        .iter()
        .map(|m| m.m[1][1].re - 0.5)
        .collect()
}

/// `1 - (1/L) Σ Tr ρ_k²`.
pub fn linear_entropy(state: &StateVector) -> f64 {
    let l = state.qubits() as f64;
    1.0 - marginals(state).purity_sum() / l
}

/// `Σ_k Σ_{P ∈ {X,Y,Z}} (⟨P_k²⟩ - ⟨P_k⟩²)`, from Pauli expectations taken
/// directly on the amplitudes.
pub fn total_variance(state: &StateVector) -> f64 {
    let l = state.qubits();
    let amps = state.amplitudes();
    let mut var = 0.0;
    for k in 0..l {
        let bit = mask(l, k);
        let (mut x, mut y, mut z) = (0.0, 0.0, 0.0);
        for (b, a) in amps.iter().enumerate() {
            let flipped = amps[b ^ bit];
            // X|0> = |1>, Y|0> = i|1>, Y|1> = -i|0>
            x += (a.conj() * flipped).re;
            let i_sign = if b & bit == 0 { -1.0 } else { 1.0 };
            y += (a.conj() * flipped * Complex64::new(0.0, i_sign)).re;
            z += if b & bit == 0 {
                a.norm_sqr()
            } else {
                -a.norm_sqr()
            };
        }
        var += 3.0 - (x * x + y * y + z * z);
    }
    var
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Criticality {
    pub residual: f64,
    pub eigenvalue: f64,
}

/// `‖μ̂φ - λφ‖` with `μ̂ = Σ_k (ρ_k - I/2)` acting on qubit `k` and
/// `λ = ⟨φ|μ̂|φ⟩`.
pub fn criticality_residual(state: &StateVector) -> Criticality {
    let l = state.qubits();
    let amps = state.amplitudes();
    let ms = marginals(state);
    let mut out = vec![Complex64::zero(); amps.len()];
    for (k, marg) in ms.marginals.iter().enumerate() {
        let bit = mask(l, k);
        let mut op = marg.m;
        op[0][0] -= 0.5;
        op[1][1] -= 0.5;
        for (b, o) in out.iter_mut().enumerate() {
            let r = usize::from(b & bit != 0);
            let b0 = b & !bit;
            *o += op[r][0] * amps[b0] + op[r][1] * amps[b0 | bit];
        }
    }
    let lambda: Complex64 = amps.iter().zip(&out).map(|(a, o)| a.conj() * o).sum();
    let residual = out
        .iter()
        .zip(amps)
        .map(|(o, a)| (o - lambda.re * a).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Criticality {
        residual,
        eigenvalue: lambda.re,
    }
}

/// `λ_k = 1/2 - (smallest eigenvalue of ρ_k)`.
pub fn shifted_spectra(m: &MarginalSet) -> Vec<f64> {
    m.marginals
        .iter()
        .map(|r| 0.5 - r.eigenvalues().0)
        .collect()
}

/// `1/2 - λ_i ≤ Σ_{j≠i} (1/2 - λ_j)` for every `i`, with slack `tol`.
pub fn polytope_membership(lambdas: &[f64], tol: f64) -> bool {
    let gaps: Vec<f64> = lambdas.iter().map(|l| 0.5 - l).collect();
    let total: f64 = gaps.iter().sum();
    gaps.iter().all(|&g| g <= total - g + tol)
}

/// Expected values for a state built for a known critical point.
#[derive(Debug, Clone, PartialEq)]
pub struct Expectation {
    pub beta: Vec<f64>,
    pub entropy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub beta_measured: Vec<f64>,
    pub beta_expected: Option<Vec<f64>>,
    pub entropy_measured: f64,
    pub entropy_expected: Option<f64>,
    pub eigen_residual: f64,
    pub eigenvalue: f64,
    pub offdiag_max: f64,
    pub pass: bool,
}

/// Runs every check. Without an expectation a state passes iff it is
/// critical; with one, its abelian momentum, entropy and diagonality must
/// match as well.
pub fn verify_state(
    state: &StateVector,
    expected: Option<&Expectation>,
    tol: &Tolerances,
) -> VerificationReport {
    let ms = marginals(state);
    let beta_measured: Vec<f64> = ms.marginals.iter().map(|m| m.m[1][1].re - 0.5).collect();
    let entropy_measured = 1.0 - ms.purity_sum() / state.qubits() as f64;
    let crit = criticality_residual(state);
    let offdiag_max = ms.offdiag_max();
    let mut pass = crit.residual < tol.criticality && ms.is_valid(tol.equality);
    if let Some(e) = expected {
        pass &= e.beta.len() == beta_measured.len()
            && e.beta
                .iter()
                .zip(&beta_measured)
                .all(|(a, b)| (a - b).abs() < tol.equality)
            && (e.entropy - entropy_measured).abs() < tol.equality
            && offdiag_max < tol.equality;
    }
    VerificationReport {
        beta_measured,
        beta_expected: expected.map(|e| e.beta.clone()),
        entropy_measured,
        entropy_expected: expected.map(|e| e.entropy),
        eigen_residual: crit.residual,
        eigenvalue: crit.eigenvalue,
        offdiag_max,
        pass,
    }
}
