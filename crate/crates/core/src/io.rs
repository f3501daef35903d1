//! JSON and CSV persistence for results, states and reports.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerator::{CriticalPoint, Enumeration};
use crate::exact::{self, Rational};
use crate::hypercube::{canonicalize, CanonicalBeta};
use crate::state_builder::{Route, StateError, StateVector};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<StateError> for IoError {
    fn from(e: StateError) -> Self {
        IoError::Malformed(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub beta: CanonicalBeta,
    #[serde(with = "exact::serde_rational")]
    pub norm_sq: Rational,
    #[serde(with = "exact::serde_rational")]
    pub entropy: Rational,
    pub boundary: bool,
    #[serde(default)]
    pub witness_vertices: Vec<String>,
    #[serde(default, with = "exact::serde_rational::vec")]
    pub witness_coefficients: Vec<Rational>,
}

impl From<&CriticalPoint> for PointRecord {
    fn from(p: &CriticalPoint) -> Self {
        let w = p.witness();
        Self {
            beta: p.beta.clone(),
            norm_sq: p.norm_sq.clone(),
            entropy: p.entropy.clone(),
            boundary: p.boundary,
            witness_vertices: w.labels(),
            witness_coefficients: w.a.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultsFile {
    pub qubits: usize,
    pub critical_points: Vec<PointRecord>,
}

impl ResultsFile {
    pub fn from_enumeration(e: &Enumeration) -> Self {
        Self {
            qubits: e.qubits,
            critical_points: e.points.iter().map(PointRecord::from).collect(),
        }
    }

    /// Parses and checks that every β has the stated length and is canonical.
    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let f: ResultsFile = serde_json::from_str(text)?;
        for p in &f.critical_points {
            if p.beta.qubits() != f.qubits {
                return Err(IoError::Malformed(format!(
                    "beta {} does not have {} components",
                    p.beta, f.qubits
                )));
            }
            if canonicalize(p.beta.components()) != p.beta {
                return Err(IoError::Malformed(format!(
                    "beta {} is not canonical",
                    p.beta
                )));
            }
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("results serialize");
        s.push('\n');
        s
    }

    pub fn betas(&self) -> Vec<CanonicalBeta> {
        self.critical_points
            .iter()
            .map(|p| p.beta.clone())
            .collect()
    }
}

/// Columns `qubits,beta,norm_sq,entropy`; β components joined by `;`.
pub fn write_csv<W: Write>(qubits: usize, points: &[CriticalPoint], out: W) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["qubits", "beta", "norm_sq", "entropy"])
        .map_err(csv_err)?;
    for p in points {
        w.write_record([
            qubits.to_string(),
            p.beta.to_strings().join(";"),
            exact::format_rational(&p.norm_sq),
            exact::format_rational(&p.entropy),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> IoError {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => IoError::Io(e),
        other => IoError::Malformed(format!("{other:?}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateMeta {
    pub beta: CanonicalBeta,
    #[serde(with = "exact::serde_rational")]
    pub entropy: Rational,
    pub route: Route,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub qubits: usize,
    pub amplitudes: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<StateMeta>,
}

impl StateFile {
    pub fn new(state: &StateVector, meta: Option<StateMeta>) -> Self {
        Self {
            qubits: state.qubits(),
            amplitudes: state.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
            meta,
        }
    }

    /// Validated state; an unnormalized or mis-sized file is `Malformed`.
    pub fn state(&self) -> Result<StateVector, IoError> {
        let amps = self
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        Ok(StateVector::new(self.qubits, amps)?)
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let f: StateFile = serde_json::from_str(text)?;
        f.state()?;
        if let Some(m) = &f.meta {
            if m.beta.qubits() != f.qubits {
                return Err(IoError::Malformed(
                    "meta beta length differs from qubits".into(),
                ));
            }
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("state serializes");
        s.push('\n');
        s
    }
}
