//! Floating-point tolerances shared by state construction and verification.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Agreement of measured and exact values, and vanishing off-diagonals.
    pub equality: f64,
    /// Polygon closure and normalization.
    pub solver: f64,
    /// Bound on `‖μ̂φ - λφ‖`.
    pub criticality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            equality: 1e-10,
            solver: 1e-12,
            criticality: 1e-9,
        }
    }
}

impl Tolerances {
    /// Overrides the equality and criticality bounds with one value.
    pub fn with_bound(bound: f64) -> Self {
        Self {
            equality: bound,
            criticality: bound,
            ..Self::default()
        }
    }
}
