//! Explicit critical states for accepted critical points.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerator::{find_witness, CriticalPoint, MinimalCombination};
use crate::exact::{self, Rational};
use crate::hypercube::{self, WeightVertex};
use crate::tolerance::Tolerances;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    #[error("state of {qubits} qubits needs {expected} amplitudes, got {got}")]
    WrongLength {
        qubits: usize,
        expected: usize,
        got: usize,
    },
    #[error("qubit count {0} out of range")]
    QubitsOutOfRange(usize),
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("amplitudes contain a non-finite value")]
    NonFinite,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("beta has a zero component; use the boundary construction")]
    ZeroComponent,
    #[error("beta has no zero component; use the interior construction")]
    NoZeroComponent,
    #[error("beta has a negative component")]
    NegativeComponent,
    #[error("polygon with sides {0:?} cannot be closed")]
    Infeasible(Vec<f64>),
    #[error("beta is not a minimal combination of weights")]
    NoWitness,
}

/// A pure state on `qubits` qubits; qubit 1 is the most significant bit of
/// the basis index.
#[derive(Clone, PartialEq)]
pub struct StateVector {
    qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Validates length and normalization (within `1e-12`).
    pub fn new(qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self, StateError> {
        if !(1..=hypercube::MAX_QUBITS).contains(&qubits) {
            return Err(StateError::QubitsOutOfRange(qubits));
        }
        let expected = 1usize << qubits;
        if amplitudes.len() != expected {
            return Err(StateError::WrongLength {
                qubits,
                expected,
                got: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(StateError::NonFinite);
        }
        let s = Self { qubits, amplitudes };
        let n = s.norm();
        if (n - 1.0).abs() > Tolerances::default().solver {
            return Err(StateError::NotNormalized(n));
        }
        Ok(s)
    }

    /// Builds a state from `(basis index, amplitude)` terms and normalizes it.
    pub fn from_terms(qubits: usize, terms: &[(u32, Complex64)]) -> Result<Self, StateError> {
        if !(1..=hypercube::MAX_QUBITS).contains(&qubits) {
            return Err(StateError::QubitsOutOfRange(qubits));
        }
        let mut amps = vec![Complex64::zero(); 1 << qubits];
        for &(b, a) in terms {
            amps[b as usize] += a;
        }
        let n = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(StateError::NotNormalized(n));
        }
        for a in &mut amps {
            *a /= n;
        }
        Ok(Self {
            qubits,
            amplitudes: amps,
        })
    }

    pub fn basis(qubits: usize, index: u32) -> Result<Self, StateError> {
        Self::from_terms(qubits, &[(index, Complex64::new(1.0, 0.0))])
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: u32) -> Complex64 {
        self.amplitudes[index as usize]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.qubits, other.qubits);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Basis indices with amplitude above `tol` in modulus.
    pub fn support(&self, tol: f64) -> Vec<u32> {
        (0..self.amplitudes.len() as u32)
            .filter(|&i| self.amplitudes[i as usize].norm() > tol)
            .collect()
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if a.norm() < 1e-14 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)|{:0w$b}>", a.re, a.im, i, w = self.qubits)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The `√a` superposition over the witness labels.
pub fn interior_state(mc: &MinimalCombination) -> Result<StateVector, ConstructionError> {
    if mc.beta.iter().any(Signed::is_negative) {
        return Err(ConstructionError::NegativeComponent);
    }
    if mc.beta.iter().any(Zero::is_zero) {
        return Err(ConstructionError::ZeroComponent);
    }
    Ok(superposition(mc))
}

fn superposition(mc: &MinimalCombination) -> StateVector {
    let terms: Vec<(u32, Complex64)> = mc
        .subset
        .iter()
        .zip(&mc.a)
        .map(|(v, a)| (v.bits(), Complex64::new(exact::to_f64(a).sqrt(), 0.0)))
        .collect();
    StateVector::from_terms(mc.qubits(), &terms).expect("convex weights are nonzero")
}

/// All vertices `α` with `α·β = ‖β‖²`, in increasing label order.
pub fn support_vertices(beta: &[Rational]) -> Vec<WeightVertex> {
    let Ok(all) = hypercube::vertices(beta.len()) else {
        return Vec::new();
    };
    let n2 = exact::norm_sq(beta);
    all.into_iter()
        .filter(|v| exact::dot(beta, &v.coordinates()) == n2)
        .collect()
}

/// Sides `b_j` and per-side sign patterns `σ_j ∈ {±1}^M` of the closure
/// condition `Σ_j b_j exp(i σ_j·φ) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonProblem {
    pub lengths: Vec<f64>,
    pub signs: Vec<Vec<i8>>,
}

impl PolygonProblem {
    pub fn new(lengths: Vec<f64>, signs: Vec<Vec<i8>>) -> Self {
        assert_eq!(lengths.len(), signs.len());
        assert!(signs.windows(2).all(|w| w[0].len() == w[1].len()));
        Self { lengths, signs }
    }

    /// Sides from the vertices of a witness; sign `+1` for bit 1.
    pub fn from_vertices(lengths: Vec<f64>, vertices: &[WeightVertex]) -> Self {
        let signs = vertices
            .iter()
            .map(|v| (0..v.qubits()).map(|k| v.sign(k) as i8).collect())
            .collect();
        Self::new(lengths, signs)
    }

    pub fn dimension(&self) -> usize {
        self.signs.first().map_or(0, Vec::len)
    }

    pub fn satisfies_inequality(&self, tol: f64) -> bool {
        let total: f64 = self.lengths.iter().sum();
        self.lengths.len() >= 2 && self.lengths.iter().all(|&b| b <= total - b + tol)
    }

    /// `γ_j = σ_j·φ` for every side.
    pub fn angles(&self, phases: &[f64]) -> Vec<f64> {
        self.signs
            .iter()
            .map(|s| s.iter().zip(phases).map(|(&x, p)| f64::from(x) * p).sum())
            .collect()
    }

    pub fn closure(&self, phases: &[f64]) -> Complex64 {
        self.lengths
            .iter()
            .zip(self.angles(phases))
            .map(|(&b, g)| Complex64::from_polar(b, g))
            .sum()
    }
}

/// Directions of the sides of a closed polygon with the given side lengths,
/// first side at angle 0, sides laid out in the given order.
///
/// The largest side and two groups of the others (balanced greedily) form a
/// possibly degenerate triangle; each group runs along one triangle edge.
pub fn polygon_angles(lengths: &[f64], tol: f64) -> Option<Vec<f64>> {
    let n = lengths.len();
    let total: f64 = lengths.iter().sum();
    if n < 2 || lengths.iter().any(|&b| b <= 0.0 || b > total - b + tol) {
        return None;
    }
    let big = (0..n)
        .max_by(|&i, &j| lengths[i].total_cmp(&lengths[j]).then(j.cmp(&i)))
        .unwrap();
    let mut rest: Vec<usize> = (0..n).filter(|&i| i != big).collect();
    rest.sort_by(|&i, &j| lengths[j].total_cmp(&lengths[i]).then(i.cmp(&j)));
    let mut group = vec![0u8; n];
    let (mut s1, mut s2) = (0.0, 0.0);
    for &i in &rest {
        if s1 <= s2 {
            group[i] = 1;
            s1 += lengths[i];
        } else {
            group[i] = 2;
            s2 += lengths[i];
        }
    }
    let a = lengths[big];
    // interior angle between the big side and the first group's edge
    let cos = ((a * a + s1 * s1 - s2 * s2) / (2.0 * a * s1)).clamp(-1.0, 1.0);
    let t1 = PI - cos.acos();
    let v = -(Complex64::new(a, 0.0) + Complex64::from_polar(s1, t1));
    let t2 = if s2 > 0.0 { v.arg() } else { 0.0 };
    let dir = |i: usize| match group[i] {
        0 => 0.0,
        1 => t1,
        _ => t2,
    };
    let base = dir(0);
    Some(
        (0..n)
            .map(|i| (dir(i) - base).rem_euclid(2.0 * PI))
            .collect(),
    )
}

/// Phases `φ` with `|Σ_j b_j exp(i σ_j·φ)|` below the solver tolerance.
///
/// Closed polygon angles are pulled back through the sign patterns by a
/// minimum-norm solve of `(σ_j - σ_1)·φ = γ_j - γ_1`, then polished by
/// Gauss-Newton. Deterministic restarts are tried if that stalls.
pub fn solve_polygon_phases(
    p: &PolygonProblem,
    tol: &Tolerances,
) -> Result<Vec<f64>, ConstructionError> {
    let infeasible = || ConstructionError::Infeasible(p.lengths.clone());
    if !p.satisfies_inequality(tol.solver) {
        return Err(infeasible());
    }
    let m = p.dimension();
    let total: f64 = p.lengths.iter().sum();
    let lengths: Vec<f64> = p.lengths.iter().map(|b| b / total).collect();
    let scaled = PolygonProblem::new(lengths.clone(), p.signs.clone());

    let mut starts = Vec::new();
    if let Some(gamma) = polygon_angles(&lengths, tol.solver) {
        let rows: Vec<Vec<f64>> = p.signs[1..]
            .iter()
            .map(|s| {
                s.iter()
                    .zip(&p.signs[0])
                    .map(|(&a, &b)| f64::from(a - b))
                    .collect()
            })
            .collect();
        let rhs: Vec<f64> = gamma[1..].iter().map(|g| g - gamma[0]).collect();
        if let Some(phi) = min_norm_solve(&rows, &rhs, m) {
            starts.push(phi);
        }
    }
    for r in 0..32u32 {
        starts.push(
            (0..m)
                .map(|k| {
                    ((r as f64 + 1.0) * 0.618_033_988_75 * (k as f64 + 1.0) * 2.0 * PI)
                        .rem_euclid(2.0 * PI)
                })
                .collect(),
        );
    }
    for start in starts {
        if let Some(phi) = gauss_newton(&scaled, start, tol.solver) {
            return Ok(phi);
        }
    }
    Err(infeasible())
}

/// Least-norm `x` with `A x = b` for full-row-rank `A`.
fn min_norm_solve(rows: &[Vec<f64>], rhs: &[f64], m: usize) -> Option<Vec<f64>> {
    let r = rows.len();
    if r == 0 {
        return Some(vec![0.0; m]);
    }
    let mut g: Vec<Vec<f64>> = (0..r)
        .map(|i| {
            let mut row: Vec<f64> = (0..r)
                .map(|j| rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum())
                .collect();
            row.push(rhs[i]);
            row
        })
        .collect();
    let y = gauss(&mut g)?;
    Some(
        (0..m)
            .map(|k| (0..r).map(|i| rows[i][k] * y[i]).sum())
            .collect(),
    )
}

/// Solves an augmented `n × (n+1)` system in place.
fn gauss(a: &mut [Vec<f64>]) -> Option<Vec<f64>> {
    let n = a.len();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[piv][c].abs() < 1e-12 {
            return None;
        }
        a.swap(c, piv);
        let pivot = a[c].clone();
        for row in &mut a[c + 1..n] {
            let f = row[c] / pivot[c];
            for (x, p) in row[c..=n].iter_mut().zip(&pivot[c..=n]) {
                *x -= f * p;
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (a[i][n] - s) / a[i][i];
    }
    Some(x)
}

fn gauss_newton(p: &PolygonProblem, mut phi: Vec<f64>, tol: f64) -> Option<Vec<f64>> {
    let m = phi.len();
    for _ in 0..100 {
        let f = p.closure(&phi);
        if f.norm() < tol {
            return Some(phi.iter().map(|x| x.rem_euclid(2.0 * PI)).collect());
        }
        // Jacobian rows: d Re f / dφ_k and d Im f / dφ_k
        let angles = p.angles(&phi);
        let mut jr = vec![0.0; m];
        let mut ji = vec![0.0; m];
        for ((&b, s), g) in p.lengths.iter().zip(&p.signs).zip(&angles) {
            for k in 0..m {
                let d = b * f64::from(s[k]);
                jr[k] -= d * g.sin();
                ji[k] += d * g.cos();
            }
        }
        let step = min_norm_solve(&[jr, ji], &[-f.re, -f.im], m)?;
        for (x, d) in phi.iter_mut().zip(step) {
            *x += d;
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Interior,
    Boundary,
}

#[derive(Debug, Clone)]
pub struct BoundaryConstruction {
    pub state: StateVector,
    /// The witness of the stripped point on the positive qubits.
    pub witness: MinimalCombination,
    /// Phases of the local torus element on the positive qubits; empty when
    /// no rotation was needed.
    pub phases: Vec<f64>,
    /// `γ_j` relative to the first side, in the order of `witness.subset`.
    pub angles: Vec<f64>,
}

/// Two-block construction `(Ψ⊗|0…0⟩ + k.Ψ⊗|1…1⟩)/√2` with the blocks on the
/// zero coordinates of `beta`.
pub fn boundary_state(
    beta: &[Rational],
    tol: &Tolerances,
) -> Result<BoundaryConstruction, ConstructionError> {
    if beta.iter().any(Signed::is_negative) {
        return Err(ConstructionError::NegativeComponent);
    }
    let l = beta.len();
    let positive: Vec<usize> = (0..l).filter(|&k| !beta[k].is_zero()).collect();
    let zero: Vec<usize> = (0..l).filter(|&k| beta[k].is_zero()).collect();
    if zero.is_empty() {
        return Err(ConstructionError::NoZeroComponent);
    }
    let m = positive.len();
    let sqrt_half = std::f64::consts::FRAC_1_SQRT_2;

    if m == 0 {
        let all = (1u32 << l) - 1;
        let state = StateVector::from_terms(
            l,
            &[
                (0, Complex64::new(sqrt_half, 0.0)),
                (all, Complex64::new(sqrt_half, 0.0)),
            ],
        )
        .expect("two-term state");
        let witness = find_witness(beta).ok_or(ConstructionError::NoWitness)?;
        return Ok(BoundaryConstruction {
            state,
            witness,
            phases: Vec::new(),
            angles: Vec::new(),
        });
    }

    let reduced: Vec<Rational> = positive.iter().map(|&k| beta[k].clone()).collect();
    let mut witness = find_witness(&reduced).ok_or(ConstructionError::NoWitness)?;
    // sides laid out by descending label
    let mut order: Vec<usize> = (0..witness.subset.len()).collect();
    order.sort_by(|&i, &j| witness.subset[j].bits().cmp(&witness.subset[i].bits()));
    witness.subset = order.iter().map(|&i| witness.subset[i]).collect();
    witness.a = order.iter().map(|&i| witness.a[i].clone()).collect();

    let lengths: Vec<f64> = witness.a.iter().map(exact::to_f64).collect();
    let problem = PolygonProblem::from_vertices(lengths.clone(), &witness.subset);
    let (phases, angles) = match solve_polygon_phases(&problem, tol) {
        Ok(phi) => {
            let g = problem.angles(&phi);
            let rel = g.iter().map(|x| (x - g[0]).rem_euclid(2.0 * PI)).collect();
            (phi, rel)
        }
        // with two or more zero coordinates the blocks are already orthogonal
        // on every marginal, so no rotation is needed
        Err(_) if zero.len() >= 2 => (Vec::new(), vec![0.0; lengths.len()]),
        Err(e) => return Err(e),
    };

    let tail_ones: u32 = zero.iter().map(|&k| 1u32 << (l - 1 - k)).sum();
    let mut terms = Vec::with_capacity(2 * lengths.len());
    for ((v, &b), &g) in witness.subset.iter().zip(&lengths).zip(&angles) {
        let mut head = 0u32;
        for (j, &k) in positive.iter().enumerate() {
            head |= v.bit(j) << (l - 1 - k);
        }
        let amp = (b / 2.0).sqrt();
        terms.push((head, Complex64::new(amp, 0.0)));
        terms.push((head | tail_ones, Complex64::from_polar(amp, g)));
    }
    let state = StateVector::from_terms(l, &terms).expect("nonzero weights");
    Ok(BoundaryConstruction {
        state,
        witness,
        phases,
        angles,
    })
}

#[derive(Debug, Clone)]
pub struct ConstructedState {
    pub state: StateVector,
    pub route: Route,
}

/// A critical state in the fiber over an accepted point.
pub fn construct_state(
    point: &CriticalPoint,
    tol: &Tolerances,
) -> Result<ConstructedState, ConstructionError> {
    if point.boundary {
        let b = boundary_state(point.beta.components(), tol)?;
        Ok(ConstructedState {
            state: b.state,
            route: Route::Boundary,
        })
    } else {
        Ok(ConstructedState {
            state: interior_state(point.witness())?,
            route: Route::Interior,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::solve_subset;
    use crate::exact::{int, rat};

    fn labels(ls: &[&str]) -> Vec<WeightVertex> {
        ls.iter()
            .map(|l| WeightVertex::from_label(l).unwrap())
            .collect()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn w_state_from_w_combination() {
        let mc = solve_subset(&labels(&["110", "101", "011"])).unwrap();
        let s = interior_state(&mc).unwrap();
        let c = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
        for i in 0..8u32 {
            let want = if [0b110, 0b101, 0b011].contains(&i) {
                c
            } else {
                Complex64::zero()
            };
            assert!(close(s.amplitude(i), want), "{i}: {:?}", s.amplitude(i));
        }
    }

    #[test]
    fn separable_interior_state() {
        let mc = solve_subset(&labels(&["1111"])).unwrap();
        let s = interior_state(&mc).unwrap();
        assert!(close(s.amplitude(15), Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn interior_rejects_zero_components() {
        let mc = solve_subset(&labels(&["11", "00"])).unwrap();
        assert_eq!(
            interior_state(&mc).unwrap_err(),
            ConstructionError::ZeroComponent
        );
    }

    #[test]
    fn support_examples() {
        let b = [rat(1, 6), rat(1, 6), rat(1, 6), int(0)];
        let got: Vec<String> = support_vertices(&b)
            .iter()
            .map(WeightVertex::label)
            .collect();
        assert_eq!(got, ["0110", "0111", "1010", "1011", "1100", "1101"]);
        assert_eq!(support_vertices(&vec![rat(1, 2); 3]), labels(&["111"]));
        assert_eq!(support_vertices(&vec![int(0); 3]).len(), 8);
    }

    #[test]
    fn w_polygon_angles() {
        let p = PolygonProblem::from_vertices(vec![1.0 / 3.0; 3], &labels(&["110", "101", "011"]));
        let phi = solve_polygon_phases(&p, &Tolerances::default()).unwrap();
        assert!(p.closure(&phi).norm() < 1e-12);
        let g = p.angles(&phi);
        let rel: Vec<f64> = g.iter().map(|x| (x - g[0]).rem_euclid(2.0 * PI)).collect();
        assert!((rel[1] - 2.0 * PI / 3.0).abs() < 1e-9, "{rel:?}");
        assert!((rel[2] - 4.0 * PI / 3.0).abs() < 1e-9, "{rel:?}");
    }

    #[test]
    fn two_equal_sides_are_antipodal() {
        for pair in [["11", "00"], ["10", "01"], ["11", "10"]] {
            let p = PolygonProblem::from_vertices(vec![0.5, 0.5], &labels(&pair));
            let phi = solve_polygon_phases(&p, &Tolerances::default()).unwrap();
            let g = p.angles(&phi);
            let d = (g[1] - g[0]).rem_euclid(2.0 * PI);
            assert!((d - PI).abs() < 1e-9);
        }
    }

    #[test]
    fn infeasible_polygons() {
        let p = PolygonProblem::from_vertices(vec![0.8, 0.1, 0.1], &labels(&["110", "101", "011"]));
        assert!(matches!(
            solve_polygon_phases(&p, &Tolerances::default()),
            Err(ConstructionError::Infeasible(_))
        ));
        let one = PolygonProblem::from_vertices(vec![1.0], &labels(&["11"]));
        assert!(solve_polygon_phases(&one, &Tolerances::default()).is_err());
    }

    #[test]
    fn polygon_angles_close() {
        for sides in [
            vec![0.25, 0.25, 0.25, 0.25],
            vec![0.4, 0.3, 0.2, 0.1],
            vec![0.5, 0.2, 0.2, 0.1],
            vec![0.3, 0.3, 0.399, 0.001],
            vec![0.5, 0.3, 0.2],
        ] {
            let g = polygon_angles(&sides, 1e-12).unwrap();
            let s: Complex64 = sides
                .iter()
                .zip(&g)
                .map(|(&b, &t)| Complex64::from_polar(b, t))
                .sum();
            assert!(s.norm() < 1e-12, "{sides:?}");
            assert_eq!(g[0], 0.0);
        }
    }

    #[test]
    fn worked_boundary_state() {
        let b = [rat(1, 6), rat(1, 6), rat(1, 6), int(0)];
        let c = boundary_state(&b, &Tolerances::default()).unwrap();
        let a = 1.0 / 6f64.sqrt();
        let w = 2.0 * PI / 3.0;
        let want = [
            (0b1100, Complex64::new(a, 0.0)),
            (0b1010, Complex64::new(a, 0.0)),
            (0b0110, Complex64::new(a, 0.0)),
            (0b1101, Complex64::new(a, 0.0)),
            (0b1011, Complex64::from_polar(a, w)),
            (0b0111, Complex64::from_polar(a, 2.0 * w)),
        ];
        for (i, amp) in want {
            assert!(close(c.state.amplitude(i), amp), "{i:04b}: {:?}", c.state);
        }
        assert_eq!(c.state.support(1e-12).len(), 6);
    }

    #[test]
    fn bisep_and_ghz() {
        let tol = Tolerances::default();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bisep = boundary_state(&[rat(1, 2), int(0), int(0)], &tol).unwrap();
        assert!(close(bisep.state.amplitude(0b100), Complex64::new(h, 0.0)));
        assert!(close(bisep.state.amplitude(0b111), Complex64::new(h, 0.0)));
        let ghz = boundary_state(&[int(0), int(0)], &tol).unwrap();
        assert!(close(ghz.state.amplitude(0), Complex64::new(h, 0.0)));
        assert!(close(ghz.state.amplitude(3), Complex64::new(h, 0.0)));
    }

    #[test]
    fn excluded_pattern_is_infeasible() {
        let r = boundary_state(&[rat(1, 2), rat(1, 2), int(0)], &Tolerances::default());
        assert!(matches!(r, Err(ConstructionError::Infeasible(_))));
    }

    #[test]
    fn state_validation() {
        let one = Complex64::new(1.0, 0.0);
        assert!(StateVector::new(1, vec![one, Complex64::zero()]).is_ok());
        assert!(matches!(
            StateVector::new(1, vec![one, one]),
            Err(StateError::NotNormalized(_))
        ));
        assert!(matches!(
            StateVector::new(2, vec![one]),
            Err(StateError::WrongLength { .. })
        ));
    }
}
