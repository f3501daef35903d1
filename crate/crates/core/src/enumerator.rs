//! Minimal combinations of weights and the critical points they define.
//!
//! For a subset `{α_1..α_k}` of hypercube vertices the closest point of its
//! affine hull to the origin solves the bordered Gram system
//!
//! ```text
//! [ 2 α_i·α_j   1 ] [ a ]   [ 0 ]
//! [ 1 ... 1     0 ] [ λ ] = [ 1 ]
//! ```
//!
//! and `β = Σ a_i α_i`. When every `a_i` is non-negative, `β` is a minimal
//! combination. After reduction modulo the signed permutations, each distinct
//! `β` in the positive chamber (other than `(1/2, ..., 1/2, 0)`) is a
//! critical point with linear entropy `1/2 - 2‖β‖²/L`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{self, int, rat, solve_linear, LinalgError, Rational, RationalMatrix};
use crate::hypercube::{
    self, canonicalize, CanonicalBeta, HypercubeError, Independence, SubsetTree, Symmetry,
    WeightVertex,
};
use crate::search::{self, KernelResult, KernelStats, KERNEL_MAX_QUBITS, SCREEN_TOL};
use crate::state_builder::support_vertices;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration supports 1..={KERNEL_MAX_QUBITS} qubits, got {0}")]
    QubitsOutOfRange(usize),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error(transparent)]
    Hypercube(#[from] HypercubeError),
}

/// A solved subset: convex coefficients, multiplier and the resulting point.
#[derive(Clone, PartialEq, Eq)]
pub struct MinimalCombination {
    pub subset: Vec<WeightVertex>,
    pub a: Vec<Rational>,
    pub lambda: Rational,
    pub beta: Vec<Rational>,
}

impl MinimalCombination {
    pub fn qubits(&self) -> usize {
        self.beta.len()
    }

    pub fn norm_sq(&self) -> Rational {
        exact::norm_sq(&self.beta)
    }

    pub fn labels(&self) -> Vec<String> {
        self.subset.iter().map(WeightVertex::label).collect()
    }

    /// Checks convexity, `β = Σ a_i α_i`, and `β·α_i = -λ/2 = ‖β‖²` exactly.
    pub fn satisfies_kkt(&self) -> bool {
        let sum: Rational = self.a.iter().sum();
        if !sum.is_one() || self.a.iter().any(Signed::is_negative) {
            return false;
        }
        let l = self.qubits();
        let mut combo = vec![Rational::zero(); l];
        for (ai, v) in self.a.iter().zip(&self.subset) {
            for (c, x) in combo.iter_mut().zip(v.coordinates()) {
                *c += ai * x;
            }
        }
        if combo != self.beta {
            return false;
        }
        let n2 = self.norm_sq();
        let half_lambda = -self.lambda.clone() / int(2);
        half_lambda == n2
            && self
                .subset
                .iter()
                .all(|v| exact::dot(&self.beta, &v.coordinates()) == n2)
    }
}

impl fmt::Debug for MinimalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(exact::format_rational).collect();
        let b: Vec<String> = self.beta.iter().map(exact::format_rational).collect();
        f.debug_struct("MinimalCombination")
            .field("subset", &self.labels())
            .field("a", &a)
            .field("lambda", &exact::format_rational(&self.lambda))
            .field("beta", &b)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    Singular,
    NegativeCoefficient,
}

/// The bordered Gram system of a subset: `M(i,j) = 2 α_i·α_j`, a border of
/// ones, a zero corner and right-hand side `(0, ..., 0, 1)`.
pub fn build_kkt(subset: &[WeightVertex]) -> (RationalMatrix, Vec<Rational>) {
    assert!(!subset.is_empty(), "build_kkt: empty subset");
    let k = subset.len();
    let mut m = RationalMatrix::zeros(k + 1, k + 1);
    for (i, u) in subset.iter().enumerate() {
        for (j, v) in subset.iter().enumerate() {
            // 2 α·α' = dot4 / 2
            m[(i, j)] = rat(u.dot4(v), 2);
        }
        m[(i, k)] = Rational::one();
        m[(k, i)] = Rational::one();
    }
    let mut rhs = vec![Rational::zero(); k + 1];
    rhs[k] = Rational::one();
    (m, rhs)
}

pub fn solve_subset(subset: &[WeightVertex]) -> Result<MinimalCombination, Rejection> {
    let (m, rhs) = build_kkt(subset);
    let x = match solve_linear(&m, &rhs) {
        Ok(x) => x,
        Err(LinalgError::Singular) => return Err(Rejection::Singular),
        Err(e) => unreachable!("bordered system is square: {e}"),
    };
    let k = subset.len();
    let (a, lambda) = (x[..k].to_vec(), x[k].clone());
    if a.iter().any(Signed::is_negative) {
        return Err(Rejection::NegativeCoefficient);
    }
    let l = subset[0].qubits();
    let mut beta = vec![Rational::zero(); l];
    for (ai, v) in a.iter().zip(subset) {
        for (b, x) in beta.iter_mut().zip(v.coordinates()) {
            *b += ai * x;
        }
    }
    Ok(MinimalCombination {
        subset: subset.to_vec(),
        a,
        lambda,
        beta,
    })
}

fn is_excluded_pattern(beta: &[Rational]) -> bool {
    let half = rat(1, 2);
    let zeros = beta.iter().filter(|b| b.is_zero()).count();
    let halves = beta.iter().filter(|b| **b == half).count();
    zeros == 1 && halves + 1 == beta.len()
}

/// True iff every component is non-negative and β is not a permutation of
/// `(1/2, ..., 1/2, 0)`.
pub fn accept(beta: &[Rational]) -> bool {
    !beta.iter().any(Signed::is_negative) && !is_excluded_pattern(beta)
}

/// `1/2 - 2‖β‖²/L`.
pub fn entropy_value(beta: &[Rational]) -> Rational {
    let l = beta.len() as i64;
    rat(1, 2) - exact::norm_sq(beta) * rat(2, l)
}

#[derive(Clone, PartialEq, Eq)]
pub struct CriticalPoint {
    pub beta: CanonicalBeta,
    pub norm_sq: Rational,
    pub entropy: Rational,
    pub witnesses: Vec<MinimalCombination>,
    pub boundary: bool,
}

impl CriticalPoint {
    pub fn from_witness(beta: CanonicalBeta, witness: MinimalCombination) -> Self {
        let norm_sq = beta.norm_sq();
        let entropy = entropy_value(beta.components());
        let boundary = beta.is_boundary();
        Self {
            beta,
            norm_sq,
            entropy,
            witnesses: vec![witness],
            boundary,
        }
    }

    pub fn witness(&self) -> &MinimalCombination {
        &self.witnesses[0]
    }
}

impl fmt::Debug for CriticalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} |β|²={} E={}{}",
            self.beta,
            self.norm_sq,
            self.entropy,
            if self.boundary { " (boundary)" } else { "" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOptions {
    pub symmetry: Symmetry,
    /// Keep the `(1/2, ..., 1/2, 0)` pattern.
    pub raw: bool,
    pub workers: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            symmetry: Symmetry::On,
            raw: false,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub work_units: usize,
    pub kernel: KernelStats,
    /// Distinct screened β keys re-solved exactly.
    pub exact_solves: usize,
    /// Screened keys whose exact solution turned out singular or negative.
    pub exact_rejections: usize,
    /// Number of affinely independent-or-not subsets of sizes `2..=L` in the
    /// unpruned space, `Σ C(2^L, k)`.
    pub unpruned_subsets: u128,
    pub elapsed: Duration,
}

impl SearchStats {
    /// Ratio of the unpruned subset space to the subsets actually solved.
    pub fn compression_ratio(&self) -> f64 {
        if self.kernel.solved == 0 {
            return 1.0;
        }
        self.unpruned_subsets as f64 / self.kernel.solved as f64
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub qubits: usize,
    pub options: EnumerateOptions,
    /// Sorted by entropy ascending, then β in descending lexicographic order.
    pub points: Vec<CriticalPoint>,
    pub stats: SearchStats,
}

impl Enumeration {
    pub fn betas(&self) -> Vec<CanonicalBeta> {
        self.points.iter().map(|p| p.beta.clone()).collect()
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Enumerates all critical points for `qubits` qubits.
///
/// The result is a deterministic function of `qubits` and `raw`; symmetry
/// mode and worker count only change the cost.
pub fn enumerate(qubits: usize, options: EnumerateOptions) -> Result<Enumeration, EnumerateError> {
    if !(1..=KERNEL_MAX_QUBITS).contains(&qubits) {
        return Err(EnumerateError::QubitsOutOfRange(qubits));
    }
    if options.workers == 0 {
        return Err(EnumerateError::NoWorkers);
    }
    let started = Instant::now();
    let tree = SubsetTree::new(qubits, options.symmetry)?;
    let units = tree.work_units(qubits.min(3), 2, |s| Independence::Affine.holds(s));

    let chunk = units.len().div_ceil(options.workers).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .expect("thread pool");
    let partials: Vec<KernelResult> = pool.install(|| {
        units
            .par_chunks(chunk)
            .map(|c| search::run_units(&tree, c))
            .collect()
    });
    let mut screened = KernelResult::default();
    for p in partials {
        screened.merge(p);
    }

    let mut stats = SearchStats {
        work_units: units.len(),
        kernel: screened.stats,
        unpruned_subsets: (2..=qubits as u128)
            .map(|k| binomial(1u128 << qubits, k))
            .sum(),
        ..SearchStats::default()
    };

    // exact pass, keyed on canonical β
    let mut keys: Vec<_> = screened.candidates.into_iter().collect();
    keys.sort_by_key(|k| k.0);
    stats.exact_solves = keys.len();
    let solved: Vec<Result<MinimalCombination, Rejection>> = pool.install(|| {
        keys.par_iter()
            .map(|(_, cand)| solve_subset(&tree.vertices_of(&cand.positions)))
            .collect()
    });
    let mut betas: BTreeMap<CanonicalBeta, ()> = BTreeMap::new();
    for r in solved {
        match r {
            Ok(mc) => {
                let keep = match options.symmetry {
                    Symmetry::Off => !mc.beta.iter().any(Signed::is_negative),
                    Symmetry::On => true,
                };
                if keep {
                    betas.insert(canonicalize(&mc.beta), ());
                }
            }
            Err(_) => stats.exact_rejections += 1,
        }
    }
    let separable = canonicalize(&vec![rat(1, 2); qubits]);
    betas.insert(separable, ());

    let accepted: Vec<CanonicalBeta> = betas
        .into_keys()
        .filter(|b| options.raw || accept(b.components()))
        .collect();

    let mut points: Vec<CriticalPoint> = pool.install(|| {
        accepted
            .into_par_iter()
            .map(|beta| {
                let w = find_witness(beta.components())
                    .unwrap_or_else(|| panic!("no witness for enumerated point {beta:?}"));
                CriticalPoint::from_witness(beta, w)
            })
            .collect()
    });
    points.sort_by(|x, y| x.entropy.cmp(&y.entropy).then_with(|| y.beta.cmp(&x.beta)));
    stats.elapsed = started.elapsed();

    Ok(Enumeration {
        qubits,
        options,
        points,
        stats,
    })
}

/// The smallest witness of `beta`: among subsets of the vertices on the
/// hyperplane `α·β = ‖β‖²`, the smallest size `k` and then the
/// lexicographically least bit labels whose minimal combination is `beta`.
///
/// Returns `None` when `beta` is not a minimal combination.
pub fn find_witness(beta: &[Rational]) -> Option<MinimalCombination> {
    let l = beta.len();
    let support = support_vertices(beta);
    if support.is_empty() {
        return None;
    }
    if let Some(v) = support.iter().find(|v| v.coordinates() == beta) {
        return solve_subset(&[*v]).ok();
    }
    let target: Vec<f64> = beta.iter().map(exact::to_f64).collect();
    let pts: Vec<Vec<f64>> = support.iter().map(WeightVertex::coordinates_f64).collect();
    for k in 2..=l.max(2) {
        let mut finder = WitnessFinder {
            pts: &pts,
            target: &target,
            k,
            path: Vec::with_capacity(k),
            basis: Vec::with_capacity(k),
        };
        let mut found = None;
        finder.search(0, &mut |path| {
            let subset: Vec<WeightVertex> = path.iter().map(|&i| support[i]).collect();
            match solve_subset(&subset) {
                Ok(mc) if mc.beta == beta => {
                    found = Some(mc);
                    true
                }
                _ => false,
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

struct WitnessFinder<'a> {
    pts: &'a [Vec<f64>],
    target: &'a [f64],
    k: usize,
    path: Vec<usize>,
    /// Orthonormal directions of the current affine hull.
    basis: Vec<Vec<f64>>,
}

impl WitnessFinder<'_> {
    /// Lexicographic DFS; `accept` confirms a float hit exactly and returns
    /// true to stop.
    fn search(&mut self, start: usize, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.path.len() == self.k {
            return self.float_hit() && accept(&self.path);
        }
        let need = self.k - self.path.len();
        for i in start..self.pts.len() {
            if self.pts.len() - i < need {
                break;
            }
            if let Some(dir) = self.direction(i) {
                let pushed = dir.is_some();
                if let Some(d) = dir {
                    self.basis.push(d);
                }
                self.path.push(i);
                // the target must stay reachable: it lies in the hull's span
                let stop = self.search(i + 1, accept);
                self.path.pop();
                if pushed {
                    self.basis.pop();
                }
                if stop {
                    return true;
                }
            }
        }
        false
    }

    /// `Some(None)` for the first point, `Some(Some(dir))` for an affinely
    /// independent extension, `None` if dependent.
    fn direction(&self, i: usize) -> Option<Option<Vec<f64>>> {
        let Some(&first) = self.path.first() else {
            return Some(None);
        };
        let mut w: Vec<f64> = self.pts[i]
            .iter()
            .zip(&self.pts[first])
            .map(|(a, b)| a - b)
            .collect();
        for q in &self.basis {
            let c: f64 = q.iter().zip(&w).map(|(x, y)| x * y).sum();
            for (wk, qk) in w.iter_mut().zip(q) {
                *wk -= c * qk;
            }
        }
        let n = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n < 1e-7 {
            return None;
        }
        Some(Some(w.into_iter().map(|x| x / n).collect()))
    }

    fn float_hit(&self) -> bool {
        // projection of the origin onto the hull must be the target
        let p0 = &self.pts[self.path[0]];
        let mut beta = p0.clone();
        for q in &self.basis {
            let c: f64 = q.iter().zip(p0).map(|(x, y)| x * y).sum();
            for (b, qk) in beta.iter_mut().zip(q) {
                *b -= c * qk;
            }
        }
        beta.iter()
            .zip(self.target)
            .all(|(b, t)| (b - t).abs() < 1e3 * SCREEN_TOL)
    }
}

/// The two level-`L+1` extensions `(β; 1/2)` and `(β; 0)` of each point,
/// canonicalized, in input order and before deduplication.
pub fn extend_iteratively<'a, I>(points: I) -> Vec<CanonicalBeta>
where
    I: IntoIterator<Item = &'a CanonicalBeta>,
{
    let mut out = Vec::new();
    for beta in points {
        for tail in [rat(1, 2), Rational::zero()] {
            let mut ext = beta.components().to_vec();
            ext.push(tail);
            out.push(canonicalize(&ext));
        }
    }
    out
}

/// Canonical β vectors of every vertex subset, exposed for cross-checks.
pub fn hypercube_vertex_count(qubits: usize) -> Result<usize, HypercubeError> {
    Ok(hypercube::vertices(qubits)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(ls: &[&str]) -> Vec<WeightVertex> {
        ls.iter()
            .map(|l| WeightVertex::from_label(l).unwrap())
            .collect()
    }

    fn rv(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(p, q)| rat(p, q)).collect()
    }

    #[test]
    fn kkt_diagonal_is_half_the_qubit_count() {
        let s = labels(&["0111", "1001", "1010", "1100"]);
        let (m, rhs) = build_kkt(&s);
        assert!(m.is_symmetric());
        for i in 0..4 {
            assert_eq!(m[(i, i)], int(2));
        }
        assert_eq!(m[(4, 4)], int(0));
        assert_eq!(rhs, vec![int(0), int(0), int(0), int(0), int(1)]);
    }

    #[test]
    fn kkt_for_w_subset() {
        let (m, _) = build_kkt(&labels(&["011", "101", "110"]));
        let h = rat(3, 2);
        let n = rat(-1, 2);
        let expected = RationalMatrix::from_rows(vec![
            vec![h.clone(), n.clone(), n.clone(), int(1)],
            vec![n.clone(), h.clone(), n.clone(), int(1)],
            vec![n.clone(), n.clone(), h, int(1)],
            vec![int(1), int(1), int(1), int(0)],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn kkt_single_vertex() {
        let v = labels(&["10110"]);
        let (m, _) = build_kkt(&v);
        assert_eq!(m[(0, 0)], rat(5, 2));
        assert_eq!(m[(0, 1)], int(1));
        let mc = solve_subset(&v).unwrap();
        assert_eq!(mc.a, vec![int(1)]);
        assert_eq!(mc.beta, v[0].coordinates());
        assert!(mc.satisfies_kkt());
    }

    #[test]
    fn w_subset_solution() {
        let mc = solve_subset(&labels(&["011", "101", "110"])).unwrap();
        assert_eq!(mc.a, vec![rat(1, 3); 3]);
        assert_eq!(mc.lambda, rat(-1, 6));
        assert_eq!(mc.beta, vec![rat(1, 6); 3]);
        assert_eq!(mc.norm_sq(), rat(1, 12));
        assert!(mc.satisfies_kkt());
    }

    #[test]
    fn antipodal_pair_projects_to_origin() {
        let mc = solve_subset(&labels(&["11", "00"])).unwrap();
        assert_eq!(mc.beta, vec![int(0), int(0)]);
        assert_eq!(mc.a, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(mc.lambda, int(0));
    }

    #[test]
    fn repeated_vertex_is_singular() {
        assert_eq!(
            solve_subset(&labels(&["11", "11"])),
            Err(Rejection::Singular)
        );
    }

    #[test]
    fn phi1_subset_solution() {
        let mc = solve_subset(&labels(&["0111", "1001", "1010", "1100"])).unwrap();
        assert_eq!(mc.beta, rv(&[(1, 7), (1, 14), (1, 14), (1, 14)]));
        assert_eq!(mc.norm_sq(), rat(1, 28));
        assert!(mc.satisfies_kkt());
    }

    #[test]
    fn negative_coefficients_are_rejected() {
        // the projection of the origin onto this hull falls outside the simplex
        let s = labels(&["0000", "0001", "0010", "0100"]);
        let (m, rhs) = build_kkt(&s);
        let x = solve_linear(&m, &rhs).unwrap();
        assert_eq!(
            x,
            vec![rat(-1, 2), rat(1, 2), rat(1, 2), rat(1, 2), rat(-1, 2)]
        );
        assert_eq!(solve_subset(&s), Err(Rejection::NegativeCoefficient));
    }

    #[test]
    fn accept_examples() {
        assert!(accept(&rv(&[(1, 2), (1, 2), (0, 1), (0, 1)])));
        assert!(!accept(&rv(&[(1, 2), (1, 2), (1, 2), (0, 1)])));
        assert!(!accept(&rv(&[(1, 6), (-1, 6), (1, 6)])));
        assert!(!accept(&rv(&[(0, 1), (1, 2)])));
        assert!(accept(&rv(&[(1, 2)])));
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy_value(&rv(&[(1, 6), (1, 6), (1, 6)])), rat(4, 9));
        assert_eq!(
            entropy_value(&rv(&[(1, 7), (1, 14), (1, 14), (1, 14)])),
            rat(27, 56)
        );
        for l in 1..=7 {
            assert_eq!(entropy_value(&vec![rat(1, 2); l]), int(0));
        }
    }

    #[test]
    fn entropy_matches_multiplier_form() {
        for s in [
            labels(&["011", "101", "110"]),
            labels(&["0111", "1001", "1010", "1100"]),
            labels(&["0111", "1011", "1100"]),
        ] {
            let mc = solve_subset(&s).unwrap();
            let l = mc.qubits() as i64;
            assert_eq!(
                entropy_value(&mc.beta),
                rat(1, 2) + mc.lambda.clone() / int(l)
            );
        }
    }

    #[test]
    fn one_qubit() {
        let e = enumerate(1, EnumerateOptions::default()).unwrap();
        assert_eq!(e.points.len(), 1);
        assert_eq!(e.points[0].beta.components(), &[rat(1, 2)]);
        assert_eq!(e.points[0].entropy, int(0));
    }

    #[test]
    fn three_qubits() {
        let e = enumerate(3, EnumerateOptions::default()).unwrap();
        let got: Vec<Vec<Rational>> = e
            .points
            .iter()
            .map(|p| p.beta.components().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                rv(&[(1, 2), (1, 2), (1, 2)]),
                rv(&[(1, 2), (0, 1), (0, 1)]),
                rv(&[(1, 6), (1, 6), (1, 6)]),
                rv(&[(0, 1), (0, 1), (0, 1)]),
            ]
        );
        let ent: Vec<Rational> = e.points.iter().map(|p| p.entropy.clone()).collect();
        assert_eq!(ent, vec![int(0), rat(1, 3), rat(4, 9), rat(1, 2)]);
        assert_eq!(e.stats.exact_rejections, 0);
    }

    #[test]
    fn witnesses_are_minimal_and_deterministic() {
        for l in 2..=4 {
            let on = enumerate(l, EnumerateOptions::default()).unwrap();
            let off = enumerate(
                l,
                EnumerateOptions {
                    symmetry: Symmetry::Off,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(on.points, off.points);
            for p in &on.points {
                let w = p.witness();
                assert!(w.satisfies_kkt(), "{w:?}");
                assert_eq!(canonicalize(&w.beta), p.beta);
                assert!(w.subset.len() <= l);
            }
        }
    }

    #[test]
    fn w_witness_is_the_w_subset() {
        let w = find_witness(&[rat(1, 6), rat(1, 6), rat(1, 6)]).unwrap();
        assert_eq!(w.labels(), vec!["011", "101", "110"]);
        let g = find_witness(&[int(0), int(0), int(0)]).unwrap();
        assert_eq!(g.labels(), vec!["000", "111"]);
        assert!(find_witness(&[rat(1, 3), int(0), int(0)]).is_none());
    }

    #[test]
    fn extension_examples() {
        let w = canonicalize(&rv(&[(1, 6), (1, 6), (1, 6)]));
        let ext = extend_iteratively([&w]);
        assert_eq!(
            ext[0].components(),
            rv(&[(1, 2), (1, 6), (1, 6), (1, 6)]).as_slice()
        );
        assert_eq!(
            ext[1].components(),
            rv(&[(1, 6), (1, 6), (1, 6), (0, 1)]).as_slice()
        );
        let g = canonicalize(&rv(&[(0, 1), (0, 1)]));
        let ext = extend_iteratively([&g]);
        assert_eq!(
            ext[0].components(),
            rv(&[(1, 2), (0, 1), (0, 1)]).as_slice()
        );
        assert_eq!(
            ext[1].components(),
            rv(&[(0, 1), (0, 1), (0, 1)]).as_slice()
        );
        let s = canonicalize(&rv(&[(1, 2), (1, 2)]));
        let ext = extend_iteratively([&s]);
        assert!(!accept(ext[1].components()));
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(
            enumerate(0, EnumerateOptions::default()).unwrap_err(),
            EnumerateError::QubitsOutOfRange(0)
        );
        assert_eq!(
            enumerate(9, EnumerateOptions::default()).unwrap_err(),
            EnumerateError::QubitsOutOfRange(9)
        );
        let opts = EnumerateOptions {
            workers: 0,
            ..Default::default()
        };
        assert_eq!(enumerate(2, opts).unwrap_err(), EnumerateError::NoWorkers);
    }
}
