//! Floating-point depth-first kernel over the subset tree.
//!
//! Each node carries an incremental Gram-Schmidt factorization of the
//! directions `p_i - p_0` of its affine hull, so adding a vertex, testing
//! affine independence and projecting the origin onto the hull cost
//! `O(L * k)` flops. The kernel only screens: everything it keeps is
//! re-solved exactly afterwards.

use std::collections::HashMap;

use crate::hypercube::{SubsetTree, Symmetry, WorkUnit};

/// Largest qubit count the kernel handles.
pub const KERNEL_MAX_QUBITS: usize = 8;

const DEPENDENT_TOL: f64 = 1e-7;
/// Screening tolerance for `a_i >= 0` and `beta_i >= 0`. Exact solutions have
/// denominators far below `1e9`, so a genuinely negative value is never
/// this close to zero.
pub const SCREEN_TOL: f64 = 1e-9;
const KEY_SCALE: f64 = 1e9;

pub type BetaKey = [i64; KERNEL_MAX_QUBITS];

/// The subset kept for one screened β: the one whose smallest float
/// coefficient is largest.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub min_coefficient: f64,
    pub positions: Vec<usize>,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        self.min_coefficient > other.min_coefficient
            || (self.min_coefficient == other.min_coefficient && self.positions < other.positions)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KernelStats {
    /// Affinely independent subsets of size at least two that were solved.
    pub solved: u64,
    /// Vertices rejected because they were in the affine hull of the prefix.
    pub dependent: u64,
    /// Solved subsets that passed the float screen.
    pub screened_in: u64,
}

impl KernelStats {
    pub fn merge(&mut self, other: &KernelStats) {
        self.solved += other.solved;
        self.dependent += other.dependent;
        self.screened_in += other.screened_in;
    }
}

#[derive(Debug, Default)]
pub struct KernelResult {
    pub candidates: HashMap<BetaKey, Candidate>,
    pub stats: KernelStats,
}

impl KernelResult {
    fn offer(&mut self, key: BetaKey, cand: Candidate) {
        match self.candidates.get_mut(&key) {
            Some(existing) => {
                if cand.better_than(existing) {
                    *existing = cand;
                }
            }
            None => {
                self.candidates.insert(key, cand);
            }
        }
    }

    /// Commutative, associative union.
    pub fn merge(&mut self, other: KernelResult) {
        self.stats.merge(&other.stats);
        for (k, c) in other.candidates {
            self.offer(k, c);
        }
    }
}

/// Runs the kernel over a contiguous slice of work units.
pub fn run_units(tree: &SubsetTree, units: &[WorkUnit]) -> KernelResult {
    let mut dfs = Dfs::new(tree);
    for unit in units {
        let mut ok = true;
        for (i, &p) in unit.prefix.iter().enumerate() {
            if !dfs.push(p) {
                // units are built from admissible prefixes, so this only
                // happens if the exact and float independence tests disagree
                ok = false;
                for _ in 0..i {
                    dfs.pop();
                }
                break;
            }
        }
        if !ok {
            continue;
        }
        dfs.visit(unit.expand);
        for _ in 0..unit.prefix.len() {
            dfs.pop();
        }
    }
    dfs.result
}

struct Dfs<'a> {
    tree: &'a SubsetTree,
    qubits: usize,
    points: Vec<[f64; KERNEL_MAX_QUBITS]>,
    bits: Vec<u32>,
    depth: usize,
    path: [usize; KERNEL_MAX_QUBITS],
    /// Orthonormal directions; `q[j]` exists for `j < depth - 1`.
    q: [[f64; KERNEL_MAX_QUBITS]; KERNEL_MAX_QUBITS],
    /// Column `j` of the triangular factor; entries `0..=j`.
    r: [[f64; KERNEL_MAX_QUBITS]; KERNEL_MAX_QUBITS],
    /// `y[j] = q[j] . p_0`.
    y: [f64; KERNEL_MAX_QUBITS],
    /// Per-qubit column signature of the path.
    sig: [u64; KERNEL_MAX_QUBITS],
    result: KernelResult,
}

impl<'a> Dfs<'a> {
    fn new(tree: &'a SubsetTree) -> Self {
        let qubits = tree.qubits();
        assert!(qubits <= KERNEL_MAX_QUBITS);
        let points = tree
            .order()
            .iter()
            .map(|v| {
                let mut p = [0.0; KERNEL_MAX_QUBITS];
                for (k, c) in v.coordinates_f64().into_iter().enumerate() {
                    p[k] = c;
                }
                p
            })
            .collect();
        let bits = tree.order().iter().map(|v| v.bits()).collect();
        Self {
            tree,
            qubits,
            points,
            bits,
            depth: 0,
            path: [0; KERNEL_MAX_QUBITS],
            q: [[0.0; KERNEL_MAX_QUBITS]; KERNEL_MAX_QUBITS],
            r: [[0.0; KERNEL_MAX_QUBITS]; KERNEL_MAX_QUBITS],
            y: [0.0; KERNEL_MAX_QUBITS],
            sig: [0; KERNEL_MAX_QUBITS],
            result: KernelResult::default(),
        }
    }

    fn bit(&self, pos: usize, k: usize) -> u64 {
        u64::from((self.bits[pos] >> (self.qubits - 1 - k)) & 1)
    }

    fn push(&mut self, pos: usize) -> bool {
        let l = self.qubits;
        if self.depth > 0 {
            let j = self.depth - 1;
            let p0 = &self.points[self.path[0]];
            let v = &self.points[pos];
            let mut w = [0.0; KERNEL_MAX_QUBITS];
            for k in 0..l {
                w[k] = v[k] - p0[k];
            }
            // modified Gram-Schmidt
            for i in 0..j {
                let c: f64 = (0..l).map(|k| self.q[i][k] * w[k]).sum();
                self.r[j][i] = c;
                for (wk, qk) in w[..l].iter_mut().zip(&self.q[i][..l]) {
                    *wk -= c * qk;
                }
            }
            let n = (0..l).map(|k| w[k] * w[k]).sum::<f64>().sqrt();
            if n < DEPENDENT_TOL {
                self.result.stats.dependent += 1;
                return false;
            }
            self.r[j][j] = n;
            for (qk, wk) in self.q[j][..l].iter_mut().zip(&w[..l]) {
                *qk = wk / n;
            }
            self.y[j] = (0..l).map(|k| self.q[j][k] * p0[k]).sum();
        }
        self.path[self.depth] = pos;
        for k in 0..l {
            self.sig[k] = (self.sig[k] << 1) | self.bit(pos, k);
        }
        self.depth += 1;
        true
    }

    fn pop(&mut self) {
        self.depth -= 1;
        for k in 0..self.qubits {
            self.sig[k] >>= 1;
        }
    }

    fn visit(&mut self, expand: bool) {
        if self.depth >= 2 {
            self.evaluate();
        }
        if !expand || self.depth >= self.qubits {
            return;
        }
        let start = self.path[self.depth - 1] + 1;
        let links = self.block_links();
        for c in start..self.points.len() {
            if self.tree.symmetry() == Symmetry::On
                && !links
                    .iter()
                    .all(|&(k, next)| self.bit(c, k) <= self.bit(c, next))
            {
                continue;
            }
            if self.push(c) {
                self.visit(true);
                self.pop();
            }
        }
    }

    fn block_links(&self) -> Vec<(usize, usize)> {
        let l = self.qubits;
        let mut links = Vec::with_capacity(l);
        for k in 0..l {
            if let Some(next) = (k + 1..l).find(|&j| self.sig[j] == self.sig[k]) {
                links.push((k, next));
            }
        }
        links
    }

    fn evaluate(&mut self) {
        let l = self.qubits;
        let m = self.depth - 1;
        self.result.stats.solved += 1;

        // R c = -y, then a_0 = 1 - sum c, a_i = c_{i-1}
        let mut c = [0.0; KERNEL_MAX_QUBITS];
        for i in (0..m).rev() {
            let mut acc = -self.y[i];
            for (rj, cj) in self.r[i + 1..m].iter().zip(&c[i + 1..m]) {
                acc -= rj[i] * cj;
            }
            c[i] = acc / self.r[i][i];
        }
        let sum: f64 = c[..m].iter().sum();
        let mut min_a = 1.0 - sum;
        for &ci in &c[..m] {
            min_a = min_a.min(ci);
        }
        if min_a < -SCREEN_TOL {
            return;
        }

        let p0 = &self.points[self.path[0]];
        let mut beta = [0.0; KERNEL_MAX_QUBITS];
        for k in 0..l {
            let mut b = p0[k];
            for j in 0..m {
                b -= self.y[j] * self.q[j][k];
            }
            beta[k] = b;
        }
        if self.tree.symmetry() == Symmetry::Off && beta[..l].iter().any(|&b| b < -SCREEN_TOL) {
            return;
        }
        self.result.stats.screened_in += 1;
        let key = beta_key(&beta[..l]);
        let cand = Candidate {
            min_coefficient: min_a,
            positions: self.path[..self.depth].to_vec(),
        };
        self.result.offer(key, cand);
    }
}

/// Quantized canonical form of a float β.
pub fn beta_key(beta: &[f64]) -> BetaKey {
    let mut abs: Vec<f64> = beta.iter().map(|b| b.abs()).collect();
    abs.sort_by(|a, b| b.total_cmp(a));
    let mut key = [0i64; KERNEL_MAX_QUBITS];
    for (k, b) in abs.into_iter().enumerate() {
        key[k] = (b * KEY_SCALE).round() as i64;
    }
    key
}
