//! The weight hypercube `{-1/2, +1/2}^L`, vertex subsets and the
//! signed-permutation symmetry.
//!
//! Bit convention: qubit 1 is the most significant bit of a basis label, so
//! the basis index of `|i_1 ... i_L>` is `sum_k i_k 2^(L-k)`. Coordinate `k`
//! of a vertex is `+1/2` exactly when bit `i_k` is 1.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{self, format_rational, rat, Rational};

/// Hard cap on the qubit count for anything that materializes `2^L` items.
pub const MAX_QUBITS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypercubeError {
    #[error("qubit count {0} out of range 1..={MAX_QUBITS}")]
    QubitsOutOfRange(usize),
    #[error("basis label {bits} does not fit in {qubits} qubits")]
    LabelOutOfRange { qubits: usize, bits: u32 },
    #[error("invalid bit label {0:?}")]
    BadLabel(String),
}

/// A vertex of the weight hypercube, identified with a computational basis
/// label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVertex {
    qubits: u8,
    bits: u32,
}

impl WeightVertex {
    pub fn new(qubits: usize, bits: u32) -> Result<Self, HypercubeError> {
        check_qubits(qubits)?;
        if u64::from(bits) >= 1u64 << qubits {
            return Err(HypercubeError::LabelOutOfRange { qubits, bits });
        }
        Ok(Self {
            qubits: qubits as u8,
            bits,
        })
    }

    /// Parses a bit label such as `"011"`.
    pub fn from_label(label: &str) -> Result<Self, HypercubeError> {
        let bad = || HypercubeError::BadLabel(label.to_string());
        if label.is_empty() || label.len() > MAX_QUBITS {
            return Err(bad());
        }
        let mut bits = 0u32;
        for c in label.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(bad()),
                };
        }
        Self::new(label.len(), bits)
    }

    pub fn qubits(&self) -> usize {
        self.qubits as usize
    }

    /// The basis index of the corresponding product state.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Bit `i_k` for the zero-based qubit position `k`.
    pub fn bit(&self, k: usize) -> u32 {
        (self.bits >> (self.qubits() - 1 - k)) & 1
    }

    pub fn sign(&self, k: usize) -> i32 {
        if self.bit(k) == 1 {
            1
        } else {
            -1
        }
    }

    pub fn coordinate(&self, k: usize) -> Rational {
        rat(i64::from(self.sign(k)), 2)
    }

    pub fn coordinates(&self) -> Vec<Rational> {
        (0..self.qubits()).map(|k| self.coordinate(k)).collect()
    }

    pub fn coordinates_f64(&self) -> Vec<f64> {
        (0..self.qubits())
            .map(|k| 0.5 * f64::from(self.sign(k)))
            .collect()
    }

    /// Number of qubits in state `|0>`.
    pub fn zeros(&self) -> u32 {
        self.qubits as u32 - self.bits.count_ones()
    }

    pub fn label(&self) -> String {
        (0..self.qubits())
            .map(|k| if self.bit(k) == 1 { '1' } else { '0' })
            .collect()
    }

    /// Inner product of the coordinate vectors, times 4 (always an integer).
    pub fn dot4(&self, other: &Self) -> i64 {
        let agree = !(self.bits ^ other.bits) & mask(self.qubits());
        2 * i64::from(agree.count_ones()) - self.qubits() as i64
    }
}

impl fmt::Debug for WeightVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}>", self.label())
    }
}

impl fmt::Display for WeightVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = (0..self.qubits())
            .map(|k| if self.bit(k) == 1 { "+1/2" } else { "-1/2" })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn mask(qubits: usize) -> u32 {
    if qubits >= 32 {
        u32::MAX
    } else {
        (1u32 << qubits) - 1
    }
}

fn check_qubits(qubits: usize) -> Result<(), HypercubeError> {
    if (1..=MAX_QUBITS).contains(&qubits) {
        Ok(())
    } else {
        Err(HypercubeError::QubitsOutOfRange(qubits))
    }
}

/// All `2^L` vertices in increasing label order.
pub fn vertices(qubits: usize) -> Result<Vec<WeightVertex>, HypercubeError> {
    check_qubits(qubits)?;
    Ok((0..1u32 << qubits)
        .map(|bits| WeightVertex {
            qubits: qubits as u8,
            bits,
        })
        .collect())
}

/// A β vector reduced modulo qubit permutations and sign flips: absolute
/// values sorted in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalBeta(#[serde(with = "exact::serde_rational::vec")] Vec<Rational>);

impl CanonicalBeta {
    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn qubits(&self) -> usize {
        self.0.len()
    }

    pub fn norm_sq(&self) -> Rational {
        exact::norm_sq(&self.0)
    }

    pub fn is_boundary(&self) -> bool {
        self.0.iter().any(Zero::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Debug for CanonicalBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Display for CanonicalBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Componentwise absolute value, then sort non-increasing.
pub fn canonicalize(beta: &[Rational]) -> CanonicalBeta {
    let mut c: Vec<Rational> = beta.iter().map(Signed::abs).collect();
    c.sort_unstable_by(|a, b| b.cmp(a));
    CanonicalBeta(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    On,
    Off,
}

/// Which notion of independence filters candidate subsets.
///
/// `Linear` is rank `k` of the coordinate vectors. `Affine` is rank `k - 1`
/// of the differences, which is exactly the condition for the bordered KKT
/// system of the subset to be nonsingular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Independence {
    Linear,
    Affine,
}

impl Independence {
    pub fn holds(self, subset: &[WeightVertex]) -> bool {
        let coords: Vec<Vec<Rational>> = subset.iter().map(WeightVertex::coordinates).collect();
        match self {
            Independence::Linear => exact::rank(&coords) == subset.len(),
            Independence::Affine => exact::affine_rank(&coords) + 1 == subset.len(),
        }
    }
}

/// An element of the hyperoctahedral group acting on the hypercube: flip the
/// bits in `flips`, then move qubit `k` to position `perm[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: u32,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, flips: u32) -> Self {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        Self { perm, flips }
    }

    pub fn qubits(&self) -> usize {
        self.perm.len()
    }

    pub fn apply_vertex(&self, v: &WeightVertex) -> WeightVertex {
        let l = self.qubits();
        let flipped = v.bits ^ self.flips;
        let mut out = 0u32;
        for (k, &p) in self.perm.iter().enumerate() {
            let b = (flipped >> (l - 1 - k)) & 1;
            out |= b << (l - 1 - p);
        }
        WeightVertex {
            qubits: v.qubits,
            bits: out,
        }
    }

    pub fn apply_beta(&self, beta: &[Rational]) -> Vec<Rational> {
        let l = self.qubits();
        let mut out = vec![Rational::zero(); l];
        for (k, &p) in self.perm.iter().enumerate() {
            let flip = (self.flips >> (l - 1 - k)) & 1 == 1;
            out[p] = if flip {
                -beta[k].clone()
            } else {
                beta[k].clone()
            };
        }
        out
    }
}

/// Every element of the signed-permutation group of order `2^L * L!`.
///
/// Only sensible for small `L`; the group has 645120 elements at `L = 7`.
pub fn signed_permutations(qubits: usize) -> Vec<SignedPermutation> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..qubits).collect();
    permutations_rec(&mut current, 0, &mut perms);
    let mut group = Vec::with_capacity(perms.len() << qubits);
    for p in perms {
        for flips in 0..1u32 << qubits {
            group.push(SignedPermutation {
                perm: p.clone(),
                flips,
            });
        }
    }
    group
}

fn permutations_rec(current: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == current.len() {
        out.push(current.clone());
        return;
    }
    for i in start..current.len() {
        current.swap(start, i);
        permutations_rec(current, start + 1, out);
        current.swap(start, i);
    }
}

/// Search order over the vertices: fewest zeros first, then label. The all-ones
/// vertex comes first.
pub fn search_order(qubits: usize) -> Result<Vec<WeightVertex>, HypercubeError> {
    let mut v = vertices(qubits)?;
    v.sort_by_key(|x| (x.zeros(), x.bits));
    Ok(v)
}

/// Column signatures of a vertex prefix. Two qubits in the same block are
/// interchangeable by a permutation fixing every vertex of the prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    /// `(k, k')` pairs of consecutive qubit positions in the same block.
    links: Vec<(usize, usize)>,
}

impl BlockPartition {
    pub fn of(qubits: usize, prefix: &[WeightVertex]) -> Self {
        let sig: Vec<u64> = (0..qubits)
            .map(|k| {
                prefix
                    .iter()
                    .fold(0u64, |acc, v| (acc << 1) | u64::from(v.bit(k)))
            })
            .collect();
        let mut links = Vec::new();
        for k in 0..qubits {
            if let Some(next) = (k + 1..qubits).find(|&j| sig[j] == sig[k]) {
                links.push((k, next));
            }
        }
        Self { links }
    }

    /// True when `v` is the least-label member of its orbit under the block
    /// permutations: inside every block, zeros precede ones.
    pub fn is_normal(&self, v: &WeightVertex) -> bool {
        self.links.iter().all(|&(k, next)| v.bit(k) <= v.bit(next))
    }
}

/// Sorted search-order positions of a subset, the key used for orbit
/// canonical forms.
fn order_key(order_pos: &[usize], subset: &[WeightVertex]) -> Vec<usize> {
    let mut key: Vec<usize> = subset.iter().map(|v| order_pos[v.bits as usize]).collect();
    key.sort_unstable();
    key
}

fn order_positions(order: &[WeightVertex]) -> Vec<usize> {
    let mut pos = vec![0usize; order.len()];
    for (i, v) in order.iter().enumerate() {
        pos[v.bits as usize] = i;
    }
    pos
}

/// Depth-first generator of vertex subsets in search order.
///
/// With `Symmetry::On` the tree is pruned to subsets that start at the
/// all-ones vertex and whose every further element is block-normal with
/// respect to the elements before it. Every orbit of the signed-permutation
/// group meets this pruned family (the lexicographically least image of a
/// subset always lies in it), but an orbit may appear more than once.
#[derive(Debug, Clone)]
pub struct SubsetTree {
    qubits: usize,
    symmetry: Symmetry,
    order: Vec<WeightVertex>,
}

impl SubsetTree {
    pub fn new(qubits: usize, symmetry: Symmetry) -> Result<Self, HypercubeError> {
        Ok(Self {
            qubits,
            symmetry,
            order: search_order(qubits)?,
        })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn order(&self) -> &[WeightVertex] {
        &self.order
    }

    /// Search-order positions that may extend `prefix` (given as positions).
    pub fn children(&self, prefix: &[usize]) -> Vec<usize> {
        let start = prefix.last().map_or(0, |&p| p + 1);
        match self.symmetry {
            Symmetry::Off => (start..self.order.len()).collect(),
            Symmetry::On => {
                if prefix.is_empty() {
                    return vec![0];
                }
                let verts: Vec<WeightVertex> = prefix.iter().map(|&p| self.order[p]).collect();
                let blocks = BlockPartition::of(self.qubits, &verts);
                (start..self.order.len())
                    .filter(|&i| blocks.is_normal(&self.order[i]))
                    .collect()
            }
        }
    }

    /// Partition of the tree into independent work units: every admissible
    /// node at depth `split` (expanded), plus every shallower admissible node
    /// of size at least `min_size` (visited alone).
    pub fn work_units<F>(&self, split: usize, min_size: usize, admissible: F) -> Vec<WorkUnit>
    where
        F: Fn(&[WeightVertex]) -> bool,
    {
        let mut units = Vec::new();
        let mut prefix = Vec::new();
        self.units_rec(&mut prefix, split, min_size, &admissible, &mut units);
        units
    }

    fn units_rec<F>(
        &self,
        prefix: &mut Vec<usize>,
        split: usize,
        min_size: usize,
        admissible: &F,
        out: &mut Vec<WorkUnit>,
    ) where
        F: Fn(&[WeightVertex]) -> bool,
    {
        if prefix.len() == split {
            out.push(WorkUnit {
                prefix: prefix.clone(),
                expand: true,
            });
            return;
        }
        if !prefix.is_empty() && prefix.len() >= min_size {
            out.push(WorkUnit {
                prefix: prefix.clone(),
                expand: false,
            });
        }
        for c in self.children(prefix) {
            prefix.push(c);
            let verts: Vec<WeightVertex> = prefix.iter().map(|&p| self.order[p]).collect();
            if admissible(&verts) {
                self.units_rec(prefix, split, min_size, admissible, out);
            }
            prefix.pop();
        }
    }

    pub fn vertices_of(&self, positions: &[usize]) -> Vec<WeightVertex> {
        positions.iter().map(|&p| self.order[p]).collect()
    }
}

/// A node of a [`SubsetTree`]: the subset itself, and, if `expand`, all of
/// its descendants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkUnit {
    pub prefix: Vec<usize>,
    pub expand: bool,
}

/// Streams the `k`-subsets of the hypercube that satisfy `independence`.
///
/// With `Symmetry::Off` every such subset is produced once, in lexicographic
/// order of search positions. With `Symmetry::On` exactly one representative
/// per orbit of the signed-permutation group is produced (the orbit's least
/// element under the search-order key); this needs the whole group, so it is
/// meant for small `L`.
pub fn subsets(
    qubits: usize,
    k: usize,
    symmetry: Symmetry,
    independence: Independence,
) -> Result<impl Iterator<Item = Vec<WeightVertex>>, HypercubeError> {
    let tree = SubsetTree::new(qubits, symmetry)?;
    let units = tree.work_units(1, usize::MAX, |s| independence.holds(s));
    subsets_in_units(tree, units, k, independence)
}

/// The part of [`subsets`] that lives under the given work units; used to
/// split the stream into independently processed chunks.
pub fn subsets_in_units(
    tree: SubsetTree,
    units: Vec<WorkUnit>,
    k: usize,
    independence: Independence,
) -> Result<impl Iterator<Item = Vec<WeightVertex>>, HypercubeError> {
    let qubits = tree.qubits;
    let group = match tree.symmetry {
        Symmetry::On => signed_permutations(qubits),
        Symmetry::Off => Vec::new(),
    };
    let pos = order_positions(&tree.order);
    let mut out = Vec::new();
    for unit in units {
        let mut prefix = unit.prefix.clone();
        collect_rec(&tree, &mut prefix, k, unit.expand, independence, &mut out);
    }
    let symmetry = tree.symmetry;
    Ok(out.into_iter().filter(move |s| match symmetry {
        Symmetry::Off => true,
        Symmetry::On => {
            let key = order_key(&pos, s);
            group.iter().all(|g| {
                let image: Vec<WeightVertex> = s.iter().map(|v| g.apply_vertex(v)).collect();
                order_key(&pos, &image) >= key
            })
        }
    }))
}

fn collect_rec(
    tree: &SubsetTree,
    prefix: &mut Vec<usize>,
    k: usize,
    expand: bool,
    independence: Independence,
    out: &mut Vec<Vec<WeightVertex>>,
) {
    if prefix.len() == k {
        out.push(tree.vertices_of(prefix));
        return;
    }
    if !expand || prefix.len() > k {
        return;
    }
    for c in tree.children(prefix) {
        prefix.push(c);
        if independence.holds(&tree.vertices_of(prefix)) {
            collect_rec(tree, prefix, k, true, independence, out);
        }
        prefix.pop();
    }
}

/// The orbit of a subset under the whole group, as sorted label sets.
pub fn orbit(subset: &[WeightVertex]) -> Vec<Vec<WeightVertex>> {
    let Some(first) = subset.first() else {
        return Vec::new();
    };
    let mut images: Vec<Vec<WeightVertex>> = signed_permutations(first.qubits())
        .iter()
        .map(|g| {
            let mut img: Vec<WeightVertex> = subset.iter().map(|v| g.apply_vertex(v)).collect();
            img.sort();
            img
        })
        .collect();
    images.sort();
    images.dedup();
    images
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use std::collections::BTreeSet;

    #[test]
    fn vertex_counts_and_order() {
        for l in 1..=6 {
            let v = vertices(l).unwrap();
            assert_eq!(v.len(), 1 << l);
            let set: BTreeSet<_> = v.iter().map(WeightVertex::coordinates).collect();
            assert_eq!(set.len(), 1 << l);
            assert!(v.windows(2).all(|w| w[0].bits() < w[1].bits()));
        }
        assert!(vertices(0).is_err());
        assert!(vertices(17).is_err());
    }

    #[test]
    fn single_qubit_vertices() {
        let v = vertices(1).unwrap();
        assert_eq!(v[0].coordinates(), vec![rat(-1, 2)]);
        assert_eq!(v[1].coordinates(), vec![rat(1, 2)]);
    }

    #[test]
    fn bit_convention() {
        let v = vertices(2).unwrap();
        assert_eq!(v[3].coordinates(), vec![rat(1, 2), rat(1, 2)]);
        let w = WeightVertex::from_label("011").unwrap();
        assert_eq!(w.bits(), 3);
        assert_eq!(w.coordinates(), vec![rat(-1, 2), rat(1, 2), rat(1, 2)]);
        assert_eq!(w.to_string(), "[-1/2, +1/2, +1/2]");
        assert_eq!(w.label(), "011");
        assert!(WeightVertex::from_label("0a1").is_err());
        assert!(WeightVertex::new(2, 4).is_err());
    }

    #[test]
    fn dot4_matches_exact_product() {
        let v = vertices(4).unwrap();
        for a in &v {
            for b in &v {
                let exact = exact::dot(&a.coordinates(), &b.coordinates()) * int(4);
                assert_eq!(exact, int(a.dot4(b)));
            }
        }
    }

    #[test]
    fn canonicalize_examples() {
        let s = rat(1, 6);
        assert_eq!(
            canonicalize(&[s.clone(), s.clone(), s.clone()]).components(),
            &[s.clone(), s.clone(), s.clone()]
        );
        assert_eq!(
            canonicalize(&[int(0), rat(1, 2), int(0)]).components(),
            &[rat(1, 2), int(0), int(0)]
        );
        assert_eq!(
            canonicalize(&[-s.clone(), s.clone(), s.clone()]).components(),
            &[s.clone(), s.clone(), s]
        );
    }

    #[test]
    fn every_vertex_canonicalizes_to_the_all_half_point() {
        for v in vertices(5).unwrap() {
            assert_eq!(
                canonicalize(&v.coordinates()).components(),
                vec![rat(1, 2); 5]
            );
        }
    }

    #[test]
    fn group_order_and_equivariance() {
        let g = signed_permutations(3);
        assert_eq!(g.len(), 8 * 6);
        let verts = vertices(3).unwrap();
        for e in &g {
            for v in &verts {
                assert_eq!(
                    e.apply_vertex(v).coordinates(),
                    e.apply_beta(&v.coordinates())
                );
            }
        }
    }

    #[test]
    fn linear_filter_on_two_qubit_pairs() {
        // oracle: all six pairs, ranks by brute force
        let v = vertices(2).unwrap();
        let mut expected = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = (v[i].coordinates(), v[j].coordinates());
                let antipodal = a.iter().zip(&b).all(|(x, y)| *x == -y.clone());
                if !antipodal {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 4);
        let got = subsets(2, 2, Symmetry::Off, Independence::Linear)
            .unwrap()
            .count();
        assert_eq!(got, expected);
        let affine = subsets(2, 2, Symmetry::Off, Independence::Affine)
            .unwrap()
            .count();
        assert_eq!(affine, 6);
    }

    #[test]
    fn w_subset_is_streamed() {
        let w: BTreeSet<WeightVertex> = ["011", "101", "110"]
            .iter()
            .map(|l| WeightVertex::from_label(l).unwrap())
            .collect();
        let found = subsets(3, 3, Symmetry::Off, Independence::Linear)
            .unwrap()
            .any(|s| s.iter().copied().collect::<BTreeSet<_>>() == w);
        assert!(found);
    }

    #[test]
    fn orbit_representatives_cover_the_full_stream() {
        for l in 2..=3 {
            for k in 2..=l {
                for ind in [Independence::Linear, Independence::Affine] {
                    let all: BTreeSet<Vec<WeightVertex>> = subsets(l, k, Symmetry::Off, ind)
                        .unwrap()
                        .map(|mut s| {
                            s.sort();
                            s
                        })
                        .collect();
                    let reps: Vec<Vec<WeightVertex>> =
                        subsets(l, k, Symmetry::On, ind).unwrap().collect();
                    let mut covered = BTreeSet::new();
                    for r in &reps {
                        let orb = orbit(r);
                        // one representative per orbit
                        assert!(orb.iter().all(|s| !covered.contains(s)), "{r:?}");
                        covered.extend(orb);
                    }
                    assert_eq!(covered, all, "L={l} k={k} {ind:?}");
                }
            }
        }
    }

    #[test]
    fn pruned_tree_meets_every_orbit_at_four_qubits() {
        let l = 4;
        let tree = SubsetTree::new(l, Symmetry::On).unwrap();
        let units = tree.work_units(1, usize::MAX, |s| Independence::Affine.holds(s));
        for k in 2..=l {
            let mut pruned = Vec::new();
            for u in &units {
                let mut p = u.prefix.clone();
                collect_rec(
                    &tree,
                    &mut p,
                    k,
                    u.expand,
                    Independence::Affine,
                    &mut pruned,
                );
            }
            let mut covered = BTreeSet::new();
            for s in &pruned {
                covered.extend(orbit(s));
            }
            let all: BTreeSet<Vec<WeightVertex>> =
                subsets(l, k, Symmetry::Off, Independence::Affine)
                    .unwrap()
                    .map(|mut s| {
                        s.sort();
                        s
                    })
                    .collect();
            assert_eq!(covered, all, "k={k}");
            assert!(pruned.len() < all.len());
        }
    }

    #[test]
    fn chunked_stream_equals_whole_stream() {
        let tree = SubsetTree::new(4, Symmetry::Off).unwrap();
        let units = tree.work_units(2, usize::MAX, |s| Independence::Affine.holds(s));
        let whole: Vec<_> = subsets_in_units(tree.clone(), units.clone(), 3, Independence::Affine)
            .unwrap()
            .collect();
        let mut pieces = Vec::new();
        for chunk in units.chunks(7) {
            pieces.extend(
                subsets_in_units(tree.clone(), chunk.to_vec(), 3, Independence::Affine).unwrap(),
            );
        }
        assert_eq!(whole, pieces);
        // no three cube vertices are collinear
        assert_eq!(whole.len(), 16 * 15 * 14 / 6);
    }

    #[test]
    fn block_normal_form() {
        let ones = WeightVertex::from_label("1111").unwrap();
        let b = BlockPartition::of(4, &[ones]);
        assert!(b.is_normal(&WeightVertex::from_label("0011").unwrap()));
        assert!(!b.is_normal(&WeightVertex::from_label("0101").unwrap()));
        let s2 = WeightVertex::from_label("0011").unwrap();
        let b = BlockPartition::of(4, &[ones, s2]);
        assert!(b.is_normal(&WeightVertex::from_label("0101").unwrap()));
        assert!(!b.is_normal(&WeightVertex::from_label("1001").unwrap()));
    }
}
