//! Brute-force reference for the set of critical points.
//!
//! For every vertex subset S of size 1..=L, the point of conv(S) closest to
//! the origin is found by trying every face T ⊆ S: project the origin onto
//! aff(T), keep it if it lies in conv(T) and no point of S is on the origin's
//! side of the hyperplane through it. Nothing here uses the library.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(p: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

pub fn cube(l: usize) -> Vec<Vec<Q>> {
    (0..1u32 << l)
        .map(|b| {
            (0..l)
                .map(|k| {
                    if b >> (l - 1 - k) & 1 == 1 {
                        q(1, 2)
                    } else {
                        q(-1, 2)
                    }
                })
                .collect()
        })
        .collect()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Solves `G c = r` by exact Gauss-Jordan; `None` if singular.
fn gauss_jordan(mut g: Vec<Vec<Q>>, mut r: Vec<Q>) -> Option<Vec<Q>> {
    let n = r.len();
    for col in 0..n {
        let piv = (col..n).find(|&i| !g[i][col].is_zero())?;
        g.swap(col, piv);
        r.swap(col, piv);
        let inv = g[col][col].recip();
        for j in 0..n {
            g[col][j] = &g[col][j] * &inv;
        }
        r[col] = &r[col] * &inv;
        for i in 0..n {
            if i != col && !g[i][col].is_zero() {
                let f = g[i][col].clone();
                for j in 0..n {
                    let t = &f * &g[col][j];
                    g[i][j] -= t;
                }
                let t = &f * &r[col];
                r[i] -= t;
            }
        }
    }
    Some(r)
}

/// Projection of the origin onto aff(T) with barycentric weights, or `None`
/// when T is affinely dependent.
fn project(t: &[&Vec<Q>]) -> Option<(Vec<Q>, Vec<Q>)> {
    let p0 = t[0];
    let d: Vec<Vec<Q>> = t[1..].iter().map(|p| sub(p, p0)).collect();
    let m = d.len();
    let g: Vec<Vec<Q>> = (0..m)
        .map(|i| (0..m).map(|j| dot(&d[i], &d[j])).collect())
        .collect();
    let r: Vec<Q> = d.iter().map(|di| -dot(di, p0)).collect();
    let c = gauss_jordan(g, r)?;
    let mut point = p0.clone();
    for (ci, di) in c.iter().zip(&d) {
        for (x, y) in point.iter_mut().zip(di) {
            *x += ci * y;
        }
    }
    let mut w = vec![Q::one() - c.iter().sum::<Q>()];
    w.extend(c);
    Some((point, w))
}

/// The point of conv(S) nearest the origin.
pub fn min_norm_point(s: &[&Vec<Q>]) -> Vec<Q> {
    let k = s.len();
    for mask in 1u32..1 << k {
        let t: Vec<&Vec<Q>> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| s[i])
            .collect();
        let Some((p, w)) = project(&t) else { continue };
        if w.iter().any(Signed::is_negative) {
            continue;
        }
        let n2 = dot(&p, &p);
        if s.iter().all(|v| dot(v, &p) >= n2) {
            return p;
        }
    }
    unreachable!("every polytope has a nearest point")
}

fn combinations(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), f);
}

/// Sorted (non-increasing) β vectors. Keeps nearest points with all
/// components non-negative, drops `(1/2, ..., 1/2, 0)` unless `raw`, and adds
/// the separable point.
pub fn critical_points(l: usize, raw: bool) -> Vec<Vec<Q>> {
    let verts = cube(l);
    let mut out: Vec<Vec<Q>> = Vec::new();
    let mut excluded = vec![q(1, 2); l];
    excluded[l - 1] = Q::zero();
    for k in 1..=l {
        combinations(verts.len(), k, &mut |idx| {
            let s: Vec<&Vec<Q>> = idx.iter().map(|&i| &verts[i]).collect();
            let mut p = min_norm_point(&s);
            if p.iter().any(Signed::is_negative) {
                return;
            }
            p.sort_by(|a, b| b.cmp(a));
            if (!raw && p == excluded) || out.contains(&p) {
                return;
            }
            out.push(p);
        });
    }
    let sep = vec![q(1, 2); l];
    if !out.contains(&sep) {
        out.push(sep);
    }
    out.sort();
    out
}
