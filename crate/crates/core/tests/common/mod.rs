//! Reference routines for the integration tests. Nothing here calls into the
//! library's spectral code.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_spectra::{Sign, SignedGraph};

/// Dense adjacency matrix as `f64`, built from the edge list.
pub fn dense(g: &SignedGraph) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut a = vec![vec![0.0; n]; n];
    for e in g.edges() {
        let s = e.sign.value() as f64;
        a[e.u][e.v] = s;
        a[e.v][e.u] = s;
    }
    a
}

/// Cyclic Jacobi rotations. Returns eigenvalues in descending order and the
/// matching unit eigenvectors.
pub fn jacobi(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|k| v[k][i]).collect()).collect();
    (values, vectors)
}

/// Index, a unit index eigenvector, and the gap to the second eigenvalue.
pub fn index_with_vector(g: &SignedGraph) -> (f64, Vec<f64>, f64) {
    let (vals, vecs) = jacobi(dense(g));
    let gap = if vals.len() > 1 { vals[0] - vals[1] } else { f64::INFINITY };
    (vals[0], vecs[0].clone(), gap)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Neg
    } else {
        Sign::Pos
    }
}

/// Connected signed graph: a random labelled tree plus each other pair with
/// probability `p`, independent uniform signs.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        present[u][v] = true;
        edges.push((u, v, random_sign(rng)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.random_bool(p) {
                present[u][v] = true;
                edges.push((u, v, random_sign(rng)));
            }
        }
    }
    // shuffle labels so the tree is not always rooted at 0
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    SignedGraph::build(n, edges.into_iter().map(|(u, v, s)| (perm[u], perm[v], s))).expect("valid edge list")
}

/// Signed graph of random order in `lo..=hi` with a random edge density.
pub fn random_signed(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> SignedGraph {
    let n = rng.random_range(lo..=hi);
    let p = [0.0, 0.1, 0.25, 0.5][rng.random_range(0..4)];
    random_connected(rng, n, p)
}

/// Whether `uv` separates the graph, by a search that avoids that edge.
pub fn separates(g: &SignedGraph, u: usize, v: usize) -> bool {
    let mut seen = vec![false; g.order()];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(a) = stack.pop() {
        for &(b, _) in g.neighbors(a) {
            if (a == u && b == v) || (a == v && b == u) || seen[b] {
                continue;
            }
            seen[b] = true;
            stack.push(b);
        }
    }
    !seen[v]
}

/// Random tree on `n` vertices plus up to `extra` further edges, random signs.
pub fn random_sparse(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> SignedGraph {
    let mut edges: Vec<(usize, usize, Sign)> = (1..n).map(|v| (rng.random_range(0..v), v, random_sign(rng))).collect();
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u != v && !edges.iter().any(|&(a, b, _)| (a.min(b), a.max(b)) == (u, v)) {
            edges.push((u, v, random_sign(rng)));
        }
    }
    SignedGraph::build(n, edges).expect("valid edge list")
}
