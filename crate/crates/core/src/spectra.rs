//! Adjacency spectra and exact characteristic polynomials.
//!
//! The characteristic polynomial has two independent routes: a
//! Faddeev–LeVerrier recurrence over exact integers, and the signed Schwenk
//! vertex recursion. They share nothing beyond the graph type.

use std::collections::HashMap;

use nalgebra::SymmetricEigen;
use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::poly::Polynomial;

/// Eigenvalues closer than this are treated as one repeated eigenvalue.
pub const MULTIPLICITY_TOL: f64 = 1e-8;
/// Largest graph accepted by the Schwenk recursion.
pub const SCHWENK_MAX_ORDER: usize = 25;

/// Eigenvalues of `A(Γ)` in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn index(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Unit eigenvector for the index, first non-negligible coordinate positive.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexVector {
    pub coords: Vec<f64>,
    /// `‖A x − λ x‖₂`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexResult {
    pub lambda: f64,
    pub vector: IndexVector,
    /// Set when `λ₁ − λ₂ < MULTIPLICITY_TOL`; the vector is then an arbitrary
    /// unit vector of the eigenspace.
    pub multiple: bool,
}

fn decompose(g: &SignedGraph) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
    let n = g.order();
    let max_niter = 100 * n * n;
    SymmetricEigen::try_new(g.adjacency().to_f64(), f64::EPSILON, max_niter)
        .ok_or(Error::ConvergenceFailure(max_niter))
}

pub fn eigenvalues(g: &SignedGraph) -> Result<Spectrum> {
    if g.order() == 0 {
        return Ok(Spectrum { values: Vec::new(), tolerance: f64::EPSILON });
    }
    let eig = decompose(g)?;
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(Spectrum { values, tolerance: f64::EPSILON })
}

/// Largest eigenvalue with a unit eigenvector.
pub fn index(g: &SignedGraph) -> Result<IndexResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidArgument("index of the empty graph".into()));
    }
    let eig = decompose(g)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let top = order[0];
    let lambda = eig.eigenvalues[top];
    let multiple = n > 1 && lambda - eig.eigenvalues[order[1]] < MULTIPLICITY_TOL;

    let mut coords: Vec<f64> = eig.eigenvectors.column(top).iter().copied().collect();
    let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut coords {
        *x /= norm;
    }
    if let Some(first) = coords.iter().find(|x| x.abs() > 1e-10) {
        if *first < 0.0 {
            for x in &mut coords {
                *x = -*x;
            }
        }
    }
    let residual = residual(g, lambda, &coords);
    Ok(IndexResult { lambda, vector: IndexVector { coords, residual }, multiple })
}

/// `‖A x − λ x‖₂` computed from the edge list.
pub fn residual(g: &SignedGraph, lambda: f64, x: &[f64]) -> f64 {
    let mut ax = vec![0.0; g.order()];
    for e in g.edges() {
        let s = e.sign.value() as f64;
        ax[e.u] += s * x[e.v];
        ax[e.v] += s * x[e.u];
    }
    ax.iter()
        .zip(x)
        .map(|(a, xi)| (a - lambda * xi).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Exact `det(xI − A)` by the Faddeev–LeVerrier recurrence.
///
/// Tries 128-bit arithmetic first and falls back to big integers on overflow.
pub fn charpoly_exact(g: &SignedGraph) -> Polynomial {
    if let Some(c) = faddeev::<i128>(g) {
        return Polynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    Polynomial::new(faddeev::<BigInt>(g).expect("big integers do not overflow"))
}

fn faddeev<T>(g: &SignedGraph) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + From<i64> + PartialEq,
{
    let n = g.order();
    let adj: Vec<&[(usize, crate::graph::Sign)]> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut c: Vec<T> = vec![T::zero(); n + 1];
    c[n] = T::one();
    // a_m = A · M_{k-1}, row-major
    let mut a_m: Vec<T> = vec![T::zero(); n * n];
    for k in 1..=n {
        let mut m = a_m;
        for i in 0..n {
            m[i * n + i] = m[i * n + i].checked_add(&c[n - k + 1])?;
        }
        let mut next = vec![T::zero(); n * n];
        for i in 0..n {
            for &(j, s) in adj[i] {
                let (row_i, row_j) = (i * n, j * n);
                for col in 0..n {
                    let cur = &next[row_i + col];
                    next[row_i + col] = if s.is_negative() {
                        cur.checked_sub(&m[row_j + col])?
                    } else {
                        cur.checked_add(&m[row_j + col])?
                    };
                }
            }
        }
        let mut trace = T::zero();
        for i in 0..n {
            trace = trace.checked_add(&next[i * n + i])?;
        }
        let kk = T::from(k as i64);
        let q = trace.checked_div(&kk)?;
        debug_assert!(q.checked_mul(&kk)? == trace, "Faddeev division must be exact");
        c[n - k] = T::zero().checked_sub(&q)?;
        a_m = next;
    }
    Some(c)
}

/// Exact characteristic polynomial by the signed Schwenk recursion, expanding
/// first at `v`:
///
/// `Φ(Γ) = xΦ(Γ−v) − Σ_{u~v} Φ(Γ−u−v) − 2 Σ_{C∋v} σ(C) Φ(Γ−C)`.
///
/// Sub-results are memoized by remaining vertex set; disconnected remainders
/// are split into components.
pub fn charpoly_schwenk(g: &SignedGraph, v: usize) -> Result<Polynomial> {
    let n = g.order();
    if n > SCHWENK_MAX_ORDER {
        return Err(Error::TooLarge(format!("Schwenk recursion limited to n <= {SCHWENK_MAX_ORDER}")));
    }
    g.check_vertex(v)?;
    let rank = g.cycle_rank();
    if rank > 2 {
        return Err(Error::CycleRankTooHigh(rank));
    }
    let mut state = Schwenk { g, memo: HashMap::new() };
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(state.expand_at(full, v))
}

struct Schwenk<'a> {
    g: &'a SignedGraph,
    memo: HashMap<u64, Polynomial>,
}

impl Schwenk<'_> {
    fn phi(&mut self, mask: u64) -> Polynomial {
        if mask == 0 {
            return Polynomial::one();
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let comps = self.components(mask);
        let out = if comps.len() > 1 {
            comps.into_iter().fold(Polynomial::one(), |acc, c| &acc * &self.phi(c))
        } else {
            let v = self.pick_vertex(mask);
            self.expand_at(mask, v)
        };
        self.memo.insert(mask, out.clone());
        out
    }

    fn expand_at(&mut self, mask: u64, v: usize) -> Polynomial {
        let g = self.g;
        let bit = |w: usize| 1u64 << w;
        let rest = mask & !bit(v);
        let mut out = self.phi(rest).shift(1);
        for &(u, _) in g.neighbors(v) {
            if mask & bit(u) != 0 {
                out = &out - &self.phi(rest & !bit(u));
            }
        }
        let allowed: Vec<bool> = (0..g.order()).map(|w| mask & bit(w) != 0).collect();
        for c in g.cycles_through_within(v, &allowed) {
            let without = c.vertices.iter().fold(mask, |m, &w| m & !bit(w));
            let term = self.phi(without).scale(&BigInt::from(2 * c.sign.value() as i64));
            out = &out - &term;
        }
        out
    }

    fn pick_vertex(&self, mask: u64) -> usize {
        let g = self.g;
        (0..g.order())
            .filter(|&w| mask & (1u64 << w) != 0)
            .min_by_key(|&w| {
                let deg = g.neighbors(w).iter().filter(|&&(u, _)| mask & (1u64 << u) != 0).count();
                (deg, w)
            })
            .expect("non-empty mask")
    }

    fn components(&self, mask: u64) -> Vec<u64> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let mut comp = 1u64 << s;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in self.g.neighbors(v) {
                    let b = 1u64 << w;
                    if mask & b != 0 && comp & b == 0 {
                        comp |= b;
                        stack.push(w);
                    }
                }
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }
}
