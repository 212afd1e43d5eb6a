//! Bicyclic bases, their classification, and the five extremal families.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Sign, SignedGraph};
use crate::poly::Polynomial;
use crate::roots;
use crate::table1;

/// Largest order the families are built for (dense matrices).
pub const MAX_FAMILY_ORDER: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeKind {
    /// Two cycles `C_p`, `C_q` sharing one vertex, `p >= q`.
    Infinity { p: usize, q: usize },
    /// Disjoint cycles `C_p`, `C_q` joined by a path of length `l`, `p >= q`.
    Dumbbell { p: usize, l: usize, q: usize },
    /// Three internally disjoint paths of lengths `k >= l >= m`.
    Theta { k: usize, l: usize, m: usize },
}

impl ShapeKind {
    pub fn name(&self) -> &'static str {
        match self {
            ShapeKind::Infinity { .. } => "infinity",
            ShapeKind::Dumbbell { .. } => "dumbbell",
            ShapeKind::Theta { .. } => "theta",
        }
    }

    pub fn base_order(&self) -> usize {
        match *self {
            ShapeKind::Infinity { p, q } => p + q - 1,
            ShapeKind::Dumbbell { p, l, q } => p + q + l - 1,
            ShapeKind::Theta { k, l, m } => k + l + m - 1,
        }
    }

    /// All-positive base graph of this shape.
    pub fn build(&self) -> SignedGraph {
        match *self {
            ShapeKind::Infinity { p, q } => infinity_graph(p, q),
            ShapeKind::Dumbbell { p, l, q } => dumbbell_graph(p, l, q),
            ShapeKind::Theta { k, l, m } => theta_graph(k, l, m),
        }
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ShapeKind::Infinity { p, q } => write!(f, "Infinity({p},{q})"),
            ShapeKind::Dumbbell { p, l, q } => write!(f, "Dumbbell({p},{l},{q})"),
            ShapeKind::Theta { k, l, m } => write!(f, "Theta({k},{l},{m})"),
        }
    }
}

/// Classification of a bicyclic graph by its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicyclicShape {
    pub kind: ShapeKind,
    /// Base vertices, in the labels of the classified graph, sorted.
    pub base_vertices: Vec<usize>,
    /// Infinity and dumbbell: the two cycles, longer first. Theta: three
    /// cycles, where `cycles[i]` is the union of the two paths other than
    /// `paths[i]`.
    pub cycles: Vec<Cycle>,
    /// Theta: the three branch paths, longest first. Dumbbell: the joining
    /// path. Infinity: empty.
    pub paths: Vec<Vec<usize>>,
}

impl BicyclicShape {
    pub fn cycle_signs(&self) -> Vec<Sign> {
        self.cycles.iter().map(|c| c.sign).collect()
    }

    pub fn is_unbalanced(&self) -> bool {
        self.cycles.iter().any(|c| c.sign.is_negative())
    }
}

/// Strips pendant trees and classifies the remaining base.
pub fn base(g: &SignedGraph) -> Result<(SignedGraph, BicyclicShape)> {
    let n = g.order();
    if !g.is_connected() || g.size() != n + 1 {
        return Err(Error::NotBicyclic(format!(
            "need a connected graph with m = n + 1, got n = {n}, m = {}",
            g.size()
        )));
    }
    let core = g.two_core_mask();
    let verts: Vec<usize> = (0..n).filter(|&v| core[v]).collect();
    let core_deg = |v: usize| g.neighbors(v).iter().filter(|&&(w, _)| core[w]).count();
    let branch: Vec<usize> = verts.iter().copied().filter(|&v| core_deg(v) > 2).collect();

    // follows degree-2 core vertices from `from` through `first` until a
    // branch vertex is reached; returns the full path including both ends
    let walk = |from: usize, first: usize| -> Vec<usize> {
        let mut path = vec![from, first];
        let (mut prev, mut cur) = (from, first);
        while core_deg(cur) == 2 {
            let next = g
                .neighbors(cur)
                .iter()
                .map(|&(w, _)| w)
                .find(|&w| core[w] && w != prev)
                .expect("degree-2 core vertex continues");
            prev = cur;
            cur = next;
            path.push(cur);
        }
        path
    };
    let core_nbrs = |v: usize| -> Vec<usize> {
        g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| core[w]).collect()
    };

    let (kind, cycles, paths) = match branch.as_slice() {
        [c] if core_deg(*c) == 4 => {
            let mut loops: Vec<Vec<usize>> = Vec::new();
            for w in core_nbrs(*c) {
                let mut p = walk(*c, w);
                p.pop();
                let mut key = p.clone();
                key.sort_unstable();
                if !loops.iter().any(|l| {
                    let mut k = l.clone();
                    k.sort_unstable();
                    k == key
                }) {
                    loops.push(p);
                }
            }
            let mut cycles: Vec<Cycle> = loops.iter().map(|p| Cycle::from_path(g, p)).collect();
            cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a.vertices.cmp(&b.vertices)));
            let kind = ShapeKind::Infinity { p: cycles[0].len(), q: cycles[1].len() };
            (kind, cycles, Vec::new())
        }
        [a, b] => {
            let walks: Vec<Vec<usize>> = core_nbrs(*a).into_iter().map(|w| walk(*a, w)).collect();
            if walks.iter().all(|p| p.last() == Some(b)) {
                let mut paths = walks;
                paths.sort_by(|x, y| y.len().cmp(&x.len()).then(x.cmp(y)));
                let cycles = (0..3)
                    .map(|i| {
                        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                        let mut ring = paths[j].clone();
                        ring.extend(paths[k][1..paths[k].len() - 1].iter().rev());
                        Cycle::from_path(g, &ring)
                    })
                    .collect();
                let kind = ShapeKind::Theta {
                    k: paths[0].len() - 1,
                    l: paths[1].len() - 1,
                    m: paths[2].len() - 1,
                };
                (kind, cycles, paths)
            } else {
                let bridge = walks
                    .iter()
                    .find(|p| p.last() == Some(b))
                    .cloned()
                    .ok_or_else(|| Error::NotBicyclic("unrecognised base".into()))?;
                let loop_at = |x: usize| -> Result<Cycle> {
                    let p = core_nbrs(x)
                        .into_iter()
                        .map(|w| walk(x, w))
                        .find(|p| p.last() == Some(&x))
                        .ok_or_else(|| Error::NotBicyclic("unrecognised base".into()))?;
                    Ok(Cycle::from_path(g, &p[..p.len() - 1]))
                };
                let mut cycles = vec![loop_at(*a)?, loop_at(*b)?];
                cycles.sort_by(|x, y| y.len().cmp(&x.len()).then(x.vertices.cmp(&y.vertices)));
                let kind = ShapeKind::Dumbbell {
                    p: cycles[0].len(),
                    l: bridge.len() - 1,
                    q: cycles[1].len(),
                };
                (kind, cycles, vec![bridge])
            }
        }
        _ => return Err(Error::NotBicyclic("unrecognised base".into())),
    };
    let base_graph = g.induced(&verts);
    Ok((base_graph, BicyclicShape { kind, base_vertices: verts, cycles, paths }))
}

/// `B(p, q)`: cycles `0,1..p-1` and `0,p..p+q-2` sharing vertex 0.
pub fn infinity_graph(p: usize, q: usize) -> SignedGraph {
    let mut pairs = ring(&(0..p).collect::<Vec<_>>());
    let mut second = vec![0];
    second.extend(p..p + q - 1);
    pairs.extend(ring(&second));
    SignedGraph::unsigned(p + q - 1, &pairs).expect("valid infinity graph")
}

/// `B(p, l, q)`: cycle on `0..p`, cycle on the last `q` vertices, joined by a
/// path of length `l` from 0 to the first vertex of the second cycle.
pub fn dumbbell_graph(p: usize, l: usize, q: usize) -> SignedGraph {
    let n = p + q + l - 1;
    let mut pairs = ring(&(0..p).collect::<Vec<_>>());
    let start = n - q;
    pairs.extend(ring(&(start..n).collect::<Vec<_>>()));
    let mut path = vec![0];
    path.extend(p..start);
    path.push(start);
    pairs.extend(path.windows(2).map(|w| (w[0], w[1])));
    SignedGraph::unsigned(n, &pairs).expect("valid dumbbell graph")
}

/// `B(P_k, P_l, P_m)`: branch vertices 0 and 1 joined by three paths.
pub fn theta_graph(k: usize, l: usize, m: usize) -> SignedGraph {
    let n = k + l + m - 1;
    let mut pairs = Vec::new();
    let mut next = 2;
    for len in [k, l, m] {
        let mut path = vec![0];
        for _ in 1..len {
            path.push(next);
            next += 1;
        }
        path.push(1);
        pairs.extend(path.windows(2).map(|w| (w[0], w[1])));
    }
    SignedGraph::unsigned(n, &pairs).expect("valid theta graph")
}

fn ring(vs: &[usize]) -> Vec<(usize, usize)> {
    (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect()
}

/// Attaches `count` positive pendant vertices to `at`.
pub fn attach_pendants(g: &SignedGraph, at: usize, count: usize) -> SignedGraph {
    let n = g.order();
    let mut h = g.with_extra_vertices(count);
    for i in 0..count {
        h = h.with_edge(at, n + i, Sign::Pos).expect("fresh vertex");
    }
    h
}

/// One of the five largest-index unbalanced bicyclic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalFamily {
    pub id: usize,
}

/// Structures recovered by matching exact characteristic polynomials against
/// the reference table (see `enumerate::match_table1`). Vertex 0 carries all
/// pendants except in family 5.
///
/// 1: `B(3,3)`, one negative triangle, pendants at the shared vertex.
/// 2: `B(P2,P2,P1)`, negative edge on a length-2 path, pendants at a branch vertex.
/// 3: `B(P2,P2,P1)`, the chord negative, pendants at a branch vertex.
/// 4: `B(3,3)`, both triangles negative, pendants at the shared vertex.
/// 5: `B(P2,P2,P1)`, negative edge on one length-2 path, pendants at the
///    middle vertex of the other.
const FAMILY_BASES: [(&[(usize, usize, i8)], usize, usize); 5] = [
    (&[(0, 1, -1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (0, 4, 1), (3, 4, 1)], 5, 0),
    (&[(0, 1, 1), (0, 2, -1), (1, 2, 1), (0, 3, 1), (1, 3, 1)], 4, 0),
    (&[(0, 1, -1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, 1)], 4, 0),
    (&[(0, 1, -1), (0, 2, 1), (1, 2, 1), (0, 3, -1), (0, 4, 1), (3, 4, 1)], 5, 0),
    (&[(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, -1), (1, 3, 1)], 4, 2),
];

/// Smallest order at which each family's reference polynomial is defined.
const FAMILY_MIN_ORDER: [usize; 5] = [6, 4, 4, 6, 5];

impl ExtremalFamily {
    pub fn new(id: usize) -> Result<Self> {
        if (1..=5).contains(&id) {
            Ok(ExtremalFamily { id })
        } else {
            Err(Error::InvalidArgument(format!("family id {id} is not in 1..=5")))
        }
    }

    pub fn all() -> [ExtremalFamily; 5] {
        [1, 2, 3, 4, 5].map(|id| ExtremalFamily { id })
    }

    pub fn min_order(&self) -> usize {
        FAMILY_MIN_ORDER[self.id - 1]
    }

    pub fn construct(&self, n: usize) -> Result<SignedGraph> {
        if n < self.min_order() || n > MAX_FAMILY_ORDER {
            return Err(Error::UnsupportedN(n));
        }
        let (edges, b, at) = FAMILY_BASES[self.id - 1];
        let base = SignedGraph::from_signed_pairs(b, edges)?;
        Ok(attach_pendants(&base, at, n - b))
    }

    /// Coefficients of `f_i` at order `n`, constant term first.
    pub fn f_coeffs(&self, n: i64) -> Vec<i64> {
        match self.id {
            1 => vec![n - 5, 0, -n, 0, 1],
            2 => vec![2 * n - 4, 0, -(n + 1), 0, 1],
            3 => vec![2 * n - 8, 4, -(n + 1), 0, 1],
            4 => vec![-n + 5, -(n - 1), 1, 1],
            5 => vec![n - 4, -(n - 2), -1, 1],
            _ => unreachable!("family id checked on construction"),
        }
    }

    pub fn f_polynomial(&self, n: usize) -> Polynomial {
        Polynomial::from_i64(&self.f_coeffs(n as i64))
    }

    /// Closed-form `Φ(Γ_i, x)` at order `n`.
    pub fn charpoly_formula(&self, n: usize) -> Polynomial {
        let label = ["G1", "G2", "G3", "G4", "G5"][self.id - 1];
        table1::row(label).expect("family rows present").factored_at(n)
    }

    /// Largest root of `f_i`.
    pub fn index(&self, n: usize) -> Result<f64> {
        roots::largest_root(&self.f_polynomial(n))
    }
}

pub fn construct_family(i: usize, n: usize) -> Result<SignedGraph> {
    ExtremalFamily::new(i)?.construct(n)
}

pub fn f_polynomial(i: usize, n: usize) -> Result<Polynomial> {
    Ok(ExtremalFamily::new(i)?.f_polynomial(n))
}

pub fn family_index(i: usize, n: usize) -> Result<f64> {
    let fam = ExtremalFamily::new(i)?;
    if n < fam.min_order() || n > MAX_FAMILY_ORDER {
        return Err(Error::UnsupportedN(n));
    }
    fam.index(n)
}
