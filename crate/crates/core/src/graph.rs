//! Signed graph data model and structural queries.
//!
//! Vertices are the dense integers `0..n`. Edges are stored once, with
//! `u < v`, sorted ascending; adjacency lists are kept alongside for the
//! traversal-heavy algorithms elsewhere in the crate.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Edge sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Neg
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple undirected graph with a `±1` label on every edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign.symbol(), e.v)?;
        }
        write!(f, ")")
    }
}

impl SignedGraph {
    /// Validates and normalizes an edge list.
    pub fn build<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, sign });
        }
        list.sort();
        for w in list.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(Error::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Convenience constructor taking `±1` integers as signs.
    pub fn from_signed_pairs(n: usize, edges: &[(usize, usize, i8)]) -> Result<SignedGraph> {
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v, s) in edges {
            let sign = Sign::from_value(s as i64).ok_or_else(|| {
                Error::InvalidArgument(format!("sign {s} on edge {u}-{v} is not +1 or -1"))
            })?;
            out.push((u, v, sign));
        }
        Self::build(n, out)
    }

    /// All-positive graph on the given unordered pairs.
    pub fn unsigned(n: usize, pairs: &[(usize, usize)]) -> Result<SignedGraph> {
        Self::build(n, pairs.iter().map(|&(u, v)| (u, v, Sign::Pos)))
    }

    pub fn empty(n: usize) -> SignedGraph {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> SignedGraph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort();
        }
        SignedGraph { n, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn sign_of(&self, u: usize, v: usize) -> Option<Sign> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by(|&(w, _)| w.cmp(&v))
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign_of(u, v).is_some()
    }

    pub fn negative_edges(&self) -> Vec<Edge> {
        self.edges.iter().copied().filter(|e| e.sign.is_negative()).collect()
    }

    /// Same underlying graph, every edge positive.
    pub fn all_positive(&self) -> SignedGraph {
        self.map_signs(|_| Sign::Pos)
    }

    /// Same underlying graph with signs recomputed per edge.
    pub fn map_signs<F: FnMut(&Edge) -> Sign>(&self, mut f: F) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: f(e), ..*e })
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Adds an edge; fails on an existing pair or a loop.
    pub fn with_edge(&self, u: usize, v: usize, sign: Sign) -> Result<SignedGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(Error::EdgeCollision(u, v));
        }
        let mut edges = self.edges.clone();
        edges.push(Edge { u: u.min(v), v: u.max(v), sign });
        edges.sort();
        Ok(Self::from_sorted(self.n, edges))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<SignedGraph> {
        let (a, b) = (u.min(v), u.max(v));
        let pos = self
            .edges
            .iter()
            .position(|e| e.u == a && e.v == b)
            .ok_or(Error::EdgeMissing(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Appends `k` isolated vertices.
    pub fn with_extra_vertices(&self, k: usize) -> SignedGraph {
        Self::from_sorted(self.n + k, self.edges.clone())
    }

    /// Relabels vertex `v` as `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        debug_assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.u], perm[e.v]);
                Edge { u: a.min(b), v: a.max(b), sign: e.sign }
            })
            .collect::<Vec<_>>();
        let mut edges = edges;
        edges.sort();
        Self::from_sorted(self.n, edges)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        let mut data = vec![0i8; self.n * self.n];
        for e in &self.edges {
            data[e.u * self.n + e.v] = e.sign.value();
            data[e.v * self.n + e.u] = e.sign.value();
        }
        AdjacencyMatrix { n: self.n, data }
    }

    /// Induced subgraph on the complement of `removed`, relabelled compactly.
    ///
    /// The second component maps each old vertex to its new label.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(SignedGraph, Vec<Option<usize>>)> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        Ok(self.induced_by_mask(&gone))
    }

    pub(crate) fn induced_by_mask(&self, gone: &[bool]) -> (SignedGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (map[e.u], map[e.v]) {
                (Some(a), Some(b)) => Some(Edge { u: a, v: b, sign: e.sign }),
                _ => None,
            })
            .collect();
        (Self::from_sorted(next, edges), map)
    }

    /// Induced subgraph on `keep` (in the given order, so `keep[i]` becomes `i`).
    pub fn induced(&self, keep: &[usize]) -> SignedGraph {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| map[e.u] != usize::MAX && map[e.v] != usize::MAX)
            .map(|e| {
                let (a, b) = (map[e.u], map[e.v]);
                Edge { u: a.min(b), v: a.max(b), sign: e.sign }
            })
            .collect();
        edges.sort();
        Self::from_sorted(keep.len(), edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Number of independent cycles, `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.components().len() - self.n
    }

    /// Bridges of the underlying graph, as `(u, v)` with `u < v`, sorted.
    pub fn cut_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if top.2 < self.adj[v].len() {
                    let w = self.adj[v][top.2].0;
                    top.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_cut_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.cut_edges().binary_search(&key).is_ok()
    }

    /// Marks the vertices of the 2-core: what remains after repeatedly
    /// deleting vertices of degree at most one.
    pub fn two_core_mask(&self) -> Vec<bool> {
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &(w, _) in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push(w);
                    }
                }
            }
        }
        alive
    }

    /// Every simple cycle containing `v`.
    pub fn cycles_through(&self, v: usize) -> Vec<Cycle> {
        let allowed = vec![true; self.n];
        self.cycles_through_within(v, &allowed)
    }

    /// Simple cycles through `v` using only vertices with `allowed[w]`.
    pub(crate) fn cycles_through_within(&self, v: usize, allowed: &[bool]) -> Vec<Cycle> {
        let mut out = Vec::new();
        if v >= self.n || !allowed[v] {
            return out;
        }
        let mut on_path = vec![false; self.n];
        let mut path = vec![v];
        on_path[v] = true;
        self.extend_cycles(v, v, allowed, &mut on_path, &mut path, &mut out, |_, _| true);
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out.dedup_by(|a, b| a.vertices == b.vertices);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycles<F>(
        &self,
        start: usize,
        cur: usize,
        allowed: &[bool],
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        out: &mut Vec<Cycle>,
        accept: F,
    ) where
        F: Fn(usize, usize) -> bool + Copy,
    {
        for &(w, _) in &self.adj[cur] {
            if w == start && path.len() >= 3 {
                out.push(Cycle::from_path(self, path));
            } else if allowed[w] && !on_path[w] && accept(start, w) {
                on_path[w] = true;
                path.push(w);
                self.extend_cycles(start, w, allowed, on_path, path, out, accept);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    /// All simple cycles, each listed once in canonical orientation.
    pub fn simple_cycles(&self) -> Vec<Cycle> {
        let allowed = vec![true; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            let mut on_path = vec![false; self.n];
            let mut path = vec![s];
            on_path[s] = true;
            // smallest vertex of every reported cycle is its start
            self.extend_cycles(s, s, &allowed, &mut on_path, &mut path, &mut out, |st, w| w > st);
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out.dedup_by(|a, b| a.vertices == b.vertices);
        out
    }

    /// Writes the `.sg` text form: `n m`, then one `u v c` line per edge.
    pub fn to_sg(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            s.push_str(&format!("{} {} {}\n", e.u, e.v, e.sign.symbol()));
        }
        s
    }

    /// Parses the `.sg` text form. Blank lines and `#` lines are skipped.
    pub fn parse_sg(text: &str) -> Result<SignedGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(Error::Parse { line: hline, message: "expected `n m`".into() });
        }
        let parse_num = |s: &str, line: usize| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a non-negative integer: {s}"),
            })
        };
        let n = parse_num(nums[0], hline)?;
        let m = parse_num(nums[1], hline)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            let parts: Vec<&str> = text.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse { line, message: "expected `u v c`".into() });
            }
            let u = parse_num(parts[0], line)?;
            let v = parse_num(parts[1], line)?;
            let sign = match parts[2] {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                other => {
                    return Err(Error::Parse { line, message: format!("bad sign `{other}`") })
                }
            };
            edges.push((u, v, sign));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Self::build(n, edges)
    }
}

/// Dense `{-1, 0, 1}` adjacency matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    data: Vec<i8>,
}

impl AdjacencyMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[i8]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j) as f64)
    }
}

/// A simple cycle: vertex order around the cycle plus its sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    /// Rotated so the smallest vertex comes first, oriented so the second
    /// vertex is smaller than the last.
    pub vertices: Vec<usize>,
    pub sign: Sign,
}

impl Cycle {
    pub(crate) fn from_path(g: &SignedGraph, path: &[usize]) -> Cycle {
        let k = path.len();
        let mut sign = Sign::Pos;
        for i in 0..k {
            let s = g
                .sign_of(path[i], path[(i + 1) % k])
                .expect("cycle path follows edges");
            sign = sign * s;
        }
        Cycle { vertices: canonical_rotation(path), sign }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        let mut out: Vec<(usize, usize)> = (0..k)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

fn canonical_rotation(path: &[usize]) -> Vec<usize> {
    let k = path.len();
    let start = (0..k).min_by_key(|&i| path[i]).unwrap_or(0);
    let fwd: Vec<usize> = (0..k).map(|i| path[(start + i) % k]).collect();
    if k >= 3 && fwd[1] > fwd[k - 1] {
        let mut rev = vec![fwd[0]];
        rev.extend(fwd[1..].iter().rev());
        rev
    } else {
        fwd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri_neg() -> SignedGraph {
        SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = tri_neg();
        assert_eq!(g.size(), 3);
        assert_eq!(g.order(), 3);
        let k1 = SignedGraph::build(1, []).unwrap();
        assert_eq!(k1.size(), 0);
        assert_eq!(
            SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (0, 1, -1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(SignedGraph::from_signed_pairs(2, &[(1, 1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            SignedGraph::from_signed_pairs(2, &[(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edges_are_normalized() {
        let g = SignedGraph::from_signed_pairs(3, &[(2, 1, 1), (1, 0, -1)]).unwrap();
        let e: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(e, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(tri_neg().adjacency().rows(), vec![vec![0, 1, -1], vec![1, 0, 1], vec![-1, 1, 0]]);
        assert_eq!(SignedGraph::empty(1).adjacency().rows(), vec![vec![0]]);
        let p = SignedGraph::from_signed_pairs(2, &[(0, 1, -1)]).unwrap();
        assert_eq!(p.adjacency().rows(), vec![vec![0, -1], vec![-1, 0]]);
    }

    #[test]
    fn delete_vertices_examples() {
        let (h, map) = tri_neg().delete_vertices(&[2]).unwrap();
        assert_eq!(h, SignedGraph::from_signed_pairs(2, &[(0, 1, 1)]).unwrap());
        assert_eq!(map, vec![Some(0), Some(1), None]);

        let g = tri_neg();
        assert_eq!(g.delete_vertices(&[]).unwrap().0, g);

        let c4 = SignedGraph::from_signed_pairs(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
            .unwrap();
        let (p3, _) = c4.delete_vertices(&[0]).unwrap();
        assert_eq!(p3, SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (1, 2, 1)]).unwrap());
        assert!(c4.delete_vertices(&[4]).is_err());
    }

    #[test]
    fn cut_edge_examples() {
        let g = SignedGraph::from_signed_pairs(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, -1)])
            .unwrap();
        assert_eq!(g.cut_edges(), vec![(2, 3)]);
        let tree = SignedGraph::unsigned(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tree.cut_edges().len(), 4);
        let c5 = SignedGraph::unsigned(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(c5.cut_edges().is_empty());
    }

    #[test]
    fn cycles_through_examples() {
        let cs = tri_neg().cycles_through(0);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices, vec![0, 1, 2]);
        assert_eq!(cs[0].sign, Sign::Neg);

        let tree = SignedGraph::unsigned(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(tree.cycles_through(1).is_empty());

        // theta graph B(P1, P2, P2): 3-degree vertices 0 and 1
        let th = SignedGraph::unsigned(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let cs = th.cycles_through(0);
        let mut lens: Vec<usize> = cs.iter().map(Cycle::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 4]);
        assert!(cs.iter().all(|c| c.sign == Sign::Pos));
        assert_eq!(th.simple_cycles().len(), 3);
    }

    #[test]
    fn two_core_of_triangle_with_tail() {
        let g = SignedGraph::unsigned(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.two_core_mask(), vec![true, true, true, false, false]);
    }

    #[test]
    fn sg_format_round_trip_and_comments() {
        let text = "# triangle\n3 3\n0 2 -\n1 2 +\n0 1 +\n";
        let g = SignedGraph::parse_sg(text).unwrap();
        assert_eq!(g, tri_neg());
        assert_eq!(g.to_sg(), "3 3\n0 1 +\n0 2 -\n1 2 +\n");
        assert!(matches!(SignedGraph::parse_sg("3 2\n0 1 +\n"), Err(Error::Parse { .. })));
        assert!(matches!(SignedGraph::parse_sg("2 1\n0 1 x\n"), Err(Error::Parse { .. })));
    }
}
