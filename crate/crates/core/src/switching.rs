//! Switching, balance detection, and signature normal forms.

use std::fmt;
use std::str::FromStr;

use crate::bicyclic::{BicyclicShape, ShapeKind};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Edge, Sign, SignedGraph};

/// A vertex signing `θ: V → {+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![Sign::Pos; n])
    }

    pub fn from_signs(signs: Vec<Sign>) -> Self {
        SwitchingFunction(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Pointwise product; switching by the result equals switching by both.
    pub fn compose(&self, other: &SwitchingFunction) -> SwitchingFunction {
        SwitchingFunction(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Pos)
    }
}

impl fmt::Display for SwitchingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for SwitchingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Pos),
                '-' => Ok(Sign::Neg),
                other => Err(Error::Parse { line: 1, message: format!("bad switching sign `{other}`") }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SwitchingFunction)
    }
}

/// `σ^θ(uv) = θ(u) σ(uv) θ(v)`.
pub fn switch(g: &SignedGraph, theta: &SwitchingFunction) -> SignedGraph {
    assert_eq!(theta.len(), g.order(), "switching function must cover every vertex");
    g.map_signs(|e| theta.get(e.u) * e.sign * theta.get(e.v))
}

/// Witness for balance or unbalance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceCertificate {
    /// Switching by this function makes every edge positive.
    Balanced(SwitchingFunction),
    /// One negative cycle per unbalanced component.
    Unbalanced(Vec<Cycle>),
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced(_))
    }
}

/// BFS spanning forest rooted at the smallest vertex of each component.
struct SpanningForest {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    /// θ that turns every tree edge positive, with θ(root) = +1.
    theta: Vec<Sign>,
}

impl SpanningForest {
    fn new(g: &SignedGraph) -> Self {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut theta = vec![Sign::Pos; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &(w, s) in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        depth[w] = depth[v] + 1;
                        theta[w] = theta[v] * s;
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest { parent, depth, theta }
    }

    fn is_tree_edge(&self, e: &Edge) -> bool {
        self.parent[e.v] == Some(e.u) || self.parent[e.u] == Some(e.v)
    }

    /// Closes the tree path between the endpoints of a non-tree edge.
    fn fundamental_cycle(&self, g: &SignedGraph, e: &Edge) -> Cycle {
        let (mut a, mut b) = (e.u, e.v);
        let mut left = vec![a];
        let mut right = vec![b];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("non-root");
            left.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("non-root");
            right.push(b);
        }
        while a != b {
            a = self.parent[a].expect("non-root");
            b = self.parent[b].expect("non-root");
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        Cycle::from_path(g, &left)
    }
}

/// Balance test by spanning-tree labelling.
pub fn is_balanced(g: &SignedGraph) -> BalanceCertificate {
    let forest = SpanningForest::new(g);
    let comps = g.components();
    let mut comp_of = vec![0; g.order()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut witness: Vec<Option<Cycle>> = vec![None; comps.len()];
    for e in g.edges() {
        if forest.is_tree_edge(e) {
            continue;
        }
        let switched = forest.theta[e.u] * e.sign * forest.theta[e.v];
        let slot = &mut witness[comp_of[e.u]];
        if switched.is_negative() && slot.is_none() {
            *slot = Some(forest.fundamental_cycle(g, e));
        }
    }
    let cycles: Vec<Cycle> = witness.into_iter().flatten().collect();
    if cycles.is_empty() {
        BalanceCertificate::Balanced(SwitchingFunction(forest.theta))
    } else {
        BalanceCertificate::Unbalanced(cycles)
    }
}

/// Switching function that makes every BFS-tree edge positive.
pub fn tree_normalizer(g: &SignedGraph) -> SwitchingFunction {
    SwitchingFunction(SpanningForest::new(g).theta)
}

/// Representative of the switching class that depends only on the labelled
/// underlying graph: all BFS-tree edges positive.
pub fn tree_normal_form(g: &SignedGraph) -> SignedGraph {
    switch(g, &tree_normalizer(g))
}

fn same_underlying(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    g1.order() == g2.order()
        && g1.size() == g2.size()
        && g1.edges().iter().zip(g2.edges()).all(|(a, b)| a.u == b.u && a.v == b.v)
}

/// Finds `θ` with `g2 = switch(g1, θ)`, or `None` when the classes differ.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<SwitchingFunction>> {
    if !same_underlying(g1, g2) {
        return Err(Error::UnderlyingGraphMismatch);
    }
    let t1 = tree_normalizer(g1);
    let t2 = tree_normalizer(g2);
    if switch(g1, &t1) == switch(g2, &t2) {
        Ok(Some(t1.compose(&t2)))
    } else {
        Ok(None)
    }
}

/// Canonical one-negative-edge representative of an unbalanced bicyclic graph.
///
/// Infinity and dumbbell types get one negative edge (the smallest) on each
/// negative cycle. Theta types get a single negative edge, the smallest edge
/// of the path shared by the two negative cycles. Everything else is positive.
pub fn normalize_signature(g: &SignedGraph, shape: &BicyclicShape) -> Result<SignedGraph> {
    if g.size() != g.order() + 1 || !g.is_connected() {
        return Err(Error::NotBicyclic(format!("n = {}, m = {}", g.order(), g.size())));
    }
    let mut negative: Vec<(usize, usize)> = Vec::new();
    match shape.kind {
        ShapeKind::Infinity { .. } | ShapeKind::Dumbbell { .. } => {
            for c in &shape.cycles {
                if c.sign.is_negative() {
                    negative.push(c.edges()[0]);
                }
            }
        }
        ShapeKind::Theta { .. } => {
            // cycles[i] avoids paths[i]; the negative pair shares the path the
            // positive cycle avoids
            if let Some(i) = shape.cycles.iter().position(|c| c.sign == Sign::Pos) {
                if shape.cycles.iter().filter(|c| c.sign.is_negative()).count() == 2 {
                    let path = &shape.paths[i];
                    let edge = path
                        .windows(2)
                        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                        .min()
                        .expect("theta path has an edge");
                    negative.push(edge);
                }
            }
        }
    }
    if negative.is_empty() {
        return Err(Error::Balanced);
    }
    let target = g.map_signs(|e| {
        if negative.contains(&(e.u, e.v)) {
            Sign::Neg
        } else {
            Sign::Pos
        }
    });
    match switching_equivalent(g, &target)? {
        Some(_) => Ok(target),
        None => Err(Error::NotBicyclic("shape does not describe this graph".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicyclic::base;

    fn g(n: usize, e: &[(usize, usize, i8)]) -> SignedGraph {
        SignedGraph::from_signed_pairs(n, e).unwrap()
    }

    fn theta(s: &str) -> SwitchingFunction {
        s.parse().unwrap()
    }

    #[test]
    fn switch_examples() {
        let t = g(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]);
        assert_eq!(switch(&t, &SwitchingFunction::identity(3)), t);
        let p = g(2, &[(0, 1, 1)]);
        assert_eq!(switch(&p, &theta("-+")), g(2, &[(0, 1, -1)]));
        // C4 0-1-2-3-0 with 0-1 negative; switching vertex 1 moves it to 1-2
        let c4 = g(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        assert_eq!(switch(&c4, &theta("+-++")), g(4, &[(0, 1, 1), (1, 2, -1), (2, 3, 1), (0, 3, 1)]));
    }

    #[test]
    fn switching_is_an_involution() {
        let c4 = g(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        let th = theta("-+-+");
        assert_eq!(switch(&switch(&c4, &th), &th), c4);
    }

    #[test]
    fn balance_examples() {
        let c5 = SignedGraph::unsigned(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        match is_balanced(&c5) {
            BalanceCertificate::Balanced(th) => assert!(th.is_identity()),
            other => panic!("{other:?}"),
        }

        let t = g(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]);
        match is_balanced(&t) {
            BalanceCertificate::Unbalanced(cs) => {
                assert_eq!(cs.len(), 1);
                assert_eq!(cs[0].vertices, vec![0, 1, 2]);
                assert_eq!(cs[0].sign, Sign::Neg);
            }
            other => panic!("{other:?}"),
        }

        let c4 = g(4, &[(0, 1, -1), (1, 2, -1), (2, 3, 1), (0, 3, 1)]);
        match is_balanced(&c4) {
            BalanceCertificate::Balanced(th) => {
                assert!(!th.is_identity());
                assert!(switch(&c4, &th).negative_edges().is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn disconnected_balance_reports_each_component() {
        let two = g(6, &[(0, 1, 1), (1, 2, 1), (0, 2, -1), (3, 4, 1), (4, 5, -1), (3, 5, 1)]);
        match is_balanced(&two) {
            BalanceCertificate::Unbalanced(cs) => assert_eq!(cs.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equivalence_examples() {
        let pos = g(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        let neg = g(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]);
        assert_eq!(switching_equivalent(&pos, &neg).unwrap(), None);

        let a = g(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        let b = g(4, &[(0, 1, 1), (1, 2, 1), (2, 3, -1), (0, 3, 1)]);
        let th = switching_equivalent(&a, &b).unwrap().expect("same cycle sign");
        assert_eq!(switch(&a, &th), b);

        let other = g(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        assert_eq!(switching_equivalent(&a, &other), Err(Error::UnderlyingGraphMismatch));
    }

    #[test]
    fn normalize_infinity_with_three_negative_edges() {
        // B(3,3) at centre 0: triangles 0-1-2 and 0-3-4; left triangle all negative
        let gr = g(5, &[(0, 1, -1), (1, 2, -1), (0, 2, -1), (0, 3, 1), (3, 4, 1), (0, 4, 1)]);
        let (_, shape) = base(&gr).unwrap();
        let out = normalize_signature(&gr, &shape).unwrap();
        assert_eq!(out.negative_edges().len(), 1);
        assert_eq!((out.negative_edges()[0].u, out.negative_edges()[0].v), (0, 1));
        assert!(switching_equivalent(&gr, &out).unwrap().is_some());
        assert_eq!(normalize_signature(&out, &base(&out).unwrap().1).unwrap(), out);
    }

    #[test]
    fn normalize_theta_with_two_negative_edges_at_branch_vertex() {
        // K4 - e with branch vertices 0 and 1; e1 = 0-2, e2 = 0-3 negative, e3 = 0-1
        let gr = g(4, &[(0, 1, 1), (0, 2, -1), (1, 2, 1), (0, 3, -1), (1, 3, 1)]);
        let (_, shape) = base(&gr).unwrap();
        let out = normalize_signature(&gr, &shape).unwrap();
        let neg = out.negative_edges();
        assert_eq!(neg.len(), 1);
        assert_eq!((neg[0].u, neg[0].v), (0, 1));
    }

    #[test]
    fn normalize_rejects_balanced_and_non_bicyclic() {
        let gr = g(4, &[(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, 1)]);
        let (_, shape) = base(&gr).unwrap();
        assert_eq!(normalize_signature(&gr, &shape), Err(Error::Balanced));
        let tri = g(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]);
        assert!(matches!(normalize_signature(&tri, &shape), Err(Error::NotBicyclic(_))));
    }
}
