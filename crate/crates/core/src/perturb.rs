//! Index-monotone graph perturbations: edge relocation, the α-transform,
//! tree collapse, and negative-edge addition, each with a checker for the
//! eigenvector conditions under which the index cannot drop.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::roots;
use crate::spectra::{self, IndexResult};

/// Slack allowed when a weak inequality `λ' ≥ λ` is checked numerically.
pub const WEAK_SLACK: f64 = 1e-9;
/// Required gap for a strict inequality `λ' > λ`.
pub const STRICT_MARGIN: f64 = 1e-9;
/// A strict case is only reported when the Rayleigh-quotient lower bound on
/// `λ' − λ` is at least this large, so the increase is numerically visible.
pub const STRICT_BOUND: f64 = 1e-6;
/// Tolerance on eigenvector coordinate comparisons in hypothesis checks.
const COORD_TOL: f64 = 1e-10;

/// Moves the edges `v t` for `t` in `targets` to `u t`, keeping signs.
pub fn relocate_edges(g: &SignedGraph, u: usize, v: usize, targets: &[usize]) -> Result<SignedGraph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut h = g.clone();
    for &t in targets {
        g.check_vertex(t)?;
        let sign = g.sign_of(v, t).ok_or(Error::EdgeMissing(v, t))?;
        if t == u || g.has_edge(u, t) {
            return Err(Error::EdgeCollision(u, t));
        }
        h = h.without_edge(v, t)?.with_edge(u, t, sign)?;
    }
    Ok(h)
}

/// `σ(uv) x_u x_v ≥ 0` on a cut edge, for the computed index eigenvector.
pub fn check_cut_edge_sign(g: &SignedGraph, u: usize, v: usize) -> Result<bool> {
    let sign = g.sign_of(u, v).ok_or(Error::EdgeMissing(u, v))?;
    if !g.is_cut_edge(u, v) {
        return Err(Error::NotCutEdge(u, v));
    }
    let idx = spectra::index(g)?;
    if idx.multiple {
        return Err(Error::MultipleIndex);
    }
    let x = &idx.vector.coords;
    Ok(sign.value() as f64 * x[u] * x[v] >= -WEAK_SLACK)
}

/// Moves every neighbour of `v` other than `u` over to `u`.
pub fn alpha_transform(g: &SignedGraph, u: usize, v: usize) -> Result<SignedGraph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeMissing(u, v));
    }
    if g.degree(u) < 2 || g.degree(v) < 2 {
        return Err(Error::PendantEdge(u, v));
    }
    if g.neighbors(v).iter().any(|&(w, _)| w != u && g.has_edge(u, w)) {
        return Err(Error::EdgeInTriangle(u, v));
    }
    let targets: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| w != u).collect();
    relocate_edges(g, u, v, &targets)
}

/// Which eigenvector condition for a non-decreasing index an α-transform meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaCase {
    /// Positive edge, `x_v ≤ x_u ≤ λ x_v`.
    Weak1,
    /// Negative edge, `x_u, x_v ≥ 0`.
    Weak2,
    /// Positive edge, `x_v < x_u < λ x_v`.
    Strict1,
    /// Negative edge, `x_u, x_v > 0`, `x_u ≠ x_v`.
    Strict2,
}

impl AlphaCase {
    pub fn is_strict(self) -> bool {
        matches!(self, AlphaCase::Strict1 | AlphaCase::Strict2)
    }

    pub fn tag(self) -> &'static str {
        match self {
            AlphaCase::Weak1 => "weak-1",
            AlphaCase::Weak2 => "weak-2",
            AlphaCase::Strict1 => "strict-1",
            AlphaCase::Strict2 => "strict-2",
        }
    }
}

fn alpha_eligible(g: &SignedGraph, u: usize, v: usize) -> Result<Sign> {
    alpha_transform(g, u, v)?;
    Ok(g.sign_of(u, v).expect("checked by alpha_transform"))
}

/// Classifies the α-transform on `uv` against the eigenvector of `idx`.
///
/// Both `x` and `−x` are tried; a strict case wins over a weak one.
pub fn alpha_case_for(sign: Sign, u: usize, v: usize, idx: &IndexResult) -> Option<AlphaCase> {
    let lambda = idx.lambda;
    let mut best = None;
    for flip in [1.0, -1.0] {
        let xu = flip * idx.vector.coords[u];
        let xv = flip * idx.vector.coords[v];
        let case = match sign {
            Sign::Pos => {
                let bound = (xu - xv) * (lambda * xv - xu);
                if xv < xu && xu < lambda * xv && bound >= STRICT_BOUND {
                    Some(AlphaCase::Strict1)
                } else if xv <= xu + COORD_TOL && xu <= lambda * xv + COORD_TOL {
                    Some(AlphaCase::Weak1)
                } else {
                    None
                }
            }
            Sign::Neg => {
                let bound = ((xu - xv) * (lambda * xv + xu)).max((xv - xu) * (lambda * xu + xv));
                if xu > 0.0 && xv > 0.0 && xu != xv && bound >= STRICT_BOUND {
                    Some(AlphaCase::Strict2)
                } else if xu >= -COORD_TOL && xv >= -COORD_TOL {
                    Some(AlphaCase::Weak2)
                } else {
                    None
                }
            }
        };
        match (best, case) {
            (_, Some(c)) if c.is_strict() => return Some(c),
            (None, c) => best = c,
            _ => {}
        }
    }
    best
}

pub fn check_alpha_hypotheses(g: &SignedGraph, u: usize, v: usize) -> Result<Option<AlphaCase>> {
    let sign = alpha_eligible(g, u, v)?;
    let idx = spectra::index(g)?;
    if idx.multiple {
        return Err(Error::MultipleIndex);
    }
    Ok(alpha_case_for(sign, u, v, &idx))
}

/// Whether relocating edges from `v` to `u` meets an index-monotone condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelocationCase {
    /// Cut edges, `x_u ≥ x_v ≥ 0` (or all reversed).
    Weak,
    /// Pendant edges, `x_u > x_v > 0` (or all reversed).
    Strict,
}

pub fn relocation_case_for(g: &SignedGraph, u: usize, v: usize, targets: &[usize], idx: &IndexResult) -> Option<RelocationCase> {
    if targets.is_empty() || !targets.iter().all(|&t| g.is_cut_edge(v, t)) {
        return None;
    }
    let (xu, xv) = (idx.vector.coords[u], idx.vector.coords[v]);
    let (xu, xv) = if xv < 0.0 || (xv == 0.0 && xu < 0.0) { (-xu, -xv) } else { (xu, xv) };
    let pendant = targets.iter().all(|&t| g.degree(t) == 1);
    // x_t = σ x_v / λ for a pendant t, so the Rayleigh bound is (x_u - x_v) s x_v / λ
    let bound = (xu - xv) * targets.len() as f64 * xv / idx.lambda.max(f64::MIN_POSITIVE);
    if pendant && xu > xv && xv > 0.0 && bound >= STRICT_BOUND {
        Some(RelocationCase::Strict)
    } else if xu + COORD_TOL >= xv && xv >= -COORD_TOL {
        Some(RelocationCase::Weak)
    } else {
        None
    }
}

/// Vertices of the tree hanging at `root`: everything reachable from `root`
/// without entering the 2-core, or the whole component if it is a tree.
fn hanging_tree(g: &SignedGraph, root: usize) -> Vec<usize> {
    let core = g.two_core_mask();
    let mut seen = vec![false; g.order()];
    seen[root] = true;
    let mut stack = vec![root];
    let mut out = vec![root];
    while let Some(v) = stack.pop() {
        for &(w, _) in g.neighbors(v) {
            if !seen[w] && !core[w] {
                seen[w] = true;
                out.push(w);
                stack.push(w);
            }
        }
    }
    // a non-core root sees its way towards the core too; keep only the far side
    if !core[root] && core.iter().any(|&c| c) {
        let toward_core = g.neighbors(root).iter().map(|&(w, _)| w).find(|&w| {
            let mut seen = vec![false; g.order()];
            seen[root] = true;
            seen[w] = true;
            let mut stack = vec![w];
            while let Some(a) = stack.pop() {
                if core[a] {
                    return true;
                }
                for &(b, _) in g.neighbors(a) {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            false
        });
        if let Some(w) = toward_core {
            let mut seen = vec![false; g.order()];
            seen[root] = true;
            seen[w] = true;
            let mut stack = vec![root];
            out = vec![root];
            while let Some(a) = stack.pop() {
                for &(b, _) in g.neighbors(a) {
                    if !seen[b] {
                        seen[b] = true;
                        out.push(b);
                        stack.push(b);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Replaces the tree hanging at `root` by a positive star centred at `root`.
pub fn collapse_tree_to_star(g: &SignedGraph, root: usize) -> Result<SignedGraph> {
    if root >= g.order() {
        return Err(Error::NotSubtreeRoot(root));
    }
    let tree = hanging_tree(g, root);
    let mut inside = vec![false; g.order()];
    for &v in &tree {
        inside[v] = true;
    }
    let kept = g
        .edges()
        .iter()
        .filter(|e| !(inside[e.u] && inside[e.v]))
        .map(|e| (e.u, e.v, e.sign));
    let star = tree.iter().filter(|&&w| w != root).map(|&w| (root, w, Sign::Pos));
    SignedGraph::build(g.order(), kept.chain(star).collect::<Vec<_>>())
}

/// `Γ + ũv`: adds `uv` as a negative edge.
pub fn add_negative_edge(g: &SignedGraph, u: usize, v: usize) -> Result<SignedGraph> {
    g.with_edge(u, v, Sign::Neg)
}

/// One step of a scripted reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Relocate { u: usize, v: usize, targets: Vec<usize> },
    Alpha { u: usize, v: usize },
    Collapse { root: usize },
    AddNegativeEdge { u: usize, v: usize },
    RemoveEdge { u: usize, v: usize },
}

impl Move {
    pub fn apply(&self, g: &SignedGraph) -> Result<SignedGraph> {
        match self {
            Move::Relocate { u, v, targets } => relocate_edges(g, *u, *v, targets),
            Move::Alpha { u, v } => alpha_transform(g, *u, *v),
            Move::Collapse { root } => collapse_tree_to_star(g, *root),
            Move::AddNegativeEdge { u, v } => add_negative_edge(g, *u, *v),
            Move::RemoveEdge { u, v } => g.without_edge(*u, *v),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Relocate { u, v, targets } => {
                let t: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
                write!(f, "relocate {u},{v} -> {}", t.join(","))
            }
            Move::Alpha { u, v } => write!(f, "alpha {u},{v}"),
            Move::Collapse { root } => write!(f, "collapse {root}"),
            Move::AddNegativeEdge { u, v } => write!(f, "add-neg-edge {u},{v}"),
            Move::RemoveEdge { u, v } => write!(f, "remove-edge {u},{v}"),
        }
    }
}

/// Applies moves in order; returns the final graph and the index after each
/// step, starting with the input's.
pub fn apply_moves(g: &SignedGraph, moves: &[Move]) -> Result<(SignedGraph, Vec<f64>)> {
    let mut cur = g.clone();
    let mut lambdas = vec![spectra::index(&cur)?.lambda];
    for m in moves {
        cur = m.apply(&cur)?;
        lambdas.push(spectra::index(&cur)?.lambda);
    }
    Ok((cur, lambdas))
}

/// Precondition found to hold before a perturbation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Relocation(RelocationCase),
    Alpha(AlphaCase),
    /// α-transform on a cut edge; no eigenvector condition needed.
    AlphaCutEdge,
    TreeCollapse,
    /// Conditions checked and not met.
    NotMet,
    /// The index is multiple, so eigenvector conditions were not evaluated.
    SkippedMultiple,
    /// The operation carries no monotonicity claim.
    NoClaim,
}

impl Hypothesis {
    pub fn tag(&self) -> String {
        match self {
            Hypothesis::Relocation(RelocationCase::Weak) => "relocate-weak".into(),
            Hypothesis::Relocation(RelocationCase::Strict) => "relocate-strict".into(),
            Hypothesis::Alpha(c) => format!("alpha-{}", c.tag()),
            Hypothesis::AlphaCutEdge => "alpha-cut-edge".into(),
            Hypothesis::TreeCollapse => "tree-collapse".into(),
            Hypothesis::NotMet => "not-met".into(),
            Hypothesis::SkippedMultiple => "skipped-multiple-index".into(),
            Hypothesis::NoClaim => "none".into(),
        }
    }

    /// `Some(true)` for a strict guarantee, `Some(false)` for a weak one.
    pub fn guarantee(&self) -> Option<bool> {
        match self {
            Hypothesis::Relocation(RelocationCase::Strict) => Some(true),
            Hypothesis::Alpha(c) => Some(c.is_strict()),
            Hypothesis::Relocation(RelocationCase::Weak) | Hypothesis::AlphaCutEdge | Hypothesis::TreeCollapse => {
                Some(false)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Operation {
    Relocate { u: usize, v: usize, targets: Vec<usize> },
    Alpha { u: usize, v: usize },
    Collapse { root: usize },
    AddNegativeEdge { u: usize, v: usize },
}

impl Operation {
    pub fn name(&self) -> &'static str {
        match self {
            Operation::Relocate { .. } => "relocate",
            Operation::Alpha { .. } => "alpha",
            Operation::Collapse { .. } => "collapse",
            Operation::AddNegativeEdge { .. } => "add-neg-edge",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationReport {
    pub input: SignedGraph,
    pub output: SignedGraph,
    pub operation: Operation,
    pub hypothesis: Hypothesis,
    /// Eigenvector coordinates the hypothesis check looked at.
    pub coordinates: Vec<(usize, f64)>,
    pub lambda_before: f64,
    pub lambda_after: f64,
    pub monotone: bool,
}

impl PerturbationReport {
    /// Whether the outcome respects the guarantee of the hypothesis, if any.
    pub fn guarantee_held(&self) -> bool {
        match self.hypothesis.guarantee() {
            Some(true) => self.lambda_after > self.lambda_before + STRICT_MARGIN,
            Some(false) => self.monotone,
            None => true,
        }
    }
}

/// Index from the exact characteristic polynomial, for re-checking close calls.
pub fn precise_index(g: &SignedGraph) -> Result<f64> {
    roots::largest_root(&spectra::charpoly_exact(g))
}

pub fn perturb(g: &SignedGraph, op: &Operation) -> Result<PerturbationReport> {
    let (output, touched) = match op {
        Operation::Relocate { u, v, targets } => (relocate_edges(g, *u, *v, targets)?, vec![*u, *v]),
        Operation::Alpha { u, v } => (alpha_transform(g, *u, *v)?, vec![*u, *v]),
        Operation::Collapse { root } => (collapse_tree_to_star(g, *root)?, vec![*root]),
        Operation::AddNegativeEdge { u, v } => (add_negative_edge(g, *u, *v)?, vec![*u, *v]),
    };
    let before = spectra::index(g)?;
    let after = spectra::index(&output)?;
    let eigen_dependent = matches!(op, Operation::Relocate { .. })
        || matches!(op, Operation::Alpha { u, v } if !g.is_cut_edge(*u, *v));
    let hypothesis = if eigen_dependent && before.multiple {
        Hypothesis::SkippedMultiple
    } else {
        match op {
            Operation::Relocate { u, v, targets } => relocation_case_for(g, *u, *v, targets, &before)
                .map(Hypothesis::Relocation)
                .unwrap_or(Hypothesis::NotMet),
            Operation::Alpha { u, v } => {
                let sign = g.sign_of(*u, *v).expect("edge checked");
                match (before.multiple, alpha_case_for(sign, *u, *v, &before)) {
                    (false, Some(c)) if c.is_strict() => Hypothesis::Alpha(c),
                    _ if g.is_cut_edge(*u, *v) => Hypothesis::AlphaCutEdge,
                    (_, Some(c)) => Hypothesis::Alpha(c),
                    (_, None) => Hypothesis::NotMet,
                }
            }
            Operation::Collapse { .. } => Hypothesis::TreeCollapse,
            Operation::AddNegativeEdge { .. } => Hypothesis::NoClaim,
        }
    };
    let coordinates = touched.iter().map(|&w| (w, before.vector.coords[w])).collect();
    let mut report = PerturbationReport {
        input: g.clone(),
        output,
        operation: op.clone(),
        hypothesis,
        coordinates,
        lambda_before: before.lambda,
        lambda_after: after.lambda,
        monotone: after.lambda >= before.lambda - WEAK_SLACK,
    };
    if !report.guarantee_held() {
        report.lambda_before = precise_index(&report.input)?;
        report.lambda_after = precise_index(&report.output)?;
        report.monotone = report.lambda_after >= report.lambda_before - WEAK_SLACK;
    }
    Ok(report)
}

fn edge_list(g: &SignedGraph) -> String {
    let parts: Vec<String> = g.edges().iter().map(|e| format!("{}-{}{}", e.u, e.v, e.sign.symbol())).collect();
    parts.join(" ")
}

impl fmt::Display for PerturbationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = match &self.operation {
            Operation::Relocate { u, v, targets } => {
                let t: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
                format!("{u},{v} targets={}", t.join(","))
            }
            Operation::Alpha { u, v } | Operation::AddNegativeEdge { u, v } => format!("{u},{v}"),
            Operation::Collapse { root } => format!("root={root}"),
        };
        writeln!(f, "operation: {} {}", self.operation.name(), args)?;
        writeln!(f, "input: n={} m={} {}", self.input.order(), self.input.size(), edge_list(&self.input))?;
        writeln!(f, "output: n={} m={} {}", self.output.order(), self.output.size(), edge_list(&self.output))?;
        writeln!(f, "hypothesis: {}", self.hypothesis.tag())?;
        let coords: Vec<String> = self.coordinates.iter().map(|(v, x)| format!("x{v}={}", crate::fmt_num(*x))).collect();
        writeln!(f, "eigenvector: {}", coords.join(" "))?;
        writeln!(f, "lambda_before: {}", crate::fmt_num(self.lambda_before))?;
        writeln!(f, "lambda_after: {}", crate::fmt_num(self.lambda_after))?;
        writeln!(f, "monotone: {}", self.monotone)?;
        let guarantee = match self.hypothesis.guarantee() {
            Some(true) => "strict",
            Some(false) => "weak",
            None => "none",
        };
        writeln!(f, "guarantee: {guarantee}")?;
        writeln!(f, "guarantee_held: {}", self.guarantee_held())
    }
}
