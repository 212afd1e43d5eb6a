//! Isomorphism up to switching.
//!
//! Tree edges can always be switched positive without touching a cycle, so a
//! signed graph is determined up to switching isomorphism by its 2-core
//! signature together with the rooted trees hanging off each core vertex.
//! For bicyclic graphs the core is one of three small shapes, and walking it
//! in every symmetric order gives an exact canonical code.

use std::collections::HashMap;

use crate::bicyclic::{self, BicyclicShape, ShapeKind};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Sign, SignedGraph};
use crate::spectra;
use crate::switching;

/// Largest order accepted by [`switching_isomorphic`].
pub const MAX_ISO_ORDER: usize = 40;

/// Canonical code of a bicyclic graph; equal codes mean isomorphic up to
/// switching (or plain isomorphism for the underlying variant).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassCode(Vec<u32>);

impl ClassCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Parenthesis code of the tree rooted at `root`, not entering `blocked`.
fn rooted_code(g: &SignedGraph, root: usize, blocked: &[bool]) -> Vec<u32> {
    // iterative post-order so deep trees do not exhaust the stack
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &(w, _) in g.neighbors(v) {
            if parent[w] == usize::MAX && !blocked[w] {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut codes: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
    for &v in order.iter().rev() {
        let mut kids = codes.remove(&v).unwrap_or_default();
        kids.sort();
        let mut c = vec![1];
        for k in kids {
            c.extend(k);
        }
        c.push(0);
        if v == root {
            return c;
        }
        codes.entry(parent[v]).or_default().push(c);
    }
    unreachable!("root is visited")
}

/// Code of the tree hanging at each core vertex (empty for non-core ones).
fn hanging_codes(g: &SignedGraph, core: &[bool]) -> Vec<Vec<u32>> {
    (0..g.order())
        .map(|v| if core[v] { rooted_code(g, v, core) } else { Vec::new() })
        .collect()
}

/// Cycle vertices after `start`, walking forwards or backwards.
fn cycle_from(c: &Cycle, start: usize, forward: bool) -> Vec<usize> {
    let len = c.vertices.len();
    let at = c.vertices.iter().position(|&v| v == start).expect("start on cycle");
    (1..len)
        .map(|k| if forward { c.vertices[(at + k) % len] } else { c.vertices[(at + len - k) % len] })
        .collect()
}

fn oriented(path: &[usize], from: usize) -> Vec<usize> {
    if path[0] == from {
        path.to_vec()
    } else {
        path.iter().rev().copied().collect()
    }
}

/// Every symmetric walk over the base: the core vertex order and the cycle
/// signs in matching order.
fn traversals(shape: &BicyclicShape) -> Vec<(Vec<usize>, Vec<Sign>)> {
    let mut out = Vec::new();
    let c = &shape.cycles;
    match shape.kind {
        ShapeKind::Infinity { p, q } => {
            let centre = *c[0].vertices.iter().find(|v| c[1].contains(**v)).expect("shared vertex");
            let orders: &[[usize; 2]] = if p == q { &[[0, 1], [1, 0]] } else { &[[0, 1]] };
            for &[i, j] in orders {
                for (fi, fj) in [(true, true), (true, false), (false, true), (false, false)] {
                    let mut seq = vec![centre];
                    seq.extend(cycle_from(&c[i], centre, fi));
                    seq.extend(cycle_from(&c[j], centre, fj));
                    out.push((seq, vec![c[i].sign, c[j].sign]));
                }
            }
        }
        ShapeKind::Dumbbell { p, q, .. } => {
            let bridge = &shape.paths[0];
            let ends = [bridge[0], bridge[bridge.len() - 1]];
            for (x, y) in [(ends[0], ends[1]), (ends[1], ends[0])] {
                let cx = c.iter().find(|cy| cy.contains(x)).expect("cycle at bridge end");
                let cy = c.iter().find(|cy| cy.contains(y)).expect("cycle at bridge end");
                if p != q && cx.len() < cy.len() {
                    continue;
                }
                let walk = oriented(bridge, x);
                for (fx, fy) in [(true, true), (true, false), (false, true), (false, false)] {
                    let mut seq = vec![x];
                    seq.extend(cycle_from(cx, x, fx));
                    seq.extend(&walk[1..walk.len() - 1]);
                    seq.push(y);
                    seq.extend(cycle_from(cy, y, fy));
                    out.push((seq, vec![cx.sign, cy.sign]));
                }
            }
        }
        ShapeKind::Theta { .. } => {
            let paths = &shape.paths;
            let (a, b) = (paths[0][0], paths[0][paths[0].len() - 1]);
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            for (x, y) in [(a, b), (b, a)] {
                for perm in perms {
                    let lens: Vec<usize> = perm.iter().map(|&i| paths[i].len()).collect();
                    if lens[0] < lens[1] || lens[1] < lens[2] {
                        continue;
                    }
                    let mut seq = vec![x, y];
                    for &i in &perm {
                        let w = oriented(&paths[i], x);
                        seq.extend(&w[1..w.len() - 1]);
                    }
                    out.push((seq, perm.iter().map(|&i| c[i].sign).collect()));
                }
            }
        }
    }
    out
}

fn kind_header(kind: &ShapeKind) -> Vec<u32> {
    match *kind {
        ShapeKind::Infinity { p, q } => vec![0, p as u32, q as u32, 0],
        ShapeKind::Dumbbell { p, l, q } => vec![1, p as u32, l as u32, q as u32],
        ShapeKind::Theta { k, l, m } => vec![2, k as u32, l as u32, m as u32],
    }
}

fn code_with(g: &SignedGraph, signed: bool) -> Result<ClassCode> {
    let (_, shape) = bicyclic::base(g)?;
    let mut core = vec![false; g.order()];
    for &v in &shape.base_vertices {
        core[v] = true;
    }
    let trees = hanging_codes(g, &core);
    let best = traversals(&shape)
        .into_iter()
        .map(|(seq, signs)| {
            let mut code = kind_header(&shape.kind);
            for v in seq {
                code.extend(&trees[v]);
            }
            if signed {
                code.extend(signs.iter().map(|s| s.is_negative() as u32));
            }
            code
        })
        .min()
        .expect("at least one traversal");
    Ok(ClassCode(best))
}

/// Canonical code of a bicyclic signed graph up to isomorphism and switching.
pub fn bicyclic_code(g: &SignedGraph) -> Result<ClassCode> {
    code_with(g, true)
}

/// Canonical code of the underlying graph of a bicyclic graph.
pub fn underlying_code(g: &SignedGraph) -> Result<ClassCode> {
    code_with(g, false)
}

fn is_bicyclic(g: &SignedGraph) -> bool {
    g.is_connected() && g.size() == g.order() + 1
}

/// Code of an unrooted tree component: the smaller code over its centres.
fn unrooted_code(g: &SignedGraph, comp: &[usize]) -> Vec<u32> {
    let n = g.order();
    let mut in_comp = vec![false; n];
    for &v in comp {
        in_comp[v] = true;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| if in_comp[v] { g.degree(v) } else { 0 }).collect();
    let mut layer: Vec<usize> = comp.iter().copied().filter(|&v| deg[v] <= 1).collect();
    let mut left = comp.len();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &(w, _) in g.neighbors(v) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let blocked: Vec<bool> = in_comp.iter().map(|&c| !c).collect();
    layer.iter().map(|&c| rooted_code(g, c, &blocked)).min().expect("non-empty tree")
}

/// The 2-core with a colour per core vertex, plus tree-component codes.
struct CoreView {
    core: Vec<usize>,
    colour: Vec<Vec<u32>>,
    forest: Vec<Vec<u32>>,
}

fn core_view(g: &SignedGraph) -> CoreView {
    let mask = g.two_core_mask();
    let trees = hanging_codes(g, &mask);
    let core: Vec<usize> = (0..g.order()).filter(|&v| mask[v]).collect();
    let colour = core.iter().map(|&v| trees[v].clone()).collect();
    let mut forest: Vec<Vec<u32>> = g
        .components()
        .into_iter()
        .filter(|c| c.iter().all(|&v| !mask[v]))
        .map(|c| unrooted_code(g, &c))
        .collect();
    forest.sort();
    CoreView { core, colour, forest }
}

/// Backtracking search over colour-preserving isomorphisms between two
/// cores; calls `accept` on each complete map until it returns true.
fn search_core_maps(
    g1: &SignedGraph,
    v1: &CoreView,
    g2: &SignedGraph,
    v2: &CoreView,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let k = v1.core.len();
    let pos2: HashMap<usize, usize> = v2.core.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pos1: HashMap<usize, usize> = v1.core.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let core_adj = |g: &SignedGraph, pos: &HashMap<usize, usize>, v: usize| -> Vec<usize> {
        g.neighbors(v).iter().filter_map(|(w, _)| pos.get(w).copied()).collect()
    };
    let adj1: Vec<Vec<usize>> = v1.core.iter().map(|&v| core_adj(g1, &pos1, v)).collect();
    let adj2: Vec<Vec<usize>> = v2.core.iter().map(|&v| core_adj(g2, &pos2, v)).collect();
    let mut adjm2 = vec![false; k * k];
    for (i, ns) in adj2.iter().enumerate() {
        for &j in ns {
            adjm2[i * k + j] = true;
        }
    }
    // visit order: breadth-first so each vertex after the first of its
    // component has an already-mapped neighbour
    let mut order = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    for s in 0..k {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            for &w in &adj1[order[i]] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let compatible = |a: usize, b: usize| adj1[a].len() == adj2[b].len() && v1.colour[a] == v2.colour[b];
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; k];

    fn rec(
        depth: usize,
        order: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        adj1: &[Vec<usize>],
        adjm2: &[bool],
        compatible: &dyn Fn(usize, usize) -> bool,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = map.len();
        if depth == k {
            return accept(map);
        }
        let a = order[depth];
        for b in 0..k {
            if used[b] || !compatible(a, b) {
                continue;
            }
            let ok = adj1[a].iter().all(|&w| map[w] == usize::MAX || adjm2[b * k + map[w]]);
            // mapped neighbours of b must come from neighbours of a
            let count_mapped = adj1[a].iter().filter(|&&w| map[w] != usize::MAX).count();
            let count_b = (0..k).filter(|&c| used[c] && adjm2[b * k + c]).count();
            if !ok || count_mapped != count_b {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if rec(depth + 1, order, map, used, adj1, adjm2, compatible, accept) {
                return true;
            }
            map[a] = usize::MAX;
            used[b] = false;
        }
        false
    }
    rec(0, &order, &mut map, &mut used, &adj1, &adjm2, &compatible, accept)
}

/// Whether some relabelling of `g1` is switching equivalent to `g2`.
pub fn switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > MAX_ISO_ORDER {
            return Err(Error::TooLarge(format!(
                "switching isomorphism is limited to {MAX_ISO_ORDER} vertices, got {}",
                g.order()
            )));
        }
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let (mut d1, mut d2) = (g1.degrees(), g2.degrees());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 || spectra::charpoly_exact(g1) != spectra::charpoly_exact(g2) {
        return Ok(false);
    }
    if is_bicyclic(g1) && is_bicyclic(g2) {
        return Ok(bicyclic_code(g1)? == bicyclic_code(g2)?);
    }
    let (v1, v2) = (core_view(g1), core_view(g2));
    if v1.forest != v2.forest || v1.core.len() != v2.core.len() {
        return Ok(false);
    }
    let (mut c1, mut c2) = (v1.colour.clone(), v2.colour.clone());
    c1.sort();
    c2.sort();
    if c1 != c2 {
        return Ok(false);
    }
    let core1 = g1.induced(&v1.core);
    let core2 = g2.induced(&v2.core);
    let mut found = false;
    search_core_maps(g1, &v1, g2, &v2, &mut |map| {
        let mapped = core1.relabel(map);
        found = matches!(switching::switching_equivalent(&mapped, &core2), Ok(Some(_)));
        found
    });
    Ok(found)
}
