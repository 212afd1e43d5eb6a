//! Exhaustive and sampled checks over unbalanced bicyclic signed graphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicyclic::{self, ExtremalFamily, ShapeKind};
use crate::error::{Error, Result};
use crate::fmt_num;
use crate::graph::{Sign, SignedGraph};
use crate::iso::{self, ClassCode};
use crate::poly::Polynomial;
use crate::roots;
use crate::spectra;
use crate::switching;
use crate::table1::{Table1Row, TABLE1};

pub use crate::iso::switching_isomorphic;

/// Largest order enumerated exhaustively.
pub const MAX_ENUM_ORDER: usize = 9;
/// Largest base order in the reference-table search space.
pub const TABLE1_BASE_LIMIT: usize = 8;

#[cfg(feature = "parallel")]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

/// All base shapes with at most `max_order` vertices.
pub fn bases_up_to(max_order: usize) -> Vec<ShapeKind> {
    let mut out = Vec::new();
    for q in 3..=max_order {
        for p in q..=max_order {
            let k = ShapeKind::Infinity { p, q };
            if k.base_order() <= max_order {
                out.push(k);
            }
            for l in 1..=max_order {
                let k = ShapeKind::Dumbbell { p, l, q };
                if k.base_order() <= max_order {
                    out.push(k);
                }
            }
        }
    }
    for m in 1..=max_order {
        for l in m.max(2)..=max_order {
            for k in l..=max_order {
                let kind = ShapeKind::Theta { k, l, m };
                if kind.base_order() <= max_order {
                    out.push(kind);
                }
            }
        }
    }
    out
}

fn add_leaf(g: &SignedGraph, at: usize) -> SignedGraph {
    bicyclic::attach_pendants(g, at, 1)
}

/// One all-positive representative per isomorphism class of connected
/// bicyclic graphs on `n` vertices, in canonical-code order.
pub fn underlying_bicyclic(n: usize) -> Vec<SignedGraph> {
    let mut all = BTreeMap::new();
    for kind in bases_up_to(n) {
        let mut layer: BTreeMap<ClassCode, SignedGraph> = BTreeMap::new();
        let g = kind.build();
        layer.insert(iso::underlying_code(&g).expect("base is bicyclic"), g);
        for _ in kind.base_order()..n {
            let mut next = BTreeMap::new();
            for g in layer.values() {
                for v in 0..g.order() {
                    let h = add_leaf(g, v);
                    next.entry(iso::underlying_code(&h).expect("still bicyclic")).or_insert(h);
                }
            }
            layer = next;
        }
        all.extend(layer);
    }
    all.into_values().collect()
}

/// Two edges whose removal leaves a spanning tree, chosen so that their signs
/// set the two independent cycle signs.
fn cycle_basis_edges(g: &SignedGraph) -> [(usize, usize); 2] {
    let (_, shape) = bicyclic::base(g).expect("bicyclic input");
    match shape.kind {
        ShapeKind::Theta { .. } => [
            (shape.paths[0][0], shape.paths[0][1]),
            (shape.paths[1][0], shape.paths[1][1]),
        ],
        _ => {
            let c = &shape.cycles;
            [(c[0].vertices[0], c[0].vertices[1]), (c[1].vertices[0], c[1].vertices[1])]
        }
    }
}

/// The distinct unbalanced switching classes on the underlying graph of `g`.
pub fn unbalanced_signatures(g: &SignedGraph) -> Vec<SignedGraph> {
    let [e1, e2] = cycle_basis_edges(g);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let (k1, k2) = (key(e1.0, e1.1), key(e2.0, e2.1));
    let mut seen = BTreeMap::new();
    for (s1, s2) in [(Sign::Neg, Sign::Pos), (Sign::Pos, Sign::Neg), (Sign::Neg, Sign::Neg)] {
        let h = g.map_signs(|e| {
            let k = (e.u, e.v);
            if k == k1 {
                s1
            } else if k == k2 {
                s2
            } else {
                Sign::Pos
            }
        });
        if switching::is_balanced(&h).is_balanced() {
            continue;
        }
        seen.entry(iso::bicyclic_code(&h).expect("bicyclic")).or_insert(h);
    }
    seen.into_values().collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnumEntry {
    pub graph: SignedGraph,
    pub lambda: f64,
    pub kind: ShapeKind,
    pub code: ClassCode,
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub n: usize,
    pub underlying_count: usize,
    pub class_count: usize,
    /// Classes per base type: infinity, dumbbell, theta.
    pub per_kind: [usize; 3],
    /// Sorted by decreasing index, ties by code.
    pub entries: Vec<EnumEntry>,
    pub elapsed: Duration,
}

fn kind_slot(k: &ShapeKind) -> usize {
    match k {
        ShapeKind::Infinity { .. } => 0,
        ShapeKind::Dumbbell { .. } => 1,
        ShapeKind::Theta { .. } => 2,
    }
}

pub fn enumerate_unbalanced_bicyclic(n: usize) -> Result<EnumerationReport> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::TooLarge(format!("enumeration is limited to n <= {MAX_ENUM_ORDER}, got {n}")));
    }
    if n < 4 {
        return Err(Error::UnsupportedN(n));
    }
    let start = Instant::now();
    let underlying = underlying_bicyclic(n);
    let signed: Vec<SignedGraph> = underlying.iter().flat_map(unbalanced_signatures).collect();
    let entries = par_map(&signed, |g| -> Result<EnumEntry> {
        Ok(EnumEntry {
            lambda: spectra::index(g)?.lambda,
            kind: bicyclic::base(g)?.1.kind,
            code: iso::bicyclic_code(g)?,
            graph: g.clone(),
        })
    });
    let mut entries = entries.into_iter().collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| b.lambda.total_cmp(&a.lambda).then_with(|| a.code.cmp(&b.code)));
    let mut per_kind = [0; 3];
    for e in &entries {
        per_kind[kind_slot(&e.kind)] += 1;
    }
    Ok(EnumerationReport {
        n,
        underlying_count: underlying.len(),
        class_count: entries.len(),
        per_kind,
        entries,
        elapsed: start.elapsed(),
    })
}

/// Which extremal family, if any, a bicyclic graph belongs to at its order.
pub fn family_of(g: &SignedGraph) -> Result<Option<usize>> {
    let code = iso::bicyclic_code(g)?;
    for fam in ExtremalFamily::all() {
        if g.order() < fam.min_order() {
            continue;
        }
        if iso::bicyclic_code(&fam.construct(g.order())?)? == code {
            return Ok(Some(fam.id));
        }
    }
    Ok(None)
}

impl EnumerationReport {
    pub fn top(&self, k: usize) -> &[EnumEntry] {
        &self.entries[..k.min(self.entries.len())]
    }

    /// Plain-text table, or `label TAB lambda TAB charpoly` lines.
    pub fn render(&self, k: usize, tsv: bool) -> String {
        let mut out = String::new();
        if !tsv {
            let _ = writeln!(
                out,
                "n={} underlying={} classes={} infinity={} dumbbell={} theta={} time={:.3}s",
                self.n,
                self.underlying_count,
                self.class_count,
                self.per_kind[0],
                self.per_kind[1],
                self.per_kind[2],
                self.elapsed.as_secs_f64()
            );
            let _ = writeln!(out, "rank\tlambda\tbase\tfamily\tnegative edges");
        }
        for (i, e) in self.top(k).iter().enumerate() {
            let family = family_of(&e.graph).ok().flatten().map(|f| format!("G{f}")).unwrap_or_else(|| "-".into());
            if tsv {
                let label = format!("n{}#{}", self.n, i + 1);
                let _ = writeln!(out, "{label}\t{}\t{}", fmt_num(e.lambda), spectra::charpoly_exact(&e.graph).to_coeff_line());
            } else {
                let neg: Vec<String> = e.graph.negative_edges().iter().map(|x| format!("{}-{}", x.u, x.v)).collect();
                let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", i + 1, fmt_num(e.lambda), e.kind, family, neg.join(" "));
            }
        }
        out
    }
}

/// Base-size reduction check: every infinity-type class with base larger
/// than `B(3,3)` is matched or beaten by an infinity-type class with a
/// smaller base, and likewise theta-type against `B(P1,P2,P2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseReductionReport {
    pub checked: usize,
    /// `(graph index in the report, best smaller-base lambda)` for failures.
    pub failures: Vec<(usize, f64)>,
}

pub fn check_base_reduction(report: &EnumerationReport) -> BaseReductionReport {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, e) in report.entries.iter().enumerate() {
        let (slot, minimum) = match e.kind {
            ShapeKind::Infinity { .. } => (0, 5),
            ShapeKind::Theta { .. } => (2, 4),
            ShapeKind::Dumbbell { .. } => continue,
        };
        let b = e.kind.base_order();
        if b <= minimum {
            continue;
        }
        checked += 1;
        let best = report
            .entries
            .iter()
            .filter(|o| kind_slot(&o.kind) == slot && o.kind.base_order() < b)
            .map(|o| o.lambda)
            .fold(f64::NEG_INFINITY, f64::max);
        if best < e.lambda - 1e-9 {
            failures.push((i, best));
        }
    }
    BaseReductionReport { checked, failures }
}

/// Replaces each hanging tree by a star at its attachment vertex.
pub fn collapse_all_trees(g: &SignedGraph) -> Result<SignedGraph> {
    let (_, shape) = bicyclic::base(g)?;
    let mut h = g.clone();
    for &v in &shape.base_vertices {
        h = crate::perturb::collapse_tree_to_star(&h, v)?;
    }
    Ok(h)
}

/// Brute-force oracle over labelled graphs, sharing no code with the
/// structured enumeration beyond the graph type.
pub mod oracle {
    use super::*;

    /// Graphs on at most this many vertices are handled.
    pub const MAX_ORACLE_ORDER: usize = 7;

    fn pairs(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        // Heap's algorithm
        let mut p: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut out = vec![p.clone()];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    p.swap(0, i);
                } else {
                    p.swap(c[i], i);
                }
                out.push(p.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    /// Pair-index tables for every permutation of `n` vertices.
    pub struct Labelling {
        n: usize,
        pairs: Vec<(usize, usize)>,
        index: HashMap<(usize, usize), usize>,
        perm_maps: Vec<Vec<usize>>,
    }

    impl Labelling {
        pub fn new(n: usize) -> Self {
            assert!(n <= MAX_ORACLE_ORDER, "oracle limited to {MAX_ORACLE_ORDER} vertices");
            let pairs = pairs(n);
            let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let perm_maps = permutations(n)
                .into_iter()
                .map(|perm| {
                    pairs
                        .iter()
                        .map(|&(u, v)| {
                            let (a, b) = (perm[u], perm[v]);
                            index[&(a.min(b), a.max(b))]
                        })
                        .collect()
                })
                .collect();
            Labelling { n, pairs, index, perm_maps }
        }

        fn apply(map: &[usize], mask: u32) -> u32 {
            let mut out = 0;
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                out |= 1 << map[i];
                m &= m - 1;
            }
            out
        }

        fn connected(&self, mask: u32) -> bool {
            let mut reach = 1u32;
            loop {
                let mut next = reach;
                for (i, &(u, v)) in self.pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 && (reach >> u & 1 == 1 || reach >> v & 1 == 1) {
                        next |= 1 << u | 1 << v;
                    }
                }
                if next == reach {
                    return reach.count_ones() as usize == self.n;
                }
                reach = next;
            }
        }

        /// Sign flips of each switching set, as edge masks over all pairs.
        fn cut_masks(&self) -> Vec<u32> {
            (0..1u32 << self.n)
                .map(|s| {
                    let mut m = 0;
                    for (i, &(u, v)) in self.pairs.iter().enumerate() {
                        if (s >> u & 1) != (s >> v & 1) {
                            m |= 1 << i;
                        }
                    }
                    m
                })
                .collect()
        }

        pub fn masks_of(&self, g: &SignedGraph) -> (u32, u32) {
            let mut adj = 0;
            let mut neg = 0;
            for e in g.edges() {
                let i = self.index[&(e.u, e.v)];
                adj |= 1 << i;
                if e.sign.is_negative() {
                    neg |= 1 << i;
                }
            }
            (adj, neg)
        }

        /// Minimal edge mask over relabellings, with the permutations reaching it.
        fn min_adjacency(&self, adj: u32) -> (u32, Vec<usize>) {
            let mut best = u32::MAX;
            let mut which = Vec::new();
            for (k, map) in self.perm_maps.iter().enumerate() {
                let c = Self::apply(map, adj);
                if c < best {
                    best = c;
                    which.clear();
                }
                if c == best {
                    which.push(k);
                }
            }
            (best, which)
        }

        /// Canonical `(edges, negative edges)` over all relabellings and switchings.
        pub fn signed_code(&self, adj: u32, neg: u32) -> (u32, u32) {
            let (a, perms) = self.min_adjacency(adj);
            let cuts = self.cut_masks();
            let mut best = u32::MAX;
            for &k in &perms {
                for cut in &cuts {
                    best = best.min(Self::apply(&self.perm_maps[k], (neg ^ cut) & adj));
                }
            }
            (a, best)
        }

        pub fn code_of(&self, g: &SignedGraph) -> (u32, u32) {
            let (adj, neg) = self.masks_of(g);
            self.signed_code(adj, neg)
        }

        /// Every switching class of unbalanced connected signed graphs with
        /// `n` vertices and `n + 1` edges, by brute force.
        pub fn raw_unbalanced_bicyclic(&self) -> Vec<(u32, u32)> {
            let n = self.n;
            let total = self.pairs.len();
            let m = n + 1;
            let cuts = self.cut_masks();
            let mut underlying = BTreeMap::new();
            if m <= total {
                // Gosper's hack over m-subsets of the pairs
                let mut mask: u32 = (1 << m) - 1;
                while mask < 1 << total {
                    if self.connected(mask) {
                        underlying.entry(self.min_adjacency(mask).0).or_insert(mask);
                    }
                    let c = mask & mask.wrapping_neg();
                    let r = mask + c;
                    mask = (((r ^ mask) >> 2) / c) | r;
                }
            }
            let mut classes = std::collections::BTreeSet::new();
            for &adj in underlying.values() {
                let bits: Vec<u32> = (0..total).filter(|i| adj >> i & 1 == 1).map(|i| 1 << i).collect();
                for sub in 0..1u32 << bits.len() {
                    let neg: u32 = bits.iter().enumerate().filter(|(j, _)| sub >> j & 1 == 1).map(|(_, b)| b).sum();
                    let balanced = cuts.iter().any(|cut| (neg ^ cut) & adj == 0);
                    if !balanced {
                        classes.insert(self.signed_code(adj, neg));
                    }
                }
            }
            classes.into_iter().collect()
        }
    }
}

/// Outcome of the strict-ordering check over a range of orders.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderingReport {
    pub n_lo: usize,
    pub n_hi: usize,
    /// `(n, [λ(Γ1), …, λ(Γ5)])`.
    pub rows: Vec<(usize, [f64; 5])>,
    /// Smallest `n ≥ 7` where the chain holds.
    pub first_holds: Option<usize>,
    /// Smallest `n ≥ 7` from which the chain holds through `n_hi`.
    pub holds_from: Option<usize>,
    /// Largest gap between the root finder and the eigensolver, when checked.
    pub eigen_gap: Option<f64>,
}

fn chain_holds(l: &[f64; 5]) -> bool {
    l.windows(2).all(|w| w[0] - w[1] > 1e-9)
}

fn family_lambdas(n: usize) -> Result<[f64; 5]> {
    let mut l = [0.0; 5];
    for (i, slot) in l.iter_mut().enumerate() {
        *slot = bicyclic::family_index(i + 1, n)?;
    }
    Ok(l)
}

pub fn verify_ordering(n_lo: usize, n_hi: usize, eigen_check: bool) -> Result<OrderingReport> {
    if n_lo < 36 || n_hi < n_lo || n_hi > bicyclic::MAX_FAMILY_ORDER {
        return Err(Error::InvalidArgument(format!(
            "need 36 <= n-min <= n-max <= {}, got {n_lo}..{n_hi}",
            bicyclic::MAX_FAMILY_ORDER
        )));
    }
    let ns: Vec<usize> = (7..=n_hi).collect();
    let all = par_map(&ns, |&n| family_lambdas(n));
    let all = all.into_iter().collect::<Result<Vec<_>>>()?;
    let first_holds = ns.iter().zip(&all).find(|(_, l)| chain_holds(l)).map(|(&n, _)| n);
    let mut holds_from = None;
    for (&n, l) in ns.iter().zip(&all).rev() {
        if !chain_holds(l) {
            break;
        }
        holds_from = Some(n);
    }
    let rows: Vec<(usize, [f64; 5])> = ns.iter().copied().zip(all).filter(|(n, _)| *n >= n_lo).collect();
    if let Some((n, _)) = rows.iter().find(|(_, l)| !chain_holds(l)) {
        return Err(Error::OrderingViolated(*n));
    }
    let eigen_gap = if eigen_check {
        let jobs: Vec<(usize, usize)> = rows.iter().flat_map(|(n, _)| (1..=5).map(move |i| (*n, i))).collect();
        let gaps = par_map(&jobs, |&(n, i)| -> Result<f64> {
            let g = bicyclic::construct_family(i, n)?;
            Ok((spectra::index(&g)?.lambda - bicyclic::family_index(i, n)?).abs())
        });
        Some(gaps.into_iter().collect::<Result<Vec<_>>>()?.into_iter().fold(0.0, f64::max))
    } else {
        None
    };
    Ok(OrderingReport { n_lo, n_hi, rows, first_holds, holds_from, eigen_gap })
}

impl OrderingReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (n, l) in &self.rows {
            let vals: Vec<String> = l.iter().map(|x| fmt_num(*x)).collect();
            let _ = writeln!(out, "OK n={n}: {}", vals.join(" > "));
        }
        let show = |x: Option<usize>| x.map(|n| n.to_string()).unwrap_or_else(|| "none".into());
        let _ = writeln!(out, "chain first holds at n={}", show(self.first_holds));
        let _ = writeln!(out, "chain holds for every n from {} to {}", show(self.holds_from), self.n_hi);
        if let Some(gap) = self.eigen_gap {
            let _ = writeln!(out, "max |eigensolver - root finder| = {}", fmt_num(gap));
        }
        out
    }
}

/// Checks on the comparison between the fourth and fifth families at `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FifthBoundCheck {
    pub n: usize,
    pub root5: f64,
    /// `(1 + √(16n − 71)) / 4`, the largest root of `f4 − f5`.
    pub bound: f64,
    /// Exact sign of `f4` at the computed root of `f5`.
    pub f4_sign: i8,
    /// `f4 − f5 = 2x² − x − 2n + 9` as an exact identity.
    pub difference_ok: bool,
    /// Largest root of `f4 − f5` from the root finder.
    pub difference_root: f64,
}

impl FifthBoundCheck {
    pub fn holds(&self) -> bool {
        self.difference_ok
            && self.root5 < self.bound - 1e-9
            && self.f4_sign < 0
            && (self.difference_root - self.bound).abs() < 1e-9
    }
}

pub fn check_fifth_bound(n: usize) -> Result<FifthBoundCheck> {
    let f4 = bicyclic::f_polynomial(4, n)?;
    let f5 = bicyclic::f_polynomial(5, n)?;
    let diff = &f4 - &f5;
    let expected = Polynomial::from_i64(&[9 - 2 * n as i64, -1, 2]);
    let root5 = roots::largest_root(&f5)?;
    Ok(FifthBoundCheck {
        n,
        root5,
        bound: (1.0 + ((16 * n) as f64 - 71.0).sqrt()) / 4.0,
        f4_sign: roots::sign_at(&f4, root5),
        difference_ok: diff == expected,
        difference_root: roots::largest_root(&diff)?,
    })
}

/// How sampled hanging trees are attached to the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attachment {
    RandomTree,
    OneVertex,
    TwoVertices,
    MostlyOneVertex,
}

const ATTACHMENTS: [Attachment; 4] =
    [Attachment::RandomTree, Attachment::OneVertex, Attachment::TwoVertices, Attachment::MostlyOneVertex];

fn geometric(rng: &mut ChaCha8Rng) -> usize {
    let mut k = 0;
    while rng.random_bool(0.5) {
        k += 1;
    }
    k
}

fn random_base(rng: &mut ChaCha8Rng, n: usize) -> ShapeKind {
    loop {
        let kind = match rng.random_range(0..3) {
            0 => {
                let q = 3 + geometric(rng);
                ShapeKind::Infinity { p: q + geometric(rng), q }
            }
            1 => {
                let q = 3 + geometric(rng);
                ShapeKind::Dumbbell { p: q + geometric(rng), l: 1 + geometric(rng), q }
            }
            _ => {
                let m = 1 + geometric(rng);
                let l = m.max(2) + geometric(rng);
                ShapeKind::Theta { k: l + geometric(rng), l, m }
            }
        };
        if kind.base_order() <= n {
            return kind;
        }
    }
}

/// A random unbalanced bicyclic signed graph on `n` vertices.
pub fn sample_unbalanced_bicyclic(rng: &mut ChaCha8Rng, n: usize) -> (SignedGraph, Attachment) {
    let kind = random_base(rng, n);
    let base = kind.build();
    let b = base.order();
    let extra = n - b;
    let style = *ATTACHMENTS.choose(rng).expect("non-empty");
    let mut edges: Vec<(usize, usize)> = base.edges().iter().map(|e| (e.u, e.v)).collect();
    let a = rng.random_range(0..b);
    let c = rng.random_range(0..b);
    let split = if extra > 0 { rng.random_range(0..=extra) } else { 0 };
    let few = extra.min(rng.random_range(1..=3));
    for i in 0..extra {
        let w = b + i;
        let parent = match style {
            Attachment::RandomTree => rng.random_range(0..w),
            Attachment::OneVertex => a,
            Attachment::TwoVertices => {
                if i < split {
                    a
                } else {
                    c
                }
            }
            Attachment::MostlyOneVertex => {
                if i < extra - few {
                    a
                } else {
                    rng.random_range(0..w)
                }
            }
        };
        edges.push((parent, w));
    }
    let underlying = SignedGraph::unsigned(n, &edges).expect("valid tree extension");
    loop {
        let g = underlying.map_signs(|_| if rng.random_bool(0.5) { Sign::Neg } else { Sign::Pos });
        if !switching::is_balanced(&g).is_balanced() {
            return (g, style);
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExclusionReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub lambda5: f64,
    /// Samples switching isomorphic to each family.
    pub family_hits: [usize; 5],
    /// Samples per base type: infinity, dumbbell, theta.
    pub per_kind: [usize; 3],
    /// Largest index among samples outside the five families.
    pub max_other: f64,
    /// Largest index among dumbbell-type samples.
    pub max_dumbbell: f64,
    /// Samples outside the families reaching `λ(Γ5) − 1e−9`.
    pub violations: Vec<SignedGraph>,
    /// Dumbbell samples reaching `λ(Γ5) − 1e−9`.
    pub dumbbell_violations: Vec<SignedGraph>,
}

impl ExclusionReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "samples: {}", self.samples);
        let _ = writeln!(out, "seed: {}", self.seed);
        let _ = writeln!(out, "lambda_G5: {}", fmt_num(self.lambda5));
        let hits: Vec<String> = self.family_hits.iter().enumerate().map(|(i, h)| format!("G{}={h}", i + 1)).collect();
        let _ = writeln!(out, "family_members_skipped: {}", hits.join(" "));
        let _ = writeln!(
            out,
            "base_types: infinity={} dumbbell={} theta={}",
            self.per_kind[0], self.per_kind[1], self.per_kind[2]
        );
        let _ = writeln!(out, "max_lambda_outside_families: {}", fmt_num(self.max_other));
        let _ = writeln!(out, "max_lambda_dumbbell: {}", fmt_num(self.max_dumbbell));
        let _ = writeln!(out, "violations: {}", self.violations.len());
        let _ = writeln!(out, "dumbbell_violations: {}", self.dumbbell_violations.len());
        let _ = writeln!(out, "scope: random sampling, not an exhaustive check");
        out
    }
}

struct SampleOutcome {
    graph: SignedGraph,
    lambda: f64,
    slot: usize,
    family: Option<usize>,
}

/// Samples `samples` graphs and tallies how close they come to the fifth
/// family's index, without judging the outcome.
pub fn sample_exclusions(n: usize, samples: usize, seed: u64) -> Result<ExclusionReport> {
    if !(6..=bicyclic::MAX_FAMILY_ORDER).contains(&n) {
        return Err(Error::UnsupportedN(n));
    }
    let lambda5 = bicyclic::family_index(5, n)?;
    let family_codes: Vec<ClassCode> = ExtremalFamily::all()
        .iter()
        .map(|f| iso::bicyclic_code(&f.construct(n)?))
        .collect::<Result<_>>()?;
    let ids: Vec<u64> = (0..samples as u64).collect();
    let outcomes = par_map(&ids, |&i| -> Result<SampleOutcome> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i);
        let (g, _) = sample_unbalanced_bicyclic(&mut rng, n);
        let code = iso::bicyclic_code(&g)?;
        let family = family_codes.iter().position(|c| *c == code).map(|p| p + 1);
        Ok(SampleOutcome {
            lambda: spectra::index(&g)?.lambda,
            slot: kind_slot(&bicyclic::base(&g)?.1.kind),
            family,
            graph: g,
        })
    });
    let mut report = ExclusionReport {
        n,
        samples,
        seed,
        lambda5,
        family_hits: [0; 5],
        per_kind: [0; 3],
        max_other: f64::NEG_INFINITY,
        max_dumbbell: f64::NEG_INFINITY,
        violations: Vec::new(),
        dumbbell_violations: Vec::new(),
    };
    for o in outcomes {
        let o = o?;
        report.per_kind[o.slot] += 1;
        let reaches = o.lambda >= lambda5 - 1e-9;
        if o.slot == 1 {
            report.max_dumbbell = report.max_dumbbell.max(o.lambda);
            if reaches {
                report.dumbbell_violations.push(o.graph.clone());
            }
        }
        match o.family {
            Some(f) => report.family_hits[f - 1] += 1,
            None => {
                report.max_other = report.max_other.max(o.lambda);
                if reaches {
                    report.violations.push(o.graph);
                }
            }
        }
    }
    Ok(report)
}

/// As [`sample_exclusions`], failing with the first witness when `n ≥ 36`.
pub fn verify_exclusions(n: usize, samples: usize, seed: u64) -> Result<ExclusionReport> {
    let report = sample_exclusions(n, samples, seed)?;
    if n >= 36 {
        if let Some(w) = report.violations.first().or(report.dumbbell_violations.first()) {
            return Err(Error::ExclusionViolated(w.to_sg()));
        }
    }
    Ok(report)
}

/// Match status of one reference-table row.
#[derive(Debug, Clone, PartialEq)]
pub enum RowMatch {
    None,
    Unique(SignedGraph),
    Multiple(usize),
}

#[derive(Debug, Clone)]
pub struct Table1Match {
    pub row: &'static Table1Row,
    pub target: Polynomial,
    pub status: RowMatch,
    /// For family rows: whether the unique match is the frozen constructor.
    pub agrees_with_family: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Table1Report {
    pub n: usize,
    pub candidates: usize,
    pub rows: Vec<Table1Match>,
}

fn partitions(t: usize, max_part: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=t.min(max_part)).rev() {
        for mut rest in partitions(t - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Hangs a depth-two tree at `at`: one child per part, each carrying
/// `part − 1` leaves.
fn hang(g: &SignedGraph, at: usize, parts: &[usize]) -> SignedGraph {
    let mut h = g.clone();
    for &p in parts {
        let child = h.order();
        h = bicyclic::attach_pendants(&h, at, 1);
        h = bicyclic::attach_pendants(&h, child, p - 1);
    }
    h
}

/// Underlying graphs of the reference search space at order `n`: bases on
/// at most eight vertices with depth-two trees on at most two base vertices.
pub fn table1_space(n: usize) -> Vec<SignedGraph> {
    let bases: Vec<ShapeKind> = bases_up_to(TABLE1_BASE_LIMIT.min(n));
    let found = par_map(&bases, |kind| {
        let base = kind.build();
        let b = base.order();
        let t = n - b;
        let mut out: BTreeMap<ClassCode, SignedGraph> = BTreeMap::new();
        let mut push = |g: SignedGraph| {
            out.entry(iso::underlying_code(&g).expect("bicyclic")).or_insert(g);
        };
        if t == 0 {
            push(base.clone());
        }
        for u in 0..b {
            for parts in partitions(t, t) {
                if t > 0 {
                    push(hang(&base, u, &parts));
                }
            }
            for w in u + 1..b {
                for t1 in 1..t {
                    for p1 in partitions(t1, t1) {
                        let g1 = hang(&base, u, &p1);
                        for p2 in partitions(t - t1, t - t1) {
                            push(hang(&g1, w, &p2));
                        }
                    }
                }
            }
        }
        out
    });
    let mut all = BTreeMap::new();
    for m in found {
        all.extend(m);
    }
    all.into_values().collect()
}

pub fn match_table1(n: usize) -> Result<Table1Report> {
    if !(4..=16).contains(&n) {
        return Err(Error::UnsupportedN(n));
    }
    let underlying = table1_space(n);
    let signed: Vec<SignedGraph> = underlying.iter().flat_map(unbalanced_signatures).collect();
    let rows: Vec<&'static Table1Row> = TABLE1.iter().filter(|r| r.min_order() <= n).collect();
    let mut targets: HashMap<Polynomial, Vec<usize>> = HashMap::new();
    for (i, r) in rows.iter().enumerate() {
        targets.entry(r.factored_at(n)).or_default().push(i);
    }
    let hits = par_map(&signed, |g| {
        let p = spectra::charpoly_exact(g);
        targets.get(&p).map(|rs| (rs.clone(), iso::bicyclic_code(g).expect("bicyclic"), g.clone()))
    });
    let mut per_row: Vec<BTreeMap<ClassCode, SignedGraph>> = vec![BTreeMap::new(); rows.len()];
    for (rs, code, g) in hits.into_iter().flatten() {
        for r in rs {
            per_row[r].entry(code.clone()).or_insert_with(|| g.clone());
        }
    }
    let mut out = Vec::new();
    for (row, found) in rows.into_iter().zip(per_row) {
        let status = match found.len() {
            0 => RowMatch::None,
            1 => RowMatch::Unique(found.into_values().next().expect("one entry")),
            k => RowMatch::Multiple(k),
        };
        let agrees_with_family = match (row.family(), &status) {
            (Some(f), RowMatch::Unique(g)) if n >= ExtremalFamily { id: f }.min_order() => {
                Some(iso::bicyclic_code(g)? == iso::bicyclic_code(&bicyclic::construct_family(f, n)?)?)
            }
            (Some(_), _) => Some(false),
            _ => None,
        };
        out.push(Table1Match { row, target: row.factored_at(n), status, agrees_with_family });
    }
    Ok(Table1Report { n, candidates: signed.len(), rows: out })
}

impl Table1Report {
    pub fn render(&self, tsv: bool) -> String {
        let mut out = String::new();
        if !tsv {
            let _ = writeln!(out, "n={} candidates={}", self.n, self.candidates);
        }
        for m in &self.rows {
            let status = match &m.status {
                RowMatch::None => "none".to_string(),
                RowMatch::Unique(_) => "unique".to_string(),
                RowMatch::Multiple(k) => format!("multiple({k})"),
            };
            if tsv {
                let lambda = roots::largest_root(&m.target).map(fmt_num).unwrap_or_else(|_| "nan".into());
                let _ = writeln!(out, "{}\t{}\t{}", m.row.label, lambda, m.target.to_coeff_line());
                continue;
            }
            let mut line = format!("{}\t{}", m.row.label, status);
            if let RowMatch::Unique(g) = &m.status {
                let kind = bicyclic::base(g).map(|(_, s)| s.kind.to_string()).unwrap_or_default();
                let neg: Vec<String> = g.negative_edges().iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
                line.push_str(&format!("\t{kind}\tnegative {}", neg.join(" ")));
            }
            if let Some(ok) = m.agrees_with_family {
                line.push_str(if ok { "\tconstructor agrees" } else { "\tconstructor DISAGREES" });
            }
            let _ = writeln!(out, "{line}");
        }
        out
    }
}
