//! Rank-k graphs presented by a colored 1-skeleton plus commuting squares.
//!
//! A k-graph is presented by its vertices, its colored edges, and, for each
//! pair of colors, a bijective table of commuting squares identifying the two
//! factorization orders of every bicolored path. For k >= 3 the tables must
//! also be associative: refactoring a tricolored path in the two possible
//! orders has to agree. `validate` checks all of it exhaustively, which is
//! why the rank is capped at [`crate::degree::MAX_RANK`].
//!
//! All morphisms, factorizations and common-extension computations are
//! derived from this finite data in [`crate::path`].

use crate::degree::{Degree, MAX_RANK};
use crate::error::ValidationReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub name: String,
    /// 0-based color in `0..rank`.
    pub color: usize,
    pub range: VertexId,
    pub source: VertexId,
}

/// The commuting-square data. For a composable pair `e f` (meaning
/// `s(e) = r(f)`) of distinct colors with `color(e) < color(f)`, the table
/// rewrites it as the unique pair `f' e'` with the colors the other way
/// around, the same range and the same source. Entries are stored in both
/// directions so adjacent color swaps are a single lookup.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SquareTable {
    swap: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
}

impl SquareTable {
    pub fn swap_of(&self, a: EdgeId, b: EdgeId) -> Option<(EdgeId, EdgeId)> {
        self.swap.get(&(a, b)).copied()
    }

    pub fn len_forward(&self) -> usize {
        self.swap.len() / 2
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KGraph {
    rank: usize,
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    squares: SquareTable,
    /// out_edges[v][c] = edges e with r(e) = v and color c, sorted by id.
    out_edges: Vec<Vec<Vec<EdgeId>>>,
    has_sources: bool,
}

impl KGraph {
    /// Assembles a k-graph presentation. Referential integrity (colors in
    /// range, endpoints existing, square entries naming declared edges with
    /// legal colors) is enforced here; the deeper square-table laws are
    /// checked by [`KGraph::validate`].
    pub fn new(
        rank: usize,
        vertex_names: Vec<String>,
        edges: Vec<Edge>,
        square_entries: Vec<((EdgeId, EdgeId), (EdgeId, EdgeId))>,
    ) -> Result<KGraph, ValidationReport> {
        let mut report = ValidationReport::new();
        if !(1..=MAX_RANK).contains(&rank) {
            report.push("rank", format!("rank {rank} outside supported range 1..={MAX_RANK}"));
            return Err(report);
        }
        let nv = vertex_names.len();
        if nv == 0 {
            report.push("vertices", "a k-graph needs at least one vertex");
            return Err(report);
        }
        for (i, e) in edges.iter().enumerate() {
            if e.color >= rank {
                report.push("edges", format!("edge {} has color {} but rank is {rank}", e.name, e.color + 1));
            }
            if e.range.0 as usize >= nv || e.source.0 as usize >= nv {
                report.push("edges", format!("edge {} references an undeclared vertex", e.name));
            }
            let _ = i;
        }
        if !report.is_empty() {
            return Err(report);
        }

        let mut swap = BTreeMap::new();
        for &((e, f), (f2, e2)) in &square_entries {
            for id in [e, f, f2, e2] {
                if id.0 as usize >= edges.len() {
                    report.push("squares", format!("square references undeclared edge id {}", id.0));
                    return Err(report);
                }
            }
            if swap.insert((e, f), (f2, e2)).is_some() {
                report.push("squares", format!(
                    "duplicate square entry for pair ({}, {})",
                    edges[e.0 as usize].name, edges[f.0 as usize].name
                ));
            }
            if swap.insert((f2, e2), (e, f)).is_some() {
                report.push("squares", format!(
                    "square value ({}, {}) assigned twice (table not injective)",
                    edges[f2.0 as usize].name, edges[e2.0 as usize].name
                ));
            }
        }
        if !report.is_empty() {
            return Err(report);
        }

        let mut out_edges = vec![vec![Vec::new(); rank]; nv];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.range.0 as usize][e.color].push(EdgeId(i as u32));
        }
        let has_sources = out_edges
            .iter()
            .any(|per_color| per_color.iter().any(|es| es.is_empty()));

        Ok(KGraph {
            rank,
            vertex_names,
            edges,
            squares: SquareTable { swap },
            out_edges,
            has_sources,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0 as usize]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0 as usize]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name).map(|i| VertexId(i as u32))
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name).map(|i| EdgeId(i as u32))
    }

    /// Edges e with r(e) = v of the given 0-based color, in id order.
    pub fn edges_from(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.out_edges[v.0 as usize][color]
    }

    /// All edges e with r(e) = v, in id order.
    pub fn all_edges_from(&self, v: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> =
            self.out_edges[v.0 as usize].iter().flatten().copied().collect();
        out.sort();
        out
    }

    /// True if v emits no edge of any color (so v alone is a boundary path).
    pub fn is_edgeless(&self, v: VertexId) -> bool {
        self.out_edges[v.0 as usize].iter().all(|es| es.is_empty())
    }

    /// Some vertex is missing some color (vLambda^{e_i} empty).
    pub fn has_sources(&self) -> bool {
        self.has_sources
    }

    pub fn is_source_free(&self) -> bool {
        !self.has_sources
    }

    /// Finite presentations are always row-finite; recorded, not assumed.
    pub fn is_row_finite(&self) -> bool {
        true
    }

    /// Finite presentations are always finitely aligned; recorded, not assumed.
    pub fn is_finitely_aligned(&self) -> bool {
        true
    }

    pub fn squares(&self) -> &SquareTable {
        &self.squares
    }

    pub fn unit(&self, color: usize) -> Degree {
        Degree::unit(self.rank, color)
    }

    pub fn zero_degree(&self) -> Degree {
        Degree::zero(self.rank)
    }

    /// Checks the square-table laws: totality and bijectivity of each
    /// color-pair table, endpoint and color coherence of every entry, and
    /// (for rank >= 3) associativity of refactoring over all composable
    /// edge triples with pairwise distinct colors. An empty report means the
    /// presentation genuinely defines a k-graph.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();

        // entry coherence, and collect forward keys/values per color pair
        let mut forward_keys: BTreeMap<(usize, usize), Vec<(EdgeId, EdgeId)>> = BTreeMap::new();
        let mut forward_vals: BTreeMap<(usize, usize), Vec<(EdgeId, EdgeId)>> = BTreeMap::new();
        for (&(a, b), &(b2, a2)) in &self.squares.swap {
            let (ca, cb) = (self.edge(a).color, self.edge(b).color);
            if ca >= cb {
                continue; // reverse direction of a stored entry; checked via its forward twin
            }
            let (ea, eb, eb2, ea2) = (self.edge(a), self.edge(b), self.edge(b2), self.edge(a2));
            if ea.source != eb.range {
                report.push("square-pair", format!("square key ({}, {}) is not composable", ea.name, eb.name));
            }
            if eb2.color != cb || ea2.color != ca {
                report.push("square-colors", format!(
                    "square ({}, {}) -> ({}, {}) does not swap the colors",
                    ea.name, eb.name, eb2.name, ea2.name
                ));
            }
            if eb2.source != ea2.range {
                report.push("square-pair", format!(
                    "square value ({}, {}) is not composable", eb2.name, ea2.name
                ));
            }
            if eb2.range != ea.range || ea2.source != eb.source {
                report.push("square-endpoints", format!(
                    "square ({}, {}) -> ({}, {}) changes range or source",
                    ea.name, eb.name, eb2.name, ea2.name
                ));
            }
            forward_keys.entry((ca, cb)).or_default().push((a, b));
            forward_vals.entry((ca, cb)).or_default().push((b2, a2));
        }

        // totality and surjectivity against the composable-pair sets
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                let mut want_keys = Vec::new();
                let mut want_vals = Vec::new();
                for e in self.edge_ids() {
                    if self.edge(e).color == i {
                        for &f in self.edges_from(self.edge(e).source, j) {
                            want_keys.push((e, f));
                        }
                    }
                    if self.edge(e).color == j {
                        for &f in self.edges_from(self.edge(e).source, i) {
                            want_vals.push((e, f));
                        }
                    }
                }
                let have_keys = forward_keys.get(&(i, j)).cloned().unwrap_or_default();
                let have_vals = forward_vals.get(&(i, j)).cloned().unwrap_or_default();
                for k in &want_keys {
                    if !have_keys.contains(k) {
                        report.push(
                            "square-total",
                            format!(
                                "no square for composable pair ({}, {}) of colors ({}, {})",
                                self.edge(k.0).name, self.edge(k.1).name, i + 1, j + 1
                            ),
                        );
                    }
                }
                for k in &have_keys {
                    if !want_keys.contains(k) {
                        report.push(
                            "square-domain",
                            format!("square key ({}, {}) is not a composable ({}, {})-pair",
                                self.edge(k.0).name, self.edge(k.1).name, i + 1, j + 1),
                        );
                    }
                }
                let mut seen = Vec::new();
                for v in &have_vals {
                    if seen.contains(v) {
                        report.push(
                            "square-injective",
                            format!("square value ({}, {}) repeats (table not injective)",
                                self.edge(v.0).name, self.edge(v.1).name),
                        );
                    }
                    seen.push(*v);
                }
                for v in &want_vals {
                    if !have_vals.contains(v) {
                        report.push(
                            "square-surjective",
                            format!(
                                "composable pair ({}, {}) of colors ({}, {}) is not the value of any square",
                                self.edge(v.0).name, self.edge(v.1).name, j + 1, i + 1
                            ),
                        );
                    }
                }
            }
        }

        if !report.is_empty() {
            // the associativity walk below needs a working table
            return report;
        }

        if self.rank >= 3 {
            self.check_hexagons(&mut report);
        }
        report
    }

    /// Associativity of the squares: every tricolored composable triple,
    /// taken in strictly decreasing color order, is resorted to increasing
    /// order along the two extremal swap routes; the results must agree.
    fn check_hexagons(&self, report: &mut ValidationReport) {
        for a in self.edge_ids() {
            for &b in &self.all_edges_from(self.edge(a).source) {
                if self.edge(b).color >= self.edge(a).color {
                    continue;
                }
                for &c in &self.all_edges_from(self.edge(b).source) {
                    if self.edge(c).color >= self.edge(b).color {
                        continue;
                    }
                    let r1 = self.route(&[a, b, c], &[0, 1, 0]);
                    let r2 = self.route(&[a, b, c], &[1, 0, 1]);
                    match (r1, r2) {
                        (Some(x), Some(y)) if x == y => {}
                        (r1, r2) => {
                            report.push(
                                "square-hexagon",
                                format!(
                                    "refactoring the triple ({}, {}, {}) is order-dependent: {:?} vs {:?}",
                                    self.edge(a).name,
                                    self.edge(b).name,
                                    self.edge(c).name,
                                    r1.map(|t| self.names(&t)),
                                    r2.map(|t| self.names(&t)),
                                ),
                            );
                        }
                    }
                }
            }
        }
    }

    fn route(&self, triple: &[EdgeId; 3], swaps: &[usize]) -> Option<[EdgeId; 3]> {
        let mut t = *triple;
        for &pos in swaps {
            let (x, y) = self.squares.swap_of(t[pos], t[pos + 1])?;
            t[pos] = x;
            t[pos + 1] = y;
        }
        Some(t)
    }

    fn names(&self, t: &[EdgeId; 3]) -> Vec<String> {
        t.iter().map(|&e| self.edge(e).name.clone()).collect()
    }
}
