//! Boundary-path prefixes, filter views, and the prefix/ultrafilter
//! correspondence at a finite horizon.
//!
//! All boundary statements in this crate are evaluated on truncations with an
//! explicit horizon, and every consumer records the regime it ran in. Two
//! structural facts keep this honest: a finite path is itself a complete
//! boundary path exactly when its source emits no edges at all, and every
//! path extends to some boundary path, so prefix enumeration never
//! over-approximates.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::isg::ISGElement;
use crate::kgraph::{KGraph, VertexId};
use crate::path::{Path, PathSet};
use crate::verdict::{Regime, TriVerdict};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A truncated boundary path: the known prefix plus the horizon it was
/// enumerated to, tagged with the exactness regime of the enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryPrefix {
    pub prefix: Path,
    pub horizon: Degree,
    pub regime: Regime,
}

impl BoundaryPrefix {
    pub fn degree(&self) -> &Degree {
        self.prefix.degree()
    }
}

pub fn boundary_regime(graph: &KGraph) -> Regime {
    if graph.is_source_free() {
        Regime::Exact
    } else if graph.rank() == 1 {
        Regime::K1Exact
    } else {
        Regime::Approximate
    }
}

/// Is the finite path p, taken as a whole, a boundary path? Positions before
/// the end hit every finite exhaustive set automatically (their remaining
/// segment dominates the set's degrees), so the condition is exactly that the
/// source emits nothing.
pub fn is_complete_boundary_path(graph: &KGraph, p: &Path) -> bool {
    graph.is_edgeless(graph.source_of(p))
}

/// All boundary prefixes at v out to the given horizon. Since every path
/// extends to a boundary path, these are exactly the paths of degree <= depth;
/// in the approximate regime the hitting condition is still tested against
/// the finite exhaustive families visible inside the horizon, and a rejection
/// is reported as an internal error (it would contradict the enumeration).
pub fn boundary_prefixes(
    graph: &KGraph,
    v: VertexId,
    depth: &Degree,
) -> Result<Vec<BoundaryPrefix>> {
    let regime = boundary_regime(graph);
    let mut out = Vec::new();
    for p in graph.paths_up_to(v, depth) {
        if regime == Regime::Approximate && !prefix_passes_capped_hitting(graph, &p)? {
            return Err(Error::Internal(format!(
                "path {} rejected by the capped hitting test although every path extends to a boundary path",
                graph.format_path(&p)
            )));
        }
        out.push(BoundaryPrefix { prefix: p, horizon: *depth, regime });
    }
    Ok(out)
}

/// The definitive part of the boundary-path condition visible on a prefix:
/// at each position, a finite exhaustive set all of whose members would be
/// fully determined by the prefix must contain the matching segment.
fn prefix_passes_capped_hitting(graph: &KGraph, p: &Path) -> Result<bool> {
    for pos in p.degree().downward_closure() {
        let at = graph.segment(p, &pos, &pos)?.range();
        let remaining = p.degree().checked_sub(&pos).expect("pos <= degree");
        for xs in finite_exhaustive_sets(graph, at, &remaining)? {
            let mut hit = false;
            let mut all_visible = true;
            for mu in &xs {
                if !mu.degree().leq(&remaining) {
                    all_visible = false;
                    break;
                }
                let end = pos + *mu.degree();
                if &graph.segment(p, &pos, &end)? == mu {
                    hit = true;
                    break;
                }
            }
            if all_visible && !hit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every finite exhaustive set at v consisting of paths of degree <= cap.
/// Exponential in the number of such paths; intended for desk-scale use.
pub fn finite_exhaustive_sets(
    graph: &KGraph,
    v: VertexId,
    cap: &Degree,
) -> Result<Vec<PathSet>> {
    let pool: Vec<Path> = graph
        .paths_up_to(v, cap)
        .into_iter()
        .filter(|p| !p.is_vertex())
        .collect();
    let mut out = Vec::new();
    let n = pool.len();
    for mask in 1u64..(1u64 << n.min(20)) {
        let xs: PathSet = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| pool[i].clone()).collect();
        if graph.is_exhaustive(v, &xs)? {
            out.push(xs);
        }
    }
    Ok(out)
}

/// A filter membership view generated by a boundary prefix: the filter of an
/// ultrafilter point restricted to what the known prefix decides.
#[derive(Clone, Debug)]
pub struct FilterView {
    pub base: BoundaryPrefix,
}

/// Does the filter of the underlying boundary path contain the idempotent E?
/// `Holds` when some leg of E is a prefix of the known truncation; `Fails`
/// when no leg admits a common extension with it (or the truncation is a
/// complete boundary path); `Unknown` past the horizon.
pub fn filter_contains(
    graph: &KGraph,
    view: &FilterView,
    e: &ISGElement,
) -> Result<TriVerdict> {
    if !e.is_idempotent() {
        return Err(Error::InvalidArgument("filter membership is asked of idempotents".into()));
    }
    let p = &view.base.prefix;
    let mut meets = false;
    for t in e.triples() {
        if t.mu.range() != p.range() {
            continue;
        }
        if graph.is_prefix(&t.mu, p)? {
            return Ok(TriVerdict::holds_with(
                view.base.regime,
                format!("leg {} is an initial segment of the truncation", graph.format_path(&t.mu)),
            ));
        }
        if !graph.lambda_min(p, &t.mu)?.is_empty() {
            meets = true;
        }
    }
    if !meets || is_complete_boundary_path(graph, p) {
        return Ok(TriVerdict::fails_with(
            view.base.regime,
            "no leg is compatible with the known truncation".to_string(),
        ));
    }
    Ok(TriVerdict::unknown(
        view.base.regime,
        view.base.horizon,
        "some leg meets the truncation but extends past the horizon",
    ))
}

/// Report of the prefix/ultrafilter correspondence at a finite horizon.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BijectionReport {
    pub vertex: String,
    pub depth: Degree,
    pub prefix_count: usize,
    pub family_count: usize,
    pub matched: bool,
}

/// Counts, from v out to `depth`, the maximal boundary prefixes (no
/// single-edge extension stays inside the box) against the maximal coherent
/// one-path-per-degree families built degree-by-degree through factorization.
/// The two enumerations are independent routes to the same objects and must
/// agree elementwise.
pub fn ultrafilter_bijection_check(
    graph: &KGraph,
    v: VertexId,
    depth: &Degree,
) -> Result<BijectionReport> {
    let maximal: Vec<Path> = graph
        .paths_up_to(v, depth)
        .into_iter()
        .filter(|p| !has_extension_within(graph, p, depth))
        .collect();

    let families = enumerate_maximal_families(graph, v, depth)?;
    let mut tops: Vec<Path> = families.into_iter().map(|f| f.top).collect();
    tops.sort();
    let mut sorted_maximal = maximal.clone();
    sorted_maximal.sort();

    Ok(BijectionReport {
        vertex: graph.vertex_name(v).to_string(),
        depth: *depth,
        prefix_count: sorted_maximal.len(),
        family_count: tops.len(),
        matched: sorted_maximal == tops,
    })
}

fn has_extension_within(graph: &KGraph, p: &Path, depth: &Degree) -> bool {
    let s = graph.source_of(p);
    (0..graph.rank()).any(|c| {
        (*p.degree() + graph.unit(c)).leq(depth) && !graph.edges_from(s, c).is_empty()
    })
}

struct Family {
    top: Path,
}

/// Maximal coherent families: assignments n -> path of degree n on a
/// downward-closed set of degrees, coherent under factorization and pairwise
/// compatible, grown until no frontier degree admits a consistent value.
/// Their domains are join-closed boxes, so each family carries a single top.
fn enumerate_maximal_families(
    graph: &KGraph,
    v: VertexId,
    depth: &Degree,
) -> Result<Vec<Family>> {
    let box_degrees = depth.downward_closure();
    let mut out = Vec::new();
    let mut assignment: BTreeMap<Degree, Path> = BTreeMap::new();
    assignment.insert(graph.zero_degree(), graph.vertex_path(v));
    grow_family(graph, &box_degrees, &mut assignment, &mut out)?;
    Ok(out)
}

fn grow_family(
    graph: &KGraph,
    box_degrees: &[Degree],
    assignment: &mut BTreeMap<Degree, Path>,
    out: &mut Vec<Family>,
) -> Result<()> {
    // lex-smallest fillable frontier degree
    for n in box_degrees {
        if assignment.contains_key(n) {
            continue;
        }
        let preds: Vec<Degree> = (0..graph.rank())
            .filter(|&c| n.coord(c) > 0)
            .map(|c| n.checked_sub(&graph.unit(c)).expect("frontier has predecessors"))
            .collect();
        if !preds.iter().all(|m| assignment.contains_key(m)) {
            continue;
        }
        let candidates = candidates_for(graph, n, &preds, assignment)?;
        if candidates.is_empty() {
            continue; // permanently dead; maximality can still hold elsewhere
        }
        for q in candidates {
            assignment.insert(*n, q);
            grow_family(graph, box_degrees, assignment, out)?;
            assignment.remove(n);
        }
        return Ok(());
    }
    // no fillable frontier: the family is maximal; its domain is join-closed,
    // so the lex-largest assigned degree dominates every assigned degree
    let top_degree = assignment.keys().next_back().expect("zero degree is always assigned");
    debug_assert!(assignment.keys().all(|m| m.leq(top_degree)));
    out.push(Family { top: assignment[top_degree].clone() });
    Ok(())
}

fn candidates_for(
    graph: &KGraph,
    n: &Degree,
    preds: &[Degree],
    assignment: &BTreeMap<Degree, Path>,
) -> Result<Vec<Path>> {
    // extend the first predecessor by one edge of the missing color, then
    // filter by coherence with the others and compatibility with the rest
    let c0 = (0..graph.rank()).find(|&c| n.coord(c) > 0 && preds.iter().any(|m| m.coord(c) + 1 == n.coord(c)))
        .expect("frontier degree is positive somewhere");
    let base = &assignment[&preds
        .iter()
        .find(|m| m.coord(c0) + 1 == n.coord(c0))
        .cloned()
        .expect("predecessor in direction c0")];
    let mut cands = Vec::new();
    'next: for &e in graph.edges_from(graph.source_of(base), c0) {
        let q = graph.compose(base, &graph.edge_path(e))?;
        for m in preds {
            let (head, _) = graph.factorize(&q, m)?;
            if head != assignment[m] {
                continue 'next;
            }
        }
        for p in assignment.values() {
            if graph.lambda_min(&q, p)?.is_empty() {
                continue 'next;
            }
        }
        cands.push(q);
    }
    Ok(cands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rose_prefixes_depth_two() {
        let g = fixtures::rose2();
        let v = g.vertex_by_name("v").unwrap();
        let prefixes = boundary_prefixes(&g, v, &Degree::from_coords(&[2])).unwrap();
        assert_eq!(prefixes.len(), 7); // v, a, b, aa, ab, ba, bb
        assert!(prefixes.iter().all(|b| b.regime == Regime::Exact));
    }

    #[test]
    fn omega_prefixes_are_prefixes_of_the_maximal_morphism() {
        let g = fixtures::omega_2_11();
        let v00 = g.vertex_by_name("v00").unwrap();
        let depth = Degree::from_coords(&[1, 1]);
        let prefixes = boundary_prefixes(&g, v00, &depth).unwrap();
        assert_eq!(prefixes.len(), 4);
        let full = g.enumerate_paths(v00, &depth).pop().unwrap();
        for b in &prefixes {
            assert!(g.is_prefix(&b.prefix, &full).unwrap());
            assert_eq!(b.regime, Regime::Approximate);
        }
        // the full-degree path is itself a complete boundary path
        assert!(is_complete_boundary_path(&g, &full));
        assert!(!is_complete_boundary_path(&g, &prefixes[0].prefix));
    }

    #[test]
    fn edgeless_vertex_is_its_own_boundary_path() {
        let g = fixtures::omega_2_11();
        let v11 = g.vertex_by_name("v11").unwrap();
        let prefixes = boundary_prefixes(&g, v11, &Degree::from_coords(&[2, 2])).unwrap();
        assert_eq!(prefixes.len(), 1);
        assert!(is_complete_boundary_path(&g, &prefixes[0].prefix));
    }

    #[test]
    fn filter_membership_examples() {
        let sys = fixtures::trivial_system(fixtures::rose2());
        let g = sys.graph();
        let v = g.vertex_by_name("v").unwrap();
        let a = g.edge_path(g.edge_by_name("a").unwrap());
        let b = g.edge_path(g.edge_by_name("b").unwrap());
        let ab = g.compose(&a, &b).unwrap();
        let view = FilterView {
            base: BoundaryPrefix {
                prefix: ab.clone(),
                horizon: Degree::from_coords(&[2]),
                regime: Regime::Exact,
            },
        };
        let ia = crate::isg::iota(&sys, &a);
        let ib = crate::isg::iota(&sys, &b);
        assert!(filter_contains(g, &view, &ia).unwrap().holds());
        assert!(filter_contains(g, &view, &ib).unwrap().fails());

        // beyond the horizon
        let short = FilterView {
            base: BoundaryPrefix {
                prefix: a.clone(),
                horizon: Degree::from_coords(&[1]),
                regime: Regime::Exact,
            },
        };
        let iab = crate::isg::iota(&sys, &ab);
        assert!(filter_contains(g, &short, &iab).unwrap().is_unknown());
        let _ = v;
    }

    #[test]
    fn bijection_counts_on_fixtures() {
        let g = fixtures::rose2();
        let v = g.vertex_by_name("v").unwrap();
        for n in 1..=5u32 {
            let r = ultrafilter_bijection_check(&g, v, &Degree::from_coords(&[n])).unwrap();
            assert!(r.matched);
            assert_eq!(r.prefix_count, 1usize << n);
            assert_eq!(r.family_count, 1usize << n);
        }

        let o = fixtures::omega_2_11();
        let v00 = o.vertex_by_name("v00").unwrap();
        let r = ultrafilter_bijection_check(&o, v00, &Degree::from_coords(&[1, 1])).unwrap();
        assert!(r.matched);
        assert_eq!(r.prefix_count, 1);
        assert_eq!(r.family_count, 1);

        // single vertex with no edges
        let lonely = crate::kgraph::KGraph::new(1, vec!["v".into()], vec![], vec![]).unwrap();
        let v = lonely.vertex_by_name("v").unwrap();
        let r = ultrafilter_bijection_check(&lonely, v, &Degree::from_coords(&[3])).unwrap();
        assert!(r.matched);
        assert_eq!(r.prefix_count, 1);
    }

    #[test]
    fn exhaustive_family_enumeration_small() {
        let g = fixtures::rose2();
        let v = g.vertex_by_name("v").unwrap();
        let fes = finite_exhaustive_sets(&g, v, &Degree::from_coords(&[1])).unwrap();
        // {a, b} is the only exhaustive subset of the length-<=1 paths
        assert_eq!(fes.len(), 1);
        assert_eq!(fes[0].len(), 2);
    }
}
