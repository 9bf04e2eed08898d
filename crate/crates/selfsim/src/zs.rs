//! Cross-check oracle through the Zappa-Szep product category.
//!
//! The pairs (mu, g) with r(mu, g) = (r(mu), e) and s(mu, g) = (g^{-1}.s(mu), e)
//! form a left cancellative category under (mu, g)(nu, h) = (mu (g.nu),
//! phi(g, nu) h). Each triple (mu, g, nu) with s(mu) = g.s(nu) induces a
//! partial bijection on it, prepend-after-strip:
//!
//! ```text
//! (nu beta, h) |-> (mu (g.beta), phi(g, beta) h)
//! ```
//!
//! Composing these partial maps pointwise on a degree-truncated morphism set
//! must reproduce the semigroup product of the corresponding elements. This
//! gives an independent route through the same algebra: the maps never touch
//! the product formula.

use crate::action::SelfSimilarSystem;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::isg::{multiply, ISGElement, Triple};
use crate::path::Path;
use std::collections::BTreeMap;

/// A morphism of the product category, truncated to finite degree.
pub type ZSMorphism = (Path, GroupElement);

/// A partial bijection on the truncated morphism set.
pub type PartialMap = BTreeMap<ZSMorphism, ZSMorphism>;

/// All morphisms (p, g) with d(p) <= cap.
pub fn morphisms_up_to(sys: &SelfSimilarSystem, cap: &Degree) -> Vec<ZSMorphism> {
    let graph = sys.graph();
    let mut out = Vec::new();
    for v in graph.vertices() {
        for p in graph.paths_up_to(v, cap) {
            for g in sys.group().elements() {
                out.push((p.clone(), g));
            }
        }
    }
    out
}

/// The partial map tau^{(mu,g)} sigma^{(nu,e)} of one triple, restricted to
/// the morphisms of degree <= cap whose image also stays within the cap.
pub fn triple_map(sys: &SelfSimilarSystem, t: &Triple, cap: &Degree) -> Result<PartialMap> {
    let graph = sys.graph();
    let mut map = PartialMap::new();
    let budget = match cap.checked_sub(t.nu.degree()) {
        Some(b) => b,
        None => return Ok(map),
    };
    for beta in graph.paths_up_to(graph.source_of(&t.nu), &budget) {
        let dom_path = graph.compose(&t.nu, &beta)?;
        let img_path = graph.compose(&t.mu, &sys.act(t.g, &beta))?;
        if !img_path.degree().leq(cap) {
            continue;
        }
        let part = sys.cocycle_path(t.g, &beta);
        for h in sys.group().elements() {
            map.insert(
                (dom_path.clone(), h),
                (img_path.clone(), sys.group().mul(part, h)),
            );
        }
    }
    Ok(map)
}

/// The join of the triple maps of an element; orthogonality keeps the
/// domains disjoint, which is asserted.
pub fn element_map(sys: &SelfSimilarSystem, f: &ISGElement, cap: &Degree) -> Result<PartialMap> {
    let mut map = PartialMap::new();
    for t in f.triples() {
        for (k, v) in triple_map(sys, t, cap)? {
            if map.insert(k, v).is_some() {
                return Err(Error::Internal(
                    "triple maps of an element overlap; orthogonality is broken".into(),
                ));
            }
        }
    }
    Ok(map)
}

fn compose_maps(outer: &PartialMap, inner: &PartialMap) -> PartialMap {
    inner
        .iter()
        .filter_map(|(k, mid)| outer.get(mid).map(|v| (k.clone(), v.clone())))
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct ZsReport {
    pub pairs_checked: usize,
    pub points_compared: usize,
    pub mismatches: Vec<String>,
}

impl ZsReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares, for the given element pairs, the pointwise composition of their
/// partial maps against the map of their semigroup product. Points where the
/// truncation cuts either route off are skipped; everywhere both routes are
/// defined they must agree, and a product-map point whose preimage chain
/// stays inside the cap must be realized by the composition.
pub fn zs_compare_pairs(
    sys: &SelfSimilarSystem,
    pairs: &[(ISGElement, ISGElement)],
    cap: &Degree,
) -> Result<ZsReport> {
    let mut report = ZsReport::default();
    for (e, f) in pairs {
        let me = element_map(sys, e, cap)?;
        let mf = element_map(sys, f, cap)?;
        compare_one(sys, e, &me, f, &mf, cap, &mut report)?;
    }
    Ok(report)
}

/// Runs the oracle over every singleton pair whose triples have legs of
/// degree <= `leg_cap`, truncating the morphism set at `cap`. The singleton
/// maps are computed once and reused across pairs.
pub fn zs_compose_oracle(
    sys: &SelfSimilarSystem,
    leg_cap: &Degree,
    cap: &Degree,
) -> Result<ZsReport> {
    let graph = sys.graph();
    let mut singletons = Vec::new();
    for v in graph.vertices() {
        for mu in graph.paths_up_to(v, leg_cap) {
            for g in sys.group().elements() {
                for w in graph.vertices() {
                    for nu in graph.paths_up_to(w, leg_cap) {
                        if graph.source_of(&mu) == sys.act_vertex(g, graph.source_of(&nu)) {
                            let t = Triple { mu: mu.clone(), g, nu: nu.clone() };
                            singletons.push(crate::isg::make_element(sys, vec![t])?);
                        }
                    }
                }
            }
        }
    }
    let maps: Vec<PartialMap> =
        singletons.iter().map(|s| element_map(sys, s, cap)).collect::<Result<_>>()?;
    let mut report = ZsReport::default();
    for (e, me) in singletons.iter().zip(&maps) {
        for (f, mf) in singletons.iter().zip(&maps) {
            compare_one(sys, e, me, f, mf, cap, &mut report)?;
        }
    }
    Ok(report)
}

fn compare_one(
    sys: &SelfSimilarSystem,
    e: &ISGElement,
    me: &PartialMap,
    f: &ISGElement,
    mf: &PartialMap,
    cap: &Degree,
    report: &mut ZsReport,
) -> Result<()> {
    let graph = sys.graph();
    let composed = compose_maps(me, mf);
    let product = multiply(sys, e, f)?;
    let mp = element_map(sys, &product, cap)?;
    report.pairs_checked += 1;
    for (k, v) in &composed {
        report.points_compared += 1;
        match mp.get(k) {
            Some(w) if w == v => {}
            Some(w) => report.mismatches.push(format!(
                "composition sends ({}, {}) to ({}, {}) but the product map gives ({}, {})",
                graph.format_path(&k.0),
                k.1,
                graph.format_path(&v.0),
                v.1,
                graph.format_path(&w.0),
                w.1
            )),
            None => report.mismatches.push(format!(
                "composition is defined at ({}, {}) but the product map is not",
                graph.format_path(&k.0),
                k.1
            )),
        }
    }
    for (k, w) in &mp {
        if let Some(mid) = mf.get(k) {
            if me.contains_key(mid) && composed.get(k) != Some(w) {
                report.mismatches.push(format!(
                    "product map point ({}, {}) is not realized by the composition",
                    graph.format_path(&k.0),
                    k.1
                ));
            }
        }
    }
    Ok(())
}
