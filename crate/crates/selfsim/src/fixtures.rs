//! Small standard systems used throughout the test suites and handy as CLI
//! demo inputs. Each builder mirrors one of the fixture files shipped under
//! `fixtures/`.

use crate::action::SelfSimilarSystem;
use crate::group::{Group, GroupElement};
use crate::kgraph::{Edge, EdgeId, KGraph, VertexId};

fn edge(name: &str, color: usize, range: u32, source: u32) -> Edge {
    Edge { name: name.into(), color, range: VertexId(range), source: VertexId(source) }
}

/// One vertex, two loops `a`, `b`, rank 1.
pub fn rose2() -> KGraph {
    KGraph::new(
        1,
        vec!["v".into()],
        vec![edge("a", 0, 0, 0), edge("b", 0, 0, 0)],
        vec![],
    )
    .expect("rose2 builds")
}

/// One vertex, a single loop `a`, rank 1.
pub fn single_loop() -> KGraph {
    KGraph::new(1, vec!["v".into()], vec![edge("a", 0, 0, 0)], vec![]).expect("loop builds")
}

/// Two vertices each carrying one loop, no connecting edges.
pub fn disc() -> KGraph {
    KGraph::new(
        1,
        vec!["v".into(), "w".into()],
        vec![edge("a", 0, 0, 0), edge("b", 0, 1, 1)],
        vec![],
    )
    .expect("disc builds")
}

/// The rank-2 grid category with degree cap (1,1): vertices v00..v11, one
/// horizontal and one vertical edge per row/column, and a single square
/// `ha ub = ua hb`.
pub fn omega_2_11() -> KGraph {
    KGraph::new(
        2,
        vec!["v00".into(), "v10".into(), "v01".into(), "v11".into()],
        vec![
            edge("ha", 0, 0, 1), // v00 <- v10
            edge("hb", 0, 2, 3), // v01 <- v11
            edge("ua", 1, 0, 2), // v00 <- v01
            edge("ub", 1, 1, 3), // v10 <- v11
        ],
        vec![((EdgeId(0), EdgeId(3)), (EdgeId(2), EdgeId(1)))],
    )
    .expect("omega builds")
}

/// Same skeleton as [`omega_2_11`] but with the square table left empty.
pub fn omega_2_11_without_square() -> KGraph {
    KGraph::new(
        2,
        vec!["v00".into(), "v10".into(), "v01".into(), "v11".into()],
        vec![
            edge("ha", 0, 0, 1),
            edge("hb", 0, 2, 3),
            edge("ua", 1, 0, 2),
            edge("ub", 1, 1, 3),
        ],
        vec![],
    )
    .expect("omega skeleton builds")
}

fn rose3_with(sigma: [usize; 3], tau: [usize; 3]) -> KGraph {
    // edges 0..=2: a1,a2,a3 color 1; edge 3: b color 2; edge 4: c color 3
    let edges = vec![
        edge("a1", 0, 0, 0),
        edge("a2", 0, 0, 0),
        edge("a3", 0, 0, 0),
        edge("b", 1, 0, 0),
        edge("c", 2, 0, 0),
    ];
    let mut squares = Vec::new();
    for i in 0..3 {
        squares.push(((EdgeId(i as u32), EdgeId(3)), (EdgeId(3), EdgeId(sigma[i] as u32))));
        squares.push(((EdgeId(i as u32), EdgeId(4)), (EdgeId(4), EdgeId(tau[i] as u32))));
    }
    squares.push(((EdgeId(3), EdgeId(4)), (EdgeId(4), EdgeId(3))));
    KGraph::new(3, vec!["v".into()], edges, squares).expect("rose3 builds")
}

/// Rank-3 rose: three color-1 loops commuting pointwise with one loop in each
/// of the other two colors. Associative by construction.
pub fn rose3() -> KGraph {
    rose3_with([0, 1, 2], [0, 1, 2])
}

/// Same skeleton with non-commuting square permutations; each pair table is
/// still a bijection but the triple refactoring is order-dependent.
pub fn rose3_twisted() -> KGraph {
    rose3_with([1, 0, 2], [2, 1, 0])
}

/// Wraps a graph with the trivial group and identity action.
pub fn trivial_system(graph: KGraph) -> SelfSimilarSystem {
    SelfSimilarSystem::trivial(graph)
}

fn z2() -> Group {
    Group::cyclic(2)
}

/// Z/2 swapping the two loops of the rose, with cocycle phi(g, a) =
/// phi(g, b) = g.
pub fn flip() -> SelfSimilarSystem {
    let graph = rose2();
    let group = z2();
    let g = GroupElement(1);
    let a = graph.edge_by_name("a").unwrap();
    let b = graph.edge_by_name("b").unwrap();
    SelfSimilarSystem::new(
        graph,
        group,
        vec![vec![VertexId(0)], vec![VertexId(0)]],
        vec![vec![a, b], vec![b, a]],
        vec![vec![GroupElement::IDENTITY; 2], vec![g, g]],
    )
    .expect("flip builds")
}

/// Z/2 acting trivially on the rose with the cocycle collapsing to the
/// identity on every edge: every positive-length path is strongly fixed.
pub fn trivial_z2_flat_cocycle() -> SelfSimilarSystem {
    let graph = rose2();
    SelfSimilarSystem::new(
        graph,
        z2(),
        vec![vec![VertexId(0)], vec![VertexId(0)]],
        vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(0), EdgeId(1)]],
        vec![vec![GroupElement::IDENTITY; 2], vec![GroupElement::IDENTITY; 2]],
    )
    .expect("flat-cocycle system builds")
}

/// Z/2 acting trivially on the rose with the cocycle returning g on every
/// edge: nothing is ever strongly fixed, yet g fixes every boundary path.
pub fn trivial_z2_persistent_cocycle() -> SelfSimilarSystem {
    let graph = rose2();
    let g = GroupElement(1);
    SelfSimilarSystem::new(
        graph,
        z2(),
        vec![vec![VertexId(0)], vec![VertexId(0)]],
        vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(0), EdgeId(1)]],
        vec![vec![GroupElement::IDENTITY; 2], vec![g, g]],
    )
    .expect("persistent-cocycle system builds")
}

/// Z/2 acting trivially on the rose with phi(g, a) = g and phi(g, b) = e:
/// the strongly fixed paths are exactly those containing a `b`, so the
/// first-hit set {a^n b} is infinite and pairwise disjoint.
pub fn mixed_cocycle_z2() -> SelfSimilarSystem {
    let graph = rose2();
    let g = GroupElement(1);
    SelfSimilarSystem::new(
        graph,
        z2(),
        vec![vec![VertexId(0)], vec![VertexId(0)]],
        vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(0), EdgeId(1)]],
        vec![vec![GroupElement::IDENTITY; 2], vec![g, GroupElement::IDENTITY]],
    )
    .expect("mixed-cocycle system builds")
}

/// Z/2 on the single loop, fixing it with trivial cocycle: the loop is the
/// only edge at v and is strongly fixed by g.
pub fn fixed_loop_z2() -> SelfSimilarSystem {
    let graph = single_loop();
    SelfSimilarSystem::new(
        graph,
        z2(),
        vec![vec![VertexId(0)], vec![VertexId(0)]],
        vec![vec![EdgeId(0)], vec![EdgeId(0)]],
        vec![vec![GroupElement::IDENTITY], vec![GroupElement::IDENTITY]],
    )
    .expect("fixed-loop system builds")
}
