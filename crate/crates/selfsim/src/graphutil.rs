//! Small digraph helpers shared by the automaton and checker modules.

/// Tarjan's strongly connected components, iterative. Returns the components
/// in reverse topological order; node order inside a component follows the
/// discovery stack.
pub(crate) fn strongly_connected_components(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    #[derive(Clone, Copy)]
    struct Frame {
        node: usize,
        edge: usize,
    }

    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut counter = 0usize;
    let mut comps = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut frames = vec![Frame { node: root, edge: 0 }];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(frame) = frames.last_mut() {
            let v = frame.node;
            if frame.edge < adj[v].len() {
                let w = adj[v][frame.edge];
                frame.edge += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push(Frame { node: w, edge: 0 });
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    low[parent.node] = low[parent.node].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Does the component (as produced above) contain a cycle, i.e. is it larger
/// than one node or a single node with a self-loop?
pub(crate) fn component_is_cyclic(comp: &[usize], adj: &[Vec<usize>]) -> bool {
    comp.len() > 1 || adj[comp[0]].contains(&comp[0])
}

/// Shortest path (as a node list) from `from` to some node satisfying `goal`,
/// walking only `adj`; `None` if unreachable. Deterministic BFS order.
pub(crate) fn bfs_path(
    n: usize,
    adj: &[Vec<usize>],
    from: usize,
    goal: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[from] = true;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if goal(v) {
            let mut path = vec![v];
            let mut cur = v;
            while parent[cur] != usize::MAX {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// A closed walk through `node` inside the strongly connected component
/// `comp` of the labeled digraph `adj`, covering at least one label of every
/// color marked in `colors`. Built by splicing, for each needed color, a
/// detour through one transition of that color.
pub(crate) fn covering_closed_walk<L: Copy + Eq>(
    adj: &[Vec<(L, usize)>],
    comp: &[usize],
    node: usize,
    colors: &[bool],
    color_of: impl Fn(L) -> usize,
) -> Vec<L> {
    let n = adj.len();
    let comp_adj: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            if comp.contains(&p) {
                adj[p].iter().filter(|&&(_, q)| comp.contains(&q)).map(|&(_, q)| q).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let edge_between = |a: usize, b: usize| -> L {
        adj[a].iter().find(|&&(_, q)| q == b).map(|&(l, _)| l).expect("adjacent in component")
    };
    let walk_nodes = |from: usize, to: usize| -> Vec<usize> {
        bfs_path(n, &comp_adj, from, |x| x == to).expect("component is strongly connected")
    };
    let mut walk = Vec::new();
    let mut at = node;
    let needed: Vec<usize> =
        colors.iter().enumerate().filter(|&(_, &b)| b).map(|(c, _)| c).collect();
    for color in needed {
        let mut found = None;
        'outer: for &p in comp {
            for &(l, q) in &adj[p] {
                if comp.contains(&q) && color_of(l) == color {
                    found = Some((p, l, q));
                    break 'outer;
                }
            }
        }
        let (p, l, q) = found.expect("color present in component");
        let to_p = walk_nodes(at, p);
        for w in to_p.windows(2) {
            walk.push(edge_between(w[0], w[1]));
        }
        walk.push(l);
        at = q;
    }
    let back = walk_nodes(at, node);
    for w in back.windows(2) {
        walk.push(edge_between(w[0], w[1]));
    }
    if walk.is_empty() {
        walk.push(adj[node].iter().find(|&&(_, q)| q == node).expect("self-loop").0);
    }
    walk
}
