//! Vertex orders and traversals restricted to an induced subgraph.
//!
//! Every function treats directed graphs through their underlying undirected
//! graph and breaks ties by smallest vertex id.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

/// Vertices of `members` reachable from `v` inside `G[members]`, sorted.
pub fn component_of(g: &Graph, members: &[bool], v: usize) -> Vec<usize> {
    assert!(members[v], "vertex {v} is not in the set");
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut stack = vec![v];
    let mut out = vec![v];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if members[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The connected component of `G[s]` that contains `v`.
pub fn connected_component(g: &Graph, s: &VertexSet, v: usize) -> VertexSet {
    VertexSet::new(g.n(), component_of(g, s.mask(), v))
}

/// Connected components of `G[members]`, each sorted, ordered by smallest id.
pub fn components(g: &Graph, members: &[bool]) -> Vec<Vec<usize>> {
    let mut done = vec![false; g.n()];
    let mut out = Vec::new();
    for v in 0..g.n() {
        if members[v] && !done[v] {
            let c = component_of(g, members, v);
            for &u in &c {
                done[u] = true;
            }
            out.push(c);
        }
    }
    out
}

pub fn is_connected(g: &Graph, members: &[bool]) -> bool {
    match members.iter().position(|&b| b) {
        None => true,
        Some(v) => component_of(g, members, v).len() == members.iter().filter(|&&b| b).count(),
    }
}

/// BFS distances from `root` inside `G[members]`; `None` when unreachable.
pub fn bfs_distances(g: &Graph, members: &[bool], root: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if members[w] && dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `s` sorted by (distance from `root` in `G[s]`, id).
pub fn bfs_canonical_order(g: &Graph, s: &VertexSet, root: usize) -> Vec<usize> {
    assert!(s.contains(root), "root {root} is not in the set");
    let dist = bfs_distances(g, s.mask(), root);
    let mut order: Vec<(usize, usize)> = s
        .as_slice()
        .iter()
        .map(|&v| {
            let d = dist[v].unwrap_or_else(|| panic!("set is disconnected: {v} unreachable"));
            (d, v)
        })
        .collect();
    order.sort_unstable();
    order.into_iter().map(|(_, v)| v).collect()
}

/// Repeatedly removes a minimum-degree vertex of `G[s]` (smallest id on
/// ties). Returns the removal order and the degeneracy, the largest degree
/// seen at removal time.
pub fn degeneracy_order(g: &Graph, s: &[bool]) -> (Vec<usize>, usize) {
    let mut alive = s.to_vec();
    let mut deg: Vec<usize> = (0..g.n())
        .map(|v| {
            if s[v] {
                g.neighbors(v).iter().filter(|&&w| s[w]).count()
            } else {
                0
            }
        })
        .collect();
    let count = s.iter().filter(|&&b| b).count();
    let mut order = Vec::with_capacity(count);
    let mut degeneracy = 0;
    for _ in 0..count {
        let v = (0..g.n())
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        degeneracy = degeneracy.max(deg[v]);
        alive[v] = false;
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// Degeneracy of `G[s]`.
pub fn degeneracy(g: &Graph, s: &[bool]) -> usize {
    degeneracy_order(g, s).1
}

/// Perfect elimination order of `G[s]` built by repeatedly removing the
/// smallest-id simplicial vertex, or `None` if `G[s]` is not chordal.
pub fn perfect_elimination_order(g: &Graph, s: &[bool]) -> Option<Vec<usize>> {
    let mut alive = s.to_vec();
    let count = s.iter().filter(|&&b| b).count();
    let mut order = Vec::with_capacity(count);
    for _ in 0..count {
        let v = (0..g.n()).find(|&v| alive[v] && is_simplicial(g, &alive, v))?;
        alive[v] = false;
        order.push(v);
    }
    Some(order)
}

/// True when the neighbors of `v` inside `alive` form a clique.
pub fn is_simplicial(g: &Graph, alive: &[bool], v: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
    nb.iter()
        .enumerate()
        .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::undirected(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::undirected(n, &e)
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::undirected(n, &e)
    }

    #[test]
    fn component_examples() {
        let c4 = cycle(4);
        let s = VertexSet::new(4, [0, 2]);
        assert_eq!(connected_component(&c4, &s, 0).as_slice(), &[0]);
        let p3 = path(3);
        assert_eq!(
            connected_component(&p3, &VertexSet::full(3), 2).as_slice(),
            &[0, 1, 2]
        );
        let k4 = complete(4);
        let s = VertexSet::new(4, [0, 1, 3]);
        assert_eq!(connected_component(&k4, &s, 3).as_slice(), &[0, 1, 3]);
    }

    #[test]
    #[should_panic(expected = "not in the set")]
    fn component_requires_membership() {
        let g = path(3);
        connected_component(&g, &VertexSet::new(3, [0]), 2);
    }

    #[test]
    fn bfs_order_examples() {
        assert_eq!(bfs_canonical_order(&path(3), &VertexSet::full(3), 0), vec![0, 1, 2]);
        assert_eq!(bfs_canonical_order(&cycle(4), &VertexSet::full(4), 0), vec![0, 1, 3, 2]);
        let star = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(bfs_canonical_order(&star, &VertexSet::full(4), 0), vec![0, 1, 2, 3]);
    }

    #[test]
    #[should_panic(expected = "disconnected")]
    fn bfs_order_rejects_disconnected() {
        let g = Graph::undirected(3, &[(0, 1)]);
        bfs_canonical_order(&g, &VertexSet::full(3), 0);
    }

    #[test]
    fn degeneracy_examples() {
        let (order, d) = degeneracy_order(&complete(4), &[true; 4]);
        assert_eq!((order, d), (vec![0, 1, 2, 3], 3));
        assert_eq!(degeneracy(&path(4), &[true; 4]), 1);
        let tri_pendant = Graph::undirected(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let (order, d) = degeneracy_order(&tri_pendant, &[true; 4]);
        assert_eq!(d, 2);
        assert_eq!(order[0], 3);
    }

    #[test]
    fn peo_examples() {
        assert_eq!(perfect_elimination_order(&complete(3), &[true; 3]), Some(vec![0, 1, 2]));
        assert_eq!(perfect_elimination_order(&cycle(4), &[true; 4]), None);
        assert_eq!(perfect_elimination_order(&path(3), &[true; 3]), Some(vec![0, 1, 2]));
    }
}
