//! Problem plugins, one module per family of maximal subgraphs.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::engine::{insert_sorted, Solution};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub mod bipartite;
pub mod chordal;
pub mod dag;
pub mod degenerate;
pub mod geometry;
pub mod interval;
pub mod trees;

pub(crate) fn mask(size: usize, s: &[usize]) -> Vec<bool> {
    let mut m = vec![false; size];
    for &e in s {
        m[e] = true;
    }
    m
}

pub(crate) fn from_mask(m: &[bool]) -> Vec<usize> {
    m.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// Subsets of the sorted `items` with at most `max` members, in
/// lexicographic order of their sorted member sequences.
pub(crate) fn small_subsets(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], from: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            go(items, i + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, max, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Single ascending pass adding every element `e` with `fits(cur, e)`.
/// Maximal for hereditary properties, where a rejected element can never
/// become addible again.
pub(crate) fn extend_ascending(
    size: usize,
    partial: &[usize],
    mut fits: impl FnMut(&[usize], usize) -> bool,
) -> Solution {
    let mut cur = partial.to_vec();
    for e in 0..size {
        if cur.binary_search(&e).is_err() && fits(&cur, e) {
            cur = insert_sorted(&cur, e);
        }
    }
    cur
}

/// Repeatedly adds the smallest element adjacent to the current set that
/// fits; starts from the smallest fitting element when `partial` is empty.
/// Rejections are final, which is sound whenever the property minus the
/// connectivity requirement is hereditary.
pub(crate) fn extend_connected(
    size: usize,
    partial: &[usize],
    adjacent: impl Fn(usize) -> Vec<usize>,
    mut fits: impl FnMut(&[usize], usize) -> bool,
) -> Solution {
    let mut cur = partial.to_vec();
    if cur.is_empty() {
        match (0..size).find(|&e| fits(&[], e)) {
            Some(e) => cur.push(e),
            None => return cur,
        }
    }
    let mut seen = mask(size, &cur);
    let mut heap = BinaryHeap::new();
    for &e in &cur {
        for f in adjacent(e) {
            if !seen[f] {
                seen[f] = true;
                heap.push(Reverse(f));
            }
        }
    }
    while let Some(Reverse(e)) = heap.pop() {
        if fits(&cur, e) {
            cur = insert_sorted(&cur, e);
            for f in adjacent(e) {
                if !seen[f] {
                    seen[f] = true;
                    heap.push(Reverse(f));
                }
            }
        }
    }
    cur
}

/// Edges sharing an endpoint with edge `e`, ascending.
pub(crate) fn adjacent_edges(g: &Graph, e: usize) -> Vec<usize> {
    let (a, b) = g.edge(e);
    let mut out: Vec<usize> = g
        .incident_edges(a)
        .iter()
        .chain(g.incident_edges(b))
        .copied()
        .filter(|&f| f != e)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Graph on all vertices of `g` keeping only the edges with ids in `edges`.
pub(crate) fn edge_subgraph(g: &Graph, edges: &[usize]) -> Graph {
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&e| g.edge(e)).collect();
    if g.is_directed() {
        Graph::directed(g.n(), &pairs)
    } else {
        Graph::undirected(g.n(), &pairs)
    }
}

/// Vertices touched by the edges in `edges`, sorted.
pub(crate) fn edge_vertices(g: &Graph, edges: &[usize]) -> Vec<usize> {
    let mut m = vec![false; g.n()];
    for &e in edges {
        let (a, b) = g.edge(e);
        m[a] = true;
        m[b] = true;
    }
    from_mask(&m)
}

/// Edges of `edges` in the component (by shared endpoints) of edge `e`.
pub(crate) fn edge_component(g: &Graph, edges: &[usize], e: usize) -> Vec<usize> {
    let member = mask(g.m(), edges);
    let mut seen = vec![false; g.m()];
    seen[e] = true;
    let mut stack = vec![e];
    let mut out = vec![e];
    while let Some(f) = stack.pop() {
        for h in adjacent_edges(g, f) {
            if member[h] && !seen[h] {
                seen[h] = true;
                stack.push(h);
                out.push(h);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Edge ids ordered by the position of their later endpoint in
/// `vertex_order`, ties by the earlier endpoint.
pub(crate) fn edges_by_later_endpoint(g: &Graph, edges: &[usize], vertex_order: &[usize]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in vertex_order.iter().enumerate() {
        pos[v] = i;
    }
    let mut keyed: Vec<((usize, usize), usize)> = edges
        .iter()
        .map(|&e| {
            let (a, b) = g.edge(e);
            let (pa, pb) = (pos[a], pos[b]);
            ((pa.max(pb), pa.min(pb)), e)
        })
        .collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, e)| e).collect()
}

/// Components of `G[members]` in smallest-id order, each listed by BFS
/// from its smallest vertex.
pub(crate) fn componentwise_bfs(g: &Graph, members: &[bool]) -> Vec<usize> {
    let mut out = Vec::new();
    for comp in crate::orders::components(g, members) {
        let set = crate::graph::VertexSet::new(g.n(), comp.iter().copied());
        out.extend(crate::orders::bfs_canonical_order(g, &set, comp[0]));
    }
    out
}

pub(crate) fn require_undirected(g: &Graph, variant: &str) -> Result<()> {
    if g.is_directed() {
        return Err(Error::Instance(format!("{variant} needs an undirected graph")));
    }
    Ok(())
}
