//! Maximal connected acyclic subgraphs of a directed graph, induced by
//! vertices or by arcs. Connectivity is that of the underlying undirected
//! graph.

use std::collections::VecDeque;

use crate::engine::{neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orders::{component_of, is_connected};

use super::{
    adjacent_edges, edge_component, edge_subgraph, edge_vertices, edges_by_later_endpoint, extend_connected,
    mask,
};

#[derive(Debug)]
pub struct Dag {
    g: Graph,
    edge: bool,
    comps: CompCounter,
}

/// Kahn's algorithm on the arcs `(u, v)` with both ends in `members`.
fn acyclic(g: &Graph, members: &[bool]) -> bool {
    let mut indeg = vec![0usize; g.n()];
    let mut count = 0;
    for u in (0..g.n()).filter(|&u| members[u]) {
        count += 1;
        indeg[u] = g.in_neighbors(u).iter().filter(|&&w| members[w]).count();
    }
    let mut queue: VecDeque<usize> = (0..g.n()).filter(|&u| members[u] && indeg[u] == 0).collect();
    let mut seen = 0;
    while let Some(u) = queue.pop_front() {
        seen += 1;
        for &w in g.out_neighbors(u) {
            if members[w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
    }
    seen == count
}

/// Lexicographically smallest order of the vertices in `members` such that
/// every prefix is connected and each vertex's arcs to earlier vertices all
/// point the same way. Found by backtracking; `None` if no such order
/// exists (never the case for connected acyclic graphs).
pub fn canonical_vertex_order(g: &Graph, members: &[bool]) -> Option<Vec<usize>> {
    fn fits(g: &Graph, placed: &[bool], v: usize, first: bool) -> bool {
        let outs = g.out_neighbors(v).iter().any(|&w| placed[w]);
        let ins = g.in_neighbors(v).iter().any(|&w| placed[w]);
        (first || outs || ins) && !(outs && ins)
    }
    fn go(g: &Graph, members: &[bool], placed: &mut Vec<bool>, order: &mut Vec<usize>, total: usize) -> bool {
        if order.len() == total {
            return true;
        }
        for v in 0..g.n() {
            if members[v] && !placed[v] && fits(g, placed, v, order.is_empty()) {
                placed[v] = true;
                order.push(v);
                if go(g, members, placed, order, total) {
                    return true;
                }
                order.pop();
                placed[v] = false;
            }
        }
        false
    }
    let total = members.iter().filter(|&&b| b).count();
    let mut order = Vec::with_capacity(total);
    go(g, members, &mut vec![false; g.n()], &mut order, total).then_some(order)
}

impl Dag {
    /// Maximal connected induced acyclic subgraphs.
    pub fn induced(g: Graph) -> Result<Self> {
        Self::new(g, false)
    }

    /// Maximal connected arc-induced acyclic subgraphs.
    pub fn edge(g: Graph) -> Result<Self> {
        Self::new(g, true)
    }

    fn new(g: Graph, edge: bool) -> Result<Self> {
        if !g.is_directed() {
            return Err(Error::Instance("acyclic subgraphs need a directed graph".into()));
        }
        Ok(Dag {
            g,
            edge,
            comps: CompCounter::default(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    fn arcs_acyclic(&self, arcs: &[usize]) -> bool {
        let h = edge_subgraph(&self.g, arcs);
        acyclic(&h, &vec![true; h.n()])
    }

    fn reconstruct_at(&self, s: &[usize], v: usize) -> Vec<Solution> {
        let g = &self.g;
        if self.edge {
            let (t, h) = g.edge(v);
            // Drop the arcs entering the tail, or those leaving the head.
            let drop_in_tail = |f: &usize| g.edge(*f).1 == t;
            let drop_out_head = |f: &usize| g.edge(*f).0 == h;
            let build = |drop: &dyn Fn(&usize) -> bool| {
                let mut out: Vec<usize> = s.iter().filter(|f| !drop(f)).copied().collect();
                out.push(v);
                out.sort_unstable();
                edge_component(g, &out, v)
            };
            return vec![build(&drop_in_tail), build(&drop_out_head)];
        }
        let side = |nb: &[usize]| {
            let mut m = mask(g.n(), s);
            for &u in nb {
                m[u] = false;
            }
            m[v] = true;
            component_of(g, &m, v)
        };
        vec![side(g.out_neighbors(v)), side(g.in_neighbors(v))]
    }
}

impl Problem for Dag {
    fn name(&self) -> &'static str {
        if self.edge {
            "dag-edge-connected"
        } else {
            "dag-induced-connected"
        }
    }

    fn element_kind(&self) -> ElementKind {
        if self.edge {
            ElementKind::Edge
        } else {
            ElementKind::Vertex
        }
    }

    fn ground_size(&self) -> usize {
        if self.edge {
            self.g.m()
        } else {
            self.g.n()
        }
    }

    fn is_solution(&self, cand: &[usize]) -> bool {
        let g = &self.g;
        if self.edge {
            let h = edge_subgraph(g, cand);
            let touched = mask(g.n(), &edge_vertices(g, cand));
            acyclic(&h, &touched) && is_connected(&h, &touched)
        } else {
            let m = mask(g.n(), cand);
            acyclic(g, &m) && is_connected(g, &m)
        }
    }

    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        let g = &self.g;
        if self.edge {
            extend_connected(g.m(), partial, |e| adjacent_edges(g, e), |cur, e| {
                let mut cand = cur.to_vec();
                cand.push(e);
                self.arcs_acyclic(&cand)
            })
        } else {
            let mut inside = mask(g.n(), partial);
            extend_connected(g.n(), partial, |v| g.neighbors(v).to_vec(), |_, v| {
                inside[v] = true;
                let ok = acyclic(g, &inside);
                inside[v] = ok;
                ok
            })
        }
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_at(s, v))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    fn neighbors_comp_bound(&self) -> u64 {
        2 * self.ground_size() as u64
    }

    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
        let g = &self.g;
        Some(if self.edge {
            let h = edge_subgraph(g, s);
            let vertices = canonical_vertex_order(&h, &mask(g.n(), &edge_vertices(g, s)))
                .expect("connected acyclic arc set without a canonical order");
            edges_by_later_endpoint(g, s, &vertices)
        } else {
            canonical_vertex_order(g, &mask(g.n(), s)).expect("connected acyclic set without a canonical order")
        })
    }
}
