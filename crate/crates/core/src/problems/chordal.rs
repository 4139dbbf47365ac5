//! Maximal chordal subgraphs: induced, connected induced, and edge-induced.

use crate::engine::{neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::Result;
use crate::graph::Graph;
use crate::orders::{component_of, is_connected, perfect_elimination_order};

use super::{edge_subgraph, edges_by_later_endpoint, extend_ascending, extend_connected, from_mask, mask, require_undirected};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordalKind {
    Induced,
    InducedConnected,
    Edge,
}

#[derive(Debug)]
pub struct Chordal {
    g: Graph,
    kind: ChordalKind,
    comps: CompCounter,
}

/// Maximal cliques of the chordal graph `G[members]`, listed by the PEO
/// position of the vertex that starts them. Empty input gives one empty
/// clique.
pub fn maximal_cliques(g: &Graph, members: &[bool]) -> Vec<Vec<usize>> {
    let peo = perfect_elimination_order(g, members).expect("maximal_cliques needs a chordal graph");
    if peo.is_empty() {
        return vec![Vec::new()];
    }
    let mut later = members.to_vec();
    let mut cands: Vec<Vec<usize>> = Vec::with_capacity(peo.len());
    for &v in &peo {
        later[v] = false;
        let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| later[w]).collect();
        c.push(v);
        c.sort_unstable();
        cands.push(c);
    }
    let subset = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
    cands
        .iter()
        .filter(|c| !cands.iter().any(|d| subset(c, d)))
        .fold(Vec::new(), |mut out, c| {
            if !out.contains(c) {
                out.push(c.clone());
            }
            out
        })
}

impl Chordal {
    pub fn new(g: Graph, kind: ChordalKind) -> Result<Self> {
        require_undirected(&g, "chordal subgraphs")?;
        Ok(Chordal {
            g,
            kind,
            comps: CompCounter::default(),
        })
    }

    pub fn induced(g: Graph) -> Result<Self> {
        Self::new(g, ChordalKind::Induced)
    }

    pub fn induced_connected(g: Graph) -> Result<Self> {
        Self::new(g, ChordalKind::InducedConnected)
    }

    pub fn edge(g: Graph) -> Result<Self> {
        Self::new(g, ChordalKind::Edge)
    }

    fn edges_chordal(&self, edges: &[usize]) -> bool {
        let h = edge_subgraph(&self.g, edges);
        perfect_elimination_order(&h, &vec![true; h.n()]).is_some()
    }

    /// Maximal cliques of `G[S ∪ {v}]` containing `v`.
    pub fn cliques_at(&self, s: &[usize], v: usize) -> Vec<Vec<usize>> {
        let g = &self.g;
        let mut nb = vec![false; g.n()];
        for &u in g.neighbors(v) {
            nb[u] = s.binary_search(&u).is_ok();
        }
        maximal_cliques(g, &nb)
            .into_iter()
            .map(|mut q| {
                q.push(v);
                q.sort_unstable();
                q
            })
            .collect()
    }

    fn reconstruct_at(&self, s: &[usize], v: usize) -> Vec<Solution> {
        let g = &self.g;
        if self.kind == ChordalKind::Edge {
            return self.edge_reconstruct(s, v);
        }
        self.cliques_at(s, v)
            .into_iter()
            .map(|q| {
                let mut m = mask(g.n(), s);
                for &u in g.neighbors(v) {
                    m[u] = m[u] && q.binary_search(&u).is_ok();
                }
                m[v] = true;
                if self.kind == ChordalKind::InducedConnected {
                    component_of(g, &m, v)
                } else {
                    from_mask(&m)
                }
            })
            .collect()
    }

    /// For edge `e = {x, y}` and each endpoint `y`: keep only the edges from
    /// `y` into one maximal clique of the common neighborhood of `x` and `y`
    /// in `S`, then add `e`. `y` is simplicial afterwards.
    fn edge_reconstruct(&self, s: &[usize], e: usize) -> Vec<Solution> {
        let g = &self.g;
        let h = edge_subgraph(g, s);
        let (a, b) = g.edge(e);
        let mut out = Vec::new();
        for (x, y) in [(a, b), (b, a)] {
            let mut common = vec![false; g.n()];
            for &u in h.neighbors(y) {
                common[u] = h.has_edge(u, x);
            }
            for q in maximal_cliques(&h, &common) {
                let mut cand: Vec<usize> = s
                    .iter()
                    .copied()
                    .filter(|&f| {
                        let (p, r) = g.edge(f);
                        let other = if p == y {
                            r
                        } else if r == y {
                            p
                        } else {
                            return true;
                        };
                        q.binary_search(&other).is_ok()
                    })
                    .collect();
                cand.push(e);
                cand.sort_unstable();
                out.push(cand);
            }
        }
        out
    }

    fn vertex_order(h: &Graph, members: &[bool]) -> Vec<usize> {
        let mut order = perfect_elimination_order(h, members).expect("canonical order of a non-chordal set");
        order.reverse();
        order
    }
}

impl Problem for Chordal {
    fn name(&self) -> &'static str {
        match self.kind {
            ChordalKind::Induced => "chordal-induced",
            ChordalKind::InducedConnected => "chordal-induced-connected",
            ChordalKind::Edge => "chordal-edge",
        }
    }

    fn element_kind(&self) -> ElementKind {
        if self.kind == ChordalKind::Edge {
            ElementKind::Edge
        } else {
            ElementKind::Vertex
        }
    }

    fn ground_size(&self) -> usize {
        if self.kind == ChordalKind::Edge {
            self.g.m()
        } else {
            self.g.n()
        }
    }

    fn is_solution(&self, cand: &[usize]) -> bool {
        let g = &self.g;
        match self.kind {
            ChordalKind::Edge => self.edges_chordal(cand),
            ChordalKind::Induced => perfect_elimination_order(g, &mask(g.n(), cand)).is_some(),
            ChordalKind::InducedConnected => {
                let m = mask(g.n(), cand);
                is_connected(g, &m) && perfect_elimination_order(g, &m).is_some()
            }
        }
    }

    /// Greedy for all three variants. The edge variant rescans until a full
    /// pass adds nothing, since a rejected edge may fit later.
    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        let g = &self.g;
        let fits = |cur: &[usize], v: usize| {
            let mut m = mask(g.n(), cur);
            m[v] = true;
            perfect_elimination_order(g, &m).is_some()
        };
        match self.kind {
            ChordalKind::Induced => extend_ascending(g.n(), partial, fits),
            ChordalKind::InducedConnected => extend_connected(g.n(), partial, |v| g.neighbors(v).to_vec(), fits),
            ChordalKind::Edge => {
                let mut cur = partial.to_vec();
                loop {
                    let before = cur.len();
                    cur = extend_ascending(g.m(), &cur, |cur, f| {
                        let mut cand = cur.to_vec();
                        cand.push(f);
                        self.edges_chordal(&cand)
                    });
                    if cur.len() == before {
                        return cur;
                    }
                }
            }
        }
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_at(s, v))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    /// At most `deg(v)` cliques per extender, `max(1, ·)` each; per endpoint
    /// for the edge variant.
    fn neighbors_comp_bound(&self) -> u64 {
        let g = &self.g;
        let per_vertex = |v: usize| g.degree(v).max(1) as u64;
        if self.kind == ChordalKind::Edge {
            g.edges().iter().map(|&(a, b)| per_vertex(a) + per_vertex(b)).sum()
        } else {
            (0..g.n()).map(per_vertex).sum()
        }
    }

    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
        let g = &self.g;
        Some(if self.kind == ChordalKind::Edge {
            let h = edge_subgraph(g, s);
            let vertices = Self::vertex_order(&h, &vec![true; g.n()]);
            edges_by_later_endpoint(g, s, &vertices)
        } else {
            Self::vertex_order(g, &mask(g.n(), s))
        })
    }
}
