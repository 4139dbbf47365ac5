//! Maximal k-degenerate subgraphs, induced by vertices or by edges.

use crate::engine::{neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orders::{components, degeneracy_order};

use super::{binomial, edge_subgraph, edges_by_later_endpoint, extend_ascending, mask, require_undirected, small_subsets};

#[derive(Debug)]
pub struct Degenerate {
    g: Graph,
    k: usize,
    edge: bool,
    comps: CompCounter,
}

impl Degenerate {
    pub fn induced(g: Graph, k: usize) -> Result<Self> {
        Self::new(g, k, false)
    }

    /// Requires `k >= 1`; with `k = 0` the only solution is the empty set.
    pub fn edge(g: Graph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Instance("kdeg-edge needs k >= 1".into()));
        }
        Self::new(g, k, true)
    }

    fn new(g: Graph, k: usize, edge: bool) -> Result<Self> {
        require_undirected(&g, "k-degenerate subgraphs")?;
        Ok(Degenerate {
            g,
            k,
            edge,
            comps: CompCounter::default(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn degeneracy_of(&self, cand: &[usize]) -> usize {
        if self.edge {
            let h = edge_subgraph(&self.g, cand);
            degeneracy_order(&h, &vec![true; h.n()]).1
        } else {
            degeneracy_order(&self.g, &mask(self.g.n(), cand)).1
        }
    }

    fn reconstruct_at(&self, s: &[usize], v: usize) -> Vec<Solution> {
        let g = &self.g;
        if self.edge {
            let (a, b) = g.edge(v);
            let mut out = Vec::new();
            for x in [a, b] {
                let at_x: Vec<usize> = g
                    .incident_edges(x)
                    .iter()
                    .copied()
                    .filter(|e| s.binary_search(e).is_ok())
                    .collect();
                let rest: Vec<usize> = s.iter().copied().filter(|e| at_x.binary_search(e).is_err()).collect();
                for keep in small_subsets(&at_x, self.k - 1) {
                    let mut cand = rest.clone();
                    cand.extend(keep);
                    cand.push(v);
                    cand.sort_unstable();
                    out.push(cand);
                }
            }
            return out;
        }
        let nbrs: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|u| s.binary_search(u).is_ok())
            .collect();
        small_subsets(&nbrs, self.k)
            .into_iter()
            .map(|keep| {
                let mut cand: Vec<usize> = s
                    .iter()
                    .copied()
                    .filter(|u| nbrs.binary_search(u).is_err() || keep.contains(u))
                    .collect();
                cand.push(v);
                cand.sort_unstable();
                cand
            })
            .collect()
    }

    /// Per component in smallest-id order, the reverse of the component's
    /// degeneracy order; every vertex then has at most `k` earlier
    /// neighbors.
    fn vertex_order(h: &Graph, members: &[bool]) -> Vec<usize> {
        let mut out = Vec::new();
        for comp in components(h, members) {
            let (mut order, _) = degeneracy_order(h, &mask(h.n(), &comp));
            order.reverse();
            out.extend(order);
        }
        out
    }
}

impl Problem for Degenerate {
    fn name(&self) -> &'static str {
        if self.edge {
            "kdeg-edge"
        } else {
            "kdeg-induced"
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
        self.degeneracy_of(cand) <= self.k
    }

    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        extend_ascending(self.ground_size(), partial, |cur, e| {
            let mut cand = cur.to_vec();
            cand.push(e);
            self.degeneracy_of(&cand) <= self.k
        })
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_at(s, v))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    /// One comp per extender and kept subset.
    fn neighbors_comp_bound(&self) -> u64 {
        let g = &self.g;
        let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as u64;
        let subsets = |r: u64| (0..=r).map(|i| binomial(max_deg, i)).sum::<u64>();
        if self.edge {
            g.m() as u64 * 2 * subsets(self.k as u64 - 1)
        } else {
            g.n() as u64 * subsets(self.k as u64)
        }
    }

    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
        let g = &self.g;
        Some(if self.edge {
            let h = edge_subgraph(g, s);
            let vertices = Self::vertex_order(&h, &vec![true; g.n()]);
            edges_by_later_endpoint(g, s, &vertices)
        } else {
            Self::vertex_order(g, &mask(g.n(), s))
        })
    }
}
