//! Maximal bipartite subgraphs: induced, connected induced, and
//! edge-induced.
//!
//! A solution's bipartition puts the smallest vertex of every component on
//! side 0. For the edge variant the bipartition is taken over the graph
//! formed by all vertices and the solution's edges.

use crate::engine::{neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::Result;
use crate::graph::Graph;
use crate::orders::{bfs_canonical_order, component_of};
use crate::pspace::{bfs_order_key, OrderKey, PspaceProblem};
use crate::unionfind::DisjointSets;

use super::{
    componentwise_bfs, edge_subgraph, edges_by_later_endpoint, extend_ascending, extend_connected, mask,
    require_undirected,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteKind {
    Induced,
    InducedConnected,
    Edge,
}

#[derive(Debug)]
pub struct Bipartite {
    g: Graph,
    kind: BipartiteKind,
    comps: CompCounter,
}

/// Vertex-side incremental two-coloring over a growing vertex set.
struct ParityGrowth<'a> {
    g: &'a Graph,
    ds: DisjointSets,
    inside: Vec<bool>,
}

impl<'a> ParityGrowth<'a> {
    fn new(g: &'a Graph, start: &[usize]) -> Self {
        let mut p = ParityGrowth {
            g,
            ds: DisjointSets::new(g.n()),
            inside: mask(g.n(), start),
        };
        for &u in start {
            for &w in g.neighbors(u) {
                if u < w && p.inside[w] {
                    p.ds.union_with_parity(u, w, true);
                }
            }
        }
        p
    }

    /// Adds `v` if every neighbor inside agrees on the side `v` must take.
    fn try_add(&mut self, v: usize) -> bool {
        let mut required: Vec<(usize, bool)> = Vec::new();
        for &u in self.g.neighbors(v) {
            if !self.inside[u] {
                continue;
            }
            let (root, parity) = self.ds.find_with_parity(u);
            let side = !parity;
            match required.iter().find(|(r, _)| *r == root) {
                Some(&(_, s)) if s != side => return false,
                Some(_) => {}
                None => required.push((root, side)),
            }
        }
        for &u in self.g.neighbors(v) {
            if self.inside[u] {
                self.ds.union_with_parity(v, u, true);
            }
        }
        self.inside[v] = true;
        true
    }
}

/// True when the edges form a bipartite graph on `n` vertices.
fn edges_bipartite(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> bool {
    let mut ds = DisjointSets::new(n);
    for (a, b) in edges {
        if ds.union_with_parity(a, b, true).is_none() {
            let (_, pa) = ds.find_with_parity(a);
            let (_, pb) = ds.find_with_parity(b);
            if pa == pb {
                return false;
            }
        }
    }
    true
}

/// BFS two-coloring of the graph restricted to `members`; the smallest
/// vertex of each component gets side 0 (`false`).
fn two_coloring(g: &Graph, members: &[bool]) -> Option<Vec<Option<bool>>> {
    let mut side = vec![None; g.n()];
    for start in 0..g.n() {
        if !members[start] || side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                if !members[w] {
                    continue;
                }
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side)
}

impl Bipartite {
    pub fn new(g: Graph, kind: BipartiteKind) -> Result<Self> {
        require_undirected(&g, "bipartite subgraphs")?;
        Ok(Bipartite {
            g,
            kind,
            comps: CompCounter::default(),
        })
    }

    pub fn induced(g: Graph) -> Result<Self> {
        Self::new(g, BipartiteKind::Induced)
    }

    pub fn induced_connected(g: Graph) -> Result<Self> {
        Self::new(g, BipartiteKind::InducedConnected)
    }

    pub fn edge(g: Graph) -> Result<Self> {
        Self::new(g, BipartiteKind::Edge)
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn kind(&self) -> BipartiteKind {
        self.kind
    }

    /// `(B0, B1)` of a solution, as sorted vertex lists.
    pub fn bipartition(&self, s: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let (host, members) = match self.kind {
            BipartiteKind::Edge => (edge_subgraph(&self.g, s), vec![true; self.g.n()]),
            _ => (self.g.clone(), mask(self.g.n(), s)),
        };
        let side = two_coloring(&host, &members).expect("not a bipartite solution");
        let mut parts = (Vec::new(), Vec::new());
        for (v, sd) in side.into_iter().enumerate() {
            match sd {
                Some(false) => parts.0.push(v),
                Some(true) => parts.1.push(v),
                None => {}
            }
        }
        parts
    }

    /// The partial solutions tried for extender `v`: side 0 first.
    fn reconstruct_with(&self, s: &[usize], parts: &(Vec<usize>, Vec<usize>), v: usize) -> Vec<Solution> {
        let g = &self.g;
        if self.kind == BipartiteKind::Edge {
            let (a, b) = g.edge(v);
            return [a, b]
                .iter()
                .map(|&x| {
                    let mut out: Vec<usize> = s
                        .iter()
                        .copied()
                        .filter(|e| g.incident_edges(x).binary_search(e).is_err())
                        .collect();
                    out.push(v);
                    out.sort_unstable();
                    out
                })
                .collect();
        }
        let sides = [(&parts.0, &parts.1), (&parts.1, &parts.0)];
        sides
            .iter()
            .map(|(mine, other)| {
                let mut m = vec![false; g.n()];
                m[v] = true;
                for &u in mine.iter() {
                    if !g.has_edge(u, v) {
                        m[u] = true;
                    }
                }
                for &u in other.iter() {
                    m[u] = true;
                }
                match self.kind {
                    BipartiteKind::InducedConnected => component_of(g, &m, v),
                    _ => super::from_mask(&m),
                }
            })
            .collect()
    }
}

impl Problem for Bipartite {
    fn name(&self) -> &'static str {
        match self.kind {
            BipartiteKind::Induced => "bipartite-induced",
            BipartiteKind::InducedConnected => "bipartite-induced-connected",
            BipartiteKind::Edge => "bipartite-edge",
        }
    }

    fn element_kind(&self) -> ElementKind {
        match self.kind {
            BipartiteKind::Edge => ElementKind::Edge,
            _ => ElementKind::Vertex,
        }
    }

    fn ground_size(&self) -> usize {
        match self.kind {
            BipartiteKind::Edge => self.g.m(),
            _ => self.g.n(),
        }
    }

    fn is_solution(&self, cand: &[usize]) -> bool {
        let g = &self.g;
        match self.kind {
            BipartiteKind::Edge => edges_bipartite(g.n(), cand.iter().map(|&e| g.edge(e))),
            kind => {
                let m = mask(g.n(), cand);
                let inner = cand
                    .iter()
                    .flat_map(|&u| g.neighbors(u).iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
                    .filter(|&(_, w)| m[w]);
                edges_bipartite(g.n(), inner)
                    && (kind == BipartiteKind::Induced || crate::orders::is_connected(g, &m))
            }
        }
    }

    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        let g = &self.g;
        match self.kind {
            BipartiteKind::Induced => {
                let mut grow = ParityGrowth::new(g, partial);
                extend_ascending(g.n(), partial, |_, v| grow.try_add(v))
            }
            BipartiteKind::InducedConnected => {
                let mut grow = ParityGrowth::new(g, partial);
                extend_connected(g.n(), partial, |v| g.neighbors(v).to_vec(), |_, v| grow.try_add(v))
            }
            BipartiteKind::Edge => {
                let mut ds = DisjointSets::new(g.n());
                for &e in partial {
                    let (a, b) = g.edge(e);
                    ds.union_with_parity(a, b, true);
                }
                extend_ascending(g.m(), partial, |_, e| {
                    let (a, b) = g.edge(e);
                    if ds.union_with_parity(a, b, true).is_some() {
                        return true;
                    }
                    ds.find_with_parity(a).1 != ds.find_with_parity(b).1
                })
            }
        }
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        let parts = match self.kind {
            BipartiteKind::Edge => (Vec::new(), Vec::new()),
            _ => self.bipartition(s),
        };
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_with(s, &parts, v))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    fn neighbors_comp_bound(&self) -> u64 {
        2 * Problem::ground_size(self) as u64
    }

    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
        let g = &self.g;
        Some(match self.kind {
            BipartiteKind::InducedConnected => {
                let set = crate::graph::VertexSet::new(g.n(), s.iter().copied());
                match s.first() {
                    Some(&root) => bfs_canonical_order(g, &set, root),
                    None => Vec::new(),
                }
            }
            BipartiteKind::Induced => componentwise_bfs(g, &mask(g.n(), s)),
            BipartiteKind::Edge => {
                let h = edge_subgraph(g, s);
                let vertices = componentwise_bfs(&h, &vec![true; g.n()]);
                edges_by_later_endpoint(g, s, &vertices)
            }
        })
    }

    fn as_pspace(&self) -> Option<&dyn PspaceProblem> {
        match self.kind {
            BipartiteKind::Edge => None,
            _ => Some(self),
        }
    }
}

impl PspaceProblem for Bipartite {
    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn is_singleton(&self, _e: usize) -> bool {
        true
    }

    fn is_solution(&self, x: &[usize]) -> bool {
        Problem::is_solution(self, x)
    }

    fn order_key(&self, x: &[usize], v: usize, e: usize) -> OrderKey {
        bfs_order_key(&self.g, x, v, e, self.kind == BipartiteKind::InducedConnected)
    }

    fn reconstruct(&self, s: &[usize], w: usize) -> Vec<Solution> {
        let parts = self.bipartition(s);
        self.reconstruct_with(s, &parts, w)
    }

    fn count_comp(&self) {
        self.comps.tick();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::collect_exp;

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
    fn solution_examples() {
        let tri = Bipartite::induced(complete(3)).unwrap();
        assert!(!Problem::is_solution(&tri, &[0, 1, 2]));
        let c4 = Bipartite::induced(cycle(4)).unwrap();
        assert!(Problem::is_solution(&c4, &[0, 1, 2, 3]));
        let c5 = Bipartite::induced_connected(cycle(5)).unwrap();
        assert!(Problem::is_solution(&c5, &[0, 1, 2, 3]));
        assert!(!Problem::is_solution(&c5, &[0, 2]));
    }

    #[test]
    fn comp_examples() {
        let c5 = Bipartite::induced_connected(cycle(5)).unwrap();
        assert_eq!(c5.comp(&[0]), vec![0, 1, 2, 3]);
        assert_eq!(c5.comp(&[0, 1, 2, 3]), vec![0, 1, 2, 3]);
        let k4 = Bipartite::induced(complete(4)).unwrap();
        assert_eq!(k4.comp(&[]), vec![0, 1]);
        assert_eq!(k4.comp_calls(), 1);
    }

    #[test]
    fn c5_connected_neighbors() {
        let c5 = Bipartite::induced_connected(cycle(5)).unwrap();
        assert_eq!(c5.bipartition(&[0, 1, 2, 3]), (vec![0, 2], vec![1, 3]));
        let parts = c5.bipartition(&[0, 1, 2, 3]);
        let got: Vec<Solution> = c5
            .reconstruct_with(&[0, 1, 2, 3], &parts, 4)
            .into_iter()
            .map(|x| c5.comp(&x))
            .collect();
        assert_eq!(got, vec![vec![1, 2, 3, 4], vec![0, 1, 2, 4]]);
    }

    /// Graph arranged so that S = {2,3,5,7,8,10,11} has sides {2,8,11} and
    /// {3,5,7,10}, and vertex 12 sees {8,11} on side 0 and {5,7,10} on
    /// side 1.
    fn worked_example() -> Graph {
        let mut e = vec![
            (2, 3),
            (2, 5),
            (3, 8),
            (5, 11),
            (8, 7),
            (11, 10),
            (8, 12),
            (12, 11),
            (12, 5),
            (12, 7),
            (12, 10),
            (9, 8),
            (9, 10),
            (9, 3),
        ];
        for x in [0, 1, 4, 6] {
            e.push((x, 2));
            e.push((x, 3));
        }
        Graph::undirected(13, &e)
    }

    #[test]
    fn removables_split_by_side() {
        let p = Bipartite::induced_connected(worked_example()).unwrap();
        let s = vec![2, 3, 5, 7, 8, 10, 11];
        assert!(p.is_maximal_solution(&s));
        let parts = p.bipartition(&s);
        assert_eq!(parts, (vec![2, 8, 11], vec![3, 5, 7, 10]));
        let partial = p.reconstruct_with(&s, &parts, 12);
        // v on side 0 drops {8, 11}; on side 1 drops {5, 7, 10}.
        assert_eq!(partial, vec![vec![2, 3, 5, 7, 10, 12], vec![2, 3, 8, 11, 12]]);
        assert_eq!(p.comp(&partial[0]), vec![2, 3, 5, 7, 9, 10, 12]);
    }

    #[test]
    fn canonical_orders_and_proximity() {
        let p = Bipartite::induced_connected(worked_example()).unwrap();
        let s = vec![2, 3, 5, 7, 8, 10, 11];
        let t = vec![2, 3, 8, 11, 12];
        assert_eq!(p.canonical_order(&s).unwrap(), vec![2, 3, 5, 8, 11, 7, 10]);
        assert_eq!(p.canonical_order(&t).unwrap(), vec![2, 3, 8, 12, 11]);
        assert_eq!(p.proximity(&s, &t), 3);
        assert_eq!(p.proximity(&t, &s), 2);
    }

    #[test]
    fn edge_variant_on_k4() {
        let p = Bipartite::edge(complete(4)).unwrap();
        let (sols, _) = collect_exp(&p);
        assert_eq!(sols.len(), 7);
        for s in &sols {
            // every maximal solution is a complete cut spanning all vertices
            let (b0, b1) = p.bipartition(s);
            assert_eq!(s.len(), b0.len() * b1.len());
            assert_eq!(b0.len() + b1.len(), 4);
        }
    }

    #[test]
    fn edge_order_uses_later_endpoint() {
        // Path 0-1-2 plus chord-free pendant 1-3: all edges bipartite.
        let g = Graph::undirected(4, &[(1, 2), (0, 1), (1, 3)]);
        let p = Bipartite::edge(g).unwrap();
        // vertex order 0,1,2,3; edges (0,1)=1, (1,2)=0, (1,3)=2
        assert_eq!(p.canonical_order(&[0, 1, 2]).unwrap(), vec![1, 0, 2]);
    }

    #[test]
    fn two_component_order_starts_at_vertex_zero() {
        let g = Graph::undirected(4, &[(2, 3), (0, 1)]);
        let p = Bipartite::induced(g).unwrap();
        assert_eq!(p.canonical_order(&[0, 1, 2, 3]).unwrap(), vec![0, 1, 2, 3]);
    }
}
