//! Maximal induced trees and induced forests.

use crate::engine::{neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::orders::{bfs_canonical_order, component_of, is_connected};
use crate::pspace::{bfs_order_key, OrderKey, PspaceProblem};
use crate::unionfind::DisjointSets;

use super::{componentwise_bfs, extend_ascending, extend_connected, from_mask, mask, require_undirected};

#[derive(Debug)]
pub struct Trees {
    g: Graph,
    connected: bool,
    comps: CompCounter,
}

impl Trees {
    /// Maximal induced trees.
    pub fn trees(g: Graph) -> Result<Self> {
        Self::new(g, true)
    }

    /// Maximal induced forests.
    pub fn forests(g: Graph) -> Result<Self> {
        Self::new(g, false)
    }

    fn new(g: Graph, connected: bool) -> Result<Self> {
        require_undirected(&g, "induced trees and forests")?;
        Ok(Trees {
            g,
            connected,
            comps: CompCounter::default(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// `S \ N(v) ∪ {w, v}` for each neighbor `w` of `v` in `S`, ascending.
    /// For trees, a `v` with no neighbor in `S` lies in another component
    /// and restarts from `{v}`.
    fn reconstruct_at(&self, s: &[usize], v: usize) -> Vec<Solution> {
        if self.connected && !self.g.neighbors(v).iter().any(|w| s.binary_search(w).is_ok()) {
            return vec![vec![v]];
        }
        let g = &self.g;
        let base: Vec<bool> = {
            let mut m = mask(g.n(), s);
            for &u in g.neighbors(v) {
                m[u] = false;
            }
            m[v] = true;
            m
        };
        g.neighbors(v)
            .iter()
            .filter(|&&w| s.binary_search(&w).is_ok())
            .map(|&w| {
                let mut m = base.clone();
                m[w] = true;
                if self.connected {
                    component_of(g, &m, v)
                } else {
                    from_mask(&m)
                }
            })
            .collect()
    }
}

/// Adds `v` to an acyclic vertex set when its inside neighbors all lie in
/// distinct components.
fn forest_try_add(g: &Graph, ds: &mut DisjointSets, inside: &mut [bool], v: usize) -> bool {
    let mut roots = Vec::new();
    for &u in g.neighbors(v) {
        if inside[u] {
            let r = ds.find(u);
            if roots.contains(&r) {
                return false;
            }
            roots.push(r);
        }
    }
    for &u in g.neighbors(v) {
        if inside[u] {
            ds.union(u, v);
        }
    }
    inside[v] = true;
    true
}

impl Problem for Trees {
    fn name(&self) -> &'static str {
        if self.connected {
            "trees"
        } else {
            "forests"
        }
    }

    fn element_kind(&self) -> ElementKind {
        ElementKind::Vertex
    }

    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn is_solution(&self, cand: &[usize]) -> bool {
        let g = &self.g;
        let m = mask(g.n(), cand);
        let mut ds = DisjointSets::new(g.n());
        for &u in cand {
            for &w in g.neighbors(u) {
                if u < w && m[w] && !ds.union(u, w) {
                    return false;
                }
            }
        }
        !self.connected || is_connected(g, &m)
    }

    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        let g = &self.g;
        let mut inside = mask(g.n(), partial);
        let mut ds = DisjointSets::new(g.n());
        for &u in partial {
            for &w in g.neighbors(u) {
                if inside[w] {
                    ds.union(u, w);
                }
            }
        }
        let fits = |_: &[usize], v: usize| forest_try_add(g, &mut ds, &mut inside, v);
        if self.connected {
            extend_connected(g.n(), partial, |v| g.neighbors(v).to_vec(), fits)
        } else {
            extend_ascending(g.n(), partial, fits)
        }
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_at(s, v))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    /// `max(1, |N(v) ∩ S|)` candidates per extender.
    fn neighbors_comp_bound(&self) -> u64 {
        (self.g.n() + 2 * self.g.m()) as u64
    }

    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
        let g = &self.g;
        Some(if self.connected {
            match s.first() {
                Some(&root) => bfs_canonical_order(g, &VertexSet::new(g.n(), s.iter().copied()), root),
                None => Vec::new(),
            }
        } else {
            componentwise_bfs(g, &mask(g.n(), s))
        })
    }

    fn as_pspace(&self) -> Option<&dyn PspaceProblem> {
        Some(self)
    }
}

impl PspaceProblem for Trees {
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
        bfs_order_key(&self.g, x, v, e, self.connected)
    }

    fn reconstruct(&self, s: &[usize], w: usize) -> Vec<Solution> {
        self.reconstruct_at(s, w)
    }

    fn count_comp(&self) {
        self.comps.tick();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::collect_exp;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::undirected(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::undirected(n, &e)
    }

    #[test]
    fn solution_examples() {
        let p3 = Trees::trees(Graph::undirected(3, &[(0, 1), (1, 2)])).unwrap();
        assert!(Problem::is_solution(&p3, &[0, 1, 2]));
        let tri = Trees::trees(complete(3)).unwrap();
        assert!(!Problem::is_solution(&tri, &[0, 1, 2]));
        let c4 = Trees::trees(cycle(4)).unwrap();
        assert!(Problem::is_solution(&c4, &[0, 1, 2]));
        assert!(!Problem::is_solution(&c4, &[0, 2]));
        let c4f = Trees::forests(cycle(4)).unwrap();
        assert!(Problem::is_solution(&c4f, &[0, 2]));
    }

    #[test]
    fn k4_neighbors_keep_one_neighbor() {
        let p = Trees::trees(complete(4)).unwrap();
        let got: Vec<Solution> = p.reconstruct_at(&[0, 1], 2).iter().map(|x| p.comp(x)).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn c4_tree_neighbors() {
        let p = Trees::trees(cycle(4)).unwrap();
        let got: Vec<Solution> = p.reconstruct_at(&[0, 1, 2], 3).iter().map(|x| p.comp(x)).collect();
        assert_eq!(got, vec![vec![0, 1, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn counts() {
        assert_eq!(collect_exp(&Trees::trees(complete(4)).unwrap()).0.len(), 6);
        assert_eq!(collect_exp(&Trees::forests(complete(4)).unwrap()).0.len(), 6);
        assert_eq!(collect_exp(&Trees::forests(cycle(4)).unwrap()).0.len(), 4);
        let star = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(collect_exp(&Trees::trees(star).unwrap()).0, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::undirected(3, &[(0, 1)]);
        let (trees, _) = collect_exp(&Trees::trees(g.clone()).unwrap());
        assert_eq!(trees, vec![vec![0, 1], vec![2]]);
        let (forests, _) = collect_exp(&Trees::forests(g).unwrap());
        assert_eq!(forests, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn tree_order_has_one_earlier_neighbor() {
        let p = Trees::trees(cycle(5)).unwrap();
        let order = p.canonical_order(&[0, 1, 3, 4]).unwrap();
        assert_eq!(order, vec![0, 1, 4, 3]);
        for (i, &v) in order.iter().enumerate().skip(1) {
            let earlier = order[..i].iter().filter(|&&u| p.g.has_edge(u, v)).count();
            assert_eq!(earlier, 1);
        }
    }
}
