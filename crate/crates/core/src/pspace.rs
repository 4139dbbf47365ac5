//! Polynomial-space traversal: a parent-child forest over the maximal
//! solutions of a commutable set system, walked depth-first without any
//! record of visited solutions.
//!
//! Orders are exposed per element through [`OrderKey`]; `Π(X, v)` sorts
//! `X ∪ X⁺` by these keys.

use std::ops::ControlFlow;

use crate::engine::{insert_sorted, Counters, Emitter, Solution};
use crate::error::Result;
use crate::graph::Graph;
use crate::orders::bfs_distances;

/// Position of an element in a canonical-BFS order. Compared
/// lexicographically: component leader (`None` when the leader is the
/// seed, which sorts first), distance from the leader, element id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderKey {
    pub leader: Option<usize>,
    pub distance: usize,
    pub id: usize,
}

/// A commutable set system with a prefix-closed order family and a
/// canonical-reconstruction neighbor function based on it.
pub trait PspaceProblem {
    fn ground_size(&self) -> usize;

    /// Whether `{e}` is a solution.
    fn is_singleton(&self, e: usize) -> bool;

    fn is_solution(&self, x: &[usize]) -> bool;

    /// `X⁺`: elements `e ∉ X` with `X ∪ {e}` a solution, ascending.
    fn extension_set(&self, x: &[usize]) -> Vec<usize> {
        (0..self.ground_size())
            .filter(|e| x.binary_search(e).is_err() && self.is_solution(&insert_sorted(x, *e)))
            .collect()
    }

    /// Key of `e ∈ X ∪ X⁺` in `Π(X, v)`.
    fn order_key(&self, x: &[usize], v: usize, e: usize) -> OrderKey;

    /// Partial solutions `S \ X_i ∪ {w}` for the removables of `S` and `w`,
    /// in the fixed emission order.
    fn reconstruct(&self, s: &[usize], w: usize) -> Vec<Solution>;

    /// Called once per lexicographic completion (instrumentation).
    fn count_comp(&self) {}
}

/// Smallest-id element of `s` that is a singleton solution.
pub fn seed<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> usize {
    *s.iter()
        .find(|&&e| p.is_singleton(e))
        .expect("solution has no singleton element")
}

/// Lexicographic completion: repeatedly adds the `Π(X, seed(X))`-minimal
/// element of `X⁺` until `X⁺` is empty.
pub fn comp_lex<P: PspaceProblem + ?Sized>(p: &P, x: &[usize]) -> Solution {
    p.count_comp();
    let mut cur = x.to_vec();
    loop {
        let ext = p.extension_set(&cur);
        if ext.is_empty() {
            return cur;
        }
        let v = seed(p, &cur);
        let best = ext
            .into_iter()
            .min_by_key(|&e| p.order_key(&cur, v, e))
            .unwrap();
        cur = insert_sorted(&cur, best);
    }
}

/// `s` sorted by `Π(s, seed(s))`.
pub fn solution_order<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> Vec<usize> {
    let v = seed(p, s);
    let mut order = s.to_vec();
    order.sort_by_key(|&e| p.order_key(s, v, e));
    order
}

/// Position of a non-root maximal solution in the forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentLink {
    /// Longest prefix of the solution order whose completion differs from S.
    pub core: Vec<usize>,
    /// Element following the core in the solution order.
    pub pi: usize,
    /// Completion of the core.
    pub parent: Solution,
}

/// `None` for roots (`comp_lex({seed(S)}) == S`).
pub fn parent_link<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> Option<ParentLink> {
    let order = solution_order(p, s);
    if comp_lex(p, &order[..1]) == s {
        return None;
    }
    for i in (1..order.len()).rev() {
        let mut core = order[..i].to_vec();
        core.sort_unstable();
        let completed = comp_lex(p, &core);
        if completed != s {
            return Some(ParentLink {
                core,
                pi: order[i],
                parent: completed,
            });
        }
    }
    unreachable!("non-root solution without a core")
}

pub fn core<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> Option<Vec<usize>> {
    parent_link(p, s).map(|l| l.core)
}

pub fn pi<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> Option<usize> {
    parent_link(p, s).map(|l| l.pi)
}

pub fn parent<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> Option<Solution> {
    parent_link(p, s).map(|l| l.parent)
}

/// `NEIGHBORS(S, w)` completed lexicographically, first occurrences only.
pub fn neighbors_at<P: PspaceProblem + ?Sized>(p: &P, s: &[usize], w: usize) -> Vec<Solution> {
    let mut out: Vec<Solution> = Vec::new();
    for partial in p.reconstruct(s, w) {
        let r = comp_lex(p, &partial);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `{x ∈ R : x ⪯ w}` under `Π(R, s)`, sorted by id.
pub fn prefix_through<P: PspaceProblem + ?Sized>(p: &P, r: &[usize], s: usize, w: usize) -> Vec<usize> {
    let limit = p.order_key(r, s, w);
    r.iter()
        .copied()
        .filter(|&x| p.order_key(r, s, x) <= limit)
        .collect()
}

/// Index in `neighbors_at(parent(S), pi(S))` of the first `R` that
/// regenerates `S`. Panics for roots or if no `R` qualifies.
pub fn restr_index<P: PspaceProblem + ?Sized>(p: &P, s: &[usize], link: &ParentLink, rs: &[Solution]) -> usize {
    let sd = seed(p, s);
    rs.iter()
        .position(|r| {
            r.binary_search(&sd).is_ok()
                && r.binary_search(&link.pi).is_ok()
                && comp_lex(p, &prefix_through(p, r, sd, link.pi)) == s
        })
        .expect("no neighbor regenerates the solution")
}

/// The `R` selected by [`restr_index`].
pub fn restr<P: PspaceProblem + ?Sized>(p: &P, s: &[usize]) -> Solution {
    let link = parent_link(p, s).expect("restr of a root");
    let rs = neighbors_at(p, &link.parent, link.pi);
    let i = restr_index(p, s, &link, &rs);
    rs[i].clone()
}

/// Instrumentation for [`children`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChildStats {
    pub neighbors_calls: u64,
    pub candidates: u64,
    pub tuple_check_passes: u64,
}

/// All maximal `S` with `parent(S) = parent` and `pi(S) = w`, each once.
pub fn children<P: PspaceProblem + ?Sized>(
    p: &P,
    parent_sol: &[usize],
    w: usize,
    stats: &mut ChildStats,
) -> Vec<Solution> {
    debug_assert!(parent_sol.binary_search(&w).is_err());
    stats.neighbors_calls += 1;
    let rs = neighbors_at(p, parent_sol, w);
    let mut out = Vec::new();
    for (ri, r) in rs.iter().enumerate() {
        for &s in r.iter().filter(|&&s| s != w && p.is_singleton(s)) {
            stats.candidates += 1;
            let prefix = prefix_through(p, r, s, w);
            let cand = comp_lex(p, &prefix);
            let Some(link) = parent_link(p, &cand) else {
                continue;
            };
            if link.parent != parent_sol || link.pi != w || seed(p, &cand) != s {
                continue;
            }
            // restr(S) is computed against the same neighbor list.
            if restr_index(p, &cand, &link, &rs) == ri {
                stats.tuple_check_passes += 1;
                out.push(cand);
            }
        }
    }
    out
}

/// Roots of the forest: `comp_lex({u})` for singleton `u`, kept when `u` is
/// its seed.
pub fn roots<P: PspaceProblem + ?Sized>(p: &P) -> Vec<Solution> {
    (0..p.ground_size())
        .filter(|&u| p.is_singleton(u))
        .filter_map(|u| {
            let r = comp_lex(p, &[u]);
            (seed(p, &r) == u).then_some(r)
        })
        .collect()
}

struct Frame {
    solution: Solution,
    next_w: usize,
    pending: std::vec::IntoIter<Solution>,
    depth: usize,
}

/// Statistics of a poly-space run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PspaceStats {
    pub counters: Counters,
    pub children: ChildStats,
    pub roots: u64,
    pub max_depth: usize,
}

/// Lists every maximal solution once by walking the parent-child forest.
/// Holds one frame per tree level and never stores visited solutions.
pub fn enumerate_pspace<P, F, E>(p: &P, comp_calls: &dyn Fn() -> u64, sink: F) -> Result<PspaceStats>
where
    P: PspaceProblem + ?Sized,
    F: FnMut(&[usize]) -> std::result::Result<ControlFlow<()>, E>,
    E: Into<Box<dyn std::error::Error + Send + Sync>>,
{
    let mut out = Emitter::new(sink, comp_calls);
    let mut stats = PspaceStats::default();
    let n = p.ground_size();

    for u in 0..n {
        if !p.is_singleton(u) {
            continue;
        }
        let root = comp_lex(p, &[u]);
        if seed(p, &root) != u {
            continue;
        }
        stats.roots += 1;
        if out.emit(&root)?.is_break() {
            return Ok(finish(out, stats));
        }
        let mut stack = vec![Frame {
            solution: root,
            next_w: 0,
            pending: Vec::new().into_iter(),
            depth: 0,
        }];
        while let Some(top) = stack.last_mut() {
            if let Some(child) = top.pending.next() {
                let depth = top.depth + 1;
                stats.max_depth = stats.max_depth.max(depth);
                if depth % 2 == 0 && out.emit(&child)?.is_break() {
                    return Ok(finish(out, stats));
                }
                stack.push(Frame {
                    solution: child,
                    next_w: 0,
                    pending: Vec::new().into_iter(),
                    depth,
                });
                continue;
            }
            if let Some(w) = (top.next_w..n).find(|w| top.solution.binary_search(w).is_err()) {
                top.next_w = w + 1;
                out.counters.neighbors_calls += 1;
                top.pending = children(p, &top.solution, w, &mut stats.children).into_iter();
                continue;
            }
            let done = stack.pop().unwrap();
            if done.depth % 2 == 1 && out.emit(&done.solution)?.is_break() {
                return Ok(finish(out, stats));
            }
        }
    }
    Ok(finish(out, stats))
}

fn finish<F, E>(mut out: Emitter<'_, F>, mut stats: PspaceStats) -> PspaceStats
where
    F: FnMut(&[usize]) -> std::result::Result<ControlFlow<()>, E>,
    E: Into<Box<dyn std::error::Error + Send + Sync>>,
{
    out.sync();
    stats.counters = out.counters;
    stats
}

/// Canonical-BFS key of `e` in `Π(X, v)` over `G[X ∪ {e}]`.
///
/// With `connected`, the order is the BFS order from `v`; otherwise
/// components are led by `v` (or their smallest vertex) and concatenated
/// with the seed's component first, then by leader id.
pub fn bfs_order_key(g: &Graph, x: &[usize], v: usize, e: usize, connected: bool) -> OrderKey {
    let mut members = vec![false; g.n()];
    for &u in x {
        members[u] = true;
    }
    members[e] = true;
    let from_seed = bfs_distances(g, &members, v);
    if let Some(d) = from_seed[e] {
        return OrderKey {
            leader: None,
            distance: d,
            id: e,
        };
    }
    assert!(!connected, "element {e} is not connected to the seed {v}");
    let comp = crate::orders::component_of(g, &members, e);
    let leader = comp[0];
    let d = bfs_distances(g, &members, leader)[e].unwrap();
    OrderKey {
        leader: Some(leader),
        distance: d,
        id: e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::bipartite::Bipartite;
    use crate::problems::trees::Trees;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::undirected(n, &e)
    }

    fn all(p: &dyn PspaceProblem) -> (Vec<Solution>, PspaceStats) {
        let mut got = Vec::new();
        let st = enumerate_pspace(p, &|| 0, |s: &[usize]| {
            got.push(s.to_vec());
            Ok::<_, std::convert::Infallible>(ControlFlow::Continue(()))
        })
        .unwrap();
        got.sort();
        (got, st)
    }

    #[test]
    fn seed_is_smallest_singleton() {
        let p = Bipartite::induced(cycle(10)).unwrap();
        assert_eq!(seed(&p, &[3, 5, 9]), 3);
    }

    #[test]
    fn lexicographic_completion() {
        let c5 = Bipartite::induced_connected(cycle(5)).unwrap();
        // 4 is one step from the seed and goes before 2
        assert_eq!(comp_lex(&c5, &[0]), vec![0, 1, 2, 4]);
        assert_eq!(comp_lex(&c5, &[0, 1, 2, 3]), vec![0, 1, 2, 3]);
        let p3 = Trees::forests(Graph::undirected(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(comp_lex(&p3, &[2]), vec![0, 1, 2]);
    }

    #[test]
    fn solution_orders() {
        let c4 = Bipartite::induced_connected(cycle(4)).unwrap();
        assert_eq!(solution_order(&c4, &[0, 1, 2, 3]), vec![0, 1, 3, 2]);
        let two = Trees::forests(Graph::undirected(2, &[])).unwrap();
        assert_eq!(solution_order(&two, &[0, 1]), vec![0, 1]);
    }

    #[test]
    fn core_and_parent_on_c5() {
        let c5 = Bipartite::induced_connected(cycle(5)).unwrap();
        assert!(parent_link(&c5, &[0, 1, 2, 4]).is_none());
        let s = vec![1, 2, 3, 4];
        let link = parent_link(&c5, &s).unwrap();
        let mut regrow = link.core.clone();
        regrow.push(link.pi);
        regrow.sort_unstable();
        assert_eq!(comp_lex(&c5, &regrow), s);
        assert_ne!(link.parent, s);
        assert_eq!(restr(&c5, &s).len(), 4);
    }

    #[test]
    fn single_solution_has_no_children() {
        let k22 = Bipartite::induced(cycle(4)).unwrap();
        let (got, st) = all(&k22);
        assert_eq!(got, vec![vec![0, 1, 2, 3]]);
        assert_eq!((st.roots, st.children.tuple_check_passes), (1, 0));
    }

    #[test]
    fn whole_forest_on_empty_graph() {
        let p = Trees::forests(Graph::undirected(3, &[])).unwrap();
        assert_eq!(all(&p).0, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn c5_children_cover_every_non_root() {
        let c5 = Bipartite::induced_connected(cycle(5)).unwrap();
        let (got, st) = all(&c5);
        assert_eq!(got.len(), 5);
        assert_eq!(st.children.tuple_check_passes + st.roots, 5);
        assert!(!st.counters.dict_allocated);
    }

    #[test]
    fn triangle_without_dictionary() {
        let t = Bipartite::induced(cycle(3)).unwrap();
        let (got, st) = all(&t);
        assert_eq!(got, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(st.counters.dict_operations, 0);
    }
}
