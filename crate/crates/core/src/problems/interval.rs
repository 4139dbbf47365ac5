//! Maximal induced proper interval subgraphs, connected or not.
//!
//! Layouts are umbrella orderings: whenever `x_i x_j` is an edge with
//! `i < j`, every vertex strictly between them is adjacent to both. A
//! connected proper interval graph has exactly one such ordering up to
//! reversal and reordering of twins.

use std::collections::HashSet;

use crate::engine::{neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::Result;
use crate::graph::Graph;
use crate::orders::{component_of, components, is_connected};

use super::{extend_ascending, extend_connected, from_mask, mask, require_undirected};

/// Lexicographic BFS over `members`. With `prev`, ties go to the vertex
/// appearing last in `prev` (the "+" rule); otherwise to the smallest id.
fn lex_bfs(g: &Graph, members: &[usize], prev: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![0usize; n];
    if let Some(prev) = prev {
        for (i, &v) in prev.iter().enumerate() {
            rank[v] = i;
        }
    }
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(members.len());
    for step in 0..members.len() {
        let pick = members
            .iter()
            .copied()
            .filter(|&v| !done[v])
            .max_by(|&a, &b| {
                labels[a].cmp(&labels[b]).then_with(|| match prev {
                    Some(_) => rank[a].cmp(&rank[b]),
                    None => b.cmp(&a),
                })
            })
            .expect("members left");
        done[pick] = true;
        order.push(pick);
        for &w in g.neighbors(pick) {
            if !done[w] {
                labels[w].push(members.len() - step);
            }
        }
    }
    order
}

pub fn is_umbrella(g: &Graph, order: &[usize]) -> bool {
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j])
                && !order[i + 1..j]
                    .iter()
                    .all(|&l| g.has_edge(l, order[i]) && g.has_edge(l, order[j]))
            {
                return false;
            }
        }
    }
    true
}

/// Closed-neighborhood twins within `members` made consecutive, each run
/// sorted by id, runs kept in order of first appearance.
fn group_twins(g: &Graph, order: &[usize]) -> Vec<usize> {
    let inside = mask(g.n(), order);
    let closed = |v: usize| {
        let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| inside[w]).collect();
        c.push(v);
        c.sort_unstable();
        c
    };
    let keys: Vec<Vec<usize>> = order.iter().map(|&v| closed(v)).collect();
    let mut placed = vec![false; order.len()];
    let mut out = Vec::with_capacity(order.len());
    for i in 0..order.len() {
        if placed[i] {
            continue;
        }
        let mut run: Vec<usize> = (i..order.len()).filter(|&j| !placed[j] && keys[j] == keys[i]).collect();
        for &j in &run {
            placed[j] = true;
        }
        run.iter_mut().for_each(|j| *j = order[*j]);
        run.sort_unstable();
        out.extend(run);
    }
    out
}

/// Canonical layout of a connected vertex set: an umbrella ordering with
/// twin runs sorted by id, oriented so the first vertex is the smaller of
/// the two ends. `None` when `G[comp]` is not a proper interval graph.
pub fn canonical_layout(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    let s1 = lex_bfs(g, comp, None);
    let s2 = lex_bfs(g, comp, Some(&s1));
    let s3 = lex_bfs(g, comp, Some(&s2));
    if !is_umbrella(g, &s3) {
        return None;
    }
    let fwd = group_twins(g, &s3);
    let rev = group_twins(g, &s3.iter().rev().copied().collect::<Vec<_>>());
    debug_assert!(is_umbrella(g, &fwd) && is_umbrella(g, &rev));
    Some(if fwd[0] <= rev[0] { fwd } else { rev })
}

#[derive(Debug)]
pub struct ProperInterval {
    g: Graph,
    connected: bool,
    comps: CompCounter,
}

impl ProperInterval {
    pub fn induced(g: Graph) -> Result<Self> {
        Self::new(g, false)
    }

    pub fn induced_connected(g: Graph) -> Result<Self> {
        Self::new(g, true)
    }

    fn new(g: Graph, connected: bool) -> Result<Self> {
        require_undirected(&g, "proper interval subgraphs")?;
        Ok(ProperInterval {
            g,
            connected,
            comps: CompCounter::default(),
        })
    }

    fn is_pig(&self, members: &[bool]) -> bool {
        components(&self.g, members)
            .iter()
            .all(|c| canonical_layout(&self.g, c).is_some())
    }

    /// Layouts of the components of `S`, both orientations each.
    pub fn layouts(&self, s: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for c in components(&self.g, &mask(self.g.n(), s)) {
            let l = canonical_layout(&self.g, &c).expect("layout of a non-solution");
            if l.len() > 1 {
                out.push(l.iter().rev().copied().collect());
            }
            out.push(l);
        }
        out
    }

    /// Inserts `v` at the right end of a window of one layout. For a segment
    /// `layout[lo..=hi]` and thresholds `q <= r`, keeps the neighbors of `v`
    /// at positions `>= q` and the non-neighbors at positions `< r`, so that
    /// neighbors and non-neighbors may interleave only inside `[q, r)`.
    /// Non-solutions are discarded. The non-connected variant adds back
    /// every vertex of `S` with no neighbor in the result.
    fn reconstruct_at(&self, s: &[usize], v: usize, layouts: &[Vec<usize>]) -> Vec<Solution> {
        let g = &self.g;
        let n = g.n();
        let adj_v = |u: usize| g.has_edge(u, v);
        let finish = |y: Vec<bool>| -> Solution {
            if self.connected {
                component_of(g, &y, v)
            } else {
                let mut out = y.clone();
                for &u in s {
                    if !y[u] && !g.neighbors(u).iter().any(|&w| y[w]) {
                        out[u] = true;
                    }
                }
                from_mask(&out)
            }
        };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out = Vec::new();
        let mut push = |cand: Solution| {
            if seen.insert(cand.clone()) {
                out.push(cand);
            }
        };
        let mut lone = vec![false; n];
        lone[v] = true;
        push(finish(lone));
        for layout in layouts {
            let k = layout.len();
            for lo in 0..k {
                for hi in lo..k {
                    let seg = &layout[lo..=hi];
                    for q in 0..=seg.len() {
                        for r in q..=seg.len() {
                            let mut y = vec![false; n];
                            y[v] = true;
                            for (i, &u) in seg.iter().enumerate() {
                                y[u] = if adj_v(u) { i >= q } else { i < r };
                            }
                            if !y[seg[0]] || !y[seg[seg.len() - 1]] {
                                continue;
                            }
                            if self.is_pig(&y) {
                                push(finish(y.clone()));
                            }
                            // Inside the window the first kept neighbor `a` must end up
                            // after the last kept non-neighbor `b`, so they have to be
                            // twins: drop whatever tells them apart.
                            if q + 1 < r && adj_v(seg[q]) && !adj_v(seg[r - 1]) {
                                let (a, b) = (seg[q], seg[r - 1]);
                                for u in 0..n {
                                    if y[u] && u != v && u != a && u != b && g.has_edge(u, a) != g.has_edge(u, b) {
                                        y[u] = false;
                                    }
                                }
                                if self.is_pig(&y) {
                                    push(finish(y));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl Problem for ProperInterval {
    fn name(&self) -> &'static str {
        if self.connected {
            "pinterval-induced-connected"
        } else {
            "pinterval-induced"
        }
    }

    fn element_kind(&self) -> ElementKind {
        ElementKind::Vertex
    }

    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn is_solution(&self, cand: &[usize]) -> bool {
        let m = mask(self.g.n(), cand);
        self.is_pig(&m) && (!self.connected || is_connected(&self.g, &m))
    }

    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        let g = &self.g;
        let fits = |cur: &[usize], v: usize| {
            let mut m = mask(g.n(), cur);
            m[v] = true;
            self.is_pig(&m)
        };
        if self.connected {
            extend_connected(g.n(), partial, |v| g.neighbors(v).to_vec(), fits)
        } else {
            extend_ascending(g.n(), partial, fits)
        }
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        let layouts = self.layouts(s);
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_at(s, v, &layouts))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    /// One lone start plus, per orientation, segment and threshold pair, at
    /// most two candidates.
    fn neighbors_comp_bound(&self) -> u64 {
        let n = self.g.n() as u64;
        let windows = |k: u64| (1..=k).map(|len| (k - len + 1) * (len + 1) * (len + 2) / 2).sum::<u64>();
        n * (1 + 4 * windows(n))
    }

    /// Components by smallest id, each in its canonical layout.
    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
        let g = &self.g;
        Some(
            components(g, &mask(g.n(), s))
                .iter()
                .flat_map(|c| canonical_layout(g, c).expect("canonical order of a non-solution"))
                .collect(),
        )
    }
}
