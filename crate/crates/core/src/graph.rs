//! Immutable adjacency-list graphs and the edge-list text loader.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Simple graph with dense vertex ids `0..n` and stable edge ids `0..m`.
///
/// Directed graphs keep out- and in-neighbor lists; `neighbors` always
/// answers for the underlying undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    adj: Vec<Vec<usize>>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    edge_ids: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds an undirected graph. Duplicate edges are dropped, keeping the
    /// first occurrence's id.
    ///
    /// Panics on self-loops or out-of-range endpoints; use [`Graph::parse`]
    /// for untrusted input.
    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::build(n, false, edges)
    }

    /// Builds a directed graph; `(u, v)` is the arc `u -> v`.
    pub fn directed(n: usize, arcs: &[(usize, usize)]) -> Self {
        Self::build(n, true, arcs)
    }

    fn build(n: usize, directed: bool, input: &[(usize, usize)]) -> Self {
        let mut edges = Vec::with_capacity(input.len());
        let mut edge_ids = HashMap::new();
        for &(u, v) in input {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            assert!(u != v, "self-loop on vertex {u}");
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if edge_ids.contains_key(&key) {
                continue;
            }
            edge_ids.insert(key, edges.len());
            edges.push(key);
        }
        let mut adj = vec![Vec::new(); n];
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            out_adj[u].push(v);
            in_adj[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
        }
        for list in adj
            .iter_mut()
            .chain(out_adj.iter_mut())
            .chain(in_adj.iter_mut())
            .chain(incident.iter_mut())
        {
            list.sort_unstable();
            list.dedup();
        }
        if !directed {
            out_adj = adj.clone();
            in_adj = adj.clone();
        }
        Graph {
            n,
            directed,
            adj,
            out_adj,
            in_adj,
            edges,
            incident,
            edge_ids,
        }
    }

    /// Parses the edge-list format: a header `n m [directed]` followed by
    /// `m` lines `u v`. Lines starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (n, m, directed) = match fields.as_slice() {
            [n, m] => (parse_num(n, hline)?, parse_num(m, hline)?, false),
            [n, m, "directed"] => (parse_num(n, hline)?, parse_num(m, hline)?, true),
            _ => {
                return Err(Error::Parse {
                    line: hline,
                    msg: format!("expected \"n m [directed]\", got {header:?}"),
                })
            }
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than {m} edge lines"),
                });
            }
            edges.push(parse_edge(l, line, n)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {m} edge lines, found {}", edges.len()),
            });
        }
        Ok(Self::build(n, directed, &edges))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Neighbors in the underlying undirected graph, sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True when the arc `u -> v` exists (for undirected graphs, the edge).
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Endpoints of edge `id`; for undirected graphs the smaller id comes first.
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        self.edge_ids.get(&key).copied()
    }

    /// Ids of the edges incident to `v`, sorted.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// Vertices with no incident edge.
    pub fn isolated(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }
}

fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a non-negative integer: {s:?}"),
    })
}

fn parse_edge(l: &str, line: usize, n: usize) -> Result<(usize, usize)> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    let [u, v] = fields.as_slice() else {
        return Err(Error::Parse {
            line,
            msg: format!("expected \"u v\", got {l:?}"),
        });
    };
    let (u, v) = (parse_num(u, line)?, parse_num(v, line)?);
    if u >= n || v >= n {
        return Err(Error::Parse {
            line,
            msg: format!("vertex id out of range (n = {n})"),
        });
    }
    if u == v {
        return Err(Error::Parse {
            line,
            msg: format!("self-loop on vertex {u}"),
        });
    }
    Ok((u, v))
}

/// Sorted vertex (or edge) id sequence with a membership bitmap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    items: Vec<usize>,
    mask: Vec<bool>,
}

/// Edge sets share the representation; ids index `Graph::edges`.
pub type EdgeSet = VertexSet;

impl VertexSet {
    pub fn new(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![false; universe];
        for id in ids {
            mask[id] = true;
        }
        Self::from_mask(mask)
    }

    pub fn full(universe: usize) -> Self {
        Self::from_mask(vec![true; universe])
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let items = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        VertexSet { items, mask }
    }

    pub fn contains(&self, id: usize) -> bool {
        self.mask.get(id).copied().unwrap_or(false)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.items
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.items
    }
}
