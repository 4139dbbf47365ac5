//! Maximal obstacle-free convex hulls, optionally requiring the chosen
//! points to induce a connected subgraph of a graph on the points.
//!
//! Coordinates are integers with absolute value at most [`MAX_COORD`]; all
//! predicates are exact.

use crate::engine::{insert_sorted, neighbors_by_reconstruction, CompCounter, ElementKind, Problem, Solution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orders::{component_of, components, is_connected};

use super::{extend_ascending, extend_connected, mask};

pub const MAX_COORD: i64 = 1_000_000;

pub type Point = (i64, i64);

/// Twice the signed area of `a, b, c`; positive for a left turn.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    (b.0 as i128 - ax) * (c.1 as i128 - ay) - (b.1 as i128 - ay) * (c.0 as i128 - ax)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Convex hull vertices in counter-clockwise order, collinear points
/// dropped. Fewer than three points come back deduplicated and sorted.
pub fn convex_hull(pts: &[Point]) -> Vec<Point> {
    let mut p = pts.to_vec();
    p.sort_unstable();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2 && orient(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        // all collinear: the two extremes
        return vec![p[0], p[p.len() - 1]];
    }
    hull
}

/// Whether `x` lies in the closed convex hull of `pts`.
pub fn hull_contains(pts: &[Point], x: Point) -> bool {
    let h = convex_hull(pts);
    match h.len() {
        0 => false,
        1 => h[0] == x,
        2 => on_segment(h[0], h[1], x),
        _ => (0..h.len()).all(|i| orient(h[i], h[(i + 1) % h.len()], x) >= 0),
    }
}

#[derive(Debug)]
pub struct Hulls {
    points: Vec<Point>,
    obstacles: Vec<Point>,
    graph: Graph,
    connected: bool,
    comps: CompCounter,
}

impl Hulls {
    /// `graph` is on the interest points; it only matters for the connected
    /// variant.
    pub fn new(points: Vec<Point>, obstacles: Vec<Point>, graph: Option<Graph>, connected: bool) -> Result<Self> {
        let mut all: Vec<Point> = points.iter().chain(&obstacles).copied().collect();
        if let Some(&(x, y)) = all.iter().find(|p| p.0.abs() > MAX_COORD || p.1.abs() > MAX_COORD) {
            return Err(Error::Instance(format!("coordinate ({x}, {y}) exceeds {MAX_COORD} in absolute value")));
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Instance(format!("duplicate point ({}, {})", w[0].0, w[0].1)));
        }
        let graph = graph.unwrap_or_else(|| Graph::undirected(points.len(), &[]));
        if graph.n() != points.len() || graph.is_directed() {
            return Err(Error::Instance("the point graph must be undirected on the interest points".into()));
        }
        Ok(Hulls {
            points,
            obstacles,
            graph,
            connected,
            comps: CompCounter::default(),
        })
    }

    /// Points format: header `j h [connected]`, then `j` interest points and
    /// `h` obstacles as `x y` lines, then any number of `u v` edge lines
    /// between interest points. `#` comments and blank lines are skipped.
    pub fn parse(text: &str, connected: bool) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let bad_header = || Error::Parse {
            line: hline,
            msg: format!("expected \"j h [connected]\", got {header:?}"),
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (j, h) = match fields.as_slice() {
            [j, h] | [j, h, "connected"] => (
                j.parse::<usize>().map_err(|_| bad_header())?,
                h.parse::<usize>().map_err(|_| bad_header())?,
            ),
            _ => return Err(bad_header()),
        };
        let mut pts = Vec::with_capacity(j + h);
        let mut edges = Vec::new();
        for (line, l) in lines {
            let f: Vec<&str> = l.split_whitespace().collect();
            if pts.len() < j + h {
                let parsed = match f.as_slice() {
                    [x, y] => x.parse::<i64>().ok().zip(y.parse::<i64>().ok()),
                    _ => None,
                };
                pts.push(parsed.ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("expected integer point \"x y\", got {l:?}"),
                })?);
                continue;
            }
            let parsed = match f.as_slice() {
                [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                _ => None,
            };
            let (u, v) = parsed.ok_or_else(|| Error::Parse {
                line,
                msg: format!("expected edge \"u v\", got {l:?}"),
            })?;
            if u >= j || v >= j || u == v {
                return Err(Error::Parse {
                    line,
                    msg: format!("edge {u} {v} must join two distinct interest points below {j}"),
                });
            }
            edges.push((u, v));
        }
        if pts.len() != j + h {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {} point lines, found {}", j + h, pts.len()),
            });
        }
        let obstacles = pts.split_off(j);
        Self::new(pts, obstacles, Some(Graph::undirected(j, &edges)), connected)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn obstacles(&self) -> &[Point] {
        &self.obstacles
    }

    fn coords(&self, ids: &[usize]) -> Vec<Point> {
        ids.iter().map(|&i| self.points[i]).collect()
    }

    fn obstacle_free(&self, ids: &[usize]) -> bool {
        let pts = self.coords(ids);
        !self.obstacles.iter().any(|&x| hull_contains(&pts, x))
    }

    /// Splits `s` into the pieces that `v` can see past every obstacle.
    /// Obstacles are taken in input order; each one inside the hull of a
    /// piece plus `v` cuts that piece along the line through `v` and the
    /// obstacle, and points on the line are dropped.
    pub fn shadows(&self, s: &[usize], v: usize) -> Vec<Vec<usize>> {
        let pv = self.points[v];
        let mut pieces = vec![s.to_vec()];
        for &x in &self.obstacles {
            let mut next = Vec::with_capacity(pieces.len() + 1);
            for piece in pieces {
                let mut pts = self.coords(&piece);
                pts.push(pv);
                if !hull_contains(&pts, x) {
                    next.push(piece);
                    continue;
                }
                let side = |u: &usize| orient(pv, x, self.points[*u]);
                next.push(piece.iter().copied().filter(|u| side(u) > 0).collect());
                next.push(piece.iter().copied().filter(|u| side(u) < 0).collect());
            }
            pieces = next;
        }
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(pieces.len());
        for p in pieces {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    fn reconstruct_at(&self, s: &[usize], v: usize) -> Vec<Solution> {
        self.shadows(s, v)
            .into_iter()
            .map(|piece| {
                let cand = insert_sorted(&piece, v);
                if self.connected {
                    component_of(&self.graph, &mask(self.points.len(), &cand), v)
                } else {
                    cand
                }
            })
            .collect()
    }
}

impl Problem for Hulls {
    fn name(&self) -> &'static str {
        if self.connected {
            "hull-connected"
        } else {
            "hull"
        }
    }

    fn element_kind(&self) -> ElementKind {
        ElementKind::Vertex
    }

    fn ground_size(&self) -> usize {
        self.points.len()
    }

    fn is_solution(&self, cand: &[usize]) -> bool {
        self.obstacle_free(cand) && (!self.connected || is_connected(&self.graph, &mask(self.points.len(), cand)))
    }

    fn comp(&self, partial: &[usize]) -> Solution {
        self.comps.tick();
        let fits = |cur: &[usize], v: usize| self.obstacle_free(&insert_sorted(cur, v));
        if self.connected {
            extend_connected(self.points.len(), partial, |v| self.graph.neighbors(v).to_vec(), fits)
        } else {
            extend_ascending(self.points.len(), partial, fits)
        }
    }

    fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
        neighbors_by_reconstruction(self, s, |v| self.reconstruct_at(s, v))
    }

    fn comp_calls(&self) -> u64 {
        self.comps.get()
    }

    /// Each obstacle cuts at most one piece, so at most `h + 1` shadows.
    fn neighbors_comp_bound(&self) -> u64 {
        (self.points.len() * (self.obstacles.len() + 1)) as u64
    }

    fn canonical_order(&self, _s: &[usize]) -> Option<Vec<usize>> {
        None
    }

    /// Intersection size, or for the connected variant the size of the
    /// largest component of the intersection.
    fn proximity(&self, s: &[usize], target: &[usize]) -> usize {
        let common: Vec<usize> = s.iter().copied().filter(|e| target.binary_search(e).is_ok()).collect();
        if !self.connected {
            return common.len();
        }
        components(&self.graph, &mask(self.points.len(), &common))
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::collect_exp;

    fn plain(points: &[Point], obstacles: &[Point]) -> Hulls {
        Hulls::new(points.to_vec(), obstacles.to_vec(), None, false).unwrap()
    }

    #[test]
    fn containment_is_closed() {
        assert!(hull_contains(&[(0, 0), (2, 0)], (1, 0)));
        assert!(!hull_contains(&[(0, 0), (2, 0)], (3, 0)));
        assert!(hull_contains(&[(0, 0), (4, 0), (0, 4)], (2, 2)));
        assert!(hull_contains(&[(0, 0), (4, 0), (0, 4)], (1, 1)));
        assert!(!hull_contains(&[(0, 0), (4, 0), (0, 4)], (3, 3)));
        assert!(hull_contains(&[(0, 0), (1, 0), (2, 0), (3, 0)], (0, 0)));
        assert!(!hull_contains(&[], (0, 0)));
    }

    #[test]
    fn solution_examples() {
        let seg = plain(&[(0, 0), (2, 0)], &[(1, 0)]);
        assert!(Problem::is_solution(&seg, &[0]));
        assert!(!Problem::is_solution(&seg, &[0, 1]));
        let tri = plain(&[(0, 0), (6, 0), (0, 6)], &[(2, 2)]);
        assert!(!Problem::is_solution(&tri, &[0, 1, 2]));
        for pair in [[0, 1], [0, 2], [1, 2]] {
            assert!(Problem::is_solution(&tri, &pair));
        }
    }

    #[test]
    fn shadow_examples() {
        let tri = plain(&[(0, 0), (6, 0), (0, 6)], &[(2, 2)]);
        assert_eq!(tri.shadows(&[0, 1], 2), vec![vec![1], vec![0]]);
        let free = plain(&[(0, 0), (6, 0), (0, 6)], &[(9, 9)]);
        assert_eq!(free.shadows(&[0, 1], 2), vec![vec![0, 1]]);
        // (0, 0) is on the line through v = (4, 0) and the obstacle (2, 0)
        let line = plain(&[(0, 0), (5, 5), (4, 0)], &[(2, 0)]);
        let sh = line.shadows(&[0, 1], 2);
        assert!(sh.iter().all(|p| !p.contains(&0)));
    }

    #[test]
    fn enumeration_examples() {
        let tri = plain(&[(0, 0), (6, 0), (0, 6)], &[(2, 2)]);
        assert_eq!(collect_exp(&tri).0, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let square = plain(&[(0, 0), (2, 0), (2, 2), (0, 2)], &[(1, 1)]);
        assert_eq!(collect_exp(&square).0, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        let free = plain(&[(0, 0), (2, 0), (2, 2)], &[]);
        assert_eq!(collect_exp(&free).0, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn connected_variant_and_parsing() {
        let text = "4 1 connected\n0 0\n2 0\n2 2\n0 2\n1 1\n0 1\n1 2\n2 3\n";
        let p = Hulls::parse(text, true).unwrap();
        assert_eq!(collect_exp(&p).0, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(p.proximity(&[0, 1, 3], &[0, 1, 2, 3]), 2);
        assert!(Hulls::parse("2 1\n0 0\n1 1\n0 0\n", false).is_err());
        assert!(Hulls::parse("1 0\n0 x\n", false).is_err());
    }
}
