//! Seeded random instances for every variant.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use proxsearch::engine::Problem;
use proxsearch::graph::Graph;
use proxsearch::problems::geometry::Hulls;
use proxsearch::registry::{self, InputKind, VARIANTS};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn variant_seed(variant: &str) -> u64 {
    VARIANTS.iter().position(|v| *v == variant).unwrap() as u64 * 1_000_003
}

fn is_edge_variant(variant: &str) -> bool {
    variant.ends_with("-edge") || variant == "dag-edge-connected"
}

pub fn max_edges(variant: &str) -> usize {
    match variant {
        "chordal-edge" | "kdeg-edge" => 12,
        _ => 14,
    }
}

pub fn random_graph(r: &mut ChaCha8Rng, n: usize, density: f64, directed: bool, max_m: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(density) {
                pairs.push(if directed && r.gen_bool(0.5) { (v, u) } else { (u, v) });
            }
            if directed && r.gen_bool(density * 0.15) {
                pairs.push((v, u));
            }
        }
    }
    pairs.shuffle(r);
    pairs.truncate(max_m);
    if directed {
        Graph::directed(n, &pairs)
    } else {
        Graph::undirected(n, &pairs)
    }
}

pub fn random_hulls(r: &mut ChaCha8Rng, connected: bool) -> Hulls {
    let j = r.gen_range(1..=7);
    let h = r.gen_range(0..=3);
    let mut pts: Vec<(i64, i64)> = Vec::new();
    while pts.len() < j + h {
        let p = (r.gen_range(-4..=4), r.gen_range(-4..=4));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let obstacles = pts.split_off(j);
    let g = random_graph(r, j, 0.5, false, usize::MAX);
    Hulls::new(pts, obstacles, Some(g), connected).unwrap()
}

/// One random instance of `variant` with a short description.
pub fn random_instance(variant: &str, r: &mut ChaCha8Rng) -> (Box<dyn Problem>, String) {
    let kind = registry::input_kind(variant).unwrap();
    if kind == InputKind::Points {
        let p = random_hulls(r, variant == "hull-connected");
        let desc = format!("points {:?} obstacles {:?}", p.points(), p.obstacles());
        return (Box::new(p), desc);
    }
    let directed = kind == InputKind::DirectedGraph;
    let density = r.gen_range(0.25..0.75);
    let g = if is_edge_variant(variant) {
        let n = r.gen_range(3..=7);
        random_graph(r, n, density, directed, max_edges(variant))
    } else {
        let n = r.gen_range(4..=8);
        random_graph(r, n, density, directed, usize::MAX)
    };
    let k = match variant {
        "kdeg-induced" => Some(r.gen_range(0..=2)),
        "kdeg-edge" => Some(r.gen_range(1..=2)),
        _ => None,
    };
    let desc = format!("n={} edges={:?} k={k:?}", g.n(), g.edges());
    (registry::from_graph(variant, g, k).unwrap(), desc)
}
