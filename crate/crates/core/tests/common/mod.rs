//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's decomposition or generators.
#![allow(dead_code)]

use coreviz::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Vertices surviving repeated deletion of degree-<k vertices.
pub fn peel_to_k_core(g: &Graph, k: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if alive[v] {
                let degree = g.neighbors(v).iter().filter(|&&w| alive[w]).count();
                if degree < k {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            return alive;
        }
    }
}

/// Coreness by definition: the largest k whose k-core contains the vertex.
pub fn brute_force_coreness(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut coreness = vec![0u32; n];
    for k in 1..=n {
        let alive = peel_to_k_core(g, k);
        if !alive.iter().any(|&a| a) {
            break;
        }
        for v in 0..n {
            if alive[v] {
                coreness[v] = k as u32;
            }
        }
    }
    coreness
}

/// G(n, p) by flipping one coin per pair.
pub fn coin_flip_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Component label per vertex, restricted to vertices passing `keep` and
/// edges between such vertices. Labels are arbitrary but consistent.
pub fn flood_fill(g: &Graph, keep: impl Fn(usize, usize) -> bool) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut label = vec![None; n];
    let mut next = 0;
    for s in 0..n {
        if label[s].is_some() {
            continue;
        }
        label[s] = Some(next);
        let mut frontier = vec![s];
        while let Some(v) = frontier.pop() {
            for &w in g.neighbors(v) {
                if label[w].is_none() && keep(v, w) {
                    label[w] = Some(next);
                    frontier.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let offset = a.vertex_count();
    let edges = a
        .edges()
        .chain(b.edges().map(|(x, y)| (x + offset, y + offset)));
    Graph::from_edges(offset + b.vertex_count(), edges.collect::<Vec<_>>())
}

/// Two K5s (0..5 and 5..10) joined by the path 4 - 10 - 11 - 5.
pub fn barbell() -> Graph {
    let two = disjoint_union(&complete(5), &complete(5));
    let mut edges: Vec<_> = two.edges().collect();
    edges.extend([(4, 10), (10, 11), (11, 5)]);
    Graph::from_edges(12, edges)
}

/// Center joined to `arms` sub-hubs, each with `leaves` leaves.
pub fn star_of_stars(arms: usize, leaves: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = arms + 1;
    for hub in 1..=arms {
        edges.push((0, hub));
        for _ in 0..leaves {
            edges.push((hub, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// Graphs every layout invariant is checked on.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    let two_k5 = disjoint_union(&complete(5), &complete(5));
    let triangles = disjoint_union(&complete(3), &complete(3));
    let mut with_isolate: Vec<_> = triangles.edges().collect();
    with_isolate.push((0, 0));
    let er = coreviz::generators::erdos_renyi(1000, 10.0, 1)
        .unwrap()
        .largest_connected_component()
        .0;
    // K4 and K5 tied together by a path: fragments below the top level.
    let mut lopsided: Vec<_> = complete(4).edges().collect();
    lopsided.extend(complete(5).edges().map(|(a, b)| (a + 4, b + 4)));
    lopsided.extend([(0, 9), (9, 4)]);
    vec![
        ("k5", complete(5)),
        ("two_k5", two_k5),
        ("barbell", barbell()),
        ("triangles_and_isolate", Graph::from_edges(7, with_isolate)),
        ("lopsided_barbell", Graph::from_edges(10, lopsided)),
        (
            "ba_500_2",
            coreviz::generators::barabasi_albert(500, 2, 1).unwrap(),
        ),
        ("er_1000_10_lcc", er),
        (
            "er_sparse",
            coreviz::generators::erdos_renyi(400, 1.5, 4).unwrap(),
        ),
        ("star_of_stars", star_of_stars(5, 150)),
        ("coin_flip_30", coin_flip_graph(30, 0.25, 8)),
    ]
}
