//! Structural fingerprint statistics of a decomposed graph.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::decomposition::{ComponentTree, CoreDecomposition};
use crate::graph::{Graph, VertexId};
use crate::layout::{Layout, LayoutConfig};

/// Pearson correlation of `ln(1 + degree)` with coreness. `None` when fewer
/// than two vertices exist or either variable is constant.
pub fn degree_coreness_correlation(g: &Graph, d: &CoreDecomposition) -> Option<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let degrees = g.degrees();
    let coreness = d.coreness_values();
    if degrees.iter().all(|&k| k == degrees[0]) || coreness.iter().all(|&c| c == coreness[0]) {
        return None;
    }
    let xs: Vec<f64> = degrees.iter().map(|&k| (k as f64).ln_1p()).collect();
    let ys: Vec<f64> = coreness.iter().map(|&c| c as f64).collect();
    let mean_x = xs.iter().sum::<f64>() / n as f64;
    let mean_y = ys.iter().sum::<f64>() / n as f64;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Vertices with degree above `degree_min` and coreness below
/// `coreness_max`, by descending degree (ties by id).
pub fn hub_anomalies(
    g: &Graph,
    d: &CoreDecomposition,
    degree_min: usize,
    coreness_max: u32,
) -> Vec<VertexId> {
    let mut hubs: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| g.neighbors(v).len() > degree_min && d.coreness(v) < coreness_max)
        .collect();
    hubs.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    hubs
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShellWidth {
    pub coreness: u32,
    pub min_rho: f64,
    pub max_rho: f64,
    pub width: f64,
}

/// Radial extent of each shell below the top one, over the vertices of the
/// largest connected component. Empty shells are skipped.
pub fn shell_width_stats(
    layout: &Layout,
    d: &CoreDecomposition,
    tree: &ComponentTree,
) -> Vec<ShellWidth> {
    let largest = tree.node(ComponentTree::ROOT).children.first().copied();
    let in_scope = |v: VertexId| match largest {
        Some(component) => tree.ancestor_at(layout.vertices[v].owner, 1) == Some(component),
        None => true,
    };
    let c_max = d.c_max();
    let mut extents: Vec<Option<(f64, f64)>> = vec![None; c_max as usize];
    for (v, placement) in layout.vertices.iter().enumerate() {
        let c = placement.coreness;
        if c == c_max || !in_scope(v) {
            continue;
        }
        let rho = placement.rho;
        let slot = &mut extents[c as usize];
        *slot = Some(match *slot {
            Some((lo, hi)) => (lo.min(rho), hi.max(rho)),
            None => (rho, rho),
        });
    }
    extents
        .into_iter()
        .enumerate()
        .filter_map(|(c, e)| {
            e.map(|(min_rho, max_rho)| ShellWidth {
                coreness: c as u32,
                min_rho,
                max_rho,
                width: max_rho - min_rho,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShellSummary {
    pub coreness: u32,
    pub size: usize,
    pub clusters: usize,
    pub max_cluster_fraction: f64,
    /// Radial width in the largest component; 0 for the top shell, which is
    /// placed in a disk rather than a ring.
    pub radial_width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelComponents {
    pub level: u32,
    pub components: usize,
    /// Component sizes, descending.
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HubThresholds {
    pub degree_min: usize,
    pub coreness_max: u32,
}

impl Default for HubThresholds {
    fn default() -> Self {
        HubThresholds {
            degree_min: 100,
            coreness_max: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fingerprint {
    pub vertices: usize,
    pub edges: usize,
    pub c_max: u32,
    /// Shell sizes indexed by coreness `0..=c_max`.
    pub shell_sizes: Vec<usize>,
    /// Nonempty shells only.
    pub shells: Vec<ShellSummary>,
    pub degree_coreness_correlation: Option<f64>,
    pub hub_thresholds: HubThresholds,
    pub hub_anomalies: Vec<VertexId>,
    /// Components of each k-core, k = 1..=c_max.
    pub components_per_level: Vec<LevelComponents>,
}

impl Fingerprint {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fingerprint serializes")
    }
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    fingerprint_with(g, &LayoutConfig::default(), HubThresholds::default())
}

pub fn fingerprint_with(g: &Graph, cfg: &LayoutConfig, hubs: HubThresholds) -> Fingerprint {
    let analysis = Analysis::new(g);
    let layout = analysis.layout(g, cfg);
    let d = &analysis.decomposition;

    let widths = shell_width_stats(&layout, d, &analysis.tree);
    let shell_sizes: Vec<usize> = if g.is_empty() {
        Vec::new()
    } else {
        d.shells().map(|(_, s)| s.len()).collect()
    };
    let shells = d
        .shells()
        .filter(|(_, s)| !s.is_empty())
        .map(|(c, s)| {
            let sizes = analysis.clusters.cluster_sizes(c);
            ShellSummary {
                coreness: c,
                size: s.len(),
                clusters: sizes.len(),
                max_cluster_fraction: *sizes.iter().max().unwrap_or(&0) as f64 / s.len() as f64,
                radial_width: widths
                    .iter()
                    .find(|w| w.coreness == c)
                    .map_or(0.0, |w| w.width),
            }
        })
        .collect();
    let components_per_level = (1..=d.c_max())
        .map(|k| {
            let mut sizes: Vec<usize> = analysis
                .tree
                .level(k)
                .map(|id| analysis.tree.node(id).size())
                .collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            LevelComponents {
                level: k,
                components: sizes.len(),
                sizes,
            }
        })
        .collect();

    Fingerprint {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        c_max: d.c_max(),
        shell_sizes,
        shells,
        degree_coreness_correlation: degree_coreness_correlation(g, d),
        hub_thresholds: hubs,
        hub_anomalies: hub_anomalies(g, d, hubs.degree_min, hubs.coreness_max),
        components_per_level,
    }
}
