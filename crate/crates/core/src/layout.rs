//! Concentric-shell layout.
//!
//! Every vertex gets polar coordinates relative to the center of the k-core
//! component that owns it: the radius grows with the distance between its
//! coreness and the maximum coreness, the angle falls inside the sector of its
//! shell cluster. Fragmented cores get their own centers and shrink with their
//! share of the parent's vertices.

use std::f64::consts::TAU;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::decomposition::{ClusterTable, ComponentTree, CoreDecomposition, Sector};
use crate::graph::{Graph, VertexId};
use crate::rng::{stream, Stream};

pub const DEFAULT_EPSILON: f64 = 0.18;
pub const DEFAULT_DELTA: f64 = 1.3;
pub const DEFAULT_GAMMA: f64 = 1.5;
pub const DEFAULT_EDGE_FRACTION: f64 = 0.1;
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("epsilon must lie in (0, 1), got {0}")]
    Epsilon(f64),
    #[error("delta must be positive, got {0}")]
    Delta(f64),
    #[error("gamma must be positive, got {0}")]
    Gamma(f64),
    #[error("edge fraction must lie in [0, 1], got {0}")]
    EdgeFraction(f64),
    #[error("vertex sizes must satisfy 0 <= min <= max, got {min}..{max}")]
    VertexSize { min: f64, max: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayoutConfig {
    /// Ring overlap control.
    pub epsilon: f64,
    /// Distance scale between sibling components.
    pub delta: f64,
    /// Diameter scale of a component.
    pub gamma: f64,
    /// Probability that an edge is kept for drawing.
    pub edge_fraction: f64,
    pub seed: u64,
    /// Drawn vertex radius for degree 0, in output units.
    pub size_min: f64,
    /// Drawn vertex radius for the maximum degree, in output units.
    pub size_max: f64,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            epsilon: DEFAULT_EPSILON,
            delta: DEFAULT_DELTA,
            gamma: DEFAULT_GAMMA,
            edge_fraction: DEFAULT_EDGE_FRACTION,
            seed: DEFAULT_SEED,
            size_min: 1.0,
            size_max: 6.0,
        }
    }
}

impl LayoutConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(ConfigError::Epsilon(self.epsilon));
        }
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(ConfigError::Delta(self.delta));
        }
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(ConfigError::Gamma(self.gamma));
        }
        if !(0.0..=1.0).contains(&self.edge_fraction) {
            return Err(ConfigError::EdgeFraction(self.edge_fraction));
        }
        if !(self.size_min >= 0.0 && self.size_min <= self.size_max && self.size_max.is_finite()) {
            return Err(ConfigError::VertexSize {
                min: self.size_min,
                max: self.size_max,
            });
        }
        Ok(())
    }
}

/// 24-bit sRGB color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    /// `#rrggbb`
    pub fn hex(self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }

    /// Full saturation and value at hue `degrees`.
    pub fn from_hue(degrees: f64) -> Rgb {
        let h = degrees.rem_euclid(360.0) / 60.0;
        let x = 1.0 - (h % 2.0 - 1.0).abs();
        let (r, g, b) = match h as u32 {
            0 => (1.0, x, 0.0),
            1 => (x, 1.0, 0.0),
            2 => (0.0, 1.0, x),
            3 => (0.0, x, 1.0),
            4 => (x, 0.0, 1.0),
            _ => (1.0, 0.0, x),
        };
        let byte = |c: f64| (c * 255.0).round() as u8;
        Rgb(byte(r), byte(g), byte(b))
    }
}

/// Hue of the lowest coreness on the rainbow scale.
pub const VIOLET_HUE: f64 = 270.0;

/// Rainbow color for coreness `c`: violet at `c_min`, red at `c_max`.
pub fn color_of(c: u32, c_min: u32, c_max: u32) -> Rgb {
    if c_max <= c_min {
        return Rgb::from_hue(0.0);
    }
    let t = (c.clamp(c_min, c_max) - c_min) as f64 / (c_max - c_min) as f64;
    Rgb::from_hue(VIOLET_HUE * (1.0 - t))
}

/// Drawn radius, logarithmic in the degree.
pub fn size_of(degree: usize, max_degree: usize, cfg: &LayoutConfig) -> f64 {
    if max_degree == 0 {
        return cfg.size_min;
    }
    let t = (degree as f64).ln_1p() / (max_degree as f64).ln_1p();
    cfg.size_min + (cfg.size_max - cfg.size_min) * t
}

/// Radius from a vertex's coreness and the coreness of its neighbors.
///
/// Only neighbors with coreness at least `coreness` take part in the average.
/// With none of them the average term is 0.
pub fn radius_from_neighbors(
    coreness: u32,
    c_max: u32,
    neighbor_coreness: impl IntoIterator<Item = u32>,
    epsilon: f64,
) -> f64 {
    let depth = (c_max - coreness) as f64;
    let (sum, count) = neighbor_coreness
        .into_iter()
        .filter(|&c| c >= coreness)
        .fold((0u64, 0u64), |(s, k), c| (s + (c_max - c) as u64, k + 1));
    let base = (1.0 - epsilon) * depth;
    if count == 0 {
        base
    } else {
        base + epsilon * sum as f64 / count as f64
    }
}

/// Radius of vertex `v` (with coreness below the maximum) in its component.
pub fn radial_coordinate(v: VertexId, g: &Graph, d: &CoreDecomposition, epsilon: f64) -> f64 {
    radius_from_neighbors(
        d.coreness(v),
        d.c_max(),
        g.neighbors(v).iter().map(|&w| d.coreness(w)),
        epsilon,
    )
}

/// Angle inside the cluster's sector, drawn from a normal centered on the
/// sector midpoint with standard deviation one sixth of the sector, clamped to
/// the sector.
pub fn angular_coordinate(sector: Sector, rng: &mut impl Rng) -> f64 {
    let f = sector.fraction;
    let normal = Normal::new(f / 2.0, f / 6.0).expect("fraction is positive and finite");
    let offset = normal.sample(rng).clamp(0.0, f);
    (TAU * (sector.cumulative + offset)).min(TAU.next_down())
}

/// Area-uniform point in the disk of radius `unit`, as `(rho, alpha)`.
pub fn disk_point(unit: f64, rng: &mut impl Rng) -> (f64, f64) {
    let r: f64 = rng.random();
    let alpha = rng.random_range(0.0..TAU);
    (unit * r.sqrt(), alpha)
}

/// Center of the `index`-th child (0-based) of a fragmenting component.
///
/// `sibling_sizes` lists all children of the parent in their numbering order.
#[allow(clippy::too_many_arguments)]
pub fn component_center(
    index: usize,
    sibling_sizes: &[usize],
    level: u32,
    c_max: u32,
    parent_center: (f64, f64),
    parent_unit: f64,
    phi_ini: f64,
    delta: f64,
) -> (f64, f64) {
    let total: usize = sibling_sizes.iter().sum();
    let up_to: usize = sibling_sizes[..=index].iter().sum();
    let varrho = 1.0 - sibling_sizes[index] as f64 / total as f64;
    let phi = phi_ini + TAU * up_to as f64 / total as f64;
    let distance = delta * (c_max - level) as f64 * parent_unit * varrho;
    (
        parent_center.0 + distance * phi.cos(),
        parent_center.1 + distance * phi.sin(),
    )
}

/// Unit length of the `index`-th child: its share of the siblings' vertices
/// times the parent's unit length.
pub fn component_unit(index: usize, sibling_sizes: &[usize], parent_unit: f64) -> f64 {
    let total: usize = sibling_sizes.iter().sum();
    sibling_sizes[index] as f64 / total as f64 * parent_unit
}

pub fn final_coordinates(
    center: (f64, f64),
    unit: f64,
    rho: f64,
    alpha: f64,
    gamma: f64,
) -> (f64, f64) {
    let r = gamma * unit * rho;
    (center.0 + r * alpha.cos(), center.1 + r * alpha.sin())
}

/// Keeps each edge independently with probability `fraction`.
pub fn sample_edges(g: &Graph, fraction: f64, rng: &mut impl Rng) -> Vec<(VertexId, VertexId)> {
    g.edges().filter(|_| rng.random_bool(fraction)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexPlacement {
    pub x: f64,
    pub y: f64,
    /// Polar radius relative to the owning component center.
    pub rho: f64,
    /// Polar angle relative to the owning component center, in `[0, 2π)`.
    pub alpha: f64,
    pub coreness: u32,
    pub degree: usize,
    #[serde(serialize_with = "serialize_rgb")]
    pub color: Rgb,
    /// Drawn radius in output units.
    pub size: f64,
    /// Component tree node the vertex is placed relative to.
    pub owner: usize,
}

fn serialize_rgb<S: serde::Serializer>(c: &Rgb, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.hex())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodePlacement {
    pub x: f64,
    pub y: f64,
    pub unit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Layout {
    pub vertices: Vec<VertexPlacement>,
    /// Indexed like the component tree's nodes.
    pub nodes: Vec<NodePlacement>,
    pub edges: Vec<(VertexId, VertexId)>,
    pub c_min: u32,
    pub c_max: u32,
    pub d_min: usize,
    pub d_max: usize,
}

impl Layout {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// One `id x y coreness degree color` line per vertex, coordinates with 6
    /// decimals. The id is the vertex label when `labels` is given.
    pub fn coordinate_dump(&self, labels: Option<&[String]>) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        for (id, v) in self.vertices.iter().enumerate() {
            match labels {
                Some(l) => out.push_str(&l[id]),
                None => write!(out, "{id}").expect("writing to String"),
            }
            writeln!(
                out,
                " {} {} {} {} {}",
                fixed(v.x, 6),
                fixed(v.y, 6),
                v.coreness,
                v.degree,
                v.color.hex()
            )
            .expect("writing to String");
        }
        out
    }
}

/// Fixed-decimal formatting without negative zero.
pub(crate) fn fixed(value: f64, decimals: usize) -> String {
    let s = format!("{value:.decimals$}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Places every vertex of `g`.
///
/// Component centers and unit lengths are fixed top-down over the tree first;
/// the per-vertex pass then runs in parallel with one random stream per vertex.
pub fn build_layout(
    g: &Graph,
    d: &CoreDecomposition,
    clusters: &ClusterTable,
    tree: &ComponentTree,
    cfg: &LayoutConfig,
) -> Layout {
    let n = g.vertex_count();
    let c_max = d.c_max();
    let c_min = d.c_min();
    let degrees = g.degrees();
    let d_max = degrees.iter().copied().max().unwrap_or(0);
    let d_min = degrees.iter().copied().min().unwrap_or(0);

    let mut nodes = vec![
        NodePlacement {
            x: 0.0,
            y: 0.0,
            unit: 1.0,
        };
        tree.len()
    ];
    for (id, node) in tree.nodes().iter().enumerate() {
        if node.children.is_empty() {
            continue;
        }
        let parent = nodes[id].clone();
        let sizes: Vec<usize> = node.children.iter().map(|&c| tree.node(c).size()).collect();
        let phi_ini = stream(cfg.seed, Stream::SiblingAngle, id as u64).random_range(0.0..TAU);
        for (index, &child) in node.children.iter().enumerate() {
            let (x, y) = component_center(
                index,
                &sizes,
                tree.node(child).level,
                c_max,
                (parent.x, parent.y),
                parent.unit,
                phi_ini,
                cfg.delta,
            );
            nodes[child] = NodePlacement {
                x,
                y,
                unit: component_unit(index, &sizes, parent.unit),
            };
        }
    }

    let vertices: Vec<VertexPlacement> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut rng = stream(cfg.seed, Stream::Vertex, v as u64);
            let owner = tree.owner(v);
            let placement = &nodes[owner];
            let coreness = d.coreness(v);
            let (rho, alpha) = if coreness == c_max {
                disk_point(placement.unit, &mut rng)
            } else {
                let rho = radial_coordinate(v, g, d, cfg.epsilon);
                (rho, angular_coordinate(clusters.sector_of(d, v), &mut rng))
            };
            let (x, y) = final_coordinates(
                (placement.x, placement.y),
                placement.unit,
                rho,
                alpha,
                cfg.gamma,
            );
            VertexPlacement {
                x,
                y,
                rho,
                alpha,
                coreness,
                degree: degrees[v],
                color: color_of(coreness, c_min, c_max),
                size: size_of(degrees[v], d_max, cfg),
                owner,
            }
        })
        .collect();

    let edges = sample_edges(
        g,
        cfg.edge_fraction,
        &mut stream(cfg.seed, Stream::EdgeSample, 0),
    );

    Layout {
        vertices,
        nodes,
        edges,
        c_min,
        c_max,
        d_min,
        d_max,
    }
}

/// Convenience for callers holding a bare random generator.
pub fn layout_rng(seed: u64) -> ChaCha8Rng {
    stream(seed, Stream::Vertex, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{component_tree, core_decomposition, shell_clusters};
    use std::f64::consts::PI;

    const EPS: f64 = 0.18;

    #[test]
    fn radius_when_neighbors_share_coreness() {
        let rho = radius_from_neighbors(3, 5, [3, 3, 3], EPS);
        assert!((rho - 2.0).abs() < 1e-12);
    }

    #[test]
    fn radius_when_neighbors_are_top_shell() {
        let rho = radius_from_neighbors(3, 5, [5, 5, 5], EPS);
        assert!((rho - 1.64).abs() < 1e-12);
    }

    #[test]
    fn radius_with_mixed_neighbors() {
        // Lower-coreness neighbors are ignored.
        let rho = radius_from_neighbors(3, 5, [3, 5, 1, 2], EPS);
        assert!((rho - 1.82).abs() < 1e-12);
    }

    #[test]
    fn radius_of_isolated_vertex() {
        let rho = radius_from_neighbors(0, 4, [], EPS);
        assert!((rho - 0.82 * 4.0).abs() < 1e-12);
    }

    #[test]
    fn full_shell_sector_is_whole_circle() {
        let sector = Sector {
            cumulative: 0.0,
            fraction: 1.0,
        };
        let mut rng = layout_rng(1);
        let samples: Vec<f64> = (0..4000)
            .map(|_| angular_coordinate(sector, &mut rng))
            .collect();
        assert!(samples.iter().all(|a| (0.0..TAU).contains(a)));
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        assert!((mean - PI).abs() < 0.05, "mean {mean}");
    }

    #[test]
    fn equal_clusters_stay_in_their_halves() {
        let mut rng = layout_rng(2);
        for _ in 0..1000 {
            let a = angular_coordinate(
                Sector {
                    cumulative: 0.0,
                    fraction: 0.5,
                },
                &mut rng,
            );
            assert!((0.0..=PI).contains(&a));
            let b = angular_coordinate(
                Sector {
                    cumulative: 0.5,
                    fraction: 0.5,
                },
                &mut rng,
            );
            assert!((PI..TAU).contains(&b));
        }
    }

    #[test]
    fn unequal_clusters_sectors() {
        let mut rng = layout_rng(3);
        for _ in 0..1000 {
            let a = angular_coordinate(
                Sector {
                    cumulative: 0.0,
                    fraction: 0.25,
                },
                &mut rng,
            );
            assert!((0.0..=PI / 2.0).contains(&a));
            let b = angular_coordinate(
                Sector {
                    cumulative: 0.25,
                    fraction: 0.75,
                },
                &mut rng,
            );
            assert!((PI / 2.0..TAU).contains(&b));
        }
    }

    #[test]
    fn disk_points_are_area_uniform() {
        let mut rng = layout_rng(4);
        let unit = 0.7;
        let samples = 10_000;
        let mean_sq = (0..samples)
            .map(|_| disk_point(unit, &mut rng).0.powi(2))
            .sum::<f64>()
            / samples as f64;
        let expected = unit * unit / 2.0;
        assert!((mean_sq - expected).abs() / expected < 0.05);
    }

    #[test]
    fn disk_point_is_reproducible() {
        let a = disk_point(1.0, &mut layout_rng(9));
        let b = disk_point(1.0, &mut layout_rng(9));
        assert_eq!(a, b);
        assert!(a.0 <= 1.0);
    }

    #[test]
    fn single_child_keeps_parent_center() {
        let center = component_center(0, &[17], 2, 6, (0.3, -1.2), 0.5, 1.1, 1.3);
        assert_eq!(center, (0.3, -1.2));
        assert_eq!(component_unit(0, &[17], 0.5), 0.5);
    }

    #[test]
    fn two_children_of_sizes_three_and_one() {
        let sizes = [3, 1];
        let phi_ini = 0.4;
        let (delta, c_max, level) = (1.3, 5, 2);
        let scale = delta * (c_max - level) as f64;
        let first = component_center(0, &sizes, level, c_max, (0.0, 0.0), 1.0, phi_ini, delta);
        let second = component_center(1, &sizes, level, c_max, (0.0, 0.0), 1.0, phi_ini, delta);
        let phi1 = phi_ini + 1.5 * PI;
        let phi2 = phi_ini + 2.0 * PI;
        assert!((first.0 - scale * 0.25 * phi1.cos()).abs() < 1e-12);
        assert!((first.1 - scale * 0.25 * phi1.sin()).abs() < 1e-12);
        assert!((second.0 - scale * 0.75 * phi2.cos()).abs() < 1e-12);
        assert!((second.1 - scale * 0.75 * phi2.sin()).abs() < 1e-12);
        assert_eq!(component_unit(0, &sizes, 1.0), 0.75);
        assert_eq!(component_unit(1, &sizes, 1.0), 0.25);
    }

    #[test]
    fn final_coordinate_examples() {
        assert_eq!(
            final_coordinates((2.0, 3.0), 0.5, 0.0, 1.0, 1.5),
            (2.0, 3.0)
        );
        let (x, y) = final_coordinates((0.0, 0.0), 1.0, 2.0, 0.0, 1.5);
        assert!((x - 3.0).abs() < 1e-12 && y.abs() < 1e-12);
        let (x1, y1) = final_coordinates((1.0, 1.0), 0.5, 1.3, 0.7, 1.5);
        let (x2, y2) = final_coordinates((1.0, 1.0), 0.5, 1.3, 0.7, 3.0);
        assert!(((x2 - 1.0) - 2.0 * (x1 - 1.0)).abs() < 1e-12);
        assert!(((y2 - 1.0) - 2.0 * (y1 - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn colors_span_violet_to_red() {
        assert_eq!(color_of(7, 1, 7), Rgb(255, 0, 0));
        assert_eq!(color_of(1, 1, 7), Rgb::from_hue(270.0));
        assert_eq!(color_of(1, 1, 7).hex(), "#8000ff");
        assert_eq!(color_of(4, 1, 7), Rgb::from_hue(135.0));
        assert_eq!(color_of(3, 3, 3), Rgb(255, 0, 0));
    }

    #[test]
    fn sizes_are_logarithmic_and_monotone() {
        let cfg = LayoutConfig::default();
        assert_eq!(size_of(40, 40, &cfg), cfg.size_max);
        assert_eq!(size_of(0, 40, &cfg), cfg.size_min);
        let sizes: Vec<f64> = (0..=40).map(|d| size_of(d, 40, &cfg)).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(size_of(0, 0, &cfg), cfg.size_min);
    }

    #[test]
    fn edge_sampling_extremes() {
        let g = Graph::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))));
        let mut rng = layout_rng(5);
        assert_eq!(sample_edges(&g, 1.0, &mut rng).len(), 10);
        assert!(sample_edges(&g, 0.0, &mut rng).is_empty());
    }

    #[test]
    fn edge_sampling_is_binomial() {
        // 10^5 edges: a union of disjoint 4-cycles is cheap to build.
        let edges = (0..25_000).flat_map(|c| {
            let b = 4 * c;
            [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, b)]
        });
        let g = Graph::from_edges(100_000, edges);
        assert_eq!(g.edge_count(), 100_000);
        let kept = sample_edges(&g, 0.1, &mut layout_rng(6)).len() as f64;
        let sigma = (100_000.0f64 * 0.1 * 0.9).sqrt();
        assert!((kept - 10_000.0).abs() <= 3.0 * sigma, "kept {kept}");
    }

    #[test]
    fn config_validation() {
        assert!(LayoutConfig::default().validate().is_ok());
        let bad = LayoutConfig {
            epsilon: 1.5,
            ..Default::default()
        };
        assert_eq!(bad.validate(), Err(ConfigError::Epsilon(1.5)));
        let bad = LayoutConfig {
            edge_fraction: -0.1,
            ..Default::default()
        };
        assert_eq!(bad.validate(), Err(ConfigError::EdgeFraction(-0.1)));
        let bad = LayoutConfig {
            delta: 0.0,
            ..Default::default()
        };
        assert_eq!(bad.validate(), Err(ConfigError::Delta(0.0)));
    }

    fn layout_of(g: &Graph, cfg: &LayoutConfig) -> (Layout, ComponentTree) {
        let d = core_decomposition(g);
        let clusters = shell_clusters(g, &d);
        let tree = component_tree(g, &d);
        (build_layout(g, &d, &clusters, &tree, cfg), tree)
    }

    #[test]
    fn empty_graph_layout() {
        let (layout, _) = layout_of(&Graph::empty(0), &LayoutConfig::default());
        assert!(layout.is_empty());
        assert!(layout.edges.is_empty());
    }

    #[test]
    fn unfragmented_graph_keeps_every_center_at_origin() {
        // Wheel: hub plus 8-cycle; every k-core is connected.
        let mut edges: Vec<_> = (1..9).map(|i| (i, i % 8 + 1)).collect();
        edges.extend((1..9).map(|i| (0, i)));
        edges.push((9, 1));
        let g = Graph::from_edges(10, edges);
        let (layout, _) = layout_of(&g, &LayoutConfig::default());
        for node in &layout.nodes {
            assert_eq!((node.x, node.y, node.unit), (0.0, 0.0, 1.0));
        }
    }

    #[test]
    fn layout_is_deterministic() {
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (6, 7),
            ],
        );
        let cfg = LayoutConfig {
            edge_fraction: 0.5,
            ..Default::default()
        };
        let (a, _) = layout_of(&g, &cfg);
        let (b, _) = layout_of(&g, &cfg);
        assert_eq!(a, b);
        let (c, _) = layout_of(&g, &LayoutConfig { seed: 8, ..cfg });
        assert_ne!(a, c);
    }

    #[test]
    fn top_shell_lies_in_owner_disk() {
        let g = Graph::from_edges(6, (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))));
        let (layout, _) = layout_of(&g, &LayoutConfig::default());
        for v in &layout.vertices {
            assert!(v.rho <= layout.nodes[v.owner].unit);
        }
    }

    #[test]
    fn negative_zero_is_not_printed() {
        assert_eq!(fixed(-0.0000001, 6), "0.000000");
        assert_eq!(fixed(-1.5, 2), "-1.50");
    }
}
