//! k-core decomposition and concentric-shell drawing of large sparse graphs.
//!
//! The pipeline is: parse or generate a [`Graph`], decompose it into shells,
//! shell clusters and the k-core component tree ([`Analysis`]), place every
//! vertex ([`Layout`]), then render SVG or summarize it as a [`Fingerprint`].

pub mod analysis;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod layout;
pub mod metrics;
pub mod render;
pub mod rng;

pub use analysis::Analysis;
pub use decomposition::{ClusterTable, ComponentTree, CoreDecomposition, Sector, TreeNode};
pub use generators::{GeneratorError, GeneratorSpec};
pub use graph::{parse_edge_list, Graph, GraphError, ParsedGraph, VertexId};
pub use layout::{ConfigError, Layout, LayoutConfig, Rgb};
pub use metrics::{Fingerprint, HubThresholds};
pub use render::RenderOptions;
