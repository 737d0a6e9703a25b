//! Decomposition results bundled together, plus their text dumps.

use std::fmt::Write as _;

use serde::Serialize;

use crate::decomposition::{
    component_tree, core_decomposition, shell_clusters, ClusterTable, ComponentTree,
    CoreDecomposition,
};
use crate::graph::Graph;
use crate::layout::{build_layout, Layout, LayoutConfig};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub decomposition: CoreDecomposition,
    pub clusters: ClusterTable,
    pub tree: ComponentTree,
}

#[derive(Serialize)]
struct TreeDocument {
    nodes: Vec<TreeNodeEntry>,
}

#[derive(Serialize)]
struct TreeNodeEntry {
    id: usize,
    level: u32,
    size: usize,
    parent: Option<usize>,
}

impl Analysis {
    pub fn new(g: &Graph) -> Analysis {
        let decomposition = core_decomposition(g);
        let clusters = shell_clusters(g, &decomposition);
        let tree = component_tree(g, &decomposition);
        Analysis {
            decomposition,
            clusters,
            tree,
        }
    }

    pub fn layout(&self, g: &Graph, cfg: &LayoutConfig) -> Layout {
        build_layout(g, &self.decomposition, &self.clusters, &self.tree, cfg)
    }

    /// One `id coreness cluster component_node` line per vertex. The id is the
    /// vertex label when `labels` is given, else the dense index.
    pub fn vertex_dump(&self, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        for v in 0..self.decomposition.vertex_count() {
            match labels {
                Some(l) => out.push_str(&l[v]),
                None => write!(out, "{v}").expect("writing to String"),
            }
            writeln!(
                out,
                " {} {} {}",
                self.decomposition.coreness(v),
                self.clusters.cluster_of(v),
                self.tree.owner(v)
            )
            .expect("writing to String");
        }
        out
    }

    /// Component tree as JSON: `{"nodes": [{id, level, size, parent}, ...]}`.
    pub fn tree_json(&self) -> String {
        let doc = TreeDocument {
            nodes: self
                .tree
                .nodes()
                .iter()
                .enumerate()
                .map(|(id, node)| TreeNodeEntry {
                    id,
                    level: node.level,
                    size: node.size(),
                    parent: node.parent,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("tree serializes")
    }
}
