//! Undirected simple graphs and edge-list ingestion.
//!
//! Vertices are dense ids in `0..n`. Edge lists use arbitrary string tokens,
//! which are mapped to ids in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: expected 2 vertex tokens, found {found}")]
    Parse { line: usize, found: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

/// Immutable undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        GraphBuilder::new(n).extend(edges).build().0
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
    }

    /// Degree of every vertex, indexed by id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Each undirected edge once, as `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, adj)| {
            let start = adj.partition_point(|&j| j <= i);
            adj[start..].iter().map(move |&j| (i, j))
        })
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            new_id[v] = k;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut adj: Vec<VertexId> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect();
                adj.sort_unstable();
                adj
            })
            .collect::<Vec<_>>();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            edge_count,
        }
    }

    /// Induced subgraph on the largest connected component, together with the
    /// original id of each new vertex. Ties go to the component containing the
    /// smallest original id.
    pub fn largest_connected_component(&self) -> (Graph, Vec<VertexId>) {
        let mut best: Option<Vec<VertexId>> = None;
        for component in self.connected_components() {
            if best.as_ref().is_none_or(|b| component.len() > b.len()) {
                best = Some(component);
            }
        }
        let members = best.unwrap_or_default();
        (self.induced_subgraph(&members), members)
    }

    /// Serializes as an edge list, one `label_i label_j` line per edge.
    /// Isolated vertices are not representable and are omitted.
    pub fn to_edge_list(&self, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        for (i, j) in self.edges() {
            match labels {
                Some(l) => writeln!(out, "{} {}", l[i], l[j]),
                None => writeln!(out, "{i} {j}"),
            }
            .expect("writing to String");
        }
        out
    }
}

/// Accumulates edges and produces a simple graph, counting what was dropped.
#[derive(Debug)]
pub struct GraphBuilder {
    adjacency: Vec<Vec<VertexId>>,
    self_loops: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adjacency: vec![Vec::new(); n],
            self_loops: 0,
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) {
        if a == b {
            self.self_loops += 1;
            return;
        }
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
    }

    pub fn extend(mut self, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        for (a, b) in edges {
            self.add_edge(a, b);
        }
        self
    }

    /// Returns the graph and the number of self-loops and duplicate edges dropped.
    pub fn build(self) -> (Graph, usize, usize) {
        let mut duplicate_endpoints = 0;
        let adjacency: Vec<Vec<VertexId>> = self
            .adjacency
            .into_iter()
            .map(|mut adj| {
                adj.sort_unstable();
                let before = adj.len();
                adj.dedup();
                duplicate_endpoints += before - adj.len();
                adj
            })
            .collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        (
            Graph {
                adjacency,
                edge_count,
            },
            self.self_loops,
            duplicate_endpoints / 2,
        )
    }
}

/// Result of reading an edge list.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Original token of each vertex, indexed by id.
    pub labels: Vec<String>,
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
}

impl ParsedGraph {
    /// One `id<TAB>token` line per vertex.
    pub fn label_map(&self) -> String {
        let mut out = String::new();
        for (id, label) in self.labels.iter().enumerate() {
            writeln!(out, "{id}\t{label}").expect("writing to String");
        }
        out
    }
}

/// Parses a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, GraphError> {
    let mut ids: HashMap<&str, VertexId> = HashMap::new();
    let mut labels = Vec::new();
    let mut builder = GraphBuilder::new(0);

    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(GraphError::Parse {
                line: index + 1,
                found: tokens.len(),
            });
        }
        let mut endpoint = |token| -> VertexId {
            *ids.entry(token).or_insert_with(|| {
                labels.push(token.to_string());
                builder.add_vertex()
            })
        };
        let a = endpoint(tokens[0]);
        let b = endpoint(tokens[1]);
        builder.add_edge(a, b);
    }

    let (graph, dropped_self_loops, dropped_duplicates) = builder.build();
    Ok(ParsedGraph {
        graph,
        labels,
        dropped_self_loops,
        dropped_duplicates,
    })
}
