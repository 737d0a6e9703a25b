//! k-core decomposition, shell clusters and the k-core component tree.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexId};

/// Coreness of every vertex and the shells it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    coreness: Vec<u32>,
    shells: Vec<Vec<VertexId>>,
}

impl CoreDecomposition {
    pub fn coreness(&self, v: VertexId) -> u32 {
        self.coreness[v]
    }

    pub fn coreness_values(&self) -> &[u32] {
        &self.coreness
    }

    pub fn vertex_count(&self) -> usize {
        self.coreness.len()
    }

    /// Maximum coreness; 0 for an empty graph.
    pub fn c_max(&self) -> u32 {
        self.shells.len().saturating_sub(1) as u32
    }

    /// Smallest coreness with a nonempty shell; 0 for an empty graph.
    pub fn c_min(&self) -> u32 {
        self.shells.iter().position(|s| !s.is_empty()).unwrap_or(0) as u32
    }

    /// Vertices of coreness exactly `c`, ascending. Empty past `c_max`.
    pub fn shell(&self, c: u32) -> &[VertexId] {
        self.shells.get(c as usize).map_or(&[], Vec::as_slice)
    }

    /// Iterates `(c, shell)` over every coreness value `0..=c_max`, including
    /// empty shells.
    pub fn shells(&self) -> impl Iterator<Item = (u32, &[VertexId])> {
        self.shells
            .iter()
            .enumerate()
            .map(|(c, s)| (c as u32, s.as_slice()))
    }
}

/// Computes the coreness of every vertex in O(n + e).
///
/// Vertices sit in a degree-ordered array with bucket boundaries; removing the
/// current minimum decrements each higher-degree neighbor by swapping it to the
/// front of its bucket and advancing that bucket's start.
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.vertex_count();
    let mut degree = g.degrees();
    let max_degree = g.max_degree();

    let mut bucket_start = vec![0usize; max_degree + 2];
    for &d in &degree {
        bucket_start[d + 1] += 1;
    }
    for d in 1..bucket_start.len() {
        bucket_start[d] += bucket_start[d - 1];
    }

    let mut order = vec![0 as VertexId; n];
    let mut position = vec![0usize; n];
    {
        let mut next = bucket_start.clone();
        for v in 0..n {
            position[v] = next[degree[v]];
            order[position[v]] = v;
            next[degree[v]] += 1;
        }
    }

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = position[u];
                let pw = bucket_start[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    position[u] = pw;
                    position[w] = pu;
                }
                bucket_start[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    let coreness: Vec<u32> = degree.into_iter().map(|c| c as u32).collect();
    let c_max = coreness.iter().copied().max();
    let mut shells = match c_max {
        Some(c) => vec![Vec::new(); c as usize + 1],
        None => Vec::new(),
    };
    for (v, &c) in coreness.iter().enumerate() {
        shells[c as usize].push(v);
    }
    CoreDecomposition { coreness, shells }
}

/// Vertices of the k-core, ascending.
pub fn kcore_membership(d: &CoreDecomposition, k: u32) -> Vec<VertexId> {
    d.coreness
        .iter()
        .enumerate()
        .filter_map(|(v, &c)| (c >= k).then_some(v))
        .collect()
}

/// Angular share of one cluster within its shell, as fractions of the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    /// Combined fraction of all clusters with a smaller label.
    pub cumulative: f64,
    /// This cluster's fraction of the shell.
    pub fraction: f64,
}

/// Connected components of each shell's induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterTable {
    cluster_of: Vec<u32>,
    /// `sizes[c][q - 1]` is the size of cluster `q` of shell `c`.
    sizes: Vec<Vec<usize>>,
}

impl ClusterTable {
    /// 1-based cluster label of `v` within its shell.
    pub fn cluster_of(&self, v: VertexId) -> u32 {
        self.cluster_of[v]
    }

    pub fn cluster_count(&self, c: u32) -> usize {
        self.sizes.get(c as usize).map_or(0, Vec::len)
    }

    /// Cluster sizes of shell `c`, in label order.
    pub fn cluster_sizes(&self, c: u32) -> &[usize] {
        self.sizes.get(c as usize).map_or(&[], Vec::as_slice)
    }

    /// Table entry for cluster `q` of shell `c`: the cumulative fraction of
    /// clusters `1..q` and the fraction of cluster `q` itself.
    pub fn sector(&self, c: u32, q: u32) -> Sector {
        let sizes = &self.sizes[c as usize];
        let total: usize = sizes.iter().sum();
        let before: usize = sizes[..q as usize - 1].iter().sum();
        Sector {
            cumulative: before as f64 / total as f64,
            fraction: sizes[q as usize - 1] as f64 / total as f64,
        }
    }

    /// Sector of the cluster holding `v`.
    pub fn sector_of(&self, d: &CoreDecomposition, v: VertexId) -> Sector {
        self.sector(d.coreness(v), self.cluster_of[v])
    }
}

/// Labels the clusters of every shell, numbering them by smallest member id.
pub fn shell_clusters(g: &Graph, d: &CoreDecomposition) -> ClusterTable {
    let n = g.vertex_count();
    let mut cluster_of = vec![0u32; n];
    let mut sizes: Vec<Vec<usize>> = vec![Vec::new(); d.shells.len()];
    let mut queue = VecDeque::new();

    for start in 0..n {
        if cluster_of[start] != 0 {
            continue;
        }
        let c = d.coreness[start];
        let shell_sizes = &mut sizes[c as usize];
        shell_sizes.push(0);
        let label = shell_sizes.len() as u32;
        cluster_of[start] = label;
        queue.push_back(start);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(v) {
                if d.coreness[w] == c && cluster_of[w] == 0 {
                    cluster_of[w] = label;
                    queue.push_back(w);
                }
            }
        }
        *shell_sizes.last_mut().expect("just pushed") = size;
    }

    ClusterTable { cluster_of, sizes }
}

/// One connected component of some k-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// Core level k of the component.
    pub level: u32,
    /// Member vertices, ascending.
    pub vertices: Vec<VertexId>,
    pub parent: Option<usize>,
    /// Children in descending size, ties by smallest member id.
    pub children: Vec<usize>,
}

impl TreeNode {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    fn min_vertex(&self) -> VertexId {
        self.vertices.first().copied().unwrap_or(VertexId::MAX)
    }
}

/// Hierarchy of connected components of successive k-cores.
///
/// Node 0 is a level-0 root holding the whole graph. Its children are the
/// connected components of the 1-core; below that, each node at level k has
/// one child per component of the (k+1)-core it contains. Nodes are numbered
/// breadth-first, so a parent always precedes its children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTree {
    nodes: Vec<TreeNode>,
    owner: Vec<usize>,
}

impl ComponentTree {
    pub const ROOT: usize = 0;

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Ids of all nodes at core level `k`.
    pub fn level(&self, k: u32) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(move |(_, node)| node.level == k)
            .map(|(id, _)| id)
    }

    /// Deepest node containing `v` whose level equals the coreness of `v`.
    pub fn owner(&self, v: VertexId) -> usize {
        self.owner[v]
    }

    /// Ancestor of `id` at level `k` (or `id` itself when it is at level `k`).
    pub fn ancestor_at(&self, mut id: usize, k: u32) -> Option<usize> {
        loop {
            let node = &self.nodes[id];
            if node.level == k {
                return Some(id);
            }
            if node.level < k {
                return None;
            }
            id = node.parent?;
        }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Builds the component tree by adding shells from `c_max` down to 1 into a
/// union-find structure; after shell k is added, the sets containing active
/// vertices are exactly the components of the k-core.
pub fn component_tree(g: &Graph, d: &CoreDecomposition) -> ComponentTree {
    let n = g.vertex_count();
    let c_max = d.c_max();
    let mut sets = DisjointSets::new(n);
    let mut active = vec![false; n];
    // Scratch map from a set root to the node built for it at the current level.
    let mut slot = vec![usize::MAX; n];

    let mut raw: Vec<TreeNode> = Vec::new();
    let mut previous_level: Vec<usize> = Vec::new();

    for k in (1..=c_max).rev() {
        let shell = d.shell(k);
        for &v in shell {
            active[v] = true;
        }
        for &v in shell {
            for &w in g.neighbors(v) {
                if active[w] {
                    sets.union(v, w);
                }
            }
        }

        let mut current_level = Vec::new();
        let mut node_for = |root: usize, raw: &mut Vec<TreeNode>| -> usize {
            if slot[root] == usize::MAX {
                slot[root] = raw.len();
                raw.push(TreeNode {
                    level: k,
                    vertices: Vec::new(),
                    parent: None,
                    children: Vec::new(),
                });
                current_level.push(root);
            }
            slot[root]
        };

        for &child in &previous_level {
            let representative = raw[child].vertices[0];
            let id = node_for(sets.find(representative), &mut raw);
            raw[child].parent = Some(id);
            raw[id].children.push(child);
            let child_vertices = raw[child].vertices.clone();
            raw[id].vertices.extend(child_vertices);
        }
        for &v in shell {
            let id = node_for(sets.find(v), &mut raw);
            raw[id].vertices.push(v);
        }

        previous_level = current_level
            .into_iter()
            .map(|root| std::mem::replace(&mut slot[root], usize::MAX))
            .collect();
        for &id in &previous_level {
            raw[id].vertices.sort_unstable();
        }
    }

    let root = raw.len();
    for &child in &previous_level {
        raw[child].parent = Some(root);
    }
    raw.push(TreeNode {
        level: 0,
        vertices: (0..n).collect(),
        parent: None,
        children: previous_level,
    });

    // Order children by descending size, ties by smallest member.
    let keys: Vec<(usize, VertexId)> = raw.iter().map(|n| (n.size(), n.min_vertex())).collect();
    for node in raw.iter_mut() {
        node.children
            .sort_by(|&a, &b| keys[b].0.cmp(&keys[a].0).then(keys[a].1.cmp(&keys[b].1)));
    }

    // Renumber breadth-first from the root.
    let mut new_id = vec![usize::MAX; raw.len()];
    let mut order = Vec::with_capacity(raw.len());
    let mut queue = VecDeque::from([root]);
    while let Some(id) = queue.pop_front() {
        new_id[id] = order.len();
        order.push(id);
        queue.extend(raw[id].children.iter().copied());
    }
    let mut slots: Vec<Option<TreeNode>> = raw.into_iter().map(Some).collect();
    let nodes: Vec<TreeNode> = order
        .iter()
        .map(|&old| {
            let mut node = slots[old].take().expect("each node visited once");
            node.parent = node.parent.map(|p| new_id[p]);
            for child in node.children.iter_mut() {
                *child = new_id[*child];
            }
            node
        })
        .collect();

    let mut owner = vec![ComponentTree::ROOT; n];
    for (id, node) in nodes.iter().enumerate() {
        for &v in &node.vertices {
            if d.coreness(v) == node.level {
                owner[v] = id;
            }
        }
    }

    ComponentTree { nodes, owner }
}
