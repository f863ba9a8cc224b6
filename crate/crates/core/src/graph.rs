//! Finite connected symmetric digraphs and the standard families used
//! throughout the crate.
//!
//! Every undirected edge `{u, v}` is stored as the arc pair `(u, v)` and
//! `(v, u)`, sorted lexicographically by `(origin, terminal)` so operator
//! matrices and dump files are reproducible. Each vertex is understood to
//! carry one semi-infinite tail; the tail never appears explicitly — only
//! the augmented degree `d(u) + 1` enters the dynamics.

use std::collections::HashSet;

use crate::error::GraphError;

/// A directed arc of the internal graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminal: usize,
}

impl Arc {
    pub fn new(origin: usize, terminal: usize) -> Self {
        Self { origin, terminal }
    }
}

/// A finite, connected, simple symmetric digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<Arc>,
    inverse: Vec<usize>,
    degree: Vec<usize>,
}

impl Digraph {
    /// Builds a graph from an undirected edge set, validating simplicity
    /// and connectivity.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::TooFewVertices { min: 1, got: 0 });
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }

        let mut arcs = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            arcs.push(Arc::new(u, v));
            arcs.push(Arc::new(v, u));
        }
        arcs.sort_unstable();

        let mut degree = vec![0usize; n];
        for a in &arcs {
            degree[a.terminal] += 1;
        }

        // arcs are sorted, so the inverse arc is found by binary search
        let inverse = arcs
            .iter()
            .map(|a| {
                arcs.binary_search(&Arc::new(a.terminal, a.origin))
                    .expect("symmetric arc set")
            })
            .collect();

        let graph = Self {
            vertex_count: n,
            arcs,
            inverse,
            degree,
        };
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    /// The cycle graph on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices { min: 3, got: n });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges)
    }

    /// The complete graph on `n >= 2` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices { min: 2, got: n });
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Self::from_edge_list(n, &edges)
    }

    /// The circulant graph on vertices `0..n` where `i` and `j` are adjacent
    /// iff `i - j ≡ ±1, ..., ±k (mod n)`. Requires `1 <= k` and `2k < n`;
    /// `2k = n` would pair antipodal vertices twice.
    pub fn circulant(n: usize, k: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices { min: 3, got: n });
        }
        if k == 0 || 2 * k >= n {
            return Err(GraphError::InvalidCirculantOffset { n, k });
        }
        let mut edges = Vec::with_capacity(n * k);
        for u in 0..n {
            for step in 1..=k {
                edges.push((u, (u + step) % n));
            }
        }
        Self::from_edge_list(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
    pub fn petersen() -> Self {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        Self::from_edge_list(10, &edges).expect("fixed edge set is valid")
    }

    /// Parses the edge-list text format: first line `N M`, then `M` lines
    /// `u v` of 0-indexed undirected edges. Lines starting with `#` and
    /// blank lines are skipped.
    pub fn parse_edge_list(input: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace().map(|tok| {
                tok.parse::<usize>().map_err(|e| GraphError::Parse {
                    line: idx + 1,
                    message: format!("{tok:?}: {e}"),
                })
            });
            let mut next = |name: &str| {
                fields.next().unwrap_or(Err(GraphError::Parse {
                    line: idx + 1,
                    message: format!("missing {name}"),
                }))
            };
            if header.is_none() {
                header = Some((next("vertex count")?, next("edge count")?));
            } else {
                edges.push((next("edge origin")?, next("edge terminal")?));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            message: "missing `N M` header line".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                message: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edge_list(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// All arcs in the canonical (lexicographic) order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    /// Index of the inverse arc.
    pub fn inverse(&self, index: usize) -> usize {
        self.inverse[index]
    }

    /// Index of the arc `(origin, terminal)` if present.
    pub fn arc_index(&self, origin: usize, terminal: usize) -> Option<usize> {
        self.arcs.binary_search(&Arc::new(origin, terminal)).ok()
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.degree[vertex]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Degree including the tail attached to every vertex.
    pub fn augmented_degree(&self, vertex: usize) -> usize {
        self.degree[vertex] + 1
    }

    /// Returns the common degree when the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let first = *self.degree.first()?;
        self.degree.iter().all(|&d| d == first).then_some(first)
    }

    /// Sparse basis of the antisymmetric circulation space: one normalized
    /// fundamental cycle per non-tree edge of a BFS spanning tree, as
    /// `(arc index, value)` pairs. Circulations have zero incoming sum at
    /// every vertex and flip sign under arc inversion; the space is empty
    /// exactly when the graph is a tree.
    pub(crate) fn circulation_basis(&self) -> Vec<Vec<(usize, f64)>> {
        let n = self.vertex_count;
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut in_tree = vec![false; n];
        in_tree[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut tree_edges = HashSet::new();
        while let Some(u) = queue.pop_front() {
            let start = self.arcs.partition_point(|a| a.origin < u);
            for a in self.arcs[start..].iter().take_while(|a| a.origin == u) {
                if !in_tree[a.terminal] {
                    in_tree[a.terminal] = true;
                    parent[a.terminal] = u;
                    depth[a.terminal] = depth[u] + 1;
                    tree_edges.insert((u.min(a.terminal), u.max(a.terminal)));
                    queue.push_back(a.terminal);
                }
            }
        }

        let mut basis = Vec::new();
        for arc in &self.arcs {
            let (u, v) = (arc.origin, arc.terminal);
            if u > v || tree_edges.contains(&(u, v)) {
                continue;
            }
            // fundamental cycle: the edge {u, v} plus the tree path v -> u
            let mut entries = vec![(self.arc_index(u, v).expect("arc exists"), 1.0)];
            let push_step = |from: usize, to: usize, entries: &mut Vec<(usize, f64)>| {
                entries.push((self.arc_index(from, to).expect("tree arc"), 1.0));
            };
            let (mut x, mut y) = (v, u); // walk x toward u, y toward v, meet at the LCA
            let mut x_steps = Vec::new();
            let mut y_steps = Vec::new();
            while depth[x] > depth[y] {
                x_steps.push((x, parent[x]));
                x = parent[x];
            }
            while depth[y] > depth[x] {
                y_steps.push((y, parent[y]));
                y = parent[y];
            }
            while x != y {
                x_steps.push((x, parent[x]));
                x = parent[x];
                y_steps.push((y, parent[y]));
                y = parent[y];
            }
            for (from, to) in x_steps {
                push_step(from, to, &mut entries);
            }
            // the y side runs against the traversal direction
            for (from, to) in y_steps.into_iter().rev() {
                push_step(to, from, &mut entries);
            }

            // antisymmetric extension, normalized
            let scale = 1.0 / (2.0 * entries.len() as f64).sqrt();
            let mut full = Vec::with_capacity(2 * entries.len());
            for (idx, value) in entries {
                full.push((idx, value * scale));
                full.push((self.inverse[idx], -value * scale));
            }
            basis.push(full);
        }
        basis
    }

    fn is_connected(&self) -> bool {
        let mut visited = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        visited[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            // arcs out of u are contiguous in the sorted order
            let start = self.arcs.partition_point(|a| a.origin < u);
            for a in self.arcs[start..].iter().take_while(|a| a.origin == u) {
                if !visited[a.terminal] {
                    visited[a.terminal] = true;
                    reached += 1;
                    stack.push(a.terminal);
                }
            }
        }
        reached == self.vertex_count
    }
}
