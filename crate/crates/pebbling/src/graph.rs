//! Immutable labeled graphs and the distance machinery the certificate tools
//! rely on.
//!
//! Graphs are simple, undirected, and connected; vertices carry string labels
//! (subscripted names like `x_3`, primed names like `x_3'`, and negative
//! subscripts like `v_-2` are all just label text). Vertices are addressed by
//! [`VertexId`] — the position in declaration order — and all tie-breaking
//! conventions in this crate ("first", "smallest") refer to that order.
//!
//! The text format, produced by [`Graph::to_text`] and read by
//! [`Graph::parse`]:
//!
//! ```text
//! graph petersen
//! vertices a_0 a_1 a_2 a_3 a_4 b_0 b_1 b_2 b_3 b_4
//! edge a_0 a_1
//! edge a_0 b_0
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored on input. Parsing a
//! serialized graph reproduces it exactly, and re-serializing a parsed
//! comment-free file reproduces the file byte for byte.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

/// Index of a vertex in declaration order.
pub type VertexId = usize;

/// A simple, undirected, connected graph with labeled vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    labels: Vec<String>,
    ids: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
}

/// Structural errors when building a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// The graph has no vertices.
    #[error("graph has no vertices")]
    Empty,
    /// A name or label is empty or contains whitespace or `#`.
    #[error("invalid token {0:?}: must be non-empty, without whitespace or '#'")]
    InvalidToken(String),
    /// The same label was declared twice.
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    /// An edge refers to an undeclared label.
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    /// An edge joins a vertex to itself.
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    /// The same unordered edge was declared twice.
    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(String, String),
    /// The graph is not connected.
    #[error("graph is not connected")]
    Disconnected,
    /// A ring index outside `0..=eccentricity` was requested.
    #[error("ring index {index} out of range: eccentricity of {root:?} is {eccentricity}")]
    RingIndexOutOfRange {
        root: String,
        index: u32,
        eccentricity: u32,
    },
}

/// Errors when reading the graph text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphParseError {
    /// A malformed line, with its 1-based line number.
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// The declarations were well-formed but the graph is invalid.
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

/// Errors when enumerating shortest paths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathEnumError {
    /// No path exists between the endpoints in the (possibly vertex-deleted)
    /// graph.
    #[error("no path between the requested endpoints")]
    NoPath,
    /// More shortest paths exist than the requested cap.
    #[error("more than {cap} shortest paths exist")]
    TooManyPaths {
        /// The cap that was exceeded.
        cap: usize,
    },
}

fn valid_token(tok: &str) -> bool {
    !tok.is_empty() && !tok.contains(char::is_whitespace) && !tok.contains('#')
}

impl Graph {
    /// Builds a graph from declared labels and an edge list.
    ///
    /// Vertex ids follow the order of `labels`; the edge list order is kept
    /// for serialization but has no effect on any computed result.
    pub fn from_edge_list<L, A, B>(name: &str, labels: &[L], edges: &[(A, B)]) -> Result<Graph, GraphError>
    where
        L: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        if !valid_token(name) {
            return Err(GraphError::InvalidToken(name.to_string()));
        }
        if labels.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut ids = HashMap::new();
        let mut label_vec = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            if !valid_token(label) {
                return Err(GraphError::InvalidToken(label.to_string()));
            }
            if ids.insert(label.to_string(), label_vec.len()).is_some() {
                return Err(GraphError::DuplicateLabel(label.to_string()));
            }
            label_vec.push(label.to_string());
        }
        let n = label_vec.len();
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut edge_vec = Vec::with_capacity(edges.len());
        let mut seen = std::collections::HashSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *ids
                .get(a)
                .ok_or_else(|| GraphError::UnknownLabel(a.to_string()))?;
            let v = *ids
                .get(b)
                .ok_or_else(|| GraphError::UnknownLabel(b.to_string()))?;
            if u == v {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_vec.push((u, v));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let graph = Graph {
            name: name.to_string(),
            labels: label_vec,
            ids,
            adj,
            edges: edge_vec,
        };
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    /// Reads the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Graph, GraphParseError> {
        let syntax = |line: usize, message: &str| GraphParseError::Syntax {
            line,
            message: message.to_string(),
        };
        let mut name: Option<String> = None;
        let mut labels: Option<Vec<String>> = None;
        let mut edges: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().expect("non-empty line has a token");
            match keyword {
                "graph" => {
                    if name.is_some() {
                        return Err(syntax(line_no, "repeated 'graph' line"));
                    }
                    let value = tokens
                        .next()
                        .ok_or_else(|| syntax(line_no, "expected 'graph <name>'"))?;
                    if tokens.next().is_some() {
                        return Err(syntax(line_no, "unexpected tokens after graph name"));
                    }
                    name = Some(value.to_string());
                }
                "vertices" => {
                    if name.is_none() {
                        return Err(syntax(line_no, "'vertices' before 'graph'"));
                    }
                    if labels.is_some() {
                        return Err(syntax(line_no, "repeated 'vertices' line"));
                    }
                    let list: Vec<String> = tokens.map(str::to_string).collect();
                    if list.is_empty() {
                        return Err(syntax(line_no, "expected 'vertices <label>...'"));
                    }
                    labels = Some(list);
                }
                "edge" => {
                    if labels.is_none() {
                        return Err(syntax(line_no, "'edge' before 'vertices'"));
                    }
                    let a = tokens
                        .next()
                        .ok_or_else(|| syntax(line_no, "expected 'edge <a> <b>'"))?;
                    let b = tokens
                        .next()
                        .ok_or_else(|| syntax(line_no, "expected 'edge <a> <b>'"))?;
                    if tokens.next().is_some() {
                        return Err(syntax(line_no, "unexpected tokens after edge endpoints"));
                    }
                    edges.push((a.to_string(), b.to_string()));
                }
                other => {
                    return Err(syntax(line_no, &format!("unknown directive {other:?}")));
                }
            }
        }
        let name = name.ok_or_else(|| syntax(1, "missing 'graph' line"))?;
        let labels = labels.ok_or_else(|| syntax(1, "missing 'vertices' line"))?;
        Ok(Graph::from_edge_list(&name, &labels, &edges)?)
    }

    /// Serializes to the text format; [`Graph::parse`] inverts this exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {}", self.name).unwrap();
        writeln!(out, "vertices {}", self.labels.join(" ")).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "edge {} {}", self.labels[u], self.labels[v]).unwrap();
        }
        out
    }

    /// The graph's name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All labels in declaration order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The label of vertex `v`.
    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    /// Looks a label up, if declared.
    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }

    /// Looks a label up, erroring on unknown labels.
    pub fn require_vertex(&self, label: &str) -> Result<VertexId, GraphError> {
        self.vertex(label)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))
    }

    /// Neighbors of `v`, ascending by id.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// True if `{u, v}` is an edge.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in declaration order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    /// All vertex ids.
    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut found = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    found += 1;
                    queue.push_back(u);
                }
            }
        }
        found == n
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: VertexId) -> Vec<u32> {
        self.distances_avoiding(source, &[])
            .into_iter()
            .map(|d| d.expect("connected graph reaches every vertex"))
            .collect()
    }

    /// Distance between two vertices.
    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        self.distances_from(u)[v]
    }

    /// Largest distance from `v`.
    pub fn eccentricity(&self, v: VertexId) -> u32 {
        self.distances_from(v).into_iter().max().unwrap()
    }

    /// Largest eccentricity over all vertices.
    pub fn diameter(&self) -> u32 {
        self.vertices().map(|v| self.eccentricity(v)).max().unwrap()
    }

    /// The `j`-th neighborhood ring of `root`: vertices at distance exactly
    /// `j`, ascending by id. `j` must be at most the root's eccentricity.
    pub fn neighborhood_ring(&self, root: VertexId, j: u32) -> Result<Vec<VertexId>, GraphError> {
        let dist = self.distances_from(root);
        let ecc = *dist.iter().max().unwrap();
        if j > ecc {
            return Err(GraphError::RingIndexOutOfRange {
                root: self.labels[root].clone(),
                index: j,
                eccentricity: ecc,
            });
        }
        Ok(self
            .vertices()
            .filter(|&v| dist[v] == j)
            .collect())
    }

    /// Vertices at distance exactly `eccentricity(root)` from `root`.
    pub fn peripheral_vertices(&self, root: VertexId) -> Vec<VertexId> {
        let dist = self.distances_from(root);
        let ecc = *dist.iter().max().unwrap();
        self.vertices().filter(|&v| dist[v] == ecc).collect()
    }

    /// BFS distances from `source` in the graph with `removed` deleted;
    /// `None` marks vertices unreachable in the deleted graph (including the
    /// removed vertices themselves).
    pub fn distances_avoiding(&self, source: VertexId, removed: &[VertexId]) -> Vec<Option<u32>> {
        let n = self.vertex_count();
        let mut dist: Vec<Option<u32>> = vec![None; n];
        if removed.contains(&source) {
            return dist;
        }
        let mut blocked = vec![false; n];
        for &v in removed {
            blocked[v] = true;
        }
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for &u in &self.adj[v] {
                if !blocked[u] && dist[u].is_none() {
                    dist[u] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Distance from `u` to `v` avoiding `removed`, or `None` if unreachable.
    pub fn distance_avoiding(&self, u: VertexId, v: VertexId, removed: &[VertexId]) -> Option<u32> {
        self.distances_avoiding(u, removed)[v]
    }

    /// Every shortest `u`–`v` path in the graph with `removed` deleted,
    /// as vertex sequences starting at `u` and ending at `v`, sorted
    /// lexicographically by vertex id sequence.
    ///
    /// Errors with [`PathEnumError::NoPath`] if `v` is unreachable and
    /// [`PathEnumError::TooManyPaths`] if more than `cap` paths exist.
    pub fn all_shortest_paths_avoiding(
        &self,
        u: VertexId,
        v: VertexId,
        removed: &[VertexId],
        cap: usize,
    ) -> Result<Vec<Vec<VertexId>>, PathEnumError> {
        let dist_to_v = self.distances_avoiding(v, removed);
        if dist_to_v[u].is_none() {
            return Err(PathEnumError::NoPath);
        }
        let mut paths = Vec::new();
        let mut current = vec![u];
        self.shortest_path_dfs(v, &dist_to_v, &mut current, &mut paths, cap)?;
        Ok(paths)
    }

    fn shortest_path_dfs(
        &self,
        target: VertexId,
        dist_to_target: &[Option<u32>],
        current: &mut Vec<VertexId>,
        paths: &mut Vec<Vec<VertexId>>,
        cap: usize,
    ) -> Result<(), PathEnumError> {
        let w = *current.last().unwrap();
        if w == target {
            if paths.len() == cap {
                return Err(PathEnumError::TooManyPaths { cap });
            }
            paths.push(current.clone());
            return Ok(());
        }
        let dw = dist_to_target[w].unwrap();
        for &x in &self.adj[w] {
            if dist_to_target[x] == Some(dw - 1) {
                current.push(x);
                self.shortest_path_dfs(target, dist_to_target, current, paths, cap)?;
                current.pop();
            }
        }
        Ok(())
    }

    /// The lexicographically first shortest `u`–`v` path avoiding `removed`.
    pub fn first_shortest_path_avoiding(
        &self,
        u: VertexId,
        v: VertexId,
        removed: &[VertexId],
    ) -> Result<Vec<VertexId>, PathEnumError> {
        let dist_to_v = self.distances_avoiding(v, removed);
        if dist_to_v[u].is_none() {
            return Err(PathEnumError::NoPath);
        }
        let mut path = vec![u];
        let mut w = u;
        while w != v {
            let dw = dist_to_v[w].unwrap();
            let next = self.adj[w]
                .iter()
                .copied()
                .find(|&x| dist_to_v[x] == Some(dw - 1))
                .expect("a vertex on a shortest path has a closer neighbor");
            path.push(next);
            w = next;
        }
        Ok(path)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({}, {} vertices, {} edges)",
            self.name,
            self.vertex_count(),
            self.edge_count()
        )
    }
}
