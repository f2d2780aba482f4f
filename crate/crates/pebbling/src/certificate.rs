//! Weighted-subtree certificates for pebbling upper bounds.
//!
//! A *strategy* for a root vertex `r` is a subtree of the graph containing
//! `r`, with a nonnegative rational weight on every non-root tree vertex,
//! such that along every tree edge not incident to `r` the parent's weight is
//! at least twice the child's. A *certificate* is a nonempty collection of
//! strategies sharing the same root.
//!
//! Writing `ω(v)` for the sum of `v`'s weights across all strategies, a valid
//! certificate with `ω_min = min over v ≠ r of ω(v) > 0` yields
//! `λ = (Σ total weight) / ω_min` and the upper bound `π(G, r) ≤ ⌊λ⌋ + 1` on
//! the pebbling number for target `r`: from any configuration of `⌊λ⌋ + 1`
//! pebbles, some sequence of pebbling moves places a pebble on `r`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::families;
use crate::graph::{Graph, GraphError, VertexId};
use crate::rational::Rational;

/// A rooted weighted subtree. Structure is kept well-formed by construction:
/// children attach only beneath vertices already in the tree, so the tree is
/// always connected to the root and acyclic. Weights are unconstrained data;
/// [`validate_strategy`] checks them against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    root: VertexId,
    parents: BTreeMap<VertexId, VertexId>,
    weights: BTreeMap<VertexId, Rational>,
}

impl Strategy {
    /// A strategy containing only its root.
    pub fn new(root: VertexId) -> Self {
        Strategy {
            root,
            parents: BTreeMap::new(),
            weights: BTreeMap::new(),
        }
    }

    /// The root vertex.
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Adds `child` beneath `parent`.
    ///
    /// # Panics
    ///
    /// If `child` is the root or already in the tree, or `parent` is not.
    pub fn attach(&mut self, child: VertexId, parent: VertexId) {
        assert_ne!(child, self.root, "cannot attach the root beneath a parent");
        assert!(!self.parents.contains_key(&child), "vertex already in tree");
        assert!(self.contains(parent), "parent not in tree");
        self.parents.insert(child, parent);
    }

    /// Sets the weight of `v`. No constraints are enforced here; validation
    /// reports weights on the root or off the tree.
    pub fn set_weight(&mut self, v: VertexId, w: Rational) {
        if w.is_zero() {
            self.weights.remove(&v);
        } else {
            self.weights.insert(v, w);
        }
    }

    /// The weight of `v` (zero for the root and for vertices off the tree).
    pub fn weight(&self, v: VertexId) -> Rational {
        self.weights.get(&v).copied().unwrap_or(Rational::ZERO)
    }

    /// The parent of `v`, or `None` for the root and vertices off the tree.
    pub fn parent_of(&self, v: VertexId) -> Option<VertexId> {
        self.parents.get(&v).copied()
    }

    /// Whether `v` is a tree vertex (the root counts).
    pub fn contains(&self, v: VertexId) -> bool {
        v == self.root || self.parents.contains_key(&v)
    }

    /// All tree vertices including the root, in ascending id order.
    pub fn tree_vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.parents.keys().copied().collect();
        vs.push(self.root);
        vs.sort_unstable();
        vs
    }

    /// The children of `v`, in ascending id order.
    pub fn children_of(&self, v: VertexId) -> Vec<VertexId> {
        self.parents
            .iter()
            .filter(|&(_, &p)| p == v)
            .map(|(&c, _)| c)
            .collect()
    }

    /// Number of tree vertices, root included.
    pub fn order(&self) -> usize {
        self.parents.len() + 1
    }

    /// Total weight `|ω|` of the strategy.
    pub fn total_weight(&self) -> Rational {
        self.weights.values().copied().sum()
    }

    /// The weight `ω(C) = Σ_v ω(v)·C(v)` of a pebble configuration.
    pub fn config_weight(&self, config: &Configuration) -> Rational {
        self.weights
            .iter()
            .map(|(&v, &w)| w * i64::from(config.get(v)))
            .sum()
    }

    /// Tree edges as `(parent, child)` pairs in breadth-first order from the
    /// root, visiting each vertex's children in label order.
    pub fn edges_breadth_first(&self, g: &Graph) -> Vec<(VertexId, VertexId)> {
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            let mut children = self.children_of(v);
            children.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
            for c in children {
                order.push((v, c));
                queue.push_back(c);
            }
        }
        order
    }
}

/// A way a strategy can fail validation against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyViolation {
    /// The strategy is a bare root with no edges.
    #[error("strategy has no edges")]
    TooSmall,
    /// A vertex id is outside the graph.
    #[error("vertex id {0} is outside the graph")]
    VertexOutOfRange(VertexId),
    /// A tree edge is not a graph edge.
    #[error("tree edge {parent} -- {child} is not an edge of the graph")]
    NotAnEdge {
        /// Parent endpoint label.
        parent: String,
        /// Child endpoint label.
        child: String,
    },
    /// The root carries a nonzero weight.
    #[error("root {0} must have weight zero")]
    RootWeighted(String),
    /// A vertex outside the tree carries a nonzero weight.
    #[error("vertex {0} has weight but is not in the tree")]
    OffTreeWeight(String),
    /// A negative weight.
    #[error("vertex {vertex} has negative weight {weight}")]
    NegativeWeight {
        /// Vertex label.
        vertex: String,
        /// The offending weight.
        weight: Rational,
    },
    /// A non-root parent lighter than twice its child.
    #[error("weight of {parent} ({parent_weight}) is less than twice the weight of {child} ({child_weight})")]
    ParentLawViolated {
        /// Parent label.
        parent: String,
        /// Parent weight.
        parent_weight: Rational,
        /// Child label.
        child: String,
        /// Child weight.
        child_weight: Rational,
    },
}

/// Checks one strategy against a graph, returning every violation found.
pub fn validate_strategy(g: &Graph, s: &Strategy) -> Vec<StrategyViolation> {
    let n = g.vertex_count();
    let mut range_violations: Vec<StrategyViolation> = Vec::new();
    let mut seen_out_of_range = std::collections::BTreeSet::new();
    let mut check_range = |v: VertexId, out: &mut Vec<StrategyViolation>| {
        if v >= n && seen_out_of_range.insert(v) {
            out.push(StrategyViolation::VertexOutOfRange(v));
        }
    };
    check_range(s.root, &mut range_violations);
    for (&child, &parent) in &s.parents {
        check_range(child, &mut range_violations);
        check_range(parent, &mut range_violations);
    }
    for &v in s.weights.keys() {
        check_range(v, &mut range_violations);
    }
    if !range_violations.is_empty() {
        // Label lookups below would be meaningless; report the range problems.
        return range_violations;
    }

    let mut out = Vec::new();
    if s.order() < 2 {
        out.push(StrategyViolation::TooSmall);
    }
    for (&child, &parent) in &s.parents {
        if !g.has_edge(child, parent) {
            out.push(StrategyViolation::NotAnEdge {
                parent: g.label(parent).to_string(),
                child: g.label(child).to_string(),
            });
        }
    }
    for (&v, &w) in &s.weights {
        if w.is_negative() {
            out.push(StrategyViolation::NegativeWeight {
                vertex: g.label(v).to_string(),
                weight: w,
            });
        } else if v == s.root {
            out.push(StrategyViolation::RootWeighted(g.label(v).to_string()));
        } else if !s.contains(v) {
            out.push(StrategyViolation::OffTreeWeight(g.label(v).to_string()));
        }
    }
    for (&child, &parent) in &s.parents {
        if parent == s.root {
            continue;
        }
        let pw = s.weight(parent);
        let cw = s.weight(child);
        if pw < cw * 2 {
            out.push(StrategyViolation::ParentLawViolated {
                parent: g.label(parent).to_string(),
                parent_weight: pw,
                child: g.label(child).to_string(),
                child_weight: cw,
            });
        }
    }
    out
}

/// A strategy violation tagged with which strategy it occurred in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateViolation {
    /// Zero-based index into the certificate's strategies.
    pub strategy: usize,
    /// The violation itself.
    pub violation: StrategyViolation,
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strategy {}: {}", self.strategy + 1, self.violation)
    }
}

/// Errors from certificate construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    /// A certificate must contain at least one strategy.
    #[error("certificate has no strategies")]
    Empty,
    /// All strategies must share the certificate's root.
    #[error("strategy {index} is rooted at a different vertex than the certificate")]
    RootMismatch {
        /// Zero-based strategy index.
        index: usize,
    },
    /// The root has no combined weight by definition.
    #[error("the root carries no weight; combined weight is defined only for non-root vertices")]
    RootHasNoWeight,
    /// Some non-root vertex has combined weight zero, so no ratio exists.
    #[error("no bound: vertex {vertex} has combined weight zero")]
    ZeroMinWeight {
        /// Label of an uncovered vertex.
        vertex: String,
    },
    /// The certificate failed validation.
    #[error("certificate is invalid ({} violation{})", .violations.len(), if .violations.len() == 1 { "" } else { "s" })]
    Invalid {
        /// Everything that failed.
        violations: Vec<CertificateViolation>,
    },
}

/// A collection of strategies with a common root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    root: VertexId,
    strategies: Vec<Strategy>,
}

impl Certificate {
    /// Builds a certificate, checking that it is nonempty and that every
    /// strategy is rooted at `root`.
    pub fn new(root: VertexId, strategies: Vec<Strategy>) -> Result<Self, CertificateError> {
        if strategies.is_empty() {
            return Err(CertificateError::Empty);
        }
        for (index, s) in strategies.iter().enumerate() {
            if s.root() != root {
                return Err(CertificateError::RootMismatch { index });
            }
        }
        Ok(Certificate { root, strategies })
    }

    /// The common root.
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// The strategies, in order.
    pub fn strategies(&self) -> &[Strategy] {
        &self.strategies
    }

    /// Checks every strategy against the graph.
    pub fn validate(&self, g: &Graph) -> Vec<CertificateViolation> {
        self.strategies
            .iter()
            .enumerate()
            .flat_map(|(strategy, s)| {
                validate_strategy(g, s)
                    .into_iter()
                    .map(move |violation| CertificateViolation { strategy, violation })
            })
            .collect()
    }

    /// Total weight `Σ_T |ω_T|` across all strategies.
    pub fn total_weight(&self) -> Rational {
        self.strategies.iter().map(Strategy::total_weight).sum()
    }

    /// Combined weight `ω(v)` of a non-root vertex across all strategies.
    pub fn combined_weight(&self, v: VertexId) -> Result<Rational, CertificateError> {
        if v == self.root {
            return Err(CertificateError::RootHasNoWeight);
        }
        Ok(self.strategies.iter().map(|s| s.weight(v)).sum())
    }

    /// The minimum combined weight over all non-root vertices of the graph
    /// (zero if any vertex is uncovered).
    pub fn min_combined_weight(&self, g: &Graph) -> Rational {
        g.vertices()
            .filter(|&v| v != self.root)
            .map(|v| self.combined_weight(v).expect("non-root vertex"))
            .min()
            .unwrap_or(Rational::ZERO)
    }

    /// The certificate's ratio `λ = total weight / ω_min`.
    ///
    /// This is pure arithmetic; it is an upper-bound witness only when
    /// [`Certificate::validate`] reports no violations.
    pub fn wfl_ratio(&self, g: &Graph) -> Result<Rational, CertificateError> {
        let min = self.min_combined_weight(g);
        if min.is_zero() {
            let vertex = g
                .vertices()
                .filter(|&v| v != self.root)
                .find(|&v| self.combined_weight(v).expect("non-root").is_zero())
                .map(|v| g.label(v).to_string())
                .unwrap_or_else(|| "<none>".to_string());
            return Err(CertificateError::ZeroMinWeight { vertex });
        }
        Ok(self.total_weight() / min)
    }

    /// Validates the certificate, then returns `⌊λ⌋ + 1`, an upper bound on
    /// the pebbling number of the graph with the certificate's root as
    /// target.
    pub fn pebbling_upper_bound(&self, g: &Graph) -> Result<u64, CertificateError> {
        let violations = self.validate(g);
        if !violations.is_empty() {
            return Err(CertificateError::Invalid { violations });
        }
        let lambda = self.wfl_ratio(g)?;
        Ok((lambda.floor() + 1) as u64)
    }

    /// The weight of a configuration summed across all strategies.
    pub fn config_weight(&self, config: &Configuration) -> Rational {
        self.strategies.iter().map(|s| s.config_weight(config)).sum()
    }

    /// Decomposes `λ` as `(n − 1) + Σ_v surplus(v) / ω_min` where
    /// `surplus(v) = ω(v) − ω_min ≥ 0`: the ratio exceeds the best possible
    /// value `n − 1` by exactly the normalized total surplus.
    pub fn surplus_report(&self, g: &Graph) -> Result<SurplusReport, CertificateError> {
        let lambda = self.wfl_ratio(g)?;
        let omega_min = self.min_combined_weight(g);
        let per_vertex_surplus: Vec<(VertexId, Rational)> = g
            .vertices()
            .filter(|&v| v != self.root)
            .map(|v| {
                let w = self.combined_weight(v).expect("non-root vertex");
                (v, w - omega_min)
            })
            .collect();
        Ok(SurplusReport {
            n_minus_1: g.vertex_count() - 1,
            omega_min,
            per_vertex_surplus,
            lambda,
        })
    }
}

/// Decomposition of a certificate's ratio into the ideal part `n − 1` plus
/// normalized per-vertex surplus. See [`Certificate::surplus_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurplusReport {
    /// One less than the number of vertices.
    pub n_minus_1: usize,
    /// The minimum combined weight.
    pub omega_min: Rational,
    /// For each non-root vertex, its combined weight minus `omega_min`.
    pub per_vertex_surplus: Vec<(VertexId, Rational)>,
    /// The certificate's ratio.
    pub lambda: Rational,
}

impl SurplusReport {
    /// Recomputes the ratio from the decomposition; equals `lambda` exactly.
    pub fn lambda_via_surplus(&self) -> Rational {
        let surplus: Rational = self.per_vertex_surplus.iter().map(|&(_, s)| s).sum();
        Rational::from_int(self.n_minus_1 as i64) + surplus / self.omega_min
    }
}

/// A pebble configuration: a count per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    counts: Vec<u32>,
}

impl Configuration {
    /// The empty configuration on `n` vertices.
    pub fn new(n: usize) -> Self {
        Configuration { counts: vec![0; n] }
    }

    /// Wraps an explicit count vector.
    pub fn from_counts(counts: Vec<u32>) -> Self {
        Configuration { counts }
    }

    /// Builds a configuration from `(label, count)` pairs; absent labels get
    /// zero.
    pub fn from_pairs(g: &Graph, pairs: &[(&str, u32)]) -> Result<Self, GraphError> {
        let mut counts = vec![0; g.vertex_count()];
        for &(label, count) in pairs {
            counts[g.require_vertex(label)?] = count;
        }
        Ok(Configuration { counts })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    /// Whether every count is zero.
    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// The count on vertex `v`.
    pub fn get(&self, v: VertexId) -> u32 {
        self.counts[v]
    }

    /// Sets the count on vertex `v`.
    pub fn set(&mut self, v: VertexId, count: u32) {
        self.counts[v] = count;
    }

    /// Total number of pebbles.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// The raw counts, indexed by vertex id.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// The nonzero counts as `(label, count)` pairs in vertex-id order.
    pub fn to_pairs(&self, g: &Graph) -> Vec<(String, u32)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(v, &c)| (g.label(v).to_string(), c))
            .collect()
    }
}

/// Errors from parsing certificate text.
#[derive(Debug, Error)]
pub enum CertificateParseError {
    /// Malformed line.
    #[error("line {line}: {message}")]
    Syntax {
        /// One-based line number.
        line: usize,
        /// What went wrong.
        message: String,
    },
    /// A label that is not a vertex of the graph.
    #[error("line {line}: unknown vertex {label:?}")]
    UnknownVertex {
        /// One-based line number.
        line: usize,
        /// The unresolvable label.
        label: String,
    },
    /// A weight that is not an integer or `p/q` rational.
    #[error("line {line}: invalid rational {text:?}")]
    InvalidRational {
        /// One-based line number.
        line: usize,
        /// The unparsable text.
        text: String,
    },
    /// The certificate names one graph but was applied to another.
    #[error("certificate is for graph {found:?} but was applied to {expected:?}")]
    GraphMismatch {
        /// Name of the graph supplied.
        expected: String,
        /// Name recorded in the certificate.
        found: String,
    },
    /// A family name with an invalid parameter.
    #[error(transparent)]
    Family(#[from] families::FamilyError),
    /// The graph name is neither a family nor a readable file.
    #[error("cannot resolve graph {name:?}: not a family name or readable graph file")]
    UnknownGraph {
        /// The unresolvable name.
        name: String,
    },
    /// The graph file exists but does not parse.
    #[error("graph file {path:?}: {message}")]
    GraphFile {
        /// The path that was read.
        path: String,
        /// The underlying parse failure.
        message: String,
    },
}

/// Resolves a graph reference: a family name (`petersen`, `flower7`, …) or a
/// path to a graph text file.
pub fn resolve_graph(name: &str) -> Result<Graph, CertificateParseError> {
    match families::by_name(name) {
        Ok(fam) => Ok(fam.graph),
        Err(families::FamilyError::UnknownFamily(_)) => match std::fs::read_to_string(name) {
            Ok(text) => Graph::parse(&text).map_err(|e| CertificateParseError::GraphFile {
                path: name.to_string(),
                message: e.to_string(),
            }),
            Err(_) => Err(CertificateParseError::UnknownGraph {
                name: name.to_string(),
            }),
        },
        Err(e) => Err(e.into()),
    }
}

struct PendingStrategy {
    // (line, parent label, child label)
    edges: Vec<(usize, String, String)>,
    // (line, vertex label, weight)
    weights: Vec<(usize, String, Rational)>,
}

fn finish_strategy(
    g: &Graph,
    root: VertexId,
    pending: PendingStrategy,
) -> Result<Strategy, CertificateParseError> {
    let mut strategy = Strategy::new(root);
    // (line, parent id, child id)
    let mut edges = Vec::with_capacity(pending.edges.len());
    for (line, parent, child) in pending.edges {
        let resolve = |label: &str| {
            g.vertex(label).ok_or(CertificateParseError::UnknownVertex {
                line,
                label: label.to_string(),
            })
        };
        edges.push((line, resolve(&parent)?, resolve(&child)?));
    }
    // Attach edges whose parent end is already in the tree; edge order in the
    // file is free as long as the edges form a tree rooted at the root.
    let mut remaining = edges;
    loop {
        let before = remaining.len();
        remaining.retain(|&(line, parent, child)| {
            if !strategy.contains(parent) {
                return true;
            }
            if strategy.contains(child) {
                // Keep it; reported below as unattachable (duplicate parent
                // or an edge back into the tree).
                return true;
            }
            let _ = line;
            strategy.attach(child, parent);
            false
        });
        if remaining.is_empty() || remaining.len() == before {
            break;
        }
    }
    if let Some(&(line, parent, child)) = remaining.first() {
        let message = if strategy.contains(child) || child == root {
            format!(
                "edge {} -- {} gives {} a second parent",
                g.label(parent),
                g.label(child),
                g.label(child)
            )
        } else {
            format!(
                "edge {} -- {} does not connect to the root",
                g.label(parent),
                g.label(child)
            )
        };
        return Err(CertificateParseError::Syntax { line, message });
    }
    let mut seen = std::collections::BTreeSet::new();
    for (line, label, weight) in pending.weights {
        let v = g.vertex(&label).ok_or(CertificateParseError::UnknownVertex {
            line,
            label: label.clone(),
        })?;
        if !seen.insert(v) {
            return Err(CertificateParseError::Syntax {
                line,
                message: format!("duplicate weight for {label}"),
            });
        }
        strategy.set_weight(v, weight);
    }
    Ok(strategy)
}

/// Parses certificate text, resolving the graph it names (family name or
/// graph file path). Returns the graph together with the certificate.
pub fn parse_certificate(text: &str) -> Result<(Graph, Certificate), CertificateParseError> {
    let (line, name) = graph_reference(text)?;
    let _ = line;
    let graph = resolve_graph(&name)?;
    // The graph was resolved from the header itself, so accept that name
    // even when it is a file path rather than the graph's internal name.
    let certificate = parse_certificate_expecting(text, &graph, &name)?;
    Ok((graph, certificate))
}

fn graph_reference(text: &str) -> Result<(usize, String), CertificateParseError> {
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        if parts.next() == Some("graph") {
            let name = parts.next().ok_or(CertificateParseError::Syntax {
                line,
                message: "expected `graph <name-or-path>`".to_string(),
            })?;
            return Ok((line, name.to_string()));
        }
    }
    Err(CertificateParseError::Syntax {
        line: text.lines().count() + 1,
        message: "missing `graph` line".to_string(),
    })
}

/// Parses certificate text against an already-loaded graph. The text's
/// `graph` line must match the graph's name.
pub fn parse_certificate_for_graph(
    text: &str,
    g: &Graph,
) -> Result<Certificate, CertificateParseError> {
    parse_certificate_expecting(text, g, g.name())
}

fn parse_certificate_expecting(
    text: &str,
    g: &Graph,
    expected_name: &str,
) -> Result<Certificate, CertificateParseError> {
    let syntax = |line: usize, message: String| CertificateParseError::Syntax { line, message };

    let mut saw_header = false;
    let mut graph_name: Option<String> = None;
    let mut root: Option<VertexId> = None;
    let mut pending: Option<PendingStrategy> = None;
    let mut strategies = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let keyword = parts.next().expect("nonempty line");
        let mut arg = |what: &str| {
            parts
                .next()
                .map(str::to_string)
                .ok_or_else(|| syntax(line, format!("expected {what}")))
        };
        if !saw_header {
            if keyword != "certificate" {
                return Err(syntax(line, "expected `certificate` header".to_string()));
            }
            saw_header = true;
            continue;
        }
        match keyword {
            "certificate" => return Err(syntax(line, "duplicate `certificate` header".to_string())),
            "graph" => {
                if graph_name.is_some() {
                    return Err(syntax(line, "duplicate `graph` line".to_string()));
                }
                if root.is_some() || pending.is_some() {
                    return Err(syntax(line, "`graph` must precede `root`".to_string()));
                }
                let name = arg("a graph name")?;
                if name != expected_name {
                    return Err(CertificateParseError::GraphMismatch {
                        expected: expected_name.to_string(),
                        found: name,
                    });
                }
                graph_name = Some(name);
            }
            "root" => {
                if root.is_some() {
                    return Err(syntax(line, "duplicate `root` line".to_string()));
                }
                if graph_name.is_none() {
                    return Err(syntax(line, "`root` must follow `graph`".to_string()));
                }
                let label = arg("a root label")?;
                root = Some(g.vertex(&label).ok_or(CertificateParseError::UnknownVertex {
                    line,
                    label,
                })?);
            }
            "strategy" => {
                if root.is_none() {
                    return Err(syntax(line, "`strategy` must follow `root`".to_string()));
                }
                if let Some(done) = pending.take() {
                    strategies.push(finish_strategy(g, root.unwrap(), done)?);
                }
                pending = Some(PendingStrategy {
                    edges: Vec::new(),
                    weights: Vec::new(),
                });
            }
            "edge" => {
                let block = pending
                    .as_mut()
                    .ok_or_else(|| syntax(line, "`edge` outside a strategy block".to_string()))?;
                let parent = arg("a parent label")?;
                let child = arg("a child label")?;
                block.edges.push((line, parent, child));
            }
            "weight" => {
                let block = pending
                    .as_mut()
                    .ok_or_else(|| syntax(line, "`weight` outside a strategy block".to_string()))?;
                let vertex = arg("a vertex label")?;
                let value = arg("a weight value")?;
                let weight: Rational =
                    value
                        .parse()
                        .map_err(|_| CertificateParseError::InvalidRational {
                            line,
                            text: value.clone(),
                        })?;
                block.weights.push((line, vertex, weight));
            }
            other => {
                return Err(syntax(line, format!("unknown keyword {other:?}")));
            }
        }
        if parts.next().is_some() {
            return Err(syntax(line, "trailing tokens".to_string()));
        }
    }
    if !saw_header {
        return Err(syntax(1, "empty certificate text".to_string()));
    }
    let root = root.ok_or_else(|| {
        syntax(text.lines().count() + 1, "missing `root` line".to_string())
    })?;
    if let Some(done) = pending.take() {
        strategies.push(finish_strategy(g, root, done)?);
    }
    Certificate::new(root, strategies).map_err(|e| match e {
        CertificateError::Empty => syntax(
            text.lines().count() + 1,
            "certificate has no strategy blocks".to_string(),
        ),
        other => syntax(text.lines().count() + 1, other.to_string()),
    })
}

/// Renders a certificate in the text format accepted by
/// [`parse_certificate_for_graph`]: edges in breadth-first order from the
/// root (children in label order), then weights in label order.
pub fn serialize_certificate(cert: &Certificate, g: &Graph) -> String {
    serialize_certificate_as(cert, g, g.name())
}

/// Serializes with an explicit `graph` header, for certificates that should
/// point back at a graph file rather than the graph's internal name.
pub fn serialize_certificate_as(cert: &Certificate, g: &Graph, graph_ref: &str) -> String {
    let mut out = String::new();
    out.push_str("certificate\n");
    out.push_str(&format!("graph {graph_ref}\n"));
    out.push_str(&format!("root {}\n", g.label(cert.root())));
    for s in cert.strategies() {
        out.push_str("strategy\n");
        for (parent, child) in s.edges_breadth_first(g) {
            out.push_str(&format!("edge {} {}\n", g.label(parent), g.label(child)));
        }
        let mut weighted: Vec<VertexId> = s
            .tree_vertices()
            .into_iter()
            .filter(|&v| !s.weight(v).is_zero())
            .collect();
        weighted.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
        for v in weighted {
            out.push_str(&format!("weight {} {}\n", g.label(v), s.weight(v)));
        }
    }
    out
}
