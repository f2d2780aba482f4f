//! Automated certificate construction.
//!
//! The four-step pipeline builds a certificate for a root `r` from graph
//! metrics alone:
//!
//! 1. one strategy per neighbor `v_j` of `r`, with `v_j` as the only child
//!    of the root;
//! 2. a target coverage level `ω_min`, computed from distances in `G − r`:
//!    `ω_min = min over peripherals u of Σ_j 2^{e(r)−1−d_{G−r}(v_j, u)}`;
//! 3. trunks: shortest paths from each `v_j` to every peripheral vertex,
//!    merged into a tree per strategy with depth-geometric weights, the
//!    path combination chosen to minimize total surplus;
//! 4. branches: remaining vertices are lifted to `ω_min` by attaching them
//!    under tree vertices with spare weight capacity, raising ancestor
//!    weights minimally when capacity is short.
//!
//! Two refinement moves then shave surplus: lowering weights wherever the
//! parent-doubling law and coverage both permit, and re-routing a single
//! trunk path through a slightly longer one when that strictly reduces the
//! certificate ratio.
//!
//! The module also carries hand-built reference certificates for the bundled
//! families (with closed-form generators for flower snarks and hypercubes).

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::certificate::{Certificate, Strategy};
use crate::families::{self, Family, FamilyGraph};
use crate::graph::{Graph, PathEnumError, VertexId};
use crate::rational::Rational;

/// Knobs for the construction pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeuristicOptions {
    /// Exhaustive path-combination search budget for step 3; beyond it the
    /// selection falls back to a greedy sweep (recorded in the decision log).
    pub path_combination_cap: usize,
    /// Extra length allowed when re-routing a trunk path (`shortest + L`).
    pub extra_path_length: u32,
    /// Enable the weight-lowering refinement.
    pub enable_weight_reduction: bool,
    /// Enable the path-replacement refinement.
    pub enable_path_replacement: bool,
}

impl Default for HeuristicOptions {
    fn default() -> Self {
        HeuristicOptions {
            path_combination_cap: 100_000,
            extra_path_length: 2,
            enable_weight_reduction: true,
            enable_path_replacement: true,
        }
    }
}

/// Cap on shortest paths enumerated per (neighbor, peripheral) pair; beyond
/// it the lexicographically first path is used and the fallback is logged.
const PER_PAIR_PATH_CAP: usize = 10_000;
/// Cap on alternative paths examined per pair during path replacement.
const REPLACEMENT_PATH_CAP: usize = 10_000;
/// Refinement pass budget.
const REFINE_PASS_CAP: usize = 10;
/// Work budget for [`cube_certificate`]: `d! · 2^d` must stay below this.
const CUBE_WORK_BUDGET: u64 = 1_000_000;

/// Errors from certificate construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeuristicError {
    /// A peripheral vertex unreachable from every neighbor of the root once
    /// the root is removed. Cannot occur for a connected graph; kept as a
    /// defensive guard.
    #[error("peripheral vertex {vertex} is unreachable from every neighbor of the root in the root-deleted graph")]
    PeripheralUnreachable {
        /// The stranded peripheral.
        vertex: String,
    },
    /// A vertex that neither borders any strategy tree nor belongs to one.
    #[error("vertex {vertex} cannot be lifted to the minimum weight: it neither borders nor belongs to any strategy tree")]
    CannotCover {
        /// The uncoverable vertex.
        vertex: String,
    },
    /// No bundled certificate for this (family, target).
    #[error("no bundled certificate for target {target:?} of {family}")]
    UnsupportedTarget {
        /// Family name.
        family: String,
        /// Requested target label.
        target: String,
    },
    /// Parameter outside a generator's domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Work beyond the configured budget.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// Internal construction failure (defensive; indicates a bug).
    #[error("internal construction failure: {0}")]
    Internal(String),
}

/// Output of [`run_heuristic`].
#[derive(Debug, Clone)]
pub struct HeuristicReport {
    /// The finished certificate (validates against the graph).
    pub certificate: Certificate,
    /// The step-2 formula value of `ω_min` (the final certificate's actual
    /// minimum combined weight can differ after refinement).
    pub omega_min_formula: Rational,
    /// Peripheral vertices attaining the formula minimum.
    pub minimizers: Vec<VertexId>,
    /// The certificate ratio `λ`, recomputed from the final certificate.
    pub lambda: Rational,
    /// Per-vertex surplus decomposition of `λ`.
    pub surplus: crate::certificate::SurplusReport,
    /// Human-readable record of every choice the pipeline made.
    pub decisions: Vec<String>,
}

/// `2^exp` as an exact rational (negative exponents allowed).
fn pow2r(exp: i64) -> Rational {
    Rational::pow2(exp as i32)
}

/// Step 2: the coverage target
/// `ω_min = min over u ∈ P(r) of Σ_j 2^{e(r)−1−d_{G−r}(v_j, u)}`,
/// together with the peripheral vertices attaining it. Neighbor terms with
/// no root-free path to `u` contribute nothing.
pub fn min_weight_formula(
    g: &Graph,
    root: VertexId,
) -> Result<(Rational, Vec<VertexId>), HeuristicError> {
    let e = i64::from(g.eccentricity(root));
    let neighbors = g.neighbors(root);
    let peripherals = g.peripheral_vertices(root);
    let dists: Vec<Vec<Option<u32>>> = neighbors
        .iter()
        .map(|&v| g.distances_avoiding(v, &[root]))
        .collect();
    let mut best: Option<Rational> = None;
    let mut minimizers = Vec::new();
    for &u in &peripherals {
        let mut value = Rational::ZERO;
        let mut reachable = false;
        for d in &dists {
            if let Some(duv) = d[u] {
                value += pow2r(e - 1 - i64::from(duv));
                reachable = true;
            }
        }
        if !reachable {
            return Err(HeuristicError::PeripheralUnreachable {
                vertex: g.label(u).to_string(),
            });
        }
        match best {
            Some(b) if value > b => {}
            Some(b) if value == b => minimizers.push(u),
            _ => {
                best = Some(value);
                minimizers = vec![u];
            }
        }
    }
    let omega_min = best.ok_or(HeuristicError::PeripheralUnreachable {
        vertex: g.label(root).to_string(),
    })?;
    minimizers.sort_unstable();
    Ok((omega_min, minimizers))
}

/// One (neighbor, peripheral) trunk requirement with its candidate paths.
struct TrunkPair {
    /// Index into the sorted neighbor list (= strategy index).
    strategy: usize,
    /// Candidate root-free shortest paths, lexicographically sorted; during
    /// path replacement, longer alternatives may be appended.
    options: Vec<Vec<VertexId>>,
    /// Index of the currently selected path.
    chosen: usize,
}

/// The full pipeline state: requirement pairs plus everything needed to
/// rebuild strategies from a path assignment.
struct Pipeline<'g> {
    g: &'g Graph,
    root: VertexId,
    ecc: i64,
    neighbors: Vec<VertexId>,
    /// Root-free distances from each neighbor.
    dists: Vec<Vec<Option<u32>>>,
    omega_min: Rational,
    pairs: Vec<TrunkPair>,
    opts: HeuristicOptions,
    log: Vec<String>,
}

impl<'g> Pipeline<'g> {
    fn new(
        g: &'g Graph,
        root: VertexId,
        omega_min: Rational,
        opts: HeuristicOptions,
    ) -> Result<Self, HeuristicError> {
        let neighbors = g.neighbors(root).to_vec();
        let dists: Vec<Vec<Option<u32>>> = neighbors
            .iter()
            .map(|&v| g.distances_avoiding(v, &[root]))
            .collect();
        let mut pipeline = Pipeline {
            g,
            root,
            ecc: i64::from(g.eccentricity(root)),
            neighbors,
            dists,
            omega_min,
            pairs: Vec::new(),
            opts,
            log: Vec::new(),
        };
        pipeline.collect_pairs()?;
        pipeline.select_combination();
        Ok(pipeline)
    }

    /// Trunk weight of `v` in strategy `j` (the step-3 formula).
    fn trunk_weight(&self, j: usize, v: VertexId) -> Rational {
        let d = self.dists[j][v].expect("trunk vertices are reachable");
        pow2r(self.ecc - 1 - i64::from(d))
    }

    fn collect_pairs(&mut self) -> Result<(), HeuristicError> {
        let peripherals = self.g.peripheral_vertices(self.root);
        for (j, &vj) in self.neighbors.iter().enumerate() {
            for &u in &peripherals {
                if self.dists[j][u].is_none() {
                    // No root-free route from this neighbor; the pair
                    // contributes nothing (another neighbor covers u).
                    continue;
                }
                let options = match self.g.all_shortest_paths_avoiding(
                    vj,
                    u,
                    &[self.root],
                    PER_PAIR_PATH_CAP,
                ) {
                    Ok(paths) => paths,
                    Err(PathEnumError::TooManyPaths { .. }) => {
                        self.log.push(format!(
                            "step 3: over {PER_PAIR_PATH_CAP} shortest paths from {} to {}; using the lexicographically first",
                            self.g.label(vj),
                            self.g.label(u)
                        ));
                        vec![self
                            .g
                            .first_shortest_path_avoiding(vj, u, &[self.root])
                            .expect("reachable pair has a path")]
                    }
                    Err(PathEnumError::NoPath) => unreachable!("distance known finite"),
                };
                self.pairs.push(TrunkPair {
                    strategy: j,
                    options,
                    chosen: 0,
                });
            }
        }
        Ok(())
    }

    /// Total surplus `Σ_v max(0, ω(v) − ω_min)` of a path assignment, where
    /// `ω` counts each strategy's trunk vertices once.
    fn assignment_surplus(&self, choice: &[usize]) -> Rational {
        let n = self.g.vertex_count();
        let mut combined = vec![Rational::ZERO; n];
        let mut seen = vec![usize::MAX; n];
        for (j, &vj) in self.neighbors.iter().enumerate() {
            seen[vj] = j;
            combined[vj] += self.trunk_weight(j, vj);
        }
        for (pair, &c) in self.pairs.iter().zip(choice) {
            let j = pair.strategy;
            for &v in &pair.options[c] {
                if seen[v] != j {
                    seen[v] = j;
                    combined[v] += self.trunk_weight(j, v);
                }
            }
        }
        let mut surplus = Rational::ZERO;
        for (v, &w) in combined.iter().enumerate() {
            if v != self.root && w > self.omega_min {
                surplus += w - self.omega_min;
            }
        }
        surplus
    }

    /// Step 3 selection: exhaustive over all path combinations when the
    /// product fits the cap, else a greedy sweep over pairs ordered by
    /// descending root-free distance.
    fn select_combination(&mut self) {
        if self.pairs.is_empty() {
            return;
        }
        let mut total: usize = 1;
        let mut overflow = false;
        for p in &self.pairs {
            total = match total.checked_mul(p.options.len()) {
                Some(t) if t <= self.opts.path_combination_cap => t,
                _ => {
                    overflow = true;
                    break;
                }
            };
        }
        if !overflow {
            // Odometer over pair-local indices, lexicographic; ties keep the
            // first (lexicographically least) assignment.
            let mut choice = vec![0usize; self.pairs.len()];
            let mut best_choice = choice.clone();
            let mut best = self.assignment_surplus(&choice);
            'odometer: loop {
                let mut idx = self.pairs.len();
                loop {
                    if idx == 0 {
                        break 'odometer;
                    }
                    idx -= 1;
                    if choice[idx] + 1 < self.pairs[idx].options.len() {
                        choice[idx] += 1;
                        for later in choice.iter_mut().skip(idx + 1) {
                            *later = 0;
                        }
                        break;
                    }
                }
                let s = self.assignment_surplus(&choice);
                if s < best {
                    best = s;
                    best_choice.copy_from_slice(&choice);
                }
            }
            for (pair, &c) in self.pairs.iter_mut().zip(&best_choice) {
                pair.chosen = c;
            }
            self.log.push(format!(
                "step 3: searched all {total} path combinations; best total surplus {best}"
            ));
            return;
        }
        // Greedy: farthest pairs first, each picking the path that adds the
        // least surplus given what is already placed.
        let n = self.g.vertex_count();
        let mut combined = vec![Rational::ZERO; n];
        let mut seen = vec![usize::MAX; n];
        for (j, &vj) in self.neighbors.iter().enumerate() {
            seen[vj] = j;
            combined[vj] += self.trunk_weight(j, vj);
        }
        let mut order: Vec<usize> = (0..self.pairs.len()).collect();
        order.sort_by_key(|&i| {
            let p = &self.pairs[i];
            let u = *p.options[0].last().expect("paths are nonempty");
            (Reverse(self.dists[p.strategy][u]), p.strategy, u)
        });
        for i in order {
            let (j, best_idx) = {
                let pair = &self.pairs[i];
                let j = pair.strategy;
                let mut best_idx = 0;
                let mut best_cost: Option<Rational> = None;
                for (idx, path) in pair.options.iter().enumerate() {
                    let mut cost = Rational::ZERO;
                    for &v in path {
                        if seen[v] == j {
                            continue;
                        }
                        let w = combined[v] + self.trunk_weight(j, v);
                        if w > self.omega_min {
                            cost += w - self.omega_min.max(combined[v]);
                        }
                    }
                    if best_cost.is_none_or(|b| cost < b) {
                        best_cost = Some(cost);
                        best_idx = idx;
                    }
                }
                (j, best_idx)
            };
            self.pairs[i].chosen = best_idx;
            let path = self.pairs[i].options[best_idx].clone();
            for &v in &path {
                if seen[v] != j {
                    seen[v] = j;
                    combined[v] += self.trunk_weight(j, v);
                }
            }
        }
        self.log.push(format!(
            "step 3: combination space exceeds cap {}; greedy selection over {} pairs",
            self.opts.path_combination_cap,
            self.pairs.len()
        ));
    }

    /// Merges each strategy's chosen paths into a tree: breadth-first from
    /// the neighbor over the union of path edges, children in ascending id
    /// order, every vertex weighted `2^{e−1−depth}` by its tree depth. For
    /// shortest paths the depth equals the root-free graph distance, so
    /// this is the step-3 formula; when path replacement routes through a
    /// longer path, the depth weighting keeps the doubling law intact.
    fn merge_trunks(&self, choice: Option<&[usize]>) -> Vec<Strategy> {
        let mut strategies = Vec::with_capacity(self.neighbors.len());
        for (j, &vj) in self.neighbors.iter().enumerate() {
            let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
            adjacency.entry(vj).or_default();
            for (i, pair) in self.pairs.iter().enumerate() {
                if pair.strategy != j {
                    continue;
                }
                let c = choice.map_or(pair.chosen, |ch| ch[i]);
                let path = &pair.options[c];
                for w in path.windows(2) {
                    adjacency.entry(w[0]).or_default().insert(w[1]);
                    adjacency.entry(w[1]).or_default().insert(w[0]);
                }
            }
            let mut s = Strategy::new(self.root);
            s.attach(vj, self.root);
            s.set_weight(vj, pow2r(self.ecc - 1));
            let mut queue = VecDeque::from([(vj, 0i64)]);
            while let Some((v, depth)) = queue.pop_front() {
                if let Some(next) = adjacency.get(&v) {
                    for &u in next {
                        if u != self.root && !s.contains(u) {
                            s.attach(u, v);
                            s.set_weight(u, pow2r(self.ecc - 1 - depth - 1));
                            queue.push_back((u, depth + 1));
                        }
                    }
                }
            }
            strategies.push(s);
        }
        strategies
    }
}

/// Combined (cross-strategy) weights per vertex.
fn combined_weights(g: &Graph, root: VertexId, strategies: &[Strategy]) -> Vec<Rational> {
    let mut combined = vec![Rational::ZERO; g.vertex_count()];
    for s in strategies {
        for v in s.tree_vertices() {
            if v != root {
                combined[v] += s.weight(v);
            }
        }
    }
    combined
}

/// Step 4: lift every vertex below `omega_min` up to it, deepest vertices
/// first. Each deficient vertex first receives branch weight (attaching it
/// under adjacent tree vertices with capacity `parent weight / 2`, never
/// creating new surplus), and any remaining deficit is covered by raising
/// its weight inside one strategy, cascading minimal ancestor raises.
fn fill_branches_impl(
    g: &Graph,
    root: VertexId,
    strategies: &mut [Strategy],
    omega_min: Rational,
    log: &mut Vec<String>,
) -> Result<(), HeuristicError> {
    let n = g.vertex_count();
    let dist = g.distances_from(root);
    let mut combined = combined_weights(g, root, strategies);
    let mut pending: Vec<VertexId> = (0..n)
        .filter(|&v| v != root && combined[v] < omega_min)
        .collect();
    pending.sort_by_key(|&v| (Reverse(dist[v]), v));
    // A deficient vertex can be attachable only through another deficient
    // vertex (a branch hanging off a branch), so sweep repeatedly: lift
    // what borders the forest now, defer the rest, and fail only when a
    // whole sweep makes no progress.
    while !pending.is_empty() {
        let mut deferred = Vec::new();
        let mut progressed = false;
        for s in std::mem::take(&mut pending) {
            if !lift_vertex(g, root, strategies, omega_min, &mut combined, s, log)? {
                deferred.push(s);
            } else {
                progressed = true;
            }
        }
        if !progressed {
            return Err(HeuristicError::CannotCover {
                vertex: g.label(deferred[0]).to_string(),
            });
        }
        pending = deferred;
    }
    Ok(())
}

/// A raise-phase repair: each `(vertex, new weight)` along the ancestor
/// chain that must grow to keep the parent-weight law intact.
type CascadePlan = Vec<(VertexId, Rational)>;

/// Tries to lift one vertex to `omega_min`. Returns `Ok(false)` when the
/// vertex currently has no contact with any strategy tree (the caller
/// retries after other vertices have been lifted).
fn lift_vertex(
    g: &Graph,
    root: VertexId,
    strategies: &mut [Strategy],
    omega_min: Rational,
    combined: &mut [Rational],
    s: VertexId,
    log: &mut Vec<String>,
) -> Result<bool, HeuristicError> {
    let mut deficit = omega_min - combined[s];
    if !deficit.is_positive() {
        return Ok(true); // an earlier ancestor raise already covered it
    }
    // Branch phase: capacity None means attaching directly under the
    // root (unconstrained weight).
    let mut options: Vec<(Option<Rational>, usize, VertexId)> = Vec::new();
    for (idx, strat) in strategies.iter().enumerate() {
        if strat.contains(s) {
            continue;
        }
        let mut best: Option<(Option<Rational>, VertexId)> = None;
        for a in strat.tree_vertices() {
            if !g.has_edge(a, s) {
                continue;
            }
            let cap = if a == root {
                None
            } else {
                let half = strat.weight(a) / Rational::from_int(2);
                if !half.is_positive() {
                    continue;
                }
                Some(half)
            };
            let better = match (&best, &cap) {
                (None, _) => true,
                (Some((Some(_), _)), None) => true,
                (Some((Some(b), _)), Some(c)) => c > b,
                (Some((None, _)), _) => false,
            };
            if better {
                best = Some((cap, a));
            }
        }
        if let Some((cap, a)) = best {
            options.push((cap, idx, a));
        }
    }
    if options.is_empty() && !strategies.iter().any(|st| st.contains(s)) {
        return Ok(false); // no contact with the forest yet; retry later
    }
    options.sort_by(|x, y| match (&x.0, &y.0) {
        (None, None) => x.1.cmp(&y.1),
        (None, Some(_)) => std::cmp::Ordering::Less,
        (Some(_), None) => std::cmp::Ordering::Greater,
        (Some(a), Some(b)) => b.cmp(a).then(x.1.cmp(&y.1)),
    });
    for (cap, idx, a) in options {
        if !deficit.is_positive() {
            break;
        }
        let give = match cap {
            None => deficit,
            Some(c) => c.min(deficit),
        };
        strategies[idx].attach(s, a);
        strategies[idx].set_weight(s, give);
        combined[s] += give;
        deficit -= give;
        log.push(format!(
            "step 4: branch {} under {} in strategy {} with weight {give}",
            g.label(s),
            g.label(a),
            idx + 1
        ));
    }
    if deficit.is_positive() {
        // Raise phase: pick the strategy whose ancestor cascade costs
        // the least extra weight.
        // (extra weight, strategy index, cascade of (vertex, new weight))
        let mut best: Option<(Rational, usize, CascadePlan)> = None;
        for (idx, strat) in strategies.iter().enumerate() {
            if !strat.contains(s) || s == root {
                continue;
            }
            let new_weight = strat.weight(s) + deficit;
            let mut plan = vec![(s, new_weight)];
            let mut need = new_weight * 2;
            let mut cost = Rational::ZERO;
            let mut cur = s;
            loop {
                let parent = strat.parent_of(cur).expect("non-root tree vertex");
                if parent == root {
                    break;
                }
                let w = strat.weight(parent);
                if w >= need {
                    break;
                }
                plan.push((parent, need));
                cost += need - w;
                need = need * 2;
                cur = parent;
            }
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, idx, plan));
            }
        }
        let (cost, idx, plan) = best.ok_or_else(|| HeuristicError::CannotCover {
            vertex: g.label(s).to_string(),
        })?;
        for &(v, w) in &plan {
            let old = strategies[idx].weight(v);
            combined[v] += w - old;
            strategies[idx].set_weight(v, w);
        }
        let raised: Vec<String> = plan
            .iter()
            .map(|&(v, w)| format!("{} to {w}", g.label(v)))
            .collect();
        log.push(format!(
            "step 4: raised in strategy {} ({}; ancestor surplus {cost})",
            idx + 1,
            raised.join(", ")
        ));
    }
    Ok(true)
}

/// One weight-lowering sweep: every vertex drops to the largest reduction
/// its tree children (parent ≥ 2 × child) and its coverage (combined weight
/// ≥ `omega_min`) both allow. Deepest vertices first, so parents see their
/// children's reduced weights within the same sweep. Returns whether any
/// weight moved.
fn reduce_weights_sweep(
    g: &Graph,
    root: VertexId,
    strategies: &mut [Strategy],
    combined: &mut [Rational],
    omega_min: Rational,
    log: &mut Vec<String>,
) -> bool {
    let dist = g.distances_from(root);
    let mut order: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| v != root).collect();
    order.sort_by_key(|&v| (Reverse(dist[v]), v));
    let mut changed = false;
    for &v in &order {
        for (idx, strat) in strategies.iter_mut().enumerate() {
            let w = strat.weight(v);
            if !w.is_positive() {
                continue;
            }
            let child_floor = strat
                .children_of(v)
                .into_iter()
                .map(|c| strat.weight(c) * 2)
                .max()
                .unwrap_or(Rational::ZERO);
            let cover_floor = w - (combined[v] - omega_min);
            let floor = child_floor.max(cover_floor).max(Rational::ZERO);
            if floor < w {
                strat.set_weight(v, floor);
                combined[v] -= w - floor;
                changed = true;
                log.push(format!(
                    "refine: lowered {} from {w} to {floor} in strategy {}",
                    g.label(v),
                    idx + 1
                ));
            }
        }
    }
    changed
}

/// Certificate ratio of a strategy set (total weight over minimum combined
/// weight), assuming full coverage.
fn ratio_of(g: &Graph, root: VertexId, strategies: &[Strategy]) -> Rational {
    let combined = combined_weights(g, root, strategies);
    let total: Rational = strategies.iter().map(Strategy::total_weight).sum();
    let min = (0..g.vertex_count())
        .filter(|&v| v != root)
        .map(|v| combined[v])
        .min()
        .unwrap_or(Rational::ZERO);
    total / min
}

/// Step 3 as a standalone call: per-neighbor trunk strategies (merged
/// shortest paths with formula weights) plus the decision log.
pub fn build_trunks(
    g: &Graph,
    root: VertexId,
    opts: &HeuristicOptions,
) -> Result<(Vec<Strategy>, Vec<String>), HeuristicError> {
    let (omega_min, _) = min_weight_formula(g, root)?;
    let pipeline = Pipeline::new(g, root, omega_min, opts.clone())?;
    let strategies = pipeline.merge_trunks(None);
    Ok((strategies, pipeline.log))
}

/// Step 4 as a standalone call: lifts every vertex to `omega_min` and wraps
/// the result into a certificate.
pub fn fill_branches(
    g: &Graph,
    root: VertexId,
    mut trunks: Vec<Strategy>,
    omega_min: Rational,
    _opts: &HeuristicOptions,
) -> Result<(Certificate, Vec<String>), HeuristicError> {
    let mut log = Vec::new();
    fill_branches_impl(g, root, &mut trunks, omega_min, &mut log)?;
    let certificate = Certificate::new(root, trunks).expect("strategies share the root");
    Ok((certificate, log))
}

/// Weight-lowering refinement to a fixpoint. The output never has a larger
/// ratio than the input; with reduction disabled the certificate is
/// returned unchanged. (The path-replacement refinement needs the
/// construction context and therefore lives inside [`run_heuristic`].)
pub fn refine(g: &Graph, cert: &Certificate, opts: &HeuristicOptions) -> Certificate {
    if !opts.enable_weight_reduction {
        return cert.clone();
    }
    let root = cert.root();
    let mut strategies = cert.strategies().to_vec();
    let mut combined = combined_weights(g, root, &strategies);
    let omega_min = (0..g.vertex_count())
        .filter(|&v| v != root)
        .map(|v| combined[v])
        .min()
        .unwrap_or(Rational::ZERO);
    if !omega_min.is_positive() {
        return cert.clone();
    }
    let mut log = Vec::new();
    for _ in 0..REFINE_PASS_CAP {
        if !reduce_weights_sweep(g, root, &mut strategies, &mut combined, omega_min, &mut log) {
            break;
        }
    }
    Certificate::new(root, strategies).expect("strategies share the root")
}

/// Enumerates simple root-free paths from `from` to `to` of length at most
/// `max_len`, in lexicographic order, up to `cap` paths.
fn paths_up_to(
    g: &Graph,
    from: VertexId,
    to: VertexId,
    root: VertexId,
    max_len: u32,
    cap: usize,
) -> Vec<Vec<VertexId>> {
    struct Walk<'a> {
        g: &'a Graph,
        to: VertexId,
        max_len: u32,
        cap: usize,
        dist_to: &'a [Option<u32>],
    }

    impl Walk<'_> {
        fn extend(
            &self,
            path: &mut Vec<VertexId>,
            on_path: &mut [bool],
            out: &mut Vec<Vec<VertexId>>,
        ) {
            if out.len() >= self.cap {
                return;
            }
            let cur = *path.last().expect("path nonempty");
            if cur == self.to {
                out.push(path.clone());
                return;
            }
            let used = (path.len() - 1) as u32;
            for &u in self.g.neighbors(cur) {
                if on_path[u] {
                    continue;
                }
                let rest = match self.dist_to[u] {
                    Some(d) => d,
                    None => continue,
                };
                if used + 1 + rest > self.max_len {
                    continue;
                }
                path.push(u);
                on_path[u] = true;
                self.extend(path, on_path, out);
                on_path[u] = false;
                path.pop();
            }
        }
    }

    if from == to {
        return vec![vec![from]];
    }
    let dist_to = g.distances_avoiding(to, &[root]);
    let mut out = Vec::new();
    let mut path = vec![from];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[from] = true;
    on_path[root] = true;
    let walk = Walk {
        g,
        to,
        max_len,
        cap,
        dist_to: &dist_to,
    };
    walk.extend(&mut path, &mut on_path, &mut out);
    out
}

/// A candidate trunk-path replacement: the λ it achieves, the index of the
/// pair it rewires, the new path, and the rebuilt strategies with their log.
type Replacement = (Rational, usize, Vec<VertexId>, Vec<Strategy>, Vec<String>);

/// The full pipeline: steps 1–4 plus iterated refinement.
pub fn run_heuristic(
    g: &Graph,
    root: VertexId,
    opts: &HeuristicOptions,
) -> Result<HeuristicReport, HeuristicError> {
    let (omega_min, minimizers) = min_weight_formula(g, root)?;
    let mut pipeline = Pipeline::new(g, root, omega_min, opts.clone())?;
    {
        let labels: Vec<&str> = minimizers.iter().map(|&v| g.label(v)).collect();
        pipeline.log.insert(
            0,
            format!(
                "step 2: formula minimum {omega_min} attained at {{{}}}",
                labels.join(", ")
            ),
        );
    }

    // Build, fill, reduce.
    let build = |pipeline: &mut Pipeline<'_>,
                 choice: Option<&[usize]>|
     -> Result<(Vec<Strategy>, Vec<String>), HeuristicError> {
        let mut strategies = pipeline.merge_trunks(choice);
        let mut log = Vec::new();
        fill_branches_impl(g, root, &mut strategies, omega_min, &mut log)?;
        if pipeline.opts.enable_weight_reduction {
            let mut combined = combined_weights(g, root, &strategies);
            for _ in 0..REFINE_PASS_CAP {
                if !reduce_weights_sweep(g, root, &mut strategies, &mut combined, omega_min, &mut log)
                {
                    break;
                }
            }
        }
        Ok((strategies, log))
    };

    let (mut strategies, fill_log) = build(&mut pipeline, None)?;
    pipeline.log.extend(fill_log);
    let mut lambda = ratio_of(g, root, &strategies);

    if opts.enable_path_replacement {
        for pass in 1..=REFINE_PASS_CAP {
            // Try replacing one trunk path by a slightly longer alternative;
            // adopt the single replacement that improves λ the most.
            let mut best: Option<Replacement> = None;
            for i in 0..pipeline.pairs.len() {
                let (vj, u, shortest) = {
                    let pair = &pipeline.pairs[i];
                    let path = &pair.options[pair.chosen];
                    let u = *path.last().expect("nonempty");
                    let d = pipeline.dists[pair.strategy][u].expect("trunk pair is reachable");
                    (path[0], u, d)
                };
                let alternatives = paths_up_to(
                    g,
                    vj,
                    u,
                    root,
                    shortest + opts.extra_path_length,
                    REPLACEMENT_PATH_CAP,
                );
                for alt in alternatives {
                    if alt == pipeline.pairs[i].options[pipeline.pairs[i].chosen] {
                        continue;
                    }
                    let mut choice: Vec<usize> =
                        pipeline.pairs.iter().map(|p| p.chosen).collect();
                    // Temporarily extend the option list with the
                    // alternative path.
                    pipeline.pairs[i].options.push(alt.clone());
                    choice[i] = pipeline.pairs[i].options.len() - 1;
                    let outcome = build(&mut pipeline, Some(&choice));
                    pipeline.pairs[i].options.pop();
                    let (cand_strategies, cand_log) = match outcome {
                        Ok(x) => x,
                        Err(HeuristicError::CannotCover { .. }) => continue,
                        Err(e) => return Err(e),
                    };
                    let cand_lambda = ratio_of(g, root, &cand_strategies);
                    if cand_lambda < lambda
                        && best.as_ref().is_none_or(|(b, _, _, _, _)| cand_lambda < *b)
                    {
                        best = Some((cand_lambda, i, alt, cand_strategies, cand_log));
                    }
                }
            }
            match best {
                Some((new_lambda, i, alt, new_strategies, cand_log)) => {
                    let u = *alt.last().expect("nonempty");
                    pipeline.log.push(format!(
                        "refine pass {pass}: replaced the path to {} in strategy {} by a length-{} route; λ {lambda} → {new_lambda}",
                        g.label(u),
                        pipeline.pairs[i].strategy + 1,
                        alt.len() - 1
                    ));
                    pipeline.log.extend(cand_log);
                    pipeline.pairs[i].options.push(alt);
                    let last = pipeline.pairs[i].options.len() - 1;
                    pipeline.pairs[i].chosen = last;
                    strategies = new_strategies;
                    lambda = new_lambda;
                }
                None => break,
            }
        }
    }

    let certificate = Certificate::new(root, strategies).expect("strategies share the root");
    debug_assert!(certificate.validate(g).is_empty());
    let surplus = certificate
        .surplus_report(g)
        .expect("filled certificates cover every vertex");
    let lambda = surplus.lambda;
    Ok(HeuristicReport {
        certificate,
        omega_min_formula: omega_min,
        minimizers,
        lambda,
        surplus,
        decisions: pipeline.log,
    })
}

// ---------------------------------------------------------------------------
// Bundled reference certificates.
// ---------------------------------------------------------------------------

/// One strategy as a ranked list: vertices in descending weight order, each
/// written `(label, weight)`. The tree is reconstructed by attaching each
/// vertex beneath the earliest-listed already-placed neighbor whose weight
/// permits it (the first entry hangs from the root), backtracking when a
/// later vertex has no valid parent.
type RankedStrategy = &'static [(&'static str, &'static str)];

fn strategy_from_ranked(g: &Graph, root: VertexId, entries: RankedStrategy) -> Strategy {
    let ids: Vec<VertexId> = entries
        .iter()
        .map(|&(label, _)| g.require_vertex(label).expect("fixture label"))
        .collect();
    let weights: Vec<Rational> = entries
        .iter()
        .map(|&(_, w)| w.parse().expect("fixture weight"))
        .collect();
    // placed[i] = chosen parent index into the placement order, where
    // position 0 is the root and position i+1 is entries[i].
    let mut parents: Vec<usize> = vec![usize::MAX; ids.len()];
    fn place(
        g: &Graph,
        root: VertexId,
        ids: &[VertexId],
        weights: &[Rational],
        parents: &mut [usize],
        i: usize,
    ) -> bool {
        if i == ids.len() {
            return true;
        }
        for p in 0..=i {
            let (pv, ok) = if p == 0 {
                (root, true)
            } else {
                (ids[p - 1], weights[p - 1] >= weights[i] * 2)
            };
            if ok && g.has_edge(pv, ids[i]) {
                parents[i] = p;
                if place(g, root, ids, weights, parents, i + 1) {
                    return true;
                }
            }
        }
        parents[i] = usize::MAX;
        false
    }
    assert!(
        place(g, root, &ids, &weights, &mut parents, 0),
        "ranked fixture cannot be arranged into a strategy"
    );
    let mut s = Strategy::new(root);
    for (i, &v) in ids.iter().enumerate() {
        let parent = if parents[i] == 0 { root } else { ids[parents[i] - 1] };
        s.attach(v, parent);
        s.set_weight(v, weights[i]);
    }
    s
}

fn ranked_certificate(g: &Graph, target: &str, strategies: &[RankedStrategy]) -> Certificate {
    let root = g.require_vertex(target).expect("fixture target");
    let built = strategies
        .iter()
        .map(|&entries| strategy_from_ranked(g, root, entries))
        .collect();
    Certificate::new(root, built).expect("fixture certificate")
}

/// The bundled certificate for a family member and target-class label.
///
/// Petersen (`a_0`), both Blanuša snarks (all class targets), flower snarks
/// (`x_0`, `v_0`, `z_0` for every odd `m ≥ 3`), and hypercubes (all-zeros
/// target, via [`cube_certificate`]).
pub fn reference_certificate(
    fam: &FamilyGraph,
    target: &str,
) -> Result<Certificate, HeuristicError> {
    let unsupported = || HeuristicError::UnsupportedTarget {
        family: fam.family.name(),
        target: target.to_string(),
    };
    let g = &fam.graph;
    match fam.family {
        Family::Petersen => match target {
            "a_0" => Ok(ranked_certificate(g, target, PETERSEN_A0)),
            _ => Err(unsupported()),
        },
        Family::Blanusa1 => {
            let table = match target {
                "a_1" => B1_A1,
                "b_1" => B1_B1,
                "c_1" => B1_C1,
                "d_1" => B1_D1,
                "e_1" => B1_E1,
                _ => return Err(unsupported()),
            };
            Ok(ranked_certificate(g, target, table))
        }
        Family::Blanusa2 => {
            let table = match target {
                "x_1" => B2_X1,
                "x_2" => B2_X2,
                "x_3" => B2_X3,
                "z_1" => B2_Z1,
                "z_2" => B2_Z2,
                "z_3" => B2_Z3,
                _ => return Err(unsupported()),
            };
            Ok(ranked_certificate(g, target, table))
        }
        Family::Flower(m) => {
            let k = (m - 1) / 2;
            match target {
                "z_0" => Ok(flower_z0_certificate(g, k)),
                "x_0" if m == 3 => Ok(ranked_certificate(g, target, J3_X0)),
                "v_0" if m == 3 => Ok(ranked_certificate(g, target, J3_V0)),
                "x_0" => Ok(flower_x0_certificate(g, k)),
                "v_0" => Ok(flower_v0_certificate(g, k)),
                _ => Err(unsupported()),
            }
        }
        Family::Cube(d) => {
            if target == "0".repeat(d as usize) {
                cube_certificate(d)
            } else {
                Err(unsupported())
            }
        }
    }
}

// --- general flower constructions ---

struct FlowerBuilder<'g> {
    g: &'g Graph,
    s: Strategy,
}

impl<'g> FlowerBuilder<'g> {
    fn new(g: &'g Graph, root: &str) -> Self {
        let root = g.require_vertex(root).expect("flower label");
        FlowerBuilder {
            g,
            s: Strategy::new(root),
        }
    }

    fn add(&mut self, child: &str, parent: &str, weight: Rational) {
        let c = self.g.require_vertex(child).expect("flower label");
        let p = self.g.require_vertex(parent).expect("flower label");
        self.s.attach(c, p);
        self.s.set_weight(c, weight);
    }

    fn done(self) -> Strategy {
        self.s
    }
}

/// Mirror a flower strategy through subscript negation (`v_i ↔ v_{-i}` and
/// likewise for x, y, z) — an automorphism of the flower snark.
fn flower_mirror(g: &Graph, s: &Strategy) -> Strategy {
    let map = |v: VertexId| -> VertexId {
        let label = g.label(v);
        let (group, idx) = label.split_once('_').expect("flower label");
        let idx: i32 = idx.parse().expect("flower subscript");
        g.require_vertex(&format!("{group}_{}", -idx))
            .expect("mirrored label")
    };
    let root = map(s.root());
    let mut out = Strategy::new(root);
    // Attach in breadth-first order so parents precede children.
    let mut queue = VecDeque::from([s.root()]);
    while let Some(v) = queue.pop_front() {
        for c in s.children_of(v) {
            out.attach(map(c), map(v));
            out.set_weight(map(c), s.weight(c));
            queue.push_back(c);
        }
    }
    out
}

/// Flower certificate for target `z_0`, any `k ≥ 1`: one strategy along
/// each of the three spoke directions (v, x, y), with ring weights halving
/// outward, hub weights 1, and half-weight tips on the far spokes.
fn flower_z0_certificate(g: &Graph, k: u32) -> Certificate {
    let k = k as i64;
    let root = g.require_vertex("z_0").expect("flower label");
    let mut strategies = Vec::new();
    for (line, other1, other2) in [("v", "x", "y"), ("x", "v", "y"), ("y", "x", "v")] {
        let mut b = FlowerBuilder::new(g, "z_0");
        b.add(&format!("{line}_0"), "z_0", pow2r(k + 1));
        for j in 1..=k {
            for sign in [1i64, -1] {
                let (cur, prev) = (sign * j, sign * (j - 1));
                b.add(
                    &format!("{line}_{cur}"),
                    &format!("{line}_{prev}"),
                    pow2r(k + 1 - j),
                );
                b.add(&format!("z_{cur}"), &format!("{line}_{cur}"), Rational::ONE);
            }
        }
        let half = Rational::new(1, 2).unwrap();
        for sign in [1i64, -1] {
            let tip = sign * k;
            b.add(&format!("{other1}_{tip}"), &format!("z_{tip}"), half);
            b.add(&format!("{other2}_{tip}"), &format!("z_{tip}"), half);
        }
        strategies.push(b.done());
    }
    Certificate::new(root, strategies).expect("flower z_0 certificate")
}

/// Flower certificate for target `x_0`, `k ≥ 2`: a v-line strategy through
/// the hub `z_0` plus a pair of mirrored x-line strategies.
fn flower_x0_certificate(g: &Graph, k: u32) -> Certificate {
    assert!(k >= 2, "x_0 general construction needs k ≥ 2");
    let k = k as i64;
    let root = g.require_vertex("x_0").expect("flower label");
    let half = Rational::new(1, 2).unwrap();

    // T_1: down the hub, then both ways around the v-cycle.
    let mut t1 = FlowerBuilder::new(g, "x_0");
    t1.add("z_0", "x_0", pow2r(k + 1));
    t1.add("v_0", "z_0", pow2r(k));
    t1.add("y_0", "z_0", Rational::new(5, 2).unwrap());
    for sign in [1i64, -1] {
        for j in 1..=k {
            let (cur, prev) = (sign * j, sign * (j - 1));
            t1.add(&format!("v_{cur}"), &format!("v_{prev}"), pow2r(k - j));
        }
        t1.add(&format!("z_{}", sign * k), &format!("v_{}", sign * k), half);
    }

    // T_2: along the positive x-path, hubs hanging off it, tips wrapping
    // through the cross edges.
    let mut t2 = FlowerBuilder::new(g, "x_0");
    t2.add("x_1", "x_0", pow2r(k + 1));
    for j in 2..=k {
        t2.add(&format!("x_{j}"), &format!("x_{}", j - 1), pow2r(k + 2 - j));
    }
    for j in 1..=k - 2 {
        t2.add(&format!("z_{j}"), &format!("x_{j}"), Rational::from_int(5));
        t2.add(
            &format!("y_{j}"),
            &format!("z_{j}"),
            Rational::new(5, 2).unwrap(),
        );
    }
    t2.add(
        &format!("z_{}", k - 1),
        &format!("x_{}", k - 1),
        Rational::from_int(3),
    );
    t2.add(
        &format!("y_{}", k - 1),
        &format!("z_{}", k - 1),
        Rational::new(3, 2).unwrap(),
    );
    t2.add(&format!("z_{k}"), &format!("x_{k}"), Rational::from_int(2));
    t2.add(&format!("y_{}", -k), &format!("x_{k}"), Rational::from_int(2));
    t2.add(&format!("v_{k}"), &format!("z_{k}"), Rational::ONE);
    t2.add(&format!("y_{}", 1 - k), &format!("y_{}", -k), Rational::ONE);
    t2.add(&format!("v_{}", -k), &format!("v_{k}"), half);
    t2.add(&format!("v_{}", k - 1), &format!("v_{k}"), half);
    t2.add(&format!("y_{k}"), &format!("z_{k}"), half);

    let t2 = t2.done();
    let t3 = flower_mirror(g, &t2);
    Certificate::new(root, vec![t1.done(), t2, t3]).expect("flower x_0 certificate")
}

/// Flower certificate for target `v_0`, `k ≥ 2`: a hub strategy covering
/// both x- and y-paths plus a pair of mirrored v-cycle strategies.
fn flower_v0_certificate(g: &Graph, k: u32) -> Certificate {
    assert!(k >= 2, "v_0 general construction needs k ≥ 2");
    let k = k as i64;
    let root = g.require_vertex("v_0").expect("flower label");
    let half = Rational::new(1, 2).unwrap();

    let mut t1 = FlowerBuilder::new(g, "v_0");
    t1.add("z_0", "v_0", pow2r(k + 1));
    t1.add("x_0", "z_0", pow2r(k));
    t1.add("y_0", "z_0", pow2r(k));
    for line in ["x", "y"] {
        for sign in [1i64, -1] {
            for j in 1..=k {
                let (cur, prev) = (sign * j, sign * (j - 1));
                t1.add(
                    &format!("{line}_{cur}"),
                    &format!("{line}_{prev}"),
                    pow2r(k - j),
                );
            }
        }
    }
    t1.add(&format!("z_{k}"), &format!("x_{k}"), half);
    t1.add(&format!("z_{}", -k), &format!("x_{}", -k), half);

    let mut t2 = FlowerBuilder::new(g, "v_0");
    t2.add("v_1", "v_0", pow2r(k + 1));
    for j in 2..=k {
        t2.add(&format!("v_{j}"), &format!("v_{}", j - 1), pow2r(k + 2 - j));
    }
    for j in 1..=k - 1 {
        t2.add(
            &format!("z_{j}"),
            &format!("v_{j}"),
            Rational::new(5, 2).unwrap(),
        );
    }
    t2.add(&format!("z_{k}"), &format!("v_{k}"), Rational::from_int(2));
    t2.add(&format!("x_{k}"), &format!("z_{k}"), Rational::ONE);
    t2.add(&format!("y_{k}"), &format!("z_{k}"), Rational::ONE);
    t2.add(&format!("x_{}", -k), &format!("y_{k}"), half);
    t2.add(&format!("y_{}", -k), &format!("x_{k}"), half);
    t2.add(&format!("x_{}", k - 1), &format!("x_{k}"), half);
    t2.add(&format!("y_{}", k - 1), &format!("y_{k}"), half);

    let t2 = t2.done();
    let t3 = flower_mirror(g, &t2);
    Certificate::new(root, vec![t1.done(), t2, t3]).expect("flower v_0 certificate")
}

// --- hypercube construction ---

fn factorial(d: u32) -> u64 {
    (1..=u64::from(d)).product()
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    num_integer::binomial(n, k)
}

/// A tight certificate for the `d`-dimensional hypercube at the all-zeros
/// target, `d ≥ 2`: one template strategy mapped through all `d!` coordinate
/// permutations.
///
/// The template spans, in each distance ring `j`, either a single
/// full-weight vertex (weight `2^{d−j}`, when the ring is smaller than
/// that) or `⌊C(d,j)/2^{d−j}⌋` full-weight vertices plus one remainder
/// vertex carrying `C(d,j) mod 2^{d−j}`. Full vertices chain upward through
/// full vertices of the previous ring, so the doubling law holds, and by
/// symmetry the combined weight is constant on each ring with minimum `d!`,
/// giving ratio `λ = Σ_j max{C(d,j), 2^{d−j}}` — exactly the ratio floor,
/// so the certificate is as strong as the method permits on the cube.
pub fn cube_certificate(d: u32) -> Result<Certificate, HeuristicError> {
    cube_certificate_with_budget(d, CUBE_WORK_BUDGET)
}

/// [`cube_certificate`] with an explicit work budget bound on `d! · 2^d`.
pub fn cube_certificate_with_budget(d: u32, budget: u64) -> Result<Certificate, HeuristicError> {
    if d < 2 {
        return Err(HeuristicError::InvalidParameter(
            "cube certificates need dimension at least 2".to_string(),
        ));
    }
    if d > 16 {
        return Err(HeuristicError::InvalidParameter(
            "cube dimension is limited to 16".to_string(),
        ));
    }
    let work = factorial(d).saturating_mul(1u64 << d);
    if work > budget {
        return Err(HeuristicError::ResourceLimit(format!(
            "cube certificate for d = {d} needs {work} units of work, above the budget of {budget}"
        )));
    }
    let fam = families::cube(d).map_err(|e| HeuristicError::InvalidParameter(e.to_string()))?;
    let g = &fam.graph;
    let n = 1usize << d;

    // Template: (vertex, parent, weight) triples, ring by ring.
    let mut template: Vec<(usize, usize, u64)> = Vec::new();
    let mut full_prev: Vec<usize> = vec![0];
    for j in 1..=d {
        let ring: Vec<usize> = (0..n).filter(|v| v.count_ones() == j).collect();
        let cap = 1u64 << (d - j);
        let count = binomial_u64(u64::from(d), u64::from(j));
        let (n_full, remainder) = if count >= cap {
            ((count / cap) as usize, count % cap)
        } else {
            (1, 0)
        };
        let parent_of = |v: usize| -> Option<usize> {
            (0..d)
                .map(|b| v ^ (1usize << b))
                .filter(|p| full_prev.contains(p))
                .min()
        };
        let mut full_now = Vec::new();
        let mut taken = vec![false; n];
        let mut need_full = n_full;
        for &v in &ring {
            if need_full == 0 {
                break;
            }
            if let Some(p) = parent_of(v) {
                template.push((v, p, cap));
                full_now.push(v);
                taken[v] = true;
                need_full -= 1;
            }
        }
        if need_full > 0 {
            return Err(HeuristicError::Internal(format!(
                "cube template ring {j} lacks attachable full vertices"
            )));
        }
        if remainder > 0 {
            let extra = ring
                .iter()
                .find(|&&v| !taken[v] && parent_of(v).is_some())
                .copied()
                .ok_or_else(|| {
                    HeuristicError::Internal(format!(
                        "cube template ring {j} lacks an attachable remainder vertex"
                    ))
                })?;
            let p = parent_of(extra).expect("checked above");
            template.push((extra, p, remainder));
        }
        full_prev = full_now;
    }

    // All d! coordinate permutations of the template, in lexicographic
    // order of the permutation.
    let mut perm: Vec<u32> = (0..d).collect();
    let mut strategies = Vec::with_capacity(factorial(d) as usize);
    loop {
        let map = |v: usize| -> usize {
            let mut out = 0usize;
            for (b, &p) in perm.iter().enumerate() {
                if v >> b & 1 == 1 {
                    out |= 1usize << p;
                }
            }
            out
        };
        let mut s = Strategy::new(0);
        for &(v, p, w) in &template {
            s.attach(map(v), map(p));
            s.set_weight(map(v), Rational::from_int(w as i64));
        }
        strategies.push(s);
        // Advance to the next lexicographic permutation.
        let Some(i) = (0..perm.len() - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..perm.len())
            .rev()
            .find(|&j| perm[j] > perm[i])
            .expect("successor exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    let cert = Certificate::new(0, strategies).expect("cube strategies share the root");
    debug_assert!(cert.validate(g).is_empty());
    Ok(cert)
}

// ---------------------------------------------------------------------------
// Embedded ranked-list fixtures.
// ---------------------------------------------------------------------------

const PETERSEN_A0: &[RankedStrategy] = &[
    &[
        ("a_1", "4"),
        ("a_2", "2"),
        ("b_1", "2"),
        ("a_3", "1"),
        ("b_2", "1"),
        ("b_3", "1"),
        ("b_4", "1"),
    ],
    &[
        ("b_0", "4"),
        ("b_2", "2"),
        ("b_3", "2"),
        ("b_4", "1"),
        ("a_2", "1"),
        ("b_1", "1"),
        ("a_3", "1"),
    ],
    &[
        ("a_4", "4"),
        ("a_3", "2"),
        ("b_4", "2"),
        ("a_2", "1"),
        ("b_3", "1"),
        ("b_2", "1"),
        ("b_1", "1"),
    ],
];

const J3_X0: &[RankedStrategy] = &[
    &[
        ("z_0", "4"),
        ("v_0", "2"),
        ("y_0", "2"),
        ("v_1", "1"),
        ("v_-1", "1"),
        ("z_1", "1/2"),
        ("z_-1", "1/2"),
    ],
    &[
        ("x_1", "4"),
        ("y_-1", "2"),
        ("z_1", "2"),
        ("v_1", "1"),
        ("y_1", "1/2"),
        ("v_-1", "1/2"),
        ("y_0", "1/4"),
        ("v_0", "1/4"),
    ],
    &[
        ("x_-1", "4"),
        ("y_1", "2"),
        ("z_-1", "2"),
        ("v_-1", "1"),
        ("y_-1", "1/2"),
        ("v_1", "1/2"),
        ("y_0", "1/4"),
        ("v_0", "1/4"),
    ],
];

const J3_V0: &[RankedStrategy] = &[
    &[
        ("z_0", "4"),
        ("x_0", "2"),
        ("y_0", "2"),
        ("x_1", "1"),
        ("x_-1", "1"),
        ("y_1", "1"),
        ("y_-1", "1"),
        ("z_1", "1/2"),
        ("z_-1", "1/2"),
    ],
    &[
        ("v_1", "4"),
        ("z_1", "2"),
        ("x_1", "1"),
        ("y_1", "1"),
        ("x_0", "1/2"),
        ("x_-1", "1/2"),
        ("y_-1", "1/2"),
    ],
    &[
        ("v_-1", "4"),
        ("z_-1", "2"),
        ("x_-1", "1"),
        ("y_-1", "1"),
        ("x_1", "1/2"),
        ("y_0", "1/2"),
        ("y_1", "1/2"),
    ],
];

const B2_X1: &[RankedStrategy] = &[
    &[
        ("z_1", "8"),
        ("z_5", "4"),
        ("z_2", "5/2"),
        ("z_5'", "2"),
        ("z_2'", "5/4"),
        ("x_5'", "1"),
        ("z_1'", "1"),
        ("x_2'", "1/2"),
    ],
    &[
        ("x_3", "8"),
        ("z_3", "4"),
        ("x_5", "2"),
        ("x_3'", "2"),
        ("x_1'", "1"),
        ("x_5'", "1"),
        ("x_2'", "1/2"),
        ("z_1'", "1/2"),
        ("z_2'", "1/4"),
    ],
    &[
        ("x_4", "8"),
        ("z_4", "4"),
        ("x_2", "2"),
        ("x_4'", "2"),
        ("x_1'", "1"),
        ("x_2'", "1"),
        ("z_1'", "1/2"),
        ("z_2'", "1/2"),
    ],
];

const B2_X2: &[RankedStrategy] = &[
    &[
        ("z_2", "8"),
        ("z_2'", "4"),
        ("z_1", "5/2"),
        ("x_2'", "2"),
        ("z_1'", "2"),
        ("x_1'", "1"),
        ("x_5'", "1"),
        ("x_3'", "1/2"),
        ("x_4'", "1/2"),
        ("z_5'", "1/2"),
    ],
    &[
        ("x_5", "8"),
        ("x_3", "4"),
        ("z_5", "4"),
        ("z_3", "2"),
        ("z_5'", "2"),
        ("x_3'", "1"),
        ("x_5'", "1"),
        ("x_1'", "1/2"),
        ("x_2'", "1/2"),
    ],
    &[
        ("x_4", "8"),
        ("z_4", "4"),
        ("x_1", "5/2"),
        ("x_4'", "2"),
        ("z_3", "2"),
        ("x_1'", "1"),
        ("x_3'", "1"),
        ("x_5'", "1/2"),
        ("z_1'", "1/2"),
    ],
];

const B2_X3: &[RankedStrategy] = &[
    &[
        ("z_3", "8"),
        ("z_4", "4"),
        ("x_3'", "5/2"),
        ("x_4'", "2"),
        ("x_1'", "5/4"),
        ("x_2'", "1"),
        ("x_5'", "1"),
        ("z_1'", "1/2"),
        ("z_2'", "1/2"),
    ],
    &[
        ("x_1", "8"),
        ("z_1", "4"),
        ("x_4", "2"),
        ("z_2", "2"),
        ("z_2'", "1"),
        ("x_2'", "1/2"),
        ("z_1'", "1/2"),
        ("x_1'", "1/4"),
    ],
    &[
        ("x_5", "8"),
        ("z_5", "4"),
        ("x_2", "2"),
        ("z_5'", "2"),
        ("x_5'", "1"),
        ("z_1'", "1"),
        ("x_1'", "1/2"),
        ("x_2'", "1/2"),
        ("z_2'", "1/2"),
    ],
];

const B2_Z1: &[RankedStrategy] = &[
    &[
        ("x_1", "8"),
        ("x_3", "4"),
        ("x_4", "4"),
        ("z_3", "2"),
        ("z_4", "2"),
        ("x_3'", "1"),
        ("x_4'", "1"),
        ("x_1'", "1/2"),
        ("x_2'", "1/2"),
        ("x_5'", "1/2"),
    ],
    &[
        ("z_2", "8"),
        ("z_2'", "4"),
        ("x_2", "5/2"),
        ("x_2'", "2"),
        ("z_1'", "2"),
        ("x_1'", "1"),
        ("x_4'", "1"),
        ("x_3'", "1/2"),
        ("z_4", "1/2"),
    ],
    &[
        ("z_5", "8"),
        ("z_5'", "4"),
        ("x_5", "5/2"),
        ("x_5'", "2"),
        ("z_1'", "2"),
        ("x_1'", "1"),
        ("x_3'", "1"),
        ("x_4'", "1/2"),
        ("z_3", "1/2"),
    ],
];

const B2_Z2: &[RankedStrategy] = &[
    &[
        ("z_2'", "8"),
        ("z_1'", "4"),
        ("x_1'", "2"),
        ("x_2'", "2"),
        ("x_3'", "1"),
        ("x_4'", "1"),
        ("x_5'", "1"),
        ("z_3", "1/2"),
    ],
    &[
        ("x_2", "8"),
        ("x_4", "4"),
        ("x_1", "2"),
        ("z_4", "2"),
        ("x_3", "1"),
        ("x_4'", "1"),
        ("z_3", "1"),
        ("x_3'", "1/2"),
    ],
    &[
        ("z_1", "8"),
        ("z_5", "4"),
        ("x_5", "2"),
        ("z_5'", "2"),
        ("x_3", "1"),
        ("x_5'", "1"),
        ("x_3'", "1/2"),
        ("z_3", "1/2"),
    ],
];

const B2_Z3: &[RankedStrategy] = &[
    &[
        ("z_4", "8"),
        ("x_4", "4"),
        ("x_4'", "4"),
        ("x_2", "2"),
        ("x_2'", "2"),
        ("z_2", "1"),
        ("z_2'", "1"),
        ("z_1", "1/2"),
        ("z_1'", "1/2"),
    ],
    &[
        ("x_3", "8"),
        ("x_1", "4"),
        ("x_5", "4"),
        ("z_1", "2"),
        ("z_5", "2"),
        ("z_2", "1"),
        ("x_2", "1/2"),
        ("z_2'", "1/2"),
        ("z_5'", "1/2"),
    ],
    &[
        ("x_3'", "8"),
        ("x_1'", "4"),
        ("x_5'", "4"),
        ("z_1'", "2"),
        ("z_5'", "2"),
        ("z_2'", "1"),
        ("x_2'", "1/2"),
        ("z_2", "1/2"),
        ("z_5", "1/2"),
    ],
];

const B1_A1: &[RankedStrategy] = &[
    &[
        ("a_1'", "8"),
        ("b_2", "4"),
        ("b_2'", "4"),
        ("c_2", "2"),
        ("c_2'", "2"),
        ("d_1", "1"),
        ("d_1'", "1"),
        ("e_1", "1/2"),
        ("e_2", "1/2"),
        ("e_1'", "1/2"),
        ("e_2'", "1/2"),
    ],
    &[
        ("b_1", "8"),
        ("c_1", "4"),
        ("d_2", "2"),
        ("e_1", "1"),
        ("e_2", "1"),
        ("d_1", "1/2"),
        ("d_1'", "1/2"),
        ("e_1'", "1/2"),
        ("e_2'", "1/2"),
    ],
    &[
        ("b_1'", "8"),
        ("c_1'", "4"),
        ("d_2'", "2"),
        ("e_1'", "1"),
        ("e_2'", "1"),
        ("d_1'", "1/2"),
        ("d_1", "1/2"),
        ("e_1", "1/2"),
        ("e_2", "1/2"),
    ],
];

const B1_B1: &[RankedStrategy] = &[
    &[
        ("a_1", "8"),
        ("b_1'", "4"),
        ("a_1'", "5/2"),
        ("c_2", "2"),
        ("c_1'", "2"),
        ("d_1", "1"),
        ("d_2'", "1"),
        ("e_2'", "1/2"),
    ],
    &[
        ("c_1", "8"),
        ("d_2", "4"),
        ("b_2", "5/2"),
        ("e_1", "2"),
        ("e_2", "2"),
        ("d_1", "1"),
        ("e_2'", "1"),
        ("c_2", "1/2"),
        ("d_2'", "1/2"),
        ("e_1'", "1/2"),
    ],
    &[
        ("c_2'", "8"),
        ("d_1'", "4"),
        ("b_2'", "5/2"),
        ("e_2", "2"),
        ("e_1'", "2"),
        ("d_2'", "1"),
        ("e_2'", "1"),
        ("c_1'", "1/2"),
        ("d_1", "1/2"),
        ("e_1", "1/2"),
    ],
];

const B1_C1: &[RankedStrategy] = &[
    &[
        ("b_1", "8"),
        ("c_2'", "4"),
        ("a_1", "2"),
        ("b_2'", "2"),
        ("d_1'", "2"),
        ("c_1'", "1"),
        ("d_2'", "1/2"),
    ],
    &[
        ("b_2", "8"),
        ("c_2", "4"),
        ("a_1'", "2"),
        ("b_1'", "2"),
        ("d_1", "2"),
        ("c_1'", "1"),
        ("e_2'", "1"),
        ("d_2'", "1/2"),
    ],
    &[
        ("d_2", "8"),
        ("e_1", "4"),
        ("e_2", "2"),
        ("e_1'", "2"),
        ("d_2'", "1"),
        ("e_2'", "1"),
    ],
];

const B1_D1: &[RankedStrategy] = &[
    &[
        ("c_2", "8"),
        ("b_2", "4"),
        ("b_1'", "7/2"),
        ("a_1'", "2"),
        ("c_1", "2"),
        ("a_1", "7/4"),
        ("b_1", "1"),
        ("b_2'", "1"),
        ("c_1'", "1/2"),
        ("c_2'", "1/2"),
    ],
    &[
        ("e_1", "8"),
        ("d_2", "4"),
        ("e_1'", "4"),
        ("c_1", "2"),
        ("d_1'", "2"),
        ("b_1", "1"),
        ("c_2'", "1"),
        ("a_1", "1/2"),
        ("b_2'", "1/2"),
    ],
    &[
        ("e_2'", "8"),
        ("d_2'", "4"),
        ("e_2", "4"),
        ("c_1'", "2"),
        ("d_1'", "2"),
        ("b_2'", "1"),
        ("c_2'", "1"),
        ("a_1'", "1/2"),
        ("b_1", "1/2"),
        ("a_1", "1/4"),
    ],
];

const B1_E1: &[RankedStrategy] = &[
    &[
        ("d_1", "8"),
        ("c_2", "4"),
        ("b_2", "2"),
        ("b_1'", "2"),
        ("a_1", "1"),
        ("a_1'", "1"),
        ("b_2'", "1/2"),
    ],
    &[
        ("d_2", "8"),
        ("c_1", "4"),
        ("b_1", "2"),
        ("e_2", "2"),
        ("a_1", "1"),
        ("c_2'", "1"),
        ("a_1'", "1/2"),
        ("b_2'", "1/2"),
    ],
    &[
        ("e_1'", "8"),
        ("d_2'", "4"),
        ("c_1'", "2"),
        ("d_1'", "2"),
        ("e_2'", "2"),
        ("b_2'", "1"),
        ("c_2'", "1"),
        ("a_1'", "1/2"),
    ],
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{cube_ratio_floor, ratio_floor};
    use crate::families::{blanusa1, blanusa2, cube, flower, petersen};

    fn ratio(g: &Graph, cert: &Certificate) -> Rational {
        assert!(cert.validate(g).is_empty(), "certificate must validate");
        cert.wfl_ratio(g).unwrap()
    }

    #[test]
    fn formula_minimum_on_small_families() {
        let p = petersen();
        let a0 = p.graph.vertex("a_0").unwrap();
        let (omega, mins) = min_weight_formula(&p.graph, a0).unwrap();
        assert_eq!(omega, Rational::from_int(2));
        assert_eq!(mins.len(), 6); // every peripheral attains it

        let f5 = flower(5).unwrap();
        let z0 = f5.graph.vertex("z_0").unwrap();
        let (omega, mins) = min_weight_formula(&f5.graph, z0).unwrap();
        assert_eq!(omega, Rational::from_int(3));
        let labels: Vec<&str> = mins.iter().map(|&v| f5.graph.label(v)).collect();
        assert_eq!(labels, vec!["z_2", "z_-2"]);

        let b2 = blanusa2();
        let x3 = b2.graph.vertex("x_3").unwrap();
        let (omega, mins) = min_weight_formula(&b2.graph, x3).unwrap();
        assert_eq!(omega, Rational::from_int(2));
        let labels: Vec<&str> = mins.iter().map(|&v| b2.graph.label(v)).collect();
        assert_eq!(labels, vec!["x_2'"]);
    }

    #[test]
    fn star_graph_builds_single_edge_trunks() {
        let g = Graph::from_edge_list(
            "star",
            &["c", "l1", "l2", "l3"],
            &[("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap();
        let center = g.vertex("c").unwrap();
        let (omega, _) = min_weight_formula(&g, center).unwrap();
        assert_eq!(omega, Rational::ONE);
        let (trunks, _) = build_trunks(&g, center, &HeuristicOptions::default()).unwrap();
        assert_eq!(trunks.len(), 3);
        for t in &trunks {
            assert_eq!(t.order(), 2);
            assert_eq!(t.total_weight(), Rational::ONE);
        }
        let report = run_heuristic(&g, center, &HeuristicOptions::default()).unwrap();
        assert_eq!(report.lambda, Rational::from_int(3));
    }

    #[test]
    fn heuristic_reaches_nine_on_petersen() {
        let p = petersen();
        for r in p.graph.vertices() {
            let report = run_heuristic(&p.graph, r, &HeuristicOptions::default()).unwrap();
            assert_eq!(report.lambda, Rational::from_int(9), "target {}", p.graph.label(r));
            assert!(report.certificate.validate(&p.graph).is_empty());
        }
    }

    #[test]
    fn heuristic_matches_reference_on_flower_hubs() {
        let f3 = flower(3).unwrap();
        let z0 = f3.graph.vertex("z_0").unwrap();
        let report = run_heuristic(&f3.graph, z0, &HeuristicOptions::default()).unwrap();
        assert_eq!(report.lambda, Rational::from_int(12));

        let f5 = flower(5).unwrap();
        let z0 = f5.graph.vertex("z_0").unwrap();
        let report = run_heuristic(&f5.graph, z0, &HeuristicOptions::default()).unwrap();
        assert_eq!(report.lambda, Rational::from_int(26));
    }

    #[test]
    fn heuristic_is_deterministic() {
        let b2 = blanusa2();
        let x1 = b2.graph.vertex("x_1").unwrap();
        let r1 = run_heuristic(&b2.graph, x1, &HeuristicOptions::default()).unwrap();
        let r2 = run_heuristic(&b2.graph, x1, &HeuristicOptions::default()).unwrap();
        assert_eq!(r1.certificate, r2.certificate);
        assert_eq!(r1.decisions, r2.decisions);
    }

    #[test]
    fn heuristic_never_beats_the_ratio_floor() {
        // Every valid certificate's ratio is at least the ring floor.
        for (fam, targets) in [
            (petersen(), vec!["a_0"]),
            (flower(3).unwrap(), vec!["x_0", "v_0", "z_0"]),
            (flower(5).unwrap(), vec!["x_0", "v_0", "z_0"]),
            (blanusa2(), vec!["x_1", "x_2", "x_3", "z_1", "z_2", "z_3"]),
        ] {
            for t in targets {
                let r = fam.graph.vertex(t).unwrap();
                let report = run_heuristic(&fam.graph, r, &HeuristicOptions::default()).unwrap();
                let floor = Rational::from_int(ratio_floor(&fam.graph, r).unwrap() as i64);
                assert!(
                    report.lambda >= floor,
                    "{} target {t}: λ = {} below floor {floor}",
                    fam.graph.name(),
                    report.lambda
                );
            }
        }
    }

    #[test]
    fn petersen_reference_certificate_evaluates_to_nine() {
        let p = petersen();
        let cert = reference_certificate(&p, "a_0").unwrap();
        assert_eq!(ratio(&p.graph, &cert), Rational::from_int(9));
        assert_eq!(cert.total_weight(), Rational::from_int(36));
        assert_eq!(cert.min_combined_weight(&p.graph), Rational::from_int(4));
    }

    #[test]
    fn blanusa2_reference_certificates_match_published_values() {
        let b2 = blanusa2();
        let expect: &[(&str, &str, &str, &str)] = &[
            ("x_1", "117/2", "2", "117/4"),
            ("x_2", "133/2", "5/2", "133/5"),
            ("x_3", "117/2", "2", "117/4"),
            ("z_1", "133/2", "5/2", "133/5"),
            ("z_2", "58", "2", "29"),
            ("z_3", "68", "5/2", "136/5"),
        ];
        for &(target, total, omega, lambda) in expect {
            let cert = reference_certificate(&b2, target).unwrap();
            assert!(cert.validate(&b2.graph).is_empty(), "{target} validates");
            assert_eq!(
                cert.total_weight(),
                total.parse().unwrap(),
                "{target} total"
            );
            assert_eq!(
                cert.min_combined_weight(&b2.graph),
                omega.parse().unwrap(),
                "{target} omega_min"
            );
            assert_eq!(
                cert.wfl_ratio(&b2.graph).unwrap(),
                lambda.parse().unwrap(),
                "{target} lambda"
            );
        }
    }

    #[test]
    fn blanusa1_reference_certificates_match_published_values() {
        let b1 = blanusa1();
        let expect: &[(&str, &str, &str, &str)] = &[
            ("a_1", "60", "2", "30"),
            ("b_1", "65", "5/2", "26"),
            ("c_1", "58", "2", "29"),
            ("d_1", "141/2", "5/2", "141/5"),
            ("e_1", "58", "2", "29"),
        ];
        for &(target, total, omega, lambda) in expect {
            let cert = reference_certificate(&b1, target).unwrap();
            assert!(cert.validate(&b1.graph).is_empty(), "{target} validates");
            assert_eq!(cert.total_weight(), total.parse().unwrap(), "{target} total");
            assert_eq!(
                cert.min_combined_weight(&b1.graph),
                omega.parse().unwrap(),
                "{target} omega_min"
            );
            assert_eq!(
                cert.wfl_ratio(&b1.graph).unwrap(),
                lambda.parse().unwrap(),
                "{target} lambda"
            );
        }
    }

    #[test]
    fn flower_certificates_satisfy_closed_forms() {
        for m in [3u32, 5, 7, 9, 11, 13, 15] {
            let fam = flower(m).unwrap();
            let g = &fam.graph;
            let k = i64::from((m - 1) / 2);
            let p = pow2r(k + 2);

            let z0 = reference_certificate(&fam, "z_0").unwrap();
            assert!(z0.validate(g).is_empty(), "z_0 m={m}");
            assert_eq!(
                z0.total_weight(),
                p * Rational::new(9, 2).unwrap() + Rational::from_int(6 * k - 6),
                "z_0 total m={m}"
            );
            assert_eq!(
                z0.wfl_ratio(g).unwrap(),
                p * Rational::new(3, 2).unwrap() + Rational::from_int(2 * k - 2),
                "z_0 lambda m={m}"
            );

            if m == 3 {
                // Special certificates for the smallest flower.
                let x0 = reference_certificate(&fam, "x_0").unwrap();
                assert!(x0.validate(g).is_empty());
                assert_eq!(x0.wfl_ratio(g).unwrap(), "64/5".parse().unwrap());
                let v0 = reference_certificate(&fam, "v_0").unwrap();
                assert!(v0.validate(g).is_empty());
                assert_eq!(v0.wfl_ratio(g).unwrap(), "64/5".parse().unwrap());
                continue;
            }

            let x0 = reference_certificate(&fam, "x_0").unwrap();
            assert!(x0.validate(g).is_empty(), "x_0 m={m}");
            assert_eq!(
                x0.total_weight(),
                p * Rational::new(13, 4).unwrap() + Rational::new(30 * k - 25, 2).unwrap(),
                "x_0 total m={m}"
            );
            assert_eq!(
                x0.wfl_ratio(g).unwrap(),
                p * Rational::new(13, 10).unwrap() + Rational::from_int(6 * k - 5),
                "x_0 lambda m={m}"
            );

            let v0 = reference_certificate(&fam, "v_0").unwrap();
            assert!(v0.validate(g).is_empty(), "v_0 m={m}");
            assert_eq!(
                v0.total_weight(),
                p * Rational::from_int(4) + Rational::from_int(5 * k - 4),
                "v_0 total m={m}"
            );
            assert_eq!(
                v0.wfl_ratio(g).unwrap(),
                p * Rational::new(8, 5).unwrap() + Rational::new(10 * k - 8, 5).unwrap(),
                "v_0 lambda m={m}"
            );
        }
    }

    #[test]
    fn specific_flower_ratios() {
        let f5 = flower(5).unwrap();
        let vals = [("x_0", "139/5"), ("v_0", "28"), ("z_0", "26")];
        for (t, expect) in vals {
            let cert = reference_certificate(&f5, t).unwrap();
            assert_eq!(
                cert.wfl_ratio(&f5.graph).unwrap(),
                expect.parse().unwrap(),
                "J_5 {t}"
            );
        }
        let f7 = flower(7).unwrap();
        let vals = [("x_0", "273/5"), ("v_0", "278/5"), ("z_0", "52")];
        for (t, expect) in vals {
            let cert = reference_certificate(&f7, t).unwrap();
            assert_eq!(
                cert.wfl_ratio(&f7.graph).unwrap(),
                expect.parse().unwrap(),
                "J_7 {t}"
            );
        }
    }

    #[test]
    fn unsupported_targets_are_rejected() {
        let p = petersen();
        assert!(matches!(
            reference_certificate(&p, "a_1"),
            Err(HeuristicError::UnsupportedTarget { .. })
        ));
        let f5 = flower(5).unwrap();
        assert!(matches!(
            reference_certificate(&f5, "v_1"),
            Err(HeuristicError::UnsupportedTarget { .. })
        ));
    }

    #[test]
    fn cube_certificates_attain_the_floor() {
        for d in 2..=6 {
            let fam = cube(d).unwrap();
            let cert = cube_certificate(d).unwrap();
            assert!(cert.validate(&fam.graph).is_empty(), "d={d} validates");
            let lambda = cert.wfl_ratio(&fam.graph).unwrap();
            assert_eq!(
                lambda,
                Rational::from_int(cube_ratio_floor(d) as i64),
                "d={d} lambda"
            );
            assert_eq!(
                cert.min_combined_weight(&fam.graph),
                Rational::from_int(factorial(d) as i64),
                "d={d} omega_min"
            );
        }
        // d = 3 headline numbers.
        let fam = cube(3).unwrap();
        let cert = cube_certificate(3).unwrap();
        assert_eq!(cert.total_weight(), Rational::from_int(48));
        assert_eq!(cert.min_combined_weight(&fam.graph), Rational::from_int(6));
        assert_eq!(cert.wfl_ratio(&fam.graph).unwrap(), Rational::from_int(8));
    }

    #[test]
    fn cube_certificate_guards_its_domain() {
        assert!(matches!(
            cube_certificate(1),
            Err(HeuristicError::InvalidParameter(_))
        ));
        assert!(matches!(
            cube_certificate(8),
            Err(HeuristicError::ResourceLimit(_))
        ));
        assert!(cube_certificate_with_budget(8, u64::MAX).is_ok());
    }
}
