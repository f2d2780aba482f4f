//! Named graph families: the Petersen graph, both Blanuša snarks, the flower
//! snarks, and hypercubes, each with its vertex-class target representatives.
//!
//! Every generator is deterministic: labels, vertex order, and edge order are
//! fixed, so downstream tie-breaking (which works on vertex ids) is stable
//! across runs.

use thiserror::Error;

use crate::graph::Graph;

/// Which family a generated graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// The Petersen graph (10 vertices).
    Petersen,
    /// The flower snark `J_m` for odd `m ≥ 3` (`4m` vertices).
    Flower(u32),
    /// The first Blanuša snark (18 vertices).
    Blanusa1,
    /// The second Blanuša snark (18 vertices).
    Blanusa2,
    /// The `d`-dimensional hypercube (`2^d` vertices).
    Cube(u32),
}

impl Family {
    /// The canonical name, also accepted by [`by_name`].
    pub fn name(&self) -> String {
        match self {
            Family::Petersen => "petersen".into(),
            Family::Flower(m) => format!("flower{m}"),
            Family::Blanusa1 => "blanusa1".into(),
            Family::Blanusa2 => "blanusa2".into(),
            Family::Cube(d) => format!("cube{d}"),
        }
    }
}

/// A generated family member: the graph plus one representative target label
/// per vertex class (under the graph's symmetry group).
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    /// Which family and parameter this is.
    pub family: Family,
    /// The graph itself; its name equals `family.name()`.
    pub graph: Graph,
    /// One representative label per vertex class.
    pub target_classes: Vec<String>,
}

/// Errors from family generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// A parameter outside the family's domain.
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        /// Family name.
        family: String,
        /// What was wrong.
        reason: String,
    },
    /// [`by_name`] did not recognize the name.
    #[error("unknown family name {0:?} (expected petersen, blanusa1, blanusa2, flower<m>, or cube<d>)")]
    UnknownFamily(String),
}

/// The Petersen graph: outer 5-cycle `a_0..a_4`, inner 5-cycle `b_0..b_4`
/// joined as a pentagram, and spokes `a_i b_i`. Vertex-transitive, so a
/// single target class.
pub fn petersen() -> FamilyGraph {
    let labels: Vec<String> = (0..5)
        .map(|i| format!("a_{i}"))
        .chain((0..5).map(|i| format!("b_{i}")))
        .collect();
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((format!("a_{i}"), format!("a_{}", (i + 1) % 5)));
    }
    for i in 0..5 {
        edges.push((format!("a_{i}"), format!("b_{i}")));
    }
    for i in 0..5 {
        edges.push((format!("b_{i}"), format!("b_{}", (i + 2) % 5)));
    }
    let graph = Graph::from_edge_list("petersen", &labels, &edges).expect("fixed construction");
    FamilyGraph {
        family: Family::Petersen,
        graph,
        target_classes: vec!["a_0".into()],
    }
}

/// Subscript sequence `0, 1, -1, 2, -2, …, k, -k` used by flower labels.
fn flower_indices(k: i32) -> Vec<i32> {
    let mut idx = vec![0];
    for j in 1..=k {
        idx.push(j);
        idx.push(-j);
    }
    idx
}

/// The flower snark `J_m` for odd `m = 2k + 1 ≥ 3`.
///
/// Vertices `v_i`, `x_i`, `y_i`, `z_i` for `i ∈ {-k, …, k}`. Each `z_i` is the
/// hub of a star to `v_i`, `x_i`, `y_i`; the `v_i` form an `m`-cycle in
/// subscript order; the `x_i` and `y_i` form paths in subscript order whose
/// ends are cross-linked (`x_k y_-k` and `y_k x_-k`), making the `x`/`y`
/// vertices a single `2m`-cycle. Three vertex classes: `x_0`, `v_0`, `z_0`.
pub fn flower(m: u32) -> Result<FamilyGraph, FamilyError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(FamilyError::InvalidParameter {
            family: format!("flower{m}"),
            reason: "m must be odd and at least 3".into(),
        });
    }
    let k = (m as i32 - 1) / 2;
    let idx = flower_indices(k);
    let mut labels = Vec::new();
    for group in ["v", "x", "y", "z"] {
        for &i in &idx {
            labels.push(format!("{group}_{i}"));
        }
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    // v-cycle in subscript order -k..k, closed.
    for i in -k..k {
        edges.push((format!("v_{i}"), format!("v_{}", i + 1)));
    }
    edges.push((format!("v_{k}"), format!("v_{}", -k)));
    // x- and y-paths in subscript order.
    for group in ["x", "y"] {
        for i in -k..k {
            edges.push((format!("{group}_{i}"), format!("{group}_{}", i + 1)));
        }
    }
    // Cross links joining the two paths into one long cycle.
    edges.push((format!("x_{k}"), format!("y_{}", -k)));
    edges.push((format!("y_{k}"), format!("x_{}", -k)));
    // Spokes.
    for &i in &idx {
        for group in ["v", "x", "y"] {
            edges.push((format!("z_{i}"), format!("{group}_{i}")));
        }
    }
    let name = format!("flower{m}");
    let graph = Graph::from_edge_list(&name, &labels, &edges).expect("fixed construction");
    Ok(FamilyGraph {
        family: Family::Flower(m),
        graph,
        target_classes: vec!["x_0".into(), "v_0".into(), "z_0".into()],
    })
}

/// First Blanuša snark: a 17-cycle
/// `a_1 b_1 c_1 b_2 c_2 d_1 e_1 d_2 e_2 e_2' d_2' e_1' d_1' c_2' b_2' c_1' b_1'`
/// plus a hub `a_1'` and ten chords. Five vertex classes.
const BLANUSA1_TEXT: &str = "\
graph blanusa1
vertices a_1 b_1 c_1 b_2 c_2 d_1 e_1 d_2 e_2 e_2' d_2' e_1' d_1' c_2' b_2' c_1' b_1' a_1'
# 17-cycle
edge a_1 b_1
edge b_1 c_1
edge c_1 b_2
edge b_2 c_2
edge c_2 d_1
edge d_1 e_1
edge e_1 d_2
edge d_2 e_2
edge e_2 e_2'
edge e_2' d_2'
edge d_2' e_1'
edge e_1' d_1'
edge d_1' c_2'
edge c_2' b_2'
edge b_2' c_1'
edge c_1' b_1'
edge b_1' a_1
# hub
edge a_1 a_1'
edge a_1' b_2
edge a_1' b_2'
# chords
edge b_1 c_2'
edge b_1' c_2
edge c_1 d_2
edge c_1' d_2'
edge d_1 e_2'
edge d_1' e_2
edge e_1 e_1'
";

/// The first Blanuša snark (18 vertices, cubic).
pub fn blanusa1() -> FamilyGraph {
    let graph = Graph::parse(BLANUSA1_TEXT).expect("fixed graph text");
    FamilyGraph {
        family: Family::Blanusa1,
        graph,
        target_classes: vec!["a_1".into(), "b_1".into(), "c_1".into(), "d_1".into(), "e_1".into()],
    }
}

/// Second Blanuša snark: two pentagon/pentagram blocks (`x` and `x'`) bridged
/// through the `z` vertices. Six vertex classes.
const BLANUSA2_TEXT: &str = "\
graph blanusa2
vertices x_1 x_2 x_3 x_4 x_5 x_1' x_2' x_3' x_4' x_5' z_1 z_2 z_3 z_4 z_5 z_1' z_2' z_5'
# central pair and its stars
edge z_3 z_4
edge z_3 x_3
edge z_3 x_3'
edge z_4 x_4
edge z_4 x_4'
# unprimed block
edge x_3 x_5
edge x_3 x_1
edge x_4 x_2
edge x_4 x_1
edge x_2 x_5
edge x_1 z_1
edge x_2 z_2
edge x_5 z_5
# primed block
edge x_3' x_5'
edge x_3' x_1'
edge x_4' x_2'
edge x_4' x_1'
edge x_2' x_5'
edge x_1' z_1'
edge x_2' z_2'
edge x_5' z_5'
# z-links
edge z_2 z_1
edge z_5 z_1
edge z_2 z_2'
edge z_5 z_5'
edge z_2' z_1'
edge z_5' z_1'
";

/// The second Blanuša snark (18 vertices, cubic).
pub fn blanusa2() -> FamilyGraph {
    let graph = Graph::parse(BLANUSA2_TEXT).expect("fixed graph text");
    FamilyGraph {
        family: Family::Blanusa2,
        graph,
        target_classes: vec![
            "x_1".into(),
            "x_2".into(),
            "x_3".into(),
            "z_1".into(),
            "z_2".into(),
            "z_3".into(),
        ],
    }
}

/// The `d`-dimensional hypercube. Labels are `d`-bit binary strings (most
/// significant bit first); vertices in numeric order. Vertex-transitive, so a
/// single target class: the all-zeros string.
pub fn cube(d: u32) -> Result<FamilyGraph, FamilyError> {
    if !(1..=16).contains(&d) {
        return Err(FamilyError::InvalidParameter {
            family: format!("cube{d}"),
            reason: "d must be between 1 and 16".into(),
        });
    }
    let n = 1usize << d;
    let bits = |v: usize| -> String {
        (0..d)
            .rev()
            .map(|b| if v >> b & 1 == 1 { '1' } else { '0' })
            .collect()
    };
    let labels: Vec<String> = (0..n).map(bits).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let u = v ^ (1 << b);
            if u > v {
                edges.push((bits(v), bits(u)));
            }
        }
    }
    let name = format!("cube{d}");
    let graph = Graph::from_edge_list(&name, &labels, &edges).expect("fixed construction");
    Ok(FamilyGraph {
        family: Family::Cube(d),
        graph,
        target_classes: vec![bits(0)],
    })
}

/// Resolves a family by canonical name: `petersen`, `blanusa1`, `blanusa2`,
/// `flower<m>`, or `cube<d>`.
pub fn by_name(name: &str) -> Result<FamilyGraph, FamilyError> {
    let unknown = || FamilyError::UnknownFamily(name.to_string());
    match name {
        "petersen" => Ok(petersen()),
        "blanusa1" => Ok(blanusa1()),
        "blanusa2" => Ok(blanusa2()),
        _ => {
            if let Some(m) = name.strip_prefix("flower") {
                let m: u32 = m.parse().map_err(|_| unknown())?;
                flower(m)
            } else if let Some(d) = name.strip_prefix("cube") {
                let d: u32 = d.parse().map_err(|_| unknown())?;
                cube(d)
            } else {
                Err(unknown())
            }
        }
    }
}
