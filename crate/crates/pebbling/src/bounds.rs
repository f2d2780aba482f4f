//! Elementary pebbling bounds and the certificate-ratio floor.
//!
//! `basic_bounds` gives the classical sandwich `max{n, 2^D} ≤ π(G) ≤
//! (n − D)(2^D − 1) + 1`. The rest of the module computes, from distance-ring
//! sizes alone, the smallest ratio `λ` that *any* valid weighted-subtree
//! certificate for a given root can achieve — a hard floor on how strong a
//! bound the certificate method can prove, useful both for judging how close
//! a found certificate is to the method's limit and for lower-bound
//! reasoning when the floor is attained.

use num_integer::binomial;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// The classical bounds `max{n, 2^D} ≤ π(G) ≤ (n − D)(2^D − 1) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicBounds {
    /// `max{n, 2^D}`.
    pub lower: u64,
    /// `(n − D)(2^D − 1) + 1`.
    pub upper: u64,
}

/// Computes [`BasicBounds`] for a connected graph.
pub fn basic_bounds(g: &Graph) -> BasicBounds {
    let n = g.vertex_count() as u64;
    let d = g.diameter();
    assert!(d < 63, "diameter too large for 64-bit bounds");
    let pow = 1u64 << d;
    BasicBounds {
        lower: n.max(pow),
        upper: (n - u64::from(d)) * (pow - 1) + 1,
    }
}

/// Errors from the ratio-floor computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    /// The two equivalent forms of the floor disagreed; indicates a bug, so
    /// it is checked on every call.
    #[error("ratio floor self-check failed at root {root}: {via_deficit} vs {via_excess}")]
    InternalInconsistency {
        /// Root label.
        root: String,
        /// Value from the deficit form `(n−1) + Σ (2^{e−j} − |N_j|)⁺`.
        via_deficit: u64,
        /// Value from the excess form `(2^e − 1) + Σ (|N_j| − 2^{e−j})⁺`.
        via_excess: u64,
    },
}

/// Indices `j` (distances from the root) where the ring `N_j` is smaller
/// than `2^{e(r)−j}`: rings too sparse to hold enough weight, forcing
/// surplus elsewhere. Ranges over `1 ≤ j ≤ e(r) − 1`; at `j = e(r)` the
/// comparison `|N_j| < 1` is impossible.
pub fn sparse_ring_indices(g: &Graph, root: VertexId) -> Vec<u32> {
    let e = g.eccentricity(root);
    (1..e)
        .filter(|&j| {
            let ring = g.neighborhood_ring(root, j).expect("j below eccentricity");
            (ring.len() as u64) < (1u64 << (e - j))
        })
        .collect()
}

/// Indices `j` where the ring `N_j` is larger than `2^{e(r)−j}`: rings with
/// more vertices than the geometric weight budget covers. Ranges over
/// `1 ≤ j ≤ e(r)`.
pub fn crowded_ring_indices(g: &Graph, root: VertexId) -> Vec<u32> {
    let e = g.eccentricity(root);
    (1..=e)
        .filter(|&j| {
            let ring = g.neighborhood_ring(root, j).expect("j within eccentricity");
            (ring.len() as u64) > (1u64 << (e - j))
        })
        .collect()
}

/// The ratio floor for one root together with the data it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioFloorReport {
    /// The root.
    pub root: VertexId,
    /// `e(r)`.
    pub eccentricity: u32,
    /// `|N_j|` for `j = 1, …, e(r)` (index `j − 1`).
    pub ring_sizes: Vec<usize>,
    /// Output of [`sparse_ring_indices`].
    pub sparse_indices: Vec<u32>,
    /// Output of [`crowded_ring_indices`].
    pub crowded_indices: Vec<u32>,
    /// The floor itself: every valid certificate for this root has `λ` at
    /// least this value.
    pub floor: u64,
}

/// Computes the certificate-ratio floor for one root:
/// `λ ≥ Σ_{j=1}^{e(r)} max{|N_j|, 2^{e(r)−j}}`.
///
/// Evaluated in two algebraically equivalent forms — a deficit form
/// `(n−1) + Σ_{sparse j} (2^{e−j} − |N_j|)` and an excess form
/// `(2^e − 1) + Σ_{crowded j} (|N_j| − 2^{e−j})` — which are cross-checked
/// against each other.
pub fn ratio_floor(g: &Graph, root: VertexId) -> Result<u64, BoundsError> {
    ratio_floor_report(g, root).map(|r| r.floor)
}

/// Like [`ratio_floor`], returning the ring data alongside the bound.
pub fn ratio_floor_report(g: &Graph, root: VertexId) -> Result<RatioFloorReport, BoundsError> {
    let e = g.eccentricity(root);
    assert!(e < 63, "eccentricity too large for 64-bit bounds");
    let ring_sizes: Vec<usize> = (1..=e)
        .map(|j| {
            g.neighborhood_ring(root, j)
                .expect("j within eccentricity")
                .len()
        })
        .collect();
    let size = |j: u32| ring_sizes[(j - 1) as usize] as u64;
    let pow = |j: u32| 1u64 << (e - j);

    let sparse_indices = sparse_ring_indices(g, root);
    let crowded_indices = crowded_ring_indices(g, root);

    let n = g.vertex_count() as u64;
    let via_deficit = (n - 1)
        + sparse_indices
            .iter()
            .map(|&j| pow(j) - size(j))
            .sum::<u64>();
    let via_excess = if e == 0 {
        0
    } else {
        (1u64 << e) - 1
            + crowded_indices
                .iter()
                .map(|&j| size(j) - pow(j))
                .sum::<u64>()
    };
    if via_deficit != via_excess {
        return Err(BoundsError::InternalInconsistency {
            root: g.label(root).to_string(),
            via_deficit,
            via_excess,
        });
    }
    Ok(RatioFloorReport {
        root,
        eccentricity: e,
        ring_sizes,
        sparse_indices,
        crowded_indices,
        floor: via_deficit,
    })
}

/// The largest per-root ratio floor over the whole graph: the certificate
/// method cannot bound `π(G)` below `⌊max_r floor(r)⌋ + 1`, because the
/// worst root's certificate ratio is at least this value.
pub fn ratio_floor_graph(g: &Graph) -> Result<u64, BoundsError> {
    let mut best = 0;
    for r in g.vertices() {
        best = best.max(ratio_floor(g, r)?);
    }
    let basic = basic_bounds(g);
    debug_assert!(best >= basic.lower - 1);
    Ok(best)
}

/// Closed form of the ratio floor for the `d`-dimensional hypercube from
/// any vertex: `Σ_{j=1}^{d} max{C(d,j), 2^{d−j}}` (rings of the cube are
/// binomial slices). Supports `d ≤ 60`.
pub fn cube_ratio_floor(d: u32) -> u64 {
    assert!(d <= 60, "d too large for 64-bit bounds");
    let d = u64::from(d);
    (1..=d)
        .map(|j| binomial(d, j).max(1u64 << (d - j)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{blanusa1, blanusa2, cube, flower, petersen};

    #[test]
    fn basic_bounds_on_small_graphs() {
        let p = petersen();
        let b = basic_bounds(&p.graph);
        assert_eq!(b.lower, 10); // max{10, 2^2}
        assert_eq!(b.upper, 25); // (10 − 2)·3 + 1

        let path4 = Graph::from_edge_list(
            "p4",
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap();
        let b = basic_bounds(&path4);
        assert_eq!(b.lower, 8); // 2^3
        assert_eq!(b.upper, 8); // (4 − 3)·7 + 1; the path is extremal
    }

    #[test]
    fn floor_on_a_path_is_the_power_of_two() {
        // From an end of P_4 every ring is sparse: floor = 2^3 − 1.
        let path4 = Graph::from_edge_list(
            "p4",
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap();
        let a = path4.vertex("a").unwrap();
        let report = ratio_floor_report(&path4, a).unwrap();
        assert_eq!(report.eccentricity, 3);
        assert_eq!(report.ring_sizes, vec![1, 1, 1]);
        assert_eq!(report.sparse_indices, vec![1, 2]);
        assert_eq!(report.crowded_indices, Vec::<u32>::new());
        assert_eq!(report.floor, 7);
    }

    #[test]
    fn floor_on_petersen_is_n_minus_1() {
        // Rings 3, 6 against 2, 1: no sparse rings, so the floor is n − 1.
        let p = petersen();
        for r in p.graph.vertices() {
            assert_eq!(ratio_floor(&p.graph, r).unwrap(), 9);
        }
        assert_eq!(ratio_floor_graph(&p.graph).unwrap(), 9);
    }

    #[test]
    fn floor_on_snarks() {
        let b2 = blanusa2();
        for r in b2.graph.vertices() {
            assert_eq!(ratio_floor(&b2.graph, r).unwrap(), 22, "{}", b2.graph.label(r));
        }
        let b1 = blanusa1();
        assert_eq!(ratio_floor_graph(&b1.graph).unwrap(), 22);

        assert_eq!(ratio_floor_graph(&flower(3).unwrap().graph).unwrap(), 12);
        let f5 = flower(5).unwrap();
        for r in f5.graph.vertices() {
            assert_eq!(ratio_floor(&f5.graph, r).unwrap(), 24);
        }
        // For larger flowers the floor is 2^{k+2} + 10.
        for m in [7u32, 9, 11] {
            let k = (m - 1) / 2;
            let f = flower(m).unwrap();
            assert_eq!(
                ratio_floor_graph(&f.graph).unwrap(),
                (1u64 << (k + 2)) + 10,
                "m = {m}"
            );
        }
    }

    #[test]
    fn cube_closed_form_matches_ring_computation() {
        assert_eq!(cube_ratio_floor(3), 8); // 4 + 3 + 1
        assert_eq!(cube_ratio_floor(4), 19); // 8 + 6 + 4 + 1
        for d in 1..=8 {
            let c = cube(d).unwrap();
            let zero = c.graph.vertex(&"0".repeat(d as usize)).unwrap();
            assert_eq!(
                ratio_floor(&c.graph, zero).unwrap(),
                cube_ratio_floor(d),
                "d = {d}"
            );
        }
    }

    #[test]
    fn the_two_floor_forms_agree_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0b0c);
        for _ in 0..200 {
            let n = rng.gen_range(2..=12);
            let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut edges: Vec<(String, String)> = Vec::new();
            for i in 1..n {
                let j = rng.gen_range(0..i);
                edges.push((labels[j].clone(), labels[i].clone()));
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let exists = edges.iter().any(|(a, b)| {
                        (a == &labels[i] && b == &labels[j]) || (a == &labels[j] && b == &labels[i])
                    });
                    if !exists && rng.gen_bool(0.25) {
                        edges.push((labels[i].clone(), labels[j].clone()));
                    }
                }
            }
            let g = Graph::from_edge_list("random", &labels, &edges).unwrap();
            for r in g.vertices() {
                // ratio_floor errors if the two forms disagree.
                let floor = ratio_floor(&g, r).unwrap();
                assert!(floor >= (g.vertex_count() - 1) as u64);
            }
        }
    }
}
