//! Graph pebbling bounds via weighted-subtree certificates.
//!
//! A *pebbling move* removes two pebbles from a vertex and places one pebble
//! on an adjacent vertex. The *pebbling number* `π(G)` of a connected graph is
//! the least `t` such that from every distribution of `t` pebbles, every
//! target vertex can receive a pebble. This crate provides both sides of the
//! bounding game on small graphs:
//!
//! - [`exact`] — an exhaustive solver for `π(G, r)` and `π(G)` with
//!   colexicographic unsolvable witnesses,
//! - [`certificate`] — weighted-subtree strategies whose combined weights
//!   certify upper bounds `π(G, r) ≤ ⌊λ⌋ + 1` via the Weight Function Lemma,
//! - [`bounds`] — closed-form lower bounds on the best achievable certificate
//!   ratio, from neighborhood-ring counting,
//! - [`heuristic`] — an automatic certificate builder (trunks from shortest
//!   paths, branch filling, and two refinement passes), plus hand-checked
//!   reference certificates for the bundled families,
//! - [`families`] — generators for the Petersen graph, both Blanuša snarks,
//!   the flower snarks, and hypercubes,
//! - [`graph`] and [`rational`] — the underlying immutable graph type and
//!   exact rational arithmetic.

pub mod bounds;
pub mod certificate;
pub mod exact;
pub mod families;
pub mod graph;
pub mod heuristic;
pub mod rational;

pub use graph::{Graph, VertexId};
pub use rational::Rational;
