//! Line graphs of uniform hypergraphs with bounded pair degree, and regular
//! uniform hypergraphs from balanced partitions.
//!
//! The crate answers two questions.
//!
//! * Given a graph `G` and integers `k ≥ 2`, `p ≥ 1`: is `G` the line graph of a
//!   `k`-uniform hypergraph in which no pair of vertices lies in more than `p`
//!   edges? [`recognize`] returns a certificate either way (a forbidden
//!   structure, or a Krausz clique cover) once the minimum edge degree is large
//!   enough, and [`reconstruct`] turns the cover into a hypergraph whose line
//!   graph is `G` vertex for vertex.
//! * Given `N`, `k`, `d`: is there a `k`-uniform hypergraph on `N` vertices with
//!   every degree equal to `d`? Exactly when `k | dN`, and
//!   [`regular_hypergraph`] builds one from a balanced partition of all
//!   `k`-subsets computed with integral max-flow.
//!
//! ```
//! use hyperline::{line_graph, recognize, reconstruct, Graph, Hypergraph, Verdict};
//!
//! // seven pairs through a common vertex: the line graph is K7
//! let star = Hypergraph::new(8, (1..8).map(|v| vec![0, v]).collect()).unwrap();
//! let g = line_graph(&star);
//! assert_eq!(g, Graph::complete(7));
//!
//! assert!(matches!(recognize(&g, 2, 1).unwrap(), Verdict::Member(_)));
//! let h = reconstruct(&g, 2, 1).unwrap();
//! assert_eq!(line_graph(&h), g);
//! ```
//!
//! The `oracle` module holds exhaustive small-instance checkers that the test
//! suites use as ground truth.

mod bitset;

pub mod baranyai;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod oracle;
pub mod recognition;
pub mod reconstruction;

pub use baranyai::{
    baranyai_partition, build_extension_network, extend, max_flow, regular_hypergraph,
    BaranyaiPartition, Flow, FlowNetwork, PartialSet, PartitionState, RegularHypergraph,
};
pub use error::{Error, ErrorKind, Result};
pub use graph::{line_graph, Claw, Graph};
pub use hypergraph::Hypergraph;
pub use recognition::{recognize, Thresholds, Verdict, Witness};
pub use reconstruction::{
    cover_to_hypergraph, hypergraph_to_cover, krausz_cover, reconstruct, validate_cover,
    CliqueCover, CoverCheck, CoverViolation,
};

// The guide's and the README's code blocks run as doctests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/recognition.md")]
    mod recognition {}
    #[doc = include_str!("../../../book/src/reconstruction.md")]
    mod reconstruction {}
    #[doc = include_str!("../../../book/src/baranyai.md")]
    mod baranyai {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
