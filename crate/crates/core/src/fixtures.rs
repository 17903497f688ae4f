//! Named example objects used throughout the tests and the command line.

use std::sync::Arc;

use crate::graph::{path_graph, Graph};
use crate::universe::{SpernerFamily, Universe};

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 4] = ["p6", "t_a", "beg_A", "gvd_base"];

/// A fixture in its natural type.
#[derive(Debug, Clone)]
pub enum Fixture {
    Graph(Graph),
    Family(SpernerFamily),
}

pub fn by_name(name: &str) -> Option<Fixture> {
    match name {
        "p6" => Some(Fixture::Graph(p6())),
        "t_a" => Some(Fixture::Graph(t_a())),
        "beg_A" => Some(Fixture::Family(beg_a())),
        "gvd_base" => Some(Fixture::Graph(gvd_base())),
        _ => None,
    }
}

pub fn p6() -> Graph {
    path_graph(6)
}

/// A balanced tree of height 3 with four leaves, three vertices at each of
/// heights 1 and 2, and two at height 3.
pub fn t_a() -> Graph {
    Graph::from_edges([
        ("l1", "s1"),
        ("l2", "s2"),
        ("l3", "s3"),
        ("l4", "s3"),
        ("s1", "u1"),
        ("s2", "u2"),
        ("s3", "u3"),
        ("u1", "r1"),
        ("u2", "r1"),
        ("u2", "r2"),
        ("u3", "r2"),
    ])
    .expect("fixture edges are valid")
}

/// The family `{v1v2v3, v1v4, v2v3v5, v3v4v5}` over `v1..v5`.
pub fn beg_a() -> SpernerFamily {
    let universe = Arc::new(Universe::new(["v1", "v2", "v3", "v4", "v5"]).expect("distinct"));
    SpernerFamily::from_labels(
        universe,
        [
            vec!["v1", "v2", "v3"],
            vec!["v1", "v4"],
            vec!["v2", "v3", "v5"],
            vec!["v3", "v4", "v5"],
        ],
    )
    .expect("fixture sets are valid")
}

/// The TD-unmixed balanced tree with exactly two height-2 vertices `u`, `u'`,
/// each carrying two leaves through its height-1 neighbor.
pub fn gvd_base() -> Graph {
    Graph::from_edges([
        ("l1", "s"),
        ("l2", "s"),
        ("s", "u"),
        ("u", "r"),
        ("r", "u'"),
        ("u'", "s'"),
        ("s'", "l'1"),
        ("s'", "l'2"),
    ])
    .expect("fixture edges are valid")
}
