//! Reference values checked end to end by `oni-kit verify-paper`.

use std::sync::Arc;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::fixtures;
use crate::graph::{path_graph, realize_as_oni, Graph};
use crate::gvd::{certify_tree_gvd, is_gvd, split, validate_certificate};
use crate::ideal::SquareFreeIdeal;
use crate::universe::{transversals, SpernerFamily, Universe, VertexSet};

/// Computes the minimal transversals of a family of sets.
pub type TransversalKernel = fn(&[VertexSet]) -> Vec<VertexSet>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub anchor: &'static str,
    pub pass: bool,
}

/// Runs all checks with the library's own transversal kernel.
pub fn run_all() -> Vec<GoldenCheck> {
    run_with_kernel(transversals)
}

fn labels(sets: &[&[&str]]) -> Vec<Vec<String>> {
    sets.iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn dual(kernel: TransversalKernel, family: &SpernerFamily) -> Vec<Vec<String>> {
    kernel(family.sets())
        .iter()
        .map(|s| family.universe().names(s))
        .collect()
}

fn isolated(names: &[&str]) -> Graph {
    Graph::new(names.iter().copied(), Vec::<(&str, &str)>::new()).expect("distinct labels")
}

fn cycle_edge_ideal(n: usize) -> SquareFreeIdeal {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let universe = Arc::new(Universe::new(names.clone()).expect("distinct labels"));
    SquareFreeIdeal::from_labels(universe, (0..n).map(|i| [names[i].clone(), names[(i + 1) % n].clone()]))
        .expect("labels exist")
}

fn vd(complex: &SimplicialComplex) -> bool {
    matches!(complex.is_vertex_decomposable(), Ok(Some(_)))
}

/// Runs all checks, computing every dual that is compared against a printed
/// value through `kernel`.
pub fn run_with_kernel(kernel: TransversalKernel) -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    let mut check = |name, anchor, pass: bool| out.push(GoldenCheck { name, anchor, pass });

    let family = fixtures::beg_a();
    let printed_dual = labels(&[
        &["v1", "v3"],
        &["v1", "v5"],
        &["v2", "v3"],
        &["v2", "v4"],
        &["v3", "v4"],
    ]);
    check("realization family dual", "realization example, step 2", dual(kernel, &family) == printed_dual);
    let realized = realize_as_oni(&family);
    check(
        "realization vertex count",
        "realization example, step 3",
        realized.as_ref().is_ok_and(|g| g.vertex_count() == 10),
    );
    check(
        "realization TD-sets",
        "realization construction",
        realized.as_ref().is_ok_and(|g| g.minimal_td_sets().to_labels() == family.to_labels()),
    );
    check(
        "realization neighborhood ideal",
        "realization example, ideal",
        realized.as_ref().is_ok_and(|g| g.oni().generator_labels() == printed_dual),
    );
    check(
        "realization chordal",
        "chordality of realizations",
        realized.as_ref().is_ok_and(Graph::is_chordal),
    );

    let t = fixtures::t_a();
    let nb = |l: &str| t.universe().names(t.neighbors(t.position(l).expect("fixture label")));
    check(
        "T_A neighborhoods",
        "neighborhood example",
        nb("l1") == ["s1"] && nb("s1") == ["l1", "u1"] && nb("u1") == ["r1", "s1"] && nb("r1") == ["u1", "u2"],
    );
    let h = t.heights();
    let stratum = |k| t.universe().names(&h.stratum(k));
    check(
        "T_A height strata",
        "height example",
        stratum(0) == ["l1", "l2", "l3", "l4"]
            && stratum(1) == ["s1", "s2", "s3"]
            && stratum(2) == ["u1", "u2", "u3"]
            && stratum(3) == ["r1", "r2"],
    );

    let p = path_graph(6);
    let neighborhoods = SpernerFamily::minimize(p.universe().clone(), (0..p.vertex_count()).map(|v| p.neighbors(v).clone()))
        .expect("neighborhoods lie in the universe");
    check(
        "P6 minimal TD-sets",
        "path P6",
        dual(kernel, &neighborhoods) == labels(&[&["0", "1", "4", "5"], &["1", "2", "4", "5"], &["1", "2", "5", "6"]]),
    );
    let odd = p.odd_oni().expect("P6 is balanced");
    check(
        "P6 minimal odd TD-sets",
        "path P6",
        dual(kernel, odd.generators()) == labels(&[&["0", "4"], &["2", "4"], &["2", "6"]]),
    );
    check(
        "P6 neighborhood ideal",
        "path P6",
        p.oni().generator_labels() == labels(&[&["1"], &["5"], &["0", "2"], &["2", "4"], &["4", "6"]]),
    );
    check(
        "P6 odd neighborhood ideal",
        "path P6",
        odd.generator_labels() == labels(&[&["0", "2"], &["2", "4"], &["4", "6"]]),
    );
    check(
        "P6 even-stable complex",
        "path P6",
        p.even_stable_complex()
            .is_ok_and(|c| c.facet_labels() == labels(&[&["0", "4"], &["0", "6"], &["2", "6"]])),
    );

    let base = fixtures::gvd_base();
    let base_ideal = base.odd_oni().expect("fixture is balanced");
    let base_split = split(&base_ideal, "u");
    check(
        "base-case split at u",
        "main theorem, two height-2 vertices",
        base_split.is_ok_and(|(c, n)| {
            c.generator_labels() == labels(&[&["u'"], &["l1", "l2"]])
                && n.generator_labels() == labels(&[&["l'1", "l'2", "u'"]])
        }),
    );

    let holds = |tree: &Graph, second: &Graph| {
        tree.verify_decomposition(tree, second).is_ok_and(|r| r.holds())
    };
    check("P6 decomposition", "decomposition theorem", holds(&p, &isolated(&["3"])));
    check("T_A decomposition", "decomposition theorem", holds(&t, &isolated(&["r1", "r2"])));
    check(
        "height-2 trees are mixed",
        "unmixed balanced trees",
        !path_graph(4).is_td_unmixed() && Graph::from_edges([("c", "a"), ("c", "b")]).is_ok_and(|s| s.is_td_unmixed()),
    );

    for (name, tree) in [("main theorem on P6", &p), ("main theorem on T_A", &t), ("main theorem on base tree", &base)] {
        let ideal = tree.odd_oni().expect("balanced");
        let pass = is_gvd(&ideal).is_some()
            && certify_tree_gvd(tree).is_ok_and(|c| validate_certificate(&ideal, &c))
            && tree.even_stable_complex().is_ok_and(|c| vd(&c));
        check(name, "main theorem", pass);
    }

    let c7 = cycle_edge_ideal(7);
    check(
        "7-cycle negative control",
        "unmixed but not decomposable",
        c7.is_unmixed().unwrap_or(false) && is_gvd(&c7).is_none() && !vd(&c7.stanley_reisner_complex()),
    );
    out
}
