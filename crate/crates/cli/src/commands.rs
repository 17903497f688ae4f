use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use oni_kit::fixtures::{self, Fixture};
use oni_kit::graph::{self, Graph};
use oni_kit::gvd::{self, GvdCertificate};
use oni_kit::universe::{SpernerFamily, Universe, VertexSet};
use oni_kit::{golden, SimplicialComplex, SquareFreeIdeal};

use crate::{BuildCmd, Command, ComplexCmd, Format, GraphCmd, GvdCmd, IdealCmd, Options, Outcome};

pub enum Failure {
    /// Malformed input or a library error; exit status 2.
    Error(String),
    /// A report with failed checks; exit status 1.
    Checks(Value),
}

impl From<oni_kit::Error> for Failure {
    fn from(e: oni_kit::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Error(e)
    }
}

type Res<T> = Result<T, Failure>;

fn doc(value: Value) -> Res<Outcome> {
    Ok(Outcome { doc: value, verdict: None })
}

fn verdict(value: Value, truth: bool) -> Res<Outcome> {
    Ok(Outcome {
        doc: value,
        verdict: Some(truth),
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn parse<T: DeserializeOwned>(text: &str) -> Res<T> {
    serde_json::from_str(text).map_err(|e| Failure::Error(format!("invalid input: {e}")))
}

struct Inputs<'a> {
    texts: Vec<String>,
    opts: &'a Options,
}

impl Inputs<'_> {
    fn exactly(&self, n: usize) -> Res<&[String]> {
        if self.texts.len() == n {
            Ok(&self.texts)
        } else {
            Err(Failure::Error(format!(
                "expected {n} input document(s), got {}",
                self.texts.len()
            )))
        }
    }

    fn one<T: DeserializeOwned>(&self) -> Res<T> {
        parse(&self.exactly(1)?[0])
    }

    fn two<T: DeserializeOwned>(&self) -> Res<(T, T)> {
        let t = self.exactly(2)?;
        Ok((parse(&t[0])?, parse(&t[1])?))
    }

    fn graph_at(&self, i: usize) -> Res<Graph> {
        let text = &self.texts[i];
        match self.opts.format {
            Format::Json => parse(text),
            Format::Text => Ok(Graph::parse_text(text)?),
        }
    }

    fn graph(&self) -> Res<Graph> {
        self.exactly(1)?;
        self.graph_at(0)
    }
}

fn labels(universe: &Universe, set: &VertexSet) -> Value {
    json!(universe.names(set))
}

pub fn run(command: &Command, opts: &Options) -> Res<Outcome> {
    let needs_input = !matches!(
        command,
        Command::Fixture { .. }
            | Command::VerifyPaper
            | Command::Build(BuildCmd::Path { .. })
            | Command::Build(BuildCmd::OSeq { .. })
    );
    let texts = if needs_input { opts.read_inputs()? } else { Vec::new() };
    let inputs = Inputs { texts, opts };
    match command {
        Command::Dualize => dualize(&inputs),
        Command::Ideal(c) => ideal(c, &inputs),
        Command::Complex(c) => complex(c, &inputs),
        Command::Graph(c) => graph_cmd(c, &inputs),
        Command::Build(c) => build(c, &inputs),
        Command::Gvd(c) => gvd_cmd(c, &inputs),
        Command::Fixture { name } => fixture(name),
        Command::VerifyPaper => verify_paper(),
    }
}

fn dualize(inputs: &Inputs) -> Res<Outcome> {
    let family: SpernerFamily = inputs.one()?;
    let dual = family.minimal_transversals();
    let oracle = if family.universe().len() <= inputs.opts.cap_oracle {
        json!(family.minimal_transversals_brute_force(inputs.opts.cap_oracle)? == dual)
    } else {
        Value::Null
    };
    let agrees = oracle.as_bool().unwrap_or(true);
    verdict(
        json!({ "minimal_transversals": dual.to_labels(), "oracle_agrees": oracle }),
        agrees,
    )
}

fn ideal(cmd: &IdealCmd, inputs: &Inputs) -> Res<Outcome> {
    match cmd {
        IdealCmd::Primes => {
            let i: SquareFreeIdeal = inputs.one()?;
            let p = i.minimal_primes()?;
            doc(json!({ "minimal_primes": p.primes.to_labels(), "zero_ideal": p.zero_ideal }))
        }
        IdealCmd::Unmixed => {
            let i: SquareFreeIdeal = inputs.one()?;
            let u = i.is_unmixed()?;
            verdict(json!({ "unmixed": u }), u)
        }
        IdealCmd::SrComplex => {
            let i: SquareFreeIdeal = inputs.one()?;
            doc(to_value(&i.stanley_reisner_complex()))
        }
        IdealCmd::Equal => {
            let (a, b): (SquareFreeIdeal, SquareFreeIdeal) = inputs.two()?;
            let eq = a == b;
            verdict(json!({ "equal": eq }), eq)
        }
        IdealCmd::Sum => {
            let (a, b): (SquareFreeIdeal, SquareFreeIdeal) = inputs.two()?;
            doc(to_value(&a.sum(&b)?))
        }
        IdealCmd::Intersect => {
            let (a, b): (SquareFreeIdeal, SquareFreeIdeal) = inputs.two()?;
            doc(to_value(&a.intersect(&b)?))
        }
    }
}

fn complex(cmd: &ComplexCmd, inputs: &Inputs) -> Res<Outcome> {
    let cap = inputs.opts.cap_forest;
    if let ComplexCmd::Join = cmd {
        let (a, b): (SimplicialComplex, SimplicialComplex) = inputs.two()?;
        return doc(to_value(&a.join(&b)?));
    }
    let c: SimplicialComplex = inputs.one()?;
    let u = c.universe().clone();
    match cmd {
        ComplexCmd::Vd => {
            let cert = c.is_vertex_decomposable()?;
            let ok = cert.is_some();
            verdict(json!({ "vertex_decomposable": ok, "certificate": cert }), ok)
        }
        ComplexCmd::SrIdeal => doc(to_value(&c.stanley_reisner_ideal())),
        ComplexCmd::FacetIdeal => doc(to_value(&c.facet_ideal()?)),
        ComplexCmd::Covers => {
            let covers = c.minimal_vertex_covers()?;
            doc(json!({ "minimal_vertex_covers": covers.to_labels(), "unmixed": covers.is_uniform() }))
        }
        ComplexCmd::Tree => {
            let forest = c.is_simplicial_forest(cap)?;
            let tree = forest && c.is_connected();
            let leaf = c.find_leaf().map(|l| {
                json!({
                    "facet": labels(&u, &l.facet),
                    "joint": l.joint.map(|j| labels(&u, &j)),
                })
            });
            verdict(
                json!({ "simplicial_forest": forest, "simplicial_tree": tree, "leaf": leaf }),
                tree,
            )
        }
        ComplexCmd::Cycle => {
            let check = c.is_cycle(cap)?;
            let order = check
                .strong_neighbor_order
                .map(|o| o.iter().map(|f| labels(&u, f)).collect::<Vec<_>>());
            verdict(
                json!({ "cycle": check.is_cycle, "strong_neighbor_order": order }),
                check.is_cycle,
            )
        }
        ComplexCmd::Join => unreachable!("handled above"),
    }
}

fn heights_doc(g: &Graph) -> Value {
    let h = g.heights();
    let u = g.universe();
    let per_vertex: BTreeMap<&str, Option<usize>> =
        (0..g.vertex_count()).map(|v| (g.label(v), h.of(v))).collect();
    let strata: Vec<Value> = (0..=h.height).map(|k| labels(u, &h.stratum(k))).collect();
    json!({
        "heights": per_vertex,
        "height": h.height,
        "strata": strata,
        "odd": labels(u, &h.odd()),
        "even": labels(u, &h.even()),
        "balanced": h.balanced,
        "tree": h.tree,
        "forest": h.forest,
    })
}

fn graph_cmd(cmd: &GraphCmd, inputs: &Inputs) -> Res<Outcome> {
    if let GraphCmd::Decompose = cmd {
        return decompose(inputs);
    }
    let g = inputs.graph()?;
    match cmd {
        GraphCmd::Oni => doc(to_value(&g.oni())),
        GraphCmd::OddOni => doc(to_value(&g.odd_oni()?)),
        GraphCmd::TdSets => doc(json!({ "minimal_td_sets": g.minimal_td_sets().to_labels() })),
        GraphCmd::OddTdSets => doc(json!({ "minimal_odd_td_sets": g.minimal_odd_td_sets()?.to_labels() })),
        GraphCmd::Heights => doc(heights_doc(&g)),
        GraphCmd::Unmixed => {
            let enumerative = g.is_td_unmixed();
            let structural = if g.is_balanced_tree() {
                Some(g.is_td_unmixed_structural()?)
            } else {
                None
            };
            verdict(json!({ "td_unmixed": enumerative, "structural": structural }), enumerative)
        }
        GraphCmd::Stable => doc(to_value(&g.stable_complex())),
        GraphCmd::EvenStable => doc(to_value(&g.even_stable_complex()?)),
        GraphCmd::Chordal => {
            let c = g.is_chordal();
            verdict(json!({ "chordal": c }), c)
        }
        GraphCmd::SplitVertex => {
            let u = g.find_split_vertex()?;
            doc(json!({ "split_vertex": g.label(u) }))
        }
        GraphCmd::Decompose => unreachable!("handled above"),
    }
}

fn decompose(inputs: &Inputs) -> Res<Outcome> {
    let t = inputs.graph_at(0).map_err(|e| match inputs.texts.len() {
        0 => Failure::Error("expected a tree".into()),
        _ => e,
    })?;
    match inputs.texts.len() {
        1 => {
            let found = t.search_decomposition(inputs.opts.cap_search)?;
            let ok = found.is_some();
            verdict(json!({ "decomposition": found }), ok)
        }
        3 => {
            let (first, second) = (inputs.graph_at(1)?, inputs.graph_at(2)?);
            let report = t.verify_decomposition(&first, &second)?;
            verdict(
                json!({ "valid": report.holds(), "report": report }),
                report.holds(),
            )
        }
        n => Err(Failure::Error(format!(
            "decompose takes one tree, or a tree and two pieces; got {n} inputs"
        ))),
    }
}

fn build(cmd: &BuildCmd, inputs: &Inputs) -> Res<Outcome> {
    match cmd {
        BuildCmd::Path { n } => doc(to_value(&graph::path_graph(*n))),
        BuildCmd::OSeq { vertices } => doc(to_value(&graph::o_sequence(vertices)?)),
        BuildCmd::Realize => {
            let family: SpernerFamily = inputs.one()?;
            doc(to_value(&graph::realize_as_oni(&family)?))
        }
        BuildCmd::EdgeJoin { first, second } => {
            inputs.exactly(2)?;
            let (a, b) = (inputs.graph_at(0)?, inputs.graph_at(1)?);
            doc(to_value(&graph::edge_join(&a, &b, first, second)?))
        }
    }
}

fn gvd_cmd(cmd: &GvdCmd, inputs: &Inputs) -> Res<Outcome> {
    match cmd {
        GvdCmd::Check => {
            let i: SquareFreeIdeal = inputs.one()?;
            let cert = gvd::is_gvd(&i);
            let ok = cert.is_some();
            verdict(json!({ "gvd": ok, "certificate": cert }), ok)
        }
        GvdCmd::Split { y } => {
            let i: SquareFreeIdeal = inputs.one()?;
            let (c, n) = gvd::split(&i, y)?;
            let valid = gvd::is_valid_geometric_decomposition(&i, y)?;
            verdict(json!({ "C": c, "N": n, "valid": valid }), valid)
        }
        GvdCmd::CertifyTree => {
            let t = inputs.graph()?;
            let cert = gvd::certify_tree_gvd(&t)?;
            let valid = gvd::validate_certificate(&t.odd_oni()?, &cert);
            verdict(json!({ "certificate": cert, "valid": valid }), valid)
        }
        GvdCmd::Validate => {
            let t = inputs.exactly(2)?;
            let i: SquareFreeIdeal = parse(&t[0])?;
            let cert: GvdCertificate = parse(&t[1])?;
            let valid = gvd::validate_certificate(&i, &cert);
            verdict(json!({ "valid": valid }), valid)
        }
    }
}

fn fixture(name: &str) -> Res<Outcome> {
    match fixtures::by_name(name) {
        Some(Fixture::Graph(g)) => doc(to_value(&g)),
        Some(Fixture::Family(f)) => doc(to_value(&f)),
        None => Err(Failure::Error(format!(
            "unknown fixture {name:?}; available: {}",
            fixtures::NAMES.join(", ")
        ))),
    }
}

fn verify_paper() -> Res<Outcome> {
    let checks = golden::run_all();
    let failed = checks.iter().filter(|c| !c.pass).count();
    let report = json!({
        "checks": checks,
        "passed": checks.len() - failed,
        "failed": failed,
    });
    if failed == 0 {
        verdict(report, true)
    } else {
        Err(Failure::Checks(report))
    }
}
