//! Finite simple graphs over a labeled universe.
//!
//! Trees and forests get extra structure: vertex heights (distance to the
//! nearest leaf), the balanced property, and the open-neighborhood ideals
//! and domination families built in the submodules.

mod builders;
mod chordal;
mod decomposition;
mod domination;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::universe::{Universe, VertexSet};

pub use builders::{edge_join, o_sequence, path_graph};
pub use chordal::{is_chordal_brute_force, realize_as_oni};
pub use decomposition::{DecompositionReport, TreeDecomposition, SEARCH_VERTEX_CAP};

/// A simple undirected graph; `adjacency[v]` is the open neighborhood of `v`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct Graph {
    universe: Arc<Universe>,
    adjacency: Vec<VertexSet>,
}

/// Heights of all vertices, with the strata and shape flags derived from them.
///
/// Vertices in a component without leaves (other than isolated vertices) have no height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    pub heights: Vec<Option<usize>>,
    pub height: usize,
    pub forest: bool,
    pub tree: bool,
    pub balanced: bool,
}

impl HeightProfile {
    pub fn of(&self, v: usize) -> Option<usize> {
        self.heights[v]
    }

    /// `V_k`.
    pub fn stratum(&self, k: usize) -> VertexSet {
        self.select(|h| h == k)
    }

    pub fn odd(&self) -> VertexSet {
        self.select(|h| h % 2 == 1)
    }

    pub fn even(&self) -> VertexSet {
        self.select(|h| h % 2 == 0)
    }

    fn select(&self, keep: impl Fn(usize) -> bool) -> VertexSet {
        self.heights
            .iter()
            .enumerate()
            .filter(|(_, h)| h.is_some_and(&keep))
            .map(|(v, _)| v)
            .collect()
    }
}

impl Graph {
    /// Builds a graph from vertex labels and label pairs. Edge endpoints must be
    /// declared vertices; loops are rejected and repeated edges merged.
    pub fn new<V, S, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let universe = Arc::new(Universe::new(vertices)?);
        let mut adjacency = vec![VertexSet::new(); universe.len()];
        for (a, b) in edges {
            let (a, b) = (universe.require(a.as_ref())?, universe.require(b.as_ref())?);
            if a == b {
                return input(format!("loop at {:?}", universe.label(a)));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(Self { universe, adjacency })
    }

    /// A graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges<E, A, B>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let edges: Vec<(String, String)> = edges
            .into_iter()
            .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
            .collect();
        let vertices = Universe::from_labels(edges.iter().flat_map(|(a, b)| [a.clone(), b.clone()]));
        Self::new(vertices.labels().to_vec(), edges)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.universe.full()
    }

    pub fn label(&self, v: usize) -> &str {
        self.universe.label(v)
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.universe.position(label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.universe.require(label)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v].with(v)
    }

    /// `N(S)`: the union of the open neighborhoods of the members of `set`.
    pub fn neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::new(), |acc, v| acc.union(&self.adjacency[v]))
    }

    /// `N[S]`.
    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        self.neighborhood_of(set).union(set)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as position pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, n)| n.iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| (self.label(a).to_string(), self.label(b).to_string()))
            .collect()
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adjacency[v].iter() {
                    if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected() && self.is_forest()
    }

    /// The subgraph induced by the vertices in `keep`.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let universe = Arc::new(self.universe.restrict(keep));
        let old: Vec<usize> = keep.iter().collect();
        let adjacency = old
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|w| old.binary_search(&w).ok())
                    .collect()
            })
            .collect();
        Graph { universe, adjacency }
    }

    /// `G ∖ S`: the subgraph induced by the complement of `set`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Graph {
        self.induced(&self.vertices().difference(set))
    }

    pub fn delete_labels<I, S>(&self, labels: I) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.delete_vertices(&self.universe.set(labels)?))
    }

    /// The component containing `v`, as an induced subgraph.
    pub fn component_of(&self, v: usize) -> Graph {
        let comp = self
            .components()
            .into_iter()
            .find(|c| c.contains(v))
            .expect("every vertex lies in a component");
        self.induced(&comp)
    }

    /// True iff every vertex and edge of `self` (matched by label) belongs to `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        let Ok(map) = (0..self.vertex_count())
            .map(|v| other.require(self.label(v)))
            .collect::<Result<Vec<_>>>()
        else {
            return false;
        };
        self.edges()
            .into_iter()
            .all(|(a, b)| other.has_edge(map[a], map[b]))
    }

    /// Heights via multi-source BFS from the leaves; isolated vertices get height 0.
    pub fn heights(&self) -> HeightProfile {
        let n = self.vertex_count();
        let mut heights = vec![None; n];
        let mut queue = VecDeque::new();
        for v in 0..n {
            match self.degree(v) {
                0 => heights[v] = Some(0),
                1 => {
                    heights[v] = Some(0);
                    queue.push_back(v);
                }
                _ => {}
            }
        }
        while let Some(v) = queue.pop_front() {
            let next = heights[v].map(|h| h + 1);
            for w in self.adjacency[v].iter() {
                if heights[w].is_none() {
                    heights[w] = next;
                    queue.push_back(w);
                }
            }
        }
        let forest = self.is_forest();
        let tree = forest && self.is_connected() && n > 0;
        let balanced = forest
            && heights.iter().all(Option::is_some)
            && self.edges().into_iter().all(|(a, b)| heights[a] != heights[b]);
        HeightProfile {
            height: heights.iter().flatten().copied().max().unwrap_or(0),
            heights,
            forest,
            tree,
            balanced,
        }
    }

    pub fn is_balanced_forest(&self) -> bool {
        self.heights().balanced
    }

    pub fn is_balanced_tree(&self) -> bool {
        let h = self.heights();
        h.balanced && h.tree
    }

    /// Relabels every vertex through `rename`; the result must stay injective.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<Graph> {
        let labels: Vec<String> = self.universe.labels().iter().map(|l| rename(l)).collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect();
        Graph::new(labels, edges)
    }

    /// Parses the text format: one `a b` edge per line, `# vertex c` declares a
    /// vertex, other `#` lines and blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix('#') {
                let mut words = rest.split_whitespace();
                if words.next() == Some("vertex") {
                    vertices.extend(words.map(str::to_string));
                }
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                [] => {}
                [a, b] => {
                    vertices.push(a.to_string());
                    vertices.push(b.to_string());
                    edges.push((a.to_string(), b.to_string()));
                }
                _ => return input(format!("line {}: expected `a b`, got {line:?}", lineno + 1)),
            }
        }
        let universe = Universe::from_labels(vertices);
        Graph::new(universe.labels().to_vec(), edges)
    }

    /// Inverse of [`Graph::parse_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                out.push_str(&format!("# vertex {}\n", self.label(v)));
            }
        }
        for (a, b) in self.edge_labels() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.universe)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

/// JSON form: `{"vertices": [...], "edges": [["a", "b"], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl TryFrom<GraphDoc> for Graph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        Graph::new(doc.vertices, doc.edges)
    }
}

impl From<Graph> for GraphDoc {
    fn from(g: Graph) -> Self {
        GraphDoc {
            vertices: g.universe.labels().to_vec(),
            edges: g.edge_labels(),
        }
    }
}
