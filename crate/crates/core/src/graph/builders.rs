//! Paths, edge joins and the O-operator that grows TD-unmixed trees.

use super::Graph;
use crate::error::{input, precondition, Error, Result};

/// `P_n`: vertices `"0"` to `"n"` with consecutive edges.
pub fn path_graph(n: usize) -> Graph {
    path_with_labels((0..=n).map(|i| i.to_string()).collect())
}

fn path_with_labels(labels: Vec<String>) -> Graph {
    let edges: Vec<(String, String)> = labels
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    Graph::new(labels, edges).expect("path labels are distinct")
}

/// Disjoint union of `g1` and `g2` plus the edge `{a, b}`.
pub fn edge_join(g1: &Graph, g2: &Graph, a: &str, b: &str) -> Result<Graph> {
    g1.require(a)?;
    g2.require(b)?;
    if let Some(l) = g2.universe().labels().iter().find(|l| g1.universe().contains_label(l)) {
        return input(format!("label {l:?} occurs in both graphs; relabel first"));
    }
    let vertices = g1
        .universe()
        .labels()
        .iter()
        .chain(g2.universe().labels())
        .cloned();
    let edges = g1
        .edge_labels()
        .into_iter()
        .chain(g2.edge_labels())
        .chain([(a.to_string(), b.to_string())]);
    Graph::new(vertices, edges)
}

impl Graph {
    /// `O(T, v)`: hangs a fresh path from `v` according to its height.
    ///
    /// Height 1 attaches `P_0`, height 2 attaches `P_3` by its end vertex 3,
    /// height 3 attaches `P_2` by its end vertex 2. New vertices are labeled
    /// `p{k}_{i}` with `k` one past the largest counter already in use.
    pub fn o_extend(&self, v: &str) -> Result<Graph> {
        let h = self.heights();
        if !(h.balanced && h.tree && h.height == 3) {
            return precondition("the O-operator needs a balanced tree of height 3");
        }
        let pos = self.require(v)?;
        let (len, anchor) = match h.of(pos) {
            Some(1) => (0, 0),
            Some(2) => (3, 3),
            Some(3) => (2, 2),
            _ => return input(format!("vertex {v:?} has height 0")),
        };
        let k = self.next_path_counter();
        let labels: Vec<String> = (0..=len).map(|i| format!("p{k}_{i}")).collect();
        let anchor = labels[anchor].clone();
        edge_join(self, &path_with_labels(labels), v, &anchor)
    }

    fn next_path_counter(&self) -> usize {
        self.universe()
            .labels()
            .iter()
            .filter_map(|l| {
                let (k, i) = l.strip_prefix('p')?.split_once('_')?;
                i.parse::<usize>().ok()?;
                k.parse::<usize>().ok()
            })
            .max()
            .map_or(1, |k| k + 1)
    }
}

/// `O(P_6, (v_1, …, v_k))`, folding [`Graph::o_extend`] from `P_6`.
pub fn o_sequence<I, S>(vertices: I) -> Result<Graph>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    vertices
        .into_iter()
        .enumerate()
        .try_fold(path_graph(6), |t, (step, v)| {
            t.o_extend(v.as_ref()).map_err(|e| match e {
                Error::Input(m) => Error::Input(format!("step {step}: {m}")),
                Error::Precondition(m) => Error::Precondition(format!("step {step}: {m}")),
                other => other,
            })
        })
}

impl Graph {
    /// The canonically first vertex of height 2 and degree 2 in a TD-unmixed
    /// balanced tree of height 3.
    pub fn find_split_vertex(&self) -> Result<usize> {
        let h = self.heights();
        if !(h.balanced && h.tree && h.height == 3) {
            return precondition("split vertex needs a balanced tree of height 3");
        }
        if !self.is_td_unmixed_structural()? {
            return precondition("split vertex needs a TD-unmixed tree");
        }
        match h.stratum(2).iter().find(|&u| self.degree(u) == 2) {
            Some(u) => Ok(u),
            None => precondition("no height-2 vertex of degree 2"),
        }
    }
}
