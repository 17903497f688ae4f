//! Splitting a tree into two balanced forests whose odd neighborhood ideals,
//! together with the height-1 variables, generate the neighborhood ideal.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{input, precondition, Error, Result};
use crate::ideal::SquareFreeIdeal;
use crate::universe::VertexSet;

/// Default cap on the vertex count accepted by [`Graph::search_decomposition`].
pub const SEARCH_VERTEX_CAP: usize = 18;

/// A candidate pair of subgraphs `(T', T'')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub first: Graph,
    pub second: Graph,
}

/// The outcome of each of the three conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub balanced_forests: bool,
    pub partition: bool,
    pub ideal_sum: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.balanced_forests && self.partition && self.ideal_sum
    }
}

impl Graph {
    /// Checks `(first, second)` against the tree `self`:
    /// both are balanced forests, `V = V_even(T') ⊔ V_even(T'') ⊔ V_1(T)`, and
    /// `𝒩(T) = 𝒩_odd(T') + 𝒩_odd(T'') + ⟨V_1(T)⟩`.
    pub fn verify_decomposition(&self, first: &Graph, second: &Graph) -> Result<DecompositionReport> {
        if !self.is_tree() {
            return precondition("decomposition needs a tree");
        }
        for (name, g) in [("first", first), ("second", second)] {
            if !g.is_subgraph_of(self) {
                return input(format!("{name} piece is not a subgraph of the tree"));
            }
        }
        let (h1, h2) = (first.heights(), second.heights());
        let balanced_forests = h1.balanced && h2.balanced;
        let v1 = self.heights().stratum(1);
        let lift = |g: &Graph, set: &VertexSet| {
            g.universe()
                .translate(set, self.universe())
                .expect("subgraph labels lie in the tree")
        };
        let (e1, e2) = (lift(first, &h1.even()), lift(second, &h2.even()));
        let partition = e1.is_disjoint(&e2)
            && e1.is_disjoint(&v1)
            && e2.is_disjoint(&v1)
            && e1.union(&e2).union(&v1) == self.vertices();
        let ideal_sum = balanced_forests && {
            let lifted = |g: &Graph| -> Result<SquareFreeIdeal> {
                g.odd_oni()?.translate(self.universe().clone())
            };
            let vars = SquareFreeIdeal::from_supports(
                self.universe().clone(),
                v1.iter().map(VertexSet::singleton),
            )?;
            lifted(first)?.sum(&lifted(second)?)?.sum(&vars)? == self.oni()
        };
        Ok(DecompositionReport {
            balanced_forests,
            partition,
            ideal_sum,
        })
    }

    /// Looks for a verified decomposition of the tree `self`.
    ///
    /// The two colour classes seed the even parts first; if neither seed
    /// verifies, every split of `V ∖ V_1` is tried.
    pub fn search_decomposition(&self, cap: usize) -> Result<Option<TreeDecomposition>> {
        if !self.is_tree() {
            return precondition("decomposition needs a tree");
        }
        let n = self.vertex_count();
        if n > cap.min(63) {
            return Err(Error::Resource {
                what: "decomposition search vertex count",
                flag: "search",
                cap,
                actual: n,
            });
        }
        let v1 = self.heights().stratum(1);
        let rest = self.vertices().difference(&v1);
        let class = self.colour_class();
        let seeds = [
            class.difference(&v1),
            self.vertices().difference(&class).difference(&v1),
        ];
        for even in &seeds {
            if let Some(found) = self.try_split(even, &rest)? {
                return Ok(Some(found));
            }
        }
        let members: Vec<usize> = rest.iter().collect();
        for mask in 0u64..(1u64 << members.len()) {
            let even: VertexSet = members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if seeds.contains(&even) {
                continue;
            }
            if let Some(found) = self.try_split(&even, &rest)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Builds the pieces whose even parts are `even` and `rest ∖ even`: each
    /// piece also takes every vertex whose neighborhood lies inside its even part.
    fn try_split(&self, even: &VertexSet, rest: &VertexSet) -> Result<Option<TreeDecomposition>> {
        let piece = |even: &VertexSet| {
            let centers: VertexSet = (0..self.vertex_count())
                .filter(|&v| !even.contains(v) && self.degree(v) > 0 && self.neighbors(v).is_subset(even))
                .collect();
            self.induced(&even.union(&centers))
        };
        let first = piece(even);
        let second = piece(&rest.difference(even));
        if self.verify_decomposition(&first, &second)?.holds() {
            Ok(Some(TreeDecomposition { first, second }))
        } else {
            Ok(None)
        }
    }

    /// The colour class of the first vertex in a proper 2-colouring of a tree.
    fn colour_class(&self) -> VertexSet {
        let mut class = VertexSet::singleton(0);
        let mut seen = VertexSet::singleton(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v).iter() {
                if seen.insert(w) {
                    if !class.contains(v) {
                        class.insert(w);
                    }
                    stack.push(w);
                }
            }
        }
        class
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{o_sequence, path_graph};

    fn isolated(labels: &[&str]) -> Graph {
        Graph::new(labels.iter().copied(), Vec::<(&str, &str)>::new()).unwrap()
    }

    #[test]
    fn paper_decompositions_verify() {
        let p = path_graph(6);
        assert!(p.verify_decomposition(&p, &isolated(&["3"])).unwrap().holds());
        let t = fixtures::t_a();
        assert!(t.verify_decomposition(&t, &isolated(&["r1", "r2"])).unwrap().holds());
        let report = p.verify_decomposition(&p, &isolated(&[])).unwrap();
        assert!(report.balanced_forests && report.ideal_sum && !report.partition);
    }

    #[test]
    fn verify_rejects_bad_inputs() {
        let p = path_graph(6);
        let chord = Graph::from_edges([("0", "3")]).unwrap();
        assert!(p.verify_decomposition(&chord, &p).is_err());
        let c3 = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(c3.verify_decomposition(&c3, &c3).is_err());
    }

    #[test]
    fn search_reproduces_paper_pairs() {
        let p = path_graph(6);
        let d = p.search_decomposition(SEARCH_VERTEX_CAP).unwrap().unwrap();
        assert_eq!(d.first, p);
        assert_eq!(d.second, isolated(&["3"]));
        let t = fixtures::t_a();
        let d = t.search_decomposition(SEARCH_VERTEX_CAP).unwrap().unwrap();
        assert_eq!(d.first, t);
        assert_eq!(d.second, isolated(&["r1", "r2"]));
    }

    #[test]
    fn search_results_always_verify() {
        for seq in [vec!["1"], vec!["4", "3"], vec!["3", "p1_1"]] {
            let t = o_sequence(seq).unwrap();
            let d = t.search_decomposition(SEARCH_VERTEX_CAP).unwrap().unwrap();
            assert!(t.verify_decomposition(&d.first, &d.second).unwrap().holds());
        }
    }

    #[test]
    fn search_respects_cap() {
        let err = path_graph(6).search_decomposition(5).unwrap_err();
        assert!(matches!(err, Error::Resource { cap: 5, actual: 7, .. }));
    }
}
