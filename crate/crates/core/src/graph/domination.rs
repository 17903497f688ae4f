//! Open-neighborhood ideals, total domination and stable complexes.

use std::sync::Arc;

use super::Graph;
use crate::complex::SimplicialComplex;
use crate::error::{input, precondition, Result};
use crate::ideal::SquareFreeIdeal;
use crate::universe::{SpernerFamily, Universe, VertexSet};

impl Graph {
    /// `𝒩(G)`, generated by the open neighborhoods. An isolated vertex gives the unit ideal.
    pub fn oni(&self) -> SquareFreeIdeal {
        SquareFreeIdeal::from_supports(self.universe.clone(), self.adjacency.iter().cloned())
            .expect("neighborhoods lie in the vertex universe")
    }

    /// `𝒩_odd(T)` over `V_even`, for a balanced forest.
    pub fn odd_oni(&self) -> Result<SquareFreeIdeal> {
        let h = self.require_balanced_forest("odd neighborhood ideal")?;
        let even = Arc::new(self.universe.restrict(&h.even()));
        let supports = h
            .odd()
            .iter()
            .map(|v| self.universe.translate(&self.adjacency[v], &even))
            .collect::<Result<Vec<_>>>()?;
        SquareFreeIdeal::from_supports(even, supports)
    }

    /// `𝒩_odd(T', T)` with `self = T'`: neighborhoods in `T'` of the vertices of
    /// `T'` that have odd height in `ambient`.
    ///
    /// The universe is `V(T') ∩ V_even(T)` when `T` is balanced, else `V(T')`.
    pub fn induced_odd_oni(&self, ambient: &Graph) -> Result<SquareFreeIdeal> {
        if !self.is_subgraph_of(ambient) {
            return input("first graph is not a subgraph of the second");
        }
        let h = ambient.heights();
        let in_ambient = |v: usize| ambient.position(self.label(v)).expect("subgraph vertex");
        let odd_height = |v: usize| h.of(in_ambient(v)).is_some_and(|k| k % 2 == 1);
        let universe = if h.balanced {
            let keep: VertexSet = (0..self.vertex_count()).filter(|&v| !odd_height(v)).collect();
            Arc::new(self.universe.restrict(&keep))
        } else {
            self.universe.clone()
        };
        let supports = (0..self.vertex_count())
            .filter(|&v| odd_height(v))
            .map(|v| self.universe.translate(&self.adjacency[v], &universe))
            .collect::<Result<Vec<_>>>()?;
        SquareFreeIdeal::from_supports(universe, supports)
    }

    /// Minimal total dominating sets, i.e. `τ({N(v)})`. Empty when a vertex is isolated.
    pub fn minimal_td_sets(&self) -> SpernerFamily {
        self.neighborhood_family().minimal_transversals()
    }

    /// Minimal odd total dominating sets over `V_even`, for a balanced forest.
    pub fn minimal_odd_td_sets(&self) -> Result<SpernerFamily> {
        Ok(self.odd_oni()?.generators().minimal_transversals())
    }

    fn neighborhood_family(&self) -> SpernerFamily {
        SpernerFamily::minimize(self.universe.clone(), self.adjacency.iter().cloned())
            .expect("neighborhoods lie in the vertex universe")
    }

    /// True iff all minimal TD-sets have one size (vacuously when there are none).
    pub fn is_td_unmixed(&self) -> bool {
        self.minimal_td_sets().is_uniform()
    }

    /// True iff all minimal odd-TD-sets have one size.
    pub fn is_odd_td_unmixed(&self) -> Result<bool> {
        Ok(self.minimal_odd_td_sets()?.is_uniform())
    }

    /// TD-unmixedness of a balanced tree read off its height strata: height at
    /// most 3, every `V_2` vertex has one `V_1` neighbor, every `V_1` vertex at
    /// most one `V_2` neighbor (exactly one at height 3).
    pub fn is_td_unmixed_structural(&self) -> Result<bool> {
        let h = self.heights();
        if !(h.balanced && h.tree) {
            return precondition("structural unmixedness needs a balanced tree");
        }
        if h.height > 3 {
            return Ok(false);
        }
        let (v1, v2) = (h.stratum(1), h.stratum(2));
        let twos_ok = v2
            .iter()
            .all(|v| self.adjacency[v].intersection(&v1).len() == 1);
        let ones_ok = v1.iter().all(|v| {
            let up = self.adjacency[v].intersection(&v2).len();
            if h.height == 3 {
                up == 1
            } else {
                up <= 1
            }
        });
        Ok(twos_ok && ones_ok)
    }

    /// The structural test applied to each component of a balanced forest.
    pub fn is_td_unmixed_forest_structural(&self) -> Result<bool> {
        if !self.is_balanced_forest() {
            return precondition("structural unmixedness needs a balanced forest");
        }
        for comp in self.components() {
            if !self.induced(&comp).is_td_unmixed_structural()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `S(G)`: facets are the complements of the minimal TD-sets; void without TD-sets.
    pub fn stable_complex(&self) -> SimplicialComplex {
        complement_complex(self.universe.clone(), &self.minimal_td_sets())
    }

    /// `S_even(T)` over `V_even`: complements of the minimal odd-TD-sets.
    pub fn even_stable_complex(&self) -> Result<SimplicialComplex> {
        let sets = self.minimal_odd_td_sets()?;
        Ok(complement_complex(sets.universe().clone(), &sets))
    }

    pub(crate) fn require_balanced_forest(&self, what: &str) -> Result<super::HeightProfile> {
        let h = self.heights();
        if !h.balanced {
            return precondition(format!("{what} needs a balanced forest"));
        }
        Ok(h)
    }
}

fn complement_complex(universe: Arc<Universe>, sets: &SpernerFamily) -> SimplicialComplex {
    if sets.is_empty() {
        return SimplicialComplex::void(universe);
    }
    let full = universe.full();
    SimplicialComplex::from_facets(universe, sets.iter().map(|s| full.difference(s)))
        .expect("complements lie in the universe")
}

#[cfg(test)]
mod tests {
    use crate::fixtures;
    use crate::graph::{path_graph, Graph};

    fn gens(i: &crate::ideal::SquareFreeIdeal) -> Vec<Vec<String>> {
        i.generator_labels()
    }

    fn v(sets: &[&[&str]]) -> Vec<Vec<String>> {
        sets.iter()
            .map(|s| s.iter().map(|x| x.to_string()).collect())
            .collect()
    }

    #[test]
    fn oni_values() {
        let p = path_graph(6);
        assert_eq!(
            gens(&p.oni()),
            v(&[&["1"], &["5"], &["0", "2"], &["2", "4"], &["4", "6"]])
        );
        let t = fixtures::t_a();
        assert_eq!(
            gens(&t.oni()),
            v(&[
                &["s1"],
                &["s2"],
                &["s3"],
                &["l1", "u1"],
                &["l2", "u2"],
                &["u1", "u2"],
                &["u2", "u3"],
                &["l3", "l4", "u3"],
            ])
        );
        let iso = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        assert!(iso.oni().is_unit());
        assert!(iso.minimal_td_sets().is_empty());
        assert!(iso.stable_complex().is_void());
    }

    #[test]
    fn odd_oni_values() {
        let p = path_graph(6);
        let i = p.odd_oni().unwrap();
        assert_eq!(i.universe().labels(), ["0", "2", "4", "6"]);
        assert_eq!(gens(&i), v(&[&["0", "2"], &["2", "4"], &["4", "6"]]));
        let t = fixtures::t_a();
        assert_eq!(
            gens(&t.odd_oni().unwrap()),
            v(&[&["l1", "u1"], &["l2", "u2"], &["u1", "u2"], &["u2", "u3"], &["l3", "l4", "u3"]])
        );
        let dots = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(dots.odd_oni().unwrap().is_zero());
        let c3 = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(c3.odd_oni().is_err());
    }

    #[test]
    fn induced_odd_oni_values() {
        let t = fixtures::t_a();
        let minus_u1 = t.delete_labels(["u1"]).unwrap();
        assert_eq!(
            gens(&minus_u1.induced_odd_oni(&t).unwrap()),
            v(&[&["l1"], &["u2"], &["l3", "l4", "u3"]])
        );
        let minus_nu1 = t.delete_labels(["u1", "s1", "r1"]).unwrap();
        assert_eq!(
            gens(&minus_nu1.induced_odd_oni(&t).unwrap()),
            v(&[&["l2", "u2"], &["u2", "u3"], &["l3", "l4", "u3"]])
        );
        assert_eq!(t.induced_odd_oni(&t).unwrap(), t.odd_oni().unwrap());
        assert!(path_graph(2).induced_odd_oni(&t).is_err());
    }

    #[test]
    fn td_sets_of_p6() {
        let p = path_graph(6);
        assert_eq!(
            p.minimal_td_sets().to_labels(),
            v(&[&["0", "1", "4", "5"], &["1", "2", "4", "5"], &["1", "2", "5", "6"]])
        );
        assert_eq!(
            p.minimal_odd_td_sets().unwrap().to_labels(),
            v(&[&["0", "4"], &["2", "4"], &["2", "6"]])
        );
        assert!(p.is_td_unmixed());
        assert!(p.is_td_unmixed_structural().unwrap());
    }

    #[test]
    fn structural_unmixedness() {
        let t = fixtures::t_a();
        assert!(t.is_td_unmixed());
        assert!(t.is_td_unmixed_structural().unwrap());
        let star = Graph::from_edges([("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
        assert!(star.is_td_unmixed());
        assert!(star.is_td_unmixed_structural().unwrap());
        let p4 = path_graph(4);
        assert_eq!(p4.heights().height, 2);
        assert!(!p4.is_td_unmixed());
        assert!(!p4.is_td_unmixed_structural().unwrap());
        let c4 = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        assert!(c4.is_td_unmixed_structural().is_err());
        let forest = t.delete_labels(["r1"]).unwrap();
        assert!(forest.is_td_unmixed_forest_structural().unwrap());
        assert!(forest.is_td_unmixed());
    }

    #[test]
    fn stable_complexes_of_p6() {
        let p = path_graph(6);
        assert_eq!(
            p.stable_complex().facet_labels(),
            v(&[&["0", "3", "4"], &["0", "3", "6"], &["2", "3", "6"]])
        );
        assert_eq!(
            p.even_stable_complex().unwrap().facet_labels(),
            v(&[&["0", "4"], &["0", "6"], &["2", "6"]])
        );
        let star = Graph::from_edges([("c", "a"), ("c", "b")]).unwrap();
        assert_eq!(star.even_stable_complex().unwrap().facet_labels(), v(&[&["a"], &["b"]]));
    }

    #[test]
    fn stanley_reisner_consistency() {
        for g in [path_graph(6), fixtures::t_a(), fixtures::gvd_base()] {
            assert_eq!(g.stable_complex().stanley_reisner_ideal(), g.oni());
            assert_eq!(
                g.even_stable_complex().unwrap().stanley_reisner_ideal(),
                g.odd_oni().unwrap()
            );
        }
    }
}
