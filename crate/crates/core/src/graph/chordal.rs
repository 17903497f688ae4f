//! Chordality and the graph realizing a Sperner family as its minimal TD-sets.

use super::Graph;
use crate::error::{input, Result};
use crate::universe::{SpernerFamily, VertexSet};

impl Graph {
    /// Chordality via maximum cardinality search and a perfect elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut numbered = VertexSet::new();
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("an unnumbered vertex remains");
            numbered.insert(v);
            visit.push(v);
            for w in self.neighbors(v).iter() {
                weight[w] += 1;
            }
        }
        // Elimination order is the reverse visit order, so the neighbors still
        // present when `v` is eliminated are those visited before it.
        let mut earlier = VertexSet::new();
        for &v in &visit {
            let later = self.neighbors(v).intersection(&earlier);
            let parent = visit.iter().rev().copied().find(|&u| later.contains(u));
            if let Some(p) = parent {
                if !later.without(p).is_subset(self.neighbors(p)) {
                    return false;
                }
            }
            earlier.insert(v);
        }
        true
    }
}

/// Chordality by scanning every vertex subset of size at least 4 for an induced cycle.
pub fn is_chordal_brute_force(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n < 64, "brute-force chordality is for small graphs");
    (0u64..1 << n).all(|mask| {
        if mask.count_ones() < 4 {
            return true;
        }
        let set: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub = g.induced(&set);
        !(sub.is_connected() && (0..sub.vertex_count()).all(|v| sub.degree(v) == 2))
    })
}

/// `G_𝒜`: the complete graph on `V`, plus for each minimal transversal `T_i` of
/// `𝒜` a fresh vertex `t_i` with neighborhood `T_i`. Its minimal TD-sets are `𝒜`.
pub fn realize_as_oni(family: &SpernerFamily) -> Result<Graph> {
    let universe = family.universe();
    if let Some(small) = family.iter().find(|a| a.len() <= 1) {
        return input(format!(
            "member {:?} has size {}; every member needs at least two elements",
            universe.names(small),
            small.len()
        ));
    }
    let missing = universe.full().difference(&family.support());
    if !missing.is_empty() {
        return input(format!(
            "members do not cover the universe; missing {:?}",
            universe.names(&missing)
        ));
    }
    let duals = family.minimal_transversals();
    let mut prefix = String::from("t");
    let m = duals.len();
    let fresh = |prefix: &str| -> Vec<String> { (1..=m).map(|i| format!("{prefix}{i}")).collect() };
    while fresh(&prefix).iter().any(|l| universe.contains_label(&l)) {
        prefix.push('_');
    }
    let labels = universe.labels();
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            edges.push((a.clone(), b.clone()));
        }
    }
    for (t, dual) in fresh(&prefix).into_iter().zip(duals.iter()) {
        edges.extend(universe.names(dual).into_iter().map(|v| (t.clone(), v)));
    }
    Graph::new(labels.iter().cloned().chain(fresh(&prefix)), edges)
}
