#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use oni_kit::graph::path_graph;
use oni_kit::{Graph, SimplicialComplex, SpernerFamily, SquareFreeIdeal, Universe, VertexSet};
use rand::Rng;

/// AHU encoding of an unrooted tree: the smaller rooted encoding over its centers.
pub fn canonical_form(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_form(t, c, None))
        .min()
        .unwrap_or_default()
}

fn rooted_form(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_form(t, w, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for w in t.neighbors(v).iter() {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// All trees `O(P_6, (v_1, …, v_k))` with `k ≤ max_len`, one per isomorphism
/// class, each with a sequence producing it. The first entry is `P_6`.
pub fn o_sequence_trees(max_len: usize) -> Vec<(Vec<String>, Graph)> {
    let mut seen = BTreeSet::new();
    let p6 = path_graph(6);
    seen.insert(canonical_form(&p6));
    let mut all = vec![(Vec::new(), p6)];
    let mut level = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (seq, t) in &level {
            let h = t.heights();
            for v in 0..t.vertex_count() {
                if h.of(v).unwrap_or(0) == 0 {
                    continue;
                }
                let grown = t.o_extend(t.label(v)).expect("positive-height vertex");
                if seen.insert(canonical_form(&grown)) {
                    let mut s = seq.clone();
                    s.push(t.label(v).to_string());
                    next.push((s, grown));
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// A uniformly random labeled tree on `n ≥ 1` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
    if n == 1 {
        return Graph::new(labels, Vec::<(String, String)>::new()).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((labels[leaf].clone(), labels[c].clone()));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((labels[rest[0]].clone(), labels[rest[1]].clone()));
    Graph::new(labels, edges).unwrap()
}

pub fn universe(n: usize) -> Arc<Universe> {
    Arc::new(Universe::new((0..n).map(|i| format!("x{i:02}"))).unwrap())
}

pub fn set_from_mask(mask: u64) -> VertexSet {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Every antichain of nonempty subsets of an `n`-element set.
pub fn antichains(n: usize) -> Vec<Vec<VertexSet>> {
    let sets: Vec<u64> = (1u64..1 << n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_antichains(&sets, 0, &mut chosen, &mut out);
    out
}

fn extend_antichains(sets: &[u64], from: usize, chosen: &mut Vec<u64>, out: &mut Vec<Vec<VertexSet>>) {
    out.push(chosen.iter().map(|&m| set_from_mask(m)).collect());
    for i in from..sets.len() {
        let s = sets[i];
        if chosen.iter().all(|&c| c & s != c && c & s != s) {
            chosen.push(s);
            extend_antichains(sets, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// A random family of nonempty subsets of an `n`-element set, minimized.
pub fn random_family<R: Rng>(rng: &mut R, n: usize) -> SpernerFamily {
    let count = rng.gen_range(1..=2 * n.max(1));
    let density = rng.gen_range(0.15..0.6);
    let sets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let mut s: VertexSet = (0..n).filter(|_| rng.gen_bool(density)).collect();
            if s.is_empty() {
                s.insert(rng.gen_range(0..n));
            }
            s
        })
        .collect();
    SpernerFamily::minimize(universe(n), sets).unwrap()
}

/// A random pure complex on `n` vertices.
pub fn random_pure_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let dim = rng.gen_range(1..n);
    let count = rng.gen_range(1..=n + 2);
    let facets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let mut pool: Vec<usize> = (0..n).collect();
            let mut f = VertexSet::new();
            for _ in 0..dim {
                let i = rng.gen_range(0..pool.len());
                f.insert(pool.swap_remove(i));
            }
            f
        })
        .collect();
    SimplicialComplex::from_facets(universe(n), facets).unwrap()
}

/// Edge ideal of the cycle on `n` vertices.
pub fn cycle_edge_ideal(n: usize) -> SquareFreeIdeal {
    SquareFreeIdeal::from_supports(
        universe(n),
        (0..n).map(|i| [i, (i + 1) % n].into_iter().collect::<VertexSet>()),
    )
    .unwrap()
}

/// Minimal total dominating sets by scanning every vertex subset.
pub fn brute_force_td_sets(g: &Graph, target: &VertexSet, pool: &VertexSet) -> Vec<Vec<String>> {
    let members: Vec<usize> = pool.iter().collect();
    let dominating: Vec<VertexSet> = (0u64..1 << members.len())
        .map(|mask| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect::<VertexSet>()
        })
        .filter(|s| target.is_subset(&g.neighborhood_of(s)))
        .collect();
    let mut minimal: Vec<VertexSet> = dominating
        .iter()
        .filter(|s| !dominating.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect();
    minimal.sort();
    minimal.iter().map(|s| g.universe().names(s)).collect()
}
