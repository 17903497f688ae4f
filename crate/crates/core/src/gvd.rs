//! Geometric vertex decomposition of square-free monomial ideals.
//!
//! Splitting `I` at a variable `y` gives the link part `C` (generators with
//! `y` divided out, plus those avoiding `y`) and the deletion part `N`
//! (generators avoiding `y`), both over the universe without `y`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::ideal::SquareFreeIdeal;
use crate::universe::VertexSet;

/// Terminal ideal shapes of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GvdBase {
    Unit,
    Zero,
    Vars,
}

/// A recorded decomposition; `Split` branches certify the two split parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GvdCertificate {
    Base(GvdBase),
    Split {
        y: String,
        #[serde(rename = "C")]
        link: Box<GvdCertificate>,
        #[serde(rename = "N")]
        deletion: Box<GvdCertificate>,
    },
}

impl GvdCertificate {
    fn split(y: impl Into<String>, link: GvdCertificate, deletion: GvdCertificate) -> Self {
        GvdCertificate::Split {
            y: y.into(),
            link: Box::new(link),
            deletion: Box::new(deletion),
        }
    }

    /// Number of split nodes.
    pub fn depth(&self) -> usize {
        match self {
            GvdCertificate::Base(_) => 0,
            GvdCertificate::Split { link, deletion, .. } => 1 + link.depth().max(deletion.depth()),
        }
    }
}

/// `(C_{y,I}, N_{y,I})`, both over the universe of `ideal` without `y`.
pub fn split(ideal: &SquareFreeIdeal, y: &str) -> Result<(SquareFreeIdeal, SquareFreeIdeal)> {
    let universe = ideal.universe();
    let pos = universe.require(y)?;
    let smaller = Arc::new(universe.without(y)?);
    let drop = |s: &VertexSet| {
        universe
            .translate(&s.without(pos), &smaller)
            .expect("only y is dropped")
    };
    let gens = ideal.generators();
    let deletion: Vec<VertexSet> = gens.iter().filter(|g| !g.contains(pos)).map(drop).collect();
    let link: Vec<VertexSet> = gens.iter().map(drop).collect();
    Ok((
        SquareFreeIdeal::from_supports(smaller.clone(), link)?,
        SquareFreeIdeal::from_supports(smaller, deletion)?,
    ))
}

/// True iff `I = C_{y,I} ∩ (N_{y,I} + ⟨y⟩)` over the universe of `I`.
pub fn is_valid_geometric_decomposition(ideal: &SquareFreeIdeal, y: &str) -> Result<bool> {
    let (link, deletion) = split(ideal, y)?;
    let universe = ideal.universe().clone();
    let pos = universe.require(y)?;
    let link = link.translate(universe.clone())?;
    let deletion = deletion.translate(universe.clone())?;
    let var = SquareFreeIdeal::from_supports(universe, [VertexSet::singleton(pos)])?;
    Ok(link.intersect(&deletion.sum(&var)?)? == *ideal)
}

fn base_of(ideal: &SquareFreeIdeal) -> Option<GvdBase> {
    if ideal.is_unit() {
        Some(GvdBase::Unit)
    } else if ideal.is_zero() {
        Some(GvdBase::Zero)
    } else if ideal.is_variable_generated() {
        Some(GvdBase::Vars)
    } else {
        None
    }
}

/// Decides geometric vertex decomposability, returning the canonically first
/// certificate. Variables are tried in label order; every node must be unmixed.
pub fn is_gvd(ideal: &SquareFreeIdeal) -> Option<GvdCertificate> {
    let mut memo = HashMap::new();
    search(ideal, &mut memo)
}

fn search(
    ideal: &SquareFreeIdeal,
    memo: &mut HashMap<Vec<Vec<String>>, Option<GvdCertificate>>,
) -> Option<GvdCertificate> {
    if let Some(base) = base_of(ideal) {
        return Some(GvdCertificate::Base(base));
    }
    let key = ideal.generator_labels();
    if let Some(known) = memo.get(&key) {
        return known.clone();
    }
    let found = if ideal.is_unmixed().unwrap_or(false) {
        ideal.support().iter().find_map(|p| {
            let y = ideal.universe().label(p).to_string();
            if !is_valid_geometric_decomposition(ideal, &y).unwrap_or(false) {
                return None;
            }
            let (link, deletion) = split(ideal, &y).ok()?;
            let link = search(&link, memo)?;
            let deletion = search(&deletion, memo)?;
            Some(GvdCertificate::split(y, link, deletion))
        })
    } else {
        None
    };
    memo.insert(key, found.clone());
    found
}

/// Replays a certificate: every split must be a valid decomposition of an
/// unmixed ideal and every base must match its ideal.
pub fn validate_certificate(ideal: &SquareFreeIdeal, cert: &GvdCertificate) -> bool {
    match cert {
        GvdCertificate::Base(base) => base_of(ideal) == Some(*base),
        GvdCertificate::Split { y, link, deletion } => {
            if !ideal.universe().contains_label(y) || !ideal.is_unmixed().unwrap_or(false) {
                return false;
            }
            if !is_valid_geometric_decomposition(ideal, y).unwrap_or(false) {
                return false;
            }
            let Ok((c, n)) = split(ideal, y) else {
                return false;
            };
            validate_certificate(&c, link) && validate_certificate(&n, deletion)
        }
    }
}

/// Certificate for `I + J` from certificates of `I` and `J` on disjoint variables.
pub fn combine_disjoint(a: &GvdCertificate, b: &GvdCertificate) -> GvdCertificate {
    use GvdBase::*;
    use GvdCertificate::*;
    match (a, b) {
        (Base(Unit), _) | (_, Base(Unit)) => Base(Unit),
        (Base(Zero), x) | (x, Base(Zero)) => x.clone(),
        (Split { y, link, deletion }, other) => {
            GvdCertificate::split(y.clone(), combine_disjoint(link, other), combine_disjoint(deletion, other))
        }
        (Base(Vars), Split { y, link, deletion }) => {
            GvdCertificate::split(y.clone(), combine_disjoint(a, link), combine_disjoint(a, deletion))
        }
        (Base(Vars), Base(Vars)) => Base(Vars),
    }
}

/// Certificate for a single monomial: peel off the last variable until one remains.
fn monomial_chain(labels: &[String]) -> GvdCertificate {
    match labels {
        [] => GvdCertificate::Base(GvdBase::Unit),
        [_] => GvdCertificate::Base(GvdBase::Vars),
        [rest @ .., last] => {
            GvdCertificate::split(last.clone(), monomial_chain(rest), GvdCertificate::Base(GvdBase::Zero))
        }
    }
}

/// Builds a certificate for `𝒩_odd(T)` of a TD-unmixed balanced forest by
/// structural recursion on the tree, without search.
pub fn certify_tree_gvd(forest: &Graph) -> Result<GvdCertificate> {
    if !forest.is_balanced_forest() {
        return precondition("tree certification needs a balanced forest");
    }
    if !forest.is_td_unmixed_forest_structural()? {
        return precondition("tree certification needs a TD-unmixed forest");
    }
    certify_forest(forest)
}

fn certify_forest(forest: &Graph) -> Result<GvdCertificate> {
    forest
        .components()
        .iter()
        .try_fold(GvdCertificate::Base(GvdBase::Zero), |acc, comp| {
            Ok(combine_disjoint(&acc, &certify_tree(&forest.induced(comp))?))
        })
}

fn leaves_of(tree: &Graph, v: usize) -> Vec<String> {
    let h = tree.heights();
    tree.neighbors(v)
        .iter()
        .filter(|&w| h.of(w) == Some(0))
        .map(|w| tree.label(w).to_string())
        .collect()
}

fn certify_tree(tree: &Graph) -> Result<GvdCertificate> {
    let h = tree.heights();
    match h.height {
        0 => Ok(GvdCertificate::Base(GvdBase::Zero)),
        1 => {
            let center = h.stratum(1).first().expect("height 1 has a center");
            Ok(monomial_chain(&leaves_of(tree, center)))
        }
        3 => certify_height_three(tree),
        k => precondition(format!("no TD-unmixed balanced tree has height {k}")),
    }
}

fn certify_height_three(tree: &Graph) -> Result<GvdCertificate> {
    let h = tree.heights();
    let u = tree.find_split_vertex()?;
    let top = tree
        .neighbors(u)
        .iter()
        .find(|&w| h.of(w) == Some(3))
        .expect("split vertex has a height-3 neighbor");
    let side = tree
        .neighbors(u)
        .iter()
        .find(|&w| h.of(w) == Some(1))
        .expect("split vertex has a height-1 neighbor");

    let deletion = certify_forest(&tree.delete_vertices(&tree.closed_neighbors(u)))?;

    let side_part = monomial_chain(&leaves_of(tree, side));
    let top_part = if tree.degree(top) > 2 {
        let rest = tree.delete_vertices(&VertexSet::singleton(u));
        let r = rest.require(tree.label(top))?;
        certify_tree(&rest.component_of(r))?
    } else {
        let other = tree
            .neighbors(top)
            .iter()
            .find(|&w| w != u)
            .expect("height-3 vertex of degree 2 has a second neighbor");
        let rest = tree.delete_vertices(&VertexSet::singleton(top));
        let pos = rest.require(tree.label(other))?;
        let branch = rest.component_of(pos);
        let pos = branch.require(tree.label(other))?;
        let trimmed = branch.delete_vertices(&branch.closed_neighbors(pos));
        combine_disjoint(&certify_forest(&trimmed)?, &GvdCertificate::Base(GvdBase::Vars))
    };
    let link = combine_disjoint(&top_part, &side_part);
    Ok(GvdCertificate::split(tree.label(u), link, deletion))
}
