//! Simplicial complexes given by their facets.
//!
//! Three shapes are kept apart: the void complex (no faces, Stanley–Reisner
//! ideal `⟨1⟩`), the empty complex `{∅}` (ideal generated by all variables),
//! and ordinary complexes whose facets are nonempty.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{input, precondition, Error, Result};
use crate::ideal::SquareFreeIdeal;
use crate::universe::{maximize_sets, transversals, SpernerFamily, Universe, VertexSet};

/// Default cap on the number of facets for subcollection searches.
pub const FOREST_FACET_CAP: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Void,
    Empty,
    Ordinary,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexDoc", into = "ComplexDoc")]
pub struct SimplicialComplex {
    facets: SpernerFamily,
}

/// A leaf facet together with one of its joints (absent when the complex is a simplex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leaf {
    pub facet: VertexSet,
    pub joint: Option<VertexSet>,
}

/// Outcome of the cycle test. When the complex is a cycle, `strong_neighbor_order`
/// lists its facets so that consecutive ones (cyclically) are strong neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCheck {
    pub is_cycle: bool,
    pub strong_neighbor_order: Option<Vec<VertexSet>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafKind {
    Simplex,
    Empty,
}

/// Witness tree for vertex decomposability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "CertDoc", into = "CertDoc")]
pub enum SheddingCertificate {
    Leaf(LeafKind),
    Shed {
        vertex: String,
        deletion: Box<SheddingCertificate>,
        link: Box<SheddingCertificate>,
    },
}

impl SimplicialComplex {
    /// The complex whose facets are the inclusion-maximal members of `faces`.
    pub fn from_facets<I>(universe: Arc<Universe>, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        for f in &faces {
            universe.check(f)?;
        }
        Ok(Self {
            facets: SpernerFamily::from_canonical(universe, maximize_sets(faces)),
        })
    }

    pub fn from_labels<L, S>(universe: Arc<Universe>, facets: L) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let sets = facets
            .into_iter()
            .map(|f| universe.set(f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(universe, sets)
    }

    pub fn void(universe: Arc<Universe>) -> Self {
        Self {
            facets: SpernerFamily::empty(universe),
        }
    }

    pub fn empty(universe: Arc<Universe>) -> Self {
        Self {
            facets: SpernerFamily::from_canonical(universe, vec![VertexSet::new()]),
        }
    }

    /// The full simplex on the whole universe.
    pub fn simplex(universe: Arc<Universe>) -> Self {
        let full = universe.full();
        Self {
            facets: SpernerFamily::from_canonical(universe, vec![full]),
        }
    }

    fn with_facets(&self, facets: Vec<VertexSet>) -> Self {
        Self {
            facets: SpernerFamily::from_canonical(self.universe().clone(), maximize_sets(facets)),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.facets.universe()
    }

    pub fn facets(&self) -> &[VertexSet] {
        self.facets.sets()
    }

    pub fn facet_family(&self) -> &SpernerFamily {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets.to_labels()
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Empty,
            _ => ComplexKind::Ordinary,
        }
    }

    pub fn is_void(&self) -> bool {
        self.kind() == ComplexKind::Void
    }

    pub fn is_empty_complex(&self) -> bool {
        self.kind() == ComplexKind::Empty
    }

    fn require_ordinary(&self, op: &str) -> Result<()> {
        match self.kind() {
            ComplexKind::Ordinary => Ok(()),
            kind => precondition(format!("{op} needs an ordinary complex, got {kind:?}")),
        }
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VertexSet {
        self.facets.support()
    }

    pub fn contains_face(&self, face: &VertexSet) -> bool {
        self.facets().iter().any(|f| face.is_subset(f))
    }

    /// Every face, facets' subsets included. Exponential in the facet size.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out = std::collections::HashSet::new();
        for f in self.facets() {
            let members: Vec<usize> = f.iter().collect();
            for mask in 0u64..(1u64 << members.len()) {
                out.insert(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &p)| p)
                        .collect::<VertexSet>(),
                );
            }
        }
        let mut out: Vec<VertexSet> = out.into_iter().collect();
        out.sort();
        out
    }

    /// Faces disjoint from `face`.
    pub fn deletion(&self, face: &VertexSet) -> Self {
        self.with_facets(self.facets().iter().map(|f| f.difference(face)).collect())
    }

    /// Faces `G` disjoint from `face` with `G ∪ face` a face; void when `face` is not a face.
    pub fn link(&self, face: &VertexSet) -> Self {
        self.with_facets(
            self.facets()
                .iter()
                .filter(|f| face.is_subset(f))
                .map(|f| f.difference(face))
                .collect(),
        )
    }

    /// `(dim, pure)`; the empty complex is `(-1, true)`.
    pub fn dimension_profile(&self) -> Result<(i64, bool)> {
        if self.is_void() {
            return precondition("void complex has no dimension");
        }
        let dim = self.facets().iter().map(VertexSet::len).max().unwrap_or(0) as i64 - 1;
        Ok((dim, self.facets.is_uniform()))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.is_uniform()
    }

    /// True iff every facet of the deletion of `vertex` is a facet of the complex.
    pub fn is_shedding_vertex(&self, vertex: usize) -> bool {
        shedding(self.facets(), vertex)
    }

    /// Searches for a vertex decomposition, trying shedding vertices in
    /// canonical order and returning the first witness.
    ///
    /// Errors on impure input. Void and empty complexes are accepted as base cases.
    pub fn is_vertex_decomposable(&self) -> Result<Option<SheddingCertificate>> {
        if !self.is_pure() {
            return precondition("vertex decomposability is defined for pure complexes");
        }
        let mut memo = HashMap::new();
        Ok(vd_search(self.facets(), self.universe(), &mut memo))
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(l) = other
            .universe()
            .labels()
            .iter()
            .find(|l| self.universe().contains_label(l))
        {
            return input(format!("join needs disjoint universes; both contain {l:?}"));
        }
        let universe = Arc::new(self.universe().union(other.universe()));
        let left = self.facets.translate(universe.clone())?;
        let right = other.facets.translate(universe.clone())?;
        let facets = left
            .iter()
            .flat_map(|a| right.iter().map(move |b| a.union(b)))
            .collect::<Vec<_>>();
        Self::from_facets(universe, facets)
    }

    /// Ideal of minimal non-faces: the intersection of `⟨V ∖ F⟩` over facets.
    pub fn stanley_reisner_ideal(&self) -> SquareFreeIdeal {
        let full = self.universe().full();
        let complements: Vec<VertexSet> = self.facets().iter().map(|f| full.difference(f)).collect();
        SquareFreeIdeal::from_family(SpernerFamily::from_canonical(
            self.universe().clone(),
            transversals(&complements),
        ))
    }

    /// The ideal generated by the facets themselves.
    pub fn facet_ideal(&self) -> Result<SquareFreeIdeal> {
        self.require_ordinary("facet ideal")?;
        Ok(SquareFreeIdeal::from_family(self.facets.clone()))
    }

    pub fn minimal_vertex_covers(&self) -> Result<SpernerFamily> {
        self.require_ordinary("vertex covers")?;
        Ok(self.facets.minimal_transversals())
    }

    /// True iff all minimal vertex covers have the same size.
    pub fn is_unmixed_complex(&self) -> Result<bool> {
        Ok(self.minimal_vertex_covers()?.is_uniform())
    }

    /// The canonically first leaf and its first joint.
    pub fn find_leaf(&self) -> Option<Leaf> {
        if self.kind() != ComplexKind::Ordinary {
            return None;
        }
        let fs = self.facets();
        let inter = pairwise_intersections(fs);
        let members: Vec<usize> = (0..fs.len()).collect();
        leaf_among(fs, &inter, &members).map(|(l, g)| Leaf {
            facet: fs[l].clone(),
            joint: g.map(|g| fs[g].clone()),
        })
    }

    /// True iff any two vertices of the complex are linked by a chain of intersecting facets.
    pub fn is_connected(&self) -> bool {
        let fs = self.facets();
        if fs.is_empty() {
            return true;
        }
        let mut seen = vec![false; fs.len()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..fs.len() {
                if !seen[j] && fs[i].intersects(&fs[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Every nonempty subcollection of facets has a leaf.
    ///
    /// Only connected subcollections are tested: a disconnected one has a leaf
    /// exactly when one of its components does.
    pub fn is_simplicial_forest(&self, cap: usize) -> Result<bool> {
        self.forest_check(cap, true)
    }

    /// [`Self::is_simplicial_forest`] without the connectivity pruning.
    pub fn is_simplicial_forest_brute_force(&self, cap: usize) -> Result<bool> {
        self.forest_check(cap, false)
    }

    pub fn is_simplicial_tree(&self, cap: usize) -> Result<bool> {
        Ok(self.is_simplicial_forest(cap)? && self.is_connected())
    }

    fn forest_check(&self, cap: usize, prune: bool) -> Result<bool> {
        self.require_ordinary("simplicial forest test")?;
        let fs = self.facets();
        check_facet_cap(fs.len(), cap)?;
        let inter = pairwise_intersections(fs);
        let adj = intersection_graph(fs);
        let all = (1u64 << fs.len()) - 1;
        Ok((1..=all).all(|mask| (prune && !mask_connected(&adj, mask)) || leaf_in(fs, &inter, mask).is_some()))
    }

    /// Leafless, while every proper subcollection has a leaf.
    pub fn is_cycle(&self, cap: usize) -> Result<CycleCheck> {
        self.require_ordinary("cycle test")?;
        let fs = self.facets();
        check_facet_cap(fs.len(), cap)?;
        let inter = pairwise_intersections(fs);
        let all = (1u64 << fs.len()) - 1;
        let is_cycle = leaf_in(fs, &inter, all).is_none()
            && (1..all).all(|mask| leaf_in(fs, &inter, mask).is_some());
        let strong_neighbor_order = if is_cycle {
            strong_neighbor_cycle(fs, &inter)
        } else {
            None
        };
        Ok(CycleCheck {
            is_cycle,
            strong_neighbor_order,
        })
    }

    /// Strong neighbors: `F ~ G` iff `F ∩ H ⊆ G` forces `H ∈ {F, G}`.
    pub fn are_strong_neighbors(&self, f: usize, g: usize) -> bool {
        let fs = self.facets();
        f != g && strong(fs, &pairwise_intersections(fs), f, g)
    }

    pub fn translate(&self, target: Arc<Universe>) -> Result<Self> {
        let facets = self
            .facets()
            .iter()
            .map(|f| self.universe().translate(f, &target))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(target, facets)
    }

    /// Adjoins cone-free vertices (vertices lying in no face).
    pub fn extend_universe<I, S>(&self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let extra = Universe::from_labels(labels);
        self.translate(Arc::new(self.universe().union(&extra)))
    }
}

fn check_facet_cap(count: usize, cap: usize) -> Result<()> {
    if count > cap.min(63) {
        return Err(Error::Resource {
            what: "facet count",
            flag: "forest",
            cap,
            actual: count,
        });
    }
    Ok(())
}

fn pairwise_intersections(fs: &[VertexSet]) -> Vec<Vec<VertexSet>> {
    fs.iter()
        .map(|a| fs.iter().map(|b| a.intersection(b)).collect())
        .collect()
}

fn intersection_graph(fs: &[VertexSet]) -> Vec<u64> {
    fs.iter()
        .enumerate()
        .map(|(i, a)| {
            fs.iter()
                .enumerate()
                .filter(|&(j, b)| j != i && a.intersects(b))
                .fold(0u64, |m, (j, _)| m | (1 << j))
        })
        .collect()
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let i = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[i] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

/// First leaf (and joint) of the subcomplex generated by the facets in `mask`.
fn leaf_in(fs: &[VertexSet], inter: &[Vec<VertexSet>], mask: u64) -> Option<(usize, Option<usize>)> {
    leaf_among(fs, inter, &bits(mask).collect::<Vec<_>>())
}

fn leaf_among(fs: &[VertexSet], inter: &[Vec<VertexSet>], members: &[usize]) -> Option<(usize, Option<usize>)> {
    if let [only] = members {
        return Some((*only, None));
    }
    for &l in members {
        let shared = members
            .iter()
            .filter(|&&f| f != l)
            .fold(VertexSet::new(), |acc, &f| acc.union(&inter[l][f]));
        if let Some(&g) = members.iter().find(|&&g| g != l && shared.is_subset(&fs[g])) {
            return Some((l, Some(g)));
        }
    }
    None
}

fn strong(fs: &[VertexSet], inter: &[Vec<VertexSet>], f: usize, g: usize) -> bool {
    (0..fs.len()).all(|h| h == f || h == g || !inter[f][h].is_subset(&fs[g]))
}

fn strong_neighbor_cycle(fs: &[VertexSet], inter: &[Vec<VertexSet>]) -> Option<Vec<VertexSet>> {
    let n = fs.len();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|f| (0..n).filter(|&g| g != f && strong(fs, inter, f, g)).collect())
        .collect();
    if n < 3 || nbrs.iter().any(|v| v.len() != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = nbrs[0][0];
    while cur != 0 {
        if order.len() == n {
            return None;
        }
        order.push(cur);
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
    }
    (order.len() == n).then(|| order.into_iter().map(|i| fs[i].clone()).collect())
}

fn shedding(facets: &[VertexSet], vertex: usize) -> bool {
    let del = maximize_sets(facets.iter().map(|f| f.without(vertex)));
    del.iter().all(|d| facets.binary_search(d).is_ok())
}

fn uniform(facets: &[VertexSet]) -> bool {
    facets.windows(2).all(|w| w[0].len() == w[1].len())
}

fn vd_search(
    facets: &[VertexSet],
    universe: &Universe,
    memo: &mut HashMap<Vec<VertexSet>, Option<SheddingCertificate>>,
) -> Option<SheddingCertificate> {
    match facets {
        [] => return Some(SheddingCertificate::Leaf(LeafKind::Empty)),
        [f] if f.is_empty() => return Some(SheddingCertificate::Leaf(LeafKind::Empty)),
        [_] => return Some(SheddingCertificate::Leaf(LeafKind::Simplex)),
        _ => {}
    }
    if !uniform(facets) {
        return None;
    }
    if let Some(hit) = memo.get(facets) {
        return hit.clone();
    }
    let support = facets.iter().fold(VertexSet::new(), |acc, f| acc.union(f));
    let mut found = None;
    for v in support.iter() {
        if !shedding(facets, v) {
            continue;
        }
        let del = maximize_sets(facets.iter().map(|f| f.without(v)));
        let lk = maximize_sets(facets.iter().filter(|f| f.contains(v)).map(|f| f.without(v)));
        if !uniform(&del) || !uniform(&lk) {
            continue;
        }
        let Some(d) = vd_search(&del, universe, memo) else {
            continue;
        };
        let Some(l) = vd_search(&lk, universe, memo) else {
            continue;
        };
        found = Some(SheddingCertificate::Shed {
            vertex: universe.label(v).to_string(),
            deletion: Box::new(d),
            link: Box::new(l),
        });
        break;
    }
    memo.insert(facets.to_vec(), found.clone());
    found
}

impl SheddingCertificate {
    /// Re-checks every base case and shedding step against `complex`.
    pub fn replay(&self, complex: &SimplicialComplex) -> bool {
        match self {
            Self::Leaf(LeafKind::Empty) => {
                matches!(complex.kind(), ComplexKind::Empty | ComplexKind::Void)
            }
            Self::Leaf(LeafKind::Simplex) => {
                complex.kind() == ComplexKind::Ordinary && complex.facets().len() == 1
            }
            Self::Shed {
                vertex,
                deletion,
                link,
            } => {
                let Some(v) = complex.universe().position(vertex) else {
                    return false;
                };
                if !complex.is_pure() || !complex.vertices().contains(v) || !complex.is_shedding_vertex(v) {
                    return false;
                }
                let single = VertexSet::singleton(v);
                let del = complex.deletion(&single);
                let lk = complex.link(&single);
                del.is_pure() && lk.is_pure() && deletion.replay(&del) && link.replay(&lk)
            }
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ComplexKind::Void => write!(f, "void"),
            ComplexKind::Empty => write!(f, "{{∅}}"),
            ComplexKind::Ordinary => f.debug_set().entries(self.facet_labels()).finish(),
        }
    }
}

/// JSON form: `{"universe": [...], "facets": [[...], ...], "kind": "void|empty|ordinary"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub universe: Vec<String>,
    #[serde(default)]
    pub facets: Vec<Vec<String>>,
    #[serde(default)]
    pub kind: Option<ComplexKind>,
}

impl TryFrom<ComplexDoc> for SimplicialComplex {
    type Error = Error;

    fn try_from(doc: ComplexDoc) -> Result<Self> {
        let universe = Arc::new(Universe::new(doc.universe)?);
        let complex = match doc.kind {
            Some(ComplexKind::Empty) if doc.facets.is_empty() => Self::empty(universe),
            _ => Self::from_labels(universe, doc.facets)?,
        };
        match doc.kind {
            Some(kind) if kind != complex.kind() => {
                input(format!("complex marked {kind:?} but facets give {:?}", complex.kind()))
            }
            _ => Ok(complex),
        }
    }
}

impl From<SimplicialComplex> for ComplexDoc {
    fn from(complex: SimplicialComplex) -> Self {
        ComplexDoc {
            universe: complex.universe().labels().to_vec(),
            kind: Some(complex.kind()),
            facets: complex.facet_labels(),
        }
    }
}

/// JSON form of a shedding certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CertDoc {
    Leaf {
        leaf: LeafKind,
    },
    Shed {
        shed: String,
        del: Box<CertDoc>,
        lk: Box<CertDoc>,
    },
}

impl From<CertDoc> for SheddingCertificate {
    fn from(doc: CertDoc) -> Self {
        match doc {
            CertDoc::Leaf { leaf } => Self::Leaf(leaf),
            CertDoc::Shed { shed, del, lk } => Self::Shed {
                vertex: shed,
                deletion: Box::new((*del).into()),
                link: Box::new((*lk).into()),
            },
        }
    }
}

impl From<SheddingCertificate> for CertDoc {
    fn from(cert: SheddingCertificate) -> Self {
        match cert {
            SheddingCertificate::Leaf(leaf) => CertDoc::Leaf { leaf },
            SheddingCertificate::Shed {
                vertex,
                deletion,
                link,
            } => CertDoc::Shed {
                shed: vertex,
                del: Box::new((*deletion).into()),
                lk: Box::new((*link).into()),
            },
        }
    }
}
