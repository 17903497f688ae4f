//! Ground sets, vertex subsets and inclusion antichains.
//!
//! Every object in the crate (monomials, faces, neighborhoods, dominating
//! sets) is a subset of a fixed, label-ordered ground set. Subsets are stored
//! as bitsets over label positions; a [`SpernerFamily`] keeps an antichain of
//! them in canonical order (by size, then lexicographically by members).
//!
//! The module also hosts hypergraph dualization: [`SpernerFamily::minimal_transversals`]
//! computes the family of minimal hitting sets with Berge's incremental
//! algorithm. A brute-force subset scan is kept as an independent oracle for
//! small ground sets.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{input, Error, Result};

/// Default cap on the ground-set size accepted by the brute-force transversal oracle.
pub const BRUTE_FORCE_CAP: usize = 20;

/// A set of label positions, stored as a trimmed bitset.
///
/// Trailing zero words are never stored, so structural equality and hashing
/// agree with set equality. The [`Ord`] impl is the canonical order: by
/// cardinality first, then lexicographically on the ascending member list.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(position: usize) -> Self {
        let mut set = Self::new();
        set.insert(position);
        set
    }

    /// The set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::new();
        words.resize(n / 64, u64::MAX);
        if n % 64 != 0 {
            words.push((1u64 << (n % 64)) - 1);
        }
        Self { words }
    }

    pub fn insert(&mut self, position: usize) -> bool {
        let (w, b) = (position / 64, position % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, position: usize) -> bool {
        let (w, b) = (position / 64, position % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn with(&self, position: usize) -> Self {
        let mut set = self.clone();
        set.insert(position);
        set
    }

    pub fn without(&self, position: usize) -> Self {
        let mut set = self.clone();
        set.remove(position);
        set
    }

    pub fn contains(&self, position: usize) -> bool {
        let (w, b) = (position / 64, position % 64);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Members in ascending position order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        let (i, word) = self.words.iter().enumerate().next_back()?;
        Some(i * 64 + 63 - word.leading_zeros() as usize)
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(short.words.iter()) {
            *w |= s;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut set = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        set.trim();
        set
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut set = self.clone();
        for (w, o) in set.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        set.trim();
        set
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::new();
        for p in iter {
            set.insert(p);
        }
        set
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Equal sizes: the set holding the smallest element of the
            // symmetric difference comes first.
            let diff = self.difference(other).union(&other.difference(self));
            match diff.first() {
                None => Ordering::Equal,
                Some(p) if self.contains(p) => Ordering::Less,
                Some(_) => Ordering::Greater,
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered ground set of distinct labels.
///
/// Labels are kept in lexicographic order; a label's position in that order
/// is its bit index in every [`VertexSet`] over this universe.
#[derive(Clone, Default)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    /// Builds a universe from distinct labels; duplicates are rejected.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate label {:?}", w[0]));
        }
        Ok(Self::from_sorted(labels))
    }

    /// Like [`Universe::new`] but silently merges repeated labels.
    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        labels.dedup();
        Self::from_sorted(labels)
    }

    fn from_sorted(labels: Vec<String>) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Self { labels, index }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, position: usize) -> &str {
        &self.labels[position]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::Input(format!("unknown label {label:?}")))
    }

    /// The subset with the given labels; unknown labels are an input error.
    pub fn set<I, S>(&self, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().map(|l| self.require(l.as_ref())).collect()
    }

    pub fn full(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    /// Labels of the members of `set`, in canonical (ascending) order.
    pub fn names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|p| self.labels[p].clone()).collect()
    }

    /// Checks that `set` only uses positions of this universe.
    pub fn check(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(p) if p >= self.len() => input(format!(
                "set uses position {p} outside a universe of {} labels",
                self.len()
            )),
            _ => Ok(()),
        }
    }

    /// The universe holding the labels of both operands.
    pub fn union(&self, other: &Universe) -> Universe {
        Self::from_labels(self.labels.iter().chain(other.labels.iter()).cloned())
    }

    /// The sub-universe of the labels at the positions in `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Universe {
        Self::from_sorted(keep.iter().map(|p| self.labels[p].clone()).collect())
    }

    /// This universe with one label dropped.
    pub fn without(&self, label: &str) -> Result<Universe> {
        let p = self.require(label)?;
        Ok(self.restrict(&self.full().without(p)))
    }

    /// Re-expresses `set` over `target`, matching members by label.
    pub fn translate(&self, set: &VertexSet, target: &Universe) -> Result<VertexSet> {
        if std::ptr::eq(self, target) {
            return Ok(set.clone());
        }
        set.iter()
            .map(|p| {
                target.position(&self.labels[p]).ok_or_else(|| {
                    Error::Input(format!("label {:?} missing from target universe", self.labels[p]))
                })
            })
            .collect()
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Keeps the inclusion-minimal sets, deduplicated, in canonical order.
pub fn minimize_sets<I: IntoIterator<Item = VertexSet>>(sets: I) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = sets.into_iter().collect();
    sets.sort();
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// Keeps the inclusion-maximal sets, deduplicated, in canonical order.
pub fn maximize_sets<I: IntoIterator<Item = VertexSet>>(sets: I) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = sets.into_iter().collect();
    sets.sort_by(|a, b| b.cmp(a));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// True iff no set of the list contains another one (duplicates count as containment).
pub fn is_sperner(sets: &[VertexSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset(b))
    })
}

/// Berge dualization: all minimal sets meeting every member of `sets`.
///
/// An empty input yields `{∅}`; an input containing `∅` yields no transversal.
pub fn transversals(sets: &[VertexSet]) -> Vec<VertexSet> {
    let edges = minimize_sets(sets.iter().cloned());
    let mut current = vec![VertexSet::new()];
    for edge in &edges {
        if edge.is_empty() {
            return Vec::new();
        }
        let (hit, miss): (Vec<_>, Vec<_>) = current.into_iter().partition(|t| t.intersects(edge));
        let grown = miss.iter().flat_map(|t| edge.iter().map(move |v| t.with(v)));
        let grown: Vec<_> = grown
            .filter(|u| !hit.iter().any(|h| h.is_subset(u)))
            .collect();
        current = hit;
        current.extend(minimize_sets(grown));
    }
    current.sort();
    current
}

/// Oracle: minimal transversals by scanning all `2^n` subsets of `{0, …, n-1}`.
pub fn brute_force_transversals(sets: &[VertexSet], n: usize) -> Vec<VertexSet> {
    assert!(n < 64, "brute force supports at most 63 elements");
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, p| m | (1 << p)))
        .collect();
    let hits = |t: u64| masks.iter().all(|m| m & t != 0);
    let mut out = Vec::new();
    for t in 0u64..(1u64 << n) {
        if !hits(t) {
            continue;
        }
        let mut bits = t;
        let mut minimal = true;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if hits(t & !low) {
                minimal = false;
                break;
            }
            bits &= bits - 1;
        }
        if minimal {
            out.push((0..n).filter(|p| t & (1 << p) != 0).collect::<VertexSet>());
        }
    }
    out.sort();
    out
}

/// An inclusion antichain of subsets of a shared universe, in canonical order.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyDoc", into = "FamilyDoc")]
pub struct SpernerFamily {
    universe: Arc<Universe>,
    sets: Vec<VertexSet>,
}

impl SpernerFamily {
    /// The inclusion-minimal members of `sets`; sets outside the universe are an input error.
    pub fn minimize<I>(universe: Arc<Universe>, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let sets: Vec<VertexSet> = sets.into_iter().collect();
        for s in &sets {
            universe.check(s)?;
        }
        Ok(Self {
            universe,
            sets: minimize_sets(sets),
        })
    }

    /// Builds the minimized family from label lists.
    pub fn from_labels<L, S>(universe: Arc<Universe>, sets: L) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let sets = sets
            .into_iter()
            .map(|s| universe.set(s))
            .collect::<Result<Vec<_>>>()?;
        Self::minimize(universe, sets)
    }

    /// Wraps sets already known to be a canonical antichain.
    pub(crate) fn from_canonical(universe: Arc<Universe>, sets: Vec<VertexSet>) -> Self {
        debug_assert!(is_sperner(&sets));
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        Self { universe, sets }
    }

    /// The family with no members.
    pub fn empty(universe: Arc<Universe>) -> Self {
        Self {
            universe,
            sets: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }

    /// Union of all members.
    pub fn support(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s))
    }

    /// True iff all members have the same cardinality (vacuously for `{}`).
    pub fn is_uniform(&self) -> bool {
        self.sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `τ(self)`: all inclusion-minimal transversals.
    pub fn minimal_transversals(&self) -> SpernerFamily {
        Self::from_canonical(self.universe.clone(), transversals(&self.sets))
    }

    /// The same dual computed by exhaustive subset scan; refuses universes above `cap`.
    pub fn minimal_transversals_brute_force(&self, cap: usize) -> Result<SpernerFamily> {
        let n = self.universe.len();
        if n > cap.min(63) {
            return Err(Error::Resource {
                what: "brute-force oracle universe size",
                flag: "oracle",
                cap,
                actual: n,
            });
        }
        Ok(Self::from_canonical(
            self.universe.clone(),
            brute_force_transversals(&self.sets, n),
        ))
    }

    /// Members as label lists.
    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.sets.iter().map(|s| self.universe.names(s)).collect()
    }

    /// Re-expresses the family over another universe that holds all used labels.
    pub fn translate(&self, target: Arc<Universe>) -> Result<SpernerFamily> {
        let sets = self
            .sets
            .iter()
            .map(|s| self.universe.translate(s, &target))
            .collect::<Result<Vec<_>>>()?;
        Self::minimize(target, sets)
    }
}

impl fmt::Debug for SpernerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.to_labels()).finish()
    }
}

/// JSON form of a family: `{"universe": [...], "sets": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub universe: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

impl TryFrom<FamilyDoc> for SpernerFamily {
    type Error = Error;

    fn try_from(doc: FamilyDoc) -> Result<Self> {
        let universe = Arc::new(Universe::new(doc.universe)?);
        Self::from_labels(universe, doc.sets)
    }
}

impl From<SpernerFamily> for FamilyDoc {
    fn from(family: SpernerFamily) -> Self {
        FamilyDoc {
            universe: family.universe.labels().to_vec(),
            sets: family.to_labels(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(universe: &[&str], sets: &[&[&str]]) -> SpernerFamily {
        let u = Arc::new(Universe::new(universe.iter().copied()).unwrap());
        SpernerFamily::from_labels(u, sets.iter().map(|s| s.iter().copied())).unwrap()
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a: VertexSet = [0, 3].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        let c: VertexSet = [4].into_iter().collect();
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn bitset_ops_past_one_word() {
        let a: VertexSet = [1, 70, 130].into_iter().collect();
        let b: VertexSet = [70].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(b.is_subset(&a));
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 130]);
        assert_eq!(a.last(), Some(130));
        assert_eq!(a.without(130).without(70), VertexSet::singleton(1));
        assert_eq!(VertexSet::full(65).len(), 65);
    }

    #[test]
    fn minimize_drops_supersets() {
        let f = family(&["a", "b", "c"], &[&["a"], &["a", "b"], &["c"]]);
        assert_eq!(f.to_labels(), vec![vec!["a"], vec!["c"]]);
        let empty = family(&["a"], &[]);
        assert!(empty.is_empty());
    }

    #[test]
    fn foreign_set_is_rejected() {
        let u = Arc::new(Universe::new(["a", "b"]).unwrap());
        let err = SpernerFamily::minimize(u.clone(), [VertexSet::singleton(5)]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
        assert!(SpernerFamily::from_labels(u, [["z"]]).is_err());
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        assert!(Universe::new(["a", "a"]).is_err());
    }

    #[test]
    fn transversals_of_small_families() {
        let f = family(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
        assert_eq!(
            f.minimal_transversals().to_labels(),
            vec![vec!["b"], vec!["a", "c"]]
        );
        let none = family(&["a"], &[]);
        assert_eq!(none.minimal_transversals().sets(), &[VertexSet::new()]);
        let with_empty = SpernerFamily::minimize(
            Arc::new(Universe::new(["a"]).unwrap()),
            [VertexSet::new()],
        )
        .unwrap();
        assert!(with_empty.minimal_transversals().is_empty());
    }

    #[test]
    fn sperner_check() {
        let a = VertexSet::singleton(0);
        let ab: VertexSet = [0, 1].into_iter().collect();
        let bc: VertexSet = [1, 2].into_iter().collect();
        assert!(!is_sperner(&[a, ab.clone()]));
        assert!(is_sperner(&[ab, bc]));
    }

    #[test]
    fn brute_force_cap_is_enforced() {
        let labels: Vec<String> = (0..25).map(|i| format!("x{i:02}")).collect();
        let u = Arc::new(Universe::new(labels).unwrap());
        let f = SpernerFamily::empty(u);
        assert!(matches!(
            f.minimal_transversals_brute_force(BRUTE_FORCE_CAP),
            Err(Error::Resource { .. })
        ));
    }
}
