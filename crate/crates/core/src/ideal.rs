//! Square-free monomial ideals, represented by the supports of their minimal
//! generators.
//!
//! A monomial `x_S` is identified with its support `S`, so an ideal is a
//! [`SpernerFamily`]: `⟨1⟩` is `{∅}` and `⟨0⟩` is `{}`. Equality is structural.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{input, precondition, Error, Result};
use crate::universe::{same_universe, SpernerFamily, Universe, VertexSet};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealDoc", into = "IdealDoc")]
pub struct SquareFreeIdeal {
    generators: SpernerFamily,
}

/// Minimal primes of an ideal, each given by its set of variables.
///
/// The zero ideal reports an empty family with `zero_ideal` set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPrimes {
    pub primes: SpernerFamily,
    pub zero_ideal: bool,
}

impl SquareFreeIdeal {
    /// The ideal generated by the monomials with the given supports.
    pub fn from_supports<I>(universe: Arc<Universe>, supports: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        Ok(Self {
            generators: SpernerFamily::minimize(universe, supports)?,
        })
    }

    pub fn from_labels<L, S>(universe: Arc<Universe>, supports: L) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(Self {
            generators: SpernerFamily::from_labels(universe, supports)?,
        })
    }

    pub fn from_family(generators: SpernerFamily) -> Self {
        Self { generators }
    }

    pub fn zero(universe: Arc<Universe>) -> Self {
        Self {
            generators: SpernerFamily::empty(universe),
        }
    }

    pub fn unit(universe: Arc<Universe>) -> Self {
        Self {
            generators: SpernerFamily::from_canonical(universe, vec![VertexSet::new()]),
        }
    }

    /// The ideal generated by all variables of the universe.
    pub fn maximal(universe: Arc<Universe>) -> Self {
        let vars = (0..universe.len()).map(VertexSet::singleton).collect();
        Self {
            generators: SpernerFamily::from_canonical(universe, vars),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.generators.universe()
    }

    pub fn generators(&self) -> &SpernerFamily {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.sets().first().is_some_and(VertexSet::is_empty)
    }

    /// True iff the ideal is nonzero and every minimal generator is a variable.
    pub fn is_variable_generated(&self) -> bool {
        !self.is_zero() && self.generators.iter().all(|g| g.len() == 1)
    }

    /// Variables dividing some minimal generator.
    pub fn support(&self) -> VertexSet {
        self.generators.support()
    }

    fn check_universe(&self, other: &Self) -> Result<()> {
        if same_universe(self.universe(), other.universe()) {
            Ok(())
        } else {
            input(format!(
                "universe mismatch: {:?} vs {:?}",
                self.universe(),
                other.universe()
            ))
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        Self::from_supports(
            self.universe().clone(),
            self.generators.iter().chain(other.generators.iter()).cloned(),
        )
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let lcms = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.union(b)));
        Self::from_supports(self.universe().clone(), lcms)
    }

    /// True iff the monomial with support `monomial` lies in the ideal.
    pub fn contains_monomial(&self, monomial: &VertexSet) -> bool {
        self.generators.iter().any(|g| g.is_subset(monomial))
    }

    /// Minimal primes: the minimal transversals of the generator supports.
    pub fn minimal_primes(&self) -> Result<MinimalPrimes> {
        if self.is_unit() {
            return precondition("unit ideal has no primes");
        }
        if self.is_zero() {
            return Ok(MinimalPrimes {
                primes: SpernerFamily::empty(self.universe().clone()),
                zero_ideal: true,
            });
        }
        Ok(MinimalPrimes {
            primes: self.generators.minimal_transversals(),
            zero_ideal: false,
        })
    }

    /// True iff all minimal primes have the same height.
    pub fn is_unmixed(&self) -> Result<bool> {
        Ok(self.minimal_primes()?.primes.is_uniform())
    }

    /// The complex of non-members of the ideal; facets are complements of minimal primes.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let universe = self.universe().clone();
        let full = universe.full();
        let facets = self
            .generators
            .minimal_transversals()
            .iter()
            .map(|p| full.difference(p))
            .collect::<Vec<_>>();
        SimplicialComplex::from_facets(universe, facets).expect("complements stay in universe")
    }

    /// The same ideal viewed in a ring with more (or reordered) variables.
    pub fn translate(&self, target: Arc<Universe>) -> Result<Self> {
        Ok(Self {
            generators: self.generators.translate(target)?,
        })
    }

    /// Adjoins variables that occur in no generator.
    pub fn extend_universe<I, S>(&self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let extra = Universe::from_labels(labels);
        self.translate(Arc::new(self.universe().union(&extra)))
    }

    /// Generator supports as label lists.
    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.generators.to_labels()
    }
}

impl fmt::Debug for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "<0>");
        }
        let gens: Vec<String> = self
            .generator_labels()
            .into_iter()
            .map(|g| if g.is_empty() { "1".into() } else { g.join("*") })
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// JSON form: `{"universe": [...], "generators": [[...], ...], "zero": bool, "unit": bool}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealDoc {
    pub universe: Vec<String>,
    #[serde(default)]
    pub generators: Vec<Vec<String>>,
    #[serde(default)]
    pub zero: bool,
    #[serde(default)]
    pub unit: bool,
}

impl TryFrom<IdealDoc> for SquareFreeIdeal {
    type Error = Error;

    fn try_from(doc: IdealDoc) -> Result<Self> {
        let universe = Arc::new(Universe::new(doc.universe)?);
        if doc.unit {
            if doc.generators.iter().any(|g| !g.is_empty()) {
                return input("ideal marked unit lists non-unit generators");
            }
            return Ok(Self::unit(universe));
        }
        let ideal = Self::from_labels(universe, doc.generators)?;
        if doc.zero && !ideal.is_zero() {
            return input("ideal marked zero lists generators");
        }
        Ok(ideal)
    }
}

impl From<SquareFreeIdeal> for IdealDoc {
    fn from(ideal: SquareFreeIdeal) -> Self {
        IdealDoc {
            universe: ideal.universe().labels().to_vec(),
            zero: ideal.is_zero(),
            unit: ideal.is_unit(),
            generators: ideal.generator_labels(),
        }
    }
}
