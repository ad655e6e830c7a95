//! Planning shared states for qubit networks.
//!
//! Each party holds one qubit. An allowed group is a set of parties that
//! must be able to share genuinely entangled correlations; any group not
//! implied by the allowed ones must stay separable. The groups become the
//! monomials of a link polynomial, whose class supplies a state recipe.

use std::fmt;

use serde::Deserialize;

use crate::entclass::{classify, ClassificationReport, Verdict};
use crate::enumerate::{CatalogSet, ClassCatalog};
use crate::error::{Error, Result};
use crate::linkpoly::{ClassLabel, LinkPolynomial, Relabelings, RingVariable};
use crate::qla::Tolerances;
use crate::synth::{catalog_state, realize, search_state, StateRecipe, MAX_RECIPE_QUBITS};

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkSpec {
    pub parties: Vec<String>,
    pub groups: Vec<Vec<String>>,
}

impl NetworkSpec {
    pub fn new(parties: Vec<String>, groups: Vec<Vec<String>>) -> Result<Self> {
        let spec = NetworkSpec { parties, groups };
        spec.validate()?;
        Ok(spec)
    }

    /// Parses `{"parties": [...], "groups": [[...], ...]}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let spec: NetworkSpec = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column(), format!("network spec: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if !(2..=MAX_RECIPE_QUBITS).contains(&self.parties.len()) {
            return Err(Error::InvalidNetwork(format!(
                "{} parties; between 2 and {MAX_RECIPE_QUBITS} are supported",
                self.parties.len()
            )));
        }
        for (i, p) in self.parties.iter().enumerate() {
            if p.trim().is_empty() {
                return Err(Error::InvalidNetwork("empty party name".into()));
            }
            if self.parties[..i].contains(p) {
                return Err(Error::InvalidNetwork(format!("party {p:?} declared twice")));
            }
        }
        for group in &self.groups {
            if group.len() < 2 {
                return Err(Error::InvalidNetwork(format!("group {group:?} has fewer than two parties")));
            }
            for (i, member) in group.iter().enumerate() {
                if !self.parties.contains(member) {
                    return Err(Error::InvalidNetwork(format!("unknown party {member:?}")));
                }
                if group[..i].contains(member) {
                    return Err(Error::InvalidNetwork(format!("party {member:?} repeated in a group")));
                }
            }
        }
        Ok(())
    }

    fn party_index(&self, name: &str) -> usize {
        self.parties
            .iter()
            .position(|p| p == name)
            .expect("validated membership")
    }

    /// Parties of a qubit mask, comma separated.
    pub fn names(&self, mask: u32) -> String {
        (0..self.parties.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.parties[i].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// One monomial per group, reduced. Party `i` is ring `i`.
    pub fn polynomial(&self) -> Result<LinkPolynomial> {
        let masks: Vec<u32> = self
            .groups
            .iter()
            .map(|g| g.iter().fold(0u32, |acc, p| acc | 1 << self.party_index(p)))
            .collect();
        let covered = masks.iter().fold(0, |acc, m| acc | m);
        if let Some(i) = (0..self.parties.len()).find(|i| covered >> i & 1 == 0) {
            return Err(Error::IsolatedParty(self.parties[i].clone()));
        }
        let poly = LinkPolynomial::from_masks(self.parties.len(), masks)?.reduce();
        if !poly.is_link() {
            return Err(Error::DisconnectedNetwork);
        }
        Ok(poly)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Entangled,
    Separable,
    Inconclusive,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verification::Entangled => "entangled",
            Verification::Separable => "separable",
            Verification::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RecipeSource {
    Catalog,
    Search,
}

impl fmt::Display for RecipeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecipeSource::Catalog => "catalog",
            RecipeSource::Search => "search",
        })
    }
}

#[derive(Clone, Debug)]
pub struct NetworkPlan {
    pub spec: NetworkSpec,
    pub polynomial: LinkPolynomial,
    pub label: ClassLabel,
    pub recipe: StateRecipe,
    pub source: RecipeSource,
    /// Every party subset of size ≥ 2, by size then mask.
    pub verification: Vec<(u32, Verification)>,
    pub report: ClassificationReport,
}

impl NetworkPlan {
    pub fn verification_of(&self, mask: u32) -> Option<Verification> {
        self.verification
            .iter()
            .find(|(m, _)| *m == mask)
            .map(|&(_, v)| v)
    }

    /// Mask of the named parties.
    pub fn mask_of(&self, names: &[&str]) -> u32 {
        names
            .iter()
            .fold(0, |acc, n| acc | 1 << self.spec.party_index(n))
    }

    /// Allowed groups are entangled and the realized class matches.
    pub fn is_consistent(&self) -> bool {
        self.report.label == Some(self.label)
            && self.polynomial.monomials().iter().all(|m| {
                self.verification_of(m.mask()) == Some(Verification::Entangled)
            })
    }
}

impl fmt::Display for NetworkPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.spec.parties.iter().enumerate() {
            writeln!(f, "party {}={p}", RingVariable::new(i))?;
        }
        writeln!(f, "polynomial={}", self.polynomial)?;
        writeln!(f, "class={}", self.label)?;
        writeln!(f, "recipe source={}", self.source)?;
        write!(f, "{}", self.recipe)?;
        for &(mask, v) in &self.verification {
            writeln!(f, "verify {} {v}", self.spec.names(mask))?;
        }
        Ok(())
    }
}

/// A relabeling taking `from` onto `to`, if the two are the same class.
fn relabeling_onto(from: &LinkPolynomial, to: &LinkPolynomial) -> Option<Vec<usize>> {
    let from = from.reduce();
    let to = to.reduce();
    Relabelings::new(to.rings())
        .iter()
        .map(|p| p.iter().map(|&x| x as usize).collect::<Vec<_>>())
        .find(|perm| from.relabel(perm) == to)
}

/// The tabulated recipe for `label`, renamed so its monomials are those of
/// `poly`.
fn catalog_recipe_for(poly: &LinkPolynomial, label: ClassLabel) -> Option<StateRecipe> {
    let recipe = catalog_state(label).ok()?;
    let perm = relabeling_onto(&recipe.polynomial(), poly)?;
    Some(recipe.relabel(&perm))
}

/// A verified recipe for `poly`: the tabulated one when its realized state
/// classifies back to the class, otherwise the first hit of a search.
pub fn recipe_for(
    poly: &LinkPolynomial,
    catalog: &ClassCatalog,
    budget: u64,
    tol: &Tolerances,
) -> Result<(StateRecipe, RecipeSource, ClassificationReport)> {
    let label = catalog.lookup(poly)?;
    if let Some(recipe) = catalog_recipe_for(poly, label) {
        let report = classify(&realize(&recipe)?, catalog, tol)?;
        if report.label == Some(label) {
            return Ok((recipe, RecipeSource::Catalog, report));
        }
    }
    let recipe = search_state(poly, catalog, budget, tol)?;
    let report = classify(&realize(&recipe)?, catalog, tol)?;
    Ok((recipe, RecipeSource::Search, report))
}

/// Builds the polynomial for `spec`, picks a recipe and checks it by
/// classifying the realized state.
pub fn plan(spec: &NetworkSpec, catalogs: &CatalogSet, budget: u64, tol: &Tolerances) -> Result<NetworkPlan> {
    let polynomial = spec.polynomial()?;
    let catalog = catalogs.get(polynomial.rings())?;
    let label = catalog.lookup(&polynomial)?;
    let (recipe, source, report) = recipe_for(&polynomial, catalog, budget, tol)?;

    let verification = report
        .evidence
        .iter()
        .map(|e| {
            let v = match e.verdict {
                Verdict::TermPresent => Verification::Entangled,
                Verdict::TermAbsent => Verification::Separable,
                Verdict::Inconclusive => Verification::Inconclusive,
            };
            (e.subset, v)
        })
        .collect();

    Ok(NetworkPlan {
        spec: spec.clone(),
        polynomial,
        label,
        recipe,
        source,
        verification,
        report,
    })
}
