//! Representative states for link classes.
//!
//! A recipe is a sum of orthogonal terms `c · |GHZ⟩_E |bits⟩_R |level⟩`,
//! where `E` is an entangled qubit set, `R` its complement set to fixed
//! bits, and the trailing qudit level keeps terms apart. Tracing out the
//! qudit leaves a mixture whose subset structure follows the polynomial.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::entclass::classify;
use crate::enumerate::ClassCatalog;
use crate::error::{Error, Result};
use crate::linkpoly::{ClassLabel, LinkPolynomial, Monomial, RingVariable};
use crate::qla::{CMatrix, CVector, DensityMatrix, Operator, StateVector, SubsystemShape, Tolerances, C64, MAX_DIMENSION};

/// Qubit limit for recipes, keeping realized states within the matrix
/// file dimension limit.
pub const MAX_RECIPE_QUBITS: usize = 8;

/// Largest qudit level accepted in a recipe.
pub const MAX_QUDIT_LEVEL: usize = 63;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

pub fn ghz(k: usize) -> Result<StateVector> {
    if k < 2 {
        return Err(Error::BadCount(k));
    }
    if k > MAX_RECIPE_QUBITS {
        return Err(Error::InvalidRecipe(format!("{k} qubits exceed the limit")));
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![0.0; 1 << k];
    amps[0] = h;
    amps[(1 << k) - 1] = h;
    StateVector::from_real(SubsystemShape::qubits(k), &amps)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    One,
    Half,
}

impl Coefficient {
    pub fn value(self) -> f64 {
        match self {
            Coefficient::One => 1.0,
            Coefficient::Half => 0.5,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficient::One => "1",
            Coefficient::Half => "1/2",
        })
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Coefficient::One),
            "1/2" | "0.5" => Ok(Coefficient::Half),
            _ => Err(Error::InvalidRecipe(format!("coefficient {s:?} is not 1 or 1/2"))),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SynthesisTerm {
    pub coefficient: Coefficient,
    /// Qubits in the GHZ factor.
    pub entangled: u32,
    /// Qubits outside `entangled` that are set to |1⟩; the rest are |0⟩.
    pub ones: u32,
    pub level: usize,
}

impl SynthesisTerm {
    /// Basis index over `qubits` qubits of the term's branch where every
    /// entangled qubit equals `g`.
    fn branch_index(&self, qubits: usize, g: bool) -> usize {
        let mut idx = 0;
        for q in 0..qubits {
            let bit = if self.entangled >> q & 1 == 1 { g } else { self.ones >> q & 1 == 1 };
            idx = idx << 1 | usize::from(bit);
        }
        idx
    }
}

/// An ordered sum of orthogonal terms over `qubits` qubits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateRecipe {
    qubits: usize,
    terms: Vec<SynthesisTerm>,
}

impl StateRecipe {
    pub fn new(qubits: usize, terms: Vec<SynthesisTerm>) -> Result<Self> {
        if !(2..=MAX_RECIPE_QUBITS).contains(&qubits) {
            return Err(Error::InvalidRecipe(format!("unsupported qubit count {qubits}")));
        }
        if terms.is_empty() {
            return Err(Error::InvalidRecipe("no terms".into()));
        }
        let all = (1u32 << qubits) - 1;
        let mut levels = 0u64;
        for t in &terms {
            if t.entangled.count_ones() < 2 || t.entangled & !all != 0 {
                return Err(Error::InvalidRecipe(format!(
                    "entangled set {:#b} is not a subset of two or more qubits",
                    t.entangled
                )));
            }
            if t.ones & (t.entangled | !all) != 0 {
                return Err(Error::InvalidRecipe("separable bits overlap the entangled set".into()));
            }
            if t.level > MAX_QUDIT_LEVEL {
                return Err(Error::InvalidRecipe(format!("qudit level {} too large", t.level)));
            }
            if levels >> t.level & 1 == 1 {
                return Err(Error::InvalidRecipe(format!("duplicate qudit level {}", t.level)));
            }
            levels |= 1 << t.level;
        }
        let recipe = StateRecipe { qubits, terms };
        if (1usize << qubits) * recipe.qudit_dim() > MAX_DIMENSION {
            return Err(Error::InvalidRecipe("joint dimension exceeds the limit".into()));
        }
        Ok(recipe)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn terms(&self) -> &[SynthesisTerm] {
        &self.terms
    }

    pub fn qudit_dim(&self) -> usize {
        self.terms.iter().map(|t| t.level).max().unwrap_or(0) + 1
    }

    /// ⟨ψ|ψ⟩ = Σ c².
    pub fn norm_squared(&self) -> f64 {
        self.terms.iter().map(|t| t.coefficient.value().powi(2)).sum()
    }

    /// The unnormalized joint vector over the qubits and the trailing qudit.
    pub fn state_vector(&self) -> StateVector {
        let dim = self.qudit_dim();
        let mut amps = CVector::zeros((1 << self.qubits) * dim);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for t in &self.terms {
            for g in [false, true] {
                amps[t.branch_index(self.qubits, g) * dim + t.level] += C64::new(t.coefficient.value() * h, 0.0);
            }
        }
        let mut dims = vec![2; self.qubits];
        dims.push(dim);
        let shape = SubsystemShape::new(dims).expect("recipe dimensions validated");
        StateVector::new(shape, amps).expect("finite amplitudes")
    }

    /// The polynomial whose monomials are the entangled sets.
    pub fn polynomial(&self) -> LinkPolynomial {
        LinkPolynomial::from_masks(self.qubits, self.terms.iter().map(|t| t.entangled))
            .expect("entangled sets validated")
    }

    /// Renames qubits: qubit `i` becomes `perm[i]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of the qubits.
    pub fn relabel(&self, perm: &[usize]) -> StateRecipe {
        assert_eq!(perm.len(), self.qubits, "permutation length");
        let map = |mask: u32| {
            (0..self.qubits)
                .filter(|q| mask >> q & 1 == 1)
                .fold(0u32, |acc, q| acc | 1 << perm[q])
        };
        let terms = self
            .terms
            .iter()
            .map(|t| SynthesisTerm {
                entangled: map(t.entangled),
                ones: map(t.ones),
                ..*t
            })
            .collect();
        StateRecipe::new(self.qubits, terms).expect("relabeling preserves validity")
    }

    /// Parses the one-term-per-line text form; the qubit count is the
    /// highest letter used plus one.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parsed = Vec::new();
        let mut used = 0u32;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (term, covered) = parse_term(line)?;
            used |= covered;
            parsed.push((term, covered));
        }
        let qubits = 32 - used.leading_zeros() as usize;
        let all = if qubits >= 32 { u32::MAX } else { (1u32 << qubits) - 1 };
        if let Some((_, covered)) = parsed.iter().find(|(_, c)| *c != all) {
            return Err(Error::InvalidRecipe(format!(
                "term covers qubits {covered:#b}, expected all {qubits}"
            )));
        }
        StateRecipe::new(qubits, parsed.into_iter().map(|(t, _)| t).collect())
    }
}

fn letter_mask(text: &str) -> Result<u32> {
    let mut mask = 0u32;
    for c in text.chars() {
        let v = RingVariable::from_letter(c)
            .ok_or_else(|| Error::InvalidRecipe(format!("{c:?} is not a qubit letter")))?;
        if mask & 1 << v.index() != 0 {
            return Err(Error::InvalidRecipe(format!("qubit {c} repeated")));
        }
        mask |= 1 << v.index();
    }
    Ok(mask)
}

fn parse_call<'a>(part: &'a str, name: &str) -> Result<&'a str> {
    part.trim()
        .strip_prefix(name)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidRecipe(format!("expected {name}(...), got {part:?}")))
}

/// Parses `coeff * GHZ(abc) x bits(d=0) x qudit(1)`; returns the term and
/// the mask of qubits it mentions.
fn parse_term(line: &str) -> Result<(SynthesisTerm, u32)> {
    let (coeff, rest) = line
        .split_once('*')
        .ok_or_else(|| Error::InvalidRecipe(format!("missing '*' in {line:?}")))?;
    let coefficient: Coefficient = coeff.trim().parse()?;
    let parts: Vec<&str> = rest.split(" x ").collect();
    if parts.len() != 3 {
        return Err(Error::InvalidRecipe(format!("expected three factors in {line:?}")));
    }
    let entangled = letter_mask(parse_call(parts[0], "GHZ")?)?;
    let mut separable = 0u32;
    let mut ones = 0u32;
    let bits = parse_call(parts[1], "bits")?;
    for item in bits.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (q, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidRecipe(format!("bad bit assignment {item:?}")))?;
        let bit = letter_mask(q.trim())?;
        if bit.count_ones() != 1 || (separable | entangled) & bit != 0 {
            return Err(Error::InvalidRecipe(format!("bad bit assignment {item:?}")));
        }
        separable |= bit;
        match value.trim() {
            "0" => {}
            "1" => ones |= bit,
            v => return Err(Error::InvalidRecipe(format!("bit value {v:?}"))),
        }
    }
    let level: usize = parse_call(parts[2], "qudit")?
        .trim()
        .parse()
        .map_err(|_| Error::InvalidRecipe(format!("bad qudit level in {line:?}")))?;
    Ok((
        SynthesisTerm {
            coefficient,
            entangled,
            ones,
            level,
        },
        entangled | separable,
    ))
}

impl fmt::Display for StateRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all = (1u32 << self.qubits) - 1;
        for t in &self.terms {
            let entangled = Monomial::from_mask(t.entangled).expect("validated");
            let bits: Vec<String> = (0..self.qubits)
                .filter(|q| (all & !t.entangled) >> q & 1 == 1)
                .map(|q| format!("{}={}", RingVariable::new(q).letter(), t.ones >> q & 1))
                .collect();
            writeln!(
                f,
                "{} * GHZ({entangled}) x bits({}) x qudit({})",
                t.coefficient,
                bits.join(","),
                t.level
            )?;
        }
        Ok(())
    }
}

impl FromStr for StateRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StateRecipe::parse(s)
    }
}

/// Builds the joint state, traces out the qudit and scales to unit trace.
pub fn realize(recipe: &StateRecipe) -> Result<DensityMatrix> {
    let n = 1usize << recipe.qubits;
    let dim = recipe.qudit_dim();
    let psi = recipe.state_vector();
    // reshape to (qubit basis) × (qudit level); ρ = M M†
    let m = CMatrix::from_fn(n, dim, |i, l| psi.amplitudes()[i * dim + l]);
    let op = Operator::new(SubsystemShape::qubits(recipe.qubits), &m * m.adjoint())?;
    DensityMatrix::normalized(op, &Tolerances::default())
}

/// Compact catalog notation: `coeff entangled bits [@level]` per term,
/// separated by `;`. Bits list the remaining qubits alphabetically; `-`
/// means none. Levels default to the term position.
const THREE_RING_RECIPES: [&str; 4] = [
    "1 abc -",
    "1 abc - ; 1 ab 0",
    "1 ab 0 ; 1 ac 1",
    "1 ab 0 ; 1 ac 1 ; 1 bc 0",
];

const FOUR_RING_RECIPES: [&str; 40] = [
    "1 abcd -",
    "1 abcd - ; 1 abc 0",
    "1 abcd - ; 1 abc 1 ; 1 ab 00",
    "1 abcd - ; 1 ab 01",
    "1 abcd - ; 1 ab 00 ; 1 ac 01",
    "1 abcd - ; 1 ab 00 ; 1 cd 01",
    "h abcd - ; 1 ab 10 ; h ac 01 ; h bc 01",
    "1 abc 1 ; 1 abd 0",
    "1 abc 0 ; 1 abd 0 ; 1 acd 0",
    "1 abc 0 ; 1 abd 0 ; 1 acd 0 ; 1 bcd 0",
    "1 abc 0 ; 1 ad 00",
    "1 abc 0 ; 1 ad 00 ; 1 ab 00",
    "1 abc 0 ; 1 ad 11 ; 1 bd 10",
    "1 abc 0 ; 1 ab 00 ; 1 cd 10",
    "1 abc 0 ; 1 ad 11 ; 1 bd 11 ; 1 cd 11",
    "h abc 1 ; 1 ab 11 ; 1 ad 01 ; h bd 00",
    "1 abc 1 ; 1 ab 01 ; 1 ad 10 ; 1 cd 01",
    "h abc 0 ; h ab 00 ; 1 ad 11 ; h bd 00 ; 1 cd 11",
    "1 abc 0 ; 1 abd 0 ; 1 ab 10",
    "1 abc 0 ; 1 abd 0 ; 1 ac 10",
    "1 abc 1 ; 1 abd 0 ; 1 cd 00",
    "1 abc 0 ; 1 abd 1 ; 1 ab 11 ; 1 cd 10",
    "1 abc 1 ; 1 abd 1 ; 1 ac 11 ; 1 ad 11",
    "1 abc 1 ; 1 abd 0 ; 1 ac 11 ; 1 cd 10",
    "1 abc 0 ; 1 abd 0 ; 1 ac 11 ; 1 bd 00",
    "h abc 0 ; h abd 1 ; 1 ac 00 ; 1 ad 01 ; h cd 11",
    "1 abc 0 ; 1 abd 1 ; 1 ac 10 ; 1 bd 01 @4 ; 1 cd 01 @3",
    "1 abc 0 ; 1 abd 0 ; 1 acd 0 ; 1 ab 00",
    "1 abc 1 ; 1 abd 1 ; 1 acd 0 ; 1 bc 11",
    "1 abc 1 ; 1 abd 0 ; 1 acd 1 ; 1 ab 11 ; 1 cd 01",
    "1 abc 1 ; 1 abd 1 ; 1 acd 0 ; 1 bc 11 ; 1 bd 01",
    "h abc 0 ; h abd 1 ; h acd 0 ; h bc 01 ; 1 bd 11 ; 1 cd 00",
    "1 abc 0 ; 1 abd 0 ; 1 acd 1 ; 1 bcd 0 ; 1 ab 00",
    "1 abc 1 ; 1 abd 0 ; 1 acd 1 ; 1 bcd 0 ; 1 ab 11 ; 1 cd 11",
    "1 ab 11 ; 1 ac 01 ; 1 ad 01",
    "1 ab 00 ; 1 ac 11 ; 1 bd 00",
    "1 ab 00 ; h ac 00 ; h ad 10 ; 1 bc 11",
    "1 ab 11 ; 1 ac 00 ; 1 bd 11 ; 1 cd 00",
    "h ab 00 ; 1 ac 00 ; h ad 00 ; 1 bc 11 ; 1 bd 11",
    "h ab 10 ; 1 ac 00 ; h ad 01 ; h bc 10 ; 1 bd 11 ; 1 cd 10",
];

fn compact_recipe(qubits: usize, text: &str) -> StateRecipe {
    let all = (1u32 << qubits) - 1;
    let terms = text
        .split(';')
        .enumerate()
        .map(|(pos, term)| {
            let fields: Vec<&str> = term.split_whitespace().collect();
            let coefficient = if fields[0] == "h" { Coefficient::Half } else { Coefficient::One };
            let entangled = letter_mask(fields[1]).expect("catalog letters");
            let rest: Vec<usize> = (0..qubits).filter(|q| (all & !entangled) >> q & 1 == 1).collect();
            let ones = fields[2]
                .chars()
                .filter(|&c| c != '-')
                .zip(&rest)
                .filter(|(c, _)| *c == '1')
                .fold(0u32, |acc, (_, &q)| acc | 1 << q);
            let level = fields
                .get(3)
                .map_or(pos, |l| l.trim_start_matches('@').parse().expect("catalog level"));
            SynthesisTerm {
                coefficient,
                entangled,
                ones,
                level,
            }
        })
        .collect();
    StateRecipe::new(qubits, terms).expect("catalog recipe is valid")
}

/// The tabulated mixed-state recipe for a 3- or 4-ring class.
pub fn catalog_state(label: ClassLabel) -> Result<StateRecipe> {
    let table: &[&str] = match label.rings {
        3 => &THREE_RING_RECIPES,
        4 => &FOUR_RING_RECIPES,
        _ => return Err(Error::NoCatalogEntry(label)),
    };
    let text = table
        .get(label.index as usize - 1)
        .ok_or(Error::NoCatalogEntry(label))?;
    Ok(compact_recipe(label.rings as usize, text))
}

/// Pure three-qubit representatives: GHZ, GHZ with |001⟩ admixed, the
/// two-pair state and W.
pub fn pure_state(label: ClassLabel) -> Result<StateVector> {
    let t = 1.0 / 3f64.sqrt();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let support: &[(usize, f64)] = match (label.rings, label.index) {
        (3, 1) => &[(0b000, h), (0b111, h)],
        (3, 2) => &[(0b000, t), (0b111, t), (0b001, t)],
        (3, 3) => &[(0b100, 0.5), (0b010, 0.5), (0b110, 0.5), (0b011, 0.5)],
        (3, 4) => &[(0b001, t), (0b010, t), (0b100, t)],
        _ => return Err(Error::NoCatalogEntry(label)),
    };
    let mut amps = [0.0; 8];
    for &(i, a) in support {
        amps[i] = a;
    }
    StateVector::from_real(SubsystemShape::qubits(3), &amps)
}

/// Candidate `index` of the search template for `terms`: the high bits
/// select halved coefficients (first term most significant), the low
/// `free_bits` bits fill the separable qubits term by term.
fn candidate(qubits: usize, terms: &[Monomial], free_bits: u32, index: u64) -> StateRecipe {
    let all = (1u32 << qubits) - 1;
    let coeff_mask = index >> free_bits;
    let mut remaining = free_bits;
    let t_count = terms.len();
    let terms = terms
        .iter()
        .enumerate()
        .map(|(t, m)| {
            let half = coeff_mask >> (t_count - 1 - t) & 1 == 1;
            let mut ones = 0u32;
            for q in (0..qubits).filter(|q| (all & !m.mask()) >> q & 1 == 1) {
                remaining -= 1;
                if index >> remaining & 1 == 1 {
                    ones |= 1 << q;
                }
            }
            SynthesisTerm {
                coefficient: if half { Coefficient::Half } else { Coefficient::One },
                entangled: m.mask(),
                ones,
                level: t,
            }
        })
        .collect();
    StateRecipe::new(qubits, terms).expect("template recipe is valid")
}

/// First recipe in template order whose realized state classifies to the
/// class of `poly`; at most `budget` candidates are tried.
pub fn search_state(
    poly: &LinkPolynomial,
    catalog: &ClassCatalog,
    budget: u64,
    tol: &Tolerances,
) -> Result<StateRecipe> {
    let target = catalog.lookup(poly)?;
    let qubits = poly.rings();
    if qubits > MAX_RECIPE_QUBITS {
        return Err(Error::InvalidRecipe(format!("{qubits} qubits exceed the limit")));
    }
    let reduced = poly.reduce();
    let terms = reduced.display_terms();
    let free_bits: u32 = terms.iter().map(|m| (qubits - m.order()) as u32).sum();
    let total = 1u64
        .checked_shl(free_bits + terms.len() as u32)
        .filter(|&t| t != 0)
        .unwrap_or(u64::MAX);
    let limit = budget.min(total);
    (0..limit)
        .into_par_iter()
        .map(|i| candidate(qubits, &terms, free_bits, i))
        .find_first(|recipe| {
            realize(recipe)
                .and_then(|rho| classify(&rho, catalog, tol))
                .is_ok_and(|report| report.label == Some(target))
        })
        .ok_or(Error::SynthesisNotFound(limit as usize))
}

/// True iff some three rings are pairwise joined by second-order terms.
pub fn has_triangle(poly: &LinkPolynomial) -> bool {
    let pairs: Vec<u32> = poly
        .monomials()
        .iter()
        .filter(|m| m.order() == 2)
        .map(|m| m.mask())
        .collect();
    pairs.iter().any(|&x| {
        pairs.iter().any(|&y| {
            let tri = x | y;
            tri.count_ones() == 3 && pairs.contains(&(tri & !(x & y)))
        })
    })
}
