//! Link polynomials: sets of square-free monomials over ring variables.
//!
//! A monomial records that the rings it mentions are jointly linked. Cutting a
//! ring sets its variable to zero, which deletes every monomial containing it.
//! Two polynomials describe the same link class when they agree after removing
//! redundant monomials and relabeling rings.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Letters available for text rendering.
pub const MAX_RINGS: usize = 26;

/// Largest ring count accepted by [`LinkPolynomial::canonicalize`]; the
/// canonical form minimizes over all `n!` relabelings.
pub const MAX_CANONICAL_RINGS: usize = 9;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingVariable(u8);

impl RingVariable {
    /// # Panics
    /// If `index >= MAX_RINGS`.
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_RINGS, "ring index {index} exceeds {MAX_RINGS}");
        RingVariable(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> char {
        (b'a' + self.0) as char
    }

    pub fn from_letter(c: char) -> Option<Self> {
        c.is_ascii_lowercase().then(|| RingVariable(c as u8 - b'a'))
    }

    fn bit(self) -> u32 {
        1 << self.0
    }
}

impl fmt::Display for RingVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A product of at least two distinct ring variables, stored as a bitmask.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u32);

impl Monomial {
    pub fn from_mask(mask: u32) -> Result<Self> {
        if mask.count_ones() < 2 {
            return Err(Error::RuleViolation(format!(
                "monomial with mask {mask:#b} has fewer than two variables"
            )));
        }
        if mask >> MAX_RINGS != 0 {
            return Err(Error::VariableOutOfRange {
                index: 31 - mask.leading_zeros() as usize,
                rings: MAX_RINGS,
            });
        }
        Ok(Monomial(mask))
    }

    pub fn from_variables<I: IntoIterator<Item = RingVariable>>(vars: I) -> Result<Self> {
        let mut mask = 0u32;
        for v in vars {
            if mask & v.bit() != 0 {
                return Err(Error::RuleViolation(format!(
                    "variable {v} repeated within a monomial"
                )));
            }
            mask |= v.bit();
        }
        Monomial::from_mask(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn order(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: RingVariable) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn variables(self) -> impl Iterator<Item = RingVariable> {
        let mask = self.0;
        (0..MAX_RINGS as u8)
            .filter(move |i| mask >> i & 1 == 1)
            .map(RingVariable)
    }

    /// True if every variable of `self` is in `other` and `self != other`.
    pub fn is_proper_subset_of(self, other: Monomial) -> bool {
        self.0 & other.0 == self.0 && self.0 != other.0
    }

    fn render_key(self) -> (Reverse<usize>, Vec<RingVariable>) {
        (Reverse(self.order()), self.variables().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.variables() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Permutes the bits of `mask`: bit `i` moves to `perm[i]`.
pub(crate) fn permute_mask(mask: u32, perm: &[u8]) -> u32 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << perm[i];
        rest &= rest - 1;
    }
    out
}

/// True iff the hypergraph with edge set `monomials` covers exactly `vars`
/// and is connected.
pub fn is_link(monomials: &[Monomial], vars: u32) -> bool {
    let Some(first) = monomials.first() else {
        return false;
    };
    let cover = monomials.iter().fold(0, |acc, m| acc | m.0);
    if cover != vars {
        return false;
    }
    let mut reached = first.0;
    loop {
        let before = reached;
        for m in monomials {
            if m.0 & reached != 0 {
                reached |= m.0;
            }
        }
        if reached == before {
            break;
        }
    }
    reached == vars
}

/// Rule 5: `m` is redundant when its strictly smaller submonomials in `set`
/// already form a link on the variables of `m`.
pub(crate) fn is_redundant(m: Monomial, set: &[Monomial]) -> bool {
    let witnesses: Vec<Monomial> = set
        .iter()
        .copied()
        .filter(|w| w.is_proper_subset_of(m))
        .collect();
    is_link(&witnesses, m.0)
}

/// A set of monomials over `rings` ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkPolynomial {
    rings: usize,
    // sorted by mask, no duplicates
    monomials: Vec<Monomial>,
}

impl LinkPolynomial {
    pub fn new<I: IntoIterator<Item = Monomial>>(rings: usize, monomials: I) -> Result<Self> {
        if rings > MAX_RINGS {
            return Err(Error::RingCountUnsupported(rings));
        }
        let mut monomials: Vec<Monomial> = monomials.into_iter().collect();
        for m in &monomials {
            if m.0 >> rings != 0 {
                return Err(Error::VariableOutOfRange {
                    index: 31 - m.0.leading_zeros() as usize,
                    rings,
                });
            }
        }
        monomials.sort_unstable();
        monomials.dedup();
        Ok(LinkPolynomial { rings, monomials })
    }

    pub fn from_masks<I: IntoIterator<Item = u32>>(rings: usize, masks: I) -> Result<Self> {
        let monomials = masks
            .into_iter()
            .map(Monomial::from_mask)
            .collect::<Result<Vec<_>>>()?;
        LinkPolynomial::new(rings, monomials)
    }

    /// Internal constructor for masks already known to be valid and sorted.
    pub(crate) fn from_sorted_masks(rings: usize, masks: &[u32]) -> Self {
        debug_assert!(masks.windows(2).all(|w| w[0] < w[1]));
        LinkPolynomial {
            rings,
            monomials: masks.iter().map(|&m| Monomial(m)).collect(),
        }
    }

    pub fn zero(rings: usize) -> Self {
        LinkPolynomial {
            rings,
            monomials: Vec::new(),
        }
    }

    /// Parses text such as `abc+abd+ac`, taking the ring count from the
    /// highest letter used.
    pub fn parse(text: &str) -> Result<Self> {
        let monomials = parse_terms(text)?;
        let support = monomials.iter().fold(0, |acc, m| acc | m.0);
        let rings = 32 - support.leading_zeros() as usize;
        LinkPolynomial::new(rings, monomials)
    }

    /// Parses text over a fixed ring count, rejecting letters beyond it.
    pub fn parse_with_rings(text: &str, rings: usize) -> Result<Self> {
        LinkPolynomial::new(rings, parse_terms(text)?)
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.monomials.binary_search(&m).is_ok()
    }

    /// Bitmask of the variables used by some monomial.
    pub fn support(&self) -> u32 {
        self.monomials.iter().fold(0, |acc, m| acc | m.0)
    }

    pub fn all_rings_mask(&self) -> u32 {
        ((1u64 << self.rings) - 1) as u32
    }

    /// Sorted monomial masks; lexicographic order on this list is the order
    /// used to pick canonical representatives.
    pub fn encoding(&self) -> Vec<u32> {
        self.monomials.iter().map(|m| m.0).collect()
    }

    /// Monomials in display order: higher order first, then lexicographic.
    pub fn display_terms(&self) -> Vec<Monomial> {
        let mut terms = self.monomials.clone();
        terms.sort_by_cached_key(|m| m.render_key());
        terms
    }

    /// Connected link covering every one of the `rings` variables.
    pub fn is_link(&self) -> bool {
        is_link(&self.monomials, self.all_rings_mask())
    }

    pub fn is_link_on(&self, vars: u32) -> bool {
        is_link(&self.monomials, vars)
    }

    /// Monomials that survive setting `v` to zero; ring count unchanged.
    pub fn without(&self, v: RingVariable) -> LinkPolynomial {
        LinkPolynomial {
            rings: self.rings,
            monomials: self
                .monomials
                .iter()
                .copied()
                .filter(|m| !m.contains(v))
                .collect(),
        }
    }

    /// Monomials entirely inside `vars`.
    pub fn restricted_to(&self, vars: u32) -> LinkPolynomial {
        LinkPolynomial {
            rings: self.rings,
            monomials: self
                .monomials
                .iter()
                .copied()
                .filter(|m| m.0 & !vars == 0)
                .collect(),
        }
    }

    /// Connected components of the monomial hypergraph, in order of their
    /// smallest monomial. Each keeps the original labeling.
    pub fn components(&self) -> Vec<LinkPolynomial> {
        let mut remaining = self.monomials.clone();
        let mut out = Vec::new();
        while let Some(&seed) = remaining.first() {
            let mut reached = seed.0;
            loop {
                let before = reached;
                for m in &remaining {
                    if m.0 & reached != 0 {
                        reached |= m.0;
                    }
                }
                if reached == before {
                    break;
                }
            }
            let (inside, outside): (Vec<_>, Vec<_>) =
                remaining.into_iter().partition(|m| m.0 & reached != 0);
            out.push(LinkPolynomial {
                rings: self.rings,
                monomials: inside,
            });
            remaining = outside;
        }
        out
    }

    pub fn cut(&self, v: RingVariable) -> Result<CutResult> {
        if v.index() >= self.rings {
            return Err(Error::VariableOutOfRange {
                index: v.index(),
                rings: self.rings,
            });
        }
        let survivors = self.without(v);
        let components = survivors.components();
        let covered = survivors.support();
        let free = (0..self.rings)
            .map(RingVariable::new)
            .filter(|&r| r != v && covered & r.bit() == 0)
            .collect();
        Ok(CutResult {
            rings: self.rings,
            cut: v,
            components,
            free,
        })
    }

    /// Removes rule-5 redundant monomials until none remain.
    pub fn reduce(&self) -> LinkPolynomial {
        let mut monomials = self.monomials.clone();
        while let Some(i) = monomials.iter().position(|&m| is_redundant(m, &monomials)) {
            monomials.remove(i);
        }
        LinkPolynomial {
            rings: self.rings,
            monomials,
        }
    }

    pub fn is_reduced(&self) -> bool {
        !self
            .monomials
            .iter()
            .any(|&m| is_redundant(m, &self.monomials))
    }

    /// Applies a relabeling: variable `i` becomes `perm[i]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..rings`.
    pub fn relabel(&self, perm: &[usize]) -> LinkPolynomial {
        assert_eq!(perm.len(), self.rings, "permutation length");
        let mut seen = 0u32;
        for &p in perm {
            assert!(p < self.rings && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let perm: Vec<u8> = perm.iter().map(|&p| p as u8).collect();
        let mut masks: Vec<u32> = self
            .monomials
            .iter()
            .map(|m| permute_mask(m.0, &perm))
            .collect();
        masks.sort_unstable();
        LinkPolynomial::from_sorted_masks(self.rings, &masks)
    }

    /// Relabels the support onto `0..k` preserving variable order. Returns
    /// the compacted polynomial and, for each new index, its original ring.
    pub fn compact(&self) -> (LinkPolynomial, Vec<RingVariable>) {
        let support = self.support();
        let originals: Vec<RingVariable> = (0..self.rings)
            .filter(|i| support >> i & 1 == 1)
            .map(RingVariable::new)
            .collect();
        let mut to_new = [0u8; MAX_RINGS];
        for (new, old) in originals.iter().enumerate() {
            to_new[old.index()] = new as u8;
        }
        let mut masks: Vec<u32> = self
            .monomials
            .iter()
            .map(|m| permute_mask(m.0, &to_new))
            .collect();
        masks.sort_unstable();
        (
            LinkPolynomial::from_sorted_masks(originals.len(), &masks),
            originals,
        )
    }

    /// The reduced representative whose encoding is smallest over every
    /// relabeling of the rings.
    ///
    /// # Panics
    /// If `rings > MAX_CANONICAL_RINGS`.
    pub fn canonicalize(&self) -> LinkPolynomial {
        assert!(
            self.rings <= MAX_CANONICAL_RINGS,
            "canonical form limited to {MAX_CANONICAL_RINGS} rings"
        );
        let reduced = self.reduce();
        let masks = Relabelings::new(self.rings).canonical_encoding(&reduced.encoding());
        LinkPolynomial::from_sorted_masks(self.rings, &masks)
    }

    pub fn equivalent(&self, other: &LinkPolynomial) -> Result<bool> {
        if self.rings != other.rings {
            return Err(Error::RingCountMismatch {
                left: self.rings,
                right: other.rings,
            });
        }
        if self.rings > MAX_CANONICAL_RINGS {
            return Err(Error::RingCountUnsupported(self.rings));
        }
        Ok(self.canonicalize() == other.canonicalize())
    }
}

impl fmt::Display for LinkPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.display_terms().iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for LinkPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LinkPolynomial::parse(s)
    }
}

fn parse_terms(text: &str) -> Result<Vec<Monomial>> {
    let compact: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if compact.len() == 1 && compact[0].1 == '0' {
        return Ok(Vec::new());
    }
    if compact.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut monomials = Vec::new();
    let mut term: Vec<(usize, RingVariable)> = Vec::new();
    let mut finish = |term: &mut Vec<(usize, RingVariable)>, at: usize| -> Result<()> {
        if term.is_empty() {
            return Err(Error::parse(at, "empty term"));
        }
        if term.len() == 1 {
            return Err(Error::RuleViolation(format!(
                "first-order term '{}' at byte {}",
                term[0].1, term[0].0
            )));
        }
        let mut mask = 0u32;
        for &(pos, v) in term.iter() {
            if mask & v.bit() != 0 {
                return Err(Error::RuleViolation(format!(
                    "variable '{v}' repeated within a term at byte {pos}"
                )));
            }
            mask |= v.bit();
        }
        monomials.push(Monomial(mask));
        term.clear();
        Ok(())
    };
    for &(pos, c) in &compact {
        match c {
            '+' => finish(&mut term, pos)?,
            _ => match RingVariable::from_letter(c) {
                Some(v) => term.push((pos, v)),
                None => return Err(Error::parse(pos, format!("unexpected character {c:?}"))),
            },
        }
    }
    finish(&mut term, text.len())?;
    Ok(monomials)
}

/// Removal of one ring: connected components of the survivors plus rings
/// left in no surviving monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub rings: usize,
    pub cut: RingVariable,
    pub components: Vec<LinkPolynomial>,
    pub free: Vec<RingVariable>,
}

impl CutResult {
    pub fn free_count(&self) -> usize {
        self.free.len()
    }

    /// All surviving monomials as one polynomial.
    pub fn survivors(&self) -> LinkPolynomial {
        LinkPolynomial::new(
            self.rings,
            self.components
                .iter()
                .flat_map(|c| c.monomials().iter().copied()),
        )
        .expect("components share the parent ring count")
    }
}

impl fmt::Display for CutResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All relabelings of `n` rings, used to compute canonical encodings.
#[derive(Clone, Debug)]
pub struct Relabelings {
    rings: usize,
    perms: Vec<Vec<u8>>,
}

impl Relabelings {
    pub fn new(rings: usize) -> Self {
        let mut current: Vec<u8> = (0..rings as u8).collect();
        let mut perms = vec![current.clone()];
        while next_permutation(&mut current) {
            perms.push(current.clone());
        }
        Relabelings { rings, perms }
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        self.perms.iter().map(Vec::as_slice)
    }

    /// Sorted masks of `masks` under one relabeling.
    pub fn apply(perm: &[u8], masks: &[u32], out: &mut Vec<u32>) {
        out.clear();
        out.extend(masks.iter().map(|&m| permute_mask(m, perm)));
        out.sort_unstable();
    }

    /// Lexicographically smallest sorted encoding over all relabelings.
    pub fn canonical_encoding(&self, masks: &[u32]) -> Vec<u32> {
        let mut best = masks.to_vec();
        best.sort_unstable();
        let mut scratch = Vec::with_capacity(masks.len());
        for perm in &self.perms {
            Relabelings::apply(perm, masks, &mut scratch);
            if scratch < best {
                std::mem::swap(&mut best, &mut scratch);
            }
        }
        best
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Class `index` among links of `rings` rings, written `n^i`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub rings: u8,
    pub index: u32,
}

impl ClassLabel {
    pub fn new(rings: usize, index: u32) -> Self {
        ClassLabel {
            rings: rings as u8,
            index,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.rings, self.index)
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (n, i) = s
            .split_once('^')
            .ok_or_else(|| Error::parse(0, format!("class label {s:?} is not of the form n^i")))?;
        let rings: u8 = n
            .parse()
            .map_err(|_| Error::parse(0, format!("bad ring count in {s:?}")))?;
        let index: u32 = i
            .parse()
            .map_err(|_| Error::parse(n.len() + 1, format!("bad class index in {s:?}")))?;
        if rings < 2 || rings as usize > MAX_RINGS || index == 0 {
            return Err(Error::parse(0, format!("class label {s:?} out of range")));
        }
        Ok(ClassLabel { rings, index })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LinkPolynomial {
        s.parse().unwrap()
    }

    fn v(c: char) -> RingVariable {
        RingVariable::from_letter(c).unwrap()
    }

    #[test]
    fn parse_accepts_spaces_duplicates_and_zero() {
        let poly = p("ab+ac");
        assert_eq!(poly.rings(), 3);
        assert_eq!(poly.encoding(), vec![0b011, 0b101]);
        assert_eq!(p(" ab + ab ").len(), 1);
        assert_eq!(p("0").len(), 0);
    }

    #[test]
    fn parse_rejects_rule_breaches() {
        assert!(matches!(p_err("aab"), Error::RuleViolation(_)));
        assert!(matches!(p_err("ab+c"), Error::RuleViolation(_)));
        assert!(matches!(p_err("ab++ac"), Error::Parse { .. }));
        assert!(matches!(p_err("+ab"), Error::Parse { .. }));
        assert!(matches!(p_err("ab+"), Error::Parse { .. }));
        assert!(matches!(p_err("aB"), Error::Parse { .. }));
        assert!(matches!(p_err(""), Error::Parse { .. }));
        assert!(matches!(
            LinkPolynomial::parse_with_rings("ad", 3),
            Err(Error::VariableOutOfRange { index: 3, rings: 3 })
        ));
    }

    fn p_err(s: &str) -> Error {
        LinkPolynomial::parse(s).unwrap_err()
    }

    #[test]
    fn render_orders_by_degree_then_letters() {
        assert_eq!(p("ac+abd+abc").to_string(), "abc+abd+ac");
        assert_eq!(p("cb+ba").to_string(), "ab+bc");
        assert_eq!(LinkPolynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn cut_examples() {
        let r = p("ab+ac").cut(v('b')).unwrap();
        assert_eq!(r.components, vec![LinkPolynomial::parse_with_rings("ac", 3).unwrap()]);
        assert_eq!(r.free_count(), 0);

        let r = p("abc").cut(v('a')).unwrap();
        assert!(r.components.is_empty());
        assert_eq!(r.free, vec![v('b'), v('c')]);

        let r = p("ab+cd+abcd").cut(v('a')).unwrap();
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].to_string(), "cd");
        assert_eq!(r.free, vec![v('b')]);

        assert!(matches!(
            p("ab").cut(v('c')),
            Err(Error::VariableOutOfRange { index: 2, rings: 2 })
        ));
    }

    #[test]
    fn link_detection() {
        assert!(!p("ab+cd").is_link());
        assert!(p("ab+bc").is_link());
        assert!(p("ab").is_link());
        assert!(!LinkPolynomial::parse_with_rings("ab", 3).unwrap().is_link());
        assert!(!LinkPolynomial::zero(2).is_link());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(p("ab+bc+abc").reduce(), p("ab+bc"));
        assert_eq!(p("ab+cd+abcd").reduce(), p("ab+cd+abcd"));
        assert_eq!(p("abcd+abc+abd+ac").reduce(), p("abc+abd+ac"));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(p("ab+bc").canonicalize(), p("ab+ac").canonicalize());
        assert_eq!(p("abc").canonicalize(), p("abc"));
        let relabelings = Relabelings::new(3);
        let mut raw: Vec<Vec<u32>> = relabelings
            .iter()
            .map(|perm| {
                let mut out = Vec::new();
                Relabelings::apply(perm, &p("ab+ac").encoding(), &mut out);
                out
            })
            .collect();
        assert_eq!(raw.len(), 6);
        raw.sort();
        raw.dedup();
        assert_eq!(raw.len(), 3);
    }

    #[test]
    fn equivalence() {
        assert!(p("ab+ac").equivalent(&p("ab+bc")).unwrap());
        let c22 = p("abc+abd+ab+cd");
        let c25 = p("abc+abd+ac+bd");
        assert!(!c22.equivalent(&c25).unwrap());
        assert!(c22.equivalent(&c22).unwrap());
        assert!(matches!(
            p("ab").equivalent(&p("abc")),
            Err(Error::RingCountMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn compact_relabels_support() {
        let poly = LinkPolynomial::parse_with_rings("bd", 4).unwrap();
        let (c, originals) = poly.compact();
        assert_eq!(c, p("ab"));
        assert_eq!(originals, vec![v('b'), v('d')]);
    }

    #[test]
    fn class_labels() {
        let l: ClassLabel = "4^20".parse().unwrap();
        assert_eq!(l, ClassLabel::new(4, 20));
        assert_eq!(l.to_string(), "4^20");
        assert!("4".parse::<ClassLabel>().is_err());
        assert!("4^0".parse::<ClassLabel>().is_err());
        assert!("x^1".parse::<ClassLabel>().is_err());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(Relabelings::new(4).len(), 24);
        assert_eq!(Relabelings::new(1).len(), 1);
    }
}
