//! Exhaustive enumeration of link classes and the catalogs built from it.
//!
//! Enumeration walks subsets of the monomial basis. Second-order monomials
//! form a graph prefix; only one prefix per graph isomorphism class is
//! explored, since relabeling maps every polynomial onto a polynomial whose
//! graph part is the canonical representative. Higher-order monomials are then
//! added in increasing order, so a rule-5 redundancy check at insertion time is
//! final and prunes the whole subtree. Workers collect canonical encodings in
//! private sets which are merged and sorted at the end.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linkpoly::{
    is_link, is_redundant, ClassLabel, LinkPolynomial, Monomial, RingVariable, Relabelings,
    MAX_CANONICAL_RINGS,
};

/// Published 3-ring classes in label order.
pub const THREE_RING_CLASSES: [&str; 4] = ["abc", "abc+ab", "ab+ac", "ab+ac+bc"];

/// Published 4-ring classes in label order.
pub const FOUR_RING_CLASSES: [&str; 40] = [
    "abcd",
    "abcd+abc",
    "abcd+abc+ab",
    "abcd+ab",
    "abcd+ab+ac",
    "abcd+ab+cd",
    "abcd+ab+ac+bc",
    "abc+abd",
    "abc+abd+acd",
    "abc+abd+acd+bcd",
    "abc+ad",
    "abc+ab+ad",
    "abc+ad+bd",
    "abc+ab+cd",
    "abc+ad+bd+cd",
    "abc+ab+ad+bd",
    "abc+ab+ad+cd",
    "abc+ab+ad+bd+cd",
    "abc+abd+ab",
    "abc+abd+ac",
    "abc+abd+cd",
    "abc+abd+ab+cd",
    "abc+abd+ac+ad",
    "abc+abd+ac+cd",
    "abc+abd+ac+bd",
    "abc+abd+ac+ad+cd",
    "abc+abd+ac+bd+cd",
    "abc+abd+acd+ab",
    "abc+abd+acd+bc",
    "abc+abd+acd+ab+cd",
    "abc+abd+acd+bc+bd",
    "abc+abd+acd+bc+bd+cd",
    "abc+abd+acd+bcd+ab",
    "abc+abd+acd+bcd+ab+cd",
    "ab+ac+ad",
    "ab+ac+bd",
    "ab+ac+ad+bc",
    "ab+ac+bd+cd",
    "ab+ac+ad+bc+bd",
    "ab+ac+ad+bc+bd+cd",
];

/// The polynomial printed for a published label, if the label is pinned.
pub fn published_polynomial(label: ClassLabel) -> Option<LinkPolynomial> {
    let i = label.index as usize;
    let text = match label.rings {
        2 if i == 1 => "ab",
        3 if (1..=4).contains(&i) => THREE_RING_CLASSES[i - 1],
        4 if (1..=40).contains(&i) => FOUR_RING_CLASSES[i - 1],
        _ => return None,
    };
    Some(LinkPolynomial::parse(text).expect("published polynomials parse"))
}

fn pinned_labels(rings: usize) -> Option<Vec<LinkPolynomial>> {
    let list: &[&str] = match rings {
        2 => &["ab"],
        3 => &THREE_RING_CLASSES,
        4 => &FOUR_RING_CLASSES,
        _ => return None,
    };
    Some(
        list.iter()
            .map(|s| LinkPolynomial::parse(s).expect("published polynomials parse"))
            .collect(),
    )
}

/// What is left after cutting one ring: the classes of the surviving
/// components (sorted) and the number of rings set free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Outcome {
    pub classes: Vec<ClassLabel>,
    pub free: usize,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, "⊕")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Outcome {
    /// Parses `0` or `⊕`-joined labels; the free count is what remains of
    /// the `rings - 1` surviving rings.
    pub fn parse(text: &str, rings: usize) -> Result<Outcome> {
        let survivors = rings
            .checked_sub(1)
            .ok_or_else(|| Error::Catalog("ring count 0".into()))?;
        let mut classes = Vec::new();
        if text != "0" {
            for part in text.split('⊕') {
                classes.push(ClassLabel::from_str(part)?);
            }
        }
        classes.sort();
        let used: usize = classes.iter().map(|c| c.rings as usize).sum();
        let free = survivors.checked_sub(used).ok_or_else(|| {
            Error::Catalog(format!("outcome {text} uses more than {survivors} rings"))
        })?;
        if classes.iter().any(|c| c.rings as usize >= rings) {
            return Err(Error::Catalog(format!(
                "outcome {text} references a class with at least {rings} rings"
            )));
        }
        Ok(Outcome { classes, free })
    }
}

/// Single-ring cuts of a link: the outcome of each cut and their tally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutDiagram {
    pub rings: usize,
    pub per_ring: Vec<(RingVariable, Outcome)>,
    pub aggregated: BTreeMap<Outcome, usize>,
}

impl CutDiagram {
    fn from_per_ring(rings: usize, per_ring: Vec<(RingVariable, Outcome)>) -> Self {
        let mut aggregated = BTreeMap::new();
        for (_, o) in &per_ring {
            *aggregated.entry(o.clone()).or_insert(0) += 1;
        }
        CutDiagram {
            rings,
            per_ring,
            aggregated,
        }
    }

    /// Every cut leads to the same outcome.
    pub fn is_uniform(&self) -> bool {
        self.aggregated.len() == 1
    }

    /// `outcome:multiplicity` pairs joined by commas.
    pub fn serialize(&self) -> String {
        self.aggregated
            .iter()
            .map(|(o, k)| format!("{o}:{k}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_aggregated(text: &str, rings: usize) -> Result<BTreeMap<Outcome, usize>> {
        let mut out = BTreeMap::new();
        for pair in text.split(',') {
            let (o, k) = pair
                .rsplit_once(':')
                .ok_or_else(|| Error::Catalog(format!("cut outcome {pair:?} lacks ':'")))?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::Catalog(format!("bad multiplicity in {pair:?}")))?;
            if k == 0 {
                return Err(Error::Catalog(format!("zero multiplicity in {pair:?}")));
            }
            if out.insert(Outcome::parse(o, rings)?, k).is_some() {
                return Err(Error::Catalog(format!("duplicate outcome {o}")));
            }
        }
        let total = out.values().fold(0usize, |acc, &k| acc.saturating_add(k));
        if total != rings {
            return Err(Error::Catalog(format!(
                "multiplicities sum to {total}, expected {rings}"
            )));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: ClassLabel,
    pub polynomial: LinkPolynomial,
    pub diagram: CutDiagram,
}

/// Every connected reduced link class for one ring count, sorted by
/// canonical encoding.
#[derive(Clone, Debug)]
pub struct ClassCatalog {
    rings: usize,
    entries: Vec<CatalogEntry>,
    by_encoding: HashMap<Vec<u32>, usize>,
    by_label: HashMap<ClassLabel, usize>,
    relabelings: Relabelings,
}

impl PartialEq for ClassCatalog {
    fn eq(&self, other: &Self) -> bool {
        self.rings == other.rings && self.entries == other.entries
    }
}

impl ClassCatalog {
    fn from_entries(rings: usize, entries: Vec<CatalogEntry>) -> Self {
        let by_encoding = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.polynomial.encoding(), i))
            .collect();
        let by_label = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.label, i))
            .collect();
        ClassCatalog {
            rings,
            entries,
            by_encoding,
            by_label,
            relabelings: Relabelings::new(rings),
        }
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, label: ClassLabel) -> Option<&CatalogEntry> {
        self.by_label.get(&label).map(|&i| &self.entries[i])
    }

    pub fn lookup(&self, poly: &LinkPolynomial) -> Result<ClassLabel> {
        if poly.rings() != self.rings || !poly.is_link() {
            return Err(Error::NotInCatalog(poly.to_string()));
        }
        let reduced = poly.reduce();
        let key = self.relabelings.canonical_encoding(&reduced.encoding());
        self.by_encoding
            .get(&key)
            .map(|&i| self.entries[i].label)
            .ok_or_else(|| Error::NotInCatalog(poly.to_string()))
    }

    /// Labels whose cuts all lead to the same outcome, in label order.
    pub fn uniform_cut_classes(&self) -> Vec<ClassLabel> {
        let mut out: Vec<ClassLabel> = self
            .entries
            .iter()
            .filter(|e| e.diagram.is_uniform())
            .map(|e| e.label)
            .collect();
        out.sort();
        out
    }

    /// Text form: a version header, then one tab-separated record per class.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "# ringlink catalog v1 rings={} classes={}\n",
            self.rings,
            self.entries.len()
        );
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                e.label,
                e.polynomial,
                e.diagram.serialize()
            ));
        }
        out
    }

    /// Rebuilds a catalog from parsed records, recomputing every cut diagram
    /// against `lower` and rejecting records that disagree.
    pub fn from_file(file: CatalogFile, lower: &CatalogSet) -> Result<ClassCatalog> {
        let rings = file.rings;
        let mut entries = Vec::with_capacity(file.records.len());
        let mut labels = HashSet::new();
        let count = file.records.len();
        for rec in file.records {
            if rec.label.rings as usize != rings {
                return Err(Error::Catalog(format!("label {} in {rings}-ring catalog", rec.label)));
            }
            if rec.label.index == 0 || rec.label.index as usize > count {
                return Err(Error::Catalog(format!("label {} out of range", rec.label)));
            }
            if !labels.insert(rec.label) {
                return Err(Error::Catalog(format!("duplicate label {}", rec.label)));
            }
            if !rec.polynomial.is_link() || rec.polynomial.canonicalize() != rec.polynomial {
                return Err(Error::Catalog(format!(
                    "{} is not a canonical connected link",
                    rec.polynomial
                )));
            }
            let diagram = lower.cut_diagram(&rec.polynomial)?;
            if diagram.aggregated != rec.aggregated {
                return Err(Error::Catalog(format!(
                    "cut diagram for {} does not match its polynomial",
                    rec.label
                )));
            }
            entries.push(CatalogEntry {
                label: rec.label,
                polynomial: rec.polynomial,
                diagram,
            });
        }
        if entries
            .windows(2)
            .any(|w| w[0].polynomial.encoding() >= w[1].polynomial.encoding())
        {
            return Err(Error::Catalog("records not sorted by canonical encoding".into()));
        }
        Ok(ClassCatalog::from_entries(rings, entries))
    }
}

/// One parsed catalog line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRecord {
    pub label: ClassLabel,
    pub polynomial: LinkPolynomial,
    pub aggregated: BTreeMap<Outcome, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogFile {
    pub rings: usize,
    pub records: Vec<CatalogRecord>,
}

/// Parses the catalog text format without consulting other catalogs.
pub fn parse_catalog(text: &str) -> Result<CatalogFile> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Catalog("empty catalog".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 6 || fields[..4] != ["#", "ringlink", "catalog", "v1"] {
        return Err(Error::Catalog(format!("unrecognized header {header:?}")));
    }
    let rings: usize = fields[4]
        .strip_prefix("rings=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Catalog(format!("bad ring count in {header:?}")))?;
    let classes: usize = fields[5]
        .strip_prefix("classes=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Catalog(format!("bad class count in {header:?}")))?;
    if !(2..=MAX_CANONICAL_RINGS).contains(&rings) {
        return Err(Error::RingCountUnsupported(rings));
    }
    let mut records = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(Error::Catalog(format!(
                "line {}: expected 3 tab-separated fields",
                lineno + 2
            )));
        }
        records.push(CatalogRecord {
            label: cols[0].parse()?,
            polynomial: LinkPolynomial::parse_with_rings(cols[1], rings)?,
            aggregated: CutDiagram::parse_aggregated(cols[2], rings)?,
        });
    }
    if records.len() != classes {
        return Err(Error::Catalog(format!(
            "header announces {classes} classes, found {}",
            records.len()
        )));
    }
    Ok(CatalogFile { rings, records })
}

/// Catalogs for consecutive ring counts starting at 2.
#[derive(Clone, Debug, Default)]
pub struct CatalogSet {
    catalogs: BTreeMap<usize, ClassCatalog>,
}

const EMBEDDED: [(usize, &str); 3] = [
    (2, include_str!("../data/catalog-2.tsv")),
    (3, include_str!("../data/catalog-3.tsv")),
    (4, include_str!("../data/catalog-4.tsv")),
];

impl CatalogSet {
    pub fn new() -> Self {
        CatalogSet::default()
    }

    /// Enumerates catalogs for ring counts `2..=rings`.
    pub fn up_to(rings: usize) -> Result<Self> {
        let mut set = CatalogSet::new();
        set.extend_to(rings)?;
        Ok(set)
    }

    /// The shipped catalogs for 2, 3 and 4 rings.
    pub fn embedded() -> Self {
        let mut set = CatalogSet::new();
        for (rings, text) in EMBEDDED {
            let file = parse_catalog(text).expect("embedded catalog parses");
            let cat = ClassCatalog::from_file(file, &set).expect("embedded catalog is valid");
            set.insert(rings, cat);
        }
        set
    }

    pub fn extend_to(&mut self, rings: usize) -> Result<()> {
        if rings < 2 {
            return Err(Error::RingCountUnsupported(rings));
        }
        for n in 2..=rings {
            if !self.catalogs.contains_key(&n) {
                let cat = build_catalog(n, self)?;
                self.insert(n, cat);
            }
        }
        Ok(())
    }

    pub fn insert(&mut self, rings: usize, catalog: ClassCatalog) {
        self.catalogs.insert(rings, catalog);
    }

    pub fn get(&self, rings: usize) -> Result<&ClassCatalog> {
        self.catalogs
            .get(&rings)
            .ok_or(Error::CatalogMissing(rings))
    }

    pub fn max_rings(&self) -> usize {
        self.catalogs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn lookup(&self, poly: &LinkPolynomial) -> Result<ClassLabel> {
        self.get(poly.rings())?.lookup(poly)
    }

    pub fn entry(&self, label: ClassLabel) -> Option<&CatalogEntry> {
        self.catalogs.get(&(label.rings as usize))?.entry(label)
    }

    /// Classifies every single-ring cut of a connected link using the
    /// catalogs of smaller ring counts.
    pub fn cut_diagram(&self, poly: &LinkPolynomial) -> Result<CutDiagram> {
        let rings = poly.rings();
        let mut per_ring = Vec::with_capacity(rings);
        for v in (0..rings).map(RingVariable::new) {
            per_ring.push((v, self.cut_outcome(poly, v)?));
        }
        Ok(CutDiagram::from_per_ring(rings, per_ring))
    }

    pub fn cut_outcome(&self, poly: &LinkPolynomial, v: RingVariable) -> Result<Outcome> {
        let cut = poly.cut(v)?;
        let mut classes = Vec::with_capacity(cut.components.len());
        for comp in &cut.components {
            let (compact, _) = comp.compact();
            classes.push(self.get(compact.rings())?.lookup(&compact)?);
        }
        classes.sort();
        Ok(Outcome {
            classes,
            free: cut.free_count(),
        })
    }
}

/// Canonical encodings of every connected reduced link on `rings` rings,
/// sorted ascending.
pub fn enumerate_canonical(rings: usize) -> Result<Vec<Vec<u32>>> {
    if rings < 2 {
        return Err(Error::RingCountUnsupported(rings));
    }
    if rings > MAX_CANONICAL_RINGS.min(6) {
        // the monomial basis for 7 rings already has 2^120 subsets
        return Err(Error::RingCountUnsupported(rings));
    }
    let relabelings = Relabelings::new(rings);
    let full = (1u32 << rings) - 1;
    let mut pairs = Vec::new();
    let mut higher = Vec::new();
    for mask in 1..=full {
        match mask.count_ones() {
            2 => pairs.push(mask),
            k if k > 2 => higher.push(mask),
            _ => {}
        }
    }
    higher.sort_by_key(|m| (m.count_ones(), *m));

    let prefixes: Vec<Vec<u32>> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|bits| {
            let graph: Vec<u32> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            // graph is sorted because pairs is
            (relabelings.canonical_encoding(&graph) == graph).then_some(graph)
        })
        .collect();

    let found = prefixes
        .par_iter()
        .map(|prefix| {
            let mut search = Search {
                higher: &higher,
                full,
                relabelings: &relabelings,
                chosen: prefix.iter().map(|&m| Monomial::from_mask(m).unwrap()).collect(),
                found: HashSet::new(),
            };
            search.descend(0);
            search.found
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut out: Vec<Vec<u32>> = found.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

struct Search<'a> {
    higher: &'a [u32],
    full: u32,
    relabelings: &'a Relabelings,
    chosen: Vec<Monomial>,
    found: HashSet<Vec<u32>>,
}

impl Search<'_> {
    fn descend(&mut self, next: usize) {
        if next == self.higher.len() {
            if is_link(&self.chosen, self.full) {
                let masks: Vec<u32> = self.chosen.iter().map(|m| m.mask()).collect();
                self.found.insert(self.relabelings.canonical_encoding(&masks));
            }
            return;
        }
        self.descend(next + 1);
        let m = Monomial::from_mask(self.higher[next]).unwrap();
        if !is_redundant(m, &self.chosen) {
            self.chosen.push(m);
            self.descend(next + 1);
            self.chosen.pop();
        }
    }
}

/// Enumerates the catalog for `rings`, labeling published classes by their
/// published index and the rest by rank of canonical encoding. Cut diagrams
/// need catalogs for every smaller ring count in `lower`.
pub fn build_catalog(rings: usize, lower: &CatalogSet) -> Result<ClassCatalog> {
    let encodings = enumerate_canonical(rings)?;
    let relabelings = Relabelings::new(rings);
    let pinned: Option<HashMap<Vec<u32>, u32>> = pinned_labels(rings).map(|polys| {
        polys
            .iter()
            .enumerate()
            .map(|(i, p)| (relabelings.canonical_encoding(&p.reduce().encoding()), i as u32 + 1))
            .collect()
    });
    let mut entries = Vec::with_capacity(encodings.len());
    for (rank, enc) in encodings.iter().enumerate() {
        let polynomial = LinkPolynomial::from_sorted_masks(rings, enc);
        let index = match &pinned {
            Some(table) => *table.get(enc).ok_or_else(|| {
                Error::Catalog(format!("enumerated class {polynomial} has no published label"))
            })?,
            None => rank as u32 + 1,
        };
        let diagram = lower.cut_diagram(&polynomial)?;
        entries.push(CatalogEntry {
            label: ClassLabel::new(rings, index),
            polynomial,
            diagram,
        });
    }
    if let Some(table) = pinned {
        if table.len() != entries.len() {
            return Err(Error::Catalog(format!(
                "{} published classes but {} enumerated",
                table.len(),
                entries.len()
            )));
        }
    }
    Ok(ClassCatalog::from_entries(rings, entries))
}

/// Enumerates the catalog for `rings`, building smaller catalogs as needed.
pub fn enumerate_classes(rings: usize) -> Result<ClassCatalog> {
    Ok(CatalogSet::up_to(rings)?.get(rings)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_canonical(2).unwrap().len(), 1);
        assert_eq!(enumerate_canonical(3).unwrap().len(), 4);
        assert_eq!(enumerate_canonical(4).unwrap().len(), 40);
        assert!(matches!(
            enumerate_canonical(1),
            Err(Error::RingCountUnsupported(1))
        ));
    }

    #[test]
    fn lookup_examples() {
        let set = CatalogSet::up_to(4).unwrap();
        let p = |s: &str| LinkPolynomial::parse(s).unwrap();
        assert_eq!(set.get(3).unwrap().lookup(&p("abc+ab")).unwrap(), label("3^2"));
        assert_eq!(
            set.get(4).unwrap().lookup(&p("abcd+abc+abd+ac")).unwrap(),
            label("4^20")
        );
        let disconnected = LinkPolynomial::parse_with_rings("ab", 3).unwrap();
        assert!(matches!(
            set.get(3).unwrap().lookup(&disconnected),
            Err(Error::NotInCatalog(_))
        ));
        assert!(set.get(3).unwrap().lookup(&p("ab+cd")).is_err());
    }

    #[test]
    fn diagrams_of_three_ring_classes() {
        let set = CatalogSet::up_to(3).unwrap();
        let diag = |s: &str| {
            set.cut_diagram(&LinkPolynomial::parse(s).unwrap())
                .unwrap()
                .serialize()
        };
        assert_eq!(diag("ab+ac"), "0:1,2^1:2");
        assert_eq!(diag("abc"), "0:3");
        assert_eq!(diag("ab+ac+bc"), "2^1:3");
        assert!(CatalogSet::up_to(2)
            .unwrap()
            .cut_diagram(&LinkPolynomial::parse("abcd").unwrap())
            .is_ok());
        assert!(matches!(
            CatalogSet::up_to(2)
                .unwrap()
                .cut_diagram(&LinkPolynomial::parse("abcd+ab+ac").unwrap()),
            Err(Error::CatalogMissing(3))
        ));
    }

    #[test]
    fn per_ring_outcomes_of_chain() {
        let set = CatalogSet::up_to(3).unwrap();
        let d = set
            .cut_diagram(&LinkPolynomial::parse("ab+ac").unwrap())
            .unwrap();
        let zero = Outcome {
            classes: vec![],
            free: 2,
        };
        let hopf = Outcome {
            classes: vec![label("2^1")],
            free: 0,
        };
        assert_eq!(d.per_ring[0].1, zero);
        assert_eq!(d.per_ring[1].1, hopf);
        assert_eq!(d.per_ring[2].1, hopf);
    }

    #[test]
    fn uniform_sets() {
        let set = CatalogSet::up_to(4).unwrap();
        assert_eq!(
            set.get(3).unwrap().uniform_cut_classes(),
            vec![label("3^1"), label("3^4")]
        );
        let four: Vec<String> = set
            .get(4)
            .unwrap()
            .uniform_cut_classes()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(four, ["4^1", "4^6", "4^10", "4^34", "4^38", "4^40"]);
    }

    #[test]
    fn outcome_text() {
        let o = Outcome::parse("2^1⊕2^1", 5).unwrap();
        assert_eq!(o.free, 0);
        assert_eq!(o.to_string(), "2^1⊕2^1");
        assert_eq!(Outcome::parse("0", 4).unwrap().free, 3);
        assert!(Outcome::parse("4^1", 4).is_err());
        assert!(Outcome::parse("3^1⊕2^1", 4).is_err());
    }

    #[test]
    fn catalog_text_rejects_garbage() {
        assert!(parse_catalog("").is_err());
        assert!(parse_catalog("# ringlink catalog v2 rings=3\n").is_err());
        assert!(parse_catalog("# ringlink catalog v1 rings=3 classes=1\n3^1\tabc\n").is_err());
        assert!(parse_catalog("# ringlink catalog v1 rings=3 classes=1\n3^1\tabc\t0:2\n").is_err());
        assert!(parse_catalog("# ringlink catalog v1 rings=3 classes=2\n3^1\tabc\t0:3\n").is_err());
        assert!(parse_catalog("# ringlink catalog v1 rings=40 classes=0\n").is_err());
    }

    #[test]
    fn catalog_load_checks_diagrams() {
        let set = CatalogSet::up_to(2).unwrap();
        let good = "# ringlink catalog v1 rings=3 classes=1\n3^1\tabc\t0:3\n";
        assert!(ClassCatalog::from_file(parse_catalog(good).unwrap(), &set).is_ok());
        let wrong = "# ringlink catalog v1 rings=3 classes=1\n3^1\tab+ac\t0:3\n";
        assert!(ClassCatalog::from_file(parse_catalog(wrong).unwrap(), &set).is_err());
        let not_canonical = "# ringlink catalog v1 rings=3 classes=1\n3^3\tab+bc\t0:1,2^1:2\n";
        assert!(ClassCatalog::from_file(parse_catalog(not_canonical).unwrap(), &set).is_err());
    }
}
