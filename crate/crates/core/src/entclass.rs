//! Classification of qubit density matrices into link classes.
//!
//! Every subset of two or more qubits is tested: its reduced state is either
//! genuinely entangled across all small bipartitions (the monomial is
//! present), certified separable across one of them (absent), or neither.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::enumerate::ClassCatalog;
use crate::error::{Error, Result};
use crate::linkpoly::{ClassLabel, LinkPolynomial, RingVariable};
use crate::qla::{CMatrix, CVector, DensityMatrix, StateVector, SubsystemShape, Tolerances};

/// Eigenvalues closer than this are grouped into one eigenspace when
/// certifying separability.
const DEGENERACY_GAP: f64 = 1e-7;

fn letters(mask: u32) -> String {
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| RingVariable::new(i).letter())
        .collect()
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Two-sided split of a qubit subset, in global qubit masks.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub side: u32,
    pub rest: u32,
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", letters(self.side), letters(self.rest))
    }
}

/// The 1-vs-rest and 2-vs-rest bipartitions of `subset`. When both halves
/// have equal size only the half holding the lowest qubit is listed.
pub fn bipartitions(subset: u32) -> Vec<Bipartition> {
    let members = indices(subset);
    let k = members.len();
    let mut out = Vec::new();
    for size in [1, 2] {
        if 2 * size > k {
            break;
        }
        let mut push = |side: u32| {
            if 2 * size < k || side & 1 << members[0] != 0 {
                out.push(Bipartition { side, rest: subset & !side });
            }
        };
        for (x, &i) in members.iter().enumerate() {
            if size == 1 {
                push(1 << i);
            } else {
                for &j in &members[x + 1..] {
                    push(1 << i | 1 << j);
                }
            }
        }
    }
    out
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CutTest {
    Npt,
    Ppt,
}

impl fmt::Display for CutTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutTest::Npt => "NPT",
            CutTest::Ppt => "PPT",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    CertifiedSeparable(Bipartition),
    Uncertified,
    NotAttempted,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    TermPresent,
    TermAbsent,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::TermPresent => "present",
            Verdict::TermAbsent => "absent",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetEvidence {
    /// Global qubit mask of the subset.
    pub subset: u32,
    pub bipartitions: Vec<(Bipartition, CutTest)>,
    pub certification: Certification,
    pub verdict: Verdict,
}

impl fmt::Display for SubsetEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subset={} bipartitions=", letters(self.subset))?;
        for (i, (cut, test)) in self.bipartitions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{cut}:{test}")?;
        }
        if let Certification::CertifiedSeparable(cut) = self.certification {
            write!(f, " certified={cut}")?;
        }
        write!(f, " verdict={}", self.verdict)
    }
}

/// Positions of the qubits of `part` inside the ordered subset `subset`.
fn local_part(subset: u32, part: u32) -> Vec<usize> {
    indices(subset)
        .iter()
        .enumerate()
        .filter(|(_, &q)| part >> q & 1 == 1)
        .map(|(pos, _)| pos)
        .collect()
}

/// True iff the partial transpose over `part` has an eigenvalue below
/// −`tol.neg`.
pub fn is_npt(rho: &DensityMatrix, part: &[usize], tol: &Tolerances) -> Result<bool> {
    let pt = rho.partial_transpose(part)?;
    Ok(pt.hermitian_eig(tol)?.min() < -tol.neg)
}

/// Real diagonal operator with distinct entries on the basis states of
/// `subsystems`, constant over the other subsystems.
fn local_diagonal(shape: &SubsystemShape, subsystems: &[usize]) -> CMatrix {
    let dims = shape.dims();
    let n = shape.total();
    let mut diag = CVector::zeros(n);
    for index in 0..n {
        let mut rem = index;
        let mut digits = vec![0; dims.len()];
        for (s, &d) in dims.iter().enumerate().rev() {
            digits[s] = rem % d;
            rem /= d;
        }
        let code = subsystems.iter().fold(0, |acc, &s| acc * dims[s] + digits[s]);
        diag[index] = ((2 + code) as f64).sqrt().into();
    }
    CMatrix::from_diagonal(&diag)
}

/// Splits spans of near-equal eigenvalues into separate column blocks.
fn eigen_groups(values: &[f64], vectors: &CMatrix, keep: impl Fn(f64) -> bool) -> Vec<CMatrix> {
    let kept: Vec<usize> = (0..values.len()).filter(|&i| keep(values[i])).collect();
    let mut groups = Vec::new();
    let mut start = 0;
    while start < kept.len() {
        let mut end = start + 1;
        while end < kept.len() && values[kept[end]] - values[kept[start]] < DEGENERACY_GAP {
            end += 1;
        }
        let cols: Vec<CVector> = kept[start..end]
            .iter()
            .map(|&i| vectors.column(i).into_owned())
            .collect();
        groups.push(CMatrix::from_columns(&cols));
        start = end;
    }
    groups
}

/// Rotates an orthonormal basis of a subspace so it diagonalizes each
/// operator in turn, restricted to the subspace.
fn refine(basis: CMatrix, ops: &[CMatrix], tol: &Tolerances) -> Result<Vec<CVector>> {
    if basis.ncols() == 1 || ops.is_empty() {
        return Ok(basis.column_iter().map(|c| c.into_owned()).collect());
    }
    let projected = basis.adjoint() * &ops[0] * &basis;
    let eig = crate::qla::hermitian_eig(&projected, tol)?;
    let mut out = Vec::new();
    for group in eigen_groups(&eig.values, &eig.vectors, |_| true) {
        out.extend(refine(&basis * group, &ops[1..], tol)?);
    }
    Ok(out)
}

fn is_product(vector: &CVector, shape: &SubsystemShape, side: &[usize], tol: &Tolerances) -> Result<bool> {
    let ket = StateVector::new(shape.clone(), vector.clone())?;
    let reduced = DensityMatrix::new_unchecked(ket.outer()).partial_trace(side)?;
    Ok(reduced.purity() >= 1.0 - tol.pure)
}

/// Tries to exhibit a decomposition of `rho` into product vectors across
/// `side | rest` by checking that every eigenvector with nonzero weight has
/// a pure reduced state on `side`. Inside a degenerate eigenspace the basis
/// is first aligned with generic diagonal operators local to either side.
pub fn certify_separable(rho: &DensityMatrix, side: &[usize], tol: &Tolerances) -> Result<bool> {
    let shape = rho.shape();
    let eig = rho.eigen(tol)?;
    let rest: Vec<usize> = (0..shape.len()).filter(|i| !side.contains(i)).collect();
    let ops_side = local_diagonal(shape, side);
    let ops_rest = local_diagonal(shape, &rest);
    let attempts: [Vec<CMatrix>; 3] = [
        vec![],
        vec![ops_side.clone(), ops_rest.clone()],
        vec![ops_rest, ops_side],
    ];
    for group in eigen_groups(&eig.values, &eig.vectors, |v| v >= tol.psd) {
        let mut certified = false;
        for ops in &attempts {
            let vectors = refine(group.clone(), ops, tol)?;
            if vectors
                .iter()
                .map(|v| is_product(v, shape, side, tol))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .all(|ok| ok)
            {
                certified = true;
                break;
            }
            if group.ncols() == 1 {
                break;
            }
        }
        if !certified {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evidence for the subset `subset` (global qubit mask) given its reduced
/// state `rho_s`, whose subsystems are the subset's qubits in order.
pub fn subset_verdict(rho_s: &DensityMatrix, subset: u32, tol: &Tolerances) -> Result<SubsetEvidence> {
    let k = subset.count_ones() as usize;
    if k < 2 || rho_s.shape().len() != k {
        return Err(Error::InvalidDensity(format!(
            "reduced state has {} subsystems for subset {}",
            rho_s.shape().len(),
            letters(subset)
        )));
    }
    let mut tests = Vec::new();
    for cut in bipartitions(subset) {
        let npt = is_npt(rho_s, &local_part(subset, cut.side), tol)?;
        tests.push((cut, if npt { CutTest::Npt } else { CutTest::Ppt }));
    }
    let all_npt = tests.iter().all(|(_, t)| *t == CutTest::Npt);
    let (certification, verdict) = if all_npt {
        (Certification::NotAttempted, Verdict::TermPresent)
    } else if k == 2 {
        (Certification::NotAttempted, Verdict::TermAbsent)
    } else {
        let mut found = None;
        for (cut, _) in tests.iter().filter(|(_, t)| *t == CutTest::Ppt) {
            if certify_separable(rho_s, &local_part(subset, cut.side), tol)? {
                found = Some(*cut);
                break;
            }
        }
        match found {
            Some(cut) => (Certification::CertifiedSeparable(cut), Verdict::TermAbsent),
            None => (Certification::Uncertified, Verdict::Inconclusive),
        }
    };
    Ok(SubsetEvidence {
        subset,
        bipartitions: tests,
        certification,
        verdict,
    })
}

/// Result of cutting one ring, reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutIdentity {
    pub ring: RingVariable,
    pub result: LinkPolynomial,
}

/// The reduced surviving polynomial for each single-ring cut.
pub fn cut_identities(poly: &LinkPolynomial) -> Vec<CutIdentity> {
    (0..poly.rings())
        .map(RingVariable::new)
        .map(|ring| CutIdentity {
            ring,
            result: poly.without(ring).reduce(),
        })
        .collect()
}

/// Distinct cut results as polynomial strings.
pub fn cut_identity_set(poly: &LinkPolynomial) -> BTreeSet<String> {
    cut_identities(poly)
        .into_iter()
        .map(|c| c.result.to_string())
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub qubits: usize,
    /// One entry per subset of size ≥ 2, by size then mask.
    pub evidence: Vec<SubsetEvidence>,
    pub polynomial: LinkPolynomial,
    /// `None` when the evidence does not support a definite class.
    pub label: Option<ClassLabel>,
    pub cuts: Vec<CutIdentity>,
}

impl ClassificationReport {
    pub fn is_inconclusive(&self) -> bool {
        self.label.is_none()
    }

    pub fn verdict(&self, subset: u32) -> Option<Verdict> {
        self.evidence
            .iter()
            .find(|e| e.subset == subset)
            .map(|e| e.verdict)
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.evidence {
            writeln!(f, "{e}")?;
        }
        writeln!(f, "polynomial={}", self.polynomial)?;
        match self.label {
            Some(label) => writeln!(f, "class={label}")?,
            None => writeln!(f, "class=inconclusive")?,
        }
        for c in &self.cuts {
            writeln!(f, "cut={} result={}", c.ring, c.result)?;
        }
        Ok(())
    }
}

/// Subsets of `0..n` with at least two members, by size then mask.
fn subsets(n: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() >= 2).collect();
    out.sort_by_key(|&m| (m.count_ones(), m));
    out
}

/// Runs the subset tests on `rho`, assembles and reduces the polynomial of
/// present terms, and looks it up in `catalog`.
pub fn classify(rho: &DensityMatrix, catalog: &ClassCatalog, tol: &Tolerances) -> Result<ClassificationReport> {
    let shape = rho.shape();
    let n = shape.len();
    if !shape.is_qubits() || n < 2 {
        return Err(Error::NotAQubitSystem(shape.dims().to_vec()));
    }
    if catalog.rings() != n {
        return Err(Error::RingCountMismatch {
            left: n,
            right: catalog.rings(),
        });
    }
    let full = (1u32 << n) - 1;
    let evidence = subsets(n)
        .into_par_iter()
        .map(|subset| {
            if subset == full {
                subset_verdict(rho, subset, tol)
            } else {
                subset_verdict(&rho.partial_trace(&indices(subset))?, subset, tol)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let present = evidence
        .iter()
        .filter(|e| e.verdict == Verdict::TermPresent)
        .map(|e| e.subset);
    let polynomial = LinkPolynomial::from_masks(n, present)?.reduce();
    let conclusive = evidence.iter().all(|e| e.verdict != Verdict::Inconclusive)
        && evidence.last().map(|e| e.verdict) == Some(Verdict::TermPresent);
    let label = if conclusive {
        catalog.lookup(&polynomial).ok()
    } else {
        None
    };
    let cuts = cut_identities(&polynomial);
    Ok(ClassificationReport {
        qubits: n,
        evidence,
        polynomial,
        label,
        cuts,
    })
}

/// Convenience for pure states.
pub fn classify_pure(psi: &StateVector, catalog: &ClassCatalog, tol: &Tolerances) -> Result<ClassificationReport> {
    classify(&psi.density()?, catalog, tol)
}

/// Relabels the qubits of `rho`: qubit `i` of the input becomes qubit
/// `perm[i]` of the output, matching [`LinkPolynomial::relabel`].
pub fn relabel_qubits(rho: &DensityMatrix, perm: &[usize]) -> Result<DensityMatrix> {
    let mut order = vec![usize::MAX; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        if p >= perm.len() || order[p] != usize::MAX {
            return Err(Error::InvalidDensity(format!("{perm:?} is not a permutation")));
        }
        order[p] = i;
    }
    rho.permute_subsystems(&order)
}
