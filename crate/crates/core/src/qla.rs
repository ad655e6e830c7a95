//! Dense complex linear algebra for small multipartite systems.
//!
//! Subsystems are indexed big-endian: subsystem 0 varies slowest, so a basis
//! ket `|abcd⟩` has index `a·8 + b·4 + c·2 + d` for four qubits.

use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Largest total Hilbert-space dimension accepted from files.
pub const MAX_DIMENSION: usize = 1024;

/// Numerical thresholds used throughout classification.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Tolerances {
    /// Largest accepted |M_ij − conj(M_ji)|.
    pub hermitian: f64,
    /// Largest accepted |tr ρ − 1|.
    pub trace: f64,
    /// Eigenvalues above −psd count as non-negative; eigenvalues below psd
    /// are treated as zero modes.
    pub psd: f64,
    /// Residual and orthonormality bound for eigenpairs.
    pub eig: f64,
    /// An eigenvalue is negative iff it is below −neg.
    pub neg: f64,
    /// A reduced state is pure iff its purity is at least 1 − pure.
    pub pure: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            hermitian: 1e-9,
            trace: 1e-9,
            psd: 1e-9,
            eig: 1e-8,
            neg: 1e-9,
            pure: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsystemShape {
    dims: Vec<usize>,
}

impl SubsystemShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidDensity("no subsystems".into()));
        }
        let mut total = 1usize;
        for &d in &dims {
            if d == 0 {
                return Err(Error::InvalidDensity("zero subsystem dimension".into()));
            }
            total = total
                .checked_mul(d)
                .filter(|&t| t <= MAX_DIMENSION)
                .ok_or_else(|| {
                    Error::InvalidDensity(format!("dimension exceeds {MAX_DIMENSION}"))
                })?;
        }
        Ok(SubsystemShape { dims })
    }

    pub fn qubits(n: usize) -> Self {
        SubsystemShape::new(vec![2; n]).expect("qubit count within limits")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_qubits(&self) -> bool {
        self.dims.iter().all(|&d| d == 2)
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for i in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        strides
    }

    fn concat(&self, other: &SubsystemShape) -> Result<SubsystemShape> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        SubsystemShape::new(dims)
    }

    /// Validates a subsystem index set; returns it sorted and deduplicated.
    fn check_indices(&self, indices: &[usize]) -> Result<Vec<usize>> {
        let mut out = indices.to_vec();
        out.sort_unstable();
        out.dedup();
        if let Some(&bad) = out.iter().find(|&&i| i >= self.dims.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                count: self.dims.len(),
            });
        }
        Ok(out)
    }

    /// Offsets contributed by `subsystems` for each combined index over
    /// those subsystems, enumerated big-endian.
    fn offsets(&self, subsystems: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let mut out = vec![0usize];
        for &s in subsystems {
            let mut next = Vec::with_capacity(out.len() * self.dims[s]);
            for &base in &out {
                for digit in 0..self.dims[s] {
                    next.push(base + digit * strides[s]);
                }
            }
            out = next;
        }
        out
    }
}

/// A ket over a subsystem shape; not necessarily normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    shape: SubsystemShape,
    amplitudes: CVector,
}

impl StateVector {
    pub fn new(shape: SubsystemShape, amplitudes: CVector) -> Result<Self> {
        if amplitudes.len() != shape.total() {
            return Err(Error::InvalidDensity(format!(
                "{} amplitudes for dimension {}",
                amplitudes.len(),
                shape.total()
            )));
        }
        if amplitudes.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidDensity("non-finite amplitude".into()));
        }
        Ok(StateVector { shape, amplitudes })
    }

    pub fn from_real(shape: SubsystemShape, amplitudes: &[f64]) -> Result<Self> {
        let amps = CVector::from_iterator(amplitudes.len(), amplitudes.iter().map(|&a| C64::new(a, 0.0)));
        StateVector::new(shape, amps)
    }

    /// Computational basis ket with the given digit per subsystem.
    pub fn basis(shape: SubsystemShape, digits: &[usize]) -> Result<Self> {
        if digits.len() != shape.len() || digits.iter().zip(shape.dims()).any(|(d, n)| d >= n) {
            return Err(Error::InvalidDensity(format!("basis digits {digits:?} do not fit {:?}", shape.dims())));
        }
        let index = digits
            .iter()
            .zip(shape.strides())
            .map(|(d, s)| d * s)
            .sum::<usize>();
        let mut amps = CVector::zeros(shape.total());
        amps[index] = C64::new(1.0, 0.0);
        Ok(StateVector { shape, amplitudes: amps })
    }

    pub fn shape(&self) -> &SubsystemShape {
        &self.shape
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        Ok(StateVector {
            shape: self.shape.concat(&other.shape)?,
            amplitudes: self.amplitudes.kronecker(&other.amplitudes),
        })
    }

    pub fn scaled(&self, factor: f64) -> StateVector {
        StateVector {
            shape: self.shape.clone(),
            amplitudes: self.amplitudes.scale(factor),
        }
    }

    /// `|ψ⟩⟨ψ|` without normalization.
    pub fn outer(&self) -> Operator {
        Operator {
            shape: self.shape.clone(),
            matrix: &self.amplitudes * self.amplitudes.adjoint(),
        }
    }

    /// The normalized pure density `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn density(&self) -> Result<DensityMatrix> {
        let norm = self.norm_squared();
        if norm == 0.0 {
            return Err(Error::InvalidDensity("zero state vector".into()));
        }
        Ok(DensityMatrix(self.outer().scaled(1.0 / norm)))
    }
}

/// A square matrix acting on a subsystem shape.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    shape: SubsystemShape,
    matrix: CMatrix,
}

impl Operator {
    pub fn new(shape: SubsystemShape, matrix: CMatrix) -> Result<Self> {
        let n = shape.total();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::InvalidDensity(format!(
                "{}x{} matrix for dimension {n}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidDensity("non-finite entry".into()));
        }
        Ok(Operator { shape, matrix })
    }

    pub fn identity(shape: SubsystemShape) -> Self {
        let n = shape.total();
        Operator {
            shape,
            matrix: CMatrix::identity(n, n),
        }
    }

    pub fn shape(&self) -> &SubsystemShape {
        &self.shape
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    pub fn scaled(&self, factor: f64) -> Operator {
        Operator {
            shape: self.shape.clone(),
            matrix: self.matrix.scale(factor),
        }
    }

    pub fn tensor(&self, other: &Operator) -> Result<Operator> {
        Ok(Operator {
            shape: self.shape.concat(&other.shape)?,
            matrix: self.matrix.kronecker(&other.matrix),
        })
    }

    /// Largest |M_ij − conj(M_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let m = &self.matrix;
        let n = m.nrows();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Traces out every subsystem not in `keep`; kept subsystems stay in
    /// their original order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Operator> {
        let keep = self.shape.check_indices(keep)?;
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let traced: Vec<usize> = (0..self.shape.len()).filter(|i| !keep.contains(i)).collect();
        let kept_offsets = self.shape.offsets(&keep);
        let traced_offsets = self.shape.offsets(&traced);
        let k = kept_offsets.len();
        let mut out = CMatrix::zeros(k, k);
        for (r, &row) in kept_offsets.iter().enumerate() {
            for (c, &col) in kept_offsets.iter().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for &t in &traced_offsets {
                    acc += self.matrix[(row + t, col + t)];
                }
                out[(r, c)] = acc;
            }
        }
        let shape = SubsystemShape::new(keep.iter().map(|&i| self.shape.dims[i]).collect())?;
        Ok(Operator { shape, matrix: out })
    }

    /// Transposes the indices of the subsystems in `part`.
    pub fn partial_transpose(&self, part: &[usize]) -> Result<Operator> {
        let part = self.shape.check_indices(part)?;
        if part.is_empty() || part.len() == self.shape.len() {
            return Err(Error::FullOrEmptyPart);
        }
        let n = self.shape.total();
        // component of each full index that lives on `part`
        let mut part_component = vec![0usize; n];
        let strides = self.shape.strides();
        for (i, slot) in part_component.iter_mut().enumerate() {
            *slot = part
                .iter()
                .map(|&s| (i / strides[s]) % self.shape.dims[s] * strides[s])
                .sum();
        }
        let mut out = CMatrix::zeros(n, n);
        for (i, &ip) in part_component.iter().enumerate() {
            let ir = i - ip;
            for (j, &jp) in part_component.iter().enumerate() {
                let jr = j - jp;
                out[(ir + jp, jr + ip)] = self.matrix[(i, j)];
            }
        }
        Ok(Operator {
            shape: self.shape.clone(),
            matrix: out,
        })
    }

    /// Reorders subsystems: new subsystem `k` is old subsystem `order[k]`.
    pub fn permute_subsystems(&self, order: &[usize]) -> Result<Operator> {
        let len = self.shape.len();
        let checked = self.shape.check_indices(order)?;
        if order.len() != len || checked.len() != len {
            return Err(Error::InvalidDensity(format!("{order:?} is not a subsystem permutation")));
        }
        let dims: Vec<usize> = order.iter().map(|&o| self.shape.dims[o]).collect();
        let new_shape = SubsystemShape::new(dims)?;
        // offset in the old layout of each new-layout index
        let old_offsets = self.shape.offsets(order);
        let n = self.shape.total();
        let mut out = CMatrix::zeros(n, n);
        for (i, &oi) in old_offsets.iter().enumerate() {
            for (j, &oj) in old_offsets.iter().enumerate() {
                out[(i, j)] = self.matrix[(oi, oj)];
            }
        }
        Ok(Operator {
            shape: new_shape,
            matrix: out,
        })
    }

    pub fn hermitian_eig(&self, tol: &Tolerances) -> Result<Eigen> {
        hermitian_eig(&self.matrix, tol)
    }
}

/// Eigenvalues ascending with matching orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl Eigen {
    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    pub fn vector(&self, i: usize) -> CVector {
        self.vectors.column(i).into_owned()
    }
}

pub fn hermitian_eig(m: &CMatrix, tol: &Tolerances) -> Result<Eigen> {
    assert!(m.is_square(), "eigendecomposition of a non-square matrix");
    let defect = (m - m.adjoint()).iter().fold(0.0f64, |acc, z| acc.max(z.norm()));
    if defect > tol.hermitian {
        return Err(Error::NotHermitian(defect));
    }
    let sym = (m + m.adjoint()).scale(0.5);
    let eig = nalgebra::linalg::SymmetricEigen::new(sym.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_columns(
        &order
            .iter()
            .map(|&i| eig.eigenvectors.column(i).into_owned())
            .collect::<Vec<_>>(),
    );
    let scale = eig.eigenvalues.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let residual = (&sym * &vectors - &vectors * CMatrix::from_diagonal(&CVector::from_iterator(
        order.len(),
        order.iter().map(|&i| C64::from(eig.eigenvalues[i])),
    )))
    .iter()
    .fold(0.0f64, |acc, z| acc.max(z.norm()));
    if residual > tol.eig * scale {
        return Err(Error::InvalidDensity(format!("eigensolver residual {residual:.3e}")));
    }
    Ok(Eigen { values, vectors })
}

/// A Hermitian, unit-trace, positive semidefinite operator.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix(Operator);

impl DensityMatrix {
    pub fn new(op: Operator, tol: &Tolerances) -> Result<Self> {
        let defect = op.hermiticity_defect();
        if defect > tol.hermitian {
            return Err(Error::NotHermitian(defect));
        }
        let tr = op.trace();
        if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
            return Err(Error::InvalidDensity(format!("trace {tr} is not 1")));
        }
        let min = op.hermitian_eig(tol)?.min();
        if min < -tol.psd {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(DensityMatrix(op))
    }

    /// Wraps an operator without validation.
    pub fn new_unchecked(op: Operator) -> Self {
        DensityMatrix(op)
    }

    /// Rescales a nonzero operator to unit trace and validates it.
    pub fn normalized(op: Operator, tol: &Tolerances) -> Result<Self> {
        let tr = op.trace().re;
        if tr <= 0.0 {
            return Err(Error::InvalidDensity(format!("trace {tr} cannot be normalized")));
        }
        DensityMatrix::new(op.scaled(1.0 / tr), tol)
    }

    pub fn maximally_mixed(shape: SubsystemShape) -> Self {
        let n = shape.total() as f64;
        DensityMatrix(Operator::identity(shape).scaled(1.0 / n))
    }

    pub fn operator(&self) -> &Operator {
        &self.0
    }

    pub fn shape(&self) -> &SubsystemShape {
        &self.0.shape
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0.matrix
    }

    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        Ok(DensityMatrix(self.0.partial_trace(keep)?))
    }

    pub fn partial_transpose(&self, part: &[usize]) -> Result<Operator> {
        self.0.partial_transpose(part)
    }

    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        Ok(DensityMatrix(self.0.tensor(&other.0)?))
    }

    pub fn permute_subsystems(&self, order: &[usize]) -> Result<DensityMatrix> {
        Ok(DensityMatrix(self.0.permute_subsystems(order)?))
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.0.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn eigen(&self, tol: &Tolerances) -> Result<Eigen> {
        self.0.hermitian_eig(tol)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    dims: Vec<usize>,
    matrix: Vec<Vec<[f64; 2]>>,
}

/// Parses the JSON matrix format `{"dims": [...], "matrix": [[[re, im], ...], ...]}`.
/// Unless `raw` is set the result must be a valid density matrix within `tol`.
pub fn parse_matrix_file(text: &str, raw: bool, tol: &Tolerances) -> Result<DensityMatrix> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.column(), format!("matrix file: {e}")))?;
    let shape = SubsystemShape::new(file.dims)?;
    let n = shape.total();
    if file.matrix.len() != n || file.matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidDensity(format!("matrix is not {n}x{n}")));
    }
    let matrix = CMatrix::from_fn(n, n, |i, j| {
        let [re, im] = file.matrix[i][j];
        C64::new(re, im)
    });
    let op = Operator::new(shape, matrix)?;
    if raw {
        Ok(DensityMatrix::new_unchecked(op))
    } else {
        DensityMatrix::new(op, tol)
    }
}

/// Writes the JSON matrix format, one matrix row per line.
pub fn write_matrix_file(op: &Operator) -> String {
    let mut out = String::new();
    let dims: Vec<String> = op.shape.dims.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "{{\"dims\": [{}],", dims.join(", "));
    out.push_str(" \"matrix\": [\n");
    let n = op.matrix.nrows();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                let z = op.matrix[(i, j)];
                format!("[{}, {}]", fmt_f64(z.re), fmt_f64(z.im))
            })
            .collect();
        let _ = write!(out, "  [{}]", row.join(", "));
        out.push_str(if i + 1 < n { ",\n" } else { "\n" });
    }
    out.push_str(" ]}\n");
    out
}

fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn bell() -> DensityMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        StateVector::from_real(SubsystemShape::qubits(2), &[h, 0.0, 0.0, h])
            .unwrap()
            .density()
            .unwrap()
    }

    #[test]
    fn tensor_of_basis_kets() {
        let q = SubsystemShape::qubits(1);
        let zero = StateVector::basis(q.clone(), &[0]).unwrap();
        let one = StateVector::basis(q, &[1]).unwrap();
        let k = zero.tensor(&one).unwrap();
        assert_eq!(k.shape().dims(), &[2, 2]);
        let amps: Vec<f64> = k.amplitudes().iter().map(|z| z.re).collect();
        assert_eq!(amps, vec![0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn tensor_of_mixed_qubits() {
        let half = DensityMatrix::maximally_mixed(SubsystemShape::qubits(1));
        let both = half.tensor(&half).unwrap();
        assert_abs_diff_eq!(
            (both.matrix() - CMatrix::identity(4, 4).scale(0.25)).norm(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let m = bell().partial_trace(&[1]).unwrap();
        assert_abs_diff_eq!(m.matrix()[(0, 0)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(m.matrix()[(1, 1)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(m.matrix()[(0, 1)].norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.purity(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let tol = Tolerances::default();
        let pt = bell().partial_transpose(&[0]).unwrap();
        let eig = pt.hermitian_eig(&tol).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (got, want) in eig.values.iter().zip(expected) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn index_errors() {
        let b = bell();
        assert!(matches!(b.partial_trace(&[]), Err(Error::EmptyKeepSet)));
        assert!(matches!(
            b.partial_trace(&[2]),
            Err(Error::IndexOutOfRange { index: 2, count: 2 })
        ));
        assert!(matches!(b.partial_transpose(&[0, 1]), Err(Error::FullOrEmptyPart)));
        assert!(matches!(b.partial_transpose(&[]), Err(Error::FullOrEmptyPart)));
    }

    #[test]
    fn eig_of_identity_and_reconstruction() {
        let tol = Tolerances::default();
        let eig = hermitian_eig(&CMatrix::identity(4, 4), &tol).unwrap();
        assert!(eig.values.iter().all(|&v| (v - 1.0).abs() < 1e-15));

        let m = CMatrix::from_row_slice(
            3,
            3,
            &[c(2.0), C64::new(0.0, 1.0), c(0.5), C64::new(0.0, -1.0), c(1.0), c(0.0), c(0.5), c(0.0), c(-1.0)],
        );
        let eig = hermitian_eig(&m, &tol).unwrap();
        let mut rebuilt = CMatrix::zeros(3, 3);
        for (i, &l) in eig.values.iter().enumerate() {
            let v = eig.vector(i);
            rebuilt += (&v * v.adjoint()).scale(l);
            assert!((&m * &v - v.scale(l)).norm() < tol.eig);
        }
        assert!((rebuilt - &m).norm() < tol.eig);
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        let gram = eig.vectors.adjoint() * &eig.vectors;
        assert!((gram - CMatrix::identity(3, 3)).norm() < tol.eig);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0), c(1.0), c(0.0), c(1.0)]);
        assert!(matches!(
            hermitian_eig(&m, &Tolerances::default()),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn purity_of_pure_state() {
        assert_abs_diff_eq!(bell().purity(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn permute_swaps_qubits() {
        let q = SubsystemShape::qubits(1);
        let ket = StateVector::basis(q.clone(), &[0])
            .unwrap()
            .tensor(&StateVector::basis(q, &[1]).unwrap())
            .unwrap();
        let swapped = ket.outer().permute_subsystems(&[1, 0]).unwrap();
        assert_eq!(swapped.matrix()[(2, 2)], c(1.0));
        assert!(ket.outer().permute_subsystems(&[0, 0]).is_err());
    }

    #[test]
    fn matrix_file_round_trip() {
        let tol = Tolerances::default();
        let text = write_matrix_file(bell().operator());
        let back = parse_matrix_file(&text, false, &tol).unwrap();
        assert_eq!(&back, &bell());
    }

    #[test]
    fn matrix_file_validation() {
        let tol = Tolerances::default();
        let non_unit = r#"{"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#;
        assert!(matches!(
            parse_matrix_file(non_unit, false, &tol),
            Err(Error::InvalidDensity(_))
        ));
        assert!(parse_matrix_file(non_unit, true, &tol).is_ok());
        let non_herm = r#"{"dims":[2],"matrix":[[[0.5,0],[0.3,0]],[[0,0],[0.5,0]]]}"#;
        assert!(matches!(
            parse_matrix_file(non_herm, false, &tol),
            Err(Error::NotHermitian(_))
        ));
        let ragged = r#"{"dims":[2],"matrix":[[[0.5,0]],[[0,0],[0.5,0]]]}"#;
        assert!(parse_matrix_file(ragged, true, &tol).is_err());
        let huge = r#"{"dims":[4096,4096],"matrix":[]}"#;
        assert!(parse_matrix_file(huge, true, &tol).is_err());
        assert!(parse_matrix_file("{", true, &tol).is_err());
    }
}
