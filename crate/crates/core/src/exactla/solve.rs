use std::collections::HashSet;

use super::field::{Field, Scalar};
use super::linmap::LinMap;
use super::matrix::{kernel_from_echelon, Matrix};
use super::shape::TensorShape;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Solutions of `M x = b`: an optional particular solution plus the kernel.
///
/// The particular solution sets every free variable to zero, so it is a
/// deterministic function of the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub particular: Option<Vec<Scalar>>,
    pub homogeneous: Subspace,
}

impl AffineSolutionSet {
    pub fn is_feasible(&self) -> bool {
        self.particular.is_some()
    }

    pub fn field(&self) -> Field {
        self.homogeneous.field()
    }

    /// Number of unknowns.
    pub fn unknowns(&self) -> usize {
        self.homogeneous.ambient().total()
    }

    pub fn dim(&self) -> usize {
        self.homogeneous.dim()
    }

    /// `particular + Σ coeffs[i] · basis[i]`; `None` when infeasible.
    pub fn member(&self, coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        let mut v = self.particular.clone()?;
        for (c, row) in coeffs.iter().zip(self.homogeneous.basis()) {
            for (x, r) in v.iter_mut().zip(&row) {
                x.add_mul(c, r);
            }
        }
        Some(v)
    }

    /// True when `v` solves the affine system.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        match &self.particular {
            None => false,
            Some(p) => {
                let diff: Vec<Scalar> = v.iter().zip(p).map(|(a, b)| a - b).collect();
                self.homogeneous.contains(&diff)
            }
        }
    }
}

/// Solves `M x = b` exactly.
pub fn solve_affine(m: &LinMap, b: &[Scalar]) -> Result<AffineSolutionSet> {
    if b.len() != m.matrix().rows() {
        return Err(Error::input(format!(
            "right-hand side has length {} but the map has {} rows",
            b.len(),
            m.matrix().rows()
        )));
    }
    Ok(solve_matrix(m.matrix(), b))
}

pub(crate) fn solve_matrix(m: &Matrix, b: &[Scalar]) -> AffineSolutionSet {
    let field = m.field();
    let n = m.cols();
    let aug = m.hstack(&Matrix::from_columns(field, m.rows(), &[b.to_vec()]));
    let ech = aug.echelon();
    let ambient = TensorShape::flat(n);
    let consistent = ech.pivots.last() != Some(&n);
    let particular = consistent.then(|| {
        let mut x = vec![field.zero(); n];
        for (i, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced.get(i, n).clone();
        }
        x
    });
    let pivots: Vec<usize> = ech.pivots.iter().copied().filter(|&p| p < n).collect();
    let coeff = ech
        .reduced
        .select_rows(&(0..pivots.len()).collect::<Vec<_>>())
        .select_cols(&(0..n).collect::<Vec<_>>());
    let kernel = kernel_from_echelon(
        &super::matrix::Echelon {
            reduced: coeff,
            pivots,
        },
        n,
    );
    AffineSolutionSet {
        particular,
        homogeneous: Subspace::span(field, &ambient, &kernel),
    }
}

/// Kernel (in the domain) and image (in the codomain) of `m`.
pub fn kernel_image(m: &LinMap) -> (Subspace, Subspace) {
    let field = m.field();
    let ech = m.matrix().echelon();
    let kernel = Subspace::span(field, m.domain(), &kernel_from_echelon(&ech, m.matrix().cols()));
    let image = Subspace::from_columns(m.codomain(), m.matrix());
    (kernel, image)
}

/// Accumulates linear constraints on an unknown vector of fixed length.
///
/// Constraints are stored as rows; zero and repeated rows are dropped on
/// insertion, which keeps probed systems (often highly redundant) small.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: Field,
    unknowns: usize,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
    seen: HashSet<(Vec<Scalar>, Scalar)>,
}

impl LinearSystem {
    pub fn new(field: Field, unknowns: usize) -> Self {
        LinearSystem {
            field,
            unknowns,
            rows: Vec::new(),
            rhs: Vec::new(),
            seen: HashSet::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn push_row(&mut self, row: Vec<Scalar>, rhs: Scalar) {
        assert_eq!(row.len(), self.unknowns, "constraint length mismatch");
        if row.iter().all(Scalar::is_zero) {
            if !rhs.is_zero() {
                // keep one unsatisfiable row so infeasibility survives
                let key = (row.clone(), self.field.one());
                if self.seen.insert(key) {
                    self.rows.push(row);
                    self.rhs.push(self.field.one());
                }
            }
            return;
        }
        if self.seen.insert((row.clone(), rhs.clone())) {
            self.rows.push(row);
            self.rhs.push(rhs);
        }
    }

    /// Adds `m x = 0`.
    pub fn push_homogeneous(&mut self, m: &Matrix) {
        assert_eq!(m.cols(), self.unknowns, "constraint width mismatch");
        for i in 0..m.rows() {
            self.push_row(m.row(i).to_vec(), self.field.zero());
        }
    }

    /// Adds `m x = b`.
    pub fn push_affine(&mut self, m: &Matrix, b: &[Scalar]) {
        assert_eq!(m.cols(), self.unknowns, "constraint width mismatch");
        assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
        for i in 0..m.rows() {
            self.push_row(m.row(i).to_vec(), b[i].clone());
        }
    }

    pub fn solve(&self) -> AffineSolutionSet {
        let m = Matrix::from_rows(self.field, self.unknowns, self.rows.clone());
        solve_matrix(&m, &self.rhs)
    }
}

/// Matrix of a linear functional of an unknown map.
///
/// The unknown is an `X: domain -> codomain`, vectorised row-major (index
/// `r * cols + c` for entry `(r, c)`). `f` must be linear in `X`; column `k`
/// of the result is the flattened `f(E_k)` for the unit map `E_k`.
pub fn probe(
    field: Field,
    domain: &TensorShape,
    codomain: &TensorShape,
    f: impl Fn(&LinMap) -> LinMap,
) -> Matrix {
    let n = domain.total() * codomain.total();
    let mut columns = Vec::with_capacity(n);
    for k in 0..n {
        let mut unit = vec![field.zero(); n];
        unit[k] = field.one();
        let e = LinMap::from_vec(field, domain, codomain, &unit);
        columns.push(f(&e).to_vec());
    }
    let rows = columns.first().map_or(0, Vec::len);
    Matrix::from_columns(field, rows, &columns)
}
