use std::fmt;

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use super::shape::TensorShape;
use crate::error::{Error, Result};

/// A linear map between tensor-shaped spaces.
///
/// The matrix has `codomain.total()` rows and `domain.total()` columns;
/// column `j` is the image of the `j`-th basis tensor of the domain under
/// row-major flattening.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    domain: TensorShape,
    codomain: TensorShape,
    matrix: Matrix,
}

impl LinMap {
    pub fn new(domain: TensorShape, codomain: TensorShape, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != codomain.total() || matrix.cols() != domain.total() {
            return Err(Error::input(format!(
                "matrix is {}x{}, shapes {:?} -> {:?} need {}x{}",
                matrix.rows(),
                matrix.cols(),
                domain.factors(),
                codomain.factors(),
                codomain.total(),
                domain.total()
            )));
        }
        Ok(LinMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub(crate) fn from_parts(domain: TensorShape, codomain: TensorShape, matrix: Matrix) -> Self {
        LinMap::new(domain, codomain, matrix).expect("shape-consistent construction")
    }

    pub fn identity(field: Field, shape: &TensorShape) -> Self {
        LinMap::from_parts(
            shape.clone(),
            shape.clone(),
            Matrix::identity(field, shape.total()),
        )
    }

    pub fn zero(field: Field, domain: &TensorShape, codomain: &TensorShape) -> Self {
        LinMap::from_parts(
            domain.clone(),
            codomain.clone(),
            Matrix::zeros(field, codomain.total(), domain.total()),
        )
    }

    /// Builds a map from the images of the domain basis tensors.
    pub fn from_basis_images(
        field: Field,
        domain: &TensorShape,
        codomain: &TensorShape,
        mut image: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..domain.total())
            .map(|j| {
                let v = image(&domain.unflatten(j));
                assert_eq!(v.len(), codomain.total(), "image has wrong length");
                v
            })
            .collect();
        LinMap::from_parts(
            domain.clone(),
            codomain.clone(),
            Matrix::from_columns(field, codomain.total(), &cols),
        )
    }

    /// Builds a map from structure constants `coeff(out_index, in_index)`.
    pub fn from_coefficients(
        field: Field,
        domain: &TensorShape,
        codomain: &TensorShape,
        mut coeff: impl FnMut(&[usize], &[usize]) -> Scalar,
    ) -> Self {
        let m = Matrix::from_fn(field, codomain.total(), domain.total(), |i, j| {
            coeff(&codomain.unflatten(i), &domain.unflatten(j))
        });
        LinMap::from_parts(domain.clone(), codomain.clone(), m)
    }

    /// The map `k -> V` sending 1 to `v`.
    pub fn from_vector(field: Field, shape: &TensorShape, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), shape.total(), "vector length mismatch");
        LinMap::from_parts(
            TensorShape::scalar(),
            shape.clone(),
            Matrix::from_data(field, v.len(), 1, v.to_vec()),
        )
    }

    /// The functional `V -> k` with coefficients `w`.
    pub fn from_covector(field: Field, shape: &TensorShape, w: &[Scalar]) -> Self {
        assert_eq!(w.len(), shape.total(), "covector length mismatch");
        LinMap::from_parts(
            shape.clone(),
            TensorShape::scalar(),
            Matrix::from_data(field, 1, w.len(), w.to_vec()),
        )
    }

    /// Permutes tensor factors: factor `i` of the codomain is factor
    /// `perm[i]` of `domain`.
    pub fn permutation(field: Field, domain: &TensorShape, perm: &[usize]) -> Self {
        let f = domain.factors();
        assert_eq!(perm.len(), f.len(), "permutation length mismatch");
        let mut seen = vec![false; f.len()];
        for &p in perm {
            assert!(p < f.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let codomain = TensorShape::new(perm.iter().map(|&p| f[p]).collect());
        let mut m = Matrix::zeros(field, codomain.total(), domain.total());
        for j in 0..domain.total() {
            let idx = domain.unflatten(j);
            let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            m.set(codomain.flatten(&out), j, field.one());
        }
        LinMap::from_parts(domain.clone(), codomain, m)
    }

    /// `v ⊗ w ↦ w ⊗ v`.
    pub fn twist(field: Field, left: &TensorShape, right: &TensorShape) -> Self {
        let dom = left.concat(right);
        let (l, r) = (left.rank(), right.rank());
        let perm: Vec<usize> = (l..l + r).chain(0..l).collect();
        LinMap::permutation(field, &dom, &perm)
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn domain(&self) -> &TensorShape {
        &self.domain
    }

    pub fn codomain(&self) -> &TensorShape {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// Same matrix, different factorisation of domain and codomain.
    pub fn reshape(&self, domain: TensorShape, codomain: TensorShape) -> Self {
        assert_eq!(domain.total(), self.domain.total(), "domain total changes");
        assert_eq!(codomain.total(), self.codomain.total(), "codomain total changes");
        LinMap::from_parts(domain, codomain, self.matrix.clone())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> LinMap {
        assert_eq!(
            self.domain.total(),
            inner.codomain.total(),
            "cannot compose {:?} after {:?}",
            self.domain.factors(),
            inner.codomain.factors()
        );
        LinMap::from_parts(
            inner.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&inner.matrix),
        )
    }

    /// `self ∘ inner` with a shape-total check reported as an error.
    pub fn try_compose(&self, inner: &LinMap) -> Result<LinMap> {
        if self.domain.total() != inner.codomain.total() {
            return Err(Error::input(format!(
                "cannot compose: domain {:?} vs codomain {:?}",
                self.domain.factors(),
                inner.codomain.factors()
            )));
        }
        Ok(self.compose(inner))
    }

    /// `self ⊗ other`, acting factorwise on row-major flattened tensors.
    pub fn kron(&self, other: &LinMap) -> LinMap {
        LinMap::from_parts(
            self.domain.concat(&other.domain),
            self.codomain.concat(&other.codomain),
            self.matrix.kron(&other.matrix),
        )
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        self.check_same_totals(other);
        LinMap::from_parts(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        self.check_same_totals(other);
        LinMap::from_parts(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.sub(&other.matrix),
        )
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap::from_parts(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.scale(s),
        )
    }

    fn check_same_totals(&self, other: &LinMap) {
        assert_eq!(self.domain.total(), other.domain.total(), "domain mismatch");
        assert_eq!(self.codomain.total(), other.codomain.total(), "codomain mismatch");
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    /// Image of the basis tensor with multi-index `idx`.
    pub fn image_of(&self, idx: &[usize]) -> Vec<Scalar> {
        self.matrix.column(self.domain.flatten(idx))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Equality of the underlying linear maps (shape factorisations may differ).
    pub fn same_map(&self, other: &LinMap) -> bool {
        self.domain.total() == other.domain.total()
            && self.codomain.total() == other.codomain.total()
            && self.matrix == other.matrix
    }

    /// First domain basis index (row-major order) on which two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<Vec<usize>> {
        self.check_same_totals(other);
        (0..self.domain.total())
            .find(|&j| {
                (0..self.codomain.total())
                    .any(|i| self.matrix.get(i, j) != other.matrix.get(i, j))
            })
            .map(|j| self.domain.unflatten(j))
    }

    /// The matrix entries flattened row-major, i.e. the coordinates of the
    /// map in `Hom(V, W)`.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.matrix.data().to_vec()
    }

    pub fn from_vec(field: Field, domain: &TensorShape, codomain: &TensorShape, v: &[Scalar]) -> Self {
        LinMap::from_parts(
            domain.clone(),
            codomain.clone(),
            Matrix::from_data(field, codomain.total(), domain.total(), v.to_vec()),
        )
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinMap {:?} -> {:?} {:?}",
            self.domain.factors(),
            self.codomain.factors(),
            self.matrix
        )
    }
}

/// Identity on a flat space of dimension `n`.
pub fn id(field: Field, n: usize) -> LinMap {
    LinMap::identity(field, &TensorShape::flat(n))
}

/// The `i`-th standard basis vector of `k^n`.
pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Kronecker product of a list of maps, left to right.
pub fn tensor(maps: &[&LinMap]) -> LinMap {
    let mut it = maps.iter();
    let first = (*it.next().expect("at least one factor")).clone();
    it.fold(first, |acc, m| acc.kron(m))
}

/// Composition of a chain written outermost first: `chain(&[f, g, h]) = f∘g∘h`.
pub fn chain(maps: &[&LinMap]) -> LinMap {
    let mut it = maps.iter().rev();
    let first = (*it.next().expect("at least one map")).clone();
    it.fold(first, |acc, m| m.compose(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_map(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
        proptest::collection::vec(-3i64..4, rows * cols).prop_map(move |v| {
            let f = Field::Rationals;
            let data = v.into_iter().map(|x| f.from_i64(x)).collect();
            LinMap::from_parts(
                TensorShape::flat(cols),
                TensorShape::flat(rows),
                Matrix::from_data(f, rows, cols, data),
            )
        })
    }

    #[test]
    fn identity_tensor_identity() {
        let f = Field::Rationals;
        assert!(id(f, 2).kron(&id(f, 3)).same_map(&id(f, 6)));
    }

    #[test]
    fn unit_factor_is_neutral() {
        let f = Field::Rationals;
        let swap = LinMap::twist(f, &TensorShape::flat(1), &TensorShape::flat(1));
        assert!(swap.same_map(&id(f, 1)));
        let flip = LinMap::new(
            TensorShape::flat(2),
            TensorShape::flat(2),
            Matrix::from_rows(f, 2, vec![vec![f.zero(), f.one()], vec![f.one(), f.zero()]]),
        )
        .unwrap();
        assert!(flip.kron(&id(f, 1)).same_map(&flip));
    }

    #[test]
    fn twist_swaps_basis_tensors() {
        let f = Field::Rationals;
        let t = LinMap::twist(f, &TensorShape::flat(2), &TensorShape::flat(3));
        let img = t.image_of(&[1, 2]);
        let cod = TensorShape::new(vec![3, 2]);
        assert_eq!(img[cod.flatten(&[2, 1])], f.one());
        assert_eq!(img.iter().filter(|s| !s.is_zero()).count(), 1);
    }

    #[test]
    fn bad_shape_is_an_input_error() {
        let f = Field::Rationals;
        let e = LinMap::new(TensorShape::flat(2), TensorShape::flat(2), Matrix::zeros(f, 2, 3));
        assert!(matches!(e, Err(Error::Input(_))));
    }

    proptest! {
        #[test]
        fn kron_is_functorial(f in arb_map(2, 3), g in arb_map(2, 2), f2 in arb_map(3, 2), g2 in arb_map(2, 1)) {
            let lhs = f.kron(&g).compose(&f2.kron(&g2));
            let rhs = f.compose(&f2).kron(&g.compose(&g2));
            prop_assert!(lhs.same_map(&rhs));
        }

        #[test]
        fn kron_is_associative(a in arb_map(1, 2), b in arb_map(2, 2), c in arb_map(2, 1)) {
            let l = a.kron(&b).kron(&c);
            let r = a.kron(&b.kron(&c));
            prop_assert_eq!(l.domain(), r.domain());
            prop_assert!(l.same_map(&r));
        }
    }
}
