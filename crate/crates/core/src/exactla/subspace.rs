use super::field::{Field, Scalar};
use super::linmap::LinMap;
use super::matrix::Matrix;
use super::shape::TensorShape;
use crate::error::{Error, Result};

/// A subspace of a tensor-shaped space, stored by its canonical basis: the
/// nonzero rows of a reduced row echelon form.
///
/// Coordinates of a member are read off at the pivot columns, which makes
/// [`Subspace::coordinates`] a left inverse of [`Subspace::inclusion`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: TensorShape,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: &TensorShape, vectors: &[Vec<Scalar>]) -> Self {
        let n = ambient.total();
        let rows: Vec<Vec<Scalar>> = vectors
            .iter()
            .filter(|v| {
                assert_eq!(v.len(), n, "vector not in ambient space");
                v.iter().any(|s| !s.is_zero())
            })
            .cloned()
            .collect();
        let m = Matrix::from_rows(field, n, rows);
        Subspace::from_rows(ambient, &m)
    }

    /// Row space of `m`.
    pub fn from_rows(ambient: &TensorShape, m: &Matrix) -> Self {
        assert_eq!(m.cols(), ambient.total(), "row length mismatch");
        let ech = m.echelon();
        Subspace {
            ambient: ambient.clone(),
            basis: ech.reduced,
            pivots: ech.pivots,
        }
    }

    /// Column space of `m`.
    pub fn from_columns(ambient: &TensorShape, m: &Matrix) -> Self {
        Subspace::from_rows(ambient, &m.transpose())
    }

    pub fn zero(field: Field, ambient: &TensorShape) -> Self {
        Subspace {
            ambient: ambient.clone(),
            basis: Matrix::zeros(field, 0, ambient.total()),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: &TensorShape) -> Self {
        Subspace::from_rows(ambient, &Matrix::identity(field, ambient.total()))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> &TensorShape {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as rows, in canonical echelon form.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Re-derives the canonical form; a no-op on canonical input.
    pub fn canonicalize(&self) -> Self {
        Subspace::from_rows(&self.ambient, &self.basis)
    }

    /// `k^dim -> ambient`, sending coordinates to the member they describe.
    pub fn inclusion(&self) -> LinMap {
        LinMap::from_parts(
            TensorShape::flat(self.dim()),
            self.ambient.clone(),
            self.basis.transpose(),
        )
    }

    /// `ambient -> k^dim`, reading pivot coordinates. Exact on members;
    /// arbitrary (but linear) elsewhere.
    pub fn coordinates(&self) -> LinMap {
        let field = self.field();
        let n = self.ambient.total();
        let mut m = Matrix::zeros(field, self.dim(), n);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, field.one());
        }
        LinMap::from_parts(
            self.ambient.clone(),
            TensorShape::flat(self.dim()),
            m,
        )
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates of `v` if it lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient.total(), "vector not in ambient space");
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.inclusion().apply(&c);
        (back.as_slice() == v).then_some(c)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient.total(), other.ambient.total(), "ambient mismatch");
        Subspace::from_rows(&self.ambient, &self.basis.vstack(&other.basis))
    }

    /// Columns of `f` restricted to this subspace must land in `target`;
    /// returns the restricted map in coordinates.
    pub fn restrict(&self, f: &LinMap, target: &Subspace) -> Result<LinMap> {
        let img = f.compose(&self.inclusion());
        for j in 0..self.dim() {
            let col = img.matrix().column(j);
            if !target.contains(&col) {
                return Err(Error::Inconsistency(format!(
                    "map does not send basis vector {j} of the subspace into the target"
                )));
            }
        }
        Ok(target.coordinates().compose(&img))
    }

    /// Complementary coordinates: the non-pivot columns.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient.total()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient.total()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Embeds a subspace of `V` as the subspace `S ⊗ U` of `V ⊗ U`.
    pub fn tensor_right(&self, right: &TensorShape) -> Subspace {
        let f = self.field();
        let id = LinMap::identity(f, right);
        Subspace::from_columns(
            &self.ambient.concat(right),
            self.inclusion().kron(&id).matrix(),
        )
    }
}

/// A quotient `V / W` with the complement basis given by the non-pivot
/// columns of `W`'s echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quotient {
    kernel: Subspace,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(kernel: Subspace) -> Self {
        let free = kernel.free_columns();
        Quotient { kernel, free }
    }

    pub fn field(&self) -> Field {
        self.kernel.field()
    }

    pub fn ambient(&self) -> &TensorShape {
        self.kernel.ambient()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    fn coord_shape(&self) -> TensorShape {
        TensorShape::flat(self.dim())
    }

    /// `V -> V/W`: eliminate pivot coordinates, keep the free ones.
    pub fn projection(&self) -> LinMap {
        let field = self.field();
        let n = self.ambient().total();
        let mut m = Matrix::zeros(field, self.dim(), n);
        for (q, &fc) in self.free.iter().enumerate() {
            m.set(q, fc, field.one());
            for (i, &p) in self.kernel.pivots().iter().enumerate() {
                let w = self.kernel.basis_matrix().get(i, fc);
                if !w.is_zero() {
                    m.set(q, p, -w);
                }
            }
        }
        LinMap::from_parts(self.ambient().clone(), self.coord_shape(), m)
    }

    /// `V/W -> V`, the representative supported on free coordinates.
    pub fn section(&self) -> LinMap {
        let field = self.field();
        let mut m = Matrix::zeros(field, self.ambient().total(), self.dim());
        for (q, &fc) in self.free.iter().enumerate() {
            m.set(fc, q, field.one());
        }
        LinMap::from_parts(self.coord_shape(), self.ambient().clone(), m)
    }

    /// The map `V/W -> X` induced by `f: V -> X`, which must vanish on `W`.
    pub fn descend(&self, f: &LinMap) -> Result<LinMap> {
        if !f.compose(&self.kernel.inclusion()).is_zero() {
            return Err(Error::Inconsistency(
                "map does not vanish on the relations of the quotient".into(),
            ));
        }
        Ok(f.compose(&self.section()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn canonicalisation_is_idempotent() {
        let f = Field::Rationals;
        let s = Subspace::span(f, &TensorShape::flat(3), &[v(f, &[2, 4, 6]), v(f, &[1, 0, 1])]);
        assert_eq!(s.canonicalize(), s);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn coordinates_invert_inclusion() {
        let f = Field::Rationals;
        let s = Subspace::span(f, &TensorShape::flat(3), &[v(f, &[1, 1, 0]), v(f, &[0, 1, 1])]);
        let round = s.coordinates().compose(&s.inclusion());
        assert!(round.same_map(&LinMap::identity(f, &TensorShape::flat(2))));
        assert!(s.contains(&v(f, &[1, 2, 1])));
        assert!(!s.contains(&v(f, &[1, 0, 0])));
    }

    #[test]
    fn quotient_projection_kills_relations() {
        let f = Field::Rationals;
        let w = Subspace::span(f, &TensorShape::flat(3), &[v(f, &[1, -1, 0])]);
        let q = Quotient::new(w.clone());
        assert_eq!(q.dim(), 2);
        assert!(q.projection().compose(&w.inclusion()).is_zero());
        assert!(q
            .projection()
            .compose(&q.section())
            .same_map(&LinMap::identity(f, &TensorShape::flat(2))));
    }

    #[test]
    fn zero_subspace_has_empty_coordinates() {
        let f = Field::Prime(2);
        let z = Subspace::zero(f, &TensorShape::flat(2));
        assert_eq!(z.dim(), 0);
        assert_eq!(z.inclusion().matrix().cols(), 0);
        assert_eq!(Quotient::new(z).dim(), 2);
    }
}
