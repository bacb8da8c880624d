use serde::{Deserialize, Serialize};

/// Ordered tensor factors of a space. The empty shape is the ground field.
///
/// Flattening is row-major: the leftmost factor is the most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TensorShape(Vec<usize>);

impl TensorShape {
    /// Factors may be zero; such a space has total dimension 0 and no
    /// basis tensors.
    pub fn new(factors: Vec<usize>) -> Self {
        TensorShape(factors)
    }

    /// The ground field `k`, total dimension 1.
    pub fn scalar() -> Self {
        TensorShape(Vec::new())
    }

    pub fn flat(n: usize) -> Self {
        TensorShape(vec![n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn concat(&self, other: &TensorShape) -> TensorShape {
        let mut f = self.0.clone();
        f.extend_from_slice(&other.0);
        TensorShape(f)
    }

    pub fn flatten(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.0.len(), "multi-index rank mismatch");
        index.iter().zip(&self.0).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "index out of range");
            acc * d + i
        })
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        assert!(flat < self.total(), "flat index out of range");
        let mut idx = vec![0; self.0.len()];
        for (slot, &d) in idx.iter_mut().zip(&self.0).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }
}

impl From<&[usize]> for TensorShape {
    fn from(f: &[usize]) -> Self {
        TensorShape::new(f.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scalar_shape_has_total_one() {
        assert_eq!(TensorShape::scalar().total(), 1);
        assert_eq!(TensorShape::scalar().flatten(&[]), 0);
    }

    #[test]
    fn row_major_order() {
        let s = TensorShape::new(vec![2, 3]);
        assert_eq!(s.flatten(&[1, 0]), 3);
        assert_eq!(s.unflatten(5), vec![1, 2]);
    }

    proptest! {
        #[test]
        fn flatten_unflatten_inverse(dims in proptest::collection::vec(1usize..5, 0..4), seed in 0usize..10_000) {
            let s = TensorShape::new(dims);
            let flat = seed % s.total();
            prop_assert_eq!(s.flatten(&s.unflatten(flat)), flat);
        }
    }
}
