//! Relative Hochschild cochains `C^n(A, B, M)` and their cohomology.

use crate::check::CheckReport;
use crate::entmod::land;
use crate::error::{Error, Result};
use crate::exactla::{chain, id, kernel_image, tensor, LinMap, Matrix, Subspace, TensorShape};
use crate::structures::{verify_algebra_map, verify_left_module, verify_right_module, Algebra};
use crate::witness::{ident, solve_identities, Identity};

/// Highest cochain degree [`relative_complex`] builds.
pub const MAX_DEGREE: usize = 3;

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

/// An `(A, A)`-bimodule with `left: A⊗M -> M` and `right: M⊗A -> M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    dim: usize,
    left: LinMap,
    right: LinMap,
}

impl Bimodule {
    /// Checks both module axioms and `(a·m)·a' = a·(m·a')`.
    pub fn new(alg: &Algebra, dim: usize, left: LinMap, right: LinMap) -> Result<Self> {
        let d = alg.dim();
        if left.domain().total() != d * dim || left.codomain().total() != dim {
            return Err(Error::input("left action must map A⊗M to M"));
        }
        if right.domain().total() != dim * d || right.codomain().total() != dim {
            return Err(Error::input("right action must map M⊗A to M"));
        }
        let m = Bimodule {
            dim,
            left: left.reshape(TensorShape::new(vec![d, dim]), flat(dim)),
            right: right.reshape(TensorShape::new(vec![dim, d]), flat(dim)),
        };
        m.verify(alg).into_result()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> &LinMap {
        &self.left
    }

    pub fn right(&self) -> &LinMap {
        &self.right
    }

    pub fn verify(&self, alg: &Algebra) -> CheckReport {
        let mut r = CheckReport::new("bimodule");
        r.absorb(verify_left_module(alg, self.dim, &self.left));
        r.absorb(verify_right_module(alg, self.dim, &self.right));
        let ia = alg.identity();
        r.compare(
            "actions commute",
            &chain(&[&self.right, &self.left.kron(&ia)]),
            &chain(&[&self.left, &ia.kron(&self.right)]),
        );
        r
    }

    /// `A` acting on itself from both sides.
    pub fn regular(alg: &Algebra) -> Self {
        let mu = alg.mult().clone();
        Bimodule::new(alg, alg.dim(), mu.clone(), mu).expect("regular bimodule")
    }

    /// `A⊗A` with `a·(x⊗y)·a' = ax⊗ya'`.
    pub fn outer(alg: &Algebra) -> Self {
        let ia = alg.identity();
        let mu = alg.mult();
        let d = alg.dim();
        Bimodule::new(alg, d * d, mu.kron(&ia), ia.kron(mu)).expect("outer bimodule")
    }

    /// `A` with the left action twisted by an algebra endomorphism `σ`:
    /// `a·x·a' = σ(a)xa'`.
    pub fn twisted(alg: &Algebra, sigma: &LinMap) -> Result<Self> {
        verify_algebra_map(alg, alg, sigma).into_result()?;
        let mu = alg.mult();
        Bimodule::new(alg, alg.dim(), chain(&[mu, &sigma.kron(&alg.identity())]), mu.clone())
    }

    /// `A* = Hom(A, k)` with `(a·f·a')(x) = f(a'xa)`.
    pub fn dual(alg: &Algebra) -> Self {
        let f = alg.field();
        let d = alg.dim();
        // left: (a·f)(x) = f(xa), entry [x] of (a, f)
        let left = LinMap::from_coefficients(f, &TensorShape::new(vec![d, d]), &flat(d), |dst, src| {
            let (a, fi, x) = (src[0], src[1], dst[0]);
            alg.product(&alg.basis(x), &alg.basis(a))[fi].clone()
        });
        let right = LinMap::from_coefficients(f, &TensorShape::new(vec![d, d]), &flat(d), |dst, src| {
            let (fi, a, x) = (src[0], src[1], dst[0]);
            alg.product(&alg.basis(a), &alg.basis(x))[fi].clone()
        });
        Bimodule::new(alg, d, left, right).expect("dual bimodule")
    }
}

/// `{A, A⊗A, A*}` plus `A` twisted by each supplied endomorphism.
pub fn bimodule_battery(alg: &Algebra, twists: &[LinMap]) -> Result<Vec<(String, Bimodule)>> {
    let mut out = vec![
        ("regular".to_string(), Bimodule::regular(alg)),
        ("outer".to_string(), Bimodule::outer(alg)),
        ("dual".to_string(), Bimodule::dual(alg)),
    ];
    for (i, s) in twists.iter().enumerate() {
        out.push((format!("twisted-{i}"), Bimodule::twisted(alg, s)?));
    }
    Ok(out)
}

/// Cochains `C^n`, `n ≤ max_degree`, as subspaces of `Hom(A^{⊗n}, M)`
/// vectorised row-major, with the coboundaries between them.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    pub b: Subspace,
    pub max_degree: usize,
    /// `C^n` inside `Hom(A^{⊗n}, M)`.
    pub spaces: Vec<Subspace>,
    /// `δ_n` on all of `Hom(A^{⊗n}, M)`, `n < max_degree`.
    pub full: Vec<LinMap>,
    /// `δ_n` in coordinates of `C^n` and `C^{n+1}`.
    pub coboundaries: Vec<LinMap>,
    /// Shape of `A^{⊗n}` per degree.
    shapes: Vec<TensorShape>,
    dim_m: usize,
}

fn power(d: usize, n: usize) -> TensorShape {
    TensorShape::new(vec![d; n])
}

fn place(ia: &LinMap, n: usize, i: usize, g: &LinMap) -> LinMap {
    let mut parts: Vec<&LinMap> = vec![ia; n];
    parts[i] = g;
    tensor(&parts)
}

fn cochain_identities(
    alg: &Algebra,
    b: &Subspace,
    m: &Bimodule,
    n: usize,
    x: &LinMap,
) -> Vec<Identity> {
    let f = alg.field();
    let ia = alg.identity();
    let mut out = Vec::new();
    for bv in b.basis() {
        let bm = LinMap::from_vector(f, &flat(alg.dim()), &bv);
        let l_b = chain(&[m.left(), &bm.kron(&id(f, m.dim()))]);
        let r_b = chain(&[m.right(), &id(f, m.dim()).kron(&bm)]);
        if n == 0 {
            out.push(ident("b·m = m·b", l_b.compose(x), r_b.compose(x)));
            continue;
        }
        let lmul = alg.left_mult(&bv);
        let rmul = alg.right_mult(&bv);
        out.push(ident(
            "left B-linear",
            x.compose(&place(&ia, n, 0, &lmul)),
            l_b.compose(x),
        ));
        out.push(ident(
            "right B-linear",
            x.compose(&place(&ia, n, n - 1, &rmul)),
            r_b.compose(x),
        ));
        for i in 0..n - 1 {
            out.push(ident(
                "B-balanced",
                x.compose(&place(&ia, n, i, &rmul)),
                x.compose(&place(&ia, n, i + 1, &lmul)),
            ));
        }
    }
    out
}

/// `δf = a₁·f(a₂..) + Σ (−1)^i f(..a_i a_{i+1}..) + (−1)^{n+1} f(..a_n)·a_{n+1}`.
fn coboundary(alg: &Algebra, m: &Bimodule, n: usize) -> LinMap {
    let f = alg.field();
    let d = alg.dim();
    let ia = alg.identity();
    let dom = power(d, n);
    let cod = flat(m.dim());
    let faces: Vec<LinMap> = (0..n)
        .map(|i| {
            let mut parts: Vec<&LinMap> = vec![&ia; n];
            parts[i] = alg.mult();
            tensor(&parts)
        })
        .collect();
    let matrix: Matrix = crate::exactla::probe(f, &dom, &cod, |x| {
        let mut acc = chain(&[m.left(), &ia.kron(x)]);
        for (i, face) in faces.iter().enumerate() {
            let term = x.compose(face);
            acc = if i % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
        }
        let last = chain(&[m.right(), &x.kron(&ia)]);
        if n % 2 == 0 { acc.sub(&last) } else { acc.add(&last) }
    });
    LinMap::new(flat(d.pow(n as u32) * m.dim()), flat(d.pow(n as u32 + 1) * m.dim()), matrix)
        .expect("coboundary shape")
}

/// Builds `C^0 .. C^max_degree` and the coboundaries; `δ∘δ = 0` is checked.
pub fn relative_complex(alg: &Algebra, b: &Subspace, m: &Bimodule, max_degree: usize) -> Result<RelativeComplex> {
    if max_degree > MAX_DEGREE {
        return Err(Error::input(format!("degree is capped at {MAX_DEGREE}")));
    }
    let f = alg.field();
    let d = alg.dim();
    if b.ambient().total() != d {
        return Err(Error::input("B must be a subspace of A"));
    }
    alg.subalgebra(b).map_err(|e| Error::input(format!("B is not a unital subalgebra: {e}")))?;
    if m.left().domain().total() != d * m.dim() {
        return Err(Error::input("bimodule is over a different algebra"));
    }
    m.verify(alg).into_result()?;
    let shapes: Vec<TensorShape> = (0..=max_degree).map(|n| power(d, n)).collect();
    let spaces: Vec<Subspace> = shapes
        .iter()
        .enumerate()
        .map(|(n, s)| {
            solve_identities(f, s, &flat(m.dim()), |x| cochain_identities(alg, b, m, n, x)).homogeneous
        })
        .collect();
    let full: Vec<LinMap> = (0..max_degree).map(|n| coboundary(alg, m, n)).collect();
    for w in full.windows(2) {
        if !w[1].compose(&w[0]).is_zero() {
            return Err(Error::Inconsistency("δ∘δ is not zero".into()));
        }
    }
    let coboundaries = (0..max_degree)
        .map(|n| {
            land(
                &full[n].compose(&spaces[n].inclusion()),
                &spaces[n + 1].inclusion(),
                &spaces[n + 1].coordinates(),
                "δ on B-bilinear cochains",
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelativeComplex {
        b: b.clone(),
        max_degree,
        spaces,
        full,
        coboundaries,
        shapes,
        dim_m: m.dim(),
    })
}

/// `H^n` with explicit cocycle representatives.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub dim: usize,
    /// Cocycles in coordinates of `C^n`.
    pub cocycles: Subspace,
    /// Coboundaries in coordinates of `C^n`.
    pub exact: Subspace,
    /// Cocycles, as maps `A^{⊗n} -> M`, whose classes form a basis of `H^n`.
    pub representatives: Vec<LinMap>,
}

impl RelativeComplex {
    pub fn dim_cochains(&self, n: usize) -> Option<usize> {
        self.spaces.get(n).map(Subspace::dim)
    }

    /// `δ_{n+1}∘δ_n = 0` on all cochains and on the relative subcomplex.
    pub fn verify(&self) -> CheckReport {
        let mut r = CheckReport::new("relative complex");
        for n in 1..self.max_degree {
            r.vanishes(format!("δ{n}∘δ{} = 0", n - 1), &self.full[n].compose(&self.full[n - 1]));
            r.vanishes(
                format!("relative δ{n}∘δ{} = 0", n - 1),
                &self.coboundaries[n].compose(&self.coboundaries[n - 1]),
            );
        }
        r
    }

    /// Needs `δ_n`, so `n < max_degree`.
    pub fn cohomology(&self, n: usize) -> Result<Cohomology> {
        if n >= self.max_degree {
            return Err(Error::input(format!(
                "H^{n} needs cochains up to degree {}, complex stops at {}",
                n + 1,
                self.max_degree
            )));
        }
        let f = self.b.field();
        let (cocycles, _) = kernel_image(&self.coboundaries[n]);
        let exact = if n == 0 {
            Subspace::zero(f, &flat(self.spaces[0].dim()))
        } else {
            kernel_image(&self.coboundaries[n - 1]).1
        };
        let mut span = exact.clone();
        let mut reps = Vec::new();
        for z in cocycles.basis() {
            if !span.contains(&z) {
                span = span.sum(&Subspace::span(f, span.ambient(), &[z.clone()]));
                let v = self.spaces[n].inclusion().apply(&z);
                reps.push(LinMap::from_vec(f, &self.shapes[n], &flat(self.dim_m), &v));
            }
        }
        Ok(Cohomology {
            degree: n,
            dim: cocycles.dim() - exact.dim(),
            cocycles,
            exact,
            representatives: reps,
        })
    }
}

/// `dim H^n(A, B, M)`, building the complex up to degree `n + 1`.
pub fn cohomology_dim(alg: &Algebra, b: &Subspace, m: &Bimodule, n: usize) -> Result<Cohomology> {
    relative_complex(alg, b, m, n + 1)?.cohomology(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cyclic_group_algebra;
    use crate::exactla::Field;

    fn scalars(alg: &Algebra) -> Subspace {
        Subspace::span(alg.field(), &flat(alg.dim()), &[alg.unit()])
    }

    #[test]
    fn regular_center_is_whole_algebra() {
        let a = cyclic_group_algebra(Field::Rationals, 2);
        let h0 = cohomology_dim(&a, &scalars(&a), &Bimodule::regular(&a), 0).unwrap();
        assert_eq!(h0.dim, 2);
    }

    #[test]
    fn relative_to_itself_is_acyclic() {
        let a = cyclic_group_algebra(Field::Prime(2), 2);
        let all = Subspace::full(a.field(), &flat(2));
        let c = relative_complex(&a, &all, &Bimodule::regular(&a), 2).unwrap();
        assert_eq!(c.dim_cochains(1), Some(2));
        assert_eq!(c.cohomology(1).unwrap().dim, 0);
    }

    #[test]
    fn degree_cap() {
        let a = cyclic_group_algebra(Field::Rationals, 2);
        assert!(relative_complex(&a, &scalars(&a), &Bimodule::regular(&a), 4).unwrap_err().is_input());
        let c = relative_complex(&a, &scalars(&a), &Bimodule::regular(&a), 1).unwrap();
        assert!(c.cohomology(1).unwrap_err().is_input());
    }

    #[test]
    fn non_subalgebra_rejected() {
        let a = cyclic_group_algebra(Field::Rationals, 3);
        let f = a.field();
        let b = Subspace::span(f, &flat(3), &[a.unit(), a.basis(1)]);
        assert!(relative_complex(&a, &b, &Bimodule::regular(&a), 1).unwrap_err().is_input());
    }
}
