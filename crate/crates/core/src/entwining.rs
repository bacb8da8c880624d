//! Entwining structures `(A, C)_ψ`, their morphisms and tensor products.

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::exactla::{chain, id, tensor, Field, LinMap, TensorShape};
use crate::structures::{verify_algebra_map, verify_coalgebra_map, Algebra, Coalgebra};

/// An algebra `A`, a coalgebra `C` and `ψ: C⊗A -> A⊗C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entwining {
    alg: Algebra,
    coalg: Coalgebra,
    psi: LinMap,
}

impl Entwining {
    /// Checks shapes and all axioms (algebra, coalgebra and the four
    /// entwining identities); fails with the first violated one.
    pub fn new(alg: Algebra, coalg: Coalgebra, psi: LinMap) -> Result<Self> {
        let e = Entwining::unverified(alg, coalg, psi)?;
        let mut r = e.alg.verify();
        r.absorb(e.coalg.verify());
        r.into_result()?;
        e.verify().into_result()?;
        Ok(e)
    }

    /// Shape-checked but unverified; call [`Entwining::verify`] before use.
    pub fn unverified(alg: Algebra, coalg: Coalgebra, psi: LinMap) -> Result<Self> {
        let (a, c) = (alg.dim(), coalg.dim());
        if alg.field() != coalg.field() || psi.field() != alg.field() {
            return Err(Error::input("entwining data over different fields"));
        }
        if psi.domain().total() != c * a || psi.codomain().total() != a * c {
            return Err(Error::input(format!(
                "psi must map C⊗A ({c}x{a}) to A⊗C ({a}x{c})"
            )));
        }
        let psi = psi.reshape(TensorShape::new(vec![c, a]), TensorShape::new(vec![a, c]));
        Ok(Entwining { alg, coalg, psi })
    }

    /// `ψ(c⊗a) = a⊗c`, an entwining for any `A` and `C`.
    pub fn twist(alg: Algebra, coalg: Coalgebra) -> Result<Self> {
        if alg.field() != coalg.field() {
            return Err(Error::input("entwining data over different fields"));
        }
        let psi = LinMap::twist(alg.field(), &TensorShape::flat(coalg.dim()), &TensorShape::flat(alg.dim()));
        Entwining::new(alg, coalg, psi)
    }

    /// `(k, k)_twist`, the unit for the tensor product.
    pub fn unit(field: Field) -> Self {
        Entwining::twist(Algebra::ground(field), Coalgebra::ground(field)).expect("unit entwining")
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn coalg(&self) -> &Coalgebra {
        &self.coalg
    }

    pub fn psi(&self) -> &LinMap {
        &self.psi
    }

    pub fn dim_a(&self) -> usize {
        self.alg.dim()
    }

    pub fn dim_c(&self) -> usize {
        self.coalg.dim()
    }

    pub fn id_a(&self) -> LinMap {
        self.alg.identity()
    }

    pub fn id_c(&self) -> LinMap {
        self.coalg.identity()
    }

    /// The four identities; witnesses are ordered by (coalgebra index,
    /// algebra index).
    pub fn verify(&self) -> CheckReport {
        let mut r = CheckReport::new("entwining");
        let (ia, ic) = (self.id_a(), self.id_c());
        let psi = &self.psi;
        let mu = self.alg.mult();
        let delta = self.coalg.comult();
        r.compare(
            "multiplicativity",
            &chain(&[psi, &ic.kron(mu)]),
            &chain(&[&mu.kron(&ic), &ia.kron(psi), &psi.kron(&ia)]),
        );
        r.compare(
            "unit",
            &chain(&[psi, &ic.kron(self.alg.unit_map())]),
            &self.alg.unit_map().kron(&ic),
        );
        r.compare(
            "comultiplicativity",
            &chain(&[&ia.kron(delta), psi]),
            &chain(&[&psi.kron(&ic), &ic.kron(psi), &delta.kron(&ia)]),
        );
        r.compare(
            "counit",
            &chain(&[&ia.kron(self.coalg.counit_map()), psi]),
            &self.coalg.counit_map().kron(&ia),
        );
        r
    }
}

/// `(A⊗Ã, C⊗C̃)` with `ψ = (A⊗twist⊗C̃)(ψ⊗ψ̃)(C⊗twist⊗Ã)`.
pub fn tensor_entwining(e1: &Entwining, e2: &Entwining) -> Result<Entwining> {
    if e1.field() != e2.field() {
        return Err(Error::input("cannot tensor entwinings over different fields"));
    }
    let f = e1.field();
    let (a, c, a2, c2) = (e1.dim_a(), e1.dim_c(), e2.dim_a(), e2.dim_c());
    let fl = TensorShape::flat;
    let inner = tensor(&[&id(f, c), &LinMap::twist(f, &fl(c2), &fl(a)), &id(f, a2)]);
    let outer = tensor(&[&id(f, a), &LinMap::twist(f, &fl(c), &fl(a2)), &id(f, c2)]);
    let psi = chain(&[&outer, &e1.psi.kron(&e2.psi), &inner]);
    let alg = e1.alg.tensor(&e2.alg);
    let coalg = e1.coalg.tensor(&e2.coalg);
    let psi = psi.reshape(
        TensorShape::new(vec![c * c2, a * a2]),
        TensorShape::new(vec![a * a2, c * c2]),
    );
    let e = Entwining::unverified(alg, coalg, psi)?;
    e.verify().into_result()?;
    Ok(e)
}

/// `(f, g): (A, C)_ψ -> (Ã, C̃)_ψ̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningMorphism {
    pub src: Entwining,
    pub dst: Entwining,
    pub f: LinMap,
    pub g: LinMap,
}

impl EntwiningMorphism {
    /// Shape-checked; verified by [`EntwiningMorphism::verify`].
    pub fn new(src: Entwining, dst: Entwining, f: LinMap, g: LinMap) -> Result<Self> {
        if src.field() != dst.field() || f.field() != src.field() || g.field() != src.field() {
            return Err(Error::input("morphism data over different fields"));
        }
        if f.domain().total() != src.dim_a() || f.codomain().total() != dst.dim_a() {
            return Err(Error::input("f must map A to Ã"));
        }
        if g.domain().total() != src.dim_c() || g.codomain().total() != dst.dim_c() {
            return Err(Error::input("g must map C to C̃"));
        }
        let f = f.reshape(TensorShape::flat(src.dim_a()), TensorShape::flat(dst.dim_a()));
        let g = g.reshape(TensorShape::flat(src.dim_c()), TensorShape::flat(dst.dim_c()));
        Ok(EntwiningMorphism { src, dst, f, g })
    }

    pub fn identity(e: &Entwining) -> Self {
        EntwiningMorphism {
            src: e.clone(),
            dst: e.clone(),
            f: e.id_a(),
            g: e.id_c(),
        }
    }

    /// `(A, ε_C): (A, C)_ψ -> (A, k)_twist`.
    pub fn counit_morphism(e: &Entwining) -> Self {
        let dst = Entwining::twist(e.alg.clone(), Coalgebra::ground(e.field())).expect("twist");
        EntwiningMorphism {
            src: e.clone(),
            dst,
            f: e.id_a(),
            g: e.coalg.counit_map().reshape(TensorShape::flat(e.dim_c()), TensorShape::flat(1)),
        }
    }

    /// `(1_A, C): (k, C)_twist -> (A, C)_ψ`.
    pub fn unit_morphism(e: &Entwining) -> Self {
        let src = Entwining::twist(Algebra::ground(e.field()), e.coalg.clone()).expect("twist");
        EntwiningMorphism {
            src,
            dst: e.clone(),
            f: e.alg.unit_map().reshape(TensorShape::flat(1), TensorShape::flat(e.dim_a())),
            g: e.id_c(),
        }
    }

    pub fn field(&self) -> Field {
        self.src.field()
    }

    pub fn verify(&self) -> CheckReport {
        let mut r = CheckReport::new("entwining morphism");
        r.absorb(verify_algebra_map(self.src.alg(), self.dst.alg(), &self.f));
        r.absorb(verify_coalgebra_map(self.src.coalg(), self.dst.coalg(), &self.g));
        r.compare(
            "intertwines psi",
            &chain(&[&self.f.kron(&self.g), self.src.psi()]),
            &chain(&[self.dst.psi(), &self.g.kron(&self.f)]),
        );
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::unit_vector;

    fn c2(field: Field) -> Algebra {
        let mult = LinMap::from_basis_images(
            field,
            &TensorShape::new(vec![2, 2]),
            &TensorShape::flat(2),
            |i| unit_vector(field, 2, (i[0] + i[1]) % 2),
        );
        Algebra::new(mult, LinMap::from_vector(field, &TensorShape::flat(2), &unit_vector(field, 2, 0)))
            .unwrap()
    }

    fn canonical_c2() -> Entwining {
        // ψ(g_i ⊗ g_j) = g_j ⊗ g_i g_j
        let f = Field::Rationals;
        let psi = LinMap::from_basis_images(
            f,
            &TensorShape::new(vec![2, 2]),
            &TensorShape::new(vec![2, 2]),
            |ij| unit_vector(f, 4, ij[1] * 2 + (ij[0] + ij[1]) % 2),
        );
        Entwining::new(c2(f), Coalgebra::grouplike(f, 2), psi).unwrap()
    }

    #[test]
    fn twist_is_an_entwining() {
        let f = Field::Rationals;
        assert!(Entwining::twist(c2(f), Coalgebra::grouplike(f, 3)).is_ok());
    }

    #[test]
    fn perturbed_twist_fails_unit_axiom() {
        let f = Field::Rationals;
        let e = Entwining::twist(c2(f), Coalgebra::grouplike(f, 2)).unwrap();
        let mut m = e.psi().matrix().clone();
        m.set(0, 0, f.from_i64(2));
        let bad = Entwining::unverified(e.alg().clone(), e.coalg().clone(), LinMap::new(e.psi().domain().clone(), e.psi().codomain().clone(), m).unwrap()).unwrap();
        assert!(bad.verify().failed("unit"));
    }

    #[test]
    fn special_morphisms_verify() {
        let e = canonical_c2();
        assert!(EntwiningMorphism::identity(&e).verify().passed());
        assert!(EntwiningMorphism::counit_morphism(&e).verify().passed());
        assert!(EntwiningMorphism::unit_morphism(&e).verify().passed());
    }

    #[test]
    fn tensor_with_unit_and_itself() {
        let e = canonical_c2();
        let u = tensor_entwining(&e, &Entwining::unit(Field::Rationals)).unwrap();
        assert!(u.psi().same_map(e.psi()));
        assert!(tensor_entwining(&e, &e).unwrap().verify().passed());
    }

    #[test]
    fn twist_tensor_twist_is_twist() {
        let f = Field::Rationals;
        let t1 = Entwining::twist(c2(f), Coalgebra::grouplike(f, 2)).unwrap();
        let t = tensor_entwining(&t1, &t1).unwrap();
        let direct = LinMap::twist(f, &TensorShape::flat(4), &TensorShape::flat(4));
        assert!(t.psi().same_map(&direct));
    }
}
