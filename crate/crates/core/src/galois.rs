//! Coalgebra-Galois extensions and algebra-Galois coextensions with their
//! canonical entwinings.

use crate::check::CheckReport;
use crate::entmod::{cotensor, descend, land, tensor_over, EntwinedModule};
use crate::entwining::Entwining;
use crate::error::{Error, Result};
use crate::exactla::{
    chain, id, tensor, unit_vector, LinMap, LinearSystem, Quotient, Scalar, Subspace, TensorShape,
};
use crate::structures::{
    verify_right_comodule, verify_right_module, Algebra, Coalgebra,
};

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

/// `B = {b ∈ A | ρ(ba) = bρ(a) for all a}` and its induced algebra.
pub fn fixed_subalgebra(alg: &Algebra, rho_a: &LinMap) -> Result<(Subspace, Algebra)> {
    let f = alg.field();
    let d = alg.dim();
    let c = rho_a.codomain().total() / d.max(1);
    let rho = rho_a.reshape(flat(d), TensorShape::new(vec![d, c]));
    let ic = id(f, c);
    let ia = alg.identity();
    let lhs = chain(&[&rho, alg.mult()]);
    let rhs = chain(&[&alg.mult().kron(&ic), &ia.kron(&rho)]);
    let diff = lhs.sub(&rhs);
    let mut sys = LinearSystem::new(f, d);
    for j in 0..d {
        let aj = LinMap::from_vector(f, &flat(d), &alg.basis(j));
        sys.push_homogeneous(chain(&[&diff, &ia.kron(&aj)]).matrix());
    }
    let b = Subspace::from_rows(&flat(d), sys.solve().homogeneous.basis_matrix());
    let balg = alg
        .subalgebra(&b)
        .map_err(|e| Error::Inconsistency(format!("fixed subalgebra: {e}")))?;
    Ok((b, balg))
}

/// A coalgebra-Galois extension `A(B)^C` with its canonical entwining.
#[derive(Clone, Debug)]
pub struct GaloisExtension {
    pub alg: Algebra,
    pub coalg: Coalgebra,
    /// `ρ^A: A -> A⊗C`.
    pub rho_a: LinMap,
    pub b: Subspace,
    pub b_alg: Algebra,
    /// `A⊗_B A` as a quotient of `A⊗A`.
    pub a_tens_b_a: Quotient,
    /// `can: A⊗_B A -> A⊗C` in quotient coordinates.
    pub can: LinMap,
    pub can_inv: LinMap,
    pub entwining: Entwining,
}

/// Validates a right coaction `ρ^A` of `C` on `A`.
pub fn verify_coaction(alg: &Algebra, coalg: &Coalgebra, rho_a: &LinMap) -> Result<LinMap> {
    let (d, c) = (alg.dim(), coalg.dim());
    if rho_a.domain().total() != d || rho_a.codomain().total() != d * c {
        return Err(Error::input(format!("coaction must map A ({d}) to A⊗C ({d}x{c})")));
    }
    let rho = rho_a.reshape(flat(d), TensorShape::new(vec![d, c]));
    verify_right_comodule(coalg, d, &rho).into_result()?;
    Ok(rho)
}

pub fn build_galois(alg: &Algebra, coalg: &Coalgebra, rho_a: &LinMap) -> Result<GaloisExtension> {
    if alg.field() != coalg.field() {
        return Err(Error::input("algebra and coalgebra over different fields"));
    }
    let mut r = alg.verify();
    r.absorb(coalg.verify());
    r.into_result()?;
    let rho = verify_coaction(alg, coalg, rho_a)?;
    let (d, c) = (alg.dim(), coalg.dim());
    let ia = alg.identity();
    let ic = coalg.identity();
    let mu = alg.mult();

    let (b, b_alg) = fixed_subalgebra(alg, &rho)?;
    let ib = b.inclusion();
    let q = tensor_over(d, &chain(&[mu, &ia.kron(&ib)]), d, &chain(&[mu, &ib.kron(&ia)]));
    if q.dim() != d * c {
        return Err(Error::Galois(format!(
            "A⊗_B A has dimension {} but A⊗C has dimension {}",
            q.dim(),
            d * c
        )));
    }
    let can_amb = chain(&[&mu.kron(&ic), &ia.kron(&rho)]);
    let can = descend(&can_amb, &q.kernel().inclusion(), &q.section(), "can")?;
    let can_m = can.reshape(flat(q.dim()), TensorShape::new(vec![d, c]));
    let inv = can_m.matrix().inverse().ok_or_else(|| {
        Error::Galois(format!(
            "can is not bijective: rank {} of {}",
            can_m.matrix().rank(),
            d * c
        ))
    })?;
    let can_inv = LinMap::new(TensorShape::new(vec![d, c]), flat(q.dim()), inv)?;

    // ψ(c⊗a) = can(can⁻¹(1⊗c)·a), multiplied through representatives
    let lift = chain(&[&q.section(), &can_inv, &alg.unit_map().kron(&ic)]);
    let psi = chain(&[&can_amb, &ia.kron(mu), &lift.kron(&ia)]);
    let entwining = Entwining::unverified(alg.clone(), coalg.clone(), psi)?;
    let rep = entwining.verify();
    if !rep.passed() {
        return Err(Error::Inconsistency(format!("canonical entwining fails: {rep}")));
    }
    EntwinedModule::regular(&entwining, &rho)
        .map_err(|e| Error::Inconsistency(format!("A is not an entwined module: {e}")))?;
    Ok(GaloisExtension {
        alg: alg.clone(),
        coalg: coalg.clone(),
        rho_a: rho,
        b,
        b_alg,
        a_tens_b_a: q,
        can: can_m,
        can_inv,
        entwining,
    })
}

impl GaloisExtension {
    pub fn field(&self) -> crate::exactla::Field {
        self.alg.field()
    }

    /// `μ_{A,B}: A⊗_B A -> A`.
    pub fn mu_b(&self) -> LinMap {
        self.alg.mult().compose(&self.a_tens_b_a.section())
    }

    /// `A` as an entwined module via `μ` and `ρ^A`.
    pub fn regular_module(&self) -> EntwinedModule {
        EntwinedModule::regular(&self.entwining, &self.rho_a).expect("verified at construction")
    }

    /// Left multiplication by `x` on `A⊗_B A`, through representatives.
    pub fn left_mult_q(&self, x: &[Scalar]) -> LinMap {
        let q = &self.a_tens_b_a;
        chain(&[&q.projection(), &self.alg.left_mult(x).kron(&self.alg.identity()), &q.section()])
    }

    /// Right multiplication by `x` on `A⊗_B A`, through representatives.
    pub fn right_mult_q(&self, x: &[Scalar]) -> LinMap {
        let q = &self.a_tens_b_a;
        chain(&[&q.projection(), &self.alg.identity().kron(&self.alg.right_mult(x)), &q.section()])
    }

    /// The group-like `e` with `ρ^A(1) = 1⊗e`, if any.
    pub fn copointed_grouplike(&self) -> Option<Vec<Scalar>> {
        let (d, c) = (self.alg.dim(), self.coalg.dim());
        let one = self.alg.unit();
        let r1 = chain(&[&self.rho_a, self.alg.unit_map()]).matrix().column(0);
        // r1 = 1⊗e means r1[i*c + k] = one[i] * e[k]
        let i0 = (0..d).find(|&i| !one[i].is_zero())?;
        let inv = one[i0].inv()?;
        let e: Vec<Scalar> = (0..c).map(|k| &r1[i0 * c + k] * &inv).collect();
        let ok = (0..d).all(|i| (0..c).all(|k| r1[i * c + k] == &one[i] * &e[k]));
        (ok && self.coalg.is_grouplike(&e)).then_some(e)
    }

    /// Consistency identities of the canonical map: `(A⊗ε)∘can = μ_{A,B}` and
    /// `can⁻¹` is an `(A, A)`-bimodule map on all basis triples.
    pub fn verify_can(&self) -> CheckReport {
        let mut r = CheckReport::new("canonical map");
        let ia = self.alg.identity();
        r.compare(
            "(A⊗ε)∘can = μ_B",
            &chain(&[&ia.kron(self.coalg.counit_map()), &self.can]).reshape(
                self.can.domain().clone(),
                flat(self.alg.dim()),
            ),
            &self.mu_b(),
        );
        r.compare(
            "can∘can⁻¹ = id",
            &self.can.compose(&self.can_inv),
            &id(self.field(), self.can.codomain().total()),
        );
        r.compare(
            "can⁻¹∘can = id",
            &self.can_inv.compose(&self.can),
            &id(self.field(), self.can.domain().total()),
        );
        let ic = self.coalg.identity();
        for j in 0..self.alg.dim() {
            let a = self.alg.basis(j);
            let left_ac = self.alg.left_mult(&a).kron(&ic);
            r.compare(
                format!("can⁻¹ left-linear in basis element {j}"),
                &self.can_inv.compose(&left_ac),
                &self.left_mult_q(&a).compose(&self.can_inv),
            );
            // right action of A on A⊗C: (x⊗c)·a = xψ(c⊗a)
            let e = &self.entwining;
            let av = LinMap::from_vector(self.field(), &flat(self.alg.dim()), &a);
            let right_ac = chain(&[&self.alg.mult().kron(&ic), &ia.kron(e.psi()), &tensor(&[&ia, &ic, &av])]);
            r.compare(
                format!("can⁻¹ right-linear in basis element {j}"),
                &self.can_inv.compose(&right_ac.reshape(right_ac.domain().clone(), self.can_inv.domain().clone())),
                &self.right_mult_q(&a).compose(&self.can_inv),
            );
        }
        r
    }
}

/// `C/I` for the canonical coideal, with cocan data and canonical entwining.
#[derive(Clone, Debug)]
pub struct Coextension {
    pub coalg: Coalgebra,
    pub alg: Algebra,
    /// `ρ_C: C⊗A -> C`.
    pub rho_c: LinMap,
    pub i: Subspace,
    pub b: Coalgebra,
    /// `π: C -> B`.
    pub pi: LinMap,
    /// `C□_B C` inside `C⊗C`.
    pub cotensor: Subspace,
    /// `cocan: C⊗A -> C□_B C` in subspace coordinates.
    pub cocan: LinMap,
    pub cocan_inv: LinMap,
    pub entwining: Entwining,
}

/// The coideal `I` spanned by `(c·a)₁ ξ((c·a)₂) − c₁ ξ(c₂·a)`.
pub fn canonical_coideal(coalg: &Coalgebra, rho_c: &LinMap) -> Subspace {
    let f = coalg.field();
    let c = coalg.dim();
    let ic = coalg.identity();
    let delta = coalg.comult();
    let diff = chain(&[delta, rho_c]).sub(&chain(&[&ic.kron(rho_c), &delta.kron(&id(f, rho_c.domain().total() / c))]));
    let mut cols = Vec::new();
    for k in 0..c {
        let xi = LinMap::from_covector(f, &flat(c), &unit_vector(f, c, k));
        let slice = chain(&[&ic.kron(&xi), &diff]);
        for j in 0..slice.matrix().cols() {
            cols.push(slice.matrix().column(j));
        }
    }
    Subspace::span(f, &flat(c), &cols)
}

pub fn build_coextension(coalg: &Coalgebra, alg: &Algebra, rho_c: &LinMap) -> Result<Coextension> {
    if alg.field() != coalg.field() {
        return Err(Error::input("algebra and coalgebra over different fields"));
    }
    let mut r = alg.verify();
    r.absorb(coalg.verify());
    r.into_result()?;
    let (c, d) = (coalg.dim(), alg.dim());
    if rho_c.domain().total() != c * d || rho_c.codomain().total() != c {
        return Err(Error::input(format!("action must map C⊗A ({c}x{d}) to C ({c})")));
    }
    let rho = rho_c.reshape(TensorShape::new(vec![c, d]), flat(c));
    verify_right_module(alg, c, &rho).into_result()?;
    let ia = alg.identity();
    let ic = coalg.identity();
    let delta = coalg.comult();

    let i = canonical_coideal(coalg, &rho);
    let (b, pi) = coalg.quotient(&i).map_err(|e| Error::Inconsistency(format!("canonical coideal: {e}")))?;
    let right_b = chain(&[&ic.kron(&pi), delta]);
    let left_b = chain(&[&pi.kron(&ic), delta]);
    let ct = cotensor(c, &right_b, c, &left_b);
    if ct.dim() != c * d {
        return Err(Error::Galois(format!(
            "C□_B C has dimension {} but C⊗A has dimension {}",
            ct.dim(),
            c * d
        )));
    }
    let cocan_amb = chain(&[&ic.kron(&rho), &delta.kron(&ia)]);
    let cocan = land(&cocan_amb, &ct.inclusion(), &ct.coordinates(), "cocan")?;
    let inv = cocan.matrix().inverse().ok_or_else(|| {
        Error::Galois(format!("cocan is not bijective: rank {} of {}", cocan.matrix().rank(), c * d))
    })?;
    let cocan_inv = LinMap::new(flat(ct.dim()), TensorShape::new(vec![c, d]), inv)?;

    let split = chain(&[&ic.kron(delta), &ct.inclusion(), &cocan]);
    let in_ct = land(
        &split,
        &ct.inclusion().kron(&ic),
        &ct.coordinates().kron(&ic),
        "coextension entwining",
    )?;
    let psi = chain(&[
        &tensor(&[coalg.counit_map(), &ia, &ic]),
        &cocan_inv.kron(&ic),
        &in_ct,
    ]);
    let entwining = Entwining::unverified(alg.clone(), coalg.clone(), psi)?;
    let rep = entwining.verify();
    if !rep.passed() {
        return Err(Error::Inconsistency(format!("canonical entwining fails: {rep}")));
    }
    EntwinedModule::new(&entwining, c, rho.clone(), delta.clone())
        .map_err(|e| Error::Inconsistency(format!("C is not an entwined module: {e}")))?;
    Ok(Coextension {
        coalg: coalg.clone(),
        alg: alg.clone(),
        rho_c: rho,
        i,
        b,
        pi,
        cotensor: ct,
        cocan,
        cocan_inv,
        entwining,
    })
}

/// `κ` with `ε(c·a) = ε(c)κ(a)` for all `c, a`, if it exists and is an
/// algebra map. Works on raw action data.
pub fn pointed_kappa(coalg: &Coalgebra, alg: &Algebra, rho_c: &LinMap) -> Option<Vec<Scalar>> {
    let f = coalg.field();
    let d = alg.dim();
    let eps = coalg.counit();
    let c0 = eps.iter().position(|s| !s.is_zero()).expect("counital coalgebra has ε ≠ 0");
    let inv = eps[c0].inv()?;
    let e_act = chain(&[coalg.counit_map(), rho_c]);
    let kappa: Vec<Scalar> = (0..d)
        .map(|j| e_act.matrix().get(0, c0 * d + j) * &inv)
        .collect();
    let kmap = LinMap::from_covector(f, &flat(d), &kappa);
    let factored = coalg.counit_map().kron(&kmap);
    if !e_act.same_map(&factored.reshape(e_act.domain().clone(), e_act.codomain().clone())) {
        return None;
    }
    let mult_ok = chain(&[&kmap, alg.mult()]).same_map(&kmap.kron(&kmap));
    let unit_ok = kmap.compose(alg.unit_map()).matrix().get(0, 0).is_one();
    (mult_ok && unit_ok).then_some(kappa)
}

impl Coextension {
    pub fn field(&self) -> crate::exactla::Field {
        self.alg.field()
    }

    pub fn kappa(&self) -> Option<Vec<Scalar>> {
        pointed_kappa(&self.coalg, &self.alg, &self.rho_c)
    }

    /// `γ = (ε⊗A)∘cocan⁻¹` on `C⊗C`, for coextensions of `k`. Both
    /// defining identities and the normalisation are verified.
    pub fn cotranslation_map(&self) -> Result<LinMap> {
        if self.b.dim() != 1 {
            return Err(Error::Precondition(format!(
                "cotranslation map needs B = k, but B has dimension {}",
                self.b.dim()
            )));
        }
        let (c, d) = (self.coalg.dim(), self.alg.dim());
        let ia = self.alg.identity();
        let ic = self.coalg.identity();
        let gamma = chain(&[
            &self.coalg.counit_map().kron(&ia),
            &self.cocan_inv,
            &self.cotensor.coordinates(),
        ])
        .reshape(TensorShape::new(vec![c, c]), flat(d));
        let mut r = CheckReport::new("cotranslation map");
        let mu = self.alg.mult();
        r.compare(
            "μ(γ⊗A) = γ(C⊗ρ_C)",
            &chain(&[mu, &gamma.kron(&ia)]),
            &chain(&[&gamma, &ic.kron(&self.rho_c)]),
        );
        r.compare(
            "μ(γ⊗γ)(C⊗Δ⊗C) = γ(C⊗ε⊗C)",
            &chain(&[mu, &gamma.kron(&gamma), &tensor(&[&ic, self.coalg.comult(), &ic])]),
            &chain(&[&gamma, &tensor(&[&ic, self.coalg.counit_map(), &ic])]),
        );
        r.compare(
            "γ∘Δ = 1ε",
            &chain(&[&gamma, self.coalg.comult()]),
            &chain(&[self.alg.unit_map(), self.coalg.counit_map()]),
        );
        r.compare(
            "ψ∘cocan⁻¹ = (γ⊗C)(C⊗Δ)",
            &chain(&[self.entwining.psi(), &self.cocan_inv, &self.cotensor.coordinates()]),
            &chain(&[&gamma.kron(&ic), &ic.kron(self.coalg.comult())]),
        );
        r.into_result().map_err(|e| Error::Inconsistency(e.to_string()))?;
        Ok(gamma)
    }
}
