//! Integrals, cointegrals, integral maps and cointegral maps of an entwining,
//! and the morphism-level maps `λ` and `𝔷` whose existence is equivalent to
//! separability of induction and coinduction.
//!
//! Every defining identity is written once as a function of the unknown map
//! returning both sides; the checkers compare the sides and the solvers probe
//! the same function on unit maps.

use serde::{Deserialize, Serialize};

use crate::check::CheckReport;
use crate::entmod::{
    adjunction_unit, coinduce, cotensor, induce, is_morphism, land, left_action_via,
    left_coaction_via, standard_module, tensor_over, EntwinedModule, StandardKind,
};
use crate::entwining::{Entwining, EntwiningMorphism};
use crate::error::{Error, Result};
use crate::exactla::{
    chain, id, solve_affine, tensor, AffineSolutionSet, Field, LinMap, LinearSystem, Matrix,
    Quotient, Scalar, Subspace, TensorShape,
};
use crate::galois::{Coextension, GaloisExtension};

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

fn shape(f: &[usize]) -> TensorShape {
    TensorShape::new(f.to_vec())
}

/// One defining identity evaluated at a candidate: both sides as maps.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: LinMap,
    pub rhs: LinMap,
}

pub(crate) fn ident(name: &'static str, lhs: LinMap, rhs: LinMap) -> Identity {
    Identity { name, lhs, rhs }
}

pub(crate) fn report(subject: &str, ids: Vec<Identity>) -> CheckReport {
    let mut r = CheckReport::new(subject);
    for i in ids {
        r.compare(i.name, &i.lhs, &i.rhs);
    }
    r
}

/// Solves `lhs(X) = rhs(X)` for every identity, where both sides are affine
/// in `X: dom -> cod`.
pub(crate) fn solve_identities(
    field: Field,
    dom: &TensorShape,
    cod: &TensorShape,
    eval: impl Fn(&LinMap) -> Vec<Identity>,
) -> AffineSolutionSet {
    let n = dom.total() * cod.total();
    let offsets: Vec<Vec<Scalar>> = eval(&LinMap::zero(field, dom, cod))
        .into_iter()
        .map(|i| i.lhs.sub(&i.rhs).to_vec())
        .collect();
    let mut columns: Vec<Vec<Vec<Scalar>>> = vec![Vec::with_capacity(n); offsets.len()];
    let mut unit = vec![field.zero(); n];
    for k in 0..n {
        unit[k] = field.one();
        let e = LinMap::from_vec(field, dom, cod, &unit);
        unit[k] = field.zero();
        for (j, i) in eval(&e).into_iter().enumerate() {
            let mut v = i.lhs.sub(&i.rhs).to_vec();
            for (x, o) in v.iter_mut().zip(&offsets[j]) {
                *x = &*x - o;
            }
            columns[j].push(v);
        }
    }
    let mut sys = LinearSystem::new(field, n);
    for (cols, off) in columns.iter().zip(&offsets) {
        let m = Matrix::from_columns(field, off.len(), cols);
        let b: Vec<Scalar> = off.iter().map(|x| -x).collect();
        sys.push_affine(&m, &b);
    }
    sys.solve()
}

/// The four entwining-level witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// `𝔷 ∈ A⊗C` with `a·𝔷 = 𝔷·a`.
    Integral,
    /// `𝔶: C⊗A -> k`.
    Cointegral,
    /// `γ: C⊗C -> A`.
    IntegralMap,
    /// `ζ: C -> A⊗A`.
    CointegralMap,
}

impl WitnessKind {
    pub const ALL: [WitnessKind; 4] = [
        WitnessKind::Integral,
        WitnessKind::Cointegral,
        WitnessKind::IntegralMap,
        WitnessKind::CointegralMap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Integral => "integral",
            WitnessKind::Cointegral => "cointegral",
            WitnessKind::IntegralMap => "integral-map",
            WitnessKind::CointegralMap => "cointegral-map",
        }
    }

    /// Domain and codomain of the unknown map.
    pub fn shapes(self, e: &Entwining) -> (TensorShape, TensorShape) {
        let (a, c) = (e.dim_a(), e.dim_c());
        match self {
            WitnessKind::Integral => (TensorShape::scalar(), shape(&[a, c])),
            WitnessKind::Cointegral => (shape(&[c, a]), TensorShape::scalar()),
            WitnessKind::IntegralMap => (shape(&[c, c]), flat(a)),
            WitnessKind::CointegralMap => (flat(c), shape(&[a, a])),
        }
    }
}

/// Defining identities of `kind` at `x`, followed by the normalisation when
/// `normalized`.
pub fn witness_identities(kind: WitnessKind, e: &Entwining, x: &LinMap, normalized: bool) -> Vec<Identity> {
    let (ia, ic) = (e.id_a(), e.id_c());
    let mu = e.alg().mult();
    let eta = e.alg().unit_map();
    let delta = e.coalg().comult();
    let eps = e.coalg().counit_map();
    let psi = e.psi();
    let mut out = Vec::new();
    match kind {
        WitnessKind::Integral => {
            let mu_c = mu.kron(&ic);
            out.push(ident(
                "a·z = z·a",
                chain(&[&mu_c, &ia.kron(x)]),
                chain(&[&mu_c, &ia.kron(psi), &x.kron(&ia)]),
            ));
            if normalized {
                out.push(ident("normalised", chain(&[&ia.kron(eps), x]), eta.clone()));
            }
        }
        WitnessKind::Cointegral => {
            let d_a = delta.kron(&ia);
            out.push(ident(
                "cointegral",
                chain(&[&ic.kron(x), &d_a]),
                chain(&[&x.kron(&ic), &ic.kron(psi), &d_a]),
            ));
            if normalized {
                out.push(ident("normalised", chain(&[x, &ic.kron(eta)]), eps.clone()));
            }
        }
        WitnessKind::IntegralMap => {
            out.push(ident(
                "left diagram",
                chain(&[&x.kron(&ic), &ic.kron(delta)]),
                chain(&[psi, &ic.kron(x), &delta.kron(&ic)]),
            ));
            out.push(ident(
                "right diagram",
                chain(&[mu, &x.kron(&ia)]),
                chain(&[mu, &ia.kron(x), &psi.kron(&ic), &ic.kron(psi)]),
            ));
            if normalized {
                out.push(ident("normalised", chain(&[x, delta]), chain(&[eta, eps])));
            }
        }
        WitnessKind::CointegralMap => {
            out.push(ident(
                "left diagram",
                chain(&[&ia.kron(mu), &x.kron(&ia)]),
                chain(&[&mu.kron(&ia), &ia.kron(x), psi]),
            ));
            out.push(ident(
                "right diagram",
                chain(&[&x.kron(&ic), delta]),
                chain(&[&ia.kron(psi), &psi.kron(&ia), &ic.kron(x), delta]),
            ));
            if normalized {
                out.push(ident("normalised", chain(&[mu, x]), chain(&[eta, eps])));
            }
        }
    }
    out
}

/// Checks a candidate against the identities of `kind`.
pub fn check_witness(kind: WitnessKind, e: &Entwining, x: &LinMap, normalized: bool) -> Result<CheckReport> {
    let (dom, cod) = kind.shapes(e);
    if x.domain().total() != dom.total() || x.codomain().total() != cod.total() {
        return Err(Error::input(format!(
            "{} must map {:?} to {:?}",
            kind.name(),
            dom.factors(),
            cod.factors()
        )));
    }
    let x = x.reshape(dom, cod);
    Ok(report(kind.name(), witness_identities(kind, e, &x, normalized)))
}

/// All solutions, vectorised row-major as maps of [`WitnessKind::shapes`].
pub fn solve_witness(kind: WitnessKind, e: &Entwining, normalized: bool) -> AffineSolutionSet {
    let (dom, cod) = kind.shapes(e);
    solve_identities(e.field(), &dom, &cod, |x| witness_identities(kind, e, x, normalized))
}

/// A verified witness of one of the four kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub value: LinMap,
    pub normalized: bool,
}

impl Witness {
    /// Fails with the first violated identity.
    pub fn new(kind: WitnessKind, e: &Entwining, value: LinMap, normalized: bool) -> Result<Self> {
        check_witness(kind, e, &value, normalized)?.into_result()?;
        let (dom, cod) = kind.shapes(e);
        Ok(Witness {
            kind,
            value: value.reshape(dom, cod),
            normalized,
        })
    }

    /// Rebuilds the map from a vector of a solution set.
    pub fn from_solution(kind: WitnessKind, e: &Entwining, v: &[Scalar], normalized: bool) -> Result<Self> {
        let (dom, cod) = kind.shapes(e);
        if v.len() != dom.total() * cod.total() {
            return Err(Error::input("solution vector has the wrong length"));
        }
        Witness::new(kind, e, LinMap::from_vec(e.field(), &dom, &cod, v), normalized)
    }

    /// The particular solution of [`solve_witness`], if any.
    pub fn find(kind: WitnessKind, e: &Entwining, normalized: bool) -> Option<Witness> {
        let sol = solve_witness(kind, e, normalized);
        let p = sol.particular?;
        Some(Witness::from_solution(kind, e, &p, normalized).expect("solver output satisfies its identities"))
    }
}

/// Which morphism-level map a [`MorphismWitness`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `λ: (C⊗Ã)□_C̃ C -> A`.
    Lambda,
    /// `𝔷: C̃ -> (Ã⊗C)⊗_A Ã`.
    FrakZ,
}

/// `λ` in coordinates of [`LambdaSetup::domain`], or `𝔷` in coordinates of
/// [`FrakzSetup::target`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismWitness {
    pub side: Side,
    pub map: LinMap,
    pub total: bool,
}

/// Spaces and fixed maps for `λ` of a morphism `(f, g)`.
#[derive(Clone, Debug)]
pub struct LambdaSetup {
    mor: EntwiningMorphism,
    /// `(C⊗Ã)□_C̃ C` inside `C⊗Ã⊗C`.
    d: Subspace,
    incl: LinMap,
    coords: LinMap,
    /// `x·a` followed by coordinates, on `D⊗A`.
    act: LinMap,
    /// The two routes of the first diagram before `λ`, on `(C⊗A⊗Ã)□_C̃ C`.
    a_left: LinMap,
    a_right: LinMap,
    /// The two routes of the second diagram before `λ`, on `D`.
    b_left: LinMap,
    b_right: LinMap,
    /// `c ↦ c₁⊗1⊗c₂` in coordinates.
    c_in: LinMap,
}

fn well_defined(what: &str, f: &LinMap, incl: &LinMap, coords: &LinMap) -> Result<LinMap> {
    land(f, incl, coords, what)
}

impl LambdaSetup {
    pub fn new(mor: &EntwiningMorphism) -> Result<Self> {
        let (src, dst) = (&mor.src, &mor.dst);
        let (a, c, at) = (src.dim_a(), src.dim_c(), dst.dim_a());
        let (ia, ic, iat) = (src.id_a(), src.id_c(), dst.id_a());
        let left = left_coaction_via(mor);

        let rho_ca = chain(&[&ic.kron(dst.psi()), &tensor(&[&ic, &mor.g, &iat]), &src.coalg().comult().kron(&iat)]);
        let d = cotensor(c * at, &rho_ca, c, &left);
        let amb = shape(&[c, at, c]);
        let incl = d.inclusion().reshape(flat(d.dim()), amb.clone());
        let coords = d.coordinates().reshape(amb, flat(d.dim()));

        let act_amb = chain(&[
            &tensor(&[&ic, dst.alg().mult(), &ic]),
            &tensor(&[&ic, &iat, &mor.f, &ic]),
            &tensor(&[&ic, &iat, src.psi()]),
        ]);
        let act = well_defined("right A-action on the cotensor", &act_amb.compose(&incl.kron(&ia)), &incl, &coords)?;

        let rho_k = chain(&[
            &tensor(&[&ic, &ia, dst.psi()]),
            &tensor(&[&ic, &ia, &mor.g, &iat]),
            &tensor(&[&ic, src.psi(), &iat]),
            &src.coalg().comult().kron(&ia).kron(&iat),
        ]);
        let k = cotensor(c * a * at, &rho_k, c, &left);
        let k_incl = k.inclusion().reshape(flat(k.dim()), shape(&[c, a, at, c]));
        let a_left = well_defined(
            "ψ⊗Ã⊗C on the cotensor",
            &chain(&[&tensor(&[src.psi(), &iat, &ic]), &k_incl]),
            &ia.kron(&incl),
            &ia.kron(&coords),
        )?;
        let a_right = well_defined(
            "C⊗μ̃(f⊗Ã)⊗C on the cotensor",
            &chain(&[&tensor(&[&ic, dst.alg().mult(), &ic]), &tensor(&[&ic, &mor.f, &iat, &ic]), &k_incl]),
            &incl,
            &coords,
        )?;
        let delta = src.coalg().comult();
        let b_left = well_defined(
            "C⊗Ã⊗Δ on the cotensor",
            &chain(&[&tensor(&[&ic, &iat, delta]), &incl]),
            &incl.kron(&ic),
            &coords.kron(&ic),
        )?;
        let b_right = well_defined(
            "Δ⊗Ã⊗C on the cotensor",
            &chain(&[&tensor(&[delta, &iat, &ic]), &incl]),
            &ic.kron(&incl),
            &ic.kron(&coords),
        )?;
        let c_in = well_defined(
            "C⊗1⊗C on Δ",
            &chain(&[&tensor(&[&ic, dst.alg().unit_map(), &ic]), delta]),
            &incl,
            &coords,
        )?;
        Ok(LambdaSetup {
            mor: mor.clone(),
            d,
            incl,
            coords,
            act,
            a_left,
            a_right,
            b_left,
            b_right,
            c_in,
        })
    }

    pub fn morphism(&self) -> &EntwiningMorphism {
        &self.mor
    }

    /// `(C⊗Ã)□_C̃ C` as a subspace of `C⊗Ã⊗C`.
    pub fn domain(&self) -> &Subspace {
        &self.d
    }

    /// Inclusion `D -> C⊗Ã⊗C` with the ambient shape.
    pub fn inclusion(&self) -> &LinMap {
        &self.incl
    }

    /// Coordinates `C⊗Ã⊗C -> D`, exact on `D`.
    pub fn coordinates(&self) -> &LinMap {
        &self.coords
    }

    pub fn lambda_shapes(&self) -> (TensorShape, TensorShape) {
        (flat(self.d.dim()), flat(self.mor.src.dim_a()))
    }

    pub fn identities(&self, lambda: &LinMap, total: bool) -> Vec<Identity> {
        let src = &self.mor.src;
        let (ia, ic) = (src.id_a(), src.id_c());
        let mu = src.alg().mult();
        let mut out = vec![
            ident("right A-linear", chain(&[lambda, &self.act]), chain(&[mu, &lambda.kron(&ia)])),
            ident(
                "first diagram",
                chain(&[mu, &ia.kron(lambda), &self.a_left]),
                chain(&[lambda, &self.a_right]),
            ),
            ident(
                "second diagram",
                chain(&[&lambda.kron(&ic), &self.b_left]),
                chain(&[src.psi(), &ic.kron(lambda), &self.b_right]),
            ),
        ];
        if total {
            out.push(ident(
                "third diagram",
                chain(&[lambda, &self.c_in]),
                chain(&[src.alg().unit_map(), src.coalg().counit_map()]),
            ));
        }
        out
    }

    pub fn check(&self, w: &MorphismWitness) -> Result<CheckReport> {
        if w.side != Side::Lambda {
            return Err(Error::input("expected a λ witness"));
        }
        let (dom, cod) = self.lambda_shapes();
        if w.map.domain().total() != dom.total() || w.map.codomain().total() != cod.total() {
            return Err(Error::input("λ has the wrong shape"));
        }
        let m = w.map.reshape(dom, cod);
        Ok(report("lambda", self.identities(&m, w.total)))
    }

    pub fn solve(&self, total: bool) -> AffineSolutionSet {
        let (dom, cod) = self.lambda_shapes();
        solve_identities(self.mor.field(), &dom, &cod, |x| self.identities(x, total))
    }

    pub fn witness(&self, v: &[Scalar], total: bool) -> Result<MorphismWitness> {
        let (dom, cod) = self.lambda_shapes();
        let w = MorphismWitness {
            side: Side::Lambda,
            map: LinMap::from_vec(self.mor.field(), &dom, &cod, v),
            total,
        };
        self.check(&w)?.into_result()?;
        Ok(w)
    }
}

/// Spaces and fixed maps for `𝔷` of a morphism `(f, g)`.
#[derive(Clone, Debug)]
pub struct FrakzSetup {
    mor: EntwiningMorphism,
    /// `(Ã⊗C)⊗_A Ã` as a quotient of `Ã⊗C⊗Ã`.
    q: Quotient,
    coaction: LinMap,
    a_left: LinMap,
    a_right: LinMap,
    b_left: LinMap,
    b_right: LinMap,
    c_out: LinMap,
}

fn factor(what: &str, f: &LinMap, rel: &LinMap, section: &LinMap) -> Result<LinMap> {
    crate::entmod::descend(f, rel, section, what)
}

impl FrakzSetup {
    pub fn new(mor: &EntwiningMorphism) -> Result<Self> {
        let (src, dst) = (&mor.src, &mor.dst);
        let (c, at, ct) = (src.dim_c(), dst.dim_a(), dst.dim_c());
        let (ic, iat, ict) = (src.id_c(), dst.id_a(), dst.id_c());
        let mut_ = dst.alg().mult();
        let left = left_action_via(mor);

        let act = chain(&[&mut_.kron(&ic), &tensor(&[&iat, &mor.f, &ic]), &iat.kron(src.psi())]);
        let q = tensor_over(at * c, &act, at, &left);
        let amb = shape(&[at, c, at]);
        let pi = q.projection().reshape(amb.clone(), flat(q.dim()));
        let sigma = q.section().reshape(flat(q.dim()), amb.clone());
        let rel = q.kernel().inclusion();
        let rel = rel.reshape(rel.domain().clone(), amb);

        let delta = src.coalg().comult();
        let co_amb = chain(&[
            &pi.kron(&ict),
            &tensor(&[&iat, &ic, dst.psi()]),
            &tensor(&[&iat, &ic, &mor.g, &iat]),
            &tensor(&[&iat, delta, &iat]),
        ]);
        let coaction = factor("coaction on (Ã⊗C)⊗_A Ã", &co_amb, &rel, &sigma)?;

        let act3 = chain(&[
            &tensor(&[mut_, &ict, &ic]),
            &tensor(&[&iat, dst.psi(), &ic]),
            &tensor(&[&iat, &ict, &mor.f, &ic]),
            &tensor(&[&iat, &ict, src.psi()]),
        ]);
        let q3 = tensor_over(at * ct * c, &act3, at, &left);
        let pi3 = q3.projection().reshape(shape(&[at, ct, c, at]), flat(q3.dim()));

        let a_left = factor(
            "Ã⊗(g⊗C)Δ⊗Ã on the balanced tensor",
            &chain(&[&pi3, &tensor(&[&iat, &mor.g, &ic, &iat]), &tensor(&[&iat, delta, &iat])]),
            &rel,
            &sigma,
        )?;
        let a_right = factor(
            "ψ̃⊗C⊗Ã on the balanced tensor",
            &chain(&[&pi3, &tensor(&[dst.psi(), &ic, &iat])]),
            &ict.kron(&rel),
            &ict.kron(&sigma),
        )?;
        let b_left = factor(
            "left Ã-multiplication on the balanced tensor",
            &chain(&[&pi, &tensor(&[mut_, &ic, &iat])]),
            &iat.kron(&rel),
            &iat.kron(&sigma),
        )?;
        let b_right = factor(
            "right Ã-multiplication on the balanced tensor",
            &chain(&[&pi, &tensor(&[&iat, &ic, mut_])]),
            &rel.kron(&iat),
            &sigma.kron(&iat),
        )?;
        let c_out = factor(
            "Ã⊗ε⊗Ã followed by μ̃",
            &chain(&[mut_, &tensor(&[&iat, src.coalg().counit_map(), &iat])]),
            &rel,
            &sigma,
        )?;
        Ok(FrakzSetup {
            mor: mor.clone(),
            q,
            coaction,
            a_left,
            a_right,
            b_left,
            b_right,
            c_out,
        })
    }

    pub fn morphism(&self) -> &EntwiningMorphism {
        &self.mor
    }

    /// `(Ã⊗C)⊗_A Ã`.
    pub fn target(&self) -> &Quotient {
        &self.q
    }

    pub fn frakz_shapes(&self) -> (TensorShape, TensorShape) {
        (flat(self.mor.dst.dim_c()), flat(self.q.dim()))
    }

    pub fn identities(&self, z: &LinMap, total: bool) -> Vec<Identity> {
        let dst = &self.mor.dst;
        let (iat, ict) = (dst.id_a(), dst.id_c());
        let delta_t = dst.coalg().comult();
        let mut out = vec![
            ident("C̃-colinear", chain(&[&self.coaction, z]), chain(&[&z.kron(&ict), delta_t])),
            ident(
                "first diagram",
                chain(&[&self.a_left, z]),
                chain(&[&self.a_right, &ict.kron(z), delta_t]),
            ),
            ident(
                "second diagram",
                chain(&[&self.b_left, &iat.kron(z), dst.psi()]),
                chain(&[&self.b_right, &z.kron(&iat)]),
            ),
        ];
        if total {
            out.push(ident(
                "third diagram",
                chain(&[&self.c_out, z]),
                chain(&[dst.alg().unit_map(), dst.coalg().counit_map()]),
            ));
        }
        out
    }

    pub fn check(&self, w: &MorphismWitness) -> Result<CheckReport> {
        if w.side != Side::FrakZ {
            return Err(Error::input("expected a 𝔷 witness"));
        }
        let (dom, cod) = self.frakz_shapes();
        if w.map.domain().total() != dom.total() || w.map.codomain().total() != cod.total() {
            return Err(Error::input("𝔷 has the wrong shape"));
        }
        let m = w.map.reshape(dom, cod);
        Ok(report("frakz", self.identities(&m, w.total)))
    }

    pub fn solve(&self, total: bool) -> AffineSolutionSet {
        let (dom, cod) = self.frakz_shapes();
        solve_identities(self.mor.field(), &dom, &cod, |x| self.identities(x, total))
    }

    pub fn witness(&self, v: &[Scalar], total: bool) -> Result<MorphismWitness> {
        let (dom, cod) = self.frakz_shapes();
        let w = MorphismWitness {
            side: Side::FrakZ,
            map: LinMap::from_vec(self.mor.field(), &dom, &cod, v),
            total,
        };
        self.check(&w)?.into_result()?;
        Ok(w)
    }
}

/// All totally integrating `λ`, in coordinates of [`LambdaSetup::domain`].
pub fn solve_total_integrability(mor: &EntwiningMorphism) -> Result<AffineSolutionSet> {
    Ok(LambdaSetup::new(mor)?.solve(true))
}

/// All totally cointegrating `𝔷`, in coordinates of [`FrakzSetup::target`].
pub fn solve_total_cointegrability(mor: &EntwiningMorphism) -> Result<AffineSolutionSet> {
    Ok(FrakzSetup::new(mor)?.solve(true))
}

fn columns_of(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Solves `t · L = target` column by column; `None` if some column is not in
/// the image of `t`.
fn lift_through(t: &Matrix, target: &Matrix) -> Option<Matrix> {
    let f = t.field();
    let tm = LinMap::from_parts(flat(t.cols()), flat(t.rows()), t.clone());
    let mut cols = Vec::with_capacity(target.cols());
    for col in columns_of(target) {
        cols.push(solve_affine(&tm, &col).ok()?.particular?);
    }
    Some(Matrix::from_columns(f, t.cols(), &cols))
}

/// `ν_M: (M⊗_A Ã)□_C̃ C -> M`, `m⊗ã⊗c ↦ m₀·λ(m₁⊗ã⊗c)`, in coordinates of
/// the coinduced module; verified to be a morphism splitting `Φ_M`.
pub fn nu_from_lambda(setup: &LambdaSetup, lambda: &MorphismWitness, m: &EntwinedModule) -> Result<LinMap> {
    if lambda.side != Side::Lambda || !lambda.total {
        return Err(Error::Precondition("ν needs a total λ".into()));
    }
    setup.check(lambda)?.into_result()?;
    let mor = &setup.mor;
    let fl = mor.field();
    let (src, dst) = (&mor.src, &mor.dst);
    let (c, at) = (src.dim_c(), dst.dim_a());
    let dm = m.dim();
    let (ic, iat, im) = (src.id_c(), dst.id_a(), id(fl, dm));

    let fm = induce(mor, m)?;
    let gfm = coinduce(mor, &fm.module)?;

    // representatives: (M⊗Ã)□_C̃ C
    let rho_ma = chain(&[&im.kron(dst.psi()), &tensor(&[&im, &mor.g, &iat]), &m.coaction().kron(&iat)]);
    let k = cotensor(dm * at, &rho_ma, c, &left_coaction_via(mor));
    let k_incl = k.inclusion().reshape(flat(k.dim()), shape(&[dm, at, c]));
    let to_gf = chain(&[&fm.quotient.projection().kron(&ic), &k_incl]);
    let target = gfm.sub.inclusion();
    let lift = lift_through(to_gf.matrix(), target.matrix())
        .ok_or_else(|| Error::Inconsistency("coinduced module is not covered by representatives".into()))?;
    let lift = LinMap::from_parts(flat(gfm.sub.dim()), flat(k.dim()), lift);

    let lam_hat = chain(&[&lambda.map, &setup.coords]);
    let nu_amb = chain(&[m.action(), &im.kron(&lam_hat), &m.coaction().kron(&iat).kron(&ic)]);
    let nu_k = nu_amb.compose(&k_incl);
    let ker = Subspace::from_rows(
        &flat(k.dim()),
        &Matrix::from_rows(fl, k.dim(), to_gf.matrix().kernel_basis()),
    );
    if !nu_k.compose(&ker.inclusion()).is_zero() {
        return Err(Error::Inconsistency("ν depends on the choice of representatives".into()));
    }
    let nu = nu_k.compose(&lift);

    let r = is_morphism(&gfm.module, m, &nu);
    if !r.passed() {
        return Err(Error::Inconsistency(format!("ν is not a morphism: {r}")));
    }
    let phi = adjunction_unit(mor, m)?;
    if !nu.compose(&phi).same_map(&im) {
        return Err(Error::Inconsistency("ν does not split the unit of the adjunction".into()));
    }
    Ok(nu)
}

/// `λ = (A⊗ε)∘ν_{A⊗C}∘(1_A⊗-)`, re-verified as a total λ.
pub fn lambda_from_nu(setup: &LambdaSetup, nu_on_ac: &LinMap) -> Result<MorphismWitness> {
    let mor = &setup.mor;
    let fl = mor.field();
    let src = &mor.src;
    let (a, c) = (src.dim_a(), src.dim_c());
    let (ia, ic, iat) = (src.id_a(), src.id_c(), mor.dst.id_a());
    let ac = standard_module(StandardKind::ModTensorC, a, src.alg().mult(), src)?;
    let fm = induce(mor, &ac)?;
    let gfm = coinduce(mor, &fm.module)?;
    if nu_on_ac.domain().total() != gfm.sub.dim() || nu_on_ac.codomain().total() != a * c {
        return Err(Error::input("ν must map the coinduced A⊗C back to A⊗C"));
    }
    let nu = nu_on_ac.reshape(flat(gfm.sub.dim()), flat(a * c));
    let r = is_morphism(&gfm.module, &ac, &nu);
    if !r.passed() {
        return Err(Error::Inconsistency(format!("ν is not a morphism: {r}")));
    }
    let phi = adjunction_unit(mor, &ac)?;
    if !nu.compose(&phi).same_map(&id(fl, a * c)) {
        return Err(Error::Inconsistency("ν does not split the unit of the adjunction".into()));
    }
    let into = chain(&[
        &fm.quotient.projection().kron(&ic),
        &tensor(&[src.alg().unit_map(), &ic, &iat, &ic]),
        setup.inclusion(),
    ]);
    let into = land(&into, &gfm.sub.inclusion(), &gfm.sub.coordinates(), "1_A⊗D in the coinduced module")?;
    let lam = chain(&[&ia.kron(src.coalg().counit_map()), &nu, &into]);
    let (dom, cod) = setup.lambda_shapes();
    let w = MorphismWitness {
        side: Side::Lambda,
        map: lam.reshape(dom, cod),
        total: true,
    };
    let rep = setup.check(&w)?;
    if !rep.passed() {
        return Err(Error::Inconsistency(format!("extracted λ fails: {rep}")));
    }
    Ok(w)
}

fn require_counit_morphism(setup: &LambdaSetup) -> Result<()> {
    let mor = &setup.mor;
    if *mor != EntwiningMorphism::counit_morphism(&mor.src) {
        return Err(Error::Precondition("expected the morphism (A, ε_C)".into()));
    }
    Ok(())
}

/// `γ = λ∘(C⊗1_A⊗C)` for the morphism `(A, ε_C)`.
pub fn integral_map_from_lambda(setup: &LambdaSetup, lambda: &LinMap) -> Result<LinMap> {
    require_counit_morphism(setup)?;
    let e = &setup.mor.src;
    let (ic, c) = (e.id_c(), e.dim_c());
    let into = chain(&[setup.coordinates(), &tensor(&[&ic, e.alg().unit_map(), &ic])]);
    Ok(chain(&[lambda, &into]).reshape(shape(&[c, c]), flat(e.dim_a())))
}

/// `λ(c⊗a⊗c′) = a_α γ(c^α⊗c′)` for the morphism `(A, ε_C)`.
pub fn lambda_from_integral_map(setup: &LambdaSetup, gamma: &LinMap) -> Result<LinMap> {
    require_counit_morphism(setup)?;
    let e = &setup.mor.src;
    let (ia, ic) = (e.id_a(), e.id_c());
    let hat = chain(&[e.alg().mult(), &ia.kron(gamma), &e.psi().kron(&ic)]);
    Ok(hat.compose(setup.inclusion()).reshape(flat(setup.d.dim()), flat(e.dim_a())))
}

/// Hypotheses from which a witness is built in closed form.
#[derive(Clone, Debug)]
pub enum StructureData<'a> {
    /// `Λ ∈ C` with `Λ·a = ε(a)Λ` and `ε_C(Λ) = 1` for a right action of `A`
    /// on `C`; gives the integral `1⊗Λ`.
    InvariantElement {
        ent: &'a Entwining,
        action: &'a LinMap,
        lambda: &'a [Scalar],
        counit_a: &'a [Scalar],
    },
    /// `κ: A -> k` with `κ(1) = 1` and `κ(a)1_C = κ(a₀)a₁` for a coaction
    /// `ρ^A`; gives the cointegral `ε_C⊗κ`.
    CasimirFunctional {
        ent: &'a Entwining,
        coaction: &'a LinMap,
        unit_c: &'a [Scalar],
        kappa: &'a [Scalar],
    },
    /// The cotranslation map of a pointed coextension.
    Cotranslation { coext: &'a Coextension },
    /// `can⁻¹∘(1_A⊗C)` of a Galois extension of the ground field.
    CanInvUnit { ext: &'a GaloisExtension },
}

fn hypothesis(name: &str, lhs: &LinMap, rhs: &LinMap) -> Result<()> {
    let mut r = CheckReport::new("hypothesis");
    r.compare(name, lhs, rhs);
    r.into_result()
}

/// Builds the witness and re-verifies it with [`check_witness`].
pub fn witness_from_structure(data: StructureData<'_>) -> Result<(Entwining, Witness)> {
    match data {
        StructureData::InvariantElement { ent, action, lambda, counit_a } => {
            let f = ent.field();
            let (a, c) = (ent.dim_a(), ent.dim_c());
            if lambda.len() != c || counit_a.len() != a {
                return Err(Error::input("Λ must lie in C and ε_A must be a covector on A"));
            }
            if action.domain().total() != c * a || action.codomain().total() != c {
                return Err(Error::input("action must map C⊗A to C"));
            }
            let action = action.reshape(shape(&[c, a]), flat(c));
            let l = LinMap::from_vector(f, &flat(c), lambda);
            let eps_a = LinMap::from_covector(f, &flat(a), counit_a);
            hypothesis("Λ·a = ε(a)Λ", &chain(&[&action, &l.kron(&ent.id_a())]), &l.compose(&eps_a))?;
            hypothesis("ε(Λ) = 1", &chain(&[ent.coalg().counit_map(), &l]), &id(f, 1))?;
            let z = ent.alg().unit_map().kron(&l);
            Ok((ent.clone(), Witness::new(WitnessKind::Integral, ent, z, true)?))
        }
        StructureData::CasimirFunctional { ent, coaction, unit_c, kappa } => {
            let f = ent.field();
            let (a, c) = (ent.dim_a(), ent.dim_c());
            if kappa.len() != a || unit_c.len() != c {
                return Err(Error::input("κ must be a covector on A and 1_C a vector in C"));
            }
            let rho = crate::galois::verify_coaction(ent.alg(), ent.coalg(), coaction)?;
            let k = LinMap::from_covector(f, &flat(a), kappa);
            let one_c = LinMap::from_vector(f, &flat(c), unit_c);
            hypothesis("κ(1) = 1", &chain(&[&k, ent.alg().unit_map()]), &id(f, 1))?;
            hypothesis("κ(a)1_C = κ(a₀)a₁", &chain(&[&one_c, &k]), &chain(&[&k.kron(&ent.id_c()), &rho]))?;
            let y = ent.coalg().counit_map().kron(&k);
            Ok((ent.clone(), Witness::new(WitnessKind::Cointegral, ent, y, true)?))
        }
        StructureData::Cotranslation { coext } => {
            let g = coext.cotranslation_map()?;
            let e = &coext.entwining;
            Ok((e.clone(), Witness::new(WitnessKind::IntegralMap, e, g, true)?))
        }
        StructureData::CanInvUnit { ext } => {
            if ext.b.dim() != 1 {
                return Err(Error::Precondition("can⁻¹(1⊗-) needs an extension of the ground field".into()));
            }
            let e = &ext.entwining;
            let d = e.dim_a();
            let zeta = chain(&[
                &ext.a_tens_b_a.section().reshape(flat(d * d), shape(&[d, d])),
                &ext.can_inv,
                &e.alg().unit_map().kron(&e.id_c()),
            ]);
            Ok((e.clone(), Witness::new(WitnessKind::CointegralMap, e, zeta, true)?))
        }
    }
}
