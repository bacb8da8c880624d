//! Separable, split and strongly separable coalgebra-Galois extensions, and
//! coseparable coextensions.

use crate::check::CheckReport;
use crate::entmod::land;
use crate::error::{Error, Result};
use crate::exactla::{
    chain, tensor, AffineSolutionSet, Field, LinMap, Quotient, Scalar, Subspace, TensorShape,
};
use crate::galois::{Coextension, GaloisExtension};
use crate::witness::{
    check_witness, ident, report, solve_identities, solve_witness, Identity, Witness, WitnessKind,
};

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

/// `u ∈ A⊗_B A` with `a·u = u·a` and `μ_B(u) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityCertificate {
    /// Coordinates in `A⊗_B A`.
    pub u: Vec<Scalar>,
    /// The representative in `A⊗A` given by the quotient section.
    pub u_rep: Vec<Scalar>,
    pub integral: Witness,
}

/// Both separability-idempotent identities for `u` in quotient coordinates.
pub fn verify_idempotent(g: &GaloisExtension, u: &[Scalar]) -> CheckReport {
    let mut r = CheckReport::new("separability idempotent");
    let f = g.field();
    let uq = LinMap::from_vector(f, &flat(g.a_tens_b_a.dim()), u);
    for j in 0..g.alg.dim() {
        let a = g.alg.basis(j);
        r.compare(
            format!("a·u = u·a for basis element {j}"),
            &g.left_mult_q(&a).compose(&uq),
            &g.right_mult_q(&a).compose(&uq),
        );
    }
    r.compare("μ_B(u) = 1", &g.mu_b().compose(&uq), g.alg.unit_map());
    r
}

/// `u = can⁻¹(𝔷)` for a normalised integral `𝔷`.
pub fn separability_from_integral(g: &GaloisExtension, z: &Witness) -> Result<SeparabilityCertificate> {
    if z.kind != WitnessKind::Integral || !z.normalized {
        return Err(Error::Precondition("expected a normalised integral".into()));
    }
    check_witness(z.kind, &g.entwining, &z.value, true)?.into_result()?;
    let u = g.can_inv.compose(&z.value).matrix().column(0);
    let rep = verify_idempotent(g, &u);
    if !rep.passed() {
        return Err(Error::Inconsistency(format!("can⁻¹ of an integral fails: {rep}")));
    }
    let u_rep = g.a_tens_b_a.section().apply(&u);
    Ok(SeparabilityCertificate {
        u,
        u_rep,
        integral: z.clone(),
    })
}

/// Present iff a normalised integral exists.
pub fn check_separable(g: &GaloisExtension) -> Option<SeparabilityCertificate> {
    let z = Witness::find(WitnessKind::Integral, &g.entwining, true)?;
    Some(separability_from_integral(g, &z).expect("integral yields an idempotent"))
}

/// `φ: C -> A` and the conditional expectation `E(a) = a₀φ(a₁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub phi: LinMap,
    pub e: LinMap,
}

/// The three conditions on `φ`, with `ρ^A(1)` written `R`.
pub fn phi_identities(g: &GaloisExtension, phi: &LinMap) -> Vec<Identity> {
    let e = &g.entwining;
    let (ia, ic) = (e.id_a(), e.id_c());
    let mu = e.alg().mult();
    let r1 = g.rho_a.compose(e.alg().unit_map());
    let ib = g.b.inclusion();
    vec![
        ident(
            "ψ(C⊗φ)Δ = φ·ρ(1)",
            chain(&[e.psi(), &ic.kron(phi), e.coalg().comult()]),
            chain(&[&mu.kron(&ic), &phi.kron(&r1)]),
        ),
        ident("μ(A⊗φ)ρ(1) = 1", chain(&[mu, &ia.kron(phi), &r1]), e.alg().unit_map().clone()),
        ident(
            "b_α φ(c^α) = φ(c) b",
            chain(&[mu, &ia.kron(phi), e.psi(), &ic.kron(&ib)]),
            chain(&[mu, &phi.kron(&ib)]),
        ),
    ]
}

fn phi_shapes(g: &GaloisExtension) -> (TensorShape, TensorShape) {
    (flat(g.coalg.dim()), flat(g.alg.dim()))
}

/// All `φ` satisfying the three conditions.
pub fn solve_phi(g: &GaloisExtension) -> AffineSolutionSet {
    let (dom, cod) = phi_shapes(g);
    solve_identities(g.field(), &dom, &cod, |x| phi_identities(g, x))
}

pub fn check_phi(g: &GaloisExtension, phi: &LinMap) -> CheckReport {
    report("split map", phi_identities(g, phi))
}

/// `E = μ(A⊗φ)ρ^A`.
pub fn expectation(g: &GaloisExtension, phi: &LinMap) -> LinMap {
    chain(&[g.alg.mult(), &g.alg.identity().kron(phi), &g.rho_a])
}

/// Unital `(B, B)`-bimodule map `A -> A` with image in `B`.
pub fn verify_expectation(g: &GaloisExtension, e: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("conditional expectation");
    let alg = &g.alg;
    r.compare("unital", &e.compose(alg.unit_map()), alg.unit_map());
    let outside = (0..alg.dim()).find(|&j| !g.b.contains(&e.matrix().column(j)));
    r.require("image in B", outside.is_none(), outside.map(|j| vec![j]));
    let ib = g.b.inclusion();
    let ia = alg.identity();
    let mu = alg.mult();
    let mu3 = chain(&[mu, &mu.kron(&ia)]);
    r.compare(
        "E(bab') = bE(a)b'",
        &chain(&[e, &mu3, &tensor(&[&ib, &ia, &ib])]),
        &chain(&[&mu3, &tensor(&[&ib, e, &ib])]),
    );
    r
}

/// Builds `E` from `φ` and verifies both the conditions and `E`.
pub fn split_from_phi(g: &GaloisExtension, phi: &LinMap) -> Result<SplitCertificate> {
    let (dom, cod) = phi_shapes(g);
    if phi.domain().total() != dom.total() || phi.codomain().total() != cod.total() {
        return Err(Error::input("φ must map C to A"));
    }
    let phi = phi.reshape(dom, cod);
    check_phi(g, &phi).into_result()?;
    let e = expectation(g, &phi);
    let rep = verify_expectation(g, &e);
    if !rep.passed() {
        return Err(Error::Inconsistency(format!("E built from φ fails: {rep}")));
    }
    Ok(SplitCertificate { phi, e })
}

/// Solver output for splitness: the `φ` family and, if feasible, a
/// certificate from its particular member.
#[derive(Clone, Debug)]
pub struct SplitReport {
    pub family: AffineSolutionSet,
    pub certificate: Option<SplitCertificate>,
}

impl SplitReport {
    /// A split coalgebra-Galois extension is faithfully flat on the left
    /// over `B`; recorded as a consequence, not checked independently.
    pub fn left_faithfully_flat(&self) -> bool {
        self.certificate.is_some()
    }
}

pub fn check_split(g: &GaloisExtension) -> Result<SplitReport> {
    let family = solve_phi(g);
    let certificate = match &family.particular {
        None => None,
        Some(p) => {
            let (dom, cod) = phi_shapes(g);
            Some(split_from_phi(g, &LinMap::from_vec(g.field(), &dom, &cod, p))?)
        }
    };
    Ok(SplitReport { family, certificate })
}

/// `φ(c) = a^i_α γ(c^α⊗c_i)` with `Σ a^i⊗c_i = ρ^A(1)`.
pub fn split_from_integral_map(g: &GaloisExtension, gamma: &Witness) -> Result<SplitCertificate> {
    if gamma.kind != WitnessKind::IntegralMap || !gamma.normalized {
        return Err(Error::Precondition("expected a normalised integral map".into()));
    }
    let e = &g.entwining;
    check_witness(gamma.kind, e, &gamma.value, true)?.into_result()?;
    let (ia, ic) = (e.id_a(), e.id_c());
    let r1 = g.rho_a.compose(e.alg().unit_map());
    let phi = chain(&[e.alg().mult(), &ia.kron(&gamma.value), &e.psi().kron(&ic), &ic.kron(&r1)]);
    split_from_phi(g, &phi.reshape(flat(e.dim_c()), flat(e.dim_a())))
        .map_err(|err| Error::Inconsistency(format!("φ from an integral map: {err}")))
}

/// `φ = (A⊗_B E)∘can⁻¹∘(1_A⊗C)`.
pub fn phi_from_expectation(g: &GaloisExtension, e: &LinMap) -> LinMap {
    let alg = &g.alg;
    let d = alg.dim();
    chain(&[
        alg.mult(),
        &alg.identity().kron(e),
        &g.a_tens_b_a.section().reshape(flat(d * d), TensorShape::new(vec![d, d])),
        &g.can_inv,
        &alg.unit_map().kron(&g.coalg.identity()),
    ])
    .reshape(flat(g.coalg.dim()), flat(d))
}

/// Separability idempotent, conditional expectation and the unit `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCertificate {
    pub cert: SeparabilityCertificate,
    pub split: SplitCertificate,
    pub tau: Scalar,
}

/// How [`check_strongly_separable`] looks for `(u, E, τ)`.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// Verify a supplied idempotent (quotient coordinates), expectation and
    /// optional `τ`.
    GivenWitnesses {
        u: Vec<Scalar>,
        e: LinMap,
        tau: Option<Scalar>,
    },
    /// Try `particular + Σ t_i basis_i` for integers `|t_i| ≤ radius` in
    /// both the integral and the `φ` families, lexicographically, up to
    /// `max_points` pairs.
    SearchParticulars { radius: i64, max_points: usize },
    /// Fix the particular normalised integral and solve for `φ` with
    /// `Σ a_i φ(c_i) ∈ k·1`.
    FixedIntegralLinearPhi,
}

#[derive(Clone, Debug)]
pub struct StrongOutcome {
    pub certificate: Option<StrongCertificate>,
    /// The search ended without exhausting the possibilities.
    pub inconclusive: bool,
    /// Whether `A` was shown free as a right `B`-module; `None` when the
    /// strategy does not rely on it.
    pub right_free: Option<bool>,
    pub diagnostic: Option<String>,
}

impl StrongOutcome {
    fn absent(inconclusive: bool, right_free: Option<bool>, why: impl Into<String>) -> Self {
        StrongOutcome {
            certificate: None,
            inconclusive,
            right_free,
            diagnostic: Some(why.into()),
        }
    }
}

/// `τ` from `Σ u_i E(u^i) = τ·1`, then both defining identities checked on
/// every basis element.
pub fn strong_tau(g: &GaloisExtension, u_rep: &[Scalar], e: &LinMap) -> Result<Scalar> {
    let f = g.field();
    let alg = &g.alg;
    let d = alg.dim();
    let ia = alg.identity();
    let mu = alg.mult();
    let u = LinMap::from_vector(f, &TensorShape::new(vec![d, d]), u_rep);
    // a ↦ Σ E(a u_i) u^i and a ↦ Σ u_i E(u^i a)
    let left = chain(&[mu, &e.kron(&ia), &mu.kron(&ia), &ia.kron(&u)]);
    let right = chain(&[mu, &ia.kron(e), &ia.kron(mu), &u.kron(&ia)]);
    let at_one = right.compose(alg.unit_map()).matrix().column(0);
    let one = alg.unit();
    let i0 = one.iter().position(|s| !s.is_zero()).expect("nonzero unit");
    let tau = &at_one[i0] * &one[i0].inv().expect("nonzero");
    let scaled = ia.scale(&tau);
    let mut r = CheckReport::new("strong separability");
    r.compare("Σ E(a u_i) u^i = τ a", &left, &scaled);
    r.compare("Σ u_i E(u^i a) = τ a", &right, &scaled);
    r.into_result()?;
    if tau.is_zero() {
        return Err(Error::Domain("τ = 0 is not a unit".into()));
    }
    Ok(tau)
}

/// Greedy search for a right `B`-basis of `A`.
pub fn right_free_over_b(g: &GaloisExtension) -> bool {
    let (d, db) = (g.alg.dim(), g.b.dim());
    if db == 0 || d % db != 0 {
        return false;
    }
    let f = g.field();
    let bb = g.b.basis();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    let mut span = Subspace::zero(f, &flat(d));
    for j in 0..d {
        let x = g.alg.basis(j);
        let xb: Vec<Vec<Scalar>> = bb.iter().map(|b| g.alg.product(&x, b)).collect();
        let mut all = span.basis();
        all.extend(xb);
        let next = Subspace::span(f, &flat(d), &all);
        if next.dim() == span.dim() + db {
            span = next;
            gens.push(x);
        }
    }
    span.dim() == d
}

fn strong_from(g: &GaloisExtension, z: &Witness, phi: &LinMap) -> Result<StrongCertificate> {
    let cert = separability_from_integral(g, z)?;
    let split = split_from_phi(g, phi)?;
    let tau = strong_tau(g, &cert.u_rep, &split.e)?;
    Ok(StrongCertificate { cert, split, tau })
}

fn grid(dim: usize, radius: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (2 * radius + 1) as u64;
    let total = width.checked_pow(dim as u32).unwrap_or(u64::MAX);
    (0..total).map(move |mut k| {
        let mut v = vec![0i64; dim];
        for slot in v.iter_mut().rev() {
            *slot = (k % width) as i64 - radius;
            k /= width;
        }
        v
    })
}

fn member(f: Field, s: &AffineSolutionSet, t: &[i64]) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = t.iter().map(|&x| f.from_i64(x)).collect();
    s.member(&coeffs).expect("feasible family")
}

pub fn check_strongly_separable(g: &GaloisExtension, strategy: &Strategy) -> Result<StrongOutcome> {
    let f = g.field();
    let e = &g.entwining;
    let (pd, pc) = phi_shapes(g);
    match strategy {
        Strategy::GivenWitnesses { u, e: ex, tau } => {
            if u.len() != g.a_tens_b_a.dim() {
                return Err(Error::input("u must be given in A⊗_B A coordinates"));
            }
            verify_idempotent(g, u).into_result()?;
            let z = g.can.apply(u);
            let zm = LinMap::from_vector(f, &TensorShape::new(vec![g.alg.dim(), g.coalg.dim()]), &z);
            let integral = Witness::new(WitnessKind::Integral, e, zm, true)?;
            verify_expectation(g, ex).into_result()?;
            let u_rep = g.a_tens_b_a.section().apply(u);
            let t = strong_tau(g, &u_rep, ex)?;
            if let Some(given) = tau {
                if *given != t {
                    return Err(Error::Domain(format!("supplied τ = {given} but the identities give {t}")));
                }
            }
            let phi = phi_from_expectation(g, ex);
            let split = SplitCertificate { phi, e: ex.clone() };
            let cert = SeparabilityCertificate { u: u.clone(), u_rep, integral };
            Ok(StrongOutcome {
                certificate: Some(StrongCertificate { cert, split, tau: t }),
                inconclusive: false,
                right_free: None,
                diagnostic: None,
            })
        }
        Strategy::SearchParticulars { radius, max_points } => {
            let zs = solve_witness(WitnessKind::Integral, e, true);
            if !zs.is_feasible() {
                return Ok(StrongOutcome::absent(false, None, "no normalised integral"));
            }
            let ps = solve_phi(g);
            if !ps.is_feasible() {
                return Ok(StrongOutcome::absent(false, None, "not split"));
            }
            let mut tried = 0usize;
            for tz in grid(zs.dim(), *radius) {
                let z = Witness::from_solution(WitnessKind::Integral, e, &member(f, &zs, &tz), true)?;
                for tp in grid(ps.dim(), *radius) {
                    if tried >= *max_points {
                        return Ok(StrongOutcome::absent(true, None, "search budget exhausted"));
                    }
                    tried += 1;
                    let phi = LinMap::from_vec(f, &pd, &pc, &member(f, &ps, &tp));
                    if let Ok(c) = strong_from(g, &z, &phi) {
                        return Ok(StrongOutcome {
                            certificate: Some(c),
                            inconclusive: false,
                            right_free: None,
                            diagnostic: None,
                        });
                    }
                }
            }
            Ok(StrongOutcome::absent(true, None, "no grid point works"))
        }
        Strategy::FixedIntegralLinearPhi => {
            let free = right_free_over_b(g);
            let Some(z) = Witness::find(WitnessKind::Integral, e, true) else {
                return Ok(StrongOutcome::absent(false, Some(free), "no normalised integral"));
            };
            let ia = e.id_a();
            let mu = e.alg().mult();
            let units = Quotient::new(Subspace::span(f, &flat(e.dim_a()), &[e.alg().unit()]));
            let p = units.projection();
            let zv = &z.value;
            let fam = solve_identities(f, &pd, &pc, |phi| {
                let mut ids = phi_identities(g, phi);
                let s = chain(&[&p, mu, &ia.kron(phi), zv]);
                let zero = LinMap::zero(f, s.domain(), s.codomain());
                ids.push(ident("Σ a_i φ(c_i) ∈ k·1", s, zero));
                ids
            });
            let Some(p0) = fam.particular.clone() else {
                return Ok(StrongOutcome::absent(!free, Some(free), "no φ with Σ a_i φ(c_i) ∈ k·1"));
            };
            let tau_of = |v: &[Scalar]| {
                let phi = LinMap::from_vec(f, &pd, &pc, v);
                let s = chain(&[mu, &ia.kron(&phi), zv]).matrix().column(0);
                let one = e.alg().unit();
                let i0 = one.iter().position(|x| !x.is_zero()).expect("nonzero unit");
                &s[i0] * &one[i0].inv().expect("nonzero")
            };
            let mut choice = p0.clone();
            if tau_of(&p0).is_zero() {
                let zero_v = vec![f.zero(); p0.len()];
                let lin = |b: &[Scalar]| {
                    let t = tau_of(b);
                    let t0 = tau_of(&zero_v);
                    &t - &t0
                };
                match fam.homogeneous.basis().into_iter().find(|b| !lin(b).is_zero()) {
                    Some(b) => {
                        for (x, y) in choice.iter_mut().zip(&b) {
                            *x = &*x + y;
                        }
                    }
                    None => {
                        return Ok(StrongOutcome::absent(!free, Some(free), "τ vanishes on the whole φ family"));
                    }
                }
            }
            let phi = LinMap::from_vec(f, &pd, &pc, &choice);
            match strong_from(g, &z, &phi) {
                Ok(c) => Ok(StrongOutcome {
                    certificate: Some(c),
                    inconclusive: false,
                    right_free: Some(free),
                    diagnostic: if free { None } else { Some("freeness of A over B unverified".into()) },
                }),
                Err(err) => Ok(StrongOutcome::absent(true, Some(free), err.to_string())),
            }
        }
    }
}

/// `υ: C□_B C -> k` with `(C⊗υ)(Δ⊗C) = (υ⊗C)(C⊗Δ)` and `υΔ = ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoseparabilityCertificate {
    /// In coordinates of the cotensor subspace.
    pub upsilon: LinMap,
    pub cointegral: Witness,
}

pub fn verify_upsilon(x: &Coextension, upsilon: &LinMap) -> Result<CheckReport> {
    let c = &x.coalg;
    let ic = c.identity();
    let incl = x.cotensor.inclusion();
    let coords = x.cotensor.coordinates();
    let delta = c.comult();
    let left_in = land(
        &chain(&[&delta.kron(&ic), &incl]),
        &ic.kron(&incl),
        &ic.kron(&coords),
        "Δ⊗C on the cotensor",
    )?;
    let right_in = land(
        &chain(&[&ic.kron(delta), &incl]),
        &incl.kron(&ic),
        &coords.kron(&ic),
        "C⊗Δ on the cotensor",
    )?;
    let diag = land(delta, &incl, &coords, "Δ into the cotensor")?;
    let mut r = CheckReport::new("coseparability");
    r.compare(
        "(C⊗υ)(Δ⊗C) = (υ⊗C)(C⊗Δ)",
        &chain(&[&ic.kron(upsilon), &left_in]),
        &chain(&[&upsilon.kron(&ic), &right_in]),
    );
    r.compare("υΔ = ε", &upsilon.compose(&diag), c.counit_map());
    Ok(r)
}

/// `υ = 𝔶∘cocan⁻¹` for a normalised cointegral `𝔶`.
pub fn coseparability_from_cointegral(x: &Coextension, y: &Witness) -> Result<CoseparabilityCertificate> {
    if y.kind != WitnessKind::Cointegral || !y.normalized {
        return Err(Error::Precondition("expected a normalised cointegral".into()));
    }
    check_witness(y.kind, &x.entwining, &y.value, true)?.into_result()?;
    let upsilon = y.value.compose(&x.cocan_inv);
    let r = verify_upsilon(x, &upsilon)?;
    if !r.passed() {
        return Err(Error::Inconsistency(format!("υ from a cointegral fails: {r}")));
    }
    Ok(CoseparabilityCertificate {
        upsilon,
        cointegral: y.clone(),
    })
}

/// Present iff a normalised cointegral exists.
pub fn check_coseparable(x: &Coextension) -> Result<Option<CoseparabilityCertificate>> {
    match Witness::find(WitnessKind::Cointegral, &x.entwining, true) {
        None => Ok(None),
        Some(y) => coseparability_from_cointegral(x, &y).map(Some),
    }
}
