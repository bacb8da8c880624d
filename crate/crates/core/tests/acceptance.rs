//! Acceptance gate: one PASS/FAIL line per criterion, zero tolerance.
//!
//! Every hand-derived value is first reproduced by the standalone oracle in
//! `oracle/` and only then compared with the library.

mod oracle;

use std::io::Write;
use std::time::{Duration, Instant};

use entwine::catalog::{make_example, standard_entwinings, Params, Structures, NAMES};
use entwine::entmod::{
    adjunction_unit, coinduce_map, functor_apply, hom_ac, induce, induce_map, standard_module, Direction,
    EntwinedModule, StandardKind,
};
use entwine::entwining::{tensor_entwining, Entwining, EntwiningMorphism};
use entwine::exactla::{chain, AffineSolutionSet, Field, LinMap, Scalar, TensorShape};
use entwine::galois::{Coextension, GaloisExtension};
use entwine::hochschild::{bimodule_battery, cohomology_dim, relative_complex, Bimodule, MAX_DEGREE};
use entwine::io::{Certificate, CertificateDoc, Document, Parsed};
use entwine::report::{coextension_report, extension_report, solve, SolveKind};
use entwine::separability::{
    check_separable, check_split, check_strongly_separable, solve_phi, verify_idempotent, Strategy,
};
use entwine::witness::*;

use oracle::{Affine, Cyclic, Num, Rat, Zp};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

const Q: Field = Field::Rationals;
const F2: Field = Field::Prime(2);
const F3: Field = Field::Prime(3);

fn galois(name: &str, field: Field, n: usize) -> GaloisExtension {
    make_example(name, &Params::new(field, n)).unwrap().payload.galois().unwrap().unwrap()
}

fn coextension(field: Field, n: usize) -> Coextension {
    make_example("self_coextension", &Params::new(field, n)).unwrap().payload.coextension().unwrap().unwrap()
}

fn q(n: i64, d: i64) -> Scalar {
    Q.ratio(n, d).unwrap()
}

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

/// Every distinct catalog example over `field`, labelled.
fn catalog(field: Field) -> Vec<(String, Structures)> {
    let mut out: Vec<(String, Structures)> = Vec::new();
    for name in NAMES {
        let mut params: Vec<Params> = [2, 3].map(|n| Params::new(field, n)).to_vec();
        params.push(Params { m: Some(3), ..Params::new(field, 2) });
        if name.contains("galois") || name.contains("comodule") {
            params.push(Params { d: Some(2), ..Params::new(field, 4) });
        }
        for p in &params {
            let Ok(entry) = make_example(name, p) else { continue };
            if out.iter().all(|(_, s)| *s != entry.payload) {
                out.push((format!("{name}({:?}, {field})", (p.n, p.d, p.m)), entry.payload));
            }
        }
    }
    out
}

/// The library solution set equals the oracle's: same dimension, the
/// oracle particular solution and every oracle kernel vector accepted.
fn same_affine<T: Num>(f: Field, lib: &AffineSolutionSet, ora: &Option<Affine<T>>) -> bool {
    match ora {
        None => !lib.is_feasible(),
        Some(a) => {
            lib.dim() == a.kernel.len()
                && lib.contains(&oracle::lift_vec(f, &a.particular))
                && a.kernel.iter().all(|k| lib.homogeneous.contains(&oracle::lift_vec(f, k)))
        }
    }
}

/// Particular solution and particular + each basis vector.
fn family_points(s: &AffineSolutionSet) -> Vec<Vec<Scalar>> {
    let Some(p) = s.particular.clone() else {
        return Vec::new();
    };
    let f = s.field();
    let mut out = vec![p];
    for i in 0..s.dim() {
        let coeffs: Vec<Scalar> = (0..s.dim()).map(|j| if i == j { f.one() } else { f.zero() }).collect();
        out.push(s.member(&coeffs).unwrap());
    }
    out
}

fn criterion_1() -> Check {
    let mut twists = 0;
    for field in [Q, F2, F3] {
        for (name, s) in catalog(field) {
            let (Some(a), Some(c)) = (s.algebra, s.coalgebra) else { continue };
            let e = ok(Entwining::twist(a, c), &name)?;
            let r = e.verify();
            ensure!(r.passed(), "twist on {name}: {r}");
            twists += 1;
        }
    }

    let small: Vec<(String, Entwining)> = standard_entwinings(Q)
        .into_iter()
        .filter(|(_, e)| e.dim_a() * e.dim_c() <= 4)
        .collect();
    let mut tensors = 0;
    for (n1, e1) in &small {
        for (n2, e2) in &small {
            let t = ok(tensor_entwining(e1, e2), "tensor entwining")?;
            let r = t.verify();
            ensure!(r.passed(), "{n1} ⊗ {n2}: {r}");
            tensors += 1;
        }
    }

    let mut modules = 0;
    let mut verify = |what: &str, m: &EntwinedModule| -> Result<(), String> {
        let r = m.verify();
        modules += 1;
        if r.passed() {
            Ok(())
        } else {
            Err(format!("{what}: {r}"))
        }
    };
    for field in [Q, F2] {
        for (name, e) in standard_entwinings(field) {
            let mc = ok(standard_module(StandardKind::ModTensorC, e.dim_a(), e.alg().mult(), &e), &name)?;
            let va = ok(standard_module(StandardKind::ComodTensorA, e.dim_c(), e.coalg().comult(), &e), &name)?;
            verify(&format!("{name} A⊗C"), &mc)?;
            verify(&format!("{name} C⊗A"), &va)?;

            let cm = EntwiningMorphism::counit_morphism(&e);
            let um = EntwiningMorphism::unit_morphism(&e);
            let over_k = ok(standard_module(StandardKind::ModTensorC, e.dim_a(), e.alg().mult(), &cm.dst), &name)?;
            let from_k = ok(standard_module(StandardKind::ComodTensorA, e.dim_c(), e.coalg().comult(), &um.src), &name)?;
            for (what, mor, dir, m) in [
                ("induce along (A, ε)", &cm, Direction::Induce, &mc),
                ("induce along (A, ε)", &cm, Direction::Induce, &va),
                ("coinduce along (A, ε)", &cm, Direction::Coinduce, &over_k),
                ("induce along (1, C)", &um, Direction::Induce, &from_k),
                ("coinduce along (1, C)", &um, Direction::Coinduce, &mc),
                ("coinduce along (1, C)", &um, Direction::Coinduce, &va),
            ] {
                let out = ok(functor_apply(dir, mor, m), &format!("{name} {what}"))?;
                verify(&format!("{name} {what}"), &out)?;
            }
        }
    }
    Ok(format!("{twists} twists, {tensors} tensor entwinings, {modules} entwined modules"))
}

fn criterion_2() -> Check {
    let c2 = Cyclic { n: 2 };
    let g = galois("hopf_self_galois", Q, 2);
    let e = &g.entwining;

    let can = c2.can::<Rat>();
    ensure!(oracle::rank(&can, 4) == 4, "oracle: can is singular");
    let lib_can = chain(&[&g.can, &g.a_tens_b_a.projection()]);
    ensure!(lib_can.matrix().rows() == 4 && lib_can.matrix().cols() == 4, "can is not 4×4");
    ensure!(lib_can.to_vec() == oracle::lift_all(Q, &can), "can differs from the hand matrix");
    ensure!(g.can_inv.compose(&g.can).same_map(&LinMap::identity(Q, &flat(4))), "can⁻¹∘can ≠ 1");

    let coinv = oracle::nullspace(&c2.coinvariant_equations::<Rat>(), 2);
    ensure!(coinv == vec![vec![Rat::int(1), Rat::int(0)]], "oracle: coinvariants {coinv:?}");
    ensure!(g.b.dim() == 1 && g.b.contains(&g.alg.unit()), "B ≠ span{{1}}");

    ensure!(e.psi().to_vec() == oracle::lift_all(Q, &c2.psi::<Rat>()), "ψ differs from g^j⊗g^{{i+j}}");

    let half = Rat::new(1, 2);
    let zero = Rat::int(0);
    let z = vec![half, half, zero, zero];
    let (m, rhs) = c2.integral_system::<Rat>();
    ensure!(oracle::mat_vec(&m, &z) == rhs, "oracle: ½(1⊗1+1⊗g) is not a normalised integral");
    let integrals = solve_witness(WitnessKind::Integral, e, true);
    let ora = oracle::solve(&m, &rhs, 4);
    ensure!(same_affine(Q, &integrals, &ora), "integral solution set differs from the oracle");
    ensure!(integrals.contains(&oracle::lift_vec(Q, &z)), "𝔷 not in the solution set");

    let u = vec![half, zero, zero, half];
    let (m, rhs) = c2.separability_system::<Rat>();
    let ora = oracle::solve(&m, &rhs, 4).ok_or("oracle: no idempotent")?;
    ensure!(ora.particular == u && ora.kernel.is_empty(), "oracle: idempotent {:?}", ora.particular);
    let cert = check_separable(&g).ok_or("no separability idempotent")?;
    ensure!(cert.u_rep == oracle::lift_vec(Q, &u), "u = {:?}", cert.u_rep);
    let r = verify_idempotent(&g, &cert.u);
    ensure!(r.passed(), "{r}");
    let hand = g.a_tens_b_a.projection().apply(&oracle::lift_vec(Q, &u));
    ensure!(verify_idempotent(&g, &hand).passed(), "hand idempotent rejected");

    let (m, rhs) = c2.phi_system::<Rat>();
    let ora = oracle::solve(&m, &rhs, 4).ok_or("oracle: no φ")?;
    ensure!(
        ora.kernel == vec![vec![zero, zero, zero, Rat::int(1)]],
        "oracle: φ family {:?}",
        ora.kernel
    );
    let family = solve_phi(&g);
    ensure!(family.dim() == 1 && same_affine(Q, &family, &Some(ora)), "φ family differs from φ(g) = s·g");
    let split = ok(check_split(&g), "split")?;
    ensure!(split.certificate.is_some(), "no conditional expectation");

    let phi0 = vec![Rat::int(1), zero, zero, zero];
    ensure!(c2.tau(&u, &phi0) == Some(half), "oracle: τ ≠ ½");
    ensure!(c2.tau(&u, &[Rat::int(1), zero, zero, Rat::int(1)]).is_none(), "oracle: φ(g) = g gives a τ");
    let strong = ok(check_strongly_separable(&g, &Strategy::FixedIntegralLinearPhi), "strong")?;
    let cert = strong.certificate.ok_or("not strongly separable")?;
    ensure!(cert.tau == q(1, 2), "τ = {}", cert.tau);

    let h1 = ok(cohomology_dim(&g.alg, &g.b, &Bimodule::regular(&g.alg), 1), "H¹")?.dim;
    let ora = c2.h1::<Rat>();
    ensure!(h1 == 0 && ora == 0, "H¹ = {h1}, oracle {ora}");
    Ok("can, B, ψ, 𝔷, u, φ family, τ = 1/2, H¹ = 0 all match the oracle".into())
}

fn criterion_3() -> Check {
    type F = Zp<2>;
    let c2 = Cyclic { n: 2 };
    let g = galois("hopf_self_galois", F2, 2);

    let (m, rhs) = c2.integral_system::<F>();
    let ora = oracle::solve(&m, &rhs, 4);
    let lib = solve_witness(WitnessKind::Integral, &g.entwining, true);
    ensure!(ora.is_none() && !lib.is_feasible(), "normalised integral is feasible");

    let (m, rhs) = c2.separability_system::<F>();
    ensure!(oracle::solve(&m, &rhs, 4).is_none(), "oracle: idempotent exists");
    ensure!(check_separable(&g).is_none(), "separability certificate over 𝔽₂");

    let (d0, d1) = c2.hochschild::<F>();
    let (r0, r1) = (oracle::rank(&d0, 2), oracle::rank(&d1, 4));
    ensure!((r0, r1) == (0, 2), "oracle ranks δ⁰ = {r0}, δ¹ = {r1}");
    let h1 = ok(cohomology_dim(&g.alg, &g.b, &Bimodule::regular(&g.alg), 1), "H¹")?.dim;
    ensure!(h1 == 2 && c2.h1::<F>() == 2, "H¹ = {h1}");

    let (m, rhs) = c2.phi_system::<F>();
    let ora = oracle::solve(&m, &rhs, 4);
    ensure!(ora.is_some(), "oracle: no φ over 𝔽₂");
    ensure!(same_affine(F2, &solve_phi(&g), &ora), "φ family differs from the oracle");
    let split = ok(check_split(&g), "split")?;
    ensure!(split.certificate.is_some(), "not split over 𝔽₂");
    Ok(format!("integral infeasible, not separable, H¹ = 2 (ranks {r0}, {r1}), split"))
}

fn criterion_4() -> Check {
    let mut checked = 0;
    let mut bijections = 0;
    for field in [Q, F2, F3] {
        for (name, e) in standard_entwinings(field) {
            let cm = EntwiningMorphism::counit_morphism(&e);
            let um = EntwiningMorphism::unit_morphism(&e);
            let feasible = |k| solve_witness(k, &e, true).is_feasible();
            let pairs = [
                ("(A, ε) cointegrability", ok(solve_total_cointegrability(&cm), &name)?, WitnessKind::Integral),
                ("(A, ε) integrability", ok(solve_total_integrability(&cm), &name)?, WitnessKind::IntegralMap),
                ("(1, C) integrability", ok(solve_total_integrability(&um), &name)?, WitnessKind::Cointegral),
                ("(1, C) cointegrability", ok(solve_total_cointegrability(&um), &name)?, WitnessKind::CointegralMap),
            ];
            for (what, set, kind) in pairs {
                ensure!(set.is_feasible() == feasible(kind), "{name}: {what} vs {}", kind.name());
            }
            checked += 1;

            let setup = ok(LambdaSetup::new(&cm), &name)?;
            let lam = setup.solve(true);
            let gam = solve_witness(WitnessKind::IntegralMap, &e, true);
            ensure!(lam.is_feasible() == gam.is_feasible(), "{name}: λ and γ feasibility differ");
            if !lam.is_feasible() {
                continue;
            }
            ensure!(lam.dim() == gam.dim(), "{name}: dim λ = {}, dim γ = {}", lam.dim(), gam.dim());
            let (ld, lc) = setup.lambda_shapes();
            for v in family_points(&lam) {
                let l = LinMap::from_vec(field, &ld, &lc, &v);
                let g = ok(integral_map_from_lambda(&setup, &l), &name)?;
                ensure!(gam.contains(&g.to_vec()), "{name}: λ∘(C⊗1⊗C) is not an integral map");
                let back = ok(lambda_from_integral_map(&setup, &g), &name)?;
                ensure!(back.to_vec() == v, "{name}: λ round trip");
            }
            let (gd, gc) = WitnessKind::IntegralMap.shapes(&e);
            for v in family_points(&gam) {
                let g = LinMap::from_vec(field, &gd, &gc, &v);
                let l = ok(lambda_from_integral_map(&setup, &g), &name)?;
                ensure!(lam.contains(&l.to_vec()), "{name}: a_α γ(c^α⊗c′) is not a total λ");
                let back = ok(integral_map_from_lambda(&setup, &l), &name)?;
                ensure!(back.to_vec() == v, "{name}: γ round trip");
            }
            bijections += 1;
        }
    }
    Ok(format!("{checked} entwinings agree, {bijections} γ ↔ λ bijections"))
}

fn criterion_5() -> Check {
    let g = galois("hopf_self_galois", Q, 2);
    let e = &g.entwining;
    let mor = EntwiningMorphism::counit_morphism(e);
    let setup = ok(LambdaSetup::new(&mor), "λ setup")?;
    let lam = setup.solve(true);
    let a = g.regular_module();
    let ac = ok(standard_module(StandardKind::ModTensorC, e.dim_a(), e.alg().mult(), e), "A⊗C")?;
    let modules = [("A", &a), ("A⊗C", &ac)];

    let points = family_points(&lam);
    ensure!(!points.is_empty(), "no total λ");
    let mut naturality = 0;
    for v in &points {
        let w = ok(setup.witness(v, true), "λ")?;
        let mut nus = Vec::new();
        for (name, m) in modules {
            let nu = ok(nu_from_lambda(&setup, &w, m), name)?;
            let phi = ok(adjunction_unit(&mor, m), name)?;
            ensure!(nu.compose(&phi).same_map(&LinMap::identity(Q, &flat(m.dim()))), "ν∘Φ ≠ 1 on {name}");
            nus.push(nu);
        }
        let back = ok(lambda_from_nu(&setup, &nus[1]), "λ from ν")?;
        ensure!(back.map.same_map(&w.map), "λ round trip through ν");

        for (i, (nm, m)) in modules.iter().enumerate() {
            for (j, (nn, n)) in modules.iter().enumerate() {
                let (fm, fn_) = (ok(induce(&mor, m), nm)?, ok(induce(&mor, n), nn)?);
                for v in ok(hom_ac(m, n), "hom")?.basis() {
                    let phi = LinMap::from_vec(Q, &flat(m.dim()), &flat(n.dim()), &v);
                    let f_phi = ok(induce_map(&mor, m, n, &phi), "F(φ)")?;
                    let gf_phi = ok(coinduce_map(&mor, &fm.module, &fn_.module, &f_phi), "GF(φ)")?;
                    ensure!(
                        nus[j].compose(&gf_phi).same_map(&phi.compose(&nus[i])),
                        "ν not natural for a morphism {nm} -> {nn}"
                    );
                    naturality += 1;
                }
            }
        }
    }
    ensure!(naturality > 0, "no morphisms to test naturality on");
    Ok(format!("{} λ round trips, ν∘Φ = 1 on A and A⊗C, {naturality} naturality squares", points.len()))
}

fn criterion_6() -> Check {
    let c2 = Cyclic { n: 2 };
    let x = coextension(Q, 2);
    ensure!(x.kappa().is_some(), "self-coextension is not pointed");
    let gamma = c2.cotranslation::<Rat>();
    ensure!(c2.cotranslation_identities(&gamma), "oracle: cotranslation identities fail");
    let (_, w) = ok(witness_from_structure(StructureData::Cotranslation { coext: &x }), "cotranslation")?;
    ensure!(w.kind == WitnessKind::IntegralMap && w.normalized, "cotranslation witness kind");
    ensure!(w.value.to_vec() == oracle::lift_all(Q, &gamma), "γ differs from g^{{j−i}}");
    let r = ok(check_witness(WitnessKind::IntegralMap, &x.entwining, &w.value, true), "γ")?;
    ensure!(r.passed(), "{r}");

    let g = galois("hopf_self_galois", Q, 2);
    ensure!(g.copointed_grouplike().is_some(), "extension is not copointed");
    let zeta = c2.can_inv_unit::<Rat>().ok_or("oracle: can not invertible")?;
    let (_, w) = ok(witness_from_structure(StructureData::CanInvUnit { ext: &g }), "can⁻¹(1⊗C)")?;
    ensure!(w.kind == WitnessKind::CointegralMap && w.normalized, "ζ witness kind");
    ensure!(w.value.to_vec() == oracle::lift_all(Q, &zeta), "ζ differs from g^{{-c}}⊗g^c");
    let r = ok(check_witness(WitnessKind::CointegralMap, &g.entwining, &w.value, true), "ζ")?;
    ensure!(r.passed(), "{r}");

    let half = q(1, 2);
    let (one, zero) = (Q.one(), Q.zero());
    let (_, w) = ok(
        witness_from_structure(StructureData::InvariantElement {
            ent: &g.entwining,
            action: g.alg.mult(),
            lambda: &[half.clone(), half.clone()],
            counit_a: &[one.clone(), one.clone()],
        }),
        "Λ",
    )?;
    ensure!(w.value.to_vec() == vec![half.clone(), half, zero.clone(), zero.clone()], "1⊗Λ = {:?}", w.value.to_vec());
    let r = ok(check_witness(WitnessKind::Integral, &g.entwining, &w.value, true), "1⊗Λ")?;
    ensure!(r.passed(), "{r}");

    let (_, w) = ok(
        witness_from_structure(StructureData::CasimirFunctional {
            ent: &g.entwining,
            coaction: &g.rho_a,
            unit_c: &[one.clone(), zero.clone()],
            kappa: &[one, zero],
        }),
        "κ",
    )?;
    let r = ok(check_witness(WitnessKind::Cointegral, &g.entwining, &w.value, true), "ε⊗κ")?;
    ensure!(r.passed(), "{r}");
    Ok("γ, ζ, 1⊗Λ and ε⊗κ verified".into())
}

fn complexes_for(g: &GaloisExtension, label: &str) -> Result<usize, String> {
    let scalars = entwine::exactla::Subspace::span(g.field(), &flat(g.alg.dim()), &[g.alg.unit()]);
    let mut count = 0;
    for (bname, m) in ok(bimodule_battery(&g.alg, &[]), label)? {
        let degree = if g.alg.dim() * m.dim() <= 8 { MAX_DEGREE } else { 2 };
        for b in [&g.b, &scalars] {
            let c = ok(relative_complex(&g.alg, b, &m, degree), label)?;
            let r = c.verify();
            ensure!(r.passed(), "{label} {bname}: {r}");
            for n in 1..c.full.len() {
                ensure!(c.full[n].compose(&c.full[n - 1]).is_zero(), "{label} {bname}: δ{n}δ{} ≠ 0", n - 1);
            }
            count += 1;
        }
    }
    Ok(count)
}

fn canonical_map_identities(g: &GaloisExtension, label: &str) -> Result<usize, String> {
    let (ia, ic) = (g.alg.identity(), g.coalg.identity());
    let f = g.field();
    let lhs = chain(&[&ia.kron(g.coalg.counit_map()), &g.can]);
    ensure!(lhs.matrix() == g.mu_b().matrix(), "{label}: (A⊗ε)∘can ≠ μ_B");
    let psi = g.entwining.psi();
    let mu = g.alg.mult();
    let mut triples = 0;
    for a in 0..g.alg.dim() {
        for a2 in 0..g.alg.dim() {
            let left = g.alg.left_mult(&g.alg.basis(a)).kron(&ic);
            let insert = ia.kron(&ic).kron(&LinMap::from_vector(f, &flat(g.alg.dim()), &g.alg.basis(a2)));
            let right = chain(&[&mu.kron(&ic), &ia.kron(psi), &insert]);
            let outer = chain(&[&g.can_inv, &left, &right]);
            let inner = chain(&[&g.left_mult_q(&g.alg.basis(a)), &g.right_mult_q(&g.alg.basis(a2)), &g.can_inv]);
            ensure!(outer.matrix() == inner.matrix(), "{label}: can⁻¹ not bilinear at ({a}, {a2})");
            triples += g.alg.dim() * g.coalg.dim();
        }
    }
    Ok(triples)
}

fn round_trip(parsed: &Parsed, field: Field, cert: Certificate, label: &str) -> Result<(), String> {
    let text = CertificateDoc::new(field, cert).to_json();
    let back = ok(CertificateDoc::from_json(&text), label)?;
    ensure!(back.to_json() == text, "{label}: JSON not stable");
    let r = ok(back.certificate.verify(parsed), label)?;
    ensure!(r.passed(), "{label}: {r}");
    Ok(())
}

fn criterion_7() -> Check {
    let (mut complexes, mut triples, mut certificates) = (0, 0, 0);
    for field in [Q, F2, F3] {
        for (label, s) in catalog(field) {
            let parsed = ok(Parsed::from_json(&Document::from_structures(field, &s).to_json()), &label)?;
            if let Some(g) = s.galois() {
                let g = ok(g, &label)?;
                complexes += complexes_for(&g, &label)?;
                triples += canonical_map_identities(&g, &label)?;
                let r = ok(extension_report(&g), &label)?;
                let strong = r.strong.certificate.clone();
                for cert in [r.separability, r.split_certificate, strong].into_iter().flatten() {
                    round_trip(&parsed, field, cert, &label)?;
                    certificates += 1;
                }
            }
            if let Some(x) = s.coextension() {
                let x = ok(x, &label)?;
                if let Some(cert) = ok(coextension_report(&x), &label)?.coseparability {
                    round_trip(&parsed, field, cert, &label)?;
                    certificates += 1;
                }
            }
            if parsed.entwining().is_ok() {
                for kind in ["integral", "cointegral", "integral-map", "cointegral-map", "lambda", "frakz"] {
                    for normalized in [false, true] {
                        let r = ok(solve(&parsed, ok(SolveKind::parse(kind), kind)?, normalized), &label)?;
                        if let Some(cert) = r.certificate {
                            round_trip(&parsed, field, cert, &format!("{label} {kind}"))?;
                            certificates += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{complexes} complexes with δδ = 0, {triples} can⁻¹ triples, {certificates} certificates"))
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

#[test]
fn acceptance_criteria() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, title: "axiom suites", budget: secs(5), run: criterion_1 },
        Criterion { id: 2, title: "ℚ[C₂] pipeline", budget: secs(5), run: criterion_2 },
        Criterion { id: 3, title: "𝔽₂[C₂] negative suite", budget: secs(5), run: criterion_3 },
        Criterion { id: 4, title: "functor and witness level agree", budget: None, run: criterion_4 },
        Criterion { id: 5, title: "ν and λ round trip", budget: None, run: criterion_5 },
        Criterion { id: 6, title: "example witnesses", budget: None, run: criterion_6 },
        Criterion { id: 7, title: "internal consistency", budget: None, run: criterion_7 },
    ];
    let mut failed = Vec::new();
    for c in criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let took = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, c.budget) {
            if took > limit {
                outcome = Err(format!("took {took:.2?}, budget {limit:?}"));
            }
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        // bypasses test output capture so the gate is always visible
        let _ = writeln!(std::io::stderr(), "criterion {} {tag} {} ({took:.2?}): {detail}", c.id, c.title);
        if outcome.is_err() {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
