use entwine::catalog::{make_example, Params};
use entwine::entmod::*;
use entwine::entwining::EntwiningMorphism;
use entwine::exactla::{chain, id, Field, LinMap, TensorShape};
use entwine::galois::{Coextension, GaloisExtension};

const Q: Field = Field::Rationals;

fn galois(field: Field) -> GaloisExtension {
    make_example("hopf_self_galois", &Params::new(field, 2)).unwrap().payload.galois().unwrap().unwrap()
}

fn coextension() -> Coextension {
    make_example("self_coextension", &Params::new(Q, 2)).unwrap().payload.coextension().unwrap().unwrap()
}

fn a_tensor_c(g: &GaloisExtension) -> EntwinedModule {
    standard_module(StandardKind::ModTensorC, 2, g.alg.mult(), &g.entwining).unwrap()
}

#[test]
fn standard_modules_verify() {
    let g = galois(Q);
    assert!(g.regular_module().verify().passed());
    assert!(a_tensor_c(&g).verify().passed());
    let x = coextension();
    let c = EntwinedModule::new(&x.entwining, 2, x.rho_c.clone(), x.coalg.comult().clone()).unwrap();
    assert!(c.verify().passed());
    let ca = standard_module(StandardKind::ComodTensorA, 2, g.coalg.comult(), &g.entwining).unwrap();
    assert_eq!(ca.dim(), 4);
}

#[test]
fn broken_module_is_rejected() {
    let g = galois(Q);
    let zero = LinMap::zero(Q, &TensorShape::new(vec![2, 2]), &TensorShape::flat(2));
    let err = EntwinedModule::new(&g.entwining, 2, zero, g.rho_a.clone()).unwrap_err();
    assert!(!err.is_input());
}

#[test]
fn cotensor_and_tensor_dimensions() {
    let g = galois(Q);
    let ac = a_tensor_c(&g);
    let delta = g.coalg.comult();
    assert_eq!(cotensor(4, ac.coaction(), 2, delta).dim(), 4);
    assert_eq!(cotensor(2, delta, 2, delta).dim(), 2);
    let mu = g.alg.mult();
    assert_eq!(tensor_over(2, mu, 2, mu).dim(), 2);
    assert_eq!(tensor_over(4, ac.action(), 2, mu).dim(), 4);
}

#[test]
fn coinduce_along_counit_is_tensor_with_c() {
    let g = galois(Q);
    let mor = EntwiningMorphism::counit_morphism(&g.entwining);
    let mt = standard_module(StandardKind::ModTensorC, 2, g.alg.mult(), &mor.dst).unwrap();
    let co = coinduce(&mor, &mt).unwrap();
    let std = standard_module(StandardKind::ModTensorC, 2, g.alg.mult(), &mor.src).unwrap();
    assert_eq!(co.sub.dim(), std.dim());
    let incl = co.sub.inclusion().reshape(TensorShape::flat(co.sub.dim()), TensorShape::flat(std.dim()));
    let ia = g.alg.identity();
    assert!(chain(&[std.action(), &incl.kron(&ia)]).same_map(&chain(&[&incl, co.module.action()])));
    let ic = g.coalg.identity();
    assert!(chain(&[std.coaction(), &incl]).same_map(&chain(&[&incl.kron(&ic), co.module.coaction()])));
}

#[test]
fn triangle_identities() {
    let g = galois(Q);
    let mor = EntwiningMorphism::counit_morphism(&g.entwining);
    for m in [g.regular_module(), a_tensor_c(&g)] {
        let fm = induce(&mor, &m).unwrap().module;
        let gfm = coinduce(&mor, &fm).unwrap().module;
        let phi = adjunction_unit(&mor, &m).unwrap();
        let f_phi = induce_map(&mor, &m, &gfm, &phi).unwrap();
        let psi = adjunction_counit(&mor, &fm).unwrap();
        assert!(psi.compose(&f_phi).same_map(&id(Q, fm.dim())));
    }
    let mt = standard_module(StandardKind::ModTensorC, 2, g.alg.mult(), &mor.dst).unwrap();
    let gm = coinduce(&mor, &mt).unwrap().module;
    let fgm = induce(&mor, &gm).unwrap().module;
    let (phi, psi) = adjunction_maps(&mor, &gm, &mt).unwrap();
    let g_psi = coinduce_map(&mor, &fgm, &mt, &psi).unwrap();
    assert!(g_psi.compose(&phi).same_map(&id(Q, gm.dim())));
}

#[test]
fn identity_morphism_unit_is_split() {
    let g = galois(Q);
    let mor = EntwiningMorphism::identity(&g.entwining);
    let m = g.regular_module();
    let fm = induce(&mor, &m).unwrap().module;
    let (phi, psi) = adjunction_maps(&mor, &m, &fm).unwrap();
    assert_eq!(phi.codomain().total(), m.dim());
    assert_eq!(psi.domain().total(), m.dim());
}

#[test]
fn fixed_part_of_regular_module_is_base() {
    let g = galois(Q);
    let b = fixed_part(&g.regular_module(), &g.rho_a);
    assert_eq!(b.dim(), 1);
    assert!(b.contains(&g.alg.unit()));
}

#[test]
fn hom_spaces_contain_expected_maps() {
    let g = galois(Q);
    let a = g.regular_module();
    let ac = a_tensor_c(&g);
    for m in [&a, &ac] {
        assert!(hom_ac(m, m).unwrap().contains(&id(Q, m.dim()).to_vec()));
    }
    let rho = g.rho_a.reshape(TensorShape::flat(2), TensorShape::flat(4));
    assert!(hom_ac(&a, &ac).unwrap().contains(&rho.to_vec()));
    assert!(is_morphism(&a, &ac, &rho).passed());
}
