use entwine::catalog::{cyclic_group_algebra, make_example, Params};
use entwine::exactla::{Field, LinMap, Subspace, TensorShape};
use entwine::hochschild::*;
use entwine::separability::check_separable;
use entwine::structures::Algebra;

fn scalars(a: &Algebra) -> Subspace {
    Subspace::span(a.field(), &TensorShape::flat(a.dim()), &[a.unit()])
}

/// `g^i ↦ g^{-i}` on the group basis.
fn inversion(a: &Algebra) -> LinMap {
    let n = a.dim();
    let shape = TensorShape::flat(n);
    LinMap::from_basis_images(a.field(), &shape, &shape, |i| a.basis((n - i[0]) % n))
}

#[test]
fn rational_h1_vanishes() {
    let a = cyclic_group_algebra(Field::Rationals, 2);
    let c = relative_complex(&a, &scalars(&a), &Bimodule::regular(&a), 2).unwrap();
    assert_eq!(c.cohomology(0).unwrap().dim, 2);
    assert_eq!(c.cohomology(1).unwrap().dim, 0);
}

#[test]
fn binary_h1_is_two_dimensional() {
    let a = cyclic_group_algebra(Field::Prime(2), 2);
    let h = cohomology_dim(&a, &scalars(&a), &Bimodule::regular(&a), 1).unwrap();
    assert_eq!(h.dim, 2);
    assert_eq!(h.representatives.len(), 2);
}

#[test]
fn coboundary_squares_to_zero_on_catalog() {
    for field in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
        for n in [2, 3] {
            let g = make_example("hopf_self_galois", &Params::new(field, n)).unwrap().payload.galois().unwrap().unwrap();
            for (name, m) in bimodule_battery(&g.alg, &[inversion(&g.alg)]).unwrap() {
                let c = relative_complex(&g.alg, &g.b, &m, 2).unwrap();
                assert!(c.verify().passed(), "{field} n={n} {name}");
            }
        }
    }
}

#[test]
fn separable_implies_vanishing_h1() {
    let mut params = Params::new(Field::Rationals, 4);
    params.d = Some(2);
    let cases = [
        make_example("hopf_self_galois", &Params::new(Field::Rationals, 2)).unwrap(),
        make_example("hopf_self_galois", &Params::new(Field::Prime(3), 2)).unwrap(),
        make_example("hopf_self_galois", &Params::new(Field::Prime(2), 3)).unwrap(),
        make_example("hopf_quotient_galois", &params).unwrap(),
    ];
    for entry in cases {
        let g = entry.payload.galois().unwrap().unwrap();
        assert!(check_separable(&g).is_some(), "{}", entry.name);
        for (name, m) in bimodule_battery(&g.alg, &[inversion(&g.alg)]).unwrap() {
            let h = cohomology_dim(&g.alg, &g.b, &m, 1).unwrap();
            assert_eq!(h.dim, 0, "{} {name}", entry.name);
        }
    }
}

#[test]
fn non_bimodule_rejected() {
    let a = cyclic_group_algebra(Field::Rationals, 2);
    let z = LinMap::zero(a.field(), &TensorShape::new(vec![2, 2]), &TensorShape::flat(2));
    assert!(Bimodule::new(&a, 2, z.clone(), a.mult().clone()).is_err());
}
