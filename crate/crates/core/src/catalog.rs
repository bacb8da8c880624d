//! Small deterministic example structures built from cyclic groups and
//! Sweedler's four-dimensional Hopf algebra.

use crate::entwining::Entwining;
use crate::error::{Error, Result};
use crate::exactla::{unit_vector, Field, LinMap, Scalar, Subspace, TensorShape};
use crate::galois::{build_coextension, build_galois, Coextension, GaloisExtension};
use crate::structures::{verify_hopf, Algebra, Coalgebra};

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

fn shape(f: &[usize]) -> TensorShape {
    TensorShape::new(f.to_vec())
}

/// Every name accepted by [`make_example`].
pub const NAMES: [&str; 9] = [
    "group_algebra",
    "group_function_coalgebra",
    "hopf_self_galois",
    "hopf_quotient_galois",
    "comodule_algebra_entwining",
    "self_coextension",
    "trivial_entwining",
    "flip_entwining",
    "sweedler",
];

/// Parameters of a catalog entry. `n` is a group order; `d` a divisor of it
/// (subgroup order) or the order of a second group; `m` a coalgebra
/// dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub field: Field,
    pub n: usize,
    pub d: Option<usize>,
    pub m: Option<usize>,
}

impl Params {
    pub fn new(field: Field, n: usize) -> Self {
        Params { field, n, d: None, m: None }
    }
}

impl Default for Params {
    fn default() -> Self {
        Params::new(Field::Rationals, 2)
    }
}

/// Whatever structures an example provides; absent parts are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Structures {
    pub algebra: Option<Algebra>,
    pub coalgebra: Option<Coalgebra>,
    /// `ψ: C⊗A -> A⊗C`.
    pub psi: Option<LinMap>,
    /// `ρ^A: A -> A⊗C`.
    pub coaction_a: Option<LinMap>,
    /// `ρ_C: C⊗A -> C`.
    pub action_c: Option<LinMap>,
    /// Antipode of a Hopf algebra on the common space of `algebra` and
    /// `coalgebra`.
    pub antipode: Option<LinMap>,
}

impl Structures {
    pub fn entwining(&self) -> Option<Result<Entwining>> {
        let psi = self.psi.as_ref()?;
        let (a, c) = (self.algebra.as_ref()?, self.coalgebra.as_ref()?);
        Some(Entwining::new(a.clone(), c.clone(), psi.clone()))
    }

    pub fn galois(&self) -> Option<Result<GaloisExtension>> {
        let rho = self.coaction_a.as_ref()?;
        let (a, c) = (self.algebra.as_ref()?, self.coalgebra.as_ref()?);
        Some(build_galois(a, c, rho))
    }

    pub fn coextension(&self) -> Option<Result<Coextension>> {
        let act = self.action_c.as_ref()?;
        let (a, c) = (self.algebra.as_ref()?, self.coalgebra.as_ref()?);
        Some(build_coextension(c, a, act))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Params,
    pub payload: Structures,
    pub warnings: Vec<String>,
}

/// `k[C_n]` with basis `g⁰, …, g^{n-1}`.
pub fn cyclic_group_algebra(field: Field, n: usize) -> Algebra {
    let mult = LinMap::from_basis_images(field, &shape(&[n, n]), &flat(n), |i| {
        unit_vector(field, n, (i[0] + i[1]) % n)
    });
    Algebra::new(mult, LinMap::from_vector(field, &flat(n), &unit_vector(field, n, 0)))
        .expect("cyclic group algebra")
}

fn cyclic_antipode(field: Field, n: usize) -> LinMap {
    LinMap::from_basis_images(field, &flat(n), &flat(n), |i| unit_vector(field, n, (n - i[0]) % n))
}

/// `g ↦ g⊗h(g)` for a homomorphism `C_n -> C_m` given by the image of the
/// generator.
fn group_coaction(field: Field, n: usize, m: usize, gen_image: usize) -> LinMap {
    LinMap::from_basis_images(field, &flat(n), &shape(&[n, m]), |i| {
        unit_vector(field, n * m, i[0] * m + (i[0] * gen_image) % m)
    })
}

/// `ψ(c⊗a) = a₀⊗c·a₁` for a group algebra `C = k[C_m]` coacting on
/// `A = k[C_n]` through a homomorphism.
fn comodule_algebra_psi(field: Field, n: usize, m: usize, gen_image: usize) -> LinMap {
    LinMap::from_basis_images(field, &shape(&[m, n]), &shape(&[n, m]), |ca| {
        let (c, a) = (ca[0], ca[1]);
        unit_vector(field, n * m, a * m + (c + a * gen_image) % m)
    })
}

/// Sweedler's algebra: basis `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = −gx`; `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler(field: Field) -> Result<(Algebra, Coalgebra, LinMap)> {
    if field.characteristic() == 2 {
        return Err(Error::input("Sweedler's algebra needs characteristic other than 2"));
    }
    // basis index = 2*x_power + g_power; g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
    let mult = LinMap::from_basis_images(field, &shape(&[4, 4]), &flat(4), |ij| {
        let (a, b) = (ij[0] % 2, ij[0] / 2);
        let (c, d) = (ij[1] % 2, ij[1] / 2);
        let mut v = vec![field.zero(); 4];
        if b + d < 2 {
            let sign = if b * c == 1 { -1 } else { 1 };
            v[2 * (b + d) + (a + c) % 2] = field.from_i64(sign);
        }
        v
    });
    let alg = Algebra::new(mult, LinMap::from_vector(field, &flat(4), &unit_vector(field, 4, 0)))?;
    let e = |i: usize, j: usize| i * 4 + j;
    let comult = LinMap::from_basis_images(field, &flat(4), &shape(&[4, 4]), |i| {
        let mut v = vec![field.zero(); 16];
        match i[0] {
            0 => v[e(0, 0)] = field.one(),
            1 => v[e(1, 1)] = field.one(),
            // x ↦ x⊗1 + g⊗x
            2 => {
                v[e(2, 0)] = field.one();
                v[e(1, 2)] = field.one();
            }
            // gx ↦ gx⊗g + 1⊗gx
            _ => {
                v[e(3, 1)] = field.one();
                v[e(0, 3)] = field.one();
            }
        }
        v
    });
    let counit = LinMap::from_covector(field, &flat(4), &[field.one(), field.one(), field.zero(), field.zero()]);
    let coalg = Coalgebra::new(comult, counit)?;
    // S(g) = g, S(x) = −gx, S(gx) = x
    let antipode = LinMap::from_basis_images(field, &flat(4), &flat(4), |i| {
        let mut v = vec![field.zero(); 4];
        match i[0] {
            0 => v[0] = field.one(),
            1 => v[1] = field.one(),
            2 => v[3] = field.from_i64(-1),
            _ => v[2] = field.one(),
        }
        v
    });
    Ok((alg, coalg, antipode))
}

fn require_n(p: &Params) -> Result<usize> {
    if p.n == 0 {
        return Err(Error::input("group order n must be at least 1"));
    }
    Ok(p.n)
}

fn char_warning(p: &Params, order: usize) -> Vec<String> {
    let ch = p.field.characteristic() as usize;
    if ch != 0 && order % ch == 0 {
        vec![format!("characteristic {ch} divides the group order {order}")]
    } else {
        Vec::new()
    }
}

fn check_payload(s: &Structures) -> Result<()> {
    if let (Some(a), Some(c), Some(_)) = (&s.algebra, &s.coalgebra, &s.antipode) {
        verify_hopf(a, c, s.antipode.as_ref()).into_result()?;
    }
    if let Some(a) = &s.algebra {
        a.verify().into_result()?;
    }
    if let Some(c) = &s.coalgebra {
        c.verify().into_result()?;
    }
    if let Some(e) = s.entwining() {
        e?;
    }
    if let Some(g) = s.galois() {
        g?;
    }
    if let Some(x) = s.coextension() {
        x?;
    }
    Ok(())
}

/// Builds the named example; every structure is verified before returning.
pub fn make_example(name: &str, params: &Params) -> Result<CatalogEntry> {
    let f = params.field;
    let mut warnings = Vec::new();
    let payload = match name {
        "group_algebra" => {
            let n = require_n(params)?;
            warnings = char_warning(params, n);
            Structures {
                algebra: Some(cyclic_group_algebra(f, n)),
                coalgebra: Some(Coalgebra::grouplike(f, n)),
                antipode: Some(cyclic_antipode(f, n)),
                ..Default::default()
            }
        }
        "group_function_coalgebra" => {
            let n = require_n(params)?;
            Structures {
                algebra: Some(Coalgebra::grouplike(f, n).dual()),
                coalgebra: Some(cyclic_group_algebra(f, n).dual()),
                antipode: Some(cyclic_antipode(f, n)),
                ..Default::default()
            }
        }
        "hopf_self_galois" => {
            let n = require_n(params)?;
            warnings = char_warning(params, n);
            galois_payload(cyclic_group_algebra(f, n), Coalgebra::grouplike(f, n), group_coaction(f, n, n, 1))?
        }
        "hopf_quotient_galois" => {
            let n = require_n(params)?;
            let d = params.d.unwrap_or(n);
            if d == 0 || n % d != 0 {
                return Err(Error::input(format!("subgroup order {d} does not divide {n}")));
            }
            warnings = char_warning(params, n);
            hopf_quotient(f, n, d)?
        }
        "comodule_algebra_entwining" => {
            let n = require_n(params)?;
            let d = params.d.unwrap_or(n);
            if d == 0 || n % d != 0 {
                return Err(Error::input(format!("{d} does not divide {n}")));
            }
            warnings = char_warning(params, n);
            // A = k[C_d] ⊂ k[C_n] via the generator ↦ g^{n/d}
            let gen = n / d;
            Structures {
                algebra: Some(cyclic_group_algebra(f, d)),
                coalgebra: Some(Coalgebra::grouplike(f, n)),
                psi: Some(comodule_algebra_psi(f, d, n, gen)),
                coaction_a: Some(group_coaction(f, d, n, gen)),
                ..Default::default()
            }
        }
        "self_coextension" => {
            let n = require_n(params)?;
            warnings = char_warning(params, n);
            let alg = cyclic_group_algebra(f, n);
            let coalg = Coalgebra::grouplike(f, n);
            let act = alg.mult().clone();
            let x = build_coextension(&coalg, &alg, &act)?;
            Structures {
                psi: Some(x.entwining.psi().clone()),
                algebra: Some(alg),
                coalgebra: Some(coalg),
                action_c: Some(act),
                ..Default::default()
            }
        }
        "trivial_entwining" => {
            let n = require_n(params)?;
            let m = params.m.unwrap_or(n);
            if m == 0 {
                return Err(Error::input("coalgebra dimension m must be at least 1"));
            }
            let e = Entwining::twist(cyclic_group_algebra(f, n), Coalgebra::grouplike(f, m))?;
            Structures {
                psi: Some(e.psi().clone()),
                algebra: Some(e.alg().clone()),
                coalgebra: Some(e.coalg().clone()),
                ..Default::default()
            }
        }
        "flip_entwining" => {
            let n = require_n(params)?;
            warnings = char_warning(params, n);
            // coaction through inversion: ψ(g⊗h) = h⊗g h⁻¹
            let gen = (n - 1) % n;
            Structures {
                algebra: Some(cyclic_group_algebra(f, n)),
                coalgebra: Some(Coalgebra::grouplike(f, n)),
                psi: Some(comodule_algebra_psi(f, n, n, gen)),
                coaction_a: Some(group_coaction(f, n, n, gen)),
                ..Default::default()
            }
        }
        "sweedler" => {
            let (alg, coalg, s) = sweedler(f)?;
            let rho = coalg.comult().clone();
            let mut p = galois_payload(alg, coalg, rho)?;
            p.antipode = Some(s);
            p
        }
        other => {
            return Err(Error::input(format!(
                "unknown example {other:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    };
    check_payload(&payload)?;
    Ok(CatalogEntry {
        name: name.to_string(),
        params: *params,
        payload,
        warnings,
    })
}

fn galois_payload(alg: Algebra, coalg: Coalgebra, rho: LinMap) -> Result<Structures> {
    let g = build_galois(&alg, &coalg, &rho)?;
    Ok(Structures {
        psi: Some(g.entwining.psi().clone()),
        algebra: Some(alg),
        coalgebra: Some(coalg),
        coaction_a: Some(g.rho_a.clone()),
        ..Default::default()
    })
}

/// `A = k[C_n]`, `B = k[C_d]`, `C = A/B⁺A` with `ρ = (A⊗π)Δ`; checks that
/// the coinvariants are exactly `B`.
fn hopf_quotient(f: Field, n: usize, d: usize) -> Result<Structures> {
    let alg = cyclic_group_algebra(f, n);
    let hopf = Coalgebra::grouplike(f, n);
    let step = n / d;
    let sub: Vec<usize> = (0..d).map(|k| k * step).collect();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for &h in &sub {
        for a in 0..n {
            let mut v = unit_vector(f, n, (h + a) % n);
            v[a] = &v[a] - &f.one();
            gens.push(v);
        }
    }
    let ideal = Subspace::span(f, &flat(n), &gens);
    let (coalg, pi) = hopf.quotient(&ideal)?;
    let c = coalg.dim();
    let rho = crate::exactla::chain(&[&alg.identity().kron(&pi), hopf.comult()])
        .reshape(flat(n), shape(&[n, c]));
    let g = build_galois(&alg, &coalg, &rho)?;
    let b = Subspace::span(f, &flat(n), &sub.iter().map(|&h| unit_vector(f, n, h)).collect::<Vec<_>>());
    if !(g.b.contains_subspace(&b) && b.contains_subspace(&g.b)) {
        return Err(Error::Inconsistency(format!(
            "coinvariants have dimension {} but the subgroup algebra has dimension {d}",
            g.b.dim()
        )));
    }
    Ok(Structures {
        psi: Some(g.entwining.psi().clone()),
        algebra: Some(alg),
        coalgebra: Some(coalg),
        coaction_a: Some(g.rho_a.clone()),
        ..Default::default()
    })
}

/// The entwinings used for whole-catalog sweeps over `field`.
pub fn standard_entwinings(field: Field) -> Vec<(String, Entwining)> {
    let mut out = Vec::new();
    let mut push = |name: &str, p: Params| {
        if let Ok(e) = make_example(name, &p) {
            if let Some(Ok(ent)) = e.payload.entwining() {
                out.push((format!("{name}(n={}, {})", p.n, field), ent));
            }
        }
    };
    for n in [2, 3] {
        push("hopf_self_galois", Params::new(field, n));
        push("comodule_algebra_entwining", Params::new(field, n));
        push("self_coextension", Params::new(field, n));
        push("flip_entwining", Params::new(field, n));
        push("trivial_entwining", Params { m: Some(2), ..Params::new(field, n) });
    }
    push("hopf_quotient_galois", Params { d: Some(2), ..Params::new(field, 4) });
    push("sweedler", Params::new(field, 4));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_builds_over_q() {
        for name in NAMES {
            let e = make_example(name, &Params::new(Field::Rationals, 2)).unwrap();
            assert_eq!(e.name, name);
        }
    }

    #[test]
    fn sweedler_rejected_in_char_two() {
        assert!(make_example("sweedler", &Params::new(Field::Prime(2), 2)).is_err());
    }

    #[test]
    fn quotient_by_whole_group_is_one_dimensional() {
        let e = make_example("hopf_quotient_galois", &Params { d: Some(2), ..Params::default() }).unwrap();
        assert_eq!(e.payload.coalgebra.unwrap().dim(), 1);
    }

    #[test]
    fn warning_in_modular_case() {
        let e = make_example("group_algebra", &Params::new(Field::Prime(2), 2)).unwrap();
        assert_eq!(e.warnings.len(), 1);
    }

    #[test]
    fn unknown_name_is_input_error() {
        assert!(make_example("nope", &Params::default()).unwrap_err().is_input());
    }
}
