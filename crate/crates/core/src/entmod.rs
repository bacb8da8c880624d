//! Entwined modules and the functors between their categories.
//!
//! Quotients (`⊗_A`) and kernels (`□_C`) are realised in coordinates: a
//! module built from them acts on the coordinate space of the chosen
//! complement or subspace basis, and the [`Induced`]/[`Coinduced`] wrappers
//! keep the realisation so that maps can be pushed through it.
//!
//! Over a field every comodule is flat, so cotensor products commute with the
//! tensor products used here and no preservation hypothesis is checked.

use crate::check::CheckReport;
use crate::entwining::{Entwining, EntwiningMorphism};
use crate::error::{Error, Result};
use crate::exactla::{chain, id, probe, tensor, LinMap, LinearSystem, Quotient, Subspace, TensorShape};
use crate::structures::{verify_right_comodule, verify_right_module};

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

/// A right `A`-module and right `C`-comodule compatible through `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwinedModule {
    ent: Entwining,
    dim: usize,
    action: LinMap,
    coaction: LinMap,
}

impl EntwinedModule {
    /// Shape-checked and verified.
    pub fn new(ent: &Entwining, dim: usize, action: LinMap, coaction: LinMap) -> Result<Self> {
        let m = EntwinedModule::unverified(ent, dim, action, coaction)?;
        m.verify().into_result()?;
        Ok(m)
    }

    /// Shape-checked only; see [`EntwinedModule::verify`].
    pub fn unverified(ent: &Entwining, dim: usize, action: LinMap, coaction: LinMap) -> Result<Self> {
        let (a, c) = (ent.dim_a(), ent.dim_c());
        if action.domain().total() != dim * a || action.codomain().total() != dim {
            return Err(Error::input(format!("action must map M⊗A ({dim}x{a}) to M ({dim})")));
        }
        if coaction.domain().total() != dim || coaction.codomain().total() != dim * c {
            return Err(Error::input(format!("coaction must map M ({dim}) to M⊗C ({dim}x{c})")));
        }
        if action.field() != ent.field() || coaction.field() != ent.field() {
            return Err(Error::input("module data over a different field"));
        }
        Ok(EntwinedModule {
            ent: ent.clone(),
            dim,
            action: action.reshape(TensorShape::new(vec![dim, a]), flat(dim)),
            coaction: coaction.reshape(flat(dim), TensorShape::new(vec![dim, c])),
        })
    }

    /// `A` acting on itself with the given coaction `ρ^A`.
    pub fn regular(ent: &Entwining, rho_a: &LinMap) -> Result<Self> {
        EntwinedModule::new(ent, ent.dim_a(), ent.alg().mult().clone(), rho_a.clone())
    }

    pub fn ent(&self) -> &Entwining {
        &self.ent
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn identity(&self) -> LinMap {
        id(self.ent.field(), self.dim)
    }

    pub fn verify(&self) -> CheckReport {
        let e = &self.ent;
        let mut r = CheckReport::new("entwined module");
        r.absorb(verify_right_module(e.alg(), self.dim, &self.action));
        r.absorb(verify_right_comodule(e.coalg(), self.dim, &self.coaction));
        let im = self.identity();
        r.compare(
            "compatibility",
            &chain(&[&self.coaction, &self.action]),
            &chain(&[
                &self.action.kron(&e.id_c()),
                &im.kron(e.psi()),
                &self.coaction.kron(&e.id_a()),
            ]),
        );
        r
    }
}

/// Which free construction [`standard_module`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    /// `M⊗C` for a right `A`-module `M`.
    ModTensorC,
    /// `V⊗A` for a right `C`-comodule `V`.
    ComodTensorA,
}

/// `M⊗C` with action `(ρ_M⊗C)(M⊗ψ)` and coaction `M⊗Δ`, or `V⊗A` with
/// action `V⊗μ` and coaction `(V⊗ψ)(ρ^V⊗A)`. `structure` is the action of
/// `M` or the coaction of `V` respectively.
pub fn standard_module(
    kind: StandardKind,
    dim: usize,
    structure: &LinMap,
    ent: &Entwining,
) -> Result<EntwinedModule> {
    let f = ent.field();
    let (a, c) = (ent.dim_a(), ent.dim_c());
    let i = id(f, dim);
    match kind {
        StandardKind::ModTensorC => {
            let act = structure.reshape(TensorShape::new(vec![dim, a]), flat(dim));
            verify_right_module(ent.alg(), dim, &act).into_result()?;
            let action = chain(&[&act.kron(&ent.id_c()), &i.kron(ent.psi())]);
            let coaction = i.kron(ent.coalg().comult());
            EntwinedModule::new(ent, dim * c, action, coaction)
        }
        StandardKind::ComodTensorA => {
            let co = structure.reshape(flat(dim), TensorShape::new(vec![dim, c]));
            verify_right_comodule(ent.coalg(), dim, &co).into_result()?;
            let action = i.kron(ent.alg().mult());
            let coaction = chain(&[&i.kron(ent.psi()), &co.kron(&ent.id_a())]);
            EntwinedModule::new(ent, dim * a, action, coaction)
        }
    }
}

/// `V□_C W`: the kernel of `ρ^V⊗W − V⊗ρ^W` inside `V⊗W`, for a right
/// coaction `V -> V⊗C` and a left coaction `W -> C⊗W`.
pub fn cotensor(dim_v: usize, rho_v: &LinMap, dim_w: usize, rho_w: &LinMap) -> Subspace {
    let f = rho_v.field();
    let eq = rho_v.kron(&id(f, dim_w)).sub(&id(f, dim_v).kron(rho_w));
    let eq = eq.reshape(TensorShape::new(vec![dim_v, dim_w]), eq.codomain().clone());
    crate::exactla::kernel_image(&eq).0
}

/// `M⊗_A N`: the cokernel of `ρ_M⊗N − M⊗ρ_N` on `M⊗N`.
pub fn tensor_over(dim_m: usize, act_m: &LinMap, dim_n: usize, act_n: &LinMap) -> Quotient {
    let f = act_m.field();
    let eq = act_m.kron(&id(f, dim_n)).sub(&id(f, dim_m).kron(act_n));
    let rel = Subspace::from_columns(&TensorShape::new(vec![dim_m, dim_n]), eq.matrix());
    Quotient::new(rel)
}

/// Maps `f` into the subspace with inclusion `incl` and coordinates
/// `coords`, after checking that its image lies there.
pub(crate) fn land(f: &LinMap, incl: &LinMap, coords: &LinMap, what: &str) -> Result<LinMap> {
    let c = coords.compose(f);
    if !incl.compose(&c).same_map(f) {
        return Err(Error::Inconsistency(format!("{what}: image leaves the target subspace")));
    }
    Ok(c)
}

/// Factors `f` through a quotient whose relations have inclusion `rel` and
/// whose section is `section`, after checking that `f` kills the relations.
pub(crate) fn descend(f: &LinMap, rel: &LinMap, section: &LinMap, what: &str) -> Result<LinMap> {
    if !f.compose(rel).is_zero() {
        return Err(Error::Inconsistency(format!("{what}: map does not vanish on the relations")));
    }
    Ok(f.compose(section))
}

/// `M⊗_A Ã` over the target entwining, with its realisation.
#[derive(Clone, Debug)]
pub struct Induced {
    pub module: EntwinedModule,
    pub quotient: Quotient,
}

/// `M̃□_C̃ C` over the source entwining, with its realisation.
#[derive(Clone, Debug)]
pub struct Coinduced {
    pub module: EntwinedModule,
    pub sub: Subspace,
}

fn same_entwining(a: &Entwining, b: &Entwining, what: &str) -> Result<()> {
    if a != b {
        return Err(Error::input(format!("{what} lives over a different entwining")));
    }
    Ok(())
}

/// Left `A`-action `a·ã = f(a)ã` on `Ã`.
pub(crate) fn left_action_via(mor: &EntwiningMorphism) -> LinMap {
    chain(&[mor.dst.alg().mult(), &mor.f.kron(&mor.dst.id_a())])
}

/// Left `C̃`-coaction `(g⊗C)Δ` on `C`.
pub(crate) fn left_coaction_via(mor: &EntwiningMorphism) -> LinMap {
    chain(&[&mor.g.kron(&mor.src.id_c()), mor.src.coalg().comult()])
}

/// The induction functor `-⊗_A Ã` on objects.
pub fn induce(mor: &EntwiningMorphism, m: &EntwinedModule) -> Result<Induced> {
    same_entwining(&m.ent, &mor.src, "module to induce")?;
    let f = mor.field();
    let dst = &mor.dst;
    let (dm, dat) = (m.dim, dst.dim_a());
    let q = tensor_over(dm, &m.action, dat, &left_action_via(mor));
    let pi = q.projection();
    let sigma = q.section();
    let rel = q.kernel().inclusion();
    let im = id(f, dm);
    let iat = dst.id_a();
    let ict = dst.id_c();

    let act_amb = chain(&[&pi, &im.kron(dst.alg().mult())]);
    let action = descend(&act_amb, &rel.kron(&iat), &sigma.kron(&iat), "induced action")?;

    let co_amb = chain(&[
        &pi.kron(&ict),
        &im.kron(dst.psi()),
        &tensor(&[&im, &mor.g, &iat]),
        &m.coaction.kron(&iat),
    ]);
    let coaction = descend(&co_amb, &rel, &sigma, "induced coaction")?;
    let module = EntwinedModule::unverified(dst, q.dim(), action, coaction)?;
    if !module.verify().passed() {
        return Err(Error::Inconsistency("induced module fails its axioms".into()));
    }
    Ok(Induced { module, quotient: q })
}

/// The coinduction functor `-□_C̃ C` on objects.
pub fn coinduce(mor: &EntwiningMorphism, mt: &EntwinedModule) -> Result<Coinduced> {
    same_entwining(&mt.ent, &mor.dst, "module to coinduce")?;
    let f = mor.field();
    let src = &mor.src;
    let (dm, dc) = (mt.dim, src.dim_c());
    let d = cotensor(dm, &mt.coaction, dc, &left_coaction_via(mor));
    let incl = d.inclusion();
    let coords = d.coordinates();
    let im = id(f, dm);
    let ic = src.id_c();
    let ia = src.id_a();

    let co_amb = chain(&[&im.kron(src.coalg().comult()), &incl]);
    let coaction = land(&co_amb, &incl.kron(&ic), &coords.kron(&ic), "coinduced coaction")?;

    let act_amb = chain(&[
        &mt.action.kron(&ic),
        &tensor(&[&im, &mor.f, &ic]),
        &im.kron(src.psi()),
        &incl.kron(&ia),
    ]);
    let action = land(&act_amb, &incl, &coords, "coinduced action")?;
    let module = EntwinedModule::unverified(src, d.dim(), action, coaction)?;
    if !module.verify().passed() {
        return Err(Error::Inconsistency("coinduced module fails its axioms".into()));
    }
    Ok(Coinduced { module, sub: d })
}

/// Direction for [`functor_apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Induce,
    Coinduce,
}

pub fn functor_apply(dir: Direction, mor: &EntwiningMorphism, m: &EntwinedModule) -> Result<EntwinedModule> {
    match dir {
        Direction::Induce => induce(mor, m).map(|x| x.module),
        Direction::Coinduce => coinduce(mor, m).map(|x| x.module),
    }
}

/// `-⊗_A Ã` on a morphism `φ: M -> N`.
pub fn induce_map(
    mor: &EntwiningMorphism,
    m: &EntwinedModule,
    n: &EntwinedModule,
    phi: &LinMap,
) -> Result<LinMap> {
    let (fm, fn_) = (induce(mor, m)?, induce(mor, n)?);
    let iat = mor.dst.id_a();
    let amb = chain(&[&fn_.quotient.projection(), &phi.kron(&iat)]);
    descend(
        &amb,
        &fm.quotient.kernel().inclusion(),
        &fm.quotient.section(),
        "induced morphism",
    )
}

/// `-□_C̃ C` on a morphism `φ̃: M̃ -> Ñ`.
pub fn coinduce_map(
    mor: &EntwiningMorphism,
    mt: &EntwinedModule,
    nt: &EntwinedModule,
    phi: &LinMap,
) -> Result<LinMap> {
    let (gm, gn) = (coinduce(mor, mt)?, coinduce(mor, nt)?);
    let ic = mor.src.id_c();
    let amb = chain(&[&phi.kron(&ic), &gm.sub.inclusion()]);
    land(&amb, &gn.sub.inclusion(), &gn.sub.coordinates(), "coinduced morphism")
}

/// Unit `Φ_M: M -> (M⊗_A Ã)□_C̃ C`, `m ↦ m₀⊗1⊗m₁`, in coordinates.
pub fn adjunction_unit(mor: &EntwiningMorphism, m: &EntwinedModule) -> Result<LinMap> {
    let fm = induce(mor, m)?;
    let gfm = coinduce(mor, &fm.module)?;
    let ic = mor.src.id_c();
    let im = id(mor.field(), m.dim);
    let phi_amb = chain(&[
        &fm.quotient.projection().kron(&ic),
        &tensor(&[&im, mor.dst.alg().unit_map(), &ic]),
        &m.coaction,
    ]);
    land(&phi_amb, &gfm.sub.inclusion(), &gfm.sub.coordinates(), "adjunction unit")
}

/// Counit `Ψ_M̃: (M̃□_C̃ C)⊗_A Ã -> M̃`, `m̃⊗c⊗ã ↦ ε(c) m̃·ã`, in coordinates.
pub fn adjunction_counit(mor: &EntwiningMorphism, mt: &EntwinedModule) -> Result<LinMap> {
    let gmt = coinduce(mor, mt)?;
    let fgmt = induce(mor, &gmt.module)?;
    let iat = mor.dst.id_a();
    let imt = id(mor.field(), mt.dim);
    let psi_amb = chain(&[
        &mt.action,
        &tensor(&[&imt, mor.src.coalg().counit_map(), &iat]),
        &gmt.sub.inclusion().kron(&iat),
    ]);
    descend(
        &psi_amb,
        &fgmt.quotient.kernel().inclusion(),
        &fgmt.quotient.section(),
        "adjunction counit",
    )
}

/// `(Φ_M, Ψ_M̃)`.
pub fn adjunction_maps(
    mor: &EntwiningMorphism,
    m: &EntwinedModule,
    mt: &EntwinedModule,
) -> Result<(LinMap, LinMap)> {
    Ok((adjunction_unit(mor, m)?, adjunction_counit(mor, mt)?))
}

/// `M₀ = {m | ρ^M(m·a) = m·a₀ ⊗ a₁ for all a}` for a coaction `ρ^A` on `A`.
pub fn fixed_part(m: &EntwinedModule, rho_a: &LinMap) -> Subspace {
    let e = &m.ent;
    let f = e.field();
    let im = id(f, m.dim);
    let lhs = chain(&[&m.coaction, &m.action]);
    let rhs = chain(&[&m.action.kron(&e.id_c()), &im.kron(rho_a)]);
    let diff = lhs.sub(&rhs);
    let mut sys = LinearSystem::new(f, m.dim);
    for j in 0..e.dim_a() {
        let aj = LinMap::from_vector(f, &flat(e.dim_a()), &e.alg().basis(j));
        sys.push_homogeneous(chain(&[&diff, &im.kron(&aj)]).matrix());
    }
    let sol = sys.solve();
    Subspace::from_rows(&flat(m.dim), sol.homogeneous.basis_matrix())
}

/// All `φ: M -> N` that are `A`-linear and `C`-colinear, as a subspace of
/// `Hom(M, N)` vectorised row-major.
pub fn hom_ac(m: &EntwinedModule, n: &EntwinedModule) -> Result<Subspace> {
    same_entwining(&m.ent, &n.ent, "target module")?;
    let e = &m.ent;
    let f = e.field();
    let (dm, dn) = (flat(m.dim), flat(n.dim));
    let mut sys = LinearSystem::new(f, m.dim * n.dim);
    sys.push_homogeneous(&probe(f, &dm, &dn, |x| {
        chain(&[x, &m.action]).sub(&chain(&[&n.action, &x.kron(&e.id_a())]))
    }));
    sys.push_homogeneous(&probe(f, &dm, &dn, |x| {
        chain(&[&x.kron(&e.id_c()), &m.coaction]).sub(&chain(&[&n.coaction, x]))
    }));
    let sol = sys.solve();
    Ok(Subspace::from_rows(&TensorShape::new(vec![n.dim, m.dim]), sol.homogeneous.basis_matrix()))
}

/// Whether `φ: M -> N` commutes with both structures.
pub fn is_morphism(m: &EntwinedModule, n: &EntwinedModule, phi: &LinMap) -> CheckReport {
    let e = &m.ent;
    let mut r = CheckReport::new("entwined module morphism");
    r.compare(
        "A-linear",
        &chain(&[phi, &m.action]),
        &chain(&[&n.action, &phi.kron(&e.id_a())]),
    );
    r.compare(
        "C-colinear",
        &chain(&[&phi.kron(&e.id_c()), &m.coaction]),
        &chain(&[&n.coaction, phi]),
    );
    r
}
