//! Finite-dimensional algebras and coalgebras given by structure constants.

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::exactla::{
    chain, id, tensor, unit_vector, Field, LinMap, Matrix, Quotient, Scalar, Subspace, TensorShape,
};

fn flat(n: usize) -> TensorShape {
    TensorShape::flat(n)
}

fn expect_shape(what: &str, m: &LinMap, dom: &[usize], cod: &[usize]) -> Result<()> {
    if m.domain().total() != dom.iter().product::<usize>()
        || m.codomain().total() != cod.iter().product::<usize>()
    {
        return Err(Error::input(format!(
            "{what} has shape {:?} -> {:?}, expected {dom:?} -> {cod:?}",
            m.domain().factors(),
            m.codomain().factors()
        )));
    }
    Ok(())
}

/// Associative unital algebra: `mult: A⊗A -> A`, `unit: k -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    mult: LinMap,
    unit: LinMap,
}

impl Algebra {
    /// Shape-checked constructor; the axioms are checked by [`Algebra::verify`].
    pub fn new(mult: LinMap, unit: LinMap) -> Result<Self> {
        let d = unit.codomain().total();
        if d == 0 {
            return Err(Error::input("algebra dimension must be positive"));
        }
        expect_shape("multiplication", &mult, &[d, d], &[d])?;
        expect_shape("unit", &unit, &[], &[d])?;
        if mult.field() != unit.field() {
            return Err(Error::input("multiplication and unit over different fields"));
        }
        Ok(Algebra {
            dim: d,
            mult: mult.reshape(TensorShape::new(vec![d, d]), flat(d)),
            unit: unit.reshape(TensorShape::scalar(), flat(d)),
        })
    }

    /// Builds from structure constants `mult[k][i*d + j] = coefficient of e_k in e_i e_j`.
    pub fn from_matrix(field: Field, dim: usize, mult: Matrix, unit: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("algebra dimension must be positive"));
        }
        if unit.len() != dim {
            return Err(Error::input(format!("unit has length {}, expected {dim}", unit.len())));
        }
        let m = LinMap::new(TensorShape::new(vec![dim, dim]), flat(dim), mult)?;
        Algebra::new(m, LinMap::from_vector(field, &flat(dim), &unit))
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        Algebra::new(
            LinMap::identity(field, &flat(1)).reshape(TensorShape::new(vec![1, 1]), flat(1)),
            LinMap::from_vector(field, &flat(1), &[field.one()]),
        )
        .expect("ground algebra")
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    /// `k -> A`, `1 ↦ 1_A`.
    pub fn unit_map(&self) -> &LinMap {
        &self.unit
    }

    pub fn unit(&self) -> Vec<Scalar> {
        self.unit.matrix().column(0)
    }

    pub fn identity(&self) -> LinMap {
        id(self.field(), self.dim)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field(), self.dim, i)
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let xy = LinMap::from_vector(f, &flat(self.dim), x)
            .kron(&LinMap::from_vector(f, &flat(self.dim), y));
        self.mult.compose(&xy).matrix().column(0)
    }

    /// `a ↦ x a`.
    pub fn left_mult(&self, x: &[Scalar]) -> LinMap {
        let f = self.field();
        let xv = LinMap::from_vector(f, &flat(self.dim), x);
        self.mult.compose(&xv.kron(&self.identity())).reshape(flat(self.dim), flat(self.dim))
    }

    /// `a ↦ a x`.
    pub fn right_mult(&self, x: &[Scalar]) -> LinMap {
        let f = self.field();
        let xv = LinMap::from_vector(f, &flat(self.dim), x);
        self.mult.compose(&self.identity().kron(&xv)).reshape(flat(self.dim), flat(self.dim))
    }

    pub fn verify(&self) -> CheckReport {
        let mut r = CheckReport::new("algebra");
        let i = self.identity();
        let m = &self.mult;
        r.compare(
            "associativity",
            &chain(&[m, &m.kron(&i)]),
            &chain(&[m, &i.kron(m)]),
        );
        let ident = i.reshape(flat(self.dim), flat(self.dim));
        r.compare(
            "left unit",
            &chain(&[m, &self.unit.kron(&i)]).reshape(flat(self.dim), flat(self.dim)),
            &ident,
        );
        r.compare(
            "right unit",
            &chain(&[m, &i.kron(&self.unit)]).reshape(flat(self.dim), flat(self.dim)),
            &ident,
        );
        r
    }

    pub fn is_commutative(&self) -> bool {
        let tw = LinMap::twist(self.field(), &flat(self.dim), &flat(self.dim));
        self.mult.compose(&tw).same_map(&self.mult)
    }

    /// `A ⊗ Ã` with factorwise multiplication.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let f = self.field();
        let (a, b) = (self.dim, other.dim);
        let mid = id(f, a)
            .kron(&LinMap::twist(f, &flat(b), &flat(a)))
            .kron(&id(f, b));
        let mult = self.mult.kron(&other.mult).compose(&mid);
        Algebra::new(
            mult.reshape(TensorShape::new(vec![a * b, a * b]), flat(a * b)),
            self.unit.kron(&other.unit).reshape(TensorShape::scalar(), flat(a * b)),
        )
        .expect("tensor algebra shapes")
    }

    /// Dual coalgebra on the dual basis: transposed structure maps.
    pub fn dual(&self) -> Coalgebra {
        let d = self.dim;
        Coalgebra::new(
            LinMap::new(flat(d), TensorShape::new(vec![d, d]), self.mult.matrix().transpose())
                .expect("transpose shape"),
            LinMap::new(flat(d), TensorShape::scalar(), self.unit.matrix().transpose())
                .expect("transpose shape"),
        )
        .expect("dual coalgebra shapes")
    }

    /// Restricts the multiplication to a subspace closed under it.
    pub fn subalgebra(&self, b: &Subspace) -> Result<Algebra> {
        let f = self.field();
        let incl = b.inclusion();
        let prod = self.mult.compose(&incl.kron(&incl));
        let both = b.coordinates().compose(&prod);
        if !incl.compose(&both).same_map(&prod) {
            return Err(Error::domain("subspace is not closed under multiplication"));
        }
        let unit = b
            .coords(&self.unit())
            .ok_or_else(|| Error::domain("subspace does not contain the unit"))?;
        let n = b.dim();
        Algebra::new(
            both.reshape(TensorShape::new(vec![n, n]), flat(n)),
            LinMap::from_vector(f, &flat(n), &unit),
        )
    }
}

/// Coassociative counital coalgebra: `comult: C -> C⊗C`, `counit: C -> k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    comult: LinMap,
    counit: LinMap,
}

impl Coalgebra {
    pub fn new(comult: LinMap, counit: LinMap) -> Result<Self> {
        let d = counit.domain().total();
        if d == 0 {
            return Err(Error::input("coalgebra dimension must be positive"));
        }
        expect_shape("comultiplication", &comult, &[d], &[d, d])?;
        expect_shape("counit", &counit, &[d], &[])?;
        if comult.field() != counit.field() {
            return Err(Error::input("comultiplication and counit over different fields"));
        }
        Ok(Coalgebra {
            dim: d,
            comult: comult.reshape(flat(d), TensorShape::new(vec![d, d])),
            counit: counit.reshape(flat(d), TensorShape::scalar()),
        })
    }

    pub fn from_matrix(field: Field, dim: usize, comult: Matrix, counit: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("coalgebra dimension must be positive"));
        }
        if counit.len() != dim {
            return Err(Error::input(format!("counit has length {}, expected {dim}", counit.len())));
        }
        let d = LinMap::new(flat(dim), TensorShape::new(vec![dim, dim]), comult)?;
        Coalgebra::new(d, LinMap::from_covector(field, &flat(dim), &counit))
    }

    pub fn ground(field: Field) -> Self {
        Algebra::ground(field).dual()
    }

    /// `n` group-like basis elements: `Δ e_i = e_i ⊗ e_i`, `ε(e_i) = 1`.
    pub fn grouplike(field: Field, n: usize) -> Self {
        let shape = TensorShape::new(vec![n, n]);
        let comult = LinMap::from_basis_images(field, &flat(n), &shape, |i| {
            unit_vector(field, n * n, i[0] * n + i[0])
        });
        Coalgebra::new(comult, LinMap::from_covector(field, &flat(n), &vec![field.one(); n]))
            .expect("grouplike coalgebra")
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    /// `C -> k`.
    pub fn counit_map(&self) -> &LinMap {
        &self.counit
    }

    pub fn counit(&self) -> Vec<Scalar> {
        self.counit.matrix().row(0).to_vec()
    }

    pub fn identity(&self) -> LinMap {
        id(self.field(), self.dim)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field(), self.dim, i)
    }

    pub fn verify(&self) -> CheckReport {
        let mut r = CheckReport::new("coalgebra");
        let i = self.identity();
        let d = &self.comult;
        r.compare(
            "coassociativity",
            &chain(&[&d.kron(&i), d]),
            &chain(&[&i.kron(d), d]),
        );
        let ident = i.reshape(flat(self.dim), flat(self.dim));
        r.compare(
            "left counit",
            &chain(&[&self.counit.kron(&i), d]).reshape(flat(self.dim), flat(self.dim)),
            &ident,
        );
        r.compare(
            "right counit",
            &chain(&[&i.kron(&self.counit), d]).reshape(flat(self.dim), flat(self.dim)),
            &ident,
        );
        r
    }

    pub fn is_cocommutative(&self) -> bool {
        let tw = LinMap::twist(self.field(), &flat(self.dim), &flat(self.dim));
        tw.compose(&self.comult).same_map(&self.comult)
    }

    /// `C ⊗ C̃` with `Δ = (C⊗twist⊗C̃)(Δ⊗Δ̃)`.
    pub fn tensor(&self, other: &Coalgebra) -> Coalgebra {
        let f = self.field();
        let (a, b) = (self.dim, other.dim);
        let mid = id(f, a)
            .kron(&LinMap::twist(f, &flat(a), &flat(b)))
            .kron(&id(f, b));
        let comult = mid.compose(&self.comult.kron(&other.comult));
        Coalgebra::new(
            comult.reshape(flat(a * b), TensorShape::new(vec![a * b, a * b])),
            self.counit.kron(&other.counit).reshape(flat(a * b), TensorShape::scalar()),
        )
        .expect("tensor coalgebra shapes")
    }

    pub fn dual(&self) -> Algebra {
        let d = self.dim;
        Algebra::new(
            LinMap::new(TensorShape::new(vec![d, d]), flat(d), self.comult.matrix().transpose())
                .expect("transpose shape"),
            LinMap::new(TensorShape::scalar(), flat(d), self.counit.matrix().transpose())
                .expect("transpose shape"),
        )
        .expect("dual algebra shapes")
    }

    pub fn is_grouplike(&self, x: &[Scalar]) -> bool {
        let f = self.field();
        let v = LinMap::from_vector(f, &flat(self.dim), x);
        self.comult.compose(&v).same_map(&v.kron(&v))
            && self.counit.compose(&v).matrix().get(0, 0).is_one()
    }

    /// Checks that `i` is a coideal. On failure the error names a basis
    /// vector of `i` (by its position in the canonical basis) that violates
    /// the condition.
    pub fn check_coideal(&self, i: &Subspace) -> Result<()> {
        let f = self.field();
        let incl = i.inclusion();
        let eps = self.counit.compose(&incl);
        if let Some(j) = (0..i.dim()).find(|&j| !eps.matrix().get(0, j).is_zero()) {
            return Err(Error::domain(format!(
                "not a coideal: counit does not vanish on basis vector {j} {:?}",
                i.basis()[j].iter().map(|s| s.to_string()).collect::<Vec<_>>()
            )));
        }
        let c = flat(self.dim);
        let sum = i.tensor_right(&c).sum(&tensor_left(f, &c, i));
        let img = self.comult.compose(&incl);
        for j in 0..i.dim() {
            if !sum.contains(&img.matrix().column(j)) {
                return Err(Error::domain(format!(
                    "not a coideal: comultiplication of basis vector {j} leaves I⊗C + C⊗I"
                )));
            }
        }
        Ok(())
    }

    /// `C/I` with complement basis chosen by the echelon pivots of `I`,
    /// together with the projection `π: C -> C/I`.
    pub fn quotient(&self, i: &Subspace) -> Result<(Coalgebra, LinMap)> {
        if i.ambient().total() != self.dim {
            return Err(Error::input("coideal lives in a space of the wrong dimension"));
        }
        self.check_coideal(i)?;
        let q = Quotient::new(i.clone());
        if q.dim() == 0 {
            return Err(Error::domain("not a coideal: the counit does not vanish on I = C"));
        }
        let pi = q.projection();
        let sigma = q.section();
        let n = q.dim();
        let comult = chain(&[&pi.kron(&pi), &self.comult, &sigma]);
        let counit = self.counit.compose(&sigma);
        let quot = Coalgebra::new(
            comult.reshape(flat(n), TensorShape::new(vec![n, n])),
            counit.reshape(flat(n), TensorShape::scalar()),
        )?;
        Ok((quot, pi.reshape(flat(self.dim), flat(n))))
    }
}

/// `U ⊗ S` as a subspace of `U ⊗ V`.
fn tensor_left(field: Field, left: &TensorShape, s: &Subspace) -> Subspace {
    let idl = LinMap::identity(field, left);
    Subspace::from_columns(&left.concat(s.ambient()), idl.kron(&s.inclusion()).matrix())
}

/// Either kind of structure, for the duality involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
}

/// Exchanges algebras and coalgebras by transposing structure maps.
pub fn dual_swap(x: &Structure) -> Structure {
    match x {
        Structure::Algebra(a) => Structure::Coalgebra(a.dual()),
        Structure::Coalgebra(c) => Structure::Algebra(c.dual()),
    }
}

/// Right `A`-module axioms for `action: M⊗A -> M`.
pub fn verify_right_module(alg: &Algebra, dim: usize, action: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("right module");
    let f = alg.field();
    let (im, ia) = (id(f, dim), alg.identity());
    r.compare(
        "associativity",
        &chain(&[action, &action.kron(&ia)]),
        &chain(&[action, &im.kron(alg.mult())]),
    );
    r.compare(
        "unit",
        &chain(&[action, &im.kron(alg.unit_map())]),
        &im,
    );
    r
}

/// Left `A`-module axioms for `action: A⊗M -> M`.
pub fn verify_left_module(alg: &Algebra, dim: usize, action: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("left module");
    let f = alg.field();
    let (im, ia) = (id(f, dim), alg.identity());
    r.compare(
        "associativity",
        &chain(&[action, &ia.kron(action)]),
        &chain(&[action, &alg.mult().kron(&im)]),
    );
    r.compare("unit", &chain(&[action, &alg.unit_map().kron(&im)]), &im);
    r
}

/// Right `C`-comodule axioms for `coaction: M -> M⊗C`.
pub fn verify_right_comodule(coalg: &Coalgebra, dim: usize, coaction: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("right comodule");
    let f = coalg.field();
    let (im, ic) = (id(f, dim), coalg.identity());
    r.compare(
        "coassociativity",
        &chain(&[&coaction.kron(&ic), coaction]),
        &chain(&[&im.kron(coalg.comult()), coaction]),
    );
    r.compare("counit", &chain(&[&im.kron(coalg.counit_map()), coaction]), &im);
    r
}

/// Left `C`-comodule axioms for `coaction: M -> C⊗M`.
pub fn verify_left_comodule(coalg: &Coalgebra, dim: usize, coaction: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("left comodule");
    let f = coalg.field();
    let (im, ic) = (id(f, dim), coalg.identity());
    r.compare(
        "coassociativity",
        &chain(&[&ic.kron(coaction), coaction]),
        &chain(&[&coalg.comult().kron(&im), coaction]),
    );
    r.compare("counit", &chain(&[&coalg.counit_map().kron(&im), coaction]), &im);
    r
}

/// Algebra map axioms for `f: A -> Ã`.
pub fn verify_algebra_map(src: &Algebra, dst: &Algebra, f: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("algebra map");
    r.compare(
        "multiplicative",
        &chain(&[f, src.mult()]),
        &chain(&[dst.mult(), &f.kron(f)]),
    );
    r.compare("unital", &chain(&[f, src.unit_map()]), dst.unit_map());
    r
}

/// Coalgebra map axioms for `g: C -> C̃`.
pub fn verify_coalgebra_map(src: &Coalgebra, dst: &Coalgebra, g: &LinMap) -> CheckReport {
    let mut r = CheckReport::new("coalgebra map");
    r.compare(
        "comultiplicative",
        &chain(&[dst.comult(), g]),
        &chain(&[&g.kron(g), src.comult()]),
    );
    r.compare("counital", &chain(&[dst.counit_map(), g]), src.counit_map());
    r
}

/// Bialgebra compatibility of an algebra and a coalgebra on the same space,
/// plus the antipode identities when `antipode` is given.
pub fn verify_hopf(alg: &Algebra, coalg: &Coalgebra, antipode: Option<&LinMap>) -> CheckReport {
    let mut r = CheckReport::new("hopf algebra");
    let d = alg.dim();
    if coalg.dim() != d {
        r.require("same underlying space", false, None);
        return r;
    }
    let f = alg.field();
    let i = alg.identity();
    let (mu, eta) = (alg.mult(), alg.unit_map());
    let (delta, eps) = (coalg.comult(), coalg.counit_map());
    let mid = tensor(&[&i, &LinMap::twist(f, &flat(d), &flat(d)), &i]);
    r.compare(
        "comultiplication is multiplicative",
        &chain(&[delta, mu]),
        &chain(&[&mu.kron(mu), &mid, &delta.kron(delta)]),
    );
    r.compare("comultiplication is unital", &chain(&[delta, eta]), &eta.kron(eta));
    r.compare("counit is multiplicative", &chain(&[eps, mu]), &eps.kron(eps));
    r.compare("counit is unital", &chain(&[eps, eta]), &id(f, 1));
    if let Some(s) = antipode {
        let s = s.reshape(flat(d), flat(d));
        let target = chain(&[eta, eps]);
        r.compare("left antipode", &chain(&[mu, &s.kron(&i), delta]), &target);
        r.compare("right antipode", &chain(&[mu, &i.kron(&s), delta]), &target);
    }
    r
}
