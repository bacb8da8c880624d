//! The `entwine/1` JSON document and certificate formats.
//!
//! Matrices are lists of rows, codomain rows by domain columns, with tensor
//! factors flattened row-major in the order given per field. Scalars are
//! JSON integers or strings (`"-3/4"` over ℚ, residues over 𝔽_p).

use serde::{Deserialize, Serialize};

use crate::catalog::Structures;
use crate::check::CheckReport;
use crate::entmod::EntwinedModule;
use crate::entwining::{Entwining, EntwiningMorphism};
use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, LinMap, Matrix, Scalar, Subspace, TensorShape};
use crate::galois::{Coextension, GaloisExtension};
use crate::hochschild::Bimodule;
use crate::separability::{
    check_phi, split_from_phi, strong_tau, verify_expectation, verify_idempotent, verify_upsilon,
};
use crate::structures::{verify_hopf, Algebra, Coalgebra};
use crate::witness::{check_witness, FrakzSetup, LambdaSetup, MorphismWitness, Side, Witness, WitnessKind};

pub const SCHEMA: &str = "entwine/1";

/// A scalar as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawScalar {
    Int(i64),
    Text(String),
}

pub type RawVector = Vec<RawScalar>;
pub type RawMatrix = Vec<Vec<RawScalar>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    /// `A⊗A -> A`.
    pub mult: RawMatrix,
    pub unit: RawVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub dim: usize,
    /// `C -> C⊗C`.
    pub comult: RawMatrix,
    pub counit: RawVector,
}

/// Right `A`-module, right `C`-comodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub dim: usize,
    /// `M⊗A -> M`.
    pub action: RawMatrix,
    /// `M -> M⊗C`.
    pub coaction: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub dim: usize,
    /// `A⊗M -> M`.
    pub left: RawMatrix,
    /// `M⊗A -> M`.
    pub right: RawMatrix,
}

/// The entwining morphism a document refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismChoice {
    /// `(A, ε_C): (A, C)_ψ -> (A, k)`.
    Counit,
    /// `(1_A, C): (k, C) -> (A, C)_ψ`.
    Unit,
    Identity,
}

impl MorphismChoice {
    pub fn build(self, e: &Entwining) -> EntwiningMorphism {
        match self {
            MorphismChoice::Counit => EntwiningMorphism::counit_morphism(e),
            MorphismChoice::Unit => EntwiningMorphism::unit_morphism(e),
            MorphismChoice::Identity => EntwiningMorphism::identity(e),
        }
    }
}

/// Top-level structure file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Document {
    pub schema: String,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<CoalgebraDoc>,
    /// `C⊗A -> A⊗C`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<RawMatrix>,
    /// `A -> A⊗C`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction_a: Option<RawMatrix>,
    /// `C⊗A -> C`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action_c: Option<RawMatrix>,
    /// `H -> H` on the common space of algebra and coalgebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<MorphismChoice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleDoc>,
    /// Spanning vectors of a subalgebra `B ⊆ A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<Vec<RawVector>>,
}

fn scalar(field: Field, raw: &RawScalar, path: &str) -> Result<Scalar> {
    let s = match raw {
        RawScalar::Int(n) => match field {
            Field::Rationals => Ok(field.from_i64(*n)),
            Field::Prime(p) if (0..p as i64).contains(n) => Ok(field.from_i64(*n)),
            Field::Prime(p) => Err(Error::input(format!("residue {n} not in [0, {p})"))),
        },
        RawScalar::Text(t) => field.parse(t),
    };
    s.map_err(|e| Error::input(format!("{path}: {e}")))
}

fn raw_scalar(s: &Scalar) -> RawScalar {
    let text = s.to_string();
    match text.parse::<i64>() {
        Ok(n) => RawScalar::Int(n),
        Err(_) => RawScalar::Text(text),
    }
}

pub fn vector(field: Field, raw: &[RawScalar], len: usize, path: &str) -> Result<Vec<Scalar>> {
    if raw.len() != len {
        return Err(Error::input(format!("{path}: expected {len} entries, got {}", raw.len())));
    }
    raw.iter()
        .enumerate()
        .map(|(i, x)| scalar(field, x, &format!("{path}[{i}]")))
        .collect()
}

pub fn raw_vector(v: &[Scalar]) -> RawVector {
    v.iter().map(raw_scalar).collect()
}

pub fn matrix(field: Field, raw: &RawMatrix, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
    if raw.len() != rows {
        return Err(Error::input(format!("{path}: expected {rows} rows, got {}", raw.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in raw.iter().enumerate() {
        data.extend(vector(field, row, cols, &format!("{path}[{i}]"))?);
    }
    Ok(Matrix::from_data(field, rows, cols, data))
}

pub fn raw_matrix(m: &LinMap) -> RawMatrix {
    let mx = m.matrix();
    (0..mx.rows()).map(|i| raw_vector(mx.row(i))).collect()
}

/// Reads a map with the given factor shapes.
pub fn linmap(field: Field, raw: &RawMatrix, dom: &[usize], cod: &[usize], path: &str) -> Result<LinMap> {
    let (dom, cod) = (TensorShape::new(dom.to_vec()), TensorShape::new(cod.to_vec()));
    let m = matrix(field, raw, cod.total(), dom.total(), path)?;
    LinMap::new(dom, cod, m)
}

/// A document with every section converted and verified where it can be.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub field: Field,
    pub structures: Structures,
    pub module: Option<(usize, LinMap, LinMap)>,
    pub morphism: Option<MorphismChoice>,
    pub bimodule: Option<Bimodule>,
    pub subalgebra: Option<Subspace>,
}

fn need<'a, T>(x: &'a Option<T>, what: &str, section: &str) -> Result<&'a T> {
    x.as_ref()
        .ok_or_else(|| Error::input(format!("section {section:?} requires {what:?}")))
}

impl Document {
    pub fn from_json(text: &str) -> Result<Document> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::input(format!("JSON: {e}")))?;
        if doc.schema != SCHEMA {
            return Err(Error::input(format!("schema {:?}, expected {SCHEMA:?}", doc.schema)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }

    pub fn from_structures(field: Field, s: &Structures) -> Document {
        Document {
            schema: SCHEMA.into(),
            field: field.into(),
            algebra: s.algebra.as_ref().map(|a| AlgebraDoc {
                dim: a.dim(),
                mult: raw_matrix(a.mult()),
                unit: raw_vector(&a.unit()),
            }),
            coalgebra: s.coalgebra.as_ref().map(|c| CoalgebraDoc {
                dim: c.dim(),
                comult: raw_matrix(c.comult()),
                counit: raw_vector(&c.counit()),
            }),
            psi: s.psi.as_ref().map(raw_matrix),
            coaction_a: s.coaction_a.as_ref().map(raw_matrix),
            action_c: s.action_c.as_ref().map(raw_matrix),
            antipode: s.antipode.as_ref().map(raw_matrix),
            module: None,
            morphism: None,
            bimodule: None,
            subalgebra: None,
        }
    }

    /// Converts every section; algebraic axioms of the algebra and coalgebra
    /// are enforced, the rest is left to [`Parsed::check`].
    pub fn parse(&self) -> Result<Parsed> {
        let f = self.field.to_field()?;
        let algebra = match &self.algebra {
            None => None,
            Some(a) => {
                let mult = matrix(f, &a.mult, a.dim, a.dim * a.dim, "algebra.mult")?;
                let unit = vector(f, &a.unit, a.dim, "algebra.unit")?;
                Some(Algebra::from_matrix(f, a.dim, mult, unit).map_err(as_input("algebra"))?)
            }
        };
        let coalgebra = match &self.coalgebra {
            None => None,
            Some(c) => {
                let comult = matrix(f, &c.comult, c.dim * c.dim, c.dim, "coalgebra.comult")?;
                let counit = vector(f, &c.counit, c.dim, "coalgebra.counit")?;
                Some(Coalgebra::from_matrix(f, c.dim, comult, counit).map_err(as_input("coalgebra"))?)
            }
        };
        let da = algebra.as_ref().map(Algebra::dim);
        let dc = coalgebra.as_ref().map(Coalgebra::dim);
        let psi = match &self.psi {
            None => None,
            Some(m) => {
                let (a, c) = (*need(&da, "algebra", "psi")?, *need(&dc, "coalgebra", "psi")?);
                Some(linmap(f, m, &[c, a], &[a, c], "psi")?)
            }
        };
        let coaction_a = match &self.coaction_a {
            None => None,
            Some(m) => {
                let (a, c) = (*need(&da, "algebra", "coactionA")?, *need(&dc, "coalgebra", "coactionA")?);
                Some(linmap(f, m, &[a], &[a, c], "coactionA")?)
            }
        };
        let action_c = match &self.action_c {
            None => None,
            Some(m) => {
                let (a, c) = (*need(&da, "algebra", "actionC")?, *need(&dc, "coalgebra", "actionC")?);
                Some(linmap(f, m, &[c, a], &[c], "actionC")?)
            }
        };
        let antipode = match &self.antipode {
            None => None,
            Some(m) => {
                let (a, c) = (*need(&da, "algebra", "antipode")?, *need(&dc, "coalgebra", "antipode")?);
                if a != c {
                    return Err(Error::input("antipode: algebra and coalgebra dimensions differ"));
                }
                Some(linmap(f, m, &[a], &[a], "antipode")?)
            }
        };
        let module = match &self.module {
            None => None,
            Some(m) => {
                let (a, c) = (*need(&da, "algebra", "module")?, *need(&dc, "coalgebra", "module")?);
                let act = linmap(f, &m.action, &[m.dim, a], &[m.dim], "module.action")?;
                let coact = linmap(f, &m.coaction, &[m.dim], &[m.dim, c], "module.coaction")?;
                Some((m.dim, act, coact))
            }
        };
        let bimodule = match &self.bimodule {
            None => None,
            Some(m) => {
                let alg = need(&algebra, "algebra", "bimodule")?;
                let a = alg.dim();
                let l = linmap(f, &m.left, &[a, m.dim], &[m.dim], "bimodule.left")?;
                let r = linmap(f, &m.right, &[m.dim, a], &[m.dim], "bimodule.right")?;
                Some(Bimodule::new(alg, m.dim, l, r).map_err(as_input("bimodule"))?)
            }
        };
        let subalgebra = match &self.subalgebra {
            None => None,
            Some(vs) => {
                let a = *need(&da, "algebra", "subalgebra")?;
                let vecs = vs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| vector(f, v, a, &format!("subalgebra[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(Subspace::span(f, &TensorShape::flat(a), &vecs))
            }
        };
        if self.morphism.is_some() && psi.is_none() {
            return Err(Error::input("section \"morphism\" requires \"psi\""));
        }
        Ok(Parsed {
            field: f,
            structures: Structures {
                algebra,
                coalgebra,
                psi,
                coaction_a,
                action_c,
                antipode,
            },
            module,
            morphism: self.morphism,
            bimodule,
            subalgebra,
        })
    }
}

fn as_input(section: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Input(m) => Error::Input(format!("{section}: {m}")),
        other => Error::Input(format!("{section}: {other}")),
    }
}

impl Parsed {
    pub fn from_json(text: &str) -> Result<Parsed> {
        Document::from_json(text)?.parse()
    }

    pub fn algebra(&self) -> Result<&Algebra> {
        need(&self.structures.algebra, "algebra", "this command")
    }

    pub fn entwining(&self) -> Result<Entwining> {
        self.structures
            .entwining()
            .ok_or_else(|| Error::input("an entwining needs \"algebra\", \"coalgebra\" and \"psi\""))?
    }

    pub fn galois(&self) -> Result<GaloisExtension> {
        self.structures
            .galois()
            .ok_or_else(|| Error::input("an extension needs \"algebra\", \"coalgebra\" and \"coactionA\""))?
    }

    pub fn coextension(&self) -> Result<Coextension> {
        self.structures
            .coextension()
            .ok_or_else(|| Error::input("a coextension needs \"algebra\", \"coalgebra\" and \"actionC\""))?
    }

    pub fn morphism(&self) -> Result<EntwiningMorphism> {
        let e = self.entwining()?;
        Ok(self.morphism.unwrap_or(MorphismChoice::Counit).build(&e))
    }

    pub fn entwined_module(&self) -> Result<Option<EntwinedModule>> {
        match &self.module {
            None => Ok(None),
            Some((d, act, coact)) => Ok(Some(EntwinedModule::unverified(
                &self.entwining()?,
                *d,
                act.clone(),
                coact.clone(),
            )?)),
        }
    }

    /// `B` from the `subalgebra` section, else the coinvariants of
    /// `coactionA`, else the scalars.
    pub fn base_subalgebra(&self) -> Result<Subspace> {
        if let Some(b) = &self.subalgebra {
            return Ok(b.clone());
        }
        if self.structures.coaction_a.is_some() {
            return Ok(self.galois()?.b);
        }
        let a = self.algebra()?;
        Ok(Subspace::span(self.field, &TensorShape::flat(a.dim()), &[a.unit()]))
    }

    /// One report per present structure, in a fixed order. Construction
    /// failures of composite structures are recorded as failed checks.
    pub fn check(&self) -> Vec<CheckReport> {
        let s = &self.structures;
        let mut out = Vec::new();
        if let Some(a) = &s.algebra {
            out.push(a.verify());
        }
        if let Some(c) = &s.coalgebra {
            out.push(c.verify());
        }
        if let (Some(a), Some(c)) = (&s.algebra, &s.coalgebra) {
            if s.antipode.is_some() {
                out.push(verify_hopf(a, c, s.antipode.as_ref()));
            }
        }
        if let Some(psi) = &s.psi {
            out.push(match (&s.algebra, &s.coalgebra) {
                (Some(a), Some(c)) => match Entwining::unverified(a.clone(), c.clone(), psi.clone()) {
                    Ok(e) => e.verify(),
                    Err(err) => failed("entwining", &err),
                },
                _ => failed("entwining", &Error::input("psi without algebra and coalgebra")),
            });
        }
        if s.coaction_a.is_some() {
            out.push(match self.galois() {
                Ok(g) => g.verify_can(),
                Err(err) => failed("coalgebra-Galois extension", &err),
            });
        }
        if s.action_c.is_some() {
            out.push(match self.coextension() {
                Ok(_) => {
                    let mut r = CheckReport::new("coalgebra-Galois coextension");
                    r.require("cocanonical map bijective", true, None);
                    r
                }
                Err(err) => failed("coalgebra-Galois coextension", &err),
            });
        }
        if let Ok(e) = self.entwining() {
            if let Ok(Some(m)) = self.entwined_module() {
                out.push(m.verify());
            }
            if let Some(choice) = self.morphism {
                out.push(choice.build(&e).verify());
            }
        } else if self.module.is_some() || self.morphism.is_some() {
            out.push(failed("entwined data", &Error::domain("no valid entwining")));
        }
        if let (Some(m), Some(a)) = (&self.bimodule, &s.algebra) {
            out.push(m.verify(a));
        }
        out
    }
}

fn failed(subject: &str, err: &Error) -> CheckReport {
    let mut r = CheckReport::new(subject);
    r.require(err.to_string(), false, None);
    r
}

/// A witness that can be re-verified against the structures it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Certificate {
    Witness {
        witness: WitnessKind,
        normalized: bool,
        value: RawMatrix,
    },
    /// `λ` or `𝔷` of the document's morphism, in the coordinates the
    /// library uses for the relevant sub/quotient space.
    Morphism {
        side: Side,
        total: bool,
        value: RawMatrix,
    },
    /// `u ∈ A⊗_B A` in quotient coordinates.
    Separability { u: RawVector },
    /// `φ: C -> A`.
    Split { phi: RawMatrix },
    StrongSeparability {
        u: RawVector,
        e: RawMatrix,
        tau: RawScalar,
    },
    /// `υ` on coordinates of `C□_B C`.
    Coseparability { upsilon: RawMatrix },
}

/// A certificate file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub schema: String,
    pub field: FieldSpec,
    pub certificate: Certificate,
}

impl CertificateDoc {
    pub fn new(field: Field, certificate: Certificate) -> Self {
        CertificateDoc {
            schema: SCHEMA.into(),
            field: field.into(),
            certificate,
        }
    }

    pub fn from_json(text: &str) -> Result<CertificateDoc> {
        let doc: CertificateDoc = serde_json::from_str(text).map_err(|e| Error::input(format!("JSON: {e}")))?;
        if doc.schema != SCHEMA {
            return Err(Error::input(format!("schema {:?}, expected {SCHEMA:?}", doc.schema)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }
}

impl Certificate {
    pub fn from_witness(w: &Witness) -> Self {
        Certificate::Witness {
            witness: w.kind,
            normalized: w.normalized,
            value: raw_matrix(&w.value),
        }
    }

    pub fn from_morphism_witness(w: &MorphismWitness) -> Self {
        Certificate::Morphism {
            side: w.side,
            total: w.total,
            value: raw_matrix(&w.map),
        }
    }

    /// Re-verifies against `doc`; `Ok` with a failing report when the data
    /// parse but an identity fails.
    pub fn verify(&self, doc: &Parsed) -> Result<CheckReport> {
        let f = doc.field;
        match self {
            Certificate::Witness { witness, normalized, value } => {
                let e = doc.entwining()?;
                let (dom, cod) = witness.shapes(&e);
                let x = linmap(f, value, dom.factors(), cod.factors(), "certificate.value")?;
                check_witness(*witness, &e, &x, *normalized)
            }
            Certificate::Morphism { side, total, value } => {
                let mor = doc.morphism()?;
                match side {
                    Side::Lambda => {
                        let s = LambdaSetup::new(&mor)?;
                        let (dom, cod) = s.lambda_shapes();
                        let map = linmap(f, value, dom.factors(), cod.factors(), "certificate.value")?;
                        s.check(&MorphismWitness { side: *side, map, total: *total })
                    }
                    Side::FrakZ => {
                        let s = FrakzSetup::new(&mor)?;
                        let (dom, cod) = s.frakz_shapes();
                        let map = linmap(f, value, dom.factors(), cod.factors(), "certificate.value")?;
                        s.check(&MorphismWitness { side: *side, map, total: *total })
                    }
                }
            }
            Certificate::Separability { u } => {
                let g = doc.galois()?;
                let u = vector(f, u, g.a_tens_b_a.dim(), "certificate.u")?;
                Ok(verify_idempotent(&g, &u))
            }
            Certificate::Split { phi } => {
                let g = doc.galois()?;
                let phi = linmap(f, phi, &[g.coalg.dim()], &[g.alg.dim()], "certificate.phi")?;
                let mut r = check_phi(&g, &phi);
                if r.passed() {
                    let s = split_from_phi(&g, &phi)?;
                    r.absorb(verify_expectation(&g, &s.e));
                }
                Ok(r)
            }
            Certificate::StrongSeparability { u, e, tau } => {
                let g = doc.galois()?;
                let u = vector(f, u, g.a_tens_b_a.dim(), "certificate.u")?;
                let d = g.alg.dim();
                let e = linmap(f, e, &[d], &[d], "certificate.e")?;
                let tau = scalar(f, tau, "certificate.tau")?;
                let mut r = verify_idempotent(&g, &u);
                r.absorb(verify_expectation(&g, &e));
                if r.passed() {
                    let rep = g.a_tens_b_a.section().apply(&u);
                    let ok = matches!(strong_tau(&g, &rep, &e), Ok(t) if t == tau);
                    r.require("Σ E(a u_i) u^i = τa = Σ u_i E(u^i a), τ invertible", ok, None);
                }
                Ok(r)
            }
            Certificate::Coseparability { upsilon } => {
                let x = doc.coextension()?;
                let u = linmap(f, upsilon, &[x.cotensor.dim()], &[], "certificate.upsilon")?;
                verify_upsilon(&x, &u)
            }
        }
    }
}
