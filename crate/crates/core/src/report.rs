//! Serializable summaries of the analyses, shared by the CLI and the C ABI.

use std::fmt;

use serde::Serialize;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::galois::{Coextension, GaloisExtension};
use crate::hochschild::{bimodule_battery, relative_complex, Bimodule};
use crate::io::{raw_matrix, raw_vector, Certificate, Parsed, RawMatrix};
use crate::separability::{
    check_coseparable, check_separable, check_split, check_strongly_separable, Strategy,
};
use crate::witness::{solve_witness, FrakzSetup, LambdaSetup, Witness, WitnessKind};

/// What `solve` looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveKind {
    Witness(WitnessKind),
    /// `λ` for the document's morphism.
    Lambda,
    /// `𝔷` for the document's morphism.
    Frakz,
}

impl SolveKind {
    pub fn parse(text: &str) -> Result<SolveKind> {
        Ok(match text {
            "integral" => SolveKind::Witness(WitnessKind::Integral),
            "cointegral" => SolveKind::Witness(WitnessKind::Cointegral),
            "integral-map" => SolveKind::Witness(WitnessKind::IntegralMap),
            "cointegral-map" => SolveKind::Witness(WitnessKind::CointegralMap),
            "lambda" => SolveKind::Lambda,
            "frakz" => SolveKind::Frakz,
            other => return Err(Error::input(format!("unknown witness kind {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveReport {
    pub kind: String,
    pub normalized: bool,
    pub feasible: bool,
    /// Dimension of the solution family (of its homogeneous part).
    pub family_dim: usize,
    pub unknowns: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// `normalized` selects the normalised or, for morphisms, the total version.
pub fn solve(doc: &Parsed, kind: SolveKind, normalized: bool) -> Result<SolveReport> {
    let (name, set, certificate) = match kind {
        SolveKind::Witness(k) => {
            let e = doc.entwining()?;
            let set = solve_witness(k, &e, normalized);
            let cert = match &set.particular {
                Some(p) => Some(Certificate::from_witness(&Witness::from_solution(k, &e, p, normalized)?)),
                None => None,
            };
            (k.name().to_string(), set, cert)
        }
        SolveKind::Lambda => {
            let s = LambdaSetup::new(&doc.morphism()?)?;
            let set = s.solve(normalized);
            let cert = match &set.particular {
                Some(p) => Some(Certificate::from_morphism_witness(&s.witness(p, normalized)?)),
                None => None,
            };
            ("lambda".to_string(), set, cert)
        }
        SolveKind::Frakz => {
            let s = FrakzSetup::new(&doc.morphism()?)?;
            let set = s.solve(normalized);
            let cert = match &set.particular {
                Some(p) => Some(Certificate::from_morphism_witness(&s.witness(p, normalized)?)),
                None => None,
            };
            ("frakz".to_string(), set, cert)
        }
    };
    Ok(SolveReport {
        kind: name,
        normalized,
        feasible: set.is_feasible(),
        family_dim: set.dim(),
        unknowns: set.unknowns(),
        certificate,
    })
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let norm = if self.normalized { " (normalised)" } else { "" };
        if !self.feasible {
            return writeln!(f, "{}{norm}: infeasible", self.kind);
        }
        writeln!(
            f,
            "{}{norm}: feasible, family of dimension {} in {} unknowns",
            self.kind, self.family_dim, self.unknowns
        )?;
        if let Some(Certificate::Witness { value, .. } | Certificate::Morphism { value, .. }) = &self.certificate {
            writeln!(f, "particular solution:")?;
            write_matrix(f, value)?;
        }
        Ok(())
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &RawMatrix) -> fmt::Result {
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| serde_json::to_string(x).unwrap().replace('"', "")).collect();
        writeln!(f, "  [{}]", cells.join(", "))?;
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StrongSummary {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    pub inconclusive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomologyLine {
    pub bimodule: String,
    pub h0: usize,
    pub h1: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtensionReport {
    pub dim_a: usize,
    pub dim_c: usize,
    pub dim_b: usize,
    pub canonical_map: CheckReport,
    pub separable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separability: Option<Certificate>,
    pub split: bool,
    pub split_family_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_certificate: Option<Certificate>,
    pub strong: StrongSummary,
    pub hochschild: Vec<CohomologyLine>,
    pub caveats: Vec<String>,
}

impl ExtensionReport {
    /// Exit status: separability and the canonical map checks.
    pub fn passed(&self) -> bool {
        self.canonical_map.passed() && self.separable
    }
}

pub fn extension_report(g: &GaloisExtension) -> Result<ExtensionReport> {
    let sep = check_separable(g);
    let split = check_split(g)?;
    let strong = check_strongly_separable(g, &Strategy::FixedIntegralLinearPhi)?;
    let mut hochschild = Vec::new();
    for (name, m) in bimodule_battery(&g.alg, &[])? {
        hochschild.push(cohomology_line(g, name, &m)?);
    }
    let mut caveats = Vec::new();
    if sep.is_none() && hochschild.iter().all(|l| l.h1 == 0) {
        caveats.push("H¹ vanishes on the tested bimodules, which does not imply separability".into());
    }
    if strong.inconclusive {
        caveats.push("the strong-separability search was inconclusive".into());
    }
    Ok(ExtensionReport {
        dim_a: g.alg.dim(),
        dim_c: g.coalg.dim(),
        dim_b: g.b.dim(),
        canonical_map: g.verify_can(),
        separable: sep.is_some(),
        separability: sep.map(|c| Certificate::Separability { u: raw_vector(&c.u) }),
        split: split.certificate.is_some(),
        split_family_dim: split.family.is_feasible().then(|| split.family.dim()),
        split_certificate: split.certificate.map(|c| Certificate::Split { phi: raw_matrix(&c.phi) }),
        strong: StrongSummary {
            found: strong.certificate.is_some(),
            tau: strong.certificate.as_ref().map(|c| c.tau.to_string()),
            inconclusive: strong.inconclusive,
            right_free: strong.right_free,
            diagnostic: strong.diagnostic,
            certificate: strong.certificate.map(|c| Certificate::StrongSeparability {
                u: raw_vector(&c.cert.u),
                e: raw_matrix(&c.split.e),
                tau: raw_vector(&[c.tau])[0].clone(),
            }),
        },
        hochschild,
        caveats,
    })
}

fn cohomology_line(g: &GaloisExtension, name: String, m: &Bimodule) -> Result<CohomologyLine> {
    let c = relative_complex(&g.alg, &g.b, m, 2)?;
    Ok(CohomologyLine {
        bimodule: name,
        h0: c.cohomology(0)?.dim,
        h1: c.cohomology(1)?.dim,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

impl fmt::Display for ExtensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coalgebra-Galois extension: dim A = {}, dim C = {}, dim B = {}", self.dim_a, self.dim_c, self.dim_b)?;
        writeln!(f, "canonical map checks: {}", if self.canonical_map.passed() { "pass" } else { "FAIL" })?;
        writeln!(f, "separable: {}", yes(self.separable))?;
        if let Some(Certificate::Separability { u }) = &self.separability {
            write_matrix(f, &vec![u.clone()])?;
        }
        match self.split_family_dim {
            Some(d) => writeln!(f, "split: true (family of dimension {d})")?,
            None => writeln!(f, "split: false")?,
        }
        let s = &self.strong;
        write!(f, "strong: {{found: {}", yes(s.found))?;
        if let Some(t) = &s.tau {
            write!(f, ", tau: \"{t}\"")?;
        }
        if s.inconclusive {
            write!(f, ", inconclusive")?;
        }
        writeln!(f, "}}")?;
        for l in &self.hochschild {
            writeln!(f, "H⁰ = {}, H¹ = {} for the {} bimodule", l.h0, l.h1, l.bimodule)?;
        }
        for c in &self.caveats {
            writeln!(f, "note: {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoextensionReport {
    pub dim_c: usize,
    pub dim_a: usize,
    /// Dimension of the quotient coalgebra `C/I`.
    pub dim_b: usize,
    pub coseparable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coseparability: Option<Certificate>,
    /// Whether a cotranslation map from a group-like in `C/I` exists and is
    /// a normalised integral map.
    pub cotranslation: Option<bool>,
}

impl CoextensionReport {
    pub fn passed(&self) -> bool {
        self.coseparable
    }
}

pub fn coextension_report(x: &Coextension) -> Result<CoextensionReport> {
    let cos = check_coseparable(x)?;
    let cotranslation = match x.cotranslation_map() {
        Ok(gamma) => Some(Witness::new(WitnessKind::IntegralMap, &x.entwining, gamma, true).is_ok()),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(CoextensionReport {
        dim_c: x.coalg.dim(),
        dim_a: x.alg.dim(),
        dim_b: x.b.dim(),
        coseparable: cos.is_some(),
        coseparability: cos.map(|c| Certificate::Coseparability { upsilon: raw_matrix(&c.upsilon) }),
        cotranslation,
    })
}

impl fmt::Display for CoextensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coalgebra-Galois coextension: dim C = {}, dim A = {}, dim C/I = {}", self.dim_c, self.dim_a, self.dim_b)?;
        writeln!(f, "coseparable: {}", yes(self.coseparable))?;
        if let Some(Certificate::Coseparability { upsilon }) = &self.coseparability {
            write_matrix(f, upsilon)?;
        }
        match self.cotranslation {
            Some(ok) => writeln!(f, "cotranslation is a normalised integral map: {}", yes(ok)),
            None => writeln!(f, "cotranslation: no group-like available"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HochschildReport {
    pub degree: usize,
    /// `dim C^k` for `k = 0..=degree + 1`.
    pub cochain_dims: Vec<usize>,
    pub dim: usize,
    pub delta_squared_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representative: Option<RawMatrix>,
}

/// `H^n(A, B, M)` with `M` from the document (regular bimodule if absent)
/// and `B` from [`Parsed::base_subalgebra`].
pub fn hochschild_report(doc: &Parsed, n: usize) -> Result<HochschildReport> {
    let alg = doc.algebra()?;
    let b = doc.base_subalgebra()?;
    let m = doc.bimodule.clone().unwrap_or_else(|| Bimodule::regular(alg));
    let c = relative_complex(alg, &b, &m, n + 1)?;
    let h = c.cohomology(n)?;
    Ok(HochschildReport {
        degree: n,
        cochain_dims: c.spaces.iter().map(|s| s.dim()).collect(),
        dim: h.dim,
        delta_squared_zero: c.verify().passed(),
        representative: h.representatives.first().map(raw_matrix),
    })
}

impl fmt::Display for HochschildReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.cochain_dims.iter().map(ToString::to_string).collect();
        writeln!(f, "dim C^k: {}", dims.join(", "))?;
        writeln!(f, "δ∘δ = 0: {}", yes(self.delta_squared_zero))?;
        writeln!(f, "dim H^{} = {}", self.degree, self.dim)?;
        if let Some(r) = &self.representative {
            writeln!(f, "representative cocycle:")?;
            write_matrix(f, r)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub reports: Vec<CheckReport>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }
}

impl fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reports.is_empty() {
            return writeln!(f, "no structures present");
        }
        for r in &self.reports {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}
