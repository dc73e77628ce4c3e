//! JSON certificates. Every polynomial is stored in the text grammar, so a
//! certificate can be checked without this crate; [`verify`] re-parses it
//! and re-checks every claim from scratch.

use serde::{Deserialize, Serialize};
use skein_core::grammar::{parse_laurent, parse_tpoly, ParseError};
use skein_core::ideals::{
    gcd, FpPoly, GcdResult, IdealTwoGen, Membership, PrincipalityVerdict, ProperCertificate,
};
use skein_core::modpres::{
    normal_form, rank_over_qa, relation, relation_c, relation_d, split_obstruction, torsion_witness,
    ModpresError, RankReport, TorsionWitness,
};
use skein_core::ratfunc::RationalFunction;
use skein_core::{Basis, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Certificate {
    Torsion(TorsionCert),
    Obstruction(ObstructionCert),
    Rank(RankCert),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionCert {
    pub n: u32,
    pub c: String,
    pub d: String,
    pub gcd: String,
    /// Absent when the gcd is a unit.
    pub witness: Option<WitnessBody>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessBody {
    /// Chebyshev basis.
    pub element: String,
    pub annihilator: String,
    pub element_normal_form: String,
    /// `annihilator * element`, equal to the relation.
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdJson {
    pub gcd: String,
    pub cofactor1: String,
    pub cofactor2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperJson {
    pub prime: u64,
    /// Ascending coefficients in `F_p[A]`.
    pub common_factor: Vec<u64>,
    pub cofactor1: Vec<u64>,
    pub cofactor2: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalJson {
    pub generator: String,
    pub divides: GcdJson,
    pub cofactor1: String,
    pub cofactor2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCert {
    pub n: u32,
    pub c: String,
    pub d: String,
    pub common_factor: String,
    pub g1: String,
    pub g2: String,
    pub status: String,
    pub gcd: GcdJson,
    pub properness: Option<ProperJson>,
    pub principal: Option<PrincipalJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRowJson {
    pub n: u32,
    pub target: u32,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCert {
    pub bound: u32,
    pub rank: usize,
    pub free_rank: usize,
    pub basis: Vec<u32>,
    pub rows: Vec<RankRowJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum CertError {
    #[error(transparent)]
    Modpres(#[from] ModpresError),
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {source}")]
    Parse { field: &'static str, source: ParseError },
    #[error("check failed: {0}")]
    Rejected(String),
}

fn lp(field: &'static str, text: &str) -> Result<LaurentPoly, CertError> {
    parse_laurent(text).map_err(|source| CertError::Parse { field, source })
}

fn ensure(ok: bool, what: &str) -> Result<(), CertError> {
    if ok {
        Ok(())
    } else {
        Err(CertError::Rejected(what.to_string()))
    }
}

fn gcd_json(g: &GcdResult) -> GcdJson {
    GcdJson {
        gcd: g.gcd.to_string(),
        cofactor1: g.cofactor1.to_string(),
        cofactor2: g.cofactor2.to_string(),
    }
}

fn gcd_from_json(g: &GcdJson) -> Result<GcdResult, CertError> {
    Ok(GcdResult {
        gcd: lp("gcd.gcd", &g.gcd)?,
        cofactor1: lp("gcd.cofactor1", &g.cofactor1)?,
        cofactor2: lp("gcd.cofactor2", &g.cofactor2)?,
    })
}

pub fn torsion_certificate(n: u32) -> Result<TorsionCert, CertError> {
    let r = relation(n)?;
    let g = gcd(&r.c, &r.d).gcd;
    let witness = torsion_witness(n)?.map(|w| WitnessBody {
        element: w.element.to_string(),
        annihilator: w.annihilator.to_string(),
        element_normal_form: normal_form(&w.element).to_string(),
        product: w.element.scale(&w.annihilator).to_string(),
    });
    Ok(TorsionCert {
        n,
        c: r.c.to_string(),
        d: r.d.to_string(),
        gcd: g.to_string(),
        witness,
    })
}

pub fn obstruction_certificate(n: u32) -> Result<ObstructionCert, CertError> {
    let ob = split_obstruction(n)?;
    let (gcd, properness, principal) = match &ob.verdict {
        PrincipalityVerdict::NonPrincipal { gcd, certificate } => (
            gcd_json(gcd),
            Some(ProperJson {
                prime: certificate.prime,
                common_factor: certificate.common_factor.coeffs.clone(),
                cofactor1: certificate.cofactor1.coeffs.clone(),
                cofactor2: certificate.cofactor2.coeffs.clone(),
            }),
            None,
        ),
        PrincipalityVerdict::Principal {
            generator,
            divides,
            membership,
        } => (
            gcd_json(divides),
            None,
            Some(PrincipalJson {
                generator: generator.to_string(),
                divides: gcd_json(divides),
                cofactor1: membership.cofactor1.to_string(),
                cofactor2: membership.cofactor2.to_string(),
            }),
        ),
        PrincipalityVerdict::Inconclusive { gcd } => (gcd_json(gcd), None, None),
    };
    Ok(ObstructionCert {
        n,
        c: ob.relation.c.to_string(),
        d: ob.relation.d.to_string(),
        common_factor: ob.common_factor.to_string(),
        g1: ob.ideal.g1.to_string(),
        g2: ob.ideal.g2.to_string(),
        status: ob.verdict.status().to_string(),
        gcd,
        properness,
        principal,
    })
}

pub fn rank_certificate(report: &RankReport) -> RankCert {
    RankCert {
        bound: report.bound,
        rank: report.rank(),
        free_rank: report.free_rank,
        basis: report.basis.clone(),
        rows: report
            .rows
            .iter()
            .map(|r| RankRowJson {
                n: r.n,
                target: r.target,
                numerator: r.coefficient.numerator().to_string(),
                denominator: r.coefficient.denominator().to_string(),
            })
            .collect(),
    }
}

fn verify_torsion(cert: &TorsionCert) -> Result<(), CertError> {
    let (c, d, g) = (lp("c", &cert.c)?, lp("d", &cert.d)?, lp("gcd", &cert.gcd)?);
    ensure(
        c == relation_c(cert.n) && d == relation_d(cert.n),
        "c, d match the relation",
    )?;
    ensure(
        c.divide_exact(&g).is_ok() && d.divide_exact(&g).is_ok(),
        "gcd divides c and d",
    )?;
    let recomputed = gcd(&c, &d).gcd;
    ensure(
        recomputed.divide_exact(&g).is_ok() && g.divide_exact(&recomputed).is_ok(),
        "gcd is greatest",
    )?;
    let Some(w) = &cert.witness else {
        return ensure(g.is_unit(), "no witness only for a unit gcd");
    };
    let element = parse_tpoly(&w.element).map_err(|source| CertError::Parse {
        field: "element",
        source,
    })?;
    let product = parse_tpoly(&w.product).map_err(|source| CertError::Parse {
        field: "product",
        source,
    })?;
    let annihilator = lp("annihilator", &w.annihilator)?;
    ensure(!annihilator.is_unit(), "annihilator is not a unit")?;
    ensure(
        g.divide_exact(&annihilator).is_ok() && annihilator.divide_exact(&g).is_ok(),
        "annihilator is the gcd",
    )?;
    ensure(
        element.basis() == Basis::Chebyshev,
        "element is in the Chebyshev basis",
    )?;
    ensure(
        element.scale(&annihilator).same_value(&product),
        "product is annihilator times element",
    )?;
    ensure(
        product.same_value(&relation(cert.n)?.expression),
        "product is the relation",
    )?;
    ensure(
        normal_form(&element).to_string() == w.element_normal_form,
        "normal form matches",
    )?;
    TorsionWitness::new(cert.n, element, annihilator)?;
    Ok(())
}

fn fp(p: u64, coeffs: &[u64]) -> Result<FpPoly, CertError> {
    ensure(coeffs.iter().all(|&c| c < p), "F_p coefficients are reduced")?;
    Ok(FpPoly::new(p, coeffs.to_vec()))
}

fn verify_obstruction(cert: &ObstructionCert) -> Result<(), CertError> {
    let (c, d) = (lp("c", &cert.c)?, lp("d", &cert.d)?);
    ensure(
        c == relation_c(cert.n) && d == relation_d(cert.n),
        "c, d match the relation",
    )?;
    let common = lp("common_factor", &cert.common_factor)?;
    let (g1, g2) = (lp("g1", &cert.g1)?, lp("g2", &cert.g2)?);
    ensure(
        &g1 * &common == c && &g2 * &common == d,
        "ideal generators are c/g, d/g",
    )?;
    let ideal = IdealTwoGen::new(g1, g2).ok_or_else(|| CertError::Rejected("zero ideal".into()))?;
    let gcd = gcd_from_json(&cert.gcd)?;
    let verdict = match (cert.status.as_str(), &cert.properness, &cert.principal) {
        ("NonPrincipal", Some(pr), None) => PrincipalityVerdict::NonPrincipal {
            gcd,
            certificate: ProperCertificate {
                prime: pr.prime,
                common_factor: fp(pr.prime, &pr.common_factor)?,
                cofactor1: fp(pr.prime, &pr.cofactor1)?,
                cofactor2: fp(pr.prime, &pr.cofactor2)?,
            },
        },
        ("Principal", None, Some(pj)) => PrincipalityVerdict::Principal {
            generator: lp("principal.generator", &pj.generator)?,
            divides: gcd_from_json(&pj.divides)?,
            membership: Membership {
                cofactor1: lp("principal.cofactor1", &pj.cofactor1)?,
                cofactor2: lp("principal.cofactor2", &pj.cofactor2)?,
            },
        },
        ("Inconclusive", None, None) => PrincipalityVerdict::Inconclusive { gcd },
        _ => {
            return Err(CertError::Rejected(format!(
                "status {} with mismatched evidence",
                cert.status
            )))
        }
    };
    ensure(verdict.verify(&ideal), "verdict evidence re-verifies")
}

fn verify_rank(cert: &RankCert) -> Result<(), CertError> {
    ensure(cert.basis == [0, 1], "surviving basis is S_0, S_1")?;
    ensure(
        cert.rank == cert.free_rank + cert.basis.len() && cert.free_rank == 2,
        "rank adds up",
    )?;
    let ns: Vec<u32> = cert.rows.iter().map(|r| r.n).collect();
    ensure(
        ns == (2..=cert.bound).collect::<Vec<_>>(),
        "one row per n in 2..=bound",
    )?;
    for row in &cert.rows {
        let num = lp("rows.numerator", &row.numerator)?;
        let den = lp("rows.denominator", &row.denominator)?;
        ensure(row.target == row.n % 2, "row targets S_(n mod 2)")?;
        ensure(!den.is_zero(), "nonzero denominator")?;
        // over Q(A): c_n S_n = d_n S_target, so S_n = (d_n / c_n) S_target
        ensure(
            &num * &relation_c(row.n) == &den * &relation_d(row.n),
            "row clears to (c_n, d_n)",
        )?;
        let reduced = RationalFunction::new(num.clone(), den.clone()).unwrap();
        ensure(
            reduced.numerator() == &num && reduced.denominator() == &den,
            "row is reduced",
        )?;
    }
    Ok(())
}

pub fn verify(cert: &Certificate) -> Result<(), CertError> {
    match cert {
        Certificate::Torsion(t) => verify_torsion(t),
        Certificate::Obstruction(o) => verify_obstruction(o),
        Certificate::Rank(r) => verify_rank(r),
    }
}

pub fn verify_json(text: &str) -> Result<Certificate, CertError> {
    let cert: Certificate = serde_json::from_str(text)?;
    verify(&cert)?;
    Ok(cert)
}

pub fn to_json(cert: &Certificate) -> String {
    serde_json::to_string_pretty(cert).expect("plain data serializes")
}

/// Default rank certificate.
pub fn rank_default(bound: u32) -> Certificate {
    Certificate::Rank(rank_certificate(&rank_over_qa(bound)))
}
