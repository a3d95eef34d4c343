//! One function per subcommand. Reports come back as JSON values; constructions come back
//! as documents for the caller to write.

use homalg_core::constructions::{
    cayley_dickson_tower, random_algebra, truncated_poly, unitalize as unitalization, yau_criterion, yau_twist,
    GeneratorConfig,
};
use homalg_core::homstruct::{ac_left, ac_one_sided, ac_right, ac_two_sided, structure_theorem_audit, twist_space as twists};
use homalg_core::leibniz::leibniz_report;
use homalg_core::subspaces::idempotents;
use homalg_core::{Algebra, Field, HomAlgebra, InvolutiveAlgebra, LinearMap, Scalar, Side, Subspace};
use serde_json::{json, Value};

use crate::file::{generator_meta, Definition, Document};
use crate::{CliError, Result};

/// Exhaustive idempotent search is skipped above this many candidates.
pub const IDEMPOTENT_CAP: u128 = 1 << 16;

/// A report plus whether any consistency check in it failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Checked {
    pub report: Value,
    pub failed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcSide {
    Left,
    Right,
    Two,
}

/// Where the twist of a Yau twist comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistSource {
    FromFile,
    LeftMult(usize),
    RightMult(usize),
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn analyze(doc: &Document) -> Checked {
    let a = doc.definition.algebra();
    let report = structure_theorem_audit(a);
    let mut failed = !report.failures().is_empty();
    let mut value = to_value(&report);
    if let Definition::Hom(h) = &doc.definition {
        let multiplicative = h.is_multiplicative();
        value["twist"] = json!({
            "hom_associative": h.is_hom_associative(),
            "hom_associativity_witness": h.hom_associativity_witness(),
            "multiplicative": multiplicative,
            "in_twist_space": twists(a).contains(h.twist()),
        });
        failed |= twists(a).contains(h.twist()) != h.is_hom_associative();
    }
    Checked { report: value, failed }
}

pub fn twist_space(doc: &Document) -> Value {
    let t = twists(doc.definition.algebra());
    json!({
        "algebra_dim": t.algebra_dim(),
        "dim": t.dim(),
        "basis": t.basis_maps(),
    })
}

fn idempotent_list(a: &Algebra, within: &Subspace) -> Value {
    match idempotents(a, within, IDEMPOTENT_CAP) {
        Ok(list) => json!({ "computed": true, "elements": list }),
        Err(e) => json!({ "computed": false, "reason": e.to_string() }),
    }
}

pub fn ac(doc: &Document, side: AcSide) -> Result<Value> {
    let a = doc.definition.algebra();
    Ok(match side {
        AcSide::Two => {
            let ac = ac_two_sided(a)?;
            json!({
                "side": "two",
                "ac": ac,
                "idempotents": idempotent_list(a, &ac),
            })
        }
        AcSide::Left | AcSide::Right => {
            let (core_side, ac) = match side {
                AcSide::Left => (Side::Left, ac_left(a)),
                _ => (Side::Right, ac_right(a)),
            };
            let split = match ac_one_sided(a, core_side) {
                Ok(s) => Some(s),
                Err(homalg_core::Error::NotUnitalOnSide(_)) => None,
                Err(e) => return Err(e.into()),
            };
            // Idempotents of the unital part; on the right side `ac_unit` is expressed in A.
            let idem = match &split {
                Some(s) => idempotent_list(a, &s.ac_unit),
                None => json!({ "computed": false, "reason": format!("algebra has no {core_side} unity") }),
            };
            json!({
                "side": core_side,
                "ac": ac,
                "unital": split.is_some(),
                "split": split,
                "idempotents": idem,
            })
        }
    })
}

pub fn cayley_dickson(field: Field, levels: usize, gammas: &[Scalar]) -> Result<Document> {
    let gammas = if gammas.is_empty() { vec![field.from_i64(-1); levels] } else { gammas.to_vec() };
    let x = cayley_dickson_tower(field, levels, &gammas)?;
    Ok(Document::new(Definition::Involutive(x)).with_meta(
        "construction",
        json!({ "name": "cayley-dickson", "levels": levels, "gammas": gammas }),
    ))
}

pub fn unitalize(doc: &Document) -> Document {
    let a = doc.definition.algebra();
    let plus = unitalization(a);
    Document::new(Definition::Plain(plus.algebra)).with_meta(
        "construction",
        json!({ "name": "unitalization", "unity_index": a.dim() }),
    )
}

fn basis_index(a: &Algebra, i: usize) -> Result<usize> {
    if i >= a.dim() {
        return Err(CliError::Usage(format!("basis index {i} out of range for dimension {}", a.dim())));
    }
    Ok(i)
}

pub fn yau(doc: &Document, source: &TwistSource) -> Result<Document> {
    let a = doc.definition.algebra();
    let alpha: LinearMap = match source {
        TwistSource::FromFile => match &doc.definition {
            Definition::Hom(h) => h.twist().clone(),
            _ => return Err(CliError::Usage("--twist-from-file needs a file with a `twist` grid".into())),
        },
        TwistSource::LeftMult(i) => a.left_mul_map(&a.basis_element(basis_index(a, *i)?)),
        TwistSource::RightMult(i) => a.right_mul_map(&a.basis_element(basis_index(a, *i)?)),
    };
    let verdict = yau_criterion(a, &alpha)?;
    let h = yau_twist(a, &alpha)?;
    Ok(Document::new(Definition::Hom(h)).with_meta("yau_criterion", to_value(&verdict)))
}

pub fn opposite(doc: &Document) -> Result<Document> {
    let definition = match &doc.definition {
        Definition::Plain(a) => Definition::Plain(a.opposite()),
        Definition::Hom(h) => Definition::Hom(HomAlgebra::new(h.base().opposite(), h.twist().clone())?),
        Definition::Involutive(i) => Definition::Involutive(InvolutiveAlgebra::new(i.base().opposite(), i.conj().clone())?),
    };
    Ok(Document {
        definition,
        meta: doc.meta.clone(),
    })
}

pub fn poly(field: Field, degree: usize, with_constants: bool) -> Result<Document> {
    if degree == 0 && !with_constants {
        return Err(CliError::Usage("--degree 0 without constants is the zero-dimensional algebra".into()));
    }
    Ok(Document::new(Definition::Plain(truncated_poly(field, degree, with_constants))).with_meta(
        "construction",
        json!({ "name": "truncated-polynomials", "degree": degree, "with_constants": with_constants }),
    ))
}

pub fn leibniz(doc: &Document, twist: Option<&LinearMap>) -> Result<Checked> {
    let a = doc.definition.algebra();
    let twist = twist.or(match &doc.definition {
        Definition::Hom(h) => Some(h.twist()),
        _ => None,
    });
    let r = leibniz_report(a, twist)?;
    let mut failed = r.unitality_collapse.failed();
    if let Some(hu) = &r.hom_unities {
        failed |= hu.checks.iter().any(|c| c.failed());
    }
    if let Some(t) = &r.twisted {
        failed |= t.crossed_unitality.checks.iter().any(|c| c.failed());
    }
    Ok(Checked {
        report: to_value(&r),
        failed,
    })
}

pub fn random(cfg: &GeneratorConfig) -> Result<Document> {
    let a = random_algebra(cfg)?;
    Ok(Document::new(Definition::Plain(a)).with_meta("generator", generator_meta(cfg)))
}
