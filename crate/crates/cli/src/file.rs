//! The JSON algebra definition format.

use std::fs;
use std::path::Path;

use homalg_core::constructions::GeneratorConfig;
use homalg_core::{Algebra, Field, HomAlgebra, InvolutiveAlgebra, Matrix, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid algebra file: {0}")]
    Invariant(String),
}

impl From<homalg_core::Error> for FileError {
    fn from(e: homalg_core::Error) -> Self {
        FileError::Invariant(e.to_string())
    }
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, FileError>;

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

impl FieldSpec {
    pub fn field(&self) -> Result<Field> {
        match self {
            FieldSpec::Named(name) if name == "Q" => Ok(Field::Rational),
            FieldSpec::Named(name) => Err(FileError::Invariant(format!("unknown field `{name}`"))),
            FieldSpec::Prime { p } => Ok(Field::prime(*p)?),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldSpec::Named("Q".into()),
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

/// The on-disk document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// Sparse `[i, j, k, scalar]` entries: `e_i · e_j` has coefficient `scalar` on `e_k`.
    pub structure: Vec<(usize, usize, usize, String)>,
    /// Entry `[r][c]` is the coefficient of `e_r` in `α(e_c)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conj: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub meta: Value,
}

/// What a file defines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    Plain(Algebra),
    Hom(HomAlgebra),
    Involutive(InvolutiveAlgebra),
}

impl Definition {
    pub fn algebra(&self) -> &Algebra {
        match self {
            Definition::Plain(a) => a,
            Definition::Hom(h) => h.base(),
            Definition::Involutive(i) => i.base(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Definition::Plain(_) => "algebra",
            Definition::Hom(_) => "hom-algebra",
            Definition::Involutive(_) => "involutive-algebra",
        }
    }
}

/// A parsed file: the definition plus its free-form annotations.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub definition: Definition,
    pub meta: Value,
}

impl Document {
    pub fn new(definition: Definition) -> Self {
        Document {
            definition,
            meta: Value::Null,
        }
    }

    pub fn with_meta(mut self, key: &str, value: Value) -> Self {
        if !self.meta.is_object() {
            self.meta = Value::Object(Default::default());
        }
        self.meta.as_object_mut().expect("object").insert(key.into(), value);
        self
    }
}

fn grid(field: Field, n: usize, rows: &[Vec<String>], what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(FileError::Invariant(format!("{what} must be a {n}×{n} grid")));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| field.parse_scalar(s)).collect::<homalg_core::Result<Vec<Scalar>>>())
        .collect::<homalg_core::Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, rows)?)
}

fn grid_text(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row_slice(r).iter().map(Scalar::to_text).collect()).collect()
}

impl AlgebraFile {
    pub fn into_document(self) -> Result<Document> {
        if self.format_version != FORMAT_VERSION {
            return Err(FileError::Invariant(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        let field = self.field.field()?;
        let n = self.dim;
        let entries = self
            .structure
            .iter()
            .map(|(i, j, k, s)| Ok((*i, *j, *k, field.parse_scalar(s)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut algebra = Algebra::from_entries(field, n, entries)?;
        if let Some(labels) = self.basis {
            algebra = algebra.with_labels(labels)?;
        }
        let definition = match (self.twist, self.conj) {
            (None, None) => Definition::Plain(algebra),
            (Some(t), None) => Definition::Hom(HomAlgebra::new(algebra, grid(field, n, &t, "twist")?)?),
            (None, Some(c)) => Definition::Involutive(InvolutiveAlgebra::new(algebra, grid(field, n, &c, "conj")?)?),
            (Some(_), Some(_)) => return Err(FileError::Invariant("a file may carry a twist or a conj, not both".into())),
        };
        Ok(Document {
            definition,
            meta: self.meta,
        })
    }

    pub fn from_document(doc: &Document) -> AlgebraFile {
        let a = doc.definition.algebra();
        let (twist, conj) = match &doc.definition {
            Definition::Plain(_) => (None, None),
            Definition::Hom(h) => (Some(grid_text(h.twist())), None),
            Definition::Involutive(i) => (None, Some(grid_text(i.conj()))),
        };
        AlgebraFile {
            format_version: FORMAT_VERSION,
            field: a.field().into(),
            dim: a.dim(),
            basis: a.labels().map(<[String]>::to_vec),
            structure: a.nonzero_entries().map(|(i, j, k, c)| (i, j, k, c.to_text())).collect(),
            twist,
            conj,
            meta: doc.meta.clone(),
        }
    }
}

pub fn parse_str(text: &str) -> Result<Document> {
    serde_json::from_str::<AlgebraFile>(text)?.into_document()
}

pub fn parse(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text)
}

pub fn to_json(doc: &Document) -> String {
    crate::sorted_json(&AlgebraFile::from_document(doc))
}

pub fn emit(doc: &Document, path: &Path) -> Result<()> {
    fs::write(path, to_json(doc) + "\n").map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The generator configuration as a `meta` annotation, enough to regenerate the algebra.
pub fn generator_meta(cfg: &GeneratorConfig) -> Value {
    serde_json::json!({
        "algorithm": homalg_core::constructions::GENERATOR_ALGORITHM,
        "seed": cfg.seed,
        "dim": cfg.dim,
        "field": FieldSpec::from(cfg.field),
        "pool": cfg.pool.iter().map(Scalar::to_text).collect::<Vec<_>>(),
        "left_unital": cfg.force_left_unital,
        "commutative": cfg.commutative,
        "anticommutative": cfg.anticommutative,
    })
}

/// Inverse of [`generator_meta`].
pub fn generator_from_meta(meta: &Value) -> Result<GeneratorConfig> {
    #[derive(Deserialize)]
    struct Stored {
        seed: u64,
        dim: usize,
        field: FieldSpec,
        pool: Vec<String>,
        left_unital: bool,
        commutative: bool,
        anticommutative: bool,
    }
    let s: Stored = serde_json::from_value(meta.clone())?;
    let field = s.field.field()?;
    let pool = s.pool.iter().map(|t| field.parse_scalar(t)).collect::<homalg_core::Result<Vec<_>>>()?;
    Ok(GeneratorConfig {
        seed: s.seed,
        dim: s.dim,
        field,
        pool,
        force_left_unital: s.left_unital,
        commutative: s.commutative,
        anticommutative: s.anticommutative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use homalg_core::constructions::{quaternions, random_algebra};

    #[test]
    fn minimal_file_is_the_ground_field() {
        let doc = parse_str(r#"{"format_version":1,"field":"Q","dim":1,"structure":[[0,0,0,"1"]]}"#).unwrap();
        let a = doc.definition.algebra();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.mul(&a.basis_element(0), &a.basis_element(0)), a.basis_element(0));
    }

    #[test]
    fn duplicate_entries_are_rejected() {
        let err = parse_str(r#"{"format_version":1,"field":"Q","dim":1,"structure":[[0,0,0,"1"],[0,0,0,"2"]]}"#);
        assert!(matches!(err, Err(FileError::Invariant(_))), "{err:?}");
    }

    #[test]
    fn parse_errors_carry_a_position() {
        match parse_str("{\n  \"format_version\": 1,\n  \"field\": }") {
            Err(FileError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_prime_and_bad_conj_are_rejected() {
        let bad_prime = r#"{"format_version":1,"field":{"Fp":4},"dim":1,"structure":[]}"#;
        assert!(matches!(parse_str(bad_prime), Err(FileError::Invariant(_))));
        let not_involution = r#"{"format_version":1,"field":"Q","dim":1,"structure":[],"conj":[["2"]]}"#;
        assert!(matches!(parse_str(not_involution), Err(FileError::Invariant(_))));
    }

    #[test]
    fn quaternions_round_trip() {
        let doc = Document::new(Definition::Involutive(quaternions()));
        let text = to_json(&doc);
        let back = parse_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), text);
        let a = back.definition.algebra();
        assert_eq!(a.mul(&a.basis_element(1), &a.basis_element(2)), a.basis_element(3));
    }

    #[test]
    fn rationals_are_written_in_lowest_terms() {
        let doc = parse_str(r#"{"format_version":1,"field":"Q","dim":1,"structure":[[0,0,0,"4/-6"]]}"#).unwrap();
        let file = AlgebraFile::from_document(&doc);
        assert_eq!(file.structure[0].3, "-2/3");
    }

    #[test]
    fn generator_config_round_trips() {
        let cfg = GeneratorConfig::new(11, 3, Field::Prime(5)).commutative();
        let back = generator_from_meta(&generator_meta(&cfg)).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(random_algebra(&back).unwrap(), random_algebra(&cfg).unwrap());
    }
}
