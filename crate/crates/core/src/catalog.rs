//! Variety and bundle files, built-in varieties, and report rendering.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::bundle_analysis::{
    bryan_donagi_example, difference_decomposition, multiplicativity_verdict, signature_mod4_check, BundleError,
    BundleTriple,
};
use crate::closed_forms::{complete_chi_vector, ClosedFormError, ClosedFormInput};
use crate::hodge_core::{
    chi_from_diamond, curve_chi, product_chi, projective_space_chi, validate_chi_vector, ChiVector, HodgeDiamond,
    HodgeError,
};
use crate::serde_int::JsonInt;
use crate::symbolic_verify::VerificationVerdict;
use crate::Strictness;

pub const VARIETY_SCHEMA: &str = "genus-forge/variety/v1";
pub const BUNDLE_SCHEMA: &str = "genus-forge/bundle/v1";
pub const REPORT_SCHEMA: &str = "genus-forge/report/v1";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema mismatch: expected {expected:?}, found {found:?}")]
    Schema { expected: &'static str, found: String },
    #[error("{0}")]
    Source(String),
    #[error("{field}: {source}")]
    Validation { field: &'static str, source: HodgeError },
    #[error("declared dim {declared} but {field} describes dim {actual}")]
    DimMismatch { field: &'static str, declared: usize, actual: usize },
    #[error("invariants: {0}")]
    ClosedForm(#[from] ClosedFormError),
    #[error("bundle: {0}")]
    Bundle(#[from] BundleError),
    #[error("unknown variety {0:?}")]
    UnknownBuiltin(String),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error("{kind} reports cannot be rendered as {format}")]
    Unsupported { kind: &'static str, format: Format },
}

fn parse_err(e: serde_json::Error) -> CatalogError {
    CatalogError::Parse(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsPayload {
    pub todd: JsonInt,
    pub euler: JsonInt,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<JsonInt>,
    #[serde(default)]
    pub low_chi: Vec<JsonInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarietySource {
    Diamond(Vec<Vec<u64>>),
    Chi(Vec<BigInt>),
    Invariants(InvariantsPayload),
}

/// A named, validated variety with the payload it was given as.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyRecord {
    pub name: String,
    pub dim: usize,
    pub source: VarietySource,
    pub note: Option<String>,
    chi: ChiVector,
}

/// On-disk shape of a variety file.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VarietyFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chi: Option<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hodge: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    invariants: Option<InvariantsPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn ints(v: &[JsonInt]) -> Vec<BigInt> {
    v.iter().map(|i| i.0.clone()).collect()
}

impl VarietyRecord {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        source: VarietySource,
        note: Option<String>,
        strictness: Strictness,
    ) -> Result<Self, CatalogError> {
        let chi = match &source {
            VarietySource::Chi(c) => validate_chi_vector(c.clone(), dim, strictness)
                .map_err(|source| CatalogError::Validation { field: "chi", source })?,
            VarietySource::Diamond(h) => {
                let d = HodgeDiamond::new(h.clone())
                    .map_err(|source| CatalogError::Validation { field: "hodge", source })?;
                if d.dim() != dim {
                    return Err(CatalogError::DimMismatch { field: "hodge", declared: dim, actual: d.dim() });
                }
                chi_from_diamond(&d)
            }
            VarietySource::Invariants(inv) => {
                let input = ClosedFormInput {
                    dim,
                    todd: inv.todd.0.clone(),
                    euler: inv.euler.0.clone(),
                    signature: inv.signature.as_ref().map(|s| s.0.clone()),
                    low_chi: ints(&inv.low_chi),
                };
                complete_chi_vector(&input)?
            }
        };
        Ok(VarietyRecord { name: name.into(), dim, source, note, chi })
    }

    pub fn chi(&self) -> &ChiVector {
        &self.chi
    }

    fn from_file(file: VarietyFile, require_schema: bool, strictness: Strictness) -> Result<Self, CatalogError> {
        match (&file.schema, require_schema) {
            (Some(s), _) if s != VARIETY_SCHEMA => {
                return Err(CatalogError::Schema { expected: VARIETY_SCHEMA, found: s.clone() })
            }
            (None, true) => return Err(CatalogError::Schema { expected: VARIETY_SCHEMA, found: String::new() }),
            _ => {}
        }
        let source = match (file.chi, file.hodge, file.invariants) {
            (Some(c), None, None) => VarietySource::Chi(ints(&c)),
            (None, Some(h), None) => VarietySource::Diamond(h),
            (None, None, Some(i)) => VarietySource::Invariants(i),
            _ => return Err(CatalogError::Source("exactly one of chi, hodge, invariants is required".into())),
        };
        let name = file.name.unwrap_or_else(|| "unnamed".into());
        VarietyRecord::new(name, file.dim, source, file.note, strictness)
    }

    fn to_file(&self) -> VarietyFile {
        let mut file = VarietyFile {
            schema: Some(VARIETY_SCHEMA.into()),
            name: Some(self.name.clone()),
            dim: self.dim,
            chi: None,
            hodge: None,
            invariants: None,
            note: self.note.clone(),
        };
        match &self.source {
            VarietySource::Chi(c) => file.chi = Some(c.iter().cloned().map(JsonInt).collect()),
            VarietySource::Diamond(h) => file.hodge = Some(h.clone()),
            VarietySource::Invariants(i) => file.invariants = Some(i.clone()),
        }
        file
    }

    pub fn genus_row(&self) -> GenusRow {
        GenusRow::new(&self.name, &self.chi)
    }
}

/// Parses and validates a `genus-forge/variety/v1` document.
pub fn load_variety(bytes: &[u8], strictness: Strictness) -> Result<VarietyRecord, CatalogError> {
    let file: VarietyFile = serde_json::from_slice(bytes).map_err(parse_err)?;
    VarietyRecord::from_file(file, true, strictness)
}

/// The record as a `genus-forge/variety/v1` document.
pub fn render_variety(record: &VarietyRecord) -> String {
    let mut out = serde_json::to_string_pretty(&record.to_file()).expect("serializable");
    out.push('\n');
    out
}

fn chi_record(name: String, chi: ChiVector, note: String) -> VarietyRecord {
    VarietyRecord {
        name,
        dim: chi.dim(),
        source: VarietySource::Chi(chi.entries().to_vec()),
        note: Some(note),
        chi,
    }
}

fn bad(name: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParams { name: name.into(), reason: reason.into() }
}

/// `curve(g)`, `projective_space(n)`, `bryan_donagi_total(g, n)` or `point`.
/// Products go through [`product_variety`].
pub fn builtin_variety(name: &str, params: &[i64]) -> Result<VarietyRecord, CatalogError> {
    let expect = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(bad(name, format!("expected {n} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "curve" => {
            expect(1)?;
            let g = params[0];
            if g < 0 {
                return Err(bad(name, "genus must be >= 0"));
            }
            Ok(chi_record(format!("curve_g{g}"), curve_chi(&g.into()), format!("curve of genus {g}")))
        }
        "projective_space" | "pn" => {
            expect(1)?;
            let n = usize::try_from(params[0]).map_err(|_| bad(name, "dimension must be >= 0"))?;
            Ok(chi_record(format!("P{n}"), projective_space_chi(n), format!("projective space of dimension {n}")))
        }
        "bryan_donagi_total" | "bd" => {
            expect(2)?;
            let ex = bryan_donagi_example(params[0], params[1])?;
            let note = format!("bryan-donagi surface g={} n={}", params[0], params[1]);
            Ok(chi_record(ex.name(), ex.chi_vector(), note))
        }
        "point" => {
            expect(0)?;
            Ok(chi_record("point".into(), ChiVector::point(1.into()), "a point".into()))
        }
        _ => Err(CatalogError::UnknownBuiltin(name.into())),
    }
}

/// `A × B`, named `AxB`.
pub fn product_variety(a: &VarietyRecord, b: &VarietyRecord) -> VarietyRecord {
    chi_record(
        format!("{}x{}", a.name, b.name),
        product_chi(a.chi(), b.chi()),
        format!("product of {} and {}", a.name, b.name),
    )
}

/// Parses `curve:2`, `pn:3`, `bd:2,2`, `point`, or products `curve:1*pn:2`.
pub fn parse_variety_spec(spec: &str) -> Result<VarietyRecord, CatalogError> {
    let mut factors = spec.split('*').map(|part| {
        let (name, args) = part.trim().split_once(':').unwrap_or((part.trim(), ""));
        let params = args
            .split(',')
            .filter(|a| !a.trim().is_empty())
            .map(|a| a.trim().parse::<i64>().map_err(|_| bad(name, format!("not an integer: {a:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        builtin_variety(name, &params)
    });
    let first = factors.next().expect("split yields at least one part")?;
    factors.try_fold(first, |acc, f| Ok(product_variety(&acc, &f?)))
}

/// Curves of genus 0..3, P1..P3 and the Bryan–Donagi surface (2, 2),
/// sorted by (name, dim).
pub fn fixed_catalog() -> Vec<VarietyRecord> {
    let mut out: Vec<VarietyRecord> = (0..=3)
        .map(|g| builtin_variety("curve", &[g]))
        .chain((1..=3).map(|n| builtin_variety("projective_space", &[n])))
        .chain(std::iter::once(builtin_variety("bryan_donagi_total", &[2, 2])))
        .collect::<Result<_, _>>()
        .expect("builtins are valid");
    sort_records(&mut out);
    out
}

pub fn sort_records(records: &mut [VarietyRecord]) {
    records.sort_by(|a, b| (&a.name, a.dim).cmp(&(&b.name, b.dim)));
}

/// A bundle read from a `genus-forge/bundle/v1` document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleRecord {
    pub fiber: VarietyRecord,
    pub base: VarietyRecord,
    pub total: VarietyRecord,
}

impl BundleRecord {
    pub fn triple(&self, strictness: Strictness) -> Result<BundleTriple, CatalogError> {
        Ok(BundleTriple::new(
            self.fiber.chi().clone(),
            self.base.chi().clone(),
            self.total.chi().clone(),
            strictness,
        )?)
    }
}

fn component(value: &Value, role: &str, strictness: Strictness) -> Result<VarietyRecord, CatalogError> {
    match value {
        Value::String(spec) => parse_variety_spec(spec),
        Value::Object(_) => {
            let file: VarietyFile = serde_json::from_value(value.clone())
                .map_err(|e| CatalogError::Parse(format!("{role}: {e}")))?;
            VarietyRecord::from_file(file, false, strictness)
        }
        _ => Err(CatalogError::Source(format!("{role} must be a variety spec string or object"))),
    }
}

pub fn load_bundle(bytes: &[u8], strictness: Strictness) -> Result<BundleRecord, CatalogError> {
    let doc: Value = serde_json::from_slice(bytes).map_err(parse_err)?;
    let obj = doc.as_object().ok_or_else(|| CatalogError::Source("bundle document must be an object".into()))?;
    match obj.get("schema").and_then(Value::as_str) {
        Some(BUNDLE_SCHEMA) => {}
        other => {
            return Err(CatalogError::Schema {
                expected: BUNDLE_SCHEMA,
                found: other.unwrap_or_default().to_string(),
            })
        }
    }
    if let Some(k) = obj.keys().find(|k| !["schema", "fiber", "base", "total"].contains(&k.as_str())) {
        return Err(CatalogError::Source(format!("unknown field {k:?} in bundle document")));
    }
    let get = |role: &'static str| {
        obj.get(role)
            .ok_or_else(|| CatalogError::Source(format!("missing field {role:?}")))
            .and_then(|v| component(v, role, strictness))
    };
    Ok(BundleRecord { fiber: get("fiber")?, base: get("base")?, total: get("total")? })
}

/// One CSV row: name, dim, euler, todd, signature, χ_y coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusRow {
    pub name: String,
    pub dim: usize,
    pub euler: JsonInt,
    pub todd: JsonInt,
    pub signature: JsonInt,
    pub chi_y: Vec<JsonInt>,
}

impl GenusRow {
    pub fn new(name: &str, chi: &ChiVector) -> Self {
        Self::from_dense(name, chi.dim(), chi.entries().to_vec())
    }

    /// Row for a raw coefficient list; the invariants are its values at
    /// y = -1, 0, 1.
    pub fn from_dense(name: &str, dim: usize, coeffs: Vec<BigInt>) -> Self {
        let sum = |alternate: bool| -> BigInt {
            coeffs
                .iter()
                .enumerate()
                .map(|(p, c)| if alternate && p % 2 == 1 { -c.clone() } else { c.clone() })
                .sum()
        };
        GenusRow {
            name: name.into(),
            dim,
            euler: JsonInt(sum(true)),
            todd: JsonInt(coeffs.first().cloned().unwrap_or_else(BigInt::zero)),
            signature: JsonInt(sum(false)),
            chi_y: coeffs.into_iter().map(JsonInt).collect(),
        }
    }

    fn csv_record(&self) -> Vec<String> {
        let chi_y: Vec<String> = self.chi_y.iter().map(|c| c.0.to_string()).collect();
        vec![
            self.name.clone(),
            self.dim.to_string(),
            self.euler.0.to_string(),
            self.todd.0.to_string(),
            self.signature.0.to_string(),
            chi_y.join(" "),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectRow {
    pub kind: String,
    pub defect: JsonInt,
    pub scale: String,
    pub cofactor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod4Row {
    pub difference: JsonInt,
    pub residue: u8,
    pub quarter_parity: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub fiber: GenusRow,
    pub base: GenusRow,
    pub total: GenusRow,
    pub product: GenusRow,
    pub difference: GenusRow,
    pub todd_defect: JsonInt,
    pub signature_defect: JsonInt,
    pub euler_defect: JsonInt,
    pub constraints_hold: bool,
    pub violations: Vec<String>,
    /// Empty when constraints are violated.
    pub terms: Vec<DefectRow>,
    pub verdict: Option<String>,
    pub vanishing_at: Vec<i64>,
    /// Even total dimension only.
    pub mod4: Option<Mod4Row>,
}

impl BundleReport {
    pub fn new(record: &BundleRecord, strictness: Strictness) -> Result<Self, CatalogError> {
        let t = record.triple(strictness)?;
        let product = t.product_chi();
        let diff = crate::bundle_analysis::difference_direct(&t);
        let difference = GenusRow::from_dense("difference", t.dim(), diff.dense());
        let mut terms = Vec::new();
        let mut verdict = None;
        let mut vanishing_at = Vec::new();
        if t.constraints_hold() {
            let d = difference_decomposition(&t)?;
            terms = d
                .terms
                .iter()
                .filter(|term| !term.cofactor.is_zero())
                .map(|term| DefectRow {
                    kind: term.kind.label(),
                    defect: JsonInt(term.defect.clone()),
                    scale: term.scale.to_string(),
                    cofactor: term.cofactor.to_string(),
                })
                .collect();
            let v = multiplicativity_verdict(&t)?;
            verdict = Some(v.kind.label().to_string());
            vanishing_at = v.vanishing_classical;
        }
        let mod4 = (t.dim() % 2 == 0).then(|| {
            let m = signature_mod4_check(&t);
            Mod4Row { difference: JsonInt(m.difference), residue: m.residue, quarter_parity: m.quarter_parity }
        });
        Ok(BundleReport {
            fiber: record.fiber.genus_row(),
            base: record.base.genus_row(),
            total: record.total.genus_row(),
            product: GenusRow::new(&format!("{}x{}", record.fiber.name, record.base.name), &product),
            todd_defect: difference.todd.clone(),
            signature_defect: difference.signature.clone(),
            euler_defect: difference.euler.clone(),
            difference,
            constraints_hold: t.constraints_hold(),
            violations: t.violations().to_vec(),
            terms,
            verdict,
            vanishing_at,
            mod4,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Genus(GenusRow),
    Bundle(Box<BundleReport>),
    Verdict(Vec<VerificationVerdict>),
    Table(Vec<GenusRow>),
}

impl Report {
    pub fn kind(&self) -> &'static str {
        match self {
            Report::Genus(_) => "genus",
            Report::Bundle(_) => "bundle",
            Report::Verdict(_) => "verdict",
            Report::Table(_) => "table",
        }
    }
}

/// `{schema, kind, body}` envelope around a report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub schema: String,
    pub report: Report,
}

impl ReportDocument {
    pub fn new(report: Report) -> Self {
        ReportDocument { schema: REPORT_SCHEMA.into(), report }
    }

    pub fn to_json(&self) -> String {
        let body = match &self.report {
            Report::Genus(r) => serde_json::to_value(r),
            Report::Bundle(r) => serde_json::to_value(r),
            Report::Verdict(v) => serde_json::to_value(v),
            Report::Table(t) => serde_json::to_value(t),
        }
        .expect("serializable");
        let doc = serde_json::json!({ "schema": self.schema, "kind": self.report.kind(), "body": body });
        let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        let mut doc: Value = serde_json::from_str(text).map_err(parse_err)?;
        let schema = doc.get("schema").and_then(Value::as_str).unwrap_or_default().to_string();
        if schema != REPORT_SCHEMA {
            return Err(CatalogError::Schema { expected: REPORT_SCHEMA, found: schema });
        }
        let body = doc.get_mut("body").map(Value::take).ok_or_else(|| CatalogError::Source("missing body".into()))?;
        let report = match doc.get("kind").and_then(Value::as_str) {
            Some("genus") => Report::Genus(serde_json::from_value(body).map_err(parse_err)?),
            Some("bundle") => Report::Bundle(serde_json::from_value(body).map_err(parse_err)?),
            Some("verdict") => Report::Verdict(serde_json::from_value(body).map_err(parse_err)?),
            Some("table") => Report::Table(serde_json::from_value(body).map_err(parse_err)?),
            other => return Err(CatalogError::Source(format!("unknown report kind {other:?}"))),
        };
        Ok(ReportDocument { schema, report })
    }
}

fn csv_rows(rows: &[&GenusRow]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in rows {
        w.write_record(r.csv_record()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Deterministic bytes for `doc` in `format`.
pub fn render_report(doc: &ReportDocument, format: Format) -> Result<String, CatalogError> {
    match (format, &doc.report) {
        (Format::Json, _) => Ok(doc.to_json()),
        (Format::Csv, Report::Genus(r)) => Ok(csv_rows(&[r])),
        (Format::Csv, Report::Table(rows)) => Ok(csv_rows(&rows.iter().collect::<Vec<_>>())),
        (Format::Csv, Report::Bundle(b)) => Ok(csv_rows(&[&b.fiber, &b.base, &b.total, &b.product, &b.difference])),
        (Format::Csv, Report::Verdict(_)) => Err(CatalogError::Unsupported { kind: "verdict", format }),
    }
}
