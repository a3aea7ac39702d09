//! Formal verification of the closed forms, the bundle difference identities
//! and the mod-4 signature congruence.
//!
//! Chi entries become formal symbols `s_0..s_{n/2}` (the rest is forced by
//! duality), so an identity that holds with a structurally zero residual
//! holds for every duality-valid chi-vector at once.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::closed_forms::{closed_form_terms, ClosedFormTerm, InvariantKind};
use crate::exact_poly::{FormalPoly, IntPoly, MultiPoly, Symbol};
use crate::sampling::case_rng;

pub const VERDICT_SCHEMA: &str = "genus-forge/verdict/v1";

/// Default limit on the number of mod-4 assignments, `4^12`.
pub const DEFAULT_EXHAUSTION_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unsupported dimension {dim}: {reason}")]
    UnsupportedDimension { dim: usize, reason: String },
    #[error("exhaustion needs {required} assignments, cap is {cap}; not attempted")]
    CapExceeded { required: String, cap: u64 },
    #[error("total dimension {0} is odd; the mod-4 claim concerns even totals")]
    OddTotalDimension(usize),
    #[error("cannot eliminate {symbol}: {reason}")]
    EliminationFailed { symbol: String, reason: String },
}

/// Deliberate corruption used to exercise the refutation path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds 1 to the first nonzero cofactor of the term table.
    PerturbCofactor,
    /// Adds the first free symbol to the form under test.
    PerturbForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub fault: Option<Fault>,
    pub exhaustion_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { fault: None, exhaustion_cap: DEFAULT_EXHAUSTION_CAP }
    }
}

impl VerifyOptions {
    pub fn with_fault(fault: Fault) -> Self {
        VerifyOptions { fault: Some(fault), ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    ClosedForm,
    DifferenceIdentity,
    SignatureMod4,
    DualityConsequences,
    RoundTrip,
    StrictTriples,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::ClosedForm,
        Claim::DifferenceIdentity,
        Claim::SignatureMod4,
        Claim::DualityConsequences,
        Claim::RoundTrip,
        Claim::StrictTriples,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Claim::ClosedForm => "closed-form",
            Claim::DifferenceIdentity => "difference-identity",
            Claim::SignatureMod4 => "signature-mod4",
            Claim::DualityConsequences => "duality-consequences",
            Claim::RoundTrip => "round-trip",
            Claim::StrictTriples => "strict-triples",
        }
    }

    pub fn parse(name: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Claims whose parameter is a pair `(f_dim, b_dim)`.
    pub fn is_bundle_claim(&self) -> bool {
        matches!(self, Claim::DifferenceIdentity | Claim::SignatureMod4 | Claim::StrictTriples)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Proved,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// A point (symbols and `y`) where the residual is nonzero.
    Residual { point: BTreeMap<String, i64>, value: String },
    /// Residues of the free symbols where the form is not `0 mod 4`.
    Assignment { values: BTreeMap<String, u8>, value_mod4: u8 },
    /// A form that fails to be divisible (divisor 0: fails to vanish).
    FormCheck { statement: String, form: String, divisor: u32 },
    /// A seeded random case that broke a property.
    Sample { case: u64, detail: String },
}

#[derive(Debug, Clone)]
enum Evidence {
    Residual(FormalPoly),
    Form(MultiPoly),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationVerdict {
    pub schema: String,
    pub claim: Claim,
    pub params: BTreeMap<String, u64>,
    pub outcome: Outcome,
    pub residual: String,
    pub residual_hash: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    #[serde(skip)]
    evidence: Option<Evidence>,
}

impl PartialEq for VerificationVerdict {
    fn eq(&self, other: &Self) -> bool {
        self.schema == other.schema
            && self.claim == other.claim
            && self.params == other.params
            && self.outcome == other.outcome
            && self.residual == other.residual
            && self.residual_hash == other.residual_hash
            && self.witness == other.witness
            && self.details == other.details
    }
}

pub fn residual_hash(rendering: &str) -> String {
    hex::encode(Sha256::digest(rendering.as_bytes()))
}

impl VerificationVerdict {
    pub(crate) fn new(claim: Claim, params: &[(&str, usize)], residual: String) -> Self {
        VerificationVerdict {
            schema: VERDICT_SCHEMA.to_string(),
            claim,
            params: params.iter().map(|(k, v)| (k.to_string(), *v as u64)).collect(),
            outcome: Outcome::Proved,
            residual_hash: residual_hash(&residual),
            residual,
            witness: None,
            details: BTreeMap::new(),
            evidence: None,
        }
    }

    pub(crate) fn refute(mut self, witness: Witness) -> Self {
        self.outcome = Outcome::Refuted;
        self.witness = Some(witness);
        self
    }

    pub(crate) fn detail(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    fn with_evidence(mut self, evidence: Evidence) -> Self {
        self.evidence = Some(evidence);
        self
    }

    pub fn proved(&self) -> bool {
        self.outcome == Outcome::Proved
    }

    /// Short human label such as `closed-form dim=4`.
    pub fn label(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{} {}", self.claim, params.join(" "))
    }

    /// Re-evaluates the witness against the in-memory evidence. `None` when
    /// there is no witness or the verdict was deserialized.
    pub fn recheck_witness(&self) -> Option<bool> {
        let witness = self.witness.as_ref()?;
        match (witness, self.evidence.as_ref()) {
            (Witness::Residual { point, value }, Some(Evidence::Residual(residual))) => {
                let at = eval_formal(residual, point);
                Some(!at.is_zero() && at.to_string() == *value)
            }
            (Witness::Assignment { values, value_mod4 }, Some(Evidence::Form(form))) => {
                let point = values
                    .iter()
                    .map(|(k, v)| (Symbol::new(k), BigRational::from_integer(BigInt::from(*v))))
                    .collect();
                let v = form.eval(&point);
                let r = v.to_integer().mod_floor(&BigInt::from(4));
                Some(v.is_integer() && !r.is_zero() && r == BigInt::from(*value_mod4))
            }
            (Witness::FormCheck { divisor, .. }, Some(Evidence::Form(form))) => Some(match divisor {
                0 => !form.is_zero(),
                d => form.div_integral(&BigInt::from(*d)).is_none(),
            }),
            (Witness::Sample { .. }, _) => None,
            _ => None,
        }
    }
}

fn eval_formal(p: &FormalPoly, point: &BTreeMap<String, i64>) -> BigRational {
    let y = BigRational::from_integer(BigInt::from(point.get("y").copied().unwrap_or(0)));
    let values = point
        .iter()
        .filter(|(k, _)| k.as_str() != "y")
        .map(|(k, v)| (Symbol::new(k), BigRational::from_integer(BigInt::from(*v))))
        .collect();
    p.eval_rational(&y).eval(&values)
}

/// Chi entries of a dimension-`n` variety as formal symbols `{prefix}{p}`
/// for `p <= n/2`; the upper entries are `(-1)^n` times their mirror.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalChiVector {
    dim: usize,
    symbols: Vec<Symbol>,
    entries: Vec<MultiPoly>,
}

impl FormalChiVector {
    pub fn new(dim: usize, prefix: &str) -> Self {
        let symbols: Vec<Symbol> = (0..=dim / 2).map(|p| Symbol::new(&format!("{prefix}{p}"))).collect();
        let entries = (0..=dim)
            .map(|p| {
                if p <= dim / 2 {
                    MultiPoly::var(symbols[p].clone())
                } else {
                    let mirror = MultiPoly::var(symbols[dim - p].clone());
                    if dim % 2 == 1 {
                        -mirror
                    } else {
                        mirror
                    }
                }
            })
            .collect();
        FormalChiVector { dim, symbols, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn entry(&self, p: usize) -> &MultiPoly {
        &self.entries[p]
    }

    pub fn genus_polynomial(&self) -> FormalPoly {
        FormalPoly::new(self.entries.clone())
    }

    /// Replaces `symbol` in every entry.
    pub fn substitute(&self, symbol: &Symbol, replacement: &MultiPoly) -> FormalChiVector {
        FormalChiVector {
            dim: self.dim,
            symbols: self.symbols.iter().filter(|s| *s != symbol).cloned().collect(),
            entries: self.entries.iter().map(|e| e.substitute(symbol, replacement)).collect(),
        }
    }
}

/// τ, χ, σ and the χ^i of a formal genus polynomial.
fn formal_invariant(poly: &FormalPoly, kind: InvariantKind) -> MultiPoly {
    match kind {
        InvariantKind::Todd => poly.coeff(0),
        InvariantKind::Euler => poly.eval_rational(&-BigRational::one()),
        InvariantKind::Signature => poly.eval_rational(&BigRational::one()),
        InvariantKind::Chi(i) => poly.coeff(i),
    }
}

fn perturb_terms(terms: &mut [ClosedFormTerm]) {
    if let Some(t) = terms.iter_mut().find(|t| !t.cofactor.is_zero()) {
        t.cofactor = &t.cofactor + &IntPoly::one();
    }
}

fn assemble_formal(terms: &[ClosedFormTerm], value: impl Fn(InvariantKind) -> MultiPoly) -> FormalPoly {
    crate::closed_forms::assemble(terms, value)
}

/// Finds a small integer point where `residual` does not vanish.
fn residual_witness(residual: &FormalPoly, seed: u64) -> Witness {
    let mut symbols: Vec<Symbol> = residual.coeffs().iter().flat_map(|c| c.symbols()).collect();
    symbols.sort();
    symbols.dedup();
    let mut rng = case_rng(seed, 0);
    for attempt in 0..256 {
        let spread = 3 + attempt;
        let mut point: BTreeMap<String, i64> =
            symbols.iter().map(|s| (s.name().to_string(), rng.gen_range(-spread..=spread))).collect();
        point.insert("y".into(), rng.gen_range(-spread..=spread));
        let value = eval_formal(residual, &point);
        if !value.is_zero() {
            return Witness::Residual { point, value: value.to_string() };
        }
    }
    unreachable!("a nonzero polynomial has a nonvanishing integer point")
}

fn finish_identity(verdict: VerificationVerdict, residual: FormalPoly) -> VerificationVerdict {
    if residual.is_zero() {
        return verdict;
    }
    let witness = residual_witness(&residual, 0x5eed);
    verdict.refute(witness).with_evidence(Evidence::Residual(residual))
}

fn term_summary(terms: &[ClosedFormTerm]) -> serde_json::Value {
    terms
        .iter()
        .filter(|t| !t.cofactor.is_zero())
        .map(|t| {
            serde_json::json!({
                "kind": t.kind.label(),
                "scale": t.scale.to_string(),
                "cofactor": t.cofactor.to_string(),
            })
        })
        .collect::<Vec<_>>()
        .into()
}

/// Expands `χ_y = Σ s_p y^p` formally and subtracts the closed form with τ,
/// χ, σ replaced by their linear forms in the symbols.
pub fn verify_closed_form(dim: usize, opts: &VerifyOptions) -> Result<VerificationVerdict, VerifyError> {
    if dim == 0 {
        return Err(VerifyError::UnsupportedDimension {
            dim,
            reason: "the 4k closed form needs k >= 1 (it contains y^(2k-1))".into(),
        });
    }
    let x = FormalChiVector::new(dim, "X");
    let lhs = x.genus_polynomial();
    let mut terms = closed_form_terms(dim);
    if opts.fault == Some(Fault::PerturbCofactor) {
        perturb_terms(&mut terms);
    }
    let rhs = assemble_formal(&terms, |k| formal_invariant(&lhs, k));
    let residual = &lhs - &rhs;
    let verdict = VerificationVerdict::new(Claim::ClosedForm, &[("dim", dim)], residual.to_string())
        .detail("terms", term_summary(&terms));
    Ok(finish_identity(verdict, residual))
}

/// Formal fiber, base and total with the total's pivot symbol `E{n/2}`
/// eliminated through `χ(E) = χ(F)χ(B)`.
#[derive(Debug, Clone)]
pub struct FormalTriple {
    pub fiber: FormalChiVector,
    pub base: FormalChiVector,
    pub total: FormalChiVector,
    pub pivot: Symbol,
    pub pivot_value: MultiPoly,
}

impl FormalTriple {
    pub fn new(fiber_dim: usize, base_dim: usize) -> Result<Self, VerifyError> {
        let fiber = FormalChiVector::new(fiber_dim, "F");
        let base = FormalChiVector::new(base_dim, "B");
        let free_total = FormalChiVector::new(fiber_dim + base_dim, "E");
        let euler = |v: &FormalChiVector| formal_invariant(&v.genus_polynomial(), InvariantKind::Euler);
        let target = &euler(&fiber) * &euler(&base);
        let form = euler(&free_total);
        let pivot = free_total.symbols().last().expect("at least one symbol").clone();
        let coeff = form.linear_coefficient(&pivot);
        let fail = |reason: String| VerifyError::EliminationFailed { symbol: pivot.to_string(), reason };
        if !coeff.is_integer() || !(coeff.abs() == BigRational::one() || coeff.abs() == BigRational::from_integer(2.into())) {
            return Err(fail(format!("coefficient {coeff} is not ±1 or ±2")));
        }
        let rest = &form - &MultiPoly::term(coeff.clone(), crate::exact_poly::Monomial::var(pivot.clone()));
        let pivot_value = (&target - &rest)
            .div_integral(&coeff.to_integer())
            .ok_or_else(|| fail(format!("remaining terms are not divisible by {coeff}")))?;
        let total = free_total.substitute(&pivot, &pivot_value);
        Ok(FormalTriple { fiber, base, total, pivot, pivot_value })
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    /// Every free symbol: fiber, base, then the total's surviving symbols.
    pub fn free_symbols(&self) -> Vec<Symbol> {
        self.fiber
            .symbols()
            .iter()
            .chain(self.base.symbols())
            .chain(self.total.symbols())
            .cloned()
            .collect()
    }

    pub fn product_polynomial(&self) -> FormalPoly {
        &self.fiber.genus_polynomial() * &self.base.genus_polynomial()
    }
}

/// Checks `χ_y(E) - χ_y(F)χ_y(B) = Σ defect · scale · cofactor` over the
/// non-Euler terms of the total dimension's closed form.
pub fn verify_difference_identity(
    fiber_dim: usize,
    base_dim: usize,
    opts: &VerifyOptions,
) -> Result<VerificationVerdict, VerifyError> {
    let triple = FormalTriple::new(fiber_dim, base_dim)?;
    let total = triple.total.genus_polynomial();
    let product = triple.product_polynomial();
    let direct = &total - &product;
    let mut terms: Vec<ClosedFormTerm> = closed_form_terms(triple.dim())
        .into_iter()
        .filter(|t| t.kind != InvariantKind::Euler)
        .collect();
    if opts.fault == Some(Fault::PerturbCofactor) {
        perturb_terms(&mut terms);
    }
    let rhs = assemble_formal(&terms, |k| &formal_invariant(&total, k) - &formal_invariant(&product, k));
    let residual = &direct - &rhs;
    let verdict = VerificationVerdict::new(
        Claim::DifferenceIdentity,
        &[("f_dim", fiber_dim), ("b_dim", base_dim)],
        residual.to_string(),
    )
    .detail("eliminated", format!("{} = {}", triple.pivot, triple.pivot_value))
    .detail("terms", term_summary(&terms));
    Ok(finish_identity(verdict, residual))
}

/// An integer-coefficient polynomial reduced mod 4 for fast evaluation.
struct Mod4Form {
    terms: Vec<(u8, Vec<(usize, u32)>)>,
}

impl Mod4Form {
    fn compile(form: &MultiPoly, symbols: &[Symbol]) -> Self {
        let index: BTreeMap<&Symbol, usize> = symbols.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let four = BigInt::from(4);
        let terms = form
            .terms()
            .filter_map(|(m, c)| {
                let r = c.to_integer().mod_floor(&four).to_u8().expect("residue");
                (r != 0).then(|| (r, m.factors().iter().map(|(s, e)| (index[s], *e)).collect()))
            })
            .collect();
        Mod4Form { terms }
    }

    fn eval(&self, digits: &[u8]) -> u8 {
        self.terms.iter().fold(0u8, |acc, (c, factors)| {
            let t = factors.iter().fold(*c, |t, &(i, e)| {
                (0..e).fold(t, |t, _| (t * digits[i]) % 4)
            });
            (acc + t) % 4
        })
    }
}

fn digits_of(mut index: u64, len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| {
            let d = (index % 4) as u8;
            index /= 4;
            d
        })
        .collect()
}

/// Exhausts `σ(E) - σ(F)σ(B)` over all residues mod 4 of the free symbols.
pub fn verify_signature_mod4(
    fiber_dim: usize,
    base_dim: usize,
    opts: &VerifyOptions,
) -> Result<VerificationVerdict, VerifyError> {
    let dim = fiber_dim + base_dim;
    if dim % 2 == 1 {
        return Err(VerifyError::OddTotalDimension(dim));
    }
    let triple = FormalTriple::new(fiber_dim, base_dim)?;
    let sig = |p: &FormalPoly| formal_invariant(p, InvariantKind::Signature);
    let mut form = &sig(&triple.total.genus_polynomial()) - &sig(&triple.product_polynomial());
    let symbols = triple.free_symbols();
    if opts.fault == Some(Fault::PerturbForm) {
        form = &form + &MultiPoly::var(symbols[0].clone());
    }
    assert!(form.is_integral(), "elimination keeps integer coefficients");
    let required = 4u64
        .checked_pow(symbols.len() as u32)
        .filter(|r| *r <= opts.exhaustion_cap)
        .ok_or_else(|| VerifyError::CapExceeded {
            required: BigInt::from(4).pow(symbols.len() as u32).to_string(),
            cap: opts.exhaustion_cap,
        })?;
    let compiled = Mod4Form::compile(&form, &symbols);
    let violation = (0..required)
        .into_par_iter()
        .map(|i| (i, compiled.eval(&digits_of(i, symbols.len()))))
        .find_first(|(_, v)| *v != 0);
    let verdict = VerificationVerdict::new(
        Claim::SignatureMod4,
        &[("f_dim", fiber_dim), ("b_dim", base_dim)],
        form.to_string(),
    )
    .detail("assignments", required)
    .detail("free_symbols", symbols.len())
    .detail("eliminated", format!("{} = {}", triple.pivot, triple.pivot_value));
    Ok(match violation {
        None => verdict,
        Some((i, value_mod4)) => {
            let values = symbols
                .iter()
                .zip(digits_of(i, symbols.len()))
                .map(|(s, d)| (s.name().to_string(), d))
                .collect();
            verdict
                .refute(Witness::Assignment { values, value_mod4 })
                .with_evidence(Evidence::Form(form))
        }
    })
}

/// Divisibility of `σ ± χ` and `χ` as linear forms in the symbols.
pub fn verify_duality_consequences(dim: usize, opts: &VerifyOptions) -> Result<VerificationVerdict, VerifyError> {
    let poly = FormalChiVector::new(dim, "X").genus_polynomial();
    let chi = formal_invariant(&poly, InvariantKind::Euler);
    let sigma = formal_invariant(&poly, InvariantKind::Signature);
    let mut checks: Vec<(&str, MultiPoly, u32)> = match dim % 4 {
        1 | 3 => vec![("χ ≡ 0 mod 2", chi.clone(), 2), ("σ = 0", sigma.clone(), 0)],
        0 => vec![("σ - χ ≡ 0 mod 4", &sigma - &chi, 4), ("σ + χ ≡ 0 mod 2", &sigma + &chi, 2)],
        _ => vec![("σ + χ ≡ 0 mod 4", &sigma + &chi, 4), ("σ - χ ≡ 0 mod 2", &sigma - &chi, 2)],
    };
    if opts.fault == Some(Fault::PerturbForm) {
        let s = MultiPoly::var(Symbol::new("X0"));
        checks[0].1 = &checks[0].1 + &s;
    }
    let mut quotients = serde_json::Map::new();
    let mut failure = None;
    for (statement, form, divisor) in &checks {
        let ok = match divisor {
            0 => form.is_zero(),
            d => match form.div_integral(&BigInt::from(*d)) {
                Some(q) => {
                    quotients.insert(statement.to_string(), format!("{d}*({q})").into());
                    true
                }
                None => false,
            },
        };
        if !ok && failure.is_none() {
            failure = Some((statement.to_string(), form.clone(), *divisor));
        }
    }
    let rendering = checks.iter().map(|(s, f, _)| format!("{s}: {f}")).collect::<Vec<_>>().join("; ");
    let verdict = VerificationVerdict::new(Claim::DualityConsequences, &[("dim", dim)], rendering)
        .detail("quotients", serde_json::Value::Object(quotients));
    Ok(match failure {
        None => verdict,
        Some((statement, form, divisor)) => verdict
            .refute(Witness::FormCheck { statement, form: form.to_string(), divisor })
            .with_evidence(Evidence::Form(form)),
    })
}

/// Parameters covered by a sweep: dimensions in `range` for single-variety
/// claims; pairs `f, b >= 1` with `f + b` in `range` for bundle claims
/// (even totals only for the mod-4 claim).
pub fn sweep_parameters(claim: Claim, range: &RangeInclusive<usize>) -> Vec<(usize, usize)> {
    if !claim.is_bundle_claim() {
        return range.clone().map(|d| (d, 0)).collect();
    }
    let mut pairs = Vec::new();
    for total in range.clone() {
        if claim == Claim::SignatureMod4 && total % 2 == 1 {
            continue;
        }
        for f in 1..total {
            pairs.push((f, total - f));
        }
    }
    pairs
}

/// Runs one symbolic claim over a parameter range in parallel; verdicts come
/// back in parameter order.
pub fn verify_sweep(
    claim: Claim,
    range: &RangeInclusive<usize>,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationVerdict>, VerifyError> {
    sweep_parameters(claim, range)
        .into_par_iter()
        .map(|(a, b)| match claim {
            Claim::ClosedForm => verify_closed_form(a, opts),
            Claim::DualityConsequences => verify_duality_consequences(a, opts),
            Claim::DifferenceIdentity => verify_difference_identity(a, b, opts),
            Claim::SignatureMod4 => verify_signature_mod4(a, b, opts),
            Claim::RoundTrip | Claim::StrictTriples => Err(VerifyError::UnsupportedDimension {
                dim: a,
                reason: format!("{claim} is a sampled property; use the sampling sweeps"),
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{chi_y_small_dim, SmallDimInvariants};
    use crate::hodge_core::ChiVector;

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn formal_vector_mirrors() {
        let x = FormalChiVector::new(3, "X");
        assert_eq!(x.symbols().len(), 2);
        assert_eq!(x.entry(2), &-MultiPoly::var(Symbol::new("X1")));
        assert_eq!(x.entry(3), &-MultiPoly::var(Symbol::new("X0")));
        let x = FormalChiVector::new(4, "X");
        assert_eq!(x.entry(3), &MultiPoly::var(Symbol::new("X1")));
        assert!(x.entries().iter().all(|e| e.total_degree() <= 1));
    }

    #[test]
    fn closed_forms_prove() {
        for dim in 1..=12 {
            let v = verify_closed_form(dim, &opts()).unwrap();
            assert!(v.proved(), "dim {dim}: {}", v.residual);
            assert_eq!(v.residual, "0");
            assert_eq!(v.residual_hash, residual_hash("0"));
        }
    }

    #[test]
    fn dim_zero_is_unsupported() {
        assert!(matches!(verify_closed_form(0, &opts()), Err(VerifyError::UnsupportedDimension { .. })));
    }

    #[test]
    fn dim_three_matches_small_dim_formula() {
        // the numeric 3-fold formula agrees with the proved closed form on P1 x P2
        let c = ChiVector::from_i64(&[1, -2, 2, -1]).unwrap();
        let inv = SmallDimInvariants {
            todd: Some(c.todd()),
            euler: Some(c.euler()),
            signature: Some(c.signature()),
            chi1: None,
        };
        let g = chi_y_small_dim(3, &inv).unwrap();
        assert_eq!(g.poly(), c.genus_polynomial().poly());
        assert!(verify_closed_form(3, &opts()).unwrap().proved());
    }

    #[test]
    fn difference_identities_prove() {
        for total in 2..=7 {
            for f in 1..total {
                let v = verify_difference_identity(f, total - f, &opts()).unwrap();
                assert!(v.proved(), "({f},{}) {}", total - f, v.residual);
            }
        }
    }

    fn kinds(v: &VerificationVerdict) -> Vec<String> {
        v.details["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| format!("{}|{}|{}", t["kind"].as_str().unwrap(), t["scale"].as_str().unwrap(), t["cofactor"].as_str().unwrap()))
            .collect()
    }

    #[test]
    fn low_dimension_decompositions() {
        let v = verify_difference_identity(1, 1, &opts()).unwrap();
        assert_eq!(kinds(&v), ["signature|1/4|1 + 2*y + 1*y^2"]);
        let v = verify_difference_identity(1, 2, &opts()).unwrap();
        assert_eq!(kinds(&v), ["todd|1|1 + 1*y - 1*y^2 - 1*y^3"]);
        let v = verify_difference_identity(2, 2, &opts()).unwrap();
        assert_eq!(kinds(&v), ["todd|1|1 - 2*y^2 + 1*y^4", "signature|1/4|1*y + 2*y^2 + 1*y^3"]);
    }

    #[test]
    fn mod4_small_pairs() {
        let v = verify_signature_mod4(1, 1, &opts()).unwrap();
        assert!(v.proved());
        assert_eq!(v.details["assignments"], 64);
        let v = verify_signature_mod4(2, 2, &opts()).unwrap();
        assert!(v.proved());
        assert_eq!(v.details["assignments"], 4096);
        assert!(verify_signature_mod4(1, 3, &opts()).unwrap().proved());
        assert_eq!(verify_signature_mod4(1, 2, &opts()), Err(VerifyError::OddTotalDimension(3)));
    }

    #[test]
    fn mod4_cap() {
        let tight = VerifyOptions { exhaustion_cap: 100, ..opts() };
        let err = verify_signature_mod4(2, 2, &tight).unwrap_err();
        assert_eq!(err, VerifyError::CapExceeded { required: "4096".into(), cap: 100 });
    }

    #[test]
    fn duality_consequences() {
        for dim in 0..=12 {
            assert!(verify_duality_consequences(dim, &opts()).unwrap().proved(), "dim {dim}");
        }
        let v = verify_duality_consequences(4, &opts()).unwrap();
        assert_eq!(v.details["quotients"]["σ - χ ≡ 0 mod 4"], "4*(1*X1)");
        let v = verify_duality_consequences(2, &opts()).unwrap();
        assert_eq!(v.details["quotients"]["σ + χ ≡ 0 mod 4"], "4*(1*X0)");
        let v = verify_duality_consequences(5, &opts()).unwrap();
        assert_eq!(v.details["quotients"]["χ ≡ 0 mod 2"], "2*(1*X0 - 1*X1 + 1*X2)");
    }

    #[test]
    fn faults_refute_with_rechecked_witnesses() {
        let bad = VerifyOptions::with_fault(Fault::PerturbCofactor);
        for v in [
            verify_closed_form(4, &bad).unwrap(),
            verify_closed_form(7, &bad).unwrap(),
            verify_difference_identity(2, 3, &bad).unwrap(),
        ] {
            assert_eq!(v.outcome, Outcome::Refuted);
            assert!(matches!(v.witness, Some(Witness::Residual { .. })));
            assert_eq!(v.recheck_witness(), Some(true));
        }
        let bad = VerifyOptions::with_fault(Fault::PerturbForm);
        let v = verify_signature_mod4(2, 2, &bad).unwrap();
        assert_eq!(v.outcome, Outcome::Refuted);
        assert_eq!(v.recheck_witness(), Some(true));
        let v = verify_duality_consequences(6, &bad).unwrap();
        assert_eq!(v.outcome, Outcome::Refuted);
        assert_eq!(v.recheck_witness(), Some(true));
    }

    #[test]
    fn verdict_json_round_trip() {
        let v = verify_difference_identity(2, 2, &opts()).unwrap();
        let text = serde_json::to_string_pretty(&v).unwrap();
        assert!(text.contains("\"schema\": \"genus-forge/verdict/v1\""));
        assert!(text.contains("\"claim\": \"difference-identity\""));
        let back: VerificationVerdict = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        let bad = verify_closed_form(3, &VerifyOptions::with_fault(Fault::PerturbCofactor)).unwrap();
        let back: VerificationVerdict = serde_json::from_str(&serde_json::to_string(&bad).unwrap()).unwrap();
        assert_eq!(back, bad);
        assert_eq!(back.recheck_witness(), None);
    }

    #[test]
    fn sweep_pairs() {
        let pairs = sweep_parameters(Claim::SignatureMod4, &(2..=4));
        assert_eq!(pairs, [(1, 1), (1, 3), (2, 2), (3, 1)]);
        let vs = verify_sweep(Claim::ClosedForm, &(1..=5), &opts()).unwrap();
        assert_eq!(vs.len(), 5);
        assert!(vs.iter().all(VerificationVerdict::proved));
        assert_eq!(Claim::parse("signature-mod4"), Some(Claim::SignatureMod4));
    }
}
