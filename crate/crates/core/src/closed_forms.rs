//! χ_y written in terms of τ, σ, χ and the low-index χ^i.
//!
//! Every closed form is a sum of `scale * invariant * cofactor` terms where the
//! cofactor is a product of bracketed factors `(1 ± y^a)` and a power of `y`.
//! [`closed_form_terms`] produces that term table for a dimension; numeric
//! evaluation, the bundle defect decomposition and the formal verifier all
//! consume the same table.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_poly::{IntPoly, RationalModule, UniPoly};
use crate::hodge_core::{validate_chi_vector, ChiVector, GenusPolynomial, HodgeError};
use crate::Strictness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{operation} does not apply to dimension {dim}")]
    DimensionMismatch { operation: &'static str, dim: usize },
    #[error("dimension {dim} unsupported: {reason}")]
    UnsupportedDimension { dim: usize, reason: &'static str },
    #[error("dimension {dim} needs {expected} low chi entries, got {found}")]
    LowChiLength { dim: usize, expected: usize, found: usize },
    #[error("dimension {dim} requires the {name}")]
    MissingInvariant { dim: usize, name: &'static str },
    #[error("odd dimension requires an even euler characteristic, got {euler}")]
    OddEuler { euler: BigInt },
    #[error("congruence {congruence} fails: value {value} is not divisible by {modulus}")]
    Divisibility { congruence: &'static str, value: BigInt, modulus: u32 },
    #[error("closed form produced a non-integer coefficient at y^{index}")]
    NonIntegral { index: usize },
    #[error("supplied {field} = {supplied} disagrees with derived value {derived}")]
    Inconsistent { field: String, supplied: BigInt, derived: BigInt },
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

/// Which closed form applies to a complex dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionClass {
    Point,
    /// `dim = 2u + 1`
    Odd { u: usize },
    /// `dim = 4k`, `k >= 1`
    FourK { k: usize },
    /// `dim = 4k + 2`, `k >= 0`
    FourKPlus2 { k: usize },
}

pub fn dimension_class(dim: usize) -> DimensionClass {
    match (dim % 2, dim % 4) {
        _ if dim == 0 => DimensionClass::Point,
        (1, _) => DimensionClass::Odd { u: dim / 2 },
        (_, 0) => DimensionClass::FourK { k: dim / 4 },
        _ => DimensionClass::FourKPlus2 { k: dim / 4 },
    }
}

/// Indices `i` of the χ^i a closed form takes as free input.
pub fn low_chi_indices(dim: usize) -> RangeInclusive<usize> {
    let top = match dimension_class(dim) {
        DimensionClass::Point => 0,
        DimensionClass::Odd { u } => u.saturating_sub(1),
        DimensionClass::FourK { k } => 2 * k - 2,
        DimensionClass::FourKPlus2 { k } => (2 * k).saturating_sub(1),
    };
    1..=top
}

pub fn low_chi_count(dim: usize) -> usize {
    low_chi_indices(dim).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvariantKind {
    Todd,
    Euler,
    Signature,
    Chi(usize),
}

impl InvariantKind {
    pub fn label(&self) -> String {
        match self {
            InvariantKind::Todd => "todd".into(),
            InvariantKind::Euler => "euler".into(),
            InvariantKind::Signature => "signature".into(),
            InvariantKind::Chi(i) => format!("chi^{i}"),
        }
    }
}

/// One summand `scale * value(kind) * cofactor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTerm {
    pub kind: InvariantKind,
    pub scale: BigRational,
    pub cofactor: IntPoly,
}

fn y_pow(e: usize) -> IntPoly {
    IntPoly::monomial(BigInt::one(), e)
}

/// `1 + (-1)^{odd} y^e`; `odd_sign = true` gives `1 - y^e`.
fn bracket(minus: bool, e: usize) -> IntPoly {
    IntPoly::one_plus_signed_power(minus, e)
}

fn is_odd(n: usize) -> bool {
    n % 2 == 1
}

fn term(kind: InvariantKind, scale: BigRational, cofactor: IntPoly) -> ClosedFormTerm {
    ClosedFormTerm { kind, scale, cofactor }
}

fn unit() -> BigRational {
    BigRational::one()
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The term table of the closed form for `dim`.
///
/// Dimension 0 yields the constant path `τ · 1`.
pub fn closed_form_terms(dim: usize) -> Vec<ClosedFormTerm> {
    let one_plus_y_sq = bracket(false, 1).pow(2);
    let one_minus_y_sq = bracket(true, 1).pow(2);
    match dimension_class(dim) {
        DimensionClass::Point => vec![term(InvariantKind::Todd, unit(), IntPoly::one())],
        DimensionClass::Odd { u } => {
            // (1 + (-1)^{u+1} y^u)(1 - (-1)^{u+1} y^{u+1})
            let s = is_odd(u + 1);
            let mut terms = vec![
                term(InvariantKind::Todd, unit(), &bracket(s, u) * &bracket(!s, u + 1)),
                term(
                    InvariantKind::Euler,
                    if is_odd(u) { frac(-1, 2) } else { frac(1, 2) },
                    &y_pow(u) * &bracket(true, 1),
                ),
            ];
            for i in 1..u {
                // y^i (1 - (-1)^{u-i} y^{u-i})(1 + (-1)^{u-i} y^{u-i+1})
                let s = is_odd(u - i);
                let cof = &(&y_pow(i) * &bracket(!s, u - i)) * &bracket(s, u - i + 1);
                terms.push(term(InvariantKind::Chi(i), unit(), cof));
            }
            terms
        }
        DimensionClass::FourK { k } => {
            let mut terms = vec![
                term(InvariantKind::Todd, unit(), bracket(true, 2 * k).pow(2)),
                term(InvariantKind::Signature, frac(1, 4), &y_pow(2 * k - 1) * &one_plus_y_sq),
                term(InvariantKind::Euler, frac(-1, 4), &y_pow(2 * k - 1) * &one_minus_y_sq),
            ];
            for j in 1..k {
                terms.push(term(
                    InvariantKind::Chi(2 * j - 1),
                    unit(),
                    &(&y_pow(2 * j - 1) * &bracket(true, 2 * k - 2 * j))
                        * &bracket(true, 2 * k - 2 * j + 2),
                ));
                terms.push(term(
                    InvariantKind::Chi(2 * j),
                    unit(),
                    &y_pow(2 * j) * &bracket(true, 2 * k - 2 * j).pow(2),
                ));
            }
            terms
        }
        DimensionClass::FourKPlus2 { k } => {
            let mut terms = vec![
                term(InvariantKind::Todd, unit(), &bracket(true, 2 * k) * &bracket(true, 2 * k + 2)),
                term(InvariantKind::Signature, frac(1, 4), &y_pow(2 * k) * &one_plus_y_sq),
                term(InvariantKind::Euler, frac(1, 4), &y_pow(2 * k) * &one_minus_y_sq),
            ];
            for j in 1..=k {
                terms.push(term(
                    InvariantKind::Chi(2 * j - 1),
                    unit(),
                    &y_pow(2 * j - 1) * &bracket(true, 2 * k - 2 * j + 2).pow(2),
                ));
                if j < k {
                    terms.push(term(
                        InvariantKind::Chi(2 * j),
                        unit(),
                        &(&y_pow(2 * j) * &bracket(true, 2 * k - 2 * j))
                            * &bracket(true, 2 * k - 2 * j + 2),
                    ));
                }
            }
            terms
        }
    }
}

/// `Σ scale · value(kind) · cofactor` over any ring that is a Q-module.
pub fn assemble<S: RationalModule>(
    terms: &[ClosedFormTerm],
    mut value: impl FnMut(InvariantKind) -> S,
) -> UniPoly<S> {
    terms.iter().fold(UniPoly::zero(), |acc, t| {
        let weight = value(t.kind).scale(&t.scale);
        let cof = t.cofactor.map(S::from_integer);
        &acc + &cof.scale(&weight)
    })
}

/// τ, χ, σ and the free low χ^i of a variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormInput {
    pub dim: usize,
    pub todd: BigInt,
    pub euler: BigInt,
    /// Required in even dimension; must be 0 when given in odd dimension.
    pub signature: Option<BigInt>,
    /// `χ^1..χ^m` with `m` given by [`low_chi_indices`].
    pub low_chi: Vec<BigInt>,
}

impl ClosedFormInput {
    pub fn new(dim: usize, todd: impl Into<BigInt>, euler: impl Into<BigInt>) -> Self {
        Self { dim, todd: todd.into(), euler: euler.into(), signature: None, low_chi: Vec::new() }
    }

    pub fn with_signature(mut self, signature: impl Into<BigInt>) -> Self {
        self.signature = Some(signature.into());
        self
    }

    pub fn with_low_chi<I: Into<BigInt>>(mut self, low: impl IntoIterator<Item = I>) -> Self {
        self.low_chi = low.into_iter().map(Into::into).collect();
        self
    }

    /// The data the closed form consumes, read off a chi-vector.
    pub fn from_chi_vector(c: &ChiVector) -> Self {
        let inv = c.invariants();
        Self {
            dim: c.dim(),
            todd: inv.todd,
            euler: inv.euler,
            signature: Some(inv.signature),
            low_chi: low_chi_indices(c.dim()).map(|i| c.get(i).clone()).collect(),
        }
    }

    fn value(&self, kind: InvariantKind) -> BigInt {
        match kind {
            InvariantKind::Todd => self.todd.clone(),
            InvariantKind::Euler => self.euler.clone(),
            InvariantKind::Signature => self.signature.clone().unwrap_or_default(),
            InvariantKind::Chi(i) => self.low_chi[i - 1].clone(),
        }
    }

    fn low(&self, i: usize) -> &BigInt {
        &self.low_chi[i - 1]
    }

    fn require_signature(&self) -> Result<&BigInt, ClosedFormError> {
        self.signature
            .as_ref()
            .ok_or(ClosedFormError::MissingInvariant { dim: self.dim, name: "signature" })
    }

    /// Length and congruence preconditions.
    pub fn validate(&self) -> Result<(), ClosedFormError> {
        let expected = low_chi_count(self.dim);
        if self.low_chi.len() != expected {
            return Err(ClosedFormError::LowChiLength {
                dim: self.dim,
                expected,
                found: self.low_chi.len(),
            });
        }
        match dimension_class(self.dim) {
            DimensionClass::Point => Ok(()),
            DimensionClass::Odd { .. } => {
                if self.euler.is_odd() {
                    return Err(ClosedFormError::OddEuler { euler: self.euler.clone() });
                }
                match &self.signature {
                    Some(s) if !s.is_zero() => Err(ClosedFormError::Inconsistent {
                        field: "signature".into(),
                        supplied: s.clone(),
                        derived: BigInt::zero(),
                    }),
                    _ => Ok(()),
                }
            }
            DimensionClass::FourK { .. } => {
                let s = self.require_signature()?;
                divisible("σ - χ ≡ 0 mod 4", s - &self.euler, 4)?;
                divisible("σ + χ ≡ 0 mod 2", s + &self.euler, 2)
            }
            DimensionClass::FourKPlus2 { .. } => {
                let s = self.require_signature()?;
                divisible("σ + χ ≡ 0 mod 4", s + &self.euler, 4)?;
                divisible("σ - χ ≡ 0 mod 2", s - &self.euler, 2)
            }
        }
    }
}

fn divisible(congruence: &'static str, value: BigInt, modulus: u32) -> Result<(), ClosedFormError> {
    if value.is_multiple_of(&BigInt::from(modulus)) {
        Ok(())
    } else {
        Err(ClosedFormError::Divisibility { congruence, value, modulus })
    }
}

fn exact_div(value: BigInt, divisor: i64) -> BigInt {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    debug_assert!(r.is_zero(), "validated congruence");
    q
}

/// Rejects the result when it disagrees with any value the caller supplied.
fn check_consistency(input: &ClosedFormInput, g: &GenusPolynomial) -> Result<(), ClosedFormError> {
    let inv = g.invariants();
    let mut checks = vec![("todd".to_string(), &input.todd, inv.todd.clone()), ("euler".to_string(), &input.euler, inv.euler.clone())];
    if let Some(s) = &input.signature {
        checks.push(("signature".to_string(), s, inv.signature.clone()));
    }
    let coeffs = g.dense();
    for i in low_chi_indices(input.dim) {
        checks.push((format!("chi^{i}"), input.low(i), coeffs[i].clone()));
    }
    for (field, supplied, derived) in checks {
        if *supplied != derived {
            return Err(ClosedFormError::Inconsistent { field, supplied: supplied.clone(), derived });
        }
    }
    Ok(())
}

fn evaluate(input: &ClosedFormInput) -> Result<GenusPolynomial, ClosedFormError> {
    input.validate()?;
    let rational = assemble(&closed_form_terms(input.dim), |k| {
        BigRational::from_integer(input.value(k))
    });
    let poly = rational.to_integer().map_err(|index| ClosedFormError::NonIntegral { index })?;
    let g = GenusPolynomial::new(input.dim, poly).expect("closed-form cofactors have degree <= dim");
    check_consistency(input, &g)?;
    Ok(g)
}

/// χ_y of a variety of odd dimension `2u + 1`.
pub fn chi_y_odd(input: &ClosedFormInput) -> Result<GenusPolynomial, ClosedFormError> {
    match dimension_class(input.dim) {
        DimensionClass::Odd { .. } => evaluate(input),
        _ => Err(ClosedFormError::DimensionMismatch { operation: "odd-dimension closed form", dim: input.dim }),
    }
}

/// χ_y of a variety of dimension `4k`, `k >= 1`.
pub fn chi_y_4k(input: &ClosedFormInput) -> Result<GenusPolynomial, ClosedFormError> {
    match dimension_class(input.dim) {
        DimensionClass::FourK { .. } => evaluate(input),
        DimensionClass::Point => Err(ClosedFormError::UnsupportedDimension {
            dim: 0,
            reason: "the 4k closed form needs k >= 1; dimension 0 is the constant polynomial",
        }),
        _ => Err(ClosedFormError::DimensionMismatch { operation: "4k closed form", dim: input.dim }),
    }
}

/// χ_y of a variety of dimension `4k + 2`, `k >= 0`.
pub fn chi_y_4k2(input: &ClosedFormInput) -> Result<GenusPolynomial, ClosedFormError> {
    match dimension_class(input.dim) {
        DimensionClass::FourKPlus2 { .. } => evaluate(input),
        _ => Err(ClosedFormError::DimensionMismatch { operation: "4k+2 closed form", dim: input.dim }),
    }
}

/// Dispatches on the dimension class; dimension 0 is the constant `τ`.
pub fn chi_y(input: &ClosedFormInput) -> Result<GenusPolynomial, ClosedFormError> {
    evaluate(input)
}

/// Reconstructs the full chi-vector from the invariants and low entries,
/// solving for the top free entries and mirroring by duality.
pub fn complete_chi_vector(input: &ClosedFormInput) -> Result<ChiVector, ClosedFormError> {
    input.validate()?;
    let n = input.dim;
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = input.todd.clone();
    for i in low_chi_indices(n) {
        c[i] = input.low(i).clone();
    }
    let sum = |range: RangeInclusive<usize>, step_from: usize| -> BigInt {
        range.map(|j| input.low(2 * j - step_from).clone()).sum()
    };
    match dimension_class(n) {
        DimensionClass::Point => {}
        DimensionClass::Odd { u } => {
            let half_euler = exact_div(input.euler.clone(), 2);
            if u == 0 {
                c[0] = half_euler;
            } else {
                let sign = |e: usize| if is_odd(e) { -BigInt::one() } else { BigInt::one() };
                let mut top = sign(u + 1) * &input.todd + sign(u) * half_euler;
                for i in 1..u {
                    top += sign(u - i - 1) * input.low(i);
                }
                c[u] = top;
            }
        }
        DimensionClass::FourK { k } => {
            let s = input.require_signature()?.clone();
            let even = sum(1..=k - 1, 0);
            let odd = sum(1..=k - 1, 1);
            c[2 * k] = exact_div(&s + &input.euler, 2) - 2 * &input.todd - 2 * even;
            c[2 * k - 1] = exact_div(&s - &input.euler, 4) - odd;
        }
        DimensionClass::FourKPlus2 { k } => {
            let s = input.require_signature()?.clone();
            let quarter = exact_div(&s + &input.euler, 4);
            if k == 0 {
                c[0] = quarter;
            } else {
                c[2 * k] = quarter - &input.todd - sum(1..=k - 1, 0);
            }
            c[2 * k + 1] = exact_div(&s - &input.euler, 2) - 2 * sum(1..=k, 1);
        }
    }
    for p in 0..=n / 2 {
        let mirrored = if is_odd(n) { -c[p].clone() } else { c[p].clone() };
        if p != n - p {
            c[n - p] = mirrored;
        }
    }
    let chi = validate_chi_vector(c, n, Strictness::Strict)?;
    check_consistency(input, &chi.genus_polynomial())?;
    Ok(chi)
}

/// Invariants for the low-dimension corollaries; each dimension reads only
/// what its formula needs and cross-checks anything extra.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SmallDimInvariants {
    pub todd: Option<BigInt>,
    pub euler: Option<BigInt>,
    pub signature: Option<BigInt>,
    pub chi1: Option<BigInt>,
}

/// Closed forms for dimensions 1..=5, written out directly.
pub fn chi_y_small_dim(dim: usize, inv: &SmallDimInvariants) -> Result<GenusPolynomial, ClosedFormError> {
    let need = |v: &Option<BigInt>, name: &'static str| {
        v.clone().map(BigRational::from_integer).ok_or(ClosedFormError::MissingInvariant { dim, name })
    };
    let r = |p: &IntPoly| p.to_rational();
    let one_plus_y = bracket(false, 1);
    let one_minus_y = bracket(true, 1);
    let y = y_pow(1);
    let quarter = frac(1, 4);
    let half = frac(1, 2);
    let rational = match dim {
        1 => {
            let t = match (&inv.todd, &inv.euler) {
                (Some(t), _) => BigRational::from_integer(t.clone()),
                (None, Some(e)) => {
                    if e.is_odd() {
                        return Err(ClosedFormError::OddEuler { euler: e.clone() });
                    }
                    BigRational::from_integer(e.clone()) * &half
                }
                (None, None) => return Err(ClosedFormError::MissingInvariant { dim, name: "todd genus or euler characteristic" }),
            };
            r(&one_minus_y).scale(&t)
        }
        2 => {
            let s = need(&inv.signature, "signature")?;
            let e = need(&inv.euler, "euler characteristic")?;
            divisible("σ + χ ≡ 0 mod 4", inv.signature.clone().unwrap() + inv.euler.clone().unwrap(), 4)?;
            &r(&one_plus_y.pow(2)).scale(&(s * &quarter)) + &r(&one_minus_y.pow(2)).scale(&(e * &quarter))
        }
        3 => {
            let t = need(&inv.todd, "todd genus")?;
            let e = need(&inv.euler, "euler characteristic")?;
            if inv.euler.as_ref().unwrap().is_odd() {
                return Err(ClosedFormError::OddEuler { euler: inv.euler.clone().unwrap() });
            }
            &r(&(&one_plus_y.pow(2) * &one_minus_y)).scale(&t)
                - &r(&(&y * &one_minus_y)).scale(&(e * &half))
        }
        4 => {
            let t = need(&inv.todd, "todd genus")?;
            let s = need(&inv.signature, "signature")?;
            let e = need(&inv.euler, "euler characteristic")?;
            let (si, ei) = (inv.signature.clone().unwrap(), inv.euler.clone().unwrap());
            divisible("σ - χ ≡ 0 mod 4", &si - &ei, 4)?;
            divisible("σ + χ ≡ 0 mod 2", &si + &ei, 2)?;
            &(&r(&bracket(true, 2).pow(2)).scale(&t) + &r(&(&y * &one_plus_y.pow(2))).scale(&(s * &quarter)))
                - &r(&(&y * &one_minus_y.pow(2))).scale(&(e * &quarter))
        }
        5 => {
            let t = need(&inv.todd, "todd genus")?;
            let e = need(&inv.euler, "euler characteristic")?;
            let c1 = need(&inv.chi1, "chi^1")?;
            if inv.euler.as_ref().unwrap().is_odd() {
                return Err(ClosedFormError::OddEuler { euler: inv.euler.clone().unwrap() });
            }
            let todd_cof = &bracket(true, 2) * &bracket(false, 3);
            let chi1_cof = &(&y * &one_plus_y.pow(2)) * &one_minus_y;
            let euler_cof = &y_pow(2) * &one_minus_y;
            &(&r(&todd_cof).scale(&t) + &r(&chi1_cof).scale(&c1)) + &r(&euler_cof).scale(&(e * &half))
        }
        _ => {
            return Err(ClosedFormError::UnsupportedDimension {
                dim,
                reason: "low-dimension corollaries cover dimensions 1 to 5",
            })
        }
    };
    let poly = rational.to_integer().map_err(|index| ClosedFormError::NonIntegral { index })?;
    let g = GenusPolynomial::new(dim, poly).expect("degree <= dim");
    let derived = g.invariants();
    let coeffs = g.dense();
    let supplied = [
        ("todd", &inv.todd, derived.todd),
        ("euler", &inv.euler, derived.euler),
        ("signature", &inv.signature, derived.signature),
        ("chi^1", &inv.chi1, coeffs.get(1).cloned().unwrap_or_default()),
    ];
    for (field, value, derived) in supplied {
        if let Some(v) = value {
            if *v != derived {
                return Err(ClosedFormError::Inconsistent { field: field.into(), supplied: v.clone(), derived });
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::int_poly;
    use crate::hodge_core::{product_chi, projective_space_chi};

    fn gp(g: &GenusPolynomial) -> &IntPoly {
        g.poly()
    }

    fn p(n: usize) -> ChiVector {
        projective_space_chi(n)
    }

    #[test]
    fn classes_and_low_indices() {
        assert_eq!(dimension_class(0), DimensionClass::Point);
        assert_eq!(dimension_class(5), DimensionClass::Odd { u: 2 });
        assert_eq!(dimension_class(8), DimensionClass::FourK { k: 2 });
        assert_eq!(dimension_class(2), DimensionClass::FourKPlus2 { k: 0 });
        assert_eq!(low_chi_count(1), 0);
        assert_eq!(low_chi_count(3), 0);
        assert_eq!(low_chi_count(5), 1);
        assert_eq!(low_chi_count(4), 0);
        assert_eq!(low_chi_count(8), 2);
        assert_eq!(low_chi_count(2), 0);
        assert_eq!(low_chi_count(6), 1);
        assert_eq!(low_chi_count(10), 3);
    }

    #[test]
    fn odd_examples() {
        // curve of genus 0; the todd cofactor vanishes identically at u = 0
        let terms = closed_form_terms(1);
        assert!(terms[0].cofactor.is_zero());
        let g = chi_y_odd(&ClosedFormInput::new(1, 1, 2)).unwrap();
        assert_eq!(*gp(&g), int_poly(&[1, -1]));
        let oracle = product_chi(&p(1), &p(2));
        let g = chi_y_odd(&ClosedFormInput::new(3, 1, 6)).unwrap();
        assert_eq!(gp(&g), oracle.genus_polynomial().poly());
        assert_eq!(*gp(&g), int_poly(&[1, -2, 2, -1]));
        let oracle = product_chi(&oracle, &p(2));
        let g = chi_y_odd(&ClosedFormInput::new(5, 1, 18).with_low_chi([-3])).unwrap();
        assert_eq!(gp(&g), oracle.genus_polynomial().poly());
        assert_eq!(*gp(&g), int_poly(&[1, -3, 5, -5, 3, -1]));
    }

    #[test]
    fn odd_errors() {
        assert!(matches!(
            chi_y_odd(&ClosedFormInput::new(3, 1, 5)),
            Err(ClosedFormError::OddEuler { .. })
        ));
        assert!(matches!(
            chi_y_odd(&ClosedFormInput::new(5, 1, 18)),
            Err(ClosedFormError::LowChiLength { expected: 1, found: 0, .. })
        ));
        // curve with τ ≠ χ/2
        assert!(matches!(
            chi_y_odd(&ClosedFormInput::new(1, 1, 4)),
            Err(ClosedFormError::Inconsistent { .. })
        ));
        assert!(matches!(
            chi_y_odd(&ClosedFormInput::new(2, 1, 3).with_signature(1)),
            Err(ClosedFormError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn four_k_examples() {
        let oracle = product_chi(&p(2), &p(2));
        let g = chi_y_4k(&ClosedFormInput::new(4, 1, 9).with_signature(1)).unwrap();
        assert_eq!(gp(&g), oracle.genus_polynomial().poly());
        assert_eq!(*gp(&g), int_poly(&[1, -2, 3, -2, 1]));
        // dimension-2 data handed to the 4k form
        let bd = ClosedFormInput::new(2, 28, 96).with_signature(16);
        assert!(matches!(chi_y_4k(&bd), Err(ClosedFormError::DimensionMismatch { dim: 2, .. })));
        let err = chi_y_4k(&ClosedFormInput::new(4, 1, 9).with_signature(2)).unwrap_err();
        match err {
            ClosedFormError::Divisibility { congruence, value, modulus } => {
                assert_eq!(congruence, "σ - χ ≡ 0 mod 4");
                assert_eq!(value, BigInt::from(-7));
                assert_eq!(modulus, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            chi_y_4k(&ClosedFormInput::new(0, 1, 1).with_signature(1)),
            Err(ClosedFormError::UnsupportedDimension { dim: 0, .. })
        ));
        assert!(matches!(
            chi_y_4k(&ClosedFormInput::new(4, 1, 9)),
            Err(ClosedFormError::MissingInvariant { name: "signature", .. })
        ));
    }

    #[test]
    fn four_k_plus_2_examples() {
        let g = chi_y_4k2(&ClosedFormInput::new(2, 1, 3).with_signature(1)).unwrap();
        assert_eq!(*gp(&g), int_poly(&[1, -1, 1]));
        let oracle = product_chi(&product_chi(&p(2), &p(2)), &p(2));
        let g = chi_y_4k2(&ClosedFormInput::new(6, 1, 27).with_signature(1).with_low_chi([-3])).unwrap();
        assert_eq!(gp(&g), oracle.genus_polynomial().poly());
        assert_eq!(*gp(&g), int_poly(&[1, -3, 6, -7, 6, -3, 1]));
        let g = chi_y_4k2(&ClosedFormInput::new(2, 28, 96).with_signature(16)).unwrap();
        assert_eq!(*gp(&g), int_poly(&[28, -40, 28]));
        assert!(matches!(
            chi_y_4k2(&ClosedFormInput::new(2, 1, 3).with_signature(3)),
            Err(ClosedFormError::Divisibility { modulus: 4, .. })
        ));
        assert!(matches!(
            chi_y_4k2(&ClosedFormInput::new(6, 1, 27).with_signature(1)),
            Err(ClosedFormError::LowChiLength { expected: 1, .. })
        ));
    }

    #[test]
    fn small_dim_examples() {
        let inv = SmallDimInvariants { signature: Some(0.into()), euler: Some(4.into()), ..Default::default() };
        let g = chi_y_small_dim(2, &inv).unwrap();
        assert_eq!(gp(&g), product_chi(&p(1), &p(1)).genus_polynomial().poly());
        assert_eq!(*gp(&g), int_poly(&[1, -2, 1]));
        let inv = SmallDimInvariants { todd: Some(1.into()), euler: Some(6.into()), ..Default::default() };
        assert_eq!(*gp(&chi_y_small_dim(3, &inv).unwrap()), int_poly(&[1, -2, 2, -1]));
        let inv = SmallDimInvariants { todd: Some((-1).into()), ..Default::default() };
        assert_eq!(*gp(&chi_y_small_dim(1, &inv).unwrap()), int_poly(&[-1, 1]));
        let inv = SmallDimInvariants { euler: Some((-2).into()), ..Default::default() };
        assert_eq!(*gp(&chi_y_small_dim(1, &inv).unwrap()), int_poly(&[-1, 1]));
        let inv = SmallDimInvariants { todd: Some(1.into()), euler: Some(9.into()), signature: Some(2.into()), chi1: None };
        assert!(matches!(chi_y_small_dim(4, &inv), Err(ClosedFormError::Divisibility { .. })));
        let inv = SmallDimInvariants { todd: Some(1.into()), euler: Some(18.into()), chi1: Some((-3).into()), signature: None };
        assert_eq!(*gp(&chi_y_small_dim(5, &inv).unwrap()), int_poly(&[1, -3, 5, -5, 3, -1]));
        let inv = SmallDimInvariants { todd: Some(2.into()), euler: Some(3.into()), signature: Some(1.into()), chi1: None };
        assert!(matches!(chi_y_small_dim(2, &inv), Err(ClosedFormError::Inconsistent { .. })));
        assert!(matches!(chi_y_small_dim(6, &inv), Err(ClosedFormError::UnsupportedDimension { .. })));
    }

    #[test]
    fn small_dim_matches_general_form() {
        let samples = [
            product_chi(&p(1), &p(2)),
            product_chi(&p(2), &p(2)),
            product_chi(&product_chi(&p(1), &p(2)), &p(2)),
            ChiVector::from_i64(&[28, -40, 28]).unwrap(),
            ChiVector::from_i64(&[2, -20, 2]).unwrap(),
            ChiVector::from_i64(&[-3, 3]).unwrap(),
            ChiVector::from_i64(&[3, 7, -11, 7, 3]).unwrap(),
            ChiVector::from_i64(&[2, -3, 3, -2]).unwrap(),
        ];
        for c in samples {
            let inv = c.invariants();
            let small = SmallDimInvariants {
                todd: Some(inv.todd.clone()),
                euler: Some(inv.euler.clone()),
                signature: Some(inv.signature.clone()),
                chi1: c.entries().get(1).cloned(),
            };
            let general = chi_y(&ClosedFormInput::from_chi_vector(&c)).unwrap();
            assert_eq!(chi_y_small_dim(c.dim(), &small).unwrap(), general);
            assert_eq!(general, c.genus_polynomial());
        }
    }

    #[test]
    fn completion_examples() {
        let c = complete_chi_vector(&ClosedFormInput::new(3, 1, 6)).unwrap();
        assert_eq!(c, ChiVector::from_i64(&[1, -2, 2, -1]).unwrap());
        let c = complete_chi_vector(&ClosedFormInput::new(4, 1, 9).with_signature(1)).unwrap();
        assert_eq!(c, ChiVector::from_i64(&[1, -2, 3, -2, 1]).unwrap());
        let c = complete_chi_vector(&ClosedFormInput::new(0, 5, 5)).unwrap();
        assert_eq!(c, ChiVector::from_i64(&[5]).unwrap());
        let c = complete_chi_vector(&ClosedFormInput::new(2, 28, 96).with_signature(16)).unwrap();
        assert_eq!(c, ChiVector::from_i64(&[28, -40, 28]).unwrap());
        assert!(matches!(
            complete_chi_vector(&ClosedFormInput::new(0, 5, 4)),
            Err(ClosedFormError::Inconsistent { .. })
        ));
        assert!(matches!(
            complete_chi_vector(&ClosedFormInput::new(2, 27, 96).with_signature(16)),
            Err(ClosedFormError::Inconsistent { .. })
        ));
    }
}
