//! Multiplicativity defects `χ_y(E) - χ_y(F)χ_y(B)` of fiber bundles
//! `F → E → B`, their decomposition into invariant defects, the mod-4
//! signature check, and the Bryan–Donagi surface family.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::closed_forms::{
    closed_form_terms, complete_chi_vector, dimension_class, ClosedFormError, ClosedFormInput,
    DimensionClass, InvariantKind,
};
use crate::exact_poly::{IntPoly, RatPoly};
use crate::hodge_core::{curve_chi, product_chi, ChiVector, GenusPolynomial, InvariantSet};
use crate::Strictness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("total dimension {total} is not fiber {fiber} + base {base}")]
    DimensionAdditivity { fiber: usize, base: usize, total: usize },
    #[error("euler characteristic is not multiplicative: chi(E) = {total}, chi(F)chi(B) = {product}")]
    EulerViolation { total: BigInt, product: BigInt },
    #[error("{role} chi-vector violates duality")]
    Duality { role: &'static str },
    #[error("triple carries violated constraints: {0}")]
    ConstraintsViolated(String),
    #[error("bryan-donagi parameters need g >= 2 and n >= 2, got g={g}, n={n}")]
    ParameterRange { g: i64, n: i64 },
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

/// Fiber, base and total chi-vectors of a bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleTriple {
    fiber: ChiVector,
    base: ChiVector,
    total: ChiVector,
    strictness: Strictness,
    violations: Vec<String>,
}

impl BundleTriple {
    /// Dimension additivity is always enforced. In strict mode duality of
    /// every component and `χ(E) = χ(F)χ(B)` are enforced too; lax mode
    /// records them as violations.
    pub fn new(
        fiber: ChiVector,
        base: ChiVector,
        total: ChiVector,
        strictness: Strictness,
    ) -> Result<Self, BundleError> {
        if total.dim() != fiber.dim() + base.dim() {
            return Err(BundleError::DimensionAdditivity {
                fiber: fiber.dim(),
                base: base.dim(),
                total: total.dim(),
            });
        }
        let mut violations = Vec::new();
        for (role, c) in [("fiber", &fiber), ("base", &base), ("total", &total)] {
            if !c.satisfies_duality() {
                if strictness == Strictness::Strict {
                    return Err(BundleError::Duality { role });
                }
                violations.push(format!("{role} violates duality"));
            }
        }
        let product = fiber.euler() * base.euler();
        if total.euler() != product {
            if strictness == Strictness::Strict {
                return Err(BundleError::EulerViolation { total: total.euler(), product });
            }
            violations.push(format!(
                "euler characteristic not multiplicative: chi(E) = {}, chi(F)chi(B) = {}",
                total.euler(),
                product
            ));
        }
        Ok(Self { fiber, base, total, strictness, violations })
    }

    /// Total space given as invariants and low χ^i, completed via the
    /// closed forms.
    pub fn with_total_invariants(
        fiber: ChiVector,
        base: ChiVector,
        total: &ClosedFormInput,
        strictness: Strictness,
    ) -> Result<Self, BundleError> {
        let total = complete_chi_vector(total)?;
        Self::new(fiber, base, total, strictness)
    }

    /// The trivial bundle `F × B`.
    pub fn product(fiber: ChiVector, base: ChiVector) -> Result<Self, BundleError> {
        let total = product_chi(&fiber, &base);
        Self::new(fiber, base, total, Strictness::Strict)
    }

    pub fn fiber(&self) -> &ChiVector {
        &self.fiber
    }

    pub fn base(&self) -> &ChiVector {
        &self.base
    }

    pub fn total(&self) -> &ChiVector {
        &self.total
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn strictness(&self) -> Strictness {
        self.strictness
    }

    /// Empty for every strict triple.
    pub fn violations(&self) -> &[String] {
        &self.violations
    }

    pub fn constraints_hold(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn product_chi(&self) -> ChiVector {
        product_chi(&self.fiber, &self.base)
    }

    fn require_constraints(&self) -> Result<(), BundleError> {
        if self.constraints_hold() {
            Ok(())
        } else {
            Err(BundleError::ConstraintsViolated(self.violations.join("; ")))
        }
    }
}

/// `χ_y(E) - χ_y(F)χ_y(B)`, computed literally.
pub fn difference_direct(t: &BundleTriple) -> GenusPolynomial {
    let product = t.fiber.genus_polynomial().into_poly() * t.base.genus_polynomial().into_poly();
    let diff = t.total.genus_polynomial().poly() - &product;
    GenusPolynomial::new(t.dim(), diff).expect("degrees add")
}

/// One summand `scale · defect · cofactor` of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectTerm {
    pub kind: InvariantKind,
    pub defect: BigInt,
    pub scale: BigRational,
    pub cofactor: IntPoly,
}

impl DefectTerm {
    pub fn contribution(&self) -> RatPoly {
        self.cofactor
            .to_rational()
            .scale(&(BigRational::from_integer(self.defect.clone()) * &self.scale))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectDecomposition {
    pub dim: usize,
    /// `τ(E) - τ(F)τ(B)`
    pub todd_defect: BigInt,
    /// `σ(E) - σ(F)σ(B)`; zero in odd total dimension.
    pub signature_defect: BigInt,
    /// `χ(E) - χ(F)χ(B)`; zero for every admissible triple.
    pub euler_defect: BigInt,
    /// `(i, χ^i(E) - χ^i(F×B), cofactor)` for the low indices.
    pub per_degree: Vec<(usize, BigInt, IntPoly)>,
    pub terms: Vec<DefectTerm>,
    pub difference: GenusPolynomial,
}

impl DefectDecomposition {
    /// Sum of every term, as an integer polynomial.
    pub fn sum(&self) -> IntPoly {
        let total = self.terms.iter().fold(RatPoly::zero(), |acc, t| &acc + &t.contribution());
        total.to_integer().expect("signature defect is divisible by 4")
    }
}

/// Splits the difference into Todd, signature and per-degree defects times
/// the closed-form cofactors. The Euler term drops out because
/// `χ(E) = χ(F)χ(B)`.
pub fn difference_decomposition(t: &BundleTriple) -> Result<DefectDecomposition, BundleError> {
    t.require_constraints()?;
    let product = t.product_chi();
    let defect = |kind: InvariantKind| -> BigInt {
        match kind {
            InvariantKind::Todd => t.total.todd() - product.todd(),
            InvariantKind::Euler => t.total.euler() - product.euler(),
            InvariantKind::Signature => t.total.signature() - product.signature(),
            InvariantKind::Chi(i) => t.total.get(i) - product.get(i),
        }
    };
    let terms: Vec<DefectTerm> = closed_form_terms(t.dim())
        .into_iter()
        .filter(|term| term.kind != InvariantKind::Euler)
        .map(|term| DefectTerm {
            kind: term.kind,
            defect: defect(term.kind),
            scale: term.scale,
            cofactor: term.cofactor,
        })
        .collect();
    let per_degree = terms
        .iter()
        .filter_map(|term| match term.kind {
            InvariantKind::Chi(i) => Some((i, term.defect.clone(), term.cofactor.clone())),
            _ => None,
        })
        .collect();
    Ok(DefectDecomposition {
        dim: t.dim(),
        todd_defect: defect(InvariantKind::Todd),
        signature_defect: defect(InvariantKind::Signature),
        euler_defect: defect(InvariantKind::Euler),
        per_degree,
        terms,
        difference: difference_direct(t),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod4Report {
    pub signature_total: BigInt,
    pub signature_product: BigInt,
    pub difference: BigInt,
    /// Least nonnegative residue of `difference` mod 4.
    pub residue: u8,
    /// `(difference / 4) mod 2` when the residue is 0. Reported only; no
    /// claim is attached to it.
    pub quarter_parity: Option<u8>,
    pub euler_holds: bool,
    pub violations: Vec<String>,
    pub violation: bool,
}

/// `σ(E) ≡ σ(F)σ(B) mod 4`. Computed for lax triples as well; a nonzero
/// residue is a report outcome, not an error.
pub fn signature_mod4_check(t: &BundleTriple) -> Mod4Report {
    let signature_total = t.total.signature();
    let signature_product = t.fiber.signature() * t.base.signature();
    let difference = &signature_total - &signature_product;
    let residue = difference.mod_floor(&BigInt::from(4));
    let residue = u8::try_from(residue).expect("residue < 4");
    let quarter_parity = (residue == 0).then(|| {
        let q = (&difference / BigInt::from(4)).mod_floor(&BigInt::from(2));
        u8::try_from(q).expect("parity < 2")
    });
    Mod4Report {
        signature_total,
        signature_product,
        difference,
        residue,
        quarter_parity,
        euler_holds: t.total.euler() == t.fiber.euler() * t.base.euler(),
        violations: t.violations.clone(),
        violation: residue != 0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub name: &'static str,
    pub value: BigInt,
    /// `None` means the value must vanish outright.
    pub modulus: Option<u32>,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub dim: usize,
    pub checks: Vec<CongruenceCheck>,
}

impl CongruenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passes)
    }
}

/// Every congruence that duality forces for the dimension of `c`.
pub fn congruence_report(c: &ChiVector) -> CongruenceReport {
    let inv = c.invariants();
    let check = |name, value: BigInt, modulus: u32| CongruenceCheck {
        name,
        passes: value.is_multiple_of(&BigInt::from(modulus)),
        value,
        modulus: Some(modulus),
    };
    let checks = match dimension_class(c.dim()) {
        DimensionClass::Odd { .. } => vec![
            check("χ ≡ 0 mod 2", inv.euler.clone(), 2),
            CongruenceCheck { name: "σ = 0", passes: inv.signature.is_zero(), value: inv.signature.clone(), modulus: None },
        ],
        DimensionClass::Point | DimensionClass::FourK { .. } => vec![
            check("σ - χ ≡ 0 mod 4", &inv.signature - &inv.euler, 4),
            check("σ + χ ≡ 0 mod 2", &inv.signature + &inv.euler, 2),
        ],
        DimensionClass::FourKPlus2 { .. } => vec![
            check("σ + χ ≡ 0 mod 4", &inv.signature + &inv.euler, 4),
            check("σ - χ ≡ 0 mod 2", &inv.signature - &inv.euler, 2),
        ],
    };
    CongruenceReport { dim: c.dim(), checks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    MultiplicativeForAllY,
    /// Among y = -1, 0, 1 the difference vanishes only at -1.
    OnlyAtMinusOne,
    /// The difference is nonzero but vanishes at -1 and at some other
    /// classical value (e.g. y = 1 in odd total dimension, where σ = 0).
    AtSomeClassicalValues,
}

impl VerdictKind {
    pub fn label(&self) -> &'static str {
        match self {
            VerdictKind::MultiplicativeForAllY => "multiplicative-for-all-y",
            VerdictKind::OnlyAtMinusOne => "multiplicative-only-at-minus-one",
            VerdictKind::AtSomeClassicalValues => "multiplicative-at-some-classical-values",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceCheck {
    pub statement: String,
    pub difference_vanishes: bool,
    pub condition_holds: bool,
}

impl EquivalenceCheck {
    pub fn agrees(&self) -> bool {
        self.difference_vanishes == self.condition_holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityVerdict {
    pub kind: VerdictKind,
    /// Values of y in {-1, 0, 1} where the difference vanishes.
    pub vanishing_classical: Vec<i64>,
    pub equivalences: Vec<EquivalenceCheck>,
    pub decomposition: DefectDecomposition,
}

impl MultiplicativityVerdict {
    pub fn equivalences_agree(&self) -> bool {
        self.equivalences.iter().all(EquivalenceCheck::agrees)
    }
}

/// Decides for which y the χ_y-genus is multiplicative on this bundle and
/// cross-checks the low-dimension equivalences.
pub fn multiplicativity_verdict(t: &BundleTriple) -> Result<MultiplicativityVerdict, BundleError> {
    let d = difference_decomposition(t)?;
    let diff = d.difference.poly();
    let vanishes = diff.is_zero();
    let vanishing_classical: Vec<i64> =
        [-1i64, 0, 1].into_iter().filter(|&y| diff.eval_i64(y).is_zero()).collect();
    let kind = if vanishes {
        VerdictKind::MultiplicativeForAllY
    } else if vanishing_classical == [-1] {
        VerdictKind::OnlyAtMinusOne
    } else {
        VerdictKind::AtSomeClassicalValues
    };
    let defect_of = |k: InvariantKind| d.terms.iter().find(|t| t.kind == k).map(|t| t.defect.clone());
    let eq = |statement: &str, condition_holds: bool| EquivalenceCheck {
        statement: statement.to_string(),
        difference_vanishes: vanishes,
        condition_holds,
    };
    let todd_zero = d.todd_defect.is_zero();
    let sig_zero = d.signature_defect.is_zero();
    let mut equivalences = vec![eq(
        "difference = 0 <=> every defect with a nonzero cofactor vanishes",
        d.terms.iter().all(|t| t.cofactor.is_zero() || t.defect.is_zero()),
    )];
    match t.dim() {
        2 => {
            equivalences.push(eq("difference = 0 <=> signature defect = 0", sig_zero));
            equivalences.push(eq("difference = 0 <=> todd defect = 0", todd_zero));
        }
        3 => equivalences.push(eq("difference = 0 <=> todd defect = 0", todd_zero)),
        4 => equivalences.push(eq(
            "difference = 0 <=> todd defect = 0 and signature defect = 0",
            todd_zero && sig_zero,
        )),
        5 => {
            let chi1_zero = defect_of(InvariantKind::Chi(1)).is_some_and(|v| v.is_zero());
            equivalences.push(eq(
                "difference = 0 <=> todd defect = 0 and chi^1 defect = 0",
                todd_zero && chi1_zero,
            ));
        }
        _ => {}
    }
    Ok(MultiplicativityVerdict { kind, vanishing_classical, equivalences, decomposition: d })
}

/// A member `X_{g,n}` of the Bryan–Donagi family: a surface with two curve
/// fibrations and nonzero signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleExample {
    pub g: BigInt,
    pub n: BigInt,
    pub invariants: InvariantSet,
    pub genus: GenusPolynomial,
    /// `(base genus, fiber genus)` of the two fibrations.
    pub fibrations: [(BigInt, BigInt); 2],
}

impl BundleExample {
    pub fn chi_vector(&self) -> ChiVector {
        self.genus.to_chi_vector(Strictness::Strict).expect("surface chi_y is palindromic")
    }

    /// Fibration `index` (0 or 1) read as a curve-over-curve bundle.
    pub fn fibration_triple(&self, index: usize) -> Result<BundleTriple, BundleError> {
        let (b, f) = &self.fibrations[index];
        BundleTriple::new(curve_chi(f), curve_chi(b), self.chi_vector(), Strictness::Strict)
    }

    pub fn name(&self) -> String {
        format!("BD_{}_{}", self.g, self.n)
    }
}

fn third(v: BigInt) -> BigInt {
    let (q, r) = v.div_rem(&BigInt::from(3));
    assert!(r.is_zero(), "bryan-donagi quantities are integral");
    q
}

/// Invariants, χ_y and fibration genera of `X_{g,n}`.
pub fn bryan_donagi_example(g: i64, n: i64) -> Result<BundleExample, BundleError> {
    if g < 2 || n < 2 {
        return Err(BundleError::ParameterRange { g, n });
    }
    let (gb, nb) = (BigInt::from(g), BigInt::from(n));
    let one = BigInt::one();
    let g1 = &gb - &one;
    let n_2g3 = num_traits::pow(nb.clone(), (2 * g - 3) as usize);
    let n_2g2 = &n_2g3 * &nb;
    let n2m1 = &nb * &nb - &one;
    let gn1 = &gb * &nb - &one;

    let signature = third(4 * &gb * &g1 * &n2m1 * &n_2g3);
    let euler = 4 * &gb * &g1 * &gn1 * &n_2g2;
    let todd = third(&gb * &g1 * &n_2g3 * (3 * &gb * &nb * &nb - 3 * &nb + &nb * &nb - &one));

    // g(gn-1)n^{2g-2}(g-1)(1-y)^2 + (1/3)g(g-1)(n^2-1)n^{2g-3}(1+y)^2
    let a = &gb * &gn1 * &n_2g2 * &g1;
    let b = third(&gb * &g1 * &n2m1 * &n_2g3);
    let one_minus_y_sq = IntPoly::one_plus_signed_power(true, 1).pow(2);
    let one_plus_y_sq = IntPoly::one_plus_signed_power(false, 1).pow(2);
    let poly = &one_minus_y_sq.scale(&a) + &one_plus_y_sq.scale(&b);

    let fibrations = [
        (gb.clone(), &gb * &gn1 * &n_2g2 + &one),
        (&gb * &g1 * &n_2g2 + &one, &gb * &nb),
    ];
    Ok(BundleExample {
        invariants: InvariantSet { dim: 2, euler, todd, signature },
        genus: GenusPolynomial::new(2, poly).expect("degree 2"),
        fibrations,
        g: gb,
        n: nb,
    })
}

/// Named checks on a Bryan–Donagi example; every entry should be true.
pub fn bryan_donagi_checks(ex: &BundleExample) -> Result<Vec<(String, bool)>, BundleError> {
    let inv = &ex.invariants;
    let mut out = vec![
        ("8 | signature".to_string(), inv.signature.is_multiple_of(&BigInt::from(8))),
        ("4 todd = signature + euler".to_string(), 4 * &inv.todd == &inv.signature + &inv.euler),
        ("chi_y evaluations match invariants".to_string(), ex.genus.invariants() == *inv),
    ];
    let quarter = IntPoly::one_plus_signed_power(false, 1)
        .pow(2)
        .scale(&(&inv.signature / 4));
    for (i, (b, f)) in ex.fibrations.iter().enumerate() {
        let two = BigInt::from(2);
        let product = (&two - 2 * f) * (&two - 2 * b);
        out.push((format!("fibration {}: (2-2f)(2-2b) = euler", i + 1), product == inv.euler));
        let t = ex.fibration_triple(i)?;
        out.push((
            format!("fibration {}: difference = (signature/4)(1+y)^2", i + 1),
            *difference_direct(&t).poly() == quarter,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::int_poly;
    use crate::hodge_core::projective_space_chi;

    fn chi(v: &[i64]) -> ChiVector {
        ChiVector::from_i64(v).unwrap()
    }

    fn bd22_triple() -> BundleTriple {
        BundleTriple::new(curve_chi(&25.into()), curve_chi(&2.into()), chi(&[28, -40, 28]), Strictness::Strict)
            .unwrap()
    }

    #[test]
    fn direct_difference_examples() {
        let prod = BundleTriple::product(projective_space_chi(2), projective_space_chi(1)).unwrap();
        assert!(difference_direct(&prod).poly().is_zero());
        assert_eq!(*difference_direct(&bd22_triple()).poly(), int_poly(&[4, 8, 4]));
        let base = chi(&[2, -20, 2]);
        let t = BundleTriple::new(ChiVector::point(1.into()), base.clone(), base, Strictness::Strict).unwrap();
        assert!(difference_direct(&t).poly().is_zero());
    }

    #[test]
    fn construction_errors() {
        let err = BundleTriple::new(curve_chi(&0.into()), curve_chi(&0.into()), chi(&[1, -1]), Strictness::Strict);
        assert!(matches!(err, Err(BundleError::DimensionAdditivity { .. })));
        let err = BundleTriple::new(curve_chi(&0.into()), curve_chi(&0.into()), chi(&[1, 0, 1]), Strictness::Strict);
        assert!(matches!(err, Err(BundleError::EulerViolation { .. })));
        let lax = BundleTriple::new(curve_chi(&0.into()), curve_chi(&0.into()), chi(&[1, 0, 1]), Strictness::Lax).unwrap();
        assert_eq!(lax.violations().len(), 1);
        assert!(matches!(difference_decomposition(&lax), Err(BundleError::ConstraintsViolated(_))));
    }

    #[test]
    fn decomposition_examples() {
        let d = difference_decomposition(&bd22_triple()).unwrap();
        assert_eq!(d.signature_defect, BigInt::from(16));
        assert_eq!(d.todd_defect, BigInt::from(4));
        assert!(d.per_degree.is_empty());
        assert_eq!(*d.difference.poly(), int_poly(&[1, 1]).pow(2).scale(&4.into()));
        assert_eq!(d.sum(), *d.difference.poly());

        let p2 = projective_space_chi(2);
        let d = difference_decomposition(&BundleTriple::product(p2.clone(), p2).unwrap()).unwrap();
        assert!(d.terms.iter().all(|t| t.defect.is_zero()));
        assert!(d.todd_defect.is_zero() && d.signature_defect.is_zero());

        // total completed from τ = 2, χ = 8
        let p1p1 = product_chi(&projective_space_chi(1), &projective_space_chi(1));
        let t = BundleTriple::with_total_invariants(projective_space_chi(1), p1p1, &ClosedFormInput::new(3, 2, 8), Strictness::Strict).unwrap();
        assert_eq!(t.total(), &chi(&[2, -2, 2, -2]));
        let d = difference_decomposition(&t).unwrap();
        assert_eq!(d.todd_defect, BigInt::one());
        let expected = &int_poly(&[1, 1]).pow(2) * &int_poly(&[1, -1]);
        assert_eq!(*d.difference.poly(), expected);
        assert_eq!(d.sum(), expected);
    }

    #[test]
    fn mod4_examples() {
        let r = signature_mod4_check(&bd22_triple());
        assert_eq!((r.signature_total.clone(), r.signature_product.clone()), (16.into(), 0.into()));
        assert_eq!(r.residue, 0);
        assert_eq!(r.quarter_parity, Some(0));
        assert!(!r.violation);
        let p = BundleTriple::product(projective_space_chi(2), projective_space_chi(2)).unwrap();
        assert_eq!(signature_mod4_check(&p).residue, 0);
        let p1 = projective_space_chi(1);
        let lax = BundleTriple::new(p1.clone(), p1, chi(&[1, 0, 1]), Strictness::Lax).unwrap();
        let r = signature_mod4_check(&lax);
        assert!(!r.euler_holds);
        assert_eq!(r.residue, 2);
        assert!(r.violation);
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn congruence_examples() {
        let r = congruence_report(&chi(&[1, -2, 3, -2, 1]));
        assert!(r.all_pass());
        assert_eq!(r.checks[0].value, BigInt::from(-8));
        let r = congruence_report(&chi(&[1, -1, 1]));
        assert!(r.all_pass());
        assert_eq!(r.checks[0].value, BigInt::from(4));
        for g in 0..5 {
            let r = congruence_report(&curve_chi(&g.into()));
            assert!(r.all_pass());
            assert_eq!(r.checks[0].value, BigInt::from(2 - 2 * g));
        }
        let lax = crate::hodge_core::validate_chi_vector(vec![1.into(), 0.into(), 0.into()], 2, Strictness::Lax).unwrap();
        assert!(!congruence_report(&lax).all_pass());
    }

    #[test]
    fn verdict_examples() {
        let p = BundleTriple::product(projective_space_chi(2), curve_chi(&3.into())).unwrap();
        let v = multiplicativity_verdict(&p).unwrap();
        assert_eq!(v.kind, VerdictKind::MultiplicativeForAllY);
        assert!(v.equivalences_agree());

        let v = multiplicativity_verdict(&bd22_triple()).unwrap();
        assert_eq!(v.kind, VerdictKind::OnlyAtMinusOne);
        assert_eq!(v.vanishing_classical, vec![-1]);
        assert_eq!(v.equivalences.len(), 3);
        assert!(v.equivalences_agree());
        assert!(v.equivalences.iter().all(|e| !e.condition_holds));

        // dim 3 with zero todd defect: τ(E) = 1 = τ(P^1)τ(P^1×P^1), χ = 8
        let p1p1 = product_chi(&projective_space_chi(1), &projective_space_chi(1));
        let t = BundleTriple::with_total_invariants(projective_space_chi(1), p1p1.clone(), &ClosedFormInput::new(3, 1, 8), Strictness::Strict).unwrap();
        let v = multiplicativity_verdict(&t).unwrap();
        assert_eq!(v.kind, VerdictKind::MultiplicativeForAllY);
        assert!(v.equivalences_agree());

        let t = BundleTriple::with_total_invariants(projective_space_chi(1), p1p1, &ClosedFormInput::new(3, 2, 8), Strictness::Strict).unwrap();
        let v = multiplicativity_verdict(&t).unwrap();
        assert_eq!(v.kind, VerdictKind::AtSomeClassicalValues);
        assert_eq!(v.vanishing_classical, vec![-1, 1]);
        assert!(v.equivalences_agree());
    }

    #[test]
    fn bryan_donagi_values() {
        let ex = bryan_donagi_example(2, 2).unwrap();
        assert_eq!(ex.invariants.signature, BigInt::from(16));
        assert_eq!(ex.invariants.euler, BigInt::from(96));
        assert_eq!(ex.invariants.todd, BigInt::from(28));
        assert_eq!(*ex.genus.poly(), int_poly(&[28, -40, 28]));
        assert_eq!(ex.fibrations[0], (2.into(), 25.into()));
        assert_eq!(ex.fibrations[1], (9.into(), 4.into()));
        assert_eq!(bryan_donagi_example(2, 3).unwrap().invariants.signature, BigInt::from(64));
        assert_eq!(bryan_donagi_example(3, 2).unwrap().invariants.signature, BigInt::from(192));
        assert!(bryan_donagi_checks(&ex).unwrap().iter().all(|(_, ok)| *ok));
        assert!(matches!(bryan_donagi_example(1, 2), Err(BundleError::ParameterRange { .. })));
        assert!(matches!(bryan_donagi_example(2, 1), Err(BundleError::ParameterRange { .. })));
    }
}
