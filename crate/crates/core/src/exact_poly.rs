//! Exact univariate polynomials in `y` over integers, rationals and formal
//! symbol polynomials, plus the sparse multivariate carrier used for formal
//! chi-symbols.
//!
//! Nothing here touches floating point. All values are kept in canonical
//! form (no stored leading zeros, no zero-coefficient terms), so equality is
//! structural.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient domain tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Integer,
    Rational,
    Formal,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Integer => "integer",
            Domain::Rational => "rational",
            Domain::Formal => "formal",
        })
    }
}

/// A commutative ring usable as a polynomial coefficient.
///
/// Mixing domains is a type error, so `UniPoly<BigInt> + UniPoly<BigRational>`
/// does not compile; convert explicitly with [`UniPoly::map`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const DOMAIN: Domain;

    /// Splits the value into a sign flag and the text of its magnitude, for
    /// rendering `a - b*y` instead of `a + -b*y`.
    fn signed_text(&self) -> (bool, String);
}

/// Coefficient rings that are modules over the rationals.
pub trait RationalModule: Coefficient {
    fn from_integer(value: &BigInt) -> Self;
    fn scale(&self, factor: &BigRational) -> Self;
}

impl Coefficient for BigInt {
    const DOMAIN: Domain = Domain::Integer;

    fn signed_text(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl Coefficient for BigRational {
    const DOMAIN: Domain = Domain::Rational;

    fn signed_text(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl RationalModule for BigRational {
    fn from_integer(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn scale(&self, factor: &BigRational) -> Self {
        self * factor
    }
}

/// Dense univariate polynomial in `y`, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = UniPoly<BigInt>;
pub type RatPoly = UniPoly<BigRational>;
pub type FormalPoly = UniPoly<MultiPoly>;

impl<C: Coefficient> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * y^degree`
    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The indeterminate `y`.
    pub fn y() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `1 + sign * y^degree`, the building block of every bracketed factor in
    /// the closed forms.
    pub fn one_plus_signed_power(negative: bool, degree: usize) -> Self {
        let term = Self::monomial(C::one(), degree);
        if negative {
            &Self::one() - &term
        } else {
            &Self::one() + &term
        }
    }

    pub fn domain(&self) -> Domain {
        C::DOMAIN
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `y^index`; zero beyond the degree.
    pub fn coeff(&self, index: usize) -> C {
        self.coeffs.get(index).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficients `0..len`, zero-padded.
    pub fn dense(&self, len: usize) -> Vec<C> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, point: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * point.clone() + c.clone())
    }

    pub fn scale(&self, factor: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: RationalModule> UniPoly<C> {
    pub fn eval_rational(&self, point: &BigRational) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.scale(point) + c.clone())
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_formal(&self) -> FormalPoly {
        self.map(MultiPoly::from_integer)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, point: &BigRational) -> BigRational {
        self.to_rational().eval_rational(point)
    }

    pub fn eval_i64(&self, point: i64) -> BigInt {
        self.eval(&BigInt::from(point))
    }

    /// Exact division by a scalar; `None` if any coefficient is not divisible.
    pub fn div_exact(&self, divisor: &BigInt) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(divisor);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::new(out))
    }
}

impl RatPoly {
    /// Integer polynomial with the same coefficients, or the index of the
    /// first coefficient with a nontrivial denominator.
    pub fn to_integer(&self) -> Result<IntPoly, usize> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(i) })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

impl<C: Coefficient> Add for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn add(self, rhs: Self) -> UniPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coefficient> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn sub(self, rhs: Self) -> UniPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coefficient> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn mul(self, rhs: Self) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let acc = std::mem::replace(&mut out[i + j], C::zero());
                out[i + j] = acc + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<C: Coefficient> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn neg(self) -> UniPoly<C> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr for UniPoly<C> {
            type Output = UniPoly<C>;

            fn $method(self, rhs: Self) -> UniPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coefficient> Neg for UniPoly<C> {
    type Output = UniPoly<C>;

    fn neg(self) -> UniPoly<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for UniPoly<C> {
    /// Ascending degree, explicit signs, coefficients always written:
    /// `1 - 2*y + 1*y^2`. The zero polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) = c.signed_text();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            f.write_str(&magnitude)?;
            match i {
                0 => {}
                1 => f.write_str("*y")?,
                _ => write!(f, "*y^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A named formal indeterminate. Ordered by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Product of symbol powers, sorted by symbol with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(symbol: Symbol) -> Self {
        Monomial(vec![(symbol, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, symbol: &Symbol) -> u32 {
        self.0
            .binary_search_by(|(s, _)| s.cmp(symbol))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Removes `symbol`, returning its exponent and the cofactor monomial.
    pub fn split_off(&self, symbol: &Symbol) -> (u32, Monomial) {
        match self.0.binary_search_by(|(s, _)| s.cmp(symbol)) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (e, Monomial(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (&self.0[i], &other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn var(symbol: Symbol) -> Self {
        Self::term(BigRational::one(), Monomial::var(symbol))
    }

    pub fn term(coeff: BigRational, monomial: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        MultiPoly { terms }
    }

    pub fn constant(value: BigRational) -> Self {
        Self::term(value, Monomial::one())
    }

    pub fn from_integer(value: &BigInt) -> Self {
        Self::constant(BigRational::from_integer(value.clone()))
    }

    pub fn from_i64(value: i64) -> Self {
        Self::from_integer(&BigInt::from(value))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigRational {
        self.terms.get(monomial).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the degree-one monomial `symbol`.
    pub fn linear_coefficient(&self, symbol: &Symbol) -> BigRational {
        self.coefficient(&Monomial::var(symbol.clone()))
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(s, _)| s.clone()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Divides every coefficient by `divisor`; `None` unless every quotient
    /// is an integer.
    pub fn div_integral(&self, divisor: &BigInt) -> Option<MultiPoly> {
        let d = BigRational::from_integer(divisor.clone());
        let q = self.scale_rational(&d.recip());
        q.is_integral().then_some(q)
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale_rational(&self, factor: &BigRational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        (0..exp).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    /// Replaces every occurrence of `symbol` by `replacement`.
    pub fn substitute(&self, symbol: &Symbol, replacement: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(symbol);
            let base = MultiPoly::term(c.clone(), rest);
            out = &out + &(&base * &replacement.pow(e));
        }
        out
    }

    /// Exact evaluation; symbols missing from `values` are treated as zero.
    pub fn eval(&self, values: &BTreeMap<Symbol, BigRational>) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.factors().iter().fold(c.clone(), |acc, (s, e)| {
                    let v = values.get(s).cloned().unwrap_or_else(BigRational::zero);
                    acc * num_traits::pow(v, *e as usize)
                })
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: Self) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            MultiPoly::insert_add(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: Self) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            MultiPoly::insert_add(&mut terms, m.clone(), -c.clone());
        }
        MultiPoly { terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: Self) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                MultiPoly::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: Self) -> MultiPoly {
        for (m, c) in rhs.terms {
            MultiPoly::insert_add(&mut self.terms, m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(mut self, rhs: Self) -> MultiPoly {
        for (m, c) in rhs.terms {
            MultiPoly::insert_add(&mut self.terms, m, -c);
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: Self) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            write!(f, "{}", c.abs())?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl Coefficient for MultiPoly {
    const DOMAIN: Domain = Domain::Formal;

    fn signed_text(&self) -> (bool, String) {
        match self.as_constant() {
            Some(c) => (c.is_negative(), c.abs().to_string()),
            None => (false, format!("({self})")),
        }
    }
}

impl RationalModule for MultiPoly {
    fn from_integer(value: &BigInt) -> Self {
        MultiPoly::from_integer(value)
    }

    fn scale(&self, factor: &BigRational) -> Self {
        self.scale_rational(factor)
    }
}

/// Convenience constructor for integer polynomials from small literals.
pub fn int_poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn schoolbook(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn add_examples() {
        assert_eq!(&int_poly(&[1, -1]) + &int_poly(&[1, 1]), int_poly(&[2]));
        assert_eq!(&int_poly(&[1, -1]) + &IntPoly::zero(), int_poly(&[1, -1]));
        assert_eq!(
            &int_poly(&[1, -2, 1]) + &int_poly(&[4, 8, 4]),
            int_poly(&[5, 6, 5])
        );
        let cancel = &int_poly(&[0, 0, 3]) + &int_poly(&[0, 0, -3]);
        assert!(cancel.is_zero());
        assert_eq!(cancel.degree(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&int_poly(&[1, -1]) * &int_poly(&[1, -1]), int_poly(&[1, -2, 1]));
        let oracle = schoolbook(&[1, -1], &[1, -1, 1]);
        assert_eq!(oracle, vec![1, -2, 2, -1]);
        assert_eq!(&int_poly(&[1, -1]) * &int_poly(&[1, -1, 1]), int_poly(&oracle));
        let sq = int_poly(&[1, 1]).pow(2);
        assert_eq!(&sq * &int_poly(&[1, -1]), int_poly(&[1, 1, -1, -1]));
    }

    #[test]
    fn eval_examples() {
        let p2 = int_poly(&[1, -1, 1]);
        assert_eq!(p2.eval_i64(-1), BigInt::from(3));
        assert_eq!(p2.eval_i64(0), BigInt::from(1));
        assert_eq!(p2.eval_i64(1), BigInt::from(1));
        assert_eq!(p2.eval_rational(&rational(1, 2)), rational(3, 4));
    }

    #[test]
    fn rendering() {
        assert_eq!(int_poly(&[1, -1, 1]).to_string(), "1 - 1*y + 1*y^2");
        assert_eq!(int_poly(&[0, -2]).to_string(), "-2*y");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let r = RatPoly::new(vec![rational(1, 2), rational(-3, 4)]);
        assert_eq!(r.to_string(), "1/2 - 3/4*y");
        let x = MultiPoly::var(Symbol::new("x"));
        let f = FormalPoly::new(vec![x.clone(), MultiPoly::from_i64(-2), &x + &MultiPoly::one()]);
        assert_eq!(f.to_string(), "(1*x) - 2*y + (1 + 1*x)*y^2");
    }

    #[test]
    fn rational_integrality() {
        let r = RatPoly::new(vec![rational(4, 2), rational(1, 3)]);
        assert_eq!(r.to_integer(), Err(1));
        let r = RatPoly::new(vec![rational(4, 2), rational(-6, 3)]);
        assert_eq!(r.to_integer(), Ok(int_poly(&[2, -2])));
        assert_eq!(rational(2, -4), rational(-1, 2));
    }

    #[test]
    fn multipoly_basics() {
        let a = MultiPoly::var(Symbol::new("a"));
        let b = MultiPoly::var(Symbol::new("b"));
        let sum = &a + &b;
        let sq = &sum * &sum;
        assert_eq!(sq.num_terms(), 3);
        let diff = &sq - &(&(&a * &a) + &(&b * &b));
        assert_eq!(diff, (&a * &b).scale_rational(&rational(2, 1)));
        assert!((&diff - &diff).is_zero());
        assert_eq!(sq.total_degree(), 2);
        let sub = sq.substitute(&Symbol::new("b"), &MultiPoly::from_i64(1));
        assert_eq!(sub, &(&(&a * &a) + &a.scale_rational(&rational(2, 1))) + &MultiPoly::one());
        assert_eq!(
            (&a.scale_rational(&rational(2, 1)) + &MultiPoly::from_i64(4)).div_integral(&BigInt::from(2)),
            Some(&a + &MultiPoly::from_i64(2))
        );
        assert_eq!(a.div_integral(&BigInt::from(2)), None);
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|v| int_poly(&v))
    }

    fn arb_multi() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((0usize..3, 0u32..3, -5i64..5), 0..5).prop_map(|terms| {
            let names = ["a", "b", "c"];
            terms.into_iter().fold(MultiPoly::zero(), |acc, (s, e, c)| {
                let v = MultiPoly::var(Symbol::new(names[s])).pow(e);
                &acc + &(&v * &MultiPoly::from_i64(c))
            })
        })
    }

    proptest! {
        #[test]
        fn int_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
            for p in [&a + &b, &a * &b, &a - &b] {
                prop_assert!(!p.coeffs().last().is_some_and(|c| c.is_zero()));
            }
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), n in -7i64..7, d in 1i64..5) {
            let t = rational(n, d);
            prop_assert_eq!((&a * &b).eval_rational(&t), a.eval_rational(&t) * b.eval_rational(&t));
            prop_assert_eq!((&a + &b).eval_rational(&t), a.eval_rational(&t) + b.eval_rational(&t));
        }

        #[test]
        fn multipoly_ring_axioms(a in arb_multi(), b in arb_multi(), c in arb_multi()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            let s = &(&a * &b) - &c;
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn formal_poly_eval_homomorphism(a in arb_multi(), b in arb_multi(), n in -4i64..4) {
            let p = FormalPoly::new(vec![a.clone(), b.clone()]);
            let q = FormalPoly::new(vec![b, MultiPoly::one(), a]);
            let t = rational(n, 3);
            prop_assert_eq!((&p * &q).eval_rational(&t), &p.eval_rational(&t) * &q.eval_rational(&t));
        }
    }
}
