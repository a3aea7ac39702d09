//! Hodge diamonds, chi-vectors and the three classical invariants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_poly::IntPoly;
use crate::Strictness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("hodge table must be {expected}x{expected}, row {row} has length {found}")]
    Shape { expected: usize, row: usize, found: usize },
    #[error("hodge table must have {expected} rows, found {found}")]
    Rows { expected: usize, found: usize },
    #[error("hodge symmetry fails at (p,q)=({p},{q}): h[{p}][{q}]={a} but h[{q}][{p}]={b}")]
    HodgeSymmetry { p: usize, q: usize, a: u64, b: u64 },
    #[error("serre duality fails at (p,q)=({p},{q}): h[{p}][{q}]={a} but h[n-p][n-q]={b}")]
    SerreDuality { p: usize, q: usize, a: u64, b: u64 },
    #[error("chi-vector for dim {dim} needs {expected} entries, got {found}")]
    Length { dim: usize, expected: usize, found: usize },
    #[error("duality violated at indices ({p}, {q}): chi^{p} = {a} but (-1)^{dim} chi^{q} = {b}")]
    Duality { dim: usize, p: usize, q: usize, a: BigInt, b: BigInt },
}

/// Table `h[p][q] = dim H^q(X, Ω^p)` of a dimension-`n` variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    dim: usize,
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    /// Checks squareness, Hodge symmetry and Serre duality.
    pub fn new(h: Vec<Vec<u64>>) -> Result<Self, HodgeError> {
        let size = h.len();
        if size == 0 {
            return Err(HodgeError::Rows { expected: 1, found: 0 });
        }
        for (row, r) in h.iter().enumerate() {
            if r.len() != size {
                return Err(HodgeError::Shape { expected: size, row, found: r.len() });
            }
        }
        let n = size - 1;
        for p in 0..=n {
            for q in 0..=n {
                if h[p][q] != h[q][p] {
                    return Err(HodgeError::HodgeSymmetry { p, q, a: h[p][q], b: h[q][p] });
                }
                if h[p][q] != h[n - p][n - q] {
                    return Err(HodgeError::SerreDuality { p, q, a: h[p][q], b: h[n - p][n - q] });
                }
            }
        }
        Ok(Self { dim: n, h })
    }

    /// Diamond with `h[p][p] = 1` and zero elsewhere.
    pub fn projective_space(n: usize) -> Self {
        let h = (0..=n)
            .map(|p| (0..=n).map(|q| u64::from(p == q)).collect())
            .collect();
        Self { dim: n, h }
    }

    pub fn curve(genus: u64) -> Self {
        Self { dim: 1, h: vec![vec![1, genus], vec![genus, 1]] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &[Vec<u64>] {
        &self.h
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.h[p][q]
    }
}

/// `χ^p = Σ_q (-1)^q h^{p,q}`.
pub fn chi_from_diamond(d: &HodgeDiamond) -> ChiVector {
    let c = d
        .h
        .iter()
        .map(|row| {
            row.iter().enumerate().fold(BigInt::zero(), |acc, (q, &h)| {
                if q % 2 == 0 {
                    acc + h
                } else {
                    acc - h
                }
            })
        })
        .collect();
    ChiVector::new(c).expect("serre duality implies chi duality")
}

/// The sequence `χ^0..χ^n` of a dimension-`n` variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChiVector {
    dim: usize,
    c: Vec<BigInt>,
    dual: bool,
}

impl ChiVector {
    /// Strict construction; the dimension is `raw.len() - 1`.
    pub fn new(raw: Vec<BigInt>) -> Result<Self, HodgeError> {
        let dim = raw.len().checked_sub(1).ok_or(HodgeError::Length { dim: 0, expected: 1, found: 0 })?;
        validate_chi_vector(raw, dim, Strictness::Strict)
    }

    pub fn from_i64(raw: &[i64]) -> Result<Self, HodgeError> {
        Self::new(raw.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn point(multiplicity: BigInt) -> Self {
        Self { dim: 0, c: vec![multiplicity], dual: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.c
    }

    pub fn get(&self, p: usize) -> &BigInt {
        &self.c[p]
    }

    /// False only for vectors accepted in lax mode that break duality.
    pub fn satisfies_duality(&self) -> bool {
        self.dual
    }

    pub fn genus_polynomial(&self) -> GenusPolynomial {
        genus_polynomial(self)
    }

    pub fn invariants(&self) -> InvariantSet {
        invariants(self)
    }

    pub fn euler(&self) -> BigInt {
        alternating_sum(&self.c)
    }

    pub fn todd(&self) -> BigInt {
        self.c[0].clone()
    }

    pub fn signature(&self) -> BigInt {
        self.c.iter().sum()
    }
}

fn alternating_sum(c: &[BigInt]) -> BigInt {
    c.iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (p, v)| if p % 2 == 0 { acc + v } else { acc - v })
}

fn first_duality_violation(c: &[BigInt], dim: usize) -> Option<(usize, usize)> {
    (0..=dim / 2).find_map(|p| {
        let mirrored = if dim % 2 == 0 { c[dim - p].clone() } else { -c[dim - p].clone() };
        (c[p] != mirrored).then_some((p, dim - p))
    })
}

/// Validates length and the duality `χ^p = (-1)^n χ^{n-p}`.
///
/// In lax mode a duality violation is recorded on the returned vector
/// instead of failing; a wrong length is always an error.
pub fn validate_chi_vector(
    raw: Vec<BigInt>,
    dim: usize,
    strictness: Strictness,
) -> Result<ChiVector, HodgeError> {
    if raw.len() != dim + 1 {
        return Err(HodgeError::Length { dim, expected: dim + 1, found: raw.len() });
    }
    let violation = first_duality_violation(&raw, dim);
    match (violation, strictness) {
        (Some((p, q)), Strictness::Strict) => {
            let b = if dim % 2 == 0 { raw[q].clone() } else { -raw[q].clone() };
            Err(HodgeError::Duality { dim, p, q, a: raw[p].clone(), b })
        }
        (v, _) => Ok(ChiVector { dim, c: raw, dual: v.is_none() }),
    }
}

/// Euler characteristic, Todd genus and signature: χ_y at y = -1, 0, 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSet {
    pub dim: usize,
    pub euler: BigInt,
    pub todd: BigInt,
    pub signature: BigInt,
}

impl fmt::Display for InvariantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim={} euler={} todd={} signature={}",
            self.dim, self.euler, self.todd, self.signature
        )
    }
}

pub fn invariants(c: &ChiVector) -> InvariantSet {
    InvariantSet { dim: c.dim, euler: c.euler(), todd: c.todd(), signature: c.signature() }
}

/// χ_y as an integer polynomial of degree at most `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenusPolynomial {
    dim: usize,
    poly: IntPoly,
}

impl GenusPolynomial {
    /// Wraps `poly` as the genus of a dimension-`dim` variety; `None` if the
    /// degree exceeds `dim`.
    pub fn new(dim: usize, poly: IntPoly) -> Option<Self> {
        (poly.degree().unwrap_or(0) <= dim).then_some(Self { dim, poly })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    /// Coefficients `χ^0..χ^dim`, zero-padded.
    pub fn dense(&self) -> Vec<BigInt> {
        self.poly.dense(self.dim + 1)
    }

    /// Coefficient `p` equals `(-1)^dim` times coefficient `dim - p`.
    pub fn is_sign_palindromic(&self) -> bool {
        first_duality_violation(&self.dense(), self.dim).is_none()
    }

    pub fn to_chi_vector(&self, strictness: Strictness) -> Result<ChiVector, HodgeError> {
        validate_chi_vector(self.dense(), self.dim, strictness)
    }

    pub fn invariants(&self) -> InvariantSet {
        InvariantSet {
            dim: self.dim,
            euler: self.poly.eval_i64(-1),
            todd: self.poly.eval_i64(0),
            signature: self.poly.eval_i64(1),
        }
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub fn genus_polynomial(c: &ChiVector) -> GenusPolynomial {
    GenusPolynomial { dim: c.dim, poly: IntPoly::new(c.c.clone()) }
}

/// Chi-vector of `F × B`: the convolution `χ^i = Σ_j χ^j(F) χ^{i-j}(B)`.
pub fn product_chi(f: &ChiVector, b: &ChiVector) -> ChiVector {
    let dim = f.dim + b.dim;
    let mut c = vec![BigInt::zero(); dim + 1];
    for (i, x) in f.c.iter().enumerate() {
        for (j, y) in b.c.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    let dual = first_duality_violation(&c, dim).is_none();
    ChiVector { dim, c, dual }
}

/// Chi-vector of the genus-`g` curve, `(1-g, g-1)`.
pub fn curve_chi(genus: &BigInt) -> ChiVector {
    let t = BigInt::one() - genus;
    ChiVector { dim: 1, c: vec![t.clone(), -t], dual: true }
}

/// Chi-vector of projective `n`-space, `((-1)^p)`.
pub fn projective_space_chi(n: usize) -> ChiVector {
    let c = (0..=n).map(|p| if p % 2 == 0 { BigInt::one() } else { -BigInt::one() }).collect();
    ChiVector { dim: n, c, dual: true }
}
