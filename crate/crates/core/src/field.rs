//! Arithmetic in GF(2^n) for n <= 5, polynomial basis, plus trace-dual bases.
//!
//! The moduli are fixed so every output is reproducible bit for bit:
//!
//! | n | modulus          |
//! |---|------------------|
//! | 1 | x + 1            |
//! | 2 | x^2 + x + 1      |
//! | 3 | x^3 + x + 1      |
//! | 4 | x^4 + x + 1      |
//! | 5 | x^5 + x^2 + 1    |

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 5;

const MODULI: [u32; MAX_DEGREE + 1] = [0, 0b11, 0b111, 0b1011, 0b1_0011, 0b10_0101];

/// The fixed modulus for degree `n`, bit `k` being the coefficient of `x^k`.
pub fn modulus(n: usize) -> Result<u32> {
    check_degree(n)?;
    Ok(MODULI[n])
}

fn check_degree(n: usize) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange { n, max: MAX_DEGREE })
    }
}

/// An element of GF(2^n): bit `k` of `coeffs` is the coefficient of `x^k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    n: u8,
    coeffs: u32,
}

impl FieldElement {
    pub fn new(n: usize, coeffs: u32) -> Result<Self> {
        check_degree(n)?;
        if coeffs >> n != 0 {
            return Err(Error::DegreeOutOfRange { n, max: MAX_DEGREE });
        }
        Ok(Self { n: n as u8, coeffs })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(n, 1)
    }

    /// `x^k` reduced into the field.
    pub fn monomial(n: usize, k: usize) -> Result<Self> {
        let x = if n == 1 { Self::one(n)? } else { Self::new(n, 0b10)? };
        Ok(x.pow(k as u64))
    }

    /// Every element of GF(2^n), in coefficient order.
    pub fn elements(n: usize) -> Result<impl Iterator<Item = Self>> {
        check_degree(n)?;
        Ok((0..1u32 << n).map(move |coeffs| Self { n: n as u8, coeffs }))
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn coeffs(&self) -> u32 {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    fn mul_unchecked(self, other: Self) -> Self {
        let n = self.degree();
        let mut product = 0u32;
        for k in 0..n {
            if (other.coeffs >> k) & 1 == 1 {
                product ^= self.coeffs << k;
            }
        }
        let m = MODULI[n];
        for k in (n..2 * n - 1).rev() {
            if (product >> k) & 1 == 1 {
                product ^= m << (k - n);
            }
        }
        Self {
            n: self.n,
            coeffs: product,
        }
    }

    pub fn square(self) -> Self {
        self.mul_unchecked(self)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self { n: self.n, coeffs: 1 };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `a^(2^n - 2)`; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow((1u64 << self.n) - 2))
    }

    /// Absolute trace to GF(2): `a + a^2 + a^4 + ... + a^(2^(n-1))`.
    pub fn trace(self) -> u8 {
        let mut acc = self;
        let mut frob = self;
        for _ in 1..self.n {
            frob = frob.square();
            acc = acc + frob;
        }
        debug_assert!(acc.coeffs <= 1, "trace must land in GF(2)");
        acc.coeffs as u8
    }
}

impl Add for FieldElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "sum of elements of different fields");
        Self {
            n: self.n,
            coeffs: self.coeffs ^ rhs.coeffs,
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "product of elements of different fields");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs == 0 {
            return f.write_str("0");
        }
        let terms: Vec<String> = (0..self.degree())
            .rev()
            .filter(|k| (self.coeffs >> k) & 1 == 1)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in GF(2^{})", self.n)
    }
}

/// Product in GF(2^n); errors when the degrees differ.
pub fn fmul(a: FieldElement, b: FieldElement) -> Result<FieldElement> {
    if a.n != b.n {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.mul_unchecked(b))
}

pub fn trace(a: FieldElement) -> u8 {
    a.trace()
}

/// `{1, x, ..., x^(n-1)}`.
pub fn polynomial_basis(n: usize) -> Result<Vec<FieldElement>> {
    check_degree(n)?;
    Ok((0..n).map(|k| FieldElement { n: n as u8, coeffs: 1 << k }).collect())
}

/// A GF(2)-basis of GF(2^n) together with its trace-dual basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBasisPair {
    primal: Vec<FieldElement>,
    dual: Vec<FieldElement>,
}

impl DualBasisPair {
    pub fn degree(&self) -> usize {
        self.primal.len()
    }

    pub fn primal(&self) -> &[FieldElement] {
        &self.primal
    }

    pub fn dual(&self) -> &[FieldElement] {
        &self.dual
    }

    /// Coordinates of `a` in the primal basis: bit `i` is `Tr(a * dual_i)`.
    pub fn primal_coordinates(&self, a: FieldElement) -> u32 {
        coordinates(a, &self.dual)
    }

    /// Coordinates of `a` in the dual basis: bit `j` is `Tr(a * primal_j)`.
    pub fn dual_coordinates(&self, a: FieldElement) -> u32 {
        coordinates(a, &self.primal)
    }
}

fn coordinates(a: FieldElement, against: &[FieldElement]) -> u32 {
    against
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | (u32::from((a * b).trace()) << i))
}

/// Computes the basis `dual` with `Tr(primal_i * dual_j) = δ_ij`.
///
/// With Gram matrix `G_ij = Tr(primal_i * primal_j)` and `dual_j = Σ_k C_jk primal_k`,
/// the conditions read `G C^T = I`; `G` is symmetric, so `C = G^-1`.
pub fn dual_basis(primal: &[FieldElement]) -> Result<DualBasisPair> {
    let n = primal.first().map(FieldElement::degree).ok_or(Error::NotABasis { n: 0 })?;
    check_degree(n)?;
    if let Some(bad) = primal.iter().find(|p| p.degree() != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: bad.degree(),
        });
    }
    if primal.len() != n {
        return Err(Error::NotABasis { n });
    }
    let gram: Vec<u32> = primal
        .iter()
        .map(|&p| coordinates(p, primal))
        .collect();
    let inverse = invert_gf2(&gram).ok_or(Error::NotABasis { n })?;
    let dual: Vec<FieldElement> = inverse
        .iter()
        .map(|&row| {
            primal
                .iter()
                .enumerate()
                .filter(|(k, _)| (row >> k) & 1 == 1)
                .fold(FieldElement { n: n as u8, coeffs: 0 }, |acc, (_, &p)| acc + p)
        })
        .collect();
    for (i, &p) in primal.iter().enumerate() {
        for (j, &d) in dual.iter().enumerate() {
            assert_eq!((p * d).trace(), u8::from(i == j), "dual basis identity failed at ({i}, {j})");
        }
    }
    Ok(DualBasisPair {
        primal: primal.to_vec(),
        dual,
    })
}

/// Inverts a square GF(2) matrix given as bit rows (bit `j` of row `i` is entry `(i, j)`).
fn invert_gf2(matrix: &[u32]) -> Option<Vec<u32>> {
    let n = matrix.len();
    let mut left = matrix.to_vec();
    let mut right: Vec<u32> = (0..n).map(|i| 1 << i).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| (left[r] >> col) & 1 == 1)?;
        left.swap(col, pivot);
        right.swap(col, pivot);
        for r in 0..n {
            if r != col && (left[r] >> col) & 1 == 1 {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    Some(right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, c: u32) -> FieldElement {
        FieldElement::new(n, c).unwrap()
    }

    /// Schoolbook product followed by long division, on coefficient vectors.
    fn naive_mulmod(a: u32, b: u32, modulus: u32) -> u32 {
        let deg = |p: u32| 31 - p.leading_zeros() as i32;
        let mut prod = 0u64;
        for i in 0..32 {
            if (a >> i) & 1 == 1 {
                prod ^= u64::from(b) << i;
            }
        }
        let m = u64::from(modulus);
        while prod != 0 && 63 - prod.leading_zeros() as i32 >= deg(modulus) {
            let shift = 63 - prod.leading_zeros() as i32 - deg(modulus);
            prod ^= m << shift;
        }
        prod as u32
    }

    #[test]
    fn fmul_examples() {
        for n in 2..=5 {
            assert_eq!(fmul(el(n, 1), el(n, 0b10)).unwrap(), el(n, 0b10));
        }
        assert_eq!(fmul(el(2, 0b10), el(2, 0b10)).unwrap(), el(2, 0b11));
        assert_eq!(fmul(el(3, 0b100), el(3, 0b10)).unwrap(), el(3, 0b11));
    }

    #[test]
    fn fmul_matches_long_division() {
        for n in 1..=MAX_DEGREE {
            let m = modulus(n).unwrap();
            for a in FieldElement::elements(n).unwrap() {
                for b in FieldElement::elements(n).unwrap() {
                    assert_eq!((a * b).coeffs(), naive_mulmod(a.coeffs(), b.coeffs(), m));
                }
            }
        }
    }

    #[test]
    fn fmul_rejects_degree_mismatch() {
        assert_eq!(
            fmul(el(2, 1), el(3, 1)),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn trace_examples() {
        for n in 1..=MAX_DEGREE {
            assert_eq!(trace(el(n, 0)), 0);
        }
        assert_eq!(trace(el(2, 0b10)), 1);
        assert_eq!(trace(el(1, 1)), 1);
    }

    #[test]
    fn moduli_are_irreducible() {
        // No nonzero element squares to zero and the multiplicative group is cyclic of
        // order 2^n - 1 only if the quotient is a field: check every nonzero element is
        // invertible.
        for n in 1..=MAX_DEGREE {
            for a in FieldElement::elements(n).unwrap().filter(|a| !a.is_zero()) {
                assert!(FieldElement::elements(n).unwrap().any(|b| (a * b).coeffs() == 1));
            }
        }
    }

    #[test]
    fn dual_basis_examples() {
        let pair = dual_basis(&[el(1, 1)]).unwrap();
        assert_eq!(pair.dual(), &[el(1, 1)]);

        for n in [2, 3] {
            let primal = polynomial_basis(n).unwrap();
            let pair = dual_basis(&primal).unwrap();
            for (i, &p) in primal.iter().enumerate() {
                for (j, &d) in pair.dual().iter().enumerate() {
                    assert_eq!((p * d).trace(), u8::from(i == j));
                }
            }
        }
        // GF(4), basis {1, x}: Gram = [[0,1],[1,1]], inverse [[1,1],[1,0]], so the
        // dual is {1 + x, 1}.
        let pair = dual_basis(&polynomial_basis(2).unwrap()).unwrap();
        assert_eq!(pair.dual(), &[el(2, 0b11), el(2, 0b01)]);
    }

    #[test]
    fn dual_basis_rejects_non_bases() {
        assert_eq!(dual_basis(&[el(2, 1), el(2, 1)]), Err(Error::NotABasis { n: 2 }));
        assert_eq!(dual_basis(&[el(3, 1), el(3, 2)]), Err(Error::NotABasis { n: 3 }));
        assert!(dual_basis(&[]).is_err());
        assert!(dual_basis(&[el(2, 1), el(3, 2)]).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        for n in 1..=MAX_DEGREE {
            let pair = dual_basis(&polynomial_basis(n).unwrap()).unwrap();
            for a in FieldElement::elements(n).unwrap() {
                assert_eq!(pair.primal_coordinates(a), a.coeffs());
                let rebuilt = pair
                    .dual()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| (pair.dual_coordinates(a) >> j) & 1 == 1)
                    .fold(el(n, 0), |acc, (_, &d)| acc + d);
                assert_eq!(rebuilt, a);
            }
        }
    }

    #[test]
    fn degree_range() {
        assert!(FieldElement::new(0, 0).is_err());
        assert!(FieldElement::new(6, 0).is_err());
        assert!(FieldElement::new(3, 0b1000).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(el(3, 0b101).to_string(), "x^2+1");
        assert_eq!(el(2, 0b10).to_string(), "x");
        assert_eq!(el(4, 0).to_string(), "0");
    }
}
