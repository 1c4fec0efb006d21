//! Bit-packed vectors and subspaces of V(2N, 2) with the standard alternating form.
//!
//! Coordinates are ordered `x_1..x_N, z_1..z_N`; qubit 1 is the leftmost letter of a
//! Pauli word. A vector is stored in a single `u32`: bit `i - 1` holds `x_i` and bit
//! `N + i - 1` holds `z_i`, so coordinate `k` (0-based, in the order above) is bit `k`.
//!
//! The form is `σ(u, v) = Σ u.x_i v.z_i + u.z_i v.x_i (mod 2)`, i.e. Gram matrix
//! `[[0, I], [I, 0]]`. It is bilinear, alternating and non-degenerate, and two Pauli
//! operators commute exactly when their vectors pair to zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, BitXor};

use crate::error::{Error, Result};

/// Largest number of qubits any vector may carry (two 12-bit halves per word).
pub const MAX_QUBITS: usize = 12;

pub(crate) fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitsOutOfRange { n, max: MAX_QUBITS })
    }
}

fn check_same(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// An element of V(2N, 2), written `(x|z)`.
///
/// Nonzero vectors are the points of PG(2N-1, 2) and, at the same time, phase-free
/// Pauli operator labels. The zero vector is a legal value for linear algebra but every
/// point-level API rejects it with [`Error::ZeroVector`].
///
/// The ordering is the canonical one used everywhere in the crate: first by the
/// leading (lowest-index) set coordinate, then by the packed value. For one qubit
/// this gives `X = (1|0) < Y = (1|1) < Z = (0|1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    n: u8,
    bits: u32,
}

impl SymplecticVector {
    /// Builds `(x|z)` from the two halves; bit `i - 1` of each half is qubit `i`.
    pub fn new(n: usize, x: u32, z: u32) -> Result<Self> {
        check_qubits(n)?;
        let mask = (1u32 << n) - 1;
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::QubitsOutOfRange { n, max: MAX_QUBITS });
        }
        Ok(Self {
            n: n as u8,
            bits: x | (z << n),
        })
    }

    /// Builds a vector from its packed coordinate word.
    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_qubits(n)?;
        if u64::from(bits) >> (2 * n) != 0 {
            return Err(Error::QubitsOutOfRange { n, max: MAX_QUBITS });
        }
        Ok(Self { n: n as u8, bits })
    }

    pub(crate) const fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        Self { n: n as u8, bits }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// The unit vector along coordinate `k` (0-based, `x_1..x_N, z_1..z_N`).
    pub fn unit(n: usize, k: usize) -> Result<Self> {
        check_qubits(n)?;
        if k >= 2 * n {
            return Err(Error::QubitsOutOfRange { n, max: MAX_QUBITS });
        }
        Ok(Self::from_bits_unchecked(n, 1 << k))
    }

    /// Parses the written form `"10|01"`: `x_1..x_N`, a bar, then `z_1..z_N`.
    pub fn parse(s: &str) -> Option<Self> {
        let (xs, zs) = s.trim_matches(|c| c == '(' || c == ')').split_once('|')?;
        if xs.len() != zs.len() || check_qubits(xs.len()).is_err() {
            return None;
        }
        let half = |part: &str| -> Option<u32> {
            part.chars().enumerate().try_fold(0u32, |acc, (i, c)| match c {
                '0' => Some(acc),
                '1' => Some(acc | (1 << i)),
                _ => None,
            })
        };
        Self::new(xs.len(), half(xs)?, half(zs)?).ok()
    }

    pub fn n_qubits(&self) -> usize {
        self.n as usize
    }

    /// Packed coordinate word.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn x_bits(&self) -> u32 {
        self.bits & self.half_mask()
    }

    pub fn z_bits(&self) -> u32 {
        self.bits >> self.n
    }

    fn half_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `k` as a bit.
    pub fn coord(&self, k: usize) -> bool {
        (self.bits >> k) & 1 == 1
    }

    /// Position of the leading (lowest-index) nonzero coordinate.
    pub fn pivot(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Dense index of a point among the `4^N - 1` nonzero vectors.
    pub fn point_index(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.bits as usize - 1)
    }

    /// Returns `self` if it is a point, i.e. nonzero.
    pub fn as_point(self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::ZeroVector)
        } else {
            Ok(self)
        }
    }

    /// The alternating form. Panics if the qubit counts differ; see [`sp_form`] for the
    /// checked version.
    #[inline]
    pub fn form(&self, other: &Self) -> u8 {
        assert_eq!(self.n, other.n, "form of vectors with different qubit counts");
        let cross = (self.x_bits() & other.z_bits()) ^ (self.z_bits() & other.x_bits());
        (cross.count_ones() & 1) as u8
    }

    /// `σ(self, other) == 0`.
    #[inline]
    pub fn is_orthogonal(&self, other: &Self) -> bool {
        self.form(other) == 0
    }
}

impl Ord for SymplecticVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |v: &Self| (v.n, v.pivot().unwrap_or(usize::MAX), v.bits);
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for SymplecticVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitXor for SymplecticVector {
    type Output = Self;

    fn bitxor(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "sum of vectors with different qubit counts");
        Self {
            n: self.n,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl Add for SymplecticVector {
    type Output = Self;

    // Addition over GF(2) is XOR.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        self ^ rhs
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n_qubits();
        let digit = |k: usize| if self.coord(k) { '1' } else { '0' };
        let x: String = (0..n).map(digit).collect();
        let z: String = (n..2 * n).map(digit).collect();
        write!(f, "({x}|{z})")
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The alternating form `σ(u, v)` as a bit.
pub fn sp_form(u: &SymplecticVector, v: &SymplecticVector) -> Result<u8> {
    check_same(u.n_qubits(), v.n_qubits())?;
    Ok(u.form(v))
}

/// All `4^N - 1` points of PG(2N-1, 2) in packed-word order.
pub fn points(n: usize) -> Result<impl Iterator<Item = SymplecticVector>> {
    check_qubits(n)?;
    Ok((1u32..1 << (2 * n)).map(move |bits| SymplecticVector::from_bits_unchecked(n, bits)))
}

/// A subspace of V(2N, 2), held as its reduced row echelon basis.
///
/// Rows are sorted by strictly increasing pivot and every pivot column is zero in all
/// other rows, so two values compare equal exactly when they span the same subspace.
/// The derived ordering compares basis rows lexicographically (canonical order).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: u8,
    rows: Vec<SymplecticVector>,
}

impl Subspace {
    /// The zero subspace.
    pub fn zero(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self {
            n: n as u8,
            rows: Vec::new(),
        })
    }

    /// Row-reduces `vectors` to the canonical basis of their span.
    pub fn rref<I>(n: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = SymplecticVector>,
    {
        let mut space = Self::zero(n)?;
        for v in vectors {
            check_same(n, v.n_qubits())?;
            space.insert(v);
        }
        Ok(space)
    }

    /// Adds `v` to the span, keeping the basis reduced. Returns whether the rank grew.
    fn insert(&mut self, v: SymplecticVector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.pivot() else {
            return false;
        };
        for row in &mut self.rows {
            if row.coord(p) {
                *row = *row ^ r;
            }
        }
        let at = self.rows.partition_point(|row| row.pivot() < Some(p));
        self.rows.insert(at, r);
        true
    }

    /// Clears every pivot coordinate of `v`; zero iff `v` lies in the span.
    fn reduce(&self, mut v: SymplecticVector) -> SymplecticVector {
        for row in &self.rows {
            let p = row.pivot().expect("basis rows are nonzero");
            if v.coord(p) {
                v = v ^ *row;
            }
        }
        v
    }

    /// Builds a subspace from rows already known to be in RREF.
    pub(crate) fn from_rref_rows(n: usize, rows: Vec<SymplecticVector>) -> Self {
        debug_assert!(Self::rref(n, rows.iter().copied()).map(|s| s.rows == rows).unwrap_or(false));
        Self { n: n as u8, rows }
    }

    pub fn n_qubits(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SymplecticVector] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().filter_map(SymplecticVector::pivot)
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        v.n_qubits() == self.n_qubits() && self.reduce(*v).is_zero()
    }

    /// The `2^rank - 1` nonzero vectors of the subspace, in canonical order.
    pub fn span_points(&self) -> Vec<SymplecticVector> {
        let mut out = Vec::with_capacity((1usize << self.rank()) - 1);
        let mut acc = SymplecticVector::from_bits_unchecked(self.n_qubits(), 0);
        // Gray code walk: step i flips the row at the lowest set bit of i.
        for i in 1usize..1 << self.rank() {
            acc = acc ^ self.rows[i.trailing_zeros() as usize];
            out.push(acc);
        }
        out.sort_unstable();
        out
    }

    /// Whether σ vanishes on the whole subspace.
    ///
    /// By bilinearity `σ(Σ a_i b_i, Σ c_j b_j) = Σ a_i c_j σ(b_i, b_j)`, so it suffices
    /// to check the basis pairs.
    pub fn is_totally_isotropic(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, u)| self.rows[i + 1..].iter().all(|v| u.is_orthogonal(v)))
    }

    /// Whether `v` is orthogonal to every vector of the subspace.
    pub fn is_orthogonal_to(&self, v: &SymplecticVector) -> bool {
        self.rows.iter().all(|row| row.is_orthogonal(v))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// Canonical basis of the span of `vectors`; empty input yields the zero subspace.
pub fn rref(n: usize, vectors: &[SymplecticVector]) -> Result<Subspace> {
    Subspace::rref(n, vectors.iter().copied())
}

/// Counts of the other points that are / are not perpendicular to a given point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerpCensus {
    pub perpendicular: usize,
    pub non_perpendicular: usize,
}

/// Scans every point `q != p` and classifies it by `σ(p, q)`.
///
/// Over GF(2) the line through distinct `p`, `q` is `{p, q, p + q}`, and it is totally
/// isotropic exactly when `σ(p, q) = 0`, so the form test is the same as being joined
/// by a totally isotropic line.
pub fn perp_census(p: &SymplecticVector) -> Result<PerpCensus> {
    let p = p.as_point()?;
    let mut census = PerpCensus {
        perpendicular: 0,
        non_perpendicular: 0,
    };
    for q in points(p.n_qubits())?.filter(|q| *q != p) {
        if p.is_orthogonal(&q) {
            census.perpendicular += 1;
        } else {
            census.non_perpendicular += 1;
        }
    }
    Ok(census)
}

/// The projective line through two distinct points.
pub fn line_through(p: &SymplecticVector, q: &SymplecticVector) -> Result<Subspace> {
    check_same(p.n_qubits(), q.n_qubits())?;
    let p = p.as_point()?;
    let q = q.as_point()?;
    let line = Subspace::rref(p.n_qubits(), [p, q])?;
    if line.rank() != 2 {
        return Err(Error::DimensionMismatch { left: 2, right: line.rank() });
    }
    Ok(line)
}
