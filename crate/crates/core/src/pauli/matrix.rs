//! Exact matrices over the Gaussian integers, used as a brute-force commutation oracle.
//!
//! Nothing here looks at symplectic vectors: matrices are built from the literal 2x2
//! Pauli matrices by Kronecker products and compared entry by entry.

use std::ops::{Mul, Sub};

use num_complex::Complex;
use rayon::prelude::*;

use super::{operators, PauliLetter, PauliOperator};
use crate::error::{Error, Result};

/// `a + bi` with integer `a`, `b`.
pub type Gaussian = Complex<i64>;

/// Dense Kronecker products of Pauli matrices are capped at 64x64.
pub const MAX_ORACLE_QUBITS: usize = 6;
/// The all-pairs sweep is capped for runtime.
pub const MAX_ORACLE_SWEEP_QUBITS: usize = 3;

const ZERO: Gaussian = Complex::new(0, 0);
const ONE: Gaussian = Complex::new(1, 0);
const I: Gaussian = Complex::new(0, 1);

/// A square matrix of Gaussian integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Gaussian>,
}

impl ExactMatrix {
    pub fn from_rows(rows: &[&[Gaussian]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        Self { dim, entries }
    }

    /// The literal 2x2 matrix of a single Pauli letter; `Y = [[0, -i], [i, 0]]`.
    pub fn letter(letter: PauliLetter) -> Self {
        let rows: [[Gaussian; 2]; 2] = match letter {
            PauliLetter::I => [[ONE, ZERO], [ZERO, ONE]],
            PauliLetter::X => [[ZERO, ONE], [ONE, ZERO]],
            PauliLetter::Y => [[ZERO, -I], [I, ZERO]],
            PauliLetter::Z => [[ONE, ZERO], [ZERO, -ONE]],
        };
        Self::from_rows(&[&rows[0], &rows[1]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Gaussian {
        self.entries[row * self.dim + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| *e == ZERO)
    }

    pub fn scale(&self, c: Gaussian) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// `self ⊗ other`, with `self` as the outer factor.
    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut entries = vec![ZERO; dim * dim];
        for (i, j) in (0..self.dim).flat_map(|i| (0..self.dim).map(move |j| (i, j))) {
            let a = self.get(i, j);
            for (k, l) in (0..other.dim).flat_map(|k| (0..other.dim).map(move |l| (k, l))) {
                entries[(i * other.dim + k) * dim + j * other.dim + l] = a * other.get(k, l);
            }
        }
        Self { dim, entries }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Finds the Pauli word `P` on `n` qubits with `self = c P` for a unit `c`, by
    /// trying every word and every phase.
    pub fn phase_free_pauli(&self, n: usize) -> Result<Option<PauliOperator>> {
        if self.dim != 1 << n {
            return Ok(None);
        }
        let phases = [ONE, I, -ONE, -I];
        let words = std::iter::once(PauliOperator::identity(n)?).chain(operators(n)?);
        for word in words {
            let m = pauli_matrix(&word)?;
            if phases.iter().any(|&c| m.scale(c) == *self) {
                return Ok(Some(word));
            }
        }
        Ok(None)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let d = self.dim;
        let mut entries = vec![ZERO; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] += a * rhs.entries[k * d + j];
                }
            }
        }
        ExactMatrix { dim: d, entries }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

fn check_oracle_size(n: usize, cap: usize, operation: &'static str) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            operation,
            n,
            cap,
            predicted: format!("{0}x{0} matrices", 1u64 << n),
        });
    }
    Ok(())
}

/// Kronecker product of the letters' matrices, leftmost letter outermost.
pub fn pauli_matrix(p: &PauliOperator) -> Result<ExactMatrix> {
    check_oracle_size(p.n_qubits(), MAX_ORACLE_QUBITS, "Pauli matrix construction")?;
    Ok(p.letters()
        .fold(ExactMatrix::identity(1), |acc, l| acc.kron(&ExactMatrix::letter(l))))
}

/// Whether `AB - BA` is exactly zero.
pub fn commutes_matrix(p: &PauliOperator, q: &PauliOperator) -> Result<bool> {
    if p.n_qubits() != q.n_qubits() {
        return Err(Error::DimensionMismatch {
            left: p.n_qubits(),
            right: q.n_qubits(),
        });
    }
    Ok(pauli_matrix(p)?.commutator(&pauli_matrix(q)?).is_zero())
}

/// Outcome of comparing symplectic and matrix commutation on a set of pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OracleSweep {
    pub pairs_checked: u64,
    pub mismatches: u64,
}

/// Every ordered pair of non-identity operators on `n <= 3` qubits.
pub fn oracle_sweep(n: usize) -> Result<OracleSweep> {
    crate::gf2::check_qubits(n)?;
    check_oracle_size(n, MAX_ORACLE_SWEEP_QUBITS, "exhaustive oracle sweep")?;
    let ops: Vec<PauliOperator> = operators(n)?.collect();
    let mats = ops.iter().map(pauli_matrix).collect::<Result<Vec<_>>>()?;
    let per_row = ops
        .par_iter()
        .zip(mats.par_iter())
        .map(|(p, a)| {
            let mut row = OracleSweep::default();
            for (q, b) in ops.iter().zip(&mats) {
                let symplectic = super::commutes(p, q)?;
                row.pairs_checked += 1;
                row.mismatches += u64::from(symplectic != a.commutator(b).is_zero());
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_row.into_iter().fold(OracleSweep::default(), |acc, r| OracleSweep {
        pairs_checked: acc.pairs_checked + r.pairs_checked,
        mismatches: acc.mismatches + r.mismatches,
    }))
}
