//! Pauli words and their dictionary to points of W(2N-1, 2).
//!
//! Operators are taken modulo the phases `{±1, ±i}`: the `4^N - 1` non-identity classes
//! are exactly the points, and commutation does not depend on phase. Each letter maps to
//! one `(x_i, z_i)` pair:
//!
//! | letter | (x, z) |
//! |--------|--------|
//! | I      | (0, 0) |
//! | X      | (1, 0) |
//! | Z      | (0, 1) |
//! | Y      | (1, 1) |
//!
//! `Y` is treated as "X then Z" up to phase. Any symplectic change of basis would give
//! an equally valid dictionary; this one is the usual binary symplectic convention.

mod matrix;

pub use matrix::{commutes_matrix, oracle_sweep, pauli_matrix, ExactMatrix, Gaussian, OracleSweep, MAX_ORACLE_QUBITS, MAX_ORACLE_SWEEP_QUBITS};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{check_qubits, points, Subspace, SymplecticVector, MAX_QUBITS};
use crate::polar::{ensure_generator, is_maximal_by_scan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    /// `(x, z)` bits of the letter.
    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Z => (false, true),
            PauliLetter::Y => (true, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (false, true) => PauliLetter::Z,
            (true, true) => PauliLetter::Y,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// A phase-free Pauli word; qubit 1 is the leftmost letter.
///
/// The identity word is a valid value (its matrix is the identity), but it is not a
/// point, so [`pauli_to_vector`] and [`commutes`] reject it. Ordering follows the
/// canonical order of the underlying vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    vector: SymplecticVector,
}

impl PauliOperator {
    pub fn from_letters(letters: &[PauliLetter]) -> Result<Self> {
        let n = letters.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        check_qubits(n)?;
        let (mut x, mut z) = (0u32, 0u32);
        for (i, letter) in letters.iter().enumerate() {
            let (xi, zi) = letter.bits();
            x |= u32::from(xi) << i;
            z |= u32::from(zi) << i;
        }
        Ok(Self {
            vector: SymplecticVector::new(n, x, z)?,
        })
    }

    /// The all-`I` word on `n` qubits.
    pub fn identity(n: usize) -> Result<Self> {
        Ok(Self {
            vector: SymplecticVector::zero(n)?,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.vector.n_qubits()
    }

    pub fn is_identity(&self) -> bool {
        self.vector.is_zero()
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        let n = self.n_qubits();
        PauliLetter::from_bits(self.vector.coord(qubit), self.vector.coord(n + qubit))
    }

    pub fn letters(&self) -> impl Iterator<Item = PauliLetter> + '_ {
        (0..self.n_qubits()).map(|q| self.letter(q))
    }

    /// The symplectic vector, including the zero vector for the identity.
    pub fn raw_vector(&self) -> SymplecticVector {
        self.vector
    }

    /// Wraps any vector, zero included.
    pub fn from_raw_vector(vector: SymplecticVector) -> Self {
        Self { vector }
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Uppercase `I`, `X`, `Y`, `Z` only, no separators; the length is the qubit count.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch {
                'I' => Ok(PauliLetter::I),
                'X' => Ok(PauliLetter::X),
                'Y' => Ok(PauliLetter::Y),
                'Z' => Ok(PauliLetter::Z),
                _ => Err(Error::InvalidPauliLetter { ch, position }),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.len() > MAX_QUBITS {
            return Err(Error::QubitsOutOfRange {
                n: letters.len(),
                max: MAX_QUBITS,
            });
        }
        Self::from_letters(&letters)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn pauli_to_vector(p: &PauliOperator) -> Result<SymplecticVector> {
    if p.is_identity() {
        return Err(Error::IdentityOperator);
    }
    Ok(p.vector)
}

pub fn vector_to_pauli(v: &SymplecticVector) -> Result<PauliOperator> {
    Ok(PauliOperator { vector: v.as_point()? })
}

/// All `4^N - 1` non-identity operators, in packed-word order.
pub fn operators(n: usize) -> Result<impl Iterator<Item = PauliOperator>> {
    Ok(points(n)?.map(|vector| PauliOperator { vector }))
}

/// Commutation read off the form: `p` and `q` commute iff `σ(p, q) = 0`.
pub fn commutes(p: &PauliOperator, q: &PauliOperator) -> Result<bool> {
    let u = pauli_to_vector(p)?;
    let v = pauli_to_vector(q)?;
    Ok(crate::gf2::sp_form(&u, &v)? == 0)
}

/// The maximally commuting subset carried by a generator, in canonical order.
pub fn mcs_of_generator(g: &Subspace) -> Result<Vec<PauliOperator>> {
    ensure_generator(g)?;
    assert!(is_maximal_by_scan(g), "a rank-N isotropic subspace is maximal");
    g.span_points().iter().map(vector_to_pauli).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::rref;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn v(s: &str) -> SymplecticVector {
        SymplecticVector::parse(s).unwrap()
    }

    #[test]
    fn encoding_examples() {
        assert_eq!(pauli_to_vector(&p("X")).unwrap(), v("1|0"));
        assert_eq!(pauli_to_vector(&p("YZ")).unwrap(), v("10|11"));
        let distinct: std::collections::BTreeSet<_> =
            operators(2).unwrap().map(|o| pauli_to_vector(&o).unwrap()).collect();
        assert_eq!(distinct.len(), 15);
    }

    #[test]
    fn identity_is_not_a_point() {
        assert_eq!(pauli_to_vector(&p("II")), Err(Error::IdentityOperator));
        assert_eq!(vector_to_pauli(&SymplecticVector::zero(2).unwrap()), Err(Error::ZeroVector));
        assert_eq!(commutes(&p("I"), &p("X")), Err(Error::IdentityOperator));
    }

    #[test]
    fn parse_errors() {
        assert_eq!("XaZ".parse::<PauliOperator>(), Err(Error::InvalidPauliLetter { ch: 'a', position: 1 }));
        assert_eq!("x".parse::<PauliOperator>(), Err(Error::InvalidPauliLetter { ch: 'x', position: 0 }));
        assert_eq!("X Z".parse::<PauliOperator>(), Err(Error::InvalidPauliLetter { ch: ' ', position: 1 }));
        assert_eq!("".parse::<PauliOperator>(), Err(Error::EmptyWord));
        assert!("XXXXXXXXXXXXX".parse::<PauliOperator>().is_err());
        assert_eq!(p("XIZZY").n_qubits(), 5);
    }

    #[test]
    fn commutes_examples() {
        assert!(commutes(&p("X"), &p("X")).unwrap());
        assert!(!commutes(&p("X"), &p("Z")).unwrap());
        assert!(commutes(&p("XX"), &p("ZZ")).unwrap());
        assert!(matches!(commutes(&p("X"), &p("XX")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn mcs_examples() {
        let z = rref(1, &[v("0|1")]).unwrap();
        assert_eq!(mcs_of_generator(&z).unwrap(), vec![p("Z")]);

        let g = rref(2, &[v("10|00"), v("01|00")]).unwrap();
        let words: Vec<String> = mcs_of_generator(&g).unwrap().iter().map(|o| o.to_string()).collect();
        let set: std::collections::BTreeSet<_> = words.iter().map(String::as_str).collect();
        assert_eq!(set, ["XI", "IX", "XX"].into_iter().collect());
    }

    #[test]
    fn mcs_rejects_non_generators() {
        let line = rref(2, &[v("10|00")]).unwrap();
        assert_eq!(mcs_of_generator(&line), Err(Error::NotGenerator { rank: 1, expected: 2 }));
        let bad = rref(1, &[v("1|0"), v("0|1")]).unwrap();
        assert!(mcs_of_generator(&bad).is_err());
    }

    #[test]
    fn display_round_trip() {
        for w in ["X", "YZ", "IXYZ", "ZZZZZZZZZZZZ"] {
            assert_eq!(p(w).to_string(), w);
        }
    }
}
