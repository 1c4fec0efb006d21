//! The symplectic polar space W(2N-1, 2): closed-form counts, generators and spreads.

mod exact_cover;
mod gq;
mod spread;

pub use exact_cover::ExactCover;
pub use gq::gq22_structure_check;
pub use spread::{desarguesian_spread, enumerate_spreads, Spread, MAX_DESARGUESIAN_QUBITS, MAX_SEARCH_QUBITS, MAX_SPREAD_CENSUS_QUBITS};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{check_qubits, points, Subspace, SymplecticVector};

/// Generator enumeration is exhaustive, so it is capped.
pub const MAX_GENERATOR_QUBITS: usize = 4;

/// Closed-form sizes of W(2N-1, 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolarSpaceParams {
    pub n_qubits: usize,
    /// `4^N - 1`
    pub point_count: u64,
    /// `(2 + 1)(2^2 + 1)...(2^N + 1)`
    pub generator_count: u128,
    /// `2^N - 1`
    pub generator_size: u64,
    /// `2^N + 1`
    pub spread_size: u64,
    /// `2^(2N-1)`
    pub non_perp_count: u64,
}

pub fn params(n_qubits: usize) -> Result<PolarSpaceParams> {
    check_qubits(n_qubits)?;
    let n = n_qubits as u32;
    let p = PolarSpaceParams {
        n_qubits,
        point_count: 4u64.pow(n) - 1,
        generator_count: (1..=n).map(|i| 2u128.pow(i) + 1).product(),
        generator_size: 2u64.pow(n) - 1,
        spread_size: 2u64.pow(n) + 1,
        non_perp_count: 2u64.pow(2 * n - 1),
    };
    debug_assert_eq!(p.generator_size * p.spread_size, p.point_count);
    Ok(p)
}

/// Every generator (rank-N totally isotropic subspace) exactly once, in canonical order.
///
/// Depth-first over partial RREF bases: each new row has a pivot beyond the previous
/// ones, a pivot column that is clear in every earlier row, and pairs to zero with all
/// earlier rows. Every prefix of an RREF basis is itself RREF, so each subspace is
/// reached along exactly one path and no dedup pass is needed.
pub fn enumerate_generators(n_qubits: usize) -> Result<Vec<Subspace>> {
    check_qubits(n_qubits)?;
    if n_qubits > MAX_GENERATOR_QUBITS {
        return Err(Error::Capacity {
            operation: "generator enumeration",
            n: n_qubits,
            cap: MAX_GENERATOR_QUBITS,
            predicted: params(n_qubits)?.generator_count.to_string(),
        });
    }
    let mut out = Vec::new();
    extend_isotropic(n_qubits, &mut Vec::with_capacity(n_qubits), &mut out);
    Ok(out)
}

fn extend_isotropic(n: usize, rows: &mut Vec<SymplecticVector>, out: &mut Vec<Subspace>) {
    if rows.len() == n {
        out.push(Subspace::from_rref_rows(n, rows.clone()));
        return;
    }
    let width = 2 * n;
    let start = rows.last().and_then(SymplecticVector::pivot).map_or(0, |p| p + 1);
    for pivot in start..width {
        if rows.iter().any(|r| r.coord(pivot)) {
            continue;
        }
        for tail in 0u32..1 << (width - pivot - 1) {
            let v = SymplecticVector::from_bits_unchecked(n, (1 << pivot) | (tail << (pivot + 1)));
            if rows.iter().all(|r| r.is_orthogonal(&v)) {
                rows.push(v);
                extend_isotropic(n, rows, out);
                rows.pop();
            }
        }
    }
}

/// Maximality by dimension: a totally isotropic subspace is maximal iff its rank is N.
pub fn is_maximal_by_rank(s: &Subspace) -> bool {
    s.rank() == s.n_qubits()
}

/// Maximality by search: no point outside `s` is perpendicular to every point of `s`.
pub fn is_maximal_by_scan(s: &Subspace) -> bool {
    points(s.n_qubits())
        .expect("subspace has a valid qubit count")
        .all(|p| s.contains(&p) || !s.is_orthogonal_to(&p))
}

/// Whether a totally isotropic subspace is a generator. Both characterizations are
/// evaluated and must agree.
pub fn is_maximal_isotropic(s: &Subspace) -> Result<bool> {
    if !s.is_totally_isotropic() {
        return Err(Error::NotIsotropic);
    }
    let by_rank = is_maximal_by_rank(s);
    assert_eq!(by_rank, is_maximal_by_scan(s), "maximality characterizations disagree for {s:?}");
    Ok(by_rank)
}

/// Errors unless `s` is a rank-N totally isotropic subspace.
pub fn ensure_generator(s: &Subspace) -> Result<()> {
    if s.rank() == s.n_qubits() && s.is_totally_isotropic() {
        Ok(())
    } else {
        Err(Error::NotGenerator {
            rank: s.rank(),
            expected: s.n_qubits(),
        })
    }
}
