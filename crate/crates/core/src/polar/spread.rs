use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{dual_basis, polynomial_basis, FieldElement};
use crate::gf2::{check_qubits, Subspace, SymplecticVector};

use super::{enumerate_generators, params, ExactCover};

/// Field-based construction works while GF(2^N) has a pinned modulus.
pub const MAX_DESARGUESIAN_QUBITS: usize = crate::field::MAX_DEGREE;
/// First-k spread search.
pub const MAX_SEARCH_QUBITS: usize = 3;
/// Complete spread enumeration.
pub const MAX_SPREAD_CENSUS_QUBITS: usize = 2;

/// A set of `2^N + 1` generators whose point sets partition all `4^N - 1` points.
///
/// Blocks are kept sorted by their smallest point, so equal spreads have equal block
/// lists regardless of construction order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spread {
    n: usize,
    blocks: Vec<Subspace>,
}

impl Spread {
    /// Canonicalizes and validates a candidate spread.
    pub fn new(n_qubits: usize, blocks: Vec<Subspace>) -> Result<Self> {
        check_qubits(n_qubits)?;
        let mut keyed: Vec<(SymplecticVector, Subspace)> = blocks
            .into_iter()
            .map(|b| {
                let first = b.span_points().first().copied();
                first.map(|p| (p, b)).ok_or_else(|| Error::InvalidSpread("empty block".into()))
            })
            .collect::<Result<_>>()?;
        keyed.sort_by_key(|(first, _)| *first);
        let spread = Self {
            n: n_qubits,
            blocks: keyed.into_iter().map(|(_, b)| b).collect(),
        };
        spread.validate()?;
        Ok(spread)
    }

    /// Re-checks every spread invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let p = params(n)?;
        let fail = |msg: String| Err(Error::InvalidSpread(msg));
        if self.blocks.len() as u64 != p.spread_size {
            return fail(format!("{} blocks, expected {}", self.blocks.len(), p.spread_size));
        }
        let mut seen = vec![false; p.point_count as usize];
        for (i, block) in self.blocks.iter().enumerate() {
            if block.n_qubits() != n {
                return fail(format!("block {i} lives in {} qubits", block.n_qubits()));
            }
            if block.rank() != n || !block.is_totally_isotropic() {
                return fail(format!("block {i} is not a generator"));
            }
            let pts = block.span_points();
            if pts.len() as u64 != p.generator_size {
                return fail(format!("block {i} has {} points", pts.len()));
            }
            for pt in &pts {
                let idx = pt.point_index()?;
                if std::mem::replace(&mut seen[idx], true) {
                    return fail(format!("point {pt} is covered twice"));
                }
            }
            // Closure under addition, checked on the point set itself.
            let set: BTreeSet<_> = pts.iter().copied().collect();
            for (a, u) in pts.iter().enumerate() {
                for w in &pts[a + 1..] {
                    if !set.contains(&(*u ^ *w)) {
                        return fail(format!("block {i} is not closed under addition"));
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return fail("some point is not covered".into());
        }
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Subspace] {
        &self.blocks
    }
}

/// The regular spread of PG(2N-1, 2) built from GF(2^N).
///
/// On `GF(2^N)^2` the form `B((a, b), (c, d)) = Tr(ad) + Tr(bc)` is alternating, and the
/// `2^N + 1` subspaces `{(0, b)}` and `{(a, λa)}` are totally isotropic and partition the
/// nonzero vectors. Writing the first component in the polynomial basis and the second
/// in its trace-dual basis turns `B` into the standard form exactly, so the blocks are
/// generators of W(2N-1, 2).
pub fn desarguesian_spread(n_qubits: usize) -> Result<Spread> {
    check_qubits(n_qubits)?;
    if n_qubits > MAX_DESARGUESIAN_QUBITS {
        return Err(Error::Capacity {
            operation: "desarguesian spread",
            n: n_qubits,
            cap: MAX_DESARGUESIAN_QUBITS,
            predicted: params(n_qubits)?.spread_size.to_string(),
        });
    }
    let n = n_qubits;
    let bases = dual_basis(&polynomial_basis(n)?)?;
    let vector = |a: FieldElement, b: FieldElement| {
        SymplecticVector::new(n, bases.primal_coordinates(a), bases.dual_coordinates(b))
    };
    let zero = FieldElement::zero(n)?;

    let mut blocks = Vec::with_capacity((1 << n) + 1);
    let at_infinity = bases
        .dual()
        .iter()
        .map(|&d| vector(zero, d))
        .collect::<Result<Vec<_>>>()?;
    blocks.push(Subspace::rref(n, at_infinity)?);
    for slope in FieldElement::elements(n)? {
        let rows = bases
            .primal()
            .iter()
            .map(|&a| vector(a, slope * a))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(Subspace::rref(n, rows)?);
    }
    Spread::new(n, blocks)
}

/// Spreads found by exact cover of the points by the generators.
///
/// With `limit` the first `limit` covers in search order are returned; without it the
/// search is complete (only allowed for N <= 2). Results are deduplicated as unordered
/// block sets and returned in canonical order.
pub fn enumerate_spreads(n_qubits: usize, limit: Option<usize>) -> Result<Vec<Spread>> {
    check_qubits(n_qubits)?;
    if limit == Some(0) {
        return Err(Error::ZeroLimit);
    }
    let cap = if limit.is_some() { MAX_SEARCH_QUBITS } else { MAX_SPREAD_CENSUS_QUBITS };
    if n_qubits > cap {
        return Err(Error::Capacity {
            operation: if limit.is_some() { "spread search" } else { "complete spread enumeration" },
            n: n_qubits,
            cap,
            predicted: format!("spreads of {} blocks", params(n_qubits)?.spread_size),
        });
    }
    let generators = enumerate_generators(n_qubits)?;
    let rows = generators
        .iter()
        .map(|g| {
            g.span_points()
                .iter()
                .map(|p| p.point_index().map(|i| 1u64 << i))
                .sum::<Result<u64>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let universe = params(n_qubits)?.point_count as usize;
    let search = ExactCover::new(universe, rows);
    let covers = match limit {
        Some(_) => search.solve(limit),
        None => search.solve_parallel(None),
    };
    let spreads: BTreeSet<Spread> = covers
        .into_iter()
        .map(|cover| Spread::new(n_qubits, cover.into_iter().map(|r| generators[r].clone()).collect()))
        .collect::<Result<_>>()?;
    Ok(spreads.into_iter().collect())
}
