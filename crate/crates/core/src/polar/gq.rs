//! Incidence checks for W(3, 2), the generalized quadrangle of order two.

use std::collections::BTreeSet;

use crate::gf2::{line_through, points, SymplecticVector};
use crate::report::{uniform, Check, VerificationReport};

/// Rebuilds the N = 2 geometry from point pairs and checks the GQ(2, 2) parameters.
///
/// Lines are collected directly as spans of perpendicular point pairs rather than
/// taken from generator enumeration.
pub fn gq22_structure_check() -> VerificationReport {
    let pts: Vec<SymplecticVector> = points(2).expect("N = 2 is supported").collect();
    let mut lines = BTreeSet::new();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if p.is_orthogonal(q) {
                lines.insert(line_through(p, q).expect("distinct points span a line"));
            }
        }
    }
    let line_points: Vec<Vec<SymplecticVector>> = lines.iter().map(|l| l.span_points()).collect();
    debug_assert!(lines.iter().all(|l| l.is_totally_isotropic()));

    let lines_per_point = pts
        .iter()
        .map(|p| line_points.iter().filter(|l| l.contains(p)).count() as u64);
    let partners = pts.iter().map(|p| {
        line_points
            .iter()
            .filter(|l| l.contains(p))
            .flatten()
            .filter(|q| *q != p)
            .collect::<BTreeSet<_>>()
            .len() as u64
    });

    // For P off a line L, exactly one point of L lies on a common line with P.
    let mut violations = 0u64;
    for p in &pts {
        for l in line_points.iter().filter(|l| !l.contains(p)) {
            let joined = l
                .iter()
                .filter(|q| line_points.iter().any(|m| m.contains(p) && m.contains(q)))
                .count();
            if joined != 1 {
                violations += 1;
            }
        }
    }

    VerificationReport::new(
        2,
        vec![
            Check::count("gq_points", Some("4^N - 1"), 15, pts.len() as u64),
            Check::count("gq_lines", Some("(2+1)(2^2+1)"), 15, lines.len() as u64),
            Check::count("gq_points_per_line", Some("2^N - 1"), 3, uniform(line_points.iter().map(|l| l.len() as u64), 3)),
            Check::count("gq_lines_per_point", None, 3, uniform(lines_per_point, 3)),
            Check::count("gq_collinear_partners", Some("4^N - 2 - 2^(2N-1)"), 6, uniform(partners, 6)),
            Check::count("gq_axiom_violations", None, 0, violations),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gq22_passes() {
        let report = gq22_structure_check();
        assert!(report.overall, "{report}");
        assert_eq!(report.checks.len(), 6);
    }
}
