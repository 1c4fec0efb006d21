//! Randomized property suites. Every proptest here runs from the same fixed seed so
//! failures reproduce exactly.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use wpolar::field::{dual_basis, FieldElement, MAX_DEGREE};
use wpolar::gf2::{points, rref, sp_form, Subspace, SymplecticVector};
use wpolar::pauli::{operators, pauli_to_vector, vector_to_pauli, PauliOperator};

/// Seed shared by all property suites (also quoted in the README).
pub const SEED: u64 = 0x5750_4f4c_4152;

fn config() -> Config {
    Config {
        cases: 512,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn vector_in(n: usize) -> impl Strategy<Value = SymplecticVector> {
    (0u32..1 << (2 * n)).prop_map(move |bits| SymplecticVector::from_bits(n, bits).unwrap())
}

fn vector_triple() -> impl Strategy<Value = (SymplecticVector, SymplecticVector, SymplecticVector)> {
    (1usize..=5).prop_flat_map(|n| (vector_in(n), vector_in(n), vector_in(n)))
}

fn vector_list() -> impl Strategy<Value = (usize, Vec<SymplecticVector>)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(vector_in(n), 0..7)))
}

fn element_triple() -> impl Strategy<Value = (FieldElement, FieldElement, FieldElement)> {
    (1usize..=MAX_DEGREE).prop_flat_map(|n| {
        let el = move || (0u32..1 << n).prop_map(move |c| FieldElement::new(n, c).unwrap());
        (el(), el(), el())
    })
}

fn pauli_word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), 1..=8)
        .prop_map(|cs| cs.into_iter().collect())
}

#[test]
fn form_is_alternating_exhaustively_up_to_three_qubits() {
    for n in 1..=3 {
        for bits in 0u32..1 << (2 * n) {
            let u = SymplecticVector::from_bits(n, bits).unwrap();
            assert_eq!(sp_form(&u, &u).unwrap(), 0, "{u}");
        }
    }
}

#[test]
fn form_is_non_degenerate_up_to_three_qubits() {
    for n in 1..=3 {
        for u in points(n).unwrap() {
            assert!(points(n).unwrap().any(|v| sp_form(&u, &v).unwrap() == 1), "{u} is radical");
        }
    }
}

#[test]
fn form_is_symmetric_up_to_three_qubits() {
    for n in 1..=3 {
        for u in points(n).unwrap() {
            for v in points(n).unwrap() {
                assert_eq!(sp_form(&u, &v).unwrap(), sp_form(&v, &u).unwrap());
            }
        }
    }
}

#[test]
fn perpendicular_means_joined_by_an_isotropic_line() {
    for n in 1..=3 {
        let pts: Vec<_> = points(n).unwrap().collect();
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                let line = wpolar::gf2::line_through(p, q).unwrap();
                assert_eq!(line.span_points().len(), 3);
                assert_eq!(line.is_totally_isotropic(), p.is_orthogonal(q), "{p} {q}");
            }
        }
    }
}

#[test]
fn pauli_vector_bijection_up_to_four_qubits() {
    for n in 1..=4 {
        let mut hit = vec![false; 1 << (2 * n)];
        for op in operators(n).unwrap() {
            let v = pauli_to_vector(&op).unwrap();
            assert!(!v.is_zero());
            assert!(!std::mem::replace(&mut hit[v.bits() as usize], true), "{op} collides");
            assert_eq!(vector_to_pauli(&v).unwrap(), op);
            let reparsed: PauliOperator = op.to_string().parse().unwrap();
            assert_eq!(reparsed, op);
        }
        assert!(hit[1..].iter().all(|&h| h));
    }
}

#[test]
fn field_inverses_exist_up_to_degree_four() {
    for n in 1..=4 {
        for a in FieldElement::elements(n).unwrap().filter(|a| !a.is_zero()) {
            let inv = a.inverse().unwrap();
            assert_eq!((a * inv).coeffs(), 1);
            // The inverse is unique.
            let hits = FieldElement::elements(n).unwrap().filter(|b| (a * *b).coeffs() == 1).count();
            assert_eq!(hits, 1);
        }
    }
}

#[test]
fn trace_is_surjective_up_to_degree_five() {
    for n in 1..=5 {
        assert!(FieldElement::elements(n).unwrap().any(|a| a.trace() == 1));
        // Half the elements have trace one.
        let ones = FieldElement::elements(n).unwrap().filter(|a| a.trace() == 1).count();
        assert_eq!(ones, 1 << (n - 1));
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn form_alternating_random((u, _, _) in vector_triple()) {
        prop_assert_eq!(sp_form(&u, &u).unwrap(), 0);
    }

    #[test]
    fn form_symmetric_random((u, v, _) in vector_triple()) {
        prop_assert_eq!(sp_form(&u, &v).unwrap(), sp_form(&v, &u).unwrap());
    }

    #[test]
    fn form_bilinear((u, v, w) in vector_triple()) {
        prop_assert_eq!(sp_form(&(u ^ w), &v).unwrap(), sp_form(&u, &v).unwrap() ^ sp_form(&w, &v).unwrap());
        prop_assert_eq!(sp_form(&v, &(u ^ w)).unwrap(), sp_form(&v, &u).unwrap() ^ sp_form(&v, &w).unwrap());
    }

    #[test]
    fn rref_idempotent((n, vs) in vector_list()) {
        let s = rref(n, &vs).unwrap();
        prop_assert_eq!(rref(n, s.basis()).unwrap(), s.clone());
        prop_assert!(s.rank() <= vs.len().min(2 * n));
    }

    #[test]
    fn rref_ignores_order((n, vs) in vector_list(), seed in any::<u64>()) {
        let mut shuffled = vs.clone();
        // Deterministic Fisher-Yates driven by the drawn seed.
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let a = rref(n, &vs).unwrap();
        let b = rref(n, &shuffled).unwrap();
        prop_assert_eq!(a.span_points(), b.span_points());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn span_size_is_two_to_rank_minus_one((n, vs) in vector_list()) {
        let s = rref(n, &vs).unwrap();
        let pts = s.span_points();
        prop_assert_eq!(pts.len(), (1usize << s.rank()) - 1);
        for v in &vs {
            prop_assert!(v.is_zero() || pts.contains(v));
        }
    }

    #[test]
    fn isotropy_basis_check_matches_all_pairs((n, vs) in vector_list()) {
        let s: Subspace = rref(n, &vs).unwrap();
        let pts = s.span_points();
        let all_pairs = pts.iter().all(|u| pts.iter().all(|v| u.is_orthogonal(v)));
        prop_assert_eq!(s.is_totally_isotropic(), all_pairs);
    }

    #[test]
    fn field_ring_axioms((a, b, c) in element_triple()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
    }

    #[test]
    fn frobenius_is_additive((a, b, _) in element_triple()) {
        prop_assert_eq!((a + b).square(), a.square() + b.square());
        prop_assert_eq!((a + b).trace(), a.trace() ^ b.trace());
    }

    #[test]
    fn dual_basis_identities(n in 1usize..=MAX_DEGREE, raw in prop::collection::vec(any::<u32>(), MAX_DEGREE)) {
        let primal: Vec<FieldElement> = raw[..n]
            .iter()
            .map(|r| FieldElement::new(n, r & ((1 << n) - 1)).unwrap())
            .collect();
        let independent = rref(n, &primal
            .iter()
            .map(|p| SymplecticVector::new(n, p.coeffs(), 0).unwrap())
            .collect::<Vec<_>>())
            .unwrap()
            .rank() == n;
        match dual_basis(&primal) {
            Ok(pair) => {
                prop_assert!(independent);
                for (i, &p) in pair.primal().iter().enumerate() {
                    for (j, &d) in pair.dual().iter().enumerate() {
                        prop_assert_eq!((p * d).trace(), u8::from(i == j));
                    }
                }
            }
            Err(_) => prop_assert!(!independent),
        }
    }

    #[test]
    fn pauli_words_round_trip(word in pauli_word()) {
        let op: PauliOperator = word.parse().unwrap();
        prop_assert_eq!(op.to_string(), word.clone());
        if !op.is_identity() {
            let v = pauli_to_vector(&op).unwrap();
            prop_assert_eq!(vector_to_pauli(&v).unwrap(), op);
        }
    }
}
