use oracle::{brute_is_hamiltonian, brute_longest, validate_cycle, validate_path, OracleError, SearchBudget};

fn longest_len(m: i32, n: i32, s: (i32, i32), t: (i32, i32)) -> usize {
    let budget = SearchBudget::default();
    let path = brute_longest(m, n, s, t, &budget).unwrap();
    assert!(validate_path(m, n, &path, s, t), "oracle returned an invalid path");
    path.len()
}

#[test]
fn longest_path_known_values() {
    assert_eq!(longest_len(3, 3, (1, 1), (3, 3)), 9);
    assert_eq!(longest_len(2, 1, (1, 1), (2, 1)), 2);
    assert_eq!(longest_len(4, 2, (2, 1), (2, 2)), 6);
    assert_eq!(longest_len(5, 1, (2, 1), (4, 1)), 3);
    assert_eq!(longest_len(3, 3, (1, 1), (2, 1)), 8);
    assert_eq!(longest_len(3, 3, (2, 1), (2, 3)), 7);
}

#[test]
fn hamiltonicity_known_values() {
    let budget = SearchBudget::default();
    assert!(!brute_is_hamiltonian(4, 3, (1, 2), (2, 2), &budget).unwrap());
    assert!(brute_is_hamiltonian(5, 1, (1, 1), (5, 1), &budget).unwrap());
    assert!(brute_is_hamiltonian(5, 4, (1, 1), (1, 2), &budget).unwrap());
    assert!(brute_is_hamiltonian(5, 4, (1, 1), (2, 1), &budget).unwrap());
}

#[test]
fn path_validator() {
    assert!(validate_path(5, 1, &[(2, 1), (3, 1), (4, 1)], (2, 1), (4, 1)));
    // Diagonal step.
    assert!(!validate_path(3, 3, &[(1, 1), (2, 2)], (1, 1), (2, 2)));
    // Revisit.
    assert!(!validate_path(
        3,
        3,
        &[(1, 1), (2, 1), (1, 1)],
        (1, 1),
        (1, 1)
    ));
    // Wrong endpoint.
    assert!(!validate_path(3, 3, &[(1, 1), (2, 1)], (1, 1), (3, 1)));
    // Out of bounds.
    assert!(!validate_path(2, 2, &[(1, 1), (1, 2), (1, 3)], (1, 1), (1, 3)));
}

#[test]
fn cycle_validator() {
    assert!(validate_cycle(2, 2, &[(1, 1), (2, 1), (2, 2), (1, 2)]));
    // Misses a vertex.
    assert!(!validate_cycle(3, 2, &[(1, 1), (2, 1), (2, 2), (1, 2)]));
    // Not closed.
    assert!(!validate_cycle(2, 2, &[(1, 1), (2, 1), (2, 2), (2, 3)]));
    let boustrophedon = vec![(1, 1), (2, 1), (3, 1), (3, 2), (2, 2), (1, 2)];
    assert!(validate_cycle(3, 2, &boustrophedon));
}

#[test]
fn longest_is_symmetric_in_endpoints() {
    for (m, n) in [(4, 3), (5, 2), (3, 3)] {
        for pair in [((1, 1), (m, n)), ((2, 1), (m - 1, n)), ((1, 2), (2, 2))] {
            let (s, t) = pair;
            assert_eq!(
                longest_len(m, n, s, t),
                longest_len(m, n, t, s),
                "asymmetric oracle on R({m},{n}) {s:?}<->{t:?}"
            );
        }
    }
}

#[test]
fn hamiltonian_iff_longest_covers_everything() {
    let budget = SearchBudget::default();
    for (m, n) in [(3, 3), (4, 3), (4, 2)] {
        for sy in 1..=n {
            for sx in 1..=m {
                for ty in 1..=n {
                    for tx in 1..=m {
                        if (sx, sy) == (tx, ty) {
                            continue;
                        }
                        let ham = brute_is_hamiltonian(m, n, (sx, sy), (tx, ty), &budget).unwrap();
                        let len = longest_len(m, n, (sx, sy), (tx, ty));
                        assert_eq!(ham, len == (m * n) as usize);
                    }
                }
            }
        }
    }
}

#[test]
fn budget_is_enforced() {
    let budget = SearchBudget::default();
    let err = brute_longest(6, 5, (1, 1), (6, 5), &budget).unwrap_err();
    assert!(matches!(err, OracleError::BudgetExceeded { size: 30, .. }));

    let tiny = SearchBudget {
        max_vertices: 26,
        max_expansions: Some(3),
    };
    // A truncated search must refuse to answer rather than return a short path.
    assert!(brute_longest(5, 5, (1, 1), (5, 5), &tiny).is_err());
}

#[test]
fn monotone_under_rectangle_extension_spot_checks() {
    // Growing the rectangle while keeping the endpoints can only help.
    for ((m1, n1), (m2, n2), s, t) in [
        ((3, 2), (4, 2), (1, 1), (2, 2)),
        ((3, 3), (4, 3), (1, 1), (3, 3)),
        ((4, 2), (4, 3), (2, 1), (2, 2)),
    ] {
        assert!(longest_len(m1, n1, s, t) <= longest_len(m2, n2, s, t));
    }
}
