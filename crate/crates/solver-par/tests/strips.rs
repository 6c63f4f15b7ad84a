//! The strip evaluators' reported maxima must agree with brute force.
//!
//! Walk validation inside the unit tests already proves the evaluators never
//! overreport (every reported length is realized by a concrete path). These
//! tests close the other direction: on whole two- and three-lane grids the
//! reported maximum equals the true longest path, for every ordered endpoint
//! pair.

use oracle::SearchBudget;
use solver_par::{strip2, strip3};

#[test]
fn duo_max_matches_brute_force() {
    let budget = SearchBudget::default();
    for k in 2..=10 {
        for au in 1..=k {
            for av in 1..=2 {
                for bu in 1..=k {
                    for bv in 1..=2 {
                        let (a, b) = ((au, av), (bu, bv));
                        if a == b {
                            continue;
                        }
                        let best = oracle::brute_longest(k, 2, a, b, &budget)
                            .expect("within budget")
                            .len() as i64;
                        let got = strip2::duo_max(k, a, b);
                        assert_eq!(got, best, "2-lane max mismatch k={k} a={a:?} b={b:?}");
                    }
                }
            }
        }
    }
    println!("two-lane maxima match brute force for k <= 10");
}

#[test]
fn trio_max_matches_brute_force() {
    let budget = SearchBudget::default();
    for k in 1..=8 {
        for au in 1..=k {
            for av in 1..=3 {
                for bu in 1..=k {
                    for bv in 1..=3 {
                        let (a, b) = ((au, av), (bu, bv));
                        if a == b {
                            continue;
                        }
                        let best = oracle::brute_longest(k, 3, a, b, &budget)
                            .expect("within budget")
                            .len() as i64;
                        let got = strip3::trio_max(k, a, b);
                        assert_eq!(got, best, "3-lane max mismatch k={k} a={a:?} b={b:?}");
                    }
                }
            }
        }
    }
    println!("three-lane maxima match brute force for k <= 8");
}

#[test]
fn trio_max_matches_solver_on_wider_strips() {
    for k in 9..=20 {
        let rect = grid_core::Rect::new(k, 3);
        for au in 1..=k {
            for av in 1..=3 {
                for bu in 1..=k {
                    for bv in 1..=3 {
                        let (a, b) = ((au, av), (bu, bv));
                        if a == b {
                            continue;
                        }
                        let s = grid_core::v(au, av);
                        let t = grid_core::v(bu, bv);
                        let best = solver_seq::longest_path(rect, s, t).expect("solvable").len() as i64;
                        let got = strip3::trio_max(k, a, b);
                        assert_eq!(got, best, "3-lane max mismatch k={k} a={a:?} b={b:?}");
                        let spec = strip3::TrioSpec { k, a, b, len: got };
                        let mut seen = vec![false; (k as usize + 1) * 4];
                        let mut cur = a;
                        let mut count = 1i64;
                        seen[(cur.0 as usize) * 4 + cur.1 as usize] = true;
                        while let Some(n) = strip3::trio_succ(&spec, cur) {
                            assert_eq!((n.0 - cur.0).abs() + (n.1 - cur.1).abs(), 1);
                            assert!(!seen[(n.0 as usize) * 4 + n.1 as usize]);
                            seen[(n.0 as usize) * 4 + n.1 as usize] = true;
                            count += 1;
                            cur = n;
                        }
                        assert_eq!(cur, b);
                        assert_eq!(count, got);
                    }
                }
            }
        }
    }
    println!("three-lane maxima match the sequential solver for 9 <= k <= 20");
}
