use cag_core::corpus::{comb, nontrivial_corpus, random_corpus};
use cag_core::exact::{int, ratio};
use cag_core::oracle::{dense_sample, oracle_optimum_bounds, reach, Oracle, OracleConfig};
use cag_core::polygon::{cyclic_offset, BoundaryPoint, Chain};
use cag_core::solver::{solve, SolverConfig, SolverState};
use cag_core::visibility::{core_of_range, single_guard_check, EdgeRange};

fn sequential() -> SolverConfig {
    SolverConfig {
        parallelism: 1,
        paranoid: false,
    }
}

#[test]
fn greedy_frontiers_never_cross() {
    for p in nontrivial_corpus(21, 12, 12) {
        let n = p.n();
        let state = SolverState::build(&p, sequential());
        let sample = dense_sample(n, 3);
        for u1 in &sample {
            let v1 = reach(&state.max_guard_query(u1).unwrap().chain, u1, n);
            for u2 in &sample {
                let d = cyclic_offset(u1, u2, n);
                if d > v1 || v1 == int(n as i64) {
                    continue;
                }
                let v2 = reach(&state.max_guard_query(u2).unwrap().chain, u2, n);
                assert!(
                    &d + &v2 >= v1,
                    "frontier from {u2} falls behind the one from {u1}"
                );
            }
        }
    }
}

#[test]
fn paranoid_sweep_matches_binary_search() {
    for p in nontrivial_corpus(22, 15, 12) {
        let n = p.n();
        let fast = SolverState::build(&p, sequential());
        let slow = SolverState::build(
            &p,
            SolverConfig {
                parallelism: 1,
                paranoid: true,
            },
        );
        let mut us = fast.starts.clone();
        us.extend(dense_sample(n, 2));
        for u in &us {
            let a = reach(&fast.max_guard_query(u).unwrap().chain, u, n);
            let b = reach(&slow.max_guard_query(u).unwrap().chain, u, n);
            assert_eq!(a, b, "from {u}");
        }
    }
}

#[test]
fn grid_mode_never_beats_the_query_on_small_polygons() {
    let config = OracleConfig {
        grid: true,
        grid_steps: 10,
        ..OracleConfig::default()
    };
    for p in nontrivial_corpus(23, 10, 8) {
        let n = p.n();
        let state = SolverState::build(&p, sequential());
        let oracle = Oracle::new(&p, config.clone());
        for u in &state.starts {
            let fast = reach(&state.max_guard_query(u).unwrap().chain, u, n);
            let found = oracle.max_guard(u).map(|g| reach(&g.chain, u, n)).unwrap();
            assert_eq!(fast, found, "from {u}");
        }
        assert!(
            oracle.differences().is_empty(),
            "{:?}",
            oracle.differences()
        );
    }
}

#[test]
fn gate_agrees_with_the_full_core() {
    for p in random_corpus(24, 60, 10) {
        let k1 = solve(&p, &sequential()).unwrap().solution.len() == 1;
        let gate = single_guard_check(&p).is_some();
        let core = !core_of_range(&p, EdgeRange::full(p.n())).is_empty();
        assert_eq!(k1, gate);
        assert_eq!(gate, core);
    }
}

#[test]
fn best_start_reaches_a_certified_optimum() {
    let mut certified = 0;
    for p in nontrivial_corpus(25, 15, 10)
        .into_iter()
        .chain([comb(2), comb(3)])
    {
        let bounds = oracle_optimum_bounds(&p, 5);
        let k = solve(&p, &sequential()).unwrap().solution.len();
        assert!(bounds.lower <= k && k <= bounds.upper);
        if bounds.lower == bounds.upper {
            certified += 1;
            assert_eq!(k, bounds.upper);
        }
    }
    assert!(certified >= 2);
}

#[test]
fn truncated_last_chain_ends_at_the_start() {
    let p = comb(3);
    let state = SolverState::build(&p, sequential());
    let u0 = BoundaryPoint::new(5, ratio(2, 7), p.n());
    let sol = state.greedy_from(&u0).unwrap();
    let Chain::Arc { end, .. } = &sol.guards.last().unwrap().chain else {
        panic!("finite chain expected")
    };
    assert_eq!(end, &u0);
}
