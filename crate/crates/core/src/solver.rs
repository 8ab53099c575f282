//! Maximal-guard queries, the greedy cover loop and the outer minimum over
//! the start set.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_traits::Zero;
use thiserror::Error;

use crate::candidates::{build_start_set, maximal_chain_through, CandidateGuardSet, ChainIndex};
use crate::exact::{int, section_of_pair, DirectedLine, Scalar};
use crate::parallel::ordered_map;
use crate::paths::{is_left_turning, PathStructure};
use crate::polygon::{
    cyclic_offset, BoundaryPoint, Chain, ContiguousGuard, PolygonError, SimplePolygon,
};
use crate::visibility::{single_guard_check, DyadicCoreTable, EdgeRange};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("no guard covers a positive-length chain from {at}")]
    NoProgress { at: BoundaryPoint },
    #[error("greedy loop from {start} exceeded {iterations} iterations")]
    LoopGuard {
        start: BoundaryPoint,
        iterations: usize,
    },
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SolverConfig {
    /// Worker threads for the start-set loop; `1` is sequential, `0` uses every core.
    pub parallelism: usize,
    /// Probe every edge instead of binary searching.
    pub paranoid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardSolution {
    pub guards: Vec<ContiguousGuard>,
    pub start: BoundaryPoint,
    pub covered: bool,
}

impl GuardSolution {
    pub fn len(&self) -> usize {
        self.guards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guards.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Probe {
    NotReachable,
    Candidate(Box<ContiguousGuard>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureSizes {
    pub arrangement: usize,
    pub arrangement_inside: usize,
    pub guard_set: usize,
    pub chain_index: usize,
    pub start_set: usize,
}

#[derive(Clone, Debug, Default)]
pub struct PhaseTimings {
    pub gate: Duration,
    pub structures: Duration,
    pub greedy: Duration,
}

/// Answers of `max_guard_query` keyed by start; greedy runs from different
/// starts often meet at the same chain ends.
#[derive(Debug, Default)]
struct QueryMemo(Mutex<HashMap<BoundaryPoint, ContiguousGuard>>);

impl Clone for QueryMemo {
    fn clone(&self) -> Self {
        QueryMemo::default()
    }
}

/// Everything the queries need, built once per polygon.
#[derive(Clone, Debug)]
pub struct SolverState {
    pub polygon: SimplePolygon,
    pub table: DyadicCoreTable,
    pub paths: PathStructure,
    pub candidates: CandidateGuardSet,
    pub index: ChainIndex,
    pub starts: Vec<BoundaryPoint>,
    pub config: SolverConfig,
    memo: QueryMemo,
}

impl SolverState {
    pub fn build(p: &SimplePolygon, config: SolverConfig) -> Self {
        let table = DyadicCoreTable::build(p);
        let paths = PathStructure::build(p);
        let candidates = CandidateGuardSet::build(p, &paths, config.parallelism);
        let guards: Vec<ContiguousGuard> =
            candidates.guards.iter().map(|c| c.guard.clone()).collect();
        let index = ChainIndex::build(p.n(), &guards);
        let starts = build_start_set(p, &guards);
        SolverState {
            polygon: p.clone(),
            table,
            paths,
            candidates,
            index,
            starts,
            config,
            memo: QueryMemo::default(),
        }
    }

    pub fn sizes(&self) -> StructureSizes {
        StructureSizes {
            arrangement: self.candidates.arrangement_size,
            arrangement_inside: self.candidates.inside_count,
            guard_set: self.candidates.len(),
            chain_index: self.index.len(),
            start_set: self.starts.len(),
        }
    }

    fn n(&self) -> usize {
        self.polygon.n()
    }

    /// Slot `k` probes edge `e_{u.edge + k}`, whose far end is this vertex.
    fn far_vertex(&self, u: &BoundaryPoint, k: usize) -> BoundaryPoint {
        BoundaryPoint::vertex((u.edge + k + 1) % self.n())
    }

    /// Bad-guard candidates for chains from `u` ending on the edge of slot `k`.
    pub fn bad_guard_probe(&self, u: &BoundaryPoint, k: usize) -> Probe {
        let p = &self.polygon;
        let n = self.n();
        let far = self.far_vertex(u, k);
        let up = p.locate(u);
        let fp = p.locate(&far);
        if up == fp {
            return Probe::NotReachable;
        }
        let Ok(path) = self.paths.shortest_path(&up, &fp) else {
            return Probe::NotReachable;
        };
        if !is_left_turning(&path) {
            return Probe::NotReachable;
        }
        let ell = DirectedLine::through(&path.points[1], &up);
        let range = EdgeRange::new(u.edge, k + 1, n);
        let (a, b) = self.table.range_core_query(range);
        let section = section_of_pair(a, b, &ell);
        let mut best: Option<(Scalar, ContiguousGuard)> = None;
        for g in section.finite_points() {
            if !p.contains_closed(&g) {
                continue;
            }
            let Some(chain) = maximal_chain_through(p, &self.paths, &g, u) else {
                continue;
            };
            let (off, end) = match &chain {
                Chain::Full => (int(n as i64), None),
                Chain::Arc { end, .. } => (cyclic_offset(u, end, n), Some(end.clone())),
            };
            if best.as_ref().is_none_or(|(b, _)| off > *b) {
                let chain = match end {
                    None => Chain::Full,
                    Some(end) => Chain::arc(u.clone(), end),
                };
                best = Some((off, ContiguousGuard { g, chain }));
            }
        }
        match best {
            Some((off, guard)) if !off.is_zero() => Probe::Candidate(Box::new(guard)),
            _ => Probe::NotReachable,
        }
    }

    /// Guard `(g, [u, v])` with `v` as far from `u` as any contiguous guard allows.
    pub fn max_guard_query(&self, u: &BoundaryPoint) -> Result<ContiguousGuard, SolveError> {
        if let Some(hit) = self.memo.0.lock().expect("memo lock").get(u) {
            return Ok(hit.clone());
        }
        let guard = self.compute_max_guard(u)?;
        self.memo
            .0
            .lock()
            .expect("memo lock")
            .insert(u.clone(), guard.clone());
        Ok(guard)
    }

    fn compute_max_guard(&self, u: &BoundaryPoint) -> Result<ContiguousGuard, SolveError> {
        let n = self.n();
        let mut best: Option<(Scalar, ContiguousGuard)> = None;
        let consider = |guard: ContiguousGuard, best: &mut Option<(Scalar, ContiguousGuard)>| {
            let off = match &guard.chain {
                Chain::Full => int(n as i64),
                Chain::Arc { end, .. } => cyclic_offset(u, end, n),
            };
            if !off.is_zero() && best.as_ref().is_none_or(|(b, _)| off > *b) {
                *best = Some((off, guard));
            }
        };

        if let Some((guard, end)) = self.index.query(u) {
            if guard.chain.is_full() {
                return Ok(guard);
            }
            consider(
                ContiguousGuard {
                    g: guard.g,
                    chain: Chain::arc(u.clone(), end),
                },
                &mut best,
            );
        }

        let last_slot = if self.far_vertex(u, n - 1) == *u {
            n - 2
        } else {
            n - 1
        };
        let probe = |k: usize, best: &mut Option<(Scalar, ContiguousGuard)>| {
            if let Probe::Candidate(guard) = self.bad_guard_probe(u, k) {
                consider(*guard, best);
            }
        };
        if self.config.paranoid {
            for k in 0..=last_slot {
                probe(k, &mut best);
            }
        } else {
            // reach(k): the best end found so far passes the far end of slot k
            let reaches = |k: usize, best: &Option<(Scalar, ContiguousGuard)>| {
                let far_off = cyclic_offset(u, &self.far_vertex(u, k), n);
                best.as_ref().is_some_and(|(b, _)| *b >= far_off)
            };
            let (mut lo, mut hi) = (0usize, last_slot);
            probe(hi, &mut best);
            if !reaches(hi, &best) {
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    probe(mid, &mut best);
                    if reaches(mid, &best) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                probe(lo, &mut best);
                probe(hi, &mut best);
            }
        }
        best.map(|(_, g)| g)
            .ok_or_else(|| SolveError::NoProgress { at: u.clone() })
    }

    /// Greedy cover of the boundary starting at `u0`.
    pub fn greedy_from(&self, u0: &BoundaryPoint) -> Result<GuardSolution, SolveError> {
        let n = self.n();
        let nn = int(n as i64);
        let limit = 2 * n * n + 2;
        let mut guards = Vec::new();
        let mut cur = u0.clone();
        let mut covered = Scalar::zero();
        for _ in 0..limit {
            let guard = self.max_guard_query(&cur)?;
            let end = match &guard.chain {
                Chain::Full => {
                    guards.push(guard);
                    return Ok(GuardSolution {
                        guards,
                        start: u0.clone(),
                        covered: true,
                    });
                }
                Chain::Arc { end, .. } => end.clone(),
            };
            let step = cyclic_offset(&cur, &end, n);
            if step.is_zero() {
                return Err(SolveError::NoProgress { at: cur });
            }
            covered += step;
            if covered >= nn {
                guards.push(ContiguousGuard {
                    g: guard.g,
                    chain: Chain::arc(cur, u0.clone()),
                });
                return Ok(GuardSolution {
                    guards,
                    start: u0.clone(),
                    covered: true,
                });
            }
            guards.push(guard);
            cur = end;
        }
        Err(SolveError::LoopGuard {
            start: u0.clone(),
            iterations: limit,
        })
    }

    /// Minimum greedy solution over the start set, ties broken by start order.
    pub fn best_over_starts(&self) -> Result<GuardSolution, SolveError> {
        let runs = ordered_map(&self.starts, self.config.parallelism, |u| {
            self.greedy_from(u)
        });
        let mut best: Option<GuardSolution> = None;
        for run in runs {
            let sol = run?;
            if best.as_ref().is_none_or(|b| sol.len() < b.len()) {
                best = Some(sol);
            }
        }
        Ok(best.expect("start set always holds the polygon vertices"))
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solution: GuardSolution,
    /// `true` when the kernel was nonempty and no structures were built.
    pub gated: bool,
    pub sizes: Option<StructureSizes>,
    pub timings: PhaseTimings,
}

pub fn solve(p: &SimplePolygon, config: &SolverConfig) -> Result<SolveOutcome, SolveError> {
    let mut timings = PhaseTimings::default();
    let clock = Instant::now();
    let single = single_guard_check(p);
    timings.gate = clock.elapsed();
    if let Some(guard) = single {
        return Ok(SolveOutcome {
            solution: GuardSolution {
                guards: vec![guard],
                start: BoundaryPoint::vertex(0),
                covered: true,
            },
            gated: true,
            sizes: None,
            timings,
        });
    }
    let clock = Instant::now();
    let state = SolverState::build(p, config.clone());
    timings.structures = clock.elapsed();
    let clock = Instant::now();
    let solution = state.best_over_starts()?;
    timings.greedy = clock.elapsed();
    Ok(SolveOutcome {
        solution,
        gated: false,
        sizes: Some(state.sizes()),
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn comb3() -> SimplePolygon {
        SimplePolygon::from_ints(&[
            (0, 0),
            (11, 0),
            (11, 2),
            (10, 2),
            (10, 12),
            (9, 12),
            (9, 2),
            (6, 2),
            (6, 12),
            (5, 12),
            (5, 2),
            (2, 2),
            (2, 12),
            (1, 12),
            (1, 2),
            (0, 2),
        ])
        .unwrap()
    }

    fn sequential() -> SolverConfig {
        SolverConfig {
            parallelism: 1,
            paranoid: false,
        }
    }

    #[test]
    fn gated_examples() {
        let sq = SimplePolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let out = solve(&sq, &sequential()).unwrap();
        assert!(out.gated);
        assert_eq!(out.solution.len(), 1);
        assert_eq!(out.solution.guards[0].chain, Chain::Full);
        let l =
            SimplePolygon::from_ints(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(solve(&l, &sequential()).unwrap().solution.len(), 1);
    }

    #[test]
    fn comb3_needs_three() {
        let out = solve(&comb3(), &sequential()).unwrap();
        assert!(!out.gated);
        assert_eq!(out.solution.len(), 3);
        assert!(out.solution.covered);
    }

    #[test]
    fn greedy_chains_abut() {
        let state = SolverState::build(&comb3(), sequential());
        let u0 = BoundaryPoint::new(3, ratio(1, 3), 16);
        let sol = state.greedy_from(&u0).unwrap();
        assert!(sol.len() == 3 || sol.len() == 4);
        let mut cur = u0.clone();
        for g in &sol.guards {
            let Chain::Arc { start, end } = &g.chain else {
                panic!("finite chains expected")
            };
            assert_eq!(start, &cur);
            cur = end.clone();
        }
        assert_eq!(cur, u0);
    }

    #[test]
    fn paranoid_agrees_with_binary_search() {
        let p = comb3();
        let fast = SolverState::build(&p, sequential());
        let slow = SolverState::build(
            &p,
            SolverConfig {
                parallelism: 1,
                paranoid: true,
            },
        );
        for u in fast.starts.iter().take(12) {
            let a = fast.max_guard_query(u).unwrap();
            let b = slow.max_guard_query(u).unwrap();
            assert_eq!(a.chain.end(), b.chain.end(), "from {u}");
        }
    }
}
