use cag_core::candidates::{end_is_explained, start_is_explained, CandidateGuardSet, ChainIndex};
use cag_core::corpus::nontrivial_corpus;
use cag_core::exact::{int, ratio};
use cag_core::oracle::{Oracle, OracleConfig};
use cag_core::paths::PathStructure;
use cag_core::polygon::{cyclic_offset, BoundaryPoint, Chain, ContiguousGuard};

#[test]
fn index_is_a_strict_staircase_covering_every_chain() {
    for p in nontrivial_corpus(7, 20, 12) {
        let n = p.n();
        let ps = PathStructure::build(&p);
        let set = CandidateGuardSet::build(&p, &ps, 1);
        let guards: Vec<ContiguousGuard> = set.guards.iter().map(|c| c.guard.clone()).collect();
        let index = ChainIndex::build(n, &guards);
        for w in index.entries().windows(2) {
            assert!(w[0].start < w[1].start && w[0].end < w[1].end);
        }
        for g in &guards {
            if let Chain::Arc { start, end } = &g.chain {
                let s = start.param();
                let e = &s + cyclic_offset(start, end, n);
                assert!(
                    index.entries().iter().any(|x| x.start <= s && x.end >= e),
                    "chain {start}..{end} not dominated"
                );
            }
        }
    }
}

#[test]
fn candidate_chains_are_maximal_and_explained() {
    for p in nontrivial_corpus(8, 12, 10) {
        let n = p.n();
        let ps = PathStructure::build(&p);
        let set = CandidateGuardSet::build(&p, &ps, 1);
        let oracle = Oracle::new(&p, OracleConfig::default());
        for c in &set.guards {
            let g = &c.guard.g;
            let vb = oracle.visible(g).expect("candidate lies in the polygon");
            match &c.guard.chain {
                Chain::Full => assert!(vb.fully_visible()),
                Chain::Arc { start, end } => {
                    let len = cyclic_offset(start, end, n);
                    assert!(len > int(0), "zero-length chain kept");
                    let mid = BoundaryPoint::from_param(&(start.param() + &len * ratio(1, 2)), n);
                    assert_eq!(
                        vb.maximal_chain(&mid),
                        Some(c.guard.chain.clone()),
                        "guard {g} tag {}",
                        c.tag
                    );
                    assert!(end_is_explained(&p, g, end), "end {end} of guard {g}");
                    assert!(
                        start_is_explained(&p, g, start),
                        "start {start} of guard {g}"
                    );
                }
            }
        }
    }
}
