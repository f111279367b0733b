mod support;

use std::collections::BTreeSet;

use degentropy_core::numerics::potential;
use degentropy_core::search::{cross_validate, min_entropy_nm_oracle, SizeSearch};
use degentropy_core::{DegreeSequence, LogCombination};
use support::{connected_graphs, to_labeled};

fn optima_set(opts: SizeSearch) -> (LogCombination, BTreeSet<DegreeSequence>) {
    let r = opts.run().unwrap();
    (r.objective, r.optima.into_iter().collect())
}

#[test]
fn pruning_is_lossless() {
    for m in 1..=10 {
        for c in 0..=6 {
            let pruned = optima_set(SizeSearch::new(m, c));
            let full = optima_set(SizeSearch::new(m, c).prune(false));
            assert_eq!(pruned, full, "m={m} c={c}");
        }
    }
}

#[test]
fn witnesses_realize_optima_and_connect_when_possible() {
    for m in 1..=12 {
        for c in 0..=4 {
            let r = SizeSearch::new(m, c).run().unwrap();
            assert_eq!(r.optima.len(), r.witnesses.len());
            for (seq, w) in r.optima.iter().zip(&r.witnesses) {
                assert_eq!(&w.degree_sequence(), seq);
                if degentropy_core::degseq::has_connected_realization(seq) {
                    assert!(w.is_connected(), "m={m} c={c} {seq}");
                }
                assert_eq!(w.size(), m as usize);
            }
        }
    }
}

#[test]
fn unshifted_optima_are_colex_graphs() {
    let colex = [vec![1, 1], vec![2, 1, 1], vec![2, 2, 2]];
    for (m, expected) in (1..=3).zip(colex) {
        let (_, optima) = optima_set(SizeSearch::new(m, 0));
        assert_eq!(
            optima,
            BTreeSet::from([DegreeSequence::new(expected)]),
            "m={m}"
        );
    }
}

#[test]
fn best_shifted_potential_grows_with_size() {
    let values: Vec<f64> = (1..=12)
        .map(|m| SizeSearch::new(m, 1).run().unwrap().objective.approx())
        .collect();
    assert!(values.windows(2).all(|w| w[0] < w[1]), "{values:?}");
}

#[test]
fn nm_oracle_agrees_with_graph_enumeration() {
    let classes = connected_graphs(7);
    for (n, graphs) in classes.iter().enumerate().skip(2) {
        let max_m = n * (n - 1) / 2;
        for m in n - 1..=max_m {
            let mut best: Option<LogCombination> = None;
            let mut winners = BTreeSet::new();
            for g in graphs
                .iter()
                .map(|a| to_labeled(a))
                .filter(|g| g.size() == m)
            {
                let seq = g.degree_sequence();
                let h = potential(&seq, 0, n).unwrap();
                match best.as_ref().map(|b| h.cmp(b)) {
                    None | Some(std::cmp::Ordering::Greater) => {
                        best = Some(h);
                        winners = BTreeSet::from([seq]);
                    }
                    Some(std::cmp::Ordering::Equal) => {
                        winners.insert(seq);
                    }
                    Some(std::cmp::Ordering::Less) => {}
                }
            }
            let r = min_entropy_nm_oracle(n, m).unwrap();
            assert_eq!(Some(r.objective), best, "n={n} m={m}");
            assert_eq!(
                r.optima.into_iter().collect::<BTreeSet<_>>(),
                winners,
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn nm_oracle_rejects_out_of_range_pairs() {
    assert!(min_entropy_nm_oracle(1, 0).is_err());
    assert!(min_entropy_nm_oracle(5, 3).is_err());
    assert!(min_entropy_nm_oracle(5, 11).is_err());
    assert!(min_entropy_nm_oracle(5, 10).is_ok());
}

#[test]
fn constructions_match_oracle_with_ties_at_n_plus_four() {
    let report = cross_validate(12).unwrap();
    assert_eq!(report.mismatches().count(), 0);
    let ties: BTreeSet<(usize, usize)> = report.ties().map(|c| (c.n, c.m)).collect();
    for n in 8..=12 {
        assert!(ties.contains(&(n, n + 4)), "n={n}");
    }
}
