mod common;

use common::{increasing_upto, path};
use proptest::prelude::*;
use tree_assoc::assoc::{ass_power, astab};
use tree_assoc::cover::enumerate_vertex_covers;
use tree_assoc::graph::WeightedGraph;
use tree_assoc::monomial::edge_ideal;
use tree_assoc::oracle::{associated_primes, DEFAULT_BUDGET};

fn oracle_primes(g: &WeightedGraph, t: u64) -> Vec<tree_assoc::VertexSet> {
    associated_primes(&edge_ideal(g).power(t).unwrap(), DEFAULT_BUDGET).unwrap()
}

#[test]
fn astab_of_path_family() {
    for n in 4..=9 {
        let mut w = vec![1; n - 2];
        w.push(2);
        assert_eq!(astab(&path(&w)).unwrap().astab, n as u64 - 2, "n = {n}");
    }
}

#[test]
fn five_path_full_support_at_fifth_power() {
    let g = path(&[3, 2, 2, 3]);
    let primes = oracle_primes(&g, 5);
    assert!(primes.contains(&g.vertex_set()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn chains_and_stabilization(g in increasing_upto(9, 3)) {
        let r = astab(&g).unwrap();
        let top = r.astab + 2;
        let powers: Vec<_> = (1..=top).map(|t| ass_power(&g, t).unwrap().primes).collect();
        for pair in powers.windows(2) {
            prop_assert!(pair[0].iter().all(|p| pair[1].contains(p)));
        }
        for t in r.astab..=top {
            prop_assert_eq!(&powers[t as usize - 1], &r.ass_infinity);
        }
        if r.astab >= 2 {
            prop_assert_ne!(&powers[r.astab as usize - 2], &r.ass_infinity);
        }
        let full = g.vertex_set();
        prop_assert!(powers.iter().all(|ps| !ps.contains(&full)));
        let minimal = enumerate_vertex_covers(&g, true).unwrap();
        for ps in &powers {
            prop_assert!(minimal.iter().all(|m| ps.contains(m)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn formula_matches_oracle(g in increasing_upto(6, 3), t in 1u64..=3) {
        prop_assert_eq!(ass_power(&g, t).unwrap().primes, oracle_primes(&g, t));
    }
}
