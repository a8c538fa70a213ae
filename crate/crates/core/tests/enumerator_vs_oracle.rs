use std::collections::HashSet;

use mcs_core::enumerator::{
    compute_ext, find_unshiftables, McsEnumerator, PositionTuple, DEFAULT_TUPLE_CAP,
};
use mcs_core::gen::{random_instance, rng};
use mcs_core::oracle::enumerate_bruteforce;
use mcs_core::subseq::{embeds, is_mcs, prune_alphabet};
use mcs_core::{InstanceSet, Seq, SymbolId};
use proptest::prelude::*;

fn instance_strategy() -> impl Strategy<Value = InstanceSet> {
    (2usize..=4, 1usize..=4, any::<u64>())
        .prop_map(|(k, sigma, seed)| random_instance(&mut rng(seed), k, sigma, 10))
}

/// Definition-level unshiftable set: the least set containing, for every
/// symbol and every member (or the sentinel), the tuple of rightmost
/// occurrences strictly before it. Iterated to a fixed point by scanning.
fn fixed_point_unshiftables(inst: &InstanceSet) -> HashSet<Vec<usize>> {
    let strings = inst.strings();
    let sentinel: Vec<usize> = strings.iter().map(|s| s.len() + 1).collect();
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![sentinel];
    while let Some(v) = frontier.pop() {
        for c in inst.alphabet().ids() {
            let tuple: Option<Vec<usize>> = strings
                .iter()
                .zip(&v)
                .map(|(s, &vi)| s[..vi - 1].iter().rposition(|&x| x == c).map(|p| p + 1))
                .collect();
            if let Some(t) = tuple {
                if set.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    set
}

fn greedy_bounds(prefix: &[SymbolId], inst: &InstanceSet) -> Vec<usize> {
    inst.strings()
        .iter()
        .map(|s| {
            let mut pos = 0;
            for &c in prefix {
                pos += s[pos..].iter().position(|&x| x == c).unwrap() + 1;
            }
            pos
        })
        .collect()
}

#[test]
fn seeded_random_instances_match_oracle() {
    let mut r = rng(2024);
    for case in 0..300 {
        let k = 2 + case % 3;
        let sigma = 1 + case % 4;
        let inst = random_instance(&mut r, k, sigma, 12);
        let want = enumerate_bruteforce(&inst).unwrap();
        let e = McsEnumerator::new(&inst).unwrap();
        let got = e.collect();
        let distinct: HashSet<&Seq> = got.iter().collect();
        assert_eq!(
            distinct.len(),
            got.len(),
            "duplicates on {:?}",
            inst.strings()
        );
        assert_eq!(
            got,
            want.members(),
            "case {case}: {}",
            inst.to_file_string()
        );
    }
}

#[test]
fn crossing_pair_regression() {
    let inst = InstanceSet::from_chars(&["ab", "ba"]);
    let e = McsEnumerator::new(&inst).unwrap();
    assert_eq!(e.collect(), enumerate_bruteforce(&inst).unwrap().members());
}

#[test]
fn unshiftables_on_sample_match_fixed_point() {
    let inst = InstanceSet::from_chars(&["0101010101", "0010010101", "00101001001", "01010010010"]);
    let idx = find_unshiftables(&inst, DEFAULT_TUPLE_CAP).unwrap();
    let got: HashSet<Vec<usize>> = idx.entries().iter().map(|u| u.tuple.0.clone()).collect();
    assert_eq!(got.len(), idx.len());
    assert_eq!(got, fixed_point_unshiftables(&inst));

    // Ext at the empty prefix equals the quantified filter applied directly.
    let root = PositionTuple(vec![0; 4]);
    let ext: HashSet<Vec<usize>> = compute_ext(&root, &idx)
        .iter()
        .map(|u| u.tuple.0.clone())
        .collect();
    let direct: HashSet<Vec<usize>> = got
        .iter()
        .filter(|u| {
            !got.iter()
                .any(|v| v.iter().zip(u.iter()).all(|(a, b)| a < b))
        })
        .cloned()
        .collect();
    assert_eq!(ext, direct);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumerator_equals_oracle(inst in instance_strategy()) {
        let want = enumerate_bruteforce(&inst).unwrap();
        let e = McsEnumerator::new(&inst).unwrap();
        let stats_emitted = e.for_each(|_| std::ops::ControlFlow::Continue(())).emitted;
        let got = e.collect();
        prop_assert_eq!(stats_emitted as usize, got.len());
        prop_assert_eq!(&got[..], want.members());
        for s in &got {
            prop_assert!(is_mcs(s, &inst));
        }
    }

    #[test]
    fn no_dead_ends(inst in instance_strategy()) {
        let e = McsEnumerator::new(&inst).unwrap();
        let stats = e.for_each(|_| std::ops::ControlFlow::Continue(()));
        prop_assert_eq!(stats.dead_ends, 0);
        prop_assert!(stats.completed);
    }

    #[test]
    fn index_matches_definition(inst in instance_strategy()) {
        let idx = find_unshiftables(&inst, DEFAULT_TUPLE_CAP).unwrap();
        let got: HashSet<Vec<usize>> = idx.entries().iter().map(|u| u.tuple.0.clone()).collect();
        prop_assert_eq!(got.len(), idx.len());
        let product: usize = inst.strings().iter().map(|s| s.len()).product();
        prop_assert!(idx.len() <= product);
        prop_assert_eq!(got, fixed_point_unshiftables(&inst));
        for (i, u) in idx.entries().iter().enumerate() {
            for (s, &p) in inst.strings().iter().zip(&u.tuple.0) {
                prop_assert_eq!(s[p - 1], u.symbol);
            }
            let chain = idx.witness_chain(i);
            prop_assert_eq!(chain.last().unwrap(), &idx.sentinel());
            for w in chain.windows(2) {
                let (cur, wit) = (w[0], w[1]);
                for (s, (&ci, &wi)) in inst.strings().iter().zip(cur.0.iter().zip(&wit.0)) {
                    let rightmost = s[..wi - 1].iter().rposition(|&x| x == s[ci - 1]).unwrap() + 1;
                    prop_assert_eq!(rightmost, ci);
                }
            }
        }
    }

    #[test]
    fn ext_is_an_antichain_along_the_walk(inst in instance_strategy()) {
        let e = McsEnumerator::new(&inst).unwrap();
        let idx = e.index().unwrap();
        for mcs in e.collect() {
            for cut in 0..=mcs.len() {
                let bounds = PositionTuple(greedy_bounds(&mcs[..cut], &inst));
                let ext = compute_ext(&bounds, idx);
                for a in &ext {
                    prop_assert!(bounds.strictly_below(&a.tuple));
                    for b in &ext {
                        prop_assert!(!a.tuple.strictly_below(&b.tuple));
                    }
                }
            }
        }
    }

    #[test]
    fn mcs_set_is_permutation_invariant(inst in instance_strategy(), rot in 0usize..4) {
        let mut lines: Vec<String> = inst.strings().iter().map(|s| inst.render(s)).collect();
        let r = rot % lines.len();
        lines.rotate_left(r);
        let permuted = InstanceSet::from_lines(inst.mode(), &lines).unwrap();
        let a = enumerate_bruteforce(&inst).unwrap();
        let b = enumerate_bruteforce(&permuted).unwrap();
        let ra: HashSet<String> = a.members().iter().map(|s| inst.render(s)).collect();
        let rb: HashSet<String> = b.members().iter().map(|s| permuted.render(s)).collect();
        prop_assert_eq!(ra, rb);
    }

    #[test]
    fn pruning_preserves_mcs_set(inst in instance_strategy()) {
        let pruned = prune_alphabet(&inst);
        let a: Vec<String> = enumerate_bruteforce(&inst).unwrap().members().iter().map(|s| inst.render(s)).collect();
        let b: Vec<String> = McsEnumerator::new(&pruned).unwrap().collect().iter().map(|s| pruned.render(s)).collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn oracle_members_are_incomparable(inst in instance_strategy()) {
        let set = enumerate_bruteforce(&inst).unwrap();
        for a in set.members() {
            prop_assert!(is_mcs(a, &inst));
            for b in set.members() {
                prop_assert!(a == b || !embeds(a, b));
            }
        }
    }
}
