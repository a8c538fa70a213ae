//! Exhaustive MCS enumeration over subsequence masks of the shortest string.
//!
//! Every common subsequence embeds in the shortest string, so walking all
//! `2^l` masks of it (after dropping symbols missing from some string) and
//! keeping the maximal ones yields the full MCS set. Used as ground truth.

use std::collections::HashSet;

use crate::alphabet::{Seq, SymbolId};
use crate::error::{Error, Result};
use crate::instance::InstanceSet;
use crate::subseq::{is_mcs_in, prune_alphabet};

/// Default cap on the number of masks the oracle may walk.
pub const DEFAULT_MASK_CAP: u64 = 1 << 22;

/// Deduplicated set of MCSs in lexicographic id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McsSet {
    members: Vec<Seq>,
}

impl McsSet {
    /// Sorts and deduplicates.
    pub fn new(mut members: Vec<Seq>) -> Self {
        members.sort();
        members.dedup();
        McsSet { members }
    }

    pub fn members(&self) -> &[Seq] {
        &self.members
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, s: &Seq) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn into_members(self) -> Vec<Seq> {
        self.members
    }
}

pub fn enumerate_bruteforce(inst: &InstanceSet) -> Result<McsSet> {
    enumerate_bruteforce_capped(inst, DEFAULT_MASK_CAP)
}

/// Ids of the returned members refer to `inst`'s alphabet.
pub fn enumerate_bruteforce_capped(inst: &InstanceSet, mask_cap: u64) -> Result<McsSet> {
    let pruned = prune_alphabet(inst);
    let l = pruned.min_len();
    let needed = 1u128 << l.min(127);
    if l >= 127 || needed > mask_cap as u128 {
        return Err(Error::BudgetExceeded {
            what: "oracle subsequence masks (mask cap)",
            needed,
            cap: mask_cap as u128,
        });
    }
    let shortest = pruned
        .strings()
        .iter()
        .min_by_key(|s| s.len())
        .expect("k >= 1");
    let strings: Vec<&[SymbolId]> = pruned.strings().iter().map(|s| s.ids()).collect();

    let mut distinct: HashSet<Vec<SymbolId>> = HashSet::new();
    for mask in 0u64..(1u64 << l) {
        let sub: Vec<SymbolId> = shortest
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        distinct.insert(sub);
    }
    log::debug!(
        "oracle: {} masks, {} distinct subsequences",
        1u64 << l,
        distinct.len()
    );

    let sigma = pruned.alphabet().len();
    let members = distinct
        .into_iter()
        .filter(|x| is_mcs_in(x, &strings, sigma))
        .map(|x| {
            inst.alphabet()
                .reencode(&Seq::from(x), pruned.alphabet())
                .expect("pruned alphabet is a subset")
        })
        .collect();
    Ok(McsSet::new(members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subseq::embeds;

    fn rendered(inst: &InstanceSet, set: &McsSet) -> Vec<String> {
        set.members().iter().map(|s| inst.render(s)).collect()
    }

    #[test]
    fn identical_strings() {
        let inst = InstanceSet::from_chars(&["abc", "abc"]);
        assert_eq!(
            rendered(&inst, &enumerate_bruteforce(&inst).unwrap()),
            ["abc"]
        );
    }

    #[test]
    fn crossing_pair() {
        let inst = InstanceSet::from_chars(&["abc", "acb"]);
        assert_eq!(
            rendered(&inst, &enumerate_bruteforce(&inst).unwrap()),
            ["ab", "ac"]
        );
    }

    #[test]
    fn five_vertex_instance() {
        let inst =
            InstanceSet::from_chars(&["0101010101", "0010010101", "00101001001", "01010010010"]);
        let mut got = rendered(&inst, &enumerate_bruteforce(&inst).unwrap());
        got.sort();
        let mut want = vec![
            "01010101", "01001001", "01000101", "00101010", "00100101", "00101001",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn members_are_pairwise_incomparable() {
        let inst = InstanceSet::from_chars(&["abcabba", "cbabac", "bacbca"]);
        let set = enumerate_bruteforce(&inst).unwrap();
        for a in set.members() {
            for b in set.members() {
                if a != b {
                    assert!(!embeds(a, b));
                }
            }
        }
    }

    #[test]
    fn disjoint_strings_give_empty_mcs() {
        let inst = InstanceSet::from_chars(&["ab", "cd"]);
        let set = enumerate_bruteforce(&inst).unwrap();
        assert_eq!(set.members(), [Seq::empty()]);
    }

    #[test]
    fn cap_is_enforced() {
        let inst = InstanceSet::from_chars(&["abcdefgh", "abcdefgh"]);
        assert!(matches!(
            enumerate_bruteforce_capped(&inst, 1 << 7),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(enumerate_bruteforce_capped(&inst, 1 << 8).is_ok());
    }
}
