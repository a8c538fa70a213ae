//! Counting, threshold assessment and the "another MCS" decision, all
//! driven by the streaming enumerator.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::alphabet::Seq;
use crate::enumerator::McsEnumerator;
use crate::error::{Error, Result};
use crate::instance::InstanceSet;
use crate::subseq::is_mcs;
use crate::Limits;

/// Result of asking whether an instance has more than `z` MCSs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssessOutcome {
    /// `count > z`.
    pub verdict: bool,
    /// Emissions observed before deciding; never more than `z + 1`.
    pub solutions_seen: u64,
    /// Whether the enumeration ran to completion.
    pub exhausted: bool,
}

/// Result of an "another MCS" query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnotherOutcome {
    pub witness: Option<Seq>,
    /// Emissions inspected; at most `|known| + 1` after deduplication.
    pub inspected: u64,
}

pub fn count_mcs(inst: &InstanceSet, limits: &Limits) -> Result<u64> {
    let e = McsEnumerator::with_tuple_cap(inst, limits.tuple_cap)?;
    Ok(e.for_each(|_| ControlFlow::Continue(())).emitted)
}

pub fn assess_mcs(inst: &InstanceSet, z: u64, limits: &Limits) -> Result<AssessOutcome> {
    let e = McsEnumerator::with_tuple_cap(inst, limits.tuple_cap)?;
    let mut seen = 0u64;
    let stats = e.for_each(|_| {
        seen += 1;
        if seen > z {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    debug_assert_eq!(seen, stats.emitted);
    Ok(AssessOutcome {
        verdict: stats.emitted > z,
        solutions_seen: stats.emitted,
        exhausted: stats.completed,
    })
}

/// Finds an MCS of `inst` outside `known`.
///
/// Every member of `known` must itself be an MCS of `inst`; the first that
/// is not yields [`Error::NotAnMcsInZ`] with its position.
pub fn another_mcs(inst: &InstanceSet, known: &[Seq], limits: &Limits) -> Result<AnotherOutcome> {
    for (index, z) in known.iter().enumerate() {
        if !is_mcs(z, inst) {
            return Err(Error::NotAnMcsInZ {
                index,
                text: inst.render(z),
            });
        }
    }
    let known: HashSet<&Seq> = known.iter().collect();
    let e = McsEnumerator::with_tuple_cap(inst, limits.tuple_cap)?;
    let mut witness = None;
    let stats = e.for_each(|s| {
        if known.contains(s) {
            ControlFlow::Continue(())
        } else {
            witness = Some(s.clone());
            ControlFlow::Break(())
        }
    });
    debug_assert!(stats.emitted <= known.len() as u64 + 1);
    Ok(AnotherOutcome {
        witness,
        inspected: stats.emitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_bruteforce;

    fn five_vertex() -> InstanceSet {
        InstanceSet::from_chars(&["0101010101", "0010010101", "00101001001", "01010010010"])
    }

    #[test]
    fn counts() {
        let l = Limits::default();
        assert_eq!(count_mcs(&five_vertex(), &l).unwrap(), 6);
        assert_eq!(
            count_mcs(&InstanceSet::from_chars(&["abc", "abc"]), &l).unwrap(),
            1
        );
        assert_eq!(
            count_mcs(&InstanceSet::from_chars(&["abc", "acb"]), &l).unwrap(),
            2
        );
    }

    #[test]
    fn assess_thresholds() {
        let l = Limits::default();
        let more = assess_mcs(&five_vertex(), 5, &l).unwrap();
        assert!(more.verdict);
        assert_eq!(more.solutions_seen, 6);

        let at_most = assess_mcs(&five_vertex(), 6, &l).unwrap();
        assert!(!at_most.verdict);
        assert!(at_most.exhausted);
        assert_eq!(at_most.solutions_seen, 6);

        let early = assess_mcs(&five_vertex(), 2, &l).unwrap();
        assert!(early.verdict);
        assert_eq!(early.solutions_seen, 3);
        assert!(!early.exhausted);

        let disjoint = assess_mcs(&InstanceSet::from_chars(&["a", "b"]), 0, &l).unwrap();
        assert!(disjoint.verdict);
        assert_eq!(disjoint.solutions_seen, 1);
    }

    #[test]
    fn another_with_full_and_empty_known() {
        let l = Limits::default();
        let inst = five_vertex();
        let all = enumerate_bruteforce(&inst).unwrap().into_members();
        let none = another_mcs(&inst, &all, &l).unwrap();
        assert_eq!(none.witness, None);
        assert_eq!(none.inspected, 6);

        let first = another_mcs(&inst, &[], &l).unwrap();
        assert!(is_mcs(first.witness.as_ref().unwrap(), &inst));
        assert_eq!(first.inspected, 1);

        let some = another_mcs(&inst, &all[..3], &l).unwrap();
        let w = some.witness.unwrap();
        assert!(!all[..3].contains(&w));
        assert!(some.inspected <= 4);
    }

    #[test]
    fn another_tolerates_duplicates_in_known() {
        let l = Limits::default();
        let inst = InstanceSet::from_chars(&["ab", "ba"]);
        let a = inst.parse_seq("a").unwrap();
        let out = another_mcs(&inst, &[a.clone(), a.clone()], &l).unwrap();
        assert_eq!(out.witness, Some(inst.parse_seq("b").unwrap()));
    }

    #[test]
    fn another_rejects_non_maximal_known() {
        let l = Limits::default();
        let inst = five_vertex();
        let bad = inst.parse_seq("0101").unwrap();
        let good = inst.parse_seq("01010101").unwrap();
        assert!(matches!(
            another_mcs(&inst, &[good, bad], &l),
            Err(Error::NotAnMcsInZ { index: 1, .. })
        ));
    }
}
