//! Binary-partition MCS enumeration for k >= 2 strings.
//!
//! The walk grows a prefix `P` one symbol at a time. Candidate next symbols
//! come from *unshiftables*: k-tuples of equal-symbol positions where each
//! position is the rightmost occurrence of the symbol before a witness tuple
//! (ultimately the end sentinel `(|S_1|+1, ..., |S_k|+1)`). At a prefix with
//! greedy embedding ends `l`, the extension set holds the unshiftables lying
//! strictly after `l` in every string that have no other unshiftable strictly
//! between them and `l`. An empty extension set means `P` is an MCS.
//! Otherwise `P·c` is explored for each symbol `c` of the extension set such
//! that `P` is an MCS of the strings truncated just before some tuple of `c`.
//!
//! Positions are 1-based throughout; 0 stands for the `#` start sentinel.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::alphabet::{Seq, SymbolId};
use crate::error::{Error, Result};
use crate::instance::InstanceSet;
use crate::subseq::is_mcs_in;

/// Default cap on the number of unshiftable tuples.
pub const DEFAULT_TUPLE_CAP: usize = 10_000_000;

/// k 1-based positions, one per input string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionTuple(pub Vec<usize>);

impl PositionTuple {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    /// `self_i < other_i` for every coordinate.
    pub fn strictly_below(&self, other: &PositionTuple) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unshiftable {
    pub tuple: PositionTuple,
    pub symbol: SymbolId,
    /// Entry this tuple was derived from; `None` for the end sentinel.
    pub witness: Option<usize>,
}

/// Sorted occurrence positions of every symbol in every string.
#[derive(Debug, Clone)]
pub struct OccurrenceTable {
    /// `[string][symbol]` -> increasing 1-based positions.
    occ: Vec<Vec<Vec<usize>>>,
}

impl OccurrenceTable {
    pub fn new(inst: &InstanceSet) -> Self {
        let sigma = inst.alphabet().len();
        let occ = inst
            .strings()
            .iter()
            .map(|s| {
                let mut per = vec![Vec::new(); sigma];
                for (p, c) in s.iter().enumerate() {
                    per[c.index()].push(p + 1);
                }
                per
            })
            .collect();
        OccurrenceTable { occ }
    }

    /// Largest position `< pos` holding `c` in string `i`.
    pub fn rightmost_before(&self, i: usize, c: SymbolId, pos: usize) -> Option<usize> {
        let v = &self.occ[i][c.index()];
        let j = v.partition_point(|&p| p < pos);
        j.checked_sub(1).map(|j| v[j])
    }

    /// Smallest position `> pos` holding `c` in string `i`.
    pub fn leftmost_after(&self, i: usize, c: SymbolId, pos: usize) -> Option<usize> {
        let v = &self.occ[i][c.index()];
        v.get(v.partition_point(|&p| p <= pos)).copied()
    }
}

/// The set of unshiftables of an instance.
#[derive(Debug, Clone)]
pub struct UnshiftableIndex {
    entries: Vec<Unshiftable>,
    occurrences: OccurrenceTable,
    sentinel: PositionTuple,
}

impl UnshiftableIndex {
    pub fn entries(&self) -> &[Unshiftable] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn occurrences(&self) -> &OccurrenceTable {
        &self.occurrences
    }

    /// The all-ends tuple `(|S_1|+1, ..., |S_k|+1)`.
    pub fn sentinel(&self) -> &PositionTuple {
        &self.sentinel
    }

    /// Tuples from `entries[idx]` up through its witnesses, ending with the
    /// sentinel.
    pub fn witness_chain(&self, idx: usize) -> Vec<&PositionTuple> {
        let mut chain = vec![&self.entries[idx].tuple];
        let mut cur = self.entries[idx].witness;
        while let Some(w) = cur {
            chain.push(&self.entries[w].tuple);
            cur = self.entries[w].witness;
        }
        chain.push(&self.sentinel);
        chain
    }
}

pub fn find_unshiftables(inst: &InstanceSet, tuple_cap: usize) -> Result<UnshiftableIndex> {
    let occurrences = OccurrenceTable::new(inst);
    let k = inst.k();
    let sentinel = PositionTuple(inst.strings().iter().map(|s| s.len() + 1).collect());

    let mut entries: Vec<Unshiftable> = Vec::new();
    let mut seen: HashMap<PositionTuple, usize> = HashMap::new();
    // (tuple to expand, its entry index or None for the sentinel)
    let mut stack: Vec<(PositionTuple, Option<usize>)> = vec![(sentinel.clone(), None)];
    while let Some((v, v_idx)) = stack.pop() {
        for c in inst.alphabet().ids() {
            let r: Option<Vec<usize>> = (0..k)
                .map(|i| occurrences.rightmost_before(i, c, v.0[i]))
                .collect();
            let Some(r) = r else { continue };
            let r = PositionTuple(r);
            if seen.contains_key(&r) {
                continue;
            }
            if entries.len() == tuple_cap {
                return Err(Error::CapacityExceeded { cap: tuple_cap });
            }
            seen.insert(r.clone(), entries.len());
            stack.push((r.clone(), Some(entries.len())));
            entries.push(Unshiftable {
                tuple: r,
                symbol: c,
                witness: v_idx,
            });
        }
    }
    log::debug!("unshiftables: {} tuples for k = {}", entries.len(), k);
    Ok(UnshiftableIndex {
        entries,
        occurrences,
        sentinel,
    })
}

/// A prefix together with the end points of its greedy leftmost embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixState {
    pub prefix: Seq,
    pub bounds: PositionTuple,
}

impl PrefixState {
    pub fn root(k: usize) -> Self {
        PrefixState {
            prefix: Seq::empty(),
            bounds: PositionTuple(vec![0; k]),
        }
    }

    /// Appends `c`, moving each bound to the next occurrence of `c`.
    /// `None` when `c` does not occur after some bound.
    pub fn extend(&self, c: SymbolId, occ: &OccurrenceTable) -> Option<PrefixState> {
        let bounds = self
            .bounds
            .0
            .iter()
            .enumerate()
            .map(|(i, &l)| occ.leftmost_after(i, c, l))
            .collect::<Option<Vec<_>>>()?;
        let mut prefix = self.prefix.clone();
        prefix.push(c);
        Some(PrefixState {
            prefix,
            bounds: PositionTuple(bounds),
        })
    }
}

/// Entries strictly beyond `bounds` with no other such entry strictly
/// between, ordered by (symbol, tuple).
pub fn compute_ext<'a>(bounds: &PositionTuple, idx: &'a UnshiftableIndex) -> Vec<&'a Unshiftable> {
    let mut beyond: Vec<&Unshiftable> = idx
        .entries
        .iter()
        .filter(|u| bounds.strictly_below(&u.tuple))
        .collect();
    // A strict dominator has a strictly smaller coordinate sum, and strict
    // domination is transitive, so comparing against the minimal elements
    // found so far is enough.
    beyond.sort_by_key(|u| u.tuple.0.iter().sum::<usize>());
    let mut minimal: Vec<&Unshiftable> = Vec::new();
    for u in beyond {
        if !minimal.iter().any(|m| m.tuple.strictly_below(&u.tuple)) {
            minimal.push(u);
        }
    }
    minimal.sort_by(|a, b| (a.symbol, &a.tuple).cmp(&(b.symbol, &b.tuple)));
    minimal
}

/// Whether `prefix` is an MCS of the strings cut just before `cut`
/// (string `i` truncated to `S_i[1, cut_i - 1]`).
pub fn prefix_maximality_guard(
    prefix: &[SymbolId],
    cut: &PositionTuple,
    inst: &InstanceSet,
) -> bool {
    let truncated: Vec<&[SymbolId]> = inst
        .strings()
        .iter()
        .zip(&cut.0)
        .map(|(s, &u)| &s[..u - 1])
        .collect();
    is_mcs_in(prefix, &truncated, inst.alphabet().len())
}

/// Counters collected during one walk.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WalkStats {
    pub emitted: u64,
    /// Recursive calls made.
    pub nodes: u64,
    /// Calls with a nonempty extension set whose every symbol failed the guard.
    pub dead_ends: u64,
    /// Largest number of calls between two emissions (or before the first).
    pub max_nodes_between_emissions: u64,
    /// False when the visitor stopped the walk early.
    pub completed: bool,
}

/// Streams the MCSs of one instance.
#[derive(Debug)]
pub struct McsEnumerator<'a> {
    inst: &'a InstanceSet,
    index: Option<UnshiftableIndex>,
}

impl<'a> McsEnumerator<'a> {
    pub fn new(inst: &'a InstanceSet) -> Result<Self> {
        Self::with_tuple_cap(inst, DEFAULT_TUPLE_CAP)
    }

    /// A single string is its own unique MCS, so no index is built for k = 1.
    pub fn with_tuple_cap(inst: &'a InstanceSet, tuple_cap: usize) -> Result<Self> {
        let index = if inst.k() >= 2 {
            Some(find_unshiftables(inst, tuple_cap)?)
        } else {
            None
        };
        Ok(McsEnumerator { inst, index })
    }

    pub fn index(&self) -> Option<&UnshiftableIndex> {
        self.index.as_ref()
    }

    /// Calls `visit` once per MCS, depth-first in lexicographic id order.
    pub fn for_each<F>(&self, mut visit: F) -> WalkStats
    where
        F: FnMut(&Seq) -> ControlFlow<()>,
    {
        let mut walk = Walk {
            inst: self.inst,
            stats: WalkStats::default(),
            since_last: 0,
        };
        let flow = match &self.index {
            None => {
                walk.stats.nodes = 1;
                walk.since_last = 1;
                walk.emit(&self.inst.strings()[0], &mut visit)
            }
            Some(index) => walk.partition(&PrefixState::root(self.inst.k()), index, &mut visit),
        };
        walk.stats.completed = flow.is_continue();
        walk.stats.max_nodes_between_emissions =
            walk.stats.max_nodes_between_emissions.max(walk.since_last);
        walk.stats
    }

    pub fn collect(&self) -> Vec<Seq> {
        let mut out = Vec::new();
        self.for_each(|s| {
            out.push(s.clone());
            ControlFlow::Continue(())
        });
        out
    }
}

struct Walk<'a> {
    inst: &'a InstanceSet,
    stats: WalkStats,
    since_last: u64,
}

impl Walk<'_> {
    fn emit<F>(&mut self, s: &Seq, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Seq) -> ControlFlow<()>,
    {
        self.stats.emitted += 1;
        self.stats.max_nodes_between_emissions =
            self.stats.max_nodes_between_emissions.max(self.since_last);
        self.since_last = 0;
        visit(s)
    }

    fn partition<F>(
        &mut self,
        state: &PrefixState,
        index: &UnshiftableIndex,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Seq) -> ControlFlow<()>,
    {
        self.stats.nodes += 1;
        self.since_last += 1;
        let ext = compute_ext(&state.bounds, index);
        if ext.is_empty() {
            return self.emit(&state.prefix, visit);
        }
        let mut children = 0;
        // ext is grouped by symbol; recurse once per symbol whose group has
        // a tuple passing the guard.
        for group in ext.chunk_by(|a, b| a.symbol == b.symbol) {
            let c = group[0].symbol;
            if group
                .iter()
                .any(|u| prefix_maximality_guard(&state.prefix, &u.tuple, self.inst))
            {
                let next = state
                    .extend(c, &index.occurrences)
                    .expect("an unshiftable lies beyond every bound");
                children += 1;
                self.partition(&next, index, visit)?;
            }
        }
        if children == 0 {
            self.stats.dead_ends += 1;
        }
        ControlFlow::Continue(())
    }
}

/// Visits every MCS of `inst` once; returns the number of emissions.
pub fn enumerate_mcs<F>(inst: &InstanceSet, mut visit: F) -> Result<u64>
where
    F: FnMut(&Seq),
{
    let e = McsEnumerator::new(inst)?;
    Ok(e.for_each(|s| {
        visit(s);
        ControlFlow::Continue(())
    })
    .emitted)
}
