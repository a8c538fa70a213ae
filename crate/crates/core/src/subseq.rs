//! Subsequence primitives and the maximality test.

use crate::alphabet::{Alphabet, Seq, SymbolId};
use crate::instance::InstanceSet;

/// Strictly increasing 1-based positions of an embedding into a host string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement(pub Vec<usize>);

impl Arrangement {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }
}

/// Greedy leftmost embedding of `x` in `s`, if `x` is a subsequence of `s`.
///
/// The returned arrangement is position-wise minimal among all arrangements.
pub fn is_subsequence(x: &[SymbolId], s: &[SymbolId]) -> Option<Arrangement> {
    let mut positions = Vec::with_capacity(x.len());
    let mut host = s.iter().enumerate();
    for &c in x {
        let (i, _) = host.by_ref().find(|&(_, &h)| h == c)?;
        positions.push(i + 1);
    }
    Some(Arrangement(positions))
}

pub fn embeds(x: &[SymbolId], s: &[SymbolId]) -> bool {
    let mut host = s.iter();
    x.iter().all(|c| host.any(|h| h == c))
}

pub fn is_common_subsequence(x: &[SymbolId], inst: &InstanceSet) -> bool {
    inst.strings().iter().all(|s| embeds(x, s))
}

pub fn is_mcs(x: &[SymbolId], inst: &InstanceSet) -> bool {
    let strings: Vec<&[SymbolId]> = inst.strings().iter().map(|s| s.ids()).collect();
    is_mcs_in(x, &strings, inst.alphabet().len())
}

/// Maximality of `x` over raw strings whose ids are all below `sigma`.
///
/// `x` is an MCS iff it is common and no single-symbol insertion is common.
/// Inserting `c` before index `p` stays common in a string iff `c` occurs
/// strictly between the leftmost embedding of `x[..p]` and the rightmost
/// embedding of `x[p..]`, so each insertion point reduces to a window scan.
pub fn is_mcs_in(x: &[SymbolId], strings: &[&[SymbolId]], sigma: usize) -> bool {
    let m = x.len();
    let mut windows = Vec::with_capacity(strings.len());
    for s in strings {
        match embedding_windows(x, s) {
            Some(w) => windows.push(w),
            None => return false,
        }
    }
    let k = strings.len();
    let mut hits = vec![0usize; sigma];
    for p in 0..=m {
        hits.iter_mut().for_each(|h| *h = 0);
        for (i, (s, (pre, suf))) in strings.iter().zip(&windows).enumerate() {
            for &c in &s[pre[p]..suf[p]] {
                let h = &mut hits[c.index()];
                if *h == i {
                    *h = i + 1;
                    if *h == k {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `pre[p]`: 0-based index just past the leftmost embedding of `x[..p]`;
/// `suf[p]`: 0-based start of the rightmost embedding of `x[p..]`.
fn embedding_windows(x: &[SymbolId], s: &[SymbolId]) -> Option<(Vec<usize>, Vec<usize>)> {
    let m = x.len();
    let mut pre = vec![0usize; m + 1];
    let mut pos = 0;
    for (j, &c) in x.iter().enumerate() {
        pos += s[pos..].iter().position(|&h| h == c)? + 1;
        pre[j + 1] = pos;
    }
    let mut suf = vec![s.len(); m + 1];
    let mut end = s.len();
    for j in (0..m).rev() {
        end = s[..end].iter().rposition(|&h| h == x[j])?;
        suf[j] = end;
    }
    Some((pre, suf))
}

/// Removes every symbol that does not occur in all strings.
///
/// The result uses a fresh alphabet holding the surviving symbols in their
/// original relative order, so id order (and lexicographic order of
/// sequences) is preserved.
pub fn prune_alphabet(inst: &InstanceSet) -> InstanceSet {
    let sigma = inst.alphabet().len();
    let mut seen_in = vec![0usize; sigma];
    for (i, s) in inst.strings().iter().enumerate() {
        for &c in s.iter() {
            if seen_in[c.index()] == i {
                seen_in[c.index()] = i + 1;
            }
        }
    }
    let keep: Vec<bool> = seen_in.iter().map(|&n| n == inst.k()).collect();
    let alphabet = Alphabet::from_tokens(
        inst.alphabet()
            .ids()
            .filter(|id| keep[id.index()])
            .map(|id| inst.alphabet().token(id)),
    );
    let strings = inst
        .strings()
        .iter()
        .map(|s| {
            s.iter()
                .filter(|c| keep[c.index()])
                .map(|&c| alphabet.id(inst.alphabet().token(c)).expect("kept symbol"))
                .collect::<Seq>()
        })
        .collect();
    InstanceSet::new(alphabet, strings, inst.mode()).expect("same k as the input")
}
