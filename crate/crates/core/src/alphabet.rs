//! Interned symbols and symbol sequences.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

/// Dense id of a symbol inside an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub u32);

impl SymbolId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// How a line of text is split into symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Whitespace-separated tokens; multi-character tokens allowed.
    Tokens,
    /// Every non-whitespace character is one symbol.
    Chars,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Tokens => "tokens",
            Mode::Chars => "chars",
        }
    }

    /// Splits a line into its symbol texts.
    pub fn split(self, line: &str) -> Vec<String> {
        match self {
            Mode::Tokens => line.split_whitespace().map(str::to_owned).collect(),
            Mode::Chars => line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(String::from)
                .collect(),
        }
    }
}

/// Ordered set of distinct tokens with ids `0..len`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    lookup: HashMap<String, SymbolId>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an alphabet from tokens in order; duplicates keep their first id.
    pub fn from_tokens<I, S>(tokens: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut alphabet = Self::new();
        for t in tokens {
            alphabet.intern(t.as_ref());
        }
        alphabet
    }

    /// Returns the id of `token`, adding it if it is new.
    pub fn intern(&mut self, token: &str) -> SymbolId {
        if let Some(&id) = self.lookup.get(token) {
            return id;
        }
        let id = SymbolId(self.symbols.len() as u32);
        self.symbols.push(token.to_owned());
        self.lookup.insert(token.to_owned(), id);
        id
    }

    pub fn id(&self, token: &str) -> Option<SymbolId> {
        self.lookup.get(token).copied()
    }

    pub fn token(&self, id: SymbolId) -> &str {
        &self.symbols[id.index()]
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> {
        (0..self.symbols.len() as u32).map(SymbolId)
    }

    /// Translates `seq`, written over `from`, into ids of `self`.
    /// Returns `None` when some token is missing here.
    pub fn reencode(&self, seq: &Seq, from: &Alphabet) -> Option<Seq> {
        seq.iter()
            .map(|&id| self.id(from.token(id)))
            .collect::<Option<Vec<_>>>()
            .map(Seq::from)
    }
}

/// A string over some [`Alphabet`], stored as symbol ids.
///
/// Ordering is lexicographic on ids, with a proper prefix sorting first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seq(Vec<SymbolId>);

impl Seq {
    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    pub fn ids(&self) -> &[SymbolId] {
        &self.0
    }

    pub fn push(&mut self, id: SymbolId) {
        self.0.push(id);
    }

    pub fn into_inner(self) -> Vec<SymbolId> {
        self.0
    }

    /// A copy of `self` with `id` inserted before index `at`.
    pub fn with_inserted(&self, at: usize, id: SymbolId) -> Seq {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..at]);
        v.push(id);
        v.extend_from_slice(&self.0[at..]);
        Seq(v)
    }

    pub fn concat(&self, other: &Seq) -> Seq {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Seq(v)
    }
}

impl Deref for Seq {
    type Target = [SymbolId];

    fn deref(&self) -> &[SymbolId] {
        &self.0
    }
}

impl From<Vec<SymbolId>> for Seq {
    fn from(v: Vec<SymbolId>) -> Self {
        Seq(v)
    }
}

impl From<&[SymbolId]> for Seq {
    fn from(v: &[SymbolId]) -> Self {
        Seq(v.to_vec())
    }
}

impl FromIterator<SymbolId> for Seq {
    fn from_iter<T: IntoIterator<Item = SymbolId>>(iter: T) -> Self {
        Seq(iter.into_iter().collect())
    }
}

/// Renders a [`Seq`] against an alphabet in a given mode.
pub struct Display<'a> {
    pub(crate) seq: &'a [SymbolId],
    pub(crate) alphabet: &'a Alphabet,
    pub(crate) mode: Mode,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &id) in self.seq.iter().enumerate() {
            if i > 0 && self.mode == Mode::Tokens {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.token(id))?;
        }
        Ok(())
    }
}
