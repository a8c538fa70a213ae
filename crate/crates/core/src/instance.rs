//! Instances (sets of k strings) and the strings file format.
//!
//! A strings file starts with a mode line, `mode tokens` or `mode chars`.
//! Every following nonempty line is one input string. Lines whose first
//! non-blank character is `#` are comments.

use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Display, Mode, Seq};
use crate::error::{Error, Result};

/// An ordered collection of `k >= 1` strings over a shared alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSet {
    alphabet: Alphabet,
    strings: Vec<Seq>,
    mode: Mode,
}

impl InstanceSet {
    pub fn new(alphabet: Alphabet, strings: Vec<Seq>, mode: Mode) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::EmptyInstance);
        }
        debug_assert!(strings
            .iter()
            .all(|s| s.iter().all(|id| id.index() < alphabet.len())));
        Ok(InstanceSet {
            alphabet,
            strings,
            mode,
        })
    }

    /// Interns every line of `lines` (split according to `mode`).
    pub fn from_lines<I, S>(mode: Mode, lines: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut alphabet = Alphabet::new();
        let strings = lines
            .into_iter()
            .map(|line| {
                mode.split(line.as_ref())
                    .iter()
                    .map(|t| alphabet.intern(t))
                    .collect::<Seq>()
            })
            .collect();
        Self::new(alphabet, strings, mode)
    }

    /// Character-mode instance, one symbol per character.
    pub fn from_chars<S: AsRef<str>>(strings: &[S]) -> Self {
        Self::from_lines(Mode::Chars, strings).expect("at least one string")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn strings(&self) -> &[Seq] {
        &self.strings
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn k(&self) -> usize {
        self.strings.len()
    }

    /// Length of the longest string.
    pub fn n(&self) -> usize {
        self.strings.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Length of the shortest string.
    pub fn min_len(&self) -> usize {
        self.strings.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn total_size(&self) -> usize {
        self.strings.iter().map(|s| s.len()).sum()
    }

    /// Parses a string written in this instance's symbols. Tokens outside
    /// the alphabet give [`Error::UnknownSymbol`].
    pub fn parse_seq(&self, text: &str) -> Result<Seq> {
        self.parse_seq_in(self.mode, text)
    }

    pub fn parse_seq_in(&self, mode: Mode, text: &str) -> Result<Seq> {
        mode.split(text)
            .into_iter()
            .map(|t| self.alphabet.id(&t).ok_or(Error::UnknownSymbol(t)))
            .collect()
    }

    pub fn display<'a>(&'a self, seq: &'a [crate::SymbolId]) -> Display<'a> {
        Display {
            seq,
            alphabet: &self.alphabet,
            mode: self.mode,
        }
    }

    pub fn render(&self, seq: &[crate::SymbolId]) -> String {
        self.display(seq).to_string()
    }

    /// Serializes in the strings file format.
    pub fn to_file_string(&self) -> String {
        render_strings_file(self.mode, self.strings.iter().map(|s| self.render(s)))
    }
}

/// A parsed strings file before interning: mode plus raw lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringsFile {
    pub mode: Mode,
    pub lines: Vec<String>,
}

impl StringsFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut mode = None;
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match mode {
                None => {
                    let mut words = line.split_whitespace();
                    mode = match (words.next(), words.next(), words.next()) {
                        (Some("mode"), Some("tokens"), None) => Some(Mode::Tokens),
                        (Some("mode"), Some("chars"), None) => Some(Mode::Chars),
                        _ => {
                            return Err(Error::parse(
                                i + 1,
                                format!("expected `mode tokens` or `mode chars`, found `{line}`"),
                            ))
                        }
                    };
                }
                Some(_) => lines.push(line.to_owned()),
            }
        }
        let mode = mode.ok_or_else(|| Error::parse(1, "missing mode line"))?;
        Ok(StringsFile { mode, lines })
    }

    pub fn into_instance(self) -> Result<InstanceSet> {
        if self.lines.is_empty() {
            return Err(Error::parse(1, "no input strings"));
        }
        InstanceSet::from_lines(self.mode, &self.lines)
    }

    /// Interprets the lines as strings over `inst`'s alphabet.
    pub fn seqs_in(&self, inst: &InstanceSet) -> Vec<Result<Seq>> {
        self.lines
            .iter()
            .map(|l| inst.parse_seq_in(self.mode, l))
            .collect()
    }
}

pub fn parse_strings_file(text: &str) -> Result<InstanceSet> {
    StringsFile::parse(text)?.into_instance()
}

pub(crate) fn render_strings_file<I, S>(mode: Mode, lines: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = String::new();
    let _ = writeln!(out, "mode {}", mode.name());
    for l in lines {
        out.push_str(l.as_ref());
        out.push('\n');
    }
    out
}
