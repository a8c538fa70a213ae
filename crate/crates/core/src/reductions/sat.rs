//! 3-CNF to "another MCS" instances.
//!
//! Over the alphabet `x1 !x1 ... xv !xv`, the first string is
//! `S_0 = x1 !x1 x2 !x2 ... xv !xv`, and clause `(l1 ∨ l2 ∨ l3)` on variables
//! `a < b < c` becomes `R^(a-1) l1 R^(b-a) l2 R^(c-b) l3 R^(v-c)` with
//! `R = xv !xv ... x1 !x1`. The known set holds `Z_j`, which is `S_0`
//! without the block of variable `j`. An MCS outside the known set exists
//! iff the formula is satisfiable.

use std::fmt::{self, Write as _};

use crate::alphabet::{Alphabet, Mode, Seq, SymbolId};
use crate::analysis::another_mcs;
use crate::error::{Error, Result};
use crate::instance::{render_strings_file, InstanceSet};
use crate::subseq::{is_common_subsequence, is_mcs};
use crate::Limits;

/// Default cap on the number of variables for [`sat_bruteforce`].
pub const DEFAULT_VAR_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Self {
        Literal {
            positive: !self.positive,
            ..self
        }
    }

    /// Symbol id in [`sat_alphabet`].
    pub fn symbol(self) -> SymbolId {
        SymbolId((2 * (self.var - 1) + usize::from(!self.positive)) as u32)
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }

    fn dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

/// A 3-CNF formula; each clause holds three distinct variables in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Cnf3 {
    /// Sorts each clause by variable and rejects clauses that do not hold
    /// exactly three distinct in-range variables.
    pub fn new(vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (i, mut c) in clauses.into_iter().enumerate() {
            if c.len() != 3 {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has {} literals, expected 3",
                    i + 1,
                    c.len()
                )));
            }
            if let Some(l) = c.iter().find(|l| l.var == 0 || l.var > vars) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} uses variable {} outside 1..={vars}",
                    i + 1,
                    l.var
                )));
            }
            c.sort();
            for w in c.windows(2) {
                if w[0].var == w[1].var {
                    let what = if w[0].positive != w[1].positive {
                        "both a variable and its negation"
                    } else {
                        "a repeated literal"
                    };
                    return Err(Error::InvalidFormula(format!(
                        "clause {} contains {what} (x{})",
                        i + 1,
                        w[0].var
                    )));
                }
            }
            out.push([c[0], c[1], c[2]]);
        }
        Ok(Cnf3 { vars, clauses: out })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Smallest variable occurring (with either sign) in every clause.
    pub fn universal_variable(&self) -> Option<usize> {
        (1..=self.vars).find(|&var| self.clauses.iter().all(|c| c.iter().any(|l| l.var == var)))
    }

    /// A literal occurring in every clause, if any.
    pub fn universal_literal(&self) -> Option<Literal> {
        let first = self.clauses.first()?;
        first
            .iter()
            .copied()
            .find(|l| self.clauses.iter().all(|c| c.contains(l)))
    }

    /// The reduction needs at least one clause and no literal that occurs in
    /// every clause; without the latter some `Z_j` stops being maximal.
    /// A variable may still occur in every clause with mixed signs.
    pub fn check_reduction_ready(&self) -> Result<()> {
        if self.clauses.is_empty() {
            return Err(Error::InvalidFormula(
                "formula has no clauses, so every literal occurs in all of them".into(),
            ));
        }
        match self.universal_literal() {
            Some(l) => Err(Error::InvalidFormula(format!(
                "literal {l} occurs in every clause"
            ))),
            None => Ok(()),
        }
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<Vec<Literal>> = Vec::new();
        let mut current: Vec<Literal> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                match parts.as_slice() {
                    ["p", "cnf", v, m] => {
                        let v = v.parse().map_err(|_| {
                            Error::parse(i + 1, format!("bad variable count `{v}`"))
                        })?;
                        let m = m
                            .parse()
                            .map_err(|_| Error::parse(i + 1, format!("bad clause count `{m}`")))?;
                        header = Some((v, m));
                    }
                    _ => return Err(Error::parse(i + 1, "expected `p cnf <vars> <clauses>`")),
                }
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(Error::parse(i + 1, "clause before the `p cnf` header"));
            };
            for tok in line.split_whitespace() {
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("bad literal `{tok}`")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = lit.unsigned_abs() as usize;
                if var > vars {
                    return Err(Error::parse(
                        i + 1,
                        format!("variable {var} exceeds declared count {vars}"),
                    ));
                }
                current.push(Literal {
                    var,
                    positive: lit > 0,
                });
            }
        }
        let (vars, m) = header.ok_or_else(|| Error::parse(1, "missing `p cnf` header"))?;
        if !current.is_empty() {
            return Err(Error::parse(
                text.lines().count(),
                "last clause is not terminated by 0",
            ));
        }
        if clauses.len() != m {
            return Err(Error::parse(
                text.lines().count(),
                format!("header declares {m} clauses, found {}", clauses.len()),
            ));
        }
        Cnf3::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(
                out,
                "{} {} {} 0",
                c[0].dimacs(),
                c[1].dimacs(),
                c[2].dimacs()
            );
        }
        out
    }
}

/// `x1 !x1 x2 !x2 ... xv !xv`, ids in that order.
pub fn sat_alphabet(vars: usize) -> Alphabet {
    Alphabet::from_tokens(
        (1..=vars).flat_map(|j| [Literal::pos(j), Literal::neg(j)].map(|l| l.to_string())),
    )
}

fn block(var: usize) -> [SymbolId; 2] {
    [Literal::pos(var).symbol(), Literal::neg(var).symbol()]
}

/// `S_0 = x1 !x1 ... xv !xv`.
pub fn base_string(vars: usize) -> Seq {
    (1..=vars).flat_map(block).collect()
}

/// `S_0` without the block of variable `var`.
pub fn known_string(vars: usize, var: usize) -> Seq {
    (1..=vars).filter(|&j| j != var).flat_map(block).collect()
}

/// The string for one clause, `R^(a-1) l1 R^(b-a) l2 R^(c-b) l3 R^(v-c)`.
/// No reduction-readiness check is made.
pub fn clause_string(vars: usize, clause: &[Literal; 3]) -> Seq {
    let r: Vec<SymbolId> = (1..=vars).rev().flat_map(block).collect();
    let [l1, l2, l3] = *clause;
    let reps = [l1.var - 1, l2.var - l1.var, l3.var - l2.var, vars - l3.var];
    let mut out = Vec::with_capacity(3 + 2 * vars * (vars - 1));
    for (i, &times) in reps.iter().enumerate() {
        for _ in 0..times {
            out.extend_from_slice(&r);
        }
        if let Some(l) = clause.get(i) {
            out.push(l.symbol());
        }
    }
    Seq::from(out)
}

/// `(S(φ), Z(φ))` plus the formula it came from.
#[derive(Debug, Clone)]
pub struct SatMcsInstance {
    pub strings: InstanceSet,
    pub known: Vec<Seq>,
    pub formula: Cnf3,
}

impl SatMcsInstance {
    /// The known set in the strings file format.
    pub fn known_file_string(&self) -> String {
        render_strings_file(
            Mode::Tokens,
            self.known.iter().map(|z| self.strings.render(z)),
        )
    }
}

pub fn build_sat_instance(phi: &Cnf3) -> Result<SatMcsInstance> {
    phi.check_reduction_ready()?;
    let v = phi.vars();
    let mut strings = vec![base_string(v)];
    strings.extend(phi.clauses().iter().map(|c| clause_string(v, c)));
    let known = (1..=v).map(|j| known_string(v, j)).collect();
    Ok(SatMcsInstance {
        strings: InstanceSet::new(sat_alphabet(v), strings, Mode::Tokens)?,
        known,
        formula: phi.clone(),
    })
}

/// Reads an assignment off a common subsequence outside the known set.
///
/// Keeps one literal per variable (the positive one when both occur) and
/// sets the variable to the polarity kept.
pub fn decode_assignment(x: &Seq, inst: &SatMcsInstance) -> Result<Vec<bool>> {
    if inst.known.contains(x) {
        return Err(Error::NotAWitness(
            "string is a member of the known set".into(),
        ));
    }
    if !is_common_subsequence(x, &inst.strings) {
        return Err(Error::NotAWitness(
            "string is not a common subsequence".into(),
        ));
    }
    let vars = inst.formula.vars();
    let mut has = vec![[false; 2]; vars];
    for &id in x.iter() {
        let i = id.index();
        has[i / 2][i % 2] = true;
    }
    has.iter()
        .enumerate()
        .map(|(j, &[pos, neg])| {
            if pos {
                Ok(true)
            } else if neg {
                Ok(false)
            } else {
                Err(Error::NotAWitness(format!(
                    "string contains neither x{} nor !x{}",
                    j + 1,
                    j + 1
                )))
            }
        })
        .collect()
}

/// Exhaustive search over all `2^v` assignments.
pub fn sat_bruteforce(phi: &Cnf3, var_cap: usize) -> Result<Option<Vec<bool>>> {
    let v = phi.vars();
    if v > var_cap || v >= 64 {
        return Err(Error::BudgetExceeded {
            what: "brute-force SAT variables (var cap)",
            needed: v as u128,
            cap: var_cap as u128,
        });
    }
    Ok((0u64..1 << v)
        .map(|mask| (0..v).map(|j| mask >> j & 1 == 1).collect::<Vec<_>>())
        .find(|a| phi.evaluate(a)))
}

/// Outcome of checking the 3-CNF reduction on one formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatReport {
    /// Whether each `Z_j` is an MCS of `S(φ)`.
    pub known_maximal: Vec<bool>,
    pub satisfiable: bool,
    /// Rendered MCS outside the known set, when one was found.
    pub witness: Option<String>,
    /// Assignment decoded from the witness.
    pub decoded: Option<Vec<bool>>,
    pub decoded_satisfies: bool,
}

impl SatReport {
    pub fn passed(&self) -> bool {
        self.known_maximal.iter().all(|&b| b)
            && self.satisfiable == self.witness.is_some()
            && (self.witness.is_none() || self.decoded_satisfies)
    }
}

pub fn verify_sat(phi: &Cnf3, limits: &Limits) -> Result<SatReport> {
    let inst = build_sat_instance(phi)?;
    let satisfiable = sat_bruteforce(phi, limits.sat_var_cap)?.is_some();
    let known_maximal: Vec<bool> = inst
        .known
        .iter()
        .map(|z| is_mcs(z, &inst.strings))
        .collect();
    let mut report = SatReport {
        known_maximal,
        satisfiable,
        witness: None,
        decoded: None,
        decoded_satisfies: false,
    };
    if !report.known_maximal.iter().all(|&b| b) {
        return Ok(report);
    }
    if let Some(w) = another_mcs(&inst.strings, &inst.known, limits)?.witness {
        report.witness = Some(inst.strings.render(&w));
        if let Ok(a) = decode_assignment(&w, &inst) {
            report.decoded_satisfies = phi.evaluate(&a);
            report.decoded = Some(a);
        }
    }
    Ok(report)
}
