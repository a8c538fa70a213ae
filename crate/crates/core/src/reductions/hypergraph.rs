//! Hypergraph maximal independent sets to binary-string MCS instances.
//!
//! `S_0 = (01)^n`; a hyperedge `u_1 < ... < u_h` becomes `T_1 ... T_{n+h-1}`
//! with `T_j = 0` when `j = u_k + k - 1` for some `k` and `T_j = 01`
//! otherwise. The MCSs are then `(01)^(n-1)` plus `ψ(U)` for every maximal
//! independent set `U`, where `ψ` writes `01` for members and `0` for the
//! rest.
//!
//! Hypergraph file: header `p hg <n> <m>`, then `m` lines of vertex ids.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Mode, Seq, SymbolId};
use crate::enumerator::McsEnumerator;
use crate::error::{Error, Result};
use crate::instance::InstanceSet;
use crate::oracle::enumerate_bruteforce_capped;
use crate::Limits;

/// Default cap on the vertex count for [`enumerate_mis_bruteforce`].
pub const DEFAULT_VERTEX_CAP: usize = 20;

pub const ZERO: SymbolId = SymbolId(0);
pub const ONE: SymbolId = SymbolId(1);

pub type VertexSet = BTreeSet<usize>;

/// `{0, 1}` with `0` as id 0.
pub fn binary_alphabet() -> Alphabet {
    Alphabet::from_tokens(["0", "1"])
}

/// Vertices `1..=n` and distinct nonempty hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Sorts and deduplicates each edge; rejects empty edges, out-of-range
    /// vertices and repeated edges.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::InvalidHypergraph(format!("edge {} is empty", i + 1)));
            }
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {} has vertex {v} outside 1..={n}",
                    i + 1
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {} is a duplicate",
                    i + 1
                )));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Smallest vertex lying in every edge. With no edges every vertex is
    /// universal.
    pub fn universal_vertex(&self) -> Option<usize> {
        (1..=self.n).find(|v| self.edges.iter().all(|e| e.binary_search(v).is_ok()))
    }

    pub fn check_reduction_ready(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewVertices(self.n));
        }
        match self.universal_vertex() {
            Some(v) => Err(Error::UniversalVertex(v)),
            None => Ok(()),
        }
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|e| !e.iter().all(|v| set.contains(v)))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if header.is_none() {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let (n, m) = match parts.as_slice() {
                    ["p", "hg", n, m] => (n.parse().ok(), m.parse().ok()),
                    _ => (None, None),
                };
                match (n, m) {
                    (Some(n), Some(m)) => header = Some((n, m)),
                    _ => return Err(Error::parse(i + 1, "expected `p hg <n> <m>`")),
                }
                continue;
            }
            let edge = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(i + 1, format!("bad vertex id `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            edges.push(edge);
        }
        let (n, m) = header.ok_or_else(|| Error::parse(1, "missing `p hg` header"))?;
        if edges.len() != m {
            return Err(Error::parse(
                text.lines().count(),
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        Hypergraph::new(n, edges)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("p hg {} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// `S(H)` in character mode over [`binary_alphabet`].
#[derive(Debug, Clone)]
pub struct BinaryMcsInstance {
    pub strings: InstanceSet,
    pub n: usize,
}

/// The string encoding one hyperedge (vertices sorted, in `1..=n`).
pub fn edge_string(edge: &[usize], n: usize) -> Seq {
    let len = n + edge.len() - 1;
    let zeros: BTreeSet<usize> = edge.iter().enumerate().map(|(k, &u)| u + k).collect();
    let mut out = Vec::with_capacity(2 * len);
    for j in 1..=len {
        out.push(ZERO);
        if !zeros.contains(&j) {
            out.push(ONE);
        }
    }
    Seq::from(out)
}

fn alternating(blocks: usize) -> Seq {
    (0..blocks).flat_map(|_| [ZERO, ONE]).collect()
}

pub fn build_hypergraph_instance(h: &Hypergraph) -> Result<BinaryMcsInstance> {
    h.check_reduction_ready()?;
    let mut strings = vec![alternating(h.n())];
    strings.extend(h.edges().iter().map(|e| edge_string(e, h.n())));
    Ok(BinaryMcsInstance {
        strings: InstanceSet::new(binary_alphabet(), strings, Mode::Chars)?,
        n: h.n(),
    })
}

/// `01` for each member of `u`, `0` for each other vertex of `1..=n`.
pub fn psi(u: &VertexSet, n: usize) -> Seq {
    let mut out = Vec::with_capacity(n + u.len());
    for v in 1..=n {
        out.push(ZERO);
        if u.contains(&v) {
            out.push(ONE);
        }
    }
    Seq::from(out)
}

/// Splits `x` into blocks `0` / `01`; `None` when it starts with `1`,
/// contains `11`, or uses a symbol other than `0`/`1`.
pub fn psi_inverse(x: &[SymbolId]) -> Option<VertexSet> {
    let mut set = VertexSet::new();
    let mut block = 0;
    let mut prev = None;
    for &c in x {
        match (c, prev) {
            (ZERO, _) => block += 1,
            (ONE, Some(ZERO)) => {
                set.insert(block);
            }
            _ => return None,
        }
        prev = Some(c);
    }
    Some(set)
}

/// `01` for each vertex of `edge`, `0` for the others.
pub fn forbidden_pattern(edge: &[usize], n: usize) -> Seq {
    psi(&edge.iter().copied().collect(), n)
}

/// All maximal independent sets, by scanning every vertex subset.
pub fn enumerate_mis_bruteforce(h: &Hypergraph, vertex_cap: usize) -> Result<Vec<VertexSet>> {
    let n = h.n();
    if n > vertex_cap || n >= 64 {
        return Err(Error::BudgetExceeded {
            what: "brute-force MIS vertices (vertex cap)",
            needed: n as u128,
            cap: vertex_cap as u128,
        });
    }
    let edge_masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
        .collect();
    let independent = |s: u64| edge_masks.iter().all(|&e| s & e != e);
    let mut out: Vec<VertexSet> = (0u64..1 << n)
        .filter(|&s| independent(s))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !independent(s | 1 << v)))
        .map(|s| (0..n).filter(|v| s >> v & 1 == 1).map(|v| v + 1).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// Which MCS enumeration backs [`verify_bijection`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Oracle,
    Enumerator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub mcs_count: usize,
    pub mis_count: usize,
    /// `(01)^(n-1)` is among the MCSs.
    pub w_present: bool,
    /// `ψ(U)` for maximal independent sets `U` that are not MCSs.
    pub missing: Vec<String>,
    /// MCSs other than `(01)^(n-1)` that are not `ψ` of any MIS.
    pub unexpected: Vec<String>,
    /// MCSs containing `11`.
    pub with_11: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.w_present
            && self.missing.is_empty()
            && self.unexpected.is_empty()
            && self.with_11.is_empty()
            && self.mcs_count == self.mis_count + 1
    }
}

pub fn verify_bijection(h: &Hypergraph, route: Route, limits: &Limits) -> Result<BijectionReport> {
    let inst = build_hypergraph_instance(h)?;
    let mis = enumerate_mis_bruteforce(h, limits.mis_vertex_cap)?;
    let mcs: Vec<Seq> = match route {
        Route::Oracle => {
            enumerate_bruteforce_capped(&inst.strings, limits.mask_cap)?.into_members()
        }
        Route::Enumerator => {
            McsEnumerator::with_tuple_cap(&inst.strings, limits.tuple_cap)?.collect()
        }
    };
    let w = alternating(h.n() - 1);
    let images: HashSet<Seq> = mis.iter().map(|u| psi(u, h.n())).collect();
    let mcs_set: HashSet<&Seq> = mcs.iter().collect();
    let render = |s: &Seq| inst.strings.render(s);

    let mut missing: Vec<String> = images
        .iter()
        .filter(|s| !mcs_set.contains(s))
        .map(render)
        .collect();
    missing.sort();
    Ok(BijectionReport {
        mcs_count: mcs.len(),
        mis_count: mis.len(),
        w_present: mcs_set.contains(&w),
        missing,
        unexpected: mcs
            .iter()
            .filter(|s| **s != w && !images.contains(*s))
            .map(render)
            .collect(),
        with_11: mcs
            .iter()
            .filter(|s| s.windows(2).any(|p| p == [ONE, ONE]))
            .map(render)
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subseq::embeds;

    fn five_vertex() -> Hypergraph {
        Hypergraph::new(5, vec![vec![1, 2], vec![1, 3, 4], vec![3, 4, 5]]).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn bits(s: &str) -> Seq {
        s.chars()
            .map(|c| if c == '0' { ZERO } else { ONE })
            .collect()
    }

    fn text(s: &Seq) -> String {
        s.iter()
            .map(|&c| if c == ZERO { '0' } else { '1' })
            .collect()
    }

    /// Starts from `(01)^(n-1)` and adds a `0` before the `u`-th `01`, or at
    /// the end when `u = n`.
    fn edge_string_by_insertion(edge: &[usize], n: usize) -> String {
        let mut blocks: Vec<String> = vec!["01".into(); n - 1];
        let mut extra = vec![0usize; n];
        for &u in edge {
            extra[u - 1] += 1;
        }
        let mut out = String::new();
        for (i, b) in blocks.drain(..).enumerate() {
            out.push_str(&"0".repeat(extra[i]));
            out.push_str(&b);
        }
        out.push_str(&"0".repeat(extra[n - 1]));
        out
    }

    #[test]
    fn five_vertex_strings() {
        let inst = build_hypergraph_instance(&five_vertex()).unwrap();
        let got: Vec<String> = inst
            .strings
            .strings()
            .iter()
            .map(|s| inst.strings.render(s))
            .collect();
        assert_eq!(
            got,
            ["0101010101", "0010010101", "00101001001", "01010010010"]
        );
    }

    #[test]
    fn two_vertex_edges() {
        assert_eq!(text(&edge_string(&[1], 2)), "001");
        assert_eq!(text(&edge_string(&[2], 2)), "010");
        let h = Hypergraph::new(2, vec![vec![1], vec![2]]).unwrap();
        let inst = build_hypergraph_instance(&h).unwrap();
        assert_eq!(inst.strings.render(&inst.strings.strings()[0]), "0101");
    }

    #[test]
    fn edge_string_matches_insertion_rule() {
        for n in 2..=6usize {
            for mask in 1u32..1 << n {
                let e: Vec<usize> = (0..n)
                    .filter(|v| mask >> v & 1 == 1)
                    .map(|v| v + 1)
                    .collect();
                assert_eq!(
                    text(&edge_string(&e, n)),
                    edge_string_by_insertion(&e, n),
                    "{e:?}"
                );
            }
        }
    }

    #[test]
    fn rejects_unready_hypergraphs() {
        let single = Hypergraph::new(2, vec![vec![1]]).unwrap();
        assert_eq!(
            build_hypergraph_instance(&single).unwrap_err(),
            Error::UniversalVertex(1)
        );
        let tiny = Hypergraph::new(1, vec![vec![1]]).unwrap();
        assert_eq!(
            build_hypergraph_instance(&tiny).unwrap_err(),
            Error::TooFewVertices(1)
        );
        let edgeless = Hypergraph::new(3, vec![]).unwrap();
        assert!(matches!(
            build_hypergraph_instance(&edgeless),
            Err(Error::UniversalVertex(_))
        ));
    }

    #[test]
    fn rejects_malformed_hypergraphs() {
        assert!(Hypergraph::new(3, vec![vec![]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![4]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![1, 2], vec![2, 1]]).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(text(&psi(&set(&[1, 3, 5]), 5)), "01001001");
        assert_eq!(text(&psi(&set(&[]), 3)), "000");
        assert_eq!(text(&psi(&set(&[1, 2]), 2)), "0101");
        assert_eq!(psi_inverse(&bits("00101010")), Some(set(&[2, 3, 4])));
        assert_eq!(psi_inverse(&bits("01001001")), Some(set(&[1, 3, 5])));
        assert_eq!(psi_inverse(&bits("0110")), None);
        assert_eq!(psi_inverse(&bits("10")), None);
        assert_eq!(psi_inverse(&[]), Some(set(&[])));
    }

    #[test]
    fn forbidden_patterns() {
        assert_eq!(text(&forbidden_pattern(&[1, 2], 5)), "0101000");
        assert_eq!(text(&forbidden_pattern(&[3, 4, 5], 5)), "00010101");
        let inst = build_hypergraph_instance(&five_vertex()).unwrap();
        let s = inst.strings.strings();
        for (i, e) in five_vertex().edges().iter().enumerate() {
            let r = forbidden_pattern(e, 5);
            assert!(!embeds(&r, &s[i + 1]));
            assert!(embeds(&r, &s[0]));
        }
    }

    #[test]
    fn mis_examples() {
        let got = enumerate_mis_bruteforce(&five_vertex(), DEFAULT_VERTEX_CAP).unwrap();
        let mut want = vec![
            set(&[1, 3, 5]),
            set(&[1, 4, 5]),
            set(&[2, 3, 4]),
            set(&[2, 4, 5]),
            set(&[2, 3, 5]),
        ];
        want.sort();
        assert_eq!(got, want);

        let h = Hypergraph::new(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(
            enumerate_mis_bruteforce(&h, DEFAULT_VERTEX_CAP).unwrap(),
            [set(&[])]
        );

        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(
            enumerate_mis_bruteforce(&h, DEFAULT_VERTEX_CAP).unwrap(),
            [set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]
        );
    }

    #[test]
    fn bijection_on_five_vertex_graph() {
        for route in [Route::Oracle, Route::Enumerator] {
            let r = verify_bijection(&five_vertex(), route, &Limits::default()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.mcs_count, 6);
            assert_eq!(r.mis_count, 5);
        }
    }

    #[test]
    fn bijection_on_single_triple() {
        // Vertex 1 lies in the only edge, so this is not reduction-ready.
        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(
            verify_bijection(&h, Route::Oracle, &Limits::default()).unwrap_err(),
            Error::UniversalVertex(1)
        );
    }

    #[test]
    fn file_round_trip() {
        let text = "# sample\np hg 5 3\n1 2\n1 3 4\n3 4 5\n";
        let h = Hypergraph::parse(text).unwrap();
        assert_eq!(h, five_vertex());
        assert_eq!(Hypergraph::parse(&h.to_file_string()).unwrap(), h);
        assert!(matches!(
            Hypergraph::parse("p hg 5 2\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Hypergraph::parse("1 2\n"),
            Err(Error::Parse { .. })
        ));
    }
}
