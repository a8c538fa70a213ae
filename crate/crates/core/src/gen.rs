//! Seeded random instances. The same seed always yields the same output
//! (ChaCha8 stream).

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Mode;
use crate::error::{Error, Result};
use crate::instance::InstanceSet;
use crate::reductions::{Cnf3, Hypergraph, Literal};

const MAX_ATTEMPTS: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` strings over the first `sigma` lowercase letters, each of length
/// uniform in `0..=max_len`.
pub fn random_instance<R: Rng>(rng: &mut R, k: usize, sigma: usize, max_len: usize) -> InstanceSet {
    assert!((1..=26).contains(&sigma) && k >= 1);
    let letters: Vec<char> = ('a'..='z').take(sigma).collect();
    let lines: Vec<String> = (0..k)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| letters[rng.gen_range(0..sigma)]).collect()
        })
        .collect();
    InstanceSet::from_lines(Mode::Chars, &lines).expect("k >= 1")
}

/// Random 3-CNF with `vars` variables and `clauses` clauses, resampled until
/// no variable occurs in every clause (a stricter condition than the
/// reduction needs).
pub fn random_cnf3<R: Rng>(rng: &mut R, vars: usize, clauses: usize) -> Result<Cnf3> {
    // Each clause leaves out vars - 3 variables, and every variable must be
    // left out somewhere.
    if vars < 4 || clauses * (vars - 3) < vars {
        return Err(Error::InvalidFormula(format!(
            "no reduction-ready 3-CNF has {vars} variables and {clauses} clauses"
        )));
    }
    let all: Vec<usize> = (1..=vars).collect();
    for _ in 0..MAX_ATTEMPTS {
        let cs: Vec<Vec<Literal>> = (0..clauses)
            .map(|_| {
                all.choose_multiple(rng, 3)
                    .map(|&var| Literal {
                        var,
                        positive: rng.gen(),
                    })
                    .collect()
            })
            .collect();
        let phi = Cnf3::new(vars, cs)?;
        if phi.universal_variable().is_none() {
            return Ok(phi);
        }
    }
    Err(Error::InvalidFormula(
        "could not sample a reduction-ready formula".into(),
    ))
}

/// Random hypergraph on `n` vertices with `edges` distinct hyperedges,
/// resampled until no vertex belongs to every edge.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, edges: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let distinct = if n >= 63 { u64::MAX } else { (1u64 << n) - 1 };
    if edges < 2 || edges as u64 > distinct {
        return Err(Error::InvalidHypergraph(format!(
            "no reduction-ready hypergraph has {n} vertices and {edges} distinct edges"
        )));
    }
    for _ in 0..MAX_ATTEMPTS {
        let mut es: Vec<Vec<usize>> = Vec::with_capacity(edges);
        while es.len() < edges {
            let size = rng.gen_range(1..=n);
            let mut e: Vec<usize> = (1..=n)
                .collect::<Vec<_>>()
                .choose_multiple(rng, size)
                .copied()
                .collect();
            e.sort_unstable();
            if !es.contains(&e) {
                es.push(e);
            }
        }
        let h = Hypergraph::new(n, es)?;
        if h.universal_vertex().is_none() {
            return Ok(h);
        }
    }
    Err(Error::InvalidHypergraph(
        "could not sample a hypergraph without a universal vertex".into(),
    ))
}
