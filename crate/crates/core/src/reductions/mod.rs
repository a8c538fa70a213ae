//! Constructions that turn 3-CNF formulas and hypergraphs into MCS
//! instances, together with brute-force oracles and verifiers.

pub mod hypergraph;
pub mod sat;

pub use hypergraph::{
    build_hypergraph_instance, enumerate_mis_bruteforce, forbidden_pattern, psi, psi_inverse,
    verify_bijection, BijectionReport, BinaryMcsInstance, Hypergraph, Route,
};
pub use sat::{
    build_sat_instance, decode_assignment, sat_bruteforce, verify_sat, Cnf3, Literal,
    SatMcsInstance, SatReport,
};
