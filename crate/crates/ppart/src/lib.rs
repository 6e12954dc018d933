//! Exact-arithmetic library for the theory of partitions of labeled posets:
//! linear-extension decompositions, descent-statistic generating functions,
//! order polynomials and reciprocity, quasi-symmetric and enriched
//! generating functions, and the classical applications (plane partitions,
//! multiset descents, chain enumeration, chromatic polynomials, lattice-point
//! counts in poset polytopes).

pub mod apps;
pub mod corpus;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod qsym;

pub use error::{Error, Result};
