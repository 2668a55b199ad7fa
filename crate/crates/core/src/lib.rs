//! Exact q-series machinery for bipartitions with odd parts distinct.
//!
//! The crate is layered bottom-up:
//!
//! - [`pseries`]: truncated power series (univariate and bivariate) with
//!   exact integer or modular coefficients.
//! - [`qproducts`]: Pochhammer products, theta functions and the dissection
//!   identities they satisfy.
//! - [`enumeration`]: brute-force partitions, bipartitions and their
//!   statistics, used as an independent oracle for the series side.
//! - [`congruence`]: verifiers for the pod_{-2} identities and congruence
//!   families, and for the residue behaviour of the statistics.
//! - [`verify`]: a named registry of every check, used by the CLI.

pub mod congruence;
pub mod enumeration;
pub mod error;
pub mod pseries;
pub mod qproducts;
pub mod report;
pub mod verify;

pub use congruence::{Family, FamilySpec};
pub use enumeration::{Bipartition, Partition, StatTable, Statistic};
pub use error::{Error, Result};
pub use pseries::{BivariateSeries, Series};
pub use qproducts::{Factor, ProductSpec, Sign, ThetaArg};
pub use report::{CheckReport, Counterexample};
