//! File formats, brute-force cross-checks, and report types for the
//! `stabsplit` command-line tool.
//!
//! The fast algorithms live in [`stabsplit_core`]; this crate adds everything
//! that needs the standard library:
//!
//! - [`formats`]: parsers for the stabilizer and graph text file formats,
//!   with line-numbered errors.
//! - [`oracle`]: dense state-vector and density-matrix reference
//!   implementations used to cross-validate the fast paths at small sizes.
//! - [`report`]: the JSON output schema shared by all CLI subcommands.
//! - [`cli`]: argument parsing and subcommand drivers for the `stabsplit`
//!   binary.

#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod cli;
pub mod formats;
pub mod oracle;
pub mod report;

pub use formats::{ParseFileError, parse_graph, parse_stab};
pub use oracle::{
    DenseState, OracleError, brute_force_local_rank, density_from_group,
    entanglement_entropy_dense, enumerate_group, statevector,
};
pub use report::{CircuitReport, Report};
