//! Exact entanglement of stabilizer states, computed from their generators.
//!
//! A stabilizer state on `n` qubits is described by `n` independent,
//! mutually commuting Pauli operators with real signs whose group excludes
//! `-I`. Everything this crate computes — bipartite entropy of entanglement,
//! a multipartite entanglement monotone, canonical generator forms, Bell
//! pair extraction circuits, Pauli measurement updates — is obtained from
//! that description alone, through GF(2) linear algebra on the generators'
//! exponent vectors, in polynomial time and with exact integer results.
//!
//! The center of the crate is the layered canonical form: for any two-block
//! partition of the qubits, the generators can be reorganized into a part
//! supported only in block `A`, a part supported only in block `B`, and `p`
//! pairs straddling the cut whose one-sided restrictions anticommute only
//! within their own pair. That `p` is the entropy of entanglement in ebits,
//! satisfies `p = n_A - |S_A| = n_B - |S_B|`, and counts the Bell pairs the
//! state can be converted into by one-sided Clifford circuits (which
//! [`extract_epr`] synthesizes explicitly).
//!
//! # Modules
//!
//! * [`pauli`] — packed Pauli operators with exact phase arithmetic.
//! * [`clifford`] — the `{H, S, CNOT, X, Z}` gate set acting by conjugation.
//! * [`stabilizer`] — validated stabilizer groups, partitions, graph-state
//!   construction, one-sided kernels, and measurement updates.
//! * [`canonical`] — the layered form, compatibility indices, and Bell-pair
//!   extraction.
//! * [`entanglement`] — the bipartite and multipartite measures plus the
//!   graph-state rank shortcut.
//! * [`bits`], [`gf2`], [`rng`] — the GF(2) and randomness substrate.
//!
//! # Example
//!
//! ```
//! use stabsplit_core::{entropy_bipartite, Partition, StabilizerGroup};
//!
//! // The three-qubit GHZ state, stabilized by XXX, ZZI, IZZ.
//! let ghz = StabilizerGroup::from_strings(&["XXX", "ZZI", "IZZ"]).unwrap();
//! let cut = Partition::parse("0,1|2", 3).unwrap();
//! let report = entropy_bipartite(&ghz, &cut, false).unwrap();
//! assert_eq!(report.value(), 1); // one ebit across any GHZ cut
//! ```
//!
//! The crate is `no_std` (with `alloc`); all I/O, file formats, and the
//! command-line interface live in the companion `stabsplit` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bits;
pub mod canonical;
pub mod clifford;
pub mod entanglement;
mod error;
pub mod gf2;
pub mod pauli;
pub mod rng;
pub mod stabilizer;
#[cfg(test)]
pub(crate) mod testkit;

pub use bits::BitVec;
pub use canonical::{
    canonicalize, compatibility, extract_epr, CanonicalForm, CompatibilityIndices, EprExtraction,
};
pub use clifford::CliffordGate;
pub use entanglement::{
    all_partitions, e_multi, entropy_bipartite, graph_bipartite_rank, is_finer,
    EntanglementReport, Method, Witnesses,
};
pub use error::Error;
pub use gf2::BitMatrix;
pub use pauli::PauliOperator;
pub use rng::SplitMix64;
pub use stabilizer::{GraphAdjacency, MeasurementResult, Partition, Sign, StabilizerGroup};
