//! Machine-readable output schema for the command-line tool.
//!
//! Every subcommand that emits JSON produces a [`Report`] (the `partitions`
//! sweep emits an array of them). The schema is stable:
//! `{n, partition, mode, value, method, witnesses?, circuits?}`, with
//! witnesses rendered as Pauli strings carrying explicit signs.

use serde::{Deserialize, Serialize};
use stabsplit_core::{CliffordGate, PauliOperator};

/// Emitted circuits of an entangled-pair extraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitReport {
    /// Gates acting on the first block, in application order (`"H 0"`,
    /// `"CNOT 0 1"`, ... with global 0-indexed qubit numbers).
    pub a: Vec<String>,
    /// Gates acting on the second block, applied after `a`.
    pub b: Vec<String>,
    /// Qubit pairs `[in first block, in second block]` that end up holding
    /// the extracted entangled pairs.
    pub pairs: Vec<[usize; 2]>,
}

/// One analysis result, shared by all subcommands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Number of qubits analyzed.
    pub n: usize,
    /// The partition in `0,1|2` syntax (empty when the mode takes none).
    pub partition: String,
    /// Subcommand that produced the report.
    pub mode: String,
    /// The headline integer: an entanglement count, a rank, or a
    /// measurement outcome (`+1`/`-1`).
    pub value: i64,
    /// How the value was computed.
    pub method: String,
    /// Signed Pauli strings backing up the value, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    /// Extraction circuits, for the mode that emits them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuits: Option<CircuitReport>,
}

impl Report {
    /// Serializes with stable field order and a trailing newline, so that
    /// identical analyses produce byte-identical output.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }
}

/// Renders operators as signed strings for the `witnesses` field.
pub fn witness_strings(ops: &[PauliOperator]) -> Vec<String> {
    ops.iter().map(|op| op.to_string()).collect()
}

/// Renders gates as `"H 0"`-style lines for the `circuits` field.
pub fn gate_strings(gates: &[CliffordGate]) -> Vec<String> {
    gates.iter().map(|g| g.to_string()).collect()
}
