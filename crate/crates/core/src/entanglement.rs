//! Entanglement measures of stabilizer states, computed by GF(2) rank
//! arithmetic on the generators.
//!
//! Two measures are exposed. The bipartite entropy of entanglement `E` (in
//! ebits) equals the number of cut-straddling pairs in the canonical form,
//! or equivalently `n_A - |S_A| = n_B - |S_B|` where `S_A`, `S_B` are the
//! one-sided local subgroups — always an exact integer for stabilizer
//! states. The multipartite monotone `e` for a partition `A_1 | ... | A_k`
//! is `n - |S_loc|`, the generator deficit of the subgroup of block-local
//! elements; for two blocks it reduces to `2E`.
//!
//! Graph states admit a shortcut: `E` across a cut is the GF(2) rank of the
//! cross-block submatrix of the adjacency matrix. Note that the *number* of
//! crossing edges is not a measure of anything; only the rank is exposed.

use alloc::vec::Vec;
use core::fmt;

use crate::canonical::{canonicalize, CanonicalForm};
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::pauli::PauliOperator;
use crate::stabilizer::{GraphAdjacency, Partition, StabilizerGroup};

/// How a reported value was computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Pair count of the full canonical form (with witnesses).
    CanonicalPairs,
    /// Rank arithmetic on local-subgroup kernels only.
    KernelRank,
    /// Cross-block adjacency rank of a graph state.
    GraphRank,
    /// Dense statevector arithmetic (used by external verifiers).
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::CanonicalPairs => "canonical_pairs",
            Method::KernelRank => "kernel_rank",
            Method::GraphRank => "graph_rank",
            Method::BruteForce => "brute_force",
        })
    }
}

/// Evidence accompanying a reported value, when requested.
#[derive(Clone, Debug)]
pub enum Witnesses {
    /// The full canonical form behind a bipartite entropy value.
    Canonical(CanonicalForm),
    /// Generator bases of each per-block local subgroup `S_j`, plus a basis
    /// of their joint (independent) span `S_loc`.
    LocalSubgroups { per_block: Vec<Vec<PauliOperator>>, joint: Vec<PauliOperator> },
}

/// An entanglement value together with how it was obtained.
///
/// The value is a nonnegative integer: ebits for the bipartite entropy, the
/// generator deficit `n - |S_loc|` for the multipartite monotone. It never
/// exceeds `n`, and the bipartite entropy never exceeds `min(n_A, n_B)`.
#[derive(Clone, Debug)]
pub struct EntanglementReport {
    value: usize,
    method: Method,
    witnesses: Option<Witnesses>,
}

impl EntanglementReport {
    /// The measured value, exact.
    pub fn value(&self) -> usize {
        self.value
    }

    /// The computation route that produced the value.
    pub fn method(&self) -> Method {
        self.method
    }

    /// Witness structures, present when they were requested.
    pub fn witnesses(&self) -> Option<&Witnesses> {
        self.witnesses.as_ref()
    }

    /// Consumes the report, yielding the witnesses if any.
    pub fn into_witnesses(self) -> Option<Witnesses> {
        self.witnesses
    }
}

/// Bipartite entropy of entanglement across a two-block partition, in ebits.
///
/// With `with_witnesses` the full canonical form is computed and returned as
/// witness (method [`Method::CanonicalPairs`]); the internal assertions of
/// that path check that the pair count, `n_A - |S_A|`, and `n_B - |S_B|`
/// all agree. Without witnesses only one kernel on the smaller block is
/// computed (method [`Method::KernelRank`]), which is the asymptotically
/// cheaper route.
///
/// # Errors
///
/// [`Error::NotBipartite`] for a partition without exactly two blocks,
/// [`Error::PartitionMismatch`] on a qubit-count mismatch.
pub fn entropy_bipartite(
    s: &StabilizerGroup,
    bipartition: &Partition,
    with_witnesses: bool,
) -> Result<EntanglementReport, Error> {
    if bipartition.num_blocks() != 2 {
        return Err(Error::NotBipartite { blocks: bipartition.num_blocks() });
    }
    if bipartition.num_qubits() != s.num_qubits() {
        return Err(Error::PartitionMismatch {
            expected: s.num_qubits(),
            found: bipartition.num_qubits(),
        });
    }
    if with_witnesses {
        let cf = canonicalize(s, bipartition)?;
        let value = cf.entanglement();
        return Ok(EntanglementReport {
            value,
            method: Method::CanonicalPairs,
            witnesses: Some(Witnesses::Canonical(cf)),
        });
    }
    // One kernel suffices: elements acting as identity on one block are
    // supported inside the other, so E = (other block size) - (kernel rank).
    // Restricting to the smaller block keeps the elimination narrow.
    let (restricted, other_len) = if bipartition.block_len(1) <= bipartition.block_len(0) {
        (bipartition.block(1), bipartition.block_len(0))
    } else {
        (bipartition.block(0), bipartition.block_len(1))
    };
    let value = other_len - s.kernel_subgroup(restricted).len();
    debug_assert_eq!(
        value,
        (bipartition.num_qubits() - other_len)
            - s
                .kernel_subgroup(if other_len == bipartition.block_len(0) {
                    bipartition.block(0)
                } else {
                    bipartition.block(1)
                })
                .len(),
        "the two one-sided rank formulas must agree"
    );
    Ok(EntanglementReport { value, method: Method::KernelRank, witnesses: None })
}

/// Multipartite entanglement monotone `e = n - |S_loc|` for an arbitrary
/// partition.
///
/// `S_loc` is the subgroup generated by all block-local elements. For a
/// two-block partition the value equals twice the bipartite entropy, and
/// refining a partition can only lower the value (more elements count as
/// local). With `with_witnesses` the report carries the per-block subgroup
/// bases and the joint basis.
///
/// # Errors
///
/// [`Error::PartitionMismatch`] on a qubit-count mismatch.
pub fn e_multi(
    s: &StabilizerGroup,
    partition: &Partition,
    with_witnesses: bool,
) -> Result<EntanglementReport, Error> {
    let joint = s.local_subgroup(partition)?;
    let value = s.num_qubits() - joint.len();
    let witnesses = if with_witnesses {
        let per_block = (0..partition.num_blocks())
            .map(|j| s.kernel_subgroup(partition.block(j)))
            .collect();
        Some(Witnesses::LocalSubgroups { per_block, joint })
    } else {
        None
    };
    Ok(EntanglementReport { value, method: Method::KernelRank, witnesses })
}

/// Bipartite entropy of a graph state, as the GF(2) rank of the cross-block
/// adjacency submatrix (rows in block `B`, columns in block `A`).
///
/// Always equals `entropy_bipartite` of the corresponding stabilizer group;
/// the submatrix route skips building the group.
///
/// # Errors
///
/// [`Error::NotBipartite`] for a partition without exactly two blocks,
/// [`Error::PartitionMismatch`] if the partition does not cover the graph's
/// vertex count.
pub fn graph_bipartite_rank(
    g: &GraphAdjacency,
    bipartition: &Partition,
) -> Result<usize, Error> {
    if bipartition.num_blocks() != 2 {
        return Err(Error::NotBipartite { blocks: bipartition.num_blocks() });
    }
    if bipartition.num_qubits() != g.num_vertices() {
        return Err(Error::PartitionMismatch {
            expected: g.num_vertices(),
            found: bipartition.num_qubits(),
        });
    }
    let cols = bipartition.block_indices(0);
    let rows = bipartition.block_indices(1);
    let sub: Vec<crate::bits::BitVec> = rows
        .iter()
        .map(|&v| {
            let mut row = crate::bits::BitVec::zeros(cols.len());
            for (i, &u) in cols.iter().enumerate() {
                row.set(i, g.has_edge(v, u));
            }
            row
        })
        .collect();
    if sub.is_empty() {
        return Ok(0);
    }
    Ok(BitMatrix::from_rows(&sub).rank())
}

/// True when every block of `a` lies inside some block of `b` (so `a` is a
/// refinement of `b`; every partition refines itself).
///
/// # Errors
///
/// [`Error::PartitionMismatch`] when the partitions cover different qubit
/// counts.
pub fn is_finer(a: &Partition, b: &Partition) -> Result<bool, Error> {
    if a.num_qubits() != b.num_qubits() {
        return Err(Error::PartitionMismatch {
            expected: a.num_qubits(),
            found: b.num_qubits(),
        });
    }
    Ok(a.refines(b))
}

/// All set partitions of `{0..n-1}` with at most `max_blocks` blocks, in the
/// deterministic restricted-growth-string order.
///
/// # Errors
///
/// [`Error::PartitionLimitExceeded`] beyond the enumeration cap of
/// [`Partition::ENUMERATION_LIMIT`] qubits.
pub fn all_partitions(n: usize, max_blocks: usize) -> Result<Vec<Partition>, Error> {
    Partition::enumerate(n, max_blocks)
}
