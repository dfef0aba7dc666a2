use core::fmt;

/// Errors produced by parsing and validation across the crate.
///
/// Dimension mismatches between operators that are already constructed (for
/// example multiplying Paulis of different lengths) are programming errors and
/// panic instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A Pauli string contained a character outside `I`, `X`, `Y`, `Z`.
    /// `position` is the qubit index within the operator body.
    BadCharacter { position: usize, found: char },
    /// A Pauli string had the wrong number of qubit characters.
    WrongLength { expected: usize, found: usize },
    /// A phase of `+/-i` was requested where only real signs are meaningful.
    NonRealPhase,
    /// A generator list was empty.
    EmptyGeneratorList,
    /// Generator `index` acts on a different number of qubits than generator 0.
    MixedQubitCounts { index: usize },
    /// A stabilizer group on `qubits` qubits needs exactly that many
    /// generators, but `generators` were supplied.
    WrongGeneratorCount { qubits: usize, generators: usize },
    /// Generators `i` and `j` anticommute.
    NonCommutingGenerators { i: usize, j: usize },
    /// The supplied generators are linearly dependent over GF(2).
    DependentGenerators,
    /// Some product of the supplied generators equals minus the identity.
    MinusIdentityInGroup,
    /// Measuring the identity operator is not meaningful.
    IdentityMeasurement,
    /// A partition block was empty.
    EmptyBlock { block: usize },
    /// A qubit index was outside `0..qubits`.
    QubitOutOfRange { qubit: usize, qubits: usize },
    /// A qubit index appeared in more than one place.
    DuplicateQubit { qubit: usize },
    /// A qubit index was assigned to no block.
    MissingQubit { qubit: usize },
    /// The partition covers a different number of qubits than the operator
    /// or group it was paired with.
    PartitionMismatch { expected: usize, found: usize },
    /// An operation requiring exactly two blocks received `blocks`.
    NotBipartite { blocks: usize },
    /// A graph edge `(vertex, vertex)` loops onto itself.
    SelfLoop { vertex: usize },
    /// The edge `(u, v)` was listed more than once.
    DuplicateEdge { u: usize, v: usize },
    /// An adjacency matrix was not symmetric.
    AsymmetricAdjacency,
    /// An adjacency matrix had a nonzero diagonal at `vertex`.
    NonzeroDiagonal { vertex: usize },
    /// An adjacency matrix was not square.
    NotSquare { rows: usize, cols: usize },
    /// Partition enumeration was requested for more qubits than the
    /// configured cap.
    PartitionLimitExceeded { qubits: usize, limit: usize },
    /// A partition string was malformed at `position` (byte offset).
    BadPartitionSyntax { position: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::BadCharacter { position, found } => {
                write!(f, "bad Pauli character {found:?} at qubit {position}")
            }
            Error::WrongLength { expected, found } => {
                write!(f, "Pauli string has {found} qubit characters, expected {expected}")
            }
            Error::NonRealPhase => write!(f, "phase +/-i requested where a real sign is required"),
            Error::EmptyGeneratorList => write!(f, "generator list is empty"),
            Error::MixedQubitCounts { index } => {
                write!(f, "generator {index} acts on a different number of qubits")
            }
            Error::WrongGeneratorCount { qubits, generators } => {
                write!(f, "{qubits} qubits require exactly {qubits} generators, got {generators}")
            }
            Error::NonCommutingGenerators { i, j } => {
                write!(f, "generators {i} and {j} anticommute")
            }
            Error::DependentGenerators => write!(f, "generators are linearly dependent"),
            Error::MinusIdentityInGroup => {
                write!(f, "a product of the generators equals minus the identity")
            }
            Error::IdentityMeasurement => write!(f, "cannot measure the identity operator"),
            Error::EmptyBlock { block } => write!(f, "partition block {block} is empty"),
            Error::QubitOutOfRange { qubit, qubits } => {
                write!(f, "qubit index {qubit} out of range for {qubits} qubits")
            }
            Error::DuplicateQubit { qubit } => write!(f, "qubit {qubit} listed more than once"),
            Error::MissingQubit { qubit } => write!(f, "qubit {qubit} not assigned to any block"),
            Error::PartitionMismatch { expected, found } => {
                write!(f, "partition covers {found} qubits, expected {expected}")
            }
            Error::NotBipartite { blocks } => {
                write!(f, "operation requires exactly 2 blocks, got {blocks}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::AsymmetricAdjacency => write!(f, "adjacency matrix is not symmetric"),
            Error::NonzeroDiagonal { vertex } => {
                write!(f, "adjacency matrix has a nonzero diagonal at vertex {vertex}")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "adjacency matrix is {rows}x{cols}, expected square")
            }
            Error::PartitionLimitExceeded { qubits, limit } => {
                write!(f, "partition enumeration over {qubits} qubits exceeds the cap of {limit}")
            }
            Error::BadPartitionSyntax { position } => {
                write!(f, "malformed partition string at byte {position}")
            }
        }
    }
}

impl core::error::Error for Error {}
