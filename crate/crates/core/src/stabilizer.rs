//! Validated stabilizer groups and the subgroup machinery built on them:
//! kernel subgroups (elements acting as identity on a chosen block), the
//! local subgroup of a partition, graph-state construction, Clifford
//! conjugation, and single-Pauli measurement updates.
//!
//! A `StabilizerGroup` always describes a pure n-qubit state: exactly n
//! generators, mutually commuting, independent over GF(2), real signs only,
//! and `-I` not in the generated group. Everything downstream (canonical
//! forms, entanglement measures) relies on those invariants, so they are
//! enforced at construction and after every mutating operation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitVec;
use crate::clifford::CliffordGate;
use crate::error::Error;
use crate::gf2::{BitMatrix, Rref};
use crate::pauli::PauliOperator;
use crate::rng::SplitMix64;

/// A measurement outcome or generator sign: the eigenvalue `+1` or `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The phase exponent this sign contributes: 0 or 2.
    pub fn phase(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 2,
        }
    }

    /// Interprets a real phase exponent as a sign.
    pub fn from_phase(phase: u8) -> Option<Sign> {
        match phase & 3 {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A partition of the qubits `{0..n-1}` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    n: usize,
    blocks: Vec<BitVec>,
}

impl Partition {
    /// Default cap on [`Partition::enumerate`], where the Bell numbers take
    /// over (B(10) = 115975).
    pub const ENUMERATION_LIMIT: usize = 10;

    /// Builds a partition from explicit index blocks, validating that the
    /// blocks are nonempty, disjoint, in range, and cover every qubit.
    pub fn new(n: usize, blocks: &[&[usize]]) -> Result<Partition, Error> {
        let mut seen = BitVec::zeros(n);
        let mut masks = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { block: b });
            }
            let mut mask = BitVec::zeros(n);
            for &q in *block {
                if q >= n {
                    return Err(Error::QubitOutOfRange { qubit: q, qubits: n });
                }
                if seen.get(q) {
                    return Err(Error::DuplicateQubit { qubit: q });
                }
                seen.set(q, true);
                mask.set(q, true);
            }
            masks.push(mask);
        }
        for q in 0..n {
            if !seen.get(q) {
                return Err(Error::MissingQubit { qubit: q });
            }
        }
        Ok(Partition { n, blocks: masks })
    }

    /// The two-block partition with `block_a` against its complement.
    ///
    /// `block_a` must be nonempty and proper (its complement nonempty too).
    pub fn bipartition(n: usize, block_a: &[usize]) -> Result<Partition, Error> {
        let rest: Vec<usize> = {
            let mut mask = BitVec::zeros(n);
            for &q in block_a {
                if q >= n {
                    return Err(Error::QubitOutOfRange { qubit: q, qubits: n });
                }
                mask.set(q, true);
            }
            (0..n).filter(|&q| !mask.get(q)).collect()
        };
        Partition::new(n, &[block_a, &rest])
    }

    /// The finest partition: every qubit its own block.
    pub fn singletons(n: usize) -> Partition {
        let blocks: Vec<BitVec> = (0..n).map(|q| BitVec::from_indices(n, &[q])).collect();
        Partition { n, blocks }
    }

    /// Parses the text form: blocks separated by `|`, indices separated by
    /// `,` — e.g. `0,1|2` for three qubits. Every index in `0..n-1` must
    /// appear exactly once.
    pub fn parse(text: &str, n: usize) -> Result<Partition, Error> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0;
        for segment in text.split('|') {
            let mut indices = Vec::new();
            let mut tok_offset = offset;
            for token in segment.split(',') {
                let trimmed = token.trim();
                let position = tok_offset + (token.len() - token.trim_start().len());
                if trimmed.is_empty() {
                    return Err(Error::BadPartitionSyntax { position });
                }
                match trimmed.parse::<usize>() {
                    Ok(q) => indices.push(q),
                    Err(_) => return Err(Error::BadPartitionSyntax { position }),
                }
                tok_offset += token.len() + 1;
            }
            blocks.push(indices);
            offset += segment.len() + 1;
        }
        let views: Vec<&[usize]> = blocks.iter().map(|b| b.as_slice()).collect();
        Partition::new(n, &views)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block `i` as a qubit mask of length `n`.
    pub fn block(&self, i: usize) -> &BitVec {
        &self.blocks[i]
    }

    pub fn blocks(&self) -> &[BitVec] {
        &self.blocks
    }

    /// Ascending qubit indices of block `i`.
    pub fn block_indices(&self, i: usize) -> Vec<usize> {
        self.blocks[i].iter_ones().collect()
    }

    /// Number of qubits in block `i`.
    pub fn block_len(&self, i: usize) -> usize {
        self.blocks[i].count_ones()
    }

    /// True when every block of `self` lies inside some block of `coarser`
    /// (the refinement order on partitions; reflexive).
    ///
    /// Panics if the qubit counts differ.
    pub fn refines(&self, coarser: &Partition) -> bool {
        assert_eq!(self.n, coarser.n, "partition qubit counts differ");
        self.blocks
            .iter()
            .all(|mine| coarser.blocks.iter().any(|theirs| mine.is_subset(theirs)))
    }

    /// All set partitions of `{0..n-1}` with at most `max_blocks` blocks, in
    /// restricted-growth-string lexicographic order. Within each partition,
    /// blocks are ordered by first appearance, so the order is deterministic.
    ///
    /// Refuses `n` beyond [`Partition::ENUMERATION_LIMIT`] — the count is the
    /// Bell number, which grows too fast for an exhaustive sweep.
    pub fn enumerate(n: usize, max_blocks: usize) -> Result<Vec<Partition>, Error> {
        if n > Self::ENUMERATION_LIMIT {
            return Err(Error::PartitionLimitExceeded { qubits: n, limit: Self::ENUMERATION_LIMIT });
        }
        let mut out = Vec::new();
        if n == 0 {
            return Ok(out);
        }
        // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[..i]).
        let mut a = vec![0usize; n];
        loop {
            let k = a.iter().copied().max().unwrap_or(0) + 1;
            if k <= max_blocks {
                let mut blocks = vec![BitVec::zeros(n); k];
                for (q, &label) in a.iter().enumerate() {
                    blocks[label].set(q, true);
                }
                out.push(Partition { n, blocks });
            }
            // Advance to the next restricted growth string.
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
                if a[i] <= prefix_max {
                    a[i] += 1;
                    for entry in a.iter_mut().skip(i + 1) {
                        *entry = 0;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }
}

impl fmt::Display for Partition {
    /// Round-trips through [`Partition::parse`]: `0,1|2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            for (i, q) in block.iter_ones().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{q}")?;
            }
        }
        Ok(())
    }
}

/// Adjacency matrix of a simple undirected graph: symmetric, zero diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphAdjacency {
    n: usize,
    gamma: BitMatrix,
}

impl GraphAdjacency {
    /// Validates and wraps an explicit adjacency matrix.
    pub fn from_matrix(gamma: BitMatrix) -> Result<GraphAdjacency, Error> {
        if gamma.rows() != gamma.cols() {
            return Err(Error::NotSquare { rows: gamma.rows(), cols: gamma.cols() });
        }
        let n = gamma.rows();
        for v in 0..n {
            if gamma.get(v, v) {
                return Err(Error::NonzeroDiagonal { vertex: v });
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if gamma.get(u, v) != gamma.get(v, u) {
                    return Err(Error::AsymmetricAdjacency);
                }
            }
        }
        Ok(GraphAdjacency { n, gamma })
    }

    /// Builds the adjacency matrix from an undirected edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<GraphAdjacency, Error> {
        let mut gamma = BitMatrix::zeros(n, n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::QubitOutOfRange { qubit: u, qubits: n });
            }
            if v >= n {
                return Err(Error::QubitOutOfRange { qubit: v, qubits: n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if gamma.get(u, v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            gamma.set(u, v, true);
            gamma.set(v, u, true);
        }
        Ok(GraphAdjacency { n, gamma })
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.gamma.get(u, v)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.gamma
    }

    /// Neighbor mask of vertex `v`.
    pub fn neighbors(&self, v: usize) -> BitVec {
        self.gamma.row(v)
    }

    /// Ascending edge list `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.gamma.row(u).iter_ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Result of measuring a Pauli observable on a stabilizer state.
#[derive(Clone, Debug)]
pub struct MeasurementResult {
    /// The post-measurement stabilizer group.
    pub state: StabilizerGroup,
    /// The measured eigenvalue.
    pub outcome: Sign,
    /// True when the outcome was forced by the state (the observable, up to
    /// sign, is in the group), in which case `state` is unchanged.
    pub deterministic: bool,
}

/// An n-qubit pure stabilizer state, represented by `n` independent,
/// mutually commuting Pauli generators with real signs and `-I` excluded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizerGroup {
    gens: Vec<PauliOperator>,
}

impl StabilizerGroup {
    /// Validates a generator list and wraps it.
    ///
    /// Checks, in order: nonempty; uniform qubit count; real signs; pairwise
    /// commutation; independence over GF(2) — distinguishing a redundant
    /// generator (some product collapses to `+I`) from an inconsistent one
    /// (a product collapses to `-I`, which stabilizes nothing); and finally
    /// that the count equals the qubit count (pure state).
    pub fn new(gens: Vec<PauliOperator>) -> Result<StabilizerGroup, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        let n = gens[0].num_qubits();
        for (index, g) in gens.iter().enumerate() {
            if g.num_qubits() != n {
                return Err(Error::MixedQubitCounts { index });
            }
        }
        if gens.iter().any(|g| !g.has_real_phase()) {
            return Err(Error::NonRealPhase);
        }
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                if gens[i].anticommutes(&gens[j]) {
                    return Err(Error::NonCommutingGenerators { i, j });
                }
            }
        }
        let matrix = symplectic_rows(&gens);
        let rref = matrix.rref();
        if rref.pivots.len() < gens.len() {
            // Some combination of generators has trivial X/Z bits. Its exact
            // phase decides between redundancy and inconsistency.
            for combo in rref.transform.row_iter().skip(rref.pivots.len()) {
                let product = expand_combo(&gens, &combo);
                debug_assert!(product.is_identity_string());
                if product.phase() == 2 {
                    return Err(Error::MinusIdentityInGroup);
                }
            }
            return Err(Error::DependentGenerators);
        }
        if gens.len() != n {
            return Err(Error::WrongGeneratorCount { qubits: n, generators: gens.len() });
        }
        Ok(StabilizerGroup { gens })
    }

    /// Parses one Pauli string per line-entry; the qubit count is inferred
    /// from the first string.
    pub fn from_strings(strings: &[&str]) -> Result<StabilizerGroup, Error> {
        if strings.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        let first = strings[0];
        let n = first.strip_prefix(['+', '-']).unwrap_or(first).chars().count();
        let gens = strings
            .iter()
            .map(|s| PauliOperator::parse(s, n))
            .collect::<Result<Vec<_>, Error>>()?;
        StabilizerGroup::new(gens)
    }

    /// The graph state of `g`: generator `v` is `X` on vertex `v` and `Z` on
    /// each neighbor, all signs `+1`. Such lists are valid by construction,
    /// so no validation pass runs.
    pub fn from_graph(g: &GraphAdjacency) -> StabilizerGroup {
        let n = g.num_vertices();
        assert!(n > 0, "graph state needs at least one vertex");
        let gens = (0..n)
            .map(|v| PauliOperator::from_parts(BitVec::from_indices(n, &[v]), g.neighbors(v), 0))
            .collect();
        StabilizerGroup { gens }
    }

    /// The all-zeros state `|0..0>`: single-qubit `Z` on every qubit.
    pub fn zero_state(n: usize) -> StabilizerGroup {
        assert!(n > 0, "state needs at least one qubit");
        let gens = (0..n)
            .map(|q| PauliOperator::from_parts(BitVec::zeros(n), BitVec::from_indices(n, &[q]), 0))
            .collect();
        StabilizerGroup { gens }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.gens[0].num_qubits()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &PauliOperator {
        &self.gens[i]
    }

    /// The `n x 2n` GF(2) matrix whose row `i` is `[x_i | z_i]`.
    pub fn symplectic_matrix(&self) -> BitMatrix {
        symplectic_rows(&self.gens)
    }

    /// Generators of the subgroup of elements acting as identity on every
    /// qubit of `block` (a length-n mask): the kernel of restriction to the
    /// block, expanded back into concrete operators with exact signs.
    ///
    /// The returned list is independent; it is empty when no nontrivial
    /// element avoids the block.
    pub fn kernel_subgroup(&self, block: &BitVec) -> Vec<PauliOperator> {
        assert_eq!(block.len(), self.num_qubits(), "block mask length mismatch");
        let restricted: Vec<PauliOperator> =
            self.gens.iter().map(|g| g.restrict(block)).collect();
        let rref = symplectic_rows(&restricted).rref();
        let rank = rref.pivots.len();
        rref.transform
            .row_iter()
            .skip(rank)
            .map(|combo| expand_combo(&self.gens, &combo))
            .collect()
    }

    /// Generators of the local subgroup of `partition`: the product of the
    /// kernel subgroups of all blocks, reduced to an independent list. Its
    /// length is the local-subgroup rank.
    pub fn local_subgroup(&self, partition: &Partition) -> Result<Vec<PauliOperator>, Error> {
        if partition.num_qubits() != self.num_qubits() {
            return Err(Error::PartitionMismatch {
                expected: self.num_qubits(),
                found: partition.num_qubits(),
            });
        }
        let mut reducer = IndependentSet::new(2 * self.num_qubits());
        let mut out = Vec::new();
        for block in partition.blocks() {
            for op in self.kernel_subgroup(block) {
                if reducer.insert(op.symplectic_row()) {
                    out.push(op);
                }
                // A dependent element is exactly the product of already-kept
                // ones: same bits, and matching sign because the group
                // contains no -I. Dropping it loses nothing.
            }
        }
        Ok(out)
    }

    /// True when `op` (with its exact sign) is an element of the group.
    pub fn contains(&self, op: &PauliOperator) -> bool {
        assert_eq!(op.num_qubits(), self.num_qubits(), "qubit count mismatch");
        let rref = self.symplectic_matrix().rref();
        match solve_membership(&rref, &op.symplectic_row()) {
            Some(combo) => expand_combo(&self.gens, &combo).phase() == op.phase(),
            None => false,
        }
    }

    /// Measures the Pauli observable `m` (sign included) on the state.
    ///
    /// If `m` commutes with every generator the outcome is determined by the
    /// state and the group is returned unchanged. Otherwise the outcome is
    /// `forced_outcome` if given (useful for reproducing a specific branch)
    /// or a fair coin from `rng`; the lowest-index anticommuting generator
    /// is replaced by `(outcome) * m` and every other anticommuting
    /// generator is multiplied by the replaced one.
    pub fn measure_pauli(
        &self,
        m: &PauliOperator,
        forced_outcome: Option<Sign>,
        rng: &mut SplitMix64,
    ) -> Result<MeasurementResult, Error> {
        if m.num_qubits() != self.num_qubits() {
            return Err(Error::WrongLength { expected: self.num_qubits(), found: m.num_qubits() });
        }
        if !m.has_real_phase() {
            return Err(Error::NonRealPhase);
        }
        if m.is_identity_string() {
            return Err(Error::IdentityMeasurement);
        }
        let anti: Vec<usize> =
            (0..self.gens.len()).filter(|&i| self.gens[i].anticommutes(m)).collect();
        match anti.split_first() {
            None => {
                // m commutes with the whole group, so the group contains
                // m or -m; the stored sign picks the outcome.
                let rref = self.symplectic_matrix().rref();
                let combo = solve_membership(&rref, &m.symplectic_row())
                    .expect("a full stabilizer group contains every commuting Pauli up to sign");
                let member = expand_combo(&self.gens, &combo);
                let outcome =
                    if member.phase() == m.phase() { Sign::Plus } else { Sign::Minus };
                Ok(MeasurementResult { state: self.clone(), outcome, deterministic: true })
            }
            Some((&first, rest)) => {
                let outcome = forced_outcome.unwrap_or_else(|| {
                    if rng.next_bool() {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                });
                let mut gens = self.gens.clone();
                for &i in rest {
                    gens[i] = gens[i].multiply(&self.gens[first]);
                }
                gens[first] = m.with_phase((m.phase() + outcome.phase()) & 3);
                let state = StabilizerGroup::new(gens)
                    .expect("measurement update preserves group validity");
                Ok(MeasurementResult { state, outcome, deterministic: false })
            }
        }
    }

    /// The group conjugated by a Clifford circuit (gates applied to states
    /// in list order). Conjugation preserves every group invariant, so the
    /// result is built directly.
    pub fn conjugated(&self, circuit: &[CliffordGate]) -> StabilizerGroup {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h.apply_circuit(circuit);
                h
            })
            .collect();
        StabilizerGroup { gens }
    }
}

/// Stacks the symplectic rows of a generator list into a matrix. An empty
/// list yields a 0 x 0 matrix.
fn symplectic_rows(gens: &[PauliOperator]) -> BitMatrix {
    let rows: Vec<BitVec> = gens.iter().map(|g| g.symplectic_row()).collect();
    BitMatrix::from_rows(&rows)
}

/// Product of `gens[i]` over the set bits of `combo`, ascending, with exact
/// phase accumulation.
fn expand_combo(gens: &[PauliOperator], combo: &BitVec) -> PauliOperator {
    let n = gens[0].num_qubits();
    let mut out = PauliOperator::identity(n);
    for i in combo.iter_ones() {
        out.mul_assign(&gens[i]);
    }
    out
}

/// Expresses `row` as a combination of the matrix rows behind `rref`, if
/// possible. Returns the combination over original row indices.
fn solve_membership(rref: &Rref, row: &BitVec) -> Option<BitVec> {
    let mut residue = row.clone();
    let mut combo = BitVec::zeros(rref.transform.rows());
    for (i, &pivot) in rref.pivots.iter().enumerate() {
        if residue.get(pivot) {
            residue.xor_assign(&rref.reduced.row(i));
            combo.xor_assign(&rref.transform.row(i));
        }
    }
    residue.is_zero().then_some(combo)
}

/// Incremental GF(2) independence filter over fixed-width rows.
struct IndependentSet {
    width: usize,
    /// Reduced rows kept so far, each with its pivot column.
    rows: Vec<(usize, BitVec)>,
}

impl IndependentSet {
    fn new(width: usize) -> IndependentSet {
        IndependentSet { width, rows: Vec::new() }
    }

    /// Returns true (and absorbs the row) when `row` is independent of
    /// everything inserted so far.
    fn insert(&mut self, row: BitVec) -> bool {
        debug_assert_eq!(row.len(), self.width);
        let mut r = row;
        for (pivot, basis) in &self.rows {
            if r.get(*pivot) {
                r.xor_assign(basis);
            }
        }
        match r.first_one() {
            Some(pivot) => {
                self.rows.push((pivot, r));
                true
            }
            None => false,
        }
    }
}
