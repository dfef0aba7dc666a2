//! Canonical generator form of a stabilizer group for a bipartition.
//!
//! For any stabilizer group `S` on qubits split into blocks `A` and `B`, the
//! generators can be reorganized into three layers:
//!
//! * generators supported entirely inside `A` (a basis of the subgroup `S_A`
//!   of elements acting as identity on `B`),
//! * generators supported entirely inside `B` (a basis of `S_B`), and
//! * `p` ordered pairs `(g_k, gbar_k)` of generators straddling the cut,
//!   whose restrictions to `A` anticommute within each pair and commute with
//!   the restriction of every other listed operator (and symmetrically on
//!   `B`).
//!
//! The count `p` equals the bipartite entanglement of the stabilizer state in
//! ebits, and satisfies `|S_A| + |S_B| + 2p = n` together with
//! `p = n_A - |S_A| = n_B - |S_B|`.
//!
//! The pair layer is found with a pairing sweep over the anticommutation
//! structure of the generators' `A`-restrictions; [`compatibility`] exposes
//! the same sweep for arbitrary independent Pauli lists, reporting how large
//! an abelian corner the list has. [`extract_epr`] turns a canonical form
//! into explicit one-sided Clifford circuits that map the state onto `p`
//! Bell pairs across the cut plus single-qubit `Z` eigenstates elsewhere.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bits::BitVec;
use crate::clifford::CliffordGate;
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::pauli::PauliOperator;
use crate::stabilizer::{Partition, StabilizerGroup};

/// Result of the pairing sweep over an independent list of Pauli operators.
///
/// The reorganized list consists of [`pairs`](CompatibilityIndices::pairs) —
/// `p` ordered pairs that anticommute only within themselves — followed by
/// [`central`](CompatibilityIndices::central) — `c - p` elements commuting
/// with every other listed operator. `c` is the compatibility index (the
/// rank of a largest abelian subgroup of the generated group) and
/// `p = m - c` the incompatibility index; `p <= c` always holds.
#[derive(Clone, Debug)]
pub struct CompatibilityIndices {
    c: usize,
    p: usize,
    pairs: Vec<(PauliOperator, PauliOperator)>,
    central: Vec<PauliOperator>,
}

impl CompatibilityIndices {
    /// Compatibility index: `m - p` for an input list of `m` operators.
    pub fn c(&self) -> usize {
        self.c
    }

    /// Incompatibility index: half the GF(2) rank of the anticommutation
    /// Gram matrix of the input list.
    pub fn p(&self) -> usize {
        self.p
    }

    /// The `p` extracted pairs; the two members of a pair anticommute with
    /// each other and commute with everything else in the reorganized list.
    pub fn pairs(&self) -> &[(PauliOperator, PauliOperator)] {
        &self.pairs
    }

    /// The `c - p` unpaired elements; each commutes with every other listed
    /// operator.
    pub fn central(&self) -> &[PauliOperator] {
        &self.central
    }
}

/// Computes the compatibility and incompatibility indices of an independent
/// list of Pauli operators, together with a reorganized generator list
/// realizing them.
///
/// The input operators must be independent over GF(2) (reduce them first
/// otherwise) and act on a common qubit count. The reorganized list spans
/// the same operators as the input up to phase; when the inputs mutually
/// commute — the stabilizer-group case — every product formed during the
/// sweep is real and the signed span is preserved exactly.
///
/// # Errors
///
/// [`Error::MixedQubitCounts`] if the operators disagree on the qubit count,
/// [`Error::DependentGenerators`] if they are linearly dependent.
pub fn compatibility(gens: &[PauliOperator]) -> Result<CompatibilityIndices, Error> {
    if gens.is_empty() {
        return Ok(CompatibilityIndices { c: 0, p: 0, pairs: Vec::new(), central: Vec::new() });
    }
    let n = gens[0].num_qubits();
    for (index, g) in gens.iter().enumerate() {
        if g.num_qubits() != n {
            return Err(Error::MixedQubitCounts { index });
        }
    }
    let m = gens.len();
    let rows: Vec<BitVec> = gens.iter().map(PauliOperator::symplectic_row).collect();
    if BitMatrix::from_rows(&rows).rank() != m {
        return Err(Error::DependentGenerators);
    }

    // p is half the rank of the anticommutation Gram matrix; the rank is
    // always even because the matrix is symmetric with zero diagonal.
    let gram: Vec<BitVec> = gens
        .iter()
        .map(|g| {
            let mut row = BitVec::zeros(m);
            for (j, h) in gens.iter().enumerate() {
                row.set(j, g.anticommutes(h));
            }
            row
        })
        .collect();
    let gram_rank = BitMatrix::from_rows(&gram).rank();
    debug_assert_eq!(gram_rank % 2, 0, "anticommutation Gram rank is even");
    let p = gram_rank / 2;
    let c = m - p;

    let (pairs, central) = pair_sweep(gens.to_vec(), &BitVec::ones(n));
    assert_eq!(pairs.len(), p, "pairing sweep must extract exactly p pairs");
    assert!(p <= c, "incompatibility can never exceed compatibility");
    Ok(CompatibilityIndices { c, p, pairs, central })
}

/// Reorganizes `ops` into anticommuting pairs plus a commuting remainder,
/// where commutation is evaluated on the restrictions to `mask`.
///
/// Repeatedly takes the first remaining operator; if some later operator's
/// restriction anticommutes with it, the earliest such partner is extracted
/// with it as a pair and every remaining operator is multiplied by pair
/// members until its restriction commutes with both. Otherwise the operator
/// is moved to the commuting remainder. Multiplication keeps the generated
/// group (phases included) unchanged and preserves independence.
fn pair_sweep(
    ops: Vec<PauliOperator>,
    mask: &BitVec,
) -> (Vec<(PauliOperator, PauliOperator)>, Vec<PauliOperator>) {
    let mut rest = ops;
    let mut pairs = Vec::new();
    let mut central = Vec::new();
    while !rest.is_empty() {
        let head = rest.remove(0);
        match rest.iter().position(|o| o.anticommutes_on(&head, mask)) {
            None => central.push(head),
            Some(j) => {
                let partner = rest.remove(j);
                for o in rest.iter_mut() {
                    // Clearing against the partner first makes the second
                    // test see the already-corrected operator.
                    if o.anticommutes_on(&head, mask) {
                        o.mul_assign(&partner);
                    }
                    if o.anticommutes_on(&partner, mask) {
                        o.mul_assign(&head);
                    }
                }
                pairs.push((head, partner));
            }
        }
    }
    (pairs, central)
}

/// Incremental GF(2) eliminator that carries whole Pauli operators, so that
/// row reduction happens through actual operator multiplication and phases
/// stay exact.
struct OpEliminator {
    rows: Vec<(usize, BitVec, PauliOperator)>,
}

impl OpEliminator {
    fn new() -> OpEliminator {
        OpEliminator { rows: Vec::new() }
    }

    /// Reduces `op` against the stored basis. Stores the reduced operator
    /// and returns it when it is independent of the basis; returns `None`
    /// when it reduces to the identity.
    ///
    /// Every inserted operator must belong to one fixed stabilizer group
    /// (mutually commuting, no minus identity); that keeps all intermediate
    /// products real and makes a dependent reduction end at exactly `+I`.
    fn insert(&mut self, mut op: PauliOperator) -> Option<PauliOperator> {
        let mut row = op.symplectic_row();
        for (pivot, basis_row, basis_op) in &self.rows {
            if row.get(*pivot) {
                row.xor_assign(basis_row);
                op.mul_assign(basis_op);
            }
        }
        match row.first_one() {
            None => {
                debug_assert_eq!(op.phase(), 0, "dependent products in a group carry no sign");
                None
            }
            Some(pivot) => {
                self.rows.push((pivot, row, op.clone()));
                Some(op)
            }
        }
    }
}

/// A stabilizer group reorganized for one bipartition: `A`-local generators,
/// `B`-local generators, and `p` cut-straddling pairs.
///
/// Invariants (established by [`canonicalize`], relied on by consumers):
///
/// * `local_a.len() + local_b.len() + 2 * pairs.len() == n`;
/// * `local_a` elements act as identity on `B` and form a basis of the
///   subgroup of such elements; symmetrically for `local_b`;
/// * all listed operators commute as full operators and generate the
///   original group, phases included;
/// * within each pair the `A`-restrictions anticommute; every other
///   restriction pairing (on `A` or on `B`) commutes;
/// * each pair member acts non-trivially on both blocks.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    bipartition: Partition,
    local_a: Vec<PauliOperator>,
    local_b: Vec<PauliOperator>,
    pairs: Vec<(PauliOperator, PauliOperator)>,
}

impl CanonicalForm {
    /// The two-block partition this form was computed for.
    pub fn bipartition(&self) -> &Partition {
        &self.bipartition
    }

    /// Generators supported entirely in block `A` (block 0).
    pub fn local_a(&self) -> &[PauliOperator] {
        &self.local_a
    }

    /// Generators supported entirely in block `B` (block 1).
    pub fn local_b(&self) -> &[PauliOperator] {
        &self.local_b
    }

    /// The cut-straddling generator pairs `(g_k, gbar_k)`.
    pub fn pairs(&self) -> &[(PauliOperator, PauliOperator)] {
        &self.pairs
    }

    /// Number of qubits of the underlying group.
    pub fn num_qubits(&self) -> usize {
        self.bipartition.num_qubits()
    }

    /// Bipartite entanglement in ebits: the number of pairs.
    pub fn entanglement(&self) -> usize {
        self.pairs.len()
    }

    /// The full reorganized generator list: `A`-local, then `B`-local, then
    /// the pairs flattened in order.
    pub fn generators(&self) -> Vec<PauliOperator> {
        let mut out = Vec::with_capacity(self.num_qubits());
        out.extend(self.local_a.iter().cloned());
        out.extend(self.local_b.iter().cloned());
        for (g, gbar) in &self.pairs {
            out.push(g.clone());
            out.push(gbar.clone());
        }
        out
    }
}

/// Reorganizes the generators of `s` into the canonical layered form for a
/// two-block partition.
///
/// The local layers are the kernel bases of the restriction maps; the pair
/// layer is completed from the original generators by elimination against
/// the locals and then paired by the sweep on `A`-restrictions. Within a
/// pair, the member whose `A`-restriction has the smaller Z-major string
/// order comes first; pairs are sorted by the lowest-index `A`-qubit their
/// first member touches. All choices are deterministic, so equal inputs give
/// identical output.
///
/// # Errors
///
/// [`Error::NotBipartite`] if the partition does not have exactly two
/// blocks, [`Error::PartitionMismatch`] if it covers a different qubit
/// count.
///
/// # Panics
///
/// Asserts internally that the shared-sector generators pair up completely
/// and that the layer sizes satisfy the counting identities; a failure would
/// indicate a bug, not bad input.
pub fn canonicalize(s: &StabilizerGroup, bipartition: &Partition) -> Result<CanonicalForm, Error> {
    if bipartition.num_blocks() != 2 {
        return Err(Error::NotBipartite { blocks: bipartition.num_blocks() });
    }
    if bipartition.num_qubits() != s.num_qubits() {
        return Err(Error::PartitionMismatch {
            expected: s.num_qubits(),
            found: bipartition.num_qubits(),
        });
    }
    let n = s.num_qubits();
    let mask_a = bipartition.block(0);
    let mask_b = bipartition.block(1);
    let local_a = s.kernel_subgroup(mask_b);
    let local_b = s.kernel_subgroup(mask_a);

    // Complete the locals to a full generating set: original generators are
    // reduced against the locals (and earlier survivors) by operator
    // multiplication; the survivors span the cut-straddling sector.
    let mut elim = OpEliminator::new();
    for op in local_a.iter().chain(local_b.iter()) {
        let kept = elim.insert(op.clone());
        debug_assert!(kept.is_some(), "kernel bases are independent");
    }
    let mut shared = Vec::new();
    for g in s.generators() {
        if let Some(reduced) = elim.insert(g.clone()) {
            shared.push(reduced);
        }
    }
    assert_eq!(
        local_a.len() + local_b.len() + shared.len(),
        n,
        "completion must restore the full generator count"
    );

    let (mut pairs, central) = pair_sweep(shared, mask_a);
    assert!(
        central.is_empty(),
        "a cut-straddling generator failed to pair up; this is a bug"
    );
    assert_eq!(pairs.len(), bipartition.block_len(0) - local_a.len());
    assert_eq!(pairs.len(), bipartition.block_len(1) - local_b.len());

    for pair in pairs.iter_mut() {
        debug_assert!(
            !pair.0.is_identity_on(mask_a)
                && !pair.0.is_identity_on(mask_b)
                && !pair.1.is_identity_on(mask_a)
                && !pair.1.is_identity_on(mask_b),
            "pair members straddle the cut"
        );
        let first = pair.0.restrict(mask_a);
        let second = pair.1.restrict(mask_a);
        if first.cmp_string_z_major(&second) == Ordering::Greater {
            core::mem::swap(&mut pair.0, &mut pair.1);
        }
    }
    pairs.sort_by(|left, right| {
        let key_left = left.0.first_support_on(mask_a);
        let key_right = right.0.first_support_on(mask_a);
        key_left.cmp(&key_right).then_with(|| {
            left.0.restrict(mask_a).cmp_string_z_major(&right.0.restrict(mask_a))
        })
    });

    Ok(CanonicalForm { bipartition: bipartition.clone(), local_a, local_b, pairs })
}

/// One-sided Clifford circuits turning a canonical form into explicit Bell
/// pairs, produced by [`extract_epr`].
///
/// Conjugating the original group by `circuit_a` followed by `circuit_b`
/// (their supports are disjoint, so the order is immaterial) yields the
/// group generated by `+X_a X_b` and `+Z_a Z_b` on each entry of
/// `pair_sites` and `+Z` on every remaining qubit — a product of Bell pairs
/// across the cut and single-qubit basis states.
#[derive(Clone, Debug)]
pub struct EprExtraction {
    num_qubits: usize,
    circuit_a: Vec<CliffordGate>,
    circuit_b: Vec<CliffordGate>,
    pair_sites: Vec<(usize, usize)>,
}

impl EprExtraction {
    /// Gates supported on block `A` only.
    pub fn circuit_a(&self) -> &[CliffordGate] {
        &self.circuit_a
    }

    /// Gates supported on block `B` only.
    pub fn circuit_b(&self) -> &[CliffordGate] {
        &self.circuit_b
    }

    /// The designated Bell sites, one `(qubit in A, qubit in B)` entry per
    /// extracted pair.
    pub fn pair_sites(&self) -> &[(usize, usize)] {
        &self.pair_sites
    }

    /// Number of qubits of the underlying group.
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// The combined circuit, `A`-side gates first.
    pub fn combined_circuit(&self) -> Vec<CliffordGate> {
        let mut out = self.circuit_a.clone();
        out.extend(self.circuit_b.iter().copied());
        out
    }

    /// The stabilizer group the circuits map the state onto: `X X` and
    /// `Z Z` across each Bell site pair, `+Z` on every other qubit.
    pub fn target_group(&self) -> StabilizerGroup {
        let n = self.num_qubits;
        let mut in_pair = BitVec::zeros(n);
        let mut gens = Vec::with_capacity(n);
        for &(a, b) in &self.pair_sites {
            in_pair.set(a, true);
            in_pair.set(b, true);
            gens.push(two_site(n, a, b, true));
            gens.push(two_site(n, a, b, false));
        }
        for q in 0..n {
            if !in_pair.get(q) {
                gens.push(single_z(n, q));
            }
        }
        StabilizerGroup::new(gens).expect("Bell-plus-basis generators form a valid group")
    }
}

/// `X_a X_b` when `x` is true, else `Z_a Z_b`.
fn two_site(n: usize, a: usize, b: usize, x: bool) -> PauliOperator {
    let mut op = PauliOperator::identity(n);
    op.set_xz(a, x, !x);
    op.set_xz(b, x, !x);
    op
}

fn single_z(n: usize, q: usize) -> PauliOperator {
    let mut op = PauliOperator::identity(n);
    op.set_xz(q, false, true);
    op
}

/// Applies `gate` to every working operator and records it.
fn emit(work: &mut [PauliOperator], circuit: &mut Vec<CliffordGate>, gate: CliffordGate) {
    for op in work.iter_mut() {
        op.apply_gate(&gate);
    }
    circuit.push(gate);
}

/// Ascending indices of `mask`-qubits where `op` is non-identity.
fn side_support(op: &PauliOperator, mask: &BitVec) -> Vec<usize> {
    let mut s = op.support();
    s.and_assign(mask);
    s.iter_ones().collect()
}

/// Synthesizes the one-sided Clifford circuits that pull the canonical
/// form's pairs onto designated Bell sites.
///
/// Pair `k` lands on the `k`-th lowest qubit of each block; each local
/// generator becomes `+Z` on one leftover qubit of its block. Residual minus
/// signs are cleared with single-qubit `X`/`Z` gates appended to the owning
/// side, so the final generators match the target of
/// [`EprExtraction::target_group`] exactly (the function asserts this).
pub fn extract_epr(cf: &CanonicalForm) -> EprExtraction {
    let n = cf.num_qubits();
    let p = cf.pairs.len();
    let count_a = cf.local_a.len();

    // Working copies in a fixed layout: pair members interleaved, then the
    // A-local and B-local generators. Every emitted gate conjugates all of
    // them, so the list always holds the current generators.
    let mut work: Vec<PauliOperator> = Vec::with_capacity(n);
    for (g, gbar) in &cf.pairs {
        work.push(g.clone());
        work.push(gbar.clone());
    }
    work.extend(cf.local_a.iter().cloned());
    work.extend(cf.local_b.iter().cloned());

    let sites_a = cf.bipartition.block_indices(0);
    let sites_b = cf.bipartition.block_indices(1);
    let mut circuit_a = Vec::new();
    let mut circuit_b = Vec::new();

    let local_sites_a = reduce_side(
        &mut work,
        &mut circuit_a,
        p,
        2 * p,
        count_a,
        cf.bipartition.block(0),
        &sites_a,
    );
    let local_sites_b = reduce_side(
        &mut work,
        &mut circuit_b,
        p,
        2 * p + count_a,
        cf.local_b.len(),
        cf.bipartition.block(1),
        &sites_b,
    );

    // Sign pass: every operator now equals its target up to a real phase.
    // Each fix gate anticommutes with exactly one final generator, so the
    // fixes are independent.
    for k in 0..p {
        let a = sites_a[k];
        if work[2 * k].phase() == 2 {
            emit(&mut work, &mut circuit_a, CliffordGate::Z(a));
        }
        if work[2 * k + 1].phase() == 2 {
            emit(&mut work, &mut circuit_a, CliffordGate::X(a));
        }
    }
    for (i, &s) in local_sites_a.iter().enumerate() {
        if work[2 * p + i].phase() == 2 {
            emit(&mut work, &mut circuit_a, CliffordGate::X(s));
        }
    }
    for (j, &s) in local_sites_b.iter().enumerate() {
        if work[2 * p + count_a + j].phase() == 2 {
            emit(&mut work, &mut circuit_b, CliffordGate::X(s));
        }
    }

    // Self-check: the synthesis is exact, not approximate.
    for k in 0..p {
        assert_eq!(work[2 * k], two_site(n, sites_a[k], sites_b[k], true));
        assert_eq!(work[2 * k + 1], two_site(n, sites_a[k], sites_b[k], false));
    }
    for (i, &s) in local_sites_a.iter().enumerate() {
        assert_eq!(work[2 * p + i], single_z(n, s));
    }
    for (j, &s) in local_sites_b.iter().enumerate() {
        assert_eq!(work[2 * p + count_a + j], single_z(n, s));
    }

    let pair_sites = (0..p).map(|k| (sites_a[k], sites_b[k])).collect();
    EprExtraction { num_qubits: n, circuit_a, circuit_b, pair_sites }
}

/// Reduces one side of the layout: pair `k`'s members become `X` and `Z` on
/// `sites[k]` (up to sign), and each of this side's local generators becomes
/// a signed single-qubit `Z` on a distinct leftover site. Returns the sites
/// claimed by the locals, in layout order. All emitted gates touch only this
/// side's qubits.
fn reduce_side(
    work: &mut [PauliOperator],
    circuit: &mut Vec<CliffordGate>,
    p: usize,
    local_offset: usize,
    local_count: usize,
    mask: &BitVec,
    sites: &[usize],
) -> Vec<usize> {
    for k in 0..p {
        let t = sites[k];

        // First member: turn every factor on this side into X, then fan the
        // X's into the target site. The other listed operators commute with
        // this member's restriction, so they lose all support at `t`
        // automatically once the pair is reduced.
        for q in side_support(&work[2 * k], mask) {
            if work[2 * k].z().get(q) {
                let gate = if work[2 * k].x().get(q) {
                    CliffordGate::S(q) // Y -> -X
                } else {
                    CliffordGate::H(q) // Z -> X
                };
                emit(work, circuit, gate);
            }
        }
        let sup = side_support(&work[2 * k], mask);
        debug_assert!(!sup.is_empty(), "pair members act on both sides");
        if !work[2 * k].x().get(t) {
            emit(work, circuit, CliffordGate::Cnot(sup[0], t));
        }
        for &q in &sup {
            if q != t {
                emit(work, circuit, CliffordGate::Cnot(t, q));
            }
        }

        // Second member: it anticommutes with X at `t`, so it carries Z
        // there. Turn its other factors into Z (keeping the first member,
        // which only touches `t` on this side, intact), fix a Y at `t` with
        // the X-preserving sequence H-S-H, then fan the stray Z's in.
        for q in side_support(&work[2 * k + 1], mask) {
            if q == t {
                continue;
            }
            if work[2 * k + 1].x().get(q) {
                if work[2 * k + 1].z().get(q) {
                    emit(work, circuit, CliffordGate::S(q)); // Y -> -X
                }
                emit(work, circuit, CliffordGate::H(q)); // X -> Z
            }
        }
        debug_assert!(work[2 * k + 1].z().get(t), "partner must anticommute at the target");
        if work[2 * k + 1].x().get(t) {
            emit(work, circuit, CliffordGate::H(t));
            emit(work, circuit, CliffordGate::S(t));
            emit(work, circuit, CliffordGate::H(t));
        }
        for q in side_support(&work[2 * k + 1], mask) {
            if q != t {
                debug_assert!(!work[2 * k + 1].x().get(q));
                emit(work, circuit, CliffordGate::Cnot(q, t));
            }
        }
    }

    // Locals: each becomes a single-qubit Z on its lowest remaining support
    // site. Finished pair sites cannot carry any factor (commutation with
    // both X and Z there forces identity), but finished local sites can
    // still carry a Z; that is removed by multiplying with the finished
    // generator — a generator change, not a gate.
    let mut local_sites = Vec::with_capacity(local_count);
    for i in 0..local_count {
        let idx = local_offset + i;
        for (j, &s) in local_sites.iter().enumerate() {
            if work[idx].z().get(s) {
                debug_assert!(!work[idx].x().get(s), "commutation with Z forbids X here");
                let finished = work[local_offset + j].clone();
                work[idx].mul_assign(&finished);
            }
        }
        for q in side_support(&work[idx], mask) {
            if work[idx].x().get(q) {
                if work[idx].z().get(q) {
                    emit(work, circuit, CliffordGate::S(q)); // Y -> -X
                }
                emit(work, circuit, CliffordGate::H(q)); // X -> Z
            }
        }
        let sup = side_support(&work[idx], mask);
        assert!(!sup.is_empty(), "an independent local generator cannot vanish");
        let home = sup[0];
        for &q in &sup[1..] {
            emit(work, circuit, CliffordGate::Cnot(q, home));
        }
        local_sites.push(home);
    }
    local_sites
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::stabilizer::Sign;
    use crate::testkit::{random_op, random_state};
    use alloc::format;
    use alloc::string::String;

    fn p(s: &str) -> PauliOperator {
        PauliOperator::from_str_unwrap(s)
    }

    fn ops(strings: &[&str]) -> Vec<PauliOperator> {
        strings.iter().map(|s| p(s)).collect()
    }

    /// A random bipartition of `n` qubits with both blocks non-empty.
    fn random_bipartition(n: usize, rng: &mut SplitMix64) -> Partition {
        loop {
            let block_a: Vec<usize> = (0..n).filter(|_| rng.next_bool()).collect();
            if !block_a.is_empty() && block_a.len() < n {
                return Partition::bipartition(n, &block_a).unwrap();
            }
        }
    }

    // -- compatibility --------------------------------------------------------

    #[test]
    fn abelian_lists_are_fully_compatible() {
        let gens = ops(&["ZII", "IZI", "IIZ"]);
        let ci = compatibility(&gens).unwrap();
        assert_eq!((ci.c(), ci.p()), (3, 0));
        assert!(ci.pairs().is_empty());
        assert_eq!(ci.central(), &gens[..]);
    }

    #[test]
    fn single_qubit_x_and_z_form_one_pair() {
        let ci = compatibility(&ops(&["X", "Z"])).unwrap();
        assert_eq!((ci.c(), ci.p()), (1, 1));
        assert_eq!(ci.pairs(), &[(p("X"), p("Z"))]);
        assert!(ci.central().is_empty());
    }

    #[test]
    fn two_qubit_frame_forms_two_pairs() {
        let ci = compatibility(&ops(&["XI", "ZI", "IX", "IZ"])).unwrap();
        assert_eq!((ci.c(), ci.p()), (2, 2));
        assert_eq!(ci.pairs(), &[(p("XI"), p("ZI")), (p("IX"), p("IZ"))]);
        assert!(ci.central().is_empty());
    }

    #[test]
    fn empty_list_has_zero_indices() {
        let ci = compatibility(&[]).unwrap();
        assert_eq!((ci.c(), ci.p()), (0, 0));
    }

    #[test]
    fn compatibility_rejects_dependent_or_mixed_input() {
        assert!(matches!(compatibility(&ops(&["X", "X"])), Err(Error::DependentGenerators)));
        assert!(matches!(
            compatibility(&ops(&["X", "XX"])),
            Err(Error::MixedQubitCounts { index: 1 })
        ));
    }

    #[test]
    fn pairing_reorganization_preserves_structure_and_span() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..40 {
            // Collect a random independent list of Pauli operators; unlike
            // stabilizer generators these may anticommute freely.
            let n = 1 + rng.next_below(5);
            let mut gens: Vec<PauliOperator> = Vec::new();
            let mut rows: Vec<BitVec> = Vec::new();
            for _ in 0..2 * n {
                let cand = random_op(n, &mut rng);
                let mut trial = rows.clone();
                trial.push(cand.symplectic_row());
                if BitMatrix::from_rows(&trial).rank() == trial.len() {
                    rows = trial;
                    gens.push(cand);
                }
            }
            let m = gens.len();
            let ci = compatibility(&gens).unwrap();
            assert_eq!(ci.c() + ci.p(), m);
            assert!(ci.p() <= ci.c());
            assert_eq!(2 * ci.pairs().len() + ci.central().len(), m);

            // Pair members anticommute exactly within their own pair, and
            // central elements commute with every listed operator.
            let mut listed: Vec<PauliOperator> = Vec::new();
            for (g, gbar) in ci.pairs() {
                listed.push(g.clone());
                listed.push(gbar.clone());
            }
            let paired = listed.len();
            listed.extend(ci.central().iter().cloned());
            for i in 0..listed.len() {
                for j in 0..listed.len() {
                    let same_pair = i != j && i < paired && j < paired && i / 2 == j / 2;
                    assert_eq!(i != j && listed[i].anticommutes(&listed[j]), same_pair);
                }
            }

            // The reorganized list spans the same operators up to phase.
            let listed_rows: Vec<BitVec> =
                listed.iter().map(PauliOperator::symplectic_row).collect();
            let mut joint = rows.clone();
            joint.extend(listed_rows.iter().cloned());
            assert_eq!(BitMatrix::from_rows(&listed_rows).rank(), m);
            assert_eq!(BitMatrix::from_rows(&joint).rank(), m);
        }
    }

    // -- canonicalize ---------------------------------------------------------

    #[test]
    fn epr_pair_is_a_single_canonical_pair() {
        let s = StabilizerGroup::from_strings(&["XX", "ZZ"]).unwrap();
        let cut = Partition::bipartition(2, &[0]).unwrap();
        let cf = canonicalize(&s, &cut).unwrap();
        assert!(cf.local_a().is_empty());
        assert!(cf.local_b().is_empty());
        assert_eq!(cf.pairs(), &[(p("XX"), p("ZZ"))]);
        assert_eq!(cf.entanglement(), 1);
    }

    #[test]
    fn ghz3_splits_into_one_local_and_one_pair() {
        let s = StabilizerGroup::from_strings(&["XXX", "ZZI", "IZZ"]).unwrap();
        let cut = Partition::bipartition(3, &[0, 1]).unwrap();
        let cf = canonicalize(&s, &cut).unwrap();
        assert_eq!(cf.local_a(), &[p("ZZI")]);
        assert!(cf.local_b().is_empty());
        assert_eq!(cf.pairs(), &[(p("XXX"), p("IZZ"))]);
        assert_eq!(cf.entanglement(), 1);
    }

    #[test]
    fn product_state_has_only_local_layers() {
        let s = StabilizerGroup::from_strings(&["ZI", "IZ"]).unwrap();
        let cut = Partition::bipartition(2, &[0]).unwrap();
        let cf = canonicalize(&s, &cut).unwrap();
        assert_eq!(cf.local_a(), &[p("ZI")]);
        assert_eq!(cf.local_b(), &[p("IZ")]);
        assert!(cf.pairs().is_empty());
        assert_eq!(cf.entanglement(), 0);
    }

    #[test]
    fn five_ring_across_three_two_cut_has_two_pairs() {
        let ring = crate::stabilizer::GraphAdjacency::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
        )
        .unwrap();
        let s = StabilizerGroup::from_graph(&ring);
        let cut = Partition::bipartition(5, &[0, 1, 2]).unwrap();
        let cf = canonicalize(&s, &cut).unwrap();
        assert_eq!(cf.entanglement(), 2);
        assert_eq!(cf.local_a().len(), 1);
        assert_eq!(cf.local_b().len(), 0);
    }

    #[test]
    fn canonicalize_rejects_bad_partitions() {
        let s = StabilizerGroup::from_strings(&["XXX", "ZZI", "IZZ"]).unwrap();
        assert!(matches!(
            canonicalize(&s, &Partition::singletons(3)),
            Err(Error::NotBipartite { blocks: 3 })
        ));
        let cut = Partition::bipartition(2, &[0]).unwrap();
        assert!(matches!(
            canonicalize(&s, &cut),
            Err(Error::PartitionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn canonical_form_satisfies_all_structural_invariants() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..60 {
            let n = 2 + rng.next_below(7);
            let s = random_state(n, &mut rng);
            let cut = random_bipartition(n, &mut rng);
            let cf = canonicalize(&s, &cut).unwrap();
            let mask_a = cut.block(0);
            let mask_b = cut.block(1);
            let p_count = cf.entanglement();

            // Layer counting and the per-side rank identities.
            assert_eq!(cf.local_a().len() + cf.local_b().len() + 2 * p_count, n);
            assert_eq!(p_count, cut.block_len(0) - cf.local_a().len());
            assert_eq!(p_count, cut.block_len(1) - cf.local_b().len());

            // Locality of the local layers.
            assert!(cf.local_a().iter().all(|op| op.is_identity_on(mask_b)));
            assert!(cf.local_b().iter().all(|op| op.is_identity_on(mask_a)));

            // Full commutation, and the one-sided pattern: restrictions
            // anticommute exactly within a pair, on either side.
            let gens = cf.generators();
            let locals = cf.local_a().len() + cf.local_b().len();
            for i in 0..gens.len() {
                for j in 0..gens.len() {
                    assert!(i == j || gens[i].commutes(&gens[j]));
                    let same_pair = i != j
                        && i >= locals
                        && j >= locals
                        && (i - locals) / 2 == (j - locals) / 2;
                    for mask in [mask_a, mask_b] {
                        assert_eq!(
                            i != j && gens[i].anticommutes_on(&gens[j], mask),
                            same_pair,
                            "one-sided commutation pattern violated"
                        );
                    }
                }
            }

            // The reorganized list generates the original group, signs
            // included.
            let regenerated = StabilizerGroup::new(gens.clone()).unwrap();
            assert!(s.generators().iter().all(|g| regenerated.contains(g)));
            assert!(gens.iter().all(|g| s.contains(g)));

            // Rank of the A-restrictions of all canonical generators equals
            // n - |local_b|, and exceeds the block size by exactly p.
            let rows: Vec<BitVec> =
                gens.iter().map(|g| g.restrict(mask_a).symplectic_row()).collect();
            let proj_rank = BitMatrix::from_rows(&rows).rank();
            assert_eq!(proj_rank, n - cf.local_b().len());
            assert_eq!(p_count, proj_rank - cut.block_len(0));
        }
    }

    #[test]
    fn canonicalize_is_deterministic() {
        let mut rng = SplitMix64::new(7);
        let s = random_state(6, &mut rng);
        let cut = Partition::bipartition(6, &[0, 2, 5]).unwrap();
        let once = canonicalize(&s, &cut).unwrap();
        let twice = canonicalize(&s, &cut).unwrap();
        let render = |cf: &CanonicalForm| -> String {
            let mut out = String::new();
            for g in cf.generators() {
                out.push_str(&format!("{g}\n"));
            }
            out
        };
        assert_eq!(render(&once), render(&twice));
    }

    // -- extract_epr ----------------------------------------------------------

    #[test]
    fn epr_extraction_is_trivial() {
        let s = StabilizerGroup::from_strings(&["XX", "ZZ"]).unwrap();
        let cut = Partition::bipartition(2, &[0]).unwrap();
        let ex = extract_epr(&canonicalize(&s, &cut).unwrap());
        assert!(ex.circuit_a().is_empty());
        assert!(ex.circuit_b().is_empty());
        assert_eq!(ex.pair_sites(), &[(0, 1)]);
    }

    #[test]
    fn ghz3_extraction_yields_one_bell_pair_and_one_basis_qubit() {
        let s = StabilizerGroup::from_strings(&["XXX", "ZZI", "IZZ"]).unwrap();
        let cut = Partition::bipartition(3, &[0, 1]).unwrap();
        let ex = extract_epr(&canonicalize(&s, &cut).unwrap());
        assert_eq!(ex.pair_sites(), &[(0, 2)]);
        let conjugated = s.conjugated(&ex.combined_circuit());
        let target = ex.target_group();
        assert!(conjugated.generators().iter().all(|g| target.contains(g)));
    }

    #[test]
    fn negative_signs_are_cleared_by_appended_gates() {
        let s = StabilizerGroup::from_strings(&["-XX", "-ZZ"]).unwrap();
        let cut = Partition::bipartition(2, &[0]).unwrap();
        let ex = extract_epr(&canonicalize(&s, &cut).unwrap());
        let conjugated = s.conjugated(&ex.combined_circuit());
        assert!(conjugated.contains(&p("XX")));
        assert!(conjugated.contains(&p("ZZ")));
        assert!(!ex.combined_circuit().is_empty());
    }

    #[test]
    fn extraction_maps_random_states_onto_their_target_groups() {
        let mut rng = SplitMix64::new(4242);
        for _ in 0..50 {
            let n = 2 + rng.next_below(7);
            let s = random_state(n, &mut rng);
            let cut = random_bipartition(n, &mut rng);
            let cf = canonicalize(&s, &cut).unwrap();
            let ex = extract_epr(&cf);

            // Circuits stay on their own side.
            let on_side = |gates: &[CliffordGate], mask: &BitVec| {
                gates.iter().all(|g| match *g {
                    CliffordGate::H(q)
                    | CliffordGate::S(q)
                    | CliffordGate::X(q)
                    | CliffordGate::Z(q) => mask.get(q),
                    CliffordGate::Cnot(c, t) => mask.get(c) && mask.get(t),
                })
            };
            assert!(on_side(ex.circuit_a(), cut.block(0)));
            assert!(on_side(ex.circuit_b(), cut.block(1)));

            // Sites are distinct and on the right sides.
            for &(a, b) in ex.pair_sites() {
                assert!(cut.block(0).get(a));
                assert!(cut.block(1).get(b));
            }
            assert_eq!(ex.pair_sites().len(), cf.entanglement());

            // The conjugated group is exactly the Bell-plus-basis target.
            let conjugated = s.conjugated(&ex.combined_circuit());
            let target = ex.target_group();
            assert!(conjugated.generators().iter().all(|g| target.contains(g)));
            assert!(target.generators().iter().all(|g| conjugated.contains(g)));
        }
    }

    #[test]
    fn measurement_then_extraction_still_agrees() {
        // Measuring a block-local operator can only keep or lower the pair
        // count; extraction must stay exact on the post-measurement group.
        let mut rng = SplitMix64::new(31);
        for _ in 0..20 {
            let n = 3 + rng.next_below(4);
            let s = random_state(n, &mut rng);
            let cut = random_bipartition(n, &mut rng);
            let mut m = PauliOperator::identity(n);
            let block = cut.block_indices(0);
            let q = block[rng.next_below(block.len())];
            m.set_xz(q, true, false);
            let result = s.measure_pauli(&m, Some(Sign::Plus), &mut rng).unwrap();
            let cf = canonicalize(&result.state, &cut).unwrap();
            let ex = extract_epr(&cf);
            let conjugated = result.state.conjugated(&ex.combined_circuit());
            let target = ex.target_group();
            assert!(conjugated.generators().iter().all(|g| target.contains(g)));
        }
    }
}
