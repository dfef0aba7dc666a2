//! Brute-force reference implementations at small qubit counts.
//!
//! Everything in this module works with dense complex vectors and matrices,
//! scaling exponentially in the number of qubits. That is the point: these
//! routines are simple enough to be obviously correct, and the fast
//! group-theoretic code in `stabsplit_core` is tested against them. Hard size
//! limits protect interactive users from accidental multi-gigabyte
//! allocations; set the [`MAX_QUBITS_ENV`] environment variable to override
//! them (memory grows as `16 bytes * 2^n` for state vectors and
//! `16 bytes * 4^n` for density matrices).

use nalgebra::DMatrix;
use num_complex::Complex64;
use stabsplit_core::{BitMatrix, BitVec, CliffordGate, Partition, PauliOperator, StabilizerGroup};
use std::fmt;

/// Largest qubit count accepted by [`statevector`] (vector of `2^n` amplitudes).
pub const STATEVECTOR_MAX_QUBITS: usize = 14;
/// Largest qubit count accepted by [`density_from_group`] (`2^n x 2^n` matrix).
pub const DENSITY_MAX_QUBITS: usize = 10;
/// Largest qubit count accepted by [`enumerate_group`] (`2^n` group elements).
pub const ENUMERATION_MAX_QUBITS: usize = 20;
/// Largest qubit count accepted by [`brute_force_local_rank`].
pub const LOCAL_RANK_MAX_QUBITS: usize = 12;
/// Environment variable that, when set to an integer, replaces every size
/// limit above. Raising it is at the caller's own memory risk.
pub const MAX_QUBITS_ENV: &str = "STABSPLIT_ORACLE_MAX_QUBITS";

/// Error raised when an input exceeds the brute-force size limits.
#[derive(Clone, Debug, PartialEq, Eq)]
#[non_exhaustive]
pub enum OracleError {
    /// The input has more qubits than the applicable limit.
    TooManyQubits {
        /// Qubit count of the offending input.
        qubits: usize,
        /// The limit in force (default or environment override).
        limit: usize,
    },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooManyQubits { qubits, limit } => write!(
                f,
                "input has {qubits} qubits but the brute-force limit is {limit} \
                 (set {MAX_QUBITS_ENV} to raise it)"
            ),
        }
    }
}

impl std::error::Error for OracleError {}

fn check_size(qubits: usize, default_limit: usize) -> Result<(), OracleError> {
    let limit = std::env::var(MAX_QUBITS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(default_limit);
    if qubits > limit {
        return Err(OracleError::TooManyQubits { qubits, limit });
    }
    assert!(qubits < 64, "dense basis indices are stored in 64-bit words");
    Ok(())
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
/// Powers of the imaginary unit, indexed by the phase exponent mod 4.
const I_POWERS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

/// Low 64 bits of a bit vector (all of it, given the size limits).
fn mask_u64(bits: &BitVec) -> u64 {
    bits.words().first().copied().unwrap_or(0)
}

/// Phase factor of a Pauli acting on computational basis state `b`:
/// the operator maps `|b>` to `factor * |b XOR x|`, where the factor collects
/// the stored phase, one `i` per Y site, and a sign per Z site seeing a 1 bit.
fn basis_factor(phase: u8, ycount: u32, z: u64, b: u64) -> Complex64 {
    let exponent = (u32::from(phase) + ycount + 2 * (z & b).count_ones()) & 3;
    I_POWERS[exponent as usize]
}

fn apply_pauli_to_vec(op: &PauliOperator, amps: &[Complex64]) -> Vec<Complex64> {
    let x = mask_u64(op.x());
    let z = mask_u64(op.z());
    let ycount = (x & z).count_ones();
    let mut out = vec![ZERO; amps.len()];
    for (b, &a) in amps.iter().enumerate() {
        if a == ZERO {
            continue;
        }
        out[b ^ x as usize] += basis_factor(op.phase(), ycount, z, b as u64) * a;
    }
    out
}

fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

/// A dense state vector over `2^n` computational basis amplitudes.
///
/// Basis index bit `q` is qubit `q` (little-endian), matching the qubit
/// indexing used everywhere else in the crate.
#[derive(Clone, Debug)]
pub struct DenseState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl DenseState {
    /// Wraps raw amplitudes; panics unless there are exactly `2^n` of them
    /// with unit L2 norm (within `1e-12`).
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> DenseState {
        assert_eq!(amplitudes.len(), 1usize << n, "amplitude count must be 2^n");
        let norm = norm_sqr(&amplitudes).sqrt();
        assert!((norm - 1.0).abs() <= 1e-12, "state vector must be normalized, got norm {norm}");
        DenseState { n, amplitudes }
    }

    /// Number of qubits.
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// The `2^n` amplitudes, basis index bit `q` = qubit `q`.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Applies a Pauli operator, returning the new (still normalized) state.
    pub fn apply_pauli(&self, op: &PauliOperator) -> DenseState {
        assert_eq!(op.num_qubits(), self.n, "operator size must match the state");
        DenseState { n: self.n, amplitudes: apply_pauli_to_vec(op, &self.amplitudes) }
    }

    /// Applies a Clifford circuit gate by gate, in list order.
    pub fn apply_circuit(&self, circuit: &[CliffordGate]) -> DenseState {
        let mut amps = self.amplitudes.clone();
        for gate in circuit {
            apply_gate(&mut amps, self.n, gate);
        }
        DenseState { n: self.n, amplitudes: amps }
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &DenseState) -> Complex64 {
        assert_eq!(self.n, other.n, "states must have the same qubit count");
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }
}

fn apply_gate(amps: &mut [Complex64], n: usize, gate: &CliffordGate) {
    let check = |q: usize| assert!(q < n, "gate qubit {q} out of range for {n} qubits");
    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;
    match *gate {
        CliffordGate::H(q) => {
            check(q);
            let bit = 1usize << q;
            for i in 0..amps.len() {
                if i & bit == 0 {
                    let (a, b) = (amps[i], amps[i | bit]);
                    amps[i] = (a + b) * SQRT_HALF;
                    amps[i | bit] = (a - b) * SQRT_HALF;
                }
            }
        }
        CliffordGate::S(q) => {
            check(q);
            let bit = 1usize << q;
            for (i, a) in amps.iter_mut().enumerate() {
                if i & bit != 0 {
                    *a *= I_POWERS[1];
                }
            }
        }
        CliffordGate::X(q) => {
            check(q);
            let bit = 1usize << q;
            for i in 0..amps.len() {
                if i & bit == 0 {
                    amps.swap(i, i | bit);
                }
            }
        }
        CliffordGate::Z(q) => {
            check(q);
            let bit = 1usize << q;
            for (i, a) in amps.iter_mut().enumerate() {
                if i & bit != 0 {
                    *a = -*a;
                }
            }
        }
        CliffordGate::Cnot(c, t) => {
            check(c);
            check(t);
            let (cbit, tbit) = (1usize << c, 1usize << t);
            for i in 0..amps.len() {
                if i & cbit != 0 && i & tbit == 0 {
                    amps.swap(i, i | tbit);
                }
            }
        }
    }
}

/// Builds the unique state vector fixed by every generator of `s`.
///
/// Applies the projectors `(I + g)/2` one generator at a time to candidate
/// basis states `|b>` in increasing binary order, moving on to the next `b`
/// whenever the running vector vanishes; the first survivor of all `n`
/// projectors is (proportional to) the stabilized state. The result is
/// normalized with its first nonzero amplitude made real and positive.
pub fn statevector(s: &StabilizerGroup) -> Result<DenseState, OracleError> {
    check_size(s.num_qubits(), STATEVECTOR_MAX_QUBITS)?;
    let n = s.num_qubits();
    let dim = 1usize << n;
    for b in 0..dim {
        let mut v = vec![ZERO; dim];
        v[b] = ONE;
        let mut survived = true;
        for g in s.generators() {
            let gv = apply_pauli_to_vec(g, &v);
            for (vi, gvi) in v.iter_mut().zip(gv) {
                *vi = (*vi + gvi) * 0.5;
            }
            if norm_sqr(&v) < 1e-24 {
                survived = false;
                break;
            }
        }
        if survived {
            let scale = 1.0 / norm_sqr(&v).sqrt();
            for a in &mut v {
                *a *= scale;
            }
            let first = *v
                .iter()
                .find(|a| a.norm() > 1e-10)
                .expect("a surviving projector output has a nonzero amplitude");
            let phase_fix = first.conj() / first.norm();
            for a in &mut v {
                *a *= phase_fix;
            }
            return Ok(DenseState { n, amplitudes: v });
        }
    }
    unreachable!("a valid stabilizer group fixes a state overlapping some basis vector")
}

/// All `2^k` signed products of the listed operators, in binary-counter
/// order: element `m` multiplies, in ascending index order, exactly the
/// operators whose index bit is set in `m`.
fn enumerate_products<'a>(
    n: usize,
    ops: &'a [PauliOperator],
) -> impl Iterator<Item = PauliOperator> + 'a {
    assert!(ops.len() < 64, "product enumeration is limited to 63 factors");
    (0u64..1u64 << ops.len()).map(move |selector| {
        let mut acc = PauliOperator::identity(n);
        for (i, g) in ops.iter().enumerate() {
            if (selector >> i) & 1 == 1 {
                acc.mul_assign(g);
            }
        }
        acc
    })
}

/// Enumerates all `2^n` elements of the group with exact signs, each exactly
/// once, in binary-counter order over the generator exponent vector.
pub fn enumerate_group(
    s: &StabilizerGroup,
) -> Result<impl Iterator<Item = PauliOperator> + '_, OracleError> {
    check_size(s.num_qubits(), ENUMERATION_MAX_QUBITS)?;
    Ok(enumerate_products(s.num_qubits(), s.generators()))
}

/// Adds `scale * P` to `m`, where `P` is the Pauli matrix with the given X/Z
/// masks and phase exponent, acting on `log2(m.nrows())` qubits.
fn add_scaled_pauli(m: &mut DMatrix<Complex64>, x: u64, z: u64, phase: u8, scale: f64) {
    let dim = m.nrows();
    let ycount = (x & z).count_ones();
    for col in 0..dim {
        let row = col ^ x as usize;
        m[(row, col)] += basis_factor(phase, ycount, z, col as u64) * scale;
    }
}

/// Builds a density matrix directly from group sums.
///
/// With `traced_block = None`, returns the full-state projector: the average
/// of all `2^n` signed group elements as dense matrices. With
/// `traced_block = Some(a)`, returns the reduced state on the complementary
/// qubits `B`: the average over the subgroup of elements acting as identity
/// on `a`, each restricted (with its sign) to `B`. The latter equals the
/// partial trace of the former over `a`.
pub fn density_from_group(
    s: &StabilizerGroup,
    traced_block: Option<&BitVec>,
) -> Result<DMatrix<Complex64>, OracleError> {
    check_size(s.num_qubits(), DENSITY_MAX_QUBITS)?;
    let n = s.num_qubits();
    match traced_block {
        None => {
            let dim = 1usize << n;
            let mut m = DMatrix::zeros(dim, dim);
            let scale = 1.0 / dim as f64;
            for g in enumerate_products(n, s.generators()) {
                add_scaled_pauli(&mut m, mask_u64(g.x()), mask_u64(g.z()), g.phase(), scale);
            }
            Ok(m)
        }
        Some(block) => {
            assert_eq!(block.len(), n, "traced block must cover the same qubits as the group");
            let kept: Vec<usize> = (0..n).filter(|&q| !block.get(q)).collect();
            let dim = 1usize << kept.len();
            let mut m = DMatrix::zeros(dim, dim);
            let scale = 1.0 / dim as f64;
            // Elements acting as identity on the traced block factor as
            // (identity on `block`) x (Pauli on `kept`), so compacting the
            // masks onto the kept qubits loses nothing and keeps the sign.
            for g in enumerate_products(n, &s.kernel_subgroup(block)) {
                let (mut cx, mut cz) = (0u64, 0u64);
                for (i, &q) in kept.iter().enumerate() {
                    cx |= u64::from(g.x().get(q)) << i;
                    cz |= u64::from(g.z().get(q)) << i;
                }
                add_scaled_pauli(&mut m, cx, cz, g.phase(), scale);
            }
            Ok(m)
        }
    }
}

/// Reduced density matrix of `state` on the qubits listed in `kept`,
/// tracing out the qubits listed in `traced`.
fn reduced_density(state: &DenseState, kept: &[usize], traced: &[usize]) -> DMatrix<Complex64> {
    let spread = |patterns: usize, sites: &[usize]| -> Vec<usize> {
        (0..patterns)
            .map(|p| {
                sites
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (bit, &q)| acc | (((p >> bit) & 1) << q))
            })
            .collect()
    };
    let kept_index = spread(1usize << kept.len(), kept);
    let traced_index = spread(1usize << traced.len(), traced);
    let amps = state.amplitudes();
    let mut rho = DMatrix::zeros(kept_index.len(), kept_index.len());
    for &t in &traced_index {
        for (i, &ui) in kept_index.iter().enumerate() {
            let ai = amps[ui | t];
            if ai == ZERO {
                continue;
            }
            for (j, &uj) in kept_index.iter().enumerate() {
                rho[(i, j)] += ai * amps[uj | t].conj();
            }
        }
    }
    rho
}

/// Shannon entropy (base 2) of the spectrum of a Hermitian density matrix,
/// ignoring eigenvalues below `1e-12`.
fn spectrum_entropy(rho: &DMatrix<Complex64>) -> f64 {
    let eigenvalues = rho.clone().symmetric_eigen().eigenvalues;
    eigenvalues.iter().map(|&p| if p > 1e-12 { -p * p.log2() } else { 0.0 }).sum()
}

/// Von Neumann entropy (base 2) across a bipartition, from the dense state.
///
/// Diagonalizes the reduced density matrix of the smaller block (the nonzero
/// spectrum is the same on either side, so the value is symmetric in the two
/// blocks). Eigenvalues below `1e-12` are treated as exact zeros.
pub fn entanglement_entropy_dense(state: &DenseState, bipartition: &Partition) -> f64 {
    assert_eq!(bipartition.num_blocks(), 2, "entropy needs a two-block partition");
    assert_eq!(
        bipartition.num_qubits(),
        state.num_qubits(),
        "partition must cover the same qubits as the state"
    );
    let keep = usize::from(bipartition.block_len(1) < bipartition.block_len(0));
    let rho = reduced_density(
        state,
        &bipartition.block_indices(keep),
        &bipartition.block_indices(1 - keep),
    );
    spectrum_entropy(&rho)
}

/// Rank of the span of all group elements that act as identity on at least
/// one partition block, computed by exhaustive enumeration.
///
/// This is the direct-definition counterpart of
/// [`stabsplit_core::StabilizerGroup::local_subgroup`]; the two must agree.
pub fn brute_force_local_rank(
    s: &StabilizerGroup,
    partition: &Partition,
) -> Result<usize, OracleError> {
    check_size(s.num_qubits(), LOCAL_RANK_MAX_QUBITS)?;
    assert_eq!(
        partition.num_qubits(),
        s.num_qubits(),
        "partition must cover the same qubits as the group"
    );
    let mut rows: Vec<BitVec> = Vec::new();
    for g in enumerate_products(s.num_qubits(), s.generators()) {
        if (0..partition.num_blocks()).any(|j| g.is_identity_on(partition.block(j))) {
            rows.push(g.symplectic_row());
        }
    }
    if rows.is_empty() { Ok(0) } else { Ok(BitMatrix::from_rows(&rows).rank()) }
}
