//! Pauli operators with exact phase tracking.
//!
//! An operator is stored as X/Z bit vectors plus a global power of `i`:
//! `i^phase * W_0 W_1 ... W_{n-1}`, where qubit `j` carries
//! `W_j in {I, X, Y, Z}` according to the bit pair `(x_j, z_j)` with
//! `(1, 1)` denoting the matrix `Y` itself. Under this convention a
//! Hermitian operator with eigenvalues +/-1 — the only kind admitted into a
//! stabilizer group — always has `phase` 0 or 2, so sign checks are a single
//! comparison. The `i` in `Y = i X Z` is folded into the stored phase
//! whenever products are reassembled from X/Z form.
//!
//! Products, commutation, and restriction all run word-parallel on the packed
//! bits; phases are accumulated with popcounts, never per-qubit loops.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::bits::BitVec;
use crate::error::Error;

/// A Pauli operator on `n` qubits: `i^phase * prod_j W_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
    /// Power of `i` in `0..4`. Values 0 and 2 are the real signs `+1`, `-1`.
    phase: u8,
}

impl PauliOperator {
    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliOperator { x: BitVec::zeros(n), z: BitVec::zeros(n), phase: 0 }
    }

    /// Assembles an operator from its bit planes and phase exponent.
    ///
    /// Panics if the bit planes have different lengths.
    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Self {
        assert_eq!(x.len(), z.len(), "X and Z bit planes must have equal length");
        PauliOperator { x, z, phase: phase & 3 }
    }

    /// Parses `text` as an operator on exactly `n` qubits.
    ///
    /// Grammar: an optional sign (`+` or `-`) followed by exactly `n`
    /// characters from `IXYZ`. A `-` contributes phase 2; an `i` in the sign
    /// position is rejected as a non-real phase.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let (phase, body) = match text.as_bytes() {
            [b'+', b'i', ..] | [b'-', b'i', ..] | [b'i', ..] => return Err(Error::NonRealPhase),
            [b'+', ..] => (0u8, &text[1..]),
            [b'-', ..] => (2u8, &text[1..]),
            _ => (0u8, text),
        };
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        let mut count = 0;
        for (i, ch) in body.chars().enumerate() {
            if i >= n {
                return Err(Error::WrongLength { expected: n, found: body.chars().count() });
            }
            match ch {
                'I' => {}
                'X' => x.set(i, true),
                'Y' => {
                    x.set(i, true);
                    z.set(i, true);
                }
                'Z' => z.set(i, true),
                _ => return Err(Error::BadCharacter { position: i, found: ch }),
            }
            count += 1;
        }
        if count != n {
            return Err(Error::WrongLength { expected: n, found: count });
        }
        Ok(PauliOperator { x, z, phase })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    /// X bit plane: bit `j` set when qubit `j` carries `X` or `Y`.
    #[inline]
    pub fn x(&self) -> &BitVec {
        &self.x
    }

    /// Z bit plane: bit `j` set when qubit `j` carries `Z` or `Y`.
    #[inline]
    pub fn z(&self) -> &BitVec {
        &self.z
    }

    /// Power of `i` in front of the bare Pauli string, in `0..4`.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// True when the phase is a real sign (`+1` or `-1`).
    #[inline]
    pub fn has_real_phase(&self) -> bool {
        self.phase & 1 == 0
    }

    /// Returns the same Pauli string with the phase exponent replaced.
    pub fn with_phase(&self, phase: u8) -> Self {
        PauliOperator { x: self.x.clone(), z: self.z.clone(), phase: phase & 3 }
    }

    /// Multiplies the phase by `i^k`.
    #[inline]
    pub fn mul_phase(&mut self, k: u8) {
        self.phase = (self.phase + k) & 3;
    }

    /// Overwrites the bit pair at qubit `q`.
    #[inline]
    pub(crate) fn set_xz(&mut self, q: usize, x: bool, z: bool) {
        self.x.set(q, x);
        self.z.set(q, z);
    }

    /// True when every qubit carries `I` (any phase).
    pub fn is_identity_string(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of qubits carrying a non-identity factor.
    pub fn weight(&self) -> usize {
        self.x.words().iter().zip(self.z.words()).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    /// Mask of qubits carrying a non-identity factor.
    pub fn support(&self) -> BitVec {
        let mut s = self.x.clone();
        s.or_assign(&self.z);
        s
    }

    /// Lowest qubit index carrying a non-identity factor.
    pub fn first_support(&self) -> Option<usize> {
        self.support().first_one()
    }

    /// `self * other`, with the exact resulting phase.
    ///
    /// Panics if the operators act on different numbers of qubits.
    pub fn multiply(&self, other: &PauliOperator) -> PauliOperator {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    /// `self <- self * other`, allocation-free.
    pub fn mul_assign(&mut self, other: &PauliOperator) {
        assert_eq!(self.num_qubits(), other.num_qubits(), "qubit count mismatch in product");
        // Per qubit, W1 * W2 = i^k W3 with the exponent recovered from the
        // Y-counts of the three strings plus the XZ reordering parity:
        //   k = y(W1) + y(W2) - y(W3) + 2 * |z1 & x2|  (mod 4).
        let mut delta: usize = 0;
        for (((xa, za), xb), zb) in
            self.x.words().iter().zip(self.z.words()).zip(other.x.words()).zip(other.z.words())
        {
            delta += (xa & za).count_ones() as usize;
            delta += (xb & zb).count_ones() as usize;
            delta += 2 * (za & xb).count_ones() as usize;
            // Y-count of the product, subtracted mod 4.
            delta += 4 - (((xa ^ xb) & (za ^ zb)).count_ones() as usize & 3);
        }
        self.phase = (self.phase as usize + other.phase as usize + delta) as u8 & 3;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// True when the operators commute. Phases never affect commutation.
    ///
    /// Panics if the operators act on different numbers of qubits.
    pub fn commutes(&self, other: &PauliOperator) -> bool {
        !self.anticommutes(other)
    }

    /// True when the operators anticommute.
    pub fn anticommutes(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.num_qubits(), other.num_qubits(), "qubit count mismatch in commutator");
        let mut parity = 0u32;
        for (((xa, za), xb), zb) in
            self.x.words().iter().zip(self.z.words()).zip(other.x.words()).zip(other.z.words())
        {
            parity ^= (xa & zb).count_ones() & 1;
            parity ^= (za & xb).count_ones() & 1;
        }
        parity == 1
    }

    /// True when the restrictions of the two operators to `block` anticommute.
    ///
    /// Equivalent to `self.restrict(block).anticommutes(&other.restrict(block))`
    /// but allocation-free. Panics on qubit-count or mask-length mismatch.
    pub fn anticommutes_on(&self, other: &PauliOperator, block: &BitVec) -> bool {
        assert_eq!(self.num_qubits(), other.num_qubits(), "qubit count mismatch in commutator");
        assert_eq!(block.len(), self.num_qubits(), "block mask length mismatch");
        let mut parity = 0u32;
        for ((((xa, za), xb), zb), m) in self
            .x
            .words()
            .iter()
            .zip(self.z.words())
            .zip(other.x.words())
            .zip(other.z.words())
            .zip(block.words())
        {
            parity ^= (xa & zb & m).count_ones() & 1;
            parity ^= (za & xb & m).count_ones() & 1;
        }
        parity == 1
    }

    /// Lowest qubit of `block` carrying a non-identity factor, if any.
    pub fn first_support_on(&self, block: &BitVec) -> Option<usize> {
        assert_eq!(block.len(), self.num_qubits(), "block mask length mismatch");
        let mut s = self.support();
        s.and_assign(block);
        s.first_one()
    }

    /// Keeps the factors on qubits in `block` (a length-`n` mask) and
    /// replaces everything else, including the phase, by identity.
    ///
    /// Restriction is idempotent and multiplicative up to phase. Panics if the
    /// mask length differs from the qubit count.
    pub fn restrict(&self, block: &BitVec) -> PauliOperator {
        assert_eq!(block.len(), self.num_qubits(), "block mask length mismatch");
        let mut x = self.x.clone();
        let mut z = self.z.clone();
        x.and_assign(block);
        z.and_assign(block);
        PauliOperator { x, z, phase: 0 }
    }

    /// True when every non-identity factor lies inside `block`.
    pub fn supported_within(&self, block: &BitVec) -> bool {
        self.support().is_subset(block)
    }

    /// True when every qubit of `block` carries `I`.
    pub fn is_identity_on(&self, block: &BitVec) -> bool {
        assert_eq!(block.len(), self.num_qubits(), "block mask length mismatch");
        self.x.is_disjoint(block) && self.z.is_disjoint(block)
    }

    /// The symplectic bit row `[x | z]` of length `2n`, used for rank and
    /// kernel computations.
    pub fn symplectic_row(&self) -> BitVec {
        let n = self.num_qubits();
        let mut row = BitVec::zeros(2 * n);
        for i in self.x.iter_ones() {
            row.set(i, true);
        }
        for i in self.z.iter_ones() {
            row.set(n + i, true);
        }
        row
    }

    /// Deterministic tie-break order on the bare Pauli strings: compares the
    /// Z bit plane first, then the X bit plane, each in ascending qubit
    /// order with 0 before 1. Ignores phases.
    pub fn cmp_string_z_major(&self, other: &PauliOperator) -> Ordering {
        self.z.cmp_bits(&other.z).then_with(|| self.x.cmp_bits(&other.x))
    }
}

impl fmt::Display for PauliOperator {
    /// Canonical text form: an explicit sign (`+`, `-`, `+i`, `-i`) followed
    /// by one of `IXYZ` per qubit. Real-phase strings round-trip through
    /// [`PauliOperator::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        })?;
        for j in 0..self.num_qubits() {
            let ch = match (self.x.get(j), self.z.get(j)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (true, true) => 'Y',
                (false, true) => 'Z',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parses with the qubit count inferred from the string length.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body_len = s.strip_prefix(['+', '-']).unwrap_or(s).chars().count();
        PauliOperator::parse(s, body_len)
    }
}

/// Convenience used throughout tests: parse or panic.
impl PauliOperator {
    #[doc(hidden)]
    pub fn from_str_unwrap(s: &str) -> Self {
        s.parse().unwrap_or_else(|e| panic!("bad Pauli literal {s:?}: {e}"))
    }
}
