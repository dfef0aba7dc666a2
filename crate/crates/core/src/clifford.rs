//! The Clifford gate set used for circuit synthesis, and conjugation of
//! Pauli operators by those gates.
//!
//! Conjugation maps `g` to `U g U^dagger` with exact sign tracking, using the
//! standard update rules on the packed X/Z bits. A circuit is a list of gates
//! applied to states in list order, so conjugating by a circuit applies the
//! per-gate updates in the same order.

use core::fmt;

use crate::pauli::PauliOperator;

/// One gate from the generating set of the Clifford group, plus the Pauli
/// corrections used to fix signs.
///
/// Qubit indices are zero-based. `Cnot(c, t)` flips target `t` controlled on
/// `c`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    Cnot(usize, usize),
    X(usize),
    Z(usize),
}

impl CliffordGate {
    /// Largest qubit index the gate touches.
    pub fn max_qubit(&self) -> usize {
        match *self {
            CliffordGate::H(q) | CliffordGate::S(q) | CliffordGate::X(q) | CliffordGate::Z(q) => q,
            CliffordGate::Cnot(c, t) => c.max(t),
        }
    }
}

impl fmt::Display for CliffordGate {
    /// One-line text form: `H 0`, `S 2`, `CNOT 0 1`, `X 3`, `Z 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CliffordGate::H(q) => write!(f, "H {q}"),
            CliffordGate::S(q) => write!(f, "S {q}"),
            CliffordGate::Cnot(c, t) => write!(f, "CNOT {c} {t}"),
            CliffordGate::X(q) => write!(f, "X {q}"),
            CliffordGate::Z(q) => write!(f, "Z {q}"),
        }
    }
}

impl PauliOperator {
    /// Replaces `self` by `U self U^dagger` for a single gate `U`.
    ///
    /// Panics if the gate touches a qubit outside the operator.
    pub fn apply_gate(&mut self, gate: &CliffordGate) {
        assert!(
            gate.max_qubit() < self.num_qubits(),
            "gate {gate} out of range for {} qubits",
            self.num_qubits()
        );
        match *gate {
            // H: X <-> Z, Y -> -Y.
            CliffordGate::H(q) => {
                let (x, z) = (self.x().get(q), self.z().get(q));
                if x && z {
                    self.mul_phase(2);
                }
                self.set_xz(q, z, x);
            }
            // S: X -> Y, Y -> -X, Z -> Z.
            CliffordGate::S(q) => {
                let (x, z) = (self.x().get(q), self.z().get(q));
                if x && z {
                    self.mul_phase(2);
                }
                if x {
                    self.set_xz(q, x, !z);
                }
            }
            // CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t; the sign flips exactly
            // when the control carries X-type and the target Z-type with the
            // remaining two bits equal (e.g. X_c Z_t -> -Y_c Y_t).
            CliffordGate::Cnot(c, t) => {
                let (xc, zc) = (self.x().get(c), self.z().get(c));
                let (xt, zt) = (self.x().get(t), self.z().get(t));
                if xc && zt && xt == zc {
                    self.mul_phase(2);
                }
                self.set_xz(t, xt ^ xc, zt);
                self.set_xz(c, xc, zc ^ zt);
            }
            // X flips the sign of Z and Y factors.
            CliffordGate::X(q) => {
                if self.z().get(q) {
                    self.mul_phase(2);
                }
            }
            // Z flips the sign of X and Y factors.
            CliffordGate::Z(q) => {
                if self.x().get(q) {
                    self.mul_phase(2);
                }
            }
        }
    }

    /// Replaces `self` by `U self U^dagger` for a whole circuit `U`, gates
    /// applied to states in list order.
    pub fn apply_circuit(&mut self, circuit: &[CliffordGate]) {
        for gate in circuit {
            self.apply_gate(gate);
        }
    }
}
