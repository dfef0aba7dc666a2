//! Test-only dense complex-matrix oracle.
//!
//! A deliberately naive matrix model: operators become explicit
//! `2^n x 2^n` complex matrices built from Kronecker products of the literal
//! 2x2 Paulis, and every packed-bit computation elsewhere in the crate can be
//! checked against plain matrix arithmetic. Nothing here is optimized and
//! nothing here ships outside `cfg(test)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitVec;
use crate::clifford::CliffordGate;
use crate::pauli::PauliOperator;
use crate::rng::SplitMix64;

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Cpx {
    pub re: f64,
    pub im: f64,
}

impl Cpx {
    pub const ZERO: Cpx = Cpx { re: 0.0, im: 0.0 };
    pub const ONE: Cpx = Cpx { re: 1.0, im: 0.0 };
    pub const I: Cpx = Cpx { re: 0.0, im: 1.0 };

    pub fn new(re: f64, im: f64) -> Cpx {
        Cpx { re, im }
    }

    pub fn mul(self, o: Cpx) -> Cpx {
        Cpx { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }

    pub fn add(self, o: Cpx) -> Cpx {
        Cpx { re: self.re + o.re, im: self.im + o.im }
    }

    pub fn conj(self) -> Cpx {
        Cpx { re: self.re, im: -self.im }
    }

    pub fn approx_eq(self, o: Cpx) -> bool {
        (self.re - o.re).abs() < 1e-9 && (self.im - o.im).abs() < 1e-9
    }
}

pub type Mat = Vec<Vec<Cpx>>;

/// The literal 2x2 matrix of `I`, `X`, `Y`, or `Z`.
pub fn single(kind: char) -> Mat {
    let o = Cpx::ZERO;
    let one = Cpx::ONE;
    let i = Cpx::I;
    let mi = Cpx::new(0.0, -1.0);
    let m1 = Cpx::new(-1.0, 0.0);
    match kind {
        'I' => vec![vec![one, o], vec![o, one]],
        'X' => vec![vec![o, one], vec![one, o]],
        'Y' => vec![vec![o, mi], vec![i, o]],
        'Z' => vec![vec![one, o], vec![o, m1]],
        _ => unreachable!(),
    }
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca, rb, cb) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![Cpx::ZERO; ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j].mul(b[k][l]);
                }
            }
        }
    }
    out
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![Cpx::ZERO; c]; r];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = Cpx::ZERO;
            for t in 0..k {
                acc = acc.add(a[i][t].mul(b[t][j]));
            }
            *cell = acc;
        }
    }
    out
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(*y)).collect())
        .collect()
}

/// Conjugate transpose.
pub fn mat_dagger(a: &Mat) -> Mat {
    let (r, c) = (a.len(), a[0].len());
    let mut out = vec![vec![Cpx::ZERO; r]; c];
    for i in 0..r {
        for j in 0..c {
            out[j][i] = a[i][j].conj();
        }
    }
    out
}

pub fn mat_approx_eq(a: &Mat, b: &Mat) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x.approx_eq(*y)))
}

/// Dense matrix of a Pauli operator. Qubit 0 is the leftmost Kronecker
/// factor; only relative comparisons matter, so any consistent order works.
pub fn dense(op: &PauliOperator) -> Mat {
    let phase = match op.phase() {
        0 => Cpx::ONE,
        1 => Cpx::I,
        2 => Cpx::new(-1.0, 0.0),
        _ => Cpx::new(0.0, -1.0),
    };
    let mut m = vec![vec![phase]];
    for j in 0..op.num_qubits() {
        let kind = match (op.x().get(j), op.z().get(j)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        };
        m = kron(&m, &single(kind));
    }
    m
}

/// Dense unitary of one gate on `n` qubits, in the same qubit order
/// as [`dense`].
pub fn gate_matrix(gate: &CliffordGate, n: usize) -> Mat {
    let o = Cpx::ZERO;
    let one = Cpx::ONE;
    let r = Cpx::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mr = Cpx::new(-core::f64::consts::FRAC_1_SQRT_2, 0.0);
    let hadamard = vec![vec![r, r], vec![r, mr]];
    let phase_s = vec![vec![one, o], vec![o, Cpx::I]];
    let proj0 = vec![vec![one, o], vec![o, o]];
    let proj1 = vec![vec![o, o], vec![o, one]];
    let eye = single('I');

    // Kronecker product with `slot` matrices placed at their qubits and
    // identity everywhere else.
    let place = |slots: &[(usize, &Mat)]| -> Mat {
        let mut m = vec![vec![one]];
        for q in 0..n {
            let factor = slots.iter().find(|(s, _)| *s == q).map(|(_, f)| *f).unwrap_or(&eye);
            m = kron(&m, factor);
        }
        m
    };

    match *gate {
        CliffordGate::H(q) => place(&[(q, &hadamard)]),
        CliffordGate::S(q) => place(&[(q, &phase_s)]),
        CliffordGate::X(q) => place(&[(q, &single('X'))]),
        CliffordGate::Z(q) => place(&[(q, &single('Z'))]),
        CliffordGate::Cnot(c, t) => {
            let x = single('X');
            mat_add(&place(&[(c, &proj0)]), &place(&[(c, &proj1), (t, &x)]))
        }
    }
}

/// Dense unitary of a whole circuit, gates applied in list order to states
/// (so the last gate is the leftmost matrix factor).
pub fn circuit_matrix(circuit: &[CliffordGate], n: usize) -> Mat {
    let mut u: Mat = (0..1usize << n)
        .map(|i| (0..1usize << n).map(|j| if i == j { Cpx::ONE } else { Cpx::ZERO }).collect())
        .collect();
    for gate in circuit {
        u = mat_mul(&gate_matrix(gate, n), &u);
    }
    u
}

/// Uniformly random Pauli string with a uniformly random power of `i`.
pub fn random_op(n: usize, rng: &mut SplitMix64) -> PauliOperator {
    let mut x = BitVec::zeros(n);
    let mut z = BitVec::zeros(n);
    for j in 0..n {
        x.set(j, rng.next_bool());
        z.set(j, rng.next_bool());
    }
    PauliOperator::from_parts(x, z, rng.next_u64() as u8 & 3)
}

/// Random circuit over the full gate set; CNOTs pick distinct qubits.
pub fn random_circuit(n: usize, gates: usize, rng: &mut SplitMix64) -> Vec<CliffordGate> {
    assert!(n >= 1);
    (0..gates)
        .map(|_| match rng.next_below(if n == 1 { 4 } else { 5 }) {
            0 => CliffordGate::H(rng.next_below(n)),
            1 => CliffordGate::S(rng.next_below(n)),
            2 => CliffordGate::X(rng.next_below(n)),
            3 => CliffordGate::Z(rng.next_below(n)),
            _ => {
                let c = rng.next_below(n);
                let mut t = rng.next_below(n);
                while t == c {
                    t = rng.next_below(n);
                }
                CliffordGate::Cnot(c, t)
            }
        })
        .collect()
}

/// Random stabilizer state: `|0..0>` (stabilized by single-qubit Z's)
/// conjugated by a random Clifford circuit.
pub fn random_state(n: usize, rng: &mut SplitMix64) -> crate::stabilizer::StabilizerGroup {
    use crate::stabilizer::StabilizerGroup;
    let gens: Vec<PauliOperator> = (0..n)
        .map(|q| {
            PauliOperator::from_parts(BitVec::zeros(n), BitVec::from_indices(n, &[q]), 0)
        })
        .collect();
    let base = StabilizerGroup::new(gens).expect("Z generators are always valid");
    base.conjugated(&random_circuit(n, 4 * n + 12, rng))
}
