//! Shared helpers for the integration tests: seeded random states,
//! partitions, graphs, and block-confined operations.

#![allow(dead_code)] // each test binary uses its own subset

use stabsplit_core::{
    BitVec, CliffordGate, GraphAdjacency, Partition, PauliOperator, SplitMix64, StabilizerGroup,
};

/// A random Clifford circuit on `n` qubits with `gates` uniformly chosen
/// gates (H, S, X, Z, and CNOT between distinct qubits when `n >= 2`).
pub fn random_circuit(n: usize, gates: usize, rng: &mut SplitMix64) -> Vec<CliffordGate> {
    let mut out = Vec::with_capacity(gates);
    for _ in 0..gates {
        let kind = if n >= 2 { rng.next_below(5) } else { rng.next_below(4) };
        out.push(match kind {
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
        });
    }
    out
}

/// A random pure stabilizer state: `|0...0>` pushed through a random
/// Clifford circuit long enough to mix all qubits.
pub fn random_state(n: usize, rng: &mut SplitMix64) -> StabilizerGroup {
    StabilizerGroup::zero_state(n).conjugated(&random_circuit(n, 4 * n + 12, rng))
}

/// A random bipartition: block A is a uniformly random proper nonempty
/// subset of the qubits.
pub fn random_bipartition(n: usize, rng: &mut SplitMix64) -> Partition {
    assert!(n >= 2, "a bipartition needs at least two qubits");
    loop {
        let block_a: Vec<usize> = (0..n).filter(|_| rng.next_bool()).collect();
        if !block_a.is_empty() && block_a.len() < n {
            return Partition::bipartition(n, &block_a).unwrap();
        }
    }
}

/// A random partition with at least `min_blocks` (and at most `n`) blocks.
pub fn random_partition(n: usize, min_blocks: usize, rng: &mut SplitMix64) -> Partition {
    assert!((1..=n).contains(&min_blocks));
    loop {
        let k = min_blocks + rng.next_below(n - min_blocks + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
        for q in 0..n {
            blocks[rng.next_below(k)].push(q);
        }
        blocks.retain(|b| !b.is_empty());
        if blocks.len() >= min_blocks {
            let refs: Vec<&[usize]> = blocks.iter().map(|b| b.as_slice()).collect();
            return Partition::new(n, &refs).unwrap();
        }
    }
}

/// Merges two random blocks of `p`, producing a strictly coarser partition.
/// Requires `p` to have at least two blocks.
pub fn coarsened(p: &Partition, rng: &mut SplitMix64) -> Partition {
    let k = p.num_blocks();
    assert!(k >= 2, "cannot coarsen a single-block partition");
    let i = rng.next_below(k);
    let mut j = rng.next_below(k);
    while j == i {
        j = rng.next_below(k);
    }
    let mut blocks: Vec<Vec<usize>> = (0..k).map(|b| p.block_indices(b)).collect();
    let merged = blocks.remove(j.max(i));
    blocks[j.min(i)].extend(merged);
    let refs: Vec<&[usize]> = blocks.iter().map(|b| b.as_slice()).collect();
    Partition::new(p.num_qubits(), &refs).unwrap()
}

/// A random Erdos-Renyi graph with edge probability 1/2.
pub fn random_graph(n: usize, rng: &mut SplitMix64) -> GraphAdjacency {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.next_bool() {
                edges.push((i, j));
            }
        }
    }
    GraphAdjacency::from_edges(n, &edges).unwrap()
}

/// A random non-identity Pauli observable supported within `block`.
pub fn random_block_pauli(n: usize, block: &BitVec, rng: &mut SplitMix64) -> PauliOperator {
    loop {
        let mut chars: Vec<char> = vec!['I'; n];
        for q in block.iter_ones() {
            chars[q] = ['I', 'X', 'Y', 'Z'][rng.next_below(4)];
        }
        let text: String = chars.into_iter().collect();
        let op = PauliOperator::from_str_unwrap(&text);
        if !op.is_identity_string() {
            return op;
        }
    }
}

/// A random Clifford circuit confined to the listed qubits.
pub fn random_confined_circuit(
    sites: &[usize],
    gates: usize,
    rng: &mut SplitMix64,
) -> Vec<CliffordGate> {
    let mut out = Vec::with_capacity(gates);
    for _ in 0..gates {
        let kind = if sites.len() >= 2 { rng.next_below(5) } else { rng.next_below(4) };
        let pick = |rng: &mut SplitMix64| sites[rng.next_below(sites.len())];
        out.push(match kind {
            0 => CliffordGate::H(pick(rng)),
            1 => CliffordGate::S(pick(rng)),
            2 => CliffordGate::X(pick(rng)),
            3 => CliffordGate::Z(pick(rng)),
            _ => {
                let c = pick(rng);
                let mut t = pick(rng);
                while t == c {
                    t = pick(rng);
                }
                CliffordGate::Cnot(c, t)
            }
        });
    }
    out
}

/// The same state with one fresh `|0>` ancilla appended as qubit `n`.
pub fn with_z_ancilla(s: &StabilizerGroup) -> StabilizerGroup {
    let n = s.num_qubits();
    let mut strings: Vec<String> = s.generators().iter().map(|g| format!("{g}I")).collect();
    let mut z_line = String::from("+");
    z_line.extend(std::iter::repeat_n('I', n));
    z_line.push('Z');
    strings.push(z_line);
    let refs: Vec<&str> = strings.iter().map(String::as_str).collect();
    StabilizerGroup::from_strings(&refs).unwrap()
}
