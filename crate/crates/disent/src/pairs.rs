//! The shared map between action indices and unordered qubit pairs.
//!
//! Both the observation tokens and the action space enumerate the unordered
//! pairs `(i, j)` with `1 <= i < j <= L` in lexicographic order. Keeping the
//! map in one place guarantees the two orderings can never drift apart.

/// Number of unordered qubit pairs, `L (L - 1) / 2`.
#[inline]
pub fn n_pairs(n_qubits: usize) -> usize {
    n_qubits * (n_qubits - 1) / 2
}

/// Lexicographic index of the unordered pair `(i, j)`, `1 <= i < j <= L`.
///
/// `(1,2) -> 0`, `(1,3) -> 1`, ..., `(1,L) -> L-2`, `(2,3) -> L-1`, ...
pub fn pair_index(i: usize, j: usize, n_qubits: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n_qubits);
    let i0 = i - 1;
    let j0 = j - 1;
    i0 * n_qubits - i0 * (i0 + 1) / 2 + (j0 - i0 - 1)
}

/// Inverse of [`pair_index`]: the pair `(i, j)` with `i < j` at `index`.
pub fn pair_from_index(index: usize, n_qubits: usize) -> (usize, usize) {
    debug_assert!(index < n_pairs(n_qubits));
    let mut rem = index;
    for i in 1..n_qubits {
        let row = n_qubits - i;
        if rem < row {
            return (i, i + 1 + rem);
        }
        rem -= row;
    }
    unreachable!("index checked against n_pairs")
}

/// All pairs in lexicographic (action-index) order.
pub fn all_pairs(n_qubits: usize) -> Vec<(usize, usize)> {
    (0..n_pairs(n_qubits))
        .map(|a| pair_from_index(a, n_qubits))
        .collect()
}

/// Pair permutation induced by a qubit permutation.
///
/// `perm[k-1]` is the new label of qubit `k`. Returns `sigma` such that the
/// token/action at pair index `a` moves to `sigma[a]`.
pub fn induced_pair_permutation(perm: &[usize], n_qubits: usize) -> Vec<usize> {
    all_pairs(n_qubits)
        .iter()
        .map(|&(i, j)| {
            let (pi, pj) = (perm[i - 1], perm[j - 1]);
            let (a, b) = if pi < pj { (pi, pj) } else { (pj, pi) };
            pair_index(a, b, n_qubits)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        for l in 2..=10 {
            for a in 0..n_pairs(l) {
                let (i, j) = pair_from_index(a, l);
                assert!(i < j && j <= l);
                assert_eq!(pair_index(i, j, l), a);
            }
        }
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(
            all_pairs(4),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn induced_permutation_is_permutation() {
        // qubit swap 1 <-> 3 in a 4-qubit register
        let sigma = induced_pair_permutation(&[3, 2, 1, 4], 4);
        let mut seen = sigma.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..6).collect::<Vec<_>>());
        // pair (1,2) -> (3,2) -> (2,3)
        assert_eq!(sigma[pair_index(1, 2, 4)], pair_index(2, 3, 4));
        // pair (1,3) -> (3,1) -> (1,3)
        assert_eq!(sigma[pair_index(1, 3, 4)], pair_index(1, 3, 4));
    }
}
