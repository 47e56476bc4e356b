//! Permutation and Koszul signs by explicit inversion counting.

/// Sign of the permutation listing original positions in their new order.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Koszul sign of reordering elements of the given degrees into
/// `perm[0], perm[1], …`: each inverted pair contributes `(−1)^{|a||b|}`.
pub fn koszul_sign(degrees: &[i32], perm: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && (degrees[perm[a]] * degrees[perm[b]]) % 2 != 0 {
                sign = -sign;
            }
        }
    }
    sign
}

/// Sorts a wedge index; `None` when an index repeats.
pub fn normalize_wedge(index: &[usize]) -> Option<(i32, alloc::vec::Vec<usize>)> {
    let mut order: alloc::vec::Vec<usize> = (0..index.len()).collect();
    order.sort_by_key(|&p| index[p]);
    let sorted: alloc::vec::Vec<usize> = order.iter().map(|&p| index[p]).collect();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((permutation_sign(&order), sorted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    // sign by sorting with adjacent transpositions
    fn bubble_koszul(degrees: &[i32], perm: &[usize]) -> i32 {
        let mut cur: Vec<usize> = perm.to_vec();
        let mut sign = 1;
        loop {
            let mut swapped = false;
            for a in 0..cur.len().saturating_sub(1) {
                if cur[a] > cur[a + 1] {
                    if (degrees[cur[a]] * degrees[cur[a + 1]]) % 2 != 0 {
                        sign = -sign;
                    }
                    cur.swap(a, a + 1);
                    swapped = true;
                }
            }
            if !swapped {
                return sign;
            }
        }
    }

    fn cycle_sign(perm: &[usize]) -> i32 {
        let mut seen = vec![false; perm.len()];
        let mut sign = 1;
        for s in 0..perm.len() {
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    #[test]
    fn permutation_sign_matches_cycles() {
        for n in 0..=6 {
            for p in permutations(n) {
                assert_eq!(permutation_sign(&p), cycle_sign(&p));
            }
        }
    }

    #[test]
    fn koszul_sign_matches_transpositions() {
        let degree_sets =
            [vec![-1, -1, -1, -1], vec![-1, -2, -1, -3], vec![-2, -2, -1, -1, -3], vec![-1, -2, -3, -4, -1]];
        for degrees in &degree_sets {
            for p in permutations(degrees.len()) {
                assert_eq!(koszul_sign(degrees, &p), bubble_koszul(degrees, &p));
            }
        }
        assert_eq!(koszul_sign(&[-1, -1], &[1, 0]), -1);
        assert_eq!(koszul_sign(&[-1, -2], &[1, 0]), 1);
    }

    #[test]
    fn wedge_normalization() {
        assert_eq!(normalize_wedge(&[2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(normalize_wedge(&[1, 0]), Some((-1, vec![0, 1])));
        assert_eq!(normalize_wedge(&[1, 1]), None);
    }
}
