//! Brute-force reference computations, kept independent of the main
//! implementations they check: no pruning, no canonical-form algorithms,
//! no symbolic algebra.

use std::collections::BTreeSet;

use crate::quiverhh::Quiver;

/// Cycle classes of closed walks of length `1..=max_len`, each as its least
/// rotation, sorted by length then sequence. Every walk is enumerated and
/// every rotation compared.
pub fn brute_trace_cycles(quiver: &Quiver, max_len: usize) -> Vec<Vec<usize>> {
    let arrows = quiver.arrows();
    let mut classes: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    if max_len == 0 {
        return Vec::new();
    }
    let mut stack: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    while let Some(walk) = stack.pop() {
        let first = &arrows[walk[0]];
        let last = &arrows[*walk.last().expect("nonempty")];
        if last.target == first.source {
            let best = (0..walk.len())
                .map(|k| {
                    let mut r = walk[k..].to_vec();
                    r.extend_from_slice(&walk[..k]);
                    r
                })
                .min()
                .expect("nonempty");
            classes.insert((best.len(), best));
        }
        if walk.len() < max_len {
            for (i, a) in arrows.iter().enumerate() {
                if a.source == last.target {
                    let mut next = walk.clone();
                    next.push(i);
                    stack.push(next);
                }
            }
        }
    }
    classes.into_iter().map(|(_, c)| c).collect()
}

/// `|X(𝔽_q)|` for a braid word, from numeric matrix products at every
/// parameter assignment: the product of the blocks `[[z,1],[1,0]]` must
/// vanish strictly above the antidiagonal.
pub fn brute_braid_count(strands: usize, letters: &[usize], q: u64) -> u64 {
    let n = strands;
    let len = letters.len() as u32;
    let total = q.pow(len);
    let mut count = 0;
    for index in 0..total {
        let mut m = vec![vec![0u64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut rest = index;
        // first letter takes the most significant digit
        let mut zs = vec![0u64; letters.len()];
        for z in zs.iter_mut().rev() {
            *z = rest % q;
            rest /= q;
        }
        for (&letter, &z) in letters.iter().zip(&zs) {
            let i = letter - 1;
            // right multiplication by the block mixes columns i and i+1
            for row in m.iter_mut() {
                let (a, b) = (row[i], row[i + 1]);
                row[i] = (a * z + b) % q;
                row[i + 1] = a;
            }
        }
        let ok = (0..n).all(|i| (0..n).all(|j| i + j >= n - 1 || m[i][j] == 0));
        count += ok as u64;
    }
    count
}

/// `#{(x, y) ∈ 𝔽_q² : 1 + xy ≠ 0}`.
pub fn brute_hopf_count(q: u64) -> u64 {
    (0..q)
        .flat_map(|x| (0..q).map(move |y| (x, y)))
        .filter(|(x, y)| (1 + x * y) % q != 0)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(brute_trace_cycles(&Quiver::cyclic(2), 4), vec![vec![0, 1], vec![0, 1, 0, 1]]);
        assert!(brute_trace_cycles(&Quiver::linear(3), 5).is_empty());
        assert!(brute_trace_cycles(&Quiver::cyclic(1), 0).is_empty());
        assert_eq!(brute_braid_count(3, &[1, 2, 1], 5), 1);
        assert_eq!(brute_braid_count(2, &[1, 1, 1], 3), 7);
        assert_eq!(brute_hopf_count(7), 43);
    }
}
