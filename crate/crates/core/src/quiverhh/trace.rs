use super::path::PathClass;
use super::quiver::Quiver;
use super::QuiverError;

/// Default bound on the number of search nodes visited by [`trace_space`].
pub const DEFAULT_WALK_CAP: usize = 5_000_000;

/// The length-truncated trace space `HH₀` of a path algebra: vertex
/// idempotents plus one class per rotation orbit of closed walks of length
/// `1..=max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSpace {
    quiver: Quiver,
    max_len: usize,
    basis: Vec<PathClass>,
}

impl TraceSpace {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Idempotents first, then cycles ordered by length and arrow sequence.
    pub fn basis(&self) -> &[PathClass] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, class: &PathClass) -> bool {
        self.basis.binary_search_by(|b| sort_key(b).cmp(&sort_key(class))).is_ok()
    }

    /// Number of basis cycles of each length `0..=max_len` (idempotents at 0).
    pub fn graded_dimensions(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_len + 1];
        for b in &self.basis {
            out[b.len()] += 1;
        }
        out
    }
}

fn sort_key(c: &PathClass) -> (usize, &PathClass) {
    (c.len(), c)
}

/// Enumerates rotation classes of closed walks directly as necklaces.
///
/// A depth-first search extends only prefixes that are prenecklaces (no
/// rotation can be lexicographically smaller), tracking the length of the
/// longest Lyndon prefix. A closed prefix whose length is a multiple of that
/// period is the least rotation of its class, so each class is produced once.
pub fn trace_space(quiver: &Quiver, max_len: usize, walk_cap: usize) -> Result<TraceSpace, QuiverError> {
    let out_arrows = quiver.out_arrows();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut visited = 0usize;
    let mut word: Vec<usize> = Vec::with_capacity(max_len);

    fn extend(
        quiver: &Quiver,
        out_arrows: &[Vec<usize>],
        max_len: usize,
        walk_cap: usize,
        word: &mut Vec<usize>,
        period: usize,
        visited: &mut usize,
        cycles: &mut Vec<Vec<usize>>,
    ) -> Result<(), QuiverError> {
        *visited += 1;
        if *visited > walk_cap {
            return Err(QuiverError::WalkCap(walk_cap));
        }
        let m = word.len();
        let first = quiver.arrow(word[0]);
        let last = quiver.arrow(word[m - 1]);
        if last.target == first.source && m.is_multiple_of(period) {
            cycles.push(word.clone());
        }
        if m == max_len {
            return Ok(());
        }
        let pivot = word[m - period];
        for &next in &out_arrows[last.target - 1] {
            if next < pivot {
                continue;
            }
            let p = if next == pivot { period } else { m + 1 };
            word.push(next);
            extend(quiver, out_arrows, max_len, walk_cap, word, p, visited, cycles)?;
            word.pop();
        }
        Ok(())
    }

    if max_len > 0 {
        for a in 0..quiver.arrows().len() {
            word.push(a);
            extend(quiver, &out_arrows, max_len, walk_cap, &mut word, 1, &mut visited, &mut cycles)?;
            word.pop();
        }
    }

    let mut basis: Vec<PathClass> = (1..=quiver.vertices()).map(PathClass::Idempotent).collect();
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    basis.extend(cycles.into_iter().map(PathClass::Cycle));
    Ok(TraceSpace {
        quiver: quiver.clone(),
        max_len,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverhh::Arrow;

    #[test]
    fn cyclic_three() {
        let q = Quiver::cyclic(3);
        let ts = trace_space(&q, 7, DEFAULT_WALK_CAP).unwrap();
        let shown: Vec<String> = ts.basis().iter().map(|b| b.display(&q)).collect();
        assert_eq!(shown, vec!["e1", "e2", "e3", "[a1 a2 a3]", "[a1 a2 a3 a1 a2 a3]"]);
        assert_eq!(ts.dimension(), 5);
    }

    #[test]
    fn linear_a2_has_no_cycles() {
        for l in 0..6 {
            assert_eq!(trace_space(&Quiver::linear(2), l, DEFAULT_WALK_CAP).unwrap().dimension(), 2);
        }
    }

    #[test]
    fn single_loop_truncation() {
        let q = Quiver::single_loop();
        let ts = trace_space(&q, 4, DEFAULT_WALK_CAP).unwrap();
        let shown: Vec<String> = ts.basis().iter().map(|b| b.display(&q)).collect();
        assert_eq!(shown, vec!["e1", "[t]", "[t t]", "[t t t]", "[t t t t]"]);
        assert_eq!(ts.graded_dimensions(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn two_loops_count_binary_necklaces() {
        // necklaces over {a,b}: lengths 1..4 give 2, 3, 4, 6
        let q = Quiver::new(
            1,
            vec![
                Arrow { source: 1, target: 1, label: "a".into() },
                Arrow { source: 1, target: 1, label: "b".into() },
            ],
        )
        .unwrap();
        let ts = trace_space(&q, 4, DEFAULT_WALK_CAP).unwrap();
        assert_eq!(ts.graded_dimensions(), vec![1, 2, 3, 4, 6]);
        assert!(ts.contains(&PathClass::Cycle(vec![0, 1])));
    }

    #[test]
    fn walk_cap_is_enforced() {
        let q = Quiver::new(
            1,
            (0..4).map(|i| Arrow { source: 1, target: 1, label: format!("x{i}") }).collect(),
        )
        .unwrap();
        assert_eq!(trace_space(&q, 10, 1000), Err(QuiverError::WalkCap(1000)));
    }

    #[test]
    fn zero_length_cap() {
        let ts = trace_space(&Quiver::cyclic(2), 0, DEFAULT_WALK_CAP).unwrap();
        assert_eq!(ts.dimension(), 2);
    }
}
