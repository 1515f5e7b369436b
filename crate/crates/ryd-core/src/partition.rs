//! Ordinary integer partitions and the strip/containment predicates the rest
//! of the crate leans on.
//!
//! Partitions are plain `&[u32]` slices, weakly decreasing, possibly padded
//! with trailing zeros; all helpers treat `(2,1)` and `(2,1,0)` as the same
//! partition.  Region diagrams and 2-row shapes keep fixed-length padded
//! representations so that row indices line up with poset rows.

use alloc::vec;
use alloc::vec::Vec;

/// True iff the entries are weakly decreasing.
pub fn is_partition(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

/// Number of boxes.
pub fn size(p: &[u32]) -> u64 {
    p.iter().map(|&x| x as u64).sum()
}

/// Containment of Young diagrams, `inner ⊆ outer`.
pub fn contains(outer: &[u32], inner: &[u32]) -> bool {
    (0..inner.len().max(outer.len())).all(|i| {
        let inn = inner.get(i).copied().unwrap_or(0);
        let out = outer.get(i).copied().unwrap_or(0);
        inn <= out
    })
}

/// Conjugate (transpose) partition.
pub fn conjugate(p: &[u32]) -> Vec<u32> {
    let cols = p.first().copied().unwrap_or(0) as usize;
    let mut out = vec![0u32; cols];
    for &row in p {
        for c in out.iter_mut().take(row as usize) {
            *c += 1;
        }
    }
    out
}

/// True iff `outer/inner` is a horizontal strip (at most one box per column),
/// including the containment requirement.
pub fn is_horizontal_strip(inner: &[u32], outer: &[u32]) -> bool {
    if !contains(outer, inner) {
        return false;
    }
    (0..outer.len()).all(|i| {
        let inn = inner.get(i).copied().unwrap_or(0);
        let next_out = outer.get(i + 1).copied().unwrap_or(0);
        inn >= next_out
    })
}

/// True iff `outer/inner` is a vertical strip (at most one box per row),
/// including the containment requirement.
pub fn is_vertical_strip(inner: &[u32], outer: &[u32]) -> bool {
    if !contains(outer, inner) {
        return false;
    }
    (0..outer.len()).all(|i| {
        let inn = inner.get(i).copied().unwrap_or(0);
        outer[i] - inn <= 1
    })
}

/// True iff `p` is `t`-strict: strictly decreasing wherever a part exceeds
/// `t` (so parts of size at most `t` may repeat).
pub fn is_t_strict(p: &[u32], t: u32) -> bool {
    p.windows(2).all(|w| w[0] <= t || w[0] > w[1])
}

/// All partitions of `boxes` boxes inside a `rows × cols` rectangle, each
/// returned as a length-`rows` vector padded with zeros, in decreasing
/// lexicographic order.
pub fn partitions_in_box(rows: usize, cols: u32, boxes: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(rows);
    fill_box(rows, cols, boxes, &mut acc, &mut out);
    out
}

fn fill_box(rows: usize, cap: u32, boxes: u64, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rows == 0 {
        if boxes == 0 {
            out.push(acc.clone());
        }
        return;
    }
    if boxes > (cap as u64) * (rows as u64) {
        return;
    }
    let hi = (cap as u64).min(boxes) as u32;
    for part in (0..=hi).rev() {
        acc.push(part);
        fill_box(rows - 1, part, boxes - part as u64, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[2, 2, 0]), vec![2, 2]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
        // involution on a few shapes
        for p in partitions_in_box(3, 4, 6) {
            let q = conjugate(&conjugate(&p));
            let trimmed: Vec<u32> = p.iter().copied().filter(|&x| x > 0).collect();
            assert_eq!(q, trimmed);
        }
    }

    #[test]
    fn strip_predicates() {
        assert!(is_horizontal_strip(&[2, 1], &[4, 2]));
        assert!(!is_horizontal_strip(&[2, 1], &[4, 3]));
        assert!(is_vertical_strip(&[2, 1], &[3, 2]));
        assert!(!is_vertical_strip(&[2, 1], &[4, 1]));
        assert!(!is_vertical_strip(&[2, 1], &[1, 1]));
        // the empty strip is both
        assert!(is_horizontal_strip(&[2, 1], &[2, 1]));
        assert!(is_vertical_strip(&[2, 1], &[2, 1]));
    }

    #[test]
    fn box_enumeration_counts() {
        assert_eq!(partitions_in_box(2, 2, 2), vec![vec![2, 0], vec![1, 1]]);
        // the full 2×3 box has C(5,2) = 10 partitions in total
        let total: usize = (0..=6).map(|b| partitions_in_box(2, 3, b).len()).sum();
        assert_eq!(total, 10);
        assert!(partitions_in_box(2, 2, 5).is_empty());
    }

    #[test]
    fn strictness() {
        assert!(is_t_strict(&[5, 3, 3, 1], 3));
        assert!(!is_t_strict(&[5, 5, 1], 3));
        assert!(is_t_strict(&[2, 2, 2], 2));
        assert!(is_t_strict(&[], 0));
    }
}
