//! Jeu de taquin on a rectangular grid poset, the engine behind every
//! structure constant in this crate's flag-variety products.
//!
//! A region of the positive-root poset is a grid: boxes `(t, u)` with
//! `(t, u) ≤ (t', u')` iff `t ≤ t'` and `u ≤ u'`, whose lower order ideals
//! are exactly the Young diagrams anchored at the top-left corner.  A skew
//! shape `ν/λ` carries *standard labellings* (linear extensions), and jeu
//! de taquin slides drain the labels down onto an ideal.  The structure
//! constant `e^ν_{λ,μ}` counts the standard labellings of `ν/λ` that
//! rectify to the canonical (row-reading) labelling of `μ`; on a single
//! `r × c` grid this is the Littlewood–Richardson coefficient of
//! `Gr_r(ℂ^{r+c})`, which [`lr_coeff_via_lattice_words`] recomputes by the
//! classical tableau rule as an independent cross-check.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::partition;
use crate::{Error, Result};

/// A rectangular grid with an injective, order-preserving partial
/// labelling: whenever two labelled boxes are comparable, the lower one
/// carries the smaller label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledTableau {
    rows: usize,
    cols: usize,
    /// Row-major, `labels[t * cols + u]`.
    labels: Vec<Option<u32>>,
}

impl LabelledTableau {
    pub fn new(rows: usize, cols: usize, labels: Vec<Option<u32>>) -> Result<LabelledTableau> {
        if labels.len() != rows * cols {
            return Err(Error::InvalidSkewLabelling(format!(
                "expected {rows}×{cols} = {} slots, got {}",
                rows * cols,
                labels.len()
            )));
        }
        let t = LabelledTableau { rows, cols, labels };
        let mut seen: Vec<u32> = t.labels.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSkewLabelling("labels repeat".into()));
        }
        for a in 0..rows {
            for b in 0..cols {
                let Some(x) = t.label(a, b) else { continue };
                // comparing against the two covers suffices for the full
                // order only on totally labelled shapes, so compare all
                for a2 in a..rows {
                    for b2 in b..cols {
                        if (a2, b2) == (a, b) {
                            continue;
                        }
                        if let Some(y) = t.label(a2, b2) {
                            if y <= x {
                                return Err(Error::InvalidSkewLabelling(format!(
                                    "labels {x} at ({a},{b}) and {y} at ({a2},{b2}) violate the order"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    /// The canonical row-reading labelling of an ideal `μ`: row `t` is
    /// labelled left to right continuing the count from the previous row.
    pub fn canonical(mu: &[u32], rows: usize, cols: usize) -> Result<LabelledTableau> {
        if !partition::is_partition(mu)
            || mu.len() > rows
            || mu.first().copied().unwrap_or(0) as usize > cols
        {
            return Err(Error::InvalidSkewLabelling(format!(
                "{mu:?} is not a partition inside the {rows}×{cols} grid"
            )));
        }
        let mut labels = vec![None; rows * cols];
        let mut next = 1u32;
        for (t, &len) in mu.iter().enumerate() {
            for u in 0..len as usize {
                labels[t * cols + u] = Some(next);
                next += 1;
            }
        }
        Ok(LabelledTableau { rows, cols, labels })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Label of box `(t, u)`, 0-based row-major.
    pub fn label(&self, t: usize, u: usize) -> Option<u32> {
        self.labels[t * self.cols + u]
    }

    /// Number of labelled boxes.
    pub fn count(&self) -> usize {
        self.labels.iter().flatten().count()
    }

    /// Row lengths of the labelled boxes if they form an ideal (a Young
    /// diagram anchored top-left), `None` otherwise.
    pub fn ideal_shape(&self) -> Option<Vec<u32>> {
        let mut shape = Vec::with_capacity(self.rows);
        for t in 0..self.rows {
            let mut len = 0usize;
            for u in 0..self.cols {
                if self.label(t, u).is_some() {
                    if u != len {
                        return None; // gap in the row
                    }
                    len += 1;
                }
            }
            shape.push(len as u32);
        }
        if !partition::is_partition(&shape) {
            return None;
        }
        Some(shape)
    }
}

/// All standard labellings (linear extensions) of the skew shape
/// `outer/inner` inside a `rows × cols` grid: the boxes of the skew shape
/// labelled `1..=m` increasing along rows and columns.
pub fn standard_labellings(
    inner: &[u32],
    outer: &[u32],
    rows: usize,
    cols: usize,
) -> Result<Vec<LabelledTableau>> {
    for p in [inner, outer] {
        if !partition::is_partition(p)
            || p.len() > rows
            || p.first().copied().unwrap_or(0) as usize > cols
        {
            return Err(Error::InvalidSkewLabelling(format!(
                "{p:?} is not a partition inside the {rows}×{cols} grid"
            )));
        }
    }
    if !partition::contains(outer, inner) {
        return Err(Error::InvalidSkewLabelling(format!(
            "{inner:?} is not contained in {outer:?}"
        )));
    }
    let row_bounds: Vec<(usize, usize)> = (0..rows)
        .map(|t| {
            let lo = inner.get(t).copied().unwrap_or(0) as usize;
            let hi = outer.get(t).copied().unwrap_or(0) as usize;
            (lo, hi)
        })
        .collect();
    let m: usize = row_bounds.iter().map(|(lo, hi)| hi - lo).sum();
    let mut labels = vec![None; rows * cols];
    let mut out = Vec::new();
    fill_extensions(&row_bounds, rows, cols, 1, m, &mut labels, &mut out);
    Ok(out)
}

fn fill_extensions(
    row_bounds: &[(usize, usize)],
    rows: usize,
    cols: usize,
    next: usize,
    m: usize,
    labels: &mut Vec<Option<u32>>,
    out: &mut Vec<LabelledTableau>,
) {
    if next > m {
        out.push(LabelledTableau {
            rows,
            cols,
            labels: labels.clone(),
        });
        return;
    }
    for t in 0..rows {
        let (lo, hi) = row_bounds[t];
        for u in lo..hi {
            if labels[t * cols + u].is_some() {
                continue;
            }
            // predecessors inside the skew must already be labelled
            let left_ok = u == lo || labels[t * cols + u - 1].is_some();
            let up_ok = t == 0 || {
                let (plo, phi) = row_bounds[t - 1];
                !(plo..phi).contains(&u) || labels[(t - 1) * cols + u].is_some()
            };
            if left_ok && up_ok {
                labels[t * cols + u] = Some(next as u32);
                fill_extensions(row_bounds, rows, cols, next + 1, m, labels, out);
                labels[t * cols + u] = None;
            }
        }
    }
}

/// Rectify a labelled tableau by jeu de taquin slides.
///
/// While some unlabelled box has a labelled box strictly above it, take the
/// poset-maximal such box (ties broken lexicographically) as the hole and
/// run a slide chain: as long as a labelled box lies strictly above the
/// hole, the smaller-labelled of the labelled covers slides down into it
/// and the vacated box becomes the hole.  Terminates with the labels on an
/// ideal; the result is independent of the tie-breaking (checked by the
/// test sweeps), so the lexicographic rule is fixed purely for determinism.
pub fn jdt_rectify(t: &LabelledTableau) -> LabelledTableau {
    let (rows, cols) = (t.rows, t.cols);
    let mut labels = t.labels.clone();
    let labelled_above = |labels: &[Option<u32>], ht: usize, hu: usize| -> bool {
        for a in ht..rows {
            for b in hu..cols {
                if (a, b) != (ht, hu) && labels[a * cols + b].is_some() {
                    return true;
                }
            }
        }
        false
    };
    loop {
        // poset-maximal unlabelled box with a labelled box strictly above,
        // lexicographically largest among the incomparable maxima
        let mut hole: Option<(usize, usize)> = None;
        for a in 0..rows {
            for b in 0..cols {
                if labels[a * cols + b].is_none() && labelled_above(&labels, a, b) {
                    let dominated = hole.map(|(ha, hb)| a <= ha && b <= hb).unwrap_or(false);
                    if !dominated {
                        hole = Some((a, b));
                    }
                }
            }
        }
        let Some((mut ht, mut hu)) = hole else { break };
        while labelled_above(&labels, ht, hu) {
            let down = (ht + 1 < rows)
                .then(|| labels[(ht + 1) * cols + hu].map(|l| (l, ht + 1, hu)))
                .flatten();
            let right = (hu + 1 < cols)
                .then(|| labels[ht * cols + hu + 1].map(|l| (l, ht, hu + 1)))
                .flatten();
            let (_, a, b) = match (down, right) {
                (Some(x), Some(y)) => {
                    if x.0 < y.0 {
                        x
                    } else {
                        y
                    }
                }
                (Some(x), None) => x,
                (None, Some(y)) => y,
                (None, None) => {
                    unreachable!("labelled box above the hole but no labelled cover")
                }
            };
            labels[ht * cols + hu] = labels[a * cols + b].take();
            ht = a;
            hu = b;
        }
    }
    let out = LabelledTableau { rows, cols, labels };
    debug_assert!(out.ideal_shape().is_some());
    out
}

/// The structure constant `e^ν_{λ,μ}` of the grid poset: the number of
/// standard labellings of `ν/λ` whose rectification is the canonical
/// labelling of `μ`.  Zero when `λ ⊄ ν` or `|λ| + |μ| ≠ |ν|`.
pub fn e_coeff(inner: &[u32], target: &[u32], outer: &[u32], rows: usize, cols: usize) -> u64 {
    if !partition::contains(outer, inner)
        || partition::size(inner) + partition::size(target) != partition::size(outer)
    {
        return 0;
    }
    let Ok(canonical) = LabelledTableau::canonical(target, rows, cols) else {
        return 0;
    };
    let Ok(labellings) = standard_labellings(inner, outer, rows, cols) else {
        // `outer` is not an ideal of this grid, so nothing to count
        return 0;
    };
    labellings
        .iter()
        .filter(|t| jdt_rectify(t) == canonical)
        .count() as u64
}

/// The Littlewood–Richardson coefficient `C^ν_{λ,μ}` of `Gr_r(ℂ^{r+c})`,
/// i.e. [`e_coeff`] on the single-region `r × c` grid.
pub fn lr_coeff(inner: &[u32], target: &[u32], outer: &[u32], rows: usize, cols: usize) -> u64 {
    e_coeff(inner, target, outer, rows, cols)
}

/// Independent Littlewood–Richardson oracle: counts semistandard skew
/// tableaux of shape `ν/λ` and content `μ` whose reverse reading word
/// (rows top to bottom, each read right to left) is a lattice word.  Box
/// bounds do not enter; for shapes inside an `r × c` box this agrees with
/// [`lr_coeff`].
pub fn lr_coeff_via_lattice_words(inner: &[u32], target: &[u32], outer: &[u32]) -> u64 {
    if !partition::contains(outer, inner)
        || partition::size(inner) + partition::size(target) != partition::size(outer)
        || !partition::is_partition(target)
    {
        return 0;
    }
    // boxes in reverse reading order: rows top to bottom, right to left
    let mut boxes: Vec<(usize, usize)> = Vec::new();
    for (t, &row_end) in outer.iter().enumerate() {
        let lo = inner.get(t).copied().unwrap_or(0) as usize;
        for u in (lo..row_end as usize).rev() {
            boxes.push((t, u));
        }
    }
    let mut entries: Vec<Vec<u8>> = outer.iter().map(|&l| vec![0; l as usize]).collect();
    let mut counts = vec![0u32; target.len()];
    fn fill(
        boxes: &[(usize, usize)],
        idx: usize,
        inner: &[u32],
        target: &[u32],
        entries: &mut Vec<Vec<u8>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        let Some(&(t, u)) = boxes.get(idx) else {
            *total += 1;
            return;
        };
        for e in 1..=target.len() {
            // content bound
            if counts[e - 1] + 1 > target[e - 1] {
                continue;
            }
            // lattice: in the reverse reading word every prefix has at
            // least as many e−1 as e
            if e >= 2 && counts[e - 1] + 1 > counts[e - 2] {
                continue;
            }
            // weakly increasing along the row (right neighbour is filled)
            let right_in_skew =
                u + 1 < entries[t].len() && u + 1 >= inner.get(t).copied().unwrap_or(0) as usize;
            if right_in_skew && e as u8 > entries[t][u + 1] {
                continue;
            }
            // strictly increasing down the column (upper neighbour filled)
            if t > 0 {
                let up_in_skew = u < entries[t - 1].len()
                    && u >= inner.get(t - 1).copied().unwrap_or(0) as usize;
                if up_in_skew && e as u8 <= entries[t - 1][u] {
                    continue;
                }
            }
            entries[t][u] = e as u8;
            counts[e - 1] += 1;
            fill(boxes, idx + 1, inner, target, entries, counts, total);
            counts[e - 1] -= 1;
            entries[t][u] = 0;
        }
    }
    let mut total = 0u64;
    fill(
        &boxes,
        0,
        inner,
        target,
        &mut entries,
        &mut counts,
        &mut total,
    );
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partitions_up_to(rows: usize, cols: u32) -> Vec<Vec<u32>> {
        let mut all = Vec::new();
        for b in 0..=(rows as u64 * cols as u64) {
            all.extend(partition::partitions_in_box(rows, cols, b));
        }
        all
    }

    #[test]
    fn canonical_labelling() {
        let t = LabelledTableau::canonical(&[2, 1], 2, 2).unwrap();
        assert_eq!(t.label(0, 0), Some(1));
        assert_eq!(t.label(0, 1), Some(2));
        assert_eq!(t.label(1, 0), Some(3));
        assert_eq!(t.label(1, 1), None);
        assert_eq!(t.ideal_shape(), Some(vec![2, 1]));
        assert!(LabelledTableau::canonical(&[3], 2, 2).is_err());
    }

    #[test]
    fn labelling_validation() {
        // order violation: 2 below-left of 1
        assert!(LabelledTableau::new(2, 2, vec![Some(2), None, Some(1), None]).is_err());
        assert!(LabelledTableau::new(2, 2, vec![Some(1), None, Some(1), None]).is_err());
        assert!(LabelledTableau::new(2, 2, vec![Some(1), Some(3), Some(2), None]).is_ok());
        assert!(LabelledTableau::new(2, 2, vec![None; 3]).is_err());
    }

    #[test]
    fn standard_labelling_counts() {
        // SYT counts: shape (2,1) has 2, shape (2,2) has 2, shape (3,2) 5
        assert_eq!(standard_labellings(&[], &[2, 1], 2, 2).unwrap().len(), 2);
        assert_eq!(standard_labellings(&[], &[2, 2], 2, 2).unwrap().len(), 2);
        assert_eq!(standard_labellings(&[], &[3, 2], 2, 3).unwrap().len(), 5);
        // skew: (2,2)/(1) has 2 standard labellings (a V-shaped poset)
        assert_eq!(standard_labellings(&[1], &[2, 2], 2, 2).unwrap().len(), 2);
        // empty shape has exactly the empty labelling
        assert_eq!(standard_labellings(&[], &[], 2, 2).unwrap().len(), 1);
        assert!(standard_labellings(&[2], &[1], 2, 2).is_err());
    }

    #[test]
    fn rectify_examples() {
        // the two standard labellings of (2,2)/(1) rectify to the two
        // standard labellings of (2,1), matching the classical slides
        let t = LabelledTableau::new(2, 2, vec![None, Some(2), Some(1), Some(3)]).unwrap();
        let r = jdt_rectify(&t);
        assert_eq!(r, LabelledTableau::canonical(&[2, 1], 2, 2).unwrap());
        let t = LabelledTableau::new(2, 2, vec![None, Some(1), Some(2), Some(3)]).unwrap();
        let r = jdt_rectify(&t);
        assert_eq!(
            r,
            LabelledTableau::new(2, 2, vec![Some(1), Some(3), Some(2), None]).unwrap()
        );
        // already-rectified tableaux are fixed points
        let c = LabelledTableau::canonical(&[2, 2], 3, 3).unwrap();
        assert_eq!(jdt_rectify(&c), c);
    }

    #[test]
    fn e_coeff_examples() {
        // e(∅, μ, μ) = 1
        for mu in partitions_up_to(3, 3) {
            assert_eq!(e_coeff(&[], &mu, &mu, 3, 3), 1, "mu={mu:?}");
        }
        // single box times single box in the 2×2 grid
        assert_eq!(e_coeff(&[1], &[1], &[2], 2, 2), 1);
        assert_eq!(e_coeff(&[1], &[1], &[1, 1], 2, 2), 1);
        // c^{(2,1)}_{(1),(1,1)} = 1 and c^{(2,1)}_{(1),(2)} = 1
        assert_eq!(lr_coeff(&[1], &[1, 1], &[2, 1], 2, 2), 1);
        assert_eq!(lr_coeff(&[1], &[2], &[2, 1], 2, 2), 1);
        // c^λ_{λ,∅} = 1
        assert_eq!(lr_coeff(&[2, 1], &[], &[2, 1], 2, 2), 1);
        // degree mismatch gives zero
        assert_eq!(lr_coeff(&[1], &[1], &[2, 2], 2, 2), 0);
        // λ ⊄ ν gives zero
        assert_eq!(lr_coeff(&[2], &[1], &[1, 1, 1], 3, 3), 0);
        // the classic multiplicity-2 case
        assert_eq!(lr_coeff(&[2, 1], &[2, 1], &[3, 2, 1], 3, 3), 2);
        assert_eq!(lr_coeff_via_lattice_words(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
    }

    #[test]
    fn lr_agrees_with_lattice_oracle() {
        // every triple within the 3×3 box (the 4×4 sweep runs in the
        // acceptance suite)
        let shapes = partitions_up_to(3, 3);
        for nu in &shapes {
            for la in &shapes {
                if !partition::contains(nu, la) {
                    continue;
                }
                for mu in &shapes {
                    let via_jdt = lr_coeff(la, mu, nu, 3, 3);
                    let via_words = lr_coeff_via_lattice_words(la, mu, nu);
                    assert_eq!(via_jdt, via_words, "λ={la:?} μ={mu:?} ν={nu:?}");
                }
            }
        }
    }

    #[test]
    fn lr_symmetry() {
        let shapes = partitions_up_to(3, 3);
        for nu in &shapes {
            for la in &shapes {
                for mu in &shapes {
                    assert_eq!(
                        lr_coeff(la, mu, nu, 3, 3),
                        lr_coeff(mu, la, nu, 3, 3),
                        "λ={la:?} μ={mu:?} ν={nu:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn rectification_target_independence() {
        // the count of labellings of ν/λ rectifying to a fixed standard
        // labelling of μ does not depend on which labelling is fixed
        let shapes = partitions_up_to(3, 3);
        for nu in &shapes {
            for la in &shapes {
                if !partition::contains(nu, la) {
                    continue;
                }
                if partition::size(nu) - partition::size(la) > 6 {
                    continue;
                }
                let labellings = standard_labellings(la, nu, 3, 3).unwrap();
                let rectified: Vec<LabelledTableau> = labellings.iter().map(jdt_rectify).collect();
                // group by rectified shape
                let mut shapes_seen: Vec<Vec<u32>> = rectified
                    .iter()
                    .map(|r| r.ideal_shape().expect("rectification is an ideal"))
                    .collect();
                shapes_seen.sort();
                shapes_seen.dedup();
                for mu in shapes_seen {
                    let targets = standard_labellings(&[], &mu, 3, 3).unwrap();
                    let counts: Vec<usize> = targets
                        .iter()
                        .map(|t| rectified.iter().filter(|r| *r == t).count())
                        .collect();
                    assert!(
                        counts.windows(2).all(|w| w[0] == w[1]),
                        "ν={nu:?} λ={la:?} μ={mu:?}: {counts:?}"
                    );
                    assert!(counts[0] > 0);
                }
            }
        }
    }
}
