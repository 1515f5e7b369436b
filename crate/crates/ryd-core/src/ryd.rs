//! Root-theoretic Young diagrams: the flag-variety kind (one partition per
//! region, glued by a hook condition) and the isotropic kind (base rows
//! plus a staircase top, glued by a support condition), together with all
//! conversions from permutations, codes, and signed permutations.
//!
//! A subset `S` of the positive roots of `GL_n` is the inversion set of a
//! permutation with restricted descents exactly when it is a union of lower
//! order ideals of the regions satisfying the *hook condition*: writing
//! `H(α) = {(a,l) : a<l<b} ∪ {(j,b) : a<j<b}` for the hook of `α = (a,b)`
//! (so `|H(α)| = 2(b−a−1)`), the root `α` must be in `S` whenever more than
//! half of `H(α)` is, and out of `S` whenever more than half is not.
//! For each admissible row-count vector there is exactly one hook-valid
//! subset, found by a greedy coloring that fills rows bottom-up.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::partition;
use crate::perm::{perm_from_code, GrassPerm, SignedFamily, SignedPerm};
use crate::poset::{FlagShape, LieFamily, TypeARoot};
use crate::{Error, Result};

/// A root-theoretic Young diagram on a flag variety: one partition per
/// region `(i,j)`, the partition `λ_ij` living in an `r_i × r_j` box.
///
/// Row `t` of `λ_ij` (1-based) corresponds to `a = k_i + 1 − t`, i.e. rows
/// are indexed by `a ∈ I_i` in decreasing order of `a`, and its value is
/// `#{b ∈ I_j : w(a) > w(b)}`.  Construction validates the hook condition,
/// so every value of this type is the diagram of a unique permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagRYD {
    shape: FlagShape,
    /// Region partitions in lexicographic `(i,j)` order, each of length
    /// `r_i`, padded with zeros.
    parts: Vec<Vec<u32>>,
}

/// Index of region `(i,j)` in lexicographic order, `1 ≤ i < j ≤ d`.
fn region_index(i: usize, j: usize, d: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= d);
    // regions (1,2) … (1,d), (2,3) … : i−1 full blocks precede
    (i - 1) * d - (i - 1) * i / 2 + (j - i - 1)
}

impl FlagRYD {
    /// Build a diagram from its region partitions, validating box fit and
    /// the hook condition.  `parts` are keyed `(i,j)` in any order.
    pub fn new(shape: &FlagShape, parts: &[((usize, usize), Vec<u32>)]) -> Result<FlagRYD> {
        let d = shape.d();
        let mut ordered: Vec<Vec<u32>> = (1..=d)
            .flat_map(|i| (i + 1..=d).map(move |_| Vec::new()))
            .collect();
        debug_assert_eq!(ordered.len(), d * (d - 1) / 2);
        let mut seen = vec![false; ordered.len()];
        for ((i, j), p) in parts {
            let (i, j) = (*i, *j);
            if i == 0 || i >= j || j > d {
                return Err(Error::InvalidDiagram(format!(
                    "region ({i},{j}) does not exist for d={d}"
                )));
            }
            let idx = region_index(i, j, d);
            if seen[idx] {
                return Err(Error::InvalidDiagram(format!(
                    "region ({i},{j}) given twice"
                )));
            }
            seen[idx] = true;
            let mut padded = p.clone();
            if padded.len() > shape.r(i) {
                return Err(Error::InvalidDiagram(format!(
                    "partition for region ({i},{j}) has more than r_{i}={} rows",
                    shape.r(i)
                )));
            }
            padded.resize(shape.r(i), 0);
            ordered[idx] = padded;
        }
        for (idx, p) in ordered.iter_mut().enumerate() {
            if !seen[idx] {
                // absent regions default to the empty partition
                let (i, _) = region_of_index(idx, d);
                p.resize(shape.r(i), 0);
            }
        }
        let ryd = FlagRYD {
            shape: shape.clone(),
            parts: ordered,
        };
        if !validate_k_diagram(&ryd.parts_with_regions(), shape) {
            return Err(Error::InvalidDiagram(
                "region partitions violate the hook condition".into(),
            ));
        }
        Ok(ryd)
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    /// The partition of region `(i,j)`, length `r_i`.
    pub fn part(&self, i: usize, j: usize) -> &[u32] {
        &self.parts[region_index(i, j, self.shape.d())]
    }

    /// All `((i,j), partition)` pairs in lexicographic region order.
    pub fn parts_with_regions(&self) -> Vec<((usize, usize), Vec<u32>)> {
        let d = self.shape.d();
        let mut out = Vec::with_capacity(self.parts.len());
        for i in 1..=d {
            for j in i + 1..=d {
                out.push(((i, j), self.parts[region_index(i, j, d)].clone()));
            }
        }
        out
    }

    /// Number of boxes in region `(i,j)`.
    pub fn degree(&self, i: usize, j: usize) -> u64 {
        partition::size(self.part(i, j))
    }

    /// Total number of boxes = Coxeter length of the permutation.
    pub fn total_degree(&self) -> u64 {
        self.parts.iter().map(|p| partition::size(p)).sum()
    }

    /// The underlying set of inverted roots.
    pub fn root_set(&self) -> Vec<TypeARoot> {
        let d = self.shape.d();
        let mut out = Vec::new();
        for i in 1..=d {
            for j in i + 1..=d {
                let p = self.part(i, j);
                let ki = self.shape.k_bound(i);
                let kj_prev = self.shape.k_bound(j - 1);
                for (t, &len) in p.iter().enumerate() {
                    let a = ki - t; // a = k_i + 1 − (t+1)
                    for u in 1..=len as usize {
                        out.push(TypeARoot::new(a, kj_prev + u));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn region_of_index(idx: usize, d: usize) -> (usize, usize) {
    let mut c = 0;
    for i in 1..=d {
        for j in i + 1..=d {
            if c == idx {
                return (i, j);
            }
            c += 1;
        }
    }
    unreachable!()
}

/// The diagram of a permutation: region `(i,j)` row `t` records how many
/// entries of `w` on the interval `I_j` are smaller than `w(k_i + 1 − t)`.
pub fn ryd_from_perm(w: &GrassPerm) -> FlagRYD {
    let shape = w.shape();
    let d = shape.d();
    let mut parts = Vec::with_capacity(d * (d - 1) / 2);
    for i in 1..=d {
        let ki = shape.k_bound(i);
        for j in i + 1..=d {
            let (blo, bhi) = shape.interval(j);
            let mut p = Vec::with_capacity(shape.r(i));
            for t in 1..=shape.r(i) {
                let a = ki + 1 - t;
                let count = (blo..=bhi).filter(|&b| w.at(a) > w.at(b)).count() as u32;
                p.push(count);
            }
            parts.push(p);
        }
    }
    let ryd = FlagRYD {
        shape: shape.clone(),
        parts,
    };
    debug_assert!(validate_k_diagram(&ryd.parts_with_regions(), shape));
    ryd
}

/// Inverse of [`ryd_from_perm`]: read off the row-count vector of the root
/// set, interpret it as a code, and build the permutation.
pub fn perm_from_ryd(ryd: &FlagRYD) -> Result<GrassPerm> {
    let shape = ryd.shape();
    let n = shape.n();
    let mut c = vec![0u32; n.saturating_sub(1)];
    for root in ryd.root_set() {
        c[root.a - 1] += 1;
    }
    perm_from_code(&c, shape)
}

/// The hook condition on a union of region ideals.
///
/// `parts` gives each region's partition (rows under the `a`-decreasing
/// convention).  Returns true iff each part is a partition fitting its box
/// and, for every positive root `α = (a,b)` with hook `H(α)`, both
/// implications hold: more than half of `H(α)` used forces `α` used, more
/// than half unused forces `α` unused.
pub fn validate_k_diagram(parts: &[((usize, usize), Vec<u32>)], shape: &FlagShape) -> bool {
    let n = shape.n();
    for ((i, j), p) in parts {
        if !partition::is_partition(p) {
            return false;
        }
        if p.len() > shape.r(*i) {
            return false;
        }
        if p.first().copied().unwrap_or(0) as usize > shape.r(*j) {
            return false;
        }
    }
    // membership grid indexed by (a,b)
    let mut used = vec![false; (n + 1) * (n + 1)];
    for ((i, j), p) in parts {
        let ki = shape.k_bound(*i);
        let kj_prev = shape.k_bound(*j - 1);
        for (t, &len) in p.iter().enumerate() {
            let a = ki - t;
            for u in 1..=len as usize {
                used[a * (n + 1) + kj_prev + u] = true;
            }
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            let in_s = used[a * (n + 1) + b];
            let mut used_count = 0usize;
            for l in a + 1..b {
                if used[a * (n + 1) + l] {
                    used_count += 1;
                }
                if used[l * (n + 1) + b] {
                    used_count += 1;
                }
            }
            let hook = 2 * (b - a - 1);
            let half = b - a - 1;
            if used_count > half && !in_s {
                return false;
            }
            if hook - used_count > half && in_s {
                return false;
            }
        }
    }
    true
}

/// The unique hook-valid root set with the given row counts (`c_j` roots in
/// row `j`; requires `c_j ≤ n−j`), built by greedy coloring.
///
/// Rows are processed from `n−1` down to `1`.  Within row `j`, repeat `c_j`
/// times: if some uncolored root `(j,b)` has exactly half of its hook
/// colored (an empty hook qualifies trivially), color the one with the
/// largest `b`; otherwise color the uncolored root with the smallest `b`.
pub fn diagram_from_code(c: &[u32], n: usize) -> Vec<TypeARoot> {
    assert!(c.len() + 1 == n, "expected n−1 row counts");
    for (idx, &cj) in c.iter().enumerate() {
        assert!(
            cj as usize <= n - (idx + 1),
            "row count c_{} = {cj} exceeds n−j = {}",
            idx + 1,
            n - (idx + 1)
        );
    }
    let mut black = vec![false; (n + 1) * (n + 1)];
    for j in (1..n).rev() {
        for _ in 0..c[j - 1] {
            // candidates with exactly half their hook black; remember the
            // highest
            let mut chosen = None;
            let mut lowest_uncolored = None;
            for b in j + 1..=n {
                if black[j * (n + 1) + b] {
                    continue;
                }
                if lowest_uncolored.is_none() {
                    lowest_uncolored = Some(b);
                }
                let mut black_count = 0usize;
                for l in j + 1..b {
                    if black[j * (n + 1) + l] {
                        black_count += 1;
                    }
                    if black[l * (n + 1) + b] {
                        black_count += 1;
                    }
                }
                if black_count == b - j - 1 {
                    chosen = Some(b);
                }
            }
            let b = chosen
                .or(lowest_uncolored)
                .expect("row has fewer roots than its count");
            black[j * (n + 1) + b] = true;
        }
    }
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if black[a * (n + 1) + b] {
                out.push(TypeARoot::new(a, b));
            }
        }
    }
    out
}

/// Charge marker on an even orthogonal RYD whose base touches the fork
/// column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Charge {
    Up,
    Down,
}

/// A root-theoretic Young diagram on a non-maximal isotropic Grassmannian:
/// a base partition `λ^(1)` with `k` rows (row `i` corresponds to
/// signed-permutation position `k+1−i`), a top staircase partition `λ^(2)`
/// inside `(k−1, …, 1, 0)`, and — in the even family only — a charge
/// present exactly when some base row equals `n−k` (the fork column of the
/// double-tailed diamond).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsotropicRYD {
    pub family: LieFamily,
    pub n: usize,
    pub k: usize,
    /// Base rows `λ^(1)`, length `k`.
    pub base: Vec<u32>,
    /// Top staircase `λ^(2)`, length `k`, row `i` counting the used top
    /// roots paired with base row `i`.
    pub top: Vec<u32>,
    pub charge: Option<Charge>,
}

impl IsotropicRYD {
    pub fn new(
        family: LieFamily,
        n: usize,
        k: usize,
        base: &[u32],
        top: &[u32],
        charge: Option<Charge>,
    ) -> Result<IsotropicRYD> {
        if k == 0 || k >= n || (family == LieFamily::D && k + 1 >= n) {
            return Err(Error::InvalidIsotropicShape(format!(
                "invalid (family, n, k) = ({family:?}, {n}, {k})"
            )));
        }
        let row_len = match family {
            LieFamily::B => 2 * n + 1 - 2 * k,
            LieFamily::D => 2 * n - 2 * k,
        } as u32;
        let mut base = base.to_vec();
        let mut top = top.to_vec();
        if base.len() > k || top.len() > k {
            return Err(Error::InvalidDiagram(format!(
                "more than k={k} rows in base or top"
            )));
        }
        base.resize(k, 0);
        top.resize(k, 0);
        if !partition::is_partition(&base) || base[0] > row_len {
            return Err(Error::InvalidDiagram(format!(
                "base {:?} is not a partition in the k×{row_len} box",
                base
            )));
        }
        for i in 0..k {
            if top[i] as usize > k - (i + 1) {
                return Err(Error::InvalidDiagram(format!(
                    "top row {} exceeds the staircase bound {}",
                    i + 1,
                    k - (i + 1)
                )));
            }
            if i + 1 < k && top[i] > 0 && top[i] <= top[i + 1] {
                return Err(Error::InvalidDiagram(format!(
                    "top {:?} must decrease strictly while nonzero",
                    top
                )));
            }
        }
        let charged_base = family == LieFamily::D && base.contains(&(row_len / 2));
        match (charged_base, charge) {
            (true, None) => {
                return Err(Error::InvalidDiagram(format!(
                    "base {:?} touches the fork column, a charge is required",
                    base
                )))
            }
            (false, Some(_)) => {
                return Err(Error::InvalidDiagram(format!(
                    "base {:?} does not touch the fork column, no charge allowed",
                    base
                )))
            }
            _ => {}
        }
        if family == LieFamily::B && charge.is_some() {
            return Err(Error::InvalidDiagram(
                "odd orthogonal diagrams carry no charge".into(),
            ));
        }
        let ryd = IsotropicRYD {
            family,
            n,
            k,
            base,
            top,
            charge,
        };
        if !validate_support(&ryd) {
            return Err(Error::InvalidDiagram(
                "base/top violate the support condition".into(),
            ));
        }
        Ok(ryd)
    }

    /// Base row length of the ambient poset (`2n+1−2k` or `2n−2k`).
    pub fn row_len(&self) -> u32 {
        match self.family {
            LieFamily::B => (2 * self.n + 1 - 2 * self.k) as u32,
            LieFamily::D => (2 * self.n - 2 * self.k) as u32,
        }
    }

    /// Total number of roots used.
    pub fn total_degree(&self) -> u64 {
        partition::size(&self.base) + partition::size(&self.top)
    }

    /// True iff the top root pairing base rows `i < j` (1-based) is used.
    pub fn top_root_used(&self, i: usize, j: usize) -> bool {
        debug_assert!(1 <= i && i < j && j <= self.k);
        j <= i + self.top[i - 1] as usize
    }
}

/// The support condition tying the top staircase to the base rows: for
/// every pair of base rows `i < j`, if `λ^(1)_i + λ^(1)_j` strictly exceeds
/// the base row length the top root pairing them must be used, and if it is
/// strictly below the top root must be unused.  Equality leaves the root
/// free.
pub fn validate_support(ryd: &IsotropicRYD) -> bool {
    let threshold = ryd.row_len() as u64;
    for i in 1..=ryd.k {
        for j in i + 1..=ryd.k {
            let joint = ryd.base[i - 1] as u64 + ryd.base[j - 1] as u64;
            let used = ryd.top_root_used(i, j);
            if joint > threshold && !used {
                return false;
            }
            if joint < threshold && used {
                return false;
            }
        }
    }
    true
}

/// The diagram of a signed permutation in normal form (the inversion-set
/// formulas of the odd and even translation lemmas).
///
/// With blocks `(y, z, v)` and `r` bars in the head, writing `q = n+1−k`
/// in the odd family and `q = n−k` in the even one:
///
/// * base row `i ≤ r`:  `q + #{l : z_i < v_l}`; row `i > r`:
///   `#{l : y_{k+1−i} > v_l}`;
/// * top row `i ≤ r`:  `#{q' : z_i < z_{q'}} + #{t : z_i < y_t}`; row
///   `i > r`: `0`;
/// * even family: if some base row equals `n−k` the diagram is charged, up
///   for type I and down for type II.
pub fn ryd_from_signed_perm(w: &SignedPerm) -> IsotropicRYD {
    let n = w.n();
    let k = w.k();
    let r = w.r();
    let y = w.y_block();
    let z = w.z_block();
    let v = w.v_block();
    let family = match w.family() {
        SignedFamily::B => LieFamily::B,
        SignedFamily::D => LieFamily::D,
    };
    let q = match family {
        LieFamily::B => n + 1 - k,
        LieFamily::D => n - k,
    };
    let mut base = Vec::with_capacity(k);
    let mut top = Vec::with_capacity(k);
    for i in 1..=k {
        if i <= r {
            let zi = z[i - 1];
            base.push((q + v.iter().filter(|&&vl| zi < vl).count()) as u32);
            let above_z = z.iter().filter(|&&zq| zi < zq).count();
            let above_y = y.iter().filter(|&&yt| zi < yt).count();
            top.push((above_z + above_y) as u32);
        } else {
            let yi = y[k - i]; // y_{k+1−i}
            base.push(v.iter().filter(|&&vl| yi > vl).count() as u32);
            top.push(0);
        }
    }
    let charge = if family == LieFamily::D && base.contains(&((n - k) as u32)) {
        match w.d_type() {
            crate::perm::DPermType::I => Some(Charge::Up),
            crate::perm::DPermType::II => Some(Charge::Down),
        }
    } else {
        None
    };
    let ryd = IsotropicRYD {
        family,
        n,
        k,
        base,
        top,
        charge,
    };
    debug_assert!(validate_support(&ryd), "translated diagram {ryd:?}");
    ryd
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{code_of, enumerate_flag_perms, enumerate_signed_perms};

    fn shape(n: usize, k: &[usize]) -> FlagShape {
        FlagShape::new(n, k).unwrap()
    }

    fn all_flag_shapes(n: usize) -> Vec<FlagShape> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n - 1)) {
            let k: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            out.push(shape(n, &k));
        }
        out
    }

    #[test]
    fn ryd_from_perm_example() {
        let s = shape(7, &[2, 5]);
        let w = GrassPerm::new(&[2, 6, 1, 4, 5, 3, 7], &s).unwrap();
        let ryd = ryd_from_perm(&w);
        assert_eq!(ryd.part(1, 2), &[3, 1]);
        assert_eq!(ryd.part(1, 3), &[1, 0]);
        assert_eq!(ryd.part(2, 3), &[1, 1, 0]);
        assert_eq!(ryd.degree(1, 2), 4);
        assert_eq!(ryd.degree(1, 3), 1);
        assert_eq!(ryd.degree(2, 3), 2);
        assert_eq!(ryd.total_degree(), w.length() as u64);

        let id = GrassPerm::identity(&s);
        assert_eq!(ryd_from_perm(&id).total_degree(), 0);
    }

    #[test]
    fn perm_from_ryd_example() {
        let s = shape(7, &[2, 5]);
        let ryd = FlagRYD::new(
            &s,
            &[
                ((1, 2), vec![3, 1]),
                ((1, 3), vec![1, 0]),
                ((2, 3), vec![1, 1, 0]),
            ],
        )
        .unwrap();
        let w = perm_from_ryd(&ryd).unwrap();
        assert_eq!(w.one_line(), &[2, 6, 1, 4, 5, 3, 7]);
        // all-empty diagram is the identity
        let empty = FlagRYD::new(&s, &[]).unwrap();
        assert_eq!(perm_from_ryd(&empty).unwrap(), GrassPerm::identity(&s));
    }

    #[test]
    fn ryd_roundtrip_exhaustive() {
        for n in 2..=6 {
            for s in all_flag_shapes(n) {
                for w in enumerate_flag_perms(&s, None).unwrap() {
                    let ryd = ryd_from_perm(&w);
                    assert!(validate_k_diagram(&ryd.parts_with_regions(), &s));
                    assert_eq!(perm_from_ryd(&ryd).unwrap(), w);
                    // length additivity
                    assert_eq!(ryd.total_degree(), w.length() as u64);
                }
            }
        }
    }

    #[test]
    fn invalid_diagrams_rejected() {
        let s = shape(7, &[2, 5]);
        // (1,0) in region (1,2) with (1,0,0) missing hooks: take a diagram
        // that is not a union of ideals: non-partition row
        assert!(FlagRYD::new(&s, &[((1, 2), vec![1, 2])]).is_err());
        // partition too wide for its box
        assert!(FlagRYD::new(&s, &[((1, 3), vec![3, 0])]).is_err());
        // hook violation: in n=3, k={1,2} (full flag), using (1,3) without
        // (1,2) or (2,3) breaks the hook condition at (1,3)
        let s3 = shape(3, &[1, 2]);
        assert!(FlagRYD::new(&s3, &[((1, 3), vec![1])]).is_err());
        assert!(FlagRYD::new(&s3, &[((1, 2), vec![1]), ((1, 3), vec![1])]).is_ok());
    }

    #[test]
    fn hook_count_matches_cell_count() {
        // number of hook-valid diagrams = |S_n^k|, via exhaustive
        // candidate-tuple filtering, n ≤ 5
        for n in 2..=5usize {
            for s in all_flag_shapes(n) {
                let d = s.d();
                // all per-region partition choices
                let mut region_choices: Vec<Vec<Vec<u32>>> = Vec::new();
                for i in 1..=d {
                    for j in i + 1..=d {
                        let mut all = Vec::new();
                        let max = (s.r(i) * s.r(j)) as u64;
                        for b in 0..=max {
                            all.extend(partition::partitions_in_box(s.r(i), s.r(j) as u32, b));
                        }
                        region_choices.push(all);
                    }
                }
                let mut count = 0usize;
                let mut stack: Vec<usize> = vec![0; region_choices.len()];
                'outer: loop {
                    let parts: Vec<((usize, usize), Vec<u32>)> = {
                        let mut ps = Vec::new();
                        let mut idx = 0;
                        for i in 1..=d {
                            for j in i + 1..=d {
                                ps.push(((i, j), region_choices[idx][stack[idx]].clone()));
                                idx += 1;
                            }
                        }
                        ps
                    };
                    if validate_k_diagram(&parts, &s) {
                        count += 1;
                    }
                    // odometer
                    for pos in (0..stack.len()).rev() {
                        stack[pos] += 1;
                        if stack[pos] < region_choices[pos].len() {
                            continue 'outer;
                        }
                        stack[pos] = 0;
                        if pos == 0 {
                            break 'outer;
                        }
                    }
                    if stack.is_empty() {
                        // d = 1: single empty tuple already counted
                        break;
                    }
                }
                let cells = enumerate_flag_perms(&s, None).unwrap().len();
                assert_eq!(count, cells, "n={n} k={:?}", s.k());
            }
        }
    }

    #[test]
    fn hook_uniqueness_over_all_subsets() {
        // for each row-count vector there is exactly one hook-valid subset
        // of the positive roots, n ≤ 5 (brute force over all 2^10 subsets)
        for n in 2..=5usize {
            let roots = crate::poset::type_a_positive_roots(n);
            let m = roots.len();
            let mut per_code: alloc::collections::BTreeMap<Vec<u32>, usize> =
                alloc::collections::BTreeMap::new();
            for mask in 0u32..(1 << m) {
                let set: Vec<TypeARoot> = (0..m)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| roots[i])
                    .collect();
                if hook_valid_set(&set, n) {
                    let mut c = vec![0u32; n - 1];
                    for r in &set {
                        c[r.a - 1] += 1;
                    }
                    *per_code.entry(c).or_insert(0) += 1;
                }
            }
            // every admissible row-count vector appears exactly once
            let mut admissible = 0usize;
            let mut counts = vec![0u32; n - 1];
            loop {
                admissible += 1;
                let key: Vec<u32> = counts.clone();
                assert_eq!(per_code.get(&key).copied(), Some(1), "n={n} c={key:?}");
                // odometer over c_j ≤ n−j
                let mut pos = n - 1;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    counts[pos] += 1;
                    if counts[pos] as usize <= n - (pos + 1) {
                        break;
                    }
                    counts[pos] = 0;
                }
                if counts.iter().all(|&x| x == 0) {
                    break;
                }
            }
            let mut expected = 1usize;
            for v in 2..=n {
                expected *= v;
            }
            assert_eq!(admissible, expected);
            assert_eq!(per_code.values().sum::<usize>(), expected);
        }
    }

    /// Hook condition on a raw root set (no ideal structure assumed).
    fn hook_valid_set(set: &[TypeARoot], n: usize) -> bool {
        for a in 1..=n {
            for b in a + 1..=n {
                let in_s = set.contains(&TypeARoot::new(a, b));
                let mut used = 0usize;
                for l in a + 1..b {
                    if set.contains(&TypeARoot::new(a, l)) {
                        used += 1;
                    }
                    if set.contains(&TypeARoot::new(l, b)) {
                        used += 1;
                    }
                }
                let half = b - a - 1;
                let hook = 2 * half;
                if used > half && !in_s {
                    return false;
                }
                if hook - used > half && in_s {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn greedy_coloring_worked_example() {
        // row counts (4,2,3,0,2,1) in n=7: the full 12-root diagram
        let set = diagram_from_code(&[4, 2, 3, 0, 2, 1], 7);
        let expected = [
            (1, 2),
            (1, 4),
            (1, 6),
            (1, 7),
            (2, 4),
            (2, 7),
            (3, 4),
            (3, 6),
            (3, 7),
            (5, 6),
            (5, 7),
            (6, 7),
        ];
        let expected: Vec<TypeARoot> = expected
            .iter()
            .map(|&(a, b)| TypeARoot::new(a, b))
            .collect();
        assert_eq!(set, expected);
        assert!(hook_valid_set(&set, 7));
        assert_eq!(diagram_from_code(&[0; 6], 7), Vec::new());
    }

    #[test]
    fn greedy_matches_inversion_sets() {
        // for codes in the class, the greedy coloring is the inversion set
        for n in 2..=6 {
            for s in all_flag_shapes(n) {
                for w in enumerate_flag_perms(&s, None).unwrap() {
                    let c = code_of(&w);
                    let greedy = diagram_from_code(&c, n);
                    let inv = ryd_from_perm(&w).root_set();
                    assert_eq!(greedy, inv, "w={:?} k={:?}", w.one_line(), s.k());
                }
            }
        }
    }

    #[test]
    fn isotropic_from_signed_perm_examples() {
        // odd: (2,3,7,8̄,4̄,1,5,6), k=5 → ((6,4,3,1,1) | (2,0,0,0,0))
        let w = SignedPerm::new(&[2, 3, 7, -8, -4, 1, 5, 6], 5, SignedFamily::B).unwrap();
        let ryd = ryd_from_signed_perm(&w);
        assert_eq!(ryd.base, vec![6, 4, 3, 1, 1]);
        assert_eq!(ryd.top, vec![2, 0, 0, 0, 0]);
        assert_eq!(ryd.charge, None);

        // even: (2,4,8̄,6̄,1̄,3,5,7̄), k=5 → ((6,4,3,1,0) | (4,1,0,0,0)) down
        let w = SignedPerm::new(&[2, 4, -8, -6, -1, 3, 5, -7], 5, SignedFamily::D).unwrap();
        let ryd = ryd_from_signed_perm(&w);
        assert_eq!(ryd.base, vec![6, 4, 3, 1, 0]);
        assert_eq!(ryd.top, vec![4, 1, 0, 0, 0]);
        assert_eq!(ryd.charge, Some(Charge::Down));

        // identity-like element: Y = [1..k]
        let w = SignedPerm::from_blocks(&[1, 2], &[], &[3, 4, 5], SignedFamily::B).unwrap();
        let ryd = ryd_from_signed_perm(&w);
        assert_eq!(ryd.total_degree(), 0);
    }

    #[test]
    fn isotropic_validation() {
        // charge required exactly when a base row hits n−k (even family)
        assert!(IsotropicRYD::new(LieFamily::D, 6, 3, &[3, 0, 0], &[0; 3], None).is_err());
        assert!(
            IsotropicRYD::new(LieFamily::D, 6, 3, &[3, 0, 0], &[0; 3], Some(Charge::Up)).is_ok()
        );
        assert!(IsotropicRYD::new(LieFamily::D, 6, 3, &[2, 0, 0], &[0; 3], None).is_ok());
        assert!(
            IsotropicRYD::new(LieFamily::D, 6, 3, &[2, 0, 0], &[0; 3], Some(Charge::Up)).is_err()
        );
        assert!(
            IsotropicRYD::new(LieFamily::B, 5, 3, &[5, 0, 0], &[0; 3], Some(Charge::Up)).is_err()
        );
        // support: rows 1,2 sum over threshold forces the top root
        // B n=5 k=3: threshold 2n+1−2k = 5
        assert!(IsotropicRYD::new(LieFamily::B, 5, 3, &[5, 1, 0], &[0; 3], None).is_err());
        assert!(IsotropicRYD::new(LieFamily::B, 5, 3, &[5, 1, 0], &[1, 0, 0], None).is_ok());
        // equality at the threshold is free
        assert!(IsotropicRYD::new(LieFamily::B, 5, 3, &[4, 1, 0], &[0; 3], None).is_ok());
        assert!(IsotropicRYD::new(LieFamily::B, 5, 3, &[4, 1, 0], &[1, 0, 0], None).is_ok());
        // top bound and strictness
        assert!(IsotropicRYD::new(LieFamily::B, 5, 3, &[0; 3], &[3, 0, 0], None).is_err());
        assert!(IsotropicRYD::new(LieFamily::B, 6, 4, &[5, 5, 2, 2], &[2, 2, 0, 0], None).is_err());
        // empty diagram is fine
        assert!(IsotropicRYD::new(LieFamily::B, 5, 3, &[], &[], None).is_ok());
    }

    #[test]
    fn all_signed_perm_images_validate() {
        for (family, n_max) in [(SignedFamily::B, 5), (SignedFamily::D, 5)] {
            for n in 2..=n_max {
                for k in 1..n {
                    if family == SignedFamily::D && k + 1 >= n {
                        continue;
                    }
                    let perms = enumerate_signed_perms(family, n, k, None).unwrap();
                    let mut images = Vec::new();
                    for w in &perms {
                        let ryd = ryd_from_signed_perm(w);
                        assert!(validate_support(&ryd));
                        // reconstruct through the validating constructor
                        let again = IsotropicRYD::new(
                            ryd.family, ryd.n, ryd.k, &ryd.base, &ryd.top, ryd.charge,
                        )
                        .unwrap();
                        assert_eq!(again, ryd);
                        images.push(ryd);
                    }
                    // the translation is injective
                    let total = images.len();
                    images.sort_by_key(|r| {
                        (
                            r.base.clone(),
                            r.top.clone(),
                            match r.charge {
                                None => 0u8,
                                Some(Charge::Up) => 1,
                                Some(Charge::Down) => 2,
                            },
                        )
                    });
                    images.dedup();
                    assert_eq!(images.len(), total, "{family:?} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn valid_isotropic_count_matches_weyl_count() {
        // enumerate all candidate (base, top, charge) triples and keep the
        // support-valid ones; the count must equal the number of normal
        // forms
        for (family, lie, n, k) in [
            (SignedFamily::B, LieFamily::B, 4, 2),
            (SignedFamily::B, LieFamily::B, 5, 3),
            (SignedFamily::D, LieFamily::D, 5, 2),
            (SignedFamily::D, LieFamily::D, 5, 3),
        ] {
            let row_len = match lie {
                LieFamily::B => 2 * n + 1 - 2 * k,
                LieFamily::D => 2 * n - 2 * k,
            } as u32;
            let mut bases = Vec::new();
            for b in 0..=(k as u64 * row_len as u64) {
                bases.extend(partition::partitions_in_box(k, row_len, b));
            }
            let mut tops = vec![];
            // staircase subsets: rows strictly decreasing while nonzero
            fn staircases(
                k: usize,
                row: usize,
                max: u32,
                acc: &mut Vec<u32>,
                out: &mut Vec<Vec<u32>>,
            ) {
                if row == k {
                    out.push(acc.clone());
                    return;
                }
                let cap = (k - row - 1) as u32;
                let hi = max.min(cap);
                for v in (0..=hi).rev() {
                    acc.push(v);
                    let next_max = if v == 0 { 0 } else { v - 1 };
                    staircases(k, row + 1, next_max, acc, out);
                    acc.pop();
                }
            }
            staircases(k, 0, k as u32, &mut vec![], &mut tops);
            let mut count = 0usize;
            for base in &bases {
                for top in &tops {
                    let charges: &[Option<Charge>] =
                        if lie == LieFamily::D && base.contains(&(row_len / 2)) {
                            &[Some(Charge::Up), Some(Charge::Down)]
                        } else {
                            &[None]
                        };
                    for &charge in charges {
                        if IsotropicRYD::new(lie, n, k, base, top, charge).is_ok() {
                            count += 1;
                        }
                    }
                }
            }
            let weyl = enumerate_signed_perms(family, n, k, None).unwrap().len();
            assert_eq!(count, weyl, "{family:?} n={n} k={k}");
        }
    }
}
