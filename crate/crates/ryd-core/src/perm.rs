//! Permutations with restricted descent positions, their codes and words,
//! and the signed permutations indexing isotropic Grassmannians.
//!
//! `S_n^k` is the set of permutations whose descents lie in a fixed set of
//! positions `k`; it indexes the Schubert classes of the flag variety with
//! shape `k`.  Three coordinate systems for the same set are implemented and
//! kept in bijection:
//!
//! * one-line notation (the defining data);
//! * codes `c_w(i) = #{j > i : w(i) > w(j)}`, characterised by `c_j ≤ n−j`
//!   with `c_j > c_{j+1}` only across interval boundaries;
//! * words using letter `i` exactly `r_i` times — the permutation is read
//!   off by listing the positions of the 1s, then of the 2s, and so on.
//!
//! Signed permutations appear in their minimal-coset normal form
//! `(y_1 < … < y_{k−r}, z̄_r, …, z̄_1, v_1 < … < v_{n−k})` with
//! `z_r > … > z_1`; in the even orthogonal case the total number of bars is
//! even, so the last tail entry carries a bar exactly when `r` is odd
//! (type II) and is unbarred when `r` is even (type I).

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::FlagShape;
use crate::{Error, Result};

/// Default cap for exhaustive enumerations; raise explicitly to go beyond.
pub const DEFAULT_ENUM_BOUND: usize = 9;

fn check_bound(n: usize, bound: Option<usize>) -> Result<()> {
    let bound = bound.unwrap_or(DEFAULT_ENUM_BOUND);
    if n > bound {
        Err(Error::EnumerationBound {
            requested: n,
            bound,
        })
    } else {
        Ok(())
    }
}

/// A permutation of `[1, n]` whose descents all lie in the positions named
/// by its flag shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrassPerm {
    one_line: Vec<usize>,
    shape: FlagShape,
}

impl GrassPerm {
    pub fn new(one_line: &[usize], shape: &FlagShape) -> Result<GrassPerm> {
        let n = shape.n();
        if one_line.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "expected {n} entries, got {}",
                one_line.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &x in one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a permutation of 1..={n}",
                    one_line
                )));
            }
            seen[x] = true;
        }
        for j in 1..n {
            if one_line[j - 1] > one_line[j] && !shape.k().contains(&j) {
                return Err(Error::InvalidPermutation(format!(
                    "descent at position {j} not allowed by k={:?}",
                    shape.k()
                )));
            }
        }
        Ok(GrassPerm {
            one_line: one_line.to_vec(),
            shape: shape.clone(),
        })
    }

    pub fn identity(shape: &FlagShape) -> GrassPerm {
        GrassPerm {
            one_line: (1..=shape.n()).collect(),
            shape: shape.clone(),
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.one_line[i] > self.one_line[j] {
                    l += 1;
                }
            }
        }
        l
    }
}

/// The code of `w`: `c(i) = #{j > i : w(i) > w(j)}`, reported with `n−1`
/// entries (the last entry of the full code is always 0).
pub fn code_of(w: &GrassPerm) -> Vec<u32> {
    let n = w.n();
    let ol = w.one_line();
    (0..n.saturating_sub(1))
        .map(|i| (i + 1..n).filter(|&j| ol[i] > ol[j]).count() as u32)
        .collect()
}

/// Membership test for the code class of a shape: `c_j ≤ n−j`, and
/// `c_j > c_{j+1}` only when positions `j, j+1` lie in different intervals.
pub fn code_in_class(c: &[u32], shape: &FlagShape) -> bool {
    let n = shape.n();
    if c.len() + 1 != n {
        return false;
    }
    for j in 1..n {
        if c[j - 1] as usize > n - j {
            return false;
        }
        let next = if j < n - 1 { c[j] } else { 0 };
        if c[j - 1] > next && shape.same_interval(j, j + 1) {
            return false;
        }
    }
    true
}

/// Inverse of [`code_of`] on the code class of `shape`.
pub fn perm_from_code(c: &[u32], shape: &FlagShape) -> Result<GrassPerm> {
    if !code_in_class(c, shape) {
        return Err(Error::CodeNotInClass(format!(
            "{:?} with k={:?}",
            c,
            shape.k()
        )));
    }
    Ok(perm_from_any_code(c, shape.n(), shape))
}

/// Code-to-permutation without the class check: `w(i)` is the
/// `(c_i+1)`-th smallest unused value.  The code may be shorter than `n−1`;
/// missing entries are zero.
pub(crate) fn perm_from_any_code(c: &[u32], n: usize, shape: &FlagShape) -> GrassPerm {
    let mut avail: Vec<usize> = (1..=n).collect();
    let mut one_line = Vec::with_capacity(n);
    for i in 0..n {
        let ci = c.get(i).copied().unwrap_or(0) as usize;
        one_line.push(avail.remove(ci));
    }
    GrassPerm {
        one_line,
        shape: shape.clone(),
    }
}

/// The word of `w`: position `w(m)` holds letter `i` where `m ∈ I_i`.
pub fn word_of(w: &GrassPerm) -> Vec<usize> {
    let n = w.n();
    let mut word = vec![0usize; n];
    for m in 1..=n {
        word[w.at(m) - 1] = w.shape().interval_of(m);
    }
    word
}

/// The permutation of a word: list the positions of the 1s in order, then
/// of the 2s, and so on.  The word must use letter `i` exactly `r_i` times.
pub fn word_to_perm(word: &[usize], shape: &FlagShape) -> Result<GrassPerm> {
    let n = shape.n();
    let d = shape.d();
    if word.len() != n {
        return Err(Error::InvalidWord(format!(
            "expected length {n}, got {}",
            word.len()
        )));
    }
    let mut counts = vec![0usize; d + 1];
    for &l in word {
        if l == 0 || l > d {
            return Err(Error::InvalidWord(format!("letter {l} outside 1..={d}")));
        }
        counts[l] += 1;
    }
    for (i, &used) in counts.iter().enumerate().skip(1) {
        if used != shape.r(i) {
            return Err(Error::InvalidWord(format!(
                "letter {i} used {used} times, expected r_{i}={}",
                shape.r(i)
            )));
        }
    }
    let mut one_line = Vec::with_capacity(n);
    for letter in 1..=d {
        for (pos, &l) in word.iter().enumerate() {
            if l == letter {
                one_line.push(pos + 1);
            }
        }
    }
    GrassPerm::new(&one_line, shape)
}

/// Keep only the letters `i` and `j` of a word (no relabelling).
pub fn delete_letters(word: &[usize], i: usize, j: usize) -> Vec<usize> {
    word.iter().copied().filter(|&l| l == i || l == j).collect()
}

/// The two-interval flattening: keep the entries of `w` at positions in
/// `I_i ∪ I_j`, then renumber them to `1..r_i+r_j` preserving relative
/// order.  The result has the two-block shape `(r_i + r_j, {r_i})` and
/// indexes a Schubert class of the Grassmannian `Gr_{r_i}(ℂ^{r_i+r_j})`.
pub fn flatten(w: &GrassPerm, i: usize, j: usize) -> GrassPerm {
    let shape = w.shape();
    assert!(1 <= i && i < j && j <= shape.d(), "need 1 ≤ i < j ≤ d");
    let mut entries = Vec::with_capacity(shape.r(i) + shape.r(j));
    for block in [i, j] {
        let (lo, hi) = shape.interval(block);
        for pos in lo..=hi {
            entries.push(w.at(pos));
        }
    }
    let flat = flatten_values(&entries);
    let sub_shape =
        FlagShape::new(entries.len(), &[shape.r(i)]).expect("two-block shape is always valid");
    GrassPerm::new(&flat, &sub_shape).expect("flattening preserves block descents")
}

/// Renumber distinct values to `1..len` preserving relative order.
pub fn flatten_values(values: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = values.to_vec();
    sorted.sort_unstable();
    values
        .iter()
        .map(|v| sorted.iter().position(|s| s == v).unwrap() + 1)
        .collect()
}

/// All permutations with descents only in the positions of `shape`, in
/// lexicographic order of their words.  Errors if `n` exceeds the bound
/// (default [`DEFAULT_ENUM_BOUND`]).
pub fn enumerate_flag_perms(shape: &FlagShape, bound: Option<usize>) -> Result<Vec<GrassPerm>> {
    check_bound(shape.n(), bound)?;
    let d = shape.d();
    let mut letters: Vec<usize> = Vec::with_capacity(shape.n());
    for i in 1..=d {
        letters.extend(core::iter::repeat_n(i, shape.r(i)));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(shape.n());
    multiset_perms(&mut letters, &mut word, &mut |word| {
        out.push(word_to_perm(word, shape).expect("generated word is valid"));
    });
    Ok(out)
}

/// Visit all multiset permutations of `pool` in lexicographic order.
fn multiset_perms(pool: &mut Vec<usize>, acc: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if pool.is_empty() {
        visit(acc);
        return;
    }
    let mut last = None;
    for idx in 0..pool.len() {
        let x = pool[idx];
        if last == Some(x) {
            continue;
        }
        last = Some(x);
        pool.remove(idx);
        acc.push(x);
        multiset_perms(pool, acc, visit);
        acc.pop();
        pool.insert(idx, x);
    }
}

/// All `r`-element subsets of `1..=n` in lexicographic order.
pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == r {
            out.push(acc.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < r - acc.len() {
                break;
            }
            acc.push(x);
            rec(x + 1, n, r, acc, out);
            acc.pop();
        }
    }
    rec(1, n, r, &mut acc, &mut out);
    out
}

/// The family of a signed permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignedFamily {
    /// Odd orthogonal: any number of bars.
    B,
    /// Even orthogonal: an even number of bars; carries a type.
    D,
}

/// Type of an even orthogonal coset representative: I when the last entry
/// is unbarred, II when it is barred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DPermType {
    I,
    II,
}

/// A signed permutation in minimal-coset normal form for `OG(k, ·)`.
///
/// Stored as the full signed one-line sequence (negative = barred); the
/// `(Y, Z, V, r)` block decomposition is derived on demand, never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    entries: Vec<i32>,
    k: usize,
    family: SignedFamily,
}

impl SignedPerm {
    pub fn new(entries: &[i32], k: usize, family: SignedFamily) -> Result<SignedPerm> {
        let n = entries.len();
        if k == 0 || k >= n {
            return Err(Error::InvalidSignedPermutation(format!(
                "need 1 ≤ k < n, got k={k}, n={n}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &e in entries {
            let a = e.unsigned_abs() as usize;
            if e == 0 || a > n || seen[a] {
                return Err(Error::InvalidSignedPermutation(format!(
                    "{:?} is not a signed permutation of 1..={n}",
                    entries
                )));
            }
            seen[a] = true;
        }
        let sp = SignedPerm {
            entries: entries.to_vec(),
            k,
            family,
        };
        sp.check_normal_form()?;
        Ok(sp)
    }

    fn check_normal_form(&self) -> Result<()> {
        let k = self.k;
        let n = self.entries.len();
        let head = &self.entries[..k];
        let r = head.iter().filter(|&&e| e < 0).count();
        // head: unbarred ascending, then barred with descending absolute value
        for (idx, &e) in head.iter().enumerate() {
            let should_be_barred = idx >= k - r;
            if (e < 0) != should_be_barred {
                return Err(Error::InvalidSignedPermutation(
                    "barred head entries must follow the unbarred ones".to_string(),
                ));
            }
        }
        if !head[..k - r].windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidSignedPermutation(
                "unbarred head entries must increase".to_string(),
            ));
        }
        if !head[k - r..].windows(2).all(|w| w[0].abs() > w[1].abs()) {
            return Err(Error::InvalidSignedPermutation(
                "barred head entries must have decreasing absolute value".to_string(),
            ));
        }
        let tail = &self.entries[k..];
        if !tail.windows(2).all(|w| w[0].abs() < w[1].abs()) {
            return Err(Error::InvalidSignedPermutation(
                "tail entries must have increasing absolute value".to_string(),
            ));
        }
        match self.family {
            SignedFamily::B => {
                if tail.iter().any(|&e| e < 0) {
                    return Err(Error::InvalidSignedPermutation(
                        "tail entries must be unbarred".to_string(),
                    ));
                }
            }
            SignedFamily::D => {
                if tail[..n - k - 1].iter().any(|&e| e < 0) {
                    return Err(Error::InvalidSignedPermutation(
                        "only the last tail entry may be barred".to_string(),
                    ));
                }
                let bars = self.entries.iter().filter(|&&e| e < 0).count();
                if bars % 2 != 0 {
                    return Err(Error::InvalidSignedPermutation(
                        "total number of bars must be even".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Assemble the normal form from its blocks.  `y` and `v` are the
    /// unbarred values (ascending), `z` the barred head values (ascending
    /// `z_1 < … < z_r`; they are placed with descending absolute value).
    pub fn from_blocks(
        y: &[usize],
        z: &[usize],
        v: &[usize],
        family: SignedFamily,
    ) -> Result<SignedPerm> {
        let k = y.len() + z.len();
        let r = z.len();
        let mut entries: Vec<i32> = Vec::with_capacity(k + v.len());
        entries.extend(y.iter().map(|&x| x as i32));
        entries.extend(z.iter().rev().map(|&x| -(x as i32)));
        entries.extend(v.iter().map(|&x| x as i32));
        if family == SignedFamily::D && r % 2 == 1 {
            let last = entries.last_mut().ok_or_else(|| {
                Error::InvalidSignedPermutation("empty tail in type D".to_string())
            })?;
            *last = -*last;
        }
        SignedPerm::new(&entries, k, family)
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> SignedFamily {
        self.family
    }

    /// `w(a)` ignoring the bar: the absolute value of the `a`-th entry
    /// (1-based).  The index formulas of the translation maps always mean
    /// this value.
    pub fn abs_entry(&self, a: usize) -> usize {
        self.entries[a - 1].unsigned_abs() as usize
    }

    /// Number of barred entries among the first `k`.
    pub fn r(&self) -> usize {
        self.entries[..self.k].iter().filter(|&&e| e < 0).count()
    }

    /// Unbarred head values `y_1 < … < y_{k−r}`.
    pub fn y_block(&self) -> Vec<usize> {
        self.entries[..self.k]
            .iter()
            .filter(|&&e| e > 0)
            .map(|&e| e as usize)
            .collect()
    }

    /// Barred head values `z_1 < … < z_r` (ascending).
    pub fn z_block(&self) -> Vec<usize> {
        let mut z: Vec<usize> = self.entries[..self.k]
            .iter()
            .filter(|&&e| e < 0)
            .map(|&e| e.unsigned_abs() as usize)
            .collect();
        z.reverse();
        z
    }

    /// Tail values `v_1 < … < v_{n−k}` (absolute values).
    pub fn v_block(&self) -> Vec<usize> {
        self.entries[self.k..]
            .iter()
            .map(|&e| e.unsigned_abs() as usize)
            .collect()
    }

    /// Type of an even orthogonal element: I iff the last entry is
    /// unbarred.  Only meaningful for the D family.
    pub fn d_type(&self) -> DPermType {
        debug_assert_eq!(self.family, SignedFamily::D);
        if *self.entries.last().unwrap() > 0 {
            DPermType::I
        } else {
            DPermType::II
        }
    }
}

/// All minimal-coset signed permutations for `OG(k, 2n+1)` (family B) or
/// `OG(k, 2n)` (family D), in deterministic order: by `r`, then by the
/// barred set `Z`, then by the unbarred head set `Y`, lexicographically.
pub fn enumerate_signed_perms(
    family: SignedFamily,
    n: usize,
    k: usize,
    bound: Option<usize>,
) -> Result<Vec<SignedPerm>> {
    check_bound(n, bound)?;
    if k == 0 || k >= n {
        return Err(Error::InvalidSignedPermutation(format!(
            "need 1 ≤ k < n, got k={k}, n={n}"
        )));
    }
    let mut out = Vec::new();
    for r in 0..=k {
        for z in combinations(n, r) {
            let rest: Vec<usize> = (1..=n).filter(|x| !z.contains(x)).collect();
            for y_idx in combinations(rest.len(), k - r) {
                let y: Vec<usize> = y_idx.iter().map(|&i| rest[i - 1]).collect();
                let v: Vec<usize> = rest.iter().copied().filter(|x| !y.contains(x)).collect();
                out.push(SignedPerm::from_blocks(&y, &z, &v, family)?);
            }
        }
    }
    Ok(out)
}
