//! Index translations for non-maximal isotropic Grassmannians: between
//! root-theoretic diagrams, strict partitions with an optional type marker,
//! the two-strict-partition shapes of the odd-orthogonal indexing, the
//! partition-pair shapes of the even-orthogonal indexing, and signed
//! permutations in minimal coset form.
//!
//! The central map sends a valid diagram `(λ^(1) | λ^(2))` to the partition
//! `γ` with `γ_i = λ^(1)_i + λ^(2)_i`, carrying the diagram charge over to
//! a type marker in the even orthogonal family.  Every translation here has
//! a second route through signed permutations (`gamma_of_signed_perm`,
//! `pr_shape_of`, `t_shape_of`), and the test suites check that all routes
//! commute and are bijective onto the index sets they claim.

use alloc::format;
use alloc::vec::Vec;

use crate::partition::{is_partition, is_t_strict};
use crate::perm::{DPermType, SignedFamily, SignedPerm};
use crate::poset::LieFamily;
use crate::ryd::{ryd_from_signed_perm, Charge, IsotropicRYD};
use crate::{Error, Result};

/// Strip trailing zeros: the canonical form of a partition here.
fn trimmed(parts: &[u32]) -> Vec<u32> {
    let mut v = parts.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// An `(n−k)`-strict partition with a type marker: the classical index of
/// an isotropic Grassmannian Schubert class.  The marker is `0` except in
/// the even orthogonal family when some part equals `n−k`, where it is
/// `1` or `2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypedStrictPartition {
    gamma: Vec<u32>,
    marker: u8,
}

impl TypedStrictPartition {
    /// Validate `gamma` (stored without trailing zeros) against the box
    /// and strictness constraints of `OG(k, 2n+1)` (family B) or
    /// `OG(k, 2n)` (family D), and the marker rules.
    pub fn new(
        family: LieFamily,
        n: usize,
        k: usize,
        gamma: &[u32],
        marker: u8,
    ) -> Result<TypedStrictPartition> {
        if k == 0 || k >= n || (family == LieFamily::D && k + 1 >= n) {
            return Err(Error::InvalidIsotropicShape(format!(
                "invalid (family, n, k) = ({family:?}, {n}, {k})"
            )));
        }
        let gamma = trimmed(gamma);
        let t = (n - k) as u32;
        let width = match family {
            LieFamily::B => 2 * n - k,
            LieFamily::D => 2 * n - 1 - k,
        } as u32;
        if !is_partition(&gamma) || !is_t_strict(&gamma, t) {
            return Err(Error::InvalidIsotropicShape(format!(
                "{gamma:?} is not an {t}-strict partition"
            )));
        }
        if gamma.len() > k || gamma.first().is_some_and(|&g| g > width) {
            return Err(Error::InvalidIsotropicShape(format!(
                "{gamma:?} does not fit the {k}×{width} box"
            )));
        }
        let has_t_part = gamma.contains(&t);
        let marker_ok = match family {
            LieFamily::B => marker == 0,
            LieFamily::D if has_t_part => marker == 1 || marker == 2,
            LieFamily::D => marker == 0,
        };
        if !marker_ok {
            return Err(Error::InvalidIsotropicShape(format!(
                "marker {marker} is not allowed for {gamma:?} in family {family:?} with n−k={t}"
            )));
        }
        Ok(TypedStrictPartition { gamma, marker })
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    pub fn marker(&self) -> u8 {
        self.marker
    }
}

/// The odd orthogonal shape pair: two strict partitions, the top one of
/// full length `n−k` and dominating the bottom one's length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PRShape {
    alpha_top: Vec<u32>,
    alpha_bottom: Vec<u32>,
}

fn is_strictly_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

impl PRShape {
    pub fn new(n: usize, k: usize, alpha_top: &[u32], alpha_bottom: &[u32]) -> Result<PRShape> {
        let ok = alpha_top.len() == n - k
            && is_strictly_decreasing(alpha_top)
            && alpha_top.iter().all(|&p| 1 <= p && p <= n as u32)
            && alpha_bottom.len() <= k
            && is_strictly_decreasing(alpha_bottom)
            && alpha_bottom.iter().all(|&p| 1 <= p && p <= n as u32)
            && alpha_top.last().copied().unwrap_or(0) > alpha_bottom.len() as u32;
        if !ok {
            return Err(Error::InvalidIsotropicShape(format!(
                "({alpha_top:?}, {alpha_bottom:?}) is not a valid shape pair for k={k}, n={n}"
            )));
        }
        Ok(PRShape {
            alpha_top: alpha_top.to_vec(),
            alpha_bottom: alpha_bottom.to_vec(),
        })
    }

    pub fn alpha_top(&self) -> &[u32] {
        &self.alpha_top
    }

    pub fn alpha_bottom(&self) -> &[u32] {
        &self.alpha_bottom
    }
}

/// The even orthogonal shape pair: a partition on top, a strict partition
/// below, and a marker distinguishing the two signed permutations that
/// produce the same pair (present exactly when the largest tail value is
/// not `n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TShape {
    alpha_top: Vec<u32>,
    alpha_bottom: Vec<u32>,
    marker: u8,
}

impl TShape {
    pub fn new(
        n: usize,
        k: usize,
        alpha_top: &[u32],
        alpha_bottom: &[u32],
        marker: u8,
    ) -> Result<TShape> {
        let alpha_top = trimmed(alpha_top);
        let alpha_bottom = trimmed(alpha_bottom);
        let ok = alpha_top.len() <= n - k
            && is_partition(&alpha_top)
            && alpha_top.first().is_none_or(|&p| p <= k as u32)
            && alpha_bottom.len() <= k
            && is_strictly_decreasing(&alpha_bottom)
            && alpha_bottom.first().is_none_or(|&p| p < n as u32)
            && (if alpha_top.len() == n - k {
                alpha_top[n - k - 1] >= alpha_bottom.len() as u32
            } else {
                alpha_bottom.is_empty()
            })
            && marker <= 2;
        if !ok {
            return Err(Error::InvalidIsotropicShape(format!(
                "(({alpha_top:?}, {alpha_bottom:?}); {marker}) is not a valid shape pair for k={k}, n={n}"
            )));
        }
        Ok(TShape {
            alpha_top,
            alpha_bottom,
            marker,
        })
    }

    pub fn alpha_top(&self) -> &[u32] {
        &self.alpha_top
    }

    pub fn alpha_bottom(&self) -> &[u32] {
        &self.alpha_bottom
    }

    pub fn marker(&self) -> u8 {
        self.marker
    }
}

fn marker_of_charge(charge: Option<Charge>) -> u8 {
    match charge {
        None => 0,
        Some(Charge::Up) => 1,
        Some(Charge::Down) => 2,
    }
}

fn marker_of_d_type(t: DPermType) -> u8 {
    match t {
        DPermType::I => 1,
        DPermType::II => 2,
    }
}

/// The index map: row sums `γ_i = λ^(1)_i + λ^(2)_i`, with the diagram
/// charge carried over as the type marker.  A bijection from valid
/// diagrams onto the typed strict partitions of the same `(family, n, k)`.
pub fn gamma_index(ryd: &IsotropicRYD) -> TypedStrictPartition {
    let gamma: Vec<u32> = ryd
        .base
        .iter()
        .zip(&ryd.top)
        .map(|(&b, &t)| b + t)
        .collect();
    TypedStrictPartition::new(
        ryd.family,
        ryd.n,
        ryd.k,
        &gamma,
        marker_of_charge(ryd.charge),
    )
    .expect("a valid diagram always has a valid typed index")
}

/// Reconstruct the signed permutation realizing `gamma`: rows with
/// `γ_i > n−k` force barred values, the rest of `1..=n` is split so that
/// each unbarred head value sits above exactly `γ_i` tail values.  When a
/// part equals `n−k` (family D), the marker decides whether `n` is barred.
fn signed_perm_of_typed(
    family: LieFamily,
    n: usize,
    k: usize,
    typed: &TypedStrictPartition,
) -> Result<SignedPerm> {
    let t = (n - k) as u32;
    let mut gamma = typed.gamma().to_vec();
    gamma.resize(k, 0);
    let (signed_family, z_of_gamma): (SignedFamily, fn(usize, usize, u32) -> usize) = match family {
        LieFamily::B => (SignedFamily::B, |n, k, g| 2 * n + 1 - k - g as usize),
        LieFamily::D => (SignedFamily::D, |n, k, g| 2 * n - k - g as usize),
    };
    let build = |extra_n_in_z: bool| -> Result<SignedPerm> {
        let mut z: Vec<usize> = gamma
            .iter()
            .take_while(|&&g| g > t)
            .map(|&g| z_of_gamma(n, k, g))
            .collect();
        if extra_n_in_z {
            z.push(n);
        }
        let r = z.len();
        let rest: Vec<usize> = (1..=n).filter(|x| !z.contains(x)).collect();
        let mut in_y = alloc::vec![false; rest.len()];
        // y_t must sit above exactly γ_{k+1−t} tail values, so it is the
        // (γ_{k+1−t} + t)-th smallest remaining value
        for (t_idx, row) in ((r + 1)..=k).rev().enumerate() {
            let pos = gamma[row - 1] as usize + t_idx; // 0-based
            if pos >= rest.len() || in_y[pos] {
                return Err(Error::InvalidIsotropicShape(format!(
                    "{gamma:?} admits no signed permutation for k={k}, n={n}"
                )));
            }
            in_y[pos] = true;
        }
        let y: Vec<usize> = rest
            .iter()
            .zip(&in_y)
            .filter_map(|(&m, &used)| used.then_some(m))
            .collect();
        let v: Vec<usize> = rest
            .iter()
            .zip(&in_y)
            .filter_map(|(&m, &used)| (!used).then_some(m))
            .collect();
        SignedPerm::from_blocks(&y, &z, &v, signed_family)
    };
    if family == LieFamily::D && typed.marker() != 0 {
        // a part of size n−k is realized either by barring n or by an
        // unbarred head value above the whole tail; the marker picks the
        // branch via the parity of the barred count
        let with_n = build(true)?;
        if marker_of_d_type(with_n.d_type()) == typed.marker() {
            Ok(with_n)
        } else {
            build(false)
        }
    } else {
        build(false)
    }
}

/// Inverse of [`gamma_index`]: the unique valid diagram with the given
/// typed index.  Errors if `typed` violates the box, strictness, or marker
/// rules for `(family, n, k)`.
pub fn gamma_index_inverse(
    family: LieFamily,
    n: usize,
    k: usize,
    typed: &TypedStrictPartition,
) -> Result<IsotropicRYD> {
    // re-validate against this (family, n, k); the input may have been
    // built for different parameters
    let typed = TypedStrictPartition::new(family, n, k, typed.gamma(), typed.marker())?;
    let w = signed_perm_of_typed(family, n, k, &typed)?;
    let ryd = ryd_from_signed_perm(&w);
    debug_assert_eq!(gamma_index(&ryd), typed);
    Ok(ryd)
}

/// The odd orthogonal shape pair of a signed permutation:
/// `α^b_j = n+1−z_j` and `α^t_s = n+1−v_s + #{q : z_q < v_s}`.
pub fn pr_shape_of(w: &SignedPerm) -> PRShape {
    debug_assert_eq!(w.family(), SignedFamily::B);
    let (n, k) = (w.n(), w.k());
    let z = w.z_block();
    let v = w.v_block();
    let alpha_bottom: Vec<u32> = z.iter().map(|&zj| (n + 1 - zj) as u32).collect();
    let alpha_top: Vec<u32> = v
        .iter()
        .map(|&vs| (n + 1 - vs + z.iter().filter(|&&zq| zq < vs).count()) as u32)
        .collect();
    PRShape::new(n, k, &alpha_top, &alpha_bottom)
        .expect("a normal-form signed permutation always has a valid shape pair")
}

/// The even orthogonal shape pair of a signed permutation:
/// `α^t_i = k−v_i+i + #{j : z_j < v_i}` and `α^b_i = n−z_i`, marked by the
/// permutation type exactly when the largest tail value is not `n` (the
/// two-preimage case).
pub fn t_shape_of(w: &SignedPerm) -> TShape {
    debug_assert_eq!(w.family(), SignedFamily::D);
    let (n, k) = (w.n(), w.k());
    let z = w.z_block();
    let v = w.v_block();
    let alpha_top: Vec<u32> = v
        .iter()
        .enumerate()
        .map(|(i0, &vi)| (k + i0 + 1 + z.iter().filter(|&&zj| zj < vi).count() - vi) as u32)
        .collect();
    let alpha_bottom: Vec<u32> = z.iter().map(|&zi| (n - zi) as u32).collect();
    let marker = if v.last() == Some(&n) {
        0
    } else {
        marker_of_d_type(w.d_type())
    };
    TShape::new(n, k, &alpha_top, &alpha_bottom, marker)
        .expect("a normal-form signed permutation always has a valid shape pair")
}

/// The typed index of a signed permutation, read off directly:
/// `γ_i = (n−k) + (n+1−z_i)` (family B) or `(n−k) + (n−z_i)` (family D)
/// on barred rows, and the number of tail values under `y_{k+1−i}`
/// otherwise.  Equal to `gamma_index ∘ ryd_from_signed_perm`.
pub fn gamma_of_signed_perm(w: &SignedPerm) -> TypedStrictPartition {
    let (n, k, r) = (w.n(), w.k(), w.r());
    let y = w.y_block();
    let z = w.z_block();
    let v = w.v_block();
    let barred_part = |zi: usize| match w.family() {
        SignedFamily::B => (2 * n + 1 - k - zi) as u32,
        SignedFamily::D => (2 * n - k - zi) as u32,
    };
    let gamma: Vec<u32> = (1..=k)
        .map(|i| {
            if i <= r {
                barred_part(z[i - 1])
            } else {
                v.iter().filter(|&&vl| y[k - i] > vl).count() as u32
            }
        })
        .collect();
    let (family, marker) = match w.family() {
        SignedFamily::B => (LieFamily::B, 0),
        SignedFamily::D => {
            let m = if gamma.contains(&((n - k) as u32)) {
                marker_of_d_type(w.d_type())
            } else {
                0
            };
            (LieFamily::D, m)
        }
    };
    TypedStrictPartition::new(family, n, k, &gamma, marker)
        .expect("a normal-form signed permutation always has a valid typed index")
}

/// All typed strict partitions for `(family, n, k)`: every `(n−k)`-strict
/// partition in the index box, with both markers whenever a part equals
/// `n−k` in family D.
pub fn enumerate_typed_partitions(
    family: LieFamily,
    n: usize,
    k: usize,
) -> Result<Vec<TypedStrictPartition>> {
    // validate (family, n, k) via the empty partition
    TypedStrictPartition::new(family, n, k, &[], 0)?;
    let t = (n - k) as u32;
    let width = match family {
        LieFamily::B => 2 * n - k,
        LieFamily::D => 2 * n - 1 - k,
    } as u32;
    let mut shapes: Vec<Vec<u32>> = Vec::new();
    let mut acc: Vec<u32> = Vec::new();
    fn gen(rows_left: usize, max_next: u32, t: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(acc.clone());
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_next).rev() {
            acc.push(p);
            let next_max = if p > t { p - 1 } else { p };
            gen(rows_left - 1, next_max, t, acc, out);
            acc.pop();
        }
    }
    gen(k, width, t, &mut acc, &mut shapes);
    let mut out = Vec::new();
    for gamma in shapes {
        if family == LieFamily::D && gamma.contains(&t) {
            for marker in [1, 2] {
                out.push(TypedStrictPartition::new(family, n, k, &gamma, marker)?);
            }
        } else {
            out.push(TypedStrictPartition::new(family, n, k, &gamma, 0)?);
        }
    }
    Ok(out)
}
