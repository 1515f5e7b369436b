//! Star products on the diagram classes of the coadjoint Lagrangian space
//! `LG(2,2n)` and the adjoint even orthogonal space `OG(2,2n)`.
//!
//! Both spaces have `k = 2`, so a diagram class is a two-row base partition
//! plus a single optional top root: `⟨λ₁,λ₂|●⟩` when the top root is used,
//! `⟨λ₁,λ₂|○⟩` when it is not.  The base rectangle is `2×(2n−3)` for the
//! coadjoint space and `2×(2n−4)` for the adjoint one, and the top root may
//! (resp. must) be used exactly when `λ₁+λ₂` reaches the rectangle width.
//! Adjoint classes whose base touches the fork column `n−2` additionally
//! carry a charge — the `k = 2` shadow of the type marker.
//!
//! The product is defined combinatorially on the classes themselves: a
//! support-split convolution of the two bases ([`star_lg`]), refined for the
//! adjoint space by a charge pairing factor on full-width terms, a power of
//! two measured by fork-column occupancy, and a charge disambiguation of the
//! terms that touch the fork column ([`star_og`]).  The translations
//! [`coadjoint_index`] and [`adjoint_index`] identify the classes with the
//! strict-partition indices used by [`crate::pieri`], which provides the
//! independent expansion the tests compare against; they are the `k = 2`
//! specialisations of [`crate::isotropic::gamma_index`].
//!
//! All intermediate arithmetic uses [`Dyadic`] values; a non-integral
//! coefficient surviving to the result is reported as an error rather than
//! rounded.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::dyadic::Dyadic;
use crate::pieri::{PieriGeometry, TypedRows};
use crate::ryd::Charge;
use crate::{Error, Result};

/// A diagram class on the coadjoint Lagrangian space `LG(2,2n)`: a base
/// partition inside `2×(2n−3)` plus the single top root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoadjointClass {
    /// Base rows `(λ₁, λ₂)` with `λ₁ ≥ λ₂`.
    pub base: (u32, u32),
    /// Whether the top root is used (`●`).
    pub top_used: bool,
}

impl CoadjointClass {
    /// The class `⟨λ|○⟩`.
    pub fn circle(base: (u32, u32)) -> CoadjointClass {
        CoadjointClass {
            base,
            top_used: false,
        }
    }

    /// The class `⟨λ|●⟩`.
    pub fn bullet(base: (u32, u32)) -> CoadjointClass {
        CoadjointClass {
            base,
            top_used: true,
        }
    }

    /// Number of roots used: the cohomological degree of the class.
    pub fn weight(self) -> u32 {
        self.base.0 + self.base.1 + u32::from(self.top_used)
    }
}

/// A diagram class on the adjoint even orthogonal space `OG(2,2n)`: a base
/// partition inside `2×(2n−4)`, the single top root, and a charge exactly
/// when a base row equals the fork column `n−2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjointClass {
    /// Base rows `(λ₁, λ₂)` with `λ₁ ≥ λ₂`.
    pub base: (u32, u32),
    /// Whether the top root is used (`●`).
    pub top_used: bool,
    /// Charge, present exactly when `λ₁ = n−2` or `λ₂ = n−2`.
    pub charge: Option<Charge>,
}

impl AdjointClass {
    /// An uncharged class; valid only when the base avoids the fork column.
    pub fn neutral(base: (u32, u32), top_used: bool) -> AdjointClass {
        AdjointClass {
            base,
            top_used,
            charge: None,
        }
    }

    /// A charged class; valid only when the base touches the fork column.
    pub fn charged(base: (u32, u32), top_used: bool, charge: Charge) -> AdjointClass {
        AdjointClass {
            base,
            top_used,
            charge: Some(charge),
        }
    }

    /// Number of roots used: the cohomological degree of the class.
    pub fn weight(self) -> u32 {
        self.base.0 + self.base.1 + u32::from(self.top_used)
    }

    /// The charge-forgetting projection: the same base and top root, no
    /// charge.  Two charged classes share a projection exactly when they are
    /// the two charge states of one underlying diagram.
    pub fn projection(self) -> AdjointClass {
        AdjointClass {
            charge: None,
            ..self
        }
    }
}

/// Base rectangle width of the coadjoint space, `2n−3`.
fn coadjoint_width(n: u32) -> u32 {
    2 * n - 3
}

/// Base rectangle width of the adjoint space, `2n−4`.
fn adjoint_width(n: u32) -> u32 {
    2 * n - 4
}

/// Whether `class` is a valid coadjoint diagram for `LG(2,2n)`: base a
/// partition inside `2×(2n−3)`, top root used iff the base sum reaches the
/// width (either state is allowed at equality).
pub fn is_coadjoint_class(n: u32, class: CoadjointClass) -> bool {
    if n < 3 {
        return false;
    }
    let w = coadjoint_width(n);
    let (a, b) = class.base;
    if a < b || a > w {
        return false;
    }
    if class.top_used {
        a + b >= w
    } else {
        a + b <= w
    }
}

/// Whether `class` is a valid adjoint diagram for `OG(2,2n)`: base a
/// partition inside `2×(2n−4)`, the same support rule as the coadjoint
/// space, and a charge present exactly when the base touches the fork
/// column `n−2`.
pub fn is_adjoint_class(n: u32, class: AdjointClass) -> bool {
    if n < 4 {
        return false;
    }
    let w = adjoint_width(n);
    let (a, b) = class.base;
    if a < b || a > w {
        return false;
    }
    let support_ok = if class.top_used {
        a + b >= w
    } else {
        a + b <= w
    };
    support_ok && (class.charge.is_some() == touches_fork(n, class.base))
}

fn touches_fork(n: u32, base: (u32, u32)) -> bool {
    base.0 == n - 2 || base.1 == n - 2
}

fn check_coadjoint(n: u32, class: CoadjointClass) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidIsotropicShape(format!(
            "LG(2,2n) needs n >= 3, got n={n}"
        )));
    }
    if !is_coadjoint_class(n, class) {
        return Err(Error::InvalidDiagram(format!(
            "{class:?} is not a coadjoint diagram class for LG(2,{})",
            2 * n
        )));
    }
    Ok(())
}

fn check_adjoint(n: u32, class: AdjointClass) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidIsotropicShape(format!(
            "OG(2,2n) needs n >= 4, got n={n}"
        )));
    }
    if !is_adjoint_class(n, class) {
        return Err(Error::InvalidDiagram(format!(
            "{class:?} is not an adjoint diagram class for OG(2,{})",
            2 * n
        )));
    }
    Ok(())
}

/// All coadjoint diagram classes for `LG(2,2n)`, ascending.
pub fn coadjoint_classes(n: u32) -> Result<Vec<CoadjointClass>> {
    if n < 3 {
        return Err(Error::InvalidIsotropicShape(format!(
            "LG(2,2n) needs n >= 3, got n={n}"
        )));
    }
    let w = coadjoint_width(n);
    let mut out = Vec::new();
    for a in 0..=w {
        for b in 0..=a {
            for top_used in [false, true] {
                let class = CoadjointClass {
                    base: (a, b),
                    top_used,
                };
                if is_coadjoint_class(n, class) {
                    out.push(class);
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All adjoint diagram classes for `OG(2,2n)`, ascending.
pub fn adjoint_classes(n: u32) -> Result<Vec<AdjointClass>> {
    if n < 4 {
        return Err(Error::InvalidIsotropicShape(format!(
            "OG(2,2n) needs n >= 4, got n={n}"
        )));
    }
    let w = adjoint_width(n);
    let mut out = Vec::new();
    for a in 0..=w {
        for b in 0..=a {
            for top_used in [false, true] {
                let charges: &[Option<Charge>] = if touches_fork(n, (a, b)) {
                    &[Some(Charge::Up), Some(Charge::Down)]
                } else {
                    &[None]
                };
                for &charge in charges {
                    let class = AdjointClass {
                        base: (a, b),
                        top_used,
                        charge,
                    };
                    if is_adjoint_class(n, class) {
                        out.push(class);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The degree-`p` single-row coadjoint class: `⟨p,0|○⟩` for `p ≤ 2n−3` and
/// `⟨2n−3,0|●⟩` for the top degree `p = 2n−2`.
pub fn coadjoint_pieri_class(n: u32, p: u32) -> Result<CoadjointClass> {
    if n < 3 {
        return Err(Error::InvalidIsotropicShape(format!(
            "LG(2,2n) needs n >= 3, got n={n}"
        )));
    }
    let w = coadjoint_width(n);
    if p == 0 || p > w + 1 {
        return Err(Error::PieriDegreeOutOfRange { p, max: w + 1 });
    }
    let class = if p <= w {
        CoadjointClass::circle((p, 0))
    } else {
        CoadjointClass::bullet((w, 0))
    };
    debug_assert!(is_coadjoint_class(n, class));
    Ok(class)
}

/// The degree-`p` single-row adjoint class: `⟨p,0|○⟩` for `p ≤ 2n−4` and
/// `⟨2n−4,0|●⟩` for the top degree `p = 2n−3`.  Degree `n−2` touches the
/// fork column, so that class is charged and `charge` must be given; every
/// other degree is neutral and `charge` must be absent.
pub fn adjoint_pieri_class(n: u32, p: u32, charge: Option<Charge>) -> Result<AdjointClass> {
    if n < 4 {
        return Err(Error::InvalidIsotropicShape(format!(
            "OG(2,2n) needs n >= 4, got n={n}"
        )));
    }
    let w = adjoint_width(n);
    if p == 0 || p > w + 1 {
        return Err(Error::PieriDegreeOutOfRange { p, max: w + 1 });
    }
    if (p == n - 2) != charge.is_some() {
        return Err(Error::InvalidDiagram(format!(
            "the single-row class of degree {p} is {} for OG(2,{})",
            if p == n - 2 {
                "charged: a charge is required"
            } else {
                "neutral: no charge is allowed"
            },
            2 * n
        )));
    }
    let class = if p <= w {
        AdjointClass {
            base: (p, 0),
            top_used: false,
            charge,
        }
    } else {
        AdjointClass::neutral((w, 0), true)
    };
    debug_assert!(is_adjoint_class(n, class));
    Ok(class)
}

/// The strict-partition index of a coadjoint class: the base rows, with the
/// first row grown by one when the top root is used.  This is the `k = 2`
/// specialisation of the odd-family index map, and a bijection onto the
/// `(n−2)`-strict partitions in `2×(2n−2)`.
pub fn coadjoint_index(class: CoadjointClass) -> (u32, u32) {
    let (a, b) = class.base;
    if class.top_used {
        (a + 1, b)
    } else {
        (a, b)
    }
}

/// Inverse of [`coadjoint_index`]: indices of total size `≤ 2n−3` come from
/// `○`-classes, larger ones from `●`-classes.
pub fn coadjoint_class_of_index(n: u32, gamma: (u32, u32)) -> Result<CoadjointClass> {
    let geometry = PieriGeometry::lagrangian(n)?;
    if !geometry.is_member(gamma) {
        return Err(Error::InvalidIsotropicShape(format!(
            "{gamma:?} is not an (n−2)-strict index for LG(2,{})",
            2 * n
        )));
    }
    let class = if gamma.0 + gamma.1 <= coadjoint_width(n) {
        CoadjointClass::circle(gamma)
    } else {
        CoadjointClass::bullet((gamma.0 - 1, gamma.1))
    };
    debug_assert!(is_coadjoint_class(n, class));
    Ok(class)
}

/// The typed strict-partition index of an adjoint class: the base rows with
/// the first row grown by one when the top root is used, and the marker
/// `0`/`1`/`2` for neutral/up/down.  This is the `k = 2` specialisation of
/// the even-family index map, and a bijection onto the typed `(n−2)`-strict
/// partitions in `2×(2n−3)`.
pub fn adjoint_index(class: AdjointClass) -> TypedRows {
    let (a, b) = class.base;
    let rows = if class.top_used { (a + 1, b) } else { (a, b) };
    let marker = match class.charge {
        None => 0,
        Some(Charge::Up) => 1,
        Some(Charge::Down) => 2,
    };
    TypedRows { rows, marker }
}

/// Inverse of [`adjoint_index`].
pub fn adjoint_class_of_index(n: u32, index: TypedRows) -> Result<AdjointClass> {
    let geometry = PieriGeometry::even_orthogonal(n)?;
    if !geometry.is_typed_member(index) {
        return Err(Error::InvalidIsotropicShape(format!(
            "{index:?} is not a typed (n−2)-strict index for OG(2,{})",
            2 * n
        )));
    }
    let (g1, g2) = index.rows;
    let (base, top_used) = if g1 + g2 <= adjoint_width(n) {
        ((g1, g2), false)
    } else {
        ((g1 - 1, g2), true)
    };
    let charge = match index.marker {
        0 => None,
        1 => Some(Charge::Up),
        _ => Some(Charge::Down),
    };
    let class = AdjointClass {
        base,
        top_used,
        charge,
    };
    debug_assert!(is_adjoint_class(n, class));
    Ok(class)
}

fn add_term(acc: &mut BTreeMap<(u32, u32), i64>, width: u32, first: i64, second: i64, count: i64) {
    if second >= 0 && first >= second && first <= i64::from(width) {
        *acc.entry((first as u32, second as u32)).or_insert(0) += count;
    }
}

/// The support-split convolution shared by both star products, applied to
/// charge-forgotten classes.  Returns the top flag of the output terms and
/// the base multiset:
///
/// * `○ ⋆ ○` below or at the width: `Σ_k ⟨λ₁+μ₁−k, λ₂+μ₂+k|○⟩`;
/// * `○ ⋆ ○` above the width: each `k` contributes the two `●`-bases with
///   one box moved to the top root, `(λ₁+μ₁−k, λ₂+μ₂+k−1)` and
///   `(λ₁+μ₁−k−1, λ₂+μ₂+k)` — consecutive `k` overlap, so interior bases
///   acquire coefficient 2;
/// * mixed supports: `Σ_k ⟨λ₁+μ₁−k, λ₂+μ₂+k|●⟩`;
/// * `● ⋆ ●`: zero.
///
/// Here `k` runs over `0 ≤ k ≤ min(λ₁−λ₂, μ₁−μ₂)` and any base that is not
/// a partition inside the rectangle is dropped.
fn two_row_convolution(
    width: u32,
    left: ((u32, u32), bool),
    right: ((u32, u32), bool),
) -> (bool, BTreeMap<(u32, u32), i64>) {
    let ((l1, l2), left_top) = left;
    let ((r1, r2), right_top) = right;
    let m = i64::from((l1 - l2).min(r1 - r2));
    let s1 = i64::from(l1) + i64::from(r1);
    let s2 = i64::from(l2) + i64::from(r2);
    let mut acc = BTreeMap::new();
    match (left_top, right_top) {
        (true, true) => (true, acc),
        (false, false) if s1 + s2 <= i64::from(width) => {
            for k in 0..=m {
                add_term(&mut acc, width, s1 - k, s2 + k, 1);
            }
            (false, acc)
        }
        (false, false) => {
            for k in 0..=m {
                add_term(&mut acc, width, s1 - k, s2 + k - 1, 1);
                add_term(&mut acc, width, s1 - k - 1, s2 + k, 1);
            }
            (true, acc)
        }
        _ => {
            for k in 0..=m {
                add_term(&mut acc, width, s1 - k, s2 + k, 1);
            }
            (true, acc)
        }
    }
}

/// Star product on coadjoint diagram classes of `LG(2,2n)`.
///
/// The expansion always has coefficients 1 or 2 and is returned ascending.
/// Transporting it through [`coadjoint_index`] reproduces the Pieri
/// expansion of [`crate::pieri::pieri_lg`] whenever one factor is a
/// single-row class.
pub fn star_lg(
    n: u32,
    left: CoadjointClass,
    right: CoadjointClass,
) -> Result<Vec<(CoadjointClass, u64)>> {
    check_coadjoint(n, left)?;
    check_coadjoint(n, right)?;
    let (top_used, terms) = two_row_convolution(
        coadjoint_width(n),
        (left.base, left.top_used),
        (right.base, right.top_used),
    );
    Ok(terms
        .into_iter()
        .map(|(base, count)| {
            let class = CoadjointClass { base, top_used };
            debug_assert!(is_coadjoint_class(n, class));
            (class, count as u64)
        })
        .collect())
}

/// Charge pairing factor for full-width terms of the adjoint product: 2
/// when both factors are charged and their charges agree exactly as often
/// as `n` is even, 1 when either factor is neutral, and 0 otherwise.
fn pairing_factor(n: u32, left: AdjointClass, right: AdjointClass) -> i64 {
    match (left.charge, right.charge) {
        (Some(a), Some(b)) => {
            if (a == b) == n.is_multiple_of(2) {
                2
            } else {
                0
            }
        }
        _ => 1,
    }
}

/// Number of base rows reaching the fork column `n−2`, except that the
/// diagram with both rows exactly `n−2` and a free top root counts once,
/// not twice (its two fork boxes are the twin fork roots of a single
/// column; using the top root separates them again).  The difference of
/// this count between an output term and the two factors is the exponent of
/// the power-of-two rescaling in [`star_og`].
fn fork_rows(n: u32, base: (u32, u32), top_used: bool) -> i32 {
    if base == (n - 2, n - 2) && !top_used {
        1
    } else {
        i32::from(base.0 >= n - 2) + i32::from(base.1 >= n - 2)
    }
}

fn opposite(charge: Charge) -> Charge {
    match charge {
        Charge::Up => Charge::Down,
        Charge::Down => Charge::Up,
    }
}

/// How the fork-touching terms of an adjoint product receive their charges.
enum Disambiguation {
    /// Split the coefficient evenly between the two charge states.
    HalfSplit,
    /// Assign the whole coefficient to one charge state.
    Assign(Charge),
}

/// Charge disambiguation rule for `left ⋆ right`, decided by which factors
/// are single-row (`λ₂ = 0`) and which are charged.  The square of the
/// charged degree-`(n−2)` class never reaches this point.
fn disambiguation_rule(n: u32, left: AdjointClass, right: AdjointClass) -> Disambiguation {
    let single_row = |class: AdjointClass| class.base.1 == 0;
    let neutral_single_row = |class: AdjointClass| single_row(class) && class.charge.is_none();
    if !single_row(left) && !single_row(right) {
        // Neither factor is single-row: always split.
        return Disambiguation::HalfSplit;
    }
    if neutral_single_row(left) || neutral_single_row(right) {
        // A neutral single-row factor defers to its partner: split when the
        // partner is neutral, inherit the partner's charge otherwise.
        let other = if neutral_single_row(left) {
            right
        } else {
            left
        };
        return match other.charge {
            None => Disambiguation::HalfSplit,
            Some(charge) => Disambiguation::Assign(charge),
        };
    }
    // One factor is the charged degree-(n−2) class and the other is not
    // single-row.
    let (special, other) = if single_row(left) {
        (left, right)
    } else {
        (right, left)
    };
    debug_assert!(special.charge.is_some() && !single_row(other));
    let special_charge = special.charge.expect("charged single-row class");
    if other.top_used && other.charge.is_none() && other.base.0 + other.base.1 == adjoint_width(n) {
        // Full-width neutral `●` partner: the unique fork-touching term
        // inherits the special factor's charge or its opposite, by the
        // parity of the partner's first row.
        if other.base.0 % 2 == 0 {
            Disambiguation::Assign(special_charge)
        } else {
            Disambiguation::Assign(opposite(special_charge))
        }
    } else {
        match other.charge {
            None => Disambiguation::HalfSplit,
            Some(charge) => Disambiguation::Assign(charge),
        }
    }
}

/// The square of the charged degree-`(n−2)` class, given directly by a
/// parity table: all terms have full weight `2n−4`, coefficient 1, and only
/// the doubly-fork term `⟨n−2,n−2|○⟩` — present exactly when the charges
/// agree — is itself charged, inheriting the shared charge.
fn charged_square(n: u32, left: AdjointClass, right: AdjointClass) -> Vec<(AdjointClass, u64)> {
    let fork = n - 2;
    let matching = left.charge == right.charge;
    let bases: Vec<(u32, u32)> = match (n.is_multiple_of(2), matching) {
        (true, true) => (0..=(n - 2) / 2)
            .map(|k| (2 * n - 4 - 2 * k, 2 * k))
            .collect(),
        (true, false) => (0..=(n - 4) / 2)
            .map(|k| (2 * n - 5 - 2 * k, 2 * k + 1))
            .collect(),
        (false, true) => (0..=(n - 3) / 2)
            .map(|k| (2 * n - 5 - 2 * k, 2 * k + 1))
            .collect(),
        (false, false) => (0..=(n - 3) / 2)
            .map(|k| (2 * n - 4 - 2 * k, 2 * k))
            .collect(),
    };
    let mut out: Vec<(AdjointClass, u64)> = bases
        .into_iter()
        .map(|base| {
            let charge = if touches_fork(n, base) {
                debug_assert!(base == (fork, fork) && matching);
                left.charge
            } else {
                None
            };
            let class = AdjointClass {
                base,
                top_used: false,
                charge,
            };
            debug_assert!(is_adjoint_class(n, class));
            (class, 1)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Star product on adjoint diagram classes of `OG(2,2n)`.
///
/// Apart from the tabulated square of the charged degree-`(n−2)` class, the
/// product is the support-split convolution of the charge-forgotten
/// factors, with every term rescaled by the charge pairing factor (if it
/// has full width `2n−4`) and by `2^(fork rows gained)`, and with the
/// fork-touching terms charged according to [`Disambiguation`].  The
/// expansion is returned ascending; a half-integral coefficient surviving
/// to the output is an error.
pub fn star_og(
    n: u32,
    left: AdjointClass,
    right: AdjointClass,
) -> Result<Vec<(AdjointClass, u64)>> {
    check_adjoint(n, left)?;
    check_adjoint(n, right)?;
    let fork = n - 2;
    if left.base == (fork, 0) && right.base == (fork, 0) && !left.top_used && !right.top_used {
        return Ok(charged_square(n, left, right));
    }
    let width = adjoint_width(n);
    let (top_used, terms) = two_row_convolution(
        width,
        (left.base, left.top_used),
        (right.base, right.top_used),
    );
    let eta = pairing_factor(n, left, right);
    let fork_rows_in =
        fork_rows(n, left.base, left.top_used) + fork_rows(n, right.base, right.top_used);
    let rule = disambiguation_rule(n, left, right);
    let mut acc: BTreeMap<AdjointClass, Dyadic> = BTreeMap::new();
    let mut add = |class: AdjointClass, value: Dyadic| {
        let entry = acc.entry(class).or_insert(Dyadic::ZERO);
        *entry += value;
    };
    for (base, count) in terms {
        let mut coeff = Dyadic::from_int(count);
        if base.0 == width {
            coeff = coeff * eta;
        }
        coeff = coeff.times_pow2(fork_rows(n, base, top_used) - fork_rows_in);
        if coeff.is_zero() {
            continue;
        }
        if touches_fork(n, base) {
            match rule {
                Disambiguation::HalfSplit => {
                    let half = coeff * Dyadic::HALF;
                    add(
                        AdjointClass {
                            base,
                            top_used,
                            charge: Some(Charge::Up),
                        },
                        half,
                    );
                    add(
                        AdjointClass {
                            base,
                            top_used,
                            charge: Some(Charge::Down),
                        },
                        half,
                    );
                }
                Disambiguation::Assign(charge) => add(
                    AdjointClass {
                        base,
                        top_used,
                        charge: Some(charge),
                    },
                    coeff,
                ),
            }
        } else {
            add(
                AdjointClass {
                    base,
                    top_used,
                    charge: None,
                },
                coeff,
            );
        }
    }
    let mut out = Vec::new();
    for (class, coeff) in acc {
        if coeff.is_zero() {
            continue;
        }
        let count = coeff.to_integer().ok_or_else(|| {
            Error::NonIntegralCoefficient(format!("coefficient {coeff} of {class:?}"))
        })?;
        debug_assert!(count > 0);
        debug_assert!(is_adjoint_class(n, class));
        out.push((class, count as u64));
    }
    Ok(out)
}
