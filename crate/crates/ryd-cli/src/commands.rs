//! Subcommand implementations: parse a request, compute, optionally
//! recompute through an independent path (`--check`), and emit one
//! deterministic JSON document.

use serde::{Deserialize, Serialize};

use ryd_core::bk::{bk_coeff, bk_coeff_via_words, enumerate_matched_targets};
use ryd_core::isotropic::{
    enumerate_typed_partitions, gamma_index, gamma_index_inverse, TypedStrictPartition,
};
use ryd_core::jdt::{lr_coeff, lr_coeff_via_lattice_words};
use ryd_core::partition::is_partition;
use ryd_core::perm::{enumerate_flag_perms, enumerate_signed_perms, word_of, DEFAULT_ENUM_BOUND};
use ryd_core::pieri::{pieri_lg, pieri_og, TypedRows};
use ryd_core::poset::FlagShape;
use ryd_core::ryd::{perm_from_ryd, ryd_from_perm, Charge, FlagRYD};
use ryd_core::schubert::SchubertCalc;
use ryd_core::star::{
    adjoint_class_of_index, adjoint_classes, adjoint_index, adjoint_pieri_class,
    coadjoint_class_of_index, coadjoint_classes, coadjoint_index, coadjoint_pieri_class,
    is_adjoint_class, is_coadjoint_class, star_lg, star_og, AdjointClass, CoadjointClass,
};

use crate::error::{invariant, CliError, Result};
use crate::util::shard_map;
use crate::wire::{
    from_value, has_key, parse_json, sort_classes, sort_terms, to_output, trim_zeros, BktIndex,
    ContextedIndex, FamilyName, FlagClass, IsotropicClass, LrRequest, PairRequest, PieriRequest,
    SpaceName, StarRequest, Term, TwoRowClass,
};

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn same_shape_pair(req: &PairRequest) -> Result<(FlagRYD, FlagRYD)> {
    if req.left.n != req.right.n || req.left.k != req.right.k {
        return Err(CliError::Input(format!(
            "the two classes live on different flag shapes: n={} k={:?} vs n={} k={:?}",
            req.left.n, req.left.k, req.right.n, req.right.k
        )));
    }
    Ok((req.left.to_ryd()?, req.right.to_ryd()?))
}

// ---------------------------------------------------------------------------
// bk

/// Which route computes the deformed coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BkPath {
    /// Per-region rectification counts on the diagrams.
    Jdt,
    /// Two-letter subword flattening into Grassmannian coefficients.
    Words,
    /// Both routes, asserting they agree.
    Both,
}

pub fn cmd_bk(input: &str, path: BkPath, check: bool) -> Result<String> {
    let req: PairRequest = serde_json::from_str(input)?;
    let (la, mu) = same_shape_pair(&req)?;
    let shape = la.shape().clone();
    let path = if check { BkPath::Both } else { path };
    let pair_words = if path == BkPath::Jdt {
        None
    } else {
        let word = |r: &FlagRYD| -> Result<Vec<usize>> {
            Ok(word_of(&perm_from_ryd(r).map_err(invariant)?))
        };
        Some((word(&la)?, word(&mu)?))
    };
    let mut terms = Vec::new();
    for nu in enumerate_matched_targets(&la, &mu) {
        let coeff = match path {
            BkPath::Jdt => bk_coeff(&la, &mu, &nu),
            BkPath::Words | BkPath::Both => {
                let (wl, wm) = pair_words.as_ref().unwrap();
                let wn = word_of(&perm_from_ryd(&nu).map_err(invariant)?);
                let via_words = bk_coeff_via_words(wl, wm, &wn, &shape).map_err(invariant)?;
                if path == BkPath::Both {
                    let via_jdt = bk_coeff(&la, &mu, &nu);
                    if via_jdt != via_words {
                        return Err(CliError::Invariant(format!(
                            "diagram route gives {via_jdt}, word route gives {via_words} at {wn:?}"
                        )));
                    }
                }
                via_words
            }
        };
        if coeff > 0 {
            terms.push(Term {
                coeff,
                class: FlagClass::of_ryd(&nu).map_err(invariant)?,
            });
        }
    }
    to_output(&sort_terms(terms)?)
}

// ---------------------------------------------------------------------------
// cup

pub fn cmd_cup(input: &str, check: bool) -> Result<String> {
    let req: PairRequest = serde_json::from_str(input)?;
    let (la, mu) = same_shape_pair(&req)?;
    let u = perm_from_ryd(&la).map_err(invariant)?;
    let v = perm_from_ryd(&mu).map_err(invariant)?;
    let mut calc = SchubertCalc::new();
    let expansion = calc.cup_expand_classes(&u, &v)?;
    if check {
        // recompute with the factors swapped: the product is commutative
        // and the peeling follows a different path through the basis
        let sorted = |terms: &[(ryd_core::perm::GrassPerm, i64)]| {
            let mut t: Vec<(Vec<usize>, i64)> = terms
                .iter()
                .map(|(w, c)| (w.one_line().to_vec(), *c))
                .collect();
            t.sort();
            t
        };
        let swapped = calc.cup_expand_classes(&v, &u)?;
        if sorted(&expansion) != sorted(&swapped) {
            return Err(CliError::Invariant(
                "cup expansion is not symmetric in its factors".into(),
            ));
        }
        let degree = u.length() + v.length();
        for (w, _) in &expansion {
            if w.length() != degree {
                return Err(CliError::Invariant(format!(
                    "term {:?} has length {}, expected {degree}",
                    w.one_line(),
                    w.length()
                )));
            }
        }
    }
    let mut terms = Vec::new();
    for (w, c) in expansion {
        let coeff = u64::try_from(c).map_err(|_| {
            invariant(format!(
                "negative cup coefficient {c} at {:?}",
                w.one_line()
            ))
        })?;
        if coeff > 0 {
            terms.push(Term {
                coeff,
                class: FlagClass::of_perm(&w),
            });
        }
    }
    to_output(&sort_terms(terms)?)
}

// ---------------------------------------------------------------------------
// lr

#[derive(Serialize)]
struct CoeffOut {
    coeff: u64,
}

pub fn cmd_lr(input: &str, check: bool) -> Result<String> {
    let req: LrRequest = serde_json::from_str(input)?;
    for (name, p) in [
        ("left", &req.left),
        ("right", &req.right),
        ("target", &req.target),
    ] {
        if !is_partition(p) {
            return Err(CliError::Input(format!(
                "`{name}` is not a partition: {p:?}"
            )));
        }
        if p.iter().filter(|&&r| r > 0).count() > req.rows
            || p.first().copied().unwrap_or(0) as usize > req.cols
        {
            return Err(CliError::Input(format!(
                "`{name}` {p:?} does not fit in the {}x{} box",
                req.rows, req.cols
            )));
        }
    }
    let coeff = lr_coeff(&req.left, &req.right, &req.target, req.rows, req.cols);
    if check {
        let oracle = lr_coeff_via_lattice_words(&req.left, &req.right, &req.target);
        if oracle != coeff {
            return Err(CliError::Invariant(format!(
                "rectification count {coeff} vs lattice-word count {oracle}"
            )));
        }
    }
    to_output(&CoeffOut { coeff })
}

// ---------------------------------------------------------------------------
// pieri

fn pair_of_gamma(gamma: &[u32]) -> Result<(u32, u32)> {
    match trim_zeros(gamma).as_slice() {
        [] => Ok((0, 0)),
        &[a] => Ok((a, 0)),
        &[a, b] => Ok((a, b)),
        _ => Err(CliError::Input(format!(
            "a two-row index has at most 2 parts, got {gamma:?}"
        ))),
    }
}

pub fn cmd_pieri(input: &str, check: bool) -> Result<String> {
    let req: PieriRequest = serde_json::from_str(input)?;
    let gamma = pair_of_gamma(&req.gamma)?;
    match req.space {
        SpaceName::LG => {
            if req.marker != 0 {
                return Err(CliError::Input(
                    "type markers only exist on the even orthogonal space".into(),
                ));
            }
            if req.primed {
                return Err(CliError::Input(
                    "the primed Pieri class only exists on the even orthogonal space".into(),
                ));
            }
            let expansion = pieri_lg(req.n, req.p, gamma)?;
            if check {
                check_pieri_lg(&req, gamma, &expansion)?;
            }
            let terms = expansion
                .into_iter()
                .map(|(g, coeff)| Term {
                    coeff,
                    class: BktIndex {
                        gamma: trim_zeros(&[g.0, g.1]),
                        marker: 0,
                    },
                })
                .collect();
            to_output(&sort_terms(terms)?)
        }
        SpaceName::OG => {
            let typed = TypedRows {
                rows: gamma,
                marker: req.marker,
            };
            let expansion = pieri_og(req.n, req.p, req.primed, typed)?;
            if check {
                check_pieri_og(&req, typed, &expansion)?;
            }
            let terms = expansion
                .into_iter()
                .map(|(t, coeff)| Term {
                    coeff,
                    class: BktIndex {
                        gamma: trim_zeros(&[t.rows.0, t.rows.1]),
                        marker: t.marker,
                    },
                })
                .collect();
            to_output(&sort_terms(terms)?)
        }
    }
}

/// Independent path for `pieri --check`: the star product of the
/// corresponding diagram classes, transported through the index
/// translation, must reproduce the expansion.
fn check_pieri_lg(
    req: &PieriRequest,
    gamma: (u32, u32),
    expansion: &[((u32, u32), u64)],
) -> Result<()> {
    let class = coadjoint_class_of_index(req.n, gamma).map_err(invariant)?;
    let pieri_class = coadjoint_pieri_class(req.n, req.p).map_err(invariant)?;
    let mut transported: Vec<((u32, u32), u64)> = star_lg(req.n, pieri_class, class)?
        .into_iter()
        .map(|(cls, c)| (coadjoint_index(cls), c))
        .collect();
    transported.sort();
    let mut want = expansion.to_vec();
    want.sort();
    if transported != want {
        return Err(CliError::Invariant(format!(
            "star-product transport {transported:?} disagrees with the Pieri expansion {want:?}"
        )));
    }
    Ok(())
}

fn check_pieri_og(
    req: &PieriRequest,
    typed: TypedRows,
    expansion: &[(TypedRows, u64)],
) -> Result<()> {
    let class = adjoint_class_of_index(req.n, typed).map_err(invariant)?;
    let charge = (req.p == req.n - 2).then_some({
        if req.primed {
            Charge::Down
        } else {
            Charge::Up
        }
    });
    let pieri_class = adjoint_pieri_class(req.n, req.p, charge).map_err(invariant)?;
    let mut transported: Vec<(TypedRows, u64)> = star_og(req.n, pieri_class, class)?
        .into_iter()
        .map(|(cls, c)| (adjoint_index(cls), c))
        .collect();
    transported.sort();
    let mut want = expansion.to_vec();
    want.sort();
    if transported != want {
        return Err(CliError::Invariant(format!(
            "star-product transport {transported:?} disagrees with the Pieri expansion {want:?}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// star

pub fn cmd_star(input: &str, check: bool) -> Result<String> {
    let req: StarRequest = serde_json::from_str(input)?;
    match req.space {
        SpaceName::LG => {
            let left = req.left.to_coadjoint(req.n)?;
            let right = req.right.to_coadjoint(req.n)?;
            let expansion = star_lg(req.n, left, right)?;
            if check {
                check_star_lg(req.n, left, right, &expansion)?;
            }
            let terms = expansion
                .into_iter()
                .map(|(cls, coeff)| Term {
                    coeff,
                    class: TwoRowClass::of_coadjoint(cls),
                })
                .collect();
            to_output(&sort_terms(terms)?)
        }
        SpaceName::OG => {
            let left = req.left.to_adjoint(req.n)?;
            let right = req.right.to_adjoint(req.n)?;
            let expansion = star_og(req.n, left, right)?;
            if check {
                check_star_og(req.n, left, right, &expansion)?;
            }
            let terms = expansion
                .into_iter()
                .map(|(cls, coeff)| Term {
                    coeff,
                    class: TwoRowClass::of_adjoint(cls),
                })
                .collect();
            to_output(&sort_terms(terms)?)
        }
    }
}

/// The degree whose Pieri class this is, if any.
fn lg_pieri_degree(n: u32, class: CoadjointClass) -> Option<u32> {
    (1..=2 * n - 2).find(|&p| coadjoint_pieri_class(n, p).ok() == Some(class))
}

/// The `(degree, primed)` pair whose Pieri class this is, if any.
fn og_pieri_degree(n: u32, class: AdjointClass) -> Option<(u32, bool)> {
    for p in 1..=2 * n - 3 {
        let charges: &[Option<Charge>] = if p == n - 2 {
            &[Some(Charge::Up), Some(Charge::Down)]
        } else {
            &[None]
        };
        for &charge in charges {
            if adjoint_pieri_class(n, p, charge).ok() == Some(class) {
                return Some((p, charge == Some(Charge::Down)));
            }
        }
    }
    None
}

fn check_star_lg(
    n: u32,
    left: CoadjointClass,
    right: CoadjointClass,
    expansion: &[(CoadjointClass, u64)],
) -> Result<()> {
    let mut swapped = star_lg(n, right, left)?;
    swapped.sort();
    let mut straight = expansion.to_vec();
    straight.sort();
    if straight != swapped {
        return Err(CliError::Invariant(
            "star expansion is not symmetric in its factors".into(),
        ));
    }
    let degree = left.weight() + right.weight();
    for (cls, _) in expansion {
        if cls.weight() != degree {
            return Err(CliError::Invariant(format!(
                "term {cls:?} has weight {}, expected {degree}",
                cls.weight()
            )));
        }
    }
    for (pieri_side, other) in [(left, right), (right, left)] {
        if let Some(p) = lg_pieri_degree(n, pieri_side) {
            let mut transported: Vec<((u32, u32), u64)> = expansion
                .iter()
                .map(|&(cls, c)| (coadjoint_index(cls), c))
                .collect();
            transported.sort();
            let mut want = pieri_lg(n, p, coadjoint_index(other)).map_err(invariant)?;
            want.sort();
            if transported != want {
                return Err(CliError::Invariant(format!(
                    "transport {transported:?} disagrees with the Pieri rule {want:?} at p={p}"
                )));
            }
        }
    }
    Ok(())
}

fn check_star_og(
    n: u32,
    left: AdjointClass,
    right: AdjointClass,
    expansion: &[(AdjointClass, u64)],
) -> Result<()> {
    let mut swapped = star_og(n, right, left)?;
    swapped.sort();
    let mut straight = expansion.to_vec();
    straight.sort();
    if straight != swapped {
        return Err(CliError::Invariant(
            "star expansion is not symmetric in its factors".into(),
        ));
    }
    let degree = left.weight() + right.weight();
    for (cls, _) in expansion {
        if cls.weight() != degree {
            return Err(CliError::Invariant(format!(
                "term {cls:?} has weight {}, expected {degree}",
                cls.weight()
            )));
        }
    }
    for (pieri_side, other) in [(left, right), (right, left)] {
        if let Some((p, primed)) = og_pieri_degree(n, pieri_side) {
            let mut transported: Vec<(TypedRows, u64)> = expansion
                .iter()
                .map(|&(cls, c)| (adjoint_index(cls), c))
                .collect();
            transported.sort();
            let mut want = pieri_og(n, p, primed, adjoint_index(other)).map_err(invariant)?;
            want.sort();
            if transported != want {
                return Err(CliError::Invariant(format!(
                    "transport {transported:?} disagrees with the Pieri rule {want:?} at p={p}"
                )));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// translate

pub fn cmd_translate(input: &str, check: bool) -> Result<String> {
    let value = parse_json(input)?;
    if has_key(&value, "base") || has_key(&value, "top") {
        let class: IsotropicClass = from_value(value)?;
        let ryd = class.to_ryd()?;
        let typed = gamma_index(&ryd);
        if check {
            let back = gamma_index_inverse(class.family.into(), class.n, class.k, &typed)
                .map_err(invariant)?;
            if back != ryd {
                return Err(CliError::Invariant(
                    "the inverse translation does not return the input diagram".into(),
                ));
            }
        }
        to_output(&BktIndex {
            gamma: typed.gamma().to_vec(),
            marker: typed.marker(),
        })
    } else if has_key(&value, "gamma") {
        let idx: ContextedIndex = from_value(value)?;
        let family = idx.family;
        let typed = TypedStrictPartition::new(family.into(), idx.n, idx.k, &idx.gamma, idx.marker)?;
        let ryd = gamma_index_inverse(family.into(), idx.n, idx.k, &typed)?;
        if check {
            let forward = gamma_index(&ryd);
            if forward != typed {
                return Err(CliError::Invariant(
                    "the diagram of the index does not translate back to it".into(),
                ));
            }
        }
        to_output(&IsotropicClass::of_ryd(&ryd))
    } else {
        Err(CliError::Input(
            "translate expects an isotropic class (with `base`/`top`) or a classical index (with `gamma`, `family`, `n`, `k`)"
                .into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// enumerate

/// What `enumerate` walks.
#[derive(Debug, Clone)]
pub enum Domain {
    Flag {
        n: usize,
        k: Vec<usize>,
    },
    Isotropic {
        family: FamilyName,
        n: usize,
        k: usize,
    },
    TwoRow {
        space: SpaceName,
        n: u32,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagDomain {
    n: usize,
    k: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IsotropicDomain {
    family: FamilyName,
    n: usize,
    k: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoRowDomain {
    space: SpaceName,
    n: u32,
}

pub fn parse_domain_json(input: &str) -> Result<Domain> {
    let v = parse_json(input)?;
    if has_key(&v, "space") {
        let d: TwoRowDomain = from_value(v)?;
        Ok(Domain::TwoRow {
            space: d.space,
            n: d.n,
        })
    } else if has_key(&v, "family") {
        let d: IsotropicDomain = from_value(v)?;
        Ok(Domain::Isotropic {
            family: d.family,
            n: d.n,
            k: d.k,
        })
    } else {
        let d: FlagDomain = from_value(v)?;
        Ok(Domain::Flag { n: d.n, k: d.k })
    }
}

/// Compact domain names: `S_7^{1,3,5}`, `B_5^3`, `D_6^3`, `LG_4`, `OG_5`.
pub fn parse_domain_name(name: &str) -> Result<Domain> {
    let bad = || {
        CliError::Input(format!(
            "cannot parse domain `{name}`; expected S_<n>^{{k1,k2,…}}, B_<n>^<k>, D_<n>^<k>, LG_<n>, or OG_<n>"
        ))
    };
    let (head, tail) = name.split_once('_').ok_or_else(bad)?;
    match head {
        "S" => {
            let (n, ks) = tail.split_once('^').ok_or_else(bad)?;
            let ks = ks
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(bad)?;
            Ok(Domain::Flag {
                n: n.parse().map_err(|_| bad())?,
                k: ks
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?,
            })
        }
        "B" | "D" => {
            let (n, k) = tail.split_once('^').ok_or_else(bad)?;
            Ok(Domain::Isotropic {
                family: if head == "B" {
                    FamilyName::B
                } else {
                    FamilyName::D
                },
                n: n.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
            })
        }
        "LG" | "OG" => Ok(Domain::TwoRow {
            space: if head == "LG" {
                SpaceName::LG
            } else {
                SpaceName::OG
            },
            n: tail.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

#[derive(Serialize)]
struct CountOut {
    count: u64,
}

fn enforce_bound(n: usize, max_n: Option<usize>) -> Result<()> {
    let bound = max_n.unwrap_or(DEFAULT_ENUM_BOUND);
    if n > bound {
        return Err(CliError::Input(format!(
            "n={n} exceeds the enumeration bound {bound}; raise --max-n"
        )));
    }
    Ok(())
}

pub fn cmd_enumerate(
    domain: Domain,
    count_only: bool,
    check: bool,
    max_n: Option<usize>,
    workers: usize,
) -> Result<String> {
    match domain {
        Domain::Flag { n, k } => {
            let shape = FlagShape::new(n, &k)?;
            let perms = enumerate_flag_perms(&shape, max_n)?;
            if check {
                let expect: u64 = factorial(n)
                    / (1..=shape.d())
                        .map(|i| factorial(shape.r(i)))
                        .product::<u64>();
                if perms.len() as u64 != expect {
                    return Err(CliError::Invariant(format!(
                        "enumerated {} classes, the coset count is {expect}",
                        perms.len()
                    )));
                }
                let failures: u64 = shard_map(&perms, workers, |w| {
                    // round-trip: the emitted descriptor re-parses and
                    // re-validates to the same diagram
                    match FlagClass::of_perm(w).to_ryd() {
                        Ok(r) => u64::from(ryd_from_perm(w) != r),
                        Err(_) => 1,
                    }
                })
                .into_iter()
                .sum();
                if failures > 0 {
                    return Err(CliError::Invariant(format!(
                        "{failures} enumerated classes fail to round-trip"
                    )));
                }
            }
            if count_only {
                return to_output(&CountOut {
                    count: perms.len() as u64,
                });
            }
            let classes: Vec<FlagClass> = perms.iter().map(FlagClass::of_perm).collect();
            to_output(&sort_classes(classes)?)
        }
        Domain::Isotropic { family, n, k } => {
            enforce_bound(n, max_n)?;
            let typed = enumerate_typed_partitions(family.into(), n, k)?;
            if check {
                // independent path: the coset enumeration must be in
                // bijection with the index enumeration
                let perms = enumerate_signed_perms(family.into(), n, k, max_n)?;
                if perms.len() != typed.len() {
                    return Err(CliError::Invariant(format!(
                        "{} classical indices vs {} coset representatives",
                        typed.len(),
                        perms.len()
                    )));
                }
            }
            let classes: Vec<IsotropicClass> = shard_map(&typed, workers, |t| {
                gamma_index_inverse(family.into(), n, k, t)
                    .map(|ryd| IsotropicClass::of_ryd(&ryd))
                    .map_err(invariant)
            })
            .into_iter()
            .collect::<Result<_>>()?;
            if check {
                let failures: u64 = shard_map(
                    &classes.iter().zip(&typed).collect::<Vec<_>>(),
                    workers,
                    |(class, typed)| match class.to_ryd() {
                        Ok(r) => u64::from(gamma_index(&r) != **typed),
                        Err(_) => 1,
                    },
                )
                .into_iter()
                .sum();
                if failures > 0 {
                    return Err(CliError::Invariant(format!(
                        "{failures} enumerated diagrams fail to round-trip through the index"
                    )));
                }
            }
            if count_only {
                return to_output(&CountOut {
                    count: classes.len() as u64,
                });
            }
            to_output(&sort_classes(classes)?)
        }
        Domain::TwoRow { space, n } => {
            enforce_bound(n as usize, max_n)?;
            let classes: Vec<TwoRowClass>;
            let brute: usize;
            match space {
                SpaceName::LG => {
                    let all = coadjoint_classes(n)?;
                    brute = (0..=2 * n)
                        .flat_map(|a| (0..=a).map(move |b| (a, b)))
                        .flat_map(|base| {
                            [false, true].map(|top_used| CoadjointClass { base, top_used })
                        })
                        .filter(|&c| is_coadjoint_class(n, c))
                        .count();
                    classes = all.into_iter().map(TwoRowClass::of_coadjoint).collect();
                }
                SpaceName::OG => {
                    let all = adjoint_classes(n)?;
                    brute = (0..=2 * n)
                        .flat_map(|a| (0..=a).map(move |b| (a, b)))
                        .flat_map(|base| {
                            [None, Some(Charge::Up), Some(Charge::Down)]
                                .into_iter()
                                .flat_map(move |charge| {
                                    [false, true].map(move |top_used| AdjointClass {
                                        base,
                                        top_used,
                                        charge,
                                    })
                                })
                        })
                        .filter(|&c| is_adjoint_class(n, c))
                        .count();
                    classes = all.into_iter().map(TwoRowClass::of_adjoint).collect();
                }
            }
            if check && brute != classes.len() {
                return Err(CliError::Invariant(format!(
                    "enumerated {} classes, the membership scan finds {brute}",
                    classes.len()
                )));
            }
            if count_only {
                return to_output(&CountOut {
                    count: classes.len() as u64,
                });
            }
            to_output(&sort_classes(classes)?)
        }
    }
}
