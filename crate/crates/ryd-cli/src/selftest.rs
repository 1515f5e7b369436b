//! Built-in verification suites: golden structure constants, agreement of
//! independent computation paths, enumerative counts, and the structural
//! lemma sweeps behind the Pieri coefficients.  Each suite tallies its
//! checks and reports one pass/fail line; `--max-n` bounds the exhaustive
//! sweeps and `--parallel` shards the heavy ones deterministically.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use serde::Serialize;

use ryd_core::bk::{bk_coeff, bk_coeff_via_words, bk_expand, is_levi_movable};
use ryd_core::isotropic::{
    enumerate_typed_partitions, gamma_index, gamma_index_inverse, gamma_of_signed_perm,
    TypedStrictPartition,
};
use ryd_core::jdt::{jdt_rectify, lr_coeff, lr_coeff_via_lattice_words, standard_labellings};
use ryd_core::partition::{contains, partitions_in_box, size};
use ryd_core::perm::{
    enumerate_flag_perms, enumerate_signed_perms, word_of, word_to_perm, GrassPerm, SignedFamily,
};
use ryd_core::pieri::{pieri_lg, pieri_og, GridBox, PieriGeometry, PieriVariant, TypedRows};
use ryd_core::poset::{FlagShape, LieFamily};
use ryd_core::ryd::{ryd_from_perm, ryd_from_signed_perm, Charge, FlagRYD, IsotropicRYD};
use ryd_core::schubert::SchubertCalc;
use ryd_core::star::{
    adjoint_classes, adjoint_index, adjoint_pieri_class, coadjoint_classes, coadjoint_index,
    coadjoint_pieri_class, star_lg, star_og,
};

use crate::util::shard_map;
use crate::wire::to_output;

/// Default bound on the exhaustive suites when `--max-n` is not given.
pub const DEFAULT_SELFTEST_BOUND: usize = 5;

// ---------------------------------------------------------------------------
// Check bookkeeping.

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
    sample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.sample.is_none() {
                self.sample = Some(msg());
            }
        }
    }

    fn eq<T: PartialEq + core::fmt::Debug>(
        &mut self,
        got: &T,
        want: &T,
        ctx: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if got != want {
            self.failures += 1;
            if self.sample.is_none() {
                self.sample = Some(format!("{}: got {:?}, want {:?}", ctx(), got, want));
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.checks += 1;
        self.failures += 1;
        if self.sample.is_none() {
            self.sample = Some(msg);
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.sample.is_none() {
            self.sample = other.sample;
        }
    }

    fn panicked(payload: Box<dyn std::any::Any + Send>) -> Tally {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Tally {
            checks: 1,
            failures: 1,
            sample: Some(format!("suite panicked: {msg}")),
        }
    }
}

/// One reported suite: its name, how many checks ran, how many failed, and
/// the first failure message.
#[derive(Serialize)]
pub struct SuiteOutcome {
    name: &'static str,
    checks: u64,
    failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    sample: Option<String>,
}

#[derive(Serialize)]
struct Report<'a> {
    status: &'a str,
    max_n: usize,
    suites: &'a [SuiteOutcome],
}

fn push_outcome(outcomes: &mut Vec<SuiteOutcome>, name: &'static str, tally: Tally, ms: u128) {
    if tally.failures == 0 {
        eprintln!("ok {name} ({} checks, {ms} ms)", tally.checks);
    } else {
        eprintln!(
            "FAIL {name}: {} of {} checks failed; first: {}",
            tally.failures,
            tally.checks,
            tally.sample.as_deref().unwrap_or("(no message)")
        );
    }
    outcomes.push(SuiteOutcome {
        name,
        checks: tally.checks,
        failures: tally.failures,
        sample: tally.sample,
    });
}

fn run_suite(outcomes: &mut Vec<SuiteOutcome>, name: &'static str, f: impl FnOnce() -> Tally) {
    let t0 = Instant::now();
    let tally = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(Tally::panicked);
    push_outcome(outcomes, name, tally, t0.elapsed().as_millis());
}

/// Run every suite, print one line each to stderr, and return the JSON
/// report (timings stay on stderr so the report is byte-deterministic)
/// plus the overall verdict.
pub fn cmd_selftest(max_n: Option<usize>, workers: usize) -> (String, bool) {
    let max_n = max_n.unwrap_or(DEFAULT_SELFTEST_BOUND);
    let mut outcomes = Vec::new();

    run_suite(&mut outcomes, "golden-products", golden_products);

    // one flag sweep feeds the two path-equality suites
    let t0 = Instant::now();
    let (cup, words) = catch_unwind(AssertUnwindSafe(|| flag_sweep(max_n, workers)))
        .unwrap_or_else(|payload| {
            let msg = Tally::panicked(payload);
            let copy = Tally {
                checks: msg.checks,
                failures: msg.failures,
                sample: msg.sample.clone(),
            };
            (msg, copy)
        });
    let ms = t0.elapsed().as_millis();
    push_outcome(&mut outcomes, "deformed-vs-cup", cup, ms);
    push_outcome(&mut outcomes, "word-path-equality", words, ms);

    run_suite(&mut outcomes, "diagram-coset-counts", || {
        diagram_counts(max_n, workers)
    });
    run_suite(&mut outcomes, "index-translation-squares", || {
        translation_squares(max_n)
    });
    run_suite(&mut outcomes, "lagrangian-star-pieri", || {
        lagrangian_star(max_n)
    });
    run_suite(&mut outcomes, "orthogonal-star-pieri", || {
        orthogonal_star(max_n)
    });
    run_suite(&mut outcomes, "rectification-oracle", || {
        rectification_oracle(max_n, workers)
    });
    run_suite(&mut outcomes, "pieri-lemma-sweeps", || pieri_lemmas(max_n));

    let all_pass = outcomes.iter().all(|o| o.failures == 0);
    let report = Report {
        status: if all_pass { "pass" } else { "fail" },
        max_n,
        suites: &outcomes,
    };
    let json = to_output(&report).expect("report serialization");
    (json, all_pass)
}

// ---------------------------------------------------------------------------
// Shared enumeration helpers.

fn flag_shapes(n: usize, d_filter: Option<&[usize]>) -> Vec<FlagShape> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n - 1)) {
        let k: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        if d_filter.is_none_or(|ds| ds.contains(&k.len())) {
            out.push(FlagShape::new(n, &k).unwrap());
        }
    }
    out
}

fn region_pairs(shape: &FlagShape) -> Vec<(usize, usize)> {
    let d = shape.d();
    (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

// ---------------------------------------------------------------------------
// Suite: golden structure constants and pinned translations.

fn golden_products() -> Tally {
    let mut t = Tally::default();

    // deformed coefficient 2 on the two-step flag variety of a 7-space
    let s7 = FlagShape::new(7, &[3, 6]).unwrap();
    let ryd = |line: &[usize]| ryd_from_perm(&GrassPerm::new(line, &s7).unwrap());
    let la = ryd(&[1, 3, 6, 2, 4, 7, 5]);
    let mu = ryd(&[1, 4, 6, 2, 5, 7, 3]);
    let nu = ryd(&[3, 5, 7, 2, 4, 6, 1]);
    t.eq(&bk_coeff(&la, &mu, &nu), &2, || {
        "two-step triple on 7 letters".into()
    });
    let exp = bk_expand(&la, &mu);
    t.check(exp.iter().any(|(r, c)| *r == nu && *c == 2), || {
        "pinned term missing from the 7-letter expansion".into()
    });

    // unit coefficient through both routes on the two-step flag of a 5-space
    let s5 = FlagShape::new(5, &[2, 4]).unwrap();
    let (tau, pi, rho) = ([2, 3, 1, 1, 2], [1, 2, 1, 3, 2], [3, 2, 1, 2, 1]);
    match bk_coeff_via_words(&tau, &pi, &rho, &s5) {
        Ok(c) => t.eq(&c, &1, || "word-route unit coefficient".into()),
        Err(e) => t.fail(format!("word-route unit coefficient errored: {e}")),
    }
    let of_word = |w: &[usize]| ryd_from_perm(&word_to_perm(w, &s5).unwrap());
    t.eq(
        &bk_coeff(&of_word(&tau), &of_word(&pi), &of_word(&rho)),
        &1,
        || "diagram-route unit coefficient".into(),
    );

    // the identity class is a two-sided unit
    let s4 = FlagShape::new(4, &[2]).unwrap();
    let id = ryd_from_perm(&GrassPerm::identity(&s4));
    t.check(bk_expand(&id, &id) == vec![(id.clone(), 1)], || {
        "identity square".into()
    });

    // three-term cup product whose deformed counterpart vanishes
    let u = GrassPerm::new(&[1, 2, 4, 5, 3], &s5).unwrap();
    let v = GrassPerm::new(&[3, 4, 1, 2, 5], &s5).unwrap();
    let mut calc = SchubertCalc::new();
    match calc.cup_expand_classes(&u, &v) {
        Ok(terms) => {
            let mut exp: Vec<(Vec<usize>, i64)> = terms
                .into_iter()
                .map(|(w, c)| (w.one_line().to_vec(), c))
                .collect();
            exp.sort();
            t.eq(
                &exp,
                &vec![
                    (vec![3, 4, 2, 5, 1], 1),
                    (vec![3, 5, 1, 4, 2], 1),
                    (vec![4, 5, 1, 2, 3], 1),
                ],
                || "three-term cup product".into(),
            );
        }
        Err(e) => t.fail(format!("three-term cup product errored: {e}")),
    }
    t.check(
        bk_expand(&ryd_from_perm(&u), &ryd_from_perm(&v)).is_empty(),
        || "vanishing deformed expansion".into(),
    );

    // pinned index translation on OG(3,11) and its inverse
    match IsotropicRYD::new(LieFamily::B, 5, 3, &[4, 1, 1], &[2, 0, 0], None) {
        Ok(r) => {
            let idx = gamma_index(&r);
            t.check(idx.gamma() == [6, 1, 1] && idx.marker() == 0, || {
                format!("pinned translation gave {:?}", idx.gamma())
            });
            match gamma_index_inverse(LieFamily::B, 5, 3, &idx) {
                Ok(back) => t.check(back == r, || "pinned translation inverse".into()),
                Err(e) => t.fail(format!("pinned translation inverse errored: {e}")),
            }
        }
        Err(e) => t.fail(format!("pinned translation diagram rejected: {e}")),
    }

    // coset count of the three-step flag variety of a 7-space
    let s135 = FlagShape::new(7, &[1, 3, 5]).unwrap();
    match enumerate_flag_perms(&s135, Some(7)) {
        Ok(perms) => t.eq(&perms.len(), &630, || "three-step coset count".into()),
        Err(e) => t.fail(format!("three-step enumeration errored: {e}")),
    }

    t
}

// ---------------------------------------------------------------------------
// Suites: deformed coefficients vs the cup oracle, and the diagram route vs
// the word route, over every shape within the bound.

fn flag_sweep(max_n: usize, workers: usize) -> (Tally, Tally) {
    let mut shapes: Vec<FlagShape> = Vec::new();
    for n in 2..=max_n.min(6) {
        // the full-flag and four-step shapes at n = 6 are out of budget
        let filter: Option<&[usize]> = if n <= 5 { None } else { Some(&[2, 3]) };
        shapes.extend(flag_shapes(n, filter));
    }
    let partials = shard_map(&shapes, workers, sweep_one_shape);
    let mut cup = Tally::default();
    let mut words = Tally::default();
    for (c, w) in partials {
        cup.merge(c);
        words.merge(w);
    }
    (cup, words)
}

fn sweep_one_shape(shape: &FlagShape) -> (Tally, Tally) {
    let mut cup_tally = Tally::default();
    let mut word_tally = Tally::default();
    let perms = enumerate_flag_perms(shape, None).unwrap();
    let ryds: Vec<FlagRYD> = perms.iter().map(ryd_from_perm).collect();
    let words: Vec<Vec<usize>> = perms.iter().map(word_of).collect();
    let regions = region_pairs(shape);
    let degs: Vec<Vec<u64>> = ryds
        .iter()
        .map(|r| regions.iter().map(|&(i, j)| r.degree(i, j)).collect())
        .collect();
    let mut buckets: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for (c, dv) in degs.iter().enumerate() {
        buckets.entry(dv.clone()).or_default().push(c);
    }
    // one oracle per shape: its memo table serves the whole sweep
    let mut calc = SchubertCalc::new();
    let exercise_levi_api = shape.n() <= 4;
    for a in 0..perms.len() {
        for b in 0..perms.len() {
            let sum: Vec<u64> = degs[a].iter().zip(&degs[b]).map(|(x, y)| x + y).collect();
            let Some(cands) = buckets.get(&sum) else {
                continue;
            };
            let cup_map: BTreeMap<Vec<usize>, i64> =
                match calc.cup_expand_classes(&perms[a], &perms[b]) {
                    Ok(terms) => terms
                        .into_iter()
                        .map(|(w, c)| (w.one_line().to_vec(), c))
                        .collect(),
                    Err(e) => {
                        cup_tally.fail(format!("cup oracle errored on {shape:?}: {e}"));
                        continue;
                    }
                };
            for &c in cands {
                let cup = cup_map.get(perms[c].one_line()).copied().unwrap_or(0);
                // the candidates share their per-region degrees with the
                // pair by construction, so Levi-movability reduces to a
                // nonzero cup coefficient here
                let bk = bk_coeff(&ryds[a], &ryds[b], &ryds[c]);
                cup_tally.check(cup >= 0 && bk == cup as u64, || {
                    format!(
                        "n={} k={:?}: {:?} · {:?} at {:?}: deformed {bk}, cup {cup}",
                        shape.n(),
                        shape.k(),
                        perms[a].one_line(),
                        perms[b].one_line(),
                        perms[c].one_line(),
                    )
                });
                let via = bk_coeff_via_words(&words[a], &words[b], &words[c], shape);
                word_tally.check(via.as_ref().is_ok_and(|&v| v == bk), || {
                    format!(
                        "n={} k={:?}: {:?} · {:?} at {:?}: diagram {bk}, words {via:?}",
                        shape.n(),
                        shape.k(),
                        perms[a].one_line(),
                        perms[b].one_line(),
                        perms[c].one_line(),
                    )
                });
                if exercise_levi_api {
                    let levi = is_levi_movable(&ryds[a], &ryds[b], &ryds[c], &mut calc);
                    cup_tally.check(levi.as_ref().is_ok_and(|&l| l == (cup != 0)), || {
                        format!(
                            "n={} k={:?}: movability probe {levi:?} vs cup {cup} at {:?}/{:?}/{:?}",
                            shape.n(),
                            shape.k(),
                            perms[a].one_line(),
                            perms[b].one_line(),
                            perms[c].one_line(),
                        )
                    });
                }
            }
        }
    }
    (cup_tally, word_tally)
}

// ---------------------------------------------------------------------------
// Suite: hook-valid diagram counts match the coset count n!/∏ r_i!.

fn diagram_counts(max_n: usize, workers: usize) -> Tally {
    let mut shapes: Vec<FlagShape> = Vec::new();
    for n in 2..=max_n.min(7) {
        shapes.extend(flag_shapes(n, None));
    }
    let partials = shard_map(&shapes, workers, |shape| {
        let mut t = Tally::default();
        let regions = region_pairs(shape);
        let choices: Vec<Vec<Vec<u32>>> = regions
            .iter()
            .map(|&(i, j)| {
                let rows = shape.r(i);
                let cols = shape.r(j) as u32;
                (0..=(rows as u64 * cols as u64))
                    .flat_map(|b| partitions_in_box(rows, cols, b))
                    .collect()
            })
            .collect();
        let total: u64 = choices.iter().map(|c| c.len() as u64).product();
        let mut idx = vec![0usize; regions.len()];
        let mut valid = 0u64;
        for _ in 0..total {
            let parts: Vec<((usize, usize), Vec<u32>)> = regions
                .iter()
                .enumerate()
                .map(|(pos, &rg)| (rg, choices[pos][idx[pos]].clone()))
                .collect();
            if FlagRYD::new(shape, &parts).is_ok() {
                valid += 1;
            }
            for pos in 0..idx.len() {
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
        let expect: u64 = factorial(shape.n())
            / (1..=shape.d())
                .map(|i| factorial(shape.r(i)))
                .product::<u64>();
        t.eq(&valid, &expect, || {
            format!("n={} k={:?}", shape.n(), shape.k())
        });
        t
    });
    let mut out = Tally::default();
    for p in partials {
        out.merge(p);
    }
    out
}

// ---------------------------------------------------------------------------
// Suite: the signed-permutation index squares commute, exhaustively.

fn translation_squares(max_n: usize) -> Tally {
    let mut t = Tally::default();
    let families = [
        (SignedFamily::B, LieFamily::B),
        (SignedFamily::D, LieFamily::D),
    ];
    for (sf, lf) in families {
        for n in 2..=max_n.min(6) {
            for k in 1..n {
                // the even family keeps two rows below the fork, so k < n−1
                if lf == LieFamily::D && k + 1 >= n {
                    continue;
                }
                let (perms, typed) = match (
                    enumerate_signed_perms(sf, n, k, Some(n)),
                    enumerate_typed_partitions(lf, n, k),
                ) {
                    (Ok(p), Ok(q)) => (p, q),
                    (p, q) => {
                        t.fail(format!(
                            "{lf:?} n={n} k={k}: enumeration errored ({:?}/{:?})",
                            p.err(),
                            q.err()
                        ));
                        continue;
                    }
                };
                t.eq(&perms.len(), &typed.len(), || {
                    format!("{lf:?} n={n} k={k}: coset count vs index count")
                });
                let mut seen: Vec<TypedStrictPartition> = Vec::with_capacity(perms.len());
                for w in &perms {
                    let direct = gamma_of_signed_perm(w);
                    let diagram = ryd_from_signed_perm(w);
                    let through = gamma_index(&diagram);
                    t.eq(&direct, &through, || format!("{lf:?} n={n} k={k} {w:?}"));
                    // the index pins the diagram: the square closes back
                    t.check(
                        gamma_index_inverse(lf, n, k, &direct).as_ref() == Ok(&diagram),
                        || format!("{lf:?} n={n} k={k} {w:?}: inverse"),
                    );
                    seen.push(direct);
                }
                seen.sort();
                let mut expect = typed;
                expect.sort();
                t.eq(&seen, &expect, || format!("{lf:?} n={n} k={k}: index sets"));
            }
        }
    }
    t
}

// ---------------------------------------------------------------------------
// Suites: the star products transport to the Pieri rules.

fn lagrangian_star(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for n in 3..=max_n.min(6) as u32 {
        let classes = match coadjoint_classes(n) {
            Ok(c) => c,
            Err(e) => {
                t.fail(format!("coadjoint classes n={n} errored: {e}"));
                continue;
            }
        };
        for p in 1..=2 * n - 2 {
            let pieri_class = coadjoint_pieri_class(n, p).unwrap();
            for &mu in &classes {
                let mut want = match pieri_lg(n, p, coadjoint_index(mu)) {
                    Ok(w) => w,
                    Err(e) => {
                        t.fail(format!("pieri n={n} p={p} {mu:?} errored: {e}"));
                        continue;
                    }
                };
                want.sort();
                for (left, right) in [(pieri_class, mu), (mu, pieri_class)] {
                    match star_lg(n, left, right) {
                        Ok(terms) => {
                            let mut got: Vec<((u32, u32), u64)> = terms
                                .into_iter()
                                .map(|(cls, c)| (coadjoint_index(cls), c))
                                .collect();
                            got.sort();
                            t.eq(&got, &want, || format!("n={n} p={p} mu={mu:?}"));
                        }
                        Err(e) => t.fail(format!("star n={n} p={p} {mu:?} errored: {e}")),
                    }
                }
            }
        }
    }
    t
}

fn orthogonal_star(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for n in 4..=max_n.min(7) as u32 {
        let classes = match adjoint_classes(n) {
            Ok(c) => c,
            Err(e) => {
                t.fail(format!("adjoint classes n={n} errored: {e}"));
                continue;
            }
        };
        for p in 1..=2 * n - 3 {
            let charges: &[Option<Charge>] = if p == n - 2 {
                &[Some(Charge::Up), Some(Charge::Down)]
            } else {
                &[None]
            };
            for &charge in charges {
                let pieri_class = adjoint_pieri_class(n, p, charge).unwrap();
                let primed = charge == Some(Charge::Down);
                for &mu in &classes {
                    let mut want = match pieri_og(n, p, primed, adjoint_index(mu)) {
                        Ok(w) => w,
                        Err(e) => {
                            t.fail(format!("pieri n={n} p={p} {mu:?} errored: {e}"));
                            continue;
                        }
                    };
                    want.sort();
                    for (left, right) in [(pieri_class, mu), (mu, pieri_class)] {
                        // a half-integral coefficient would surface as Err
                        match star_og(n, left, right) {
                            Ok(terms) => {
                                let mut got: Vec<(TypedRows, u64)> = terms
                                    .into_iter()
                                    .map(|(cls, c)| (adjoint_index(cls), c))
                                    .collect();
                                got.sort();
                                t.eq(&got, &want, || {
                                    format!("n={n} p={p} charge={charge:?} mu={mu:?}")
                                });
                            }
                            Err(e) => t.fail(format!("star n={n} p={p} {mu:?} errored: {e}")),
                        }
                    }
                }
            }
        }
    }
    t
}

// ---------------------------------------------------------------------------
// Suite: rectification counts are statistics of the target shape alone and
// agree with the classical lattice-word rule.

fn rectification_oracle(max_n: usize, workers: usize) -> Tally {
    // box side grows with the bound: 3×3 at the default, 4×4 from 6 up
    let side = max_n.saturating_sub(2).clamp(2, 4);
    let (rows, cols) = (side, side);
    let parts: Vec<Vec<u32>> = (0..=(rows * cols) as u64)
        .flat_map(|b| partitions_in_box(rows, cols as u32, b))
        .collect();
    // standard labellings of each straight shape, for the denominator of
    // the independence check
    let mut syt_count: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for p in &parts {
        let count = standard_labellings(&[], p, rows, cols).unwrap().len() as u64;
        syt_count.insert(p.clone(), count);
    }
    let partials = shard_map(&parts, workers, |outer| {
        let mut t = Tally::default();
        for inner in parts.iter().filter(|i| contains(outer, i)) {
            let labellings = standard_labellings(inner, outer, rows, cols).unwrap();
            let mut hist: HashMap<_, u64> = HashMap::new();
            for l in &labellings {
                *hist.entry(jdt_rectify(l)).or_default() += 1;
            }
            let mut by_shape: BTreeMap<Vec<u32>, Vec<u64>> = BTreeMap::new();
            for (tab, c) in &hist {
                by_shape
                    .entry(tab.ideal_shape().unwrap())
                    .or_default()
                    .push(*c);
            }
            let skew_size = size(outer) - size(inner);
            for target in parts.iter().filter(|t| size(t) == skew_size) {
                let via_rectification = lr_coeff(inner, target, outer, rows, cols);
                match by_shape.get(target) {
                    None => t.eq(&via_rectification, &0, || {
                        format!("{inner:?} in {outer:?}: no labelling lands on {target:?}")
                    }),
                    Some(counts) => {
                        // every standard labelling of the target is reached,
                        // each by the same number of skew labellings
                        t.check(counts.iter().all(|&c| c == counts[0]), || {
                            format!("{inner:?} in {outer:?} -> {target:?}: counts {counts:?}")
                        });
                        t.eq(&counts[0], &via_rectification, || {
                            format!("{inner:?} in {outer:?} -> {target:?}: multiplicity")
                        });
                        t.eq(&(counts.len() as u64), &syt_count[target], || {
                            format!("{inner:?} in {outer:?} -> {target:?}: labelling count")
                        });
                    }
                }
                t.eq(
                    &via_rectification,
                    &lr_coeff_via_lattice_words(inner, target, outer),
                    || format!("{inner:?} in {outer:?} -> {target:?}: lattice oracle"),
                );
            }
        }
        t
    });
    let mut out = Tally::default();
    for p in partials {
        out.merge(p);
    }
    out
}

// ---------------------------------------------------------------------------
// Suite: the structural lemmas behind the two-row Pieri coefficients.

fn members(g: &PieriGeometry) -> Vec<(u32, u32)> {
    let w = g.width();
    let mut out = Vec::new();
    for a in 0..=w {
        for b in 0..=a {
            if g.is_member((a, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

fn row_interval(row: u8, lo: i64, hi: i64, boxes: &[GridBox]) -> Vec<GridBox> {
    boxes
        .iter()
        .copied()
        .filter(|b| b.row == row && (lo..=hi).contains(&(b.col as i64)))
        .collect()
}

fn pieri_lemmas(max_n: usize) -> Tally {
    let mut t = Tally::default();
    let hi = max_n.min(6) as u32;
    let geometries: Vec<PieriGeometry> = (3..=hi)
        .map(PieriGeometry::lagrangian)
        .chain((4..=hi).map(PieriGeometry::even_orthogonal))
        .map(Result::unwrap)
        .collect();
    for g in &geometries {
        let w = g.width() as i64;
        let centre = g.first_right_column();
        let lagrangian = g.variant() == PieriVariant::Lagrangian;
        // the column limit below which a first row admits a bisection; one
        // past it is the survival threshold for the first row
        let fold = (g.width() / 2) as i64;
        let shapes = members(g);

        // the added boxes of the right block always form one interval per row
        for &gamma in &shapes {
            for &delta in &shapes {
                let (d1, d2) = g.right_added_rows(gamma, delta);
                let expect = |row: u8, gr: u32, dr: u32| -> Vec<GridBox> {
                    ((gr + 1).max(centre)..=dr)
                        .map(|c| GridBox::new(row, c))
                        .collect()
                };
                t.eq(&d1, &expect(1, gamma.0, delta.0), || {
                    format!("{gamma:?} -> {delta:?}: first added row")
                });
                t.eq(&d2, &expect(2, gamma.1, delta.1), || {
                    format!("{gamma:?} -> {delta:?}: second added row")
                });
            }
        }

        // crossing the size threshold always reaches the removed-box target
        for &gamma in &shapes {
            if gamma.1 == 0 {
                continue;
            }
            for p in 1..=g.width() {
                let star = (gamma.0 + p + 1, gamma.1 - 1);
                let sum = (gamma.0 + gamma.1) as i64;
                if g.is_member(star) && sum < w && sum + p as i64 > w - 1 {
                    t.check(g.arrow_relation(gamma, star, p), || {
                        format!("{gamma:?} must reach {star:?} at p={p}")
                    });
                }
            }
        }

        for &gamma in &shapes {
            for &delta in &shapes {
                let p = (delta.0 + delta.1).wrapping_sub(gamma.0 + gamma.1);
                if delta.0 + delta.1 <= gamma.0 + gamma.1 || !g.arrow_relation(gamma, delta, p) {
                    continue;
                }
                let contained = gamma.0 <= delta.0 && gamma.1 <= delta.1;
                let g_size = (gamma.0 + gamma.1) as i64;
                let d_size = (delta.0 + delta.1) as i64;
                let (d1, d2) = g.right_added_rows(gamma, delta);

                if !contained {
                    // a removed box forces the unique reflected target,
                    // which exists only across the size threshold, with a
                    // pinned coefficient exponent
                    t.check(gamma.1 >= 1, || format!("{gamma:?} -> {delta:?}"));
                    t.eq(&delta, &(gamma.0 + p + 1, gamma.1 - 1), || {
                        format!("{gamma:?} -> {delta:?}: reflected target")
                    });
                    t.check(g_size < w && d_size > w - 1, || {
                        format!("{gamma:?} -> {delta:?}: threshold")
                    });
                    if lagrangian {
                        t.eq(&g.lg_exponent(gamma, delta), &0, || {
                            format!("{gamma:?} -> {delta:?}: exponent")
                        });
                    } else {
                        let expect = u32::from(gamma.0 < g.strict_bound() && p <= g.strict_bound());
                        t.eq(&g.og_exponent(gamma, delta, p), &expect, || {
                            format!("{gamma:?} -> {delta:?}: exponent")
                        });
                    }
                } else {
                    // interval characterization of the killed boxes: the
                    // upper qualifying strip kills a reflected window of the
                    // first row, the lower one kills tail windows of both
                    let (by_s, by_t) = g.killed_by(gamma, delta);
                    let (ga, gb) = (gamma.0 as i64, gamma.1 as i64);
                    let db = delta.1 as i64;
                    let keep = |boxes: Vec<GridBox>| -> Vec<GridBox> {
                        boxes
                            .into_iter()
                            .filter(|b| !lagrangian || b.col != centre)
                            .collect()
                    };
                    let expect_s = keep(row_interval(1, w - ga, w - 1 - db, &d1));
                    let mut expect_t = keep(row_interval(1, w + 1 - gb, w, &d1));
                    expect_t.extend(keep(row_interval(2, w - gb, w - 1, &d2)));
                    expect_t.sort();
                    t.eq(&by_s, &expect_s, || {
                        format!("{gamma:?} -> {delta:?}: upper strip")
                    });
                    t.eq(&by_t, &expect_t, || {
                        format!("{gamma:?} -> {delta:?}: lower strip")
                    });
                    t.check(by_s.iter().all(|b| b.row == 1), || {
                        format!("{gamma:?} -> {delta:?}: upper strip rows")
                    });
                    let mut union = by_s;
                    union.extend(by_t);
                    union.sort();
                    union.dedup();
                    t.eq(&g.killed_boxes(gamma, delta), &union, || {
                        format!("{gamma:?} -> {delta:?}: union")
                    });
                    // the mirror column of the lower row is never killed
                    let mirror = GridBox::new(1, (w - db) as u32);
                    if d1.contains(&mirror) {
                        t.check(!union.contains(&mirror), || {
                            format!("{gamma:?} -> {delta:?}: mirror box")
                        });
                    }
                    if lagrangian {
                        t.check(union.iter().all(|b| b.col != centre), || {
                            format!("{gamma:?} -> {delta:?}: centre column")
                        });
                    }
                }

                // bisection happens exactly on threshold-crossing contained
                // pairs whose first row is short and clears the second row
                let expect_bisected = g_size < w
                    && d_size > w - 1
                    && contained
                    && (gamma.0 as i64) < fold
                    && delta.1 < gamma.0;
                t.eq(&g.is_bisected(gamma, delta), &expect_bisected, || {
                    format!("{gamma:?} -> {delta:?}: bisection")
                });
                if expect_bisected {
                    t.eq(&g.surviving_components(gamma, delta).len(), &2, || {
                        format!("{gamma:?} -> {delta:?}: components")
                    });
                    if lagrangian {
                        t.eq(&g.lg_exponent(gamma, delta), &1, || {
                            format!("{gamma:?} -> {delta:?}: doubled coefficient")
                        });
                    }
                }

                // a long first row crossing the threshold keeps a survivor
                if contained
                    && g_size < w
                    && d_size > w - 1
                    && gamma.0 as i64 >= fold
                    && !d1.is_empty()
                {
                    t.check(
                        g.surviving_boxes(gamma, delta).iter().any(|b| b.row == 1),
                        || format!("{gamma:?} -> {delta:?}: first-row survivor"),
                    );
                }
            }
        }
    }
    t
}
