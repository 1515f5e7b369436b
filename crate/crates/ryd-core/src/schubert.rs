//! Independent cup-product oracle for the cohomology of flag varieties,
//! via Schubert polynomials.
//!
//! The polynomial of the longest element of `S_m` is the staircase
//! monomial `x_1^{m−1} x_2^{m−2} ⋯ x_{m−1}`; every other polynomial is
//! obtained by divided differences `∂_i f = (f − s_i f)/(x_i − x_{i+1})`
//! walking down from the top.  Products are expanded back into the basis
//! by peeling: the leading monomial (reverse-lexicographic from the right:
//! compare exponents at the last differing index, larger wins) of a
//! Schubert polynomial is `x^{code(w)}`, so repeatedly reading the leading
//! exponent as a code and subtracting that polynomial terminates with the
//! full expansion.  Everything is exact integer arithmetic; a negative
//! peeled coefficient or an overflow is a hard error.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{perm_from_any_code, GrassPerm};
use crate::poset::FlagShape;
use crate::{Error, Result};

/// A polynomial in finitely many variables with integer coefficients,
/// keyed by exponent vectors trimmed of trailing zeros.  No zero
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Vec<u8>, i64>,
}

fn trim_exponents(mut e: Vec<u8>) -> Vec<u8> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    pub fn constant(c: i64) -> IntPolynomial {
        let mut p = IntPolynomial::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &i64)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exponents: Vec<u8>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(trim_exponents(exponents)) {
            Entry::Occupied(mut o) => {
                let v = o.get().checked_add(coeff).expect("coefficient overflow");
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::default();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let mut e = vec![0u8; ea.len().max(eb.len())];
                for (i, slot) in e.iter_mut().enumerate() {
                    let a = ea.get(i).copied().unwrap_or(0);
                    let b = eb.get(i).copied().unwrap_or(0);
                    *slot = a.checked_add(b).expect("exponent overflow");
                }
                out.add_term(e, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Subtract `scale` times `other`.
    fn sub_scaled(&mut self, other: &IntPolynomial, scale: i64) {
        for (e, &c) in &other.terms {
            self.add_term(
                e.clone(),
                c.checked_mul(-scale).expect("coefficient overflow"),
            );
        }
    }

    /// The divided difference `∂_i f = (f − s_i f)/(x_i − x_{i+1})`,
    /// `i ≥ 1`, computed monomial by monomial:
    /// `∂_i x_i^p x_{i+1}^q = ± Σ_j x_i^j x_{i+1}^{p+q−1−j}` with `j`
    /// running over `[q, p)` for `p > q` (sign +) and `[p, q)` for `p < q`
    /// (sign −); symmetric monomials die.
    pub fn divided_difference(&self, i: usize) -> IntPolynomial {
        debug_assert!(i >= 1);
        let mut out = IntPolynomial::default();
        for (e, &c) in &self.terms {
            let p = e.get(i - 1).copied().unwrap_or(0);
            let q = e.get(i).copied().unwrap_or(0);
            if p == q {
                continue;
            }
            let (lo, hi, sign) = if p > q { (q, p, 1) } else { (p, q, -1) };
            for j in lo..hi {
                let mut e2 = e.clone();
                if e2.len() < i + 1 {
                    e2.resize(i + 1, 0);
                }
                e2[i - 1] = j;
                e2[i] = p + q - 1 - j;
                out.add_term(e2, sign * c);
            }
        }
        out
    }

    /// The maximal exponent vector under the peel order: compare two
    /// vectors at the last index where they differ, larger exponent wins.
    fn leading(&self) -> Option<(Vec<u8>, i64)> {
        let mut best: Option<(&Vec<u8>, i64)> = None;
        for (e, &c) in &self.terms {
            match best {
                None => best = Some((e, c)),
                Some((be, _)) => {
                    if peel_greater(e, be) {
                        best = Some((e, c));
                    }
                }
            }
        }
        best.map(|(e, c)| (e.clone(), c))
    }
}

/// `a > b` in the peel order (reverse-lexicographic from the right).
fn peel_greater(a: &[u8], b: &[u8]) -> bool {
    for i in (0..a.len().max(b.len())).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x != y {
            return x > y;
        }
    }
    false
}

/// Drop trailing fixed points of a one-line permutation.
fn trim_line(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    while !v.is_empty() && *v.last().unwrap() == v.len() {
        v.pop();
    }
    v
}

fn is_permutation(w: &[usize]) -> bool {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    for &x in w {
        if x == 0 || x > n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Memoizing Schubert-polynomial calculator.  Only the polynomials of
/// requested permutations are cached (keyed by trimmed one-line); the
/// intermediate polynomials of a divided-difference chain are discarded to
/// bound memory during exhaustive sweeps.
#[derive(Default)]
pub struct SchubertCalc {
    memo: BTreeMap<Vec<usize>, IntPolynomial>,
}

impl SchubertCalc {
    pub fn new() -> SchubertCalc {
        SchubertCalc::default()
    }

    /// The Schubert polynomial of `w` (one-line notation, any ambient
    /// symmetric group).
    pub fn schubert_poly(&mut self, w: &[usize]) -> &IntPolynomial {
        assert!(is_permutation(w), "{w:?} is not a permutation");
        let key = trim_line(w);
        if !self.memo.contains_key(&key) {
            let poly = compute_schubert(&key);
            self.memo.insert(key.clone(), poly);
        }
        &self.memo[&key]
    }

    /// Expand `S_u · S_v` in the Schubert basis and report the terms whose
    /// permutations lie in `S_n`.  Works inside `S_{2n}`: the product of
    /// two `S_n` polynomials only involves monomials `x^e` with
    /// `e_i ≤ 2(n−i)`, all of which decode to codes of `S_{2n}` elements.
    pub fn cup_expand(
        &mut self,
        u: &[usize],
        v: &[usize],
        n: usize,
    ) -> Result<Vec<(Vec<usize>, i64)>> {
        if !is_permutation(u) || !is_permutation(v) || u.len() > n || v.len() > n {
            return Err(Error::InvalidPermutation(alloc::format!(
                "cup factors must be permutations in S_{n}"
            )));
        }
        let m = 2 * n;
        let full = FlagShape::full(m);
        let mut prod = self.schubert_poly(u).clone();
        prod = prod.mul(self.schubert_poly(v));
        let mut out: Vec<(Vec<usize>, i64)> = Vec::new();
        while let Some((mono, coeff)) = prod.leading() {
            if coeff < 0 {
                return Err(Error::NegativeCoefficient(alloc::format!(
                    "peeling x^{mono:?} gave {coeff}"
                )));
            }
            let code: Vec<u32> = mono.iter().map(|&e| e as u32).collect();
            let w = perm_from_any_code(&code, m, &full);
            let line = trim_line(w.one_line());
            let sw = self.schubert_poly(&line).clone();
            prod.sub_scaled(&sw, coeff);
            if line.len() <= n {
                out.push((line, coeff));
            }
        }
        out.sort();
        Ok(out)
    }

    /// The coefficient of `σ_w` in `σ_u · σ_v` on the partial flag variety
    /// of the common shape.  Structure constants of a partial flag variety
    /// agree with the full-flag ones on pulled-back classes, so this is a
    /// lookup into [`SchubertCalc::cup_expand`].
    pub fn cup_coeff_restricted(
        &mut self,
        u: &GrassPerm,
        v: &GrassPerm,
        w: &GrassPerm,
    ) -> Result<i64> {
        debug_assert_eq!(u.shape(), v.shape());
        debug_assert_eq!(u.shape(), w.shape());
        let expansion = self.cup_expand(u.one_line(), v.one_line(), u.n())?;
        let key = trim_line(w.one_line());
        Ok(expansion
            .iter()
            .find(|(line, _)| *line == key)
            .map(|&(_, c)| c)
            .unwrap_or(0))
    }

    /// [`SchubertCalc::cup_expand`] with flag-class inputs and outputs; the
    /// expansion of two classes with descents in `k` is again supported on
    /// such classes.
    pub fn cup_expand_classes(
        &mut self,
        u: &GrassPerm,
        v: &GrassPerm,
    ) -> Result<Vec<(GrassPerm, i64)>> {
        debug_assert_eq!(u.shape(), v.shape());
        let n = u.n();
        let shape = u.shape().clone();
        let raw = self.cup_expand(u.one_line(), v.one_line(), n)?;
        raw.into_iter()
            .map(|(line, c)| {
                let mut full_line = line;
                for i in full_line.len()..n {
                    full_line.push(i + 1);
                }
                let w = GrassPerm::new(&full_line, &shape)
                    .expect("cup product of pulled-back classes left the descent class");
                Ok((w, c))
            })
            .collect()
    }
}

/// Build `S_w` by climbing first ascents to the longest element of the
/// minimal symmetric group containing `w`, then applying the recorded
/// divided differences in reverse from the staircase monomial.
fn compute_schubert(w_trim: &[usize]) -> IntPolynomial {
    let l = w_trim.len();
    if l <= 1 {
        return IntPolynomial::constant(1);
    }
    let mut chain: Vec<usize> = Vec::new();
    let mut v = w_trim.to_vec();
    while let Some(i) = (0..l - 1).find(|&i| v[i] < v[i + 1]) {
        v.swap(i, i + 1);
        chain.push(i + 1);
    }
    // staircase monomial of the longest element
    let staircase: Vec<u8> = (0..l - 1).map(|i| (l - 1 - i) as u8).collect();
    let mut poly = IntPolynomial::default();
    poly.add_term(staircase, 1);
    for &i in chain.iter().rev() {
        poly = poly.divided_difference(i);
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::lr_coeff;
    use crate::perm::enumerate_flag_perms;
    use crate::ryd::ryd_from_perm;

    fn coxeter_length(w: &[usize]) -> usize {
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    fn poly_of(pairs: &[(&[u8], i64)]) -> IntPolynomial {
        let mut p = IntPolynomial::default();
        for (e, c) in pairs {
            p.add_term(e.to_vec(), *c);
        }
        p
    }

    #[test]
    fn schubert_poly_examples() {
        let mut calc = SchubertCalc::new();
        assert_eq!(calc.schubert_poly(&[1, 2, 3]), &IntPolynomial::constant(1));
        // s_1: x_1
        assert_eq!(calc.schubert_poly(&[2, 1]), &poly_of(&[(&[1], 1)]));
        // 312: x_1^2
        assert_eq!(calc.schubert_poly(&[3, 1, 2]), &poly_of(&[(&[2], 1)]));
        // 132: x_1 + x_2
        assert_eq!(
            calc.schubert_poly(&[1, 3, 2]),
            &poly_of(&[(&[1], 1), (&[0, 1], 1)])
        );
        // longest element of S_3: x_1^2 x_2
        assert_eq!(calc.schubert_poly(&[3, 2, 1]), &poly_of(&[(&[2, 1], 1)]));
        // 2143: x_1^2 + x_1 x_2 + x_1 x_3
        assert_eq!(
            calc.schubert_poly(&[2, 1, 4, 3]),
            &poly_of(&[(&[2], 1), (&[1, 1], 1), (&[1, 0, 1], 1)])
        );
    }

    #[test]
    fn leading_monomial_is_the_code() {
        // the peel order sees x^{code(w)} first in every S_4 polynomial
        let mut calc = SchubertCalc::new();
        for w in enumerate_flag_perms(&FlagShape::full(4), None).unwrap() {
            let line = w.one_line();
            let poly = calc.schubert_poly(line).clone();
            let (lead, coeff) = poly.leading().unwrap();
            let code: Vec<u8> = crate::perm::code_of(&w).iter().map(|&c| c as u8).collect();
            assert_eq!(trim_exponents(code), lead, "w={line:?}");
            assert_eq!(coeff, 1);
        }
    }

    #[test]
    fn chain_choice_does_not_matter() {
        // climb by last ascent instead of first: same polynomials on S_5
        fn compute_last_ascent(w_trim: &[usize]) -> IntPolynomial {
            let l = w_trim.len();
            if l <= 1 {
                return IntPolynomial::constant(1);
            }
            let mut chain = Vec::new();
            let mut v = w_trim.to_vec();
            while let Some(i) = (0..l - 1).rev().find(|&i| v[i] < v[i + 1]) {
                v.swap(i, i + 1);
                chain.push(i + 1);
            }
            let staircase: Vec<u8> = (0..l - 1).map(|i| (l - 1 - i) as u8).collect();
            let mut poly = IntPolynomial::default();
            poly.add_term(staircase, 1);
            for &i in chain.iter().rev() {
                poly = poly.divided_difference(i);
            }
            poly
        }
        let mut calc = SchubertCalc::new();
        for w in enumerate_flag_perms(&FlagShape::full(5), None).unwrap() {
            let line = trim_line(w.one_line());
            assert_eq!(
                calc.schubert_poly(&line),
                &compute_last_ascent(&line),
                "w={line:?}"
            );
        }
    }

    #[test]
    fn cup_expand_examples() {
        let mut calc = SchubertCalc::new();
        // x_1 · x_1 = x_1^2
        let exp = calc.cup_expand(&[2, 1, 3], &[2, 1, 3], 3).unwrap();
        assert_eq!(exp, vec![(vec![3, 1, 2], 1)]);
        // identity is the unit
        let exp = calc.cup_expand(&[1, 2, 3], &[2, 3, 1], 3).unwrap();
        assert_eq!(exp, vec![(vec![2, 3, 1], 1)]);
        // the three-term product on Fl(2,4;ℂ^5)
        let shape = FlagShape::new(5, &[2, 4]).unwrap();
        let u = GrassPerm::new(&[1, 2, 4, 5, 3], &shape).unwrap();
        let v = GrassPerm::new(&[3, 4, 1, 2, 5], &shape).unwrap();
        let exp = calc.cup_expand_classes(&u, &v).unwrap();
        let want = [
            vec![3, 4, 2, 5, 1],
            vec![3, 5, 1, 4, 2],
            vec![4, 5, 1, 2, 3],
        ];
        assert_eq!(exp.len(), 3);
        for w in want {
            assert!(
                exp.iter()
                    .any(|(cls, c)| cls.one_line() == &w[..] && *c == 1),
                "missing σ_{w:?}"
            );
        }
        // C^λ_{λ,id} = 1
        let id = GrassPerm::identity(&shape);
        assert_eq!(calc.cup_coeff_restricted(&u, &id, &u).unwrap(), 1);
    }

    #[test]
    fn cup_commutative_and_graded() {
        let mut calc = SchubertCalc::new();
        let perms = enumerate_flag_perms(&FlagShape::full(4), None).unwrap();
        for u in &perms {
            for v in &perms {
                let uv = calc.cup_expand(u.one_line(), v.one_line(), 4).unwrap();
                let vu = calc.cup_expand(v.one_line(), u.one_line(), 4).unwrap();
                assert_eq!(uv, vu);
                for (w, c) in &uv {
                    assert!(*c > 0);
                    assert_eq!(
                        coxeter_length(w),
                        u.length() + v.length(),
                        "u={:?} v={:?} w={w:?}",
                        u.one_line(),
                        v.one_line()
                    );
                }
            }
        }
    }

    #[test]
    fn grassmannian_cup_is_littlewood_richardson() {
        // d=2 shapes: the restricted cup coefficient equals the jdt LR
        // coefficient of the region partitions, n ≤ 5
        for n in 2..=5usize {
            for k in 1..n {
                let shape = FlagShape::new(n, &[k]).unwrap();
                let perms = enumerate_flag_perms(&shape, None).unwrap();
                let mut calc = SchubertCalc::new();
                for u in &perms {
                    let lu = ryd_from_perm(u);
                    for v in &perms {
                        let lv = ryd_from_perm(v);
                        let exp = calc.cup_expand_classes(u, v).unwrap();
                        for w in &perms {
                            let lw = ryd_from_perm(w);
                            let via_cup = exp
                                .iter()
                                .find(|(cls, _)| cls == w)
                                .map(|&(_, c)| c)
                                .unwrap_or(0);
                            let via_lr =
                                lr_coeff(lu.part(1, 2), lv.part(1, 2), lw.part(1, 2), k, n - k)
                                    as i64;
                            assert_eq!(via_cup, via_lr, "u={u:?} v={v:?} w={w:?}");
                        }
                    }
                }
            }
        }
    }
}
