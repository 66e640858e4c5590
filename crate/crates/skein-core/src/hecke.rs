//! The Hecke algebras `H_n` on the positive-permutation-braid basis:
//! word reduction through the quadratic skein relation, the symmetrizers
//! `f_n` and `g_n`, the Young idempotents `y_lambda`, and the tableau
//! morphisms `alpha_t`, `beta_t`.
//!
//! Composition stacks the first factor on top of the second; permutations
//! act top-to-bottom and compose left-to-right. The reduction rule is
//! `w_pi * sigma_i = w_{pi tau_i}` when the length goes up, and
//! `x(s - s^-1) w_pi + x^2 w_{pi tau_i}` when it goes down.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Result, SkeinError};
use crate::partition::{Partition, StandardTableau};
use crate::scalar::Scalar;

/// A permutation of `1..=n`, stored as 0-based images: strand starting at
/// top position `i+1` ends at bottom position `images[i]+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(SkeinError::InvalidPermutation(format!("{images:?}")));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of a 1-based position.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    /// Post-compose with the adjacent transposition of values `i`, `i+1`
    /// (1-based): the result maps `p` to `tau_i(self(p))`. This is the strand
    /// pairing after stacking `sigma_i` below the braid of `self`.
    pub fn apply_transposition(&self, i: usize) -> Permutation {
        let a = i - 1;
        let images = self
            .images
            .iter()
            .map(|&im| {
                if im == a {
                    a + 1
                } else if im == a + 1 {
                    a
                } else {
                    im
                }
            })
            .collect();
        Permutation { images }
    }

    /// Whether stacking `sigma_i` below increases the length.
    pub fn transposition_lengthens(&self, i: usize) -> bool {
        // lengthens iff the preimage of i comes before the preimage of i+1
        let inv = self.inverse();
        inv.images[i - 1] < inv.images[i]
    }

    /// Left-to-right composition: `self` then `other` (stacking `other`
    /// below `self`).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: self.images.iter().map(|&im| other.images[im]).collect(),
        }
    }

    /// Block sum: `self` on the first strands, `other` shifted after.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let k = self.n();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&im| im + k));
        Permutation { images }
    }

    /// All permutations of `1..=n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// The cycle sending position `p` to `n`, shifting `p+1..=n` down by one.
    pub fn route_to_last(p: usize, n: usize) -> Permutation {
        let images = (1..=n)
            .map(|k| {
                if k < p {
                    k - 1
                } else if k == p {
                    n - 1
                } else {
                    k - 2
                }
            })
            .collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A braid word: signed generator indices, `+i` for `sigma_i`, `-i` for its
/// inverse, on a declared strand count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let a = l.unsigned_abs() as usize;
            if l == 0 || a >= n {
                return Err(SkeinError::InvalidBraidWord(format!(
                    "letter {l} out of range for {n} strands"
                )));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn parse(n: usize, input: &str) -> Result<Self> {
        let letters = input
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| SkeinError::InvalidBraidWord(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }

    /// The underlying strand pairing.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &l in &self.letters {
            p = p.apply_transposition(l.unsigned_abs() as usize);
        }
        p
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(SkeinError::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            n: self.n,
            letters,
        })
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}[{}]", self.n, self)
    }
}

/// Canonical reduced positive word for a permutation: repeatedly resolve the
/// leftmost descent. Deterministic, of length `l(pi)`.
pub fn positive_permutation_braid(pi: &Permutation) -> BraidWord {
    // sort the one-line notation to the identity by leftmost-descent swaps;
    // each swap at position i contributes the letter i+1, in recording order
    let n = pi.n();
    let mut images = pi.one_line();
    let mut letters: Vec<i32> = Vec::new();
    loop {
        let mut idx = None;
        for i in 0..n.saturating_sub(1) {
            if images[i] > images[i + 1] {
                idx = Some(i);
                break;
            }
        }
        match idx {
            None => break,
            Some(i) => {
                images.swap(i, i + 1);
                letters.push((i + 1) as i32);
            }
        }
    }
    BraidWord { n, letters }
}

/// An element of `H_n`: a sparse map from positive permutation braids to
/// scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        HeckeElement::basis(Permutation::identity(n))
    }

    pub fn basis(pi: Permutation) -> Self {
        let n = pi.n();
        let mut terms = BTreeMap::new();
        terms.insert(pi, Scalar::one());
        HeckeElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pi: &Permutation) -> Scalar {
        self.terms.get(pi).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, pi: Permutation, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(pi) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.n != other.n {
            return Err(SkeinError::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (pi, c) in &other.terms {
            out.add_term(pi.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement::zero(self.n);
        }
        HeckeElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(pi, co)| (pi.clone(), co * c))
                .collect(),
        }
    }

    /// Right-multiply by `sigma_i` (positive generator).
    fn mul_pos_gen(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        let x_ss = &Scalar::monomial(1, 0, 0)
            * &(&Scalar::monomial(0, 0, 1) - &Scalar::monomial(0, 0, -1));
        let x2 = Scalar::monomial(2, 0, 0);
        for (pi, c) in &self.terms {
            let swapped = pi.apply_transposition(i);
            if pi.transposition_lengthens(i) {
                out.add_term(swapped, c);
            } else {
                out.add_term(pi.clone(), &(c * &x_ss));
                out.add_term(swapped, &(c * &x2));
            }
        }
        out
    }

    /// Right-multiply by `sigma_i^{-1}`.
    fn mul_neg_gen(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        let xm2 = Scalar::monomial(-2, 0, 0);
        let xm1_ss = &Scalar::monomial(-1, 0, 0)
            * &(&Scalar::monomial(0, 0, 1) - &Scalar::monomial(0, 0, -1));
        for (pi, c) in &self.terms {
            let swapped = pi.apply_transposition(i);
            if pi.transposition_lengthens(i) {
                // w_pi sigma_i^{-1} = x^{-2} w_{pi tau} - x^{-1}(s-s^{-1}) w_pi
                out.add_term(swapped, &(c * &xm2));
                out.add_term(pi.clone(), &(-&(c * &xm1_ss)));
            } else {
                // w_pi = w_{pi tau} sigma_i, so w_pi sigma_i^{-1} = w_{pi tau}
                out.add_term(swapped, c);
            }
        }
        out
    }

    /// Right-multiply by a braid word.
    pub fn mul_word(&self, w: &BraidWord) -> Result<HeckeElement> {
        if self.n != w.n {
            return Err(SkeinError::StrandMismatch(self.n, w.n));
        }
        let mut out = self.clone();
        for &l in &w.letters {
            out = if l > 0 {
                out.mul_pos_gen(l as usize)
            } else {
                out.mul_neg_gen((-l) as usize)
            };
        }
        Ok(out)
    }

    /// Block tensor: `self` on the first strands, `other` after.
    pub fn tensor(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n + other.n);
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                out.add_term(pa.block_sum(pb), &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Permutation, &Scalar)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        let parts: Vec<String> = terms
            .iter()
            .map(|(pi, c)| {
                let images: Vec<String> = pi.one_line().iter().map(|i| i.to_string()).collect();
                format!("{} * w[{}]", c.factor_string(), images.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Expand a braid word over the positive permutation braid basis.
pub fn word_to_basis(w: &BraidWord) -> HeckeElement {
    HeckeElement::one(w.n).mul_word(w).expect("same strand count")
}

/// Algebra product: `a` stacked on top of `b`.
pub fn mul(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    if a.n != b.n {
        return Err(SkeinError::StrandMismatch(a.n, b.n));
    }
    let mut out = HeckeElement::zero(a.n);
    for (pi, c) in &b.terms {
        let word = positive_permutation_braid(pi);
        let part = a.mul_word(&word)?;
        for (rho, d) in &part.terms {
            out.add_term(rho.clone(), &(d * c));
        }
    }
    Ok(out)
}

/// Product of several factors, left to right (first on top).
pub fn mul_all(factors: &[&HeckeElement]) -> Result<HeckeElement> {
    let mut it = factors.iter();
    let first = it.next().expect("nonempty product");
    let mut acc = (*first).clone();
    for f in it {
        acc = mul(&acc, f)?;
    }
    Ok(acc)
}

/// Place `h` on the strands listed in `positions` (1-based, strictly
/// increasing) inside `H_n`, by conjugating the block form with the positive
/// permutation braid that gathers those positions to the front.
pub fn embed(h: &HeckeElement, positions: &[usize], n: usize) -> Result<HeckeElement> {
    let k = h.n();
    if positions.len() != k
        || positions.windows(2).any(|w| w[0] >= w[1])
        || positions.iter().any(|&p| p == 0 || p > n)
    {
        return Err(SkeinError::Domain(format!(
            "invalid embed positions {positions:?} for {k} strands in {n}"
        )));
    }
    // g sends the chosen positions to 1..k and the rest to k+1..n in order
    let mut images = vec![0usize; n];
    for (idx, &p) in positions.iter().enumerate() {
        images[p - 1] = idx;
    }
    let mut next = k;
    for i in 0..n {
        if !positions.contains(&(i + 1)) {
            images[i] = next;
            next += 1;
        }
    }
    let g = Permutation { images };
    let word = positive_permutation_braid(&g);
    let rho = word_to_basis(&word);
    let rho_inv = word_to_basis(&word.inverse());
    let block = h.tensor(&HeckeElement::one(n - k));
    mul_all(&[&rho, &block, &rho_inv])
}

/// Symmetrizer flavor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymmetrizerKind {
    /// `sigma_i f_n = x s f_n`
    F,
    /// `sigma_i g_n = -x s^{-1} g_n`
    G,
}

/// The idempotents `f_n` (flavor `F`) and `g_n` (flavor `G`).
pub fn symmetrizer(n: usize, kind: SymmetrizerKind) -> HeckeElement {
    assert!(n >= 1);
    let inv_fact = Scalar::quantum_factorial(n as u32)
        .inverse()
        .expect("[n]! invertible");
    let half = (n * (n - 1) / 2) as i64;
    let mut out = HeckeElement::zero(n);
    for pi in Permutation::all(n) {
        let l = pi.length() as i64;
        let coeff = match kind {
            SymmetrizerKind::F => {
                // s^{-n(n-1)/2} (x s^{-1})^{-l}
                Scalar::monomial(-l, 0, l - half)
            }
            SymmetrizerKind::G => {
                // s^{n(n-1)/2} (-x s)^{-l}
                let sign = if l % 2 == 0 { 1 } else { -1 };
                &Scalar::monomial(-l, 0, half - l) * &Scalar::from_int(sign)
            }
        };
        out.add_term(pi, &(&coeff * &inv_fact));
    }
    out
}

/// `F_lambda G_lambda`: the quasi-idempotent whose square is
/// `[hl(lambda)]` times itself.
pub fn young_quasi_idempotent(lambda: &Partition) -> HeckeElement {
    let n = lambda.size();
    if n == 0 {
        return HeckeElement::one(0);
    }
    // F: one copy of [row]! f_row along each row; rows are contiguous in
    // row-major order, so this is a pure tensor
    let mut f = HeckeElement::one(0);
    for &row in lambda.parts() {
        let factor = symmetrizer(row as usize, SymmetrizerKind::F)
            .scale(&Scalar::quantum_factorial(row));
        f = f.tensor(&factor);
    }
    // G: one copy of [col]! g_col along each column, conjugated from
    // column-major order into row-major order
    let t = lambda.transpose();
    let mut g_block = HeckeElement::one(0);
    for &col in t.parts() {
        let factor = symmetrizer(col as usize, SymmetrizerKind::G)
            .scale(&Scalar::quantum_factorial(col));
        g_block = g_block.tensor(&factor);
    }
    let mut colmajor_to_rowmajor = Vec::with_capacity(n);
    for j in 1..=t.rows() {
        for i in 1..=t.parts()[j - 1] as usize {
            colmajor_to_rowmajor.push(lambda.cell_position((i, j)));
        }
    }
    // c maps row-major strand positions to column-major block positions
    let mut images = vec![0usize; n];
    for (block_pos, &rm_pos) in colmajor_to_rowmajor.iter().enumerate() {
        images[rm_pos - 1] = block_pos;
    }
    let c = Permutation { images };
    let word = positive_permutation_braid(&c);
    let rho = word_to_basis(&word);
    let rho_inv = word_to_basis(&word.inverse());
    let g = mul_all(&[&rho, &g_block, &rho_inv]).expect("same strand count");
    mul(&f, &g).expect("same strand count")
}

/// The Young idempotent `y_lambda = [hl(lambda)]^{-1} F_lambda G_lambda`.
pub fn young_idempotent(lambda: &Partition) -> HeckeElement {
    if lambda.is_empty() {
        return HeckeElement::one(0);
    }
    let hl_inv = lambda.hook_product().inverse().expect("hooks invertible");
    young_quasi_idempotent(lambda).scale(&hl_inv)
}

/// Routing braid for a tableau step: the added strand `n` travels to the
/// row-major position of the cell labeled `n`.
fn routing(t: &StandardTableau) -> (HeckeElement, HeckeElement) {
    let n = t.size();
    let shape = t.shape();
    let c = t.cell_of(n as u32).expect("top label");
    let p = shape.cell_position(c);
    // rho_t is the exact braid inverse of the gathering braid w_g, so that
    // beta_t alpha_t collapses through the same conjugation the absorbing
    // property uses: y w_g (y' ⊗ 1) w_g^{-1} y = y
    let g = Permutation::route_to_last(p, n);
    let word = positive_permutation_braid(&g);
    (word_to_basis(&word.inverse()), word_to_basis(&word))
}

/// The morphisms `alpha_t` and `beta_t`, built inductively:
/// `alpha_t = (alpha_t' ⊗ 1) rho_t y_lambda`,
/// `beta_t  = y_lambda rho_t^{-1} (beta_t' ⊗ 1)`.
pub fn tableau_morphisms(t: &StandardTableau) -> (HeckeElement, HeckeElement) {
    let n = t.size();
    assert!(n >= 1);
    if n == 1 {
        let e = HeckeElement::one(1);
        return (e.clone(), e);
    }
    let (alpha_prev, beta_prev) = tableau_morphisms(&t.truncate());
    let y = young_idempotent(&t.shape());
    let (rho, rho_inv) = routing(t);
    let one1 = HeckeElement::one(1);
    let alpha = mul_all(&[&alpha_prev.tensor(&one1), &rho, &y]).expect("sizes match");
    let beta = mul_all(&[&y, &rho_inv, &beta_prev.tensor(&one1)]).expect("sizes match");
    (alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions, standard_tableaux};
    use crate::scalar::parse_scalar;

    fn sc(s: &str) -> Scalar {
        parse_scalar(s).unwrap()
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let p = perm(&[3, 1, 2]);
        assert_eq!(p.length(), 2);
        assert_eq!(p.inverse(), perm(&[2, 3, 1]));
        assert!(perm(&[1, 2, 3]).is_identity());
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn canonical_words() {
        assert!(positive_permutation_braid(&Permutation::identity(3))
            .letters
            .is_empty());
        let w = positive_permutation_braid(&perm(&[2, 1]));
        assert_eq!(w.letters, vec![1]);
        for pi in Permutation::all(4) {
            let w = positive_permutation_braid(&pi);
            assert_eq!(w.letters.len(), pi.length());
            assert_eq!(w.permutation(), pi);
            assert!(w.letters.iter().all(|&l| l > 0));
        }
        // spec example: pi = 1->3, 2->1, 3->2 has two inversions
        let p = perm(&[3, 1, 2]);
        assert_eq!(positive_permutation_braid(&p).letters.len(), 2);
    }

    #[test]
    fn quadratic_relation() {
        // [1,1] on 2 strands -> x(s - s^-1) w_(12) + x^2 w_e
        let w = BraidWord::new(2, vec![1, 1]).unwrap();
        let h = word_to_basis(&w);
        assert_eq!(h.coeff(&perm(&[2, 1])), &sc("x") * &sc("s - s^-1"));
        assert_eq!(h.coeff(&perm(&[1, 2])), sc("x^2"));
        assert_eq!(h.num_terms(), 2);
    }

    #[test]
    fn inverse_generator_expansion() {
        // [-1] on 2 strands -> x^-2 w_(12) - x^-1(s - s^-1) w_e
        let w = BraidWord::new(2, vec![-1]).unwrap();
        let h = word_to_basis(&w);
        assert_eq!(h.coeff(&perm(&[2, 1])), sc("x^-2"));
        assert_eq!(h.coeff(&perm(&[1, 2])), &sc("-x^-1") * &sc("s - s^-1"));
        let w = BraidWord::new(2, vec![1, -1]).unwrap();
        assert_eq!(word_to_basis(&w), HeckeElement::one(2));
    }

    #[test]
    fn braid_relations() {
        let a = word_to_basis(&BraidWord::new(3, vec![1, 2, 1]).unwrap());
        let b = word_to_basis(&BraidWord::new(3, vec![2, 1, 2]).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.num_terms(), 1);
        let a = word_to_basis(&BraidWord::new(4, vec![1, 3]).unwrap());
        let b = word_to_basis(&BraidWord::new(4, vec![3, 1]).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn word_to_basis_is_homomorphism() {
        let w1 = BraidWord::new(3, vec![1, -2, 1]).unwrap();
        let w2 = BraidWord::new(3, vec![2, 2, -1]).unwrap();
        let lhs = word_to_basis(&w1.concat(&w2).unwrap());
        let rhs = mul(&word_to_basis(&w1), &word_to_basis(&w2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_unit_and_quadratic() {
        let h = word_to_basis(&BraidWord::new(3, vec![1, 2]).unwrap());
        assert_eq!(mul(&HeckeElement::one(3), &h).unwrap(), h);
        assert_eq!(mul(&h, &HeckeElement::one(3)).unwrap(), h);
        let s1 = HeckeElement::basis(perm(&[2, 1]));
        let sq = mul(&s1, &s1).unwrap();
        assert_eq!(sq.coeff(&perm(&[2, 1])), &sc("x") * &sc("s - s^-1"));
        assert_eq!(sq.coeff(&perm(&[1, 2])), sc("x^2"));
    }

    #[test]
    fn symmetrizer_small_values() {
        let f1 = symmetrizer(1, SymmetrizerKind::F);
        assert_eq!(f1, HeckeElement::one(1));
        let f2 = symmetrizer(2, SymmetrizerKind::F);
        let br2 = Scalar::quantum_int(2);
        assert_eq!(f2.coeff(&perm(&[1, 2])), &sc("s^-1") / &br2);
        assert_eq!(f2.coeff(&perm(&[2, 1])), &sc("x^-1") / &br2);
        let g2 = symmetrizer(2, SymmetrizerKind::G);
        assert_eq!(g2.coeff(&perm(&[1, 2])), &sc("s") / &br2);
        assert_eq!(g2.coeff(&perm(&[2, 1])), &(-&sc("x^-1")) / &br2);
    }

    #[test]
    fn symmetrizer_eigenvalues_and_idempotence() {
        for n in 2..=4usize {
            let f = symmetrizer(n, SymmetrizerKind::F);
            let g = symmetrizer(n, SymmetrizerKind::G);
            let xs = sc("x*s");
            let neg_xs_inv = sc("-x*s^-1");
            for i in 1..n {
                let si = HeckeElement::basis(Permutation::identity(n).apply_transposition(i));
                assert_eq!(mul(&si, &f).unwrap(), f.scale(&xs), "sigma_{i} f_{n}");
                assert_eq!(mul(&f, &si).unwrap(), f.scale(&xs), "f_{n} sigma_{i}");
                assert_eq!(mul(&si, &g).unwrap(), g.scale(&neg_xs_inv));
                assert_eq!(mul(&g, &si).unwrap(), g.scale(&neg_xs_inv));
            }
            assert_eq!(mul(&f, &f).unwrap(), f, "f_{n} idempotent");
            assert_eq!(mul(&g, &g).unwrap(), g, "g_{n} idempotent");
        }
    }

    #[test]
    fn embed_conjugation_consistency() {
        let f2 = symmetrizer(2, SymmetrizerKind::F);
        let e = embed(&f2, &[1, 3], 3).unwrap();
        let rho = word_to_basis(&BraidWord::new(3, vec![2]).unwrap());
        let rho_inv = word_to_basis(&BraidWord::new(3, vec![-2]).unwrap());
        let block = f2.tensor(&HeckeElement::one(1));
        let a = mul_all(&[&rho, &block, &rho_inv]).unwrap();
        let b = mul_all(&[&rho_inv, &block, &rho]).unwrap();
        assert!(e == a || e == b, "conjugation by the routing braid of (2 3)");
        let e = embed(&f2, &[1, 2], 3).unwrap();
        assert_eq!(e, block);
    }

    #[test]
    fn young_quasi_idempotent_square() {
        for n in 1..=4usize {
            for lambda in partitions(n) {
                let y_tilde = young_quasi_idempotent(&lambda);
                let sq = mul(&y_tilde, &y_tilde).unwrap();
                assert_eq!(
                    sq,
                    y_tilde.scale(&lambda.hook_product()),
                    "quasi-idempotent square for {lambda}"
                );
            }
        }
    }

    #[test]
    fn young_idempotent_special_shapes() {
        for n in 1..=4usize {
            let row = Partition::new(vec![n as u32]).unwrap();
            assert_eq!(young_idempotent(&row), symmetrizer(n, SymmetrizerKind::F));
            let col = Partition::new(vec![1; n]).unwrap();
            assert_eq!(young_idempotent(&col), symmetrizer(n, SymmetrizerKind::G));
        }
        let y21 = young_idempotent(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(mul(&y21, &y21).unwrap(), y21);
    }

    #[test]
    fn orthogonality() {
        for n in 2..=3usize {
            let shapes = partitions(n);
            for a in &shapes {
                for b in &shapes {
                    let ya = young_idempotent(a);
                    let yb = young_idempotent(b);
                    for pi in Permutation::all(n) {
                        let h = HeckeElement::basis(pi);
                        let prod = mul_all(&[&ya, &h, &yb]).unwrap();
                        if a != b {
                            assert!(prod.is_zero(), "{a} vs {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sandwich_is_scalar_multiple() {
        for n in 2..=3usize {
            for lambda in partitions(n) {
                let y = young_idempotent(&lambda);
                for pi in Permutation::all(n) {
                    let h = HeckeElement::basis(pi.clone());
                    let prod = mul_all(&[&y, &h, &y]).unwrap();
                    if prod.is_zero() {
                        continue;
                    }
                    let (p0, c0) = prod.terms().next().unwrap();
                    let ratio = c0 / &y.coeff(p0);
                    assert_eq!(prod, y.scale(&ratio), "sandwich at {lambda}, {pi}");
                }
            }
        }
    }

    #[test]
    fn absorbing_property() {
        for n in 2..=4usize {
            for mu in partitions(n) {
                let ymu = young_idempotent(&mu);
                for c in mu.extreme_cells() {
                    let lambda = mu.remove_cell(c).unwrap();
                    let p = mu.cell_position(c);
                    let positions: Vec<usize> = (1..=n).filter(|&q| q != p).collect();
                    let emb = embed(&young_idempotent(&lambda), &positions, n).unwrap();
                    let prod = mul_all(&[&ymu, &emb, &ymu]).unwrap();
                    assert_eq!(prod, ymu, "absorb {lambda} into {mu} at {c:?}");
                }
            }
        }
    }

    #[test]
    fn tableau_morphism_identities() {
        for n in 1..=3usize {
            for lambda in partitions(n) {
                let tabs = standard_tableaux(&lambda);
                let y = young_idempotent(&lambda);
                for t in &tabs {
                    let (alpha_t, _) = tableau_morphisms(t);
                    for tau in &tabs {
                        let (_, beta_tau) = tableau_morphisms(tau);
                        let prod = mul(&beta_tau, &alpha_t).unwrap();
                        if t == tau {
                            assert_eq!(prod, y, "beta_t alpha_t = y at {lambda}");
                        } else {
                            assert!(prod.is_zero(), "beta_tau alpha_t = 0 at {lambda}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_matches_golden() {
        let h = word_to_basis(&BraidWord::new(2, vec![1, 1]).unwrap());
        assert_eq!(h.to_string(), "x*(s - s^-1) * w[2 1] + x^2 * w[1 2]");
    }
}
