//! The coordinate Hopf algebra `k[X_i^{±1}, X_w : |w| ≥ 2]` of the boxed-convolution
//! group: coproduct, counit and the recursive antipode, all with integer
//! coefficients and independent of the ground ring.
//!
//! Text form: a generator is `X(1,2)`, powers are `X(1)^-4`, factors are joined by
//! `*` and terms by ` + ` / ` - `, e.g. `-X(1)^-4*X(1,1) + 3*X(1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ncpart::nc_table;
use crate::ring::Coeff;
use crate::series::{all_words, TruncSeries, Word};

/// A product of generators with nonzero exponents, sorted by word. Negative
/// exponents occur only on degree-1 generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Word, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(w: Word) -> Self {
        Monomial(vec![(w, 1)])
    }

    /// `X_w^e`; negative `e` requires `|w| = 1`.
    pub fn power(w: Word, e: i32) -> Result<Self> {
        if e < 0 && w.len() > 1 {
            return Err(Error::Domain(format!("X{w} is not invertible")));
        }
        Ok(if e == 0 { Monomial::one() } else { Monomial(vec![(w, e)]) })
    }

    pub fn factors(&self) -> &[(Word, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ |w|·e` over the factors.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|(w, e)| w.len() as i64 * *e as i64).sum()
    }

    /// Number of factors counted with multiplicity (positive exponents only).
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().map(|(w, _)| w.max_letter()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j == other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0);
            let take_right = i == self.0.len() || (j < other.0.len() && other.0[j].0 < self.0[i].0);
            if take_left {
                out.push(self.0[i].clone());
                i += 1;
            } else if take_right {
                out.push(other.0[j].clone());
                j += 1;
            } else {
                let e = self.0[i].1 + other.0[j].1;
                if e != 0 {
                    out.push((self.0[i].0.clone(), e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// `X_{w,π}` from a block list of zero-based positions.
    pub(crate) fn from_blocks(w: &Word, blocks: &[Vec<usize>]) -> Monomial {
        let mut m = Monomial::one();
        for b in blocks {
            m = m.mul(&Monomial::generator(w.restrict(b)));
        }
        m
    }

    /// Drop the degree-1 factors (`X_i ↦ 1`).
    pub fn restrict_plus(&self) -> Monomial {
        Monomial(self.0.iter().filter(|(w, _)| w.len() > 1).cloned().collect())
    }

    pub fn evaluate<R: Coeff>(&self, f: &TruncSeries<R>) -> Result<R> {
        let mut acc = R::one(&f.ring());
        for (w, e) in &self.0 {
            let c = f.coeff(w)?;
            let c = if *e < 0 {
                c.inverse().map_err(|_| {
                    Error::NotInvertible(format!("X{w} has non-unit value {c} under an inverse power"))
                })?
            } else {
                c.clone()
            };
            acc *= &Coeff::pow(&c, e.unsigned_abs());
        }
        Ok(acc)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (w, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "X{w}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Integer combination of monomials in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenPolynomial {
    s: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl GenPolynomial {
    pub fn zero(s: usize) -> Self {
        GenPolynomial { s, terms: BTreeMap::new() }
    }

    pub fn constant(s: usize, c: BigInt) -> Self {
        Self::from_monomial(s, Monomial::one(), c)
    }

    pub fn one(s: usize) -> Self {
        Self::constant(s, BigInt::one())
    }

    pub fn from_monomial(s: usize, m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(s);
        p.add_term(m, c);
        p
    }

    /// The coordinate function `X_w`.
    pub fn generator(s: usize, w: &Word) -> Result<Self> {
        check_word(s, w)?;
        Ok(Self::from_monomial(s, Monomial::generator(w.clone()), BigInt::one()))
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// The same polynomial read over `s` letters.
    pub fn with_s(mut self, s: usize) -> Self {
        self.s = s;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.s = self.s.max(other.s);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GenPolynomial { s: self.s, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.s.max(other.s));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Self {
        let mut out = Self::zero(self.s);
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    /// `X_i ↦ 1` for every degree-1 generator: the image in the coordinate ring of
    /// the normal subgroup of series with all `X_i = 1`, whose generators `X̄_w`
    /// are the `X_w` with `|w| ≥ 2`.
    pub fn restrict_plus(&self) -> Self {
        let mut out = Self::zero(self.s);
        for (m, c) in &self.terms {
            out.add_term(m.restrict_plus(), c.clone());
        }
        out
    }

    /// Substitute `X_w ↦ X_w(f)`.
    pub fn evaluate<R: Coeff>(&self, f: &TruncSeries<R>) -> Result<R> {
        let ring = f.ring();
        let mut acc = R::zero(&ring);
        for (m, c) in &self.terms {
            acc += &(m.evaluate(f)? * &R::from_bigint(&ring, c));
        }
        Ok(acc)
    }
}

impl fmt::Display for GenPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GenPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GenPolynomial {
    type Err = Error;

    /// Parses the text form; `s` is the largest letter that occurs (at least 1).
    fn from_str(text: &str) -> Result<Self> {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut depth = 0i32;
        let mut prev = ' ';
        for ch in text.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if (ch == '+' || ch == '-') && depth == 0 && prev != '^' {
                if !current.trim().is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = false;
                }
                current.clear();
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
            if !ch.is_whitespace() {
                prev = ch;
            }
        }
        if depth != 0 {
            return Err(Error::Malformed(format!("unbalanced parentheses in {text:?}")));
        }
        if current.trim().is_empty() {
            if terms.is_empty() {
                return Err(Error::Malformed("empty polynomial".into()));
            }
            return Err(Error::Malformed(format!("dangling sign in {text:?}")));
        }
        terms.push((negative, current));
        let mut out = GenPolynomial::zero(1);
        for (neg, body) in terms {
            let (m, c) = parse_term(&body)?;
            out.s = out.s.max(m.max_letter() as usize);
            out.add_term(m, if neg { -c } else { c });
        }
        Ok(out)
    }
}

fn parse_term(body: &str) -> Result<(Monomial, BigInt)> {
    let mut coeff = BigInt::one();
    let mut m = Monomial::one();
    for factor in body.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Malformed(format!("empty factor in {body:?}")));
        }
        if let Some(rest) = factor.strip_prefix('X') {
            let (word, exp) = match rest.split_once('^') {
                Some((w, e)) => (
                    w.trim(),
                    e.trim().parse::<i32>().map_err(|_| Error::Malformed(format!("bad exponent in {factor:?}")))?,
                ),
                None => (rest.trim(), 1),
            };
            let inner = word
                .strip_prefix('(')
                .and_then(|w| w.strip_suffix(')'))
                .ok_or_else(|| Error::Malformed(format!("bad generator {factor:?}")))?;
            let letters = inner
                .split(',')
                .map(|l| l.trim().parse::<u8>().map_err(|_| Error::Malformed(format!("bad letter in {factor:?}"))))
                .collect::<Result<Vec<u8>>>()?;
            let w = Word::new(letters).map_err(|e| Error::Malformed(e.to_string()))?;
            m = m.mul(&Monomial::power(w, exp)?);
        } else {
            let c: BigInt = factor.parse().map_err(|_| Error::Malformed(format!("bad factor {factor:?}")))?;
            coeff *= c;
        }
    }
    Ok((m, coeff))
}

fn check_word(s: usize, w: &Word) -> Result<()> {
    if w.max_letter() as usize > s {
        return Err(Error::UnknownGenerator(format!("X{w} with s={s}")));
    }
    Ok(())
}

/// Integer combination of `k`-fold tensors of monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, BigInt>,
}

/// Two-fold tensors, the target of the coproduct.
pub type TensorPolynomial = Tensor;

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, legs: Vec<Monomial>, c: BigInt) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(legs.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&legs);
        }
    }

    /// Leg-wise product.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let legs = a.iter().zip(b).map(|(x, y)| x.mul(y)).collect();
                out.add_term(legs, ca * cb);
            }
        }
        out
    }

    fn unit(arity: usize) -> Tensor {
        let mut t = Tensor::zero(arity);
        t.add_term(vec![Monomial::one(); arity], BigInt::one());
        t
    }

    /// Apply `op` to leg `leg`, spreading its output over new legs.
    fn map_leg(&self, leg: usize, op: impl Fn(&Monomial) -> Tensor) -> Tensor {
        let mut cache: HashMap<&Monomial, Tensor> = HashMap::new();
        let mut out: Option<Tensor> = None;
        for (legs, c) in &self.terms {
            let img = cache.entry(&legs[leg]).or_insert_with(|| op(&legs[leg]));
            let arity = self.arity - 1 + img.arity;
            let acc = out.get_or_insert_with(|| Tensor::zero(arity));
            for (new, ci) in &img.terms {
                let mut joined = Vec::with_capacity(arity);
                joined.extend_from_slice(&legs[..leg]);
                joined.extend(new.iter().cloned());
                joined.extend_from_slice(&legs[leg + 1..]);
                acc.add_term(joined, c * ci);
            }
        }
        out.unwrap_or_else(|| Tensor::zero(self.arity))
    }

    /// Multiply all legs together.
    pub fn multiply_legs(&self, s: usize) -> GenPolynomial {
        let mut out = GenPolynomial::zero(s);
        for (legs, c) in &self.terms {
            let m = legs.iter().fold(Monomial::one(), |acc, l| acc.mul(l));
            out.add_term(m, c.clone());
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (legs, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            for (j, l) in legs.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ⊗ ")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn word_coproduct(w: &Word) -> Result<Tensor> {
    let mut t = Tensor::zero(2);
    for term in nc_table(w.len())? {
        t.add_term(
            vec![Monomial::from_blocks(w, &term.pi), Monomial::from_blocks(w, &term.kreweras)],
            BigInt::one(),
        );
    }
    Ok(t)
}

/// `ΔX_w = Σ_{π ∈ NC(|w|)} X_{w,π} ⊗ X_{w,K(π)}`.
pub fn coproduct(s: usize, w: &Word) -> Result<Tensor> {
    check_word(s, w)?;
    word_coproduct(w)
}

/// Coproduct extended multiplicatively; `X_i^{-1}` is group-like.
pub fn coproduct_monomial(m: &Monomial) -> Result<Tensor> {
    let mut out = Tensor::unit(2);
    for (w, e) in m.factors() {
        let base = if *e < 0 {
            let inv = Monomial::power(w.clone(), -1)?;
            let mut t = Tensor::zero(2);
            t.add_term(vec![inv.clone(), inv], BigInt::one());
            t
        } else {
            word_coproduct(w)?
        };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
    }
    Ok(out)
}

pub fn coproduct_poly(p: &GenPolynomial) -> Result<Tensor> {
    let mut out = Tensor::zero(2);
    for (m, c) in p.terms() {
        for (legs, ct) in coproduct_monomial(m)?.terms {
            out.add_term(legs, c * ct);
        }
    }
    Ok(out)
}

/// `ε(X_i) = 1`, `ε(X_w) = 0` for `|w| ≥ 2`, extended multiplicatively and linearly.
pub fn counit(p: &GenPolynomial) -> BigInt {
    p.terms()
        .filter(|(m, _)| counit_monomial(m) == 1)
        .map(|(_, c)| c.clone())
        .sum()
}

pub fn counit_monomial(m: &Monomial) -> i32 {
    i32::from(m.factors().iter().all(|(w, _)| w.len() == 1))
}

type AntipodeCache = RwLock<HashMap<Word, BTreeMap<Monomial, BigInt>>>;

fn antipode_cache() -> &'static AntipodeCache {
    static CACHE: OnceLock<AntipodeCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn antipode_word(w: &Word) -> Result<GenPolynomial> {
    let s = w.max_letter() as usize;
    if let Some(terms) = antipode_cache().read().expect("antipode cache poisoned").get(w) {
        return Ok(GenPolynomial { s, terms: terms.clone() });
    }
    let value = if w.len() == 1 {
        GenPolynomial::from_monomial(s, Monomial::power(w.clone(), -1)?, BigInt::one())
    } else {
        // S(X_w) = −(X_{i1}⋯X_{in})^{-1} Σ_{π≠0_n} X_{w,π} S(X_{w,K(π)})
        let mut sum = GenPolynomial::zero(s);
        for term in nc_table(w.len())? {
            if term.pi_discrete {
                continue;
            }
            let mut right = GenPolynomial::one(s);
            for b in &term.kreweras {
                right = right.mul(&antipode_word(&w.restrict(b))?);
            }
            sum = sum.add(&right.mul_monomial(&Monomial::from_blocks(w, &term.pi), &BigInt::one()));
        }
        let mut prefactor = Monomial::one();
        for &l in w.letters() {
            prefactor = prefactor.mul(&Monomial::power(Word::letter(l), -1)?);
        }
        sum.mul_monomial(&prefactor, &-BigInt::one())
    };
    antipode_cache()
        .write()
        .expect("antipode cache poisoned")
        .insert(w.clone(), value.terms.clone());
    Ok(value)
}

/// The antipode on a generator; `S(X_i) = X_i^{-1}` and the recursion above for
/// longer words. Memoised across calls.
pub fn antipode(s: usize, w: &Word) -> Result<GenPolynomial> {
    check_word(s, w)?;
    let mut p = antipode_word(w)?;
    p.s = s;
    Ok(p)
}

pub fn antipode_monomial(s: usize, m: &Monomial) -> Result<GenPolynomial> {
    let mut out = GenPolynomial::one(s);
    for (w, e) in m.factors() {
        check_word(s, w)?;
        let base = if *e < 0 { GenPolynomial::generator(s, w)? } else { antipode(s, w)? };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
    }
    Ok(out)
}

pub fn antipode_poly(p: &GenPolynomial) -> Result<GenPolynomial> {
    let mut out = GenPolynomial::zero(p.s);
    for (m, c) in p.terms() {
        out = out.add(&antipode_monomial(p.s, m)?.mul_monomial(&Monomial::one(), c));
    }
    Ok(out)
}

/// Outcome of [`hopf_axiom_check`].
#[derive(Debug, Clone, Default)]
pub struct HopfReport {
    pub generators_checked: usize,
    pub identities_checked: usize,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn counit_tensor(m: &Monomial) -> Tensor {
    let mut t = Tensor::zero(0);
    if counit_monomial(m) == 1 {
        t.add_term(Vec::new(), BigInt::one());
    }
    t
}

fn singleton(p: &GenPolynomial) -> Tensor {
    let mut t = Tensor::zero(1);
    for (m, c) in p.terms() {
        t.add_term(vec![m.clone()], c.clone());
    }
    t
}

/// Coassociativity, both counit laws and both antipode laws on every generator
/// `X_w` with `|w| ≤ order`, as identities of canonical polynomials.
pub fn hopf_axiom_check(order: usize, s: usize) -> Result<HopfReport> {
    let mut report = HopfReport::default();
    for w in all_words(s, order) {
        report.generators_checked += 1;
        let x = GenPolynomial::generator(s, &w)?;
        let delta = coproduct(s, &w)?;
        let split = |m: &Monomial| coproduct_monomial(m).expect("coproduct of a monomial");

        let left = delta.map_leg(0, split);
        let right = delta.map_leg(1, split);
        if left != right {
            report.failures.push(format!("coassociativity fails at X{w}"));
        }

        let xt = singleton(&x);
        if delta.map_leg(0, counit_tensor) != xt {
            report.failures.push(format!("left counit law fails at X{w}"));
        }
        if delta.map_leg(1, counit_tensor) != xt {
            report.failures.push(format!("right counit law fails at X{w}"));
        }

        let eps = GenPolynomial::constant(s, counit(&x));
        let anti = |m: &Monomial| singleton(&antipode_monomial(s, m).expect("antipode of a monomial"));
        if delta.map_leg(0, anti).multiply_legs(s) != eps {
            report.failures.push(format!("left antipode law fails at X{w}"));
        }
        if delta.map_leg(1, anti).multiply_legs(s) != eps {
            report.failures.push(format!("right antipode law fails at X{w}"));
        }
        report.identities_checked += 5;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxconv::{box_inverse, GroupElement};
    use crate::ring::{Rational, RingDescriptor};

    fn w(l: &[u8]) -> Word {
        Word::new(l.to_vec()).unwrap()
    }

    fn poly(t: &str) -> GenPolynomial {
        t.parse().unwrap()
    }

    #[test]
    fn coproducts() {
        assert_eq!(coproduct(1, &w(&[1])).unwrap().to_string(), "X(1) ⊗ X(1)");
        assert_eq!(
            coproduct(1, &w(&[1, 1])).unwrap().to_string(),
            "X(1)^2 ⊗ X(1,1) + X(1,1) ⊗ X(1)^2"
        );
        assert_eq!(
            coproduct(2, &w(&[1, 2])).unwrap().to_string(),
            "X(1)*X(2) ⊗ X(1,2) + X(1,2) ⊗ X(1)*X(2)"
        );
        assert_eq!(coproduct(1, &w(&[1, 2])).unwrap_err().category(), "unknown-generator");
        let d = coproduct(1, &w(&[1, 1, 1, 1])).unwrap();
        assert_eq!(d.num_terms(), 6);
        assert_eq!(d.terms().map(|(_, c)| c.clone()).sum::<BigInt>(), BigInt::from(14));
    }

    #[test]
    fn counits() {
        assert_eq!(counit(&poly("X(1)")), BigInt::from(1));
        assert_eq!(counit(&poly("X(1,1)")), BigInt::from(0));
        assert_eq!(counit(&poly("X(1)^-1*X(1,1) + 3*X(1)")), BigInt::from(3));
    }

    #[test]
    fn antipodes() {
        assert_eq!(antipode(1, &w(&[1])).unwrap(), poly("X(1)^-1"));
        assert_eq!(antipode(1, &w(&[1, 1])).unwrap(), poly("-X(1,1)*X(1)^-4"));
        assert_eq!(antipode(1, &w(&[1, 1])).unwrap().to_string(), "-X(1)^-4*X(1,1)");
    }

    #[test]
    fn antipode_evaluates_to_the_inverse() {
        let q = RingDescriptor::Rational;
        let f = TruncSeries::from_fn(2, 4, q, |l| {
            let v: i64 = l.iter().enumerate().map(|(i, &x)| (i as i64 + 2) * x as i64).sum();
            Rational::from_ratio(&q, v - 3, l.len() as i64 + 1).unwrap()
        })
        .unwrap();
        let inv = box_inverse(&GroupElement::new(f.clone()).unwrap()).unwrap();
        for word in all_words(2, 4) {
            assert_eq!(antipode(2, &word).unwrap().evaluate(&f).unwrap(), *inv.series().coeff(&word).unwrap());
        }
        let alpha = Rational::from_ratio(&q, 7, 3).unwrap();
        let g = TruncSeries::from_terms(1, 2, q, [(w(&[1]), Rational::from_i64(&q, 1)), (w(&[1, 1]), alpha.clone())]).unwrap();
        assert_eq!(antipode(1, &w(&[1, 1])).unwrap().evaluate(&g).unwrap(), -alpha);
    }

    #[test]
    fn axioms_hold() {
        let r = hopf_axiom_check(5, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.generators_checked, 5);
        let r = hopf_axiom_check(3, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.generators_checked, 14);
    }

    #[test]
    fn text_round_trip() {
        for t in ["0", "1", "-3", "X(1)^-1*X(1,1) - 2*X(2)", "-X(1)^-4*X(1,1) + 5*X(1,2)^3"] {
            let p = poly(t);
            assert_eq!(poly(&p.to_string()), p);
        }
        assert_eq!(poly("X(1) - X(1)"), GenPolynomial::zero(1));
        assert_eq!(poly("2*X(1)*3"), poly("6*X(1)"));
        assert!("X(1,1)^-1".parse::<GenPolynomial>().is_err());
        assert!("X(1".parse::<GenPolynomial>().is_err());
        assert!("X(1) +".parse::<GenPolynomial>().is_err());
        assert_eq!(poly("X(1)*X(2)").s(), 2);
    }

    #[test]
    fn restriction_to_plus() {
        assert_eq!(poly("-X(1)^-4*X(1,1) + X(1)").restrict_plus(), poly("-X(1,1) + 1"));
        let m = poly("X(1)^-1*X(1,1)");
        let mut f = TruncSeries::<Rational>::zero(1, 2, RingDescriptor::Rational).unwrap();
        assert_eq!(m.evaluate(&f).unwrap_err().category(), "not-invertible");
        f.set(&w(&[1]), Rational::from_i64(&RingDescriptor::Rational, 2)).unwrap();
        assert!(m.evaluate(&f).is_ok());
    }
}
