//! Truncated non-commutative power series without constant term.
//!
//! A [`TruncSeries`] over `s` variables known up to word length `order` stores one
//! dense level per word length; level `k` holds `s^k` coefficients indexed by the
//! base-`s` value of the word (first letter most significant), so iteration order
//! within a level is lexicographic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ncpart::{restrict_word, NcPartition};
use crate::ring::{Coeff, RingDescriptor};

/// Refuse series with more than this many stored coefficients.
pub const MAX_COEFFS: usize = 1 << 24;

/// A nonempty word over the alphabet `{1..s}`.
///
/// Ordered canonically: by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Domain("empty word".into()));
        }
        if letters.contains(&0) {
            return Err(Error::Domain("letters start at 1".into()));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// The one-letter word `(i)`.
    pub fn letter(i: u8) -> Self {
        assert!(i >= 1);
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Subword at the given zero-based positions.
    pub fn restrict(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&p| self.0[p]).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Dense index of a word within its length level.
pub(crate) fn word_index(letters: &[u8], s: usize) -> usize {
    letters
        .iter()
        .fold(0usize, |acc, &l| acc * s + (l as usize - 1))
}

/// Letters of the word with the given dense index.
pub(crate) fn word_digits(len: usize, mut idx: usize, s: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for slot in out.iter_mut().rev() {
        *slot = (idx % s) as u8 + 1;
        idx /= s;
    }
    out
}

/// Index of the subword at `positions` of the word with `digits`.
pub(crate) fn sub_index(digits: &[u8], positions: &[usize], s: usize) -> usize {
    positions
        .iter()
        .fold(0usize, |acc, &p| acc * s + (digits[p] as usize - 1))
}

/// All words of length `1..=order` over `{1..s}`, in canonical order.
pub fn all_words(s: usize, order: usize) -> impl Iterator<Item = Word> {
    (1..=order).flat_map(move |len| {
        (0..s.pow(len as u32)).map(move |idx| Word(word_digits(len, idx, s)))
    })
}

/// A truncated series `Σ_{1≤|w|≤order} α_w z_w` over a fixed ring.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<R> {
    s: usize,
    order: usize,
    ring: RingDescriptor,
    levels: Vec<Vec<R>>,
}

impl<R: Coeff> TruncSeries<R> {
    /// The zero series `0_{𝔐^s(R)}`.
    pub fn zero(s: usize, order: usize, ring: RingDescriptor) -> Result<Self> {
        if s == 0 || s > u8::MAX as usize {
            return Err(Error::Domain(format!("number of variables {s} not in 1..=255")));
        }
        if order == 0 {
            return Err(Error::Domain("truncation order must be positive".into()));
        }
        if !R::supports(&ring) {
            return Err(Error::RingMismatch(format!(
                "coefficient type cannot represent ring {ring}"
            )));
        }
        let mut total = 0usize;
        for len in 1..=order {
            let n = s
                .checked_pow(len as u32)
                .filter(|n| total + n <= MAX_COEFFS)
                .ok_or_else(|| Error::Domain(format!("s={s}, order={order} is too large")))?;
            total += n;
        }
        let zero = R::zero(&ring);
        let levels = (1..=order)
            .map(|len| vec![zero.clone(); s.pow(len as u32)])
            .collect();
        Ok(TruncSeries { s, order, ring, levels })
    }

    /// Build from `(word, value)` pairs; absent words are zero.
    pub fn from_terms<I>(s: usize, order: usize, ring: RingDescriptor, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, R)>,
    {
        let mut out = Self::zero(s, order, ring)?;
        for (w, v) in terms {
            out.set(&w, v)?;
        }
        Ok(out)
    }

    /// Every coefficient from a function of the word.
    pub fn from_fn(
        s: usize,
        order: usize,
        ring: RingDescriptor,
        mut f: impl FnMut(&[u8]) -> R,
    ) -> Result<Self> {
        let mut out = Self::zero(s, order, ring)?;
        for len in 1..=order {
            for idx in 0..out.levels[len - 1].len() {
                out.levels[len - 1][idx] = f(&word_digits(len, idx, s));
            }
        }
        Ok(out)
    }

    /// The ⊠-unit `z_1 + ⋯ + z_s`.
    pub fn unit(s: usize, order: usize, ring: RingDescriptor) -> Result<Self> {
        let mut out = Self::zero(s, order, ring)?;
        for c in out.levels[0].iter_mut() {
            *c = R::one(&ring);
        }
        Ok(out)
    }

    /// The Hadamard unit: every coefficient is 1.
    pub fn all_ones(s: usize, order: usize, ring: RingDescriptor) -> Result<Self> {
        Self::from_fn(s, order, ring, |_| R::one(&ring))
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub(crate) fn level(&self, len: usize) -> &[R] {
        &self.levels[len - 1]
    }

    pub(crate) fn level_mut(&mut self, len: usize) -> &mut [R] {
        &mut self.levels[len - 1]
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() > self.order {
            return Err(Error::OutOfOrder { len: w.len(), order: self.order });
        }
        if w.max_letter() as usize > self.s {
            return Err(Error::Domain(format!("word {w} uses a letter beyond s={}", self.s)));
        }
        Ok(())
    }

    /// The coordinate function `X_w`; asking beyond the truncation order is an error.
    pub fn coeff(&self, w: &Word) -> Result<&R> {
        self.check_word(w)?;
        Ok(&self.levels[w.len() - 1][word_index(w.letters(), self.s)])
    }

    pub fn set(&mut self, w: &Word, value: R) -> Result<()> {
        self.check_word(w)?;
        self.ring.ensure_same(&value.ring())?;
        let s = self.s;
        self.levels[w.len() - 1][word_index(w.letters(), s)] = value;
        Ok(())
    }

    /// `X_{w,π}(f)`: the product over blocks `V` of `π` of `X_{w|V}(f)`.
    pub fn coeff_block_product(&self, w: &Word, p: &NcPartition) -> Result<R> {
        let parts = restrict_word(w, p)?;
        let mut acc = R::one(&self.ring);
        for sub in &parts {
            acc *= self.coeff(sub)?;
        }
        Ok(acc)
    }

    /// Nonzero coefficients in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, &R)> + '_ {
        self.levels.iter().enumerate().flat_map(move |(k, lvl)| {
            lvl.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(idx, v)| (Word(word_digits(k + 1, idx, self.s)), v))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().flatten().all(Coeff::is_zero)
    }

    pub(crate) fn same_shape(&self, other: &Self) -> Result<()> {
        self.ring.ensure_same(&other.ring)?;
        if self.s != other.s || self.order != other.order {
            return Err(Error::ShapeMismatch(format!(
                "(s={}, order={}) vs (s={}, order={})",
                self.s, self.order, other.s, other.order
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        self.same_shape(other)?;
        let levels = self
            .levels
            .iter()
            .zip(&other.levels)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Ok(TruncSeries { levels, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> Self {
        TruncSeries { s: self.s, order: self.order, ring: self.ring, levels: Vec::new() }
    }

    fn map(&self, f: impl Fn(&R) -> R) -> Self {
        let levels = self
            .levels
            .iter()
            .map(|lvl| lvl.iter().map(&f).collect())
            .collect();
        TruncSeries { levels, ..self.clone_shape() }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    /// Word-wise (Hadamard) product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() * b)
    }

    pub fn scalar_mul(&self, c: &R) -> Result<Self> {
        self.ring.ensure_same(&c.ring())?;
        Ok(self.map(|a| c.clone() * a))
    }

    /// Forget every coefficient of length above `m`.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.order {
            return Err(Error::InsufficientOrder(format!(
                "cannot truncate order {} to {m}",
                self.order
            )));
        }
        Ok(TruncSeries {
            levels: self.levels[..m].to_vec(),
            order: m,
            ..self.clone_shape()
        })
    }

    /// The same coefficients read at a higher order, new levels zero.
    pub fn extend_to(&self, m: usize) -> Result<Self> {
        let mut out = Self::zero(self.s, m.max(self.order), self.ring)?;
        out.levels[..self.order].clone_from_slice(&self.levels);
        Ok(out)
    }

    /// Membership in `𝔊^s`: every degree-one coefficient is a unit.
    pub fn is_in_group(&self) -> bool {
        self.levels[0].iter().all(Coeff::is_unit)
    }

    /// Membership in `𝔊^s_+`: every degree-one coefficient equals 1.
    pub fn is_in_group_plus(&self) -> bool {
        self.levels[0].iter().all(Coeff::is_one)
    }

    /// True when only degree-one coefficients may be nonzero.
    pub fn is_linear(&self) -> bool {
        self.levels[1..].iter().flatten().all(Coeff::is_zero)
    }

    /// The degree-one part, extended by zeros.
    pub fn linear_part(&self) -> Self {
        let mut out = self.map(|a| R::zero(&a.ring()));
        out.levels[0] = self.levels[0].clone();
        out
    }
}

impl<R: Coeff> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(s={}, order={}, ring={}; {self})", self.s, self.order, self.ring)
    }
}

impl<R: Coeff> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, v) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{v}*z{w}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Free-function forms of the linear structure.
pub fn series_add<R: Coeff>(f: &TruncSeries<R>, g: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.add(g)
}

pub fn hadamard_1d<R: Coeff>(f: &TruncSeries<R>, g: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.hadamard(g)
}

pub fn scalar_mul<R: Coeff>(c: &R, f: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.scalar_mul(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    const Q: RingDescriptor = RingDescriptor::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(&Q, n)
    }

    fn w(l: &[u8]) -> Word {
        Word::new(l.to_vec()).unwrap()
    }

    fn series(s: usize, order: usize, terms: &[(&[u8], i64)]) -> TruncSeries<Rational> {
        TruncSeries::from_terms(s, order, Q, terms.iter().map(|(l, v)| (w(l), q(*v)))).unwrap()
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let mut v = vec![w(&[2]), w(&[1, 1]), w(&[1]), w(&[1, 2]), w(&[2, 1])];
        v.sort();
        assert_eq!(v, vec![w(&[1]), w(&[2]), w(&[1, 1]), w(&[1, 2]), w(&[2, 1])]);
        assert!(Word::new(vec![]).is_err());
        assert!(Word::new(vec![0]).is_err());
    }

    #[test]
    fn indexing_round_trip() {
        for len in 1..4 {
            for idx in 0..27 {
                let d = word_digits(len, idx % 3usize.pow(len as u32), 3);
                assert_eq!(word_index(&d, 3), idx % 3usize.pow(len as u32));
            }
        }
    }

    #[test]
    fn linear_structure() {
        let f = series(2, 2, &[(&[1], 1), (&[1, 2], 3)]);
        let zero = TruncSeries::zero(2, 2, Q).unwrap();
        assert_eq!(f.add(&zero).unwrap(), f);
        let z1 = series(2, 2, &[(&[1], 1)]);
        assert_eq!(z1.add(&z1).unwrap(), series(2, 2, &[(&[1], 2)]));
        let a = series(2, 2, &[(&[1], 1), (&[2], 1)]);
        assert_eq!(a.add(&z1.neg()).unwrap(), series(2, 2, &[(&[2], 1)]));
        assert_eq!(f.scalar_mul(&q(2)).unwrap(), series(2, 2, &[(&[1], 2), (&[1, 2], 6)]));
        assert_eq!(f.scalar_mul(&q(1)).unwrap(), f);
        assert!(f.scalar_mul(&q(0)).unwrap().is_zero());
        assert_eq!(f.add(&series(1, 2, &[])).unwrap_err().category(), "shape-mismatch");
    }

    #[test]
    fn hadamard_examples() {
        let f = series(1, 2, &[(&[1], 1), (&[1, 1], 2)]);
        let g = series(1, 2, &[(&[1], 3), (&[1, 1], 5)]);
        assert_eq!(f.hadamard(&g).unwrap(), series(1, 2, &[(&[1], 3), (&[1, 1], 10)]));
        let ones = TruncSeries::all_ones(1, 2, Q).unwrap();
        assert_eq!(f.hadamard(&ones).unwrap(), f);
        assert!(f.hadamard(&TruncSeries::zero(1, 2, Q).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn coefficient_access() {
        let f = series(1, 2, &[(&[1], 1), (&[1, 1], 5)]);
        assert_eq!(f.coeff(&w(&[1])).unwrap(), &q(1));
        assert_eq!(f.coeff(&w(&[1, 1])).unwrap(), &q(5));
        assert_eq!(f.coeff(&w(&[1, 1, 1])).unwrap_err().category(), "out-of-order");
        let g = series(2, 1, &[(&[1], 1)]);
        assert_eq!(g.coeff(&w(&[2])).unwrap(), &q(0));
        assert!(g.coeff(&w(&[3])).is_err());
    }

    #[test]
    fn block_products() {
        let f = series(1, 2, &[(&[1], 1), (&[1, 1], 2)]);
        let ww = w(&[1, 1]);
        assert_eq!(f.coeff_block_product(&ww, &NcPartition::discrete(2)).unwrap(), q(1));
        assert_eq!(f.coeff_block_product(&ww, &NcPartition::full(2)).unwrap(), q(2));
        let g = series(1, 2, &[(&[1, 1], 2)]);
        assert_eq!(g.coeff_block_product(&ww, &NcPartition::discrete(2)).unwrap(), q(0));
    }

    #[test]
    fn membership() {
        let f = series(2, 2, &[(&[1], 2), (&[2], -1), (&[2, 2], 7)]);
        assert!(f.is_in_group());
        assert!(!f.is_in_group_plus());
        assert!(series(2, 2, &[(&[1], 1), (&[2], 1), (&[1, 2], 3)]).is_in_group_plus());
        assert!(!series(2, 2, &[(&[1], 1)]).is_in_group());
        assert_eq!(f.linear_part(), series(2, 2, &[(&[1], 2), (&[2], -1)]));
    }
}
