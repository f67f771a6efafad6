//! Non-commutative probability spaces as finite moment tables.
//!
//! A [`JointDistribution`] is the unital functional `φ` on words over a finite set
//! of named generators, known up to a truncation order. Moments and free
//! cumulants are related through the non-crossing expansion
//! `φ(w) = Σ_{π ∈ NC(|w|)} Π_{V ∈ π} κ(w|V)`, evaluated here by splitting on the
//! block that contains the first position: the gaps that block leaves behind are
//! independent contiguous subwords, so their contributions are plain moments.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::ring::{Coeff, RingDescriptor};
use crate::series::{sub_index, word_digits, word_index, TruncSeries, Word};

/// Name given to the generator of the one-dimensional laws.
pub const LAW_GENERATOR: &str = "x";

/// Moment table `w ↦ φ(w)` over named generators; `φ(∅) = 1` implicitly.
#[derive(Clone, PartialEq, Eq)]
pub struct JointDistribution<R> {
    generators: Vec<String>,
    table: TruncSeries<R>,
}

/// Free cumulants `κ_{|w|}(a_{i_1}, …, a_{i_n})` per word, same shape as the moments.
#[derive(Clone, PartialEq, Eq)]
pub struct CumulantTable<R> {
    generators: Vec<String>,
    table: TruncSeries<R>,
}

fn check_names(generators: &[String], s: usize) -> Result<()> {
    if generators.len() != s {
        return Err(Error::ShapeMismatch(format!(
            "{} generator names for an alphabet of {s}",
            generators.len()
        )));
    }
    let mut seen = HashSet::new();
    for g in generators {
        if !seen.insert(g) {
            return Err(Error::NameClash(g.clone()));
        }
    }
    Ok(())
}

fn index_of(generators: &[String], name: &str) -> Result<u8> {
    generators
        .iter()
        .position(|g| g == name)
        .map(|i| i as u8 + 1)
        .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
}

macro_rules! table_accessors {
    ($ty:ident) => {
        impl<R: Coeff> $ty<R> {
            pub fn new(generators: Vec<String>, table: TruncSeries<R>) -> Result<Self> {
                check_names(&generators, table.s())?;
                Ok($ty { generators, table })
            }

            pub fn generators(&self) -> &[String] {
                &self.generators
            }

            pub fn order(&self) -> usize {
                self.table.order()
            }

            pub fn ring(&self) -> RingDescriptor {
                self.table.ring()
            }

            /// The underlying word table, letters indexing `generators` from 1.
            pub fn table(&self) -> &TruncSeries<R> {
                &self.table
            }

            pub fn generator_index(&self, name: &str) -> Result<u8> {
                index_of(&self.generators, name)
            }

            /// Value at the word spelled by generator names.
            pub fn value_by_names(&self, names: &[&str]) -> Result<R> {
                let letters = names
                    .iter()
                    .map(|n| self.generator_index(n))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.table.coeff(&Word::new(letters)?)?.clone())
            }

            /// The series in `tuple.len()` variables whose `z_w` coefficient is the
            /// table value at `tuple_w`.
            pub fn series_for(&self, tuple: &[&str]) -> Result<TruncSeries<R>> {
                let idx = tuple
                    .iter()
                    .map(|n| self.generator_index(n))
                    .collect::<Result<Vec<u8>>>()?;
                let s = self.table.s();
                TruncSeries::from_fn(tuple.len(), self.order(), self.ring(), |letters| {
                    let mapped: Vec<u8> = letters.iter().map(|&l| idx[l as usize - 1]).collect();
                    self.table.level(letters.len())[word_index(&mapped, s)].clone()
                })
            }
        }

        impl<R: Coeff> std::fmt::Debug for $ty<R> {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}({:?}; {:?})", stringify!($ty), self.generators, self.table)
            }
        }
    };
}

table_accessors!(JointDistribution);
table_accessors!(CumulantTable);

impl<R: Coeff> JointDistribution<R> {
    /// `φ(w)` for a word of generator indices.
    pub fn phi(&self, w: &Word) -> Result<&R> {
        self.table.coeff(w)
    }
}

/// Cumulant of a block, given the word digits and the block positions.
type BlockCumulant<'a, R> = dyn Fn(&[u8], &[usize]) -> Option<R> + 'a;

/// Sum over blocks `V ∋ 1` of `κ(w|V) · Π φ(gap)`, optionally skipping `V = [n]`.
fn first_block_sum<R: Coeff>(
    digits: &[u8],
    s: usize,
    ring: &RingDescriptor,
    kappa: &BlockCumulant<'_, R>,
    moments: &TruncSeries<R>,
    skip_full: bool,
) -> R {
    let n = digits.len();
    let mut acc = R::zero(ring);
    let full = (1u32 << (n - 1)) - 1;
    let mut block = Vec::with_capacity(n);
    for mask in 0..=full {
        if skip_full && mask == full {
            continue;
        }
        block.clear();
        block.push(0);
        block.extend((1..n).filter(|i| mask >> (i - 1) & 1 == 1));
        let Some(mut term) = kappa(digits, &block) else {
            continue;
        };
        let mut bounds: Vec<(usize, usize)> = block.windows(2).map(|p| (p[0] + 1, p[1])).collect();
        bounds.push((block[block.len() - 1] + 1, n));
        for (lo, hi) in bounds {
            if lo == hi {
                continue;
            }
            let gap = &digits[lo..hi];
            let m = &moments.level(gap.len())[word_index(gap, s)];
            if m.is_zero() {
                term = R::zero(ring);
                break;
            }
            term *= m;
        }
        if !term.is_zero() {
            acc += &term;
        }
    }
    acc
}

/// Moments from a cumulant function given on (word digits, block positions).
fn expand_moments<R: Coeff>(
    s: usize,
    order: usize,
    ring: RingDescriptor,
    kappa: &BlockCumulant<'_, R>,
) -> Result<TruncSeries<R>> {
    let mut out = TruncSeries::zero(s, order, ring)?;
    for len in 1..=order {
        for idx in 0..s.pow(len as u32) {
            let digits = word_digits(len, idx, s);
            let v = first_block_sum(&digits, s, &ring, kappa, &out, false);
            out.level_mut(len)[idx] = v;
        }
    }
    Ok(out)
}

fn lookup<'a, R: Coeff>(table: &'a TruncSeries<R>) -> impl Fn(&[u8], &[usize]) -> Option<R> + 'a {
    move |digits, block| {
        let c = &table.level(block.len())[sub_index(digits, block, table.s())];
        (!c.is_zero()).then(|| c.clone())
    }
}

/// Free cumulants of a distribution, by `κ(w) = φ(w) − Σ_{π ≠ 1_n} Π κ(w|V)`.
pub fn cumulants_of<R: Coeff>(d: &JointDistribution<R>) -> Result<CumulantTable<R>> {
    let (s, order, ring) = (d.table.s(), d.order(), d.ring());
    let mut kappa = TruncSeries::zero(s, order, ring)?;
    for len in 1..=order {
        for idx in 0..s.pow(len as u32) {
            let digits = word_digits(len, idx, s);
            let lower = first_block_sum(&digits, s, &ring, &lookup(&kappa), &d.table, true);
            let v = d.table.level(len)[idx].clone() - &lower;
            kappa.level_mut(len)[idx] = v;
        }
    }
    CumulantTable::new(d.generators.clone(), kappa)
}

/// Moments of the distribution with the given cumulants.
pub fn moments_of<R: Coeff>(c: &CumulantTable<R>) -> Result<JointDistribution<R>> {
    let t = &c.table;
    let table = expand_moments(t.s(), t.order(), t.ring(), &lookup(t))?;
    JointDistribution::new(c.generators.clone(), table)
}

/// ℛ-transform of a tuple of generators.
pub fn r_transform<R: Coeff>(d: &JointDistribution<R>, tuple: &[&str]) -> Result<TruncSeries<R>> {
    cumulants_of(d)?.series_for(tuple)
}

/// ℳ-transform (moment series) of a tuple of generators.
pub fn m_transform<R: Coeff>(d: &JointDistribution<R>, tuple: &[&str]) -> Result<TruncSeries<R>> {
    d.series_for(tuple)
}

fn group_labels(generators: &[String], groups: &[Vec<String>]) -> Result<Vec<Option<usize>>> {
    let mut labels = vec![None; generators.len()];
    for (k, g) in groups.iter().enumerate() {
        for name in g {
            let i = index_of(generators, name)? as usize - 1;
            if labels[i].is_some() {
                return Err(Error::Domain(format!("generator `{name}` is in two groups")));
            }
            labels[i] = Some(k);
        }
    }
    Ok(labels)
}

fn is_mixed(letters: &[u8], labels: &[Option<usize>]) -> bool {
    let mut seen = None;
    for &l in letters {
        if let Some(g) = labels[l as usize - 1] {
            match seen {
                None => seen = Some(g),
                Some(h) if h != g => return true,
                _ => {}
            }
        }
    }
    false
}

/// Combinatorial freeness: every cumulant whose word mixes two groups vanishes
/// (up to the truncation order).
pub fn is_combinatorially_free<R: Coeff>(
    d: &JointDistribution<R>,
    groups: &[Vec<String>],
) -> Result<bool> {
    let labels = group_labels(&d.generators, groups)?;
    let kappa = cumulants_of(d)?;
    let free = kappa
        .table
        .terms()
        .all(|(w, _)| !is_mixed(w.letters(), &labels));
    Ok(free)
}

/// Alternating products of centred monomials `Π (u_j − φ(u_j))` whose value is
/// not zero, for total length up to `max_len`. Each `u_j` is a maximal run of
/// letters from a single group.
pub fn centered_alternating_defects<R: Coeff>(
    d: &JointDistribution<R>,
    groups: &[Vec<String>],
    max_len: usize,
) -> Result<Vec<(Word, R)>> {
    if max_len > d.order() {
        return Err(Error::InsufficientOrder(format!(
            "alternating words of length {max_len} need order {max_len}, have {}",
            d.order()
        )));
    }
    let labels = group_labels(&d.generators, groups)?;
    let s = d.table.s();
    let ring = d.ring();
    let one = R::one(&ring);
    let phi = |letters: &[u8]| -> R {
        if letters.is_empty() {
            one.clone()
        } else {
            d.table.level(letters.len())[word_index(letters, s)].clone()
        }
    };
    let mut defects = Vec::new();
    for len in 1..=max_len {
        'words: for idx in 0..s.pow(len as u32) {
            let digits = word_digits(len, idx, s);
            let mut runs: Vec<&[u8]> = Vec::new();
            let mut start = 0;
            for i in 0..len {
                if labels[digits[i] as usize - 1].is_none() {
                    continue 'words;
                }
                if i + 1 == len || labels[digits[i + 1] as usize - 1] != labels[digits[i] as usize - 1] {
                    runs.push(&digits[start..=i]);
                    start = i + 1;
                }
            }
            let centres: Vec<R> = runs.iter().map(|u| phi(u)).collect();
            let m = runs.len();
            let mut total = R::zero(&ring);
            // expand Π (u_j − φ(u_j)) over the subset of kept runs
            for keep in 0u32..(1 << m) {
                let mut word = Vec::with_capacity(len);
                let mut coeff = one.clone();
                for j in 0..m {
                    if keep >> j & 1 == 1 {
                        word.extend_from_slice(runs[j]);
                    } else {
                        coeff *= &(-centres[j].clone());
                    }
                }
                total += &(coeff * phi(&word));
            }
            if !total.is_zero() {
                defects.push((Word::from_raw(digits), total));
            }
        }
    }
    Ok(defects)
}

/// Classical freeness of the subalgebras generated by `groups`, tested on all
/// alternating centred products of total length up to `max_len`.
pub fn is_classically_free<R: Coeff>(
    d: &JointDistribution<R>,
    groups: &[Vec<String>],
    max_len: usize,
) -> Result<bool> {
    Ok(centered_alternating_defects(d, groups, max_len)?.is_empty())
}

/// Joint distribution in which the generators of `d1` and of `d2` are free:
/// cumulants are the originals on one-coloured words and zero on mixed words.
pub fn free_product<R: Coeff>(
    d1: &JointDistribution<R>,
    d2: &JointDistribution<R>,
) -> Result<JointDistribution<R>> {
    d1.ring().ensure_same(&d2.ring())?;
    if d1.order() != d2.order() {
        return Err(Error::ShapeMismatch(format!(
            "orders {} and {} differ",
            d1.order(),
            d2.order()
        )));
    }
    let mut names = d1.generators.clone();
    for g in &d2.generators {
        if names.contains(g) {
            return Err(Error::NameClash(g.clone()));
        }
        names.push(g.clone());
    }
    let k1 = cumulants_of(d1)?;
    let k2 = cumulants_of(d2)?;
    let (s1, s2) = (d1.table.s(), d2.table.s());
    let s = s1 + s2;
    if s > u8::MAX as usize {
        return Err(Error::Domain("too many generators".into()));
    }
    let kappa = |digits: &[u8], block: &[usize]| -> Option<R> {
        let first = digits[block[0]] as usize;
        let left = first <= s1;
        let mut letters = Vec::with_capacity(block.len());
        for &p in block {
            let l = digits[p] as usize;
            if (l <= s1) != left {
                return None;
            }
            letters.push(if left { l } else { l - s1 } as u8);
        }
        let (t, alphabet) = if left { (&k1.table, s1) } else { (&k2.table, s2) };
        let c = &t.level(letters.len())[word_index(&letters, alphabet)];
        (!c.is_zero()).then(|| c.clone())
    };
    let table = expand_moments(s, d1.order(), d1.ring(), &kappa)?;
    JointDistribution::new(names, table)
}

fn tuple_indices<R: Coeff>(
    d: &JointDistribution<R>,
    a: &[&str],
    b: &[&str],
) -> Result<(Vec<u8>, Vec<u8>)> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::ShapeMismatch(format!(
            "tuples of sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    let ia = a.iter().map(|n| d.generator_index(n)).collect::<Result<_>>()?;
    let ib = b.iter().map(|n| d.generator_index(n)).collect::<Result<_>>()?;
    Ok((ia, ib))
}

/// Distribution of the component-wise sum `(a_1+b_1, …, a_s+b_s)` up to `order`.
pub fn tuple_add<R: Coeff>(
    d: &JointDistribution<R>,
    a: &[&str],
    b: &[&str],
    order: usize,
) -> Result<JointDistribution<R>> {
    if order == 0 || order > d.order() {
        return Err(Error::InsufficientOrder(format!(
            "sum tuple to order {order} from a table of order {}",
            d.order()
        )));
    }
    let (ia, ib) = tuple_indices(d, a, b)?;
    let src = d.table.s();
    let table = TruncSeries::from_fn(a.len(), order, d.ring(), |letters| {
        let n = letters.len();
        let mut acc = R::zero(&d.ring());
        let mut word = vec![0u8; n];
        for pick in 0u32..(1 << n) {
            for (j, &l) in letters.iter().enumerate() {
                let side = if pick >> j & 1 == 1 { &ib } else { &ia };
                word[j] = side[l as usize - 1];
            }
            acc += &d.table.level(n)[word_index(&word, src)];
        }
        acc
    })?;
    let names = a.iter().zip(b).map(|(x, y)| format!("{x}+{y}")).collect();
    JointDistribution::new(names, table)
}

/// Distribution of the component-wise product `(a_1 b_1, …, a_s b_s)` up to
/// `order`; the source table must reach twice that order.
pub fn tuple_mul<R: Coeff>(
    d: &JointDistribution<R>,
    a: &[&str],
    b: &[&str],
    order: usize,
) -> Result<JointDistribution<R>> {
    if order == 0 || 2 * order > d.order() {
        return Err(Error::InsufficientOrder(format!(
            "product tuple to order {order} needs a table of order {}, have {}",
            2 * order,
            d.order()
        )));
    }
    let (ia, ib) = tuple_indices(d, a, b)?;
    let src = d.table.s();
    let table = TruncSeries::from_fn(a.len(), order, d.ring(), |letters| {
        let word: Vec<u8> = letters
            .iter()
            .flat_map(|&l| [ia[l as usize - 1], ib[l as usize - 1]])
            .collect();
        d.table.level(word.len())[word_index(&word, src)].clone()
    })?;
    let names = a.iter().zip(b).map(|(x, y)| format!("{x}*{y}")).collect();
    JointDistribution::new(names, table)
}

/// Single-generator law from its cumulant sequence `κ_1, …, κ_order`.
pub fn law_from_cumulants<R: Coeff>(ring: RingDescriptor, cumulants: &[R]) -> Result<JointDistribution<R>> {
    if cumulants.is_empty() {
        return Err(Error::Domain("a law needs at least one cumulant".into()));
    }
    let kappa = TruncSeries::from_fn(1, cumulants.len(), ring, |l| cumulants[l.len() - 1].clone())?;
    moments_of(&CumulantTable::new(vec![LAW_GENERATOR.to_string()], kappa)?)
}

/// Single-generator law from its moments `m_1, …, m_order`.
pub fn law_from_moments<R: Coeff>(ring: RingDescriptor, moments: &[R]) -> Result<JointDistribution<R>> {
    if moments.is_empty() {
        return Err(Error::Domain("a law needs at least one moment".into()));
    }
    let table = TruncSeries::from_fn(1, moments.len(), ring, |l| moments[l.len() - 1].clone())?;
    JointDistribution::new(vec![LAW_GENERATOR.to_string()], table)
}

/// Point mass `δ_a`: `κ_1 = a`, all higher cumulants zero.
pub fn law_dirac<R: Coeff>(a: &R, order: usize) -> Result<JointDistribution<R>> {
    let ring = a.ring();
    let mut k = vec![R::zero(&ring); order];
    if let Some(first) = k.first_mut() {
        *first = a.clone();
    }
    law_from_cumulants(ring, &k)
}

/// Semicircle `γ_{a,r}` parameterised by `r²`: `κ_1 = a`, `κ_2 = r²/4`.
pub fn law_semicircle<R: Coeff>(a: &R, r2: &R, order: usize) -> Result<JointDistribution<R>> {
    let ring = a.ring();
    ring.ensure_same(&r2.ring())?;
    let quarter = R::from_i64(&ring, 4).inverse()?;
    let mut k = vec![R::zero(&ring); order];
    if order >= 1 {
        k[0] = a.clone();
    }
    if order >= 2 {
        k[1] = r2.clone() * &quarter;
    }
    law_from_cumulants(ring, &k)
}

/// Free compound Poisson law with rate `λ` and jump size `α`: `κ_n = λαⁿ`.
pub fn law_free_poisson<R: Coeff>(lambda: &R, alpha: &R, order: usize) -> Result<JointDistribution<R>> {
    let ring = lambda.ring();
    ring.ensure_same(&alpha.ring())?;
    let mut k = Vec::with_capacity(order);
    let mut p = lambda.clone();
    for _ in 0..order {
        p *= alpha;
        k.push(p.clone());
    }
    law_from_cumulants(ring, &k)
}

fn single_generator<R: Coeff>(d: &JointDistribution<R>) -> Result<()> {
    if d.generators.len() == 1 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "expected a one-generator law, got {} generators",
            d.generators.len()
        )))
    }
}

/// Cumulant sequence `κ_1..κ_n` of a one-generator law.
pub fn law_cumulants<R: Coeff>(d: &JointDistribution<R>) -> Result<Vec<R>> {
    single_generator(d)?;
    Ok(cumulants_of(d)?.table.level_values())
}

/// Moment sequence `m_1..m_n` of a one-generator law.
pub fn law_moments<R: Coeff>(d: &JointDistribution<R>) -> Result<Vec<R>> {
    single_generator(d)?;
    Ok(d.table.level_values())
}

/// `⊡` on one-generator laws: cumulant sequences multiplied pointwise.
pub fn hadamard_law_mul<R: Coeff>(
    d1: &JointDistribution<R>,
    d2: &JointDistribution<R>,
) -> Result<JointDistribution<R>> {
    d1.table.same_shape(&d2.table)?;
    let k1 = law_cumulants(d1)?;
    let k2 = law_cumulants(d2)?;
    let prod: Vec<R> = k1.into_iter().zip(&k2).map(|(a, b)| a * b).collect();
    law_from_cumulants(d1.ring(), &prod)
}

impl<R: Coeff> TruncSeries<R> {
    /// For `s = 1`: the coefficients `c_1..c_order` of `z, z², …`.
    pub fn level_values(&self) -> Vec<R> {
        debug_assert_eq!(self.s(), 1);
        (1..=self.order()).map(|k| self.level(k)[0].clone()).collect()
    }
}

/// Shorthand for building a distribution from named generators and a closure on
/// generator-index words.
pub fn distribution_from_fn<R: Coeff>(
    generators: &[&str],
    order: usize,
    ring: RingDescriptor,
    f: impl FnMut(&[u8]) -> R,
) -> Result<JointDistribution<R>> {
    let table = TruncSeries::from_fn(generators.len(), order, ring, f)?;
    JointDistribution::new(generators.iter().map(|s| s.to_string()).collect(), table)
}

/// Rename generators, e.g. before forming a free product of two copies.
pub fn rename<R: Coeff>(d: &JointDistribution<R>, names: &[&str]) -> Result<JointDistribution<R>> {
    JointDistribution::new(names.iter().map(|s| s.to_string()).collect(), d.table.clone())
}

/// Generator name → group index lookup; handy for callers that build groups from
/// prefixes.
pub fn groups_by_prefix(generators: &[String], prefixes: &[&str]) -> Vec<Vec<String>> {
    let mut map: HashMap<usize, Vec<String>> = HashMap::new();
    for g in generators {
        if let Some(k) = prefixes.iter().position(|p| g.starts_with(p)) {
            map.entry(k).or_default().push(g.clone());
        }
    }
    (0..prefixes.len()).map(|k| map.remove(&k).unwrap_or_default()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    const Q: RingDescriptor = RingDescriptor::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(&Q, n)
    }

    fn qr(n: i64, d: i64) -> Rational {
        Rational::from_ratio(&Q, n, d).unwrap()
    }

    #[test]
    fn law_cumulants_match() {
        let a = qr(-2, 3);
        let d = law_dirac(&a, 5).unwrap();
        let m = law_moments(&d).unwrap();
        for (k, v) in m.iter().enumerate() {
            assert_eq!(v, &a.pow(k as i32 + 1));
        }
        assert_eq!(law_cumulants(&d).unwrap(), vec![a.clone(), q(0), q(0), q(0), q(0)]);

        let g = law_semicircle(&q(1), &q(9), 4).unwrap();
        let m = law_moments(&g).unwrap();
        assert_eq!(m[0], q(1));
        assert_eq!(m[1], q(1) + qr(9, 4));
        assert_eq!(law_cumulants(&g).unwrap(), vec![q(1), qr(9, 4), q(0), q(0)]);

        let p = law_free_poisson(&q(2), &qr(1, 2), 4).unwrap();
        assert_eq!(
            law_cumulants(&p).unwrap(),
            vec![q(1), qr(1, 2), qr(1, 4), qr(1, 8)]
        );
        let unit = law_free_poisson(&q(1), &q(1), 3).unwrap();
        assert_eq!(law_cumulants(&unit).unwrap(), vec![q(1); 3]);
    }

    #[test]
    fn r_and_m_transforms() {
        let g = law_semicircle(&q(0), &q(4), 4).unwrap();
        let r = r_transform(&g, &["x"]).unwrap();
        assert_eq!(r.level_values(), vec![q(0), q(1), q(0), q(0)]);
        let dirac = law_dirac(&q(3), 3).unwrap();
        assert_eq!(m_transform(&dirac, &["x"]).unwrap().level_values(), vec![q(3), q(9), q(27)]);
        assert_eq!(r_transform(&g, &["y"]).unwrap_err().category(), "unknown-generator");
    }

    #[test]
    fn free_product_moments() {
        let d1 = rename(&law_from_moments(Q, &[q(2), q(7), q(1), q(3)]).unwrap(), &["a"]).unwrap();
        let d2 = rename(&law_from_moments(Q, &[q(-1), q(5), q(2), q(4)]).unwrap(), &["b"]).unwrap();
        let d = free_product(&d1, &d2).unwrap();
        let (a1, a2, b1, b2) = (q(2), q(7), q(-1), q(5));
        assert_eq!(d.value_by_names(&["a", "b"]).unwrap(), a1.clone() * &b1);
        let abab = a2.clone() * &b1 * &b1 + a1.clone() * &a1 * &b2 - a1.clone() * &a1 * &b1 * &b1;
        assert_eq!(d.value_by_names(&["a", "b", "a", "b"]).unwrap(), abab);
        // marginals preserved
        assert_eq!(d.value_by_names(&["b", "b", "b"]).unwrap(), q(2));
        let groups = vec![vec!["a".to_string()], vec!["b".to_string()]];
        assert!(is_combinatorially_free(&d, &groups).unwrap());
        assert!(is_classically_free(&d, &groups, 4).unwrap());
        assert!(is_combinatorially_free(&d, &[vec!["a".into(), "b".into()]]).unwrap());
        assert_eq!(free_product(&d1, &d1).unwrap_err().category(), "name-clash");
    }

    #[test]
    fn duplicated_generator_is_not_free() {
        let g = law_semicircle(&q(0), &q(4), 4).unwrap();
        let m = law_moments(&g).unwrap();
        let d = distribution_from_fn(&["a", "b"], 4, Q, |l| m[l.len() - 1].clone()).unwrap();
        let groups = vec![vec!["a".to_string()], vec!["b".to_string()]];
        assert!(!is_combinatorially_free(&d, &groups).unwrap());
        assert_eq!(cumulants_of(&d).unwrap().value_by_names(&["a", "b"]).unwrap(), q(1));
    }

    #[test]
    fn tuple_operations_on_diracs() {
        let da = rename(&law_dirac(&q(3), 6).unwrap(), &["a"]).unwrap();
        let db = rename(&law_dirac(&qr(1, 2), 6).unwrap(), &["b"]).unwrap();
        let d = free_product(&da, &db).unwrap();
        let sum = tuple_add(&d, &["a"], &["b"], 4).unwrap();
        assert_eq!(law_moments(&sum).unwrap(), (1..=4).map(|k| qr(7, 2).pow(k)).collect::<Vec<_>>());
        let prod = tuple_mul(&d, &["a"], &["b"], 3).unwrap();
        assert_eq!(law_moments(&prod).unwrap(), (1..=3).map(|k| qr(3, 2).pow(k)).collect::<Vec<_>>());
        assert_eq!(
            tuple_mul(&d, &["a"], &["b"], 4).unwrap_err().category(),
            "insufficient-order"
        );
    }

    #[test]
    fn hadamard_of_laws() {
        let p = hadamard_law_mul(&law_dirac(&q(-2), 4).unwrap(), &law_dirac(&q(5), 4).unwrap()).unwrap();
        assert_eq!(p, law_dirac(&q(-10), 4).unwrap());
        let d = law_from_moments(Q, &[q(1), q(3), q(-1), q(2)]).unwrap();
        let unit = law_free_poisson(&q(1), &q(1), 4).unwrap();
        assert_eq!(hadamard_law_mul(&d, &unit).unwrap(), d);
    }
}
