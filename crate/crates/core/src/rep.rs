//! The faithful triangular representation of the truncated boxed-convolution group:
//! right translation on coordinate monomials of weight `1..n`.
//!
//! Column convention: the column of basis monomial `m` lists the coefficients of
//! `m(g ⊠ f)` as a combination of basis monomials evaluated at `g`. With this
//! convention `ρ(f ⊠ g) = ρ(f) ρ(g)`.
//!
//! The basis is sorted by weight, then by descending number of factors, then
//! canonically. Translation never lowers the number of factors and fixes the
//! weight, so every `ρ(f)` is upper-triangular and block-diagonal by weight.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::boxconv::{block_product, GroupElement};
use crate::error::{Error, Result};
use crate::hopf::Monomial;
use crate::ncpart::nc_table;
use crate::probmodel::{self, JointDistribution};
use crate::ring::{Coeff, RingDescriptor};
use crate::series::{all_words, TruncSeries, Word};

/// Monomials in the `X_w` (nonnegative exponents) of total weight `1..=n`, in
/// representation order.
pub fn rep_basis(s: usize, n: usize) -> Vec<Monomial> {
    let words: Vec<Word> = all_words(s, n).collect();
    let mut out = Vec::new();
    fn extend(words: &[Word], start: usize, budget: usize, current: &Monomial, out: &mut Vec<Monomial>) {
        for (i, w) in words.iter().enumerate().skip(start) {
            if w.len() > budget {
                break;
            }
            let next = current.mul(&Monomial::generator(w.clone()));
            out.push(next.clone());
            extend(words, i, budget - w.len(), &next, out);
        }
    }
    extend(&words, 0, n, &Monomial::one(), &mut out);
    out.sort_by(|a, b| {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| b.degree().cmp(&a.degree()))
            .then_with(|| a.cmp(b))
    });
    out
}

/// `N(n, s)`, the dimension of the representation at order `n`.
pub fn rep_dimension(s: usize, n: usize) -> usize {
    rep_basis(s, n).len()
}

/// A square matrix over the ring, indexed by a monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix<R> {
    ring: RingDescriptor,
    basis: Vec<Monomial>,
    /// start offset of each weight block, plus the total size
    blocks: Vec<usize>,
    rows: Vec<Vec<R>>,
}

fn weight_blocks(basis: &[Monomial]) -> Vec<usize> {
    let mut blocks = vec![0];
    for i in 1..basis.len() {
        if basis[i].weight() != basis[i - 1].weight() {
            blocks.push(i);
        }
    }
    blocks.push(basis.len());
    blocks
}

impl<R: Coeff> RepMatrix<R> {
    pub fn identity(ring: RingDescriptor, basis: Vec<Monomial>) -> Self {
        let n = basis.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { R::one(&ring) } else { R::zero(&ring) }).collect())
            .collect();
        let blocks = weight_blocks(&basis);
        RepMatrix { ring, basis, blocks, rows }
    }

    pub fn from_rows(ring: RingDescriptor, basis: Vec<Monomial>, rows: Vec<Vec<R>>) -> Result<Self> {
        let n = basis.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("matrix is not {n}×{n}")));
        }
        for v in rows.iter().flatten() {
            ring.ensure_same(&v.ring())?;
        }
        let blocks = weight_blocks(&basis);
        Ok(RepMatrix { ring, basis, blocks, rows })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    /// `f_w` read back from the matrix: the entry in row `X_{i_1}⋯X_{i_n}`,
    /// column `X_w`.
    pub fn coordinate(&self, w: &Word) -> Result<&R> {
        let col = self
            .index_of(&Monomial::generator(w.clone()))
            .ok_or_else(|| Error::OutOfOrder { len: w.len(), order: self.max_weight() })?;
        let mut row = Monomial::one();
        for &l in w.letters() {
            row = row.mul(&Monomial::generator(Word::letter(l)));
        }
        let row = self.index_of(&row).expect("basis closed under factors");
        Ok(&self.rows[row][col])
    }

    pub fn max_weight(&self) -> usize {
        self.basis.last().map_or(0, |m| m.weight() as usize)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        if self.basis != other.basis {
            return Err(Error::ShapeMismatch("matrices over different bases".into()));
        }
        let n = self.dim();
        let mut rows = vec![vec![R::zero(&self.ring); n]; n];
        let block_diag = self.is_block_diagonal() && other.is_block_diagonal();
        for b in 0..self.blocks.len() - 1 {
            let (lo, hi) = if block_diag { (self.blocks[b], self.blocks[b + 1]) } else { (0, n) };
            for i in lo..hi {
                for k in lo..hi {
                    let a = &self.rows[i][k];
                    if a.is_zero() {
                        continue;
                    }
                    for j in lo..hi {
                        let c = &other.rows[k][j];
                        if !c.is_zero() {
                            rows[i][j] += &(a.clone() * c);
                        }
                    }
                }
            }
            if !block_diag {
                break;
            }
        }
        Ok(RepMatrix { ring: self.ring, basis: self.basis.clone(), blocks: self.blocks.clone(), rows })
    }

    fn is_block_diagonal(&self) -> bool {
        let w: Vec<i64> = self.basis.iter().map(|m| m.weight()).collect();
        self.nonzero().all(|(i, j)| w[i] == w[j])
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(j, _)| (i, j)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.nonzero().all(|(i, j)| i <= j)
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzero().all(|(i, j)| i == j)
    }

    /// Upper-triangular with every diagonal entry a unit.
    pub fn is_borel(&self) -> bool {
        self.is_upper_triangular() && (0..self.dim()).all(|i| self.rows[i][i].is_unit())
    }

    /// Upper-triangular with every diagonal entry 1.
    pub fn is_unipotent(&self) -> bool {
        self.is_upper_triangular() && (0..self.dim()).all(|i| self.rows[i][i].is_one())
    }

    pub fn diagonal(&self) -> Vec<R> {
        (0..self.dim()).map(|i| self.rows[i][i].clone()).collect()
    }

    /// The block on basis monomials of weight `≤ m`.
    pub fn restrict(&self, m: usize) -> Self {
        let k = self.basis.iter().take_while(|b| b.weight() as usize <= m).count();
        let basis = self.basis[..k].to_vec();
        let rows = self.rows[..k].iter().map(|r| r[..k].to_vec()).collect();
        let blocks = weight_blocks(&basis);
        RepMatrix { ring: self.ring, basis, blocks, rows }
    }
}

impl<R: Coeff> fmt::Debug for RepMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basis: {:?}", self.basis)?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

type SparsePoly<R> = BTreeMap<Monomial, R>;

fn sparse_mul<R: Coeff>(a: &SparsePoly<R>, b: &SparsePoly<R>) -> SparsePoly<R> {
    let mut out: SparsePoly<R> = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let v = ca.clone() * cb;
            if v.is_zero() {
                continue;
            }
            let m = ma.mul(mb);
            match out.get_mut(&m) {
                Some(slot) => *slot += &v,
                None => {
                    out.insert(m, v);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The general S-transform `ρ_n(f)` of a group element, over the basis of
/// monomials of weight `1..=n`.
pub fn s_transform<R: Coeff>(f: &GroupElement<R>, n: usize) -> Result<RepMatrix<R>> {
    let f = f.series();
    if n == 0 || n > f.order() {
        return Err(Error::InsufficientOrder(format!(
            "representation of order {n} from a series of order {}",
            f.order()
        )));
    }
    let (s, ring) = (f.s(), f.ring());
    // X_w(g ⊠ f) = Σ_π X_{w,π}(g) · X_{w,K(π)}(f)
    let mut images: HashMap<Word, SparsePoly<R>> = HashMap::new();
    for w in all_words(s, n) {
        let mut e: SparsePoly<R> = BTreeMap::new();
        for term in nc_table(w.len())? {
            if let Some(c) = block_product(f, w.letters(), &term.kreweras) {
                let m = Monomial::from_blocks(&w, &term.pi);
                match e.get_mut(&m) {
                    Some(slot) => *slot += &c,
                    None => {
                        e.insert(m, c);
                    }
                }
            }
        }
        e.retain(|_, v| !v.is_zero());
        images.insert(w, e);
    }

    let basis = rep_basis(s, n);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut columns: HashMap<Monomial, SparsePoly<R>> = HashMap::new();
    columns.insert(Monomial::one(), BTreeMap::from([(Monomial::one(), R::one(&ring))]));
    let dim = basis.len();
    let mut rows = vec![vec![R::zero(&ring); dim]; dim];
    for (j, m) in basis.iter().enumerate() {
        // peel off the first factor; the rest has lower weight and is already known
        let (w, _) = &m.factors()[0];
        let rest = reduce_one(m, w);
        let col = sparse_mul(&columns[&rest], &images[w]);
        for (r, v) in &col {
            rows[index[r]][j] = v.clone();
        }
        columns.insert(m.clone(), col);
    }
    let blocks = weight_blocks(&basis);
    Ok(RepMatrix { ring, basis, blocks, rows })
}

/// `m / X_w` for a factor `X_w` of `m`.
fn reduce_one(m: &Monomial, w: &Word) -> Monomial {
    let mut out = Monomial::one();
    for (u, e) in m.factors() {
        let e = if u == w { e - 1 } else { *e };
        if e > 0 {
            out = out.mul(&Monomial::power(u.clone(), e).expect("positive power"));
        }
    }
    out
}

/// Outcome of [`verify_s_multiplicativity`].
#[derive(Debug, Clone)]
pub struct SMultiplicativityReport {
    pub s: usize,
    pub order: usize,
    pub dimension: usize,
    pub holds: bool,
}

/// `S_n(a ⋆ b) = S_n(a) · S_n(b)` for tuples `a`, `b` of equal size that are free
/// in `d`, with `S_n = ρ_n ∘ ℛ`.
pub fn verify_s_multiplicativity<R: Coeff>(
    d: &JointDistribution<R>,
    a: &[&str],
    b: &[&str],
    n: usize,
) -> Result<SMultiplicativityReport> {
    let groups = vec![
        a.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        b.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    ];
    if 2 * n > d.order() {
        return Err(Error::InsufficientOrder(format!(
            "order {n} needs a table of order {}, have {}",
            2 * n,
            d.order()
        )));
    }
    if !probmodel::is_combinatorially_free(d, &groups)? {
        return Err(Error::NotFree("the two tuples are not free".into()));
    }
    let r_of = |dist: &JointDistribution<R>, names: &[&str]| -> Result<GroupElement<R>> {
        GroupElement::new(probmodel::r_transform(dist, names)?.truncate(n)?)
    };
    let ra = r_of(d, a)?;
    let rb = r_of(d, b)?;
    let prod = probmodel::tuple_mul(d, a, b, n)?;
    let names: Vec<&str> = prod.generators().iter().map(String::as_str).collect();
    let rab = r_of(&prod, &names)?;
    let lhs = s_transform(&rab, n)?;
    let rhs = s_transform(&ra, n)?.mul(&s_transform(&rb, n)?)?;
    Ok(SMultiplicativityReport { s: a.len(), order: n, dimension: lhs.dim(), holds: lhs == rhs })
}

/// Convenience: `ρ_n` of a bare series, which must lie in the group.
pub fn s_transform_series<R: Coeff>(f: &TruncSeries<R>, n: usize) -> Result<RepMatrix<R>> {
    s_transform(&GroupElement::new(f.clone())?, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxconv::{box_conv, unit_series};
    use crate::ring::Rational;

    const Q: RingDescriptor = RingDescriptor::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(&Q, n)
    }

    fn w(l: &[u8]) -> Word {
        Word::new(l.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(rep_dimension(1, 2), 3);
        assert_eq!(rep_dimension(2, 4), 88);
        let b = rep_basis(2, 4);
        let counts: Vec<usize> = (1..=4).map(|k| b.iter().filter(|m| m.weight() == k).count()).collect();
        assert_eq!(counts, vec![2, 7, 20, 59]);
        assert_eq!(format!("{:?}", rep_basis(1, 2)), "[X(1), X(1)^2, X(1,1)]");
    }

    #[test]
    fn unit_goes_to_identity() {
        let u = GroupElement::new(unit_series::<Rational>(2, 3, Q).unwrap()).unwrap();
        let m = s_transform(&u, 3).unwrap();
        assert_eq!(m, RepMatrix::identity(Q, rep_basis(2, 3)));
    }

    #[test]
    fn small_examples() {
        let alpha = Rational::from_ratio(&Q, -5, 2).unwrap();
        let f = TruncSeries::from_terms(1, 2, Q, [(w(&[1]), q(1)), (w(&[1, 1]), alpha.clone())]).unwrap();
        let m = s_transform_series(&f, 2).unwrap();
        let expected = [vec![q(1), q(0), q(0)], vec![q(0), q(1), alpha.clone()], vec![q(0), q(0), q(1)]];
        assert_eq!(m.rows(), &expected[..]);
        assert!(m.is_unipotent());
        assert_eq!(*m.coordinate(&w(&[1, 1])).unwrap(), alpha);

        let c = q(3);
        let t = TruncSeries::from_terms(1, 2, Q, [(w(&[1]), c.clone())]).unwrap();
        let m = s_transform_series(&t, 2).unwrap();
        assert!(m.is_diagonal());
        assert_eq!(m.diagonal(), vec![q(3), q(9), q(9)]);
    }

    #[test]
    fn homomorphism_and_restriction() {
        let f = TruncSeries::from_fn(2, 3, Q, |l| q(l.iter().map(|&x| x as i64).sum::<i64>() - 1 + l.len() as i64)).unwrap();
        let g = TruncSeries::from_fn(2, 3, Q, |l| q(3 - l.len() as i64 * l[0] as i64)).unwrap();
        let fg = box_conv(&f, &g).unwrap();
        let (rf, rg) = (s_transform_series(&f, 3).unwrap(), s_transform_series(&g, 3).unwrap());
        assert_eq!(s_transform_series(&fg, 3).unwrap(), rf.mul(&rg).unwrap());
        assert!(rf.is_borel());
        assert_eq!(rf.restrict(2), s_transform_series(&f.truncate(2).unwrap(), 2).unwrap());
    }

    #[test]
    fn pipeline_on_free_diracs() {
        let (a, b) = (q(2), Rational::from_ratio(&Q, -1, 3).unwrap());
        let da = probmodel::law_dirac(&a, 6).unwrap();
        let db = probmodel::rename(&probmodel::law_dirac(&b, 6).unwrap(), &["y"]).unwrap();
        let d = probmodel::free_product(&da, &db).unwrap();
        let r = verify_s_multiplicativity(&d, &["x"], &["y"], 3).unwrap();
        assert!(r.holds);
        assert_eq!(r.dimension, 6);
        assert_eq!(verify_s_multiplicativity(&d, &["x"], &["y"], 4).unwrap_err().category(), "insufficient-order");
    }
}
