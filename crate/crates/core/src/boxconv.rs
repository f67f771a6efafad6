//! Boxed convolution `⊠`, the Zeta/Moeb pair, the group `𝔊^s` and the free
//! convolutions `⊞_V`, `⊠_V` on moment series.
//!
//! For every word `w`,
//! `X_w(f ⊠ g) = Σ_{π ∈ NC(|w|)} X_{w,π}(f) · X_{w,K(π)}(g)`,
//! where `X_{w,π}` multiplies the coefficients of the block restrictions of `w`.
//! The `NC(n)` sum for a word is always taken in the same order, so results are
//! reproducible term for term.

use crate::error::{Error, Result};
use crate::ncpart::nc_table;
use crate::ring::{Coeff, RingDescriptor};
use crate::series::{sub_index, word_digits, TruncSeries};

/// A series in `𝔊^s`: all degree-one coefficients are units.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement<R>(TruncSeries<R>);

impl<R: Coeff> std::fmt::Debug for GroupElement<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupElement({:?})", self.0)
    }
}

impl<R: Coeff> GroupElement<R> {
    pub fn new(f: TruncSeries<R>) -> Result<Self> {
        if f.is_in_group() {
            Ok(GroupElement(f))
        } else {
            Err(Error::NotInGroup(
                "a degree-one coefficient is not invertible".into(),
            ))
        }
    }

    pub fn series(&self) -> &TruncSeries<R> {
        &self.0
    }

    pub fn into_series(self) -> TruncSeries<R> {
        self.0
    }

    /// Membership in the normal subgroup `𝔊^s_+`.
    pub fn is_plus(&self) -> bool {
        self.0.is_in_group_plus()
    }

    /// Group law; the product of group elements stays in the group.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(GroupElement(box_conv(&self.0, &other.0)?))
    }
}

/// Product of `f`'s coefficients over the blocks of a partition of the word
/// with `digits`; `None` when some factor vanishes.
#[inline]
pub(crate) fn block_product<R: Coeff>(
    f: &TruncSeries<R>,
    digits: &[u8],
    blocks: &[Vec<usize>],
) -> Option<R> {
    let s = f.s();
    let mut iter = blocks.iter();
    let first = iter.next()?;
    let c = &f.level(first.len())[sub_index(digits, first, s)];
    if c.is_zero() {
        return None;
    }
    let mut acc = c.clone();
    for b in iter {
        let c = &f.level(b.len())[sub_index(digits, b, s)];
        if c.is_zero() {
            return None;
        }
        acc *= c;
    }
    Some(acc)
}

/// The boxed convolution `f ⊠ g`.
pub fn box_conv<R: Coeff>(f: &TruncSeries<R>, g: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    f.same_shape(g)?;
    let (s, ring) = (f.s(), f.ring());
    let mut out = TruncSeries::zero(s, f.order(), ring)?;
    for len in 1..=f.order() {
        let table = nc_table(len)?;
        let level = out.level_mut(len);
        for (idx, slot) in level.iter_mut().enumerate() {
            let digits = word_digits(len, idx, s);
            let mut acc = R::zero(&ring);
            for term in table {
                let Some(a) = block_product(f, &digits, &term.pi) else {
                    continue;
                };
                if let Some(b) = block_product(g, &digits, &term.kreweras) {
                    acc += &(a * b);
                }
            }
            *slot = acc;
        }
    }
    Ok(out)
}

/// `Zeta_s`: every coefficient equal to 1.
pub fn zeta_series<R: Coeff>(s: usize, order: usize, ring: RingDescriptor) -> Result<TruncSeries<R>> {
    TruncSeries::all_ones(s, order, ring)
}

/// `Moeb_s`, the ⊠-inverse of `Zeta_s`.
pub fn moeb_series<R: Coeff>(s: usize, order: usize, ring: RingDescriptor) -> Result<TruncSeries<R>> {
    let zeta = GroupElement::new(zeta_series(s, order, ring)?)?;
    Ok(box_inverse(&zeta)?.into_series())
}

/// The ⊠-unit `z_1 + ⋯ + z_s`.
pub fn unit_series<R: Coeff>(s: usize, order: usize, ring: RingDescriptor) -> Result<TruncSeries<R>> {
    TruncSeries::unit(s, order, ring)
}

/// Two-sided ⊠-inverse, solved degree by degree.
///
/// In `(f ⊠ g)_w` only `π = 0_n` touches `g_w` (through `K(0_n) = 1_n`), with
/// factor `f_{i_1}⋯f_{i_n}`; every other term involves `g` on shorter words.
pub fn box_inverse<R: Coeff>(f: &GroupElement<R>) -> Result<GroupElement<R>> {
    let f = &f.0;
    let (s, ring) = (f.s(), f.ring());
    let mut g = TruncSeries::zero(s, f.order(), ring)?;
    let inv1: Vec<R> = f
        .level(1)
        .iter()
        .map(Coeff::inverse)
        .collect::<Result<_>>()?;
    g.level_mut(1).clone_from_slice(&inv1);
    for len in 2..=f.order() {
        let table = nc_table(len)?;
        for idx in 0..s.pow(len as u32) {
            let digits = word_digits(len, idx, s);
            let mut acc = R::zero(&ring);
            for term in table.iter().filter(|t| !t.pi_discrete) {
                let Some(a) = block_product(f, &digits, &term.pi) else {
                    continue;
                };
                if let Some(b) = block_product(&g, &digits, &term.kreweras) {
                    acc += &(a * b);
                }
            }
            let mut lead_inv = R::one(&ring);
            for &l in &digits {
                lead_inv *= &inv1[l as usize - 1];
            }
            g.level_mut(len)[idx] = -(lead_inv * &acc);
        }
    }
    Ok(GroupElement(g))
}

/// Split `f = t ⊠ u` with `t` in the torus (degree one only) and `u ∈ 𝔊^s_+`.
pub fn semidirect_decompose<R: Coeff>(
    f: &GroupElement<R>,
) -> Result<(GroupElement<R>, GroupElement<R>)> {
    let t = GroupElement(f.0.linear_part());
    let u = box_inverse(&t)?.mul(f)?;
    debug_assert!(u.is_plus());
    Ok((t, u))
}

/// `⊞_V = (•₁ ⊠ Moeb + •₂ ⊠ Moeb) ⊠ Zeta`: add cumulants, return to moments.
pub fn free_add<R: Coeff>(mf: &TruncSeries<R>, mg: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    mf.same_shape(mg)?;
    let moeb = moeb_series(mf.s(), mf.order(), mf.ring())?;
    let zeta = zeta_series(mf.s(), mf.order(), mf.ring())?;
    let cumulants = box_conv(mf, &moeb)?.add(&box_conv(mg, &moeb)?)?;
    box_conv(&cumulants, &zeta)
}

/// `⊠_V = •₁ ⊠ Moeb ⊠ •₂`.
pub fn free_mul<R: Coeff>(mf: &TruncSeries<R>, mg: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    mf.same_shape(mg)?;
    let moeb = moeb_series(mf.s(), mf.order(), mf.ring())?;
    box_conv(&box_conv(mf, &moeb)?, mg)
}

/// `ℳ = ℛ ⊠ Zeta`.
pub fn moments_from_cumulants<R: Coeff>(r: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    box_conv(r, &zeta_series(r.s(), r.order(), r.ring())?)
}

/// `ℛ = ℳ ⊠ Moeb`.
pub fn cumulants_from_moments<R: Coeff>(m: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    box_conv(m, &moeb_series(m.s(), m.order(), m.ring())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ModP, Rational};
    use crate::series::Word;

    const Q: RingDescriptor = RingDescriptor::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(&Q, n)
    }

    fn qr(n: i64, d: i64) -> Rational {
        Rational::from_ratio(&Q, n, d).unwrap()
    }

    fn w(l: &[u8]) -> Word {
        Word::new(l.to_vec()).unwrap()
    }

    fn one_dim(coeffs: &[Rational]) -> TruncSeries<Rational> {
        TruncSeries::from_terms(
            1,
            coeffs.len(),
            Q,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (w(&vec![1; k + 1]), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let f = TruncSeries::from_terms(
            2,
            3,
            Q,
            [(w(&[1]), q(2)), (w(&[2, 1]), q(-3)), (w(&[1, 2, 2]), qr(1, 2))],
        )
        .unwrap();
        let unit = unit_series(2, 3, Q).unwrap();
        assert_eq!(box_conv(&f, &unit).unwrap(), f);
        assert_eq!(box_conv(&unit, &f).unwrap(), f);
    }

    #[test]
    fn degree_two_formula() {
        // (αz+βz²) ⊠ (γz+δz²) = αγ z + (α²δ+βγ²) z²
        let (a, b, c, d) = (q(2), q(3), q(5), q(7));
        let f = one_dim(&[a.clone(), b.clone()]);
        let g = one_dim(&[c.clone(), d.clone()]);
        let expected = one_dim(&[a.clone() * &c, a.clone() * &a * &d + b * &c * &c]);
        assert_eq!(box_conv(&f, &g).unwrap(), expected);
    }

    #[test]
    fn non_distributive_witness() {
        let f = one_dim(&[q(1), q(1)]);
        let lhs = box_conv(&f, &one_dim(&[q(2), q(0)])).unwrap();
        assert_eq!(lhs, one_dim(&[q(2), q(4)]));
        let z = one_dim(&[q(1), q(0)]);
        let rhs = box_conv(&f, &z).unwrap().add(&box_conv(&f, &z).unwrap()).unwrap();
        assert_eq!(rhs, one_dim(&[q(2), q(2)]));
    }

    #[test]
    fn zeta_and_moeb() {
        let zeta: TruncSeries<Rational> = zeta_series(1, 3, Q).unwrap();
        assert_eq!(zeta, one_dim(&[q(1), q(1), q(1)]));
        let z2: TruncSeries<Rational> = zeta_series(2, 2, Q).unwrap();
        assert_eq!(z2.terms().count(), 6);
        let moeb: TruncSeries<Rational> = moeb_series(1, 5, Q).unwrap();
        assert_eq!(moeb, one_dim(&[q(1), q(-1), q(2), q(-5), q(14)]));
        let m2: TruncSeries<Rational> = moeb_series(2, 2, Q).unwrap();
        for (word, v) in m2.terms() {
            assert_eq!(v, &if word.len() == 1 { q(1) } else { q(-1) });
        }
        let zeta5 = zeta_series(1, 5, Q).unwrap();
        assert_eq!(box_conv(&moeb, &zeta5).unwrap(), unit_series(1, 5, Q).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let unit = GroupElement::new(unit_series::<Rational>(2, 4, Q).unwrap()).unwrap();
        assert_eq!(box_inverse(&unit).unwrap(), unit);
        let alpha = qr(-3, 5);
        let f = GroupElement::new(one_dim(&[q(1), alpha.clone()])).unwrap();
        assert_eq!(box_inverse(&f).unwrap().into_series(), one_dim(&[q(1), -alpha]));
        let f = GroupElement::new(one_dim(&[q(2)])).unwrap();
        assert_eq!(box_inverse(&f).unwrap().into_series(), one_dim(&[qr(1, 2)]));
        assert_eq!(
            GroupElement::new(TruncSeries::<Rational>::zero(1, 2, Q).unwrap())
                .unwrap_err()
                .category(),
            "not-in-group"
        );
    }

    #[test]
    fn decomposition_example() {
        let f = GroupElement::new(one_dim(&[q(2), q(3)])).unwrap();
        let (t, u) = semidirect_decompose(&f).unwrap();
        assert_eq!(t.series(), &one_dim(&[q(2), q(0)]));
        assert_eq!(u.series(), &one_dim(&[q(1), qr(3, 4)]));
        assert_eq!(t.mul(&u).unwrap(), f);
        let plus = GroupElement::new(one_dim(&[q(1), q(5)])).unwrap();
        let (t, u) = semidirect_decompose(&plus).unwrap();
        assert_eq!(t.series(), &unit_series(1, 2, Q).unwrap());
        assert_eq!(u, plus);
    }

    #[test]
    fn dirac_moments_and_cumulants() {
        let a = qr(3, 2);
        let r = one_dim(&[a.clone(), q(0), q(0)]);
        let m = moments_from_cumulants(&r).unwrap();
        assert_eq!(m, one_dim(&[a.clone(), a.pow(2), a.pow(3)]));
        assert_eq!(cumulants_from_moments(&m).unwrap(), r);
        // κ₂ = 1 only: Catalan numbers on even moments
        let sc = one_dim(&[q(0), q(1), q(0), q(0), q(0), q(0)]);
        let m = moments_from_cumulants(&sc).unwrap();
        assert_eq!(m, one_dim(&[q(0), q(1), q(0), q(2), q(0), q(5)]));
        // free Poisson: κ_n = λαⁿ
        let (lam, al) = (q(2), qr(1, 3));
        let r = one_dim(&[lam.clone() * &al, lam.clone() * al.pow(2)]);
        let m = moments_from_cumulants(&r).unwrap();
        let m1 = lam.clone() * &al;
        assert_eq!(m.coeff(&w(&[1, 1])).unwrap(), &(lam * al.pow(2) + m1.pow(2)));
    }

    #[test]
    fn free_convolutions_of_diracs() {
        let dirac = |a: Rational| one_dim(&[a.clone(), a.pow(2), a.pow(3), a.pow(4), a.pow(5)]);
        let (a, b) = (q(3), qr(-1, 2));
        assert_eq!(free_add(&dirac(a.clone()), &dirac(b.clone())).unwrap(), dirac(a.clone() + &b));
        assert_eq!(free_mul(&dirac(a.clone()), &dirac(b.clone())).unwrap(), dirac(a.clone() * &b));
        let f = one_dim(&[q(1), q(4), q(-2), q(7), qr(1, 3)]);
        assert_eq!(free_add(&f, &dirac(q(0))).unwrap(), f);
        assert_eq!(free_mul(&f, &dirac(q(1))).unwrap(), f);
    }

    #[test]
    fn semicircle_free_sum() {
        // κ₂ = 1 twice gives κ₂ = 2: m₂ = 2, m₄ = 2·κ₂² = 8
        let sc = moments_from_cumulants(&one_dim(&[q(0), q(1), q(0), q(0)])).unwrap();
        let sum = free_add(&sc, &sc).unwrap();
        assert_eq!(sum, one_dim(&[q(0), q(2), q(0), q(8)]));
    }

    #[test]
    fn works_mod_p() {
        let r = RingDescriptor::mod_p(7).unwrap();
        let moeb: TruncSeries<ModP> = moeb_series(2, 3, r).unwrap();
        let zeta = zeta_series(2, 3, r).unwrap();
        assert_eq!(box_conv(&zeta, &moeb).unwrap(), unit_series(2, 3, r).unwrap());
    }
}
