//! The one-dimensional bridge: the Voiculescu S-transform, `Λ(R) = 1 + zR[[z]]`
//! with its two products, the ghost map, and the `LOG`/`EXP` isomorphism between
//! mean-one laws under `⊠_V` and laws under `⊞_V`.
//!
//! Ghost sign: `ghost(f) = −f′/f`, so the `∗`-unit `1 − z` goes to the all-ones
//! series, the unit for the Hadamard product.
//!
//! Truncation: a law with moments `m_1..m_n` has an S-transform with `n`
//! coefficients `S_0..S_{n−1}` and a `LOG` known to order `n − 1`.

use crate::boxconv;
use crate::error::{Error, Result};
use crate::probmodel::{self, JointDistribution};
use crate::ring::{Coeff, RingDescriptor};
use crate::series::TruncSeries;

/// One-variable series with constant term, `coeffs[k]` at `z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries1d<R> {
    ring: RingDescriptor,
    coeffs: Vec<R>,
}

/// `1 + c_1 z + ⋯ + c_n z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaElement<R> {
    ring: RingDescriptor,
    coeffs: Vec<R>,
}

/// A one-dimensional law by its moments `m_1..m_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimLaw<R> {
    ring: RingDescriptor,
    moments: Vec<R>,
}

fn check_ring<R: Coeff>(ring: &RingDescriptor, values: &[R]) -> Result<()> {
    if !R::supports(ring) {
        return Err(Error::RingMismatch(format!("coefficient type cannot represent {ring}")));
    }
    for v in values {
        ring.ensure_same(&v.ring())?;
    }
    Ok(())
}

impl<R: Coeff> PowerSeries1d<R> {
    pub fn new(ring: RingDescriptor, coeffs: Vec<R>) -> Result<Self> {
        check_ring(&ring, &coeffs)?;
        if coeffs.is_empty() {
            return Err(Error::Domain("power series needs at least one coefficient".into()));
        }
        Ok(PowerSeries1d { ring, coeffs })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// Highest known power of `z`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        same_len(self.coeffs.len(), other.coeffs.len())?;
        self.ring.ensure_same(&other.ring)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() * b).collect();
        Ok(PowerSeries1d { ring: self.ring, coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_len(self.coeffs.len(), other.coeffs.len())?;
        self.ring.ensure_same(&other.ring)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b).collect();
        Ok(PowerSeries1d { ring: self.ring, coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_len(self.coeffs.len(), other.coeffs.len())?;
        self.ring.ensure_same(&other.ring)?;
        let coeffs = poly_mul(&self.ring, &self.coeffs, &other.coeffs, self.coeffs.len());
        Ok(PowerSeries1d { ring: self.ring, coeffs })
    }

    /// `1 + z + z² + ⋯`, the Hadamard unit.
    pub fn all_ones(ring: RingDescriptor, order: usize) -> Self {
        PowerSeries1d { ring, coeffs: vec![R::one(&ring); order + 1] }
    }
}

impl<R: Coeff> LambdaElement<R> {
    /// From the non-constant coefficients `c_1..c_n`.
    pub fn new(ring: RingDescriptor, coeffs: Vec<R>) -> Result<Self> {
        check_ring(&ring, &coeffs)?;
        Ok(LambdaElement { ring, coeffs })
    }

    /// From a full series whose constant term must be 1.
    pub fn from_series(f: &PowerSeries1d<R>) -> Result<Self> {
        if !f.coeffs[0].is_one() {
            return Err(Error::Domain("element of Λ must have constant term 1".into()));
        }
        Ok(LambdaElement { ring: f.ring, coeffs: f.coeffs[1..].to_vec() })
    }

    /// The series `1 + c_1 z + ⋯`.
    pub fn to_series(&self) -> PowerSeries1d<R> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::one(&self.ring));
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries1d { ring: self.ring, coeffs }
    }

    /// The constant series 1 (additive identity of Λ).
    pub fn one(ring: RingDescriptor, order: usize) -> Self {
        LambdaElement { ring, coeffs: vec![R::zero(&ring); order] }
    }

    /// `1 − a z` (for `a = 1`, the multiplicative identity of Λ).
    pub fn one_minus(a: &R, order: usize) -> Self {
        let ring = a.ring();
        let mut coeffs = vec![R::zero(&ring); order];
        if order > 0 {
            coeffs[0] = -a.clone();
        }
        LambdaElement { ring, coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// Series multiplication, the addition of Λ.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_len(self.coeffs.len(), other.coeffs.len())?;
        self.ring.ensure_same(&other.ring)?;
        let prod = self.to_series().mul(&other.to_series())?;
        LambdaElement::from_series(&prod)
    }
}

impl<R: Coeff> OneDimLaw<R> {
    pub fn new(ring: RingDescriptor, moments: Vec<R>) -> Result<Self> {
        check_ring(&ring, &moments)?;
        if moments.is_empty() {
            return Err(Error::Domain("a law needs at least one moment".into()));
        }
        Ok(OneDimLaw { ring, moments })
    }

    pub fn moments(&self) -> &[R] {
        &self.moments
    }

    pub fn order(&self) -> usize {
        self.moments.len()
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// In `Σ^×`: the mean is a unit.
    pub fn has_invertible_mean(&self) -> bool {
        self.moments[0].is_unit()
    }

    /// In `Σ^×_1`: the mean is 1.
    pub fn has_unit_mean(&self) -> bool {
        self.moments[0].is_one()
    }

    pub fn cumulants(&self) -> Result<Vec<R>> {
        probmodel::law_cumulants(&self.to_distribution()?)
    }

    pub fn from_cumulants(ring: RingDescriptor, cumulants: &[R]) -> Result<Self> {
        Self::from_distribution(&probmodel::law_from_cumulants(ring, cumulants)?)
    }

    /// Moment series `Σ m_k z^k` as a one-variable [`TruncSeries`].
    pub fn to_series(&self) -> Result<TruncSeries<R>> {
        TruncSeries::from_fn(1, self.order(), self.ring, |l| self.moments[l.len() - 1].clone())
    }

    pub fn from_series(m: &TruncSeries<R>) -> Result<Self> {
        if m.s() != 1 {
            return Err(Error::Domain(format!("expected one variable, got s={}", m.s())));
        }
        Ok(OneDimLaw { ring: m.ring(), moments: m.level_values() })
    }

    pub fn to_distribution(&self) -> Result<JointDistribution<R>> {
        probmodel::law_from_moments(self.ring, &self.moments)
    }

    pub fn from_distribution(d: &JointDistribution<R>) -> Result<Self> {
        Ok(OneDimLaw { ring: d.ring(), moments: probmodel::law_moments(d)? })
    }

    /// `δ_1`, the identity of `⊠_V` and the zero of the ring `(Σ^×_1, ⊠_V, ⊛)`.
    pub fn dirac_one(ring: RingDescriptor, order: usize) -> Self {
        OneDimLaw { ring, moments: vec![R::one(&ring); order] }
    }
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("truncation orders differ ({a} vs {b} coefficients)")))
    }
}

/// Truncated product keeping `len` coefficients.
fn poly_mul<R: Coeff>(ring: &RingDescriptor, a: &[R], b: &[R], len: usize) -> Vec<R> {
    let mut out = vec![R::zero(ring); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += &(x.clone() * y);
        }
    }
    out
}

/// Inverse of a series with unit constant term, `len` coefficients.
fn poly_inverse<R: Coeff>(ring: &RingDescriptor, a: &[R], len: usize) -> Result<Vec<R>> {
    let c0 = a[0].inverse()?;
    let mut out = vec![R::zero(ring); len];
    out[0] = c0.clone();
    for k in 1..len {
        let mut acc = R::zero(ring);
        for j in 1..=k.min(a.len() - 1) {
            acc += &(a[j].clone() * &out[k - j]);
        }
        out[k] = -(acc * &c0);
    }
    Ok(out)
}

/// `[z^1..z^n]` of `a(b(z))` where `a`, `b` are given by `[z^1..]` coefficients
/// (index 0 of each slice is the `z^1` coefficient).
fn compose<R: Coeff>(ring: &RingDescriptor, a: &[R], b: &[R], n: usize) -> Vec<R> {
    // dense with constant slot: power[k] = b^j coefficient at z^k
    let mut bz = vec![R::zero(ring); n + 1];
    for (k, c) in b.iter().enumerate().take(n) {
        bz[k + 1] = c.clone();
    }
    let mut power = bz.clone();
    let mut out = vec![R::zero(ring); n + 1];
    for (j, aj) in a.iter().enumerate().take(n) {
        if j > 0 {
            power = poly_mul(ring, &power, &bz, n + 1);
        }
        if aj.is_zero() {
            continue;
        }
        for k in 0..=n {
            out[k] += &(aj.clone() * &power[k]);
        }
    }
    out.remove(0);
    out
}

/// Compositional inverse: given `a_1..a_n` with `a_1` a unit, the `b_1..b_n`
/// with `a(b(z)) = z` modulo `z^{n+1}`, solved degree by degree.
fn compositional_inverse<R: Coeff>(ring: &RingDescriptor, a: &[R]) -> Result<Vec<R>> {
    let n = a.len();
    let a1_inv = a[0].inverse()?;
    let mut b = vec![R::zero(ring); n];
    b[0] = a1_inv.clone();
    for k in 1..n {
        // with b_k = 0 the degree-(k+1) coefficient of a(b) is off by a_1 b_k
        let c = compose(ring, a, &b[..k], k + 1);
        b[k] = -(c[k].clone() * &a1_inv);
    }
    Ok(b)
}

/// Voiculescu S-transform `S(z) = χ(z)(1+z)/z`, `χ` the compositional inverse of
/// `ψ(z) = Σ m_k z^k`; needs an invertible mean.
pub fn s_transform<R: Coeff>(law: &OneDimLaw<R>) -> Result<PowerSeries1d<R>> {
    if !law.has_invertible_mean() {
        return Err(Error::NotInGroup("S-transform needs an invertible mean".into()));
    }
    let ring = law.ring;
    let chi = compositional_inverse(&ring, &law.moments)?;
    let n = chi.len();
    let mut coeffs = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = chi[k].clone();
        if k > 0 {
            c += &chi[k - 1];
        }
        coeffs.push(c);
    }
    PowerSeries1d::new(ring, coeffs)
}

/// Inverse of [`s_transform`]: rebuild the moments from `S_0..S_{n−1}`.
pub fn s_transform_inverse<R: Coeff>(s: &PowerSeries1d<R>) -> Result<OneDimLaw<R>> {
    let ring = s.ring;
    if !s.coeffs[0].is_unit() {
        return Err(Error::NotInGroup("S-series needs an invertible constant term".into()));
    }
    // χ(z)/z = S(z)/(1+z)
    let mut chi = Vec::with_capacity(s.coeffs.len());
    let mut prev = R::zero(&ring);
    for c in &s.coeffs {
        prev = c.clone() - &prev;
        chi.push(prev.clone());
    }
    let psi = compositional_inverse(&ring, &chi)?;
    OneDimLaw::new(ring, psi)
}

/// `ghost(f) = −f′/f`, keeping `z^0..z^{n−1}` for `f` of order `n`.
pub fn ghost<R: Coeff>(f: &LambdaElement<R>) -> Result<PowerSeries1d<R>> {
    f.ring.ensure_q_algebra()?;
    let n = f.order();
    if n == 0 {
        return Err(Error::InsufficientOrder("ghost of an order-0 element".into()));
    }
    let ring = f.ring;
    let series = f.to_series();
    let deriv: Vec<R> = (0..n)
        .map(|k| R::from_i64(&ring, k as i64 + 1) * &series.coeffs[k + 1])
        .collect();
    let inv = poly_inverse(&ring, &series.coeffs, n)?;
    let coeffs = poly_mul(&ring, &deriv, &inv, n).into_iter().map(|c| -c).collect();
    PowerSeries1d::new(ring, coeffs)
}

/// Inverse of [`ghost`]: `f = exp(−∫h)`, from `f′ = −h f` degree by degree.
pub fn ghost_inverse<R: Coeff>(h: &PowerSeries1d<R>) -> Result<LambdaElement<R>> {
    h.ring.ensure_q_algebra()?;
    let ring = h.ring;
    let n = h.coeffs.len();
    let mut c = Vec::with_capacity(n + 1);
    c.push(R::one(&ring));
    for k in 1..=n {
        let mut acc = R::zero(&ring);
        for j in 0..k {
            acc += &(h.coeffs[j].clone() * &c[k - 1 - j]);
        }
        let inv_k = R::from_i64(&ring, k as i64).inverse()?;
        c.push(-(acc * &inv_k));
    }
    LambdaElement::new(ring, c.split_off(1))
}

/// The Witt product `∗`: the unique product that `ghost` carries to `⋆`.
pub fn witt_mul<R: Coeff>(f: &LambdaElement<R>, g: &LambdaElement<R>) -> Result<LambdaElement<R>> {
    f.ring.ensure_same(&g.ring)?;
    same_len(f.order(), g.order())?;
    ghost_inverse(&ghost(f)?.hadamard(&ghost(g)?)?)
}

fn require_unit_mean<R: Coeff>(law: &OneDimLaw<R>) -> Result<()> {
    law.ring.ensure_q_algebra()?;
    if law.has_unit_mean() {
        Ok(())
    } else {
        Err(Error::NotInGroup("law does not have mean 1".into()))
    }
}

fn s_as_lambda<R: Coeff>(law: &OneDimLaw<R>) -> Result<LambdaElement<R>> {
    LambdaElement::from_series(&s_transform(law)?)
}

/// `LOG`: mean-one law of order `n` to a law of order `n − 1` whose cumulants are
/// the ghost components of its S-transform (`κ_k` is the `z^{k−1}` component).
pub fn log_iso<R: Coeff>(law: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    require_unit_mean(law)?;
    if law.order() < 2 {
        return Err(Error::InsufficientOrder("LOG needs a law of order at least 2".into()));
    }
    let g = ghost(&s_as_lambda(law)?)?;
    OneDimLaw::from_cumulants(law.ring, &g.coeffs)
}

/// `EXP`, the inverse of [`log_iso`]: a law of order `m` to a mean-one law of
/// order `m + 1`.
pub fn exp_iso<R: Coeff>(law: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    law.ring.ensure_q_algebra()?;
    let h = PowerSeries1d::new(law.ring, law.cumulants()?)?;
    let lam = ghost_inverse(&h)?;
    s_transform_inverse(&lam.to_series())
}

/// `μ₁ ⊛ μ₂ = S⁻¹(S(μ₁) ∗ S(μ₂))` on mean-one laws.
pub fn circled_ast<R: Coeff>(mu1: &OneDimLaw<R>, mu2: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    require_unit_mean(mu1)?;
    require_unit_mean(mu2)?;
    mu1.ring.ensure_same(&mu2.ring)?;
    same_len(mu1.order(), mu2.order())?;
    if mu1.order() < 2 {
        return Ok(mu1.clone());
    }
    let prod = witt_mul(&s_as_lambda(mu1)?, &s_as_lambda(mu2)?)?;
    s_transform_inverse(&prod.to_series())
}

/// The `⊛`-unit: the law whose S-transform is `1 − z`.
pub fn circled_ast_unit<R: Coeff>(ring: RingDescriptor, order: usize) -> Result<OneDimLaw<R>> {
    let lam = LambdaElement::one_minus(&R::one(&ring), order.saturating_sub(1));
    s_transform_inverse(&lam.to_series())
}

/// `⊡`: cumulant sequences multiplied pointwise.
pub fn hadamard_box<R: Coeff>(mu1: &OneDimLaw<R>, mu2: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    let d = probmodel::hadamard_law_mul(&mu1.to_distribution()?, &mu2.to_distribution()?)?;
    OneDimLaw::from_distribution(&d)
}

/// `⊠_V` on one-dimensional laws.
pub fn free_mul_1d<R: Coeff>(mu1: &OneDimLaw<R>, mu2: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    OneDimLaw::from_series(&boxconv::free_mul(&mu1.to_series()?, &mu2.to_series()?)?)
}

/// `⊞_V` on one-dimensional laws.
pub fn free_add_1d<R: Coeff>(mu1: &OneDimLaw<R>, mu2: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    OneDimLaw::from_series(&boxconv::free_add(&mu1.to_series()?, &mu2.to_series()?)?)
}

/// Inverse under `⊠_V`: `(M ⊠ Moeb)^{⊠−1} ⊠ Zeta`.
pub fn free_mul_inverse_1d<R: Coeff>(mu: &OneDimLaw<R>) -> Result<OneDimLaw<R>> {
    let m = mu.to_series()?;
    let (ring, order) = (mu.ring, mu.order());
    let r = boxconv::GroupElement::new(boxconv::cumulants_from_moments(&m)?)?;
    let inv = boxconv::box_inverse(&r)?.into_series();
    OneDimLaw::from_series(&boxconv::box_conv(&inv, &boxconv::zeta_series(1, order, ring)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ModP, Rational};

    const Q: RingDescriptor = RingDescriptor::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(&Q, n)
    }

    fn qr(n: i64, d: i64) -> Rational {
        Rational::from_ratio(&Q, n, d).unwrap()
    }

    fn dirac(a: &Rational, n: usize) -> OneDimLaw<Rational> {
        OneDimLaw::new(Q, (1..=n).map(|k| Coeff::pow(a, k as u32)).collect()).unwrap()
    }

    fn law(m: &[Rational]) -> OneDimLaw<Rational> {
        OneDimLaw::new(Q, m.to_vec()).unwrap()
    }

    #[test]
    fn s_transform_of_dirac() {
        let a = qr(-3, 2);
        let s = s_transform(&dirac(&a, 5)).unwrap();
        let mut expected = vec![q(0); 5];
        expected[0] = a.recip();
        assert_eq!(s.coeffs(), &expected[..]);
        assert_eq!(s_transform(&dirac(&q(1), 4)).unwrap().coeffs(), &[q(1), q(0), q(0), q(0)]);
        assert_eq!(
            s_transform(&law(&[q(0), q(1)])).unwrap_err().category(),
            "not-in-group"
        );
    }

    #[test]
    fn s_transform_round_trip() {
        let mu = law(&[qr(2, 3), q(5), qr(-1, 4), q(3), q(7)]);
        assert_eq!(s_transform_inverse(&s_transform(&mu).unwrap()).unwrap(), mu);
    }

    #[test]
    fn s_transform_is_multiplicative_on_a_pair() {
        let m1 = law(&[q(1), q(3), q(-2), qr(1, 2)]);
        let m2 = law(&[q(2), q(1), q(4), q(0)]);
        let lhs = s_transform(&free_mul_1d(&m1, &m2).unwrap()).unwrap();
        let rhs = s_transform(&m1).unwrap().mul(&s_transform(&m2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ghost_examples() {
        let one = LambdaElement::<Rational>::one(Q, 5);
        assert!(ghost(&one).unwrap().coeffs().iter().all(Coeff::is_zero));
        let unit = LambdaElement::one_minus(&q(1), 6);
        assert_eq!(ghost(&unit).unwrap(), PowerSeries1d::all_ones(Q, 5));
        assert_eq!(ghost_inverse(&PowerSeries1d::all_ones(Q, 5)).unwrap(), unit);
        let zero = PowerSeries1d::new(Q, vec![q(0); 4]).unwrap();
        assert_eq!(ghost_inverse(&zero).unwrap(), LambdaElement::one(Q, 4));
    }

    #[test]
    fn ghost_turns_products_into_sums() {
        let f = LambdaElement::new(Q, vec![q(2), qr(-1, 3), q(4), q(1)]).unwrap();
        let g = LambdaElement::new(Q, vec![q(-1), q(5), qr(1, 2), q(0)]).unwrap();
        let lhs = ghost(&f.mul(&g).unwrap()).unwrap();
        assert_eq!(lhs, ghost(&f).unwrap().add(&ghost(&g).unwrap()).unwrap());
        assert_eq!(ghost_inverse(&ghost(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn witt_products() {
        let (a, b) = (q(3), qr(-2, 5));
        let lhs = witt_mul(&LambdaElement::one_minus(&a, 6), &LambdaElement::one_minus(&b, 6)).unwrap();
        assert_eq!(lhs, LambdaElement::one_minus(&(a * &b), 6));
        let f = LambdaElement::new(Q, vec![q(2), qr(-1, 3), q(4)]).unwrap();
        assert_eq!(witt_mul(&LambdaElement::one_minus(&q(1), 3), &f).unwrap(), f);
        assert_eq!(witt_mul(&LambdaElement::one(Q, 3), &f).unwrap(), LambdaElement::one(Q, 3));
    }

    #[test]
    fn log_and_exp() {
        let l = log_iso(&dirac(&q(1), 6)).unwrap();
        assert_eq!(l.cumulants().unwrap(), vec![q(0); 5]);
        let mu = law(&[q(1), q(3), qr(-1, 2), q(4), q(2), qr(5, 3)]);
        let l = log_iso(&mu).unwrap();
        assert_eq!(l.order(), 5);
        assert_eq!(exp_iso(&l).unwrap(), mu);
    }

    #[test]
    fn circled_ast_units() {
        let mu = law(&[q(1), q(3), qr(-1, 2), q(4), q(2)]);
        let unit = circled_ast_unit::<Rational>(Q, 5).unwrap();
        assert_eq!(circled_ast(&mu, &unit).unwrap(), mu);
        let zero = OneDimLaw::dirac_one(Q, 5);
        assert_eq!(circled_ast(&zero, &mu).unwrap(), zero);
        // LOG sends the ⊛-unit to the free Poisson law with λ = α = 1
        assert_eq!(log_iso(&unit).unwrap().cumulants().unwrap(), vec![q(1); 4]);
    }

    #[test]
    fn refuses_non_q_algebras() {
        let r = RingDescriptor::mod_p(7).unwrap();
        let mu = OneDimLaw::new(r, vec![ModP::one(&r); 3]).unwrap();
        assert_eq!(log_iso(&mu).unwrap_err().category(), "not-q-algebra");
        let f = LambdaElement::<ModP>::one(r, 3);
        assert_eq!(ghost(&f).unwrap_err().category(), "not-q-algebra");
        assert!(s_transform(&mu).is_ok());
    }

    #[test]
    fn free_mul_inverse() {
        let mu = law(&[q(1), q(3), qr(-1, 2), q(4)]);
        let inv = free_mul_inverse_1d(&mu).unwrap();
        assert_eq!(free_mul_1d(&mu, &inv).unwrap(), OneDimLaw::dirac_one(Q, 4));
    }
}
