//! Coefficient rings.
//!
//! Every container in this crate is generic over a [`Coeff`] type and carries the
//! [`RingDescriptor`] it was built over. Two concrete rings are provided: exact
//! rationals ([`Rational`], arbitrary precision) and residues modulo a prime
//! ([`ModP`]). Mixing descriptors is an error, never a coercion.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rationals, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Which commutative unital ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDescriptor {
    Rational,
    ModP(u64),
}

impl RingDescriptor {
    pub fn rational() -> Self {
        RingDescriptor::Rational
    }

    /// Integers modulo `p`; `p` must be prime.
    pub fn mod_p(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(RingDescriptor::ModP(p))
        } else {
            Err(Error::Domain(format!("modulus {p} is not prime")))
        }
    }

    /// True iff every nonzero integer multiple of 1 is invertible.
    pub fn is_q_algebra(&self) -> bool {
        matches!(self, RingDescriptor::Rational)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingDescriptor::Rational => None,
            RingDescriptor::ModP(p) => Some(*p),
        }
    }

    pub(crate) fn ensure_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }

    pub(crate) fn ensure_q_algebra(&self) -> Result<()> {
        if self.is_q_algebra() {
            Ok(())
        } else {
            Err(Error::NotQAlgebra(self.to_string()))
        }
    }
}

/// Free-function form of [`RingDescriptor::is_q_algebra`].
pub fn is_q_algebra(ring: &RingDescriptor) -> bool {
    ring.is_q_algebra()
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rational => f.write_str("rational"),
            RingDescriptor::ModP(p) => write!(f, "mod:{p}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(RingDescriptor::Rational);
        }
        match s.strip_prefix("mod:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad modulus in ring `{s}`")))?;
                RingDescriptor::mod_p(p)
            }
            None => Err(Error::Malformed(format!("unknown ring `{s}`"))),
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A commutative unital ring element usable as a series or matrix coefficient.
///
/// Constructors take the ring descriptor explicitly because some rings (residues
/// modulo `p`) cannot produce `0` or `1` without knowing their modulus. Containers
/// validate their descriptor with [`Coeff::supports`] once, after which the plain
/// operator impls are used; operands from different rings panic inside the
/// operators, so use the checked [`ring_add`] and friends at API boundaries.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Whether values of this type can live in `ring`.
    fn supports(ring: &RingDescriptor) -> bool;
    fn ring(&self) -> RingDescriptor;
    fn zero(ring: &RingDescriptor) -> Self;
    fn one(ring: &RingDescriptor) -> Self;
    fn from_i64(ring: &RingDescriptor, n: i64) -> Self;
    fn from_bigint(ring: &RingDescriptor, n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    /// Multiplicative inverse; errors on non-units.
    fn inverse(&self) -> Result<Self>;
    /// Parse the canonical string form (`"p/q"`, `"n"` or a residue).
    fn parse(ring: &RingDescriptor, s: &str) -> Result<Self>;
    /// True when the value is the image of an integer with no division involved
    /// (denominator 1 for rationals; always true for residues).
    fn is_integral(&self) -> bool;

    fn is_unit(&self) -> bool {
        self.inverse().is_ok()
    }

    fn from_ratio(ring: &RingDescriptor, num: i64, den: i64) -> Result<Self> {
        let d = Self::from_i64(ring, den).inverse()?;
        Ok(Self::from_i64(ring, num) * d)
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring());
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            let b2 = base.clone() * &base;
            base = b2;
            exp >>= 1;
        }
        acc
    }

    /// Power with a possibly negative exponent.
    fn powi(&self, exp: i64) -> Result<Self> {
        let p = self.pow(exp.unsigned_abs() as u32);
        if exp < 0 {
            p.inverse()
        } else {
            Ok(p)
        }
    }
}

impl Coeff for BigRational {
    fn supports(ring: &RingDescriptor) -> bool {
        matches!(ring, RingDescriptor::Rational)
    }

    fn ring(&self) -> RingDescriptor {
        RingDescriptor::Rational
    }

    fn zero(_: &RingDescriptor) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_: &RingDescriptor) -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(_: &RingDescriptor, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(_: &RingDescriptor, n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::NotInvertible("0".into()))
        } else {
            Ok(self.recip())
        }
    }

    fn parse(_: &RingDescriptor, s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("not a rational: `{s}`")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("not a rational: `{s}`")))?;
        if Zero::is_zero(&den) {
            return Err(Error::Malformed(format!("zero denominator in `{s}`")));
        }
        Ok(BigRational::new(num, den))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// A residue modulo a prime, stored canonically in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModP {
    value: u64,
    modulus: u64,
}

impl ModP {
    /// Reduce `n` modulo `p`. Primality of `p` is the caller's responsibility;
    /// go through [`RingDescriptor::mod_p`] for a checked modulus.
    pub fn new(n: i64, p: u64) -> Self {
        let m = p as i128;
        let v = (n as i128).rem_euclid(m) as u64;
        ModP { value: v, modulus: p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &ModP) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic across different moduli"
        );
    }

    fn modulus_of(ring: &RingDescriptor) -> u64 {
        ring.modulus()
            .expect("ModP used with a non-modular ring descriptor")
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! modp_binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident, $f:expr) => {
        impl $tr for ModP {
            type Output = ModP;
            fn $method(self, rhs: ModP) -> ModP {
                self.check(&rhs);
                let f: fn(u64, u64, u64) -> u64 = $f;
                ModP { value: f(self.value, rhs.value, self.modulus), modulus: self.modulus }
            }
        }
        impl<'a> $tr<&'a ModP> for ModP {
            type Output = ModP;
            fn $method(self, rhs: &'a ModP) -> ModP {
                self.$method(*rhs)
            }
        }
        impl<'a> $atr<&'a ModP> for ModP {
            fn $amethod(&mut self, rhs: &'a ModP) {
                *self = self.$method(*rhs);
            }
        }
    };
}

modp_binop!(Add, add, AddAssign, add_assign, |a, b, m| {
    ((a as u128 + b as u128) % m as u128) as u64
});
modp_binop!(Sub, sub, SubAssign, sub_assign, |a, b, m| {
    ((a as u128 + m as u128 - b as u128) % m as u128) as u64
});
modp_binop!(Mul, mul, MulAssign, mul_assign, mul_mod);

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl Coeff for ModP {
    fn supports(ring: &RingDescriptor) -> bool {
        matches!(ring, RingDescriptor::ModP(_))
    }

    fn ring(&self) -> RingDescriptor {
        RingDescriptor::ModP(self.modulus)
    }

    fn zero(ring: &RingDescriptor) -> Self {
        ModP { value: 0, modulus: Self::modulus_of(ring) }
    }

    fn one(ring: &RingDescriptor) -> Self {
        let p = Self::modulus_of(ring);
        ModP { value: 1 % p, modulus: p }
    }

    fn from_i64(ring: &RingDescriptor, n: i64) -> Self {
        ModP::new(n, Self::modulus_of(ring))
    }

    fn from_bigint(ring: &RingDescriptor, n: &BigInt) -> Self {
        let p = Self::modulus_of(ring);
        let r = n.mod_floor(&BigInt::from(p));
        ModP { value: r.to_u64().expect("residue fits in u64"), modulus: p }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn inverse(&self) -> Result<Self> {
        // extended Euclid on (value, p)
        let (mut old_r, mut r) = (self.value as i128, self.modulus as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        if old_r != 1 {
            return Err(Error::NotInvertible(format!(
                "{} mod {}",
                self.value, self.modulus
            )));
        }
        let v = old_s.rem_euclid(self.modulus as i128) as u64;
        Ok(ModP { value: v, modulus: self.modulus })
    }

    fn parse(ring: &RingDescriptor, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("not a residue: `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                let d = Self::from_bigint(ring, &d).inverse()?;
                Ok(Self::from_bigint(ring, &n) * d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Self::from_bigint(ring, &n))
            }
        }
    }

    fn is_integral(&self) -> bool {
        true
    }
}

fn check_pair<R: Coeff>(a: &R, b: &R) -> Result<()> {
    a.ring().ensure_same(&b.ring())
}

pub fn ring_add<R: Coeff>(a: &R, b: &R) -> Result<R> {
    check_pair(a, b)?;
    Ok(a.clone() + b)
}

pub fn ring_sub<R: Coeff>(a: &R, b: &R) -> Result<R> {
    check_pair(a, b)?;
    Ok(a.clone() - b)
}

pub fn ring_mul<R: Coeff>(a: &R, b: &R) -> Result<R> {
    check_pair(a, b)?;
    Ok(a.clone() * b)
}

pub fn ring_neg<R: Coeff>(a: &R) -> R {
    -a.clone()
}

pub fn ring_inverse<R: Coeff>(a: &R) -> Result<R> {
    a.inverse()
}

/// Absolute value of a rational, used by tolerance checks.
pub fn rational_abs(q: &Rational) -> Rational {
    q.abs()
}
