//! The acceptance suite: eleven exact checks of the propositions implemented by
//! this crate, driven by a seeded generator so every run is reproducible.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boxconv::{self, box_conv, box_inverse, unit_series, zeta_series, GroupElement};
use crate::error::Result;
use crate::hopf::{antipode, hopf_axiom_check, GenPolynomial};
use crate::ncpart::{enumerate_nc, is_noncrossing, kreweras, NcPartition};
use crate::oracle;
use crate::probmodel::{
    self, centered_alternating_defects, free_product, is_combinatorially_free, moments_of, tuple_add, tuple_mul,
    CumulantTable, JointDistribution,
};
use crate::rep::{s_transform, verify_s_multiplicativity};
use crate::ring::{Coeff, ModP, Rational, RingDescriptor};
use crate::series::{all_words, TruncSeries, Word};
use crate::wittlog::{self, LambdaElement, OneDimLaw};

pub const DEFAULT_SEED: u64 = 20_240_517;

/// Suite options.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// truncation order of the randomized group and moment-cumulant checks
    pub order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: DEFAULT_SEED, order: 5 }
    }
}

/// One line of the suite report.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {:>2} [{status}] {} ({} checks, {:.2}s)",
            self.id, self.title, self.checks, self.seconds
        )?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n    {msg}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n    … {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

pub const TITLES: [&str; 11] = [
    "NC counts and Kreweras complement",
    "group axioms of boxed convolution",
    "moment-cumulant formula",
    "free sums and products through boxed convolution",
    "Dirac, semicircle and free Poisson laws",
    "free Poisson limit",
    "free products are free",
    "Witt layer, LOG and EXP",
    "Hopf algebra axioms and antipode",
    "triangular S-transform",
    "generality over rings",
];

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn run(&mut self, label: &str, body: impl FnOnce(&mut Tally) -> Result<()>) {
        if let Err(e) = body(self) {
            self.checks += 1;
            self.failures.push(format!("{label}: error[{}] {e}", e.category()));
        }
    }

    fn absorb(&mut self, prefix: &str, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures.into_iter().map(|f| format!("{prefix}: {f}")));
    }
}

/// Random small exact values.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `n/d` with `|n| ≤ 5`, `1 ≤ d ≤ 3`.
    pub fn value<R: Coeff>(&mut self, ring: &RingDescriptor) -> R {
        let n = self.rng.gen_range(-5..=5);
        let d = self.rng.gen_range(1..=3);
        R::from_ratio(ring, n, d).expect("small denominators are units")
    }

    /// Like [`Sampler::value`] but never zero, hence a unit in any field.
    pub fn unit<R: Coeff>(&mut self, ring: &RingDescriptor) -> R {
        loop {
            let v = self.value::<R>(ring);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn integer<R: Coeff>(&mut self, ring: &RingDescriptor) -> R {
        R::from_i64(ring, self.rng.gen_range(-3..=3))
    }

    pub fn series<R: Coeff>(&mut self, s: usize, order: usize, ring: RingDescriptor) -> Result<TruncSeries<R>> {
        TruncSeries::from_fn(s, order, ring, |_| self.value(&ring))
    }

    pub fn integer_series<R: Coeff>(&mut self, s: usize, order: usize, ring: RingDescriptor) -> Result<TruncSeries<R>> {
        TruncSeries::from_fn(s, order, ring, |_| self.integer(&ring))
    }

    /// Degree-one coefficients units.
    pub fn group_element<R: Coeff>(&mut self, s: usize, order: usize, ring: RingDescriptor) -> Result<GroupElement<R>> {
        let f = TruncSeries::from_fn(s, order, ring, |l| if l.len() == 1 { self.unit(&ring) } else { self.value(&ring) })?;
        GroupElement::new(f)
    }

    /// Degree-one coefficients all 1.
    pub fn plus_element<R: Coeff>(&mut self, s: usize, order: usize, ring: RingDescriptor) -> Result<GroupElement<R>> {
        let f = TruncSeries::from_fn(s, order, ring, |l| if l.len() == 1 { R::one(&ring) } else { self.value(&ring) })?;
        GroupElement::new(f)
    }

    pub fn mean_one_law(&mut self, order: usize) -> OneDimLaw<Rational> {
        let q = RingDescriptor::Rational;
        let mut m = vec![Rational::from_i64(&q, 1)];
        m.extend((1..order).map(|_| self.value::<Rational>(&q)));
        OneDimLaw::new(q, m).expect("valid law")
    }

    pub fn lambda(&mut self, order: usize) -> LambdaElement<Rational> {
        let q = RingDescriptor::Rational;
        LambdaElement::new(q, (0..order).map(|_| self.value::<Rational>(&q)).collect()).expect("valid element")
    }

    /// Cumulant table on the given generators; with `unit_means` the first-order
    /// cumulants are nonzero.
    pub fn cumulant_table<R: Coeff>(
        &mut self,
        names: &[&str],
        order: usize,
        ring: RingDescriptor,
        unit_means: bool,
    ) -> Result<CumulantTable<R>> {
        let t = TruncSeries::from_fn(names.len(), order, ring, |l| {
            if unit_means && l.len() == 1 {
                self.unit(&ring)
            } else {
                self.value(&ring)
            }
        })?;
        CumulantTable::new(names.iter().map(|s| s.to_string()).collect(), t)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

fn q(n: i64) -> Rational {
    Rational::from_i64(&RingDescriptor::Rational, n)
}

fn qr(n: i64, d: i64) -> Rational {
    Rational::from_ratio(&RingDescriptor::Rational, n, d).expect("nonzero denominator")
}

fn word(l: &[u8]) -> Word {
    Word::new(l.to_vec()).expect("valid word")
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn criterion_1(t: &mut Tally) -> Result<()> {
    for n in 1..=10usize {
        let count = enumerate_nc(n)?.len() as u64;
        t.check(count == catalan(n as u64), || format!("|NC({n})| = {count}"));
    }
    for n in 1..=8usize {
        let all = enumerate_nc(n)?;
        let mut images = std::collections::BTreeSet::new();
        for p in &all {
            let k = kreweras(p);
            t.check(is_noncrossing(k.blocks())?, || format!("K({p}) crosses"));
            t.check(p.num_blocks() + k.num_blocks() == n + 1, || format!("|π|+|K(π)| ≠ n+1 at {p}"));
            images.insert(k);
        }
        t.check(images.len() == all.len(), || format!("K is not injective on NC({n})"));
    }
    for n in 1..=6usize {
        let brute: std::collections::BTreeSet<NcPartition> =
            oracle::nc_partitions(n).into_iter().map(|b| NcPartition::new(n, b)).collect::<Result<_>>()?;
        let fast: std::collections::BTreeSet<NcPartition> = enumerate_nc(n)?.into_iter().collect();
        t.check(brute == fast, || format!("enumeration differs from brute force at n={n}"));
        for p in &fast {
            let k = NcPartition::new(n, oracle::kreweras(n, p.blocks()))?;
            t.check(k == kreweras(p), || format!("K({p}) differs from brute force"));
        }
    }
    Ok(())
}

/// `f = z₁ + z₂ + z₁z₂`, `g = z₁ + z₂ + z₂z₁`: `f⊠g` has `z₁z₂z₁`, `g⊠f` has `z₂z₁z₂`.
fn noncommutativity_witness<R: Coeff>(t: &mut Tally, ring: RingDescriptor) -> Result<()> {
    let one = R::one(&ring);
    let f = TruncSeries::from_terms(2, 3, ring, [(word(&[1]), one.clone()), (word(&[2]), one.clone()), (word(&[1, 2]), one.clone())])?;
    let g = TruncSeries::from_terms(2, 3, ring, [(word(&[1]), one.clone()), (word(&[2]), one.clone()), (word(&[2, 1]), one.clone())])?;
    let fg = box_conv(&f, &g)?;
    let gf = box_conv(&g, &f)?;
    let pinned = |h: &TruncSeries<R>, w: &[u8], v: i64| h.coeff(&word(w)).map(|c| *c == R::from_i64(&ring, v));
    t.check(pinned(&fg, &[1, 2, 1], 1)? && pinned(&fg, &[2, 1, 2], 0)?, || "f⊠g witness value".into());
    t.check(pinned(&gf, &[1, 2, 1], 0)? && pinned(&gf, &[2, 1, 2], 1)?, || "g⊠f witness value".into());
    t.check(fg != gf, || "witness pair commutes".into());
    Ok(())
}

/// `(z+z²)⊠(2z) = 2z+4z²` while `(z+z²)⊠z + (z+z²)⊠z = 2z+2z²`.
fn nondistributivity_witness<R: Coeff>(t: &mut Tally, ring: RingDescriptor) -> Result<()> {
    let c = |v: i64| R::from_i64(&ring, v);
    let f = TruncSeries::from_terms(1, 2, ring, [(word(&[1]), c(1)), (word(&[1, 1]), c(1))])?;
    let z = unit_series::<R>(1, 2, ring)?;
    let two_z = z.add(&z)?;
    let lhs = box_conv(&f, &two_z)?;
    let rhs = box_conv(&f, &z)?.add(&box_conv(&f, &z)?)?;
    let expect = |a: i64, b: i64| TruncSeries::from_terms(1, 2, ring, [(word(&[1]), c(a)), (word(&[1, 1]), c(b))]);
    t.check(lhs == expect(2, 4)?, || format!("(z+z²)⊠2z = {lhs}"));
    t.check(rhs == expect(2, 2)?, || format!("(z+z²)⊠z + (z+z²)⊠z = {rhs}"));
    Ok(())
}

fn criterion_2<R: Coeff>(t: &mut Tally, ring: RingDescriptor, rng: &mut Sampler, order: usize) -> Result<()> {
    for s in 1..=2usize {
        let unit = unit_series::<R>(s, order, ring)?;
        for i in 0..200 {
            let f = rng.group_element::<R>(s, order, ring)?;
            let g = rng.group_element::<R>(s, order, ring)?;
            let h = rng.group_element::<R>(s, order, ring)?;
            let (f, g, h) = (f.series(), g.series(), h.series());
            let left = box_conv(&box_conv(f, g)?, h)?;
            let right = box_conv(f, &box_conv(g, h)?)?;
            t.check(left == right, || format!("associativity, s={s}, triple {i}"));
            t.check(box_conv(f, &unit)? == *f && box_conv(&unit, f)? == *f, || format!("unit law, s={s}, triple {i}"));
            let inv = box_inverse(&GroupElement::new(f.clone())?)?.into_series();
            t.check(
                box_conv(f, &inv)? == unit && box_conv(&inv, f)? == unit,
                || format!("two-sided inverse, s={s}, triple {i}"),
            );
            if i < 10 {
                let small = (f.truncate(4)?, g.truncate(4)?);
                t.check(
                    oracle::box_conv(&small.0, &small.1)? == box_conv(&small.0, &small.1)?,
                    || format!("brute-force convolution disagrees, s={s}, pair {i}"),
                );
            }
        }
    }
    noncommutativity_witness::<R>(t, ring)?;
    nondistributivity_witness::<R>(t, ring)
}

fn criterion_3<R: Coeff>(t: &mut Tally, ring: RingDescriptor, rng: &mut Sampler, order: usize) -> Result<()> {
    for s in 1..=2usize {
        let zeta = zeta_series::<R>(s, order, ring)?;
        for i in 0..200 {
            let r = rng.series::<R>(s, order, ring)?;
            let m = boxconv::moments_from_cumulants(&r)?;
            t.check(m == box_conv(&r, &zeta)?, || format!("ℛ⊠Zeta, s={s}, series {i}"));
            t.check(m == oracle::moments_from_cumulants(&r)?, || format!("NC moment expansion, s={s}, series {i}"));
            t.check(boxconv::cumulants_from_moments(&m)? == r, || format!("round trip, s={s}, series {i}"));
        }
    }
    Ok(())
}

fn criterion_4<R: Coeff>(t: &mut Tally, ring: RingDescriptor, rng: &mut Sampler) -> Result<()> {
    for i in 0..100 {
        let s = 1 + i % 2;
        let (a, b): (Vec<&str>, Vec<&str>) = if s == 1 { (vec!["a1"], vec!["b1"]) } else { (vec!["a1", "a2"], vec!["b1", "b2"]) };
        let ka = rng.cumulant_table::<R>(&a, 6, ring, false)?;
        let kb = rng.cumulant_table::<R>(&b, 6, ring, false)?;
        let d = free_product(&moments_of(&ka)?, &moments_of(&kb)?)?;
        let groups = vec![a.iter().map(|x| x.to_string()).collect(), b.iter().map(|x| x.to_string()).collect()];
        t.check(is_combinatorially_free(&d, &groups)?, || format!("pair {i} not free"));
        let ma = probmodel::m_transform(&d, &a)?;
        let mb = probmodel::m_transform(&d, &b)?;

        let sum = tuple_add(&d, &a, &b, 4)?;
        let names: Vec<&str> = sum.generators().iter().map(String::as_str).collect();
        let lhs = probmodel::m_transform(&sum, &names)?;
        let rhs = boxconv::free_add(&ma.truncate(4)?, &mb.truncate(4)?)?;
        t.check(lhs == rhs, || format!("ℳ(a+b) ≠ ℳ(a)⊞ℳ(b), s={s}, pair {i}"));

        let prod = tuple_mul(&d, &a, &b, 3)?;
        let names: Vec<&str> = prod.generators().iter().map(String::as_str).collect();
        let lhs = probmodel::m_transform(&prod, &names)?;
        let rhs = boxconv::free_mul(&ma.truncate(3)?, &mb.truncate(3)?)?;
        t.check(lhs == rhs, || format!("ℳ(a⋆b) ≠ ℳ(a)⊠ℳ(b), s={s}, pair {i}"));
    }
    Ok(())
}

fn criterion_5(t: &mut Tally, rng: &mut Sampler) -> Result<()> {
    let qd = RingDescriptor::Rational;
    let order = 6;
    let values = [q(-2), qr(1, 3), q(5)];
    for a in &values {
        for b in &values {
            let lhs = probmodel::hadamard_law_mul(&probmodel::law_dirac(a, order)?, &probmodel::law_dirac(b, order)?)?;
            let rhs = probmodel::law_dirac(&(a.clone() * b), order)?;
            t.check(lhs.table() == rhs.table(), || format!("δ_{a} ⊡ δ_{b} ≠ δ_{{ab}}"));
        }
    }
    let (a, r2, b, s2) = (q(1), q(9), q(2), q(16));
    let ga = probmodel::law_semicircle(&a, &r2, order)?;
    let gb = probmodel::law_semicircle(&b, &s2, order)?;
    let sum = boxconv::free_add(ga.table(), gb.table())?;
    let k = OneDimLaw::from_series(&sum)?.cumulants()?;
    let mut expected = vec![q(0); order];
    expected[0] = a.clone() + &b;
    expected[1] = (r2.clone() + &s2) * qr(1, 4);
    t.check(k == expected, || format!("γ ⊞ γ cumulants {k:?}"));
    t.check(
        sum == *probmodel::law_semicircle(&(a.clone() + &b), &(r2.clone() + &s2), order)?.table(),
        || "γ_{1,3} ⊞ γ_{2,4} ≠ γ_{3,5}".into(),
    );
    let prod = probmodel::hadamard_law_mul(&ga, &gb)?;
    let k = probmodel::law_cumulants(&prod)?;
    let mut expected = vec![q(0); order];
    expected[0] = a.clone() * &b;
    expected[1] = r2.clone() * &s2 * qr(1, 16);
    t.check(k == expected, || format!("γ ⊡ γ cumulants {k:?}"));

    let unit = probmodel::law_free_poisson(&q(1), &q(1), order)?;
    for i in 0..50 {
        let m: Vec<Rational> = (0..order).map(|_| rng.value::<Rational>(&qd)).collect();
        let law = probmodel::law_from_moments(qd, &m)?;
        let prod = probmodel::hadamard_law_mul(&law, &unit)?;
        t.check(prod.table() == law.table(), || format!("free Poisson(1,1) not a ⊡-unit on law {i}"));
        let prod = probmodel::hadamard_law_mul(&unit, &law)?;
        t.check(prod.table() == law.table(), || format!("free Poisson(1,1) not a left ⊡-unit on law {i}"));
    }
    Ok(())
}

/// Moments of `((1−λ/N)δ₀ + (λ/N)δ_α)^{⊞N}` to order 3.
pub fn bernoulli_power_moments(lambda: &Rational, alpha: &Rational, n: i64, order: usize) -> Result<Vec<Rational>> {
    let qd = RingDescriptor::Rational;
    let p = lambda.clone() * qr(1, n);
    let moments: Vec<Rational> = (1..=order).map(|k| p.clone() * Coeff::pow(alpha, k as u32)).collect();
    let k = OneDimLaw::new(qd, moments)?.cumulants()?;
    let scaled: Vec<Rational> = k.into_iter().map(|c| c * q(n)).collect();
    Ok(OneDimLaw::from_cumulants(qd, &scaled)?.moments().to_vec())
}

/// Bound constant: `|m_k(N) − m_k| ≤ C/N`.
pub const POISSON_LIMIT_C: i64 = 8;

fn criterion_6(t: &mut Tally) -> Result<()> {
    let order = 3;
    for (lambda, alpha) in [(q(1), q(1)), (q(2), qr(1, 2))] {
        let limit = probmodel::law_moments(&probmodel::law_free_poisson(&lambda, &alpha, order)?)?;
        let gap = |n: i64| -> Result<Vec<Rational>> {
            let m = bernoulli_power_moments(&lambda, &alpha, n, order)?;
            Ok(m.into_iter().zip(&limit).map(|(a, b)| a - b).collect())
        };
        for n in [64i64, 256] {
            let (d1, d2) = (gap(n)?, gap(2 * n)?);
            for k in 0..order {
                let bound = qr(POISSON_LIMIT_C, n);
                t.check(crate::ring::rational_abs(&d1[k]) <= bound, || {
                    format!("(λ,α)=({lambda},{alpha}), N={n}: |Δm_{}| = {} exceeds C/N", k + 1, d1[k])
                });
                if d1[k] == q(0) && d2[k] == q(0) {
                    continue;
                }
                let ok = d2[k] != q(0) && {
                    let ratio = d1[k].clone() / &d2[k];
                    ratio >= qr(9, 5) && ratio <= qr(11, 5)
                };
                t.check(ok, || {
                    format!("(λ,α)=({lambda},{alpha}), N={n}: Δm_{} halving ratio {}/{}", k + 1, d1[k], d2[k])
                });
            }
        }
    }
    Ok(())
}

fn criterion_7(t: &mut Tally, rng: &mut Sampler) -> Result<()> {
    let qd = RingDescriptor::Rational;
    for i in 0..20 {
        let sizes: &[usize] = match i % 3 {
            0 => &[1, 1],
            1 => &[2, 1],
            _ => &[1, 1, 1],
        };
        let mut groups: Vec<Vec<String>> = Vec::new();
        let mut d: Option<JointDistribution<Rational>> = None;
        for (g, &size) in sizes.iter().enumerate() {
            let names: Vec<String> = (0..size).map(|j| format!("g{g}_{j}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let part = moments_of(&rng.cumulant_table::<Rational>(&refs, 5, qd, false)?)?;
            d = Some(match d {
                None => part,
                Some(prev) => free_product(&prev, &part)?,
            });
            groups.push(names);
        }
        let d = d.expect("at least one group");
        let defects = centered_alternating_defects(&d, &groups, 5)?;
        t.check(defects.is_empty(), || format!("instance {i}: {} alternating centred words are nonzero", defects.len()));
    }
    Ok(())
}

fn criterion_8(t: &mut Tally, rng: &mut Sampler) -> Result<()> {
    let qd = RingDescriptor::Rational;
    for i in 0..100 {
        let (f, g) = (rng.lambda(8), rng.lambda(8));
        let (gf, gg) = (wittlog::ghost(&f)?, wittlog::ghost(&g)?);
        t.check(wittlog::ghost(&f.mul(&g)?)? == gf.add(&gg)?, || format!("ghost(f·g), pair {i}"));
        t.check(wittlog::ghost(&wittlog::witt_mul(&f, &g)?)? == gf.hadamard(&gg)?, || format!("ghost(f∗g), pair {i}"));
        t.check(wittlog::ghost_inverse(&gf)? == f, || format!("ghost round trip, pair {i}"));
        let (a, b) = (rng.value::<Rational>(&qd), rng.value::<Rational>(&qd));
        let lhs = wittlog::witt_mul(&LambdaElement::one_minus(&a, 8), &LambdaElement::one_minus(&b, 8))?;
        t.check(lhs == LambdaElement::one_minus(&(a.clone() * &b), 8), || format!("(1−{a}z)∗(1−{b}z)"));
    }
    for i in 0..100 {
        let (m1, m2) = (rng.mean_one_law(6), rng.mean_one_law(6));
        let (l1, l2) = (wittlog::log_iso(&m1)?, wittlog::log_iso(&m2)?);
        t.check(wittlog::exp_iso(&l1)? == m1, || format!("EXP∘LOG, pair {i}"));
        let lhs = wittlog::log_iso(&wittlog::free_mul_1d(&m1, &m2)?)?;
        t.check(lhs == wittlog::free_add_1d(&l1, &l2)?, || format!("LOG(μ₁⊠μ₂) ≠ LOG μ₁ ⊞ LOG μ₂, pair {i}"));
        let nu = OneDimLaw::new(qd, (0..5).map(|_| rng.value::<Rational>(&qd)).collect())?;
        t.check(wittlog::log_iso(&wittlog::exp_iso(&nu)?)? == nu, || format!("LOG∘EXP, pair {i}"));
    }
    let order = 5;
    let zero = OneDimLaw::dirac_one(qd, order);
    let one = wittlog::circled_ast_unit::<Rational>(qd, order)?;
    for i in 0..50 {
        let (a, b, c) = (rng.mean_one_law(order), rng.mean_one_law(order), rng.mean_one_law(order));
        let add = wittlog::free_mul_1d;
        let mul = wittlog::circled_ast;
        t.check(add(&add(&a, &b)?, &c)? == add(&a, &add(&b, &c)?)?, || format!("⊠ associativity, triple {i}"));
        t.check(add(&a, &b)? == add(&b, &a)?, || format!("⊠ commutativity, triple {i}"));
        t.check(add(&a, &zero)? == a, || format!("δ₁ is not the ⊠-unit, triple {i}"));
        t.check(add(&a, &wittlog::free_mul_inverse_1d(&a)?)? == zero, || format!("⊠ inverse, triple {i}"));
        t.check(mul(&mul(&a, &b)?, &c)? == mul(&a, &mul(&b, &c)?)?, || format!("⊛ associativity, triple {i}"));
        t.check(mul(&a, &b)? == mul(&b, &a)?, || format!("⊛ commutativity, triple {i}"));
        t.check(mul(&a, &one)? == a, || format!("⊛ unit, triple {i}"));
        t.check(mul(&zero, &a)? == zero, || format!("δ₁ does not annihilate, triple {i}"));
        t.check(
            mul(&a, &add(&b, &c)?)? == add(&mul(&a, &b)?, &mul(&a, &c)?)?,
            || format!("distributivity, triple {i}"),
        );
        let lhs = wittlog::log_iso(&mul(&a, &b)?)?;
        let rhs = wittlog::hadamard_box(&wittlog::log_iso(&a)?, &wittlog::log_iso(&b)?)?;
        t.check(lhs == rhs, || format!("LOG(μ₁⊛μ₂) ≠ LOG μ₁ ⊡ LOG μ₂, triple {i}"));
    }
    Ok(())
}

fn criterion_9(t: &mut Tally, rng: &mut Sampler) -> Result<()> {
    for (order, s) in [(5, 1), (3, 2)] {
        let r = hopf_axiom_check(order, s)?;
        t.checks += r.identities_checked.saturating_sub(1);
        t.check(r.passed(), || format!("s={s}, order {order}: {}", r.failures.join("; ")));
    }
    let pinned: GenPolynomial = "-X(1,1)*X(1)^-4".parse()?;
    let s11 = antipode(1, &word(&[1, 1]))?;
    t.check(s11 == pinned, || format!("S(X(1,1)) = {s11}"));
    let qd = RingDescriptor::Rational;
    for i in 0..100 {
        let s = 1 + i % 2;
        let f = rng.group_element::<Rational>(s, 4, qd)?;
        let inv = box_inverse(&f)?;
        for w in all_words(s, 4) {
            let lhs = antipode(s, &w)?.evaluate(f.series())?;
            t.check(lhs == *inv.series().coeff(&w)?, || format!("S(X{w}) at random f {i}"));
        }
    }
    Ok(())
}

fn diagonal_expected<R: Coeff>(f: &GroupElement<R>, m: &crate::hopf::Monomial) -> Result<R> {
    let mut acc = R::one(&f.series().ring());
    for (w, e) in m.factors() {
        let mut p = R::one(&acc.ring());
        for &l in w.letters() {
            p *= f.series().coeff(&Word::letter(l))?;
        }
        acc *= &Coeff::pow(&p, *e as u32);
    }
    Ok(acc)
}

fn criterion_10(t: &mut Tally, rng: &mut Sampler) -> Result<()> {
    let qd = RingDescriptor::Rational;
    let shapes = [(1usize, 2usize), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)];
    for i in 0..100 {
        let (s, n) = shapes[i % shapes.len()];
        let f = rng.group_element::<Rational>(s, n, qd)?;
        let g = rng.group_element::<Rational>(s, n, qd)?;
        let (rf, rg) = (s_transform(&f, n)?, s_transform(&g, n)?);
        let rfg = s_transform(&f.mul(&g)?, n)?;
        t.check(rfg == rf.mul(&rg)?, || format!("ρ(f⊠g) ≠ ρ(f)ρ(g), s={s}, n={n}, pair {i}"));
        let diag_ok = rf
            .basis()
            .iter()
            .zip(rf.diagonal())
            .map(|(m, d)| diagonal_expected(&f, m).map(|e| e == d))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        t.check(rf.is_borel() && diag_ok, || format!("ρ(f) not Borel with the expected diagonal, pair {i}"));

        let u = rng.plus_element::<Rational>(s, n, qd)?;
        t.check(s_transform(&u, n)?.is_unipotent(), || format!("ρ of a 𝔊₊ element not unipotent, pair {i}"));
        let torus = GroupElement::new(f.series().truncate(1)?.extend_to(n)?)?;
        t.check(s_transform(&torus, n)?.is_diagonal(), || format!("ρ of a torus element not diagonal, pair {i}"));

        // faithfulness: perturb one coefficient and read it back from the matrix
        let words: Vec<Word> = all_words(s, n).collect();
        let w = &words[rng.below(words.len())];
        let mut h = f.series().clone();
        let bumped = h.coeff(w)?.clone() + &rng.unit::<Rational>(&qd);
        h.set(w, bumped)?;
        if let Ok(h) = GroupElement::new(h) {
            let rh = s_transform(&h, n)?;
            t.check(rh != rf, || format!("perturbation at {w} not detected, pair {i}"));
            t.check(*rh.coordinate(w)? == *h.series().coeff(w)?, || format!("coordinate {w} not recovered, pair {i}"));
        }
    }
    for i in 0..20 {
        let s = 1 + i % 2;
        let (a, b): (Vec<&str>, Vec<&str>) = if s == 1 { (vec!["a1"], vec!["b1"]) } else { (vec!["a1", "a2"], vec!["b1", "b2"]) };
        let ka = rng.cumulant_table::<Rational>(&a, 6, qd, true)?;
        let kb = rng.cumulant_table::<Rational>(&b, 6, qd, true)?;
        let d = free_product(&moments_of(&ka)?, &moments_of(&kb)?)?;
        let r = verify_s_multiplicativity(&d, &a, &b, 3)?;
        t.check(r.holds, || format!("S₃(a⋆b) ≠ S₃(a)S₃(b), s={s}, pair {i}"));
    }
    Ok(())
}

fn integrality(t: &mut Tally, rng: &mut Sampler, order: usize) -> Result<()> {
    let qd = RingDescriptor::Rational;
    let p7 = RingDescriptor::mod_p(7)?;
    for i in 0..200 {
        let s = 1 + i % 2;
        let f = rng.integer_series::<Rational>(s, order, qd)?;
        let g = rng.integer_series::<Rational>(s, order, qd)?;
        let h = box_conv(&f, &g)?;
        t.check(h.terms().all(|(_, c)| c.is_integral()), || format!("non-integer ⊠ output, case {i}"));
        let reduce = |x: &TruncSeries<Rational>| -> Result<TruncSeries<ModP>> {
            TruncSeries::from_terms(
                x.s(),
                x.order(),
                p7,
                x.terms().map(|(w, c)| (w, ModP::from_bigint(&p7, c.numer()))).collect::<Vec<_>>(),
            )
        };
        t.check(
            reduce(&h)? == box_conv(&reduce(&f)?, &reduce(&g)?)?,
            || format!("reduction mod 7 does not commute with ⊠, case {i}"),
        );
    }
    Ok(())
}

fn criterion_11(t: &mut Tally, rng: &mut Sampler, order: usize) -> Result<()> {
    let r = RingDescriptor::mod_p(7)?;
    let mut sub = Tally::default();
    sub.run("NC", criterion_1);
    t.absorb("mod 7, criterion 1", sub);
    let mut sub = Tally::default();
    sub.run("group", |tt| criterion_2::<ModP>(tt, r, rng, order));
    t.absorb("mod 7, criterion 2", sub);
    let mut sub = Tally::default();
    sub.run("moment-cumulant", |tt| criterion_3::<ModP>(tt, r, rng, order));
    t.absorb("mod 7, criterion 3", sub);
    let mut sub = Tally::default();
    sub.run("free sums and products", |tt| criterion_4::<ModP>(tt, r, rng));
    t.absorb("mod 7, criterion 4", sub);
    integrality(t, rng, order)?;
    Ok(())
}

/// Run one criterion (1 to 11).
pub fn run_criterion(id: u8, config: &VerifyConfig) -> CriterionReport {
    let start = Instant::now();
    let mut rng = Sampler::new(config.seed.wrapping_add(id as u64));
    let qd = RingDescriptor::Rational;
    let order = config.order;
    let mut t = Tally::default();
    let label = TITLES.get(id as usize - 1).copied().unwrap_or("unknown criterion");
    match id {
        1 => t.run(label, criterion_1),
        2 => t.run(label, |t| criterion_2::<Rational>(t, qd, &mut rng, order)),
        3 => t.run(label, |t| criterion_3::<Rational>(t, qd, &mut rng, order)),
        4 => t.run(label, |t| criterion_4::<Rational>(t, qd, &mut rng)),
        5 => t.run(label, |t| criterion_5(t, &mut rng)),
        6 => t.run(label, criterion_6),
        7 => t.run(label, |t| criterion_7(t, &mut rng)),
        8 => t.run(label, |t| criterion_8(t, &mut rng)),
        9 => t.run(label, |t| criterion_9(t, &mut rng)),
        10 => t.run(label, |t| criterion_10(t, &mut rng)),
        11 => t.run(label, |t| criterion_11(t, &mut rng, order)),
        _ => t.failures.push(format!("no criterion {id}")),
    }
    CriterionReport { id, title: label, checks: t.checks, failures: t.failures, seconds: start.elapsed().as_secs_f64() }
}

/// Run all eleven criteria.
pub fn run_all(config: &VerifyConfig) -> Vec<CriterionReport> {
    (1..=11).map(|id| run_criterion(id, config)).collect()
}
