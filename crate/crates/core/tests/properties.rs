use proptest::prelude::*;

use freeprob::boxconv::{self, box_conv, box_inverse, GroupElement};
use freeprob::oracle;
use freeprob::series::all_words;
use freeprob::wittlog::{self, OneDimLaw};
use freeprob::{Coeff, ModP, Rational, RingDescriptor, TruncSeries};

const Q: RingDescriptor = RingDescriptor::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn small_q() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

/// A series on `s` letters up to `order`, coefficients drawn from `values`.
fn series_from(s: usize, order: usize, values: &[Rational]) -> TruncSeries<Rational> {
    let words: Vec<_> = all_words(s, order).collect();
    TruncSeries::from_terms(s, order, Q, words.into_iter().zip(values.iter().cloned())).unwrap()
}

fn n_words(s: usize, order: usize) -> usize {
    (1..=order).map(|k| s.pow(k as u32)).sum()
}

fn series(s: usize, order: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    prop::collection::vec(small_q(), n_words(s, order)).prop_map(move |v| series_from(s, order, &v))
}

/// Group elements: every linear coefficient is a nonzero value.
fn group_element(s: usize, order: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    (series(s, order), prop::collection::vec((1i64..=4, 1i64..=3, any::<bool>()), s)).prop_map(
        move |(mut f, lin)| {
            for (i, (n, d, neg)) in lin.into_iter().enumerate() {
                let v = if neg { q(-n, d) } else { q(n, d) };
                f.set(&freeprob::Word::letter(i as u8 + 1), v).unwrap();
            }
            f
        },
    )
}

fn mean_one_law(order: usize) -> impl Strategy<Value = OneDimLaw<Rational>> {
    prop::collection::vec(small_q(), order - 1).prop_map(|rest| {
        let mut m = vec![q(1, 1)];
        m.extend(rest);
        OneDimLaw::new(Q, m).unwrap()
    })
}

fn check_field<R: Coeff>(a: &R, b: &R, c: &R) {
    let ring = a.ring();
    assert_eq!(a.clone() + b, b.clone() + a);
    assert_eq!(a.clone() * b, b.clone() * a);
    assert_eq!((a.clone() + b) + c, a.clone() + &(b.clone() + c));
    assert_eq!((a.clone() * b) * c, a.clone() * &(b.clone() * c));
    assert_eq!(a.clone() * &(b.clone() + c), a.clone() * b + &(a.clone() * c));
    assert_eq!(a.clone() + &R::zero(&ring), a.clone());
    assert_eq!(a.clone() * &R::one(&ring), a.clone());
    assert_eq!(a.clone() + &(-a.clone()), R::zero(&ring));
    if a.is_unit() {
        assert_eq!(a.clone() * &a.inverse().unwrap(), R::one(&ring));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mod_p_is_a_field(a in -500i64..500, b in -500i64..500, c in -500i64..500, p in prop::sample::select(vec![2u64, 7, 101, 65_521])) {
        let r = RingDescriptor::mod_p(p).unwrap();
        let (a, b, c) = (ModP::from_i64(&r, a), ModP::from_i64(&r, b), ModP::from_i64(&r, c));
        check_field(&a, &b, &c);
        prop_assert_eq!(a.is_unit(), a != ModP::zero(&r));
    }

    #[test]
    fn rationals_are_a_field(a in small_q(), b in small_q(), c in small_q()) {
        check_field(&a, &b, &c);
    }

    #[test]
    fn box_conv_matches_the_brute_force_sum(f in series(2, 4), g in series(2, 4)) {
        prop_assert_eq!(box_conv(&f, &g).unwrap(), oracle::box_conv(&f, &g).unwrap());
    }

    #[test]
    fn box_conv_is_associative(f in series(2, 4), g in series(2, 4), h in series(2, 4)) {
        let left = box_conv(&box_conv(&f, &g).unwrap(), &h).unwrap();
        let right = box_conv(&f, &box_conv(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn truncation_commutes_with_box_conv(f in series(2, 5), g in series(2, 5), m in 1usize..5) {
        let full = box_conv(&f, &g).unwrap().truncate(m).unwrap();
        let low = box_conv(&f.truncate(m).unwrap(), &g.truncate(m).unwrap()).unwrap();
        prop_assert_eq!(full, low);
    }

    #[test]
    fn inverse_and_unit(f in group_element(2, 4)) {
        let unit = boxconv::unit_series::<Rational>(2, 4, Q).unwrap();
        prop_assert_eq!(box_conv(&f, &unit).unwrap(), f.clone());
        let g = GroupElement::new(f.clone()).unwrap();
        let inv = box_inverse(&g).unwrap().into_series();
        prop_assert_eq!(box_conv(&f, &inv).unwrap(), unit.clone());
        prop_assert_eq!(box_conv(&inv, &f).unwrap(), unit);
    }

    #[test]
    fn integer_series_stay_integral(v in prop::collection::vec(-4i64..=4, n_words(2, 4)), signs in (any::<bool>(), any::<bool>())) {
        let vals: Vec<Rational> = v.iter().map(|&n| q(n, 1)).collect();
        let mut f = series_from(2, 4, &vals);
        f.set(&freeprob::Word::letter(1), q(if signs.0 { 1 } else { -1 }, 1)).unwrap();
        f.set(&freeprob::Word::letter(2), q(if signs.1 { 1 } else { -1 }, 1)).unwrap();
        let zeta = boxconv::zeta_series::<Rational>(2, 4, Q).unwrap();
        let inv = box_inverse(&GroupElement::new(f.clone()).unwrap()).unwrap().into_series();
        for h in [box_conv(&f, &zeta).unwrap(), box_conv(&f, &f).unwrap(), inv] {
            prop_assert!(h.terms().all(|(_, c)| c.is_integral()));
        }
    }

    #[test]
    fn moments_and_cumulants_are_inverse(r in series(2, 4)) {
        let m = boxconv::moments_from_cumulants(&r).unwrap();
        prop_assert_eq!(&m, &oracle::moments_from_cumulants(&r).unwrap());
        prop_assert_eq!(boxconv::cumulants_from_moments(&m).unwrap(), r);
    }

    #[test]
    fn log_turns_free_mul_into_free_add(a in mean_one_law(5), b in mean_one_law(5)) {
        let lhs = wittlog::log_iso(&wittlog::free_mul_1d(&a, &b).unwrap()).unwrap();
        let rhs = wittlog::free_add_1d(&wittlog::log_iso(&a).unwrap(), &wittlog::log_iso(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn log_turns_circled_ast_into_hadamard(a in mean_one_law(5), b in mean_one_law(5)) {
        let lhs = wittlog::log_iso(&wittlog::circled_ast(&a, &b).unwrap()).unwrap();
        let rhs = wittlog::hadamard_box(&wittlog::log_iso(&a).unwrap(), &wittlog::log_iso(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_inverts_log(a in mean_one_law(6)) {
        prop_assert_eq!(wittlog::exp_iso(&wittlog::log_iso(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn s_transform_is_multiplicative(a in mean_one_law(5), b in mean_one_law(5)) {
        let prod = wittlog::s_transform(&wittlog::free_mul_1d(&a, &b).unwrap()).unwrap();
        let sa = wittlog::s_transform(&a).unwrap();
        let sb = wittlog::s_transform(&b).unwrap();
        prop_assert_eq!(prod, sa.mul(&sb).unwrap());
    }
}
