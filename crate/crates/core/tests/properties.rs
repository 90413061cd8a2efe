use std::cmp::Ordering;

use proptest::prelude::*;

use lens_skein::braid::{compare_order, Gen, Letter, LoopMonomial, LoopProfile, MixedBraidWord};
use lens_skein::hecke::AlgebraElement;
use lens_skein::scalar::{scalar_i, RatFunc};
use lens_skein::trace::{map_i, trace, SMonomial, TraceValue};

fn poly() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-2i32..=2, -1i32..=2, -3i64..=3), 0..4)
        .prop_map(|terms| terms.into_iter().fold(RatFunc::zero(), |acc, (a, b, c)| &acc + &(&RatFunc::monomial(a, b) * &RatFunc::int(c))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly().prop_filter("nonzero denominator", |d| !d.is_zero())).prop_map(|(n, d)| n.checked_div(&d).unwrap())
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = MixedBraidWord> {
    prop::collection::vec((0..n, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(g, inv)| Letter::new(if g == 0 { Gen::Axis } else { Gen::Sigma(g) }, if inv { -1 } else { 1 }));
        MixedBraidWord::new(n, letters).unwrap()
    })
}

fn profile() -> impl Strategy<Value = LoopProfile> {
    prop::collection::btree_map(0usize..6, prop_oneof![-3i64..=-1, 1i64..=3], 0..5).prop_map(|m| LoopProfile::new(m.into_iter().collect()))
}

fn project(w: &MixedBraidWord) -> AlgebraElement {
    AlgebraElement::project_braid(w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfunc_text_round_trip(a in ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn scalar_i_is_a_ring_map(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(scalar_i(&(&a + &b)), &scalar_i(&a) + &scalar_i(&b));
        prop_assert_eq!(scalar_i(&(&a * &b)), &scalar_i(&a) * &scalar_i(&b));
    }

    #[test]
    fn f_is_an_involution(w in word(3, 8), exps in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 1..4)) {
        prop_assert_eq!(w.f_map().f_map(), w);
        let m = LoopMonomial::from_exps(false, &exps).unwrap();
        prop_assert_eq!(m.f_map().f_map(), m);
    }

    #[test]
    fn projection_is_multiplicative(a in word(3, 5), b in word(3, 5)) {
        let ab = project(&a.concat(&b).unwrap());
        prop_assert_eq!(ab, project(&a).mul(&project(&b)).unwrap());
    }

    #[test]
    fn trace_is_central(a in word(3, 5), b in word(3, 5)) {
        let ab = trace(&project(&a.concat(&b).unwrap()));
        let ba = trace(&project(&b.concat(&a).unwrap()));
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn axis_words_trace_to_one_variable(w in word(1, 8)) {
        let k: i64 = w.letters().iter().map(|l| l.exp).sum();
        let want = if k == 0 { TraceValue::one() } else { TraceValue::s(k) };
        prop_assert_eq!(trace(&project(&w)), want);
    }

    #[test]
    fn word_json_round_trip(w in word(4, 10)) {
        prop_assert_eq!(MixedBraidWord::from_json(&w.to_json()).unwrap(), w);
    }

    #[test]
    fn trace_json_round_trip(w in word(3, 6)) {
        let v = trace(&project(&w));
        prop_assert_eq!(TraceValue::from_json(&v.to_json()).unwrap(), v);
    }

    #[test]
    fn order_is_antisymmetric_and_transitive(a in profile(), b in profile(), c in profile()) {
        let ab = compare_order(&a, &b);
        prop_assert_eq!(ab, compare_order(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && compare_order(&b, &c) != Ordering::Greater {
            prop_assert_ne!(compare_order(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn map_i_is_additive_and_multiplicative(
        x in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..3),
        y in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..3),
        c in ratfunc(),
    ) {
        let p = 3;
        let a = TraceValue::monomial(SMonomial::from_indices(x), c.clone());
        let b = TraceValue::monomial(SMonomial::from_indices(y), RatFunc::one());
        let ia = map_i(&a, p).unwrap();
        let ib = map_i(&b, p).unwrap();
        prop_assert_eq!(map_i(&a.add(&b), p).unwrap(), ia.add(&ib));
        prop_assert_eq!(map_i(&a.mul(&b), p).unwrap(), ia.mul(&ib));
    }
}
