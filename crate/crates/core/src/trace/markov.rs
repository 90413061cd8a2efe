//! The Markov trace on the primed basis. A word with top strand `N` is
//! `a · t'_N^k · g_N X` with `a` in `H_{1,N}` and `X` the rest of the top
//! tail block. Since `t'_N^k g_N = g_N t'_{N-1}^k`, the trace rules give
//! `tr = z · tr(t'_{N-1}^k X a)` when the block is present and
//! `s_k · tr(a)` otherwise.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock, RwLock};

use rustc_hash::FxHashMap;

use super::value::{SMonomial, TraceValue};
use crate::hecke::mult::{self, Lin, Step};
use crate::hecke::{AlgebraElement, CanonicalWord};
use crate::scalar::{LaurentPoly, RatFunc};

/// Which cyclic rotation is used when the top generator is peeled.
/// Both give the same trace; running both is a consistency check.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum PeelOrder {
    /// `tr(a g_N b) = z · tr(b a)`.
    #[default]
    LeftToRight,
    /// `tr(a g_N b) = z · tr(a b)`.
    RightToLeft,
}

type PolyTrace = BTreeMap<SMonomial, LaurentPoly>;

type Cache = RwLock<FxHashMap<(CanonicalWord, PeelOrder), Arc<PolyTrace>>>;

static CACHE: LazyLock<Cache> = LazyLock::new(Default::default);

fn add(acc: &mut PolyTrace, m: SMonomial, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                acc.remove(&m);
            }
        }
        None => {
            acc.insert(m, c);
        }
    }
}

fn trace_lin(lin: &Lin, order: PeelOrder, factor: &LaurentPoly, acc: &mut PolyTrace) {
    for (w, c) in lin {
        let coef = c * factor;
        for (m, d) in trace_word(w, order).iter() {
            add(acc, m.clone(), &coef * d);
        }
    }
}

fn trace_word(w: &CanonicalWord, order: PeelOrder) -> Arc<PolyTrace> {
    let key = (w.clone(), order);
    if let Some(v) = CACHE.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute(w, order));
    CACHE.write().unwrap().entry(key).or_insert(v).clone()
}

fn compute(w: &CanonicalWord, order: PeelOrder) -> PolyTrace {
    let mut out = PolyTrace::new();
    let top = w.top();
    if top == 0 {
        out.insert(SMonomial::s(w.loop_exp(0)), LaurentPoly::one());
        return out;
    }
    let (lower, k, l) = w.split_top(top);
    if l == 0 {
        let sk = SMonomial::s(k);
        for (m, c) in trace_word(&lower, order).iter() {
            out.insert(m.mul(&sk), c.clone());
        }
        return out;
    }
    let rest: Vec<Step> = (top + 1 - l..top).rev().map(|j| Step::G(j, false)).collect();
    let lin = match order {
        PeelOrder::LeftToRight => {
            let start = vec![(CanonicalWord::primed_loop(top - 1, k), LaurentPoly::one())];
            let mut steps = rest;
            steps.extend(mult::word_steps(&lower));
            mult::lin_times_steps(start, &steps)
        }
        PeelOrder::RightToLeft => {
            let mut steps = if k == 0 { Vec::new() } else { mult::loop_steps(top - 1, k) };
            steps.extend(rest);
            mult::lin_times_steps(vec![(lower, LaurentPoly::one())], &steps)
        }
    };
    trace_lin(&lin, order, &LaurentPoly::z(), &mut out);
    out
}

/// The Markov trace of an element.
pub fn trace_with(e: &AlgebraElement, order: PeelOrder) -> TraceValue {
    let mut v = TraceValue::zero();
    for (w, c) in e.terms() {
        for (m, d) in trace_word(w, order).iter() {
            v.add_term(m.clone(), c * &RatFunc::from_poly(d.clone()));
        }
    }
    v
}

pub fn trace(e: &AlgebraElement) -> TraceValue {
    trace_with(e, PeelOrder::LeftToRight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::scalar::rf;

    fn tr(s: &str, n: usize) -> TraceValue {
        trace(&AlgebraElement::project_braid(&parse_braid(s, Some(n)).unwrap()))
    }

    #[test]
    fn primed_monomials() {
        assert_eq!(tr("t^2 t1'^3", 2), TraceValue::monomial(SMonomial::from_indices([2, 3]), RatFunc::one()));
        assert_eq!(tr("1", 3), TraceValue::one());
    }

    #[test]
    fn inverse_generator() {
        assert_eq!(tr("g1^-1", 2), TraceValue::constant(&RatFunc::lambda() * &RatFunc::z()));
        assert_eq!(tr("g2^-1", 3), TraceValue::constant(&RatFunc::lambda() * &RatFunc::z()));
    }

    #[test]
    fn band_image_at_p3() {
        let expect = TraceValue::from_terms([(SMonomial::from_indices([1, 3]), rf("q*(q-1)")), (SMonomial::from_indices([4]), rf("((q-1)^2+q)*z"))]);
        assert_eq!(tr("t^3 t1 g1", 2), expect);
    }

    #[test]
    fn peel_orders_agree() {
        for s in ["t^3 t1 g1", "t g1 t^-2 g2 t g1^-1 g2", "t2 t1^-1 g1 g2^-1", "g1 g2 g3 t g1"] {
            let e = AlgebraElement::project_braid(&parse_braid(s, Some(4)).unwrap());
            assert_eq!(trace_with(&e, PeelOrder::LeftToRight), trace_with(&e, PeelOrder::RightToLeft), "{s}");
        }
    }
}
