//! Right multiplication of basis words by generators.
//!
//! A word with top strand `N` factors as `lower · t'_N^k · g_N … g_{N-l+1}`
//! with `lower` in `H_{1,N}` and `t'_N` commuting with `H_N`. Multiplying
//! by `g_j` only touches the tail. Multiplying by `t^{±1}` either merges
//! into `t'_N` (when the tail block reaches `g_1`), passes through to
//! `lower`, or goes through the rank-two kernel conjugated up to strand
//! `N`. Every case recurses on a strictly lower strand, so the engine
//! terminates, and results are memoized.

use std::sync::{Arc, LazyLock, RwLock};

use rustc_hash::FxHashMap;

use super::rank2;
use super::word::CanonicalWord;
use crate::scalar::LaurentPoly;

pub(crate) type Lin = Vec<(CanonicalWord, LaurentPoly)>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Step {
    /// `g_j` or its inverse.
    G(usize, bool),
    /// `t` or its inverse.
    T(bool),
}

/// Accumulates a linear combination, dropping cancelled terms.
#[derive(Default)]
pub(crate) struct Acc(FxHashMap<CanonicalWord, LaurentPoly>);

impl Acc {
    pub fn add(&mut self, w: CanonicalWord, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&w) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.0.remove(&w);
                }
            }
            None => {
                self.0.insert(w, c);
            }
        }
    }

    pub fn into_lin(self) -> Lin {
        let mut v: Lin = self.0.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

fn qinv() -> LaurentPoly {
    LaurentPoly::monomial(1, -1, 0)
}

fn times_g(w: &CanonicalWord, j: usize, inv: bool) -> Lin {
    let ws = CanonicalWord::from_parts(w.loops().to_vec(), w.tail().times_s(j));
    let one = LaurentPoly::one();
    match (w.tail().is_ascent(j), inv) {
        (true, false) => vec![(ws, one)],
        (false, false) => vec![(w.clone(), &LaurentPoly::q() - &one), (ws, LaurentPoly::q())],
        (true, true) => vec![(ws, qinv()), (w.clone(), &qinv() - &one)],
        (false, true) => vec![(ws, one)],
    }
}

struct CruxTerm {
    h: CanonicalWord,
    coef: LaurentPoly,
    k: i64,
    l: usize,
}

type Cache<K, V> = LazyLock<RwLock<FxHashMap<K, Arc<V>>>>;

static T_CACHE: Cache<(CanonicalWord, bool), Lin> = LazyLock::new(Default::default);
static CRUX_CACHE: Cache<(usize, i64, bool, usize), Vec<CruxTerm>> = LazyLock::new(Default::default);

fn cached<K: std::hash::Hash + Eq + Clone, V>(cache: &Cache<K, V>, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
    if let Some(v) = cache.read().unwrap().get(key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    cache.write().unwrap().entry(key.clone()).or_insert(v).clone()
}

/// `t'_N^k t^{±1} g_N … g_{N-l+1}` as a sum of `h · t'_N^{k'} · (block of length l')`
/// with `h` in `H_{1,N}`. Requires `1 ≤ N`, `l < N`.
fn crux(top: usize, k: i64, inv: bool, l: usize) -> Arc<Vec<CruxTerm>> {
    cached(&CRUX_CACHE, &(top, k, inv, l), || {
        let mut out = Vec::new();
        for (a, b, g, c) in rank2::primed_times_t(k, inv).iter() {
            let (a, b) = (*a, *b);
            if !g {
                out.push(CruxTerm { h: CanonicalWord::primed_loop(0, a), coef: c.clone(), k: b, l });
                continue;
            }
            // u g_1 u^{-1} · block, u = g_N … g_2, expanded in the finite Hecke algebra.
            let mut steps: Vec<Step> = (2..=top).rev().map(|j| Step::G(j, false)).collect();
            steps.push(Step::G(1, false));
            steps.extend((2..=top).map(|j| Step::G(j, true)));
            steps.extend((top + 1 - l..=top).rev().map(|j| Step::G(j, false)));
            let y = lin_times_steps(vec![(CanonicalWord::identity(), LaurentPoly::one())], &steps);
            for (yw, beta) in y {
                let (v, ly) = yw.tail().split_top(top);
                let h = CanonicalWord::from_parts(if a == 0 { Vec::new() } else { vec![(0, a)] }, v);
                out.push(CruxTerm { h, coef: &beta * c, k: b, l: ly });
            }
        }
        out
    })
}

fn times_t(w: &CanonicalWord, inv: bool) -> Arc<Lin> {
    cached(&T_CACHE, &(w.clone(), inv), || {
        let eps = if inv { -1 } else { 1 };
        let top = w.top();
        if top == 0 {
            return vec![(w.with_top_loop(0, w.loop_exp(0) + eps), LaurentPoly::one())];
        }
        let (lower, k, l) = w.split_top(top);
        if l == top {
            return vec![(w.with_top_loop(top, k + eps), LaurentPoly::one())];
        }
        if k == 0 {
            return times_t(&lower, inv).iter().map(|(u, c)| (u.attach_top(top, 0, l), c.clone())).collect();
        }
        let mut acc = Acc::default();
        for term in crux(top, k, inv, l).iter() {
            for (u, c) in word_times_word(&lower, &term.h) {
                acc.add(u.attach_top(top, term.k, term.l), &c * &term.coef);
            }
        }
        acc.into_lin()
    })
}

/// Generator steps spelling a basis word, left to right.
pub(crate) fn word_steps(w: &CanonicalWord) -> Vec<Step> {
    let mut steps = Vec::new();
    for &(i, k) in w.loops() {
        steps.extend(loop_steps(i, k));
    }
    steps.extend(w.tail().reduced_word().into_iter().map(|j| Step::G(j, false)));
    steps
}

/// `t'_i^k = g_i … g_1 t^k g_1^{-1} … g_i^{-1}`.
pub(crate) fn loop_steps(i: usize, k: i64) -> Vec<Step> {
    let mut steps: Vec<Step> = (1..=i).rev().map(|j| Step::G(j, false)).collect();
    steps.extend((0..k.abs()).map(|_| Step::T(k < 0)));
    steps.extend((1..=i).map(|j| Step::G(j, true)));
    steps
}

pub(crate) fn lin_times_steps(mut cur: Lin, steps: &[Step]) -> Lin {
    for &s in steps {
        let mut acc = Acc::default();
        for (w, c) in &cur {
            match s {
                Step::G(j, inv) => {
                    for (u, d) in times_g(w, j, inv) {
                        acc.add(u, c * &d);
                    }
                }
                Step::T(inv) => {
                    for (u, d) in times_t(w, inv).iter() {
                        acc.add(u.clone(), c * d);
                    }
                }
            }
        }
        cur = acc.into_lin();
    }
    cur
}

pub(crate) fn word_times_word(a: &CanonicalWord, b: &CanonicalWord) -> Lin {
    if b.is_identity() {
        return vec![(a.clone(), LaurentPoly::one())];
    }
    lin_times_steps(vec![(a.clone(), LaurentPoly::one())], &word_steps(b))
}
