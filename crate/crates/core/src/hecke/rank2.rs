//! Products in `H_{1,2}(q)` through the commutative basis
//! `t^x t_1^y {1, g}`. The rewriting rules moving `g` past `t^{±1}`,
//! `t_1^{±1}` follow from `t_1 = g t g` and the quadratic relation; the
//! result is converted back to the primed basis `t^a t'_1^b {1, g}`.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock, RwLock};

use rustc_hash::FxHashMap;

use crate::scalar::LaurentPoly;

type Key = (i64, i64, bool);
type Sig = BTreeMap<Key, LaurentPoly>;

/// `(a, b, g, c)` stands for `c · t^a t'_1^b g^{[g]}`.
pub(crate) type PrimedTerms = Vec<(i64, i64, bool, LaurentPoly)>;

fn q() -> LaurentPoly {
    LaurentPoly::q()
}

fn qinv() -> LaurentPoly {
    LaurentPoly::monomial(1, -1, 0)
}

fn add(s: &mut Sig, k: Key, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match s.get_mut(&k) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                s.remove(&k);
            }
        }
        None => {
            s.insert(k, c);
        }
    }
}

fn times_g(s: &Sig, inv: bool) -> Sig {
    let one = LaurentPoly::one();
    let mut out = Sig::new();
    for (&(x, y, g), c) in s {
        match (g, inv) {
            (false, false) => add(&mut out, (x, y, true), c.clone()),
            (true, false) => {
                add(&mut out, (x, y, true), c * &(&q() - &one));
                add(&mut out, (x, y, false), c * &q());
            }
            (false, true) => {
                add(&mut out, (x, y, true), c * &qinv());
                add(&mut out, (x, y, false), c * &(&qinv() - &one));
            }
            (true, true) => add(&mut out, (x, y, false), c.clone()),
        }
    }
    out
}

/// Right multiplication by `t^{±1}` (`second = false`) or `t_1^{±1}`.
fn times_loop(s: &Sig, second: bool, inv: bool) -> Sig {
    let one = LaurentPoly::one();
    let mut out = Sig::new();
    for (&(x, y, g), c) in s {
        if !g {
            let k = match (second, inv) {
                (false, false) => (x + 1, y, false),
                (false, true) => (x - 1, y, false),
                (true, false) => (x, y + 1, false),
                (true, true) => (x, y - 1, false),
            };
            add(&mut out, k, c.clone());
            continue;
        }
        match (second, inv) {
            (false, false) => {
                add(&mut out, (x, y + 1, true), c * &qinv());
                add(&mut out, (x, y + 1, false), c * &(&qinv() - &one));
            }
            (true, false) => {
                add(&mut out, (x + 1, y, true), c * &q());
                add(&mut out, (x, y + 1, false), c * &(&q() - &one));
            }
            (false, true) => {
                add(&mut out, (x - 1, y, false), c * &(&q() - &one));
                add(&mut out, (x, y - 1, true), c * &q());
            }
            (true, true) => {
                add(&mut out, (x - 1, y, true), c * &qinv());
                add(&mut out, (x - 1, y, false), c * &(&qinv() - &one));
            }
        }
    }
    out
}

/// `t^a t'_1^b g^{[g]}` in the commutative basis.
fn phi(a: i64, b: i64, g: bool) -> Sig {
    let mut s = Sig::new();
    s.insert((0, 0, true), LaurentPoly::one());
    for _ in 0..b.abs() {
        s = times_loop(&s, false, b < 0);
    }
    s = times_g(&s, true);
    if g {
        s = times_g(&s, false);
    }
    s.into_iter().map(|((x, y, gg), c)| ((x + a, y, gg), c)).collect()
}

fn unit_inverse(d: &LaurentPoly) -> LaurentPoly {
    let ((a, b), c) = d.as_monomial().expect("change of basis block is a unit");
    let c: i64 = c.try_into().expect("unit coefficient");
    assert!(c == 1 || c == -1, "change of basis block is a unit");
    LaurentPoly::monomial(c, -a, -b)
}

/// Rewrites a commutative-basis element in the primed basis by
/// triangular elimination on the `t_1` exponent.
fn to_primed(mut s: Sig) -> PrimedTerms {
    let mut out: BTreeMap<Key, LaurentPoly> = BTreeMap::new();
    let mut guard = 0usize;
    while let Some((&(x, y, _), _)) = s.iter().max_by(|a, b| (a.0 .1.abs(), std::cmp::Reverse(a.0)).cmp(&(b.0 .1.abs(), std::cmp::Reverse(b.0)))) {
        guard += 1;
        assert!(guard < 100_000, "primed conversion did not terminate");
        let c0 = s.get(&(x, y, false)).cloned().unwrap_or_default();
        let c1 = s.get(&(x, y, true)).cloned().unwrap_or_default();
        let p0 = phi(0, y, false);
        let p1 = phi(0, y, true);
        let m = |p: &Sig, g: bool| p.get(&(0, y, g)).cloned().unwrap_or_default();
        let (m00, m01, m10, m11) = (m(&p0, false), m(&p0, true), m(&p1, false), m(&p1, true));
        let det = &(&m00 * &m11) - &(&m01 * &m10);
        let di = unit_inverse(&det);
        let d0 = &(&(&c0 * &m11) - &(&c1 * &m10)) * &di;
        let d1 = &(&(&c1 * &m00) - &(&c0 * &m01)) * &di;
        for (p, d) in [(&p0, &d0), (&p1, &d1)] {
            for (&(px, py, pg), pc) in p {
                add(&mut s, (px + x, py, pg), -(pc * d));
            }
        }
        assert!(!s.contains_key(&(x, y, false)) && !s.contains_key(&(x, y, true)), "primed conversion left a leading term");
        add(&mut out, (x, y, false), d0);
        add(&mut out, (x, y, true), d1);
    }
    out.into_iter().map(|((a, b, g), c)| (a, b, g, c)).collect()
}

type Cache = RwLock<FxHashMap<(i64, bool), Arc<PrimedTerms>>>;

static CACHE: LazyLock<Cache> = LazyLock::new(Default::default);

/// `t'_1^k · t^{±1}` in the primed basis of `H_{1,2}(q)`.
pub(crate) fn primed_times_t(k: i64, inv: bool) -> Arc<PrimedTerms> {
    if let Some(v) = CACHE.read().unwrap().get(&(k, inv)) {
        return v.clone();
    }
    let s = times_loop(&phi(0, k, false), false, inv);
    let v = Arc::new(to_primed(s));
    CACHE.write().unwrap().entry((k, inv)).or_insert(v).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rf;

    fn lp(s: &str) -> LaurentPoly {
        rf(s).to_laurent().unwrap()
    }

    #[test]
    fn quadratic_and_inverse() {
        let mut one = Sig::new();
        one.insert((0, 0, false), LaurentPoly::one());
        let g = times_g(&one, false);
        assert_eq!(times_g(&g, true), one);
        let gg = times_g(&g, false);
        assert_eq!(gg.get(&(0, 0, true)), Some(&lp("q-1")));
        assert_eq!(gg.get(&(0, 0, false)), Some(&lp("q")));
    }

    #[test]
    fn loops_commute() {
        let mut g = Sig::new();
        g.insert((0, 0, true), LaurentPoly::one());
        for (s1, i1) in [(false, false), (true, false), (false, true), (true, true)] {
            for (s2, i2) in [(false, false), (true, false), (false, true), (true, true)] {
                let a = times_loop(&times_loop(&g, s1, i1), s2, i2);
                let b = times_loop(&times_loop(&g, s2, i2), s1, i1);
                assert_eq!(a, b);
            }
        }
        let a = times_loop(&times_loop(&g, false, false), false, true);
        assert_eq!(a, g);
    }

    #[test]
    fn primed_loop_past_axis() {
        // t'_1 t = t t'_1 + (1 - q^-1) t t'_1 g + (q^-1 - 1) t'_1^2 g
        let v = primed_times_t(1, false);
        let expect = vec![(0, 2, true, lp("q^-1-1")), (1, 1, false, lp("1")), (1, 1, true, lp("1-q^-1"))];
        assert_eq!(*v, expect);
    }

    #[test]
    fn round_trip_through_primed() {
        for k in -3..=3 {
            for inv in [false, true] {
                let direct = times_loop(&phi(0, k, false), false, inv);
                let mut back = Sig::new();
                for (a, b, g, c) in primed_times_t(k, inv).iter() {
                    for (key, pc) in phi(*a, *b, *g) {
                        add(&mut back, key, &pc * c);
                    }
                }
                assert_eq!(back, direct, "k={k} inv={inv}");
            }
        }
    }
}
