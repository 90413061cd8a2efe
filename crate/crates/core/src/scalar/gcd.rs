//! Polynomial gcd and exact division in `Z[q, z]`.
//!
//! Polynomials are taken dense in `z` with coefficients dense in `q`.
//! The gcd runs a primitive pseudo-remainder sequence at both levels,
//! which keeps coefficient growth in check without modular machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Exp, LaurentPoly};

/// Dense polynomial in `q`, ascending, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Dense polynomial in `z` with `UPoly` coefficients, no trailing zeros.
type BPoly = Vec<UPoly>;

fn up_trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn up_is_one(a: &UPoly) -> bool {
    a.len() == 1 && a[0].is_one()
}

fn up_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    up_trim(out)
}

fn up_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    up_trim(out)
}

fn up_shift(a: &UPoly, k: usize) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(a);
    out
}

fn up_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn up_div_int(a: &UPoly, k: &BigInt) -> UPoly {
    a.iter().map(|c| c / k).collect()
}

fn up_primitive(a: &UPoly) -> UPoly {
    let c = up_content(a);
    if c.is_zero() || c.is_one() {
        return a.clone();
    }
    up_div_int(a, &c)
}

fn up_pseudo_rem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r = up_sub(&r.iter().map(|c| c * &lb).collect::<Vec<_>>(), &up_shift(&b.iter().map(|c| c * &lr).collect::<Vec<_>>(), shift));
    }
    r
}

fn up_normalize_sign(a: UPoly) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        a.into_iter().map(|c| -c).collect()
    } else {
        a
    }
}

fn up_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return up_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return up_normalize_sign(a.clone());
    }
    let c = up_content(a).gcd(&up_content(b));
    let (mut x, mut y) = (up_primitive(a), up_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // Constant divisor: primitive parts are coprime.
            return vec![c];
        }
        let r = up_pseudo_rem(&x, &y);
        x = y;
        y = up_primitive(&r);
    }
    up_normalize_sign(up_primitive(&x).into_iter().map(|v| v * &c).collect())
}

/// Exact division in `Z[q]`, `None` if `b` does not divide `a`.
fn up_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() == 1 {
        let d = &b[0];
        let mut out = Vec::with_capacity(a.len());
        for c in a {
            let (qt, rm) = c.div_rem(d);
            if !rm.is_zero() {
                return None;
            }
            out.push(qt);
        }
        return Some(out);
    }
    let mut r = a.clone();
    let lb = b.last().unwrap();
    if r.len() < b.len() {
        return None;
    }
    let mut quot = vec![BigInt::zero(); r.len() - b.len() + 1];
    while !r.is_empty() {
        if r.len() < b.len() {
            return None;
        }
        let (qt, rm) = r.last().unwrap().div_rem(lb);
        if !rm.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        quot[shift] = qt.clone();
        let sub: UPoly = up_shift(&b.iter().map(|c| c * &qt).collect::<Vec<_>>(), shift);
        r = up_sub(&r, &sub);
    }
    Some(up_trim(quot))
}

fn bp_trim(mut a: BPoly) -> BPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn bp_content(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = up_gcd(&g, c);
        if up_is_one(&g) {
            break;
        }
    }
    g
}

fn bp_div_up(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter().map(|x| up_div_exact(x, c).expect("content divides")).collect()
}

fn bp_primitive(a: &BPoly) -> BPoly {
    let c = bp_content(a);
    if c.is_empty() || up_is_one(&c) {
        return a.clone();
    }
    bp_div_up(a, &c)
}

fn bp_scale(a: &BPoly, c: &UPoly) -> BPoly {
    bp_trim(a.iter().map(|x| up_mul(x, c)).collect())
}

fn bp_sub(a: &BPoly, b: &BPoly) -> BPoly {
    let n = a.len().max(b.len());
    let empty = Vec::new();
    bp_trim((0..n).map(|i| up_sub(a.get(i).unwrap_or(&empty), b.get(i).unwrap_or(&empty))).collect())
}

fn bp_shift(a: &BPoly, k: usize) -> BPoly {
    let mut out = vec![Vec::new(); k];
    out.extend_from_slice(a);
    out
}

fn bp_pseudo_rem(a: &BPoly, b: &BPoly) -> BPoly {
    let lb = b.last().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r = bp_sub(&bp_scale(&r, &lb), &bp_shift(&bp_scale(b, &lr), shift));
        // Keep the remainder primitive; gcd only cares up to units.
        r = bp_primitive(&r);
    }
    r
}

fn bp_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = up_gcd(&bp_content(a), &bp_content(b));
    let (mut x, mut y) = (bp_primitive(a), bp_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = bp_pseudo_rem(&x, &y);
        x = y;
        y = bp_primitive(&r);
    }
    bp_scale(&bp_primitive(&x), &c)
}

fn bp_div_exact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quot: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    while !r.is_empty() {
        if r.len() < b.len() {
            return None;
        }
        let qt = up_div_exact(r.last().unwrap(), lb)?;
        let shift = r.len() - b.len();
        r = bp_sub(&r, &bp_shift(&bp_scale(b, &qt), shift));
        quot[shift] = qt;
    }
    Some(bp_trim(quot))
}

/// Converts to dense form after factoring out the minimal monomial.
fn to_dense(p: &LaurentPoly) -> (BPoly, Exp) {
    let (qa, zb) = p.min_exps().unwrap_or((0, 0));
    let (ma, mb) = p.max_exps().unwrap_or((0, 0));
    let mut out: BPoly = vec![Vec::new(); (mb - zb + 1) as usize];
    for ((a, b), c) in p.terms() {
        let row = &mut out[(b - zb) as usize];
        if row.is_empty() {
            *row = vec![BigInt::zero(); (ma - qa + 1) as usize];
        }
        row[(a - qa) as usize] = c.clone();
    }
    let out = out.into_iter().map(up_trim).collect();
    (bp_trim(out), (qa, zb))
}

fn from_dense(p: &BPoly, (qa, zb): Exp) -> LaurentPoly {
    let mut terms = Vec::new();
    for (j, row) in p.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(((qa + i as i32, zb + j as i32), c.clone()));
            }
        }
    }
    LaurentPoly::from_terms(terms)
}

/// Gcd in the Laurent ring, normalized to have minimal exponents zero
/// and a positive coefficient on its lowest term.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() && b.is_zero() {
        return LaurentPoly::zero();
    }
    let (da, _) = to_dense(a);
    let (db, _) = to_dense(b);
    let g = from_dense(&bp_gcd(&da, &db), (0, 0));
    if g.leading_sign_low() < 0 {
        -g
    } else {
        g
    }
}

/// Exact quotient `a / b` in the Laurent ring, `None` if not exact.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (da, sa) = to_dense(a);
    let (db, sb) = to_dense(b);
    let qt = bp_div_exact(&da, &db)?;
    Some(from_dense(&qt, (sa.0 - sb.0, sa.1 - sb.1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse::<crate::scalar::RatFunc>().unwrap().to_laurent().unwrap()
    }

    #[test]
    fn gcd_recovers_planted_factor() {
        let f = lp("1+z-q");
        let a = &f * &lp("q^2+3*z");
        let b = &f * &lp("q-z^2*q+7");
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = lp("6*q+6");
        let b = lp("4*q^2-4");
        assert_eq!(gcd(&a, &b), lp("2+2*q"));
    }

    #[test]
    fn coprime_inputs_have_unit_gcd() {
        assert!(gcd(&lp("q+z"), &lp("q-z")).is_one());
        assert!(gcd(&lp("q^3*z"), &lp("q+1")).is_one());
    }

    #[test]
    fn exact_division() {
        let f = lp("1+z-q");
        let g = lp("q^-2*z+5");
        assert_eq!(div_exact(&(&f * &g), &f), Some(g.clone()));
        assert_eq!(div_exact(&f, &lp("q+1")), None);
    }
}
