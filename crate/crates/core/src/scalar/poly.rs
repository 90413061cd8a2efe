use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(a, b)` of the monomial `q^a z^b`.
pub type Exp = (i32, i32);

/// Laurent polynomial in `q` and `z` with integer coefficients.
///
/// Terms are kept sorted by `(a, b)` with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exp, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: vec![((a, b), c)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, BigInt)>) -> Self {
        let mut v: Vec<(Exp, BigInt)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|x| x.0);
        Self::from_sorted_with_dups(v)
    }

    fn from_sorted_with_dups(v: Vec<(Exp, BigInt)>) -> Self {
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The single term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(Exp, &BigInt)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    /// True for `±q^a z^b`, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((_, c)) if c.abs().is_one())
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        match self.terms.binary_search_by(|t| t.0.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Componentwise minimum of the exponents, `None` for zero.
    pub fn min_exps(&self) -> Option<Exp> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |(a, b), t| (a.min(t.0 .0), b.min(t.0 .1))))
    }

    pub fn max_exps(&self) -> Option<Exp> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |(a, b), t| (a.max(t.0 .0), b.max(t.0 .1))))
    }

    /// Multiplies by `q^da z^db`.
    pub fn shift(&self, da: i32, db: i32) -> Self {
        if da == 0 && db == 0 {
            return self.clone();
        }
        // Shifting preserves the lexicographic order of exponents.
        LaurentPoly { terms: self.terms.iter().map(|((a, b), c)| ((a + da, b + db), c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Divides every coefficient by `k`; the caller guarantees exactness.
    pub fn div_int_exact(&self, k: &BigInt) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % k).is_zero());
                    (*e, c / k)
                })
                .collect(),
        }
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Rewrites exponents through `f`; the result is re-sorted.
    pub fn map_exps(&self, f: impl Fn(Exp) -> Exp) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Sign of the first term in the canonical order.
    pub fn leading_sign_low(&self) -> i32 {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    /// Substitutes `z := 1`, leaving a Laurent polynomial in `q`.
    pub fn eval_z_one(&self) -> Self {
        self.map_exps(|(a, _)| (a, 0))
    }

    fn add_ref(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentPoly { terms: out }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(((a, b), c)) = other.as_monomial() {
            return self.shift(a, b).scale(c);
        }
        if let Some(((a, b), c)) = self.as_monomial() {
            return other.shift(a, b).scale(c);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                v.push(((e1.0 + e2.0, e1.1 + e2.1), c1 * c2));
            }
        }
        v.sort_unstable_by_key(|x| x.0);
        Self::from_sorted_with_dups(v)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32) -> fmt::Result {
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

/// Writes `c * q^a * z^b` compactly; `first` controls the leading `+`.
fn write_term(f: &mut fmt::Formatter<'_>, (a, b): Exp, c: &BigInt, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let abs = c.abs();
    let mut need_star = false;
    if !abs.is_one() || (a == 0 && b == 0) {
        write!(f, "{abs}")?;
        need_star = true;
    }
    if a != 0 {
        if need_star {
            f.write_str("*")?;
        }
        write_var(f, "q", a)?;
        need_star = true;
    }
    if b != 0 {
        if need_star {
            f.write_str("*")?;
        }
        write_var(f, "z", b)?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_term(f, *e, c, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn display_is_sorted_by_q_then_z() {
        let x = p(&[((0, 1), 1), ((1, 0), -1), ((0, 0), 1)]);
        assert_eq!(x.to_string(), "1+z-q");
        assert_eq!(p(&[((-1, -1), 1), ((-1, 0), 1), ((0, -1), -1)]).to_string(), "q^-1*z^-1+q^-1-z^-1");
        assert_eq!(p(&[((2, 0), 3)]).to_string(), "3*q^2");
        assert_eq!(p(&[((0, 0), -1)]).to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = p(&[((1, 0), 1), ((0, 0), -1)]);
        let d = &x - &x;
        assert!(d.is_zero());
        let y = p(&[((1, 0), 1), ((0, 0), 1)]);
        // (q-1)(q+1) = q^2 - 1
        assert_eq!(&x * &y, p(&[((2, 0), 1), ((0, 0), -1)]));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = p(&[((1, 0), 1), ((0, 1), -2), ((-1, 0), 1)]);
        let mut acc = LaurentPoly::one();
        for k in 0..6 {
            assert_eq!(x.pow(k), acc);
            acc = &acc * &x;
        }
    }
}
