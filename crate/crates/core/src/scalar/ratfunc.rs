use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::gcd;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Rational function `num / den` in `q` and `z` over the integers.
///
/// Fractions are not reduced eagerly. Equality is cross-multiplication,
/// so a value may have many stored shapes; [`RatFunc::reduced`] gives the
/// canonical one, which is also what `Display` prints.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(num, den))
    }

    fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        let mut r = RatFunc { num, den };
        r.absorb_monomial_den();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::z())
    }

    /// `q^a z^b`.
    pub fn monomial(a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(1, a, b))
    }

    /// `λ = (z + 1 - q) / (q z)`.
    pub fn lambda() -> Self {
        let num = &(&LaurentPoly::z() + &LaurentPoly::one()) - &LaurentPoly::q();
        Self::from_parts(num, LaurentPoly::monomial(1, 1, 1))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the stored denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        gcd::div_exact(&self.num, &self.den)
    }

    /// Moves a monomial denominator `c q^a z^b` into the numerator and
    /// cancels integer content against a constant denominator.
    fn absorb_monomial_den(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let Some(((a, b), c)) = self.den.as_monomial() else { return };
        let c = c.clone();
        if a != 0 || b != 0 {
            self.num = self.num.shift(-a, -b);
        }
        let mut d = c.abs();
        if c.is_negative() {
            self.num = -&self.num;
        }
        if !d.is_one() {
            let g = self.num.content().gcd(&d);
            if !g.is_one() {
                self.num = self.num.div_int_exact(&g);
                d /= g;
            }
        }
        self.den = LaurentPoly::constant(d);
    }

    /// Canonical form: coprime parts, denominator with zero minimal
    /// exponents and a positive lowest term.
    pub fn reduced(&self) -> Self {
        if self.den.is_one() || self.num.is_zero() {
            return self.clone();
        }
        if self.den.as_monomial().is_some() {
            return Self::from_parts(self.num.clone(), self.den.clone());
        }
        let g = gcd::gcd(&self.num, &self.den);
        let (mut num, mut den) = if g.is_one() {
            (self.num.clone(), self.den.clone())
        } else {
            (gcd::div_exact(&self.num, &g).expect("gcd divides numerator"), gcd::div_exact(&self.den, &g).expect("gcd divides denominator"))
        };
        let (a, b) = den.min_exps().expect("nonzero denominator");
        if a != 0 || b != 0 {
            den = den.shift(-a, -b);
            num = num.shift(-a, -b);
        }
        if den.leading_sign_low() < 0 {
            den = -den;
            num = -num;
        }
        Self::from_parts(num, den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = u32::try_from(k).map_err(|_| Error::domain("exponent too large"))?;
        Ok(Self::from_parts(self.num.pow(k), self.den.pow(k)))
    }

    /// Scales by `q^a z^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        RatFunc { num: self.num.shift(a, b), den: self.den.clone() }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let op = |x: &LaurentPoly, y: &LaurentPoly| if negate { x - y } else { x + y };
        if self.den == other.den {
            let mut r = RatFunc { num: op(&self.num, &other.num), den: self.den.clone() };
            if r.num.is_zero() {
                r.den = LaurentPoly::one();
            }
            return r;
        }
        let num = op(&(&self.num * &other.den), &(&other.num * &self.den));
        Self::from_parts(num, &self.den * &other.den)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::from_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::int(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.den.is_one() {
            write!(f, "{}", r.num)
        } else {
            write!(f, "({})/({})", r.num, r.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExprParser::new(s).parse()
    }
}

/// Recursive-descent parser for expressions in `q`, `z` and `lambda`
/// with `+ - * / ^` and parentheses. It accepts the canonical output.
struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn new(s: &'a str) -> Self {
        ExprParser { src: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<RatFunc> {
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                if rhs.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let k = self.integer()?;
            let k = i64::try_from(k).or_else(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -k } else { k });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(RatFunc::z())
            }
            Some(b'l') if self.src[self.pos..].starts_with(b"lambda") => {
                self.pos += 6;
                Ok(RatFunc::lambda())
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunc::from_poly(LaurentPoly::constant(self.integer()?))),
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// JSON mirror of a rational function: canonical strings of the reduced
/// numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: String,
    pub den: String,
}

impl RatFunc {
    pub fn to_json(&self) -> RatFuncJson {
        let r = self.reduced();
        RatFuncJson { num: r.num.to_string(), den: r.den.to_string() }
    }

    pub fn from_json(j: &RatFuncJson) -> Result<Self> {
        let num: RatFunc = j.num.parse()?;
        let den: RatFunc = j.den.parse()?;
        num.checked_div(&den)
    }
}

/// Shorthand used throughout tests: parses or panics.
pub fn rf(s: &str) -> RatFunc {
    s.parse().unwrap_or_else(|e| panic!("bad rational function {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplication_equality() {
        assert_eq!(rf("(q^2-1)/(q-1)"), rf("q+1"));
        assert_ne!(rf("(q^2-1)/(q-1)"), rf("q-1"));
    }

    #[test]
    fn lambda_matches_definition() {
        assert_eq!(RatFunc::lambda(), rf("(z+1-q)/(q*z)"));
        assert!(RatFunc::lambda().is_laurent());
    }

    #[test]
    fn one_minus_lambda_q() {
        // 1 - (z+1-q)/z = (q-1)/z, worked by hand.
        let v = &RatFunc::one() - &(&RatFunc::lambda() * &RatFunc::q());
        assert_eq!(v, rf("(q-1)/z"));
        assert_eq!(v.to_string(), "-z^-1+q*z^-1");
    }

    #[test]
    fn canonical_print_of_inverse_lambda() {
        let v = RatFunc::lambda().inv().unwrap();
        assert_eq!(v.to_string(), "(q*z)/(1+z-q)");
        assert_eq!(rf(&v.to_string()), v);
    }

    #[test]
    fn reduction_cancels_common_factor() {
        let v = rf("((1+z-q)*(q+3))/((1+z-q)*(2*q-z))");
        assert_eq!(v.to_string(), "(-3-q)/(z-2*q)");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::zero().inv().unwrap_err(), Error::DivisionByZero);
        assert!("q/(q-q)".parse::<RatFunc>().is_err());
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn parse_errors_carry_position() {
        match "q + * z".parse::<RatFunc>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }
}
