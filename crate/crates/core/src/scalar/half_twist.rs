use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfunc::RatFunc;

/// `even + odd·w` where `w` is a formal square root of `λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct HalfTwistScalar {
    pub even: RatFunc,
    pub odd: RatFunc,
}

impl HalfTwistScalar {
    pub fn new(even: RatFunc, odd: RatFunc) -> Self {
        HalfTwistScalar { even, odd }
    }

    pub fn from_even(even: RatFunc) -> Self {
        HalfTwistScalar { even, odd: RatFunc::zero() }
    }

    pub fn zero() -> Self {
        Self::from_even(RatFunc::zero())
    }

    pub fn one() -> Self {
        Self::from_even(RatFunc::one())
    }

    /// The generator `w = √λ`.
    pub fn w() -> Self {
        HalfTwistScalar { even: RatFunc::zero(), odd: RatFunc::one() }
    }

    /// `w^e` for any integer `e`, using `w^{-1} = λ^{-1} w`.
    pub fn w_pow(e: i64) -> Self {
        let half = e.div_euclid(2);
        let l = RatFunc::lambda().pow(half).expect("λ is nonzero");
        if e.rem_euclid(2) == 0 {
            Self::from_even(l)
        } else {
            HalfTwistScalar { even: RatFunc::zero(), odd: l }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Scales both parts by an ordinary rational function.
    pub fn scale(&self, c: &RatFunc) -> Self {
        HalfTwistScalar { even: &self.even * c, odd: &self.odd * c }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn reduced(&self) -> Self {
        HalfTwistScalar { even: self.even.reduced(), odd: self.odd.reduced() }
    }
}

impl Add for &HalfTwistScalar {
    type Output = HalfTwistScalar;
    fn add(self, rhs: &HalfTwistScalar) -> HalfTwistScalar {
        HalfTwistScalar { even: &self.even + &rhs.even, odd: &self.odd + &rhs.odd }
    }
}

impl Sub for &HalfTwistScalar {
    type Output = HalfTwistScalar;
    fn sub(self, rhs: &HalfTwistScalar) -> HalfTwistScalar {
        HalfTwistScalar { even: &self.even - &rhs.even, odd: &self.odd - &rhs.odd }
    }
}

impl Mul for &HalfTwistScalar {
    type Output = HalfTwistScalar;
    fn mul(self, rhs: &HalfTwistScalar) -> HalfTwistScalar {
        let lambda = RatFunc::lambda();
        let even = &(&self.even * &rhs.even) + &(&(&self.odd * &rhs.odd) * &lambda);
        let odd = &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even);
        HalfTwistScalar { even, odd }
    }
}

impl Neg for &HalfTwistScalar {
    type Output = HalfTwistScalar;
    fn neg(self) -> HalfTwistScalar {
        HalfTwistScalar { even: -&self.even, odd: -&self.odd }
    }
}

impl fmt::Display for HalfTwistScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "({})*w", self.odd),
            (false, false) => write!(f, "({})+({})*w", self.even, self.odd),
        }
    }
}

impl fmt::Debug for HalfTwistScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfTwistScalar({self})")
    }
}

/// `Δ = -(1 - λq) / (w (1 - q))`, stored as `odd·w` with
/// `odd = -(1 - λq) λ^{-1} / (1 - q)`.
pub fn delta() -> HalfTwistScalar {
    let lambda = RatFunc::lambda();
    let one = RatFunc::one();
    let top = -&(&one - &(&lambda * &RatFunc::q()));
    let bottom = &lambda * &(&one - &RatFunc::q());
    HalfTwistScalar { even: RatFunc::zero(), odd: top.checked_div(&bottom).expect("nonzero") }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rf;

    #[test]
    fn w_times_inverse_is_one() {
        assert_eq!(&HalfTwistScalar::w() * &HalfTwistScalar::w_pow(-1), HalfTwistScalar::one());
        assert_eq!(&HalfTwistScalar::w() * &HalfTwistScalar::w(), HalfTwistScalar::from_even(RatFunc::lambda()));
    }

    #[test]
    fn delta_w_z_is_one() {
        let v = &(&delta() * &HalfTwistScalar::w()).scale(&RatFunc::z());
        assert_eq!(*v, HalfTwistScalar::one());
    }

    #[test]
    fn delta_odd_part_simplifies() {
        // -(1-λq)/(λ(1-q)) with 1-λq = (q-1)/z collapses to 1/(λz).
        assert_eq!(delta().odd, rf("1/(lambda*z)"));
        assert_eq!(delta().odd, rf("q/(z+1-q)"));
    }

    #[test]
    fn delta_squared() {
        let d2 = &delta() * &delta();
        assert!(d2.odd.is_zero());
        assert_eq!(d2.even, rf("(1-lambda*q)^2/(lambda*(1-q)^2)"));
        assert_eq!(delta().pow(0), HalfTwistScalar::one());
    }
}
