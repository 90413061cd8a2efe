//! Exact coefficients: Laurent polynomials, rational functions in `q`
//! and `z`, the constants `λ` and `Δ`, and the coefficient part of the
//! map `I`.

mod gcd;
mod half_twist;
mod poly;
mod ratfunc;

pub use gcd::{div_exact, gcd};
pub use half_twist::{delta, HalfTwistScalar};
pub use poly::{Exp, LaurentPoly};
pub use ratfunc::{rf, RatFunc, RatFuncJson};

use num_bigint::BigInt;

/// `λ z = (z + 1 - q) / q` as a Laurent polynomial.
fn lambda_z() -> LaurentPoly {
    LaurentPoly::from_terms([((-1, 1), BigInt::from(1)), ((-1, 0), BigInt::from(1)), ((0, 0), BigInt::from(-1))])
}

fn scalar_i_poly(p: &LaurentPoly) -> RatFunc {
    let Some((_, zmin)) = p.min_exps() else { return RatFunc::zero() };
    let (_, zmax) = p.max_exps().unwrap();
    let base = zmin.min(0);
    let lz = lambda_z();
    let mut powers = vec![LaurentPoly::one()];
    for _ in base..zmax {
        let next = powers.last().unwrap() * &lz;
        powers.push(next);
    }
    let mut num = LaurentPoly::zero();
    for ((a, b), c) in p.terms() {
        let term = powers[(b - base) as usize].shift(-a, 0).scale(c);
        num = &num + &term;
    }
    if base == 0 {
        return RatFunc::from_poly(num);
    }
    // (λz)^base with base < 0 is q^{-base} / (z+1-q)^{-base}.
    let k = (-base) as u32;
    let den = lz.shift(1, 0).pow(k);
    RatFunc::new(num.shift(k as i32, 0), den).expect("nonzero denominator")
}

/// The field endomorphism `q ↦ q^{-1}`, `z ↦ λ z`.
pub fn scalar_i(a: &RatFunc) -> RatFunc {
    let n = scalar_i_poly(a.num());
    let d = scalar_i_poly(a.den());
    n.checked_div(&d).expect("image of a nonzero denominator is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_on_generators() {
        assert_eq!(scalar_i(&RatFunc::z()), &RatFunc::lambda() * &RatFunc::z());
        assert_eq!(scalar_i(&RatFunc::q()), rf("q^-1"));
    }

    #[test]
    fn i_inverts_lambda() {
        // Substituting q -> 1/q, z -> (z+1-q)/q into (z+1-q)/(qz) by hand
        // gives qz/(z+1-q).
        let img = scalar_i(&RatFunc::lambda());
        assert_eq!(img, rf("(q*z)/(z+1-q)"));
        assert!((&img * &RatFunc::lambda()).is_one());
    }

    #[test]
    fn i_on_lambda_power_over_z() {
        let l = RatFunc::lambda();
        for k in -3..=3i64 {
            let x = l.pow(k).unwrap().checked_div(&RatFunc::z()).unwrap();
            let expected = RatFunc::one().checked_div(&(&l.pow(k + 1).unwrap() * &RatFunc::z())).unwrap();
            assert_eq!(scalar_i(&x), expected, "k = {k}");
        }
    }

    #[test]
    fn i_is_involutive_on_generators() {
        assert_eq!(scalar_i(&scalar_i(&RatFunc::z())), RatFunc::z());
        assert_eq!(scalar_i(&scalar_i(&RatFunc::q())), RatFunc::q());
    }
}
