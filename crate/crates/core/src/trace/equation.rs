use serde::{Deserialize, Serialize};

use super::invariant::{invariant_x, x_factor};
use super::markov::trace;
use super::value::{TraceTermJson, TraceValue, XValue};
use crate::braid::{bbm, LoopMonomial, Sign, WordJson};
use crate::error::{Error, Result};
use crate::hecke::AlgebraElement;
use crate::scalar::RatFunc;

/// `tr(m) = c · tr(bbm_±(m))` for one band move on the first moving strand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Equation {
    pub source: LoopMonomial,
    pub sign: Sign,
    pub p: u32,
    pub lhs: TraceValue,
    /// The band-move trace already multiplied by `coefficient`.
    pub rhs: TraceValue,
    /// The unscaled band-move trace.
    pub raw_rhs: TraceValue,
    pub coefficient: RatFunc,
}

impl Equation {
    /// `lhs - rhs`; the equation says this vanishes.
    pub fn residual(&self) -> TraceValue {
        self.lhs.sub(&self.rhs)
    }

    pub fn to_json(&self) -> EquationJson {
        EquationJson { source: self.source.to_word().to_json(), sign: self.sign.to_string(), lhs: self.lhs.to_json(), rhs: self.rhs.to_json() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    pub source: WordJson,
    pub sign: String,
    pub lhs: Vec<TraceTermJson>,
    pub rhs: Vec<TraceTermJson>,
}

/// The scalar `c` with `X(m) = X(bbm_±(m))  ⇔  tr(m) = c · tr(bbm_±(m))`.
/// With `K` the level of `m`, the exponent sums differ by `2K ± 1` and one
/// strand is added, so `c = Δ w^{2K±1}`, which is `λ^K / z` for `+` and
/// `λ^{K-1} / z` for `-`.
pub fn bbm_coefficient(level: i64, sign: Sign) -> RatFunc {
    let e = match sign {
        Sign::Plus => level,
        Sign::Minus => level - 1,
    };
    let l = RatFunc::lambda().pow(e).expect("λ is nonzero");
    l.checked_div(&RatFunc::z()).expect("z is nonzero")
}

/// Builds the band-move equation and checks it against the full
/// invariant equality `X(m) = X(bbm_±(m))`.
pub fn bbm_equation(m: &LoopMonomial, sign: Sign, p: u32) -> Result<Equation> {
    let b = bbm(m, sign, p)?;
    let n = b.n() - 1;
    let mw = m.to_word().with_n(n)?;
    let lhs = trace(&AlgebraElement::project_braid(&mw));
    let raw_rhs = trace(&AlgebraElement::project_braid(&b));
    let coefficient = bbm_coefficient(m.level(), sign);
    let rhs = raw_rhs.scale(&coefficient);
    let eq = Equation { source: m.clone(), sign, p, lhs, rhs, raw_rhs, coefficient };

    let x_diff = invariant_x(&mw).sub(&invariant_x(&b));
    let scaled = XValue::from_trace(&eq.residual(), &x_factor(n, mw.sigma_exponent_sum()));
    if x_diff != scaled {
        return Err(Error::domain(format!("band-move equation for {m} ({sign}) disagrees with the invariant")));
    }
    Ok(eq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_monomial;
    use crate::trace::SMonomial;

    #[test]
    fn empty_monomial_gives_s_p_equals_one() {
        for sign in [Sign::Plus, Sign::Minus] {
            let eq = bbm_equation(&parse_monomial("1", None).unwrap(), sign, 2).unwrap();
            assert_eq!(eq.lhs, TraceValue::one());
            assert_eq!(eq.rhs, TraceValue::s(2));
        }
    }

    #[test]
    fn single_loop_at_p2() {
        let eq = bbm_equation(&parse_monomial("t", None).unwrap(), Sign::Plus, 2).unwrap();
        assert_eq!(eq.lhs, TraceValue::s(1));
        assert_eq!(eq.coefficient, &RatFunc::lambda() * &RatFunc::z().inv().unwrap());
        assert!(eq.raw_rhs.monomials().all(|m| m.level() == 3));
        assert!(eq.raw_rhs.monomials().any(|m| *m == SMonomial::from_indices([1, 2])));
    }
}
