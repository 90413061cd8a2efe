use super::markov::trace;
use super::value::XValue;
use crate::braid::MixedBraidWord;
use crate::hecke::AlgebraElement;
use crate::scalar::{delta, HalfTwistScalar};

/// `Δ^{n-1} w^e` for a braid on `n` strands with exponent sum `e`.
pub fn x_factor(n: usize, e: i64) -> HalfTwistScalar {
    &delta().pow((n - 1) as u32) * &HalfTwistScalar::w_pow(e)
}

/// The invariant `X = Δ^{n-1} (√λ)^e tr(π(w))` of the closure of `w`.
pub fn invariant_x(w: &MixedBraidWord) -> XValue {
    let t = trace(&AlgebraElement::project_braid(w));
    XValue::from_trace(&t, &x_factor(w.n(), w.sigma_exponent_sum()))
}
