use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hecke::coeff_string;
use crate::scalar::{HalfTwistScalar, RatFunc, RatFuncJson};

/// A commutative monomial in the `s_k`, stored as a sorted multiset of
/// nonzero indices. `s_0` is the scalar 1 and is never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SMonomial(Vec<i64>);

impl SMonomial {
    pub fn one() -> Self {
        SMonomial(Vec::new())
    }

    pub fn s(k: i64) -> Self {
        Self::from_indices([k])
    }

    pub fn from_indices(idx: impl IntoIterator<Item = i64>) -> Self {
        let mut v: Vec<i64> = idx.into_iter().filter(|&k| k != 0).collect();
        v.sort_unstable();
        SMonomial(v)
    }

    pub fn indices(&self) -> &[i64] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of indices with multiplicity.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn contains(&self, k: i64) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_indices(self.0.iter().chain(&other.0).copied())
    }

    /// Divides by `other` when it is a sub-multiset.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut rest = self.0.clone();
        for k in &other.0 {
            let i = rest.iter().position(|x| x == k)?;
            rest.remove(i);
        }
        Some(SMonomial(rest))
    }
}

impl Ord for SMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level().cmp(&other.level()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for k in &self.0 {
            write!(f, "s[{k}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn add_into<C: Clone>(m: &mut BTreeMap<SMonomial, C>, k: SMonomial, c: C, plus: impl Fn(&C, &C) -> C, is_zero: impl Fn(&C) -> bool) {
    if is_zero(&c) {
        return;
    }
    match m.get_mut(&k) {
        Some(v) => {
            *v = plus(v, &c);
            if is_zero(v) {
                m.remove(&k);
            }
        }
        None => {
            m.insert(k, c);
        }
    }
}

/// A polynomial in the `s_k` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TraceValue {
    terms: BTreeMap<SMonomial, RatFunc>,
}

impl TraceValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(SMonomial::one(), RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::monomial(SMonomial::one(), c)
    }

    pub fn s(k: i64) -> Self {
        Self::monomial(SMonomial::s(k), RatFunc::one())
    }

    pub fn monomial(m: SMonomial, c: RatFunc) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (SMonomial, RatFunc)>) -> Self {
        let mut v = Self::zero();
        for (m, c) in terms {
            v.add_term(m, c);
        }
        v
    }

    pub fn add_term(&mut self, m: SMonomial, c: RatFunc) {
        add_into(&mut self.terms, m, c, |a, b| a + b, RatFunc::is_zero);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &SMonomial> {
        self.terms.keys()
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

    pub fn coeff(&self, m: &SMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (m, c) in &other.terms {
            v.add_term(m.clone(), c.clone());
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, d)| (m.clone(), c * d)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut v = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                v.add_term(m1.mul(m2), c1 * c2);
            }
        }
        v
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Applies `f` to the coefficients.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn reduced(&self) -> Self {
        self.map_coeffs(RatFunc::reduced)
    }

    /// The set of weighted levels of the monomials present.
    pub fn levels(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(SMonomial::level).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn to_json(&self) -> Vec<TraceTermJson> {
        self.terms.iter().map(|(m, c)| TraceTermJson { monomial: m.indices().to_vec(), coeff: c.to_json() }).collect()
    }

    pub fn from_json(j: &[TraceTermJson]) -> Result<Self> {
        let mut v = Self::zero();
        for t in j {
            v.add_term(SMonomial::from_indices(t.monomial.iter().copied()), RatFunc::from_json(&t.coeff)?);
        }
        Ok(v)
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (c.is_one(), m.is_one()) {
                (true, _) => write!(f, "{m}")?,
                (false, true) => write!(f, "{}", coeff_string(c))?,
                (false, false) => write!(f, "{} * {m}", coeff_string(c))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceTermJson {
    pub monomial: Vec<i64>,
    pub coeff: RatFuncJson,
}

/// Coefficient `even + odd·√λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XTermJson {
    pub monomial: Vec<i64>,
    pub even: RatFuncJson,
    pub odd: RatFuncJson,
}

/// A polynomial in the `s_k` with coefficients in `Q(q, z)[√λ]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XValue {
    terms: BTreeMap<SMonomial, HalfTwistScalar>,
}

impl XValue {
    pub fn from_trace(v: &TraceValue, factor: &HalfTwistScalar) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in v.terms() {
            add_into(&mut terms, m.clone(), factor.scale(c), |a, b| a + b, HalfTwistScalar::is_zero);
        }
        XValue { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SMonomial, &HalfTwistScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Vec<XTermJson> {
        self.terms.iter().map(|(m, c)| XTermJson { monomial: m.indices().to_vec(), even: c.even.to_json(), odd: c.odd.to_json() }).collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), -c, |a, b| a + b, HalfTwistScalar::is_zero);
        }
        XValue { terms }
    }
}

impl fmt::Display for XValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "[{c}] * {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rf;

    #[test]
    fn monomials_commute_and_drop_s0() {
        assert_eq!(SMonomial::from_indices([3, 0, 1]), SMonomial::from_indices([1, 3]));
        assert_eq!(SMonomial::from_indices([3, 1]).to_string(), "s[1]s[3]");
        assert_eq!(SMonomial::from_indices([0]).to_string(), "1");
        assert_eq!(SMonomial::from_indices([-1, 2, 2]).level(), 3);
    }

    #[test]
    fn ordering_is_level_then_lex() {
        let a = SMonomial::from_indices([1, 1]);
        let b = SMonomial::from_indices([2]);
        let c = SMonomial::from_indices([3]);
        assert!(a < b && b < c);
    }

    #[test]
    fn printing_and_json() {
        let v = TraceValue::from_terms([
            (SMonomial::from_indices([1, 3]), rf("q^2-q")),
            (SMonomial::from_indices([4]), rf("z")),
            (SMonomial::one(), rf("1")),
        ]);
        assert_eq!(v.to_string(), "1 + (-q+q^2) * s[1]s[3] + z * s[4]");
        assert_eq!(TraceValue::from_json(&v.to_json()).unwrap(), v);
    }
}
