use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::mult::{self, Lin, Step};
use super::perm::Perm;
use super::word::CanonicalWord;
use crate::braid::{compare_order, Gen, Letter, MixedBraidWord};
use crate::error::{Error, Result};
use crate::scalar::{LaurentPoly, RatFunc, RatFuncJson};

/// A finite linear combination of basis words of `H_{1,n}(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<CanonicalWord, RatFunc>,
}

fn add_term(terms: &mut BTreeMap<CanonicalWord, RatFunc>, w: CanonicalWord, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&w) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                terms.remove(&w);
            }
        }
        None => {
            terms.insert(w, c);
        }
    }
}

fn check_letter(n: usize, l: &Letter) -> Result<()> {
    let bad = match l.gen {
        Gen::Axis => None,
        Gen::Sigma(i) if i == 0 || i >= n => Some(i),
        Gen::Loop(i) | Gen::PrimedLoop(i) if i >= n => Some(i),
        _ => None,
    };
    match bad {
        Some(index) => Err(Error::IndexOutOfRange { index, n }),
        None => Ok(()),
    }
}

fn letter_steps(l: &Letter) -> Vec<Step> {
    match l.gen {
        Gen::Axis => (0..l.exp.abs()).map(|_| Step::T(l.exp < 0)).collect(),
        Gen::Sigma(j) => (0..l.exp.abs()).map(|_| Step::G(j, l.exp < 0)).collect(),
        Gen::PrimedLoop(i) => mult::loop_steps(i, l.exp),
        Gen::Loop(i) => {
            let inv = l.exp < 0;
            let mut steps = Vec::new();
            for _ in 0..l.exp.abs() {
                steps.extend((1..=i).rev().map(|j| Step::G(j, inv)));
                steps.push(Step::T(inv));
                steps.extend((1..=i).map(|j| Step::G(j, inv)));
            }
            steps
        }
    }
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n: n.max(1), terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_word(n.max(1), CanonicalWord::identity()).expect("identity fits")
    }

    pub fn from_word(n: usize, w: CanonicalWord) -> Result<Self> {
        Self::from_terms(n, [(w, RatFunc::one())])
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (CanonicalWord, RatFunc)>) -> Result<Self> {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            if w.min_strands() > e.n {
                return Err(Error::IndexOutOfRange { index: w.top(), n: e.n });
            }
            add_term(&mut e.terms, w, c);
        }
        Ok(e)
    }

    fn from_lin_sum(n: usize, parts: impl IntoIterator<Item = (RatFunc, Lin)>) -> Self {
        let mut terms = BTreeMap::new();
        for (c, lin) in parts {
            for (w, d) in lin {
                add_term(&mut terms, w, &c * &RatFunc::from_poly(d));
            }
        }
        AlgebraElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalWord, &RatFunc)> {
        self.terms.iter()
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

    pub fn coeff(&self, w: &CanonicalWord) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn words(&self) -> impl Iterator<Item = &CanonicalWord> {
        self.terms.keys()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        Ok(AlgebraElement { n: self.n, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        for (w, d) in &self.terms {
            add_term(&mut terms, w.clone(), c * d);
        }
        AlgebraElement { n: self.n, terms }
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn times_steps(&self, steps: &[Step]) -> Self {
        if steps.is_empty() {
            return self.clone();
        }
        let parts = self.terms.iter().map(|(w, c)| (c.clone(), mult::lin_times_steps(vec![(w.clone(), LaurentPoly::one())], steps)));
        Self::from_lin_sum(self.n, parts)
    }

    /// Right multiplication by a single letter (any generator, any exponent).
    pub fn mul_letter(&self, l: &Letter) -> Result<Self> {
        check_letter(self.n, l)?;
        Ok(self.times_steps(&letter_steps(l)))
    }

    /// Right multiplication by `t^{±1}` or `g_i^{±1}`.
    pub fn mul_generator(&self, gen: Gen, inverse: bool) -> Result<Self> {
        match gen.normalized() {
            g @ (Gen::Axis | Gen::Sigma(_)) => self.mul_letter(&Letter::new(g, if inverse { -1 } else { 1 })),
            _ => Err(Error::domain("mul_generator takes t or g_i; use mul_letter for loops")),
        }
    }

    /// The image of a braid word: letters folded from the identity.
    pub fn project_braid(w: &MixedBraidWord) -> Self {
        let steps: Vec<Step> = w.letters().iter().flat_map(letter_steps).collect();
        Self::identity(w.n()).times_steps(&steps)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut parts = Vec::new();
        for (wb, cb) in &other.terms {
            for (wa, ca) in &self.terms {
                parts.push((ca * cb, mult::word_times_word(wa, wb)));
            }
        }
        Ok(Self::from_lin_sum(self.n, parts))
    }

    /// `t_i^k` in the primed basis.
    pub fn expand_unprimed(i: usize, k: i64, n: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Self::identity(n).times_steps(&letter_steps(&Letter::new(Gen::Loop(i), k))))
    }

    /// The same element in `H_{1,n_new}`.
    pub fn inject(&self, n_new: usize) -> Result<Self> {
        if n_new < self.n {
            return Err(Error::domain(format!("cannot inject {} strands into {n_new}", self.n)));
        }
        Ok(AlgebraElement { n: n_new, terms: self.terms.clone() })
    }

    /// Coefficients in reduced form.
    pub fn reduced(&self) -> Self {
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), c.reduced())).collect() }
    }

    /// Terms in display order: loop profile order, then tail length.
    pub fn sorted_terms(&self) -> Vec<(&CanonicalWord, &RatFunc)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| compare_order(&a.0.profile(), &b.0.profile()).then(a.0.tail().length().cmp(&b.0.tail().length())).then(a.0.cmp(b.0)));
        v
    }

    pub fn to_json(&self) -> ElementJson {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| TermJson { word: w.to_string(), loops: w.loops().to_vec(), tail: w.tail().blocks(), coeff: c.to_json() })
            .collect();
        ElementJson { n: self.n, terms }
    }

    pub fn from_json(j: &ElementJson) -> Result<Self> {
        let mut terms = Vec::new();
        for t in &j.terms {
            terms.push((CanonicalWord::new(t.loops.clone(), Perm::from_blocks(&t.tail))?, RatFunc::from_json(&t.coeff)?));
        }
        Self::from_terms(j.n, terms)
    }
}

/// Writes a coefficient, parenthesized unless it is a single token.
pub(crate) fn coeff_string(c: &RatFunc) -> String {
    let s = c.to_string();
    let simple = !s.contains('/') && !s[1..].contains(['+', '-']);
    if simple {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} * {w}", coeff_string(c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub loops: Vec<(usize, i64)>,
    pub tail: Vec<(usize, usize)>,
    pub coeff: RatFuncJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::scalar::rf;

    fn proj(s: &str, n: usize) -> AlgebraElement {
        AlgebraElement::project_braid(&parse_braid(s, Some(n)).unwrap())
    }

    fn word(loops: &[(usize, i64)], blocks: &[(usize, usize)]) -> CanonicalWord {
        CanonicalWord::new(loops.to_vec(), Perm::from_blocks(blocks)).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let e = proj("g1", 2).mul_generator(Gen::Sigma(1), false).unwrap();
        let expect = AlgebraElement::from_terms(2, [(word(&[], &[(1, 1)]), rf("q-1")), (word(&[], &[]), rf("q"))]).unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn axis_passes_high_generators() {
        let e = proj("g2", 3).mul_generator(Gen::Axis, false).unwrap();
        assert_eq!(e, AlgebraElement::from_word(3, word(&[(0, 1)], &[(2, 1)])).unwrap());
    }

    #[test]
    fn axis_through_g1_becomes_primed_loop() {
        let e = proj("g1", 2).mul_generator(Gen::Axis, false).unwrap();
        assert_eq!(e, AlgebraElement::from_word(2, word(&[(1, 1)], &[(1, 1)])).unwrap());
    }

    #[test]
    fn unprimed_loop_expansion() {
        let e = AlgebraElement::expand_unprimed(1, 1, 2).unwrap();
        let expect = AlgebraElement::from_terms(2, [(word(&[(1, 1)], &[]), rf("q")), (word(&[(1, 1)], &[(1, 1)]), rf("q-1"))]).unwrap();
        assert_eq!(e, expect);
        assert_eq!(e, proj("t1", 2));
    }

    #[test]
    fn type_b_relation() {
        assert_eq!(proj("g1 t g1 t", 2), proj("t g1 t g1", 2));
        assert_eq!(proj("g1 t g1 t", 4), proj("t g1 t g1", 4));
    }

    #[test]
    fn primed_loops_are_basis_words() {
        assert_eq!(proj("g1 t g1^-1", 2), AlgebraElement::from_word(2, word(&[(1, 1)], &[])).unwrap());
        let a = AlgebraElement::from_word(2, word(&[(0, 1)], &[])).unwrap();
        let b = AlgebraElement::from_word(2, word(&[(1, 1)], &[])).unwrap();
        assert_eq!(a.mul(&b).unwrap(), AlgebraElement::from_word(2, word(&[(0, 1), (1, 1)], &[])).unwrap());
    }

    #[test]
    fn homomorphism_on_samples() {
        let words = ["t g1 t^-1 g2", "g2 t g1^-1 t^2", "t2' g1 t^-1", "g1 g2 g1 t g3^-1 t"];
        for u in words {
            for v in words {
                let lhs = proj(u, 4).mul(&proj(v, 4)).unwrap();
                let rhs = proj(&format!("{u} {v}"), 4);
                assert_eq!(lhs, rhs, "{u} * {v}");
            }
        }
    }

    #[test]
    fn display_and_json() {
        let e = proj("g1", 2).mul_generator(Gen::Sigma(1), false).unwrap();
        assert_eq!(e.to_string(), "q * 1 + (-1+q) * g1");
        let j = e.to_json();
        assert_eq!(AlgebraElement::from_json(&j).unwrap(), e);
    }
}
