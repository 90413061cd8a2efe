use std::fmt;
use std::str::FromStr;

use super::monomial::LoopMonomial;
use super::word::{Gen, Letter, MixedBraidWord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::domain(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Plus,
    Minus,
    Ordered,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Side::Plus),
            "-" | "minus" => Ok(Side::Minus),
            "ordered" => Ok(Side::Ordered),
            _ => Err(Error::domain(format!("side must be +, - or ordered, got {s:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
            Side::Ordered => "ordered",
        })
    }
}

/// Compositions of `k` into `parts` positive parts, lexicographic.
fn compositions(k: i64, parts: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if parts == 1 {
        prefix.push(k);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 1..=(k - parts as i64 + 1) {
        prefix.push(first);
        compositions(k - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

fn positive(k: i64, max_len: Option<usize>) -> Vec<LoopMonomial> {
    if k == 0 {
        return vec![LoopMonomial::from_exps(false, &[]).expect("empty monomial")];
    }
    let top = max_len.unwrap_or(k as usize).min(k as usize);
    let mut out = Vec::new();
    for parts in 1..=top {
        let mut comps = Vec::new();
        compositions(k, parts, &mut Vec::new(), &mut comps);
        out.extend(comps.iter().map(|c| LoopMonomial::from_exps(false, c).expect("valid composition")));
    }
    out
}

/// Gap-free unprimed monomials of a given level. Side `+` lists all
/// compositions of `k`; side `-` is the image of the `+` list under `f`
/// at level `-|k|`; `ordered` keeps nondecreasing exponent sequences.
pub fn enumerate_level(k: i64, side: Side, max_len: Option<usize>) -> Result<Vec<LoopMonomial>> {
    match side {
        Side::Plus => {
            if k < 0 {
                return Err(Error::domain("the positive side needs a level k >= 0"));
            }
            Ok(positive(k, max_len))
        }
        Side::Minus => Ok(positive(k.abs(), max_len).iter().map(LoopMonomial::f_map).collect()),
        Side::Ordered => {
            let base = if k >= 0 { positive(k, max_len) } else { positive(-k, max_len).iter().map(LoopMonomial::f_map).collect() };
            Ok(base.into_iter().filter(|m| m.exps().windows(2).all(|w| w[0] <= w[1])).collect())
        }
    }
}

/// The braid band move on the first moving strand:
/// `t^p · (m with indices shifted by one) · σ_1^{±1}` on one more strand.
pub fn bbm(m: &LoopMonomial, sign: Sign, p: u32) -> Result<MixedBraidWord> {
    if m.primed() {
        return Err(Error::domain("band moves are defined on unprimed monomials"));
    }
    if !m.is_gap_free() {
        return Err(Error::domain("band moves need a gap-free monomial"));
    }
    let shifted = m.shifted();
    let mut letters = vec![Letter::new(Gen::Axis, p as i64)];
    letters.extend(shifted.entries().iter().map(|&(i, k)| Letter::new(Gen::Loop(i), k)));
    letters.push(Letter::new(Gen::Sigma(1), sign.as_i64()));
    MixedBraidWord::new(m.n().max(m.entries().len()) + 1, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_monomial;

    fn names(v: &[LoopMonomial]) -> Vec<String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn level_two() {
        assert_eq!(names(&enumerate_level(2, Side::Plus, None).unwrap()), ["t^2", "t t1"]);
        assert_eq!(names(&enumerate_level(1, Side::Minus, None).unwrap()), ["t^-1"]);
        assert_eq!(names(&enumerate_level(0, Side::Plus, None).unwrap()), ["1"]);
    }

    #[test]
    fn level_four_count_and_order() {
        let v = enumerate_level(4, Side::Plus, None).unwrap();
        assert_eq!(v.len(), 8);
        assert_eq!(names(&v), ["t^4", "t t1^3", "t^2 t1^2", "t^3 t1", "t t1 t2^2", "t t1^2 t2", "t^2 t1 t2", "t t1 t2 t3"]);
        let o = enumerate_level(4, Side::Ordered, None).unwrap();
        assert_eq!(names(&o), ["t^4", "t t1^3", "t^2 t1^2", "t t1 t2^2", "t t1 t2 t3"]);
    }

    #[test]
    fn band_moves() {
        let t = parse_monomial("t", None).unwrap();
        assert_eq!(bbm(&t, Sign::Plus, 2).unwrap().to_string(), "t^2 t1 g1");
        let one = parse_monomial("1", None).unwrap();
        assert_eq!(bbm(&one, Sign::Minus, 3).unwrap().to_string(), "t^3 g1^-1");
        let tt1 = parse_monomial("t t1", None).unwrap();
        let w = bbm(&tt1, Sign::Plus, 2).unwrap();
        assert_eq!(w.to_string(), "t^2 t1 t2 g1");
        assert_eq!(w.n(), 3);
        assert!(bbm(&parse_monomial("t t2", None).unwrap(), Sign::Plus, 2).is_err());
        assert!(bbm(&parse_monomial("t t1'", None).unwrap(), Sign::Plus, 2).is_err());
    }
}
