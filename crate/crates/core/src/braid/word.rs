use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator of the mixed braid group `B_{1,n}` or one of the looping
/// shorthands `t_i`, `t'_i`. Index 0 of either loop kind is the axis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gen {
    Axis,
    Sigma(usize),
    Loop(usize),
    PrimedLoop(usize),
}

impl Gen {
    /// Folds `t_0`, `t'_0` into `Axis`.
    pub fn normalized(self) -> Gen {
        match self {
            Gen::Loop(0) | Gen::PrimedLoop(0) => Gen::Axis,
            g => g,
        }
    }

    /// Smallest strand count on which the generator is defined.
    pub fn min_strands(self) -> usize {
        match self {
            Gen::Axis => 1,
            Gen::Sigma(i) => i + 1,
            Gen::Loop(i) | Gen::PrimedLoop(i) => i + 1,
        }
    }

    fn token(self) -> String {
        match self {
            Gen::Axis => "t".to_string(),
            Gen::Sigma(i) => format!("g{i}"),
            Gen::Loop(i) => format!("t{i}"),
            Gen::PrimedLoop(i) => format!("t{i}'"),
        }
    }

    fn from_token(s: &str) -> Option<Gen> {
        if s == "t" {
            return Some(Gen::Axis);
        }
        if let Some(rest) = s.strip_prefix('g') {
            let i: usize = rest.parse().ok().filter(|_| rest.bytes().all(|b| b.is_ascii_digit()))?;
            return Some(Gen::Sigma(i));
        }
        let rest = s.strip_prefix('t')?;
        let (digits, primed) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let i: usize = digits.parse().ok()?;
        Some(if primed { Gen::PrimedLoop(i) } else { Gen::Loop(i) }.normalized())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: Gen,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: Gen, exp: i64) -> Self {
        Letter { gen: gen.normalized(), exp }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.gen.token())?;
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

/// A word in `B_{1,n}`: letters with nonzero exponents, adjacent equal
/// generators merged.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MixedBraidWord {
    n: usize,
    letters: Vec<Letter>,
}

fn merge_letters(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        let l = Letter::new(l.gen, l.exp);
        if l.exp == 0 {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.gen == l.gen => {
                last.exp += l.exp;
                if last.exp == 0 {
                    out.pop();
                }
            }
            _ => out.push(l),
        }
    }
    out
}

impl MixedBraidWord {
    pub fn new(n: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a mixed braid needs at least one moving strand"));
        }
        let letters = merge_letters(letters);
        for l in &letters {
            let bad = match l.gen {
                Gen::Axis => false,
                Gen::Sigma(i) => i == 0 || i >= n,
                Gen::Loop(i) | Gen::PrimedLoop(i) => i >= n,
            };
            if bad {
                let index = match l.gen {
                    Gen::Sigma(i) | Gen::Loop(i) | Gen::PrimedLoop(i) => i,
                    Gen::Axis => 0,
                };
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        Ok(MixedBraidWord { n, letters })
    }

    /// The smallest strand count carrying all letters.
    pub fn minimal(letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let letters = merge_letters(letters);
        let n = letters.iter().map(|l| l.gen.min_strands()).max().unwrap_or(1);
        Self::new(n, letters)
    }

    pub fn identity(n: usize) -> Self {
        MixedBraidWord { n: n.max(1), letters: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters on more strands.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(n, self.letters.iter().copied())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Self::new(self.n, self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| Letter { gen: l.gen, exp: -l.exp }).collect();
        MixedBraidWord { n: self.n, letters }
    }

    /// Replaces every looping shorthand by its defining word in `t` and
    /// the `σ_i`: `t_i = σ_i…σ_1 t σ_1…σ_i`, `t'_i = σ_i…σ_1 t σ_1^{-1}…σ_i^{-1}`.
    pub fn expand_loops(&self) -> Self {
        let mut out = Vec::new();
        for l in &self.letters {
            match l.gen {
                Gen::Axis | Gen::Sigma(_) => out.push(*l),
                Gen::PrimedLoop(i) => {
                    out.extend((1..=i).rev().map(|j| Letter::new(Gen::Sigma(j), 1)));
                    out.push(Letter::new(Gen::Axis, l.exp));
                    out.extend((1..=i).map(|j| Letter::new(Gen::Sigma(j), -1)));
                }
                Gen::Loop(i) => {
                    let s = l.exp.signum();
                    for _ in 0..l.exp.abs() {
                        if s > 0 {
                            out.extend((1..=i).rev().map(|j| Letter::new(Gen::Sigma(j), 1)));
                            out.push(Letter::new(Gen::Axis, 1));
                            out.extend((1..=i).map(|j| Letter::new(Gen::Sigma(j), 1)));
                        } else {
                            out.extend((1..=i).rev().map(|j| Letter::new(Gen::Sigma(j), -1)));
                            out.push(Letter::new(Gen::Axis, -1));
                            out.extend((1..=i).map(|j| Letter::new(Gen::Sigma(j), -1)));
                        }
                    }
                }
            }
        }
        MixedBraidWord { n: self.n, letters: merge_letters(out) }
    }

    /// Exponent sum of the `σ` letters after expanding loops: `t_i^k`
    /// contributes `2ik`, `t'_i^k` contributes nothing.
    pub fn sigma_exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l.gen {
                Gen::Sigma(_) => l.exp,
                Gen::Loop(i) => 2 * i as i64 * l.exp,
                Gen::Axis | Gen::PrimedLoop(_) => 0,
            })
            .sum()
    }

    /// The automorphism `f`: every exponent changes sign.
    pub fn f_map(&self) -> Self {
        let letters = self.letters.iter().map(|l| Letter { gen: l.gen, exp: -l.exp }).collect();
        MixedBraidWord { n: self.n, letters }
    }

    pub fn to_json(&self) -> WordJson {
        WordJson { n: self.n, letters: self.letters.iter().map(|l| (l.gen.token(), l.exp)).collect() }
    }

    pub fn from_json(j: &WordJson) -> Result<Self> {
        let mut letters = Vec::new();
        for (tok, exp) in &j.letters {
            let gen = Gen::from_token(tok).ok_or_else(|| Error::domain(format!("unknown generator {tok:?}")))?;
            if *exp == 0 {
                return Err(Error::domain("zero exponent in word"));
            }
            letters.push(Letter::new(gen, *exp));
        }
        Self::new(j.n, letters)
    }

    pub(crate) fn gen_from_token(s: &str) -> Option<Gen> {
        Gen::from_token(s)
    }
}

impl fmt::Display for MixedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// JSON mirror of a word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub n: usize,
    pub letters: Vec<(String, i64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_index_checked() {
        assert!(MixedBraidWord::new(2, [Letter::new(Gen::Sigma(2), 1)]).is_err());
        assert!(MixedBraidWord::new(3, [Letter::new(Gen::Sigma(2), 1)]).is_ok());
        assert!(MixedBraidWord::new(2, [Letter::new(Gen::Sigma(0), 1)]).is_err());
    }

    #[test]
    fn merging_and_cancellation() {
        let w = MixedBraidWord::new(2, [Letter::new(Gen::Sigma(1), 1), Letter::new(Gen::Sigma(1), -1), Letter::new(Gen::Axis, 2)]).unwrap();
        assert_eq!(w.to_string(), "t^2");
    }

    #[test]
    fn expansions() {
        let w = MixedBraidWord::minimal([Letter::new(Gen::PrimedLoop(1), 1)]).unwrap();
        assert_eq!(w.expand_loops().to_string(), "g1 t g1^-1");
        let w = MixedBraidWord::minimal([Letter::new(Gen::Loop(1), 1)]).unwrap();
        assert_eq!(w.expand_loops().to_string(), "g1 t g1");
        let w = MixedBraidWord::minimal([Letter::new(Gen::Loop(2), -1)]).unwrap();
        assert_eq!(w.expand_loops().to_string(), "g2^-1 g1^-1 t^-1 g1^-1 g2^-1");
        let w = MixedBraidWord::minimal([Letter::new(Gen::Axis, 3)]).unwrap();
        assert_eq!(w.expand_loops(), w);
    }

    #[test]
    fn exponent_sum_agrees_with_expansion() {
        let w = MixedBraidWord::minimal([
            Letter::new(Gen::Loop(2), 3),
            Letter::new(Gen::Sigma(1), -1),
            Letter::new(Gen::PrimedLoop(1), 2),
            Letter::new(Gen::Loop(1), -2),
        ])
        .unwrap();
        assert_eq!(w.sigma_exponent_sum(), w.expand_loops().sigma_exponent_sum());
        assert_eq!(w.f_map().sigma_exponent_sum(), -w.sigma_exponent_sum());
    }

    #[test]
    fn json_round_trip() {
        let w = MixedBraidWord::new(3, [Letter::new(Gen::Axis, -2), Letter::new(Gen::Sigma(1), 1), Letter::new(Gen::PrimedLoop(2), 3)]).unwrap();
        let j = w.to_json();
        assert_eq!(j.letters[2], ("t2'".to_string(), 3));
        assert_eq!(MixedBraidWord::from_json(&j).unwrap(), w);
    }
}
