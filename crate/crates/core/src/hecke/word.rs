use std::fmt;

use super::perm::Perm;
use crate::braid::{Gen, Letter, LoopProfile, MixedBraidWord};
use crate::error::{Error, Result};

/// A basis word `t'_{i_1}^{k_1} … t'_{i_r}^{k_r} · T_w` of `H_{1,n}(q)`:
/// primed loops over strictly increasing indices followed by a reduced
/// tail. Words do not carry a strand count; see [`CanonicalWord::min_strands`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CanonicalWord {
    loops: Vec<(usize, i64)>,
    tail: Perm,
}

impl CanonicalWord {
    pub fn new(loops: Vec<(usize, i64)>, tail: Perm) -> Result<Self> {
        if loops.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::domain("loop indices must strictly increase"));
        }
        if loops.iter().any(|l| l.1 == 0) {
            return Err(Error::domain("loop exponents must be nonzero"));
        }
        Ok(CanonicalWord { loops, tail })
    }

    pub(crate) fn from_parts(loops: Vec<(usize, i64)>, tail: Perm) -> Self {
        debug_assert!(loops.windows(2).all(|w| w[0].0 < w[1].0) && loops.iter().all(|l| l.1 != 0));
        CanonicalWord { loops, tail }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// The single word `t'_i^k` (`t^k` for `i = 0`).
    pub fn primed_loop(i: usize, k: i64) -> Self {
        let loops = if k == 0 { Vec::new() } else { vec![(i, k)] };
        CanonicalWord { loops, tail: Perm::identity() }
    }

    pub fn from_tail(tail: Perm) -> Self {
        CanonicalWord { loops: Vec::new(), tail }
    }

    pub fn loops(&self) -> &[(usize, i64)] {
        &self.loops
    }

    pub fn tail(&self) -> &Perm {
        &self.tail
    }

    pub fn is_identity(&self) -> bool {
        self.loops.is_empty() && self.tail.is_identity()
    }

    pub fn loop_exp(&self, i: usize) -> i64 {
        self.loops.iter().find(|l| l.0 == i).map_or(0, |l| l.1)
    }

    /// Highest strand index touched by a loop or a tail generator.
    pub fn top(&self) -> usize {
        let l = self.loops.last().map_or(0, |l| l.0);
        l.max(self.tail.top())
    }

    pub fn min_strands(&self) -> usize {
        self.top() + 1
    }

    pub fn profile(&self) -> LoopProfile {
        LoopProfile::new(self.loops.clone())
    }

    /// Splits off strand `top`: `w = lower · t'_top^k · g_top … g_{top-l+1}`.
    pub fn split_top(&self, top: usize) -> (CanonicalWord, i64, usize) {
        let mut loops = self.loops.clone();
        let k = match loops.last() {
            Some(&(i, k)) if i == top => {
                loops.pop();
                k
            }
            _ => 0,
        };
        let (v, l) = self.tail.split_top(top);
        (CanonicalWord { loops, tail: v }, k, l)
    }

    /// Inverse of [`CanonicalWord::split_top`]; `self` must live below `top`.
    pub fn attach_top(&self, top: usize, k: i64, l: usize) -> CanonicalWord {
        let mut loops = self.loops.clone();
        if k != 0 {
            loops.push((top, k));
        }
        let tail = if l == 0 { self.tail.clone() } else { self.tail.attach_top(top, l) };
        CanonicalWord { loops, tail }
    }

    /// Replaces the exponent of the top loop `top` (removing it at zero).
    pub(crate) fn with_top_loop(&self, top: usize, k: i64) -> CanonicalWord {
        let mut loops = self.loops.clone();
        if loops.last().is_some_and(|l| l.0 == top) {
            loops.pop();
        }
        if k != 0 {
            loops.push((top, k));
        }
        CanonicalWord { loops, tail: self.tail.clone() }
    }

    /// The word as a braid word on `n` strands (primed loops and `g`s).
    pub fn to_braid_word(&self, n: usize) -> Result<MixedBraidWord> {
        let mut letters: Vec<Letter> = self.loops.iter().map(|&(i, k)| Letter::new(Gen::PrimedLoop(i), k)).collect();
        letters.extend(self.tail.reduced_word().into_iter().map(|j| Letter::new(Gen::Sigma(j), 1)));
        MixedBraidWord::new(n, letters)
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (idx, &(i, k)) in self.loops.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "t{i}'")?;
            if k != 1 {
                write!(f, "^{k}")?;
            }
        }
        if !self.tail.is_identity() {
            if !self.loops.is_empty() {
                f.write_str(" · ")?;
            }
            write!(f, "{}", self.tail)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
