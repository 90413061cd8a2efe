use std::cmp::Ordering;
use std::fmt;

use super::word::{Gen, Letter, MixedBraidWord};
use crate::error::{Error, Result};

/// Product of looping elements `t_{i_1}^{k_1} … t_{i_r}^{k_r}` (or the
/// primed `t'_i`) with strictly increasing indices and nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LoopMonomial {
    primed: bool,
    n: usize,
    entries: Vec<(usize, i64)>,
}

impl LoopMonomial {
    pub fn new(primed: bool, n: usize, entries: Vec<(usize, i64)>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::domain("loop indices must strictly increase"));
            }
        }
        if entries.iter().any(|e| e.1 == 0) {
            return Err(Error::domain("loop exponents must be nonzero"));
        }
        let need = entries.last().map_or(1, |e| e.0 + 1);
        if n < need {
            return Err(Error::IndexOutOfRange { index: need - 1, n });
        }
        Ok(LoopMonomial { primed, n, entries })
    }

    /// Gap-free monomial `t^{k_0} t_1^{k_1} … t_m^{k_m}` on `m+1` strands.
    pub fn from_exps(primed: bool, exps: &[i64]) -> Result<Self> {
        Self::new(primed, exps.len().max(1), exps.iter().copied().enumerate().collect())
    }

    pub fn primed(&self) -> bool {
        self.primed
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(usize, i64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_gap_free(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, e)| e.0 == i)
    }

    /// Exponents in index order.
    pub fn exps(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.1).collect()
    }

    /// The level: the sum of all exponents.
    pub fn level(&self) -> i64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(self.primed, n, self.entries.clone())
    }

    pub fn with_primed(&self, primed: bool) -> Self {
        LoopMonomial { primed, ..self.clone() }
    }

    pub fn to_word(&self) -> MixedBraidWord {
        let letters = self.entries.iter().map(|&(i, k)| {
            let g = if self.primed { Gen::PrimedLoop(i) } else { Gen::Loop(i) };
            Letter::new(g, k)
        });
        MixedBraidWord::new(self.n, letters).expect("validated monomial")
    }

    pub fn profile(&self) -> LoopProfile {
        LoopProfile::new(self.entries.clone())
    }

    pub fn f_map(&self) -> Self {
        LoopMonomial { entries: self.entries.iter().map(|&(i, k)| (i, -k)).collect(), ..self.clone() }
    }

    /// Every index shifted up by one, on one more strand.
    pub fn shifted(&self) -> Self {
        LoopMonomial { primed: self.primed, n: self.n + 1, entries: self.entries.iter().map(|&(i, k)| (i + 1, k)).collect() }
    }
}

impl fmt::Display for LoopMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Exponent data of a looping word with its braiding tail ignored: the
/// object the ordering compares.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LoopProfile {
    pub entries: Vec<(usize, i64)>,
}

impl LoopProfile {
    pub fn new(entries: Vec<(usize, i64)>) -> Self {
        LoopProfile { entries }
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Number of looping generators minus one, gaps closed; 0 when empty.
    pub fn ind(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }
}

/// The ordering on looping words: total exponent, then index count, then
/// the index pattern (a smaller index at the first difference makes the
/// word larger), then exponents compared from the highest position down
/// (smaller absolute value is smaller; on a tie the positive one is
/// smaller).
pub fn compare_order(a: &LoopProfile, b: &LoopProfile) -> Ordering {
    let by_total = a.total().cmp(&b.total());
    if by_total != Ordering::Equal {
        return by_total;
    }
    let by_ind = a.ind().cmp(&b.ind());
    if by_ind != Ordering::Equal {
        return by_ind;
    }
    for (x, y) in a.entries.iter().zip(&b.entries) {
        if x.0 != y.0 {
            return y.0.cmp(&x.0);
        }
    }
    for (x, y) in a.entries.iter().zip(&b.entries).rev() {
        if x.1 == y.1 {
            continue;
        }
        let by_abs = x.1.abs().cmp(&y.1.abs());
        if by_abs != Ordering::Equal {
            return by_abs;
        }
        return y.1.cmp(&x.1);
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(e: &[(usize, i64)]) -> LoopProfile {
        LoopProfile::new(e.to_vec())
    }

    #[test]
    fn documented_comparisons() {
        assert_eq!(compare_order(&prof(&[(0, 2)]), &prof(&[(0, 1), (1, 1)])), Ordering::Less);
        assert_eq!(compare_order(&prof(&[(0, 1), (2, 1)]), &prof(&[(0, 1), (1, 1)])), Ordering::Less);
        assert_eq!(compare_order(&prof(&[(0, 2), (1, 2)]), &prof(&[(0, 1), (1, 3)])), Ordering::Less);
        let w = prof(&[(0, -1), (3, 2)]);
        assert_eq!(compare_order(&w, &w), Ordering::Equal);
    }

    #[test]
    fn sign_breaks_absolute_ties() {
        // Same indices, top exponents ±2: the positive one is smaller.
        assert_eq!(compare_order(&prof(&[(0, -1), (1, 2)]), &prof(&[(0, 3), (1, -2)])), Ordering::Less);
    }

    #[test]
    fn monomial_validation() {
        assert!(LoopMonomial::new(false, 3, vec![(0, 1), (0, 2)]).is_err());
        assert!(LoopMonomial::new(false, 3, vec![(0, 0)]).is_err());
        assert!(LoopMonomial::new(false, 2, vec![(2, 1)]).is_err());
        let m = LoopMonomial::new(true, 4, vec![(0, 2), (2, -1)]).unwrap();
        assert!(!m.is_gap_free());
        assert_eq!(m.to_string(), "t^2 t2'^-1");
        assert_eq!(m.level(), 1);
    }
}
