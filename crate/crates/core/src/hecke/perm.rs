use std::fmt;

/// A permutation of `{0, 1, …}` in one-line notation with trailing fixed
/// points trimmed, so the same element has one representation for every
/// strand count. Generator `s_j` (`j ≥ 1`) swaps positions `j-1` and `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity() -> Self {
        Perm(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0.get(i).map_or(i, |&v| v as usize)
    }

    fn trimmed(mut v: Vec<u8>) -> Self {
        while v.last().is_some_and(|&x| x as usize == v.len() - 1) {
            v.pop();
        }
        Perm(v)
    }

    fn padded(&self, len: usize) -> Vec<u8> {
        let mut v = self.0.clone();
        while v.len() < len {
            v.push(v.len() as u8);
        }
        v
    }

    /// Highest generator index in a reduced word, 0 for the identity.
    pub fn top(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// True when `w s_j` is longer than `w`.
    pub fn is_ascent(&self, j: usize) -> bool {
        self.image(j - 1) < self.image(j)
    }

    pub fn times_s(&self, j: usize) -> Self {
        let mut v = self.padded(j + 1);
        v.swap(j - 1, j);
        Self::trimmed(v)
    }

    /// Splits `w = v · s_N s_{N-1} … s_{N-l+1}` with `v` fixing `N`.
    /// Returns `(v, l)`.
    pub fn split_top(&self, top: usize) -> (Perm, usize) {
        let v = self.padded(top + 1);
        let p = v.iter().position(|&x| x as usize == top).expect("top value present");
        let l = top - p;
        if l == 0 {
            return (self.clone(), 0);
        }
        let mut rest: Vec<u8> = v[..p].to_vec();
        rest.extend_from_slice(&v[p + 1..]);
        rest.push(top as u8);
        (Self::trimmed(rest), l)
    }

    /// Inverse of [`Perm::split_top`].
    pub fn attach_top(&self, top: usize, l: usize) -> Self {
        let mut v = self.padded(top + 1);
        for j in (top + 1 - l..=top).rev() {
            v.swap(j - 1, j);
        }
        Self::trimmed(v)
    }

    /// Reduced-word blocks `(head, length)`: the block `(i, k)` stands for
    /// `g_i g_{i-1} … g_{i-k+1}`; heads strictly increase.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        while !cur.is_identity() {
            let top = cur.top();
            let (v, l) = cur.split_top(top);
            debug_assert!(l > 0);
            out.push((top, l));
            cur = v;
        }
        out.reverse();
        out
    }

    pub fn from_blocks(blocks: &[(usize, usize)]) -> Self {
        let mut w = Perm::identity();
        for &(head, len) in blocks {
            for j in (head + 1 - len..=head).rev() {
                w = w.times_s(j);
            }
        }
        w
    }

    /// Reduced word as generator indices, left to right.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.blocks().into_iter().flat_map(|(h, l)| (h + 1 - l..=h).rev()).collect()
    }

    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        if blocks.is_empty() {
            return f.write_str("1");
        }
        for (bi, (h, l)) in blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str(" · ")?;
            }
            for (gi, j) in (h + 1 - l..=*h).rev().enumerate() {
                if gi > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "g{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_round_trip() {
        let w = Perm::identity().times_s(3).times_s(2).times_s(4);
        assert_eq!(w.blocks(), vec![(3, 2), (4, 1)]);
        assert_eq!(w.to_string(), "g3 g2 · g4");
        assert_eq!(Perm::from_blocks(&w.blocks()), w);
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn split_and_attach() {
        let w = Perm::from_blocks(&[(1, 1), (3, 2)]);
        let (v, l) = w.split_top(3);
        assert_eq!(l, 2);
        assert_eq!(v, Perm::from_blocks(&[(1, 1)]));
        assert_eq!(v.attach_top(3, 2), w);
    }

    #[test]
    fn every_s4_element_has_reduced_blocks() {
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![Perm::identity()];
        while let Some(w) = frontier.pop() {
            if !seen.insert(w.clone()) {
                continue;
            }
            assert_eq!(w.reduced_word().len(), w.length());
            assert_eq!(Perm::from_blocks(&w.blocks()), w);
            for j in 1..4 {
                frontier.push(w.times_s(j));
            }
        }
        assert_eq!(seen.len(), 24);
    }
}
