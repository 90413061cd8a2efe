use rand::Rng;

use crate::braid::{Gen, Letter, MixedBraidWord};

/// A random word in `t^{±1}` and `σ_i^{±1}` on `n` strands.
pub fn word(rng: &mut impl Rng, n: usize, max_len: usize) -> MixedBraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Letter> = (0..len)
        .map(|_| {
            let exp = if rng.gen_bool(0.5) { 1 } else { -1 };
            let pick = rng.gen_range(0..n);
            let gen = if pick == 0 { Gen::Axis } else { Gen::Sigma(pick) };
            Letter::new(gen, exp)
        })
        .collect();
    MixedBraidWord::new(n, letters).expect("letters fit on n strands")
}

pub fn sign(rng: &mut impl Rng) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}
