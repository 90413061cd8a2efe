//! Braid words in `B_{1,n}`, looping monomials, the level enumerations,
//! the ordering on looping words, the map `f` and band moves.

mod enumerate;
mod monomial;
mod parse;
mod word;

pub use enumerate::{bbm, enumerate_level, Side, Sign};
pub use monomial::{compare_order, LoopMonomial, LoopProfile};
pub use parse::{as_monomial, parse_braid, parse_monomial, parse_word, Parsed};
pub use word::{Gen, Letter, MixedBraidWord, WordJson};
