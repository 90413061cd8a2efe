//! The algebra `H_{1,n}(q)` in the primed basis: loops `t'_i^k` over
//! increasing indices followed by a reduced finite Hecke tail.

mod element;
pub(crate) mod mult;
mod perm;
mod rank2;
mod word;

pub(crate) use element::coeff_string;
pub use element::{AlgebraElement, ElementJson, TermJson};
pub use perm::Perm;
pub use word::CanonicalWord;
