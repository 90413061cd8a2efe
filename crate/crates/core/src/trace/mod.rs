//! The Markov trace, the invariant `X`, the map `I` on trace values and
//! the band-move equations.

mod equation;
mod imap;
mod invariant;
mod markov;
mod value;

pub use equation::{bbm_coefficient, bbm_equation, Equation, EquationJson};
pub use imap::{map_i, map_i_band};
pub use invariant::{invariant_x, x_factor};
pub use markov::{trace, trace_with, PeelOrder};
pub use value::{SMonomial, TraceTermJson, TraceValue, XTermJson, XValue};
