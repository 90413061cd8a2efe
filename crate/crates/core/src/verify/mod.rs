//! Named verification suites. Each suite checks a family of identities
//! exactly and reports the instances checked and every failure found.

mod algebra;
mod random;
mod system;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use algebra::{derived_rule_checks, Identity, LineForm};
pub use system::{lemma4_golden, triangular_entries, TriangularEntry};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Markov,
    Relations,
    Invariance,
    Eq15,
    Lemma2,
    Lemma3,
    Lemma4,
    Theorem9,
    Prop2,
    Grading,
    Triangular,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Markov,
        Suite::Relations,
        Suite::Invariance,
        Suite::Eq15,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Lemma4,
        Suite::Theorem9,
        Suite::Prop2,
        Suite::Grading,
        Suite::Triangular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Markov => "markov",
            Suite::Relations => "relations",
            Suite::Invariance => "invariance",
            Suite::Eq15 => "eq15",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Lemma4 => "lemma4",
            Suite::Theorem9 => "theorem9",
            Suite::Prop2 => "prop2",
            Suite::Grading => "grading",
            Suite::Triangular => "triangular",
        }
    }

    /// Default parameters, sized for a run of a few seconds to a minute.
    pub fn defaults(self) -> Params {
        let base = Params { n: 4, k: 3, p: None, samples: 200, seed: DEFAULT_SEED };
        match self {
            Suite::Invariance => Params { samples: 100, ..base },
            Suite::Eq15 | Suite::Lemma2 | Suite::Lemma3 => Params { n: 3, k: 5, ..base },
            Suite::Lemma4 => Params { k: 3, ..base },
            Suite::Grading => Params { k: 4, ..base },
            Suite::Triangular => Params { n: 3, k: 4, ..base },
            _ => base,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::domain(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const DEFAULT_SEED: u64 = 7;

/// Suite parameters. `n` bounds strands or looping indices, `k` bounds
/// levels or exponents, `p` selects the lens space (all of `{2, 3}` when
/// absent), `samples` and `seed` drive the random suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Params {
    pub n: usize,
    pub k: u32,
    pub p: Option<u32>,
    pub samples: usize,
    pub seed: u64,
}

impl Params {
    pub fn ps(&self) -> Vec<u32> {
        match self.p {
            Some(p) => vec![p],
            None => vec![2, 3],
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Findings that do not count as failures.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, params: String) -> Self {
        SuiteReport { suite: suite.name().into(), params, checked: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    fn check(&mut self, ok: bool, instance: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure { instance: instance(), detail: detail() });
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "suite {} ({}): {} checked, {} failed: {status}", self.suite, self.params, self.checked, self.failures.len())?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        if let Some(x) = self.first_failure() {
            writeln!(f, "first failure: {}", x.instance)?;
            writeln!(f, "  {}", x.detail)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, params: &Params) -> Result<SuiteReport> {
    match suite {
        Suite::Markov => algebra::markov(params),
        Suite::Relations => algebra::relations(params),
        Suite::Invariance => algebra::invariance(params),
        Suite::Eq15 | Suite::Lemma2 | Suite::Lemma3 => algebra::derived(suite, params),
        Suite::Lemma4 => system::lemma4(params),
        Suite::Theorem9 => system::theorem9(params),
        Suite::Prop2 => system::prop2(params),
        Suite::Grading => system::grading(params),
        Suite::Triangular => system::triangular(params),
    }
}
