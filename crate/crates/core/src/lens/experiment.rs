use std::fmt;

use serde::Serialize;

use super::reduce::{reduce_rows, solve_level, LevelSolution, ReducedSystem, Window};
use super::system::generate_system;
use crate::braid::Sign;
use crate::error::Result;
use crate::scalar::RatFunc;
use crate::trace::{SMonomial, TraceTermJson, TraceValue};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProbeStatus {
    /// Already a window monomial.
    Basis,
    Reduced(TraceValue),
    /// The reduction still involves these monomials outside the window.
    Undecided(Vec<SMonomial>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbeEntry {
    pub monomial: SMonomial,
    pub status: ProbeStatus,
}

#[derive(Clone, Debug)]
pub struct GeneratingSetReport {
    pub p: u32,
    pub probe: u32,
    pub entries: Vec<ProbeEntry>,
    /// Probes whose two orientations reduce to different window values.
    pub disagreements: Vec<SMonomial>,
    pub torsion_candidates: Vec<TraceValue>,
}

impl GeneratingSetReport {
    pub fn all_reduced(&self) -> bool {
        self.entries.iter().all(|e| !matches!(e.status, ProbeStatus::Undecided(_)))
    }

    pub fn confluent(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn undecided(&self) -> impl Iterator<Item = &ProbeEntry> {
        self.entries.iter().filter(|e| matches!(e.status, ProbeStatus::Undecided(_)))
    }

    pub fn to_json(&self) -> GeneratingSetJson {
        GeneratingSetJson {
            p: self.p,
            probe: self.probe,
            all_reduced: self.all_reduced(),
            confluent: self.confluent(),
            entries: self
                .entries
                .iter()
                .map(|e| {
                    let (status, value, blocking) = match &e.status {
                        ProbeStatus::Basis => ("basis", None, Vec::new()),
                        ProbeStatus::Reduced(v) => ("reduced", Some(v.to_json()), Vec::new()),
                        ProbeStatus::Undecided(b) => ("undecided at this truncation", None, b.iter().map(|m| m.indices().to_vec()).collect()),
                    };
                    ProbeJson { monomial: e.monomial.indices().to_vec(), status: status.into(), value, blocking }
                })
                .collect(),
            disagreements: self.disagreements.iter().map(|m| m.indices().to_vec()).collect(),
            torsion_candidates: self.torsion_candidates.iter().map(TraceValue::to_json).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeJson {
    pub monomial: Vec<i64>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Vec<TraceTermJson>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub blocking: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratingSetJson {
    pub p: u32,
    pub probe: u32,
    pub all_reduced: bool,
    pub confluent: bool,
    pub entries: Vec<ProbeJson>,
    pub disagreements: Vec<Vec<i64>>,
    pub torsion_candidates: Vec<Vec<TraceTermJson>>,
}

impl fmt::Display for GeneratingSetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}, probe level <= {}", self.p, self.probe)?;
        for e in &self.entries {
            match &e.status {
                ProbeStatus::Basis => writeln!(f, "{}: basis", e.monomial)?,
                ProbeStatus::Reduced(v) => writeln!(f, "{} -> {v}", e.monomial)?,
                ProbeStatus::Undecided(b) => {
                    let b: Vec<String> = b.iter().map(ToString::to_string).collect();
                    writeln!(f, "{}: undecided at this truncation (needs {})", e.monomial, b.join(", "))?
                }
            }
        }
        for t in &self.torsion_candidates {
            writeln!(f, "torsion candidate: {t} = 0")?;
        }
        writeln!(f, "all reduced: {}", self.all_reduced())?;
        write!(f, "confluent: {}", self.confluent())
    }
}

/// Partitions of `n` as nonincreasing part lists.
fn partitions(n: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// Monomials with positive indices and weighted level `1..=level_max`.
fn positive_monomials(level_max: u32) -> Vec<SMonomial> {
    let mut out = Vec::new();
    for n in 1..=level_max as i64 {
        let mut parts = Vec::new();
        partitions(n, n, &mut Vec::new(), &mut parts);
        out.extend(parts.into_iter().map(SMonomial::from_indices));
    }
    out.sort();
    out
}

fn probe(r: &ReducedSystem, probes: &[SMonomial], probe_level: u32) -> GeneratingSetReport {
    let mut entries = Vec::new();
    let mut disagreements = Vec::new();
    for m in probes {
        let v = TraceValue::monomial(m.clone(), RatFunc::one());
        if r.window.contains(m, r.p) {
            entries.push(ProbeEntry { monomial: m.clone(), status: ProbeStatus::Basis });
            continue;
        }
        let a = r.normal_form(&v);
        let b = r.alternate_normal_form(&v);
        let outside = |x: &TraceValue| x.monomials().filter(|m| !r.window.contains(m, r.p)).cloned().collect::<Vec<_>>();
        let blocking = outside(&a);
        let status = if blocking.is_empty() {
            if outside(&b).is_empty() && a != b {
                disagreements.push(m.clone());
            }
            ProbeStatus::Reduced(a)
        } else {
            ProbeStatus::Undecided(blocking)
        };
        entries.push(ProbeEntry { monomial: m.clone(), status });
    }
    GeneratingSetReport { p: r.p, probe: probe_level, entries, disagreements, torsion_candidates: r.torsion_candidates.clone() }
}

/// Reduces every positive monomial of weighted level up to
/// `probe_level_max` and checks that it lands in the span of the window
/// monomials, under both orientations.
pub fn check_generating_set(r: &ReducedSystem, probe_level_max: u32) -> GeneratingSetReport {
    probe(r, &positive_monomials(probe_level_max), probe_level_max)
}

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub p: u32,
    pub probe: u32,
    /// Indices allowed in the window, `0` excluded.
    pub window: Vec<i64>,
    pub reduced: ReducedSystem,
    pub probes: GeneratingSetReport,
    /// Negative-side level solutions for levels `-1` and `-2`.
    pub negative_levels: Vec<LevelSolution>,
}

impl CandidateReport {
    pub fn closed(&self) -> bool {
        self.probes.all_reduced()
    }

    pub fn independent(&self) -> bool {
        self.reduced.torsion_candidates.is_empty()
    }

    pub fn to_json(&self) -> CandidateJson {
        CandidateJson {
            p: self.p,
            probe: self.probe,
            window: self.window.clone(),
            closed: self.closed(),
            independent: self.independent(),
            probes: self.probes.to_json(),
            negative_rules: self
                .negative_levels
                .iter()
                .map(|l| NegativeLevelJson { level: l.level, rules: l.rules.iter().map(|r| r.to_json()).collect() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NegativeLevelJson {
    pub level: i64,
    pub rules: Vec<super::reduce::RuleJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateJson {
    pub p: u32,
    pub probe: u32,
    pub window: Vec<i64>,
    pub closed: bool,
    pub independent: bool,
    pub probes: GeneratingSetJson,
    pub negative_rules: Vec<NegativeLevelJson>,
}

impl fmt::Display for CandidateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.window.iter().map(ToString::to_string).collect();
        writeln!(f, "window indices {{{}}} (plus 0)", w.join(", "))?;
        for l in &self.negative_levels {
            write!(f, "{l}")?;
        }
        writeln!(f, "{}", self.probes)?;
        writeln!(f, "closed: {}", self.closed())?;
        write!(f, "independent: {}", self.independent())
    }
}

/// Combines both sides' equations up to level `probe_level_max` and
/// reduces toward the window `-p/2 <= k < p/2`.
pub fn candidate_basis_experiment(p: u32, probe_level_max: u32) -> Result<CandidateReport> {
    let pos = generate_system(p, probe_level_max, Sign::Plus)?;
    let neg = generate_system(p, probe_level_max, Sign::Minus)?;
    let rows: Vec<TraceValue> = pos.equations.iter().chain(&neg.equations).map(|e| e.residual()).collect();
    let mut levels = pos.levels.clone();
    levels.extend(neg.levels.iter().filter(|&&k| k != 0));
    let reduced = reduce_rows(p, Window::Candidate, levels, &rows);

    let mut probes = positive_monomials(probe_level_max);
    probes.extend(probes.clone().iter().map(|m| SMonomial::from_indices(m.indices().iter().map(|k| -k))));
    probes.sort();
    let report = probe(&reduced, &probes, probe_level_max);

    let negative_levels = (1..=probe_level_max.min(2) as i64).map(|k| solve_level(&neg, -k)).collect();
    let pi = p as i64;
    let window = (-pi..pi).filter(|&k| k != 0 && -pi <= 2 * k && 2 * k < pi).collect();
    Ok(CandidateReport { p, probe: probe_level_max, window, reduced, probes: report, negative_levels })
}
