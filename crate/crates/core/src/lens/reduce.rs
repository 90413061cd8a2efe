use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::linalg::{row_of, ColumnOrder, Echelon};
use super::system::SystemBundle;
use crate::braid::Sign;
use crate::error::{Error, Result};
use crate::trace::{SMonomial, TraceTermJson, TraceValue};

/// Which monomials count as reduced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Window {
    /// Indices in `[1, p-1]`.
    Positive,
    /// Indices `k` with `-p/2 <= k < p/2`.
    Candidate,
}

impl Window {
    pub fn contains(self, m: &SMonomial, p: u32) -> bool {
        let p = p as i64;
        m.indices().iter().all(|&k| match self {
            Window::Positive => (1..p).contains(&k),
            Window::Candidate => -p <= 2 * k && 2 * k < p,
        })
    }
}

/// How rows are oriented. Both put non-window monomials above window ones.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Weighted level, then largest index, then lex.
    LevelFirst,
    /// Largest index, then level, then lex.
    IndexFirst,
}

#[derive(Clone, Copy, Debug)]
pub struct Orientation {
    pub p: u32,
    pub window: Window,
    pub strategy: Strategy,
}

fn size(m: &SMonomial) -> (i64, i64) {
    let level = m.indices().iter().map(|k| k.abs()).sum();
    let top = m.indices().iter().map(|k| k.abs()).max().unwrap_or(0);
    (level, top)
}

impl ColumnOrder for Orientation {
    fn cmp(&self, a: &SMonomial, b: &SMonomial) -> Ordering {
        let bad = |m| !self.window.contains(m, self.p);
        let (la, ta) = size(a);
        let (lb, tb) = size(b);
        let by_size = match self.strategy {
            Strategy::LevelFirst => la.cmp(&lb).then(ta.cmp(&tb)),
            Strategy::IndexFirst => ta.cmp(&tb).then(la.cmp(&lb)),
        };
        bad(a).cmp(&bad(b)).then(by_size).then_with(|| a.cmp(b))
    }
}

/// `head → value`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule {
    pub head: SMonomial,
    pub value: TraceValue,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.head, self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub head: Vec<i64>,
    pub value: Vec<TraceTermJson>,
}

impl Rule {
    pub fn to_json(&self) -> RuleJson {
        RuleJson { head: self.head.indices().to_vec(), value: self.value.to_json() }
    }
}

/// The band-move equations of a bundle eliminated toward the window.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub p: u32,
    pub window: Window,
    pub levels: Vec<i64>,
    /// Rules with heads outside the window.
    pub rules: Vec<Rule>,
    /// Nonzero relations among window monomials only.
    pub torsion_candidates: Vec<TraceValue>,
    /// Window monomials occurring in the equations.
    pub basis_monomials: Vec<SMonomial>,
    /// Monomials outside the window that no equation determines.
    pub undetermined: Vec<SMonomial>,
    pub equations: usize,
    /// Every equation reduces to `0 = 0` under the rules.
    pub sound: bool,
    primary: Echelon<Orientation>,
    alternate: Echelon<Orientation>,
}

fn eliminate(rows: &[TraceValue], o: Orientation) -> Echelon<Orientation> {
    let mut e = Echelon::new(o);
    for r in rows {
        e.insert(&row_of(r));
    }
    e
}

fn substitute(v: &TraceValue, e: &Echelon<Orientation>) -> TraceValue {
    let mut out = TraceValue::zero();
    for (m, c) in v.terms() {
        match e.rule(m) {
            Some(r) => out = out.add(&r.scale(c)),
            None => out.add_term(m.clone(), c.clone()),
        }
    }
    out.reduced()
}

/// Orients and eliminates the residuals `lhs - rhs` of a system.
pub fn reduce_rows(p: u32, window: Window, levels: Vec<i64>, rows: &[TraceValue]) -> ReducedSystem {
    let primary = eliminate(rows, Orientation { p, window, strategy: Strategy::LevelFirst });
    let alternate = eliminate(rows, Orientation { p, window, strategy: Strategy::IndexFirst });

    let mut rules = Vec::new();
    let mut torsion = Vec::new();
    for head in primary.pivots().keys() {
        let value = primary.rule(head).expect("pivot");
        if window.contains(head, p) {
            torsion.push(TraceValue::monomial(head.clone(), crate::scalar::RatFunc::one()).sub(&value));
        } else {
            rules.push(Rule { head: head.clone(), value });
        }
    }
    let mut seen = BTreeSet::new();
    for r in rows {
        seen.extend(r.monomials().cloned());
    }
    let basis_monomials = seen.iter().filter(|m| window.contains(m, p)).cloned().collect();
    let undetermined = seen.iter().filter(|m| !window.contains(m, p) && !primary.pivots().contains_key(*m)).cloned().collect();
    let sound = rows.iter().all(|r| substitute(r, &primary).is_zero());
    ReducedSystem {
        p,
        window,
        levels,
        rules,
        torsion_candidates: torsion,
        basis_monomials,
        undetermined,
        equations: rows.len(),
        sound,
        primary,
        alternate,
    }
}

/// Eliminates a positive-side bundle toward monomials with indices in
/// `[1, p-1]`.
pub fn reduce_system(b: &SystemBundle) -> Result<ReducedSystem> {
    if b.side != Sign::Plus {
        return Err(Error::domain("reduce_system expects a positive-side bundle"));
    }
    let rows: Vec<TraceValue> = b.equations.iter().map(|e| e.residual()).collect();
    Ok(reduce_rows(b.p, Window::Positive, b.levels.clone(), &rows))
}

impl ReducedSystem {
    pub fn rule(&self, head: &SMonomial) -> Option<&Rule> {
        self.rules.iter().find(|r| &r.head == head)
    }

    /// Reduction of a value under the primary orientation.
    pub fn normal_form(&self, v: &TraceValue) -> TraceValue {
        self.primary.normal_form(v)
    }

    /// Reduction of a value under the alternate orientation.
    pub fn alternate_normal_form(&self, v: &TraceValue) -> TraceValue {
        self.alternate.normal_form(v)
    }

    pub fn to_json(&self) -> ReducedJson {
        ReducedJson {
            p: self.p,
            rules: self.rules.iter().map(Rule::to_json).collect(),
            torsion_candidates: self.torsion_candidates.iter().map(TraceValue::to_json).collect(),
            basis_monomials: self.basis_monomials.iter().map(|m| m.indices().to_vec()).collect(),
            undetermined: self.undetermined.iter().map(|m| m.indices().to_vec()).collect(),
            sound: self.sound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedJson {
    pub p: u32,
    pub rules: Vec<RuleJson>,
    pub torsion_candidates: Vec<Vec<TraceTermJson>>,
    pub basis_monomials: Vec<Vec<i64>>,
    pub undetermined: Vec<Vec<i64>>,
    pub sound: bool,
}

impl fmt::Display for ReducedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}, {} equations, {} rules", self.p, self.equations, self.rules.len())?;
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        for t in &self.torsion_candidates {
            writeln!(f, "torsion candidate: {t} = 0")?;
        }
        if !self.undetermined.is_empty() {
            let u: Vec<String> = self.undetermined.iter().map(ToString::to_string).collect();
            writeln!(f, "undetermined: {}", u.join(", "))?;
        }
        write!(f, "back-substitution: {}", if self.sound { "0 = 0" } else { "FAILED" })
    }
}

/// The equations of one level solved for their band-move monomials in
/// terms of the level's own monomials.
#[derive(Clone, Debug)]
pub struct LevelSolution {
    pub p: u32,
    pub level: i64,
    pub unknowns: Vec<SMonomial>,
    pub knowns: Vec<SMonomial>,
    pub equations: usize,
    pub rules: Vec<Rule>,
    /// Unknowns left free by the equations.
    pub free: Vec<SMonomial>,
    /// Relations among the knowns alone; nonempty means the level is
    /// overdetermined and inconsistent as a system in the unknowns.
    pub relations: Vec<TraceValue>,
}

impl LevelSolution {
    pub fn rule(&self, head: &SMonomial) -> Option<&Rule> {
        self.rules.iter().find(|r| &r.head == head)
    }

    pub fn is_solved(&self) -> bool {
        self.free.is_empty() && self.relations.is_empty()
    }
}

impl fmt::Display for LevelSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "level {} (p = {}): {} equations, {} unknowns", self.level, self.p, self.equations, self.unknowns.len())?;
        for r in &self.rules {
            writeln!(f, "  {r}")?;
        }
        for m in &self.free {
            writeln!(f, "  free: {m}")?;
        }
        for r in &self.relations {
            writeln!(f, "  relation: {r} = 0")?;
        }
        Ok(())
    }
}

/// Solves the equations of source level `level` for the monomials of the
/// unscaled band-move traces.
pub fn solve_level(b: &SystemBundle, level: i64) -> LevelSolution {
    let eqs: Vec<_> = b.level_equations(level).collect();
    let unknowns: BTreeSet<SMonomial> = eqs.iter().flat_map(|e| e.raw_rhs.monomials().cloned()).collect();
    let knowns: BTreeSet<SMonomial> = eqs.iter().flat_map(|e| e.lhs.monomials().cloned()).filter(|m| !unknowns.contains(m)).collect();
    let order = |a: &SMonomial, b: &SMonomial| unknowns.contains(a).cmp(&unknowns.contains(b)).then_with(|| a.cmp(b));
    let mut e = Echelon::new(order);
    for eq in &eqs {
        e.insert(&row_of(&eq.residual()));
    }
    let mut rules = Vec::new();
    let mut relations = Vec::new();
    for head in e.pivots().keys() {
        let value = e.rule(head).expect("pivot");
        if unknowns.contains(head) {
            rules.push(Rule { head: head.clone(), value });
        } else {
            relations.push(TraceValue::monomial(head.clone(), crate::scalar::RatFunc::one()).sub(&value));
        }
    }
    let free = unknowns.iter().filter(|m| !e.pivots().contains_key(*m)).cloned().collect();
    LevelSolution {
        p: b.p,
        level,
        unknowns: unknowns.into_iter().collect(),
        knowns: knowns.into_iter().collect(),
        equations: eqs.len(),
        rules,
        free,
        relations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::generate_system;

    #[test]
    fn windows() {
        let m = SMonomial::from_indices([1, 2]);
        assert!(Window::Positive.contains(&m, 3));
        assert!(!Window::Positive.contains(&m, 2));
        assert!(Window::Candidate.contains(&SMonomial::from_indices([-1, 1]), 3));
        assert!(!Window::Candidate.contains(&SMonomial::s(1), 2));
        assert!(Window::Candidate.contains(&SMonomial::s(-1), 2));
    }

    #[test]
    fn first_rules() {
        for p in [2, 3] {
            let r = reduce_system(&generate_system(p, 1, Sign::Plus).unwrap()).unwrap();
            assert_eq!(r.rule(&SMonomial::s(p as i64)).unwrap().value, TraceValue::one(), "p = {p}");
            assert_eq!(r.rule(&SMonomial::s(p as i64 + 1)).unwrap().value, TraceValue::s(1), "p = {p}");
            assert!(r.sound);
        }
    }
}
