use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{enumerate_level, Side, Sign};
use crate::error::{Error, Result};
use crate::trace::{bbm_equation, map_i, map_i_band, Equation, EquationJson, TraceValue};

/// The band-move equations of `L(p,1)` for levels `0..=k_max` on one side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemBundle {
    pub p: u32,
    pub side: Sign,
    /// Signed levels, `-k` on the negative side.
    pub levels: Vec<i64>,
    pub equations: Vec<Equation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub p: u32,
    pub side: String,
    pub equations: Vec<EquationJson>,
}

impl SystemBundle {
    pub fn empty(p: u32, side: Sign) -> Self {
        SystemBundle { p, side, levels: Vec::new(), equations: Vec::new() }
    }

    pub fn level_equations(&self, k: i64) -> impl Iterator<Item = &Equation> {
        self.equations.iter().filter(move |e| e.source.level() == k)
    }

    pub fn to_json(&self) -> SystemJson {
        SystemJson { p: self.p, side: self.side.to_string(), equations: self.equations.iter().map(Equation::to_json).collect() }
    }
}

impl fmt::Display for SystemBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}, side {}, {} equations", self.p, self.side, self.equations.len())?;
        for e in &self.equations {
            writeln!(f, "[{} {}] {} = {}", e.source, e.sign, e.lhs, e.rhs)?;
        }
        Ok(())
    }
}

/// Both band moves of every gap-free monomial of level `0..=k_max`
/// (levels `0, -1, …` on the negative side), `+` before `-`.
pub fn generate_system(p: u32, k_max: u32, side: Sign) -> Result<SystemBundle> {
    if p == 0 {
        return Err(Error::domain("p must be at least 1"));
    }
    let (enum_side, dir) = match side {
        Sign::Plus => (Side::Plus, 1),
        Sign::Minus => (Side::Minus, -1),
    };
    let mut b = SystemBundle::empty(p, side);
    for k in 0..=k_max as i64 {
        b.levels.push(dir * k);
        for tau in enumerate_level(dir * k, enum_side, None)? {
            for sign in [Sign::Plus, Sign::Minus] {
                b.equations.push(bbm_equation(&tau, sign, p)?);
            }
        }
    }
    Ok(b)
}

/// Sends a negative-side equation to the positive side: `f` on the source,
/// the opposite band sign, `I` on the left side and the band form of `I`
/// on the right side.
pub fn mirror_equation(e: &Equation) -> Result<Equation> {
    let p = e.p;
    Ok(Equation {
        source: e.source.f_map(),
        sign: e.sign.opposite(),
        p,
        lhs: map_i(&e.lhs, p)?,
        rhs: map_i_band(&e.rhs, p)?,
        raw_rhs: map_i_band(&e.raw_rhs, p)?,
        coefficient: crate::scalar::scalar_i(&e.coefficient),
    })
}

/// Applies [`mirror_equation`] to a negative-side bundle. The result is
/// ordered like the positive bundle of the same levels.
pub fn mirror_system(b: &SystemBundle) -> Result<SystemBundle> {
    if b.side != Sign::Minus {
        return Err(Error::domain("mirror_system expects a negative-side bundle"));
    }
    let mut out = SystemBundle::empty(b.p, Sign::Plus);
    out.levels = b.levels.iter().map(|k| -k).collect();
    for pair in b.equations.chunks(2) {
        // keep the `+` equation first after the sign swap
        for e in pair.iter().rev() {
            out.equations.push(mirror_equation(e)?);
        }
    }
    Ok(out)
}

/// One disagreement between a mirrored and a directly generated equation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MirrorMismatch {
    pub source: String,
    pub sign: Sign,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MirrorReport {
    pub p: u32,
    pub k_max: u32,
    pub checked: usize,
    pub mismatches: Vec<MirrorMismatch>,
}

impl MirrorReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for MirrorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mirror p = {} k <= {}: {} equations, {} mismatches", self.p, self.k_max, self.checked, self.mismatches.len())?;
        for m in &self.mismatches {
            writeln!(f, "  [{} {}] {}", m.source, m.sign, m.detail)?;
        }
        Ok(())
    }
}

fn diff(label: &str, got: &TraceValue, want: &TraceValue) -> Option<String> {
    (got != want).then(|| format!("{label}: mirrored {got} vs direct {want}"))
}

/// Mirrors the negative bundle and compares it with the positive bundle
/// equation by equation. Map-domain failures count as mismatches.
pub fn compare_mirror(p: u32, k_max: u32) -> Result<MirrorReport> {
    let neg = generate_system(p, k_max, Sign::Minus)?;
    let pos = generate_system(p, k_max, Sign::Plus)?;
    let mut report = MirrorReport { p, k_max, checked: 0, mismatches: Vec::new() };
    for e in &neg.equations {
        report.checked += 1;
        let source = e.source.f_map();
        let sign = e.sign.opposite();
        let direct = pos.equations.iter().find(|d| d.source == source && d.sign == sign).expect("positive bundle covers the mirror");
        let detail = match mirror_equation(e) {
            Err(err) => Some(err.to_string()),
            Ok(m) => diff("lhs", &m.lhs, &direct.lhs).or_else(|| diff("rhs", &m.rhs, &direct.rhs)),
        };
        if let Some(detail) = detail {
            report.mismatches.push(MirrorMismatch { source: source.to_string(), sign, detail });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::SMonomial;

    #[test]
    fn counts_and_grading() {
        let b = generate_system(2, 3, Sign::Plus).unwrap();
        assert_eq!(b.equations.len(), 2 + 2 + 4 + 8);
        for e in &b.equations {
            let k = e.source.level();
            assert!(e.lhs.monomials().all(|m| m.level() == k));
            assert!(e.raw_rhs.monomials().all(|m| m.level() == 2 + k));
        }
    }

    #[test]
    fn level_zero_and_one_at_p2() {
        let b = generate_system(2, 1, Sign::Plus).unwrap();
        assert_eq!(b.equations.len(), 4);
        assert_eq!(b.equations[0].rhs, TraceValue::s(2));
        assert!(b.equations[2].raw_rhs.monomials().any(|m| *m == SMonomial::s(3)));
    }

    #[test]
    fn mirror_matches_at_low_level() {
        for p in [2, 3] {
            let r = compare_mirror(p, 2).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn empty_mirror() {
        let e = SystemBundle::empty(2, Sign::Minus);
        assert!(mirror_system(&e).unwrap().equations.is_empty());
    }
}
