//! The `lens-skein` command line. [`run`] takes the arguments and the
//! standard streams so it can be driven from tests.

use std::cmp::Ordering;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{bbm, compare_order, enumerate_level, parse_braid, parse_monomial, parse_word, Parsed, Side, Sign};
use crate::error::{Error, Result};
use crate::hecke::AlgebraElement;
use crate::lens::{
    candidate_basis_experiment, check_generating_set, compare_mirror, generate_system, reduce_system, solve_level, LevelSolution, Rule,
};
use crate::trace::{invariant_x, map_i, map_i_band, trace, TraceTermJson, TraceValue};
use crate::verify::{run_suite, Suite, DEFAULT_SEED};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "lens-skein", version, about = "Hecke algebra of type B, Markov trace and band-move systems for L(p,1)")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of a word in the primed basis.
    Normalize {
        /// Word, or `-` to read it from stdin.
        word: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Markov trace of a word.
    Trace {
        word: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The invariant X of the closure of a word.
    Invariant {
        word: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Band move on the first moving strand of a gap-free monomial.
    Bbm {
        monomial: String,
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long)]
        p: u32,
    },
    /// The automorphism f: exponents and crossings inverted.
    Fmap { word: String },
    /// The map I applied to the trace of a word, or to a trace value given
    /// as JSON.
    Imap {
        input: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: Option<usize>,
        /// Treat the input as a band-move trace.
        #[arg(long)]
        band: bool,
    },
    /// Compares two looping words in the ordering.
    Order { a: String, b: String },
    /// Gap-free monomials of a level.
    Enum {
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        side: Side,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Band-move equations for levels up to k-max.
    GenSystem {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k_max: u32,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        side: Sign,
    },
    /// Eliminates the positive-side system toward indices below p.
    Reduce {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k_max: u32,
        /// Also reduce every monomial up to this level.
        #[arg(long)]
        probe: Option<u32>,
        /// Also solve this level's equations on their own.
        #[arg(long)]
        level: Option<i64>,
    },
    /// Compares the mirrored negative side with the positive side.
    Mirror {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k_max: u32,
    },
    /// Reduction toward the window -p/2 <= k < p/2 using both sides.
    Experiment {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        probe: u32,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: impl ToString, json: impl Serialize) -> Result<Self> {
        let json = serde_json::to_value(json).map_err(|e| Error::domain(e.to_string()))?;
        Ok(Output { text: text.to_string(), json, code: 0 })
    }
}

fn read_input(arg: &str, stdin: &mut dyn Read) -> Result<String> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    stdin.read_to_string(&mut s).map_err(|e| Error::domain(format!("reading stdin: {e}")))?;
    Ok(s.trim().to_string())
}

fn level_json(l: &LevelSolution) -> Value {
    json!({
        "level": l.level,
        "equations": l.equations,
        "unknowns": l.unknowns.iter().map(|m| m.indices().to_vec()).collect::<Vec<_>>(),
        "rules": l.rules.iter().map(Rule::to_json).collect::<Vec<_>>(),
        "free": l.free.iter().map(|m| m.indices().to_vec()).collect::<Vec<_>>(),
        "relations": l.relations.iter().map(TraceValue::to_json).collect::<Vec<_>>(),
    })
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> Result<Output> {
    match cmd {
        Command::Normalize { word, n } => {
            let w = parse_braid(&read_input(&word, stdin)?, n)?;
            let e = AlgebraElement::project_braid(&w);
            Output::ok(&e, e.to_json())
        }
        Command::Trace { word, n } => {
            let w = parse_braid(&read_input(&word, stdin)?, n)?;
            let v = trace(&AlgebraElement::project_braid(&w));
            Output::ok(&v, v.to_json())
        }
        Command::Invariant { word, n } => {
            let w = parse_braid(&read_input(&word, stdin)?, n)?;
            let x = invariant_x(&w);
            Output::ok(&x, x.to_json())
        }
        Command::Bbm { monomial, sign, p } => {
            let m = parse_monomial(&read_input(&monomial, stdin)?, None)?;
            let b = bbm(&m, sign, p)?;
            Output::ok(&b, b.to_json())
        }
        Command::Fmap { word } => {
            let w = match parse_word(&read_input(&word, stdin)?, None)? {
                Parsed::Monomial(m) => m.f_map().to_word(),
                Parsed::Word(w) => w.f_map(),
            };
            Output::ok(&w, w.to_json())
        }
        Command::Imap { input, p, n, band } => {
            let text = read_input(&input, stdin)?;
            let v = if text.trim_start().starts_with('[') {
                let terms: Vec<TraceTermJson> = serde_json::from_str(&text).map_err(|e| Error::domain(format!("trace value JSON: {e}")))?;
                TraceValue::from_json(&terms)?
            } else {
                trace(&AlgebraElement::project_braid(&parse_braid(&text, n)?))
            };
            let img = if band { map_i_band(&v, p)? } else { map_i(&v, p)? };
            Output::ok(&img, img.to_json())
        }
        Command::Order { a, b } => {
            let x = parse_monomial(&read_input(&a, stdin)?, None)?;
            let y = parse_monomial(&b, None)?;
            let (sym, name) = match compare_order(&x.profile(), &y.profile()) {
                Ordering::Less => ("<", "less"),
                Ordering::Equal => ("=", "equal"),
                Ordering::Greater => (">", "greater"),
            };
            Output::ok(format!("{x} {sym} {y}"), json!({ "order": name }))
        }
        Command::Enum { level, side, max_len } => {
            let v = enumerate_level(level, side, max_len)?;
            let text: Vec<String> = v.iter().map(ToString::to_string).collect();
            let js: Vec<_> = v.iter().map(|m| m.to_word().to_json()).collect();
            Output::ok(text.join("\n"), js)
        }
        Command::GenSystem { p, k_max, side } => {
            let b = generate_system(p, k_max, side)?;
            Output::ok(b.to_string().trim_end(), b.to_json())
        }
        Command::Reduce { p, k_max, probe, level } => {
            let b = generate_system(p, k_max, Sign::Plus)?;
            let r = reduce_system(&b)?;
            let mut text = r.to_string();
            let mut js = json!({ "p": p, "reduced": r.to_json() });
            if let Some(l) = level {
                if l < 0 || l > k_max as i64 {
                    return Err(Error::domain(format!("--level must lie in 0..={k_max}")));
                }
                let s = solve_level(&b, l);
                text = format!("{text}\n{}", s.to_string().trim_end());
                js["level"] = level_json(&s);
            }
            if let Some(probe) = probe {
                let g = check_generating_set(&r, probe);
                text = format!("{text}\n{g}");
                js["generating_set"] = serde_json::to_value(g.to_json()).map_err(|e| Error::domain(e.to_string()))?;
            }
            Output::ok(text, js)
        }
        Command::Mirror { p, k_max } => {
            let m = compare_mirror(p, k_max)?;
            let js = json!({
                "p": p,
                "k_max": k_max,
                "checked": m.checked,
                "mismatches": m.mismatches.iter().map(|x| json!({"source": x.source, "sign": x.sign.to_string(), "detail": x.detail})).collect::<Vec<_>>(),
            });
            Output::ok(m.to_string().trim_end(), js)
        }
        Command::Experiment { p, probe } => {
            let c = candidate_basis_experiment(p, probe)?;
            Output::ok(&c, c.to_json())
        }
        Command::Verify { suite, n, k, p, samples, seed } => {
            let d = suite.defaults();
            let params =
                crate::verify::Params { n: n.unwrap_or(d.n), k: k.unwrap_or(d.k), p: p.or(d.p), samples: samples.unwrap_or(d.samples), seed };
            if params.p == Some(0) {
                return Err(Error::domain("p must be at least 1"));
            }
            let r = run_suite(suite, &params)?;
            let mut out = Output::ok(r.to_string().trim_end(), &r)?;
            if !r.passed() {
                out.code = 2;
            }
            Ok(out)
        }
    }
}

/// Runs one invocation. Returns the exit code: 0 on success, 1 on usage
/// or domain errors, 2 when a verification suite fails.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("values serialize"),
            };
            let _ = writeln!(out, "{}", body.trim_end());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
