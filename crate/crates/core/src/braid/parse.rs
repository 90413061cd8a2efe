//! Word grammar: whitespace separated terms `base['^'int]` with
//! `base := t | g<i> | t<i> | t<i>'`; `1` is the empty word and `·` is
//! accepted as a separator.

use super::monomial::LoopMonomial;
use super::word::{Gen, Letter, MixedBraidWord};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Word(MixedBraidWord),
    Monomial(LoopMonomial),
}

impl Parsed {
    pub fn into_word(self) -> MixedBraidWord {
        match self {
            Parsed::Word(w) => w,
            Parsed::Monomial(m) => m.to_word(),
        }
    }
}

fn is_sep(c: char) -> bool {
    c.is_whitespace() || c == '·'
}

fn parse_token(tok: &str, pos: usize) -> Result<Option<Letter>> {
    if tok == "1" {
        return Ok(None);
    }
    let (base, exp) = match tok.find('^') {
        Some(i) => (&tok[..i], Some((&tok[i + 1..], pos + i + 1))),
        None => (tok, None),
    };
    let gen = MixedBraidWord::gen_from_token(base).ok_or_else(|| Error::Parse { pos, msg: format!("unknown generator {base:?}") })?;
    let exp = match exp {
        None => 1,
        Some((s, epos)) => {
            let ok = !s.is_empty() && s.strip_prefix('-').unwrap_or(s).bytes().all(|b| b.is_ascii_digit()) && s != "-";
            if !ok {
                return Err(Error::Parse { pos: epos, msg: format!("bad exponent {s:?}") });
            }
            s.parse::<i64>().map_err(|_| Error::Parse { pos: epos, msg: "exponent out of range".into() })?
        }
    };
    Ok(Some(Letter::new(gen, exp)))
}

fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if is_sep(c) {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

/// Parses a word. With `n` given, indices are range-checked against it;
/// otherwise the smallest strand count is used.
pub fn parse_braid(text: &str, n: Option<usize>) -> Result<MixedBraidWord> {
    let toks = tokens(text);
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty input (write 1 for the empty word)".into() });
    }
    let mut letters = Vec::new();
    for (pos, tok) in toks {
        if let Some(l) = parse_token(tok, pos)? {
            letters.push(l);
        }
    }
    match n {
        Some(n) => MixedBraidWord::new(n, letters),
        None => MixedBraidWord::minimal(letters),
    }
}

/// Reads a word as a looping monomial when possible.
pub fn as_monomial(w: &MixedBraidWord) -> Option<LoopMonomial> {
    let mut primed = None;
    let mut entries: Vec<(usize, i64)> = Vec::new();
    for l in w.letters() {
        let (i, p) = match l.gen {
            Gen::Axis => (0, None),
            Gen::Loop(i) => (i, Some(false)),
            Gen::PrimedLoop(i) => (i, Some(true)),
            Gen::Sigma(_) => return None,
        };
        if let Some(p) = p {
            if primed.is_some_and(|q| q != p) {
                return None;
            }
            primed = Some(p);
        }
        if entries.last().is_some_and(|e| e.0 >= i) {
            return None;
        }
        entries.push((i, l.exp));
    }
    LoopMonomial::new(primed.unwrap_or(false), w.n(), entries).ok()
}

pub fn parse_word(text: &str, n: Option<usize>) -> Result<Parsed> {
    let w = parse_braid(text, n)?;
    Ok(match as_monomial(&w) {
        Some(m) => Parsed::Monomial(m),
        None => Parsed::Word(w),
    })
}

pub fn parse_monomial(text: &str, n: Option<usize>) -> Result<LoopMonomial> {
    match parse_word(text, n)? {
        Parsed::Monomial(m) => Ok(m),
        Parsed::Word(_) => Err(Error::domain(format!("{text:?} is not a looping monomial"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_example() {
        let w = parse_braid("t^2 g1 t1'^-1", None).unwrap();
        assert_eq!(w.letters(), &[Letter::new(Gen::Axis, 2), Letter::new(Gen::Sigma(1), 1), Letter::new(Gen::PrimedLoop(1), -1)]);
        assert_eq!(w.to_string(), "t^2 g1 t1'^-1");
    }

    #[test]
    fn sigma_out_of_range() {
        assert_eq!(parse_braid("t g2", Some(2)).unwrap_err(), Error::IndexOutOfRange { index: 2, n: 2 });
    }

    #[test]
    fn unprimed_loop_shorthand() {
        match parse_word("t1", None).unwrap() {
            Parsed::Monomial(m) => {
                assert!(!m.primed());
                assert_eq!(m.to_word().expand_loops().to_string(), "g1 t g1");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identity_and_separators() {
        assert!(parse_braid("1", None).unwrap().is_empty());
        assert_eq!(parse_braid("t·g1  t", None).unwrap().to_string(), "t g1 t");
        assert_eq!(parse_braid("t0' t0", None).unwrap().to_string(), "t^2");
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(parse_braid("t x2", None), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_braid("t g1^", None), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_braid("t g1^a", None), Err(Error::Parse { pos: 5, .. })));
        assert!(parse_braid("   ", None).is_err());
        assert!(parse_braid("g", None).is_err());
        assert!(parse_braid("t'", None).is_err());
    }

    #[test]
    fn mixed_kinds_stay_words() {
        assert!(matches!(parse_word("t1 t2'", None).unwrap(), Parsed::Word(_)));
        assert!(matches!(parse_word("t2 t1", None).unwrap(), Parsed::Word(_)));
        assert!(matches!(parse_word("t^2 t2'^3", None).unwrap(), Parsed::Monomial(_)));
    }
}
