use super::value::{SMonomial, TraceValue};
use crate::error::{Error, Result};
use crate::scalar::scalar_i;

fn map_index(j: i64, p: u32) -> Result<i64> {
    let p = p as i64;
    if j < 0 {
        Ok(-j)
    } else if j <= p {
        Ok(2 * p - j)
    } else {
        Err(Error::MapIDomain { index: j as i32, p: p as u32 })
    }
}

/// The map `I`: coefficients through `q ↦ q^{-1}`, `z ↦ λz`; indices
/// `j < 0 ↦ -j` and `0 < j ≤ p ↦ 2p - j`. Indices above `p` are outside
/// the domain.
pub fn map_i(v: &TraceValue, p: u32) -> Result<TraceValue> {
    map_i_impl(v, p, false)
}

/// Variant for band-move traces, where every monomial carries exactly one
/// factor `s_{p-j}` from the `t^p` strand. A monomial with no index in
/// `[1, p]` carries that factor as `s_0 = 1`, which maps to `s_{2p}`.
pub fn map_i_band(v: &TraceValue, p: u32) -> Result<TraceValue> {
    map_i_impl(v, p, true)
}

fn map_i_impl(v: &TraceValue, p: u32, band: bool) -> Result<TraceValue> {
    let mut out = TraceValue::zero();
    for (m, c) in v.terms() {
        let mut idx = m.indices().iter().map(|&j| map_index(j, p)).collect::<Result<Vec<_>>>()?;
        if band && !m.indices().iter().any(|&j| j >= 1 && j <= p as i64) {
            idx.push(2 * p as i64);
        }
        out.add_term(SMonomial::from_indices(idx), scalar_i(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rf, RatFunc};

    #[test]
    fn index_rules() {
        assert_eq!(map_i(&TraceValue::s(-1), 3).unwrap(), TraceValue::s(1));
        assert_eq!(map_i(&TraceValue::s(2), 3).unwrap(), TraceValue::s(4));
        assert_eq!(map_i(&TraceValue::s(3), 3).unwrap(), TraceValue::s(3));
        assert!(matches!(map_i(&TraceValue::s(4), 3), Err(Error::MapIDomain { index: 4, p: 3 })));
    }

    #[test]
    fn coefficients_and_band_factor() {
        let v = TraceValue::constant(rf("q*z"));
        assert_eq!(map_i(&v, 2).unwrap(), TraceValue::constant(&RatFunc::lambda() * &rf("z/q")));
        assert_eq!(map_i_band(&TraceValue::constant(rf("1")), 2).unwrap(), TraceValue::s(4));
        assert_eq!(map_i_band(&TraceValue::s(-1), 2).unwrap().to_string(), "s[1]s[4]");
        assert_eq!(map_i_band(&TraceValue::s(1), 2).unwrap(), TraceValue::s(3));
    }
}
