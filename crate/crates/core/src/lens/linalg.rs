//! Sparse Gauss–Jordan elimination over `Q(q, z)` with columns indexed by
//! s-monomials and a caller-chosen pivot order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::scalar::RatFunc;
use crate::trace::{SMonomial, TraceValue};

pub type Row = BTreeMap<SMonomial, RatFunc>;

pub fn row_of(v: &TraceValue) -> Row {
    v.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

pub fn value_of(r: &Row) -> TraceValue {
    TraceValue::from_terms(r.iter().map(|(m, c)| (m.clone(), c.clone())))
}

/// `a += f * b`, dropping zeros and keeping coefficients reduced.
fn axpy(a: &mut Row, f: &RatFunc, b: &Row) {
    for (m, c) in b {
        let d = (f * c).reduced();
        match a.get_mut(m) {
            Some(v) => {
                *v = (&*v + &d).reduced();
                if v.is_zero() {
                    a.remove(m);
                }
            }
            None => {
                if !d.is_zero() {
                    a.insert(m.clone(), d);
                }
            }
        }
    }
}

/// Ranks columns; the greatest column of a row becomes its pivot.
pub trait ColumnOrder {
    fn cmp(&self, a: &SMonomial, b: &SMonomial) -> Ordering;
}

impl<F: Fn(&SMonomial, &SMonomial) -> Ordering> ColumnOrder for F {
    fn cmp(&self, a: &SMonomial, b: &SMonomial) -> Ordering {
        self(a, b)
    }
}

/// Reduced row echelon form. Pivot rows are normalized to a leading 1
/// and fully back-substituted.
#[derive(Clone, Debug)]
pub struct Echelon<O> {
    order: O,
    pivots: BTreeMap<SMonomial, Row>,
}

impl<O: ColumnOrder> Echelon<O> {
    pub fn new(order: O) -> Self {
        Echelon { order, pivots: BTreeMap::new() }
    }

    pub fn order(&self) -> &O {
        &self.order
    }

    /// Reduces `r` by the current pivots.
    pub fn reduce(&self, r: &Row) -> Row {
        let mut r = r.clone();
        loop {
            let hit = r.keys().find(|m| self.pivots.contains_key(*m)).cloned();
            let Some(m) = hit else { return r };
            let c = r[&m].clone();
            axpy(&mut r, &(-&c), &self.pivots[&m]);
        }
    }

    /// Adds a row; returns its pivot, or `None` when it reduced to zero.
    pub fn insert(&mut self, r: &Row) -> Option<SMonomial> {
        let mut r = self.reduce(r);
        let head = r.keys().max_by(|a, b| self.order.cmp(a, b))?.clone();
        let inv = r[&head].inv().expect("pivot is nonzero");
        for c in r.values_mut() {
            *c = (&*c * &inv).reduced();
        }
        for other in self.pivots.values_mut() {
            if let Some(c) = other.get(&head).cloned() {
                axpy(other, &(-&c), &r);
            }
        }
        self.pivots.insert(head.clone(), r);
        Some(head)
    }

    pub fn pivots(&self) -> &BTreeMap<SMonomial, Row> {
        &self.pivots
    }

    /// `head → value` with the head solved out of its row.
    pub fn rule(&self, head: &SMonomial) -> Option<TraceValue> {
        let row = self.pivots.get(head)?;
        let mut v = TraceValue::zero();
        for (m, c) in row {
            if m != head {
                v.add_term(m.clone(), -c);
            }
        }
        Some(v)
    }

    /// Normal form of a value modulo the row space.
    pub fn normal_form(&self, v: &TraceValue) -> TraceValue {
        value_of(&self.reduce(&row_of(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rf;

    #[test]
    fn two_by_two_solve() {
        // x + y = 1, x - y = q  over columns s1 (x), s2 (y), constant 1.
        let x = SMonomial::s(1);
        let y = SMonomial::s(2);
        let one = SMonomial::one();
        let r1: Row = [(x.clone(), rf("1")), (y.clone(), rf("1")), (one.clone(), rf("-1"))].into_iter().collect();
        let r2: Row = [(x.clone(), rf("1")), (y.clone(), rf("-1")), (one.clone(), rf("-q"))].into_iter().collect();
        let mut e = Echelon::new(|a: &SMonomial, b: &SMonomial| a.cmp(b));
        e.insert(&r1);
        e.insert(&r2);
        assert_eq!(e.rule(&y).unwrap(), TraceValue::constant(rf("(1-q)/2")));
        assert_eq!(e.rule(&x).unwrap(), TraceValue::constant(rf("(1+q)/2")));
        assert!(e.insert(&r1).is_none());
    }
}
