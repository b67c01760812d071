//! The bipartite strip `I × {0, 1, 2, …}` and the recursion for the
//! `A`-exponents of a monomial.
//!
//! Strip points are addressed by `(node, q)` with `q` the q-exponent of the
//! matching `Y` variable. A point is black when `q` is even on a black node
//! or odd on a white node; sources live on black points, `A`-exponents on
//! white ones. The white points `(i, -1)` of white nodes form the virtual
//! row below row 0.

use std::collections::BTreeMap;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::qchar::{a_monomial, Monomial};
use crate::root_system::{Colour, Node, RootSystem};

/// A finitely supported integer function on strip points. Zero values are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StripFunction {
    values: BTreeMap<(Node, i32), i64>,
}

impl StripFunction {
    pub fn new() -> Self {
        StripFunction::default()
    }

    pub fn from_values<I: IntoIterator<Item = ((Node, i32), i64)>>(values: I) -> Self {
        let mut f = StripFunction::new();
        for (k, v) in values {
            f.accumulate(k.0, k.1, v);
        }
        f
    }

    pub fn get(&self, node: Node, q: i32) -> i64 {
        self.values.get(&(node, q)).copied().unwrap_or(0)
    }

    pub fn accumulate(&mut self, node: Node, q: i32, value: i64) {
        let v = self.values.entry((node, q)).or_insert(0);
        *v += value;
        if *v == 0 {
            self.values.remove(&(node, q));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Node, i32), i64)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }

    pub fn support(&self) -> Vec<(Node, i32)> {
        self.values.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.values().all(|&v| v > 0)
    }

    pub fn max_q(&self) -> Option<i32> {
        self.values.keys().map(|k| k.1).max()
    }
}

impl Add for &StripFunction {
    type Output = StripFunction;
    fn add(self, rhs: &StripFunction) -> StripFunction {
        let mut out = self.clone();
        for ((i, q), v) in rhs.iter() {
            out.accumulate(i, q, v);
        }
        out
    }
}

pub fn is_black_point(rs: &RootSystem, node: Node, q: i32) -> bool {
    let even = q.rem_euclid(2) == 0;
    match rs.colour(node) {
        Colour::Black => even,
        Colour::White => !even,
    }
}

/// The residue of `Σ c·y − Σ g·a` together with `m(c, g) = ∏ Y^c ∏ A^{-g}`.
/// The residue coefficients are exactly the exponents of `m(c, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripEvaluation {
    pub residue: StripFunction,
    pub monomial: Monomial,
}

pub fn strip_evaluate(rs: &RootSystem, c: &StripFunction, g: &StripFunction) -> StripEvaluation {
    let mut residue = c.clone();
    for ((j, t), v) in g.iter() {
        for f in a_monomial(rs, j, t).factors() {
            residue.accumulate(f.node, f.q, -v * f.power as i64);
        }
    }
    let monomial = Monomial::from_factors(residue.iter().map(|((i, q), v)| {
        (
            i,
            q,
            i32::try_from(v).expect("strip residues stay far below i32::MAX"),
        )
    }));
    StripEvaluation { residue, monomial }
}

/// The unique `g` on white points, vanishing above the highest source row,
/// with `g(i, q−1) + g(i, q+1) − Σ_{j∼i} g(j, q) = c(i, q)` at every black
/// point with `q > 0`. Solved from the bottom of the support upwards, each
/// equation fixing `g(i, q−1)`.
pub fn strip_solve(rs: &RootSystem, c: &StripFunction) -> Result<StripFunction> {
    for ((i, q), _) in c.iter() {
        rs.check_node(i)?;
        if q < 0 || !is_black_point(rs, i, q) {
            return Err(Error::InvalidSource(format!(
                "c({}, {q}) is not on a black strip point",
                i + 1
            )));
        }
    }
    let mut g = StripFunction::new();
    let Some(top) = c.max_q() else {
        return Ok(g);
    };
    for q in (1..=top).rev() {
        for i in rs.nodes().filter(|&i| is_black_point(rs, i, q)) {
            let v = c.get(i, q) - g.get(i, q + 1)
                + rs.neighbours(i).iter().map(|&j| g.get(j, q)).sum::<i64>();
            g.accumulate(i, q - 1, v);
        }
    }
    Ok(g)
}
