use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Node, RootSystem, Weight};

/// One factor `Y_{node, q^q}^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub node: Node,
    pub q: i32,
    pub power: i32,
}

/// A Laurent monomial in the variables `Y_{i, a q^r}`, all rapidities on the
/// lattice `a q^Z` of one fixed base `a`.
///
/// Factors are kept sorted by `(node, q)` with no zero powers, so equality is
/// structural and the empty monomial is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<Factor>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// `Y_{node, q}`.
    pub fn y(node: Node, q: i32) -> Monomial {
        Monomial {
            factors: vec![Factor { node, q, power: 1 }],
        }
    }

    /// Collects arbitrary `(node, q, power)` triples, merging repeats.
    pub fn from_factors<I>(factors: I) -> Monomial
    where
        I: IntoIterator<Item = (Node, i32, i32)>,
    {
        let mut acc: BTreeMap<(Node, i32), i32> = BTreeMap::new();
        for (node, q, power) in factors {
            *acc.entry((node, q)).or_default() += power;
        }
        Monomial {
            factors: acc
                .into_iter()
                .filter(|&(_, p)| p != 0)
                .map(|((node, q), power)| Factor { node, q, power })
                .collect(),
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn power_of(&self, node: Node, q: i32) -> i32 {
        self.factors
            .binary_search_by(|f| (f.node, f.q).cmp(&(node, q)))
            .map(|k| self.factors[k].power)
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    power: -f.power,
                    ..*f
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    power: f.power * k,
                    ..*f
                })
                .collect(),
        }
    }

    /// Multiplies every rapidity by `q^shift`.
    pub fn shift(&self, shift: i32) -> Monomial {
        Monomial {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    q: f.q + shift,
                    ..*f
                })
                .collect(),
        }
    }

    /// The `Y ↔ Y^{-1}`, `q^n ↔ q^{-n}` involution.
    pub fn dual(&self) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|f| (f.node, -f.q, -f.power)))
    }

    /// `β_j`: keeps only the factors at `node`.
    pub fn restrict(&self, node: Node) -> Sl2Monomial {
        Sl2Monomial(
            self.factors
                .iter()
                .filter(|f| f.node == node)
                .map(|f| (f.q, f.power))
                .collect(),
        )
    }

    pub fn is_dominant(&self) -> bool {
        self.factors.iter().all(|f| f.power > 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.factors.iter().all(|f| f.power < 0)
    }

    pub fn is_node_dominant(&self, node: Node) -> bool {
        self.factors.iter().all(|f| f.node != node || f.power > 0)
    }

    /// Some negative factor lies strictly to the right of every positive one.
    pub fn is_right_negative(&self) -> bool {
        let max_neg = self
            .factors
            .iter()
            .filter(|f| f.power < 0)
            .map(|f| f.q)
            .max();
        let max_pos = self
            .factors
            .iter()
            .filter(|f| f.power > 0)
            .map(|f| f.q)
            .max();
        match (max_neg, max_pos) {
            (Some(n), Some(p)) => n > p,
            (Some(_), None) => true,
            (None, _) => false,
        }
    }

    /// Some positive factor lies strictly to the left of every negative one.
    pub fn is_left_positive(&self) -> bool {
        let min_pos = self
            .factors
            .iter()
            .filter(|f| f.power > 0)
            .map(|f| f.q)
            .min();
        let min_neg = self
            .factors
            .iter()
            .filter(|f| f.power < 0)
            .map(|f| f.q)
            .min();
        match (min_pos, min_neg) {
            (Some(p), Some(n)) => p < n,
            (Some(_), None) => true,
            (None, _) => false,
        }
    }

    pub fn classify(&self) -> Classification {
        let mut non_dominant_nodes: Vec<Node> = self
            .factors
            .iter()
            .filter(|f| f.power < 0)
            .map(|f| f.node)
            .collect();
        non_dominant_nodes.dedup();
        Classification {
            dominant: self.is_dominant(),
            antidominant: self.is_antidominant(),
            non_dominant_nodes,
            right_negative: self.is_right_negative(),
            left_positive: self.is_left_positive(),
        }
    }

    /// Classical weight `Σ power · λ_node`.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut coeffs = vec![0; rank];
        for f in &self.factors {
            coeffs[f.node] += f.power as i64;
        }
        Weight::from_coeffs(coeffs)
    }

    /// Smallest and largest q-exponent, if any.
    pub fn support(&self) -> Option<(i32, i32)> {
        let min = self.factors.iter().map(|f| f.q).min()?;
        let max = self.factors.iter().map(|f| f.q).max()?;
        Some((min, max))
    }

    pub fn degree(&self) -> i32 {
        self.factors.iter().map(|f| f.power.abs()).sum()
    }

    /// `(positive, negative)` when this is `Y_{j,r} Y_{k,s}^{-1}`.
    pub fn as_quadratic(&self) -> Option<(Factor, Factor)> {
        match self.factors.as_slice() {
            [a, b] if a.power.abs() == 1 && b.power == -a.power => {
                Some(if a.power > 0 { (*a, *b) } else { (*b, *a) })
            }
            _ => None,
        }
    }

    fn merge(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (x, y) = (a[i], b[j]);
            match (x.node, x.q).cmp(&(y.node, y.q)) {
                std::cmp::Ordering::Less => {
                    out.push(x);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(y);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let power = x.power + y.power;
                    if power != 0 {
                        out.push(Factor { power, ..x });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        self.merge(rhs)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        self.merge(&rhs)
    }
}

/// `A_{j, q^r} = Y_{j,r-1} Y_{j,r+1} ∏_{k∼j} Y_{k,r}^{-1}`.
pub fn a_monomial(rs: &RootSystem, j: Node, r: i32) -> Monomial {
    Monomial::from_factors(
        [(j, r - 1, 1), (j, r + 1, 1)]
            .into_iter()
            .chain(rs.neighbours(j).iter().map(|&k| (k, r, -1))),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub dominant: bool,
    pub antidominant: bool,
    /// Nodes at which the monomial fails to be `i`-dominant.
    pub non_dominant_nodes: Vec<Node>,
    pub right_negative: bool,
    pub left_positive: bool,
}

impl Classification {
    pub fn is_node_dominant(&self, node: Node) -> bool {
        !self.non_dominant_nodes.contains(&node)
    }
}

/// Renders with 1-based node labels, e.g. `Y[1,0] Y[2,3]^-1`; the unit is `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y[{},{}]", fac.node + 1, fac.q)?;
            if fac.power != 1 {
                write!(f, "^{}", fac.power)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut triples = Vec::new();
        for token in s.split_whitespace() {
            let (body, power) = split_power(token)?;
            let inner = body
                .strip_prefix("Y[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad factor {token:?}")))?;
            let (node, q) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad factor {token:?}")))?;
            let label: usize = parse_int(node, token)?;
            if label == 0 {
                return Err(Error::Parse(format!("node labels start at 1: {token:?}")));
            }
            triples.push((label - 1, parse_int(q, token)?, power));
        }
        if triples.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        Ok(Monomial::from_factors(triples))
    }
}

fn split_power(token: &str) -> Result<(&str, i32)> {
    match token.split_once('^') {
        Some((body, p)) => Ok((body, parse_int(p, token)?)),
        None => Ok((token, 1)),
    }
}

fn parse_int<T: FromStr>(s: &str, token: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer in {token:?}")))
}

/// A monomial of the `sl_2` subalgebra at one node: `q-exponent → power`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sl2Monomial(pub BTreeMap<i32, i32>);

impl Sl2Monomial {
    pub fn one() -> Self {
        Sl2Monomial::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i32, i32)>>(pairs: I) -> Self {
        let mut m = Sl2Monomial::one();
        for (q, p) in pairs {
            m.mul_factor(q, p);
        }
        m
    }

    pub fn mul_factor(&mut self, q: i32, power: i32) {
        let e = self.0.entry(q).or_default();
        *e += power;
        if *e == 0 {
            self.0.remove(&q);
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&p| p > 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total power; the `sl_2` weight.
    pub fn weight(&self) -> i32 {
        self.0.values().sum()
    }

    /// Multiplies by `A_r^{-1} = Y_{r-1}^{-1} Y_{r+1}^{-1}`.
    pub fn lower(&mut self, r: i32) {
        self.mul_factor(r - 1, -1);
        self.mul_factor(r + 1, -1);
    }
}

impl Mul for &Sl2Monomial {
    type Output = Sl2Monomial;
    fn mul(self, rhs: &Sl2Monomial) -> Sl2Monomial {
        let mut out = self.clone();
        for (&q, &p) in &rhs.0 {
            out.mul_factor(q, p);
        }
        out
    }
}

impl fmt::Display for Sl2Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (q, p)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y[{q}]")?;
            if *p != 1 {
                write!(f, "^{p}")?;
            }
        }
        Ok(())
    }
}
