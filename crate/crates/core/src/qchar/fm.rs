//! The Frenkel–Mukhin expansion of fundamental q-characters.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::monomial::{a_monomial, Monomial};
use super::sl2::sl2_expand;
use crate::error::{Error, Result};
use crate::root_system::{Node, RootSystem};

/// Default bound on the number of distinct monomials; E₆ needs a few
/// thousand, E₇ several hundred thousand.
pub const DEFAULT_MAX_MONOMIALS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub monomial: Monomial,
    pub multiplicity: u64,
    /// Number of `A^{-1}` factors separating the monomial from the head.
    pub depth: u32,
}

/// A lowering edge `to = from · A_{node, q}^{-1}` between term indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub node: Node,
    pub q: i32,
}

/// `χ_q(V_{i, q^0})` as a multiset of monomials with its lowering graph.
///
/// Terms are sorted by depth, then by monomial, so index 0 is the head.
#[derive(Clone, Debug)]
pub struct QCharacter {
    algebra: String,
    rank: usize,
    node: Node,
    terms: Vec<Term>,
    index: HashMap<Monomial, usize>,
    edges: Vec<Edge>,
}

struct Pending {
    depth: u32,
    /// Multiplicity already produced by strings in each direction.
    coloured: Vec<u64>,
}

pub fn fm_qcharacter(rs: &RootSystem, i: Node) -> Result<QCharacter> {
    fm_qcharacter_capped(rs, i, DEFAULT_MAX_MONOMIALS)
}

/// Runs the expansion, failing with [`Error::CapExceeded`] once more than
/// `cap` distinct monomials have been generated.
///
/// Monomials are processed in order of depth. On reaching `m` every string
/// that can pass through it has already been started, so its multiplicity is
/// the largest multiplicity accounted for in any direction. For every
/// direction `j` in which `m` is `j`-dominant and under-accounted, the
/// missing copies of the `sl_2` character of `β_j(m)` are lifted back through
/// `A_{j,r}^{-1}` and credited to direction `j` of each lifted monomial.
pub fn fm_qcharacter_capped(rs: &RootSystem, i: Node, cap: usize) -> Result<QCharacter> {
    rs.check_node(i)?;
    let rank = rs.rank();
    let head = Monomial::y(i, 0);
    let mut pending: HashMap<Monomial, Pending> = HashMap::new();
    let mut queue: BTreeSet<(u32, Monomial)> = BTreeSet::new();
    let mut a_inv: HashMap<(Node, i32), Monomial> = HashMap::new();
    let mut done: Vec<Term> = Vec::new();

    pending.insert(
        head.clone(),
        Pending {
            depth: 0,
            coloured: vec![0; rank],
        },
    );
    queue.insert((0, head.clone()));

    while let Some((depth, m)) = queue.pop_first() {
        let state = pending.remove(&m).expect("queued monomials are pending");
        let mult = if m == head {
            1
        } else {
            state.coloured.iter().copied().max().unwrap_or(0)
        };
        for j in 0..rank {
            let have = state.coloured[j];
            if !m.is_node_dominant(j) {
                if have != mult {
                    return Err(Error::Expansion(format!(
                        "{}: monomial {m} is not {}-dominant but only {have} of {mult} copies lie on {}-strings",
                        rs.name(),
                        j + 1,
                        j + 1
                    )));
                }
                continue;
            }
            let missing = mult - have;
            if missing == 0 {
                continue;
            }
            for term in sl2_expand(&m.restrict(j))? {
                if term.lowerings.is_empty() {
                    continue;
                }
                let mut lifted = m.clone();
                for &r in &term.lowerings {
                    let a = a_inv
                        .entry((j, r))
                        .or_insert_with(|| a_monomial(rs, j, r).inverse());
                    lifted = &lifted * a;
                }
                let d = depth + term.lowerings.len() as u32;
                let entry = pending.entry(lifted.clone()).or_insert_with(|| {
                    queue.insert((d, lifted.clone()));
                    Pending {
                        depth: d,
                        coloured: vec![0; rank],
                    }
                });
                debug_assert_eq!(entry.depth, d);
                entry.coloured[j] += missing * term.multiplicity;
            }
            if done.len() + pending.len() > cap {
                return Err(Error::CapExceeded { label: i + 1, cap });
            }
        }
        done.push(Term {
            monomial: m,
            multiplicity: mult,
            depth: state.depth,
        });
    }

    Ok(QCharacter::from_terms(rs, i, done))
}

impl QCharacter {
    fn from_terms(rs: &RootSystem, node: Node, mut terms: Vec<Term>) -> QCharacter {
        terms.sort_by(|a, b| (a.depth, &a.monomial).cmp(&(b.depth, &b.monomial)));
        let index: HashMap<Monomial, usize> = terms
            .iter()
            .enumerate()
            .map(|(k, t)| (t.monomial.clone(), k))
            .collect();
        let mut edges = Vec::new();
        for (from, t) in terms.iter().enumerate() {
            for f in t.monomial.factors().iter().filter(|f| f.power > 0) {
                let target = &t.monomial * &a_monomial(rs, f.node, f.q + 1).inverse();
                if let Some(&to) = index.get(&target) {
                    edges.push(Edge {
                        from,
                        to,
                        node: f.node,
                        q: f.q + 1,
                    });
                }
            }
        }
        edges.sort();
        QCharacter {
            algebra: rs.name(),
            rank: rs.rank(),
            node,
            terms,
            index,
            edges,
        }
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn node(&self) -> Node {
        self.node
    }

    pub fn head(&self) -> &Monomial {
        &self.terms[0].monomial
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities, the dimension of the module.
    pub fn dimension(&self) -> u64 {
        self.terms.iter().map(|t| t.multiplicity).sum()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Multiplicity of `m`, zero when absent.
    pub fn contains_monomial(&self, m: &Monomial) -> u64 {
        self.position(m).map_or(0, |k| self.terms[k].multiplicity)
    }

    /// `(positive, negative)` factor pairs of every monomial of the form
    /// `Y_{j,r} Y_{k,s}^{-1}`.
    pub fn quadratic_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms
            .iter()
            .map(|t| &t.monomial)
            .filter(|m| m.as_quadratic().is_some())
    }

    /// Checks the structural facts every fundamental character satisfies:
    /// unique dominant and antidominant monomials, support in `[0, h]`, an
    /// incoming edge at every non-head monomial, and for each direction `j`
    /// a decomposition into lifted `sl_2` characters with nonnegative
    /// coefficients.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let h = rs.coxeter_number() as i32;
        let fail = |msg: String| {
            Err(Error::Expansion(format!(
                "{} V_{}: {msg}",
                self.algebra,
                self.node + 1
            )))
        };

        let dominant: Vec<&Monomial> = self
            .terms
            .iter()
            .map(|t| &t.monomial)
            .filter(|m| m.is_dominant())
            .collect();
        if dominant != [&Monomial::y(self.node, 0)] || self.terms[0].multiplicity != 1 {
            return fail(format!("dominant monomials {dominant:?}"));
        }
        let lowest = Monomial::y(rs.bar(self.node), h).inverse();
        let anti: Vec<&Monomial> = self
            .terms
            .iter()
            .map(|t| &t.monomial)
            .filter(|m| m.is_antidominant())
            .collect();
        if anti != [&lowest] {
            return fail(format!(
                "antidominant monomials {anti:?}, expected {lowest}"
            ));
        }
        for t in &self.terms {
            if let Some((lo, hi)) = t.monomial.support() {
                if lo < 0 || hi > h {
                    return fail(format!("{} has support outside [0, {h}]", t.monomial));
                }
            }
        }
        let mut has_parent = vec![false; self.terms.len()];
        for e in &self.edges {
            has_parent[e.to] = true;
        }
        if let Some(k) = (1..self.terms.len()).find(|&k| !has_parent[k]) {
            return fail(format!("{} has no incoming edge", self.terms[k].monomial));
        }
        for j in 0..self.rank {
            self.peel_direction(rs, j)
                .or_else(|e| fail(e.to_string()))?;
        }
        Ok(())
    }

    /// Removes lifted `sl_2` strings in direction `j` from the top down; the
    /// character is a nonnegative sum of such strings exactly when this ends
    /// with nothing left and never goes negative.
    fn peel_direction(&self, rs: &RootSystem, j: Node) -> Result<()> {
        let mut left: BTreeMap<(u32, Monomial), i64> = self
            .terms
            .iter()
            .map(|t| ((t.depth, t.monomial.clone()), t.multiplicity as i64))
            .collect();
        while let Some(((depth, top), count)) = left.pop_first() {
            if count == 0 {
                continue;
            }
            if count < 0 || !top.is_node_dominant(j) {
                return Err(Error::Expansion(format!(
                    "direction {}: {top} remains with coefficient {count} but heads no string",
                    j + 1
                )));
            }
            if count == 0 {
                continue;
            }
            for term in sl2_expand(&top.restrict(j))? {
                if term.lowerings.is_empty() {
                    continue;
                }
                let mut lifted = top.clone();
                for &r in &term.lowerings {
                    lifted = &lifted * &a_monomial(rs, j, r).inverse();
                }
                let key = (depth + term.lowerings.len() as u32, lifted);
                let c = left.entry(key).or_insert(0);
                *c -= count * term.multiplicity as i64;
            }
        }
        Ok(())
    }
}
