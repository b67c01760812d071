//! q-characters of `U_q(ŝl_2)`: segments, Kirillov–Reshetikhin characters and
//! the character of the irreducible module with a given dominant monomial.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::monomial::Sl2Monomial;
use crate::error::{Error, Result};

/// The q-string `{c − l + 1, c − l + 3, …, c + l − 1}` of `length` points
/// centred on `centre`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub centre: i32,
    pub length: u32,
}

impl Segment {
    pub fn new(centre: i32, length: u32) -> Segment {
        assert!(length > 0, "segments are non-empty");
        Segment { centre, length }
    }

    /// The segment `{start, start + 2, …}` with `length` points.
    pub fn starting_at(start: i32, length: u32) -> Segment {
        Segment::new(start + length as i32 - 1, length)
    }

    pub fn start(&self) -> i32 {
        self.centre - self.length as i32 + 1
    }

    pub fn end(&self) -> i32 {
        self.centre + self.length as i32 - 1
    }

    pub fn points(&self) -> impl Iterator<Item = i32> {
        let start = self.start();
        (0..self.length as i32).map(move |k| start + 2 * k)
    }

    fn same_parity(&self, other: &Segment) -> bool {
        (self.start() - other.start()).rem_euclid(2) == 0
    }

    pub fn contains(&self, other: &Segment) -> bool {
        self.same_parity(other) && self.start() <= other.start() && other.end() <= self.end()
    }

    /// The union is a segment and neither contains the other.
    pub fn in_special_position(&self, other: &Segment) -> bool {
        if !self.same_parity(other) || self.contains(other) || other.contains(self) {
            return false;
        }
        let (lo, hi) = if self.start() <= other.start() {
            (self, other)
        } else {
            (other, self)
        };
        hi.start() <= lo.end() + 2
    }

    /// `∏ Y_p` over the points.
    pub fn monomial(&self) -> Sl2Monomial {
        Sl2Monomial::from_pairs(self.points().map(|p| (p, 1)))
    }
}

/// A monomial of an `sl_2` character together with the positions `r` of the
/// `A_r^{-1}` factors separating it from the highest monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sl2Term {
    pub lowerings: Vec<i32>,
    pub monomial: Sl2Monomial,
    pub multiplicity: u64,
}

/// The `length + 1` monomials of `χ_q(W^{(length)}_{q^centre})`, highest first.
///
/// Term `t` lowers the last `t` points `p` of the segment, each by `A_{p+1}^{-1}`,
/// turning them into `Y_{p+2}^{-1}`.
pub fn sl2_kr_character(centre: i32, length: u32) -> Vec<Sl2Term> {
    let seg = Segment::new(centre, length);
    let points: Vec<i32> = seg.points().collect();
    let r = points.len();
    (0..=r)
        .map(|t| {
            let lowerings: Vec<i32> = points[r - t..].iter().map(|p| p + 1).collect();
            let monomial = Sl2Monomial::from_pairs(
                points[..r - t]
                    .iter()
                    .map(|&p| (p, 1))
                    .chain(points[r - t..].iter().map(|&p| (p + 2, -1))),
            );
            Sl2Term {
                lowerings,
                monomial,
                multiplicity: 1,
            }
        })
        .collect()
}

/// Splits the factors of a dominant monomial into segments pairwise not in
/// special position: repeatedly take the leftmost remaining point and the
/// longest chain `p, p + 2, …` through remaining points.
pub fn sl2_segments(m: &Sl2Monomial) -> Result<Vec<Segment>> {
    if !m.is_dominant() {
        return Err(Error::Expansion(format!("{m} is not dominant")));
    }
    let mut left: BTreeMap<i32, i32> = m.0.clone();
    let mut out = Vec::new();
    while let Some((&start, _)) = left.iter().next() {
        let mut p = start;
        let mut length = 0;
        while let Some(c) = left.get_mut(&p) {
            *c -= 1;
            if *c == 0 {
                left.remove(&p);
            }
            length += 1;
            p += 2;
        }
        out.push(Segment::starting_at(start, length));
    }
    Ok(out)
}

/// The product of the KR characters of `segments`, with multiplicities merged.
pub fn segments_character(segments: &[Segment]) -> Vec<Sl2Term> {
    let mut acc: BTreeMap<Vec<i32>, u64> = BTreeMap::from([(Vec::new(), 1)]);
    let mut head = Sl2Monomial::one();
    for seg in segments {
        head = &head * &seg.monomial();
        let kr = sl2_kr_character(seg.centre, seg.length);
        let mut next = BTreeMap::new();
        for (low, mult) in &acc {
            for term in &kr {
                let mut merged = low.clone();
                merged.extend_from_slice(&term.lowerings);
                merged.sort_unstable();
                *next.entry(merged).or_insert(0) += mult;
            }
        }
        acc = next;
    }
    let mut terms: Vec<Sl2Term> = acc
        .into_iter()
        .map(|(lowerings, multiplicity)| {
            let mut monomial = head.clone();
            for &r in &lowerings {
                monomial.lower(r);
            }
            Sl2Term {
                lowerings,
                monomial,
                multiplicity,
            }
        })
        .collect();
    terms.sort_by(|a, b| (a.lowerings.len(), &a.lowerings).cmp(&(b.lowerings.len(), &b.lowerings)));
    terms
}

/// The q-character of the irreducible `sl_2` module with highest monomial `m`.
pub fn sl2_expand(m: &Sl2Monomial) -> Result<Vec<Sl2Term>> {
    Ok(segments_character(&sl2_segments(m)?))
}

/// Writes a multiset of `sl_2` monomials as a sum of irreducible characters,
/// returning the highest monomials with their multiplicities. Fails if the
/// multiset is not such a sum with nonnegative coefficients.
pub fn sl2_decompose(multiset: &BTreeMap<Sl2Monomial, i64>) -> Result<BTreeMap<Sl2Monomial, u64>> {
    let mut left: BTreeMap<Sl2Monomial, i64> = multiset
        .iter()
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (m.clone(), c))
        .collect();
    let mut tops = BTreeMap::new();
    while !left.is_empty() {
        let (top, count) = left
            .iter()
            .max_by_key(|(m, _)| m.weight())
            .map(|(m, &c)| (m.clone(), c))
            .expect("non-empty");
        if count < 0 || !top.is_dominant() {
            return Err(Error::Expansion(format!(
                "highest remaining monomial {top} has coefficient {count} and cannot head an irreducible"
            )));
        }
        for term in sl2_expand(&top)? {
            let c = left.entry(term.monomial.clone()).or_insert(0);
            *c -= count * term.multiplicity as i64;
            if *c == 0 {
                left.remove(&term.monomial);
            }
        }
        *tops.entry(top).or_insert(0) += count as u64;
    }
    Ok(tops)
}
