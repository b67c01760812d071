//! Solutions of Dorey's fusing rule `0 ∈ Γλ_i + Γλ_j + Γλ_k`, their fusing
//! angles and rapidities, and the Weyl-orbit (PRV) admissibility test.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::root_system::{
    normalize_angle, Colour, ColourPair, Node, RootSystem, Weight, TOLERANCE,
};

/// One solution `w^{n₁}λ_{i₁} + w^{n₂}λ_{i₂} + w^{n₃}λ_{i₃} = 0`, gauge-fixed to
/// `n₁ = 0`.
///
/// Coxeter exponents refer to the colouring of the root system that produced
/// the solution. Rapidity exponents are `(h/π)·θ(λ_{i₁}, w^{n_k}λ_{i_k})`
/// measured in the orientation of the colouring where `i₁` is black, so they
/// do not depend on the colouring used for enumeration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusingSolution {
    pub nodes: [Node; 3],
    pub exponents: [usize; 3],
    pub rapidity_exponents: [i32; 3],
    /// `angles[k]` is the unsigned angle between the two vectors other than
    /// the `k`-th one.
    pub angles: [f64; 3],
}

impl FusingSolution {
    /// Checks the zero-sum identity and fills in rapidities and angles.
    pub fn new(rs: &RootSystem, nodes: [Node; 3], exponents: [i64; 3]) -> Result<FusingSolution> {
        Self::in_pair(&ColourPair::new(rs), nodes, exponents)
    }

    /// As [`new`](Self::new), reusing a prebuilt pair of colourings; the
    /// exponents refer to `pair.base()`.
    pub fn in_pair(
        pair: &ColourPair<'_>,
        nodes: [Node; 3],
        exponents: [i64; 3],
    ) -> Result<FusingSolution> {
        let rs = pair.base();
        for &i in &nodes {
            rs.check_node(i)?;
        }
        let h = rs.coxeter_number() as i64;
        let shift = exponents[0];
        let exponents = exponents.map(|n| (n - shift).rem_euclid(h) as usize);
        let vectors = solution_vectors(rs, nodes, exponents);
        let sum = vectors
            .iter()
            .fold(Weight::zero(rs.rank()), |acc, v| acc + v.clone());
        if !sum.is_zero() {
            return Err(Error::NotASolution(format!(
                "{} nodes {:?} exponents {:?} sum to {sum}",
                rs.name(),
                nodes.map(|i| i + 1),
                exponents
            )));
        }
        let rapidity_exponents = rapidities_of(pair.with_black(nodes[0]), nodes, &vectors)?;
        let angles = angles_of(rs, &vectors)?;
        Ok(FusingSolution {
            nodes,
            exponents,
            rapidity_exponents,
            angles,
        })
    }

    /// The three vectors `w^{n_k}λ_{i_k}`.
    pub fn vectors(&self, rs: &RootSystem) -> [Weight; 3] {
        solution_vectors(rs, self.nodes, self.exponents)
    }

    /// The node triple as an unordered multiset.
    pub fn unordered_nodes(&self) -> [Node; 3] {
        let mut n = self.nodes;
        n.sort_unstable();
        n
    }
}

fn solution_vectors(rs: &RootSystem, nodes: [Node; 3], exponents: [usize; 3]) -> [Weight; 3] {
    [0, 1, 2].map(|k| rs.coxeter_apply(&rs.fundamental(nodes[k]), exponents[k] as i64))
}

fn rapidities_of(
    oriented: &RootSystem,
    nodes: [Node; 3],
    vectors: &[Weight; 3],
) -> Result<[i32; 3]> {
    let rs = oriented;
    let reference = rs.fundamental(nodes[0]);
    let mut out = [0; 3];
    for (k, v) in vectors.iter().enumerate() {
        out[k] = oriented.angle_units(&reference, v)?.ok_or_else(|| {
            Error::Inconsistent(format!(
                "{}: angle to {v} is not an integer multiple of π/h",
                rs.name()
            ))
        })?;
    }
    Ok(out)
}

fn angles_of(rs: &RootSystem, vectors: &[Weight; 3]) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (k, slot) in out.iter_mut().enumerate() {
        let (a, b) = (&vectors[(k + 1) % 3], &vectors[(k + 2) % 3]);
        *slot = rs.plane_angle(a, b)?.abs();
    }
    Ok(out)
}

/// Every solution for every ordered node triple, with `n₁ = 0`. The output is
/// sorted by nodes, then exponents.
pub fn enumerate_fusings(rs: &RootSystem) -> Vec<FusingSolution> {
    enumerate_fusings_with(rs, Exec::default())
}

pub fn enumerate_fusings_with(rs: &RootSystem, exec: Exec) -> Vec<FusingSolution> {
    let h = rs.coxeter_number();
    let pair = ColourPair::new(rs);
    let index: Vec<HashMap<Weight, usize>> = rs.nodes().map(|i| rs.orbit_index(i)).collect();
    let orbits: Vec<Vec<Weight>> = rs.nodes().map(|i| rs.coxeter_orbit(i)).collect();
    let firsts: Vec<Node> = rs.nodes().collect();
    let per_first = exec.map(firsts, |i1| {
        let mut found = Vec::new();
        let minus_l1 = -rs.fundamental(i1);
        for i2 in rs.nodes() {
            for (n2, v2) in orbits[i2].iter().enumerate() {
                let target = &minus_l1 - v2;
                for i3 in rs.nodes() {
                    if let Some(&n3) = index[i3].get(&target) {
                        let sol =
                            FusingSolution::in_pair(&pair, [i1, i2, i3], [0, n2 as i64, n3 as i64])
                                .expect("orbit lookup produced a zero-sum triple");
                        found.push(sol);
                    }
                }
            }
        }
        debug_assert!(found.iter().all(|s| s.exponents.iter().all(|&n| n < h)));
        found
    });
    let mut all: Vec<FusingSolution> = per_first.into_iter().flatten().collect();
    all.sort_by_key(|s| (s.nodes, s.exponents));
    all
}

/// Unordered node triples admitting at least one solution.
pub fn fusing_triples(solutions: &[FusingSolution]) -> BTreeSet<[Node; 3]> {
    solutions.iter().map(|s| s.unordered_nodes()).collect()
}

/// One representative per unordered node triple: the first solution whose
/// nodes are already sorted.
pub fn unordered_fusings(solutions: &[FusingSolution]) -> Vec<FusingSolution> {
    let mut seen = BTreeSet::new();
    solutions
        .iter()
        .filter(|s| s.nodes == s.unordered_nodes() && seen.insert(s.nodes))
        .cloned()
        .collect()
}

pub fn rapidity_exponents(sol: &FusingSolution) -> [i32; 3] {
    sol.rapidity_exponents
}

/// Angles summing to `2π`; recomputed from the root system.
pub fn fusing_angles(rs: &RootSystem, sol: &FusingSolution) -> Result<[f64; 3]> {
    angles_of(rs, &sol.vectors(rs))
}

/// A solution rewritten as `λ_{i₁} − w^n λ_{ī₂} + w^m λ_{i₃} = 0` in the
/// colouring where `i₁` is black, with `r = 2n` or `2n − 1` and `s = 2m` or
/// `2m − 1` according to the colours of `ī₂` and `i₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalFusing {
    /// The colouring used is the swap of the one the solution came from.
    pub swapped: bool,
    /// Slots 2 and 3 of the input were exchanged.
    pub slots_exchanged: bool,
    pub i1: Node,
    pub i2: Node,
    pub i2_bar: Node,
    pub i3: Node,
    pub n: usize,
    pub m: usize,
    pub r: i32,
    pub s: i32,
}

impl CanonicalFusing {
    /// Builds the canonical data from an identity `λ_{i₁} − w^nλ_{ī₂} + w^mλ_{i₃} = 0`
    /// in the colouring of `rs`, which must have `i₁` black.
    pub fn new(
        rs: &RootSystem,
        i1: Node,
        i2_bar: Node,
        i3: Node,
        n: usize,
        m: usize,
    ) -> Result<CanonicalFusing> {
        for i in [i1, i2_bar, i3] {
            rs.check_node(i)?;
        }
        if rs.colour(i1) != Colour::Black {
            return Err(Error::NotASolution(format!(
                "node {} must be black in the canonical form",
                i1 + 1
            )));
        }
        let lhs = &(&rs.fundamental(i1) - &rs.coxeter_apply(&rs.fundamental(i2_bar), n as i64))
            + &rs.coxeter_apply(&rs.fundamental(i3), m as i64);
        if !lhs.is_zero() {
            return Err(Error::NotASolution(format!(
                "λ_{} - w^{n} λ_{} + w^{m} λ_{} = {lhs}",
                i1 + 1,
                i2_bar + 1,
                i3 + 1
            )));
        }
        let r = colour_exponent(rs.colour(i2_bar), n);
        let s = colour_exponent(rs.colour(i3), m);
        if r >= s {
            return Err(Error::NotASolution(format!(
                "expected r < s, got r={r}, s={s}"
            )));
        }
        Ok(CanonicalFusing {
            swapped: false,
            slots_exchanged: false,
            i1,
            i2: rs.bar(i2_bar),
            i2_bar,
            i3,
            n,
            m,
            r,
            s,
        })
    }

    /// Rapidity exponents `(0, r − h, s)` of slots `(i₁, i₂, i₃)`.
    pub fn rapidities(&self, h: usize) -> [i32; 3] {
        [0, self.r - h as i32, self.s]
    }
}

/// `2n` on black nodes, `2n − 1` on white ones.
pub fn colour_exponent(colour: Colour, n: usize) -> i32 {
    match colour {
        Colour::Black => 2 * n as i32,
        Colour::White => 2 * n as i32 - 1,
    }
}

/// Rewrites a solution into canonical form, cross-checking the parity
/// formula for `(r, s)` against the measured rapidities.
pub fn canonicalize(rs: &RootSystem, sol: &FusingSolution) -> Result<CanonicalFusing> {
    canonicalize_in(&ColourPair::new(rs), sol)
}

pub fn canonicalize_in(pair: &ColourPair<'_>, sol: &FusingSolution) -> Result<CanonicalFusing> {
    let rs = pair.base();
    let h = rs.coxeter_number();
    let i1 = sol.nodes[0];
    let black = pair.with_black(i1);
    let swapped = black.colour(i1) != rs.colour(i1);
    let recheck = FusingSolution::in_pair(pair, sol.nodes, sol.exponents.map(|n| n as i64))?;
    if recheck.rapidity_exponents != sol.rapidity_exponents {
        return Err(Error::NotASolution(format!(
            "stored rapidities {:?} disagree with {:?}",
            sol.rapidity_exponents, recheck.rapidity_exponents
        )));
    }
    let to_black = |n: usize| -> usize {
        if swapped {
            (h - n % h) % h
        } else {
            n
        }
    };
    let (mut i2, mut i3) = (sol.nodes[1], sol.nodes[2]);
    let (mut n2, mut n3) = (to_black(sol.exponents[1]), to_black(sol.exponents[2]));
    let (mut e2, mut e3) = (sol.rapidity_exponents[1], sol.rapidity_exponents[2]);
    let slots_exchanged = e2 > 0;
    if slots_exchanged {
        std::mem::swap(&mut i2, &mut i3);
        std::mem::swap(&mut n2, &mut n3);
        std::mem::swap(&mut e2, &mut e3);
    }

    // -w^{n₂}λ_{i₂} = w^n λ_{ī₂}
    let i2_bar = black.bar(i2);
    let target = -black.coxeter_apply(&black.fundamental(i2), n2 as i64);
    let n = black
        .coxeter_orbit(i2_bar)
        .iter()
        .position(|v| *v == target)
        .ok_or_else(|| Error::Inconsistent(format!("{target} is not in the orbit of λ_ī")))?;
    let n = if n == 0 { h } else { n };
    let m = if n3 == 0 { h } else { n3 };

    let mut canon = CanonicalFusing::new(black, i1, i2_bar, i3, n, m)?;
    canon.i2 = i2;
    canon.swapped = swapped;
    canon.slots_exchanged = slots_exchanged;
    let predicted = canon.rapidities(h);
    if predicted[1] != e2 || predicted[2] != e3 {
        return Err(Error::Inconsistent(format!(
            "parity formula gives rapidities {predicted:?}, angles give (0, {e2}, {e3})"
        )));
    }
    Ok(canon)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrvOutcome {
    Admissible,
    NotAdmissible,
    /// The orbit enumeration exceeded the configured cap.
    NotComputed,
}

impl PrvOutcome {
    pub fn is_admissible(self) -> bool {
        self == PrvOutcome::Admissible
    }
}

pub const DEFAULT_PRV_CAP: usize = 10_000_000;

/// Whether `0 ∈ Wλ_i + Wλ_j + Wλ_k`.
pub fn prv_admissible(rs: &RootSystem, i: Node, j: Node, k: Node) -> Result<PrvOutcome> {
    prv_admissible_capped(rs, i, j, k, DEFAULT_PRV_CAP)
}

/// As [`prv_admissible`] with an explicit bound on the number of orbit
/// weights enumerated.
///
/// By W-invariance the first term may be fixed to `λ_i`; the condition then
/// reads `−λ_i − ν ∈ Wλ_k` for some `ν ∈ Wλ_j`, and orbit membership is
/// decided by the dominant representative. Only the smaller of the orbits of
/// `λ_j`, `λ_k` is enumerated.
pub fn prv_admissible_capped(
    rs: &RootSystem,
    i: Node,
    j: Node,
    k: Node,
    cap: usize,
) -> Result<PrvOutcome> {
    for n in [i, j, k] {
        rs.check_node(n)?;
    }
    let minus_li = -rs.fundamental(i);
    let (lj, lk) = (rs.fundamental(j), rs.fundamental(k));
    let Some(oj) = rs.weyl_orbit_capped(&lj, cap) else {
        return Ok(PrvOutcome::NotComputed);
    };
    let (enumerated, probe) = match rs.weyl_orbit_capped(&lk, oj.len()) {
        Some(ok) if ok.len() < oj.len() => (ok, lj),
        _ => (oj, lk),
    };
    let hit = enumerated
        .iter()
        .any(|nu| rs.dominant_representative(&(&minus_li - nu)) == probe);
    Ok(if hit {
        PrvOutcome::Admissible
    } else {
        PrvOutcome::NotAdmissible
    })
}

/// `(h/π)·θ` converted back to radians.
pub fn units_to_angle(units: i32, h: usize) -> f64 {
    normalize_angle(units as f64 * PI / h as f64)
}

/// Angle sum of a solution minus `2π`.
pub fn angle_defect(sol: &FusingSolution) -> f64 {
    sol.angles.iter().sum::<f64>() - 2.0 * PI
}

pub(crate) fn angles_are_valid(sol: &FusingSolution) -> bool {
    angle_defect(sol).abs() < TOLERANCE && sol.angles.iter().all(|&a| a > TOLERANCE)
}
