//! The bridge between q-character monomials and Coxeter-orbit identities,
//! and the two-sided check that the unit monomial occurs in a triple product
//! exactly when a fusing with matching rapidities exists.

mod strip;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use strip::{is_black_point, strip_evaluate, strip_solve, StripEvaluation, StripFunction};

use crate::dorey::{canonicalize_in, enumerate_fusings_with, CanonicalFusing, FusingSolution};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::qchar::{product_contains_one, CharacterTable, Monomial, QCharacter, Rapidity};
use crate::root_system::{Colour, ColourPair, Node, RootSystem, Weight};

/// `λ_left = Σ coeff · w^power λ_node`, read in the colouring where `left`
/// is black.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightIdentity {
    pub left: Node,
    pub terms: Vec<(i64, Node, i64)>,
}

impl WeightIdentity {
    /// `Σ coeff · w^power λ_node − λ_left`, which vanishes for a valid identity.
    pub fn defect(&self, rs: &RootSystem) -> Weight {
        let black = rs.with_black(self.left);
        let mut sum = -black.fundamental(self.left);
        for &(c, j, n) in &self.terms {
            sum += &(c * &black.coxeter_apply(&black.fundamental(j), n));
        }
        sum
    }

    pub fn holds(&self, rs: &RootSystem) -> bool {
        self.defect(rs).is_zero()
    }
}

/// Coxeter power attached to `Y_{j, q}` when `j` has the given colour.
fn power_of(colour: Colour, q: i32) -> Option<i64> {
    let q = q as i64;
    match (colour, q.rem_euclid(2)) {
        (Colour::Black, 0) => Some(q / 2),
        (Colour::White, 1) => Some((q + 1) / 2),
        _ => None,
    }
}

/// Reads a monomial of `χ_q(V_{i,0})` as the identity it encodes, replacing
/// each `Y_{j,q}^{±1}` by `±w^n λ_j`, and checks the identity exactly.
pub fn monomial_identity(rs: &RootSystem, qc: &QCharacter, m: &Monomial) -> Result<WeightIdentity> {
    if qc.contains_monomial(m) == 0 {
        return Err(Error::MonomialAbsent(m.to_string()));
    }
    let i = qc.node();
    identity_in(rs.with_black(i).as_ref(), i, m)
}

fn identity_in(black: &RootSystem, i: Node, m: &Monomial) -> Result<WeightIdentity> {
    debug_assert_eq!(black.colour(i), Colour::Black);
    let mut terms = Vec::with_capacity(m.factors().len());
    for f in m.factors() {
        let n = power_of(black.colour(f.node), f.q).ok_or(Error::ColouringViolation {
            label: f.node + 1,
            q: f.q,
        })?;
        terms.push((f.power as i64, f.node, n));
    }
    let id = WeightIdentity { left: i, terms };
    if !id.holds(black) {
        return Err(Error::TheoremViolation(format!(
            "monomial {m} of V_{} gives an identity with defect {}",
            i + 1,
            id.defect(black)
        )));
    }
    Ok(id)
}

/// The source `c` of a canonical fusing: `+1` at `(i₁, 0)`, `−1` at
/// `(ī₂, r)` and `+1` at `(i₃, s)`.
pub fn fusing_source(canon: &CanonicalFusing) -> StripFunction {
    StripFunction::from_values([
        ((canon.i1, 0), 1),
        ((canon.i2_bar, canon.r), -1),
        ((canon.i3, canon.s), 1),
    ])
}

/// Solves the strip for a canonical fusing and returns the quadratic
/// monomial `Y_{ī₂,r} Y_{i₃,s}^{-1}` with the `A`-exponents `g`.
///
/// Fails with [`Error::TheoremViolation`] if some `g` is negative, if the
/// residue does not vanish, or if the monomial is missing from
/// `χ_q(V_{i₁,0})`.
pub fn fusing_to_monomial(
    rs: &RootSystem,
    canon: &CanonicalFusing,
    table: &CharacterTable,
) -> Result<(Monomial, StripFunction)> {
    fusing_to_monomial_in(&ColourPair::new(rs), canon, table)
}

pub fn fusing_to_monomial_in(
    pair: &ColourPair<'_>,
    canon: &CanonicalFusing,
    table: &CharacterTable,
) -> Result<(Monomial, StripFunction)> {
    let black = pair.with_black(canon.i1);
    let c = fusing_source(canon);
    let g = strip_solve(black, &c)?;
    if !g.is_nonnegative() {
        return Err(Error::TheoremViolation(format!(
            "negative A-exponent for the fusing {canon:?}: {:?}",
            g.iter().filter(|&(_, v)| v < 0).collect::<Vec<_>>()
        )));
    }
    let eval = strip_evaluate(black, &c, &g);
    if !eval.monomial.is_one() {
        return Err(Error::TheoremViolation(format!(
            "m(c, g) = {} for the fusing {canon:?}",
            eval.monomial
        )));
    }
    let quadratic = Monomial::from_factors([(canon.i2_bar, canon.r, 1), (canon.i3, canon.s, -1)]);
    if table.get(canon.i1).contains_monomial(&quadratic) == 0 {
        return Err(Error::TheoremViolation(format!(
            "{quadratic} is missing from χ_q(V_{},0)",
            canon.i1 + 1
        )));
    }
    Ok((quadratic, g))
}

/// Reads a quadratic monomial `Y_{a,r} Y_{b,s}^{-1}` of `χ_q(V_{i,0})` as the
/// canonical identity `λ_i − w^n λ_a + w^m λ_b = 0`.
pub fn quadratic_to_canonical(
    pair: &ColourPair<'_>,
    i: Node,
    m: &Monomial,
) -> Result<CanonicalFusing> {
    let (pos, neg) = m
        .as_quadratic()
        .ok_or_else(|| Error::Parse(format!("{m} is not of the form Y Y^-1")))?;
    let black = pair.with_black(i);
    let id = identity_in(black, i, m)?;
    let n = id
        .terms
        .iter()
        .find(|t| t.0 == 1)
        .expect("positive factor")
        .2;
    let k = id
        .terms
        .iter()
        .find(|t| t.0 == -1)
        .expect("negative factor")
        .2;
    let mut canon = CanonicalFusing::new(black, i, pos.node, neg.node, n as usize, k as usize)?;
    canon.swapped = black.colour(i) != pair.base().colour(i);
    Ok(canon)
}

/// An ordered node triple with rapidity exponents relative to the first
/// slot, which is always `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RapidityTriple {
    pub nodes: [Node; 3],
    pub exponents: [i32; 3],
}

impl RapidityTriple {
    pub fn from_solution(sol: &FusingSolution) -> RapidityTriple {
        RapidityTriple {
            nodes: sol.nodes,
            exponents: sol.rapidity_exponents,
        }
    }

    pub fn factors(&self) -> [(Node, Rapidity); 3] {
        [0, 1, 2].map(|k| (self.nodes[k], Rapidity::q(self.exponents[k])))
    }
}

/// Which monomial each tensor slot contributes to the unit product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Middle,
    Head,
    Lowest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchRow {
    pub triple: RapidityTriple,
    pub dorey: bool,
    pub character: bool,
    /// Slot 1 contributes the quadratic monomial, the later slot the head,
    /// the earlier one the lowest monomial.
    pub roles: [Role; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub algebra: String,
    pub fusings: usize,
    pub quadratic_monomials: usize,
    pub s_dorey: BTreeSet<RapidityTriple>,
    pub s_char: BTreeSet<RapidityTriple>,
    pub rows: Vec<MatchRow>,
    /// Failures of the per-solution and per-monomial checks.
    pub violations: Vec<String>,
}

impl TheoremReport {
    /// Builds the match table of two rapidity sets.
    pub fn compare(
        algebra: String,
        fusings: usize,
        quadratic_monomials: usize,
        s_dorey: BTreeSet<RapidityTriple>,
        s_char: BTreeSet<RapidityTriple>,
        violations: Vec<String>,
    ) -> TheoremReport {
        let rows = s_dorey
            .union(&s_char)
            .map(|t| MatchRow {
                triple: *t,
                dorey: s_dorey.contains(t),
                character: s_char.contains(t),
                roles: roles_of(t),
            })
            .collect();
        TheoremReport {
            algebra,
            fusings,
            quadratic_monomials,
            s_dorey,
            s_char,
            rows,
            violations,
        }
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &MatchRow> {
        self.rows.iter().filter(|r| r.dorey != r.character)
    }

    pub fn is_match(&self) -> bool {
        self.s_dorey == self.s_char && self.violations.is_empty()
    }

    /// `0` on a match, `2` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_match() {
            0
        } else {
            2
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} fusings, {} quadratic monomials, {}",
            self.algebra,
            self.fusings,
            self.quadratic_monomials,
            if self.is_match() { "MATCH" } else { "MISMATCH" }
        )
    }
}

fn roles_of(t: &RapidityTriple) -> [Role; 3] {
    if t.exponents[1] < t.exponents[2] {
        [Role::Middle, Role::Lowest, Role::Head]
    } else {
        [Role::Middle, Role::Head, Role::Lowest]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_monomials: usize,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_monomials: crate::qchar::DEFAULT_MAX_MONOMIALS,
            exec: Exec::default(),
        }
    }
}

/// Triples read off the quadratic monomials of every fundamental character:
/// `Y_{a,r} Y_{b,s}^{-1} ∈ χ_q(V_{i,0})` gives `(i, ā, b)` at `(0, r − h, s)`
/// and `(i, b, ā)` at `(0, s, r − h)`.
pub fn character_triples(rs: &RootSystem, table: &CharacterTable) -> BTreeSet<RapidityTriple> {
    let h = rs.coxeter_number() as i32;
    let mut out = BTreeSet::new();
    for qc in table.characters() {
        let i = qc.node();
        for m in qc.quadratic_monomials() {
            let (pos, neg) = m.as_quadratic().expect("filtered");
            let j = rs.bar(pos.node);
            out.insert(RapidityTriple {
                nodes: [i, j, neg.node],
                exponents: [0, pos.q - h, neg.q],
            });
            out.insert(RapidityTriple {
                nodes: [i, neg.node, j],
                exponents: [0, neg.q, pos.q - h],
            });
        }
    }
    out
}

/// Computes both rapidity sets and every cross-check that links them.
///
/// Each fusing is canonicalized, pushed through the strip to its quadratic
/// monomial and confirmed by the product test; each quadratic monomial is
/// read back as a canonical identity and pushed through the strip again.
/// The fusing set is also recomputed in the swapped colouring.
pub fn verify_theorem(rs: &RootSystem, opts: &VerifyOptions) -> Result<TheoremReport> {
    let table = CharacterTable::with_options(rs, opts.max_monomials, opts.exec)?;
    Ok(verify_with_table(rs, &table, opts.exec))
}

pub fn verify_with_table(rs: &RootSystem, table: &CharacterTable, exec: Exec) -> TheoremReport {
    let pair = ColourPair::new(rs);
    let solutions = enumerate_fusings_with(rs, exec);
    let mut violations = coxeter_side_violations(&pair, &solutions, exec);

    let checks = exec.map(
        solutions.clone(),
        |sol| -> std::result::Result<(), String> {
            let canon = canonicalize_in(&pair, &sol).map_err(|e| format!("{sol:?}: {e}"))?;
            fusing_to_monomial_in(&pair, &canon, table).map_err(|e| format!("{sol:?}: {e}"))?;
            if !product_contains_one(table, RapidityTriple::from_solution(&sol).factors()) {
                return Err(format!(
                    "{sol:?}: the triple product misses the unit monomial"
                ));
            }
            Ok(())
        },
    );
    violations.extend(checks.into_iter().filter_map(|r| r.err()));

    let mut quadratic = 0;
    for qc in table.characters() {
        for m in qc.quadratic_monomials() {
            quadratic += 1;
            let round_trip = quadratic_to_canonical(&pair, qc.node(), m)
                .and_then(|canon| fusing_to_monomial_in(&pair, &canon, table));
            match round_trip {
                Ok((back, _)) if back == *m => {}
                Ok((back, _)) => violations.push(format!("{m} round-trips to {back}")),
                Err(e) => violations.push(format!("{m} in V_{}: {e}", qc.node() + 1)),
            }
        }
    }

    let s_dorey = solutions
        .iter()
        .map(RapidityTriple::from_solution)
        .collect();
    let s_char = character_triples(rs, table);
    TheoremReport::compare(
        rs.name(),
        solutions.len(),
        quadratic,
        s_dorey,
        s_char,
        violations,
    )
}

/// Checks that need no q-characters: the solution set in the swapped
/// colouring agrees, every solution canonicalizes, and every strip solution
/// is nonnegative with vanishing residue.
fn coxeter_side_violations(
    pair: &ColourPair<'_>,
    solutions: &[FusingSolution],
    exec: Exec,
) -> Vec<String> {
    let mut violations = Vec::new();
    let here: BTreeSet<RapidityTriple> = solutions
        .iter()
        .map(RapidityTriple::from_solution)
        .collect();
    let there: BTreeSet<RapidityTriple> = enumerate_fusings_with(pair.swapped(), exec)
        .iter()
        .map(RapidityTriple::from_solution)
        .collect();
    if here != there {
        violations.push(format!(
            "fusing rapidities depend on the colouring: {} vs {} triples",
            here.len(),
            there.len()
        ));
    }
    let checks = exec.map(
        solutions.to_vec(),
        |sol| -> std::result::Result<(), String> {
            if !crate::dorey::angles_are_valid(&sol) {
                return Err(format!("{sol:?}: fusing angles do not sum to 2π"));
            }
            let canon = canonicalize_in(pair, &sol).map_err(|e| format!("{sol:?}: {e}"))?;
            let black = pair.with_black(canon.i1);
            let c = fusing_source(&canon);
            let g = strip_solve(black, &c).map_err(|e| e.to_string())?;
            if !g.is_nonnegative() {
                return Err(format!("{sol:?}: negative A-exponent"));
            }
            if !strip_evaluate(black, &c, &g).monomial.is_one() {
                return Err(format!("{sol:?}: strip residue does not vanish"));
            }
            Ok(())
        },
    );
    violations.extend(checks.into_iter().filter_map(|r| r.err()));
    violations
}

/// Outcome of the checks available without q-characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterReport {
    pub algebra: String,
    pub fusings: usize,
    pub unordered_triples: usize,
    pub violations: Vec<String>,
}

impl CoxeterReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_coxeter_side(rs: &RootSystem, exec: Exec) -> CoxeterReport {
    let pair = ColourPair::new(rs);
    let solutions = enumerate_fusings_with(rs, exec);
    let violations = coxeter_side_violations(&pair, &solutions, exec);
    CoxeterReport {
        algebra: rs.name(),
        fusings: solutions.len(),
        unordered_triples: crate::dorey::fusing_triples(&solutions).len(),
        violations,
    }
}
