//! One PASS/FAIL line per acceptance criterion, with wall-clock limits.
//! Exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dorey_core::correspondence::{
    monomial_identity, strip_solve, verify_theorem, StripFunction, VerifyOptions,
};
use dorey_core::dorey::{
    canonicalize, enumerate_fusings, fusing_triples, prv_admissible, PrvOutcome,
};
use dorey_core::export;
use dorey_core::qchar::{
    fm_qcharacter, product_contains_one, sl2_decompose, CharacterTable, Monomial, Rapidity,
    Sl2Monomial,
};
use dorey_core::root_system::IntMatrix;
use dorey_core::{Colour, Family, RootSystem, Weight};
use proptest::test_runner::{Config, TestRunner};

use common::{product_oracle_disagreements, rs, DESK};

/// Angle sums must equal 2π within this.
const ANGLE_SUM_TOL: f64 = 1e-9;
/// `(h/π)·θ` must be within this of an integer.
const INTEGRALITY_TOL: f64 = 1e-6;
/// Random cases per randomized property.
const CASES: u32 = 256;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const D4_DOT: &str = r#"digraph "D4_V1" {
  node [shape=box];
  m0 [label="Y[1,0]"];
  m1 [label="Y[1,2]^-1 Y[2,1]"];
  m2 [label="Y[2,3]^-1 Y[3,2] Y[4,2]"];
  m3 [label="Y[3,2] Y[4,4]^-1"];
  m4 [label="Y[3,4]^-1 Y[4,2]"];
  m5 [label="Y[2,3] Y[3,4]^-1 Y[4,4]^-1"];
  m6 [label="Y[1,4] Y[2,5]^-1"];
  m7 [label="Y[1,6]^-1"];
  m0 -> m1 [label="A[1,1]^-1"];
  m1 -> m2 [label="A[2,2]^-1"];
  m2 -> m3 [label="A[4,3]^-1"];
  m2 -> m4 [label="A[3,3]^-1"];
  m3 -> m5 [label="A[3,3]^-1"];
  m4 -> m5 [label="A[4,3]^-1"];
  m5 -> m6 [label="A[2,4]^-1"];
  m6 -> m7 [label="A[1,5]^-1"];
}
"#;

fn d4_node_one_golden() -> Check {
    let d4 = rs(Family::D, 4);
    let qc = fm_qcharacter(&d4, 0).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = qc.terms().iter().map(|t| t.monomial.to_string()).collect();
    let want: BTreeSet<String> = [
        "Y[1,0]",
        "Y[1,2]^-1 Y[2,1]",
        "Y[2,3]^-1 Y[3,2] Y[4,2]",
        "Y[3,2] Y[4,4]^-1",
        "Y[3,4]^-1 Y[4,2]",
        "Y[2,3] Y[3,4]^-1 Y[4,4]^-1",
        "Y[1,4] Y[2,5]^-1",
        "Y[1,6]^-1",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    ensure(got == want, || format!("monomials {got:?}"))?;
    ensure(qc.edges().len() == 8, || {
        format!("{} edges", qc.edges().len())
    })?;
    ensure(qc.terms().iter().all(|t| t.multiplicity == 1), || {
        "multiplicity > 1".into()
    })?;
    let dot = export::qchar_dot(&qc);
    ensure(dot == D4_DOT, || format!("DOT differs:\n{dot}"))?;
    let again = export::qchar_dot(&fm_qcharacter(&d4, 0).map_err(|e| e.to_string())?);
    ensure(again == dot, || "DOT not stable across runs".into())?;
    Ok("8 monomials, 8 edges, DOT matches golden".into())
}

fn d5_strip_supports() -> Check {
    let d5 = rs(Family::D, 5).with_black(1).into_owned();
    type Case<'a> = (&'a [(usize, i32, i64)], &'a [(usize, i32)]);
    let cases: [Case; 2] = [
        (
            &[(2, 0, 1), (1, 1, -1), (1, 7, 1)],
            &[(1, 6), (2, 1), (2, 5), (3, 2), (3, 4), (4, 3), (5, 3)],
        ),
        (
            &[(2, 0, 1), (3, 3, -1), (3, 5, 1)],
            &[(1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (5, 3)],
        ),
    ];
    for (source, support) in cases {
        let c = StripFunction::from_values(source.iter().map(|&(i, q, v)| ((i - 1, q), v)));
        let g = strip_solve(&d5, &c).map_err(|e| e.to_string())?;
        let got: Vec<(usize, i32)> = g.support().into_iter().map(|(i, q)| (i + 1, q)).collect();
        ensure(got == support, || {
            format!("support {got:?}, expected {support:?}")
        })?;
        ensure(g.iter().all(|(_, v)| v == 1), || {
            "values other than 1".into()
        })?;
    }
    Ok("left and right supports exact".into())
}

fn e6_example() -> Check {
    let e6 = rs(Family::E, 6);
    let [lbar, big_l, h] = ["lbar", "L", "h"].map(|s| e6.parse_node(s).unwrap());
    let sols = enumerate_fusings(&e6);
    let sol = sols
        .iter()
        .find(|s| s.nodes == [big_l, lbar, h])
        .ok_or("no (L, lbar, h) fusing")?;
    // Reorder to (lbar, L, h) and move the base to L.
    let [e_l, e_lbar, e_h] = sol.rapidity_exponents;
    let raps = [e_lbar - e_l, 0, e_h - e_l];
    ensure(raps == [-5, 0, 10], || format!("rapidities {raps:?}"))?;
    let table = CharacterTable::new(&e6).map_err(|e| e.to_string())?;
    let q = Rapidity::q;
    let one = product_contains_one(&table, [(lbar, q(-5)), (big_l, q(0)), (h, q(10))]);
    ensure(one, || "unit monomial absent".into())?;
    let sizes: Vec<usize> = table.characters().iter().map(|c| c.len()).collect();
    Ok(format!(
        "(lbar, L, h) at q^(-5, 0, 10), unit monomial present; character sizes {sizes:?}"
    ))
}

fn theorem() -> Check {
    let mut lines = Vec::new();
    for &(f, n) in DESK {
        let r = rs(f, n);
        let report = verify_theorem(&r, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        ensure(report.is_match(), || {
            format!("{}: {:?}", report.summary(), report.violations)
        })?;
        lines.push(format!("{} {}", r.name(), report.fusings));
    }
    Ok(format!("S_char = S_dorey for all ({})", lines.join(", ")))
}

fn d5_counterexample() -> Check {
    let d5 = rs(Family::D, 5);
    let prv = prv_admissible(&d5, 1, 1, 1).map_err(|e| e.to_string())?;
    ensure(prv == PrvOutcome::Admissible, || {
        format!("PRV gave {prv:?}")
    })?;
    let fuses = enumerate_fusings(&d5).iter().any(|s| s.nodes == [1, 1, 1]);
    ensure(!fuses, || "a (2,2,2) fusing exists".into())?;
    Ok("PRV admissible, no fusing".into())
}

fn dorey_implies_prv() -> Check {
    let mut checked = 0;
    for &(f, n) in DESK {
        let r = rs(f, n);
        for [i, j, k] in fusing_triples(&enumerate_fusings(&r)) {
            let out = prv_admissible(&r, i, j, k).map_err(|e| e.to_string())?;
            ensure(out.is_admissible(), || {
                format!("{} {:?}: {out:?}", r.name(), [i + 1, j + 1, k + 1])
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} fusing triples admissible"))
}

fn random_weights(
    runner: &mut TestRunner,
    name: &str,
    check: impl Fn(&RootSystem, &Weight) -> bool,
) -> std::result::Result<(), String> {
    let all: Vec<RootSystem> = common::ALL.iter().map(|&(f, n)| rs(f, n)).collect();
    let strategy = (0..all.len(), proptest::collection::vec(-6i64..=6, 8));
    runner
        .run(&strategy, |(a, raw)| {
            let r = &all[a];
            let mu = Weight::from_coeffs(raw[..r.rank()].to_vec());
            proptest::prop_assert!(check(r, &mu), "{} {}", r.name(), mu);
            Ok(())
        })
        .map_err(|e| format!("{name}: {e}"))
}

fn properties() -> Check {
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    random_weights(&mut runner, "w^h = id", |r, mu| {
        r.coxeter_apply(mu, r.coxeter_number() as i64) == *mu
    })?;
    random_weights(&mut runner, "s_i^2 = id", |r, mu| {
        r.nodes()
            .all(|i| r.simple_reflection(i, &r.simple_reflection(i, mu)) == *mu)
    })?;
    let all: Vec<RootSystem> = common::ALL.iter().map(|&(f, n)| rs(f, n)).collect();
    for r in &all {
        let w = r.coxeter_matrix();
        let mut p = IntMatrix::identity(r.rank());
        for k in 1..r.coxeter_number() {
            p = p.mul(w);
            ensure(!p.is_identity(), || format!("{}: w^{k} = 1", r.name()))?;
        }
        ensure(p.mul(w).is_identity(), || format!("{}: w^h != 1", r.name()))?;
        for i in r.nodes() {
            let lam = r.fundamental(i);
            let step = if r.colour(i) == Colour::White { 1 } else { -1 };
            let mut nbrs = Weight::zero(r.rank());
            for &j in r.neighbours(i) {
                nbrs += &r.fundamental(j);
            }
            ensure(&lam + &r.coxeter_apply(&lam, step) == nbrs, || {
                format!("{} neighbour sum at {}", r.name(), i + 1)
            })?;
            let sum = r
                .coxeter_orbit(i)
                .into_iter()
                .fold(Weight::zero(r.rank()), |a, b| a + b);
            ensure(sum.is_zero(), || {
                format!("{} orbit sum at {}", r.name(), i + 1)
            })?;
        }
        for sol in enumerate_fusings(r) {
            let total: f64 = sol.angles.iter().sum();
            ensure((total - 2.0 * PI).abs() < ANGLE_SUM_TOL, || {
                format!("angle sum {total} for {sol:?}")
            })?;
            for theta in sol.angles {
                let u = theta * r.coxeter_number() as f64 / PI;
                ensure((u - u.round()).abs() < INTEGRALITY_TOL, || {
                    format!("angle {theta} for {sol:?}")
                })?;
            }
            let canon = canonicalize(r, &sol).map_err(|e| e.to_string())?;
            let black = r.with_black(canon.i1);
            let g = strip_solve(&black, &dorey_core::correspondence::fusing_source(&canon))
                .map_err(|e| e.to_string())?;
            ensure(g.is_nonnegative(), || format!("negative g for {sol:?}"))?;
        }
    }

    let mut monomials = 0usize;
    for &(f, n) in DESK {
        let r = rs(f, n);
        let h = r.coxeter_number() as i32;
        let table = CharacterTable::new(&r).map_err(|e| e.to_string())?;
        for qc in table.characters() {
            let i = qc.node();
            let head = Monomial::y(i, 0);
            let lowest = Monomial::y(r.bar(i), h).inverse();
            let dual_target = table.get(r.bar(i));
            let mut weights: BTreeMap<Weight, u64> = BTreeMap::new();
            for t in qc.terms() {
                let m = &t.monomial;
                monomials += 1;
                let (lo, hi) = m.support().unwrap();
                ensure(0 <= lo && hi <= h, || format!("{m} outside [0, {h}]"))?;
                ensure(m.is_right_negative() == (*m != head), || {
                    format!("{m} right-negative")
                })?;
                ensure(m.is_left_positive() == (*m != lowest), || {
                    format!("{m} left-positive")
                })?;
                ensure(m.is_dominant() == (*m == head), || format!("{m} dominant"))?;
                ensure(m.is_antidominant() == (*m == lowest), || {
                    format!("{m} antidominant")
                })?;
                ensure(
                    dual_target.contains_monomial(&m.dual().shift(h)) == t.multiplicity,
                    || format!("dual of {m}"),
                )?;
                monomial_identity(&r, qc, m).map_err(|e| e.to_string())?;
                *weights.entry(m.weight(r.rank())).or_default() += t.multiplicity;
            }
            for j in r.nodes() {
                let reflected: BTreeMap<Weight, u64> = weights
                    .iter()
                    .map(|(w, &c)| (r.simple_reflection(j, w), c))
                    .collect();
                ensure(reflected == weights, || {
                    format!("{} V_{} not s_{}-symmetric", r.name(), i + 1, j + 1)
                })?;
                let mut image: BTreeMap<Sl2Monomial, i64> = BTreeMap::new();
                for t in qc.terms() {
                    *image.entry(t.monomial.restrict(j)).or_default() += t.multiplicity as i64;
                }
                sl2_decompose(&image)
                    .map_err(|e| format!("{} V_{} direction {}: {e}", r.name(), i + 1, j + 1))?;
            }
        }
    }
    Ok(format!(
        "{CASES} random weights per identity; {monomials} monomials checked"
    ))
}

fn product_oracle() -> Check {
    let mut total = 0;
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::D, 4)] {
        let r = rs(f, n);
        let table = CharacterTable::new(&r).map_err(|e| e.to_string())?;
        let (cases, bad) = product_oracle_disagreements(&r, &table);
        ensure(bad.is_empty(), || {
            format!(
                "{}: {} disagreements, first {:?}",
                r.name(),
                bad.len(),
                bad[0]
            )
        })?;
        total += cases;
    }
    Ok(format!("{total} rapidity configurations agree"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Check);
    let criteria: [Criterion; 8] = [
        (
            "golden q-character of D4 node 1",
            Duration::from_secs(1),
            d4_node_one_golden,
        ),
        (
            "golden strip supports on D5",
            Duration::from_secs(1),
            d5_strip_supports,
        ),
        ("E6 worked example", Duration::from_secs(120), e6_example),
        (
            "fusing rapidities equal quadratic-monomial rapidities",
            Duration::from_secs(600),
            theorem,
        ),
        (
            "D5 (2,2,2): PRV without fusing",
            Duration::from_secs(5),
            d5_counterexample,
        ),
        (
            "fusing implies PRV",
            Duration::from_secs(600),
            dorey_implies_prv,
        ),
        ("property suites", Duration::from_secs(600), properties),
        (
            "product test against full scan on A2, A3, D4",
            Duration::from_secs(600),
            product_oracle,
        ),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("too slow; {d}")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {} {name} ({:.3}s, limit {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
