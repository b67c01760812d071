//! Text, JSON and DOT renderings. Nodes are 1-based everywhere; JSON
//! documents carry a `schema_version` and have sorted keys, so emitting,
//! parsing and emitting again is a fixed point.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::correspondence::{CoxeterReport, RapidityTriple, Role, TheoremReport};
use crate::dorey::{FusingSolution, PrvOutcome};
use crate::qchar::QCharacter;
use crate::root_system::{Colour, Node, RootSystem};

pub const SCHEMA_VERSION: u32 = 1;

fn label(i: Node) -> usize {
    i + 1
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn algebra_json(rs: &RootSystem) -> Value {
    let colours: Vec<&str> = rs
        .colours()
        .iter()
        .map(|c| match c {
            Colour::Black => "black",
            Colour::White => "white",
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": rs.name(),
        "rank": rs.rank(),
        "coxeter_number": rs.coxeter_number(),
        "cartan": rs.cartan(),
        "colours": colours,
        "bar": rs.nodes().map(|i| label(rs.bar(i))).collect::<Vec<_>>(),
        "node_names": rs.nodes().map(|i| rs.node_name(i)).collect::<Vec<_>>(),
        "coxeter_matrix": rs.coxeter_matrix().rows(),
    })
}

pub fn algebra_table(rs: &RootSystem) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} rank {} h = {}",
        rs.name(),
        rs.rank(),
        rs.coxeter_number()
    );
    let _ = writeln!(
        s,
        "{:<6} {:<6} {:<6} {:<6} neighbours",
        "node", "name", "colour", "bar"
    );
    for i in rs.nodes() {
        let nbrs: Vec<String> = rs
            .neighbours(i)
            .iter()
            .map(|&j| label(j).to_string())
            .collect();
        let colour = match rs.colour(i) {
            Colour::Black => "black",
            Colour::White => "white",
        };
        let _ = writeln!(
            s,
            "{:<6} {:<6} {:<6} {:<6} {}",
            label(i),
            rs.node_name(i),
            colour,
            label(rs.bar(i)),
            nbrs.join(",")
        );
    }
    let _ = writeln!(
        s,
        "Coxeter matrix (columns are w applied to fundamental weights):"
    );
    for row in rs.coxeter_matrix().rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(s, "{}", cells.join(""));
    }
    s
}

pub fn orbit_json(rs: &RootSystem, i: Node) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": rs.name(),
        "node": label(i),
        "orbit": rs.coxeter_orbit(i).iter().map(|w| w.coeffs().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn orbit_table(rs: &RootSystem, i: Node) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} Coxeter orbit of node {} ({})",
        rs.name(),
        label(i),
        rs.node_name(i)
    );
    for (n, w) in rs.coxeter_orbit(i).iter().enumerate() {
        let _ = writeln!(s, "w^{n:<3} {w}");
    }
    s
}

/// Angles in units of `π/h`; they are integers for every solution.
fn angle_units(sol: &FusingSolution, h: usize) -> [i64; 3] {
    sol.angles
        .map(|a| (a * h as f64 / std::f64::consts::PI).round() as i64)
}

pub fn fusing_json(sol: &FusingSolution, h: usize, float_angles: bool) -> Value {
    let angles = if float_angles {
        json!(sol.angles)
    } else {
        json!(angle_units(sol, h))
    };
    json!({
        "nodes": sol.nodes.map(label),
        "exponents": sol.exponents,
        "rapidity_exponents": sol.rapidity_exponents,
        "angles": angles,
    })
}

pub fn fusings_json(rs: &RootSystem, sols: &[FusingSolution], float_angles: bool) -> Value {
    let h = rs.coxeter_number();
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": rs.name(),
        "coxeter_number": h,
        "angle_unit": if float_angles { "radian" } else { "pi/h" },
        "fusings": sols.iter().map(|s| fusing_json(s, h, float_angles)).collect::<Vec<_>>(),
    })
}

pub fn fusings_table(rs: &RootSystem, sols: &[FusingSolution], float_angles: bool) -> String {
    let h = rs.coxeter_number();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} fusings (h = {h}): {} solutions; rapidities in powers of q, angles in {}",
        rs.name(),
        sols.len(),
        if float_angles {
            "radians"
        } else {
            "units of pi/h"
        }
    );
    let _ = writeln!(
        s,
        "{:<5} {:<5} {:<5} | {:>3} {:>3} {:>3} | {:>4} {:>4} {:>4} | angles",
        "i1", "i2", "i3", "n1", "n2", "n3", "e1", "e2", "e3"
    );
    for sol in sols {
        let [a, b, c] = sol.nodes.map(|i| rs.node_name(i));
        let [n1, n2, n3] = sol.exponents;
        let [e1, e2, e3] = sol.rapidity_exponents;
        let angles = if float_angles {
            sol.angles.map(|x| format!("{x:.6}")).join(" ")
        } else {
            angle_units(sol, h).map(|x| x.to_string()).join(" ")
        };
        let _ = writeln!(
            s,
            "{a:<5} {b:<5} {c:<5} | {n1:>3} {n2:>3} {n3:>3} | {e1:>4} {e2:>4} {e3:>4} | {angles}"
        );
    }
    s
}

pub fn prv_json(rs: &RootSystem, triple: [Node; 3], outcome: PrvOutcome) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": rs.name(),
        "triple": triple.map(label),
        "outcome": prv_word(outcome),
    })
}

pub fn prv_word(outcome: PrvOutcome) -> &'static str {
    match outcome {
        PrvOutcome::Admissible => "admissible",
        PrvOutcome::NotAdmissible => "not admissible",
        PrvOutcome::NotComputed => "not computed",
    }
}

pub fn qchar_json(qc: &QCharacter) -> Value {
    let monomials: Vec<Value> = qc
        .terms()
        .iter()
        .map(|t| {
            let factors: Vec<[i64; 3]> = t
                .monomial
                .factors()
                .iter()
                .map(|f| [label(f.node) as i64, f.q as i64, f.power as i64])
                .collect();
            json!({ "factors": factors, "multiplicity": t.multiplicity })
        })
        .collect();
    let edges: Vec<[i64; 4]> = qc
        .edges()
        .iter()
        .map(|e| [e.from as i64, e.to as i64, label(e.node) as i64, e.q as i64])
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": qc.algebra(),
        "node": label(qc.node()),
        "monomials": monomials,
        "edges": edges,
    })
}

pub fn qchar_table(qc: &QCharacter) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} q-character of V_{},0: {} monomials, dimension {}, {} edges",
        qc.algebra(),
        label(qc.node()),
        qc.len(),
        qc.dimension(),
        qc.edges().len()
    );
    for (k, t) in qc.terms().iter().enumerate() {
        let _ = writeln!(
            s,
            "{k:>6}  depth {:>3}  x{}  {}",
            t.depth, t.multiplicity, t.monomial
        );
    }
    s
}

/// Graphviz rendering: one vertex per monomial labelled by its rendering,
/// edges labelled `A[j,r]^-1`.
pub fn qchar_dot(qc: &QCharacter) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}_V{}\" {{", qc.algebra(), label(qc.node()));
    let _ = writeln!(s, "  node [shape=box];");
    for (k, t) in qc.terms().iter().enumerate() {
        let text = if t.multiplicity == 1 {
            t.monomial.to_string()
        } else {
            format!("{} x{}", t.monomial, t.multiplicity)
        };
        let _ = writeln!(s, "  m{k} [label=\"{text}\"];");
    }
    for e in qc.edges() {
        let _ = writeln!(
            s,
            "  m{} -> m{} [label=\"A[{},{}]^-1\"];",
            e.from,
            e.to,
            label(e.node),
            e.q
        );
    }
    s.push_str("}\n");
    s
}

fn triple_json(t: &RapidityTriple) -> Value {
    json!({ "nodes": t.nodes.map(label), "rapidity_exponents": t.exponents })
}

pub fn report_json(r: &TheoremReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let roles: Vec<&str> = row
                .roles
                .iter()
                .map(|role| match role {
                    Role::Middle => "middle",
                    Role::Head => "head",
                    Role::Lowest => "lowest",
                })
                .collect();
            json!({
                "nodes": row.triple.nodes.map(label),
                "rapidity_exponents": row.triple.exponents,
                "dorey": row.dorey,
                "character": row.character,
                "roles": roles,
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": r.algebra,
        "fusings": r.fusings,
        "quadratic_monomials": r.quadratic_monomials,
        "match": r.is_match(),
        "s_dorey": r.s_dorey.iter().map(triple_json).collect::<Vec<_>>(),
        "s_char": r.s_char.iter().map(triple_json).collect::<Vec<_>>(),
        "rows": rows,
        "violations": r.violations,
    })
}

pub fn report_table(rs: &RootSystem, r: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", r.summary());
    let _ = writeln!(
        s,
        "{:<5} {:<5} {:<5} | {:>4} {:>4} {:>4} | dorey character",
        "i1", "i2", "i3", "e1", "e2", "e3"
    );
    for row in &r.rows {
        let [a, b, c] = row.triple.nodes.map(|i| rs.node_name(i));
        let [e1, e2, e3] = row.triple.exponents;
        let yes = |x: bool| if x { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "{a:<5} {b:<5} {c:<5} | {e1:>4} {e2:>4} {e3:>4} | {:<5} {}",
            yes(row.dorey),
            yes(row.character)
        );
    }
    for v in &r.violations {
        let _ = writeln!(s, "violation: {v}");
    }
    s
}

pub fn coxeter_report_json(r: &CoxeterReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "algebra": r.algebra,
        "fusings": r.fusings,
        "unordered_triples": r.unordered_triples,
        "clean": r.is_clean(),
        "violations": r.violations,
    })
}

pub fn coxeter_report_table(r: &CoxeterReport) -> String {
    let mut s = format!(
        "{}: {} fusings, {} unordered triples, Coxeter side only, {}\n",
        r.algebra,
        r.fusings,
        r.unordered_triples,
        if r.is_clean() { "CLEAN" } else { "VIOLATIONS" }
    );
    for v in &r.violations {
        let _ = writeln!(s, "violation: {v}");
    }
    s
}
