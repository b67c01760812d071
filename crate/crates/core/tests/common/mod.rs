#![allow(dead_code)]

use std::sync::OnceLock;

use dorey_core::qchar::CharacterTable;
use dorey_core::{Family, RootSystem};

/// Every algebra the Coxeter-side code is exercised on.
pub const ALL: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::A, 6),
    (Family::A, 7),
    (Family::A, 8),
    (Family::D, 4),
    (Family::D, 5),
    (Family::D, 6),
    (Family::D, 7),
    (Family::D, 8),
    (Family::E, 6),
    (Family::E, 7),
    (Family::E, 8),
];

/// Algebras whose fundamental q-characters are cheap enough for tests.
pub const DESK: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::A, 6),
    (Family::D, 4),
    (Family::D, 5),
    (Family::D, 6),
    (Family::E, 6),
];

pub fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).unwrap()
}

pub fn all() -> &'static [RootSystem] {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| ALL.iter().map(|&(f, n)| rs(f, n)).collect())
}

/// Desk-scale root systems with their character tables, built once per
/// test binary.
pub fn desk() -> &'static [(RootSystem, CharacterTable)] {
    static CELL: OnceLock<Vec<(RootSystem, CharacterTable)>> = OnceLock::new();
    CELL.get_or_init(|| {
        DESK.iter()
            .map(|&(f, n)| {
                let r = rs(f, n);
                let t = CharacterTable::new(&r).unwrap();
                (r, t)
            })
            .collect()
    })
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Scans the full triple product: is there `m₁ m₂ m₃ = 1` with `m_k` a
/// monomial of `χ_q(V_{i_k, q^{e_k}})`?
pub fn brute_contains_one(table: &CharacterTable, factors: [(usize, i32); 3]) -> bool {
    let [(i1, e1), (i2, e2), (i3, e3)] = factors;
    let third = table.get(i3);
    table.get(i1).terms().iter().any(|t1| {
        let m1 = t1.monomial.shift(e1);
        table.get(i2).terms().iter().any(|t2| {
            let m12 = &m1 * &t2.monomial.shift(e2);
            third.contains_monomial(&m12.inverse().shift(-e3)) > 0
        })
    })
}

/// Every `(i₁, i₂, i₃)` with `e₁ = 0` and `e₂, e₃ ∈ [−h, h]`; returns the
/// number of cases and the disagreements with the fast test.
pub fn product_oracle_disagreements(
    r: &RootSystem,
    table: &CharacterTable,
) -> (usize, Vec<[(usize, i32); 3]>) {
    use dorey_core::qchar::{product_contains_one, Rapidity};
    let h = r.coxeter_number() as i32;
    let mut cases = 0;
    let mut bad = Vec::new();
    for i1 in r.nodes() {
        for i2 in r.nodes() {
            for i3 in r.nodes() {
                for e2 in -h..=h {
                    for e3 in -h..=h {
                        cases += 1;
                        let f = [(i1, 0), (i2, e2), (i3, e3)];
                        let fast = product_contains_one(table, f.map(|(i, e)| (i, Rapidity::q(e))));
                        if fast != brute_contains_one(table, f) {
                            bad.push(f);
                        }
                    }
                }
            }
        }
    }
    (cases, bad)
}
