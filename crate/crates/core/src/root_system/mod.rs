//! Simply-laced root systems, the bipartite Coxeter element and its orbits.

mod plane;
mod tables;
mod weight;

use std::borrow::Cow;
use std::collections::{HashMap, HashSet, VecDeque};
use std::f64::consts::PI;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use plane::{normalize_angle, CoxeterPlane, TOLERANCE};
pub use tables::{node_name, parse_node, Family};
pub use weight::{IntMatrix, Weight};

/// 0-based node index. Text and CLI surfaces use 1-based labels.
pub type Node = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    pub fn flipped(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }
}

/// Immutable data of an ADE root system together with a two-colouring and
/// the Coxeter element `w = w_white · w_black` it determines.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    adjacency: Vec<Vec<Node>>,
    colours: Vec<Colour>,
    h: usize,
    /// `w^0, …, w^{h-1}`.
    powers: Vec<IntMatrix>,
    bar: Vec<Node>,
    gram: Vec<Vec<Ratio<i64>>>,
    plane: CoxeterPlane,
}

impl RootSystem {
    /// Builds the root system with the default colouring (node 1 black,
    /// breadth-first alternation).
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        tables::check_supported(family, rank)?;
        let edges = tables::edges(family, rank);
        let mut adjacency = vec![Vec::new(); rank];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_unstable();
        }

        let mut colours = vec![None; rank];
        colours[0] = Some(Colour::Black);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            let c = colours[i].expect("visited");
            for &j in &adjacency[i] {
                if colours[j].is_none() {
                    colours[j] = Some(c.flipped());
                    queue.push_back(j);
                }
            }
        }
        let colours = colours
            .into_iter()
            .map(|c| c.ok_or_else(|| Error::Inconsistent("disconnected diagram".into())))
            .collect::<Result<Vec<_>>>()?;

        Self::with_colouring(family, rank, adjacency, colours)
    }

    fn with_colouring(
        family: Family,
        rank: usize,
        adjacency: Vec<Vec<Node>>,
        colours: Vec<Colour>,
    ) -> Result<RootSystem> {
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            2
                        } else if adjacency[i].contains(&j) {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();

        for i in 0..rank {
            for &j in &adjacency[i] {
                if colours[i] == colours[j] {
                    return Err(Error::Inconsistent(format!(
                        "nodes {} and {} are adjacent and share a colour",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let reflect = |i: Node, mu: &mut Weight| {
            let c = mu[i];
            if c != 0 {
                let coeffs = mu.coeffs_mut();
                for (k, a) in cartan[i].iter().enumerate() {
                    coeffs[k] -= c * a;
                }
            }
        };
        let columns: Vec<Weight> = (0..rank)
            .map(|j| {
                let mut mu = Weight::fundamental(rank, j);
                for colour in [Colour::Black, Colour::White] {
                    for i in (0..rank).filter(|&i| colours[i] == colour) {
                        reflect(i, &mut mu);
                    }
                }
                mu
            })
            .collect();
        let w = IntMatrix::from_columns(&columns);

        let expected_h = tables::coxeter_number(family, rank);
        let mut powers = vec![IntMatrix::identity(rank)];
        loop {
            let next = powers.last().expect("non-empty").mul(&w);
            if next.is_identity() {
                break;
            }
            powers.push(next);
            if powers.len() > expected_h {
                break;
            }
        }
        let h = powers.len();
        if h != expected_h {
            return Err(Error::Inconsistent(format!(
                "Coxeter element of {family}{rank} has order {h}, expected {expected_h}"
            )));
        }

        let gram = inverse_cartan(&cartan)?;
        let gram_f: Vec<f64> = gram
            .iter()
            .flat_map(|row| row.iter().map(|r| *r.numer() as f64 / *r.denom() as f64))
            .collect();
        let plane = CoxeterPlane::new(gram_f, &powers);

        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            adjacency,
            colours,
            h,
            powers,
            bar: Vec::new(),
            gram,
            plane,
        };
        rs.bar = (0..rank)
            .map(|i| rs.compute_bar(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(rs)
    }

    /// The same diagram with the two colour classes exchanged. The Coxeter
    /// element becomes `w^{-1}`, so the plane orientation flips.
    pub fn swapped(&self) -> RootSystem {
        let colours = self.colours.iter().map(|c| c.flipped()).collect();
        Self::with_colouring(self.family, self.rank, self.adjacency.clone(), colours)
            .expect("swapping a valid colouring stays valid")
    }

    /// `self` if `node` is already black, the swapped colouring otherwise.
    pub fn with_black(&self, node: Node) -> Cow<'_, RootSystem> {
        if self.colour(node) == Colour::Black {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.swapped())
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> std::ops::Range<Node> {
        0..self.rank
    }

    /// `A6`, `D4`, `E6`, ...
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn coxeter_number(&self) -> usize {
        self.h
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn neighbours(&self, i: Node) -> &[Node] {
        &self.adjacency[i]
    }

    pub fn colour(&self, i: Node) -> Colour {
        self.colours[i]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn coxeter_matrix(&self) -> &IntMatrix {
        &self.powers[1 % self.h]
    }

    pub fn gram(&self) -> &[Vec<Ratio<i64>>] {
        &self.gram
    }

    pub fn plane(&self) -> &CoxeterPlane {
        &self.plane
    }

    pub fn node_name(&self, i: Node) -> String {
        node_name(self.family, self.rank, i)
    }

    pub fn parse_node(&self, s: &str) -> Result<Node> {
        parse_node(self.family, self.rank, s)
    }

    pub fn check_node(&self, i: Node) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::invalid_node(i, self.rank))
        }
    }

    pub fn fundamental(&self, i: Node) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    /// Simple root `α_i` in weight coordinates (row `i` of the Cartan matrix).
    pub fn simple_root(&self, i: Node) -> Weight {
        Weight::from_coeffs(self.cartan[i].clone())
    }

    /// `s_i μ = μ - μ_i α_i`.
    pub fn simple_reflection(&self, i: Node, mu: &Weight) -> Weight {
        let c = mu[i];
        let mut out = mu.clone();
        if c != 0 {
            let coeffs = out.coeffs_mut();
            for (k, a) in self.cartan[i].iter().enumerate() {
                coeffs[k] -= c * a;
            }
        }
        out
    }

    /// `w^power μ`; any integer power.
    pub fn coxeter_apply(&self, mu: &Weight, power: i64) -> Weight {
        let k = power.rem_euclid(self.h as i64) as usize;
        self.powers[k].apply(mu)
    }

    /// `[λ_i, wλ_i, …, w^{h-1}λ_i]`.
    pub fn coxeter_orbit(&self, i: Node) -> Vec<Weight> {
        let lambda = self.fundamental(i);
        self.powers.iter().map(|p| p.apply(&lambda)).collect()
    }

    /// Index lookup `w^n λ_i ↦ n` over one Coxeter orbit.
    pub(crate) fn orbit_index(&self, i: Node) -> HashMap<Weight, usize> {
        self.coxeter_orbit(i)
            .into_iter()
            .enumerate()
            .map(|(n, mu)| (mu, n))
            .collect()
    }

    /// The node `ī` with `λ_ī = -w_0 λ_i`.
    pub fn bar(&self, i: Node) -> Node {
        self.bar[i]
    }

    /// Exponent `k` with `w_0 λ_i = w^k λ_i`.
    pub fn longest_element_power(&self, i: Node) -> usize {
        match self.colours[i] {
            Colour::Black => self.h / 2,
            Colour::White => self.h.div_ceil(2),
        }
    }

    fn compute_bar(&self, i: Node) -> Result<Node> {
        let mu = -self.coxeter_apply(&self.fundamental(i), self.longest_element_power(i) as i64);
        let hit = (0..self.rank).find(|&j| mu == self.fundamental(j));
        hit.ok_or_else(|| {
            Error::Inconsistent(format!(
                "-w_0 λ_{} = {mu} is not a fundamental weight",
                i + 1
            ))
        })
    }

    /// Coordinates of `Pμ` in the oriented plane basis.
    pub fn plane_project(&self, mu: &Weight) -> (f64, f64) {
        self.plane.project(mu)
    }

    /// Signed angle from `Pμ` to `Pρ`, in `(-π, π]`.
    pub fn plane_angle(&self, mu: &Weight, rho: &Weight) -> Result<f64> {
        let (x0, y0) = self.plane_project(mu);
        let (x1, y1) = self.plane_project(rho);
        if x0.hypot(y0) < TOLERANCE || x1.hypot(y1) < TOLERANCE {
            return Err(Error::ZeroProjection);
        }
        let theta = (x0 * y1 - y0 * x1).atan2(x0 * x1 + y0 * y1);
        Ok(normalize_angle(theta))
    }

    /// Plane angle in units of `π/h`, rounded; `None` when it is not within
    /// `1e-6` of an integer.
    pub fn angle_units(&self, mu: &Weight, rho: &Weight) -> Result<Option<i32>> {
        let theta = self.plane_angle(mu, rho)?;
        let units = theta * self.h as f64 / PI;
        let rounded = units.round();
        Ok(((units - rounded).abs() < 1e-6).then_some(rounded as i32))
    }

    /// The dominant weight in the Weyl orbit of `mu`.
    pub fn dominant_representative(&self, mu: &Weight) -> Weight {
        let mut nu = mu.clone();
        while let Some(i) = (0..self.rank).find(|&i| nu[i] < 0) {
            nu = self.simple_reflection(i, &nu);
        }
        nu
    }

    /// Full Weyl orbit by breadth-first closure under simple reflections.
    pub fn weyl_orbit(&self, mu: &Weight) -> HashSet<Weight> {
        self.weyl_orbit_capped(mu, usize::MAX)
            .expect("uncapped orbit enumeration always completes")
    }

    /// As [`weyl_orbit`](Self::weyl_orbit), giving up once more than `cap`
    /// weights have been found.
    pub fn weyl_orbit_capped(&self, mu: &Weight, cap: usize) -> Option<HashSet<Weight>> {
        let mut seen = HashSet::from([mu.clone()]);
        let mut queue = VecDeque::from([mu.clone()]);
        while let Some(nu) = queue.pop_front() {
            for i in 0..self.rank {
                if nu[i] == 0 {
                    continue;
                }
                let next = self.simple_reflection(i, &nu);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(next);
                }
            }
        }
        Some(seen)
    }
}

/// A root system together with its colour-swapped twin, so that the
/// colouring with a given node black is available without rebuilding.
#[derive(Clone, Debug)]
pub struct ColourPair<'a> {
    base: &'a RootSystem,
    swapped: RootSystem,
}

impl<'a> ColourPair<'a> {
    pub fn new(base: &'a RootSystem) -> ColourPair<'a> {
        ColourPair {
            base,
            swapped: base.swapped(),
        }
    }

    pub fn base(&self) -> &'a RootSystem {
        self.base
    }

    pub fn swapped(&self) -> &RootSystem {
        &self.swapped
    }

    pub fn with_black(&self, node: Node) -> &RootSystem {
        if self.base.colour(node) == Colour::Black {
            self.base
        } else {
            &self.swapped
        }
    }
}

/// Exact inverse of the Cartan matrix, i.e. the Gram matrix `⟨λ_i, λ_j⟩`.
fn inverse_cartan(cartan: &[Vec<i64>]) -> Result<Vec<Vec<Ratio<i64>>>> {
    let n = cartan.len();
    let mut a: Vec<Vec<Ratio<i64>>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer((i == j) as i64))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| *a[r][col].numer() != 0)
            .ok_or_else(|| Error::Inconsistent("singular Cartan matrix".into()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r == col || *a[r][col].numer() == 0 {
                continue;
            }
            let f = a[r][col];
            for j in 0..n {
                let (x, y) = (a[col][j], inv[col][j]);
                a[r][j] -= f * x;
                inv[r][j] -= f * y;
            }
        }
    }
    Ok(inv)
}
