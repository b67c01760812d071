//! Laurent monomials in the `Y` variables, `sl_2` building blocks and the
//! Frenkel–Mukhin q-characters of fundamental representations.

mod fm;
mod monomial;
mod sl2;

use serde::{Deserialize, Serialize};

pub use fm::{fm_qcharacter, fm_qcharacter_capped, Edge, QCharacter, Term, DEFAULT_MAX_MONOMIALS};
pub use monomial::{a_monomial, Classification, Factor, Monomial, Sl2Monomial};
pub use sl2::{
    segments_character, sl2_decompose, sl2_expand, sl2_kr_character, sl2_segments, Segment, Sl2Term,
};

use crate::error::Result;
use crate::exec::Exec;
use crate::root_system::{Node, RootSystem};

/// The fundamental characters `χ_q(V_{i,0})` of every node of one algebra.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    h: i32,
    bar: Vec<Node>,
    characters: Vec<QCharacter>,
}

impl CharacterTable {
    pub fn new(rs: &RootSystem) -> Result<CharacterTable> {
        Self::with_options(rs, DEFAULT_MAX_MONOMIALS, Exec::default())
    }

    /// Builds one character per node, in parallel under [`Exec::Parallel`].
    pub fn with_options(rs: &RootSystem, cap: usize, exec: Exec) -> Result<CharacterTable> {
        let characters =
            exec.try_map(rs.nodes().collect(), |i| fm_qcharacter_capped(rs, i, cap))?;
        Ok(CharacterTable {
            h: rs.coxeter_number() as i32,
            bar: rs.nodes().map(|i| rs.bar(i)).collect(),
            characters,
        })
    }

    pub fn get(&self, i: Node) -> &QCharacter {
        &self.characters[i]
    }

    pub fn characters(&self) -> &[QCharacter] {
        &self.characters
    }

    /// Multiplicity of `m` in `χ_q(V_{i, q^shift})`.
    pub fn contains_shifted(&self, i: Node, shift: i32, m: &Monomial) -> u64 {
        self.characters[i].contains_monomial(&m.shift(-shift))
    }
}

/// A spectral parameter `a_lattice · q^exponent`. Parameters on different
/// lattices are in generic position: their ratio is not a power of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rapidity {
    pub lattice: u32,
    pub exponent: i32,
}

impl Rapidity {
    pub fn q(exponent: i32) -> Rapidity {
        Rapidity {
            lattice: 0,
            exponent,
        }
    }
}

/// Whether the monomial `1` occurs in `χ_q(V_{i₁,a₁}) χ_q(V_{i₂,a₂}) χ_q(V_{i₃,a₃})`.
///
/// A unit product needs the head of one factor, the lowest monomial of
/// another and a monomial of the remaining ("middle") factor cancelling
/// both. Every assignment of the three roles is tried, so ties between the
/// rapidities need no special treatment.
pub fn product_contains_one(table: &CharacterTable, factors: [(Node, Rapidity); 3]) -> bool {
    if factors.iter().any(|f| f.1.lattice != factors[0].1.lattice) {
        return false;
    }
    const ROLES: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    ROLES.iter().any(|&[head, middle, lowest]| {
        let (ih, eh) = (factors[head].0, factors[head].1.exponent);
        let (im, em) = (factors[middle].0, factors[middle].1.exponent);
        let (il, el) = (factors[lowest].0, factors[lowest].1.exponent);
        let needed = Monomial::from_factors([(table.bar[il], el + table.h, 1), (ih, eh, -1)]);
        table.contains_shifted(im, em, &needed) > 0
    })
}
