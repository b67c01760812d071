//! Dynkin diagram tables.
//!
//! Node labels are 1-based in text and 0-based in code. Conventions:
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `D_n`: the path `1 - ... - (n-2)` with the two forks `n-1` and `n`
//!   attached to node `n-2`.
//! * `E_6`: the chain `1 - 2 - 3 - 4 - 5` with node `6` attached to `3`.
//!   In Toda-theory mass labels this reads `l̄ - h - H - h̄ - l` with `L` on `H`.
//! * `E_7`, `E_8`: the `E_6` diagram extended by `5 - 7` and then `7 - 8`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

pub(crate) fn check_supported(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedAlgebra { family, rank })
    }
}

/// Undirected edges as 0-based node pairs.
pub(crate) fn edges(family: Family, rank: usize) -> Vec<(usize, usize)> {
    match family {
        Family::A => (0..rank.saturating_sub(1)).map(|k| (k, k + 1)).collect(),
        Family::D => {
            let mut e: Vec<_> = (0..rank - 3).map(|k| (k, k + 1)).collect();
            e.push((rank - 3, rank - 2));
            e.push((rank - 3, rank - 1));
            e
        }
        Family::E => {
            let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)];
            if rank >= 7 {
                e.push((4, 6));
            }
            if rank == 8 {
                e.push((6, 7));
            }
            e
        }
    }
}

/// Classical Coxeter numbers.
pub(crate) fn coxeter_number(family: Family, rank: usize) -> usize {
    match family {
        Family::A => rank + 1,
        Family::D => 2 * rank - 2,
        Family::E => match rank {
            6 => 12,
            7 => 18,
            _ => 30,
        },
    }
}

const E6_NAMES: [&str; 6] = ["lbar", "h", "H", "hbar", "l", "L"];

/// Toda-theory mass label for E_6 nodes, the 1-based label otherwise.
pub fn node_name(family: Family, rank: usize, node: usize) -> String {
    if family == Family::E && rank == 6 {
        E6_NAMES[node].to_string()
    } else {
        (node + 1).to_string()
    }
}

/// Inverse of [`node_name`]; plain 1-based labels are accepted everywhere.
pub fn parse_node(family: Family, rank: usize, s: &str) -> Result<usize> {
    let s = s.trim();
    if let Ok(label) = s.parse::<usize>() {
        if label == 0 || label > rank {
            return Err(Error::InvalidNode { label, rank });
        }
        return Ok(label - 1);
    }
    if family == Family::E && rank == 6 {
        if let Some(k) = E6_NAMES.iter().position(|&n| n == s) {
            return Ok(k);
        }
    }
    Err(Error::Parse(format!("unknown node {s:?}")))
}
