//! Exact Coxeter-orbit arithmetic, Dorey's fusing rule and Frenkel–Mukhin
//! q-characters for simply-laced quantum affine algebras.

pub mod correspondence;
pub mod dorey;
pub mod error;
pub mod exec;
pub mod export;
pub mod qchar;
pub mod root_system;

pub use error::{Error, Result};
pub use exec::Exec;
pub use root_system::{Colour, Family, Node, RootSystem, Weight};
