//! Kostka–Foulkes polynomials, atomic decompositions of characters and the
//! modified crystal graphs that realise them, for classical root systems.

pub mod atomic_graph;
pub mod binf;
pub mod charge;
pub mod crystal;
pub mod error;
pub mod kostka;
pub mod poly;
pub mod poset;
pub mod root_system;
pub mod suites;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::TPoly;
pub use root_system::{Family, RootSystem};
pub use weight::Weight;
pub use weyl::{minimal_conjugator, weyl_act, WeylElement};
