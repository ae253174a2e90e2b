//! Finite-category engine for iterated-cofiber monads.
//!
//! The crate realizes, in exact arithmetic, the construction of a monad
//! from a cube-indexed module action: finite poset shapes index diagrams
//! in vector spaces over GF(p) or in finite pointed sets, right Kan
//! extensions and iterated homotopy cofibers are computed by explicit
//! (co)limit tables, and every categorical law along the way is checked
//! by exhaustive evaluation rather than assumed.

pub mod cocross;
pub mod cubes;
pub mod fincat;
pub mod gf;
pub mod hocolim;
pub mod jsonio;
pub mod kan;
pub mod monadgen;
pub mod pnmod;
pub mod pset;
pub mod report;
pub mod sampler;
pub mod targetcat;
