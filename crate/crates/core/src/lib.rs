//! Exact computations with graded modules over monomial quotient rings:
//! submodule predicates, minimal free resolutions, Tor and Ext, and
//! numerical semigroup invariants.

pub mod exactla;
pub mod gmod;
pub mod harness;
pub mod instance;
pub mod resolve;
pub mod ring;
pub mod semigroup;
