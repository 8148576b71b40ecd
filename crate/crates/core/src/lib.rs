//! Exact symbolic computation for Schur delta operators at `t = 0`.
//!
//! Scalars are Laurent polynomials in `q` over the rationals ([`qarith`]);
//! symmetric functions live in the Schur basis ([`symfun`]). The [`delta`]
//! module evaluates `Δ'_{s_ν} e_n |_{t=0}` from its closed form and assembles
//! the right-hand sides of the identities that [`verify`] checks.

pub mod delta;
pub mod error;
pub mod hypergeo;
pub mod json;
pub mod osp;
pub mod partitions;
pub mod qarith;
pub mod symfun;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use qarith::QLaurent;
pub use symfun::{BiSymFunc, SymFunc};
