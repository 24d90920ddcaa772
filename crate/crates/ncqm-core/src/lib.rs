//! Verification laboratory for the 7-dimensional triply centrally extended
//! group of translations of R^4 that underlies two-dimensional
//! noncommutative quantum mechanics.
//!
//! The crate builds the group, the coadjoint orbit taxonomy, the unitary
//! irreducible representations attached to each orbit class on Gaussian
//! wavepackets, the affine operator algebra they generate, a two-parameter
//! gauge family of equivalent representations, and the noncommutative-torus
//! Weyl systems obtained by restricting to a standard lattice of group
//! parameters. [`verify`] packages all of the defining identities as
//! seeded, machine-checkable suites.

pub mod algebra;
pub mod coadjoint;
pub mod error;
pub mod gauge;
pub mod group;
pub mod packet;
mod par;
pub mod rep;
pub mod torus;
pub mod verify;

pub use coadjoint::{classify_orbit, coadjoint_act, DualVector, OrbitClass};
pub use error::{Error, Result};
pub use group::{ExtensionConstants, GroupElement};
pub use packet::{inner_product, GaussianPacket};
pub use par::Execution;
pub use rep::{RepFamily, RepSpec};
