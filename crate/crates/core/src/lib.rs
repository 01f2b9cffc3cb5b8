//! Binary and Z4-linear code algebra centred on residue codes of extremal
//! Type II Z4-codes of length 24 and the doublings built from them.

pub mod classify;
pub mod equiv;
pub mod error;
pub mod gf2core;
pub mod lifts;
pub mod moonshine;
pub mod named;
pub mod neighbor;
pub mod perm;
pub mod registry;
pub mod z4core;

pub use error::{CodeError, Result};
pub use gf2core::{BinaryCode, WeightDistribution};
pub use z4core::{MonomialMap, Z4Code, Z4Vec};
