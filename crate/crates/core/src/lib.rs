//! Enumerations of the positive rationals and related pairing functions.
//!
//! Every scheme is exposed twice: as plain functions in its own module, and
//! behind the uniform rank/unrank interface of [`registry`]. Indices and
//! encodings are arbitrary-precision, because several of the codes grow
//! exponentially in the size of the rational they encode.

pub mod error;
pub mod factor_bijections;
pub mod numerics;
pub mod oracles;
pub mod pairings;
pub mod registry;
pub mod sequences;

pub use error::{Error, Result};
pub use numerics::{
    ContinuedFraction, IntFoldCodec, Natural, PositiveRational, SignedFactorization, SignedInt,
    SignedRational,
};
pub use pairings::{LatticePair, PairingScheme};
pub use registry::{get_scheme, Domain, MapKind, SchemeDescriptor, SchemeId, Value};

/// Largest bit position any encoder will set before giving up with
/// [`Error::Resource`]. Codes such as `2^(a0+...+an)` would otherwise try to
/// allocate unbounded memory for large partial quotients.
pub const MAX_CODE_BITS: u64 = 1 << 24;
