//! Enumerations presented as sequences or digit codes rather than pairings.

mod calkin_wilf;
mod digits;
mod engel;
mod ginsberg;
mod lauwerier;
mod ting;

pub use calkin_wilf::{calkin_wilf, calkin_wilf_rank, hyperbinary, hyperbinary_pair};
pub use digits::{grant_priest, grant_priest_preimage, prime_power_surjection};
pub use engel::{cohen_decode, cohen_encode, engel_eval, engel_expand, EngelExpansion};
pub use ginsberg::{ginsberg_decode, ginsberg_encode};
pub use lauwerier::{lauwerier_rank, lauwerier_unrank, MAX_LAUWERIER_DENOMINATOR};
pub use ting::{ting_gamma, ting_rank, ting_sets, TingConstruction};

use num_traits::Zero;

use crate::numerics::Natural;
use crate::{Error, Result};

pub(crate) fn require_index(k: &Natural) -> Result<()> {
    if k.is_zero() {
        Err(Error::domain("indices start at 1"))
    } else {
        Ok(())
    }
}
