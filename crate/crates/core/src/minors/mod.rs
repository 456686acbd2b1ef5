//! Determinantal families: γ-functions, presets, and the `Δ` polynomial.

mod delta;
mod gamma;
mod poly;
mod presets;

pub use delta::{
    delta_check, delta_minors, delta_polynomial, diagonal_cover_check, expand_minor, variable_index, DeltaCheck,
    Minor, EXPAND_DELTA_UP_TO, MAX_MINOR_SIZE,
};
pub use gamma::{gamma, gamma_containment, gamma_containment_sum, Containment, MinorShape};
pub use poly::SparsePolynomial;
pub use presets::{load_preset_config, preset_generic, preset_pfaffian, preset_symmetric};
