//! Truncated generating-function machinery and the d-term recurrence
//! synthesizer.
//!
//! Series live in `t` with coefficients in `z` (carrying `e^{i theta}` via
//! `x = (z + 1/z)/2`) and the parameters. The synthesizer works on an
//! abstract sequence symbol with index shifts and `y q^m` arguments, exactly
//! mirroring the two-lemma elimination that proves the d-term recurrences;
//! concrete polynomials only enter when a synthesized recurrence is verified
//! against convolution-built sequences.

mod convolve;
mod identities;
mod products;
mod synth;

pub use convolve::{
    base_series_p1, base_series_p2, convolve_p1, convolve_p2, convolved_lead, gf_family_series,
    gis_polys,
};
pub use identities::{verify_gf_identity, GF_FIXTURES};
pub use products::{product_series, InfProductSpec, PochBase, ProductFactor};
pub use synth::{
    minimal_depth, order_probe, synth_p1, synth_p2, verify_recurrence, SynthInput, SynthRecurrence,
};
