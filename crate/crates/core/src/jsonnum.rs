//! JSON number formatting: floats are emitted with 17 significant digits
//! so serialized reports are bit-stable and round-trip exactly.

use std::str::FromStr;

/// A JSON number carrying `x` with 17 significant digits. Requires
/// serde_json's `arbitrary_precision` feature (enabled by this crate) so
/// the digits survive serialization verbatim.
pub fn float17(x: f64) -> serde_json::Number {
    debug_assert!(x.is_finite());
    serde_json::Number::from_str(&format!("{x:.16e}")).expect("formatted float parses")
}
