//! Numeric output formatting: 12 significant digits everywhere.

/// Formats `v` with 12 significant digits. Zero prints as `0.0`, infinities
/// as `inf`/`-inf`. Magnitudes outside `[1e-4, 1e13)` switch to scientific
/// notation to keep the digit count honest.
pub fn sig12(v: f64) -> String {
    if v == 0.0 {
        return "0.0".to_string();
    }
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    if !(-4..13).contains(&magnitude) {
        return format!("{v:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}
