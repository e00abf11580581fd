//! Locale-independent number formatting for CSV output.

/// Formats `x` with 12 significant digits, `.` as decimal separator.
///
/// Magnitudes in `[1e-5, 1e12)` use positional notation, everything else
/// scientific (`1.23456789012e-17`). Trailing zeros are kept so that every
/// value carries exactly 12 significant digits. `-0` prints as `0`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    // Let the scientific formatter do the rounding, then read back the exponent.
    let sci = format!("{:.11e}", x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting always has an exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        format!("{:.*}", decimals, x)
    } else {
        sci
    }
}
