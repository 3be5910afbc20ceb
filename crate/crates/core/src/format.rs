//! `%g`-style number formatting for CSV output.

/// Formats `v` with `sig` significant digits, switching to exponent form for
/// very large or very small magnitudes. Trailing zeros are dropped.
pub fn format_sig(v: f64, sig: usize) -> String {
    let sig = sig.max(1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    // Let the formatter do the rounding, then read the exponent it chose.
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= sig as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::format_sig;

    #[test]
    fn general_format() {
        assert_eq!(format_sig(23.827_248_9, 6), "23.8272");
        assert_eq!(format_sig(612.0, 6), "612");
        assert_eq!(format_sig(-0.009_700_12, 6), "-0.00970012");
        assert_eq!(format_sig(3.419_6e-15, 6), "3.4196e-15");
        assert_eq!(format_sig(1_234_567.0, 6), "1.23457e6");
        assert_eq!(format_sig(999_999.7, 6), "1e6");
        assert_eq!(format_sig(0.0, 6), "0");
        assert_eq!(format_sig(2.5, 1), "2");
        assert_eq!(format_sig(f64::INFINITY, 6), "inf");
    }
}
