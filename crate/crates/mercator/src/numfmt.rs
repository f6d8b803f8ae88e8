//! Decimal rendering of doubles at 17 significant digits.
//!
//! 17 significant digits are enough to reproduce any f64 bit pattern on
//! parse, so every table and file this crate emits round-trips exactly.
//! The format follows C's `%.17g`: positional notation for moderate
//! exponents, scientific otherwise, trailing zeros stripped.

/// Render `x` with 17 significant digits.
///
/// Infinities print as `inf` / `-inf`.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        // covers -0.0 as well; the sign of a zero is never meaningful here
        return "0".to_string();
    }

    // 1 leading + 16 fractional digits = 17 significant digits.
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific formatting always contains an exponent");
    let exp: i32 = exp.parse().expect("exponent is a valid integer");

    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    let body = if (-4..17).contains(&exp) {
        if exp >= 0 {
            let point = (exp + 1) as usize;
            if digits.len() <= point {
                format!("{}{}", digits, "0".repeat(point - digits.len()))
            } else {
                format!("{}.{}", &digits[..point], &digits[point..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        }
    } else {
        // keep scientific notation for extreme exponents
        if digits.len() == 1 {
            format!("{}e{}", digits, exp)
        } else {
            format!("{}.{}e{}", &digits[..1], &digits[1..], exp)
        }
    };

    if negative {
        format!("-{body}")
    } else {
        body
    }
}
