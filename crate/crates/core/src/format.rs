//! Text rendering shared by the reports.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::interval::Interval;

/// Fractional digits printed for interval endpoints.
pub const ENDPOINT_DIGITS: usize = 15;

/// `x` rounded to 12 significant digits, in plain decimal notation.
pub fn decimal12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.places$}");
    if s == "-0" || s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0".to_string()
    } else {
        s
    }
}

fn scaled(x: &BigRational, digits: usize) -> BigRational {
    x * BigRational::from_integer(BigInt::from(10u32).pow(digits as u32))
}

fn fixed(units: BigInt, digits: usize) -> String {
    let negative = units.is_negative();
    let (whole, frac) = units.abs().div_rem(&BigInt::from(10u32).pow(digits as u32));
    let sign = if negative { "-" } else { "" };
    format!("{sign}{whole}.{frac:0>digits$}")
}

/// Decimal rounded toward negative infinity.
pub fn floor_decimal(x: &BigRational, digits: usize) -> String {
    fixed(scaled(x, digits).floor().to_integer(), digits)
}

/// Decimal rounded toward positive infinity.
pub fn ceil_decimal(x: &BigRational, digits: usize) -> String {
    fixed(scaled(x, digits).ceil().to_integer(), digits)
}

/// Exact integers print as themselves; everything else as an outward-rounded
/// `[lo,hi]` followed by `~` and a 12-significant-digit midpoint.
pub fn render_interval(iv: &Interval) -> String {
    if iv.is_point() && iv.lo().is_integer() {
        return iv.lo().to_integer().to_string();
    }
    let approx = decimal12(iv.midpoint().to_f64().unwrap_or(f64::NAN));
    if iv.is_point() {
        return format!("{}~{approx}", iv.lo());
    }
    format!(
        "[{},{}]~{approx}",
        floor_decimal(iv.lo(), ENDPOINT_DIGITS),
        ceil_decimal(iv.hi(), ENDPOINT_DIGITS)
    )
}
