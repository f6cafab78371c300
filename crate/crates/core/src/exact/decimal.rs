//! Decimal rendering of exact values.
//!
//! Rendering truncates toward zero at the requested number of fractional
//! digits. A truncated endpoint never appears to cross a threshold that the
//! exact value does not cross.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::interval::Interval;
use super::pi_enclosure::{pi_enclosure, PiEnclosure, MAX_PI_DIGITS};
use crate::error::Result;

/// Name of the rounding policy, echoed in reports.
pub const TRUNCATION_POLICY: &str = "round-toward-zero";

pub fn truncate_decimal(r: &BigRational, digits: u32) -> String {
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom();
    let (int_part, rem) = num.div_rem(den);
    let frac = rem * BigInt::from(10u32).pow(digits) / den;
    let mut out = String::new();
    if neg && !(int_part.is_zero() && frac.is_zero()) {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        out.push('.');
        let f = frac.to_string();
        for _ in f.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&f);
    }
    out
}

/// Renders both endpoints.
pub fn truncate_interval(iv: &Interval<BigRational>, digits: u32) -> (String, String) {
    (truncate_decimal(iv.lo(), digits), truncate_decimal(iv.hi(), digits))
}

/// Truncated rendering of a value known only through enclosures.
///
/// `enclose(enc, digits)` must return an interval containing the value. The
/// π enclosure is refined until both endpoints truncate to the same string;
/// the common string is then the exact truncation of the value. If the
/// digit cap is reached first the lower endpoint's rendering is returned.
pub fn render_certified<F>(digits: u32, mut enclose: F) -> Result<(String, Interval<BigRational>)>
where
    F: FnMut(&PiEnclosure, u32) -> Result<Interval<BigRational>>,
{
    let mut work = (digits + 4).min(MAX_PI_DIGITS);
    loop {
        let enc = pi_enclosure(work)?;
        let iv = enclose(&enc, work)?;
        let (lo, hi) = truncate_interval(&iv, digits);
        if lo == hi || work == MAX_PI_DIGITS {
            return Ok((lo, iv));
        }
        work = (work * 2).min(MAX_PI_DIGITS);
    }
}
