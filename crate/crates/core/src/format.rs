//! Text records: the 6-field triangle CSV line and 17-significant-digit decimals.

use num_complex::Complex64;

use crate::geom::TriangleTriple;
use crate::{Error, Result};

/// Formats `x` with 17 significant digits, `%.17g` style (trailing zeros
/// trimmed, scientific notation outside `1e-4 ≤ |x| < 1e17`).
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_fraction(mantissa), exp)
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `re_a,im_a,re_b,im_b,re_c,im_c`
pub fn format_vertices(v: &[Complex64; 3]) -> String {
    v.iter()
        .flat_map(|z| [z.re, z.im])
        .map(format_g17)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_triangle(t: &TriangleTriple) -> String {
    format_vertices(&t.vertices())
}

/// Parses the six raw decimal fields of a triangle record.
pub fn parse_vertices(line: &str) -> Result<[Complex64; 3]> {
    let fields: Vec<&str> = line.trim().split(',').map(str::trim).collect();
    if fields.len() != 6 {
        return Err(Error::Parse(format!(
            "triangle record needs 6 fields, found {}",
            fields.len()
        )));
    }
    let mut xs = [0.0; 6];
    for (i, f) in fields.iter().enumerate() {
        xs[i] = f.parse::<f64>().map_err(|_| {
            Error::Parse(format!("field {} ({f:?}) is not a decimal number", i + 1))
        })?;
    }
    Ok([
        Complex64::new(xs[0], xs[1]),
        Complex64::new(xs[2], xs[3]),
        Complex64::new(xs[4], xs[5]),
    ])
}

/// Parses and validates a triangle record.
pub fn parse_triangle(line: &str) -> Result<TriangleTriple> {
    let [a, b, c] = parse_vertices(line)?;
    TriangleTriple::new(a, b, c)
}
