//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`, and their text form.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::MatError;

/// An element of `ℚ(i)`.
pub type GaussianRational = Complex<BigRational>;

pub fn gr(re: i64, im: i64) -> GaussianRational {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

pub fn gr_zero() -> GaussianRational {
    GaussianRational::zero()
}

pub fn gr_one() -> GaussianRational {
    GaussianRational::one()
}

pub fn gr_i() -> GaussianRational {
    GaussianRational::i()
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Parses `a/b+c/d*i`. Either part may be omitted (`3`, `-i`, `1/2*i`, `2i`);
/// `0` and `.` are zero.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational, MatError> {
    let bad = || MatError::Entry(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad());
    }
    if t == "." {
        return Ok(gr_zero());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(&t).ok_or_else(bad)?, BigRational::zero()));
    };
    // Split at the last sign that is not the leading one.
    let cut = body
        .char_indices()
        .rev()
        .find(|&(k, c)| k > 0 && (c == '+' || c == '-'))
        .map(|(k, _)| k);
    let (re, im) = match cut {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() { BigRational::zero() } else { parse_rational(re).ok_or_else(bad)? };
    let im = im.strip_suffix('*').unwrap_or(im);
    let im = match im {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        x => parse_rational(x.strip_prefix('+').unwrap_or(x)).ok_or_else(bad)?,
    };
    Ok(Complex::new(re, im))
}

/// Inverse of [`parse_gaussian`]: `0`, `3/2`, `-i`, `1+2*i`.
pub fn format_gaussian(z: &GaussianRational) -> String {
    if z.im.is_zero() {
        return z.re.to_string();
    }
    let im = if z.im == BigRational::one() {
        "i".to_string()
    } else if z.im == -BigRational::one() {
        "-i".to_string()
    } else {
        format!("{}*i", z.im)
    };
    if z.re.is_zero() {
        im
    } else if z.im.is_negative() {
        format!("{}{}", z.re, im)
    } else {
        format!("{}+{}", z.re, im)
    }
}
