//! Spectral analysis of signed graphs: exact characteristic polynomials,
//! switching and balance, index perturbations, and the extremal unbalanced
//! bicyclic graphs.

pub mod bicyclic;
#[cfg(feature = "cli")]
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod iso;
pub mod perturb;
pub mod poly;
pub mod roots;
pub mod spectra;
pub mod switching;
pub mod table1;

pub use error::{Error, Result};
pub use graph::{Sign, SignedGraph};
pub use poly::Polynomial;

/// Formats a float with 12 significant digits, dropping trailing zeros.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" { "0".into() } else { s }
}

#[cfg(test)]
mod tests {
    use super::fmt_num;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_num(std::f64::consts::SQRT_2), "1.41421356237");
        assert_eq!(fmt_num(2.0), "2");
        assert_eq!(fmt_num(-0.5), "-0.5");
        assert_eq!(fmt_num(123.456789012345), "123.456789012");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(-1e-13), "-1.00000000000e-13");
    }
}
