//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficients stored constant term first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Polynomial { coeffs: c }
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: c }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Sign of `p(num / 2^shift)`, computed exactly.
    pub fn sign_at_dyadic(&self, num: &BigInt, shift: u32) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc = acc * num + (&self.coeffs[i] << (shift as usize * (d - i)));
        }
        sign_of(&acc)
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) a mod d`.
    pub fn pseudo_rem(&self, d: &Polynomial) -> Polynomial {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading();
        let expected = self.degree().map_or(0, |sd| (sd + 1).saturating_sub(dd));
        let mut steps = 0;
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let t = r.leading();
            let k = rd - dd;
            // r = lc * r - t * x^k * d
            let scaled = r.scale(&lc);
            let sub = d.shift(k).scale(&t);
            r = &scaled - &sub;
            steps += 1;
        }
        for _ in steps..expected {
            r = r.scale(&lc);
        }
        r
    }

    /// Exact division; `None` when `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let dd = d.degree()?;
        let lc = d.leading();
        let mut r = self.clone();
        let Some(sd) = self.degree() else { return Some(Self::zero()) };
        if sd < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (t, rem) = r.leading().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            q[rd - dd] = t.clone();
            r = &r - &d.shift(rd - dd).scale(&t);
        }
        Some(Self::new(q))
    }

    /// Primitive gcd over `Z[x]` with positive leading coefficient.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Space-separated coefficients, constant term first.
    pub fn to_coeff_line(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }

    /// Cauchy bound: every real root lies in `[-B, B]`.
    pub fn root_bound(&self) -> f64 {
        let Some(d) = self.degree() else { return 0.0 };
        let lc = self.coeffs[d].abs().to_f64().unwrap_or(f64::INFINITY);
        let m = self.coeffs[..d]
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max);
        1.0 + m / lc
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| Error::Parse { line: 1, message: format!("bad coefficient `{t}`") })
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Human-readable form, highest degree first: `x^3 - 3x + 2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, -1, 1, 1]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(&a + &b, p(&[0, 1, 1]));
        assert_eq!(b.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[2, -3, 0, 1]).derivative(), p(&[-3, 0, 3]));
        assert_eq!(a.shift(2), p(&[0, 0, -1, 0, 1]));
    }

    #[test]
    fn display_and_lines() {
        assert_eq!(p(&[2, -3, 0, 1]).to_string(), "x^3 - 3x + 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 6, 0, -6, 0, 1]).to_coeff_line(), "0 6 0 -6 0 1");
        assert_eq!("0 6 0 -6 0 1".parse::<Polynomial>().unwrap(), p(&[0, 6, 0, -6, 0, 1]));
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)^2 (x+2) and its derivative share (x-1)
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(f.div_exact(&p(&[-1, 1])), Some(p(&[-2, 1, 1])));
        assert_eq!(f.div_exact(&p(&[3, 1])), None);
    }

    #[test]
    fn dyadic_sign() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(f.sign_at_dyadic(&BigInt::from(3), 1), 1); // 1.5
        assert_eq!(f.sign_at_dyadic(&BigInt::from(5), 2), -1); // 1.25
        assert_eq!(p(&[-1, 1]).sign_at_dyadic(&BigInt::from(2), 1), 0);
    }
}
