//! Exact real-root isolation by Sturm sequences.
//!
//! All sign evaluations happen at dyadic rationals `k / 2^SCALE` in exact
//! integer arithmetic, so the only rounding is the final conversion to `f64`.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{sign_of, Polynomial};

const SCALE: u32 = 96;
/// Bisection stops once the bracket is narrower than `2^-STOP_BITS`.
const STOP_BITS: u32 = 46;

/// Sturm sequence of the square-free part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let d = p.derivative();
        let sqfree = if d.is_zero() {
            p.primitive_part()
        } else {
            let g = p.gcd(&d);
            p.div_exact(&g).expect("gcd divides").primitive_part()
        };
        let mut seq = vec![sqfree.clone()];
        let d = sqfree.derivative();
        if !d.is_zero() {
            seq.push(d.primitive_part());
        }
        while seq.len() >= 2 {
            let a = &seq[seq.len() - 2];
            let b = &seq[seq.len() - 1];
            if b.degree() == Some(0) {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap();
            // prem = lc(b)^(delta+1) * rem; keep a positive multiple of -rem
            let lc_neg = b.leading().is_negative() && (delta + 1) % 2 == 1;
            let next = if lc_neg { r } else { -&r };
            let c = next.content();
            let next = Polynomial::new(next.coeffs().iter().map(|x| x / &c).collect());
            seq.push(next);
        }
        SturmChain { seq }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn var_at(&self, num: &BigInt) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_dyadic(num, SCALE)))
    }

    fn var_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| sign_of(&p.leading())))
    }

    fn var_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = sign_of(&p.leading());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots strictly greater than `num / 2^SCALE`.
    fn count_above(&self, num: &BigInt) -> usize {
        self.var_at(num) - self.var_at_pos_inf()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: f64, b: f64) -> usize {
        let (a, b) = (to_dyadic(a), to_dyadic(b));
        self.count_above(&a).saturating_sub(self.count_above(&b))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.var_at_neg_inf() - self.var_at_pos_inf()
    }
}

fn to_dyadic(x: f64) -> BigInt {
    let scaled = x * 2f64.powi(SCALE as i32);
    BigInt::from_f64(scaled.floor()).expect("finite interval endpoint")
}

fn from_dyadic(num: &BigInt) -> f64 {
    num.to_f64().unwrap_or(f64::NAN) / 2f64.powi(SCALE as i32)
}

/// Brackets the largest root in `(lo, hi]` until the bracket holds exactly
/// one root and is narrower than the stopping width. Returns `(lo, hi)`.
fn isolate_largest(chain: &SturmChain, mut lo: BigInt, mut hi: BigInt) -> Option<(BigInt, BigInt)> {
    let c_hi = chain.count_above(&hi);
    if chain.count_above(&lo) <= c_hi {
        return None;
    }
    let stop = BigInt::from(1u8) << (SCALE - STOP_BITS) as usize;
    loop {
        let single = chain.count_above(&lo) == c_hi + 1;
        if single && (&hi - &lo) < stop {
            return Some((lo, hi));
        }
        let mid: BigInt = (&lo + &hi) >> 1usize;
        if mid == lo {
            return Some((lo, hi));
        }
        if chain.count_above(&mid) > c_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Largest real root of `p` in `[lo, hi]`, to absolute accuracy below `1e-12`.
pub fn largest_real_root(p: &Polynomial, lo: f64, hi: f64) -> Result<f64> {
    let err = Error::NoRealRootInInterval { lo, hi };
    if p.degree().unwrap_or(0) == 0 || !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(err);
    }
    let chain = SturmChain::new(p);
    let (a, b) = (to_dyadic(lo), to_dyadic(hi));
    match isolate_largest(&chain, a.clone(), b) {
        Some((l, h)) => Ok(from_dyadic(&((l + h) >> 1usize))),
        None if p.sign_at_dyadic(&a, SCALE) == 0 => Ok(lo),
        None => Err(err),
    }
}

/// Largest real root anywhere on the line.
pub fn largest_root(p: &Polynomial) -> Result<f64> {
    let b = p.root_bound();
    largest_real_root(p, -b, b)
}

/// All distinct real roots with multiplicities, in descending order.
pub fn real_roots(p: &Polynomial) -> Vec<(f64, usize)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(p);
    // chain of repeated gcds: a root of multiplicity k is a root of the first k
    let mut layers = Vec::new();
    let mut cur = p.clone();
    while cur.degree().unwrap_or(0) > 0 {
        let d = cur.derivative();
        let g = cur.gcd(&d);
        layers.push(SturmChain::new(&cur));
        cur = g;
    }
    let bound = p.root_bound() + 1.0;
    let lo = to_dyadic(-bound);
    let mut hi = to_dyadic(bound);
    let mut out = Vec::new();
    while let Some((l, h)) = isolate_largest(&chain, lo.clone(), hi.clone()) {
        let mult = layers
            .iter()
            .take_while(|c| c.count_above(&l) > c.count_above(&h))
            .count();
        out.push((from_dyadic(&((&l + &h) >> 1usize)), mult.max(1)));
        hi = l;
        if hi <= lo || chain.count_above(&lo) == chain.count_above(&hi) {
            break;
        }
    }
    out
}

/// Real roots repeated by multiplicity, descending.
pub fn real_roots_flat(p: &Polynomial) -> Vec<f64> {
    real_roots(p)
        .into_iter()
        .flat_map(|(r, k)| std::iter::repeat_n(r, k))
        .collect()
}

/// Exact sign of `p` at a float, using the float's exact dyadic value.
pub fn sign_at(p: &Polynomial, x: f64) -> i8 {
    let n = to_dyadic(x);
    if n.is_zero() && x != 0.0 {
        return sign_of(&p.coeff(0));
    }
    p.sign_at_dyadic(&n, SCALE)
}
