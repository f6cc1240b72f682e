//! Outward-rounded fixed-point interval arithmetic.
//!
//! An [`Interval`] holds integer endpoints `lo ≤ hi` at scale `2^-prec`;
//! every operation rounds the lower endpoint down and the upper endpoint up,
//! so the true value always stays enclosed. Transcendental functions are
//! evaluated by series at `prec + GUARD` bits with an explicit bound on the
//! accumulated truncation error.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rat;
use crate::error::{Error, Result};

const GUARD: u32 = 64;

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k as usize
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &(&r * &r) == x {
        r
    } else {
        r + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

impl Interval {
    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        let n = r.numer() << prec as usize;
        Interval {
            lo: floor_div(&n, r.denom()),
            hi: ceil_div(&n, r.denom()),
            prec,
        }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        let v = BigInt::from(n) << prec as usize;
        Interval {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    /// Endpoints as integers at scale `2^-prec`.
    pub fn endpoints(&self) -> (&BigInt, &BigInt) {
        (&self.lo, &self.hi)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// `hi − lo` in units of `2^-prec`.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// True when the width is at most `10^-digits`.
    pub fn width_within_digits(&self, digits: u32) -> bool {
        self.width_ulps() * BigInt::from(10u32).pow(digits) <= pow2(self.prec)
    }

    /// Integer midpoint (rounded down) and radius, both at scale `2^-prec`.
    pub fn center_radius(&self) -> (BigInt, BigInt) {
        let c = floor_div(&(&self.lo + &self.hi), &BigInt::from(2));
        let r = (&self.hi - &c).max(&c - &self.lo);
        (c, r)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        scaled_to_f64(&self.center_radius().0, self.prec)
    }

    pub fn lower_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, self.prec)
    }

    pub fn upper_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, self.prec)
    }

    /// Midpoint rounded to `digits` decimal places.
    pub fn to_decimal(&self, digits: u32) -> String {
        let (c, _) = self.center_radius();
        scaled_to_decimal(&c, self.prec, digits)
    }

    fn same(&self, other: &Self) {
        assert_eq!(self.prec, other.prec, "interval precisions differ");
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same(other);
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same(other);
        let prods = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let s = pow2(self.prec);
        let min = prods.iter().min().unwrap();
        let max = prods.iter().max().unwrap();
        Interval {
            lo: floor_div(min, &s),
            hi: ceil_div(max, &s),
            prec: self.prec,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same(other);
        if other.contains_zero() {
            return Err(Error::domain("division by an interval containing zero"));
        }
        let sh = self.prec as usize;
        let nums = [&self.lo << sh, &self.hi << sh];
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for n in &nums {
            for d in [&other.lo, &other.hi] {
                let (f, c) = (floor_div(n, d), ceil_div(n, d));
                lo = Some(lo.map_or(f.clone(), |l: BigInt| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h: BigInt| h.max(c)));
            }
        }
        Ok(Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: self.prec,
        })
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let mut acc = Interval::from_int(1, self.prec);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(self);
        }
        if e < 0 {
            Interval::from_int(1, self.prec).div(&acc)
        } else {
            Ok(acc)
        }
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.hi.is_negative() {
            return Err(Error::domain("square root of a negative number"));
        }
        let sh = self.prec as usize;
        let lo = if self.lo.is_positive() {
            (&self.lo << sh).sqrt()
        } else {
            BigInt::zero()
        };
        Ok(Interval {
            lo,
            hi: ceil_sqrt(&(&self.hi << sh)),
            prec: self.prec,
        })
    }

    /// Applies an increasing point function evaluated at working precision
    /// with error bound `err` (in working ulps) to both endpoints.
    fn monotone(&self, f: impl Fn(&BigInt, u32) -> (BigInt, u64)) -> Self {
        let w = self.prec + GUARD;
        let g = pow2(GUARD);
        let (vl, el) = f(&(&self.lo << GUARD as usize), w);
        let (vh, eh) = f(&(&self.hi << GUARD as usize), w);
        Interval {
            lo: floor_div(&(vl - BigInt::from(el)), &g),
            hi: ceil_div(&(vh + BigInt::from(eh)), &g),
            prec: self.prec,
        }
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::domain("logarithm of a non-positive number"));
        }
        Ok(self.monotone(ln_fixed))
    }

    pub fn atan(&self) -> Self {
        self.monotone(atan_fixed)
    }

    pub fn pi(prec: u32) -> Self {
        let w = prec + GUARD;
        let (v, e) = pi_fixed(w);
        let g = pow2(GUARD);
        Interval {
            lo: floor_div(&(&v - BigInt::from(e)), &g),
            hi: ceil_div(&(&v + BigInt::from(e)), &g),
            prec,
        }
    }

    /// `ln(x + √(x² − 1))`; arguments below 1 are a domain error.
    pub fn acosh(&self) -> Result<Self> {
        let one = Interval::from_int(1, self.prec);
        if self.hi < one.lo {
            return Err(Error::domain(format!(
                "arccosh argument {} < 1",
                self.to_decimal(12)
            )));
        }
        let x = Interval {
            lo: self.lo.clone().max(one.lo.clone()),
            hi: self.hi.clone(),
            prec: self.prec,
        };
        let mut t = x.mul(&x).sub(&one);
        if t.lo.is_negative() {
            t.lo = BigInt::zero();
        }
        x.add(&t.sqrt()?).ln()
    }

    /// `2·atan(√((1−x)/(1+x)))`, or `π − 2·atan(√((1+x)/(1−x)))` for
    /// negative arguments.
    pub fn acos(&self) -> Result<Self> {
        let one = Interval::from_int(1, self.prec);
        if self.lo > one.lo || self.hi < one.neg().lo {
            return Err(Error::domain(format!(
                "arccos argument {} outside [−1, 1]",
                self.to_decimal(12)
            )));
        }
        let x = Interval {
            lo: self.lo.clone().max(-&one.lo),
            hi: self.hi.clone().min(one.lo.clone()),
            prec: self.prec,
        };
        let two = Interval::from_int(2, self.prec);
        let ratio = |num: &Interval, den: &Interval| -> Result<Interval> {
            let mut r = num.div(den)?;
            if r.lo.is_negative() {
                r.lo = BigInt::zero();
            }
            r.sqrt()
        };
        if !x.center_radius().0.is_negative() {
            Ok(two.mul(&ratio(&one.sub(&x), &one.add(&x))?.atan()))
        } else {
            let half = two.mul(&ratio(&one.add(&x), &one.sub(&x))?.atan());
            Ok(Interval::pi(self.prec).sub(&half))
        }
    }
}

pub(crate) fn scaled_to_f64(v: &BigInt, prec: u32) -> f64 {
    let bits = v.bits() as i64;
    let drop = (bits - 64).max(0);
    let head = v >> drop as usize;
    head.to_f64().unwrap_or(f64::NAN) * 2f64.powi((drop - prec as i64) as i32)
}

pub(crate) fn scaled_to_decimal(v: &BigInt, prec: u32, digits: u32) -> String {
    let scaled = v * BigInt::from(10u32).pow(digits);
    let s = pow2(prec);
    let q = floor_div(&(scaled * 2 + &s), &(s * 2));
    let neg = q.sign() == Sign::Minus;
    let text = q.abs().to_string();
    let digits = digits as usize;
    let text = if text.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - text.len()), text)
    } else {
        text
    };
    let (int, frac) = text.split_at(text.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `Σ x^{2i+1}/(2i+1)` (`alternate = false`) or `Σ (−1)^i x^{2i+1}/(2i+1)`
/// at scale `2^-w`, for `|x| ≤ 1/3`. Returns the value and an error bound.
fn odd_series(x: &BigInt, w: u32, alternate: bool) -> (BigInt, u64) {
    let s = pow2(w);
    let x2 = floor_div(&(x * x), &s);
    let mut term = x.clone();
    let mut sum = BigInt::zero();
    let mut i: u64 = 0;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * i + 1);
        if alternate && i % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        term = floor_div(&(&term * &x2), &s);
        i += 1;
    }
    (sum, 4 * i + 8)
}

type ConstCache = Mutex<HashMap<(&'static str, u32), (BigInt, u64)>>;

fn const_cache() -> &'static ConstCache {
    static CACHE: OnceLock<ConstCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(name: &'static str, w: u32, f: impl FnOnce() -> (BigInt, u64)) -> (BigInt, u64) {
    if let Some(v) = const_cache().lock().unwrap().get(&(name, w)) {
        return v.clone();
    }
    let v = f();
    const_cache().lock().unwrap().insert((name, w), v.clone());
    v
}

/// `ln 2 = 2·atanh(1/3)`.
fn ln2_fixed(w: u32) -> (BigInt, u64) {
    cached("ln2", w, || {
        let third = pow2(w) / 3;
        let (v, e) = odd_series(&third, w, false);
        (v * 2, 2 * e + 2)
    })
}

/// `π = 16·atan(1/5) − 4·atan(1/239)`.
fn pi_fixed(w: u32) -> (BigInt, u64) {
    cached("pi", w, || {
        let s = pow2(w);
        let (a, ea) = odd_series(&(&s / 5), w, true);
        let (b, eb) = odd_series(&(&s / 239), w, true);
        (a * 16 - b * 4, 16 * (ea + 1) + 4 * (eb + 1))
    })
}

/// `ln(x)` for `x > 0` at scale `2^-w`: `x = m·2^k` with `m ∈ [1, 2)` and
/// `ln m = 2·atanh((m−1)/(m+1))`.
fn ln_fixed(x: &BigInt, w: u32) -> (BigInt, u64) {
    let s = pow2(w);
    let k = x.bits() as i64 - 1 - w as i64;
    let m = if k >= 0 {
        x >> k as usize
    } else {
        x << (-k) as usize
    };
    let z = floor_div(&((&m - &s) * &s), &(&m + &s));
    let (a, ea) = odd_series(&z, w, false);
    let (l2, el2) = ln2_fixed(w);
    let val = a * 2 + l2 * BigInt::from(k);
    (val, 2 * ea + 8 + k.unsigned_abs() * el2)
}

/// `atan(x)` at scale `2^-w`, with reduction `atan x = π/2 − atan(1/x)` for
/// `|x| > 1` and two half-angle steps `x ↦ x/(1 + √(1 + x²))`.
fn atan_fixed(x: &BigInt, w: u32) -> (BigInt, u64) {
    if x.is_negative() {
        let (v, e) = atan_fixed(&-x, w);
        return (-v, e);
    }
    let s = pow2(w);
    if x > &s {
        let inv = floor_div(&(&s * &s), x);
        let (v, e) = atan_fixed(&inv, w);
        let (p, ep) = pi_fixed(w);
        return (p / 2 - v, e + ep + 2);
    }
    let mut y = x.clone();
    for _ in 0..2 {
        let y2 = floor_div(&(&y * &y), &s);
        let root = ((&y2 + &s) * &s).sqrt();
        y = floor_div(&(&y * &s), &(&s + root));
    }
    let (v, e) = odd_series(&y, w, true);
    (v * 4, 4 * (e + 8))
}
