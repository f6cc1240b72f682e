//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! Elements are stored in the power basis `ζ^0 .. ζ^{φ(m)−1}` reduced
//! modulo `Φ_m`. Binary operations embed both operands into the lcm
//! conductor. Galois conjugates `σ_j : ζ ↦ ζ^j` are computed exactly; a
//! floating-point embedding is used only to shortlist candidates, which are
//! then confirmed exactly.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{rat, rat_int, MPoly, Rat, SymbolSet};
use crate::error::{Error, Result};
use crate::trig::AngleQ;

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Rat::zero(); n + 1];
        c[n] = Rat::one();
        RatPoly { coeffs: c }
    }

    /// Coefficients from degree 0 upwards.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rat::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &q * d;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Exact evaluation at a cyclotomic number (Horner).
    pub fn eval_cyc(&self, x: &CycNum) -> CycNum {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNum::zero(), |acc, c| &(&acc * x) + &CycNum::from_rat(c.clone()))
    }

    /// The same polynomial as a one-symbol [`MPoly`].
    pub fn to_mpoly(&self, symbol: &str) -> MPoly<Rat> {
        let s = SymbolSet::new([symbol]);
        MPoly::from_terms(
            &s,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
        .expect("one exponent per term")
    }
}

/// Canonical polynomial text in the variable `x`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly("x"))
    }
}

fn poly_cache() -> &'static Mutex<HashMap<u64, RatPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, RatPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `m`-th cyclotomic polynomial `Φ_m`, obtained by dividing `x^m − 1` by
/// `Φ_d` for every proper divisor `d` of `m`. Panics if `m = 0`.
pub fn cyclotomic_poly(m: u64) -> RatPoly {
    assert!(m >= 1, "cyclotomic polynomial needs m ≥ 1");
    if let Some(p) = poly_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut p = RatPoly::monomial(m as usize).sub(&RatPoly::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = p.div_rem(&cyclotomic_poly(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    poly_cache().lock().unwrap().insert(m, p.clone());
    p
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut k = n;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            while k.is_multiple_of(p) {
                k /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if k > 1 {
        result -= result / k;
    }
    result
}

/// `φ(1..=n)` by a linear sieve; index 0 is unused.
pub fn totient_table(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for k in (p..=n).step_by(p) {
                phi[k] -= phi[k] / p as u64;
            }
        }
    }
    phi
}

/// Reduction data for one conductor.
struct Table {
    m: u64,
    phi: usize,
    poly: RatPoly,
    /// `ζ^i` in the power basis for `0 ≤ i < m`, sparse.
    rows: Vec<Vec<(usize, Rat)>>,
    /// `exp(2πi·t/m)`.
    roots: Vec<Complex64>,
    units: Vec<u64>,
}

fn table_cache() -> &'static Mutex<HashMap<u64, Arc<Table>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Table>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn table(m: u64) -> Arc<Table> {
    if let Some(t) = table_cache().lock().unwrap().get(&m) {
        return t.clone();
    }
    let poly = cyclotomic_poly(m);
    let phi = poly.degree().unwrap();
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(m as usize);
    let mut cur = vec![Rat::zero(); phi];
    for i in 0..m as usize {
        if i < phi {
            cur = vec![Rat::zero(); phi];
            cur[i] = Rat::one();
        } else {
            // x·(previous) with x^φ = −(Φ − x^φ)
            let top = cur[phi - 1].clone();
            for k in (1..phi).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = Rat::zero();
            if !top.is_zero() {
                for (k, c) in poly.coeffs()[..phi].iter().enumerate() {
                    cur[k] -= &top * c;
                }
            }
        }
        rows.push(
            cur.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect(),
        );
    }
    let roots = (0..m)
        .map(|t| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / m as f64))
        .collect();
    let units = (1..=m).filter(|j| j.gcd(&m) == 1).map(|j| j % m).collect();
    let t = Arc::new(Table {
        m,
        phi,
        poly,
        rows,
        roots,
        units,
    });
    table_cache().lock().unwrap().insert(m, t.clone());
    t
}

/// Element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct CycNum {
    m: u64,
    coords: Vec<Rat>,
}

impl CycNum {
    pub fn from_rat(r: Rat) -> Self {
        CycNum { m: 1, coords: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Primitive root `ζ_m = exp(2πi/m)`.
    pub fn zeta(m: u64) -> Self {
        Self::from_exponents(m, &[(1, Rat::one())])
    }

    /// `Σ c·ζ_m^e`, with exponents taken modulo `m`.
    pub fn from_exponents(m: u64, terms: &[(u64, Rat)]) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let t = table(m);
        let mut coords = vec![Rat::zero(); t.phi];
        for (e, c) in terms {
            for (k, r) in &t.rows[(e % m) as usize] {
                coords[*k] += c * r;
            }
        }
        CycNum { m, coords }
    }

    /// From power-basis coordinates of length `φ(m)`.
    pub fn from_coords(m: u64, coords: Vec<Rat>) -> Result<Self> {
        let phi = table(m).phi;
        if coords.len() != phi {
            return Err(Error::usage(format!(
                "conductor {m} needs {phi} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(CycNum { m, coords })
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    /// Re-expresses the element at a multiple `target` of its conductor.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if !target.is_multiple_of(self.m) {
            return Err(Error::usage(format!(
                "cannot embed conductor {} into {target}",
                self.m
            )));
        }
        if target == self.m {
            return Ok(self.clone());
        }
        let step = target / self.m;
        let terms: Vec<(u64, Rat)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64 * step, c.clone()))
            .collect();
        Ok(Self::from_exponents(target, &terms))
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.m.lcm(&other.m);
        (self.embed(m).unwrap(), other.embed(m).unwrap())
    }

    /// Value under the embedding `ζ_m ↦ exp(2πi/m)`.
    pub fn to_complex(&self) -> Complex64 {
        self.conjugate_complex(1)
    }

    /// Real part of [`Self::to_complex`].
    pub fn to_f64(&self) -> f64 {
        self.to_complex().re
    }

    /// Numeric value of `σ_j(self)`.
    pub fn conjugate_complex(&self, j: u64) -> Complex64 {
        let t = table(self.m);
        let j = j % self.m;
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| t.roots[(i as u64 * j % self.m) as usize] * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// Exact `σ_j(self)`; `j` must be coprime to the conductor.
    pub fn conjugate(&self, j: u64) -> Result<Self> {
        if j.gcd(&self.m) != 1 {
            return Err(Error::usage(format!(
                "σ_{j} is not an automorphism of Q(ζ_{})",
                self.m
            )));
        }
        let terms: Vec<(u64, Rat)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64 * j % self.m, c.clone()))
            .collect();
        Ok(Self::from_exponents(self.m, &terms))
    }

    fn abs_coeff_sum(&self) -> f64 {
        self.coords.iter().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo
    /// `Φ_m`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rat(r.recip()));
        }
        let t = table(self.m);
        let (mut r0, mut r1) = (t.poly.clone(), RatPoly::new(self.coords.clone()));
        let (mut s0, mut s1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return Err(Error::structural(
                "cyclotomic inverse",
                format!("gcd with Φ_{} has degree {:?}", self.m, r0.degree()),
            ));
        }
        let inv = s0.scale(&r0.coeffs()[0].recip());
        let (_, red) = inv.div_rem(&t.poly);
        let mut coords = red.coeffs().to_vec();
        coords.resize(t.phi, Rat::zero());
        Ok(CycNum { m: self.m, coords })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

fn nonzero_terms(v: &CycNum) -> Vec<(usize, &Rat)> {
    v.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coords == other.coords;
        }
        let (a, b) = self.common(other);
        a.coords == b.coords
    }
}

impl Eq for CycNum {}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            m: self.m,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.common(rhs);
        let t = table(a.m);
        let mut wide = vec![Rat::zero(); 2 * t.phi - 1];
        let bt = nonzero_terms(&b);
        for (i, x) in nonzero_terms(&a) {
            for (j, y) in &bt {
                wide[i + j] += x * *y;
            }
        }
        let mut coords = vec![Rat::zero(); t.phi];
        for (i, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < t.phi {
                coords[i] += c;
            } else {
                for (k, r) in &t.rows[i % t.m as usize] {
                    coords[*k] += &c * r;
                }
            }
        }
        CycNum { m: a.m, coords }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

/// Rationals print plainly; other elements as a polynomial in `ζ_m`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let p = RatPoly::new(self.coords.clone()).to_mpoly(&format!("zeta{}", self.m));
        write!(f, "{p}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Trig {
    Cos,
    Sin,
}

/// Builds `Σ c·ζ_M^e` at the smallest conductor dividing `M` that contains
/// all exponents.
fn minimal(big_m: u64, terms: &[(u64, Rat)]) -> CycNum {
    let g = terms.iter().fold(big_m, |g, (e, _)| g.gcd(&(e % big_m)));
    let m = big_m / g;
    let scaled: Vec<(u64, Rat)> = terms.iter().map(|(e, c)| ((e % big_m) / g, c.clone())).collect();
    CycNum::from_exponents(m, &scaled)
}

/// `cos(kπ/n)` or `sin(kπ/n)` as an exact cyclotomic number, stored at the
/// minimal conductor dividing `2n` (cosine) or `lcm(4, 2n)` (sine).
/// Panics if `n = 0`.
pub fn cyc_trig(k: i64, n: u64, which: Trig) -> CycNum {
    assert!(n >= 1, "angle denominator must be positive");
    let half = rat(1, 2);
    match which {
        Trig::Cos => {
            let big = 2 * n;
            let e = k.rem_euclid(big as i64) as u64;
            minimal(big, &[(e, half.clone()), ((big - e) % big, half)])
        }
        Trig::Sin => {
            let big = 4u64.lcm(&(2 * n));
            let s = (k.rem_euclid(2 * n as i64) as u64) * (big / (2 * n));
            let q = 3 * big / 4;
            // 1/(2i) = ζ_4^3 / 2
            minimal(big, &[((s + q) % big, half.clone()), ((q + big - s) % big, -half)])
        }
    }
}

/// `cos` or `sin` of a rational angle.
pub fn cyc_trig_angle(a: AngleQ, which: Trig) -> CycNum {
    cyc_trig(a.num() as i64, a.den(), which)
}

/// `√2 = 2cos(π/4)`.
pub fn sqrt2() -> CycNum {
    &CycNum::from_int(2) * &cyc_trig(1, 4, Trig::Cos)
}

/// `√3 = 2cos(π/6)`.
pub fn sqrt3() -> CycNum {
    &CycNum::from_int(2) * &cyc_trig(1, 6, Trig::Cos)
}

/// `√5 = 4cos(π/5) − 1`.
pub fn sqrt5() -> CycNum {
    &(&CycNum::from_int(4) * &cyc_trig(1, 5, Trig::Cos)) - &CycNum::one()
}

/// `(1+√5)/2 = 2cos(π/5)`.
pub fn golden_ratio() -> CycNum {
    &CycNum::from_int(2) * &cyc_trig(1, 5, Trig::Cos)
}

fn conj_tolerance(v: &CycNum) -> f64 {
    1e-9 * (1.0 + v.abs_coeff_sum())
}

/// `{j : σ_j(v) = v}` over the units of the conductor, ascending.
pub fn stabilizer(v: &CycNum) -> Vec<u64> {
    let t = table(v.m);
    let base = v.to_complex();
    let tol = conj_tolerance(v);
    t.units
        .iter()
        .copied()
        .filter(|&j| {
            j == 1
                || ((v.conjugate_complex(j) - base).norm() <= tol
                    && v.conjugate(j).is_ok_and(|c| c == *v))
        })
        .collect()
}

/// Degree of `v` over `Q`: the size of its Galois orbit, `φ(m)/|Stab(v)|`.
pub fn cyc_degree(v: &CycNum) -> usize {
    if v.is_rational() {
        return 1;
    }
    table(v.m).phi / stabilizer(v).len()
}

/// Distinct Galois conjugates of `v`, one per coset of its stabilizer,
/// starting with `v` itself.
pub fn galois_orbit(v: &CycNum) -> Vec<CycNum> {
    if v.is_rational() {
        return vec![v.clone()];
    }
    let t = table(v.m);
    let stab = stabilizer(v);
    let mut covered = vec![false; t.m as usize];
    let mut out = Vec::new();
    for &j in &t.units {
        if covered[j as usize] {
            continue;
        }
        for &s in &stab {
            covered[(j * s % t.m) as usize] = true;
        }
        out.push(v.conjugate(j).expect("units are coprime"));
    }
    out
}

/// Minimal polynomial `∏(x − c)` over the Galois orbit, monic, with every
/// coefficient checked rational and `v` checked to be a root.
pub fn cyc_minpoly(v: &CycNum) -> Result<RatPoly> {
    let orbit = galois_orbit(v);
    let mut coeffs: Vec<CycNum> = vec![CycNum::one()];
    for c in &orbit {
        let mut next = vec![CycNum::zero(); coeffs.len() + 1];
        for (i, a) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + a;
            next[i] = &next[i] - &(c * a);
        }
        coeffs = next;
    }
    let rats = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.as_rational().ok_or_else(|| {
                Error::structural(
                    "minimal polynomial",
                    format!("coefficient of x^{i} is not rational: {c}"),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let p = RatPoly::new(rats);
    if !p.eval_cyc(v).is_zero() {
        return Err(Error::structural("minimal polynomial", "element is not a root"));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub n: u64,
    pub k: u64,
    pub degree: usize,
    pub expected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeScan {
    pub max_n: u64,
    pub checked: usize,
    pub violations: Vec<DegreeViolation>,
}

/// Checks `deg cos(2kπ/n) = φ(n)/2` for `3 ≤ n ≤ max_n` and every `k` in
/// `1..n` coprime to `n`.
pub fn scan_cos_degree_formula(max_n: u64) -> DegreeScan {
    let per_n: Vec<(usize, Vec<DegreeViolation>)> = (3..=max_n)
        .into_par_iter()
        .map(|n| {
            let expected = totient(n) / 2;
            let mut checked = 0;
            let mut bad = Vec::new();
            for k in (1..n).filter(|k| k.gcd(&n) == 1) {
                checked += 1;
                let d = cyc_degree(&cyc_trig(2 * k as i64, n, Trig::Cos));
                if d as u64 != expected {
                    bad.push(DegreeViolation {
                        n,
                        k,
                        degree: d,
                        expected,
                    });
                }
            }
            (checked, bad)
        })
        .collect();
    DegreeScan {
        max_n,
        checked: per_n.iter().map(|(c, _)| c).sum(),
        violations: per_n.into_iter().flat_map(|(_, v)| v).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotientScan {
    pub max_n: u64,
    pub checked: u64,
    /// `n` with `2φ(n)² < n`.
    pub violations: Vec<u64>,
    /// `n` minimising `2φ(n)²/n`, with its `φ(n)`.
    pub tightest: (u64, u64),
}

/// Checks `2φ(n)² ≥ n` (that is, `φ(n) ≥ √(n/2)`) in integer arithmetic.
pub fn scan_totient_bound(max_n: u64) -> TotientScan {
    let phi = totient_table(max_n as usize);
    let mut violations = Vec::new();
    let mut tightest = (1u64, 1u64);
    for n in 1..=max_n {
        let p = phi[n as usize];
        let lhs = 2 * (p as u128) * (p as u128);
        if lhs < n as u128 {
            violations.push(n);
        }
        // compare 2p²/n < 2q²/t without division
        let (t, q) = tightest;
        if lhs * (t as u128) < 2 * (q as u128) * (q as u128) * (n as u128) {
            tightest = (n, p);
        }
    }
    TotientScan {
        max_n,
        checked: max_n,
        violations,
        tightest,
    }
}

/// True when every Galois conjugate of `num/den` agrees numerically with
/// `num/den`, a necessary condition for the ratio to be rational.
fn ratio_may_be_rational(num: &CycNum, den: &CycNum) -> bool {
    let m = num.m.lcm(&den.m);
    let (a, b) = (num.embed(m).unwrap(), den.embed(m).unwrap());
    let r = a.to_complex() / b.to_complex();
    let tol = 1e-9 * (1.0 + r.norm());
    table(m)
        .units
        .iter()
        .all(|&j| (a.conjugate_complex(j) / b.conjugate_complex(j) - r).norm() <= tol)
}

fn rational_ratio(num: &CycNum, den: &CycNum) -> Result<Option<Rat>> {
    if !ratio_may_be_rational(num, den) {
        return Ok(None);
    }
    Ok(num.checked_div(den)?.as_rational())
}

/// Angle triples `(i, j, k)·π/n` with `i ≤ j ≤ k`, `i + j + k = n ≤ max_den`
/// and `gcd(i, j, k) = 1` whose side ratios `sin β/sin α`, `sin γ/sin α`
/// are both rational.
pub fn scan_sigma1(max_den: u64) -> Vec<[AngleQ; 3]> {
    let mut triples = Vec::new();
    for n in 3..=max_den {
        for i in 1..=n / 3 {
            for j in i..=(n - i) / 2 {
                let k = n - i - j;
                if i.gcd(&j).gcd(&k) == 1 {
                    triples.push((n, [i, j, k]));
                }
            }
        }
    }
    let hits: Vec<Option<[AngleQ; 3]>> = triples
        .par_iter()
        .map(|(n, ijk)| {
            let s: Vec<CycNum> = ijk.iter().map(|&i| cyc_trig(i as i64, *n, Trig::Sin)).collect();
            let ok = rational_ratio(&s[1], &s[0]).ok().flatten().is_some()
                && rational_ratio(&s[2], &s[0]).ok().flatten().is_some();
            ok.then(|| ijk.map(|i| AngleQ::new(i, *n).expect("positive angle")))
        })
        .collect();
    hits.into_iter().flatten().collect()
}

/// Named exact scaling factor for the representative search.
#[derive(Clone, Debug)]
pub struct Multiplier {
    pub name: String,
    pub value: CycNum,
}

/// `{1, √2, √3, √6, 2, 2√2, (1+√5)/2, √5}` in this order.
pub fn default_multipliers() -> Vec<Multiplier> {
    let two = CycNum::from_int(2);
    let m = |name: &str, value: CycNum| Multiplier {
        name: name.to_string(),
        value,
    };
    vec![
        m("1", CycNum::one()),
        m("sqrt2", sqrt2()),
        m("sqrt3", sqrt3()),
        m("sqrt6", &sqrt2() * &sqrt3()),
        m("2", two.clone()),
        m("2*sqrt2", &two * &sqrt2()),
        m("(1+sqrt5)/2", golden_ratio()),
        m("sqrt5", sqrt5()),
    ]
}

/// Side triple whose entries all have degree at most two.
#[derive(Clone, Debug)]
pub struct Representative {
    pub multiplier: String,
    /// Index of the angle `θ` in the scaling `t = μ/sin θ`.
    pub anchor: usize,
    pub sides: [CycNum; 3],
    pub degrees: [usize; 3],
    pub minpolys: [RatPoly; 3],
}

fn check_triangle_angles(triple: &[AngleQ; 3]) -> Result<()> {
    let sum = triple[0].plus(&triple[1]).plus(&triple[2]);
    if (sum.num(), sum.den()) != (1, 1) {
        return Err(Error::domain(format!(
            "angles {}, {}, {} (multiples of π) do not sum to π",
            triple[0], triple[1], triple[2]
        )));
    }
    Ok(())
}

/// First scaling `t = μ/sin θ` (multipliers outermost, then angles in the
/// given order) for which every side `t·sin(angle)` has degree at most two.
pub fn find_deg2_representative(
    triple: &[AngleQ; 3],
    multipliers: &[Multiplier],
) -> Result<Option<Representative>> {
    check_triangle_angles(triple)?;
    let sines: Vec<CycNum> = triple.iter().map(|&a| cyc_trig_angle(a, Trig::Sin)).collect();
    let mut ratios: Vec<Option<Vec<CycNum>>> = vec![None; 3];
    for mu in multipliers {
        for anchor in 0..3 {
            if ratios[anchor].is_none() {
                let inv = sines[anchor].inv()?;
                ratios[anchor] = Some(sines.iter().map(|s| s * &inv).collect());
            }
            let sides: Vec<CycNum> = ratios[anchor]
                .as_ref()
                .unwrap()
                .iter()
                .map(|r| &mu.value * r)
                .collect();
            let degrees: Vec<usize> = sides.iter().map(cyc_degree).collect();
            if degrees.iter().all(|&d| d <= 2) {
                let minpolys = sides.iter().map(cyc_minpoly).collect::<Result<Vec<_>>>()?;
                return Ok(Some(Representative {
                    multiplier: mu.name.clone(),
                    anchor,
                    sides: sides.try_into().unwrap(),
                    degrees: degrees.try_into().unwrap(),
                    minpolys: minpolys.try_into().unwrap(),
                }));
            }
        }
    }
    Ok(None)
}

/// Default denominator bound for [`verify_euclidean_triangle`].
pub const DEFAULT_ANGLE_SWEEP: u64 = 360;

/// Matches `cos` of a numeric angle against `cos(kπ/n)` for `n ≤ sweep`,
/// confirming the first candidate exactly.
fn match_rational_angle(c: &CycNum, sweep: u64) -> Option<AngleQ> {
    let theta = c.to_f64().clamp(-1.0, 1.0).acos();
    let pi = std::f64::consts::PI;
    for n in 2..=sweep {
        let k = (theta * n as f64 / pi).round() as u64;
        if k == 0 || k >= n || k.gcd(&n) != 1 {
            continue;
        }
        if (k as f64 * pi / n as f64 - theta).abs() > 1e-9 {
            continue;
        }
        if cyc_trig(k as i64, n, Trig::Cos) == *c {
            return AngleQ::new(k, n).ok();
        }
    }
    None
}

/// Angles of the Euclidean triangle with the given sides (angle `i` opposite
/// side `i`); `None` marks an angle that is not `kπ/n` with `n ≤ sweep`.
pub fn verify_euclidean_triangle(sides: &[CycNum; 3], sweep: u64) -> Result<[Option<AngleQ>; 3]> {
    let num: Vec<f64> = sides.iter().map(CycNum::to_f64).collect();
    for (i, s) in sides.iter().enumerate() {
        if s.to_complex().im.abs() > 1e-9 || num[i] <= 0.0 {
            return Err(Error::domain(format!("side {i} = {s} is not a positive real")));
        }
    }
    for i in 0..3 {
        if num[i] >= num[(i + 1) % 3] + num[(i + 2) % 3] {
            return Err(Error::domain("sides violate the triangle inequality"));
        }
    }
    let sq: Vec<CycNum> = sides.iter().map(|s| s * s).collect();
    let two = CycNum::from_int(2);
    let mut out = [None; 3];
    for (i, slot) in out.iter_mut().enumerate() {
        let (b, c) = ((i + 1) % 3, (i + 2) % 3);
        let num = &(&sq[b] + &sq[c]) - &sq[i];
        let den = &two * &(&sides[b] * &sides[c]);
        let cos = num.checked_div(&den)?;
        *slot = match_rational_angle(&cos, sweep);
    }
    Ok(out)
}

/// The fourteen angle triples, in degrees, of rational-angled Euclidean
/// triangles whose sides can all be chosen of degree at most two.
pub const DEGREE_TWO_CLASSES: [[u64; 3]; 14] = [
    [60, 60, 60],
    [45, 45, 90],
    [30, 60, 90],
    [15, 75, 90],
    [30, 30, 120],
    [30, 75, 75],
    [15, 15, 150],
    [30, 45, 105],
    [45, 60, 75],
    [15, 45, 120],
    [15, 60, 105],
    [15, 30, 135],
    [36, 36, 108],
    [36, 72, 72],
];

/// Converts a triple of integer degrees to exact angles.
pub fn degrees_triple(d: [u64; 3]) -> Result<[AngleQ; 3]> {
    Ok([
        AngleQ::from_degrees(d[0])?,
        AngleQ::from_degrees(d[1])?,
        AngleQ::from_degrees(d[2])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: u64) -> AngleQ {
        AngleQ::from_degrees(d).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(6), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), RatPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(12).to_string(), "+1*x^4 -1*x^2 +1");
        for m in 1..60 {
            let p = cyclotomic_poly(m);
            assert_eq!(p.degree().unwrap() as u64, totient(m));
            assert!(p.has_integer_coeffs() && p.is_monic());
        }
    }

    #[test]
    fn totients_agree() {
        let t = totient_table(500);
        for n in 1..=500u64 {
            assert_eq!(t[n as usize], totient(n));
        }
    }

    #[test]
    fn trig_values() {
        assert_eq!(cyc_trig(1, 3, Trig::Cos).as_rational(), Some(rat(1, 2)));
        assert_eq!(cyc_trig(1, 2, Trig::Sin).as_rational(), Some(rat_int(1)));
        assert_eq!(cyc_trig(1, 6, Trig::Sin).as_rational(), Some(rat(1, 2)));
        assert_eq!(cyc_trig(0, 1, Trig::Cos).as_rational(), Some(rat_int(1)));
        let c5 = cyc_trig(1, 5, Trig::Cos);
        let expect = &(&CycNum::one() + &sqrt5()) * &CycNum::from_rat(rat(1, 4));
        assert_eq!(c5, expect);
        assert_eq!(cyc_degree(&c5), 2);
        for n in 1..40u64 {
            for k in -(2 * n as i64)..(2 * n as i64) {
                let th = k as f64 * std::f64::consts::PI / n as f64;
                assert!((cyc_trig(k, n, Trig::Cos).to_f64() - th.cos()).abs() < 1e-12);
                let s = cyc_trig(k, n, Trig::Sin).to_complex();
                assert!((s.re - th.sin()).abs() < 1e-12 && s.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pythagorean_identity_exact() {
        for (k, n) in [(1, 7), (3, 10), (5, 12), (2, 9)] {
            let c = cyc_trig(k, n, Trig::Cos);
            let s = cyc_trig(k, n, Trig::Sin);
            assert_eq!(&(&c * &c) + &(&s * &s), CycNum::one());
        }
    }

    #[test]
    fn degrees_and_minpolys() {
        assert_eq!(cyc_degree(&cyc_trig(2, 7, Trig::Cos)), 3);
        assert_eq!(cyc_degree(&CycNum::from_rat(rat(1, 2))), 1);
        assert_eq!(cyc_degree(&cyc_trig(1, 12, Trig::Cos)), 4);
        assert_eq!(cyc_minpoly(&cyc_trig(1, 12, Trig::Cos)).unwrap().degree(), Some(4));
        let p = cyc_minpoly(&cyc_trig(1, 5, Trig::Cos)).unwrap();
        assert_eq!(p, RatPoly::new(vec![rat(-1, 4), rat(-1, 2), rat_int(1)]));
        assert_eq!(cyc_minpoly(&sqrt2()).unwrap(), RatPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(cyc_minpoly(&CycNum::one()).unwrap(), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyc_minpoly(&golden_ratio()).unwrap(), RatPoly::from_ints(&[-1, -1, 1]));
    }

    #[test]
    fn inverse_and_mixed_conductors() {
        let a = &sqrt2() + &sqrt3();
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, CycNum::one());
        assert_eq!(a.conductor(), 24);
        assert_eq!(cyc_degree(&a), 4);
        let z = CycNum::zeta(5);
        assert_eq!(z.pow(5), CycNum::one());
        assert!(CycNum::zero().inv().is_err());
    }

    #[test]
    fn orbit_is_closed_under_conjugation() {
        let v = cyc_trig(2, 9, Trig::Cos);
        let orbit = galois_orbit(&v);
        assert_eq!(orbit.len(), 3);
        for j in [1u64, 5, 7, 11, 13, 17] {
            for c in &orbit {
                let img = c.conjugate(j).unwrap();
                assert!(orbit.contains(&img));
            }
        }
    }

    #[test]
    fn small_degree_scan() {
        let r = scan_cos_degree_formula(20);
        assert!(r.violations.is_empty());
        assert!(r.checked > 0);
        assert_eq!(cyc_degree(&cyc_trig(4, 5, Trig::Cos)), 2);
    }

    #[test]
    fn totient_bound_small() {
        let r = scan_totient_bound(10_000);
        assert!(r.violations.is_empty());
        assert_eq!(totient(8), 4);
    }

    #[test]
    fn sigma1_small() {
        let r = scan_sigma1(24);
        assert_eq!(r, vec![[deg(60), deg(60), deg(60)]]);
    }

    #[test]
    fn golden_triangle_representative() {
        let t = [deg(36), deg(72), deg(72)];
        let rep = find_deg2_representative(&t, &default_multipliers()).unwrap().unwrap();
        assert_eq!(rep.sides[0], CycNum::one());
        assert_eq!(rep.sides[1], golden_ratio());
        assert_eq!(rep.degrees, [1, 2, 2]);
    }

    #[test]
    fn angle_sum_checked() {
        let t = [deg(36), deg(72), deg(73)];
        assert!(matches!(
            find_deg2_representative(&t, &default_multipliers()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn law_of_cosines_matches() {
        let one = CycNum::one();
        let r = verify_euclidean_triangle(&[one.clone(), one.clone(), one], DEFAULT_ANGLE_SWEEP).unwrap();
        assert_eq!(r, [Some(deg(60)); 3]);
        let r = verify_euclidean_triangle(
            &[CycNum::from_int(3), CycNum::from_int(4), CycNum::from_int(5)],
            DEFAULT_ANGLE_SWEEP,
        )
        .unwrap();
        assert_eq!(r, [None, None, Some(deg(90))]);
        let bad = [CycNum::from_int(1), CycNum::from_int(1), CycNum::from_int(3)];
        assert!(verify_euclidean_triangle(&bad, DEFAULT_ANGLE_SWEEP).is_err());
    }
}
