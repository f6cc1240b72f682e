//! Exact coefficient arithmetic and sparse multivariate polynomials.
//!
//! [`MPoly`] is generic over its coefficient ring. The symbolic derivations
//! use exact rationals ([`Rat`]); the heavy identity checks switch to
//! integer coefficients after clearing powers of two, and numeric
//! evaluation accepts any [`Coeff`] type the coefficients convert into.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exact rational number; always stored in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Ring operations required of a polynomial coefficient.
///
/// Implemented for every type whose references support the usual
/// arithmetic operators (`Rat`, `BigInt`, `f64`, `f32`, ...).
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Send + Sync + 'static
{
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
}

impl<T> Coeff for T
where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Send + Sync + 'static,
    T: for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

/// Conversion of a coefficient into the numeric kind used for evaluation.
pub trait FromCoeff<C> {
    fn from_coeff(c: &C) -> Self;
}

impl FromCoeff<Rat> for Rat {
    fn from_coeff(c: &Rat) -> Self {
        c.clone()
    }
}

impl FromCoeff<Rat> for f64 {
    fn from_coeff(c: &Rat) -> Self {
        c.to_f64().unwrap_or(f64::NAN)
    }
}

impl FromCoeff<Rat> for f32 {
    fn from_coeff(c: &Rat) -> Self {
        c.to_f32().unwrap_or(f32::NAN)
    }
}

impl FromCoeff<BigInt> for BigInt {
    fn from_coeff(c: &BigInt) -> Self {
        c.clone()
    }
}

impl FromCoeff<BigInt> for Rat {
    fn from_coeff(c: &BigInt) -> Self {
        Rat::from_integer(c.clone())
    }
}

impl FromCoeff<BigInt> for f64 {
    fn from_coeff(c: &BigInt) -> Self {
        c.to_f64().unwrap_or(f64::NAN)
    }
}

impl FromCoeff<f64> for f64 {
    fn from_coeff(c: &f64) -> Self {
        *c
    }
}

/// Ordered list of named symbols shared between polynomials of one context.
#[derive(Clone)]
pub struct SymbolSet(Arc<[String]>);

impl SymbolSet {
    /// Panics if a name is repeated.
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate symbol `{n}` in symbol list"
            );
        }
        SymbolSet(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|s| s == name)
    }

    /// The list with the symbol at `idx` removed.
    pub fn without(&self, idx: usize) -> SymbolSet {
        SymbolSet::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, s)| s.clone()),
        )
    }

    pub fn with_appended(&self, name: &str) -> SymbolSet {
        SymbolSet::new(self.0.iter().cloned().chain(std::iter::once(name.to_string())))
    }
}

impl PartialEq for SymbolSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for SymbolSet {}

impl fmt::Debug for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector of a monomial. Ordered graded-lexicographically: total
/// degree first, then the earlier symbol is more significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over a declared symbol list.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq)]
pub struct MPoly<C = Rat> {
    symbols: SymbolSet,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(symbols: &SymbolSet) -> Self {
        MPoly {
            symbols: symbols.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(symbols: &SymbolSet, c: C) -> Self {
        let mut p = Self::zero(symbols);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(symbols.len()), c);
        }
        p
    }

    pub fn one(symbols: &SymbolSet) -> Self {
        Self::constant(symbols, C::one())
    }

    /// The polynomial consisting of the single symbol `name`.
    pub fn var(symbols: &SymbolSet, name: &str) -> Result<Self> {
        let idx = symbols
            .index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown symbol `{name}` (have {symbols:?})")))?;
        let mut m = Monomial::one(symbols.len());
        m.0[idx] = 1;
        let mut p = Self::zero(symbols);
        p.terms.insert(m, C::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponent vectors.
    pub fn from_terms<I>(symbols: &SymbolSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(symbols);
        for (exps, c) in terms {
            if exps.len() != symbols.len() {
                return Err(Error::usage(format!(
                    "exponent vector of length {} for {} symbols",
                    exps.len(),
                    symbols.len()
                )));
            }
            p.add_term(Monomial(exps.into_iter().collect()), &c);
        }
        Ok(p)
    }

    pub(crate) fn from_map(symbols: &SymbolSet, terms: BTreeMap<Monomial, C>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        MPoly {
            symbols: symbols.clone(),
            terms,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn symbols(&self) -> &SymbolSet {
        &self.symbols
    }

    /// Terms in canonical (descending graded-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of(&self, exps: &[u32]) -> C {
        self.terms
            .get(&Monomial(exps.iter().copied().collect()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_term(&self) -> C {
        self.coeff_of(&vec![0; self.symbols.len()])
    }

    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let idx = self
            .symbols
            .index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown symbol `{name}`")))?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0))
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    fn check_same(&self, other: &Self, op: &str) -> Result<()> {
        if self.symbols != other.symbols {
            return Err(Error::usage(format!(
                "{op}: mismatched symbol lists {:?} and {:?}",
                self.symbols, other.symbols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "add")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "sub")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "mul")?;
        let mut out = Self::zero(&self.symbols);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.symbols);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = c.mul_ref(k);
                (!v.is_zero()).then(|| (m.clone(), v))
            })
            .collect();
        Self::from_map(&self.symbols, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.symbols);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at positional values, one per symbol.
    pub fn eval<T>(&self, values: &[T]) -> Result<T>
    where
        T: Coeff + FromCoeff<C>,
    {
        if values.len() != self.symbols.len() {
            return Err(Error::usage(format!(
                "evaluation needs {} values, got {}",
                self.symbols.len(),
                values.len()
            )));
        }
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_coeff(c);
            for (v, &e) in values.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    t = t.mul_ref(v);
                }
            }
            acc.add_assign_ref(&t);
        }
        Ok(acc)
    }

    /// Evaluates from a name-keyed assignment, which must cover every symbol.
    pub fn eval_named<T>(&self, assignment: &BTreeMap<String, T>) -> Result<T>
    where
        T: Coeff + FromCoeff<C>,
    {
        let values = self
            .symbols
            .names()
            .iter()
            .map(|s| {
                assignment
                    .get(s)
                    .cloned()
                    .ok_or_else(|| Error::usage(format!("no value assigned to symbol `{s}`")))
            })
            .collect::<Result<Vec<T>>>()?;
        self.eval(&values)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (m.clone(), d))
            })
            .collect();
        MPoly::from_map(&self.symbols, terms)
    }

    /// Coefficient of `symbol^degree`, as a polynomial over the remaining
    /// symbols.
    pub fn coefficient_in(&self, symbol: &str, degree: u32) -> Result<Self> {
        let idx = self
            .symbols
            .index_of(symbol)
            .ok_or_else(|| Error::usage(format!("unknown symbol `{symbol}`")))?;
        let reduced = self.symbols.without(idx);
        let mut out = Self::zero(&reduced);
        for (m, c) in &self.terms {
            if m.0[idx] == degree {
                let mut e = m.0.clone();
                e.remove(idx);
                out.add_term(Monomial(e), c);
            }
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// symbol of `self`.
    pub fn embed(&self, target: &SymbolSet) -> Result<Self> {
        let map = self
            .symbols
            .names()
            .iter()
            .map(|s| {
                target
                    .index_of(s)
                    .ok_or_else(|| Error::usage(format!("symbol `{s}` missing from target list")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(target.len());
            for (src, &dst) in map.iter().enumerate() {
                e.0[dst] = m.0[src];
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Exchanges the exponents of two symbols while keeping the symbol list.
    pub fn swap_symbols(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(&self.symbols);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            e.0.swap(i, j);
            out.add_term(e, c);
        }
        out
    }
}

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    /// Panics on mismatched symbol lists; use [`MPoly::checked_add`] to
    /// get an error instead.
    fn add(self, rhs: Self) -> MPoly<C> {
        self.checked_add(rhs).expect("MPoly add")
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> MPoly<C> {
        self.checked_sub(rhs).expect("MPoly sub")
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: Self) -> MPoly<C> {
        self.checked_mul(rhs).expect("MPoly mul")
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl MPoly<Rat> {
    /// True iff `self == unit * prod(factors)` exactly.
    pub fn equals_product(&self, factors: &[MPoly<Rat>], unit: &Rat) -> bool {
        if factors.is_empty() {
            return false;
        }
        let mut acc = MPoly::constant(&self.symbols, unit.clone());
        for f in factors {
            match acc.checked_mul(f) {
                Ok(p) => acc = p,
                Err(_) => return false,
            }
        }
        acc == *self
    }

    /// True iff every coefficient of `k * self` is an integer.
    pub fn integral_after_scale(&self, k: &BigInt) -> bool {
        let k = Rat::from_integer(k.clone());
        self.terms.values().all(|c| (c * &k).is_integer())
    }

    /// Converts to integer coefficients; `None` if any coefficient is not
    /// an integer.
    pub fn to_integer(&self) -> Option<MPoly<BigInt>> {
        if !self.terms.values().all(|c| c.is_integer()) {
            return None;
        }
        Some(self.map_coeffs(|c| c.to_integer()))
    }

    /// Parses the canonical text form (see [`fmt::Display`]).
    pub fn parse(symbols: &SymbolSet, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut out = Self::zero(symbols);
        if text == "0" {
            return Ok(out);
        }
        for tok in text.split_whitespace() {
            let (neg, body) = match tok.as_bytes().first() {
                Some(b'+') => (false, &tok[1..]),
                Some(b'-') => (true, &tok[1..]),
                _ => return Err(Error::Parse(format!("term `{tok}` lacks a sign"))),
            };
            let mut parts = body.split('*');
            let coeff_txt = parts.next().unwrap_or_default();
            let mut c = Rat::from_str(coeff_txt)
                .map_err(|_| Error::Parse(format!("bad coefficient `{coeff_txt}`")))?;
            if neg {
                c = -c;
            }
            let mut m = Monomial::one(symbols.len());
            for factor in parts {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let idx = symbols
                    .index_of(name)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol `{name}`")))?;
                m.0[idx] += exp;
            }
            out.add_term(m, &c);
        }
        Ok(out)
    }
}

/// Sign and magnitude text of a coefficient, used by the canonical form.
pub trait CoeffText {
    fn is_negative_coeff(&self) -> bool;
    fn abs_text(&self) -> String;
}

impl CoeffText for Rat {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_text(&self) -> String {
        self.abs().to_string()
    }
}

impl CoeffText for BigInt {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_text(&self) -> String {
        self.abs().to_string()
    }
}

/// Canonical text: terms in descending graded-lex order, each written
/// `[+|-]c*sym^e*...`; the zero polynomial prints as `0`.
impl<C: Coeff + CoeffText> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if c.is_negative_coeff() { "-" } else { "+" })?;
            f.write_str(&c.abs_text())?;
            for (name, &e) in self.symbols.names().iter().zip(m.0.iter()) {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MPoly")
            .field("symbols", &self.symbols)
            .field("terms", &self.terms)
            .finish()
    }
}

/// Lowest common multiple of the coefficient denominators.
pub fn denominator_lcm(p: &MPoly<Rat>) -> BigInt {
    p.terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}
