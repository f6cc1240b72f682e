//! Exponential polynomials `Σ p·e^{L}`.
//!
//! The exponent `L` is an integer linear form over a fixed, ordered list of
//! length symbols (`(a, b)` or `(a, b, c, d)`); the coefficient `p` is an
//! [`MPoly`] over the coefficient symbols. Terms with equal exponents are
//! always collected, so the stored term count is the number of distinct
//! exponentials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Float;
use rayon::prelude::*;
use smallvec::SmallVec;

use crate::arith::{rat, Coeff, CoeffText, FromCoeff, MPoly, Monomial, Rat, SymbolSet};
use crate::error::{Error, Result};

/// Integer exponent vector, indexed by the context's length symbols.
///
/// The derived ordering is lexicographic, first symbol most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinForm(pub SmallVec<[i32; 4]>);

impl LinForm {
    pub fn new(coeffs: &[i32]) -> Self {
        LinForm(coeffs.iter().copied().collect())
    }

    pub fn zero(arity: usize) -> Self {
        LinForm(SmallVec::from_elem(0, arity))
    }

    pub fn unit(arity: usize, idx: usize, sign: i32) -> Self {
        let mut l = Self::zero(arity);
        l.0[idx] = sign;
        l
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn plus(&self, other: &LinForm) -> LinForm {
        LinForm(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self ≤ cap` with at least one strict inequality.
    pub fn strictly_dominated_by(&self, cap: &LinForm) -> bool {
        self.0.iter().zip(&cap.0).all(|(a, b)| a <= b) && self != cap
    }

    /// Human form such as `4a+4b+2c+2d` or `a-b`.
    pub fn render(&self, lengths: &SymbolSet) -> String {
        let mut out = String::new();
        for (&k, name) in self.0.iter().zip(lengths.names()) {
            if k == 0 {
                continue;
            }
            if k < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k.abs() != 1 {
                out.push_str(&k.abs().to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypKind {
    Cosh,
    Sinh,
}

/// Per-symbol exponent range of an [`ExpPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentBound {
    pub symbol: String,
    pub min: i32,
    pub max: i32,
}

/// Result of sorting terms into leaders, dominated terms and violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceReport {
    pub leaders_found: Vec<LinForm>,
    pub lower: usize,
    pub violations: Vec<LinForm>,
}

impl DominanceReport {
    pub fn ok(&self, expected_leaders: usize) -> bool {
        self.violations.is_empty() && self.leaders_found.len() == expected_leaders
    }
}

/// A finite sum of `p·e^{L}` terms, collected by exponent.
#[derive(Clone, PartialEq)]
pub struct ExpPoly<C = Rat> {
    lengths: SymbolSet,
    coeff_symbols: SymbolSet,
    terms: BTreeMap<LinForm, MPoly<C>>,
}

// Below this many coefficient-term pairs a product runs sequentially.
const PAR_THRESHOLD: usize = 4096;

impl<C: Coeff> ExpPoly<C> {
    pub fn zero(lengths: &SymbolSet, coeff_symbols: &SymbolSet) -> Self {
        ExpPoly {
            lengths: lengths.clone(),
            coeff_symbols: coeff_symbols.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `p·e^{L}` as a single term.
    pub fn monomial(lengths: &SymbolSet, form: LinForm, p: MPoly<C>) -> Result<Self> {
        if form.arity() != lengths.len() {
            return Err(Error::usage(format!(
                "linear form of arity {} in a context of {} length symbols",
                form.arity(),
                lengths.len()
            )));
        }
        let mut out = Self::zero(lengths, p.symbols());
        if !p.is_zero() {
            out.terms.insert(form, p);
        }
        Ok(out)
    }

    /// The coefficient polynomial `p` as the `e^0` term.
    pub fn constant(lengths: &SymbolSet, p: MPoly<C>) -> Self {
        Self::monomial(lengths, LinForm::zero(lengths.len()), p).expect("zero form has the right arity")
    }

    pub fn one(lengths: &SymbolSet, coeff_symbols: &SymbolSet) -> Self {
        Self::constant(lengths, MPoly::one(coeff_symbols))
    }

    pub fn lengths(&self) -> &SymbolSet {
        &self.lengths
    }

    pub fn coeff_symbols(&self) -> &SymbolSet {
        &self.coeff_symbols
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: descending lexicographic on the exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&LinForm, &MPoly<C>)> {
        self.terms.iter().rev()
    }

    /// Stored coefficient at `form`, or the zero polynomial.
    pub fn coeff_at(&self, form: &LinForm) -> MPoly<C> {
        self.terms
            .get(form)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&self.coeff_symbols))
    }

    fn check_compatible(&self, other: &Self, op: &str) -> Result<()> {
        if self.lengths != other.lengths {
            return Err(Error::usage(format!(
                "{op}: length symbols {:?} vs {:?}",
                self.lengths, other.lengths
            )));
        }
        if self.coeff_symbols != other.coeff_symbols {
            return Err(Error::usage(format!(
                "{op}: coefficient symbols {:?} vs {:?}",
                self.coeff_symbols, other.coeff_symbols
            )));
        }
        Ok(())
    }

    fn add_into(&mut self, form: &LinForm, p: &MPoly<C>, negate: bool) {
        let entry = self
            .terms
            .entry(form.clone())
            .or_insert_with(|| MPoly::zero(&self.coeff_symbols));
        let sum = if negate { &*entry - p } else { &*entry + p };
        if sum.is_zero() {
            self.terms.remove(form);
        } else {
            *entry = sum;
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "add")?;
        let mut out = self.clone();
        for (l, p) in &other.terms {
            out.add_into(l, p, false);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "sub")?;
        let mut out = self.clone();
        for (l, p) in &other.terms {
            out.add_into(l, p, true);
        }
        Ok(out)
    }

    /// Product using `e^{L1}·e^{L2} = e^{L1+L2}`. Large products are
    /// split over threads; exact coefficient addition makes the collected
    /// result independent of the split.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "mul")?;
        let left: Vec<(&LinForm, &MPoly<C>)> = self.terms.iter().collect();
        let right: Vec<(&LinForm, &MPoly<C>)> = other.terms.iter().collect();
        let work: usize = left.iter().map(|(_, p)| p.len()).sum::<usize>()
            * right.iter().map(|(_, p)| p.len()).sum::<usize>();

        let partial = |chunk: &[(&LinForm, &MPoly<C>)]| {
            let mut acc: HashMap<(LinForm, Monomial), C> = HashMap::new();
            for (l1, p1) in chunk {
                for (l2, p2) in &right {
                    let l = l1.plus(l2);
                    for (m1, c1) in p1.terms() {
                        for (m2, c2) in p2.terms() {
                            let m = Monomial(
                                m1.0.iter().zip(m2.0.iter()).map(|(a, b)| a + b).collect(),
                            );
                            let prod = c1.mul_ref(c2);
                            match acc.entry((l.clone(), m)) {
                                std::collections::hash_map::Entry::Occupied(mut o) => {
                                    o.get_mut().add_assign_ref(&prod)
                                }
                                std::collections::hash_map::Entry::Vacant(v) => {
                                    v.insert(prod);
                                }
                            }
                        }
                    }
                }
            }
            acc
        };

        let maps: Vec<HashMap<(LinForm, Monomial), C>> = if work < PAR_THRESHOLD {
            vec![partial(&left)]
        } else {
            let chunk = left.len().div_ceil(rayon::current_num_threads() * 4).max(1);
            left.par_chunks(chunk).map(partial).collect()
        };

        let mut merged: BTreeMap<LinForm, BTreeMap<Monomial, C>> = BTreeMap::new();
        for map in maps {
            for ((l, m), c) in map {
                let slot = merged.entry(l).or_default();
                match slot.entry(m) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        o.get_mut().add_assign_ref(&c)
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        let terms = merged
            .into_iter()
            .filter_map(|(l, mut monos)| {
                monos.retain(|_, c| !c.is_zero());
                (!monos.is_empty()).then(|| (l, MPoly::from_map(&self.coeff_symbols, monos)))
            })
            .collect();
        Ok(ExpPoly {
            lengths: self.lengths.clone(),
            coeff_symbols: self.coeff_symbols.clone(),
            terms,
        })
    }

    pub fn scale_by_mpoly(&self, p: &MPoly<C>) -> Result<Self> {
        if p.symbols() != &self.coeff_symbols {
            return Err(Error::usage(format!(
                "scale_by_mpoly: coefficient symbols {:?} vs {:?}",
                self.coeff_symbols,
                p.symbols()
            )));
        }
        self.checked_mul(&ExpPoly::constant(&self.lengths, p.clone()))
    }

    pub fn scale(&self, k: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(l, p)| {
                let q = p.scale(k);
                (!q.is_zero()).then(|| (l.clone(), q))
            })
            .collect();
        ExpPoly {
            lengths: self.lengths.clone(),
            coeff_symbols: self.coeff_symbols.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ExpPoly::one(&self.lengths, &self.coeff_symbols);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Per-symbol `(min, max)` exponent over all stored terms; empty for
    /// the zero exponential polynomial.
    pub fn exponent_bounds(&self) -> Vec<ExponentBound> {
        if self.terms.is_empty() {
            return Vec::new();
        }
        self.lengths
            .names()
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let vals = self.terms.keys().map(|l| l.0[i]);
                ExponentBound {
                    symbol: name.clone(),
                    min: vals.clone().min().unwrap_or(0),
                    max: vals.max().unwrap_or(0),
                }
            })
            .collect()
    }

    /// Tags each term as an exact leader, a lower-order term (strictly
    /// dominated by at least one cap), or a violation.
    pub fn classify_dominance(&self, leaders: &[LinForm], caps: &[LinForm]) -> DominanceReport {
        let mut report = DominanceReport {
            leaders_found: Vec::new(),
            lower: 0,
            violations: Vec::new(),
        };
        for l in self.terms.keys().rev() {
            if leaders.contains(l) {
                report.leaders_found.push(l.clone());
            } else if caps.iter().any(|cap| l.strictly_dominated_by(cap)) {
                report.lower += 1;
            } else {
                report.violations.push(l.clone());
            }
        }
        report
    }

    /// Splits coefficients by their degree in the auxiliary coefficient
    /// symbol `aux`, producing `A·aux² + B·aux + C`.
    pub fn extract_aux_quadratic(&self, aux: &str) -> Result<AuxQuadratic<C>> {
        let idx = self.coeff_symbols.index_of(aux).ok_or_else(|| {
            Error::usage(format!(
                "auxiliary symbol `{aux}` not among coefficient symbols {:?}",
                self.coeff_symbols
            ))
        })?;
        let reduced = self.coeff_symbols.without(idx);
        let mut parts = [
            ExpPoly::zero(&self.lengths, &reduced),
            ExpPoly::zero(&self.lengths, &reduced),
            ExpPoly::zero(&self.lengths, &reduced),
        ];
        for (l, p) in &self.terms {
            let deg = p.degree_in(aux)?;
            if deg > 2 {
                return Err(Error::structural(
                    "extract quadratic",
                    format!("coefficient at {l:?} has degree {deg} in `{aux}`"),
                ));
            }
            for (d, part) in parts.iter_mut().enumerate() {
                let q = p.coefficient_in(aux, d as u32)?;
                if !q.is_zero() {
                    part.terms.insert(l.clone(), q);
                }
            }
        }
        let [c, b, a] = parts;
        Ok(AuxQuadratic {
            aux: aux.to_string(),
            a,
            b,
            c,
        })
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D + Copy) -> ExpPoly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(l, p)| {
                let q = p.map_coeffs(f);
                (!q.is_zero()).then(|| (l.clone(), q))
            })
            .collect();
        ExpPoly {
            lengths: self.lengths.clone(),
            coeff_symbols: self.coeff_symbols.clone(),
            terms,
        }
    }

    /// Re-expresses every coefficient over `target` coefficient symbols.
    pub fn embed_coeffs(&self, target: &SymbolSet) -> Result<Self> {
        let mut out = ExpPoly::zero(&self.lengths, target);
        for (l, p) in &self.terms {
            out.terms.insert(l.clone(), p.embed(target)?);
        }
        Ok(out)
    }

    /// Relabels by exchanging length symbols `i ↔ j`.
    pub fn swap_lengths(&self, i: usize, j: usize) -> Self {
        let mut out = ExpPoly::zero(&self.lengths, &self.coeff_symbols);
        for (l, p) in &self.terms {
            let mut k = l.clone();
            k.0.swap(i, j);
            out.add_into(&k, p, false);
        }
        out
    }

    /// Relabels by exchanging coefficient symbols `i ↔ j`.
    pub fn swap_coeff_symbols(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(l, p)| (l.clone(), p.swap_symbols(i, j)))
            .collect();
        ExpPoly {
            lengths: self.lengths.clone(),
            coeff_symbols: self.coeff_symbols.clone(),
            terms,
        }
    }

    /// `Σ p(coeffs)·exp(L·lengths)`.
    pub fn eval_numeric<F>(&self, lengths: &[F], coeffs: &[F]) -> Result<F>
    where
        F: Float + Coeff + FromCoeff<C>,
    {
        Ok(self.eval_numeric_with_scale(lengths, coeffs)?.0)
    }

    /// Value together with the largest term magnitude, where a term's
    /// magnitude is `Σ|c·monomial(coeffs)|·exp(L·lengths)`. Residual
    /// tolerances are taken relative to this scale.
    pub fn eval_numeric_with_scale<F>(&self, lengths: &[F], coeffs: &[F]) -> Result<(F, F)>
    where
        F: Float + Coeff + FromCoeff<C>,
    {
        if lengths.len() != self.lengths.len() {
            return Err(Error::usage(format!(
                "need {} length values, got {}",
                self.lengths.len(),
                lengths.len()
            )));
        }
        if coeffs.len() != self.coeff_symbols.len() {
            return Err(Error::usage(format!(
                "need {} coefficient values, got {}",
                self.coeff_symbols.len(),
                coeffs.len()
            )));
        }
        let mut total = F::zero();
        let mut scale = F::zero();
        for (l, p) in &self.terms {
            let mut expo = F::zero();
            for (&k, &t) in l.0.iter().zip(lengths) {
                expo = expo + F::from(k).expect("small integer") * t;
            }
            let e = expo.exp();
            let mut value = F::zero();
            let mut magnitude = F::zero();
            for (m, c) in p.terms() {
                let mut t = F::from_coeff(c);
                for (&v, &ex) in coeffs.iter().zip(m.exponents()) {
                    t = t * v.powi(ex as i32);
                }
                value = value + t;
                magnitude = magnitude + t.abs();
            }
            total = total + value * e;
            scale = scale.max(magnitude * e);
        }
        Ok((total, scale))
    }

    pub fn eval_numeric_named<F>(
        &self,
        lengths: &BTreeMap<String, F>,
        coeffs: &BTreeMap<String, F>,
    ) -> Result<F>
    where
        F: Float + Coeff + FromCoeff<C>,
    {
        let pick = |names: &SymbolSet, map: &BTreeMap<String, F>, what: &str| {
            names
                .names()
                .iter()
                .map(|s| {
                    map.get(s)
                        .copied()
                        .ok_or_else(|| Error::usage(format!("no value for {what} symbol `{s}`")))
                })
                .collect::<Result<Vec<F>>>()
        };
        let l = pick(&self.lengths, lengths, "length")?;
        let c = pick(&self.coeff_symbols, coeffs, "coefficient")?;
        self.eval_numeric(&l, &c)
    }
}

impl ExpPoly<Rat> {
    /// `cosh t = ½e^t + ½e^{-t}` or `sinh t = ½e^t − ½e^{-t}`.
    pub fn hyp(
        lengths: &SymbolSet,
        coeff_symbols: &SymbolSet,
        symbol: &str,
        kind: HypKind,
    ) -> Result<Self> {
        let idx = lengths.index_of(symbol).ok_or_else(|| {
            Error::usage(format!("unknown length symbol `{symbol}` (have {lengths:?})"))
        })?;
        let n = lengths.len();
        let half = MPoly::constant(coeff_symbols, rat(1, 2));
        let minus = match kind {
            HypKind::Cosh => half.clone(),
            HypKind::Sinh => MPoly::constant(coeff_symbols, rat(-1, 2)),
        };
        let mut out = ExpPoly::zero(lengths, coeff_symbols);
        out.terms.insert(LinForm::unit(n, idx, 1), half);
        out.terms.insert(LinForm::unit(n, idx, -1), minus);
        Ok(out)
    }

    pub fn cosh(lengths: &SymbolSet, coeff_symbols: &SymbolSet, symbol: &str) -> Result<Self> {
        Self::hyp(lengths, coeff_symbols, symbol, HypKind::Cosh)
    }

    pub fn sinh(lengths: &SymbolSet, coeff_symbols: &SymbolSet, symbol: &str) -> Result<Self> {
        Self::hyp(lengths, coeff_symbols, symbol, HypKind::Sinh)
    }

    pub fn scale_by_rat(&self, k: &Rat) -> Self {
        self.scale(k)
    }

    /// True iff every coefficient becomes integral after multiplying by `k`.
    pub fn integral_after_scale(&self, k: &BigInt) -> bool {
        self.terms.values().all(|p| p.integral_after_scale(k))
    }

    /// Converts to integer coefficients; `None` unless all are integers.
    pub fn to_integer(&self) -> Option<ExpPoly<BigInt>> {
        let mut terms = BTreeMap::new();
        for (l, p) in &self.terms {
            terms.insert(l.clone(), p.to_integer()?);
        }
        Some(ExpPoly {
            lengths: self.lengths.clone(),
            coeff_symbols: self.coeff_symbols.clone(),
            terms,
        })
    }
}

impl<C: Coeff + CoeffText> ExpPoly<C> {
    /// Line-oriented dump: `k l m n : <canonical coefficient>`, one term per
    /// line, sorted descending by exponent.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (l, p) in self.terms() {
            let exps: Vec<String> = l.0.iter().map(|k| k.to_string()).collect();
            out.push_str(&exps.join(" "));
            out.push_str(" : ");
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}

impl<C: Coeff> std::ops::Add for &ExpPoly<C> {
    type Output = ExpPoly<C>;
    /// Panics on incompatible contexts; see [`ExpPoly::checked_add`].
    fn add(self, rhs: Self) -> ExpPoly<C> {
        self.checked_add(rhs).expect("ExpPoly add")
    }
}

impl<C: Coeff> std::ops::Sub for &ExpPoly<C> {
    type Output = ExpPoly<C>;
    fn sub(self, rhs: Self) -> ExpPoly<C> {
        self.checked_sub(rhs).expect("ExpPoly sub")
    }
}

impl<C: Coeff> std::ops::Mul for &ExpPoly<C> {
    type Output = ExpPoly<C>;
    fn mul(self, rhs: Self) -> ExpPoly<C> {
        self.checked_mul(rhs).expect("ExpPoly mul")
    }
}

impl<C: Coeff> std::ops::Neg for &ExpPoly<C> {
    type Output = ExpPoly<C>;
    fn neg(self) -> ExpPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: fmt::Debug> fmt::Debug for ExpPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExpPoly")
            .field("lengths", &self.lengths)
            .field("terms", &self.terms)
            .finish()
    }
}

/// `A·E² + B·E + C` where `E` is an auxiliary coefficient symbol.
#[derive(Clone, Debug, PartialEq)]
pub struct AuxQuadratic<C = Rat> {
    pub aux: String,
    pub a: ExpPoly<C>,
    pub b: ExpPoly<C>,
    pub c: ExpPoly<C>,
}

impl<C: Coeff> AuxQuadratic<C> {
    /// Rebuilds `A·E² + B·E + C` with `E` appended to the coefficient symbols.
    pub fn reassemble(&self) -> Result<ExpPoly<C>> {
        let syms = self.a.coeff_symbols().with_appended(&self.aux);
        let e = MPoly::var(&syms, &self.aux)?;
        let e2 = &e * &e;
        let a = self.a.embed_coeffs(&syms)?.scale_by_mpoly(&e2)?;
        let b = self.b.embed_coeffs(&syms)?.scale_by_mpoly(&e)?;
        let c = self.c.embed_coeffs(&syms)?;
        Ok(&(&a + &b) + &c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn ctx() -> (SymbolSet, SymbolSet) {
        (SymbolSet::new(["a", "b"]), SymbolSet::new(["x", "y", "z"]))
    }

    #[test]
    fn hyperbolic_expansions() {
        let (l, s) = ctx();
        let ch = ExpPoly::cosh(&l, &s, "a").unwrap();
        let sh = ExpPoly::sinh(&l, &s, "a").unwrap();
        assert_eq!(ch.term_count(), 2);
        assert_eq!(ch.coeff_at(&LinForm::new(&[1, 0])).constant_term(), rat(1, 2));
        assert_eq!(sh.coeff_at(&LinForm::new(&[-1, 0])).constant_term(), rat(-1, 2));
        let id = &(&ch * &ch) - &(&sh * &sh);
        assert_eq!(id, ExpPoly::one(&l, &s));
        assert!(matches!(
            ExpPoly::cosh(&l, &s, "q"),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn product_of_two_cosh_by_distribution() {
        let (l, s) = ctx();
        let prod = &ExpPoly::cosh(&l, &s, "a").unwrap() * &ExpPoly::cosh(&l, &s, "b").unwrap();
        assert_eq!(prod.term_count(), 4);
        for f in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
            assert_eq!(prod.coeff_at(&LinForm::new(&f)).constant_term(), rat(1, 4));
        }
    }

    #[test]
    fn cancellation_and_scaling() {
        let (l, s) = ctx();
        let ch = ExpPoly::cosh(&l, &s, "a").unwrap();
        assert!((&ch + &ch.scale_by_rat(&rat_int(-1))).is_zero());
        let two = ch.scale_by_rat(&rat_int(2));
        assert_eq!(two.coeff_at(&LinForm::new(&[1, 0])).constant_term(), rat_int(1));
        assert_eq!(two.coeff_at(&LinForm::new(&[-1, 0])).constant_term(), rat_int(1));
        assert_eq!(ExpPoly::<Rat>::zero(&l, &s).term_count(), 0);
        assert!(two.coeff_at(&LinForm::new(&[3, 3])).is_zero());
    }

    #[test]
    fn arity_mismatch_is_usage_error() {
        let (l, s) = ctx();
        let l4 = SymbolSet::new(["a", "b", "c", "d"]);
        let u = ExpPoly::cosh(&l, &s, "a").unwrap();
        let v = ExpPoly::cosh(&l4, &s, "a").unwrap();
        assert!(matches!(u.checked_mul(&v), Err(Error::Usage(_))));
        assert!(matches!(
            ExpPoly::monomial(&l, LinForm::new(&[1, 2, 3]), MPoly::<Rat>::one(&s)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn exponent_bounds_and_dominance() {
        let (l, s) = ctx();
        let sh = ExpPoly::sinh(&l, &s, "a").unwrap();
        let b = sh.exponent_bounds();
        assert_eq!((b[0].min, b[0].max), (-1, 1));
        assert_eq!((b[1].min, b[1].max), (0, 0));
        assert!(ExpPoly::<Rat>::zero(&l, &s).exponent_bounds().is_empty());

        let big = ExpPoly::monomial(&l, LinForm::new(&[5, 5]), MPoly::<Rat>::one(&s)).unwrap();
        let r = big.classify_dominance(&[LinForm::new(&[3, 3])], &[LinForm::new(&[3, 3])]);
        assert_eq!(r.violations, vec![LinForm::new(&[5, 5])]);
        assert_eq!(r.lower, 0);
    }

    #[test]
    fn quadratic_extraction_without_aux_term() {
        let (l, _) = ctx();
        let s = SymbolSet::new(["x", "E"]);
        let ch = ExpPoly::cosh(&l, &s, "a").unwrap();
        let q = ch.extract_aux_quadratic("E").unwrap();
        assert!(q.a.is_zero() && q.b.is_zero());
        assert_eq!(q.c.term_count(), 2);
        assert_eq!(q.reassemble().unwrap(), ch);
    }

    #[test]
    fn cubic_in_aux_is_structural_error() {
        let (l, _) = ctx();
        let s = SymbolSet::new(["E"]);
        let e = MPoly::<Rat>::var(&s, "E").unwrap();
        let u = ExpPoly::constant(&l, e.pow(3));
        assert!(matches!(
            u.extract_aux_quadratic("E"),
            Err(Error::Structural { .. })
        ));
    }

    #[test]
    fn numeric_evaluation() {
        let (l, s) = ctx();
        let ch = ExpPoly::cosh(&l, &s, "a").unwrap();
        let sh = ExpPoly::sinh(&l, &s, "a").unwrap();
        let v: f64 = ch.eval_numeric(&[0.0, 0.3], &[0.0, 0.0, 0.0]).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let v: f64 = sh.eval_numeric(&[1.0, 0.0], &[0.0, 0.0, 0.0]).unwrap();
        assert!((v - 1.0f64.sinh()).abs() < 1e-15);
        assert!((v - 1.175201).abs() < 1e-6);
        assert!(matches!(
            sh.eval_numeric(&[1.0], &[0.0, 0.0, 0.0]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn dump_format() {
        let (l, s) = ctx();
        let sh = ExpPoly::sinh(&l, &s, "b").unwrap();
        assert_eq!(sh.dump(), "0 1 : +1/2\n0 -1 : -1/2\n");
        assert_eq!(LinForm::new(&[4, 4, 2, 2]).render(&SymbolSet::new(["a", "b", "c", "d"])), "4a+4b+2c+2d");
        assert_eq!(LinForm::new(&[1, -1]).render(&l), "a-b");
    }
}
