use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use super::interval::{scaled_to_f64, Interval};
use super::{eval_constant, ConstantSpec};
use crate::arith::rat_int;
use crate::cyclo::RatPoly;
use crate::error::{Error, Result};

/// Default cap on `(2H+1)^(D+1)`.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub degree: u32,
    pub height: u32,
    /// Polynomials evaluated (positive leading coefficient only).
    pub candidates: u128,
    /// `|p(v)|` for the minimising polynomial.
    pub minimum: f64,
    /// Bound on `| computed p(v) − true p(v) |`, valid for every candidate.
    pub error_bound: f64,
    /// Coefficients of the minimiser, constant term first.
    pub argmin: Vec<i64>,
    /// `error_bound < minimum / 10`.
    pub certified: bool,
    /// The enclosure of `p(v)` for the minimiser contains zero.
    pub algebraic: bool,
}

impl ScanResult {
    pub fn argmin_poly(&self) -> RatPoly {
        RatPoly::new(self.argmin.iter().map(|&c| rat_int(c)).collect())
    }
}

/// Evaluates the constant to its requested digits and scans it.
pub fn scan_algebraicity(spec: &ConstantSpec, degree: u32, height: u32, budget: u128) -> Result<ScanResult> {
    check_bounds(degree, height, budget)?;
    let v = eval_constant(spec)?;
    scan_algebraicity_at(&v.value, degree, height, budget)
}

fn required(degree: u32, height: u32) -> u128 {
    (2 * height as u128 + 1)
        .checked_pow(degree + 1)
        .unwrap_or(u128::MAX)
}

fn check_bounds(degree: u32, height: u32, budget: u128) -> Result<()> {
    if degree < 1 || height < 1 {
        return Err(Error::usage("degree and height bounds must be at least 1"));
    }
    let req = required(degree, height);
    if req > budget {
        return Err(Error::Budget {
            required: req,
            budget,
        });
    }
    Ok(())
}

/// Best candidate of one task: clamped magnitude `max(|p(v)|, E)` and the
/// coefficient vector, highest degree first (padded to `D + 1`).
type Best = (BigUint, Vec<i64>);

fn better(a: &Best, b: &Best) -> bool {
    (&a.0, &a.1) < (&b.0, &b.1)
}

/// Exhaustive scan over every nonzero integer polynomial of degree at most
/// `degree` with coefficients in `[−height, height]` and positive leading
/// coefficient, evaluated at the enclosure `v`.
///
/// Each `p(v)` is computed exactly as `Σ aᵢ·cᵢ` from the centres `cᵢ` of
/// the enclosures of `vⁱ`; the error is at most `height·Σ rad(vⁱ)`.
pub fn scan_algebraicity_at(v: &Interval, degree: u32, height: u32, budget: u128) -> Result<ScanResult> {
    check_bounds(degree, height, budget)?;
    let prec = v.prec();
    let mut powers = vec![Interval::from_int(1, prec)];
    for i in 1..=degree as usize {
        powers.push(powers[i - 1].mul(v));
    }
    let (centers, radii): (Vec<BigInt>, Vec<BigInt>) = powers.iter().map(Interval::center_radius).unzip();
    let err: BigInt = radii.iter().sum::<BigInt>() * BigInt::from(height);
    let err_mag = err.magnitude().clone();
    let h = height as i64;
    let width = degree as usize + 1;

    let tasks: Vec<(usize, i64)> = (0..width)
        .flat_map(|k| (1..=h).map(move |lead| (k, lead)))
        .collect();

    let results: Vec<(Best, u128)> = tasks
        .par_iter()
        .map(|&(k, lead)| {
            let mut coeffs = vec![0i64; width];
            coeffs[width - 1 - k] = lead;
            let lead_term = &centers[k] * BigInt::from(lead);
            if k == 0 {
                let m = lead_term.magnitude().clone().max(err_mag.clone());
                return ((m, coeffs), 1);
            }
            // middle coefficients a_{k−1}..a_1, most significant first
            let mid = k - 1;
            let mut digits = vec![-h; mid];
            let mut best: Option<Best> = None;
            let mut count = 0u128;
            loop {
                let mut val = lead_term.clone();
                for (j, &a) in digits.iter().enumerate() {
                    let deg = k - 1 - j;
                    val += &centers[deg] * BigInt::from(a);
                }
                val -= &centers[0] * BigInt::from(h);
                for a0 in -h..=h {
                    count += 1;
                    let mag = val.magnitude();
                    let key = if mag < &err_mag { &err_mag } else { mag };
                    if best.as_ref().is_none_or(|b| key < &b.0) {
                        for (j, &a) in digits.iter().enumerate() {
                            coeffs[width - k + j] = a;
                        }
                        coeffs[width - 1] = a0;
                        best = Some((key.clone(), coeffs.clone()));
                    }
                    val += &centers[0];
                }
                // odometer over the middle digits
                let mut pos = mid;
                loop {
                    if pos == 0 {
                        return (best.unwrap(), count);
                    }
                    pos -= 1;
                    if digits[pos] < h {
                        digits[pos] += 1;
                        for d in digits.iter_mut().skip(pos + 1) {
                            *d = -h;
                        }
                        break;
                    }
                }
            }
        })
        .collect();

    let candidates = results.iter().map(|(_, c)| c).sum();
    let best = results
        .into_iter()
        .map(|(b, _)| b)
        .reduce(|a, b| if better(&b, &a) { b } else { a })
        .expect("at least one candidate");

    let argmin: Vec<i64> = best.1.iter().rev().copied().collect();
    let value: BigInt = argmin
        .iter()
        .zip(&centers)
        .map(|(&a, c)| c * BigInt::from(a))
        .sum();
    let mag = value.magnitude();
    let ten = BigUint::from(10u32);
    Ok(ScanResult {
        degree,
        height,
        candidates,
        minimum: scaled_to_f64(&BigInt::from(mag.clone()), prec),
        error_bound: scaled_to_f64(&err, prec),
        argmin,
        certified: !mag.is_zero() && &err_mag * &ten < *mag,
        algebraic: mag <= &err_mag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn at(expr: &str) -> Interval {
        eval_constant(&ConstantSpec::lookup(expr, 60).unwrap()).unwrap().value
    }

    #[test]
    fn recovers_known_minimal_polynomials() {
        let r = scan_algebraicity_at(&at("sqrt(2)"), 2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.argmin, vec![-2, 0, 1]);
        assert!(r.algebraic && !r.certified);
        assert_eq!(r.candidates, (125 - 1) / 2);
        let r = scan_algebraicity_at(&at("(1+sqrt(5))/2"), 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.argmin, vec![-1, -1, 1]);
        let r = scan_algebraicity_at(&at("(1+sqrt(5))/2"), 3, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.argmin, vec![-1, -1, 1, 0]);
    }

    #[test]
    fn planted_cubic() {
        // 2x³ − 3x − 1 = (x + 1)(2x² − 2x − 1), root (1 + √3)/2
        let r = scan_algebraicity_at(&at("(1+sqrt(3))/2"), 3, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.argmin, vec![-1, -2, 2, 0]);
        assert!(r.algebraic);
    }

    #[test]
    fn transcendental_candidate_is_certified() {
        let r = scan_algebraicity_at(&at("ln(3)"), 2, 5, DEFAULT_BUDGET).unwrap();
        assert!(r.certified && !r.algebraic);
        assert!(r.minimum > 1e-6);
    }

    #[test]
    fn bounds_and_budget() {
        let v = at("pi");
        assert!(matches!(
            scan_algebraicity_at(&v, 0, 2, DEFAULT_BUDGET),
            Err(Error::Usage(_))
        ));
        assert_eq!(
            scan_algebraicity_at(&v, 3, 20, 1000),
            Err(Error::Budget {
                required: 41u128.pow(4),
                budget: 1000
            })
        );
    }
}
