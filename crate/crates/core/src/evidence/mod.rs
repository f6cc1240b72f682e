//! Numerical evidence that a constant satisfies no small integer polynomial.
//!
//! Constants are defined by expressions ([`expr::Expr`]) and enclosed with
//! certified error bounds ([`interval::Interval`]). [`scan_algebraicity`]
//! then evaluates every integer polynomial within degree and height bounds.

pub mod expr;
pub mod interval;
mod scan;

pub use expr::{Expr, Func};
pub use interval::Interval;
pub use scan::{scan_algebraicity, scan_algebraicity_at, ScanResult, DEFAULT_BUDGET};

use crate::error::{Error, Result};

/// Minimum working precision in bits.
pub const MIN_PREC_BITS: u32 = 200;

const MAX_PREC_BITS: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantSpec {
    pub name: String,
    pub definition: String,
    pub expr: Expr,
    /// Requested decimal digits.
    pub digits: u32,
}

impl ConstantSpec {
    pub fn new(name: &str, definition: &str, digits: u32) -> Result<Self> {
        Ok(ConstantSpec {
            name: name.to_string(),
            definition: definition.to_string(),
            expr: Expr::parse(definition)?,
            digits,
        })
    }

    /// A registry entry by name, or otherwise the text parsed as a raw
    /// expression.
    pub fn lookup(name_or_expr: &str, digits: u32) -> Result<Self> {
        match REGISTRY.iter().find(|(n, _)| *n == name_or_expr) {
            Some((n, def)) => Self::new(n, def, digits),
            None => Self::new(name_or_expr, name_or_expr, digits),
        }
    }
}

/// Named constants: the equiangular `π/4` triangle side, the ideal-vertex
/// side for two `π/3` angles, and the circumradius of the regular
/// quadrilateral with `π/3` corners.
pub const REGISTRY: [(&str, &str); 3] = [
    ("tri-side-pi4", "arccosh(1+sqrt(2))"),
    ("ideal-pi3", "ln(3)"),
    ("quad-fig3-radius", "arccosh(sqrt(3))"),
];

pub fn registry() -> Vec<ConstantSpec> {
    REGISTRY
        .iter()
        .map(|(n, d)| ConstantSpec::new(n, d, 50).expect("registry entries parse"))
        .collect()
}

/// Certified enclosure of a constant.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluated {
    pub value: Interval,
    pub digits: u32,
}

impl Evaluated {
    pub fn decimal(&self) -> String {
        self.value.to_decimal(self.digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

/// Evaluates to an enclosure of width at most `10^-digits`, doubling the
/// working precision (from at least [`MIN_PREC_BITS`]) until it is reached.
pub fn eval_constant(spec: &ConstantSpec) -> Result<Evaluated> {
    let mut prec = bits_for_digits(spec.digits).max(MIN_PREC_BITS);
    loop {
        let value = spec.expr.eval_interval(prec)?;
        if value.width_within_digits(spec.digits) {
            return Ok(Evaluated {
                value,
                digits: spec.digits,
            });
        }
        if prec >= MAX_PREC_BITS {
            return Err(Error::domain(format!(
                "`{}` cannot be enclosed to {} digits (ill-conditioned near a singularity)",
                spec.definition, spec.digits
            )));
        }
        prec *= 2;
    }
}
