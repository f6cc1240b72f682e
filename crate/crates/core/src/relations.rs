//! Step-by-step reconstruction of the triangle and quadrilateral relations,
//! the intermediate identities between them, and transcendence
//! certificates built on top.
//!
//! Every builder records a [`Checkpoint`] after each derivation step and
//! fails with [`Error::Structural`] naming the step whose assertion broke.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, Coeff, MPoly, Rat, SymbolSet};
use crate::error::{Error, Result};
use crate::exppoly::{AuxQuadratic, DominanceReport, ExpPoly, LinForm};
use crate::trig::{QuadSample, TriangleSol};

/// Scale applied to the triangle relation to clear the powers of ½.
pub const TRIANGLE_SCALE: i64 = 64;
/// Scale applied to the quadrilateral relation.
pub const QUAD_SCALE: i64 = 4096;

pub fn triangle_lengths() -> &'static SymbolSet {
    static S: OnceLock<SymbolSet> = OnceLock::new();
    S.get_or_init(|| SymbolSet::new(["a", "b"]))
}

pub fn triangle_coeffs() -> &'static SymbolSet {
    static S: OnceLock<SymbolSet> = OnceLock::new();
    S.get_or_init(|| SymbolSet::new(["x", "y", "z"]))
}

pub fn quad_lengths() -> &'static SymbolSet {
    static S: OnceLock<SymbolSet> = OnceLock::new();
    S.get_or_init(|| SymbolSet::new(["a", "b", "c", "d"]))
}

pub fn quad_coeffs() -> &'static SymbolSet {
    static S: OnceLock<SymbolSet> = OnceLock::new();
    S.get_or_init(|| SymbolSet::new(["w", "x", "y", "z"]))
}

fn quad_coeffs_with_e() -> &'static SymbolSet {
    static S: OnceLock<SymbolSet> = OnceLock::new();
    S.get_or_init(|| quad_coeffs().with_appended("E"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Triangle,
    Quadrilateral,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Context::Triangle => "triangle",
            Context::Quadrilateral => "quadrilateral",
        })
    }
}

/// A passed derivation assertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub step: &'static str,
    pub detail: String,
}

#[derive(Default)]
struct Log(Vec<Checkpoint>);

impl Log {
    fn check(&mut self, step: &'static str, ok: bool, detail: impl Into<String>) -> Result<()> {
        let detail = detail.into();
        if !ok {
            return Err(Error::structural(step, detail));
        }
        self.0.push(Checkpoint { step, detail });
        Ok(())
    }
}

/// A collected relation `Σ p·e^{L} = 0` with integer coefficients.
#[derive(Clone, Debug)]
pub struct Relation {
    pub body: ExpPoly<Rat>,
    pub scale_applied: i64,
    pub context: Context,
    pub steps: Vec<Checkpoint>,
}

struct Hyps {
    cosh: Vec<ExpPoly<Rat>>,
    sinh: Vec<ExpPoly<Rat>>,
}

fn hyperbolics(lengths: &SymbolSet, coeffs: &SymbolSet, log: &mut Log) -> Result<Hyps> {
    let mut cosh = Vec::new();
    let mut sinh = Vec::new();
    for name in lengths.names() {
        let c = ExpPoly::cosh(lengths, coeffs, name)?;
        let s = ExpPoly::sinh(lengths, coeffs, name)?;
        let unit = &(&c * &c) - &(&s * &s);
        log.check(
            "expand hyperbolics",
            unit == ExpPoly::one(lengths, coeffs),
            format!("cosh²{name} − sinh²{name} = 1"),
        )?;
        cosh.push(c);
        sinh.push(s);
    }
    Ok(Hyps { cosh, sinh })
}

fn cvar(coeffs: &SymbolSet, lengths: &SymbolSet, name: &str) -> Result<ExpPoly<Rat>> {
    Ok(ExpPoly::constant(lengths, MPoly::var(coeffs, name)?))
}

fn cconst(coeffs: &SymbolSet, lengths: &SymbolSet, k: i64) -> ExpPoly<Rat> {
    ExpPoly::constant(lengths, MPoly::constant(coeffs, rat_int(k)))
}

fn scale_and_check(
    expr: &ExpPoly<Rat>,
    scale: i64,
    log: &mut Log,
    step: &'static str,
) -> Result<ExpPoly<Rat>> {
    log.check(
        step,
        expr.integral_after_scale(&BigInt::from(scale)),
        format!("all coefficients integral after ×{scale}"),
    )?;
    Ok(expr.scale_by_rat(&rat_int(scale)))
}

/// Builds the triangle relation over lengths `(a, b)` and coefficient
/// symbols `x = cos(α+β)`, `y = sin γ`, `z = cos γ`.
pub fn build_triangle_relation() -> Result<Relation> {
    let lengths = triangle_lengths();
    let coeffs = triangle_coeffs();
    let mut log = Log::default();
    let h = hyperbolics(lengths, coeffs, &mut log)?;
    let (ca, cb, sa, sb) = (&h.cosh[0], &h.cosh[1], &h.sinh[0], &h.sinh[1]);
    let x = cvar(coeffs, lengths, "x")?;
    let y = cvar(coeffs, lengths, "y")?;
    let z = cvar(coeffs, lengths, "z")?;
    let one = cconst(coeffs, lengths, 1);

    // cosh c eliminated via the first law of cosines.
    let sab = sa * sb;
    let zz = &(ca * cb) - &(&z * &sab);
    log.check(
        "substitute Z",
        zz.term_count() == 4,
        "Z = cosh a cosh b − z sinh a sinh b has 4 exponentials",
    )?;

    let lhs = &(&x * &(&(&zz * &zz) - &one)) * &sab;
    let rhs = &(&(&(&zz * cb) - ca) * &(&(&zz * ca) - cb)) - &(&(&y * &y) * &(&sab * &sab));
    let moved = &lhs - &rhs;
    log.check(
        "expand and move terms left",
        !moved.is_zero() && moved.lengths() == lengths,
        "x(Z²−1) sinh a sinh b − [(Z cosh b − cosh a)(Z cosh a − cosh b) − y² sinh²a sinh²b]",
    )?;
    let body = scale_and_check(&moved, TRIANGLE_SCALE, &mut log, "multiply through by 64")?;
    log.check(
        "collect",
        body.coeff_symbols() == coeffs && body.exponent_bounds().iter().all(|b| b.min >= -3 && b.max <= 3),
        format!("{} collected terms over (a, b)", body.term_count()),
    )?;
    Ok(Relation {
        body,
        scale_applied: TRIANGLE_SCALE,
        context: Context::Triangle,
        steps: log.0,
    })
}

/// The two quadratics in `E = cosh e` obtained from the angle sums at `B`
/// and at `D`.
#[derive(Clone, Debug)]
pub struct QuadQuadratics {
    pub first: AuxQuadratic<Rat>,
    pub second: AuxQuadratic<Rat>,
    pub steps: Vec<Checkpoint>,
}

/// Builds both quadratics from the cleared-denominator equations with all
/// terms moved to the right-hand side. Coefficient symbols are
/// `w = cos β`, `x = cos δ`, `y = sin α`, `z = sin γ`.
pub fn build_quad_quadratics() -> Result<QuadQuadratics> {
    let lengths = quad_lengths();
    let coeffs = quad_coeffs_with_e();
    let mut log = Log::default();
    let h = hyperbolics(lengths, coeffs, &mut log)?;
    let (ca, cb, cc, cd) = (&h.cosh[0], &h.cosh[1], &h.cosh[2], &h.cosh[3]);
    let (sa, sb, sc, sd) = (&h.sinh[0], &h.sinh[1], &h.sinh[2], &h.sinh[3]);
    let e = cvar(coeffs, lengths, "E")?;
    let w = cvar(coeffs, lengths, "w")?;
    let x = cvar(coeffs, lengths, "x")?;
    let yz = &cvar(coeffs, lengths, "y")? * &cvar(coeffs, lengths, "z")?;
    let one = cconst(coeffs, lengths, 1);

    let sab = sa * sb;
    let scd = sc * sd;
    let yz_s = &yz * &(&sab * &scd);
    let e2m1 = &(&e * &e) - &one;

    // 0 = (E cosh a − cosh d)(E cosh b − cosh c) − yz S − w(E²−1) sinh a sinh b
    let first = &(&(&(&e * ca) - cd) * &(&(&e * cb) - cc)) - &(&yz_s + &(&(&w * &e2m1) * &sab));
    // 0 = (E cosh d − cosh a)(E cosh c − cosh b) − yz S − x(E²−1) sinh c sinh d
    let second = &(&(&(&e * cd) - ca) * &(&(&e * cc) - cb)) - &(&yz_s + &(&(&x * &e2m1) * &scd));

    let q1 = first.extract_aux_quadratic("E")?;
    let q2 = second.extract_aux_quadratic("E")?;
    log.check(
        "regroup as quadratics in E",
        q1.reassemble()? == first && q2.reassemble()? == second,
        "A·E² + B·E + C reassembles both equations",
    )?;
    log.check(
        "regroup as quadratics in E",
        q1.a.coeff_symbols() == quad_coeffs() && q2.a.coeff_symbols() == quad_coeffs(),
        "E eliminated from the coefficient ring",
    )?;
    Ok(QuadQuadratics {
        first: q1,
        second: q2,
        steps: log.0,
    })
}

/// `B₁ = B₂` as exact exponential polynomials.
pub fn verify_shared_linear_coeff<C: Coeff>(q1: &AuxQuadratic<C>, q2: &AuxQuadratic<C>) -> bool {
    q1.b == q2.b
}

/// The dominant exponential of `4·A` and its coefficient, provided every
/// other term of `A` is strictly dominated by it.
pub fn leading_term_of_a(q: &AuxQuadratic<Rat>) -> Option<(LinForm, MPoly<Rat>)> {
    let scaled = q.a.scale_by_rat(&rat_int(4));
    let top = scaled
        .terms()
        .map(|(l, _)| l.clone())
        .find(|cand| scaled.terms().all(|(l, _)| l == cand || l.strictly_dominated_by(cand)))?;
    let coeff = scaled.coeff_at(&top);
    Some((top, coeff))
}

/// `A₁²C₂² + A₂²C₁² − 2A₁A₂C₁C₂ + A₁B²C₁ + A₂B²C₂ − A₁B²C₂ − A₂B²C₁`,
/// the equation left after cancelling `16A₁²A₂²`.
pub fn cancelled_expression<C: Coeff>(q1: &AuxQuadratic<C>, q2: &AuxQuadratic<C>) -> ExpPoly<C> {
    let (a1, c1, a2, c2, b) = (&q1.a, &q1.c, &q2.a, &q2.c, &q1.b);
    let two = C::one() + C::one();
    let a1a1 = a1 * a1;
    let a2a2 = a2 * a2;
    let c1c1 = c1 * c1;
    let c2c2 = c2 * c2;
    let bb = b * b;
    let a1bb = a1 * &bb;
    let a2bb = a2 * &bb;
    let mut acc = &a1a1 * &c2c2;
    acc = &acc + &(&a2a2 * &c1c1);
    acc = &acc - &(&(a1 * a2) * &(c1 * c2)).scale(&two);
    acc = &acc + &(&a1bb * c1);
    acc = &acc + &(&a2bb * c2);
    acc = &acc - &(&a1bb * c2);
    acc = &acc - &(&a2bb * c1);
    acc
}

/// Builds the quadrilateral relation `4096·(cancelled expression)`.
pub fn build_quad_relation() -> Result<Relation> {
    let qq = build_quad_quadratics()?;
    let mut log = Log(qq.steps.clone());
    let (q1, q2) = (&qq.first, &qq.second);
    log.check(
        "shared linear coefficient",
        verify_shared_linear_coeff(q1, q2),
        "B₁ = B₂",
    )?;
    let w1 = MPoly::parse(quad_coeffs(), "-1*w +1")?;
    let x1 = MPoly::parse(quad_coeffs(), "-1*x +1")?;
    let lead_ok = |q: &AuxQuadratic<Rat>, form: [i32; 4], expected: &MPoly<Rat>| {
        matches!(leading_term_of_a(q), Some((l, p)) if l == LinForm::new(&form) && &p == expected)
    };
    log.check(
        "leading coefficients nonzero",
        lead_ok(q1, [1, 1, 0, 0], &w1) && lead_ok(q2, [0, 0, 1, 1], &x1),
        "4A₁ leads with (1−w)e^{a+b}; 4A₂ leads with (1−x)e^{c+d}",
    )?;
    let nearer = cancelled_expression(q1, q2);
    let body = scale_and_check(&nearer, QUAD_SCALE, &mut log, "multiply through by 4096")?;
    log.check(
        "collect",
        body.coeff_symbols() == quad_coeffs()
            && body.exponent_bounds().iter().all(|b| b.min >= -4 && b.max <= 4),
        format!("{} collected terms over (a, b, c, d)", body.term_count()),
    )?;
    Ok(Relation {
        body,
        scale_applied: QUAD_SCALE,
        context: Context::Quadrilateral,
        steps: log.0,
    })
}

/// Checks the cancellation step exactly: with `P = A₁B − A₂B`,
/// `Qᵢ = B² − 4AᵢCᵢ`,
/// `(P² + A₂²Q₁ − A₁²Q₂)² − 4P²A₂²Q₁ = 16A₁²A₂²·N`
/// where `N` is the cancelled expression supplied by the caller.
///
/// Both sides are homogeneous of degree 8 in `(A, B, C)`, so the check is
/// carried out on the integer-valued `16·A, 16·B, 16·C` and `16⁴·N`.
pub fn verify_double_squaring_identity(
    q1: &AuxQuadratic<Rat>,
    q2: &AuxQuadratic<Rat>,
    nearer: &ExpPoly<Rat>,
) -> bool {
    let s = Rat::from_integer(BigInt::from(16));
    let to_int = |u: &ExpPoly<Rat>, k: &Rat| u.scale_by_rat(k).to_integer();
    let s4 = &s * &s * &s * &s;
    let (Some(a1), Some(b1), Some(c1), Some(a2), Some(b2), Some(c2), Some(n)) = (
        to_int(&q1.a, &s),
        to_int(&q1.b, &s),
        to_int(&q1.c, &s),
        to_int(&q2.a, &s),
        to_int(&q2.b, &s),
        to_int(&q2.c, &s),
        to_int(nearer, &s4),
    ) else {
        return false;
    };
    if b1 != b2 {
        return false;
    }
    let b = b1;
    let four = BigInt::from(4);
    let bb = &b * &b;
    let p = &(&a1 * &b) - &(&a2 * &b);
    let pp = &p * &p;
    let a1a1 = &a1 * &a1;
    let a2a2 = &a2 * &a2;
    let q1v = &bb - &(&a1 * &c1).scale(&four);
    let q2v = &bb - &(&a2 * &c2).scale(&four);
    let k = &(&pp + &(&a2a2 * &q1v)) - &(&a1a1 * &q2v);
    let lhs = &(&k * &k) - &(&(&pp * &a2a2) * &q1v).scale(&four);
    let rhs = (&(&a1a1 * &a2a2) * &n).scale(&BigInt::from(16));
    lhs == rhs
}

/// The quadrilateral relation maps to itself under `a↔c`, `b↔d`, `w↔x`.
pub fn quad_relation_symmetric(rel: &Relation) -> bool {
    let swapped = rel.body.swap_lengths(0, 2).swap_lengths(1, 3).swap_coeff_symbols(0, 1);
    swapped == rel.body
}

/// A leader term and its claimed factorization.
#[derive(Clone, Debug)]
pub struct LeaderSpec {
    pub form: LinForm,
    pub factors: Vec<MPoly<Rat>>,
    pub unit: Rat,
}

#[derive(Clone, Debug)]
pub struct LeaderCheck {
    pub form: LinForm,
    pub factors: Vec<String>,
    pub unit: Rat,
    pub coefficient: String,
    pub matched: bool,
}

/// Linear equation `Σ kᵢ·tᵢ = 0` among length symbols, normalized to
/// primitive coefficients with a positive first nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TieCondition(pub LinForm);

impl TieCondition {
    fn from_difference(diff: LinForm) -> Option<Self> {
        let g = diff.0.iter().fold(0i32, |g, &k| g.gcd(&k));
        if g == 0 {
            return None;
        }
        let sign = diff.0.iter().find(|&&k| k != 0).map(|k| k.signum()).unwrap_or(1);
        Some(TieCondition(LinForm(diff.0.iter().map(|k| k / g * sign).collect())))
    }

    /// Renders as `a+b=c+d`.
    pub fn render(&self, lengths: &SymbolSet) -> String {
        let pos = LinForm(self.0 .0.iter().map(|&k| k.max(0)).collect());
        let neg = LinForm(self.0 .0.iter().map(|&k| (-k).max(0)).collect());
        format!("{}={}", pos.render(lengths), neg.render(lengths))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    TieConditional,
    Failed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::TieConditional => "tie-conditional",
            Verdict::Failed => "failed",
        })
    }
}

/// Machine-checked preconditions for applying Lindemann's theorem to a
/// relation: leader coefficients factor over nonvanishing factors, every
/// other term is dominated, and equalities among leader exponents are
/// listed as side conditions.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub leaders: Vec<LeaderCheck>,
    pub dominance: DominanceReport,
    pub dominance_ok: bool,
    pub tie_conditions: Vec<TieCondition>,
    pub verdict: Verdict,
}

pub fn check_certificate(
    rel: &Relation,
    leaders: &[LeaderSpec],
    nonzero_basis: &[MPoly<Rat>],
) -> Result<Certificate> {
    let mut checks = Vec::new();
    for spec in leaders {
        for f in &spec.factors {
            if !nonzero_basis.contains(f) {
                return Err(Error::usage(format!(
                    "factor `{f}` is not in the nonvanishing basis"
                )));
            }
        }
        if spec.unit.is_zero() {
            return Err(Error::usage("leader unit must be nonzero"));
        }
        let coefficient = rel.body.coeff_at(&spec.form);
        checks.push(LeaderCheck {
            form: spec.form.clone(),
            factors: spec.factors.iter().map(|f| f.to_string()).collect(),
            unit: spec.unit.clone(),
            coefficient: coefficient.to_string(),
            matched: coefficient.equals_product(&spec.factors, &spec.unit),
        });
    }
    let forms: Vec<LinForm> = leaders.iter().map(|l| l.form.clone()).collect();
    let dominance = rel.body.classify_dominance(&forms, &forms);
    let dominance_ok = dominance.ok(forms.len());
    let mut ties = BTreeSet::new();
    for (i, li) in forms.iter().enumerate() {
        for lj in &forms[i + 1..] {
            let diff = LinForm(li.0.iter().zip(&lj.0).map(|(p, q)| p - q).collect());
            if let Some(t) = TieCondition::from_difference(diff) {
                ties.insert(t);
            }
        }
    }
    let tie_conditions: Vec<TieCondition> = ties.into_iter().collect();
    let verdict = if !(checks.iter().all(|c| c.matched) && dominance_ok) || checks.is_empty() {
        Verdict::Failed
    } else if tie_conditions.is_empty() {
        Verdict::Certified
    } else {
        Verdict::TieConditional
    };
    Ok(Certificate {
        leaders: checks,
        dominance,
        dominance_ok,
        tie_conditions,
        verdict,
    })
}

fn parse_all(syms: &SymbolSet, texts: &[&str]) -> Vec<MPoly<Rat>> {
    texts
        .iter()
        .map(|t| MPoly::parse(syms, t).expect("fixed factor text"))
        .collect()
}

/// `{x−1, z−1}`: nonzero because `x = cos(α+β)` and `z = cos γ` lie in `(−1, 1)`.
pub fn triangle_nonzero_basis() -> Vec<MPoly<Rat>> {
    parse_all(triangle_coeffs(), &["+1*x -1", "+1*z -1"])
}

/// `{w−1, x−1, 1−x, y, z}` from `w, x ∈ (−1, 1)` and `y, z ≠ 0`.
pub fn quad_nonzero_basis() -> Vec<MPoly<Rat>> {
    parse_all(
        quad_coeffs(),
        &["+1*w -1", "+1*x -1", "-1*x +1", "+1*y", "+1*z"],
    )
}

/// Leader `(x−1)(z−1)²` at `e^{3a+3b}`.
pub fn triangle_leaders() -> Vec<LeaderSpec> {
    let f = parse_all(triangle_coeffs(), &["+1*x -1", "+1*z -1"]);
    vec![LeaderSpec {
        form: LinForm::new(&[3, 3]),
        factors: vec![f[0].clone(), f[1].clone(), f[1].clone()],
        unit: Rat::one(),
    }]
}

/// The three displayed leaders `(w−1)²y²z²`, `(x−1)²y²z²` and
/// `2(w−1)(1−x)y²z²`.
pub fn quad_leaders() -> Vec<LeaderSpec> {
    let f = parse_all(
        quad_coeffs(),
        &["+1*w -1", "+1*x -1", "-1*x +1", "+1*y", "+1*z"],
    );
    let (w1, x1, one_x, y, z) = (&f[0], &f[1], &f[2], &f[3], &f[4]);
    let yyzz = [y.clone(), y.clone(), z.clone(), z.clone()];
    let with = |head: &[&MPoly<Rat>]| -> Vec<MPoly<Rat>> {
        head.iter().map(|p| (*p).clone()).chain(yyzz.iter().cloned()).collect()
    };
    vec![
        LeaderSpec {
            form: LinForm::new(&[4, 4, 2, 2]),
            factors: with(&[w1, w1]),
            unit: Rat::one(),
        },
        LeaderSpec {
            form: LinForm::new(&[2, 2, 4, 4]),
            factors: with(&[x1, x1]),
            unit: Rat::one(),
        },
        LeaderSpec {
            form: LinForm::new(&[3, 3, 3, 3]),
            factors: with(&[w1, one_x]),
            unit: rat_int(2),
        },
    ]
}

/// Geometric data from which a relation's symbols are bound.
#[derive(Clone, Debug)]
pub enum OracleSample {
    /// Triangle with `γ` between sides `a` and `b`.
    Triangle(TriangleSol<f64>),
    Quad(QuadSample<f64>),
}

/// Signed residual of a relation at a sample, with the largest term
/// magnitude as its scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    pub value: f64,
    pub scale: f64,
}

impl Residual {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.value.abs()
        } else {
            self.value.abs() / self.scale
        }
    }
}

/// Evaluates the relation with its symbols bound from `sample`: for
/// triangles `x = cos(α+β)`, `y = sin γ`, `z = cos γ`; for quadrilaterals
/// `w = cos β`, `x = cos δ`, `y = sin α`, `z = sin γ`.
pub fn eval_relation_numeric(rel: &Relation, sample: &OracleSample) -> Result<Residual> {
    let (lengths, coeffs) = match (rel.context, sample) {
        (Context::Triangle, OracleSample::Triangle(t)) => {
            let [alpha, beta, gamma] = t.angles;
            let [a, b, _] = t.sides;
            (
                vec![a, b],
                vec![(alpha + beta).cos(), gamma.sin(), gamma.cos()],
            )
        }
        (Context::Quadrilateral, OracleSample::Quad(q)) => (
            vec![q.a, q.b, q.c, q.d],
            vec![q.w(), q.x(), q.alpha.sin(), q.gamma.sin()],
        ),
        (ctx, _) => {
            return Err(Error::usage(format!(
                "sample does not supply the bindings of a {ctx} relation"
            )))
        }
    };
    if lengths.iter().chain(&coeffs).any(|v| !v.is_finite()) {
        return Err(Error::usage("sample contains non-finite values"));
    }
    let (value, scale) = rel.body.eval_numeric_with_scale(&lengths, &coeffs)?;
    Ok(Residual { value, scale })
}

/// Counts of terms whose exponents are all odd, all even, or mixed.
pub fn parity_split(rel: &Relation) -> (usize, usize, usize) {
    let mut odd = 0;
    let mut even = 0;
    let mut mixed = 0;
    for (l, _) in rel.body.terms() {
        if l.0.iter().all(|k| k.abs() % 2 == 1) {
            odd += 1;
        } else if l.0.iter().all(|k| k % 2 == 0) {
            even += 1;
        } else {
            mixed += 1;
        }
    }
    (odd, even, mixed)
}

/// True iff every coefficient of the body is an integer.
pub fn integral(rel: &Relation) -> bool {
    rel.body.terms().all(|(_, p)| p.terms().all(|(_, c)| c.is_integer()))
}

/// Largest absolute coefficient in the body.
pub fn max_abs_coefficient(rel: &Relation) -> Rat {
    rel.body
        .terms()
        .flat_map(|(_, p)| p.terms().map(|(_, c)| c.abs()))
        .max()
        .unwrap_or_else(Rat::zero)
}
