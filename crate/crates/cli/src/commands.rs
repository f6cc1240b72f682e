use std::path::Path;

use rathyp_core::cyclo::{
    cyc_degree, cyc_minpoly, default_multipliers, degrees_triple, find_deg2_representative, golden_ratio,
    scan_cos_degree_formula, scan_sigma1, scan_totient_bound, sqrt2, sqrt3, verify_euclidean_triangle, CycNum,
    RatPoly, DEFAULT_ANGLE_SWEEP, DEGREE_TWO_CLASSES,
};
use rathyp_core::evidence::{eval_constant, scan_algebraicity_at, ConstantSpec, Evaluated};
use rathyp_core::exppoly::LinForm;
use rathyp_core::relations::{self as rel, Certificate, LeaderSpec, OracleSample, Relation, Verdict};
use rathyp_core::trig::{
    regular_polygon_metrics, sample_quadrilaterals, sample_triangles, solve_hyperbolic_from_angles,
    solve_ideal_vertex, solve_spherical_from_angles, AngleQ, Curvature, Geometry, QuadRanges,
};
use rathyp_core::Error;
use serde_json::{json, Value};

use crate::report::{Report, Status};
use crate::GeometryArg;

/// Failure that aborts the command before a report exists.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

fn poly_text(p: &RatPoly) -> String {
    p.to_mpoly("x").to_string()
}

fn angle_texts(a: &[AngleQ]) -> Vec<String> {
    a.iter().map(|a| a.to_string()).collect()
}

fn dump_relation(report: &mut Report, r: &Relation, path: Option<&Path>) {
    if let Some(p) = path {
        match std::fs::write(p, r.body.dump()) {
            Ok(()) => report.push(
                "dump",
                Status::Pass,
                json!({ "path": p.display().to_string(), "lines": r.body.term_count() }),
            ),
            Err(e) => report.error("dump", format!("{}: {e}", p.display())),
        }
    }
}

fn bounds_json(r: &Relation) -> (Value, i32) {
    let bounds = r.body.exponent_bounds();
    let widest = bounds.iter().map(|b| b.min.abs().max(b.max.abs())).max().unwrap_or(0);
    let map: serde_json::Map<String, Value> = bounds
        .iter()
        .map(|b| (b.symbol.clone(), json!([b.min, b.max])))
        .collect();
    (Value::Object(map), widest)
}

fn leader_json(r: &Relation, c: &rel::LeaderCheck) -> Value {
    json!({
        "exponent": c.form.render(r.body.lengths()),
        "coefficient": c.coefficient,
        "factors": c.factors,
        "unit": c.unit.to_string(),
        "matched": c.matched,
    })
}

fn certificate_json(r: &Relation, c: &Certificate, basis: &[rathyp_core::QPoly]) -> Value {
    json!({
        "verdict": c.verdict.to_string(),
        "nonzero_basis": basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "tie_conditions": c.tie_conditions.iter().map(|t| t.render(r.body.lengths())).collect::<Vec<_>>(),
        "leaders_matched": c.leaders.iter().all(|l| l.matched),
        "dominance_ok": c.dominance_ok,
    })
}

struct Expectation {
    terms: usize,
    bound: i32,
    scale: i64,
    verdict: Verdict,
}

fn relation_checks(
    report: &mut Report,
    r: &Relation,
    leaders: &[LeaderSpec],
    basis: &[rathyp_core::QPoly],
    want: Expectation,
) {
    let n = r.body.term_count();
    report.expect(
        "term-count",
        n == want.terms,
        json!({ "terms": n, "expected": want.terms }),
    );
    let cert = match rel::check_certificate(r, leaders, basis) {
        Ok(c) => c,
        Err(e) => {
            report.error("certificate", e);
            return;
        }
    };
    let name = if cert.leaders.len() == 1 { "leader" } else { "leaders" };
    report.expect(
        name,
        cert.leaders.iter().all(|l| l.matched),
        json!({ "leaders": cert.leaders.iter().map(|l| leader_json(r, l)).collect::<Vec<_>>() }),
    );
    let (bounds, widest) = bounds_json(r);
    report.expect(
        "bounds",
        widest <= want.bound,
        json!({ "exponents": bounds, "limit": want.bound }),
    );
    let d = &cert.dominance;
    report.expect(
        "dominance",
        cert.dominance_ok,
        json!({
            "leaders_found": d.leaders_found.iter().map(|l| l.render(r.body.lengths())).collect::<Vec<_>>(),
            "lower": d.lower,
            "violations": d.violations.iter().map(|l| l.render(r.body.lengths())).collect::<Vec<_>>(),
        }),
    );
    report.expect(
        "integrality",
        r.scale_applied == want.scale && rel::integral(r),
        json!({
            "scale": r.scale_applied,
            "integral": rel::integral(r),
            "max_abs_coefficient": rel::max_abs_coefficient(r).to_string(),
        }),
    );
    let (odd, even, mixed) = rel::parity_split(r);
    report.push(
        "parity",
        Status::Pass,
        json!({ "all_odd": odd, "all_even": even, "mixed": mixed }),
    );
    report.expect(
        "derivation",
        !r.steps.is_empty(),
        json!({ "checkpoints": r.steps.iter().map(|s| format!("{}: {}", s.step, s.detail)).collect::<Vec<_>>() }),
    );
    report.expect("certificate", cert.verdict == want.verdict, certificate_json(r, &cert, basis));
}

pub fn verify_triangle(dump: Option<&Path>) -> Report {
    let mut report = Report::new("verify triangle-relation");
    let r = match rel::build_triangle_relation() {
        Ok(r) => r,
        Err(e) => {
            report.error("build", e);
            return report;
        }
    };
    relation_checks(
        &mut report,
        &r,
        &rel::triangle_leaders(),
        &rel::triangle_nonzero_basis(),
        Expectation {
            terms: 25,
            bound: 3,
            scale: 64,
            verdict: Verdict::Certified,
        },
    );
    dump_relation(&mut report, &r, dump);
    report
}

pub fn verify_quad(dump: Option<&Path>) -> Report {
    let mut report = Report::new("verify quad-relation");
    let r = match rel::build_quad_relation() {
        Ok(r) => r,
        Err(e) => {
            report.error("build", e);
            return report;
        }
    };
    relation_checks(
        &mut report,
        &r,
        &rel::quad_leaders(),
        &rel::quad_nonzero_basis(),
        Expectation {
            terms: 1041,
            bound: 4,
            scale: 4096,
            verdict: Verdict::TieConditional,
        },
    );
    report.expect(
        "symmetry",
        rel::quad_relation_symmetric(&r),
        json!({ "map": "a<->c, b<->d, w<->x" }),
    );
    dump_relation(&mut report, &r, dump);
    report
}

pub fn verify_identities() -> Report {
    let mut report = Report::new("verify identities");
    let qq = match rel::build_quad_quadratics() {
        Ok(q) => q,
        Err(e) => {
            report.error("build", e);
            return report;
        }
    };
    report.expect(
        "shared-linear-coefficient",
        rel::verify_shared_linear_coeff(&qq.first, &qq.second),
        json!({ "b1_terms": qq.first.b.term_count(), "b2_terms": qq.second.b.term_count() }),
    );
    let lengths = rel::quad_lengths();
    match rel::leading_term_of_a(&qq.first) {
        Some((form, coeff)) => {
            let want = rathyp_core::QPoly::parse(rel::quad_coeffs(), "-1*w +1").expect("fixed text");
            report.expect(
                "leading-term",
                form == LinForm::new(&[1, 1, 0, 0]) && coeff == want,
                json!({ "exponent": form.render(lengths), "coefficient": coeff.to_string(), "scaled_by": 4 }),
            );
        }
        None => report.expect("leading-term", false, json!({ "exponent": null })),
    }
    let nearer = rel::cancelled_expression(&qq.first, &qq.second);
    report.expect(
        "double-squaring",
        rel::verify_double_squaring_identity(&qq.first, &qq.second, &nearer),
        json!({ "common_factor": "16*A1^2*A2^2", "cancelled_terms": nearer.term_count() }),
    );
    report
}

fn curvature_for(geometry: Option<GeometryArg>, k: Option<f64>) -> Result<Curvature<f64>, Error> {
    match (k, geometry) {
        (Some(k), _) => Curvature::new(k),
        (None, Some(GeometryArg::Spherical)) => Ok(Curvature::spherical_unit()),
        (None, _) => Ok(Curvature::hyperbolic_unit()),
    }
}

pub fn solve(geometry: Option<GeometryArg>, angles: [AngleQ; 3], k: Option<f64>) -> Report {
    let mut report = Report::new("solve");
    let result = curvature_for(geometry, k).and_then(|k| {
        let geometry = match geometry {
            Some(GeometryArg::Hyperbolic) => Geometry::Hyperbolic,
            Some(GeometryArg::Spherical) => Geometry::Spherical,
            None => k.geometry(),
        };
        let [a, b, c] = angles;
        let sol = match geometry {
            Geometry::Spherical => solve_spherical_from_angles(a, b, c, k),
            Geometry::Hyperbolic => solve_hyperbolic_from_angles(a, b, c, k),
        }?;
        Ok((k, sol))
    });
    match result {
        Ok((k, sol)) => {
            let residual = sol.law_of_sines_residual(k);
            let back = sol.angles_from_sides(k);
            let angle_err = back
                .iter()
                .zip(&sol.angles)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            report.expect(
                "triangle",
                residual < 1e-10 && angle_err < 1e-10,
                json!({
                    "geometry": sol.geometry.to_string(),
                    "curvature": k.value(),
                    "angles": angle_texts(&angles),
                    "sides": sol.sides,
                    "law_of_sines_residual": residual,
                    "angle_recovery_error": angle_err,
                }),
            );
        }
        Err(e) => report.error("triangle", e),
    }
    report
}

pub fn ideal(angles: Option<[AngleQ; 2]>, k: Option<f64>) -> Report {
    let mut report = Report::new("ideal");
    let k = match k.map(Curvature::new).unwrap_or(Ok(Curvature::hyperbolic_unit())) {
        Ok(k) => k,
        Err(e) => {
            report.error("curvature", e);
            return report;
        }
    };
    match angles {
        Some([a, b]) => match solve_ideal_vertex(a, b, k) {
            Ok(len) => report.push(
                "ideal-vertex",
                Status::Pass,
                json!({ "angles": angle_texts(&[a, b]), "curvature": k.value(), "side": len }),
            ),
            Err(e) => report.error("ideal-vertex", e),
        },
        None => {
            let unit = Curvature::hyperbolic_unit();
            for (name, (p, q), reference) in [
                ("pi/4,pi/4", (1, 4), "arccosh(3)"),
                ("pi/3,pi/3", (1, 3), "ln(3)"),
            ] {
                let a = AngleQ::new(p, q).expect("fixed angle");
                let got: rathyp_core::Result<f64> = solve_ideal_vertex(a, a, unit);
                let want = ConstantSpec::lookup(reference, 30).and_then(|s| eval_constant(&s));
                match (got, want) {
                    (Ok(got), Ok(want)) => {
                        let err: f64 = (got - want.to_f64()).abs();
                        report.expect(
                            name,
                            err < 1e-12,
                            json!({ "side": got, "reference": reference, "reference_value": want.decimal(), "error": err }),
                        );
                    }
                    (Err(e), _) | (_, Err(e)) => report.error(name, e),
                }
            }
            let right = AngleQ::new(1, 2).expect("fixed angle");
            let rejected = solve_ideal_vertex(right, right, unit);
            report.expect(
                "pi/2,pi/2",
                matches!(rejected, Err(Error::Domain(_))),
                json!({ "rejected": rejected.is_err(), "reason": rejected.err().map(|e| e.to_string()) }),
            );
        }
    }
    report
}

pub fn polygon(n: u32, theta: AngleQ, k: Option<f64>) -> Report {
    let mut report = Report::new("polygon");
    let result = curvature_for(None, k).and_then(|k| regular_polygon_metrics(n, theta, k).map(|m| (k, m)));
    match result {
        Ok((k, m)) => report.push(
            "regular-polygon",
            Status::Pass,
            json!({
                "sides": n,
                "interior_angle": theta.to_string(),
                "curvature": k.value(),
                "side_length": m.side,
                "circumradius": m.circumradius,
                "apothem": m.apothem,
            }),
        ),
        Err(e) => report.error("regular-polygon", e),
    }
    report
}

pub fn degrees(max_n: u64, totient_max: u64) -> Report {
    let mut report = Report::new("degrees");
    let d = scan_cos_degree_formula(max_n);
    report.expect(
        "degree-formula",
        d.violations.is_empty(),
        json!({
            "max_n": d.max_n,
            "pairs_checked": d.checked,
            "violations": d.violations.iter().take(20).map(|v| json!({
                "n": v.n, "k": v.k, "degree": v.degree, "expected": v.expected,
            })).collect::<Vec<_>>(),
        }),
    );
    let t = scan_totient_bound(totient_max);
    report.expect(
        "totient-bound",
        t.violations.is_empty(),
        json!({
            "max_n": t.max_n,
            "checked": t.checked,
            "violations": t.violations.iter().take(20).collect::<Vec<_>>(),
            "tightest": { "n": t.tightest.0, "phi": t.tightest.1 },
        }),
    );
    report
}

pub fn sigma1(max_den: u64) -> Report {
    let mut report = Report::new("sigma1");
    let hits = scan_sigma1(max_den);
    let third = AngleQ::new(1, 3).expect("fixed angle");
    report.expect(
        "rational-ratios",
        hits == vec![[third; 3]],
        json!({
            "max_denominator": max_den,
            "triples": hits.iter().map(|t| angle_texts(t)).collect::<Vec<_>>(),
        }),
    );
    report
}

fn class_name(d: [u64; 3]) -> String {
    format!("{}-{}-{}", d[0], d[1], d[2])
}

fn cyc_json(v: &CycNum) -> Value {
    json!({ "exact": v.to_string(), "value": v.to_f64() })
}

fn representative_check(report: &mut Report, d: [u64; 3], expect_some: bool) {
    let name = class_name(d);
    let found = degrees_triple(d).and_then(|t| find_deg2_representative(&t, &default_multipliers()));
    match found {
        Ok(Some(rep)) => {
            let mut exact = true;
            let mut minpolys = Vec::new();
            for (i, side) in rep.sides.iter().enumerate() {
                match cyc_minpoly(side) {
                    Ok(p) => {
                        exact &= p.degree() == Some(rep.degrees[i]) && rep.degrees[i] <= 2 && p.eval_cyc(side).is_zero();
                        minpolys.push(poly_text(&p));
                    }
                    Err(e) => {
                        report.error(name, e);
                        return;
                    }
                }
            }
            report.expect(
                name,
                expect_some && exact,
                json!({
                    "multiplier": rep.multiplier,
                    "anchor": rep.anchor,
                    "sides": rep.sides.iter().map(cyc_json).collect::<Vec<_>>(),
                    "degrees": rep.degrees,
                    "minimal_polynomials": minpolys,
                }),
            );
        }
        Ok(None) => report.expect(name, !expect_some, json!({ "representative": null })),
        Err(e) => report.error(name, e),
    }
}

fn reconstruction_check(report: &mut Report, name: &str, sides: [CycNum; 3], want: [u64; 3]) {
    match verify_euclidean_triangle(&sides, DEFAULT_ANGLE_SWEEP) {
        Ok(got) => {
            let expected = degrees_triple(want).expect("fixed triple").map(Some);
            let shown: Vec<Option<String>> = got.iter().map(|a| a.map(|a| a.to_string())).collect();
            report.expect(
                name,
                got == expected,
                json!({
                    "sides": sides.iter().map(cyc_json).collect::<Vec<_>>(),
                    "side_degrees": sides.iter().map(cyc_degree).collect::<Vec<_>>(),
                    "angles": shown,
                    "expected_degrees": want,
                }),
            );
        }
        Err(e) => report.error(name, e),
    }
}

pub fn table1(extra: Option<[u64; 3]>) -> Report {
    let mut report = Report::new("table1");
    for d in DEGREE_TWO_CLASSES {
        representative_check(&mut report, d, true);
    }
    representative_check(&mut report, [20, 60, 100], false);
    let one = CycNum::one();
    reconstruction_check(
        &mut report,
        "reconstruct-15-75-90",
        [&sqrt3() - &one, &sqrt3() + &one, &CycNum::from_int(2) * &sqrt2()],
        [15, 75, 90],
    );
    reconstruction_check(&mut report, "reconstruct-36-36-108", [one.clone(), one, golden_ratio()], [36, 36, 108]);
    if let Some(d) = extra {
        if !DEGREE_TWO_CLASSES.contains(&d) && d != [20, 60, 100] {
            let name = format!("query {}", class_name(d));
            match degrees_triple(d).and_then(|t| find_deg2_representative(&t, &default_multipliers())) {
                Ok(rep) => report.push(
                    name,
                    Status::Pass,
                    json!({ "representative": rep.map(|r| json!({
                        "multiplier": r.multiplier,
                        "sides": r.sides.iter().map(cyc_json).collect::<Vec<_>>(),
                        "degrees": r.degrees,
                    })) }),
                ),
                Err(e) => report.error(name, e),
            }
        }
    }
    report
}

fn evaluated_json(spec: &ConstantSpec, v: &Evaluated) -> Value {
    json!({
        "name": spec.name,
        "definition": spec.definition,
        "digits": v.digits,
        "value": v.decimal(),
    })
}

pub fn evidence(constant: &str, degree: u32, height: u32, digits: u32, budget: u128) -> Result<Report, CliError> {
    let mut report = Report::new("evidence");
    let spec = ConstantSpec::lookup(constant, digits).map_err(|e| CliError::Usage(e.to_string()))?;
    let v = match eval_constant(&spec) {
        Ok(v) => v,
        Err(e @ (Error::Parse(_) | Error::Usage(_))) => return Err(CliError::Usage(e.to_string())),
        Err(e) => {
            report.error("evaluate", e);
            return Ok(report);
        }
    };
    report.push("evaluate", Status::Pass, evaluated_json(&spec, &v));
    match scan_algebraicity_at(&v.value, degree, height, budget) {
        Ok(r) => {
            let verdict = if r.algebraic {
                "algebraic at these bounds"
            } else if r.certified {
                "no vanishing polynomial at these bounds"
            } else {
                "inconclusive"
            };
            report.expect(
                "scan",
                r.algebraic || r.certified,
                json!({
                    "degree": r.degree,
                    "height": r.height,
                    "candidates": r.candidates.to_string(),
                    "minimum": r.minimum,
                    "error_bound": r.error_bound,
                    "argmin": poly_text(&r.argmin_poly()),
                    "certified": r.certified,
                    "algebraic": r.algebraic,
                    "verdict": verdict,
                }),
            );
        }
        Err(e @ (Error::Budget { .. } | Error::Usage(_))) => return Err(CliError::Usage(e.to_string())),
        Err(e) => report.error("scan", e),
    }
    Ok(report)
}

pub fn oracle(triangle_seed: u64, triangles: usize, quad_seed: u64, quads: usize) -> Report {
    let mut report = Report::new("oracle");
    let cases: [(&str, u64, usize, f64); 2] = [
        ("triangle-relation", triangle_seed, triangles, 1e-8),
        ("quad-relation", quad_seed, quads, 1e-6),
    ];
    for (name, seed, count, tol) in cases {
        let built = if name == "triangle-relation" {
            rel::build_triangle_relation()
        } else {
            rel::build_quad_relation()
        };
        let r = match built {
            Ok(r) => r,
            Err(e) => {
                report.error(name, e);
                continue;
            }
        };
        let samples: Vec<OracleSample> = if name == "triangle-relation" {
            sample_triangles(seed, count, (0.1, 1.5)).into_iter().map(OracleSample::Triangle).collect()
        } else {
            sample_quadrilaterals(seed, count, &QuadRanges::default())
                .into_iter()
                .map(OracleSample::Quad)
                .collect()
        };
        let mut worst = 0f64;
        let mut failure = None;
        for s in &samples {
            match rel::eval_relation_numeric(&r, s) {
                Ok(res) => worst = worst.max(res.relative()),
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
        match failure {
            Some(e) => report.error(name, e),
            None => report.expect(
                name,
                worst < tol,
                json!({ "seed": seed, "samples": count, "worst_relative_residual": worst, "tolerance": tol }),
            ),
        }
    }
    report
}
