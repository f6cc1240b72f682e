//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rathyp_core::arith::MPoly;
use rathyp_core::cyclo::{
    cyc_degree, cyc_minpoly, default_multipliers, degrees_triple, find_deg2_representative,
    golden_ratio, scan_cos_degree_formula, scan_sigma1, scan_totient_bound, sqrt2, sqrt3,
    verify_euclidean_triangle, CycNum, DEFAULT_ANGLE_SWEEP, DEGREE_TWO_CLASSES,
};
use rathyp_core::evidence::{scan_algebraicity, ConstantSpec, DEFAULT_BUDGET};
use rathyp_core::exppoly::LinForm;
use rathyp_core::relations::{self as rel, OracleSample, Verdict};
use rathyp_core::trig::{
    sample_quadrilaterals, sample_triangles, solve_hyperbolic_from_angles, solve_ideal_vertex,
    solve_spherical_from_angles, AngleQ, Curvature, QuadRanges,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("{what} took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn q(n: u64, d: u64) -> AngleQ {
    AngleQ::new(n, d).unwrap()
}

fn triangle_structure() -> Outcome {
    let t = Instant::now();
    let r = rel::build_triangle_relation().map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(1), "build")?;
    let n = r.body.term_count();
    ensure(n == 25, format!("{n} terms, expected 25"))?;
    let lead = r.body.coeff_at(&LinForm::new(&[3, 3]));
    let expected = MPoly::parse(rel::triangle_coeffs(), "+1*x*z^2 -2*x*z -1*z^2 +1*x +2*z -1")
        .map_err(|e| e.to_string())?;
    ensure(lead == expected, format!("leader is {lead}"))?;
    ensure(
        r.body.exponent_bounds().iter().all(|b| b.min >= -3 && b.max <= 3),
        "exponents outside [-3, 3]",
    )?;
    let lower = r
        .body
        .terms()
        .filter(|(l, _)| **l != LinForm::new(&[3, 3]))
        .filter(|(l, _)| l.0[0] < 3 || l.0[1] < 3)
        .count();
    ensure(lower == 24, format!("{lower} lower-order terms, expected 24"))?;
    ensure(
        r.scale_applied == 64 && rel::integral(&r),
        "coefficients not integral after x64",
    )?;
    let (odd, even, mixed) = rel::parity_split(&r);
    ensure(
        (odd, even, mixed) == (16, 9, 0),
        format!("parity split {odd}/{even}/{mixed}"),
    )?;
    Ok(format!(
        "25 terms, leader (x-1)(z-1)^2 at 3a+3b, 24 lower, integral after x64, parity 16+9, built in {elapsed:.2?}"
    ))
}

fn quad_structure() -> Outcome {
    let t = Instant::now();
    let r = rel::build_quad_relation().map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(30), "build")?;
    let n = r.body.term_count();
    ensure(n == 1041, format!("{n} terms, expected 1041"))?;
    for spec in rel::quad_leaders() {
        let c = r.body.coeff_at(&spec.form);
        ensure(
            c.equals_product(&spec.factors, &spec.unit),
            format!("leader at {:?} is {c}", spec.form),
        )?;
    }
    ensure(
        r.body.exponent_bounds().iter().all(|b| b.min >= -4 && b.max <= 4),
        "exponents outside [-4, 4]",
    )?;
    let forms: Vec<LinForm> = rel::quad_leaders().into_iter().map(|l| l.form).collect();
    let dom = r.body.classify_dominance(&forms, &forms);
    ensure(
        dom.ok(3),
        format!("{} violations, {} leaders", dom.violations.len(), dom.leaders_found.len()),
    )?;
    ensure(
        r.scale_applied == 4096 && rel::integral(&r),
        "coefficients not integral after x4096",
    )?;
    Ok(format!(
        "1041 terms, 3 leaders, exponents in [-4, 4], {} lower / 0 violations, integral after x4096, built in {elapsed:.2?}",
        dom.lower
    ))
}

fn intermediate_identities() -> Outcome {
    let qq = rel::build_quad_quadratics().map_err(|e| e.to_string())?;
    ensure(
        rel::verify_shared_linear_coeff(&qq.first, &qq.second),
        "B1 != B2",
    )?;
    let (form, coeff) = rel::leading_term_of_a(&qq.first).ok_or("4A1 has no dominant term")?;
    let one_minus_w = MPoly::parse(rel::quad_coeffs(), "-1*w +1").unwrap();
    ensure(
        form == LinForm::new(&[1, 1, 0, 0]) && coeff == one_minus_w,
        format!("4A1 leads with {coeff} at {form:?}"),
    )?;
    let t = Instant::now();
    let nearer = rel::cancelled_expression(&qq.first, &qq.second);
    ensure(
        rel::verify_double_squaring_identity(&qq.first, &qq.second, &nearer),
        "double-squaring identity fails",
    )?;
    Ok(format!(
        "B1 = B2, 4A1 leads with (1-w)e^(a+b), double-squaring identity exact ({:.2?})",
        t.elapsed()
    ))
}

fn certificates() -> Outcome {
    let tri = rel::build_triangle_relation().map_err(|e| e.to_string())?;
    let c = rel::check_certificate(&tri, &rel::triangle_leaders(), &rel::triangle_nonzero_basis())
        .map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::Certified, format!("triangle verdict {}", c.verdict))?;
    let quad = rel::build_quad_relation().map_err(|e| e.to_string())?;
    let c = rel::check_certificate(&quad, &rel::quad_leaders(), &rel::quad_nonzero_basis())
        .map_err(|e| e.to_string())?;
    ensure(
        c.verdict == Verdict::TieConditional,
        format!("quadrilateral verdict {}", c.verdict),
    )?;
    let ties: Vec<String> = c
        .tie_conditions
        .iter()
        .map(|t| t.render(rel::quad_lengths()))
        .collect();
    ensure(ties == ["a+b=c+d"], format!("tie set {ties:?}"))?;
    Ok("triangle certified over {x-1, z-1}; quadrilateral tie-conditional on {a+b=c+d}".into())
}

fn numeric_oracle() -> Outcome {
    let t = Instant::now();
    let tri = rel::build_triangle_relation().map_err(|e| e.to_string())?;
    let quad = rel::build_quad_relation().map_err(|e| e.to_string())?;
    let mut worst_t = 0f64;
    for s in sample_triangles(20240501, 1000, (0.1, 1.5)) {
        let r = rel::eval_relation_numeric(&tri, &OracleSample::Triangle(s)).map_err(|e| e.to_string())?;
        worst_t = worst_t.max(r.relative());
    }
    let mut worst_q = 0f64;
    for s in sample_quadrilaterals(20240502, 200, &QuadRanges::default()) {
        let r = rel::eval_relation_numeric(&quad, &OracleSample::Quad(s)).map_err(|e| e.to_string())?;
        worst_q = worst_q.max(r.relative());
    }
    let elapsed = t.elapsed();
    ensure(worst_t < 1e-8, format!("worst triangle residual {worst_t:e}"))?;
    ensure(worst_q < 1e-6, format!("worst quadrilateral residual {worst_q:e}"))?;
    within(elapsed, Duration::from_secs(60), "oracle")?;
    Ok(format!(
        "1000 triangles worst {worst_t:.1e}, 200 quadrilaterals worst {worst_q:.1e}, {elapsed:.2?}"
    ))
}

fn curvature_examples() -> Outcome {
    let k = Curvature::<f64>::unit_quarter_pi_triangle();
    let sol = solve_hyperbolic_from_angles(q(1, 4), q(1, 4), q(1, 4), k).map_err(|e| e.to_string())?;
    ensure(
        sol.sides.iter().all(|s| (s - 1.0).abs() < 1e-12),
        format!("hyperbolic sides {:?}", sol.sides),
    )?;
    ensure(
        format!("{:.4}", k.value()) == "-2.3365",
        format!("K = {}", k.value()),
    )?;
    let ks = Curvature::<f64>::unit_right_spherical_triangle();
    let sol = solve_spherical_from_angles(q(1, 2), q(1, 2), q(1, 2), ks).map_err(|e| e.to_string())?;
    ensure(
        sol.sides.iter().all(|s| (s - 1.0).abs() < 1e-12),
        format!("spherical sides {:?}", sol.sides),
    )?;
    ensure(
        format!("{:.4}", ks.value()) == "2.4674",
        format!("K = {}", ks.value()),
    )?;
    Ok(format!(
        "unit sides at K = {:.4} (pi/4 triangle) and K = {:.4} (right spherical triangle)",
        k.value(),
        ks.value()
    ))
}

fn ideal_vertex() -> Outcome {
    let k = Curvature::<f64>::hyperbolic_unit();
    let a = solve_ideal_vertex(q(1, 4), q(1, 4), k).map_err(|e| e.to_string())?;
    let b = solve_ideal_vertex(q(1, 3), q(1, 3), k).map_err(|e| e.to_string())?;
    let acosh3 = ConstantSpec::lookup("arccosh(3)", 30).unwrap();
    let ln3 = ConstantSpec::lookup("ln(3)", 30).unwrap();
    let ref_a = rathyp_core::evidence::eval_constant(&acosh3).unwrap().to_f64();
    let ref_b = rathyp_core::evidence::eval_constant(&ln3).unwrap().to_f64();
    ensure((a - ref_a).abs() < 1e-12, format!("(pi/4, pi/4) gave {a}"))?;
    ensure((b - ref_b).abs() < 1e-12, format!("(pi/3, pi/3) gave {b}"))?;
    ensure(
        solve_ideal_vertex(q(1, 2), q(1, 2), k).is_err(),
        "(pi/2, pi/2) accepted",
    )?;
    Ok(format!("arccosh 3 = {a:.15}, ln 3 = {b:.15}, (pi/2, pi/2) rejected"))
}

fn number_theory() -> Outcome {
    let t = Instant::now();
    let d = scan_cos_degree_formula(100);
    ensure(
        d.violations.is_empty(),
        format!("{} degree violations", d.violations.len()),
    )?;
    let tot = scan_totient_bound(1_000_000);
    ensure(
        tot.violations.is_empty(),
        format!("{} totient violations", tot.violations.len()),
    )?;
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(60), "scans")?;
    Ok(format!(
        "deg cos(2k pi/n) = phi(n)/2 for {} pairs n <= 100; 2 phi(n)^2 >= n for n <= 10^6; {elapsed:.2?}",
        d.checked
    ))
}

fn sigma_one() -> Outcome {
    let t = Instant::now();
    let hits = scan_sigma1(60);
    let eq = [q(1, 3), q(1, 3), q(1, 3)];
    ensure(hits == vec![eq], format!("scan returned {hits:?}"))?;
    Ok(format!("only (60, 60, 60) for denominators <= 60, {:.2?}", t.elapsed()))
}

fn table_one() -> Outcome {
    let mults = default_multipliers();
    for d in DEGREE_TWO_CLASSES {
        let triple = degrees_triple(d).map_err(|e| e.to_string())?;
        let rep = find_deg2_representative(&triple, &mults)
            .map_err(|e| e.to_string())?
            .ok_or(format!("no representative for {d:?}"))?;
        for (i, side) in rep.sides.iter().enumerate() {
            let p = cyc_minpoly(side).map_err(|e| e.to_string())?;
            ensure(
                p.degree() == Some(rep.degrees[i]) && rep.degrees[i] <= 2 && p.eval_cyc(side).is_zero(),
                format!("{d:?} side {i}: degree {} minpoly {p}", rep.degrees[i]),
            )?;
        }
    }
    let none = find_deg2_representative(&degrees_triple([20, 60, 100]).unwrap(), &mults)
        .map_err(|e| e.to_string())?;
    ensure(none.is_none(), "(20, 60, 100) has a representative")?;

    let one = CycNum::one();
    let fifteen = [
        &sqrt3() - &one,
        &sqrt3() + &one,
        &CycNum::from_int(2) * &sqrt2(),
    ];
    let got = verify_euclidean_triangle(&fifteen, DEFAULT_ANGLE_SWEEP).map_err(|e| e.to_string())?;
    let want = degrees_triple([15, 75, 90]).unwrap().map(Some);
    ensure(got == want, format!("(sqrt3-1, sqrt3+1, 2sqrt2) angles {got:?}"))?;
    let golden = [one.clone(), one, golden_ratio()];
    let got = verify_euclidean_triangle(&golden, DEFAULT_ANGLE_SWEEP).map_err(|e| e.to_string())?;
    let want = degrees_triple([36, 36, 108]).unwrap().map(Some);
    ensure(got == want, format!("golden triangle angles {got:?}"))?;
    ensure(cyc_degree(&golden_ratio()) == 2, "golden ratio degree")?;
    Ok("14 classes represented with exact minimal polynomials; (20, 60, 100) none; (sqrt3-1, sqrt3+1, 2sqrt2) -> (15, 75, 90), (1, 1, phi) -> (36, 36, 108)".into())
}

fn evidence_scans() -> Outcome {
    let budget = DEFAULT_BUDGET;
    let r = scan_algebraicity(&ConstantSpec::lookup("sqrt(2)", 60).unwrap(), 2, 2, budget)
        .map_err(|e| e.to_string())?;
    ensure(r.argmin == [-2, 0, 1] && r.algebraic, format!("sqrt2 argmin {:?}", r.argmin))?;
    let r = scan_algebraicity(&ConstantSpec::lookup("(1+sqrt(5))/2", 60).unwrap(), 2, 2, budget)
        .map_err(|e| e.to_string())?;
    ensure(r.argmin == [-1, -1, 1] && r.algebraic, format!("phi argmin {:?}", r.argmin))?;
    let t = Instant::now();
    let r = scan_algebraicity(&ConstantSpec::lookup("tri-side-pi4", 60).unwrap(), 3, 20, budget)
        .map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(300), "scan")?;
    ensure(
        r.certified && r.minimum > 1e-6,
        format!("minimum {:e}, certified {}", r.minimum, r.certified),
    )?;
    Ok(format!(
        "x^2-2 and x^2-x-1 recovered; arccosh(1+sqrt2) at (3, 20): min {:.4e} (bound {:.1e}) over {} polynomials, {elapsed:.2?}",
        r.minimum, r.error_bound, r.candidates
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("triangle relation structure", triangle_structure),
        ("quadrilateral relation structure", quad_structure),
        ("intermediate identities", intermediate_identities),
        ("certificates", certificates),
        ("numeric oracle", numeric_oracle),
        ("curvature examples", curvature_examples),
        ("ideal vertex", ideal_vertex),
        ("number-theoretic scans", number_theory),
        ("sigma(1) scan", sigma_one),
        ("degree-two classes and reconstructions", table_one),
        ("algebraicity evidence", evidence_scans),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
