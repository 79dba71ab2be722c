//! The nine acceptance criteria, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always reach stdout.

mod common;

use std::time::{Duration, Instant};

use dpt_core::algebra::rational::{int, rat};
use dpt_core::checkers::{
    check_non_general, check_non_general_p2, check_unit_family, CheckOptions, CurveTriple, Holds,
    Status,
};
use dpt_core::heights::{
    bcz_experiment, gcd_height, probe_main_inequality, s_unit_points, PlaceSet, ProbeConfig,
    RationalProjPoint,
};
use dpt_core::local::{intersection_profile, BiCurve, PlaneCurve, ProjPoint};
use dpt_core::oracle::{beta_finite_n, AmbientKind, SectionPoint, Target};
use dpt_core::par::Exec;
use dpt_core::positivity::{beta_divisor, beta_point, seshadri_point};
use dpt_core::surface::catalogue;
use dpt_core::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn c1_exact_betas() -> Outcome {
    let p2 = catalogue("P2", &[]).unwrap();
    let p1 = catalogue("P1xP1", &[]).unwrap();
    let bl2 = catalogue("BlowupP2", &[1]).unwrap();
    let bl11 = catalogue("BlowupP1xP1", &[1]).unwrap();
    let h = p2.class_int(&[1]).unwrap();
    for d in 1..=3 {
        let t = Instant::now();
        let b = beta_divisor(&h, &p2.class_int(&[d]).unwrap()).map_err(|e| e.to_string())?.value;
        within(t.elapsed(), Duration::from_secs(1), "beta(H, dH)")?;
        ensure(b == rat(1, 3 * d), || format!("beta(H, {d}H) = {b}"))?;
    }
    let t = Instant::now();
    let b = beta_point(&h, &bl2).map_err(|e| e.to_string())?.value;
    within(t.elapsed(), Duration::from_secs(1), "beta(H, point)")?;
    ensure(b == rat(2, 3), || format!("beta(H, point) = {b}"))?;
    let a = p1.class_int(&[1, 1]).unwrap();
    let t = Instant::now();
    let b = beta_point(&a, &bl11).map_err(|e| e.to_string())?.value;
    let eps = seshadri_point(&a, &bl11).map_err(|e| e.to_string())?.value;
    within(t.elapsed(), Duration::from_secs(1), "P1xP1 point constants")?;
    ensure(b == int(1) && eps == int(1), || format!("beta = {b}, eps = {eps} on P1xP1"))?;
    Ok("1/3, 1/6, 1/9; 2/3; beta = eps = 1".into())
}

fn c2_exceptional_twist() -> Outcome {
    let bl = catalogue("BlowupP2", &[1]).unwrap();
    let v = bl.class_int(&[1, -1]).unwrap();
    let mut shown = Vec::new();
    for (n, d) in [(1, 10), (1, 4), (1, 2), (3, 4), (9, 10)] {
        let delta = rat(n, d);
        let a = bl.class(vec![int(1), -delta.clone()]).unwrap();
        let t = Instant::now();
        let got = beta_divisor(&a, &v).map_err(|e| e.to_string())?.value;
        within(t.elapsed(), Duration::from_secs(1), "twisted beta")?;
        let d2 = &delta * &delta;
        let d3 = &d2 * &delta;
        let expect = rat(1, 3) * (int(1) - d3) / (int(1) - d2);
        ensure(got == expect, || format!("delta = {delta}: {got} vs {expect}"))?;
        ensure(got > rat(1, 3), || format!("delta = {delta}: {got} not above 1/3"))?;
        shown.push(got.to_string());
    }
    Ok(shown.join(", "))
}

fn c3_oracle_convergence() -> Outcome {
    let start = Instant::now();
    let line = Target::Divisor(Polynomial::parse_in("x", &["x", "y", "z"]).unwrap());
    let pt = Target::Point(SectionPoint::P2(ProjPoint::from_ints(0, 0, 1).unwrap()));
    for n in 1..=30 {
        let b = beta_finite_n(AmbientKind::P2, &[1], &line, n).map_err(|e| e.to_string())?;
        ensure(b == rat(1, 3), || format!("line at N = {n}: {b}"))?;
        let b = beta_finite_n(AmbientKind::P2, &[1], &pt, n).map_err(|e| e.to_string())?;
        ensure(b == rat(2, 3), || format!("point at N = {n}: {b}"))?;
    }
    let q = Target::Point(SectionPoint::P1xP1(dpt_core::local::BiPoint::affine(int(0), int(0))));
    let b = beta_finite_n(AmbientKind::P1xP1, &[1, 1], &q, 20).map_err(|e| e.to_string())?;
    let gap = (&b - int(1)).abs();
    ensure(gap <= rat(2, 20), || format!("|beta_20 - 1| = {gap}"))?;
    within(start.elapsed(), Duration::from_secs(300), "oracle sweep")?;
    Ok(format!("N <= 30 exact; beta_20 on P1xP1 = {b}, gap {gap}"))
}

fn c4_local_multiplicities() -> Outcome {
    let start = Instant::now();
    let f = PlaneCurve::parse("y^2 - x*z").unwrap();
    let g = PlaneCurve::parse("y^2 - 2*x*z").unwrap();
    let p = intersection_profile(&f, &g, 0).map_err(|e| e.to_string())?;
    let mut pts: Vec<(String, u32)> = p
        .rational_points
        .iter()
        .map(|m| (m.point.to_string(), m.multiplicity))
        .collect();
    pts.sort();
    let expect = vec![("[0:0:1]".to_string(), 2), ("[1:0:0]".to_string(), 2)];
    ensure(pts == expect, || format!("points {pts:?}"))?;
    ensure(p.clusters.is_empty() && p.total == 4, || format!("total {}, clusters {:?}", p.total, p.clusters))?;
    common::unit_family_cross_check(20)?;
    within(start.elapsed(), Duration::from_secs(30), "local multiplicities")?;
    Ok("two points of multiplicity 2, total 4; 20 random families agree".into())
}

fn c5_sharpness() -> Outcome {
    let pencil = ["y^2 - x*z", "y^2 - 2*x*z", "y^2 + 3*x*z"].map(|s| PlaneCurve::parse(s).unwrap());
    let v = check_non_general_p2(&pencil, &CheckOptions::default()).map_err(|e| e.to_string())?;
    let c = v.condition("4/9 condition").map(|c| c.status);
    ensure(v.holds == Holds::No && c == Some(Status::Fail), || format!("conic pencil: {:?}, 4/9 {c:?}", v.holds))?;
    let bi = ["x1*y1 - x0*y0", "x1*y0 - x0*y1", "x1*y1 - x0*y0 + 2*x1*y0 - 2*x0*y1"]
        .map(|s| BiCurve::parse(s).unwrap());
    let w = check_non_general(&CurveTriple::P1xP1(bi), &[1, 1, 1], &CheckOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(w.holds != Holds::Yes, || "beta one pencil certified".into())?;
    let b1 = w.condition("beta1cond").map(|c| c.status);
    Ok(format!("conic pencil: No, 4/9 Fail; beta one pencil: {:?}, beta1cond {b1:?}", w.holds))
}

fn c6_family_conditions() -> Outcome {
    let p = |s: &str| Polynomial::parse(s).unwrap();
    let o = CheckOptions::default();
    let t = Instant::now();
    let good = check_unit_family(&p("t^2 + 1"), &p("t^2 + t + 3"), &p("t^2 - t"), &o).map_err(|e| e.to_string())?;
    let route = good.verdict.condition("9/5 route").map(|c| c.status);
    let ineq = good.verdict.condition("familyineq").map(|c| c.status);
    let margin = &good.familyineq_value.lo - rat(1, 4);
    ensure(route == Some(Status::Pass) && ineq == Some(Status::Pass), || format!("(2,2,2): {route:?} {ineq:?}"))?;
    ensure(margin > rat(1, 4), || format!("(2,2,2) margin {margin}"))?;
    ensure(good.verdict.holds == Holds::Yes, || "(2,2,2) not yes".into())?;
    let bad = check_unit_family(&p("t^5 + t + 1"), &p("t"), &p("t - 1"), &o).map_err(|e| e.to_string())?;
    let route = bad.verdict.condition("9/5 route").map(|c| c.status);
    let ineq = bad.verdict.condition("familyineq").map(|c| c.status);
    ensure(route == Some(Status::Fail) && ineq == Some(Status::Fail), || format!("(5,1,1): {route:?} {ineq:?}"))?;
    within(t.elapsed(), Duration::from_secs(1), "family checks")?;
    Ok(format!("(2,2,2) margin above {:.4}; (5,1,1) fails both", margin.to_f64().unwrap_or(f64::NAN)))
}

fn c7_heights() -> Outcome {
    let start = Instant::now();
    common::height_identities(100)?;
    let x = PlaneCurve::parse("x").unwrap();
    let y = PlaneCurve::parse("y").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let a: i64 = rng.gen_range(1..5000) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let b: i64 = rng.gen_range(1..5000);
        let m = a.abs().max(b);
        let c: i64 = rng.gen_range(-m..=m);
        let k: i64 = rng.gen_range(1..50);
        let p = RationalProjPoint::from_ints(k * a, k * b, k * c).unwrap();
        let g = common::coordinate_gcd(&p);
        let h = gcd_height(&x, &y, &p, &PlaceSet::All).map_err(|e| e.to_string())?;
        ensure(*h.arg() == Rational::from_integer(g.clone()), || format!("{p}: {} vs gcd {g}", h.arg()))?;
    }
    let r = bcz_experiment(2, 3, 200, Exec::Parallel).map_err(|e| e.to_string())?;
    let tail = r
        .rows
        .iter()
        .filter(|row| (100..=200).contains(&row.n))
        .map(|row| row.ratio)
        .fold(0.0f64, f64::max);
    ensure(tail < 0.3, || format!("bcz tail {tail}"))?;
    for row in &r.rows {
        let n = row.n as usize;
        let g = num_integer::Integer::gcd(
            &(num_traits::pow(BigInt::from(2), n) - BigInt::one()),
            &(num_traits::pow(BigInt::from(3), n) - BigInt::one()),
        );
        ensure(row.gcd == g.to_string(), || format!("gcd at n = {n}"))?;
    }
    within(start.elapsed(), Duration::from_secs(60), "height identities")?;
    Ok(format!("100 product formulas, 100 coordinate gcds; bcz tail max {tail:.4}"))
}

fn c8_probe() -> Outcome {
    let eps = 1e-6;
    let pts = s_unit_points(&[2, 3], 8, 500, 11).map_err(|e| e.to_string())?;
    let r = probe_main_inequality(&ProbeConfig::coordinate_lines(eps, None), &pts, Exec::Parallel)
        .map_err(|e| e.to_string())?;
    ensure(r.entries.len() >= 500, || format!("only {} points off the special locus", r.entries.len()))?;
    for e in &r.exceedances {
        println!("  exceedance: {} ratio {} lhs {:?}", e.point, e.ratio, e.lhs);
    }
    ensure(r.exceedances.is_empty(), || format!("{} exceedances", r.exceedances.len()))?;
    ensure(r.entries.iter().all(|e| e.exact_at_most_one), || "an exact comparison failed".into())?;
    let max = r.entries.iter().map(|e| e.ratio).fold(0.0f64, f64::max);
    Ok(format!("{} S-unit points, max ratio {max:.6}, no exceedances", r.entries.len()))
}

fn c9_invariants() -> Outcome {
    let start = Instant::now();
    let suites: [(&str, fn(u32) -> Result<(), String>); 5] = [
        ("cone duality", common::cone_duality),
        ("Zariski certificates", common::zariski_certificates),
        ("Fulton axioms", common::fulton_axioms),
        ("adapted bases", common::adapted_basis_certificates),
        ("scaling laws", common::scaling_laws),
    ];
    let mut parts = Vec::new();
    for (name, suite) in suites {
        let t = Instant::now();
        suite(200).map_err(|e| format!("{name}: {e}"))?;
        parts.push(format!("{name} {:.1}s", t.elapsed().as_secs_f64()));
    }
    within(start.elapsed(), Duration::from_secs(300), "invariant suites")?;
    Ok(format!("200 cases each: {}", parts.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("exact beta values", c1_exact_betas),
        ("exceptional twist closed form", c2_exceptional_twist),
        ("oracle convergence", c3_oracle_convergence),
        ("local multiplicities", c4_local_multiplicities),
        ("sharpness regressions", c5_sharpness),
        ("family degree conditions", c6_family_conditions),
        ("height identities", c7_heights),
        ("main inequality probe", c8_probe),
        ("invariant suites", c9_invariants),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
