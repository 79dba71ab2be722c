//! Seeded invariant suites shared by the acceptance target and the
//! property tests. Each suite returns `Err` with the shrunk counterexample.

#![allow(dead_code)]

use std::sync::Arc;

use dpt_core::algebra::rational::{int, rat};
use dpt_core::algebra::{Polynomial, Rational};
use dpt_core::checkers::{check_unit_family, CheckOptions};
use dpt_core::heights::{divisor_height, local_height, Place, RationalProjPoint};
use dpt_core::local::{fulton_at_origin, PlaneCurve, ProjPoint};
use dpt_core::oracle::{
    adapted_basis, filtration_by_divisor, filtration_by_point_power, h0_basis, Ambient,
    SectionPoint,
};
use dpt_core::positivity::beta_divisor;
use dpt_core::surface::{catalogue, volume, zariski_decompose, SurfaceModel};
use dpt_core::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub fn runner(cases: u32) -> TestRunner {
    let cfg = Config {
        cases,
        failure_persistence: None,
        max_global_rejects: 100_000,
        ..Config::default()
    };
    TestRunner::new_with_rng(cfg, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

pub const SURFACES: &[(&str, &[i64])] = &[
    ("P2", &[]),
    ("P1xP1", &[]),
    ("Hirzebruch", &[0]),
    ("Hirzebruch", &[1]),
    ("Hirzebruch", &[3]),
    ("BlowupP2", &[1]),
    ("BlowupP2", &[2]),
    ("BlowupP1xP1", &[1]),
    ("BlowupHirzebruch", &[1]),
    ("BlowupHirzebruch", &[2]),
    ("HypersurfaceP3", &[4]),
];

fn surface(i: usize) -> Arc<SurfaceModel> {
    let (n, p) = SURFACES[i];
    catalogue(n, p).unwrap()
}

/// Bilinear form straight from the integer matrix.
fn raw_pair(s: &SurfaceModel, a: &[Rational], b: &[Rational]) -> Rational {
    let m = s.intersection_matrix();
    let mut acc = Rational::zero();
    for i in 0..a.len() {
        for j in 0..b.len() {
            acc += &a[i] * &b[j] * int(m[i][j]);
        }
    }
    acc
}

fn combo(gens: &[Vec<Rational>], w: &[i64]) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); gens[0].len()];
    for (g, &k) in gens.iter().zip(w.iter().cycle()) {
        for (x, y) in c.iter_mut().zip(g) {
            *x += y * int(k);
        }
    }
    c
}

fn weights() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..5, 4)
}

/// Nef classes pair nonnegatively with effective ones, and the membership
/// tests agree with pairing against the dual generators.
pub fn cone_duality(cases: u32) -> Result<(), String> {
    let strat = (0..SURFACES.len(), weights(), weights(), prop::collection::vec(-4i64..5, 4));
    run(cases, strat, |(i, wn, we, raw)| {
        let s = surface(i);
        let n = combo(s.nef_generators(), &wn);
        let e = combo(s.effective_generators(), &we);
        prop_assert!(!raw_pair(&s, &n, &e).is_negative());
        prop_assert!(s.is_nef_coords(&n));
        prop_assert!(s.is_pseudoeffective_coords(&e));
        let d: Vec<Rational> = raw.iter().take(s.rank()).map(|&k| int(k)).collect();
        let nef = s.effective_generators().iter().all(|c| !raw_pair(&s, &d, c).is_negative());
        let psef = s.nef_generators().iter().all(|c| !raw_pair(&s, &d, c).is_negative());
        prop_assert_eq!(s.is_nef_coords(&d), nef);
        prop_assert_eq!(s.is_pseudoeffective_coords(&d), psef);
        Ok(())
    })
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    d
}

fn negative_definite(g: &[Vec<Rational>]) -> bool {
    (1..=g.len()).all(|k| {
        let minor: Vec<Vec<Rational>> = g[..k].iter().map(|r| r[..k].iter().map(|x| -x).collect()).collect();
        det(minor).is_positive()
    })
}

/// Zariski decompositions of random pseudo-effective classes, checked
/// against the definition using only the raw lattice data.
pub fn zariski_certificates(cases: u32) -> Result<(), String> {
    let with_curves: Vec<usize> = (0..SURFACES.len())
        .filter(|&i| !surface(i).negative_curves().is_empty())
        .collect();
    let strat = (prop::sample::select(with_curves), weights(), 1i64..4);
    run(cases, strat, |(i, w, den)| {
        let s = surface(i);
        let coords: Vec<Rational> = combo(s.effective_generators(), &w)
            .into_iter()
            .map(|x| x / int(den))
            .collect();
        prop_assume!(coords.iter().any(|x| !x.is_zero()));
        let d = s.class(coords.clone()).unwrap();
        let z = zariski_decompose(&d).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let p = z.positive_part.coords().to_vec();
        for c in s.effective_generators() {
            prop_assert!(!raw_pair(&s, &p, c).is_negative(), "P not nef");
        }
        let mut sum = p.clone();
        let support: Vec<Vec<Rational>> =
            z.negative_coeffs.iter().map(|n| s.negative_curve(n.curve).to_vec()).collect();
        for (n, c) in z.negative_coeffs.iter().zip(&support) {
            prop_assert!(n.coeff.is_positive());
            prop_assert!(raw_pair(&s, &p, c).is_zero(), "P not orthogonal to N");
            for (x, y) in sum.iter_mut().zip(c) {
                *x += &n.coeff * y;
            }
        }
        prop_assert_eq!(&sum, &coords);
        let gram: Vec<Vec<Rational>> = support
            .iter()
            .map(|a| support.iter().map(|b| raw_pair(&s, a, b)).collect())
            .collect();
        prop_assert!(negative_definite(&gram));
        let vol = raw_pair(&s, &p, &p);
        prop_assert_eq!(volume(&d), vol);
        Ok(())
    })
}

fn affine(coeffs: &[i64], exps: &[(u32, u32)]) -> Polynomial {
    let mut s = String::from("0");
    for (c, (a, b)) in coeffs.iter().zip(exps) {
        if *c != 0 {
            s.push_str(&format!(" + ({c})*u^{a}*v^{b}"));
        }
    }
    Polynomial::parse_in(&s, &["u", "v"]).unwrap()
}

const EXPS: [(u32, u32); 9] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];

fn local_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-3i64..4, 9).prop_map(|c| affine(&c, &EXPS))
}

fn coprime(f: &Polynomial, g: &Polynomial) -> bool {
    !f.is_zero() && !g.is_zero() && Polynomial::gcd(f, g).is_constant()
}

fn ord(p: &Polynomial) -> u32 {
    p.order().unwrap_or(0)
}

fn mult(f: &Polynomial, g: &Polynomial) -> Result<u32, TestCaseError> {
    fulton_at_origin(f, g).map_err(|e| TestCaseError::fail(e.to_string()))
}

/// Symmetry, invariance under `g ↦ g + h f`, additivity, the order bound
/// and normalization for Fulton's algorithm.
pub fn fulton_axioms(cases: u32) -> Result<(), String> {
    let strat = (local_poly(), local_poly(), local_poly(), prop::collection::vec(-2i64..3, 3));
    run(cases, strat, |(f, g, g2, hc)| {
        prop_assume!(coprime(&f, &g) && coprime(&f, &g2));
        let i = mult(&f, &g)?;
        prop_assert_eq!(mult(&g, &f)?, i);
        let h = &affine(&hc, &[(0, 0), (1, 0), (0, 1)]) * &f;
        prop_assert_eq!(mult(&f, &(&g + &h))?, i);
        prop_assert_eq!(mult(&f, &(&g * &g2))?, i + mult(&f, &g2)?);
        prop_assert!(i >= ord(&f) * ord(&g));
        let unit = &g + &Polynomial::parse_in("1", &["u", "v"]).unwrap();
        prop_assert_eq!(mult(&f, &unit)?, 0);
        Ok(())
    })?;
    let u = Polynomial::parse_in("u", &["u", "v"]).unwrap();
    let v = Polynomial::parse_in("v", &["u", "v"]).unwrap();
    if fulton_at_origin(&u, &v) != Ok(1) {
        return Err("I(u, v) != 1".into());
    }
    Ok(())
}

fn linear_form() -> impl Strategy<Value = Polynomial> {
    (-2i64..3, -2i64..3, -2i64..3)
        .prop_filter("nonzero", |(a, b, c)| (*a, *b, *c) != (0, 0, 0))
        .prop_map(|(a, b, c)| Polynomial::parse_in(&format!("({a})*x + ({b})*y + ({c})*z"), &["x", "y", "z"]).unwrap())
}

fn p2_point() -> impl Strategy<Value = ProjPoint> {
    (-2i64..3, -2i64..3, -2i64..3)
        .prop_filter("nonzero", |(a, b, c)| (*a, *b, *c) != (0, 0, 0))
        .prop_map(|(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap())
}

/// The adapted basis contains a basis of every level of both filtrations,
/// checked by recomputing level membership and ranks.
pub fn adapted_basis_certificates(cases: u32) -> Result<(), String> {
    use dpt_core::algebra::linalg::{in_span, rank};
    let strat = (1u32..4, linear_form(), p2_point());
    run(cases, strat, |(n, l, q)| {
        let space = h0_basis(Ambient::P2(n));
        let f1 = filtration_by_divisor(&space, &l).unwrap();
        let f2 = filtration_by_point_power(&space, &SectionPoint::P2(q)).unwrap();
        let b = adapted_basis(&f1, &f2).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(b.vectors.len(), space.dim());
        prop_assert_eq!(rank(&b.vectors), space.dim());
        for (f, side) in [(&f1, 0usize), (&f2, 1usize)] {
            for (m, &dim) in f.dims().iter().enumerate() {
                let level = f.level(m);
                let members: Vec<&Vec<Rational>> = b
                    .vectors
                    .iter()
                    .zip(&b.level_tags)
                    .filter(|(_, t)| if side == 0 { t.0 >= m } else { t.1 >= m })
                    .map(|(v, _)| v)
                    .collect();
                prop_assert_eq!(members.len(), dim);
                for v in members {
                    prop_assert!(in_span(v, &level));
                }
            }
        }
        Ok(())
    })
}

/// `β(nA, V) = nβ(A, V)`, `β(A, nV) = β(A, V)/n`, `vol(nD) = n² vol(D)`.
pub fn scaling_laws(cases: u32) -> Result<(), String> {
    let strat = (0..SURFACES.len(), weights(), weights(), 1i64..4, 1i64..4);
    run(cases, strat, |(i, wa, wv, num, den)| {
        let s = surface(i);
        let mut a = combo(s.nef_generators(), &wa);
        for x in a.iter_mut() {
            *x += int(1);
        }
        let v = combo(s.effective_generators(), &wv);
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let a = s.class(a).unwrap();
        let v = s.class(v).unwrap();
        prop_assume!(a.is_big());
        let base = match beta_divisor(&a, &v) {
            Ok(r) => r.value,
            Err(Error::NotBig) => return Err(TestCaseError::reject("not big")),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let c = rat(num, den);
        let scaled_a = beta_divisor(&a.scale(&c), &v).unwrap().value;
        prop_assert_eq!(scaled_a, &base * &c);
        let scaled_v = beta_divisor(&a, &v.scale(&c)).unwrap().value;
        prop_assert_eq!(scaled_v, &base / &c);
        prop_assert_eq!(volume(&a.scale(&c)), volume(&a) * &c * &c);
        Ok(())
    })
}

fn form(coeffs: &[i64], d: u32) -> Option<PlaneCurve> {
    let mut s = String::from("0");
    let mut k = 0;
    for i in 0..=d {
        for j in 0..=d - i {
            let c = coeffs[k % coeffs.len()];
            k += 1;
            if c != 0 {
                s.push_str(&format!(" + ({c})*x^{i}*y^{j}*z^{}", d - i - j));
            }
        }
    }
    let p = Polynomial::parse_in(&s, &["x", "y", "z"]).ok()?;
    if p.is_zero() {
        return None;
    }
    PlaneCurve::new(&p).ok()
}

fn primitive_point(c: &[i64]) -> Option<RationalProjPoint> {
    RationalProjPoint::from_ints(c[0], c[1], c[2]).ok()
}

fn big_pow(n: &BigInt, e: u32) -> BigInt {
    num_traits::pow(n.clone(), e as usize)
}

/// Product formula against `max|xᵢ|^d` computed here, and additivity of
/// every local height under products of forms.
pub fn height_identities(cases: u32) -> Result<(), String> {
    let pt = prop::collection::vec(-40i64..41, 3);
    let co = prop::collection::vec(-5i64..6, 10);
    let strat = (1u32..4, co.clone(), 1u32..3, co, pt);
    run(cases, strat, |(d, cd, e, ce, x)| {
        let (Some(dc), Some(ec), Some(p)) = (form(&cd, d), form(&ce, e), primitive_point(&x)) else {
            return Err(TestCaseError::reject("degenerate"));
        };
        let on = |c: &PlaneCurve| c.eval(&ProjPoint::new([0, 1, 2].map(|i| Rational::from_integer(p.coords()[i].clone()))).unwrap()).is_zero();
        prop_assume!(!on(&dc) && !on(&ec));
        let r = divisor_height(&dc, &p).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let m = p.coords().iter().map(|c| c.abs()).max().unwrap();
        let expected = Rational::from_integer(big_pow(&m, dc.degree()));
        prop_assert_eq!(r.global.arg(), &expected);
        let mut prod = r.locals.iter().fold(Rational::one(), |acc, l| acc * l.height.arg());
        if let Some(u) = &r.unfactored {
            prod *= u.arg();
        }
        prop_assert_eq!(&prod, &expected);
        prop_assert!(r.identity_exact);
        let de = dc.mul(&ec);
        let mut places: Vec<Place> = vec![Place::Infinite];
        let re = divisor_height(&de, &p).unwrap();
        places.extend(re.locals.iter().map(|l| l.place.clone()));
        for v in &places {
            let lhs = local_height(&de, &p, v).unwrap();
            let rhs = local_height(&dc, &p, v).unwrap().add(&local_height(&ec, &p, v).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
        Ok(())
    })
}

fn t_poly(c: &[i64]) -> Polynomial {
    let mut s = String::from("0");
    for (i, k) in c.iter().enumerate() {
        if *k != 0 {
            s.push_str(&format!(" + ({k})*t^{i}"));
        }
    }
    Polynomial::parse_in(&s, &["t"]).unwrap()
}

fn t_degree(p: &Polynomial) -> u32 {
    p.total_degree().unwrap_or(0)
}

/// `(Dᵢ.Dⱼ)_{P₀} = d₁ + 1 − d_k` on random families with degrees at most 4,
/// where `k` is the index left out and `d₁` the largest degree.
pub fn unit_family_cross_check(cases: u32) -> Result<(), String> {
    let poly = (1usize..5).prop_flat_map(|d| {
        (prop::collection::vec(-4i64..5, d), 1i64..4).prop_map(move |(mut c, lead)| {
            c.push(lead);
            c
        })
    });
    let strat = (poly.clone(), poly.clone(), poly);
    run(cases, strat, |(a, b, c)| {
        let f = [t_poly(&a), t_poly(&b), t_poly(&c)];
        let g = Polynomial::gcd(&Polynomial::gcd(&f[0], &f[1]), &f[2]);
        prop_assume!(g.is_constant());
        let r = check_unit_family(&f[0], &f[1], &f[2], &CheckOptions::default())
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        let mut d: Vec<u32> = f.iter().map(t_degree).collect();
        d.sort_unstable_by(|x, y| y.cmp(x));
        prop_assert_eq!(r.cross_checks.len(), 3);
        for cc in &r.cross_checks {
            let (i, j) = cc.pair;
            let k = 6 - i - j;
            let expect = d[0] + 1 - d[k - 1];
            prop_assert_eq!(cc.closed_form, expect);
            prop_assert_eq!(cc.local_module, expect);
            prop_assert_eq!(cc.restriction_order, expect);
            prop_assert_eq!(cc.bezout_total, d[0] + 1);
        }
        Ok(())
    })
}

/// `gcd(a, b)` of a primitive triple, for the coordinate gcd identity.
pub fn coordinate_gcd(p: &RationalProjPoint) -> BigInt {
    p.coords()[0].gcd(&p.coords()[1])
}
