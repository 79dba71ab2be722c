//! Certificate-backed verdicts for theorem hypotheses.
//!
//! A verdict is `yes` only when every required condition passed with a
//! strict certificate, `borderline` when an interval comparison reached the
//! refinement floor, and `no` otherwise (including conditions that could
//! not be decided).

mod family;
mod nongeneral;

use std::cmp::Ordering;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::interval::default_floor;
use crate::algebra::univariate::Irreducibility;
use crate::algebra::{Polynomial, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::local::{
    intersection_profile, local_mult, triple_locus, IntersectionProfile, PlaneCurve,
};

pub use family::{
    check_unit_family, search_unit_family_solutions, FamilyCheck, PairCrossCheck, SearchReport,
    SolutionBucket, UnitEquationFamily, UnitSolution,
};
pub use nongeneral::{check_non_general, CurveTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    #[serde(rename = "nonGeneralP2")]
    NonGeneralP2,
    #[serde(rename = "generalPos")]
    GeneralPos,
    #[serde(rename = "generalPosCor")]
    GeneralPosCor,
    #[serde(rename = "nonGeneral")]
    NonGeneral,
    #[serde(rename = "thfamily")]
    ThFamily,
    #[serde(rename = "expEquation")]
    ExpEquation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Holds {
    Yes,
    No,
    Borderline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Borderline,
    /// Not decided by the available certificates.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub status: Status,
    pub certificate: String,
    /// Sufficient routes are reported but not required.
    pub required: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub holds: Holds,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    fn new(theorem: Theorem) -> Self {
        TheoremVerdict {
            theorem,
            holds: Holds::No,
            conditions: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn require(&mut self, name: &str, status: Status, certificate: impl Into<String>) {
        self.conditions.push(Condition {
            name: name.into(),
            status,
            certificate: certificate.into(),
            required: true,
        });
    }

    fn route(&mut self, name: &str, status: Status, certificate: impl Into<String>) {
        self.conditions.push(Condition {
            name: name.into(),
            status,
            certificate: certificate.into(),
            required: false,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// Sets `holds` from the required conditions.
    fn assemble(mut self) -> Self {
        let req: Vec<Status> = self
            .conditions
            .iter()
            .filter(|c| c.required)
            .map(|c| c.status)
            .collect();
        self.holds = if req.iter().all(|s| *s == Status::Pass) {
            Holds::Yes
        } else if req
            .iter()
            .all(|s| matches!(s, Status::Pass | Status::Borderline))
        {
            Holds::Borderline
        } else {
            Holds::No
        };
        self
    }
}

/// Options shared by the checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    /// Seed for the coordinate changes used by intersection profiles.
    pub seed: u64,
    /// Interval refinement stops below this width.
    pub floor: Rational,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            floor: default_floor(),
        }
    }
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn sign_status(s: Option<Ordering>) -> Status {
    match s {
        Some(Ordering::Greater) => Status::Pass,
        Some(_) => Status::Fail,
        None => Status::Borderline,
    }
}

pub(crate) const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    a.monic() == b.monic()
}

/// Squarefreeness plus a ℚ-irreducibility certificate from a line
/// restriction that stays irreducible.
pub fn curve_irreducibility(c: &PlaneCurve) -> (Irreducibility, String) {
    let f = c.form();
    let d = c.degree();
    if d == 1 {
        return (Irreducibility::Irreducible, "line".into());
    }
    let partials: Vec<Polynomial> = (0..3).map(|i| f.derivative(i)).collect();
    let g = partials
        .iter()
        .fold(Polynomial::zero_in(f.vars()), |a, p| Polynomial::gcd(&a, p));
    if !g.is_constant() {
        return (
            Irreducibility::Reducible,
            format!("repeated component `{}`", g.monic()),
        );
    }
    let t = Polynomial::var_in(&["t".to_string()], "t").unwrap();
    let cst = |k: i64| Polynomial::constant_in(t.vars(), Rational::from_integer(k.into()));
    let bases: [[i64; 3]; 6] = [
        [0, 0, 1],
        [1, 2, 1],
        [3, -1, 1],
        [-2, 5, 1],
        [7, 3, 2],
        [1, -4, 3],
    ];
    let dirs: [[i64; 3]; 5] = [[1, 0, 0], [1, 1, 0], [2, -3, 1], [0, 1, 0], [5, 1, -2]];
    for a in &bases {
        for b in &dirs {
            let subs: Vec<Polynomial> = (0..3).map(|i| &cst(a[i]) + &(&t * &cst(b[i]))).collect();
            let (u, _) = UniPoly::from_polynomial(&f.compose(&subs)).expect("one variable");
            if u.degree() != Some(d as usize) {
                continue;
            }
            if u.irreducibility() == Irreducibility::Irreducible {
                return (
                    Irreducibility::Irreducible,
                    format!("restriction to {a:?} + t{b:?} is irreducible of degree {d}"),
                );
            }
        }
    }
    (
        Irreducibility::Unknown,
        "no irreducible line restriction found".into(),
    )
}

fn check_distinct(curves: &[PlaneCurve; 3]) -> Result<()> {
    for (i, j) in PAIRS {
        if proportional(curves[i].form(), curves[j].form()) {
            return Err(Error::invalid(format!("curves {} and {} coincide", i + 1, j + 1)));
        }
    }
    Ok(())
}

fn proper_pairs(curves: &[PlaneCurve; 3]) -> (bool, String) {
    let mut bad = Vec::new();
    for (i, j) in PAIRS {
        let g = Polynomial::gcd(curves[i].form(), curves[j].form());
        if !g.is_constant() {
            bad.push(format!("D{}, D{} share `{}`", i + 1, j + 1, g.monic()));
        }
    }
    if bad.is_empty() {
        (true, "pairwise gcds are constant".into())
    } else {
        (false, bad.join("; "))
    }
}

/// Hypotheses of the three-curve degeneracy theorem on ℙ²: pairwise
/// proper intersection, irreducibility, nonempty triple locus, and
/// `(Dᵢ.Dⱼ)_Q < (4/9) dᵢ dⱼ` at every triple point.
pub fn check_non_general_p2(curves: &[PlaneCurve; 3], opts: &CheckOptions) -> Result<TheoremVerdict> {
    check_distinct(curves)?;
    let mut v = TheoremVerdict::new(Theorem::NonGeneralP2);
    let (proper, cert) = proper_pairs(curves);
    v.require("proper intersection", status_of(proper), cert);
    let mut irr = Status::Pass;
    let mut certs = Vec::new();
    for (i, c) in curves.iter().enumerate() {
        let (r, why) = curve_irreducibility(c);
        certs.push(format!("D{}: {why}", i + 1));
        irr = match (irr, r) {
            (Status::Fail, _) | (_, Irreducibility::Reducible) => Status::Fail,
            (_, Irreducibility::Unknown) => Status::Unverified,
            (s, Irreducibility::Irreducible) => s,
        };
    }
    v.require("irreducible", irr, certs.join("; "));
    if irr != Status::Fail {
        v.note("irreducibility is certified over Q only; absolute irreducibility is not checked");
    }
    if !proper {
        v.require("triple locus nonempty", Status::Unverified, "skipped: improper pair");
        v.require("4/9 condition", Status::Unverified, "skipped: improper pair");
        return Ok(v.assemble());
    }
    let locus = triple_locus(&curves[0], &curves[1], &curves[2])?;
    let nonempty = !locus.points.is_empty() || locus.nonrational_flag;
    let pts: Vec<String> = locus.points.iter().map(|p| p.to_string()).collect();
    v.require(
        "triple locus nonempty",
        status_of(nonempty),
        format!(
            "rational triple points [{}]; irrational points {}",
            pts.join(", "),
            if locus.nonrational_flag { "not excluded" } else { "excluded" }
        ),
    );
    if !nonempty {
        v.require("4/9 condition", Status::Unverified, "vacuous: empty triple locus");
        return Ok(v.assemble());
    }
    let deg: Vec<u32> = curves.iter().map(|c| c.degree()).collect();
    let mut status = Status::Pass;
    let mut certs = Vec::new();
    for q in &locus.points {
        for (i, j) in PAIRS {
            let m = local_mult(&curves[i], &curves[j], q)?;
            let ok = 9 * m < 4 * deg[i] * deg[j];
            certs.push(format!(
                "(D{}.D{})_{q} = {m}; 9*{m} {} 4*{}",
                i + 1,
                j + 1,
                if ok { "<" } else { ">=" },
                deg[i] * deg[j]
            ));
            if !ok {
                status = Status::Fail;
            }
        }
    }
    if locus.nonrational_flag {
        let profiles = pair_profiles(curves, opts.seed)?;
        for ((i, j), p) in PAIRS.iter().zip(&profiles) {
            for c in &p.clusters {
                let ok = 9 * c.multiplicity < 4 * deg[*i] * deg[*j];
                certs.push(format!(
                    "D{}∩D{} cluster of {} points, multiplicity {} each",
                    i + 1,
                    j + 1,
                    c.degree,
                    c.multiplicity
                ));
                if !ok && status == Status::Pass {
                    status = Status::Unverified;
                }
            }
        }
        v.note("irrational common points checked through cluster multiplicities, assumed uniform over each cluster");
    }
    v.require("4/9 condition", status, certs.join("; "));
    Ok(v.assemble())
}

fn pair_profiles(curves: &[PlaneCurve; 3], seed: u64) -> Result<Vec<IntersectionProfile>> {
    PAIRS
        .iter()
        .map(|&(i, j)| intersection_profile(&curves[i], &curves[j], seed))
        .collect()
}

fn parallel_degree(curves: &[PlaneCurve; 3], a: &[u32; 3]) -> Result<u32> {
    if a.contains(&0) {
        return Err(Error::invalid("multipliers must be positive"));
    }
    let e: Vec<u32> = curves.iter().zip(a).map(|(c, k)| c.degree() * k).collect();
    if e[0] != e[1] || e[1] != e[2] {
        return Err(Error::Hypothesis(format!(
            "a_i deg D_i = {e:?} are not all equal; the curves are not numerically parallel"
        )));
    }
    Ok(e[0])
}

/// The gcd-height theorem for the pair `(i0, j0)`: the corollary route asks
/// for two or more points in `D_{i0} ∩ D_{j0}`, the theorem route for
/// `μ_Q < D²` at each point, which makes the multiplicity bound exceed 2/3.
pub fn check_general_pos(
    curves: &[PlaneCurve; 3],
    multipliers: &[u32; 3],
    pair: (usize, usize),
    opts: &CheckOptions,
) -> Result<TheoremVerdict> {
    let (i0, j0) = pair;
    if i0 == j0 || i0 > 2 || j0 > 2 {
        return Err(Error::invalid("the pair must be two distinct indices in 1..3"));
    }
    check_distinct(curves)?;
    let e = parallel_degree(curves, multipliers)?;
    let d2 = e * e;
    let mut v = TheoremVerdict::new(Theorem::GeneralPos);
    let (proper, cert) = proper_pairs(curves);
    v.require("proper intersection", status_of(proper), cert);
    v.require("numerically parallel", Status::Pass, format!("a_i d_i = {e}, D^2 = {d2}"));
    if !proper {
        v.require("beta > 2/3 at every point", Status::Unverified, "skipped: improper pair");
        return Ok(v.assemble());
    }
    let prof = intersection_profile(&curves[i0], &curves[j0], opts.seed)?;
    let npoints: u32 =
        prof.rational_points.len() as u32 + prof.clusters.iter().map(|c| c.degree).sum::<u32>();
    let cor = npoints >= 2;
    v.route(
        "more than one point",
        status_of(cor),
        format!("D{}∩D{} has {npoints} points over the algebraic closure", i0 + 1, j0 + 1),
    );
    let ab = multipliers[i0] * multipliers[j0];
    let mut mus: Vec<(String, u32)> = prof
        .rational_points
        .iter()
        .map(|p| (p.point.to_string(), ab * p.multiplicity))
        .collect();
    mus.extend(
        prof.clusters
            .iter()
            .map(|c| (format!("cluster of degree {}", c.degree), ab * c.multiplicity)),
    );
    let thm = mus.iter().all(|(_, mu)| *mu < d2);
    let certs: Vec<String> = mus
        .iter()
        .map(|(q, mu)| format!("mu at {q} = {mu} {} D^2 = {d2}", if *mu < d2 { "<" } else { ">=" }))
        .collect();
    v.route("multiplicity bound", status_of(thm), certs.join("; "));
    if cor != thm {
        return Err(Error::Internal("corollary and theorem routes disagree".into()));
    }
    if cor {
        v.theorem = Theorem::GeneralPosCor;
    }
    v.require(
        "beta > 2/3 at every point",
        status_of(cor || thm),
        if cor { "via the point count" } else { "no route applies" },
    );
    if !prof.clusters.is_empty() {
        v.note("multiplicities within a cluster are assumed uniform");
    }
    Ok(v.assemble())
}

/// Whether a nonzero binary form is a power of a linear form: its
/// squarefree part must be linear. `other` indexes the variable set to 1.
fn is_linear_power(b: &Polynomial, other: usize) -> (bool, String) {
    let d = b.total_degree().unwrap_or(0);
    let dehom = b.eval_var(other, &Rational::from_integer(1.into()));
    let (u, _) = UniPoly::from_polynomial(&dehom).expect("binary form");
    let at_infinity = d > u.degree().unwrap_or(0) as u32;
    let sq = u.squarefree_part().degree().unwrap_or(0) as u32 + at_infinity as u32;
    (sq == 1, format!("squarefree part of degree {sq}"))
}

/// Conditions 1'–3' for the exponential equation `f(aᵐ, y) = bⁿ` with
/// `f(x, y) = F(x, y, 1)`.
pub fn check_exp_equation(f: &Polynomial, a: i64, b: i64) -> Result<TheoremVerdict> {
    let c = PlaneCurve::new(f)?;
    if c.degree() < 2 {
        return Err(Error::invalid("F must have degree at least 2"));
    }
    if a <= 1 || b <= 1 {
        return Err(Error::invalid("a and b must exceed 1"));
    }
    let form = c.form();
    let q = |v: [i64; 3]| v.map(|k| Rational::from_integer(k.into()));
    let mut v = TheoremVerdict::new(Theorem::ExpEquation);
    let f010 = form.eval(&q([0, 1, 0]));
    v.require("F(0,1,0) != 0", status_of(!f010.is_zero()), format!("F(0,1,0) = {f010}"));
    for (name, zero_var, other) in [("F(0,y,z)", 0usize, 2usize), ("F(x,y,0)", 2, 1)] {
        let r = form.eval_var(zero_var, &Rational::zero());
        let label = format!("{name} not a power of a linear form");
        if r.is_zero() {
            v.require(&label, Status::Fail, format!("{name} vanishes identically"));
            continue;
        }
        let (pow, why) = is_linear_power(&r, other);
        v.require(&label, status_of(!pow), format!("{name} = {r}: {why}"));
    }
    let g = num_integer::Integer::gcd(&a, &b);
    v.require("a, b not coprime", status_of(g > 1), format!("gcd({a}, {b}) = {g}"));
    Ok(v.assemble())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s).unwrap()
    }

    fn triple(a: &str, b: &str, d: &str) -> [PlaneCurve; 3] {
        [c(a), c(b), c(d)]
    }

    #[test]
    fn irreducibility_certificates() {
        assert_eq!(curve_irreducibility(&c("x^2 + y^2 - z^2")).0, Irreducibility::Irreducible);
        assert_eq!(curve_irreducibility(&c("y^2*z - x^3 - x*z^2")).0, Irreducibility::Irreducible);
        assert_eq!(curve_irreducibility(&c("(x - y)^2*z")).0, Irreducibility::Reducible);
        assert_ne!(curve_irreducibility(&c("x*y - z^2 + x*z")).0, Irreducibility::Reducible);
        // A product of distinct lines is never certified irreducible.
        assert_ne!(curve_irreducibility(&c("x*y")).0, Irreducibility::Irreducible);
    }

    #[test]
    fn tangent_pencil_fails_four_ninths() {
        let v = check_non_general_p2(
            &triple("y^2 - x*z", "y^2 - 2*x*z", "y^2 + 3*x*z"),
            &CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(v.holds, Holds::No);
        assert_eq!(v.condition("4/9 condition").unwrap().status, Status::Fail);
        assert_eq!(v.condition("triple locus nonempty").unwrap().status, Status::Pass);
    }

    #[test]
    fn transverse_conics_pass() {
        // Conics through [0:0:1] and [1:1:1].
        let v = check_non_general_p2(
            &triple(
                "x^2 + y^2 - 2*x*z",
                "x^2 - y^2 + x*y - y*z",
                "2*x^2 + y^2 - x*y - x*z - y*z",
            ),
            &CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(v.condition("4/9 condition").unwrap().status, Status::Pass, "{v:?}");
        assert_eq!(v.holds, Holds::Yes, "{v:?}");
    }

    #[test]
    fn coordinate_lines_have_no_triple_point() {
        let v = check_non_general_p2(&triple("x", "y", "z"), &CheckOptions::default()).unwrap();
        assert_eq!(v.holds, Holds::No);
        assert_eq!(v.condition("triple locus nonempty").unwrap().status, Status::Fail);
        assert!(check_non_general_p2(&triple("x", "2*x", "z"), &CheckOptions::default()).is_err());
    }

    #[test]
    fn general_position_routes() {
        let o = CheckOptions::default();
        let v = check_general_pos(&triple("x", "y", "z"), &[1, 1, 1], (0, 1), &o).unwrap();
        assert_eq!(v.holds, Holds::No);
        let v = check_general_pos(
            &triple("y^2 - x*z", "y^2 - 2*x*z", "y^2 + 3*x*z"),
            &[1, 1, 1],
            (0, 1),
            &o,
        )
        .unwrap();
        assert_eq!(v.holds, Holds::Yes);
        let v = check_general_pos(
            &triple("x^2 + y^2 - z^2", "x^2 - 4*y^2 + z^2", "x"),
            &[1, 1, 2],
            (0, 1),
            &o,
        )
        .unwrap();
        assert_eq!(v.holds, Holds::Yes);
        assert!(matches!(
            check_general_pos(&triple("x^2 + y^2 - z^2", "y", "z"), &[1, 1, 1], (0, 1), &o),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn exponential_equation_conditions() {
        let f = |s: &str| Polynomial::parse(s).unwrap();
        let v = check_exp_equation(&f("y^2 + y*z - 2*z^2 + x*z - 3*x^2 + x*y"), 6, 10).unwrap();
        assert_eq!(v.holds, Holds::Yes, "{v:?}");
        let v = check_exp_equation(&f("(y - z)^3 + x^3 + x*y*z"), 6, 10).unwrap();
        assert_eq!(
            v.condition("F(0,y,z) not a power of a linear form").unwrap().status,
            Status::Fail
        );
        let v = check_exp_equation(&f("y^2 + x*z - 3*x^2 + x*y"), 6, 35).unwrap();
        assert_eq!(v.condition("a, b not coprime").unwrap().status, Status::Fail);
        let v = check_exp_equation(&f("x^2 + z^2 + x*z"), 6, 10).unwrap();
        assert_eq!(v.condition("F(0,1,0) != 0").unwrap().status, Status::Fail);
        assert!(check_exp_equation(&f("y^2 + x"), 6, 10).is_err());
    }
}
