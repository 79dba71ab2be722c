//! The beta-constant criterion for three numerically parallel curves with a
//! common point, on ℙ² or ℙ¹×ℙ¹.

use std::cmp::Ordering;

use num_traits::Zero;

use super::{
    proportional, sign_status, status_of, CheckOptions, Status, Theorem, TheoremVerdict, PAIRS,
};
use crate::algebra::interval::refine_sign;
use crate::algebra::rational::int;
use crate::algebra::{Polynomial, Rational, RationalInterval};
use crate::error::{Error, Result};
use crate::local::{
    bi_local_mult, bi_triple_locus, intersection_profile, local_mult, triple_locus, BiCurve,
    PlaneCurve,
};
use crate::positivity::{beta_divisor, beta_point, bound_betamultsimple};
use crate::surface::{blow_up_point, catalogue, DivisorClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveTriple {
    P2([PlaneCurve; 3]),
    P1xP1([BiCurve; 3]),
}

impl CurveTriple {
    fn forms(&self) -> [&Polynomial; 3] {
        match self {
            CurveTriple::P2(c) => [c[0].form(), c[1].form(), c[2].form()],
            CurveTriple::P1xP1(c) => [c[0].form(), c[1].form(), c[2].form()],
        }
    }

    /// `(Dᵢ.Dⱼ)` for each entry of `PAIRS`.
    fn global_products(&self) -> [u32; 3] {
        PAIRS.map(|(i, j)| match self {
            CurveTriple::P2(c) => c[i].degree() * c[j].degree(),
            CurveTriple::P1xP1(c) => {
                let (pi, qi) = c[i].bidegree();
                let (pj, qj) = c[j].bidegree();
                pi * qj + qi * pj
            }
        })
    }

    /// The common class `D = aᵢ Dᵢ`.
    fn parallel_class(&self, a: &[u32; 3]) -> Result<DivisorClass> {
        match self {
            CurveTriple::P2(c) => {
                let e: Vec<u32> = c.iter().zip(a).map(|(c, k)| c.degree() * k).collect();
                if e[0] != e[1] || e[1] != e[2] {
                    return Err(Error::Hypothesis(format!("a_i deg D_i = {e:?} differ")));
                }
                catalogue("P2", &[])?.class_int(&[e[0] as i64])
            }
            CurveTriple::P1xP1(c) => {
                let e: Vec<(u32, u32)> = c
                    .iter()
                    .zip(a)
                    .map(|(c, k)| (c.bidegree().0 * k, c.bidegree().1 * k))
                    .collect();
                if e[0] != e[1] || e[1] != e[2] {
                    return Err(Error::Hypothesis(format!("a_i bideg D_i = {e:?} differ")));
                }
                if e[0].0 == 0 || e[0].1 == 0 {
                    return Err(Error::Hypothesis("the common class is not ample".into()));
                }
                catalogue("P1xP1", &[])?.class_int(&[e[0].0 as i64, e[0].1 as i64])
            }
        }
    }
}

/// A triple point (or a stand-in for the irrational ones) with the local
/// multiplicity of each pair.
struct Site {
    label: String,
    mults: [u32; 3],
}

/// Certified lower bound for `β(D, (aᵢDᵢ ∩ aⱼDⱼ)_Q)`: the larger of the
/// exact bounds and `(2/3) √(D²/μ)`.
#[derive(Clone)]
struct PairBound {
    exact: Rational,
    mu: i64,
    vol: Rational,
}

impl PairBound {
    fn enclose(&self, prec: &Rational) -> RationalInterval {
        let c = bound_betamultsimple(&self.vol, self.mu, 2, prec).expect("validated inputs");
        let hi = &c.bound_lo + c.width.clone().unwrap_or_else(Rational::zero);
        RationalInterval::new(
            c.bound_lo.max(self.exact.clone()),
            hi.max(self.exact.clone()),
        )
    }
}

fn imin(a: &RationalInterval, b: &RationalInterval) -> RationalInterval {
    RationalInterval::new(a.lo.clone().min(b.lo.clone()), a.hi.clone().min(b.hi.clone()))
}

fn sites(t: &CurveTriple, opts: &CheckOptions, v: &mut TheoremVerdict) -> Result<Option<Vec<Site>>> {
    let mut out = Vec::new();
    match t {
        CurveTriple::P2(c) => {
            let locus = triple_locus(&c[0], &c[1], &c[2])?;
            for q in &locus.points {
                let mut mults = [0; 3];
                for (k, (i, j)) in PAIRS.iter().enumerate() {
                    mults[k] = local_mult(&c[*i], &c[*j], q)?;
                }
                out.push(Site { label: q.to_string(), mults });
            }
            if locus.nonrational_flag {
                let mut mults = [0; 3];
                for (k, (i, j)) in PAIRS.iter().enumerate() {
                    let p = intersection_profile(&c[*i], &c[*j], opts.seed)?;
                    mults[k] = p.clusters.iter().map(|c| c.multiplicity).max().unwrap_or(0);
                }
                if mults.iter().all(|&m| m > 0) {
                    v.note("irrational triple points bounded by the worst cluster multiplicity of each pair");
                    out.push(Site {
                        label: "irrational points".into(),
                        mults,
                    });
                }
            }
        }
        CurveTriple::P1xP1(c) => {
            let locus = bi_triple_locus(&c[0], &c[1], &c[2])?;
            for q in &locus.points {
                let mut mults = [0; 3];
                for (k, (i, j)) in PAIRS.iter().enumerate() {
                    mults[k] = bi_local_mult(&c[*i], &c[*j], q)?;
                }
                out.push(Site { label: q.to_string(), mults });
            }
            if locus.nonrational_flag {
                v.note("irrational common points on P1xP1 are not analysed");
                return Ok(None);
            }
        }
    }
    Ok(Some(out))
}

/// Certified form of the beta criterion. For each triple point and pair,
/// a lower bound `L` for the local beta constant is the max of the
/// lcm bound `2β(D, D)`, the multiplicity bound, and the exact value at a
/// reduced point. The criterion `(L_ij − 1) + (L_ik − 1)(3L₀ − 2) > 0` is
/// monotone in the bounds once `L_ik ≥ 1` and `L₀ ≥ 2/3`, so it certifies
/// the same inequality for the true constants.
pub fn check_non_general(
    triple: &CurveTriple,
    multipliers: &[u32; 3],
    opts: &CheckOptions,
) -> Result<TheoremVerdict> {
    if multipliers.contains(&0) {
        return Err(Error::invalid("multipliers must be positive"));
    }
    let forms = triple.forms();
    for (i, j) in PAIRS {
        if proportional(forms[i], forms[j]) {
            return Err(Error::invalid(format!("curves {} and {} coincide", i + 1, j + 1)));
        }
    }
    let d = triple.parallel_class(multipliers)?;
    let vol = d.self_intersection();
    let mut v = TheoremVerdict::new(Theorem::NonGeneral);
    let bad: Vec<String> = PAIRS
        .iter()
        .filter(|(i, j)| !Polynomial::gcd(forms[*i], forms[*j]).is_constant())
        .map(|(i, j)| format!("D{}, D{}", i + 1, j + 1))
        .collect();
    v.require(
        "proper intersection",
        status_of(bad.is_empty()),
        if bad.is_empty() { "pairwise gcds are constant".to_string() } else { format!("common components: {}", bad.join("; ")) },
    );
    v.require("numerically parallel", Status::Pass, format!("D = {d}, D^2 = {vol}"));
    if !bad.is_empty() {
        v.require("beta1cond", Status::Unverified, "skipped: improper pair");
        return Ok(v.assemble());
    }
    let Some(sites) = sites(triple, opts, &mut v)? else {
        v.require("triple locus nonempty", Status::Pass, "irrational points not excluded");
        v.require("beta1cond", Status::Unverified, "irrational triple points not analysed");
        return Ok(v.assemble());
    };
    v.require(
        "triple locus nonempty",
        status_of(!sites.is_empty()),
        format!("{} site(s)", sites.len()),
    );
    if sites.is_empty() {
        v.note("empty triple locus: the hypothesis fails; the two-curve gcd criterion may still apply");
        return Ok(v.assemble());
    }

    let lcm = int(2) * beta_divisor(&d, &d)?.value;
    let point = beta_point(&d, &blow_up_point(d.surface())?)?.value;
    let global = triple.global_products();
    let mut bounds: Vec<[PairBound; 3]> = Vec::new();
    let mut ineq = Status::Pass;
    let mut ineq_certs = Vec::new();
    for s in &sites {
        let b = std::array::from_fn(|k| {
            let (i, j) = PAIRS[k];
            let mu = (multipliers[i] * multipliers[j] * s.mults[k]) as i64;
            let exact = if mu == 1 { lcm.clone().max(point.clone()) } else { lcm.clone() };
            let ok = 9 * s.mults[k] < 4 * global[k];
            if !ok {
                ineq = Status::Fail;
            }
            ineq_certs.push(format!(
                "(D{}.D{})_{} = {} vs 4/9 * {}",
                i + 1,
                j + 1,
                s.label,
                s.mults[k],
                global[k]
            ));
            PairBound { exact, mu, vol: vol.clone() }
        });
        bounds.push(b);
    }
    v.route("49ineq2", ineq, ineq_certs.join("; "));

    let floor = &opts.floor;
    let beta0 = |prec: &Rational| {
        bounds
            .iter()
            .flat_map(|b| b.iter().map(|x| x.enclose(prec)))
            .reduce(|a, b| imin(&a, &b))
            .unwrap()
    };
    let mut above_one = Status::Pass;
    let mut b2_certs = Vec::new();
    for (s, b) in sites.iter().zip(&bounds) {
        for (k, pb) in b.iter().enumerate() {
            let st = sign_status(refine_sign(|p| pb.enclose(p).add_scalar(&int(-1)), floor));
            above_one = worst(above_one, st);
            let (i, j) = PAIRS[k];
            b2_certs.push(format!(
                "beta(D, (D{}∩D{})_{}) >= {}",
                i + 1,
                j + 1,
                s.label,
                pb.enclose(&Rational::new(1.into(), 1_000_000.into())).lo
            ));
        }
    }
    v.route("beta2cond", above_one, b2_certs.join("; "));

    let pair_index = |i: usize, j: usize| PAIRS.iter().position(|&(a, b)| (a, b) == (i.min(j), i.max(j))).unwrap();
    let mut cond = Status::Pass;
    let mut certs = Vec::new();
    for (s, b) in sites.iter().zip(&bounds) {
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            let lij = &b[pair_index(i, j)];
            let lik = &b[pair_index(i, k)];
            let at_least_one = refine_sign(|p| lik.enclose(p).add_scalar(&int(-1)), floor);
            let st = match at_least_one {
                Some(Ordering::Less) => Status::Fail,
                None => Status::Borderline,
                Some(_) => {
                    let f = |p: &Rational| {
                        let t = beta0(p).scale(&int(3)).add_scalar(&int(-2));
                        lij.enclose(p)
                            .add_scalar(&int(-1))
                            .add(&lik.enclose(p).add_scalar(&int(-1)).mul(&t))
                    };
                    sign_status(refine_sign(f, floor))
                }
            };
            if st != Status::Pass {
                certs.push(format!("({}, {}, {}) at {}: {:?}", i + 1, j + 1, k + 1, s.label, st));
            }
            cond = worst(cond, st);
        }
    }
    if certs.is_empty() {
        certs.push("certified at every site and permutation".into());
    }
    let final_status = if ineq == Status::Pass { Status::Pass } else { cond };
    v.require("beta1cond", final_status, certs.join("; "));
    Ok(v.assemble())
}

fn worst(a: Status, b: Status) -> Status {
    use Status::*;
    match (a, b) {
        (Fail, _) | (_, Fail) => Fail,
        (Unverified, _) | (_, Unverified) => Unverified,
        (Borderline, _) | (_, Borderline) => Borderline,
        _ => Pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::Holds;

    fn p2(a: &str, b: &str, c: &str) -> CurveTriple {
        CurveTriple::P2([a, b, c].map(|s| PlaneCurve::parse(s).unwrap()))
    }

    fn bi(a: &str, b: &str, c: &str) -> CurveTriple {
        CurveTriple::P1xP1([a, b, c].map(|s| BiCurve::parse(s).unwrap()))
    }

    #[test]
    fn beta_one_is_not_enough() {
        let t = bi("x1*y1 - x0*y0", "x1*y0 - x0*y1", "x1*y1 - x0*y0 + 2*x1*y0 - 2*x0*y1");
        let v = check_non_general(&t, &[1, 1, 1], &CheckOptions::default()).unwrap();
        assert_ne!(v.holds, Holds::Yes);
        assert_eq!(v.condition("beta1cond").unwrap().status, Status::Fail);
        assert_eq!(v.condition("49ineq2").unwrap().status, Status::Fail);
        assert!(v.condition("beta2cond").unwrap().certificate.contains(">= 1"));
    }

    #[test]
    fn tangent_pencil_not_certified() {
        let t = p2("y^2 - x*z", "y^2 - 2*x*z", "y^2 + 3*x*z");
        let v = check_non_general(&t, &[1, 1, 1], &CheckOptions::default()).unwrap();
        assert_eq!(v.holds, Holds::No);
    }

    #[test]
    fn transverse_cubics_pass_by_four_ninths() {
        // Cubics through [0:0:1] with transverse crossings there: 9 < 36.
        let t = p2(
            "x^3 + y^3 + x*z^2 + 2*y*z^2",
            "x^3 - y^3 + 3*x*z^2 - y*z^2 + x*y*z",
            "2*x^3 + x*y^2 - x*z^2 + 5*y*z^2",
        );
        let v = check_non_general(&t, &[1, 1, 1], &CheckOptions::default()).unwrap();
        assert_eq!(v.condition("49ineq2").unwrap().status, Status::Pass, "{v:?}");
        assert_eq!(v.holds, Holds::Yes, "{v:?}");
    }

    #[test]
    fn empty_locus_is_inapplicable() {
        let v = check_non_general(&p2("x", "y", "z"), &[1, 1, 1], &CheckOptions::default()).unwrap();
        assert_eq!(v.holds, Holds::No);
        assert_eq!(v.condition("triple locus nonempty").unwrap().status, Status::Fail);
        assert!(matches!(
            check_non_general(&p2("x^2 - y*z", "y", "z"), &[1, 1, 1], &CheckOptions::default()),
            Err(Error::Hypothesis(_))
        ));
    }
}
