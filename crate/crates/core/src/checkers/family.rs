//! Families `f₁(t)u + f₂(t)v = f₃(t)` of unit equations: the degree
//! criterion, the auxiliary hypersurface in ℙ³ with its local checks at
//! `P₀ = [1:0:0:0]`, and a desk-scale solution search over ℚ.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{sign_status, status_of, CheckOptions, Status, Theorem, TheoremVerdict};
use crate::algebra::interval::refine_sign;
use crate::algebra::rational::{int, rat};
use crate::algebra::{Polynomial, Rational, RationalInterval, SurdSign, UniPoly};
use crate::error::{Error, Result};
use crate::local::{chart_vars, fulton_at_origin};
use crate::par::{self, Exec};

pub const FAMILY_VARS: [&str; 4] = ["x0", "x1", "x2", "x3"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitEquationFamily {
    #[serde(serialize_with = "ser_unis")]
    pub f: [UniPoly; 3],
    pub degrees: [u32; 3],
    /// `order[k]` is the input index of the k-th largest degree.
    pub order: [usize; 3],
    /// `x₁F₁ + x₂^{d₁+1−d₂}F₂ − x₃^{d₁+1−d₃}F₃` after sorting.
    #[serde(serialize_with = "ser_poly")]
    pub hypersurface_form: Polynomial,
}

fn ser_poly<S: serde::Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn ser_unis<S: serde::Serializer>(f: &[UniPoly; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for p in f {
        seq.serialize_element(&p.to_polynomial("t").to_string())?;
    }
    seq.end()
}

impl UnitEquationFamily {
    pub fn new(f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> Result<Self> {
        let mut f = Vec::new();
        for p in [f1, f2, f3] {
            let (u, _) = UniPoly::from_polynomial(p)?;
            if u.is_constant() {
                return Err(Error::invalid(format!("`{p}` is constant")));
            }
            f.push(u);
        }
        let g = UniPoly::gcd(&UniPoly::gcd(&f[0], &f[1]), &f[2]);
        if !g.is_constant() {
            return Err(Error::Hypothesis(format!(
                "the polynomials share the zero(s) of {}",
                g.to_polynomial("t")
            )));
        }
        let degrees: [u32; 3] = std::array::from_fn(|i| f[i].degree().unwrap() as u32);
        let mut order = [0, 1, 2];
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));
        let d: [u32; 3] = order.map(|i| degrees[i]);
        let vars: Vec<String> = FAMILY_VARS.iter().map(|s| s.to_string()).collect();
        let homog = |k: usize| {
            // F_k = f(x0/x3) x3^{d_k}
            let u = &f[order[k]];
            Polynomial::from_terms(
                &vars,
                u.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (vec![i as u32, 0, 0, d[k] - i as u32], c.clone())),
            )
        };
        let mono = |e: [u32; 4]| Polynomial::monomial(&vars, e.to_vec(), int(1));
        let e2 = d[0] + 1 - d[1];
        let e3 = d[0] + 1 - d[2];
        let form = &(&(&mono([0, 1, 0, 0]) * &homog(0)) + &(&mono([0, 0, e2, 0]) * &homog(1)))
            - &(&mono([0, 0, 0, e3]) * &homog(2));
        Ok(UnitEquationFamily {
            f: [f[0].clone(), f[1].clone(), f[2].clone()],
            degrees,
            order,
            hypersurface_form: form,
        })
    }

    /// Degrees in decreasing order.
    pub fn sorted_degrees(&self) -> [u32; 3] {
        self.order.map(|i| self.degrees[i])
    }
}

/// Local data at `P₀` for `Dᵢ ∩ Dⱼ` (sorted labels, 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCrossCheck {
    pub pair: (usize, usize),
    pub closed_form: u32,
    /// Fulton's algorithm in the chart `x₀ = 1` with local coordinates
    /// `(x₂, x₃)` after eliminating `x₁`.
    pub local_module: u32,
    /// Order at 0 of `F` on the line `xᵢ = xⱼ = 0`.
    pub restriction_order: u32,
    /// Degree of `F` on `Hᵢ ∩ Hⱼ`, which must equal `D² = d₁ + 1`.
    pub bezout_total: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub verdict: TheoremVerdict,
    pub family: UnitEquationFamily,
    pub cross_checks: Vec<PairCrossCheck>,
    /// Enclosure of `(√a − 1)(√b − 1)`.
    pub familyineq_value: RationalInterval,
    pub d_squared: u32,
}

/// `G_k(v) = F_k(1, ·, ·, v)`: the reversed coefficients of `f`.
fn reversed(u: &UniPoly, v: &Polynomial) -> Polynomial {
    let d = u.degree().unwrap();
    let vars = v.vars().to_vec();
    let mut acc = Polynomial::zero_in(&vars);
    for (i, c) in u.coeffs().iter().enumerate() {
        acc = &acc + &(&v.pow((d - i) as u32)).scale(c);
    }
    acc
}

fn cross_checks(fam: &UnitEquationFamily) -> Result<Vec<PairCrossCheck>> {
    let d = fam.sorted_degrees();
    let (e2, e3) = (d[0] + 1 - d[1], d[0] + 1 - d[2]);
    let cv = chart_vars();
    let u = Polynomial::variable(&cv, 0);
    let v = Polynomial::variable(&cv, 1);
    let g = fam.order.map(|i| reversed(&fam.f[i], &v));
    // On X near P₀, x₁ = (x₃^{e3} G₃ − x₂^{e2} G₂) / G₁ with G₁(0) ≠ 0.
    let phi = [
        &(&v.pow(e3) * &g[2]) - &(&u.pow(e2) * &g[1]),
        u.clone(),
        v.clone(),
    ];
    let form = &fam.hypersurface_form;
    let mut out = Vec::new();
    for (i, j, k) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
        let local_module = fulton_at_origin(&phi[i], &phi[j])?;
        // x_{i+1} = x_{j+1} = 0 in ℙ³; remaining coordinates x0 and x_{k+1}.
        let r = form
            .eval_var(i + 1, &Rational::zero())
            .eval_var(j + 1, &Rational::zero());
        let bezout_total = r.total_degree().unwrap_or(0);
        let affine = r.eval_var(0, &int(1));
        let restriction_order = affine.order().unwrap_or(u32::MAX);
        out.push(PairCrossCheck {
            pair: (i + 1, j + 1),
            closed_form: d[0] + 1 - d[k],
            local_module,
            restriction_order,
            bezout_total: if r.is_zero() { 0 } else { bezout_total },
        });
    }
    Ok(out)
}

/// The degree criterion for a family of unit equations, with the
/// auxiliary-surface checks that feed it.
pub fn check_unit_family(
    f1: &Polynomial,
    f2: &Polynomial,
    f3: &Polynomial,
    opts: &CheckOptions,
) -> Result<FamilyCheck> {
    let fam = UnitEquationFamily::new(f1, f2, f3)?;
    let d = fam.sorted_degrees();
    let d_squared = d[0] + 1;
    let mut v = TheoremVerdict::new(Theorem::ThFamily);
    v.require("nonconstant", Status::Pass, format!("degrees {:?}", fam.degrees));
    v.require("no common zero", Status::Pass, "gcd(f1, f2, f3) = 1");

    let form = &fam.hypersurface_form;
    let p0 = [int(1), int(0), int(0), int(0)];
    let on_x = form.eval(&p0).is_zero();
    let lead_ok = fam.f.iter().all(|u| !u.leading().is_zero());
    let checks = cross_checks(&fam)?;
    let agree = checks.iter().all(|c| {
        c.closed_form == c.local_module
            && c.closed_form == c.restriction_order
            && c.bezout_total == d_squared
    });
    let cert: Vec<String> = checks
        .iter()
        .map(|c| {
            format!(
                "(D{}.D{})_P0: closed form {}, local {}, restriction {}; Bezout {}",
                c.pair.0, c.pair.1, c.closed_form, c.local_module, c.restriction_order, c.bezout_total
            )
        })
        .collect();
    v.require(
        "P0 cross-check",
        status_of(on_x && lead_ok && agree),
        format!("F(P0) = 0: {on_x}; {}; D^2 = {d_squared}", cert.join("; ")),
    );

    let a = Rational::new((d[0] + 1).into(), (d[0] + 1 - d[1]).into());
    let b = Rational::new((d[0] + 1).into(), (d[0] + 1 - d[2]).into());
    let prod = SurdSign::new([int(1), int(-1), int(-1), int(1)], a.clone(), b.clone())?;
    let margin = SurdSign::new([rat(3, 4), int(-1), int(-1), int(1)], a.clone(), b.clone())?;
    let value = prod.enclose(&rat(1, 1_000_000_000_000));
    let exact = margin.sign();
    let st = match refine_sign(|p| margin.enclose(p), &opts.floor) {
        Some(std::cmp::Ordering::Equal) => Status::Borderline,
        s => sign_status(s),
    };
    v.require(
        "familyineq",
        st,
        format!(
            "(sqrt({a}) - 1)(sqrt({b}) - 1) in [{}, {}] vs 1/4; exact sign {exact:?}",
            value.lo, value.hi
        ),
    );
    if st == Status::Borderline {
        v.note("familyineq is not strict at this triple; the exact surd sign is recorded in the certificate");
    }
    let max1 = fam.degrees.iter().max().unwrap() + 1;
    let min = *fam.degrees.iter().min().unwrap();
    let route = 5 * max1 < 9 * min;
    v.route(
        "9/5 route",
        status_of(route),
        format!("5 * {max1} {} 9 * {min}", if route { "<" } else { ">=" }),
    );
    if route && st != Status::Pass {
        return Err(Error::Internal("the 9/5 route passed but familyineq did not".into()));
    }
    Ok(FamilyCheck {
        verdict: v.assemble(),
        family: fam,
        cross_checks: checks,
        familyineq_value: value,
        d_squared,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitSolution {
    #[serde(serialize_with = "crate::algebra::rational::ser")]
    pub t: Rational,
    #[serde(serialize_with = "crate::algebra::rational::ser")]
    pub u: Rational,
    #[serde(serialize_with = "crate::algebra::rational::ser")]
    pub v: Rational,
}

/// Solutions on a common monomial curve `u = c t^k, v = c' t^l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionBucket {
    pub label: String,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub solutions: Vec<UnitSolution>,
    pub buckets: Vec<SolutionBucket>,
    /// Indices not placed in any bucket.
    pub sporadic: Vec<usize>,
    /// Values of `t` with `f₂(t) = 0`, where `v` is unconstrained, with the
    /// admissible `u`.
    #[serde(serialize_with = "ser_pairs")]
    pub degenerate: Vec<(Rational, Rational)>,
}

fn ser_pairs<S: serde::Serializer>(
    p: &[(Rational, Rational)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.len()))?;
    for (a, b) in p {
        seq.serialize_element(&(a.to_string(), b.to_string()))?;
    }
    seq.end()
}

fn is_bounded_unit(q: &Rational, primes: &[BigInt], bound: u32) -> bool {
    if q.is_zero() {
        return false;
    }
    let (mut n, mut d) = (q.numer().abs(), q.denom().clone());
    for p in primes {
        let mut e: i64 = 0;
        while (&n % p).is_zero() {
            n /= p;
            e += 1;
        }
        while (&d % p).is_zero() {
            d /= p;
            e -= 1;
        }
        if e.unsigned_abs() > bound as u64 {
            return false;
        }
    }
    n.is_one() && d.is_one()
}

fn units(primes: &[BigInt], bound: u32) -> Vec<Rational> {
    let mut acc = vec![int(1)];
    for p in primes {
        let mut next = Vec::new();
        for a in &acc {
            for e in -(bound as i64)..=bound as i64 {
                let pe = Rational::from_integer(num_traits::pow(p.clone(), e.unsigned_abs() as usize));
                next.push(if e >= 0 { a * &pe } else { a / &pe });
            }
        }
        acc = next;
    }
    let mut out: Vec<Rational> = acc.iter().flat_map(|u| [u.clone(), -u]).collect();
    out.sort();
    out
}

/// `n/s` with `s` a positive S-unit and `max(|n|, s) ≤ t_bound`.
fn s_integers(primes: &[BigInt], t_bound: u64) -> Vec<Rational> {
    let tb = BigInt::from(t_bound);
    let mut dens = vec![BigInt::one()];
    for p in primes {
        let mut more = Vec::new();
        for s in &dens {
            let mut x = s * p;
            while x <= tb {
                more.push(x.clone());
                x *= p;
            }
        }
        dens.extend(more);
    }
    let mut out = Vec::new();
    if t_bound == 0 {
        return out;
    }
    for s in &dens {
        for n in -(t_bound as i64)..=t_bound as i64 {
            if BigInt::from(n).gcd(s).is_one() || (n == 0 && s.is_one()) {
                out.push(Rational::new(n.into(), s.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All `(t, u, v)` in the box solving `f₁(t)u + f₂(t)v = f₃(t)` exactly,
/// with `u, v = ±Π pᵉ`, `|e| ≤ exponent_bound`. Constant coefficients are
/// allowed here; pass `&family.f` for a checked family.
pub fn search_unit_family_solutions(
    f: &[UniPoly; 3],
    primes: &[u64],
    exponent_bound: u32,
    t_bound: u64,
    exec: Exec,
) -> Result<SearchReport> {
    let ps: Vec<BigInt> = primes
        .iter()
        .map(|&p| {
            let b = BigInt::from(p);
            if crate::heights::is_probable_prime(&b) {
                Ok(b)
            } else {
                Err(Error::invalid(format!("{p} is not prime")))
            }
        })
        .collect::<Result<_>>()?;
    let us = units(&ps, exponent_bound);
    let ts = s_integers(&ps, t_bound);
    let per_t = par::map(exec, &ts, |t| {
        let [a, b, c] = f.each_ref().map(|g| g.eval(t));
        let mut sols = Vec::new();
        let mut degen = Vec::new();
        for u in &us {
            let rest = &c - &a * u;
            if b.is_zero() {
                if rest.is_zero() {
                    degen.push((t.clone(), u.clone()));
                }
                continue;
            }
            let v = rest / &b;
            if is_bounded_unit(&v, &ps, exponent_bound) {
                sols.push(UnitSolution { t: t.clone(), u: u.clone(), v });
            }
        }
        (sols, degen)
    });
    let mut solutions = Vec::new();
    let mut degenerate = Vec::new();
    for (s, d) in per_t {
        solutions.extend(s);
        degenerate.extend(d);
    }
    let (buckets, sporadic) = bucket(&solutions);
    Ok(SearchReport {
        solutions,
        buckets,
        sporadic,
        degenerate,
    })
}

fn tpow(t: &Rational, k: i32) -> Rational {
    let p = num_traits::pow(t.clone(), k.unsigned_abs() as usize);
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Greedy grouping by the normalized key `(u/t^k, v/t^l)` for small
/// exponents, simplest curves first.
fn bucket(sols: &[UnitSolution]) -> (Vec<SolutionBucket>, Vec<usize>) {
    let mut exps: Vec<(i32, i32)> = (-2..=2).flat_map(|k| (-2..=2).map(move |l| (k, l))).collect();
    exps.sort_by_key(|&(k, l)| (k.abs() + l.abs(), k, l));
    let mut assigned = vec![false; sols.len()];
    let mut buckets = Vec::new();
    for (k, l) in exps {
        let mut groups: BTreeMap<(Rational, Rational), Vec<usize>> = BTreeMap::new();
        for (i, s) in sols.iter().enumerate() {
            if assigned[i] || s.t.is_zero() {
                continue;
            }
            let key = (&s.u / tpow(&s.t, k), &s.v / tpow(&s.t, l));
            groups.entry(key).or_default().push(i);
        }
        let need = if (k, l) == (0, 0) { 2 } else { 3 };
        for ((cu, cv), members) in groups {
            if members.len() >= need {
                for &i in &members {
                    assigned[i] = true;
                }
                buckets.push(SolutionBucket {
                    label: format!("u = {cu} t^{k}, v = {cv} t^{l}"),
                    members,
                });
            }
        }
    }
    let sporadic = (0..sols.len()).filter(|&i| !assigned[i]).collect();
    (buckets, sporadic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::Holds;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn hypersurface_shape() {
        let fam = UnitEquationFamily::new(&p("t + 1"), &p("t^3 - t"), &p("t^2 + 2")).unwrap();
        assert_eq!(fam.sorted_degrees(), [3, 2, 1]);
        assert_eq!(fam.order, [1, 2, 0]);
        assert_eq!(fam.hypersurface_form.homogeneous_degree(), Some(4));
        let expect = Polynomial::parse_in(
            "x1*(x0^3 - x0*x3^2) + x2^2*(x0^2 + 2*x3^2) - x3^3*(x0 + x3)",
            &FAMILY_VARS,
        )
        .unwrap();
        assert_eq!(fam.hypersurface_form, expect);
    }

    #[test]
    fn degree_criterion() {
        let o = CheckOptions::default();
        let r = check_unit_family(&p("t^2+1"), &p("t^2+t+3"), &p("t^2-t"), &o).unwrap();
        assert_eq!(r.verdict.holds, Holds::Yes);
        assert_eq!(r.verdict.condition("9/5 route").unwrap().status, Status::Pass);
        assert!(r.cross_checks.iter().all(|c| c.closed_form == 1 && c.local_module == 1));
        assert!(r.familyineq_value.lo > rat(1, 2));
        let r = check_unit_family(&p("t^5+t+1"), &p("t"), &p("t-1"), &o).unwrap();
        assert_eq!(r.verdict.holds, Holds::No);
        assert_eq!(r.verdict.condition("9/5 route").unwrap().status, Status::Fail);
        assert_eq!(r.verdict.condition("familyineq").unwrap().status, Status::Fail);
        assert!(matches!(
            check_unit_family(&p("t"), &p("t"), &p("t"), &o),
            Err(Error::Hypothesis(_))
        ));
        assert!(check_unit_family(&p("t"), &p("3"), &p("t"), &o).is_err());
    }

    #[test]
    fn boundary_triple_is_borderline() {
        // a = b = 9/4 puts (sqrt a - 1)(sqrt b - 1) exactly at 1/4.
        let o = CheckOptions {
            floor: rat(1, 1 << 40),
            ..CheckOptions::default()
        };
        let f8 = p("t^8 + 1");
        let f5 = p("t^5 + t");
        let f5b = p("t^5 - 3");
        let r = check_unit_family(&f8, &f5, &f5b, &o).unwrap();
        assert_eq!(r.verdict.holds, Holds::Borderline, "{:?}", r.verdict);
        assert!(r.verdict.condition("familyineq").unwrap().certificate.contains("Equal"));
    }

    #[test]
    fn classical_unit_equation() {
        let one = [UniPoly::one(), UniPoly::one(), UniPoly::one()];
        let r = search_unit_family_solutions(&one, &[2], 5, 3, Exec::Parallel).unwrap();
        let t_values = s_integers(&[BigInt::from(2)], 3);
        assert_eq!(t_values.len(), 11);
        assert_eq!(r.solutions.len(), 3 * t_values.len());
        for s in &r.solutions {
            let pair = (s.u.clone(), s.v.clone());
            assert!([(int(2), int(-1)), (int(-1), int(2)), (rat(1, 2), rat(1, 2))].contains(&pair));
        }
        assert_eq!(r.buckets.len(), 3);
        assert!(r.degenerate.is_empty());
        let shifted = [UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[1, 1])];
        let r = search_unit_family_solutions(&shifted, &[2], 1, 1, Exec::Sequential).unwrap();
        assert_eq!(r.degenerate.len(), 6);
        let r = search_unit_family_solutions(&one, &[2], 5, 0, Exec::Sequential).unwrap();
        assert!(r.solutions.is_empty());
    }

    #[test]
    fn monomial_bucket() {
        // u = t, v = 1 whenever t is an S-unit.
        let fam = UnitEquationFamily::new(&p("t^2 + 1"), &p("t^3 + 2"), &p("2*t^3 + t + 2")).unwrap();
        let r = search_unit_family_solutions(&fam.f, &[2, 3], 3, 30, Exec::Parallel).unwrap();
        assert!(r.buckets.iter().any(|b| b.label.contains("t^1") && b.members.len() >= 3), "{:?}", r.buckets);
    }
}
