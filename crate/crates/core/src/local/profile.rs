//! Global intersection data: rational common points, cluster summaries of
//! the non-rational part, triple loci.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{chart_vars, local_mult, PlaneCurve, ProjPoint};
use crate::algebra::univariate::Irreducibility;
use crate::algebra::{resultant, Polynomial, Rational, UniPoly};
use crate::error::{Error, Result};

const ATTEMPTS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointMult {
    pub point: ProjPoint,
    pub multiplicity: u32,
}

/// Intersection points sharing one squarefree factor of a generic
/// projection: `degree` points, each of local multiplicity `multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cluster {
    pub degree: u32,
    pub multiplicity: u32,
    /// Whether the points form a single Galois orbit (`None`: undecided).
    pub irreducible: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    pub rational_points: Vec<PointMult>,
    pub clusters: Vec<Cluster>,
    pub total: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleLocus {
    pub points: Vec<ProjPoint>,
    /// Set when a common point with irrational coordinates could not be
    /// ruled out.
    pub nonrational_flag: bool,
}

fn uni(p: &Polynomial) -> UniPoly {
    UniPoly::from_polynomial(p).expect("univariate by construction").0
}

fn ensure_coprime(f: &Polynomial, g: &Polynomial) -> Result<()> {
    if Polynomial::gcd(f, g).is_constant() {
        Ok(())
    } else {
        Err(Error::NonProperIntersection)
    }
}

/// Resultant in `v`, as a polynomial in `u`. Inputs are coprime, so when
/// neither involves `v` there is no common zero and 1 is returned.
fn elim_v(f: &Polynomial, g: &Polynomial) -> Result<UniPoly> {
    match resultant(f, g, "v") {
        Ok(r) => Ok(uni(&r)),
        Err(Error::ConstantInputs(_)) => Ok(UniPoly::one()),
        Err(e) => Err(e),
    }
}

/// Splits off the rational roots; returns them and the leftover part of the
/// squarefree part.
fn split_rational(p: &UniPoly) -> (Vec<Rational>, UniPoly) {
    let roots = p.rational_roots();
    let mut rest = p.squarefree_part();
    for r in &roots {
        rest = rest.div_exact(&UniPoly::linear_root(r)).unwrap();
    }
    (roots, rest)
}

fn gcd_all(ps: &[UniPoly]) -> UniPoly {
    ps.iter().fold(UniPoly::zero(), |a, b| UniPoly::gcd(&a, b))
}

/// Common zeros of pairwise coprime polynomials in `u, v`: the rational
/// ones, and whether an irrational one may exist.
pub(crate) fn affine_common(fs: &[Polynomial]) -> Result<(Vec<(Rational, Rational)>, bool)> {
    let mut res = Vec::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            res.push(elim_v(&fs[i], &fs[j])?);
        }
    }
    let g = gcd_all(&res);
    if g.is_zero() {
        return Err(Error::NonProperIntersection);
    }
    let (us, rest) = split_rational(&g);
    let mut flag = !rest.is_constant();
    let mut pts = Vec::new();
    for a in us {
        let fibre: Vec<UniPoly> = fs.iter().map(|f| uni(&f.eval_var(0, &a))).collect();
        let (vs, flag_a) = line_common(&fibre)?;
        flag |= flag_a;
        pts.extend(vs.into_iter().map(|b| (a.clone(), b)));
    }
    Ok((pts, flag))
}

/// Common roots of univariate polynomials, not all zero.
pub(crate) fn line_common(ps: &[UniPoly]) -> Result<(Vec<Rational>, bool)> {
    let h = gcd_all(ps);
    if h.is_zero() {
        return Err(Error::NonProperIntersection);
    }
    let (roots, rest) = split_rational(&h);
    Ok((roots, !rest.is_constant()))
}

fn chart_sub(form: &Polynomial, subs: [Polynomial; 3]) -> Polynomial {
    form.compose(&subs)
}

/// Rational common points of plane curves plus the irrational-point flag.
fn plane_common(fs: &[&PlaneCurve]) -> Result<(Vec<ProjPoint>, bool)> {
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            ensure_coprime(fs[i].form(), fs[j].form())?;
        }
    }
    let cv = chart_vars();
    let u = Polynomial::variable(&cv, 0);
    let v = Polynomial::variable(&cv, 1);
    let one = Polynomial::one_in(&cv);
    let zero = Polynomial::zero_in(&cv);
    let q = |a: Rational, b: Rational, c: Rational| ProjPoint::new([a, b, c]).unwrap();

    let affine: Vec<Polynomial> = fs
        .iter()
        .map(|f| chart_sub(f.form(), [u.clone(), v.clone(), one.clone()]))
        .collect();
    let (pts, mut flag) = affine_common(&affine)?;
    let mut out: Vec<ProjPoint> = pts.into_iter().map(|(a, b)| q(a, b, Rational::one())).collect();

    // The line z = 0: points [1 : b : 0] and [0 : 1 : 0].
    let at_inf: Vec<UniPoly> = fs
        .iter()
        .map(|f| uni(&chart_sub(f.form(), [one.clone(), v.clone(), zero.clone()])))
        .collect();
    let (bs, flag_inf) = line_common(&at_inf)?;
    flag |= flag_inf;
    out.extend(bs.into_iter().map(|b| q(Rational::one(), b, Rational::zero())));
    let corner = ProjPoint::from_ints(0, 1, 0).unwrap();
    if fs.iter().all(|f| f.contains(&corner)) {
        out.push(corner);
    }
    out.sort();
    out.dedup();
    Ok((out, flag))
}

/// All common points of two curves with rational coordinates.
pub fn rational_common_points(f: &PlaneCurve, g: &PlaneCurve) -> Result<Vec<ProjPoint>> {
    Ok(plane_common(&[f, g])?.0)
}

/// The rational points of `D1 ∩ D2 ∩ D3`, with a flag when irrational
/// common points are not excluded.
pub fn triple_locus(f1: &PlaneCurve, f2: &PlaneCurve, f3: &PlaneCurve) -> Result<TripleLocus> {
    let (points, nonrational_flag) = plane_common(&[f1, f2, f3])?;
    Ok(TripleLocus {
        points,
        nonrational_flag,
    })
}

type Mat3 = [[i64; 3]; 3];

fn det3(m: &Mat3) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `M^{-1} q` up to scaling (adjugate times `q`).
fn adj_apply(m: &Mat3, q: &[Rational]) -> [Rational; 3] {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
    };
    std::array::from_fn(|i| {
        (0..3).fold(Rational::zero(), |acc, j| {
            acc + Rational::from_integer(c(j, i).into()) * &q[j]
        })
    })
}

/// Summary of the non-rational part under the projection after the change
/// of coordinates `m`; `None` when `m` is not generic enough.
fn clusters_via(
    f: &PlaneCurve,
    g: &PlaneCurve,
    rational: &[PointMult],
    m: &Mat3,
) -> Result<Option<Vec<Cluster>>> {
    let cv = vec!["u".to_string(), "y".to_string(), "v".to_string()];
    let lin = |row: &[i64; 3]| {
        Polynomial::from_terms(
            &cv,
            (0..3).map(|j| {
                let mut e = vec![0u32; 3];
                e[j] = 1;
                (e, Rational::from_integer(row[j].into()))
            }),
        )
    };
    let subs = [lin(&m[0]), lin(&m[1]), lin(&m[2])];
    let fm = f.form().compose(&subs);
    let gm = g.form().compose(&subs);
    let center = [Rational::zero(), Rational::zero(), Rational::one()];
    if fm.eval(&center).is_zero() || gm.eval(&center).is_zero() {
        return Ok(None);
    }
    let one = Rational::one();
    let r = uni(&resultant(&fm.eval_var(1, &one), &gm.eval_var(1, &one), "v")?);
    let expected = (f.degree() * g.degree()) as usize;
    if r.degree() != Some(expected) {
        return Ok(None);
    }
    let mut rest = r;
    let mut seen = Vec::new();
    for pm in rational {
        let p = adj_apply(m, pm.point.coords());
        if p[1].is_zero() {
            return Ok(None);
        }
        let t = &p[0] / &p[1];
        if seen.contains(&t) {
            return Ok(None);
        }
        let lin = UniPoly::linear_root(&t);
        for _ in 0..pm.multiplicity {
            match rest.div_exact(&lin) {
                Some(q) => rest = q,
                None => return Ok(None),
            }
        }
        if rest.eval(&t).is_zero() {
            return Ok(None);
        }
        seen.push(t);
    }
    if !rest.rational_roots().is_empty() {
        return Ok(None);
    }
    let (_, factors) = rest.squarefree();
    let mut out: Vec<Cluster> = factors
        .into_iter()
        .map(|(p, k)| Cluster {
            degree: p.degree().unwrap() as u32,
            multiplicity: k,
            irreducible: match p.irreducibility() {
                Irreducibility::Irreducible => Some(true),
                Irreducibility::Reducible => Some(false),
                Irreducibility::Unknown => None,
            },
        })
        .collect();
    out.sort();
    Ok(Some(out))
}

fn random_change(rng: &mut ChaCha8Rng) -> Mat3 {
    loop {
        let m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-6..=6)));
        if det3(&m) != 0 {
            return m;
        }
    }
}

/// Intersection profile of two plane curves without common components.
/// The non-rational part is summarized under seeded random projections;
/// two independent projections must agree.
pub fn intersection_profile(f: &PlaneCurve, g: &PlaneCurve, seed: u64) -> Result<IntersectionProfile> {
    ensure_coprime(f.form(), g.form())?;
    let points = rational_common_points(f, g)?;
    let rational_points = points
        .into_iter()
        .map(|point| {
            let multiplicity = local_mult(f, g, &point)?;
            Ok(PointMult {
                point,
                multiplicity,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Option<Vec<Cluster>> = None;
    let mut clusters = None;
    for _ in 0..ATTEMPTS {
        let m = random_change(&mut rng);
        let Some(cs) = clusters_via(f, g, &rational_points, &m)? else {
            continue;
        };
        match &accepted {
            Some(prev) if *prev == cs => {
                clusters = Some(cs);
                break;
            }
            _ => accepted = Some(cs),
        }
    }
    let clusters = clusters.ok_or(Error::GenericityFailure(ATTEMPTS))?;
    let total = rational_points.iter().map(|p| p.multiplicity).sum::<u32>()
        + clusters.iter().map(|c| c.degree * c.multiplicity).sum::<u32>();
    if total != f.degree() * g.degree() {
        return Err(Error::Internal(format!(
            "profile total {total} differs from the Bezout number"
        )));
    }
    Ok(IntersectionProfile {
        rational_points,
        clusters,
        total,
    })
}
