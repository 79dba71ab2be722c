//! Curves on ℙ¹×ℙ¹ given by bihomogeneous forms in `x0, x1; y0, y1`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::fulton::fulton_at_origin;
use super::profile::{affine_common, line_common};
use super::{chart_vars, to_uni};
use crate::algebra::rational::parse_rational;
use crate::algebra::{Polynomial, Rational, UniPoly};
use crate::error::{Error, Result};

pub const BI_VARS: [&str; 4] = ["x0", "x1", "y0", "y1"];

fn bi_vars() -> Vec<String> {
    BI_VARS.iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCurve {
    form: Polynomial,
    bidegree: (u32, u32),
}

impl BiCurve {
    pub fn new(form: &Polynomial) -> Result<Self> {
        let form = form
            .reindex(&bi_vars())
            .map_err(|_| Error::invalid("curves on P1xP1 use the variables x0, x1, y0, y1"))?;
        if form.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degs: Vec<(u32, u32)> = form.terms().map(|(e, _)| (e[0] + e[1], e[2] + e[3])).collect();
        let first = degs[0];
        if degs.iter().any(|&d| d != first) {
            return Err(Error::NotHomogeneous(format!(" in each factor: `{form}`")));
        }
        if first == (0, 0) {
            return Err(Error::invalid("a curve needs a nonconstant form"));
        }
        Ok(BiCurve {
            form,
            bidegree: first,
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&Polynomial::parse_in(s, &BI_VARS)?)
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn contains(&self, q: &BiPoint) -> bool {
        self.form.eval(&q.coords()).is_zero()
    }

    /// The local equation at `q` in chart variables `u, v`.
    pub fn local_equation(&self, q: &BiPoint) -> Polynomial {
        // Dehomogenize each factor separately, then merge the two charts.
        let cv = chart_vars();
        let u = Polynomial::variable(&cv, 0);
        let v = Polynomial::variable(&cv, 1);
        let factor = |p: &[Rational; 2], t: &Polynomial| -> [Polynomial; 2] {
            let one = Polynomial::one_in(&cv);
            if p[0].is_zero() {
                [t.clone(), one]
            } else {
                let shift = Polynomial::constant_in(&cv, &p[1] / &p[0]);
                [one, t + &shift]
            }
        };
        let [a, b] = factor(&q.x, &u);
        let [c, d] = factor(&q.y, &v);
        self.form.compose(&[a, b, c, d])
    }
}

impl fmt::Display for BiCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

impl Serialize for BiCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `([x0 : x1], [y0 : y1])`, each factor normalized at its first nonzero
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiPoint {
    x: [Rational; 2],
    y: [Rational; 2],
}

fn normalize(p: [Rational; 2]) -> Result<[Rational; 2]> {
    let i = p
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::invalid("the zero vector is not a point of P1"))?;
    let s = p[i].recip();
    Ok([&p[0] * &s, &p[1] * &s])
}

impl BiPoint {
    pub fn new(x: [Rational; 2], y: [Rational; 2]) -> Result<Self> {
        Ok(BiPoint {
            x: normalize(x)?,
            y: normalize(y)?,
        })
    }

    pub fn affine(u: Rational, v: Rational) -> Self {
        BiPoint {
            x: [Rational::one(), u],
            y: [Rational::one(), v],
        }
    }

    /// Parses `x0:x1,y0:y1`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("expected `x0:x1,y0:y1`, got `{s}`"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let pair = |t: &str| -> Result<[Rational; 2]> {
            let (p, q) = t.split_once(':').ok_or_else(bad)?;
            Ok([parse_rational(p)?, parse_rational(q)?])
        };
        Self::new(pair(a)?, pair(b)?)
    }

    pub fn coords(&self) -> Vec<Rational> {
        vec![
            self.x[0].clone(),
            self.x[1].clone(),
            self.y[0].clone(),
            self.y[1].clone(),
        ]
    }
}

impl fmt::Display for BiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}:{}], [{}:{}])", self.x[0], self.x[1], self.y[0], self.y[1])
    }
}

impl Serialize for BiPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn bi_local_mult(f: &BiCurve, g: &BiCurve, q: &BiPoint) -> Result<u32> {
    fulton_at_origin(&f.local_equation(q), &g.local_equation(q))
}

pub fn bi_vanishing_order(f: &BiCurve, q: &BiPoint) -> u32 {
    f.local_equation(q).order().unwrap_or(0)
}

fn ensure_coprime(fs: &[&BiCurve]) -> Result<()> {
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if !Polynomial::gcd(fs[i].form(), fs[j].form()).is_constant() {
                return Err(Error::NonProperIntersection);
            }
        }
    }
    Ok(())
}

fn bi_common(fs: &[&BiCurve]) -> Result<(Vec<BiPoint>, bool)> {
    ensure_coprime(fs)?;
    let cv = chart_vars();
    let u = Polynomial::variable(&cv, 0);
    let v = Polynomial::variable(&cv, 1);
    let one = Polynomial::one_in(&cv);
    let zero = Polynomial::zero_in(&cv);
    let restrict = |subs: [&Polynomial; 4]| -> Vec<Polynomial> {
        let subs: Vec<Polynomial> = subs.into_iter().cloned().collect();
        fs.iter().map(|f| f.form().compose(&subs)).collect()
    };
    let (pts, mut flag) = affine_common(&restrict([&one, &u, &one, &v]))?;
    let mut out: Vec<BiPoint> = pts.into_iter().map(|(a, b)| BiPoint::affine(a, b)).collect();
    let (one_q, zero_q) = (Rational::one(), Rational::zero());
    // x0 = 0, y0 = 1.
    let line: Vec<UniPoly> = restrict([&zero, &one, &one, &v]).iter().map(to_uni).collect();
    let (vs, f1) = line_common(&line)?;
    out.extend(vs.into_iter().map(|b| BiPoint {
        x: [zero_q.clone(), one_q.clone()],
        y: [one_q.clone(), b],
    }));
    // x0 = 1, y0 = 0.
    let line: Vec<UniPoly> = restrict([&one, &u, &zero, &one]).iter().map(to_uni).collect();
    let (us, f2) = line_common(&line)?;
    out.extend(us.into_iter().map(|a| BiPoint {
        x: [one_q.clone(), a],
        y: [zero_q.clone(), one_q.clone()],
    }));
    let corner = BiPoint {
        x: [zero_q.clone(), one_q.clone()],
        y: [zero_q, one_q],
    };
    if fs.iter().all(|f| f.contains(&corner)) {
        out.push(corner);
    }
    flag |= f1 || f2;
    out.sort();
    out.dedup();
    Ok((out, flag))
}

pub fn bi_rational_common_points(f: &BiCurve, g: &BiCurve) -> Result<Vec<BiPoint>> {
    Ok(bi_common(&[f, g])?.0)
}

pub fn bi_triple_locus(
    f1: &BiCurve,
    f2: &BiCurve,
    f3: &BiCurve,
) -> Result<BiTripleLocus> {
    let (points, nonrational_flag) = bi_common(&[f1, f2, f3])?;
    Ok(BiTripleLocus {
        points,
        nonrational_flag,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiTripleLocus {
    pub points: Vec<BiPoint>,
    pub nonrational_flag: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn b(s: &str) -> BiCurve {
        BiCurve::parse(s).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(b("x1*y1 - x0*y0").bidegree(), (1, 1));
        assert_eq!(b("x0^2*y1 - x1^2*y0").bidegree(), (2, 1));
        assert!(BiCurve::parse("x0*y0 - x1").is_err());
    }

    #[test]
    fn crossing_pair() {
        let d1 = b("x1*y1 - x0*y0");
        let d2 = b("x1*y0 - x0*y1");
        let d3 = b("x1*y1 - x0*y0 + 2*(x1*y0 - x0*y1)");
        let pts = bi_rational_common_points(&d1, &d2).unwrap();
        assert_eq!(
            pts,
            vec![BiPoint::affine(int(-1), int(-1)), BiPoint::affine(int(1), int(1))]
        );
        for q in &pts {
            assert_eq!(bi_local_mult(&d1, &d2, q).unwrap(), 1);
            assert_eq!(bi_local_mult(&d1, &d3, q).unwrap(), 1);
        }
        let t = bi_triple_locus(&d1, &d2, &d3).unwrap();
        assert_eq!(t.points, pts);
        assert!(!t.nonrational_flag);
    }

    #[test]
    fn points_at_infinity() {
        // x0 = 0 and y0 = 0 meet only at the corner.
        let pts = bi_rational_common_points(&b("x0"), &b("y0")).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].to_string(), "([0:1], [0:1])");
        assert_eq!(bi_local_mult(&b("x0"), &b("y0"), &pts[0]).unwrap(), 1);
        // (2,1) . (1,1) = 3.
        let f = b("x0^2*y1 - x1^2*y0");
        let g = b("x1*y0 - x0*y1");
        let total: u32 = bi_rational_common_points(&f, &g)
            .unwrap()
            .iter()
            .map(|q| bi_local_mult(&f, &g, q).unwrap())
            .sum();
        assert_eq!(total, 3);
    }
}
