//! Local intersection theory of plane curves (and curves on ℙ¹×ℙ¹): Fulton's
//! algorithm, intersection profiles, triple loci, vanishing orders.

mod biproj;
mod fulton;
mod profile;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::rational::parse_rational;
use crate::algebra::{Polynomial, Rational, UniPoly};
use crate::error::{Error, Result};

pub use biproj::{
    bi_local_mult, bi_rational_common_points, BI_VARS, bi_triple_locus, bi_vanishing_order, BiCurve,
    BiPoint, BiTripleLocus,
};
pub use fulton::fulton_at_origin;
pub use profile::{
    intersection_profile, rational_common_points, triple_locus, Cluster, IntersectionProfile,
    PointMult, TripleLocus,
};

pub const PLANE_VARS: [&str; 3] = ["x", "y", "z"];

pub(crate) fn plane_vars() -> Vec<String> {
    PLANE_VARS.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn chart_vars() -> Vec<String> {
    vec!["u".to_string(), "v".to_string()]
}

/// A plane curve given by a nonzero homogeneous form in `x, y, z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    form: Polynomial,
    degree: u32,
}

impl PlaneCurve {
    pub fn new(form: &Polynomial) -> Result<Self> {
        let form = form
            .reindex(&plane_vars())
            .map_err(|_| Error::invalid("plane curves use the variables x, y, z"))?;
        if form.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = form
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous(format!(": `{form}`")))?;
        if degree == 0 {
            return Err(Error::invalid("a curve needs a form of positive degree"));
        }
        Ok(PlaneCurve { form, degree })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&Polynomial::parse_in(s, &PLANE_VARS)?)
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, q: &ProjPoint) -> Rational {
        self.form.eval(&q.coords)
    }

    pub fn contains(&self, q: &ProjPoint) -> bool {
        self.eval(q).is_zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&(&self.form * &o.form)).unwrap()
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::new(&self.form.pow(n)).unwrap()
    }

    /// The form with the point moved to the origin of an affine chart in
    /// the variables `u, v`.
    pub fn local_equation(&self, q: &ProjPoint) -> Polynomial {
        local_equation(&self.form, &q.coords)
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

impl Serialize for PlaneCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Dehomogenizes at the first nonzero coordinate of `q` (normalized to 1)
/// and translates `q` to the origin of the chart.
pub(crate) fn local_equation(form: &Polynomial, q: &[Rational]) -> Polynomial {
    let cv = chart_vars();
    let i = q.iter().position(|c| !c.is_zero()).expect("nonzero point");
    let scale = q[i].recip();
    let mut subs = Vec::with_capacity(q.len());
    let mut next = 0;
    for (j, c) in q.iter().enumerate() {
        if j == i {
            subs.push(Polynomial::one_in(&cv));
        } else {
            let shift = Polynomial::constant_in(&cv, c * &scale);
            subs.push(&Polynomial::variable(&cv, next) + &shift);
            next += 1;
        }
    }
    form.compose(&subs)
}

/// A point of ℙ² with rational coordinates, first nonzero coordinate 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let i = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::invalid("the zero vector is not a projective point"))?;
        let s = coords[i].recip();
        Ok(ProjPoint {
            coords: coords.iter().map(|c| c * &s).collect(),
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new([x.into(), y.into(), z.into()].map(Rational::from_integer))
    }

    /// Parses `x:y:z` with rational entries.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::parse(0, format!("expected `x:y:z`, got `{s}`")));
        }
        let c: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_>>()?;
        Self::new([c[0].clone(), c[1].clone(), c[2].clone()])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `I_Q(f, g)`; zero when `Q` is not on both curves.
pub fn local_mult(f: &PlaneCurve, g: &PlaneCurve, q: &ProjPoint) -> Result<u32> {
    fulton_at_origin(&f.local_equation(q), &g.local_equation(q))
}

/// Order of vanishing at `Q`: the lowest degree in the local equation.
pub fn vanishing_order(f: &PlaneCurve, q: &ProjPoint) -> u32 {
    f.local_equation(q).order().unwrap_or(0)
}

/// `μ_Q((aD ∩ bE)_Q) = a b (D.E)_Q`.
pub fn hilbert_samuel_mult(
    f: &PlaneCurve,
    g: &PlaneCurve,
    q: &ProjPoint,
    a: u32,
    b: u32,
) -> Result<u32> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("multipliers must be positive"));
    }
    let m = local_mult(f, g, q)?;
    if m == 0 {
        return Err(Error::Hypothesis(format!("{q} is not on both curves")));
    }
    Ok(a * b * m)
}

pub(crate) fn to_uni(p: &Polynomial) -> UniPoly {
    UniPoly::from_polynomial(p).expect("univariate by construction").0
}

pub(crate) fn ord_at_zero(p: &UniPoly) -> Option<u32> {
    p.coeffs().iter().position(|c| !c.is_zero()).map(|i| i as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s).unwrap()
    }

    #[test]
    fn curve_validation() {
        assert!(matches!(PlaneCurve::parse("x^2 + y"), Err(Error::NotHomogeneous(_))));
        assert!(PlaneCurve::parse("x + w").is_err());
        assert_eq!(c("y^2 - x*z").degree(), 2);
    }

    #[test]
    fn points() {
        let p = ProjPoint::parse("2:4:-6").unwrap();
        assert_eq!(p, ProjPoint::from_ints(1, 2, -3).unwrap());
        assert_eq!(ProjPoint::parse("0:1/2:1").unwrap().to_string(), "[0:1:2]");
        assert!(ProjPoint::parse("0:0:0").is_err());
    }

    #[test]
    fn multiplicities() {
        let q = ProjPoint::from_ints(0, 0, 1).unwrap();
        assert_eq!(local_mult(&c("y^2 - x*z"), &c("y^2 - 2*x*z"), &q).unwrap(), 2);
        assert_eq!(local_mult(&c("y"), &c("x"), &q).unwrap(), 1);
        assert_eq!(local_mult(&c("y*z - x^2"), &c("y"), &q).unwrap(), 2);
        assert_eq!(local_mult(&c("x"), &c("y - z"), &q).unwrap(), 0);
        assert_eq!(
            local_mult(&c("x*y"), &c("x*z"), &q),
            Err(Error::NonProperIntersection)
        );
    }

    #[test]
    fn orders() {
        let q = ProjPoint::from_ints(0, 0, 1).unwrap();
        assert_eq!(vanishing_order(&c("y^2 - x*z"), &q), 1);
        assert_eq!(vanishing_order(&c("(y^2 - x*z)^2"), &q), 2);
        assert_eq!(vanishing_order(&c("z"), &q), 0);
    }

    #[test]
    fn hilbert_samuel() {
        let q = ProjPoint::from_ints(0, 0, 1).unwrap();
        assert_eq!(hilbert_samuel_mult(&c("x"), &c("y"), &q, 1, 1).unwrap(), 1);
        assert_eq!(hilbert_samuel_mult(&c("x"), &c("y"), &q, 2, 3).unwrap(), 6);
        assert_eq!(
            hilbert_samuel_mult(&c("y^2 - x*z"), &c("y^2 - 2*x*z"), &q, 1, 1).unwrap(),
            2
        );
        assert!(hilbert_samuel_mult(&c("x - z"), &c("y"), &q, 1, 1).is_err());
    }
}
