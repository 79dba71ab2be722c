//! Local Weil heights over ℚ for plane curves, under the max-coordinate
//! normalization. Every local height is the logarithm of a positive rational,
//! so identities among them are checked exactly on the rationals before any
//! logarithm is taken.
//!
//! For a primitive integer form `F` of degree `d` and a coprime integer
//! point `x`:
//!
//! * `λ_∞ = log(max|x_i|^d / |F(x)|)`,
//! * `λ_p = ord_p(F(x)) · log p`,
//!
//! and the product formula gives `Σ_v λ_v = d · log max|x_i|` exactly.
//! Note that `λ_∞` can be negative when `|F(x)| > max|x_i|^d`; it is bounded
//! below by `−log ‖F‖₁`.

mod factor;
mod probe;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::rational::{ln_rational, parse_rational};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::local::PlaneCurve;

pub use factor::{factor, is_probable_prime, ord};
pub use probe::{
    bcz_experiment, probe_main_inequality, s_unit_points, BczReport, BczRow, PlaceConfig,
    ProbeConfig, ProbeEntry, ProbeReport, SampleConfig,
};

/// A point of ℙ²(ℚ) as a coprime integer triple whose first nonzero
/// coordinate is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalProjPoint {
    coords: [BigInt; 3],
}

impl RationalProjPoint {
    pub fn new(coords: [BigInt; 3]) -> Result<Self> {
        let g = coords.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        if g.is_zero() {
            return Err(Error::invalid("the zero vector is not a projective point"));
        }
        let first = coords.iter().find(|c| !c.is_zero()).unwrap();
        let g = if first.is_negative() { -g } else { g };
        Ok(RationalProjPoint {
            coords: coords.map(|c| c / &g),
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new([x.into(), y.into(), z.into()])
    }

    /// Scales rational coordinates to a coprime integer triple.
    pub fn from_rationals(c: &[Rational; 3]) -> Result<Self> {
        let l = c.iter().fold(BigInt::one(), |a, q| a.lcm(q.denom()));
        Self::new(std::array::from_fn(|i| (&c[i] * Rational::from_integer(l.clone())).to_integer()))
    }

    /// Parses `x:y:z` with rational entries.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::parse(0, format!("expected `x:y:z`, got `{s}`")));
        }
        let c: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_>>()?;
        Self::from_rationals(&[c[0].clone(), c[1].clone(), c[2].clone()])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }

    pub fn max_abs(&self) -> BigInt {
        self.coords.iter().map(|c| c.abs()).max().unwrap()
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.coords.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for RationalProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl Serialize for RationalProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinite,
    Prime(BigInt),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        let p = BigInt::from(p);
        if !is_probable_prime(&p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Place::Prime(p))
    }

    /// `inf` or a prime.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "inf" | "infinity" | "∞") {
            return Ok(Place::Infinite);
        }
        let p: BigInt = t
            .parse()
            .map_err(|_| Error::parse(0, format!("expected `inf` or a prime, got `{t}`")))?;
        if !is_probable_prime(&p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Place::Prime(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `log(arg)` for a positive rational `arg`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LogValue {
    arg: Rational,
}

impl LogValue {
    pub fn of(arg: Rational) -> Self {
        assert!(arg.is_positive(), "log of a nonpositive number");
        LogValue { arg }
    }

    pub fn zero() -> Self {
        LogValue { arg: Rational::one() }
    }

    pub fn arg(&self) -> &Rational {
        &self.arg
    }

    /// The logarithm; absolute error well below 10⁻¹² for arguments of
    /// moderate size.
    pub fn value(&self) -> f64 {
        ln_rational(&self.arg)
    }

    pub fn add(&self, o: &Self) -> Self {
        LogValue { arg: &self.arg * &o.arg }
    }

    pub fn sub(&self, o: &Self) -> Self {
        LogValue { arg: &self.arg / &o.arg }
    }

    pub fn is_zero(&self) -> bool {
        self.arg.is_one()
    }
}

impl Serialize for LogValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LogValue", 2)?;
        st.serialize_field("log_of", &self.arg.to_string())?;
        st.serialize_field("value", &self.value())?;
        st.end()
    }
}

/// The primitive integer form of a curve evaluated at a point.
fn eval_primitive(d: &PlaneCurve, p: &RationalProjPoint) -> BigInt {
    let f = d.form().integer_primitive();
    let v = f.eval(&p.as_rationals());
    debug_assert!(v.is_integer());
    v.to_integer()
}

fn value_at(d: &PlaneCurve, p: &RationalProjPoint) -> Result<BigInt> {
    let v = eval_primitive(d, p);
    if v.is_zero() {
        return Err(Error::PointOnDivisor);
    }
    Ok(v)
}

fn lambda_inf(d: &PlaneCurve, p: &RationalProjPoint, fx: &BigInt) -> LogValue {
    let m = num_traits::pow(p.max_abs(), d.degree() as usize);
    LogValue::of(Rational::new(m, fx.abs()))
}

fn lambda_p(fx: &BigInt, prime: &BigInt) -> LogValue {
    LogValue::of(Rational::from_integer(num_traits::pow(prime.clone(), ord(fx, prime) as usize)))
}

pub fn local_height(d: &PlaneCurve, p: &RationalProjPoint, v: &Place) -> Result<LogValue> {
    let fx = value_at(d, p)?;
    Ok(match v {
        Place::Infinite => lambda_inf(d, p, &fx),
        Place::Prime(q) => lambda_p(&fx, q),
    })
}

/// `h(P) = log max|x_i|`.
pub fn global_height(p: &RationalProjPoint) -> LogValue {
    LogValue::of(Rational::from_integer(p.max_abs()))
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalEntry {
    pub place: Place,
    pub height: LogValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct HeightReport {
    pub divisor: PlaneCurve,
    pub point: RationalProjPoint,
    /// `d · h(P)`.
    pub global: LogValue,
    /// Places with nonzero local height.
    pub locals: Vec<LocalEntry>,
    /// Finite mass whose prime factors were not separated.
    pub unfactored: Option<LogValue>,
    /// Whether the locals multiply out to the global argument exactly.
    pub identity_exact: bool,
}

pub fn divisor_height(d: &PlaneCurve, p: &RationalProjPoint) -> Result<HeightReport> {
    let fx = value_at(d, p)?;
    let global = LogValue::of(Rational::from_integer(num_traits::pow(
        p.max_abs(),
        d.degree() as usize,
    )));
    let mut locals = vec![LocalEntry {
        place: Place::Infinite,
        height: lambda_inf(d, p, &fx),
    }];
    let (primes, rest) = factor(&fx);
    for (q, e) in primes {
        let h = LogValue::of(Rational::from_integer(num_traits::pow(q.clone(), e as usize)));
        locals.push(LocalEntry {
            place: Place::Prime(q),
            height: h,
        });
    }
    let unfactored = rest.map(|r| LogValue::of(Rational::from_integer(r)));
    let mut total = locals.iter().fold(LogValue::zero(), |a, l| a.add(&l.height));
    if let Some(u) = &unfactored {
        total = total.add(u);
    }
    let identity_exact = total == global;
    Ok(HeightReport {
        divisor: d.clone(),
        point: p.clone(),
        global,
        locals,
        unfactored,
        identity_exact,
    })
}

/// A set of places: everything, or an explicit finite list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaceSet {
    All,
    Only(Vec<Place>),
}

/// `Σ_{v ∈ S} min(λ_{D,v}(P), λ_{E,v}(P))`. Over all places the finite part
/// is `log gcd(F_D(x), F_E(x))`.
pub fn gcd_height(
    d: &PlaneCurve,
    e: &PlaneCurve,
    p: &RationalProjPoint,
    s: &PlaceSet,
) -> Result<LogValue> {
    let fd = value_at(d, p)?;
    let fe = value_at(e, p)?;
    let inf = lambda_inf(d, p, &fd).min(lambda_inf(e, p, &fe));
    match s {
        PlaceSet::All => Ok(inf.add(&LogValue::of(Rational::from_integer(fd.gcd(&fe))))),
        PlaceSet::Only(places) => Ok(places.iter().fold(LogValue::zero(), |acc, v| {
            let term = match v {
                Place::Infinite => inf.clone(),
                Place::Prime(q) => lambda_p(&fd, q).min(lambda_p(&fe, q)),
            };
            acc.add(&term)
        })),
    }
}

/// `h_D(P) − m_{D,S}(P)`: the local height mass outside `S`.
pub fn integrality_defect(d: &PlaneCurve, p: &RationalProjPoint, s: &[Place]) -> Result<LogValue> {
    let fx = value_at(d, p)?;
    let mut finite = Rational::from_integer(fx.abs());
    let mut out = LogValue::zero();
    for v in s {
        if let Place::Prime(q) = v {
            finite /= lambda_p(&fx, q).arg();
        }
    }
    out = out.add(&LogValue::of(finite));
    if !s.contains(&Place::Infinite) {
        out = out.add(&lambda_inf(d, p, &fx));
    }
    Ok(out)
}
