//! Empirical probes: the weighted proximity sum against `h_A`, and gcds of
//! `aⁿ − 1, bⁿ − 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{eval_primitive, global_height, lambda_inf, lambda_p, LogValue, Place, RationalProjPoint};
use crate::algebra::rational::{int, ln_big, ser};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::local::{rational_common_points, PlaneCurve};
use crate::par::{self, Exec};
use crate::positivity::{beta_divisor, beta_point};
use crate::surface::{blow_up_point, catalogue};

/// One place of the configuration: a curve `D_v` and a reduced point `Y_v`
/// on it, cut out by two lines.
#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceConfig {
    pub place: String,
    pub divisor: String,
    pub point: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SampleConfig {
    pub primes: Vec<u64>,
    pub max_exponent: u32,
    pub count: usize,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeConfig {
    #[serde(default = "one")]
    pub a_degree: u32,
    pub epsilon: f64,
    pub places: Vec<PlaceConfig>,
    #[serde(default)]
    pub points: Vec<String>,
    pub sample: Option<SampleConfig>,
}

fn one() -> u32 {
    1
}

impl ProbeConfig {
    /// Three places with coordinate lines: `D = x, Y = x∩y` at 2, `D = y,
    /// Y = x∩y` at 3, `D = z, Y = z∩x` at ∞.
    pub fn coordinate_lines(epsilon: f64, sample: Option<SampleConfig>) -> Self {
        let pc = |v: &str, d: &str, a: &str, b: &str| PlaceConfig {
            place: v.into(),
            divisor: d.into(),
            point: [a.into(), b.into()],
        };
        ProbeConfig {
            a_degree: 1,
            epsilon,
            places: vec![
                pc("2", "x", "x", "y"),
                pc("3", "y", "x", "y"),
                pc("inf", "z", "z", "x"),
            ],
            points: Vec::new(),
            sample,
        }
    }
}

#[derive(Debug, Clone)]
struct ResolvedPlace {
    place: Place,
    divisor: PlaneCurve,
    lines: [PlaneCurve; 2],
    beta_d: Rational,
    beta_y: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaceBetas {
    pub place: Place,
    #[serde(serialize_with = "ser")]
    pub beta_divisor: Rational,
    #[serde(serialize_with = "ser")]
    pub beta_point: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeEntry {
    pub point: RationalProjPoint,
    pub lhs: f64,
    pub height: f64,
    pub ratio: f64,
    /// `lhs ≤ h_A(P)` decided on integers.
    pub exact_at_most_one: bool,
    pub exceeds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub betas: Vec<PlaceBetas>,
    pub epsilon: f64,
    pub entries: Vec<ProbeEntry>,
    /// Points on a configuration curve or of height zero.
    pub excluded: Vec<RationalProjPoint>,
    /// Nearest-rank quantiles of the ratio at 0, 0.5, 0.9, 0.99 and 1.
    pub quantiles: Vec<(f64, f64)>,
    pub exceedances: Vec<ProbeEntry>,
}

fn resolve(cfg: &ProbeConfig) -> Result<Vec<ResolvedPlace>> {
    if cfg.a_degree == 0 {
        return Err(Error::invalid("A-degree must be positive"));
    }
    if !(cfg.epsilon > 0.0) {
        return Err(Error::invalid("epsilon must be positive"));
    }
    if cfg.places.is_empty() {
        return Err(Error::invalid("the configuration has no places"));
    }
    let p2 = catalogue("P2", &[])?;
    let bl = blow_up_point(&p2)?;
    let a = p2.class_int(&[cfg.a_degree as i64])?;
    let beta_y = beta_point(&a, &bl)?.value;
    let mut out: Vec<ResolvedPlace> = Vec::new();
    for pc in &cfg.places {
        let place = Place::parse(&pc.place)?;
        if out.iter().any(|r| r.place == place) {
            return Err(Error::invalid(format!("place {place} listed twice")));
        }
        let divisor = PlaneCurve::parse(&pc.divisor)?;
        let l0 = PlaneCurve::parse(&pc.point[0])?;
        let l1 = PlaneCurve::parse(&pc.point[1])?;
        if l0.degree() != 1 || l1.degree() != 1 {
            return Err(Error::invalid("Y_v must be cut out by two lines"));
        }
        let q = match rational_common_points(&l0, &l1) {
            Ok(pts) if pts.len() == 1 => pts[0].clone(),
            _ => return Err(Error::invalid("the two lines for Y_v coincide")),
        };
        if !divisor.contains(&q) {
            return Err(Error::invalid(format!("Y_v = {q} does not lie on D_v = {divisor}")));
        }
        let dv = p2.class_int(&[divisor.degree() as i64])?;
        out.push(ResolvedPlace {
            place,
            beta_d: beta_divisor(&a, &dv)?.value,
            beta_y: beta_y.clone(),
            divisor,
            lines: [l0, l1],
        });
    }
    Ok(out)
}

fn lambda(curve: &PlaneCurve, p: &RationalProjPoint, v: &Place) -> Option<LogValue> {
    let fx = eval_primitive(curve, p);
    if fx.is_zero() {
        return None;
    }
    Some(match v {
        Place::Infinite => lambda_inf(curve, p, &fx),
        Place::Prime(q) => lambda_p(&fx, q),
    })
}

/// `Π argᵢ^{kᵢ}` for nonnegative integer exponents, as a rational.
fn power_product(terms: &[(Rational, BigInt)]) -> Rational {
    terms.iter().fold(Rational::one(), |acc, (b, e)| {
        let e: u32 = e.try_into().expect("exponent overflow");
        acc * num_traits::pow(b.clone(), e as usize)
    })
}

fn evaluate(places: &[ResolvedPlace], a_degree: u32, eps: f64, p: &RationalProjPoint) -> Option<ProbeEntry> {
    let h = global_height(p);
    if h.is_zero() {
        return None;
    }
    // LHS = Σ β_D λ_D + (β_Y − β_D) λ_Y, each term the log of a rational.
    let mut weighted: Vec<(Rational, Rational)> = Vec::new();
    for r in places {
        let ld = lambda(&r.divisor, p, &r.place)?;
        let ly = lambda(&r.lines[0], p, &r.place)?.min(lambda(&r.lines[1], p, &r.place)?);
        weighted.push((r.beta_d.clone(), ld.arg().clone()));
        weighted.push((&r.beta_y - &r.beta_d, ly.arg().clone()));
    }
    let lhs: f64 = weighted
        .iter()
        .map(|(w, a)| crate::algebra::rational::to_f64(w) * LogValue::of(a.clone()).value())
        .sum();
    let height = a_degree as f64 * h.value();
    let ratio = lhs / height;
    // Clear weight denominators: LHS ≤ a·h iff Π arg^{L w} ≤ M^{L a}.
    let l = weighted.iter().fold(BigInt::one(), |acc, (w, _)| acc.lcm(w.denom()));
    let lr = Rational::from_integer(l.clone());
    let (mut num, mut den) = (Vec::new(), Vec::new());
    for (w, a) in &weighted {
        let k = (w * &lr).to_integer();
        if k.is_negative() {
            den.push((a.clone(), -k));
        } else {
            num.push((a.clone(), k));
        }
    }
    den.push((h.arg().clone(), &l * BigInt::from(a_degree)));
    let exact_at_most_one = power_product(&num) <= power_product(&den);
    Some(ProbeEntry {
        point: p.clone(),
        lhs,
        height,
        ratio,
        exact_at_most_one,
        exceeds: ratio > 1.0 + eps,
    })
}

fn quantiles(ratios: &mut [f64]) -> Vec<(f64, f64)> {
    if ratios.is_empty() {
        return Vec::new();
    }
    ratios.sort_by(|a, b| a.total_cmp(b));
    let n = ratios.len();
    [0.0, 0.5, 0.9, 0.99, 1.0]
        .iter()
        .map(|&q| {
            let rank = ((q * n as f64).ceil() as usize).clamp(1, n);
            (q, ratios[rank - 1])
        })
        .collect()
}

/// Ledger of `LHS / h_A(P)` over the given points plus any sampled S-unit
/// points. Points exceeding `1 + ε` are collected for triage.
pub fn probe_main_inequality(
    cfg: &ProbeConfig,
    points: &[RationalProjPoint],
    exec: Exec,
) -> Result<ProbeReport> {
    let places = resolve(cfg)?;
    let mut all: Vec<RationalProjPoint> = points.to_vec();
    for s in &cfg.points {
        all.push(RationalProjPoint::parse(s)?);
    }
    if let Some(s) = &cfg.sample {
        all.extend(s_unit_points(&s.primes, s.max_exponent, s.count, s.seed)?);
    }
    let results = par::map(exec, &all, |p| evaluate(&places, cfg.a_degree, cfg.epsilon, p));
    let mut entries = Vec::new();
    let mut excluded = Vec::new();
    for (p, r) in all.iter().zip(results) {
        match r {
            Some(e) => entries.push(e),
            None => excluded.push(p.clone()),
        }
    }
    let mut ratios: Vec<f64> = entries.iter().map(|e| e.ratio).collect();
    let exceedances = entries.iter().filter(|e| e.exceeds).cloned().collect();
    Ok(ProbeReport {
        betas: places
            .iter()
            .map(|r| PlaceBetas {
                place: r.place.clone(),
                beta_divisor: r.beta_d.clone(),
                beta_point: r.beta_y.clone(),
            })
            .collect(),
        epsilon: cfg.epsilon,
        entries,
        excluded,
        quantiles: quantiles(&mut ratios),
        exceedances,
    })
}

fn random_unit(rng: &mut ChaCha8Rng, primes: &[BigInt], e: i64) -> Rational {
    let mut u = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
    for p in primes {
        let k = rng.gen_range(-e..=e);
        let pk = Rational::from_integer(num_traits::pow(p.clone(), k.unsigned_abs() as usize));
        u = if k >= 0 { u * pk } else { u / pk };
    }
    u
}

/// Distinct points `(u : v : 1)` with `u, v = ±Π pᵉ`, `|e| ≤ max_exponent`,
/// drawn from a seeded stream.
pub fn s_unit_points(
    primes: &[u64],
    max_exponent: u32,
    count: usize,
    seed: u64,
) -> Result<Vec<RationalProjPoint>> {
    let ps: Vec<BigInt> = primes
        .iter()
        .map(|&p| match Place::prime(p)? {
            Place::Prime(q) => Ok(q),
            Place::Infinite => unreachable!(),
        })
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < count.saturating_mul(50).max(100) {
        attempts += 1;
        let u = random_unit(&mut rng, &ps, max_exponent as i64);
        let v = random_unit(&mut rng, &ps, max_exponent as i64);
        let p = RationalProjPoint::from_rationals(&[u, v, int(1)])?;
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct BczRow {
    pub n: u32,
    /// `gcd(aⁿ − 1, bⁿ − 1)` in decimal.
    pub gcd: String,
    pub log_gcd: f64,
    pub ratio: f64,
    /// `n` times the tail maximum of the ratio.
    pub epsilon_line: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BczReport {
    pub a: u64,
    pub b: u64,
    pub rows: Vec<BczRow>,
    pub tail_from: u32,
    /// `max (log gcd)/n` over `n ∈ [n_max/2, n_max]`.
    pub tail_max_ratio: f64,
}

pub fn bcz_experiment(a: u64, b: u64, n_max: u32, exec: Exec) -> Result<BczReport> {
    if a < 2 || b < 2 {
        return Err(Error::invalid("bases must be at least 2"));
    }
    if n_max == 0 {
        return Err(Error::invalid("n_max must be positive"));
    }
    let (ba, bb) = (BigInt::from(a), BigInt::from(b));
    let raw = par::map_range(exec, 1, n_max as usize + 1, |n| {
        let g = (num_traits::pow(ba.clone(), n) - 1u32).gcd(&(num_traits::pow(bb.clone(), n) - 1u32));
        let lg = ln_big(&g);
        (n as u32, g.to_string(), lg, lg / n as f64)
    });
    let tail_from = (n_max / 2).max(1);
    let tail_max_ratio = raw
        .iter()
        .filter(|r| r.0 >= tail_from)
        .map(|r| r.3)
        .fold(f64::NEG_INFINITY, f64::max);
    let rows = raw
        .into_iter()
        .map(|(n, gcd, log_gcd, ratio)| BczRow {
            n,
            gcd,
            log_gcd,
            ratio,
            epsilon_line: n as f64 * tail_max_ratio,
        })
        .collect();
    Ok(BczReport {
        a,
        b,
        rows,
        tail_from,
        tail_max_ratio,
    })
}
