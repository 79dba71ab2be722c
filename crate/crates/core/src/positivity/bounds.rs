//! Lemma-level lower bounds for beta constants. Irrational values are
//! rounded down and the refinement width is recorded.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::interval::root_interval;
use crate::algebra::rational::{int, ser, ser_opt};
use crate::algebra::{sqrt_interval, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Betalcm,
    Betaseshadri,
    Betamultsimple,
    Betamultineq,
    Exclemma,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledValue {
    pub label: String,
    #[serde(serialize_with = "ser")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    #[serde(serialize_with = "ser")]
    pub bound_lo: Rational,
    pub inputs: Vec<LabeledValue>,
    /// Whether the target is known to exceed `bound_lo` strictly.
    pub strict: bool,
    /// Width of the radical enclosure used, if any.
    #[serde(serialize_with = "ser_opt")]
    pub width: Option<Rational>,
}

fn labeled(pairs: &[(&str, &Rational)]) -> Vec<LabeledValue> {
    pairs
        .iter()
        .map(|(l, v)| LabeledValue {
            label: l.to_string(),
            value: (*v).clone(),
        })
        .collect()
}

/// `β(A, Y) >= m β(A, D) + n β(A, E)` when `mY ⊂ D` and `nY ⊂ E` meet
/// properly.
pub fn bound_betalcm(beta_d: &Rational, beta_e: &Rational, m: u32, n: u32) -> BoundCertificate {
    let (mq, nq) = (int(m as i64), int(n as i64));
    BoundCertificate {
        kind: BoundKind::Betalcm,
        bound_lo: &mq * beta_d + &nq * beta_e,
        inputs: labeled(&[("betaD", beta_d), ("betaE", beta_e), ("m", &mq), ("n", &nq)]),
        strict: false,
        width: None,
    }
}

/// `β(A, Y) >= β(A, D) + ε(A, Y)/(r+1)`.
pub fn bound_betaseshadri(beta_d: &Rational, eps: &Rational, r: u32) -> BoundCertificate {
    let rq = int(r as i64);
    BoundCertificate {
        kind: BoundKind::Betaseshadri,
        bound_lo: beta_d + eps / int(r as i64 + 1),
        inputs: labeled(&[("betaD", beta_d), ("eps", eps), ("r", &rq)]),
        strict: false,
        width: None,
    }
}

/// `β(A, Y) >= (r/(r+1)) (vol(A)/μ)^(1/r)` for `Y` supported at a point.
pub fn bound_betamultsimple(
    vol_a: &Rational,
    mu: i64,
    r: u32,
    precision: &Rational,
) -> Result<BoundCertificate> {
    if mu <= 0 {
        return Err(Error::invalid("multiplicity must be positive"));
    }
    if r == 0 {
        return Err(Error::invalid("dimension must be positive"));
    }
    if !vol_a.is_positive() {
        return Err(Error::NotBig);
    }
    let muq = int(mu);
    let root = root_interval(&(vol_a / &muq), r, precision)?;
    let factor = Rational::new((r as i64).into(), (r as i64 + 1).into());
    let rq = int(r as i64);
    Ok(BoundCertificate {
        kind: BoundKind::Betamultsimple,
        bound_lo: &factor * &root.lo,
        inputs: labeled(&[("volA", vol_a), ("mu", &muq), ("r", &rq)]),
        strict: false,
        width: (!root.is_point()).then(|| &factor * root.width()),
    })
}

/// The two certificates of the multiplicity-gap lemma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultIneqBounds {
    /// `β(A,Y) − β(A,D) >= (2/3) x y / (1 + y)` with `x = √(A²/μ)`, `y = √(D²/μ)`.
    pub gap: BoundCertificate,
    /// The weaker strict bound `β(A,Y) − β(A,D) > x/3`.
    pub strict_gap: BoundCertificate,
}

pub fn bound_betamultineq(
    vol_a: &Rational,
    d2: &Rational,
    mu: i64,
    precision: &Rational,
) -> Result<MultIneqBounds> {
    if mu <= 0 {
        return Err(Error::invalid("multiplicity must be positive"));
    }
    let muq = int(mu);
    if muq >= *d2 {
        return Err(Error::Hypothesis(format!(
            "multiplicity {mu} is not below D^2 = {d2}"
        )));
    }
    if !vol_a.is_positive() {
        return Err(Error::NotBig);
    }
    let x = sqrt_interval(&(vol_a / &muq), precision)?;
    let y = sqrt_interval(&(d2 / &muq), precision)?;
    let two_thirds = Rational::new(2.into(), 3.into());
    // y/(1+y) is increasing, so lower endpoints give a lower bound.
    let lo = &two_thirds * &x.lo * &y.lo / (int(1) + &y.lo);
    let hi = &two_thirds * &x.hi * &y.hi / (int(1) + &y.hi);
    let inputs = labeled(&[("volA", vol_a), ("D2", d2), ("mu", &muq)]);
    let third = Rational::new(1.into(), 3.into());
    let exact = x.is_point() && y.is_point();
    Ok(MultIneqBounds {
        gap: BoundCertificate {
            kind: BoundKind::Betamultineq,
            bound_lo: lo.clone(),
            inputs: inputs.clone(),
            strict: false,
            width: (!exact).then(|| hi - lo),
        },
        strict_gap: BoundCertificate {
            kind: BoundKind::Betamultineq,
            bound_lo: &third * &x.lo,
            inputs,
            strict: true,
            width: (!x.is_point()).then(|| &third * x.width()),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExclemmaValue {
    #[serde(serialize_with = "ser")]
    pub value: Rational,
    /// Set for the limiting case `δ = 0`, where the value is exactly
    /// `1/(n+1)` rather than strictly above it.
    pub boundary: bool,
}

/// `(1/(n+1)) (Dⁿ − γ δ^(n+1)) / (Dⁿ − γ δⁿ)`.
pub fn exclemma_closed_form(
    dn: &Rational,
    gamma: &Rational,
    delta: &Rational,
    n: u32,
) -> Result<ExclemmaValue> {
    let base = Rational::new(1.into(), (n as i64 + 1).into());
    if delta.is_zero() {
        return Ok(ExclemmaValue {
            value: base,
            boundary: true,
        });
    }
    if delta.is_negative() || *delta >= int(1) {
        return Err(Error::invalid(format!("delta = {delta} is outside (0, 1)")));
    }
    let dpow = num_traits::pow(delta.clone(), n as usize);
    let denom = dn - gamma * &dpow;
    if !denom.is_positive() {
        return Err(Error::invalid("gamma * delta^n must be below D^n"));
    }
    let num = dn - gamma * &dpow * delta;
    Ok(ExclemmaValue {
        value: base * num / denom,
        boundary: false,
    })
}
