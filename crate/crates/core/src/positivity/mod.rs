//! Beta constants by exact integration of the piecewise-quadratic volume
//! function, Seshadri constants on one-point blowups, and certified lower
//! bounds.
//!
//! `β(A, V)` is computed as `∫₀^τ vol(A − tV) dt / vol(A)`. That integral
//! characterization is treated as an external theorem; the `oracle` module
//! provides an independent finite-N check.

mod bounds;

use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::rational::{int, ser};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::surface::{
    exceptional, pullback, volume, zariski_decompose, zariski_on_support, DivisorClass,
    SurfaceModel,
};

pub use bounds::{
    bound_betalcm, bound_betamultineq, bound_betamultsimple, bound_betaseshadri,
    exclemma_closed_form, BoundCertificate, BoundKind, ExclemmaValue, MultIneqBounds,
};

/// One interval of constant Zariski support with `vol(A − tV) = c0 + c1 t + c2 t²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chamber {
    #[serde(serialize_with = "ser")]
    pub t0: Rational,
    #[serde(serialize_with = "ser")]
    pub t1: Rational,
    #[serde(serialize_with = "crate::algebra::rational::ser_vec")]
    pub vol: Vec<Rational>,
    /// Indices into the surface's negative curves.
    pub support: Vec<usize>,
}

impl Chamber {
    pub fn eval(&self, t: &Rational) -> Rational {
        &self.vol[0] + &self.vol[1] * t + &self.vol[2] * t * t
    }

    pub fn integral(&self) -> Rational {
        let (a, b) = (&self.t0, &self.t1);
        let three = int(3);
        let two = int(2);
        &self.vol[0] * (b - a)
            + &self.vol[1] * (b * b - a * a) / two
            + &self.vol[2] * (b * b * b - a * a * a) / three
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaReport {
    #[serde(serialize_with = "ser")]
    pub value: Rational,
    pub chambers: Vec<Chamber>,
    #[serde(serialize_with = "ser")]
    pub pseff_threshold: Rational,
    #[serde(serialize_with = "ser")]
    pub volume_a: Rational,
}

/// The positive part on a fixed support, as `p0 + t p1`, with coefficients
/// `a0 + t a1`.
struct AffineChamber {
    p0: Vec<Rational>,
    p1: Vec<Rational>,
    a0: Vec<Rational>,
    a1: Vec<Rational>,
}

fn affine_on_support(
    s: &SurfaceModel,
    a: &[Rational],
    v: &[Rational],
    support: &[usize],
) -> Result<AffineChamber> {
    let (p0, a0) = zariski_on_support(s, a, support).ok_or(Error::SingularGram)?;
    let a_minus_v: Vec<Rational> = a.iter().zip(v).map(|(x, y)| x - y).collect();
    let (p_one, a_one) = zariski_on_support(s, &a_minus_v, support).ok_or(Error::SingularGram)?;
    let p1 = p_one.iter().zip(&p0).map(|(x, y)| x - y).collect();
    let a1 = a_one.iter().zip(&a0).map(|(x, y)| x - y).collect();
    Ok(AffineChamber { p0, p1, a0, a1 })
}

/// Roots in the open interval `(lo, hi)` of `c0 + c1 t`.
fn linear_root_in(c0: &Rational, c1: &Rational, lo: &Rational, hi: &Rational) -> Option<Rational> {
    if c1.is_zero() {
        return None;
    }
    let r = -c0 / c1;
    (lo < &r && &r < hi).then_some(r)
}

fn at(a: &[Rational], v: &[Rational], t: &Rational) -> Vec<Rational> {
    a.iter().zip(v).map(|(x, y)| x - t * y).collect()
}

fn chambers_on(
    s: &Arc<SurfaceModel>,
    a: &[Rational],
    v: &[Rational],
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<Chamber>,
) -> Result<()> {
    let mid = (lo + hi) / int(2);
    let d_mid = s.class(at(a, v, &mid))?;
    let z = zariski_decompose(&d_mid)?;
    let support = z.support();
    let ch = affine_on_support(s, a, v, &support)?;
    // Conditions linear in t: a_i(t) >= 0 and P_t·C >= 0 for every curve.
    let mut cuts: Vec<Rational> = Vec::new();
    for (x0, x1) in ch.a0.iter().zip(&ch.a1) {
        cuts.extend(linear_root_in(x0, x1, lo, hi));
    }
    for c in s.effective_generators() {
        let c0 = s.pair(&ch.p0, c);
        let c1 = s.pair(&ch.p1, c);
        cuts.extend(linear_root_in(&c0, &c1, lo, hi));
    }
    if cuts.is_empty() {
        let q0 = s.pair(&ch.p0, &ch.p0);
        let q1 = int(2) * s.pair(&ch.p0, &ch.p1);
        let q2 = s.pair(&ch.p1, &ch.p1);
        out.push(Chamber {
            t0: lo.clone(),
            t1: hi.clone(),
            vol: vec![q0, q1, q2],
            support,
        });
        return Ok(());
    }
    cuts.sort();
    cuts.dedup();
    let mut pts = vec![lo.clone()];
    pts.extend(cuts);
    pts.push(hi.clone());
    for w in pts.windows(2) {
        chambers_on(s, a, v, &w[0], &w[1], out)?;
    }
    Ok(())
}

/// `τ = sup{t : A − tV pseudo-effective}`.
pub fn pseff_threshold(a: &DivisorClass, v: &DivisorClass) -> Result<Rational> {
    let s = a.surface();
    s.nef_generators()
        .iter()
        .filter_map(|m| {
            let vm = s.pair(v.coords(), m);
            vm.is_positive().then(|| s.pair(a.coords(), m) / vm)
        })
        .min()
        .ok_or(Error::ZeroClass)
}

pub fn beta_divisor(a: &DivisorClass, v: &DivisorClass) -> Result<BetaReport> {
    if **a.surface() != **v.surface() {
        return Err(Error::SurfaceMismatch(
            a.surface().name().into(),
            v.surface().name().into(),
        ));
    }
    if v.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !v.is_pseudoeffective() {
        return Err(Error::NotPseudoEffective);
    }
    let volume_a = volume(a);
    if !volume_a.is_positive() {
        return Err(Error::NotBig);
    }
    let tau = pseff_threshold(a, v)?;
    let s = a.surface();
    // Seed the subdivision with the zeros of (A − tV)·C; the recursion
    // refines further wherever the support changes.
    let mut pts = vec![Rational::zero()];
    for c in s.effective_generators() {
        let c0 = s.pair(a.coords(), c);
        let c1 = -s.pair(v.coords(), c);
        pts.extend(linear_root_in(&c0, &c1, &Rational::zero(), &tau));
    }
    pts.push(tau.clone());
    pts.sort();
    pts.dedup();
    let mut raw = Vec::new();
    for w in pts.windows(2) {
        chambers_on(s, a.coords(), v.coords(), &w[0], &w[1], &mut raw)?;
    }
    let chambers = merge(raw);
    let total: Rational = chambers.iter().map(Chamber::integral).sum();
    Ok(BetaReport {
        value: total / &volume_a,
        chambers,
        pseff_threshold: tau,
        volume_a,
    })
}

fn merge(raw: Vec<Chamber>) -> Vec<Chamber> {
    let mut out: Vec<Chamber> = Vec::new();
    for c in raw {
        match out.last_mut() {
            Some(last) if last.vol == c.vol && last.support == c.support && last.t1 == c.t0 => {
                last.t1 = c.t1;
            }
            _ => out.push(c),
        }
    }
    out
}

/// `β(A, Q)` for a general point `Q`: `β(π*A, E)` on the blowup.
pub fn beta_point(a: &DivisorClass, blowup: &Arc<SurfaceModel>) -> Result<BetaReport> {
    let pa = pullback(a, blowup)?;
    beta_divisor(&pa, &exceptional(blowup))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeshadriReport {
    #[serde(serialize_with = "ser")]
    pub value: Rational,
    pub binding_curve: DivisorClass,
}

/// `ε(A, Q) = min (π*A·C)/(E·C)` over effective generators `C` of the
/// blowup meeting `E` positively.
pub fn seshadri_point(
    a: &DivisorClass,
    blowup: &Arc<SurfaceModel>,
) -> Result<SeshadriReport> {
    let pa = pullback(a, blowup)?;
    let e = exceptional(blowup);
    let s = blowup;
    let best = s
        .effective_generators()
        .iter()
        .filter_map(|c| {
            let ec = s.pair(e.coords(), c);
            ec.is_positive()
                .then(|| (s.pair(pa.coords(), c) / ec, c.clone()))
        })
        .min_by(|x, y| x.0.cmp(&y.0))
        .ok_or_else(|| Error::Internal("no curve meets the exceptional class".into()))?;
    let (value, c) = best;
    let check = pa.sub_scaled(&value, &e)?;
    if !check.is_nef() {
        return Err(Error::NotBig);
    }
    Ok(SeshadriReport {
        value,
        binding_curve: s.class(c)?,
    })
}

/// `β(nA, V) = n β(A, V)` and `β(A, nV) = β(A, V)/n`, exposed for tests and
/// for scaling catalogue values.
pub fn scaled_beta(beta: &Rational, a_scale: &Rational, v_scale: &Rational) -> Rational {
    assert!(!v_scale.is_zero());
    beta * a_scale / v_scale
}
