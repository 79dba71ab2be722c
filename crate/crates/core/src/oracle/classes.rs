//! Section counts for divisor classes on ℙ², ℙ¹×ℙ¹ and their blowups at
//! one or two points, by monomial enumeration with the blown-up points at
//! coordinate vertices.

use super::beta_from_dims;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::surface::{DivisorClass, SurfaceKind, SurfaceModel};

const MAX_LEVELS: usize = 1 << 20;

fn integral(c: &[Rational]) -> Result<Vec<i64>> {
    c.iter()
        .map(|x| {
            if !x.is_integer() {
                return Err(Error::invalid(format!("class coordinate {x} is not integral")));
            }
            i64::try_from(x.to_integer()).map_err(|_| Error::invalid("class coordinate overflows"))
        })
        .collect()
}

/// Forms of degree `d` with multiplicity `>= k1` at `[0:0:1]` and `>= k2` at
/// `[0:1:0]`.
fn count_p2(d: i64, k1: i64, k2: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let mut n = 0;
    for a in 0..=d {
        for b in 0..=d - a {
            let c = d - a - b;
            if a + b >= k1 && a + c >= k2 {
                n += 1;
            }
        }
    }
    n
}

/// Bihomogeneous forms of bidegree `(p, q)` with multiplicity `>= k` at
/// `([1:0], [1:0])`.
fn count_p1xp1(p: i64, q: i64, k: i64) -> usize {
    if p < 0 || q < 0 {
        return 0;
    }
    let mut n = 0;
    for i in 0..=p {
        for j in 0..=q {
            if i + j >= k {
                n += 1;
            }
        }
    }
    n
}

/// `h⁰` of an integral class; exceptional coefficients of the wrong sign
/// only add fixed components.
pub fn h0_class(s: &SurfaceModel, coords: &[Rational]) -> Result<usize> {
    let c = integral(coords)?;
    let need = |e: i64| (-e).max(0);
    match s.kind() {
        SurfaceKind::P2 => Ok(count_p2(c[0], 0, 0)),
        SurfaceKind::P1xP1 => Ok(count_p1xp1(c[0], c[1], 0)),
        SurfaceKind::BlowupP2(1) => Ok(count_p2(c[0], need(c[1]), 0)),
        SurfaceKind::BlowupP2(2) => Ok(count_p2(c[0], need(c[1]), need(c[2]))),
        SurfaceKind::BlowupP1xP1 => Ok(count_p1xp1(c[0], c[1], need(c[2]))),
        _ => Err(Error::UnsupportedParameter {
            surface: s.name().to_string(),
            detail: "the section oracle covers P2, P1xP1 and their point blowups".into(),
        }),
    }
}

/// `Σ_{m≥1} h⁰(NA − mV) / (N h⁰(NA))` for an effective class `V`.
pub fn beta_finite_n_class(a: &DivisorClass, v: &DivisorClass, n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("N must be positive"));
    }
    let s = a.surface();
    let na = a.scale(&Rational::from_integer(n.into()));
    let h = |m: usize| -> Result<usize> {
        let c = na.sub_scaled(&Rational::from_integer(m.into()), v)?;
        h0_class(s, c.coords())
    };
    if v.is_zero() || h0_class(s, v.coords())? == 0 {
        return Err(Error::invalid("the target class must be effective and nonzero"));
    }
    let mut dims = vec![h(0)?];
    if dims[0] == 0 {
        return Err(Error::NotBig);
    }
    for m in 1..MAX_LEVELS {
        let d = h(m)?;
        dims.push(d);
        if d == 0 {
            return Ok(beta_from_dims(&dims, n));
        }
    }
    Err(Error::Internal("section counts did not terminate".into()))
}
