use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{DivisorClass, SurfaceModel};
use crate::algebra::linalg;
use crate::algebra::rational::ser;
use crate::algebra::resultant::det_rational;
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZariskiDecomposition {
    pub positive_part: DivisorClass,
    /// `(i, a_i)` with `i` indexing [`SurfaceModel::negative_curves`] and
    /// `a_i > 0`.
    pub negative_coeffs: Vec<NegativeCoeff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeCoeff {
    pub curve: usize,
    #[serde(serialize_with = "ser")]
    pub coeff: Rational,
}

impl ZariskiDecomposition {
    pub fn negative_part(&self) -> DivisorClass {
        let s = self.positive_part.surface();
        let mut c = vec![Rational::zero(); s.rank()];
        for n in &self.negative_coeffs {
            for (x, y) in c.iter_mut().zip(s.negative_curve(n.curve)) {
                *x += &n.coeff * y;
            }
        }
        s.class(c).unwrap()
    }

    pub fn support(&self) -> Vec<usize> {
        self.negative_coeffs.iter().map(|n| n.curve).collect()
    }

    /// Checks nefness of `P`, orthogonality, positivity of the coefficients,
    /// negative definiteness of the support, and `P + N = D`.
    pub fn verify(&self, d: &DivisorClass) -> bool {
        let s = self.positive_part.surface();
        let p = self.positive_part.coords();
        if !s.is_nef_coords(p) {
            return false;
        }
        for n in &self.negative_coeffs {
            if !n.coeff.is_positive() || !s.pair(p, s.negative_curve(n.curve)).is_zero() {
                return false;
            }
        }
        if !negative_definite(s, &self.support()) {
            return false;
        }
        match self.positive_part.add(&self.negative_part()) {
            Ok(sum) => sum == *d,
            Err(_) => false,
        }
    }
}

fn gram(s: &SurfaceModel, support: &[usize]) -> linalg::Matrix {
    support
        .iter()
        .map(|&i| {
            support
                .iter()
                .map(|&j| s.pair(s.negative_curve(i), s.negative_curve(j)))
                .collect()
        })
        .collect()
}

/// Sylvester's criterion on `-G`.
pub(crate) fn negative_definite(s: &SurfaceModel, support: &[usize]) -> bool {
    let g = gram(s, support);
    (1..=g.len()).all(|k| {
        let minor: linalg::Matrix = g[..k]
            .iter()
            .map(|r| r[..k].iter().map(|x| -x.clone()).collect())
            .collect();
        det_rational(&minor).is_positive()
    })
}

/// Solves `(D - Σ a_i C_i)·C_j = 0` for `j` in the support. Returns the
/// candidate positive part and the coefficients, or `None` if the Gram
/// matrix is singular.
pub fn zariski_on_support(
    s: &SurfaceModel,
    d: &[Rational],
    support: &[usize],
) -> Option<(Vec<Rational>, Vec<Rational>)> {
    if support.is_empty() {
        return Some((d.to_vec(), Vec::new()));
    }
    let g = gram(s, support);
    let rhs: Vec<Rational> = support
        .iter()
        .map(|&j| s.pair(d, s.negative_curve(j)))
        .collect();
    let a = linalg::solve(&g, &rhs)?;
    let mut p = d.to_vec();
    for (ai, &i) in a.iter().zip(support) {
        for (x, y) in p.iter_mut().zip(s.negative_curve(i)) {
            *x -= ai * y;
        }
    }
    Some((p, a))
}

pub fn zariski_decompose(d: &DivisorClass) -> Result<ZariskiDecomposition> {
    if !d.is_pseudoeffective() {
        return Err(Error::NotPseudoEffective);
    }
    let s = d.surface();
    let nneg = s.negative_curves().len();
    let mut support: Vec<usize> = (0..nneg)
        .filter(|&i| s.pair(d.coords(), s.negative_curve(i)).is_negative())
        .collect();
    loop {
        let (p, a) = zariski_on_support(s, d.coords(), &support).ok_or(Error::SingularGram)?;
        let extra: Vec<usize> = (0..nneg)
            .filter(|i| !support.contains(i))
            .filter(|&i| s.pair(&p, s.negative_curve(i)).is_negative())
            .collect();
        if extra.is_empty() {
            let negative_coeffs = support
                .iter()
                .zip(a)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&curve, coeff)| NegativeCoeff { curve, coeff })
                .collect();
            let z = ZariskiDecomposition {
                positive_part: s.class(p)?,
                negative_coeffs,
            };
            if !z.verify(d) {
                return Err(Error::Internal(format!(
                    "Zariski certificate failed for {d} on {}",
                    s.name()
                )));
            }
            return Ok(z);
        }
        support.extend(extra);
        support.sort_unstable();
    }
}
