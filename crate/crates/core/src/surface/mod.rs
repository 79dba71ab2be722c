//! Surfaces presented by lattice data: Picard rank, intersection matrix and
//! hard-coded nef / effective cone generators. Also Zariski decomposition,
//! volumes, and blowups at a general point.

mod catalogue;
mod zariski;

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::rational::{int, ser_vec};
use crate::algebra::Rational;
use crate::error::{Error, Result};

pub use catalogue::{blow_up_point, catalogue, exceptional, parse_descriptor, pullback, SurfaceKind};
pub use zariski::{zariski_decompose, zariski_on_support, NegativeCoeff, ZariskiDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    name: String,
    kind: SurfaceKind,
    labels: Vec<String>,
    matrix: Vec<Vec<i64>>,
    form: Matrix,
    nef: Vec<Vec<Rational>>,
    effective: Vec<Vec<Rational>>,
    negative: Vec<usize>,
}

/// Explicit lattice data for a surface outside the built-in catalogue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomSurface {
    pub name: String,
    pub basis_labels: Vec<String>,
    pub intersection_matrix: Vec<Vec<i64>>,
    pub nef_generators: Vec<Vec<i64>>,
    pub effective_generators: Vec<Vec<i64>>,
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

impl SurfaceModel {
    pub(crate) fn build(
        name: String,
        kind: SurfaceKind,
        labels: &[&str],
        matrix: Vec<Vec<i64>>,
        nef: &[&[i64]],
        effective: &[&[i64]],
    ) -> Self {
        let form: Matrix = matrix.iter().map(|r| ints(r)).collect();
        let nef: Vec<Vec<Rational>> = nef.iter().map(|v| ints(v)).collect();
        let effective: Vec<Vec<Rational>> = effective.iter().map(|v| ints(v)).collect();
        let mut s = SurfaceModel {
            name,
            kind,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            matrix,
            form,
            nef,
            effective,
            negative: Vec::new(),
        };
        s.negative = (0..s.effective.len())
            .filter(|&i| s.pair(&s.effective[i], &s.effective[i]).is_negative())
            .collect();
        s
    }

    /// A validated surface from explicit data.
    pub fn custom(c: &CustomSurface) -> Result<Arc<Self>> {
        let rho = c.basis_labels.len();
        let bad = |m: &str| Error::invalid(format!("custom surface `{}`: {m}", c.name));
        if rho == 0 || rho > 4 {
            return Err(bad("Picard rank must be between 1 and 4"));
        }
        if c.intersection_matrix.len() != rho || c.intersection_matrix.iter().any(|r| r.len() != rho) {
            return Err(bad("intersection matrix has the wrong shape"));
        }
        for v in c.nef_generators.iter().chain(&c.effective_generators) {
            if v.len() != rho {
                return Err(bad("generator of the wrong length"));
            }
        }
        let labels: Vec<&str> = c.basis_labels.iter().map(|s| s.as_str()).collect();
        let nef: Vec<&[i64]> = c.nef_generators.iter().map(|v| v.as_slice()).collect();
        let eff: Vec<&[i64]> = c.effective_generators.iter().map(|v| v.as_slice()).collect();
        let s = Self::build(
            c.name.clone(),
            SurfaceKind::Custom,
            &labels,
            c.intersection_matrix.clone(),
            &nef,
            &eff,
        );
        s.validate()?;
        Ok(Arc::new(s))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn intersection_matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn nef_generators(&self) -> &[Vec<Rational>] {
        &self.nef
    }

    pub fn effective_generators(&self) -> &[Vec<Rational>] {
        &self.effective
    }

    /// Indices into [`Self::effective_generators`] of curves with negative
    /// self-intersection.
    pub fn negative_curves(&self) -> &[usize] {
        &self.negative
    }

    pub fn negative_curve(&self, i: usize) -> &[Rational] {
        &self.effective[self.negative[i]]
    }

    /// The bilinear form on coordinate vectors.
    pub fn pair(&self, a: &[Rational], b: &[Rational]) -> Rational {
        linalg::dot(a, &linalg::mat_vec(&self.form, b))
    }

    /// Same lattice, with one symmetric pair of entries shifted by `delta`.
    /// Validation is skipped; this exists for fault-injection tests.
    pub fn with_perturbed_entry(&self, i: usize, j: usize, delta: i64) -> Self {
        let mut m = self.matrix.clone();
        m[i][j] += delta;
        if i != j {
            m[j][i] += delta;
        }
        let labels: Vec<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        let to_ints = |v: &Vec<Rational>| -> Vec<i64> {
            v.iter().map(|q| q.to_integer().try_into().unwrap()).collect()
        };
        let nef: Vec<Vec<i64>> = self.nef.iter().map(to_ints).collect();
        let eff: Vec<Vec<i64>> = self.effective.iter().map(to_ints).collect();
        let nef: Vec<&[i64]> = nef.iter().map(|v| v.as_slice()).collect();
        let eff: Vec<&[i64]> = eff.iter().map(|v| v.as_slice()).collect();
        Self::build(self.name.clone(), self.kind, &labels, m, &nef, &eff)
    }

    /// Checks symmetry, the Hodge index signature, cone duality and the
    /// extremality witness of every nef generator.
    pub fn validate(&self) -> Result<()> {
        let rho = self.rank();
        let bad = |m: String| Err(Error::Internal(format!("surface `{}`: {m}", self.name)));
        for i in 0..rho {
            for j in 0..rho {
                if self.matrix[i][j] != self.matrix[j][i] {
                    return bad("intersection matrix not symmetric".into());
                }
            }
        }
        let (pos, _) = linalg::inertia(&self.form);
        if pos != 1 {
            return bad(format!("{pos} positive eigenvalues, expected 1"));
        }
        for (i, n) in self.nef.iter().enumerate() {
            let mut zeros = Vec::new();
            for (j, c) in self.effective.iter().enumerate() {
                let v = self.pair(n, c);
                if v.is_negative() {
                    return bad(format!("nef generator {i} pairs negatively with curve {j}"));
                }
                if v.is_zero() {
                    zeros.push(c.clone());
                }
            }
            if linalg::rank(&zeros) + 1 < rho {
                return bad(format!("nef generator {i} is not extremal"));
            }
        }
        Ok(())
    }

    pub fn class(self: &Arc<Self>, coords: Vec<Rational>) -> Result<DivisorClass> {
        if coords.len() != self.rank() {
            return Err(Error::invalid(format!(
                "`{}` has Picard rank {}, got {} coordinates",
                self.name,
                self.rank(),
                coords.len()
            )));
        }
        Ok(DivisorClass {
            surface: Arc::clone(self),
            coords,
        })
    }

    pub fn class_int(self: &Arc<Self>, coords: &[i64]) -> Result<DivisorClass> {
        self.class(ints(coords))
    }

    pub fn zero_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            surface: Arc::clone(self),
            coords: vec![Rational::zero(); self.rank()],
        }
    }

    pub fn is_nef_coords(&self, d: &[Rational]) -> bool {
        self.effective.iter().all(|c| !self.pair(d, c).is_negative())
    }

    pub fn is_pseudoeffective_coords(&self, d: &[Rational]) -> bool {
        self.nef.iter().all(|n| !self.pair(d, n).is_negative())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DivisorClass {
    surface: Arc<SurfaceModel>,
    coords: Vec<Rational>,
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorClass({} on {})", self, self.surface.name)
    }
}

impl DivisorClass {
    pub fn surface(&self) -> &Arc<SurfaceModel> {
        &self.surface
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.surface, &o.surface) || *self.surface == *o.surface {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch(
                self.surface.name.clone(),
                o.surface.name.clone(),
            ))
        }
    }

    fn with(&self, coords: Vec<Rational>) -> Self {
        DivisorClass {
            surface: Arc::clone(&self.surface),
            coords,
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.with(self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(self.with(self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with(self.coords.iter().map(|a| a * c).collect())
    }

    /// `self - t * o`.
    pub fn sub_scaled(&self, t: &Rational, o: &Self) -> Result<Self> {
        self.sub(&o.scale(t))
    }

    pub fn self_intersection(&self) -> Rational {
        self.surface.pair(&self.coords, &self.coords)
    }

    pub fn is_nef(&self) -> bool {
        self.surface.is_nef_coords(&self.coords)
    }

    pub fn is_pseudoeffective(&self) -> bool {
        self.surface.is_pseudoeffective_coords(&self.coords)
    }

    pub fn is_big(&self) -> bool {
        volume(self).is_positive()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, l) in self.coords.iter().zip(&self.surface.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if a == int(1) {
                write!(f, "{sep}{l}")?;
            } else {
                write!(f, "{sep}{a}*{l}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Coords<'a>(&'a [Rational]);
        impl Serialize for Coords<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                ser_vec(self.0, s)
            }
        }
        let mut st = s.serialize_struct("DivisorClass", 3)?;
        st.serialize_field("surface", &self.surface.name)?;
        st.serialize_field("coords", &Coords(&self.coords))?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> Result<Rational> {
    a.check_same(b)?;
    Ok(a.surface.pair(&a.coords, &b.coords))
}

pub fn is_nef(d: &DivisorClass) -> bool {
    d.is_nef()
}

pub fn is_pseudoeffective(d: &DivisorClass) -> bool {
    d.is_pseudoeffective()
}

/// `vol(D) = P^2` for the positive part, and 0 off the pseudo-effective cone.
pub fn volume(d: &DivisorClass) -> Rational {
    match zariski_decompose(d) {
        Ok(z) => z.positive_part.self_intersection(),
        Err(_) => Rational::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn intersections() {
        let p2 = catalogue("P2", &[]).unwrap();
        let a = p2.class_int(&[3]).unwrap();
        let b = p2.class_int(&[5]).unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), int(15));
        let q = catalogue("P1xP1", &[]).unwrap();
        let d = q.class_int(&[1, 1]).unwrap();
        assert_eq!(intersect(&d, &d).unwrap(), int(2));
        assert!(matches!(intersect(&a, &d), Err(Error::SurfaceMismatch(..))));
        let f1 = catalogue("BlowupP2", &[1]).unwrap();
        assert_eq!(
            intersect(&f1.class_int(&[1, -1]).unwrap(), &f1.class_int(&[0, 1]).unwrap()).unwrap(),
            int(1)
        );
    }

    #[test]
    fn positivity_tests() {
        let f1 = catalogue("BlowupP2", &[1]).unwrap();
        assert!(f1.class_int(&[1, -1]).unwrap().is_nef());
        assert!(!f1.class_int(&[1, -2]).unwrap().is_nef());
        assert!(!f1.class(vec![int(1), rat(-3, 2)]).unwrap().is_pseudoeffective());
        let p2 = catalogue("P2", &[]).unwrap();
        assert!(!p2.class_int(&[-1]).unwrap().is_nef());
        assert!(p2.zero_class().is_pseudoeffective());
        let q = catalogue("P1xP1", &[]).unwrap();
        assert!(q.class_int(&[0, 1]).unwrap().is_pseudoeffective());
    }

    #[test]
    fn display() {
        let s = catalogue("BlowupP1xP1", &[1]).unwrap();
        let d = s.class(vec![int(1), int(1), rat(-3, 2)]).unwrap();
        assert_eq!(d.to_string(), "f1 + f2 - 3/2*E");
        assert_eq!(s.zero_class().to_string(), "0");
    }

    #[test]
    fn custom_surfaces_validated() {
        let good = CustomSurface {
            name: "F1".into(),
            basis_labels: vec!["H".into(), "E".into()],
            intersection_matrix: vec![vec![1, 0], vec![0, -1]],
            nef_generators: vec![vec![1, 0], vec![1, -1]],
            effective_generators: vec![vec![0, 1], vec![1, -1]],
        };
        let s = SurfaceModel::custom(&good).unwrap();
        assert_eq!(s.negative_curves(), &[0]);
        let mut bad = good.clone();
        bad.intersection_matrix = vec![vec![1, 0], vec![0, 1]];
        assert!(SurfaceModel::custom(&bad).is_err());
        let mut bad = good;
        bad.nef_generators = vec![vec![1, 0], vec![2, -1]];
        assert!(SurfaceModel::custom(&bad).is_err());
    }
}
