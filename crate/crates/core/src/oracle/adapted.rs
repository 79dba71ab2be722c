//! A basis adapted to two filtrations at once.

use num_traits::Zero;
use serde::Serialize;

use super::Filtration;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdaptedBasis {
    #[serde(skip)]
    pub vectors: Matrix,
    /// For each vector, its deepest level in the first and second filtration.
    pub level_tags: Vec<(usize, usize)>,
}

/// Incremental echelon form for independence tests.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether it was added.
    fn push(&mut self, v: &[Rational]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        let r: Vec<Rational> = r.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}

/// Greedy construction over pairs `(i, j)` in decreasing `i + j`: extend the
/// current independent set by vectors of `W_i ∩ W*_j`. The result contains a
/// basis of every level of both filtrations, which is checked before
/// returning.
pub fn adapted_basis(f1: &Filtration, f2: &Filtration) -> Result<AdaptedBasis> {
    if f1.space() != f2.space() {
        return Err(Error::invalid("filtrations live on different section spaces"));
    }
    let n = f1.space().dim();
    let l1: Vec<Matrix> = (0..f1.depth()).map(|i| f1.level(i)).collect();
    let l2: Vec<Matrix> = (0..f2.depth()).map(|j| f2.level(j)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..l1.len())
        .flat_map(|i| (0..l2.len()).map(move |j| (i, j)))
        .collect();
    pairs.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
    let mut ech = Echelon { rows: Vec::new() };
    let mut vectors = Vec::new();
    for (i, j) in pairs {
        if vectors.len() == n {
            break;
        }
        for v in linalg::intersect_row_spaces(&l1[i], &l2[j], n) {
            if ech.push(&v) {
                vectors.push(v);
            }
        }
    }
    let tag = |levels: &[Matrix], v: &[Rational]| {
        (1..levels.len())
            .rev()
            .find(|&m| linalg::in_span(v, &levels[m]))
            .unwrap_or(0)
    };
    let level_tags: Vec<(usize, usize)> =
        vectors.iter().map(|v| (tag(&l1, v), tag(&l2, v))).collect();
    // Certificate: the vectors tagged at least m in a filtration number
    // exactly dim W_m (they are independent by construction).
    let ok = vectors.len() == n
        && (0..l1.len()).all(|m| level_tags.iter().filter(|t| t.0 >= m).count() == f1.dims()[m])
        && (0..l2.len()).all(|m| level_tags.iter().filter(|t| t.1 >= m).count() == f2.dims()[m]);
    if !ok {
        return Err(Error::Internal("adapted basis certificate failed".into()));
    }
    Ok(AdaptedBasis {
        vectors,
        level_tags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::local::ProjPoint;
    use crate::oracle::{
        filtration_by_divisor, filtration_by_point_power, h0_basis, Ambient, SectionPoint,
    };

    #[test]
    fn line_and_point() {
        let s = h0_basis(Ambient::P2(1));
        let line = Polynomial::parse_in("z", &["x", "y", "z"]).unwrap();
        let f1 = filtration_by_divisor(&s, &line).unwrap();
        let q = SectionPoint::P2(ProjPoint::from_ints(0, 0, 1).unwrap());
        let f2 = filtration_by_point_power(&s, &q).unwrap();
        let b = adapted_basis(&f1, &f2).unwrap();
        let mut tags = b.level_tags.clone();
        tags.sort();
        assert_eq!(tags, vec![(0, 1), (0, 1), (1, 0)]);
    }

    #[test]
    fn identical_filtrations() {
        let s = h0_basis(Ambient::P2(3));
        let q = SectionPoint::P2(ProjPoint::from_ints(1, 2, 1).unwrap());
        let f = filtration_by_point_power(&s, &q).unwrap();
        let b = adapted_basis(&f, &f).unwrap();
        assert!(b.level_tags.iter().all(|(a, c)| a == c));
    }
}
