//! Exact linear algebra over ℚ on row-major `Vec<Vec<Rational>>` matrices.

use num_traits::{One, Zero};

use super::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut().skip(col) {
            *x *= &inv;
        }
        let prow = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r == row || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (x, y) in line.iter_mut().zip(&prow).skip(col) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(nrows);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

/// Basis of the row space (the nonzero rows of the reduced form).
pub fn row_basis(m: &Matrix) -> Matrix {
    let mut c = m.clone();
    let r = rref(&mut c).len();
    c.truncate(r);
    c
}

/// Basis of `{x : m x = 0}` over `ncols` unknowns.
pub fn kernel(m: &Matrix, ncols: usize) -> Matrix {
    let mut c = m.clone();
    let pivots = rref(&mut c);
    let free: Vec<usize> = (0..ncols).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -c[r][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the intersection of two row spaces in the same ambient space.
pub fn intersect_row_spaces(a: &Matrix, b: &Matrix, ncols: usize) -> Matrix {
    let a = row_basis(a);
    let b = row_basis(b);
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum x_i a_i = sum y_j b_j: kernel of [A^T | -B^T].
    let na = a.len();
    let nb = b.len();
    let sys: Matrix = (0..ncols)
        .map(|k| {
            let mut row: Vec<Rational> = a.iter().map(|r| r[k].clone()).collect();
            row.extend(b.iter().map(|r| -r[k].clone()));
            row
        })
        .collect();
    let ker = kernel(&sys, na + nb);
    let vecs: Matrix = ker
        .iter()
        .map(|x| {
            let mut v = vec![Rational::zero(); ncols];
            for (i, ai) in a.iter().enumerate() {
                if x[i].is_zero() {
                    continue;
                }
                for k in 0..ncols {
                    v[k] += &x[i] * &ai[k];
                }
            }
            v
        })
        .collect();
    row_basis(&vecs)
}

pub fn in_span(v: &[Rational], basis: &Matrix) -> bool {
    let mut m = basis.clone();
    let r0 = rank(&m);
    m.push(v.to_vec());
    rank(&m) == r0
}

/// Solves the square system `m x = b`; `None` if singular.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|r| {
            (0..m)
                .map(|j| r.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(t I - m)` (Faddeev–LeVerrier), as
/// coefficients from degree 0 up to the monic top coefficient.
pub fn char_poly(m: &Matrix) -> Vec<Rational> {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = mat_mul(m, &next);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / Rational::from_integer((k as i64).into());
        mk = next;
    }
    coeffs
}

/// Counts (positive, negative) eigenvalues of a symmetric rational matrix
/// from the sign pattern of its characteristic polynomial (all roots real).
pub fn inertia(m: &Matrix) -> (usize, usize) {
    let p = char_poly(m);
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    let nz: Vec<&Rational> = p.iter().skip(zeros).filter(|c| !c.is_zero()).collect();
    // Descartes is exact for real-rooted polynomials.
    let changes = |v: &[Rational]| -> usize {
        let s: Vec<bool> = v.iter().filter(|c| !c.is_zero()).map(|c| c > &Rational::zero()).collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let pos_coeffs: Vec<Rational> = nz.iter().map(|c| (*c).clone()).collect();
    let pos = changes(&pos_coeffs);
    let neg_coeffs: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(zeros)
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let neg = changes(&neg_coeffs);
    (pos, neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn kernel_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn intersections() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        let i = intersect_row_spaces(&a, &b, 3);
        assert_eq!(i, m(&[&[0, 1, 0]]));
        assert!(in_span(&[int(0), int(2), int(0)], &i));
        assert!(!in_span(&[int(1), int(0), int(0)], &i));
    }

    #[test]
    fn solving() {
        let a = m(&[&[-1, 1], &[1, -1]]);
        assert!(solve(&a, &[int(0), int(0)]).is_none());
        let b = m(&[&[-1, 0], &[0, -1]]);
        assert_eq!(solve(&b, &[int(2), int(3)]).unwrap(), vec![int(-2), int(-3)]);
    }

    #[test]
    fn signatures() {
        assert_eq!(inertia(&m(&[&[0, 1], &[1, 0]])), (1, 1));
        assert_eq!(inertia(&m(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]])), (1, 2));
        assert_eq!(inertia(&m(&[&[-2, 1], &[1, 0]])), (1, 1));
        assert_eq!(
            char_poly(&m(&[&[2, 1], &[1, 2]])),
            vec![int(3), int(-4), int(1)]
        );
    }
}
