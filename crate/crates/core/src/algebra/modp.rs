//! Dense polynomial and matrix arithmetic over small prime fields.
//!
//! Used only as a source of certificates that remain valid over ℚ: a
//! polynomial irreducible mod p (with the leading coefficient a unit) is
//! irreducible over ℚ, and a matrix rank mod p is a lower bound for its rank
//! over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub type ModPoly = Vec<u64>;

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn reduce(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `>= start`, in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime_u64(n))
}

pub fn trim(mut f: ModPoly) -> ModPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn from_big(coeffs: &[BigInt], p: u64) -> ModPoly {
    trim(coeffs.iter().map(|c| reduce(c, p)).collect())
}

pub fn degree(f: &ModPoly) -> Option<usize> {
    (!f.is_empty()).then(|| f.len() - 1)
}

pub fn sub(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub fn mul(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub fn div_rem(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let inv = invmod(*b.last().unwrap(), p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mulmod(*r.last().unwrap(), inv, p);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[i + shift] = (r[i + shift] + p - mulmod(c, bc, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    div_rem(a, b, p).1
}

pub fn monic(f: &ModPoly, p: u64) -> ModPoly {
    match f.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = invmod(l, p);
            f.iter().map(|&c| mulmod(c, inv, p)).collect()
        }
    }
}

pub fn gcd(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(f: &ModPoly, p: u64) -> ModPoly {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

pub fn eval(f: &ModPoly, x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
}

fn powmod_poly(base: &ModPoly, mut e: u64, m: &ModPoly, p: u64) -> ModPoly {
    let mut result: ModPoly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

pub fn is_squarefree(f: &ModPoly, p: u64) -> bool {
    degree(&gcd(f, &derivative(f, p), p)) == Some(0)
}

/// Degrees of the irreducible factors of a squarefree polynomial mod p
/// (distinct-degree factorization).
pub fn factor_degrees(f: &ModPoly, p: u64) -> Vec<usize> {
    let mut f = monic(f, p);
    let mut out = Vec::new();
    let x: ModPoly = vec![0, 1];
    let mut h = x.clone();
    let mut i = 1;
    while let Some(df) = degree(&f) {
        if df < 2 * i {
            if df > 0 {
                out.push(df);
            }
            break;
        }
        h = powmod_poly(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if let Some(dg) = degree(&g) {
            if dg > 0 {
                out.extend(std::iter::repeat_n(i, dg / i));
                f = div_rem(&f, &g, p).0;
                h = rem(&h, &f, p);
            }
        }
        i += 1;
    }
    out
}

/// Rank of a matrix over F_p using Gaussian elimination.
pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = invmod(m[rank][col], p);
        let prow: Vec<u64> = m[rank].iter().map(|&x| mulmod(x, inv, p)).collect();
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..ncols {
                    m[r][c] = (m[r][c] + p - mulmod(f, prow[c], p)) % p;
                }
            }
        }
        m[rank] = prow;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Reduces a big-integer matrix mod p.
pub fn reduce_matrix(rows: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| r.iter().map(|x| if x.is_zero() { 0 } else { reduce(x, p) }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime_u64(1_000_003));
        assert!(!is_prime_u64(1_000_001));
        assert_eq!(primes_from(10).take(3).collect::<Vec<_>>(), vec![11, 13, 17]);
    }

    #[test]
    fn ddf_patterns() {
        // x^4 + 1 splits into quadratics mod 3.
        let f: ModPoly = vec![1, 0, 0, 0, 1];
        let mut d = factor_degrees(&f, 3);
        d.sort();
        assert_eq!(d, vec![2, 2]);
        // x^2 + 1 is irreducible mod 7.
        assert_eq!(factor_degrees(&vec![1, 0, 1], 7), vec![2]);
        // (x-1)(x-2)(x-3) mod 11.
        let g = mul(&mul(&vec![10, 1], &vec![9, 1], 11), &vec![8, 1], 11);
        assert_eq!(factor_degrees(&g, 11), vec![1, 1, 1]);
    }

    #[test]
    fn modular_rank() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&rows, 101), 2);
    }
}
