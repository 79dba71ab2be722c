//! Integer factorization for local height ledgers: trial division, then
//! Miller–Rabin and Pollard–Brent rho on the cofactor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const TRIAL_LIMIT: u64 = 10_000;
const RHO_BUDGET: u64 = 2_000_000;
// These bases make Miller–Rabin deterministic below 3.3 · 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let nm1 = n - BigInt::one();
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho(n: &BigInt, c: u64) -> Option<BigInt> {
    let c = BigInt::from(c);
    let f = |x: &BigInt| (x * x + &c) % n;
    let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
    let mut steps = 0;
    while d.is_one() {
        x = f(&x);
        y = f(&f(&y));
        d = (&x - &y).abs().gcd(n);
        steps += 1;
        if steps > RHO_BUDGET {
            return None;
        }
    }
    (d != *n).then_some(d)
}

/// Prime factorization of `|n| > 0` as sorted `(p, e)` pairs. A cofactor
/// that could not be split within the iteration budget is returned as is
/// in the second component.
pub fn factor(n: &BigInt) -> (Vec<(BigInt, u32)>, Option<BigInt>) {
    assert!(!n.is_zero());
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some(e) => e.1 += 1,
        None => out.push((p, 1)),
    };
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            push(bp.clone(), &mut out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    let mut stuck = BigInt::one();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        match (1..20).find_map(|c| rho(&m, c)) {
            Some(d) => {
                let e = &m / &d;
                stack.push(d);
                stack.push(e);
            }
            None => stuck *= m,
        }
    }
    out.sort();
    (out, (!stuck.is_one()).then_some(stuck))
}

/// `ord_p(n)` for `n != 0`.
pub fn ord(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.abs();
    let mut k = 0;
    while (&n % p).is_zero() {
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_probable_prime(&BigInt::from(2)));
        assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_probable_prime(&BigInt::from(561)));
        assert!(!is_probable_prime(&BigInt::from(1)));
        let m61: BigInt = (BigInt::one() << 61) - 1;
        assert!(is_probable_prime(&m61));
    }

    #[test]
    fn factorizations() {
        let (f, rest) = factor(&BigInt::from(-360));
        assert!(rest.is_none());
        let f: Vec<(i64, u32)> = f.iter().map(|(p, e)| (p.try_into().unwrap(), *e)).collect();
        assert_eq!(f, vec![(2, 3), (3, 2), (5, 1)]);
        let n = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let (f, rest) = factor(&n);
        assert!(rest.is_none());
        assert_eq!(f.len(), 2);
        assert_eq!(ord(&BigInt::from(48), &BigInt::from(2)), 4);
    }
}
