//! Closed rational intervals, certified radicals, and exact sign
//! determination for expressions in two square roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rational::{exact_sqrt, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalInterval {
    #[serde(serialize_with = "crate::algebra::rational::ser")]
    pub lo: Rational,
    #[serde(serialize_with = "crate::algebra::rational::ser")]
    pub hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        RationalInterval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        RationalInterval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn is_subset_of(&self, o: &Self) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    /// `Some(sign)` when the interval excludes zero or is the point zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn add_scalar(&self, q: &Rational) -> Self {
        Self::new(&self.lo + q, &self.hi + q)
    }

    /// Reciprocal of an interval not containing zero.
    pub fn recip(&self) -> Option<Self> {
        if self.lo.is_positive() || self.hi.is_negative() {
            Some(Self::new(self.hi.recip(), self.lo.recip()))
        } else {
            None
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.recip()?))
    }
}

/// Certified enclosure of `q^(1/r)` of width at most `precision`. Exact
/// when `q` is an `r`-th power in ℚ. Shrinking `precision` never widens
/// the result: the enclosures are nested.
pub fn root_interval(q: &Rational, r: u32, precision: &Rational) -> Result<RationalInterval> {
    assert!(r >= 1);
    if q.is_negative() {
        return Err(Error::NegativeSqrt);
    }
    if !precision.is_positive() {
        return Err(Error::invalid("precision must be positive"));
    }
    if q.is_zero() {
        return Ok(RationalInterval::point(Rational::zero()));
    }
    let a = q.numer();
    let b = q.denom();
    // q^(1/r) = (a b^(r-1))^(1/r) / b.
    let radicand = a * b.pow(r - 1);
    let root = radicand.nth_root(r);
    if root.pow(r) == radicand {
        return Ok(RationalInterval::point(Rational::new(root, b.clone())));
    }
    // Smallest k with 1 / (b 2^k) <= precision.
    let mut k: u32 = 0;
    let target = precision.recip();
    while Rational::from_integer(b << k as usize) < target {
        k += 1;
    }
    let scaled = radicand << (r * k) as usize;
    let s = scaled.nth_root(r);
    let den = b << k as usize;
    let lo = Rational::new(s.clone(), den.clone());
    let hi = Rational::new(s + BigInt::one(), den);
    Ok(RationalInterval::new(lo, hi))
}

pub fn sqrt_interval(q: &Rational, precision: &Rational) -> Result<RationalInterval> {
    root_interval(q, 2, precision)
}

/// Default refinement floor for strict comparisons: 10^-40.
pub fn default_floor() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10).pow(40))
}

/// Refines `f(precision)` by repeated halving (starting at 1/16) until its
/// sign is determined, or the precision drops below `floor`.
pub fn refine_sign<F>(f: F, floor: &Rational) -> Option<Ordering>
where
    F: Fn(&Rational) -> RationalInterval,
{
    let mut prec = Rational::new(BigInt::one(), BigInt::from(16));
    loop {
        let iv = f(&prec);
        if let Some(s) = iv.sign() {
            return Some(s);
        }
        if &prec < floor {
            return None;
        }
        prec /= Rational::from_integer(BigInt::from(1u32 << 16));
    }
}

/// The real number `c0 + c1 √a + c2 √b + c3 √(ab)` for rationals `a, b >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdSign {
    pub c: [Rational; 4],
    pub a: Rational,
    pub b: Rational,
}

fn sign_of(q: &Rational) -> Ordering {
    q.cmp(&Rational::zero())
}

/// Exact sign of `p + q √a`.
fn sign_one(p: &Rational, q: &Rational, a: &Rational) -> Ordering {
    if let Some(r) = exact_sqrt(a) {
        return sign_of(&(p + q * r));
    }
    let (sp, sq) = (sign_of(p), sign_of(q));
    if sq == Ordering::Equal || sp == sq {
        return if sp == Ordering::Equal { sq } else { sp };
    }
    if sp == Ordering::Equal {
        return sq;
    }
    // Opposite signs: compare p^2 with q^2 a.
    let d = sign_of(&(p * p - q * q * a));
    match sp {
        Ordering::Greater => d,
        _ => d.reverse(),
    }
}

impl SurdSign {
    pub fn new(c: [Rational; 4], a: Rational, b: Rational) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        Ok(SurdSign { c, a, b })
    }

    /// Exact sign by two rounds of squaring.
    pub fn sign(&self) -> Ordering {
        let [c0, c1, c2, c3] = &self.c;
        let (a, b) = (&self.a, &self.b);
        // X + Y √b with X = c0 + c1 √a, Y = c2 + c3 √a.
        if let Some(r) = exact_sqrt(b) {
            return sign_one(&(c0 + c2 * &r), &(c1 + c3 * &r), a);
        }
        let sx = sign_one(c0, c1, a);
        let sy = sign_one(c2, c3, a);
        if sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal || sx == sy {
            return sy;
        }
        // X^2 - b Y^2 = P + Q √a.
        let two = Rational::from_integer(BigInt::from(2));
        let p = c0 * c0 + c1 * c1 * a - b * (c2 * c2 + c3 * c3 * a);
        let q = &two * c0 * c1 - &two * b * c2 * c3;
        let d = sign_one(&p, &q, a);
        match sx {
            Ordering::Greater => d,
            _ => d.reverse(),
        }
    }

    /// Certified enclosure with radicals refined to `precision`.
    pub fn enclose(&self, precision: &Rational) -> RationalInterval {
        let sa = sqrt_interval(&self.a, precision).unwrap();
        let sb = sqrt_interval(&self.b, precision).unwrap();
        let sab = sa.mul(&sb);
        RationalInterval::point(self.c[0].clone())
            .add(&sa.scale(&self.c[1]))
            .add(&sb.scale(&self.c[2]))
            .add(&sab.scale(&self.c[3]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn perfect_squares_exact() {
        let p = rat(1, 100);
        assert_eq!(sqrt_interval(&int(4), &p).unwrap(), RationalInterval::point(int(2)));
        assert_eq!(sqrt_interval(&int(0), &p).unwrap(), RationalInterval::point(int(0)));
        assert_eq!(sqrt_interval(&rat(9, 4), &p).unwrap(), RationalInterval::point(rat(3, 2)));
        assert_eq!(root_interval(&int(27), 3, &p).unwrap(), RationalInterval::point(int(3)));
        assert_eq!(sqrt_interval(&int(-1), &p), Err(Error::NegativeSqrt));
    }

    #[test]
    fn two_by_bisection() {
        // Oracle: plain bisection on [1, 2] down to width 1/128.
        let (mut lo, mut hi) = (int(1), int(2));
        while &hi - &lo > rat(1, 128) {
            let mid = (&lo + &hi) / int(2);
            if &mid * &mid <= int(2) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let iv = sqrt_interval(&int(2), &rat(1, 100)).unwrap();
        assert!(iv.width() <= rat(1, 100));
        assert!(&iv.lo * &iv.lo <= int(2) && int(2) <= &iv.hi * &iv.hi);
        assert!(iv.lo <= hi && lo <= iv.hi);
    }

    #[test]
    fn surd_signs() {
        let z = Rational::zero;
        // (sqrt3 - 1)^2 - 1/4 = 15/4 - 2 sqrt3 > 0.
        let s = SurdSign::new([rat(15, 4), int(-2), z(), z()], int(3), int(3)).unwrap();
        assert_eq!(s.sign(), Ordering::Greater);
        let e = SurdSign::new([z(), z(), z(), int(1)], int(2), int(3)).unwrap();
        assert_eq!(e.sign(), Ordering::Greater);
        let e = SurdSign::new([z(), z(), z(), z()], int(2), int(3)).unwrap();
        assert_eq!(e.sign(), Ordering::Equal);
        // sqrt2 + sqrt3 = 3.1462...
        let f = SurdSign::new([rat(-22, 7), int(1), int(1), z()], int(2), int(3)).unwrap();
        assert_eq!(f.sign(), Ordering::Greater);
        let g = SurdSign::new([rat(-16, 5), int(1), int(1), z()], int(2), int(3)).unwrap();
        assert_eq!(g.sign(), Ordering::Less);
        // (sqrt2 - sqrt3)^2 = 5 - 2 sqrt6 vanishes only after expansion.
        let h = SurdSign::new([int(5), z(), z(), int(-2)], int(2), int(3)).unwrap();
        let expanded = SurdSign::new([int(5), z(), z(), int(-2)], int(2), int(3))
            .unwrap()
            .enclose(&rat(1, 1000));
        assert_eq!(h.sign(), Ordering::Greater);
        assert!(expanded.lo > Rational::zero());
        // sqrt2 - sqrt3 + 0 sqrt6 < 0, and an exact zero: sqrt6 - sqrt2 sqrt3.
        let k = SurdSign::new([z(), int(1), int(-1), z()], int(2), int(3)).unwrap();
        assert_eq!(k.sign(), Ordering::Less);
        let zero = SurdSign::new([z(), int(2), int(-1), z()], int(2), int(8)).unwrap();
        assert_eq!(zero.sign(), Ordering::Equal);
    }

    #[test]
    fn refinement_decides_or_gives_up() {
        let f = |p: &Rational| sqrt_interval(&int(2), p).unwrap().add_scalar(&rat(-1414, 1000));
        assert_eq!(refine_sign(f, &default_floor()), Some(Ordering::Greater));
        let zero_width = |p: &Rational| {
            let s = sqrt_interval(&int(2), p).unwrap();
            s.sub(&s)
        };
        assert_eq!(refine_sign(zero_width, &default_floor()), None);
    }
}
