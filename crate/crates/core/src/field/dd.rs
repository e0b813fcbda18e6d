//! Double-double arithmetic: an unevaluated sum of two f64 values giving
//! roughly 32 significant decimal digits.
//!
//! The representation keeps `hi = fl(hi + lo)`, i.e. the components do not
//! overlap. Algorithms follow the standard error-free transformation
//! constructions (two_sum / two_prod with FMA) used by the qd family of
//! libraries. The type implements `num_traits::Float`, so
//! `num_complex::Complex<Dd>` works out of the box.
//!
//! Intended range of use here: moment tables and Hankel determinants, where
//! the q^0 coefficient of the determinant cancels down to ~|t|^{K(K-1)} and
//! plain f64 runs out of digits.

use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use num_traits::{Float, FromPrimitive, Num, NumCast, One, Signed, ToPrimitive, Zero};

use super::dd_consts;

#[derive(Clone, Copy, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Machine epsilon of the format, 2^-104.
pub const DD_EPSILON: f64 = 4.93038065763132e-32;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        Dd::renorm(s1, s2 + self.lo)
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        Dd::renorm(p1, p2 + self.lo * b)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        self / Dd::from_f64(b)
    }

    pub fn abs_val(self) -> Self {
        if self.is_sign_negative() {
            -self
        } else {
            self
        }
    }

    /// Exact scaling by 2^n (no rounding as long as no over/underflow).
    #[inline]
    fn ldexp(self, n: i32) -> Self {
        let f = libm_scalbn(1.0, n);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// Taylor series of exp on a reduced argument |r| <= ln(2)/1024.
    fn exp_taylor(r: Dd) -> Dd {
        // expm1(r) to full dd accuracy; |r|^13/13! < 1e-44
        let mut term = r;
        let mut sum = r;
        for k in 2..=13 {
            term = (term * r).div_f64(k as f64);
            sum += term;
        }
        sum
    }

    pub fn exp_dd(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::zero();
        }
        if self.is_zero() {
            return Dd::one();
        }
        let m = (self.hi / dd_consts::LN_2.hi).round();
        let r = (self - dd_consts::LN_2.mul_f64(m)).ldexp(-9);
        // expm1 on r, then repeated doubling: expm1(2y) = 2 e + e^2
        let mut e = Dd::exp_taylor(r);
        for _ in 0..9 {
            e = e.mul_f64(2.0) + e * e;
        }
        (e + Dd::one()).ldexp(m as i32)
    }

    pub fn ln_dd(self) -> Dd {
        if self.hi < 0.0 {
            return Dd::from_f64(f64::NAN);
        }
        if self.is_zero() {
            return Dd::from_f64(f64::NEG_INFINITY);
        }
        if !self.hi.is_finite() {
            return Dd::from_f64(self.hi);
        }
        // Newton on exp: y <- y + x e^{-y} - 1, starting from the f64 log.
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp_dd() - Dd::one();
        }
        y
    }

    fn sin_taylor(t: Dd) -> Dd {
        // |t| <= pi/4 + eps; terms via recurrence, fixed bound
        let t2 = t * t;
        let mut term = t;
        let mut sum = t;
        for k in 1..=16 {
            let d = ((2 * k) * (2 * k + 1)) as f64;
            term = -(term * t2).div_f64(d);
            sum += term;
            if term.hi.abs() < 1e-40 {
                break;
            }
        }
        sum
    }

    fn cos_taylor(t: Dd) -> Dd {
        let t2 = t * t;
        let mut term = Dd::one();
        let mut sum = Dd::one();
        for k in 1..=16 {
            let d = ((2 * k - 1) * (2 * k)) as f64;
            term = -(term * t2).div_f64(d);
            sum += term;
            if term.hi.abs() < 1e-40 {
                break;
            }
        }
        sum
    }

    pub fn sin_cos_dd(self) -> (Dd, Dd) {
        if !self.hi.is_finite() {
            return (Dd::from_f64(f64::NAN), Dd::from_f64(f64::NAN));
        }
        let n = (self.hi / dd_consts::TWO_PI.hi).round();
        let x = self - dd_consts::TWO_PI.mul_f64(n);
        let q = (x.hi / dd_consts::HALF_PI.hi).round();
        let t = x - dd_consts::HALF_PI.mul_f64(q);
        let (s, c) = (Dd::sin_taylor(t), Dd::cos_taylor(t));
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sqrt_dd(self) -> Dd {
        if self.is_zero() {
            return Dd::zero();
        }
        if self.hi < 0.0 {
            return Dd::from_f64(f64::NAN);
        }
        if !self.hi.is_finite() {
            return self;
        }
        let s0 = self.hi.sqrt();
        let s = Dd::from_f64(s0);
        // one dd Newton step on s^2 = x
        s + (self - s * s).div_f64(2.0 * s0)
    }

    pub fn atan2_dd(y: Dd, x: Dd) -> Dd {
        if y.is_zero() && x.is_zero() {
            return Dd::zero();
        }
        // scale to avoid overflow in intermediate products
        let m = x.hi.abs().max(y.hi.abs());
        let e = if m > 0.0 && m.is_finite() {
            -(m.log2().round() as i32)
        } else {
            0
        };
        let xs = x.ldexp(e);
        let ys = y.ldexp(e);
        let mut th = Dd::from_f64(y.hi.atan2(x.hi));
        for _ in 0..2 {
            let (s, c) = th.sin_cos_dd();
            let den = xs * c + ys * s;
            if den.hi == 0.0 || !den.hi.is_finite() {
                break;
            }
            th += (ys * c - xs * s) / den;
        }
        th
    }
}

fn libm_scalbn(x: f64, n: i32) -> f64 {
    // x * 2^n without building a table; n stays well within f64 range here
    let mut r = x;
    let mut n = n;
    while n > 1000 {
        r *= 2f64.powi(1000);
        n -= 1000;
    }
    while n < -1000 {
        r *= 2f64.powi(-1000);
        n += 1000;
    }
    r * 2f64.powi(n)
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:?}, {:?})", self.hi, self.lo)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // display through f64; full precision is available via Debug
        write!(f, "{}", self.to_f64())
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::renorm(s1, s2 + t2)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        Dd::renorm(p1, p2 + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        if b.is_zero() {
            return Dd::from_f64(self.hi / b.hi);
        }
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Dd::from_f64(q1);
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::renorm(s, e + q3)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        let q = (self / b).trunc();
        self - b * q
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, rhs: Dd) {
        *self = *self + rhs;
    }
}
impl SubAssign for Dd {
    fn sub_assign(&mut self, rhs: Dd) {
        *self = *self - rhs;
    }
}
impl MulAssign for Dd {
    fn mul_assign(&mut self, rhs: Dd) {
        *self = *self * rhs;
    }
}
impl DivAssign for Dd {
    fn div_assign(&mut self, rhs: Dd) {
        *self = *self / rhs;
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd { hi: 1.0, lo: 0.0 }
    }
}

impl Num for Dd {
    type FromStrRadixErr = std::num::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        // only radix 10, via f64 (sufficient for config-style inputs)
        assert_eq!(radix, 10, "Dd::from_str_radix supports radix 10 only");
        s.parse::<f64>().map(Dd::from_f64)
    }
}

impl ToPrimitive for Dd {
    fn to_i64(&self) -> Option<i64> {
        self.to_f64().to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.to_f64().to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(Dd::to_f64(*self))
    }
}

impl FromPrimitive for Dd {
    fn from_i64(n: i64) -> Option<Self> {
        // exact for |n| < 2^106: split into high/low halves
        let hi = n as f64;
        let lo = (n - hi as i64) as f64;
        Some(Dd::renorm(hi, lo))
    }
    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = if hi as u64 >= n {
            -((hi as u64 - n) as f64)
        } else {
            (n - hi as u64) as f64
        };
        Some(Dd::renorm(hi, lo))
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(Dd::from_f64(x))
    }
}

impl NumCast for Dd {
    fn from<T: ToPrimitive>(n: T) -> Option<Self> {
        n.to_f64().map(Dd::from_f64)
    }
}

impl Signed for Dd {
    fn abs(&self) -> Self {
        self.abs_val()
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if *self <= *other {
            Dd::zero()
        } else {
            *self - *other
        }
    }
    fn signum(&self) -> Self {
        Dd::from_f64(if self.is_zero() {
            0.0
        } else {
            self.hi.signum()
        })
    }
    fn is_positive(&self) -> bool {
        self.hi > 0.0
    }
    fn is_negative(&self) -> bool {
        self.hi < 0.0
    }
}

impl Float for Dd {
    fn nan() -> Self {
        Dd::from_f64(f64::NAN)
    }
    fn infinity() -> Self {
        Dd::from_f64(f64::INFINITY)
    }
    fn neg_infinity() -> Self {
        Dd::from_f64(f64::NEG_INFINITY)
    }
    fn neg_zero() -> Self {
        Dd::from_f64(-0.0)
    }
    fn min_value() -> Self {
        Dd::from_f64(f64::MIN)
    }
    fn min_positive_value() -> Self {
        Dd::from_f64(f64::MIN_POSITIVE)
    }
    fn max_value() -> Self {
        Dd::from_f64(f64::MAX)
    }
    fn epsilon() -> Self {
        Dd::from_f64(DD_EPSILON)
    }

    fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }

    fn floor(self) -> Self {
        let fh = self.hi.floor();
        if fh == self.hi {
            Dd::renorm(fh, self.lo.floor())
        } else {
            Dd::from_f64(fh)
        }
    }
    fn ceil(self) -> Self {
        let ch = self.hi.ceil();
        if ch == self.hi {
            Dd::renorm(ch, self.lo.ceil())
        } else {
            Dd::from_f64(ch)
        }
    }
    fn round(self) -> Self {
        let f = self.floor();
        let diff = self - f;
        if diff >= Dd::from_f64(0.5) {
            f + Dd::one()
        } else {
            f
        }
    }
    fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            self.ceil()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        self.abs_val()
    }
    fn signum(self) -> Self {
        Signed::signum(&self)
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Dd::one() / self
    }
    fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Dd::one();
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
    fn powf(self, e: Self) -> Self {
        if self.is_zero() {
            return if e.hi > 0.0 {
                Dd::zero()
            } else if e.is_zero() {
                Dd::one()
            } else {
                Dd::infinity()
            };
        }
        (e * self.ln_dd()).exp_dd()
    }
    fn sqrt(self) -> Self {
        self.sqrt_dd()
    }
    fn exp(self) -> Self {
        self.exp_dd()
    }
    fn exp2(self) -> Self {
        (self * dd_consts::LN_2).exp_dd()
    }
    fn ln(self) -> Self {
        self.ln_dd()
    }
    fn log(self, base: Self) -> Self {
        self.ln_dd() / base.ln_dd()
    }
    fn log2(self) -> Self {
        self.ln_dd() / dd_consts::LN_2
    }
    fn log10(self) -> Self {
        self.ln_dd() / dd_consts::LN_10
    }
    fn max(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        Signed::abs_sub(&self, &other)
    }
    fn cbrt(self) -> Self {
        if self.is_zero() {
            return Dd::zero();
        }
        let neg = self.hi < 0.0;
        let x = self.abs_val();
        let mut y = Dd::from_f64(x.hi.cbrt());
        // Newton: y <- y - (y^3 - x)/(3 y^2)
        for _ in 0..2 {
            let y2 = y * y;
            y = y - (y * y2 - x) / (y2.mul_f64(3.0));
        }
        if neg {
            -y
        } else {
            y
        }
    }
    fn hypot(self, other: Self) -> Self {
        let ax = self.abs_val();
        let ay = other.abs_val();
        let m = ax.hi.max(ay.hi);
        if m == 0.0 {
            return Dd::zero();
        }
        if !m.is_finite() {
            return Dd::from_f64(m);
        }
        let e = -(m.log2().round() as i32);
        let xs = ax.ldexp(e);
        let ys = ay.ldexp(e);
        (xs * xs + ys * ys).sqrt_dd().ldexp(-e)
    }
    fn sin(self) -> Self {
        self.sin_cos_dd().0
    }
    fn cos(self) -> Self {
        self.sin_cos_dd().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos_dd();
        s / c
    }
    fn asin(self) -> Self {
        let c = (Dd::one() - self * self).sqrt_dd();
        Dd::atan2_dd(self, c)
    }
    fn acos(self) -> Self {
        let s = (Dd::one() - self * self).sqrt_dd();
        Dd::atan2_dd(s, self)
    }
    fn atan(self) -> Self {
        Dd::atan2_dd(self, Dd::one())
    }
    fn atan2(self, other: Self) -> Self {
        Dd::atan2_dd(self, other)
    }
    fn sin_cos(self) -> (Self, Self) {
        self.sin_cos_dd()
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.3 {
            // direct series avoids cancellation
            let mut term = self;
            let mut sum = self;
            for k in 2..=26 {
                term = (term * self).div_f64(k as f64);
                sum += term;
                if term.hi.abs() < 1e-40 {
                    break;
                }
            }
            sum
        } else {
            self.exp_dd() - Dd::one()
        }
    }
    fn ln_1p(self) -> Self {
        (Dd::one() + self).ln_dd()
    }
    fn sinh(self) -> Self {
        if self.hi.abs() < 0.3 {
            let x2 = self * self;
            let mut term = self;
            let mut sum = self;
            for k in 1..=14 {
                let d = ((2 * k) * (2 * k + 1)) as f64;
                term = (term * x2).div_f64(d);
                sum += term;
                if term.hi.abs() < 1e-40 {
                    break;
                }
            }
            sum
        } else {
            let e = self.exp_dd();
            (e - e.recip()).mul_f64(0.5)
        }
    }
    fn cosh(self) -> Self {
        let e = self.exp_dd();
        (e + e.recip()).mul_f64(0.5)
    }
    fn tanh(self) -> Self {
        self.sinh() / self.cosh()
    }
    fn asinh(self) -> Self {
        let neg = self.hi < 0.0;
        let x = self.abs_val();
        let r = (x + (x * x + Dd::one()).sqrt_dd()).ln_dd();
        if neg {
            -r
        } else {
            r
        }
    }
    fn acosh(self) -> Self {
        (self + (self * self - Dd::one()).sqrt_dd()).ln_dd()
    }
    fn atanh(self) -> Self {
        ((Dd::one() + self) / (Dd::one() - self)).ln_dd().mul_f64(0.5)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
    fn to_degrees(self) -> Self {
        self * Dd::from_f64(180.0) / dd_consts::PI
    }
    fn to_radians(self) -> Self {
        self * dd_consts::PI / Dd::from_f64(180.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        let d = (a - b).abs_val();
        let s = b.abs_val().to_f64().max(1.0);
        d.to_f64() <= tol * s
    }

    #[test]
    fn arithmetic_is_exact_on_splittable_values() {
        let a = Dd::from_f64(0.1) + Dd::from_f64(0.2);
        // 0.1 + 0.2 carries the f64 representation error in lo
        assert!(a.lo != 0.0);
        let b = a - Dd::from_f64(0.2);
        assert!(close(b, Dd::from_f64(0.1), 1e-31));
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::from_f64(std::f64::consts::PI) * Dd::from_f64(1.0 / 3.0);
        let b = a / Dd::from_f64(1.0 / 3.0);
        assert!(close(b, Dd::from_f64(std::f64::consts::PI), 1e-31));
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[1e-8, 0.5, 1.0, 2.75, 10.0, 100.0, 700.0] {
            let d = Dd::from_f64(x);
            let r = d.exp_dd().ln_dd();
            assert!(close(r, d, 1e-30), "x = {x}: {:?}", r);
        }
        for &x in &[-300.0, -2.0, -1e-5] {
            let d = Dd::from_f64(x);
            let r = d.exp_dd().ln_dd();
            assert!(close(r, d, 1e-29), "x = {x}");
        }
    }

    #[test]
    fn ln_2_matches_constant() {
        let l = Dd::from_f64(2.0).ln_dd();
        assert!(close(l, dd_consts::LN_2, 1e-31));
    }

    #[test]
    fn sin_cos_identity() {
        for &x in &[0.0, 0.3, 1.0, 1.5707, 3.0, 10.0, -42.7, 123.456] {
            let (s, c) = Dd::from_f64(x).sin_cos_dd();
            let one = s * s + c * c;
            assert!(close(one, Dd::one(), 1e-30), "x = {x}");
        }
    }

    #[test]
    fn sin_at_pi_is_tiny() {
        let s = dd_consts::PI.sin();
        assert!(s.to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        for &x in &[2.0, 1e-12, 9.0, 123456.789] {
            let r = Dd::from_f64(x).sqrt_dd();
            assert!(close(r * r, Dd::from_f64(x), 1e-30), "x = {x}");
        }
    }

    #[test]
    fn atan2_against_f64() {
        for &(y, x) in &[(1.0, 1.0), (-0.3, 2.0), (5.0, -1.0), (-2.0, -2.0), (0.0, 1.0)] {
            let th = Dd::atan2_dd(Dd::from_f64(y), Dd::from_f64(x));
            assert!((th.to_f64() - y.atan2(x)).abs() < 1e-14, "({y},{x})");
            // residual of the defining equation
            let (s, c) = th.sin_cos_dd();
            let res = Dd::from_f64(y) * c - Dd::from_f64(x) * s;
            assert!(res.to_f64().abs() < 1e-29 * (x.abs() + y.abs()));
        }
    }

    #[test]
    fn floor_round_trunc() {
        assert_eq!(Dd::from_f64(2.7).floor().to_f64(), 2.0);
        assert_eq!(Dd::from_f64(-2.7).floor().to_f64(), -3.0);
        assert_eq!(Dd::from_f64(-2.7).trunc().to_f64(), -2.0);
        assert_eq!(Dd::from_f64(2.5).round().to_f64(), 3.0);
        // hi integral, lo negative: floor must look at lo
        let x = Dd::new(3.0, -1e-20);
        assert_eq!(x.floor().to_f64(), 2.0);
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let x = Dd::from_f64(1.7);
        let mut acc = Dd::one();
        for _ in 0..7 {
            acc = acc * x;
        }
        assert!(close(x.powi(7), acc, 1e-30));
        assert!(close(x.powi(-3), (x * x * x).recip(), 1e-30));
    }

    #[test]
    fn from_i64_is_exact_beyond_f64() {
        let n = 9_007_199_254_740_995_i64; // 2^53 + 3, not an f64
        let d = Dd::from_i64(n).unwrap();
        assert_eq!(d.to_i64().unwrap(), n);
        assert!(d.lo != 0.0);
    }

    #[test]
    fn complex_dd_exp_ln() {
        use num_complex::Complex;
        let z = Complex::new(Dd::from_f64(0.3), Dd::from_f64(-1.2));
        let w = z.exp().ln();
        assert!(close(w.re, z.re, 1e-29));
        assert!(close(w.im, z.im, 1e-29));
        let n = z.norm();
        let expect = (z.re * z.re + z.im * z.im).sqrt_dd();
        assert!(close(n, expect, 1e-30));
    }
}
