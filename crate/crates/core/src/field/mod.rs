//! Numeric field abstraction.
//!
//! All series, special-function and determinant code in this crate is generic
//! over [`RealField`], with two backends: plain `f64` and the double-double
//! type [`Dd`]. The extended backend exists because the q^0 coefficient of the
//! Hankel determinant cancels down to ~|t|^{K(K-1)}; once that eats more than
//! half the f64 mantissa the determinant route needs wider arithmetic.

pub mod dd;
mod dd_consts;

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive};

pub use dd::Dd;

/// Real scalar type the numerical kernels are written against.
pub trait RealField:
    Float + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    const LABEL: &'static str;

    /// Exact widening conversion from f64 (both backends contain f64).
    fn from_f64_exact(x: f64) -> Self;
    /// Narrowing conversion used at API boundaries.
    fn to_f64_lossy(self) -> f64;

    fn pi() -> Self;
    fn two_pi() -> Self;
    fn ln_two_pi() -> Self;
    fn euler_gamma() -> Self;
    /// ln of the Glaisher-Kinkelin constant.
    fn ln_glaisher() -> Self;

    /// Coefficients of the log-gamma asymptotic series.
    fn stirling_coeffs() -> &'static [Self];
    /// Minimum Re(z) before the log-gamma asymptotic series is applied.
    fn stirling_min_re() -> f64;
    /// Coefficients of the log Barnes-G asymptotic tail.
    fn barnes_tail_coeffs() -> &'static [Self];
    /// Minimum Re(z) before the Barnes-G asymptotic series is applied.
    fn barnes_min_re() -> f64;
}

impl RealField for f64 {
    const LABEL: &'static str = "double";

    #[inline]
    fn from_f64_exact(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn two_pi() -> Self {
        std::f64::consts::TAU
    }
    fn ln_two_pi() -> Self {
        dd_consts::LN_TWO_PI.hi
    }
    fn euler_gamma() -> Self {
        dd_consts::EULER_GAMMA.hi
    }
    fn ln_glaisher() -> Self {
        dd_consts::LN_GLAISHER.hi
    }
    fn stirling_coeffs() -> &'static [Self] {
        &dd_consts::STIRLING_COEFFS_F64
    }
    fn stirling_min_re() -> f64 {
        14.0
    }
    fn barnes_tail_coeffs() -> &'static [Self] {
        &dd_consts::BARNES_TAIL_COEFFS_F64
    }
    fn barnes_min_re() -> f64 {
        20.0
    }
}

impl RealField for Dd {
    const LABEL: &'static str = "dd";

    #[inline]
    fn from_f64_exact(x: f64) -> Self {
        Dd::from_f64(x)
    }
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64()
    }
    fn pi() -> Self {
        dd_consts::PI
    }
    fn two_pi() -> Self {
        dd_consts::TWO_PI
    }
    fn ln_two_pi() -> Self {
        dd_consts::LN_TWO_PI
    }
    fn euler_gamma() -> Self {
        dd_consts::EULER_GAMMA
    }
    fn ln_glaisher() -> Self {
        dd_consts::LN_GLAISHER
    }
    fn stirling_coeffs() -> &'static [Self] {
        &dd_consts::STIRLING_COEFFS
    }
    fn stirling_min_re() -> f64 {
        35.0
    }
    fn barnes_tail_coeffs() -> &'static [Self] {
        &dd_consts::BARNES_TAIL_COEFFS
    }
    fn barnes_min_re() -> f64 {
        20.0
    }
}

/// Complex number from f64 parts, widened exactly into the target field.
#[inline]
pub fn cx<R: RealField>(re: f64, im: f64) -> Complex<R> {
    Complex::new(R::from_f64_exact(re), R::from_f64_exact(im))
}

/// Real f64 widened into a complex field element.
#[inline]
pub fn cr<R: RealField>(re: f64) -> Complex<R> {
    cx(re, 0.0)
}

/// Widen a `Complex<f64>` exactly.
#[inline]
pub fn lift<R: RealField>(z: Complex<f64>) -> Complex<R> {
    cx(z.re, z.im)
}

/// Narrow to `Complex<f64>` at API boundaries.
#[inline]
pub fn lower<R: RealField>(z: Complex<R>) -> Complex<f64> {
    Complex::new(z.re.to_f64_lossy(), z.im.to_f64_lossy())
}

/// |z| as f64, for tolerance logic.
#[inline]
pub fn abs_lossy<R: RealField>(z: Complex<R>) -> f64 {
    lower(z).norm()
}

/// True if z is exactly a nonpositive integer (a gamma pole).
pub fn is_nonpositive_integer<R: RealField>(z: Complex<R>) -> bool {
    z.im.is_zero() && z.re <= R::zero() && z.re.fract().is_zero()
}

/// Distance from z to the nearest integer in the complex plane.
pub fn dist_to_integers<R: RealField>(z: Complex<R>) -> f64 {
    let n = z.re.round();
    abs_lossy(Complex::new(z.re - n, z.im))
}

/// Compensated (Neumaier) accumulator for complex values; used so that long
/// series and shell sums do not lose digits to naive summation.
#[derive(Clone, Copy)]
pub struct Accumulator<R: RealField> {
    sum: Complex<R>,
    comp: Complex<R>,
}

impl<R: RealField> Default for Accumulator<R> {
    fn default() -> Self {
        Accumulator {
            sum: Complex::new(R::zero(), R::zero()),
            comp: Complex::new(R::zero(), R::zero()),
        }
    }
}

impl<R: RealField> Accumulator<R> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: Complex<R>) {
        self.sum.re = neumaier(&mut self.comp.re, self.sum.re, v.re);
        self.sum.im = neumaier(&mut self.comp.im, self.sum.im, v.im);
    }

    pub fn value(&self) -> Complex<R> {
        self.sum + self.comp
    }
}

fn neumaier<R: RealField>(comp: &mut R, sum: R, v: R) -> R {
    let t = sum + v;
    if sum.abs() >= v.abs() {
        *comp = *comp + ((sum - t) + v);
    } else {
        *comp = *comp + ((v - t) + sum);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonpositive_integer_detection() {
        assert!(is_nonpositive_integer(cr::<f64>(0.0)));
        assert!(is_nonpositive_integer(cr::<f64>(-7.0)));
        assert!(!is_nonpositive_integer(cr::<f64>(3.0)) || false);
        assert!(!is_nonpositive_integer(cr::<f64>(-7.0000001)));
        assert!(!is_nonpositive_integer(cx::<f64>(-7.0, 1e-12)));
        assert!(is_nonpositive_integer(cr::<Dd>(-3.0)));
    }

    #[test]
    fn integer_distance() {
        assert!((dist_to_integers(cr::<f64>(0.4)) - 0.4).abs() < 1e-15);
        assert!((dist_to_integers(cx::<f64>(2.0, 0.3)) - 0.3).abs() < 1e-15);
        assert!((dist_to_integers(cr::<f64>(-1.75)) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn accumulator_beats_naive_sum() {
        let mut acc = Accumulator::<f64>::new();
        let mut naive = 0.0f64;
        // alternating large/small values that defeat naive summation
        for k in 0..10_000 {
            let v = if k % 2 == 0 { 1e16 } else { -1e16 + 1.0 };
            acc.add(cr(v));
            naive += v;
        }
        let _ = naive;
        assert_eq!(acc.value().re, 5000.0);
    }
}
