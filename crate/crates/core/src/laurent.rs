//! Formal Laurent polynomials in the bookkeeping variable q with complex
//! coefficients. Moments of the two-lattice measure live in the span of
//! {q, 1/q}; determinants of moment matrices have exponents in [-2K, 2K].

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;

use crate::field::RealField;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<R: RealField> {
    coeffs: BTreeMap<i64, Complex<R>>,
}

impl<R: RealField> LaurentPoly<R> {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Complex::new(R::one(), R::zero()))
    }

    pub fn monomial(exp: i64, coeff: Complex<R>) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Complex<R>)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: Complex<R>) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Complex::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Coefficient of q^exp (zero if absent).
    pub fn coeff(&self, exp: i64) -> Complex<R> {
        self.coeffs.get(&exp).copied().unwrap_or_else(Complex::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Complex<R>)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, s: Complex<R>) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c * s);
        }
        out
    }

    /// Evaluate at a nonzero point q.
    pub fn eval(&self, q: Complex<R>) -> Complex<R> {
        let mut acc = Complex::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                q.powu(e as u32)
            } else {
                q.powu((-e) as u32).inv()
            };
            acc += c * p;
        }
        acc
    }
}
