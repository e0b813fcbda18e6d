//! The partition-pair coefficient B_{lambda,mu}(a; sigma): direct
//! box-by-box evaluation, its dressing factorization, the gamma-product
//! identities that rewrite it in particle coordinates, and the closed product
//! form over the 2K particle configuration.
//!
//! Two independent evaluation routes are deliberately kept side by side
//! (direct box products vs. the Q * Vandermonde^2 * weights form); their
//! agreement is the core correctness check of the whole crate.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{abs_lossy, cr, dist_to_integers, lower, RealField};
use crate::partitions::{particle_coords, Partition};
use crate::specfun::{
    barnes_g_ratio_int, linear_prod, log_gamma, log_gamma_prod, recip_gamma, recip_gamma_prod,
};

/// Combined weight above which products are accumulated in log space.
const LOG_SPACE_THRESHOLD: u32 = 20;

/// Smallest admissible distance of 2*sigma from the integers.
pub const GENERIC_SIGMA_DIST: f64 = 1e-6;

/// Smallest admissible magnitude of a linear denominator factor.
pub const MIN_DENOM: f64 = 1e-12;

/// Parameters (a, sigma, K) governing every formula in this crate.
///
/// Construction enforces the genericity guard dist(2 sigma, Z) > 1e-6, which
/// keeps the two support lattices disjoint and every squared denominator in
/// the coefficient away from zero.
#[derive(Clone, Debug)]
pub struct BlockParams<R: RealField> {
    a: Vec<Complex<R>>,
    sigma: Complex<R>,
    cap: usize,
}

impl<R: RealField> BlockParams<R> {
    pub fn new(a: Vec<Complex<R>>, sigma: Complex<R>, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidParameter("K must be >= 1".into()));
        }
        let two_sigma = sigma + sigma;
        let d = dist_to_integers(two_sigma);
        if d <= GENERIC_SIGMA_DIST {
            return Err(Error::DegenerateParameters(format!(
                "2*sigma = {} is within {:.0e} of an integer",
                lower(two_sigma),
                GENERIC_SIGMA_DIST
            )));
        }
        Ok(BlockParams { a, sigma, cap })
    }

    pub fn a(&self) -> &[Complex<R>] {
        &self.a
    }

    pub fn sigma(&self) -> Complex<R> {
        self.sigma
    }

    /// The length cap K.
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn two_sigma(&self) -> Complex<R> {
        self.sigma + self.sigma
    }

    /// Same parameters in another field (exact when widening from f64).
    pub fn to_field<S: RealField>(&self) -> BlockParams<S> {
        BlockParams {
            a: self
                .a
                .iter()
                .map(|&ai| crate::field::lift::<S>(lower(ai)))
                .collect(),
            sigma: crate::field::lift::<S>(lower(self.sigma)),
            cap: self.cap,
        }
    }

    /// Same parameters with sigma replaced (used for the tau-series shifts
    /// sigma + n, which preserve the genericity guard).
    pub fn with_sigma(&self, sigma: Complex<R>) -> Result<Self> {
        Self::new(self.a.clone(), sigma, self.cap)
    }

    /// Same parameters with a different length cap.
    pub fn with_cap(&self, cap: usize) -> Result<Self> {
        Self::new(self.a.clone(), self.sigma, cap)
    }
}

/// The 2K particle configuration x_i = L_i - sigma (from lambda) and
/// x_{K+i} = M_i + sigma (from mu). All coordinates are distinct for generic
/// sigma, and (lambda, mu) can be recovered from them.
#[derive(Clone, Debug)]
pub struct ParticleSystem<R: RealField> {
    coords: Vec<Complex<R>>,
}

impl<R: RealField> ParticleSystem<R> {
    pub fn new(lambda: &Partition, mu: &Partition, params: &BlockParams<R>) -> Result<Self> {
        let k = params.cap();
        let lc = particle_coords(lambda, k)?;
        let mc = particle_coords(mu, k)?;
        let sigma = params.sigma();
        let mut coords = Vec::with_capacity(2 * k);
        for &l in lc.shifted() {
            coords.push(cr::<R>(l as f64) - sigma);
        }
        for &m in mc.shifted() {
            coords.push(cr::<R>(m as f64) + sigma);
        }
        Ok(ParticleSystem { coords })
    }

    pub fn coords(&self) -> &[Complex<R>] {
        &self.coords
    }

    /// Inverts the coordinate map for the given (K, sigma); returns None if
    /// the coordinates do not describe a valid pair.
    pub fn recover(&self, k: usize, sigma: Complex<R>) -> Option<(Partition, Partition)> {
        if self.coords.len() != 2 * k {
            return None;
        }
        let to_partition = |vals: &[Complex<R>]| -> Option<Partition> {
            let mut parts = Vec::new();
            for (i, &v) in vals.iter().enumerate() {
                if abs_lossy(Complex::new(v.re - v.re.round(), v.im)) > 1e-9 {
                    return None;
                }
                let shifted = v.re.round().to_f64_lossy() as i64;
                let part = shifted - k as i64 + (i as i64 + 1);
                if part < 0 {
                    return None;
                }
                parts.push(part as u32);
            }
            Partition::new(parts).ok()
        };
        let lam_vals: Vec<_> = self.coords[..k].iter().map(|&x| x + sigma).collect();
        let mu_vals: Vec<_> = self.coords[k..].iter().map(|&x| x - sigma).collect();
        Some((to_partition(&lam_vals)?, to_partition(&mu_vals)?))
    }
}

/// B_{lambda,mu}(a; sigma) by direct evaluation of the double box product.
pub fn coeff_direct<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    params: &BlockParams<R>,
) -> Result<Complex<R>> {
    let sigma = params.sigma();
    let two_sigma = params.two_sigma();
    let lt = lambda.transpose();
    let mt = mu.transpose();
    let log_space = lambda.weight() + mu.weight() > LOG_SPACE_THRESHOLD;

    let mut prod = Complex::<R>::one();
    let mut log_acc = Complex::<R>::zero();

    let mut push = |num: Complex<R>, hook: u32, den: Complex<R>| -> Result<bool> {
        if abs_lossy(den) <= MIN_DENOM {
            return Err(Error::DegenerateParameters(format!(
                "vanishing denominator factor {} in the box product",
                lower(den)
            )));
        }
        if num.is_zero() {
            return Ok(true); // the whole coefficient is zero
        }
        let h = cr::<R>(hook as f64);
        if log_space {
            log_acc += num.ln() - (h.ln() + den.ln()) * cr::<R>(2.0);
        } else {
            prod *= num / (h * h * den * den);
        }
        Ok(false)
    };

    for (i, j) in lambda.boxes() {
        let shift = (i as i64 - j as i64) as f64;
        let num = linear_prod(params.a(), cr::<R>(shift) + sigma);
        let den = cr::<R>(
            (lt.part(j) as i64 + mu.part(i) as i64 - i as i64 - j as i64 + 1) as f64,
        ) + two_sigma;
        if push(num, lambda.hook(i, j)?, den)? {
            return Ok(Complex::zero());
        }
    }
    for (i, j) in mu.boxes() {
        let shift = (i as i64 - j as i64) as f64;
        let num = linear_prod(params.a(), cr::<R>(shift) - sigma);
        let den = cr::<R>(
            (lambda.part(i) as i64 + mt.part(j) as i64 - i as i64 - j as i64 + 1) as f64,
        ) - two_sigma;
        if push(num, mu.hook(i, j)?, den)? {
            return Ok(Complex::zero());
        }
    }

    Ok(if log_space { log_acc.exp() } else { prod })
}

/// Dressing factor prod_{(i,j) in lambda} P(a; i-j+sigma) *
/// prod_{(i,j) in mu} P(a; i-j-sigma); identically 1 for an empty list.
pub fn dress_factor<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    params: &BlockParams<R>,
) -> Complex<R> {
    let sigma = params.sigma();
    let mut acc = Complex::<R>::one();
    for (i, j) in lambda.boxes() {
        acc *= linear_prod(params.a(), cr::<R>((i as i64 - j as i64) as f64) + sigma);
    }
    for (i, j) in mu.boxes() {
        acc *= linear_prod(params.a(), cr::<R>((i as i64 - j as i64) as f64) - sigma);
    }
    acc
}

/// The lambda half of the dressing factor in gamma form:
/// prod_{(i,j) in lambda} P(a; i-j+sigma)
///   = [G(a;K+1+sigma)/G(a;1+sigma)] prod_i 1/Gamma(a; -l_i+sigma),
/// computed via the finite gamma-product reduction of the Barnes G ratio.
pub fn dress_factor_gamma<R: RealField>(
    lambda: &Partition,
    params: &BlockParams<R>,
) -> Result<Complex<R>> {
    let k = params.cap();
    let sigma = params.sigma();
    let coords = particle_coords(lambda, k)?;
    let mut acc = barnes_g_ratio_int(params.a(), Complex::<R>::one() + sigma, k)?;
    for &l in coords.locations() {
        acc *= recip_gamma_prod(params.a(), cr::<R>(-l as f64) + sigma);
    }
    Ok(acc)
}

/// Box-product side of the row-interaction identity:
/// prod_{(i,j) in lambda} (lambda'_j + mu_i - i - j + 1 + x).
pub fn interaction_lhs<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    x: Complex<R>,
) -> Complex<R> {
    let lt = lambda.transpose();
    let mut acc = Complex::<R>::one();
    for (i, j) in lambda.boxes() {
        acc *= cr::<R>((lt.part(j) as i64 + mu.part(i) as i64 - i as i64 - j as i64 + 1) as f64)
            + x;
    }
    acc
}

/// Gamma-ratio side of the row-interaction identity:
/// prod_i Gamma(m_i+K+1+x)/Gamma(m_i-l_i+x) * prod_{i<=j} 1/(m_i-l_j+x).
pub fn interaction_rhs<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    cap: usize,
    x: Complex<R>,
) -> Result<Complex<R>> {
    let lc = particle_coords(lambda, cap)?;
    let mc = particle_coords(mu, cap)?;
    let l = lc.locations();
    let m = mc.locations();

    let mut log_acc = Complex::<R>::zero();
    for i in 0..cap {
        log_acc += log_gamma(cr::<R>((m[i] + cap as i64 + 1) as f64) + x)?;
        log_acc -= log_gamma(cr::<R>((m[i] - l[i]) as f64) + x)?;
    }
    let mut acc = log_acc.exp();
    for i in 0..cap {
        for j in i..cap {
            let den = cr::<R>((m[i] - l[j]) as f64) + x;
            if abs_lossy(den) <= MIN_DENOM {
                return Err(Error::DegenerateParameters(format!(
                    "vanishing factor m_i - l_j + x = {}",
                    lower(den)
                )));
            }
            acc /= den;
        }
    }
    Ok(acc)
}

/// Box-product side of the full interaction identity:
/// 1 / [prod_lambda (.. + x)^2 * prod_mu (.. - x)^2].
pub fn full_interaction_lhs<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    x: Complex<R>,
) -> Result<Complex<R>> {
    let a = interaction_lhs(lambda, mu, x);
    let b = interaction_lhs(mu, lambda, -x);
    let den = a * a * b * b;
    if abs_lossy(den) <= MIN_DENOM * MIN_DENOM {
        return Err(Error::DegenerateParameters(
            "vanishing interaction product at this x".into(),
        ));
    }
    Ok(den.inv())
}

/// Gamma-ratio side of the full interaction identity:
/// prod_i Gamma(x)^2 Gamma(1-x)^2 / [Gamma(m_i+K+1+x)^2 Gamma(l_i+K+1-x)^2]
///   * prod_{i,j} (m_i - l_j + x)^2.
pub fn full_interaction_rhs<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    cap: usize,
    x: Complex<R>,
) -> Result<Complex<R>> {
    let lc = particle_coords(lambda, cap)?;
    let mc = particle_coords(mu, cap)?;
    let l = lc.locations();
    let m = mc.locations();

    let two = cr::<R>(2.0);
    let base = (log_gamma(x)? + log_gamma(Complex::<R>::one() - x)?) * two;
    let mut log_acc = base * cr::<R>(cap as f64);
    for i in 0..cap {
        log_acc -= log_gamma(cr::<R>((m[i] + cap as i64 + 1) as f64) + x)? * two;
        log_acc -= log_gamma(cr::<R>((l[i] + cap as i64 + 1) as f64) - x)? * two;
    }
    for i in 0..cap {
        for j in 0..cap {
            let f = cr::<R>((m[i] - l[j]) as f64) + x;
            if f.is_zero() {
                return Ok(Complex::zero());
            }
            log_acc += f.ln() * two;
        }
    }
    Ok(log_acc.exp())
}

/// Bare coefficient in particle form:
/// B_{lambda,mu}([]; sigma) = Gamma(2s)^{2K} Gamma(1-2s)^{2K}
///   * prod_{i<j} (x_i-x_j)^2 * prod_i v(x_i),
/// v(z) = 1/[Gamma(z+1+s)^2 Gamma(z+1-s)^2].
pub fn bare_product_form<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    params: &BlockParams<R>,
) -> Result<Complex<R>> {
    let sigma = params.sigma();
    let two_sigma = params.two_sigma();
    let k = params.cap();
    let xs = ParticleSystem::new(lambda, mu, params)?;

    let two = cr::<R>(2.0);
    let mut log_acc =
        (log_gamma(two_sigma)? + log_gamma(Complex::<R>::one() - two_sigma)?) * cr::<R>(2.0 * k as f64);
    log_acc += log_vandermonde_sq(xs.coords())?;
    for &x in xs.coords() {
        log_acc -= log_gamma(x + Complex::one() + sigma)? * two;
        log_acc -= log_gamma(x + Complex::one() - sigma)? * two;
    }
    Ok(log_acc.exp())
}

/// Weight w(z) = 1 / [Gamma(a; K-z) Gamma(z+1+sigma)^2 Gamma(z+1-sigma)^2];
/// entire in z (computed from reciprocal gammas), with exact zeros where a
/// reciprocal gamma vanishes.
pub fn weight_w<R: RealField>(z: Complex<R>, params: &BlockParams<R>) -> Complex<R> {
    let sigma = params.sigma();
    let karg = cr::<R>(params.cap() as f64) - z;
    let v1 = recip_gamma(z + Complex::one() + sigma);
    let v2 = recip_gamma(z + Complex::one() - sigma);
    recip_gamma_prod(params.a(), karg) * v1 * v1 * v2 * v2
}

/// log of w(z); errors with `GammaPole` exactly where w vanishes.
pub fn log_weight_w<R: RealField>(z: Complex<R>, params: &BlockParams<R>) -> Result<Complex<R>> {
    let sigma = params.sigma();
    let karg = cr::<R>(params.cap() as f64) - z;
    let two = cr::<R>(2.0);
    Ok(-(log_gamma_prod(params.a(), karg)?
        + log_gamma(z + Complex::one() + sigma)? * two
        + log_gamma(z + Complex::one() - sigma)? * two))
}

/// Q(a, K, sigma) reduced to finite gamma products:
/// Gamma(2s)^{2K} Gamma(1-2s)^{2K} prod_{i=1}^{K} Gamma(a;i+s) Gamma(a;i-s).
pub fn q_factor<R: RealField>(params: &BlockParams<R>) -> Result<Complex<R>> {
    Ok(log_q_factor(params)?.exp())
}

/// log of Q(a, K, sigma).
pub fn log_q_factor<R: RealField>(params: &BlockParams<R>) -> Result<Complex<R>> {
    let sigma = params.sigma();
    let two_sigma = params.two_sigma();
    let k = params.cap();
    let mut acc = (log_gamma(two_sigma)? + log_gamma(Complex::<R>::one() - two_sigma)?)
        * cr::<R>(2.0 * k as f64);
    for i in 1..=k {
        acc += log_gamma_prod(params.a(), cr::<R>(i as f64) + sigma)?;
        acc += log_gamma_prod(params.a(), cr::<R>(i as f64) - sigma)?;
    }
    Ok(acc)
}

/// Dressed coefficient in closed product form:
/// B_{lambda,mu}(a; sigma) = Q(a,K,sigma) prod_{i<j}(x_i-x_j)^2 prod_i w(x_i).
pub fn coeff_product_form<R: RealField>(
    lambda: &Partition,
    mu: &Partition,
    params: &BlockParams<R>,
) -> Result<Complex<R>> {
    let xs = ParticleSystem::new(lambda, mu, params)?;
    if lambda.weight() + mu.weight() <= LOG_SPACE_THRESHOLD {
        let q = q_factor(params)?;
        let mut acc = q;
        for (i, &xi) in xs.coords().iter().enumerate() {
            for &xj in &xs.coords()[i + 1..] {
                let d = xi - xj;
                acc *= d * d;
            }
        }
        for &x in xs.coords() {
            acc *= weight_w(x, params);
        }
        Ok(acc)
    } else {
        let mut log_acc = log_q_factor(params)?;
        log_acc += log_vandermonde_sq(xs.coords())?;
        for &x in xs.coords() {
            match log_weight_w(x, params) {
                Ok(lw) => log_acc += lw,
                Err(Error::GammaPole(_)) => return Ok(Complex::zero()),
                Err(e) => return Err(e),
            }
        }
        Ok(log_acc.exp())
    }
}

/// Sum of 2 ln(x_i - x_j) over i < j; errors if two coordinates collide.
fn log_vandermonde_sq<R: RealField>(coords: &[Complex<R>]) -> Result<Complex<R>> {
    let two = cr::<R>(2.0);
    let mut acc = Complex::<R>::zero();
    for (i, &xi) in coords.iter().enumerate() {
        for &xj in &coords[i + 1..] {
            let d = xi - xj;
            if abs_lossy(d) <= MIN_DENOM {
                return Err(Error::DegenerateParameters(
                    "coincident particle coordinates".into(),
                ));
            }
            acc += d.ln() * two;
        }
    }
    Ok(acc)
}
