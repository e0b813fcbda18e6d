//! Integer partitions, Young-diagram hooks and particle coordinates.
//!
//! A partition of weight n with at most K parts is identified with a strictly
//! decreasing sequence of "particle locations" l_i = lambda_i - i, or their
//! nonnegative shifts L_i = l_i + K; this fermionic encoding is what turns
//! partition pairs into point configurations downstream.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};

pub type BigRational = Ratio<BigInt>;

/// Weakly decreasing sequence of positive integers; trailing zeros are never
/// stored, so the empty partition is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, written l(lambda).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts, written |lambda|.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row i (1-based); zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Transposed (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols {
            t.push(self.parts.iter().take_while(|&&p| p as usize >= j).count() as u32);
        }
        Partition { parts: t }
    }

    /// True if box (i, j) (1-based) belongs to the Young diagram.
    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i) as usize
    }

    /// Hook length lambda_i - i + lambda'_j - j + 1 of box (i, j).
    pub fn hook(&self, i: usize, j: usize) -> Result<u32> {
        if !self.contains_box(i, j) {
            return Err(Error::BoxOutsideDiagram { row: i, col: j });
        }
        let t = self.transpose();
        let h = self.part(i) as i64 - i as i64 + t.part(j) as i64 - j as i64 + 1;
        debug_assert!(h > 0);
        Ok(h as u32)
    }

    /// Iterator over the boxes (i, j) of the Young diagram, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i0, &p)| (1..=p as usize).map(move |j| (i0 + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "3,1" style comma-separated parts; empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(v),
            Err(_) => Err(Error::InvalidPartition(Vec::new())),
        }
    }
}

/// Particle coordinates of a partition relative to a cap K >= length:
/// locations l_i = lambda_i - i (strictly decreasing) and their shifts
/// L_i = l_i + K (strictly decreasing, nonnegative), for 1 <= i <= K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParticleCoords {
    locations: Vec<i64>,
    shifted: Vec<i64>,
    cap: usize,
}

impl ParticleCoords {
    pub fn locations(&self) -> &[i64] {
        &self.locations
    }

    pub fn shifted(&self) -> &[i64] {
        &self.shifted
    }

    pub fn cap(&self) -> usize {
        self.cap
    }
}

/// l_i = lambda_i - i and L_i = lambda_i - i + K for 1 <= i <= K.
pub fn particle_coords(lambda: &Partition, cap: usize) -> Result<ParticleCoords> {
    if lambda.length() > cap {
        return Err(Error::LengthExceedsCap {
            len: lambda.length(),
            cap,
        });
    }
    let locations: Vec<i64> = (1..=cap)
        .map(|i| lambda.part(i) as i64 - i as i64)
        .collect();
    let shifted: Vec<i64> = locations.iter().map(|l| l + cap as i64).collect();
    debug_assert!(shifted.windows(2).all(|w| w[0] > w[1]));
    debug_assert!(*shifted.last().unwrap_or(&0) >= 0);
    Ok(ParticleCoords {
        locations,
        shifted,
        cap,
    })
}

/// All partitions of weight `w` with at most `max_len` parts, in descending
/// lexicographic order of the part sequences.
pub fn partitions_of(w: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(w, w, max_len, &mut stack, &mut out);
    out
}

fn gen_partitions(
    remaining: u32,
    max_part: u32,
    slots: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    // first part must be at least ceil(remaining / slots) to fit
    let lo = remaining.div_ceil(slots as u32);
    for p in (lo..=hi).rev() {
        stack.push(p);
        gen_partitions(remaining - p, p, slots - 1, stack, out);
        stack.pop();
    }
}

/// Partitions with at most `max_len` parts grouped by weight 0..=max_weight.
pub fn partitions_by_weight(max_len: usize, max_weight: u32) -> Vec<Vec<Partition>> {
    (0..=max_weight).map(|w| partitions_of(w, max_len)).collect()
}

/// Every pair (lambda, mu) with both lengths <= `cap` and combined weight
/// |lambda| + |mu| <= `max_weight`, each exactly once, in deterministic
/// order: combined weight ascending, then |lambda| ascending, then descending
/// lexicographic within each component.
pub fn enumerate_pairs(
    cap: usize,
    max_weight: u32,
) -> impl Iterator<Item = (Partition, Partition)> {
    let by_weight = partitions_by_weight(cap, max_weight);
    (0..=max_weight).flat_map(move |w| {
        let by_weight = by_weight.clone();
        (0..=w).flat_map(move |wl| {
            let lams = by_weight[wl as usize].clone();
            let mus = by_weight[(w - wl) as usize].clone();
            lams.into_iter()
                .flat_map(move |l| mus.clone().into_iter().map(move |m| (l.clone(), m)))
        })
    })
}

/// Both sides of the hook-product identity
/// 1 / prod_{(i,j)} h_lambda(i,j)  =  Delta({L_i}) / prod_i L_i!
/// as exact rationals, for the caller to compare.
pub fn hook_product_identity_check(
    lambda: &Partition,
    cap: usize,
) -> Result<(BigRational, BigRational)> {
    let coords = particle_coords(lambda, cap)?;

    let mut hook_prod = BigInt::from(1);
    for (i, j) in lambda.boxes() {
        hook_prod *= BigInt::from(lambda.hook(i, j)?);
    }
    let lhs = BigRational::new(BigInt::from(1), hook_prod);

    let shifted = coords.shifted();
    let mut vandermonde = BigInt::from(1);
    for i in 0..shifted.len() {
        for j in (i + 1)..shifted.len() {
            vandermonde *= BigInt::from(shifted[i] - shifted[j]);
        }
    }
    let mut fact_prod = BigInt::from(1);
    for &l in shifted {
        fact_prod *= factorial(l as u64);
    }
    let rhs = BigRational::new(vandermonde, fact_prod);

    Ok((lhs, rhs))
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}
