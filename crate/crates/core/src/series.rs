//! Truncated formal power series in `q` over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] knows its precision `P`: coefficients of `q^0..=q^P`
//! are exact, everything above is undefined. Binary operations return a result
//! at the smaller of the two input precisions and never extend a series.
//!
//! The generators at the bottom of the module build the specific series used
//! throughout the crate: the Euler product `(q)_∞` from its pentagonal
//! expansion, finite q-Pochhammer symbols, alternating theta-type sums, products
//! of `(1 ± q^n)` over congruence classes, and both sides of the two univariate
//! Jacobi triple product specializations.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of consecutive out-of-range exponents after which a theta sum stops.
pub const THETA_STOP_WINDOW: usize = 3;
/// Hard cap on the number of terms visited by [`alternating_theta`].
pub const THETA_ITERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the precision is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Usage(
                "a series needs at least one coefficient".to_string(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(precision: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(BigInt::one(), 0, precision)
    }

    /// `coeff * q^exponent`, which is the zero series when `exponent > precision`.
    pub fn monomial(coeff: BigInt, exponent: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if exponent <= precision {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^exponent`, or `None` beyond the precision.
    pub fn coeff(&self, exponent: usize) -> Option<&BigInt> {
        self.coeffs.get(exponent)
    }

    /// Drops coefficients above `precision`. Asking for more than is known
    /// keeps the current precision.
    pub fn truncated(&self, precision: usize) -> Self {
        let keep = precision.min(self.precision()) + 1;
        Self {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Multiplies by `q^k`; the precision is unchanged.
    pub fn shifted(&self, k: usize) -> Self {
        let p = self.precision();
        let mut out = Self::zero(p);
        for (e, c) in self.coeffs.iter().enumerate() {
            if e + k > p {
                break;
            }
            out.coeffs[e + k] = c.clone();
        }
        out
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].abs().is_one()
    }

    /// Multiplicative inverse. Only defined when the constant term is `±1`, so
    /// the result stays integral.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::Domain(format!(
                "constant term {} is not a unit; cannot invert over the integers",
                self.coeffs[0]
            )));
        }
        let c0 = self.coeffs[0].clone();
        let p = self.precision();
        let support: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv: Vec<BigInt> = Vec::with_capacity(p + 1);
        inv.push(c0.clone());
        for n in 1..=p {
            let mut acc = BigInt::zero();
            for &(k, a) in &support {
                if k > n {
                    break;
                }
                acc += a * &inv[n - k];
            }
            // c0 = ±1 is its own inverse.
            inv.push(-(acc * &c0));
        }
        Ok(Self { coeffs: inv })
    }

    /// Multiplies in place by `(1 + sign * q^exponent)`.
    pub(crate) fn mul_binomial_in_place(&mut self, exponent: usize, sign: FactorSign) {
        if exponent == 0 || exponent > self.precision() {
            return;
        }
        for j in (exponent..=self.precision()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            match sign {
                FactorSign::Minus => hi[0] -= &lo[j - exponent],
                FactorSign::Plus => hi[0] += &lo[j - exponent],
            }
        }
    }

    /// Divides in place by `(1 - q^exponent)`, i.e. multiplies by the
    /// geometric series `1 + q^e + q^{2e} + ...`.
    pub(crate) fn div_one_minus_in_place(&mut self, exponent: usize) {
        if exponent == 0 {
            return;
        }
        for j in exponent..=self.precision() {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            hi[0] += &lo[j - exponent];
        }
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn combine(a: &TruncatedSeries, b: &TruncatedSeries, subtract: bool) -> TruncatedSeries {
    let p = a.precision().min(b.precision());
    let coeffs = a.coeffs[..=p]
        .iter()
        .zip(&b.coeffs[..=p])
        .map(|(x, y)| if subtract { x - y } else { x + y })
        .collect();
    TruncatedSeries { coeffs }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        combine(self, rhs, false)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        combine(self, rhs, true)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Truncated Cauchy product. Zero coefficients of the left operand are
    /// skipped, so multiplying a sparse theta sum into a dense series is cheap.
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let p = self.precision().min(rhs.precision());
        let mut out = vec![BigInt::zero(); p + 1];
        for (i, a) in self.coeffs[..=p].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let tail = &rhs.coeffs[..=p - i];
            let slot = &mut out[i..];
            if a.is_one() {
                for (o, b) in slot.iter_mut().zip(tail) {
                    *o += b;
                }
            } else if (-a).is_one() {
                for (o, b) in slot.iter_mut().zip(tail) {
                    *o -= b;
                }
            } else {
                for (o, b) in slot.iter_mut().zip(tail) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TruncatedSeries {
    /// Renders as `1 - q - q^2 + q^5 + O(q^8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            write!(f, "O(q^{})", self.precision() + 1)
        } else {
            write!(f, " + O(q^{})", self.precision() + 1)
        }
    }
}

impl Serialize for TruncatedSeries {
    /// Serializes as an array of decimal strings so no consumer has to parse
    /// integers wider than 64 bits.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Selects `(1 - q^n)` or `(1 + q^n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorSign {
    Minus,
    Plus,
}

/// Whether a [`ResidueCondition`] keeps the listed residues or their complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueMode {
    Include,
    Exclude,
}

/// A congruence condition on positive integers, used both for products of
/// `(1 ± q^n)` and for the set of parts allowed in a restricted partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueCondition {
    modulus: u64,
    residues: BTreeSet<u64>,
    sign: FactorSign,
    mode: ResidueMode,
}

impl ResidueCondition {
    pub fn new(
        modulus: u64,
        residues: impl IntoIterator<Item = u64>,
        sign: FactorSign,
        mode: ResidueMode,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Usage("modulus must be positive".to_string()));
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&r) = residues.iter().find(|&&r| r >= modulus) {
            return Err(Error::Usage(format!(
                "residue {r} is not in [0, {modulus})"
            )));
        }
        if mode == ResidueMode::Include && residues.is_empty() {
            return Err(Error::Usage(
                "an include condition needs at least one residue".to_string(),
            ));
        }
        Ok(Self {
            modulus,
            residues,
            sign,
            mode,
        })
    }

    /// Condition built from `±r (mod modulus)` for every listed `r`, which is
    /// how congruence classes are usually written down.
    pub fn symmetric(
        modulus: u64,
        reps: &[u64],
        sign: FactorSign,
        mode: ResidueMode,
    ) -> Result<Self> {
        let mut residues = BTreeSet::new();
        for &r in reps {
            let r = r % modulus;
            residues.insert(r);
            residues.insert((modulus - r) % modulus);
        }
        Self::new(modulus, residues, sign, mode)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn sign(&self) -> FactorSign {
        self.sign
    }

    pub fn mode(&self) -> ResidueMode {
        self.mode
    }

    pub fn with_sign(mut self, sign: FactorSign) -> Self {
        self.sign = sign;
        self
    }

    /// True when `n` satisfies the condition.
    pub fn admits(&self, n: u64) -> bool {
        let hit = self.residues.contains(&(n % self.modulus));
        match self.mode {
            ResidueMode::Include => hit,
            ResidueMode::Exclude => !hit,
        }
    }
}

/// `(q)_∞ = Π_{n≥1} (1 - q^n)`, generated from the pentagonal expansion
/// `1 + Σ_{m≥1} (-1)^m q^{m(3m-1)/2} (1 + q^m)` rather than by multiplying factors.
pub fn euler_product(precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(precision);
    s.coeffs[0] = BigInt::one();
    let mut m = 1usize;
    loop {
        let low = m * (3 * m - 1) / 2;
        if low > precision {
            break;
        }
        let sign = if m.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        s.coeffs[low] += &sign;
        let high = low + m;
        if high <= precision {
            s.coeffs[high] += &sign;
        }
        m += 1;
    }
    s
}

static INVERSE_EULER: RwLock<Option<TruncatedSeries>> = RwLock::new(None);

/// `1/(q)_∞`, the partition generating function, obtained by inverting
/// [`euler_product`]. The longest expansion computed so far is cached.
pub fn inverse_euler(precision: usize) -> TruncatedSeries {
    if let Some(s) = INVERSE_EULER.read().unwrap().as_ref() {
        if s.precision() >= precision {
            return s.truncated(precision);
        }
    }
    let fresh = euler_product(precision)
        .invert()
        .expect("(q)_inf has constant term 1");
    let mut slot = INVERSE_EULER.write().unwrap();
    if slot.as_ref().is_none_or(|s| s.precision() < precision) {
        *slot = Some(fresh.clone());
    }
    fresh
}

/// `(q)_n = (1 - q)(1 - q^2)...(1 - q^n)` truncated to `precision`.
pub fn pochhammer_finite(n: usize, precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(precision);
    for k in 1..=n.min(precision) {
        s.mul_binomial_in_place(k, FactorSign::Minus);
    }
    s
}

/// `Σ_{n ≥ n_start} (-1)^n q^{e(n)}` restricted to exponents `≤ precision`.
///
/// Summation stops once `e(n)` has exceeded the precision for
/// [`THETA_STOP_WINDOW`] consecutive indices, so `e` must be eventually
/// increasing. An exponent function that never leaves the window (or produces
/// a negative exponent) is reported as a domain error.
pub fn alternating_theta<F>(exponent: F, n_start: i64, precision: usize) -> Result<TruncatedSeries>
where
    F: Fn(i64) -> i64,
{
    let mut s = TruncatedSeries::zero(precision);
    let mut outside = 0usize;
    for n in (n_start..).take(THETA_ITERATION_CAP as usize) {
        let e = exponent(n);
        if e < 0 {
            return Err(Error::Domain(format!(
                "theta exponent e({n}) = {e} is negative"
            )));
        }
        if e as u64 > precision as u64 {
            outside += 1;
            if outside >= THETA_STOP_WINDOW {
                return Ok(s);
            }
        } else {
            outside = 0;
            if n.rem_euclid(2) == 0 {
                s.coeffs[e as usize] += 1;
            } else {
                s.coeffs[e as usize] -= 1;
            }
        }
    }
    Err(Error::Domain(format!(
        "theta sum did not leave the truncation window within {THETA_ITERATION_CAP} terms"
    )))
}

/// Bilateral sum `Σ_{n ∈ ℤ} (-1)^n q^{e(n)}`, split into `n ≥ 0` and `n < 0`.
pub fn bilateral_theta<F>(exponent: F, precision: usize) -> Result<TruncatedSeries>
where
    F: Fn(i64) -> i64,
{
    let forward = alternating_theta(&exponent, 0, precision)?;
    let backward = alternating_theta(|m| exponent(-m), 1, precision)?;
    Ok(&forward + &backward)
}

/// `Π (1 ± q^n)` over `1 ≤ n ≤ precision` satisfying `cond`.
pub fn residue_product(cond: &ResidueCondition, precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(precision);
    for n in 1..=precision {
        if cond.admits(n as u64) {
            s.mul_binomial_in_place(n, cond.sign());
        }
    }
    s
}

/// `1 / Π (1 - q^n)` over `1 ≤ n ≤ precision` satisfying `cond`; the sign of
/// `cond` is ignored.
pub fn residue_product_inverse(cond: &ResidueCondition, precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(precision);
    for n in 1..=precision {
        if cond.admits(n as u64) {
            s.div_one_minus_in_place(n);
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Modulus `2k`.
    Even,
    /// Modulus `2k + 1`.
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Sum,
    Product,
}

impl Parity {
    pub fn modulus(self, k: u64) -> u64 {
        match self {
            Parity::Even => 2 * k,
            Parity::Odd => 2 * k + 1,
        }
    }
}

/// One side of a univariate Jacobi triple product specialization with
/// modulus `M = 2k` (even) or `M = 2k + 1` (odd):
///
/// ```text
/// Σ_{n∈ℤ} (-1)^n q^{M n(n+1)/2 - i n} = Π_{n≥0} (1 - q^{M(n+1)}) (1 - q^{Mn+i}) (1 - q^{M(n+1)-i})
/// ```
pub fn jtp_specialized(
    k: u64,
    i: u64,
    parity: Parity,
    side: Side,
    precision: usize,
) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".to_string()));
    }
    let modulus = parity.modulus(k);
    if i == 0 || i >= modulus {
        return Err(Error::Domain(format!(
            "i = {i} must lie in 1..={}",
            modulus - 1
        )));
    }
    match side {
        Side::Sum => {
            let (m, i) = (modulus as i64, i as i64);
            bilateral_theta(|n| m * n * (n + 1) / 2 - i * n, precision)
        }
        Side::Product => {
            let mut s = TruncatedSeries::one(precision);
            let (m, p) = (modulus as usize, precision);
            let i = i as usize;
            let mut n = 0usize;
            while m * n + i.min(m - i) <= p {
                for e in [m * (n + 1), m * n + i, m * (n + 1) - i] {
                    s.mul_binomial_in_place(e, FactorSign::Minus);
                }
                n += 1;
            }
            Ok(s)
        }
    }
}
