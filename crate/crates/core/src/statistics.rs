//! Partition statistics: `mex_{A,a}`, rank and crank of a single partition,
//! and aggregate counts `N(m,n)`, `M(m,n)`, moments, `spt(n)` and the number
//! of Garden-of-Eden partitions (rank ≤ -2).
//!
//! Aggregates have a combinatorial implementation backed by a per-`n`
//! [`Census`] of all partitions, and where a generating function exists, a
//! series implementation that reads a coefficient.
//!
//! # Crank at `n = 1`
//!
//! The crank generating function gives `M(0,1) = -1` and `M(±1,1) = 1`, while
//! the only partition of 1 has crank `-1`. For every `n ≥ 2` the two agree.
//! [`CountMethod`] selects which one a caller gets; identity checks involving
//! crank counts use the series values.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{check_enumeration_cap, Partition, Partitions};
use crate::series::{inverse_euler, TruncatedSeries};

/// The pair `(A, a)` of `mex_{A,a}`: candidates are `a, a + A, a + 2A, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MexParams {
    step: u64,
    base: u64,
}

impl MexParams {
    pub fn new(step: u64, base: u64) -> Result<Self> {
        if step == 0 || base == 0 {
            return Err(Error::Usage(format!(
                "mex parameters must be positive, got A = {step}, a = {base}"
            )));
        }
        Ok(Self { step, base })
    }

    /// `A`.
    pub fn step(self) -> u64 {
        self.step
    }

    /// `a`.
    pub fn base(self) -> u64 {
        self.base
    }

    /// True when a mex value `m` (necessarily `≡ a mod A`) is `≡ a mod 2A`.
    pub fn is_unbarred(self, mex: u64) -> bool {
        ((mex - self.base) / self.step).is_multiple_of(2)
    }
}

/// Smallest element of `{a, a + A, a + 2A, ...}` that is not a part of `pi`.
pub fn mex(pi: &Partition, params: MexParams) -> u64 {
    let mut m = params.base;
    while u32::try_from(m).is_ok_and(|m| pi.contains(m)) {
        m += params.step;
    }
    m
}

/// Same as [`mex`], reading membership from a bitmask of parts (bit `k` set
/// when `k` is a part).
pub(crate) fn mex_from_mask(mask: u128, params: MexParams) -> u64 {
    let mut m = params.base;
    while m < 128 && mask & (1u128 << m) != 0 {
        m += params.step;
    }
    m
}

/// Largest part minus number of parts; 0 for the empty partition.
pub fn rank(pi: &Partition) -> i64 {
    match pi.largest() {
        Some(l) => i64::from(l) - pi.len() as i64,
        None => 0,
    }
}

/// Largest part if there are no ones; otherwise the number of parts larger
/// than the number of ones, minus the number of ones. 0 for the empty partition.
pub fn crank(pi: &Partition) -> i64 {
    let ones = pi.multiplicity(1) as i64;
    if ones == 0 {
        return pi.largest().map_or(0, i64::from);
    }
    let larger = pi.parts().iter().filter(|&&p| i64::from(p) > ones).count() as i64;
    larger - ones
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Combinatorial,
    Series,
}

/// Histograms and part-set summary for all partitions of one `n`.
#[derive(Debug)]
pub struct Census {
    n: usize,
    total: u64,
    part_sets: Vec<(u128, u64)>,
    rank_hist: BTreeMap<i64, u64>,
    crank_hist: BTreeMap<i64, u64>,
    spt: u64,
}

impl Census {
    fn build(n: usize) -> Self {
        let mut sets: HashMap<u128, u64> = HashMap::new();
        let mut rank_hist = BTreeMap::new();
        let mut crank_hist = BTreeMap::new();
        let mut spt = 0u64;
        let mut total = 0u64;
        for pi in Partitions::new(n as u32) {
            total += 1;
            let mask = pi.parts().iter().fold(0u128, |m, &p| m | (1u128 << p));
            *sets.entry(mask).or_default() += 1;
            *rank_hist.entry(rank(&pi)).or_default() += 1;
            *crank_hist.entry(crank(&pi)).or_default() += 1;
            if let Some(s) = pi.smallest() {
                spt += pi.multiplicity(s) as u64;
            }
        }
        let mut part_sets: Vec<(u128, u64)> = sets.into_iter().collect();
        part_sets.sort_unstable();
        Self {
            n,
            total,
            part_sets,
            rank_hist,
            crank_hist,
            spt,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p(n)` as counted by enumeration.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// `(p_{A,a}(n), p̄_{A,a}(n))` by classifying every partition's mex.
    pub fn mex_split(&self, params: MexParams) -> (u64, u64) {
        let mut unbarred = 0;
        let mut barred = 0;
        for &(mask, mult) in &self.part_sets {
            if params.is_unbarred(mex_from_mask(mask, params)) {
                unbarred += mult;
            } else {
                barred += mult;
            }
        }
        (unbarred, barred)
    }

    pub fn rank_histogram(&self) -> &BTreeMap<i64, u64> {
        &self.rank_hist
    }

    pub fn crank_histogram(&self) -> &BTreeMap<i64, u64> {
        &self.crank_hist
    }

    pub fn rank_count(&self, m: i64) -> u64 {
        self.rank_hist.get(&m).copied().unwrap_or(0)
    }

    pub fn crank_count(&self, m: i64) -> u64 {
        self.crank_hist.get(&m).copied().unwrap_or(0)
    }

    /// Number of partitions whose rank lies in `range`.
    pub fn rank_count_in(&self, range: impl std::ops::RangeBounds<i64>) -> u64 {
        self.rank_hist.range(range).map(|(_, c)| c).sum()
    }

    pub fn crank_count_in(&self, range: impl std::ops::RangeBounds<i64>) -> u64 {
        self.crank_hist.range(range).map(|(_, c)| c).sum()
    }

    pub fn spt(&self) -> u64 {
        self.spt
    }
}

type CensusSlot = Arc<OnceLock<Arc<Census>>>;

static CENSUS_MEMO: OnceLock<Mutex<HashMap<usize, CensusSlot>>> = OnceLock::new();

/// Census of all partitions of `n`, built once per `n` and shared.
pub fn census(n: usize) -> Result<Arc<Census>> {
    check_enumeration_cap(n)?;
    let slot = {
        let mut memo = CENSUS_MEMO
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .unwrap();
        Arc::clone(memo.entry(n).or_default())
    };
    Ok(Arc::clone(slot.get_or_init(|| Arc::new(Census::build(n)))))
}

/// `Σ_{n≥0} N(m,n) q^n = (1/(q)_∞) Σ_{j≥1} (-1)^{j-1} q^{j(3j-1)/2 + j|m|} (1 - q^j)`.
pub fn rank_series(m: i64, precision: usize) -> TruncatedSeries {
    dyson_type_series(|j| j * (3 * j - 1) / 2, m, precision)
}

/// `Σ_{n≥0} M(m,n) q^n = (1/(q)_∞) Σ_{j≥1} (-1)^{j-1} q^{j(j-1)/2 + j|m|} (1 - q^j)`.
pub fn crank_series(m: i64, precision: usize) -> TruncatedSeries {
    dyson_type_series(|j| j * (j - 1) / 2, m, precision)
}

fn dyson_type_series(base: impl Fn(u64) -> u64, m: i64, precision: usize) -> TruncatedSeries {
    let mut numer = TruncatedSeries::zero(precision);
    let coeffs = numer.coeffs_mut();
    let abs_m = m.unsigned_abs();
    let mut j = 1u64;
    loop {
        let e = base(j) + j * abs_m;
        if e > precision as u64 {
            break;
        }
        let sign: i64 = if j % 2 == 1 { 1 } else { -1 };
        coeffs[e as usize] += sign;
        let e2 = e + j;
        if e2 <= precision as u64 {
            coeffs[e2 as usize] -= sign;
        }
        j += 1;
    }
    &numer * &inverse_euler(precision)
}

/// `N(m, n)`.
pub fn rank_count(m: i64, n: usize, method: CountMethod) -> Result<BigInt> {
    match method {
        CountMethod::Combinatorial => Ok(census(n)?.rank_count(m).into()),
        CountMethod::Series => Ok(rank_series(m, n).coeffs()[n].clone()),
    }
}

/// `M(m, n)`. The two methods differ only at `n = 1` (see the module docs).
pub fn crank_count(m: i64, n: usize, method: CountMethod) -> Result<BigInt> {
    match method {
        CountMethod::Combinatorial => Ok(census(n)?.crank_count(m).into()),
        CountMethod::Series => Ok(crank_series(m, n).coeffs()[n].clone()),
    }
}

/// Crank histogram of `n` as the generating function defines it: `m ↦ M(m,n)`
/// with zero entries dropped.
pub fn crank_histogram_series(n: usize) -> BTreeMap<i64, BigInt> {
    let bound = n as i64 + 1;
    (-bound..=bound)
        .map(|m| (m, crank_series(m, n).coeffs()[n].clone()))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn moment<'a>(k: u32, hist: impl Iterator<Item = (i64, BigInt)> + 'a) -> BigInt {
    hist.map(|(m, c)| BigInt::from(m).pow(k) * c).sum()
}

/// `N_k(n) = Σ_m m^k N(m,n)`, from the enumerated rank histogram.
pub fn rank_moment(k: u32, n: usize) -> Result<BigInt> {
    let c = census(n)?;
    Ok(moment(
        k,
        c.rank_histogram()
            .iter()
            .map(|(&m, &v)| (m, BigInt::from(v))),
    ))
}

/// `M_k(n) = Σ_m m^k M(m,n)` with `M` taken from the chosen method.
///
/// Only `n = 1` distinguishes the methods; the series convention is the one
/// for which `M_2(n) = 2 n p(n)` holds for every `n ≥ 1`.
pub fn crank_moment(k: u32, n: usize, method: CountMethod) -> Result<BigInt> {
    match method {
        CountMethod::Combinatorial => {
            let c = census(n)?;
            Ok(moment(
                k,
                c.crank_histogram()
                    .iter()
                    .map(|(&m, &v)| (m, BigInt::from(v))),
            ))
        }
        CountMethod::Series => Ok(moment(k, crank_histogram_series(n).into_iter())),
    }
}

/// Second moment generating function
/// `(-2/(q)_∞) Σ_{j≥1} (-1)^j q^{e(j)} (1 + q^j)/(1 - q^j)^2`,
/// using `(1 + x)/(1 - x)^2 = Σ_{r≥0} (2r + 1) x^r`.
fn second_moment_series(e: impl Fn(u64) -> u64, precision: usize) -> TruncatedSeries {
    let mut numer = TruncatedSeries::zero(precision);
    let coeffs = numer.coeffs_mut();
    let mut j = 1u64;
    while e(j) <= precision as u64 {
        let sign: i64 = if j.is_multiple_of(2) { -2 } else { 2 };
        let mut r = 0u64;
        loop {
            let x = e(j) + r * j;
            if x > precision as u64 {
                break;
            }
            coeffs[x as usize] += sign * (2 * r as i64 + 1);
            r += 1;
        }
        j += 1;
    }
    &numer * &inverse_euler(precision)
}

/// `Σ N_2(n) q^n`.
pub fn rank_moment2_series(precision: usize) -> TruncatedSeries {
    second_moment_series(|j| j * (3 * j + 1) / 2, precision)
}

/// `Σ M_2(n) q^n`.
pub fn crank_moment2_series(precision: usize) -> TruncatedSeries {
    second_moment_series(|j| j * (j + 1) / 2, precision)
}

/// Total number of appearances of the smallest part over all partitions of `n`.
pub fn spt_direct(n: usize) -> Result<BigInt> {
    Ok(census(n)?.spt().into())
}

/// Number of Garden-of-Eden partitions of `n` (rank ≤ -2).
pub fn goe_count(n: usize) -> Result<BigInt> {
    Ok(census(n)?.rank_count_in(..=-2).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p_count;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn params(a_step: u64, a: u64) -> MexParams {
        MexParams::new(a_step, a).unwrap()
    }

    #[test]
    fn mex_examples() {
        assert_eq!(mex(&part(&[3, 3]), params(2, 3)), 5);
        assert_eq!(mex(&part(&[6]), params(2, 3)), 3);
        assert_eq!(mex(&Partition::empty(), params(4, 7)), 7);
        assert_eq!(mex(&part(&[3, 5, 7, 1]), params(2, 3)), 9);
    }

    #[test]
    fn mex_mask_agrees_with_partition_mex() {
        for pi in Partitions::new(12) {
            let mask = pi.parts().iter().fold(0u128, |m, &p| m | (1u128 << p));
            for a_step in 1..5 {
                for a in 1..8 {
                    assert_eq!(
                        mex(&pi, params(a_step, a)),
                        mex_from_mask(mask, params(a_step, a))
                    );
                }
            }
        }
    }

    #[test]
    fn mex_params_reject_zero() {
        assert!(MexParams::new(0, 1).is_err());
        assert!(MexParams::new(1, 0).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&part(&[4, 3])), 2);
        assert_eq!(rank(&part(&[9])), 8);
        assert_eq!(rank(&part(&[1, 1, 1, 1, 1])), -4);
        assert_eq!(rank(&Partition::empty()), 0);
    }

    #[test]
    fn crank_examples() {
        assert_eq!(crank(&part(&[2, 2, 2])), 2);
        assert_eq!(crank(&part(&[2, 2, 1, 1])), -2);
        assert_eq!(crank(&part(&[3, 2, 2, 1])), 2);
        assert_eq!(crank(&part(&[1])), -1);
        assert_eq!(crank(&Partition::empty()), 0);
    }

    #[test]
    fn rank_count_examples() {
        assert_eq!(
            rank_count(2, 5, CountMethod::Combinatorial).unwrap(),
            1.into()
        );
        assert_eq!(rank_count(2, 5, CountMethod::Series).unwrap(), 1.into());
        let c = census(5).unwrap();
        assert_eq!(c.rank_count_in(2..), 2); // 5 and 4+1
        let total: u64 = census(4).unwrap().rank_histogram().values().sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn crank_count_examples() {
        // only 2+2+2; 4+2 has crank 4
        assert_eq!(
            crank_count(2, 6, CountMethod::Combinatorial).unwrap(),
            1.into()
        );
        assert_eq!(census(6).unwrap().crank_count_in(2..), 4);
        assert_eq!(crank_count(0, 1, CountMethod::Series).unwrap(), (-1).into());
        assert_eq!(crank_count(1, 1, CountMethod::Series).unwrap(), 1.into());
        assert_eq!(crank_count(-1, 1, CountMethod::Series).unwrap(), 1.into());
        assert_eq!(
            crank_count(-1, 1, CountMethod::Combinatorial).unwrap(),
            1.into()
        );
        assert_eq!(
            crank_count(0, 1, CountMethod::Combinatorial).unwrap(),
            0.into()
        );
    }

    #[test]
    fn rank_and_crank_symmetry() {
        for n in 2..=30usize {
            let c = census(n).unwrap();
            for m in 0..=n as i64 {
                assert_eq!(c.rank_count(m), c.rank_count(-m));
                assert_eq!(c.crank_count(m), c.crank_count(-m));
            }
        }
    }

    #[test]
    fn series_counts_match_enumeration() {
        for n in 1..=25usize {
            let c = census(n).unwrap();
            for m in -(n as i64)..=n as i64 {
                assert_eq!(rank_series(m, n).coeffs()[n], c.rank_count(m).into());
                if n >= 2 {
                    assert_eq!(crank_series(m, n).coeffs()[n], c.crank_count(m).into());
                }
            }
        }
    }

    #[test]
    fn moments() {
        assert_eq!(rank_moment(2, 4).unwrap(), 20.into());
        assert_eq!(
            crank_moment(2, 4, CountMethod::Combinatorial).unwrap(),
            40.into()
        );
        assert_eq!(crank_moment(2, 4, CountMethod::Series).unwrap(), 40.into());
        assert_eq!(
            crank_moment(2, 1, CountMethod::Combinatorial).unwrap(),
            1.into()
        );
        assert_eq!(crank_moment(2, 1, CountMethod::Series).unwrap(), 2.into());
        for n in 1..=25usize {
            assert!(rank_moment(1, n).unwrap().is_zero());
            assert!(rank_moment(3, n).unwrap().is_zero());
            assert_eq!(rank_moment(0, n).unwrap(), p_count(n as i64));
        }
    }

    #[test]
    fn second_moment_series_match() {
        let rs = rank_moment2_series(25);
        let cs = crank_moment2_series(25);
        for n in 1..=25usize {
            assert_eq!(rs.coeffs()[n], rank_moment(2, n).unwrap());
            assert_eq!(
                cs.coeffs()[n],
                crank_moment(2, n, CountMethod::Series).unwrap()
            );
        }
    }

    #[test]
    fn spt_values() {
        let expected = [1, 3, 5, 10, 14];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(spt_direct(i + 1).unwrap(), e.into());
        }
    }

    #[test]
    fn goe_values() {
        assert_eq!(goe_count(8).unwrap(), 7.into());
        assert_eq!(goe_count(1).unwrap(), 0.into());
        assert_eq!(goe_count(3).unwrap(), 1.into());
    }

    #[test]
    fn census_respects_cap() {
        assert!(matches!(
            census(crate::partitions::MAX_ENUMERATION_CAP + 1),
            Err(Error::Capacity(_))
        ));
    }
}
