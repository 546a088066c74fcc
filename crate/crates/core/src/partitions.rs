//! Integer partitions: canonical representation, streaming enumeration and
//! exact counting.
//!
//! Counting here never goes through [`crate::series`]: `p(n)` uses the
//! pentagonal recurrence and restricted counts use knapsack-style dynamic
//! programming, so these numbers can be checked against the series engine.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{FactorSign, ResidueCondition};

/// Default largest `n` for which enumeration-backed methods will run.
pub const DEFAULT_ENUMERATION_CAP: usize = 70;
/// Hard ceiling for the enumeration cap; part sets are stored as 128-bit masks.
pub const MAX_ENUMERATION_CAP: usize = 127;

static ENUMERATION_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ENUMERATION_CAP);

pub fn enumeration_cap() -> usize {
    ENUMERATION_CAP.load(Ordering::Relaxed)
}

/// Sets the enumeration cap, clamped to [`MAX_ENUMERATION_CAP`]. Returns the
/// value actually in effect.
pub fn set_enumeration_cap(cap: usize) -> usize {
    let cap = cap.min(MAX_ENUMERATION_CAP);
    ENUMERATION_CAP.store(cap, Ordering::Relaxed);
    cap
}

pub(crate) fn check_enumeration_cap(n: usize) -> Result<()> {
    let cap = enumeration_cap();
    if n > cap {
        return Err(Error::Capacity(format!(
            "n = {n} exceeds the enumeration cap of {cap}; use the series method instead"
        )));
    }
    Ok(())
}

/// A partition stored with its parts in non-increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes `parts` (sorts them in non-increasing order). Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Usage(
                "partition parts must be at least 1".to_string(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Number of times `part` occurs.
    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn contains(&self, part: u32) -> bool {
        // parts are sorted descending
        self.parts.binary_search_by(|p| part.cmp(p)).is_ok()
    }
}

impl fmt::Display for Partition {
    /// `3+2+1`; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts comma- or plus-separated parts in any order, e.g. `1,3,3` or `3+3+1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split([',', '+'])
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::Usage(format!("'{t}' is not an integer part")))
                    .and_then(|v| {
                        u32::try_from(v).ok().filter(|&v| v >= 1).ok_or_else(|| {
                            Error::Usage(format!("part {v} is not a positive integer"))
                        })
                    })
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(parts)
    }
}

/// Streams every partition of `n` exactly once, in reverse-lexicographic
/// order: `[n]` first, `[1; n]` last.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut ones = 0u32;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let v = *last;
            let mut rem = ones + 1;
            while rem > v {
                succ.push(v);
                rem -= v;
            }
            succ.push(rem);
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    Partitions::new(n).collect()
}

static P_TABLE: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `p(n)`, the number of partitions of `n`; zero for negative `n`.
///
/// Values come from Euler's pentagonal recurrence and are memoized in a
/// shared table that only ever grows.
pub fn p_count(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let n = n as usize;
    if let Some(v) = P_TABLE.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = P_TABLE.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let m = table.len();
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = g1 + k;
            let mut term = table[m - g1].clone();
            if g2 <= m {
                term += &table[m - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        table.push(acc);
    }
    table[n].clone()
}

/// Counts partitions of `n` into parts admitted by `allowed`, optionally
/// combined with a second, distinct-parts partition drawn from `distinct`.
///
/// The result is the coefficient of `q^n` in
/// `Π_{k ∈ distinct} (1 ± q^k) / Π_{k ∈ allowed} (1 - q^k)`: pairs of an
/// unrestricted partition into `allowed` parts and a partition into distinct
/// `distinct` parts with total `n`. Residues in both sets therefore occur in
/// two colours. With a [`FactorSign::Minus`] distinct set each distinct part
/// contributes a factor `-1`, giving a signed count.
pub fn count_parts_restricted(
    n: usize,
    allowed: &ResidueCondition,
    distinct: Option<&ResidueCondition>,
) -> BigInt {
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for k in (1..=n).filter(|&k| allowed.admits(k as u64)) {
        for s in k..=n {
            let (lo, hi) = ways.split_at_mut(s);
            hi[0] += &lo[s - k];
        }
    }
    if let Some(d) = distinct {
        for k in (1..=n).filter(|&k| d.admits(k as u64)) {
            for s in (k..=n).rev() {
                let (lo, hi) = ways.split_at_mut(s);
                match d.sign() {
                    FactorSign::Plus => hi[0] += &lo[s - k],
                    FactorSign::Minus => hi[0] -= &lo[s - k],
                }
            }
        }
    }
    ways.swap_remove(n)
}

/// `(p_e(n), p_o(n))`: partitions of `n` into an even / odd number of parts.
pub fn parity_counts(n: usize) -> (BigInt, BigInt) {
    let (mut even, mut odd) = parity_table(n);
    (even.swap_remove(n), odd.swap_remove(n))
}

/// `p_e(0..=n_max)` and `p_o(0..=n_max)` in one pass, tracking the parity of
/// the number of parts while adding part sizes one at a time.
pub fn parity_table(n_max: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut even = vec![BigInt::zero(); n_max + 1];
    let mut odd = vec![BigInt::zero(); n_max + 1];
    even[0] = BigInt::one();
    for k in 1..=n_max {
        for s in k..=n_max {
            let e = even[s - k].clone();
            let o = odd[s - k].clone();
            even[s] += o;
            odd[s] += e;
        }
    }
    (even, odd)
}

pub fn p_even_parts(n: usize) -> BigInt {
    parity_counts(n).0
}

pub fn p_odd_parts(n: usize) -> BigInt {
    parity_counts(n).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ResidueMode;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_six_in_reverse_lex_order() {
        let all = enumerate_partitions(6);
        assert_eq!(all.len(), 11);
        assert_eq!(all[0], part(&[6]));
        assert_eq!(all[10], part(&[1, 1, 1, 1, 1, 1]));
        let shown: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            [
                "6",
                "5+1",
                "4+2",
                "4+1+1",
                "3+3",
                "3+2+1",
                "3+1+1+1",
                "2+2+2",
                "2+2+1+1",
                "2+1+1+1+1",
                "1+1+1+1+1+1"
            ]
        );
    }

    #[test]
    fn zero_has_one_empty_partition() {
        let all = enumerate_partitions(0);
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four() {
        assert_eq!(enumerate_partitions(4).len(), 5);
    }

    #[test]
    fn p_count_values() {
        assert_eq!(p_count(6), BigInt::from(11));
        assert_eq!(p_count(0), BigInt::one());
        assert_eq!(p_count(-3), BigInt::zero());
        assert_eq!(p_count(100), "190569292".parse::<BigInt>().unwrap());
        // exceeds u64
        assert_eq!(
            p_count(500),
            "2300165032574323995027".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn enumeration_matches_count() {
        for n in 0..=40u32 {
            assert_eq!(
                BigInt::from(enumerate_partitions(n).len()),
                p_count(n as i64),
                "n = {n}"
            );
        }
    }

    #[test]
    fn partition_parsing_canonicalizes() {
        let p: Partition = "1,3,3".parse().unwrap();
        assert_eq!(p.parts(), &[3, 3, 1]);
        assert_eq!(p.total(), 7);
        assert!(p.contains(1) && p.contains(3) && !p.contains(2));
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!("3+2+1".parse::<Partition>().unwrap().to_string(), "3+2+1");
    }

    #[test]
    fn restricted_counts() {
        let mod32 = ResidueCondition::symmetric(
            32,
            &[2, 8, 12, 14],
            FactorSign::Minus,
            ResidueMode::Include,
        )
        .unwrap();
        assert_eq!(count_parts_restricted(2, &mod32, None), BigInt::one());
        let two_mod_four =
            ResidueCondition::new(4, [2], FactorSign::Minus, ResidueMode::Include).unwrap();
        assert_eq!(
            count_parts_restricted(2, &two_mod_four, None),
            BigInt::one()
        );
        assert_eq!(
            count_parts_restricted(0, &two_mod_four, None),
            BigInt::one()
        );
        assert_eq!(
            count_parts_restricted(3, &two_mod_four, None),
            BigInt::zero()
        );
        // 2+2+2 and 6
        assert_eq!(
            count_parts_restricted(6, &two_mod_four, None),
            BigInt::from(2)
        );
    }

    #[test]
    fn restricted_count_with_distinct_colour() {
        // allowed: only 1s; distinct: {2}. Pairs for n = 4: 1111, 11|2
        let ones =
            ResidueCondition::new(100, [1], FactorSign::Minus, ResidueMode::Include).unwrap();
        let twos = ResidueCondition::new(100, [2], FactorSign::Plus, ResidueMode::Include).unwrap();
        assert_eq!(
            count_parts_restricted(4, &ones, Some(&twos)),
            BigInt::from(2)
        );
        let signed = twos.clone().with_sign(FactorSign::Minus);
        assert_eq!(
            count_parts_restricted(4, &ones, Some(&signed)),
            BigInt::zero()
        );
    }

    #[test]
    fn parity_counts_small() {
        assert_eq!(p_even_parts(6), BigInt::from(6));
        assert_eq!(p_odd_parts(6), BigInt::from(5));
        assert_eq!(p_even_parts(0), BigInt::one());
        assert_eq!(p_odd_parts(0), BigInt::zero());
        for n in 0..=60usize {
            let (e, o) = parity_counts(n);
            assert_eq!(e + o, p_count(n as i64));
        }
    }

    #[test]
    fn enumeration_brute_parity() {
        for n in 0..=20u32 {
            let even = enumerate_partitions(n)
                .iter()
                .filter(|p| p.len() % 2 == 0)
                .count();
            assert_eq!(p_even_parts(n as usize), BigInt::from(even));
        }
    }
}
