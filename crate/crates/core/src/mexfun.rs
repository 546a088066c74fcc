//! `p_{A,a}(n)` and `p̄_{A,a}(n)`, each computed three independent ways.
//!
//! * enumeration: classify the mex of every partition of `n`;
//! * generating function: `F_{A,a} = (1/(q)_∞) Σ_{j≥0} (-1)^j q^{A j(j-1)/2 + a j}`
//!   and `F̄_{A,a} = (1/(q)_∞) Σ_{j≥0} (-1)^j q^{A j(j+1)/2 + a(j+1)}`;
//! * recurrence: `p_{A,a}(n) = p(n) + Σ_{m≥1} [p(n - A·C(2m,2) - 2ma) - p(n - A·C(2m-1,2) - (2m-1)a)]`.
//!
//! By convention both functions vanish for negative `n`, and `p_{A,a}(0) = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{enumeration_cap, p_count};
use crate::series::{alternating_theta, inverse_euler, TruncatedSeries};
use crate::statistics::{census, MexParams};

/// Which of the three routes produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Enumeration,
    Series,
    Recurrence,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::Series => "series",
            Method::Recurrence => "recurrence",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" | "enumeration" => Ok(Method::Enumeration),
            "series" => Ok(Method::Series),
            "recurrence" => Ok(Method::Recurrence),
            other => Err(Error::Usage(format!(
                "unknown method '{other}' (expected enum, series or recurrence)"
            ))),
        }
    }
}

/// Enumeration when `n` is within the enumeration cap, otherwise series.
pub fn default_method(n: i64) -> Method {
    if n <= enumeration_cap() as i64 {
        Method::Enumeration
    } else {
        Method::Series
    }
}

fn enum_split(params: MexParams, n: i64) -> Result<(BigInt, BigInt)> {
    if n < 0 {
        return Ok((BigInt::zero(), BigInt::zero()));
    }
    let (p, pbar) = census(n as usize)?.mex_split(params);
    Ok((p.into(), pbar.into()))
}

/// `p_{A,a}(n)` by enumerating the partitions of `n`.
pub fn p_mex_enum(params: MexParams, n: i64) -> Result<BigInt> {
    Ok(enum_split(params, n)?.0)
}

/// `p̄_{A,a}(n)` by enumerating the partitions of `n`.
pub fn pbar_mex_enum(params: MexParams, n: i64) -> Result<BigInt> {
    Ok(enum_split(params, n)?.1)
}

/// Numerator of `F_{A,a}`: `Σ_{j≥0} (-1)^j q^{A j(j-1)/2 + a j}`.
pub fn mex_theta(params: MexParams, precision: usize) -> TruncatedSeries {
    let (a_step, a) = (params.step() as i64, params.base() as i64);
    alternating_theta(|j| a_step * j * (j - 1) / 2 + a * j, 0, precision)
        .expect("quadratic exponent with positive leading term terminates")
}

/// Numerator of `F̄_{A,a}`: `Σ_{j≥0} (-1)^j q^{A j(j+1)/2 + a(j+1)}`.
pub fn mex_theta_bar(params: MexParams, precision: usize) -> TruncatedSeries {
    let (a_step, a) = (params.step() as i64, params.base() as i64);
    alternating_theta(|j| a_step * j * (j + 1) / 2 + a * (j + 1), 0, precision)
        .expect("quadratic exponent with positive leading term terminates")
}

/// `F_{A,a}(q)` to precision `n_max`.
pub fn mex_generating_function(params: MexParams, n_max: usize) -> TruncatedSeries {
    &mex_theta(params, n_max) * &inverse_euler(n_max)
}

/// `F̄_{A,a}(q)` to precision `n_max`.
pub fn mex_generating_function_bar(params: MexParams, n_max: usize) -> TruncatedSeries {
    &mex_theta_bar(params, n_max) * &inverse_euler(n_max)
}

/// `p_{A,a}(0..=n_max)` read off `F_{A,a}`.
pub fn p_mex_series(params: MexParams, n_max: usize) -> Vec<BigInt> {
    mex_generating_function(params, n_max).into_coeffs()
}

/// `p̄_{A,a}(0..=n_max)` read off `F̄_{A,a}`.
pub fn pbar_mex_series(params: MexParams, n_max: usize) -> Vec<BigInt> {
    mex_generating_function_bar(params, n_max).into_coeffs()
}

/// `p_{A,a}(n)` from the recurrence over `p`.
pub fn p_mex_recurrence(params: MexParams, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let (a_step, a) = (params.step() as i64, params.base() as i64);
    let mut total = p_count(n);
    let mut m = 1i64;
    loop {
        // A·C(2m,2) + 2ma and A·C(2m-1,2) + (2m-1)a, both strictly increasing in m
        let even = a_step * m * (2 * m - 1) + 2 * m * a;
        let odd = a_step * (2 * m - 1) * (m - 1) + (2 * m - 1) * a;
        if n - even < 0 && n - odd < 0 {
            break;
        }
        total += p_count(n - even);
        total -= p_count(n - odd);
        m += 1;
    }
    total
}

/// `p̄_{A,a}(n) = p(n) - p_{A,a}(n)` for `n ≥ 0`, via the recurrence.
pub fn pbar_mex_recurrence(params: MexParams, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    p_count(n) - p_mex_recurrence(params, n)
}

/// `p_{A,a}(n)` by the requested method.
pub fn p_mex(params: MexParams, n: i64, method: Method) -> Result<BigInt> {
    match method {
        Method::Enumeration => p_mex_enum(params, n),
        Method::Recurrence => Ok(p_mex_recurrence(params, n)),
        Method::Series if n < 0 => Ok(BigInt::zero()),
        Method::Series => Ok(p_mex_series(params, n as usize).swap_remove(n as usize)),
    }
}

/// `p̄_{A,a}(n)` by the requested method.
pub fn pbar_mex(params: MexParams, n: i64, method: Method) -> Result<BigInt> {
    match method {
        Method::Enumeration => pbar_mex_enum(params, n),
        Method::Recurrence => Ok(pbar_mex_recurrence(params, n)),
        Method::Series if n < 0 => Ok(BigInt::zero()),
        Method::Series => Ok(pbar_mex_series(params, n as usize).swap_remove(n as usize)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a_step: u64, a: u64) -> MexParams {
        MexParams::new(a_step, a).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn mex_two_three_at_six() {
        assert_eq!(p_mex_enum(params(2, 3), 6).unwrap(), 8.into());
        assert_eq!(pbar_mex_enum(params(2, 3), 6).unwrap(), 3.into());
        assert_eq!(p_mex_recurrence(params(2, 3), 6), 8.into());
        assert_eq!(p_mex_series(params(2, 3), 6)[6], 8.into());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(p_mex_enum(params(3, 1), 8).unwrap(), 10.into());
        for (s, a) in [(1, 1), (4, 9), (7, 2)] {
            assert_eq!(p_mex_enum(params(s, a), 0).unwrap(), 1.into());
            assert_eq!(pbar_mex_enum(params(s, a), 0).unwrap(), 0.into());
        }
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            p_mex_series(params(3, 2), 5)[1..],
            ints(&[1, 1, 2, 3, 4])[..]
        );
        assert_eq!(
            pbar_mex_series(params(1, 2), 8)[1..],
            ints(&[0, 1, 1, 2, 2, 4, 5, 8])[..]
        );
        let f = p_mex_series(params(2, 9), 8);
        for (n, c) in f.iter().enumerate() {
            assert_eq!(*c, p_count(n as i64));
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(p_mex_recurrence(params(3, 6), 5), 7.into());
        assert_eq!(p_mex_recurrence(params(1, 1), 4), 3.into());
        assert_eq!(p_mex_recurrence(params(1, 1), -2), 0.into());
    }

    #[test]
    fn negative_arguments_vanish() {
        for m in [Method::Enumeration, Method::Series, Method::Recurrence] {
            assert!(p_mex(params(4, 6), -1, m).unwrap().is_zero());
            assert!(pbar_mex(params(4, 6), -3, m).unwrap().is_zero());
        }
    }

    #[test]
    fn three_methods_agree_small() {
        for a_step in 1..=5 {
            for a in 1..=7 {
                let pr = params(a_step, a);
                let series = p_mex_series(pr, 20);
                let series_bar = pbar_mex_series(pr, 20);
                for n in 0..=20i64 {
                    let e = p_mex_enum(pr, n).unwrap();
                    assert_eq!(e, series[n as usize], "{pr:?} n={n}");
                    assert_eq!(e, p_mex_recurrence(pr, n), "{pr:?} n={n}");
                    assert_eq!(pbar_mex_enum(pr, n).unwrap(), series_bar[n as usize]);
                }
            }
        }
    }

    #[test]
    fn enumeration_above_cap_is_capacity_error() {
        let n = crate::partitions::MAX_ENUMERATION_CAP as i64 + 1;
        assert!(matches!(
            p_mex_enum(params(1, 1), n),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn method_parsing() {
        assert_eq!("enum".parse::<Method>().unwrap(), Method::Enumeration);
        assert_eq!("series".parse::<Method>().unwrap(), Method::Series);
        assert!("magic".parse::<Method>().is_err());
        assert_eq!(default_method(5), Method::Enumeration);
        assert_eq!(default_method(1000), Method::Series);
    }
}
