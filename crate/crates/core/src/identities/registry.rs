use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Backing, Case, IdentityCheck};
use crate::error::{Error, Result};
use crate::mexfun::{
    mex_generating_function, p_mex_enum, p_mex_recurrence, p_mex_series, pbar_mex_enum,
    pbar_mex_series,
};
use crate::partitions::{count_parts_restricted, p_count, parity_table};
use crate::series::{
    alternating_theta, euler_product, inverse_euler, jtp_specialized, residue_product,
    residue_product_inverse, FactorSign, Parity, ResidueCondition, ResidueMode, Side,
    TruncatedSeries,
};
use crate::statistics::{
    census, crank_moment, crank_moment2_series, crank_series, goe_count, rank_moment,
    rank_moment2_series, rank_series, spt_direct, CountMethod, MexParams,
};

/// Sweep bounds used by the parameterised checks.
const J_MAX: i64 = 8;
const K_MAX: u64 = 5;
const JTP_K_MAX: u64 = 6;
const STEP_MAX: u64 = 10;
const BASE_MAX: u64 = 15;
const SHIFT_STEP_MAX: u64 = 8;
const SMALL_N_MAX: i64 = 60;

fn mp(step: u64, base: u64) -> MexParams {
    MexParams::new(step, base).expect("registry parameters are positive")
}

fn nu(n: i64) -> usize {
    usize::try_from(n).expect("identity evaluators are called with n >= 0")
}

/// Evaluator reading a precomputed coefficient table; negative indices are 0.
fn table(v: Vec<BigInt>) -> impl Fn(i64) -> Result<BigInt> + Send + Sync + 'static {
    let v = Arc::new(v);
    move |n| {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        v.get(n as usize).cloned().ok_or_else(|| {
            Error::Capacity(format!("coefficient {n} lies beyond the precomputed table"))
        })
    }
}

fn coeffs(s: TruncatedSeries) -> impl Fn(i64) -> Result<BigInt> + Send + Sync + 'static {
    table(s.into_coeffs())
}

fn sym(modulus: u64, reps: &[u64], sign: FactorSign, mode: ResidueMode) -> ResidueCondition {
    ResidueCondition::symmetric(modulus, reps, sign, mode).expect("registry residues are valid")
}

fn residues(modulus: u64, rs: &[u64], sign: FactorSign, mode: ResidueMode) -> ResidueCondition {
    ResidueCondition::new(modulus, rs.iter().copied(), sign, mode)
        .expect("registry residues are valid")
}

fn every_part() -> ResidueCondition {
    residues(1, &[], FactorSign::Minus, ResidueMode::Exclude)
}

fn rank_at_least(j: i64, n: i64) -> Result<BigInt> {
    Ok(census(nu(n))?.rank_count_in(j..).into())
}

fn rank_below(j: i64, n: i64) -> Result<BigInt> {
    Ok(census(nu(n))?.rank_count_in(..j).into())
}

/// `M(m, n)` from the crank generating function for `0 ≤ m ≤ n_max`,
/// indexed `[m][n]`; `M(-m, n) = M(m, n)`.
fn crank_table(n_max: usize) -> Arc<Vec<Vec<BigInt>>> {
    Arc::new(
        (0..=n_max as i64 + 1)
            .map(|m| crank_series(m, n_max).into_coeffs())
            .collect(),
    )
}

fn crank_sum(t: &[Vec<BigInt>], lo: i64, hi: i64, n: i64) -> BigInt {
    let bound = n + 1;
    (lo.max(-bound)..=hi.min(bound))
        .map(|m| t[m.unsigned_abs() as usize][nu(n)].clone())
        .sum()
}

/// Coefficients of `Σ_{m≥0} t^m / (q)_m` at `t = sign · q^j`, built term by
/// term from `t^m/(q)_m = t^{m-1}/(q)_{m-1} · t/(1 - q^m)`.
fn cauchy_sum(j: usize, negate: bool, precision: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::one(precision);
    let mut term = TruncatedSeries::one(precision);
    let mut m = 1usize;
    while m * j <= precision {
        term = term.shifted(j);
        if negate {
            term = -&term;
        }
        term.div_one_minus_in_place(m);
        total = &total + &term;
        m += 1;
    }
    total
}

/// `Σ_{n≥1} (-1)^n (q^{c n² - 1} - q^{n² - 1})`.
fn quadratic_theta_difference(c: i64, precision: usize) -> Result<TruncatedSeries> {
    let a = alternating_theta(|n| c * n * n - 1, 1, precision)?;
    let b = alternating_theta(|n| n * n - 1, 1, precision)?;
    Ok(&a - &b)
}

struct Shifted {
    id: &'static str,
    step: u64,
    base: u64,
    shift: i64,
    description: &'static str,
}

const SHIFTED: [Shifted; 3] = [
    Shifted {
        id: "thm-3.11",
        step: 4,
        base: 6,
        shift: 1,
        description: "p_{2,3}(n) - p_{4,6}(n-1) counts partitions of n into parts ≡ ±2, ±8, ±12, ±14 (mod 32)",
    },
    Shifted {
        id: "thm-3.12",
        step: 6,
        base: 9,
        shift: 2,
        description: "p_{2,3}(n) - p_{6,9}(n-2) counts partitions of n into parts ≡ ±1, ±4, ±6, ±8, ±10, ±11 (mod 24)",
    },
    Shifted {
        id: "thm-3.13",
        step: 10,
        base: 15,
        shift: 4,
        description: "p_{2,3}(n) - p_{10,15}(n-4) counts pairs of a partition into distinct parts ≡ ±8, ±12 (mod 40) and a partition into parts ≢ 0, ±3, ±4, ±7, ±10, ±13, ±17, 20 (mod 40)",
    },
];

/// `(allowed, distinct)` for the count side of a shifted identity.
fn shifted_sets(id: &str) -> (ResidueCondition, Option<ResidueCondition>) {
    use FactorSign::{Minus, Plus};
    use ResidueMode::{Exclude, Include};
    match id {
        "thm-3.11" => (sym(32, &[2, 8, 12, 14], Minus, Include), None),
        "thm-3.12" => (sym(24, &[1, 4, 6, 8, 10, 11], Minus, Include), None),
        _ => (
            sym(40, &[0, 3, 4, 7, 10, 13, 17, 20], Minus, Exclude),
            Some(sym(40, &[8, 12], Plus, Include)),
        ),
    }
}

fn shifted_quotient(id: &str, precision: usize) -> TruncatedSeries {
    let (allowed, distinct) = shifted_sets(id);
    let inv = residue_product_inverse(&allowed, precision);
    match distinct {
        Some(d) => &residue_product(&d, precision) * &inv,
        None => inv,
    }
}

fn shifted_checks() -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for s in SHIFTED {
        let (step, base, shift, id) = (s.step, s.base, s.shift, s.id);
        out.push(
            IdentityCheck::new(
                id,
                s.description,
                1,
                Backing::Enumeration,
                "enumerated mex counts vs restricted-partition DP and series quotient",
                move |n_max| {
                    let lhs = move |n: i64| {
                        Ok(p_mex_enum(mp(2, 3), n)? - p_mex_enum(mp(step, base), n - shift)?)
                    };
                    let (allowed, distinct) = shifted_sets(id);
                    let mut cases = vec![Case::new("count", lhs, move |n| {
                        Ok(count_parts_restricted(nu(n), &allowed, distinct.as_ref()))
                    })];
                    if distinct_is_mixed(id) {
                        cases.push(Case::new(
                            "quotient",
                            lhs,
                            coeffs(shifted_quotient(id, n_max)),
                        ));
                    }
                    Ok(cases)
                },
            )
            .with_zero(),
        );
        out.push(IdentityCheck::new(
            format!("{id}-series"),
            s.description,
            0,
            Backing::Series,
            "F_{2,3} - q^s F_{A,a} vs product quotient",
            move |n_max| {
                let f = mex_generating_function(mp(2, 3), n_max);
                let g = mex_generating_function(mp(step, base), n_max).shifted(shift as usize);
                Ok(vec![Case::new(
                    "series",
                    coeffs(&f - &g),
                    coeffs(shifted_quotient(id, n_max)),
                )])
            },
        ));
    }
    out
}

fn distinct_is_mixed(id: &str) -> bool {
    shifted_sets(id).1.is_some()
}

/// Count side of the congruence families: partitions into parts
/// `≢ 0, ±i (mod M)`. For `M = 2i` the residue `i` appears twice in the
/// product `(q^i; q^M)_∞ (q^{M-i}; q^M)_∞`, leaving one factor `(1 - q^n)`
/// per `n ≡ i` in the numerator, which is a signed distinct-part count.
fn congruence_family_count(modulus: u64, i: u64, n: usize) -> BigInt {
    let allowed = residues(
        modulus,
        &[0, i, modulus - i],
        FactorSign::Minus,
        ResidueMode::Exclude,
    );
    if 2 * i == modulus {
        let doubled = residues(modulus, &[i], FactorSign::Minus, ResidueMode::Include);
        count_parts_restricted(n, &allowed, Some(&doubled))
    } else {
        count_parts_restricted(n, &allowed, None)
    }
}

fn congruence_family(parity: Parity) -> IdentityCheck {
    let (id, description) = match parity {
        Parity::Even => (
            "thm-3.10-even",
            "p_{2k,2k-i}(n) - p̄_{2k,i}(n) counts partitions of n into parts ≢ 0, ±i (mod 2k); for i = k the residue k carries a signed distinct factor",
        ),
        Parity::Odd => (
            "thm-3.10-odd",
            "p_{2k+1,2k+1-i}(n) - p̄_{2k+1,i}(n) counts partitions of n into parts ≢ 0, ±i (mod 2k+1)",
        ),
    };
    IdentityCheck::new(
        id,
        description,
        1,
        Backing::Enumeration,
        "enumerated mex counts vs restricted-partition DP",
        move |_| {
            let mut cases = Vec::new();
            for k in 1..=K_MAX {
                let m = parity.modulus(k);
                for i in 1..m {
                    cases.push(Case::new(
                        format!("k={k},i={i}"),
                        move |n| Ok(p_mex_enum(mp(m, m - i), n)? - pbar_mex_enum(mp(m, i), n)?),
                        move |n| Ok(congruence_family_count(m, i, nu(n))),
                    ));
                }
            }
            Ok(cases)
        },
    )
    .with_zero()
}

fn jtp_check(parity: Parity) -> IdentityCheck {
    let (id, description) = match parity {
        Parity::Even => (
            "lemma-jtp-even",
            "Σ_{n∈ℤ} (-1)^n q^{kn(n+1) - in} = Π_{n≥0} (1 - q^{2k(n+1)})(1 - q^{2kn+i})(1 - q^{2k(n+1)-i})",
        ),
        Parity::Odd => (
            "thm-2.8",
            "Σ_{n∈ℤ} (-1)^n q^{(2k+1)n(n+1)/2 - in} = Π_{n≥0} (1 - q^{(2k+1)(n+1)})(1 - q^{(2k+1)n+i})(1 - q^{(2k+1)(n+1)-i})",
        ),
    };
    IdentityCheck::new(
        id,
        description,
        0,
        Backing::Series,
        "bilateral theta sum vs truncated product",
        move |n_max| {
            let mut cases = Vec::new();
            for k in 1..=JTP_K_MAX {
                for i in 1..parity.modulus(k) {
                    cases.push(Case::new(
                        format!("k={k},i={i}"),
                        coeffs(jtp_specialized(k, i, parity, Side::Sum, n_max)?),
                        coeffs(jtp_specialized(k, i, parity, Side::Product, n_max)?),
                    ));
                }
            }
            Ok(cases)
        },
    )
}

fn rank_crank_checks() -> Vec<IdentityCheck> {
    let mut out = Vec::new();

    out.push(
        IdentityCheck::new(
            "thm-1.1",
            "p_{1,1}(n) equals the number of partitions of n with crank ≥ 0",
            1,
            Backing::Enumeration,
            "enumerated mex vs crank generating function",
            |n_max| {
                let t = crank_table(n_max);
                Ok(vec![Case::new(
                    "crank>=0",
                    |n| p_mex_enum(mp(1, 1), n),
                    move |n| Ok(crank_sum(&t, 0, n + 1, n)),
                )])
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-1.2",
            "p_{3,3}(n) equals the number of partitions of n with rank ≥ -1",
            1,
            Backing::Enumeration,
            "enumerated mex vs enumerated rank",
            |_| {
                Ok(vec![Case::new(
                    "rank>=-1",
                    |n| p_mex_enum(mp(3, 3), n),
                    |n| rank_at_least(-1, n),
                )])
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-1.3",
            "p_{2,1}(n) = p_e(n) and p̄_{2,1}(n) = p_o(n), where p_e / p_o count partitions with an even / odd number of parts",
            1,
            Backing::Enumeration,
            "enumerated mex vs parts-parity DP",
            |n_max| {
                let (even, odd) = parity_table(n_max);
                Ok(vec![
                    Case::new("p_e", |n| p_mex_enum(mp(2, 1), n), table(even)),
                    Case::new("p_o", |n| pbar_mex_enum(mp(2, 1), n), table(odd)),
                ])
            },
        )
        .with_zero(),
    );

    out.push(IdentityCheck::new(
        "thm-3.3",
        "p̄_{3,j+1}(n) equals the number of partitions of n with rank ≥ j",
        1,
        Backing::Enumeration,
        "enumerated mex vs enumerated rank",
        |_| {
            Ok((0..=J_MAX)
                .map(|j| {
                    Case::new(
                        format!("j={j}"),
                        move |n| pbar_mex_enum(mp(3, j as u64 + 1), n),
                        move |n| rank_at_least(j, n),
                    )
                })
                .collect())
        },
    ));

    out.push(
        IdentityCheck::new(
            "cor-3.4",
            "p̄_{3,3}(n) equals the number of partitions of n with rank ≤ -2 (Garden of Eden partitions)",
            1,
            Backing::Enumeration,
            "enumerated mex vs enumerated rank",
            |_| {
                Ok(vec![Case::new(
                    "goe",
                    |n| pbar_mex_enum(mp(3, 3), n),
                    |n| goe_count(nu(n)),
                )])
            },
        )
        .with_zero(),
    );

    out.push(IdentityCheck::new(
        "cor-3.5",
        "p_{3,j+1}(n) equals the number of partitions of n with rank < j",
        1,
        Backing::Enumeration,
        "enumerated mex vs enumerated rank",
        |_| {
            Ok((0..=J_MAX)
                .map(|j| {
                    Case::new(
                        format!("j={j}"),
                        move |n| p_mex_enum(mp(3, j as u64 + 1), n),
                        move |n| rank_below(j, n),
                    )
                })
                .collect())
        },
    ));

    out.push(
        IdentityCheck::new(
            "thm-3.6",
            "p̄_{1,j}(n) equals the number of partitions of n with crank ≥ j (j ≥ 1)",
            1,
            Backing::Enumeration,
            "enumerated mex vs crank generating function",
            |n_max| {
                let t = crank_table(n_max);
                Ok((1..=J_MAX)
                    .map(|j| {
                        let t = Arc::clone(&t);
                        Case::new(
                            format!("j={j}"),
                            move |n| pbar_mex_enum(mp(1, j as u64), n),
                            move |n| Ok(crank_sum(&t, j, n + 1, n)),
                        )
                    })
                    .collect())
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "cor-3.7",
            "p_{1,j}(n) equals the number of partitions of n with crank < j (j ≥ 1)",
            1,
            Backing::Enumeration,
            "enumerated mex vs crank generating function",
            |n_max| {
                let t = crank_table(n_max);
                Ok((1..=J_MAX)
                    .map(|j| {
                        let t = Arc::clone(&t);
                        Case::new(
                            format!("j={j}"),
                            move |n| p_mex_enum(mp(1, j as u64), n),
                            move |n| Ok(crank_sum(&t, -(n + 1), j - 1, n)),
                        )
                    })
                    .collect())
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-3.8-rank",
            "N_2(n) = 2 Σ_{r=0}^{n-2} (2r+1) p̄_{3,r+2}(n)",
            1,
            Backing::Enumeration,
            "enumerated rank moment vs weighted enumerated mex counts",
            |_| {
                Ok(vec![Case::new(
                    "N_2",
                    |n| rank_moment(2, nu(n)),
                    |n| weighted_pbar(3, 2, n - 2, n).map(|s| 2 * s),
                )])
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-3.8-crank",
            "M_2(n) = 2 Σ_{r=0}^{n-1} (2r+1) p̄_{1,r+1}(n)",
            1,
            Backing::Enumeration,
            "crank moment (generating-function and enumerated) vs weighted enumerated mex counts",
            |_| {
                let rhs = |n: i64| weighted_pbar(1, 1, n - 1, n).map(|s| 2 * s);
                Ok(vec![
                    Case::new(
                        "series-crank",
                        |n| crank_moment(2, nu(n), CountMethod::Series),
                        rhs,
                    ),
                    Case::new(
                        "enumerated-crank",
                        |n| crank_moment(2, nu(n), CountMethod::Combinatorial),
                        rhs,
                    )
                    .starting_at(2),
                ])
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "cor-3.9",
            "spt(n) = Σ_{r=0}^{n-1} (2r+1)[p̄_{1,r+1}(n) - p̄_{3,r+2}(n)] = Σ_{r=0}^{n-1} (2r+1)[p_{3,r+2}(n) - p_{1,r+1}(n)]",
            1,
            Backing::Enumeration,
            "enumerated spt vs weighted enumerated mex counts",
            |_| {
                Ok(vec![
                    Case::new(
                        "barred",
                        |n| spt_direct(nu(n)),
                        |n| Ok(weighted_pbar(1, 1, n - 1, n)? - weighted_pbar(3, 2, n - 1, n)?),
                    ),
                    Case::new(
                        "unbarred",
                        |n| spt_direct(nu(n)),
                        |n| Ok(weighted_p(3, 2, n - 1, n)? - weighted_p(1, 1, n - 1, n)?),
                    ),
                ])
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-2.6",
            "spt(n) = n p(n) - N_2(n)/2",
            1,
            Backing::Enumeration,
            "enumerated spt vs p(n) recurrence and enumerated rank moment",
            |_| {
                Ok(vec![Case::new(
                    "spt",
                    |n| spt_direct(nu(n)),
                    |n| Ok(BigInt::from(n) * p_count(n) - rank_moment(2, nu(n))? / 2),
                )])
            },
        )
        .with_zero(),
    );

    out.push(IdentityCheck::new(
        "thm-2.2",
        "Σ_n N(m,n) q^n = (1/(q)_∞) Σ_{j≥1} (-1)^{j-1} q^{j(3j-1)/2 + j|m|}(1 - q^j)",
        1,
        Backing::Enumeration,
        "rank generating function vs enumerated rank",
        |n_max| {
            let bound = n_max as i64;
            Ok((-bound..=bound)
                .map(|m| {
                    Case::new(format!("m={m}"), coeffs(rank_series(m, n_max)), move |n| {
                        Ok(census(nu(n))?.rank_count(m).into())
                    })
                })
                .collect())
        },
    ));

    out.push(IdentityCheck::new(
        "thm-2.3",
        "Σ_n M(m,n) q^n = (1/(q)_∞) Σ_{j≥1} (-1)^{j-1} q^{j(j-1)/2 + j|m|}(1 - q^j), for n ≥ 2",
        2,
        Backing::Enumeration,
        "crank generating function vs enumerated crank",
        |n_max| {
            let bound = n_max as i64;
            Ok((-bound..=bound)
                .map(|m| {
                    Case::new(format!("m={m}"), coeffs(crank_series(m, n_max)), move |n| {
                        Ok(census(nu(n))?.crank_count(m).into())
                    })
                })
                .collect())
        },
    ));

    out.push(
        IdentityCheck::new(
            "thm-2.4",
            "Σ N_2(n) q^n = (-2/(q)_∞) Σ_{j≥1} (-1)^j q^{j(3j+1)/2}(1 + q^j)/(1 - q^j)^2",
            1,
            Backing::Enumeration,
            "moment generating function vs enumerated rank moment",
            |n_max| {
                Ok(vec![Case::new(
                    "N_2",
                    coeffs(rank_moment2_series(n_max)),
                    |n| rank_moment(2, nu(n)),
                )])
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-2.5",
            "Σ M_2(n) q^n = (-2/(q)_∞) Σ_{j≥1} (-1)^j q^{j(j+1)/2}(1 + q^j)/(1 - q^j)^2, which also equals Σ 2n p(n) q^n",
            1,
            Backing::Enumeration,
            "moment generating function vs enumerated crank moment (n ≥ 2) and 2n p(n)",
            |n_max| {
                let m2 = crank_moment2_series(n_max).into_coeffs();
                Ok(vec![
                    Case::new(
                        "enumerated",
                        table(m2.clone()),
                        |n| crank_moment(2, nu(n), CountMethod::Combinatorial),
                    )
                    .starting_at(2),
                    Case::new("2np(n)", table(m2), |n| Ok(2 * BigInt::from(n) * p_count(n))),
                ])
            },
        )
        .with_zero(),
    );

    out
}

/// `Σ_{r=0}^{r_max} (2r+1) p̄_{A,r+offset}(n)`.
fn weighted_pbar(step: u64, offset: u64, r_max: i64, n: i64) -> Result<BigInt> {
    weighted(r_max, |r| pbar_mex_enum(mp(step, r + offset), n))
}

/// `Σ_{r=0}^{r_max} (2r+1) p_{A,r+offset}(n)`.
fn weighted_p(step: u64, offset: u64, r_max: i64, n: i64) -> Result<BigInt> {
    weighted(r_max, |r| p_mex_enum(mp(step, r + offset), n))
}

fn weighted(r_max: i64, f: impl Fn(u64) -> Result<BigInt>) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for r in 0..=r_max.max(-1) {
        total += (2 * r + 1) * f(r as u64)?;
    }
    Ok(total)
}

fn mex_core_checks() -> Vec<IdentityCheck> {
    let mut out = Vec::new();

    out.push(IdentityCheck::new(
        "thm-3.1",
        "p_{3,1}(n) + p_{3,2}(n) = p(n) for n ≥ 1",
        1,
        Backing::Enumeration,
        "enumerated mex vs p(n) recurrence",
        |_| {
            Ok(vec![Case::new(
                "sum",
                |n| Ok(p_mex_enum(mp(3, 1), n)? + p_mex_enum(mp(3, 2), n)?),
                |n| Ok(p_count(n)),
            )])
        },
    ));

    out.push(
        IdentityCheck::new(
            "thm-3.2",
            "p_{A,a}(n) = p(n) + Σ_{m≥1} [p(n - (A·C(2m,2) + 2ma)) - p(n - (A·C(2m-1,2) + (2m-1)a))]",
            1,
            Backing::Enumeration,
            "pentagonal-style recurrence vs enumerated mex",
            |_| {
                let mut cases = Vec::new();
                for step in 1..=STEP_MAX {
                    for base in 1..=BASE_MAX {
                        let params = mp(step, base);
                        cases.push(Case::new(
                            format!("A={step},a={base}"),
                            move |n| Ok(p_mex_recurrence(params, n)),
                            move |n| p_mex_enum(params, n),
                        ));
                    }
                }
                Ok(cases)
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "lemma-a-gt-n",
            "p_{A,a}(n) = p(n) and p̄_{A,a}(n) = 0 whenever a > n",
            1,
            Backing::Enumeration,
            "enumerated mex vs p(n) recurrence",
            |_| {
                let mut cases = Vec::new();
                for step in 1..=STEP_MAX {
                    for base in 1..=BASE_MAX {
                        let params = mp(step, base);
                        let last = base as i64 - 1;
                        cases.push(
                            Case::new(
                                format!("p,A={step},a={base}"),
                                move |n| p_mex_enum(params, n),
                                |n| Ok(p_count(n)),
                            )
                            .ending_at(last),
                        );
                        cases.push(
                            Case::new(
                                format!("pbar,A={step},a={base}"),
                                move |n| pbar_mex_enum(params, n),
                                |_| Ok(BigInt::zero()),
                            )
                            .ending_at(last),
                        );
                    }
                }
                Ok(cases)
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "thm-5.1",
            "p_{A,a}(n - (a - A)) = p̄_{A,a-A}(n) for a > A",
            1,
            Backing::Enumeration,
            "enumerated mex vs barred generating function",
            |n_max| {
                let mut cases = Vec::new();
                for step in 1..=SHIFT_STEP_MAX {
                    for base in step + 1..=BASE_MAX {
                        let shift = (base - step) as i64;
                        cases.push(Case::new(
                            format!("A={step},a={base}"),
                            move |n| p_mex_enum(mp(step, base), n - shift),
                            table(pbar_mex_series(mp(step, base - step), n_max)),
                        ));
                    }
                }
                Ok(cases)
            },
        )
        .with_zero(),
    );

    out.push(
        IdentityCheck::new(
            "cor-5.2",
            "p_{3,6}(n - 3) equals the number of Garden of Eden partitions of n",
            1,
            Backing::Enumeration,
            "enumerated mex vs enumerated rank",
            |_| {
                Ok(vec![Case::new(
                    "goe",
                    |n| p_mex_enum(mp(3, 6), n - 3),
                    |n| goe_count(nu(n)),
                )])
            },
        )
        .with_zero(),
    );

    out.push(IdentityCheck::new(
        "thm-5.3",
        "p_{k,k}(k) = p_{k,k-1}(k) = p(k) - 1 for k ≥ 2",
        2,
        Backing::Series,
        "generating-function coefficient vs p(n) recurrence",
        |_| {
            let series_at = |step: i64, base: i64, n: i64| {
                Ok(p_mex_series(mp(step as u64, base as u64), nu(n)).swap_remove(nu(n)))
            };
            Ok(vec![
                Case::new(
                    "p_{k,k}(k)",
                    move |k| series_at(k, k, k),
                    |k| Ok(p_count(k) - 1),
                )
                .ending_at(SMALL_N_MAX),
                Case::new(
                    "p_{k,k-1}(k)",
                    move |k| series_at(k, k - 1, k),
                    |k| Ok(p_count(k) - 1),
                )
                .ending_at(SMALL_N_MAX),
            ])
        },
    ));

    out.push(IdentityCheck::new(
        "thm-5.4",
        "p_{3,n}(n) - p_{1,n-1}(n) = 0 for n ≥ 2 and p_{3,n+1}(n) - p_{1,n}(n) = 1 for n ≥ 1",
        1,
        Backing::Series,
        "generating-function coefficients vs constants",
        |_| {
            let series_at = |step: u64, base: i64, n: i64| {
                Ok(p_mex_series(mp(step, base as u64), nu(n)).swap_remove(nu(n)))
            };
            Ok(vec![
                Case::new(
                    "p_{3,n}(n)-p_{1,n-1}(n)",
                    move |n| Ok(series_at(3, n, n)? - series_at(1, n - 1, n)?),
                    |_| Ok(BigInt::zero()),
                )
                .starting_at(2)
                .ending_at(SMALL_N_MAX),
                Case::new(
                    "p_{3,n+1}(n)-p_{1,n}(n)",
                    move |n| Ok(series_at(3, n + 1, n)? - series_at(1, n, n)?),
                    |_| Ok(BigInt::from(1)),
                )
                .ending_at(SMALL_N_MAX),
            ])
        },
    ));

    out
}

fn congruence_checks() -> Vec<IdentityCheck> {
    let mut out = vec![
        congruence_family(Parity::Even),
        congruence_family(Parity::Odd),
    ];

    out.push(
        IdentityCheck::new(
            "psi-minus-q",
            "p_{4,1}(n) - p̄_{4,3}(n) counts partitions of n into parts ≡ 2 (mod 4)",
            1,
            Backing::Enumeration,
            "enumerated mex vs restricted-partition DP",
            |_| {
                let twos = residues(4, &[2], FactorSign::Minus, ResidueMode::Include);
                Ok(vec![Case::new(
                    "count",
                    |n| Ok(p_mex_enum(mp(4, 1), n)? - pbar_mex_enum(mp(4, 3), n)?),
                    move |n| Ok(count_parts_restricted(nu(n), &twos, None)),
                )])
            },
        )
        .with_zero(),
    );

    out.extend(shifted_checks());
    out
}

fn series_checks() -> Vec<IdentityCheck> {
    use FactorSign::{Minus, Plus};
    use ResidueMode::{Exclude, Include};
    let mut out = Vec::new();

    out.push(IdentityCheck::new(
        "thm-2.1",
        "Π_{n≥1}(1 - q^n) = 1 + Σ_{m≥1} (-1)^m q^{m(3m-1)/2}(1 + q^m)",
        0,
        Backing::Series,
        "pentagonal expansion vs literal product",
        |n_max| {
            Ok(vec![Case::new(
                "euler",
                coeffs(euler_product(n_max)),
                coeffs(residue_product(&every_part(), n_max)),
            )])
        },
    ));

    out.push(jtp_check(Parity::Odd));
    out.push(jtp_check(Parity::Even));

    out.push(IdentityCheck::new(
        "thm-2.9",
        "Σ_{n≥0} t^n/(q)_n = 1/(t;q)_∞, specialised at t = q^j (j = 1..5) and t = -q",
        0,
        Backing::Series,
        "term-by-term sum vs inverted product",
        |n_max| {
            let mut cases = Vec::new();
            for j in 1..=5usize {
                let mut rhs = TruncatedSeries::one(n_max);
                for m in j..=n_max {
                    rhs.div_one_minus_in_place(m);
                }
                cases.push(Case::new(
                    format!("t=q^{j}"),
                    coeffs(cauchy_sum(j, false, n_max)),
                    coeffs(rhs),
                ));
            }
            let lhs = cauchy_sum(1, true, n_max).into_coeffs();
            let plus = residue_product(&every_part().with_sign(Plus), n_max).invert()?;
            let odd = residue_product(&residues(2, &[1], Minus, Include), n_max);
            cases.push(Case::new("t=-q", table(lhs.clone()), coeffs(plus)));
            cases.push(Case::new("t=-q,(q;q^2)", table(lhs), coeffs(odd)));
            Ok(cases)
        },
    ));

    out.push(IdentityCheck::new(
        "thm-2.10a",
        "Π_{n≢±2,±8,±12,±14 (mod 32)} (1 - q^n) = Σ_{n≥1} (-1)^n (q^{2n²-1} - q^{n²-1})",
        0,
        Backing::Series,
        "truncated product vs theta difference",
        |n_max| {
            Ok(vec![Case::new(
                "mod 32",
                coeffs(residue_product(
                    &sym(32, &[2, 8, 12, 14], Minus, Exclude),
                    n_max,
                )),
                coeffs(quadratic_theta_difference(2, n_max)?),
            )])
        },
    ));

    out.push(IdentityCheck::new(
        "thm-2.10b",
        "Π_{n≢±1,±4,±6,±8,±10,±11 (mod 24)} (1 - q^n) = Σ_{n≥1} (-1)^n (q^{3n²-1} - q^{n²-1})",
        0,
        Backing::Series,
        "truncated product vs theta difference",
        |n_max| {
            Ok(vec![Case::new(
                "mod 24",
                coeffs(residue_product(
                    &sym(24, &[1, 4, 6, 8, 10, 11], Minus, Exclude),
                    n_max,
                )),
                coeffs(quadratic_theta_difference(3, n_max)?),
            )])
        },
    ));

    out.push(IdentityCheck::new(
        "thm-2.11",
        "Π_{n≡0,±3 (mod 10)} (1 - q^n) Π_{n≡±4 (mod 40)} (1 - q^n) Π_{n≡±8 (mod 20)} (1 + q^n) = Σ_{n≥1} (-1)^n (q^{5n²-1} - q^{n²-1})",
        0,
        Backing::Series,
        "truncated three-fold product vs theta difference",
        |n_max| {
            let a = residue_product(&sym(10, &[0, 3], Minus, Include), n_max);
            let b = residue_product(&sym(40, &[4], Minus, Include), n_max);
            let c = residue_product(&sym(20, &[8], Plus, Include), n_max);
            Ok(vec![Case::new(
                "products",
                coeffs(&(&a * &b) * &c),
                coeffs(quadratic_theta_difference(5, n_max)?),
            )])
        },
    ));

    out.push(IdentityCheck::new(
        "gf-parity",
        "Σ_m q^{2m}/(q)_{2m} = Σ p_e(n) q^n and Σ_m q^{2m+1}/(q)_{2m+1} = Σ p_o(n) q^n",
        0,
        Backing::Series,
        "term-by-term sums vs parts-parity DP",
        |n_max| {
            let mut even = TruncatedSeries::one(n_max);
            let mut odd = TruncatedSeries::zero(n_max);
            let mut term = TruncatedSeries::one(n_max);
            for m in 1..=n_max {
                term = term.shifted(1);
                term.div_one_minus_in_place(m);
                if m % 2 == 0 {
                    even = &even + &term;
                } else {
                    odd = &odd + &term;
                }
            }
            let (pe, po) = parity_table(n_max);
            Ok(vec![
                Case::new("even", coeffs(even), table(pe)),
                Case::new("odd", coeffs(odd), table(po)),
            ])
        },
    ));

    out.push(IdentityCheck::new(
        "gf-inverse-euler",
        "1/(q)_∞ = Σ p(n) q^n",
        0,
        Backing::Series,
        "series inversion vs p(n) recurrence",
        |n_max| {
            Ok(vec![Case::new(
                "p(n)",
                coeffs(inverse_euler(n_max).truncated(n_max)),
                |n| Ok(p_count(n)),
            )])
        },
    ));

    out
}

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentityCheck> {
    let mut all = mex_core_checks();
    all.extend(rank_crank_checks());
    all.extend(congruence_checks());
    all.extend(series_checks());
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_reading_at_i_equals_k_fails() {
        // Unsigned count of parts ≢ 0, 1 (mod 2) at n = 1 is 0, but the mex
        // difference is -1: the doubled residue needs the signed factor.
        let lhs = p_mex_enum(mp(2, 1), 1).unwrap() - pbar_mex_enum(mp(2, 1), 1).unwrap();
        let allowed = residues(2, &[0, 1], FactorSign::Minus, ResidueMode::Exclude);
        assert_eq!(lhs, BigInt::from(-1));
        assert_eq!(count_parts_restricted(1, &allowed, None), BigInt::zero());
        assert_eq!(congruence_family_count(2, 1, 1), BigInt::from(-1));
    }

    #[test]
    fn cauchy_sum_matches_partitions_for_t_equal_q() {
        let s = cauchy_sum(1, false, 20);
        for n in 0..=20 {
            assert_eq!(s.coeffs()[n], p_count(n as i64));
        }
    }

    #[test]
    fn mixed_count_uses_two_colours() {
        // 8 is both an allowed part and a distinct part, so n = 8 has
        // p-restricted(8) + 1 representations.
        let (allowed, distinct) = shifted_sets("thm-3.13");
        let without = count_parts_restricted(8, &allowed, None);
        let with = count_parts_restricted(8, &allowed, distinct.as_ref());
        assert_eq!(with, without + 1);
    }
}
