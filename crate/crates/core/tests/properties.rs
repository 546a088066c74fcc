use num_bigint::BigInt;
use proptest::prelude::*;

use mexstat::mexfun::{p_mex_enum, p_mex_recurrence, pbar_mex_enum};
use mexstat::partitions::{enumerate_partitions, p_count, parity_table, Partition};
use mexstat::series::{
    euler_product, jtp_specialized, pochhammer_finite, residue_product, FactorSign, Parity,
    ResidueCondition, ResidueMode, Side, TruncatedSeries,
};
use mexstat::statistics::MexParams;

fn series(max_len: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, 1..max_len)
        .prop_map(|c| TruncatedSeries::from_i64s(&c).unwrap())
}

fn unit_series(max_len: usize) -> impl Strategy<Value = TruncatedSeries> {
    (
        prop::bool::ANY,
        prop::collection::vec(-20i64..20, 0..max_len),
    )
        .prop_map(|(neg, rest)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(rest);
            TruncatedSeries::from_i64s(&c).unwrap()
        })
}

proptest! {
    #[test]
    fn multiplication_commutes(a in series(20), b in series(20)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_precision_is_the_minimum(a in series(20), b in series(20)) {
        prop_assert_eq!((&a * &b).precision(), a.precision().min(b.precision()));
        prop_assert_eq!((&a + &b).precision(), a.precision().min(b.precision()));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series(25)) {
        let inv = a.invert().unwrap();
        let one = TruncatedSeries::one(a.precision());
        prop_assert_eq!(&a * &inv, one.clone());
        prop_assert_eq!(&inv * &a, one);
    }

    #[test]
    fn partitions_are_canonical(parts in prop::collection::vec(1u32..30, 0..12)) {
        let p = Partition::new(parts.clone()).unwrap();
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.total(), parts.iter().map(|&x| x as u64).sum::<u64>());
        let reparsed: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn mex_counts_are_complementary(step in 1u64..12, base in 1u64..20, n in 0i64..30) {
        let pm = MexParams::new(step, base).unwrap();
        let p = p_mex_enum(pm, n).unwrap();
        let pbar = pbar_mex_enum(pm, n).unwrap();
        prop_assert!(p >= BigInt::from(0) && p <= p_count(n));
        prop_assert_eq!(&p + pbar, p_count(n));
        prop_assert_eq!(p, p_mex_recurrence(pm, n));
    }
}

#[test]
fn enumeration_counts_match_recurrence() {
    for n in 0..=30u32 {
        assert_eq!(
            BigInt::from(enumerate_partitions(n).len()),
            p_count(n as i64)
        );
    }
}

#[test]
fn pentagonal_expansion_equals_literal_product() {
    let all = ResidueCondition::new(1, [], FactorSign::Minus, ResidueMode::Exclude).unwrap();
    for p in [0, 1, 7, 50, 200] {
        assert_eq!(euler_product(p), residue_product(&all, p));
    }
}

#[test]
fn even_part_count_from_finite_pochhammer() {
    // Σ_m q^{2m}/(q)_{2m}, with each (q)_{2m} inverted separately.
    const N: usize = 60;
    let mut total = TruncatedSeries::zero(N);
    for m in (0..=N).step_by(2) {
        let term = pochhammer_finite(m, N).invert().unwrap().shifted(m);
        total = &total + &term;
    }
    let (even, _) = parity_table(N);
    assert_eq!(total.coeffs(), &even[..]);
}

#[test]
fn jtp_sides_agree() {
    for parity in [Parity::Even, Parity::Odd] {
        for k in 1..=6 {
            for i in 1..parity.modulus(k) {
                let sum = jtp_specialized(k, i, parity, Side::Sum, 200).unwrap();
                let prod = jtp_specialized(k, i, parity, Side::Product, 200).unwrap();
                assert_eq!(sum, prod, "{parity:?} k={k} i={i}");
            }
        }
    }
}
