//! Second rank and crank moments, spt(n), and their weighted mex sums.

use num_bigint::BigInt;

use mexstat::mexfun::pbar_mex_enum;
use mexstat::partitions::p_count;
use mexstat::statistics::{crank_moment, rank_moment, spt_direct, CountMethod, MexParams};

fn weighted(step: u64, offset: u64, n: i64) -> mexstat::Result<BigInt> {
    let mut s = BigInt::from(0);
    for r in 0..n.max(0) as u64 {
        s += (2 * r + 1) * pbar_mex_enum(MexParams::new(step, r + offset)?, n)?;
    }
    Ok(s)
}

fn main() -> mexstat::Result<()> {
    println!(" n   N_2   M_2  2np(n)  spt  mex-sum");
    for n in 1..=15usize {
        let ni = n as i64;
        println!(
            "{n:>2}  {:>4}  {:>4}  {:>6}  {:>3}  {:>7}",
            rank_moment(2, n)?,
            crank_moment(2, n, CountMethod::Series)?,
            2 * BigInt::from(n) * p_count(ni),
            spt_direct(n)?,
            weighted(1, 1, ni)? - weighted(3, 2, ni)?,
        );
    }
    Ok(())
}
