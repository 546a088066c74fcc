//! The mex counts p̄_{3,j+1} and p̄_{1,j} against rank and crank tails.

use mexstat::mexfun::pbar_mex_enum;
use mexstat::statistics::{census, crank_count, goe_count, CountMethod, MexParams};

fn main() -> mexstat::Result<()> {
    let n = 20;
    let c = census(n)?;
    println!(" j  pbar_3,j+1  rank>=j  pbar_1,j  crank>=j");
    for j in 1..=6i64 {
        let crank_tail: num_bigint::BigInt = (j..=n as i64)
            .map(|m| crank_count(m, n, CountMethod::Series))
            .sum::<mexstat::Result<_>>()?;
        println!(
            "{j:>2}  {:>10}  {:>7}  {:>8}  {:>8}",
            pbar_mex_enum(MexParams::new(3, j as u64 + 1)?, n as i64)?,
            c.rank_count_in(j..),
            pbar_mex_enum(MexParams::new(1, j as u64)?, n as i64)?,
            crank_tail,
        );
    }
    println!("Garden of Eden partitions of {n}: {}", goe_count(n)?);

    // At n = 1 the crank generating function disagrees with the definition.
    for m in -1..=1 {
        println!(
            "M({m}, 1): enumerated {}, generating function {}",
            crank_count(m, 1, CountMethod::Combinatorial)?,
            crank_count(m, 1, CountMethod::Series)?
        );
    }
    Ok(())
}
