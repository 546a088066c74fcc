//! p_{M,M-i}(n) - p̄_{M,i}(n) against partitions avoiding 0 and ±i mod M.

use mexstat::identities::verify;
use mexstat::mexfun::{p_mex_enum, pbar_mex_enum};
use mexstat::partitions::count_parts_restricted;
use mexstat::series::{FactorSign, ResidueCondition, ResidueMode};
use mexstat::statistics::MexParams;

fn main() -> mexstat::Result<()> {
    let (modulus, i) = (7u64, 2u64);
    let avoid = ResidueCondition::new(
        modulus,
        [0, i, modulus - i],
        FactorSign::Minus,
        ResidueMode::Exclude,
    )?;
    println!("modulus {modulus}, i = {i}");
    for n in 0..=15 {
        let diff = p_mex_enum(MexParams::new(modulus, modulus - i)?, n)?
            - pbar_mex_enum(MexParams::new(modulus, i)?, n)?;
        let count = count_parts_restricted(n as usize, &avoid, None);
        println!("{n:>2}  {diff:>4}  {count:>4}");
    }

    for id in ["thm-3.10-even", "thm-3.10-odd", "psi-minus-q"] {
        let r = verify(id, 30)?;
        println!("{id}: {:?} over {} cases", r.status, r.cases);
    }
    Ok(())
}
