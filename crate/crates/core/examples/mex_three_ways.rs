//! p_{A,a}(n) by enumeration, by its generating function, and by the
//! recurrence over p(n).

use mexstat::mexfun::{p_mex_enum, p_mex_recurrence, p_mex_series, pbar_mex_enum};
use mexstat::partitions::{enumerate_partitions, p_count};
use mexstat::statistics::{mex, MexParams};

fn main() -> mexstat::Result<()> {
    let params = MexParams::new(2, 3)?;
    for pi in enumerate_partitions(6) {
        let m = mex(&pi, params);
        let side = if params.is_unbarred(m) { "p" } else { "pbar" };
        println!("{pi:<12} mex_2,3 = {m}  -> {side}");
    }
    println!(
        "p_2,3(6) = {}, pbar_2,3(6) = {}\n",
        p_mex_enum(params, 6)?,
        pbar_mex_enum(params, 6)?
    );

    let params = MexParams::new(5, 7)?;
    let series = p_mex_series(params, 40);
    println!(" n  enum  series  recurrence  p(n)");
    for n in (0..=40).step_by(5) {
        println!(
            "{n:>2}  {:>5}  {:>6}  {:>10}  {:>5}",
            p_mex_enum(params, n)?,
            series[n as usize],
            p_mex_recurrence(params, n),
            p_count(n)
        );
    }

    // Far beyond enumeration the series and recurrence still agree.
    let big = 400;
    assert_eq!(
        p_mex_series(params, big)[big],
        p_mex_recurrence(params, big as i64)
    );
    println!("p_5,7({big}) = {}", p_mex_recurrence(params, big as i64));
    Ok(())
}
