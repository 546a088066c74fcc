//! Differences p_{2,3}(n) - p_{A,a}(n - s) as restricted partition counts,
//! both from enumeration and as series to high precision.

use mexstat::identities::verify;

fn main() -> mexstat::Result<()> {
    for id in ["thm-3.11", "thm-3.12", "thm-3.13"] {
        let small = verify(id, 40)?;
        let series = verify(&format!("{id}-series"), 800)?;
        println!("{id}");
        println!("  {}", small.description);
        println!(
            "  enumeration n <= {}: {:?};  series to q^{}: {:?}",
            small.range.to, small.status, series.range.to, series.status
        );
    }
    Ok(())
}
