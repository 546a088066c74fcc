//! Runs every registered identity check and prints a one-line summary each.
//!
//! ```text
//! cargo run --release --example verify_registry -- [max_n_enum] [max_n_series]
//! ```

use mexstat::identities::{reports_to_text, verify_all, DEFAULT_MAX_N_ENUM, DEFAULT_MAX_N_SERIES};

fn main() -> mexstat::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let n_enum = args
        .next()
        .transpose()
        .ok()
        .flatten()
        .unwrap_or(DEFAULT_MAX_N_ENUM);
    let n_series = args
        .next()
        .transpose()
        .ok()
        .flatten()
        .unwrap_or(DEFAULT_MAX_N_SERIES);

    let reports = verify_all(n_enum, n_series)?;
    print!("{}", reports_to_text(&reports));
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
    Ok(())
}
