//! Prints the three worked tables; pass `csv` or `json` to change format.

use mexstat::tables::table;

fn main() -> mexstat::Result<()> {
    let format = std::env::args().nth(1).unwrap_or_default();
    for id in 1..=3 {
        let t = table(id)?;
        match format.as_str() {
            "csv" => print!("{}", t.to_csv()?),
            "json" => println!("{}", t.to_json()?),
            _ => print!("{}", t.to_text()),
        }
        println!();
    }
    Ok(())
}
