//! Both sides of the two Jacobi triple product specializations.

use mexstat::series::{jtp_specialized, Parity, Side};

fn main() -> mexstat::Result<()> {
    for (parity, k, i) in [
        (Parity::Even, 2, 1),
        (Parity::Odd, 2, 2),
        (Parity::Even, 3, 3),
    ] {
        let sum = jtp_specialized(k, i, parity, Side::Sum, 30)?;
        let product = jtp_specialized(k, i, parity, Side::Product, 30)?;
        println!("{parity:?} k={k} i={i}");
        println!("  sum     {sum}");
        println!("  product {product}");
        assert_eq!(sum, product);
    }
    Ok(())
}
