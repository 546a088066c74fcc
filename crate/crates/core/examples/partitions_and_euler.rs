//! Partitions of small n, p(n) from the pentagonal recurrence, and the
//! Euler product (q)_∞ with its inverse.

use mexstat::partitions::{enumerate_partitions, p_count};
use mexstat::series::{euler_product, inverse_euler};

fn main() {
    for pi in enumerate_partitions(5) {
        println!("{pi}");
    }
    println!();

    for n in [10, 100, 500] {
        println!("p({n}) = {}", p_count(n));
    }

    // Only pentagonal exponents survive in the product.
    println!("(q)_inf  = {}", euler_product(15));
    println!("1/(q)_inf = {}", inverse_euler(15).truncated(10));
}
