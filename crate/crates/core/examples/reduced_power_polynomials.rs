//! Prints pbar_{m,k}, the polynomial with pbar_{m,k}(e_1, ..., e_{n-1}) = e_k(x^m)
//! when e_n = 1, for small ranks.

use qfrob::symfun::{pbar, pbar_recursive_n3};

fn main() -> qfrob::Result<()> {
    for n in 2..=4 {
        println!("rank {n}");
        for m in 1..=4 {
            for k in 1..n {
                println!("  pbar_{m},{k} = {}", pbar(n, m, k)?);
            }
        }
    }
    // the rank 3 recursion gives the same polynomials
    assert_eq!(pbar_recursive_n3(7, 2)?, pbar(3, 7, 2)?);
    println!("pbar_7,2 at rank 3 = {}", pbar(3, 7, 2)?);
    Ok(())
}
