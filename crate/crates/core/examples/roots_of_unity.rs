//! Root-of-unity data and exact cyclotomic arithmetic.

use qfrob::scalar::{cyclotomic_embed, gauss_binomial, quantum_integer, RootParams};

fn main() {
    println!("{:>4} {:>2} {:>3} {:>8} {:>4} {}", "d", "n", "N", "eta_hat", "eta", "[n]! != 0");
    for (d, n) in [(48, 2), (80, 2), (32, 2), (16, 3), (27, 3), (144, 3), (5, 4)] {
        let p = RootParams::new(d, n);
        println!(
            "{:>4} {:>2} {:>3} {:>8} {:>4} {}",
            d, n, p.big_n, format!("w^{}", p.eta_hat_exp), p.eta_sign, p.factorial_nonzero
        );
    }

    // q-binomials [5 k] vanish when q^2 is a primitive 5th root of unity
    for k in 0..=5 {
        let b = gauss_binomial(5, k).unwrap();
        println!("[5 {k}]_q = {b}  ->  {}", cyclotomic_embed(&b, 10, 1));
    }
    println!("[3]_q = {}", quantum_integer(3));
}
