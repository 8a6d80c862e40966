//! Quantum minors, D_k, the antipode and exterior traces in O_q(SL_n).

use qfrob::qmatrix::{antipode_axiom_report, antipode_gen, exterior_trace, QAlgebra};
use qfrob::scalar::Ring;

fn main() -> qfrob::Result<()> {
    let alg = QAlgebra::new(2, &Ring::Laurent);
    let (a, b) = (alg.gen(1, 1), alg.gen(1, 2));
    println!("u12 u11 = {}", alg.mul(&b, &a));
    println!("det_q = {}", alg.det());
    println!("S(u12) = {}", antipode_gen(&alg, 1, 2));
    // u11^2 u22 reduces using u11 u22 = 1 + q u12 u21
    let x = alg.product([&a, &a, &alg.gen(2, 2)]);
    println!("u11^2 u22 mod det_q - 1 = {}", alg.reduce(&x));

    let alg = QAlgebra::new(3, &Ring::Laurent);
    println!("D_1 at rank 3 = {}", alg.dk(1)?);
    println!("D_2 has {} terms", alg.dk(2)?.num_terms());
    assert_eq!(exterior_trace(&alg, 2), alg.dk(2)?);
    println!("{}", antipode_axiom_report(&alg));
    Ok(())
}
