//! The annulus algebra: the cutting map a_k -> D_k, its Frobenius a_k -> pbar_{N,k}(a),
//! and the classical power identity at qhat = 1.

use qfrob::annulus::{annulus_frobenius, check_square, classical_power_check, theta_c, AnnulusElement};
use qfrob::qmatrix::QAlgebra;
use qfrob::scalar::{Ring, RootParams};

fn main() -> qfrob::Result<()> {
    let alg = QAlgebra::new(2, &Ring::Laurent);
    let a1 = AnnulusElement::gen(2, 1, &Ring::Laurent);
    println!("theta(a1^2) = {}", theta_c(&a1.mul(&a1), &alg));

    let params = RootParams::new(48, 2);
    let x = AnnulusElement::gen(2, 1, &params.eta_ring());
    println!("Psi(a1) = {}", annulus_frobenius(&x, &params)?);

    println!("{}", check_square(2, 48, 2)?);
    println!("{}", check_square(3, 16, 1)?);
    for (n, m, k) in [(2, 2, 1), (3, 3, 2), (3, 4, 1)] {
        println!("{}", classical_power_check(n, m, k)?);
    }
    Ok(())
}
