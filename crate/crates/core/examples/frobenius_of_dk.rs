//! Checks that the Frobenius map sends D_k at eta to pbar_{N,k}(D_1, ..., D_{n-1})
//! at omega, modulo det_q = 1.

use qfrob::qmatrix::verify_main_theorem;

fn main() -> qfrob::Result<()> {
    for (n, d, k) in [(2, 48, 1), (2, 80, 1), (3, 16, 1), (3, 16, 2)] {
        let out = verify_main_theorem(n, d, k)?;
        println!(
            "n={n} d={d} N={} k={k}: pbar = {}, lhs {} terms, rhs {} terms, equal before reduction: {}, residual: {}",
            out.params.big_n,
            out.pbar,
            out.lhs_terms,
            out.rhs_terms,
            out.zero_before_reduction,
            out.residual
        );
    }
    match verify_main_theorem(2, 32, 1) {
        Err(e) => println!("d=32: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
