//! The classical identity pbar_{m,k}(D_1(A), ..., D_{n-1}(A)) = D_k(A^m) on
//! random exact matrices in SL_n(Q).

use qfrob::matcheck::{principal_minor_sum, random_sln, verify_pbar_identity};
use qfrob::matcheck::{mat_pow, Rationals};
use qfrob::symfun::pbar;

fn main() -> qfrob::Result<()> {
    let a = random_sln(3, 42, 18);
    let ds: Vec<_> = (1..3).map(|k| principal_minor_sum(&a, k)).collect::<qfrob::Result<_>>()?;
    let p = pbar(3, 4, 2)?;
    println!("D_1(A) = {}, D_2(A) = {}", ds[0], ds[1]);
    println!("pbar_4,2(D_1, D_2) = {}", p.evaluate(&Rationals, &ds));
    println!("D_2(A^4)           = {}", principal_minor_sum(&mat_pow(&a, 4), 2)?);

    for (n, m, k) in [(2, 6, 1), (3, 5, 1), (4, 5, 2)] {
        println!("{}", verify_pbar_identity(n, m, k, 20, 7)?);
    }
    Ok(())
}
