//! At rank 3, Psi_N(e_1 e_2) is not a combination of the products
//! Psi_{3N}(e_1^a) Psi_{3N}(e_2^b).

use qfrob::symfun::{adams_on_epoly, span_gap_check, EPoly};

fn main() -> qfrob::Result<()> {
    let y1y2 = EPoly::var(3, 1).mul(&EPoly::var(3, 2));
    println!("Psi_2(y1 y2) = {}", adams_on_epoly(&y1y2, 2)?);
    for bound in [3, 12] {
        let gap = span_gap_check(2, bound)?;
        println!("bound {bound}: {} candidates, verdict {:?}", gap.candidates.len(), gap.verdict);
    }
    Ok(())
}
