//! Quiver matrices Q, H, K = nH^{-1} and P = KQK^T of triangulated surfaces.

use qfrob::quiver::{cutting_hom_x, extend, psi_embedding, Quiver, Triangulation};

fn print_matrix(name: &str, m: &[Vec<i64>]) {
    println!("{name} =");
    for row in m {
        println!("  {row:?}");
    }
}

fn main() -> qfrob::Result<()> {
    let triangle = Quiver::build(&Triangulation::preset("P3", 2)?)?;
    let m = triangle.matrices()?;
    println!("vertices {:?}", m.vertices);
    print_matrix("Q", &m.q);
    print_matrix("H", &m.h);
    print_matrix("K", &m.k);

    for name in ["P3", "P4", "P5", "annulus"] {
        for n in 2..=4 {
            let t = Triangulation::preset(name, n)?;
            let q = Quiver::build(&t)?;
            let ext = extend(&t)?;
            println!("{name} n={n}: {} vertices, extension {} x {}", q.len(), ext.v.len(), ext.v_prime.len());
        }
    }

    let annulus = Triangulation::preset("annulus", 3)?;
    let cut = cutting_hom_x(&annulus, 1)?;
    cut.hom()?;
    println!("cutting the annulus: {} vertices -> {}", cut.q.len(), cut.q_cut.len());
    psi_embedding(&Triangulation::preset("P4", 3)?)?;

    // a triangle glued to itself has singular H
    let folded = Triangulation::new(2, 1, vec![[0, 1, 0, 2]])?;
    println!("self-glued triangle: {}", Quiver::build(&folded)?.kmatrix().unwrap_err());
    Ok(())
}
