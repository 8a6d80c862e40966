//! Weyl-ordered products in a quantum torus, its Frobenius and a monomial map.

use qfrob::qtorus::{check_eq_mono, frobenius_t, MonomialHom, TorusAlgebra};
use qfrob::scalar::{Ring, RootParams};

fn main() -> qfrob::Result<()> {
    let q = vec![vec![0, 1], vec![-1, 0]];
    let alg = TorusAlgebra::new(q.clone(), &Ring::Laurent)?;
    let (x1, x2) = (alg.gen(0), alg.gen(1));
    println!("x1 x2 = {}", serde_json::to_string(&alg.mul(&x1, &x2))?);
    println!("x2 x1 = {}", serde_json::to_string(&alg.mul(&x2, &x1))?);
    println!("raw x1 x2 x1^-1 = {}", serde_json::to_string(&alg.from_raw_word(&[(0, 1), (1, 1), (0, -1)])?)?);

    let params = RootParams::new(48, 2);
    let eta = alg.with_ring(&params.eta_ring());
    let y = eta.mul(&eta.gen(0), &eta.gen(1));
    println!("Frobenius of x1 x2 at d = 48: {}", serde_json::to_string(&frobenius_t(&y, &params))?);

    // [k] -> [2k] maps the torus of 4Q into the torus of Q
    let two = vec![vec![2, 0], vec![0, 2]];
    let four_q: Vec<Vec<i64>> = q.iter().map(|r| r.iter().map(|x| 4 * x).collect()).collect();
    let hom = MonomialHom::new(two.clone(), &four_q, &q)?;
    println!("image exponent of (1, -1): {:?}", hom.image_exponent(&[1, -1]));
    println!("{}", check_eq_mono(&two, &four_q, &q, 48, 2, 20, 1)?);
    Ok(())
}
