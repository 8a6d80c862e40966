use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{frobenius_m, subsets, ExpMatrix, QAlgebra, QElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{Report, Verdict};
use crate::scalar::{Ring, RootParams, Scalar};
use crate::symfun::{pbar, EPoly, PolyAlgebra};

impl PolyAlgebra for QAlgebra {
    type Elem = QElement;
    fn one(&self) -> QElement {
        QAlgebra::one(self)
    }
    fn zero(&self) -> QElement {
        QAlgebra::zero(self)
    }
    fn add(&self, a: &QElement, b: &QElement) -> QElement {
        a.add(b)
    }
    fn mul(&self, a: &QElement, b: &QElement) -> QElement {
        QAlgebra::mul(self, a, b)
    }
    fn scale(&self, a: &QElement, c: &BigInt) -> QElement {
        a.scale(&self.ring().from_int(c.clone()))
    }
}

/// Result of comparing `Phi(D_k at eta)` with `pbar_{N,k}(D_1, ..., D_{n-1})`.
#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremOutcome {
    pub params: RootParams,
    pub k: usize,
    pub pbar: EPoly,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Whether the two sides already agree in `M_omega(n)`, before reducing
    /// modulo `det_q - 1`.
    pub zero_before_reduction: bool,
    /// `reduce(LHS - RHS)` in `O_omega(SL_n)`.
    pub residual: QElement,
}

pub fn check_main_theorem_preconditions(n: usize, d: u32, k: usize) -> Result<RootParams> {
    if !(2..=super::MAX_RANK).contains(&n) {
        return Err(Error::InvalidArgument(format!("rank {n} outside 2..={}", super::MAX_RANK)));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={}", n - 1)));
    }
    let params = RootParams::new(d, n);
    if !params.factorial_nonzero {
        return Err(Error::Precondition(format!(
            "[n]_omega! = 0: N = {} lies in 2..={n} at d = {d}",
            params.big_n
        )));
    }
    Ok(params)
}

/// Evaluates both sides of `Phi(D_k^eta) = pbar_{N,k}(D_1^omega, ..., D_{n-1}^omega)`
/// and reduces their difference in `O_omega(SL_n)`.
pub fn verify_main_theorem(n: usize, d: u32, k: usize) -> Result<MainTheoremOutcome> {
    let params = check_main_theorem_preconditions(n, d, k)?;
    let eta_alg = QAlgebra::new(n, &params.eta_ring());
    let lhs = frobenius_m(&eta_alg.dk(k)?, &params)?;
    let omega_alg = QAlgebra::new(n, &params.omega_ring());
    let p = pbar(n, params.big_n, k)?;
    let rhs = p.evaluate(&omega_alg, &omega_alg.dks());
    let diff = lhs.sub(&rhs);
    let residual = omega_alg.reduce(&diff);
    Ok(MainTheoremOutcome {
        params,
        k,
        pbar: p,
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
        zero_before_reduction: diff.is_zero(),
        residual,
    })
}

pub fn main_theorem_report(n: usize, d: u32, k: usize) -> Result<Report> {
    let args: Vec<String> = (1..n).map(|i| format!("D_{i}")).collect();
    let start = Report::start(
        format!("Frobenius image of D_{k} is pbar_N,{k}({}) in O_omega(SL_{n})", args.join(", ")),
        "Phi(D_k^eta(u)) = pbar_{N,k}(D_1^omega(u), ..., D_{n-1}^omega(u))",
    );
    let out = verify_main_theorem(n, d, k)?;
    let residual_terms = out.residual.num_terms();
    Ok(start
        .param("n", n)
        .param("d", d)
        .param("k", k)
        .param("N", out.params.big_n)
        .param("pbar", out.pbar.to_string())
        .param("lhs_terms", out.lhs_terms)
        .param("rhs_terms", out.rhs_terms)
        .param("zero_before_reduction", out.zero_before_reduction)
        .finish(Verdict::from_bool(residual_terms == 0), residual_terms))
}

/// Minors `(I, J)` (1-based) at rank `n` for which `Phi(M^I_J at eta)` differs
/// from `(M^I_J at omega)^N` in `M_omega(n)`.
pub fn frobenius_minor_failures(params: &RootParams) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = params.n;
    let eta_alg = QAlgebra::new(n, &params.eta_ring());
    let om = QAlgebra::new(n, &params.omega_ring());
    let mut bad = Vec::new();
    for k in 1..=n {
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let lhs = frobenius_m(&eta_alg.quantum_minor(&rows, &cols).unwrap(), params).unwrap();
                let rhs = om.pow(&om.quantum_minor(&rows, &cols).unwrap(), params.big_n);
                if lhs != rhs {
                    bad.push((rows.clone(), cols.clone()));
                }
            }
        }
    }
    bad
}

/// Coordinates of a reduced element at `qhat = at`, one entry per minimal
/// monomial in `basis`.
fn coordinates(x: &QElement, basis: &[ExpMatrix], at: &BigRational) -> Vec<BigRational> {
    basis
        .iter()
        .map(|m| match x.coeff(m) {
            Scalar::Laurent(l) => l.eval_rational(at),
            Scalar::Cyclotomic(_) => panic!("coordinates need generic coefficients"),
        })
        .collect()
}

/// Rank of the reduced monomials `D_1^{a_1} ... D_{n-1}^{a_{n-1}}` with
/// `sum a <= max_degree`, specialized at `qhat = 2`, together with their count.
/// Equal numbers mean the monomials are linearly independent in `O_q(SL_n)`.
pub fn dk_monomial_rank(n: usize, max_degree: u32) -> (usize, usize) {
    let alg = QAlgebra::new(n, &Ring::Laurent);
    let ds = alg.dks();
    let mut exps: Vec<Vec<u32>> = vec![vec![]];
    for _ in 1..n {
        exps = exps
            .into_iter()
            .flat_map(|e| {
                (0..=max_degree).map(move |a| {
                    let mut e = e.clone();
                    e.push(a);
                    e
                })
            })
            .filter(|e| e.iter().sum::<u32>() <= max_degree)
            .collect();
    }
    let elems: Vec<QElement> = exps
        .iter()
        .map(|e| {
            let p = EPoly::monomial(n, e.clone(), BigInt::from(1));
            alg.reduce(&p.evaluate(&alg, &ds))
        })
        .collect();
    let mut basis: Vec<ExpMatrix> = elems.iter().flat_map(|x| x.terms().map(|(m, _)| *m).collect::<Vec<_>>()).collect();
    basis.sort_by(|a, b| a.grlex_cmp(b));
    basis.dedup();
    let at = linalg::rat(2);
    let rows: linalg::RatMatrix = elems.iter().map(|x| coordinates(x, &basis, &at)).collect();
    (linalg::rank(&rows), elems.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_cube() {
        let out = verify_main_theorem(2, 48, 1).unwrap();
        assert_eq!(out.pbar.to_string(), "y1^3 - 3*y1");
        assert!(out.residual.is_zero());
    }

    #[test]
    fn trivial_root() {
        let out = verify_main_theorem(2, 1, 1).unwrap();
        assert!(out.zero_before_reduction);
        assert!(out.residual.is_zero());
    }

    #[test]
    fn refuses_vanishing_factorial() {
        // d = 32, n = 2: N = 2
        assert!(matches!(verify_main_theorem(2, 32, 1), Err(Error::Precondition(_))));
        assert!(verify_main_theorem(2, 48, 2).is_err());
    }

    #[test]
    fn minors_go_to_powers() {
        assert!(frobenius_minor_failures(&RootParams::new(48, 2)).is_empty());
    }

    #[test]
    fn dk_monomials_independent() {
        let (r, c) = dk_monomial_rank(2, 3);
        assert_eq!(r, c);
    }
}
