use super::{ExpMatrix, QAlgebra, QElement};
use crate::error::{Error, Result};
use crate::report::{Report, Verdict};
use crate::scalar::{Ring, RootParams};

/// The Frobenius homomorphism `M_eta(n) -> M_omega(n)`, `u_ij -> u_ij^N`.
///
/// Ordered monomials go to ordered monomials, `u^m -> u^{Nm}`. The input
/// lives over the eta ring (or over generic Laurent coefficients, which are
/// first specialized at `eta_hat`); the output lives over the omega ring.
pub fn frobenius_m(x: &QElement, params: &RootParams) -> Result<QElement> {
    if x.rank() != params.n {
        return Err(Error::RankMismatch(x.rank(), params.n));
    }
    let eta = params.eta_ring();
    let omega = params.omega_ring();
    let x = match x.ring() {
        Ring::Laurent => x.transport(&eta),
        r if *r == eta => x.clone(),
        r => return Err(Error::RingMismatch(r.to_string(), eta.to_string())),
    };
    let mut out = QElement::zero(params.n, &omega);
    for (m, c) in x.terms() {
        out.add_term(m.scaled(params.big_n), &eta.transport(c, &omega));
    }
    Ok(out)
}

/// Kind of defining relation between two generators `u_ij`, `u_kl` with
/// `(i, j) < (k, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    SameRow,
    SameColumn,
    Commuting,
    Crossing,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationCheck {
    /// 1-based `(i, j)` and `(k, l)`.
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub kind: RelationKind,
    pub holds: bool,
}

/// Checks that `U = (u_ij^N)` satisfies the defining relations of `M_eta(n)`
/// inside `M_omega(n)`, one check per pair of generators.
pub fn check_eta_qmatrix(params: &RootParams) -> Vec<RelationCheck> {
    let n = params.n;
    let big_n = params.big_n;
    let alg = QAlgebra::new(n, &params.omega_ring());
    let ring = alg.ring().clone();
    let eta = ring.from_int(params.eta_sign as i64);
    let u = |i: usize, j: usize| alg.monomial(ExpMatrix::generator(n, i, j).scaled(big_n));
    let mut out = Vec::new();
    for g in 0..n * n {
        for h in g + 1..n * n {
            let (i, j) = (g / n, g % n);
            let (k, l) = (h / n, h % n);
            let (a, b) = (u(i, j), u(k, l));
            let ab = alg.mul(&a, &b);
            let ba = alg.mul(&b, &a);
            let (kind, residual) = if i == k || j == l {
                let kind = if i == k { RelationKind::SameRow } else { RelationKind::SameColumn };
                (kind, ab.sub(&ba.scale(&eta)))
            } else if j > l {
                (RelationKind::Commuting, ab.sub(&ba))
            } else {
                // eta - eta^{-1} = 0 since eta = +-1
                (RelationKind::Crossing, ab.sub(&ba))
            };
            out.push(RelationCheck {
                first: (i + 1, j + 1),
                second: (k + 1, l + 1),
                kind,
                holds: residual.is_zero(),
            });
        }
    }
    out
}

pub fn eta_qmatrix_report(params: &RootParams) -> Report {
    let rep = Report::start(
        format!(
            "(u_ij^N) satisfies the q-matrix relations at q = eta in M_omega({})",
            params.n
        ),
        "U = (u_ij^N) is an eta-matrix: U_ij U_il = eta U_il U_ij, U_ij U_kj = eta U_kj U_ij, \
         U_il U_kj = U_kj U_il, U_ij U_kl - U_kl U_ij = (eta - eta^-1) U_il U_kj",
    )
    .param("n", params.n)
    .param("d", params.d)
    .param("N", params.big_n)
    .param("eta", params.eta_sign);
    let checks = check_eta_qmatrix(params);
    let failed = checks.iter().filter(|c| !c.holds).count();
    let mut rep = rep;
    rep.set("relations", &checks);
    rep.finish(Verdict::from_bool(failed == 0), failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_scale() {
        let p = RootParams::new(48, 2);
        let alg = QAlgebra::new(2, &p.eta_ring());
        let img = frobenius_m(&alg.gen(1, 2), &p).unwrap();
        let expected = QElement::monomial(
            ExpMatrix::generator(2, 0, 1).scaled(3),
            p.omega_ring().one(),
            &p.omega_ring(),
        );
        assert_eq!(img, expected);
        assert_eq!(frobenius_m(&alg.one(), &p).unwrap(), QElement::one(2, &p.omega_ring()));
        assert!(frobenius_m(&QAlgebra::new(3, &p.eta_ring()).one(), &p).is_err());
    }

    #[test]
    fn determinant_goes_to_power() {
        let p = RootParams::new(48, 2);
        let eta_alg = QAlgebra::new(2, &p.eta_ring());
        let om = QAlgebra::new(2, &p.omega_ring());
        let lhs = frobenius_m(&eta_alg.det(), &p).unwrap();
        let rhs = om.pow(&om.det(), 3);
        assert!(om.reduce(&lhs.sub(&rhs)).is_zero());
    }

    #[test]
    fn eta_relations_hold() {
        for (d, n) in [(48, 2), (1, 2), (16, 3)] {
            let checks = check_eta_qmatrix(&RootParams::new(d, n));
            assert_eq!(checks.len(), n * n * (n * n - 1) / 2);
            assert!(checks.iter().all(|c| c.holds), "d={d} n={n}");
        }
    }
}
