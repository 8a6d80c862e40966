use std::collections::HashMap;

use super::{subsets, ExpMatrix, QAlgebra, QElement};
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;

/// Sign convention for reordering exterior generators, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExteriorConvention {
    /// `y_j y_i = -q y_i y_j`.
    MinusQ,
    /// `y_j y_i = -q^{-1} y_i y_j`.
    MinusQInverse,
}

/// Element of `A_q[y_1..y_n] (x) M_q(n)`: terms are keyed by the subset `J`
/// (bitmask) of the ordered exterior monomial `y_J` and a PBW monomial.
#[derive(Clone, Debug)]
pub struct ExtElement {
    terms: HashMap<(u32, ExpMatrix), Scalar>,
}

impl ExtElement {
    pub fn zero() -> Self {
        Self {
            terms: HashMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u32, m: ExpMatrix, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (mask, m);
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &ExtElement) {
        for ((s, m), c) in &other.terms {
            self.add_term(*s, *m, c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> ExtElement {
        let mut out = ExtElement::zero();
        for ((s, m), v) in &self.terms {
            out.add_term(*s, *m, &(v * c));
        }
        out
    }

    /// The `M_q(n)` coefficient of `y_J`; `subset` is 1-based and increasing.
    pub fn coefficient(&self, subset: &[usize], alg: &QAlgebra) -> QElement {
        let mask = subset.iter().fold(0u32, |acc, &i| acc | 1 << (i - 1));
        let mut out = alg.zero();
        for ((s, m), c) in &self.terms {
            if *s == mask {
                out.add_term(*m, c);
            }
        }
        out
    }

    pub fn mul(&self, other: &ExtElement, alg: &QAlgebra, conv: ExteriorConvention) -> ExtElement {
        let n = alg.rank();
        let swap = match conv {
            ExteriorConvention::MinusQ => alg.minus_q_pow(1),
            ExteriorConvention::MinusQInverse => alg.minus_q_pow(-1),
        };
        let mut swap_pows = vec![alg.ring().one()];
        for _ in 0..n * n {
            let next = swap_pows.last().unwrap() * &swap;
            swap_pows.push(next);
        }
        let mut out = ExtElement::zero();
        for ((s, a), c1) in &self.terms {
            for ((t, b), c2) in &other.terms {
                if s & t != 0 {
                    continue;
                }
                // each pair (x in S, y in T) with x > y needs one swap
                let swaps: u32 = (0..n)
                    .filter(|&y| t >> y & 1 == 1)
                    .map(|y| (s >> (y + 1)).count_ones())
                    .sum();
                let coeff = &(c1 * c2) * &swap_pows[swaps as usize];
                let prod = alg.mul(&alg.monomial(*a), &alg.monomial(*b));
                for (m, c) in prod.terms() {
                    out.add_term(s | t, *m, &(&coeff * c));
                }
            }
        }
        out
    }
}

/// The coaction `alpha(y_i) = sum_j y_j (x) u_ji`, 1-based.
pub fn coaction(alg: &QAlgebra, i: usize) -> ExtElement {
    let n = alg.rank();
    let mut out = ExtElement::zero();
    for j in 0..n {
        out.add_term(1 << j, ExpMatrix::generator(n, j, i - 1), &alg.ring().one());
    }
    out
}

/// Checks that the coaction respects the relations `y_i^2 = 0` and the
/// reordering rule of `conv`; returns the violated relations as 1-based
/// pairs `(i, j)` with `i <= j`.
pub fn coaction_violations(alg: &QAlgebra, conv: ExteriorConvention) -> Vec<(usize, usize)> {
    let n = alg.rank();
    let swap = match conv {
        ExteriorConvention::MinusQ => alg.minus_q_pow(1),
        ExteriorConvention::MinusQInverse => alg.minus_q_pow(-1),
    };
    let alphas: Vec<ExtElement> = (1..=n).map(|i| coaction(alg, i)).collect();
    let mut bad = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let (ai, aj) = (&alphas[i - 1], &alphas[j - 1]);
            let residual = if i == j {
                ai.mul(ai, alg, conv)
            } else {
                // alpha(y_j) alpha(y_i) - swap * alpha(y_i) alpha(y_j)
                let mut r = aj.mul(ai, alg, conv);
                r.add_assign(&ai.mul(aj, alg, conv).scale(&-&swap));
                r
            };
            if !residual.is_zero() {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// `sum_{|J| = k}` of the `y_J` coefficient of `alpha(y_J)`, computed in the
/// exterior algebra with the `y_j y_i = -q y_i y_j` convention.
pub fn exterior_trace(alg: &QAlgebra, k: usize) -> QElement {
    let n = alg.rank();
    assert!((1..=n).contains(&k), "k = {k} outside 1..={n}");
    let conv = ExteriorConvention::MinusQ;
    let mut out = alg.zero();
    for set in subsets(n, k) {
        let mut prod = ExtElement::zero();
        prod.add_term(0, ExpMatrix::zero(n), &alg.ring().one());
        for &j in &set {
            prod = prod.mul(&coaction(alg, j), alg, conv);
        }
        out.add_assign(&prod.coefficient(&set, alg));
    }
    out
}

pub fn exterior_trace_report(alg: &QAlgebra) -> Report {
    let n = alg.rank();
    let rep = Report::start(
        format!("exterior traces are the D_k and det_q at rank {n}"),
        "sum_J coefficient of y_J in alpha(y_J) = D_k(u)",
    )
    .param("n", n);
    let mut bad: Vec<usize> = (1..n)
        .filter(|&k| exterior_trace(alg, k) != alg.dk(k).unwrap())
        .collect();
    if exterior_trace(alg, n) != alg.det() {
        bad.push(n);
    }
    rep.param("failing_k", &bad)
        .finish(Verdict::from_bool(bad.is_empty()), bad.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;

    #[test]
    fn traces_match_minors() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        assert_eq!(exterior_trace(&alg, 1), alg.gen(1, 1).add(&alg.gen(2, 2)));
        assert_eq!(exterior_trace(&alg, 2), alg.det());
        let alg = QAlgebra::new(3, &Ring::Laurent);
        for k in 1..3 {
            assert_eq!(exterior_trace(&alg, k), alg.dk(k).unwrap());
        }
        assert_eq!(exterior_trace(&alg, 3), alg.det());
    }

    #[test]
    fn only_one_convention_is_compatible() {
        for n in 2..=3 {
            let alg = QAlgebra::new(n, &Ring::Laurent);
            assert!(coaction_violations(&alg, ExteriorConvention::MinusQ).is_empty());
            assert!(!coaction_violations(&alg, ExteriorConvention::MinusQInverse).is_empty());
        }
    }
}
