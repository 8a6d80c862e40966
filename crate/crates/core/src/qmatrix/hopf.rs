use std::collections::HashMap;

use super::{ExpMatrix, QAlgebra, QElement};
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;

/// Element of `M_q(n) (x) M_q(n)` with commuting legs.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    n: usize,
    terms: HashMap<(ExpMatrix, ExpMatrix), Scalar>,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(ExpMatrix, ExpMatrix), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &ExpMatrix, right: &ExpMatrix) -> Option<&Scalar> {
        self.terms.get(&(*left, *right))
    }

    pub fn add_term(&mut self, left: ExpMatrix, right: ExpMatrix, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
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

    /// `x (x) y`.
    pub fn pure(x: &QElement, y: &QElement) -> Self {
        let mut out = Self::zero(x.rank());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_term(*a, *b, &(ca * cb));
            }
        }
        out
    }

    /// Componentwise product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(&self, other: &Self, alg: &QAlgebra) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let left = alg.mul(&alg.monomial(*a), &alg.monomial(*c));
                let right = alg.mul(&alg.monomial(*b), &alg.monomial(*d));
                let coeff = c1 * c2;
                for (l, cl) in left.terms() {
                    let cl = &coeff * cl;
                    for (r, cr) in right.terms() {
                        out.add_term(*l, *r, &(&cl * cr));
                    }
                }
            }
        }
        out
    }

    /// `(eps (x) id)(x)`.
    pub fn counit_left(&self, alg: &QAlgebra) -> QElement {
        let mut out = alg.zero();
        for ((a, b), c) in &self.terms {
            if a.is_diagonal() {
                out.add_term(*b, c);
            }
        }
        out
    }

    /// `(id (x) eps)(x)`.
    pub fn counit_right(&self, alg: &QAlgebra) -> QElement {
        let mut out = alg.zero();
        for ((a, b), c) in &self.terms {
            if b.is_diagonal() {
                out.add_term(*a, c);
            }
        }
        out
    }
}

/// Coproduct, `Delta(u_ij) = sum_k u_ik (x) u_kj`, extended multiplicatively.
pub fn hopf_delta(alg: &QAlgebra, x: &QElement) -> TensorElement {
    let n = alg.rank();
    let gens: Vec<TensorElement> = (0..n * n)
        .map(|p| {
            let (i, j) = (p / n, p % n);
            let mut t = TensorElement::zero(n);
            for k in 0..n {
                t.add_term(
                    ExpMatrix::generator(n, i, k),
                    ExpMatrix::generator(n, k, j),
                    &alg.ring().one(),
                );
            }
            t
        })
        .collect();
    let mut out = TensorElement::zero(n);
    for (m, c) in x.terms() {
        let mut cur = TensorElement::zero(n);
        cur.add_term(ExpMatrix::zero(n), ExpMatrix::zero(n), c);
        for g in m.word() {
            cur = cur.mul(&gens[g], alg);
        }
        for ((a, b), v) in cur.terms {
            out.add_term(a, b, &v);
        }
    }
    out
}

/// Counit, `eps(u_ij) = delta_ij`: a PBW monomial maps to 1 exactly when it
/// only involves diagonal generators.
pub fn hopf_counit(x: &QElement) -> Scalar {
    let mut out = x.ring().zero();
    for (m, c) in x.terms() {
        if m.is_diagonal() {
            out.add_assign_ref(c);
        }
    }
    out
}

/// `S(u_ij) = (-q)^{i-j} det_q(u^{ji})`, where `u^{ji}` drops row `j` and
/// column `i`. Indices are 1-based.
pub fn antipode_gen(alg: &QAlgebra, i: usize, j: usize) -> QElement {
    let n = alg.rank();
    assert!((1..=n).contains(&i) && (1..=n).contains(&j), "index out of range");
    if n == 1 {
        return alg.one();
    }
    let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
    let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
    alg.quantum_minor(&rows, &cols)
        .unwrap()
        .scale(&alg.minus_q_pow(i as i64 - j as i64))
}

/// Failing `(i, j, side)` triples of `sum_k S(u_ik) u_kj = delta_ij` (side 0)
/// and `sum_k u_ik S(u_kj) = delta_ij` (side 1), modulo `det_q - 1`.
pub fn antipode_failures(alg: &QAlgebra) -> Vec<(usize, usize, u8)> {
    let n = alg.rank();
    let s: Vec<Vec<QElement>> = (1..=n)
        .map(|i| (1..=n).map(|j| antipode_gen(alg, i, j)).collect())
        .collect();
    let mut bad = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let delta = if i == j { alg.one() } else { alg.zero() };
            let mut left = delta.neg();
            let mut right = delta.neg();
            for k in 1..=n {
                left.add_assign(&alg.mul(&s[i - 1][k - 1], &alg.gen(k, j)));
                right.add_assign(&alg.mul(&alg.gen(i, k), &s[k - 1][j - 1]));
            }
            if !alg.reduce(&left).is_zero() {
                bad.push((i, j, 0));
            }
            if !alg.reduce(&right).is_zero() {
                bad.push((i, j, 1));
            }
        }
    }
    bad
}

pub fn antipode_axiom_report(alg: &QAlgebra) -> Report {
    let rep = Report::start(
        format!("antipode axiom in O_q(SL_{})", alg.rank()),
        "sum_k S(u_ik) u_kj = delta_ij = sum_k u_ik S(u_kj), S(u_ij) = (-q)^(i-j) det_q(u^ji)",
    )
    .param("n", alg.rank())
    .param("ring", alg.ring().to_string());
    let bad = antipode_failures(alg);
    rep.param("failures", &bad)
        .finish(Verdict::from_bool(bad.is_empty()), bad.len())
}
