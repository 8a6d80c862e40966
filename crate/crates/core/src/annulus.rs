//! The annulus algebra as the commutative polynomial ring on `a_1, ..., a_{n-1}`,
//! its cutting map into `O_q(SL_n)` and its Frobenius.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qmatrix::{frobenius_m, subsets, QAlgebra, QElement};
use crate::report::{Report, Verdict};
use crate::scalar::{Ring, RootParams, Scalar};
use crate::symfun::{pbar, EPoly, PolyAlgebra};

/// Polynomial in `a_1, ..., a_{n-1}` with coefficients in a [`Ring`].
#[derive(Clone, Debug, PartialEq)]
pub struct AnnulusElement {
    n: usize,
    ring: Ring,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl AnnulusElement {
    pub fn zero(n: usize, ring: &Ring) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        Self {
            n,
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar, ring: &Ring) -> Self {
        let mut x = Self::zero(n, ring);
        x.add_term(vec![0; n - 1], &c);
        x
    }

    pub fn one(n: usize, ring: &Ring) -> Self {
        Self::constant(n, ring.one(), ring)
    }

    /// The generator `a_k`, `1 <= k <= n - 1`.
    pub fn gen(n: usize, k: usize, ring: &Ring) -> Self {
        assert!((1..n).contains(&k), "a_{k} is not a generator at rank {n}");
        let mut e = vec![0; n - 1];
        e[k - 1] = 1;
        let mut x = Self::zero(n, ring);
        x.add_term(e, &ring.one());
        x
    }

    /// `P(a_1, ..., a_{n-1})` with integer coefficients embedded in `ring`.
    pub fn from_epoly(p: &EPoly, ring: &Ring) -> Self {
        let mut x = Self::zero(p.rank(), ring);
        for (e, c) in p.terms() {
            x.add_term(e.clone(), &ring.from_int(c.clone()));
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: &Scalar) {
        assert_eq!(e.len(), self.n - 1, "exponent length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(|| self.ring.zero());
        slot.add_assign_ref(c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-&self.ring.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n, &self.ring);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, &self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    /// Same coordinates over another ring.
    pub fn transport(&self, target: &Ring) -> Self {
        let mut out = Self::zero(self.n, target);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &self.ring.transport(c, target));
        }
        out
    }
}

impl fmt::Display for AnnulusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| if a == 1 { format!("a{}", k + 1) } else { format!("a{}^{a}", k + 1) })
                .collect();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "({c})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Serialize for AnnulusElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [u32],
            coeff: String,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(e, c)| Term {
                exp: e,
                coeff: c.to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("AnnulusElement", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("ring", &self.ring.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Arithmetic context for evaluating integer polynomials in annulus elements.
pub struct AnnulusAlgebra {
    pub n: usize,
    pub ring: Ring,
}

impl PolyAlgebra for AnnulusAlgebra {
    type Elem = AnnulusElement;
    fn one(&self) -> AnnulusElement {
        AnnulusElement::one(self.n, &self.ring)
    }
    fn zero(&self) -> AnnulusElement {
        AnnulusElement::zero(self.n, &self.ring)
    }
    fn add(&self, a: &AnnulusElement, b: &AnnulusElement) -> AnnulusElement {
        a.add(b)
    }
    fn mul(&self, a: &AnnulusElement, b: &AnnulusElement) -> AnnulusElement {
        a.mul(b)
    }
    fn scale(&self, a: &AnnulusElement, c: &BigInt) -> AnnulusElement {
        a.scale(&self.ring.from_int(c.clone()))
    }
}

/// The element `P(a_1, ..., a_{n-1})`.
pub fn thread_eval(n: usize, p: &EPoly, ring: &Ring) -> Result<AnnulusElement> {
    if p.rank() != n {
        return Err(Error::RankMismatch(p.rank(), n));
    }
    Ok(AnnulusElement::from_epoly(p, ring))
}

/// Unreduced image of `x` under `a_k -> D_k` in `M_q(n)`; monomials are
/// multiplied in increasing `k`.
fn theta_unreduced(x: &AnnulusElement, alg: &QAlgebra) -> QElement {
    assert_eq!(x.rank(), alg.rank(), "rank mismatch");
    assert_eq!(x.ring(), alg.ring(), "coefficient rings differ");
    let ds = alg.dks();
    let mut out = alg.zero();
    for (e, c) in x.terms() {
        let mono = EPoly::monomial(x.rank(), e.clone(), BigInt::from(1)).evaluate(alg, &ds);
        out.add_assign(&mono.scale(c));
    }
    out
}

/// The cutting map `a_k -> D_k`, reduced in `O_q(SL_n)`.
pub fn theta_c(x: &AnnulusElement, alg: &QAlgebra) -> QElement {
    alg.reduce(&theta_unreduced(x, alg))
}

/// `a_k -> pbar_{N,k}(a_1, ..., a_{n-1})`, from the `eta_hat` ring to the
/// `omega_hat` ring.
pub fn annulus_frobenius(x: &AnnulusElement, params: &RootParams) -> Result<AnnulusElement> {
    let n = x.rank();
    if n != params.n {
        return Err(Error::RankMismatch(n, params.n));
    }
    if !params.factorial_nonzero {
        return Err(Error::Precondition(format!(
            "[n]_omega! = 0: N = {} lies in 2..={n} at d = {}",
            params.big_n, params.d
        )));
    }
    let omega = params.omega_ring();
    let images: Vec<EPoly> = (1..n).map(|k| pbar(n, params.big_n, k)).collect::<Result<_>>()?;
    let lifted = x.transport(&omega);
    let mut out = AnnulusElement::zero(n, &omega);
    for (e, c) in lifted.terms() {
        let img = EPoly::monomial(n, e.clone(), BigInt::from(1)).compose(&images);
        out = out.add(&AnnulusElement::from_epoly(&img, &omega).scale(c));
    }
    Ok(out)
}

/// Exponent vectors in `n - 1` variables with total degree at most `bound`.
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut exps: Vec<Vec<u32>> = vec![vec![]];
    for _ in 1..n {
        exps = exps
            .into_iter()
            .flat_map(|e| {
                (0..=bound).map(move |a| {
                    let mut e = e.clone();
                    e.push(a);
                    e
                })
            })
            .filter(|e| e.iter().sum::<u32>() <= bound)
            .collect();
    }
    exps
}

/// Monomials `x` up to `degree_bound` with
/// `reduce(Theta_c(Psi(x)) - Phi(Theta_c(x))) != 0`, with their residual sizes.
pub fn square_failures(n: usize, d: u32, degree_bound: u32) -> Result<Vec<(Vec<u32>, usize)>> {
    let params = crate::qmatrix::check_main_theorem_preconditions(n, d, 1)?;
    let eta = params.eta_ring();
    let eta_alg = QAlgebra::new(n, &eta);
    let om_alg = QAlgebra::new(n, &params.omega_ring());
    let mut bad = Vec::new();
    for e in monomials_up_to(n, degree_bound) {
        let mut x = AnnulusElement::zero(n, &eta);
        x.add_term(e.clone(), &eta.one());
        let down = theta_unreduced(&annulus_frobenius(&x, &params)?, &om_alg);
        let across = frobenius_m(&theta_c(&x, &eta_alg), &params)?;
        let residual = om_alg.reduce(&down.sub(&across));
        if !residual.is_zero() {
            bad.push((e, residual.num_terms()));
        }
    }
    Ok(bad)
}

pub fn check_square(n: usize, d: u32, degree_bound: u32) -> Result<Report> {
    let start = Report::start(
        format!("Theta_c . Psi = Phi . Theta_c on annulus monomials of degree <= {degree_bound} at rank {n}"),
        "Theta_c(Psi(x)) = Phi(Theta_c(x)) in O_omega(SL_n)",
    );
    let bad = square_failures(n, d, degree_bound)?;
    let residual: usize = bad.iter().map(|b| b.1).sum();
    Ok(start
        .param("n", n)
        .param("d", d)
        .param("N", RootParams::new(d, n).big_n)
        .param("degree_bound", degree_bound)
        .param("monomials", monomials_up_to(n, degree_bound).len())
        .param("failing_monomials", &bad)
        .finish(Verdict::from_bool(bad.is_empty()), residual))
}

/// Outcome of comparing `D_k(U^m)` with `pbar_{m,k}(D_1(U), ..., D_{n-1}(U))`
/// for the generic commutative matrix `U`.
#[derive(Clone, Debug)]
pub struct ClassicalOutcome {
    pub zero_before_reduction: bool,
    pub residual: QElement,
}

/// Works at `qhat = 1`, where the quantum matrix engine is commutative.
pub fn classical_power(n: usize, m: u32, k: usize) -> Result<ClassicalOutcome> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={}", n - 1)));
    }
    let alg = QAlgebra::new(n, &Ring::cyclotomic(1, 1));
    let u: Vec<Vec<QElement>> = (1..=n).map(|i| (1..=n).map(|j| alg.gen(i, j)).collect()).collect();
    let mut power = u.clone();
    for _ in 1..m {
        power = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = alg.zero();
                        for (l, row) in u.iter().enumerate() {
                            s.add_assign(&alg.mul(&power[i][l], &row[j]));
                        }
                        s
                    })
                    .collect()
            })
            .collect();
    }
    let mut lhs = alg.zero();
    for rows in subsets(n, k) {
        lhs.add_assign(&leibniz(&alg, &power, &rows));
    }
    let rhs = pbar(n, m, k)?.evaluate(&alg, &alg.dks());
    let diff = lhs.sub(&rhs);
    Ok(ClassicalOutcome {
        zero_before_reduction: diff.is_zero(),
        residual: alg.reduce(&diff),
    })
}

/// Principal minor on 1-based `rows` of a matrix over a commutative algebra.
fn leibniz(alg: &QAlgebra, a: &[Vec<QElement>], rows: &[usize]) -> QElement {
    let k = rows.len();
    let mut out = alg.zero();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let factors: Vec<&QElement> = (0..k).map(|i| &a[rows[i] - 1][rows[perm[i]] - 1]).collect();
        let term = alg.product(factors);
        if inversions % 2 == 0 {
            out.add_assign(&term);
        } else {
            out.sub_assign(&term);
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn classical_power_check(n: usize, m: u32, k: usize) -> Result<Report> {
    let start = Report::start(
        format!("D_{k}(U^{m}) = pbar_{m},{k}({}) for generic U in SL_{n}", crate::matcheck::minor_sums("U", n)),
        "Theta_c(a_{m,k}) = D_k^1(u^m)",
    );
    let out = classical_power(n, m, k)?;
    let r = out.residual.num_terms();
    Ok(start
        .param("n", n)
        .param("m", m)
        .param("k", k)
        .param("zero_before_reduction", out.zero_before_reduction)
        .finish(Verdict::from_bool(r == 0), r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::verify_main_theorem;

    #[test]
    fn theta_of_a1_is_trace() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        let x = theta_c(&AnnulusElement::gen(2, 1, &Ring::Laurent), &alg);
        assert_eq!(x, alg.gen(1, 1).add(&alg.gen(2, 2)));
        assert_eq!(theta_c(&AnnulusElement::one(2, &Ring::Laurent), &alg), alg.one());
    }

    #[test]
    fn theta_is_multiplicative() {
        let ring = Ring::Laurent;
        let alg = QAlgebra::new(3, &ring);
        let a1 = AnnulusElement::gen(3, 1, &ring);
        let a2 = AnnulusElement::gen(3, 2, &ring);
        let x = a1.add(&a2.scale(&ring.qhat_pow(3)));
        let y = a1.mul(&a2).sub(&AnnulusElement::one(3, &ring));
        let lhs = theta_c(&x.mul(&y), &alg);
        let rhs = alg.reduce(&alg.mul(&theta_c(&x, &alg), &theta_c(&y, &alg)));
        assert_eq!(lhs, rhs);
        let d1d2 = alg.reduce(&alg.mul(&alg.dk(1).unwrap(), &alg.dk(2).unwrap()));
        let d2d1 = alg.reduce(&alg.mul(&alg.dk(2).unwrap(), &alg.dk(1).unwrap()));
        assert_eq!(d1d2, d2d1);
        assert_eq!(theta_c(&a1.mul(&a2), &alg), d1d2);
    }

    #[test]
    fn frobenius_on_generators() {
        let params = RootParams::new(48, 2);
        let eta = params.eta_ring();
        let psi = annulus_frobenius(&AnnulusElement::gen(2, 1, &eta), &params).unwrap();
        let expected = AnnulusElement::from_epoly(&pbar(2, 3, 1).unwrap(), &params.omega_ring());
        assert_eq!(psi, expected);
        let one = annulus_frobenius(&AnnulusElement::one(2, &eta), &params).unwrap();
        assert_eq!(one, AnnulusElement::one(2, &params.omega_ring()));
        let trivial = RootParams::new(1, 3);
        let a2 = AnnulusElement::gen(3, 2, &trivial.eta_ring());
        assert_eq!(annulus_frobenius(&a2, &trivial).unwrap(), a2);
        assert!(annulus_frobenius(&AnnulusElement::gen(2, 1, &Ring::cyclotomic(32, 1)), &RootParams::new(32, 2)).is_err());
    }

    #[test]
    fn frobenius_multiplies_degree_by_n() {
        let params = RootParams::new(16, 3);
        let eta = params.eta_ring();
        for e in monomials_up_to(3, 3) {
            let mut x = AnnulusElement::zero(3, &eta);
            x.add_term(e.clone(), &eta.one());
            let deg: u32 = e.iter().sum();
            assert_eq!(annulus_frobenius(&x, &params).unwrap().total_degree(), Some(params.big_n * deg));
        }
    }

    #[test]
    fn square_commutes() {
        assert!(square_failures(2, 48, 2).unwrap().is_empty());
        assert!(square_failures(3, 16, 1).unwrap().is_empty());
        for k in 1..3 {
            assert!(verify_main_theorem(3, 16, k).unwrap().residual.is_zero());
        }
    }

    #[test]
    fn threading() {
        let ring = Ring::Laurent;
        let y2 = EPoly::var(3, 2);
        assert_eq!(thread_eval(3, &y2, &ring).unwrap(), AnnulusElement::gen(3, 2, &ring));
        let c = EPoly::constant(3, BigInt::from(5));
        assert_eq!(thread_eval(3, &c, &ring).unwrap(), AnnulusElement::constant(3, ring.from_int(5), &ring));
        assert!(matches!(thread_eval(2, &y2, &ring), Err(Error::RankMismatch(3, 2))));
    }

    #[test]
    fn classical_powers() {
        let out = classical_power(2, 1, 1).unwrap();
        assert!(out.zero_before_reduction);
        let out = classical_power(2, 2, 1).unwrap();
        assert!(!out.zero_before_reduction);
        assert!(out.residual.is_zero());
        for (n, m, k) in [(3, 2, 1), (3, 3, 2), (3, 2, 2)] {
            assert!(classical_power(n, m, k).unwrap().residual.is_zero(), "n={n} m={m} k={k}");
        }
    }

    #[test]
    fn commutative_at_qhat_one() {
        let alg = QAlgebra::new(3, &Ring::cyclotomic(1, 1));
        let word = [(3, 3), (1, 2), (2, 1), (1, 1), (3, 3), (2, 2)];
        let x = alg.straighten(&word, &alg.ring().one()).unwrap();
        assert_eq!(x.num_terms(), 1);
        let mut sorted = word;
        sorted.sort();
        assert_eq!(x, alg.straighten(&sorted, &alg.ring().one()).unwrap());
    }
}
