//! Quantum tori `x_i x_j = qhat^{2 Q_ij} x_j x_i` in the Weyl-normalized basis.

use std::collections::HashMap;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matcheck::trial_rng;
use crate::report::{Report, Verdict};
use crate::scalar::{Ring, RootParams, Scalar};

/// The quantum torus of an antisymmetric integer matrix over a coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusAlgebra {
    q: Vec<Vec<i64>>,
    ring: Ring,
}

/// Linear combination of Weyl monomials `[k]`, `k` in `Z^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    r: usize,
    ring: Ring,
    terms: HashMap<Vec<i64>, Scalar>,
}

pub fn check_antisymmetric(q: &[Vec<i64>]) -> Result<()> {
    let r = q.len();
    for (i, row) in q.iter().enumerate() {
        if row.len() != r {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        for j in 0..r {
            if row[j] != -q[j][i] {
                return Err(Error::NotAntisymmetric(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// `k^T Q l`.
pub fn bilinear(q: &[Vec<i64>], k: &[i64], l: &[i64]) -> i64 {
    let mut s = 0;
    for (i, ki) in k.iter().enumerate() {
        if *ki == 0 {
            continue;
        }
        for (j, lj) in l.iter().enumerate() {
            s += ki * q[i][j] * lj;
        }
    }
    s
}

impl TorusAlgebra {
    pub fn new(q: Vec<Vec<i64>>, ring: &Ring) -> Result<Self> {
        check_antisymmetric(&q)?;
        Ok(Self { q, ring: ring.clone() })
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.q
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Same matrix over another ring.
    pub fn with_ring(&self, ring: &Ring) -> Self {
        Self {
            q: self.q.clone(),
            ring: ring.clone(),
        }
    }

    pub fn zero(&self) -> TorusElement {
        TorusElement {
            r: self.rank(),
            ring: self.ring.clone(),
            terms: HashMap::new(),
        }
    }

    /// `c [k]`.
    pub fn monomial(&self, k: Vec<i64>, c: Scalar) -> TorusElement {
        assert_eq!(k.len(), self.rank(), "lattice rank mismatch");
        let mut out = self.zero();
        out.add_term(k, &c);
        out
    }

    pub fn one(&self) -> TorusElement {
        self.monomial(vec![0; self.rank()], self.ring.one())
    }

    /// Generator `x_{i+1}`.
    pub fn gen(&self, i: usize) -> TorusElement {
        let mut k = vec![0; self.rank()];
        k[i] = 1;
        self.monomial(k, self.ring.one())
    }

    /// Bilinear extension of `[k][l] = qhat^{k^T Q l} [k + l]`.
    pub fn try_mul(&self, x: &TorusElement, y: &TorusElement) -> Result<TorusElement> {
        for z in [x, y] {
            if z.r != self.rank() || z.ring != self.ring {
                return Err(Error::InvalidArgument("element belongs to another torus".into()));
            }
        }
        let mut out = self.zero();
        for (k, ck) in &x.terms {
            for (l, cl) in &y.terms {
                let sum: Vec<i64> = k.iter().zip(l).map(|(a, b)| a + b).collect();
                let c = &(ck * cl) * &self.ring.qhat_pow(bilinear(&self.q, k, l));
                out.add_term(sum, &c);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, x: &TorusElement, y: &TorusElement) -> TorusElement {
        self.try_mul(x, y).expect("operands must belong to this torus")
    }

    /// Normalizes `x_{i_1}^{a_1} x_{i_2}^{a_2} ...` (0-based indices) by
    /// bubble-sorting with `x_a^s x_b^t = qhat^{2 Q_ab s t} x_b^t x_a^s`, then
    /// converting the sorted raw product to the Weyl basis.
    pub fn from_raw_word(&self, word: &[(usize, i64)]) -> Result<TorusElement> {
        let r = self.rank();
        if let Some(&(i, _)) = word.iter().find(|(i, _)| *i >= r) {
            return Err(Error::InvalidArgument(format!("generator index {i} outside rank {r}")));
        }
        let mut w = word.to_vec();
        let mut exp = 0i64;
        let mut swapped = true;
        while swapped {
            swapped = false;
            for t in 0..w.len().saturating_sub(1) {
                let ((a, s), (b, u)) = (w[t], w[t + 1]);
                if a > b {
                    exp += 2 * self.q[a][b] * s * u;
                    w.swap(t, t + 1);
                    swapped = true;
                }
            }
        }
        let mut k = vec![0i64; r];
        for (i, a) in w {
            k[i] += a;
        }
        // raw sorted x_1^{k_1} ... x_r^{k_r} = qhat^{sum_{i<j} Q_ij k_i k_j} [k]
        for i in 0..r {
            for j in i + 1..r {
                exp += self.q[i][j] * k[i] * k[j];
            }
        }
        Ok(self.monomial(k, self.ring.qhat_pow(exp)))
    }
}

impl TorusElement {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: Vec<i64>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

/// `Phi^T([k]) = [N k]`, from the torus over the eta ring to the same torus
/// over the omega ring.
pub fn frobenius_t(x: &TorusElement, params: &RootParams) -> TorusElement {
    let eta = params.eta_ring();
    let omega = params.omega_ring();
    let src = match &x.ring {
        Ring::Laurent => eta.clone(),
        r => r.clone(),
    };
    assert!(src == eta, "input must live over the eta ring");
    let big_n = params.big_n as i64;
    let mut out = TorusElement {
        r: x.r,
        ring: omega.clone(),
        terms: HashMap::new(),
    };
    for (k, c) in &x.terms {
        let c = x.ring.transport(c, &eta);
        out.add_term(k.iter().map(|v| v * big_n).collect(), &eta.transport(&c, &omega));
    }
    out
}

/// The monomial map `[k] -> [k K]` from `T(Q)` to `T(Q')`, valid when
/// `K Q' K^T = Q`.
#[derive(Clone, Debug)]
pub struct MonomialHom {
    k: Vec<Vec<i64>>,
}

impl MonomialHom {
    pub fn new(k: Vec<Vec<i64>>, q: &[Vec<i64>], q_prime: &[Vec<i64>]) -> Result<Self> {
        let r = q.len();
        let r2 = q_prime.len();
        if k.len() != r || k.iter().any(|row| row.len() != r2) {
            return Err(Error::InvalidArgument(format!("K must be {r} x {r2}")));
        }
        for i in 0..r {
            for j in 0..r {
                let got = bilinear(q_prime, &k[i], &k[j]);
                if got != q[i][j] {
                    return Err(Error::MonomialCondition {
                        row: i + 1,
                        col: j + 1,
                        expected: q[i][j],
                        got,
                    });
                }
            }
        }
        Ok(Self { k })
    }

    pub fn image_exponent(&self, k: &[i64]) -> Vec<i64> {
        let r2 = self.k.first().map_or(0, |r| r.len());
        (0..r2)
            .map(|j| k.iter().zip(&self.k).map(|(a, row)| a * row[j]).sum())
            .collect()
    }

    pub fn apply(&self, x: &TorusElement) -> TorusElement {
        let r2 = self.k.first().map_or(0, |r| r.len());
        let mut out = TorusElement {
            r: r2,
            ring: x.ring.clone(),
            terms: HashMap::new(),
        };
        for (k, c) in &x.terms {
            out.add_term(self.image_exponent(k), c);
        }
        out
    }
}

fn random_exponent<R: Rng>(r: usize, rng: &mut R) -> Vec<i64> {
    (0..r).map(|_| rng.gen_range(-3i64..=3)).collect()
}

/// Random combination of two Weyl monomials with `qhat`-power coefficients.
fn random_element<R: Rng>(alg: &TorusAlgebra, rng: &mut R) -> TorusElement {
    let mut x = alg.zero();
    for _ in 0..2 {
        let c = alg.ring().qhat_pow(rng.gen_range(-6i64..=6));
        x.add_term(random_exponent(alg.rank(), rng), &c);
    }
    x
}

/// Trials where `Phi^T(x y) != Phi^T(x) Phi^T(y)`.
pub fn frobenius_t_failures(q: &[Vec<i64>], params: &RootParams, trials: usize, seed: u64) -> Result<usize> {
    let eta = TorusAlgebra::new(q.to_vec(), &params.eta_ring())?;
    let omega = eta.with_ring(&params.omega_ring());
    let mut bad = 0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let x = random_element(&eta, &mut rng);
        let y = random_element(&eta, &mut rng);
        let lhs = frobenius_t(&eta.mul(&x, &y), params);
        let rhs = omega.mul(&frobenius_t(&x, params), &frobenius_t(&y, params));
        if lhs != rhs {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Trials where the monomial map fails to be multiplicative.
pub fn monomial_hom_failures(
    k: &[Vec<i64>],
    q: &[Vec<i64>],
    q_prime: &[Vec<i64>],
    ring: &Ring,
    trials: usize,
    seed: u64,
) -> Result<usize> {
    let hom = MonomialHom::new(k.to_vec(), q, q_prime)?;
    let src = TorusAlgebra::new(q.to_vec(), ring)?;
    let dst = TorusAlgebra::new(q_prime.to_vec(), ring)?;
    let mut bad = 0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let x = random_element(&src, &mut rng);
        let y = random_element(&src, &mut rng);
        if hom.apply(&src.mul(&x, &y)) != dst.mul(&hom.apply(&x), &hom.apply(&y)) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Checks `f_omega o Phi^T = Phi^T o f_eta` for the monomial map `f` of `K`,
/// and multiplicativity of `f` at both roots, on random elements.
pub fn check_eq_mono(
    k: &[Vec<i64>],
    q: &[Vec<i64>],
    q_prime: &[Vec<i64>],
    d: u32,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let rep = Report::start(
        "monomial maps commute with the torus Frobenius",
        "f_omega o Phi^T = Phi^T o f_eta for [k] -> [kK] with K Q' K^T = Q",
    )
    .param("d", d)
    .param("n", n)
    .param("K", k)
    .param("trials", trials);
    let params = RootParams::new(d, n);
    let hom = MonomialHom::new(k.to_vec(), q, q_prime)?;
    let src = TorusAlgebra::new(q.to_vec(), &params.eta_ring())?;
    let mut bad = 0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let x = random_element(&src, &mut rng);
        let lhs = hom.apply(&frobenius_t(&x, &params));
        let rhs = frobenius_t(&hom.apply(&x), &params);
        if lhs != rhs {
            bad += 1;
        }
    }
    bad += monomial_hom_failures(k, q, q_prime, &params.eta_ring(), trials, seed)?;
    bad += monomial_hom_failures(k, q, q_prime, &params.omega_ring(), trials, seed)?;
    Ok(rep.finish(Verdict::from_bool(bad == 0), bad))
}

#[derive(Serialize)]
struct TermRepr<'a> {
    k: &'a [i64],
    coeff: &'a Scalar,
}

impl Serialize for TorusElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            r: usize,
            terms: Vec<TermRepr<'a>>,
        }
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort();
        Repr {
            r: self.r,
            terms: keys.into_iter().map(|k| TermRepr { k, coeff: &self.terms[k] }).collect(),
        }
        .serialize(s)
    }
}

impl Serialize for TorusAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            r: usize,
            #[serde(rename = "Q")]
            q: &'a [Vec<i64>],
        }
        Repr { r: self.rank(), q: &self.q }.serialize(s)
    }
}
