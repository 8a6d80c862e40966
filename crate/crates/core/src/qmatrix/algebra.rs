use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::element::{add_into, QElement};
use super::expmat::{ExpMatrix, GrLex};
use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

type Product = Arc<Vec<(ExpMatrix, Scalar)>>;

/// Coefficient of a rewrite term `u_a u_b` appearing in `u_h u_g` for `h > g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SwapCoeff {
    One,
    QInv,
    /// `-(q - q^{-1})`
    MinusQDiff,
}

/// Normal-ordered expansion of `u_h u_g` for positions `h > g` in `M_q(n)`.
pub(crate) fn swap_rule(n: usize, h: usize, g: usize) -> Vec<(SwapCoeff, usize, usize)> {
    debug_assert!(h > g);
    let (k, l) = (h / n, h % n);
    let (i, j) = (g / n, g % n);
    if i == k || j == l {
        vec![(SwapCoeff::QInv, g, h)]
    } else if l < j {
        vec![(SwapCoeff::One, g, h)]
    } else {
        vec![
            (SwapCoeff::One, g, h),
            (SwapCoeff::MinusQDiff, i * n + l, k * n + j),
        ]
    }
}

/// The quantum matrix algebra `M_q(n)` over a coefficient ring, with a
/// memoized multiplication table for `(monomial) * (generator)`.
pub struct QAlgebra {
    n: usize,
    ring: Ring,
    q: Scalar,
    q_inv: Scalar,
    minus_q_diff: Scalar,
    cache: Mutex<HashMap<(ExpMatrix, u8), Product>>,
    det: Mutex<Option<QElement>>,
}

impl QAlgebra {
    pub fn new(n: usize, ring: &Ring) -> Self {
        assert!((1..=super::MAX_RANK).contains(&n), "rank {n} unsupported");
        let e = 2 * (n * n) as i64;
        let q = ring.qhat_pow(e);
        let q_inv = ring.qhat_pow(-e);
        let minus_q_diff = &q_inv - &q;
        Self {
            n,
            ring: ring.clone(),
            q,
            q_inv,
            minus_q_diff,
            cache: Mutex::new(HashMap::new()),
            det: Mutex::new(None),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Image of `q = qhat^{2n^2}`.
    pub fn q(&self) -> &Scalar {
        &self.q
    }

    /// `(-q)^e` for any integer `e`.
    pub fn minus_q_pow(&self, e: i64) -> Scalar {
        let v = self.ring.qhat_pow(2 * (self.n * self.n) as i64 * e);
        if e.rem_euclid(2) == 1 {
            -&v
        } else {
            v
        }
    }

    pub fn zero(&self) -> QElement {
        QElement::zero(self.n, &self.ring)
    }

    pub fn one(&self) -> QElement {
        QElement::one(self.n, &self.ring)
    }

    pub fn constant(&self, c: Scalar) -> QElement {
        QElement::constant(self.n, c, &self.ring)
    }

    pub fn monomial(&self, m: ExpMatrix) -> QElement {
        QElement::monomial(m, self.ring.one(), &self.ring)
    }

    /// Generator `u_ij`, 1-based.
    pub fn gen(&self, i: usize, j: usize) -> QElement {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index out of range");
        self.monomial(ExpMatrix::generator(self.n, i - 1, j - 1))
    }

    fn coeff(&self, c: SwapCoeff) -> &Scalar {
        match c {
            SwapCoeff::One => unreachable!(),
            SwapCoeff::QInv => &self.q_inv,
            SwapCoeff::MinusQDiff => &self.minus_q_diff,
        }
    }

    /// Normal form of `u^m * u_g`.
    fn mul_mono_gen(&self, m: &ExpMatrix, g: usize) -> Product {
        if m.last_pos().map_or(true, |p| p <= g) {
            return Arc::new(vec![(m.inc(g), self.ring.one())]);
        }
        let key = (*m, g as u8);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let h = m.last_pos().unwrap();
        let m1 = m.dec(h);
        let mut acc: HashMap<ExpMatrix, Scalar> = HashMap::new();
        for (kind, a, b) in swap_rule(self.n, h, g) {
            let left = self.mul_mono_gen(&m1, a);
            for (ma, ca) in left.iter() {
                let c = if kind == SwapCoeff::One {
                    ca.clone()
                } else {
                    ca * self.coeff(kind)
                };
                for (mb, cb) in self.mul_mono_gen(ma, b).iter() {
                    add_into(&mut acc, *mb, &(&c * cb));
                }
            }
        }
        let out: Product = Arc::new(acc.into_iter().collect());
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    fn mul_map_gen(&self, x: &HashMap<ExpMatrix, Scalar>, g: usize) -> HashMap<ExpMatrix, Scalar> {
        let mut out = HashMap::with_capacity(x.len());
        for (m, c) in x {
            for (m2, c2) in self.mul_mono_gen(m, g).iter() {
                add_into(&mut out, *m2, &(c * c2));
            }
        }
        out
    }

    /// `c` times the product of a word of 1-based generator indices, in PBW form.
    pub fn straighten(&self, word: &[(usize, usize)], c: &Scalar) -> Result<QElement> {
        let n = self.n;
        let mut cur = HashMap::new();
        add_into(&mut cur, ExpMatrix::zero(n), c);
        for &(i, j) in word {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Error::InvalidArgument(format!("generator u_{i}{j} outside rank {n}")));
            }
            cur = self.mul_map_gen(&cur, (i - 1) * n + (j - 1));
        }
        Ok(QElement::from_map(n, &self.ring, cur))
    }

    /// Product of two elements, or an error if the ranks or rings differ.
    pub fn try_mul(&self, x: &QElement, y: &QElement) -> Result<QElement> {
        for z in [x, y] {
            if z.rank() != self.n {
                return Err(Error::RankMismatch(z.rank(), self.n));
            }
            if z.ring() != &self.ring {
                return Err(Error::RingMismatch(z.ring().to_string(), self.ring.to_string()));
            }
        }
        let xmap: HashMap<ExpMatrix, Scalar> = x.terms().map(|(m, c)| (*m, c.clone())).collect();
        let mut out = HashMap::new();
        for (my, cy) in y.terms() {
            let mut cur = xmap.clone();
            for g in my.word() {
                cur = self.mul_map_gen(&cur, g);
            }
            for (m, c) in cur {
                add_into(&mut out, m, &(&c * cy));
            }
        }
        Ok(QElement::from_map(self.n, &self.ring, out))
    }

    /// Product of two elements; panics on rank or ring mismatch.
    pub fn mul(&self, x: &QElement, y: &QElement) -> QElement {
        self.try_mul(x, y).expect("operands must belong to this algebra")
    }

    pub fn pow(&self, x: &QElement, k: u32) -> QElement {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, x);
        }
        out
    }

    /// Product of a list of factors, left to right.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a QElement>) -> QElement {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    fn check_indices(&self, rows: &[usize], cols: &[usize]) -> Result<()> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidArgument(format!(
                "minor of size {}x{} is not square",
                rows.len(),
                cols.len()
            )));
        }
        for set in [rows, cols] {
            if set.iter().any(|&i| i == 0 || i > self.n) || set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "index set {set:?} must be strictly increasing within 1..={}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Quantum minor `sum_sigma (-q)^{l(sigma)} u_{I1 J_sigma(1)} ... u_{Ik J_sigma(k)}`
    /// for 1-based, strictly increasing index sets.
    pub fn quantum_minor(&self, rows: &[usize], cols: &[usize]) -> Result<QElement> {
        self.check_indices(rows, cols)?;
        let n = self.n;
        let mut out = self.zero();
        for (perm, inv) in permutations(rows.len()) {
            // Rows increase along the word, so the monomial is already ordered.
            let mut m = ExpMatrix::zero(n);
            for (a, &s) in perm.iter().enumerate() {
                m = m.inc((rows[a] - 1) * n + cols[s] - 1);
            }
            out.add_term(m, &self.minus_q_pow(inv as i64));
        }
        Ok(out)
    }

    /// The same minor by the column expansion
    /// `sum_sigma (-q)^{l(sigma)} u_{I_sigma(1) J1} ... u_{I_sigma(k) Jk}`.
    pub fn quantum_minor_by_columns(&self, rows: &[usize], cols: &[usize]) -> Result<QElement> {
        self.check_indices(rows, cols)?;
        let mut out = self.zero();
        for (perm, inv) in permutations(rows.len()) {
            let word: Vec<(usize, usize)> =
                perm.iter().enumerate().map(|(b, &s)| (rows[s], cols[b])).collect();
            out.add_assign(&self.straighten(&word, &self.minus_q_pow(inv as i64))?);
        }
        Ok(out)
    }

    pub fn det(&self) -> QElement {
        let mut slot = self.det.lock().unwrap();
        if let Some(d) = slot.as_ref() {
            return d.clone();
        }
        let all: Vec<usize> = (1..=self.n).collect();
        let d = self.quantum_minor(&all, &all).unwrap();
        *slot = Some(d.clone());
        d
    }

    /// Sum of the principal `k x k` quantum minors, `1 <= k <= n - 1`.
    pub fn dk(&self, k: usize) -> Result<QElement> {
        if k == 0 || k >= self.n {
            return Err(Error::InvalidArgument(format!(
                "k = {k} outside 1..={}",
                self.n - 1
            )));
        }
        let mut out = self.zero();
        for set in subsets(self.n, k) {
            out.add_assign(&self.quantum_minor(&set, &set)?);
        }
        Ok(out)
    }

    /// All of `D_1, ..., D_{n-1}`.
    pub fn dks(&self) -> Vec<QElement> {
        (1..self.n).map(|k| self.dk(k).unwrap()).collect()
    }

    /// Canonical representative modulo the ideal `(det_q - 1)`, supported on
    /// minimal monomials.
    pub fn reduce(&self, x: &QElement) -> QElement {
        assert_eq!(x.rank(), self.n, "rank mismatch");
        assert!(x.ring() == &self.ring, "ring mismatch");
        let det = self.det();
        let id = ExpMatrix::identity(self.n);
        let mut todo: BTreeMap<GrLex, Scalar> = BTreeMap::new();
        for (m, c) in x.terms() {
            todo.insert(GrLex(*m), c.clone());
        }
        let mut done = HashMap::new();
        while let Some((GrLex(m), c)) = todo.pop_last() {
            if m.is_minimal() {
                done.insert(m, c);
                continue;
            }
            let m1 = m.checked_sub(&id).unwrap();
            let prod = self.mul(&self.monomial(m1), &det);
            let lead = prod.coeff(&m);
            let inv = lead.unit_inverse().unwrap_or_else(|| {
                panic!("leading coefficient {lead} of {m1} * det_q is not a unit")
            });
            let factor = &c * &inv;
            for (m2, c2) in prod.terms() {
                if *m2 == m {
                    continue;
                }
                debug_assert!(GrLex(*m2) < GrLex(m), "{m2} not below {m}");
                sub_into(&mut todo, *m2, &(&factor * c2));
            }
            // the subtracted multiple of (det_q - 1) carries +factor * u^{m1}
            sub_into(&mut todo, m1, &-&factor);
        }
        QElement::from_map(self.n, &self.ring, done)
    }
}

fn sub_into(map: &mut BTreeMap<GrLex, Scalar>, m: ExpMatrix, c: &Scalar) {
    let key = GrLex(m);
    match map.get_mut(&key) {
        Some(v) => {
            v.sub_assign_ref(c);
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            if !c.is_zero() {
                map.insert(key, -c);
            }
        }
    }
}

/// Permutations of `0..k` with their inversion counts.
pub(crate) fn permutations(k: usize) -> Vec<(Vec<usize>, usize)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, usize)>) {
        let k = used.len();
        if prefix.len() == k {
            let inv = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            out.push((prefix.clone(), inv));
            return;
        }
        for s in 0..k {
            if !used[s] {
                used[s] = true;
                prefix.push(s);
                rec(prefix, used, out);
                prefix.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Strictly increasing `k`-subsets of `1..=n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentScalar;

    fn lq(terms: &[(i64, i64)]) -> Scalar {
        Scalar::Laurent(LaurentScalar::from_terms(terms.iter().copied()))
    }

    fn mono(rows: &[&[u32]]) -> ExpMatrix {
        ExpMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn straighten_examples() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        let one = Ring::Laurent.one();
        // q = qhat^8 at n = 2
        let x = alg.straighten(&[(2, 2), (1, 1)], &one).unwrap();
        let mut expected = alg.monomial(mono(&[&[1, 0], &[0, 1]]));
        expected.add_term(mono(&[&[0, 1], &[1, 0]]), &lq(&[(8, -1), (-8, 1)]));
        assert_eq!(x, expected);

        let x = alg.straighten(&[(1, 2), (1, 1)], &one).unwrap();
        assert_eq!(x, QElement::monomial(mono(&[&[1, 1], &[0, 0]]), lq(&[(-8, 1)]), &Ring::Laurent));

        assert_eq!(alg.straighten(&[], &one).unwrap(), alg.one());
        assert!(alg.straighten(&[(3, 1)], &one).is_err());
    }

    #[test]
    fn square_of_trace() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        let t = alg.gen(1, 1).add(&alg.gen(2, 2));
        let sq = alg.mul(&t, &t);
        let mut expected = alg.zero();
        expected.add_term(mono(&[&[2, 0], &[0, 0]]), &lq(&[(0, 1)]));
        expected.add_term(mono(&[&[1, 0], &[0, 1]]), &lq(&[(0, 2)]));
        expected.add_term(mono(&[&[0, 1], &[1, 0]]), &lq(&[(8, -1), (-8, 1)]));
        expected.add_term(mono(&[&[0, 0], &[0, 2]]), &lq(&[(0, 1)]));
        assert_eq!(sq, expected);
    }

    #[test]
    fn determinant_and_minors() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        let det = alg.det();
        let mut expected = alg.monomial(ExpMatrix::identity(2));
        expected.add_term(mono(&[&[0, 1], &[1, 0]]), &lq(&[(8, -1)]));
        assert_eq!(det, expected);
        assert_eq!(alg.quantum_minor(&[1], &[2]).unwrap(), alg.gen(1, 2));
        assert!(alg.quantum_minor(&[1], &[1, 2]).is_err());
        for n in 2..=3 {
            let alg = QAlgebra::new(n, &Ring::Laurent);
            for k in 1..=n {
                for rows in subsets(n, k) {
                    for cols in subsets(n, k) {
                        assert_eq!(
                            alg.quantum_minor(&rows, &cols).unwrap(),
                            alg.quantum_minor_by_columns(&rows, &cols).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dk_examples() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        assert_eq!(alg.dk(1).unwrap(), alg.gen(1, 1).add(&alg.gen(2, 2)));
        assert!(alg.dk(2).is_err());
        let alg = QAlgebra::new(3, &Ring::Laurent);
        let d2 = alg.dk(2).unwrap();
        let mut sum = alg.zero();
        for s in [[1, 2], [1, 3], [2, 3]] {
            sum.add_assign(&alg.quantum_minor(&s, &s).unwrap());
        }
        assert_eq!(d2, sum);
        let d1 = alg.dk(1).unwrap();
        let comm = alg.mul(&d1, &d2).sub(&alg.mul(&d2, &d1));
        assert!(alg.reduce(&comm).is_zero());
    }

    #[test]
    fn reduce_examples() {
        let alg = QAlgebra::new(2, &Ring::Laurent);
        assert_eq!(alg.reduce(&alg.det()), alg.one());
        let r = alg.reduce(&alg.monomial(ExpMatrix::identity(2)));
        let mut expected = alg.one();
        expected.add_term(mono(&[&[0, 1], &[1, 0]]), &lq(&[(8, 1)]));
        assert_eq!(r, expected);
        let minimal = alg.gen(1, 2).add(&alg.mul(&alg.gen(2, 1), &alg.gen(1, 1)));
        assert_eq!(alg.reduce(&minimal), minimal);
        let big = alg.pow(&alg.gen(1, 1).add(&alg.gen(2, 2)), 4);
        let r = alg.reduce(&big);
        assert!(r.is_reduced());
        assert_eq!(alg.reduce(&r), r);
    }

    #[test]
    fn reduce_works_over_cyclotomic_rings() {
        let ring = Ring::cyclotomic(48, 1);
        let alg = QAlgebra::new(2, &ring);
        let x = alg.pow(&alg.dk(1).unwrap(), 3);
        let r = alg.reduce(&x);
        assert!(r.is_reduced());
        let y = alg.mul(&x, &alg.det().sub(&alg.one()));
        assert!(alg.reduce(&y).is_zero());
    }
}
