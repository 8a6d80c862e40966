use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in `x_1, ..., x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(exp, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Lex-leading term with `x_1 > x_2 > ... > x_n`.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self {
            nvars: self.nvars,
            terms: acc,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Substitutes `x_i -> x_i^m`.
    pub fn inflate(&self, m: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|a| a * m).collect(), c.clone()))
                .collect(),
        }
    }

    /// Checks invariance under the adjacent transpositions, which generate
    /// the symmetric group. The error names the first failing pair (1-based).
    pub fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.nvars.saturating_sub(1) {
            for (e, c) in &self.terms {
                let mut s = e.clone();
                s.swap(i, i + 1);
                if self.coeff(&s) != *c {
                    return Err(Error::NotSymmetric(i + 1, i + 2));
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }
}

/// `e_k(x_1, ..., x_n)`.
pub fn elementary(n: usize, k: usize) -> Result<MultiPoly> {
    if k > n {
        return Err(Error::InvalidArgument(format!("e_{k} undefined in {n} variables")));
    }
    let mut out = MultiPoly::zero(n);
    for set in crate::qmatrix::subsets(n, k) {
        let mut exp = vec![0; n];
        for i in set {
            exp[i - 1] = 1;
        }
        out.add_term(exp, BigInt::one());
    }
    Ok(out)
}

/// `e_k(x_1^m, ..., x_n^m)`.
pub fn adams_elementary(n: usize, k: usize, m: u32) -> Result<MultiPoly> {
    Ok(elementary(n, k)?.inflate(m))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_poly(f, "x", 1, self.terms.iter().rev())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_examples() {
        let e = elementary(2, 1).unwrap();
        assert_eq!(e, MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1)));
        assert_eq!(elementary(3, 2).unwrap().to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!(elementary(4, 0).unwrap(), MultiPoly::one(4));
        assert!(elementary(2, 3).is_err());
    }

    #[test]
    fn adams_examples() {
        assert_eq!(adams_elementary(2, 1, 2).unwrap().to_string(), "x1^2 + x2^2");
        assert_eq!(
            adams_elementary(3, 2, 2).unwrap().to_string(),
            "x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2"
        );
        assert_eq!(adams_elementary(3, 2, 1).unwrap(), elementary(3, 2).unwrap());
    }

    #[test]
    fn symmetry_check_names_transposition() {
        let p = MultiPoly::var(3, 0).add(&MultiPoly::var(3, 1));
        assert!(matches!(p.check_symmetric(), Err(Error::NotSymmetric(2, 3))));
        assert!(elementary(3, 2).unwrap().is_symmetric());
    }
}
