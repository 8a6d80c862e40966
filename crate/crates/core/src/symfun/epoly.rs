use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial in `y_1, ..., y_{n-1}`, where `y_k` stands for the
/// elementary symmetric polynomial `e_k` at rank `n` (with `e_n = 1`).
///
/// Also used for characters of the fundamental representations and for
/// polynomials in the annulus generators, which share this ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Target of [`EPoly::evaluate`]: any ring-like context where integer
/// polynomials can be evaluated.
pub trait PolyAlgebra {
    type Elem: Clone;
    fn one(&self) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &BigInt) -> Self::Elem;
}

/// [`EPoly`] arithmetic at a fixed rank, for composing polynomials.
pub struct EPolyRing(pub usize);

impl PolyAlgebra for EPolyRing {
    type Elem = EPoly;
    fn one(&self) -> EPoly {
        EPoly::constant(self.0, BigInt::one())
    }
    fn zero(&self) -> EPoly {
        EPoly::zero(self.0)
    }
    fn add(&self, a: &EPoly, b: &EPoly) -> EPoly {
        a.add(b)
    }
    fn mul(&self, a: &EPoly, b: &EPoly) -> EPoly {
        a.mul(b)
    }
    fn scale(&self, a: &EPoly, c: &BigInt) -> EPoly {
        a.scale(c)
    }
}

impl EPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        Self::monomial(n, vec![0; n - 1], c)
    }

    pub fn monomial(n: usize, exp: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(n);
        p.add_term(exp, c);
        p
    }

    /// `y_k`, 1-based.
    pub fn var(n: usize, k: usize) -> Self {
        assert!((1..n).contains(&k), "y_{k} undefined at rank {n}");
        let mut exp = vec![0; n - 1];
        exp[k - 1] = 1;
        Self::monomial(n, exp, BigInt::one())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n - 1
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

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.n - 1, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch");
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
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self {
            n: self.n,
            terms: acc,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.n, BigInt::one()), |acc, _| acc.mul(self))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Top total-degree homogeneous part, with its degree.
    pub fn leading_total_degree(&self) -> Result<(u32, EPoly)> {
        let deg = self
            .total_degree()
            .ok_or_else(|| Error::InvalidArgument("zero polynomial has no degree".into()))?;
        let mut form = EPoly::zero(self.n);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == deg {
                form.add_term(e.clone(), c.clone());
            }
        }
        Ok((deg, form))
    }

    /// Evaluates at `y_k = values[k - 1]`; each monomial is multiplied out as
    /// `y_1^{a_1} y_2^{a_2} ...` in increasing variable order.
    pub fn evaluate<A: PolyAlgebra>(&self, alg: &A, values: &[A::Elem]) -> A::Elem {
        assert_eq!(values.len(), self.n - 1, "need one value per variable");
        let mut powers: Vec<Vec<A::Elem>> = values.iter().map(|_| vec![alg.one()]).collect();
        let mut out = alg.zero();
        for (e, c) in &self.terms {
            let mut term: Option<A::Elem> = None;
            for (k, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[k].len() <= a as usize {
                    let next = alg.mul(powers[k].last().unwrap(), &values[k]);
                    powers[k].push(next);
                }
                let p = &powers[k][a as usize];
                term = Some(match term {
                    None => p.clone(),
                    Some(t) => alg.mul(&t, p),
                });
            }
            let term = term.unwrap_or_else(|| alg.one());
            out = alg.add(&out, &alg.scale(&term, c));
        }
        out
    }

    /// Substitutes `y_k -> subs[k - 1]`.
    pub fn compose(&self, subs: &[EPoly]) -> EPoly {
        let rank = subs.first().map_or(self.n, |s| s.n);
        self.evaluate(&EPolyRing(rank), subs)
    }

    /// Terms ordered by decreasing total degree, then decreasing lex.
    pub(crate) fn display_order(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    /// Renders with a custom variable letter, e.g. `a1`.
    pub fn fmt_with(&self, var: &str) -> String {
        struct W<'a>(&'a EPoly, &'a str);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                super::write_poly(f, self.1, 1, self.0.display_order().into_iter())
            }
        }
        W(self, var).to_string()
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("y"))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct EPolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for EPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EPolyRepr {
            n: self.n,
            terms: self
                .display_order()
                .into_iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = EPolyRepr::deserialize(d)?;
        if repr.n == 0 {
            return Err(D::Error::custom("rank must be positive"));
        }
        let mut out = EPoly::zero(repr.n);
        for t in repr.terms {
            if t.exp.len() != repr.n - 1 {
                return Err(D::Error::custom("exponent length must be n - 1"));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(t.exp, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_json_roundtrip() {
        let y1 = EPoly::var(3, 1);
        let y2 = EPoly::var(3, 2);
        let p = y1.pow(2).sub(&y2.scale(&2.into()));
        assert_eq!(p.to_string(), "y1^2 - 2*y2");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"terms":[{"exp":[2,0],"coeff":"1"},{"exp":[0,1],"coeff":"-2"}]}"#
        );
        let back: EPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(EPoly::zero(2).to_string(), "0");
        assert_eq!(EPoly::constant(2, (-3).into()).to_string(), "-3");
    }

    #[test]
    fn leading_form() {
        let p = EPoly::var(3, 1).pow(2).sub(&EPoly::var(3, 2).scale(&2.into()));
        let (d, form) = p.leading_total_degree().unwrap();
        assert_eq!(d, 2);
        assert_eq!(form, EPoly::var(3, 1).pow(2));
        assert_eq!(EPoly::constant(3, 5.into()).leading_total_degree().unwrap().0, 0);
        assert!(EPoly::zero(3).leading_total_degree().is_err());
    }

    #[test]
    fn compose_substitutes() {
        let y = EPoly::var(2, 1);
        let p = y.pow(2).sub(&EPoly::constant(2, 2.into()));
        let q = p.compose(&[p.clone()]);
        // (y^2 - 2)^2 - 2
        let expected = p.mul(&p).sub(&EPoly::constant(2, 2.into()));
        assert_eq!(q, expected);
    }
}
