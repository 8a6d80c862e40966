use std::collections::HashMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::expmat::{ExpMatrix, GrLex, MAX_RANK};
use crate::scalar::{Ring, Scalar};

/// An element of `M_q(n)` in PBW normal form.
#[derive(Clone, Debug)]
pub struct QElement {
    n: usize,
    ring: Ring,
    terms: HashMap<ExpMatrix, Scalar>,
}

impl PartialEq for QElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ring == other.ring && self.terms == other.terms
    }
}

impl QElement {
    pub fn zero(n: usize, ring: &Ring) -> Self {
        Self {
            n,
            ring: ring.clone(),
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize, ring: &Ring) -> Self {
        Self::monomial(ExpMatrix::zero(n), ring.one(), ring)
    }

    pub fn constant(n: usize, c: Scalar, ring: &Ring) -> Self {
        Self::monomial(ExpMatrix::zero(n), c, ring)
    }

    pub fn monomial(m: ExpMatrix, c: Scalar, ring: &Ring) -> Self {
        let mut out = Self::zero(m.rank(), ring);
        out.add_term(m, &c);
        out
    }

    pub(crate) fn from_map(n: usize, ring: &Ring, terms: HashMap<ExpMatrix, Scalar>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self {
            n,
            ring: ring.clone(),
            terms,
        }
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

    pub fn coeff(&self, m: &ExpMatrix) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpMatrix, &Scalar)> {
        self.terms.iter()
    }

    /// Terms in decreasing graded position-lex order.
    pub fn sorted_terms(&self) -> Vec<(ExpMatrix, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| GrLex(b.0).cmp(&GrLex(a.0)));
        v
    }

    pub fn add_term(&mut self, m: ExpMatrix, c: &Scalar) {
        add_into(&mut self.terms, m, c);
    }

    pub fn add_assign(&mut self, other: &QElement) {
        self.check(other);
        for (m, c) in &other.terms {
            add_into(&mut self.terms, *m, c);
        }
    }

    pub fn sub_assign(&mut self, other: &QElement) {
        self.check(other);
        for (m, c) in &other.terms {
            add_into(&mut self.terms, *m, &-c);
        }
    }

    pub fn add(&self, other: &QElement) -> QElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &QElement) -> QElement {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> QElement {
        QElement {
            n: self.n,
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> QElement {
        let mut out = QElement::zero(self.n, &self.ring);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(*m, &(v * c));
        }
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Every monomial has a zero diagonal exponent.
    pub fn is_reduced(&self) -> bool {
        self.terms.keys().all(|m| m.is_minimal())
    }

    /// Same element viewed over another ring; coefficients pass through
    /// [`Ring::transport`].
    pub fn transport(&self, target: &Ring) -> QElement {
        let mut out = QElement::zero(self.n, target);
        for (m, c) in &self.terms {
            out.add_term(*m, &self.ring.transport(c, target));
        }
        out
    }

    fn check(&self, other: &QElement) {
        assert_eq!(self.n, other.n, "rank mismatch");
        assert!(self.ring == other.ring, "ring mismatch: {} vs {}", self.ring, other.ring);
    }
}

pub(crate) fn add_into(map: &mut HashMap<ExpMatrix, Scalar>, m: ExpMatrix, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(v) => {
            v.add_assign_ref(c);
            if v.is_zero() {
                map.remove(&m);
            }
        }
        None => {
            map.insert(m, c.clone());
        }
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.total_degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<Vec<u32>>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct QElementRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for QElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QElementRepr {
            n: self.n,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermRepr {
                    exp: m.rows(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QElement {
    /// The ring is recovered from the coefficients; an empty element is read
    /// over the generic Laurent ring.
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = QElementRepr::deserialize(d)?;
        if !(1..=MAX_RANK).contains(&repr.n) {
            return Err(D::Error::custom(format!("rank {} unsupported", repr.n)));
        }
        let ring = match repr.terms.first().map(|t| &t.coeff) {
            Some(Scalar::Cyclotomic(c)) => Ring::Cyclotomic {
                field: c.field().clone(),
                qhat_exp: 1,
            },
            _ => Ring::Laurent,
        };
        let mut out = QElement::zero(repr.n, &ring);
        for t in repr.terms {
            let m = ExpMatrix::from_rows(&t.exp)
                .filter(|m| m.rank() == repr.n)
                .ok_or_else(|| D::Error::custom("bad exponent matrix"))?;
            if !ring.contains(&t.coeff) {
                return Err(D::Error::custom("coefficients from different rings"));
            }
            out.add_term(m, &t.coeff);
        }
        Ok(out)
    }
}
