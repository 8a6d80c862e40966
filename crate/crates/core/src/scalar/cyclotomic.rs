//! Exact arithmetic in `Z[zeta_d] = Z[x]/(Phi_d(x))`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentScalar;

/// The ring `Z[x]/(Phi_d)` together with precomputed powers of `x`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Coefficients of `Phi_d`, lowest degree first; monic of degree `phi`.
    modulus: Vec<BigInt>,
    /// `powers[e]` is the reduced representative of `x^e`, `0 <= e < d`.
    powers: Vec<Vec<BigInt>>,
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact quotient of `num` by a monic `den` (both lowest degree first).
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// `Phi_d` via `x^d - 1 = prod_{e | d} Phi_e`.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    assert!(d >= 1, "cyclotomic order must be positive");
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = -BigInt::one();
    p[d as usize] = BigInt::one();
    for e in divisors(d) {
        if e < d {
            p = exact_div_monic(&p, &cyclotomic_polynomial(e));
        }
    }
    p
}

pub fn euler_phi(d: u32) -> usize {
    (1..=d).filter(|k| k.gcd(&d) == 1).count()
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..phi {
                    cur[i] -= &top * &modulus[i];
                }
            }
        }
        Arc::new(Self { order, modulus, powers })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.degree();
        for k in (phi..p.len()).rev() {
            let c = std::mem::take(&mut p[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..phi {
                p[k - phi + i] -= &c * &self.modulus[i];
            }
        }
        p.truncate(phi);
        p.resize(phi, BigInt::zero());
        p
    }
}

/// An element of `Z[zeta_d]`, stored as its unique representative of degree `< phi(d)`.
#[derive(Clone)]
pub struct CyclotomicScalar {
    field: Arc<CyclotomicField>,
    coords: Vec<BigInt>,
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coords == other.coords
    }
}

impl Eq for CyclotomicScalar {}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.field.order, self)
    }
}

impl CyclotomicScalar {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            coords: vec![BigInt::zero(); field.degree()],
        }
    }

    pub fn from_int(field: &Arc<CyclotomicField>, c: BigInt) -> Self {
        let mut out = Self::zero(field);
        out.coords[0] = c;
        out
    }

    /// `zeta^e`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, e: i64) -> Self {
        let d = field.order as i64;
        Self {
            field: field.clone(),
            coords: field.powers[e.rem_euclid(d) as usize].clone(),
        }
    }

    /// Reduces an arbitrary integer polynomial in `zeta` (lowest degree first).
    pub fn from_poly(field: &Arc<CyclotomicField>, poly: Vec<BigInt>) -> Self {
        let mut p = poly;
        if p.len() < field.degree() {
            p.resize(field.degree(), BigInt::zero());
        }
        Self {
            field: field.clone(),
            coords: field.reduce(p),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "cyclotomic scalars of different orders"
        );
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a -= b;
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let phi = self.field.degree();
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self {
            field: self.field.clone(),
            coords: self.field.reduce(prod),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// `Some((negated, e))` when the element equals `+-zeta^e`.
    pub fn as_signed_root(&self) -> Option<(bool, i64)> {
        let nonzero = self.coords.iter().filter(|c| !c.is_zero()).count();
        if nonzero == 0 {
            return None;
        }
        for (e, p) in self.field.powers.iter().enumerate() {
            if *p == self.coords {
                return Some((false, e as i64));
            }
            if p.iter().zip(&self.coords).all(|(a, b)| *a == -b) {
                return Some((true, e as i64));
            }
        }
        None
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        let (neg, e) = self.as_signed_root()?;
        let inv = Self::zeta_pow(&self.field, -e);
        Some(if neg { inv.neg() } else { inv })
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{abs}*z^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The ring map `Z[qhat^{+-1}] -> Z[zeta_d]`, `qhat -> zeta_d^exp`.
pub fn cyclotomic_embed_in(
    field: &Arc<CyclotomicField>,
    x: &LaurentScalar,
    exp: i64,
) -> CyclotomicScalar {
    let d = field.order as i64;
    let phi = field.degree();
    let mut acc = vec![BigInt::zero(); phi];
    for (e, c) in x.terms() {
        let k = (e * exp).rem_euclid(d) as usize;
        for (slot, p) in acc.iter_mut().zip(&field.powers[k]) {
            if !p.is_zero() {
                *slot += c * p;
            }
        }
    }
    CyclotomicScalar {
        field: field.clone(),
        coords: acc,
    }
}

pub fn cyclotomic_embed(x: &LaurentScalar, d: u32, exp: i64) -> CyclotomicScalar {
    cyclotomic_embed_in(&CyclotomicField::new(d), x, exp)
}
