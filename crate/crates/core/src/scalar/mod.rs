//! Exact coefficients.
//!
//! Every algebra in this crate is defined over one of two coefficient rings,
//! described by [`Ring`]:
//!
//! * `Ring::Laurent`: the generic ring `Z[qhat^{+-1}]`;
//! * `Ring::Cyclotomic`: `Z[zeta_d]`, with `qhat` specialized to `zeta_d^e`.
//!
//! With `e = 1` the cyclotomic ring realizes `qhat -> omega_hat`; with
//! `e = N^2` it realizes `qhat -> eta_hat = omega_hat^{N^2}` inside the same
//! ring, so the Frobenius maps leave coefficients untouched.

mod cyclotomic;
mod laurent;
mod quantum;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use cyclotomic::{
    cyclotomic_embed, cyclotomic_embed_in, cyclotomic_polynomial, euler_phi, CyclotomicField,
    CyclotomicScalar,
};
pub use laurent::LaurentScalar;
pub use quantum::{
    constants_tac, gauss_binomial, q_power, quantum_factorial, quantum_integer, StructureConstants,
};
pub use roots::RootParams;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Laurent(LaurentScalar),
    Cyclotomic(CyclotomicScalar),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Laurent(x) => x.is_zero(),
            Scalar::Cyclotomic(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Laurent(x) => x.is_one(),
            Scalar::Cyclotomic(x) => x.is_one(),
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => *a += b,
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => a.add_assign_ref(b),
            _ => panic!("mixing Laurent and cyclotomic scalars"),
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => *a -= b,
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => a.sub_assign_ref(b),
            _ => panic!("mixing Laurent and cyclotomic scalars"),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Scalar {
        match self {
            Scalar::Laurent(x) => Scalar::Laurent(x.scale(c)),
            Scalar::Cyclotomic(x) => Scalar::Cyclotomic(x.scale(c)),
        }
    }

    /// Inverse of `+-qhat^e` (Laurent) or `+-zeta^e` (cyclotomic).
    pub fn unit_inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Laurent(x) => x.unit_inverse().map(Scalar::Laurent),
            Scalar::Cyclotomic(x) => x.unit_inverse().map(Scalar::Cyclotomic),
        }
    }

    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        match self {
            Scalar::Laurent(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_cyclotomic(&self) -> Option<&CyclotomicScalar> {
        match self {
            Scalar::Cyclotomic(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Laurent(x) => x.fmt(f),
            Scalar::Cyclotomic(x) => x.fmt(f),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Scalar::Laurent(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)),
            _ => panic!("mixing Laurent and cyclotomic scalars"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Laurent(a) => Scalar::Laurent(-a),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.neg()),
        }
    }
}

/// Coefficient ring of an algebra.
#[derive(Clone, Debug)]
pub enum Ring {
    Laurent,
    Cyclotomic {
        field: Arc<CyclotomicField>,
        /// `qhat` is sent to `zeta^qhat_exp`.
        qhat_exp: i64,
    },
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Ring::Laurent, Ring::Laurent) => true,
            (
                Ring::Cyclotomic { field: f1, qhat_exp: e1 },
                Ring::Cyclotomic { field: f2, qhat_exp: e2 },
            ) => {
                let d = f1.order() as i64;
                f1.order() == f2.order() && e1.rem_euclid(d) == e2.rem_euclid(d)
            }
            _ => false,
        }
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Laurent => f.write_str("Z[qhat^+-1]"),
            Ring::Cyclotomic { field, qhat_exp } => {
                write!(f, "Z[zeta_{}] (qhat -> zeta^{})", field.order(), qhat_exp)
            }
        }
    }
}

impl Ring {
    pub fn cyclotomic(order: u32, qhat_exp: i64) -> Ring {
        Ring::Cyclotomic {
            field: CyclotomicField::new(order),
            qhat_exp,
        }
    }

    /// Same field, different image of `qhat`.
    pub fn with_qhat_exp(&self, qhat_exp: i64) -> Ring {
        match self {
            Ring::Laurent => Ring::Laurent,
            Ring::Cyclotomic { field, .. } => Ring::Cyclotomic {
                field: field.clone(),
                qhat_exp,
            },
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Ring::Laurent => Scalar::Laurent(LaurentScalar::zero()),
            Ring::Cyclotomic { field, .. } => Scalar::Cyclotomic(CyclotomicScalar::zero(field)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, c: impl Into<BigInt>) -> Scalar {
        match self {
            Ring::Laurent => Scalar::Laurent(LaurentScalar::from_int(c)),
            Ring::Cyclotomic { field, .. } => {
                Scalar::Cyclotomic(CyclotomicScalar::from_int(field, c.into()))
            }
        }
    }

    pub fn qhat_pow(&self, e: i64) -> Scalar {
        match self {
            Ring::Laurent => Scalar::Laurent(LaurentScalar::var_pow(e)),
            Ring::Cyclotomic { field, qhat_exp } => {
                Scalar::Cyclotomic(CyclotomicScalar::zeta_pow(field, e * qhat_exp))
            }
        }
    }

    /// Image of a generic Laurent scalar in this ring.
    pub fn embed(&self, x: &LaurentScalar) -> Scalar {
        match self {
            Ring::Laurent => Scalar::Laurent(x.clone()),
            Ring::Cyclotomic { field, qhat_exp } => {
                Scalar::Cyclotomic(cyclotomic_embed_in(field, x, *qhat_exp))
            }
        }
    }

    /// Maps a scalar of `self` into `target`; the map must be a ring
    /// homomorphism compatible with both specializations.
    pub fn transport(&self, x: &Scalar, target: &Ring) -> Scalar {
        match (self, x) {
            (Ring::Laurent, Scalar::Laurent(l)) => target.embed(l),
            (Ring::Cyclotomic { field, .. }, Scalar::Cyclotomic(c)) => match target {
                Ring::Cyclotomic { field: f2, .. } if f2.order() == field.order() => {
                    Scalar::Cyclotomic(c.clone())
                }
                _ => panic!("cannot transport a cyclotomic scalar into {target}"),
            },
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Ring::Laurent, Scalar::Laurent(_)) => true,
            (Ring::Cyclotomic { field, .. }, Scalar::Cyclotomic(c)) => c.order() == field.order(),
            _ => false,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ScalarRepr {
    Laurent(std::collections::BTreeMap<String, String>),
    Cyclotomic { order: u32, coords: Vec<String> },
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Scalar::Laurent(x) => {
                // sort numerically, not lexically, for stable output
                let mut terms: Vec<(i64, &BigInt)> = x.terms().collect();
                terms.sort_by_key(|(e, _)| *e);
                ScalarRepr::Laurent(
                    terms.into_iter().map(|(e, c)| (e.to_string(), c.to_string())).collect(),
                )
            }
            Scalar::Cyclotomic(x) => ScalarRepr::Cyclotomic {
                order: x.order(),
                coords: x.coords().iter().map(|c| c.to_string()).collect(),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ScalarRepr::deserialize(d)? {
            ScalarRepr::Laurent(map) => {
                let mut out = LaurentScalar::zero();
                for (e, c) in map {
                    let e: i64 = e.parse().map_err(D::Error::custom)?;
                    let c: BigInt = c.parse().map_err(D::Error::custom)?;
                    out.add_term(e, c);
                }
                Ok(Scalar::Laurent(out))
            }
            ScalarRepr::Cyclotomic { order, coords } => {
                if order == 0 {
                    return Err(D::Error::custom("cyclotomic order must be positive"));
                }
                let field = CyclotomicField::new(order);
                let coords = coords
                    .iter()
                    .map(|c| c.parse::<BigInt>().map_err(D::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Scalar::Cyclotomic(CyclotomicScalar::from_poly(&field, coords)))
            }
        }
    }
}
