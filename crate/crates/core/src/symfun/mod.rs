//! Symmetric polynomials, the elementary basis and Adams operations.

mod adams;
mod epoly;
mod multipoly;

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};

pub use adams::{
    adams_on_epoly, pbar, pbar_recursive_n3, span_gap_check, span_gap_report, span_membership,
    to_elementary, SpanGap, SpanVerdict,
};
pub use epoly::{EPoly, EPolyRing, PolyAlgebra};
pub use multipoly::{adams_elementary, elementary, MultiPoly};

/// Writes `c*v1^a*v2^b + ...` with the terms in the given order.
pub(crate) fn write_poly<'a>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    offset: usize,
    terms: impl Iterator<Item = (&'a Vec<u32>, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("{var}{}", i + offset)
                } else {
                    format!("{var}{}^{a}", i + offset)
                }
            })
            .collect();
        let neg = c.sign() == Sign::Minus;
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono.join("*"))?;
        } else {
            write!(f, "{abs}*{}", mono.join("*"))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
