//! Quantum integers, factorials, binomials and structure constants.
//!
//! [`quantum_integer`], [`quantum_factorial`] and [`gauss_binomial`] return
//! Laurent polynomials in `q`; apply `inflate(2 * n * n)` to express them in
//! `qhat`. [`q_power`] and [`constants_tac`] already live in `qhat`.

use num_bigint::BigInt;

use super::LaurentScalar;
use crate::error::{Error, Result};

/// `q^{num/den}` as an integral power of `qhat = q^{1/(2n^2)}`.
pub fn q_power(num: i64, den: i64, n: usize) -> Result<LaurentScalar> {
    if den <= 0 {
        return Err(Error::InvalidArgument(format!("denominator {den} must be positive")));
    }
    let scaled = 2 * (n * n) as i64 * num;
    if scaled % den != 0 {
        return Err(Error::NonIntegralExponent { num, den, n });
    }
    Ok(LaurentScalar::var_pow(scaled / den))
}

/// `[m]_q = q^{-m+1} + q^{-m+3} + ... + q^{m-1}`.
pub fn quantum_integer(m: u32) -> LaurentScalar {
    let m = m as i64;
    LaurentScalar::from_terms((0..m).map(|j| (-m + 1 + 2 * j, 1)))
}

pub fn quantum_factorial(m: u32) -> LaurentScalar {
    (1..=m).fold(LaurentScalar::one(), |acc, i| &acc * &quantum_integer(i))
}

/// Balanced Gaussian binomial `[m k]_q`, via
/// `[m k] = q^{-(m-k)} [m-1 k-1] + q^{k} [m-1 k]`.
pub fn gauss_binomial(m: u32, k: u32) -> Result<LaurentScalar> {
    if k > m {
        return Err(Error::InvalidArgument(format!("binomial index {k} exceeds {m}")));
    }
    let mut row = vec![LaurentScalar::one()];
    for r in 1..=m {
        let mut next = Vec::with_capacity(r as usize + 1);
        for j in 0..=r {
            let mut v = LaurentScalar::zero();
            if j >= 1 {
                v += &row[j as usize - 1].shift(-((r - j) as i64));
            }
            if j < r {
                v += &row[j as usize].shift(j as i64);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// The skein constants `t`, `a`, `c_1..c_n`, exact in `qhat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub t: LaurentScalar,
    pub a: LaurentScalar,
    /// `c[i - 1]` is `c_i`.
    pub c: Vec<LaurentScalar>,
}

fn signed(neg: bool, exp: i64) -> LaurentScalar {
    LaurentScalar::monomial(BigInt::from(if neg { -1 } else { 1 }), exp)
}

pub fn constants_tac(n: usize) -> Result<StructureConstants> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("rank {n} must be at least 2")));
    }
    let n_i = n as i64;
    // t = (-1)^{n-1} q^{(n^2-1)/n}
    let t = signed((n - 1) % 2 == 1, 2 * n_i * (n_i * n_i - 1));
    // a = q^{(1-n)(2n+1)/4}
    let a_num = n_i * n_i * (1 - n_i) * (2 * n_i + 1);
    debug_assert_eq!(a_num % 2, 0);
    let a = LaurentScalar::var_pow(a_num / 2);
    // c_i = q^{(n-1)/(2n)} (-q)^{n-i}
    let c = (1..=n_i)
        .map(|i| signed((n_i - i) % 2 == 1, n_i * (n_i - 1) + 2 * n_i * n_i * (n_i - i)))
        .collect();
    Ok(StructureConstants { t, a, c })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_power_examples() {
        assert_eq!(q_power(1, 1, 3).unwrap(), LaurentScalar::var_pow(18));
        assert!(q_power(0, 1, 2).unwrap().is_one());
        assert_eq!(q_power(1, 2, 2).unwrap(), LaurentScalar::var_pow(4));
        assert!(matches!(q_power(1, 7, 2), Err(Error::NonIntegralExponent { .. })));
    }

    #[test]
    fn quantum_integer_examples() {
        assert_eq!(quantum_integer(2), LaurentScalar::from_terms([(-1, 1), (1, 1)]));
        assert!(quantum_integer(0).is_zero());
        assert!(quantum_factorial(0).is_one());
        let expected = &LaurentScalar::from_terms([(-1, 1), (1, 1)])
            * &LaurentScalar::from_terms([(-2, 1), (0, 1), (2, 1)]);
        assert_eq!(quantum_factorial(3), expected);
        for m in 0..12 {
            assert_eq!(quantum_integer(m).eval_at_one(), BigInt::from(m));
        }
    }

    #[test]
    fn binomial_is_factorial_quotient() {
        // [m]! = [m k] [k]! [m-k]!
        for m in 0..8 {
            for k in 0..=m {
                let lhs = quantum_factorial(m);
                let rhs = &(&gauss_binomial(m, k).unwrap() * &quantum_factorial(k))
                    * &quantum_factorial(m - k);
                assert_eq!(lhs, rhs, "m={m} k={k}");
            }
        }
        assert_eq!(gauss_binomial(2, 1).unwrap(), quantum_integer(2));
        assert!(gauss_binomial(5, 0).unwrap().is_one());
        assert!(gauss_binomial(2, 3).is_err());
    }

    #[test]
    fn binomial_at_one_is_ordinary() {
        let mut pascal = vec![vec![BigInt::from(1)]];
        for m in 1..10usize {
            let prev = &pascal[m - 1];
            let row: Vec<BigInt> = (0..=m)
                .map(|k| {
                    let a = if k > 0 { prev[k - 1].clone() } else { 0.into() };
                    let b = if k < m { prev[k].clone() } else { 0.into() };
                    a + b
                })
                .collect();
            pascal.push(row);
        }
        for m in 0..10u32 {
            for k in 0..=m {
                assert_eq!(
                    gauss_binomial(m, k).unwrap().eval_at_one(),
                    pascal[m as usize][k as usize]
                );
            }
        }
    }

    #[test]
    fn constants_rank_two() {
        let c = constants_tac(2).unwrap();
        assert_eq!(c.t, LaurentScalar::monomial((-1).into(), 12));
        assert_eq!(c.a, LaurentScalar::var_pow(-10));
        assert_eq!(c.c[1], LaurentScalar::var_pow(2));
        // c_1 = q^{1/4} (-q) = -qhat^{2+8}
        assert_eq!(c.c[0], LaurentScalar::monomial((-1).into(), 10));
        assert!(constants_tac(1).is_err());
    }

    #[test]
    fn constants_rank_three() {
        let c = constants_tac(3).unwrap();
        // t = q^{8/3} = qhat^{48}
        assert_eq!(c.t, q_power(8, 3, 3).unwrap());
        // a = q^{-14/4}
        assert_eq!(c.a, q_power(-14, 4, 3).unwrap());
        // c_1 = q^{1/3} q^2
        assert_eq!(c.c[0], q_power(7, 3, 3).unwrap());
    }
}
