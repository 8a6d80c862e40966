use num_integer::Integer;
use serde::Serialize;

use super::Ring;

/// Data attached to a root of unity `omega_hat = zeta_d` at rank `n`.
///
/// `omega = omega_hat^{2n^2}` is the specialization of `q`, `N = ord(omega^2)`,
/// `eta_hat = omega_hat^{N^2}` and `eta = eta_hat^{2n^2}`, which is always `+-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootParams {
    pub d: u32,
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: u32,
    /// `eta_hat = omega_hat^{eta_hat_exp}`, reduced mod `d`.
    pub eta_hat_exp: i64,
    pub eta_sign: i8,
    /// Whether `[n]_omega!` is nonzero, i.e. `N = 1` or `N > n`.
    pub factorial_nonzero: bool,
}

impl RootParams {
    pub fn new(d: u32, n: usize) -> RootParams {
        assert!(d >= 1, "root of unity order must be positive");
        let four_n2 = 4 * (n * n) as u32;
        let big_n = d / d.gcd(&four_n2);
        let d_i = d as i64;
        let n2 = (big_n as i64) * (big_n as i64);
        let eta_hat_exp = n2.rem_euclid(d_i);
        let r = (2 * (n * n) as i64 * n2).rem_euclid(d_i);
        let eta_sign = if r == 0 {
            1
        } else if 2 * r == d_i {
            -1
        } else {
            unreachable!("eta = omega_hat^{r} is not +-1 at d = {d}, n = {n}")
        };
        RootParams {
            d,
            n,
            big_n,
            eta_hat_exp,
            eta_sign,
            factorial_nonzero: big_n == 1 || big_n as usize > n,
        }
    }

    /// `Z[zeta_d]` with `qhat -> omega_hat`.
    pub fn omega_ring(&self) -> Ring {
        Ring::cyclotomic(self.d, 1)
    }

    /// `Z[zeta_d]` with `qhat -> eta_hat`.
    pub fn eta_ring(&self) -> Ring {
        Ring::cyclotomic(self.d, self.eta_hat_exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cyclotomic_embed, quantum_factorial, LaurentScalar};

    #[test]
    fn examples() {
        let p = RootParams::new(48, 2);
        assert_eq!((p.big_n, p.eta_sign, p.eta_hat_exp), (3, -1, 9));
        assert!(p.factorial_nonzero);
        let p = RootParams::new(1, 2);
        assert_eq!((p.big_n, p.eta_sign), (1, 1));
        let p = RootParams::new(16, 3);
        assert_eq!(p.big_n, 4);
        assert!(p.factorial_nonzero);
        assert_eq!(RootParams::new(80, 2).big_n, 5);
    }

    #[test]
    fn factorial_flag_matches_exact_evaluation() {
        for n in 2..=4usize {
            let fact = quantum_factorial(n as u32).inflate(2 * (n * n) as i64);
            for d in 1..=64u32 {
                let p = RootParams::new(d, n);
                let value = cyclotomic_embed(&fact, d, 1);
                assert_eq!(!value.is_zero(), p.factorial_nonzero, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn eta_is_plus_minus_one_exactly() {
        for n in 2..=4usize {
            for d in 1..=64u32 {
                let p = RootParams::new(d, n);
                let exp = 2 * (n * n) as i64 * (p.big_n as i64).pow(2);
                let eta = cyclotomic_embed(&LaurentScalar::var_pow(exp), d, 1);
                let expected = cyclotomic_embed(&LaurentScalar::from_int(p.eta_sign as i64), d, 1);
                assert_eq!(eta, expected, "d={d} n={n}");
            }
        }
    }
}
