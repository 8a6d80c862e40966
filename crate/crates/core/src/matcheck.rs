//! Exact matrix oracle for the reduced power polynomials and for Cauchy-Binet.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, rat, RatMatrix};
use crate::qmatrix::subsets;
use crate::report::{Report, Verdict};
use crate::symfun::{pbar, PolyAlgebra};

/// The field of rationals as an evaluation target for polynomials.
pub struct Rationals;

impl PolyAlgebra for Rationals {
    type Elem = BigRational;
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn scale(&self, a: &BigRational, c: &BigInt) -> BigRational {
        a * rat(c.clone())
    }
}

/// RNG for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Product of `steps` random shears `Id + c E_ij` with `i != j` and
/// `c` in `[-3, 3]`, so the determinant is exactly 1.
pub fn random_sln_with<R: Rng>(n: usize, steps: usize, rng: &mut R) -> RatMatrix {
    let mut a = linalg::identity(n);
    if n < 2 {
        return a;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = rat(rng.gen_range(-3i64..=3));
        // right multiplication: column j += c * column i
        for row in a.iter_mut() {
            let t = &row[i] * &c;
            row[j] += t;
        }
    }
    a
}

pub fn random_sln(n: usize, seed: u64, steps: usize) -> RatMatrix {
    random_sln_with(n, steps, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Random matrix with entries `p / q`, `|p| <= 5`, `1 <= q <= 3`.
pub fn random_rational_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> RatMatrix {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into()))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Bareiss elimination after clearing row
/// denominators.
pub fn det_bareiss(a: &RatMatrix) -> BigRational {
    let n = a.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &l;
            row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigRational::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    BigRational::new(&m[n - 1][n - 1] * sign, scale)
}

pub fn submatrix(a: &RatMatrix, rows: &[usize], cols: &[usize]) -> RatMatrix {
    rows.iter().map(|&i| cols.iter().map(|&j| a[i - 1][j - 1].clone()).collect()).collect()
}

/// `D_k(A)`: sum of the principal `k x k` minors.
pub fn principal_minor_sum(a: &RatMatrix, k: usize) -> Result<BigRational> {
    let n = a.len();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={n}")));
    }
    Ok(subsets(n, k)
        .iter()
        .map(|s| det_bareiss(&submatrix(a, s, s)))
        .fold(BigRational::zero(), |acc, v| acc + v))
}

pub fn mat_pow(a: &RatMatrix, m: u32) -> RatMatrix {
    (0..m).fold(linalg::identity(a.len()), |acc, _| linalg::mat_mul(&acc, a))
}

/// The `k`-th compound matrix, indexed by `k`-subsets in lex order.
pub fn compound(a: &RatMatrix, k: usize) -> RatMatrix {
    let sets = subsets(a.len(), k);
    sets.iter()
        .map(|i| sets.iter().map(|j| det_bareiss(&submatrix(a, i, j))).collect())
        .collect()
}

/// `D_k(A^m)` as the trace of the `m`-th power of the `k`-th compound, which
/// equals the compound of `A^m` by Cauchy-Binet.
pub fn dk_of_power_via_compound(a: &RatMatrix, k: usize, m: u32) -> BigRational {
    let c = mat_pow(&compound(a, k), m);
    (0..c.len()).fold(BigRational::zero(), |acc, i| acc + &c[i][i])
}

/// `D_1(x), D_2(x), ..., D_{n-1}(x)` spelled out, for report claims.
pub(crate) fn minor_sums(x: &str, n: usize) -> String {
    (1..n).map(|i| format!("D_{i}({x})")).collect::<Vec<_>>().join(", ")
}

/// Number of trials in which `pbar_{m,k}(D_1(A), ..., D_{n-1}(A))`, `D_k(A^m)`
/// and the compound-matrix route do not all agree.
pub fn pbar_identity_failures(n: usize, m: u32, k: usize, trials: usize, seed: u64) -> Result<usize> {
    let p = pbar(n, m, k)?;
    let bad = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let a = random_sln_with(n, 2 * n * n, &mut trial_rng(seed, t as u64));
            let ds: Vec<BigRational> = (1..n).map(|j| principal_minor_sum(&a, j).unwrap()).collect();
            let lhs = p.evaluate(&Rationals, &ds);
            let direct = principal_minor_sum(&mat_pow(&a, m), k).unwrap();
            let via = dk_of_power_via_compound(&a, k, m);
            !(lhs == direct && direct == via)
        })
        .count();
    Ok(bad)
}

pub fn verify_pbar_identity(n: usize, m: u32, k: usize, trials: usize, seed: u64) -> Result<Report> {
    let rep = Report::start(
        format!("pbar_{m},{k}({}) = D_{k}(A^{m}) on random SL_{n}(Q)", minor_sums("A", n)),
        "pbar_{m,k}(D_1(A), ..., D_{n-1}(A)) = D_k(A^m) for A in SL_n",
    )
    .param("n", n)
    .param("m", m)
    .param("k", k)
    .param("trials", trials)
    .param("seed", seed);
    let bad = pbar_identity_failures(n, m, k, trials, seed)?;
    Ok(rep.finish(Verdict::from_bool(bad == 0), bad))
}

/// Number of trials where `det((AB)_{I,J}) != sum_K det(A_{I,K}) det(B_{K,J})`
/// for random rational `A`, `B` and random `k`-subsets `I`, `J`.
pub fn cauchy_binet_failures(n: usize, k: usize, trials: usize, seed: u64) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={n}")));
    }
    let sets = subsets(n, k);
    let bad = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut rng = trial_rng(seed, t as u64);
            let a = random_rational_matrix(n, n, &mut rng);
            let b = random_rational_matrix(n, n, &mut rng);
            let i = &sets[rng.gen_range(0..sets.len())];
            let j = &sets[rng.gen_range(0..sets.len())];
            let lhs = det_bareiss(&submatrix(&linalg::mat_mul(&a, &b), i, j));
            let rhs = sets.iter().fold(BigRational::zero(), |acc, kk| {
                acc + det_bareiss(&submatrix(&a, i, kk)) * det_bareiss(&submatrix(&b, kk, j))
            });
            lhs != rhs
        })
        .count();
    Ok(bad)
}

pub fn cauchy_binet_check(n: usize, k: usize, trials: usize, seed: u64) -> Result<Report> {
    let rep = Report::start(
        format!("Cauchy-Binet for {k}x{k} minors of {n}x{n} rational matrices"),
        "det((AB)_{I,J}) = sum_K det(A_{I,K}) det(B_{K,J})",
    )
    .param("n", n)
    .param("k", k)
    .param("trials", trials)
    .param("seed", seed);
    let bad = cauchy_binet_failures(n, k, trials, seed)?;
    Ok(rep.finish(Verdict::from_bool(bad == 0), bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[BigRational]) -> RatMatrix {
        (0..v.len())
            .map(|i| (0..v.len()).map(|j| if i == j { v[i].clone() } else { BigRational::zero() }).collect())
            .collect()
    }

    #[test]
    fn sampler_properties() {
        assert_eq!(random_sln(3, 5, 0), linalg::identity(3));
        for seed in 0..10 {
            let a = random_sln(4, seed, 32);
            assert_eq!(det_bareiss(&a), BigRational::one());
            assert_eq!(linalg::determinant(&a), BigRational::one());
            assert_eq!(a, random_sln(4, seed, 32));
        }
    }

    #[test]
    fn bareiss_matches_elimination() {
        let mut rng = trial_rng(3, 0);
        for n in 1..=5 {
            let a = random_rational_matrix(n, n, &mut rng);
            assert_eq!(det_bareiss(&a), linalg::determinant(&a));
        }
        let singular = linalg::from_ints(&[vec![0, 1], vec![0, 2]]);
        assert!(det_bareiss(&singular).is_zero());
    }

    #[test]
    fn principal_minor_examples() {
        let half = BigRational::new(1.into(), 2.into());
        let a = diag(&[rat(2), half.clone()]);
        assert_eq!(principal_minor_sum(&a, 1).unwrap(), BigRational::new(5.into(), 2.into()));
        for n in 1..=5usize {
            for k in 1..=n {
                let binom = subsets(n, k).len() as i64;
                assert_eq!(principal_minor_sum(&linalg::identity(n), k).unwrap(), rat(binom));
            }
        }
        let b = random_sln(3, 1, 18);
        let trace = (0..3).fold(BigRational::zero(), |acc, i| acc + &b[i][i]);
        assert_eq!(principal_minor_sum(&b, 1).unwrap(), trace);
        assert!(principal_minor_sum(&b, 4).is_err());
        // (5/2)^2 - 2 = 17/4 = D_1(A^2)
        let p = pbar(2, 2, 1).unwrap();
        let lhs = p.evaluate(&Rationals, &[principal_minor_sum(&a, 1).unwrap()]);
        assert_eq!(lhs, BigRational::new(17.into(), 4.into()));
        assert_eq!(principal_minor_sum(&mat_pow(&a, 2), 1).unwrap(), lhs);
    }

    #[test]
    fn identity_matrix_gives_binomials() {
        for n in 2..=4usize {
            let ones: Vec<BigRational> = (1..n).map(|k| rat(subsets(n, k).len() as i64)).collect();
            for k in 1..n {
                let v = pbar(n, 3, k).unwrap().evaluate(&Rationals, &ones);
                assert_eq!(v, rat(subsets(n, k).len() as i64));
            }
        }
    }

    #[test]
    fn oracle_runs() {
        assert_eq!(pbar_identity_failures(4, 5, 2, 20, 1).unwrap(), 0);
        assert_eq!(cauchy_binet_failures(4, 2, 20, 1).unwrap(), 0);
        assert_eq!(cauchy_binet_failures(3, 3, 5, 2).unwrap(), 0);
        assert_eq!(cauchy_binet_failures(3, 1, 5, 2).unwrap(), 0);
    }
}
