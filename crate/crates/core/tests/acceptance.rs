//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qfrob::annulus::{classical_power, square_failures};
use qfrob::matcheck::pbar_identity_failures;
use qfrob::qmatrix::{
    antipode_failures, dk_monomial_rank, exterior_trace, frobenius_minor_failures, hopf_delta,
    straighten_random_order, verify_main_theorem, QAlgebra, QElement,
};
use qfrob::qtorus::{check_eq_mono, frobenius_t_failures, TorusAlgebra};
use qfrob::quiver::{extend, int_mul, is_antisymmetric, is_scalar_identity, Quiver, Triangulation};
use qfrob::report::Verdict;
use qfrob::scalar::{cyclotomic_embed, gauss_binomial, Ring, RootParams};
use qfrob::symfun::{pbar, pbar_recursive_n3, span_gap_check, EPoly, SpanVerdict};

type Check = fn() -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_element(alg: &QAlgebra, rng: &mut ChaCha8Rng, terms: usize, len: usize) -> QElement {
    let n = alg.rank();
    let mut x = alg.zero();
    for _ in 0..terms {
        let l = rng.gen_range(0..=len);
        let word: Vec<(usize, usize)> = (0..l).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
        let c = alg.ring().from_int(rng.gen_range(-3i64..=3));
        x.add_assign(&alg.straighten(&word, &c).unwrap());
    }
    x
}

fn pbar_matrix_oracle() -> Result<(), String> {
    let start = Instant::now();
    for n in 2..=4 {
        for m in 1..=6 {
            for k in 1..n {
                let bad = pbar_identity_failures(n, m, k, 20, 11).map_err(|e| e.to_string())?;
                ensure(bad == 0, || format!("n={n} m={m} k={k}: {bad} failing matrices"))?;
            }
        }
    }
    let t = start.elapsed().as_secs_f64();
    ensure(t < 10.0, || format!("took {t:.1} s"))
}

fn rank_three_recursion() -> Result<(), String> {
    for m in 1..=10 {
        for i in 1..=2 {
            let r = pbar_recursive_n3(m, i).map_err(|e| e.to_string())?;
            ensure(r == pbar(3, m, i).unwrap(), || format!("m={m} i={i}"))?;
        }
    }
    Ok(())
}

fn chebyshev() -> Result<(), String> {
    let y = EPoly::var(2, 1);
    let mut prev = EPoly::constant(2, BigInt::from(2));
    let mut cur = y.clone();
    for m in 1..=10 {
        ensure(pbar(2, m, 1).unwrap() == cur, || format!("m={m}"))?;
        let next = y.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok(())
}

fn binomial_vanishing() -> Result<(), String> {
    // q goes to a primitive 2N-th root of unity, so q^2 has order N
    for big_n in 2..=12u32 {
        for k in 1..big_n {
            let b = gauss_binomial(big_n, k).unwrap();
            ensure(cyclotomic_embed(&b, 2 * big_n, 1).is_zero(), || format!("N={big_n} k={k}"))?;
        }
    }
    Ok(())
}

fn main_theorem() -> Result<(), String> {
    for (n, d, k) in [(2, 48, 1), (2, 80, 1), (3, 16, 1), (3, 16, 2)] {
        let start = Instant::now();
        let out = verify_main_theorem(n, d, k).map_err(|e| e.to_string())?;
        ensure(out.residual.is_zero(), || format!("(n,d,k)=({n},{d},{k}): {} residual terms", out.residual.num_terms()))?;
        ensure(start.elapsed().as_secs() < 300, || format!("({n},{d},{k}) over budget"))?;
    }
    Ok(())
}

fn minor_frobenius() -> Result<(), String> {
    // (n, d) with N = 3 and N = 4 at each rank
    for (n, d) in [(2, 48), (2, 64), (3, 27), (3, 16)] {
        let params = RootParams::new(d, n);
        let bad = frobenius_minor_failures(&params);
        ensure(bad.is_empty(), || format!("n={n} d={d} N={}: {bad:?}", params.big_n))?;
    }
    Ok(())
}

fn hopf() -> Result<(), String> {
    for n in 2..=3 {
        let alg = QAlgebra::new(n, &Ring::Laurent);
        let bad = antipode_failures(&alg);
        ensure(bad.is_empty(), || format!("antipode at n={n}: {bad:?}"))?;
        for i in 1..=n {
            for j in 1..=n {
                let u = alg.gen(i, j);
                let delta = hopf_delta(&alg, &u);
                ensure(delta.counit_left(&alg) == u && delta.counit_right(&alg) == u, || {
                    format!("counit on u_{i}{j}")
                })?;
            }
        }
    }
    Ok(())
}

fn exterior_traces() -> Result<(), String> {
    for n in 2..=4 {
        let alg = QAlgebra::new(n, &Ring::Laurent);
        for k in 1..n {
            ensure(exterior_trace(&alg, k) == alg.dk(k).unwrap(), || format!("n={n} k={k}"))?;
        }
        ensure(exterior_trace(&alg, n) == alg.det(), || format!("det at n={n}"))?;
    }
    Ok(())
}

fn dk_commute_independent() -> Result<(), String> {
    for n in 2..=3 {
        let alg = QAlgebra::new(n, &Ring::Laurent);
        let ds = alg.dks();
        for i in 0..ds.len() {
            for j in 0..ds.len() {
                let c = alg.mul(&ds[i], &ds[j]).sub(&alg.mul(&ds[j], &ds[i]));
                ensure(alg.reduce(&c).is_zero(), || format!("[D_{}, D_{}] at n={n}", i + 1, j + 1))?;
            }
        }
        let (rank, count) = dk_monomial_rank(n, 3);
        ensure(rank == count, || format!("n={n}: rank {rank} of {count} monomials"))?;
    }
    Ok(())
}

fn quantum_torus() -> Result<(), String> {
    let q4 = vec![vec![0, 1, -2, 0], vec![-1, 0, 3, 1], vec![2, -3, 0, -1], vec![0, -1, 1, 0]];
    for r in 1..=4 {
        let q: Vec<Vec<i64>> = q4[..r].iter().map(|row| row[..r].to_vec()).collect();
        let alg = TorusAlgebra::new(q, &Ring::Laurent).unwrap();
        let letters: Vec<(usize, i64)> = (0..r).flat_map(|i| [(i, 1), (i, -1)]).collect();
        let mut words: Vec<Vec<(usize, i64)>> = vec![vec![]];
        let mut frontier = words.clone();
        for _ in 0..5 {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    letters.iter().map(move |&l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
            words.extend(frontier.iter().cloned());
        }
        for w in &words {
            let raw = alg.from_raw_word(w).unwrap();
            let weyl = w.iter().fold(alg.one(), |acc, &(i, e)| {
                let mut k = vec![0; r];
                k[i] = e;
                alg.mul(&acc, &alg.monomial(k, alg.ring().one()))
            });
            ensure(raw == weyl, || format!("word {w:?}"))?;
        }
    }
    let params = RootParams::new(48, 2);
    let bad = frobenius_t_failures(&q4, &params, 100, 3).map_err(|e| e.to_string())?;
    ensure(bad == 0, || format!("torus Frobenius fails on {bad} pairs"))?;
    let m = Quiver::build(&Triangulation::preset("P3", 2).unwrap()).unwrap().matrices().unwrap();
    let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let two = vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]];
    let four_q: Vec<Vec<i64>> = m.q.iter().map(|row| row.iter().map(|x| 4 * x).collect()).collect();
    for (k, src, dst) in [(&id, &m.q, &m.q), (&m.k, &m.p, &m.q), (&two, &four_q, &m.q)] {
        let rep = check_eq_mono(k, src, dst, 48, 2, 20, 5).map_err(|e| e.to_string())?;
        ensure(rep.verdict == Verdict::Pass, || format!("monomial map K = {k:?}"))?;
    }
    Ok(())
}

fn quiver_identities() -> Result<(), String> {
    for name in ["P3", "P4", "P5", "annulus"] {
        for n in 2..=4 {
            let t = Triangulation::preset(name, n).unwrap();
            let m = Quiver::build(&t).and_then(|q| q.matrices()).map_err(|e| format!("{name} n={n}: {e}"))?;
            ensure(is_scalar_identity(&int_mul(&m.h, &m.k), n as i64), || format!("{name} n={n}: HK"))?;
            ensure(is_antisymmetric(&m.p), || format!("{name} n={n}: P"))?;
        }
    }
    for n in 2..=3 {
        let e = extend(&Triangulation::preset("P3", n).unwrap()).map_err(|e| e.to_string())?;
        ensure(is_scalar_identity(&int_mul(&e.h, &e.k), n as i64), || format!("extended P3 n={n}"))?;
    }
    Ok(())
}

fn annulus_square() -> Result<(), String> {
    let bad = square_failures(2, 48, 2).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), || format!("{bad:?}"))
}

fn classical_powers() -> Result<(), String> {
    for n in 2..=3 {
        for m in 1..=4 {
            for k in 1..n {
                let out = classical_power(n, m, k).map_err(|e| e.to_string())?;
                ensure(out.residual.is_zero(), || format!("n={n} m={m} k={k}"))?;
            }
        }
    }
    Ok(())
}

fn span_gap() -> Result<(), String> {
    let gap = span_gap_check(2, 12).map_err(|e| e.to_string())?;
    ensure(gap.verdict == SpanVerdict::NotInSpan, || format!("{:?}", gap.verdict))
}

fn structural() -> Result<(), String> {
    for d in 1..=64u32 {
        for n in 2..=4usize {
            let p = RootParams::new(d, n);
            let eta = p.omega_ring().qhat_pow(p.eta_hat_exp * 2 * (n * n) as i64);
            let ring = p.omega_ring();
            ensure(eta == ring.one() || eta == -&ring.one(), || format!("eta at d={d} n={n}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 2..=3 {
        let alg = QAlgebra::new(n, &Ring::Laurent);
        for len in 0..=8 {
            for _ in 0..6 {
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n * n)).collect();
                let pairs: Vec<(usize, usize)> = word.iter().map(|p| (p / n + 1, p % n + 1)).collect();
                let reference = alg.straighten(&pairs, &alg.ring().one()).unwrap();
                ensure(straighten_random_order(&alg, &word, &mut rng) == reference, || format!("word {word:?}"))?;
            }
        }
        let det_minus_one = alg.det().sub(&alg.one());
        for _ in 0..5 {
            let x = random_element(&alg, &mut rng, 3, 3);
            let y = random_element(&alg, &mut rng, 2, 2);
            let r = alg.reduce(&x);
            ensure(alg.reduce(&r) == r, || "reduce is not idempotent".into())?;
            let ideal = alg.mul(&alg.mul(&x, &det_minus_one), &y);
            ensure(alg.reduce(&ideal).is_zero(), || "ideal element survives reduction".into())?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Check); 15] = [
        ("pbar matrix oracle on random SL_n(Q)", pbar_matrix_oracle),
        ("rank 3 recursion equals pbar", rank_three_recursion),
        ("rank 2 pbar is Chebyshev", chebyshev),
        ("Gaussian binomials vanish at roots of unity", binomial_vanishing),
        ("Frobenius of D_k is pbar_N,k of the D_i", main_theorem),
        ("Frobenius sends minors to N-th powers", minor_frobenius),
        ("antipode and counit axioms", hopf),
        ("exterior traces are D_k and det_q", exterior_traces),
        ("D_k commute and are independent", dk_commute_independent),
        ("quantum torus products and monomial maps", quantum_torus),
        ("quiver H K = n Id and antisymmetric P", quiver_identities),
        ("annulus square commutes", annulus_square),
        ("classical power identity at qhat = 1", classical_powers),
        ("span gap at N = 2", span_gap),
        ("eta sign, confluence and reduction", structural),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
