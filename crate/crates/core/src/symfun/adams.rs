use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::epoly::EPoly;
use super::multipoly::{adams_elementary, elementary, MultiPoly};
use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};
use crate::report::{Report, Verdict};

/// Expresses a symmetric polynomial in `e_1, ..., e_n` by Gauss descent,
/// then sets `e_n = 1`.
pub fn to_elementary(p: &MultiPoly) -> Result<EPoly> {
    p.check_symmetric()?;
    let n = p.nvars();
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one variable".into()));
    }
    let es: Vec<MultiPoly> = (1..=n).map(|k| elementary(n, k).unwrap()).collect();
    let mut powers: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one(n)]; n];
    let mut rem = p.clone();
    let mut result: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    while let Some((a, c)) = rem.leading() {
        let (a, c) = (a.clone(), c.clone());
        let b: Vec<u32> = (0..n)
            .map(|i| {
                let next = if i + 1 < n { a[i + 1] } else { 0 };
                a[i].checked_sub(next).expect("leading exponent of a symmetric polynomial is a partition")
            })
            .collect();
        let mut prod = MultiPoly::one(n);
        for (i, &bi) in b.iter().enumerate() {
            while powers[i].len() <= bi as usize {
                let next = powers[i].last().unwrap().mul(&es[i]);
                powers[i].push(next);
            }
            if bi > 0 {
                prod = prod.mul(&powers[i][bi as usize]);
            }
        }
        let (lead, lc) = prod.leading().unwrap();
        assert!(lead == &a && lc.is_one(), "elementary product has unexpected leading term");
        rem = rem.sub(&prod.scale(&c));
        *result.entry(b).or_default() += c;
    }
    let mut out = EPoly::zero(n);
    for (b, c) in result {
        out.add_term(b[..n - 1].to_vec(), c);
    }
    Ok(out)
}

fn pbar_cache() -> &'static Mutex<HashMap<(usize, u32, usize), EPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32, usize), EPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The reduced power elementary polynomial: `e_k(x^m)` written in `e_1..e_{n-1}`.
pub fn pbar(n: usize, m: u32, k: usize) -> Result<EPoly> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..n-1 at rank {n}")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("power m must be at least 1".into()));
    }
    if let Some(p) = pbar_cache().lock().unwrap().get(&(n, m, k)) {
        return Ok(p.clone());
    }
    let p = to_elementary(&adams_elementary(n, k, m)?)?;
    pbar_cache().lock().unwrap().insert((n, m, k), p.clone());
    Ok(p)
}

/// The rank-3 three-term recursion
/// `Psi_m(e_i) = e_i Psi_{m-1}(e_i) - e_{i'} Psi_{m-2}(e_i) + Psi_{m-3}(e_i)`,
/// where `i'` is the other index.
pub fn pbar_recursive_n3(m: u32, i: usize) -> Result<EPoly> {
    if !(1..=2).contains(&i) {
        return Err(Error::InvalidArgument(format!("index {i} must be 1 or 2")));
    }
    let yi = EPoly::var(3, i);
    let yj = EPoly::var(3, 3 - i);
    let mut seq = vec![
        EPoly::constant(3, BigInt::from(3)),
        yi.clone(),
        yi.pow(2).sub(&yj.scale(&BigInt::from(2))),
    ];
    while seq.len() <= m as usize {
        let l = seq.len();
        let next = yi.mul(&seq[l - 1]).sub(&yj.mul(&seq[l - 2])).add(&seq[l - 3]);
        seq.push(next);
    }
    Ok(seq.swap_remove(m as usize))
}

/// The Adams operation as a ring endomorphism, `y_k -> pbar(n, m, k)`.
pub fn adams_on_epoly(p: &EPoly, m: u32) -> Result<EPoly> {
    let n = p.rank();
    let subs: Vec<EPoly> = (1..n).map(|k| pbar(n, m, k)).collect::<Result<_>>()?;
    if subs.is_empty() {
        return Ok(p.clone());
    }
    Ok(p.compose(&subs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpanVerdict {
    InSpan,
    NotInSpan,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanGap {
    pub big_n: u32,
    pub n_prime: u32,
    pub degree_bound: u32,
    pub target_degree: u32,
    /// `(a, b)` for each spanning element `Psi_{N'}(y_1^a) Psi_{N'}(y_2^b)`.
    pub candidates: Vec<(u32, u32)>,
    pub verdict: SpanVerdict,
}

/// Whether `target` lies in the span of `Psi_{n'}(y_1^a) Psi_{n'}(y_2^b)`
/// at rank 3, over all `(a, b)` with `n' (a + b) <= degree_bound`.
///
/// A negative answer is conclusive only when the bound reaches the degree of
/// `target`: the spanning elements have pairwise distinct leading forms
/// `y_1^{n'a} y_2^{n'b}`, so larger ones cannot cancel down to it.
pub fn span_membership(target: &EPoly, n_prime: u32, degree_bound: u32) -> Result<(Vec<(u32, u32)>, SpanVerdict)> {
    if target.rank() != 3 {
        return Err(Error::InvalidArgument("span test is implemented at rank 3".into()));
    }
    if n_prime == 0 {
        return Err(Error::InvalidArgument("n' must be positive".into()));
    }
    let p1 = pbar(3, n_prime, 1)?;
    let p2 = pbar(3, n_prime, 2)?;
    let mut candidates = Vec::new();
    let mut polys = Vec::new();
    let mut leads = Vec::new();
    let max_sum = degree_bound / n_prime;
    for s in 0..=max_sum {
        for a in (0..=s).rev() {
            let b = s - a;
            let p = p1.pow(a).mul(&p2.pow(b));
            let (deg, form) = p.leading_total_degree()?;
            assert_eq!(deg, n_prime * s);
            leads.push(form);
            candidates.push((a, b));
            polys.push(p);
        }
    }
    for (i, f) in leads.iter().enumerate() {
        assert_eq!(f.num_terms(), 1, "leading form of candidate {i} is not a monomial");
    }
    let mut monos: Vec<Vec<u32>> = polys
        .iter()
        .chain(std::iter::once(target))
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>())
        .collect();
    monos.sort();
    monos.dedup();
    let a: RatMatrix = monos
        .iter()
        .map(|e| polys.iter().map(|p| linalg::rat(p.coeff(e))).collect())
        .collect();
    let b: Vec<_> = monos.iter().map(|e| linalg::rat(target.coeff(e))).collect();
    let verdict = if target.is_zero() || (!polys.is_empty() && linalg::solve(&a, &b).is_some()) {
        SpanVerdict::InSpan
    } else if degree_bound >= target.total_degree().unwrap_or(0) {
        SpanVerdict::NotInSpan
    } else {
        SpanVerdict::Inconclusive
    };
    Ok((candidates, verdict))
}

/// Tests whether `Psi_N(y_1 y_2)` lies in the span of the
/// `Psi_{3N}(y_1^a) Psi_{3N}(y_2^b)` at rank 3.
pub fn span_gap_check(big_n: u32, degree_bound: u32) -> Result<SpanGap> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let n_prime = 3 * big_n;
    let y1y2 = EPoly::var(3, 1).mul(&EPoly::var(3, 2));
    let target = adams_on_epoly(&y1y2, big_n)?;
    let (candidates, verdict) = span_membership(&target, n_prime, degree_bound)?;
    Ok(SpanGap {
        big_n,
        n_prime,
        degree_bound,
        target_degree: target.total_degree().unwrap_or(0),
        candidates,
        verdict,
    })
}

pub fn span_gap_report(big_n: u32, degree_bound: u32) -> Result<Report> {
    let rep = Report::start(
        format!("Psi_{big_n}(y1 y2) is not in the span of Psi_{}(y1^a) Psi_{}(y2^b)", 3 * big_n, 3 * big_n),
        "Psi_N(e_1 e_2) not in span of Psi_{3N}(e_1^a) Psi_{3N}(e_2^b)",
    );
    let gap = span_gap_check(big_n, degree_bound)?;
    let verdict = match gap.verdict {
        SpanVerdict::NotInSpan => Verdict::Pass,
        SpanVerdict::InSpan => Verdict::Fail,
        SpanVerdict::Inconclusive => Verdict::Inconclusive,
    };
    Ok(rep
        .param("N", big_n)
        .param("degree_bound", degree_bound)
        .param("target_degree", gap.target_degree)
        .param("candidates", gap.candidates.len())
        .param("span", gap.verdict)
        .finish(verdict, 0))
}
