use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::algebra::{swap_rule, SwapCoeff};
use super::{ExpMatrix, QAlgebra, QElement};
use crate::scalar::Scalar;

/// Straightens a word of 0-based positions by rewriting adjacent
/// out-of-order pairs, picking the pair to rewrite at random each step.
///
/// This shares nothing with the memoized product except the four
/// commutation rules, so it serves as an independent confluence check.
pub fn straighten_random_order<R: Rng>(alg: &QAlgebra, word: &[usize], rng: &mut R) -> QElement {
    let n = alg.rank();
    let q = alg.q();
    let q_inv = alg.ring().qhat_pow(-2 * (n * n) as i64);
    let minus_q_diff = &q_inv - q;
    let mut pending: HashMap<Vec<usize>, Scalar> = HashMap::new();
    pending.insert(word.to_vec(), alg.ring().one());
    let mut out = alg.zero();
    while !pending.is_empty() {
        let keys: Vec<Vec<usize>> = pending.keys().cloned().collect();
        let w = keys.choose(rng).unwrap().clone();
        let c = pending.remove(&w).unwrap();
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&t| w[t] > w[t + 1]).collect();
        let Some(&t) = descents.choose(rng) else {
            let mut m = ExpMatrix::zero(n);
            for &p in &w {
                m = m.inc(p);
            }
            out.add_term(m, &c);
            continue;
        };
        for (kind, a, b) in swap_rule(n, w[t], w[t + 1]) {
            let coeff = match kind {
                SwapCoeff::One => c.clone(),
                SwapCoeff::QInv => &c * &q_inv,
                SwapCoeff::MinusQDiff => &c * &minus_q_diff,
            };
            let mut w2 = w.clone();
            w2[t] = a;
            w2[t + 1] = b;
            let slot = pending.entry(w2.clone()).or_insert_with(|| alg.ring().zero());
            slot.add_assign_ref(&coeff);
            if slot.is_zero() {
                pending.remove(&w2);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_orders_agree_with_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=3 {
            let alg = QAlgebra::new(n, &Ring::Laurent);
            for len in 0..=8 {
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n * n)).collect();
                let pairs: Vec<(usize, usize)> = word.iter().map(|p| (p / n + 1, p % n + 1)).collect();
                let expected = alg.straighten(&pairs, &alg.ring().one()).unwrap();
                for _ in 0..3 {
                    assert_eq!(straighten_random_order(&alg, &word, &mut rng), expected, "{word:?}");
                }
            }
        }
    }
}
