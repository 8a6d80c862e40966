use std::cmp::Ordering;
use std::fmt;

/// Largest supported rank.
pub const MAX_RANK: usize = 5;

/// Exponent matrix of an ordered monomial `prod u_ij^{m_ij}`, product taken in
/// position-lex order `(1,1) < (1,2) < ... < (n,n)`.
///
/// Entries are addressed by 0-based position `p = i * n + j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExpMatrix {
    n: u8,
    e: [u8; MAX_RANK * MAX_RANK],
}

impl ExpMatrix {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&n), "rank {n} outside 1..={MAX_RANK}");
        Self {
            n: n as u8,
            e: [0; MAX_RANK * MAX_RANK],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = 1;
        }
        m
    }

    /// Single generator `u_{i+1, j+1}`.
    pub fn generator(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.e[i * n + j] = 1;
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Option<Self> {
        let n = rows.len();
        if !(1..=MAX_RANK).contains(&n) || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let mut m = Self::zero(n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.e[i * n + j] = u8::try_from(v).ok()?;
            }
        }
        Some(m)
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.n as usize + j] as u32
    }

    pub fn at(&self, p: usize) -> u32 {
        self.e[p] as u32
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.e.iter().map(|&x| x as u32).sum()
    }

    pub fn min_diagonal(&self) -> u32 {
        (0..self.rank()).map(|i| self.get(i, i)).min().unwrap_or(0)
    }

    /// Minimal monomials (some diagonal exponent zero) form the basis of `O_q(SL_n)`.
    pub fn is_minimal(&self) -> bool {
        self.min_diagonal() == 0
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.rank();
        (0..n * n).all(|p| p / n == p % n || self.e[p] == 0)
    }

    /// Largest position carrying a nonzero exponent.
    pub fn last_pos(&self) -> Option<usize> {
        let nn = self.rank() * self.rank();
        (0..nn).rev().find(|&p| self.e[p] != 0)
    }

    pub fn inc(&self, p: usize) -> Self {
        let mut m = *self;
        m.e[p] = m.e[p].checked_add(1).expect("exponent overflow");
        m
    }

    pub fn dec(&self, p: usize) -> Self {
        let mut m = *self;
        m.e[p] = m.e[p].checked_sub(1).expect("exponent underflow");
        m
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut m = *self;
        for p in 0..self.rank() * self.rank() {
            m.e[p] = m.e[p].checked_sub(other.e[p])?;
        }
        Some(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = *self;
        for p in 0..self.rank() * self.rank() {
            m.e[p] = m.e[p].checked_add(other.e[p]).expect("exponent overflow");
        }
        m
    }

    pub fn scaled(&self, k: u32) -> Self {
        let mut m = *self;
        for p in 0..self.rank() * self.rank() {
            let v = m.e[p] as u32 * k;
            m.e[p] = u8::try_from(v).expect("exponent overflow");
        }
        m
    }

    /// Positions of the ordered word, repeated by exponent.
    pub fn word(&self) -> Vec<usize> {
        let nn = self.rank() * self.rank();
        (0..nn)
            .flat_map(|p| std::iter::repeat(p).take(self.e[p] as usize))
            .collect()
    }

    /// Graded position-lex order: total degree first, then the entries read at
    /// `(1,1), (1,2), ...` with the larger entry winning.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.e.cmp(&other.e))
    }
}

impl fmt::Debug for ExpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        let mut first = true;
        for p in 0..n * n {
            let e = self.e[p];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "u{}{}", p / n + 1, p % n + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// [`ExpMatrix`] ordered by [`ExpMatrix::grlex_cmp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrLex(pub ExpMatrix);

impl Ord for GrLex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.grlex_cmp(&other.0)
    }
}

impl PartialOrd for GrLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_grlex_max_among_permutations() {
        let id = ExpMatrix::identity(3);
        let perms = [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let mut m = ExpMatrix::zero(3);
            for (i, &j) in p.iter().enumerate() {
                m = m.inc(i * 3 + j);
            }
            assert_eq!(id.grlex_cmp(&m), Ordering::Greater);
        }
    }

    #[test]
    fn minimality_and_display() {
        let m = ExpMatrix::from_rows(&[vec![2, 0], vec![1, 0]]).unwrap();
        assert!(m.is_minimal());
        assert_eq!(m.to_string(), "u11^2*u21");
        assert!(!ExpMatrix::identity(2).is_minimal());
        assert_eq!(ExpMatrix::zero(2).to_string(), "1");
        assert_eq!(m.word(), vec![0, 0, 2]);
    }
}
