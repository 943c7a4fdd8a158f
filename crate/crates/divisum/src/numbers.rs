//! Bernoulli numbers, Stirling set numbers, binomials, and zeta values at
//! nonpositive integers — the classical constants the summation results are
//! cross-checked against.
//!
//! Bernoulli numbers follow the B(1) = +1/2 convention throughout.  Two
//! independent routes are provided: the defining recurrence
//! `sum_{k=0}^{n} C(n+1, k) B(k) = n + 1`, and a closed form through
//! Stirling set numbers,
//! `B(n) = n / (2^(n+1) - 2) * sum_{k=0}^{n-1} (-2)^(-k) k! S(n, k+1)`
//! (valid for n >= 1).  Agreement of the two is one of the acceptance
//! checks, so neither is allowed to quietly drift.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{Int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SpecialNumbersError {
    #[error("the Stirling-number form of B(n) divides by 2^(n+1) - 2, which vanishes at n = 0")]
    WorpitzkyUndefinedAtZero,
}

/// Memoized tables.  All entries are exact; rows are extended on demand.
#[derive(Debug, Default)]
pub struct NumberCache {
    bernoulli: Vec<Rat>,
    // stirling[n][k] = number of partitions of an n-set into k blocks, k <= n
    stirling: Vec<Vec<Int>>,
    binomial: Vec<Vec<Int>>,
}

impl NumberCache {
    pub fn new() -> Self {
        NumberCache::default()
    }

    /// Binomial coefficient by Pascal's rule.
    pub fn binomial(&mut self, n: usize, k: usize) -> Int {
        if k > n {
            return Int::zero();
        }
        while self.binomial.len() <= n {
            let m = self.binomial.len();
            let mut row = vec![Int::one(); m + 1];
            for j in 1..m {
                row[j] = &self.binomial[m - 1][j - 1] + &self.binomial[m - 1][j];
            }
            self.binomial.push(row);
        }
        self.binomial[n][k].clone()
    }

    /// Stirling set number S(n, k): partitions of an n-set into k nonempty
    /// blocks, via S(n, k) = k S(n-1, k) + S(n-1, k-1).
    pub fn stirling2(&mut self, n: usize, k: usize) -> Int {
        if k > n {
            return Int::zero();
        }
        while self.stirling.len() <= n {
            let m = self.stirling.len();
            let mut row = vec![Int::zero(); m + 1];
            if m == 0 {
                row[0] = Int::one(); // S(0, 0) = 1, the empty partition
            } else {
                let prev = &self.stirling[m - 1];
                for j in 1..=m {
                    let stay = match prev.get(j) {
                        Some(s) => Int::from(j) * s,
                        None => Int::zero(),
                    };
                    row[j] = stay + &prev[j - 1];
                }
            }
            self.stirling.push(row);
        }
        self.stirling[n][k].clone()
    }

    /// Bernoulli number B(n), B(1) = +1/2, by the defining recurrence.
    pub fn bernoulli_plus(&mut self, n: usize) -> Rat {
        while self.bernoulli.len() <= n {
            let m = self.bernoulli.len();
            // C(m+1, m) B(m) = (m + 1) - sum_{k<m} C(m+1, k) B(k)
            let mut acc = Rat::from_integer(Int::from(m + 1));
            for k in 0..m {
                let c = Rat::from_integer(self.binomial(m + 1, k));
                acc -= c * &self.bernoulli[k];
            }
            let value = acc / Rat::from_integer(Int::from(m + 1));
            self.bernoulli.push(value);
        }
        self.bernoulli[n].clone()
    }

    /// B(n) through Stirling set numbers; an independent route used to
    /// cross-check [`Self::bernoulli_plus`].  Undefined at n = 0.
    pub fn bernoulli_worpitzky(&mut self, n: usize) -> Result<Rat, SpecialNumbersError> {
        if n == 0 {
            return Err(SpecialNumbersError::WorpitzkyUndefinedAtZero);
        }
        let mut sum = Rat::zero();
        let mut factorial = Int::one();
        let minus_half = crate::rational::rat(-1, 2);
        let mut power = Rat::one(); // (-2)^(-k)
        for k in 0..n {
            if k > 0 {
                factorial *= Int::from(k);
                power *= &minus_half;
            }
            sum += &power * Rat::from_integer(&factorial * self.stirling2(n, k + 1));
        }
        let denom = (Int::from(2).pow(n as u32 + 1)) - Int::from(2);
        Ok(Rat::new(Int::from(n), denom) * sum)
    }

    /// Zeta at a nonpositive integer: zeta(-n) = -B(n+1) / (n+1).
    pub fn zeta_neg(&mut self, n: usize) -> Rat {
        -self.bernoulli_plus(n + 1) / Rat::from_integer(Int::from(n + 1))
    }
}

/// One-shot conveniences over a fresh cache.
pub fn bernoulli_plus(n: usize) -> Rat {
    NumberCache::new().bernoulli_plus(n)
}

pub fn bernoulli_worpitzky(n: usize) -> Result<Rat, SpecialNumbersError> {
    NumberCache::new().bernoulli_worpitzky(n)
}

pub fn stirling2(n: usize, k: usize) -> Int {
    NumberCache::new().stirling2(n, k)
}

pub fn binomial(n: usize, k: usize) -> Int {
    NumberCache::new().binomial(n, k)
}

pub fn zeta_neg(n: usize) -> Rat {
    NumberCache::new().zeta_neg(n)
}
