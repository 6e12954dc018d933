//! Descent, major-index, peak, and type-B statistics on words and signed
//! permutations. Positions are 1-based throughout.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Descent set, descent count, and major index of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStats {
    pub descent_set: BTreeSet<usize>,
    pub des: usize,
    pub maj: usize,
}

/// `S = { j | w(j) > w(j+1) }`, `des = |S|`, `maj = sum(S)`.
pub fn descent_statistics(word: &[u32]) -> DescentStats {
    let descent_set: BTreeSet<usize> = word
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect();
    let des = descent_set.len();
    let maj = descent_set.iter().sum();
    DescentStats {
        descent_set,
        des,
        maj,
    }
}

/// Interior positions `i` with `w(i-1) < w(i) > w(i+1)`; letters must be distinct.
pub fn peak_set(word: &[u32]) -> Result<BTreeSet<usize>> {
    let mut seen = BTreeSet::new();
    for &c in word {
        if !seen.insert(c) {
            return Err(Error::DuplicateLetters);
        }
    }
    Ok((1..word.len().saturating_sub(1))
        .filter(|&i| word[i - 1] < word[i] && word[i] > word[i + 1])
        .map(|i| i + 1)
        .collect())
}

/// Every prefix has at least as many occurrences of `k` as of `k+1`, for all `k`.
pub fn is_lattice_permutation(word: &[u32]) -> bool {
    let max = word.iter().cloned().max().unwrap_or(0) as usize;
    let mut counts = vec![0i64; max + 2];
    for &c in word {
        let c = c as usize;
        counts[c] += 1;
        if c >= 2 && counts[c] > counts[c - 1] {
            return false;
        }
    }
    true
}

/// A signed permutation: values on `1..p` with `|pi|` a permutation of `1..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    values: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let p = values.len();
        let mut seen = vec![false; p];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a < 1 || a > p || seen[a - 1] {
                return Err(Error::InvalidSignedPermutation);
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Type-B descent set: sentinel `pi(p+1) = p+1` and the total order
    /// `1 < 2 < ... < p+1 < -p < ... < -2 < -1`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let p = self.values.len();
        let rank = |v: i64| -> i64 {
            if v > 0 {
                v
            } else {
                2 * (p as i64 + 1) - (-v)
            }
        };
        (1..=p)
            .filter(|&i| {
                let next = if i == p { p as i64 + 1 } else { self.values[i] };
                rank(self.values[i - 1]) > rank(next)
            })
            .collect()
    }
}
