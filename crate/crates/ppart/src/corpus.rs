//! Deterministic poset corpora for the oracle and identity suites:
//! exhaustive small posets, all proper labelings, and seeded random posets.

use crate::poset::LabeledPoset;

/// The three-element poset with one minimal element below two incomparable
/// maximal ones; its partitions satisfy sigma(2) > sigma(1), sigma(2) >= sigma(3)
/// and its linear extensions are the words 213 and 231.
pub fn vee_poset() -> LabeledPoset {
    LabeledPoset::from_covers(3, &[(2, 1), (2, 3)], None).unwrap()
}

/// Every poset on `p` elements whose relation is compatible with the natural
/// order (x < y whenever x precedes y), with the identity labeling. Up to
/// relabeling this covers all posets on `p` elements.
pub fn all_natural_posets(p: usize) -> Vec<LabeledPoset> {
    let pairs: Vec<(usize, usize)> = (1..=p)
        .flat_map(|i| (i + 1..=p).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let covers: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &pr)| pr)
            .collect();
        let poset = LabeledPoset::from_covers(p, &covers, None).expect("acyclic by construction");
        // dedupe by closed relation
        let key: Vec<(usize, usize)> = (1..=p)
            .flat_map(|x| (1..=p).map(move |y| (x, y)))
            .filter(|&(x, y)| poset.less(x, y))
            .collect();
        if seen.insert(key) {
            out.push(poset);
        }
    }
    out
}

/// Every poset on `p` elements with every proper labeling.
pub fn all_posets_all_proper_labelings(p: usize) -> Vec<LabeledPoset> {
    let mut out = Vec::new();
    for poset in all_natural_posets(p) {
        for labels in permutations(p) {
            out.push(poset.with_labels(labels).expect("proper labeling"));
        }
    }
    out
}

fn permutations(p: usize) -> Vec<Vec<u32>> {
    let mut v: Vec<u32> = (1..=p as u32).collect();
    let mut out = Vec::new();
    heap_permute(&mut v, p, &mut out);
    out
}

fn heap_permute(v: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k <= 1 {
        out.push(v.clone());
        return;
    }
    for i in 0..k {
        heap_permute(v, k - 1, out);
        if k % 2 == 0 {
            v.swap(i, k - 1);
        } else {
            v.swap(0, k - 1);
        }
    }
}

/// Small deterministic generator (xorshift64*), so corpora are reproducible
/// without pulling a RNG crate into the library.
#[derive(Clone)]
pub struct Rng64 {
    state: u64,
}

impl Rng64 {
    pub fn new(seed: u64) -> Self {
        Rng64 {
            state: seed.wrapping_mul(0x9e3779b97f4a7c15).max(1),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545f4914f6cdd1d)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// Random poset on `p` elements with a uniformly random proper labeling.
pub fn random_labeled_poset(rng: &mut Rng64, p: usize) -> LabeledPoset {
    // random edges on a random topological order, then a random labeling
    let mut order: Vec<usize> = (1..=p).collect();
    for i in (1..p).rev() {
        let j = rng.below(i + 1);
        order.swap(i, j);
    }
    let mut covers = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            if rng.coin() && rng.coin() {
                covers.push((order[i], order[j]));
            }
        }
    }
    let mut labels: Vec<u32> = (1..=p as u32).collect();
    for i in (1..p).rev() {
        let j = rng.below(i + 1);
        labels.swap(i, j);
    }
    LabeledPoset::from_covers(p, &covers, Some(labels)).expect("acyclic by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naturally_ordered_poset_counts() {
        // partial orders contained in the natural total order: 1, 1, 2, 7, 40
        let counts: Vec<usize> = (0..=4).map(|p| all_natural_posets(p).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 7, 40]);
    }

    #[test]
    fn random_posets_are_valid() {
        let mut rng = Rng64::new(7);
        for _ in 0..50 {
            let poset = random_labeled_poset(&mut rng, 6);
            assert!(poset.is_proper());
        }
    }
}
