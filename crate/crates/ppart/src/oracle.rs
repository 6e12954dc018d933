//! Independent brute-force enumeration of (P,omega)-partitions and the two
//! classical bijections: the sorting map onto linear extensions and the
//! pair-of-sequences encoding.

use crate::error::{Error, Result};
use crate::poset::{LabeledPoset, LinearExtension};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A candidate map element -> nonnegative integer, indexed by element - 1.
pub type Assignment = Vec<u32>;

/// Conditions (i) and (ii): order-reversing, strict where the labels decrease.
pub fn is_valid_assignment(poset: &LabeledPoset, sigma: &[u32]) -> bool {
    let p = poset.size();
    if sigma.len() != p {
        return false;
    }
    for x in 1..=p {
        for y in 1..=p {
            if poset.less(x, y) {
                if sigma[x - 1] < sigma[y - 1] {
                    return false;
                }
                if poset.label(x) > poset.label(y) && sigma[x - 1] <= sigma[y - 1] {
                    return false;
                }
            }
        }
    }
    true
}

/// All (P,omega)-partitions with parts at most `m`, in lexicographic value order.
pub fn enumerate_ppartitions(
    poset: &LabeledPoset,
    m: u32,
    budget: Option<u64>,
) -> Result<Vec<Assignment>> {
    let p = poset.size();
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let candidates = (p as u64).max(1).saturating_mul((m as u64 + 1).saturating_pow(p as u32));
    if candidates > budget {
        return Err(Error::BudgetExceeded(candidates));
    }
    let mut out = Vec::new();
    let mut sigma = vec![0u32; p];
    enumerate_rec(poset, m, 0, &mut sigma, &mut out);
    Ok(out)
}

fn enumerate_rec(
    poset: &LabeledPoset,
    m: u32,
    next: usize,
    sigma: &mut Vec<u32>,
    out: &mut Vec<Assignment>,
) {
    let p = poset.size();
    if next == p {
        out.push(sigma.clone());
        return;
    }
    'values: for v in 0..=m {
        sigma[next] = v;
        // check constraints against already-assigned elements
        for other in 1..=next {
            let (x, y) = (other, next + 1);
            for (a, b) in [(x, y), (y, x)] {
                if poset.less(a, b) {
                    if sigma[a - 1] < sigma[b - 1] {
                        continue 'values;
                    }
                    if poset.label(a) > poset.label(b) && sigma[a - 1] <= sigma[b - 1] {
                        continue 'values;
                    }
                }
            }
        }
        enumerate_rec(poset, m, next + 1, sigma, out);
    }
    sigma[next] = 0;
}

/// The unique linear extension whose chain inequalities a valid partition
/// satisfies: elements in weakly decreasing sigma order, ties broken by
/// increasing label (then by poset order for equal labels on comparable pairs).
pub fn canonical_extension(poset: &LabeledPoset, sigma: &[u32]) -> Result<LinearExtension> {
    if !is_valid_assignment(poset, sigma) {
        return Err(Error::InvalidAssignment);
    }
    let p = poset.size();
    let mut elems: Vec<usize> = (1..=p).collect();
    elems.sort_by(|&a, &b| {
        sigma[b - 1]
            .cmp(&sigma[a - 1])
            .then(poset.label(a).cmp(&poset.label(b)))
            .then_with(|| {
                if poset.less(a, b) {
                    std::cmp::Ordering::Less
                } else if poset.less(b, a) {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            })
    });
    let word = elems.iter().map(|&e| poset.label(e)).collect();
    Ok(LinearExtension { word, elems })
}

/// The chain poset of a linear extension: the same elements totally ordered
/// along the extension, carrying the original labels.
pub fn chain_of_extension(poset: &LabeledPoset, ext: &LinearExtension) -> LabeledPoset {
    let p = poset.size();
    let covers: Vec<(usize, usize)> = (1..p).map(|i| (i, i + 1)).collect();
    let labels: Vec<u32> = ext.elems.iter().map(|&e| poset.label(e)).collect();
    LabeledPoset::from_covers(p, &covers, Some(labels)).expect("chain is acyclic")
}

/// Does `sigma` (indexed by original elements) satisfy the chain inequalities
/// of the extension `ext`? Weak steps where labels rise, strict where they fall.
pub fn satisfies_chain(poset: &LabeledPoset, ext: &LinearExtension, sigma: &[u32]) -> bool {
    for w in ext.elems.windows(2) {
        let (a, b) = (w[0], w[1]);
        if sigma[a - 1] < sigma[b - 1] {
            return false;
        }
        if poset.label(a) > poset.label(b) && sigma[a - 1] <= sigma[b - 1] {
            return false;
        }
    }
    true
}

/// The pair-of-sequences form of a partition: nonzero values weakly
/// decreasing, elements ordered so that predecessors appear earlier and a
/// larger element before a smaller one forces a strict value drop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnuthPair {
    pub values: Vec<u32>,
    pub elements: Vec<usize>,
}

pub fn knuth_pair(poset: &LabeledPoset, sigma: &[u32]) -> Result<KnuthPair> {
    if !is_valid_assignment(poset, sigma) {
        return Err(Error::InvalidAssignment);
    }
    let p = poset.size();
    let mut elems: Vec<usize> = (1..=p).filter(|&e| sigma[e - 1] > 0).collect();
    // weakly decreasing values; ties in increasing element order
    elems.sort_by(|&a, &b| sigma[b - 1].cmp(&sigma[a - 1]).then(a.cmp(&b)));
    let values = elems.iter().map(|&e| sigma[e - 1]).collect();
    Ok(KnuthPair {
        values,
        elements: elems,
    })
}

impl KnuthPair {
    /// Reconstruct the assignment on a poset of `p` elements.
    pub fn to_assignment(&self, p: usize) -> Assignment {
        let mut sigma = vec![0u32; p];
        for (&v, &e) in self.values.iter().zip(&self.elements) {
            sigma[e - 1] = v;
        }
        sigma
    }

    /// Knuth's conditions: (S1) strict predecessors listed earlier,
    /// (S2) a descent in the element sequence forces a strict value drop.
    pub fn conditions_hold(&self, poset: &LabeledPoset) -> bool {
        let m = self.elements.len();
        for j in 0..m {
            for x in 1..=poset.size() {
                if poset.less(x, self.elements[j])
                    && !self.elements[..j].contains(&x)
                {
                    return false;
                }
            }
        }
        for i in 0..m.saturating_sub(1) {
            if self.elements[i] > self.elements[i + 1] && self.values[i] <= self.values[i + 1] {
                return false;
            }
        }
        self.values.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Rank in the total order -1 < +1 < -2 < +2 < -3 < +3 < ...
fn enriched_rank(v: i32) -> u32 {
    if v > 0 {
        2 * v as u32 - 1
    } else {
        2 * (-v) as u32 - 2
    }
}

/// Conditions on an enriched partition: order-reversing in the enriched
/// order, positive ties force rising labels, negative ties force falling.
pub fn is_valid_enriched(poset: &LabeledPoset, sigma: &[i32]) -> bool {
    let p = poset.size();
    for x in 1..=p {
        for y in 1..=p {
            if poset.less(x, y) {
                let (sx, sy) = (sigma[x - 1], sigma[y - 1]);
                if enriched_rank(sx) < enriched_rank(sy) {
                    return false;
                }
                if sx == sy && sx > 0 && poset.label(x) >= poset.label(y) {
                    return false;
                }
                if sx == sy && sx < 0 && poset.label(x) <= poset.label(y) {
                    return false;
                }
            }
        }
    }
    true
}

/// All enriched partitions with values in `{-n..-1, +1..+n}`.
pub fn enumerate_enriched(
    poset: &LabeledPoset,
    n: u32,
    budget: Option<u64>,
) -> Result<Vec<Vec<i32>>> {
    let p = poset.size();
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let candidates = (2 * n as u64).max(1).saturating_pow(p as u32);
    if candidates > budget {
        return Err(Error::BudgetExceeded(candidates));
    }
    let values: Vec<i32> = {
        // in enriched rank order: -1, +1, -2, +2, ...
        let mut v = Vec::new();
        for k in 1..=n as i32 {
            v.push(-k);
            v.push(k);
        }
        v
    };
    let mut out = Vec::new();
    let mut sigma = vec![0i32; p];
    enriched_rec(poset, &values, 0, &mut sigma, &mut out);
    Ok(out)
}

fn enriched_rec(
    poset: &LabeledPoset,
    values: &[i32],
    next: usize,
    sigma: &mut Vec<i32>,
    out: &mut Vec<Vec<i32>>,
) {
    let p = poset.size();
    if next == p {
        out.push(sigma.clone());
        return;
    }
    'values: for &v in values {
        sigma[next] = v;
        for other in 1..=next {
            let (x, y) = (other, next + 1);
            for (a, b) in [(x, y), (y, x)] {
                if poset.less(a, b) {
                    let (sa, sb) = (sigma[a - 1], sigma[b - 1]);
                    if enriched_rank(sa) < enriched_rank(sb) {
                        continue 'values;
                    }
                    if sa == sb && sa > 0 && poset.label(a) >= poset.label(b) {
                        continue 'values;
                    }
                    if sa == sb && sa < 0 && poset.label(a) <= poset.label(b) {
                        continue 'values;
                    }
                }
            }
        }
        enriched_rec(poset, values, next + 1, sigma, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::vee_poset;

    #[test]
    fn vee_partitions_bounded_by_one() {
        let parts = enumerate_ppartitions(&vee_poset(), 1, None).unwrap();
        assert_eq!(parts, vec![vec![0, 1, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn antichain_and_strict_chain() {
        assert_eq!(
            enumerate_ppartitions(&LabeledPoset::antichain(2), 1, None)
                .unwrap()
                .len(),
            4
        );
        let strict = LabeledPoset::chain(2).complement_labeling().unwrap();
        assert!(enumerate_ppartitions(&strict, 0, None).unwrap().is_empty());
    }

    #[test]
    fn budget_guard() {
        let p = LabeledPoset::antichain(8);
        assert!(matches!(
            enumerate_ppartitions(&p, 100, Some(1000)),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn canonical_extension_examples() {
        let v = vee_poset();
        assert_eq!(
            canonical_extension(&v, &[0, 1, 1]).unwrap().word,
            vec![2, 3, 1]
        );
        assert_eq!(
            canonical_extension(&v, &[0, 1, 0]).unwrap().word,
            vec![2, 1, 3]
        );
        let chain = LabeledPoset::chain(3);
        assert_eq!(
            canonical_extension(&chain, &[0, 0, 0]).unwrap().word,
            vec![1, 2, 3]
        );
        assert_eq!(
            canonical_extension(&v, &[1, 0, 0]),
            Err(Error::InvalidAssignment)
        );
    }

    #[test]
    fn knuth_pair_examples() {
        let v = vee_poset();
        let pair = knuth_pair(&v, &[0, 2, 1]).unwrap();
        assert_eq!(pair.values, vec![2, 1]);
        assert_eq!(pair.elements, vec![2, 3]);
        assert!(pair.conditions_hold(&v));
        assert_eq!(pair.to_assignment(3), vec![0, 2, 1]);

        let zero = knuth_pair(&LabeledPoset::chain(3), &[0, 0, 0]).unwrap();
        assert!(zero.values.is_empty());

        let chain = LabeledPoset::chain(2);
        let pair = knuth_pair(&chain, &[3, 3]).unwrap();
        assert_eq!(pair.values, vec![3, 3]);
        assert_eq!(pair.elements, vec![1, 2]);
        assert!(pair.conditions_hold(&chain));
    }

    #[test]
    fn knuth_injective_and_invertible_small() {
        let v = vee_poset();
        let parts = enumerate_ppartitions(&v, 3, None).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for sigma in &parts {
            let pair = knuth_pair(&v, sigma).unwrap();
            assert!(pair.conditions_hold(&v));
            assert_eq!(pair.to_assignment(3), *sigma);
            assert!(images.insert((pair.values.clone(), pair.elements.clone())));
        }
    }

    #[test]
    fn enriched_single_element() {
        let single = LabeledPoset::chain(1);
        let maps = enumerate_enriched(&single, 1, None).unwrap();
        assert_eq!(maps.len(), 2);
    }

    #[test]
    fn enriched_two_chain() {
        // of the four maps, (+1,-1) and (+1,+1) survive conditions (i)-(iii);
        // (-1,-1) fails the negative-tie rule, (-1,+1) is not order-reversing
        let chain = LabeledPoset::chain(2);
        let maps = enumerate_enriched(&chain, 1, None).unwrap();
        assert_eq!(maps, vec![vec![1, -1], vec![1, 1]]);
    }

    #[test]
    fn enriched_sign_split_matches_ordinary() {
        // all-positive maps with |values| <= n biject with partitions into 1..n;
        // all-negative maps with the complement labeling likewise
        let v = vee_poset();
        let n = 2u32;
        let enriched = enumerate_enriched(&v, n, None).unwrap();
        let positives = enriched
            .iter()
            .filter(|s| s.iter().all(|&x| x > 0))
            .count();
        let ordinary = enumerate_ppartitions(&v, n, None)
            .unwrap()
            .into_iter()
            .filter(|s| s.iter().all(|&x| x >= 1))
            .count();
        assert_eq!(positives, ordinary);

        let negatives = enriched
            .iter()
            .filter(|s| s.iter().all(|&x| x < 0))
            .count();
        let comp = v.complement_labeling().unwrap();
        let comp_ordinary = enumerate_ppartitions(&comp, n, None)
            .unwrap()
            .into_iter()
            .filter(|s| s.iter().all(|&x| x >= 1))
            .count();
        assert_eq!(negatives, comp_ordinary);
    }
}
