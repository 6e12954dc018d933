//! Finite labeled posets: construction, labelings, linear extensions,
//! order ideals, disjoint unions, skew-shape cell posets.
//!
//! Elements are canonically `1..p`. A cover pair `(x, y)` puts `x` strictly
//! below `y`; the stored relation is the transitive closure. The labeling
//! `omega` may repeat a label only on comparable elements.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    p: usize,
    /// below[x][y] (0-indexed): element x+1 strictly precedes element y+1.
    below: Vec<Vec<bool>>,
    omega: Vec<u32>,
}

/// A linear extension: the refining total order as an element sequence,
/// together with the word of labels read along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtension {
    pub word: Vec<u32>,
    pub elems: Vec<usize>,
}

/// A downward-closed subset, kept as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderIdeal {
    pub members: Vec<usize>,
}

/// How the labeling behaves along covering pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingKind {
    Natural,
    Strict,
    Mixed,
}

impl LabeledPoset {
    /// Build from a cover list; the relation is the transitive closure.
    pub fn from_covers(p: usize, covers: &[(usize, usize)], labels: Option<Vec<u32>>) -> Result<Self> {
        for &(x, y) in covers {
            if x < 1 || x > p || y < 1 || y > p {
                return Err(Error::Invalid(format!("cover ({x},{y}) out of range 1..{p}")));
            }
        }
        let mut below = vec![vec![false; p]; p];
        for &(x, y) in covers {
            below[x - 1][y - 1] = true;
        }
        // Warshall closure
        for k in 0..p {
            for i in 0..p {
                if below[i][k] {
                    for j in 0..p {
                        if below[k][j] {
                            below[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..p {
            if below[i][i] {
                return Err(Error::Cycle);
            }
        }
        let omega = match labels {
            Some(l) => {
                if l.len() != p {
                    return Err(Error::Invalid("labels length must equal p".into()));
                }
                if l.iter().any(|&v| v == 0) {
                    return Err(Error::Invalid("labels must be positive".into()));
                }
                l
            }
            None => (1..=p as u32).collect(),
        };
        for i in 0..p {
            for j in i + 1..p {
                if omega[i] == omega[j] && !below[i][j] && !below[j][i] {
                    return Err(Error::Label(i + 1, j + 1, omega[i]));
                }
            }
        }
        Ok(LabeledPoset { p, below, omega })
    }

    /// Antichain on p elements with natural labels.
    pub fn antichain(p: usize) -> Self {
        LabeledPoset::from_covers(p, &[], None).unwrap()
    }

    /// Naturally labeled chain 1 < 2 < ... < p.
    pub fn chain(p: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..p).map(|i| (i, i + 1)).collect();
        LabeledPoset::from_covers(p, &covers, None).unwrap()
    }

    /// Chain of size p with every label equal to `label`.
    pub fn constant_chain(p: usize, label: u32) -> Self {
        let covers: Vec<(usize, usize)> = (1..p).map(|i| (i, i + 1)).collect();
        LabeledPoset::from_covers(p, &covers, Some(vec![label; p])).unwrap()
    }

    pub fn size(&self) -> usize {
        self.p
    }

    pub fn omega(&self) -> &[u32] {
        &self.omega
    }

    pub fn label(&self, x: usize) -> u32 {
        self.omega[x - 1]
    }

    /// Does `x` strictly precede `y`? (1-based)
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[x - 1][y - 1]
    }

    /// Same relation, different labels.
    pub fn with_labels(&self, labels: Vec<u32>) -> Result<Self> {
        let covers: Vec<(usize, usize)> = self.cover_pairs();
        LabeledPoset::from_covers(self.p, &covers, Some(labels))
    }

    /// Covering pairs `(x, y)` with `x` immediately below `y`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for x in 1..=self.p {
            for y in 1..=self.p {
                if self.less(x, y)
                    && !(1..=self.p).any(|z| self.less(x, z) && self.less(z, y))
                {
                    covers.push((x, y));
                }
            }
        }
        covers
    }

    /// `omega` is a bijection onto `{1..p}`.
    pub fn is_proper(&self) -> bool {
        let mut seen = vec![false; self.p];
        for &l in &self.omega {
            let l = l as usize;
            if l < 1 || l > self.p || seen[l - 1] {
                return false;
            }
            seen[l - 1] = true;
        }
        true
    }

    /// All linear extensions, sorted lexicographically by label word.
    pub fn linear_extensions(&self) -> Vec<LinearExtension> {
        let mut out = Vec::new();
        let mut used = vec![false; self.p];
        let mut elems = Vec::with_capacity(self.p);
        self.extend_rec(&mut used, &mut elems, &mut out);
        out.sort_by(|a, b| a.word.cmp(&b.word));
        out
    }

    fn extend_rec(
        &self,
        used: &mut Vec<bool>,
        elems: &mut Vec<usize>,
        out: &mut Vec<LinearExtension>,
    ) {
        if elems.len() == self.p {
            let word = elems.iter().map(|&e| self.omega[e - 1]).collect();
            out.push(LinearExtension {
                word,
                elems: elems.clone(),
            });
            return;
        }
        for x in 1..=self.p {
            if used[x - 1] {
                continue;
            }
            // minimal among the unused elements
            if (1..=self.p).any(|y| !used[y - 1] && self.less(y, x)) {
                continue;
            }
            used[x - 1] = true;
            elems.push(x);
            self.extend_rec(used, elems, out);
            elems.pop();
            used[x - 1] = false;
        }
    }

    /// The complementary labeling `p + 1 - omega(i)` on the same relation.
    pub fn complement_labeling(&self) -> Result<Self> {
        if !self.is_proper() {
            return Err(Error::ImproperLabeling);
        }
        let labels = self
            .omega
            .iter()
            .map(|&l| self.p as u32 + 1 - l)
            .collect();
        Ok(LabeledPoset {
            p: self.p,
            below: self.below.clone(),
            omega: labels,
        })
    }

    /// Natural, strict, or mixed along covering pairs; antichains are natural.
    pub fn classify_labeling(&self) -> LabelingKind {
        let covers = self.cover_pairs();
        let ascending = covers
            .iter()
            .all(|&(x, y)| self.label(x) <= self.label(y));
        if ascending {
            return LabelingKind::Natural;
        }
        let descending = covers
            .iter()
            .all(|&(x, y)| self.label(x) > self.label(y));
        if descending {
            LabelingKind::Strict
        } else {
            LabelingKind::Mixed
        }
    }

    /// Side-by-side union; the second poset's elements are renumbered to
    /// `pA+1 .. pA+pB`. The label images must be disjoint.
    pub fn disjoint_union(&self, other: &LabeledPoset) -> Result<Self> {
        for &a in &self.omega {
            if other.omega.contains(&a) {
                return Err(Error::LabelClash);
            }
        }
        let p = self.p + other.p;
        let mut below = vec![vec![false; p]; p];
        for i in 0..self.p {
            below[i][..self.p].copy_from_slice(&self.below[i]);
        }
        for i in 0..other.p {
            for j in 0..other.p {
                below[self.p + i][self.p + j] = other.below[i][j];
            }
        }
        let mut omega = self.omega.clone();
        omega.extend_from_slice(&other.omega);
        Ok(LabeledPoset { p, below, omega })
    }

    /// All order ideals, sorted by size then lexicographically.
    pub fn order_ideals(&self) -> Vec<OrderIdeal> {
        assert!(self.p <= 24, "order ideal scan limited to p <= 24");
        let mut out = Vec::new();
        'mask: for mask in 0u32..(1 << self.p) {
            for x in 0..self.p {
                if mask >> x & 1 == 1 {
                    for y in 0..self.p {
                        if self.below[y][x] && mask >> y & 1 == 0 {
                            continue 'mask;
                        }
                    }
                }
            }
            let members: Vec<usize> = (0..self.p).filter(|&x| mask >> x & 1 == 1).map(|x| x + 1).collect();
            out.push(OrderIdeal { members });
        }
        out.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
        out
    }

    /// All maximal chains as element sequences (minimal to maximal).
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        if self.p == 0 {
            return vec![Vec::new()];
        }
        let covers = self.cover_pairs();
        let mut out = Vec::new();
        for start in 1..=self.p {
            if (1..=self.p).any(|y| self.less(y, start)) {
                continue;
            }
            let mut chain = vec![start];
            self.chains_rec(&covers, &mut chain, &mut out);
        }
        out
    }

    fn chains_rec(&self, covers: &[(usize, usize)], chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().unwrap();
        let nexts: Vec<usize> = covers
            .iter()
            .filter(|&&(x, _)| x == last)
            .map(|&(_, y)| y)
            .collect();
        if nexts.is_empty() {
            out.push(chain.clone());
            return;
        }
        for y in nexts {
            chain.push(y);
            self.chains_rec(covers, chain, out);
            chain.pop();
        }
    }

    /// Common length (edge count) of every maximal chain, if it exists.
    pub fn graded_chain_length(&self) -> Option<usize> {
        let chains = self.maximal_chains();
        let lengths: Vec<usize> = chains.iter().map(|c| c.len().saturating_sub(1)).collect();
        match lengths.split_first() {
            None => Some(0),
            Some((&first, rest)) => {
                if rest.iter().all(|&l| l == first) {
                    Some(first)
                } else {
                    None
                }
            }
        }
    }
}

/// Two labelings of the same relation are equivalent when they induce the
/// same strict/weak pattern on every covering pair.
pub fn labelings_equivalent(poset: &LabeledPoset, w1: &[u32], w2: &[u32]) -> bool {
    poset.cover_pairs().iter().all(|&(x, y)| {
        (w1[x - 1] > w1[y - 1]) == (w2[x - 1] > w2[y - 1])
    })
}

/// Cell poset of the skew shape `outer/inner`, natural row-major labeling.
/// Cell (i, j) precedes (i', j') when i <= i' and j <= j'.
pub fn shape_to_poset(outer: &[u32], inner: &[u32]) -> Result<LabeledPoset> {
    validate_shape(outer, inner)?;
    let cells = shape_cells(outer, inner);
    let m = cells.len();
    let mut covers = Vec::new();
    for (a, &(i1, j1)) in cells.iter().enumerate() {
        for (b, &(i2, j2)) in cells.iter().enumerate() {
            if a != b && i1 <= i2 && j1 <= j2 && (i2 - i1) + (j2 - j1) == 1 {
                covers.push((a + 1, b + 1));
            }
        }
    }
    LabeledPoset::from_covers(m, &covers, None)
}

/// Cells of a skew diagram in row-major reading order (1-based rows and columns).
pub fn shape_cells(outer: &[u32], inner: &[u32]) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &o) in outer.iter().enumerate() {
        let start = inner.get(i).cloned().unwrap_or(0);
        for j in start + 1..=o {
            cells.push((i + 1, j as usize));
        }
    }
    cells
}

pub fn validate_shape(outer: &[u32], inner: &[u32]) -> Result<()> {
    if inner.len() > outer.len() {
        return Err(Error::Shape("inner has more rows than outer".into()));
    }
    if outer.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Shape("outer not weakly decreasing".into()));
    }
    if inner.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Shape("inner not weakly decreasing".into()));
    }
    for (i, &v) in inner.iter().enumerate() {
        if v > outer[i] {
            return Err(Error::Shape("inner not contained in outer".into()));
        }
    }
    Ok(())
}

/// JSON surface: `{"p": n, "covers": [[x,y],...], "labels": [l1,...,lp]}`.
/// Missing labels mean the natural labeling `1..p`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetSpec {
    pub p: usize,
    #[serde(default)]
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u32>>,
}

impl PosetSpec {
    pub fn to_poset(&self) -> Result<LabeledPoset> {
        LabeledPoset::from_covers(self.p, &self.covers, self.labels.clone())
    }

    pub fn from_poset(poset: &LabeledPoset) -> Self {
        PosetSpec {
            p: poset.size(),
            covers: poset.cover_pairs(),
            labels: Some(poset.omega().to_vec()),
        }
    }
}
