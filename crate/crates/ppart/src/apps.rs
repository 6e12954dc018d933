//! Classical applications: chromatic polynomials via acyclic orientations,
//! Young-chain enumeration with the determinant formula, Stirling numerators,
//! real-rootedness of W-polynomials, multipartite permutation tuples, and
//! lattice-point counts in the two poset polytopes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{descent_gf, order_polynomial};
use crate::perm::descent_statistics;
use crate::poly::{binom, real_rooted, IntPoly, RatPoly};
use crate::poset::{validate_shape, LabeledPoset};
use crate::qsym::MonomialExpansion;

/// An undirected graph without loops or multiple edges, vertices 1..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// JSON form of a graph: {"n": 3, "edges": [[1,2],[2,3]]}.
#[derive(Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// JSON form of a skew shape: {"outer": [3,2], "inner": [1,0]}.
#[derive(Serialize, Deserialize)]
pub struct ShapeSpec {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Invalid(format!("loop at vertex {}", u)));
            }
            if u < 1 || u > n || v < 1 || v > n {
                return Err(Error::Invalid(format!("edge ({}, {}) out of range", u, v)));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Invalid(format!("repeated edge ({}, {})", u, v)));
            }
        }
        let edges = seen.into_iter().collect();
        Ok(SimpleGraph { n, edges })
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        Self::new(spec.n, &spec.edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        SimpleGraph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|u| (u, u + 1)).collect();
        SimpleGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// All acyclic orientations as lists of directed edges (tail, head).
    pub fn acyclic_orientations(&self) -> Vec<Vec<(usize, usize)>> {
        let e = self.edges.len();
        let mut out = Vec::new();
        for mask in 0u64..1 << e {
            let oriented: Vec<(usize, usize)> = self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            if is_acyclic(self.n, &oriented) {
                out.push(oriented);
            }
        }
        out
    }
}

fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    topological_order(n, arcs).is_some()
}

fn topological_order(n: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n + 1];
    for &(_, v) in arcs {
        indeg[v] += 1;
    }
    let mut queue: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        order.push(v);
        for &(a, b) in arcs {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    queue.push(b);
                }
            }
        }
    }
    if order.len() == n {
        Some(order)
    } else {
        None
    }
}

/// The poset of one acyclic orientation with a strict labeling (labels
/// decrease along every arc), so an order-reversing strict map is exactly a
/// coloring proper along the orientation.
fn orientation_poset(n: usize, arcs: &[(usize, usize)]) -> LabeledPoset {
    let order = topological_order(n, arcs).expect("orientation must be acyclic");
    let mut labels = vec![0u32; n];
    for (pos, &v) in order.iter().enumerate() {
        labels[v - 1] = (n - pos) as u32;
    }
    LabeledPoset::from_covers(n, arcs, Some(labels)).expect("acyclic arcs form a poset")
}

/// Chromatic polynomial as the sum of strict order polynomials over acyclic
/// orientations.
pub fn chromatic_polynomial(graph: &SimpleGraph) -> Result<RatPoly> {
    if graph.vertex_count() > 8 {
        return Err(Error::SizeLimit(format!(
            "chromatic computation limited to 8 vertices, got {}",
            graph.vertex_count()
        )));
    }
    let mut chi = RatPoly::zero();
    for arcs in graph.acyclic_orientations() {
        let poset = orientation_poset(graph.vertex_count(), &arcs);
        chi = &chi + &order_polynomial(&poset);
    }
    if graph.vertex_count() == 0 {
        chi = RatPoly::one();
    }
    Ok(chi)
}

/// Independent oracle: count proper colorings with colors 1..=colors.
pub fn proper_coloring_count(graph: &SimpleGraph, colors: u32) -> BigInt {
    let n = graph.vertex_count();
    let mut count = BigInt::zero();
    let mut assignment = vec![0u32; n];
    color_rec(graph, colors, 0, &mut assignment, &mut count);
    count
}

fn color_rec(
    graph: &SimpleGraph,
    colors: u32,
    next: usize,
    assignment: &mut Vec<u32>,
    count: &mut BigInt,
) {
    if next == graph.vertex_count() {
        *count += 1;
        return;
    }
    'colors: for c in 1..=colors {
        for &(u, v) in graph.edges() {
            let other = if u == next + 1 {
                v
            } else if v == next + 1 {
                u
            } else {
                continue;
            };
            if other <= next && assignment[other - 1] == c {
                continue 'colors;
            }
        }
        assignment[next] = c;
        color_rec(graph, colors, next + 1, assignment, count);
    }
}

/// (−1)^p χ(−1) compared with the number of acyclic orientations.
pub fn chromatic_reciprocity_holds(graph: &SimpleGraph) -> Result<bool> {
    let chi = chromatic_polynomial(graph)?;
    let p = graph.vertex_count();
    let sign = if p % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let lhs = chi.eval_int(-1) * sign;
    Ok(lhs == BigRational::from_integer(graph.acyclic_orientations().len().into()))
}

/// Young-chain (standard skew tableau) enumeration by returns, against the
/// determinant and multichain formulas.
#[derive(Clone, Debug)]
pub struct KrewerasReport {
    /// theta[r] = number of standard tableaux of the shape with r returns.
    pub theta: Vec<BigInt>,
    /// w[r] = determinant count of multichains of length r, r = 0..=t_max.
    pub w: Vec<BigInt>,
    /// Σ theta_r t^r / (1−t)^{η−η′+1} = Σ w_r t^r through t_max.
    pub identity_holds: bool,
    /// Determinant values agree with brute multichain enumeration.
    pub determinant_matches_brute: bool,
}

pub fn kreweras(outer: &[u32], inner: &[u32], t_max: usize) -> Result<KrewerasReport> {
    validate_shape(outer, inner)?;
    let cells: u32 = outer
        .iter()
        .zip(inner)
        .map(|(&o, &i)| o - i)
        .sum();
    if cells > 12 {
        return Err(Error::SizeLimit(format!(
            "shape has {} cells; the chain scan is limited to 12",
            cells
        )));
    }

    // theta by depth-first growth of Young chains
    let mut theta = vec![BigInt::zero(); cells as usize + 1];
    let mut current: Vec<u32> = inner.to_vec();
    let mut rows: Vec<usize> = Vec::new();
    theta_rec(outer, &mut current, &mut rows, &mut theta);
    while theta.len() > 1 && theta.last().map(|c| c.is_zero()).unwrap_or(false) {
        theta.pop();
    }

    let w: Vec<BigInt> = (0..=t_max as i64).map(|r| kreweras_determinant(outer, inner, r)).collect();

    let eta: i64 = outer.iter().map(|&x| x as i64).sum();
    let eta_p: i64 = inner.iter().map(|&x| x as i64).sum();
    let d = eta - eta_p;
    let mut identity_holds = true;
    for r in 0..=t_max {
        // coefficient of t^r in (Σ theta_k t^k) / (1−t)^{d+1}
        let mut lhs = BigInt::zero();
        for (k, coeff) in theta.iter().enumerate() {
            if k > r {
                break;
            }
            lhs += coeff * binom((r - k) as i64 + d, d);
        }
        if lhs != w[r] {
            identity_holds = false;
        }
    }

    let mut determinant_matches_brute = true;
    for (r, det) in w.iter().enumerate() {
        if *det != multichain_count(outer, inner, r) {
            determinant_matches_brute = false;
        }
    }

    Ok(KrewerasReport {
        theta,
        w,
        identity_holds,
        determinant_matches_brute,
    })
}

fn theta_rec(outer: &[u32], current: &mut Vec<u32>, rows: &mut Vec<usize>, theta: &mut Vec<BigInt>) {
    if current.iter().zip(outer).all(|(c, o)| c == o) {
        // a return records a strict drop in row index between consecutive
        // entries: the convention under which the w-series identity holds
        let returns = rows.windows(2).filter(|w| w[0] > w[1]).count();
        theta[returns] += 1;
        return;
    }
    for i in 0..current.len() {
        let can_grow =
            current[i] < outer[i] && (i == 0 || current[i] < current[i - 1]);
        if can_grow {
            current[i] += 1;
            rows.push(i + 1);
            theta_rec(outer, current, rows, theta);
            rows.pop();
            current[i] -= 1;
        }
    }
}

/// det( C(y_i − y'_j + r, i − j + r) ), with C(a,b) = 0 for b < 0 or a < b.
pub fn kreweras_determinant(outer: &[u32], inner: &[u32], r: i64) -> BigInt {
    let h = outer.len();
    let mat: Vec<Vec<BigInt>> = (0..h)
        .map(|i| {
            (0..h)
                .map(|j| {
                    binom(
                        outer[i] as i64 - inner[j] as i64 + r,
                        i as i64 - j as i64 + r,
                    )
                })
                .collect()
        })
        .collect();
    determinant(&mat)
}

fn determinant(mat: &[Vec<BigInt>]) -> BigInt {
    let h = mat.len();
    if h == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for i in 0..h {
        if mat[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = (0..h)
            .filter(|&k| k != i)
            .map(|k| mat[k][1..].to_vec())
            .collect();
        let cofactor = &mat[i][0] * determinant(&minor);
        if i % 2 == 0 {
            total += cofactor;
        } else {
            total -= cofactor;
        }
    }
    total
}

/// Brute count of multichains inner ≤ Z_1 ≤ ⋯ ≤ Z_r ≤ outer through the
/// lattice of partitions between the two shapes.
pub fn multichain_count(outer: &[u32], inner: &[u32], r: usize) -> BigInt {
    let between = partitions_between(outer, inner);
    if r == 0 {
        return BigInt::one();
    }
    // counts[z] = number of multichains inner ≤ Z_1 ≤ ⋯ ≤ Z_k = z
    let leq = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut counts: Vec<BigInt> = between
        .iter()
        .map(|z| {
            if leq(inner, z) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    for _ in 1..r {
        counts = between
            .iter()
            .map(|z| {
                between
                    .iter()
                    .zip(&counts)
                    .filter(|(prev, _)| leq(prev, z))
                    .map(|(_, c)| c)
                    .sum()
            })
            .collect();
    }
    between
        .iter()
        .zip(&counts)
        .filter(|(z, _)| leq(z, outer))
        .map(|(_, c)| c)
        .sum()
}

fn partitions_between(outer: &[u32], inner: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(outer.len());
    partitions_rec(outer, inner, &mut current, &mut out);
    out
}

fn partitions_rec(outer: &[u32], inner: &[u32], current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let i = current.len();
    if i == outer.len() {
        out.push(current.clone());
        return;
    }
    let hi = if i == 0 { outer[i] } else { outer[i].min(current[i - 1]) };
    for v in inner[i]..=hi {
        current.push(v);
        partitions_rec(outer, inner, current, out);
        current.pop();
    }
}

/// Numerator B_k(t) of Σ_n S(k+n, n) t^n = B_k(t)/(1−t)^{2k+1}.
pub fn stirling_numerator(k: usize) -> Result<IntPoly> {
    if k > 6 {
        return Err(Error::SizeLimit(format!(
            "Stirling numerator limited to k <= 6, got {}",
            k
        )));
    }
    let degree = 2 * k;
    // S(n, j) for n up to k + degree
    let n_max = k + degree;
    let mut table = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
    table[0][0] = BigInt::one();
    for n in 1..=n_max {
        for j in 1..=n {
            let carry = &table[n - 1][j] * BigInt::from(j as u64);
            table[n][j] = &table[n - 1][j - 1] + carry;
        }
    }
    let stirling = |n: usize, j: usize| -> BigInt { table[n][j].clone() };
    let mut coeffs = Vec::with_capacity(degree + 1);
    for j in 0..=degree {
        let mut b = BigInt::zero();
        for n in 0..=j {
            let sign = if (j - n) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            b += stirling(k + n, n) * binom(2 * k as i64 + 1, (j - n) as i64) * sign;
        }
        coeffs.push(b);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// W-polynomial of a labeled poset together with its real-rootedness
/// certificate.
pub fn neggers_test(poset: &LabeledPoset) -> Result<(IntPoly, bool)> {
    let w = descent_gf(poset).w_polynomial();
    let rooted = real_rooted(&w)?;
    Ok((w, rooted))
}

/// Λ_p over s coordinates: sum over s-tuples of permutations of [p] with
/// identity product of Π_j q_j^{maj(π_j)}.
pub fn multipartite_lambda(p: usize, s: usize) -> Result<MonomialExpansion> {
    if p > 5 || s > 3 {
        return Err(Error::SizeLimit(format!(
            "permutation tuple scan limited to p <= 5, s <= 3, got p={}, s={}",
            p, s
        )));
    }
    if s == 0 {
        return Err(Error::Invalid("need at least one coordinate".into()));
    }
    let perms = permutations(p);
    let mut out = MonomialExpansion::zero(s);
    let mut chosen: Vec<usize> = Vec::new();
    lambda_rec(&perms, s, &mut chosen, &mut out);
    Ok(out)
}

fn lambda_rec(
    perms: &[Vec<u32>],
    s: usize,
    chosen: &mut Vec<usize>,
    out: &mut MonomialExpansion,
) {
    if chosen.len() == s - 1 {
        // the last permutation is forced: inverse of the product so far
        let p = perms[0].len();
        let mut product: Vec<u32> = (1..=p as u32).collect();
        for &idx in chosen.iter() {
            product = compose(&perms[idx], &product);
        }
        let last = inverse(&product);
        let mut expts = Vec::with_capacity(s);
        for &idx in chosen.iter() {
            expts.push(descent_statistics(&perms[idx]).maj as u32);
        }
        expts.push(descent_statistics(&last).maj as u32);
        out.add_term(expts, BigInt::one());
        return;
    }
    for idx in 0..perms.len() {
        chosen.push(idx);
        lambda_rec(perms, s, chosen, out);
        chosen.pop();
    }
}

/// All permutations of [p] as words, in lexicographic order.
pub fn permutations(p: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(p);
    let mut used = vec![false; p + 1];
    perm_rec(p, &mut word, &mut used, &mut out);
    out
}

fn perm_rec(p: usize, word: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
    if word.len() == p {
        out.push(word.clone());
        return;
    }
    for v in 1..=p {
        if !used[v] {
            used[v] = true;
            word.push(v as u32);
            perm_rec(p, word, used, out);
            word.pop();
            used[v] = false;
        }
    }
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&i| a[i as usize - 1]).collect()
}

fn inverse(a: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len()];
    for (i, &v) in a.iter().enumerate() {
        out[v as usize - 1] = i as u32 + 1;
    }
    out
}

/// Lattice points of the m-dilates of the order polytope and the chain
/// polytope of a naturally labeled poset.
pub fn polytope_counts(poset: &LabeledPoset, m: u32) -> Result<(BigInt, BigInt)> {
    if poset.classify_labeling() != crate::poset::LabelingKind::Natural {
        return Err(Error::NotNatural);
    }
    if poset.size() > 6 || m > 5 {
        return Err(Error::SizeLimit(format!(
            "polytope scan limited to p <= 6, m <= 5, got p={}, m={}",
            poset.size(),
            m
        )));
    }
    let p = poset.size();
    let chains = poset.maximal_chains();
    let mut order_count = BigInt::zero();
    let mut chain_count = BigInt::zero();
    let mut point = vec![0u32; p];
    scan_points(p, m, 0, &mut point, &mut |point: &[u32]| {
        let in_order = (1..=p).all(|x| {
            (1..=p).all(|y| !poset.less(x, y) || point[x - 1] >= point[y - 1])
        });
        if in_order {
            order_count += 1;
        }
        let in_chain = chains.iter().all(|chain| {
            chain.iter().map(|&x| point[x - 1] as u64).sum::<u64>() <= m as u64
        });
        if in_chain {
            chain_count += 1;
        }
    });
    Ok((order_count, chain_count))
}

fn scan_points(p: usize, m: u32, next: usize, point: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if next == p {
        f(point);
        return;
    }
    for v in 0..=m {
        point[next] = v;
        scan_points(p, m, next + 1, point, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{all_natural_posets, vee_poset};
    use num_traits::Signed;
    use crate::gf::macmahon_multiset;
    use crate::poly::binomial_in_m;

    #[test]
    fn chromatic_triangle_and_path() {
        let k3 = SimpleGraph::complete(3);
        let chi = chromatic_polynomial(&k3).unwrap();
        for lam in 0..=5i64 {
            assert_eq!(
                chi.eval_int(lam),
                BigRational::from_integer((lam * (lam - 1) * (lam - 2)).into())
            );
        }
        assert_eq!(k3.acyclic_orientations().len(), 6);
        assert!(chromatic_reciprocity_holds(&k3).unwrap());

        let single = SimpleGraph::new(1, &[]).unwrap();
        assert_eq!(
            chromatic_polynomial(&single).unwrap(),
            binomial_in_m(0, 1)
        );

        let p3 = SimpleGraph::path(3);
        let chi = chromatic_polynomial(&p3).unwrap();
        for lam in 0..=5i64 {
            assert_eq!(
                chi.eval_int(lam),
                BigRational::from_integer((lam * (lam - 1) * (lam - 1)).into())
            );
        }
        assert_eq!(p3.acyclic_orientations().len(), 4);
        assert!(chromatic_reciprocity_holds(&p3).unwrap());
    }

    #[test]
    fn chromatic_matches_coloring_oracle() {
        let k4 = SimpleGraph::complete(4);
        let chi = chromatic_polynomial(&k4).unwrap();
        for lam in 0..=4u32 {
            assert_eq!(
                chi.eval_int(lam as i64),
                BigRational::from_integer(proper_coloring_count(&k4, lam))
            );
        }
        assert_eq!(k4.acyclic_orientations().len(), 24);
    }

    #[test]
    fn graph_validation() {
        assert!(SimpleGraph::new(2, &[(1, 1)]).is_err());
        assert!(SimpleGraph::new(2, &[(1, 3)]).is_err());
        assert!(SimpleGraph::new(2, &[(1, 2), (2, 1)]).is_err());
        assert!(chromatic_polynomial(&SimpleGraph::complete(9)).is_err());
    }

    #[test]
    fn kreweras_single_cell() {
        let report = kreweras(&[1], &[0], 5).unwrap();
        assert_eq!(report.theta, vec![BigInt::one()]);
        for (r, w) in report.w.iter().enumerate() {
            assert_eq!(*w, BigInt::from(r as u64 + 1));
        }
        assert!(report.identity_holds);
        assert!(report.determinant_matches_brute);
    }

    #[test]
    fn kreweras_empty_shape() {
        let report = kreweras(&[2, 1], &[2, 1], 4).unwrap();
        assert_eq!(report.theta, vec![BigInt::one()]);
        assert!(report.w.iter().all(|w| w.is_one()));
        assert!(report.identity_holds);
        assert!(report.determinant_matches_brute);
    }

    #[test]
    fn kreweras_worked_example() {
        // the chain (2,1,0)->(3,1,0)->(3,1,1)->(3,2,1)->(3,2,2) grows rows
        // 1, 3, 2, 3: one strict row drop, at entry 2
        let rows = [1usize, 3, 2, 3];
        let returns = rows.windows(2).filter(|w| w[0] > w[1]).count();
        assert_eq!(returns, 1);

        let report = kreweras(&[3, 2, 2], &[2, 1, 0], 8).unwrap();
        // eight tableaux split as 1 + 5 + 2 by return count; hand-checked
        // against the multichain counts w = 1, 10, 42, ...
        assert_eq!(
            report.theta,
            vec![BigInt::one(), BigInt::from(5), BigInt::from(2)]
        );
        assert_eq!(report.w[0], BigInt::one());
        assert_eq!(report.w[1], BigInt::from(10));
        assert_eq!(report.w[2], BigInt::from(42));
        assert!(report.identity_holds);
        assert!(report.determinant_matches_brute);
    }

    #[test]
    fn kreweras_matches_newcomb() {
        // tableaux of (6,3,2)/(3,2,0) by returns = permutations of
        // {1,1,1,2,3,3} by descents
        let report = kreweras(&[6, 3, 2], &[3, 2, 0], 6).unwrap();
        let newcomb = macmahon_multiset(&[3, 1, 2], 6).unwrap();
        let by_descents = newcomb.gf.eval_q_one();
        let max = report.theta.len().max(by_descents.coeffs().len());
        for r in 0..max {
            let theta = report
                .theta
                .get(r)
                .cloned()
                .unwrap_or_else(BigInt::zero);
            assert_eq!(theta, by_descents.coeff(r), "descent count {}", r);
        }
        assert!(report.identity_holds);
    }

    #[test]
    fn stirling_numerators() {
        assert_eq!(stirling_numerator(0).unwrap(), IntPoly::one());
        assert_eq!(stirling_numerator(1).unwrap(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(
            stirling_numerator(2).unwrap(),
            IntPoly::from_i64(&[0, 1, 2])
        );
        for k in 0..=6 {
            let b = stirling_numerator(k).unwrap();
            assert!(b.coeffs().iter().all(|c| !c.is_negative()), "B_{}", k);
        }
        assert!(stirling_numerator(7).is_err());
    }

    #[test]
    fn neggers_examples() {
        let (w, rooted) = neggers_test(&vee_poset()).unwrap();
        assert_eq!(w, IntPoly::from_i64(&[0, 2]));
        assert!(rooted);

        let (w, rooted) = neggers_test(&LabeledPoset::chain(4)).unwrap();
        assert_eq!(w, IntPoly::one());
        assert!(rooted);

        let (w, rooted) = neggers_test(&LabeledPoset::antichain(3)).unwrap();
        assert_eq!(w, IntPoly::from_i64(&[1, 4, 1]));
        assert!(rooted);
    }

    #[test]
    fn lambda_examples() {
        let l22 = multipartite_lambda(2, 2).unwrap();
        assert_eq!(l22.coeff(&[0, 0]), BigInt::one());
        assert_eq!(l22.coeff(&[1, 1]), BigInt::one());
        assert_eq!(l22.terms().count(), 2);

        let l13 = multipartite_lambda(1, 3).unwrap();
        assert_eq!(l13.coeff(&[0, 0, 0]), BigInt::one());
        assert_eq!(l13.terms().count(), 1);

        let l21 = multipartite_lambda(2, 1).unwrap();
        assert_eq!(l21.coeff(&[0]), BigInt::one());
        assert_eq!(l21.terms().count(), 1);

        assert!(multipartite_lambda(6, 2).is_err());
    }

    #[test]
    fn lambda_roselle_interpretation() {
        for p in 1..=5usize {
            let lambda = multipartite_lambda(p, 2).unwrap();
            let mut expected = MonomialExpansion::zero(2);
            for pi in permutations(p) {
                let i = descent_statistics(&pi).maj as u32;
                let j = descent_statistics(&inverse(&pi)).maj as u32;
                expected.add_term(vec![i, j], BigInt::one());
            }
            assert_eq!(lambda, expected, "p = {}", p);
        }
    }

    #[test]
    fn lambda_matches_multipartite_partition_series() {
        // coefficient of q1^n1 q2^n2 in Λ_p / ((q1;q1)_p (q2;q2)_p) counts
        // lex-decreasing p-tuples of pairs with coordinate sums (n1, n2)
        let bound = 4usize;
        for p in 1..=3usize {
            let lambda = multipartite_lambda(p, 2).unwrap();
            // series of 1/(q;q)_p to degree `bound`: partitions into at most
            // p parts (conjugate of parts <= p)
            let one_var: Vec<BigInt> = {
                let mut series = vec![BigInt::zero(); bound + 1];
                series[0] = BigInt::one();
                for part in 1..=p {
                    for d in part..=bound {
                        let carry = series[d - part].clone();
                        series[d] += carry;
                    }
                }
                series
            };
            for n1 in 0..=bound {
                for n2 in 0..=bound {
                    let mut from_lambda = BigInt::zero();
                    for (expts, c) in lambda.terms() {
                        let (i, j) = (expts[0] as usize, expts[1] as usize);
                        if i <= n1 && j <= n2 {
                            from_lambda += c * &one_var[n1 - i] * &one_var[n2 - j];
                        }
                    }
                    let brute = multipartite_partition_count(p, n1 as u32, n2 as u32);
                    assert_eq!(from_lambda, brute, "p={} ({}, {})", p, n1, n2);
                }
            }
        }
    }

    fn multipartite_partition_count(p: usize, n1: u32, n2: u32) -> BigInt {
        // tuples ((a_1,b_1) >= ... >= (a_p,b_p)) lexicographically, sums fixed
        let mut count = BigInt::zero();
        let mut parts: Vec<(u32, u32)> = Vec::new();
        fn rec(
            p: usize,
            n1: u32,
            n2: u32,
            parts: &mut Vec<(u32, u32)>,
            count: &mut BigInt,
        ) {
            if parts.len() == p {
                let s1: u32 = parts.iter().map(|x| x.0).sum();
                let s2: u32 = parts.iter().map(|x| x.1).sum();
                if s1 == n1 && s2 == n2 {
                    *count += 1;
                }
                return;
            }
            for a in 0..=n1 {
                for b in 0..=n2 {
                    if let Some(&(pa, pb)) = parts.last() {
                        if (a, b) > (pa, pb) {
                            continue;
                        }
                    }
                    parts.push((a, b));
                    rec(p, n1, n2, parts, count);
                    parts.pop();
                }
            }
        }
        rec(p, n1, n2, &mut parts, &mut count);
        count
    }

    #[test]
    fn polytope_examples() {
        let single = LabeledPoset::chain(1);
        for m in 0..=5u32 {
            let (order, chain) = polytope_counts(&single, m).unwrap();
            assert_eq!(order, BigInt::from(m + 1));
            assert_eq!(chain, BigInt::from(m + 1));
        }

        let two = LabeledPoset::chain(2);
        let (order, chain) = polytope_counts(&two, 2).unwrap();
        assert_eq!(order, BigInt::from(6));
        assert_eq!(chain, BigInt::from(6));

        let natural_vee =
            LabeledPoset::from_covers(3, &[(1, 2), (1, 3)], None).unwrap();
        let (order, chain) = polytope_counts(&natural_vee, 1).unwrap();
        assert_eq!(order, chain);

        let strict = LabeledPoset::chain(2).complement_labeling().unwrap();
        assert!(matches!(polytope_counts(&strict, 1), Err(Error::NotNatural)));
    }

    #[test]
    fn polytope_counts_match_order_polynomial() {
        for poset in all_natural_posets(4) {
            let omega = order_polynomial(&poset);
            for m in 0..=4u32 {
                let (order, chain) = polytope_counts(&poset, m).unwrap();
                assert_eq!(
                    BigRational::from_integer(order.clone()),
                    omega.eval_int(m as i64 + 1),
                    "order polytope, {:?} m={}",
                    poset,
                    m
                );
                assert_eq!(order, chain, "{:?} m={}", poset, m);
            }
        }
    }
}
