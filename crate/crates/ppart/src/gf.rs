//! The enumerative core: descent generating functions over linear extensions,
//! bounded and unbounded partition generating functions, order polynomials,
//! alpha/beta descent-set tables, reciprocity, shuffles, and the multiset
//! (Simon Newcomb) generating function with its classical specializations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::descent_statistics;
use crate::poly::{
    binomial_in_m, q_binomial_poly, q_poch, t_poch, BiPoly, IntPoly, Laurent,
    QRational, RatFn, RatPoly,
};
use crate::poset::LabeledPoset;

/// Sum of t^des q^maj over the linear extensions of a labeled poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentGF {
    pub poly: BiPoly,
    pub p: usize,
}

impl DescentGF {
    /// W_s: the q-polynomial summing q^maj over extensions with s descents.
    pub fn w_slice(&self, s: usize) -> IntPoly {
        self.poly.t_slice(s as u32)
    }

    /// Number of linear extensions (the value at t = q = 1).
    pub fn extension_count(&self) -> BigInt {
        self.poly.eval_one_one()
    }

    /// Counts of extensions by descent number (coefficients of the W-polynomial).
    pub fn descent_counts(&self) -> Vec<BigInt> {
        let max = self.poly.max_t_degree();
        (0..=max).map(|s| self.w_slice(s as usize).eval_one()).collect()
    }

    /// The W-polynomial Σ t^{des} at q = 1.
    pub fn w_polynomial(&self) -> IntPoly {
        self.poly.eval_q_one()
    }
}

pub fn descent_gf(poset: &LabeledPoset) -> DescentGF {
    let mut poly = BiPoly::zero();
    for ext in poset.linear_extensions() {
        let stats = descent_statistics(&ext.word);
        poly.add_term(stats.des as u32, stats.maj as u32, BigInt::one());
    }
    if poset.size() == 0 {
        poly = BiPoly::one();
    }
    DescentGF {
        poly,
        p: poset.size(),
    }
}

/// Generating function by part sum for partitions with parts at most m:
/// Σ_π q^maj(π) · qbinom(p + m − des(π), p).
pub fn u_m(poset: &LabeledPoset, m: u32) -> IntPoly {
    let p = poset.size();
    let mut out = IntPoly::zero();
    for ext in poset.linear_extensions() {
        let stats = descent_statistics(&ext.word);
        let binom = q_binomial_poly(p as i64 + m as i64 - stats.des as i64, p as i64);
        out = &out + &(&binom * &IntPoly::monomial(stats.maj, BigInt::one()));
    }
    out
}

/// The same sum at an arbitrary (possibly negative) bound, as a rational
/// expression in q built from negative-argument q-binomial products.
pub fn u_m_ratfn(poset: &LabeledPoset, m: i64) -> RatFn {
    let p = poset.size() as i64;
    // every q-binomial in the sum has denominator (q;q)_p, so the whole sum
    // can be assembled over that one denominator
    let mut num = Laurent::zero();
    for ext in poset.linear_extensions() {
        let stats = descent_statistics(&ext.word);
        let n = p + m - stats.des as i64;
        let mut term = Laurent::monomial(stats.maj as i64, BigInt::one());
        for i in 0..p {
            term = &term * &Laurent::one_minus_q(n - i);
        }
        num = &num + &term;
    }
    let mut den = Laurent::one();
    for i in 1..=p {
        den = &den * &Laurent::one_minus_q(i);
    }
    RatFn::ratio(num, den)
}

/// Unbounded generating function: Σ_π q^maj(π) over (1−q)(1−q²)⋯(1−q^p).
pub fn u_gf(poset: &LabeledPoset) -> QRational {
    let p = poset.size();
    let mut num = IntPoly::zero();
    for ext in poset.linear_extensions() {
        let stats = descent_statistics(&ext.word);
        num = &num + &IntPoly::monomial(stats.maj, BigInt::one());
    }
    if p == 0 {
        num = IntPoly::one();
    }
    QRational::new(BiPoly::from_q_poly(&num), q_poch(p as u32))
        .expect("pochhammer factors are valid")
}

/// Order polynomial: Σ_π C(m − 1 − des(π) + p, p), a polynomial in m with
/// rational coefficients. Its value at m counts partitions with parts < m.
pub fn order_polynomial(poset: &LabeledPoset) -> RatPoly {
    let p = poset.size();
    let mut out = RatPoly::zero();
    for ext in poset.linear_extensions() {
        let stats = descent_statistics(&ext.word);
        out = &out + &binomial_in_m(-1 - stats.des as i64 + p as i64, p);
    }
    if p == 0 {
        out = RatPoly::one();
    }
    out
}

/// Descent-set table: beta(S) counts extensions with descent set exactly S,
/// alpha(S) those with descent set contained in S.
#[derive(Clone, Debug)]
pub struct AlphaBeta {
    pub p: usize,
    beta: BTreeMap<Vec<usize>, u64>,
}

impl AlphaBeta {
    pub fn beta(&self, s: &[usize]) -> u64 {
        self.beta.get(s).copied().unwrap_or(0)
    }

    pub fn alpha(&self, s: &[usize]) -> u64 {
        subsets(s).map(|t| self.beta(&t)).sum()
    }

    /// All descent sets with nonzero beta, in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = (&Vec<usize>, u64)> {
        self.beta.iter().map(|(s, &c)| (s, c))
    }

    /// beta(S) = Σ_{T ⊆ S} (−1)^{|S−T|} alpha(T) for every S ⊆ [p−1].
    pub fn inclusion_exclusion_consistent(&self) -> bool {
        for s in subsets(&(1..self.p).collect::<Vec<_>>()) {
            let mut signed: i64 = 0;
            for t in subsets(&s) {
                let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
                signed += sign * self.alpha(&t) as i64;
            }
            if signed != self.beta(&s) as i64 {
                return false;
            }
        }
        true
    }
}

fn subsets(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u32..1 << s.len()).map(move |mask| {
        s.iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

pub fn alpha_beta(poset: &LabeledPoset) -> AlphaBeta {
    let mut beta = BTreeMap::new();
    for ext in poset.linear_extensions() {
        let stats = descent_statistics(&ext.word);
        let key: Vec<usize> = stats.descent_set.iter().copied().collect();
        *beta.entry(key).or_insert(0) += 1;
    }
    AlphaBeta {
        p: poset.size(),
        beta,
    }
}

/// Independent count of alpha(S) as chains of order ideals with the sizes in
/// S, where each successive difference sorts into increasing label order
/// consistently with the partial order.
pub fn alpha_via_ideal_chains(poset: &LabeledPoset, s: &[usize]) -> u64 {
    let p = poset.size();
    debug_assert!(s.windows(2).all(|w| w[0] < w[1]));
    let ideals: Vec<Vec<usize>> = poset
        .order_ideals()
        .into_iter()
        .map(|i| i.members)
        .collect();
    let segment_ok = |prev: &[usize], next: &[usize]| {
        let diff: Vec<usize> = next.iter().copied().filter(|x| !prev.contains(x)).collect();
        diff.iter().all(|&x| {
            diff.iter().all(|&y| {
                !poset.less(x, y) || poset.label(x) < poset.label(y)
            })
        })
    };
    let sizes: Vec<usize> = s.iter().copied().chain(std::iter::once(p)).collect();
    let full: Vec<usize> = (1..=p).collect();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    let mut count_per: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    count_per.insert(Vec::new(), 1);
    for &size in &sizes {
        let mut next_counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for ideal in ideals.iter().filter(|i| i.len() == size) {
            for prev in &frontier {
                if prev.iter().all(|x| ideal.contains(x)) && segment_ok(prev, ideal) {
                    if let Some(&c) = count_per.get(prev) {
                        *next_counts.entry(ideal.clone()).or_insert(0) += c;
                    }
                }
            }
        }
        frontier = next_counts.keys().cloned().collect();
        count_per = next_counts;
    }
    count_per.get(&full).copied().unwrap_or(0)
}

/// Outcome of the four reciprocity identities relating a labeling and its
/// complement.
#[derive(Clone, Debug)]
pub struct ReciprocityReport {
    /// (a) Ω(P,ω̄;m) = (−1)^p Ω(P,ω;−m) as polynomials.
    pub order_negation_holds: bool,
    /// (b) q^p·U_m(ω̄) = (−1)^p·U_{−(m+2)}(ω; 1/q): bounds m that fail.
    pub bounded_failures: Vec<i64>,
    /// (c) q^p·U(ω̄;q) = (−1)^p·U(ω;1/q) as rational expressions.
    pub rational_holds: bool,
    /// (d) graded, naturally labeled case, when applicable.
    pub graded: Option<GradedSymmetry>,
}

#[derive(Clone, Debug)]
pub struct GradedSymmetry {
    /// Common length (number of edges) of every maximal chain.
    pub chain_length: usize,
    /// Ω(P,ω;m) = Ω(P,ω̄;l+m) as polynomials.
    pub shift_holds: bool,
    /// Candidate offsets n for which #{des = s} = #{des = n − l − s} for all s.
    pub descent_symmetry_n: Vec<usize>,
}

impl ReciprocityReport {
    pub fn all_hold(&self) -> bool {
        self.order_negation_holds
            && self.bounded_failures.is_empty()
            && self.rational_holds
            && self
                .graded
                .as_ref()
                .map(|g| g.shift_holds && !g.descent_symmetry_n.is_empty())
                .unwrap_or(true)
    }
}

pub fn reciprocity_check(poset: &LabeledPoset, m_max: u32) -> Result<ReciprocityReport> {
    let p = poset.size();
    let comp = poset.complement_labeling()?;
    let sign = if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let rat_sign = BigRational::from_integer(sign.clone());

    let omega = order_polynomial(poset);
    let omega_bar = order_polynomial(&comp);
    let order_negation_holds = omega_bar == omega.compose_neg().scale(&rat_sign);

    let mut bounded_failures = Vec::new();
    for m in 0..=m_max as i64 {
        let lhs = u_m_ratfn(&comp, m).mul_q_power(p as i64);
        let rhs = u_m_ratfn(poset, -(m + 2)).invert_var().scale(sign.clone());
        if !lhs.equals(&rhs) {
            bounded_failures.push(m);
        }
    }

    let u_as_ratfn = |poset: &LabeledPoset| {
        let mut num = Laurent::zero();
        for ext in poset.linear_extensions() {
            let stats = descent_statistics(&ext.word);
            num.add_term(stats.maj as i64, BigInt::one());
        }
        let mut den = Laurent::one();
        for i in 1..=p as i64 {
            den = &den * &Laurent::one_minus_q(i);
        }
        RatFn::ratio(num, den)
    };
    let lhs = u_as_ratfn(&comp).mul_q_power(p as i64);
    let rhs = u_as_ratfn(poset).invert_var().scale(sign);
    let rational_holds = lhs.equals(&rhs);

    let graded = match (poset.graded_chain_length(), poset.classify_labeling()) {
        (Some(l), crate::poset::LabelingKind::Natural) if p > 0 => {
            let shift_holds = omega == omega_bar.compose_shift(l as i64);
            let counts = descent_gf(poset).descent_counts();
            let count = |s: i64| -> BigInt {
                if s < 0 || s as usize >= counts.len() {
                    BigInt::from(0)
                } else {
                    counts[s as usize].clone()
                }
            };
            let mut descent_symmetry_n = Vec::new();
            for n in [p.saturating_sub(1), p] {
                let ok = (0..counts.len() as i64)
                    .all(|s| count(s) == count(n as i64 - l as i64 - s));
                if ok {
                    descent_symmetry_n.push(n);
                }
            }
            Some(GradedSymmetry {
                chain_length: l,
                shift_holds,
                descent_symmetry_n,
            })
        }
        _ => None,
    };

    Ok(ReciprocityReport {
        order_negation_holds,
        bounded_failures,
        rational_holds,
        graded,
    })
}

/// Per-s outcome of the shuffle product formula for W_s of a disjoint union.
#[derive(Clone, Debug)]
pub struct ShuffleReport {
    /// (s, direct W_s, shuffle-formula W_s) for every failing s.
    pub failures: Vec<(usize, IntPoly, IntPoly)>,
}

impl ShuffleReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// W_s(P+Q) = Σ_{i,j≤s} q^{(s−i)(s−j)} qbinom(|P|+j−i, s−i) qbinom(|Q|+i−j, s−j) W_i(P) W_j(Q).
pub fn shuffle_identity(a: &LabeledPoset, b: &LabeledPoset) -> Result<ShuffleReport> {
    let union = a.disjoint_union(b)?;
    let w_union = descent_gf(&union);
    let wa = descent_gf(a);
    let wb = descent_gf(b);
    let (pa, pb) = (a.size() as i64, b.size() as i64);
    let mut failures = Vec::new();
    let s_max = union.size().saturating_sub(1);
    for s in 0..=s_max {
        let direct = w_union.w_slice(s);
        let mut formula = IntPoly::zero();
        for i in 0..=s {
            let wi = wa.w_slice(i);
            if wi.is_zero() {
                continue;
            }
            for j in 0..=s {
                let wj = wb.w_slice(j);
                if wj.is_zero() {
                    continue;
                }
                let left = q_binomial_poly(pa + j as i64 - i as i64, (s - i) as i64);
                let right = q_binomial_poly(pb + i as i64 - j as i64, (s - j) as i64);
                let power = (s - i) * (s - j);
                let term = &(&(&left * &right) * &(&wi * &wj))
                    * &IntPoly::monomial(power, BigInt::one());
                formula = &formula + &term;
            }
        }
        if direct != formula {
            failures.push((s, direct, formula));
        }
    }
    Ok(ShuffleReport { failures })
}

/// Descent generating function of a multiset (labeled union of constant
/// chains) together with the verification of its defining series identity.
#[derive(Clone, Debug)]
pub struct MacmahonReport {
    pub gf: BiPoly,
    /// Σ_{n ≤ t_max} t^n Π_i qbinom(n+p_i, p_i) matches gf / (t;q)_{p+1}.
    pub identity_holds: bool,
}

pub fn macmahon_multiset(p_parts: &[u32], t_max: usize) -> Result<MacmahonReport> {
    let p: u32 = p_parts.iter().sum();
    if p > 10 {
        return Err(Error::SizeLimit(format!(
            "multiset size {} exceeds the supported bound 10",
            p
        )));
    }
    let mut union = LabeledPoset::antichain(0);
    for (idx, &part) in p_parts.iter().enumerate() {
        if part == 0 {
            return Err(Error::Invalid("multiset parts must be positive".into()));
        }
        let chain = LabeledPoset::constant_chain(part as usize, idx as u32 + 1);
        union = union.disjoint_union(&chain)?;
    }
    let gf = descent_gf(&union).poly;

    let q_max = t_max * p as usize;
    let grid = QRational::new(gf.clone(), t_poch(p + 1))?.series(t_max, q_max);
    let mut identity_holds = true;
    for n in 0..=t_max {
        let mut product = IntPoly::one();
        for &part in p_parts {
            product = &product * &q_binomial_poly(n as i64 + part as i64, part as i64);
        }
        for qd in 0..=q_max {
            if product.coeff(qd) != grid[n][qd] {
                identity_holds = false;
            }
        }
        if product.degree().unwrap_or(0) > q_max {
            identity_holds = false;
        }
    }
    Ok(MacmahonReport { gf, identity_holds })
}
