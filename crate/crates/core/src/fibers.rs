//! Fibers of the presentation map and the degrees of minimal generators of
//! the toric ideal.
//!
//! A degree-`k` fiber collects the `k`-multisets of `Omega`-indices with a
//! common product. Two factorizations are adjacent when they share a factor;
//! every connected component beyond the first needs one minimal generator of
//! degree `k`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::rc::Rc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{rho, Binomial};
use crate::error::{domain, Error, Result};
use crate::hilbert::is_2_normal;
use crate::monomial::{multiset_count, Monomial, MonomialSet, SetOrigin};

pub const DEFAULT_GUARD: u128 = 100_000_000;

/// One side of a relation: a sorted multiset of indices into `Omega`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factorization {
    omega_indices: Vec<usize>,
    product: Monomial,
}

impl Factorization {
    pub fn new(omega: &MonomialSet, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        let mut a = vec![0u32; omega.len()];
        for &i in &indices {
            if i >= omega.len() {
                return domain(format!(
                    "index {i} out of range for {} members",
                    omega.len()
                ));
            }
            a[i] += 1;
        }
        let product = rho(omega, &a)?;
        Ok(Factorization {
            omega_indices: indices,
            product,
        })
    }

    pub fn indices(&self) -> &[usize] {
        &self.omega_indices
    }

    pub fn product(&self) -> &Monomial {
        &self.product
    }

    pub fn degree(&self) -> usize {
        self.omega_indices.len()
    }

    /// The exponent vector of this factorization as an `S`-monomial.
    pub fn s_exponents(&self, mu: usize) -> Vec<u32> {
        let mut a = vec![0u32; mu];
        for &i in &self.omega_indices {
            a[i] += 1;
        }
        a
    }

    /// Whether the two index multisets intersect.
    pub fn shares_factor(&self, other: &Factorization) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.omega_indices, &other.omega_indices);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    target: Monomial,
    k: usize,
    elements: Vec<Factorization>,
}

impl Fiber {
    pub fn target(&self) -> &Monomial {
        &self.target
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Factorizations in ascending order of their index multisets.
    pub fn elements(&self) -> &[Factorization] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn check_guard(omega: &MonomialSet, k: usize, guard: u128) -> Result<()> {
    let count = multiset_count(omega.len(), k)?;
    if count > guard {
        return Err(Error::SizeGuard {
            what: format!("degree-{k} multisets of {} members", omega.len()),
            count,
            ceiling: guard,
        });
    }
    Ok(())
}

/// All degree-`k` fibers, sorted by target in descending lex order.
pub fn fibers(omega: &MonomialSet, k: usize) -> Result<Vec<Fiber>> {
    fibers_with_guard(omega, k, DEFAULT_GUARD)
}

pub fn fibers_with_guard(omega: &MonomialSet, k: usize, guard: u128) -> Result<Vec<Fiber>> {
    if k < 2 {
        return domain("fibers need k >= 2");
    }
    if omega.is_empty() {
        return domain("fibers need a non-empty Omega");
    }
    check_guard(omega, k, guard)?;
    let nv = omega.nvars();
    let exps: Vec<&[u32]> = omega.iter().map(|m| m.exponents()).collect();
    let mut groups: HashMap<Vec<u32>, Vec<Vec<usize>>> = HashMap::new();
    let mut idx = Vec::with_capacity(k);
    let mut acc = vec![vec![0u32; nv]; k + 1];
    fn rec(
        exps: &[&[u32]],
        k: usize,
        start: usize,
        idx: &mut Vec<usize>,
        acc: &mut Vec<Vec<u32>>,
        groups: &mut HashMap<Vec<u32>, Vec<Vec<usize>>>,
    ) {
        let depth = idx.len();
        if depth == k {
            groups
                .entry(acc[depth].clone())
                .or_default()
                .push(idx.clone());
            return;
        }
        for i in start..exps.len() {
            let (lo, hi) = acc.split_at_mut(depth + 1);
            for ((dst, &src), &e) in hi[0].iter_mut().zip(&lo[depth]).zip(exps[i]) {
                *dst = src + e;
            }
            idx.push(i);
            rec(exps, k, i, idx, acc, groups);
            idx.pop();
        }
    }
    rec(&exps, k, 0, &mut idx, &mut acc, &mut groups);
    let mut out: Vec<Fiber> = groups
        .into_iter()
        .map(|(target, mut elems)| {
            elems.sort();
            let product = Monomial::new(target);
            Fiber {
                elements: elems
                    .into_iter()
                    .map(|omega_indices| Factorization {
                        omega_indices,
                        product: product.clone(),
                    })
                    .collect(),
                target: product,
                k,
            }
        })
        .collect();
    out.sort_by(|a, b| b.target.cmp(&a.target));
    Ok(out)
}

/// Every factorization of `target` into `k` members of `omega`, found by a
/// memoized search over non-decreasing indices with divisibility pruning.
pub fn factorizations(omega: &MonomialSet, target: &Monomial, k: usize) -> Result<Fiber> {
    if target.nvars() != omega.nvars() {
        return Err(Error::DimensionMismatch {
            expected: omega.nvars(),
            got: target.nvars(),
        });
    }
    type Memo = HashMap<(Vec<u32>, usize, usize), Rc<Vec<Vec<usize>>>>;
    fn rec(
        omega: &MonomialSet,
        rem: &[u32],
        min: usize,
        count: usize,
        memo: &mut Memo,
    ) -> Rc<Vec<Vec<usize>>> {
        if count == 0 {
            let r = if rem.iter().all(|&e| e == 0) {
                vec![vec![]]
            } else {
                vec![]
            };
            return Rc::new(r);
        }
        let key = (rem.to_vec(), min, count);
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let mut out = Vec::new();
        for i in min..omega.len() {
            let m = omega.get(i).exponents();
            if m.iter().zip(rem).all(|(&a, &b)| a <= b) {
                let next: Vec<u32> = rem.iter().zip(m).map(|(&b, &a)| b - a).collect();
                for tail in rec(omega, &next, i, count - 1, memo).iter() {
                    let mut v = Vec::with_capacity(count);
                    v.push(i);
                    v.extend_from_slice(tail);
                    out.push(v);
                }
            }
        }
        let r = Rc::new(out);
        memo.insert(key, r.clone());
        r
    }
    let mut memo = Memo::new();
    let found = rec(omega, target.exponents(), 0, k, &mut memo);
    let mut elems: Vec<Vec<usize>> = found.as_ref().clone();
    elems.sort();
    Ok(Fiber {
        target: target.clone(),
        k,
        elements: elems
            .into_iter()
            .map(|omega_indices| Factorization {
                omega_indices,
                product: target.clone(),
            })
            .collect(),
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let n = parent[c];
        parent[c] = r;
        c = n;
    }
    r
}

/// Connected components under the shared-factor relation, as lists of
/// element positions. Components are ordered by their smallest element and
/// each list is ascending, so component 0 contains the lex-least element.
pub fn fiber_components(f: &Fiber) -> Vec<Vec<usize>> {
    let n = f.elements.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut first_with: HashMap<usize, usize> = HashMap::new();
    for (pos, e) in f.elements.iter().enumerate() {
        for &i in &e.omega_indices {
            match first_with.get(&i) {
                Some(&other) => {
                    let (a, b) = (find(&mut parent, pos), find(&mut parent, other));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                None => {
                    first_with.insert(i, pos);
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for pos in 0..n {
        let r = find(&mut parent, pos);
        comps.entry(r).or_default().push(pos);
    }
    let mut out: Vec<Vec<usize>> = comps.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// Which theorem, if any, makes a generator table complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundSource {
    #[serde(rename = "two-normal")]
    TwoNormal,
    #[serde(rename = "group")]
    Group,
    #[serde(rename = "user")]
    User,
}

impl BoundSource {
    pub fn is_certified(self) -> bool {
        !matches!(self, BoundSource::User)
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundSource::TwoNormal => "two-normal",
            BoundSource::Group => "group",
            BoundSource::User => "user",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorTable {
    /// Degree `k` to the number of minimal generators of degree `k`.
    pub degrees: BTreeMap<u32, u64>,
    pub verified_up_to: u32,
    pub bound: BoundSource,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub representatives: Option<BTreeMap<u32, Vec<Binomial>>>,
}

impl GeneratorTable {
    pub fn count(&self, k: u32) -> u64 {
        self.degrees.get(&k).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.degrees.keys().next_back().copied()
    }

    /// `{k: count}` with the degree keys in ascending order.
    pub fn as_pairs(&self) -> Vec<(u32, u64)> {
        self.degrees.iter().map(|(&k, &c)| (k, c)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("generator tables serialize")
    }

    /// All representatives in degree order.
    pub fn generators(&self) -> Vec<Binomial> {
        self.representatives
            .as_ref()
            .map(|r| r.values().flatten().cloned().collect())
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableOptions {
    pub guard: u128,
    pub representatives: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            guard: DEFAULT_GUARD,
            representatives: true,
        }
    }
}

/// Counts minimal generators in degrees `2..=k_max`.
pub fn minimal_generator_table(
    omega: &MonomialSet,
    k_max: u32,
    bound: BoundSource,
    opts: TableOptions,
) -> Result<GeneratorTable> {
    if k_max < 2 {
        return domain("k_max must be at least 2");
    }
    let mu = omega.len();
    let mut degrees = BTreeMap::new();
    let mut reps: BTreeMap<u32, Vec<Binomial>> = BTreeMap::new();
    for k in 2..=k_max {
        let fs = fibers_with_guard(omega, k as usize, opts.guard)?;
        let per_fiber: Vec<(u64, Vec<Binomial>)> = fs
            .par_iter()
            .filter(|f| f.len() > 1)
            .map(|f| {
                let comps = fiber_components(f);
                let excess = comps.len() as u64 - 1;
                let mut bins = Vec::new();
                if opts.representatives && excess > 0 {
                    let principal = f.elements[comps[0][0]].s_exponents(mu);
                    for c in &comps[1..] {
                        let other = f.elements[c[0]].s_exponents(mu);
                        bins.push(Binomial::new_unchecked(principal.clone(), other));
                    }
                }
                (excess, bins)
            })
            .collect();
        let total: u64 = per_fiber.iter().map(|p| p.0).sum();
        if total > 0 {
            degrees.insert(k, total);
            if opts.representatives {
                reps.insert(k, per_fiber.into_iter().flat_map(|p| p.1).collect());
            }
        }
    }
    Ok(GeneratorTable {
        degrees,
        verified_up_to: k_max,
        bound,
        representatives: opts.representatives.then_some(reps),
    })
}

/// The theorem-backed completeness bound for `omega`, if one applies.
pub fn certified_bound(omega: &MonomialSet) -> Option<BoundSource> {
    if let SetOrigin::GroupInvariants { t: 1, .. } = omega.origin() {
        return Some(BoundSource::Group);
    }
    if is_2_normal(omega).is_2_normal {
        return Some(BoundSource::TwoNormal);
    }
    None
}

/// Generator table with the bound chosen automatically: degree 3 when a
/// theorem applies, otherwise `user_k_max` (an error if absent).
pub fn generator_table(
    omega: &MonomialSet,
    user_k_max: Option<u32>,
    opts: TableOptions,
) -> Result<GeneratorTable> {
    match (certified_bound(omega), user_k_max) {
        (Some(b), k) => minimal_generator_table(omega, k.unwrap_or(3).max(3), b, opts),
        (None, Some(k)) => minimal_generator_table(omega, k, BoundSource::User, opts),
        (None, None) => Err(Error::Uncertified(
            "no completeness bound applies; supply a maximal degree".into(),
        )),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "degree", rename_all = "kebab-case")]
pub enum Quadraticity {
    Yes,
    /// A minimal generator of this degree exists.
    No(u32),
    /// Only quadrics up to this degree, with no completeness bound.
    UnknownAbove(u32),
}

pub fn quadraticity_of_table(t: &GeneratorTable) -> Quadraticity {
    match t.degrees.keys().find(|&&k| k > 2) {
        Some(&k) => Quadraticity::No(k),
        None if t.bound.is_certified() => Quadraticity::Yes,
        None => Quadraticity::UnknownAbove(t.verified_up_to),
    }
}

/// Decides quadratic generation; without a theorem bound the search stops at
/// `user_k_max` (default 3) and the verdict degrades to `UnknownAbove`.
pub fn is_quadratic(
    omega: &MonomialSet,
    user_k_max: Option<u32>,
    guard: u128,
) -> Result<Quadraticity> {
    let opts = TableOptions {
        guard,
        representatives: false,
    };
    let t = generator_table(omega, Some(user_k_max.unwrap_or(3)), opts)?;
    Ok(quadraticity_of_table(&t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IkSequence {
    Path(Vec<Factorization>),
    NotConnected,
}

/// A path of factorizations, consecutive ones sharing a factor, joining the
/// two sides of `b`, or `NotConnected`. Quadrics are `NotConnected` by
/// convention.
pub fn ik_sequence_witness(omega: &MonomialSet, b: &Binomial) -> Result<IkSequence> {
    if b.nvars() != omega.len() {
        return Err(Error::DimensionMismatch {
            expected: omega.len(),
            got: b.nvars(),
        });
    }
    if !b.is_homogeneous() {
        return domain("binomial is not homogeneous");
    }
    let lhs = rho(omega, b.plus())?;
    let rhs = rho(omega, b.minus())?;
    if lhs != rhs {
        return domain(format!("sides lie in different fibers ({lhs} vs {rhs})"));
    }
    let k = b.degree() as usize;
    if k <= 2 {
        return Ok(IkSequence::NotConnected);
    }
    let fiber = factorizations(omega, &lhs, k)?;
    let start = Binomial::side_indices(b.plus());
    let goal = Binomial::side_indices(b.minus());
    let pos = |v: &Vec<usize>| fiber.elements.iter().position(|e| &e.omega_indices == v);
    let (s, g) = (
        pos(&start).expect("side in fiber"),
        pos(&goal).expect("side in fiber"),
    );
    let mut prev = vec![usize::MAX; fiber.len()];
    prev[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == g {
            break;
        }
        for v in 0..fiber.len() {
            if prev[v] == usize::MAX && fiber.elements[u].shares_factor(&fiber.elements[v]) {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    if prev[g] == usize::MAX {
        return Ok(IkSequence::NotConnected);
    }
    let mut path = vec![g];
    while *path.last().unwrap() != s {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    Ok(IkSequence::Path(
        path.into_iter()
            .map(|i| fiber.elements[i].clone())
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{binomial, enumerate_degree};

    fn table(omega: &MonomialSet, k: u32) -> Vec<(u32, u64)> {
        minimal_generator_table(omega, k, BoundSource::User, TableOptions::default())
            .unwrap()
            .as_pairs()
    }

    #[test]
    fn veronese_surface_fibers() {
        let m22 = enumerate_degree(2, 2).unwrap();
        let fs = fibers(&m22, 2).unwrap();
        let total: usize = fs.iter().map(|f| f.len()).sum();
        assert_eq!(total, 21);
        let f = fs
            .iter()
            .find(|f| f.target() == &Monomial::new(vec![2, 2, 0]))
            .unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(fiber_components(f).len(), 2);
        assert_eq!(table(&m22, 4), vec![(2, 6)]);
    }

    #[test]
    fn partition_counts_multisets() {
        for (n, d) in [(1, 3), (2, 3), (3, 2)] {
            let omega = enumerate_degree(n, d).unwrap();
            for k in 2..=3 {
                let total: usize = fibers(&omega, k).unwrap().iter().map(|f| f.len()).sum();
                assert_eq!(
                    total as u128,
                    binomial((omega.len() + k - 1) as u64, k as u64).unwrap()
                );
            }
        }
    }

    #[test]
    fn memoized_factorizer_agrees() {
        let omega = enumerate_degree(2, 3)
            .unwrap()
            .without(&[Monomial::new(vec![1, 1, 1])]);
        for f in fibers(&omega, 3).unwrap() {
            let g = factorizations(&omega, f.target(), 3).unwrap();
            assert_eq!(f, g);
        }
    }

    #[test]
    fn guard_reports_count() {
        let omega = enumerate_degree(2, 4).unwrap();
        match fibers_with_guard(&omega, 3, 10) {
            Err(Error::SizeGuard { count, ceiling, .. }) => {
                assert_eq!(count, 680);
                assert_eq!(ceiling, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degree_two_count_matches_pairwise_oracle() {
        // dim I_2 = #pairs - #distinct products; every pair relation is a generator.
        let omega = enumerate_degree(2, 4)
            .unwrap()
            .without(&[Monomial::new(vec![2, 2, 0])]);
        let mut products = std::collections::HashSet::new();
        let mut pairs = 0u64;
        for i in 0..omega.len() {
            for j in i..omega.len() {
                pairs += 1;
                products.insert(omega.get(i).multiply(omega.get(j)).unwrap());
            }
        }
        let t =
            minimal_generator_table(&omega, 2, BoundSource::User, TableOptions::default()).unwrap();
        assert_eq!(t.count(2), pairs - products.len() as u64);
    }

    #[test]
    fn representatives_are_balanced() {
        let omega = enumerate_degree(2, 4)
            .unwrap()
            .without(&[Monomial::new(vec![2, 2, 0])]);
        let t =
            minimal_generator_table(&omega, 3, BoundSource::User, TableOptions::default()).unwrap();
        let reps = t.representatives.as_ref().unwrap();
        for (k, bins) in reps {
            assert_eq!(bins.len() as u64, t.count(*k));
            for b in bins {
                assert!(Binomial::new(&omega, b.plus().to_vec(), b.minus().to_vec()).is_ok());
                assert_eq!(b.degree(), *k);
            }
        }
        for b in &reps[&3] {
            assert_eq!(
                ik_sequence_witness(&omega, b).unwrap(),
                IkSequence::NotConnected
            );
        }
    }

    #[test]
    fn trivial_binomials_have_short_paths() {
        let omega = enumerate_degree(2, 2).unwrap();
        // w0*(w_a w_b - w_c^2) with x0^2, x1^2, x0x1
        let a = omega.position(&Monomial::new(vec![2, 0, 0])).unwrap();
        let b = omega.position(&Monomial::new(vec![0, 2, 0])).unwrap();
        let c = omega.position(&Monomial::new(vec![1, 1, 0])).unwrap();
        let e = omega.position(&Monomial::new(vec![0, 0, 2])).unwrap();
        let bin = Binomial::from_indices(&omega, &[a, b, e], &[c, c, e]).unwrap();
        match ik_sequence_witness(&omega, &bin).unwrap() {
            IkSequence::Path(p) => assert_eq!(p.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        let quad = Binomial::from_indices(&omega, &[a, b], &[c, c]).unwrap();
        assert_eq!(
            ik_sequence_witness(&omega, &quad).unwrap(),
            IkSequence::NotConnected
        );
    }

    #[test]
    fn json_shape() {
        let m22 = enumerate_degree(2, 2).unwrap();
        let mut t =
            minimal_generator_table(&m22, 3, BoundSource::TwoNormal, TableOptions::default())
                .unwrap();
        t.representatives = None;
        let v = t.to_json();
        assert_eq!(
            v,
            serde_json::json!({"degrees": {"2": 6}, "verified_up_to": 3, "bound": "two-normal"})
        );
    }

    #[test]
    fn quadratic_verdicts() {
        let m22 = enumerate_degree(2, 2).unwrap();
        assert_eq!(
            is_quadratic(&m22, None, DEFAULT_GUARD).unwrap(),
            Quadraticity::Yes
        );
        let g = crate::DiagonalGroup::cyclic(5, &[0, 1, 2]).unwrap();
        let b1 = g.invariants_of_degree(1).unwrap();
        assert_eq!(
            is_quadratic(&b1, None, DEFAULT_GUARD).unwrap(),
            Quadraticity::No(3)
        );
        let odd = crate::MonomialSet::new(
            2,
            4,
            [
                "[4,0,0]", "[0,4,0]", "[1,2,1]", "[2,0,2]", "[0,0,4]", "[3,1,0]",
            ]
            .iter()
            .map(|s| Monomial::parse(s, 3).unwrap())
            .collect(),
        )
        .unwrap();
        assert_eq!(
            is_quadratic(&odd, None, DEFAULT_GUARD).unwrap(),
            Quadraticity::UnknownAbove(3)
        );
        assert_eq!(
            is_quadratic(&odd, Some(4), DEFAULT_GUARD).unwrap(),
            Quadraticity::No(4)
        );
    }
}
