//! Monomials in `n + 1` variables and the degree-`d` monomial sets that
//! parameterize projections of Veronese varieties.
//!
//! A [`MonomialSet`] fixes an indexing `w_i <-> m_i` of its members. Unless an
//! explicit order is attached, members are sorted descending lexicographically
//! on exponent vectors, so `x0^d` always gets index 0.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A monomial `x_0^{a_0} ... x_n^{a_n}`, stored by its exponent vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    /// Panics if the degree overflows `u32`; use [`Monomial::try_new`] for
    /// untrusted input.
    pub fn new(exps: Vec<u32>) -> Self {
        Self::try_new(exps).expect("monomial degree overflows u32")
    }

    pub fn try_new(exps: Vec<u32>) -> Result<Self> {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or_else(|| Error::Overflow("monomial degree exceeds u32".into()))?;
        Ok(Monomial { exps, degree })
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// `x_i^e` in `nvars` variables.
    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Indices of the variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    pub fn is_pure_power(&self) -> bool {
        self.support_size() <= 1
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.exps.len(),
                got: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Overflow("exponent exceeds u32".into()))?;
        Monomial::try_new(exps)
    }

    /// True iff `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// `other / self`; a domain error unless `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Result<Monomial> {
        if !self.divides(other)? {
            return domain(format!("{self} does not divide {other}"));
        }
        Ok(Monomial::new(
            other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        ))
    }

    /// Parses `x0^2*x1*x3^4`, `1`, or an exponent tuple `[2,1,0,4]`.
    /// `nvars` is required for the symbolic form.
    pub fn parse(s: &str, nvars: usize) -> Result<Monomial> {
        let s = s.trim();
        let perr = |tok: &str, msg: &str| Error::Parse {
            position: 0,
            token: tok.to_string(),
            message: msg.to_string(),
        };
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let exps = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| perr(t, "expected exponent"))
                })
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: exps.len(),
                });
            }
            return Monomial::try_new(exps);
        }
        let mut exps = vec![0u32; nvars];
        if s == "1" {
            return Ok(Monomial::new(exps));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| perr(factor, "expected a variable x<i>"))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>().map_err(|_| perr(factor, "bad exponent"))?,
                ),
                None => (body, 1),
            };
            let var: usize = var
                .parse()
                .map_err(|_| perr(factor, "bad variable index"))?;
            if var >= nvars {
                return Err(perr(factor, "variable index out of range"));
            }
            exps[var] += exp;
        }
        Monomial::try_new(exps)
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

/// Plain lexicographic comparison of exponent vectors.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Checked binomial coefficient in a 128-bit counter.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::Overflow(format!("binomial({n},{k}) exceeds 128 bits")))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

/// Number of multisets of size `k` drawn from `m` items.
pub fn multiset_count(m: usize, k: usize) -> Result<u128> {
    if m == 0 {
        return Ok(if k == 0 { 1 } else { 0 });
    }
    binomial((m + k - 1) as u64, k as u64)
}

/// How a set was produced; used to pick theorem-backed completeness bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum SetOrigin {
    #[default]
    Plain,
    /// Monomial invariants of degree `t * |G|` of the named diagonal group.
    GroupInvariants { group: String, t: u32 },
}

/// An indexed, duplicate-free set of monomials of a common degree `d >= 1`.
#[derive(Clone, Debug)]
pub struct MonomialSet {
    n: usize,
    d: u32,
    members: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    origin: SetOrigin,
}

impl PartialEq for MonomialSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.members == other.members
    }
}

impl Eq for MonomialSet {}

impl MonomialSet {
    /// Builds the set in canonical order (descending lex), dropping duplicates.
    pub fn new(n: usize, d: u32, mut members: Vec<Monomial>) -> Result<Self> {
        members.sort_by(|a, b| b.cmp(a));
        members.dedup();
        Self::from_ordered(n, d, members)
    }

    /// Keeps the given member order, which becomes the variable indexing of
    /// the presentation ring. Duplicates are rejected.
    pub fn from_ordered(n: usize, d: u32, members: Vec<Monomial>) -> Result<Self> {
        if d == 0 {
            return domain("monomial sets must have degree d >= 1");
        }
        let mut index = HashMap::with_capacity(members.len());
        for (i, m) in members.iter().enumerate() {
            if m.nvars() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    got: m.nvars(),
                });
            }
            if m.degree() != d {
                return domain(format!(
                    "member {m} has degree {} instead of {d}",
                    m.degree()
                ));
            }
            if index.insert(m.clone(), i).is_some() {
                return domain(format!("duplicate member {m}"));
            }
        }
        Ok(MonomialSet {
            n,
            d,
            members,
            index,
            origin: SetOrigin::Plain,
        })
    }

    pub(crate) fn with_origin(mut self, origin: SetOrigin) -> Self {
        self.origin = origin;
        self
    }

    pub fn origin(&self) -> &SetOrigin {
        &self.origin
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.members[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monomial> {
        self.members.iter()
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &MonomialSet) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    pub fn contains_pure_powers(&self) -> bool {
        (0..self.nvars()).all(|i| self.contains(&Monomial::pure_power(self.nvars(), i, self.d)))
    }

    /// Canonical copy (drops any explicit order and the origin tag).
    pub fn canonical(&self) -> MonomialSet {
        MonomialSet::new(self.n, self.d, self.members.clone()).expect("members already validated")
    }

    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> MonomialSet {
        let members = self.members.iter().filter(|m| pred(m)).cloned().collect();
        MonomialSet::from_ordered(self.n, self.d, members).expect("subset of a valid set")
    }

    pub fn without(&self, removed: &[Monomial]) -> MonomialSet {
        self.filter(|m| !removed.contains(m))
    }

    /// Canonical union with extra monomials of the same shape.
    pub fn with_extra(&self, extra: &[Monomial]) -> Result<MonomialSet> {
        let mut members = self.members.clone();
        members.extend_from_slice(extra);
        MonomialSet::new(self.n, self.d, members)
    }

    /// Parses the text format: a header `n d`, then one exponent row per
    /// member; `#` starts a comment line.
    pub fn parse_text(text: &str) -> Result<MonomialSet> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let perr = |line: usize, tok: &str, msg: &str| Error::Parse {
            position: line,
            token: tok.to_string(),
            message: msg.to_string(),
        };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| perr(0, "", "missing `n d` header"))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(perr(hline, header, "header must be `n d`"));
        }
        let n: usize = nums[0].parse().map_err(|_| perr(hline, nums[0], "bad n"))?;
        let d: u32 = nums[1].parse().map_err(|_| perr(hline, nums[1], "bad d"))?;
        let mut members = Vec::new();
        for (lno, line) in lines {
            let exps = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| perr(lno, t, "expected exponent"))
                })
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != n + 1 {
                return Err(perr(lno, line, "row length must be n+1"));
            }
            let m = Monomial::try_new(exps)?;
            if m.degree() != d {
                return Err(perr(lno, line, "row does not sum to d"));
            }
            members.push(m);
        }
        MonomialSet::new(n, d, members)
    }

    /// Writes the text format in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.d);
        for m in self.canonical().members() {
            let row: Vec<String> = m.exponents().iter().map(|e| e.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Visits all compositions of `total` into `parts` parts in descending lex order.
pub(crate) fn for_each_composition(parts: usize, total: u32, mut f: impl FnMut(&[u32])) {
    fn rec(buf: &mut Vec<u32>, parts: usize, left: u32, f: &mut dyn FnMut(&[u32])) {
        if buf.len() + 1 == parts {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for e in (0..=left).rev() {
            buf.push(e);
            rec(buf, parts, left - e, f);
            buf.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = Vec::with_capacity(parts);
    rec(&mut buf, parts, total, &mut f);
}

/// All monomials of degree `d` in `n + 1` variables (the set `M_{n,d}`).
pub fn enumerate_degree(n: usize, d: u32) -> Result<MonomialSet> {
    if d == 0 {
        return domain("enumerate_degree requires d >= 1");
    }
    let count = binomial(n as u64 + d as u64, n as u64)?;
    if count > usize::MAX as u128 || count > u32::MAX as u128 {
        return Err(Error::Overflow(format!(
            "|M_{{{n},{d}}}| = {count} exceeds the counter width"
        )));
    }
    let mut members = Vec::with_capacity(count as usize);
    for_each_composition(n + 1, d, |c| members.push(Monomial::new(c.to_vec())));
    MonomialSet::from_ordered(n, d, members)
}

/// Members of `M_{n,d}` supported in at most `s` variables.
pub fn enumerate_support_bounded(n: usize, d: u32, s: usize) -> Result<MonomialSet> {
    if s == 0 || s > n + 1 {
        return domain(format!(
            "support bound s={s} must satisfy 1 <= s <= n+1 = {}",
            n + 1
        ));
    }
    Ok(enumerate_degree(n, d)?.filter(|m| m.support_size() <= s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degree_counts() {
        assert_eq!(enumerate_degree(2, 2).unwrap().len(), 6);
        assert_eq!(enumerate_degree(3, 4).unwrap().len(), 35);
        assert_eq!(enumerate_degree(2, 4).unwrap().len(), 15);
        assert!(enumerate_degree(2, 0).is_err());
    }

    #[test]
    fn canonical_order_starts_with_x0_power() {
        let s = enumerate_degree(2, 3).unwrap();
        assert_eq!(s.get(0), &m(&[3, 0, 0]));
        assert_eq!(s.get(s.len() - 1), &m(&[0, 0, 3]));
        assert_eq!(s, s.canonical());
    }

    #[test]
    fn support_examples() {
        assert_eq!(m(&[2, 2, 2, 4]).support(), vec![0, 1, 2, 3]);
        assert_eq!(m(&[5, 0, 0]).support(), vec![0]);
        assert!(m(&[0, 0, 0]).support().is_empty());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(
            m(&[1, 2, 1]).multiply(&m(&[2, 0, 2])).unwrap(),
            m(&[3, 2, 3])
        );
        assert!(m(&[2, 2, 2, 4]).divides(&m(&[5, 5, 5, 5])).unwrap());
        assert_eq!(
            m(&[1, 2, 1]).quotient_of(&m(&[3, 2, 3])).unwrap(),
            m(&[2, 0, 2])
        );
        assert!(matches!(
            m(&[3, 0, 0]).quotient_of(&m(&[1, 2, 1])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            m(&[1, 0]).multiply(&m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn support_bounded_examples() {
        let brute = enumerate_degree(3, 5)
            .unwrap()
            .members()
            .iter()
            .filter(|m| m.support_size() <= 2)
            .count();
        assert_eq!(brute, 28);
        assert_eq!(enumerate_support_bounded(3, 5, 2).unwrap().len(), 28);
        let pv = enumerate_support_bounded(2, 3, 2).unwrap();
        assert_eq!(pv.len(), 9);
        assert!(!pv.contains(&m(&[1, 1, 1])));
        assert_eq!(
            enumerate_support_bounded(3, 3, 4).unwrap(),
            enumerate_degree(3, 3).unwrap()
        );
        assert!(enumerate_support_bounded(2, 3, 0).is_err());
        assert!(enumerate_support_bounded(2, 3, 4).is_err());
    }

    #[test]
    fn text_format() {
        let text = "# pinched\n2 3\n3 0 0\n\n0 3 0\n1 2 0\n";
        let s = MonomialSet::parse_text(text).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_text(), "2 3\n3 0 0\n1 2 0\n0 3 0\n");
        let err = MonomialSet::parse_text("2 3\n1 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 2, .. }));
    }

    #[test]
    fn parse_symbolic() {
        assert_eq!(
            Monomial::parse("x0^2*x1*x3^4", 4).unwrap(),
            m(&[2, 1, 0, 4])
        );
        assert_eq!(Monomial::parse("[1,2,3]", 3).unwrap(), m(&[1, 2, 3]));
        assert_eq!(Monomial::parse("1", 2).unwrap(), m(&[0, 0]));
        assert!(Monomial::parse("x5", 3).is_err());
        assert_eq!(m(&[2, 1, 0, 4]).to_string(), "x0^2*x1*x3^4");
    }

    #[test]
    fn binomial_is_checked() {
        assert_eq!(binomial(10, 2).unwrap(), 45);
        assert_eq!(multiset_count(10, 2).unwrap(), 55);
        assert!(binomial(400, 200).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn mono(len: usize) -> impl Strategy<Value = Monomial> {
            proptest::collection::vec(0u32..6, len).prop_map(Monomial::new)
        }

        proptest! {
            #[test]
            fn count_matches_binomial(n in 0usize..4, d in 1u32..7) {
                let s = enumerate_degree(n, d).unwrap();
                prop_assert_eq!(s.len() as u128, binomial(n as u64 + d as u64, n as u64).unwrap());
            }

            #[test]
            fn support_bounded_is_monotone(n in 1usize..4, d in 1u32..6, s in 1usize..4) {
                let s = s.min(n);
                let small = enumerate_support_bounded(n, d, s).unwrap();
                let large = enumerate_support_bounded(n, d, s + 1).unwrap();
                prop_assert!(small.is_subset_of(&large));
                prop_assert!(large.is_subset_of(&enumerate_degree(n, d).unwrap()));
            }

            #[test]
            fn multiply_laws((a, b, c) in (mono(4), mono(4), mono(4))) {
                let ab = a.multiply(&b).unwrap();
                prop_assert_eq!(&ab, &b.multiply(&a).unwrap());
                prop_assert_eq!(ab.multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
                prop_assert_eq!(a.quotient_of(&ab).unwrap(), b);
            }
        }
    }
}
