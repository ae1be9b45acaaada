//! Finite diagonal abelian groups acting on `K[x_0..x_n]` and their monomial
//! invariants.
//!
//! A group is a direct sum of cyclic factors `C(d_i; a_0,...,a_n)`, each
//! generated by `diag(e^{a_0}, ..., e^{a_n})` with `e` a primitive `d_i`-th
//! root of unity. Roots of unity never appear: a monomial `x^a` is invariant
//! iff `sum_j a_j * w_ij ≡ 0 (mod d_i)` for every factor `i`.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::monomial::{Monomial, MonomialSet, SetOrigin};

/// Whether presentations with `gcd(weights, d_i) > 1` are accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Validation {
    /// Reject factors whose matrix has smaller multiplicative order than `d_i`.
    #[default]
    Strict,
    /// Keep `d_i` as the nominal order and attach a warning.
    Nominal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicFactor {
    order: u32,
    weights: Vec<u32>,
}

impl CyclicFactor {
    /// Weights are reduced mod `order`; `gcd(weights, order) = 1` is required.
    pub fn new(order: u32, weights: &[i64]) -> Result<Self> {
        let f = Self::nominal(order, weights)?;
        if f.common_divisor() != 1 {
            return domain(format!(
                "C({order}; {}) has gcd(weights, d) = {} != 1",
                f.weights_string(),
                f.common_divisor()
            ));
        }
        Ok(f)
    }

    /// Like [`CyclicFactor::new`] but keeps presentations whose matrix has a
    /// smaller order than `order`.
    pub fn nominal(order: u32, weights: &[i64]) -> Result<Self> {
        if order == 0 {
            return domain("cyclic factor order must be positive");
        }
        if weights.is_empty() {
            return domain("cyclic factor needs at least one weight");
        }
        let weights = weights
            .iter()
            .map(|w| w.rem_euclid(order as i64) as u32)
            .collect();
        Ok(CyclicFactor { order, weights })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// `gcd(w_0, ..., w_n, d)`.
    pub fn common_divisor(&self) -> u32 {
        self.weights.iter().fold(self.order, |g, &w| g.gcd(&w))
    }

    fn weights_string(&self) -> String {
        self.weights
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for CyclicFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({};{})", self.order, self.weights_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalGroup {
    n: usize,
    factors: Vec<CyclicFactor>,
    order: u64,
    warnings: Vec<String>,
}

impl DiagonalGroup {
    pub fn new(factors: Vec<CyclicFactor>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::Domain("a group needs at least one cyclic factor".into()))?;
        let nvars = first.weights.len();
        let mut order: u64 = 1;
        for f in &factors {
            if f.weights.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: f.weights.len(),
                });
            }
            order = order
                .checked_mul(f.order as u64)
                .ok_or_else(|| Error::Overflow("group order exceeds u64".into()))?;
        }
        if order > u32::MAX as u64 {
            return Err(Error::Overflow(format!("group order {order} exceeds u32")));
        }
        let mut g = DiagonalGroup {
            n: nvars - 1,
            factors,
            order,
            warnings: Vec::new(),
        };
        g.warnings = g.diagnostics();
        Ok(g)
    }

    /// `<M_{d; w}>` with strict validation.
    pub fn cyclic(order: u32, weights: &[i64]) -> Result<Self> {
        Self::new(vec![CyclicFactor::new(order, weights)?])
    }

    /// `<M_{d; w}>` keeping `d` as the nominal order even when the matrix has
    /// smaller multiplicative order.
    pub fn cyclic_nominal(order: u32, weights: &[i64]) -> Result<Self> {
        Self::new(vec![CyclicFactor::nominal(order, weights)?])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn factors(&self) -> &[CyclicFactor] {
        &self.factors
    }

    /// The presented order `d = d_1 * ... * d_s` used in every degree formula.
    pub fn order(&self) -> u32 {
        self.order as u32
    }

    pub fn is_cyclic_presentation(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Whether `d_i | d_{i+1}` holds along the factor list.
    pub fn divisibility_chain_holds(&self) -> bool {
        self.factors
            .windows(2)
            .all(|w| w[1].order % w[0].order == 0)
    }

    /// Weights of the single factor; a domain error for direct sums.
    pub fn cyclic_weights(&self) -> Result<&[u32]> {
        match self.factors.as_slice() {
            [f] => Ok(&f.weights),
            _ => domain(format!("{self} is not a cyclic presentation")),
        }
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        for f in &self.factors {
            let g = f.common_divisor();
            if g != 1 {
                out.push(format!(
                    "{f}: matrix order {} properly divides the presented order {}",
                    f.order / g,
                    f.order
                ));
            }
        }
        if !self.divisibility_chain_holds() {
            out.push("factor orders do not form a divisibility chain d_i | d_(i+1)".into());
        }
        if let Some(eff) = self.effective_order() {
            if eff as u64 != self.order && self.factors.len() > 1 {
                out.push(format!(
                    "the factors generate a group of order {eff}, not the presented order {}",
                    self.order
                ));
            }
        }
        out
    }

    /// Elements of the group as character vectors over `Z / lcm(d_i)`.
    /// `None` when the presented order is too large to enumerate.
    fn elements(&self) -> Option<(u64, HashSet<Vec<u64>>)> {
        const LIMIT: u64 = 1 << 20;
        if self.order > LIMIT {
            return None;
        }
        let lcm = self
            .factors
            .iter()
            .fold(1u64, |l, f| l.lcm(&(f.order as u64)));
        let mut elems: HashSet<Vec<u64>> = HashSet::new();
        elems.insert(vec![0; self.nvars()]);
        for f in &self.factors {
            let scale = lcm / f.order as u64;
            let gen: Vec<u64> = f.weights.iter().map(|&w| w as u64 * scale % lcm).collect();
            let mut next = HashSet::new();
            for e in &elems {
                let mut cur = e.clone();
                for _ in 0..f.order {
                    next.insert(cur.clone());
                    for (c, g) in cur.iter_mut().zip(&gen) {
                        *c = (*c + g) % lcm;
                    }
                }
            }
            elems = next;
        }
        Some((lcm, elems))
    }

    /// Order of the subgroup of `GL(n+1)` actually generated by the factors.
    pub fn effective_order(&self) -> Option<u32> {
        self.elements().map(|(_, e)| e.len() as u32)
    }

    /// An equivalent single-factor presentation when the generated group is
    /// cyclic of the presented order.
    pub fn as_cyclic(&self) -> Option<DiagonalGroup> {
        if self.factors.len() == 1 {
            return Some(self.clone());
        }
        let (lcm, elems) = self.elements()?;
        if elems.len() as u64 != self.order {
            return None;
        }
        let target = self.order;
        for e in &elems {
            let denom = e.iter().fold(lcm, |g, &c| g.gcd(&c));
            if lcm / denom == target {
                // e = (c_j / lcm); an element of order `target` has weights c_j * target / lcm
                let weights: Vec<i64> = e.iter().map(|&c| (c * target / lcm) as i64).collect();
                return DiagonalGroup::cyclic(target as u32, &weights).ok();
            }
        }
        None
    }

    /// True iff the presented group is not cyclic (and is presented faithfully).
    pub fn is_noncyclic(&self) -> bool {
        self.factors.len() > 1
            && self.effective_order() == Some(self.order())
            && self.as_cyclic().is_none()
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: m.nvars(),
            });
        }
        Ok(())
    }

    /// True iff `m` satisfies every invariance congruence.
    pub fn is_invariant(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.is_invariant_exps(m.exponents()))
    }

    pub(crate) fn is_invariant_exps(&self, a: &[u32]) -> bool {
        self.factors.iter().all(|f| {
            let s: u64 = f
                .weights
                .iter()
                .zip(a)
                .map(|(&w, &e)| w as u64 * e as u64)
                .sum();
            s.is_multiple_of(f.order as u64)
        })
    }

    /// `B_t`: the invariant monomials of degree `t * d`.
    pub fn invariants_of_degree(&self, t: u32) -> Result<MonomialSet> {
        if t == 0 {
            return domain("invariants_of_degree requires t >= 1");
        }
        let total = self.order
            .checked_mul(t as u64)
            .filter(|&v| v <= u32::MAX as u64)
            .ok_or_else(|| Error::Overflow("t * d exceeds u32".into()))? as u32;
        let mut members = Vec::new();
        let mut buf = Vec::with_capacity(self.nvars());
        let mut residues = vec![0u32; self.factors.len()];
        self.walk(&mut buf, &mut residues, total, &mut members);
        Ok(
            MonomialSet::from_ordered(self.n, total, members)?.with_origin(
                SetOrigin::GroupInvariants {
                    group: self.to_string(),
                    t,
                },
            ),
        )
    }

    fn walk(&self, buf: &mut Vec<u32>, residues: &mut [u32], left: u32, out: &mut Vec<Monomial>) {
        let j = buf.len();
        let last = j + 1 == self.nvars();
        let range: Box<dyn Iterator<Item = u32>> = if last {
            Box::new(std::iter::once(left))
        } else {
            Box::new((0..=left).rev())
        };
        for e in range {
            let saved: Vec<u32> = residues.to_vec();
            for (r, f) in residues.iter_mut().zip(&self.factors) {
                *r = ((*r as u64 + f.weights[j] as u64 * e as u64) % f.order as u64) as u32;
            }
            buf.push(e);
            if last {
                if residues.iter().all(|&r| r == 0) {
                    out.push(Monomial::new(buf.clone()));
                }
            } else {
                self.walk(buf, residues, left - e, out);
            }
            buf.pop();
            residues.copy_from_slice(&saved);
        }
    }

    /// Each variable of `base` split into a block of `sizes[i]` variables
    /// carrying the same weight.
    pub fn block_group(&self, sizes: &[usize]) -> Result<DiagonalGroup> {
        if sizes.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: sizes.len(),
            });
        }
        if sizes.contains(&0) {
            return domain("block sizes must be positive");
        }
        let factors = self
            .factors
            .iter()
            .map(|f| {
                let weights = f
                    .weights
                    .iter()
                    .zip(sizes)
                    .flat_map(|(&w, &s)| std::iter::repeat_n(w, s))
                    .collect();
                CyclicFactor {
                    order: f.order,
                    weights,
                }
            })
            .collect();
        DiagonalGroup::new(factors)
    }

    /// For every `i < j < k`, the surface group of the same order with weights
    /// `(w_i, w_j, w_k)`.
    pub fn triple_projections(&self) -> Result<Vec<((usize, usize, usize), DiagonalGroup)>> {
        let w = self.cyclic_weights()?;
        if self.n < 2 {
            return domain("triple projections need n >= 2");
        }
        let d = self.order();
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                for k in j + 1..w.len() {
                    let g =
                        DiagonalGroup::cyclic_nominal(d, &[w[i] as i64, w[j] as i64, w[k] as i64])?;
                    out.push(((i, j, k), g));
                }
            }
        }
        Ok(out)
    }

    /// Parses `C(d; a0,...,an)` summands joined by `+`.
    pub fn parse(text: &str, validation: Validation) -> Result<DiagonalGroup> {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut p = GroupParser {
            chars: &chars,
            pos: 0,
            text,
        };
        let mut factors = Vec::new();
        loop {
            let (order, weights, at) = p.factor()?;
            let f = match validation {
                Validation::Strict => CyclicFactor::new(order, &weights),
                Validation::Nominal => CyclicFactor::nominal(order, &weights),
            }
            .map_err(|e| Error::Parse {
                position: at,
                token: p.slice_from(at),
                message: e.to_string(),
            })?;
            factors.push(f);
            if p.eof() {
                break;
            }
            p.expect('+')?;
        }
        DiagonalGroup::new(factors)
    }
}

impl fmt::Display for DiagonalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

struct GroupParser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    text: &'a str,
}

impl GroupParser<'_> {
    fn eof(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|c| c.0)
            .unwrap_or(self.text.len())
    }

    fn slice_from(&self, at: usize) -> String {
        let end = self.offset().max(at);
        self.text[at..end].to_string()
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        let token = match self.chars.get(self.pos) {
            Some((_, c)) => c.to_string(),
            None => "<end>".to_string(),
        };
        Err(Error::Parse {
            position: self.offset(),
            token,
            message: message.to_string(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.chars.get(self.pos) {
            Some((_, got)) if *got == c => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(&format!("expected `{c}`")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some((_, '-'))) {
            self.pos += 1;
        }
        while matches!(self.chars.get(self.pos), Some((_, c)) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        if s.is_empty() || s == "-" {
            self.pos = start;
            return self.err("expected an integer");
        }
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn factor(&mut self) -> Result<(u32, Vec<i64>, usize)> {
        let at = self.offset();
        self.expect('C')?;
        self.expect('(')?;
        let d = self.integer()?;
        if d <= 0 || d > u32::MAX as i64 {
            return self.err("order must be a positive integer");
        }
        self.expect(';')?;
        let mut weights = vec![self.integer()?];
        while matches!(self.chars.get(self.pos), Some((_, ','))) {
            self.pos += 1;
            weights.push(self.integer()?);
        }
        self.expect(')')?;
        Ok((d as u32, weights, at))
    }
}

/// One `h`-vector computed from the group: `h_i` counts invariants of degree
/// `i * d` with every exponent below `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHVector {
    pub h: Vec<u64>,
    /// `1 + max{i : h_i != 0}`.
    pub regularity: usize,
    /// Whether `n <= regularity <= n + 1`.
    pub regularity_in_range: bool,
}

pub fn h_vector_group(g: &DiagonalGroup) -> GroupHVector {
    let d = g.order();
    let nv = g.nvars();
    let mut h = Vec::with_capacity(nv);
    for i in 0..nv as u32 {
        let mut count = 0u64;
        crate::monomial::for_each_composition(nv, i * d, |c| {
            if c.iter().all(|&e| e < d) && g.is_invariant_exps(c) {
                count += 1;
            }
        });
        h.push(count);
    }
    let top = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    let regularity = top + 1;
    GroupHVector {
        regularity_in_range: g.n() <= regularity && regularity <= g.n() + 1,
        h,
        regularity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    pub(crate) fn g4_0123() -> DiagonalGroup {
        DiagonalGroup::cyclic(4, &[0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn invariance_examples() {
        let g = g4_0123();
        assert!(g.is_invariant(&m(&[1, 2, 1, 0])).unwrap());
        assert!(!g.is_invariant(&m(&[3, 1, 0, 0])).unwrap());
        assert!(g.is_invariant(&m(&[1, 2, 1])).is_err());
        let trivial = DiagonalGroup::cyclic_nominal(5, &[0, 0, 0]).unwrap();
        assert!(trivial.is_invariant(&m(&[2, 1, 7])).unwrap());
    }

    #[test]
    fn b1_of_threefold_group() {
        let b1 = g4_0123().invariants_of_degree(1).unwrap();
        assert_eq!(b1.len(), 10);
        let trivial = DiagonalGroup::cyclic_nominal(2, &[0, 0, 0]).unwrap();
        assert_eq!(trivial.invariants_of_degree(1).unwrap().len(), 6);
    }

    #[test]
    fn strict_validation_rejects_common_divisor() {
        assert!(DiagonalGroup::cyclic(6, &[2, 2, 2]).is_err());
        let g = DiagonalGroup::cyclic_nominal(6, &[2, 2, 2]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.effective_order(), Some(3));
        assert!(!g.warnings().is_empty());
    }

    #[test]
    fn weights_are_reduced() {
        let g = DiagonalGroup::cyclic(4, &[4, -3, 6]).unwrap();
        assert_eq!(g.cyclic_weights().unwrap(), &[0, 1, 2]);
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let g = DiagonalGroup::parse(" C(2; 0,1,1) + C(4;0, 1,3)", Validation::Strict).unwrap();
        assert_eq!(g.to_string(), "C(2;0,1,1)+C(4;0,1,3)");
        assert_eq!(g.order(), 8);
        assert!(!DiagonalGroup::parse("C(4;0,1,3)+C(2;0,1)", Validation::Strict).is_ok());
        match DiagonalGroup::parse("C(4;0,x,3)", Validation::Strict) {
            Err(Error::Parse {
                token, position, ..
            }) => {
                assert_eq!(token, "x");
                assert_eq!(position, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
        match DiagonalGroup::parse("C(6;2,2,2)", Validation::Strict) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "C(6;2,2,2)"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(DiagonalGroup::parse("C(6;2,2,2)", Validation::Nominal).is_ok());
    }

    #[test]
    fn chain_and_cyclicity() {
        let g = DiagonalGroup::parse("C(2;0,1,1)+C(4;0,1,3)", Validation::Strict).unwrap();
        assert!(g.divisibility_chain_holds());
        assert_eq!(g.effective_order(), Some(4));
        assert!(!g.is_noncyclic());
        assert!(g.warnings().iter().any(|w| w.contains("order 4")));
        let klein = DiagonalGroup::parse("C(2;0,1,0)+C(2;0,0,1)", Validation::Strict).unwrap();
        assert_eq!(klein.effective_order(), Some(4));
        assert!(klein.is_noncyclic());
        // Z/2 + Z/3 is cyclic of order 6
        let c = DiagonalGroup::parse("C(2;0,1,0)+C(3;0,0,1)", Validation::Strict).unwrap();
        assert!(!c.divisibility_chain_holds());
        let cyc = c.as_cyclic().unwrap();
        assert_eq!(cyc.order(), 6);
        assert_eq!(
            cyc.invariants_of_degree(1).unwrap().canonical(),
            c.invariants_of_degree(1).unwrap().canonical()
        );
    }

    #[test]
    fn block_groups() {
        let base = DiagonalGroup::cyclic(4, &[0, 1, 3]).unwrap();
        assert_eq!(
            base.block_group(&[1, 2, 1])
                .unwrap()
                .cyclic_weights()
                .unwrap(),
            &[0, 1, 1, 3]
        );
        assert_eq!(base.block_group(&[1, 1, 1]).unwrap(), base);
        let b6 = DiagonalGroup::cyclic(6, &[0, 2, 3]).unwrap();
        assert_eq!(
            b6.block_group(&[2, 1, 1])
                .unwrap()
                .cyclic_weights()
                .unwrap(),
            &[0, 0, 2, 3]
        );
        assert!(base.block_group(&[1, 1]).is_err());
    }

    #[test]
    fn triples() {
        let g = DiagonalGroup::cyclic(7, &[0, 1, 2, 3]).unwrap();
        let t = g.triple_projections().unwrap();
        let ws: Vec<Vec<u32>> = t
            .iter()
            .map(|(_, g)| g.cyclic_weights().unwrap().to_vec())
            .collect();
        assert_eq!(
            ws,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert_eq!(t[3].0, (1, 2, 3));
    }

    #[test]
    fn h_vector_examples() {
        let hv = h_vector_group(&g4_0123());
        assert_eq!(hv.h, vec![1, 6, 9, 0]);
        assert_eq!(hv.regularity, 3);
        assert!(hv.regularity_in_range);
        let trivial = DiagonalGroup::cyclic_nominal(2, &[0, 0, 0]).unwrap();
        assert_eq!(h_vector_group(&trivial).h, vec![1, 3, 0]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn invariants_are_closed_under_products(d in 2u32..9, a1 in 0i64..9, a2 in 0i64..9, s in 1u32..3, t in 1u32..3) {
                let g = DiagonalGroup::cyclic_nominal(d, &[0, a1, a2]).unwrap();
                let bs = g.invariants_of_degree(s).unwrap();
                let bt = g.invariants_of_degree(t).unwrap();
                let bst = g.invariants_of_degree(s + t).unwrap();
                for x in bs.iter() {
                    for y in bt.iter() {
                        prop_assert!(bst.contains(&x.multiply(y).unwrap()));
                    }
                }
                for i in 0..3 {
                    prop_assert!(bt.contains(&Monomial::pure_power(3, i, t * d)));
                }
            }

            #[test]
            fn h_vector_codimension(d in 2u32..10, a1 in 0i64..10, a2 in 0i64..10, a3 in 0i64..10) {
                let g = DiagonalGroup::cyclic_nominal(d, &[0, a1, a2, a3]).unwrap();
                let b1 = g.invariants_of_degree(1).unwrap();
                let hv = h_vector_group(&g);
                prop_assert_eq!(hv.h[1] as usize, b1.len() - 4);
                let full = b1.iter().filter(|m| m.support_size() == 4).count();
                prop_assert_eq!(hv.h[3] as usize, full);
            }
        }
    }
}
