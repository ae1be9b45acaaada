//! Buchberger's algorithm specialised to binomials of a toric ideal.
//!
//! Elements are kept oriented (`lead > tail`) and gcd-free. Reducing a
//! binomial means rewriting each side to its normal form by the current
//! leading terms; S-polynomials and reductions therefore stay binomial and no
//! field arithmetic is needed.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::groebner::order::TermOrder;

/// An oriented binomial `lead - tail` with `lead > tail`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedBinomial {
    pub lead: Vec<u32>,
    pub tail: Vec<u32>,
}

impl OrientedBinomial {
    pub fn degree(&self) -> u32 {
        self.lead.iter().sum::<u32>().max(self.tail.iter().sum())
    }

    pub fn to_binomial(&self) -> Binomial {
        Binomial::new_unchecked(self.lead.clone(), self.tail.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub elements: Vec<OrientedBinomial>,
    pub order: TermOrder,
    pub max_degree: u32,
}

#[derive(Serialize)]
struct GbElementJson<'a> {
    plus: &'a [u32],
    minus: &'a [u32],
    lead: &'static str,
}

impl GroebnerBasis {
    pub fn is_quadratic(&self) -> bool {
        self.max_degree <= 2
    }

    pub fn to_json(&self) -> serde_json::Value {
        let elements: Vec<GbElementJson> = self
            .elements
            .iter()
            .map(|e| GbElementJson {
                plus: &e.lead,
                minus: &e.tail,
                lead: "plus",
            })
            .collect();
        serde_json::json!({
            "elements": elements,
            "order": self.order.spec_string(),
            "max_degree": self.max_degree,
        })
    }

    /// Rewrites `m` to its normal form modulo the leading terms.
    pub fn normal_form(&self, m: &[u32]) -> Vec<u32> {
        let mut u = m.to_vec();
        let mut steps = 0;
        rewrite(&self.elements, &mut u, &mut steps);
        u
    }

    /// Whether `b` lies in the ideal generated by the basis.
    pub fn reduces_to_zero(&self, b: &Binomial) -> bool {
        self.normal_form(b.plus()) == self.normal_form(b.minus())
    }

    /// Buchberger's criterion checked directly on every pair.
    pub fn is_groebner(&self) -> bool {
        let g = &self.elements;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (a, b) = spoly(&g[i], &g[j]);
                if self.normal_form(&a) != self.normal_form(&b) {
                    return false;
                }
            }
        }
        true
    }

    /// No leading term divides a term of another element.
    pub fn is_reduced(&self) -> bool {
        let g = &self.elements;
        for (i, e) in g.iter().enumerate() {
            for (j, f) in g.iter().enumerate() {
                if i != j && (divides(&f.lead, &e.lead) || divides(&f.lead, &e.tail)) {
                    return false;
                }
            }
            if divides(&e.lead, &e.tail) {
                return false;
            }
        }
        true
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn total(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// The two sides of the S-polynomial of `f` and `g`.
fn spoly(f: &OrientedBinomial, g: &OrientedBinomial) -> (Vec<u32>, Vec<u32>) {
    let l = lcm(&f.lead, &g.lead);
    let a = l
        .iter()
        .zip(&f.lead)
        .zip(&f.tail)
        .map(|((&l, &x), &t)| l - x + t)
        .collect();
    let b = l
        .iter()
        .zip(&g.lead)
        .zip(&g.tail)
        .map(|((&l, &x), &t)| l - x + t)
        .collect();
    (a, b)
}

fn mask(a: &[u32]) -> u128 {
    let mut m = 0u128;
    for (i, &e) in a.iter().enumerate() {
        if e > 0 {
            m |= 1u128 << (i % 128);
        }
    }
    m
}

fn rewrite(reducers: &[OrientedBinomial], u: &mut [u32], steps: &mut usize) {
    'outer: loop {
        for r in reducers {
            if divides(&r.lead, u) {
                for ((x, &l), &t) in u.iter_mut().zip(&r.lead).zip(&r.tail) {
                    *x = *x - l + t;
                }
                *steps += 1;
                continue 'outer;
            }
        }
        return;
    }
}

fn orient(order: &TermOrder, a: Vec<u32>, b: Vec<u32>) -> Option<OrientedBinomial> {
    let (mut a, mut b) = (a, b);
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        let g = (*x).min(*y);
        *x -= g;
        *y -= g;
    }
    match order.compare(&a, &b) {
        Ordering::Greater => Some(OrientedBinomial { lead: a, tail: b }),
        Ordering::Less => Some(OrientedBinomial { lead: b, tail: a }),
        Ordering::Equal => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[derive(Default)]
pub struct BuchbergerOptions {
    /// Stop as soon as the reduced basis is known to contain an element of
    /// degree above two.
    pub quadratic_only: bool,
    /// Ceiling on monomial rewriting steps for one call of [`Buchberger::run`].
    pub max_steps: Option<usize>,
}


#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Finished(GroebnerBasis),
    /// Quadratic-only mode: a leading term of this degree is not divisible by
    /// any quadratic leading term once all pairs up to that degree are done.
    NotQuadratic {
        degree: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    /// A seed generator waiting to be reduced and inserted.
    Input(usize),
    Pair(usize, usize),
}

/// Resumable Buchberger state.
#[derive(Clone, Debug)]
pub struct Buchberger {
    order: TermOrder,
    opts: BuchbergerOptions,
    inputs: Vec<(Vec<u32>, Vec<u32>)>,
    basis: Vec<OrientedBinomial>,
    masks: Vec<u128>,
    queue: BTreeSet<(u32, Task)>,
    pending: HashSet<(usize, usize)>,
    stage: u32,
    steps: usize,
}

impl Buchberger {
    pub fn new(gens: &[Binomial], order: TermOrder, opts: BuchbergerOptions) -> Result<Self> {
        let mu = order.nvars();
        let mut inputs = Vec::with_capacity(gens.len());
        let mut queue = BTreeSet::new();
        for (i, g) in gens.iter().enumerate() {
            if g.nvars() != mu {
                return Err(Error::DimensionMismatch {
                    expected: mu,
                    got: g.nvars(),
                });
            }
            inputs.push((g.plus().to_vec(), g.minus().to_vec()));
            queue.insert((g.degree(), Task::Input(i)));
        }
        Ok(Buchberger {
            order,
            opts,
            inputs,
            basis: Vec::new(),
            masks: Vec::new(),
            queue,
            pending: HashSet::new(),
            stage: 0,
            steps: 0,
        })
    }

    /// Total rewriting steps performed so far.
    pub fn steps(&self) -> usize {
        self.steps
    }

    fn reduce_pair(&mut self, mut a: Vec<u32>, mut b: Vec<u32>) -> Option<OrientedBinomial> {
        rewrite(&self.basis, &mut a, &mut self.steps);
        rewrite(&self.basis, &mut b, &mut self.steps);
        if a == b {
            return None;
        }
        orient(&self.order, a, b)
    }

    fn insert(&mut self, e: OrientedBinomial) {
        let idx = self.basis.len();
        for j in 0..idx {
            let deg = total(&lcm(&self.basis[j].lead, &e.lead));
            self.queue.insert((deg, Task::Pair(j, idx)));
            self.pending.insert((j, idx));
        }
        self.masks.push(mask(&e.lead));
        self.basis.push(e);
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let l = lcm(&self.basis[i].lead, &self.basis[j].lead);
        let lm = mask(&l);
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.masks[k] & !lm == 0
                && divides(&self.basis[k].lead, &l)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    fn has_non_quadratic_lead(&self) -> Option<u32> {
        let quad: Vec<&OrientedBinomial> =
            self.basis.iter().filter(|e| total(&e.lead) <= 2).collect();
        self.basis
            .iter()
            .filter(|e| total(&e.lead) > 2)
            .find(|e| !quad.iter().any(|q| divides(&q.lead, &e.lead)))
            .map(|e| total(&e.lead))
    }

    /// Runs until completion, a quadratic-only abort, or the step ceiling. A
    /// `StepLimit` error leaves the state intact so `run` can be called again.
    pub fn run(&mut self) -> Result<RunStatus> {
        let ceiling = self.opts.max_steps.map(|m| self.steps.saturating_add(m));
        while let Some((deg, task)) = self.queue.iter().next().cloned() {
            if deg > self.stage {
                if self.opts.quadratic_only && self.stage >= 3 {
                    if let Some(d) = self.has_non_quadratic_lead() {
                        return Ok(RunStatus::NotQuadratic { degree: d });
                    }
                }
                self.stage = deg;
            }
            if let Some(c) = ceiling {
                if self.steps >= c {
                    return Err(Error::StepLimit(self.steps));
                }
            }
            self.queue.remove(&(deg, task.clone()));
            let new = match task {
                Task::Input(i) => {
                    let (a, b) = self.inputs[i].clone();
                    self.reduce_pair(a, b)
                }
                Task::Pair(i, j) => {
                    self.pending.remove(&(i, j));
                    let (fi, fj) = (&self.basis[i], &self.basis[j]);
                    if coprime(&fi.lead, &fj.lead) || self.chain_criterion(i, j) {
                        continue;
                    }
                    let (a, b) = spoly(fi, fj);
                    self.reduce_pair(a, b)
                }
            };
            if let Some(e) = new {
                self.insert(e);
            }
        }
        if self.opts.quadratic_only {
            if let Some(d) = self.has_non_quadratic_lead() {
                return Ok(RunStatus::NotQuadratic { degree: d });
            }
        }
        Ok(RunStatus::Finished(self.reduced_basis()))
    }

    fn reduced_basis(&self) -> GroebnerBasis {
        let g = &self.basis;
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..g.len() {
            let redundant = (0..g.len()).any(|j| {
                j != i && divides(&g[j].lead, &g[i].lead) && (g[j].lead != g[i].lead || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let leads: Vec<OrientedBinomial> = keep.iter().map(|&i| g[i].clone()).collect();
        let mut steps = 0;
        let mut elements: Vec<OrientedBinomial> = leads
            .iter()
            .map(|e| {
                let mut t = e.tail.clone();
                rewrite(&leads, &mut t, &mut steps);
                OrientedBinomial {
                    lead: e.lead.clone(),
                    tail: t,
                }
            })
            .collect();
        elements.sort_by(|a, b| {
            total(&a.lead)
                .cmp(&total(&b.lead))
                .then_with(|| self.order.compare(&b.lead, &a.lead))
        });
        let max_degree = elements.iter().map(|e| e.degree()).max().unwrap_or(0);
        GroebnerBasis {
            elements,
            order: self.order.clone(),
            max_degree,
        }
    }
}

/// The reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> Result<GroebnerBasis> {
    match Buchberger::new(gens, order.clone(), BuchbergerOptions::default())?.run()? {
        RunStatus::Finished(gb) => Ok(gb),
        RunStatus::NotQuadratic { .. } => unreachable!("full runs never abort early"),
    }
}

/// The reduced basis if it is quadratic, `None` as soon as it provably is not.
pub fn quadratic_gb(
    gens: &[Binomial],
    order: &TermOrder,
    max_steps: Option<usize>,
) -> Result<Option<GroebnerBasis>> {
    let opts = BuchbergerOptions {
        quadratic_only: true,
        max_steps,
    };
    match Buchberger::new(gens, order.clone(), opts)?.run()? {
        RunStatus::Finished(gb) if gb.is_quadratic() => Ok(Some(gb)),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibers::{minimal_generator_table, BoundSource, TableOptions};
    use crate::groebner::order::OrderKind;
    use crate::monomial::{enumerate_degree, Monomial, MonomialSet};

    fn gens(omega: &MonomialSet, k: u32) -> Vec<Binomial> {
        minimal_generator_table(omega, k, BoundSource::User, TableOptions::default())
            .unwrap()
            .generators()
    }

    #[test]
    fn veronese_surface_is_quadratic() {
        let m22 = enumerate_degree(2, 2).unwrap();
        let g = gens(&m22, 3);
        for kind in OrderKind::ALL {
            let gb = buchberger(&g, &TermOrder::natural(kind, 6)).unwrap();
            assert_eq!(gb.max_degree, 2, "{kind:?}");
            assert!(gb.is_groebner());
            assert!(gb.is_reduced());
            assert!(g.iter().all(|b| gb.reduces_to_zero(b)));
        }
    }

    #[test]
    fn non_quadratic_surface_aborts() {
        let g5 = crate::DiagonalGroup::cyclic(5, &[0, 1, 2]).unwrap();
        let b1 = g5.invariants_of_degree(1).unwrap();
        let seed = gens(&b1, 3);
        let order = TermOrder::natural(OrderKind::DegRevLex, b1.len());
        let full = buchberger(&seed, &order).unwrap();
        assert!(full.max_degree >= 3);
        assert!(full.is_groebner());
        assert!(quadratic_gb(&seed, &order, None).unwrap().is_none());
    }

    #[test]
    fn step_limit_is_resumable() {
        let omega = enumerate_degree(2, 3).unwrap();
        let seed = gens(&omega, 3);
        let order = TermOrder::natural(OrderKind::DegRevLex, omega.len());
        let opts = BuchbergerOptions {
            quadratic_only: false,
            max_steps: Some(5),
        };
        let mut bb = Buchberger::new(&seed, order.clone(), opts).unwrap();
        let mut aborts = 0;
        let gb = loop {
            match bb.run() {
                Ok(RunStatus::Finished(gb)) => break gb,
                Err(Error::StepLimit(_)) => aborts += 1,
                other => panic!("unexpected {other:?}"),
            }
        };
        assert!(aborts > 0);
        assert_eq!(gb, buchberger(&seed, &order).unwrap());
    }

    #[test]
    fn higher_degree_example_needs_quartic() {
        let omega = MonomialSet::new(
            2,
            4,
            [
                [4, 0, 0],
                [0, 4, 0],
                [1, 2, 1],
                [2, 0, 2],
                [0, 0, 4],
                [3, 1, 0],
            ]
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect(),
        )
        .unwrap();
        let seed = gens(&omega, 4);
        let gb = buchberger(&seed, &TermOrder::natural(OrderKind::DegRevLex, 6)).unwrap();
        assert!(gb.max_degree >= 4);
        assert!(gb.is_groebner());
    }

    #[test]
    fn json_shape() {
        let m12 = enumerate_degree(1, 2).unwrap();
        let gb = buchberger(&gens(&m12, 2), &TermOrder::natural(OrderKind::Lex, 3)).unwrap();
        let v = gb.to_json();
        assert_eq!(v["max_degree"], 2);
        assert_eq!(v["order"], "lex: w0 > w1 > w2");
        assert_eq!(v["elements"][0]["lead"], "plus");
        assert_eq!(v["elements"][0]["plus"], serde_json::json!([1, 0, 1]));
    }
}
