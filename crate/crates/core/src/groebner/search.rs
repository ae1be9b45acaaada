//! Search for a term order with a quadratic reduced Groebner basis.
//!
//! Candidates are tried in a fixed sequence: caller hints, orders induced by
//! sorting `Omega` with a term order on `R`, then every variable ranking when
//! `mu <= 8` or seeded random rankings beyond. Runs are dispatched in
//! parallel batches and the first success by candidate index wins.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::binomial::Binomial;
use crate::error::Result;
use crate::fibers::GeneratorTable;
use crate::groebner::buchberger::{quadratic_gb, GroebnerBasis};
use crate::groebner::order::{OrderKind, TermOrder};
use crate::monomial::MonomialSet;

pub const SYSTEMATIC_MAX_MU: usize = 8;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of Buchberger runs.
    pub budget: usize,
    pub seed: u64,
    /// Per-run ceiling on rewriting steps; a run hitting it counts as a miss.
    pub max_steps: Option<usize>,
    /// Orders tried before any generated candidate.
    pub hints: Vec<TermOrder>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 2000,
            seed: 0,
            max_steps: Some(5_000_000),
            hints: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        order: TermOrder,
        gb: GroebnerBasis,
        /// Position of the winning candidate in the candidate sequence.
        candidate: usize,
    },
    NotFoundWithin {
        budget: usize,
        tried: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// The generator table already has a minimal generator above degree 2,
    /// so no order can succeed.
    pub proved_impossible: bool,
    pub warnings: Vec<String>,
}

/// Lex and DegLex (and RevLex and DegRevLex) agree on homogeneous ideals, so
/// only one of each pair is tried.
const EFFECTIVE_KINDS: [OrderKind; 2] = [OrderKind::DegRevLex, OrderKind::Lex];

fn canonical_kind(k: OrderKind) -> OrderKind {
    match k {
        OrderKind::DegLex => OrderKind::Lex,
        OrderKind::RevLex => OrderKind::DegRevLex,
        k => k,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        heap(k - 1, cur, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
            heap(k - 1, cur, out);
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

/// Rankings of `S`-variables obtained by sorting `Omega` with a term order on
/// `R` (Lex or graded RevLex over every ordering of `x_0..x_n`), greatest
/// first and reversed.
fn induced_rankings(omega: &MonomialSet) -> Vec<Vec<usize>> {
    let nv = omega.nvars();
    let mut out = Vec::new();
    if nv > 5 {
        return out;
    }
    for perm in permutations(nv) {
        for kind in [OrderKind::DegRevLex, OrderKind::Lex] {
            let r_order = TermOrder::Ranked {
                kind,
                vars: perm.clone(),
            };
            let mut idx: Vec<usize> = (0..omega.len()).collect();
            idx.sort_by(|&i, &j| {
                r_order.compare(omega.get(j).exponents(), omega.get(i).exponents())
            });
            let rev: Vec<usize> = idx.iter().rev().copied().collect();
            out.push(idx);
            out.push(rev);
        }
    }
    out
}

struct Candidates<'a> {
    omega: &'a MonomialSet,
    opts: &'a SearchOptions,
    seen: HashSet<(OrderKind, Vec<usize>)>,
    stage: usize,
    buffer: std::collections::VecDeque<TermOrder>,
    perms: Option<Vec<Vec<usize>>>,
    perm_at: usize,
    rng: ChaCha8Rng,
    random_draws: usize,
}

impl<'a> Candidates<'a> {
    fn new(omega: &'a MonomialSet, opts: &'a SearchOptions) -> Self {
        Candidates {
            omega,
            opts,
            seen: HashSet::new(),
            stage: 0,
            buffer: opts.hints.iter().cloned().collect(),
            perms: None,
            perm_at: 0,
            rng: ChaCha8Rng::seed_from_u64(opts.seed),
            random_draws: 0,
        }
    }

    fn fresh(&mut self, o: &TermOrder) -> bool {
        match o {
            TermOrder::Ranked { kind, vars } => {
                self.seen.insert((canonical_kind(*kind), vars.clone()))
            }
            TermOrder::Lifted { .. } => true,
        }
    }

    fn refill(&mut self) -> bool {
        let mu = self.omega.len();
        match self.stage {
            0 => {
                for vars in induced_rankings(self.omega) {
                    for kind in EFFECTIVE_KINDS {
                        self.buffer.push_back(TermOrder::Ranked {
                            kind,
                            vars: vars.clone(),
                        });
                    }
                }
                self.stage = 1;
                true
            }
            1 => {
                if mu <= SYSTEMATIC_MAX_MU {
                    let perms = self.perms.get_or_insert_with(|| permutations(mu));
                    if self.perm_at >= perms.len() {
                        self.stage = 3;
                        return false;
                    }
                    let end = (self.perm_at + 256).min(perms.len());
                    for p in &perms[self.perm_at..end] {
                        for kind in EFFECTIVE_KINDS {
                            self.buffer.push_back(TermOrder::Ranked {
                                kind,
                                vars: p.clone(),
                            });
                        }
                    }
                    self.perm_at = end;
                } else {
                    self.stage = 2;
                }
                true
            }
            2 => {
                // random rankings; stop after a generous number of duplicate-prone draws
                if self.random_draws > self.opts.budget.saturating_mul(4) + 64 {
                    self.stage = 3;
                    return false;
                }
                for _ in 0..128 {
                    let mut p: Vec<usize> = (0..mu).collect();
                    p.shuffle(&mut self.rng);
                    self.random_draws += 1;
                    for kind in EFFECTIVE_KINDS {
                        self.buffer.push_back(TermOrder::Ranked {
                            kind,
                            vars: p.clone(),
                        });
                    }
                }
                true
            }
            _ => false,
        }
    }

    fn next(&mut self) -> Option<TermOrder> {
        loop {
            while let Some(o) = self.buffer.pop_front() {
                if self.fresh(&o) {
                    return Some(o);
                }
            }
            if !self.refill() {
                return None;
            }
        }
    }
}

/// Tries candidate orders until one yields a quadratic reduced basis or the
/// budget is spent. `table` supplies the seed generators and, when it has a
/// generator above degree 2, short-circuits the search.
pub fn search_quadratic_order(
    omega: &MonomialSet,
    table: &GeneratorTable,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let mut warnings = Vec::new();
    if let Some(k) = table.degrees.keys().find(|&&k| k > 2) {
        warnings.push(format!(
            "not quadratic: the toric ideal has {} minimal generator(s) of degree {k}, so no quadratic Groebner basis exists",
            table.count(*k)
        ));
        return Ok(SearchReport {
            outcome: SearchOutcome::NotFoundWithin {
                budget: opts.budget,
                tried: 0,
            },
            proved_impossible: true,
            warnings,
        });
    }
    if !table.bound.is_certified() {
        warnings.push(format!(
            "generators certified only up to degree {}; a basis found is relative to that seed",
            table.verified_up_to
        ));
    }
    let gens: Vec<Binomial> = table.generators();
    let batch = (rayon::current_num_threads() * 2).max(2);
    let mut cands = Candidates::new(omega, opts);
    let mut tried = 0usize;
    while tried < opts.budget {
        let mut chunk = Vec::with_capacity(batch);
        while chunk.len() < batch && tried + chunk.len() < opts.budget {
            match cands.next() {
                Some(o) => chunk.push(o),
                None => break,
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Option<GroebnerBasis>> = chunk
            .par_iter()
            .map(|o| quadratic_gb(&gens, o, opts.max_steps).ok().flatten())
            .collect();
        for (i, r) in results.into_iter().enumerate() {
            if let Some(gb) = r {
                return Ok(SearchReport {
                    outcome: SearchOutcome::Found {
                        order: chunk[i].clone(),
                        gb,
                        candidate: tried + i,
                    },
                    proved_impossible: false,
                    warnings,
                });
            }
        }
        tried += chunk.len();
    }
    Ok(SearchReport {
        outcome: SearchOutcome::NotFoundWithin {
            budget: opts.budget,
            tried,
        },
        proved_impossible: false,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_complete() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        let set: HashSet<_> = p.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        assert_eq!(p[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn candidates_are_distinct_and_deterministic() {
        let omega = crate::monomial::enumerate_degree(2, 3).unwrap();
        let opts = SearchOptions {
            seed: 7,
            ..SearchOptions::default()
        };
        let take = |n: usize| {
            let mut c = Candidates::new(&omega, &opts);
            (0..n)
                .map_while(|_| c.next())
                .map(|o| o.spec_string())
                .collect::<Vec<_>>()
        };
        let a = take(500);
        assert_eq!(a, take(500));
        let set: HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
    }
}
