//! Batch surveys over cyclic weight vectors and the two conjecture scanners.
//!
//! Rows are keyed by the group spec string. Persistence is append-only JSON
//! lines, so an interrupted survey resumes by skipping keys already on disk.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::citation::Citation;
use crate::error::{domain, Error, Result};
use crate::families::{koszul_label, FamilySpec, Property, VerdictStatus};
use crate::fibers::{
    generator_table, quadraticity_of_table, Quadraticity, TableOptions, DEFAULT_GUARD,
};
use crate::groebner::default_hints;
use crate::groebner::search::{search_quadratic_order, SearchOptions, SearchOutcome};
use crate::group::DiagonalGroup;
use crate::surface::{koszul_verdict_surface, surface_quadraticity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Theorem,
    Computation,
    /// Computation without a completeness bound.
    Bound,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriState {
    pub value: Option<bool>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub citation: Option<Citation>,
}

impl TriState {
    fn unknown() -> Self {
        TriState {
            value: None,
            provenance: Provenance::None,
            citation: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum GqSearch {
    Found {
        order: String,
        candidate: usize,
    },
    NotFoundWithin {
        budget: usize,
        tried: usize,
        seed: u64,
    },
    NotAttempted,
    ImpossibleNonQuadratic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub spec: String,
    pub n: usize,
    pub d: u32,
    /// Weights before canonicalization.
    pub raw_weights: Vec<i64>,
    pub weights: Vec<u32>,
    pub mu: usize,
    pub quadratic: TriState,
    pub koszul: TriState,
    pub gq_search: GqSearch,
    pub generator_degrees: BTreeMap<u32, u64>,
    /// Surfaces only: the gcd criterion and the support-two test.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub criterion: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support_two: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    /// Microseconds per phase; not part of row identity.
    #[serde(default)]
    pub timings_us: BTreeMap<String, u64>,
}

impl SurveyRow {
    /// The row with its timings cleared, for determinism comparisons.
    pub fn without_timings(&self) -> SurveyRow {
        SurveyRow {
            timings_us: BTreeMap::new(),
            ..self.clone()
        }
    }

    /// For surfaces: the fiber verdict, the criterion and the support-two
    /// test all agree.
    pub fn routes_agree(&self) -> Option<bool> {
        let q = self.quadratic.value?;
        Some(self.criterion? == q && self.support_two? == q)
    }
}

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    pub search: bool,
    pub budget: usize,
    pub seed: u64,
    pub guard: u128,
    pub max_steps: Option<usize>,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            search: false,
            budget: 2000,
            seed: 0,
            guard: DEFAULT_GUARD,
            max_steps: Some(5_000_000),
        }
    }
}

/// Shift so the first weight is 0, reduce mod `d`, sort ascending.
pub fn canonical_weights(d: u32, weights: &[i64]) -> Vec<u32> {
    let d = d as i64;
    let w0 = weights.first().copied().unwrap_or(0);
    let mut w: Vec<u32> = weights
        .iter()
        .map(|&a| (a - w0).rem_euclid(d) as u32)
        .collect();
    w.sort_unstable();
    w
}

/// Whether the weights generate a group of order smaller than `d`.
pub fn is_gcd_degenerate(d: u32, weights: &[u32]) -> bool {
    weights.iter().fold(d, |g, &a| g.gcd(&a)) != 1
}

/// Canonical weight vectors `0 = a_0 <= a_1 <= ... <= a_n < d` of order
/// exactly `d`, for every `d` in the range.
pub fn canonical_weight_vectors(
    n: usize,
    d_range: std::ops::RangeInclusive<u32>,
) -> Vec<(u32, Vec<u32>)> {
    let mut out = Vec::new();
    for d in d_range {
        if d < 2 {
            continue;
        }
        let mut cur = vec![0u32; n + 1];
        fn rec(i: usize, lo: u32, d: u32, cur: &mut Vec<u32>, out: &mut Vec<(u32, Vec<u32>)>) {
            if i == cur.len() {
                if !is_gcd_degenerate(d, cur) {
                    out.push((d, cur.clone()));
                }
                return;
            }
            for a in lo..d {
                cur[i] = a;
                rec(i + 1, a, d, cur, out);
            }
        }
        rec(1, 0, d, &mut cur, &mut out);
    }
    out
}

fn spec_of(d: u32, w: &[u32]) -> String {
    let ws: Vec<String> = w.iter().map(|a| a.to_string()).collect();
    format!("C({d};{})", ws.join(","))
}

fn elapsed_us(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

/// One survey row for the cyclic group of order `d` with the given weights.
pub fn survey_row(d: u32, raw_weights: &[i64], opts: &SurveyOptions) -> SurveyRow {
    let weights = canonical_weights(d, raw_weights);
    let spec = spec_of(d, &weights);
    let mut row = SurveyRow {
        spec: spec.clone(),
        n: weights.len() - 1,
        d,
        raw_weights: raw_weights.to_vec(),
        weights: weights.clone(),
        mu: 0,
        quadratic: TriState::unknown(),
        koszul: TriState::unknown(),
        gq_search: GqSearch::NotAttempted,
        generator_degrees: BTreeMap::new(),
        criterion: None,
        support_two: None,
        error: None,
        timings_us: BTreeMap::new(),
    };
    if let Err(e) = fill_row(&mut row, opts) {
        row.error = Some(e.to_string());
    }
    row
}

fn fill_row(row: &mut SurveyRow, opts: &SurveyOptions) -> Result<()> {
    let w: Vec<i64> = row.weights.iter().map(|&a| a as i64).collect();
    let g = DiagonalGroup::cyclic(row.d, &w)?;
    let t = Instant::now();
    let b1 = g.invariants_of_degree(1)?;
    row.mu = b1.len();
    row.timings_us.insert("invariants".into(), elapsed_us(t));

    let t = Instant::now();
    let table = generator_table(
        &b1,
        None,
        TableOptions {
            guard: opts.guard,
            representatives: opts.search,
        },
    )?;
    row.timings_us.insert("fibers".into(), elapsed_us(t));
    row.generator_degrees = table.degrees.clone();
    let quadratic = match quadraticity_of_table(&table) {
        Quadraticity::Yes => Some(true),
        Quadraticity::No(_) => Some(false),
        Quadraticity::UnknownAbove(_) => None,
    };
    row.quadratic = TriState {
        value: quadratic,
        provenance: if quadratic.is_some() {
            Provenance::Computation
        } else {
            Provenance::Bound
        },
        citation: Some(Citation::GroupGenerationBound),
    };

    if row.n == 2 {
        let t = Instant::now();
        let v = surface_quadraticity(&g)?;
        row.criterion = Some(v.quadratic);
        let k = koszul_verdict_surface(&g)?;
        row.support_two = Some(k.witness.is_some());
        row.koszul = TriState {
            value: Some(k.koszul),
            provenance: Provenance::Theorem,
            citation: Some(k.citation),
        };
        row.timings_us.insert("criterion".into(), elapsed_us(t));
    } else {
        let label = koszul_label(&FamilySpec::GroupInvariants {
            group: g.clone(),
            t: 1,
        })?;
        row.koszul = match (label.property, label.status) {
            (_, VerdictStatus::Unknown) => TriState::unknown(),
            (p, VerdictStatus::ProvedByTheorem(c)) => TriState {
                value: Some(p == Property::Koszul),
                provenance: Provenance::Theorem,
                citation: Some(c),
            },
            (p, _) => TriState {
                value: Some(p == Property::Koszul),
                provenance: Provenance::Computation,
                citation: None,
            },
        };
    }

    row.gq_search = match quadratic {
        Some(false) => GqSearch::ImpossibleNonQuadratic,
        _ if !opts.search => GqSearch::NotAttempted,
        _ => {
            let t = Instant::now();
            let sopts = SearchOptions {
                budget: opts.budget,
                seed: opts.seed,
                max_steps: opts.max_steps,
                hints: default_hints(&b1),
            };
            let rep = search_quadratic_order(&b1, &table, &sopts)?;
            row.timings_us.insert("search".into(), elapsed_us(t));
            match rep.outcome {
                SearchOutcome::Found {
                    order, candidate, ..
                } => GqSearch::Found {
                    order: order.spec_string(),
                    candidate,
                },
                SearchOutcome::NotFoundWithin { budget, tried } => GqSearch::NotFoundWithin {
                    budget,
                    tried,
                    seed: opts.seed,
                },
            }
        }
    };
    Ok(())
}

fn read_rows(path: &Path) -> Result<Vec<SurveyRow>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<SurveyRow>(&line) {
            Ok(r) => rows.push(r),
            // a torn final line from an interrupted run is recomputed
            Err(_) => eprintln!("skipping unreadable line {} of {}", i + 1, path.display()),
        }
    }
    Ok(rows)
}

/// Runs the survey over every canonical weight vector with `n+1` entries and
/// order in `d_range`. With `jsonl`, rows already stored there are reused and
/// new rows are appended as they finish. Output is sorted by `(d, weights)`.
pub fn survey_groups(
    n: usize,
    d_range: std::ops::RangeInclusive<u32>,
    opts: &SurveyOptions,
    jsonl: Option<&Path>,
) -> Result<Vec<SurveyRow>> {
    if n < 1 {
        return domain("surveys need n >= 1");
    }
    let todo = canonical_weight_vectors(n, d_range);
    let mut done: Vec<SurveyRow> = match jsonl {
        Some(p) => read_rows(p)?,
        None => Vec::new(),
    };
    let wanted: HashSet<String> = todo.iter().map(|(d, w)| spec_of(*d, w)).collect();
    done.retain(|r| wanted.contains(&r.spec));
    let mut seen: HashSet<String> = HashSet::new();
    done.retain(|r| seen.insert(r.spec.clone()));
    let sink = match jsonl {
        Some(p) => Some(Mutex::new(
            OpenOptions::new().create(true).append(true).open(p)?,
        )),
        None => None,
    };
    let fresh: Vec<SurveyRow> = todo
        .par_iter()
        .filter(|(d, w)| !seen.contains(&spec_of(*d, w)))
        .map(|(d, w)| {
            let raw: Vec<i64> = w.iter().map(|&a| a as i64).collect();
            let row = survey_row(*d, &raw, opts);
            if let Some(s) = &sink {
                let line = serde_json::to_string(&row).map_err(|e| Error::Io(e.to_string()))?;
                let mut f = s.lock().expect("sink lock");
                writeln!(f, "{line}")?;
                f.flush()?;
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    done.extend(fresh);
    done.sort_by(|a, b| (a.d, &a.weights).cmp(&(b.d, &b.weights)));
    Ok(done)
}

fn tri(t: &TriState) -> &'static str {
    match t.value {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

/// A CSV digest of the rows, without timings.
pub fn csv_digest(rows: &[SurveyRow]) -> String {
    let mut out =
        String::from("spec,n,d,mu,quadratic,koszul,criterion,gq_search,generator_degrees,error\n");
    for r in rows {
        let gq = match &r.gq_search {
            GqSearch::Found { order, .. } => format!("found {order}"),
            GqSearch::NotFoundWithin { budget, .. } => format!("not-found-within {budget}"),
            GqSearch::NotAttempted => "not-attempted".into(),
            GqSearch::ImpossibleNonQuadratic => "impossible".into(),
        };
        let degs: Vec<String> = r
            .generator_degrees
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        let crit = r
            .criterion
            .map(|c| if c { "yes" } else { "no" })
            .unwrap_or("");
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{},{},\"{}\",\"{}\",\"{}\"\n",
            r.spec,
            r.n,
            r.d,
            r.mu,
            tri(&r.quadratic),
            tri(&r.koszul),
            crit,
            gq,
            degs.join(" "),
            r.error.as_deref().unwrap_or("").replace('"', "'"),
        ));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleWitness {
    pub indices: (usize, usize, usize),
    pub group: String,
    /// Fiber verdict on `B_1` of the projected group.
    pub quadratic: bool,
    pub generator_degrees: BTreeMap<u32, u64>,
    /// The surface criterion, when it applies to the presentation.
    pub criterion: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Conjecture1Outcome {
    Consistent {
        parent_quadratic: bool,
        triples: Vec<TripleWitness>,
    },
    CounterexampleCandidate {
        parent_quadratic: bool,
        parent_degrees: BTreeMap<u32, u64>,
        triples: Vec<TripleWitness>,
    },
}

/// Compares quadratic generation of `B_1` of `g` with quadratic generation
/// for every coordinate triple.
pub fn conjecture1_check(g: &DiagonalGroup, guard: u128) -> Result<Conjecture1Outcome> {
    if !g.is_cyclic_presentation() || g.n() < 3 {
        return domain("the triple comparison needs a cyclic group with n >= 3");
    }
    let opts = TableOptions {
        guard,
        representatives: false,
    };
    let parent = generator_table(&g.invariants_of_degree(1)?, None, opts)?;
    let parent_quadratic = quadraticity_of_table(&parent) == Quadraticity::Yes;
    let mut triples = Vec::new();
    for (idx, h) in g.triple_projections()? {
        let table = generator_table(&h.invariants_of_degree(1)?, None, opts)?;
        triples.push(TripleWitness {
            indices: idx,
            group: h.to_string(),
            quadratic: quadraticity_of_table(&table) == Quadraticity::Yes,
            generator_degrees: table.degrees,
            criterion: surface_quadraticity(&h).ok().map(|v| v.quadratic),
        });
    }
    let all = triples.iter().all(|t| t.quadratic);
    Ok(if all == parent_quadratic {
        Conjecture1Outcome::Consistent {
            parent_quadratic,
            triples,
        }
    } else {
        Conjecture1Outcome::CounterexampleCandidate {
            parent_quadratic,
            parent_degrees: parent.degrees,
            triples,
        }
    })
}

/// Quadratic generation and, when quadratic, a search for a quadratic
/// Groebner basis. A failed search is reported as inconclusive.
pub fn conjecture2_check(g: &DiagonalGroup, budget: usize, seed: u64) -> Result<SurveyRow> {
    let w = g.cyclic_weights()?;
    let raw: Vec<i64> = w.iter().map(|&a| a as i64).collect();
    let opts = SurveyOptions {
        search: true,
        budget,
        seed,
        ..SurveyOptions::default()
    };
    let row = survey_row(g.order(), &raw, &opts);
    match &row.error {
        Some(e) => domain(e.clone()),
        None => Ok(row),
    }
}
