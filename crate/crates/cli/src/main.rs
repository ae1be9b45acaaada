use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use veronese_core::groebner::{default_hints, resolve_order, toric_generators};
use veronese_core::hilbert::{default_h_k_max, hilbert_series_prefix};
use veronese_core::{
    buchberger, generator_table, h_polynomial, h_vector_group, is_2_normal, is_2_normality_witness,
    koszul_label, lift_omega, lift_order, quadratic_label, run_scenario, scenario::registry,
    search_quadratic_order, survey_groups, DiagonalGroup, Error, FamilySpec, Monomial, MonomialSet,
    OrderSpec, SearchOptions, SearchOutcome, SurveyOptions, TableOptions, Validation,
};

/// Minimal generators, Hilbert functions and Groebner bases of toric ideals
/// of monomial projections of Veronese varieties.
#[derive(Parser)]
#[command(name = "veronese", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized order search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of term orders tried by the search.
    #[arg(long, global = true, default_value_t = 2000)]
    budget: usize,
    /// Largest degree examined when no completeness bound applies.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Ceiling on enumerated multisets before aborting.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    guard: u128,
    /// Write output here instead of stdout (surveys: the JSON-lines file).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a monomial family and print its members.
    Omega { family: String },
    /// Degrees of minimal binomial generators.
    Mingens {
        family: String,
        /// Include one representative binomial per generator.
        #[arg(long)]
        representatives: bool,
    },
    /// Hilbert function values and, with all pure powers present, the h-polynomial.
    Hilbert { family: String },
    /// 2-normality, optionally testing one monomial as a witness.
    Normal2 {
        family: String,
        #[arg(long)]
        witness: Option<String>,
    },
    /// h-vector of a group by the exponent count and by the Hilbert series.
    Hvec { group: String },
    /// Reduced Groebner basis under a term order.
    Gb {
        family: String,
        /// e.g. "degrevlex", "lex: w3 > w0 > w1 > w2", "rc(6,3,1)", "lift(rc(6,3,1); sizes=1,1,2)".
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Search for a term order with a quadratic Groebner basis.
    GbSearch { family: String },
    /// Split variables into blocks and lift Omega (and an order).
    Lift {
        family: String,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Order on the base set to lift; the lifted basis is computed.
        #[arg(long)]
        order: Option<String>,
    },
    /// Run a named reproduction scenario.
    Scenario {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Survey cyclic groups over canonical weight vectors.
    Survey {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d_min: u32,
        #[arg(long)]
        d_max: u32,
        /// Also search quadratic Groebner bases for quadratic rows.
        #[arg(long)]
        search: bool,
    },
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// Accepts a family string or a bare group, read as `group(<g>; t=1)`.
fn family(text: &str) -> anyhow::Result<FamilySpec> {
    match FamilySpec::parse(text) {
        Ok(f) => Ok(f),
        Err(e) if text.trim_start().starts_with("C(") => Ok(FamilySpec::GroupInvariants {
            group: DiagonalGroup::parse(text, Validation::Nominal).map_err(|_| e)?,
            t: 1,
        }),
        Err(e) => Err(e.into()),
    }
}

struct Output {
    json: bool,
    out: Option<PathBuf>,
    buf: String,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn value(&mut self, v: serde_json::Value) {
        let s = serde_json::to_string_pretty(&v).expect("json");
        self.line(s);
    }

    fn flush(self) -> anyhow::Result<()> {
        match &self.out {
            Some(p) => {
                fs::write(p, &self.buf).with_context(|| format!("writing {}", p.display()))?
            }
            None => std::io::stdout().write_all(self.buf.as_bytes())?,
        }
        Ok(())
    }
}

fn table_opts(g: &Global, representatives: bool) -> TableOptions {
    TableOptions {
        guard: g.guard,
        representatives,
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let g = cli.global.clone();
    let mut o = Output {
        json: g.json,
        out: g.out.clone(),
        buf: String::new(),
    };
    let mut code = 0u8;
    match cli.command {
        Command::Omega { family: f } => {
            let spec = family(&f)?;
            let set = spec.build()?;
            if o.json {
                let members: Vec<String> = set.iter().map(|m| m.to_string()).collect();
                o.value(json!({"family": spec.to_string(), "n": set.n(), "d": set.degree(), "size": set.len(), "members": members}));
            } else {
                o.line(format!("# {spec}: {} monomials", set.len()));
                o.buf.push_str(&set.to_text());
            }
        }
        Command::Mingens {
            family: f,
            representatives,
        } => {
            let spec = family(&f)?;
            let set = spec.build()?;
            let t = generator_table(&set, g.max_degree, table_opts(&g, representatives))?;
            let q = quadratic_label(&spec, g.max_degree)?;
            let k = koszul_label(&spec)?;
            if o.json {
                o.value(json!({"family": spec.to_string(), "table": t.to_json(), "quadratic": q, "koszul": k}));
            } else {
                o.line(format!(
                    "# {spec}: {} monomials; complete up to degree {} ({} bound)",
                    set.len(),
                    t.verified_up_to,
                    t.bound.name()
                ));
                for (deg, count) in t.as_pairs() {
                    o.line(format!("degree {deg}: {count}"));
                }
                o.line(format!("quadratic: {:?} {:?}", q.property, q.status));
                o.line(format!("koszul: {:?} {:?}", k.property, k.status));
                if let Some(reps) = &t.representatives {
                    for (deg, bs) in reps {
                        for b in bs {
                            o.line(format!("  [{deg}] {b}"));
                        }
                    }
                }
            }
        }
        Command::Hilbert { family: f } => {
            let set = family(&f)?.build()?;
            let k_max = g.max_degree.unwrap_or(default_h_k_max(&set));
            let hf = hilbert_series_prefix(&set, k_max, g.guard)?;
            let hp = if set.contains_pure_powers() {
                Some(h_polynomial(&set, k_max.max(3), g.guard))
            } else {
                None
            };
            let hp_json = match &hp {
                Some(Ok(h)) => json!(h),
                Some(Err(e)) => json!(e.to_string()),
                None => json!(null),
            };
            if o.json {
                o.value(json!({"hilbert_function": hf, "h_polynomial": hp_json}));
            } else {
                for (k, v) in hf.iter().enumerate() {
                    o.line(format!("HF({k}) = {v}"));
                }
                match hp {
                    Some(Ok(h)) => o.line(format!("h = {h:?}")),
                    Some(Err(e)) => o.line(format!("h-polynomial unavailable: {e}")),
                    None => o.line("h-polynomial needs every pure power x_i^d"),
                }
            }
        }
        Command::Normal2 { family: f, witness } => {
            let set = family(&f)?.build()?;
            let tn = is_2_normal(&set);
            let checked = match &witness {
                Some(w) => Some(is_2_normality_witness(
                    &set,
                    &Monomial::parse(w, set.nvars())?,
                )?),
                None => None,
            };
            if o.json {
                o.value(json!({"is_2_normal": tn.is_2_normal, "witness": tn.witness.map(|m| m.to_string()),
                    "unreachable": tn.unreachable, "checked_witness": checked}));
            } else {
                o.line(format!("2-normal: {}", tn.is_2_normal));
                if let Some(w) = tn.witness {
                    o.line(format!(
                        "lex-least unreachable: {w} ({} unreachable)",
                        tn.unreachable
                    ));
                }
                if let (Some(w), Some(c)) = (witness, checked) {
                    o.line(format!("{w} is a witness: {c}"));
                }
            }
        }
        Command::Hvec { group } => {
            let grp = match family(&group)? {
                FamilySpec::GroupInvariants { group, .. } => group,
                _ => bail!("hvec needs a group such as C(4;0,1,2,3)"),
            };
            let hv = h_vector_group(&grp);
            let b1 = grp.invariants_of_degree(1)?;
            let hp = h_polynomial(&b1, default_h_k_max(&b1), g.guard)?;
            let agree =
                hp.len() == hv.h.len() && hp.iter().zip(&hv.h).all(|(a, b)| *a == *b as i128);
            if !agree {
                code = EXIT_MISMATCH;
            }
            if o.json {
                o.value(json!({"group": grp.to_string(), "h_vector": hv.h, "regularity": hv.regularity, "h_polynomial": hp, "agree": agree}));
            } else {
                o.line(format!("h-vector (exponent count): {:?}", hv.h));
                o.line(format!("h-polynomial (Hilbert series): {hp:?}"));
                o.line(format!("agree: {agree}"));
            }
        }
        Command::Gb { family: f, order } => {
            let set = family(&f)?.build()?;
            let ord = resolve_order(&OrderSpec::parse(&order)?, &set)?;
            let gens = toric_generators(&set, g.max_degree, g.guard)?;
            let gb = buchberger(&gens, &ord)?;
            if o.json {
                o.value(gb.to_json());
            } else {
                o.line(format!(
                    "# order {}; {} elements; max degree {}",
                    ord.spec_string(),
                    gb.elements.len(),
                    gb.max_degree
                ));
                for e in &gb.elements {
                    o.line(e.to_binomial().to_string());
                }
            }
        }
        Command::GbSearch { family: f } => {
            let set = family(&f)?.build()?;
            let table = generator_table(&set, g.max_degree, table_opts(&g, true))?;
            let opts = SearchOptions {
                budget: g.budget,
                seed: g.seed,
                hints: default_hints(&set),
                ..SearchOptions::default()
            };
            let rep = search_quadratic_order(&set, &table, &opts)?;
            let outcome = match &rep.outcome {
                SearchOutcome::Found {
                    order,
                    gb,
                    candidate,
                } => {
                    json!({"result": "found", "order": order.spec_string(), "candidate": candidate, "basis": gb.to_json()})
                }
                SearchOutcome::NotFoundWithin { budget, tried } => {
                    json!({"result": "not-found-within", "budget": budget, "tried": tried, "seed": g.seed})
                }
            };
            if o.json {
                o.value(json!({"outcome": outcome, "proved_impossible": rep.proved_impossible, "warnings": rep.warnings}));
            } else {
                match &rep.outcome {
                    SearchOutcome::Found {
                        order,
                        gb,
                        candidate,
                    } => {
                        o.line(format!(
                            "found at candidate {candidate}: {}",
                            order.spec_string()
                        ));
                        o.line(format!(
                            "{} quadrics in the reduced basis",
                            gb.elements.len()
                        ));
                    }
                    SearchOutcome::NotFoundWithin { budget, tried } => {
                        o.line(format!("no quadratic basis within budget {budget} ({tried} orders tried, seed {})", g.seed));
                    }
                }
                for w in &rep.warnings {
                    o.line(format!("warning: {w}"));
                }
            }
        }
        Command::Lift {
            family: f,
            sizes,
            order,
        } => {
            let set = family(&f)?.build()?;
            match order {
                None => {
                    let lifted = lift_omega(&set, &sizes)?;
                    lifted_output(&mut o, &lifted);
                }
                Some(spec) => {
                    let base = resolve_order(&OrderSpec::parse(&spec)?, &set)?;
                    let (lifted, ord) = lift_order(&base, &set, &sizes)?;
                    let gens = toric_generators(&lifted, g.max_degree, g.guard)?;
                    let gb = buchberger(&gens, &ord)?;
                    if o.json {
                        o.value(json!({"size": lifted.len(), "order": ord.spec_string(), "basis": gb.to_json()}));
                    } else {
                        o.line(format!(
                            "# lifted set: {} monomials in {} variables",
                            lifted.len(),
                            lifted.nvars()
                        ));
                        o.line(format!(
                            "# order {}; max degree {}",
                            ord.spec_string(),
                            gb.max_degree
                        ));
                        for e in &gb.elements {
                            o.line(e.to_binomial().to_string());
                        }
                    }
                }
            }
        }
        Command::Scenario { name, list } => {
            if list || name.is_none() {
                for s in registry() {
                    o.line(format!("{:<28} {}", s.name, s.description));
                }
            } else {
                let r = run_scenario(name.as_deref().unwrap_or_default())?;
                if !r.passed() {
                    code = EXIT_MISMATCH;
                }
                if o.json {
                    o.value(serde_json::to_value(&r)?);
                } else {
                    o.line(format!("{}: {}", r.name, r.description));
                    for s in &r.steps {
                        o.line(format!(
                            "  [{}] {} {}",
                            if s.matched { "ok" } else { "MISMATCH" },
                            s.op,
                            s.inputs
                        ));
                        if !s.matched {
                            o.line(format!("      expected {}", s.expected));
                            o.line(format!("      actual   {}", s.actual));
                        }
                        if let Some(n) = &s.note {
                            o.line(format!("      {n}"));
                        }
                    }
                    o.line(format!(
                        "overall: {}",
                        if r.passed() { "pass" } else { "fail" }
                    ));
                }
            }
        }
        Command::Survey {
            n,
            d_min,
            d_max,
            search,
        } => {
            let opts = SurveyOptions {
                search,
                budget: g.budget,
                seed: g.seed,
                guard: g.guard,
                ..SurveyOptions::default()
            };
            let jsonl = o.out.take();
            let rows = survey_groups(n, d_min..=d_max, &opts, jsonl.as_deref())?;
            if let Some(p) = &jsonl {
                let csv = p.with_extension("csv");
                fs::write(&csv, veronese_core::csv_digest(&rows))
                    .with_context(|| format!("writing {}", csv.display()))?;
            }
            if o.json {
                o.value(serde_json::to_value(&rows)?);
            } else {
                o.buf.push_str(&veronese_core::csv_digest(&rows));
            }
            if rows
                .iter()
                .any(|r| r.error.as_deref().is_some_and(|e| e.contains("guard")))
            {
                code = EXIT_GUARD;
            }
        }
    }
    o.flush()?;
    Ok(code)
}

fn lifted_output(o: &mut Output, lifted: &MonomialSet) {
    if o.json {
        let members: Vec<String> = lifted.iter().map(|m| m.to_string()).collect();
        o.value(json!({"n": lifted.n(), "d": lifted.degree(), "size": lifted.len(), "members": members}));
    } else {
        o.line(format!(
            "# {} monomials in {} variables",
            lifted.len(),
            lifted.nvars()
        ));
        o.buf.push_str(&lifted.to_text());
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::SizeGuard { .. }) | Some(Error::StepLimit(_)) => EXIT_GUARD,
        Some(Error::Io(_)) => EXIT_MISMATCH,
        Some(_) => EXIT_USAGE,
        None => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
