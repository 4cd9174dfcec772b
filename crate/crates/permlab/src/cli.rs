//! The batch command-line front end.
//!
//! Every capability of the library is reachable as a subcommand. Output
//! goes to stdout in either a human-oriented plain form or a structured
//! JSON document (`--format structured`) that embeds the effective
//! engine configuration; anything run-dependent — worker count, cache
//! location, wall time — is reported on stderr only, so equivalent runs
//! produce byte-identical stdout.
//!
//! Exit codes are part of the interface: `0` success, `2` invalid
//! input, `3` a budget was exceeded, `4` a conjecture check produced a
//! violated verdict.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra;
use crate::cache::{CountCache, SequenceSource};
use crate::compositions::{self, ProductRange};
use crate::config::EngineConfig;
use crate::conjectures::{self, BursteinVariant, Verdict};
use crate::enumerate::{wilf_classes, Basis};
use crate::error::{Error, Result};
use crate::growth;
use crate::perm::Permutation;
use crate::recurrence;
use crate::report::{self, OutputFormat, Table};
use crate::stacksort::{self, ShortestUnsortable, Sortability};

#[derive(Parser)]
#[command(
    name = "permlab",
    version,
    about = "Permutation-pattern laboratory: class enumeration, Wilf classes, \
             stack sorting, growth rates, recurrence fitting, compositions, and \
             conjecture checks"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Count-cache file, also read from PERMLAB_CACHE; created on first
    /// write.
    #[arg(long, global = true, env = "PERMLAB_CACHE")]
    cache: Option<PathBuf>,
    /// Output format: plain | structured.
    #[arg(long, global = true, default_value = "plain")]
    format: OutputFormat,
    /// Permit long-running checks (the ones estimated in hours).
    #[arg(long, global = true)]
    opt_in_long: bool,
    /// Seed for sampled cross-checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the enumeration node budget.
    #[arg(long, global = true)]
    enum_node_limit: Option<u64>,
    /// Override the stack-machine search node cap.
    #[arg(long, global = true)]
    search_node_cap: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Count the avoiders of a basis for n = 1..=N.
    Count {
        /// Basis text, patterns separated by ';'.
        #[arg(long)]
        basis: String,
        /// Largest length to count.
        #[arg(long)]
        max_n: usize,
    },
    /// Group patterns by equality of counting sequences up to N.
    Wilf {
        /// Patterns separated by ';'.
        #[arg(long, conflicts_with = "all_len")]
        patterns: Option<String>,
        /// Use every pattern of this length instead.
        #[arg(long)]
        all_len: Option<usize>,
        /// Classification horizon.
        #[arg(long)]
        max_n: usize,
    },
    /// Merge a permutation's rank profile into its layered counterpart.
    Conv {
        /// The permutation to merge.
        pattern: Permutation,
    },
    /// Stack-sorting operators, counts, parities, and machine search.
    #[command(subcommand)]
    Stack(StackCommand),
    /// Estimate a class's growth rate from its counting terms.
    Growth {
        /// Basis text, patterns separated by ';'.
        #[arg(long)]
        basis: String,
        /// Largest length to count.
        #[arg(long)]
        max_n: usize,
        /// Also verify supermultiplicativity (single-pattern bases).
        #[arg(long)]
        supermultiplicative: bool,
    },
    /// Fit a polynomial-coefficient linear recurrence to a sequence file.
    Fit {
        /// Sequence file: plain terms, `n: value` lines, or cache records.
        #[arg(long)]
        file: PathBuf,
        /// Recurrence order (with --degree: fit this exact shape).
        #[arg(long)]
        order: Option<usize>,
        /// Coefficient degree (with --order: fit this exact shape).
        #[arg(long)]
        degree: Option<usize>,
        /// Largest order to search when no exact shape is given.
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Largest degree to search when no exact shape is given.
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Count pattern-avoiding compositions and expand the recorded series.
    Compositions {
        /// Largest total to count (and the series truncation order).
        #[arg(long)]
        max_n: usize,
        /// Product-range reading: larger-indices | all-other-indices.
        #[arg(long, default_value = "larger-indices")]
        policy: String,
    },
    /// Check a recorded conjecture and report a verdict.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
}

#[derive(Subcommand)]
enum StackCommand {
    /// Apply one greedy pass of the stack-sorting operator.
    Sort {
        /// The permutation to sort.
        perm: Permutation,
    },
    /// Iterate the operator and report whether t passes reach identity.
    West {
        /// The permutation to sort.
        perm: Permutation,
        /// Number of passes.
        #[arg(long)]
        stacks: usize,
    },
    /// Count the t-pass sortable permutations of one length exhaustively.
    CountWest {
        /// Length to scan.
        #[arg(long)]
        len: usize,
        /// Number of passes.
        #[arg(long)]
        stacks: usize,
    },
    /// Tabulate sortable-count parities against the recorded rules.
    Parity {
        /// Number of passes.
        #[arg(long)]
        stacks: usize,
        /// Largest length to scan.
        #[arg(long)]
        max_n: usize,
    },
    /// Count integers below 2^m satisfying the two-pass parity rule.
    FibCount {
        /// Bit width.
        #[arg(long)]
        m: u32,
    },
    /// Search the serial stack machine for a sorting move sequence.
    Sortable {
        /// The permutation to sort.
        perm: Permutation,
        /// Number of stacks in series.
        #[arg(long)]
        stacks: usize,
    },
    /// Find the shortest permutations no move sequence can sort.
    ShortestUnsortable {
        /// Number of stacks in series.
        #[arg(long)]
        stacks: usize,
        /// Largest length to scan.
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum ConjectureCommand {
    /// Compare an inflation of 132 against the same inflation of 123.
    #[command(name = "burstein-1")]
    Burstein1 {
        /// First block.
        #[arg(long)]
        sigma1: Permutation,
        /// Second block.
        #[arg(long)]
        sigma2: Permutation,
        /// Third block.
        #[arg(long)]
        sigma3: Permutation,
        /// Largest length to compare.
        #[arg(long)]
        max_n: usize,
    },
    /// Compare an inflation of 312 against the same inflation of 123.
    #[command(name = "burstein-2")]
    Burstein2 {
        /// First block.
        #[arg(long)]
        sigma1: Permutation,
        /// Second block.
        #[arg(long)]
        sigma2: Permutation,
        /// Third block.
        #[arg(long)]
        sigma3: Permutation,
        /// Largest length to compare.
        #[arg(long)]
        max_n: usize,
    },
    /// Compare increasing vs decreasing middle blocks inside 123.
    #[command(name = "burstein-3")]
    Burstein3 {
        /// First block.
        #[arg(long)]
        sigma1: Permutation,
        /// Length of the middle block (>= 2).
        #[arg(long)]
        t: usize,
        /// Third block.
        #[arg(long)]
        sigma3: Permutation,
        /// Largest length to compare.
        #[arg(long)]
        max_n: usize,
    },
    /// Compare a nonlayered skeleton's inflation against the increasing
    /// skeleton's.
    BursteinNonlayered {
        /// The nonlayered skeleton.
        #[arg(long)]
        skeleton: Permutation,
        /// Blocks separated by ';', one per skeleton entry.
        #[arg(long)]
        blocks: String,
        /// Largest length to compare.
        #[arg(long)]
        max_n: usize,
    },
    /// Compare a pattern's class against its layer-merged pattern's class.
    Bona {
        /// The pattern.
        #[arg(long)]
        pattern: Permutation,
        /// Largest length to compare.
        #[arg(long)]
        max_n: usize,
    },
    /// Verify the recorded comparison of the two length-5 classes.
    StankovaWest {
        /// Largest length to compare (<= 13; 12 and 13 need --opt-in-long).
        #[arg(long)]
        max_n: usize,
    },
    /// Verify the sortable-count parity rules and observations.
    Parity {
        /// Largest length to scan (capped per pass by the brute budgets).
        #[arg(long)]
        max_n: usize,
    },
}

/// Entry point for the binary: parses the real process arguments.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Runs the CLI on explicit arguments and returns the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut cfg = EngineConfig::default();
    if let Some(seed) = cli.global.seed {
        cfg.seed = seed;
    }
    if let Some(limit) = cli.global.enum_node_limit {
        cfg.enum_node_limit = limit;
    }
    if let Some(cap) = cli.global.search_node_cap {
        cfg.search_node_cap = cap;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.workers.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: could not build the worker pool: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let outcome = pool.install(|| dispatch(&cli, &cfg));
    eprintln!("permlab: finished in {:.1?}", start.elapsed());
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_budget() {
                3
            } else {
                2
            }
        }
    }
}

fn emit<T: Serialize>(
    format: OutputFormat,
    command: &str,
    cfg: &EngineConfig,
    plain: String,
    view: T,
) {
    match format {
        OutputFormat::Plain => print!("{plain}"),
        OutputFormat::Structured => print!("{}", report::structured(command, cfg, view)),
    }
}

fn parse_pattern_list(text: &str) -> Result<Vec<Permutation>> {
    text.split(';').map(|part| part.trim().parse()).collect()
}

fn decimals(terms: &[num_bigint::BigUint]) -> Vec<String> {
    terms.iter().map(|t| t.to_string()).collect()
}

fn joined(terms: &[num_bigint::BigUint]) -> String {
    decimals(terms).join(", ")
}

fn rational_text(r: &num_rational::BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn dispatch(cli: &Cli, cfg: &EngineConfig) -> Result<i32> {
    let mut cache_store = match &cli.global.cache {
        Some(path) => {
            let cache = CountCache::open(path)?;
            eprintln!(
                "permlab: cache at {} ({} records)",
                path.display(),
                cache.len()
            );
            Some(cache)
        }
        None => None,
    };
    let mut source = match cache_store.as_mut() {
        Some(cache) => SequenceSource::cached(cache, cfg),
        None => SequenceSource::uncached(cfg),
    };
    let format = cli.global.format;

    match &cli.command {
        Command::Count { basis, max_n } => {
            let basis = Basis::parse(basis)?;
            let seq = source.counts(&basis, *max_n)?;
            let terms: Vec<&num_bigint::BigUint> = (1..=*max_n).map(|n| seq.term(n)).collect();
            let terms: Vec<num_bigint::BigUint> = terms.into_iter().cloned().collect();
            #[derive(Serialize)]
            struct View {
                basis: String,
                max_n: usize,
                terms: Vec<String>,
            }
            let view = View {
                basis: basis.canonical_text(),
                max_n: *max_n,
                terms: decimals(&terms),
            };
            emit(format, "count", cfg, format!("{}\n", joined(&terms)), view);
            Ok(0)
        }
        Command::Wilf { patterns, all_len, max_n } => {
            let patterns = match (patterns, all_len) {
                (Some(text), None) => parse_pattern_list(text)?,
                (None, Some(len)) => {
                    if *len == 0 || *len > 8 {
                        return Err(Error::InvalidArgument(format!(
                            "--all-len must be between 1 and 8, got {len}"
                        )));
                    }
                    crate::perm::all_permutations(*len).collect()
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "give exactly one of --patterns and --all-len".to_string(),
                    ))
                }
            };
            let classes = wilf_classes(&patterns, *max_n, cfg)?;
            #[derive(Serialize)]
            struct ClassView {
                patterns: Vec<String>,
                terms: Vec<String>,
            }
            #[derive(Serialize)]
            struct View {
                max_n: usize,
                classes: Vec<ClassView>,
            }
            let view = View {
                max_n: classes.max_n,
                classes: classes
                    .classes
                    .iter()
                    .map(|c| ClassView {
                        patterns: c.patterns.iter().map(|p| p.to_string()).collect(),
                        terms: decimals(&c.terms),
                    })
                    .collect(),
            };
            let mut plain = format!(
                "{} class(es) by counting sequences up to n = {}:\n",
                classes.classes.len(),
                classes.max_n
            );
            for (i, class) in classes.classes.iter().enumerate() {
                plain.push_str(&format!(
                    "class {}: {}\n  terms: {}\n",
                    i + 1,
                    class
                        .patterns
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" | "),
                    decimals(&class.terms).join(", "),
                ));
            }
            emit(format, "wilf", cfg, plain, view);
            Ok(0)
        }
        Command::Conv { pattern } => {
            let merged = algebra::conv(pattern);
            #[derive(Serialize)]
            struct View {
                pattern: String,
                conv: String,
            }
            let view = View { pattern: pattern.to_string(), conv: merged.to_string() };
            emit(format, "conv", cfg, format!("{merged}\n"), view);
            Ok(0)
        }
        Command::Stack(cmd) => run_stack(cmd, format, cfg),
        Command::Growth { basis, max_n, supermultiplicative } => {
            let basis = Basis::parse(basis)?;
            let estimate = growth::growth_estimate(&basis, *max_n, &mut source)?;
            let merge_check = if *supermultiplicative {
                if basis.len() != 1 {
                    return Err(Error::InvalidArgument(
                        "--supermultiplicative needs a single-pattern basis".to_string(),
                    ));
                }
                Some(growth::check_supermultiplicative(
                    &basis.patterns()[0],
                    *max_n,
                    &mut source,
                )?)
            } else {
                None
            };
            #[derive(Serialize)]
            struct MergeView {
                pattern: String,
                max_total: usize,
                holds: bool,
                merge_kind: String,
                failures: Vec<(usize, usize)>,
                witnesses: Vec<[String; 3]>,
            }
            #[derive(Serialize)]
            struct View {
                basis: String,
                kind: String,
                max_n: usize,
                terms: Vec<String>,
                best_root: String,
                best_m: usize,
                last_ratio: Option<String>,
                root_dips: Vec<usize>,
                reference_note: Option<String>,
                supermultiplicative: Option<MergeView>,
            }
            let kind_text = match estimate.kind {
                growth::BoundKind::Guaranteed => "guaranteed-lower-bound",
                growth::BoundKind::Heuristic => "heuristic",
            };
            let view = View {
                basis: basis.canonical_text(),
                kind: kind_text.to_string(),
                max_n: estimate.max_n,
                terms: decimals(&estimate.terms),
                best_root: report::fixed12(estimate.best_root),
                best_m: estimate.best_m,
                last_ratio: estimate.last_ratio.as_ref().map(report::ratio12),
                root_dips: estimate.root_dips.clone(),
                reference_note: estimate.reference_note.clone(),
                supermultiplicative: merge_check.as_ref().map(|c| MergeView {
                    pattern: c.pattern.to_string(),
                    max_total: c.max_total,
                    holds: c.holds,
                    merge_kind: match c.merge_kind {
                        growth::MergeKind::DirectSum => "direct-sum".to_string(),
                        growth::MergeKind::SkewSum => "skew-sum".to_string(),
                    },
                    failures: c.failures.clone(),
                    witnesses: c
                        .witnesses
                        .iter()
                        .map(|w| {
                            [w.left.to_string(), w.right.to_string(), w.merged.to_string()]
                        })
                        .collect(),
                }),
            };
            let mut plain = format!(
                "class: {}\nterms (n = 1..={}): {}\nbest root: s_{}^(1/{}) = {} ({})\n",
                view.basis,
                view.max_n,
                view.terms.join(", "),
                view.best_m,
                view.best_m,
                view.best_root,
                match estimate.kind {
                    growth::BoundKind::Guaranteed => "a proven lower bound on the growth rate",
                    growth::BoundKind::Heuristic => "heuristic only: several patterns",
                },
            );
            if let Some(ratio) = &view.last_ratio {
                plain.push_str(&format!("last consecutive ratio: {ratio}\n"));
            }
            if view.root_dips.is_empty() {
                plain.push_str("root sequence: nondecreasing over the computed range\n");
            } else {
                plain.push_str(&format!("root dips at m = {:?}\n", view.root_dips));
            }
            if let Some(note) = &view.reference_note {
                plain.push_str(&format!("note: {note}\n"));
            }
            if let Some(check) = &view.supermultiplicative {
                plain.push_str(&format!(
                    "supermultiplicativity (s_(m+n) >= s_m * s_n) up to m + n = {}: {}\n",
                    check.max_total,
                    if check.holds { "holds" } else { "FAILS" },
                ));
                plain.push_str(&format!("merge construction: {}\n", check.merge_kind));
                for [left, right, merged] in &check.witnesses {
                    plain.push_str(&format!(
                        "  sample merge: {left} with {right} -> {merged}\n"
                    ));
                }
                for (m, n) in &check.failures {
                    plain.push_str(&format!("  FAILURE at (m, n) = ({m}, {n})\n"));
                }
            }
            emit(format, "growth", cfg, plain, view);
            Ok(0)
        }
        Command::Fit { file, order, degree, max_order, max_degree } => {
            let sequence = recurrence::read_sequence_file(file)?;
            #[derive(Serialize)]
            struct View {
                file: String,
                terms_read: usize,
                index_base: i64,
                mode: String,
                order: Option<usize>,
                degree: Option<usize>,
                equations: Option<usize>,
                unknowns: Option<usize>,
                nullspace_dim: Option<usize>,
                recurrence: Option<String>,
            }
            let mut view = View {
                file: file.display().to_string(),
                terms_read: sequence.terms.len(),
                index_base: sequence.index_base,
                mode: String::new(),
                order: None,
                degree: None,
                equations: None,
                unknowns: None,
                nullspace_dim: None,
                recurrence: None,
            };
            let fit = match (order, degree) {
                (Some(r), Some(d)) => {
                    view.mode = "exact-shape".to_string();
                    Some(recurrence::fit_recurrence(
                        &sequence.terms,
                        *r,
                        *d,
                        sequence.index_base,
                    )?)
                }
                (None, None) => {
                    view.mode = "search".to_string();
                    recurrence::search_recurrence(
                        &sequence.terms,
                        *max_order,
                        *max_degree,
                        sequence.index_base,
                    )?
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "give both --order and --degree, or neither to search".to_string(),
                    ))
                }
            };
            let mut plain = format!(
                "read {} term(s), first index {}\n",
                view.terms_read, view.index_base
            );
            match fit {
                Some(result) => {
                    view.order = Some(result.order);
                    view.degree = Some(result.degree);
                    view.equations = Some(result.equations);
                    view.unknowns = Some(result.unknowns);
                    view.nullspace_dim = Some(result.nullspace_dim);
                    view.recurrence = result.recurrence.as_ref().map(|r| r.to_string());
                    plain.push_str(&format!(
                        "shape: order {}, degree {} ({} equations, {} unknowns, solution \
                         space of dimension {})\n",
                        result.order,
                        result.degree,
                        result.equations,
                        result.unknowns,
                        result.nullspace_dim,
                    ));
                    match &result.recurrence {
                        Some(rec) => plain.push_str(&format!("recurrence: {rec}\n")),
                        None => plain.push_str("no recurrence of this shape fits\n"),
                    }
                }
                None => {
                    view.mode = "search".to_string();
                    plain.push_str(&format!(
                        "no recurrence found searching orders 1..={max_order}, degrees \
                         0..={max_degree}\n"
                    ));
                }
            }
            emit(format, "fit", cfg, plain, view);
            Ok(0)
        }
        Command::Compositions { max_n, policy } => {
            let policy = match policy.as_str() {
                "larger-indices" => ProductRange::LargerIndices,
                "all-other-indices" => ProductRange::AllOtherIndices,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown policy {other:?}; expected \"larger-indices\" or \
                         \"all-other-indices\""
                    )))
                }
            };
            let report = compositions::savage_wilf_report(*max_n, policy)?;
            #[derive(Serialize)]
            struct RowView {
                n: usize,
                series_coefficient: String,
                composition_count: String,
                agrees: bool,
            }
            #[derive(Serialize)]
            struct View {
                max_n: usize,
                policy: String,
                counts: Vec<String>,
                x0_coefficient: String,
                rows: Vec<RowView>,
                notes: Vec<String>,
            }
            let view = View {
                max_n: *max_n,
                policy: report.series.policy.to_string(),
                counts: report.rows.iter().map(|r| r.brute_count.to_string()).collect(),
                x0_coefficient: rational_text(report.series.coefficient(0)),
                rows: report
                    .rows
                    .iter()
                    .map(|r| RowView {
                        n: r.n,
                        series_coefficient: rational_text(&r.series_coefficient),
                        composition_count: r.brute_count.to_string(),
                        agrees: r.agrees,
                    })
                    .collect(),
                notes: report.notes.clone(),
            };
            let mut plain = format!(
                "pattern-avoiding compositions (pattern 1,2,3, strict containment)\n\
                 counts for n = 1..={}: {}\n\
                 series expansion (policy: {}):\n",
                max_n,
                view.counts.join(", "),
                view.policy,
            );
            let mut table = Table::new(["n", "series", "compositions", "agrees"]);
            for row in &view.rows {
                table.push([
                    row.n.to_string(),
                    row.series_coefficient.clone(),
                    row.composition_count.clone(),
                    if row.agrees { "yes" } else { "no" }.to_string(),
                ]);
            }
            plain.push_str(&table.render());
            for note in &view.notes {
                plain.push_str(&format!("note: {note}\n"));
            }
            emit(format, "compositions", cfg, plain, view);
            Ok(0)
        }
        Command::Conjecture(cmd) => {
            let report = match cmd {
                ConjectureCommand::Burstein1 { sigma1, sigma2, sigma3, max_n } => {
                    conjectures::check_burstein(
                        &BursteinVariant::One {
                            sigma: [sigma1.clone(), sigma2.clone(), sigma3.clone()],
                        },
                        *max_n,
                        &mut source,
                    )?
                }
                ConjectureCommand::Burstein2 { sigma1, sigma2, sigma3, max_n } => {
                    conjectures::check_burstein(
                        &BursteinVariant::Two {
                            sigma: [sigma1.clone(), sigma2.clone(), sigma3.clone()],
                        },
                        *max_n,
                        &mut source,
                    )?
                }
                ConjectureCommand::Burstein3 { sigma1, t, sigma3, max_n } => {
                    conjectures::check_burstein(
                        &BursteinVariant::Three {
                            sigma1: sigma1.clone(),
                            t: *t,
                            sigma3: sigma3.clone(),
                        },
                        *max_n,
                        &mut source,
                    )?
                }
                ConjectureCommand::BursteinNonlayered { skeleton, blocks, max_n } => {
                    conjectures::check_burstein(
                        &BursteinVariant::Nonlayered {
                            skeleton: skeleton.clone(),
                            blocks: parse_pattern_list(blocks)?,
                        },
                        *max_n,
                        &mut source,
                    )?
                }
                ConjectureCommand::Bona { pattern, max_n } => {
                    conjectures::check_bona(pattern, *max_n, &mut source)?
                }
                ConjectureCommand::StankovaWest { max_n } => conjectures::stankova_west_crossing(
                    *max_n,
                    cli.global.opt_in_long,
                    &mut source,
                )?,
                ConjectureCommand::Parity { max_n } => {
                    conjectures::parity_conjectures(*max_n, cfg)?
                }
            };
            let code = if report.verdict == Verdict::Violated { 4 } else { 0 };
            emit(format, "conjecture", cfg, report.render_plain(), &report);
            Ok(code)
        }
    }
}

fn run_stack(cmd: &StackCommand, format: OutputFormat, cfg: &EngineConfig) -> Result<i32> {
    match cmd {
        StackCommand::Sort { perm } => {
            let image = stacksort::greedy_stack_sort(perm);
            #[derive(Serialize)]
            struct View {
                perm: String,
                image: String,
            }
            let view = View { perm: perm.to_string(), image: image.to_string() };
            emit(format, "stack sort", cfg, format!("{image}\n"), view);
            Ok(0)
        }
        StackCommand::West { perm, stacks } => {
            if *stacks == 0 {
                return Err(Error::InvalidArgument(
                    "the pass count must be at least 1".to_string(),
                ));
            }
            let mut chain = vec![perm.clone()];
            for _ in 0..*stacks {
                let next = stacksort::greedy_stack_sort(chain.last().unwrap());
                chain.push(next);
            }
            let sortable = chain.last().unwrap().is_identity();
            let passes_needed =
                chain.iter().position(|p| p.is_identity());
            #[derive(Serialize)]
            struct View {
                perm: String,
                stacks: usize,
                sortable: bool,
                passes_needed: Option<usize>,
                chain: Vec<String>,
            }
            let view = View {
                perm: perm.to_string(),
                stacks: *stacks,
                sortable,
                passes_needed,
                chain: chain.iter().map(|p| p.to_string()).collect(),
            };
            let mut plain = String::new();
            for (i, p) in chain.iter().enumerate() {
                if i == 0 {
                    plain.push_str(&format!("{p}\n"));
                } else {
                    plain.push_str(&format!("pass {i}: {p}\n"));
                }
            }
            plain.push_str(&match passes_needed {
                Some(k) => format!("sorted after {k} pass(es)\n"),
                None => format!("not sorted within {stacks} pass(es)\n"),
            });
            emit(format, "stack west", cfg, plain, view);
            Ok(0)
        }
        StackCommand::CountWest { len, stacks } => {
            let count = stacksort::count_west_sortable(*len, *stacks, cfg)?;
            #[derive(Serialize)]
            struct View {
                len: usize,
                stacks: usize,
                count: String,
            }
            let view =
                View { len: *len, stacks: *stacks, count: count.to_string() };
            emit(format, "stack count-west", cfg, format!("{count}\n"), view);
            Ok(0)
        }
        StackCommand::Parity { stacks, max_n } => {
            let rows = stacksort::parity_report(*stacks, *max_n, cfg)?;
            #[derive(Serialize)]
            struct RowView {
                n: usize,
                count: String,
                odd: bool,
                predicted_odd: Option<bool>,
                matches: Option<bool>,
            }
            #[derive(Serialize)]
            struct View {
                stacks: usize,
                rows: Vec<RowView>,
            }
            let view = View {
                stacks: *stacks,
                rows: rows
                    .iter()
                    .map(|r| RowView {
                        n: r.n,
                        count: r.count.to_string(),
                        odd: r.odd,
                        predicted_odd: r.predicted_odd,
                        matches: r.matches(),
                    })
                    .collect(),
            };
            let mut table = Table::new(["n", "count", "parity", "rule", "matches"]);
            for row in &view.rows {
                table.push([
                    row.n.to_string(),
                    row.count.clone(),
                    if row.odd { "odd" } else { "even" }.to_string(),
                    match row.predicted_odd {
                        Some(true) => "odd".to_string(),
                        Some(false) => "even".to_string(),
                        None => "-".to_string(),
                    },
                    match row.matches {
                        Some(true) => "yes".to_string(),
                        Some(false) => "NO".to_string(),
                        None => "-".to_string(),
                    },
                ]);
            }
            emit(format, "stack parity", cfg, table.render(), view);
            Ok(0)
        }
        StackCommand::FibCount { m } => {
            let result = stacksort::fibonacci_parity_count(*m)?;
            #[derive(Serialize)]
            struct View {
                m: u32,
                count: u64,
                fibonacci: u64,
                agrees: bool,
            }
            let view = View {
                m: result.m,
                count: result.count,
                fibonacci: result.fibonacci,
                agrees: result.count == result.fibonacci,
            };
            emit(
                format,
                "stack fib-count",
                cfg,
                format!(
                    "{} integers in [1, 2^{}] satisfy the rule; F_{} = {}\n",
                    view.count, view.m, view.m, view.fibonacci
                ),
                view,
            );
            Ok(0)
        }
        StackCommand::Sortable { perm, stacks } => {
            let verdict = stacksort::general_sortable(perm, *stacks, cfg)?;
            #[derive(Serialize)]
            struct View {
                perm: String,
                stacks: usize,
                sortable: bool,
                witness: Option<String>,
            }
            let (sortable, witness) = match &verdict {
                Sortability::Sortable(moves) => {
                    (true, Some(stacksort::witness_string(moves)))
                }
                Sortability::Unsortable => (false, None),
            };
            let view = View {
                perm: perm.to_string(),
                stacks: *stacks,
                sortable,
                witness: witness.clone(),
            };
            let plain = match &witness {
                Some(w) => format!(
                    "{perm} is sortable on {stacks} stack(s) in series\nwitness: {w}\n\
                     (letter k of the alphabet = move from stage k to stage k+1; 'a' \
                     takes input, the last letter emits output)\n"
                ),
                None => format!("{perm} is not sortable on {stacks} stack(s) in series\n"),
            };
            emit(format, "stack sortable", cfg, plain, view);
            Ok(0)
        }
        StackCommand::ShortestUnsortable { stacks, max_len } => {
            let found = stacksort::shortest_unsortable(*stacks, *max_len, cfg)?;
            #[derive(Serialize)]
            struct View {
                stacks: usize,
                max_len: usize,
                shortest_len: Option<usize>,
                count: Option<usize>,
                perms: Vec<String>,
            }
            let (view, plain) = match &found {
                ShortestUnsortable::Found { len, perms } => {
                    let mut plain = format!(
                        "shortest unsortable length on {stacks} stack(s): {len} \
                         ({} permutation(s))\n",
                        perms.len()
                    );
                    for p in perms {
                        plain.push_str(&format!("{p}\n"));
                    }
                    (
                        View {
                            stacks: *stacks,
                            max_len: *max_len,
                            shortest_len: Some(*len),
                            count: Some(perms.len()),
                            perms: perms.iter().map(|p| p.to_string()).collect(),
                        },
                        plain,
                    )
                }
                ShortestUnsortable::NoneUpTo(len) => (
                    View {
                        stacks: *stacks,
                        max_len: *max_len,
                        shortest_len: None,
                        count: None,
                        perms: Vec::new(),
                    },
                    format!(
                        "every permutation of length <= {len} is sortable on {stacks} \
                         stack(s)\n"
                    ),
                ),
            };
            emit(format, "stack shortest-unsortable", cfg, plain, view);
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_lists_parse_in_order() {
        let patterns = parse_pattern_list("132; 21; 1").unwrap();
        assert_eq!(patterns.len(), 3);
        assert_eq!(patterns[0].to_string(), "1,3,2");
        assert_eq!(patterns[2].to_string(), "1");
        assert!(parse_pattern_list("132;;21").is_err());
    }

    #[test]
    fn parse_failures_exit_with_invalid_input() {
        assert_eq!(run_from(["permlab", "definitely-not-a-command"]), 2);
        assert_eq!(run_from(["permlab", "count", "--basis", "1x2", "--max-n", "3"]), 2);
        assert_eq!(run_from(["permlab", "conv", "1,1,2"]), 2);
    }

    #[test]
    fn help_and_version_exit_cleanly() {
        assert_eq!(run_from(["permlab", "--help"]), 0);
        assert_eq!(run_from(["permlab", "--version"]), 0);
    }

    #[test]
    fn budget_failures_exit_with_code_three() {
        assert_eq!(
            run_from(["permlab", "stack", "count-west", "--len", "13", "--stacks", "1"]),
            3
        );
        assert_eq!(
            run_from([
                "permlab",
                "--enum-node-limit",
                "10",
                "count",
                "--basis",
                "132",
                "--max-n",
                "9",
            ]),
            3
        );
    }

    #[test]
    fn rational_text_renders_integers_plainly() {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let three = BigRational::from(BigInt::from(3));
        assert_eq!(rational_text(&three), "3");
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rational_text(&half), "1/2");
    }
}
