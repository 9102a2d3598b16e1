//! Command-line front end.
//!
//! Exit codes: 0 verified, 1 divergence or violation found, 2 usage or input
//! error, 3 subset cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{Builtin, DoublingSet, CATALOG};
use crate::distribution::{
    compare_threaded, distribution_bruteforce_threaded, DistributionTable, Verdict,
};
use crate::families::{FamilyPair, Side};
use crate::pairfile::parse_family_pair;
use crate::sieve::{
    check_theorem_b, check_theorem_c, sieve_distribution_threaded, Outcome, Theorem, Witness,
    DEFAULT_SUBSET_CAP,
};
use crate::statistics::{NativeRule, Statistic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIVERGENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "partition-sieve",
    version,
    about = "Verify identically distributed partition statistics"
)]
struct Cli {
    /// Read the family pair from a JSON document instead of the catalog.
    #[arg(long, global = true, value_name = "PATH")]
    pair_file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    #[value(name = "X", alias = "x")]
    X,
    #[value(name = "Y", alias = "y")]
    Y,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::X => Side::X,
            SideArg::Y => Side::Y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    #[value(alias = "B")]
    B,
    #[value(alias = "C")]
    C,
}

#[derive(Debug, Clone, Args)]
struct PairArgs {
    /// Built-in pair name (see `catalog`).
    #[arg(long)]
    pair: Option<String>,
    /// Parameter d > 1 for `glaisher`.
    #[arg(long)]
    d: Option<u64>,
    /// M1 for `andrews`, one integer per line.
    #[arg(long, value_name = "PATH")]
    m1_file: Option<PathBuf>,
    /// Largest part size covered by `andrews` (defaults to the command's n).
    #[arg(long)]
    bound: Option<u64>,
    /// For `mod6`, use the literal prose reading of Y.
    #[arg(long)]
    prose_y: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in pairs.
    Catalog {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Distribution of one side of a pair by enumeration.
    Dist {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Compare the X and Y distributions for every n in a range.
    Compare {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Distribution by inclusion-exclusion, cross-checked against enumeration.
    Sieve {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check the hypotheses of the disjoint (b) or union-weight (c) criterion.
    Check {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

struct Failure(i32, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

struct Selected {
    pair: FamilyPair,
    prose_y: bool,
}

impl Selected {
    fn statistic(&self, side: Side) -> Statistic {
        if self.prose_y && side == Side::Y {
            Statistic::native(NativeRule::Mod6YProse)
        } else {
            Statistic::from_family(self.pair.side(side).clone())
        }
    }
}

fn read_m1(path: &PathBuf, bound: u64) -> Result<DoublingSet, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = line.parse::<u64>().map_err(|_| {
            usage(format!(
                "{}:{}: expected a positive integer, got `{line}`",
                path.display(),
                line_no + 1
            ))
        })?;
        values.push(v);
    }
    DoublingSet::new(values, bound).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn select(
    pair_file: &Option<PathBuf>,
    args: &PairArgs,
    working_n: u64,
) -> Result<Selected, Failure> {
    if let Some(path) = pair_file {
        if args.pair.is_some() {
            return Err(usage("--pair and --pair-file are mutually exclusive"));
        }
        if args.prose_y {
            return Err(usage("--prose-y applies only to the built-in mod6 pair"));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let pair =
            parse_family_pair(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(Selected {
            pair,
            prose_y: false,
        });
    }
    let name = args
        .pair
        .as_deref()
        .ok_or_else(|| usage("one of --pair or --pair-file is required"))?;
    let m1 = match (name, &args.m1_file) {
        ("andrews", Some(path)) => {
            let bound = args.bound.unwrap_or(working_n);
            if bound < working_n {
                return Err(usage(format!(
                    "--bound {bound} is below the requested n = {working_n}"
                )));
            }
            Some(read_m1(path, bound)?)
        }
        ("andrews", None) => return Err(usage("andrews requires --m1-file")),
        _ => None,
    };
    let builtin = Builtin::from_name(name, args.d, m1).map_err(|e| usage(e.to_string()))?;
    if args.prose_y && builtin != Builtin::Mod6 {
        return Err(usage("--prose-y applies only to the built-in mod6 pair"));
    }
    Ok(Selected {
        pair: builtin.pair(),
        prose_y: args.prose_y,
    })
}

fn dist_json(sel: &Selected, side: Side, stat: &Statistic, table: &DistributionTable) -> Value {
    let mut v = json!({
        "pair": sel.pair.name(),
        "side": side.to_string(),
        "statistic": stat.label(),
    });
    if let (Value::Object(obj), Value::Object(t)) = (&mut v, table.to_json_value()) {
        obj.extend(t);
    }
    v
}

fn cmd_catalog(format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = CATALOG
                .iter()
                .map(|(name, params, realizes)| json!({"name": name, "params": params, "realizes": realizes}))
                .collect();
            format!("{}\n", Value::Array(rows))
        }
        Format::Csv => {
            let mut out = String::from("name,params,realizes\n");
            for (name, params, realizes) in CATALOG {
                writeln!(out, "{name},\"{params}\",\"{realizes}\"").unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for (name, params, realizes) in CATALOG {
                let params = if params.is_empty() {
                    String::new()
                } else {
                    format!(" [{params}]")
                };
                writeln!(out, "{name} — {realizes}{params}").unwrap();
            }
            out
        }
    }
}

fn cmd_dist(sel: &Selected, side: Side, n: u64, format: Format, threads: usize) -> String {
    let stat = sel.statistic(side);
    let table = distribution_bruteforce_threaded(&stat, n, threads);
    match format {
        Format::Table => format!(
            "pair {} side {side} ({})\n{}",
            sel.pair.name(),
            stat.label(),
            table.to_text()
        ),
        Format::Csv => table.to_csv(),
        Format::Json => format!("{}\n", dist_json(sel, side, &stat, &table)),
    }
}

fn counts_brief(t: &DistributionTable) -> String {
    let items: Vec<String> = t.counts().iter().map(|(j, c)| format!("{j}:{c}")).collect();
    format!("{{{}}}", items.join(","))
}

fn cmd_compare(
    sel: &Selected,
    n_min: u64,
    n_max: u64,
    format: Format,
    threads: usize,
) -> (i32, String) {
    let x = sel.statistic(Side::X);
    let y = sel.statistic(Side::Y);
    let report = compare_threaded(&x, &y, n_min, n_max, threads);
    let code = if report.all_identical() {
        EXIT_OK
    } else {
        EXIT_DIVERGENT
    };
    let out = match format {
        Format::Table => {
            let mut out = format!(
                "pair {}: X = {}, Y = {}\n",
                sel.pair.name(),
                x.label(),
                y.label()
            );
            for row in &report.rows {
                match &row.verdict {
                    Verdict::Identical => {
                        writeln!(out, "n={:<4} identical  (p(n) = {})", row.n, row.x.total()).unwrap()
                    }
                    Verdict::Divergent { j, x_count, y_count } => writeln!(
                        out,
                        "n={:<4} divergent at j={j}: X={x_count} Y={y_count}; X counts {} Y counts {}",
                        row.n,
                        counts_brief(&row.x),
                        counts_brief(&row.y)
                    )
                    .unwrap(),
                }
            }
            match report.first_divergence() {
                None => {
                    writeln!(out, "result: identical for every n in [{n_min}, {n_max}]").unwrap()
                }
                Some(row) => writeln!(out, "result: divergent, first at n={}", row.n).unwrap(),
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,verdict,j,x_count,y_count\n");
            for row in &report.rows {
                match &row.verdict {
                    Verdict::Identical => writeln!(out, "{},identical,,,", row.n).unwrap(),
                    Verdict::Divergent {
                        j,
                        x_count,
                        y_count,
                    } => writeln!(out, "{},divergent,{j},{x_count},{y_count}", row.n).unwrap(),
                }
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    let mut v = json!({
                        "n": row.n.to_string(),
                        "verdict": if row.verdict == Verdict::Identical { "identical" } else { "divergent" },
                    });
                    if let Verdict::Divergent { j, x_count, y_count } = &row.verdict {
                        v["j"] = json!(j.to_string());
                        v["x_count"] = json!(x_count.to_string());
                        v["y_count"] = json!(y_count.to_string());
                        v["x"] = row.x.to_json_value()["counts"].clone();
                        v["y"] = row.y.to_json_value()["counts"].clone();
                    }
                    v
                })
                .collect();
            let v = json!({
                "pair": sel.pair.name(),
                "x": x.label(),
                "y": y.label(),
                "n_from": n_min.to_string(),
                "n_to": n_max.to_string(),
                "identical": report.all_identical(),
                "rows": rows,
            });
            format!("{v}\n")
        }
    };
    (code, out)
}

fn cmd_sieve(
    sel: &Selected,
    side: Side,
    n: u64,
    cap: u64,
    format: Format,
    threads: usize,
) -> Result<(i32, String), Failure> {
    if sel.prose_y && side == Side::Y {
        return Err(usage(
            "the prose reading of mod6 Y is not family-induced; sieve needs a family",
        ));
    }
    let fam = sel.pair.side(side);
    let result = sieve_distribution_threaded(fam, n, cap, threads);
    let brute = result.table.as_ref().map(|_| {
        distribution_bruteforce_threaded(&Statistic::from_family(fam.clone()), n, threads)
    });
    let crosscheck = match (&result.table, &brute) {
        (Some(s), Some(b)) if s == b => "PASS",
        (Some(_), Some(_)) => "FAIL",
        _ => "SKIPPED",
    };
    let code = if result.truncated {
        EXIT_CAP
    } else if crosscheck == "PASS" {
        EXIT_OK
    } else {
        EXIT_DIVERGENT
    };
    let out = match format {
        Format::Table => {
            let mut out = format!(
                "pair {} side {side} ({}) by inclusion-exclusion\n",
                sel.pair.name(),
                fam.name()
            );
            match &result.table {
                Some(t) => out.push_str(&t.to_text()),
                None => writeln!(out, "n = {n}\n(no table: subset cap reached)").unwrap(),
            }
            for (t, v) in result.superset_counts.iter().enumerate() {
                writeln!(out, "N_{t} = {v}").unwrap();
            }
            writeln!(out, "subsets explored: {}", result.subsets_explored).unwrap();
            writeln!(out, "truncated: {}", result.truncated).unwrap();
            writeln!(out, "crosscheck: {crosscheck}").unwrap();
            out
        }
        Format::Csv => match &result.table {
            Some(t) => t.to_csv(),
            None => format!("{}\n", DistributionTable::CSV_HEADER),
        },
        Format::Json => {
            let v = json!({
                "pair": sel.pair.name(),
                "side": side.to_string(),
                "statistic": fam.name(),
                "n": n.to_string(),
                "table": result.table.as_ref().map(|t| t.to_json_value()),
                "superset_counts": result.superset_counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "subsets_explored": result.subsets_explored.to_string(),
                "truncated": result.truncated,
                "crosscheck": crosscheck,
            });
            format!("{v}\n")
        }
    };
    Ok((code, out))
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::SharedElement {
            side,
            first,
            second,
            element,
        } => {
            let list = if *side == Side::X { "F" } else { "G" };
            format!("{list} members at {first} and {second} share element {element}")
        }
        Witness::WeightMismatch {
            index,
            f_weight,
            g_weight,
        } => {
            format!("weights differ at {index}: F weight {f_weight}, G weight {g_weight}")
        }
        Witness::UnionWeightMismatch {
            subset,
            f_weight,
            g_weight,
        } => {
            let s: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
            format!(
                "union weights differ for S = {{{}}}: F union {f_weight}, G union {g_weight}",
                s.join(", ")
            )
        }
    }
}

fn witness_json(w: &Witness) -> Value {
    let idx = |i: &crate::families::FamilyIndex| json!({"strand": i.strand.to_string(), "t": i.t.to_string()});
    match w {
        Witness::SharedElement {
            side,
            first,
            second,
            element,
        } => json!({
            "kind": "shared_element",
            "list": if *side == Side::X { "F" } else { "G" },
            "first": idx(first),
            "second": idx(second),
            "element": element.to_string(),
        }),
        Witness::WeightMismatch {
            index,
            f_weight,
            g_weight,
        } => json!({
            "kind": "weight_mismatch",
            "index": idx(index),
            "f_weight": f_weight.to_string(),
            "g_weight": g_weight.to_string(),
        }),
        Witness::UnionWeightMismatch {
            subset,
            f_weight,
            g_weight,
        } => json!({
            "kind": "union_weight_mismatch",
            "subset": subset.iter().map(idx).collect::<Vec<_>>(),
            "f_weight": f_weight.to_string(),
            "g_weight": g_weight.to_string(),
        }),
    }
}

fn cmd_check(
    sel: &Selected,
    theorem: Theorem,
    n_max: u64,
    cap: u64,
    format: Format,
) -> (i32, String) {
    let report = match theorem {
        Theorem::B => check_theorem_b(&sel.pair, n_max),
        Theorem::C => check_theorem_c(&sel.pair, n_max, cap),
    };
    let (code, status) = match &report.outcome {
        Outcome::Holds => (EXIT_OK, "holds".to_string()),
        Outcome::Violated(w) => (
            EXIT_DIVERGENT,
            format!("violation: {}", describe_witness(w)),
        ),
        Outcome::Inconclusive => (EXIT_CAP, format!("inconclusive: subset cap {cap} reached")),
    };
    let name = if theorem == Theorem::B { "B" } else { "C" };
    let out = match format {
        Format::Json => {
            let v = json!({
                "pair": sel.pair.name(),
                "theorem": name,
                "verified_up_to": report.verified_up_to.to_string(),
                "holds": report.holds(),
                "inconclusive": report.outcome == Outcome::Inconclusive,
                "subsets_explored": report.subsets_explored.map(|s| s.to_string()),
                "witness": report.witness().map(witness_json),
            });
            format!("{v}\n")
        }
        Format::Csv => format!(
            "pair,theorem,verified_up_to,status\n{},{name},{},\"{status}\"\n",
            sel.pair.name(),
            report.verified_up_to
        ),
        Format::Table => {
            let mut out = format!(
                "theorem {name} hypotheses for pair {}, checked for weights up to {}\n",
                sel.pair.name(),
                report.verified_up_to
            );
            if let Some(s) = report.subsets_explored {
                writeln!(out, "index sets explored: {s}").unwrap();
            }
            writeln!(out, "{status}").unwrap();
            out
        }
    };
    (code, out)
}

fn execute(cli: Cli, threads: usize) -> Result<(i32, String), Failure> {
    let pf = &cli.pair_file;
    Ok(match cli.command {
        Command::Catalog { format } => (EXIT_OK, cmd_catalog(format)),
        Command::Dist {
            pair,
            side,
            n,
            format,
        } => {
            let sel = select(pf, &pair, n)?;
            (EXIT_OK, cmd_dist(&sel, side.into(), n, format, threads))
        }
        Command::Compare {
            pair,
            n_min,
            n_max,
            format,
        } => {
            if n_min > n_max {
                return Err(usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
            }
            let sel = select(pf, &pair, n_max)?;
            cmd_compare(&sel, n_min, n_max, format, threads)
        }
        Command::Sieve {
            pair,
            side,
            n,
            subset_cap,
            format,
        } => {
            if subset_cap == 0 {
                return Err(usage("--subset-cap must be positive"));
            }
            let sel = select(pf, &pair, n)?;
            cmd_sieve(&sel, side.into(), n, subset_cap, format, threads)?
        }
        Command::Check {
            pair,
            theorem,
            n_max,
            subset_cap,
            format,
        } => {
            if n_max == 0 {
                return Err(usage("--n-max must be at least 1"));
            }
            if subset_cap == 0 {
                return Err(usage("--subset-cap must be positive"));
            }
            let sel = select(pf, &pair, n_max)?;
            if sel.prose_y {
                return Err(usage("--prose-y has no family form to check"));
            }
            let theorem = match theorem {
                TheoremArg::B => Theorem::B,
                TheoremArg::C => Theorem::C,
            };
            cmd_check(&sel, theorem, n_max, subset_cap, format)
        }
    })
}

/// Runs the command line `args` (including the program name), writing
/// results to `stdout` and diagnostics to `stderr`; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let Some(threads) = crate::threads_from_env() else {
        let _ = writeln!(
            stderr,
            "error: PARTITION_SIEVE_THREADS must be an integer >= 1"
        );
        return EXIT_USAGE;
    };
    match execute(cli, threads) {
        Ok((code, out)) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}
