//! The `spinfib` command line.
//!
//! Exit codes: 0 success, 1 verification failure or table mismatch, 2 usage
//! error, 3 domain error, 4 missing or unreachable sequence data.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::fib::{decimal_digits, FibKernel, DEFAULT_MAX_INDEX};
use crate::grid::{
    BoundaryConvention, DecompositionVariant, Grid, GridIndex, SpinSeeds, DEFAULT_GRID_BOUND,
    MAX_RENDER_SIZE,
};
use crate::oeis::{
    check_table_row, run_full_table_conventions, ANumber, CellOutcome, FetchMode, OeisClient,
    TableCell, Verdict,
};
use crate::sums::{closed_form_sum, region_sum, sum_sequence, Region};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_DATA: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "spinfib",
    version,
    about = "Double-recurrence Fibonacci numbers and spin functions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Use bundled sequence fixtures only (default).
    #[arg(long, global = true, conflicts_with = "online")]
    offline: bool,

    /// Fetch sequence data over HTTP, with an on-disk cache.
    #[arg(long, global = true)]
    online: bool,

    /// Boundary reading when b != d: b-wins, d-wins or crossed.
    #[arg(long, global = true, value_enum, default_value_t = Convention::BWins)]
    convention: Convention,

    /// Largest |n| accepted by the Fibonacci kernel.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_INDEX)]
    max_index: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    BWins,
    DWins,
    Crossed,
}

impl From<Convention> for BoundaryConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::BWins => BoundaryConvention::BWins,
            Convention::DWins => BoundaryConvention::DWins,
            Convention::Crossed => BoundaryConvention::Crossed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Recurrence,
    Prop3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Corrected,
    PaperLiteral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchTarget {
    Fib,
    Grid,
    Sums,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the grid with the origin at the bottom left.
    Grid {
        #[arg(long, default_value = "0,1,1,1")]
        seeds: SpinSeeds,
        #[arg(long, allow_negative_numbers = true)]
        size: i64,
    },
    /// Evaluate one cell.
    Eval {
        m: u64,
        n: u64,
        #[arg(long, default_value = "0,1,1,1")]
        seeds: SpinSeeds,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Case-ii expression used by `--method prop3`.
        #[arg(long, value_enum, default_value_t = Variant::Corrected)]
        variant: Variant,
    },
    /// Sum the grid over a region.
    Sum {
        #[arg(long, default_value = "0,1,1,1")]
        seeds: SpinSeeds,
        /// lower-strict, upper-incl, triangle-incl or square.
        #[arg(long)]
        region: Region,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Use the closed form (Fibonacci seeds, triangle-incl or square only).
        #[arg(long)]
        closed: bool,
        /// Print direct and closed-form values and their difference.
        #[arg(long)]
        verify: bool,
    },
    /// Run property sweeps against independent oracles.
    Verify {
        /// prop1, prop3, prop4, prop5, identities or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 60)]
        max: u64,
    },
    /// Check catalogued region sums against OEIS data.
    Oeis {
        #[command(subcommand)]
        command: OeisCommand,
    },
    /// Time the kernel.
    Bench {
        #[arg(value_enum)]
        target: BenchTarget,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
enum OeisCommand {
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Check every populated table cell.
    #[arg(long, conflicts_with_all = ["row", "column", "anum", "shift"])]
    all: bool,
    /// Seed quadruple a,b,c,d.
    #[arg(long, required_unless_present = "all")]
    row: Option<SpinSeeds>,
    /// lower, upper or square (region names are accepted too).
    #[arg(long, required_unless_present = "all", value_parser = parse_column)]
    column: Option<Region>,
    #[arg(long, required_unless_present = "all")]
    anum: Option<String>,
    /// Claimed shift s in A(n+s).
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    shift: i64,
    #[arg(long, default_value_t = 20)]
    count: i64,
    /// Check under b-wins and d-wins.
    #[arg(long, conflicts_with = "all_conventions")]
    both_conventions: bool,
    /// Check under b-wins, d-wins and crossed.
    #[arg(long)]
    all_conventions: bool,
}

fn parse_column(s: &str) -> Result<Region, String> {
    match s {
        "lower" => Ok(Region::LowerStrict),
        "upper" => Ok(Region::UpperInclDiag),
        other => other.parse(),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::IndexOutOfBounds { .. }
        | Error::NegativeIndex(_)
        | Error::GridBound { .. }
        | Error::SizeBound { .. }
        | Error::InvalidANumber(_) => EXIT_USAGE,
        Error::Domain(_) => EXIT_DOMAIN,
        e if e.is_external_data() => EXIT_DATA,
        _ => EXIT_FAILED,
    }
}

struct Ctx<'a> {
    format: Format,
    grid: Grid,
    convention: BoundaryConvention,
    mode: FetchMode,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

type CmdResult = Result<i32, Error>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                if !text.contains("Usage:") {
                    let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                }
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        grid: Grid::new(FibKernel::new(cli.max_index), DEFAULT_GRID_BOUND),
        convention: cli.convention.into(),
        mode: if cli.online {
            FetchMode::Online
        } else {
            FetchMode::Offline
        },
        out,
        err,
    };
    let result = match cli.command {
        Command::Grid { seeds, size } => cmd_grid(&mut ctx, &seeds, size),
        Command::Eval {
            m,
            n,
            seeds,
            method,
            variant,
        } => cmd_eval(&mut ctx, &seeds, m, n, method, variant),
        Command::Sum {
            seeds,
            region,
            n,
            closed,
            verify,
        } => cmd_sum(&mut ctx, &seeds, region, n, closed, verify),
        Command::Verify { suite, max } => cmd_verify(&mut ctx, suite, max),
        Command::Oeis {
            command: OeisCommand::Check(args),
        } => cmd_oeis_check(&mut ctx, args),
        Command::Bench { target, n } => cmd_bench(&mut ctx, target, n),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::io("<output>", e)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    writeln!(out, "{text}").map_err(io)
}

fn write_csv(out: &mut dyn Write, rows: &[Vec<String>]) -> Result<(), Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("in-memory csv write");
    }
    let bytes = w.into_inner().expect("in-memory csv flush");
    out.write_all(&bytes).map_err(io)
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn cmd_grid(ctx: &mut Ctx, seeds: &SpinSeeds, size: i64) -> CmdResult {
    let rows = ctx.grid.render(seeds, size, ctx.convention)?;
    match ctx.format {
        Format::Text => {
            let width = rows
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            for row in rows.iter().rev() {
                let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                writeln!(ctx.out, "{}", line.join(" ")).map_err(io)?;
            }
        }
        Format::Json => write_json(
            ctx.out,
            &json!({
                "seeds": seeds,
                "size": size,
                "convention": ctx.convention,
                "rows": rows.iter().map(|r| strings(r)).collect::<Vec<_>>(),
            }),
        )?,
        Format::Csv => {
            let table: Vec<Vec<String>> = rows.iter().map(|r| strings(r)).collect();
            write_csv(ctx.out, &table)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_eval(
    ctx: &mut Ctx,
    seeds: &SpinSeeds,
    m: u64,
    n: u64,
    method: Method,
    variant: Variant,
) -> CmdResult {
    let idx = GridIndex::new(m, n);
    let grid = ctx.grid;
    let value = match method {
        Method::Closed => grid.eval_closed(seeds, idx)?,
        Method::Recurrence => grid.eval_recurrence(seeds, idx, ctx.convention)?,
        Method::Prop3 => {
            let v = match variant {
                Variant::Corrected => DecompositionVariant::Corrected,
                Variant::PaperLiteral => DecompositionVariant::Literal,
            };
            let value = grid.decompose(seeds, idx, v)?;
            if v == DecompositionVariant::Literal {
                let truth = grid.eval_recurrence(seeds, idx, BoundaryConvention::BWins)?;
                if truth != value {
                    writeln!(
                        ctx.err,
                        "warning: the literal case-ii expression gives {value}, the recurrence gives {truth}"
                    )
                    .map_err(io)?;
                }
            }
            value
        }
    };
    let method_name = match method {
        Method::Closed => "closed",
        Method::Recurrence => "recurrence",
        Method::Prop3 => "prop3",
    };
    match ctx.format {
        Format::Text => writeln!(ctx.out, "{value}").map_err(io)?,
        Format::Json => {
            let mut obj = json!({
                "method": method_name,
                "seeds": seeds,
                "m": m,
                "n": n,
                "convention": ctx.convention,
                "value": value.to_string(),
            });
            if method == Method::Prop3 {
                obj["variant"] = json!(match variant {
                    Variant::Corrected => "corrected",
                    Variant::PaperLiteral => "paper-literal",
                });
            }
            write_json(ctx.out, &obj)?;
        }
        Format::Csv => write_csv(
            ctx.out,
            &[
                vec!["m".into(), "n".into(), "method".into(), "value".into()],
                vec![
                    m.to_string(),
                    n.to_string(),
                    method_name.into(),
                    value.to_string(),
                ],
            ],
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_sum(
    ctx: &mut Ctx,
    seeds: &SpinSeeds,
    region: Region,
    n: i64,
    closed: bool,
    verify: bool,
) -> CmdResult {
    let grid = ctx.grid;
    let closed_value = if closed || verify {
        match closed_form_sum(grid.kernel(), seeds, region, n) {
            Some(v) => Some(v?),
            None => {
                return Err(Error::Domain(format!(
                    "no closed form for seeds [{seeds}] over {region}; \
                     closed forms exist for seeds 0,1,1,1 with triangle-incl or square"
                )))
            }
        }
    } else {
        None
    };
    let direct = if verify || !closed {
        Some(region_sum(&grid, seeds, region, n, ctx.convention)?)
    } else {
        None
    };

    let mut fields: Vec<(&str, BigInt)> = Vec::new();
    if verify {
        let (d, c) = (direct.unwrap(), closed_value.unwrap());
        let diff = &d - &c;
        fields.push(("direct", d));
        fields.push(("closed", c));
        fields.push(("difference", diff));
    } else if let Some(c) = closed_value {
        fields.push(("closed", c));
    } else {
        fields.push(("direct", direct.unwrap()));
    }

    match ctx.format {
        Format::Text if !verify => writeln!(ctx.out, "{}", fields[0].1).map_err(io)?,
        Format::Text => {
            for (k, v) in &fields {
                writeln!(ctx.out, "{k} {v}").map_err(io)?;
            }
        }
        Format::Json => {
            let mut obj = json!({
                "seeds": seeds,
                "region": region,
                "n": n,
                "convention": ctx.convention,
            });
            if verify {
                for (k, v) in &fields {
                    obj[*k] = json!(v.to_string());
                }
            } else {
                obj["method"] = json!(fields[0].0);
                obj["value"] = json!(fields[0].1.to_string());
            }
            write_json(ctx.out, &obj)?;
        }
        Format::Csv => {
            let header = fields.iter().map(|(k, _)| k.to_string()).collect();
            let row = fields.iter().map(|(_, v)| v.to_string()).collect();
            write_csv(ctx.out, &[header, row])?;
        }
    }
    let mismatch = verify && fields.last().is_some_and(|(_, d)| *d != BigInt::from(0));
    Ok(if mismatch { EXIT_FAILED } else { EXIT_OK })
}

fn cmd_verify(ctx: &mut Ctx, suite: Suite, max: u64) -> CmdResult {
    if max < 1 {
        return Err(Error::SizeBound {
            size: max as i64,
            min: 1,
            max: i64::MAX,
        });
    }
    let results = run_suite(&ctx.grid, suite, max);
    let passed = results.iter().all(|r| r.passed());
    match ctx.format {
        Format::Text => {
            for r in &results {
                match &r.failure {
                    None => writeln!(ctx.out, "PASS  {} ({} cases)", r.name, r.checked),
                    Some(f) => writeln!(ctx.out, "FAIL  {}: {f}", r.name),
                }
                .map_err(io)?;
                for note in &r.notes {
                    writeln!(ctx.out, "      note: {note}").map_err(io)?;
                }
            }
        }
        Format::Json => write_json(
            ctx.out,
            &json!({ "suite": suite, "max": max, "passed": passed, "properties": results }),
        )?,
        Format::Csv => {
            let mut rows = vec![vec![
                "property".to_string(),
                "checked".into(),
                "passed".into(),
                "failure".into(),
            ]];
            rows.extend(results.iter().map(|r| {
                vec![
                    r.name.clone(),
                    r.checked.to_string(),
                    r.passed().to_string(),
                    r.failure.clone().unwrap_or_default(),
                ]
            }));
            write_csv(ctx.out, &rows)?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

/// Row of the audit output for one cell and convention.
#[derive(Serialize)]
struct AuditLine<'a> {
    row: Option<usize>,
    seeds: &'a SpinSeeds,
    region: Region,
    anumber: &'a str,
    claimed_shift: i64,
    convention: BoundaryConvention,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a crate::oeis::MatchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn cmd_oeis_check(ctx: &mut Ctx, args: CheckArgs) -> CmdResult {
    let client = OeisClient::with_mode(ctx.mode);
    let conventions: Vec<BoundaryConvention> = if args.all_conventions {
        BoundaryConvention::EVERY.to_vec()
    } else if args.both_conventions {
        BoundaryConvention::ALL.to_vec()
    } else {
        vec![ctx.convention]
    };
    let single = !args.all;
    let outcomes: Vec<CellOutcome> = if args.all {
        run_full_table_conventions(&client, &ctx.grid, args.count, &conventions)?
    } else {
        let cell = TableCell {
            row: 0,
            seeds: args.row.expect("required by clap"),
            region: args.column.expect("required by clap"),
            anumber: ANumber::new(&args.anum.expect("required by clap"))?,
            claimed_shift: args.shift,
        };
        conventions
            .iter()
            .map(|&convention| CellOutcome {
                result: check_table_row(&client, &ctx.grid, &cell, args.count, convention),
                cell: cell.clone(),
                convention,
            })
            .collect()
    };
    if single {
        if let Some(e) = outcomes
            .iter()
            .find_map(|o| o.result.as_ref().err())
            .filter(|e| !e.is_external_data())
        {
            return Err(e.clone());
        }
    }

    let lines: Vec<AuditLine> = outcomes
        .iter()
        .map(|o| AuditLine {
            row: (!single).then_some(o.cell.row),
            seeds: &o.cell.seeds,
            region: o.cell.region,
            anumber: o.cell.anumber.as_str(),
            claimed_shift: o.cell.claimed_shift,
            convention: o.convention,
            report: o.result.as_ref().ok(),
            error: o.result.as_ref().err().map(ToString::to_string),
        })
        .collect();

    match ctx.format {
        Format::Text => {
            for l in &lines {
                let head = format!(
                    "[{}] {:<13} {}(n{:+}) {:<6}",
                    l.seeds, l.region, l.anumber, l.claimed_shift, l.convention
                );
                let tail = match (l.report, &l.error) {
                    (Some(r), _) => describe(r),
                    (None, Some(e)) => format!("ERROR {e}"),
                    (None, None) => unreachable!(),
                };
                writeln!(ctx.out, "{head} {tail}").map_err(io)?;
            }
        }
        Format::Json => write_json(ctx.out, &lines)?,
        Format::Csv => {
            let mut rows = vec![[
                "seeds",
                "region",
                "anumber",
                "claimed_shift",
                "convention",
                "verdict",
                "found_shift",
                "compared",
                "error",
            ]
            .map(String::from)
            .to_vec()];
            for l in &lines {
                let (verdict, found, compared) = match l.report {
                    Some(r) => (
                        format!("{:?}", r.verdict),
                        r.found_shift.map(|s| s.to_string()).unwrap_or_default(),
                        r.compared_count.to_string(),
                    ),
                    None => ("ERROR".into(), String::new(), String::new()),
                };
                rows.push(vec![
                    l.seeds.to_string(),
                    l.region.to_string(),
                    l.anumber.into(),
                    l.claimed_shift.to_string(),
                    l.convention.to_string(),
                    verdict,
                    found,
                    compared,
                    l.error.clone().unwrap_or_default(),
                ]);
            }
            write_csv(ctx.out, &rows)?;
        }
    }

    // A cell passes when any convention matches at some shift.
    let mut per_cell: BTreeMap<(usize, String, String), (bool, bool)> = BTreeMap::new();
    for o in &outcomes {
        let key = (
            o.cell.row,
            o.cell.region.to_string(),
            o.cell.anumber.to_string(),
        );
        let entry = per_cell.entry(key).or_insert((false, false));
        match &o.result {
            Ok(r) if r.verdict != Verdict::Mismatch => entry.0 = true,
            Ok(_) => {}
            Err(_) => entry.1 = true,
        }
    }
    let any_error = per_cell.values().any(|&(ok, err)| !ok && err);
    let any_mismatch = per_cell.values().any(|&(ok, _)| !ok);
    Ok(if any_error {
        EXIT_DATA
    } else if any_mismatch {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

fn describe(r: &crate::oeis::MatchReport) -> String {
    match r.verdict {
        Verdict::Match => format!("MATCH ({} terms)", r.compared_count),
        Verdict::ShiftFound => format!(
            "SHIFT_FOUND n{:+} ({} terms)",
            r.found_shift.unwrap_or_default(),
            r.compared_count
        ),
        Verdict::Mismatch => match &r.first_divergence {
            Some(d) => format!(
                "MISMATCH at n={}: sequence {}, sum {}",
                d.n, d.expected, d.actual
            ),
            None => "MISMATCH".into(),
        },
    }
}

fn cmd_bench(ctx: &mut Ctx, target: BenchTarget, n: i64) -> CmdResult {
    let kernel = *ctx.grid.kernel();
    let (label, elapsed, digits) = match target {
        BenchTarget::Fib => {
            if n < 0 || n as u64 > kernel.max_index() {
                return Err(Error::IndexOutOfBounds {
                    index: n,
                    max: kernel.max_index(),
                });
            }
            let start = Instant::now();
            let f = kernel.fib(n)?;
            let elapsed = start.elapsed();
            (format!("fib({n})"), elapsed, decimal_digits(&f))
        }
        BenchTarget::Grid => {
            if !(1..=MAX_RENDER_SIZE as i64).contains(&n) {
                return Err(Error::SizeBound {
                    size: n,
                    min: 1,
                    max: MAX_RENDER_SIZE as i64,
                });
            }
            let start = Instant::now();
            let rows = ctx
                .grid
                .render(&SpinSeeds::fibonacci(), n, BoundaryConvention::BWins)?;
            let elapsed = start.elapsed();
            let largest = rows.iter().flatten().max().cloned().unwrap_or_default();
            (format!("grid({n})"), elapsed, decimal_digits(&largest))
        }
        BenchTarget::Sums => {
            let bound = ctx.grid.bound() as i64;
            if !(1..=bound).contains(&n) {
                return Err(Error::SizeBound {
                    size: n,
                    min: 1,
                    max: bound,
                });
            }
            let start = Instant::now();
            let seq = sum_sequence(
                &ctx.grid,
                &SpinSeeds::fibonacci(),
                Region::FullSquare,
                n + 1,
                BoundaryConvention::BWins,
            )?;
            let elapsed = start.elapsed();
            (
                format!("square sums 0..={n}"),
                elapsed,
                decimal_digits(&seq[n as usize]),
            )
        }
    };
    let ms = elapsed.as_secs_f64() * 1e3;
    match ctx.format {
        Format::Text => writeln!(ctx.out, "{label}: {ms:.3} ms, {digits} digits").map_err(io)?,
        Format::Json => write_json(
            ctx.out,
            &json!({ "target": label, "millis": ms, "digits": digits }),
        )?,
        Format::Csv => write_csv(
            ctx.out,
            &[
                vec!["target".into(), "millis".into(), "digits".into()],
                vec![label, format!("{ms:.3}"), digits.to_string()],
            ],
        )?,
    }
    Ok(EXIT_OK)
}
