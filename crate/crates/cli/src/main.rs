//! `cubic-laway`: cohomology, twist profiles, tables and verification suites
//! for line bundles on a smooth cubic surface.
//!
//! Exit codes: 0 on success, 1 when a check finds a counterexample, 2 on a
//! usage or input error. Data goes to stdout, diagnostics to stderr.
//! `CUBIC_LAWAY_THREADS` sets the worker count of the parallel build.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cubic_laway::cohomology::{coh, h0_with_trace, is_effective, is_initialized};
use cubic_laway::emit::{self, Format, RowView};
use cubic_laway::enumerate::{
    enum_classes, low_degree_catalog, table_1away, table_2away, verify_acm_ton, verify_degreebound, verify_ext,
    verify_not_ulrich, verify_prop3l, verify_t31, verify_t35, Filter, VerificationReport,
};
use cubic_laway::laway::{h1_profile, is_ulrich, is_weakly_ulrich, t31_numeric, t35_condition};
use cubic_laway::picard::{degree, is_nef, self_intersection};
use cubic_laway::quadric::{q_coh, q_ell, q_nonvanishing, t41_check, BidegreeClass};
use cubic_laway::{DivisorClass, Error, Exec};

const THREADS_VAR: &str = "CUBIC_LAWAY_THREADS";

#[derive(Parser)]
#[command(name = "cubic-laway", version, about = "Line-bundle cohomology on a smooth cubic surface")]
struct Cli {
    /// Output format. Scalar answers print as plain text unless json is asked for.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,

    /// Run enumerations on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// h0, h1, h2 of a class.
    Coh {
        #[arg(value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
        /// Show the line-by-line reduction computing h0.
        #[arg(long)]
        trace: bool,
    },
    /// Number of twists t with h1(D + tH) != 0.
    Ell {
        #[arg(value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Twist window, h1 values and the nonvanishing set.
    Profile {
        #[arg(value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Every predicate at once.
    Classify {
        #[arg(value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Orbit representatives with given degree and self-intersection.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
        #[arg(long, allow_hyphen_values = true)]
        selfint: i64,
        /// effective, initialized, nef, acm, ulrich, weakly-ulrich or ell=K. Repeatable, comma separated.
        #[arg(long = "pred", value_delimiter = ',', value_parser = parse_filter)]
        preds: Vec<Filter>,
    },
    /// Regenerate the 1-away (p32) or 2-away (p37) classification table.
    Tables {
        #[arg(value_enum, default_value = "p32")]
        which: TableKind,
    },
    /// Exhaustive checks of the classification statements.
    Verify(VerifyArgs),
    /// Every configuration of curves of degree at most three.
    Catalog,
    /// The smooth quadric P1 x P1.
    Quadric {
        #[command(subcommand)]
        command: QuadricCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    P32,
    P37,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Statement {
    T31,
    T35,
    Degreebound,
    Prop3l,
    Ext,
    Ton,
    Notulrich,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    which: Statement,
    /// Degree bound for t31, t35, ton, notulrich and degreebound.
    #[arg(long)]
    dmax: Option<i64>,
    /// Largest ell for degreebound.
    #[arg(long, default_value_t = 6)]
    lmax: u64,
    /// Largest family parameter for ext.
    #[arg(long, default_value_t = 3)]
    amax: i64,
    /// Values of l for prop3l, as `A..B` (inclusive) or a comma list.
    #[arg(long, default_value = "2..4", value_parser = parse_lrange)]
    lrange: LRange,
}

#[derive(Clone)]
struct LRange(Vec<i64>);

#[derive(Subcommand)]
enum QuadricCommand {
    /// h0, h1, h2 of O(a, b).
    Coh {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// Number of twists t with h1(O(a + t, b + t)) != 0.
    Ell {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// Truth table of the degree-d existence check (CSV by default).
    ///
    /// Rows run over 1 <= ell <= lmax and 3 <= d <= dmax. Degree 2 is not
    /// covered: a degree-2 surface is the quadric itself, whose line bundles
    /// `quadric ell` handles directly.
    T41Table {
        #[arg(long, default_value_t = 10)]
        lmax: i64,
        #[arg(long, default_value_t = 12)]
        dmax: i64,
    },
}

fn parse_class(s: &str) -> Result<DivisorClass, String> {
    s.parse::<DivisorClass>().map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse::<Format>().map_err(|e| e.to_string())
}

fn parse_filter(s: &str) -> Result<Filter, String> {
    s.parse::<Filter>().map_err(|e| e.to_string())
}

fn parse_lrange(s: &str) -> Result<LRange, String> {
    let bad = |reason: &str| format!("cannot parse `{s}`: {reason}");
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad("expected integers"));
    let values: Vec<i64> = match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            (num(lo)?..=num(hi)?).collect()
        }
        None => s.split(',').map(num).collect::<Result<_, _>>()?,
    };
    if values.is_empty() {
        return Err(bad("empty range"));
    }
    Ok(LRange(values))
}

/// Rendered output plus whether every check held.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn class_json(c: &DivisorClass) -> serde_json::Value {
    serde_json::to_value(c).expect("classes serialize")
}

fn key_value(pairs: &[(&str, String)], format: Option<Format>) -> Result<String, Error> {
    Ok(match format {
        Some(Format::Csv) => {
            let header: Vec<&str> = pairs.iter().map(|p| p.0).collect();
            let values: Vec<String> = pairs.iter().map(|p| csv_cell(&p.1)).collect();
            format!("{}\n{}\n", header.join(","), values.join(","))
        }
        Some(Format::Markdown) => {
            let mut out = String::from("| key | value |\n|---|---|\n");
            for (k, v) in pairs {
                out.push_str(&format!("| {k} | {v} |\n"));
            }
            out
        }
        _ => pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    })
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn run_coh(class: &DivisorClass, trace: bool, format: Option<Format>) -> Result<Output, Error> {
    let t = coh(class)?;
    let steps = trace.then(|| h0_with_trace(class).1);
    if format == Some(Format::Json) {
        let mut v = json!({ "class": class_json(class), "h0": t.h0, "h1": t.h1, "h2": t.h2 });
        if let Some(tr) = &steps {
            v["trace"] = serde_json::to_value(tr).expect("traces serialize");
        }
        return Ok(Output::ok(json_text(&v)));
    }
    let mut text = if format.is_none() {
        format!("{} {} {}\n", t.h0, t.h1, t.h2)
    } else {
        key_value(
            &[("class", class.paper_notation()), ("h0", t.h0.to_string()), ("h1", t.h1.to_string()), ("h2", t.h2.to_string())],
            format,
        )?
    };
    if let Some(tr) = steps {
        let mut lines = String::new();
        for (i, s) in tr.steps.iter().enumerate() {
            lines.push_str(&format!("step {}: D.C = {} for C = {}\n", i + 1, s.intersection, s.line.paper_notation()));
        }
        lines.push_str(&format!("terminal {} ({:?})\n", tr.terminal.paper_notation(), tr.terminal_kind));
        // The trace is commentary on h0; keep the data stream parseable in csv.
        if format == Some(Format::Csv) {
            eprint!("{lines}");
        } else {
            text.push_str(&lines);
        }
    }
    Ok(Output::ok(text))
}

fn run_profile(class: &DivisorClass, format: Option<Format>) -> Result<Output, Error> {
    let p = h1_profile(class)?;
    if format == Some(Format::Json) {
        let v = json!({ "class": class_json(class), "profile": serde_json::to_value(&p).expect("profiles serialize") });
        return Ok(Output::ok(json_text(&v)));
    }
    let h1: Vec<String> = p.h1.iter().map(u64::to_string).collect();
    let pairs = [
        ("class", class.paper_notation()),
        ("window", format!("[{}, {}]", p.lo, p.hi)),
        ("h1", h1.join(" ")),
        ("ell", p.ell.to_string()),
        ("s_set", emit::set_text(&p.s_set)),
    ];
    Ok(Output::ok(key_value(&pairs, format)?))
}

fn run_classify(class: &DivisorClass, format: Option<Format>) -> Result<Output, Error> {
    let p = h1_profile(class)?;
    let nef = is_nef(class);
    let flags: Vec<(&str, bool)> = vec![
        ("effective", is_effective(class)),
        ("initialized", is_initialized(class)),
        ("nef", nef),
        ("acm", p.ell == 0),
        ("ulrich", is_ulrich(class)?),
        ("weakly_ulrich", is_weakly_ulrich(class)?),
        ("t31", t31_numeric(class)),
        ("t35", t35_condition(class)),
    ];
    if format == Some(Format::Json) {
        let mut v = json!({
            "class": class_json(class),
            "notation": class.paper_notation(),
            "self_intersection": self_intersection(class),
            "degree": degree(class),
            "ell": p.ell,
            "s_set": p.s_set,
        });
        for (k, b) in &flags {
            v[*k] = json!(b);
        }
        return Ok(Output::ok(json_text(&v)));
    }
    let mut pairs = vec![
        ("class", class.paper_notation()),
        ("self_intersection", self_intersection(class).to_string()),
        ("degree", degree(class).to_string()),
        ("ell", p.ell.to_string()),
        ("s_set", emit::set_text(&p.s_set)),
    ];
    pairs.extend(flags.iter().map(|&(k, b)| (k, b.to_string())));
    Ok(Output::ok(key_value(&pairs, format)?))
}

fn run_verify(args: &VerifyArgs, exec: Exec, format: Format) -> Result<Output, Error> {
    let selected: Vec<Statement> = if args.which == Statement::All {
        vec![
            Statement::T31,
            Statement::T35,
            Statement::Degreebound,
            Statement::Prop3l,
            Statement::Ext,
            Statement::Ton,
            Statement::Notulrich,
        ]
    } else {
        vec![args.which]
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in selected {
        let r = match s {
            Statement::T31 => verify_t31(exec, args.dmax.unwrap_or(10))?,
            Statement::T35 => verify_t35(exec, args.dmax.unwrap_or(10))?,
            Statement::Degreebound => verify_degreebound(exec, args.lmax, args.dmax.unwrap_or(18))?,
            Statement::Prop3l => verify_prop3l(exec, &args.lrange.0)?,
            Statement::Ext => verify_ext(exec, args.amax)?,
            Statement::Ton => verify_acm_ton(exec, args.dmax.unwrap_or(8))?,
            Statement::Notulrich => verify_not_ulrich(exec, args.dmax.unwrap_or(8))?,
            Statement::All => unreachable!("expanded above"),
        };
        reports.push(r);
    }
    let ok = reports.iter().all(VerificationReport::success);
    let text = match format {
        Format::Json if reports.len() == 1 => emit::report(&reports[0], format)?,
        Format::Json => json_text(&serde_json::to_value(&reports).expect("reports serialize")),
        Format::Csv => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                let part = emit::report(r, format)?;
                // One header for the whole stream.
                out.push_str(if i == 0 { &part } else { part.split_once('\n').map_or("", |p| p.1) });
            }
            out
        }
        Format::Markdown => reports.iter().map(|r| emit::report(r, format)).collect::<Result<Vec<_>, _>>()?.join("\n"),
    };
    Ok(Output { text, ok })
}

fn run_t41_table(lmax: i64, dmax: i64, format: Format) -> Result<Output, Error> {
    if lmax < 1 {
        return Err(Error::Precondition(format!("lmax must be at least 1, got {lmax}")));
    }
    if dmax < 3 {
        return Err(Error::Precondition(format!(
            "dmax must be at least 3, got {dmax}; degree 2 is the quadric itself, see `quadric ell`"
        )));
    }
    let mut entries = Vec::new();
    for l in 1..=lmax {
        for d in 3..=dmax {
            entries.push((l, d, t41_check(l, d)?));
        }
    }
    Ok(Output::ok(emit::truth_table(&entries, format)?))
}

fn run(cli: Cli) -> Result<Output, Error> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let format = cli.format;
    let table_format = format.unwrap_or_default();
    match cli.command {
        Command::Coh { class, trace } => run_coh(&class, trace, format),
        Command::Ell { class } => {
            let p = h1_profile(&class)?;
            Ok(Output::ok(match format {
                Some(Format::Json) => json_text(&json!({ "class": class_json(&class), "ell": p.ell })),
                None => format!("{}\n", p.ell),
                _ => key_value(&[("class", class.paper_notation()), ("ell", p.ell.to_string())], format)?,
            }))
        }
        Command::Profile { class } => run_profile(&class, format),
        Command::Classify { class } => run_classify(&class, format),
        Command::Enumerate { deg, selfint, preds } => {
            let records = enum_classes(exec, deg, selfint, &preds)?;
            let views: Vec<RowView> = records.iter().map(|r| RowView::from_record(r, r.key().table_class())).collect();
            eprintln!("{} orbits", views.len());
            Ok(Output::ok(emit::rows(&views, table_format)?))
        }
        Command::Tables { which } => {
            let rows = match which {
                TableKind::P32 => table_1away(exec)?,
                TableKind::P37 => table_2away(exec)?,
            };
            Ok(Output::ok(emit::table(&rows, table_format)?))
        }
        Command::Verify(args) => run_verify(&args, exec, table_format),
        Command::Catalog => {
            let reports = low_degree_catalog()?;
            let ok = reports.iter().all(|r| r.passed());
            Ok(Output { text: emit::catalog(&reports, table_format)?, ok })
        }
        Command::Quadric { command } => match command {
            QuadricCommand::Coh { a, b } => {
                let t = q_coh(BidegreeClass::new(a, b));
                Ok(Output::ok(match format {
                    Some(Format::Json) => json_text(&json!({ "a": a, "b": b, "h0": t.h0, "h1": t.h1, "h2": t.h2 })),
                    None => format!("{} {} {}\n", t.h0, t.h1, t.h2),
                    _ => key_value(
                        &[("class", format!("({a},{b})")), ("h0", t.h0.to_string()), ("h1", t.h1.to_string()), ("h2", t.h2.to_string())],
                        format,
                    )?,
                }))
            }
            QuadricCommand::Ell { a, b } => {
                let c = BidegreeClass::new(a, b);
                let ell = q_ell(c);
                Ok(Output::ok(match format {
                    Some(Format::Json) => json_text(&json!({ "a": a, "b": b, "ell": ell, "s_set": q_nonvanishing(c) })),
                    None => format!("{ell}\n"),
                    _ => key_value(
                        &[("class", format!("({a},{b})")), ("ell", ell.to_string()), ("s_set", emit::set_text(&q_nonvanishing(c)))],
                        format,
                    )?,
                }))
            }
            QuadricCommand::T41Table { lmax, dmax } => run_t41_table(lmax, dmax, format.unwrap_or(Format::Csv)),
        },
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR}: cannot parse `{raw}` as a positive thread count"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| format!("{THREADS_VAR}: {e}"))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("counterexample found");
                ExitCode::from(1)
            }
        }
        Err(Error::Consistency(msg)) => {
            eprintln!("error: internal consistency check failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
