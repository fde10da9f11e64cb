use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use iterlog::expansions::{ExpansionReport, ExpansionRequest, Exponent, Method};
use iterlog::identities::{all_pass, run_suite, Bounds, IdentityReport, StirlingSource, Suite};
use iterlog::series::TranslationSeries;
use iterlog::stirling::{
    factored_constant, tableau_enumerate, tableau_polynomial, Definition, StirlingKind, StirlingTable, TableauShape,
};

const ORDER_CEILING_VAR: &str = "ITERLOG_MAX_ORDER";
const DEFAULT_ORDER_CEILING: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "iterlog", version, about = "Exact expansions of iterated logarithms and exponentials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Negative control: perturb one Stirling entry, `KIND:M:N`.
    #[arg(long, hide = true, global = true, value_parser = parse_corruption)]
    corrupt_stirling: Option<Corruption>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Stirling triangle.
    Stirling(StirlingArgs),
    /// Expand l_n(x+y)^r in powers of y.
    Expand(ExpandArgs),
    /// Inspect tableaux of a given shape.
    Tableau(TableauArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct StirlingArgs {
    /// 1 or 2.
    #[arg(long)]
    kind: StirlingKind,
    #[arg(long)]
    max_m: usize,
    /// explicit, composition|partition, recurrence, genfunc, tableau or all.
    #[arg(long, default_value = "recurrence", value_parser = parse_selector)]
    def: Selector,
}

#[derive(Clone, Copy, Debug)]
enum Selector {
    One(Definition),
    All,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long, allow_hyphen_values = true)]
    level: i64,
    /// `r` or a rational literal such as 1/2.
    #[arg(long = "r", allow_hyphen_values = true, default_value = "r")]
    exponent: Exponent,
    #[arg(long)]
    order: usize,
    /// 1, 2, oracle or all.
    #[arg(long, default_value = "all", value_parser = parse_methods)]
    method: Methods,
}

#[derive(Clone, Debug)]
struct Methods(Vec<Method>);

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["list", "poly", "constant"])))]
struct TableauArgs {
    /// Comma-separated column heights.
    #[arg(long)]
    shape: TableauShape,
    #[arg(long)]
    kind: StirlingKind,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    poly: bool,
    #[arg(long)]
    constant: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    suite: String,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long)]
    max_total: Option<usize>,
    /// Random monomial pairs for the automorphism sweep.
    #[arg(long)]
    pairs: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug)]
struct Corruption {
    kind: StirlingKind,
    m: usize,
    n: usize,
}

fn parse_corruption(s: &str) -> Result<Corruption, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err("expected KIND:M:N".into());
    }
    let num = |p: &str| p.parse::<usize>().map_err(|e| e.to_string());
    let (m, n) = (num(parts[1])?, num(parts[2])?);
    if n > m {
        return Err("need N <= M".into());
    }
    Ok(Corruption { kind: parts[0].parse()?, m, n })
}

fn parse_selector(s: &str) -> Result<Selector, String> {
    if s == "all" {
        Ok(Selector::All)
    } else {
        s.parse().map(Selector::One)
    }
}

fn parse_methods(s: &str) -> Result<Methods, String> {
    if s == "all" {
        Ok(Methods(vec![Method::Method1, Method::Method2, Method::Oracle]))
    } else {
        s.parse().map(|m| Methods(vec![m]))
    }
}

/// Failures reported to the caller: usage errors exit 2, failed checks 1.
enum Failure {
    Usage(String),
    Check,
}

fn order_ceiling() -> Result<usize, Failure> {
    match std::env::var(ORDER_CEILING_VAR) {
        Err(_) => Ok(DEFAULT_ORDER_CEILING),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{ORDER_CEILING_VAR} must be a nonnegative integer, got {v:?}"))),
    }
}

fn check_order(order: usize) -> Result<(), Failure> {
    let ceiling = order_ceiling()?;
    if order > ceiling {
        return Err(Failure::Usage(format!(
            "order {order} exceeds the ceiling {ceiling}; raise {ORDER_CEILING_VAR} to allow it"
        )));
    }
    Ok(())
}

fn source(max_m: usize, corruption: Option<Corruption>) -> StirlingSource {
    let mut source = StirlingSource::build(max_m);
    if let Some(c) = corruption {
        if c.m <= max_m {
            let v = source.table(c.kind, Definition::Explicit).get(c.m, c.n) + BigInt::from(1);
            source.corrupt(c.kind, Definition::Explicit, c.m, c.n, v);
        }
    }
    source
}

fn triangle_json(table: &StirlingTable) -> Value {
    Value::Array(
        table
            .rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|v| json!(v.to_string())).collect()))
            .collect(),
    )
}

fn run_stirling(args: &StirlingArgs, format: Format, corruption: Option<Corruption>) -> (String, bool) {
    let kind = args.kind;
    let src = source(args.max_m, corruption);
    let defs: Vec<Definition> = match args.def {
        Selector::One(d) => vec![d],
        Selector::All => Definition::ALL.to_vec(),
    };
    let reference = src.table(kind, defs[0]);
    let disagreements: Vec<(Definition, (usize, usize))> = defs[1..]
        .iter()
        .filter_map(|&d| reference.first_difference(src.table(kind, d)).map(|p| (d, p)))
        .collect();
    let ok = disagreements.is_empty();
    let mut out = String::new();
    match format {
        Format::Text => {
            for &d in &defs {
                let _ = writeln!(out, "# S{}({}) m <= {}", kind.number(), d.name(kind), args.max_m);
                for row in src.table(kind, d).rows() {
                    let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                    let _ = writeln!(out, "{}", cells.join(","));
                }
            }
            if defs.len() > 1 {
                if ok {
                    let _ = writeln!(out, "agreement: pass");
                }
                for (d, (m, n)) in &disagreements {
                    let _ = writeln!(
                        out,
                        "agreement: FAIL {} differs from {} at (m, n) = ({m}, {n})",
                        d.name(kind),
                        defs[0].name(kind)
                    );
                }
            }
        }
        Format::Json => {
            let tables: Vec<Value> = defs
                .iter()
                .map(|&d| json!({"definition": d.name(kind), "rows": triangle_json(src.table(kind, d))}))
                .collect();
            let diffs: Vec<Value> = disagreements
                .iter()
                .map(|(d, (m, n))| json!({"definition": d.name(kind), "m": m, "n": n}))
                .collect();
            let doc = json!({"kind": kind.number(), "max_m": args.max_m, "tables": tables, "agree": ok, "disagreements": diffs});
            out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
        }
        Format::Csv => {
            out.push_str("definition,m,n,value\n");
            for &d in &defs {
                for (m, row) in src.table(kind, d).rows().iter().enumerate() {
                    for (n, v) in row.iter().enumerate() {
                        let _ = writeln!(out, "{},{m},{n},{v}", d.name(kind));
                    }
                }
            }
        }
    }
    (out, ok)
}

fn series_text(out: &mut String, s: &TranslationSeries) {
    for (k, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "y^{k}: {c}");
    }
}

fn run_expand(args: &ExpandArgs, format: Format) -> Result<(String, bool), Failure> {
    check_order(args.order)?;
    let reports: Vec<ExpansionReport> = args
        .method
        .0
        .iter()
        .map(|&method| {
            ExpansionReport::run(&ExpansionRequest {
                level: args.level,
                exponent: args.exponent.clone(),
                order: args.order,
                method,
            })
        })
        .collect();
    let all_match = reports.windows(2).all(|w| w[0].coeffs == w[1].coeffs);
    let verdict = reports.len() > 1;
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in &reports {
                let _ = writeln!(
                    out,
                    "# {} l[{}]^({}) order {}",
                    r.method, r.level, r.exponent, r.order
                );
                series_text(&mut out, &r.coeffs);
            }
            if verdict {
                let _ = writeln!(out, "match: {}", if all_match { "pass" } else { "FAIL" });
            }
        }
        Format::Json => {
            let doc = if verdict {
                json!({"expansions": reports, "match": all_match})
            } else {
                serde_json::to_value(&reports[0]).expect("json")
            };
            out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
        }
        Format::Csv => {
            out.push_str("method,k,coeff,monomial\n");
            for r in &reports {
                for (k, c) in r.coeffs.coeffs().iter().enumerate() {
                    for (m, p) in c.terms() {
                        let _ = writeln!(out, "{},{k},{p},{m}", r.method);
                    }
                }
            }
        }
    }
    Ok((out, all_match))
}

fn run_tableau(args: &TableauArgs, format: Format) -> Result<String, Failure> {
    let (shape, kind) = (&args.shape, args.kind);
    let mut out = String::new();
    if args.list {
        let all = tableau_enumerate(shape, kind);
        match format {
            Format::Text => {
                let _ = writeln!(out, "# {} tableaux of shape {shape}, kind {}", all.len(), kind.number());
                for t in &all {
                    let cols: Vec<String> = t
                        .columns()
                        .iter()
                        .map(|c| format!("[{}]", c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                        .collect();
                    let _ = writeln!(out, "{}", cols.join(" "));
                }
            }
            Format::Json => {
                let cols: Vec<&[Vec<usize>]> = all.iter().map(|t| t.columns()).collect();
                let doc = json!({"shape": shape.heights(), "kind": kind.number(), "tableaux": cols});
                out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
            }
            Format::Csv => {
                out.push_str("tableau,column,row,entry\n");
                for (i, t) in all.iter().enumerate() {
                    for (c, col) in t.columns().iter().enumerate() {
                        for (r, e) in col.iter().enumerate() {
                            let _ = writeln!(out, "{i},{},{},{e}", c + 1, r + 1);
                        }
                    }
                }
            }
        }
    } else if args.poly {
        let p = tableau_polynomial(shape, kind);
        match format {
            Format::Text => {
                let _ = writeln!(out, "{p}");
            }
            Format::Json => {
                let terms: Vec<Value> = p
                    .terms()
                    .map(|(e, c)| json!({"exponents": e, "coeff": c.to_string()}))
                    .collect();
                let doc = json!({"shape": shape.heights(), "kind": kind.number(), "polynomial": p.to_string(), "terms": terms});
                out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
            }
            Format::Csv => {
                let header: Vec<String> = (1..=p.vars()).map(|i| format!("x{i}")).collect();
                let _ = writeln!(out, "{},coeff", header.join(","));
                for (e, c) in p.terms() {
                    let cells: Vec<String> = e.iter().map(u32::to_string).collect();
                    let _ = writeln!(out, "{},{c}", cells.join(","));
                }
            }
        }
    } else {
        let c = factored_constant(shape, kind).map_err(|e| Failure::Usage(e.to_string()))?;
        match format {
            Format::Text => {
                let _ = writeln!(out, "{c}");
            }
            Format::Json => {
                let doc = json!({"shape": shape.heights(), "kind": kind.number(), "constant": c.to_string()});
                out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
            }
            Format::Csv => {
                let _ = writeln!(out, "shape,kind,constant\n\"{}\",{},{c}", shape.heights().iter().map(usize::to_string).collect::<Vec<_>>().join(","), kind.number());
            }
        }
    }
    Ok(out)
}

fn counterexample_text(r: &IdentityReport) -> String {
    r.counterexample
        .as_ref()
        .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn run_verify(args: &VerifyArgs, format: Format, corruption: Option<Corruption>) -> Result<(String, bool), Failure> {
    let suite: Suite = args.suite.parse().map_err(Failure::Usage)?;
    let d = Bounds::default();
    let bounds = Bounds {
        max_order: args.max_order.unwrap_or(d.max_order),
        max_m: args.max_m.unwrap_or(d.max_m),
        max_total: args.max_total.unwrap_or(d.max_total),
        pairs: args.pairs.unwrap_or(d.pairs),
        seed: args.seed.unwrap_or(d.seed),
    };
    check_order(bounds.max_order)?;
    let reports = run_suite(suite, &bounds, &source(bounds.table_size(), corruption));
    let ok = all_pass(&reports);
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(out, "summary: {} passed, {failed} failed", reports.len() - failed);
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&reports).expect("json") + "\n";
        }
        Format::Csv => {
            out.push_str("id,range,status,counterexample\n");
            for r in &reports {
                let status = if r.passed() { "pass" } else { "fail" };
                let _ = writeln!(out, "{},\"{}\",{status},\"{}\"", r.id, r.range, counterexample_text(r).replace('"', "\"\""));
            }
        }
    }
    Ok((out, ok))
}

fn emit(out: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, out).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let (out, ok) = match &cli.command {
        Command::Stirling(a) => run_stirling(a, cli.format, cli.corrupt_stirling),
        Command::Expand(a) => run_expand(a, cli.format)?,
        Command::Tableau(a) => (run_tableau(a, cli.format)?, true),
        Command::Verify(a) => run_verify(a, cli.format, cli.corrupt_stirling)?,
    };
    emit(&out, cli.out.as_ref())?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

