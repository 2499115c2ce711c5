//! The `dcpell` command-line front end.
//!
//! Exit codes: 0 on success (for `audit`, every identity matched its expected
//! status), 1 when a check disagrees, 2 on usage errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::audit::{self, GridOverrides, Selection};
use crate::quaternion::{binet_qp, DCPellQuat, Family};
use crate::sequences::{seq_range, SeqKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Pell,
    PellLucas,
    ModifiedPell,
}

impl From<KindArg> for SeqKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pell => SeqKind::Pell,
            KindArg::PellLucas => SeqKind::PellLucas,
            KindArg::ModifiedPell => SeqKind::ModifiedPell,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Pell,
    PellLucas,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Pell => Family::Pell,
            FamilyArg::PellLucas => Family::PellLucas,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dcpell",
    version,
    about = "Exact dual-complex Pell quaternion toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate a Pell-family sequence over an index range.
    Seq {
        #[arg(long, value_enum, default_value = "pell")]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print one quaternion.
    Quat {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "pell")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Compare the closed form with the recurrence over an index range.
    BinetCheck {
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Audit registered identities over their index grids.
    Audit {
        /// `all` or a comma-separated list of identity ids.
        #[arg(long, default_value = "all")]
        ids: String,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long)]
        r_max: Option<i64>,
        #[arg(long)]
        p_max: Option<i64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
        /// Report path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Product of two quaternions given by index.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_enum, default_value = "pell")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            code: EXIT_OK,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_seq(kind: SeqKind, from: i64, to: i64, format: OutputFormat) -> Result<Outcome, String> {
    let values = seq_range(kind, from, to).map_err(|e| e.to_string())?;
    let rows: Vec<(i64, String)> = (from..=to)
        .zip(values.iter().map(|v| v.to_string()))
        .collect();
    let text = match format {
        OutputFormat::Plain => {
            let iw = rows
                .iter()
                .map(|(n, _)| n.to_string().len())
                .max()
                .unwrap_or(1)
                .max(1);
            let vw = rows.iter().map(|(_, v)| v.len()).max().unwrap_or(1);
            let mut out = String::new();
            for (n, v) in &rows {
                let _ = writeln!(out, "{n:>iw$}  {v:>vw$}");
            }
            out
        }
        OutputFormat::Json => to_json(&json!({
            "kind": kind.name(),
            "from": from,
            "to": to,
            "values": rows.iter().map(|(n, v)| json!({"n": n, "value": v})).collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in &rows {
                let _ = writeln!(out, "{n},{v}");
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn render_quat(q: &DCPellQuat, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{}({}) = {}\n", q.family(), q.index(), q),
        OutputFormat::Json => to_json(&q.to_json()),
        OutputFormat::Csv => {
            let [a, b, c, d] = q.value().to_strings();
            format!(
                "family,n,re,im,du,imdu\n{},{},{a},{b},{c},{d}\n",
                q.family(),
                q.index()
            )
        }
    }
}

fn cmd_mul(a: i64, b: i64, family: Family, format: OutputFormat) -> Outcome {
    let (x, y) = (DCPellQuat::new(family, a), DCPellQuat::new(family, b));
    let prod = x.value() * y.value();
    let comps = prod.to_strings();
    let text = match format {
        OutputFormat::Plain => format!("{family}({a}) × {family}({b}) = {prod}\n"),
        OutputFormat::Json => to_json(&json!({
            "family": family,
            "a": a,
            "b": b,
            "components": comps,
        })),
        OutputFormat::Csv => {
            let [r, i, d, e] = comps;
            format!("family,a,b,re,im,du,imdu\n{family},{a},{b},{r},{i},{d},{e}\n")
        }
    };
    Outcome::ok(text)
}

fn cmd_binet_check(from: i64, to: i64, format: OutputFormat) -> Result<Outcome, String> {
    if from > to {
        return Err(format!("malformed range: {from} > {to}"));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        let expected = DCPellQuat::new(Family::Pell, n);
        let got = binet_qp(n);
        let ok = got.as_ref().is_ok_and(|q| q == &expected);
        let detail = match &got {
            Ok(q) => q.value().to_strings().join(", "),
            Err(e) => e.to_string(),
        };
        rows.push((n, ok, detail));
    }
    let failures = rows.iter().filter(|r| !r.1).count();
    let text = match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for (n, ok, detail) in &rows {
                let tag = if *ok { "ok" } else { "MISMATCH" };
                let _ = writeln!(out, "n={n} {tag} [{detail}]");
            }
            let _ = writeln!(out, "{}/{} match", rows.len() - failures, rows.len());
            out
        }
        OutputFormat::Json => to_json(&json!({
            "from": from,
            "to": to,
            "checked": rows.len(),
            "mismatches": rows.iter().filter(|r| !r.1).map(|r| r.0).collect::<Vec<_>>(),
            "pass": failures == 0,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("n,match,components\n");
            for (n, ok, detail) in &rows {
                let _ = writeln!(out, "{n},{ok},\"{detail}\"");
            }
            out
        }
    };
    Ok(Outcome {
        text,
        code: if failures == 0 {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}

struct AuditArgs {
    ids: String,
    maxes: [(&'static str, Option<i64>); 4],
    format: OutputFormat,
    out: Option<PathBuf>,
}

fn cmd_audit(args: AuditArgs, stderr: &mut dyn Write) -> Result<Outcome, String> {
    let grid = args
        .maxes
        .iter()
        .filter_map(|(k, v)| v.map(|v| (*k, v)))
        .fold(GridOverrides::new(), |g, (k, v)| g.with_max(k, v));
    let report = audit::audit(&Selection::parse(&args.ids), &grid).map_err(|e| e.to_string())?;
    let text = match args.format {
        OutputFormat::Plain => audit::render_plain(&report),
        OutputFormat::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        OutputFormat::Csv => audit::render_csv(&report),
    };
    let code = report.exit_code();
    match args.out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            let matched = report
                .results
                .iter()
                .filter(|r| r.matches_expectation())
                .count();
            let _ = writeln!(
                stderr,
                "{matched}/{} identities as expected; report written to {}",
                report.results.len(),
                path.display()
            );
            Ok(Outcome {
                text: String::new(),
                code,
            })
        }
        None => Ok(Outcome { text, code }),
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Seq {
            kind,
            from,
            to,
            format,
        } => cmd_seq(kind.into(), from, to, format),
        Command::Quat { n, family, format } => Ok(Outcome::ok(render_quat(
            &DCPellQuat::new(family.into(), n),
            format,
        ))),
        Command::BinetCheck { from, to, format } => cmd_binet_check(from, to, format),
        Command::Mul {
            a,
            b,
            family,
            format,
        } => Ok(cmd_mul(a, b, family.into(), format)),
        Command::Audit {
            ids,
            n_max,
            m_max,
            r_max,
            p_max,
            format,
            out,
        } => cmd_audit(
            AuditArgs {
                ids,
                maxes: [("n", n_max), ("m", m_max), ("r", r_max), ("p", p_max)],
                format,
                out,
            },
            stderr,
        ),
    };
    match outcome {
        Ok(o) => {
            let _ = stdout.write_all(o.text.as_bytes());
            o.code
        }
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}
