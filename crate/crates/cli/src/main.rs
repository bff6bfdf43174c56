//! mplverify: batch verification of the identity corpus.

use clap::{Parser, Subcommand};
use cli::engine::{meets_expectation, run_entry, EngineOpts};
use cli::report::RunReport;

#[derive(Parser)]
#[command(name = "mplverify", about = "Verify the multiple-polylogarithm identity corpus")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run corpus checks at their declared levels.
    Check {
        #[arg(long, default_value = "all")]
        filter: String,
        /// Include heavy entries.
        #[arg(long)]
        heavy: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[arg(long, default_value_t = 50)]
        precision: u32,
        /// Zero out timings for byte-stable reports.
        #[arg(long)]
        stable: bool,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Rank of the delta22-projected permutation families.
    Rank {
        #[arg(long, default_value = "rank")]
        filter: String,
    },
    /// Specialized prime-basis checks for the many-variable theorems.
    Specialize {
        #[arg(long, default_value = "specialized")]
        filter: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: u32,
    },
    /// Numeric suites.
    Numeric {
        #[arg(long, default_value = "numeric")]
        filter: String,
        #[arg(long, default_value_t = 50)]
        precision: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include heavy entries.
        #[arg(long)]
        heavy: bool,
    },
    /// Aggregate a full run into a report with the coverage table.
    Report {
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long)]
        heavy: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        stable: bool,
    },
}

fn run_filtered(
    filter: &str,
    heavy: bool,
    opts: &EngineOpts,
    kind_filter: impl Fn(&corpus::CorpusEntry) -> bool,
) -> (RunReport, bool) {
    let entries = corpus::list_identities(filter).expect("corpus loads");
    let mut reports = Vec::new();
    let mut ok = true;
    for e in entries {
        if !kind_filter(&e) {
            continue;
        }
        if e.cost == expr_dsl::Cost::Heavy && !heavy {
            let mut r = cli::report::CheckReport::new(&e.id, e.level().as_str());
            r.verdict = cli::report::Verdict::Skipped;
            r.note = Some("heavy; enable with --heavy".to_string());
            reports.push(r);
            continue;
        }
        let r = run_entry(&e, opts);
        eprintln!(
            "{:<28} {:<12} {}",
            r.id,
            r.verdict.as_str(),
            r.note.clone().unwrap_or_default()
        );
        if !matches!(r.verdict, cli::report::Verdict::Skipped)
            && !meets_expectation(e.expect, r.verdict)
        {
            ok = false;
        }
        reports.push(r);
    }
    (RunReport::build(opts.seed, reports), ok)
}

fn emit(report: &RunReport, format: &str, out: Option<String>) {
    let body = match format {
        "json" => report.to_json(),
        _ => report.to_text(),
    };
    match out {
        Some(path) => std::fs::write(path, body).expect("write report"),
        None => println!("{}", body),
    }
}

fn main() {
    let args = Args::parse();
    let (report, ok) = match args.cmd {
        Cmd::Check { filter, heavy, seed, trials, precision, stable, format, out } => {
            let opts = EngineOpts {
                seed,
                trials,
                precision_digits: precision,
                stable_timing: stable,
                ..Default::default()
            };
            let (r, ok) = run_filtered(&filter, heavy, &opts, |_| true);
            emit(&r, &format, out);
            (r, ok)
        }
        Cmd::Rank { filter } => {
            let opts = EngineOpts::default();
            let (r, ok) = run_filtered(&filter, true, &opts, |e| {
                matches!(e.check, corpus::Check::RankFamily { .. })
            });
            emit(&r, "text", None);
            (r, ok)
        }
        Cmd::Specialize { filter, seed, trials } => {
            let opts = EngineOpts { seed, trials, ..Default::default() };
            let (r, ok) = run_filtered(&filter, true, &opts, |e| {
                matches!(e.check, corpus::Check::SpecializedOnly { .. })
            });
            emit(&r, "text", None);
            (r, ok)
        }
        Cmd::Numeric { filter, precision, seed, heavy } => {
            let opts = EngineOpts { seed, precision_digits: precision, ..Default::default() };
            let (r, ok) = run_filtered(&filter, heavy, &opts, |e| {
                matches!(e.check, corpus::Check::Numeric { .. })
            });
            emit(&r, "text", None);
            (r, ok)
        }
        Cmd::Report { filter, heavy, seed, format, out, stable } => {
            let opts = EngineOpts { seed, stable_timing: stable, ..Default::default() };
            let (r, ok) = run_filtered(&filter, heavy, &opts, |_| true);
            emit(&r, &format, out);
            (r, ok)
        }
    };
    let _ = report;
    std::process::exit(if ok { 0 } else { 1 });
}
