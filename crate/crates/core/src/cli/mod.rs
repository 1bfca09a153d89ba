//! Command-line front end.

mod config;
mod subject;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cf::min_spectrum;
use crate::chain::{chain_of_stream, chain_stats, characteristic_chain, rep_exact_periodic_golden, GoldenChain};
use crate::error::{Error, Result};
use crate::lab::{
    estimate_chain, gap_scan, golden_depth, irrationality_exponent, lambda_head, min_spectrum_check, mu_table,
    verify_lambda, write_jsonl, write_summary_csv, GapScanConfig, Sampler,
};
use crate::rep::{r_profile, rep_estimate, RepEstimate, DEFAULT_TAIL, PROFILE_TAIL};
use crate::words::subword_complexity;
pub use config::parse_config;
pub use subject::{parse_chain, parse_rho, parse_slope, ChainSpec};
use subject::{Subject, SubjectArgs};

/// Prefixes longer than this go to a file.
pub const STDOUT_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "sturmian-lab", version, about = "Repetition exponents of Sturmian words")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Seed for sampled experiments
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for files written by `generate`, `rep --plot` and `scan`
    #[arg(long, global = true, env = "STURMIAN_LAB_OUT")]
    pub out_dir: Option<PathBuf>,
    /// key=value file supplying defaults for any option
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Print a prefix of the word
    Generate {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long)]
        length: usize,
        /// Write the word here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count distinct factors of length n
    Complexity {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long)]
        n: usize,
        /// Prefix length to scan (default 4n)
        #[arg(long)]
        length: Option<usize>,
    },
    /// Estimate rep from the chain (symbolic) or from r(n) up to --n
    Rep {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        /// Use the r(n) profile up to this n
        #[arg(long)]
        n: Option<usize>,
        /// Fraction of Λ ratios discarded before the tail minimum
        /// (default 0.5 from a chain, 0.75 from a profile)
        #[arg(long)]
        tail: Option<f64>,
        /// Write (n, r(n)/n) plot data (profile mode)
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Compare Λ from r(n) with Λ predicted by the locating chain
    Lambda {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, default_value_t = 14)]
        levels: usize,
        /// Print only the mismatch count
        #[arg(long)]
        diff: bool,
    },
    /// Classify the word level by level
    Chain {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        /// a/b run statistics (slope φ)
        #[arg(long)]
        stats: bool,
    },
    /// Build the word with a given locating chain
    Synth {
        #[arg(long, default_value = "[0;(1)]")]
        slope: String,
        #[arg(long)]
        chain: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact rep of an eventually periodic slope-φ chain
    Repx {
        #[arg(long)]
        chain: String,
    },
    /// Distinguished spectrum values
    Mu,
    /// Bottom of the spectrum: exact value against constructed and sampled words
    Minspec {
        #[arg(long, default_value = "[0;(1)]")]
        slope: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_TAIL)]
        tail: f64,
    },
    /// Sample slope-φ chains and look for estimates inside the spectral gaps
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    #[arg(long, default_value_t = 40)]
    pub depth: usize,
    #[arg(long, default_value_t = 0.002)]
    pub tolerance: f64,
    #[arg(long, default_value_t = DEFAULT_TAIL)]
    pub tail: f64,
    /// `periodic`, `uniform`, `pinned:<chain>` or `mu4:<d_max>`
    #[arg(long, default_value = "periodic")]
    pub sampler: String,
}

struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    plain: String,
}

impl Output {
    fn new(json: Value, plain: String) -> Self {
        Output {
            json,
            header: Vec::new(),
            rows: Vec::new(),
            plain,
        }
    }

    fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    fn emit(&self, fmt: Format, out: &mut dyn Write) -> Result<()> {
        match fmt {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&self.json)?)?,
            Format::Plain => {
                write!(out, "{}", self.plain)?;
                if !self.plain.ends_with('\n') {
                    writeln!(out)?;
                }
            }
            Format::Csv => {
                if self.header.is_empty() {
                    writeln!(out, "key,value")?;
                    if let Value::Object(m) = &self.json {
                        for (k, v) in m {
                            let v = match v {
                                Value::String(s) => s.clone(),
                                other => other.to_string(),
                            };
                            writeln!(out, "{k},{}", csv_field(&v))?;
                        }
                    }
                } else {
                    writeln!(out, "{}", self.header.join(","))?;
                    for r in &self.rows {
                        let r: Vec<String> = r.iter().map(|x| csv_field(x)).collect();
                        writeln!(out, "{}", r.join(","))?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Exit status for an error: 2 usage, 3 domain, 4 verification mismatch.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::Mismatch(_) => 4,
        Error::Io(_) | Error::Json(_) => 1,
        _ => 3,
    }
}

/// Parse `argv`, run, and return the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match parse_with_config(argv) {
        Ok(c) => c,
        Err(Ok(e)) => {
            let code = e.exit_code();
            let text = if code == 0 {
                e.render().to_string()
            } else {
                e.render().ansi().to_string()
            };
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
        Err(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_with_config(argv: Vec<OsString>) -> std::result::Result<Cli, std::result::Result<clap::Error, Error>> {
    let cmd = Cli::command();
    let matches = cmd.clone().try_get_matches_from(argv.clone()).map_err(Ok)?;
    let cli = Cli::from_arg_matches(&matches).map_err(Ok)?;
    let Some(path) = &cli.config else {
        return Ok(cli);
    };
    let entries = config::read_config(path).map_err(Err)?;
    let merged = config::merge(&cmd, &matches, argv, &entries).map_err(Err)?;
    let matches = cmd.try_get_matches_from(merged).map_err(Ok)?;
    Cli::from_arg_matches(&matches).map_err(Ok)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let mut code = 0;
    let o = match &cli.command {
        Cmd::Generate {
            subject,
            length,
            output,
        } => {
            let cf = subject.cf()?;
            let mut s = subject.stream(&cf, *length)?;
            let w = s.prefix(*length)?.to_vec();
            word_output(cli, &subject.describe(), &w, output.as_deref())?
        }
        Cmd::Synth {
            slope,
            chain,
            length,
            output,
        } => {
            let cf = parse_slope(slope)?;
            let spec = parse_chain(chain, &cf)?;
            let c = spec.chain_for_length(&cf, *length)?;
            let w = crate::chain::synthesize(&cf, &c, *length)?;
            word_output(cli, &format!("chain {chain} slope={slope}"), &w, output.as_deref())?
        }
        Cmd::Complexity { subject, n, length } => {
            let cf = subject.cf()?;
            let len = length.unwrap_or(4 * n);
            let mut s = subject.stream(&cf, len)?;
            let p = subword_complexity(s.prefix(len)?, *n)?;
            Output::new(
                json!({"subject": subject.describe(), "n": n, "length": len, "complexity": p, "sturmian_value": n + 1}),
                format!("p({n}) = {p} over {len} letters (n+1 = {})\n", n + 1),
            )
        }
        Cmd::Rep {
            subject,
            depth,
            n,
            tail,
            plot,
        } => rep_cmd(cli, subject, *depth, *n, *tail, plot.as_deref())?,
        Cmd::Lambda { subject, levels, diff } => {
            let (o, mism) = lambda_cmd(subject, *levels, *diff)?;
            if mism > 0 {
                code = 4;
            }
            o
        }
        Cmd::Chain { subject, levels, stats } => chain_cmd(subject, *levels, *stats)?,
        Cmd::Repx { chain } => {
            let g: GoldenChain = chain.parse()?;
            let r = rep_exact_periodic_golden(&g)?;
            let mu = irrationality_exponent(&r.value)?;
            Output::new(
                json!({
                    "chain": g.to_string(),
                    "exact": r.value.to_string(),
                    "pretty": r.value.pretty(),
                    "decimal": r.value.to_decimal(6),
                    "attained_at": [r.attained_at.0.to_string(), r.attained_at.1.to_string()],
                    "irrationality_exponent": mu.to_decimal(6),
                }),
                format!(
                    "rep({g}) = {} = {} ≈ {}\nirrationality exponent ≈ {}\n",
                    r.value.pretty(),
                    r.value,
                    r.value.to_decimal(6),
                    mu.to_decimal(6)
                ),
            )
        }
        Cmd::Mu => {
            let t = mu_table();
            let rows: Vec<Vec<String>> = t
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.name.to_string(),
                        e.exact.pretty(),
                        e.exact.to_string(),
                        e.decimal.clone(),
                        e.family.to_string(),
                    ]
                })
                .collect();
            let plain = t
                .entries
                .iter()
                .map(|e| format!("{:<7} {}  {}  [{}]\n", e.name, e.decimal, e.exact.pretty(), e.family))
                .collect();
            Output::new(serde_json::to_value(&t)?, plain)
                .table(vec!["name", "exact", "quad", "decimal", "family"], rows)
        }
        Cmd::Minspec {
            slope,
            samples,
            depth,
            tolerance,
            tail,
        } => {
            let cf = parse_slope(slope)?;
            let r = min_spectrum_check(&cf, *samples, *depth, cli.seed, *tail, *tolerance)?;
            let exact = min_spectrum(&cf)?;
            let plain = format!(
                "slope {}\nmin spectrum {} ({})\nconstruction chain (offset {}) {:.6}, error {:.2e}\n{} samples, minimum {}, {} below the exact value\n",
                r.slope,
                r.exact_decimal,
                match &exact {
                    crate::cf::MinSpectrum::Exact { value } => value.pretty(),
                    crate::cf::MinSpectrum::Estimate { window, .. } => format!("window estimate {window:?}"),
                },
                r.construction_offset,
                r.construction_estimate,
                r.construction_error(),
                r.samples,
                r.sampled_min.map_or("-".into(), |v| format!("{v:.6}")),
                r.below_exact
            );
            Output::new(serde_json::to_value(&r)?, plain)
        }
        Cmd::Scan(a) => {
            let (o, violations) = scan_cmd(cli, a)?;
            if violations > 0 {
                code = 4;
            }
            o
        }
    };
    o.emit(cli.format, out)?;
    Ok(code)
}

fn out_path(cli: &Cli, explicit: Option<&Path>, default_name: &str) -> PathBuf {
    match explicit {
        Some(p) => p.to_path_buf(),
        None => cli
            .out_dir
            .clone()
            .unwrap_or_else(|| PathBuf::from("."))
            .join(default_name),
    }
}

fn word_output(cli: &Cli, subject: &str, w: &[u8], output: Option<&Path>) -> Result<Output> {
    let text = crate::words::ascii(w);
    if output.is_some() || w.len() > STDOUT_LIMIT {
        let path = out_path(cli, output, &format!("word-{}.txt", w.len()));
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(&path, format!("{text}\n"))?;
        let p = path.display().to_string();
        return Ok(Output::new(
            json!({"subject": subject, "length": w.len(), "path": p}),
            format!("wrote {} letters to {p}\n", w.len()),
        ));
    }
    Ok(Output::new(
        json!({"subject": subject, "length": w.len(), "word": text}),
        format!("{text}\n"),
    ))
}

fn estimate_json(e: &RepEstimate) -> Value {
    json!({
        "decimal": e.decimal,
        "exact": e.value.to_string(),
        "error_bar": e.error_bar,
        "window": [e.window.0, e.window.1],
        "last_ratios": e.last_ratios,
    })
}

fn rep_cmd(
    cli: &Cli,
    subject: &SubjectArgs,
    depth: usize,
    n: Option<usize>,
    tail: Option<f64>,
    plot: Option<&Path>,
) -> Result<Output> {
    let cf = subject.cf()?;
    let subj = subject.subject(&cf)?;
    let symbolic = match (&subj, n) {
        (Subject::Chain(spec), None) => Some(match spec {
            ChainSpec::Golden(g) if g.is_periodic() => spec.levels(golden_depth(g, depth))?,
            _ => spec.levels(depth)?,
        }),
        (Subject::Characteristic, None) => Some(characteristic_chain(&cf, depth)?),
        _ => None,
    };
    if let Some(chain) = symbolic {
        if plot.is_some() {
            return Err(Error::Domain("--plot needs the r(n) profile; pass --n".into()));
        }
        let (est, lambda) = estimate_chain(&cf, &chain, tail.unwrap_or(DEFAULT_TAIL))?;
        let exact = match &subj {
            Subject::Chain(ChainSpec::Golden(g)) if g.is_periodic() => Some(rep_exact_periodic_golden(g)?.value),
            _ => None,
        };
        let plain = format!(
            "{}\nrep ≈ {} (depth {}, {} Λ elements, error bar {:.2e}){}\n",
            subject.describe(),
            est.decimal,
            chain.len(),
            lambda.elements.len(),
            est.error_bar,
            exact.as_ref().map_or(String::new(), |x| format!(
                "\nexact {} ≈ {}",
                x.pretty(),
                x.to_decimal(6)
            ))
        );
        return Ok(Output::new(
            json!({
                "subject": subject.describe(),
                "mode": "chain",
                "depth": chain.len(),
                "estimate": estimate_json(&est),
                "exact": exact.map(|x| x.to_string()),
                "lambda_head": lambda_head(&lambda, 12),
            }),
            plain,
        ));
    }
    let n = n.unwrap_or(10_000);
    let mut stream = subject.stream(&cf, 2 * n + 2)?;
    let prof = r_profile(&mut stream, n)?;
    let est = rep_estimate(&prof, tail.unwrap_or(PROFILE_TAIL))?;
    let mut plot_path = None;
    if plot.is_some() {
        let path = out_path(cli, plot, "profile.csv");
        prof.write_plot(std::fs::File::create(&path)?)?;
        plot_path = Some(path.display().to_string());
    }
    let plain = format!(
        "{}\nrep ≈ {} (r(n) for n ≤ {n}, {} Λ elements, {} letters){}\n",
        subject.describe(),
        est.decimal,
        prof.lambda.len(),
        prof.prefix_len,
        plot_path
            .as_ref()
            .map_or(String::new(), |p| format!("\nplot data in {p}"))
    );
    let rows = prof
        .lambda
        .windows(2)
        .map(|p| {
            vec![
                p[0].to_string(),
                p[1].to_string(),
                format!("{:.6}", 1.0 + p[0] as f64 / p[1] as f64),
            ]
        })
        .collect();
    Ok(Output::new(
        json!({
            "subject": subject.describe(),
            "mode": "profile",
            "n": n,
            "prefix_len": prof.prefix_len,
            "lambda": prof.lambda,
            "estimate": estimate_json(&est),
            "plot": plot_path,
        }),
        plain,
    )
    .table(vec!["n_i", "n_next", "ratio"], rows))
}

fn lambda_cmd(subject: &SubjectArgs, levels: usize, diff: bool) -> Result<(Output, usize)> {
    let cf = subject.cf()?;
    let q = cf.denominators(levels + 2)?;
    let need: usize = (&q[levels + 2] * 3u32 + &q[levels + 1] * 2u32)
        .try_into()
        .map_err(|_| Error::Unsupported("prefix length exceeds usize".into()))?;
    let mut stream = subject.stream(&cf, need)?;
    let d = verify_lambda(&mut stream, &cf, levels)?;
    let m = d.mismatches();
    let plain = if diff {
        format!("{m} mismatches on [{}, {}]\n", d.lo, d.hi)
    } else {
        let pred: Vec<String> = d.predicted.iter().map(|(n, t)| format!("{n}:{t}")).collect();
        format!(
            "chain {}\ninterval [{}, {}]\nbrute     {:?}\npredicted {}\n{m} mismatches\n",
            d.chain,
            d.lo,
            d.hi,
            d.brute,
            pred.join(" ")
        )
    };
    let rows = d
        .predicted
        .iter()
        .map(|(n, t)| vec![n.to_string(), t.to_string(), d.brute.contains(n).to_string()])
        .collect();
    Ok((
        Output::new(serde_json::to_value(&d)?, plain).table(vec!["n", "tag", "in_brute"], rows),
        m,
    ))
}

fn chain_cmd(subject: &SubjectArgs, levels: usize, stats: bool) -> Result<Output> {
    let cf = subject.cf()?;
    let table_need = {
        let q = cf.denominators(levels)?;
        let v: usize = (&q[levels] * 3u32 + &q[levels - 1] * 2u32)
            .try_into()
            .map_err(|_| Error::Unsupported("prefix length exceeds usize".into()))?;
        v
    };
    let mut stream = subject.stream(&cf, table_need)?;
    let (chain, states) = chain_of_stream(&mut stream, &cf, levels)?;
    let golden = cf.value().ok() == Some(crate::cf::QuadraticNumber::phi());
    let letters = if golden {
        GoldenChain::from_cases(&chain.cases).ok().map(|g| g.to_string())
    } else {
        None
    };
    let stats_v = if stats {
        if !golden {
            return Err(Error::Domain("chain statistics are defined for slope φ".into()));
        }
        let g = GoldenChain::from_cases(&chain.cases)?;
        let n = g.prefix.len();
        Some(chain_stats(&g, n)?)
    } else {
        None
    };
    let mut plain = format!("{chain}\n");
    if let Some(l) = &letters {
        plain.push_str(&format!("letters {l}\n"));
    }
    plain.push_str("k case |W_k| q_k t\n");
    for s in &states {
        plain.push_str(&format!(
            "{} {} {} {} {}\n",
            s.k,
            s.case,
            s.w_len,
            s.q_k,
            s.t.map_or("-".into(), |t| t.to_string())
        ));
    }
    if let Some(st) = &stats_v {
        plain.push_str(&format!(
            "c = {}\nm = {:?}\nl = {:?}\ne = {:?}\n",
            st.c_prefix, st.m, st.l, st.e
        ));
    }
    let rows = states
        .iter()
        .map(|s| {
            vec![
                s.k.to_string(),
                s.case.to_string(),
                s.w_len.to_string(),
                s.q_k.to_string(),
                s.t.map_or(String::new(), |t| t.to_string()),
            ]
        })
        .collect();
    let json = json!({
        "chain": chain.to_string(),
        "annotated": serde_json::from_str::<Value>(&chain.to_json())?,
        "letters": letters,
        "states": states,
        "stats": stats_v,
    });
    Ok(Output::new(json, plain).table(vec!["k", "case", "w_len", "q_k", "t"], rows))
}

fn parse_sampler(s: &str) -> Result<Sampler> {
    let s = s.trim();
    Ok(match s.split_once(':') {
        None if s == "periodic" => Sampler::Periodic {
            max_prefix: 4,
            max_period: 6,
            leading_iii: 0.25,
        },
        None if s == "uniform" => Sampler::Uniform { leading_iii: 0.25 },
        Some(("pinned", c)) => {
            c.parse::<GoldenChain>()?;
            Sampler::Pinned { chain: c.to_string() }
        }
        Some(("mu4", d)) => Sampler::Mu4Family {
            d_max: d.parse().map_err(|_| Error::Parse(format!("bad d_max {d:?}")))?,
        },
        _ => return Err(Error::Parse(format!("unknown sampler {s:?}"))),
    })
}

fn scan_cmd(cli: &Cli, a: &ScanArgs) -> Result<(Output, usize)> {
    let cfg = GapScanConfig {
        seed: cli.seed,
        count: a.count,
        depth: a.depth,
        tolerance: a.tolerance,
        discard: a.tail,
        sampler: parse_sampler(&a.sampler)?,
    };
    let rep = gap_scan(&cfg);
    let mut files = Vec::new();
    if let Some(dir) = &cli.out_dir {
        std::fs::create_dir_all(dir)?;
        let p = dir.join("records.jsonl");
        write_jsonl(&rep.records, std::fs::File::create(&p)?)?;
        files.push(p.display().to_string());
        let p = dir.join("summary.csv");
        write_summary_csv(&rep.records, std::fs::File::create(&p)?)?;
        files.push(p.display().to_string());
    }
    let v = rep.violations.len();
    let est: Vec<f64> = rep.records.iter().filter_map(|r| r.estimate_f64()).collect();
    let lo = est.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = est.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut plain = format!(
        "{} subjects (seed {}), depth {}, tolerance {}\nestimates in [{lo:.6}, {hi:.6}]\n{v} gap violations, {} failures\n",
        rep.records.len(),
        cfg.seed,
        cfg.depth,
        cfg.tolerance,
        rep.failures.len()
    );
    for x in &rep.violations {
        plain.push_str(&format!(
            "  {} {} {:.6} ± {:.2e} in {}\n",
            x.id, x.subject, x.estimate, x.error_bar, x.gap
        ));
    }
    for f in &files {
        plain.push_str(&format!("wrote {f}\n"));
    }
    let rows = rep
        .records
        .iter()
        .map(|r| {
            vec![
                r.subject.clone(),
                r.depth.to_string(),
                r.rep_estimate.clone().unwrap_or_default(),
                r.rep_exact.clone().unwrap_or_default(),
                match (r.estimate_f64(), r.exact_f64()) {
                    (Some(e), Some(x)) => format!("{:.6e}", (e - x).abs()),
                    _ => String::new(),
                },
            ]
        })
        .collect();
    let json = json!({
        "config": rep.config,
        "count": rep.records.len(),
        "violations": rep.violations,
        "failures": rep.failures,
        "histogram": rep.histogram.iter().filter(|b| b.count > 0).collect::<Vec<_>>(),
        "files": files,
    });
    Ok((
        Output::new(json, plain).table(vec!["subject", "depth", "estimate", "exact", "abs_err"], rows),
        v,
    ))
}
