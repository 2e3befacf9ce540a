use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use resolventlab::arith::{parse_rat, RatPoly};
use resolventlab::constructions::hermite::{condition1_verdict, lower_half_prediction};
use resolventlab::constructions::{
    f_e6, grid_sample, mod5_full_evidence, region_classify, theorem_ex_check, theta_e5,
    write_grid_csv, EllipticCurveQ, HermiteParams, Rect,
};
use resolventlab::galois::{check_theorem_hypotheses, quintic_galois, EvidenceParams};
use resolventlab::groups::selftest;
use resolventlab::scan::{ingest, scan, Format, ScanConfig};

#[derive(Parser)]
#[command(
    name = "resolventlab",
    version,
    about = "Checks for genus-2 curves with transitive S5 mod-2 image"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite group computations.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Hypothesis checks for a sextic.
    Sextic {
        #[command(subcommand)]
        cmd: SexticCmd,
    },
    /// The family x^5 + s x^3 + t x + t.
    Hermite {
        #[command(subcommand)]
        cmd: HermiteCmd,
    },
    /// Elliptic-curve 5-division sextics.
    Ec {
        #[command(subcommand)]
        cmd: EcCmd,
    },
    /// Check every curve of a CSV or JSON-lines file.
    Scan(ScanArgs),
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Verify S6 = GSp4(F2), the two S5 classes and SL2(F4) = A5.
    Selftest,
}

#[derive(Subcommand)]
enum SexticCmd {
    Check {
        /// Coefficients, constant term first, separated by `,` or `:`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Quintic x^5 + s x^3 + t x + t whose resolvent is the sextic.
        #[arg(long, allow_hyphen_values = true)]
        companion: Option<String>,
        #[arg(long, default_value_t = 500)]
        pmax: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum HermiteCmd {
    Check {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value_t = 500)]
        pmax: u64,
    },
    Grid {
        /// s0,s1,t0,t1
        #[arg(long, allow_hyphen_values = true, default_value = "-60,0,0,1000")]
        rect: String,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// CSV output; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum EcCmd {
    /// Invariants, the 5-division quintic and its sextic resolvent.
    Resolvent {
        /// a1,a2,a3,a4,a6
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    Mod5 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 1000)]
        pmax: u64,
    },
    Theorem {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 1000)]
        pmax: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(clap::Args)]
struct ScanArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "csv")]
    format: String,
    /// JSON report; the CSV summary goes next to it.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 500)]
    pmax: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "RESOLVENTLAB_JOBS", default_value_t = 1)]
    jobs: usize,
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn poly(s: &str) -> Result<RatPoly> {
    RatPoly::parse_coeff_list(s).with_context(|| format!("coefficient list `{s}`"))
}

fn parse_rect(s: &str) -> Result<Rect> {
    let v: Vec<_> = s
        .split(',')
        .map(parse_rat)
        .collect::<Result<_, _>>()
        .with_context(|| format!("rectangle `{s}`"))?;
    let [s0, s1, t0, t1]: [_; 4] = v
        .try_into()
        .map_err(|_| anyhow::anyhow!("rectangle needs s0,s1,t0,t1"))?;
    Ok(Rect::new(s0, s1, t0, t1))
}

fn summary_path(out: &Path) -> PathBuf {
    out.with_extension("summary.csv")
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Group {
            cmd: GroupCmd::Selftest,
        } => {
            let t = selftest();
            print!("{t}");
            if !t.passed() {
                bail!("group selftest failed");
            }
        }
        Cmd::Sextic {
            cmd:
                SexticCmd::Check {
                    coeffs,
                    companion,
                    pmax,
                    seed,
                },
        } => {
            let f = poly(&coeffs)?;
            let h = companion.as_deref().map(poly).transpose()?;
            let params = EvidenceParams {
                prime_bound: pmax,
                seed,
            };
            print_json(&check_theorem_hypotheses(&f, h.as_ref(), params)?)?;
        }
        Cmd::Hermite {
            cmd: HermiteCmd::Check { s, t, pmax },
        } => {
            let p = HermiteParams::new(parse_rat(&s)?, parse_rat(&t)?);
            let h = p.quintic();
            let quintic = quintic_galois(&h)?;
            let resolvent_check = match p.resolvent() {
                Ok(r) => Some(check_theorem_hypotheses(
                    &r,
                    Some(&h),
                    EvidenceParams {
                        prime_bound: pmax,
                        seed: 0,
                    },
                )?),
                Err(_) => None,
            };
            print_json(&json!({
                "quintic": h.to_string(),
                "region": region_classify(&p),
                "lower_half_prediction": lower_half_prediction(&p),
                "condition1": condition1_verdict(&p),
                "galois": quintic,
                "resolvent_check": resolvent_check,
            }))?;
        }
        Cmd::Hermite {
            cmd: HermiteCmd::Grid { rect, n, seed, out },
        } => {
            let rows = grid_sample(&parse_rect(&rect)?, n, seed)?;
            match out {
                Some(path) => {
                    let f = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_grid_csv(&rows, BufWriter::new(f))?;
                }
                None => write_grid_csv(&rows, io::stdout().lock())?,
            }
        }
        Cmd::Ec {
            cmd: EcCmd::Resolvent { a },
        } => {
            let e = EllipticCurveQ::parse(&a)?;
            print_json(&json!({
                "curve": e.to_string(),
                "invariants": e.invariants(),
                "theta": theta_e5(&e).to_string(),
                "sextic": f_e6(&e).to_string(),
                "sextic_coeffs": f_e6(&e).to_coeff_list(),
            }))?;
        }
        Cmd::Ec {
            cmd: EcCmd::Mod5 { a, pmax },
        } => {
            let e = EllipticCurveQ::parse(&a)?;
            print_json(&mod5_full_evidence(&e, pmax))?;
        }
        Cmd::Ec {
            cmd: EcCmd::Theorem { a, pmax, seed },
        } => {
            let e = EllipticCurveQ::parse(&a)?;
            let params = EvidenceParams {
                prime_bound: pmax,
                seed,
            };
            print_json(&theorem_ex_check(&e, params)?)?;
        }
        Cmd::Scan(args) => {
            let format: Format = args.format.parse()?;
            let input = ingest(&args.input, format)?;
            let cfg = ScanConfig {
                pmax: args.pmax,
                seed: args.seed,
                jobs: args.jobs,
            };
            let had_row_errors = !input.errors.is_empty();
            let report = scan(&input.records, &cfg)?.with_row_errors(input.errors);
            std::fs::write(&args.out, report.to_json() + "\n")
                .with_context(|| format!("writing {}", args.out.display()))?;
            let summary = summary_path(&args.out);
            let f = File::create(&summary)
                .with_context(|| format!("creating {}", summary.display()))?;
            report.write_summary_csv(BufWriter::new(f))?;
            let s = &report.summary;
            eprintln!(
                "{} pass, {} fail, {} not applicable, {} error",
                s.pass, s.fail, s.not_applicable, s.error
            );
            if had_row_errors {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
