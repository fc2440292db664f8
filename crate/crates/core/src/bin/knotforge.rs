use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use knotforge::cli::{golden_check, render_text, run, Command, RunConfig};
use knotforge::relations::{Conventions, SignConvention};

#[derive(Parser)]
#[command(name = "knotforge", version, about = "Theta-graph invariants from fiberwise Morse data")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, global = true, default_value = "A")]
    ihx_sign_convention: SignConvention,
    #[arg(long, global = true, default_value = "A")]
    stu_sign_convention: SignConvention,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the truncated quotient and report its basis.
    Quotient {
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        window: i64,
        #[arg(long)]
        nh_only: bool,
    },
    #[command(subcommand)]
    Theta(ThetaCmd),
    #[command(subcommand)]
    Morse(MorseCmd),
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    #[command(subcommand)]
    Scheme(SchemeCmd),
    /// Regenerate a golden suite and compare byte for byte.
    Golden {
        #[arg(long)]
        suite: PathBuf,
        #[arg(long)]
        update: bool,
    },
}

#[derive(Subcommand)]
enum ThetaCmd {
    Verify {
        #[arg(long, default_value_t = 3)]
        max: i64,
    },
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
}

#[derive(Subcommand)]
enum MorseCmd {
    Zeta {
        input: PathBuf,
        #[arg(long, default_value_t = 10)]
        order: u64,
    },
    Alexander {
        input: PathBuf,
    },
    CheckDenominator {
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum SurgeryCmd {
    Z {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    Whitehead,
}

#[derive(Subcommand)]
enum SchemeCmd {
    Check {
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
}

fn emit(args: &Args, text: &str) -> Result<(), String> {
    match &args.output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match &args.cmd {
        Cmd::Golden { suite, update } => {
            return match golden_check(suite, args.threads, *update) {
                Ok(r) => {
                    let text = serde_json::to_string_pretty(&r).expect("serializable") + "\n";
                    if let Err(e) = emit(&args, &text) {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                    if r.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            };
        }
        Cmd::Quotient { degree, window, nh_only } => {
            Command::Quotient { degree: *degree, window: *window, nh_only: *nh_only }
        }
        Cmd::Theta(ThetaCmd::Verify { max }) => Command::ThetaVerify { max: *max },
        Cmd::Theta(ThetaCmd::Reduce { p, q }) => Command::ThetaReduce { p: *p, q: *q },
        Cmd::Morse(MorseCmd::Zeta { input, order }) => Command::MorseZeta { input: input.clone(), order: *order },
        Cmd::Morse(MorseCmd::Alexander { input }) => Command::MorseAlexander { input: input.clone() },
        Cmd::Morse(MorseCmd::CheckDenominator { input }) => Command::MorseCheckDenominator { input: input.clone() },
        Cmd::Surgery(SurgeryCmd::Z { input, n }) => Command::SurgeryZ { input: input.clone(), n: *n },
        Cmd::Surgery(SurgeryCmd::Whitehead) => Command::SurgeryWhitehead,
        Cmd::Scheme(SchemeCmd::Check { max_k }) => Command::SchemeCheck { max_k: *max_k },
    };
    let config = RunConfig {
        command,
        conventions: Conventions { ihx: args.ihx_sign_convention, stu: args.stu_sign_convention },
        threads: args.threads,
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Text => render_text(&report),
    };
    if let Err(e) = emit(&args, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
