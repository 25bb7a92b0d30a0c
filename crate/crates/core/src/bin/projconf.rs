use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use projconf::cli::{self, CmdOutput};
use projconf::constructions::elkies::Branch;
use projconf::field::{parse_rational, Rational};
use projconf::render::RenderSpec;

#[derive(Parser)]
#[command(
    name = "projconf",
    version,
    about = "Exact rational realizability of small point-line configurations"
)]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce, solve and extend a .inc file; prints a .real witness.
    Realize {
        input: PathBuf,
        #[arg(long, default_value_t = 64)]
        height: u64,
    },
    /// Census of reduced structures on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Draw a .real file as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        labels: bool,
        /// Line `a,b,c` sent to infinity before drawing.
        #[arg(long, value_parser = parse_chart)]
        chart: Option<[Rational; 3]>,
        #[arg(long, default_value_t = 400.0)]
        size: f64,
    },
    /// Check a .real file exactly.
    Verify { input: PathBuf },
    /// Print the reduced form of a .inc file.
    Reduce { input: PathBuf },
    /// The ten-point configuration at parameter a.
    Elkies {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        a: Rational,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        branch: Branch,
    },
    /// Rational points on 2y^2 = x^3 + x^2 - x + 1 up to a height.
    CurveSearch {
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Incidences of rich lines in the integer grid.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        threshold: Option<usize>,
    },
    /// Look for a pattern (.inc) inside a host (.real).
    Find { host: PathBuf, pattern: PathBuf },
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_chart(s: &str) -> Result<[Rational; 3], String> {
    let parts: Vec<Rational> = s
        .split(',')
        .map(|p| parse_rat(p.trim()))
        .collect::<Result<_, _>>()?;
    parts.try_into().map_err(|_| "expected a,b,c".to_string())
}

fn read(path: &Path) -> Result<String, CmdOutput> {
    std::fs::read_to_string(path).map_err(|e| CmdOutput {
        code: cli::EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", path.display()),
    })
}

fn run(cmd: Cmd) -> Result<CmdOutput, CmdOutput> {
    Ok(match cmd {
        Cmd::Realize { input, height } => cli::cmd_realize(&read(&input)?, height),
        Cmd::Enumerate { n } => cli::cmd_enumerate(n),
        Cmd::Render {
            input,
            labels,
            chart,
            size,
        } => {
            let spec = RenderSpec {
                width: size,
                height: size,
                labels,
                chart,
                ..RenderSpec::default()
            };
            cli::cmd_render(&read(&input)?, &spec)
        }
        Cmd::Verify { input } => cli::cmd_verify(&read(&input)?),
        Cmd::Reduce { input } => cli::cmd_reduce(&read(&input)?),
        Cmd::Elkies { a, branch } => cli::cmd_elkies(&a, branch),
        Cmd::CurveSearch { bound } => cli::cmd_curve_search(bound),
        Cmd::Grid { n, threshold } => cli::cmd_grid(n, threshold),
        Cmd::Find { host, pattern } => cli::cmd_find(&read(&host)?, &read(&pattern)?),
    })
}

fn main() -> ExitCode {
    let out = run(Args::parse().cmd).unwrap_or_else(|e| e);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
