use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use srak::cli::{self, CliError, JobSpec, Report, SelftestOptions};

#[derive(Parser)]
#[command(name = "srak", version, about = "Exact computations in symplectic reflection and rational Cherednik algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// `symmetric:<n>:<reflection|permutation>` or a group spec file.
    #[arg(long, visible_alias = "builtin")]
    group: Option<String>,
    /// Value of t, or `generic`.
    #[arg(long)]
    t: Option<String>,
    /// Values of c, one per reflection orbit, comma separated; `generic` keeps one symbolic.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    output: Option<String>,
    /// Record the wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure and reflection data.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Normal forms, products, center and Poisson bracket.
    Sra {
        #[command(subcommand)]
        cmd: SraCmd,
    },
    /// Centralizer construction checks.
    Centralizer {
        #[command(subcommand)]
        cmd: CentralizerCmd,
    },
    /// Contravariant forms, finite-dimensional scans and type A ideals.
    Cherednik {
        #[command(subcommand)]
        cmd: CherednikCmd,
    },
    /// The completion isomorphism at a point of h.
    #[command(name = "be-iso")]
    BeIso {
        #[command(subcommand)]
        cmd: BeIsoCmd,
    },
    /// The trace obstruction lattice.
    Simplicity {
        #[command(subcommand)]
        cmd: SimplicityCmd,
    },
    /// Desk-scale checks over S_2 and S_3.
    Selftest {
        #[arg(long, hide = true)]
        perturb: bool,
        #[arg(long)]
        output: Option<String>,
    },
    /// Run a job file.
    Run { job: String },
}

#[derive(Subcommand)]
enum GroupCmd {
    Analyze(Common),
}

#[derive(Subcommand)]
enum SraCmd {
    Normalize {
        #[command(flatten)]
        common: Common,
        #[arg(long = "elem", required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    Center {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        deg: Option<u32>,
    },
    Poisson {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        deg: Option<u32>,
    },
}

#[derive(Subcommand)]
enum CentralizerCmd {
    Selftest {
        /// The group.
        #[arg(long)]
        g: String,
        /// `trivial`, `all`, `parabolic:<k>`, `elements:<i>,..` or `stabilizer:<b>,..`.
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        #[arg(long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum CherednikCmd {
    Gram {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        deg: Option<u32>,
        #[arg(long)]
        tau: Option<String>,
    },
    Scan {
        #[command(flatten)]
        common: Common,
        /// A builtin list (`half_integers`, `thirds`, `rank_one_survey`) or a file.
        #[arg(long)]
        c_list: Option<String>,
        #[arg(long)]
        cutoff: Option<u32>,
    },
    Typea {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: String,
        /// Also scan the slice algebra up to this degree.
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum BeIsoCmd {
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        order: Option<u32>,
    },
}

#[derive(Subcommand)]
enum SimplicityCmd {
    Lattice {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c_list: Option<String>,
    },
}

fn with_common(command: &str, c: Common) -> JobSpec {
    JobSpec { group: c.group, t: c.t, c: c.c, output: c.output, timing: c.timing, ..JobSpec::new(command) }
}

enum Plan {
    Job(Box<JobSpec>),
    Selftest(SelftestOptions, Option<String>),
}

fn plan(cmd: Command) -> Result<Plan, CliError> {
    let job = match cmd {
        Command::Group { cmd: GroupCmd::Analyze(c) } => with_common("group analyze", c),
        Command::Sra { cmd } => match cmd {
            SraCmd::Normalize { common, elements } => JobSpec { elements, ..with_common("sra normalize", common) },
            SraCmd::Mul { common, a, b } => JobSpec { elements: vec![a, b], ..with_common("sra mul", common) },
            SraCmd::Center { common, deg } => JobSpec { degree: deg, ..with_common("sra center", common) },
            SraCmd::Poisson { common, deg } => JobSpec { degree: deg, ..with_common("sra poisson", common) },
        },
        Command::Centralizer { cmd: CentralizerCmd::Selftest { g, h, output } } => {
            JobSpec { group: Some(g), subgroup: h, output, ..JobSpec::new("centralizer selftest") }
        }
        Command::Cherednik { cmd } => match cmd {
            CherednikCmd::Gram { common, deg, tau } => JobSpec { degree: deg, tau, ..with_common("cherednik gram", common) },
            CherednikCmd::Scan { common, c_list, cutoff } => JobSpec { c_list, cutoff, ..with_common("cherednik scan", common) },
            CherednikCmd::Typea { n, c, cutoff, output } => {
                JobSpec { n: Some(n), c: Some(c), cutoff, output, ..JobSpec::new("cherednik typea") }
            }
        },
        Command::BeIso { cmd: BeIsoCmd::Verify { common, b, order } } => {
            JobSpec { b: Some(b), order, ..with_common("be-iso verify", common) }
        }
        Command::Simplicity { cmd: SimplicityCmd::Lattice { common, c_list } } => {
            JobSpec { c_list, ..with_common("simplicity lattice", common) }
        }
        Command::Selftest { perturb, output } => return Ok(Plan::Selftest(SelftestOptions { perturb }, output)),
        Command::Run { job } => {
            let text = std::fs::read_to_string(&job).map_err(|e| CliError::parse(&job, e))?;
            JobSpec::from_json(&text)?
        }
    };
    Ok(Plan::Job(Box::new(job)))
}

fn emit(report: &Report, output: Option<&str>) -> Result<(), CliError> {
    let json = report.to_json();
    match output {
        Some(path) => std::fs::write(path, json).map_err(|e| CliError::parse(path, e))?,
        None => print!("{json}"),
    }
    eprint!("{}", report.summary());
    Ok(())
}

fn main_inner(cli: Cli) -> Result<i32, CliError> {
    cli::configure_threads()?;
    let (report, output) = match plan(cli.command)? {
        Plan::Job(job) => {
            let output = job.output.clone();
            (cli::run(&job)?, output)
        }
        Plan::Selftest(options, output) => (cli::selftest(&options)?, output),
    };
    emit(&report, output.as_deref())?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("srak: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
