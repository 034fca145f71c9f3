//! The `extendix` command line.
//!
//! Exit codes: 0 when the property holds or the conversion succeeded, 1 when the
//! property fails (a witness is printed) or a certificate is rejected, 2 on input
//! errors, 3 when a search finds nothing within its bounds.

pub mod convert;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use extendix::certificate::{self, Certificate, Claim};
use extendix::format::{self, Instance, InstanceKind};
use extendix::generate;
use extendix::search;

use crate::convert::Direction;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "extendix", version, about = "Matching extendability, strong connectivity and matrix decomposability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the properties of an instance file
    Analyze {
        path: PathBuf,
        /// Reject files of any other kind
        #[arg(long)]
        kind: Option<InstanceKind>,
        /// Also decide the k-property (k-extendable, k-strong or k-indecomposable)
        #[arg(long)]
        k: Option<usize>,
        /// Perfect matching used for D(G, M): `auto` or edges like u1w2,u2w1
        #[arg(long, default_value = "auto")]
        matching: String,
        /// Indented human-readable output instead of key: value lines
        #[arg(long)]
        human: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Translate between bg, dg and mat files
    Convert {
        path: PathBuf,
        #[arg(long)]
        to: Direction,
        #[arg(long, default_value = "auto")]
        matching: String,
        /// g2d sidecar whose labels a d2g conversion restores
        #[arg(long)]
        map: Option<PathBuf>,
        /// Output file; the sidecar goes to `<out>.map`
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide a claim and write a certificate for the verdict
    Certify {
        path: PathBuf,
        #[arg(long)]
        claim: Claim,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file
    Verify { path: PathBuf },
    /// Exhaustive search for minimal instances
    Search {
        #[arg(long)]
        target: Target,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random instance
    Randgen {
        #[arg(long)]
        kind: InstanceKind,
        #[arg(long)]
        n: usize,
        /// Probability of each optional edge, arc or entry
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "minimal_k_strong")]
    MinimalKStrong,
    #[value(name = "minimal_k_extendable")]
    MinimalKExtendable,
    #[value(name = "minimality_counterexample")]
    MinimalityCounterexample,
}

struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, message: message.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load(path: &Path, kind: Option<InstanceKind>) -> Result<Instance, Failure> {
    let text = read(path)?;
    let parsed = match kind {
        Some(k) => format::parse_as(&text, k),
        None => format::parse(&text),
    };
    parsed.map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(input_error),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Analyze { path, kind, k, matching, human, out } => {
            let instance = load(&path, kind)?;
            let m = match &instance {
                Instance::Bipartite(g) if matching != "auto" => Some(convert::select_matching(g, &matching).map_err(input_error)?),
                _ => None,
            };
            let report = report::analyze(&instance, m.as_ref(), k).map_err(input_error)?;
            let text = if human { report.human() } else { report.to_string() };
            emit(out.as_deref(), &text, stdout)?;
            Ok(if report.query == Some(false) { EXIT_FAILS } else { EXIT_HOLDS })
        }
        Command::Convert { path, to, matching, map, out } => {
            let instance = load(&path, None)?;
            let restore = match &map {
                Some(p) => Some(convert::parse_vertex_map(&read(p)?).map_err(|e| input_error(format!("{}: {e}", p.display())))?),
                None => None,
            };
            let converted = convert::convert(&instance, to, &matching, restore.as_deref()).map_err(input_error)?;
            let text = format::write_instance(&converted.instance);
            emit(out.as_deref(), &text, stdout)?;
            if let Some(out) = out {
                let mut sidecar = out.into_os_string();
                sidecar.push(".map");
                emit(Some(Path::new(&sidecar)), &converted.sidecar, stdout)?;
            }
            Ok(EXIT_HOLDS)
        }
        Command::Certify { path, claim, k, out } => {
            let instance = load(&path, None)?;
            let cert = certificate::certify(&instance, claim, k).map_err(input_error)?;
            let text = cert.to_string();
            let reparsed: Certificate = text.parse().map_err(|e| input_error(format!("emitted certificate unreadable: {e}")))?;
            let check = certificate::verify(&reparsed);
            emit(out.as_deref(), &text, stdout)?;
            match check {
                Ok(()) => {
                    let verdict = if cert.holds { "holds" } else { "fails" };
                    let _ = writeln!(stderr, "{claim} k={k}: {verdict}; certificate verified");
                }
                Err(e) => return Err(Failure { code: EXIT_INPUT, message: format!("emitted certificate failed verification: {e}") }),
            }
            Ok(if cert.holds { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::Verify { path } => {
            let cert: Certificate = read(&path)?.parse().map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            match certificate::verify(&cert) {
                Ok(()) => {
                    let verdict = if cert.holds { "holds" } else { "fails" };
                    let _ = writeln!(stdout, "valid: {} k={} {verdict}", cert.claim, cert.k);
                    Ok(EXIT_HOLDS)
                }
                Err(e) => {
                    let _ = writeln!(stdout, "rejected: {e}");
                    Ok(EXIT_FAILS)
                }
            }
        }
        Command::Search { target, n_max, k, out } => {
            let (text, found, audits_hold) = run_search(target, n_max, k).map_err(input_error)?;
            emit(out.as_deref(), &text, stdout)?;
            Ok(match (found, audits_hold) {
                (0, _) => EXIT_EXHAUSTED,
                (_, true) => EXIT_HOLDS,
                (_, false) => EXIT_FAILS,
            })
        }
        Command::Randgen { kind, n, p, seed, out } => {
            let instance = match kind {
                InstanceKind::Bipartite => generate::random_bipartite_with_pm(n, p, seed).map(Instance::Bipartite),
                InstanceKind::Digraph => generate::random_digraph(n, p, seed).map(Instance::Digraph),
                InstanceKind::Matrix => generate::random_matrix(n, p, seed).map(Instance::Matrix),
            }
            .map_err(input_error)?;
            emit(out.as_deref(), &format::write_instance(&instance), stdout)?;
            Ok(EXIT_HOLDS)
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn arc_list(arcs: &[(usize, usize)]) -> String {
    arcs.iter().map(|(a, b)| format!("v{}v{}", a + 1, b + 1)).collect::<Vec<_>>().join(" ")
}

/// Text listing, number of instances and whether every audit passed.
fn run_search(target: Target, n_max: usize, k: usize) -> Result<(String, usize, bool), search::SearchError> {
    let name = target.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut out = format!("target: {name}\nn_max: {n_max}\nk: {k}\n");
    let mut ok = true;
    let mut body = String::new();
    let found = match target {
        Target::MinimalKStrong => {
            let entries = search::minimal_k_strong(n_max, k)?;
            for (i, e) in entries.iter().enumerate() {
                body.push_str(&format!("instance {}:\n{}", i + 1, format::write_instance(&Instance::Digraph(e.digraph.clone()))));
                body.push_str(&format!(
                    "audit: degree out_degree_k={} in_degree_k={} {}\n",
                    e.mader.out_degree_k,
                    e.mader.in_degree_k,
                    verdict(e.mader.holds)
                ));
                match &e.trail {
                    None => body.push_str("audit: anti_directed_trail none holds\n"),
                    Some(t) => body.push_str(&format!("audit: anti_directed_trail {} fails\n", arc_list(t))),
                }
                body.push_str("end\n");
                ok &= e.mader.holds && e.trail.is_none();
            }
            entries.len()
        }
        Target::MinimalKExtendable => {
            let entries = search::minimal_k_extendable(n_max, k)?;
            for (i, e) in entries.iter().enumerate() {
                body.push_str(&format!("instance {}:\n{}", i + 1, format::write_instance(&Instance::Bipartite(e.graph.clone()))));
                body.push_str(&format!(
                    "audit: degree total={} in_u={} in_w={} {}\n",
                    e.lou.total,
                    e.lou.in_u,
                    e.lou.in_w,
                    verdict(e.lou.holds)
                ));
                body.push_str(&format!(
                    "audit: forest qualifying={} {}\n",
                    e.forest.qualifying.len(),
                    verdict(e.forest.is_forest && e.forest.trail_is_closed)
                ));
                body.push_str(&format!(
                    "audit: transfer minimal_strong={} {}\n",
                    if e.transfer.minimal_strong.is_minimal() { "yes" } else { "no" },
                    verdict(e.transfer.holds)
                ));
                body.push_str("end\n");
                ok &= e.lou.holds && e.forest.is_forest && e.forest.trail_is_closed && e.transfer.holds;
            }
            entries.len()
        }
        Target::MinimalityCounterexample => {
            let entries = search::minimality_counterexample(n_max)?;
            for (i, e) in entries.iter().enumerate() {
                body.push_str(&format!("instance {}:\n{}", i + 1, format::write_instance(&Instance::Digraph(e.digraph.clone()))));
                body.push_str(&format!("image: {}", format::write_instance(&Instance::Bipartite(e.graph.clone()))));
                body.push_str(&format!("deletable: {}\n", e.deletable));
                body.push_str("end\n");
            }
            entries.len()
        }
    };
    out.push_str(&format!("found: {found}\n"));
    out.push_str(&body);
    let summary = match (found, ok) {
        (0, _) => "nothing found within bounds".to_string(),
        (n, true) => format!("{n} found, all audits hold"),
        (n, false) => format!("{n} found, some audits fail"),
    };
    out.push_str(&format!("summary: {summary}\n"));
    Ok((out, found, ok))
}
