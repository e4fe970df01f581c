use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use amalgam_zdg::theorems::{invariant_violations, run_all_on};
use amalgam_zdg::{
    parse_family, parse_ideal, parse_ring, sweep, AmalgamRing, FiniteRing, GraphInvariants, Ideal,
    IdealFilter, Instance, Status, SweepReport, VerificationOutcome, ZdGraph,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "amalgam-zdg", version, about = "Zero-divisor graphs of finite rings and their amalgamated duplications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the structure of R, and of R⋈I when an ideal is given.
    Analyze {
        ring: String,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every registered checker on one (R, I).
    Verify {
        ring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every checker over every ring of a family and every accepted ideal.
    Sweep {
        /// Comma-separated specs or ranges, e.g. `Z2..Z16,Z2xZ2..Z4xZ4`. May repeat.
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long, default_value = "nonzero")]
        ideals: IdealFilter,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "AMALGAM_ZDG_WORKERS")]
        workers: Option<usize>,
        /// Record the generation time in the report.
        #[arg(long)]
        timestamps: bool,
    },
    /// Write Γ(R⋈I), or Γ(R) with --base, in DOT format.
    ExportDot {
        ring: String,
        #[arg(long, required_unless_present = "base")]
        ideal: Option<String>,
        #[arg(long)]
        base: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1 after the report has been written.
    Found,
}

impl From<amalgam_zdg::Error> for Failure {
    fn from(e: amalgam_zdg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Found) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Analyze { ring, ideal, format, out } => {
            let r = parse_ring(&ring)?;
            let i = ideal.map(|s| parse_ideal(&r, &s)).transpose()?;
            let report = analyze(&r, i.as_ref())?;
            let text = match format {
                Format::Human => render_analysis(&report),
                Format::Json => json(&report)?,
                Format::Csv => return Err(Failure::Usage("analyze supports human or json".into())),
            };
            emit(out, &text)
        }
        Command::Verify { ring, ideal, format, out } => {
            let r = parse_ring(&ring)?;
            let i = parse_ideal(&r, &ideal)?;
            let inst = Instance::new(&r, &i)?;
            let report = VerifyReport {
                ring: r.spec_name().to_string(),
                ideal: i.labels(&r),
                outcomes: run_all_on(&inst),
                invariant_violations: invariant_violations(&inst),
            };
            let text = match format {
                Format::Human => render_verify(&report),
                Format::Json => json(&report)?,
                Format::Csv => return Err(Failure::Usage("verify supports human or json".into())),
            };
            emit(out, &text)?;
            let bad = report.outcomes.iter().any(|o| o.status == Status::Counterexample);
            if bad || !report.invariant_violations.is_empty() {
                return Err(Failure::Found);
            }
            Ok(())
        }
        Command::Sweep { family, ideals, format, out, workers, timestamps } => {
            let mut specs = Vec::new();
            for f in &family {
                specs.extend(parse_family(f)?);
            }
            let mut report = sweep(&specs, ideals, workers)?;
            if timestamps {
                let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
                report.generated_at = Some(secs);
            }
            let text = match format {
                Format::Human => render_sweep(&report),
                Format::Json => report.to_json()?,
                Format::Csv => report.to_csv()?,
            };
            emit(out, &text)?;
            if report.success() {
                Ok(())
            } else {
                Err(Failure::Found)
            }
        }
        Command::ExportDot { ring, ideal, base, out } => {
            let r = parse_ring(&ring)?;
            let i = ideal.map(|s| parse_ideal(&r, &s)).transpose()?;
            let graph = if base {
                ZdGraph::build(&r)
            } else {
                let i = i.expect("clap enforces --ideal without --base");
                ZdGraph::build(AmalgamRing::amalgamated_duplication(&r, &i)?.ring())
            };
            emit(out, &graph.to_dot())
        }
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("stdout: {e}"))),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct RingSummary {
    ring: String,
    order: usize,
    zero_divisors: Vec<String>,
    reduced: bool,
    integral_domain: bool,
    graph: GraphInvariants,
}

#[derive(Serialize)]
struct AmalgamSummary {
    ideal: Vec<String>,
    order: usize,
    nonzero_zero_divisors: Vec<String>,
    t1: usize,
    t2: usize,
    t3: usize,
    t4: usize,
    graph: GraphInvariants,
    o1: Vec<String>,
    o2: Vec<String>,
    minimal_primes: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct Analysis {
    base: RingSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    amalgam: Option<AmalgamSummary>,
}

fn analyze(r: &FiniteRing, ideal: Option<&Ideal>) -> Result<Analysis, Failure> {
    let base = RingSummary {
        ring: r.spec_name().to_string(),
        order: r.order(),
        zero_divisors: r.set_labels(&r.zero_divisors()),
        reduced: r.is_reduced(),
        integral_domain: r.is_domain(),
        graph: ZdGraph::build(r).invariants()?,
    };
    let amalgam = match ideal {
        None => None,
        Some(i) => {
            let a = AmalgamRing::amalgamated_duplication(r, i)?;
            let d = a.ring();
            let c = a.classify_zero_divisors();
            let mut zd = d.zero_divisors();
            zd.remove(d.zero().index());
            Some(AmalgamSummary {
                ideal: i.labels(r),
                order: d.order(),
                nonzero_zero_divisors: d.set_labels(&zd),
                t1: c.t1.len(),
                t2: c.t2.len(),
                t3: c.t3.len(),
                t4: c.t4.len(),
                graph: ZdGraph::build(d).invariants()?,
                o1: a.o1().labels(d),
                o2: a.o2().labels(d),
                minimal_primes: d.minimal_primes().iter().map(|p| p.labels(d)).collect(),
            })
        }
    };
    Ok(Analysis { base, amalgam })
}

fn set_text(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn graph_lines(out: &mut String, name: &str, g: &GraphInvariants) {
    out.push_str(&format!("{name}: {} vertices, {} edges\n", g.vertex_count, g.edge_count));
    out.push_str(&format!("  diam({name}) = {}\n", g.diameter));
    out.push_str(&format!("  girth({name}) = {}\n", g.girth));
    out.push_str(&format!("  complete: {}\n", g.is_complete));
    out.push_str(&format!("  complete bipartite: {}\n", g.complete_bipartite));
    out.push_str(&format!("  star: {}\n", g.is_star));
    out.push_str(&format!("  universal vertices: {}\n", set_text(&g.universal_vertices)));
}

fn render_analysis(a: &Analysis) -> String {
    let b = &a.base;
    let mut out = format!("R = {}\n|R| = {}\n", b.ring, b.order);
    out.push_str(&format!("Z(R) = {}\n", set_text(&b.zero_divisors)));
    out.push_str(&format!("reduced: {}\n", b.reduced));
    if b.integral_domain {
        out.push_str("integral domain; Γ empty\n");
    } else {
        out.push_str("integral domain: false\n");
        graph_lines(&mut out, "Γ(R)", &b.graph);
    }
    if let Some(m) = &a.amalgam {
        out.push_str(&format!("I = {}\n", set_text(&m.ideal)));
        out.push_str(&format!("|R⋈I| = {}\n", m.order));
        out.push_str(&format!(
            "|Z(R⋈I)∖{{0}}| = {}\nZ(R⋈I)∖{{0}} = {}\n",
            m.nonzero_zero_divisors.len(),
            set_text(&m.nonzero_zero_divisors)
        ));
        out.push_str(&format!("|T1| = {}, |T2| = {}, |T3| = {}, |T4| = {}\n", m.t1, m.t2, m.t3, m.t4));
        graph_lines(&mut out, "Γ(R⋈I)", &m.graph);
        out.push_str(&format!("O1 = {}\nO2 = {}\n", set_text(&m.o1), set_text(&m.o2)));
        let mins: Vec<String> = m.minimal_primes.iter().map(|p| set_text(p)).collect();
        out.push_str(&format!("minimal primes of R⋈I: {}\n", mins.join(" ")));
    }
    out
}

#[derive(Serialize)]
struct VerifyReport {
    ring: String,
    ideal: Vec<String>,
    outcomes: Vec<VerificationOutcome>,
    invariant_violations: Vec<String>,
}

fn render_verify(r: &VerifyReport) -> String {
    let mut out = format!("R = {}, I = {}\n", r.ring, set_text(&r.ideal));
    for o in &r.outcomes {
        out.push_str(&format!("{:<6} {:<14} {}\n", o.theorem.as_str(), o.status.to_string(), o.detail));
        if let Some(w) = &o.witness {
            out.push_str(&format!("       witness: {w}\n"));
        }
        if let Some(n) = &o.note {
            out.push_str(&format!("       note: {n}\n"));
        }
    }
    for v in &r.invariant_violations {
        out.push_str(&format!("invariant violation: {v}\n"));
    }
    out
}

fn render_sweep(r: &SweepReport) -> String {
    let mut out = format!(
        "family: {} rings, {} instances, ideals {}\n",
        r.family.len(),
        r.instances.len(),
        r.ideal_filter
    );
    if let Some(t) = r.generated_at {
        out.push_str(&format!("generated at {t}\n"));
    }
    out.push_str(&format!("{:<6} {:>9} {:>8} {:>15}\n", "thm", "verified", "vacuous", "counterexample"));
    for (id, t) in &r.totals {
        out.push_str(&format!(
            "{:<6} {:>9} {:>8} {:>15}\n",
            id.as_str(),
            t.verified,
            t.vacuous,
            t.counterexample
        ));
    }
    for inst in &r.instances {
        for o in inst.outcomes.iter().filter(|o| o.status == Status::Counterexample) {
            out.push_str(&format!(
                "counterexample {} at {} I = {}: {}\n",
                o.theorem,
                inst.ring,
                set_text(&inst.ideal),
                o.witness.as_deref().unwrap_or("")
            ));
        }
    }
    for v in &r.invariant_violations {
        out.push_str(&format!("invariant violation at {} I = {}: {}\n", v.ring, set_text(&v.ideal), v.detail));
    }
    out.push_str(if r.success() { "result: ok\n" } else { "result: FAILED\n" });
    out
}
