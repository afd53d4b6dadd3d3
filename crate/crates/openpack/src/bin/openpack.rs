//! Command-line front end: solve, certify, reduce, generate, and scan.
//!
//! Exit codes: 0 success / certificate valid; 1 certificate invalid or a
//! scan claim failed; 2 malformed input or bad arguments; 3 size guard
//! exceeded; 4 problem undefined on the instance (isolated vertex for
//! total domination).

use clap::{Args, Parser, Subcommand, ValueEnum};
use openpack::certify;
use openpack::generators;
use openpack::graph::Graph;
use openpack::io;
use openpack::oracle::OracleError;
use openpack::recognize;
use openpack::reductions;
use openpack::scan;
use openpack::solvers::{self, Method, Problem, SolveError, SolveReport};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_INVALID: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_SIZE_GUARD: u8 = 3;
const EXIT_UNDEFINED: u8 = 4;

#[derive(Parser)]
#[command(name = "openpack", version, about = "Open packing and total domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a maximum open packing or minimum total dominating set.
    Solve(SolveArgs),
    /// Check a certificate against a graph.
    Certify(CertifyArgs),
    /// Run one of the five instance transformations.
    Reduce(ReduceArgs),
    /// Emit a deterministic family member or seeded random instance.
    Generate(GenerateArgs),
    /// Re-verify the quantitative claims at a configurable scale.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Op,
    Tds,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Op => Problem::OpenPacking,
            ProblemArg::Tds => Problem::TotalDomination,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Bounded,
    K13Split,
    I1Split,
    Deg12Split,
    Brute,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file in the text format.
    graph: PathBuf,
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// Solver override; `auto` applies the fixed dispatch priority.
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Bound for `--method bounded`.
    #[arg(long)]
    bound: Option<usize>,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 4096)]
    limit: usize,
}

#[derive(Args)]
struct CertifyArgs {
    /// Graph file in the text format.
    graph: PathBuf,
    /// Certificate JSON ({"problem": "op"|"tds", "set": [...], "size": k}).
    certificate: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    /// Source instance: a graph file for constructions 1, 2, 5; hitting-set
    /// JSON for 3; dimensional-matching JSON for 4.
    input: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    construction: u8,
    /// Where to write the output graph (construction 5 writes JSON).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Where to write the vertex-role sidecar JSON.
    #[arg(long)]
    roles: Option<PathBuf>,
    /// Translate this output-side certificate back to the source instance.
    #[arg(long)]
    map: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Gr,
    Hr,
    Random,
    RandomSplit,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Clique size for random-split.
    #[arg(long)]
    c_size: Option<usize>,
    /// Independent-side size for random-split.
    #[arg(long)]
    i_size: Option<usize>,
    /// Independent-side degree range for random-split, e.g. 1..2.
    #[arg(long, default_value = "1..2")]
    degrees: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Claim to run; omit to run every claim.
    #[arg(long)]
    claim: Option<String>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit one JSON object per claim instead of plain text.
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_MALFORMED, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_graph(&read_file(path)?).map_err(|e| fail(EXIT_MALFORMED, e.to_string()))
}

fn write_or_print(path: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| fail(EXIT_MALFORMED, format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn method_tag(method: &Method) -> String {
    match method {
        Method::K13FreeSplit { case } => format!("k13-free-split:{case}"),
        Method::I1Split => "i1-split".to_string(),
        Method::MatchingDispatch { part } => format!("matching-dispatch:{part}"),
        Method::Bounded { class, bound } => format!("bounded:{class}:{bound}"),
        Method::BruteForce => "brute-force".to_string(),
        Method::PerComponent(parts) => {
            let inner: Vec<String> = parts.iter().map(method_tag).collect();
            format!("per-component[{}]", inner.join(", "))
        }
    }
}

fn solve_error_code(e: &SolveError) -> u8 {
    match e {
        SolveError::IsolatedVertex(_) => EXIT_UNDEFINED,
        SolveError::TooLarge(_) | SolveError::NoMethod => EXIT_SIZE_GUARD,
        SolveError::Oracle(OracleError::TooLarge { .. }) => EXIT_SIZE_GUARD,
        _ => EXIT_MALFORMED,
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<(), Failure> {
    let g = load_graph(&args.graph)?;
    if g.n() > args.limit {
        return Err(fail(
            EXIT_SIZE_GUARD,
            format!("graph has {} vertices, limit is {}", g.n(), args.limit),
        ));
    }
    let problem: Problem = args.problem.into();
    let solved: Result<SolveReport, SolveError> = match args.method {
        MethodArg::Auto => solvers::auto_solve(&g, problem),
        MethodArg::Bounded => {
            let bound = args.bound.ok_or_else(|| {
                fail(EXIT_MALFORMED, "--method bounded requires --bound")
            })?;
            solvers::solve_bounded(&g, problem, bound)
        }
        MethodArg::Brute => solvers::auto_solve_with(
            &g,
            problem,
            &solvers::SolveOptions {
                class_r_cap: 0,
                class_vertex_cap: 0,
            },
        ),
        MethodArg::K13Split | MethodArg::Deg12Split | MethodArg::I1Split => {
            let part = recognize::split_partition(&g)
                .ok_or_else(|| fail(EXIT_MALFORMED, "graph is not split"))?;
            match args.method {
                MethodArg::K13Split => solvers::solve_op_k13free_split(&g, &part),
                MethodArg::Deg12Split => solvers::solve_op_split_deg12(&g, &part),
                _ => solvers::solve_tds_i1_split(&g, &part),
            }
        }
    };
    let report = solved.map_err(|e| fail(solve_error_code(&e), e.to_string()))?;
    let out = json!({
        "problem": report.problem.to_string(),
        "optimum": report.optimum,
        "certificate": report.certificate,
        "method": method_tag(&report.method),
        "class_evidence": report.class_evidence,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

fn cmd_certify(args: &CertifyArgs) -> Result<(), Failure> {
    let g = load_graph(&args.graph)?;
    let cert = io::parse_certificate(&read_file(&args.certificate)?)
        .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
    if cert.size != cert.set.len() {
        return Err(fail(
            EXIT_MALFORMED,
            format!("size field {} disagrees with set length {}", cert.size, cert.set.len()),
        ));
    }
    let result = match cert.problem.as_str() {
        "op" => certify::is_open_packing_fast(&g, &cert.set),
        _ => certify::is_total_dominating(&g, &cert.set),
    }
    .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
    if result.valid {
        println!("valid");
        Ok(())
    } else {
        Err(fail(
            EXIT_INVALID,
            format!("invalid: {:?}", result.witness.expect("invalid results carry a witness")),
        ))
    }
}

fn reduction_error(e: reductions::ReductionError) -> Failure {
    fail(EXIT_MALFORMED, e.to_string())
}

fn cmd_reduce(args: &ReduceArgs) -> Result<(), Failure> {
    let map_set = |path: &PathBuf| -> Result<Vec<usize>, Failure> {
        let cert = io::parse_certificate(&read_file(path)?)
            .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
        Ok(cert.set)
    };
    match args.construction {
        1 | 2 => {
            let g = load_graph(&args.input)?;
            let inst = if args.construction == 1 {
                reductions::construct1(&g)
            } else {
                reductions::construct2(&g)
            };
            write_or_print(args.output.as_ref(), &io::serialize_graph(&inst.graph))?;
            if let Some(roles) = &args.roles {
                let sidecar = io::roles_sidecar(&inst);
                write_or_print(Some(roles), &serde_json::to_string_pretty(&sidecar).unwrap())?;
            }
            if let Some(map) = &args.map {
                let s = map_set(map)?;
                let sources = if args.construction == 1 {
                    reductions::normalize_op_c1(&g, &inst, &s)
                } else {
                    reductions::normalize_op_c2(&g, &inst, &s)
                }
                .map_err(reduction_error)?;
                println!("{}", json!({ "source_set": sources }));
            }
        }
        3 => {
            let hs = io::parse_hitting_set(&read_file(&args.input)?)
                .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
            let inst = reductions::construct3(&hs).map_err(reduction_error)?;
            write_or_print(args.output.as_ref(), &io::serialize_graph(&inst.graph))?;
            if let Some(roles) = &args.roles {
                let sidecar = io::roles_sidecar(&inst);
                write_or_print(Some(roles), &serde_json::to_string_pretty(&sidecar).unwrap())?;
            }
            if let Some(map) = &args.map {
                let d = map_set(map)?;
                let hit = reductions::map_tds_c3(&hs, &inst, &d).map_err(reduction_error)?;
                println!("{}", json!({ "hitting_set": hit }));
            }
        }
        4 => {
            let rdm = io::parse_rdm(&read_file(&args.input)?)
                .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
            let inst = reductions::construct4(&rdm).map_err(reduction_error)?;
            write_or_print(args.output.as_ref(), &io::serialize_graph(&inst.graph))?;
            if let Some(roles) = &args.roles {
                let sidecar = io::roles_sidecar(&inst);
                write_or_print(Some(roles), &serde_json::to_string_pretty(&sidecar).unwrap())?;
            }
            if let Some(map) = &args.map {
                let s = map_set(map)?;
                let tuples = reductions::map_op_c4(&rdm, &inst, &s).map_err(reduction_error)?;
                println!("{}", json!({ "tuple_indices": tuples }));
            }
        }
        5 => {
            let g = load_graph(&args.input)?;
            let part = recognize::split_partition(&g)
                .ok_or_else(|| fail(EXIT_MALFORMED, "graph is not split"))?;
            let inst = reductions::construct5(&g, &part).map_err(reduction_error)?;
            let edges: Vec<serde_json::Value> = inst
                .multigraph
                .edges()
                .iter()
                .map(|(u, v, label)| json!([u, v, label]))
                .collect();
            let out = json!({ "n": inst.multigraph.n(), "edges": edges });
            write_or_print(
                args.output.as_ref(),
                &format!("{}\n", serde_json::to_string_pretty(&out).unwrap()),
            )?;
            if let Some(map) = &args.map {
                let labels: Vec<String> = serde_json::from_str(&read_file(map)?)
                    .map_err(|e| fail(EXIT_MALFORMED, e.to_string()))?;
                let s =
                    reductions::map_c5_matching_to_op(&g, &inst, &labels).map_err(reduction_error)?;
                println!("{}", json!({ "open_packing": s }));
            }
        }
        _ => unreachable!("clap range guard"),
    }
    Ok(())
}

fn parse_degree_range(text: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = text.split("..").collect();
    let err = || fail(EXIT_MALFORMED, format!("bad degree range {text:?}, expected lo..hi"));
    if parts.len() != 2 {
        return Err(err());
    }
    let lo = parts[0].parse().map_err(|_| err())?;
    let hi = parts[1].parse().map_err(|_| err())?;
    Ok((lo, hi))
}

fn cmd_generate(args: &GenerateArgs) -> Result<(), Failure> {
    let need = |value: Option<usize>, name: &str| {
        value.ok_or_else(|| fail(EXIT_MALFORMED, format!("--{name} is required for this family")))
    };
    let gen_err = |e: generators::GenError| fail(EXIT_MALFORMED, e.to_string());
    let g = match args.family {
        Family::Path => generators::gen_path(need(args.n, "n")?).map_err(gen_err)?,
        Family::Cycle => generators::gen_cycle(need(args.n, "n")?).map_err(gen_err)?,
        Family::Complete => generators::gen_complete(need(args.n, "n")?).map_err(gen_err)?,
        Family::Gr => generators::gen_gr(need(args.r, "r")?).map_err(gen_err)?,
        Family::Hr => generators::gen_hr(need(args.r, "r")?).map_err(gen_err)?,
        Family::Random => {
            let p = args
                .p
                .ok_or_else(|| fail(EXIT_MALFORMED, "--p is required for random"))?;
            generators::gen_random_graph(need(args.n, "n")?, p, args.seed)
        }
        Family::RandomSplit => {
            let c = need(args.c_size, "c-size")?;
            let i = need(args.i_size, "i-size")?;
            let range = parse_degree_range(&args.degrees)?;
            let (g, _) = generators::gen_random_split(c, i, range, args.seed).map_err(gen_err)?;
            g
        }
    };
    write_or_print(args.output.as_ref(), &io::serialize_graph(&g))
}

fn cmd_scan(args: &ScanArgs) -> Result<(), Failure> {
    let names: Vec<&str> = match &args.claim {
        Some(name) => {
            if !scan::CLAIM_NAMES.contains(&name.as_str()) {
                return Err(fail(
                    EXIT_MALFORMED,
                    format!("unknown claim {name:?}; known: {}", scan::CLAIM_NAMES.join(", ")),
                ));
            }
            vec![name.as_str()]
        }
        None => scan::CLAIM_NAMES.to_vec(),
    };
    let mut all_pass = true;
    for name in names {
        let reports = scan::run_claim(name, args.samples, args.seed)
            .expect("names come from the registry");
        for report in reports {
            all_pass &= report.pass;
            if args.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                let status = if report.pass { "PASS" } else { "FAIL" };
                println!(
                    "{status} {} (checked {}): {}",
                    report.claim, report.checked, report.detail
                );
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(fail(EXIT_INVALID, "one or more claims failed"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
