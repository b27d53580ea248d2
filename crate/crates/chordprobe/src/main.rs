use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use chordprobe::harness::{run_search, SearchConfig};
use chordprobe::ingest::{Graph6Lines, ParsePolicy, Source};
use chordprobe_core::bound::{internal_bound_vertices, path_bound_vertices, theorem5_extract};
use chordprobe_core::conjecture::{
    check_theorem5, verify_certificate, Certificate, ConjectureId, Outcome,
};
use chordprobe_core::generate::{enumerate_graphs, ClassFilter};
use chordprobe_core::graph::Graph;
use chordprobe_core::graph6::{encode_graph6, parse_graph6};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "chordprobe",
    version,
    about = "Exhaustive checks of bound-vertex and chord statements on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one statement on every graph of a source
    Check(CheckArgs),
    /// Write the internally generated graphs of one order as graph6
    Gen {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Re-verify counterexample certificates, one JSON object per line
    VerifyCert { file: PathBuf },
    /// Run the rotation extractor on one graph and print its witness
    DemoThm5 {
        /// graph6 string; read the first graph of --input or stdin if absent
        graph6: Option<String>,
        #[arg(long, conflicts_with = "graph6")]
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// 1, 2, 3, 4, 6 (or 6-instance) or thm5
    #[arg(long)]
    conjecture: ConjectureId,
    /// Order range `a-b` or single order; required for internal generation
    #[arg(long, value_parser = parse_orders)]
    orders: Option<RangeInclusive<usize>>,
    /// graph6 file to read instead of generating
    #[arg(long, conflicts_with = "stdin")]
    input: Option<PathBuf>,
    /// Read graph6 from standard input
    #[arg(long)]
    stdin: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report file (`-` for standard output)
    #[arg(long, default_value = "-")]
    report: PathBuf,
    /// Certificate file, created only if a violation is found
    #[arg(long, default_value = "certificates.jsonl")]
    certs: PathBuf,
    /// Omit timing fields
    #[arg(long)]
    stable_output: bool,
    /// abort or skip
    #[arg(long, default_value = "abort")]
    on_parse_error: ParsePolicy,
    /// Print progress to standard error
    #[arg(long)]
    progress: bool,
    #[command(flatten)]
    class: ClassArgs,
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long, default_value_t = 0)]
    min_connectivity: usize,
    #[arg(long)]
    regular: Option<usize>,
    #[arg(long)]
    triangle_free: bool,
    #[arg(long)]
    c4_free: bool,
    #[arg(long, default_value_t = 0)]
    min_degree: usize,
}

impl ClassArgs {
    fn filter(&self) -> ClassFilter {
        ClassFilter {
            min_connectivity: self.min_connectivity,
            regular_degree: self.regular,
            triangle_free: self.triangle_free,
            c4_free: self.c4_free,
            min_degree: self.min_degree,
        }
    }
}

fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad order `{t}`: {e}"))
    };
    match s.split_once('-') {
        Some((a, b)) => Ok(num(a)?..=num(b)?),
        None => num(s).map(|n| n..=n),
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn run_check(args: CheckArgs) -> ExitCode {
    let source = match (&args.input, args.stdin) {
        (Some(p), _) => Source::File(p.clone()),
        (None, true) => Source::Stdin,
        (None, false) => Source::Internal,
    };
    let orders = match (&args.orders, &source) {
        (Some(o), _) => o.clone(),
        (None, Source::Internal) => return fail("--orders is required without --input or --stdin"),
        (None, _) => 0..=usize::MAX,
    };
    let mut cfg = SearchConfig::new(args.conjecture, source, orders);
    cfg.filter = args.class.filter();
    cfg.jobs = args.jobs;
    cfg.report_path = Some(args.report);
    cfg.certs_path = Some(args.certs.clone());
    cfg.on_parse_error = args.on_parse_error;
    cfg.stable_output = args.stable_output;
    cfg.progress = args.progress;
    match run_search(&cfg) {
        Ok(out) => {
            let s = &out.report.summary;
            if s.violated > 0 {
                eprintln!(
                    "{} violation(s); certificates in {}",
                    s.violated,
                    args.certs.display()
                );
            }
            ExitCode::from(s.exit_status() as u8)
        }
        Err(e) => fail(e),
    }
}

fn run_gen(order: usize, class: &ClassArgs) -> ExitCode {
    let graphs = match enumerate_graphs(order, class.filter()) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let mut out = io::BufWriter::new(io::stdout().lock());
    for g in graphs {
        if writeln!(out, "{}", encode_graph6(&g)).is_err() {
            return ExitCode::from(1);
        }
    }
    match out.flush() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}

fn run_verify(file: PathBuf) -> ExitCode {
    let text = match fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => return fail(format!("cannot read {}: {e}", file.display())),
    };
    let mut rejected = 0;
    let mut seen = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        seen += 1;
        let verdict = serde_json::from_str::<Certificate>(line)
            .map_err(|e| format!("malformed: {e}"))
            .and_then(|c| verify_certificate(&c).map_err(|r| r.to_string()));
        match verdict {
            Ok(()) => println!("line {}: accepted", i + 1),
            Err(why) => {
                rejected += 1;
                println!("line {}: rejected ({why})", i + 1);
            }
        }
    }
    if seen == 0 {
        return fail("no certificates in file");
    }
    if rejected > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn first_graph(reader: Box<dyn BufRead>) -> Result<Graph, String> {
    match Graph6Lines::new(reader).next() {
        Some(Ok((_, g))) => Ok(g),
        Some(Err(e)) => Err(e.to_string()),
        None => Err("no graph in input".into()),
    }
}

fn run_demo(graph6: Option<String>, input: Option<PathBuf>) -> ExitCode {
    let g = match (graph6, input) {
        (Some(s), _) => parse_graph6(&s).map_err(|e| e.to_string()),
        (None, Some(p)) => fs::File::open(&p)
            .map_err(|e| format!("cannot read {}: {e}", p.display()))
            .and_then(|f| first_graph(Box::new(BufReader::new(f)))),
        (None, None) => first_graph(Box::new(BufReader::new(io::stdin()))),
    };
    let g = match g {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let v = check_theorem5(&g);
    let q = match (&v.outcome, &v.witness) {
        (Outcome::NotApplicable(gate), _) => return fail(format!("not applicable: {gate}")),
        (_, Some(q)) => q.clone(),
        (_, None) => return fail("no witness path"),
    };
    let d = g.min_degree();
    println!(
        "graph {} (n = {}, minimum degree {d})",
        encode_graph6(&g),
        g.order()
    );
    println!("longest path Q = {q:?} (length {})", q.len());
    println!(
        "internal Q-bound vertices: {:?}",
        internal_bound_vertices(&g, &q).to_vec()
    );
    println!(
        "Q-bound vertices: {:?}",
        path_bound_vertices(&g, &q).to_vec()
    );
    if d >= 2 {
        match theorem5_extract(&g, &q, true) {
            Ok(w) => {
                println!("f_set = {:?}", w.f_set());
                for r in &w.rotations {
                    println!("  w = {}, f = {}, Q' = {:?}", r.w, r.f, r.rotated);
                }
            }
            Err(e) => return fail(format!("extractor failed: {e}")),
        }
    } else {
        println!("minimum degree {d}: only the d + 1 total applies");
    }
    println!("status: {:?}", v.status());
    ExitCode::from(if matches!(v.outcome, Outcome::Violated(_)) {
        2
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Check(args) => run_check(args),
        Command::Gen { order, class } => run_gen(order, &class),
        Command::VerifyCert { file } => run_verify(file),
        Command::DemoThm5 { graph6, input } => run_demo(graph6, input),
    }
}
