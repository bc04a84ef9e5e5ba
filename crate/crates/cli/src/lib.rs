//! `quasiline` command-line front-end.
//!
//! Exit codes: 0 property holds / command succeeded, 1 property fails (a
//! witness is printed), 2 usage or input error, 3 a certificate produced by
//! this program was rejected by its own verifier.

pub mod verdict;

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use quasiline_core::forbidden::{build_pattern, find_induced, PatternId};
use quasiline_core::graph::{dot, edgelist, graph6, Graph, VertexSet};
use quasiline_core::oracle::{
    brute_find_odd_antihole, brute_two_clique_cover, enumerate_graphs, line_graph, random_graph,
    GraphStream, MAX_ANTIHOLE_N, MAX_ENUMERATE_N,
};
use quasiline_core::recognition::{
    lemma1_partition, quasi_line, quasi_line_parallel, two_clique_cover, CoverOutcome,
    QuasiLineOutcome,
};

use verdict::{
    AntiholeCertificate, Lemma1Refusal, PatternCertificate, Verdict, INDUCED_PATTERN, LEMMA1,
    QUASI_LINE, TWO_CLIQUES,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "quasiline", version, about = "Certified two-clique and quasi-line recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a property and print a certificate or witness.
    Check {
        #[command(subcommand)]
        property: CheckCommand,
    },
    /// Search for an induced copy of a pattern graph.
    Find {
        #[command(subcommand)]
        what: FindCommand,
    },
    /// Partition the graph around a non-adjacent pair (v, w).
    Lemma1 {
        #[arg(long = "v")]
        v: usize,
        #[arg(long = "w")]
        w: usize,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Re-check a stored JSON verdict.
    Verify {
        #[arg(long, value_name = "FILE")]
        certificate: String,
        /// Graph to check against; defaults to the verdict's input_echo.
        #[arg(long = "in", value_name = "FILE")]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
    /// Compare the fast algorithms with brute-force oracles.
    CrossValidate {
        #[arg(long)]
        max_n: usize,
        /// Number of additional random graphs.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        #[arg(long, default_value_t = 10)]
        size: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit a graph.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
}

#[derive(Debug, Subcommand)]
enum CheckCommand {
    TwoCliques {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    QuasiLine {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        /// Check neighbourhoods on all cores. Output is unchanged.
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Debug, Subcommand)]
enum FindCommand {
    Pattern {
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// G(n, p) from a seeded ChaCha8 stream.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Output::G6)]
        output: Output,
    },
    LineGraph {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Output::G6)]
        output: Output,
    },
    Pattern {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Output::G6)]
        output: Output,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    G6,
    Edges,
    Dot,
}

/// A failed run: exit code plus a one-line diagnostic.
struct Failure(i32, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_source(&mut self, path: &str) -> Result<Vec<u8>, Failure> {
        if path == "-" {
            let mut buf = Vec::new();
            self.stdin
                .read_to_end(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        } else {
            fs::read(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
        }
    }

    fn read_graph(&mut self, path: &str, format: Format) -> Result<Graph, Failure> {
        let bytes = self.read_source(path)?;
        parse_graph(&bytes, format).map_err(usage)
    }

    fn print(&mut self, s: &str) -> Result<(), Failure> {
        self.out
            .write_all(s.as_bytes())
            .map_err(|e| usage(format!("cannot write output: {e}")))
    }
}

fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph, String> {
    match format {
        Format::G6 => {
            let text = std::str::from_utf8(bytes).map_err(|e| format!("graph6 input: {e}"))?;
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let line = lines.next().ok_or("graph6 input: empty")?;
            if lines.next().is_some() {
                return Err("graph6 input: expected a single graph".into());
            }
            graph6::parse(line.as_bytes()).map_err(|e| e.to_string())
        }
        Format::Edges => {
            let text = std::str::from_utf8(bytes).map_err(|e| format!("edge list: {e}"))?;
            edgelist::parse(text, None).map_err(|e| e.to_string())
        }
    }
}

fn render_graph(g: &Graph, output: Output) -> String {
    match output {
        Output::G6 => format!("{}\n", graph6::encode(g)),
        Output::Edges => edgelist::encode(g),
        Output::Dot => dot::encode(g),
    }
}

fn list(s: &VertexSet) -> String {
    join(s.as_slice())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Prints `verdict` after checking it with the same verifier `verify` uses.
fn emit(io: &mut Io, g: &Graph, verdict: &Verdict, json: bool, human: String) -> Result<i32, Failure> {
    match verdict.verify(g) {
        Ok(true) => {}
        Ok(false) => {
            return Err(Failure(
                EXIT_INTERNAL,
                format!("internal error: {} certificate failed verification", verdict.property),
            ))
        }
        Err(e) => return Err(Failure(EXIT_INTERNAL, format!("internal error: {e}"))),
    }
    if json {
        let s = serde_json::to_string(verdict).expect("verdicts serialize");
        io.print(&format!("{s}\n"))?;
    } else {
        io.print(&human)?;
    }
    Ok(if verdict.holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn check_two_cliques(io: &mut Io, g: &Graph, json: bool) -> Result<i32, Failure> {
    match two_clique_cover(g) {
        CoverOutcome::Cover(c) => {
            let human = format!(
                "union of two cliques: yes\nside1: {}\nside2: {}\n",
                list(&c.side1),
                list(&c.side2)
            );
            emit(io, g, &Verdict::new(TWO_CLIQUES, true, &c, g), json, human)
        }
        CoverOutcome::Antihole(w) => {
            let human = format!(
                "union of two cliques: no\nodd antihole: {}\n",
                join(&w.cycle_order)
            );
            let cert = AntiholeCertificate { witness: w };
            emit(io, g, &Verdict::new(TWO_CLIQUES, false, &cert, g), json, human)
        }
    }
}

fn check_quasi_line(io: &mut Io, g: &Graph, json: bool, parallel: bool) -> Result<i32, Failure> {
    let out = if parallel {
        quasi_line_parallel(g)
    } else {
        quasi_line(g)
    };
    match out {
        QuasiLineOutcome::Certificate(c) => {
            let mut human = String::from("quasi-line: yes\n");
            for (v, cover) in c.per_vertex.iter().enumerate() {
                human.push_str(&format!(
                    "N({v}): {{{}}} {{{}}}\n",
                    list(&cover.side1),
                    list(&cover.side2)
                ));
            }
            emit(io, g, &Verdict::new(QUASI_LINE, true, &c, g), json, human)
        }
        QuasiLineOutcome::Obstruction(o) => {
            let human = format!(
                "quasi-line: no\napex: {}\nodd antihole in N(apex): {}\n",
                o.apex,
                join(&o.witness.cycle_order)
            );
            emit(io, g, &Verdict::new(QUASI_LINE, false, &o, g), json, human)
        }
    }
}

fn find_pattern(io: &mut Io, g: &Graph, expr: &str, json: bool) -> Result<i32, Failure> {
    let id: PatternId = expr.parse().map_err(usage)?;
    let pattern = build_pattern(&id).map_err(usage)?;
    let embedding = find_induced(g, &pattern);
    let human = match &embedding {
        Some(e) => format!("{id}: found\nembedding: {}\n", join(&e.mapping)),
        None => format!("{id}: not found\n"),
    };
    let holds = embedding.is_some();
    let cert = PatternCertificate {
        pattern: id,
        embedding,
    };
    emit(io, g, &Verdict::new(INDUCED_PATTERN, holds, &cert, g), json, human)
}

fn lemma1(io: &mut Io, g: &Graph, v: usize, w: usize, json: bool) -> Result<i32, Failure> {
    match lemma1_partition(g, v, w) {
        Ok(p) => {
            let human = format!(
                "v: {}\nw: {}\nB: {}\nC: {}\nA1: {}\nA2: {}\nA3: {}\n",
                p.v,
                p.w,
                list(&p.b),
                list(&p.c),
                list(&p.a1),
                list(&p.a2),
                list(&p.a3)
            );
            emit(io, g, &Verdict::new(LEMMA1, true, &p, g), json, human)
        }
        Err(e) => {
            let refusal = Lemma1Refusal::from_error(v, w, &e).ok_or_else(|| usage(&e))?;
            let human = format!("not applicable: {e}\n");
            emit(io, g, &Verdict::new(LEMMA1, false, &refusal, g), json, human)
        }
    }
}

fn verify(io: &mut Io, certificate: &str, input: Option<&str>, format: Format) -> Result<i32, Failure> {
    let text = fs::read_to_string(certificate)
        .map_err(|e| usage(format!("cannot read {certificate}: {e}")))?;
    let verdict: Verdict =
        serde_json::from_str(&text).map_err(|e| usage(format!("{certificate}: {e}")))?;
    let g = match input {
        Some(path) => io.read_graph(path, format)?,
        None => verdict.echoed_graph().map_err(usage)?,
    };
    match verdict.verify(&g) {
        Ok(true) => {
            io.print(&format!("verified: {} holds = {}\n", verdict.property, verdict.holds))?;
            Ok(EXIT_HOLDS)
        }
        Ok(false) => {
            io.print(&format!("rejected: {} certificate does not verify\n", verdict.property))?;
            Ok(EXIT_FAILS)
        }
        Err(e) => Err(usage(e)),
    }
}

#[derive(Default)]
struct Tally {
    graphs: usize,
    mismatches: usize,
    unsound: usize,
    /// Smallest offending edge mask, with the graph's graph6.
    smallest_bad: Option<(u128, String)>,
}

/// Edge set as a bitmask over the lexicographic pair order (bit 0 = {0,1}),
/// the same order the exhaustive enumeration counts in.
fn edge_mask(g: &Graph) -> u128 {
    let n = g.n();
    let mut mask = 0u128;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Fast verdicts against the brute-force oracles for one graph. Returns
/// (mismatch, unsound certificate).
fn cross_check(g: &Graph) -> (bool, bool) {
    let fast = two_clique_cover(g);
    let cover = brute_two_clique_cover(g).expect("size checked");
    let hole = brute_find_odd_antihole(g).expect("size checked");
    let mut mismatch = !(fast.is_cover() == cover.is_some() && cover.is_some() == hole.is_none());

    let ql = quasi_line(g);
    let first_bad = (0..g.n()).find(|&v| {
        let nb: VertexSet = g.neighbors(v).collect();
        let (h, _) = g.induced_subgraph(&nb).expect("in range");
        brute_two_clique_cover(&h).expect("size checked").is_none()
    });
    mismatch |= match (&ql, first_bad) {
        (QuasiLineOutcome::Certificate(_), None) => false,
        (QuasiLineOutcome::Obstruction(o), Some(v)) => o.apex != v,
        _ => true,
    };

    let sound = match &fast {
        CoverOutcome::Cover(c) => Verdict::new(TWO_CLIQUES, true, c, g).verify(g),
        CoverOutcome::Antihole(w) => {
            let cert = AntiholeCertificate { witness: w.clone() };
            Verdict::new(TWO_CLIQUES, false, &cert, g).verify(g)
        }
    } == Ok(true)
        && match &ql {
            QuasiLineOutcome::Certificate(c) => Verdict::new(QUASI_LINE, true, c, g).verify(g),
            QuasiLineOutcome::Obstruction(o) => Verdict::new(QUASI_LINE, false, o, g).verify(g),
        } == Ok(true);
    (mismatch, !sound)
}

fn sweep(graphs: &[Graph]) -> Tally {
    let results: Vec<(bool, bool)> = graphs.par_iter().map(cross_check).collect();
    let mut t = Tally {
        graphs: graphs.len(),
        ..Tally::default()
    };
    for (g, (mismatch, unsound)) in graphs.iter().zip(results) {
        if mismatch || unsound {
            let mask = edge_mask(g);
            if t.smallest_bad.as_ref().is_none_or(|(m, _)| mask < *m) {
                t.smallest_bad = Some((mask, graph6::encode(g)));
            }
        }
        t.mismatches += mismatch as usize;
        t.unsound += unsound as usize;
    }
    t
}

fn cross_validate(
    io: &mut Io,
    max_n: usize,
    random: Option<usize>,
    size: usize,
    p: f64,
    seed: u64,
) -> Result<i32, Failure> {
    if max_n > MAX_ENUMERATE_N {
        return Err(usage(format!("--max-n is at most {MAX_ENUMERATE_N}")));
    }
    if random.is_some() && size > MAX_ANTIHOLE_N {
        return Err(usage(format!("--size is at most {MAX_ANTIHOLE_N}")));
    }
    let mut suites = Vec::new();
    for n in 0..=max_n {
        let graphs: Vec<Graph> = enumerate_graphs(n).map_err(usage)?.collect();
        suites.push((format!("all graphs on {n} vertices"), sweep(&graphs)));
    }
    if let Some(count) = random {
        let graphs: Vec<Graph> = GraphStream::random(count, (size, size), &[p], seed)
            .map_err(usage)?
            .collect();
        suites.push((format!("{count} random graphs (n={size}, p={p}, seed={seed})"), sweep(&graphs)));
    }
    let (mut mismatches, mut unsound) = (0, 0);
    for (label, t) in &suites {
        let mut line = format!("{label}: {} graphs, {} mismatches", t.graphs, t.mismatches);
        if t.unsound > 0 {
            line.push_str(&format!(", {} unverifiable certificates", t.unsound));
        }
        if let Some((mask, g)) = &t.smallest_bad {
            line.push_str(&format!(", smallest offender mask {mask:#x} ({g})"));
        }
        io.print(&format!("{line}\n"))?;
        mismatches += t.mismatches;
        unsound += t.unsound;
    }
    Ok(if unsound > 0 {
        EXIT_INTERNAL
    } else if mismatches > 0 {
        EXIT_FAILS
    } else {
        EXIT_HOLDS
    })
}

fn gen(io: &mut Io, what: GenCommand) -> Result<i32, Failure> {
    let (g, output) = match what {
        GenCommand::Random { n, p, seed, output } => (random_graph(n, p, seed).map_err(usage)?, output),
        GenCommand::LineGraph { input, output } => {
            (line_graph(&io.read_graph(&input.input, input.format)?), output)
        }
        GenCommand::Pattern { expr, output } => {
            let id: PatternId = expr.parse().map_err(usage)?;
            (build_pattern(&id).map_err(usage)?, output)
        }
    };
    io.print(&render_graph(&g, output))?;
    Ok(EXIT_HOLDS)
}

fn dispatch(io: &mut Io, cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Check { property } => match property {
            CheckCommand::TwoCliques { input, json } => {
                let g = io.read_graph(&input.input, input.format)?;
                check_two_cliques(io, &g, json)
            }
            CheckCommand::QuasiLine {
                input,
                json,
                parallel,
            } => {
                let g = io.read_graph(&input.input, input.format)?;
                check_quasi_line(io, &g, json, parallel)
            }
        },
        Command::Find {
            what: FindCommand::Pattern { expr, input, json },
        } => {
            let g = io.read_graph(&input.input, input.format)?;
            find_pattern(io, &g, &expr, json)
        }
        Command::Lemma1 { v, w, input, json } => {
            let g = io.read_graph(&input.input, input.format)?;
            lemma1(io, &g, v, w, json)
        }
        Command::Verify {
            certificate,
            input,
            format,
        } => verify(io, &certificate, input.as_deref(), format),
        Command::CrossValidate {
            max_n,
            random,
            size,
            p,
            seed,
        } => cross_validate(io, max_n, random, size, p, seed),
        Command::Gen { what } => gen(io, what),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_HOLDS
                }
                _ => {
                    let first = rendered.lines().next().unwrap_or("usage error");
                    let _ = writeln!(stderr, "{first}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { stdin, out: stdout };
    match dispatch(&mut io, cli) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}
