use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::IteratorRandom;
use rand::Rng;

use lframes::exchange::{
    check_local_exchange, count_crossings, draw_arcs, exchange_dominates, exchange_graph_for_solutions,
};
use lframes::generate::{self, rng};
use lframes::graph::{build_intersection_graph, exact_mds, greedy_mds, is_dominating, EXACT_CAP};
use lframes::io::{emit_instance, instance_summary, parse_instance, render_exchange_svg, render_svg, RunReport};
use lframes::local_search::{approx_two_sided, local_search_mds, LocalSearchConfig, DEFAULT_K};
use lframes::permutation::mds_two_line;
use lframes::reductions::{verify_equivalence, ReductionCertificate, ReductionError, Source};
use lframes::{DominatingSet, GeomInstance, IntersectionGraph, Model, Side};

#[derive(Parser)]
#[command(name = "lframes", version, about = "Dominating sets of L-frame intersection graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random instance (and a certificate for reduction families).
    Generate(GenerateArgs),
    /// Solve minimum dominating set on an instance file.
    Solve(SolveArgs),
    /// Check a reduction certificate or the exchange-graph properties of an instance.
    Verify(VerifyArgs),
    /// Draw an instance as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    AnchoredOneSided,
    AnchoredTwoSided,
    AnchoredRects,
    CircleDiagonal,
    CircleVertical,
    Sat,
    VcEpg,
    EdsEpg,
    TwoLine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    Greedy,
    LocalSearch,
    TwoSided,
    Permutation,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Above,
    Below,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Standard,
    Edge,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Size parameter: frames, chords, variables or graph vertices.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instance file to write.
    #[arg(long)]
    out: PathBuf,
    /// Certificate path; defaults to `<out>.cert.json` for reduction families.
    #[arg(long)]
    cert: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "above")]
    side: SideArg,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "local-search")]
    algo: Algo,
    /// Swap bound for local search.
    #[arg(long, default_value_t = DEFAULT_K)]
    k: usize,
    /// Override the intersection model from the file.
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
    /// Also solve exactly and report the ratio (skipped above the exact cap).
    #[arg(long)]
    oracle: bool,
    /// Recorded in the report.
    #[arg(long)]
    seed: Option<u64>,
    /// Report wall time (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    /// Also write an SVG with the solution highlighted.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["cert", "exchange"]))]
struct VerifyArgs {
    /// Reduction certificate (JSON) to rebuild and check by exhaustive search.
    #[arg(long)]
    cert: Option<PathBuf>,
    /// Instance file the certificate should match.
    #[arg(long, requires = "cert")]
    instance: Option<PathBuf>,
    /// One-sided anchored instance whose exchange graph is checked.
    #[arg(long)]
    exchange: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_K)]
    k: usize,
    /// Seed for the random blue subsets swapped during the exchange check.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random blue subsets to swap.
    #[arg(long, default_value_t = 50)]
    subsets: usize,
    /// Write the exchange drawing as SVG.
    #[arg(long, requires = "exchange")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Highlight the solution of this algorithm.
    #[arg(long, value_enum)]
    algo: Option<Algo>,
    #[arg(long, default_value_t = DEFAULT_K)]
    k: usize,
}

enum Failure {
    Input(String),
    Verify(String, RunReport),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<RunReport, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => generate_cmd(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Render(a) => render_cmd(a),
    };
    match outcome {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(msg, report)) => {
            print!("{report}");
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_instance(path: &Path) -> Result<GeomInstance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn ids(g: &IntersectionGraph, s: &DominatingSet) -> String {
    s.labels(g).join(" ")
}

fn generate_cmd(a: GenerateArgs) -> Outcome {
    let mut r = rng(a.seed);
    let side = match a.side {
        SideArg::Above => Side::Above,
        SideArg::Below => Side::Below,
    };
    let cert = match a.family {
        Family::CircleDiagonal => Some(ReductionCertificate::circle_diagonal(&generate::chord_diagram(&mut r, a.n))),
        Family::CircleVertical => Some(ReductionCertificate::circle_vertical(&generate::chord_diagram(&mut r, a.n))),
        Family::Sat => {
            let mut attempt = 0;
            loop {
                match ReductionCertificate::monotone_sat(&generate::monotone_drawing(&mut r, a.n)) {
                    Ok(c) => break Some(c),
                    Err(ReductionError::ConstructionFailed { .. }) if attempt < 100 => attempt += 1,
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Family::VcEpg => Some(ReductionCertificate::vertex_cover(&generate::random_graph(&mut r, a.n, 0.4))),
        Family::EdsEpg => {
            let left = a.n.div_ceil(2).max(1);
            let right = (a.n / 2).max(1);
            Some(ReductionCertificate::edge_domination(&generate::random_bipartite(&mut r, left, right, 0.5)))
        }
        _ => None,
    };
    let inst = match (&cert, a.family) {
        (Some(c), _) => c.instance.clone(),
        (None, Family::AnchoredOneSided) => generate::anchored_one_sided(&mut r, a.n, side, 0),
        (None, Family::AnchoredTwoSided) => generate::anchored_two_sided(&mut r, a.n, 0),
        (None, Family::AnchoredRects) => generate::anchored_rects(&mut r, a.n, 0),
        (None, Family::TwoLine) => generate::two_line_frames(&mut r, a.n, 0, 0),
        (None, _) => unreachable!("reduction families always carry a certificate"),
    };
    write_file(&a.out, &emit_instance(&inst))?;

    let mut rep = RunReport::new();
    rep.set("command", "generate")
        .set("family", Family::name(a.family))
        .set("n", a.n)
        .set("seed", a.seed)
        .set("instance", instance_summary(&inst))
        .set("out", a.out.display());
    if let Some(c) = cert {
        let path = a.cert.unwrap_or_else(|| {
            let mut p = a.out.clone().into_os_string();
            p.push(".cert.json");
            PathBuf::from(p)
        });
        write_file(&path, &(serde_json::to_string_pretty(&c)? + "\n"))?;
        rep.set("cert", path.display()).set("offset", c.offset);
    }
    Ok(rep)
}

impl Family {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

impl Algo {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

fn run_algo(
    inst: &GeomInstance,
    g: &IntersectionGraph,
    algo: Algo,
    k: usize,
    rep: &mut RunReport,
) -> Result<DominatingSet, Failure> {
    Ok(match algo {
        Algo::Exact => exact_mds(g)?,
        Algo::Greedy => greedy_mds(g),
        Algo::LocalSearch => {
            rep.set("k", k);
            local_search_mds(g, &LocalSearchConfig { k, ..Default::default() })?
        }
        Algo::TwoSided => {
            rep.set("k", k);
            let t = approx_two_sided(inst, k)?;
            rep.set("above_frames", t.above.len())
                .set("below_frames", t.below.len())
                .set("above_size", t.above_solution.len())
                .set("below_size", t.below_solution.len());
            t.solution
        }
        Algo::Permutation => mds_two_line(inst)?,
    })
}

fn solve_cmd(a: SolveArgs) -> Outcome {
    let mut inst = read_instance(&a.input)?;
    if let Some(m) = a.model {
        inst.model = match m {
            ModelArg::Standard => Model::Standard,
            ModelArg::Edge => Model::Edge,
        };
        inst.validate()?;
    }
    let mut rep = RunReport::new();
    rep.set("command", "solve").set("instance", instance_summary(&inst)).set("algorithm", a.algo.name());
    if let Some(s) = a.seed {
        rep.set("seed", s);
    }
    let start = Instant::now();
    let g = build_intersection_graph(&inst);
    let sol = run_algo(&inst, &g, a.algo, a.k, &mut rep)?;
    let elapsed = start.elapsed();
    let ok = is_dominating(&g, sol.members());
    rep.set("edges", g.edge_count()).set("size", sol.len()).set("solution", ids(&g, &sol)).set("dominating", ok);
    if a.oracle {
        if g.n() <= EXACT_CAP {
            let opt = exact_mds(&g)?;
            let ratio = if opt.is_empty() { 1.0 } else { sol.len() as f64 / opt.len() as f64 };
            rep.set("oracle_optimum", opt.len()).set("oracle_ratio", format!("{ratio:.4}"));
        } else {
            rep.set("oracle", format!("skipped, {} vertices exceed the cap of {EXACT_CAP}", g.n()));
        }
    }
    if a.timing {
        rep.set("wall_ms", format!("{:.3}", elapsed.as_secs_f64() * 1e3));
    }
    if let Some(p) = &a.svg {
        write_file(p, &render_svg(&inst, Some(&sol), None))?;
        rep.set("svg", p.display());
    }
    if !ok {
        return Err(Failure::Verify("solution is not dominating".into(), rep));
    }
    Ok(rep)
}

fn verify_cmd(a: VerifyArgs) -> Outcome {
    match (&a.cert, &a.exchange) {
        (Some(c), _) => verify_cert(c, a.instance.as_deref()),
        (None, Some(e)) => verify_exchange(e, &a),
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

fn source_kind(s: &Source) -> &'static str {
    match s {
        Source::CircleDiagonal(_) => "circle-diagonal",
        Source::CircleVertical(_) => "circle-vertical",
        Source::MonotoneSat { .. } => "sat",
        Source::VertexCover { .. } => "vc-epg",
        Source::EdgeDomination(_) => "eds-epg",
    }
}

fn verify_cert(path: &Path, instance: Option<&Path>) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let cert: ReductionCertificate =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut rep = RunReport::new();
    rep.set("command", "verify")
        .set("source", source_kind(&cert.source))
        .set("instance", instance_summary(&cert.instance));
    let rebuilt = match cert.rebuild() {
        Ok(r) => r,
        Err(e @ ReductionError::ConstructionFailed { .. }) => return Err(Failure::Verify(e.to_string(), rep)),
        Err(e) => return Err(e.into()),
    };
    let matches = rebuilt == cert;
    rep.set("rebuild_matches", matches);
    if let Some(p) = instance {
        let file = read_instance(p)?;
        let same = file == cert.instance;
        rep.set("instance_matches", same);
        if !same {
            return Err(Failure::Verify(format!("{} differs from the certificate", p.display()), rep));
        }
    }
    if !matches {
        return Err(Failure::Verify("certificate does not match its source".into(), rep));
    }
    let r = verify_equivalence(&cert)?;
    rep.set("source_optimum", r.source_optimum)
        .set("reduced_optimum", r.reduced_optimum)
        .set("offset", r.offset)
        .set("maps_ok", r.maps_ok)
        .set("holds", r.holds);
    if let Source::MonotoneSat { .. } = cert.source {
        rep.set("satisfiable", r.source_optimum == 0);
    }
    if !(r.holds && r.maps_ok) {
        return Err(Failure::Verify("reduction equivalence does not hold".into(), rep));
    }
    Ok(rep)
}

fn verify_exchange(path: &Path, a: &VerifyArgs) -> Outcome {
    let inst = read_instance(path)?.rects_to_frames()?;
    let g = build_intersection_graph(&inst);
    let blue = local_search_mds(&g, &LocalSearchConfig { k: a.k, ..Default::default() })?;
    let red = exact_mds(&g)?;
    let h = exchange_graph_for_solutions(&inst, &g, blue.members(), red.members())?;
    let drawing = draw_arcs(&h, &inst)?;
    let crossings = count_crossings(&drawing);
    let local = check_local_exchange(&h, &g);

    let mut r = rng(a.seed);
    let mut swaps_ok = 0;
    for _ in 0..a.subsets {
        let size = r.gen_range(0..=h.blue.len());
        let subset: Vec<usize> = h.blue.iter().copied().choose_multiple(&mut r, size);
        if exchange_dominates(&h, &g, &subset) {
            swaps_ok += 1;
        }
    }

    let v = h.vertex_count();
    let bound_ok = v < 3 || h.arcs.len() <= h.planar_edge_bound();
    let mut rep = RunReport::new();
    rep.set("command", "verify")
        .set("instance", instance_summary(&inst))
        .set("k", a.k)
        .set("seed", a.seed)
        .set("local_size", blue.len())
        .set("optimum", red.len())
        .set("blue", h.blue.len())
        .set("red", h.red.len())
        .set("common", h.common.len())
        .set("arcs", h.arcs.len())
        .set("edge_bound", h.planar_edge_bound())
        .set("crossings", crossings)
        .set("local_exchange", local)
        .set("swaps_dominating", format!("{swaps_ok}/{}", a.subsets));
    if let Some(p) = &a.svg {
        write_file(p, &render_exchange_svg(&inst, &h, &drawing))?;
        rep.set("svg", p.display());
    }
    let mut problems = Vec::new();
    if crossings > 0 {
        problems.push("arc drawing has crossings");
    }
    if !bound_ok {
        problems.push("more arcs than a planar bipartite graph allows");
    }
    if !local || swaps_ok != a.subsets {
        problems.push("local exchange property fails");
    }
    if problems.is_empty() {
        Ok(rep)
    } else {
        Err(Failure::Verify(problems.join("; "), rep))
    }
}

fn render_cmd(a: RenderArgs) -> Outcome {
    let inst = read_instance(&a.input)?;
    let mut rep = RunReport::new();
    rep.set("command", "render").set("instance", instance_summary(&inst));
    let sol = match a.algo {
        Some(algo) => {
            let g = build_intersection_graph(&inst);
            rep.set("algorithm", algo.name());
            let s = run_algo(&inst, &g, algo, a.k, &mut rep)?;
            rep.set("size", s.len()).set("solution", ids(&g, &s));
            Some(s)
        }
        None => None,
    };
    let svg = render_svg(&inst, sol.as_ref(), None);
    write_file(&a.out, &svg)?;
    rep.set("out", a.out.display()).set("bytes", svg.len());
    Ok(rep)
}
