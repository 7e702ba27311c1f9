use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kr_paths::bbs::{evolution_table, soliton_tau, Algorithm};
use kr_paths::crystal::{all_paths, combinatorial_r, highest_paths, paths_of_weight, RectTableau, TensorPath};
use kr_paths::polynomials::{
    kostka_foulkes, kostka_macdonald, kostka_macdonald_table, kostka_number, modified_macdonald, parabolic_kostka,
    RectangleSequence,
};
use kr_paths::statistics as st;
use kr_paths::tableaux::{gt_from_ssyt, parse_rows, plane_partition_from_pair, rsk, TransportationMatrix};
use kr_paths::verify::{self as vf, VerificationReport, Verdict};
use kr_paths::{Composition, Partition, QPoly, Ssyt};

#[derive(Parser)]
#[command(name = "krpaths", version, about = "Crystal paths, energy statistics, box-ball dynamics and Kostka-type polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply the combinatorial R-matrix to a pair of rectangular tableaux.
    Rmatrix {
        #[arg(long, value_parser = tableau)]
        left: RectTableau,
        #[arg(long, value_parser = tableau)]
        right: RectTableau,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate a statistic on a path.
    Stat {
        #[arg(long, value_enum)]
        name: StatName,
        #[arg(long, value_parser = path)]
        path: TensorPath,
        /// Block lengths for tau_mu, c_mu, inv_mu and maj_mu.
        #[arg(long, value_parser = composition)]
        mu: Option<Composition>,
        /// Carrier height for tau_rs.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: Option<u32>,
        /// Carrier width for tau_rs.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Box-ball system.
    Bbs {
        #[command(subcommand)]
        cmd: BbsCmd,
    },
    /// Kostka numbers and Kostka-type polynomials.
    Kostka {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        /// Content (a composition) or, with --foulkes/--macdonald, a partition.
        #[arg(long, value_parser = composition, required_unless_present = "parabolic")]
        mu: Option<Composition>,
        /// Kostka-Foulkes polynomial K_{λμ}(q).
        #[arg(long, conflicts_with_all = ["macdonald", "parabolic"])]
        foulkes: bool,
        /// Modified Kostka-Macdonald polynomial K̃_{λμ}(q,t).
        #[arg(long, conflicts_with = "parabolic")]
        macdonald: bool,
        /// Parabolic Kostka polynomial K_{λ,R}(q) for a rectangle sequence R.
        #[arg(long, value_parser = rects, value_name = "R")]
        parabolic: Option<RectangleSequence>,
        #[command(flatten)]
        out: Output,
    },
    /// Modified Macdonald polynomial H̃_μ.
    Macdonald {
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Basis::Schur)]
        basis: Basis,
        #[command(flatten)]
        out: Output,
    },
    /// Generating function of a statistic over paths.
    Gf {
        /// Factor shapes as RxS tokens.
        #[arg(long, value_parser = rects)]
        shapes: RectangleSequence,
        #[arg(long, value_parser = composition)]
        weight: Composition,
        #[arg(long, value_enum, default_value_t = GfStat::Ebar)]
        stat: GfStat,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: Option<u32>,
        /// Restrict to highest paths.
        #[arg(long)]
        highest: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run identity checks.
    Verify {
        #[command(subcommand)]
        check: Check,
        /// Worker threads; defaults to KRPATHS_JOBS or the number of CPUs.
        #[arg(long, env = "KRPATHS_JOBS", global = true)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// RSK correspondence of a nonnegative integer matrix.
    Rsk {
        #[arg(long, value_parser = matrix)]
        matrix: TransportationMatrix,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum BbsCmd {
    /// Time evolution table.
    Evolve {
        #[arg(long, value_parser = path)]
        path: TensorPath,
        /// Number of rows, the initial state included.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, value_enum, default_value_t = Alg::Carrier)]
        alg: Alg,
        #[command(flatten)]
        out: Output,
    },
    /// Total number of balls over L time steps.
    Tau {
        #[arg(long, value_parser = path)]
        path: TensorPath,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Block maj generating function against Σ K_{ηα} K̃_{ημ}(q,1).
    ThmMain(GridArgs),
    /// Block τ generating function against the same Schur expansion.
    ConjMain(GridArgs),
    /// Highest-path HHL sums against K̃_{λμ}(q,t).
    HhlKostka {
        #[arg(long, value_parser = partition, requires = "mu")]
        lambda: Option<Partition>,
        #[arg(long, value_parser = partition, requires = "lambda")]
        mu: Option<Partition>,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Only μ with μ_1 ≤ 2.
        #[arg(long)]
        narrow: bool,
    },
    /// τ^{r,s} generating functions against parabolic Kostka polynomials.
    ConjTau {
        #[arg(long, value_parser = rects)]
        rects: RectangleSequence,
        #[arg(long, value_parser = composition)]
        weight: Composition,
        /// A value `a` or an inclusive range `a..b`.
        #[arg(long, value_parser = range, default_value = "1")]
        r: Span,
        #[arg(long, value_parser = range, default_value = "2")]
        s: Span,
    },
    /// Σ q^{Ē} over paths of a weight against Σ K_{ηλ} K_{η,R}(q).
    ConjEbar {
        #[arg(long, value_parser = rects)]
        rects: RectangleSequence,
        /// Every composition of |R| when omitted.
        #[arg(long, value_parser = composition)]
        weight: Option<Composition>,
    },
    /// Ē = C − τ^{r,s} on every path of the given shapes.
    ETau {
        #[arg(long, value_parser = rects)]
        shapes: RectangleSequence,
        #[arg(long, default_value_t = 3)]
        alphabet: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// τ(reg p) − τ(p) is constant on paths of a weight.
    Regularization {
        #[arg(long, value_parser = composition)]
        weight: Option<Composition>,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
    /// K_{λ,R}(q) = q^{n(R)} K_{λ',R'}(q^{-1}).
    Duality {
        #[arg(long, value_parser = rects)]
        rects: RectangleSequence,
        /// Every partition of |R| when omitted.
        #[arg(long, value_parser = partition)]
        lambda: Option<Partition>,
    },
    /// Σ_η K_{η,R1}(1) K_{η,R2}(q) against K_{Λ,(κ,R2)}(q^{-1}).
    Genmainth {
        #[arg(long, value_parser = rects)]
        r1: RectangleSequence,
        #[arg(long, value_parser = rects)]
        r2: RectangleSequence,
    },
    /// Σ_η K_{ημ} K_{ηλ}(q) against K_{Λ,(κ,λ)}(q^{-1}).
    CorRows {
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        lambda: Partition,
    },
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, value_parser = composition, requires = "mu")]
    alpha: Option<Composition>,
    #[arg(long, value_parser = partition, requires = "alpha")]
    mu: Option<Partition>,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum StatName {
    Charge,
    Cocharge,
    Maj,
    Ebar,
    Tau,
    TauMu,
    TauRs,
    CMu,
    InvMu,
    MajMu,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Carrier,
    Ts,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Schur,
    Monomial,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum GfStat {
    Ebar,
    Maj,
    TauRs,
}

// Literal parsers. Errors name the offending token; clap turns them into
// usage errors.

fn tableau(s: &str) -> Result<RectTableau, String> {
    RectTableau::parse(s).map_err(|e| format!("bad tableau '{s}': {e}"))
}

fn path(s: &str) -> Result<TensorPath, String> {
    TensorPath::parse(s).map_err(|e| format!("bad path '{s}': {e}"))
}

fn numbers(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad integer '{t}' in '{s}'")))
        .collect()
}

fn partition(s: &str) -> Result<Partition, String> {
    Partition::new(numbers(s)?).map_err(|_| format!("'{s}' is not a partition"))
}

fn composition(s: &str) -> Result<Composition, String> {
    Ok(Composition::new(numbers(s)?))
}

fn rects(s: &str) -> Result<RectangleSequence, String> {
    RectangleSequence::parse(s).map_err(|e| format!("bad rectangle sequence '{s}': {e}"))
}

#[derive(Clone)]
struct Span(Vec<usize>);

fn range(s: &str) -> Result<Span, String> {
    let bad = || format!("bad range '{s}'");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
            if a == 0 || a > b {
                return Err(bad());
            }
            Ok(Span((a..=b).collect()))
        }
        None => match s.parse::<usize>() {
            Ok(a) if a > 0 => Ok(Span(vec![a])),
            _ => Err(bad()),
        },
    }
}

fn matrix(s: &str) -> Result<TransportationMatrix, String> {
    let rows = parse_rows(s).map_err(|e| format!("bad matrix '{s}': {e}"))?;
    let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.into_iter().map(|x| x as usize).collect()).collect();
    TransportationMatrix::new(rows).map_err(|e| format!("bad matrix '{s}': {e}"))
}

// Rendering.

struct Rendered {
    text: String,
    json: Value,
}

fn rows_json(rows: &[Vec<u32>]) -> Value {
    json!(rows)
}

fn path_json(p: &TensorPath) -> Value {
    match p.as_word() {
        Some(w) => json!(w),
        None => Value::Array(p.factors().iter().map(|b| rows_json(b.rows())).collect()),
    }
}

fn poly_out(p: &QPoly) -> Rendered {
    Rendered { text: p.to_string(), json: p.to_json() }
}

fn reports_out(reports: &[VerificationReport]) -> Rendered {
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let (pass, shifted, fail) = (count(Verdict::Pass), count(Verdict::PassAfterShift), count(Verdict::Fail));
    let mut text = String::new();
    if reports.len() == 1 {
        text.push_str(&reports[0].to_string());
        text.push('\n');
    } else {
        for r in reports {
            text.push_str(&r.summary_line());
            text.push('\n');
        }
    }
    text.push_str(&format!("{} checks: {pass} PASS, {shifted} PASS after shift, {fail} FAIL", reports.len()));
    Rendered {
        text,
        json: json!({
            "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
            "summary": {"pass": pass, "pass_after_shift": shifted, "fail": fail, "total": reports.len()},
        }),
    }
}

fn emit(r: Rendered, out: &Output) -> Result<(), String> {
    let mut s = match out.format {
        Format::Text => r.text,
        Format::Json => serde_json::to_string_pretty(&r.json).expect("json value serializes"),
    };
    if !s.ends_with('\n') {
        s.push('\n');
    }
    match &out.out {
        Some(f) => fs::write(f, s).map_err(|e| format!("cannot write {}: {e}", f.display())),
        None => std::io::stdout().write_all(s.as_bytes()).map_err(|e| e.to_string()),
    }
}

type Res<T> = Result<T, String>;

fn err(e: kr_paths::Error) -> String {
    e.to_string()
}

fn word_of(p: &TensorPath) -> Res<Vec<u32>> {
    p.as_word().ok_or_else(|| format!("{p} has a factor other than a single box"))
}

fn need<T>(x: Option<T>, flag: &str) -> Res<T> {
    x.ok_or_else(|| format!("this statistic needs {flag}"))
}

fn stat_value(name: StatName, p: &TensorPath, mu: Option<Composition>, r: Option<u32>, s: Option<u32>) -> Res<usize> {
    let part = |mu: Option<Composition>| -> Res<Partition> {
        need(mu, "--mu")?.as_partition().ok_or_else(|| "--mu must be a partition".to_string())
    };
    Ok(match name {
        StatName::Charge => st::charge(&word_of(p)?).map_err(err)?,
        StatName::Cocharge => st::cocharge(&word_of(p)?).map_err(err)?,
        StatName::Maj => st::maj(p),
        StatName::Ebar => st::ebar(p),
        StatName::Tau => st::tau(p).map_err(err)?,
        StatName::TauMu => st::tau_mu(&word_of(p)?, &need(mu, "--mu")?).map_err(err)?,
        StatName::TauRs => st::tau_rs(p, need(r, "--r")? as usize, need(s, "--s")? as usize),
        StatName::CMu => st::c_mu(&word_of(p)?, &need(mu, "--mu")?).map_err(err)?,
        StatName::InvMu => st::inv_mu(&word_of(p)?, &part(mu)?).map_err(err)?,
        StatName::MajMu => st::maj_mu(&word_of(p)?, &part(mu)?).map_err(err)?,
    })
}

fn grid<F>(g: &GridArgs, check: F) -> Res<Vec<VerificationReport>>
where
    F: Fn(&Composition, &Partition) -> kr_paths::Result<VerificationReport> + Sync,
{
    use rayon::prelude::*;
    match (&g.alpha, &g.mu) {
        (Some(a), Some(m)) => Ok(vec![check(a, m).map_err(err)?]),
        _ => vf::alpha_mu_grid(g.max_size).par_iter().map(|(a, m)| check(a, m)).collect::<kr_paths::Result<_>>().map_err(err),
    }
}

fn run_check(check: Check) -> Res<Vec<VerificationReport>> {
    Ok(match check {
        Check::ThmMain(g) => grid(&g, vf::check_theorem_main)?,
        Check::ConjMain(g) => grid(&g, vf::check_conjecture_main)?,
        Check::HhlKostka { lambda: Some(l), mu: Some(m), .. } => vec![vf::check_hhl_kostka(&l, &m).map_err(err)?],
        Check::HhlKostka { max_size, narrow, .. } => vf::sweep_hhl_kostka(max_size, narrow).map_err(err)?,
        Check::ConjTau { rects, weight, r, s } => {
            let mut v = Vec::new();
            for &r in &r.0 {
                for &s in &s.0 {
                    v.push(vf::check_conj_tau(&rects, &weight, r, s).map_err(err)?);
                }
            }
            v
        }
        Check::ConjEbar { rects, weight: Some(w) } => vec![vf::check_conj_ebar(&rects, &w).map_err(err)?],
        Check::ConjEbar { rects, weight: None } => vf::sweep_conj_ebar(&rects).map_err(err)?,
        Check::ETau { shapes, alphabet, r, s } => {
            let paths = all_paths(shapes.rects(), alphabet);
            vec![vf::check_e_tau(&paths, r, s).map_err(err)?]
        }
        Check::Regularization { weight: Some(w), .. } => vec![vf::check_regularization(&w).map_err(err)?],
        Check::Regularization { max_size, .. } => vf::sweep_regularization(max_size).map_err(err)?,
        Check::Duality { rects, lambda: Some(l) } => vec![vf::check_duality(&l, &rects).map_err(err)?],
        Check::Duality { rects, lambda: None } => Partition::all(rects.size())
            .iter()
            .map(|l| vf::check_duality(l, &rects))
            .collect::<kr_paths::Result<_>>()
            .map_err(err)?,
        Check::Genmainth { r1, r2 } => vec![vf::check_conj_genmainth(&r1, &r2).map_err(err)?],
        Check::CorRows { mu, lambda } => vec![vf::check_cor_rows(&mu, &lambda).map_err(err)?],
    })
}

fn ssyt_json(t: &Ssyt) -> Value {
    json!(t.rows())
}

fn run(cmd: Cmd) -> Res<()> {
    match cmd {
        Cmd::Rmatrix { left, right, out } => {
            let img = combinatorial_r(&left, &right);
            let hbar = kr_paths::crystal::energy_hbar(&left, &right);
            let r = Rendered {
                text: format!("{} ⊗ {}\nH = {}", img.left, img.right, img.h),
                json: json!({
                    "left": rows_json(img.left.rows()),
                    "right": rows_json(img.right.rows()),
                    "h": img.h,
                    "hbar": hbar,
                }),
            };
            emit(r, &out)
        }
        Cmd::Stat { name, path, mu, r, s, out } => {
            let v = stat_value(name, &path, mu, r, s)?;
            let label = name.to_possible_value().expect("named").get_name().to_string();
            emit(Rendered { text: v.to_string(), json: json!({"stat": label, "path": path_json(&path), "value": v}) }, &out)
        }
        Cmd::Bbs { cmd: BbsCmd::Evolve { path, steps, alg, out } } => {
            let alg = match alg {
                Alg::Carrier => Algorithm::Carrier,
                Alg::Ts => Algorithm::BallMoving,
            };
            let t = evolution_table(&path, steps as usize - 1, alg).map_err(err)?;
            let rows: Vec<Value> = t.rows.iter().map(path_json).collect();
            emit(Rendered { text: t.to_string(), json: json!({"rows": rows}) }, &out)
        }
        Cmd::Bbs { cmd: BbsCmd::Tau { path, out } } => {
            let v = soliton_tau(&word_of(&path)?);
            emit(Rendered { text: v.to_string(), json: json!({"path": path_json(&path), "tau": v}) }, &out)
        }
        Cmd::Kostka { lambda, mu, foulkes, macdonald, parabolic, out } => {
            let as_part = |mu: Option<Composition>| -> Res<Partition> {
                need(mu, "--mu")?.as_partition().ok_or_else(|| "--mu must be a partition".to_string())
            };
            let r = if let Some(rs) = parabolic {
                poly_out(&parabolic_kostka(&lambda, &rs).map_err(err)?)
            } else if foulkes {
                poly_out(&kostka_foulkes(&lambda, &as_part(mu)?).map_err(err)?)
            } else if macdonald {
                let p = kostka_macdonald(&lambda, &as_part(mu)?).map_err(err)?;
                Rendered { text: p.to_string(), json: p.to_json() }
            } else {
                let k = kostka_number(&lambda, &need(mu, "--mu")?).map_err(err)?;
                Rendered { text: k.to_string(), json: json!(k) }
            };
            emit(r, &out)
        }
        Cmd::Macdonald { mu, basis, out } => {
            let mut text = Vec::new();
            let mut obj = serde_json::Map::new();
            match basis {
                Basis::Schur => {
                    for (lam, p) in kostka_macdonald_table(&mu).map_err(err)?.iter().rev() {
                        text.push(format!("s{lam}: {p}"));
                        obj.insert(lam.to_string(), p.to_json());
                    }
                }
                Basis::Monomial => {
                    let coeffs = modified_macdonald(&mu, mu.size()).map_err(err)?;
                    for lam in Partition::all(mu.size()) {
                        let mut c = lam.parts().to_vec();
                        c.resize(mu.size(), 0);
                        let p = &coeffs[&Composition::new(c)];
                        text.push(format!("m{lam}: {p}"));
                        obj.insert(lam.to_string(), p.to_json());
                    }
                }
            }
            emit(Rendered { text: text.join("\n"), json: Value::Object(obj) }, &out)
        }
        Cmd::Gf { shapes, weight, stat, r, s, highest, out } => {
            let paths = if highest {
                highest_paths(shapes.rects(), &weight)
            } else {
                paths_of_weight(shapes.rects(), &weight)
            };
            let (r, s) = match stat {
                GfStat::TauRs => (need(r, "--r")? as usize, need(s, "--s")? as usize),
                _ => (0, 0),
            };
            let p = QPoly::from_exponents(paths.iter().map(|p| {
                (match stat {
                    GfStat::Ebar => st::ebar(p),
                    GfStat::Maj => st::maj(p),
                    GfStat::TauRs => st::tau_rs(p, r, s),
                }) as i64
            }));
            emit(
                Rendered {
                    text: format!("{p}\n{} paths", paths.len()),
                    json: json!({"paths": paths.len(), "poly": p.to_json()}),
                },
                &out,
            )
        }
        Cmd::Verify { check, jobs, out } => {
            if let Some(n) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
            }
            let reports = run_check(check)?;
            emit(reports_out(&reports), &out)
        }
        Cmd::Rsk { matrix, out } => {
            let (p, q) = rsk(&matrix);
            let mut text = vec![format!("P = {p}"), format!("Q = {q}"), format!("shape = {}", p.shape())];
            let mut j = json!({"p": ssyt_json(&p), "q": ssyt_json(&q), "shape": p.shape().parts()});
            if p.size() > 0 {
                let n = (p.max_letter().max(q.max_letter()) as usize).max(p.rows().len());
                let gp = gt_from_ssyt(&p, n).map_err(err)?;
                let gq = gt_from_ssyt(&q, n).map_err(err)?;
                let pp = plane_partition_from_pair(&p, &q).map_err(err)?;
                text.push(format!("GT(P) = {gp}"));
                text.push(format!("GT(Q) = {gq}"));
                text.push(format!("plane partition = {pp}"));
                j["plane_partition"] = json!(pp.trimmed());
            }
            emit(Rendered { text: text.join("\n"), json: j }, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
