//! The `turan` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{self, InequalityReport, MeasureKind};
use crate::detect::{self, CopyWitness, Engine, ForbiddenSpec, NodeBudget};
use crate::error::{Error, Result};
use crate::hstruct::{self, BasePattern};
use crate::regularity::{self, Alpha};
use crate::setfam::numeric::pow;
use crate::setfam::{closure, parse_fam, rat, render_fam, uniform_measure, Direction, GeneralFamily, Rational, UniformFamily, VertexSet};
use crate::solver::{self, Bound, SolveOptions, StarKind, TheoremCase, Verdict};

#[derive(Parser, Debug)]
#[command(name = "turan", version, about = "Exact computations for Turán problems on expanded hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Fast,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Fast => Engine::Fast,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundArg {
    Simple,
    Blocked,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    Lovasz,
    Levels,
    Upward,
    CrossMatching,
    Average,
    Coupling,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    TStar,
    Porcupine,
    Chvatal,
    CrossMatching,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BuildKind {
    Tt,
    T1,
    Ts,
    Ak,
    OneCross,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact ex(n, spec) over k-uniform families by branch and bound
    Solve {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        all_optima: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = BoundArg::Simple)]
        bound: BoundArg,
        /// Fix the first candidate (maximum only)
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Least copy of an expansion (or a simplex) in a family
    Detect {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        forbid: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        /// Look for a rainbow copy in the shadow instead
        #[arg(long)]
        rainbow: bool,
        #[arg(long)]
        expect_free: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Copy with edge i drawn from the i-th family
    CrossDetect {
        #[arg(long = "family", required = true)]
        families: Vec<PathBuf>,
        #[arg(long)]
        forbid: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        #[arg(long)]
        expect_free: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Junta approximation by capture and recursion
    Junta {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        r: u32,
        /// A rational, or `auto` for (k/n)^r
        #[arg(long, default_value = "auto")]
        eps: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Conditions (*) and (**) for a base pattern at uniformity k
    Conditions {
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Fairness of one set, or the fair fraction of all s-sets
    Fairness {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        delta: String,
        /// Comma-separated vertices of S
        #[arg(long, conflicts_with = "s")]
        set: Option<String>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Quasiregularity check, or the slicing descent
    Quasireg {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 1)]
        l: u32,
        /// A rational or `sqrt(x)`; defaults to sqrt(n/k)
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        descent: bool,
        /// r for the descent
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// |F| against k^t |shadow^t F| for an expansion-free family
    Shadow {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        forbid: String,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Shadow and measure inequalities
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[arg(long = "family", required = true)]
        families: Vec<PathBuf>,
        /// Read each family as generators of its up-closure
        #[arg(long)]
        up: bool,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Biases, comma-separated for cross-matching; one value for coupling
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Desk-scale instance of an extremal theorem
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        forbid: Option<String>,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a star-type construction as a .fam file
    Build {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        kind: BuildKind,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// T for one-cross, comma-separated
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Wraps the pattern grammar; `simplex(d)` selects the simplex predicate.
pub fn parse_spec(text: &str) -> Result<ForbiddenSpec> {
    if text.trim().is_empty() {
        return Err(Error::Argument("empty forbidden configuration".into()));
    }
    ForbiddenSpec::parse(text)
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::Parse { .. } | Error::Load { .. } | Error::Io(_) => 2,
        Error::Precondition(_) | Error::Invariant(_) => 1,
        Error::ResourceExhausted(_) => 3,
    }
}

/// Runs one command line (program name first) against stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut text = String::new();
    let result = dispatch(cli.command, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(path: &Path) -> Result<UniformFamily> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_fam(&text).map_err(|e| match e {
        Error::Load { line, msg } => Error::Load { line, msg: format!("{}: {msg}", path.display()) },
        other => other,
    })
}

fn rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim()).map_err(|_| Error::Argument(format!("`{text}` is not a rational such as 3/8")))
}

fn vertex_list(text: &str) -> Result<VertexSet> {
    let nums = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Argument(format!("`{t}` is not a vertex"))))
        .collect::<Result<Vec<u32>>>()?;
    VertexSet::try_from_iter(nums)
}

fn expansion_only(spec: ForbiddenSpec) -> Result<BasePattern> {
    match spec {
        ForbiddenSpec::Expansion(h) => Ok(h),
        ForbiddenSpec::Simplex(_) => Err(Error::Argument("this command needs a base pattern, not simplex(d)".into())),
    }
}

fn sets_json(sets: &[VertexSet]) -> Vec<Vec<u32>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn sets_text(sets: &[VertexSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes JSON to the path (`-` is stdout) when one was given.
fn emit(json_path: &Option<PathBuf>, value: &impl Serialize, text: &mut String) -> Result<bool> {
    let Some(path) = json_path else { return Ok(false) };
    let body = serde_json::to_string(value).expect("report serializes");
    if path.as_os_str() == "-" {
        let _ = writeln!(text, "{body}");
    } else {
        std::fs::write(path, body + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(true)
}

fn report_json(r: &InequalityReport) -> serde_json::Value {
    json!({
        "kind": r.kind,
        "left": r.left.to_string(),
        "right": r.right.to_string(),
        "holds": r.holds,
        "asserted": r.asserted,
        "slack": r.slack.to_string(),
        "ratio": r.ratio.as_ref().map(|x| x.to_string()),
    })
}

fn copy_text(w: &CopyWitness) -> String {
    let map: Vec<String> = w.center_map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    format!("copy: {}\ncenter map: {}\n", sets_text(&w.sets), if map.is_empty() { "-".into() } else { map.join(", ") })
}

fn dispatch(cmd: Command, text: &mut String) -> Result<i32> {
    match cmd {
        Command::Solve { n, k, forbid, all_optima, threads, bound, symmetry, json, timing } => {
            let spec = parse_spec(&forbid)?;
            let opts = SolveOptions {
                all_optima,
                threads,
                symmetry,
                bound: match bound {
                    BoundArg::Simple => Bound::Simple,
                    BoundArg::Blocked => Bound::Blocked,
                },
                ..SolveOptions::default()
            };
            let r = solver::ex_max(n, k, &spec, &opts)?;
            match &json {
                Some(p) if p.as_os_str() == "-" => {
                    let _ = writeln!(text, "{}", r.to_json(timing));
                }
                Some(p) => std::fs::write(p, r.to_json(timing) + "\n").map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                None => {
                    let _ = writeln!(text, "Turán number ex({n}, {}) at k = {k}: max_size {}", spec.render(), r.max_size);
                    let _ = writeln!(text, "optima: {} ({} listed)", r.classification, r.witnesses.len());
                    for w in &r.witnesses {
                        let _ = writeln!(text, "  {}", sets_text(w.sets()));
                    }
                    let _ = writeln!(text, "nodes: {}", r.nodes);
                    if timing {
                        let _ = writeln!(text, "ms: {}", r.elapsed.as_millis());
                    }
                }
            }
            Ok(0)
        }
        Command::Detect { family, forbid, engine, rainbow, expect_free, json } => {
            let f = load(&family)?;
            let spec = parse_spec(&forbid)?;
            let engine = Engine::from(engine);
            let found = if rainbow {
                let h = expansion_only(spec)?;
                let w = detect::rainbow_in_shadow(&f, &h, engine)?;
                if !emit(&json, &json!({"rainbow": w.as_ref().map(|w| json!({"copy": sets_json(&w.copy.sets), "colors": w.colors}))}), text)? {
                    match &w {
                        None => text.push_str("rainbow copy in the shadow: none\n"),
                        Some(w) => {
                            let _ = write!(text, "rainbow copy in the shadow\n{}colors: {:?}\n", copy_text(&w.copy), w.colors);
                        }
                    }
                }
                w.is_some()
            } else {
                let mut budget = NodeBudget::from_env_or(u64::MAX)?;
                let copy = match &spec {
                    ForbiddenSpec::Expansion(h) => detect::contains_expansion_within(&f, h, engine, &mut budget)?,
                    ForbiddenSpec::Simplex(_) => spec
                        .find(&f, engine, &mut budget)?
                        .map(|sets| CopyWitness { sets, center_map: Vec::new() }),
                };
                if !emit(&json, &json!({"spec": spec.render(), "copy": copy.as_ref().map(|w| sets_json(&w.sets))}), text)? {
                    match &copy {
                        None => text.push_str("none\n"),
                        Some(w) if matches!(spec, ForbiddenSpec::Simplex(_)) => {
                            let _ = writeln!(text, "simplex: {}", sets_text(&w.sets));
                        }
                        Some(w) => text.push_str(&copy_text(w)),
                    }
                }
                copy.is_some()
            };
            Ok(if found && expect_free { 1 } else { 0 })
        }
        Command::CrossDetect { families, forbid, engine, expect_free, json } => {
            let fs = families.iter().map(|p| load(p)).collect::<Result<Vec<_>>>()?;
            let h = expansion_only(parse_spec(&forbid)?)?;
            if fs.len() != h.h() {
                return Err(Error::Argument(format!("{} families for a pattern with {} edges", fs.len(), h.h())));
            }
            let mut budget = NodeBudget::from_env_or(u64::MAX)?;
            let w = detect::cross_contains_within(&fs, &h, engine.into(), &mut budget)?;
            if !emit(&json, &json!({"spec": h.render(), "copy": w.as_ref().map(|w| sets_json(&w.sets))}), text)? {
                match &w {
                    None => text.push_str("none\n"),
                    Some(w) => text.push_str(&copy_text(w)),
                }
            }
            Ok(if w.is_some() && expect_free { 1 } else { 0 })
        }
        Command::Junta { family, s, r, eps, json } => {
            let f = load(&family)?;
            let eps = if eps.trim() == "auto" {
                pow(&rat(f.k() as i64, f.universe_size().max(1) as i64), r)
            } else {
                rational(&eps)?
            };
            let a = regularity::junta_approximation(&f, s, &eps, r)?;
            let v = json!({
                "eps": eps.to_string(),
                "J": a.j.to_vec(),
                "junta": sets_json(&a.family),
                "defect": a.defect.to_string(),
                "defect_bound": a.defect_bound.to_string(),
                "certified_eps": a.certified_eps.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            });
            if !emit(&json, &v, text)? {
                let _ = writeln!(text, "junta approximation by capture and recursion (s = {s}, r = {r}, eps = {eps})");
                let _ = writeln!(text, "J = {}", a.j);
                let _ = writeln!(text, "junta = {{{}}}", a.family.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","));
                let _ = writeln!(text, "defect = {} <= (s+1)^r eps = {}", a.defect, a.defect_bound);
                let _ = writeln!(text, "|J| = {} <= (s+1)^r = {}", a.j.len(), (s as u128 + 1).saturating_pow(r));
            }
            Ok(0)
        }
        Command::Conditions { forbid, k, json } => {
            let h = expansion_only(parse_spec(&forbid)?)?;
            let star = hstruct::check_condition_star(&h, k)?;
            let dstar = hstruct::check_condition_double_star(&h, k)?;
            let v = json!({
                "pattern": h.render(),
                "k": k,
                "star": star,
                "double_star": dstar.map(|(t, s)| json!({"t": t, "T": s.to_vec()})),
            });
            if !emit(&json, &v, text)? {
                let _ = writeln!(text, "pattern {} at k = {k}", h.render());
                let _ = match star {
                    Some(t) => writeln!(text, "condition (*): holds, t = {t}; (t,t)-stars are the candidate extremal families"),
                    None => writeln!(text, "condition (*): none"),
                };
                let _ = match dstar {
                    Some((t, s)) => writeln!(text, "condition (**): holds, t = {t}, T = {s}; (t,1)-stars are the candidate extremal families"),
                    None => writeln!(text, "condition (**): none"),
                };
            }
            Ok(0)
        }
        Command::Fairness { family, delta, set, s, json } => {
            let f = load(&family)?;
            let delta = rational(&delta)?;
            match (set, s) {
                (Some(set), _) => {
                    let sset = vertex_list(&set)?;
                    let fair = regularity::fairness(&f, sset, &delta)?;
                    if !emit(&json, &json!({"S": sset.to_vec(), "delta": delta.to_string(), "fair": fair}), text)? {
                        let _ = writeln!(
                            text,
                            "fairness: every slice over S = {sset} has measure >= (1 - {delta}) mu(F) = {}: {}",
                            (Rational::from_integer(1.into()) - &delta) * uniform_measure(&f),
                            if fair { "fair" } else { "not fair" }
                        );
                    }
                    Ok(if fair { 0 } else { 1 })
                }
                (None, Some(size)) => {
                    let frac = regularity::fair_fraction(&f, size, &delta)?;
                    if !emit(&json, &json!({"s": size, "delta": delta.to_string(), "fair_fraction": frac.to_string()}), text)? {
                        let _ = writeln!(text, "fraction of {size}-sets that are {delta}-fair: {frac}");
                    }
                    Ok(0)
                }
                (None, None) => Err(Error::Argument("fairness needs --set or --s".into())),
            }
        }
        Command::Quasireg { family, l, alpha, descent, r, json } => {
            let f = load(&family)?;
            if descent {
                let d = regularity::quasiregular_descent(&f, l, r)?;
                let v = json!({
                    "T": d.t.to_vec(),
                    "steps": sets_json(&d.steps),
                    "slice_measure": uniform_measure(&d.slice).to_string(),
                    "measure": uniform_measure(&f).to_string(),
                });
                if !emit(&json, &v, text)? {
                    let _ = writeln!(text, "quasiregular descent (h' = {l}, r = {r}, alpha = sqrt(n/k))");
                    let _ = writeln!(text, "T = {} after {} steps: {}", d.t, d.steps.len(), sets_text(&d.steps));
                    let _ = writeln!(text, "|T| = {} <= 2h'r = {}", d.t.len(), 2 * l * r);
                    let _ = writeln!(text, "mu(slice) = {} >= mu(F) = {}", uniform_measure(&d.slice), uniform_measure(&f));
                }
                return Ok(0);
            }
            let alpha = match alpha {
                None => Alpha::SqrtOf(rat(f.universe_size() as i64, f.k().max(1) as i64)),
                Some(a) => {
                    let a = a.trim();
                    match a.strip_prefix("sqrt(").and_then(|x| x.strip_suffix(')')) {
                        Some(inner) => Alpha::SqrtOf(rational(inner)?),
                        None => Alpha::Value(rational(a)?),
                    }
                }
            };
            let q = regularity::quasiregular(&f, l, &alpha)?;
            let alpha_text = match &alpha {
                Alpha::Value(x) => x.to_string(),
                Alpha::SqrtOf(x) => format!("sqrt({x})"),
            };
            if !emit(&json, &json!({"l": l, "alpha": alpha_text, "holds": q.holds, "violation": q.violation.map(|b| b.to_vec())}), text)? {
                let _ = writeln!(text, "quasiregularity: mu(F_B^B) <= {alpha_text} mu(F) for all |B| <= {l}");
                let _ = match q.violation {
                    None => writeln!(text, "holds"),
                    Some(b) => writeln!(text, "violated at B = {b}"),
                };
            }
            Ok(if q.holds { 0 } else { 1 })
        }
        Command::Shadow { family, forbid, depth, json } => {
            let f = load(&family)?;
            let h = expansion_only(parse_spec(&forbid)?)?;
            let rep = bounds::shadow_ratio(&f, &h, depth)?;
            if !emit(&json, &report_json(&rep), text)? {
                if depth == 1 {
                    let _ = writeln!(text, "shadow inequality for H-free F: |F| <= k h |shadow F|");
                } else {
                    let _ = writeln!(text, "iterated shadow ratio |F| / (k^t |shadow^t F|), no threshold asserted");
                }
                let _ = writeln!(text, "{rep}");
            }
            Ok(if rep.asserted && !rep.holds { 1 } else { 0 })
        }
        Command::Check { kind, families, up, t, p, q, json } => {
            let fs = families.iter().map(|p| load(p)).collect::<Result<Vec<_>>>()?;
            let general = |f: &UniformFamily| {
                let g = f.to_general();
                if up { closure(&g, Direction::Up) } else { g }
            };
            let (title, reports): (&str, Vec<InequalityReport>) = match kind {
                CheckKind::Lovasz => ("Lovász shadow bound: |shadow F| >= C(x, k-1) where |F| = C(x, k)", fs.iter().map(bounds::lovasz_check).collect::<Result<_>>()?),
                CheckKind::Levels => {
                    let mut all = Vec::new();
                    for f in &fs {
                        all.extend(bounds::level_monotonicity(f)?);
                    }
                    ("level measures of a generated complex never increase", all)
                }
                CheckKind::Upward => {
                    let mut all = Vec::new();
                    for f in &fs {
                        all.extend(bounds::upward_levels(f, t)?);
                    }
                    ("up-closure levels of a family at least as large as a t-star or (t,1)-star", all)
                }
                CheckKind::CrossMatching => {
                    let ps = p.ok_or_else(|| Error::Argument("cross-matching needs --p".into()))?;
                    let ps = ps.split(',').map(rational).collect::<Result<Vec<_>>>()?;
                    let gs: Vec<GeneralFamily> = fs.iter().map(general).collect();
                    ("cross matching free families: sum of mu_{p_i}(F_i) <= t - 1", vec![bounds::measure_inequality(&MeasureKind::CrossMatchingSum(ps), &gs)?])
                }
                CheckKind::Average => {
                    let gs: Vec<GeneralFamily> = fs.iter().map(general).collect();
                    let s = gs.len();
                    ("s-wise cross intersecting families: average mu_{(s-1)/s} <= (s-1)/s", vec![bounds::measure_inequality(&MeasureKind::AverageBiased(s), &gs)?])
                }
                CheckKind::Coupling => {
                    let p = rational(&p.ok_or_else(|| Error::Argument("coupling needs --p".into()))?)?;
                    let q = rational(&q.ok_or_else(|| Error::Argument("coupling needs --q".into()))?)?;
                    let gs: Vec<GeneralFamily> = fs.iter().map(general).collect();
                    ("monotone coupling: mu_p(A) + mu_q(B) - 1 <= mu_{p+q}(A ⊔ B)", vec![bounds::measure_inequality(&MeasureKind::Coupling(p, q), &gs)?])
                }
            };
            let ok = reports.iter().all(|r| r.holds || !r.asserted);
            if !emit(&json, &json!({"check": title, "holds": ok, "reports": reports.iter().map(report_json).collect::<Vec<_>>()}), text)? {
                let _ = writeln!(text, "{title}");
                for r in &reports {
                    let _ = writeln!(text, "  {r}");
                }
                let _ = writeln!(text, "{}", if ok { "all hold" } else { "VIOLATED" });
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Verify { theorem, n, k, forbid, t, d, threads, json } => {
            let pattern = || -> Result<BasePattern> {
                let f = forbid.as_deref().ok_or_else(|| Error::Argument("this theorem needs --forbid".into()))?;
                expansion_only(parse_spec(f)?)
            };
            let case = match theorem {
                TheoremArg::TStar => TheoremCase::TStar { n, k, pattern: pattern()?, t },
                TheoremArg::Porcupine => TheoremCase::Porcupine { n, k, pattern: pattern()?, t },
                TheoremArg::Chvatal => TheoremCase::Chvatal { n, k, d },
                TheoremArg::CrossMatching => TheoremCase::CrossMatching { n, k, t },
            };
            let opts = SolveOptions { threads, ..SolveOptions::default() };
            let v = solver::verify_theorem(&case, &opts)?;
            let (verdict, families) = match &v.verdict {
                Verdict::Pass => ("pass", Vec::new()),
                Verdict::BoundHoldsUniquenessFails { example } => ("bound holds, uniqueness fails at this scale", example.clone()),
                Verdict::Fail { counterexample } => ("fail", counterexample.clone()),
            };
            let jv = json!({
                "theorem": v.tag,
                "params": v.params,
                "expected": v.expected.to_string(),
                "found": v.found.to_string(),
                "condition": v.condition,
                "verdict": verdict,
                "families": families.iter().map(|f| sets_json(f.sets())).collect::<Vec<_>>(),
            });
            if !emit(&json, &jv, text)? {
                let statement = match theorem {
                    TheoremArg::TStar => "H-free families have at most C(n-t, k-t) members",
                    TheoremArg::Porcupine => "H-free families have at most C(n,k) - C(n-t,k) members",
                    TheoremArg::Chvatal => "d-simplex-free families have at most C(n-1, k-1) members",
                    TheoremArg::CrossMatching => "families cross free of a t-matching have min |F_i| <= C(n,k) - C(n-t+1,k)",
                };
                let _ = writeln!(text, "{statement}");
                let _ = writeln!(text, "{v}");
            }
            Ok(if v.verdict.bound_holds() { 0 } else { 1 })
        }
        Command::Build { n, k, kind, t, s, r, set, out } => {
            let kind = match kind {
                BuildKind::Tt => StarKind::Tt(t),
                BuildKind::T1 => StarKind::T1(t),
                BuildKind::Ts => StarKind::Ts(t, s),
                BuildKind::Ak => StarKind::Ak(t, r),
                BuildKind::OneCross => StarKind::OneCross(match set {
                    Some(s) => vertex_list(&s)?,
                    None => VertexSet::full(t.min(n)),
                }),
            };
            let f = solver::star_construction(n, k, &kind)?;
            let body = render_fam(&f);
            match out {
                Some(p) => std::fs::write(&p, body).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                None => text.push_str(&body),
            }
            Ok(0)
        }
    }
}
