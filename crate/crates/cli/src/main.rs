//! Batch front end: fan dumps, section counts, ideal-twist H^1, theorem
//! sweeps, and the built-in counterexample.
//!
//! Exit codes: 0 on success (and when every verification check passes),
//! 1 when a verification fails (witnesses go to stdout), 2 on input
//! errors (diagnostics go to stderr). All output is deterministic for a
//! fixed command line; rationals print as exact `p/q`, never as floats.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use weylfan::jsonio::{coords_to_json, divisor_from_json, divisor_to_json};
use weylfan::{
    batch_compositions, g2_counterexample, g2_family_case, h0_points, parse_datum, phi_cokernel,
    random_positive_orthogonal_set, total_topological_h1, verify_projection_equality,
    verify_projection_equality_staged, Character, G2Family, GroupKind, LatticePointSet, LeviSpec,
    OrthogonalSet, ProjectionReport, Variety,
};

#[derive(Parser)]
#[command(
    name = "weylfan",
    version,
    about = "Toric Weyl-fan section and cohomology checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rays, maximal cones, and wall data of a Weyl fan.
    FanDump {
        /// Datum name: GL:n, SL:n, or G2.
        datum: String,
        #[arg(long)]
        json: bool,
    },
    /// Count the lattice points spanning the sections of a divisor.
    H0 {
        /// Datum name; must match the divisor file when given.
        #[arg(long)]
        datum: Option<String>,
        /// Path to a divisor JSON file.
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions around the restriction to the divisor over [alpha = 0],
    /// including the H^1 of the ideal-sheaf twist.
    H1 {
        #[arg(long)]
        datum: Option<String>,
        /// Root coordinates, e.g. 1,-1,0.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        divisor: String,
        /// Cross-check the cokernel against the topological eigenweight
        /// count ("topological").
        #[arg(long)]
        oracle: Option<OracleKind>,
        #[arg(long)]
        json: bool,
    },
    /// Run one of the named verification sweeps.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremName,
        /// Datum for checks B, D, E.
        #[arg(long)]
        datum: Option<String>,
        /// Comma-separated batch sizes for check B; all partitions when
        /// omitted.
        #[arg(long)]
        batches: Option<String>,
        /// Number of random sets for checks B, D, E.
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Wall-increment bound for the random sets.
        #[arg(long, default_value_t = 5)]
        bound: i64,
        /// Largest family parameter for check C.
        #[arg(long, default_value_t = 10)]
        n_max: i64,
        /// Largest dominant coordinate for check A.
        #[arg(long, default_value_t = 6)]
        max_coord: i64,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the built-in G2 counterexample package.
    Counterexample {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Topological,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremName {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "E", alias = "e")]
    E,
}

/// Ok(true): success; Ok(false): a verification failed (exit 1);
/// Err: input error (exit 2).
type CmdResult = Result<bool, String>;

fn main() -> ExitCode {
    // die quietly when a pager or `head` closes the pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::FanDump { datum, json } => fan_dump(&datum, json),
        Command::H0 {
            datum,
            divisor,
            json,
        } => h0_command(datum.as_deref(), &divisor, json),
        Command::H1 {
            datum,
            alpha,
            divisor,
            oracle,
            json,
        } => h1_command(datum.as_deref(), &alpha, &divisor, oracle, json),
        Command::Verify {
            theorem,
            datum,
            batches,
            samples,
            seed,
            bound,
            n_max,
            max_coord,
            json,
        } => verify_command(
            theorem,
            datum.as_deref(),
            batches.as_deref(),
            samples,
            seed,
            bound,
            n_max,
            max_coord,
            json,
        ),
        Command::Counterexample { json } => counterexample_command(json),
    }
}

fn build_variety(name: &str) -> Result<Arc<Variety>, String> {
    let (kind, n) = parse_datum(name).map_err(|e| e.to_string())?;
    Ok(Arc::new(Variety::new(kind, n).map_err(|e| e.to_string())?))
}

fn load_divisor(path: &str, expected_datum: Option<&str>) -> Result<OrthogonalSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| format!("{path}: malformed JSON: {e}"))?;
    let os = divisor_from_json(&value).map_err(|e| format!("{path}: {e}"))?;
    if let Some(name) = expected_datum {
        if os.variety().name() != name {
            return Err(format!(
                "{path}: divisor datum {} does not match --datum {name}",
                os.variety().name()
            ));
        }
    }
    os.validate().require_valid().map_err(|e| e.to_string())?;
    Ok(os)
}

fn parse_character(kind: GroupKind, n: usize, text: &str) -> Result<Character, String> {
    let coords: Vec<i64> = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad coordinate `{c}`"))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != n {
        return Err(format!("expected {n} coordinates, got {}", coords.len()));
    }
    Ok(Character::from_ints(kind, &coords))
}

fn points_json(points: &LatticePointSet) -> Value {
    Value::Array(points.points.iter().map(coords_to_json).collect())
}

fn fan_dump(datum: &str, as_json: bool) -> CmdResult {
    let variety = build_variety(datum)?;
    let fan = &variety.fan;
    if as_json {
        let rays: Vec<Value> = fan
            .rays
            .iter()
            .map(|r| Value::Array(r.coords().iter().map(|&c| json!(c)).collect()))
            .collect();
        let cones: Vec<Value> = fan
            .cones
            .iter()
            .map(|c| {
                json!({
                    "id": c.id.to_string(),
                    "rays": c.rays,
                })
            })
            .collect();
        let mut adjacency = Vec::new();
        for (a, walls) in fan.adjacency.iter().enumerate() {
            for w in walls {
                if w.other < a {
                    continue;
                }
                adjacency.push(json!({
                    "cones": [fan.cones[a].id.to_string(), fan.cones[w.other].id.to_string()],
                    "shared_rays": w.shared,
                    "wall_root": coords_to_json(&w.direction),
                    "wall_coroot": w.coroot.as_ref().map(|c| {
                        Value::Array(c.coords().iter().map(|&x| json!(x)).collect())
                    }),
                    "positive_on": fan.cones[a].id.to_string(),
                }));
            }
        }
        let out = json!({
            "datum": variety.name(),
            "rank": fan.rank,
            "rays": rays,
            "cones": cones,
            "adjacency": adjacency,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("datum {}  rank {}", variety.name(), fan.rank);
        println!("rays ({}):", fan.rays.len());
        for (i, r) in fan.rays.iter().enumerate() {
            println!("  [{i}] {r}");
        }
        println!("maximal cones ({}):", fan.cones.len());
        for c in &fan.cones {
            let rays: Vec<String> = c.rays.iter().map(|r| r.to_string()).collect();
            println!("  {}  rays [{}]", c.id, rays.join(", "));
        }
        println!("walls:");
        for (a, walls) in fan.adjacency.iter().enumerate() {
            for w in walls {
                if w.other < a {
                    continue;
                }
                let coroot = w
                    .coroot
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "  {} | {}  root {} (positive on {}), coroot {}",
                    fan.cones[a].id, fan.cones[w.other].id, w.direction, fan.cones[a].id, coroot
                );
            }
        }
    }
    Ok(true)
}

fn h0_command(datum: Option<&str>, divisor: &str, as_json: bool) -> CmdResult {
    let os = load_divisor(divisor, datum)?;
    let points = h0_points(&os).map_err(|e| e.to_string())?;
    if as_json {
        let out = json!({
            "datum": os.variety().name(),
            "count": points.len(),
            "points": points_json(&points),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "datum {}  h0 dimension {}",
            os.variety().name(),
            points.len()
        );
        for p in &points.points {
            println!("  {p}");
        }
    }
    Ok(true)
}

fn h1_command(
    datum: Option<&str>,
    alpha: &str,
    divisor: &str,
    oracle: Option<OracleKind>,
    as_json: bool,
) -> CmdResult {
    let os = load_divisor(divisor, datum)?;
    let kind = os.variety().datum.kind();
    let n = os.variety().datum.n();
    let alpha = parse_character(kind, n, alpha)?;
    if !os.variety().datum.is_root(&alpha) {
        return Err(format!("{alpha} is not a root of {}", os.variety().name()));
    }
    let report = phi_cokernel(&os, &alpha).map_err(|e| e.to_string())?;
    let oracle_result = match oracle {
        Some(OracleKind::Topological) => {
            Some(total_topological_h1(&os, &alpha).map_err(|e| e.to_string())?)
        }
        None => None,
    };
    if let Some((total, _)) = &oracle_result {
        if *total != report.coker_dim {
            return Err(format!(
                "oracle disagreement: cokernel {} vs topological {total}",
                report.coker_dim
            ));
        }
    }
    if as_json {
        let mut out = Map::new();
        out.insert("datum".into(), json!(os.variety().name()));
        out.insert("alpha".into(), coords_to_json(&alpha));
        out.insert("h0_dim".into(), json!(report.h0_dim));
        out.insert("h0_divisor_dim".into(), json!(report.h0_divisor_dim));
        out.insert("coker_dim".into(), json!(report.coker_dim));
        out.insert(
            "missing".into(),
            Value::Array(report.missing.iter().map(coords_to_json).collect()),
        );
        if let Some((total, per)) = &oracle_result {
            let mut weights = Map::new();
            for (u, dim) in per {
                let key: Vec<String> = u.coords().iter().map(|c| c.to_string()).collect();
                weights.insert(key.join(","), json!(dim));
            }
            out.insert(
                "oracle".into(),
                json!({"total": total, "per_eigenweight": Value::Object(weights)}),
            );
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&Value::Object(out)).unwrap()
        );
    } else {
        println!("datum {}  alpha {}", os.variety().name(), alpha);
        println!("  h0(V)        = {}", report.h0_dim);
        println!("  h0(divisor)  = {}", report.h0_divisor_dim);
        println!("  h1(twist)    = {}", report.coker_dim);
        for m in &report.missing {
            println!("  missing {m}");
        }
        if let Some((total, per)) = &oracle_result {
            println!("  topological total = {total} (agrees)");
            for (u, dim) in per {
                println!("    eigenweight {u}: {dim}");
            }
        }
    }
    Ok(true)
}

struct SweepOutcome {
    checks: usize,
    failures: Vec<Value>,
}

impl SweepOutcome {
    fn new() -> Self {
        SweepOutcome {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_command(
    theorem: TheoremName,
    datum: Option<&str>,
    batches: Option<&str>,
    samples: u64,
    seed: u64,
    bound: i64,
    n_max: i64,
    max_coord: i64,
    as_json: bool,
) -> CmdResult {
    let mut outcome = SweepOutcome::new();
    let label;
    match theorem {
        TheoremName::A => {
            label = "A";
            let v = build_variety(datum.unwrap_or("G2"))?;
            if v.datum.kind() != GroupKind::G2 {
                return Err("check A runs on G2".into());
            }
            let roots = [
                Character::from_ints(GroupKind::G2, &[1, -1, 0]),
                Character::from_ints(GroupKind::G2, &[2, -1, -1]),
            ];
            for a in 0..=max_coord {
                for b in 0..=a {
                    let mu = Character::from_ints(GroupKind::G2, &[a, b, -a - b]);
                    let os = OrthogonalSet::from_weyl_orbit(&v, &mu).map_err(|e| e.to_string())?;
                    for alpha in &roots {
                        let report =
                            verify_projection_equality(&os, &LeviSpec::Root(alpha.clone()))
                                .map_err(|e| e.to_string())?;
                        outcome.record(report.equal, || {
                            json!({
                                "mu": coords_to_json(&mu),
                                "alpha": coords_to_json(alpha),
                                "witnesses": witness_json(&report),
                            })
                        });
                    }
                }
            }
        }
        TheoremName::B => {
            label = "B";
            let v = build_variety(datum.unwrap_or("GL:3"))?;
            if v.datum.kind() != GroupKind::GLn {
                return Err("check B runs on GL:n".into());
            }
            let n = v.datum.n();
            let batch_list: Vec<Vec<usize>> = match batches {
                Some(text) => vec![parse_batches(text, n)?],
                None => batch_compositions(n),
            };
            for s in 0..samples {
                let os = random_positive_orthogonal_set(&v, bound, seed + s);
                for b in &batch_list {
                    let report = verify_projection_equality(&os, &LeviSpec::Batches(b.clone()))
                        .map_err(|e| e.to_string())?;
                    let (staged, _) =
                        verify_projection_equality_staged(&os, b).map_err(|e| e.to_string())?;
                    let ok = report.equal && staged == report.equal;
                    outcome.record(ok, || {
                        json!({
                            "seed": seed + s,
                            "batches": b,
                            "equal": report.equal,
                            "staged": staged,
                            "witnesses": witness_json(&report),
                        })
                    });
                }
            }
        }
        TheoremName::C => {
            label = "C";
            for family in G2Family::ALL {
                for n in 1..=n_max {
                    let (os, alpha) = g2_family_case(family, n).map_err(|e| e.to_string())?;
                    let report = phi_cokernel(&os, &alpha).map_err(|e| e.to_string())?;
                    outcome.record(report.coker_dim == 0, || {
                        json!({
                            "family": family.label(),
                            "n": n,
                            "coker_dim": report.coker_dim,
                        })
                    });
                }
            }
        }
        TheoremName::D | TheoremName::E => {
            let default_datum;
            match theorem {
                TheoremName::D => {
                    label = "D";
                    default_datum = "GL:3";
                }
                _ => {
                    label = "E";
                    default_datum = "SL:3";
                }
            }
            let v = build_variety(datum.unwrap_or(default_datum))?;
            let expected = if matches!(theorem, TheoremName::D) {
                GroupKind::GLn
            } else {
                GroupKind::SLn
            };
            if v.datum.kind() != expected {
                return Err(format!("check {label} runs on {default_datum}-style data"));
            }
            for s in 0..samples {
                let os = random_positive_orthogonal_set(&v, bound, seed + s);
                for alpha in v.datum.simple_roots().to_vec() {
                    let report = phi_cokernel(&os, &alpha).map_err(|e| e.to_string())?;
                    outcome.record(report.coker_dim == 0, || {
                        json!({
                            "seed": seed + s,
                            "alpha": coords_to_json(&alpha),
                            "coker_dim": report.coker_dim,
                        })
                    });
                }
            }
        }
    }

    let passed = outcome.failures.is_empty();
    if as_json {
        let out = json!({
            "theorem": label,
            "checks": outcome.checks,
            "failures": outcome.failures,
            "passed": passed,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "check {label}: {} checks, {} failures",
            outcome.checks,
            outcome.failures.len()
        );
        for f in &outcome.failures {
            println!("  FAIL {f}");
        }
        if passed {
            println!("all checks passed");
        }
    }
    Ok(passed)
}

fn witness_json(report: &ProjectionReport) -> Value {
    Value::Array(report.witnesses.iter().map(coords_to_json).collect())
}

fn parse_batches(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let batches: Vec<usize> = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad batch `{c}`"))
        })
        .collect::<Result<_, _>>()?;
    if batches.iter().sum::<usize>() != n || batches.contains(&0) {
        return Err(format!(
            "batches {batches:?} must be positive and sum to {n}"
        ));
    }
    Ok(batches)
}

fn counterexample_command(as_json: bool) -> CmdResult {
    let (os, projection, cohomology) = g2_counterexample();
    let alpha = Character::from_ints(GroupKind::G2, &[1, -1, 0]);
    let as_expected = cohomology.h0_dim == 2
        && cohomology.h0_divisor_dim == 3
        && cohomology.coker_dim == 1
        && !projection.equal;
    if as_json {
        let out = json!({
            "divisor": divisor_to_json(&os),
            "alpha": coords_to_json(&alpha),
            "h0_dim": cohomology.h0_dim,
            "h0_divisor_dim": cohomology.h0_divisor_dim,
            "coker_dim": cohomology.coker_dim,
            "missing": Value::Array(cohomology.missing.iter().map(coords_to_json).collect()),
            "projection_equal": projection.equal,
            "witnesses": witness_json(&projection),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("G2 counterexample, alpha {alpha}");
        println!("  characters:");
        for (cone, ch) in os.variety().fan.cones.iter().zip(os.chars()) {
            println!("    cone {:>2}: {ch}", cone.id.to_string());
        }
        println!("  h0(V)       = {}", cohomology.h0_dim);
        println!("  h0(divisor) = {}", cohomology.h0_divisor_dim);
        println!("  h1(twist)   = {}", cohomology.coker_dim);
        println!("  projection equality: {}", projection.equal);
        for w in &projection.witnesses {
            println!("  witness {w}");
        }
    }
    Ok(as_expected)
}
