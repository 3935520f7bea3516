//! The `valmat` command-line tool.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse error, 3 theorem violation.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use valmat_core::generators::{self, gen_perturbed, gen_representable, gen_tree_metric, gen_uniform_zero};
use valmat_core::lattice::{self, LatticePoint};
use valmat_core::{ends, reconstruct, tropical};
use valmat_core::{Caps, ElementSet, ErrorKind, GroundSet, Point, Valuation};

use crate::caps::caps_from_env;
use crate::dot::export_dot;
use crate::format::{emit_instance, emit_matrix, emit_tree, parse_instance, parse_matrix, parse_tree};
use crate::points::{parse_point, parse_rational_point, parse_set};

#[derive(Debug, Parser)]
#[command(name = "valmat", version, about = "Valuated matroids and their uniform semimodular lattices")]
struct Cli {
    /// Input document; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Replace the instance by its simplification before running.
    #[arg(long, global = true)]
    simplify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PointArg {
    /// Comma-separated label=value pairs; omitted labels are 0.
    #[arg(long, default_value = "")]
    point: String,
}

#[derive(Debug, Args)]
struct TwoPoints {
    #[arg(long, default_value = "")]
    point: String,
    #[arg(long)]
    point2: String,
}

#[derive(Debug, Args)]
struct OptionalPoint {
    /// Basepoint; a found member when omitted.
    #[arg(long)]
    point: Option<String>,
}

#[derive(Debug, Args)]
struct PointAndBase {
    #[arg(long, default_value = "")]
    point: String,
    /// Comma-separated labels.
    #[arg(long)]
    base: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the exchange axiom.
    Validate,
    /// A maximum-weight base by local search.
    Maximize {
        /// Starting base; the first base when omitted.
        #[arg(long)]
        start: Option<String>,
    },
    /// Membership in the tropical linear space (fractions allowed).
    Member(PointArg),
    /// Height r(x) of a lattice point.
    Height(PointArg),
    /// Points covering x.
    Covers(PointArg),
    /// Points covered by x.
    Cocovers(PointArg),
    /// Greatest lower bound.
    Meet(TwoPoints),
    /// Least upper bound.
    Join(TwoPoints),
    /// Every lattice point between two points.
    Interval(TwoPoints),
    /// Whether a cover chain has no other points in its interval.
    Segment {
        /// Chain points in order; repeat the flag.
        #[arg(long = "chain", required = true)]
        chain: Vec<String>,
    },
    /// Some point of the lattice.
    FindPoint,
    /// Floor of a fractional member.
    Floor(PointArg),
    /// Floor plus a chain of flats.
    Decompose(PointArg),
    /// Agreement length of two rays.
    Delta {
        #[arg(long, default_value = "")]
        point: String,
        /// Two labels, comma-separated.
        #[arg(long)]
        pair: String,
    },
    /// All ray agreement lengths and Dress–Terhalle exponents at a point.
    Metric(PointArg),
    /// Largest skeleton point of a base below a point.
    Xb(PointAndBase),
    /// Valuation read off the lattice.
    Reconstruct(OptionalPoint),
    /// Reconstruct and compare with the input.
    Roundtrip(OptionalPoint),
    /// Whether the base is a maximizer at the point.
    Skeleton(PointAndBase),
    /// Bases independent at some point.
    Infinity,
    /// Search random pairs for failures of modularity.
    ModularProbe {
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tree metric from a tree document (--input) or a seed.
    GenTree {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 6)]
        leaves: usize,
    },
    /// Degree-of-minor valuation from a matrix document (--input) or a seed.
    GenPoly {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 2)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Zero valuation on a uniform matroid, optionally translated.
    GenUniform {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        size: usize,
        /// Seed of a random translation in [-3, 3]^E.
        #[arg(long)]
        perturb: Option<u64>,
    },
    /// DOT Hasse diagram of [point, point2]; point2 defaults to point + 1.
    ExportDot {
        #[arg(long, default_value = "")]
        point: String,
        #[arg(long)]
        point2: Option<String>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
    Theorem(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Theorem(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) | CliError::Theorem(m) => m,
        }
    }
}

impl From<valmat_core::Error> for CliError {
    fn from(e: valmat_core::Error) -> Self {
        match e.kind() {
            ErrorKind::TheoremViolation => CliError::Theorem(e.to_string()),
            ErrorKind::Domain => CliError::Domain(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Output {
    stdout: String,
    /// Nonzero for results that are reported but still count as failure.
    code: u8,
    note: Option<String>,
}

impl Output {
    fn json(value: Value) -> Self {
        Output { stdout: serde_json::to_string_pretty(&value).expect("json") + "\n", code: 0, note: None }
    }

    fn text(stdout: String) -> Self {
        Output { stdout, code: 0, note: None }
    }
}

struct Context {
    v: Valuation,
    caps: Caps,
}

impl Context {
    fn ground(&self) -> &GroundSet {
        self.v.ground()
    }

    fn point(&self, text: &str) -> CliResult<Point> {
        parse_point(self.ground(), text).map_err(CliError::Parse)
    }

    fn member(&self, text: &str) -> CliResult<LatticePoint> {
        Ok(LatticePoint::new(&self.v, self.point(text)?)?)
    }

    fn set(&self, text: &str) -> CliResult<ElementSet> {
        parse_set(self.ground(), text).map_err(CliError::Parse)
    }

    fn show(&self, p: &Point) -> Value {
        Value::String(p.format(self.ground()))
    }

    fn labels(&self, s: ElementSet) -> Value {
        Value::Array(s.iter().map(|e| Value::String(self.ground().label(e).into())).collect())
    }

    fn points(&self, list: &[LatticePoint]) -> Value {
        Value::Array(list.iter().map(|p| self.show(p.point())).collect())
    }

    fn basepoint(&self, text: &Option<String>) -> CliResult<LatticePoint> {
        match text {
            Some(t) => self.member(t),
            None => Ok(lattice::find_point(&self.v)?),
        }
    }

    fn bases(&self, v: &Valuation) -> Value {
        Value::Array(v.iter().map(|(b, w)| json!({"base": self.labels(b), "value": w})).collect())
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> CliResult<String> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
        }
        None => {
            stdin.read_to_string(&mut text).map_err(|e| CliError::Parse(format!("standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn load(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Context> {
    let caps = caps_from_env().map_err(CliError::Parse)?;
    let text = read_input(&cli.input, stdin)?;
    let instance = parse_instance(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let v = if cli.simplify { instance.valuation.simplify()?.valuation } else { instance.valuation };
    Ok(Context { v, caps })
}

fn generate(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Output> {
    let (v, generator) = match &cli.command {
        Command::GenTree { seed, leaves } => {
            let tree = match seed {
                Some(s) => generators::random_tree(*s, *leaves)?,
                None => parse_tree(&read_input(&cli.input, stdin)?).map_err(|e| CliError::Parse(e.to_string()))?,
            };
            let tree_doc: Value = serde_json::from_str(&emit_tree(&tree)).expect("emitted json");
            (gen_tree_metric(&tree)?, json!({"kind": "tree-metric", "tree": tree_doc}))
        }
        Command::GenPoly { seed, rows, cols, degree } => {
            let m = match seed {
                Some(s) => generators::random_poly_matrix(*s, *rows, *cols, *degree)?,
                None => parse_matrix(&read_input(&cli.input, stdin)?).map_err(|e| CliError::Parse(e.to_string()))?,
            };
            let matrix_doc: Value = serde_json::from_str(&emit_matrix(&m)).expect("emitted json");
            (gen_representable(&m)?, json!({"kind": "representable", "matrix": matrix_doc}))
        }
        Command::GenUniform { rank, size, perturb } => {
            let labels: Vec<String> = (1..=*size).map(|i| format!("e{i}")).collect();
            let zero = gen_uniform_zero(&labels, *rank)?;
            match perturb {
                Some(s) => (gen_perturbed(&zero, *s)?, json!({"kind": "uniform", "perturb": s})),
                None => (zero, json!({"kind": "uniform"})),
            }
        }
        _ => unreachable!("only generators reach here"),
    };
    Ok(Output::text(emit_instance(&v, Some(&generator))))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Output> {
    if matches!(cli.command, Command::GenTree { .. } | Command::GenPoly { .. } | Command::GenUniform { .. }) {
        return generate(cli, stdin);
    }
    let cx = load(cli, stdin)?;
    let v = &cx.v;
    let out = match &cli.command {
        Command::Validate => {
            let exc = v.check_exc()?;
            let counterexample = exc.map(|x| {
                json!({
                    "base": cx.labels(x.base),
                    "other": cx.labels(x.other),
                    "element": cx.ground().label(x.element),
                })
            });
            let mut out = Output::json(json!({
                "valid": exc.is_none(),
                "elements": v.ground().len(),
                "rank": v.rank(),
                "bases": v.len(),
                "simple": v.family().is_simple(),
                "counterexample": counterexample,
            }));
            if let Some(x) = exc {
                out.code = 1;
                out.note = Some(format!(
                    "exchange axiom fails for B = {}, B' = {}, e = {}",
                    cx.ground().format_set(x.base),
                    cx.ground().format_set(x.other),
                    cx.ground().label(x.element)
                ));
            }
            out
        }
        Command::Maximize { start } => {
            let start = match start {
                Some(s) => cx.set(s)?,
                None => v.family().bases()[0],
            };
            let (b, w) = v.maximize(start)?;
            Output::json(json!({"base": cx.labels(b), "value": w}))
        }
        Command::Member(p) => {
            let x = parse_rational_point(cx.ground(), &p.point).map_err(CliError::Parse)?;
            let member = match x.to_integer() {
                Some(int) => tropical::is_member(v, &int)?,
                None => tropical::is_member_tw(v, &x, &cx.caps)?,
            };
            Output::json(json!({"member": member}))
        }
        Command::Height(p) => {
            let x = cx.member(&p.point)?;
            Output::json(json!({"height": x.height()}))
        }
        Command::Covers(p) => Output::json(json!({"points": cx.points(&lattice::covers(v, &cx.member(&p.point)?)?)})),
        Command::Cocovers(p) => {
            Output::json(json!({"points": cx.points(&lattice::cocovers(v, &cx.member(&p.point)?)?)}))
        }
        Command::Meet(p) => {
            let m = lattice::meet(v, &cx.member(&p.point)?, &cx.member(&p.point2)?)?;
            Output::json(json!({"point": cx.show(m.point())}))
        }
        Command::Join(p) => {
            let j = lattice::join(v, &cx.member(&p.point)?, &cx.member(&p.point2)?)?;
            Output::json(json!({"point": cx.show(j.point())}))
        }
        Command::Interval(p) => {
            let list = lattice::interval(v, &cx.member(&p.point)?, &cx.member(&p.point2)?, &cx.caps)?;
            Output::json(json!({"points": cx.points(&list), "size": list.len()}))
        }
        Command::Segment { chain } => {
            let chain = chain.iter().map(|t| cx.member(t)).collect::<CliResult<Vec<_>>>()?;
            Output::json(json!({"segment": lattice::is_segment(v, &chain, &cx.caps)?}))
        }
        Command::FindPoint => Output::json(json!({"point": cx.show(lattice::find_point(v)?.point())})),
        Command::Floor(p) => {
            let x = parse_rational_point(cx.ground(), &p.point).map_err(CliError::Parse)?;
            Output::json(json!({"point": cx.show(&tropical::floor_point(v, &x, &cx.caps)?)}))
        }
        Command::Decompose(p) => {
            let x = parse_rational_point(cx.ground(), &p.point).map_err(CliError::Parse)?;
            let d = tropical::decompose(v, &x, &cx.caps)?;
            let chain: Vec<Value> = d
                .chain
                .iter()
                .map(|(f, c)| json!({"flat": cx.labels(*f), "coefficient": c.to_string()}))
                .collect();
            Output::json(json!({"base": cx.show(&d.base), "chain": chain}))
        }
        Command::Delta { point, pair } => {
            let x = cx.member(point)?;
            let labels: Vec<&str> = pair.split(',').map(str::trim).collect();
            let [e, f] = labels.as_slice() else {
                return Err(CliError::Parse(format!("--pair needs two labels, got `{pair}`")));
            };
            let find = |l: &str| cx.ground().position(l).ok().ok_or_else(|| CliError::Parse(format!("unknown element `{l}`")));
            Output::json(json!({"delta": ends::delta(v, &x, find(e)?, find(f)?)?}))
        }
        Command::Metric(p) => {
            let x = cx.member(&p.point)?;
            let m = ends::ultrametric_matrix(v, &x)?;
            let tight = tropical::tight_span_point(v, x.point())?;
            let n = v.ground().len();
            let mut delta = Map::new();
            let mut dt = Map::new();
            for e in 0..n {
                let mut row = Map::new();
                let mut dt_row = Map::new();
                for f in (0..n).filter(|&f| f != e) {
                    let label = cx.ground().label(f).to_string();
                    row.insert(label.clone(), json!(m.get(e, f)));
                    let exp = match ends::dress_terhalle_metric(v, &tight, e, f) {
                        Ok(r) => Value::String(r.to_string()),
                        Err(valmat_core::Error::NoJointBase { .. }) => Value::Null,
                        Err(other) => return Err(other.into()),
                    };
                    dt_row.insert(label, exp);
                }
                delta.insert(cx.ground().label(e).into(), Value::Object(row));
                dt.insert(cx.ground().label(e).into(), Value::Object(dt_row));
            }
            Output::json(json!({
                "delta": delta,
                "dress_terhalle": dt,
                "tight_span_point": tight.format(cx.ground()),
            }))
        }
        Command::Xb(p) => {
            let xb = reconstruct::project_xb(v, &cx.member(&p.point)?, cx.set(&p.base)?)?;
            Output::json(json!({"point": cx.show(xb.point()), "height": xb.height()}))
        }
        Command::Reconstruct(p) => {
            let x = cx.basepoint(&p.point)?;
            let w = reconstruct::omega_from_lattice(v, &x)?;
            Output::json(json!({"basepoint": cx.show(x.point()), "bases": cx.bases(&w)}))
        }
        Command::Roundtrip(p) => {
            let x = cx.basepoint(&p.point)?;
            let rt = reconstruct::roundtrip_check(v, &x)?;
            Output::json(json!({
                "result": "equivalent",
                "basepoint": cx.show(x.point()),
                "witness": rt.witness.format(cx.ground()),
                "reconstructed": cx.bases(&rt.reconstructed),
            }))
        }
        Command::Skeleton(p) => {
            let member = reconstruct::skeleton_member(v, cx.set(&p.base)?, &cx.member(&p.point)?)?;
            Output::json(json!({"member": member}))
        }
        Command::Infinity => {
            let m = ends::matroid_at_infinity(v)?;
            let bases: Vec<Value> = m.bases().iter().map(|&b| cx.labels(b)).collect();
            Output::json(json!({"bases": bases, "equals_underlying": &m == v.family()}))
        }
        Command::ModularProbe { pairs, seed } => {
            let sampled = sample_pairs(v, *pairs, *seed)?;
            let report = reconstruct::modular_probe(v, &sampled)?;
            let violations: Vec<Value> = report
                .violations
                .iter()
                .take(5)
                .map(|m| {
                    json!({
                        "x": cx.show(&m.x),
                        "y": cx.show(&m.y),
                        "sum": m.sum,
                        "meet_join_sum": m.meet_join_sum,
                    })
                })
                .collect();
            Output::json(json!({
                "checked": report.checked,
                "modular": report.all_modular(),
                "violation_count": report.violations.len(),
                "violations": violations,
            }))
        }
        Command::ExportDot { point, point2 } => {
            let x = cx.member(point)?;
            let y = match point2 {
                Some(t) => cx.member(t)?,
                None => lattice::shift(v, &x, 1)?,
            };
            Output::text(export_dot(v, &x, &y, &cx.caps)?)
        }
        Command::GenTree { .. } | Command::GenPoly { .. } | Command::GenUniform { .. } => unreachable!(),
    };
    Ok(out)
}

/// Pairs of nearby members found by random cover and cocover walks.
fn sample_pairs(v: &Valuation, count: usize, seed: u64) -> CliResult<Vec<(LatticePoint, LatticePoint)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = lattice::find_point(v)?;
    let walk = |from: &LatticePoint, rng: &mut ChaCha8Rng| -> CliResult<LatticePoint> {
        let mut at = from.clone();
        for _ in 0..rng.gen_range(0..=4) {
            let mut next = lattice::covers(v, &at)?;
            next.extend(lattice::cocovers(v, &at)?);
            at = next.choose(rng).expect("members have covers").clone();
        }
        Ok(at)
    };
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let x = walk(&start, &mut rng)?;
        let y = walk(&x, &mut rng)?;
        out.push((x, y));
    }
    Ok(out)
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            if let Some(note) = out.note {
                let _ = writeln!(stderr, "valmat: {note}");
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "valmat: {}", e.message());
            e.exit_code()
        }
    }
}
