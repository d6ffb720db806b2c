//! Command-line front end: argument model, caps configuration, dispatch to
//! the library, and JSON or table reports.
//!
//! Exit codes: 0 success, 1 rejected precondition (or a failed check),
//! 2 undecided because a cap was hit, 3 malformed input.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::braidvar::{self, BraidError, BraidWord};
use crate::exactalg::{
    check_prime, parse_rational, AlgError, CoordinateRing, Domain, Fp, Scalar, VarietyPresentation,
    DEFAULT_ENUMERATION_CAP,
};
use crate::groebner::{is_regular, GroebnerError, RationalSection, Regularity, RegularityCaps, DEFAULT_CERTIFICATE_PRIMES};
use crate::holonomy::{self, ChartPoint, CrossingWord, HolonomyError, PositivityMode};
use crate::quiverhh::{self, Chain, Quiver, QuiverError, Representation};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Environment variable holding cap overrides, e.g. `enum=1000000,d=8`.
pub const CAPS_ENV: &str = "MEROLIB_CAPS";
pub const DEFAULT_SEED: u64 = 0;

#[derive(Parser, Debug, Clone)]
#[command(name = "merolib", version, about = "Trace spaces, braid varieties and regularity checks in exact arithmetic")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cap overrides `key=value,...` with keys enum, degree, units, walk,
    /// symbolic (or e, d, u, w, s); applied after MEROLIB_CAPS.
    #[arg(long, global = true)]
    pub caps: Option<String>,
    /// Primes tried for pole certificates.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Basis of the length-truncated trace space of a quiver.
    Hh0 {
        /// cyclic:<n>, loop, linear:<n> or file:<path>
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Trace pairing of a chain with a representation.
    Ho {
        #[arg(long)]
        quiver: String,
        /// e.g. "[a1 a2] - 2*e1"
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
        /// e.g. "1,1;a1=x;a2=[[y]]"
        #[arg(long)]
        rep: String,
    },
    /// Demazure products, braid varieties and point counts.
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Positivity gate and local lift of a crossing word.
    Lift {
        /// e.g. "+1,+2,+1"
        #[arg(long, allow_hyphen_values = true)]
        crossings: String,
        #[arg(long)]
        disks: Option<usize>,
    },
    /// Evaluate a merodromy monomial at a chart point.
    Merodromy {
        /// Chart coordinates, e.g. "2,3" or "1/5".
        #[arg(long, allow_hyphen_values = true)]
        chart: String,
        /// Relative homology class, e.g. "1,-1".
        #[arg(long, allow_hyphen_values = true)]
        cycle: String,
        /// Work in 𝔽_q instead of ℚ.
        #[arg(long)]
        q: Option<u64>,
    },
    /// Decide whether num/den extends to a regular function.
    Regular {
        /// builtin:hopf, or a presentation JSON file.
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
    },
    /// Torus action on the Hopf-link moduli.
    #[command(subcommand)]
    Hopf(HopfCommand),
    /// Symbolic HO of the local lift, checked against the chart.
    Verify {
        /// Number of spikes k, i.e. the word +1,...,+k.
        #[arg(long)]
        spikes: Option<usize>,
        /// Lift this crossing word instead of using --spikes.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "spikes")]
        crossings: Option<String>,
        /// Rank of the local system.
        #[arg(long, default_value_t = 1)]
        rank: usize,
        /// Prime field for the sampled chart points.
        #[arg(long, default_value_t = 5)]
        q: u64,
        /// Number of random chart points.
        #[arg(long, default_value_t = holonomy::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Run the acceptance or oracles suite.
    Suite { name: String },
}

#[derive(Subcommand, Debug, Clone)]
pub enum BraidCommand {
    /// Demazure product of a positive braid word.
    Demazure {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
    },
    /// Braid-variety presentation.
    Variety {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
        /// Also write the presentation JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count 𝔽_q-points of a presentation.
    Count {
        #[arg(long)]
        pres: PathBuf,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum HopfCommand {
    /// Orbit census of the torus action on the Hopf-link moduli over 𝔽_q.
    Census {
        #[arg(long)]
        q: u64,
    },
}

/// Resource caps. Hitting one yields an undecided answer, never a wrong one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub enumeration: u64,
    pub degree: u32,
    pub units: u32,
    pub walk: usize,
    pub symbolic: usize,
}

impl Default for Caps {
    fn default() -> Self {
        let r = RegularityCaps::default();
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            degree: r.degree,
            units: r.unit_multiplicity,
            walk: quiverhh::DEFAULT_WALK_CAP,
            symbolic: holonomy::DEFAULT_SYMBOLIC_CAP,
        }
    }
}

impl Caps {
    /// Applies `key=value` overrides separated by commas.
    pub fn apply(&mut self, text: &str) -> Result<(), String> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("cap `{item}` is not key=value"))?;
            let v: u64 = v
                .trim()
                .parse()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| format!("cap `{item}` needs a positive integer"))?;
            let small = |v: u64| u32::try_from(v).map_err(|_| format!("cap `{item}` is too large"));
            let size = |v: u64| usize::try_from(v).map_err(|_| format!("cap `{item}` is too large"));
            match k.trim() {
                "enum" | "e" | "enumeration" => self.enumeration = v,
                "degree" | "d" => self.degree = small(v)?,
                "units" | "u" => self.units = small(v)?,
                "walk" | "w" => self.walk = size(v)?,
                "symbolic" | "s" => self.symbolic = size(v)?,
                other => return Err(format!("unknown cap `{other}`")),
            }
        }
        Ok(())
    }
}

/// Everything a run depends on, echoed in its report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub caps: Caps,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    pub fn new(cli: &Cli, env_caps: Option<&str>) -> Result<Self, String> {
        let mut caps = Caps::default();
        if let Some(e) = env_caps {
            caps.apply(e).map_err(|m| format!("{CAPS_ENV}: {m}"))?;
        }
        if let Some(c) = &cli.caps {
            caps.apply(c)?;
        }
        let primes = cli.primes.clone().unwrap_or_else(|| DEFAULT_CERTIFICATE_PRIMES.to_vec());
        for &p in &primes {
            check_prime(p).map_err(|e| e.to_string())?;
        }
        Ok(RunConfig {
            caps,
            primes,
            seed: cli.seed,
            format: cli.format,
        })
    }
}

/// A finished run: the exit code and the rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

#[derive(Serialize)]
struct Report {
    input: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tally: Option<Value>,
}

struct Success {
    result: Value,
    witness: Option<Value>,
    tally: Option<Value>,
    code: i32,
}

impl Success {
    fn plain(result: Value) -> Self {
        Success { result, witness: None, tally: None, code: EXIT_OK }
    }
}

enum Failure {
    Rejected(Value),
    Undecided(String),
    Usage(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

impl From<AlgError> for Failure {
    fn from(e: AlgError) -> Self {
        match e {
            AlgError::CapExceeded { .. } => Failure::Undecided(e.to_string()),
            _ => usage(e),
        }
    }
}

impl From<QuiverError> for Failure {
    fn from(e: QuiverError) -> Self {
        match e {
            QuiverError::WalkCap(_) | QuiverError::CapExceeded { .. } => Failure::Undecided(e.to_string()),
            QuiverError::Alg(a) => a.into(),
            _ => usage(e),
        }
    }
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::NotLongest(_) => Failure::Rejected(json!({ "status": "rejected", "reason": e.to_string() })),
            BraidError::TooLong(_) => Failure::Undecided(e.to_string()),
            BraidError::Alg(a) => a.into(),
            _ => usage(e),
        }
    }
}

impl From<HolonomyError> for Failure {
    fn from(e: HolonomyError) -> Self {
        match e {
            HolonomyError::Positivity { index, disk } => Failure::Rejected(json!({
                "status": "rejected",
                "reason": e.to_string(),
                "index": index,
                "disk": disk,
            })),
            HolonomyError::CapExceeded(_) => Failure::Undecided(e.to_string()),
            HolonomyError::Quiver(q) => q.into(),
            HolonomyError::Alg(a) => a.into(),
            _ => usage(e),
        }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::CapExceeded(_) => Failure::Undecided(e.to_string()),
            GroebnerError::Alg(a) => a.into(),
            _ => usage(e),
        }
    }
}

/// Parses arguments and runs them; argument errors give exit code 3 with
/// clap's message.
pub fn run_args<I, T>(args: I, env_caps: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli, env_caps),
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            Outcome { code, output: e.to_string() }
        }
    }
}

/// Runs a parsed command. `env_caps` is the value of `MEROLIB_CAPS`, if set.
pub fn dispatch(cli: &Cli, env_caps: Option<&str>) -> Outcome {
    let mut input = command_echo(&cli.command);
    let config = match RunConfig::new(cli, env_caps) {
        Ok(c) => c,
        Err(m) => return render(cli.format, input, Err(Failure::Usage(m))),
    };
    input["config"] = serde_json::to_value(&config).expect("serializable");
    let outcome = execute(&cli.command, &config);
    render(config.format, input, outcome)
}

fn command_echo(cmd: &Command) -> Value {
    match cmd {
        Command::Hh0 { quiver, max_len } => json!({"command": "hh0", "quiver": quiver, "max_len": max_len}),
        Command::Ho { quiver, chain, rep } => json!({"command": "ho", "quiver": quiver, "chain": chain, "rep": rep}),
        Command::Braid(BraidCommand::Demazure { strands, word }) => {
            json!({"command": "braid demazure", "strands": strands, "word": word})
        }
        Command::Braid(BraidCommand::Variety { strands, word, out }) => {
            json!({"command": "braid variety", "strands": strands, "word": word, "out": out})
        }
        Command::Braid(BraidCommand::Count { pres, q }) => json!({"command": "braid count", "pres": pres, "q": q}),
        Command::Lift { crossings, disks } => json!({"command": "lift", "crossings": crossings, "disks": disks}),
        Command::Merodromy { chart, cycle, q } => {
            json!({"command": "merodromy", "chart": chart, "cycle": cycle, "q": q})
        }
        Command::Regular { ring, num, den } => json!({"command": "regular", "ring": ring, "num": num, "den": den}),
        Command::Hopf(HopfCommand::Census { q }) => json!({"command": "hopf census", "q": q}),
        Command::Verify { spikes, crossings, rank, q, samples } => json!({
            "command": "verify", "spikes": spikes, "crossings": crossings,
            "rank": rank, "q": q, "samples": samples,
        }),
        Command::Suite { name } => json!({"command": "suite", "name": name}),
    }
}

fn render(format: Format, input: Value, outcome: Result<Success, Failure>) -> Outcome {
    let (report, code) = match outcome {
        Ok(s) => (
            Report { input, result: s.result, witness: s.witness, tally: s.tally },
            s.code,
        ),
        Err(Failure::Rejected(result)) => (Report { input, result, witness: None, tally: None }, EXIT_REJECTED),
        Err(Failure::Undecided(reason)) => (
            Report { input, result: json!({"status": "undecided", "reason": reason}), witness: None, tally: None },
            EXIT_UNDECIDED,
        ),
        Err(Failure::Usage(message)) => (
            Report { input, result: json!({"status": "error", "message": message}), witness: None, tally: None },
            EXIT_USAGE,
        ),
    };
    let output = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
        Format::Table => table(&report),
    };
    Outcome { code, output }
}

fn table(report: &Report) -> String {
    let mut out = String::new();
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if let Some(cmd) = report.input.get("command") {
        out.push_str(&format!("{:<24}{}\n", "command", scalar(cmd)));
    }
    let mut section = |name: &str, v: &Value| match v {
        Value::Object(map) => {
            for (k, v) in map {
                out.push_str(&format!("{:<24}{}\n", k, scalar(v)));
            }
        }
        other => out.push_str(&format!("{:<24}{}\n", name, scalar(other))),
    };
    section("result", &report.result);
    if let Some(w) = &report.witness {
        section("witness", w);
    }
    if let Some(t) = &report.tally {
        section("tally", t);
    }
    out
}

/// `cyclic:<n>`, `loop`, `linear:<n>` or `file:<path>`.
pub fn parse_quiver_spec(spec: &str) -> Result<Quiver, String> {
    let count = |s: &str| {
        s.parse::<usize>()
            .ok()
            .filter(|&n| (1..=4096).contains(&n))
            .ok_or_else(|| format!("bad vertex count in `{spec}`"))
    };
    if spec == "loop" {
        Ok(Quiver::single_loop())
    } else if let Some(n) = spec.strip_prefix("cyclic:") {
        Ok(Quiver::cyclic(count(n)?))
    } else if let Some(n) = spec.strip_prefix("linear:") {
        Ok(Quiver::linear(count(n)?))
    } else if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        Quiver::parse(&text).map_err(|e| e.to_string())
    } else {
        Err(format!("unknown quiver `{spec}`; use cyclic:<n>, loop, linear:<n> or file:<path>"))
    }
}

fn load_ring(spec: &str) -> Result<CoordinateRing, Failure> {
    if spec == "builtin:hopf" {
        return Ok(CoordinateRing::hopf());
    }
    let path = spec.strip_prefix("file:").unwrap_or(spec);
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    Ok(VarietyPresentation::from_json(&text)?.ring)
}

fn parse_scalars(text: &str, q: Option<u64>) -> Result<Vec<Scalar>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let r = parse_rational(s).ok_or_else(|| usage(format!("bad number `{s}`")))?;
            match q {
                None => Ok(Scalar::Rational(r)),
                Some(q) => Fp::from_rational(&r, q)
                    .map(Scalar::Prime)
                    .ok_or_else(|| usage(format!("`{s}` is undefined modulo {q}"))),
            }
        })
        .collect()
}

fn parse_ints(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| usage(format!("bad integer `{s}`"))))
        .collect()
}

fn positive_word(spikes: usize) -> Result<CrossingWord, Failure> {
    let text: Vec<String> = (1..=spikes).map(|i| format!("+{i}")).collect();
    Ok(CrossingWord::parse(&text.join(","), Some(spikes))?)
}

fn execute(cmd: &Command, config: &RunConfig) -> Result<Success, Failure> {
    let caps = &config.caps;
    match cmd {
        Command::Hh0 { quiver, max_len } => {
            let q = parse_quiver_spec(quiver).map_err(usage)?;
            let ts = quiverhh::trace_space(&q, *max_len, caps.walk)?;
            let basis: Vec<String> = ts.basis().iter().map(|b| b.display(&q)).collect();
            Ok(Success::plain(json!({
                "dimension": ts.dimension(),
                "graded_dimensions": ts.graded_dimensions(),
                "basis": basis,
            })))
        }
        Command::Ho { quiver, chain, rep } => {
            let q = parse_quiver_spec(quiver).map_err(usage)?;
            let chain = Chain::parse(chain, &q)?;
            let rep = Representation::parse(rep, &q)?;
            let value = quiverhh::ho_trace(&chain, &rep)?;
            Ok(Success::plain(json!({
                "value": value.to_string(),
                "variables": rep.vars().as_slice(),
                "chain": chain.display(&q),
                "convention": quiverhh::WALK_CONVENTION,
            })))
        }
        Command::Braid(BraidCommand::Demazure { strands, word }) => {
            let w = BraidWord::parse(*strands, word)?;
            let p = braidvar::demazure(&w);
            Ok(Success::plain(json!({
                "permutation": p.one_line(),
                "length": p.length(),
                "longest": p.is_longest(),
            })))
        }
        Command::Braid(BraidCommand::Variety { strands, word, out }) => {
            let w = BraidWord::parse(*strands, word)?;
            let pres = braidvar::variety_presentation(&w)?;
            if let Some(path) = out {
                std::fs::write(path, pres.to_json() + "\n").map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            Ok(Success::plain(serde_json::to_value(pres.to_file()).expect("serializable")))
        }
        Command::Braid(BraidCommand::Count { pres, q }) => {
            let text = std::fs::read_to_string(pres).map_err(|e| usage(format!("{}: {e}", pres.display())))?;
            let p = VarietyPresentation::from_json(&text)?;
            let count = braidvar::count_points(&p, *q, caps.enumeration)?;
            Ok(Success::plain(json!({ "q": q, "count": count, "variables": p.ring.vars().len() })))
        }
        Command::Lift { crossings, disks } => {
            let w = CrossingWord::parse(crossings, *disks)?;
            let iv = holonomy::intersection_vector(&w);
            let geometric = holonomy::is_positive(&w, PositivityMode::Geometric);
            let homological = holonomy::is_positive(&w, PositivityMode::Homological);
            let lift = match holonomy::local_lift(&w) {
                Ok(l) => l,
                Err(HolonomyError::Positivity { index, disk }) => {
                    return Err(Failure::Rejected(json!({
                        "status": "rejected",
                        "reason": HolonomyError::Positivity { index, disk }.to_string(),
                        "index": index,
                        "disk": disk,
                        "intersection_vector": iv,
                        "positive": {"geometric": geometric, "homological": homological},
                    })))
                }
                Err(e) => return Err(e.into()),
            };
            let chart = holonomy::restrict_to_chart(&lift.chain, &lift.quiver)?;
            let model = if lift.spikes == 0 { "loop".to_string() } else { format!("cyclic:{}", lift.spikes) };
            Ok(Success::plain(json!({
                "status": "lifted",
                "class": lift.class_display(),
                "quiver": model,
                "reduced_word": w.reduced().to_string(),
                "chart_image": chart.to_string(),
                "intersection_vector": iv,
                "positive": {"geometric": geometric, "homological": homological},
            })))
        }
        Command::Merodromy { chart, cycle, q } => {
            if let Some(q) = q {
                check_prime(*q)?;
            }
            let point = ChartPoint::new(parse_scalars(chart, *q)?)?;
            let cls = parse_ints(cycle)?;
            let value = holonomy::merodromy(&point, &cls)?;
            let domain = match q {
                Some(q) => Domain::Prime(*q),
                None => Domain::Rational,
            };
            Ok(Success::plain(json!({
                "value": value,
                "field": match domain { Domain::Rational => "Q".to_string(), Domain::Prime(q) => format!("F{q}") },
            })))
        }
        Command::Regular { ring, num, den } => {
            let ring = load_ring(ring)?;
            let section = RationalSection::new(ring.parse(num)?, ring.parse(den)?, ring)?;
            let rcaps = RegularityCaps {
                degree: caps.degree,
                unit_multiplicity: caps.units,
                primes: config.primes.clone(),
                enumeration: caps.enumeration,
                ..RegularityCaps::default()
            };
            Ok(match is_regular(&section, &rcaps) {
                Regularity::Regular { witness, unit_exponents } => Success {
                    result: json!({"status": "regular", "witness": witness.to_string(), "unit_exponents": unit_exponents}),
                    witness: Some(json!(witness.to_string())),
                    tally: None,
                    code: EXIT_OK,
                },
                Regularity::NotRegular { q, point } => Success {
                    result: json!({"status": "not_regular", "certificate": {"q": q, "point": point}}),
                    witness: Some(json!({"q": q, "point": point})),
                    tally: None,
                    code: EXIT_OK,
                },
                Regularity::Undecided { reason } => Success {
                    result: json!({"status": "undecided", "reason": reason}),
                    witness: None,
                    tally: None,
                    code: EXIT_UNDECIDED,
                },
            })
        }
        Command::Hopf(HopfCommand::Census { q }) => {
            let census = holonomy::hopf_orbit_census(*q, caps.enumeration)?;
            let expected = census.matches_expected();
            let mut result = serde_json::to_value(&census).expect("serializable");
            result["matches_expected"] = json!(expected);
            Ok(Success::plain(result))
        }
        Command::Verify { spikes, crossings, rank, q, samples } => {
            let word = match (spikes, crossings) {
                (_, Some(c)) => CrossingWord::parse(c, None)?,
                (Some(n), None) if *n > 0 => positive_word(*n)?,
                _ => return Err(usage("give --spikes <n> (n ≥ 1) or --crossings")),
            };
            let lift = holonomy::local_lift(&word)?;
            let r = holonomy::verify_local_to_global(&lift, *rank, *q, config.seed, *samples, caps.symbolic)?;
            let verified = r.globally_regular && r.tally.all_agree();
            Ok(Success {
                result: json!({
                    "status": if verified { "verified" } else { "failed" },
                    "spikes": r.spikes,
                    "rank": r.rank,
                    "q": r.q,
                    "seed": r.seed,
                    "globally_regular": r.globally_regular,
                    "variables": r.variables,
                    "class": lift.class_display(),
                }),
                witness: Some(json!(r.polynomial)),
                tally: Some(serde_json::to_value(r.tally).expect("serializable")),
                code: if verified { EXIT_OK } else { EXIT_REJECTED },
            })
        }
        Command::Suite { name } => {
            let report = suite::run_suite(name, config.seed).map_err(usage)?;
            let code = if report.passed { EXIT_OK } else { EXIT_REJECTED };
            Ok(Success {
                result: serde_json::to_value(&report).expect("serializable"),
                witness: None,
                tally: None,
                code,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, Value) {
        let mut full = vec!["merolib"];
        full.extend_from_slice(args);
        let out = run_args(full, None);
        (out.code, serde_json::from_str(&out.output).unwrap_or(Value::Null))
    }

    #[test]
    fn caps_parsing() {
        let mut c = Caps::default();
        c.apply("d=6,u=3, enum=100, walk=7,s=9").unwrap();
        assert_eq!((c.degree, c.units, c.enumeration, c.walk, c.symbolic), (6, 3, 100, 7, 9));
        assert!(c.apply("d=0").is_err());
        assert!(c.apply("x=1").is_err());
        assert!(c.apply("d").is_err());
        assert!(c.apply("d=99999999999").is_err());
    }

    #[test]
    fn dispatch_examples() {
        let (code, v) = run(&["hopf", "census", "--q", "3"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["total"], 7);
        let (code, v) = run(&["regular", "--ring", "builtin:hopf", "--num", "y", "--den", "1+x*y"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["status"], "regular");
        assert_eq!(v["witness"], "y");
        let (code, v) = run(&["lift", "--crossings", "-1"]);
        assert_eq!(code, 1);
        assert_eq!(v["result"]["index"], 0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["hh0", "--quiver", "cyclic:3", "--max-len", "7"]).1["result"]["dimension"], 5);
        assert_eq!(run(&["hh0", "--quiver", "bogus", "--max-len", "7"]).0, 3);
        assert_eq!(run(&["hh0", "--quiver", "cyclic:3", "--max-len", "30", "--caps", "w=10"]).0, 2);
        assert_eq!(run(&["braid", "variety", "--strands", "3", "--word", "1,2"]).0, 1);
        assert_eq!(run(&["regular", "--ring", "builtin:hopf", "--num", "1", "--den", "x", "--caps", "u=1", "--primes", "3"]).0, 0);
        assert_eq!(run(&["regular", "--ring", "builtin:hopf", "--num", "1", "--den", "x", "--primes", "4"]).0, 3);
        assert_eq!(run(&["nonsense"]).0, 3);
        assert_eq!(run(&["suite", "nope"]).0, 3);
        let out = run_args(["merolib", "hopf", "census", "--q", "7"], Some("enum=10"));
        assert_eq!(out.code, 2);
        let out = run_args(["merolib", "hopf", "census", "--q", "7"], Some("bad"));
        assert_eq!(out.code, 3);
    }

    #[test]
    fn reports_are_stable() {
        let a = run_args(["merolib", "verify", "--spikes", "3", "--rank", "2", "--q", "5", "--seed", "7"], None);
        let b = run_args(["merolib", "verify", "--spikes", "3", "--rank", "2", "--q", "5", "--seed", "7"], None);
        assert_eq!(a, b);
        assert_eq!(a.code, 0);
    }

    #[test]
    fn table_output() {
        let out = run_args(["merolib", "--format", "table", "hopf", "census", "--q", "2"], None);
        assert!(out.output.contains("total"));
        assert_eq!(out.code, 0);
    }
}
