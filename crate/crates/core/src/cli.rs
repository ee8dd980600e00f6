//! Command-line surface: `describe`, `walk`, `verify`, `eigen`, `gram`.
//!
//! Every command returns its rendered output and an exit code; the binary only
//! prints and exits. Output is deterministic for identical flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::affine::{geodesic_word, Token};
use crate::error::{Error, Result};
use crate::innerprod::{gram_matrix, s_string};
use crate::rootsys::{build_root_system, fmt_vec, Family, Rat, RootSystem};
use crate::spectrum::{eigenfunction_with, orbit, partition_of, Specialization, SpectralRecord};
use crate::verify::{self, SuiteReport};

#[derive(Parser, Debug)]
#[command(name = "scatter", about = "Exact affine Hecke / scattering-matrix toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// TOML file with default values for any flag (flags win).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Default, Clone)]
pub struct SystemArgs {
    /// Root system: A, B, C, D, G, or with rank (`B2`, `G2`), or `A1xA1`.
    #[arg(long = "type")]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Roots, positive roots, highest root, minuscule coweights, braid orders.
    Describe {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Geodesic word of the translation by a coweight.
    Walk {
        #[command(flatten)]
        system: SystemArgs,
        /// Coweight in ambient coordinates, e.g. `-1,0,0` or `1/2,1/2,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
    },
    /// Run a named verification suite; exit 0 iff it has no failures.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        system: SystemArgs,
        /// Window size (exponents in [-d, d], or degree <= d for type-A suites).
        #[arg(short = 'd', long = "window")]
        d: Option<i64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        kappa: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Spectral records for a partition orbit or a single composition.
    Eigen {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        composition: Option<String>,
        /// Specialize `q = t^{κ/2}`.
        #[arg(long)]
        kappa: Option<u32>,
    },
    /// Gram matrix of specialized eigenfunctions.
    Gram {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        kappa: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
    },
}

/// Values a config file may provide; same names as the flags.
#[derive(Deserialize, Debug, Default, Clone)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "type")]
    pub family: Option<String>,
    pub rank: Option<usize>,
    pub xi: Option<String>,
    pub suite: Option<String>,
    pub d: Option<i64>,
    pub n: Option<usize>,
    pub kappa: Option<u32>,
    pub degree: Option<u32>,
    pub partition: Option<String>,
    pub composition: Option<String>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<FileConfig> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: String,
    pub family: Option<String>,
    pub rank: Option<usize>,
    pub xi: Option<String>,
    pub suite: Option<String>,
    pub d: i64,
    pub n: Option<usize>,
    pub kappa: Option<u32>,
    pub degree: Option<u32>,
    pub partition: Option<String>,
    pub composition: Option<String>,
    pub format: Format,
    pub output: Option<PathBuf>,
}

pub const DEFAULT_WINDOW: i64 = 3;

impl RunConfig {
    /// Merge command-line flags over the optional config file.
    pub fn resolve(cli: &Cli, file: FileConfig) -> RunConfig {
        let f = file;
        let mut rc = RunConfig {
            command: String::new(),
            family: f.family,
            rank: f.rank,
            xi: f.xi,
            suite: f.suite,
            d: f.d.unwrap_or(DEFAULT_WINDOW),
            n: f.n,
            kappa: f.kappa,
            degree: f.degree,
            partition: f.partition,
            composition: f.composition,
            format: cli.common.format.or(f.format).unwrap_or(Format::Json),
            output: cli.common.output.clone().or(f.output),
        };
        let system = |s: &SystemArgs, rc: &mut RunConfig| {
            if s.family.is_some() {
                rc.family = s.family.clone();
            }
            if s.rank.is_some() {
                rc.rank = s.rank;
            }
        };
        fn set<T: Clone>(slot: &mut Option<T>, v: &Option<T>) {
            if v.is_some() {
                *slot = v.clone();
            }
        }
        match &cli.command {
            Command::Describe { system: s } => {
                rc.command = "describe".into();
                system(s, &mut rc);
            }
            Command::Walk { system: s, xi } => {
                rc.command = "walk".into();
                system(s, &mut rc);
                set(&mut rc.xi, xi);
            }
            Command::Verify { suite, system: s, d, n, kappa, degree } => {
                rc.command = "verify".into();
                system(s, &mut rc);
                set(&mut rc.suite, suite);
                if let Some(d) = d {
                    rc.d = *d;
                }
                set(&mut rc.n, n);
                set(&mut rc.kappa, kappa);
                set(&mut rc.degree, degree);
            }
            Command::Eigen { n, partition, composition, kappa } => {
                rc.command = "eigen".into();
                set(&mut rc.n, n);
                set(&mut rc.partition, partition);
                set(&mut rc.composition, composition);
                set(&mut rc.kappa, kappa);
            }
            Command::Gram { n, kappa, degree } => {
                rc.command = "gram".into();
                set(&mut rc.n, n);
                set(&mut rc.kappa, kappa);
                set(&mut rc.degree, degree);
            }
        }
        rc
    }
}

/// Rendered output plus process exit code (0 success, 1 check failed, 2 usage).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: 0 }
    }
}

/// Parse `--type` (`A`, `b2`, `G2`, `A1xA1`) together with `--rank`.
pub fn parse_system(family: Option<&str>, rank: Option<usize>) -> Result<RootSystem> {
    let spec = family.ok_or_else(|| Error::Usage("--type is required".into()))?.trim();
    if spec.eq_ignore_ascii_case("a1xa1") {
        return Ok(RootSystem::a1_times_a1());
    }
    let split = spec.find(|c: char| c.is_ascii_digit()).unwrap_or(spec.len());
    let (letters, digits) = spec.split_at(split);
    let fam = Family::parse(letters).map_err(|_| Error::Usage(format!("unknown root system type `{spec}`")))?;
    let embedded = if digits.is_empty() {
        None
    } else {
        Some(digits.parse::<usize>().map_err(|_| Error::Usage(format!("bad rank in `{spec}`")))?)
    };
    let rank = match (embedded, rank) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Usage(format!("`{spec}` conflicts with --rank {b}")));
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) if fam == Family::G => 2,
        (None, None) => return Err(Error::Usage("--rank is required".into())),
    };
    build_root_system(fam, rank).map_err(|e| Error::Usage(e.to_string()))
}

/// Comma-separated rationals (`1,-1/2,0`).
pub fn parse_vector(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|x| x.trim().parse::<Rat>().map_err(|_| Error::Parse(format!("not a rational: `{x}`"))))
        .collect()
}

/// Comma-separated non-negative integers.
pub fn parse_composition(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("not a part: `{x}`"))))
        .collect()
}

fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn no_csv(what: &str) -> Error {
    Error::Usage(format!("CSV output is only available for eigen and gram, not {what}"))
}

pub fn cmd_describe(rc: &RunConfig) -> Result<Outcome> {
    let rs = parse_system(rc.family.as_deref(), rc.rank)?;
    let v = |x: &[Rat]| x.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    let mut roots: Vec<Vec<String>> = rs.roots().map(|r| v(r)).collect();
    roots.sort();
    let report = json!({
        "family": rs.family.to_string(),
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "simple_roots": rs.simple_roots.iter().map(|r| v(&r.coords)).collect::<Vec<_>>(),
        "positive_roots": rs.positive_roots.iter().map(|r| v(&r.coords)).collect::<Vec<_>>(),
        "root_count": roots.len(),
        "roots": roots,
        "highest_roots": rs.component_highest_roots().iter().map(|r| v(&r.coords)).collect::<Vec<_>>(),
        "fundamental_coweights": rs.fundamental_coweights().iter().map(|w| v(&w.coords)).collect::<Vec<_>>(),
        "minuscule_weights": rs.minuscule_weights().iter().map(|w| v(&w.coords)).collect::<Vec<_>>(),
        "braid_orders": rs.braid_orders,
    });
    match rc.format {
        Format::Json => Ok(Outcome::ok(render_json(&report))),
        Format::Csv => Err(no_csv("describe")),
        Format::Text => {
            let mut out = format!("{}\n", rs.canonical_text());
            out += &format!("positive roots ({}):\n", rs.positive_roots.len());
            for r in &rs.positive_roots {
                out += &format!("  {}\n", fmt_vec(&r.coords));
            }
            for h in rs.component_highest_roots() {
                out += &format!("highest root: {}\n", fmt_vec(&h.coords));
            }
            for w in rs.minuscule_weights() {
                out += &format!("minuscule: {}\n", fmt_vec(&w.coords));
            }
            for (i, row) in rs.braid_orders.iter().enumerate() {
                for (j, m) in row.iter().enumerate().skip(i + 1) {
                    out += &format!("m({},{}) = {m}\n", i + 1, j + 1);
                }
            }
            Ok(Outcome::ok(out))
        }
    }
}

pub fn cmd_walk(rc: &RunConfig) -> Result<Outcome> {
    let rs = parse_system(rc.family.as_deref(), rc.rank)?;
    let xi = parse_vector(rc.xi.as_deref().ok_or_else(|| Error::Usage("--xi is required".into()))?)?;
    if xi.len() != rs.ambient_dim {
        return Err(Error::DimensionMismatch { expected: rs.ambient_dim, found: xi.len() });
    }
    let word = geodesic_word(&rs, &xi)?;
    match rc.format {
        Format::Json => Ok(Outcome::ok(render_json(&word.to_json()))),
        Format::Csv => Err(no_csv("walk")),
        Format::Text => {
            let toks: Vec<String> = word
                .tokens
                .iter()
                .map(|t| match t {
                    Token::Reflect { root, level } => format!("x[{}]@{level}", fmt_vec(root)),
                    Token::Translate(a) => format!("t[{}]", fmt_vec(a)),
                })
                .collect();
            Ok(Outcome::ok(format!(
                "xi = {}  reflections = {}\n{}\n",
                fmt_vec(&xi),
                word.reflection_count,
                toks.join(" ")
            )))
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Usage(format!("--{flag} is required")))
}

/// Run a suite by name.
pub fn run_suite(rc: &RunConfig) -> Result<SuiteReport> {
    let suite = rc.suite.as_deref().ok_or_else(|| Error::Usage("--suite is required".into()))?;
    let rs = || parse_system(rc.family.as_deref(), rc.rank);
    let d = rc.d;
    let n = || need(rc.n, "n");
    let degree = || -> Result<u32> { Ok(rc.degree.unwrap_or(d.max(0) as u32)) };
    let kappa = || -> Result<u32> { Ok(rc.kappa.unwrap_or(1)) };
    match suite {
        "quadratic" => verify::quadratic_suite(&rs()?, d),
        "braid" => verify::braid_suite(&rs()?, d),
        "yang-baxter" => verify::yang_baxter_suite(&rs()?),
        "unitarity" => verify::unitarity_suite(&rs()?, d),
        "affine-hecke" => verify::affine_hecke_suite(&rs()?, d),
        "commute" => {
            let rs = rs()?;
            let mut rep = verify::commute_suite(&rs, d)?;
            let choice = verify::choice_independence_suite(&rs, d)?;
            rep.cases += choice.cases;
            rep.failures.extend(choice.failures);
            rep.notes.extend(choice.notes);
            Ok(rep)
        }
        "bernstein" => {
            let rs = rs()?;
            let xis = match rc.xi.as_deref() {
                Some(x) => vec![parse_vector(x)?],
                None => verify::bernstein_targets(&rs),
            };
            verify::bernstein_suite(&rs, &xis, d)
        }
        "exchange" => verify::exchange_suite(n()?, degree()?),
        "center" => verify::center_suite(n()?, degree()?),
        "adjoint" => verify::adjoint_suite(n()?, kappa()?, degree()?),
        "triangularity" => verify::triangularity_suite(n()?, degree()?),
        "eigen" => verify::eigen_suite(n()?, degree()?),
        "orthogonality" => verify::orthogonality_suite(n()?, kappa()?, degree()?),
        other => Err(Error::Usage(format!(
            "unknown suite `{other}`; expected one of {}",
            verify::SUITES.join(", ")
        ))),
    }
}

pub fn cmd_verify(rc: &RunConfig) -> Result<Outcome> {
    let rep = run_suite(rc)?;
    let code = if rep.passed() { 0 } else { 1 };
    let text = match rc.format {
        Format::Json => render_json(&rep.to_json()),
        Format::Csv => return Err(no_csv("verify")),
        Format::Text => {
            let mut s = format!(
                "{}: {} ({} cases, {} failures)\n",
                rep.suite,
                if rep.passed() { "PASS" } else { "FAIL" },
                rep.cases,
                rep.failures.len()
            );
            for n in &rep.notes {
                s += &format!("note: {n}\n");
            }
            for f in &rep.failures {
                s += &format!("failure: {f}\n");
            }
            s
        }
    };
    Ok(Outcome { text, code })
}

fn spectral_records(rc: &RunConfig) -> Result<Vec<SpectralRecord>> {
    let comps: Vec<Vec<u32>> = match (&rc.composition, &rc.partition) {
        (Some(c), None) => vec![parse_composition(c)?],
        (None, Some(p)) => {
            let p = parse_composition(p)?;
            if partition_of(&p) != p {
                return Err(Error::Usage(format!("{p:?} is not a partition (weakly decreasing)")));
            }
            orbit(p.len(), &p)
        }
        _ => return Err(Error::Usage("exactly one of --partition or --composition is required".into())),
    };
    if let (Some(n), Some(k)) = (rc.n, comps.first()) {
        if n != k.len() {
            return Err(Error::DimensionMismatch { expected: n, found: k.len() });
        }
    }
    let spec = rc.kappa.map(|kappa| Specialization { kappa });
    comps.iter().map(|k| eigenfunction_with(k, spec)).collect()
}

pub fn cmd_eigen(rc: &RunConfig) -> Result<Outcome> {
    let recs = spectral_records(rc)?;
    let text = match rc.format {
        Format::Json => render_json(&Value::Array(recs.iter().map(|r| r.to_json()).collect())),
        Format::Csv => {
            let n = recs.first().map_or(0, |r| r.composition.len());
            let mut head = vec!["composition".to_string()];
            head.extend((1..=n).map(|j| format!("lambda_{j}")));
            head.extend((1..=n).map(|l| format!("e_{l}")));
            head.push("eigenfunction".into());
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(&head).map_err(csv_err)?;
            for r in &recs {
                let mut row = vec![r.composition.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")];
                row.extend(r.multiplet.iter().map(|x| x.to_string()));
                row.extend(r.hamiltonian_values.iter().map(|x| x.to_string()));
                row.push(r.eigenfunction.to_string());
                w.write_record(&row).map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?).expect("utf8")
        }
        Format::Text => recs
            .iter()
            .map(|r| {
                let m: Vec<String> = r.multiplet.iter().map(|x| x.to_string()).collect();
                format!("E{:?}: multiplet ({})\n  {}\n", r.composition, m.join(", "), r.eigenfunction)
            })
            .collect(),
    };
    Ok(Outcome::ok(text))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn cmd_gram(rc: &RunConfig) -> Result<Outcome> {
    let n = need(rc.n, "n")?;
    let kappa = rc.kappa.unwrap_or(1);
    let degree = rc.degree.unwrap_or(1);
    let g = gram_matrix(n, kappa, degree)?;
    let label = |k: &[u32]| k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let text = match rc.format {
        Format::Json => render_json(&json!({
            "n": n,
            "kappa": kappa,
            "degree": degree,
            "variable": "s = t^(1/2)",
            "compositions": g.compositions,
            "entries": g.entries.iter().map(|row| row.iter().map(s_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "warnings": g.warnings,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            let mut head = vec![String::new()];
            head.extend(g.compositions.iter().map(|k| label(k)));
            w.write_record(&head).map_err(csv_err)?;
            for (k, row) in g.compositions.iter().zip(&g.entries) {
                let mut r = vec![label(k)];
                r.extend(row.iter().map(s_string));
                w.write_record(&r).map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?).expect("utf8")
        }
        Format::Text => {
            let mut s = String::new();
            for (k, row) in g.compositions.iter().zip(&g.entries) {
                let cells: Vec<String> = row.iter().map(s_string).collect();
                s += &format!("[{}] {}\n", label(k), cells.join(" | "));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

/// Machine-readable error record and its exit code.
pub fn error_outcome(e: &Error, format: Format) -> Outcome {
    let (kind, code) = match e {
        Error::Usage(_) | Error::Parse(_) | Error::UnsupportedRootSystem { .. } | Error::DimensionMismatch { .. } => {
            ("usage", 2)
        }
        Error::Degeneracy(..) => ("degeneracy", 1),
        Error::NonGeneric { .. } => ("non-generic", 1),
        _ => ("error", 1),
    };
    let text = match format {
        Format::Json => render_json(&json!({"error": {"kind": kind, "message": e.to_string()}})),
        _ => format!("error ({kind}): {e}\n"),
    };
    Outcome { text, code }
}

/// Resolve the config file, dispatch, and render errors; never panics on bad input.
pub fn run(cli: &Cli) -> Outcome {
    let file = match &cli.common.config {
        Some(p) => match std::fs::read_to_string(p).map_err(Error::from).and_then(|t| FileConfig::parse(&t)) {
            Ok(f) => f,
            Err(e) => return error_outcome(&e, cli.common.format.unwrap_or(Format::Json)),
        },
        None => FileConfig::default(),
    };
    let rc = RunConfig::resolve(cli, file);
    let res = match rc.command.as_str() {
        "describe" => cmd_describe(&rc),
        "walk" => cmd_walk(&rc),
        "verify" => cmd_verify(&rc),
        "eigen" => cmd_eigen(&rc),
        _ => cmd_gram(&rc),
    };
    let out = res.unwrap_or_else(|e| error_outcome(&e, rc.format));
    match &rc.output {
        Some(path) => match std::fs::write(path, &out.text) {
            Ok(()) => Outcome { text: String::new(), code: out.code },
            Err(e) => error_outcome(&Error::from(e), rc.format),
        },
        None => out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Outcome {
        let mut full = vec!["scatter"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).expect("clap accepts"))
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.text).unwrap()
    }

    #[test]
    fn describe_a2_lists_three_positive_roots() {
        let o = exec(&["describe", "--type", "A", "--rank", "2"]);
        assert_eq!(o.code, 0);
        assert_eq!(json_of(&o)["positive_roots"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn describe_g2_reports_order_six() {
        let v = json_of(&exec(&["describe", "--type", "G", "--rank", "2"]));
        assert_eq!(v["braid_orders"][0][1], 6);
    }

    #[test]
    fn describe_bad_family_is_usage_error() {
        let o = exec(&["describe", "--type", "Z", "--rank", "1"]);
        assert_eq!(o.code, 2);
        assert_eq!(json_of(&o)["error"]["kind"], "usage");
    }

    #[test]
    fn type_spellings() {
        assert_eq!(parse_system(Some("B2"), None).unwrap().rank, 2);
        assert_eq!(parse_system(Some("g2"), None).unwrap().braid_orders[0][1], 6);
        assert_eq!(parse_system(Some("A1xA1"), None).unwrap().positive_roots.len(), 2);
        assert!(parse_system(Some("B2"), Some(3)).is_err());
        assert!(parse_system(Some("A"), None).is_err());
    }

    #[test]
    fn walk_examples() {
        let v = json_of(&exec(&["walk", "--type", "A2", "--xi", "-1,0,0"]));
        let reflect = |v: &Value| v["tokens"].as_array().unwrap().iter().filter(|t| t["kind"] == "reflect").count();
        assert_eq!(reflect(&v), 2);
        let v = json_of(&exec(&["walk", "--type", "A2", "--xi", "0,0,0"]));
        assert!(v["tokens"].as_array().unwrap().is_empty());
        let v = json_of(&exec(&["walk", "--type", "B2", "--xi", "1,1"]));
        assert_eq!(reflect(&v), 4);
    }

    #[test]
    fn walk_rejects_non_coweight() {
        let o = exec(&["walk", "--type", "A2", "--xi", "1/2,0,0"]);
        assert_ne!(o.code, 0);
    }

    #[test]
    fn verify_examples() {
        assert_eq!(exec(&["verify", "--suite", "quadratic", "--type", "A", "--rank", "3", "-d", "2"]).code, 0);
        assert_eq!(exec(&["verify", "--suite", "yang-baxter", "--type", "B2"]).code, 0);
        assert_eq!(exec(&["verify", "--suite", "exchange", "--n", "3", "-d", "3"]).code, 0);
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        assert_eq!(exec(&["verify", "--suite", "nope", "--type", "A2"]).code, 2);
    }

    #[test]
    fn eigen_examples() {
        let v = json_of(&exec(&["eigen", "--n", "2", "--partition", "1,0"]));
        let recs = v.as_array().unwrap();
        assert_eq!(recs.len(), 2);
        for r in recs {
            let mut m: Vec<String> = r["multiplet"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().into()).collect();
            m.sort();
            assert_eq!(m, vec!["q*t".to_string(), "q^-1".to_string()]);
        }
        let v = json_of(&exec(&["eigen", "--n", "2", "--partition", "0,0"]));
        assert_eq!(v[0]["eigenfunction_text"], "1");
    }

    #[test]
    fn gram_off_diagonal_zero() {
        let v = json_of(&exec(&["gram", "--n", "2", "--kappa", "1", "--degree", "1"]));
        let e = v["entries"].as_array().unwrap();
        for (i, row) in e.iter().enumerate() {
            for (j, x) in row.as_array().unwrap().iter().enumerate() {
                assert_eq!(x == "0", i != j, "entry ({i},{j}) = {x}");
            }
        }
    }

    #[test]
    fn gram_csv_has_header_row() {
        let o = exec(&["gram", "--n", "2", "--kappa", "1", "--degree", "1", "--format", "csv"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.text.lines().count(), 4);
    }

    #[test]
    fn csv_refused_for_describe() {
        assert_eq!(exec(&["describe", "--type", "A2", "--format", "csv"]).code, 2);
    }

    #[test]
    fn deterministic_output() {
        let a = exec(&["eigen", "--n", "3", "--partition", "1,0,0"]);
        let b = exec(&["eigen", "--n", "3", "--partition", "1,0,0"]);
        assert_eq!(a, b);
    }

    #[test]
    fn flags_override_config() {
        let file = FileConfig::parse("type = \"B\"\nrank = 3\nd = 1\n").unwrap();
        let cli = Cli::try_parse_from(["scatter", "verify", "--suite", "braid", "--rank", "2"]).unwrap();
        let rc = RunConfig::resolve(&cli, file);
        assert_eq!(rc.family.as_deref(), Some("B"));
        assert_eq!(rc.rank, Some(2));
        assert_eq!(rc.d, 1);
        assert!(FileConfig::parse("bogus = 1").is_err());
    }
}
