//! Command-line front end shared by the `atomlab` binary and the tests.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::FieldSpec;
use crate::bc::{weak_accp_divisor_bc, KPoly};
use crate::chain::{accp_element, classify, effective_depth, validate_chain};
use crate::error::{Error, Result};
use crate::exact::{PrimeSeq, Rational};
use crate::monoid::{Family, Kernel, MonoidValue, Presentation, DEFAULT_BUDGET};
use crate::report::{verify_paper, DEFAULT_DEPTH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Parser)]
#[command(name = "atomlab", version, about = "Atoms, ACCP and weak-ACCP in Puiseux monoids and their algebras")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// explicit, grams, gp, cyclic-sq, pair-primes, rank-two-p, intersect-g, zaks
    #[arg(long, global = true)]
    pub family: Option<String>,
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// QQ or GF(p)
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON file whose fields override the flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Excluded prime of `gp`
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Ratio of `cyclic-sq`
    #[arg(long, global = true)]
    pub q: Option<String>,
    /// Side (1 or 2) of `intersect-g`
    #[arg(long, global = true)]
    pub side: Option<u8>,
    /// Comma-separated generators of `explicit`
    #[arg(long, global = true)]
    pub gens: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership of a value in the truncated monoid
    Member {
        #[arg(long)]
        value: String,
    },
    /// Atoms of the truncated monoid
    Atoms,
    /// Factorizations and length set of a value
    Factorize {
        #[arg(long)]
        value: String,
    },
    /// ACCP / weak-ACCP / strongly atomic / atomic flags
    Classify,
    /// ACCP verdict for one element, with its chain certificate
    Chain {
        #[arg(long)]
        value: String,
    },
    /// The pullback domain over Q(x, y)
    Bc {
        #[command(subcommand)]
        command: BcCommand,
    },
    /// Runs every anchored check and reports pass/fail per quote
    VerifyPaper {
        #[arg(long, hide = true)]
        corrupt_expectation: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BcCommand {
    /// Common divisor d of a finite set W with one ACCP quotient
    WeakAccpDivisor {
        /// JSON list of polynomials, each a list of coefficients from degree 0
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    family: Option<String>,
    depth: Option<usize>,
    budget: Option<u64>,
    field: Option<String>,
    format: Option<Format>,
    p: Option<u64>,
    q: Option<String>,
    side: Option<u8>,
    gens: Option<Vec<String>>,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: msg }
    }
}

struct Settings {
    family: Option<String>,
    depth: usize,
    budget: u64,
    field: FieldSpec,
    format: Format,
    p: u64,
    q: Rational,
    side: u8,
    gens: Option<Vec<String>>,
}

fn resolve(opts: &GlobalOpts) -> Result<Settings> {
    let cfg = match &opts.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            serde_json::from_str::<ConfigFile>(&text).map_err(|e| Error::Config(e.to_string()))?
        }
        None => ConfigFile::default(),
    };
    let field = match cfg.field.as_ref().or(opts.field.as_ref()) {
        Some(s) => s.parse::<FieldSpec>()?,
        None => FieldSpec::Rationals,
    };
    let q = match cfg.q.as_ref().or(opts.q.as_ref()) {
        Some(s) => s.parse::<Rational>()?,
        None => Rational::new(2, 3),
    };
    let gens = cfg.gens.or_else(|| opts.gens.as_ref().map(|g| g.split(',').map(|s| s.trim().to_string()).collect()));
    Ok(Settings {
        family: cfg.family.or_else(|| opts.family.clone()),
        depth: cfg.depth.or(opts.depth).unwrap_or(DEFAULT_DEPTH),
        budget: cfg.budget.or(opts.budget).unwrap_or(DEFAULT_BUDGET),
        field,
        format: cfg.format.or(opts.format).unwrap_or(Format::Json),
        p: cfg.p.or(opts.p).unwrap_or(2),
        q,
        side: cfg.side.or(opts.side).unwrap_or(1),
        gens,
    })
}

/// Builds a presentation from a family name; `-`, `_` and case are ignored.
pub fn presentation_from_name(
    name: &str,
    depth: usize,
    p: u64,
    q: &Rational,
    side: u8,
    gens: Option<&[String]>,
) -> Result<Presentation> {
    let key: String = name.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
    let family = match key.as_str() {
        "grams" => Family::Grams { primes: PrimeSeq::OddPrimes },
        "gp" => Family::Gp { p },
        "cyclicsq" | "sq" => Family::CyclicSq { q: q.clone() },
        "pairprimes" => Family::PairPrimes,
        "ranktwop" | "ranktwo" => Family::RankTwoP,
        "intersectg" => Family::IntersectG { side },
        "zaks" => Family::Zaks,
        "explicit" => {
            let gens = gens.ok_or_else(|| Error::Config("explicit family needs --gens".into()))?;
            let parsed = gens.iter().map(|g| g.parse::<Rational>()).collect::<std::result::Result<Vec<_>, _>>()?;
            return Presentation::explicit(parsed);
        }
        _ => return Err(Error::Config(format!("unknown family {name}"))),
    };
    Presentation::new(family, depth)
}

impl Settings {
    fn presentation(&self) -> Result<Presentation> {
        let name = self.family.as_deref().ok_or_else(|| Error::Config("--family is required".into()))?;
        presentation_from_name(name, self.depth, self.p, &self.q, self.side, self.gens.as_deref())
    }

    fn header(&self, command: &str, pres: Option<&Presentation>) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("command".into(), json!(command));
        if let Some(p) = pres {
            m.insert("family".into(), json!(p.family_name()));
            m.insert("depth".into(), json!(p.depth));
        }
        m.insert("budget".into(), json!(self.budget));
        m.insert("field".into(), json!(self.field.to_string()));
        m
    }
}

fn unknown_on_budget<T>(r: Result<T>, f: impl FnOnce(T) -> Value) -> Result<Value> {
    match r {
        Ok(v) => Ok(f(v)),
        Err(Error::BudgetExhausted(_)) => Ok(json!("unknown")),
        Err(e) => Err(e),
    }
}

fn parse_value(pres: &Presentation, s: &str) -> Result<MonoidValue> {
    let v: MonoidValue = s.parse()?;
    pres.check_tag(&v)?;
    Ok(v)
}

fn render(format: Format, v: &Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Format::Md => {
            let mut out = String::from("| key | value |\n|---|---|\n");
            if let Value::Object(m) = v {
                for (k, val) in m {
                    let cell = match val {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("| {k} | {} |\n", cell.replace('|', "\\|")));
                }
            }
            out
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let s = resolve(&cli.opts)?;
    let value = match &cli.command {
        Command::Member { value } => {
            let pres = s.presentation()?;
            let kernel = Kernel::new(&pres)?.with_budget(s.budget);
            let v = parse_value(&pres, value)?;
            let mut m = s.header("member", Some(&pres));
            m.insert("value".into(), json!(v.to_string()));
            m.insert("member".into(), unknown_on_budget(kernel.member(&v), |b| json!(b))?);
            m.insert("member_full".into(), unknown_on_budget(kernel.member_full(&v), |b| json!(b))?);
            Value::Object(m)
        }
        Command::Atoms => {
            let pres = s.presentation()?;
            let kernel = Kernel::new(&pres)?.with_budget(s.budget);
            let mut m = s.header("atoms", Some(&pres));
            m.insert(
                "atoms".into(),
                unknown_on_budget(kernel.atoms(), |a| json!(a.iter().map(ToString::to_string).collect::<Vec<_>>()))?,
            );
            Value::Object(m)
        }
        Command::Factorize { value } => {
            let pres = s.presentation()?;
            let kernel = Kernel::new(&pres)?.with_budget(s.budget);
            let v = parse_value(&pres, value)?;
            let mut m = s.header("factorize", Some(&pres));
            m.insert("value".into(), json!(v.to_string()));
            let facts = unknown_on_budget(kernel.factorizations(&v), |fs| {
                json!(fs
                    .iter()
                    .map(|f| f.atoms.iter().map(|(a, c)| (a.to_string(), json!(c))).collect::<serde_json::Map<_, _>>())
                    .collect::<Vec<_>>())
            })?;
            m.insert("factorizations".into(), facts);
            m.insert("length_set".into(), unknown_on_budget(kernel.length_set(&v), |l| json!(l))?);
            Value::Object(m)
        }
        Command::Classify => {
            let pres = s.presentation()?;
            let c = classify(&pres, s.budget)?;
            let mut m = s.header("classify", Some(&pres));
            for (k, f) in [("accp", &c.accp), ("weak_accp", &c.weak_accp), ("strongly_atomic", &c.strongly_atomic), ("atomic", &c.atomic)] {
                m.insert(k.into(), json!(f.value));
                m.insert(format!("{k}_evidence"), json!(f.evidence));
            }
            Value::Object(m)
        }
        Command::Chain { value } => {
            let pres = s.presentation()?;
            let v = parse_value(&pres, value)?;
            let verdict = accp_element(&pres, &v, s.budget)?;
            let mut m = s.header("chain", Some(&pres));
            m.insert("value".into(), json!(v.to_string()));
            m.insert("verdict".into(), serde_json::to_value(&verdict).expect("serializable"));
            if let Some(cert) = verdict.certificate() {
                let ok = validate_chain(&pres.with_depth(effective_depth(&pres, &v)), cert);
                m.insert("certificate_valid".into(), json!(ok));
            }
            Value::Object(m)
        }
        Command::Bc { command: BcCommand::WeakAccpDivisor { input } } => {
            let text = fs::read_to_string(input).map_err(|e| Error::Config(format!("{}: {e}", input.display())))?;
            let ws = parse_w(&text)?;
            let r = weak_accp_divisor_bc(&ws)?;
            let mut m = s.header("bc weak-accp-divisor", None);
            m.insert("W".into(), json!(ws.iter().map(ToString::to_string).collect::<Vec<_>>()));
            m.insert("d_text".into(), json!(r.d.to_string()));
            if let Value::Object(rep) = serde_json::to_value(&r).expect("serializable") {
                m.extend(rep);
            }
            Value::Object(m)
        }
        Command::VerifyPaper { corrupt_expectation } => {
            let report = verify_paper(s.depth, s.budget, corrupt_expectation.as_deref());
            let text = match s.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                Format::Md => report.to_markdown(),
            };
            let code = if report.has_failures() { 1 } else { 0 };
            return Ok(Outcome { code, stdout: text, stderr: String::new() });
        }
    };
    Ok(Outcome::ok(render(s.format, &value)))
}

/// Accepts `[[c0, c1, …], …]` or `{"W": [[…], …]}`.
fn parse_w(text: &str) -> Result<Vec<KPoly>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Input {
        List(Vec<KPoly>),
        Wrapped {
            #[serde(rename = "W")]
            w: Vec<KPoly>,
        },
    }
    let input: Input = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    Ok(match input {
        Input::List(w) | Input::Wrapped { w } => w,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::usage(text) };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}
