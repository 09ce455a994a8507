//! The `mcgkit` command line. Every command prints one JSON document on
//! standard output. Exit status 0 on success, 1 on a domain error, 2 on
//! malformed input; errors are printed as `{"error": {"kind", "message"}}`.

pub mod io;
pub mod verify;

use crate::cell_surface::{pants_curves_on, CellSurface};
use crate::curve_engine::{dehn_twist, homology_class, intersection_number, is_essential, is_generic, Curve};
use crate::error::Error;
use crate::fixtures::curve_classes;
use crate::mcg_algebra::TwistWord;
use crate::structure::{centre, centre_relations, classification_report};
use crate::SurfaceSpec;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;
use verify::Property;

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Malformed(m),
            e => CliError::Domain(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Malformed(_) => 2,
        }
    }

    pub fn to_value(&self) -> Value {
        let (kind, message) = match self {
            CliError::Malformed(m) => ("malformed-input", m.clone()),
            CliError::Domain(e) => (e.kind(), e.to_string()),
        };
        json!({"error": {"kind": kind, "message": message}})
    }
}

#[derive(Debug, Parser)]
#[command(name = "mcgkit", version, about = "Curves, Dehn twists and subsurface classification on punctured surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SpecArgs {
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
    #[arg(long, default_value_t = 0)]
    pub boundary: usize,
    #[arg(long, default_value_t = 0)]
    pub punctures: usize,
}

impl SpecArgs {
    fn spec(self) -> SurfaceSpec {
        SurfaceSpec::new(self.genus, self.boundary, self.punctures)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the canonical model of a surface, or describe one read from a file.
    Surface {
        #[command(flatten)]
        spec: SpecArgs,
        /// Cap every boundary circle with a one-holed torus.
        #[arg(long)]
        hat: bool,
        #[arg(long, conflicts_with = "hat")]
        file: Option<PathBuf>,
    },
    /// Describe a curve, or list curves on a canonical model.
    Curve {
        #[arg(required_unless_present_any = ["list", "pants"])]
        file: Option<PathBuf>,
        /// Remove trivial back-and-forth crossings first.
        #[arg(long)]
        reduce: bool,
        /// List essential curves up to isotopy with at most this many crossings.
        #[arg(long, conflicts_with = "file")]
        list: Option<usize>,
        /// List the curves of the standard pants decomposition.
        #[arg(long, conflicts_with_all = ["file", "list"])]
        pants: bool,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Geometric intersection number of two curves.
    Isect { a: PathBuf, b: PathBuf },
    /// Apply a twist power, or a twist word over a registry, to a curve.
    Twist {
        curve: Option<PathBuf>,
        #[arg(long, conflicts_with_all = ["registry", "word"])]
        along: Option<PathBuf>,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
        /// `{"surface": .., "curves": {"A": [..], ..}}`.
        #[arg(long, requires = "word")]
        registry: Option<PathBuf>,
        /// Letters `name^exp`; the rightmost acts first.
        #[arg(long, requires = "registry", allow_hyphen_values = true)]
        word: Option<String>,
        /// Report whether the word acts as the identity instead of applying it.
        #[arg(long, requires = "word")]
        identity: bool,
    },
    /// Injectivity, kernel, centre, commensurability and stabilizer report.
    Classify {
        config: PathBuf,
        /// A second subsurface of the same surface to compare with.
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Centre of the mapping class group.
    Centre {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also print relations tying half-twist generators to boundary twists.
        #[arg(long)]
        relations: bool,
    },
    /// Seeded property checks over curve-pair fixtures.
    Verify {
        property: Property,
        #[arg(long, default_value_t = verify::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// `builtin` or a pairs file.
        #[arg(long, default_value = "builtin")]
        fixtures: String,
    },
}

fn surface_value(s: &CellSurface) -> Value {
    let spec = s.spec();
    json!({
        "surface": s.to_json(),
        "spec": spec,
        "euler_characteristic": s.euler_characteristic(),
        "complexity": spec.complexity(),
    })
}

fn words(cs: &[Curve]) -> Value {
    cs.iter().map(|c| json!(c.word())).collect()
}

fn describe_curve(c: &Curve) -> Result<Value, CliError> {
    Ok(json!({
        "curve": c.to_json(),
        "crossings": c.len(),
        "essential": is_essential(c)?,
        "generic": is_generic(c)?,
        "homology": homology_class(c),
    }))
}

pub fn execute(cmd: Command) -> Result<Value, CliError> {
    match cmd {
        Command::Surface { spec, hat, file } => {
            let s = match file {
                Some(f) => io::surface_from(&io::read_json(&f)?)?,
                None => io::canonical(spec.genus, spec.boundary, spec.punctures, hat),
            };
            Ok(surface_value(&s))
        }
        Command::Curve { file: Some(f), reduce, .. } => {
            let c = io::curve_file(&f)?;
            describe_curve(&if reduce { c.simplify() } else { c })
        }
        Command::Curve { list, pants, spec, .. } => {
            let s = io::canonical(spec.genus, spec.boundary, spec.punctures, false);
            let cs = if pants {
                pants_curves_on(&s)?
            } else {
                curve_classes(&s, list.unwrap_or(crate::fixtures::FIXTURE_LENGTH))?
            };
            Ok(json!({"surface": s.to_json(), "curves": words(&cs)}))
        }
        Command::Isect { a, b } => {
            let a = io::curve_file(&a)?;
            let b = io::curve_file(&b)?;
            Ok(json!({"i": intersection_number(&a, &b)?}))
        }
        Command::Twist { curve, along, power, registry, word, identity } => {
            if let (Some(r), Some(w)) = (registry, word) {
                let reg = io::registry_file(&r)?;
                let built = TwistWord::parse(&reg, &w)?;
                if identity {
                    return Ok(json!({
                        "word": built.word.to_string(),
                        "identity": built.word.is_identity()?,
                        "warnings": built.warnings,
                    }));
                }
                let f = curve.ok_or_else(|| CliError::Malformed("twist needs a curve to act on".into()))?;
                let c = io::curve_from(&io::read_json(&f)?, Some(reg.host()))?;
                let image = built.word.act(&c)?;
                return Ok(json!({"curve": image.to_json(), "warnings": built.warnings}));
            }
            let along = along.ok_or_else(|| CliError::Malformed("twist needs --along or --registry".into()))?;
            let f = curve.ok_or_else(|| CliError::Malformed("twist needs a curve to act on".into()))?;
            let a = io::curve_file(&along)?;
            let c = io::curve_from(&io::read_json(&f)?, Some(a.host()))?;
            Ok(json!({"curve": dehn_twist(&c, &a, power)?.to_json()}))
        }
        Command::Classify { config, other } => {
            let n = io::config_from(&io::read_json(&config)?, None)?;
            let host = n.concrete_part().ok().map(|x| x.host.clone());
            let n2 = match other {
                Some(f) => Some(io::config_from(&io::read_json(&f)?, host.as_ref())?),
                None => None,
            };
            Ok(classification_report(&n, n2.as_ref())?)
        }
        Command::Centre { spec, relations } => {
            let s = spec.spec();
            let mut v = json!({"centre": centre(s)});
            if relations {
                v["relations"] = json!(centre_relations(s));
            }
            Ok(v)
        }
        Command::Verify { property, trials, seed, fixtures } => {
            Ok(serde_json::to_value(verify::run(property, trials, seed, &fixtures)?).expect("reports serialize"))
        }
    }
}

/// What a run prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome { code: 0, stdout: text, stderr: String::new() },
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let (code, v) = match execute(cli.command) {
        Ok(v) => (0, v),
        Err(e) => (e.exit_code(), e.to_value()),
    };
    Outcome { code, stdout: format!("{v}\n"), stderr: String::new() }
}
