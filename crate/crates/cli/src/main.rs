use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use prelog::engine::{
    analyze, divisibility_query, friedman_check, is_prelog_class, membership_query, prelog_group,
    serialize_report, DiagramMatrices, FriedmanResult, PrelogReport,
};
use prelog::exec::Execution;
use prelog::gallery::{self, find_generating_indices, EXAMPLE_NAMES};
use prelog::lattice::GroupElement;
use prelog::snc::{self, ClassTuple, CycleDocument, Document, SncComplex};

mod render;

#[derive(Parser)]
#[command(name = "prelog", version, about = "Prelog Chow groups of SNC surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A complex or raw diagram from a file, standard input (`-`), or the
/// gallery.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Input document, or `-` for standard input.
    file: Option<String>,
    /// Use a built-in example instead of a file.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(EXAMPLE_NAMES))]
    example: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the prelog group and its saturation.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Read the input as raw matrices.
        #[arg(long)]
        raw: bool,
        /// Add the rank over the field with this many elements.
        #[arg(long = "char", value_name = "P")]
        chars: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Test labelled cycles for the prelog condition.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Numerical Friedman condition on every pair curve; exits 1 if any fails.
    Friedman {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print or write a built-in complex.
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXAMPLE_NAMES))]
        name: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The 27 line cycles of the cubic degeneration.
    Lines {
        /// Search for this many lines spanning a saturated sublattice.
        #[arg(long, value_name = "K")]
        find_generators: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Express a target class through generator classes in coker delta.
    Member {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        generators: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Divide a class by a positive integer inside the saturated lattice.
    Divide {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, value_name = "R", allow_hyphen_values = true)]
        by: BigInt,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Domain failure; reported on stderr with exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

struct Loaded {
    complex: Option<SncComplex>,
    diagram: DiagramMatrices,
}

impl Loaded {
    fn report(&self) -> Result<PrelogReport, Failure> {
        Ok(match &self.complex {
            Some(c) => analyze(c)?,
            None => prelog_group(&self.diagram)?,
        })
    }
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure(format!("cannot read standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read `{path}`: {e}")))
    }
}

fn read_path(path: &Path) -> Result<String, Failure> {
    read_text(&path.to_string_lossy())
}

fn load(input: &Input, raw: bool) -> Result<Loaded, Failure> {
    let doc = match (&input.example, &input.file) {
        (Some(name), _) => {
            if raw {
                return Err(Failure("--raw cannot be combined with --example".into()));
            }
            Document::Complex(gallery::by_name(name).expect("validated by clap"))
        }
        (None, Some(path)) => {
            let text = read_text(path)?;
            if raw {
                Document::Raw(snc::parse_raw(&text)?)
            } else {
                snc::parse_document(&text)?
            }
        }
        (None, None) => unreachable!("clap requires an input"),
    };
    Ok(match doc {
        Document::Complex(c) => Loaded {
            diagram: DiagramMatrices::from_complex(&c)?,
            complex: Some(c),
        },
        Document::Raw(r) => Loaded {
            diagram: DiagramMatrices::from_raw(&r)?,
            complex: None,
        },
    })
}

fn load_cycles(path: &Path) -> Result<CycleDocument, Failure> {
    Ok(snc::parse_cycles(&read_path(path)?)?)
}

fn single_cycle(path: &Path) -> Result<(String, ClassTuple), Failure> {
    let mut doc = load_cycles(path)?;
    if doc.cycles.len() != 1 {
        return Err(Failure(format!(
            "`{}` must contain exactly one cycle, found {}",
            path.display(),
            doc.cycles.len()
        )));
    }
    let c = doc.cycles.remove(0);
    Ok((c.label, c.vector))
}

fn print_json<T: Serialize>(value: &T) {
    let v = serde_json::to_value(value).expect("serializable");
    println!(
        "{}",
        serde_json::to_string_pretty(&v).expect("serializable")
    );
}

#[derive(Serialize)]
struct CycleCheck {
    label: String,
    prelog: bool,
    class: GroupElement,
}

#[derive(Serialize)]
struct LineEntry {
    label: String,
    prelog: bool,
    vector: ClassTuple,
    class: GroupElement,
}

#[derive(Serialize)]
struct LinesOutput {
    lines: Vec<LineEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generating_subset: Option<Option<Vec<String>>>,
}

#[derive(Serialize)]
struct MemberOutput {
    target: String,
    member: bool,
    #[serde(with = "prelog::json_int::vec")]
    coefficients: Vec<BigInt>,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct DivideOutput {
    target: String,
    #[serde(with = "prelog::json_int::one")]
    divisor: BigInt,
    divisible: bool,
    #[serde(with = "prelog::json_int::vec")]
    quotient: Vec<BigInt>,
}

#[derive(Serialize)]
struct FriedmanOutput {
    pairs: Vec<FriedmanResult>,
    all_pass: bool,
}

fn compute(input: &Input, raw: bool, chars: &[u64], format: Format) -> Outcome {
    let loaded = load(input, raw)?;
    let mut report = loaded.report()?;
    report.add_modular_ranks(chars, Execution::default())?;
    match format {
        Format::Json => print!("{}", serialize_report(&report)),
        Format::Text => print!("{}", render::report_text(&report)),
    }
    Ok(ExitCode::SUCCESS)
}

fn check(input: &Input, raw: bool, cycle: &Path, format: Format) -> Outcome {
    let loaded = load(input, raw)?;
    let report = loaded.report()?;
    let doc = load_cycles(cycle)?;
    let mut out = Vec::with_capacity(doc.cycles.len());
    for c in doc.cycles {
        out.push(CycleCheck {
            prelog: is_prelog_class(&loaded.diagram, &c.vector)?,
            class: report.class_of(&c.vector)?,
            label: c.label,
        });
    }
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            for c in &out {
                println!(
                    "{}: {} class {}",
                    c.label,
                    if c.prelog { "prelog," } else { "NOT prelog," },
                    render::element(&c.class)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn friedman(input: &Input, format: Format) -> Outcome {
    let loaded = load(input, false)?;
    let complex = loaded
        .complex
        .ok_or_else(|| Failure(prelog::EngineError::NoBlockData.to_string()))?;
    let pairs = friedman_check(&complex)?;
    let all_pass = pairs.iter().all(|r| r.passes);
    match format {
        Format::Json => print_json(&FriedmanOutput { pairs, all_pass }),
        Format::Text => print!("{}", render::friedman_text(&complex, &pairs)),
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn example(name: &str, emit: Option<&Path>) -> Outcome {
    let text = snc::serialize(&gallery::by_name(name).expect("validated by clap"));
    match emit {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| Failure(format!("cannot write `{}`: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn lines(find: Option<usize>, format: Format) -> Outcome {
    let complex = gallery::cubic_degeneration();
    let d = DiagramMatrices::from_complex(&complex)?;
    let report = prelog_group(&d)?;
    let set = gallery::cubic_lines();
    let mut entries = Vec::with_capacity(set.len());
    for (label, t) in set.labels.iter().zip(&set.tuples) {
        entries.push(LineEntry {
            label: label.clone(),
            prelog: is_prelog_class(&d, t)?,
            vector: t.clone(),
            class: report.class_of(t)?,
        });
    }
    let subset = find.map(|k| {
        find_generating_indices(&report, &set, k, Execution::default()).map(|ix| {
            ix.into_iter()
                .map(|i| set.labels[i].clone())
                .collect::<Vec<_>>()
        })
    });
    match format {
        Format::Json => print_json(&LinesOutput {
            lines: entries,
            generating_subset: subset,
        }),
        Format::Text => {
            let width = entries.iter().map(|e| e.label.len()).max().unwrap_or(0);
            for e in &entries {
                println!(
                    "{:<width$}  {}  {}",
                    e.label,
                    if e.prelog { "prelog" } else { "NOT prelog" },
                    render::element(&e.class)
                );
            }
            if let (Some(k), Some(s)) = (find, &subset) {
                match s {
                    Some(labels) => {
                        println!("saturated rank-{k} subset:");
                        for l in labels {
                            println!("  {l}");
                        }
                    }
                    None => println!("no {k} lines span a saturated sublattice of rank {k}"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn member(input: &Input, raw: bool, target: &Path, generators: &Path, format: Format) -> Outcome {
    let loaded = load(input, raw)?;
    let report = loaded.report()?;
    let (label, t) = single_cycle(target)?;
    let gens = load_cycles(generators)?;
    let target_class = report.class_of(&t)?;
    let classes = gens
        .cycles
        .iter()
        .map(|c| report.class_of(&c.vector))
        .collect::<Result<Vec<_>, _>>()?;
    let found = membership_query(&report, &target_class, &classes)?;
    let names: Vec<String> = gens.cycles.iter().map(|c| c.label.clone()).collect();
    match format {
        Format::Json => print_json(&MemberOutput {
            target: label,
            member: found.is_some(),
            coefficients: found.unwrap_or_default(),
            generators: names,
        }),
        Format::Text => match found {
            Some(cs) => {
                let terms: Vec<String> = cs
                    .iter()
                    .zip(&names)
                    .map(|(c, n)| format!("{c}*{n}"))
                    .collect();
                let rhs = if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ")
                };
                println!("{label} = {rhs}");
            }
            None => println!(
                "{label} is not in the subgroup generated by {}",
                names.join(", ")
            ),
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn divide(input: &Input, raw: bool, target: &Path, by: &BigInt, format: Format) -> Outcome {
    let loaded = load(input, raw)?;
    let report = loaded.report()?;
    let (label, t) = single_cycle(target)?;
    let v = report.free_class_of(&t)?;
    let w = divisibility_query(&report, &v, by)?;
    match format {
        Format::Json => print_json(&DivideOutput {
            target: label,
            divisor: by.clone(),
            divisible: w.is_some(),
            quotient: w.unwrap_or_default(),
        }),
        Format::Text => match w {
            Some(w) => println!("{label} = {by} * {}", render::vector(&w)),
            None => println!("{label} is not divisible by {by} in the saturated prelog lattice"),
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute {
            input,
            raw,
            chars,
            format,
        } => compute(&input, raw, &chars, format),
        Command::Check {
            input,
            raw,
            cycle,
            format,
        } => check(&input, raw, &cycle, format),
        Command::Friedman { input, format } => friedman(&input, format),
        Command::Example { name, emit } => example(&name, emit.as_deref()),
        Command::Lines {
            find_generators,
            format,
        } => lines(find_generators, format),
        Command::Member {
            input,
            raw,
            target,
            generators,
            format,
        } => member(&input, raw, &target, &generators, format),
        Command::Divide {
            input,
            raw,
            target,
            by,
            format,
        } => divide(&input, raw, &target, &by, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // usage errors exit 2, --help and --version exit 0
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
