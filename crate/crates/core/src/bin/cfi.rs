//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ::cfi::distinguish::distinguish;
use ::cfi::equivalence::{ck_report, lk_report};
use ::cfi::fo::PredicateTable;
use ::cfi::homcount::hom_gap;
use ::cfi::io::{from_json, read_dimacs, to_json, write_dimacs, GraphDoc};
use ::cfi::iso::{find_isomorphism, Colored};
use ::cfi::suite::{run_check, SuiteOptions, CHECKS};
use ::cfi::treewidth::{tree_decomposition, treewidth};
use ::cfi::{BaseGraph, CfiGraph, Error, Family};

#[derive(Parser)]
#[command(name = "cfi", version, about = "CFI graph construction and analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph or one of its CFI graphs, e.g. `gen C 5 Ytilde`.
    Gen {
        /// Family and parameters followed by the variant
        /// (base, Y, Ytilde, X, Xtilde, Xpath).
        #[arg(num_args = 2.., required = true)]
        spec: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Randomly relabel the output vertices.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decide whether a graph is an original or a twisted CFI graph.
    Distinguish { file: PathBuf },
    /// Decide L^k or C^k equivalence of two graphs.
    Equiv {
        #[arg(long, value_enum)]
        logic: LogicArg,
        #[arg(long)]
        k: usize,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Exact treewidth with a witnessing decomposition.
    Tw { file: PathBuf },
    /// Homomorphism counts from the subdivided base into Y and Ỹ.
    Hom {
        #[arg(long)]
        base: PathBuf,
    },
    /// Compare the first-order colour predicate with the true colours.
    Focheck {
        file: PathBuf,
        #[arg(long)]
        base_file: PathBuf,
    },
    /// Run the verification battery.
    VerifySuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Twist one extra edge in graphs expected to be untwisted.
        #[arg(long)]
        extra_twist: bool,
        /// Run only these check numbers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicArg {
    #[value(name = "Lk", alias = "lk")]
    Lk,
    #[value(name = "Ck", alias = "ck")]
    Ck,
}

enum Failure {
    Check(Value),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(v)) => {
            println!("{v}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            println!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}

fn read_doc(path: &Path) -> Result<GraphDoc, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        Ok(from_json(&text)?)
    } else {
        Ok(GraphDoc::from_graph(&read_dimacs(&text)?))
    }
}

fn read_graph(path: &Path) -> Result<BaseGraph, Failure> {
    Ok(read_doc(path)?.graph()?)
}

fn parse_family(parts: &[String]) -> Result<Family, Failure> {
    let spec = match parts {
        [one] => one.clone(),
        [name, a] => format!("{name}{a}"),
        [name, a, b] if name.eq_ignore_ascii_case("grid") => format!("grid{a}x{b}"),
        [name, a, b] => format!("{name}{a},{b}"),
        _ => return Err(Failure::Input(format!("cannot parse family {parts:?}"))),
    };
    Ok(spec.parse::<Family>()?)
}

fn gen(spec: &[String], format: Format, out: Option<&Path>, seed: Option<u64>) -> Result<Value, Failure> {
    let (variant, family) = spec.split_last().expect("clap requires two values");
    let family = parse_family(family)?;
    let base = family.build()?;
    let mut doc = match variant.as_str() {
        "base" => GraphDoc::from_graph(&base),
        "Y" => CfiGraph::y(&base)?.doc(),
        "Ytilde" => CfiGraph::y_tilde(&base)?.doc(),
        "X" => CfiGraph::x(&base)?.doc(),
        "Xtilde" => CfiGraph::x_tilde(&base)?.doc(),
        "Xpath" => GraphDoc::from_graph(&CfiGraph::x(&base)?.path_encode()),
        other => return Err(Failure::Input(format!("unknown variant {other}"))),
    };
    if let Some(seed) = seed {
        doc = relabel_doc(&doc, seed)?;
    }
    let text = match format {
        Format::Json => to_json(&doc),
        Format::Dimacs => write_dimacs(&doc.graph()?),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(json!({ "written": path.display().to_string(), "n": doc.n, "m": doc.edges.len() }))
        }
        None => match format {
            Format::Json => Ok(serde_json::from_str(&text).expect("valid JSON")),
            Format::Dimacs => Ok(json!({ "dimacs": text })),
        },
    }
}

fn relabel_doc(doc: &GraphDoc, seed: u64) -> Result<GraphDoc, Failure> {
    let mut perm: Vec<usize> = (0..doc.n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut out = GraphDoc::from_graph(&doc.graph()?.relabel(&perm)?);
    out.colors = doc.colors.as_ref().map(|c| permute(c, &perm));
    out.names = doc.names.as_ref().map(|c| permute(c, &perm));
    Ok(out)
}

fn permute<T: Clone>(xs: &[T], perm: &[usize]) -> Vec<T> {
    let mut ys = xs.to_vec();
    for (x, &p) in perm.iter().enumerate() {
        ys[p] = xs[x].clone();
    }
    ys
}

fn base_json(g: &BaseGraph) -> Value {
    serde_json::to_value(GraphDoc::from_graph(g)).expect("serialisable")
}

fn focheck(file: &Path, base_file: &Path) -> Result<Value, Failure> {
    let doc = read_doc(file)?;
    let z = doc.graph()?;
    let base = read_graph(base_file)?;
    let truth: Vec<u32> = match &doc.colors {
        Some(c) => c.clone(),
        None => {
            let mut found = None;
            for c in [CfiGraph::y(&base)?, CfiGraph::y_tilde(&base)?] {
                if let Some(map) = find_isomorphism(Colored::plain(&z), Colored::plain(c.graph()))? {
                    let codes = c.color_codes();
                    found = Some(map.iter().map(|&x| codes[x]).collect());
                    break;
                }
            }
            found.ok_or_else(|| Failure::Input("graph is not a CFI graph over the given base".into()))?
        }
    };
    let table = PredicateTable::new(&z);
    let n = z.n();
    let mut agree = 0usize;
    let mut disagree = 0usize;
    for x in 0..n {
        for y in 0..n {
            if table.same_color(x, y) == (truth[x] == truth[y]) {
                agree += 1;
            } else {
                disagree += 1;
            }
        }
    }
    let mut distinct = truth.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let report = json!({
        "pairs_checked": n * n,
        "agree": agree,
        "disagree": disagree,
        "predicate_classes": table.class_count(),
        "color_classes": distinct.len(),
        "min_base_degree": base.min_degree(),
    });
    if disagree == 0 {
        Ok(report)
    } else {
        Err(Failure::Check(report))
    }
}

fn verify_suite(seed: u64, extra_twist: bool, only: &[usize]) -> Result<Value, Failure> {
    let ids: Vec<usize> = if only.is_empty() { (1..=CHECKS.len()).collect() } else { only.to_vec() };
    if let Some(&bad) = ids.iter().find(|&&i| i == 0 || i > CHECKS.len()) {
        return Err(Failure::Input(format!("no check numbered {bad}")));
    }
    let opts = SuiteOptions { seed, extra_twist };
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|&id| s.spawn(move || run_check(id, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let mut checks = Vec::new();
    for r in results {
        let r = r?;
        eprintln!("[{}] {:>2} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail);
        checks.push(r);
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = json!({ "passed": passed, "checks": checks });
    if passed {
        Ok(report)
    } else {
        Err(Failure::Check(report))
    }
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Gen { spec, format, out, seed } => gen(&spec, format, out.as_deref(), seed),
        Command::Distinguish { file } => {
            let d = distinguish(&read_graph(&file)?)?;
            Ok(json!({ "verdict": d.verdict.to_string(), "base": base_json(&d.base) }))
        }
        Command::Equiv { logic, k, file1, file2 } => {
            let (d1, d2) = (read_doc(&file1)?, read_doc(&file2)?);
            let (g1, g2) = (d1.graph()?, d2.graph()?);
            let h1 = Colored::new(&g1, d1.colors.as_deref())?;
            let h2 = Colored::new(&g2, d2.colors.as_deref())?;
            let (name, report) = match logic {
                LogicArg::Lk => ("Lk", lk_report(h1, h2, k)?),
                LogicArg::Ck => ("Ck", ck_report(h1, h2, k)?),
            };
            Ok(json!({
                "logic": name,
                "k": k,
                "equivalent": report.equivalent,
                "classes_per_round": report.classes_per_round,
            }))
        }
        Command::Tw { file } => {
            let g = read_graph(&file)?;
            let td = tree_decomposition(&g)?;
            Ok(json!({ "width": treewidth(&g)?, "bags": td.bags, "tree_edges": td.edges }))
        }
        Command::Hom { base } => {
            let (y, yt) = hom_gap(&read_graph(&base)?)?;
            Ok(json!({ "hom_Y": y, "hom_Ytilde": yt, "gap": y as i128 - yt as i128 }))
        }
        Command::Focheck { file, base_file } => focheck(&file, &base_file),
        Command::VerifySuite { seed, extra_twist, only } => verify_suite(seed, extra_twist, &only),
    }
}
