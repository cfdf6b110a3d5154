use std::fs;
use std::io::{self, BufReader, Read};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use eccb::bounds::{evaluate_all, BoundId, BoundJson, BoundResult};
use eccb::certifier::certify;
use eccb::extremal::{chain_graph, sharpness_report, ChainSpec, SharpnessRow};
use eccb::generators::{random_min_degree_girth, GeneratorConfig};
use eccb::graph::{eccentricity_profile, girth, parse_edge_list, Graph};
use eccb::report::{generated_corpus, run_batch, thread_cap_from_env, to_csv, BatchItem};
use eccb::scalar::{fmt_human, fmt_ratio};
use eccb::{Error, Rational};
use serde_json::json;

use crate::{Cli, Command};

/// Writes to standard output; a closed pipe ends the process quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut stdout = io::stdout().lock();
    if let Err(e) = stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(EXIT_INPUT as i32);
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(&format!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(&format!("{}\n", format_args!($($t)*))) };
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INAPPLICABLE: u8 = 3;
pub const EXIT_VIOLATION: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Disconnected | Error::Io(_) | Error::Domain(_) => {
                EXIT_INPUT
            }
            Error::NotApplicable(_) | Error::NotInCatalog { .. } => EXIT_INAPPLICABLE,
            Error::InvariantViolated(_) => EXIT_VIOLATION,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::new(EXIT_INPUT, e.to_string())
    }
}

type CliResult = Result<u8, CliError>;

pub fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Compute(input) => compute(&input.input, cli.json),
        Command::Bound { input, only } => bound(&input.input, only.as_deref(), cli.json),
        Command::Certify { input, maxdeg, out } => {
            certify_cmd(&input.input, *maxdeg, out.as_deref(), cli.json)
        }
        Command::Generate { params, seed, out } => generate(
            GeneratorConfig::new(params.n, params.delta, params.g, *seed),
            out.as_deref(),
            cli.json,
        ),
        Command::Chain {
            delta,
            g,
            k,
            report,
            out,
        } => chain(*delta, *g, *k, *report, out.as_deref(), cli.json),
        Command::Batch {
            dir,
            delta,
            g,
            n,
            count,
            seed,
            out,
            strict,
        } => {
            let items = match dir {
                Some(d) => read_dir_corpus(d)?,
                None => match (delta, g, n) {
                    (Some(d), Some(g), Some(n)) => generated_corpus(*d, *g, *n, *count, *seed),
                    _ => {
                        return Err(CliError::new(
                            EXIT_USAGE,
                            "batch needs a directory or --delta, --g and --n",
                        ))
                    }
                },
            };
            batch(items, out.as_deref(), *strict, cli.json)
        }
    }
}

fn read_graph(input: &str) -> Result<Graph, CliError> {
    let g = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        parse_edge_list(s.as_bytes())?
    } else {
        let f = fs::File::open(input)
            .map_err(|e| CliError::new(EXIT_INPUT, format!("{input}: {e}")))?;
        parse_edge_list(BufReader::new(f))
            .map_err(|e| CliError::new(EXIT_INPUT, format!("{input}: {e}")))?
    };
    Ok(g)
}

fn stem(input: &str) -> String {
    if input == "-" {
        return "stdin".into();
    }
    Path::new(input)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into())
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(path)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn degrees(g: &Graph) -> String {
    let (lo, hi) = (g.min_degree(), g.max_degree());
    if lo == hi {
        format!("δ=Δ={lo}")
    } else {
        format!("δ={lo} Δ={hi}")
    }
}

fn compute(input: &str, as_json: bool) -> CliResult {
    let g = read_graph(input)?;
    let p = eccentricity_profile(&g)?;
    let gi = girth(&g);
    if as_json {
        let v = json!({
            "n": g.order(),
            "m": g.size(),
            "avec": fmt_ratio(&p.avec),
            "avecDecimal": eccb::Scalar::to_f64(&p.avec),
            "totalEccentricity": p.total,
            "radius": p.radius,
            "diameter": p.diameter,
            "girth": gi,
            "minDegree": g.min_degree(),
            "maxDegree": g.max_degree(),
            "eccentricities": p.ecc,
        });
        outln!("{}", pretty(&v));
    } else {
        outln!(
            "n={} avec={} girth={} {}",
            g.order(),
            fmt_human(&p.avec),
            gi.map_or("none".into(), |x| x.to_string()),
            degrees(&g)
        );
        outln!(
            "m={} radius={} diameter={} EX={}",
            g.size(),
            p.radius,
            p.diameter,
            p.total
        );
    }
    Ok(EXIT_OK)
}

fn bound_line(b: &BoundResult<Rational>) -> String {
    match (&b.value, b.satisfied) {
        (Some(v), s) => format!(
            "{:<20} {:<24} {}",
            b.id.name(),
            fmt_human(v),
            match s {
                Some(true) => "satisfied",
                Some(false) => "VIOLATED",
                None => "",
            }
        ),
        (None, _) => format!(
            "{:<20} not-applicable ({})",
            b.id.name(),
            b.reason.as_deref().unwrap_or("")
        ),
    }
}

fn bound(input: &str, only: Option<&str>, as_json: bool) -> CliResult {
    let only = only
        .map(BoundId::from_str)
        .transpose()
        .map_err(|e| CliError::new(EXIT_USAGE, e.to_string()))?;
    let g = read_graph(input)?;
    let mut rows = evaluate_all(&g)?;
    if let Some(id) = only {
        rows.retain(|b| b.id == id);
        if rows.is_empty() {
            return Err(CliError::new(
                EXIT_INAPPLICABLE,
                format!("{id} does not apply to this graph"),
            ));
        }
    }
    if as_json {
        let v: Vec<BoundJson> = rows.iter().map(BoundJson::from).collect();
        outln!(
            "{}",
            serde_json::to_string_pretty(&v).expect("serializable")
        );
    } else {
        for b in &rows {
            outln!("{}", bound_line(b));
        }
    }
    if rows.iter().any(|b| b.satisfied == Some(false)) {
        Ok(EXIT_VIOLATION)
    } else if only.is_some() && rows.iter().all(|b| !b.applicable) {
        Ok(EXIT_INAPPLICABLE)
    } else {
        Ok(EXIT_OK)
    }
}

fn certify_cmd(input: &str, maxdeg: bool, out: Option<&Path>, as_json: bool) -> CliResult {
    let g = read_graph(input)?;
    let cert = certify(&g, maxdeg)?;
    let text = serde_json::to_string_pretty(&cert.to_json()).expect("serializable");
    if let Some(dir) = out {
        let name = format!(
            "{}.{}cert.json",
            stem(input),
            if maxdeg { "maxdeg." } else { "" }
        );
        let path = write_file(dir, &name, &(text.clone() + "\n"))?;
        eprintln!("wrote {}", path.display());
    }
    if as_json {
        outln!("{text}");
    } else {
        outln!("{}", cert.summary());
        for s in cert.chain().failed() {
            outln!("  {s}");
        }
        for c in cert.checks().iter().filter(|c| !c.holds) {
            outln!("  [FAIL] {}: {}", c.name, c.detail.as_deref().unwrap_or(""));
        }
    }
    Ok(if cert.all_steps_hold() && cert.structure_ok() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn generate(cfg: GeneratorConfig, out: Option<&Path>, as_json: bool) -> CliResult {
    match random_min_degree_girth(&cfg) {
        Ok(g) => {
            let text = cfg.annotate(&g);
            if let Some(dir) = out {
                let name = format!("gen-{}-{}-{}-{}.el", cfg.delta, cfg.g, cfg.n, cfg.seed);
                let path = write_file(dir, &name, &text)?;
                eprintln!("wrote {}", path.display());
            }
            if as_json {
                outln!(
                    "{}",
                    pretty(&json!({ "graph": g.to_json(), "seed": cfg.seed }))
                );
            } else if out.is_none() {
                out!("{text}");
            }
            Ok(EXIT_OK)
        }
        Err(f) => {
            if as_json {
                outln!(
                    "{}",
                    pretty(&json!({ "failure": serde_json::to_value(&f).expect("serializable") }))
                );
            }
            eprintln!("Failure: {f}");
            Ok(EXIT_INAPPLICABLE)
        }
    }
}

fn chain(
    delta: usize,
    g: usize,
    k: usize,
    report: bool,
    out: Option<&Path>,
    as_json: bool,
) -> CliResult {
    if report {
        let ks: Vec<usize> = (1..=k).collect();
        let rows = sharpness_report(delta, g, &ks)?;
        let mut csv = String::from(SharpnessRow::CSV_HEADER);
        csv.push('\n');
        for r in &rows {
            csv.push_str(&r.to_csv());
            csv.push('\n');
        }
        if let Some(dir) = out {
            let path = write_file(dir, &format!("sharpness-{delta}-{g}.csv"), &csv)?;
            eprintln!("wrote {}", path.display());
        }
        if as_json {
            let v: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k, "n": r.n, "avec": fmt_ratio(&r.avec),
                        "lower": fmt_ratio(&r.lower), "upper": fmt_ratio(&r.upper),
                        "gap": fmt_ratio(&r.gap), "diameter": r.diameter,
                        "radius": r.radius, "gapWithin": r.gap_within,
                    })
                })
                .collect();
            outln!("{}", pretty(&serde_json::Value::Array(v)));
        } else {
            out!("{csv}");
        }
        let bad = rows
            .iter()
            .any(|r| r.gap_within == Some(false) || r.avec < r.lower || r.avec > r.upper);
        return Ok(if bad { EXIT_VIOLATION } else { EXIT_OK });
    }
    let spec = ChainSpec::canonical(delta, g, k)?;
    let graph = chain_graph(&spec)?;
    let p = eccentricity_profile(&graph)?;
    let text = graph.to_edge_list();
    if let Some(dir) = out {
        let path = write_file(dir, &format!("chain-{delta}-{g}-{k}.el"), &text)?;
        eprintln!("wrote {}", path.display());
    }
    if as_json {
        let v = json!({
            "spec": {
                "delta": delta, "g": g, "k": k,
                "baseEdge": [spec.base_edge.0, spec.base_edge.1],
                "linkEdges": spec.link_edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
                "deletedEdges": spec.deleted_edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            },
            "graph": graph.to_json(),
            "avec": fmt_ratio(&p.avec),
            "radius": p.radius,
            "diameter": p.diameter,
        });
        outln!("{}", pretty(&v));
    } else {
        outln!(
            "n={} m={} avec={} radius={} diameter={}",
            graph.order(),
            graph.size(),
            fmt_human(&p.avec),
            p.radius,
            p.diameter
        );
        if out.is_none() {
            out!("{text}");
        }
    }
    Ok(EXIT_OK)
}

fn read_dir_corpus(dir: &Path) -> Result<Vec<BatchItem>, CliError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::new(EXIT_INPUT, format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "el"))
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|p| {
            let id = p.file_stem().expect("file").to_string_lossy().into_owned();
            let g = fs::File::open(&p)
                .map_err(|e| e.to_string())
                .and_then(|f| parse_edge_list(BufReader::new(f)).map_err(|e| e.to_string()));
            (id, g)
        })
        .collect())
}

fn batch(items: Vec<BatchItem>, out: Option<&Path>, strict: bool, as_json: bool) -> CliResult {
    let gen_failures = items.iter().filter(|(_, g)| g.is_err()).count();
    let rows = run_batch(items, thread_cap_from_env())?;
    let csv = to_csv(&rows);
    if let Some(dir) = out {
        let path = write_file(dir, "report.csv", &csv)?;
        eprintln!("wrote {}", path.display());
    }
    let violations: usize = rows.iter().map(|r| r.violations()).sum();
    let cert_failures = rows.iter().filter(|r| r.certificate_failed()).count();
    let summary = json!({
        "graphs": rows.len(),
        "generationFailures": gen_failures,
        "boundViolations": violations,
        "certificateFailures": cert_failures,
    });
    if as_json {
        outln!("{}", pretty(&summary));
    } else if out.is_none() {
        out!("{csv}");
    }
    eprintln!(
        "{} graphs, {} generation failures, {} bound violations, {} certificate failures",
        rows.len(),
        gen_failures,
        violations,
        cert_failures
    );
    if violations > 0 || cert_failures > 0 {
        Ok(EXIT_VIOLATION)
    } else if strict && gen_failures > 0 {
        Ok(EXIT_INAPPLICABLE)
    } else {
        Ok(EXIT_OK)
    }
}
