//! The `kfc` command line, exposed as a function so it can be driven from tests.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use kfc_core::cyclage::{charge_chain, charge_column, component, CyclageGraph, StepKind};
use kfc_core::insertion::insert_into_tableau;
use kfc_core::kostant::kostka_def;
use kfc_core::recurrences::{kostka_morris, kostka_row};
use kfc_core::tableau::{is_symplectic_any, Tableau};
use kfc_core::verify::{
    charge_kostka, sweep, verify_conjecture, verify_fundamental_conjecture, Verdict,
    VerificationReport,
};
use kfc_core::weyl::{Partition, Weight};
use kfc_core::{Error, Poly};

/// Environment variable bounding the number of worker threads used by `verify`.
pub const THREADS_VAR: &str = "KFC_THREADS";

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Parser)]
#[command(name = "kfc", version, about = "Kostka-Foulkes polynomials of type C")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Def,
    Morris,
    Row,
    Charge,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute K_{λ,μ}(q).
    Kostka {
        #[arg(long, value_enum, default_value = "def")]
        method: Method,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Charge of a symplectic tableau.
    Charge {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        tableau: String,
        /// Also print every tableau of the charge chain.
        #[arg(long)]
        chain: bool,
    },
    /// Connected component of the cyclage graph containing a tableau.
    CyclageGraph {
        #[arg(long, allow_hyphen_values = true)]
        tableau: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Insert letters into a tableau, left to right.
    Insert {
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        tableau: String,
        #[arg(
            long,
            allow_hyphen_values = true,
            value_delimiter = ',',
            required = true
        )]
        letter: Vec<i32>,
    },
    /// Compare the definition with the charge generating function.
    Verify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, conflicts_with_all = ["lambda", "fundamental"])]
        max_weight: Option<usize>,
        #[arg(long, requires = "mu")]
        lambda: Option<String>,
        #[arg(long, requires = "lambda")]
        mu: Option<String>,
        /// Zero-weight columns of height n − P against K_{(1^{n−P}),0}.
        #[arg(long, conflicts_with = "lambda")]
        fundamental: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parse a comma-separated partition of rank `n`.
pub fn parse_partition(s: &str, n: usize) -> Result<Partition, String> {
    let coords = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad partition part {p:?} in {s:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let w = Weight::new(coords);
    if w.rank() != n {
        return Err(format!(
            "partition {s:?} has {} parts, expected {n}",
            w.rank()
        ));
    }
    if !w.is_dominant() {
        return Err(format!(
            "{s:?} is not a weakly decreasing list of nonnegative integers"
        ));
    }
    Ok(w)
}

fn parse_tableau(s: &str) -> Result<Tableau, String> {
    let t: Tableau = s
        .parse()
        .map_err(|e: Error| format!("bad tableau {s:?}: {e}"))?;
    if !t.is_empty() && !is_symplectic_any(&t) {
        return Err(format!("{s:?} is not a symplectic tableau"));
    }
    Ok(t)
}

/// `{"2": 1, "4": 2}` style coefficient map.
pub fn poly_json(p: &Poly) -> Value {
    let terms: Map<String, Value> = p.terms().map(|(e, c)| (e.to_string(), json!(c))).collect();
    Value::Object(terms)
}

/// Graphviz digraph, nodes in reading order, one edge per cocyclage.
pub fn emit_dot(g: &CyclageGraph) -> String {
    let mut s = String::from("digraph cyclage {\n");
    for (i, v) in g.vertices.iter().enumerate() {
        s.push_str(&format!("  v{i} [label=\"{v}\"];\n"));
    }
    for (a, b) in &g.edges {
        s.push_str(&format!("  v{a} -> v{b};\n"));
    }
    s.push_str("}\n");
    s
}

pub fn graph_json(g: &CyclageGraph) -> Value {
    json!({
        "vertices": g.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &VerificationReport) -> Value {
    let charges: Vec<Value> = r
        .charges
        .iter()
        .map(|e| match &e.charge {
            Ok(c) => json!({ "tableau": e.tableau.to_string(), "charge": c }),
            Err(err) => json!({ "tableau": e.tableau.to_string(), "error": err.to_string() }),
        })
        .collect();
    json!({
        "lambda": r.lambda.coords(),
        "mu": r.mu.coords(),
        "n": r.n,
        "k_definitional": { "poly": poly_json(&r.k_definitional) },
        "k_charge": { "poly": poly_json(&r.k_charge) },
        "charges": charges,
        "verdict": r.verdict.to_string(),
    })
}

fn kostka(
    method: Method,
    n: usize,
    lambda: &str,
    mu: &str,
    format: Format,
) -> Result<String, String> {
    let lambda = parse_partition(lambda, n)?;
    let mu = parse_partition(mu, n)?;
    let p = match method {
        Method::Def => kostka_def(&lambda, &mu),
        Method::Morris => kostka_morris(&lambda, &mu, n),
        Method::Charge => charge_kostka(&lambda, &mu, n),
        Method::Row => {
            if lambda.coords().iter().skip(1).any(|&c| c != 0) {
                return Err(format!(
                    "method row needs a one-row partition, got {lambda}"
                ));
            }
            kostka_row(lambda.size() as usize, &mu, n)
        }
    }
    .map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", json!({ "poly": poly_json(&p) })),
    })
}

fn charge_cmd(n: usize, tableau: &str, show_chain: bool) -> Result<String, String> {
    let t = parse_tableau(tableau)?;
    let chain = charge_chain(&t, n).map_err(|e| e.to_string())?;
    let ch = charge_column(&chain.terminal, n).map_err(|e| e.to_string())? + chain.p as i64;
    if ch < 0 {
        return Err(Error::NegativeCharge(ch).to_string());
    }
    let mut out = String::new();
    if show_chain {
        for (step, kind) in &chain.steps {
            let tag = match kind {
                StepKind::Start => "start",
                StepKind::Reduction => "reduce",
                StepKind::Cocyclage => "cocycle",
            };
            out.push_str(&format!("{tag} {step}\n"));
        }
    }
    out.push_str(&format!("{ch}\n"));
    Ok(out)
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let k: usize = v
            .parse()
            .map_err(|_| format!("{THREADS_VAR} must be a positive integer, got {v:?}"))?;
        builder = builder.num_threads(k);
    }
    builder.build().map_err(|e| e.to_string())
}

fn verify_cmd(
    n: usize,
    max_weight: Option<usize>,
    pair: Option<(String, String)>,
    fundamental: Option<usize>,
    format: Format,
) -> Result<Outcome, String> {
    let reports = if let Some((l, m)) = pair {
        let lambda = parse_partition(&l, n)?;
        let mu = parse_partition(&m, n)?;
        vec![verify_conjecture(&lambda, &mu, n).map_err(|e| e.to_string())?]
    } else if let Some(p) = fundamental {
        vec![verify_fundamental_conjecture(p, n).map_err(|e| e.to_string())?]
    } else {
        let m = max_weight.ok_or("verify needs --max-weight, --lambda/--mu or --fundamental")?;
        thread_pool()?
            .install(|| sweep(n, m))
            .map_err(|e| e.to_string())?
    };
    Ok(render_reports(&reports, format))
}

/// Exit 2 as soon as one report is a mismatch; sweeps list only mismatches.
fn render_reports(reports: &[VerificationReport], format: Format) -> Outcome {
    let bad: Vec<&VerificationReport> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Mismatch)
        .collect();
    let stdout = match format {
        Format::Json => {
            let listed: Vec<Value> = if reports.len() == 1 {
                reports.iter().map(report_json).collect()
            } else {
                bad.iter().map(|r| report_json(r)).collect()
            };
            let v = json!({
                "checked": reports.len(),
                "mismatches": bad.len(),
                "reports": listed,
            });
            format!("{v}\n")
        }
        Format::Text if reports.len() == 1 => reports[0].to_text(),
        Format::Text => {
            let mut s = format!("checked: {}\nmismatches: {}\n", reports.len(), bad.len());
            for r in &bad {
                s.push('\n');
                s.push_str(&r.to_text());
            }
            s
        }
    };
    Outcome {
        code: if bad.is_empty() { 0 } else { 2 },
        stdout,
        stderr: String::new(),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, String> {
    match cli.command {
        Command::Kostka {
            method,
            n,
            lambda,
            mu,
            format,
        } => kostka(method, n, &lambda, &mu, format).map(Outcome::ok),
        Command::Charge { n, tableau, chain } => charge_cmd(n, &tableau, chain).map(Outcome::ok),
        Command::CyclageGraph { tableau, format } => {
            let t = parse_tableau(&tableau)?;
            let g = component(&t);
            Ok(Outcome::ok(match format {
                GraphFormat::Dot => emit_dot(&g),
                GraphFormat::Json => format!("{}\n", graph_json(&g)),
            }))
        }
        Command::Insert { tableau, letter } => {
            let mut t = parse_tableau(&tableau)?;
            for x in letter {
                if x == 0 {
                    return Err(Error::ZeroLetter.to_string());
                }
                t = insert_into_tableau(x, &t);
            }
            Ok(Outcome::ok(format!("{t}\n")))
        }
        Command::Verify {
            n,
            max_weight,
            lambda,
            mu,
            fundamental,
            format,
        } => verify_cmd(n, max_weight, lambda.zip(mu), fundamental, format),
    }
}

/// Run `kfc` on `argv` (program name first).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("bad arguments");
                    Outcome::fail(line.trim_start_matches("error: "))
                }
            };
        }
    };
    dispatch(cli).unwrap_or_else(Outcome::fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_exits_with_two() {
        let lambda = Weight::new(vec![1, 1]);
        let mut r = verify_conjecture(&lambda, &lambda, 2).unwrap();
        let good = render_reports(&[r.clone(), r.clone()], Format::Text);
        assert_eq!(
            (good.code, good.stdout.as_str()),
            (0, "checked: 2\nmismatches: 0\n")
        );
        r.k_charge = Poly::q_pow(1);
        r.verdict = Verdict::Mismatch;
        let bad = render_reports(&[r.clone(), r.clone()], Format::Text);
        assert_eq!(bad.code, 2);
        assert!(bad
            .stdout
            .starts_with("checked: 2\nmismatches: 2\n\nlambda: (1,1)\n"));
        assert_eq!(bad.stdout.matches("verdict: mismatch").count(), 2);
        let json = render_reports(&[r], Format::Json);
        assert_eq!(json.code, 2);
        assert!(json.stdout.contains("\"k_charge\":{\"poly\":{\"1\":1}}"));
    }
}
