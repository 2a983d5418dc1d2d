//! Command-line front end.
//!
//! Every subcommand writes a JSON document (or a flat CSV table with
//! `--format csv`) to stdout or `--output`. Level numbers in the output are
//! 1-based. Exit status: 0 on success, 1 when the analysis itself fails
//! (bad input, forbidden temperature, failed oracle check), 2 on usage errors.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::envelope::{
    build_envelope, latent_heat, transition_temperature, triple_identity_residual, Domain,
    Endpoint, PiecewiseLinear,
};
use crate::error::Error;
use crate::limits::{
    analytic_regions, equilibrium_intervals, lower_limiting_temperature, parse_generator,
    probe_equilibrium, upper_limiting_temperature, EquilibriumStatus, TailLimit, VerdictInterval,
    DEFAULT_HORIZON,
};
use crate::observables::{observables_at, ObservablesReport};
use crate::oracle::{check_suite, segment_interior_samples, tropical_limit_estimate, Quantity};
use crate::scalar::Scalar;
use crate::spectrum::{parse_spectrum, Format, Spectrum};
use crate::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "tropstat",
    version,
    about = "Tropical limit of equilibrium statistical mechanics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; CSV is available for tabular outputs only.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Exact rational arithmetic (default).
    #[arg(long, global = true, conflicts_with = "float")]
    exact: bool,

    /// Double-precision arithmetic.
    #[arg(long, global = true)]
    float: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    Positive,
    Negative,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Spectrum file (.json or .csv); `-` reads JSON from stdin.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    t_min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_max: Option<String>,
    /// Number of grid points, endpoints included.
    #[arg(long)]
    t_steps: Option<usize>,
    /// Shorthand `a:b:n` for --t-min a --t-max b --t-steps n.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["t_min", "t_max", "t_steps"])]
    grid: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and canonicalize a spectrum.
    Validate(InputArgs),
    /// Tropical free energy on one half-line.
    Envelope {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = DomainArg::Positive)]
        domain: DomainArg,
    },
    /// Tropical observables over a temperature grid, transition points included.
    Scan {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Full tropical report at one temperature.
    Observables {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        temperature: String,
    },
    /// Pairwise transition temperatures, latent heats and triple residuals.
    Transitions(InputArgs),
    /// Per-level tropical log-probabilities at one temperature.
    Gibbs {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        temperature: String,
    },
    /// Limiting temperatures and equilibrium intervals of an infinite spectrum.
    Limits {
        /// Generator description (JSON).
        #[arg(long)]
        generator: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        /// Largest |n| examined per probe before escalation.
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: u64,
    },
    /// Compare the tropical results with the finite-k partition function.
    OracleCheck {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1e-3)]
        k: f64,
        /// Decreasing k values, e.g. `0.1,0.05,0.025`; adds limit estimates per segment.
        #[arg(long, value_delimiter = ',')]
        k_schedule: Option<Vec<f64>>,
    },
}

/// Failure of a subcommand after argument parsing.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    /// Analysis ran but reported failed checks; the report is still written.
    Checks(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Domain(err)
    }
}

type CmdResult = Result<String, Failure>;

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let text = err.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = if cli.float {
        execute::<f64>(&cli)
    } else {
        execute::<Rational>(&cli)
    };
    let (body, code) = match outcome {
        Ok(body) => (Some(body), 0),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
        Err(Failure::Domain(err)) => {
            let _ = writeln!(stderr, "error[{}]: {err}", err.code());
            return 1;
        }
        Err(Failure::Checks(body)) => (Some(body), 1),
    };
    if let Some(body) = body {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, body.as_bytes()),
            None => stdout.write_all(body.as_bytes()),
        };
        if let Err(err) = written {
            let err = Error::from(err);
            let _ = writeln!(stderr, "error[{}]: {err}", err.code());
            return 1;
        }
    }
    code
}

fn execute<S: Scalar>(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Validate(input) => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            Ok(match format {
                OutputFormat::Csv => spectrum.serialize(Format::Csv),
                OutputFormat::Json => to_json_text(&json!({
                    "valid": true,
                    "number_kind": spectrum.number_kind(),
                    "level_count": spectrum.len(),
                    "levels": spectrum.to_json()["levels"],
                })),
            })
        }
        Command::Envelope { input, domain } => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            let domain = match domain {
                DomainArg::Positive => Domain::Positive,
                DomainArg::Negative => Domain::Negative,
            };
            Ok(envelope_output(&build_envelope(&spectrum, domain), format))
        }
        Command::Scan { input, grid } => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            let grid = parse_grid::<S>(grid)?;
            let rows = scan(&spectrum, &grid)?;
            Ok(scan_output(&rows, format))
        }
        Command::Observables { input, temperature } => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            let report = report_at(&spectrum, &parse_scalar::<S>(temperature, "--temperature")?)?;
            Ok(match format {
                OutputFormat::Csv => levels_csv(&report),
                OutputFormat::Json => to_json_text(&report_json(&report, true)),
            })
        }
        Command::Gibbs { input, temperature } => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            let report = report_at(&spectrum, &parse_scalar::<S>(temperature, "--temperature")?)?;
            Ok(match format {
                OutputFormat::Csv => levels_csv(&report),
                OutputFormat::Json => to_json_text(&json!({
                    "T": report.temperature.to_json(),
                    "F_tr": report.free_energy.to_json(),
                    "minimizing_set": one_based(&report.minimizing_set),
                    "levels": levels_json(&report),
                })),
            })
        }
        Command::Transitions(input) => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            transitions_output(&spectrum, format)
        }
        Command::Limits {
            generator,
            grid,
            horizon,
        } => {
            let generator = parse_generator::<S, _>(open(generator)?)?;
            let grid: Vec<S> = parse_grid::<S>(grid)?
                .into_iter()
                .filter(|t| !t.is_zero())
                .collect();
            if grid.is_empty() {
                return Err(Failure::Usage(
                    "temperature grid has no nonzero points".into(),
                ));
            }
            let intervals = equilibrium_intervals(&generator, &grid, *horizon)?;
            if format == OutputFormat::Csv {
                return Ok(intervals_csv(&intervals));
            }
            let probes = grid
                .iter()
                .map(|t| Ok(probe_json(t, &probe_equilibrium(&generator, t, *horizon)?)))
                .collect::<Result<Vec<Value>, Error>>()?;
            let lower = match lower_limiting_temperature(&generator) {
                Ok(limit) => tail_limit_json(&limit),
                Err(Error::BoundedBelowSpectrum) => json!({"kind": "bounded_below"}),
                Err(err) => return Err(err.into()),
            };
            Ok(to_json_text(&json!({
                "upper_limiting_temperature": tail_limit_json(&upper_limiting_temperature(&generator)),
                "lower_limiting_temperature": lower,
                "analytic_regions": analytic_regions(&generator).iter().map(interval_json).collect::<Vec<_>>(),
                "intervals": intervals.iter().map(interval_json).collect::<Vec<_>>(),
                "probes": probes,
            })))
        }
        Command::OracleCheck {
            input,
            k,
            k_schedule,
        } => {
            let spectrum = load_spectrum::<S>(&input.input)?;
            oracle_output(&spectrum, *k, k_schedule.as_deref(), format)
        }
    }
}

fn open(path: &Path) -> Result<Box<dyn Read>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(io::stdin()));
    }
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(Box::new(file))
}

fn load_spectrum<S: Scalar>(path: &Path) -> Result<Spectrum<S>, Failure> {
    let format = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
        _ => Format::Json,
    };
    Ok(parse_spectrum(open(path)?, format)?)
}

fn parse_scalar<S: Scalar>(text: &str, flag: &str) -> Result<S, Failure> {
    S::parse_literal(text)
        .filter(S::is_finite_value)
        .ok_or_else(|| Failure::Usage(format!("{flag}: `{text}` is not a number")))
}

/// Inclusive linear grid of `n` points.
fn parse_grid<S: Scalar>(args: &GridArgs) -> Result<Vec<S>, Failure> {
    let (a, b, n) = match (&args.grid, &args.t_min, &args.t_max, args.t_steps) {
        (Some(spec), ..) => {
            let parts: Vec<&str> = spec.split(':').collect();
            let [a, b, n] = parts.as_slice() else {
                return Err(Failure::Usage(format!(
                    "--grid: expected a:b:n, got `{spec}`"
                )));
            };
            let n = n
                .trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("--grid: bad point count `{n}`")))?;
            (
                parse_scalar::<S>(a, "--grid")?,
                parse_scalar::<S>(b, "--grid")?,
                n,
            )
        }
        (None, Some(a), Some(b), Some(n)) => (
            parse_scalar::<S>(a, "--t-min")?,
            parse_scalar::<S>(b, "--t-max")?,
            n,
        ),
        _ => {
            return Err(Failure::Usage(
                "give --grid a:b:n or all of --t-min, --t-max, --t-steps".into(),
            ))
        }
    };
    if n == 0 {
        return Err(Failure::Usage("grid needs at least one point".into()));
    }
    if b < a {
        return Err(Failure::Usage("grid end lies below its start".into()));
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    if a == b {
        return Err(Failure::Usage(
            "grid with several points needs distinct ends".into(),
        ));
    }
    let span = b.clone() - a.clone();
    let last = S::from_count(n - 1);
    Ok((0..n)
        .map(|i| {
            if i == n - 1 {
                b.clone()
            } else {
                a.clone() + span.clone() * S::from_count(i) / last.clone()
            }
        })
        .collect())
}

fn report_at<S: Scalar>(spectrum: &Spectrum<S>, t: &S) -> Result<ObservablesReport<S>, Failure> {
    let domain = Domain::of(t).ok_or(Error::ZeroTemperature)?;
    Ok(observables_at(
        spectrum,
        &build_envelope(spectrum, domain),
        t,
    )?)
}

/// Observables on the grid plus every transition point inside its range,
/// sorted by temperature. `T = 0` is skipped.
fn scan<S: Scalar>(
    spectrum: &Spectrum<S>,
    grid: &[S],
) -> Result<Vec<ObservablesReport<S>>, Failure> {
    let (Some(lo), Some(hi)) = (grid.first(), grid.last()) else {
        return Ok(Vec::new());
    };
    let envelopes = [
        build_envelope(spectrum, Domain::Positive),
        build_envelope(spectrum, Domain::Negative),
    ];
    let mut temps: Vec<S> = envelopes
        .iter()
        .flat_map(|e| e.breakpoint_temperatures().cloned())
        .filter(|t| t >= lo && t <= hi)
        .collect();
    // Breakpoints go first so a grid point that ties one keeps the exact breakpoint value.
    for t in grid {
        if !t.is_zero() && !temps.iter().any(|b| b.ties(t)) {
            temps.push(t.clone());
        }
    }
    temps.sort_by(|a, b| a.partial_cmp(b).expect("finite temperatures"));
    temps
        .iter()
        .map(|t| {
            let envelope = if *t > S::zero() {
                &envelopes[0]
            } else {
                &envelopes[1]
            };
            Ok(observables_at(spectrum, envelope, t)?)
        })
        .collect()
}

fn to_json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    text
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn join_levels(indices: &[usize]) -> String {
    one_based(indices)
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn endpoint_json<S: Scalar>(e: &Endpoint<S>) -> Value {
    match e {
        Endpoint::NegInfinity => json!("-inf"),
        Endpoint::PosInfinity => json!("inf"),
        Endpoint::Finite(x) => x.to_json(),
    }
}

fn envelope_output<S: Scalar>(envelope: &PiecewiseLinear<S>, format: OutputFormat) -> String {
    if format == OutputFormat::Csv {
        return csv_text(
            &["lower", "upper", "level", "E", "S"],
            envelope.segments.iter().map(|s| {
                vec![
                    s.lower.to_string(),
                    s.upper.to_string(),
                    (s.level + 1).to_string(),
                    s.energy.to_string(),
                    s.entropy.to_string(),
                ]
            }),
        );
    }
    let segments: Vec<Value> = envelope
        .segments
        .iter()
        .map(|s| {
            json!({
                "lower": endpoint_json(&s.lower),
                "upper": endpoint_json(&s.upper),
                "level": s.level + 1,
                "E": s.energy.to_json(),
                "S": s.entropy.to_json(),
            })
        })
        .collect();
    let breakpoints: Vec<Value> = envelope
        .breakpoints
        .iter()
        .map(|b| {
            json!({
                "T": b.temperature.to_json(),
                "minimizing_set": one_based(&b.minimizing_set),
            })
        })
        .collect();
    to_json_text(&json!({
        "domain": envelope.domain.to_string(),
        "segments": segments,
        "breakpoints": breakpoints,
    }))
}

fn scan_output<S: Scalar>(rows: &[ObservablesReport<S>], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => csv_text(
            &["T", "F_tr", "S_tr", "E_tr", "singular", "minimizing_set"],
            rows.iter().map(|r| {
                vec![
                    r.temperature.to_string(),
                    r.free_energy.to_string(),
                    r.entropy.to_string(),
                    r.energy.to_string(),
                    r.singular.to_string(),
                    join_levels(&r.minimizing_set),
                ]
            }),
        ),
        OutputFormat::Json => to_json_text(&json!({
            "rows": rows.iter().map(|r| report_json(r, false)).collect::<Vec<_>>(),
        })),
    }
}

fn levels_json<S: Scalar>(report: &ObservablesReport<S>) -> Vec<Value> {
    report
        .levels
        .iter()
        .map(|l| {
            json!({
                "level": l.index + 1,
                "F": l.free_energy.to_json(),
                "W": l.level_log_prob.to_json(),
                "w": l.state_log_prob.to_json(),
                "out_of_range": l.out_of_range,
            })
        })
        .collect()
}

fn report_json<S: Scalar>(report: &ObservablesReport<S>, with_levels: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("T".into(), report.temperature.to_json());
    obj.insert("F_tr".into(), report.free_energy.to_json());
    obj.insert("S_tr".into(), report.entropy.to_json());
    obj.insert("E_tr".into(), report.energy.to_json());
    obj.insert("singular".into(), json!(report.singular));
    obj.insert(
        "minimizing_set".into(),
        json!(one_based(&report.minimizing_set)),
    );
    if with_levels {
        obj.insert("levels".into(), json!(levels_json(report)));
    }
    Value::Object(obj)
}

fn levels_csv<S: Scalar>(report: &ObservablesReport<S>) -> String {
    csv_text(
        &["level", "F", "W", "w", "out_of_range"],
        report.levels.iter().map(|l| {
            vec![
                (l.index + 1).to_string(),
                l.free_energy.to_string(),
                l.level_log_prob.to_string(),
                l.state_log_prob.to_string(),
                l.out_of_range.to_string(),
            ]
        }),
    )
}

fn transitions_output<S: Scalar>(spectrum: &Spectrum<S>, format: OutputFormat) -> CmdResult {
    let levels = spectrum.levels();
    let n = levels.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            let t = transition_temperature(&levels[i], &levels[k])?;
            pairs.push((i, k, t, latent_heat(&levels[i], &levels[k])));
        }
    }
    if format == OutputFormat::Csv {
        return Ok(csv_text(
            &["i", "k", "T", "latent_heat"],
            pairs.iter().map(|(i, k, t, q)| {
                vec![
                    (i + 1).to_string(),
                    (k + 1).to_string(),
                    t.to_string(),
                    q.to_string(),
                ]
            }),
        ));
    }
    let mut triples = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            for l in k + 1..n {
                let residual = triple_identity_residual(&levels[i], &levels[k], &levels[l])?;
                triples.push(json!({
                    "levels": [i + 1, k + 1, l + 1],
                    "residual": residual.map_or(Value::Null, |r| r.to_json()),
                }));
            }
        }
    }
    let pairs: Vec<Value> = pairs
        .iter()
        .map(|(i, k, t, q)| {
            json!({
                "levels": [i + 1, k + 1],
                "T": t.finite().map_or(json!("inf"), Scalar::to_json),
                "latent_heat": q.to_json(),
            })
        })
        .collect();
    Ok(to_json_text(&json!({"pairs": pairs, "triples": triples})))
}

fn tail_limit_json<S: Scalar>(limit: &TailLimit<S>) -> Value {
    match limit {
        TailLimit::Limit {
            temperature,
            anchor,
        } => json!({"kind": "limit", "T": temperature.to_json(), "anchor": anchor}),
        TailLimit::Unrestricted => json!({"kind": "unrestricted"}),
        TailLimit::Inconclusive => json!({"kind": "inconclusive"}),
    }
}

fn interval_notation<S: Scalar>(iv: &VerdictInterval<S>) -> String {
    format!(
        "{}{}, {}{}",
        if iv.lower_closed { '[' } else { '(' },
        iv.lower,
        iv.upper,
        if iv.upper_closed { ']' } else { ')' },
    )
}

fn interval_json<S: Scalar>(iv: &VerdictInterval<S>) -> Value {
    json!({
        "interval": interval_notation(iv),
        "lower": endpoint_json(&iv.lower),
        "upper": endpoint_json(&iv.upper),
        "lower_closed": iv.lower_closed,
        "upper_closed": iv.upper_closed,
        "verdict": iv.verdict.as_str(),
    })
}

fn intervals_csv<S: Scalar>(intervals: &[VerdictInterval<S>]) -> String {
    csv_text(
        &["lower", "upper", "lower_closed", "upper_closed", "verdict"],
        intervals.iter().map(|iv| {
            vec![
                iv.lower.to_string(),
                iv.upper.to_string(),
                iv.lower_closed.to_string(),
                iv.upper_closed.to_string(),
                iv.verdict.as_str().to_string(),
            ]
        }),
    )
}

fn probe_json<S: Scalar>(t: &S, status: &EquilibriumStatus<S>) -> Value {
    let mut obj = json!({"T": t.to_json(), "verdict": status.verdict().as_str()});
    match status {
        EquilibriumStatus::Converged { free_energy, index } => {
            obj["F_tr"] = free_energy.to_json();
            obj["index"] = json!(index);
        }
        EquilibriumStatus::Diverged { witness } => {
            obj["witness"] = witness
                .iter()
                .map(|(n, x)| json!({"n": n, "F_over_T": x.to_json()}))
                .collect();
        }
        EquilibriumStatus::Inconclusive { horizon } => obj["horizon"] = json!(horizon),
    }
    obj
}

fn oracle_output<S: Scalar>(
    spectrum: &Spectrum<S>,
    k: f64,
    schedule: Option<&[f64]>,
    format: OutputFormat,
) -> CmdResult {
    let checks = check_suite(spectrum, k)?;
    let all_passed = checks.iter().all(|c| c.passed);
    let body = if format == OutputFormat::Csv {
        csv_text(
            &["check", "passed", "max_error", "tolerance", "points"],
            checks.iter().map(|c| {
                vec![
                    c.name.clone(),
                    c.passed.to_string(),
                    format!("{:e}", c.max_error),
                    format!("{:e}", c.tolerance),
                    c.points.to_string(),
                ]
            }),
        )
    } else {
        let mut doc = json!({
            "k": k,
            "passed": all_passed,
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "max_error": c.max_error,
                "tolerance": c.tolerance,
                "points": c.points,
            })).collect::<Vec<_>>(),
        });
        if let Some(schedule) = schedule {
            let mut estimates = Vec::new();
            for domain in [Domain::Positive, Domain::Negative] {
                let envelope = build_envelope(spectrum, domain);
                for t in segment_interior_samples(&envelope) {
                    let tf = t.as_f64();
                    let est =
                        tropical_limit_estimate(spectrum, tf, Quantity::FreeEnergy, schedule)?;
                    let report = observables_at(spectrum, &envelope, &t)?;
                    estimates.push(json!({
                        "T": tf,
                        "F_tr": report.free_energy.as_f64(),
                        "estimate": est.estimate,
                        "extrapolated": est.extrapolated,
                        "order": est.order,
                        "converged": est.converged,
                    }));
                }
            }
            doc["free_energy_limits"] = json!(estimates);
        }
        to_json_text(&doc)
    };
    if all_passed {
        Ok(body)
    } else {
        Err(Failure::Checks(body))
    }
}
