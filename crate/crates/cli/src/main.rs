mod config;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use spinteleport_core::linalg::MatrixParts;
use spinteleport_core::teleport::DEFAULT_QUADRATURE_ORDER;
use spinteleport_core::thermal::{log_partition_function, partition_function};
use spinteleport_core::{
    average_fidelity_closed, average_fidelity_quadrature, critical_point, mutual_information, negativity,
    output_negativity_closed, pauli_probabilities, run_sweep, teleport, thermal_negativity_closed, thermal_state,
    weak_coupling_fidelity, write_dataset, BoundaryKind, ChainParams, DatasetFormat, Error, FigureId, InputState,
    MutualInfoResult, SweepSpec,
};

use crate::config::{config_error, pick, FileConfig};

const EXIT_IO: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "spinteleport", version, about = "Teleportation through thermal two-spin Heisenberg channels")]
struct Cli {
    /// JSON file supplying option values; flags on the command line take precedence
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ChainArgs {
    /// Exchange coupling J > 0
    #[arg(long = "J", value_name = "J", allow_negative_numbers = true)]
    coupling: Option<f64>,
    /// Magnetic field B >= 0
    #[arg(long = "B", value_name = "B", allow_negative_numbers = true)]
    field: Option<f64>,
    /// Temperature T > 0
    #[arg(long = "T", value_name = "T", allow_negative_numbers = true)]
    temperature: Option<f64>,
}

impl ChainArgs {
    fn resolve(&self, file: &FileConfig) -> Result<ChainParams, Error> {
        ChainParams::new(
            pick(self.coupling, file.coupling, "J")?,
            pick(self.field, file.field, "B")?,
            pick(self.temperature, file.temperature, "T")?,
        )
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Entanglement,
    Fidelity,
}

impl From<KindArg> for BoundaryKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Entanglement => BoundaryKind::EntanglementZero,
            KindArg::Fidelity => BoundaryKind::ClassicalFidelity,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Thermal state, partition function, negativity and Pauli weights
    Thermal(ChainArgs),
    /// Teleport one pure input state through two chains
    Teleport {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long, allow_negative_numbers = true)]
        theta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        phi: Option<f64>,
    },
    /// Average fidelity: closed form, quadrature and weak-coupling limit
    Fidelity {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long = "quadrature-order", value_name = "N")]
        quadrature_order: Option<usize>,
    },
    /// Holevo mutual information of the four-signal ensemble
    MutualInfo {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long, allow_negative_numbers = true)]
        gamma: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
    },
    /// Boundary field at (J, T), or "none"
    Critical {
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long = "J", value_name = "J", allow_negative_numbers = true)]
        coupling: Option<f64>,
        #[arg(long = "T", value_name = "T", allow_negative_numbers = true)]
        temperature: Option<f64>,
    },
    /// Write the dataset behind one figure
    Figure {
        /// fig1a .. fig4b
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_name = "N")]
        resolution: Option<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// csv or json (default csv)
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        chain: ChainArgs,
        /// Range of both signal angles (fig3a only)
        #[arg(long = "angle-range", num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        angle_range: Option<Vec<f64>>,
    },
}

#[derive(Serialize)]
struct ParamsEcho {
    #[serde(rename = "J")]
    coupling: f64,
    #[serde(rename = "B")]
    field: f64,
    #[serde(rename = "T")]
    temperature: f64,
}

impl From<&ChainParams> for ParamsEcho {
    fn from(p: &ChainParams) -> Self {
        ParamsEcho { coupling: p.coupling(), field: p.field(), temperature: p.temperature() }
    }
}

#[derive(Serialize)]
struct MutualInfoReport<'a> {
    params: ParamsEcho,
    gamma: f64,
    beta: f64,
    #[serde(flatten)]
    result: &'a MutualInfoResult,
}

/// Writes one line to stdout; a closed pipe (e.g. `| head`) ends output quietly.
fn emit(line: &str) -> Result<(), Error> {
    match writeln!(io::stdout().lock(), "{line}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(Error::File { path: PathBuf::from("<stdout>"), source: e })
        }
        _ => Ok(()),
    }
}

fn print_json(value: &impl Serialize) -> Result<(), Error> {
    emit(&serde_json::to_string_pretty(value).expect("report serializes"))
}

fn run(cli: Cli) -> Result<(), Error> {
    let file = FileConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Thermal(chain) => {
            let params = chain.resolve(&file)?;
            let rho = thermal_state(&params);
            let probs = pauli_probabilities(&rho)?;
            print_json(&json!({
                "params": ParamsEcho::from(&params),
                "rho": MatrixParts::from(&rho),
                "partition_function": partition_function(&params),
                "log_partition_function": log_partition_function(&params),
                "negativity": negativity(&rho)?,
                "negativity_closed": thermal_negativity_closed(&params),
                "pauli_probabilities": probs,
            }))?;
        }
        Command::Teleport { chain, theta, phi } => {
            let params = chain.resolve(&file)?;
            let input = InputState::new(pick(theta, file.theta, "theta")?, pick(phi, file.phi, "phi")?)?;
            let outcome = teleport(&input, &params)?;
            print_json(&json!({
                "params": ParamsEcho::from(&params),
                "theta": input.theta(),
                "phi": input.phi(),
                "e_in": input.entanglement(),
                "rho_out": MatrixParts::from(&outcome.rho_out),
                "fidelity": outcome.fidelity,
                "e_out_simulated": outcome.e_out,
                "e_out_closed": output_negativity_closed(input.entanglement(), &params),
            }))?;
        }
        Command::Fidelity { chain, quadrature_order } => {
            let params = chain.resolve(&file)?;
            let order = quadrature_order.or(file.quadrature_order).unwrap_or(DEFAULT_QUADRATURE_ORDER);
            print_json(&json!({
                "params": ParamsEcho::from(&params),
                "quadrature_order": order,
                "closed": average_fidelity_closed(&params),
                "quadrature": average_fidelity_quadrature(&params, order)?,
                "weak_coupling": weak_coupling_fidelity(params.field(), params.temperature()),
            }))?;
        }
        Command::MutualInfo { chain, gamma, beta } => {
            let params = chain.resolve(&file)?;
            let (gamma, beta) = (pick(gamma, file.gamma, "gamma")?, pick(beta, file.beta, "beta")?);
            let result = mutual_information(&params, gamma, beta)?;
            print_json(&MutualInfoReport { params: ParamsEcho::from(&params), gamma, beta, result: &result })?;
        }
        Command::Critical { kind, coupling, temperature } => {
            let kind = match kind {
                Some(k) => k,
                None => {
                    let name = pick(None, file.kind.clone(), "kind")?;
                    KindArg::from_str(&name, true)
                        .map_err(|_| config_error("kind", format!("expected entanglement or fidelity, got `{name}`")))?
                }
            };
            let j = pick(coupling, file.coupling, "J")?;
            let t = pick(temperature, file.temperature, "T")?;
            match critical_point(kind.into(), j, t)? {
                Some(point) => emit(&point.field.to_string())?,
                None => emit("none")?,
            }
        }
        Command::Figure { id, resolution, out, format, chain, angle_range } => {
            let figure: FigureId = pick(id, file.id.clone(), "id")?.parse()?;
            let format: DatasetFormat = format.or(file.format.clone()).as_deref().unwrap_or("csv").parse()?;
            let out = pick(out, file.out.clone(), "out")?;
            let mut spec = SweepSpec::new(figure);
            if let Some(n) = resolution.or(file.resolution) {
                spec = spec.with_resolution(n);
            }
            // Config-file values only fill parameters the figure holds fixed,
            // so one file can serve every figure; explicit flags are checked.
            let fixed = figure.default_parameters();
            let from_file = |key: &str, v: Option<f64>| v.filter(|_| fixed.contains_key(key));
            spec.overrides.coupling = chain.coupling.or(from_file("J", file.coupling));
            spec.overrides.field = chain.field.or(from_file("B", file.field));
            spec.overrides.temperature = chain.temperature.or(from_file("T", file.temperature));
            spec.overrides.angle_range = match angle_range {
                Some(v) => Some((v[0], v[1])),
                None => file.angle_range.filter(|_| figure == FigureId::Fig3a),
            };
            let dataset = run_sweep(&spec)?;
            write_dataset(&dataset, format, &out)?;
            log::info!("wrote {} rows of {figure} to {}", dataset.rows.len(), out.display());
        }
    }
    Ok(())
}

fn exit_code(err: &Error) -> u8 {
    if err.is_config() {
        EXIT_CONFIG
    } else if err.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_IO
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
