use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use gravent::config::{parse_component, parse_models, KernelChoice, Overrides, Preset, ScanKind};
use gravent::evolution::ftensor::explain_signs;
use gravent::evolution::ModelKind;
use gravent::spinor::{check_algebra, PropagatorComponent};
use gravent::svg::{emit_svg, PlotKind};
use gravent::sweep::{run_sweep, summary, to_csv};
use gravent::units::{UnitMode, UnitSystem};

/// Sweep the gravitationally induced entanglement of two path-superposed
/// qubits over particle mass (or accumulated phase).
///
/// Lengths in metres, times in seconds, masses in kilograms, fields in
/// tesla. Precedence: preset < --config file < flags.
#[derive(Debug, Parser)]
#[command(name = "gravent", version)]
struct Cli {
    /// INI-style `key = value` file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// setA = {10 nm, 1e3 s}, setB = {0.1 nm, 1e6 s}.
    #[arg(long, value_parser = parse_preset)]
    preset: Option<Preset>,
    /// Comma-separated list of I, II, static.
    #[arg(long, value_parser = parse_model_list)]
    model: Option<Vec<ModelKind>>,
    /// Distance between the two interferometers.
    #[arg(long)]
    d: Option<f64>,
    /// Superposition width (default d/2).
    #[arg(long)]
    dx: Option<f64>,
    /// Interaction time.
    #[arg(long)]
    tau: Option<f64>,
    /// Magnetic field for Model II.
    #[arg(long)]
    b3: Option<f64>,
    #[arg(long)]
    mass_min: Option<f64>,
    #[arg(long)]
    mass_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Linear instead of logarithmic mass grid.
    #[arg(long)]
    linear_grid: bool,
    /// point or erf (wave packets of widths sigma0, sigma0p).
    #[arg(long, value_parser = parse_kernel)]
    kernel: Option<KernelChoice>,
    #[arg(long)]
    sigma0: Option<f64>,
    #[arg(long)]
    sigma0p: Option<f64>,
    /// RK4 steps per evolution.
    #[arg(long)]
    steps: Option<usize>,
    /// Unit system used internally: si or natural.
    #[arg(long, value_parser = parse_units)]
    units: Option<UnitMode>,
    /// Graviton propagator component: transverse (0303) or static (0000).
    #[arg(long, value_parser = parse_propagator)]
    propagator: Option<PropagatorComponent>,
    /// mass, or phase (fixed mass-min, τ scanned).
    #[arg(long, value_parser = parse_scan)]
    scan: Option<ScanKind>,
    /// Upper end of the phase scan in radians.
    #[arg(long)]
    phase_max: Option<f64>,
    /// CSV output (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG output.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// phase-mass, negativity-mass or negativity-phase.
    #[arg(long, value_parser = parse_plot)]
    plot: Option<PlotKind>,
    /// Print the unit system constants and exit.
    #[arg(long)]
    print_units: bool,
    /// Print the F-tensor sign calibration and exit.
    #[arg(long)]
    explain_signs: bool,
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: gravent::Error| e.to_string())
}

fn parse_model_list(s: &str) -> Result<Vec<ModelKind>, String> {
    parse_models(s).map_err(|e| e.to_string())
}

fn parse_kernel(s: &str) -> Result<KernelChoice, String> {
    s.parse().map_err(|e: gravent::Error| e.to_string())
}

fn parse_units(s: &str) -> Result<UnitMode, String> {
    s.parse().map_err(|e: gravent::Error| e.to_string())
}

fn parse_propagator(s: &str) -> Result<PropagatorComponent, String> {
    parse_component(s).map_err(|e| e.to_string())
}

fn parse_scan(s: &str) -> Result<ScanKind, String> {
    s.parse().map_err(|e: gravent::Error| e.to_string())
}

fn parse_plot(s: &str) -> Result<PlotKind, String> {
    s.parse().map_err(|e: gravent::Error| e.to_string())
}

impl Cli {
    fn overrides(&self) -> Overrides {
        Overrides {
            models: self.model.clone(),
            preset: self.preset,
            d: self.d,
            dx: self.dx,
            tau: self.tau,
            b3: self.b3,
            sigma0: self.sigma0,
            sigma0p: self.sigma0p,
            mass_min: self.mass_min,
            mass_max: self.mass_max,
            points: self.points,
            log_grid: self.linear_grid.then_some(false),
            kernel: self.kernel,
            units: self.units,
            steps: self.steps,
            component: self.propagator,
            scan: self.scan,
            phase_max: self.phase_max,
            out_csv: self.out.clone(),
            out_svg: self.svg.clone(),
        }
    }
}

fn run(cli: Cli) -> gravent::Result<()> {
    if cli.print_units {
        let mode = cli.units.unwrap_or(UnitMode::Si);
        print!("{}", UnitSystem::for_mode(mode).audit_text());
        return Ok(());
    }
    if cli.explain_signs {
        print!("{}", explain_signs());
        return Ok(());
    }
    check_algebra()?;

    let file = match &cli.config {
        Some(p) => Overrides::from_ini_file(p)?,
        None => Overrides::default(),
    };
    let cfg = file.layered(cli.overrides()).resolve()?;
    let rows = run_sweep(&cfg)?;
    let csv = to_csv(&rows);
    let io =
        |p: &PathBuf, e: std::io::Error| gravent::Error::Config(format!("{}: {e}", p.display()));
    match &cfg.out_csv {
        Some(p) => std::fs::write(p, &csv).map_err(|e| io(p, e))?,
        None => print!("{csv}"),
    }
    if let Some(p) = &cfg.out_svg {
        let kind = cli.plot.unwrap_or(match cfg.scan {
            ScanKind::Mass => PlotKind::PhaseVsMass,
            ScanKind::Phase => PlotKind::NegativityVsPhaseSum,
        });
        std::fs::write(p, emit_svg(&rows, kind)?).map_err(|e| io(p, e))?;
    }
    if cfg.scan == ScanKind::Mass {
        eprint!("{}", summary(&cfg));
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
