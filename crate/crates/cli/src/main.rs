use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qdgate_cli::{commands, load, CliError, CliResult, Context, LoadOptions};

/// Coupled quantum-dot CNOT simulator.
#[derive(Parser)]
#[command(name = "qdgate", version)]
struct Cli {
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory (overrides output.directory).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the bias and energy scans.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Baseline configuration: default or thick-inner-barrier.
    #[arg(long, global = true)]
    seed_preset: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bias scans and resonant-bias calibration for both control states.
    Scan,
    /// One controlled-NOT pulse on a basis register.
    Cnot {
        /// Two bits, control first, e.g. 10.
        #[arg(long)]
        input: String,
    },
    /// Resonant oscillation trace and tunneling-time estimates.
    Dynamics,
    /// Decoherence and readout budget.
    Budget,
    /// Everything above, plus a combined report.json.
    Report,
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let mut loaded = load(&LoadOptions {
        path: cli.config.as_deref(),
        seed_preset: cli.seed_preset.as_deref(),
        env: std::env::vars().collect(),
    })?;
    if let Some(out) = &cli.out {
        loaded.config.output.directory = out.display().to_string();
    }
    let mut ctx = Context::new(loaded.config)?;

    match cli.command {
        Command::Scan => {
            let s = commands::scan(&mut ctx)?;
            println!(
                "v_res control |1>: {:.7} V, control |0>: {:.7} V, shift {:.3} mV",
                s.control_one.v_res,
                s.control_zero.v_res,
                s.resonance_shift * 1e3
            );
            println!(
                "splitting at v_res |1>: {:.4e} eV, hbar/2dE = {:.3} ps, windows overlap: {}",
                s.control_one.delta_e_at_res, s.splitting_time_ps, s.windows_overlap
            );
        }
        Command::Cnot { input } => {
            let g = commands::cnot(&mut ctx, &input)?;
            print_gate(&g);
        }
        Command::Dynamics => {
            let d = commands::dynamics(&mut ctx)?;
            println!(
                "hbar/2dE = {:.3} ps, NOT pulse = {:.3} ps, estimate pi/(2 w0) = {:.3} ps at E = {:.4} eV",
                d.splitting_time_ps, d.not_pulse_ps, d.estimate_transfer_time_ps, d.incident_energy_ev
            );
        }
        Command::Budget => {
            let b = commands::budget(&mut ctx)?;
            print_budget(&b);
        }
        Command::Report => {
            let r = commands::report(&mut ctx)?;
            println!(
                "v_res |1>: {:.7} V, |0>: {:.7} V, dE = {:.4e} eV",
                r.scan.control_one.v_res,
                r.scan.control_zero.v_res,
                r.scan.control_one.delta_e_at_res
            );
            for g in &r.gates {
                print_gate(g);
            }
            print_budget(&r.budget);
        }
    }
    for path in ctx.sink.written() {
        log::info!("wrote {}", path.display());
    }
    Ok(())
}

fn print_gate(g: &qdgate_cli::GateReport) {
    println!(
        "cnot {} -> {}  delta/c = {:.2}  infidelity = {:.3e} (threshold {:.1e}{})  pulse = {:.3} ps",
        g.input,
        g.output,
        g.outcome.detuning_ratio,
        g.outcome.infidelity,
        g.infidelity_threshold,
        if g.within_threshold { "" } else { ", exceeded" },
        g.outcome.pulse_duration_ps
    );
}

fn print_budget(b: &qdgate_cli::BudgetReport) {
    let d = &b.decoherence;
    println!(
        "tau_so = {:.3e} s, alpha = {:.3e}, renormalization exponent = {:.1}, ops = {:.3e}",
        d.tau_so_bare_s.unwrap_or(f64::INFINITY),
        d.alpha_ohmic,
        d.renormalization_exponent,
        d.ops_per_coherence.unwrap_or(f64::INFINITY)
    );
    println!(
        "dV_th = {:.4} V, dI_d = {:.3e} A, tau_ms = {:.4e} s",
        b.readout.threshold_shift_v,
        b.readout.current_shift_a,
        b.readout.measurement_time_s.unwrap_or(f64::INFINITY)
    );
    println!("{}", b.verdict);
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("QDGATE_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
