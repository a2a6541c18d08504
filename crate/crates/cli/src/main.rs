//! `qkr` - attack-cost calculator for quantum key recovery against ideal
//! ciphers.
//!
//! Exit codes: 0 on success, 1 on argument/config validation errors, 2 when
//! a reproduction or verification check fails.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qkr_cli::config::{ConfigError, ScenarioConfig};
use qkr_cli::format::{log_space, render_csv, render_table, sci};
use qkr_cli::{reproduce, verify};
use qkr_econ::batch::{
    batch_attack_plan, batch_oracle_depth, sqrt_m_heuristic_cost_usd, BatchSpec,
};
use qkr_econ::classical::{classical_expected_cost, classical_expected_cost_strict, ClassicalRig};
use qkr_econ::cost::attack_plan;
use qkr_econ::feasibility::{tradeoff_curve, FeasibilityFamily};
use qkr_econ::model::{AttackDecision, AttackPlan, CipherSpec, QuantumScenario, RewardModel};
use qkr_econ::reward::{min_profitable_value, optimal_attack};

#[derive(Parser)]
#[command(
    name = "qkr",
    version,
    about = "Economic model of quantum key-recovery attacks on ideal ciphers"
)]
struct Cli {
    /// Extra scenario/cipher definitions merged over the built-in presets.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Cost of a key-recovery attack finishing within a deadline.
    Cost {
        /// Scenario name (defaults to the configured default).
        #[arg(long)]
        scenario: Option<String>,
        /// Cipher name (defaults to the configured default).
        #[arg(long)]
        cipher: Option<String>,
        /// Attack deadline in years.
        #[arg(long)]
        years: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Re-derive every built-in golden value and report drift.
    Reproduce,
    /// Emit a sampled curve as CSV on stdout.
    Curve {
        #[command(subcommand)]
        curve: CurveCommand,
    },
    /// Attacker-optimal strategy under a reward model.
    ///
    /// With --delta-pow the information value decays geometrically, keeping
    /// only the given fraction over the --years reference window; with only
    /// --threshold it holds full value until the deadline; with neither it
    /// never decays.
    Optimize {
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        cipher: Option<String>,
        /// Initial value of the encrypted information (USD).
        #[arg(long)]
        value: f64,
        /// Reward deadline in years.
        #[arg(long)]
        threshold: Option<f64>,
        /// Fraction of the value left after the reference window, in (0, 1].
        #[arg(long)]
        delta_pow: Option<f64>,
        /// Reference window in years for --delta-pow.
        #[arg(long, default_value_t = 100.0)]
        years: f64,
    },
    /// Batch (m-to-1) attack: crack any one of M keys.
    Batch {
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        cipher: Option<String>,
        /// Attack deadline in years.
        #[arg(long)]
        years: f64,
        /// Number of keys that are simultaneously acceptable.
        #[arg(long)]
        batch_m: u64,
    },
    /// Classical brute-force electricity baseline.
    Classical {
        /// Key length in bits.
        #[arg(long, default_value_t = 128)]
        key_bits: u32,
    },
    /// Verify the search-query constants behind the cost model.
    GroverVerify {
        /// Seed for the Monte Carlo checks.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Trials per Monte Carlo configuration.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Minimum profitable value vs the remaining-value fraction.
    /// Columns: delta_pow,v_min_usd.
    MinValue {
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        cipher: Option<String>,
        /// Attack length in years.
        #[arg(long, default_value_t = 100.0)]
        years: f64,
        /// Sample count (log-spaced).
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// Lowest remaining-value fraction sampled.
        #[arg(long, default_value_t = 0.01)]
        lo: f64,
        /// Highest remaining-value fraction sampled.
        #[arg(long, default_value_t = 1.0)]
        hi: f64,
    },
    /// Affordable annual circuit cost vs gate speed for a fixed attack
    /// budget. Columns: gate_hz,max_ccy_usd.
    Feasibility {
        /// Attack budget in USD.
        #[arg(long)]
        budget: f64,
        /// Attack deadline in years.
        #[arg(long, default_value_t = 100.0)]
        years: f64,
        /// Cipher supplying key length and oracle depth.
        #[arg(long)]
        cipher: Option<String>,
        /// Sample count (log-spaced).
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// Lowest gate speed sampled (Hz).
        #[arg(long, default_value_t = 1e9)]
        hz_lo: f64,
        /// Highest gate speed sampled (Hz).
        #[arg(long, default_value_t = 1e15)]
        hz_hi: f64,
    },
}

enum CliError {
    /// Bad arguments, config, or parameters: exit 1.
    Validation(String),
    /// A reproduction/verification check failed: exit 2.
    CheckFailed,
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        Self::Validation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::CheckFailed) => ExitCode::from(2),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => ScenarioConfig::load(path)?,
        None => ScenarioConfig::presets(),
    };
    for warning in &config.warnings {
        eprintln!("warning: {warning}");
    }

    match cli.command {
        Command::Cost {
            scenario,
            cipher,
            years,
            format,
        } => {
            let scenario = resolve_scenario(&config, scenario.as_deref())?;
            let cipher = resolve_cipher(&config, cipher.as_deref())?;
            require(years > 0.0, "--years must be positive")?;
            let plan = attack_plan(cipher, scenario, years);
            print_cost_rows(&[(scenario.name.clone(), plan)], format);
            Ok(())
        }
        Command::Reproduce => run_reproduce(),
        Command::Curve { curve } => run_curve(&config, curve),
        Command::Optimize {
            scenario,
            cipher,
            value,
            threshold,
            delta_pow,
            years,
        } => {
            let scenario = resolve_scenario(&config, scenario.as_deref())?;
            let cipher = resolve_cipher(&config, cipher.as_deref())?;
            let model = build_reward_model(value, threshold, delta_pow, years)?;
            run_optimize(cipher, scenario, &model);
            Ok(())
        }
        Command::Batch {
            scenario,
            cipher,
            years,
            batch_m,
        } => {
            let scenario = resolve_scenario(&config, scenario.as_deref())?;
            let cipher = resolve_cipher(&config, cipher.as_deref())?;
            require(years > 0.0, "--years must be positive")?;
            run_batch(cipher, scenario, years, batch_m)
        }
        Command::Classical { key_bits } => {
            require(key_bits >= 1, "--key-bits must be at least 1")?;
            run_classical(key_bits);
            Ok(())
        }
        Command::GroverVerify { seed, trials } => {
            require(trials >= 1, "--trials must be at least 1")?;
            run_grover_verify(seed, trials)
        }
    }
}

fn require(ok: bool, msg: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Validation(msg.to_string()))
    }
}

fn resolve_scenario<'a>(
    config: &'a ScenarioConfig,
    name: Option<&str>,
) -> Result<&'a QuantumScenario, CliError> {
    let name = name.unwrap_or(&config.default_scenario);
    config.scenario(name).ok_or_else(|| {
        CliError::Validation(format!(
            "unknown scenario `{name}` (available: {})",
            config.scenario_names().collect::<Vec<_>>().join(", ")
        ))
    })
}

fn resolve_cipher<'a>(
    config: &'a ScenarioConfig,
    name: Option<&str>,
) -> Result<&'a CipherSpec, CliError> {
    let name = name.unwrap_or(&config.default_cipher);
    config.cipher(name).ok_or_else(|| {
        CliError::Validation(format!(
            "unknown cipher `{name}` (available: {})",
            config.cipher_names().collect::<Vec<_>>().join(", ")
        ))
    })
}

fn build_reward_model(
    value: f64,
    threshold: Option<f64>,
    delta_pow: Option<f64>,
    years: f64,
) -> Result<RewardModel, CliError> {
    require(value >= 0.0, "--value must be non-negative")?;
    let model = match (delta_pow, threshold) {
        (Some(dp), horizon) => {
            require(dp > 0.0 && dp <= 1.0, "--delta-pow must lie in (0, 1]")?;
            require(years > 0.0, "--years must be positive")?;
            // Recover the per-year decay rate from the remaining fraction.
            let delta = dp.powf(1.0 / years);
            RewardModel::delta(value, delta, horizon.unwrap_or(f64::INFINITY))
        }
        (None, Some(horizon)) => RewardModel::threshold(value, horizon),
        (None, None) => RewardModel::constant(value),
    };
    model.map_err(|e| CliError::Validation(e.to_string()))
}

fn cost_row(scenario_name: &str, plan: &AttackPlan) -> Vec<String> {
    vec![
        scenario_name.to_string(),
        sci(plan.time_years),
        sci(plan.layer_budget),
        sci(plan.parallelism),
        sci(plan.cost_ccy),
        sci(plan.cost_usd),
    ]
}

fn print_cost_rows(rows: &[(String, AttackPlan)], format: OutputFormat) {
    let header = [
        "scenario", "T_years", "t_layers", "k", "cost_ccy", "cost_usd",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(name, plan)| cost_row(name, plan))
        .collect();
    let rendered = match format {
        OutputFormat::Table => render_table(&header, &cells),
        OutputFormat::Csv => render_csv(&header, &cells),
    };
    print!("{rendered}");
}

fn run_reproduce() -> Result<(), CliError> {
    let checks = reproduce::all_checks();
    let mut failed = 0usize;
    for check in &checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<36} expected {:>12} actual {:>12} rel_err {:.2e}",
            check.name,
            sci(check.expected),
            sci(check.actual),
            check.relative_error()
        );
        if !check.passed() {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed > 0 {
        Err(CliError::CheckFailed)
    } else {
        Ok(())
    }
}

fn run_curve(config: &ScenarioConfig, curve: CurveCommand) -> Result<(), CliError> {
    match curve {
        CurveCommand::MinValue {
            scenario,
            cipher,
            years,
            points,
            lo,
            hi,
        } => {
            let scenario = resolve_scenario(config, scenario.as_deref())?;
            let cipher = resolve_cipher(config, cipher.as_deref())?;
            require(years > 0.0, "--years must be positive")?;
            require(points >= 2, "--points must be at least 2")?;
            require(
                lo > 0.0 && hi > lo && hi <= 1.0,
                "need 0 < --lo < --hi <= 1",
            )?;
            let rows: Vec<Vec<String>> = log_space(lo, hi, points)
                .into_iter()
                .map(|dp| {
                    let v = min_profitable_value(cipher, scenario, years, dp);
                    vec![sci(dp), sci(v)]
                })
                .collect();
            print!("{}", render_csv(&["delta_pow", "v_min_usd"], &rows));
            Ok(())
        }
        CurveCommand::Feasibility {
            budget,
            years,
            cipher,
            points,
            hz_lo,
            hz_hi,
        } => {
            let cipher = resolve_cipher(config, cipher.as_deref())?;
            require(budget > 0.0, "--budget must be positive")?;
            require(years > 0.0, "--years must be positive")?;
            require(points >= 2, "--points must be at least 2")?;
            require(hz_lo > 0.0 && hz_hi > hz_lo, "need 0 < --hz-lo < --hz-hi")?;
            let family = FeasibilityFamily::new(budget, years, cipher.key_bits, cipher.depth)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let rows: Vec<Vec<String>> = tradeoff_curve(&family, (hz_lo, hz_hi), points)
                .into_iter()
                .map(|(hz, ccy)| vec![sci(hz), sci(ccy)])
                .collect();
            print!("{}", render_csv(&["gate_hz", "max_ccy_usd"], &rows));
            Ok(())
        }
    }
}

fn run_optimize(cipher: &CipherSpec, scenario: &QuantumScenario, model: &RewardModel) {
    let outcome = optimal_attack(cipher, scenario, model);
    match outcome.decision {
        AttackDecision::Attack { time_years } => {
            println!(
                "decision: attack, finishing at T = {} years",
                sci(time_years)
            );
        }
        AttackDecision::NoAttack => println!("decision: no attack"),
    }
    println!("profit_usd: {}", sci(outcome.profit_usd));
    let rows: Vec<Vec<String>> = outcome
        .candidates
        .iter()
        .map(|c| vec![c.kind.to_string(), sci(c.time_years), sci(c.profit_usd)])
        .collect();
    println!();
    print!(
        "{}",
        render_table(&["candidate", "T_years", "profit_usd"], &rows)
    );
}

fn run_batch(
    cipher: &CipherSpec,
    scenario: &QuantumScenario,
    years: f64,
    batch_m: u64,
) -> Result<(), CliError> {
    let spec =
        BatchSpec::new(batch_m, cipher.clone()).map_err(|e| CliError::Validation(e.to_string()))?;
    let plan = batch_attack_plan(&spec, scenario, years);
    let heuristic = sqrt_m_heuristic_cost_usd(cipher, scenario, years, batch_m);
    println!("batch size M: {batch_m}");
    println!(
        "oracle depth d_F (layers): {}",
        sci(batch_oracle_depth(&spec))
    );
    println!("effective key space N/M: {}", sci(spec.effective_space()));
    println!();
    print_cost_rows(&[(scenario.name.clone(), plan)], OutputFormat::Table);
    println!();
    println!("sqrt(M)-heuristic cost_usd: {}", sci(heuristic));
    println!(
        "note: the deadline-cost row re-optimizes parallelism for the smaller space\n\
         (cost shrinks roughly with M, adjusted for the deeper oracle), while the\n\
         heuristic divides the single-key cost by sqrt(M) (the fixed-parallelism\n\
         time speedup). The two disagree by design; both are shown."
    );
    Ok(())
}

fn run_classical(key_bits: u32) {
    let rig = ClassicalRig::default();
    println!("classical brute force, {key_bits}-bit key");
    println!(
        "  rig: {} guesses/s at {} kW, {} USD/kWh",
        sci(rig.guesses_per_sec),
        rig.power_kw,
        rig.price_per_kwh
    );
    println!(
        "  conventional per-guess cost_usd: {}",
        sci(rig.cost_per_guess())
    );
    println!(
        "  conventional expected cost_usd: {}",
        sci(classical_expected_cost(&rig, key_bits))
    );
    println!(
        "  strict-units per-guess cost_usd: {}",
        sci(rig.cost_per_guess_strict())
    );
    println!(
        "  strict-units expected cost_usd: {}",
        sci(classical_expected_cost_strict(&rig, key_bits))
    );
    println!(
        "note: the conventional figure multiplies by 3600 where a strict unit\n\
         derivation divides; both are reported."
    );
}

fn run_grover_verify(seed: u64, trials: u64) -> Result<(), CliError> {
    let mut failed = 0usize;
    let checks = verify::run_all(seed, trials);
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{status} {:<28} {}", check.name, check.detail);
        if !check.passed {
            failed += 1;
        }
    }
    println!(
        "{} checks, {} failed (seed {seed}, {trials} trials)",
        checks.len(),
        failed
    );
    if failed > 0 {
        Err(CliError::CheckFailed)
    } else {
        Ok(())
    }
}
