//! Command-line front end for `qca-lab`.

mod output;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use qca_lab::config::{registry, Qca, QcaConfig};
use qca_lab::dynamics::{
    classify, classify_palindromic, soliton_search_with, weight_trajectory, SearchOptions,
};
use qca_lab::error::Error;
use qca_lab::expectation::{
    c_beta, certificate_holds, expectation_series, lambda_of_state, moments_from_bloch, BetaSpec,
    Evaluator, ProductStateParams,
};
use qca_lab::fpoly::format_poly;
use qca_lab::pauli::parse_pauli;
use qca_lab::symplectic::ModuleVector;

pub use output::{fmt_g, svg_line_plot, write_atomic};

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "QCA_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qca-lab", version, about = "Clifford QCAs as matrices over F2 Laurent polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check pseudo-unitarity and report the determinant.
    Verify {
        /// Registry name or path to a .toml/.json definition.
        config: String,
    },
    /// Periodic / glider / fractal-like classification as JSON.
    Classify {
        config: String,
        #[arg(long, default_value_t = 16)]
        horizon: u64,
    },
    /// Hamming weight and support size along the orbit of a Pauli string.
    Weights {
        config: String,
        /// Pauli monomial such as `X0`, `Y0` or `X0*Z1`.
        #[arg(long)]
        initial: String,
        #[arg(long, default_value_t = 100)]
        steps: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Search for q with Lⁿq = uᵏq.
    Solitons {
        config: String,
        #[arg(long, default_value_t = 16)]
        n_max: u64,
        /// Largest coefficient window tried when extracting a witness.
        #[arg(long)]
        window: Option<u32>,
    },
    /// |ω₀∘β(αⁿ(P))| for evolved Pauli strings in a dressed product state.
    Expect {
        config: String,
        /// e.g. `p=0.1,theta=30,phi=45` (degrees)
        #[arg(long)]
        state: String,
        /// e.g. `xx:g=1.0,R=1`
        #[arg(long)]
        beta: String,
        /// Pauli monomial; repeat for several observables.
        #[arg(long, required = true)]
        initial: Vec<String>,
        #[arg(long, default_value_t = 10)]
        steps: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide λ·C_β < 1 for a product state.
    Certify {
        #[arg(long)]
        state: String,
        #[arg(long, default_value_t = 1)]
        range: u32,
        #[arg(long, default_value_t = 1)]
        qubits_per_cell: u32,
        #[arg(long, default_value_t = 1)]
        dims: u32,
    },
}

/// Exit codes: success, negative verdict, input error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Runs one command; diagnostics go to `err`, results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Applies `QCA_LAB_THREADS` to the global pool; returns a warning on bad values.
pub fn configure_threads() -> Option<String> {
    let value = std::env::var(THREADS_ENV).ok()?;
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .err()
            .map(|e| format!("{THREADS_ENV}: {e}")),
        _ => Some(format!("{THREADS_ENV}={value:?} ignored; expected a positive integer")),
    }
}

fn load(config: &str, force_raw: bool) -> Result<Qca, Error> {
    let mut cfg = match registry(config) {
        Some(cfg) => cfg,
        None => {
            let path = Path::new(config);
            if !path.exists() {
                return Err(Error::Config(format!(
                    "'{config}' is neither a built-in example ({}) nor an existing file",
                    qca_lab::config::REGISTRY_NAMES.join(", ")
                )));
            }
            QcaConfig::load(path)?
        }
    };
    cfg.raw |= force_raw;
    cfg.build()
}

fn initial_vector(qca: &Qca, text: &str) -> Result<ModuleVector, Error> {
    let p = parse_pauli(text, qca.dims, qca.qubits_per_cell)?;
    let q = p.to_vector(qca.qubits_per_cell, qca.dims)?;
    if q.is_zero() {
        return Err(Error::Config(format!("initial observable '{text}' is the identity")));
    }
    Ok(q)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, contents: &str) -> Result<(), Error> {
    match path {
        Some(p) => write_atomic(p, contents.as_bytes())?,
        None => out.write_all(contents.as_bytes())?,
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Verify { config } => {
            let qca = load(&config, true)?;
            let m = &qca.matrix;
            let det = m.determinant()?;
            let unit = det.as_monomial();
            writeln!(out, "name: {}", qca.name)?;
            writeln!(out, "size: {0}x{0}, dims: {1}", m.size(), qca.dims)?;
            writeln!(out, "pseudo-unitary: {}", yes_no(qca.pseudo_unitary))?;
            writeln!(out, "determinant: {}", format_poly(&det))?;
            writeln!(out, "unit determinant: {}", yes_no(unit.is_some()))?;
            if unit.is_some() {
                writeln!(out, "inverse: {}", m.inverse_unit()?)?;
            }
            Ok(if qca.pseudo_unitary { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Classify { config, horizon } => {
            if horizon == 0 {
                return Err(Error::Config("--horizon must be at least 1".into()));
            }
            let qca = load(&config, false)?;
            let report = match &qca.palindromic_t {
                Some(t) => classify_palindromic(t)?,
                None => classify(&qca.matrix, horizon)?,
            };
            writeln!(out, "{}", report.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Weights { config, initial, steps, out: path, svg } => {
            let qca = load(&config, false)?;
            for w in &qca.warnings {
                writeln!(err, "warning: {w}")?;
            }
            let q = initial_vector(&qca, &initial)?;
            let traj = weight_trajectory(&qca.matrix, &q, steps)?;
            emit(out, path.as_deref(), &traj.to_csv())?;
            if let Some(svg_path) = svg {
                let hamming = traj.samples.iter().map(|s| (s.n as f64, s.hamming as f64)).collect();
                let support = traj.samples.iter().map(|s| (s.n as f64, s.support as f64)).collect();
                let plot = svg_line_plot(
                    &format!("{} from {initial}", qca.name),
                    "n",
                    &[("hamming", hamming), ("support", support)],
                );
                write_atomic(&svg_path, plot.as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Solitons { config, n_max, window } => {
            if n_max == 0 {
                return Err(Error::Config("--n-max must be at least 1".into()));
            }
            if window == Some(0) {
                return Err(Error::Config("--window must be at least 1".into()));
            }
            let qca = load(&config, false)?;
            let options = SearchOptions {
                max_window: window,
                ..SearchOptions::default()
            };
            match soliton_search_with(&qca.matrix, n_max, &options)? {
                Some(w) => writeln!(out, "{}", serde_json::to_string_pretty(&w).expect("witness serializes"))?,
                None => writeln!(out, "none up to horizon {n_max}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Expect { config, state, beta, initial, steps, out: path } => {
            let qca = load(&config, false)?;
            let state = ProductStateParams::parse(&state)?;
            let beta = BetaSpec::parse(&beta)?;
            let evaluator = Evaluator::new(state, beta)?;
            let labelled = initial.len() > 1;
            let mut csv = String::from(if labelled {
                "observable,n,letter_word_start,abs_expectation\n"
            } else {
                "n,letter_word_start,abs_expectation\n"
            });
            for text in &initial {
                let q = initial_vector(&qca, text)?;
                for s in expectation_series(&qca.matrix, &q, steps, &evaluator)? {
                    if labelled {
                        csv.push_str(text);
                        csv.push(',');
                    }
                    csv += &format!("{},{},{}\n", s.n, s.word_start, fmt_g(s.abs_expectation, 12));
                }
            }
            emit(out, path.as_deref(), &csv)?;
            Ok(EXIT_OK)
        }
        Command::Certify { state, range, qubits_per_cell, dims } => {
            if range == 0 || qubits_per_cell == 0 || dims == 0 {
                return Err(Error::Config("--range, --qubits-per-cell and --dims must be positive".into()));
            }
            let state = ProductStateParams::parse(&state)?;
            let lambda = lambda_of_state(&moments_from_bloch(&state));
            let c = c_beta(qubits_per_cell, range, dims);
            let certified = certificate_holds(lambda, qubits_per_cell, range, dims);
            writeln!(out, "lambda: {}", fmt_g(lambda, 12))?;
            writeln!(out, "C_beta: {}", fmt_g(c, 12))?;
            writeln!(out, "lambda*C_beta: {}", fmt_g(lambda * c, 12))?;
            writeln!(out, "certified: {}", yes_no(certified))?;
            if (lambda - 1.0).abs() < 1e-12 {
                writeln!(out, "note: lambda = 1, stabilizer state (not P-generic)")?;
            }
            Ok(if certified { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
