//! `qsynth4` — synthesis front end for quaternary logic circuits.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qsynth4::generators;
use qsynth4::pla;
use qsynth4::report::{self, BenchRow};
use qsynth4_core::func::parse_qtt;
use qsynth4_core::lower::{decompose, GadgetLibrary};
use qsynth4_core::sim::truth_table;
use qsynth4_core::synth::{synth, SynthError};
use qsynth4_core::QuaternaryFunction;
use qsynth4_core::{circuit, func};

#[derive(Parser)]
#[command(name = "qsynth4", version, about = "Quaternary logic synthesis toolchain")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a netlist from a quaternary truth table (.qtt)
    Synth {
        /// Input truth-table file
        input: PathBuf,
        /// Write the netlist here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Decompose macro gates to M-S level before writing
        #[arg(long)]
        lower: bool,
        /// Report format
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Check a netlist against a truth table by exhaustive simulation
    Verify {
        /// Netlist file
        netlist: PathBuf,
        /// Truth-table file (.qtt)
        table: PathBuf,
    },
    /// Run the benchmark suite and print the comparison table
    Bench {
        /// Benchmark names (default: all)
        names: Vec<String>,
        /// Directory holding the .pla benchmark files
        #[arg(long, default_value = "benchmarks")]
        dir: PathBuf,
    },
    /// Write a built-in generator's truth table
    Tt {
        /// Generator name: halfadd, fulladd, sum2, mul2
        generator: String,
        /// Write the table here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a binary PLA file to a packed quaternary truth table
    IngestPla {
        /// PLA file
        input: PathBuf,
        /// Write the table here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum AppError {
    /// Bad input: parse errors, missing files, arity mismatches. Exit 2.
    Input(String),
    /// A verification failed. Exit 1.
    Verify(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Input(_) => 2,
            AppError::Verify(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Input(msg) | AppError::Verify(msg) => msg,
        }
    }
}

fn read_file(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), AppError> {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| AppError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_table(path: &Path) -> Result<QuaternaryFunction, AppError> {
    let text = read_file(path)?;
    parse_qtt(&text).map_err(|e| AppError::Input(format!("{}: {e}", path.display())))
}

fn synth_error(e: SynthError) -> AppError {
    match e {
        SynthError::SelfCheck { .. } => AppError::Verify(format!("synthesis self-check: {e}")),
        other => AppError::Input(other.to_string()),
    }
}

fn cmd_synth(
    input: &Path,
    output: Option<&Path>,
    lower: bool,
    format: ReportFormat,
) -> Result<(), AppError> {
    let function = load_table(input)?;
    let (macro_circuit, stats) = synth(&function).map_err(synth_error)?;
    let lowered = if lower {
        Some(
            decompose(&macro_circuit, &GadgetLibrary::standard())
                .map_err(|e| AppError::Input(e.to_string()))?,
        )
    } else {
        None
    };

    let netlist = circuit::serialize(lowered.as_ref().unwrap_or(&macro_circuit));
    write_output(output, &netlist)?;

    let report = report::build_report(
        function.name(),
        function.input_count(),
        function.output_count(),
        &stats,
        &macro_circuit,
        lowered.as_ref(),
    );
    let rendered = match format {
        ReportFormat::Text => report.render_text(),
        ReportFormat::Json => report.render_json() + "\n",
    };
    // Keep stdout clean for the netlist when no output file is given.
    if output.is_some() {
        print!("{rendered}");
    } else {
        eprint!("{rendered}");
    }
    Ok(())
}

fn cmd_verify(netlist_path: &Path, table_path: &Path) -> Result<(), AppError> {
    let netlist_text = read_file(netlist_path)?;
    let circuit = circuit::parse(&netlist_text)
        .map_err(|e| AppError::Input(format!("{}: {e}", netlist_path.display())))?;
    let function = load_table(table_path)?;

    let m = circuit.primary_inputs().len();
    let k = circuit.outputs().len();
    if m != function.input_count() || k != function.output_count() {
        return Err(AppError::Input(format!(
            "arity mismatch: netlist is {m} -> {k}, table is {} -> {}",
            function.input_count(),
            function.output_count()
        )));
    }
    let table = truth_table(&circuit).map_err(|e| AppError::Input(e.to_string()))?;
    for (idx, (got, want)) in table.rows().iter().zip(function.rows()).enumerate() {
        if got != want {
            let inputs: String = func::index_to_inputs(idx, m)
                .iter()
                .map(|v| char::from(b'0' + v.value()))
                .collect();
            let digits = |row: &[qsynth4_core::Gf4Value]| -> String {
                row.iter().map(|v| char::from(b'0' + v.value())).collect()
            };
            return Err(AppError::Verify(format!(
                "mismatch at inputs {inputs}: netlist gives {}, table wants {}",
                digits(got),
                digits(want)
            )));
        }
    }
    println!("PASS: netlist matches the table on all {} inputs", table.rows().len());
    Ok(())
}

const PLA_BENCH_NAMES: [&str; 4] = ["xor5", "rd53", "rd73", "ham3"];

fn bench_function(name: &str, dir: &Path) -> Result<Option<QuaternaryFunction>, String> {
    if let Some(f) = generators::builtin(name) {
        return Ok(Some(f));
    }
    let path = dir.join(format!("{name}.pla"));
    if !path.exists() {
        return Ok(None);
    }
    let text =
        fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    pla::ingest_pla(&text)
        .map(|f| Some(f.with_name(name)))
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_bench(names: &[String], dir: &Path) -> Result<(), AppError> {
    let all: Vec<String> = generators::BUILTIN_NAMES
        .iter()
        .chain(PLA_BENCH_NAMES.iter())
        .map(|s| s.to_string())
        .collect();
    let requested: Vec<String> =
        if names.is_empty() || names.iter().any(|n| n == "all") {
            all.clone()
        } else {
            for name in names {
                if !all.contains(name) {
                    return Err(AppError::Input(format!(
                        "unknown benchmark `{name}` (known: {})",
                        all.join(", ")
                    )));
                }
            }
            names.to_vec()
        };

    let mut rows = Vec::new();
    let mut failures = 0usize;
    for name in &requested {
        let reference = report::reference_values(name);
        let base = BenchRow {
            name: name.clone(),
            status: String::new(),
            max_ancilla: None,
            reduced_ancilla: None,
            levels: None,
            declared_cost: None,
            actual_cost: None,
            ref_cost: reference.map(|r| r.cost),
            prior_cost: reference.and_then(|r| r.prior_cost),
        };
        match bench_function(name, dir) {
            Ok(None) => {
                rows.push(BenchRow {
                    status: format!("skipped ({} not found)", dir.join(format!("{name}.pla")).display()),
                    ..base
                });
            }
            Err(msg) => {
                failures += 1;
                rows.push(BenchRow {
                    status: format!("error: {msg}"),
                    ..base
                });
            }
            Ok(Some(function)) => match synth(&function) {
                Ok((circuit, stats)) => {
                    let lowered = decompose(&circuit, &GadgetLibrary::standard())
                        .map_err(|e| AppError::Input(e.to_string()))?;
                    rows.push(BenchRow {
                        status: "verified".to_string(),
                        max_ancilla: Some(stats.max_ancilla),
                        reduced_ancilla: Some(stats.reduced_ancilla),
                        levels: Some(stats.levels),
                        declared_cost: Some(stats.cost),
                        actual_cost: Some(report::level_report(&lowered).cost),
                        ..base
                    });
                }
                Err(e) => {
                    failures += 1;
                    rows.push(BenchRow {
                        status: format!("FAILED: {e}"),
                        ..base
                    });
                }
            },
        }
    }
    print!("{}", report::render_bench_table(&rows));
    if failures > 0 {
        return Err(AppError::Verify(format!("{failures} benchmark(s) failed")));
    }
    Ok(())
}

fn cmd_tt(generator: &str, output: Option<&Path>) -> Result<(), AppError> {
    let function = generators::builtin(generator).ok_or_else(|| {
        AppError::Input(format!(
            "unknown generator `{generator}` (known: {})",
            generators::BUILTIN_NAMES.join(", ")
        ))
    })?;
    write_output(output, &function.to_qtt())
}

fn cmd_ingest_pla(input: &Path, output: Option<&Path>) -> Result<(), AppError> {
    let text = read_file(input)?;
    let function = pla::ingest_pla(&text)
        .map_err(|e| AppError::Input(format!("{}: {e}", input.display())))?;
    let name = input
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "pla".to_string());
    write_output(output, &function.with_name(name).to_qtt())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Synth {
            input,
            output,
            lower,
            report,
        } => cmd_synth(input, output.as_deref(), *lower, *report),
        Command::Verify { netlist, table } => cmd_verify(netlist, table),
        Command::Bench { names, dir } => cmd_bench(names, dir),
        Command::Tt { generator, output } => cmd_tt(generator, output.as_deref()),
        Command::IngestPla { input, output } => cmd_ingest_pla(input, output.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}
