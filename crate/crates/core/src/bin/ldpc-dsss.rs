//! Command-line front end: code construction, single-shot encode/decode and
//! BER sweeps.

use clap::{Args, Parser, Subcommand, ValueEnum};
use ldpc_dsss::channel::SnrReference;
use ldpc_dsss::dsss::SpreadMode;
use ldpc_dsss::gf2::{self, PegParams};
use ldpc_dsss::sim::{self, Coding, MatrixSource, SimConfig, SnrSweep};
use ldpc_dsss::spa::{self, CheckForm};
use ldpc_dsss::{BitBlock, Error, Result};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ldpc-dsss", version, about = "LDPC coding with parity-check-derived DSSS")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a parity-check matrix by progressive edge growth and write it as alist.
    Construct {
        /// "m,r,degrees[,seed]"; degrees is one number or deg*count terms joined by '+'.
        #[arg(long)]
        peg: PegParams,
        /// Overrides the seed in --peg.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the girth of an alist matrix.
    Girth {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Encode one information word (a file of 0/1 characters).
    Encode {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode one frame of channel LLRs (one value per line).
    Decode {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = spa::DEFAULT_MAX_ITERATIONS)]
        max_iter: usize,
        #[arg(long, value_enum, default_value_t = Form::Tanh)]
        form: Form,
        /// Print the systematic information bits instead of the codeword.
        #[arg(long)]
        info: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a Monte Carlo BER sweep.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, conflicts_with = "peg", required_unless_present = "peg")]
    matrix: Option<PathBuf>,
    #[arg(long)]
    peg: Option<PegParams>,
    /// start:step:stop in dB, or a single value.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    snr_db: SnrSweep,
    #[arg(long, value_enum, default_value_t = SnrRef::Chip)]
    snr_ref: SnrRef,
    /// Processing gains, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pg: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Spread::Xor)]
    spread_mode: Spread,
    /// 1-based columns of H used for the spreading sequence.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    spread_cols: Vec<usize>,
    #[arg(long, default_value_t = spa::DEFAULT_MAX_ITERATIONS)]
    max_iter: usize,
    #[arg(long, value_enum, default_value_t = Form::Tanh)]
    form: Form,
    /// Frames run at every point before the error target is consulted.
    #[arg(long, default_value_t = 50)]
    runs: u64,
    #[arg(long, default_value_t = 500)]
    min_errors: u64,
    #[arg(long, default_value_t = 10_000)]
    max_frames: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    plot_data: Option<PathBuf>,
    #[arg(long)]
    noiseless: bool,
    /// Bypass the LDPC code; H only supplies the spreading sequence.
    #[arg(long)]
    uncoded: bool,
    /// Transmit the all-zero word.
    #[arg(long)]
    all_zero: bool,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Tanh,
    Signmag,
}

impl From<Form> for CheckForm {
    fn from(f: Form) -> Self {
        match f {
            Form::Tanh => CheckForm::Tanh,
            Form::Signmag => CheckForm::SignMagnitude,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SnrRef {
    Chip,
    Ebn0,
}

#[derive(Clone, Copy, ValueEnum)]
enum Spread {
    Xor,
    Not,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_owned(),
        source: e,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io {
            path: path.to_owned(),
            source: e,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_bits(text: &str) -> Result<BitBlock> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Config(format!("unexpected character `{other}` in bit file"))),
        })
        .collect()
}

fn parse_llrs(text: &str) -> Result<Vec<f64>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| {
            l.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("line {}: `{}` is not a number", n + 1, l.trim())))
        })
        .collect()
}

fn simulate(args: SimulateArgs) -> Result<()> {
    let matrix = match (args.matrix, args.peg) {
        (Some(path), _) => MatrixSource::Alist(path),
        (None, Some(peg)) => MatrixSource::Peg(peg),
        (None, None) => unreachable!("clap requires one of --matrix/--peg"),
    };
    if args.spread_cols.contains(&0) {
        return Err(Error::Config("--spread-cols are 1-based".into()));
    }
    let mut config = SimConfig::new(matrix);
    config.coding = if args.uncoded { Coding::Uncoded } else { Coding::Ldpc };
    config.spread_mode = match args.spread_mode {
        Spread::Xor => SpreadMode::XorColumns,
        Spread::Not => SpreadMode::NotColumn,
    };
    config.spread_columns = args.spread_cols.iter().map(|c| c - 1).collect();
    config.gains = args.pg;
    config.sweep = args.snr_db;
    config.snr_ref = match args.snr_ref {
        SnrRef::Chip => SnrReference::Chip,
        SnrRef::Ebn0 => SnrReference::EbN0,
    };
    config.noiseless = args.noiseless;
    config.max_iterations = args.max_iter;
    config.form = args.form.into();
    config.runs = args.runs;
    config.min_errors = args.min_errors;
    config.max_frames = args.max_frames;
    config.seed = args.seed;
    config.all_zero_data = args.all_zero;

    let simulation = sim::Simulation::new(config)?;
    let result = match args.workers {
        Some(w) => simulation.run_with_workers(w)?,
        None => simulation.run()?,
    };
    for r in &result.records {
        eprintln!(
            "snr {:>6} pg {:>3}: {} frames, {} / {} bit errors, ber {:.3e}, {:.2?}",
            r.snr_db,
            r.gain,
            r.frames,
            r.bit_errors,
            r.info_bits,
            r.ber(),
            r.wall_time
        );
    }
    emit(args.out.as_deref(), &sim::csv_string(&result)?)?;
    if let Some(path) = args.plot_data {
        sim::emit_plot_data(&result, path)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Construct { mut peg, seed, out } => {
            if let Some(s) = seed {
                peg.seed = s;
            }
            let h = peg.build()?;
            eprintln!("{}: girth {}", h.name(), gf2::girth(&h));
            emit(out.as_deref(), &gf2::to_alist_string(&h))
        }
        Command::Girth { matrix } => {
            let h = gf2::load_alist(matrix)?;
            println!("{}", gf2::girth(&h));
            Ok(())
        }
        Command::Encode { matrix, input, out } => {
            let h = gf2::load_alist(matrix)?;
            let g = gf2::derive_generator(&h)?;
            let info = parse_bits(&read(&input)?)?;
            let word = g.encode(&info)?;
            emit(out.as_deref(), &format!("{word}\n"))
        }
        Command::Decode {
            matrix,
            input,
            max_iter,
            form,
            info,
            out,
        } => {
            let h = gf2::load_alist(matrix)?;
            let llrs = parse_llrs(&read(&input)?)?;
            let result = spa::decode(&llrs, &h, max_iter, form.into())?;
            eprintln!("converged={} iterations={}", result.converged, result.iterations);
            let bits = if info {
                gf2::derive_generator(&h)?.extract_info(&result.bits)?
            } else {
                result.bits
            };
            emit(out.as_deref(), &format!("{bits}\n"))
        }
        Command::Simulate(args) => simulate(args),
    }
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
