//! `gucycle`: build, verify, and explore universal cycles of combinatorial
//! families, both as cyclic strings and as cyclic host graphs.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gucycle_core::error::Error;
use gucycle_core::families::{decode, enumerate, Family, FamilyParams};
use gucycle_core::graph::HostGraph;
use gucycle_core::strings::{
    build_weight_range, verify_string, CyclicWord, DecodeMode, MAX_ALPHABET,
};
use gucycle_core::{build_gucycle, serialize, verify_file_jobs};

mod figures;

#[derive(Parser)]
#[command(
    name = "gucycle",
    version,
    about = "Universal cycles of subsets, multisets, permutations, involutions, \
             and set partitions",
    after_help = "Exit codes: 0 success, 1 validity or construction failure, \
                  2 usage or parameter error."
)]
struct Cli {
    /// Run the bundled suite of reference strings and hosts and print a
    /// pass/fail table.
    #[arg(long, exclusive = true)]
    seed_figures: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Subsets,
    Multisets,
    Permutations,
    Involutions,
    Partitions,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::Subsets => Family::Subsets,
            FamilyArg::Multisets => Family::Multisets,
            FamilyArg::Permutations => Family::Permutations,
            FamilyArg::Involutions => Family::Involutions,
            FamilyArg::Partitions => Family::Partitions,
        }
    }
}

#[derive(Args)]
struct FamilyOpts {
    /// Family to work with.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Ground-set size n.
    #[arg(long)]
    n: usize,
    /// Object size k (subsets and multisets only).
    #[arg(long)]
    k: Option<usize>,
}

impl FamilyOpts {
    fn params(&self) -> Result<FamilyParams, Error> {
        FamilyParams::new(self.family.into(), self.n, self.k)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Windows read verbatim as q-ary words.
    ExactWord,
    /// Windows as multisets of their symbols.
    WindowMultiset,
    /// Binary windows as sets of 1-positions.
    BinarySubset,
    /// Windows as multiplicity vectors over positions.
    WeightVector,
    /// Windows as relative-order patterns of distinct symbols.
    OrderIso,
    /// Window positions grouped by equal letters.
    LetterPartition,
}

#[derive(Subcommand)]
enum Command {
    /// Build the host graph of a family and emit it in GUC v1 form.
    Build {
        #[command(flatten)]
        family: FamilyOpts,
        /// Write the GUC file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also print each window's decoded object in cycle order.
        #[arg(long)]
        emit_windows: bool,
        /// Also print the host graph in DOT form for external renderers.
        #[arg(long)]
        dot: bool,
    },
    /// Check that a GUC file's windows cover its family exactly once.
    Verify {
        /// GUC v1 file to verify.
        file: PathBuf,
        /// Print nothing; communicate through the exit code only.
        #[arg(long)]
        quiet: bool,
        /// Number of worker threads for window decoding.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List every member of a family, one per line.
    Enumerate {
        #[command(flatten)]
        family: FamilyOpts,
    },
    /// Build a cyclic word whose windows enumerate all words of length M
    /// over an alphabet of size Q with weight between S and T.
    String {
        /// Window length M.
        #[arg(long)]
        length: usize,
        /// Alphabet size Q (symbols 0..Q).
        #[arg(long)]
        alphabet: usize,
        /// Minimum window weight S.
        #[arg(long, default_value_t = 0)]
        min: usize,
        /// Maximum window weight T; defaults to M*(Q-1).
        #[arg(long)]
        max: Option<usize>,
        /// Write the word here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify that a cyclic string's windows cover an object space exactly
    /// once under the chosen decoding mode.
    StringVerify {
        /// The cyclic word. Symbols are 0-9a-z except in letter-partition
        /// mode, which takes arbitrary case-sensitive letters.
        #[arg(long)]
        word: String,
        /// Window length M; windows wrap cyclically.
        #[arg(long)]
        window: usize,
        /// Decoding mode.
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Alphabet size Q (exact-word and weight-vector modes); defaults to
        /// the largest symbol plus one.
        #[arg(long)]
        alphabet: Option<usize>,
        /// Minimum weight, subset size, or total.
        #[arg(long)]
        min: Option<usize>,
        /// Maximum weight, subset size, or total.
        #[arg(long)]
        max: Option<usize>,
        /// Ground-set symbols for window-multiset mode; defaults to the
        /// distinct symbols of the word.
        #[arg(long)]
        symbols: Option<String>,
        /// Print nothing; communicate through the exit code only.
        #[arg(long)]
        quiet: bool,
    },
}

/// 0 success, 1 validity/construction failure, 2 usage/parameter error.
fn exit_code_for(error: &Error) -> u8 {
    match error {
        Error::InvalidParameters(_)
        | Error::DegenerateParameters(_)
        | Error::Parse { .. }
        | Error::Io(_) => 2,
        _ => 1,
    }
}

fn dot_string(host: &HostGraph) -> String {
    let mut out = String::from("graph gucycle {\n");
    for v in 1..=host.size() {
        out.push_str(&format!("  v{v};\n"));
    }
    for ((a, b), mult) in host.edges() {
        for _ in 0..mult {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
    }
    out.push_str("}\n");
    out
}

fn run_build(
    family: FamilyOpts,
    output: Option<PathBuf>,
    emit_windows: bool,
    dot: bool,
) -> Result<(), Error> {
    let params = family.params()?;
    let host = build_gucycle(&params)?;
    let text = serialize(&host, &params);
    match &output {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    if emit_windows {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for i in 1..=host.size() {
            let object = decode(&host.window(i)?, &params)?;
            writeln!(out, "{object}")?;
        }
    }
    if dot {
        print!("{}", dot_string(&host));
    }
    Ok(())
}

fn run_verify(file: PathBuf, quiet: bool, jobs: usize) -> Result<bool, Error> {
    let (report, _) = verify_file_jobs(&file, jobs.max(1))?;
    if !quiet {
        println!("{report}");
    }
    Ok(report.valid())
}

fn run_enumerate(family: FamilyOpts) -> Result<(), Error> {
    let params = family.params()?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for object in enumerate(&params)? {
        writeln!(out, "{object}")?;
    }
    Ok(())
}

fn run_string(
    length: usize,
    alphabet: usize,
    min: usize,
    max: Option<usize>,
    output: Option<PathBuf>,
) -> Result<(), Error> {
    let max = max.unwrap_or(length * alphabet.saturating_sub(1));
    let word = build_weight_range(length, alphabet, min, max)?;
    match &output {
        Some(path) => std::fs::write(path, format!("{word}\n"))?,
        None => println!("{word}"),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_string_verify(
    word: String,
    window: usize,
    mode: ModeArg,
    alphabet: Option<usize>,
    min: Option<usize>,
    max: Option<usize>,
    symbols: Option<String>,
    quiet: bool,
) -> Result<bool, Error> {
    let (cyclic, decode_mode) = match mode {
        ModeArg::LetterPartition => {
            (CyclicWord::from_letters(&word)?, DecodeMode::LetterPartition)
        }
        ModeArg::OrderIso => (CyclicWord::from_text(&word)?, DecodeMode::OrderIso),
        ModeArg::ExactWord | ModeArg::WeightVector => {
            let cyclic = match alphabet {
                Some(q) => CyclicWord::from_text_with_alphabet(&word, q)?,
                None => CyclicWord::from_text(&word)?,
            };
            let q = cyclic.alphabet();
            let min = min.unwrap_or(0);
            let max = max.unwrap_or(window * (q - 1));
            let decode_mode = match mode {
                ModeArg::ExactWord => DecodeMode::ExactWord {
                    alphabet: q,
                    min_weight: min,
                    max_weight: max,
                },
                _ => DecodeMode::WeightVector {
                    alphabet: q,
                    min_total: min,
                    max_total: max,
                },
            };
            (cyclic, decode_mode)
        }
        ModeArg::BinarySubset => {
            let cyclic = CyclicWord::from_text_with_alphabet(&word, 2)?;
            let decode_mode = DecodeMode::BinarySubset {
                min_size: min.unwrap_or(0),
                max_size: max.unwrap_or(window),
            };
            (cyclic, decode_mode)
        }
        ModeArg::WindowMultiset => {
            let cyclic = CyclicWord::from_text(&word)?;
            let ground = match &symbols {
                Some(text) => CyclicWord::from_text(text)?.symbols().to_vec(),
                None => {
                    let mut distinct = cyclic.symbols().to_vec();
                    distinct.sort_unstable();
                    distinct.dedup();
                    distinct
                }
            };
            (cyclic, DecodeMode::WindowMultiset { ground })
        }
    };
    let report = verify_string(&cyclic, window, &decode_mode)?;
    if !quiet {
        println!("{report}");
    }
    Ok(report.valid())
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    if cli.seed_figures {
        return Ok(figures::run_suite());
    }
    match cli.command {
        None => Err(Error::InvalidParameters(
            "a subcommand or --seed-figures is required; see --help".into(),
        )),
        Some(Command::Build {
            family,
            output,
            emit_windows,
            dot,
        }) => {
            run_build(family, output, emit_windows, dot)?;
            Ok(true)
        }
        Some(Command::Verify { file, quiet, jobs }) => run_verify(file, quiet, jobs),
        Some(Command::Enumerate { family }) => {
            run_enumerate(family)?;
            Ok(true)
        }
        Some(Command::String {
            length,
            alphabet,
            min,
            max,
            output,
        }) => {
            if !(2..=MAX_ALPHABET).contains(&alphabet) {
                return Err(Error::InvalidParameters(format!(
                    "alphabet size {alphabet} outside 2..={MAX_ALPHABET}"
                )));
            }
            run_string(length, alphabet, min, max, output)?;
            Ok(true)
        }
        Some(Command::StringVerify {
            word,
            window,
            mode,
            alphabet,
            min,
            max,
            symbols,
            quiet,
        }) => run_string_verify(word, window, mode, alphabet, min, max, symbols, quiet),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // a closed pipe downstream is not our error
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(exit_code_for(&error))
        }
    }
}
