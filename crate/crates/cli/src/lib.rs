//! Argument handling and dispatch for the `permstego` binary.
//!
//! Exit codes: 0 success, 2 bad input, 3 cover too small, 4 key problem, 5 I/O failure.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use permstego::analysis;
use permstego::{factoradic, radix, Alphabet, BaselineOrdering, Channel, CoverList, Error, FrequencyTable, PermutationCode};

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_KEY: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "permstego", version, about = "Hide text in the order of a list")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Read a message on stdin and print its minimal permutation code.
    Encode(RawArgs),
    /// Read a permutation code such as `[3,1,0,2]` on stdin and print the message.
    Decode(RawArgs),
    /// Read a message on stdin and print the cover list reordered to carry it.
    EncodeCover(CoverArgs),
    /// Read a reordered cover list on stdin and print the hidden message.
    DecodeCover(CoverArgs),
    /// Print a seeded random baseline ordering for a cover of N items.
    Keygen {
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the channel-entropy experiments and write CSV tables.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct AlphabetArgs {
    /// Symbols in digit order, e.g. "abcdefghijklmnopqrstuvwxyz ".
    #[arg(long, conflicts_with = "freq_table")]
    pub alphabet: Option<String>,
    /// Build the alphabet from a `<char><TAB><weight>` frequency table.
    #[arg(long, value_name = "PATH")]
    pub freq_table: Option<PathBuf>,
    /// Lowercase message input before encoding.
    #[arg(long)]
    pub lowercase: bool,
}

#[derive(Debug, Args)]
pub struct RawArgs {
    #[command(flatten)]
    pub alphabet: AlphabetArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    /// Cover list file, one item per line, in baseline order.
    #[arg(long, value_name = "PATH")]
    pub cover: PathBuf,
    /// Sort the cover list byte-wise before using it as the baseline.
    #[arg(long)]
    pub sort_lex: bool,
    /// Key file holding a baseline ordering such as `[2,0,1]`.
    #[arg(long, value_name = "PATH", conflicts_with = "key_seed")]
    pub key: Option<PathBuf>,
    /// Derive the key from a seed instead of a key file.
    #[arg(long)]
    pub key_seed: Option<u64>,
    /// Append (and strip) a sentinel symbol so trailing zero-valued symbols survive.
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    pub sentinel: Toggle,
    #[command(flatten)]
    pub alphabet: AlphabetArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub fig: u8,
    /// Samples per list length (default 100000) or per message length for fig 3 (default 10000).
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest list length for figs 1 and 2.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Largest message length for fig 3.
    #[arg(long, default_value_t = 30)]
    pub max_len: usize,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl fmt::Display) -> Self {
        Self { code, message: message.to_string() }
    }

    fn io(path: &Path, err: impl fmt::Display) -> Self {
        Self::new(EXIT_IO, format!("{}: {err}", path.display()))
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CoverTooSmall { .. } | Error::CapacityExceeded { .. } => EXIT_CAPACITY,
            Error::KeyLengthMismatch { .. } => EXIT_KEY,
            _ => EXIT_INPUT,
        };
        Self::new(code, err)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
                0
            };
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let emit = |out: &mut dyn Write, text: &str| out.write_all(text.as_bytes()).map_err(|e| Failure::new(EXIT_IO, e));
    match command {
        Command::Encode(args) => {
            let alphabet = load_alphabet(&args.alphabet)?;
            let message = read_message(stdin, args.alphabet.lowercase)?;
            let s = radix::message_to_natural(&message, &alphabet)?;
            let code = factoradic::encode_permutation(&s, factoradic::min_factorial_length(&s))?;
            emit(stdout, &format!("{code}\n"))
        }
        Command::Decode(args) => {
            let alphabet = load_alphabet(&args.alphabet)?;
            let code: PermutationCode = read_all(stdin)?.parse()?;
            let s = factoradic::decode_permutation(&code);
            emit(stdout, &format!("{}\n", radix::natural_to_message(&s, &alphabet)))
        }
        Command::EncodeCover(args) => {
            let channel = build_channel(&args)?;
            let message = read_message(stdin, args.alphabet.lowercase)?;
            let cover = channel.encode(&message).map_err(|e| match e {
                Error::CoverTooSmall { required, available } => Failure::new(
                    EXIT_CAPACITY,
                    format!("cover list has {available} items; this message needs at least {required}"),
                ),
                other => other.into(),
            })?;
            emit(stdout, &cover.to_string())
        }
        Command::DecodeCover(args) => {
            let channel = build_channel(&args)?;
            let observed = CoverList::parse(&read_all(stdin)?)?;
            let decoded = channel.decode(&observed)?;
            if decoded.sentinel_missing {
                let _ = writeln!(stderr, "warning: no sentinel found; printing the raw decoded text");
            }
            emit(stdout, &format!("{}\n", decoded.text))
        }
        Command::Keygen { n, seed } => {
            if n == 0 {
                return Err(Failure::new(EXIT_INPUT, "key length must be at least 1"));
            }
            emit(stdout, &format!("{}\n", BaselineOrdering::generate(n, seed)))
        }
        Command::Analyze(args) => analyze(&args, stdout),
    }
}

fn read_all(stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut buf = String::new();
    stdin
        .read_to_string(&mut buf)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("reading stdin: {e}")))?;
    Ok(buf)
}

/// Stdin minus one trailing line ending; everything else is significant.
fn read_message(stdin: &mut dyn Read, lowercase: bool) -> Result<String, Failure> {
    let mut text = read_all(stdin)?;
    if text.ends_with('\n') {
        text.pop();
        if text.ends_with('\r') {
            text.pop();
        }
    }
    Ok(if lowercase { text.to_lowercase() } else { text })
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn load_alphabet(args: &AlphabetArgs) -> Result<Alphabet, Failure> {
    if let Some(path) = &args.freq_table {
        let table = FrequencyTable::parse(&read_file(path)?)
            .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
        return Ok(Alphabet::frequency_ordered(&table)?);
    }
    match &args.alphabet {
        Some(symbols) => Ok(Alphabet::new(symbols.chars())?),
        None => Ok(Alphabet::latin()),
    }
}

fn build_channel(args: &CoverArgs) -> Result<Channel, Failure> {
    let alphabet = load_alphabet(&args.alphabet)?;
    let cover = CoverList::parse(&read_file(&args.cover)?)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", args.cover.display())))?;
    let baseline = if args.sort_lex { cover.canonical() } else { cover };
    let key = match (&args.key, args.key_seed) {
        (Some(path), _) => Some(
            read_file(path)?
                .parse::<BaselineOrdering>()
                .map_err(|e| Failure::new(EXIT_KEY, format!("{}: {e}", path.display())))?,
        ),
        (None, Some(seed)) => Some(BaselineOrdering::generate(baseline.len(), seed)),
        (None, None) => None,
    };
    let mut channel = Channel::new(alphabet, baseline).with_sentinel(args.sentinel == Toggle::On);
    if let Some(key) = key {
        channel = channel
            .with_key(key)
            .map_err(|e| Failure::new(EXIT_KEY, e))?;
    }
    Ok(channel)
}

fn analyze(args: &AnalyzeArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    fs::create_dir_all(&args.out).map_err(|e| Failure::io(&args.out, e))?;
    let path = args.out.join(format!("fig{}.csv", args.fig));
    let file = fs::File::create(&path).map_err(|e| Failure::io(&path, e))?;
    let out = io::BufWriter::new(file);
    let summary = match args.fig {
        1 => {
            let samples = args.samples.unwrap_or(100_000);
            let tables: Vec<_> = (1..=args.max_n)
                .map(|n| analysis::estimate_position_entropy(n, samples, args.seed))
                .collect();
            analysis::write_position_entropy_csv(out, &tables).map_err(|e| Failure::io(&path, e))?;
            let biased = tables
                .iter()
                .filter(|t| t.n >= 3)
                .filter(|t| t.entropy_bits[1..].iter().all(|&h| t.entropy_bits[0] < h))
                .count();
            format!(
                "fig1: {} list lengths, first position lowest in {biased} of {} lengths with n >= 3",
                tables.len(),
                tables.iter().filter(|t| t.n >= 3).count()
            )
        }
        2 => {
            let samples = args.samples.unwrap_or(100_000);
            let rows = analysis::total_entropy_report(1..=args.max_n, samples, args.seed);
            analysis::write_total_entropy_csv(out, &rows).map_err(|e| Failure::io(&path, e))?;
            let worst = rows.iter().map(|r| r.deficit()).fold(0.0, f64::max);
            format!("fig2: {} rows, largest deficit {worst:.6} bits", rows.len())
        }
        _ => {
            let samples = args.samples.unwrap_or(10_000);
            let records = analysis::message_length_scaling(1..=args.max_len, &Alphabet::latin(), samples, args.seed);
            analysis::write_scaling_csv(out, &records).map_err(|e| Failure::io(&path, e))?;
            let last = records.last().map(|r| r.mean_items).unwrap_or(1.0);
            format!("fig3: {} message lengths, mean items at longest {last:.6}", records.len())
        }
    };
    writeln!(stdout, "{summary} -> {}", path.display()).map_err(|e| Failure::new(EXIT_IO, e))
}
