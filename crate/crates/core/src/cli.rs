//! Command-line interface.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::io::{parse_fasta, read_phylip, write_fasta, write_phylip, AlphabetChoice, ParsedFasta};
use crate::matrix::{maw_sets, pairwise_matrix, Mode};
use crate::phylo::{
    accuracy, neighbor_joining, rf_distance, rotate_randomly, run_experiment, simulate_dataset,
    SimParams, Tree, REPORT_HEADER,
};
use crate::text::Alphabet;

#[derive(Debug, Parser)]
#[command(
    name = "mawdist",
    version,
    about = "Sequence comparison with minimal absent words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum AlphabetArg {
    /// Every distinct letter in the input
    #[default]
    Auto,
    /// A, C, G and T only
    Dna,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pairwise LW distance matrix in PHYLIP format
    Dist {
        fasta: PathBuf,
        #[arg(long)]
        circular: bool,
        /// Only count MAWs of at most this length
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, env = "MAWDIST_WORKERS")]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        alphabet: AlphabetArg,
        /// Drop symbols outside the alphabet instead of failing
        #[arg(long)]
        lenient: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the sorted MAWs of every sequence to <dir>/<id>.maw
    Maw {
        fasta: PathBuf,
        #[arg(long)]
        circular: bool,
        #[arg(long, value_enum, default_value_t)]
        alphabet: AlphabetArg,
        #[arg(long)]
        lenient: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Simulate a DNA dataset along a random tree
    Simulate {
        #[arg(long)]
        taxa: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        sub: f64,
        #[arg(long)]
        del: f64,
        #[arg(long)]
        ins: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        /// Newick file for the true tree
        #[arg(long)]
        tree: PathBuf,
    },
    /// Rotate every sequence by a random offset
    Rotate {
        fasta: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Neighbor-joining tree from a PHYLIP matrix
    Nj {
        phylip: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Robinson-Foulds distance and accuracy of an inferred tree
    Eval {
        #[arg(long = "true")]
        truth: PathBuf,
        #[arg(long)]
        inferred: PathBuf,
    },
    /// Simulate, rotate, infer and score; prints one TSV line per mode
    Experiment {
        #[arg(long)]
        taxa: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        sub: f64,
        #[arg(long)]
        del: f64,
        #[arg(long)]
        ins: f64,
        /// First seed
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of consecutive seeds
        #[arg(long, default_value_t = 1)]
        runs: u64,
        #[arg(long, env = "MAWDIST_WORKERS")]
        workers: Option<usize>,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn read_dataset(path: &Path, alphabet: AlphabetArg, lenient: bool) -> Result<ParsedFasta> {
    let choice = match alphabet {
        AlphabetArg::Auto => AlphabetChoice::Auto,
        AlphabetArg::Dna => AlphabetChoice::Fixed(Alphabet::dna()),
    };
    let parsed = parse_fasta(BufReader::new(File::open(path)?), &choice, lenient)?;
    if parsed.stripped > 0 {
        eprintln!(
            "warning: dropped {} symbols outside the alphabet",
            parsed.stripped
        );
    }
    Ok(parsed)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn read_tree(path: &Path) -> Result<Tree> {
    Tree::from_newick(&fs::read_to_string(path)?)
}

fn file_stem_for(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c == '/' || c == '\\' || c == '\0' {
                '_'
            } else {
                c
            }
        })
        .collect()
}

/// Runs one parsed command, writing human-readable output to `out`.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    match cli.command {
        Command::Dist {
            fasta,
            circular,
            max_len,
            workers,
            alphabet,
            lenient,
            output,
        } => {
            let data = read_dataset(&fasta, alphabet, lenient)?;
            let mode = if circular {
                Mode::Circular
            } else {
                Mode::Linear
            };
            let workers = workers.unwrap_or_else(default_workers);
            let matrix = pairwise_matrix(&data.sequences, &data.alphabet, mode, max_len, workers)?;
            let k = matrix.len();
            let truncated = write_phylip(&matrix, create(&output)?)?;
            if truncated > 0 {
                eprintln!("warning: {truncated} names truncated to 10 characters");
            }
            eprintln!("{} pairs", k * (k - 1) / 2);
        }
        Command::Maw {
            fasta,
            circular,
            alphabet,
            lenient,
            output,
        } => {
            let data = read_dataset(&fasta, alphabet, lenient)?;
            let mode = if circular {
                Mode::Circular
            } else {
                Mode::Linear
            };
            let sets = maw_sets(&data.sequences, &data.alphabet, mode)?;
            fs::create_dir_all(&output)?;
            for (seq, set) in data.sequences.iter().zip(&sets) {
                let mut w = create(&output.join(format!("{}.maw", file_stem_for(&seq.id))))?;
                for word in set.sorted_symbol_words() {
                    w.write_all(&word)?;
                    w.write_all(b"\n")?;
                }
                w.flush()?;
            }
        }
        Command::Simulate {
            taxa,
            len,
            sub,
            del,
            ins,
            seed,
            output,
            tree,
        } => {
            let params = SimParams {
                taxa,
                root_length: len,
                substitution_rate: sub,
                deletion_rate: del,
                insertion_rate: ins,
                seed,
            };
            let (seqs, truth) = simulate_dataset(&params)?;
            write_fasta(&seqs, create(&output)?)?;
            fs::write(&tree, format!("{}\n", truth.to_newick()))?;
        }
        Command::Rotate {
            fasta,
            seed,
            output,
        } => {
            let data = read_dataset(&fasta, AlphabetArg::Auto, false)?;
            write_fasta(&rotate_randomly(&data.sequences, seed), create(&output)?)?;
        }
        Command::Nj { phylip, output } => {
            let matrix = read_phylip(BufReader::new(File::open(&phylip)?))?;
            let tree = neighbor_joining(&matrix)?;
            fs::write(&output, format!("{}\n", tree.to_newick()))?;
        }
        Command::Eval { truth, inferred } => {
            let truth = read_tree(&truth)?;
            let inferred = read_tree(&inferred)?;
            let rf = rf_distance(&inferred, &truth)?;
            let acc = accuracy(&inferred, &truth)?;
            writeln!(out, "rf {rf}")?;
            writeln!(out, "accuracy {acc:.6}")?;
        }
        Command::Experiment {
            taxa,
            len,
            sub,
            del,
            ins,
            seed,
            runs,
            workers,
        } => {
            let workers = workers.unwrap_or_else(default_workers);
            writeln!(out, "{REPORT_HEADER}")?;
            for s in seed..seed.saturating_add(runs) {
                let params = SimParams {
                    taxa,
                    root_length: len,
                    substitution_rate: sub,
                    deletion_rate: del,
                    insertion_rate: ins,
                    seed: s,
                };
                let outcome = run_experiment(&params, workers)?;
                for line in outcome.report_lines() {
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", one_line(&e));
            1
        }
    }
}

fn one_line(e: &Error) -> String {
    e.to_string().replace('\n', " ")
}
