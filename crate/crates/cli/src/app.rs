use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use densem_core::entailment::NormalizationStrategy;

use crate::commands::{cmd_compose, cmd_disc, cmd_entail, cmd_parse, ComposeOptions, DiscOptions};
use crate::error::{CliError, Result};
use crate::lexicon::load_lexicon;

#[derive(Debug, Parser)]
#[command(
    name = "densem",
    version,
    about = "Graded entailment between density-matrix sentence meanings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LexiconArgs {
    /// Lexicon file (JSON).
    #[arg(long, value_name = "PATH")]
    lexicon: PathBuf,
    /// Type the sentence must reduce to.
    #[arg(long, value_name = "TYPE", default_value = "s")]
    target: String,
}

#[derive(Debug, Args)]
struct MeaningArgs {
    /// Evaluate words marked as subject pronouns with the Frobenius relative-clause map.
    #[arg(long)]
    frobenius_pronouns: bool,
    #[arg(long, value_name = "STRATEGY", default_value = "none", value_parser = parse_strategy)]
    normalize: NormalizationStrategy,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find a type reduction and print its cups and survivors.
    Parse {
        #[command(flatten)]
        lexicon: LexiconArgs,
        sentence: String,
    },
    /// Print the composed meaning of a sentence.
    Compose {
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[command(flatten)]
        meaning: MeaningArgs,
        sentence: String,
    },
    /// Strength with which the first sentence entails the second.
    Entail {
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[command(flatten)]
        meaning: MeaningArgs,
        hyponym: String,
        hypernym: String,
    },
    /// Write entailment strengths into a target state over the Bloch disc as CSV.
    Disc {
        #[arg(long, allow_negative_numbers = true)]
        target_x: f64,
        #[arg(long, allow_negative_numbers = true)]
        target_z: f64,
        #[arg(long, default_value_t = 101)]
        resolution: usize,
        #[arg(long, value_name = "STRATEGY", default_value = "maxeig", value_parser = parse_strategy)]
        normalize: NormalizationStrategy,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

fn parse_strategy(s: &str) -> std::result::Result<NormalizationStrategy, String> {
    s.parse()
}

fn compose_options(lexicon: &LexiconArgs, meaning: &MeaningArgs) -> ComposeOptions {
    ComposeOptions {
        target: lexicon.target.clone(),
        frobenius_pronouns: meaning.frobenius_pronouns,
        normalize: meaning.normalize,
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8> {
    let write_err = |source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match command {
        Command::Parse { lexicon, sentence } => {
            let lex = load_lexicon(&lexicon.lexicon)?;
            let report = cmd_parse(&lex, &sentence, &lexicon.target)?;
            write!(out, "{report}").map_err(write_err)?;
            Ok(if report.is_grammatical() { 0 } else { 2 })
        }
        Command::Compose {
            lexicon,
            meaning,
            sentence,
        } => {
            let lex = load_lexicon(&lexicon.lexicon)?;
            let report = cmd_compose(&lex, &sentence, &compose_options(&lexicon, &meaning))?;
            write!(out, "{report}").map_err(write_err)?;
            Ok(0)
        }
        Command::Entail {
            lexicon,
            meaning,
            hyponym,
            hypernym,
        } => {
            let lex = load_lexicon(&lexicon.lexicon)?;
            let report = cmd_entail(&lex, &hyponym, &hypernym, &compose_options(&lexicon, &meaning))?;
            write!(out, "{report}").map_err(write_err)?;
            Ok(0)
        }
        Command::Disc {
            target_x,
            target_z,
            resolution,
            normalize,
            out: path,
        } => {
            let report = cmd_disc(&DiscOptions {
                target_x,
                target_z,
                resolution,
                normalize,
                out: path,
            })?;
            write!(out, "{report}").map_err(write_err)?;
            Ok(0)
        }
    }
}

/// Runs one command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code() as u8
        }
    }
}
