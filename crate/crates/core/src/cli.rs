//! Command-line front end.
//!
//! Exit status: 0 on success or when the checked property holds, 1 when it is
//! refuted (a witness line is printed), 2 on usage, format or domain errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::{
    check_hq, check_hsq, check_qh, hereditary_check, is_h_function, is_latin_hypercube, range,
    spectrum, Verdict,
};
use crate::construction::{compose_sum, identify_variables, sample_with_range, BlockSummand};
use crate::error::{Error, Result};
use crate::format::{parse, parse_block_spec, parse_u64_list, parse_var_list, serialize};
use crate::function::TruthTable;
use crate::interpolation::interpolate_unary;
use crate::partition::{Partition, QVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "kvlogic", version, about = "Construct and verify functions of k-valued logic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build [a_1 f_1(X_1) + ... + a_s f_s(X_s)] mod k and write it as KVLF
    Construct {
        #[arg(long)]
        k: u8,
        /// Partition of the variables, e.g. "1,3;2"
        #[arg(long)]
        blocks: String,
        /// Coefficients a_i, one per block, each coprime to k
        #[arg(long)]
        coeffs: String,
        /// Sample each block function with these ranges, one per block
        #[arg(long, conflicts_with = "functions", required_unless_present = "functions")]
        ranges: Option<String>,
        /// Load each block function from a KVLF file, one per block
        #[arg(long, value_delimiter = ',')]
        functions: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a property; exit 1 and print a witness if it fails
    Verify {
        #[command(flatten)]
        check: Check,
        /// Target ranges for --hsq, one per block
        #[arg(long, requires = "hsq")]
        qvec: Option<String>,
        file: PathBuf,
    },
    /// Print Spr(M, f) for the variable set M
    Spectrum {
        #[arg(long)]
        vars: String,
        file: PathBuf,
    },
    /// Identify the listed variables and write the result as KVLF
    Identify {
        #[arg(long)]
        vars: String,
        file: PathBuf,
    },
    /// Print the polynomial form of a unary function over prime k
    Interp { file: PathBuf },
    /// Print the number of distinct values
    Range { file: PathBuf },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Check {
    /// Latin hypercube
    #[arg(long)]
    latin: bool,
    /// H-function
    #[arg(long = "h")]
    h: bool,
    /// H(q)-function
    #[arg(long, value_name = "Q")]
    hq: Option<u8>,
    /// H(S, q)-function for the partition SPEC (needs --qvec)
    #[arg(long, value_name = "SPEC")]
    hsq: Option<String>,
    /// q̄H-function with one target per variable
    #[arg(long, value_name = "LIST")]
    qh: Option<String>,
    /// Every subfunction with a free variable is an H(q)-function
    #[arg(long, value_name = "Q")]
    hereditary: Option<u8>,
}

fn read_table(path: &Path) -> Result<TruthTable> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Error::domain(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read(path).map_err(|e| Error::domain(format!("{}: {e}", path.display())))?
    };
    parse(&bytes)
}

fn narrow(values: Vec<u64>) -> Result<Vec<u8>> {
    values
        .into_iter()
        .map(|v| u8::try_from(v).map_err(|_| Error::domain(format!("{v} is out of range"))))
        .collect()
}

fn construct(
    k: u8,
    blocks: &str,
    coeffs: &str,
    ranges: Option<&str>,
    functions: &[PathBuf],
    seed: u64,
) -> Result<TruthTable> {
    let partition = Partition::from_blocks(parse_block_spec(blocks)?)?;
    let coeffs = parse_u64_list(coeffs)?;
    if coeffs.len() != partition.len() {
        return Err(Error::Arity {
            expected: partition.len(),
            got: coeffs.len(),
        });
    }
    let pieces: Vec<TruthTable> = match ranges {
        Some(r) => {
            let qs = narrow(parse_u64_list(r)?)?;
            if qs.len() != partition.len() {
                return Err(Error::Arity {
                    expected: partition.len(),
                    got: qs.len(),
                });
            }
            partition
                .blocks()
                .iter()
                .zip(qs)
                .enumerate()
                .map(|(i, (b, q))| sample_with_range(k, b.len(), q, seed.wrapping_add(i as u64)))
                .collect::<Result<_>>()?
        }
        None => {
            if functions.len() != partition.len() {
                return Err(Error::Arity {
                    expected: partition.len(),
                    got: functions.len(),
                });
            }
            functions.iter().map(|p| read_table(p)).collect::<Result<_>>()?
        }
    };
    let summands = partition
        .blocks()
        .iter()
        .zip(coeffs)
        .zip(pieces)
        .map(|((b, a), f)| BlockSummand::new(a, b.clone(), f))
        .collect::<Result<Vec<_>>>()?;
    compose_sum(k, partition.arity(), &summands)
}

fn verify(check: &Check, qvec: Option<&str>, f: &TruthTable) -> Result<Verdict> {
    if check.latin {
        Ok(is_latin_hypercube(f))
    } else if check.h {
        Ok(is_h_function(f))
    } else if let Some(q) = check.hq {
        check_hq(f, q)
    } else if let Some(spec) = &check.hsq {
        let s = Partition::new(f.arity(), parse_block_spec(spec)?)?;
        let qvec = qvec.ok_or_else(|| Error::domain("--hsq needs --qvec"))?;
        check_hsq(f, &s, &QVector::new(narrow(parse_u64_list(qvec)?)?))
    } else if let Some(list) = &check.qh {
        check_qh(f, &QVector::new(narrow(parse_u64_list(list)?)?))
    } else if let Some(q) = check.hereditary {
        hereditary_check(f, q)
    } else {
        unreachable!("clap requires one check")
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    let mut emit = |s: String| -> Result<()> {
        out.write_all(s.as_bytes())
            .map_err(|e| Error::domain(format!("stdout: {e}")))
    };
    match command {
        Command::Construct {
            k,
            blocks,
            coeffs,
            ranges,
            functions,
            seed,
        } => {
            let f = construct(k, &blocks, &coeffs, ranges.as_deref(), &functions, seed)?;
            emit(serialize(&f))?;
        }
        Command::Verify { check, qvec, file } => {
            let f = read_table(&file)?;
            return match verify(&check, qvec.as_deref(), &f)? {
                Verdict::Holds => {
                    emit("holds\n".into())?;
                    Ok(EXIT_OK)
                }
                Verdict::Refuted(w) => {
                    emit(format!("refuted\n{w}\n"))?;
                    Ok(EXIT_REFUTED)
                }
            };
        }
        Command::Spectrum { vars, file } => {
            let f = read_table(&file)?;
            emit(format!("{}\n", spectrum(&parse_var_list(&vars)?, &f)?))?;
        }
        Command::Identify { vars, file } => {
            let f = read_table(&file)?;
            emit(serialize(&identify_variables(&f, &parse_var_list(&vars)?)?))?;
        }
        Command::Interp { file } => {
            let f = read_table(&file)?;
            emit(format!("{}\n", interpolate_unary(&f)?))?;
        }
        Command::Range { file } => {
            let f = read_table(&file)?;
            emit(format!("{}\n", range(&f)))?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_USAGE;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
