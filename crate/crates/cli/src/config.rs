use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use wigner_core::operator::NU_GRID;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "wigner",
    version,
    about = "Build and audit parity-deformed oscillator, su_nu(2) and so_nu(3) operator algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; csv is numeric and needs exactly one --nu.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Output file; relative paths resolve against WIGNER_OUTPUT_DIR when set.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Deformation parameter values (> -1/2), repeatable or comma separated.
    #[arg(long = "nu", value_delimiter = ',', allow_negative_numbers = true, global = true)]
    nu: Vec<f64>,
    /// Treat pass_with_caveat verdicts as failures.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Clone, Debug, PartialEq, Subcommand)]
pub enum Command {
    /// Table of deformed numbers [n]_nu.
    Numbers {
        #[arg(long, default_value_t = 10)]
        max_n: u64,
    },
    /// Single-mode operators on a truncated Fock space, with their audit.
    SingleMode {
        #[arg(long, default_value_t = 6)]
        dim: usize,
    },
    /// Two-mode operators on a product Fock space, with their audit.
    TwoMode {
        #[arg(long, num_args = 2, value_names = ["D1", "D2"], default_values_t = [4, 4])]
        dims: Vec<usize>,
    },
    /// Quasi-polynomial and monomial realizations of the ladder operators.
    Realizations {
        #[arg(long, default_value_t = 15)]
        max_n: usize,
    },
    /// Jordan-Schwinger su_nu(2) block of spin j = two_j/2.
    SpinRep {
        #[arg(long)]
        two_j: u32,
    },
    /// Holstein-Primakoff su_nu(2) realization of spin j = two_j/2.
    HpRep {
        #[arg(long)]
        two_j: u32,
    },
    /// so_nu(3) generators of spin j = two_j/2.
    So3Rep {
        #[arg(long)]
        two_j: u32,
    },
    /// Full audit of every relation.
    Verify {
        /// Sweep every size up to the given bounds instead of only the largest.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max_two_j: u32,
        #[arg(long, num_args = 2, value_names = ["D1", "D2"], default_values_t = [10, 10])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 15)]
        max_n: usize,
        /// Largest single-mode truncation.
        #[arg(long, default_value_t = 25)]
        max_dim: usize,
    },
    /// Printed relations that fail, with the computed forms that hold.
    Errata {
        #[arg(long, default_value_t = 8)]
        max_two_j: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Numbers { .. } => "numbers",
            Command::SingleMode { .. } => "single-mode",
            Command::TwoMode { .. } => "two-mode",
            Command::Realizations { .. } => "realizations",
            Command::SpinRep { .. } => "spin-rep",
            Command::HpRep { .. } => "hp-rep",
            Command::So3Rep { .. } => "so3-rep",
            Command::Verify { .. } => "verify",
            Command::Errata { .. } => "errata",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Empty means the default grid.
    pub nu_values: Vec<f64>,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub strict: bool,
}

impl RunConfig {
    /// Parses argv (program name first); help and version requests come
    /// back as `Err(Ok(text))`.
    pub fn parse<I, T>(argv: I) -> std::result::Result<Self, std::result::Result<String, CliError>>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        use clap::error::ErrorKind;
        let cli = match Cli::try_parse_from(argv) {
            Ok(cli) => cli,
            Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
                return Err(Ok(e.to_string()))
            }
            Err(e) => return Err(Err(CliError::Usage(e.to_string()))),
        };
        let config = RunConfig {
            command: cli.command,
            nu_values: cli.nu,
            format: cli.format,
            output_path: cli.output,
            strict: cli.strict,
        };
        config.validate().map_err(Err)?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let usage = |m: String| Err(CliError::Usage(m));
        if let Some(nu) = self.nu_values.iter().find(|nu| !(nu.is_finite() && **nu > -0.5)) {
            return usage(format!("--nu {nu} is outside the admissible range nu > -1/2"));
        }
        if self.format == Format::Csv {
            if self.nu_values.len() != 1 {
                return usage("csv output is numeric and needs exactly one --nu value".into());
            }
            if matches!(self.command, Command::Realizations { .. } | Command::Errata { .. }) {
                return usage(format!("{} has no numeric csv form", self.command.name()));
            }
        }
        match &self.command {
            Command::SingleMode { dim } if *dim < 2 => usage("--dim must be at least 2".into()),
            Command::TwoMode { dims } | Command::Verify { dims, .. }
                if dims.iter().any(|&d| d < 2) =>
            {
                usage("--dims must both be at least 2".into())
            }
            Command::Realizations { max_n } | Command::Verify { max_n, .. } if *max_n < 2 => {
                usage("--max-n must be at least 2".into())
            }
            Command::Verify { max_dim, .. } if *max_dim < 2 => {
                usage("--max-dim must be at least 2".into())
            }
            Command::SpinRep { two_j } | Command::HpRep { two_j } | Command::So3Rep { two_j }
                if *two_j < 1 =>
            {
                usage("--two-j must be at least 1".into())
            }
            Command::Verify { max_two_j, .. } | Command::Errata { max_two_j } if *max_two_j < 2 => {
                usage("--max-two-j must be at least 2".into())
            }
            _ => Ok(()),
        }
    }

    /// The requested ν values, or the default grid.
    pub fn nu_grid(&self) -> Vec<f64> {
        if self.nu_values.is_empty() {
            NU_GRID.to_vec()
        } else {
            self.nu_values.clone()
        }
    }

    /// The output file with the directory override applied.
    pub fn resolved_output(&self) -> Option<PathBuf> {
        let path = self.output_path.as_ref()?;
        match std::env::var_os("WIGNER_OUTPUT_DIR") {
            Some(dir) if path.is_relative() => Some(PathBuf::from(dir).join(path)),
            _ => Some(path.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> std::result::Result<RunConfig, i32> {
        RunConfig::parse(std::iter::once("wigner").chain(args.iter().copied()))
            .map_err(|e| e.map(|_| 0).unwrap_or_else(|e| e.exit_code()))
    }

    #[test]
    fn parses_spin_rep() {
        let c = parse(&["spin-rep", "--two-j", "2", "--format", "json"]).unwrap();
        assert_eq!(c.command, Command::SpinRep { two_j: 2 });
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.nu_grid(), NU_GRID.to_vec());
    }

    #[test]
    fn parses_verify() {
        let c = parse(&["verify", "--all", "--max-two-j", "8", "--dims", "10", "10"]).unwrap();
        assert_eq!(
            c.command,
            Command::Verify { all: true, max_two_j: 8, dims: vec![10, 10], max_n: 15, max_dim: 25 }
        );
    }

    #[test]
    fn nu_lists() {
        let c = parse(&["numbers", "--nu", "0.5,1", "--nu", "-0.25"]).unwrap();
        assert_eq!(c.nu_values, vec![0.5, 1.0, -0.25]);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(parse(&["numbers", "--nu", "-0.5"]), Err(2));
        assert_eq!(parse(&["numbers", "--format", "csv"]), Err(2));
        assert_eq!(parse(&["numbers", "--format", "csv", "--nu", "1,2"]), Err(2));
        assert_eq!(parse(&["errata", "--format", "csv", "--nu", "1"]), Err(2));
        assert_eq!(parse(&["spin-rep"]), Err(2));
        assert_eq!(parse(&["spin-rep", "--two-j", "0"]), Err(2));
        assert_eq!(parse(&["single-mode", "--dim", "1"]), Err(2));
        assert_eq!(parse(&["bogus"]), Err(2));
        assert_eq!(parse(&["--help"]), Err(0));
    }
}
