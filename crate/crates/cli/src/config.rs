use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use satake_core::{Coweight, Isogeny, RootDatum, RootSystem, DEFAULT_WEYL_CAP};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Cartan type of the datum, e.g. A2, B3, G2.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    pub cartan_type: Option<String>,

    /// Isogeny class for --type: sc (simply connected) or adjoint.
    #[arg(long, global = true, default_value = "sc", value_parser = parse_isogeny)]
    pub isogeny: Isogeny,

    /// Root datum JSON file ("-" reads standard input).
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "cartan_type")]
    pub file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: OutputFormat,

    /// Partition-function cache file, read before and written after the run.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    /// Ignore --cache entirely.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Doubled-height bound for `report` and `check`.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(i64).range(0..))]
    pub height_bound: i64,

    /// Largest Weyl group the multiplicity formulas may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_CAP)]
    pub weyl_cap: usize,
}

fn parse_isogeny(s: &str) -> Result<Isogeny, String> {
    s.parse()
}

impl Config {
    pub fn load_datum(&self) -> Result<RootDatum, CliError> {
        let datum = match (&self.cartan_type, &self.file) {
            (Some(t), None) => RootDatum::build(t, self.isogeny)?,
            (None, Some(path)) => {
                let text = if path.as_os_str() == "-" {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s)?;
                    s
                } else {
                    std::fs::read_to_string(path)
                        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?
                };
                RootDatum::from_json(&text).map_err(|e| CliError::Input(format!("malformed root datum JSON: {e}")))?
            }
            _ => return Err(CliError::Input("specify the datum with --type or --file".into())),
        };
        datum
            .validate()
            .map_err(|report| CliError::Input(format!("invalid root datum: {report}")))?;
        Ok(datum)
    }
}

/// Comma-separated integers in the cocharacter basis, `fw:i` for the i-th
/// fundamental coweight (1-based), or `0` for the origin.
pub fn parse_coweight(sys: &RootSystem, text: &str) -> Result<Coweight, CliError> {
    let text = text.trim();
    let n = sys.lattice_rank();
    if let Some(idx) = text.strip_prefix("fw:") {
        let i: usize = idx
            .parse()
            .map_err(|_| CliError::Input(format!("bad fundamental coweight index `{idx}`")))?;
        if i == 0 {
            return Err(CliError::Input("fundamental coweights are numbered from 1".into()));
        }
        return Ok(sys.fundamental_coweight(i - 1)?);
    }
    if text == "0" {
        return Ok(Coweight::zero(n));
    }
    let coords = text
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Input(format!("bad coweight `{text}`: expected comma-separated integers")))?;
    if coords.len() != n {
        return Err(CliError::Input(format!(
            "coweight `{text}` has {} coordinates, the lattice has rank {n}",
            coords.len()
        )));
    }
    Ok(Coweight(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coweight_syntax() {
        let sys = RootSystem::new(RootDatum::build("A2", Isogeny::Adjoint).unwrap()).unwrap();
        assert_eq!(parse_coweight(&sys, "1,-1").unwrap(), Coweight(vec![1, -1]));
        assert_eq!(parse_coweight(&sys, " 2, 0 ").unwrap(), Coweight(vec![2, 0]));
        assert_eq!(parse_coweight(&sys, "fw:2").unwrap(), Coweight(vec![0, 1]));
        assert_eq!(parse_coweight(&sys, "0").unwrap(), Coweight(vec![0, 0]));
        assert!(parse_coweight(&sys, "fw:0").is_err());
        assert!(parse_coweight(&sys, "fw:3").is_err());
        assert!(parse_coweight(&sys, "1").is_err());
        assert!(parse_coweight(&sys, "a,b").is_err());
        let sc = RootSystem::new(RootDatum::build("A1", Isogeny::SimplyConnected).unwrap()).unwrap();
        assert!(parse_coweight(&sc, "fw:1").is_err());
    }
}
