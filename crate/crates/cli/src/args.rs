use std::path::PathBuf;

use cellkit_core::cells::Side;
use cellkit_core::lusztig::{Property, DEFAULT_SEED};
use cellkit_core::Partition;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cellkit", version, about = "Kazhdan–Lusztig cells, Murphy bases and Lusztig's ring J for S_n")]
pub struct Cli {
    /// Directory for cached KL tables and h-tensors. Without it nothing is cached.
    #[arg(long, global = true, env = "CELLKIT_CACHE", value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Allow rank 7 and above for commands that need the full h-tensor.
    #[arg(long, global = true)]
    pub force: bool,

    /// Fail with exit code 3 on an unreadable cache file instead of recomputing.
    #[arg(long, global = true)]
    pub strict_cache: bool,

    /// Report wall-clock time per stage on stderr and in JSON output.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Negate μ(Y, W) after loading the KL table. For testing the verifiers.
    #[arg(long, global = true, hide = true, value_name = "Y,W")]
    pub inject_mu_fault: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Rank {
    #[arg(long, value_name = "N")]
    pub n: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Kazhdan–Lusztig polynomials p_{y,w} and μ(y,w).
    Kl {
        #[command(flatten)]
        rank: Rank,
        /// A single pair, e.g. `[1,3,2],[3,2,1]` or `1,s1 s2 s1`.
        #[arg(long, value_name = "Y,W")]
        pair: Option<String>,
    },
    /// Left, right or two-sided cells.
    Cells {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// The Murphy elements ỹ_st of one shape, in the T-basis or the C-basis.
    Murphy {
        #[command(flatten)]
        rank: Rank,
        /// Shape as a comma list, e.g. `3,1`.
        #[arg(long, value_name = "P")]
        lambda: Partition,
        #[arg(long)]
        to_c: bool,
    },
    /// The element Z_w in the C-basis.
    Zelem {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, value_name = "PERM")]
        w: String,
    },
    /// a(w), Δ(w), n_w and membership in 𝒟 for every w.
    Afn {
        #[command(flatten)]
        rank: Rank,
    },
    /// Checks P1–P15 and the S_n-specific statements.
    Verify {
        #[command(flatten)]
        rank: Rank,
        /// Comma list such as `P1,P7,15`; all properties when omitted.
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        props: Option<Vec<Property>>,
        /// Random quadruples for P15 above rank 4.
        #[arg(long, value_name = "K", default_value_t = 1_000_000)]
        sample: u64,
        #[arg(long, value_name = "S", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Structure checks for the ring J.
    Jring {
        #[command(flatten)]
        rank: Rank,
    },
    /// Row insertion of a permutation.
    Rsk {
        #[arg(long, value_name = "PERM")]
        perm: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Kl { .. } => "kl",
            Command::Cells { .. } => "cells",
            Command::Murphy { .. } => "murphy",
            Command::Zelem { .. } => "zelem",
            Command::Afn { .. } => "afn",
            Command::Verify { .. } => "verify",
            Command::Jring { .. } => "jring",
            Command::Rsk { .. } => "rsk",
        }
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            Command::Kl { rank, .. }
            | Command::Cells { rank, .. }
            | Command::Murphy { rank, .. }
            | Command::Zelem { rank, .. }
            | Command::Afn { rank }
            | Command::Verify { rank, .. }
            | Command::Jring { rank } => Some(rank.n),
            Command::Rsk { .. } => None,
        }
    }

    pub fn needs_tensor(&self) -> bool {
        matches!(self, Command::Afn { .. } | Command::Verify { .. } | Command::Jring { .. })
    }

    /// The command line with every option that affects the result, and
    /// nothing else.
    pub fn canonical(&self, fault: Option<&str>) -> String {
        let q = |s: &str| if s.contains([' ', '[']) { format!("'{s}'") } else { s.to_string() };
        let mut out = format!("cellkit {}", self.name());
        match self {
            Command::Kl { rank, pair } => {
                out += &format!(" --n {}", rank.n);
                if let Some(p) = pair {
                    out += &format!(" --pair {}", q(p));
                }
            }
            Command::Cells { rank, side } => out += &format!(" --n {} --side {side}", rank.n),
            Command::Murphy { rank, lambda, to_c } => {
                out += &format!(" --n {} --lambda {lambda}", rank.n);
                if *to_c {
                    out += " --to-c";
                }
            }
            Command::Zelem { rank, w } => out += &format!(" --n {} --w {}", rank.n, q(w)),
            Command::Afn { rank } | Command::Jring { rank } => out += &format!(" --n {}", rank.n),
            Command::Verify { rank, props, sample, seed } => {
                out += &format!(" --n {}", rank.n);
                if let Some(p) = props {
                    let list: Vec<String> = p.iter().map(Property::to_string).collect();
                    out += &format!(" --props {}", list.join(","));
                }
                out += &format!(" --sample {sample} --seed {seed}");
            }
            Command::Rsk { perm } => out += &format!(" --perm {}", q(perm)),
        }
        if let Some(f) = fault {
            out += &format!(" --inject-mu-fault {}", q(f));
        }
        out
    }

    /// The same command restricted to one property.
    pub fn reproduce_property(&self, p: Property, fault: Option<&str>) -> String {
        match self {
            Command::Verify { rank, sample, seed, .. } => Command::Verify {
                rank: rank.clone(),
                props: Some(vec![p]),
                sample: *sample,
                seed: *seed,
            }
            .canonical(fault),
            other => other.canonical(fault),
        }
    }
}

/// Splits `Y,W` at its single top-level comma, so that bracketed one-line
/// permutations may contain commas.
pub fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut at = None;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 && at.is_some() => return None,
            ',' if depth == 0 => at = Some(i),
            _ => {}
        }
    }
    at.map(|i| (s[..i].trim(), s[i + 1..].trim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_split_at_the_outer_comma() {
        assert_eq!(split_pair("[1,3,2],[3,2,1]"), Some(("[1,3,2]", "[3,2,1]")));
        assert_eq!(split_pair("1, s1 s2 s1"), Some(("1", "s1 s2 s1")));
        assert_eq!(split_pair("[1,2]"), None);
        assert_eq!(split_pair("1,2,3"), None);
    }

    #[test]
    fn canonical_form_names_the_seed() {
        let cli = Cli::try_parse_from(["cellkit", "--format", "json", "verify", "--n", "3", "--props", "p7,12"]).unwrap();
        assert_eq!(
            cli.command.canonical(None),
            format!("cellkit verify --n 3 --props P7,P12 --sample 1000000 --seed {DEFAULT_SEED}")
        );
    }

    #[test]
    fn parser_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
