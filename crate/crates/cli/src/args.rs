use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use macwheel::partitions::Partition;

#[derive(Parser, Debug)]
#[command(name = "macwheel", version, about = "Macdonald polynomials at t^(k+1) q^(r-1) = 1, wheel ideals and current-algebra quotients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Rank by evaluation at a seeded random point instead of exactly.
    #[arg(long, global = true, conflicts_with = "exact")]
    pub probe: bool,

    /// Certified exact rank over K (the default).
    #[arg(long, global = true)]
    pub exact: bool,

    /// With --probe, recompute every dimension exactly and fail on disagreement.
    #[arg(long, global = true, requires = "probe")]
    pub recheck: bool,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Directory holding cached Macdonald tables, one file per n.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationsArg {
    /// Relations over K at the resonance.
    Resonant,
    /// t = 1 and q a primitive (r-1)-th root of unity, over Q.
    RootOfUnity,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generic Macdonald polynomials.
    #[command(subcommand)]
    Macd(Macd),
    /// Wheel condition and the ideal J.
    #[command(subcommand)]
    Wheel(Wheel),
    /// Relations and quotients of the current algebra.
    #[command(subcommand)]
    Current(Current),
    /// Degree sequences and characters.
    #[command(subcommand)]
    Char(Char),
    /// Batch verification over parameter ranges.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Kr {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub r: u32,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Nd {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Ranges {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub d_max: u32,
}

#[derive(Subcommand, Debug)]
pub enum Macd {
    /// Coefficients of P_λ in the monomial basis, optionally specialized.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, requires = "r", value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        #[arg(long, requires = "k", value_parser = clap::value_parser!(u32).range(2..))]
        r: Option<u32>,
    },
    /// Multiplication by e_1 and the lowering operators E_0, E_2 on P_λ.
    Pieri {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Row Cauchy identity up to y-degree d_max.
    Cauchy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d_max: u32,
    },
    /// Polynomiality of the integral form c_λ P_λ.
    Integrality {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
}

#[derive(Subcommand, Debug)]
pub enum Wheel {
    /// The substitutions σ defining the wheel condition.
    Subs {
        #[command(flatten)]
        kr: Kr,
    },
    /// Whether the specialized P_λ satisfies the wheel condition.
    Check {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// dim J_{n,d}.
    Dim {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        nd: Nd,
    },
    /// The specialized admissible P_λ of degree d.
    Basis {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        nd: Nd,
    },
}

#[derive(Subcommand, Debug)]
pub enum Current {
    /// One relation of internal degree d, by residue profile or substitution.
    Relation {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        d: u32,
        /// Residue profile (ν_0, …, ν_{r-2}) for the root-of-unity relation.
        #[arg(long, conflicts_with = "sigma", required_unless_present = "sigma")]
        nu: Option<List>,
        /// Substitution σ for the relation over K.
        #[arg(long)]
        sigma: Option<List>,
    },
    /// Dimension of the (n, d) component of the quotient.
    Rank {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        nd: Nd,
        #[arg(long, value_enum, default_value_t = RelationsArg::Resonant)]
        relations: RelationsArg,
    },
    /// Rewrite e_λ as a combination of admissible monomials.
    Reduce {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
}

#[derive(Subcommand, Debug)]
pub enum Char {
    /// Truncated generating function of degree sequences.
    Chi {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        b: List,
        #[command(flatten)]
        ranges: Ranges,
    },
    /// The b_0 recursion on the truncation.
    Recursion {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        b: List,
        #[command(flatten)]
        ranges: Ranges,
    },
    /// dim of the (n, d) component of W_b.
    WDim {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        b: List,
        #[command(flatten)]
        nd: Nd,
        #[arg(long, value_enum, default_value_t = RelationsArg::Resonant)]
        relations: RelationsArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Admissible P_λ lie in J and span it, for every n ≤ n_max, d ≤ d_max.
    Theorem1 {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        ranges: Ranges,
    },
    /// dim W_b against the character coefficients, for one or all b.
    Prop302 {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        b: Option<List>,
        #[command(flatten)]
        ranges: Ranges,
        #[arg(long, value_enum, default_value_t = RelationsArg::Resonant)]
        relations: RelationsArg,
    },
    /// Random combinations of the basis of J_{n,d} stay in J under D^ρ and E_m.
    Stability {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        nd: Nd,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// ρ(∂^j P_λ) lies in J in one variable fewer.
    Rho {
        #[command(flatten)]
        kr: Kr,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value_t = 2)]
        j_max: u32,
    },
    /// Non-resonance of the Pieri-type exponents on admissible λ.
    Lemma21 {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        ranges: Ranges,
    },
    /// No pole when specializing admissible λ and their one-node neighbours.
    Lemma22 {
        #[command(flatten)]
        kr: Kr,
        #[command(flatten)]
        ranges: Ranges,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: macwheel::Error| e.to_string())
}

/// Comma-separated non-negative integers, e.g. "1,2".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct List(pub Vec<u32>);

impl std::str::FromStr for List {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| format!("bad entry '{x}' in '{s}'")))
            .collect::<Result<_, _>>()
            .map(List)
    }
}
