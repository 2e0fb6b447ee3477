use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hijac", about = "Higher Jacobian ideals, Nash algebras and motivic zeta functions")]
pub struct Cli {
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the higher Jacobian matrix Jac_n(f)
    Jac(PolyArgs),
    /// Print canonical generators of J_n(f)
    Ideal {
        #[command(flatten)]
        p: PolyArgs,
        /// Minimal standard basis in the local order instead of the reduced
        /// Groebner basis
        #[arg(long)]
        local: bool,
    },
    /// Dimension and monomial basis of the Nash algebra <f> + J_n(f) at the origin
    NashDim(PolyArgs),
    /// Executable invariance checks
    #[command(subcommand)]
    Check(Check),
    /// Resolve a plane-curve germ and emit its .rg graph
    Resolve {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        /// Write the graph here instead of stdout
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Blow up crossings until the graph is m-separating
    Separate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "m")]
        m: u64,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Motivic zeta function of a graph
    Zeta {
        #[arg(long)]
        graph: PathBuf,
        /// Also tabulate the coefficients of T^1 .. T^M
        #[arg(long, value_name = "M")]
        expand: Option<usize>,
        /// Ambient dimension for the [X_m] column (defaults to the graph's)
        #[arg(short = 'd')]
        d: Option<usize>,
    },
    /// Motivic nearby cycle of a graph
    Nearby {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Coefficients of T^1 .. T^M of the zeta function, next to [X_m]
    Expand {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_name = "M")]
        upto: usize,
        #[arg(short = 'd')]
        d: Option<usize>,
    },
    /// Compare f and g = f + (element of J_2(f)) through a shared resolution
    Compare {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(short = 'g', long = "g")]
        g: String,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        /// Compare contact-locus classes for m = 1 .. M
        #[arg(long, value_name = "M", default_value_t = 6)]
        upto: u64,
    },
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(short = 'f', long = "f")]
    pub f: String,
    /// Number of variables (inferred from the expression when omitted)
    #[arg(short = 'd')]
    pub d: Option<usize>,
    #[arg(short = 'n', default_value_t = 1)]
    pub n: u32,
    #[arg(long = "version", value_enum, default_value_t = Version::Zero)]
    pub version: Version,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Version {
    Zero,
    FDiag,
    JacobiTaylor,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(short = 'f', long = "f")]
    pub f: String,
    #[arg(short = 'd')]
    pub d: Option<usize>,
    #[arg(short = 'n', default_value_t = 1)]
    pub n: u32,
}

#[derive(Subcommand, Debug)]
pub enum Check {
    /// g = u * (f o sigma) implies the Nash algebras correspond
    Contact {
        #[command(flatten)]
        c: Common,
        #[arg(short = 'g', long = "g")]
        g: String,
        /// Images of x1 .. xd separated by `;` (default: identity)
        #[arg(long)]
        sigma: Option<String>,
        #[arg(short = 'u', long = "u", default_value = "1")]
        u: String,
        /// Only require g = u * (f o sigma) up to this total degree
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// <f> + J_n(f) = <f> + J_n(uf) locally
    Unit {
        #[command(flatten)]
        c: Common,
        #[arg(short = 'u', long = "u")]
        u: String,
    },
    /// Minors of the matrices of uf and f agree modulo <f> up to a unit power
    DetCongruence {
        #[command(flatten)]
        c: Common,
        #[arg(short = 'u', long = "u")]
        u: String,
    },
    /// sigma(J_n(f)) = J_n(f o sigma)
    Autoeq {
        #[command(flatten)]
        c: Common,
        #[arg(long)]
        sigma: String,
        /// Compare in Q[x] instead of the local ring
        #[arg(long)]
        global: bool,
    },
    /// J_n(f) lies in a power of J_1(f)
    Inclusion {
        #[command(flatten)]
        c: Common,
    },
    /// J_n(f) = J_n(uf) for weighted-homogeneous f
    Weighted {
        #[command(flatten)]
        c: Common,
        /// Comma-separated weights (inferred for binomials when omitted)
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u32>>,
        #[arg(short = 'u', long = "u")]
        u: String,
    },
}
