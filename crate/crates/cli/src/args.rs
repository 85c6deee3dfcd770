use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "distblock", version, about = "Exact distance-matrix formulas for multi-block graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Also run the exact oracle and report equality verdicts.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest graph the Bareiss oracle is run on (sweeps: largest random graph).
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Add wall-clock milliseconds to each report; output is then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// alpha, beta, gamma, cof D and det D of one complete multipartite block.
    Invariants { spec: String },
    /// Singularity verdicts for one or more blocks.
    Classify {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Sorted m-part blocks with parts up to --max-part that pass a filter.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_part: usize,
        #[arg(long, value_enum)]
        filter: Filter,
    },
    /// Build a named family instance.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        /// JSON object of family parameters, e.g. '{"t3":1,"x":2}' or '{"m":6,"k":1,"seed":0}'.
        #[arg(long, default_value = "{}")]
        params: String,
    },
    /// Evaluate one quantity of a graph by its closed form.
    Compute {
        graph: String,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Inverse distance matrix of a graph.
    Inverse {
        graph: String,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// T6 with b pendant T_n blocks at one large-part vertex.
    T6 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Run verification suites.
    Sweep {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest block order for exhaustive suites.
        #[arg(long, default_value_t = 12)]
        max_total: usize,
        /// Number of random graphs for randomized suites.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    #[value(name = "det0")]
    Det0,
    #[value(name = "cof0")]
    Cof0,
    Lneg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    PairedT,
    CompleteMix,
    NegativeLambda,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Det,
    Cof,
    Lambda,
    Mu,
    Inverse,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "UPPER")]
pub enum Emit {
    D,
    L,
    R,
    C,
}
