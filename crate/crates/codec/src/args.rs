use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "composite-codec", version, about = "Ordered composite DNA channel toolkit")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Vertex cap for exact search; overrides COMPOSITE_CODEC_CAPS.
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
    /// Longest binary code searched exactly; overrides COMPOSITE_CODEC_CAPS.
    #[arg(long, global = true)]
    pub max_binary_len: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split a composite sequence into its binary rows.
    Decompose(DecomposeArgs),
    /// Rebuild a composite sequence from its rows; unsorted columns print as '?'.
    Reconstruct(ReconstructArgs),
    /// Letterwise reversal or cyclic shift.
    Transform(TransformArgs),
    /// Error ball size, members or membership.
    Ball(BallArgs),
    /// Run and weight counts behind the deletion bounds.
    Count(CountArgs),
    /// A single bound or a whole table of bounds.
    Bounds(BoundsArgs),
    /// Binomial-sum inequalities used by the transversal bounds.
    Lemma(LemmaArgs),
    /// Encode a message, or list a codebook.
    Encode(EncodeArgs),
    /// Decode received rows.
    Decode(DecodeArgs),
    /// Exhaustive or greedy code search.
    SearchOptimal(SearchArgs),
    /// Exhaustive decoder, transversal and codebook checks.
    Verify(VerifyArgs),
    /// Capacity of the resolution-2 channel under substitutions.
    Capacity(CapacityArgs),
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub k: usize,
    /// Base alphabet size; above 2, letters are count vectors such as "1/0/1".
    #[arg(long, default_value_t = 2)]
    pub q: usize,
    pub sequence: String,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long, default_value_t = 2)]
    pub q: usize,
    /// One digit string per row, top row first.
    #[arg(required = true)]
    pub rows: Vec<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "op")]
pub struct TransformOp {
    #[arg(long, group = "op")]
    pub reverse: bool,
    #[arg(long, group = "op", allow_hyphen_values = true)]
    pub shift: Option<i64>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub op: TransformOp,
    pub sequence: String,
}

#[derive(Debug, Args)]
pub struct BallArgs {
    #[arg(long)]
    pub k: usize,
    /// "(e0,e1,...)", "t:e", "d:(1,0)" or "d:1".
    #[arg(long)]
    pub spec: String,
    #[command(flatten)]
    pub mode: BallMode,
    /// Allow brute-force enumeration when no closed form applies.
    #[arg(long)]
    pub enumerate_fallback: bool,
    /// Center sequence; for --inbound, the received row 0.
    pub sequence: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BallMode {
    #[arg(long)]
    pub size: bool,
    #[arg(long)]
    pub enumerate: bool,
    /// Whether this sequence lies in the ball.
    #[arg(long, value_name = "SEQ")]
    pub contains: Option<String>,
    /// Centers whose row-0 deletion ball holds (SEQUENCE, S1).
    #[arg(long, value_name = "S1")]
    pub inbound: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// Binary words with a given number of runs and weight.
    Runs,
    /// Distinct second rows compatible with a shortened first row.
    V,
    /// Vertices of the row-0 deletion hypergraph.
    Vertices,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub what: CountKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub rho: Option<usize>,
    #[arg(long)]
    pub w: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKindArg {
    SpherePacking,
    Asymptotic,
    AsymptoticTight,
    Gspb,
    AverageBall,
    Aspv,
    Lower,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Table name: table1..table4, summary6..summary8.
    #[arg(long, conflicts_with_all = ["kind", "n"])]
    pub table: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, value_enum, required_unless_present = "table")]
    pub kind: Option<BoundKindArg>,
    #[arg(long, required_unless_present = "table")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long)]
    pub spec: Option<String>,
    /// Lower-bound construction: bch, coset, fiber, lee, vt_del, vt1_del, tenengolts_del, tenengolts1_del.
    #[arg(long)]
    pub method: Option<String>,
    /// Total budget for the parametric table columns.
    #[arg(long, default_value_t = 4)]
    pub e: usize,
    #[arg(long, default_value_t = 2)]
    pub e0: usize,
    #[arg(long, default_value_t = 1)]
    pub e1: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaKind {
    ShiftedWeight,
    InverseCount,
    DoubleHarmonic,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(value_enum)]
    pub which: LemmaKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Shift in the denominator of the shifted-weight sum.
    #[arg(long, default_value_t = 0)]
    pub j: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    C1,
    C2,
    Lee,
    C3,
    C4,
    C5,
    C6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InnerKind {
    Hamming,
    Optimal,
}

#[derive(Debug, Args, Clone)]
pub struct CodeParams {
    #[arg(long, value_enum)]
    pub construction: Construction,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Codeword length; for c4 and c6 the message length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Checksum residue (lee, c3, c5) or Hamming coset syndrome (c1).
    #[arg(long, default_value_t = 0)]
    pub a: usize,
    /// Inner codes of the fiber construction.
    #[arg(long, value_enum, default_value_t = InnerKind::Hamming)]
    pub inner: InnerKind,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[command(flatten)]
    pub code: CodeParams,
    /// Print the whole codebook, one codeword per line.
    #[arg(long, conflicts_with = "message")]
    pub list: bool,
    /// Message sequence for c4 and c6; codeword index for the others.
    #[arg(required_unless_present = "list")]
    pub message: Option<String>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[command(flatten)]
    pub code: CodeParams,
    /// Received rows, top row first.
    #[arg(required = true)]
    pub rows: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, required_unless_present = "binary")]
    pub spec: Option<String>,
    /// Greedy lexicographic code instead of exact search.
    #[arg(long)]
    pub greedy: bool,
    /// Largest binary single-error code of length n.
    #[arg(long, conflicts_with_all = ["spec", "greedy"])]
    pub binary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Unit,
    FirstChannel,
    TotalOne,
    PairOneOne,
    TotalTwo,
    Exact,
    DeletionRuns,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Decoder to check against every admissible error.
    #[arg(long, value_enum, conflicts_with_all = ["transversal", "codebook"])]
    pub construction: Option<Construction>,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub a: usize,
    #[arg(long, value_enum, default_value_t = InnerKind::Hamming)]
    pub inner: InnerKind,
    /// Check only this many codewords, drawn with --seed.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Weight rule checked as a fractional transversal of the balls of --spec.
    #[arg(long, value_enum)]
    pub transversal: Option<RuleArg>,
    /// Codebook file, one sequence per line, checked as a code for --spec.
    #[arg(long)]
    pub codebook: Option<std::path::PathBuf>,
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Debug, Args)]
pub struct CapacityArgs {
    /// Crossover probability of each row channel.
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    pub p: Option<f64>,
    #[arg(long)]
    pub sweep: bool,
    /// Grid points on [0, 1/2] for --sweep.
    #[arg(long, default_value_t = 21)]
    pub points: usize,
    #[arg(long, default_value_t = composite_codec_core::capacity::DEFAULT_TOL)]
    pub tol: f64,
    /// Add a Blahut-Arimoto column as an independent check.
    #[arg(long)]
    pub oracle: bool,
    /// Write an SVG plot of the sweep.
    #[arg(long, requires = "sweep")]
    pub plot: Option<std::path::PathBuf>,
}
