//! Command-line front end for `composite-codec-core`.
//!
//! [`run`] parses an argument vector, dispatches to the library and streams
//! the result to the given writer. Exit codes: 0 success, 1 domain error,
//! 2 usage error.

pub mod args;
pub mod emit;
pub mod plot;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::Parser;
use composite_codec_core::alphabet::{
    decompose_letters, reconstruct_letters, CompositeLetter, CompositeParams,
};
use composite_codec_core::balls::{
    del_ball_size, del_in_ball_10, enumerate_del_ball, enumerate_sub_ball, in_sub_ball, sub_ball_size, EnumCaps,
    SizeMethod,
};
use composite_codec_core::bounds::{self, AsymptoticForm, BoundResult, LowerMethod, TableKind, TableParams};
use composite_codec_core::capacity::{self, ChannelSpec};
use composite_codec_core::counting;
use composite_codec_core::deletion::{
    c3_codewords, c3_decode, c4_decode, c4_encode, c5_codewords, c5_decode, c6_decode, c6_encode,
};
use composite_codec_core::oracle::{self, ErrorUniverse, OracleCaps, WeightRule};
use composite_codec_core::substitution::{c1_codewords, c1_decode, c2_codewords, c2_decode, BinaryCode, InnerCodes, LeeCode};
use composite_codec_core::{CompositeSeq, DelSpec, ErrorSpec, RowTuple, SubErrorSpec};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::args::*;
use crate::emit::{Cell, Emitter};

/// Environment variable holding cap overrides, e.g. `max_vertices=4096,max_binary_len=8`.
pub const CAPS_ENV: &str = "COMPOSITE_CODEC_CAPS";

/// Codebooks listed or searched by the CLI stay below this many words.
pub const MAX_LISTED: usize = 1 << 20;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] composite_codec_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    /// A check ran to completion and found failures.
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `key=value` pairs separated by commas.
pub fn parse_caps(text: &str, mut caps: OracleCaps) -> CliResult<OracleCaps> {
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| usage(format!("{CAPS_ENV}: expected key=value, got {item:?}")))?;
        let value: usize = value.trim().parse().map_err(|_| usage(format!("{CAPS_ENV}: {key} needs an integer")))?;
        match key.trim() {
            "max_vertices" => caps.max_vertices = value,
            "max_binary_len" => caps.max_binary_len = value,
            other => return Err(usage(format!("{CAPS_ENV}: unknown cap {other:?}"))),
        }
    }
    Ok(caps)
}

fn oracle_caps(cli: &Cli) -> CliResult<OracleCaps> {
    let mut caps = match std::env::var(CAPS_ENV) {
        Ok(text) => parse_caps(&text, OracleCaps::default())?,
        Err(_) => OracleCaps::default(),
    };
    if let Some(v) = cli.max_vertices {
        caps.max_vertices = v;
    }
    if let Some(v) = cli.max_binary_len {
        caps.max_binary_len = v;
    }
    Ok(caps)
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        // a closed downstream pipe is a normal way to stop streaming
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let f = cli.format;
    match &cli.command {
        Command::Decompose(a) => decompose(f, a, out),
        Command::Reconstruct(a) => reconstruct(f, a, out),
        Command::Transform(a) => transform(f, a, out),
        Command::Ball(a) => ball(f, a, out),
        Command::Count(a) => count(f, a, out),
        Command::Bounds(a) => bounds_cmd(f, a, out),
        Command::Lemma(a) => lemma(f, a, out),
        Command::Encode(a) => encode(f, a, &oracle_caps(cli)?, out),
        Command::Decode(a) => decode(f, a, &oracle_caps(cli)?, out),
        Command::SearchOptimal(a) => search(f, a, &oracle_caps(cli)?, out),
        Command::Verify(a) => verify(f, a, &oracle_caps(cli)?, out),
        Command::Capacity(a) => capacity_cmd(f, a, out),
    }
}

fn parse_general_letters(q: usize, k: usize, text: &str) -> CliResult<Vec<CompositeLetter>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let counts = tok
                .split('/')
                .map(|c| c.parse::<usize>().map_err(|_| usage(format!("letter {tok:?} is not a count vector like 1/0/1"))))
                .collect::<CliResult<Vec<_>>>()?;
            if counts.len() != q || counts.iter().sum::<usize>() != k {
                return Err(composite_codec_core::Error::InvalidLetter(format!(
                    "{tok:?} needs {q} counts summing to k = {k}"
                ))
                .into());
            }
            Ok(CompositeLetter::new(counts))
        })
        .collect()
}

fn letter_text(l: &Option<CompositeLetter>) -> String {
    match l {
        Some(l) => l.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>().join("/"),
        None => "?".into(),
    }
}

fn row_text(row: &[u8]) -> String {
    row.iter().map(|b| b.to_string()).collect()
}

fn decompose(f: Format, a: &DecomposeArgs, out: &mut dyn Write) -> CliResult {
    let rows = if a.q == 2 {
        CompositeSeq::parse(a.k, &a.sequence)?.decompose()?
    } else {
        let params = CompositeParams::new(a.q, a.k)?;
        decompose_letters(&params, &parse_general_letters(a.q, a.k, &a.sequence)?)?
    };
    let mut e = Emitter::new(f, &["row"], out);
    for r in rows.rows() {
        e.row(vec![Cell::text(row_text(r))])?;
    }
    Ok(())
}

fn reconstruct(f: Format, a: &ReconstructArgs, out: &mut dyn Write) -> CliResult {
    let rows = RowTuple::parse(&a.rows)?;
    let text = if a.q == 2 {
        rows.reconstruct()?.to_string()
    } else {
        let params = CompositeParams::new(a.q, rows.k())?;
        reconstruct_letters(&params, &rows)?.iter().map(letter_text).collect::<Vec<_>>().join(" ")
    };
    Emitter::new(f, &["sequence"], out).row(vec![Cell::text(text)])?;
    Ok(())
}

fn transform(f: Format, a: &TransformArgs, out: &mut dyn Write) -> CliResult {
    let s = CompositeSeq::parse(a.k, &a.sequence)?;
    let t = match a.op.shift {
        Some(d) => s.shift(d)?,
        None => s.reverse()?,
    };
    Emitter::new(f, &["sequence"], out).row(vec![Cell::text(t)])?;
    Ok(())
}

fn ball(f: Format, a: &BallArgs, out: &mut dyn Write) -> CliResult {
    let spec = ErrorSpec::parse(&a.spec)?;
    if let Some(s1) = &a.mode.inbound {
        if spec != ErrorSpec::Del(DelSpec::Radius10) {
            return Err(usage("--inbound applies to d:(1,0)"));
        }
        let y0 = RowTuple::parse(&[&a.sequence])?.into_rows().remove(0);
        let s1 = RowTuple::parse(&[s1])?.into_rows().remove(0);
        let mut e = Emitter::new(f, &["center"], out);
        for c in del_in_ball_10(&y0, &s1) {
            e.row(vec![Cell::text(c)])?;
        }
        return Ok(());
    }
    let s = CompositeSeq::parse(a.k, &a.sequence)?;
    match (&spec, &a.mode) {
        (ErrorSpec::Sub(sub), BallMode { size: true, .. }) => {
            let b = sub_ball_size(&s, sub, a.enumerate_fallback)?;
            let method = match b.method {
                SizeMethod::Formula(name) => format!("formula:{name}"),
                SizeMethod::Enumerated => "enumerated".into(),
            };
            size_row(f, out, Cell::int(b.value), method)?;
        }
        (ErrorSpec::Del(d), BallMode { size: true, .. }) => {
            size_row(f, out, Cell::int(del_ball_size(&s, *d)?), "formula:runs".into())?;
        }
        (ErrorSpec::Sub(sub), BallMode { enumerate: true, .. }) => {
            let mut e = Emitter::new(f, &["sequence"], out);
            for y in enumerate_sub_ball(&s, sub, &EnumCaps::default())? {
                e.row(vec![Cell::text(y)])?;
            }
        }
        (ErrorSpec::Del(d), BallMode { enumerate: true, .. }) => {
            let mut e = Emitter::new(f, &["y0", "y1"], out);
            for o in enumerate_del_ball(&s, *d)? {
                e.row(vec![Cell::text(row_text(&o.y0)), Cell::text(row_text(&o.y1))])?;
            }
        }
        (ErrorSpec::Sub(sub), BallMode { contains: Some(y), .. }) => {
            let y = CompositeSeq::parse(a.k, y)?;
            sub.check(a.k)?;
            Emitter::new(f, &["contains"], out).row(vec![Cell::Bool(in_sub_ball(&s, &y, sub))])?;
        }
        (ErrorSpec::Del(d), BallMode { contains: Some(y), .. }) => {
            let parts: Vec<&str> = y.split([' ', ',']).filter(|t| !t.is_empty()).collect();
            let [y0, y1] = parts.as_slice() else {
                return Err(usage("deletion outcomes are given as \"y0 y1\""));
            };
            let target = (RowTuple::parse(&[y0])?.into_rows().remove(0), RowTuple::parse(&[y1])?.into_rows().remove(0));
            let hit = enumerate_del_ball(&s, *d)?.iter().any(|o| (&o.y0, &o.y1) == (&target.0, &target.1));
            Emitter::new(f, &["contains"], out).row(vec![Cell::Bool(hit)])?;
        }
        _ => unreachable!("clap enforces one mode"),
    }
    Ok(())
}

/// Text output carries the bare size; structured formats add how it was obtained.
fn size_row(f: Format, out: &mut dyn Write, size: Cell, method: String) -> CliResult {
    if f == Format::Text {
        Emitter::new(f, &["size"], out).row(vec![size])?;
    } else {
        Emitter::new(f, &["size", "method"], out).row(vec![size, Cell::Text(method)])?;
    }
    Ok(())
}

fn count(f: Format, a: &CountArgs, out: &mut dyn Write) -> CliResult {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| usage(format!("--{name} is required")));
    let v = match a.what {
        CountKind::Runs => counting::count_runs_weight(a.n, need(a.rho, "rho")?, need(a.w, "w")?)?,
        CountKind::V => counting::count_v(a.n, need(a.w, "w")?)?,
        CountKind::Vertices => counting::vertex_set_size_10(a.n)?,
    };
    Emitter::new(f, &["count"], out).row(vec![Cell::int(v)])?;
    Ok(())
}

fn bound_cells(b: &BoundResult) -> Vec<Cell> {
    vec![Cell::text(b.kind), Cell::text(&b.value), Cell::int(&b.value_floor), Cell::text(&b.validity)]
}

fn bounds_cmd(f: Format, a: &BoundsArgs, out: &mut dyn Write) -> CliResult {
    if let Some(name) = &a.table {
        let kind = TableKind::parse(name)?;
        if a.n_min > a.n_max {
            return Err(usage("--n-min exceeds --n-max"));
        }
        let params = TableParams { k: a.k, e: a.e, e0: a.e0, e1: a.e1 };
        let mut e = Emitter::table(f, bounds::table_header(kind, &params), out);
        for n in a.n_min..=a.n_max {
            e.row(bounds::table_row(kind, n, &params).into_iter().map(Cell::Text).collect())?;
        }
        return Ok(());
    }
    let (kind, n) = (a.kind.expect("clap requires --kind"), a.n.expect("clap requires --n"));
    let spec = ErrorSpec::parse(a.spec.as_deref().ok_or_else(|| usage("--spec is required"))?)?;
    let sub = || match &spec {
        ErrorSpec::Sub(s) => Ok(s.clone()),
        ErrorSpec::Del(_) => Err(usage("this bound needs a substitution spec")),
    };
    let b = match kind {
        BoundKindArg::SpherePacking => bounds::sphere_packing_upper(n, &sub()?)?,
        BoundKindArg::Asymptotic => bounds::asymptotic_upper(n, &sub()?, AsymptoticForm::Standard)?,
        BoundKindArg::AsymptoticTight => bounds::asymptotic_upper(n, &sub()?, AsymptoticForm::Tight)?,
        BoundKindArg::Gspb => bounds::gspb_upper(n, a.k, &spec)?,
        BoundKindArg::AverageBall => bounds::average_ball(n, a.k, &spec)?,
        BoundKindArg::Aspv => bounds::aspv(n, a.k, &spec)?,
        BoundKindArg::Lower => {
            let m = LowerMethod::parse(a.method.as_deref().ok_or_else(|| usage("--method is required for lower"))?)?;
            bounds::lower_bound(n, a.k, &spec, m)?
        }
    };
    Emitter::new(f, &["kind", "value", "floor", "validity"], out).row(bound_cells(&b))?;
    Ok(())
}

fn lemma(f: Format, a: &LemmaArgs, out: &mut dyn Write) -> CliResult {
    use bounds::lemmas::*;
    let (sum, bound) = match a.which {
        LemmaKind::ShiftedWeight => (shifted_weight_sum(a.n, a.k, a.j), shifted_weight_bound(a.n, a.k, a.j)),
        LemmaKind::InverseCount => (inverse_count_sum(a.n, a.k), inverse_count_bound(a.n, a.k)),
        LemmaKind::DoubleHarmonic => (double_harmonic_sum(a.n), double_harmonic_bound(a.n)),
    };
    let holds = sum <= bound;
    Emitter::new(f, &["sum", "bound", "holds"], out).row(vec![Cell::text(sum), Cell::text(bound), Cell::Bool(holds)])?;
    Ok(())
}

/// A codebook addressed by index plus its decoder.
enum Code {
    Product(Vec<BinaryCode>, usize, usize),
    Fiber(InnerCodes, usize, usize),
    Lee(LeeCode),
    VtRow0(usize, usize),
    VtLetters(usize, usize),
    SystematicRow0,
    SystematicBoth,
}

fn require_n(p: &CodeParams) -> CliResult<usize> {
    p.n.ok_or_else(|| usage(format!("--n is required for {:?}", p.construction)))
}

fn build_code(p: &CodeParams, caps: &OracleCaps) -> CliResult<Code> {
    let k2 = || if p.k == 2 { Ok(()) } else { Err(CliError::Core(composite_codec_core::Error::Unsupported("deletion constructions need k = 2".into()))) };
    Ok(match p.construction {
        Construction::C1 => {
            let n = require_n(p)?;
            let codes = (0..p.k).map(|_| BinaryCode::hamming_coset(n, p.a)).collect::<Result<Vec<_>, _>>()?;
            Code::Product(codes, p.k, n)
        }
        Construction::C2 => {
            let n = require_n(p)?;
            let inner = match p.inner {
                InnerKind::Hamming => InnerCodes::hamming(n),
                InnerKind::Optimal => oracle::optimal_inner_codes(n, caps)?,
            };
            Code::Fiber(inner, p.k, n)
        }
        Construction::Lee => Code::Lee(LeeCode::new(require_n(p)?, p.k, p.a)?),
        Construction::C3 => {
            k2()?;
            Code::VtRow0(require_n(p)?, p.a)
        }
        Construction::C5 => {
            k2()?;
            Code::VtLetters(require_n(p)?, p.a)
        }
        Construction::C4 => {
            k2()?;
            Code::SystematicRow0
        }
        Construction::C6 => {
            k2()?;
            Code::SystematicBoth
        }
    })
}

fn check_listable(k: usize, n: usize) -> CliResult {
    match (k + 1).checked_pow(n as u32) {
        Some(v) if v <= MAX_LISTED => Ok(()),
        _ => Err(CliError::Core(composite_codec_core::Error::SizeLimit(format!(
            "listing needs (k+1)^n <= {MAX_LISTED}"
        )))),
    }
}

impl Code {
    fn codewords(&self) -> CliResult<Vec<CompositeSeq>> {
        Ok(match self {
            Code::Product(codes, k, n) => {
                check_listable(*k, *n)?;
                c1_codewords(*k, *n, codes)?
            }
            Code::Fiber(inner, k, n) => {
                check_listable(*k, *n)?;
                c2_codewords(*k, *n, inner)?
            }
            Code::Lee(lee) => {
                check_listable(lee.k, lee.n)?;
                lee.codewords()
            }
            Code::VtRow0(n, a) => {
                check_listable(2, *n)?;
                c3_codewords(*n, *a)
            }
            Code::VtLetters(n, a) => {
                check_listable(2, *n)?;
                c5_codewords(*n, *a)
            }
            Code::SystematicRow0 | Code::SystematicBoth => {
                return Err(usage("systematic constructions encode messages; pass a message instead of --list"))
            }
        })
    }

    fn decode(&self, rows: &[Vec<u8>]) -> composite_codec_core::Result<CompositeSeq> {
        let tuple = || RowTuple::new(rows.to_vec());
        let pair = || {
            if rows.len() != 2 {
                return Err(composite_codec_core::Error::Dimension(format!("expected 2 rows, got {}", rows.len())));
            }
            Ok((&rows[0], &rows[1]))
        };
        match self {
            Code::Product(codes, ..) => c1_decode(&tuple()?, codes),
            Code::Fiber(inner, ..) => c2_decode(&tuple()?, inner),
            Code::Lee(lee) => lee.decode(&tuple()?),
            Code::VtRow0(_, a) => pair().and_then(|(y0, y1)| c3_decode(y0, y1, *a)),
            Code::VtLetters(_, a) => pair().and_then(|(y0, y1)| c5_decode(y0, y1, *a)),
            Code::SystematicRow0 => pair().and_then(|(y0, y1)| c4_decode(y0, y1)),
            Code::SystematicBoth => pair().and_then(|(y0, y1)| c6_decode(y0, y1)),
        }
    }

    fn universe(&self, k: usize) -> ErrorUniverse {
        match self {
            Code::Product(..) => ErrorUniverse::Substitutions(SubErrorSpec::PerChannel(vec![1; k])),
            Code::Fiber(..) => ErrorUniverse::Substitutions(SubErrorSpec::first_channel(k)),
            Code::Lee(_) => ErrorUniverse::Substitutions(SubErrorSpec::Total(1)),
            Code::VtRow0(..) | Code::SystematicRow0 => ErrorUniverse::Deletions(DelSpec::Radius10),
            Code::VtLetters(..) | Code::SystematicBoth => ErrorUniverse::Deletions(DelSpec::Radius1),
        }
    }

    fn is_systematic(&self) -> bool {
        matches!(self, Code::SystematicRow0 | Code::SystematicBoth)
    }

    fn encode_message(&self, msg: &CompositeSeq) -> composite_codec_core::Result<CompositeSeq> {
        match self {
            Code::SystematicRow0 => c4_encode(msg),
            _ => c6_encode(msg),
        }
    }
}

fn encode(f: Format, a: &EncodeArgs, caps: &OracleCaps, out: &mut dyn Write) -> CliResult {
    let code = build_code(&a.code, caps)?;
    if a.list {
        let mut e = Emitter::new(f, &["codeword"], out);
        for c in code.codewords()? {
            e.row(vec![Cell::text(c)])?;
        }
        return Ok(());
    }
    let message = a.message.as_deref().expect("clap requires a message");
    let codeword = if code.is_systematic() {
        code.encode_message(&CompositeSeq::parse(2, message)?)?
    } else {
        let idx: usize = message.trim().parse().map_err(|_| usage(format!("codeword index {message:?} is not an integer")))?;
        let words = code.codewords()?;
        let len = words.len();
        words.into_iter().nth(idx).ok_or_else(|| {
            CliError::Core(composite_codec_core::Error::Domain(format!("index {idx} outside a codebook of {len} words")))
        })?
    };
    let rows = codeword.decompose()?;
    let mut header = vec!["codeword".to_string()];
    header.extend((0..rows.k()).map(|r| format!("row{r}")));
    let mut cells = vec![Cell::text(&codeword)];
    cells.extend(rows.rows().iter().map(|r| Cell::text(row_text(r))));
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    Emitter::new(f, &header, out).row(cells)?;
    Ok(())
}

fn parse_rows(rows: &[String]) -> CliResult<Vec<Vec<u8>>> {
    rows.iter().map(|r| Ok(RowTuple::parse(&[r])?.into_rows().remove(0))).collect()
}

fn decode(f: Format, a: &DecodeArgs, caps: &OracleCaps, out: &mut dyn Write) -> CliResult {
    let code = build_code(&a.code, caps)?;
    let rows = parse_rows(&a.rows)?;
    let decoded = code.decode(&rows)?;
    let name = if code.is_systematic() { "message" } else { "codeword" };
    Emitter::new(f, &[name], out).row(vec![Cell::text(decoded)])?;
    Ok(())
}

fn search(f: Format, a: &SearchArgs, caps: &OracleCaps, out: &mut dyn Write) -> CliResult {
    let (words, optimal): (Vec<String>, bool) = if a.binary {
        let code = oracle::optimal_binary_single_error(a.n, caps)?;
        (code.words().iter().map(|w| row_text(w)).collect(), true)
    } else {
        let spec = ErrorSpec::parse(a.spec.as_deref().expect("clap requires --spec"))?;
        if a.greedy {
            check_listable(a.k, a.n)?;
            (oracle::greedy_code(a.n, a.k, &spec)?.iter().map(|c| c.to_string()).collect(), false)
        } else {
            let (_, code) = oracle::optimal_code_size(a.n, a.k, &spec, caps)?;
            (code.iter().map(|c| c.to_string()).collect(), true)
        }
    };
    let size = words.len();
    let mut e = Emitter::new(f, &["size", "optimal", "codeword"], out);
    for w in words {
        e.row(vec![Cell::int(size), Cell::Bool(optimal), Cell::text(w)])?;
    }
    Ok(())
}

fn weight_rule(r: RuleArg) -> WeightRule {
    match r {
        RuleArg::Unit => WeightRule::Unit,
        RuleArg::FirstChannel => WeightRule::FirstChannel,
        RuleArg::TotalOne => WeightRule::TotalOne,
        RuleArg::PairOneOne => WeightRule::PairOneOne,
        RuleArg::TotalTwo => WeightRule::TotalTwo,
        RuleArg::Exact => WeightRule::Exact,
        RuleArg::DeletionRuns => WeightRule::DeletionRuns,
    }
}

fn verify(f: Format, a: &VerifyArgs, caps: &OracleCaps, out: &mut dyn Write) -> CliResult {
    let need_spec = || -> CliResult<ErrorSpec> {
        Ok(ErrorSpec::parse(a.spec.as_deref().ok_or_else(|| usage("--spec is required"))?)?)
    };
    let n = || a.n.ok_or_else(|| usage("--n is required"));
    if let Some(rule) = a.transversal {
        let r = oracle::check_fractional_transversal(n()?, a.k, &need_spec()?, weight_rule(rule), caps)?;
        Emitter::new(f, &["valid", "min_sum", "total_weight"], out).row(vec![
            Cell::Bool(r.valid),
            Cell::text(&r.min_sum),
            Cell::text(&r.total_weight),
        ])?;
        return if r.valid { Ok(()) } else { Err(CliError::CheckFailed(format!("minimum ball weight {} < 1", r.min_sum))) };
    }
    if let Some(path) = &a.codebook {
        let spec = need_spec()?;
        let text = std::fs::read_to_string(path)?;
        let code = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| CompositeSeq::parse(a.k, l))
            .collect::<Result<Vec<_>, _>>()?;
        let ok = oracle::is_code(&code, &spec)?;
        let dist = oracle::minimum_distance(&code).map(Cell::int).unwrap_or(Cell::text(""));
        Emitter::new(f, &["size", "is_code", "min_letter_distance"], out).row(vec![Cell::int(code.len()), Cell::Bool(ok), dist])?;
        return if ok { Ok(()) } else { Err(CliError::CheckFailed(format!("codebook is not a code for {spec}"))) };
    }
    let construction = a.construction.ok_or_else(|| usage("one of --construction, --transversal or --codebook is required"))?;
    let params = CodeParams { construction, k: a.k, n: a.n, a: a.a, inner: a.inner };
    let code = build_code(&params, caps)?;
    let cases: Vec<(CompositeSeq, CompositeSeq)> = if code.is_systematic() {
        let m = n()?;
        check_listable(2, m)?;
        composite_codec_core::alphabet::all_sequences(2, m)
            .map(|s| code.encode_message(&s).map(|c| (s, c)))
            .collect::<Result<_, _>>()?
    } else {
        code.codewords()?.into_iter().map(|c| (c.clone(), c)).collect()
    };
    let cases = match a.sample {
        Some(count) if count < cases.len() => {
            let mut rng = StdRng::seed_from_u64(a.seed);
            let mut picked = rand::seq::index::sample(&mut rng, cases.len(), count).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|i| cases[i].clone()).collect()
        }
        _ => cases,
    };
    let report = oracle::exhaustive_decode_check(cases, &code.universe(a.k), |r| code.decode(r))?;
    let first = report
        .failures
        .first()
        .map(|c| format!("{} via {:?} -> {}", c.expected, c.received.iter().map(|r| row_text(r)).collect::<Vec<_>>(), c.got))
        .unwrap_or_default();
    Emitter::new(f, &["codewords", "outcomes", "failures", "first_failure"], out).row(vec![
        Cell::int(report.codewords),
        Cell::int(report.outcomes),
        Cell::int(report.failures.len()),
        Cell::text(first),
    ])?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!("{} decoding failures", report.failures.len())))
    }
}

fn capacity_cmd(f: Format, a: &CapacityArgs, out: &mut dyn Write) -> CliResult {
    let mut header = vec!["p", "alpha_opt", "cap_C_bits", "cap_C2_bits"];
    if a.oracle {
        header.push("cap_C_blahut_arimoto_bits");
    }
    let grid = match a.p {
        Some(p) => vec![p],
        None => capacity::uniform_grid(a.points),
    };
    let rows = capacity::sweep(&grid, a.tol)?;
    let mut e = Emitter::new(f, &header, out);
    for r in &rows {
        let mut cells = vec![Cell::Float(r.p), Cell::Float(r.alpha_opt), Cell::Float(r.cap_c), Cell::Float(r.cap_c2)];
        if a.oracle {
            let m = capacity::matrix_rows(&ChannelSpec::new(r.p)?);
            cells.push(Cell::Float(capacity::blahut_arimoto(&m, capacity::BA_TOL, capacity::BA_MAX_ITER).0));
        }
        e.row(cells)?;
    }
    if let Some(path) = &a.plot {
        std::fs::write(path, plot::sweep_svg(&rows))?;
    }
    Ok(())
}

/// Subcommand reaching each library operation, with a sample invocation.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("alphabet::decompose", "decompose --k 4 012340"),
    ("alphabet::decompose_letters", "decompose --q 3 --k 2 2/0/0,0/2/0,0/0/2,1/1/0,1/0/1,0/1/1"),
    ("alphabet::reconstruct", "reconstruct 000010 000110 011110 010110"),
    ("alphabet::reconstruct_letters", "reconstruct --q 3 012001 012122"),
    ("alphabet::reverse", "transform --k 4 --reverse 012340"),
    ("alphabet::shift", "transform --k 4 --shift -1 012340"),
    ("balls::sub_ball_size", "ball --k 2 --spec (1,0) --size 0120"),
    ("balls::enumerate_sub_ball", "ball --k 2 --spec t:1 --enumerate 0120"),
    ("balls::in_sub_ball", "ball --k 2 --spec t:1 --contains 0110 0120"),
    ("balls::del_ball_size", "ball --k 2 --spec d:1 --size 0120"),
    ("balls::enumerate_del_ball", "ball --k 2 --spec d:(1,0) --enumerate 0120"),
    ("balls::del_in_ball_10", "ball --k 2 --spec d:(1,0) --inbound 0111 010"),
    ("counting::count_runs_weight", "count runs --n 6 --rho 3 --w 2"),
    ("counting::count_v", "count v --n 5 --w 2"),
    ("counting::vertex_set_size_10", "count vertices --n 5"),
    ("bounds::sphere_packing_upper", "bounds --kind sphere-packing --n 4 --spec t:1"),
    ("bounds::asymptotic_upper", "bounds --kind asymptotic --n 30 --spec (1,1)"),
    ("bounds::gspb_upper", "bounds --kind gspb --n 5 --spec d:(1,0)"),
    ("bounds::average_ball", "bounds --kind average-ball --n 5 --spec t:1"),
    ("bounds::aspv", "bounds --kind aspv --n 5 --spec t:1"),
    ("bounds::lower_bound", "bounds --kind lower --n 7 --spec d:(1,0) --method vt_del"),
    ("bounds::emit_bound_table", "bounds --table table4 --n-max 10"),
    ("bounds::lemmas", "lemma double-harmonic --n 6"),
    ("substitution::c1", "encode --construction c1 --n 7 5"),
    ("substitution::c2", "encode --construction c2 --n 4 --list"),
    ("substitution::lee", "decode --construction lee --k 4 --n 3 --a 0 000 000 000 000"),
    ("deletion::c3", "encode --construction c3 --n 4 --list"),
    ("deletion::c4", "encode --construction c4 0120"),
    ("deletion::c5", "verify --construction c5 --n 4"),
    ("deletion::c6", "verify --construction c6 --n 3"),
    ("oracle::optimal_code_size", "search-optimal --n 3 --spec (1,0)"),
    ("oracle::greedy_code", "search-optimal --n 3 --spec t:1 --greedy"),
    ("oracle::optimal_binary_single_error", "search-optimal --binary --n 5"),
    ("oracle::exhaustive_decode_check", "verify --construction lee --k 4 --n 3"),
    ("oracle::check_fractional_transversal", "verify --transversal total-one --n 3 --spec t:1"),
    ("capacity::optimize_alpha", "capacity --p 0.1"),
    ("capacity::sweep", "capacity --sweep --points 5 --oracle"),
];
