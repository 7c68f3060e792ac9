//! Command-line front end: argument parsing, dispatch to the library, and
//! output in JSON or aligned text.

pub mod output;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use charseq::liaison::{
    abs_from_rel, add_section, genus_acm_curve, genus_from_rel, halphen_bound, link,
    minimal_delta_seq, phi_rel, rel_degree, rel_from_abs, split_on_gap,
};
use charseq::linsys::{classify_equal_phi, classify_maximal, r_alpha};
use charseq::macaulay::{is_zero_sequence, macaulay_next, macaulay_rep, GrowthBoundary};
use charseq::pointlab::curve::{random_points_on_curve, section_points};
use charseq::pointlab::io::{format_points, parse_curve, parse_points};
use charseq::pointlab::measure::{
    dim_linear_system, measure_abs, measure_abs_within, measure_rcs, measure_rcs_within,
    phi_plane_curve, phi_points,
};
use charseq::pointlab::{monomial_basis, PlaneCurve, PointGroup};
use charseq::realize::{
    add_case, can_add_at_level, conjecture_scan, filtration_points, is_admissible, realize,
    RealizeOptions,
};
use charseq::seqcalc::{
    aligned_bound, bound_codim2, charseq_from_phi, ci_charseq, is_gorenstein_symmetric,
    phi_from_charseq, separation_index, seq_included, validate_abs,
};
use charseq::verify::{run_all, Scale};
use charseq::{CharSeq, HilbertFn, RelCharSeq};

use output::Out;

/// Environment variable that overrides `--modulus`.
pub const MODULUS_ENV: &str = "CHARSEQ_MODULUS";

#[derive(Debug, Parser)]
#[command(name = "charseq", version, about = "Characteristic sequences of ACM schemes and point groups on plane curves")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Expected modulus of input files; overridden by CHARSEQ_MODULUS.
    #[arg(long, global = true)]
    pub modulus: Option<u64>,
    /// Seed for every randomized operation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Highest degree scanned when measuring Hilbert functions of point groups.
    #[arg(long, global = true)]
    pub max_degree_scan: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

// Aliases keep clap from treating the lists as repeated flags.
type IntList = Vec<i64>;
type NatList = Vec<u64>;
type DegreeList = Vec<u32>;

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| format!("bad entry {:?} in {s:?}", t.trim())))
        .collect()
}

fn ints(s: &str) -> Result<IntList, String> {
    parse_list(s)
}

fn naturals(s: &str) -> Result<NatList, String> {
    parse_list(s)
}

fn degrees(s: &str) -> Result<DegreeList, String> {
    parse_list(s)
}

/// An absolute sequence given by flags.
#[derive(Debug, Clone, Args)]
pub struct SeqArgs {
    /// Comma-joined entries, e.g. "0,1,1,2".
    #[arg(long, value_parser = ints, allow_hyphen_values = true)]
    pub seq: Option<IntList>,
    /// Dimension of the affine cone (1 for point groups).
    #[arg(long, default_value_t = 1)]
    pub cone_dim: u32,
    /// Codimension of the scheme.
    #[arg(long, default_value_t = 2)]
    pub codim: u32,
}

/// A relative sequence and its ambient.
#[derive(Debug, Clone, Args)]
pub struct RelArgs {
    /// Comma-joined relative entries.
    #[arg(long, value_parser = ints, allow_hyphen_values = true)]
    pub rel: Option<IntList>,
    /// Ambient sequence; defaults to the plane curve "0,1,...,d-1".
    #[arg(long, value_parser = ints)]
    pub ambient: Option<IntList>,
    #[arg(long, default_value_t = 2)]
    pub ambient_cone_dim: u32,
    #[arg(long, default_value_t = 1)]
    pub ambient_codim: u32,
}

/// Input files of the geometry engine.
#[derive(Debug, Clone, Args)]
pub struct FileArgs {
    /// Curve file: "p=<modulus>", optional "irreducible=", then "e1 e2 e3 c" terms.
    #[arg(long)]
    pub curve: Option<PathBuf>,
    /// Point file: "p=<modulus>" then "x y z" per line.
    #[arg(long)]
    pub points: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Macaulay representations, the growth bound and 0-sequences.
    Macaulay {
        #[arg(long)]
        c: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        /// Print the bound c^<d> instead of the representation.
        #[arg(long)]
        next: bool,
        /// Test this sequence for Macaulay growth instead.
        #[arg(long, value_parser = naturals, conflicts_with_all = ["c", "d", "next"])]
        widths: Option<NatList>,
        /// Degree of the first width.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        /// No bound on the degree-0 entry.
        #[arg(long)]
        raw: bool,
    },
    /// Calculus of absolute and relative sequences.
    Charseq {
        #[arg(long, value_enum)]
        op: CharseqOp,
        #[command(flatten)]
        seq: SeqArgs,
        #[command(flatten)]
        rel: RelArgs,
        /// Degree at which a Hilbert function is evaluated.
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
        /// Comma-joined Hilbert function values from degree 0.
        #[arg(long, value_parser = naturals)]
        values: Option<NatList>,
        /// Candidate containing sequence for "included".
        #[arg(long = "super", value_parser = ints)]
        sup: Option<IntList>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        level: Option<i64>,
    },
    /// Sequence of a complete intersection.
    Ci {
        #[arg(long, value_parser = degrees)]
        degrees: DegreeList,
        #[arg(long, default_value_t = 1)]
        cone_dim: u32,
    },
    /// Measurements on point groups and plane curves.
    Rcs {
        #[arg(long, value_enum, default_value_t = RcsOp::Measure)]
        op: RcsOp,
        #[command(flatten)]
        files: FileArgs,
        /// Curve cutting the section for "section".
        #[arg(long)]
        cutter: Option<PathBuf>,
        /// Accept sections that are not totally split and transverse.
        #[arg(long)]
        allow_nontransverse: bool,
        /// Also draw singular points of the curve.
        #[arg(long)]
        allow_singular: bool,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        count: Option<usize>,
        /// Also write the resulting points to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sequence of the residual in a complete intersection with a degree-s curve.
    Link {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long)]
        s: i64,
    },
    /// Sequence after adding a disjoint degree-s section.
    AddSection {
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long)]
        s: i64,
    },
    /// Splitting at the first gap.
    Split {
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Minimal sequence of a given degree on a plane curve of degree d.
    Minimal {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        alpha: i64,
    },
    /// Arithmetic genus of an ACM curve from its hyperplane section.
    Genus {
        #[command(flatten)]
        seq: SeqArgs,
        #[command(flatten)]
        rel: RelArgs,
        /// Degree of the section; defaults to the number of entries.
        #[arg(long)]
        alpha: Option<i64>,
    },
    /// Maximal genus of a degree-alpha curve on a degree-d surface.
    Halphen {
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        d: i64,
    },
    /// Dimension of a complete linear system, measured or maximal.
    Dim {
        #[arg(long, value_enum, default_value_t = DimOp::System)]
        op: DimOp,
        #[command(flatten)]
        files: FileArgs,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        alpha: Option<i64>,
    },
    /// Classification of extremal cases.
    Classify {
        #[arg(long, value_enum, default_value_t = ClassifyOp::Maximal)]
        op: ClassifyOp,
        #[command(flatten)]
        files: FileArgs,
        #[command(flatten)]
        rel: RelArgs,
        #[arg(long)]
        i: Option<i64>,
    },
    /// A point group on the curve with the target relative sequence.
    Realize {
        /// Curve file.
        #[arg(long)]
        curve: PathBuf,
        /// Relative sequence to realize, e.g. "2,3,3,4".
        #[arg(long, value_parser = ints)]
        target: IntList,
        /// Also write the points to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Witnesses tried per step before backtracking.
        #[arg(long, default_value_t = RealizeOptions::default().candidate_cap)]
        candidate_cap: usize,
        /// Total search nodes across one call.
        #[arg(long, default_value_t = RealizeOptions::default().node_budget)]
        node_budget: usize,
        /// Distinct base configurations tried.
        #[arg(long, default_value_t = RealizeOptions::default().base_attempts)]
        base_attempts: usize,
    },
    /// The filtration Y_t and witnesses for box additions.
    Filtration {
        #[arg(long, value_enum, default_value_t = FiltrationOp::Points)]
        op: FiltrationOp,
        #[command(flatten)]
        files: FileArgs,
        #[arg(long)]
        t: Option<i64>,
        #[arg(long)]
        level: Option<i64>,
    },
    /// Domination and connexity of phi against degree-s sections.
    ConjectureScan {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        s: i64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Runs the invariant corpus and prints a pass/fail table.
    Verify {
        /// Smaller corpus.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharseqOp {
    Phi,
    FromPhi,
    Validate,
    BoundCodim2,
    AlignedBound,
    Separation,
    Gorenstein,
    Included,
    RelDegree,
    ToAbs,
    FromAbs,
    PhiRel,
    Admissible,
    AddCase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RcsOp {
    Measure,
    Abs,
    PhiPoints,
    PlanePhi,
    Monomials,
    Sample,
    Section,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimOp {
    System,
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassifyOp {
    Maximal,
    EqualPhi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FiltrationOp {
    Points,
    Witness,
}

/// One library operation and an invocation reaching it.
pub struct Route {
    pub op: &'static str,
    /// Arguments after the program name. `{curve}`, `{points}` and
    /// `{cutter}` stand for input files.
    pub argv: &'static [&'static str],
}

/// Every library operation reachable from the command line.
pub const ROUTES: &[Route] = &[
    Route { op: "macaulay::macaulay_rep", argv: &["macaulay", "--c", "5", "--d", "2"] },
    Route { op: "macaulay::macaulay_next", argv: &["macaulay", "--c", "5", "--d", "2", "--next"] },
    Route { op: "macaulay::is_zero_sequence", argv: &["macaulay", "--widths", "1,2,3,4"] },
    Route { op: "seqcalc::phi_from_charseq", argv: &["charseq", "--op", "phi", "--seq", "0,1,1,2", "--l", "2"] },
    Route { op: "seqcalc::charseq_from_phi", argv: &["charseq", "--op", "from-phi", "--values", "1,3,4,4,4"] },
    Route { op: "seqcalc::validate_abs", argv: &["charseq", "--op", "validate", "--seq", "0,1,1,2"] },
    Route { op: "seqcalc::bound_codim2", argv: &["charseq", "--op", "bound-codim2", "--seq", "0,1,1,2", "--cone-dim", "2"] },
    Route { op: "seqcalc::aligned_bound", argv: &["charseq", "--op", "aligned-bound", "--d", "6", "--r", "3"] },
    Route { op: "seqcalc::separation_index", argv: &["charseq", "--op", "separation", "--seq", "0,1,1,2"] },
    Route { op: "seqcalc::ci_charseq", argv: &["ci", "--degrees", "2,3"] },
    Route { op: "seqcalc::is_gorenstein_symmetric", argv: &["charseq", "--op", "gorenstein", "--seq", "0,1,1,2"] },
    Route { op: "seqcalc::seq_included", argv: &["charseq", "--op", "included", "--seq", "0,1", "--super", "0,1,1,2"] },
    Route { op: "liaison::rel_degree", argv: &["charseq", "--op", "rel-degree", "--rel", "2,2,3,3"] },
    Route { op: "liaison::abs_from_rel", argv: &["charseq", "--op", "to-abs", "--rel", "2,2,3,3"] },
    Route { op: "liaison::rel_from_abs", argv: &["charseq", "--op", "from-abs", "--ambient", "0,1,2,3", "--seq", "0,1,1,2,2,2,3,3"] },
    Route { op: "liaison::link", argv: &["link", "--ambient", "0,1,2,3", "--rel", "2,2,3,3", "--s", "2"] },
    Route { op: "liaison::add_section", argv: &["add-section", "--rel", "0,1,2,3", "--s", "1"] },
    Route { op: "liaison::split_on_gap", argv: &["split", "--rel", "1,1,3,4"] },
    Route { op: "liaison::minimal_delta_seq", argv: &["minimal", "--d", "6", "--alpha", "13"] },
    Route { op: "liaison::phi_rel", argv: &["charseq", "--op", "phi-rel", "--rel", "2,2,3,3", "--l", "2"] },
    Route { op: "liaison::genus_acm_curve", argv: &["genus", "--seq", "0,1,1,2"] },
    Route { op: "liaison::halphen_bound", argv: &["halphen", "--alpha", "13", "--d", "6"] },
    Route { op: "pointlab::monomial_basis", argv: &["rcs", "--op", "monomials", "--l", "2"] },
    Route { op: "pointlab::phi_points", argv: &["rcs", "--op", "phi-points", "--points", "{points}", "--l", "1"] },
    Route { op: "pointlab::phi_plane_curve", argv: &["rcs", "--op", "plane-phi", "--d", "4", "--l", "4"] },
    Route { op: "pointlab::measure_rcs", argv: &["rcs", "--curve", "{curve}", "--points", "{points}"] },
    Route { op: "pointlab::measure_abs", argv: &["rcs", "--op", "abs", "--points", "{points}"] },
    Route { op: "pointlab::random_points_on_curve", argv: &["rcs", "--op", "sample", "--curve", "{curve}", "--count", "5"] },
    Route { op: "pointlab::section_points", argv: &["rcs", "--op", "section", "--curve", "{curve}", "--cutter", "{cutter}"] },
    Route { op: "pointlab::dim_linear_system", argv: &["dim", "--curve", "{curve}", "--points", "{points}"] },
    Route { op: "linsys::r_alpha", argv: &["dim", "--op", "bound", "--d", "6", "--alpha", "13"] },
    Route { op: "linsys::classify_equal_phi", argv: &["classify", "--op", "equal-phi", "--rel", "3,3,4,5,6,7", "--i", "4"] },
    Route { op: "linsys::classify_maximal", argv: &["classify", "--curve", "{curve}", "--points", "{points}"] },
    Route { op: "realize::is_admissible", argv: &["charseq", "--op", "admissible", "--rel", "1,2,2,3"] },
    Route { op: "realize::add_case", argv: &["charseq", "--op", "add-case", "--rel", "0,1,2,3", "--level", "1"] },
    Route { op: "realize::filtration_points", argv: &["filtration", "--curve", "{curve}", "--points", "{points}", "--t", "1"] },
    Route { op: "realize::can_add_at_level", argv: &["filtration", "--op", "witness", "--curve", "{curve}", "--points", "{points}", "--level", "2"] },
    Route { op: "realize::realize", argv: &["realize", "--curve", "{curve}", "--target", "2,2,3,3"] },
    Route { op: "realize::conjecture_scan", argv: &["conjecture-scan", "--curve", "{curve}", "--s", "1", "--trials", "5"] },
    Route { op: "verify::run_all", argv: &["verify", "--quick"] },
];

/// Failure of a command, mapped onto the exit code.
#[derive(Debug)]
pub enum CliError {
    /// Missing or inconsistent flags: exit code 2.
    Usage(String),
    /// Errors from the library or from input files: exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<charseq::Error> for CliError {
    fn from(e: charseq::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn need<T>(v: Option<T>, flag: &str, op: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("{op} expects {flag}")))
}

/// Settings shared by every command.
struct Ctx {
    modulus: Option<u64>,
    seed: u64,
    window: Option<i64>,
}

impl Ctx {
    fn read(&self, path: &Path) -> CliResult<String> {
        fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))
    }

    fn curve(&self, path: &Path) -> CliResult<PlaneCurve> {
        Ok(parse_curve(&self.read(path)?, self.modulus)?)
    }

    fn points(&self, path: &Path) -> CliResult<PointGroup> {
        Ok(parse_points(&self.read(path)?, self.modulus)?)
    }

    fn files(&self, f: &FileArgs, op: &str) -> CliResult<(PlaneCurve, PointGroup)> {
        let curve = need(f.curve.as_deref(), "--curve", op)?;
        let points = need(f.points.as_deref(), "--points", op)?;
        Ok((self.curve(curve)?, self.points(points)?))
    }

    fn measure(&self, x: &PlaneCurve, y: &PointGroup) -> CliResult<RelCharSeq> {
        Ok(match self.window {
            Some(w) => measure_rcs_within(x, y, w)?,
            None => measure_rcs(x, y)?,
        })
    }
}

fn write_points(path: Option<&Path>, y: &PointGroup) -> CliResult<()> {
    if let Some(p) = path {
        fs::write(p, format_points(y))
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn abs_seq(a: &SeqArgs, op: &str) -> CliResult<CharSeq> {
    let entries = need(a.seq.clone(), "--seq", op)?;
    Ok(CharSeq::new(entries, a.cone_dim, a.codim)?)
}

fn rel_seq(a: &RelArgs, op: &str) -> CliResult<RelCharSeq> {
    let entries = need(a.rel.clone(), "--rel", op)?;
    let ambient = match &a.ambient {
        Some(m) => CharSeq::new(m.clone(), a.ambient_cone_dim, a.ambient_codim)?,
        None => CharSeq {
            entries: (0..entries.len() as i64).collect(),
            cone_dim: a.ambient_cone_dim,
            codim: a.ambient_codim,
        },
    };
    Ok(RelCharSeq::new(entries, ambient)?)
}

fn seq_out(op: &'static str, s: &CharSeq) -> Out {
    Out::with_text(op, s, s.to_string())
}

fn rel_out(op: &'static str, r: &RelCharSeq) -> Out {
    Out::with_text(op, r, r.to_string())
}

fn points_out(op: &'static str, y: &PointGroup) -> Out {
    Out::with_text(op, y, format_points(y).trim_end().to_string())
}

fn macaulay_cmd(
    c: Option<i64>,
    d: Option<i64>,
    next: bool,
    widths: Option<Vec<u64>>,
    start: i64,
    raw: bool,
) -> CliResult<Out> {
    if let Some(w) = widths {
        let boundary = if raw { GrowthBoundary::Raw } else { GrowthBoundary::Cone };
        let check = is_zero_sequence(&w, start, boundary)?;
        return Ok(Out::new("macaulay::is_zero_sequence", &check));
    }
    let c = need(c, "--c", "macaulay")?;
    let d = need(d, "--d", "macaulay")?;
    if next {
        let v = macaulay_next(c, d)?.to_string();
        // Values beyond u64 are emitted as decimal strings.
        let value = v.parse::<u64>().map_or_else(|_| json!(v), |n| json!(n));
        return Ok(Out::with_text("macaulay::macaulay_next", &value, v));
    }
    let rep = macaulay_rep(c, d)?;
    let terms: Vec<String> = rep
        .terms()
        .iter()
        .map(|t| format!("C({},{})", t.top, t.bottom))
        .collect();
    let text = format!("{} = {}", rep.value(), terms.join(" + "));
    Ok(Out::with_text("macaulay::macaulay_rep", &rep, text))
}

#[allow(clippy::too_many_arguments)]
fn charseq_cmd(
    op: CharseqOp,
    seq: &SeqArgs,
    rel: &RelArgs,
    l: Option<i64>,
    values: Option<Vec<u64>>,
    sup: Option<Vec<i64>>,
    d: Option<i64>,
    r: Option<i64>,
    level: Option<i64>,
) -> CliResult<Out> {
    let name = "charseq";
    Ok(match op {
        CharseqOp::Phi => {
            let s = abs_seq(seq, "--op phi")?;
            let l = need(l, "--l", "--op phi")?;
            Out::new("seqcalc::phi_from_charseq", &phi_from_charseq(&s, l))
        }
        CharseqOp::FromPhi => {
            let v = need(values, "--values", "--op from-phi")?;
            seq_out("seqcalc::charseq_from_phi", &charseq_from_phi(&HilbertFn::new(v, seq.cone_dim))?)
        }
        CharseqOp::Validate => {
            let report = validate_abs(&abs_seq(seq, "--op validate")?);
            let text = report
                .checks
                .iter()
                .map(|c| {
                    let status = serde_json::to_value(c.status).expect("status serializes");
                    format!("{:<15} {:<11} {}", c.name, output::render(&status), c.detail)
                        .trim_end()
                        .to_string()
                })
                .collect::<Vec<_>>()
                .join("\n");
            Out::with_text("seqcalc::validate_abs", &json!({"passed": report.passed(), "checks": report.checks}), text)
        }
        CharseqOp::BoundCodim2 => {
            Out::new("seqcalc::bound_codim2", &bound_codim2(&abs_seq(seq, "--op bound-codim2")?)?)
        }
        CharseqOp::AlignedBound => {
            let d = need(d, "--d", "--op aligned-bound")?;
            let r = need(r, "--r", "--op aligned-bound")?;
            Out::new("seqcalc::aligned_bound", &aligned_bound(d, r)?)
        }
        CharseqOp::Separation => {
            Out::new("seqcalc::separation_index", &separation_index(&abs_seq(seq, "--op separation")?)?)
        }
        CharseqOp::Gorenstein => Out::new(
            "seqcalc::is_gorenstein_symmetric",
            &is_gorenstein_symmetric(&abs_seq(seq, "--op gorenstein")?),
        ),
        CharseqOp::Included => {
            let sub = abs_seq(seq, "--op included")?;
            let sup = CharSeq::new(need(sup, "--super", "--op included")?, seq.cone_dim, seq.codim)?;
            Out::new("seqcalc::seq_included", &seq_included(&sub, &sup)?)
        }
        CharseqOp::RelDegree => Out::new("liaison::rel_degree", &rel_degree(&rel_seq(rel, "--op rel-degree")?)),
        CharseqOp::ToAbs => seq_out("liaison::abs_from_rel", &abs_from_rel(&rel_seq(rel, "--op to-abs")?)?),
        CharseqOp::FromAbs => {
            let ambient = need(rel.ambient.clone(), "--ambient", "--op from-abs")?;
            let ambient = CharSeq::new(ambient, rel.ambient_cone_dim, rel.ambient_codim)?;
            let y = abs_seq(seq, "--op from-abs")?;
            rel_out("liaison::rel_from_abs", &rel_from_abs(&ambient, &y)?)
        }
        CharseqOp::PhiRel => {
            let r = rel_seq(rel, "--op phi-rel")?;
            Out::new("liaison::phi_rel", &phi_rel(&r, need(l, "--l", "--op phi-rel")?)?)
        }
        CharseqOp::Admissible => {
            let e = need(rel.rel.clone(), "--rel", "--op admissible")?;
            Out::new("realize::is_admissible", &is_admissible(&e))
        }
        CharseqOp::AddCase => {
            let r = rel_seq(rel, "--op add-case")?;
            let level = need(level, "--level", "--op add-case")?;
            rel_out("realize::add_case", &add_case(&r, level)?)
        }
    })
    .map_err(|e: CliError| match e {
        CliError::Usage(m) => CliError::Usage(format!("{name} {m}")),
        other => other,
    })
}

#[allow(clippy::too_many_arguments)]
fn rcs_cmd(
    ctx: &Ctx,
    op: RcsOp,
    files: &FileArgs,
    cutter: Option<&Path>,
    allow_nontransverse: bool,
    allow_singular: bool,
    l: Option<i64>,
    d: Option<i64>,
    count: Option<usize>,
    out: Option<&Path>,
) -> CliResult<Out> {
    Ok(match op {
        RcsOp::Measure => {
            let (x, y) = ctx.files(files, "rcs")?;
            rel_out("pointlab::measure_rcs", &ctx.measure(&x, &y)?)
        }
        RcsOp::Abs => {
            let y = ctx.points(need(files.points.as_deref(), "--points", "rcs --op abs")?)?;
            let s = match ctx.window {
                Some(w) => measure_abs_within(&y, w)?,
                None => measure_abs(&y)?,
            };
            seq_out("pointlab::measure_abs", &s)
        }
        RcsOp::PhiPoints => {
            let y = ctx.points(need(files.points.as_deref(), "--points", "rcs --op phi-points")?)?;
            Out::new("pointlab::phi_points", &phi_points(&y, need(l, "--l", "rcs --op phi-points")?))
        }
        RcsOp::PlanePhi => {
            let d = need(d, "--d", "rcs --op plane-phi")?;
            Out::new("pointlab::phi_plane_curve", &phi_plane_curve(d, need(l, "--l", "rcs --op plane-phi")?))
        }
        RcsOp::Monomials => {
            let l = need(l, "--l", "rcs --op monomials")?;
            let l = u32::try_from(l).map_err(|_| CliError::Usage("--l must be non-negative".into()))?;
            let basis = monomial_basis(l);
            let text = basis
                .iter()
                .map(|e| format!("{} {} {}", e[0], e[1], e[2]))
                .collect::<Vec<_>>()
                .join("\n");
            Out::with_text("pointlab::monomial_basis", &basis, text)
        }
        RcsOp::Sample => {
            let x = ctx.curve(need(files.curve.as_deref(), "--curve", "rcs --op sample")?)?;
            let n = need(count, "--count", "rcs --op sample")?;
            let y = random_points_on_curve(&x, n, ctx.seed, !allow_singular)?;
            write_points(out, &y)?;
            points_out("pointlab::random_points_on_curve", &y)
        }
        RcsOp::Section => {
            let x = ctx.curve(need(files.curve.as_deref(), "--curve", "rcs --op section")?)?;
            let h = ctx.curve(need(cutter, "--cutter", "rcs --op section")?)?;
            let y = section_points(&x, h.form(), !allow_nontransverse)?;
            write_points(out, &y)?;
            points_out("pointlab::section_points", &y)
        }
    })
}

/// Runs a parsed command line; `env_modulus` is the value of [`MODULUS_ENV`].
///
/// Returns the text to print on success.
pub fn run_cli(cli: Cli, env_modulus: Option<&str>) -> CliResult<String> {
    let modulus = match env_modulus {
        Some(v) => Some(v.trim().parse::<u64>().map_err(|_| {
            CliError::Usage(format!("{MODULUS_ENV} must be an integer, got {v:?}"))
        })?),
        None => cli.modulus,
    };
    let ctx = Ctx {
        modulus,
        seed: cli.seed,
        window: cli.max_degree_scan,
    };
    let out = dispatch(&ctx, cli.command)?;
    Ok(match cli.format {
        Format::Json => out.to_json(),
        Format::Table => out.text,
    })
}

fn dispatch(ctx: &Ctx, command: Command) -> CliResult<Out> {
    Ok(match command {
        Command::Macaulay { c, d, next, widths, start, raw } => macaulay_cmd(c, d, next, widths, start, raw)?,
        Command::Charseq { op, seq, rel, l, values, sup, d, r, level } => {
            charseq_cmd(op, &seq, &rel, l, values, sup, d, r, level)?
        }
        Command::Ci { degrees, cone_dim } => seq_out("seqcalc::ci_charseq", &ci_charseq(&degrees, cone_dim)?),
        Command::Rcs { op, files, cutter, allow_nontransverse, allow_singular, l, d, count, out } => rcs_cmd(
            ctx,
            op,
            &files,
            cutter.as_deref(),
            allow_nontransverse,
            allow_singular,
            l,
            d,
            count,
            out.as_deref(),
        )?,
        Command::Link { rel, s } => rel_out("liaison::link", &link(&rel_seq(&rel, "link")?, s)?),
        Command::AddSection { rel, s } => {
            rel_out("liaison::add_section", &add_section(&rel_seq(&rel, "add-section")?, s)?)
        }
        Command::Split { rel } => {
            let split = split_on_gap(&rel_seq(&rel, "split")?);
            let text = match &split {
                Some(g) => format!("{} | {} (shift {})", g.inner, g.outer, g.shift),
                None => "none".into(),
            };
            Out::with_text("liaison::split_on_gap", &split, text)
        }
        Command::Minimal { d, alpha } => rel_out("liaison::minimal_delta_seq", &minimal_delta_seq(d, alpha)?),
        Command::Genus { seq, rel, alpha } => {
            let g = match (&seq.seq, &rel.rel) {
                (Some(_), None) => {
                    let s = abs_seq(&seq, "genus")?;
                    let alpha = alpha.unwrap_or(s.degree() as i64);
                    genus_acm_curve(&s, alpha)?
                }
                (None, Some(_)) => genus_from_rel(&rel_seq(&rel, "genus")?)?,
                _ => return Err(CliError::Usage("genus expects exactly one of --seq and --rel".into())),
            };
            Out::new("liaison::genus_acm_curve", &g)
        }
        Command::Halphen { alpha, d } => Out::new("liaison::halphen_bound", &halphen_bound(alpha, d)?),
        Command::Dim { op, files, d, alpha } => match op {
            DimOp::System => {
                let (x, y) = ctx.files(&files, "dim")?;
                Out::new("pointlab::dim_linear_system", &dim_linear_system(&x, &y)?)
            }
            DimOp::Bound => {
                let d = need(d, "--d", "dim --op bound")?;
                let alpha = need(alpha, "--alpha", "dim --op bound")?;
                Out::new("linsys::r_alpha", &r_alpha(d, alpha)?)
            }
        },
        Command::Classify { op, files, rel, i } => match op {
            ClassifyOp::Maximal => {
                let (x, y) = ctx.files(&files, "classify")?;
                Out::new("linsys::classify_maximal", &classify_maximal(&x, &y)?)
            }
            ClassifyOp::EqualPhi => {
                let r = rel_seq(&rel, "classify --op equal-phi")?;
                let i = need(i, "--i", "classify --op equal-phi")?;
                Out::new("linsys::classify_equal_phi", &classify_equal_phi(&r, i)?)
            }
        },
        Command::Realize { curve, target, out, candidate_cap, node_budget, base_attempts } => {
            let x = ctx.curve(&curve)?;
            let opts = RealizeOptions { candidate_cap, node_budget, base_attempts };
            let y = realize(&x, &target, ctx.seed, None, opts)?.sorted();
            write_points(out.as_deref(), &y)?;
            points_out("realize::realize", &y)
        }
        Command::Filtration { op, files, t, level } => {
            let (x, y) = ctx.files(&files, "filtration")?;
            match op {
                FiltrationOp::Points => {
                    let t = need(t, "--t", "filtration")?;
                    points_out("realize::filtration_points", &filtration_points(&x, &y, t, None)?.sorted())
                }
                FiltrationOp::Witness => {
                    let level = need(level, "--level", "filtration --op witness")?;
                    let q = can_add_at_level(&x, &y, level, None)?;
                    let text = q.map_or_else(|| "none".into(), |q| q.to_string());
                    Out::with_text("realize::can_add_at_level", &q, text)
                }
            }
        }
        Command::ConjectureScan { curve, s, trials } => {
            let x = ctx.curve(&curve)?;
            let report = conjecture_scan(&x, s, trials, ctx.seed)?;
            let text = format!(
                "d={} s={} trials={} violations={}",
                report.d,
                report.s,
                report.trials.len(),
                report.violations
            );
            Out::with_text("realize::conjecture_scan", &report, text)
        }
        Command::Verify { quick } => {
            let reports = run_all(if quick { Scale::Quick } else { Scale::Full });
            let text = reports
                .iter()
                .map(|r| {
                    format!(
                        "{:>2}  {:<40}  {}  {} cases, {} failed",
                        r.id,
                        r.name,
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.cases,
                        r.failed
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let out = Out::with_text("verify::run_all", &reports, text);
            if failed > 0 {
                return Err(CliError::Domain(format!(
                    "{}\n{failed} criteria failed",
                    out.to_json()
                )));
            }
            out
        }
    })
}
